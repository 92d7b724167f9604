//! From a one-variable automorphism `ā` of `(k[z]/(p))[x]` with inverse `b̄`,
//! build the `k[z]`-automorphism `F = (f1, f2)` of `k[z][x, y]` and its
//! inverse `G = (g1, g2)`:
//!
//! ```text
//! f1 = p y + a(x)          p f2 = b(f1) - x
//! g1 = b(x) - p y          p g2 = x - a(g1)
//! ```

use thiserror::Error;

use crate::automap::{verify_inverse, PolyMap};
use crate::modring::{check_inverse_pair, invert_mod_p, reduce_poly_mod_p, ModError, ZPoly, ZXPoly};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("a and b are not inverse modulo p; nonzero remainder {remainder}")]
    CongruenceFailed { remainder: Polynomial },
    #[error(transparent)]
    Mod(#[from] ModError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionInput {
    p: ZPoly,
    a: ZXPoly,
    b: ZXPoly,
}

impl ConstructionInput {
    /// Validates a caller-supplied inverse `b`; it is used verbatim.
    pub fn new(p: ZPoly, a: ZXPoly, b: ZXPoly) -> Result<Self, ConstructError> {
        if !check_inverse_pair(&a, &b, &p)? {
            let x = Polynomial::x();
            let mut remainder = reduce_poly_mod_p(&(&a.compose(b.as_poly()) - &x), &p)?;
            if remainder.is_zero() {
                remainder = reduce_poly_mod_p(&(&b.compose(a.as_poly()) - &x), &p)?;
            }
            return Err(ConstructError::CongruenceFailed { remainder });
        }
        Ok(ConstructionInput { p, a, b })
    }

    /// Computes `b` with [`invert_mod_p`].
    pub fn with_computed_inverse(p: ZPoly, a: ZXPoly) -> Result<Self, ConstructError> {
        let b = invert_mod_p(&a, &p)?;
        Ok(ConstructionInput { p, a, b })
    }

    /// Uses `b` when given, otherwise computes it.
    pub fn from_parts(p: ZPoly, a: ZXPoly, b: Option<ZXPoly>) -> Result<Self, ConstructError> {
        match b {
            Some(b) => Self::new(p, a, b),
            None => Self::with_computed_inverse(p, a),
        }
    }

    pub fn p(&self) -> &ZPoly {
        &self.p
    }

    pub fn a(&self) -> &ZXPoly {
        &self.a
    }

    pub fn b(&self) -> &ZXPoly {
        &self.b
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub f1: Polynomial,
    pub f2: Polynomial,
    pub g1: Polynomial,
    pub g2: Polynomial,
    pub input: ConstructionInput,
}

impl ConstructionResult {
    pub fn forward(&self) -> PolyMap {
        PolyMap::pair(self.f1.clone(), self.f2.clone())
    }

    pub fn inverse(&self) -> PolyMap {
        PolyMap::pair(self.g1.clone(), self.g2.clone())
    }

    /// Re-checks every defining identity and the inverse property exactly.
    pub fn check_invariants(&self) -> bool {
        let p = self.input.p.as_poly();
        let (a, b) = (&self.input.a, &self.input.b);
        let x = Polynomial::x();
        let py = p * &Polynomial::y();
        self.f1 == &py + a.as_poly()
            && p * &self.f2 == &b.compose(&self.f1) - &x
            && self.g1 == b.as_poly() - &py
            && p * &self.g2 == &x - &a.compose(&self.g1)
            && verify_inverse(&self.forward(), &self.inverse()).unwrap_or(false)
    }
}

fn divide_by_p(num: &Polynomial, p: &ZPoly) -> Result<Polynomial, ConstructError> {
    num.exact_div(p.as_poly()).map_err(|_| ConstructError::CongruenceFailed {
        remainder: reduce_poly_mod_p(num, p).unwrap_or_else(|_| num.clone()),
    })
}

pub fn build_pair(input: ConstructionInput) -> Result<ConstructionResult, ConstructError> {
    let p = input.p.as_poly();
    let x = Polynomial::x();
    let py = p * &Polynomial::y();

    let f1 = &py + input.a.as_poly();
    let f2 = divide_by_p(&(&input.b.compose(&f1) - &x), &input.p)?;
    let g1 = input.b.as_poly() - &py;
    let g2 = divide_by_p(&(&x - &input.a.compose(&g1)), &input.p)?;

    Ok(ConstructionResult { f1, f2, g1, g2, input })
}

/// `(f1, f2) -> (f1, f2, z)`.
pub fn embed_3var(f: &PolyMap) -> Result<PolyMap, crate::automap::MapError> {
    f.embed_3var()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_poly;

    fn zp(s: &str) -> ZPoly {
        ZPoly::new(parse_poly(s).unwrap()).unwrap()
    }
    fn zx(s: &str) -> ZXPoly {
        ZXPoly::new(parse_poly(s).unwrap()).unwrap()
    }
    fn poly(s: &str) -> Polynomial {
        parse_poly(s).unwrap()
    }

    #[test]
    fn nagata_instance() {
        let input = ConstructionInput::new(zp("z^2"), zx("x + z*x^2"), zx("x - z*x^2")).unwrap();
        let r = build_pair(input).unwrap();
        assert_eq!(r.f1, poly("z^2*y + x + z*x^2"));
        assert_eq!(r.f2, poly("y - 2*x^3 - z*x^4 - 2*z*x*y - 2*z^2*x^2*y - z^3*y^2"));
        assert_eq!(r.g1, poly("x - z*x^2 - z^2*y"));
        assert_eq!(r.g2, poly("y + 2*x^3 - z*x^4 + 2*z*x*y - 2*z^2*x^2*y - z^3*y^2"));
        assert!(r.check_invariants());
    }

    #[test]
    fn identity_mod_p() {
        let r = build_pair(ConstructionInput::new(zp("z"), zx("x"), zx("x")).unwrap()).unwrap();
        assert_eq!(r.f1, poly("z*y + x"));
        assert_eq!(r.f2, poly("y"));
        assert_eq!(r.inverse(), PolyMap::pair(poly("x - z*y"), poly("y")));
        assert!(r.check_invariants());
    }

    #[test]
    fn computed_inverse_matches() {
        let input = ConstructionInput::with_computed_inverse(zp("z^2"), zx("x + z*x^2")).unwrap();
        assert_eq!(input.b(), &zx("x - z*x^2"));
    }

    #[test]
    fn supplied_inverse_used_verbatim() {
        // differs from the reduced inverse by a multiple of p
        let b = zx("x - z*x^2 + z^2*x^5");
        let input = ConstructionInput::new(zp("z^2"), zx("x + z*x^2"), b.clone()).unwrap();
        assert_eq!(input.b(), &b);
        assert!(build_pair(input).unwrap().check_invariants());
    }

    #[test]
    fn bad_pair_reports_remainder() {
        let err = ConstructionInput::new(zp("z^2"), zx("x + z*x^2"), zx("x")).unwrap_err();
        assert_eq!(err, ConstructError::CongruenceFailed { remainder: poly("z*x^2") });
    }

    #[test]
    fn unchecked_input_fails_at_division() {
        let input = ConstructionInput { p: zp("z^2"), a: zx("x + z*x^2"), b: zx("x") };
        assert!(matches!(build_pair(input), Err(ConstructError::CongruenceFailed { .. })));
    }

    #[test]
    fn embedding() {
        let f = PolyMap::pair(poly("z*y + x"), poly("y"));
        assert_eq!(
            embed_3var(&f).unwrap(),
            PolyMap::triple(poly("z*y + x"), poly("y"), poly("z"))
        );
    }
}
