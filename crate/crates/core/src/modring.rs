//! Arithmetic in `k[z]` and in the quotient `k[z]/(p)`.
//!
//! Elements of `k[z, x]` are reduced modulo `p` coefficientwise: every power
//! of `x` carries a `z`-polynomial of degree `< deg p`. Inverting a
//! one-variable automorphism over `k[z]/(p)` is done by reducing modulo the
//! squarefree part of `p`, where the automorphism must be affine, and then
//! Newton-lifting the inverse back up to `p`.

use num_traits::Zero;
use thiserror::Error;

use crate::poly::{Polynomial, Rational, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModError {
    #[error("modulus must be a nonconstant polynomial in z, got {0}")]
    ConstantModulus(Polynomial),
    #[error("expected a polynomial in z only, got {0}")]
    NotZPoly(Polynomial),
    #[error("expected a polynomial in z and x only, got {0}")]
    NotZXPoly(Polynomial),
    #[error("{a1} is not coprime to {p}; gcd is {gcd}")]
    NotCoprime { a1: Polynomial, p: Polynomial, gcd: Polynomial },
    #[error("not invertible modulo p: {reason}")]
    NotInvertible { reason: String },
}

/// A polynomial in `z` alone.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZPoly(Polynomial);

impl ZPoly {
    pub fn new(p: Polynomial) -> Result<Self, ModError> {
        if p.involves(Var::X) || p.involves(Var::Y) {
            return Err(ModError::NotZPoly(p));
        }
        Ok(ZPoly(p))
    }

    pub fn zero() -> Self {
        ZPoly(Polynomial::zero())
    }

    pub fn one() -> Self {
        ZPoly(Polynomial::one())
    }

    pub fn z() -> Self {
        ZPoly(Polynomial::z())
    }

    pub fn constant(c: Rational) -> Self {
        ZPoly(Polynomial::constant(c))
    }

    pub fn as_poly(&self) -> &Polynomial {
        &self.0
    }

    pub fn into_poly(self) -> Polynomial {
        self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.degree_in(Var::Z)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.0.leading_coefficient().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> ZPoly {
        ZPoly(self.0.monic())
    }

    pub fn derivative(&self) -> ZPoly {
        ZPoly(self.0.partial(Var::Z))
    }

    /// Euclidean division in `k[z]`. Panics on a zero divisor.
    pub fn div_rem(&self, d: &ZPoly) -> (ZPoly, ZPoly) {
        let (q, r) = div_rem_z(&self.0, d);
        (ZPoly(q), ZPoly(r))
    }

    pub fn rem(&self, d: &ZPoly) -> ZPoly {
        self.div_rem(d).1
    }

    fn mul(&self, other: &ZPoly) -> ZPoly {
        ZPoly(&self.0 * &other.0)
    }

    fn sub(&self, other: &ZPoly) -> ZPoly {
        ZPoly(&self.0 - &other.0)
    }

    fn scale(&self, c: &Rational) -> ZPoly {
        ZPoly(self.0.scale(c))
    }
}

/// A polynomial in `z` and `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZXPoly(Polynomial);

impl ZXPoly {
    pub fn new(p: Polynomial) -> Result<Self, ModError> {
        if p.involves(Var::Y) {
            return Err(ModError::NotZXPoly(p));
        }
        Ok(ZXPoly(p))
    }

    pub fn x() -> Self {
        ZXPoly(Polynomial::x())
    }

    pub fn as_poly(&self) -> &Polynomial {
        &self.0
    }

    pub fn into_poly(self) -> Polynomial {
        self.0
    }

    pub fn degree_x(&self) -> i64 {
        self.0.degree_in(Var::X)
    }

    /// `self(z, g)`: substitute `g` for `x`.
    pub fn compose(&self, g: &Polynomial) -> Polynomial {
        self.0.substitute_var(Var::X, g)
    }

    /// Coefficients of `x^i` as polynomials in `z`.
    pub fn x_coefficients(&self) -> Vec<ZPoly> {
        self.0.coefficients_in(Var::X).into_iter().map(ZPoly).collect()
    }

    pub fn from_x_coefficients(coeffs: &[ZPoly]) -> ZXPoly {
        let polys: Vec<Polynomial> = coeffs.iter().map(|c| c.0.clone()).collect();
        ZXPoly(Polynomial::from_coefficients_in(Var::X, &polys))
    }
}

impl From<ZPoly> for ZXPoly {
    fn from(p: ZPoly) -> Self {
        ZXPoly(p.0)
    }
}

/// Divides `f` by `d` treating `f` as a polynomial in `z` whose coefficients
/// lie in `k[x, y]`. Returns `(q, r)` with `f = q*d + r` and every term of `r`
/// of `z`-degree `< deg d`.
pub fn div_rem_z(f: &Polynomial, d: &ZPoly) -> (Polynomial, Polynomial) {
    let n = d.degree();
    assert!(n >= 0, "division by the zero polynomial");
    let n = n as u32;
    let lc_inv = d.leading_coefficient().recip();
    let mut quot = Polynomial::zero();
    let mut rem = f.clone();
    loop {
        // highest-z term still to be eliminated
        let pick = rem
            .terms()
            .filter(|(m, _)| m.exponent(Var::Z) >= n)
            .max_by_key(|(m, _)| m.exponent(Var::Z))
            .map(|(m, c)| (*m, c.clone()));
        let Some((m, c)) = pick else { break };
        let mut shift = m;
        shift.0[Var::Z.index()] -= n;
        let coef = c * &lc_inv;
        rem -= &d.0.mul_term(&coef, &shift);
        quot.add_term(coef, shift);
    }
    (quot, rem)
}

fn require_modulus(p: &ZPoly) -> Result<(), ModError> {
    if p.degree() < 1 {
        return Err(ModError::ConstantModulus(p.0.clone()));
    }
    Ok(())
}

/// Reduces every `z`-coefficient modulo `p`. Works for any polynomial, not
/// only elements of `k[z, x]`.
pub fn reduce_poly_mod_p(q: &Polynomial, p: &ZPoly) -> Result<Polynomial, ModError> {
    require_modulus(p)?;
    Ok(div_rem_z(q, p).1)
}

pub fn reduce_mod_p(q: &ZXPoly, p: &ZPoly) -> Result<ZXPoly, ModError> {
    reduce_poly_mod_p(&q.0, p).map(ZXPoly)
}

/// Extended Euclid in `k[z]`: returns `(g, u, v)` with `u*a + v*b = g` and `g`
/// monic. Both inputs zero yields `(0, 0, 0)`.
pub fn ext_gcd(a: &ZPoly, b: &ZPoly) -> (ZPoly, ZPoly, ZPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (ZPoly::one(), ZPoly::zero());
    let (mut t0, mut t1) = (ZPoly::zero(), ZPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.is_zero() {
        return (ZPoly::zero(), ZPoly::zero(), ZPoly::zero());
    }
    let inv = r0.leading_coefficient().recip();
    (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
}

/// Bezout pair `(c, d)` with `d*a1 - c*p = 1` and `deg d < deg p`.
pub fn bezout_cd(a1: &ZPoly, p: &ZPoly) -> Result<(ZPoly, ZPoly), ModError> {
    let (g, u, v) = ext_gcd(a1, p);
    if !g.0.is_one() {
        return Err(ModError::NotCoprime { a1: a1.0.clone(), p: p.0.clone(), gcd: g.0 });
    }
    if p.degree() < 1 {
        // nonzero constant modulus: d = 0, c = -1/p
        let c = ZPoly::constant(-p.leading_coefficient().recip());
        return Ok((c, ZPoly::zero()));
    }
    // u*a1 + v*p = 1; fold multiples of p out of u
    let (q, d) = u.div_rem(p);
    let c = ZPoly(-(&(&q.0 * &a1.0) + &v.0));
    Ok((c, d))
}

/// Inverse of `u` in `k[z]/(p)`, reduced.
pub fn inverse_mod(u: &ZPoly, p: &ZPoly) -> Result<ZPoly, ModError> {
    let (g, s, _) = ext_gcd(u, p);
    if !g.0.is_one() {
        return Err(ModError::NotCoprime { a1: u.0.clone(), p: p.0.clone(), gcd: g.0 });
    }
    Ok(s.rem(p))
}

/// Squarefree part `p / gcd(p, p')`, monic.
pub fn radical(p: &ZPoly) -> ZPoly {
    assert!(!p.is_zero(), "radical of the zero polynomial");
    let (g, _, _) = ext_gcd(p, &p.derivative());
    let (q, r) = p.div_rem(&g);
    debug_assert!(r.is_zero());
    q.monic()
}

/// True iff `a(b(x)) ≡ x` and `b(a(x)) ≡ x` modulo `p`.
pub fn check_inverse_pair(a: &ZXPoly, b: &ZXPoly, p: &ZPoly) -> Result<bool, ModError> {
    require_modulus(p)?;
    let x = Polynomial::x();
    let ab = reduce_poly_mod_p(&a.compose(&b.0), p)?;
    let ba = reduce_poly_mod_p(&b.compose(&a.0), p)?;
    Ok(ab == x && ba == x)
}

fn mul_mod(f: &Polynomial, g: &Polynomial, p: &ZPoly) -> Polynomial {
    div_rem_z(&(f * g), p).1
}

/// Inverse of `h` in `(k[z]/(p))[x]`, where `h` reduces to a unit modulo
/// the radical of `p`. Newton iteration `w <- w (2 - h w)`.
fn invert_polynomial_mod_p(h: &Polynomial, p: &ZPoly, unit: &ZPoly, max_iter: usize) -> Result<Polynomial, ModError> {
    let mut w = inverse_mod(unit, p)?.0;
    let one = Polynomial::one();
    let two = Polynomial::from_int(2);
    for _ in 0..max_iter {
        let hw = mul_mod(h, &w, p);
        if hw == one {
            return Ok(w);
        }
        w = mul_mod(&w, &(&two - &hw), p);
    }
    Err(ModError::NotInvertible { reason: "derivative inverse did not converge".into() })
}

/// Computes `b` with `a(b) ≡ x ≡ b(a)` modulo `p`, reduced modulo `p`.
pub fn invert_mod_p(a: &ZXPoly, p: &ZPoly) -> Result<ZXPoly, ModError> {
    require_modulus(p)?;
    let r = radical(p);
    let a_red = reduce_mod_p(a, &r)?;
    if a_red.degree_x() != 1 {
        return Err(ModError::NotInvertible {
            reason: format!(
                "reduction modulo the radical {} has x-degree {}, expected 1",
                r.0,
                a_red.degree_x()
            ),
        });
    }
    let coeffs = a_red.x_coefficients();
    let (v, u) = (&coeffs[0], &coeffs[1]);
    let u_inv_r = inverse_mod(u, &r).map_err(|_| ModError::NotInvertible {
        reason: format!("linear coefficient {} is not a unit modulo {}", u.0, r.0),
    })?;

    // start: inverse of the affine map modulo the radical
    let x = Polynomial::x();
    let mut b = div_rem_z(&(&u_inv_r.0 * &(&x - &v.0)), &r).1;
    let a_prime = a.0.partial(Var::X);
    let rounds = (64 - (p.degree() as u64).leading_zeros()) as usize + 2;
    let inverse_budget = 2 * rounds + 4;
    for _ in 0..=rounds {
        let err = div_rem_z(&(&a.compose(&b) - &x), p).1;
        if err.is_zero() {
            return Ok(ZXPoly(b));
        }
        let deriv = div_rem_z(&a_prime.substitute_var(Var::X, &b), p).1;
        let deriv_inv = invert_polynomial_mod_p(&deriv, p, u, inverse_budget)?;
        b = div_rem_z(&(&b - &(&err * &deriv_inv)), p).1;
    }
    Err(ModError::NotInvertible { reason: "Newton lift did not converge".into() })
}

/// Constant term helper used by callers that need `a(z, 0)`.
pub fn x_coefficient(a: &ZXPoly, i: usize) -> ZPoly {
    let coeffs = a.x_coefficients();
    coeffs.get(i).cloned().unwrap_or_else(ZPoly::zero)
}
