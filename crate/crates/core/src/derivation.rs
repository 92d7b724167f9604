//! Derivations of `k[x, y, z]` given by the images of the generators.

use thiserror::Error;

use crate::automap::PolyMap;
use crate::poly::{rat, Polynomial, Rational, Var};

/// Iteration cap for [`exp_map`] when no explicit bound is given.
pub const DEFAULT_EXP_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("only derivations with D(z) = 0 are supported")]
    UnsupportedDerivation,
    #[error("D(s) = {0} is not zero")]
    KernelViolation(Polynomial),
    #[error("iterates of {var} did not vanish within {bound} steps")]
    NotLocallyNilpotent { var: Var, bound: usize },
    #[error("bound must be at least 1")]
    ZeroBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub image_x: Polynomial,
    pub image_y: Polynomial,
    pub image_z: Polynomial,
}

impl Derivation {
    pub fn new(image_x: Polynomial, image_y: Polynomial, image_z: Polynomial) -> Self {
        Derivation { image_x, image_y, image_z }
    }

    /// `-2y ∂x + z ∂y`, whose exponential at `s = xz + y^2` is Nagata's map.
    pub fn nagata() -> Self {
        Derivation::new(
            Polynomial::y().scale(&rat(-2)),
            Polynomial::z(),
            Polynomial::zero(),
        )
    }

    pub fn image(&self, v: Var) -> &Polynomial {
        match v {
            Var::X => &self.image_x,
            Var::Y => &self.image_y,
            Var::Z => &self.image_z,
        }
    }

    /// `D(g) = D(x) g_x + D(y) g_y + D(z) g_z`.
    pub fn apply(&self, g: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for v in Var::ALL {
            let img = self.image(v);
            if img.is_zero() || !g.involves(v) {
                continue;
            }
            out += img * &g.partial(v);
        }
        out
    }

    /// `D^n(g)`, stopping early at zero.
    pub fn iterate(&self, g: &Polynomial, n: usize) -> Polynomial {
        let mut cur = g.clone();
        for _ in 0..n {
            if cur.is_zero() {
                break;
            }
            cur = self.apply(&cur);
        }
        cur
    }

    /// Smallest `n <= cap` with `D^n(g) = 0`.
    pub fn nilpotency_index(&self, g: &Polynomial, cap: usize) -> Option<usize> {
        let mut cur = g.clone();
        for n in 0..=cap {
            if cur.is_zero() {
                return Some(n);
            }
            if n < cap {
                cur = self.apply(&cur);
            }
        }
        None
    }
}

/// `f_y ∂x - f_x ∂y`.
pub fn jacobian_derivation(f: &Polynomial) -> Derivation {
    Derivation::new(f.partial(Var::Y), -f.partial(Var::X), Polynomial::zero())
}

pub fn apply_derivation(d: &Derivation, g: &Polynomial) -> Polynomial {
    d.apply(g)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotencyReport {
    pub is_lnd: bool,
    pub bound_used: usize,
    /// First generator whose iterate at the bound is nonzero, with that iterate.
    pub witness: Option<(Var, Polynomial)>,
}

/// Decides whether `D^bound(x) = D^bound(y) = 0` for a derivation with
/// `D(z) = 0`. By the Leibniz rule this makes `D` locally nilpotent.
pub fn lnd_check(d: &Derivation, bound: usize) -> Result<NilpotencyReport, DerivationError> {
    if !d.image_z.is_zero() {
        return Err(DerivationError::UnsupportedDerivation);
    }
    if bound == 0 {
        return Err(DerivationError::ZeroBound);
    }
    for v in [Var::X, Var::Y] {
        let it = d.iterate(&Polynomial::var(v), bound);
        if !it.is_zero() {
            return Ok(NilpotencyReport { is_lnd: false, bound_used: bound, witness: Some((v, it)) });
        }
    }
    Ok(NilpotencyReport { is_lnd: true, bound_used: bound, witness: None })
}

/// `exp(sD)`: components `Σ_n s^n D^n(v) / n!` for `v = x, y, z`.
pub fn exp_map(d: &Derivation, s: &Polynomial) -> Result<PolyMap, DerivationError> {
    exp_map_with_cap(d, s, DEFAULT_EXP_CAP)
}

pub fn exp_map_with_cap(d: &Derivation, s: &Polynomial, cap: usize) -> Result<PolyMap, DerivationError> {
    let ds = d.apply(s);
    if !ds.is_zero() {
        return Err(DerivationError::KernelViolation(ds));
    }
    let mut comps = Vec::with_capacity(3);
    for v in Var::ALL {
        let mut term = Polynomial::var(v);
        let mut acc = Polynomial::zero();
        let mut s_pow = Polynomial::one();
        let mut fact = Rational::from_integer(1.into());
        let mut n = 0usize;
        while !term.is_zero() {
            if n > cap {
                return Err(DerivationError::NotLocallyNilpotent { var: v, bound: cap });
            }
            acc += (&s_pow * &term).scale(&fact.recip());
            n += 1;
            term = d.apply(&term);
            s_pow = &s_pow * s;
            fact *= rat(n as i64);
        }
        comps.push(acc);
    }
    Ok(PolyMap::triple(comps.remove(0), comps.remove(0), comps.remove(0)))
}
