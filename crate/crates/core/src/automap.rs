//! Polynomial maps and their composition.
//!
//! A map `F = (F_1, ..., F_n)` acts by substitution and composes as
//! `(F ∘ G)_i = F_i(G_1, ..., G_n)`. Maps of arity 2 act on `x, y` only and
//! treat `z` as a coefficient; composing them leaves `z` fixed.

use num_traits::Zero;
use thiserror::Error;

use crate::poly::{Monomial, Polynomial, Rational, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("a map needs 2 or 3 components, found {0}")]
    BadArity(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMap {
    components: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(components: Vec<Polynomial>) -> Result<Self, MapError> {
        match components.len() {
            2 | 3 => Ok(PolyMap { components }),
            n => Err(MapError::BadArity(n)),
        }
    }

    /// Callers guarantee two or three components.
    pub(crate) fn from_components(components: Vec<Polynomial>) -> Self {
        debug_assert!(matches!(components.len(), 2 | 3));
        PolyMap { components }
    }

    pub fn pair(f1: Polynomial, f2: Polynomial) -> Self {
        PolyMap { components: vec![f1, f2] }
    }

    pub fn triple(f1: Polynomial, f2: Polynomial, f3: Polynomial) -> Self {
        PolyMap { components: vec![f1, f2, f3] }
    }

    pub fn identity(arity: usize) -> Self {
        assert!(matches!(arity, 2 | 3), "arity must be 2 or 3");
        PolyMap {
            components: Var::ALL[..arity].iter().map(|v| Polynomial::var(*v)).collect(),
        }
    }

    /// The coordinate swap `(y, x, z)`.
    pub fn swap_xy() -> Self {
        PolyMap::triple(Polynomial::y(), Polynomial::x(), Polynomial::z())
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn is_identity(&self) -> bool {
        *self == PolyMap::identity(self.arity())
    }

    /// `F(G)`: substitutes the components of `other` into `self`.
    pub fn compose(&self, other: &PolyMap) -> Result<PolyMap, MapError> {
        if self.arity() != other.arity() {
            return Err(MapError::ArityMismatch(self.arity(), other.arity()));
        }
        let z = Polynomial::z();
        let images = [
            &other.components[0],
            &other.components[1],
            other.components.get(2).unwrap_or(&z),
        ];
        Ok(PolyMap {
            components: self.components.iter().map(|c| c.substitute(images)).collect(),
        })
    }

    /// Appends the component `z` to a map of arity 2.
    pub fn embed_3var(&self) -> Result<PolyMap, MapError> {
        if self.arity() != 2 {
            return Err(MapError::ArityMismatch(self.arity(), 2));
        }
        let mut components = self.components.clone();
        components.push(Polynomial::z());
        Ok(PolyMap { components })
    }
}

/// Left-to-right composition `maps[0] ∘ maps[1] ∘ ...`.
pub fn compose_all(maps: &[PolyMap]) -> Result<PolyMap, MapError> {
    let mut iter = maps.iter();
    let first = iter.next().expect("compose_all needs at least one map").clone();
    iter.try_fold(first, |acc, m| acc.compose(m))
}

/// `compose(F, G)` and `compose(G, F)` are both the identity.
pub fn verify_inverse(f: &PolyMap, g: &PolyMap) -> Result<bool, MapError> {
    Ok(f.compose(g)?.is_identity() && g.compose(f)?.is_identity())
}

/// `(x_1, ..., u x_i + v, ..., x_n)` with `u` a nonzero rational and `v`
/// free of `x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryMap {
    pub arity: usize,
    pub target: Var,
    pub unit: Rational,
    pub shift: Polynomial,
}

impl ElementaryMap {
    pub fn to_map(&self) -> PolyMap {
        let mut comps = PolyMap::identity(self.arity).into_components();
        let i = self.target.index();
        comps[i] = &Polynomial::var(self.target).scale(&self.unit) + &self.shift;
        PolyMap::from_components(comps)
    }

    /// `x_i -> u^{-1} (x_i - v)`.
    pub fn inverse(&self) -> ElementaryMap {
        let inv = self.unit.recip();
        ElementaryMap {
            arity: self.arity,
            target: self.target,
            unit: inv.clone(),
            shift: self.shift.scale(&-inv),
        }
    }
}

/// Recognizes maps where exactly one component differs from its variable and
/// has the form `u x_i + v` with `u ∈ k*` and `v` free of `x_i`.
pub fn is_elementary(f: &PolyMap) -> Option<ElementaryMap> {
    let differing: Vec<usize> = (0..f.arity())
        .filter(|&i| f.components[i] != Polynomial::var(Var::ALL[i]))
        .collect();
    let [i] = differing[..] else { return None };
    let target = Var::ALL[i];
    let comp = &f.components[i];
    let unit = comp.coefficient(&Monomial::var(target));
    if unit.is_zero() {
        return None;
    }
    let shift = comp - &Polynomial::var(target).scale(&unit);
    if shift.involves(target) {
        return None;
    }
    Some(ElementaryMap { arity: f.arity(), target, unit, shift })
}

/// For an arity-2 map that is affine in `x, y` over `k[z]`, returns its
/// linear determinant `α ε − β δ`; `None` if some component is not affine.
pub fn affine_determinant(f: &PolyMap) -> Option<Polynomial> {
    if f.arity() != 2 {
        return None;
    }
    let mut lin = [[Polynomial::zero(), Polynomial::zero()], [Polynomial::zero(), Polynomial::zero()]];
    for (row, comp) in f.components.iter().enumerate() {
        for (m, c) in comp.terms() {
            let (ex, ey) = (m.exponent(Var::X), m.exponent(Var::Y));
            let zpart = Polynomial::term(c.clone(), Monomial::new(0, 0, m.exponent(Var::Z)));
            match (ex, ey) {
                (0, 0) => {}
                (1, 0) => lin[row][0] += &zpart,
                (0, 1) => lin[row][1] += &zpart,
                _ => return None,
            }
        }
    }
    Some(&(&lin[0][0] * &lin[1][1]) - &(&lin[0][1] * &lin[1][0]))
}

/// A factor allowed in a tameness certificate: elementary, or affine with a
/// nonzero constant determinant.
pub fn is_tame_factor(f: &PolyMap) -> bool {
    if is_elementary(f).is_some() {
        return true;
    }
    affine_determinant(f)
        .and_then(|d| d.constant_value())
        .is_some_and(|d| !d.is_zero())
}
