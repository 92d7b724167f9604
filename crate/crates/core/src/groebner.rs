//! Buchberger's algorithm over `Q[x, y, z]` in degree reverse lexicographic
//! order, used to decide whether `1` lies in an ideal.

use std::fmt;

use thiserror::Error;

use crate::poly::{Monomial, Polynomial};

/// Default cap on the number of S-pairs processed by [`buchberger`].
pub const DEFAULT_SPAIR_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("S-pair limit of {0} exceeded")]
    StepLimitExceeded(usize),
    #[error("all generators are zero")]
    ZeroIdeal,
}

/// Only graded reverse lexicographic order with `x > y > z` is supported;
/// it is the order built into [`Monomial`]'s `Ord`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    #[default]
    Degrevlex,
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("degrevlex(x > y > z)")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub generators: Vec<Polynomial>,
    pub order: MonomialOrder,
}

impl GroebnerBasis {
    pub fn is_unit_ideal(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.generators, self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }
}

/// Fully reduced remainder of `f` on division by `basis`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], _order: MonomialOrder) -> Polynomial {
    let leads: Vec<(Monomial, &Polynomial)> = basis
        .iter()
        .filter_map(|g| g.leading_monomial().map(|m| (m, g)))
        .collect();
    let mut p = f.clone();
    let mut rem = Polynomial::zero();
    while let Some((lm, lc)) = p.leading_term().map(|(m, c)| (*m, c.clone())) {
        let divisor = leads.iter().find(|(m, _)| m.divides(&lm));
        match divisor {
            Some((m, g)) => {
                let shift = m.div(&lm).expect("divides");
                let coef = lc / g.leading_coefficient().expect("nonzero");
                p -= &g.mul_term(&coef, &shift);
            }
            None => {
                let t = Polynomial::term(lc, lm);
                p -= &t;
                rem += &t;
            }
        }
    }
    rem
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, _order: MonomialOrder) -> Polynomial {
    let (Some((mf, cf)), Some((mg, cg))) = (f.leading_term(), g.leading_term()) else {
        return Polynomial::zero();
    };
    let lcm = mf.lcm(mg);
    let sf = mf.div(&lcm).expect("lcm");
    let sg = mg.div(&lcm).expect("lcm");
    &f.mul_term(&cf.recip(), &sf) - &g.mul_term(&cg.recip(), &sg)
}

fn lm(p: &Polynomial) -> Monomial {
    p.leading_monomial().expect("basis elements are nonzero")
}

/// Reduced Gröbner basis of the ideal generated by `gens`, processing at
/// most `cap` S-pairs.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder, cap: usize) -> Result<GroebnerBasis, GroebnerError> {
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(Polynomial::monic).collect();
    if basis.is_empty() {
        return Err(GroebnerError::ZeroIdeal);
    }
    let unit = || GroebnerBasis { generators: vec![Polynomial::one()], order };
    if basis.iter().any(Polynomial::is_constant) {
        return Ok(unit());
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        // normal selection: smallest lcm of leading monomials
        let (k, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = lm(&basis[a.0]).lcm(&lm(&basis[a.1]));
                let lb = lm(&basis[b.0]).lcm(&lm(&basis[b.1]));
                la.cmp(&lb).then(a.cmp(b))
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(k);
        let (mi, mj) = (lm(&basis[i]), lm(&basis[j]));
        if mi.is_coprime(&mj) {
            continue;
        }
        if chain_criterion(&basis, &pairs, i, j) {
            continue;
        }
        processed += 1;
        if processed > cap {
            return Err(GroebnerError::StepLimitExceeded(cap));
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(unit());
        }
        let n = basis.len();
        basis.push(r.monic());
        for i in 0..n {
            pairs.push((i, n));
        }
    }
    Ok(GroebnerBasis { generators: reduce_basis(basis, order), order })
}

/// Skips `(i, j)` when some third element's leading monomial divides
/// `lcm(i, j)` and both pairs with it have already been treated.
fn chain_criterion(basis: &[Polynomial], pending: &[(usize, usize)], i: usize, j: usize) -> bool {
    let l = lm(&basis[i]).lcm(&lm(&basis[j]));
    let is_pending = |a: usize, b: usize| {
        let key = (a.min(b), a.max(b));
        pending.contains(&key)
    };
    (0..basis.len()).any(|k| {
        k != i && k != j && lm(&basis[k]).divides(&l) && !is_pending(i, k) && !is_pending(j, k)
    })
}

fn reduce_basis(mut basis: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    // drop elements whose leading monomial is divisible by another's
    basis.sort_by_key(lm);
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let m = lm(&g);
        if !minimal.iter().any(|h| lm(h).divides(&m)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let g = &minimal[i];
        let lead = Polynomial::term(g.leading_coefficient().unwrap().clone(), lm(g));
        let tail = normal_form(&(g - &lead), &others, order);
        reduced.push((&lead + &tail).monic());
    }
    reduced.sort_by_key(|g| std::cmp::Reverse(lm(g)));
    reduced
}

/// `1 ∈ (gens)`, with the default S-pair cap.
pub fn contains_one(gens: &[Polynomial]) -> Result<bool, GroebnerError> {
    contains_one_with_cap(gens, DEFAULT_SPAIR_CAP)
}

pub fn contains_one_with_cap(gens: &[Polynomial], cap: usize) -> Result<bool, GroebnerError> {
    match buchberger(gens, MonomialOrder::Degrevlex, cap) {
        Ok(gb) => Ok(gb.is_unit_ideal()),
        Err(GroebnerError::ZeroIdeal) => Ok(false),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_poly;

    const O: MonomialOrder = MonomialOrder::Degrevlex;

    fn poly(s: &str) -> Polynomial {
        parse_poly(s).unwrap()
    }
    fn polys(v: &[&str]) -> Vec<Polynomial> {
        v.iter().map(|s| poly(s)).collect()
    }

    #[test]
    fn normal_form_examples() {
        assert!(normal_form(&poly("x^2*y"), &polys(&["x^2"]), O).is_zero());
        assert_eq!(normal_form(&poly("x*y + 1"), &polys(&["x"]), O), poly("1"));
        assert_eq!(normal_form(&poly("x^2 + y^2"), &polys(&["x - y"]), O), poly("2*y^2"));
    }

    #[test]
    fn s_polynomial_examples() {
        assert!(s_polynomial(&poly("x^2"), &poly("x*y"), O).is_zero());
        assert_eq!(s_polynomial(&poly("x - y"), &poly("y - z"), O), poly("x*z - y^2"));
        let f = poly("x^3 + y*z - 2");
        assert!(s_polynomial(&f, &f, O).is_zero());
    }

    #[test]
    fn buchberger_examples() {
        assert_eq!(buchberger(&polys(&["x", "y"]), O, 100).unwrap().generators, polys(&["x", "y"]));
        assert!(buchberger(&polys(&["x", "1 - x"]), O, 100).unwrap().is_unit_ideal());
        assert_eq!(buchberger(&polys(&["0"]), O, 100), Err(GroebnerError::ZeroIdeal));
    }

    #[test]
    fn twisted_cubic_basis_is_groebner() {
        let gens = polys(&["y - x^2", "z - x^3"]);
        let gb = buchberger(&gens, O, 1000).unwrap();
        for g in &gens {
            assert!(gb.contains(g));
        }
        for (i, a) in gb.generators.iter().enumerate() {
            assert_eq!(a.leading_coefficient(), Some(&crate::poly::rat(1)));
            for b in &gb.generators[i + 1..] {
                assert!(gb.reduce(&s_polynomial(a, b, O)).is_zero());
            }
        }
        assert!(gb.contains(&poly("x*z - y^2")));
    }

    #[test]
    fn contains_one_examples() {
        assert!(contains_one(&polys(&["x", "1 - x"])).unwrap());
        assert!(!contains_one(&polys(&["x", "y"])).unwrap());
        assert!(!contains_one(&polys(&["0", "0"])).unwrap());
        assert!(!contains_one(&[]).unwrap());
    }

    #[test]
    fn step_limit() {
        let gens = polys(&["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]);
        assert_eq!(buchberger(&gens, O, 1), Err(GroebnerError::StepLimitExceeded(1)));
        let gb = buchberger(&gens, O, 1000).unwrap();
        assert_eq!(gb.generators, polys(&["x^2", "x*y", "y^2 - 1/2*x"]));
    }
}
