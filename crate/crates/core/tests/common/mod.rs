#![allow(dead_code)]

use polyaut::automap::{compose_all, ElementaryMap};
use polyaut::construct::{build_pair, ConstructionInput, ConstructionResult};
use polyaut::modring::{radical, ZPoly, ZXPoly};
use polyaut::{parse_poly, Monomial, PolyMap, Polynomial, Rational, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn poly(s: &str) -> Polynomial {
    parse_poly(s).unwrap()
}

pub fn small_rational(r: &mut impl Rng) -> Rational {
    let n: i64 = r.gen_range(-9..=9);
    let d: i64 = if r.gen_bool(0.25) { r.gen_range(2..=5) } else { 1 };
    Rational::new(n.into(), d.into())
}

pub fn nonzero_rational(r: &mut impl Rng) -> Rational {
    loop {
        let c = small_rational(r);
        if c != Rational::from_integer(0.into()) {
            return c;
        }
    }
}

/// Random polynomial with up to `terms` terms, exponents `<= max_exp` in the
/// variables listed by `vars`.
pub fn random_poly(r: &mut impl Rng, vars: &[Var], max_exp: u32, terms: usize) -> Polynomial {
    let n = r.gen_range(0..=terms);
    let mut acc = Polynomial::zero();
    for _ in 0..n {
        let mut e = [0u32; 3];
        for v in vars {
            e[v.index()] = r.gen_range(0..=max_exp);
        }
        acc += Polynomial::term(nonzero_rational(r), Monomial(e));
    }
    acc
}

pub fn random_xyz(r: &mut impl Rng) -> Polynomial {
    random_poly(r, &Var::ALL, 3, 6)
}

pub const MODULI: [&str; 5] = ["z", "z^2", "z^3", "z^2 - 1", "z^3 + z"];

#[derive(Debug, Clone)]
pub struct Case {
    pub p: ZPoly,
    pub a: ZXPoly,
    /// Expected classification, known from how `a` was assembled.
    pub tame: bool,
}

/// `a = u x + a0 + p q + r`, where `u` is a unit mod `p`, `q` has `x`-degree
/// at least 2 and `r` is a nilpotent multiple of `rad(p) x^2` (only when `p`
/// is not squarefree). Degrees are kept small because `f2` grows like
/// `deg b * deg a`.
pub fn random_case(r: &mut impl Rng) -> Case {
    let p_text = MODULI[r.gen_range(0..MODULI.len())];
    let p = ZPoly::new(poly(p_text)).unwrap();
    let units: &[&str] = if p_text == "z^2 - 1" { &["1", "2", "3 + z"] } else { &["1", "2", "1 + z"] };
    let u = poly(units[r.gen_range(0..units.len())]);
    let x = Polynomial::x();
    let rad = radical(&p);
    let wild = rad != p && r.gen_bool(0.5);
    let a0 = random_poly(r, &[Var::Z], 1, 2);
    let mut q = Polynomial::zero();
    for k in 2..=r.gen_range(2..=if wild { 2 } else { 3 }) {
        if r.gen_bool(0.7) {
            let c = random_poly(r, &[Var::Z], 1, 2);
            q += &c * &x.pow(k);
        }
    }
    let mut a = &(&(&u * &x) + &a0) + &(p.as_poly() * &q);
    if wild {
        a += (rad.as_poly() * &x.pow(2)).scale(&nonzero_rational(r));
    }
    Case { p, a: ZXPoly::new(a).unwrap(), tame: !wild }
}

pub fn build(case: &Case) -> ConstructionResult {
    let input = ConstructionInput::with_computed_inverse(case.p.clone(), case.a.clone()).unwrap();
    build_pair(input).unwrap()
}

/// `count` cases, deterministic in `seed`.
pub fn construction_suite(seed: u64, count: usize) -> Vec<Case> {
    let mut r = rng(seed);
    (0..count).map(|_| random_case(&mut r)).collect()
}

/// A random elementary map of `k[z][x, y]`.
pub fn random_elementary(r: &mut impl Rng) -> ElementaryMap {
    let target = if r.gen_bool(0.5) { Var::X } else { Var::Y };
    let other = if target == Var::X { Var::Y } else { Var::X };
    let mut shift = Polynomial::zero();
    for _ in 0..r.gen_range(1..=2) {
        let k = r.gen_range(0..=2);
        let c = random_poly(r, &[Var::Z], 1, 1);
        shift += &c * &Polynomial::var(other).pow(k);
    }
    let unit = nonzero_rational(r);
    ElementaryMap { arity: 2, target, unit, shift }
}

/// Composition of 1 to `max_len` random elementary maps, with the factors.
pub fn random_tame(r: &mut impl Rng, max_len: usize) -> (PolyMap, Vec<ElementaryMap>) {
    let n = r.gen_range(1..=max_len);
    let factors: Vec<ElementaryMap> = (0..n).map(|_| random_elementary(r)).collect();
    let maps: Vec<PolyMap> = factors.iter().map(ElementaryMap::to_map).collect();
    (compose_all(&maps).unwrap(), factors)
}
