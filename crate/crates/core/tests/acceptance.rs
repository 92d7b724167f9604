mod common;

use std::path::Path;
use std::process::{Command, ExitCode};

use common::{build, construction_suite, poly, random_poly, random_tame, random_xyz, rng};
use polyaut::automap::{affine_determinant, compose_all};
use polyaut::coordcheck::{coordinate_test_2var, coordinate_test_z, degree_bound, CoordVerdict};
use polyaut::derivation::{exp_map, jacobian_derivation, lnd_check, Derivation};
use polyaut::groebner::{buchberger, contains_one, MonomialOrder};
use polyaut::modring::{ZPoly, ZXPoly};
use polyaut::tame::{classify, decompose, nagata_sigma};
use polyaut::{parse_map, parse_poly, print_canonical, verify_inverse, ConstructionInput, PolyMap, Polynomial, Var, Verdict};
use rand::seq::SliceRandom;
use rand::Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const S: &str = "(x*z + y^2)";
const SUITE_SEED: u64 = 2024;
const SUITE_SIZE: usize = 200;

fn criterion_1() -> Check {
    let sigma = exp_map(&Derivation::new(poly("-2*y"), poly("z"), poly("0")), &poly(S)).map_err(|e| e.to_string())?;
    let closed = parse_map(&"(x − 2*s*y − s^2*z; y + s*z; z)".replace('s', S)).map_err(|e| e.to_string())?;
    ensure(sigma == closed, || format!("exp(sD) = {}", polyaut::print_map(&sigma)))
}

fn criterion_2() -> Check {
    let p = ZPoly::new(poly("z^2")).unwrap();
    let a = ZXPoly::new(poly("x + z*x^2")).unwrap();
    let b = ZXPoly::new(poly("x - z*x^2")).unwrap();
    let r = polyaut::build_pair(ConstructionInput::new(p, a, b).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let tau = parse_map("(y; x; z)").unwrap();
    let f = PolyMap::triple(r.f1.clone(), r.f2.clone(), Polynomial::z());
    let rhs = compose_all(&[tau.clone(), f, tau]).unwrap();
    ensure(rhs == nagata_sigma(), || format!("τ∘F∘τ = {}", polyaut::print_map(&rhs)))
}

fn criterion_3() -> Check {
    let p = ZPoly::new(poly("z^2")).unwrap();
    let a = ZXPoly::new(poly("x + z*x^2")).unwrap();
    let b = ZXPoly::new(poly("x - z*x^2")).unwrap();
    let r = polyaut::build_pair(ConstructionInput::new(p, a, b).unwrap()).unwrap();
    let expected = poly("y − 2*x^3 − z*x^4 − 2*z*x*y − 2*z^2*x^2*y − z^3*y^2");
    ensure(r.f2 == expected, || format!("f2 = {}", r.f2))?;
    ensure(verify_inverse(&r.forward(), &r.inverse()).unwrap(), || "F∘G is not the identity".into())?;
    for (i, case) in construction_suite(SUITE_SEED, SUITE_SIZE).iter().enumerate() {
        ensure(build(case).check_invariants(), || format!("random case {i} fails: {case:?}"))?;
    }
    Ok(())
}

fn criterion_4() -> Check {
    let z2 = ZPoly::new(poly("z^2")).unwrap();
    let v = classify(&z2, &ZXPoly::new(poly("x + z*x^2")).unwrap()).map_err(|e| e.to_string())?;
    ensure(v.verdict == Verdict::Wild && v.d1 == 2, || format!("{v:?}"))?;

    let a = ZXPoly::new(poly("(1+z)*x + z^2*x^3")).unwrap();
    let v = classify(&z2, &a).map_err(|e| e.to_string())?;
    ensure(v.verdict == Verdict::Tame && v.d1 == 1, || format!("{v:?}"))?;
    let b = polyaut::modring::invert_mod_p(&a, &z2).unwrap();
    let cert = decompose(&z2, &a, &b).map_err(|e| e.to_string())?;
    ensure(cert.factors.len() == 4, || format!("{} factors", cert.factors.len()))?;
    let product = compose_all(&cert.factors).unwrap();
    let built = polyaut::build_pair(ConstructionInput::new(z2.clone(), a, b).unwrap()).unwrap();
    ensure(product == built.forward(), || format!("factors compose to {}", polyaut::print_map(&product)))?;
    let det = affine_determinant(cert.linear_factor());
    ensure(det.as_ref().is_some_and(Polynomial::is_one), || format!("determinant {det:?}"))
}

fn criterion_5() -> Check {
    let (x, y) = (Polynomial::x(), Polynomial::y());
    let mut checked = 0;
    for case in construction_suite(SUITE_SEED, SUITE_SIZE) {
        let r = build(&case);
        let v = classify(&case.p, &case.a).map_err(|e| e.to_string())?;
        let Some(s) = v.detail else { continue };
        let p = case.p.as_poly();
        let lhs = compose_all(&[
            PolyMap::pair(&x - s.a0.as_poly(), y.clone()),
            PolyMap::pair(x.clone(), &y - s.b_tilde.as_poly()),
            r.forward(),
            PolyMap::pair(x.clone(), &y - &(&x.pow(2) * s.a_tilde.as_poly())),
        ])
        .unwrap();
        let rhs = PolyMap::pair(
            &(s.a1.as_poly() * &x) + &(p * &y),
            &(s.c.as_poly() * &x) + &(s.d.as_poly() * &y),
        );
        ensure(lhs == rhs, || format!("{case:?}: {} != {}", polyaut::print_map(&lhs), polyaut::print_map(&rhs)))?;
        let bezout = &(s.d.as_poly() * s.a1.as_poly()) - &(s.c.as_poly() * p);
        ensure(bezout.is_one(), || format!("{case:?}: d a1 - c p = {bezout}"))?;
        checked += 1;
    }
    ensure(checked >= 50, || format!("only {checked} tame cases"))
}

fn criterion_6() -> Check {
    let expect = |f: &str, want: CoordVerdict, two_var: bool| -> Check {
        let f = poly(f);
        let r = if two_var { coordinate_test_2var(&f) } else { coordinate_test_z(&f) }.map_err(|e| e.to_string())?;
        ensure(r.verdict == want, || format!("{f}: {r:?}"))?;
        if want == CoordVerdict::Coordinate {
            ensure(r.lnd_ok && r.unimodular_ok, || format!("{f}: {r:?}"))?;
        }
        Ok(())
    };
    let nagata_first = format!("x - 2*{S}*y - {S}^2*z");
    expect(&nagata_first, CoordVerdict::Coordinate, false)?;
    expect("x^2", CoordVerdict::NotCoordinate, false)?;
    expect("x + z*y^2", CoordVerdict::Coordinate, false)?;
    expect("x - 2*y^3", CoordVerdict::Coordinate, true)
}

fn naive_nilpotent(d: &Derivation, steps: usize) -> bool {
    [Var::X, Var::Y].into_iter().all(|v| d.iterate(&Polynomial::var(v), steps).is_zero())
}

fn criterion_7() -> Check {
    let mut coords: Vec<Polynomial> = Vec::new();
    let mut r = rng(77);
    for _ in 0..100 {
        let (f, _) = random_tame(&mut r, 5);
        coords.extend(f.into_components().into_iter().filter(|c| !c.is_constant()));
    }
    for case in construction_suite(SUITE_SEED, 40) {
        let b = build(&case);
        coords.push(b.f1);
        coords.push(b.f2);
    }
    for f in &coords {
        let bound = degree_bound(f);
        let d = jacobian_derivation(f);
        let fast = lnd_check(&d, bound).map_err(|e| e.to_string())?.is_lnd;
        let slow = naive_nilpotent(&d, 3 * bound);
        ensure(fast == slow, || format!("{f}: bound {bound} says {fast}, 3x bound says {slow}"))?;
        ensure(fast, || format!("{f}: coordinate whose derivation is not locally nilpotent"))?;
    }
    Ok(())
}

fn criterion_8() -> Check {
    let mut r = rng(88);
    let o = MonomialOrder::Degrevlex;
    for i in 0..20 {
        let n = r.gen_range(2..=3);
        let gens: Vec<Polynomial> = (0..n).map(|_| random_poly(&mut r, &Var::ALL, 2, 3)).collect();
        let reference = buchberger(&gens, o, 100_000);
        for _ in 0..3 {
            let mut shuffled = gens.clone();
            shuffled.shuffle(&mut r);
            ensure(buchberger(&shuffled, o, 100_000) == reference, || format!("ideal {i} depends on generator order"))?;
        }
    }
    for i in 0..100 {
        let f = random_poly(&mut r, &Var::ALL, 2, 3);
        let g = random_poly(&mut r, &Var::ALL, 2, 3);
        if g.is_zero() {
            continue;
        }
        let gb = buchberger(std::slice::from_ref(&g), o, 100).map_err(|e| e.to_string())?;
        let h = if i % 2 == 0 { &f * &g } else { &(&f * &g) + &random_poly(&mut r, &Var::ALL, 1, 1) };
        let by_division = h.exact_div(&g).is_ok();
        ensure(gb.contains(&h) == by_division, || format!("({g}) membership of {h}"))?;
        if i % 2 == 0 {
            ensure(by_division && h.exact_div(&g).unwrap() == f, || format!("{h} / {g}"))?;
        }
    }
    ensure(contains_one(&[poly("x"), poly("1 - x")]) == Ok(true), || "contains_one([x, 1 - x])".into())?;
    ensure(contains_one(&[poly("x"), poly("y")]) == Ok(false), || "contains_one([x, y])".into())
}

fn criterion_9() -> Check {
    let mut r = rng(99);
    for _ in 0..1000 {
        let p = random_xyz(&mut r);
        let text = print_canonical(&p);
        let back = parse_poly(&text).map_err(|e| format!("{text}: {e}"))?;
        ensure(back == p, || format!("{text} parsed to {back}"))?;
    }
    let transcripts: [(&str, &[&str]); 3] = [
        ("construct.txt", &["construct", "-p", "z^2", "-a", "x + z*x^2"]),
        ("nagata.txt", &["nagata"]),
        ("coord_test.txt", &["coord-test", "-f", "x^2"]),
    ];
    for (file, args) in transcripts {
        let golden = std::fs::read(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(file))
            .map_err(|e| format!("{file}: {e}"))?;
        for _ in 0..2 {
            let out = Command::new(env!("CARGO_BIN_EXE_polyaut")).args(args).output().map_err(|e| e.to_string())?;
            ensure(out.status.success(), || format!("{file}: exit {:?}", out.status.code()))?;
            ensure(out.stdout == golden, || format!("{file}: transcript differs"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("exp(sD) equals the closed form of Nagata's automorphism", criterion_1),
        ("sigma = (y, x, z) ∘ (f1, f2, z) ∘ (y, x, z)", criterion_2),
        ("construction round trip and 200 randomized cases", criterion_3),
        ("wild and tame classification with unit-determinant certificate", criterion_4),
        ("decomposition identity on every tame randomized case", criterion_5),
        ("coordinate tests over k[z] and k", criterion_6),
        ("LND bound d + 2 agrees with iteration to 3(d + 2)", criterion_7),
        ("Groebner uniqueness, principal membership, unit ideal", criterion_8),
        ("parse∘print identity and golden CLI transcripts", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {}: PASS  {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
