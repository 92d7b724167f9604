//! Command-line front end. Every command reads polynomials and maps in the
//! [`textio`](crate::textio) grammar and writes `key: value` lines.
//!
//! Exit codes: `0` computed, `2` parse or usage error, `3` mathematical
//! precondition violated, `4` S-pair limit exceeded.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::automap::{affine_determinant, verify_inverse, MapError, PolyMap};
use crate::construct::{build_pair, ConstructError, ConstructionInput};
use crate::coordcheck::{
    coordinate_test_2var_with_cap, coordinate_test_z_with_cap, slice_criterion_report_with_cap, CoordError,
    CoordinateReport,
};
use crate::derivation::{exp_map, jacobian_derivation, lnd_check, Derivation, DerivationError};
use crate::groebner::{buchberger, GroebnerError, MonomialOrder, DEFAULT_SPAIR_CAP};
use crate::modring::{check_inverse_pair, invert_mod_p, ModError, ZPoly, ZXPoly};
use crate::poly::{Polynomial, Rational};
use crate::tame::{classify, classify_with_inverse, decompose, equivalence_statements, nagata, TameError, Verdict};
use crate::textio::{parse_map, parse_poly, parse_rational, print_canonical, print_map, ParseDiagnostic, TextError};

/// Environment variable overriding the Gröbner S-pair cap.
pub const SPAIR_CAP_ENV: &str = "POLYAUT_SPAIR_CAP";

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;
pub const EXIT_STEP_LIMIT: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "polyaut", version, about = "Exact tools for k[z]-automorphisms of k[x,y,z]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct PairArgs {
    /// Modulus p(z)
    #[arg(short = 'p', long = "p")]
    p: String,
    /// One-variable map a(z, x)
    #[arg(short = 'a', long = "a")]
    a: String,
    /// Inverse b(z, x) modulo p; computed when omitted
    #[arg(short = 'b', long = "b")]
    b: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build (f1, f2) and its inverse (g1, g2) from p, a and optionally b
    Construct(PairArgs),
    /// Compute the inverse of a(z, x) modulo p
    InvertModP {
        #[arg(short = 'p', long = "p")]
        p: String,
        #[arg(short = 'a', long = "a")]
        a: String,
    },
    /// Compose two maps: result_i = F_i(G)
    Compose {
        #[arg(short = 'f', long = "f")]
        f: String,
        #[arg(short = 'g', long = "g")]
        g: String,
    },
    /// Check that two maps are mutually inverse
    VerifyInverse {
        #[arg(short = 'f', long = "f")]
        f: String,
        #[arg(short = 'g', long = "g")]
        g: String,
    },
    /// Classify the constructed map as tame or wild
    Classify(PairArgs),
    /// Tame factorization of the constructed map
    Decompose(PairArgs),
    /// Nagata's automorphism and its construction
    Nagata,
    /// Coordinate test over k[z]
    CoordTest {
        #[arg(short = 'f', long = "f")]
        f: String,
    },
    /// Coordinate test over k for f in k[x, y]
    #[command(name = "coord-test-2var")]
    CoordTest2Var {
        #[arg(short = 'f', long = "f")]
        f: String,
    },
    /// Local nilpotency of a derivation (x-image; y-image[; z-image]) or of
    /// the Jacobian derivation of f
    LndCheck {
        #[arg(short = 'd', long = "d", conflicts_with = "f", required_unless_present = "f")]
        d: Option<String>,
        #[arg(short = 'f', long = "f")]
        f: Option<String>,
        /// Number of iterations; defaults to d + 2 with -f
        #[arg(long)]
        bound: Option<usize>,
    },
    /// exp(sD) for a locally nilpotent D with D(s) = 0
    Exp {
        #[arg(short = 'd', long = "d")]
        d: String,
        #[arg(short = 's', long = "s")]
        s: String,
    },
    /// Decide whether 1 lies in the ideal generated by the -g polynomials
    GroebnerContainsOne {
        #[arg(short = 'g', long = "g", required = true)]
        g: Vec<String>,
    },
    /// Slice test f(x, y, a) over k together with the k[z] coordinate test
    #[command(name = "slice-criterion")]
    SliceCriterion {
        #[arg(short = 'f', long = "f")]
        f: String,
        #[arg(short = 'a', long = "a")]
        a: String,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{flag}: {diag}")]
    Parse { flag: &'static str, diag: ParseDiagnostic },
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    StepLimit(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } | CliError::Io(_) => EXIT_USAGE,
            CliError::Precondition(_) => EXIT_PRECONDITION,
            CliError::StepLimit(_) => EXIT_STEP_LIMIT,
        }
    }
}

impl From<ModError> for CliError {
    fn from(e: ModError) -> Self {
        match e {
            ModError::NotZPoly(_) | ModError::NotZXPoly(_) => CliError::Usage(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::Mod(m) => m.into(),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<TameError> for CliError {
    fn from(e: TameError) -> Self {
        match e {
            TameError::Mod(m) => m.into(),
            TameError::Construct(c) => c.into(),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<MapError> for CliError {
    fn from(e: MapError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::StepLimitExceeded(_) => CliError::StepLimit(e.to_string()),
            GroebnerError::ZeroIdeal => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<DerivationError> for CliError {
    fn from(e: DerivationError) -> Self {
        match e {
            DerivationError::ZeroBound => CliError::Usage(e.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<CoordError> for CliError {
    fn from(e: CoordError) -> Self {
        match e {
            CoordError::Groebner(g) => g.into(),
            CoordError::Derivation(d) => d.into(),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

/// Resolves `@file` indirection.
fn source(value: &str) -> Result<String, CliError> {
    match value.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}"))),
        None => Ok(value.to_string()),
    }
}

fn poly_arg(flag: &'static str, value: &str) -> Result<Polynomial, CliError> {
    parse_poly(&source(value)?).map_err(|diag| CliError::Parse { flag, diag })
}

fn map_arg(flag: &'static str, value: &str) -> Result<PolyMap, CliError> {
    match parse_map(&source(value)?) {
        Ok(m) => Ok(m),
        Err(TextError::Parse(diag)) => Err(CliError::Parse { flag, diag }),
        Err(TextError::Arity(n)) => Err(CliError::Usage(format!("{flag}: a map needs 2 or 3 components, found {n}"))),
    }
}

fn rational_arg(flag: &'static str, value: &str) -> Result<Rational, CliError> {
    parse_rational(&source(value)?).map_err(|diag| CliError::Parse { flag, diag })
}

fn zpoly_arg(flag: &'static str, value: &str) -> Result<ZPoly, CliError> {
    Ok(ZPoly::new(poly_arg(flag, value)?)?)
}

fn zxpoly_arg(flag: &'static str, value: &str) -> Result<ZXPoly, CliError> {
    Ok(ZXPoly::new(poly_arg(flag, value)?)?)
}

fn spair_cap() -> Result<usize, CliError> {
    match std::env::var(SPAIR_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{SPAIR_CAP_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_SPAIR_CAP),
    }
}

fn rational_text(r: &Rational) -> String {
    print_canonical(&Polynomial::constant(r.clone()))
}

fn derivation_from_map(m: PolyMap) -> Derivation {
    let mut comps = m.into_components().into_iter();
    let x = comps.next().unwrap_or_default();
    let y = comps.next().unwrap_or_default();
    let z = comps.next().unwrap_or_default();
    Derivation::new(x, y, z)
}

struct Out<'a> {
    w: &'a mut dyn Write,
}

impl Out<'_> {
    fn kv(&mut self, key: &str, value: impl std::fmt::Display) -> Result<(), CliError> {
        writeln!(self.w, "{key}: {value}")?;
        Ok(())
    }

    fn poly(&mut self, key: &str, p: &Polynomial) -> Result<(), CliError> {
        self.kv(key, print_canonical(p))
    }

    fn coord_report(&mut self, f: &Polynomial, r: &CoordinateReport) -> Result<(), CliError> {
        self.poly("f", f)?;
        self.poly("f_x", &f.partial(crate::poly::Var::X))?;
        self.poly("f_y", &f.partial(crate::poly::Var::Y))?;
        self.kv("degree-bound", r.degree_bound)?;
        self.kv("lnd", r.lnd_ok)?;
        if let Some((v, it)) = &r.nilpotency.witness {
            self.kv("lnd-witness", format!("D^{}({v}) = {}", r.nilpotency.bound_used, print_canonical(it)))?;
        }
        self.kv("unimodular", r.unimodular_ok)?;
        self.kv("verdict", r.verdict)
    }
}

fn pair_input(args: &PairArgs) -> Result<ConstructionInput, CliError> {
    let p = zpoly_arg("-p", &args.p)?;
    let a = zxpoly_arg("-a", &args.a)?;
    let b = args.b.as_deref().map(|b| zxpoly_arg("-b", b)).transpose()?;
    Ok(ConstructionInput::from_parts(p, a, b)?)
}

fn execute(cmd: Command, out: &mut Out<'_>) -> Result<(), CliError> {
    match cmd {
        Command::Construct(args) => {
            let input = pair_input(&args)?;
            out.poly("p", input.p().as_poly())?;
            out.poly("a", input.a().as_poly())?;
            out.poly("b", input.b().as_poly())?;
            let r = build_pair(input)?;
            out.poly("f1", &r.f1)?;
            out.poly("f2", &r.f2)?;
            out.poly("g1", &r.g1)?;
            out.poly("g2", &r.g2)?;
            out.kv("inverse-verified", verify_inverse(&r.forward(), &r.inverse())?)?;
        }
        Command::InvertModP { p, a } => {
            let p = zpoly_arg("-p", &p)?;
            let a = zxpoly_arg("-a", &a)?;
            let b = invert_mod_p(&a, &p)?;
            out.poly("b", b.as_poly())?;
            out.kv("inverse-pair", check_inverse_pair(&a, &b, &p)?)?;
        }
        Command::Compose { f, g } => {
            let (f, g) = (map_arg("-f", &f)?, map_arg("-g", &g)?);
            out.kv("result", print_map(&f.compose(&g)?))?;
        }
        Command::VerifyInverse { f, g } => {
            let (f, g) = (map_arg("-f", &f)?, map_arg("-g", &g)?);
            out.kv("inverse", verify_inverse(&f, &g)?)?;
        }
        Command::Classify(args) => {
            let p = zpoly_arg("-p", &args.p)?;
            let a = zxpoly_arg("-a", &args.a)?;
            let v = match args.b.as_deref() {
                Some(b) => classify_with_inverse(&p, &a, &zxpoly_arg("-b", b)?)?,
                None => classify(&p, &a)?,
            };
            out.kv("verdict", v.verdict)?;
            out.kv("d1", v.d1)?;
            if let Some(e1) = v.e1 {
                out.kv("e1", e1)?;
            }
            if let Some(s) = &v.detail {
                out.poly("a0", s.a0.as_poly())?;
                out.poly("a1", s.a1.as_poly())?;
                out.poly("a-tilde", s.a_tilde.as_poly())?;
                out.poly("b-tilde", s.b_tilde.as_poly())?;
                out.poly("c", s.c.as_poly())?;
                out.poly("d", s.d.as_poly())?;
            }
            for st in equivalence_statements(v.verdict == Verdict::Tame) {
                out.kv("equivalent", format!("{} = {} [{}]", st.claim, st.holds, st.basis))?;
            }
        }
        Command::Decompose(args) => {
            let input = pair_input(&args)?;
            let cert = decompose(input.p(), input.a(), input.b())?;
            for (i, f) in cert.factors.iter().enumerate() {
                out.kv(&format!("factor-{}", i + 1), print_map(f))?;
            }
            out.kv("target", print_map(&cert.target))?;
            if let Some(det) = affine_determinant(cert.linear_factor()) {
                out.poly("linear-determinant", &det)?;
            }
            out.kv("reduces-to-linear", cert.reduces_to_linear())?;
            out.kv("recomposes", cert.recomposes())?;
        }
        Command::Nagata => {
            let n = nagata();
            for (i, c) in n.sigma.components().iter().enumerate() {
                out.poly(&format!("sigma-{}", i + 1), c)?;
            }
            let r = &n.construction;
            out.poly("p", r.input.p().as_poly())?;
            out.poly("a", r.input.a().as_poly())?;
            out.poly("b", r.input.b().as_poly())?;
            out.poly("f1", &r.f1)?;
            out.poly("f2", &r.f2)?;
            out.poly("g1", &r.g1)?;
            out.poly("g2", &r.g2)?;
            out.kv("inverse-verified", verify_inverse(&r.forward(), &r.inverse())?)?;
            let s = parse_poly("x*z + y^2").expect("literal");
            let via_exp = exp_map(&Derivation::nagata(), &s)?;
            out.kv("exp-identity", via_exp == n.sigma)?;
            out.kv("swap-identity", n.swap_identity_holds())?;
            out.kv("verdict", classify(r.input.p(), r.input.a())?.verdict)?;
        }
        Command::CoordTest { f } => {
            let f = poly_arg("-f", &f)?;
            let r = coordinate_test_z_with_cap(&f, spair_cap()?)?;
            out.coord_report(&f, &r)?;
        }
        Command::CoordTest2Var { f } => {
            let f = poly_arg("-f", &f)?;
            let r = coordinate_test_2var_with_cap(&f, spair_cap()?)?;
            out.coord_report(&f, &r)?;
        }
        Command::LndCheck { d, f, bound } => {
            let (der, bound) = match (d, f) {
                (Some(d), _) => {
                    let bound = bound.ok_or_else(|| CliError::Usage("--bound is required with -d".into()))?;
                    (derivation_from_map(map_arg("-d", &d)?), bound)
                }
                (None, Some(f)) => {
                    let f = poly_arg("-f", &f)?;
                    let b = bound.unwrap_or_else(|| crate::coordcheck::degree_bound(&f));
                    (jacobian_derivation(&f), b)
                }
                (None, None) => return Err(CliError::Usage("one of -d or -f is required".into())),
            };
            out.poly("D(x)", &der.image_x)?;
            out.poly("D(y)", &der.image_y)?;
            out.poly("D(z)", &der.image_z)?;
            let r = lnd_check(&der, bound)?;
            out.kv("bound", r.bound_used)?;
            out.kv("locally-nilpotent", r.is_lnd)?;
            if let Some((v, it)) = &r.witness {
                out.kv("witness", format!("D^{}({v}) = {}", r.bound_used, print_canonical(it)))?;
            }
        }
        Command::Exp { d, s } => {
            let der = derivation_from_map(map_arg("-d", &d)?);
            let s = poly_arg("-s", &s)?;
            let f = exp_map(&der, &s)?;
            let g = exp_map(&der, &-&s)?;
            out.kv("result", print_map(&f))?;
            out.kv("inverse", print_map(&g))?;
            out.kv("inverse-verified", verify_inverse(&f, &g)?)?;
        }
        Command::GroebnerContainsOne { g } => {
            let gens = g.iter().map(|s| poly_arg("-g", s)).collect::<Result<Vec<_>, _>>()?;
            let (basis, contains) = match buchberger(&gens, MonomialOrder::Degrevlex, spair_cap()?) {
                Ok(gb) => {
                    let unit = gb.is_unit_ideal();
                    (gb.generators, unit)
                }
                Err(GroebnerError::ZeroIdeal) => (Vec::new(), false),
                Err(e) => return Err(e.into()),
            };
            out.kv("order", MonomialOrder::Degrevlex)?;
            out.kv("basis-size", basis.len())?;
            for (i, b) in basis.iter().enumerate() {
                out.poly(&format!("basis-{}", i + 1), b)?;
            }
            out.kv("contains-one", contains)?;
        }
        Command::SliceCriterion { f, a } => {
            let f = poly_arg("-f", &f)?;
            let a = rational_arg("-a", &a)?;
            let r = slice_criterion_report_with_cap(&f, &a, spair_cap()?)?;
            out.poly("f", &f)?;
            out.kv("slice-value", rational_text(&r.slice_value))?;
            out.poly("slice", &crate::coordcheck::fiber_slice(&f, &a))?;
            out.kv("slice-coordinate", r.slice_coordinate_ok)?;
            out.kv("z-lnd", r.z_report.lnd_ok)?;
            out.kv("z-unimodular", r.z_report.unimodular_ok)?;
            out.kv("z-coordinate", r.z_coordinate_ok)?;
            out.kv("hypothesis", r.hypothesis_note)?;
            let conclusion = if r.concludes_z_coordinate() {
                "f is a k[z]-coordinate"
            } else if r.z_coordinate_ok {
                "f is a k[z]-coordinate; the slice at this value is not a coordinate"
            } else {
                "no conclusion: the k[z] coordinate test fails"
            };
            out.kv("conclusion", conclusion)?;
        }
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs one command. Returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let mut sink = Out { w: out };
    match execute(cli.command, &mut sink) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
