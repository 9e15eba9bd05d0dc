//! Command-line front end: argument parsing and the per-subcommand pipelines.

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hasse::{binomial_mod_p, HigherDerivation};
use crate::picard::{ClassOf, PicardContext};
use crate::poly::Poly;
use crate::random::{self, DEFAULT_SEED};
use crate::report::Report;
use crate::russell::{RussellForm, RussellSpec};
use crate::selfcheck;
use crate::skew::{self, IsoDirection, IsoVerdict, SkewPoly};
use crate::tame::TameSetup;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "graded-descent", version, about = "Exact graded algebra in characteristic p")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify forms of a disc under a tame cyclic extension.
    TameClassify(TameArgs),
    /// Build a Russell-type form and check its Hopf structure.
    RussellBuild(FormArgs),
    /// Run the trivialization recursion and verify its identities.
    RussellTrivialize(FormArgs),
    /// Decide triviality of the form attached to a skew polynomial.
    RussellTrivialTest(TrivialTestArgs),
    /// Search for an isomorphism between two forms.
    RussellIsoTest(IsoTestArgs),
    /// Tabulate the standard higher derivation on powers of t.
    DerivationTable(TableArgs),
    /// Logarithmic-derivative classes of a form.
    PicReport(PicArgs),
    /// Run the invariant suite and the worked example.
    Selfcheck(SeedArgs),
}

#[derive(Debug, Args)]
pub struct TameArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub e: u64,
    /// Radius of the disc.
    #[arg(long, default_value = "1")]
    pub r: String,
    #[arg(long, default_value = "q_s")]
    pub s_degree: String,
}

#[derive(Debug, Args)]
pub struct FormArgs {
    /// Coefficient field, e.g. `GF(4)` or `GF(2)(u)`.
    #[arg(long, default_value = "GF(2)")]
    pub field: String,
    /// Expected characteristic; checked against the field.
    #[arg(long)]
    pub p: Option<u32>,
    /// `k~ = k_1[t^{±stride}]`.
    #[arg(long, default_value_t = 2)]
    pub stride: i64,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    #[arg(long, default_value = "q")]
    pub r: String,
    #[arg(long, default_value = "q")]
    pub s: String,
    /// The p-polynomial, in `T1`.
    #[arg(long)]
    pub f: String,
    #[arg(long, default_value = "q")]
    pub t_degree: String,
    /// Adjoin `u^{1/p^e}` to a rational function field.
    #[arg(long, default_value_t = 0)]
    pub coeff_extension: u32,
}

#[derive(Debug, Args)]
pub struct TrivialTestArgs {
    #[arg(long)]
    pub field: String,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    /// Skew polynomial in `F`, e.g. `1 + u*F`.
    #[arg(long)]
    pub tau: String,
    /// Height bound of the brute-force search.
    #[arg(long, default_value_t = 2)]
    pub bound: usize,
}

#[derive(Debug, Args)]
pub struct IsoTestArgs {
    #[arg(long)]
    pub field: String,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    #[arg(long)]
    pub tau: String,
    #[arg(long)]
    pub tau2: String,
    #[arg(long, default_value_t = 2)]
    pub bound: usize,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long, default_value_t = 1)]
    pub mprime: u32,
    #[arg(long, default_value_t = 12)]
    pub imax: i64,
}

#[derive(Debug, Args)]
pub struct SeedArgs {
    #[arg(long, env = "GRADED_DESCENT_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct PicArgs {
    #[command(flatten)]
    pub form: FormArgs,
    /// Number of random elements whose classes are computed.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    /// T-degree cutoff for the random elements.
    #[arg(long, default_value_t = 3)]
    pub degree_bound: u32,
    #[command(flatten)]
    pub seed: SeedArgs,
}

/// Exit code with the text destined for standard output and standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let stdout = if cli.json { report.to_json() + "\n" } else { report.to_text() };
            let code = if report.passed() { EXIT_OK } else { EXIT_DOMAIN };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = if e.is_parse() { EXIT_PARSE } else { EXIT_DOMAIN };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

pub fn execute(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::TameClassify(a) => tame_classify(a),
        Command::RussellBuild(a) => russell_build(a),
        Command::RussellTrivialize(a) => russell_trivialize(a),
        Command::RussellTrivialTest(a) => russell_trivial_test(a),
        Command::RussellIsoTest(a) => russell_iso_test(a),
        Command::DerivationTable(a) => derivation_table(a),
        Command::PicReport(a) => pic_report(a),
        Command::Selfcheck(a) => selfcheck::run(a.seed),
    }
}

fn tame_classify(a: &TameArgs) -> Result<Report> {
    let r: Degree = a.r.parse()?;
    let setup = TameSetup::with_s_degree(a.q, a.e, r.clone(), a.s_degree.parse()?)?;
    let mut report = Report::new("tame-classify");
    report.input("q", a.q).input("e", a.e).input("r", r.to_string()).input("s_degree", &a.s_degree);
    report.field(setup.field());
    let c = setup.classify()?;
    let pairing = setup.inertia_pairing();
    report.result("classes", &c.classes);
    report.result("h1_order", c.h1_order).result("h1_invariant_factors", &c.h1_invariant_factors);
    report.result("h1_check", if c.h1_check { "pass" } else { "fail" });
    report.result("inertia_pairing", &pairing);
    report.check("class_count_equals_h1", c.h1_check, format!("{} classes, |H1| = {}", c.classes.len(), c.h1_order));
    report.check("descended_rings_verified", c.classes.iter().all(|k| k.verified), "generator s^-j T, degree <= 8");
    report.check("inertia_pairing_perfect", pairing.perfect, format!("|Hom(Z/e, GF(q)^x)| = {}", pairing.hom_group_order));
    Ok(report)
}

fn build_form(a: &FormArgs, report: &mut Report) -> Result<RussellForm> {
    let field = Field::parse(&a.field)?;
    if let Some(p) = a.p {
        if p != field.characteristic() {
            return Err(Error::InvalidArgument(format!("--p {p} does not match {}", a.field)));
        }
    }
    report
        .input("field", &a.field)
        .input("stride", a.stride)
        .input("n", a.n)
        .input("r", &a.r)
        .input("s", &a.s)
        .input("f", &a.f)
        .input("t_degree", &a.t_degree)
        .input("coeff_extension", a.coeff_extension);
    report.field(&field);
    let spec = RussellSpec::parse(&field, &a.t_degree.parse()?, a.stride, a.n, &a.r.parse()?, &a.s.parse()?, &a.f)?
        .with_coeff_extension(a.coeff_extension);
    RussellForm::new(spec)
}

fn russell_build(a: &FormArgs) -> Result<Report> {
    let mut report = Report::new("russell-build");
    let form = build_form(a, &mut report)?;
    let hopf = form.hopf_check();
    let lhs = form.y().pow(form.pn() as u64, form.ell());
    let relation = format!("{} = {}", form.format(&lhs), form.format(&form.f_of(&form.x())));
    report.result("ring", form.ring().spec()).result("relation", relation);
    report.result("descriptor", form.spec().descriptor()).result("hopf", &hopf);
    report.check("hopf_structure", hopf.passed(), "coproduct, counit, antipode respect the relation");
    Ok(report)
}

fn russell_trivialize(a: &FormArgs) -> Result<Report> {
    let mut report = Report::new("russell-trivialize");
    let form = build_form(a, &mut report)?;
    report.field(form.ell());
    let tr = form.trivialize()?;
    report.result("trivialization", tr.report(&form));
    for (name, ok) in &tr.checks {
        report.check(name, *ok, "");
    }
    Ok(report)
}

fn russell_trivial_test(a: &TrivialTestArgs) -> Result<Report> {
    let field = Field::parse(&a.field)?;
    let tau = SkewPoly::parse(&a.tau, &field)?;
    let mut report = Report::new("russell-trivial-test");
    report.input("field", &a.field).input("n", a.n).input("tau", tau.format(&field)).input("bound", a.bound);
    report.field(&field);
    let t = skew::triviality_test(&tau, a.n, &field)?;
    let search = skew::triviality_by_search(&tau, a.n, a.bound, &field)?;
    report.result("verdict", if t.trivial { "trivial" } else { "nontrivial" });
    report.result("witness", t.witness.as_ref().map(|c| field.format(c)));
    report.result("search_witness", search.as_ref().map(|c| field.format(c)));
    let witness_ok = t.witness.as_ref().is_none_or(|c| skew::is_twisted_by(&tau, c, a.n, &field));
    report.check("witness_twists_tau", witness_ok, "every coefficient of tau*c is a p^n-th power");
    report.check("search_agrees", t.trivial || search.is_none(), format!("height <= {}", a.bound));
    Ok(report)
}

fn iso_json(v: &IsoVerdict, field: &Field) -> serde_json::Value {
    match v {
        IsoVerdict::Isomorphic { sigma, c, direction } => json!({
            "verdict": "proved isomorphic",
            "sigma": sigma.format(field),
            "c": field.format(c),
            "direction": direction,
        }),
        IsoVerdict::NotFound { candidates } => json!({
            "verdict": "no witness within bound",
            "candidates": candidates,
        }),
    }
}

fn iso_holds(v: &IsoVerdict, tau: &SkewPoly, tau2: &SkewPoly, n: u32, field: &Field, modulus: Option<usize>) -> bool {
    let IsoVerdict::Isomorphic { sigma, c, direction } = v else { return true };
    let (lhs, rhs) = match direction {
        IsoDirection::Forward => (tau2, tau),
        IsoDirection::Backward => (tau, tau2),
    };
    let twisted = sigma.twist_coeffs(n, field);
    match modulus {
        None => lhs.mul(&SkewPoly::constant(c.clone()), field) == twisted.mul(rhs, field),
        Some(m) => {
            let l = lhs.mul(&SkewPoly::constant(c.clone()), field).truncate(m);
            l == twisted.mul(rhs, field).truncate(m)
        }
    }
}

fn russell_iso_test(a: &IsoTestArgs) -> Result<Report> {
    let field = Field::parse(&a.field)?;
    let tau = SkewPoly::parse(&a.tau, &field)?;
    let tau2 = SkewPoly::parse(&a.tau2, &field)?;
    let mut report = Report::new("russell-iso-test");
    report.input("field", &a.field).input("n", a.n).input("bound", a.bound);
    report.input("tau", tau.format(&field)).input("tau2", tau2.format(&field));
    report.field(&field);
    let exact = skew::iso_test_exact(&tau, &tau2, a.n, a.bound, &field)?;
    let modf = skew::iso_test_mod(&tau, &tau2, a.n, a.bound, &field)?;
    report.result("exact", iso_json(&exact, &field)).result("mod_f_n", iso_json(&modf, &field));
    report.check("exact_witness_verified", iso_holds(&exact, &tau, &tau2, a.n, &field, None), "tau' c = sigma^(n) tau");
    let m = Some(a.n as usize);
    report.check("mod_witness_verified", iso_holds(&modf, &tau, &tau2, a.n, &field, m), "modulo F^n");
    Ok(report)
}

fn derivation_table(a: &TableArgs) -> Result<Report> {
    let field = Field::finite(a.p, 1)?;
    if a.imax < 0 {
        return Err(Error::InvalidArgument("--imax must be nonnegative".into()));
    }
    let d = HigherDerivation::standard(&field, a.mprime, 0);
    let mut report = Report::new("derivation-table");
    report.input("p", a.p).input("mprime", a.mprime).input("imax", a.imax);
    report.field(&field);
    let rows = d.binomial_table(a.imax);
    let mut ok = true;
    let table: Vec<_> = rows
        .iter()
        .map(|(i, j, c)| {
            let lucas = binomial_mod_p(*i as u64, *j as u64, a.p as u64);
            ok &= c.single_term && c.value == field.format(&field.from_int(lucas as i64));
            json!({"i": i, "j": j, "coefficient": c.value})
        })
        .collect();
    report.result("rank", d.rank()).result("table", table);
    report.check("binomials_match_lucas", ok, "d_j t^i = C(i,j) t^(i-j) mod p");
    Ok(report)
}

fn pic_report(a: &PicArgs) -> Result<Report> {
    let mut report = Report::new("pic-report");
    let form = build_form(&a.form, &mut report)?;
    report.input("samples", a.samples).input("degree_bound", a.degree_bound).input("seed", a.seed.seed);
    let ctx = PicardContext::new(form.clone())?;
    let field = ctx.field().clone();
    let pn = form.pn() as u64;
    let dt = ctx.dt_criterion()?;
    report.result("dt_criterion", &dt);
    report.result("lprime_order", ctx.lprime_elements().len());
    match ctx.pth_root_criterion() {
        Ok(v) => {
            report.check("pth_root_consistent", v.dt_consistent, "");
            report.result("pth_root_criterion", v);
        }
        Err(Error::WrongFamily) => {
            report.result("pth_root_criterion", "not applicable (needs n = 1 and s = r)");
        }
        Err(e) => return Err(e),
    }
    let mut rng = random::rng(a.seed.seed);
    let sampled = ctx.sampled_classes(a.degree_bound, a.samples, &mut rng)?;
    let exponent_ok = sampled.iter().all(|c| pn.is_multiple_of(c.order));
    let class_t = match ctx.class_of(&Poly::var(&field, 0, 1))? {
        ClassOf::Class(c) => ctx.format_class(&c),
        ClassOf::NotInLB => "not in L_B".into(),
    };
    report.result("class_of_T", class_t).result("sampled_classes", &sampled);
    report.check("exponent_divides_pn", exponent_ok, format!("{} sampled classes", sampled.len()));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("graded-descent").chain(args.iter().copied()))
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["tame-classify", "--q", "5", "--e", "2"]).code, 0);
        assert_eq!(run_args(&["tame-classify", "--q", "five", "--e", "2"]).code, 1);
        assert_eq!(run_args(&["russell-trivial-test", "--field", "GF(2)(u", "--tau", "F"]).code, 1);
        assert_eq!(run_args(&["tame-classify", "--q", "5", "--e", "3"]).code, 2);
        assert_eq!(run_args(&["--help"]).code, 0);
    }

    #[test]
    fn trivial_test_example() {
        let out = run_args(&["russell-trivial-test", "--field", "GF(2)(u)", "--n", "1", "--tau", "1 + u*F", "--json"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["results"]["verdict"], "nontrivial");
    }
}
