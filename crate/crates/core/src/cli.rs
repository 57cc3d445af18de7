//! Command-line front end: argument parsing, verification suites over
//! parameter grids, and report rendering. The `qhopf` binary is a thin
//! wrapper around [`execute`].

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::clebsch::{cg_decompose_realization, classify_symmetry, verify_multiplet, CGState};
use crate::error::{Error, Result};
use crate::exchange::{find_intertwiner, intertwiner_u, verify_intertwiner};
use crate::hopf::{
    cocommutativity_residual, dressing, raising_commutator, realize, verify_antipode,
    verify_coassociativity, verify_counit, verify_homomorphism, verify_homomorphism_against,
    verify_star, CoproductFamily, CoproductKind, RelationTarget,
};
use crate::irrep::{build_classical_irrep, build_q_irrep, casimir_matrix, Irrep};
use crate::linalg::{commutator, max_abs, max_diff, CMatrix};
use crate::qcore::{casimir_series_fit, predicted_series, HalfInt, QPoint};
use crate::report::{matrix_json, ComplexScalar, VerificationReport};
use crate::C64;

pub const DEFAULT_TOL: f64 = 1e-10;
/// Lower bound on the cocommutativity residual where non-cocommutativity is expected.
pub const SEPARATION: f64 = 0.5;
/// How close `[ΔJ+, ΔJ-]` must come to `-2ΔJ0` near `q = -1`.
pub const NAIVE_LIMIT_TOL: f64 = 1e-4;
pub const NEAR_MINUS_ONE_DELTA: f64 = 1e-6;
/// Relative tolerance on fitted series coefficients.
pub const SERIES_TOL: f64 = 1e-3;
/// Absolute bound on the `ε⁻²` coefficient for integer spins.
pub const FINITE_LIMIT_TOL: f64 = 1e-6;
pub const DEFAULT_DELTAS: [f64; 4] = [1e-2, 5e-3, 2e-3, 1e-3];

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_NO_INTERTWINER: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "qhopf",
    version,
    about = "Verify twisted su_q(2) coproducts on spin-j tensor products"
)]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    /// Residual tolerance for pass/fail.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,

    /// Emit JSON: one object per line (`--json`) or a single array (`--json=array`).
    #[arg(long, global = true, num_args = 0..=1, require_equals = true, default_missing_value = "lines")]
    pub json: Option<JsonMode>,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum JsonMode {
    Lines,
    Array,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the generator and Casimir matrices of a spin-j irrep.
    Irrep(IrrepArgs),
    /// Run verification suites over a parameter grid.
    Verify(VerifyArgs),
    /// Decompose j1 ⊗ j2 into multiplets and classify exchange symmetry.
    Cg(CgArgs),
    /// Fit the Laurent series of [j][j+1] as q → -1.
    Limit(LimitArgs),
    /// Solve for a unitary intertwiner between two twists.
    Intertwine(IntertwineArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Standard,
    Modified,
    ModifiedPrimed,
}

impl From<FamilyArg> for CoproductKind {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Standard => CoproductKind::StandardDJ,
            FamilyArg::Modified => CoproductKind::Modified,
            FamilyArg::ModifiedPrimed => CoproductKind::ModifiedPrimed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Homomorphism,
    Coassoc,
    Counit,
    Antipode,
    Star,
    Cocomm,
    Intertwiner,
    Multiplet,
    All,
}

fn parse_half(s: &str) -> std::result::Result<HalfInt, String> {
    let j = s.parse::<HalfInt>().map_err(|e| e.to_string())?;
    if j.is_negative() {
        return Err(format!("spin must be non-negative, got {j}"));
    }
    Ok(j)
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct IrrepArgs {
    #[arg(long, value_parser = parse_half)]
    pub j: HalfInt,
    #[arg(long, default_value_t = 1.0)]
    pub q: f64,
    #[arg(long, default_value_t = 0.0)]
    pub theta: f64,
    /// Use the q-deformed matrix elements.
    #[arg(long)]
    pub deformed: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, value_enum, default_value = "modified")]
    pub family: FamilyArg,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub n: Vec<i64>,
    /// Moduli of q (negative values mean phase π).
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub q: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub theta: Vec<f64>,
    #[arg(long, value_parser = parse_half, default_value = "1/2")]
    pub j1: HalfInt,
    #[arg(long, value_parser = parse_half, default_value = "1/2")]
    pub j2: HalfInt,
    #[arg(long, value_parser = parse_half, default_value = "1/2")]
    pub j3: HalfInt,
    /// Replace the q grid by q = (1 + 1e-6, π) and test the su(2) relation.
    #[arg(long)]
    pub q_near_minus_one: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct CgArgs {
    #[arg(long, value_enum, default_value = "modified-primed")]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 0)]
    pub n: i64,
    #[arg(long, default_value_t = 1.0)]
    pub q: f64,
    #[arg(long, default_value_t = 0.0)]
    pub theta: f64,
    #[arg(long, value_parser = parse_half, default_value = "1/2")]
    pub j1: HalfInt,
    #[arg(long, value_parser = parse_half, default_value = "1/2")]
    pub j2: HalfInt,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct LimitArgs {
    #[arg(long, value_parser = parse_half)]
    pub j: HalfInt,
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_DELTAS)]
    pub deltas: Vec<f64>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct IntertwineArgs {
    #[arg(long, value_enum, default_value = "modified-primed")]
    pub family: FamilyArg,
    #[arg(long, value_parser = parse_half, default_value = "1/2")]
    pub j1: HalfInt,
    #[arg(long, value_parser = parse_half, default_value = "1/2")]
    pub j2: HalfInt,
    #[arg(long, default_value_t = 1)]
    pub n_source: i64,
    #[arg(long, default_value_t = 0)]
    pub n_target: i64,
    #[arg(long, default_value_t = 1.0)]
    pub q: f64,
    #[arg(long, default_value_t = 0.0)]
    pub theta: f64,
    /// Modulus of q for the target family (defaults to --q).
    #[arg(long)]
    pub q_target: Option<f64>,
}

/// Result of one CLI invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Invocation {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Reports plus any extra text shown in human-readable mode.
#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub reports: Vec<VerificationReport>,
    pub text: String,
}

impl Outcome {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::NoIntertwiner { .. } => EXIT_NO_INTERTWINER,
        Error::InvalidHalfInt(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn execute<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Invocation {
                    exit_code: code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Invocation {
                    exit_code: code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            return Invocation {
                exit_code: exit_code_for(&e),
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let rendered = render(&outcome, cli.json);
    let exit_code = if outcome.all_pass() {
        EXIT_OK
    } else {
        EXIT_FAIL
    };
    match &cli.out {
        Some(path) => match std::fs::write(path, &rendered) {
            Ok(()) => Invocation {
                exit_code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Invocation {
                exit_code: EXIT_DOMAIN,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Invocation {
            exit_code,
            stdout: rendered,
            stderr: String::new(),
        },
    }
}

pub fn render(outcome: &Outcome, json: Option<JsonMode>) -> String {
    match json {
        Some(JsonMode::Lines) => outcome
            .reports
            .iter()
            .map(|r| serde_json::to_string(r).expect("report serializes") + "\n")
            .collect(),
        Some(JsonMode::Array) => {
            serde_json::to_string(&outcome.reports).expect("reports serialize") + "\n"
        }
        None => {
            let mut s = outcome.text.clone();
            for r in &outcome.reports {
                s.push_str(&r.text_line());
                s.push('\n');
            }
            s
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Irrep(a) => cmd_irrep(a, cli.tol),
        Command::Verify(a) => cmd_verify(a, cli.tol),
        Command::Cg(a) => cmd_cg(a, cli.tol),
        Command::Limit(a) => cmd_limit(a),
        Command::Intertwine(a) => cmd_intertwine(a, cli.tol),
    }
}

fn qpoint(modulus: f64, theta: f64) -> Result<QPoint> {
    if modulus < 0.0 {
        QPoint::new(-modulus, theta + std::f64::consts::PI)
    } else {
        QPoint::new(modulus, theta)
    }
}

fn format_matrix(m: &CMatrix) -> String {
    let mut s = String::new();
    for r in 0..m.nrows() {
        let cells: Vec<String> = (0..m.ncols()).map(|c| format_complex(m[(r, c)])).collect();
        let _ = writeln!(s, "  [{}]", cells.join(", "));
    }
    s
}

fn format_complex(z: C64) -> String {
    let clean = |x: f64| if x.abs() < 1e-15 { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re:.6}")
    } else if re == 0.0 {
        format!("{im:.6}i")
    } else {
        format!("{re:.6}{im:+.6}i")
    }
}

/// Generator relations of a single irrep: `[J0, J±] = ±J±` and
/// `[J+, J-] = 2J0` (classical) or `[2J0]_q` (deformed).
fn irrep_relation_residual(rep: &Irrep) -> Result<f64> {
    let g = &rep.gens;
    let target = if rep.deformed {
        crate::linalg::diag(
            g.weights()
                .into_iter()
                .map(|m| crate::qcore::q_number(rep.q, 2.0 * m))
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        &g.j0 * C64::new(2.0, 0.0)
    };
    Ok(max_diff(&commutator(&g.jp, &g.jm), &target)
        .max(max_diff(&commutator(&g.j0, &g.jp), &g.jp))
        .max(max_diff(&commutator(&g.j0, &g.jm), &(-&g.jm))))
}

pub fn cmd_irrep(a: &IrrepArgs, tol: f64) -> Result<Outcome> {
    let q = qpoint(a.q, a.theta)?;
    let rep = if a.deformed {
        build_q_irrep(a.j, q)?
    } else {
        build_classical_irrep(a.j)?
    };
    let casimir = casimir_matrix(&rep)?;
    let residual = irrep_relation_residual(&rep)?;

    let mut text = String::new();
    let _ = writeln!(
        text,
        "spin {} ({}), q = ({}, {})",
        a.j,
        if rep.deformed {
            "deformed"
        } else {
            "classical"
        },
        rep.q.modulus(),
        rep.q.phase()
    );
    for (name, m) in [
        ("J+", rep.jp()),
        ("J-", rep.jm()),
        ("J0", rep.j0()),
        ("C", &casimir),
    ] {
        let _ = writeln!(text, "{name} =");
        text.push_str(&format_matrix(m));
    }
    let family = CoproductFamily::standard(rep.q);
    let report =
        VerificationReport::residual_check("irrep-relations", family, vec![a.j], residual, tol)
            .with_detail(json!({
                "deformed": rep.deformed,
                "jp": matrix_json(rep.jp()),
                "jm": matrix_json(rep.jm()),
                "j0": matrix_json(rep.j0()),
                "casimir": matrix_json(&casimir),
            }));
    Ok(Outcome {
        reports: vec![report],
        text,
    })
}

/// Expected `Δ = Δ'` from the scalar dressings alone: every factor with a
/// nonzero spin must see `A±(m) = B±(m)` on the other factor's weights.
pub fn expected_cocommutative(family: CoproductFamily, j1: HalfInt, j2: HalfInt) -> bool {
    if j1 == HalfInt::ZERO || j2 == HalfInt::ZERO {
        return true;
    }
    let d = dressing(family);
    let agrees = |j: HalfInt| {
        j.weights().all(|m| {
            let m = m.value();
            (d.a_plus(m) - d.b_plus(m)).norm() <= 1e-14
                && (d.a_minus(m) - d.b_minus(m)).norm() <= 1e-14
        })
    };
    agrees(j1) && agrees(j2)
}

#[derive(Debug, Clone, Copy)]
struct GridPoint {
    family: CoproductFamily,
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
}

fn grid(a: &VerifyArgs) -> Result<Vec<GridPoint>> {
    let kind: CoproductKind = a.family.into();
    let qs: Vec<QPoint> = if a.q_near_minus_one {
        vec![QPoint::near_minus_one(NEAR_MINUS_ONE_DELTA)?]
    } else {
        let mut v = Vec::new();
        for &r in &a.q {
            for &t in &a.theta {
                v.push(qpoint(r, t)?);
            }
        }
        v
    };
    let ns: Vec<i64> = if kind == CoproductKind::StandardDJ {
        vec![0]
    } else {
        a.n.clone()
    };
    let mut points = Vec::new();
    for q in qs {
        for &n in &ns {
            points.push(GridPoint {
                family: CoproductFamily::new(kind, q, n),
                j1: a.j1,
                j2: a.j2,
                j3: a.j3,
            });
        }
    }
    Ok(points)
}

fn suite_reports(
    suite: Suite,
    p: GridPoint,
    tol: f64,
    near_minus_one: bool,
) -> Result<Vec<VerificationReport>> {
    let f = p.family;
    let pair = vec![p.j1, p.j2];
    let mut out = Vec::new();
    let singles: Vec<HalfInt> = if p.j1 == p.j2 {
        vec![p.j1]
    } else {
        vec![p.j1, p.j2]
    };
    let wants = |s: Suite| suite == s || suite == Suite::All;

    if wants(Suite::Homomorphism) {
        let t = realize(f, p.j1, p.j2)?;
        if near_minus_one {
            let classical = verify_homomorphism_against(&t, RelationTarget::Classical)?;
            let anti = max_diff(&raising_commutator(&t), &(t.dj0() * C64::new(-2.0, 0.0)));
            let deformed = verify_homomorphism(&t)?;
            out.push(VerificationReport {
                check: "homomorphism-su2-limit".into(),
                family: f,
                reps: pair.clone(),
                residual: classical,
                tolerance: NAIVE_LIMIT_TOL,
                pass: anti <= NAIVE_LIMIT_TOL,
                detail: Some(json!({
                    "target": "classical",
                    "anti_relation_residual": anti,
                    "deformed_residual": deformed,
                    "reproduces_naive_limit_failure": anti <= NAIVE_LIMIT_TOL,
                })),
            });
        } else {
            let r = verify_homomorphism(&t)?;
            out.push(VerificationReport::residual_check(
                "homomorphism",
                f,
                pair.clone(),
                r,
                tol,
            ));
        }
    }
    if wants(Suite::Coassoc) {
        let r = verify_coassociativity(f, p.j1, p.j2, p.j3)?;
        out.push(VerificationReport::residual_check(
            "coassociativity",
            f,
            vec![p.j1, p.j2, p.j3],
            r,
            tol,
        ));
    }
    if wants(Suite::Counit) {
        for &j in &singles {
            let r = verify_counit(f, j)?;
            out.push(VerificationReport::residual_check(
                "counit",
                f,
                vec![j],
                r,
                tol,
            ));
        }
    }
    if wants(Suite::Antipode) {
        for &j in &singles {
            let r = verify_antipode(f, j)?;
            let mut rep = VerificationReport::residual_check("antipode", f, vec![j], r, tol);
            if f.kind == CoproductKind::ModifiedPrimed {
                rep = rep.with_detail(json!({"antipode": "derived from the primed generators"}));
            }
            out.push(rep);
        }
    }
    if wants(Suite::Star) && f.q.is_real_positive() {
        let t = realize(f, p.j1, p.j2)?;
        out.push(VerificationReport::residual_check(
            "star",
            f,
            pair.clone(),
            verify_star(&t),
            tol,
        ));
    }
    if wants(Suite::Cocomm) {
        let r = cocommutativity_residual(f, p.j1, p.j2)?;
        let cocommutative = expected_cocommutative(f, p.j1, p.j2);
        let (pass, tolerance, expect) = if cocommutative {
            (r <= tol, tol, "cocommutative")
        } else {
            (r > SEPARATION, SEPARATION, "non-cocommutative")
        };
        out.push(VerificationReport {
            check: "cocommutativity".into(),
            family: f,
            reps: pair.clone(),
            residual: r,
            tolerance,
            pass,
            detail: Some(json!({"expect": expect})),
        });
    }
    if wants(Suite::Intertwiner) {
        let target = f.with_n(0);
        let rep = match find_intertwiner(f, target, p.j1, p.j2) {
            Ok(found) => VerificationReport::residual_check(
                "intertwiner",
                f,
                pair.clone(),
                found.residual,
                tol,
            )
            .with_detail(json!({
                "target_n": target.n,
                "commutant_dim": found.commutant_dim,
                "w": matrix_json(&found.w),
            })),
            Err(Error::NoIntertwiner { residual }) => VerificationReport {
                check: "intertwiner".into(),
                family: f,
                reps: pair.clone(),
                residual,
                tolerance: tol,
                pass: false,
                detail: Some(json!({"target_n": target.n, "error": "no unitary intertwiner"})),
            },
            Err(e) => return Err(e),
        };
        out.push(rep);
        let spin_halves = p.j1 == HalfInt::HALF && p.j2 == HalfInt::HALF;
        if f.kind == CoproductKind::ModifiedPrimed && f.q.is_one() && spin_halves && f.n % 2 != 0 {
            let r = verify_intertwiner(intertwiner_u().matrix(), f, target, p.j1, p.j2)?;
            out.push(VerificationReport::residual_check(
                "intertwiner-fixed-u",
                f,
                pair.clone(),
                r,
                tol,
            ));
        }
    }
    // Orthonormal towers need the star structure, so `all` only decomposes at real q > 0.
    if suite == Suite::Multiplet || (suite == Suite::All && f.q.is_real_positive()) {
        let t = realize(f, p.j1, p.j2)?;
        let states = match cg_decompose_realization(&t) {
            Ok(states) => states,
            Err(e @ (Error::KernelDimensionMismatch { .. } | Error::TowerCollapsed { .. })) => {
                out.push(VerificationReport {
                    check: "multiplet".into(),
                    family: f,
                    reps: pair,
                    residual: 1.0,
                    tolerance: tol,
                    pass: false,
                    detail: Some(json!({"error": e.to_string()})),
                });
                return Ok(out);
            }
            Err(e) => return Err(e),
        };
        let r = verify_multiplet(&states, &t);
        let count: usize = states.len();
        let complete = count == t.dim();
        let mut rep = VerificationReport::residual_check("multiplet", f, pair.clone(), r, tol)
            .with_detail(json!({"states": count, "dimension": t.dim()}));
        rep.pass &= complete;
        out.push(rep);
    }
    Ok(out)
}

pub fn cmd_verify(a: &VerifyArgs, tol: f64) -> Result<Outcome> {
    let points = grid(a)?;
    let per_point: Vec<Result<Vec<VerificationReport>>> = points
        .par_iter()
        .map(|p| suite_reports(a.suite, *p, tol, a.q_near_minus_one))
        .collect();
    let mut reports = Vec::new();
    for r in per_point {
        reports.extend(r?);
    }
    Ok(Outcome {
        reports,
        text: String::new(),
    })
}

fn basis_label(m1: HalfInt, m2: HalfInt) -> String {
    let sign = |m: HalfInt| {
        if m.is_negative() {
            format!("{m}")
        } else {
            format!("+{m}")
        }
    };
    format!("|{},{}>", sign(m1), sign(m2))
}

fn state_terms(s: &CGState) -> Vec<(HalfInt, HalfInt, C64)> {
    let mut terms = Vec::new();
    for m1 in s.left.weights() {
        for m2 in s.right.weights() {
            let c = s.coeff(m1, m2);
            if c.norm() > 1e-12 {
                terms.push((m1, m2, c));
            }
        }
    }
    terms
}

pub fn cmd_cg(a: &CgArgs, tol: f64) -> Result<Outcome> {
    let q = qpoint(a.q, a.theta)?;
    let family = CoproductFamily::new(a.family.into(), q, a.n);
    let t = realize(family, a.j1, a.j2)?;
    let states = cg_decompose_realization(&t)?;
    let residual = verify_multiplet(&states, &t);

    let mut text = String::new();
    let mut rows = Vec::new();
    for s in &states {
        let symmetry = if a.j1 == a.j2 {
            Some(classify_symmetry(s, tol)?)
        } else {
            None
        };
        let terms = state_terms(s);
        let rendered: Vec<String> = terms
            .iter()
            .map(|(m1, m2, c)| format!("({}){}", format_complex(*c), basis_label(*m1, *m2)))
            .collect();
        let ratio = (terms.len() == 2).then(|| terms[0].2 / terms[1].2);
        let _ = write!(
            text,
            "{:<8} {:<14} {}",
            s.label(),
            symmetry.map_or("-".to_string(), |c| format!("{c:?}")),
            rendered.join(" + ")
        );
        if let Some(r) = ratio {
            let _ = write!(text, "   ratio = {}", format_complex(r));
        }
        text.push('\n');
        rows.push(json!({
            "j": s.j_total,
            "m": s.m,
            "symmetry": symmetry,
            "coeffs": terms.iter().map(|(m1, m2, c)| json!({"m1": m1, "m2": m2, "value": ComplexScalar::from(*c)})).collect::<Vec<Value>>(),
            "ratio": ratio.map(ComplexScalar::from),
        }));
    }
    let mut report =
        VerificationReport::residual_check("cg", family, vec![a.j1, a.j2], residual, tol)
            .with_detail(json!({"states": rows}));
    report.pass &= states.len() == t.dim();
    Ok(Outcome {
        reports: vec![report],
        text,
    })
}

pub fn cmd_limit(a: &LimitArgs) -> Result<Outcome> {
    let fit = casimir_series_fit(a.j, &a.deltas)?;
    let (p_neg2, p_0, p_2) = predicted_series(a.j);
    let rel = |got: f64, want: f64| (got - want).abs() / want.abs();
    let (residual, finite_ok) = if a.j.is_integer() {
        (rel(fit.c_0, p_0), fit.c_neg2.abs() <= FINITE_LIMIT_TOL)
    } else {
        let c2 = p_2.expect("half-odd spins have an ε² prediction");
        (
            rel(fit.c_neg2, p_neg2)
                .max(rel(fit.c_0, p_0))
                .max(rel(fit.c_2, c2)),
            true,
        )
    };
    let mut text = String::new();
    let _ = writeln!(text, "[j][j+1] near q = -1, j = {}", a.j);
    let _ = writeln!(
        text,
        "  c_neg2 fitted {:+.9e} predicted {:+.9e}",
        fit.c_neg2, p_neg2
    );
    let _ = writeln!(
        text,
        "  c_0    fitted {:+.9e} predicted {:+.9e}",
        fit.c_0, p_0
    );
    match p_2 {
        Some(p) => {
            let _ = writeln!(
                text,
                "  c_2    fitted {:+.9e} predicted {:+.9e}",
                fit.c_2, p
            );
        }
        None => {
            let _ = writeln!(
                text,
                "  c_2    fitted {:+.9e} (finite limit, no prediction)",
                fit.c_2
            );
        }
    }
    let _ = writeln!(text, "  fit residual {:.3e}", fit.residual);
    let report = VerificationReport::residual_check(
        "casimir-limit",
        CoproductFamily::standard(QPoint::minus_one()),
        vec![a.j],
        residual,
        SERIES_TOL,
    )
    .with_detail(json!({
        "fit": fit,
        "predicted": {"c_neg2": p_neg2, "c_0": p_0, "c_2": p_2},
        "deltas": a.deltas,
        "divergent": !a.j.is_integer(),
    }));
    let mut report = report;
    report.pass &= finite_ok;
    Ok(Outcome {
        reports: vec![report],
        text,
    })
}

pub fn cmd_intertwine(a: &IntertwineArgs, tol: f64) -> Result<Outcome> {
    let kind: CoproductKind = a.family.into();
    let q = qpoint(a.q, a.theta)?;
    let q_target = match a.q_target {
        Some(r) => qpoint(r, a.theta)?,
        None => q,
    };
    let source = CoproductFamily::new(kind, q, a.n_source);
    let target = CoproductFamily::new(kind, q_target, a.n_target);
    let found = find_intertwiner(source, target, a.j1, a.j2)?;

    let mut text = String::new();
    let _ = writeln!(
        text,
        "W ({} -> {}, commutant dimension {}) =",
        source.n, target.n, found.commutant_dim
    );
    text.push_str(&format_matrix(&found.w));

    let mut detail = json!({
        "target": target,
        "commutant_dim": found.commutant_dim,
        "w": matrix_json(&found.w),
    });
    let spin_halves = a.j1 == HalfInt::HALF && a.j2 == HalfInt::HALF;
    let odd_to_even = kind == CoproductKind::ModifiedPrimed && (a.n_source - a.n_target) % 2 != 0;
    if spin_halves && q.is_one() && q_target.is_one() && odd_to_even {
        let u = intertwiner_u();
        let fixed = verify_intertwiner(u.matrix(), source, target, a.j1, a.j2)?;
        let relative = u.matrix().adjoint() * &found.w;
        let s = realize(source, a.j1, a.j2)?;
        let commutant = max_abs(&commutator(&relative, s.djp()))
            .max(max_abs(&commutator(&relative, s.djm())))
            .max(max_abs(&commutator(&relative, s.dj0())));
        let _ = writeln!(
            text,
            "fixed U residual {fixed:.3e}; U†W commutes with source to {commutant:.3e}"
        );
        detail["fixed_u_residual"] = json!(fixed);
        detail["u_dagger_w_commutant_residual"] = json!(commutant);
    }
    let report = VerificationReport::residual_check(
        "intertwine",
        source,
        vec![a.j1, a.j2],
        found.residual,
        tol,
    )
    .with_detail(detail);
    Ok(Outcome {
        reports: vec![report],
        text,
    })
}
