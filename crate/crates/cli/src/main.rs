//! Command-line front end for the chain-ring engine.
//!
//! Subcommands: `classify` (isomorphism types of `(a, e, f, p)`, cached),
//! `ring-info` (structural data of one ring, including its `Δ` when within
//! budget), `delta`, `orbits`, `derive-g`, `units`, and `verify-examples`
//! (the published-value harness).  Polynomials are read in the text grammar
//! of [`poly_text`], e.g. `--q "Y^2 - 2"`, or in the explicit encoding
//! `[[6],[0],[1]]`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 enumeration budget exceeded.  All output is deterministic: the same
//! invocation prints the same bytes, whatever `--jobs` says.

mod cache;
mod poly_text;
mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use chainring::{
    aut_count, delta, derive_presenting, unit_group_invariants, ActionContext, Budget, ChainRing,
    ClassificationReport, EisensteinPoly, GaloisRing, GrPoly, RingInfo, TypeParams,
};
use clap::{Args, Parser, Subcommand};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] chainring::Error),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Cache(String),
    #[error("{context}: {source}")]
    Io { context: String, source: std::io::Error },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(chainring::Error::BudgetExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "chainring",
    version,
    about = "Finite chain rings: exact construction, the group action on Eisenstein polynomials, and isomorphism classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the isomorphism types with invariants (a, e, f, p).
    Classify(ClassifyArgs),
    /// Structural data of one ring, with its Delta set when within budget.
    RingInfo(RingInfoArgs),
    /// The Delta invariant of one ring, next to the orbit partition.
    Delta(DeltaArgs),
    /// The orbit partition of the Eisenstein set nabla.
    Orbits(OrbitsArgs),
    /// Derive the presenting polynomial from unit data eps.
    DeriveG(DeriveGArgs),
    /// Unit-group structure of a ring and its coefficient ring.
    Units(UnitsArgs),
    /// Recompute the worked examples and compare with their published values.
    VerifyExamples(VerifyArgs),
}

#[derive(Args)]
struct TypeArgs {
    /// Nilpotency index of the maximal ideal.
    #[arg(long)]
    a: u32,
    /// Ramification index, the valuation of p.
    #[arg(long)]
    e: u32,
    /// Residue degree: the residue field is GF(p^f).
    #[arg(long)]
    f: u32,
    /// Residue characteristic; must be prime.
    #[arg(long)]
    p: u64,
}

impl TypeArgs {
    fn params(&self) -> CliResult<TypeParams> {
        Ok(TypeParams::new(self.a, self.e, self.f, self.p)?)
    }
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest Eisenstein set nabla that will be materialized.
    #[arg(long, default_value_t = 100_000)]
    max_nabla: u128,
    /// Largest ring or uniformizer set that will be scanned element-wise.
    #[arg(long, default_value_t = 1_000_000)]
    max_ring: u128,
}

impl BudgetArgs {
    fn budget(&self) -> CliResult<Budget> {
        if self.max_nabla == 0 || self.max_ring == 0 {
            return Err(CliError::Parse("budgets must be positive".into()));
        }
        Ok(Budget { max_nabla: self.max_nabla, max_ring: self.max_ring })
    }
}

#[derive(Args)]
struct JobsArg {
    /// Worker threads for orbit expansion and root scans.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

impl JobsArg {
    fn jobs(&self) -> CliResult<usize> {
        if self.jobs == 0 {
            return Err(CliError::Parse("--jobs must be at least 1".into()));
        }
        Ok(self.jobs)
    }
}

#[derive(Args)]
struct JsonArg {
    /// Also write the result as JSON to this path.
    #[arg(long)]
    json: Option<PathBuf>,
}

/// How the ring is presented: directly by `--q`, or by `--eps` via the
/// derived Eisenstein factor.  Equal characteristic (a = e) takes neither.
#[derive(Args)]
struct RingArgs {
    /// Presenting Eisenstein polynomial, e.g. "Y^2 - 2".
    #[arg(long)]
    q: Option<String>,
    /// Unit data eps over the coefficient ring; the presenting polynomial
    /// is then derived from Y^a + eps(Y) Y^e - p.
    #[arg(long, conflicts_with = "q")]
    eps: Option<String>,
}

impl RingArgs {
    fn build(&self, ty: &TypeArgs) -> CliResult<ChainRing> {
        let params = ty.params()?;
        let rw = params.coefficient_ring()?;
        if params.a == params.e {
            if self.q.is_some() || self.eps.is_some() {
                return Err(CliError::Parse(
                    "equal characteristic (a = e) takes neither --q nor --eps".into(),
                ));
            }
            return Ok(ChainRing::with_params(params, None)?);
        }
        let q = match (&self.q, &self.eps) {
            (Some(text), None) => {
                let poly = parse_poly(&rw, "--q", text)?;
                EisensteinPoly::new(&rw, params.e, poly)?
            }
            (None, Some(text)) => {
                let eps = parse_poly(&rw, "--eps", text)?;
                derive_presenting(params.a, params.e, params.f, params.p, &eps)?
            }
            (None, None) => {
                return Err(CliError::Parse(
                    "a > e requires a presenting polynomial: pass --q or --eps".into(),
                ))
            }
            (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
        };
        Ok(ChainRing::with_params(params, Some(q))?)
    }
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    ty: TypeArgs,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(flatten)]
    jobs: JobsArg,
    #[command(flatten)]
    json: JsonArg,
    /// Directory for cached reports (default: chainring-cache under the
    /// system temp directory).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Recompute even if a cached report exists, and do not write one.
    #[arg(long)]
    no_cache: bool,
}

#[derive(Args)]
struct RingInfoArgs {
    #[command(flatten)]
    ty: TypeArgs,
    #[command(flatten)]
    ring: RingArgs,
    /// Replace the ring by its quotient modulo the i-th power of the
    /// maximal ideal before reporting.
    #[arg(long)]
    i: Option<u32>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(flatten)]
    jobs: JobsArg,
    #[command(flatten)]
    json: JsonArg,
}

#[derive(Args)]
struct DeltaArgs {
    #[command(flatten)]
    ty: TypeArgs,
    #[command(flatten)]
    ring: RingArgs,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(flatten)]
    jobs: JobsArg,
    #[command(flatten)]
    json: JsonArg,
}

#[derive(Args)]
struct OrbitsArgs {
    #[command(flatten)]
    ty: TypeArgs,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(flatten)]
    jobs: JobsArg,
    #[command(flatten)]
    json: JsonArg,
}

#[derive(Args)]
struct DeriveGArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Unit data eps over the coefficient ring (unit constant term,
    /// degree below a - e).
    #[arg(long)]
    eps: String,
    #[command(flatten)]
    json: JsonArg,
}

#[derive(Args)]
struct UnitsArgs {
    #[command(flatten)]
    ty: TypeArgs,
    #[command(flatten)]
    ring: RingArgs,
    #[command(flatten)]
    json: JsonArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run only the block with this tag: ex2, ex3, ex4, ex5, ex6, ex7, sec6.
    #[arg(long)]
    only: Option<String>,
    #[command(flatten)]
    jobs: JobsArg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Classify(args) => cmd_classify(args).map(|()| true),
        Command::RingInfo(args) => cmd_ring_info(args).map(|()| true),
        Command::Delta(args) => cmd_delta(args).map(|()| true),
        Command::Orbits(args) => cmd_orbits(args).map(|()| true),
        Command::DeriveG(args) => cmd_derive_g(args).map(|()| true),
        Command::Units(args) => cmd_units(args).map(|()| true),
        Command::VerifyExamples(args) => {
            Ok(verify::run(args.only.as_deref(), args.jobs.jobs()?)?)
        }
    }
}

fn parse_poly(rw: &GaloisRing, flag: &str, text: &str) -> CliResult<GrPoly> {
    poly_text::parse(rw, text).map_err(|msg| CliError::Parse(format!("{flag}: {msg}")))
}

fn write_json<T: serde::Serialize>(path: &Option<PathBuf>, value: &T) -> CliResult<()> {
    if let Some(path) = path {
        let mut payload = serde_json::to_string_pretty(value).expect("reports serialize");
        payload.push('\n');
        std::fs::write(path, payload).map_err(|source| CliError::Io {
            context: format!("writing {}", path.display()),
            source,
        })?;
    }
    Ok(())
}

fn type_line(params: TypeParams) -> String {
    format!("type (a, e, f, p) = ({}, {}, {}, {})", params.a, params.e, params.f, params.p)
}

/// `h` is plain: over `Z/p^a0`, monic, in the variable `X`.
fn print_h(h: &[u64]) -> String {
    let mut out = String::new();
    for (k, &c) in h.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let body = match (k, c) {
            (0, _) => c.to_string(),
            (1, 1) => "X".into(),
            (1, _) => format!("{c}*X"),
            (_, 1) => format!("X^{k}"),
            (_, _) => format!("{c}*X^{k}"),
        };
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn coefficient_ring_line(rw: &GaloisRing) -> String {
    format!("coefficient ring GR({}^{}, {}) with h = {}", rw.p(), rw.n(), rw.f(), print_h(rw.h()))
}

// --- classify ---------------------------------------------------------

fn cmd_classify(args: ClassifyArgs) -> CliResult<()> {
    let params = args.ty.params()?;
    let budget = args.budget.budget()?;
    let jobs = args.jobs.jobs()?;
    let h = params.coefficient_ring()?.h().to_vec();
    let key = cache::key(params.a, params.e, params.f, params.p, &h);
    let dir = args.cache_dir.clone().unwrap_or_else(cache::default_dir);

    let cached = if args.no_cache { None } else { cache::load(&dir, &key).map_err(CliError::Cache)? };
    let report = match cached {
        Some(report) => {
            eprintln!("served from cache: {}", dir.join(&key).display());
            report
        }
        None => {
            let report =
                chainring::classify(params.a, params.e, params.f, params.p, &budget, jobs)?;
            if !args.no_cache {
                cache::store(&dir, &key, &report).map_err(CliError::Cache)?;
            }
            report
        }
    };
    print!("{}", render_report(&report)?);
    write_json(&args.json.json, &report)
}

fn render_report(report: &ClassificationReport) -> CliResult<String> {
    let rw = report.params.coefficient_ring()?;
    let mut out = String::new();
    let _ = writeln!(out, "{}", type_line(report.params));
    if report.equal_characteristic {
        let _ = writeln!(
            out,
            "equal characteristic: the unique class is k[Y]/(Y^{}) with k = GF({}^{})",
            report.params.a, report.params.p, report.params.f
        );
        let _ = writeln!(
            out,
            "|R| = {}   characteristic = {}   |k| = {}",
            report.ring_order, report.characteristic, report.residue_order
        );
        let _ = writeln!(
            out,
            "|U| = {}   |T_x| = {}",
            report.uniformizer_count, report.t_group_order
        );
        let _ = writeln!(out, "classes (1):");
        let _ = writeln!(out, "  class 0   k[Y]/(Y^{})", report.params.a);
        return Ok(out);
    }
    let _ = writeln!(out, "{}", coefficient_ring_line(&rw));
    let _ = writeln!(
        out,
        "a0 = {}   m = {}   neat = {}",
        report.a0,
        report.m,
        if report.neat { "yes" } else { "no" }
    );
    let _ = writeln!(
        out,
        "|R| = {}   characteristic = {}   |k| = {}",
        report.ring_order, report.characteristic, report.residue_order
    );
    let _ = writeln!(
        out,
        "|U| = {}   |nabla| = {}   |T_x| = {}",
        report.uniformizer_count, report.nabla_size, report.t_group_order
    );
    let _ = writeln!(out, "orbits ({}):", report.orbits.len());
    for orbit in &report.orbits {
        let rep = GrPoly::decode(&rw, &orbit.representative)?;
        let _ = writeln!(
            out,
            "  orbit {}   size {}   representative {}",
            orbit.id,
            orbit.size,
            poly_text::print(&rw, &rep)
        );
    }
    let _ = writeln!(out, "classes ({}):", report.classes.len());
    for (i, class) in report.classes.iter().enumerate() {
        let q = class.presenting.as_ref().expect("mixed characteristic presents every class");
        let q = GrPoly::decode(&rw, q)?;
        let ids: Vec<String> = class.delta_orbit_ids.iter().map(usize::to_string).collect();
        let aut = class.aut_count.map_or("not computed".into(), |n| n.to_string());
        let _ = writeln!(
            out,
            "  class {}   q = {}   |Delta| = {}   Delta orbits {{{}}}   aut = {}",
            i,
            poly_text::print(&rw, &q),
            class.delta_size,
            ids.join(", "),
            aut
        );
    }
    Ok(out)
}

// --- ring-info --------------------------------------------------------

#[derive(serde::Serialize)]
struct DeltaReport {
    size: usize,
    orbit_ids: Vec<usize>,
    union_of_orbits: bool,
    members: Vec<Vec<Vec<u64>>>,
    members_text: Vec<String>,
}

#[derive(serde::Serialize)]
struct RingReport {
    info: RingInfo,
    aut_count: Option<u64>,
    delta: Option<DeltaReport>,
}

fn delta_report(
    ring: &ChainRing,
    budget: &Budget,
    jobs: usize,
) -> CliResult<(Option<DeltaReport>, Option<u64>, Vec<String>)> {
    let params = ring.params();
    let mut notes = Vec::new();
    if ring.presenting().is_none() {
        notes.push("Delta: n/a (equal characteristic)".into());
        return Ok((None, None, notes));
    }
    let ctx = ActionContext::new(params.a, params.e, params.f, params.p)?;
    if ctx.nabla_size() > budget.max_nabla {
        notes.push(format!(
            "Delta: not computed (|nabla| = {} exceeds the budget of {})",
            ctx.nabla_size(),
            budget.max_nabla
        ));
        return Ok((None, None, notes));
    }
    if ring.uniformizer_count() > budget.max_ring {
        notes.push(format!(
            "Delta: not computed (|U| = {} exceeds the budget of {})",
            ring.uniformizer_count(),
            budget.max_ring
        ));
        return Ok((None, None, notes));
    }
    let orbits = ctx.all_orbits(budget, jobs)?;
    let d = delta(&ctx, ring, &orbits, budget, jobs)?;
    let aut = aut_count(ring, budget)?;
    let rw = ring.galois();
    let report = DeltaReport {
        size: d.members.len(),
        orbit_ids: d.orbit_ids.clone(),
        union_of_orbits: d.union_of_orbits,
        members: d.members.iter().map(EisensteinPoly::encode).collect(),
        members_text: d.members.iter().map(|q| poly_text::print(rw, q.poly())).collect(),
    };
    Ok((Some(report), Some(aut), notes))
}

fn cmd_ring_info(args: RingInfoArgs) -> CliResult<()> {
    let budget = args.budget.budget()?;
    let jobs = args.jobs.jobs()?;
    let mut ring = args.ring.build(&args.ty)?;
    if let Some(i) = args.i {
        ring = ring.quotient(i)?;
    }
    let info = ring.info();
    let (delta, aut, notes) = delta_report(&ring, &budget, jobs)?;

    let mut out = String::new();
    let _ = writeln!(out, "{}", type_line(info.params));
    match &info.q {
        Some(q) => {
            let q = GrPoly::decode(ring.galois(), q)?;
            let _ = writeln!(out, "presented by q = {}", poly_text::print(ring.galois(), &q));
            let _ = writeln!(out, "{}", coefficient_ring_line(ring.galois()));
            let _ = writeln!(
                out,
                "a0 = {}   m = {}   neat = {}",
                info.a0,
                info.m,
                if info.neat { "yes" } else { "no" }
            );
        }
        None => {
            let _ = writeln!(
                out,
                "equal characteristic: R = k[Y]/(Y^{}) with k = GF({}^{})",
                info.params.a, info.params.p, info.params.f
            );
        }
    }
    let _ = writeln!(
        out,
        "|R| = {}   characteristic = {}   |k| = {}",
        info.order, info.characteristic, info.residue_order
    );
    let _ = writeln!(
        out,
        "sizes of the powers of the maximal ideal, i = 0..{}: {:?}",
        info.params.a, info.ideal_sizes
    );
    let _ = writeln!(
        out,
        "|R^x| = {}   |H0| = {}   |H1| = {}   |U| = {}",
        info.unit_count, info.h0_order, info.h1_order, info.uniformizer_count
    );
    for note in &notes {
        let _ = writeln!(out, "{note}");
    }
    if let Some(aut) = aut {
        let _ = writeln!(out, "aut = {aut}");
    }
    if let Some(d) = &delta {
        let ids: Vec<String> = d.orbit_ids.iter().map(usize::to_string).collect();
        let _ = writeln!(
            out,
            "Delta ({} of {} Eisenstein polynomials, orbits {{{}}}, union of orbits: {}):",
            d.size,
            ActionContext::new(info.params.a, info.params.e, info.params.f, info.params.p)?
                .nabla_size(),
            ids.join(", "),
            if d.union_of_orbits { "yes" } else { "no" }
        );
        for text in &d.members_text {
            let _ = writeln!(out, "  {text}");
        }
    }
    print!("{out}");
    write_json(&args.json.json, &RingReport { info, aut_count: aut, delta })
}

// --- delta ------------------------------------------------------------

fn cmd_delta(args: DeltaArgs) -> CliResult<()> {
    let budget = args.budget.budget()?;
    let jobs = args.jobs.jobs()?;
    let ring = args.ring.build(&args.ty)?;
    let params = ring.params();
    if ring.presenting().is_none() {
        return Err(CliError::Parse(
            "Delta is defined for a > e; equal characteristic has no presenting polynomial"
                .into(),
        ));
    }
    let ctx = ActionContext::new(params.a, params.e, params.f, params.p)?;
    let orbits = ctx.all_orbits(&budget, jobs)?;
    let d = delta(&ctx, &ring, &orbits, &budget, jobs)?;
    let aut = aut_count(&ring, &budget)?;
    let rw = ring.galois();

    let mut out = String::new();
    let _ = writeln!(out, "{}", type_line(params));
    let q = ring.presenting().expect("checked above");
    let _ = writeln!(out, "q = {}", poly_text::print(rw, q.poly()));
    let ids: Vec<String> = d.orbit_ids.iter().map(usize::to_string).collect();
    let _ = writeln!(
        out,
        "|Delta| = {} of |nabla| = {}   orbits {{{}}}   union of orbits: {}   aut = {}",
        d.members.len(),
        ctx.nabla_size(),
        ids.join(", "),
        if d.union_of_orbits { "yes" } else { "no" },
        aut
    );
    let _ = writeln!(out, "members:");
    for member in &d.members {
        let _ = writeln!(out, "  {}", poly_text::print(rw, member.poly()));
    }
    print!("{out}");

    let report = DeltaReport {
        size: d.members.len(),
        orbit_ids: d.orbit_ids,
        union_of_orbits: d.union_of_orbits,
        members: d.members.iter().map(EisensteinPoly::encode).collect(),
        members_text: d.members.iter().map(|m| poly_text::print(rw, m.poly())).collect(),
    };
    write_json(&args.json.json, &report)
}

// --- orbits -----------------------------------------------------------

#[derive(serde::Serialize)]
struct OrbitReport {
    id: usize,
    size: usize,
    representative: Vec<Vec<u64>>,
    representative_text: String,
    members_text: Vec<String>,
}

fn cmd_orbits(args: OrbitsArgs) -> CliResult<()> {
    let params = args.ty.params()?;
    if params.a == params.e {
        return Err(CliError::Parse(
            "nabla is defined for a > e; equal characteristic has no Eisenstein action".into(),
        ));
    }
    let budget = args.budget.budget()?;
    let jobs = args.jobs.jobs()?;
    let ctx = ActionContext::new(params.a, params.e, params.f, params.p)?;
    let orbits = ctx.all_orbits(&budget, jobs)?;
    let rw = ctx.galois();

    let mut out = String::new();
    let _ = writeln!(out, "{}", type_line(params));
    let _ = writeln!(out, "|nabla| = {}   |T_x| = {}", ctx.nabla_size(), ctx.t_group_order());
    let _ = writeln!(out, "orbits ({}):", orbits.len());
    let mut reports = Vec::new();
    for (id, orbit) in orbits.iter().enumerate() {
        let rep_text = poly_text::print(rw, orbit.representative().poly());
        let _ = writeln!(out, "  orbit {id}   size {}   representative {rep_text}", orbit.len());
        reports.push(OrbitReport {
            id,
            size: orbit.len(),
            representative: orbit.representative().encode(),
            representative_text: rep_text,
            members_text: orbit
                .members()
                .iter()
                .map(|q| poly_text::print(rw, q.poly()))
                .collect(),
        });
    }
    if args.json.json.is_some() {
        let _ = writeln!(out, "full member lists are in the JSON output");
    }
    print!("{out}");
    write_json(&args.json.json, &reports)
}

// --- derive-g ---------------------------------------------------------

#[derive(serde::Serialize)]
struct DeriveGReport {
    eps: Vec<Vec<u64>>,
    g: Vec<Vec<u64>>,
    g_text: String,
}

fn cmd_derive_g(args: DeriveGArgs) -> CliResult<()> {
    let params = args.ty.params()?;
    let rw = params.coefficient_ring()?;
    let eps = parse_poly(&rw, "--eps", &args.eps)?;
    let g = derive_presenting(params.a, params.e, params.f, params.p, &eps)?;
    let g_text = poly_text::print(&rw, g.poly());

    let mut out = String::new();
    let _ = writeln!(out, "{}", type_line(params));
    let _ = writeln!(out, "eps = {}", poly_text::print(&rw, &eps));
    let _ = writeln!(out, "g = {g_text}");
    print!("{out}");
    write_json(&args.json.json, &DeriveGReport { eps: eps.encode(), g: g.encode(), g_text })
}

// --- units ------------------------------------------------------------

#[derive(serde::Serialize)]
struct UnitsReport {
    params: TypeParams,
    order: u128,
    unit_count: u128,
    h0_order: u64,
    h1_order: u128,
    uniformizer_count: u128,
    coefficient_ring_cyclic_factors: Vec<u64>,
}

fn cmd_units(args: UnitsArgs) -> CliResult<()> {
    let params = args.ty.params()?;
    // unit-group data is presentation independent, so any presenting
    // polynomial will do when none is supplied
    let ring = if params.a > params.e && args.ring.q.is_none() && args.ring.eps.is_none() {
        let rw = params.coefficient_ring()?;
        let eps = GrPoly::constant(&rw, rw.one());
        let q = derive_presenting(params.a, params.e, params.f, params.p, &eps)?;
        ChainRing::with_params(params, Some(q))?
    } else {
        args.ring.build(&args.ty)?
    };
    let info = ring.info();
    let factors = unit_group_invariants(params.p, params.f as usize, params.a0())?;

    let mut out = String::new();
    let _ = writeln!(out, "{}", type_line(params));
    let _ = writeln!(out, "|R| = {}   |R^x| = {}", info.order, info.unit_count);
    let _ = writeln!(
        out,
        "H0 (Teichmuller units) order = {}   H1 (one-units) order = {}",
        info.h0_order, info.h1_order
    );
    let _ = writeln!(out, "|U| = {}", info.uniformizer_count);
    let _ = writeln!(
        out,
        "unit group of the coefficient ring GR({}^{}, {}): cyclic factors {:?}",
        params.p,
        params.a0(),
        params.f,
        factors
    );
    print!("{out}");
    write_json(
        &args.json.json,
        &UnitsReport {
            params,
            order: info.order,
            unit_count: info.unit_count,
            h0_order: info.h0_order,
            h1_order: info.h1_order,
            uniformizer_count: info.uniformizer_count,
            coefficient_ring_cyclic_factors: factors,
        },
    )
}
