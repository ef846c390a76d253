use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use posetdim::constructions::{
    antichain_complement_local_realizer, antichain_complement_parts, bdim_remove_point_extend,
    dim_remove_point_extend, disconnected_local_realizer, kelly_small_certificates,
    ldim_remove_point_extend, split_lift_from_p, split_lift_from_q, standard_example_boolean_realizer,
    standard_example_local_realizer, upward_extension_realizer,
};
use posetdim::decomposition::{
    cover_graph, jmw_tree_decomposition, pathwidth_exact, treewidth_exact, verify_decomposition,
    verify_path_decomposition, PathDecomposition, TreeDecomposition,
};
use posetdim::experiments::{run_experiments, ExperimentPlan, RunLimits};
use posetdim::generators::{
    kelly, split, split_in_place, standard_example, Family, GeneratorSpec, DEFAULT_SIZE_BUDGET,
};
use posetdim::io::{poset_from_json, poset_to_json};
use posetdim::pipeline::{ldim_from_path_decomposition, ldim_from_pathwidth};
use posetdim::realizer::{audit_boolean_realizer, audit_realizer, verify_local_realizer};
use posetdim::solvers::{
    bdim_exact_with, dim_exact_with, ldim_exact_with, oracle, DimCertificate, SolverOptions, Witness,
};
use posetdim::{dot, BooleanRealizer, LinearOrder, PleFamily, Poset};

#[derive(Parser)]
#[command(name = "posetdim", version, about = "Dimension certificates for finite posets")]
struct Cli {
    /// Seed for randomized generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest poset a generator may build.
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_BUDGET)]
    budget: usize,
    /// Machine-readable output on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct SolveArgs {
    poset: PathBuf,
    /// Largest value to try.
    #[arg(long = "max")]
    max: Option<usize>,
    /// Cross-check against the independent method.
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    max_elements: Option<usize>,
    /// Search nodes allowed.
    #[arg(long)]
    nodes: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CertKind {
    Realizer,
    Local,
    Boolean,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    #[value(name = "dim-1pt")]
    Dim1pt,
    #[value(name = "ldim-1pt")]
    Ldim1pt,
    #[value(name = "bdim-1pt")]
    Bdim1pt,
    #[value(name = "split-q")]
    SplitQ,
    #[value(name = "split-p")]
    SplitP,
    #[value(name = "sx-local")]
    SxLocal,
    #[value(name = "sx-boolean")]
    SxBoolean,
    #[value(name = "antichain-complement")]
    AntichainComplement,
    #[value(name = "disconnected-ldim")]
    DisconnectedLdim,
    #[value(name = "kelly-cert")]
    KellyCert,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DecompKind {
    Treewidth,
    Pathwidth,
    Jmw,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportKind {
    Poset,
    Tree,
    Path,
}

#[derive(Subcommand)]
enum Command {
    /// Build a poset from a named family, or `random <min> <max>` from --seed.
    Gen {
        family: Option<String>,
        params: Vec<usize>,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Dim(SolveArgs),
    Ldim(SolveArgs),
    Bdim(SolveArgs),
    /// Check a certificate; exit 1 if it fails.
    Verify {
        #[arg(value_enum)]
        kind: CertKind,
        poset: PathBuf,
        cert: PathBuf,
    },
    /// Run a construction on a poset and verify its output.
    Construct {
        #[arg(value_enum)]
        theorem: Theorem,
        poset: PathBuf,
        /// Removed point for the one-point extensions.
        #[arg(long)]
        point: Option<usize>,
        /// Comma-separated maximal antichain; defaults to a maximum one.
        #[arg(long, value_delimiter = ',')]
        antichain: Option<Vec<usize>>,
        /// Certificate kind for kelly-cert.
        #[arg(long, value_enum, default_value = "local")]
        kind: CertKind,
        /// Where to write the poset the certificate is for, when it differs
        /// from the input (split constructions).
        #[arg(long)]
        poset_out: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Height, width, a maximum antichain and a minimum chain partition.
    Width { poset: PathBuf },
    /// Exact tree or path decompositions of the cover graph, or the
    /// hand-built jmw decomposition (`decomp jmw <n>`).
    Decomp {
        #[arg(value_enum)]
        kind: DecompKind,
        input: String,
        #[arg(long = "max", default_value_t = 8)]
        max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Local realizer from a path decomposition of the cover graph.
    PwPipeline {
        poset: PathBuf,
        #[arg(long)]
        decomp: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Graphviz DOT for a poset or a decomposition.
    Export {
        #[arg(value_enum)]
        kind: ExportKind,
        input: PathBuf,
        /// Poset whose labels name the decomposition vertices.
        #[arg(long)]
        poset: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a built-in plan (`paper-table`, `empty`) or a plan file.
    RunExperiments {
        plan: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A certificate or assertion did not hold.
#[derive(Debug)]
struct Failed(String);

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failed {}

fn exit_code(err: &anyhow::Error) -> u8 {
    use posetdim::Error as E;
    for cause in err.chain() {
        if cause.is::<Failed>() {
            return 1;
        }
        if cause.is::<std::io::Error>() || cause.is::<serde_json::Error>() {
            return 2;
        }
        if let Some(e) = cause.downcast_ref::<E>() {
            return match e {
                E::BudgetExceeded(_) | E::SizeBudgetExceeded { .. } | E::SearchBudgetExceeded(_) | E::Exceeded(_) => 3,
                E::Parse(_)
                | E::InvalidInput(_)
                | E::BadParameter(_)
                | E::OutOfRange { .. }
                | E::EmptyPoset
                | E::CycleDetected(_)
                | E::MalformedOrder(_)
                | E::NotFullOrder(_)
                | E::SameElement(_)
                | E::NotIncomparable(..)
                | E::DomainError(_) => 2,
                _ => 1,
            };
        }
    }
    1
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn read_poset(path: &Path) -> Result<Poset> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(poset_from_json(&text).with_context(|| format!("parsing {}", path.display()))?)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?)
}

/// Writes to `out` or, without one, prints to stdout.
fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("documents serialize")
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Gen { family, params, list, out } => gen(cli, family.as_deref(), params, *list, out.as_deref()),
        Command::Dim(args) => solve(cli, Solver::Dim, args),
        Command::Ldim(args) => solve(cli, Solver::Ldim, args),
        Command::Bdim(args) => solve(cli, Solver::Bdim, args),
        Command::Verify { kind, poset, cert } => verify(*kind, poset, cert),
        Command::Construct { theorem, poset, point, antichain, kind, poset_out, out } => {
            let p = read_poset(poset)?;
            construct(cli, *theorem, &p, *point, antichain.as_deref(), *kind, poset_out.as_deref(), out.as_deref())
        }
        Command::Width { poset } => width(cli, poset),
        Command::Decomp { kind, input, max, out } => decomp(cli, *kind, input, *max, out.as_deref()),
        Command::PwPipeline { poset, decomp, out, report } => {
            pw_pipeline(cli, poset, decomp.as_deref(), out.as_deref(), report.as_deref())
        }
        Command::Export { kind, input, poset, out } => export(*kind, input, poset.as_deref(), out.as_deref()),
        Command::RunExperiments { plan, out } => experiments(cli, plan, out.as_deref()),
    }
}

fn gen(cli: &Cli, family: Option<&str>, params: &[usize], list: bool, out: Option<&Path>) -> Result<u8> {
    if list {
        if cli.json {
            let rows: Vec<Value> = Family::ALL
                .iter()
                .map(|f| json!({"family": f.name(), "usage": f.usage()}))
                .collect();
            println!("{}", Value::Array(rows));
        } else {
            for f in Family::ALL {
                println!("{}", f.usage());
            }
            println!("random <min> <max>      1 <= min <= max, seeded by --seed");
        }
        return Ok(0);
    }
    let Some(name) = family else { bail!(posetdim::Error::InvalidInput("gen needs a family or --list".into())) };
    let p = if name == "random" {
        let &[min, max] = params else {
            bail!(posetdim::Error::BadParameter("random takes <min> <max>".into()))
        };
        if min == 0 || min > max {
            bail!(posetdim::Error::BadParameter(format!("need 1 <= min <= max, got {min} {max}")));
        }
        if max > cli.budget {
            bail!(posetdim::Error::SizeBudgetExceeded { size: max, budget: cli.budget });
        }
        posetdim::random::seeded_poset(cli.seed, min, max)
    } else {
        GeneratorSpec::new(Family::parse(name)?, params.to_vec())?.build(cli.budget)?
    };
    emit(out, &poset_to_json(&p))?;
    if out.is_some() {
        eprintln!("{} elements, {} cover pairs", p.len(), p.cover_pairs().len());
    }
    Ok(0)
}

#[derive(Clone, Copy)]
enum Solver {
    Dim,
    Ldim,
    Bdim,
}

fn solve(cli: &Cli, which: Solver, args: &SolveArgs) -> Result<u8> {
    let p = read_poset(&args.poset)?;
    let d_max = args.max.unwrap_or(p.len().max(1));
    let defaults = SolverOptions::default();
    let default_max = match which {
        Solver::Dim => defaults.max_elements,
        Solver::Ldim => posetdim::solvers::ldim::DEFAULT_LDIM_MAX_ELEMENTS,
        Solver::Bdim => posetdim::solvers::bdim::DEFAULT_BDIM_MAX_ELEMENTS,
    };
    let opts = SolverOptions {
        max_elements: args.max_elements.unwrap_or(default_max),
        node_budget: args.nodes.unwrap_or(defaults.node_budget),
    };
    let cert: DimCertificate = match which {
        Solver::Dim => dim_exact_with(&p, d_max, opts)?,
        Solver::Ldim => ldim_exact_with(&p, d_max, opts)?,
        Solver::Bdim => bdim_exact_with(&p, d_max, opts)?,
    };
    if args.oracle {
        let independent = match which {
            Solver::Dim => oracle::dim_by_extensions(&p, d_max)?,
            Solver::Ldim => oracle::ldim_by_shapes(&p, d_max)?,
            Solver::Bdim => oracle::bdim_by_collisions(&p, d_max)?,
        };
        if independent != cert.value {
            bail!(Failed(format!("solver found {}, independent method found {independent}", cert.value)));
        }
    }
    emit(args.out.as_deref(), &to_json(&cert))?;
    if args.out.is_some() {
        if cli.json {
            println!("{}", json!({"value": cert.value, "nodes": cert.nodes}));
        } else {
            println!("{}", cert.value);
        }
    }
    Ok(0)
}

/// Accepts a bare certificate or a solver output whose `witness` holds one.
fn certificate_value(path: &Path) -> Result<Value> {
    let mut v: Value = read_json(path)?;
    if let Some(w) = v.get_mut("witness") {
        v = w.take();
    }
    Ok(v)
}

/// Certificate members of the wrong shape count as failed verification.
fn shape_violation(e: &posetdim::Error) -> Option<Value> {
    match *e {
        posetdim::Error::NotFullOrder(order) => Some(json!({"kind": "not_full_order", "order": order})),
        posetdim::Error::NotPle { order, x, y } => Some(json!({"kind": "not_ple", "order": order, "x": x, "y": y})),
        _ => None,
    }
}

fn verify(kind: CertKind, poset: &Path, cert: &Path) -> Result<u8> {
    let p = read_poset(poset)?;
    let doc = certificate_value(cert)?;
    let outcome = match kind {
        CertKind::Realizer => {
            let r: PleFamily = serde_json::from_value(doc).context("realizer document")?;
            audit_realizer(&p, &r).map(|v| json!({"kind": "realizer", "valid": v.is_none(), "size": r.len(), "violation": v}))
        }
        CertKind::Local => {
            let f: PleFamily = serde_json::from_value(doc).context("local realizer document")?;
            verify_local_realizer(&p, &f)
                .map(|rep| json!({"kind": "local", "valid": rep.valid, "mu": rep.mu, "violation": rep.violation}))
        }
        CertKind::Boolean => {
            let b: BooleanRealizer = serde_json::from_value(doc).context("boolean realizer document")?;
            audit_boolean_realizer(&p, &b)
                .map(|v| json!({"kind": "boolean", "valid": v.is_none(), "dimension": b.dimension(), "violation": v}))
        }
    };
    let report = match outcome {
        Ok(report) => report,
        Err(e) => match shape_violation(&e) {
            Some(v) => json!({"kind": format!("{kind:?}").to_lowercase(), "valid": false, "violation": v}),
            None => return Err(e.into()),
        },
    };
    println!("{report}");
    Ok(if report["valid"] == Value::Bool(true) { 0 } else { 1 })
}

fn local_or_upward(p: &Poset) -> PleFamily {
    let opts = SolverOptions::default().with_max_elements(posetdim::solvers::ldim::DEFAULT_LDIM_MAX_ELEMENTS);
    match ldim_exact_with(p, p.len().max(1), opts) {
        Ok(DimCertificate { witness: Witness::LocalRealizer(f), .. }) => f,
        _ => upward_extension_realizer(p),
    }
}

fn realizer_of(p: &Poset) -> Result<PleFamily> {
    match dim_exact_with(p, p.len().max(1), SolverOptions::default())?.witness {
        Witness::Realizer(r) => Ok(r),
        _ => bail!("dim solver returned a non-realizer witness"),
    }
}

/// Maps a certificate on `model` ids onto `p` through an isomorphism.
fn relabel_onto(model: &Poset, p: &Poset, what: &str) -> Result<Vec<usize>> {
    model
        .is_isomorphic(p)
        .ok_or_else(|| posetdim::Error::HypothesesViolated(format!("input is not isomorphic to {what}")).into())
}

fn map_orders(orders: &[LinearOrder], map: &[usize]) -> Vec<LinearOrder> {
    orders.iter().map(|l| LinearOrder(l.0.iter().map(|&e| map[e]).collect())).collect()
}

enum Built {
    Local(PleFamily),
    Realizer(PleFamily),
    Boolean(BooleanRealizer),
}

#[allow(clippy::too_many_arguments)]
fn construct(
    cli: &Cli,
    theorem: Theorem,
    p: &Poset,
    point: Option<usize>,
    antichain: Option<&[usize]>,
    kind: CertKind,
    poset_out: Option<&Path>,
    out: Option<&Path>,
) -> Result<u8> {
    let need_point = || point.ok_or_else(|| posetdim::Error::InvalidInput(format!("{theorem:?} needs --point")));
    let mut target = p.clone();
    let built = match theorem {
        Theorem::Dim1pt => {
            let x = need_point()?;
            check_point(p, x)?;
            let r = realizer_of(&p.remove_point(x).poset)?;
            Built::Realizer(dim_remove_point_extend(p, x, &r)?)
        }
        Theorem::Ldim1pt => {
            let x = need_point()?;
            check_point(p, x)?;
            let l = local_or_upward(&p.remove_point(x).poset);
            Built::Local(ldim_remove_point_extend(p, x, &l)?)
        }
        Theorem::Bdim1pt => {
            let x = need_point()?;
            check_point(p, x)?;
            let q = p.remove_point(x).poset;
            let cert = posetdim::solvers::bdim_exact(&q, q.len().max(1))?;
            let Witness::Boolean(b) = cert.witness else { bail!("bdim solver returned a non-boolean witness") };
            Built::Boolean(bdim_remove_point_extend(p, x, &b)?)
        }
        Theorem::SplitQ => {
            let (q, _) = split(p);
            target = split_in_place(p).0;
            Built::Local(split_lift_from_q(p, &local_or_upward(&q))?)
        }
        Theorem::SplitP => {
            target = split_in_place(p).0;
            Built::Local(split_lift_from_p(p, &local_or_upward(p))?)
        }
        Theorem::SxLocal | Theorem::SxBoolean => {
            if p.len() % 2 == 1 || p.len() < 4 {
                bail!(posetdim::Error::HypothesesViolated("input is not a standard example".into()));
            }
            let n = p.len() / 2;
            let map = relabel_onto(&standard_example(n)?, p, &format!("S_{n}"))?;
            if theorem == Theorem::SxLocal {
                Built::Local(PleFamily::new(map_orders(&standard_example_local_realizer(n)?.ples, &map)))
            } else {
                let b = standard_example_boolean_realizer(n)?;
                Built::Boolean(BooleanRealizer { orders: map_orders(&b.orders, &map), accepted: b.accepted })
            }
        }
        Theorem::AntichainComplement => {
            let a = antichain.map(<[usize]>::to_vec).unwrap_or_else(|| p.width().antichain);
            let parts = antichain_complement_parts(p, &a)?;
            Built::Local(antichain_complement_local_realizer(p, &parts)?)
        }
        Theorem::DisconnectedLdim => {
            let locals: Vec<PleFamily> = p.components().iter().map(|c| local_or_upward(&c.poset)).collect();
            Built::Local(disconnected_local_realizer(p, &locals)?)
        }
        Theorem::KellyCert => {
            if (p.len() + 2) % 4 != 0 || p.len() < 10 {
                bail!(posetdim::Error::HypothesesViolated("input is not a Kelly poset".into()));
            }
            let n = (p.len() + 2) / 4;
            let map = relabel_onto(&kelly(n)?, p, &format!("kelly({n})"))?;
            let (l, b) = kelly_small_certificates(n)?;
            match kind {
                CertKind::Boolean => {
                    Built::Boolean(BooleanRealizer { orders: map_orders(&b.orders, &map), accepted: b.accepted })
                }
                _ => Built::Local(PleFamily::new(map_orders(&l.ples, &map))),
            }
        }
    };

    let (doc, summary) = match &built {
        Built::Realizer(r) => {
            if let Some(v) = audit_realizer(&target, r)? {
                bail!(Failed(format!("constructed realizer fails: {v:?}")));
            }
            (to_json(r), json!({"kind": "realizer", "size": r.len()}))
        }
        Built::Local(f) => {
            let rep = verify_local_realizer(&target, f)?;
            if !rep.valid {
                bail!(Failed(format!("constructed local realizer fails: {:?}", rep.violation)));
            }
            (to_json(f), json!({"kind": "local", "ples": f.len(), "mu": rep.mu}))
        }
        Built::Boolean(b) => {
            if let Some(v) = audit_boolean_realizer(&target, b)? {
                bail!(Failed(format!("constructed boolean realizer fails: {v:?}")));
            }
            (to_json(b), json!({"kind": "boolean", "dimension": b.dimension()}))
        }
    };
    if let Some(path) = poset_out {
        emit(Some(path), &poset_to_json(&target))?;
    }
    emit(out, &doc)?;
    if out.is_some() {
        if cli.json {
            println!("{summary}");
        } else {
            println!("{} verified", summary_line(&summary));
        }
    }
    Ok(0)
}

fn summary_line(v: &Value) -> String {
    let obj = v.as_object().expect("summaries are objects");
    obj.iter().map(|(k, v)| format!("{k}={}", v.as_str().map_or(v.to_string(), str::to_string))).collect::<Vec<_>>().join(" ")
}

fn check_point(p: &Poset, x: usize) -> Result<()> {
    if x >= p.len() {
        bail!(posetdim::Error::OutOfRange { id: x, n: p.len() });
    }
    Ok(())
}

fn width(cli: &Cli, poset: &Path) -> Result<u8> {
    let p = read_poset(poset)?;
    let w = p.width();
    if cli.json {
        println!(
            "{}",
            json!({"n": p.len(), "height": p.height(), "width": w.width, "antichain": w.antichain, "chains": w.chains.chains})
        );
    } else {
        println!("n {}", p.len());
        println!("height {}", p.height());
        println!("width {}", w.width);
        println!("antichain {:?}", w.antichain);
        for c in &w.chains.chains {
            println!("chain {c:?}");
        }
    }
    Ok(0)
}

fn decomp(cli: &Cli, kind: DecompKind, input: &str, max: usize, out: Option<&Path>) -> Result<u8> {
    let (doc, w, valid) = match kind {
        DecompKind::Jmw => {
            let n: usize = input
                .parse()
                .map_err(|_| posetdim::Error::BadParameter(format!("jmw needs an integer n, got {input:?}")))?;
            let d = jmw_tree_decomposition(n)?;
            let g = cover_graph(&posetdim::generators::jmw_with_budget(n, cli.budget)?);
            let rep = verify_decomposition(&g, &d);
            (to_json(&d), d.width(), rep.valid)
        }
        DecompKind::Treewidth => {
            let g = cover_graph(&read_poset(Path::new(input))?);
            let (w, d) = treewidth_exact(&g, max)?;
            let rep = verify_decomposition(&g, &d);
            (to_json(&d), w, rep.valid)
        }
        DecompKind::Pathwidth => {
            let g = cover_graph(&read_poset(Path::new(input))?);
            let (w, d) = pathwidth_exact(&g, max)?;
            let rep = verify_path_decomposition(&g, &d);
            (to_json(&d), w, rep.valid)
        }
    };
    if !valid {
        bail!(Failed("decomposition does not verify".into()));
    }
    emit(out, &doc)?;
    if out.is_some() {
        if cli.json {
            println!("{}", json!({"width": w, "valid": valid}));
        } else {
            println!("width {w}");
        }
    }
    Ok(0)
}

fn pw_pipeline(cli: &Cli, poset: &Path, decomp: Option<&Path>, out: Option<&Path>, report: Option<&Path>) -> Result<u8> {
    let p = read_poset(poset)?;
    let result = match decomp {
        Some(path) => {
            let d: PathDecomposition = read_json(path)?;
            ldim_from_path_decomposition(&p, &d)?
        }
        None => ldim_from_pathwidth(&p)?,
    };
    let rep = &result.report;
    emit(out, &to_json(&result.family))?;
    if let Some(path) = report {
        emit(Some(path), &to_json(rep))?;
    }
    if out.is_some() {
        if cli.json {
            println!("{}", json!({"mu": result.mu, "t": rep.t, "bound": rep.bound.to_string()}));
        } else {
            println!("t {} sigma classes {} mu {} bound {}", rep.t, rep.sigma_classes, result.mu, rep.bound);
        }
    }
    Ok(0)
}

fn export(kind: ExportKind, input: &Path, poset: Option<&Path>, out: Option<&Path>) -> Result<u8> {
    let labels = poset.map(read_poset).transpose()?;
    let text = match kind {
        ExportKind::Poset => dot::poset_dot(&read_poset(input)?),
        ExportKind::Tree => dot::tree_decomposition_dot(&read_json::<TreeDecomposition>(input)?, labels.as_ref()),
        ExportKind::Path => dot::path_decomposition_dot(&read_json::<PathDecomposition>(input)?, labels.as_ref()),
    };
    emit(out, text.trim_end())?;
    Ok(0)
}

fn experiments(cli: &Cli, plan: &str, out: Option<&Path>) -> Result<u8> {
    let plan = match ExperimentPlan::builtin(plan) {
        Some(p) => p,
        None => {
            let text = fs::read_to_string(plan).with_context(|| format!("no built-in plan or file named {plan}"))?;
            ExperimentPlan::from_json(&text)?
        }
    };
    let limits = RunLimits { size_budget: cli.budget, ..RunLimits::default() };
    let report = run_experiments(&plan, &limits);
    if let Some(path) = out {
        emit(Some(path), &to_json(&report))?;
    }
    if cli.json {
        println!("{}", to_json(&report));
    } else {
        print!("{}", report.to_text());
    }
    Ok(if report.all_passed() { 0 } else { 1 })
}
