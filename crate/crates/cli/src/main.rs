//! Command-line front end: curve construction, symbolic powers by either
//! route, containment experiments, the linear-certificate checks, and
//! manifest-driven experiment runs with JSON reports.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use sympow_core::arith::{Field, Polynomial, PrimeField, Rationals, TermOrder};
use sympow_core::containment::{
    check_containment, four_thirds_suite, harbourne_window, propagation_check, resurgence_search,
    stable_witness_search, star_condition_probe, swanson_probe, symbolic_containment,
};
use sympow_core::error::Error;
use sympow_core::groebner::{Budget, GbConfig, Ideal, IdealData};
use sympow_core::linverify::{
    express_in_entries, fermat_suite, verify_theorem51_generic, verify_theorem51_instance,
};
use sympow_core::manifest::{
    example_6_4, named_ideal, run_manifest_path, RouteSpec, RunOptions,
};
use sympow_core::moncurve::MonomialCurve;
use sympow_core::symbolic::{curve_symbolic_power, CrossCheck, Route, SymbolicLab};

#[derive(Parser)]
#[command(
    name = "sympow",
    about = "Exact symbolic-power and containment experiments for space monomial curves",
    version
)]
struct Cli {
    /// Coefficient field: a prime p, or 0 for the rationals.
    #[arg(long = "char", global = true, default_value_t = 32003)]
    characteristic: u64,

    /// Term order for containment normal forms.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Degrevlex)]
    order: OrderArg,

    /// Gröbner budget: "default", "stretch", or an S-pair reduction count.
    #[arg(long, global = true)]
    budget: Option<String>,

    /// Worker threads for parallel experiment items.
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    /// Zero out timing fields for byte-stable output.
    #[arg(long, global = true)]
    deterministic: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Degrevlex,
    Lex,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Sat,
    Closed,
    Both,
}

impl From<RouteArg> for RouteSpec {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::Sat => RouteSpec::Sat,
            RouteArg::Closed => RouteSpec::Closed,
            RouteArg::Both => RouteSpec::Both,
        }
    }
}

#[derive(Args)]
struct TargetArgs {
    /// Curve exponents a b c.
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"])]
    curve: Option<Vec<u64>>,

    /// Named example: fermat-M, fermat-M-z2, fermat-N, fermat-N-z2, example-6-4.
    #[arg(long)]
    named: Option<String>,

    /// JSON ideal file {ring: {variables, characteristic, weights?}, generators: [..]}.
    #[arg(long)]
    ideal: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a curve: its presentation or the raw kernel oracle.
    Curve {
        #[command(subcommand)]
        sub: CurveCmd,
    },
    /// Symbolic power I^(n) of a curve prime, by saturation and/or closed form.
    Symbolic {
        a: u64,
        b: u64,
        c: u64,
        n: u32,
        #[arg(long, value_enum, default_value_t = RouteArg::Both)]
        route: RouteArg,
    },
    /// Containment checks: I^(m) ⊆ I^s on a target, or A ⊆ B between ideal files.
    Contain {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(short, long)]
        m: Option<u32>,
        #[arg(short, long)]
        s: Option<u32>,
        /// Left ideal file for a generic A ⊆ B check.
        #[arg(long)]
        lhs: Option<PathBuf>,
        /// Right ideal file for a generic A ⊆ B check.
        #[arg(long)]
        rhs: Option<PathBuf>,
    },
    /// Resurgence lower-bound search over a finite (m, s) box.
    Resurgence {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, default_value_t = 6)]
        mmax: u32,
        #[arg(long, default_value_t = 4)]
        smax: u32,
    },
    /// The containment window I^(cn−c+1) ⊆ I^n for n = 1..n_max.
    Harbourne {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(short, long, default_value_t = 2)]
        c: u32,
        #[arg(long, default_value_t = 3)]
        nmax: u32,
    },
    /// Stable witness search and propagation: I^(ct−c+1) ⊆ m·I^t and its powers.
    Stable {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(short, long, default_value_t = 2)]
        c: u32,
        #[arg(long, default_value_t = 3)]
        tmax: u32,
        /// Also verify the propagated containments up to the given q.
        #[arg(long)]
        propagate_q: Option<u32>,
        #[arg(long, default_value_t = 1)]
        propagate_r: u32,
    },
    /// Window-consistent Swanson constant candidate.
    Swanson {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, default_value_t = 3)]
        nmax: u32,
        #[arg(long, default_value_t = 3)]
        smax: u32,
    },
    /// The condition I^(cn) ⊆ m^⌊n/α⌋·I^n over a window.
    Star {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(short, long, default_value_t = 2)]
        c: u32,
        /// α as NUM/DEN, e.g. 2/1.
        #[arg(long, default_value = "2/1")]
        alpha: String,
        #[arg(long, default_value_t = 3)]
        nmax: u32,
    },
    /// Four-thirds suite: hypothesis checks, degree-2 window probe, guarantees.
    Fourthirds {
        a: u64,
        b: u64,
        c: u64,
        #[arg(long, default_value_t = 5)]
        mmax: u32,
    },
    /// The 3×12 linear certificate: generic identity, or a concrete instance.
    #[command(name = "verify-thm51")]
    VerifyThm51 {
        /// JSON instance {ring, entries: [6], xs?: [5]}.
        #[arg(long)]
        instance: Option<PathBuf>,
        #[arg(long, default_value_t = 100)]
        evals: u32,
    },
    /// The example matrix pair, printed and squared-z variants.
    Fermat,
    /// Run an experiment manifest.
    Run { manifest: PathBuf },
    /// The stretch workload: presentation audit plus the heavy containment.
    #[command(name = "example-6-4")]
    Example64,
}

#[derive(Subcommand)]
enum CurveCmd {
    /// Print the presentation matrix, minors, and weighted degrees.
    Present { a: u64, b: u64, c: u64 },
    /// Print the kernel oracle's minimal generators.
    Oracle { a: u64, b: u64, c: u64 },
}

fn parse_budget(s: &str) -> anyhow::Result<Budget> {
    match s {
        "default" => Ok(Budget::default()),
        "stretch" => Ok(Budget::stretch()),
        n => Ok(Budget {
            max_pair_reductions: n.parse().context("budget must be default, stretch, or a number")?,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    let code = if cli.characteristic == 0 {
        dispatch(Rationals, &cli)
    } else {
        match PrimeField::new(cli.characteristic) {
            Ok(f) => dispatch(f, &cli),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        }
    };
    match code {
        Ok(c) => ExitCode::from(c as u8),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e.downcast_ref::<Error>() {
                Some(Error::ResourceLimit(_)) | Some(Error::SaturationDiverged(_)) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn build_cfg(cli: &Cli) -> anyhow::Result<GbConfig> {
    let order = match cli.order {
        OrderArg::Degrevlex => TermOrder::DegRevLex,
        OrderArg::Lex => TermOrder::Lex,
    };
    let budget = match &cli.budget {
        Some(s) => parse_budget(s)?,
        None => Budget::default(),
    };
    Ok(GbConfig {
        order,
        budget,
        ..GbConfig::default()
    })
}

fn load_ideal<F: Field>(path: &PathBuf, field: F) -> anyhow::Result<Ideal<F>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let data: IdealData = serde_json::from_str(&text).context("ideal file")?;
    Ok(data.into_ideal(field)?)
}

fn target_lab<F: Field>(
    target: &TargetArgs,
    field: F,
    cfg: &GbConfig,
) -> anyhow::Result<(String, SymbolicLab<F>)> {
    match (&target.curve, &target.named, &target.ideal) {
        (Some(abc), None, None) => {
            let curve = MonomialCurve::new(field, abc[0], abc[1], abc[2], cfg)?;
            let name = format!("curve({},{},{})", abc[0], abc[1], abc[2]);
            Ok((name, SymbolicLab::for_curve(&curve, cfg.clone())))
        }
        (None, Some(name), None) => {
            let ideal = named_ideal(name, field, cfg)?;
            let ring = ideal.ring().clone();
            Ok((
                name.clone(),
                SymbolicLab::new(ideal, Ideal::maximal(&ring), cfg.clone()),
            ))
        }
        (None, None, Some(path)) => {
            let ideal = load_ideal(path, field)?;
            let ring = ideal.ring().clone();
            Ok((
                path.display().to_string(),
                SymbolicLab::new(ideal, Ideal::maximal(&ring), cfg.clone()),
            ))
        }
        _ => bail!("choose exactly one of --curve, --named, --ideal"),
    }
}

fn emit(cli: &Cli, human: String, payload: serde_json::Value) {
    if cli.json {
        let mut payload = payload;
        if cli.deterministic {
            zero_ms(&mut payload);
        }
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        println!("{human}");
    }
}

fn zero_ms(v: &mut serde_json::Value) {
    match v {
        serde_json::Value::Object(map) => {
            for (k, val) in map.iter_mut() {
                if k == "ms" || k == "wall_ms" {
                    *val = json!(0);
                } else {
                    zero_ms(val);
                }
            }
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(zero_ms),
        _ => {}
    }
}

fn render_reports(reports: &[sympow_core::containment::ContainmentReport]) -> String {
    reports
        .iter()
        .map(|r| {
            let mut line = format!(
                "{:<46} {}",
                r.query,
                match r.verdict {
                    sympow_core::containment::Verdict::Holds => "holds",
                    sympow_core::containment::Verdict::Fails => "FAILS",
                }
            );
            if let Some(w) = &r.witness {
                line.push_str(&format!("   witness: {w}"));
            }
            line
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[derive(Deserialize)]
struct InstanceFile {
    ring: sympow_core::arith::RingDescriptor,
    entries: [String; 6],
    xs: Option<[String; 5]>,
}

fn dispatch<F: Field>(field: F, cli: &Cli) -> anyhow::Result<i32> {
    let cfg = build_cfg(cli)?;
    match &cli.cmd {
        Cmd::Curve { sub } => match sub {
            CurveCmd::Present { a, b, c } => {
                let curve = MonomialCurve::new(field, *a, *b, *c, &cfg)?;
                let payload = sympow_core::manifest::run_manifest(
                    &serde_json::from_value(json!({
                        "target": {"curve": [a, b, c]},
                        "characteristic": field_char(&curve),
                        "operations": [{"op": "curve_present"}]
                    }))?,
                    &RunOptions {
                        characteristic: Some(field_char(&curve)),
                        order: cfg.order.clone(),
                        budget: Some(cfg.budget),
                        deterministic: cli.deterministic,
                    },
                )?;
                let item = &payload.items[0].payload;
                emit(cli, render_present(item), item.clone());
                Ok(0)
            }
            CurveCmd::Oracle { a, b, c } => {
                let curve = MonomialCurve::new(field, *a, *b, *c, &cfg)?;
                let gens: Vec<String> = curve
                    .ideal()
                    .generators()
                    .iter()
                    .map(|g| g.to_string())
                    .collect();
                let human = format!(
                    "kernel of t ↦ (t^{}, t^{}, t^{}):\n  {}",
                    curve.exponents().0,
                    curve.exponents().1,
                    curve.exponents().2,
                    gens.join("\n  ")
                );
                emit(cli, human, json!({ "generators": gens }));
                Ok(0)
            }
        },
        Cmd::Symbolic { a, b, c, n, route } => {
            let curve = MonomialCurve::new(field, *a, *b, *c, &cfg)?;
            let lab = SymbolicLab::for_curve(&curve, cfg.clone());
            let res = curve_symbolic_power(&curve, &lab, *n, RouteSpec::from(*route).into())?;
            let gens: Vec<String> = res.ideal.generators().iter().map(|g| g.to_string()).collect();
            let route_str = match res.route {
                Route::Saturation => "saturation",
                Route::ClosedForm => "closed-form",
            };
            let cross = match res.crosscheck {
                CrossCheck::Pass => "pass",
                CrossCheck::Fail => "FAIL",
                CrossCheck::NotRun => "not-run",
            };
            let human = format!(
                "P^({n}) of curve ({a},{b},{c})  [route: {route_str}, cross-check: {cross}{}]\n  {}",
                res.fallback
                    .as_ref()
                    .map(|f| format!(", fallback: {f}"))
                    .unwrap_or_default(),
                gens.join("\n  ")
            );
            emit(
                cli,
                human,
                json!({
                    "n": n,
                    "route": route_str,
                    "crosscheck": cross,
                    "fallback": res.fallback,
                    "generators": gens,
                }),
            );
            Ok(if res.crosscheck == CrossCheck::Fail { 1 } else { 0 })
        }
        Cmd::Contain {
            target,
            m,
            s,
            lhs,
            rhs,
        } => {
            let rep = match (lhs, rhs) {
                (Some(l), Some(r)) => {
                    let a = load_ideal(l, field.clone())?;
                    let b = load_ideal(r, field)?;
                    check_containment(&a, &b, "A ⊆ B", &cfg)?
                }
                (None, None) => {
                    let (m, s) = match (m, s) {
                        (Some(m), Some(s)) => (*m, *s),
                        _ => bail!("provide -m and -s, or --lhs and --rhs"),
                    };
                    let (_, lab) = target_lab(target, field, &cfg)?;
                    symbolic_containment(&lab, m, s)?
                }
                _ => bail!("--lhs and --rhs go together"),
            };
            emit(cli, render_reports(&[rep.clone()]), serde_json::to_value(&rep)?);
            Ok(0)
        }
        Cmd::Resurgence { target, mmax, smax } => {
            let (name, lab) = target_lab(target, field, &cfg)?;
            let est = resurgence_search(&lab, *mmax, *smax)?;
            let human = format!(
                "{name}: resurgence ≥ {}/{} over box ({mmax},{smax}); failing pairs: {:?}",
                est.lower_bound.0, est.lower_bound.1, est.witnesses
            );
            emit(cli, human, serde_json::to_value(&est)?);
            Ok(0)
        }
        Cmd::Harbourne {
            target,
            c,
            nmax,
        } => {
            let (_, lab) = target_lab(target, field, &cfg)?;
            let reps = harbourne_window(&lab, *c, *nmax)?;
            emit(cli, render_reports(&reps), serde_json::to_value(&reps)?);
            Ok(0)
        }
        Cmd::Stable {
            target,
            c,
            tmax,
            propagate_q,
            propagate_r,
        } => {
            let (_, lab) = target_lab(target, field, &cfg)?;
            let sw = stable_witness_search(&lab, *c, *tmax)?;
            let mut human = render_reports(&sw.reports);
            let mut payload = serde_json::to_value(&sw)?;
            match sw.witness_t {
                Some(t) => human.push_str(&format!("\nstable witness: t = {t}")),
                None => human.push_str(&format!("\nno stable witness up to t = {tmax}")),
            }
            if let (Some(q_max), Some(t)) = (propagate_q, sw.witness_t) {
                let prop = propagation_check(&lab, *c, t, *q_max, *propagate_r)?;
                human.push('\n');
                human.push_str(&render_reports(&prop));
                payload["propagation"] = serde_json::to_value(&prop)?;
            }
            emit(cli, human, payload);
            Ok(0)
        }
        Cmd::Swanson { target, nmax, smax } => {
            let (_, lab) = target_lab(target, field, &cfg)?;
            let probe = swanson_probe(&lab, *nmax, *smax)?;
            let mut human = render_reports(&probe.reports);
            match probe.swanson_candidate {
                Some(s) => human.push_str(&format!(
                    "\nleast s with I^(sn) ⊆ I^n for n ≤ {nmax}: {s}"
                )),
                None => human.push_str(&format!("\nno s ≤ {smax} works on the window")),
            }
            emit(cli, human, serde_json::to_value(&probe)?);
            Ok(0)
        }
        Cmd::Star {
            target,
            c,
            alpha,
            nmax,
        } => {
            let (num, den) = parse_ratio(alpha)?;
            let (_, lab) = target_lab(target, field, &cfg)?;
            let reps = star_condition_probe(&lab, *c, num, den, *nmax)?;
            emit(cli, render_reports(&reps), serde_json::to_value(&reps)?);
            Ok(0)
        }
        Cmd::Fourthirds { a, b, c, mmax } => {
            let curve = MonomialCurve::new(field, *a, *b, *c, &cfg)?;
            let lab = SymbolicLab::for_curve(&curve, cfg.clone());
            let rep = four_thirds_suite(&curve, &lab, None, *mmax)?;
            let mut human = format!(
                "shape: b1 = b2: {}; a-pair and c-pair equal: {}\n",
                rep.shape_b1_eq_b2, rep.shape_a_c_pairs_equal
            );
            human.push_str(&render_reports(&[rep.hyp_2a.clone(), rep.hyp_2b.clone()]));
            for item in &rep.rees_degree2_window {
                human.push_str(&format!(
                    "\n{:<46} {}",
                    item.statement,
                    if item.holds { "holds" } else { "FAILS" }
                ));
            }
            human.push_str(&format!("\n({})", rep.rees_degree2_note));
            for g in &rep.guarantees {
                human.push_str(&format!(
                    "\nm = {:<2} derived s = {:<2} direct: {}",
                    g.m,
                    g.s,
                    if g.direct.holds() { "holds" } else { "FAILS" }
                ));
            }
            emit(cli, human, serde_json::to_value(&rep)?);
            Ok(0)
        }
        Cmd::VerifyThm51 { instance, evals } => match instance {
            None => {
                let rep = verify_theorem51_generic(field, *evals, 0)?;
                let human = format!(
                    "generic identity residual zero: {}; random evaluations zero: {}/{}",
                    rep.residual_zero, rep.random_evaluations_zero, rep.random_evaluations
                );
                emit(cli, human, serde_json::to_value(&rep)?);
                Ok(if rep.residual_zero { 0 } else { 1 })
            }
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("cannot read {}", path.display()))?;
                let file: InstanceFile = serde_json::from_str(&text).context("instance file")?;
                let ring = file.ring.into_ring(field)?;
                let parse =
                    |s: &String| Polynomial::parse(&ring, s).map_err(anyhow::Error::from);
                let entries_vec: Vec<Polynomial<F>> =
                    file.entries.iter().map(parse).collect::<anyhow::Result<_>>()?;
                let entries: [Polynomial<F>; 6] = entries_vec.try_into().ok().unwrap();
                let xs: [Polynomial<F>; 5] = match &file.xs {
                    Some(xs) => {
                        let v: Vec<Polynomial<F>> =
                            xs.iter().map(parse).collect::<anyhow::Result<_>>()?;
                        v.try_into().ok().unwrap()
                    }
                    None => {
                        let gens5 = [
                            entries[0].clone(),
                            entries[1].clone(),
                            entries[2].clone(),
                            entries[3].clone(),
                            entries[4].clone(),
                        ];
                        express_in_entries(&entries[5], &gens5).ok_or_else(|| {
                            Error::CertificatePrereqFailed(
                                "no division expression of the sixth entry in the other five"
                                    .into(),
                            )
                        })?
                    }
                };
                let rep = verify_theorem51_instance(&entries, &xs, &cfg)?;
                let human = format!(
                    "certificate identity: {}\n{}",
                    rep.certificate_identity,
                    render_reports(&[rep.containment.clone()])
                );
                emit(cli, human, serde_json::to_value(&rep)?);
                Ok(0)
            }
        },
        Cmd::Fermat => {
            let rep = fermat_suite(field, &cfg)?;
            let mut human = String::new();
            for v in &rep.variants {
                human.push_str(&format!(
                    "{} (classical configuration: {}, certificate applies: {})\n",
                    v.name, v.reproduces_classical, v.certificate_applies
                ));
                human.push_str(&render_reports(&[
                    v.i3_in_i2.clone(),
                    v.i2_in_i2.clone(),
                    v.i2_in_i.clone(),
                ]));
                human.push('\n');
            }
            emit(cli, human.trim_end().to_string(), serde_json::to_value(&rep)?);
            Ok(0)
        }
        Cmd::Run { manifest } => {
            let opts = RunOptions {
                characteristic: Some(field.characteristic()).filter(|_| char_flag_given()),
                budget: cli.budget.as_deref().map(parse_budget).transpose()?,
                order: cfg.order.clone(),
                deterministic: cli.deterministic,
            };
            let report = run_manifest_path(manifest, &opts)?;
            let human = report
                .items
                .iter()
                .map(|i| {
                    format!(
                        "{:<24} {:<18} {:?}{}",
                        i.op,
                        i.target,
                        i.status,
                        match i.expected_match {
                            Some(true) => "  (as expected)",
                            Some(false) => "  (DEVIATION)",
                            None => "",
                        }
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            emit(
                cli,
                format!("{human}\npass: {}", report.pass),
                serde_json::to_value(&report)?,
            );
            Ok(report.exit_code())
        }
        Cmd::Example64 => {
            let rep = example_6_4(field, &GbConfig {
                budget: cli
                    .budget
                    .as_deref()
                    .map(parse_budget)
                    .transpose()?
                    .unwrap_or_default(),
                order: cfg.order.clone(),
                ..GbConfig::default()
            })?;
            let mut human = format!(
                "matrix {:?}\nweights {:?}\nminor weighted degrees: {:?} (None = inhomogeneous)\n",
                rep.matrix, rep.weights, rep.minor_homogeneity
            );
            for r in &rep.integer_relations {
                human.push_str(&format!(
                    "{:<24} {} vs {}  {}\n",
                    r.relation,
                    r.lhs,
                    r.rhs,
                    if r.holds { "holds" } else { "FAILS" }
                ));
            }
            match &rep.containment {
                Some(c) => human.push_str(&render_reports(std::slice::from_ref(c))),
                None => human.push_str("containment run: budget exceeded"),
            }
            let code = match rep.status {
                sympow_core::manifest::ItemStatus::BudgetExceeded => 2,
                _ => 0,
            };
            emit(cli, human, serde_json::to_value(&rep)?);
            Ok(code)
        }
    }
}

fn field_char<F: Field>(curve: &MonomialCurve<F>) -> u64 {
    curve.ring().field().characteristic()
}

fn char_flag_given() -> bool {
    std::env::args().any(|a| a == "--char" || a.starts_with("--char="))
}

fn parse_ratio(s: &str) -> anyhow::Result<(u32, u32)> {
    match s.split_once('/') {
        Some((n, d)) => Ok((n.trim().parse()?, d.trim().parse()?)),
        None => Ok((s.trim().parse()?, 1)),
    }
}

fn render_present(payload: &serde_json::Value) -> String {
    let mut out = String::new();
    if let Some(c) = payload.get("curve") {
        out.push_str(&format!("curve {c}, weights {c}\n"));
    }
    if payload
        .get("complete_intersection")
        .and_then(|v| v.as_bool())
        .unwrap_or(false)
    {
        out.push_str("complete intersection\n");
    }
    if let Some(gens) = payload.get("generators").and_then(|v| v.as_array()) {
        out.push_str("generators:\n");
        for g in gens {
            out.push_str(&format!("  {}\n", g.as_str().unwrap_or("?")));
        }
    }
    if let Some(p) = payload.get("presentation") {
        if let Some(m) = p.get("matrix").and_then(|v| v.as_array()) {
            out.push_str("presentation matrix:\n");
            for row in m {
                out.push_str(&format!("  {row}\n"));
            }
        }
        for key in ["F", "G", "H"] {
            if let Some(e) = p.get(key) {
                out.push_str(&format!(
                    "  {key} = {} (weighted degree {})\n",
                    e.get("poly").and_then(|v| v.as_str()).unwrap_or("?"),
                    e.get("weighted_degree").unwrap_or(&json!(null))
                ));
            }
        }
    }
    out.trim_end().to_string()
}
