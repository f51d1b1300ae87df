use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use schur_zeta::crystal::{
    connected_component, decompose_product, shape_graph_dot, to_dot, verify_crystal_axioms, CrystalConfig, GlCrystal,
};
use schur_zeta::insertion::{column_insert_word_ordered, row_insert_word, ColumnOrder};
use schur_zeta::partitions::partitions_of;
use schur_zeta::selftest::{self, assignment_for_seed, Fault, SelftestConfig, DEFAULT_SEED};
use schur_zeta::tableaux::{enumerate_ssyt, lr_coefficient};
use schur_zeta::zeta::{
    eval_zeta_limit, eval_zeta_truncated, format_rational, indexed_vars, verify_lemma_term, verify_lr,
    verify_pieri_e, verify_pieri_h, Assignment, FillingStrategy, IdentityReport, PieriMode, SymOptions, VarId,
    VarTableau,
};
use schur_zeta::{ExactRational, Partition, Tableau, Word};

#[derive(Parser)]
#[command(name = "schur-zeta", version, about = "Tableaux, crystals and exact truncated Schur multiple zeta values")]
struct Cli {
    /// Emit JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate semistandard tableaux of a shape with entries at most N.
    Ssyt {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        n: usize,
        /// Print only the number of tableaux.
        #[arg(long)]
        count: bool,
    },
    /// GL(N) crystal graphs and decompositions.
    #[command(subcommand)]
    Crystal(CrystalCommand),
    /// Schensted insertion with bumping routes.
    Insert {
        #[arg(value_enum)]
        kind: InsertKind,
        #[command(flatten)]
        tableau: TableauInput,
        /// Letters to insert, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        word: Vec<usize>,
        /// Print the bumping route of every letter.
        #[arg(long)]
        routes: bool,
        /// Column insertion order.
        #[arg(long, value_enum, default_value = "first-letter-first")]
        order: OrderArg,
    },
    /// Littlewood-Richardson coefficients.
    Lr {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        /// Print a single coefficient instead of the whole expansion.
        #[arg(long)]
        lambda: Option<Partition>,
    },
    /// Truncated and limiting Schur multiple zeta values.
    #[command(subcommand)]
    Zeta(ZetaCommand),
    /// Exact checks of the symmetrized identities.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Run the acceptance grid.
    Selftest {
        #[arg(long)]
        quick: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, env = "SCHUR_ZETA_JOBS")]
        jobs: Option<usize>,
        /// Run with a deliberately broken component.
        #[arg(long, value_enum)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(Subcommand)]
enum CrystalCommand {
    /// Crystal graph of all tableaux of a shape.
    Graph {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        n: usize,
        /// Write Graphviz output here instead of stdout.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Connected component of a tensor word.
    Component {
        #[arg(long, value_delimiter = ',', required = true)]
        word: Vec<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Highest-weight decomposition of B(μ) ⊗ B(ν).
    Decompose {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        n: usize,
    },
    /// Check the crystal axioms on all tensor words of length k.
    Axioms {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum InsertKind {
    Row,
    Column,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    FirstLetterFirst,
    LastLetterFirst,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    StrictColumnBump,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct TableauInput {
    /// Tableau as JSON: {"shape":…,"rows":…} or a bare array of rows.
    #[arg(long)]
    tableau: Option<String>,
    #[arg(long)]
    tableau_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ZetaCommand {
    /// Evaluate ζ_λ at the given exponents.
    Eval {
        #[arg(long)]
        shape: Partition,
        /// Exponents as a JSON array of rows, e.g. '[[2,3],[4]]'.
        #[arg(long)]
        exponents: String,
        /// Truncation level.
        #[arg(long, required_unless_present = "tol")]
        n: Option<usize>,
        /// Exact rational arithmetic with integer exponents (default).
        #[arg(long, conflicts_with = "float")]
        exact: bool,
        /// Double precision with real exponents.
        #[arg(long)]
        float: bool,
        /// Increase N until successive values differ by less than this.
        #[arg(long, requires = "float", conflicts_with = "n")]
        tol: Option<f64>,
    },
}

#[derive(Args)]
struct AssignInput {
    /// Exponents as a JSON object {"var": value}.
    #[arg(long, conflicts_with_all = ["assign_file", "seed"])]
    assign: Option<String>,
    #[arg(long, conflicts_with = "seed")]
    assign_file: Option<PathBuf>,
    /// Draw exponents from 1..=5 with this seed.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct SymArgs {
    /// Truncation level N.
    #[arg(long)]
    n_trunc: usize,
    #[arg(long, env = "SCHUR_ZETA_JOBS")]
    jobs: Option<usize>,
    /// Permit more than eight symmetrized variables.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Σ_sym ζ_λ(s) ζ_(m)(t) = Σ_sym Σ_J ζ_{λ^J}(u^J).
    PieriH {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        sym: SymArgs,
        #[command(flatten)]
        assign: AssignInput,
    },
    /// Σ_sym ζ_(1^n)(s) ζ_λ(t) = Σ_sym Σ_K ζ_{λ_K}(u_K).
    PieriE {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        sym: SymArgs,
        #[command(flatten)]
        assign: AssignInput,
    },
    /// Σ_sym ζ_μ(s) ζ_ν(t) = Σ_sym Σ_λ c^λ_{μν} ζ_λ(u_λ).
    Lr {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        /// Fillings u_λ as a JSON array of variable tableaux, or a path to one.
        #[arg(long)]
        filling: Option<String>,
        /// Use the reversed column-major filling instead of row-major.
        #[arg(long, conflicts_with = "filling")]
        reversed: bool,
        #[command(flatten)]
        sym: SymArgs,
        #[command(flatten)]
        assign: AssignInput,
    },
    /// One pair (L, M) against its insertion tableau.
    Lemma {
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Left tableau as JSON.
        #[arg(long)]
        left: String,
        /// Right tableau as JSON.
        #[arg(long)]
        right: String,
        #[arg(long, env = "SCHUR_ZETA_JOBS")]
        jobs: Option<usize>,
        #[command(flatten)]
        assign: AssignInput,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    H,
    E,
}

/// Result of a subcommand; `passed` is false only for failed checks.
struct Outcome {
    payload: Value,
    human: String,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let json = cli.json;
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let status = if out.passed { "pass" } else { "fail" };
            let text = if json {
                let report = json!({ "status": status, "payload": out.payload });
                serde_json::to_string_pretty(&report).expect("values serialize") + "\n"
            } else {
                out.human
            };
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let msg = format!("{e:#}");
            if json {
                println!("{}", json!({ "status": "error", "error": msg }));
            }
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn ok(payload: impl Serialize, human: String) -> Result<Outcome> {
    Ok(Outcome { payload: serde_json::to_value(payload)?, human, passed: true })
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Ssyt { shape, n, count } => ssyt(&shape, n, count),
        Command::Crystal(c) => crystal(c),
        Command::Insert { kind, tableau, word, routes, order } => insert(kind, &tableau, word, routes, order),
        Command::Lr { mu, nu, lambda } => lr(&mu, &nu, lambda.as_ref()),
        Command::Zeta(ZetaCommand::Eval { shape, exponents, n, exact: _, float, tol }) => {
            zeta_eval(&shape, &exponents, n, float, tol)
        }
        Command::Verify(v) => verify(v),
        Command::Selftest { quick, seed, jobs, inject_fault } => {
            let cfg = SelftestConfig {
                seed,
                quick,
                jobs,
                fault: inject_fault.map(|FaultArg::StrictColumnBump| Fault::StrictColumnBump),
            };
            run_selftest(&cfg)
        }
    }
}

fn ssyt(shape: &Partition, n: usize, count: bool) -> Result<Outcome> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    let all = enumerate_ssyt(shape, n);
    if count {
        return ok(all.len(), format!("{}\n", all.len()));
    }
    let human = all.iter().map(|t| format!("{t}\n")).collect();
    ok(&all, human)
}

fn crystal_config(n: usize) -> Result<CrystalConfig> {
    CrystalConfig::new(n).context("--n")
}

fn write_or_print(dot: String, path: Option<&Path>, what: &str) -> Result<Outcome> {
    match path {
        Some(p) => {
            fs::write(p, &dot).with_context(|| format!("--dot: cannot write {}", p.display()))?;
            ok(json!({ "dot": p.display().to_string() }), format!("wrote {what} to {}\n", p.display()))
        }
        None => ok(json!({ "dot": dot }), dot),
    }
}

fn crystal(c: CrystalCommand) -> Result<Outcome> {
    match c {
        CrystalCommand::Graph { shape, n, dot } => {
            let text = shape_graph_dot(&shape, crystal_config(n)?).context("--shape")?;
            write_or_print(text, dot.as_deref(), "crystal graph")
        }
        CrystalCommand::Component { word, n, dot } => {
            let cfg = crystal_config(n)?;
            let start = cfg.word(&word).context("--word")?;
            let crystal = GlCrystal::new(cfg);
            let mut component = connected_component(&crystal, &start);
            component.sort();
            if dot.is_some() {
                let text = to_dot(&crystal, &component, |w| w.label());
                return write_or_print(text, dot.as_deref(), "component");
            }
            let human = component.iter().map(|w| format!("{}\n", w.label())).collect();
            ok(&component, human)
        }
        CrystalCommand::Decompose { mu, nu, n } => {
            let parts = decompose_product(&mu, &nu, crystal_config(n)?)?;
            let human = parts.iter().map(|(l, c)| format!("{l} {c}\n")).collect();
            let payload: Vec<Value> = parts.iter().map(|(l, c)| json!({ "lambda": l, "multiplicity": c })).collect();
            ok(payload, human)
        }
        CrystalCommand::Axioms { n, k } => {
            let cfg = crystal_config(n)?;
            if k == 0 {
                bail!("--k must be at least 1");
            }
            let elements = cfg.tensor_power(k);
            let report = verify_crystal_axioms(&GlCrystal::new(cfg), &elements);
            let violations: Vec<String> = report
                .violations
                .iter()
                .map(|v| format!("{:?} at arrow {} on {}: {}", v.kind, v.arrow, v.element.label(), v.detail))
                .collect();
            let mut human = format!("checked {} elements, {} violations\n", report.checked, violations.len());
            for v in &violations {
                human.push_str(v);
                human.push('\n');
            }
            Ok(Outcome {
                payload: json!({ "checked": report.checked, "violations": violations }),
                human,
                passed: report.passed(),
            })
        }
    }
}

fn parse_tableau(text: &str, flag: &str) -> Result<Tableau> {
    let value: Value = serde_json::from_str(text).with_context(|| format!("{flag}: not valid JSON"))?;
    let t = if value.is_array() {
        let rows: Vec<Vec<usize>> = serde_json::from_value(value).with_context(|| format!("{flag}: expected rows"))?;
        Tableau::new(rows).with_context(|| flag.to_string())?
    } else {
        serde_json::from_value(value).with_context(|| flag.to_string())?
    };
    Ok(t)
}

fn read_tableau(input: &TableauInput) -> Result<Tableau> {
    match (&input.tableau, &input.tableau_file) {
        (Some(text), _) => parse_tableau(text, "--tableau"),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("--tableau-file: cannot read {}", path.display()))?;
            parse_tableau(&text, "--tableau-file")
        }
        (None, None) => Ok(Tableau::empty()),
    }
}

fn insert(kind: InsertKind, input: &TableauInput, word: Vec<usize>, routes: bool, order: OrderArg) -> Result<Outcome> {
    let t = read_tableau(input)?;
    let w = Word(word);
    let (result, bumps) = match kind {
        InsertKind::Row => row_insert_word(&t, &w),
        InsertKind::Column => {
            let order = match order {
                OrderArg::FirstLetterFirst => ColumnOrder::FirstLetterFirst,
                OrderArg::LastLetterFirst => ColumnOrder::LastLetterFirst,
            };
            column_insert_word_ordered(&w, &t, order)
        }
    }
    .context("--word")?;
    let mut human = format!("{result}\n");
    if routes {
        for route in &bumps {
            let cells: Vec<String> = route.cells.iter().map(|c| c.to_string()).collect();
            human.push_str(&format!("route {}\n", cells.join(" ")));
        }
    }
    let payload = if routes { json!({ "tableau": result, "routes": bumps }) } else { json!(result) };
    ok(payload, human)
}

fn lr(mu: &Partition, nu: &Partition, lambda: Option<&Partition>) -> Result<Outcome> {
    if let Some(l) = lambda {
        let c = lr_coefficient(mu, nu, l);
        return ok(c, format!("{c}\n"));
    }
    let terms: Vec<(Partition, usize)> = partitions_of(mu.size() + nu.size())
        .into_iter()
        .map(|l| {
            let c = lr_coefficient(mu, nu, &l);
            (l, c)
        })
        .filter(|(_, c)| *c > 0)
        .collect();
    let human = terms.iter().map(|(l, c)| format!("{l} {c}\n")).collect();
    let payload: Vec<Value> = terms.iter().map(|(l, c)| json!({ "lambda": l, "coefficient": c })).collect();
    ok(payload, human)
}

fn exponent_rows<E: serde::de::DeserializeOwned>(shape: &Partition, text: &str) -> Result<Vec<Vec<E>>> {
    let rows: Vec<Vec<E>> = serde_json::from_str(text).context("--exponents: expected a JSON array of rows")?;
    let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
    if lengths != shape.parts() {
        bail!("--exponents: row lengths {lengths:?} do not match --shape {shape}");
    }
    Ok(rows)
}

fn cell_assignment<E: schur_zeta::zeta::Exponent>(vt: &VarTableau, rows: Vec<Vec<E>>) -> Result<Assignment<E>> {
    let mut a = Assignment::new();
    for (v, e) in vt.variables().zip(rows.into_iter().flatten()) {
        a.insert(v.clone(), e).context("--exponents")?;
    }
    Ok(a)
}

fn zeta_eval(shape: &Partition, exponents: &str, n: Option<usize>, float: bool, tol: Option<f64>) -> Result<Outcome> {
    let vt = VarTableau::indexed(shape, "s");
    if !float {
        let a = cell_assignment(&vt, exponent_rows::<u32>(shape, exponents)?)?;
        let n = n.ok_or_else(|| anyhow!("--n is required in exact mode"))?;
        let value: ExactRational = eval_zeta_truncated(shape, &vt, &a, n).context("--n")?;
        let text = format_rational(&value);
        return ok(json!({ "mode": "exact", "n": n, "value": text }), format!("{text}\n"));
    }
    let a = cell_assignment(&vt, exponent_rows::<f64>(shape, exponents)?)?;
    match (n, tol) {
        (Some(n), _) => {
            let value: f64 = eval_zeta_truncated(shape, &vt, &a, n).context("--n")?;
            ok(json!({ "mode": "float", "n": n, "value": value }), format!("{value:.15e}\n"))
        }
        (None, Some(tol)) => {
            let est = eval_zeta_limit(shape, &vt, &a, tol).context("--tol")?;
            let human = format!(
                "{:.12}\nN = {}, last increment {:.3e}{}\n",
                est.value,
                est.n,
                est.last_increment,
                if est.converged { "" } else { " (not converged)" }
            );
            ok(json!({ "mode": "limit", "estimate": est }), human)
        }
        (None, None) => bail!("--n or --tol is required"),
    }
}

/// Exponents for an identity plus the seed that produced them, if any.
fn read_assignment(input: &AssignInput, vars: &[VarId]) -> Result<(Assignment<u32>, Option<u64>)> {
    let parse = |text: &str, flag: &str| -> Result<Assignment<u32>> {
        let a: Assignment<u32> = serde_json::from_str(text).with_context(|| format!("{flag}: expected {{\"var\": integer}}"))?;
        a.validated().with_context(|| flag.to_string())
    };
    match (&input.assign, &input.assign_file) {
        (Some(text), _) => Ok((parse(text, "--assign")?, None)),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("--assign-file: cannot read {}", path.display()))?;
            Ok((parse(&text, "--assign-file")?, None))
        }
        (None, None) => {
            let seed = input.seed.unwrap_or(DEFAULT_SEED);
            Ok((assignment_for_seed(vars, seed), Some(seed)))
        }
    }
}

fn sym_options(jobs: Option<usize>, allow_large: bool) -> Result<SymOptions> {
    if jobs == Some(0) {
        bail!("--jobs must be at least 1");
    }
    Ok(SymOptions { jobs, allow_large, ..SymOptions::default() })
}

fn identity_outcome(title: String, report: IdentityReport, a: &Assignment<u32>, seed: Option<u64>) -> Result<Outcome> {
    let mut human = format!("{title}\n");
    if let Some(seed) = seed {
        human.push_str(&format!("seed {seed}\n"));
    }
    let values: Vec<String> = a.iter().map(|(k, v)| format!("{k}={v}")).collect();
    human.push_str(&format!("assignment {}\n", values.join(" ")));
    human.push_str(&format!("lhs {}\nrhs {}\n", format_rational(&report.lhs), format_rational(&report.rhs)));
    human.push_str(&format!("permutations {}, terms {}\n", report.permutations, report.terms));
    for w in &report.warnings {
        human.push_str(&format!("warning: {w}\n"));
    }
    human.push_str(if report.equal { "equal\n" } else { "MISMATCH\n" });
    Ok(Outcome {
        passed: report.equal,
        payload: json!({ "identity": title, "seed": seed, "assignment": a, "report": report }),
        human,
    })
}

fn verify(v: VerifyCommand) -> Result<Outcome> {
    match v {
        VerifyCommand::PieriH { lambda, m, sym, assign } => {
            let vars: Vec<VarId> =
                VarTableau::indexed(&lambda, "s").variables().cloned().chain(indexed_vars("t", m)).collect();
            let (a, seed) = read_assignment(&assign, &vars)?;
            let r = verify_pieri_h(&lambda, m, &a, sym.n_trunc, &sym_options(sym.jobs, sym.allow_large)?)
                .context("pieri-h")?;
            identity_outcome(format!("pieri-h λ={lambda} m={m} N={}", sym.n_trunc), r, &a, seed)
        }
        VerifyCommand::PieriE { lambda, n, sym, assign } => {
            let vars: Vec<VarId> =
                indexed_vars("s", n).into_iter().chain(VarTableau::indexed(&lambda, "t").variables().cloned()).collect();
            let (a, seed) = read_assignment(&assign, &vars)?;
            let r = verify_pieri_e(&lambda, n, &a, sym.n_trunc, &sym_options(sym.jobs, sym.allow_large)?)
                .context("pieri-e")?;
            identity_outcome(format!("pieri-e λ={lambda} n={n} N={}", sym.n_trunc), r, &a, seed)
        }
        VerifyCommand::Lr { mu, nu, filling, reversed, sym, assign } => {
            let vars: Vec<VarId> = VarTableau::indexed(&mu, "s")
                .variables()
                .chain(VarTableau::indexed(&nu, "t").variables())
                .cloned()
                .collect();
            let (a, seed) = read_assignment(&assign, &vars)?;
            let strategy = match filling {
                Some(text) => FillingStrategy::custom(read_fillings(&text)?),
                None if reversed => FillingStrategy::Reversed,
                None => FillingStrategy::RowMajor,
            };
            let r = verify_lr(&mu, &nu, &a, sym.n_trunc, &strategy, &sym_options(sym.jobs, sym.allow_large)?)
                .context("lr")?;
            identity_outcome(format!("lr μ={mu} ν={nu} N={}", sym.n_trunc), r, &a, seed)
        }
        VerifyCommand::Lemma { mode, left, right, jobs, assign } => {
            let l = parse_tableau(&left, "--left")?;
            let m = parse_tableau(&right, "--right")?;
            let (mode, vars): (PieriMode, Vec<VarId>) = match mode {
                ModeArg::H => (
                    PieriMode::H,
                    VarTableau::indexed(l.shape(), "s")
                        .variables()
                        .cloned()
                        .chain(indexed_vars("t", m.shape().size()))
                        .collect(),
                ),
                ModeArg::E => (
                    PieriMode::E,
                    indexed_vars("s", l.shape().size())
                        .into_iter()
                        .chain(VarTableau::indexed(m.shape(), "t").variables().cloned())
                        .collect(),
                ),
            };
            let (a, seed) = read_assignment(&assign, &vars)?;
            let r = verify_lemma_term(&l, &m, mode, &a, &sym_options(jobs, false)?).context("lemma")?;
            let title = format!("lemma {mode:?} L={l} M={m} T={} set={}", r.insertion, r.set);
            identity_outcome(title, r.report, &a, seed)
        }
    }
}

fn read_fillings(text: &str) -> Result<Vec<VarTableau>> {
    let body = if text.trim_start().starts_with('[') || text.trim_start().starts_with('{') {
        text.to_string()
    } else {
        fs::read_to_string(text).with_context(|| format!("--filling: cannot read {text}"))?
    };
    let value: Value = serde_json::from_str(&body).context("--filling: not valid JSON")?;
    let list = if value.is_array() { value } else { Value::Array(vec![value]) };
    serde_json::from_value(list).context("--filling: expected variable tableaux")
}

fn run_selftest(cfg: &SelftestConfig) -> Result<Outcome> {
    let outcomes = selftest::run_all(cfg);
    let passed = outcomes.iter().all(|o| o.passed);
    let mut human = format!("seed {}{}\n", cfg.seed, if cfg.quick { " (quick)" } else { "" });
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        human.push_str(&format!("{status} [{:>2}] {}: {}\n", o.id, o.name, o.detail));
        eprintln!("criterion {} took {:.2}s", o.id, o.elapsed_secs);
    }
    let summary: Vec<Value> = outcomes
        .iter()
        .map(|o| json!({ "id": o.id, "name": o.name, "passed": o.passed, "detail": o.detail }))
        .collect();
    Ok(Outcome { payload: json!({ "seed": cfg.seed, "quick": cfg.quick, "criteria": summary }), human, passed })
}
