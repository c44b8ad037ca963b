//! `stanley-lab`: size, bigsize, polarization and Stanley depth of monomial
//! ideals from the command line.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use stanley_core::document::{parse_ideal, IdealDocument};
use stanley_core::fixtures::{fixture, Fixture};
use stanley_core::ideal::{ass_primes, Decomposition, VarSet};
use stanley_core::invariants::{
    admissible_orders, bigsize_family, bigsize_ideal, bigsize_witness, is_admissible_order, maximal_admissible_family,
    size_parts, Family, TotalOrder,
};
use stanley_core::polarization::full_polarization;
use stanley_core::report::{Format, Input, Report};
use stanley_core::sdepth::{sdepth_with_limit, split_data, split_lower_bound, Mode, SplitData};
use stanley_core::suite;
use stanley_core::verify::{transfer_chain_check, verify_instance, verify_polarization, Limits};
use stanley_core::Error;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BOUND: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "stanley-lab", version, about = "Size, bigsize, polarization and Stanley depth of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Ideal file (`-` for stdin).
    #[arg(long, global = true, conflicts_with = "fixture")]
    input: Option<String>,
    /// Built-in example by label, e.g. `e-prime`.
    #[arg(long, global = true)]
    fixture: Option<String>,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Largest characteristic poset searched for Stanley depth.
    #[arg(long, global = true, default_value_t = stanley_core::sdepth::DEFAULT_POSET_LIMIT)]
    max_poset: usize,
    /// Most components for which admissible orders are enumerated.
    #[arg(long, global = true, default_value_t = stanley_core::invariants::DEFAULT_ORDER_BOUND)]
    max_orders: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Irredundant irreducible decomposition and associated primes.
    Decompose,
    /// Size n - h + r - 1.
    Size,
    /// Bigsize along one order, or the maximum over all admissible orders.
    Bigsize {
        /// Order as 1-based component labels, e.g. `2,1,3`.
        #[arg(long, value_delimiter = ',', conflicts_with = "all_orders")]
        order: Option<Vec<usize>>,
        /// List every admissible order with its bigsize.
        #[arg(long)]
        all_orders: bool,
    },
    /// Exact Stanley depth with a certificate partition.
    Sdepth {
        /// Use S/I instead of I.
        #[arg(long)]
        quotient: bool,
    },
    /// Polarization steps.
    Polarize {
        /// Show only the first N steps.
        #[arg(long, conflicts_with = "full")]
        steps: Option<usize>,
        /// Show every step (the default).
        #[arg(long)]
        full: bool,
    },
    /// Splitting-of-variables lower bound for a squarefree ideal.
    Split {
        /// Variables of Z by name, e.g. `x5`.
        #[arg(long, value_delimiter = ',')]
        zvars: Option<Vec<String>>,
        /// One component subset, 1-based, e.g. `1,2,3,4,6`.
        #[arg(long, value_delimiter = ',')]
        tau: Option<Vec<usize>>,
    },
    /// Inequality checks on the input or on a built-in suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Option<SuiteName>,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// General instances; half as many squarefree ones are added.
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteName {
    /// The built-in worked examples.
    #[value(name = "paper-examples")]
    WorkedExamples,
    Random,
}

/// Failure before or during a computation, with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_bound() {
            EXIT_BOUND
        } else if matches!(e, Error::Defect(_) | Error::MalformedContext(_)) {
            EXIT_CHECK_FAILED
        } else {
            EXIT_USAGE
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.common.json { Format::Json } else { Format::Text };
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.emit(format));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILED)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn limits(common: &Common) -> Limits {
    Limits { poset: common.max_poset, orders: common.max_orders, ..Limits::default() }
}

/// The input document and, for `--fixture`, the fixture it came from.
fn load(common: &Common) -> Result<(IdealDocument, Option<&'static Fixture>), Failure> {
    match (&common.input, &common.fixture) {
        (Some(path), _) => {
            let text = if path == "-" {
                std::io::read_to_string(std::io::stdin())
            } else {
                std::fs::read_to_string(path)
            }
            .map_err(|e| usage(format!("cannot read {path}: {e}")))?;
            Ok((parse_ideal(&text)?, None))
        }
        (None, Some(name)) => {
            let f = fixture(name)?;
            Ok((f.document(), Some(f)))
        }
        (None, None) => Err(usage("an input is required: --input FILE or --fixture NAME")),
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let limits = limits(&cli.common);
    if let Command::Verify { suite: Some(name), seed, count } = &cli.command {
        return Ok(match name {
            SuiteName::WorkedExamples => suite::worked_examples(&limits)?,
            SuiteName::Random => suite::random(*seed, *count, &limits)?,
        });
    }
    let (doc, fix) = load(&cli.common)?;
    let d = doc.decomposition()?;
    let mut r = Report::new(command_name(&cli.command), Some(Input::from_document(&doc)));
    match &cli.command {
        Command::Decompose => decompose(&mut r, &d)?,
        Command::Size => {
            r.value("size", size_parts(&d)?);
        }
        Command::Bigsize { order, all_orders } => bigsize(&mut r, &d, order.as_deref(), *all_orders, &limits)?,
        Command::Sdepth { quotient } => {
            let mode = if *quotient { Mode::Quotient } else { Mode::Ideal };
            let s = sdepth_with_limit(&d.ideal()?, mode, limits.poset)?;
            r.value("sdepth", json!({"value": s.value, "mode": s.mode, "poset_size": s.poset_size}));
            r.certificate("intervals", &s.partition.intervals);
        }
        Command::Polarize { steps, .. } => polarize(&mut r, &d, *steps)?,
        Command::Split { zvars, tau } => split(&mut r, &d, fix, zvars.as_deref(), tau.as_deref())?,
        Command::Verify { .. } => {
            for c in verify_instance(&d, &limits)? {
                r.check(c);
            }
            if !d.is_squarefree() {
                let (full, pc) = verify_polarization(&d, &limits)?;
                pc.checks.into_iter().for_each(|c| r.check(c));
                if let Some(c) = transfer_chain_check(&full, &limits)? {
                    r.check(c);
                }
                if pc.skipped_steps > 0 {
                    r.note(format!(
                        "{} polarization steps had a poset over {} elements; their sdepth inequalities were not evaluated",
                        pc.skipped_steps, limits.step_poset
                    ));
                }
            }
        }
    }
    if let Some(f) = fix {
        for n in f.notes {
            r.note(*n);
        }
    }
    Ok(r)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Decompose => "decompose",
        Command::Size => "size",
        Command::Bigsize { .. } => "bigsize",
        Command::Sdepth { .. } => "sdepth",
        Command::Polarize { .. } => "polarize",
        Command::Split { .. } => "split",
        Command::Verify { .. } => "verify",
    }
}

fn component_strings(d: &Decomposition) -> Vec<String> {
    d.components().iter().map(|q| q.fmt_with(d.ring())).collect()
}

fn var_names(d: &Decomposition, vars: VarSet) -> Vec<String> {
    vars.iter().map(|j| d.ring().name(j).to_string()).collect()
}

fn prime_string(d: &Decomposition, vars: VarSet) -> String {
    format!("({})", var_names(d, vars).join(","))
}

fn decompose(r: &mut Report, d: &Decomposition) -> Result<(), Failure> {
    let ass = ass_primes(d)?;
    let primes: Vec<String> = ass.primes.iter().map(|&p| prime_string(d, p)).collect();
    let maximal: Vec<String> = ass.primes.iter().filter(|&&p| ass.is_maximal(p)).map(|&p| prime_string(d, p)).collect();
    r.value("components", component_strings(d));
    r.value("associated_primes", primes);
    r.value("maximal_primes", maximal);
    r.value("generators", d.ideal()?.fmt_gens());
    r.value("squarefree", d.is_squarefree());
    Ok(())
}

fn family_json(f: &Family) -> Result<Value, Failure> {
    let labels: Vec<usize> = f.labels().iter().map(|l| l + 1).collect();
    let witness: Vec<usize> = bigsize_witness(f)?.iter().map(|&p| f.labels()[p] + 1).collect();
    Ok(json!({"labels": labels, "bigsize": bigsize_family(f), "witness": witness}))
}

fn bigsize(r: &mut Report, d: &Decomposition, order: Option<&[usize]>, all: bool, limits: &Limits) -> Result<(), Failure> {
    if let Some(labels) = order {
        let o = TotalOrder::from_labels(labels)?;
        if o.len() != d.len() {
            return Err(usage(format!("order has {} labels, the ideal has {} components", o.len(), d.len())));
        }
        if !is_admissible_order(d, &o) {
            return Err(usage(format!("order {labels:?} is not admissible")));
        }
        let f = maximal_admissible_family(d, &o)?;
        r.value("order", labels);
        r.value("family", family_json(&f)?);
        r.value("bigsize", bigsize_family(&f));
        return Ok(());
    }
    let best = bigsize_ideal(d, limits.orders)?;
    r.value("bigsize", best.value);
    r.value("order", best.order.labels());
    r.value("family", family_json(&best.family)?);
    r.value("orders_examined", best.orders_examined);
    if all {
        let mut rows = Vec::new();
        for o in admissible_orders(d, limits.orders)? {
            let f = maximal_admissible_family(d, &o)?;
            rows.push(json!({"order": o.labels(), "family": f.labels().iter().map(|l| l + 1).collect::<Vec<_>>(), "bigsize": bigsize_family(&f)}));
        }
        r.certificate("orders", rows);
    }
    Ok(())
}

fn polarize(r: &mut Report, d: &Decomposition, steps: Option<usize>) -> Result<(), Failure> {
    let full = full_polarization(d)?;
    let shown = steps.unwrap_or(full.steps.len()).min(full.steps.len());
    let mut rows = Vec::new();
    for step in &full.steps[..shown] {
        let target = step.target()?;
        rows.push(json!({
            "var": step.source.ring().name(step.var),
            "degree": step.degree,
            "new_var": step.target_ring.name(step.new_var()),
            "e_set": step.e_set.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "raw_target": component_strings(&step.raw_target),
            "target": component_strings(&target),
        }));
    }
    r.value("steps", rows);
    r.value("total_steps", full.steps.len());
    if shown == full.steps.len() {
        let names = full.decomposition.ring().names();
        let n = d.n();
        let provenance: Vec<Value> = full
            .provenance
            .iter()
            .enumerate()
            .map(|(k, &(j, l))| json!({"var": names[n + k], "stands_for": format!("{}^{l}", d.ring().name(j))}))
            .collect();
        r.value("polarization", component_strings(&full.decomposition));
        r.value("provenance", provenance);
    }
    Ok(())
}

fn split_json(d: &Decomposition, t: &SplitData) -> Value {
    let sub = |i: &Option<stanley_core::ideal::MonomialIdeal>| i.as_ref().map(|i| i.fmt_gens());
    json!({
        "tau": t.tau.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "s_tau": var_names(d, t.s_tau),
        "j_tau": sub(&t.j_tau),
        "l_tau": sub(&t.l_tau),
        "a_tau": t.a_tau,
    })
}

fn split(
    r: &mut Report,
    d: &Decomposition,
    fix: Option<&Fixture>,
    zvars: Option<&[String]>,
    tau: Option<&[usize]>,
) -> Result<(), Failure> {
    let z = match zvars {
        Some(names) => {
            let mut z = VarSet::EMPTY;
            for name in names {
                let j = d.ring().index_of(name.trim()).ok_or_else(|| usage(format!("unknown variable {name}")))?;
                z = z.union(VarSet::singleton(j));
            }
            z
        }
        None => fix.and_then(|f| f.split_z()).ok_or_else(|| usage("--zvars is required for this input"))?,
    };
    r.value("z", var_names(d, z));
    if let Some(labels) = tau {
        if labels.contains(&0) {
            return Err(usage("tau labels are 1-based"));
        }
        let idx: Vec<usize> = labels.iter().map(|l| l - 1).collect();
        r.value("split", split_json(d, &split_data(d, z, &idx)?));
        return Ok(());
    }
    let b = split_lower_bound(d, z)?;
    r.value("bound", b.value);
    r.value("a_0", b.a_0);
    r.value("a_all", b.a_all);
    r.value("complete_bound", b.complete);
    r.value("terms", b.terms.iter().map(|t| split_json(d, t)).collect::<Vec<_>>());
    if b.a_all.is_some_and(|a| b.value.is_none_or(|v| a < v)) {
        r.note("the term for tau = all components is below the stated bound; only complete_bound is a lower bound for sdepth(I)");
    }
    Ok(())
}
