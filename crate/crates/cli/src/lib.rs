//! The `rclkit` command line. `run` returns the exit status together with
//! everything the command printed, so tests can drive it in-process.

pub mod load;
pub mod render;

use std::fs::File;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use rclkit::aggregation::{check_cca_laws, check_oa_laws, operation_table, AggregationOp, OperationTable};
use rclkit::approx::{check_interval_representation, rough_objects, rough_order, RclStructure, RoughVariant};
use rclkit::bias::{audit, audit_set, BiasConfig};
use rclkit::granular::{
    build_set_rcl, check_sgrcl_axioms, indiscernibility_partition, DefiniteSelector, DependenceReading,
    InformationTable, LatticeMode,
};
use rclkit::negation::{
    bottom_implication, check_implication_laws, check_negation_laws, check_tarski, implication_table, top_implication,
    ImplicationKind, NegationKind, UnaryTable,
};
use rclkit::search::{test_claim, ClaimStatus};
use rclkit::{Error, Result};

use load::{load_input, read_text, write_atomic, Input};
use render::{render_report, DependenceView, Format, LawSection, Payload, RoughView};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILING: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rclkit",
    version,
    about = "Check and explore rough approximation structures on finite lattices"
)]
pub struct Cli {
    /// Report format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the ten approximation axioms.
    Validate { file: PathBuf },
    /// Print a derived operation table.
    Table {
        #[arg(long, value_enum)]
        op: TableOp,
        file: PathBuf,
    },
    /// Run a law suite.
    Check {
        #[arg(long, value_enum)]
        suite: Suite,
        file: PathBuf,
    },
    /// List rough objects, the interval check and the rough order.
    RoughObjects {
        #[arg(long, value_enum, default_value = "both")]
        variant: Variant,
        file: PathBuf,
    },
    /// Compute the bias measures over the cases of a config file.
    Bias {
        #[arg(long)]
        config: PathBuf,
        /// Average the sharp measure over non-degenerate cases only.
        #[arg(long)]
        skip_degenerate: bool,
        file: PathBuf,
    },
    /// Build a set-based structure from a CSV information table.
    Ingest {
        #[arg(long)]
        csv: PathBuf,
        /// Comma-separated attribute names; empty for the one-block partition.
        #[arg(long)]
        attrs: String,
        /// Column holding row identifiers.
        #[arg(long)]
        key: Option<String>,
        #[arg(long, value_enum, default_value = "powerset")]
        mode: Mode,
    },
    /// Exhaustively test a registered claim on small lattices.
    Search {
        #[arg(long)]
        claim: String,
        #[arg(long)]
        max_size: usize,
        /// Directory receiving `<claim>.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rough dependence degrees of x on z in a set-based structure.
    Depend {
        #[arg(long)]
        x: String,
        #[arg(long)]
        z: String,
        #[arg(long, value_enum)]
        nu: Option<Nu>,
        #[arg(long, value_enum, default_value = "extremal")]
        reading: Reading,
        file: PathBuf,
    },
    /// List the registered claims.
    Claims,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableOp {
    Cca,
    Oa,
    Odot,
    Cross,
    Neg,
    Sim,
    Negations,
    ImpNeg,
    ImpO,
    ImpSim,
    ImpS,
    ImpTop,
    ImpBottom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Rcl,
    Aggregation,
    Negation,
    Implication,
    Tarski,
    Sgrcl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Both,
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Powerset,
    Definable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Nu {
    LowerDefinite,
    Definite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    Extremal,
    Literal,
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command. Usage errors
/// exit 2; help and version exit 0.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let mut out = Outcome::default();
    match dispatch(cli, &mut out) {
        Ok(code) => out.code = code,
        Err(e) => {
            out.stderr.push_str(&format!("error: {e} [{}]\n", error_name(&e)));
            out.code = EXIT_ERROR;
        }
    }
    out
}

fn error_name(e: &Error) -> String {
    let debug = format!("{e:?}");
    debug.split(['(', ' ', '{']).next().unwrap_or_default().to_string()
}

fn emit(cli: &Cli, out: &mut Outcome, payload: &Payload, default: Format) -> Result<()> {
    let doc = render_report(payload, cli.format.unwrap_or(default))?;
    match &cli.output {
        Some(path) => write_atomic(path, &doc),
        None => {
            out.stdout.push_str(&doc);
            Ok(())
        }
    }
}

fn status(failing: bool) -> i32 {
    if failing {
        EXIT_FAILING
    } else {
        EXIT_OK
    }
}

fn dispatch(cli: &Cli, out: &mut Outcome) -> Result<i32> {
    match &cli.command {
        Command::Validate { file } => {
            let input = load_input(file)?;
            let s = input.structure()?;
            let report = s.axiom_report();
            emit(cli, out, &Payload::Axioms(report), Format::Markdown)?;
            Ok(status(!report.is_rcl))
        }
        Command::Table { op, file } => {
            let input = load_input(file)?;
            let s = input.structure()?;
            table(cli, out, s, *op)?;
            Ok(EXIT_OK)
        }
        Command::Check { suite, file } => {
            let input = load_input(file)?;
            check(cli, out, &input, *suite)
        }
        Command::RoughObjects { variant, file } => {
            let input = load_input(file)?;
            let s = input.structure()?;
            let variant = match variant {
                Variant::Both => RoughVariant::Both,
                Variant::Lower => RoughVariant::Lower,
                Variant::Upper => RoughVariant::Upper,
            };
            let objects = rough_objects(s, variant);
            let order = rough_order(s);
            let view = RoughView {
                structure: s,
                objects: &objects,
                order: &order,
                interval_defect: check_interval_representation(s),
            };
            emit(cli, out, &Payload::Rough(view), Format::Markdown)?;
            Ok(EXIT_OK)
        }
        Command::Bias {
            config,
            skip_degenerate,
            file,
        } => {
            let input = load_input(file)?;
            let config = BiasConfig::from_json(&read_text(config)?)?;
            let skip = *skip_degenerate || config.skip_degenerate;
            let report = match input.set() {
                Some(set) => audit_set(set, &config.cases, skip)?,
                None => audit(input.structure()?, &config.cases, skip)?,
            };
            emit(cli, out, &Payload::Bias(&report), Format::Markdown)?;
            match (report.sharp.is_none(), report.degenerate.first()) {
                (true, Some(&i)) => {
                    out.stderr.push_str(&format!(
                        "error: {} [DegenerateDenominator]; rerun with --skip-degenerate\n",
                        Error::DegenerateDenominator(i)
                    ));
                    Ok(EXIT_ERROR)
                }
                _ => Ok(EXIT_OK),
            }
        }
        Command::Ingest { csv, attrs, key, mode } => {
            let reader = File::open(csv).map_err(|e| Error::Io(format!("{}: {e}", csv.display())))?;
            let t = InformationTable::from_csv(reader, key.as_deref())?;
            let attrs: Vec<&str> = attrs.split(',').map(str::trim).filter(|a| !a.is_empty()).collect();
            let g = indiscernibility_partition(&t, &attrs)?;
            let mode = match mode {
                Mode::Powerset => LatticeMode::Powerset,
                Mode::Definable => LatticeMode::Definable,
            };
            let set = build_set_rcl(t.universe(), g, mode, true)?;
            let mut d = set.to_descriptor();
            d.partition = Some(true);
            let value = serde_json::to_value(&d)?;
            emit(cli, out, &Payload::Json(value), Format::Json)?;
            Ok(EXIT_OK)
        }
        Command::Search {
            claim,
            max_size,
            out: dir,
        } => {
            let start = Instant::now();
            let r = test_claim(claim, *max_size)?;
            let elapsed = start.elapsed();
            if let Some(dir) = dir {
                std::fs::create_dir_all(dir)?;
                write_atomic(&dir.join(format!("{}.json", r.claim)), &r.to_json())?;
            }
            emit(cli, out, &Payload::Claim(&r), Format::Json)?;
            out.stderr.push_str(&format!(
                "{}: {} structures searched in {:.3} s\n",
                r.claim,
                r.counts.structures,
                elapsed.as_secs_f64()
            ));
            Ok(status(r.status == ClaimStatus::Counterexample))
        }
        Command::Depend {
            x,
            z,
            nu,
            reading,
            file,
        } => {
            let input = load_input(file)?;
            let set = input
                .set()
                .ok_or_else(|| Error::Parse("depend needs a set-based structure descriptor".into()))?;
            let set = match nu {
                Some(Nu::LowerDefinite) => set.clone().with_nu(DefiniteSelector::LowerDefinite),
                Some(Nu::Definite) => set.clone().with_nu(DefiniteSelector::Definite),
                None => set.clone(),
            };
            let reading = match reading {
                Reading::Extremal => DependenceReading::Extremal,
                Reading::Literal => DependenceReading::Literal,
            };
            let xs = set.universe().parse_literal(x)?;
            let zs = set.universe().parse_literal(z)?;
            let dependence = set.rough_dependence(&xs, &zs, reading)?;
            let view = DependenceView {
                set: &set,
                x: &xs,
                z: &zs,
                dependence: &dependence,
            };
            emit(cli, out, &Payload::Dependence(view), Format::Markdown)?;
            Ok(EXIT_OK)
        }
        Command::Claims => {
            let list: Vec<serde_json::Value> = rclkit::search::REGISTRY
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "id": c.id,
                        "statement": c.statement,
                        "space": c.space,
                        "assertion": c.assertion,
                    })
                })
                .collect();
            emit(cli, out, &Payload::Json(serde_json::Value::Array(list)), Format::Json)?;
            Ok(EXIT_OK)
        }
    }
}

fn table(cli: &Cli, out: &mut Outcome, s: &RclStructure, op: TableOp) -> Result<()> {
    let t = match op {
        TableOp::Cca => operation_table(s, AggregationOp::Cca),
        TableOp::Oa => operation_table(s, AggregationOp::Oa),
        TableOp::Odot => operation_table(s, AggregationOp::Odot),
        TableOp::Cross => operation_table(s, AggregationOp::Cross),
        TableOp::ImpNeg => implication_table(s, ImplicationKind::Neg),
        TableOp::ImpO => implication_table(s, ImplicationKind::O),
        TableOp::ImpSim => implication_table(s, ImplicationKind::Sim),
        TableOp::ImpS => implication_table(s, ImplicationKind::S),
        TableOp::ImpTop => top_implication(s.lattice_arc().clone()),
        TableOp::ImpBottom => bottom_implication(s.lattice_arc().clone()),
        TableOp::Neg | TableOp::Sim | TableOp::Negations => {
            let neg = UnaryTable::derived(s, NegationKind::Neg);
            let sim = UnaryTable::derived(s, NegationKind::Sim);
            let rows = match op {
                TableOp::Neg => vec![("¬", &neg)],
                TableOp::Sim => vec![("~", &sim)],
                _ => vec![("¬", &neg), ("~", &sim)],
            };
            return emit(cli, out, &Payload::Unary(rows), Format::TextTable);
        }
    };
    emit(cli, out, &Payload::Table(&t), Format::TextTable)
}

fn section<'a>(title: &str, flags: &'a rclkit::laws::LawFlags, asserted: &[&'static str]) -> LawSection<'a> {
    LawSection {
        title: title.to_string(),
        flags,
        asserted: asserted.to_vec(),
    }
}

fn any_asserted_failure(sections: &[LawSection]) -> bool {
    sections
        .iter()
        .any(|sec| sec.flags.failures().any(|r| sec.asserted.contains(&r.law.as_str())))
}

fn check(cli: &Cli, out: &mut Outcome, input: &Input, suite: Suite) -> Result<i32> {
    if suite == Suite::Sgrcl {
        let set = input
            .set()
            .ok_or_else(|| Error::Parse("the sgrcl suite needs a set-based structure descriptor".into()))?;
        let report = check_sgrcl_axioms(set)?;
        emit(cli, out, &Payload::Sgrcl(set, &report), Format::Markdown)?;
        return Ok(status(!report.all_pass()));
    }
    let s = input.structure()?;
    if suite == Suite::Rcl {
        let report = s.axiom_report();
        emit(cli, out, &Payload::Axioms(report), Format::Markdown)?;
        return Ok(status(!report.is_rcl));
    }
    let flags: Vec<(String, rclkit::laws::LawFlags, &[&'static str])> = match suite {
        Suite::Aggregation => vec![
            (
                "Aggregation · (cca)".into(),
                check_cca_laws(&operation_table(s, AggregationOp::Cca)),
                &["Ccomm", "Casso", "Cm", "Cb"],
            ),
            (
                "Aggregation ⊗ (oa)".into(),
                check_oa_laws(s, &operation_table(s, AggregationOp::Oa)),
                &["Acomm", "wAsso1", "wAsso2", "Am", "Ab"],
            ),
        ],
        Suite::Negation => vec![
            (
                "Negation ¬".into(),
                check_negation_laws(s, &UnaryTable::derived(s, NegationKind::Neg)),
                &["WN1-N", "WN2-N", "WN3-N"],
            ),
            (
                "Negation ~".into(),
                check_negation_laws(s, &UnaryTable::derived(s, NegationKind::Sim)),
                &["WN2-S", "WN3-S"],
            ),
        ],
        Suite::Implication => {
            let asserted = |k: ImplicationKind| -> &'static [&'static str] {
                match k {
                    ImplicationKind::Neg => &["FPA", "IP", "SPM", "BC1", "BC2", "BC3"],
                    ImplicationKind::Sim => &["FPA", "SPM", "BC3", "IBL", "converse-CB"],
                    ImplicationKind::O | ImplicationKind::S => &[],
                }
            };
            let mut v: Vec<(String, rclkit::laws::LawFlags, &[&'static str])> = ImplicationKind::ALL
                .iter()
                .map(|&k| {
                    let t = implication_table(s, k);
                    (
                        format!("Implication {}", t.kind().symbol()),
                        check_implication_laws(&t),
                        asserted(k),
                    )
                })
                .collect();
            for t in [
                top_implication(s.lattice_arc().clone()),
                bottom_implication(s.lattice_arc().clone()),
            ] {
                v.push((
                    format!("Implication {}", t.kind().symbol()),
                    check_implication_laws(&t),
                    &[],
                ));
            }
            v
        }
        Suite::Tarski => {
            let top = s.lattice().top();
            let mut tables: Vec<OperationTable> =
                ImplicationKind::ALL.iter().map(|&k| implication_table(s, k)).collect();
            tables.push(top_implication(s.lattice_arc().clone()));
            tables.push(bottom_implication(s.lattice_arc().clone()));
            tables
                .iter()
                .map(|t| {
                    (
                        format!("Tarski laws for {}", t.kind().symbol()),
                        check_tarski(t, top).flags,
                        &[][..],
                    )
                })
                .collect()
        }
        Suite::Rcl | Suite::Sgrcl => unreachable!("handled above"),
    };
    let sections: Vec<LawSection> = flags.iter().map(|(title, f, a)| section(title, f, a)).collect();
    emit(cli, out, &Payload::Laws(sections), Format::Markdown)?;
    let sections: Vec<LawSection> = flags.iter().map(|(title, f, a)| section(title, f, a)).collect();
    Ok(status(any_asserted_failure(&sections)))
}
