//! The `fspec` command line, as a library function.
//!
//! [`run`] returns the exit status and everything that would be printed, so
//! the binary is a thin wrapper and tests can drive the CLI in process.
//!
//! Exit status: 0 on success, 1 when an agreement or postcondition fails,
//! 2 on bad input, 3 when a size cap is exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::duality::{boolean_envelope, downset_lattice, spec_poset};
use crate::error::{Error, Result};
use crate::format::{lattice_dot, lattice_json, load_input, poset_dot, poset_json, write_lattice, write_poset, Input};
use crate::lattice::Lattice;
use crate::poset::{EnumerateConfig, Labeling};
use crate::theorems::{classify, classify_lattice, sweep_with, ConditionReport, Theorem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Version of every JSON document the CLI emits.
pub const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "fspec",
    about = "Pseudocomplements, Stone algebras and spectra of finite posets"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Emit a Graphviz Hasse diagram (spec, downsets, envelope, dot).
    #[arg(long, global = true)]
    dot: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the down-set lattice and report structural predicates.
    Check { input: String },
    /// Evaluate every condition of one theorem.
    Report {
        #[arg(value_parser = theorem_name)]
        theorem: Theorem,
        input: String,
    },
    /// Pseudocomplement and implication tables of the down-set lattice.
    PcTable { input: String },
    /// Prime spectrum of a lattice (of the down-set lattice for a poset).
    Spec { input: String },
    /// The lattice of down-sets.
    Downsets { input: String },
    /// The Boolean algebra generated by the down-sets.
    Envelope { input: String },
    /// Run every check over all posets with up to `n` points.
    Sweep {
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Unlabeled)]
        mode: Mode,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Hasse diagram of the input.
    Dot { input: String },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Mode {
    Labeled,
    Unlabeled,
}

fn theorem_name(name: &str) -> std::result::Result<Theorem, String> {
    Theorem::from_name(name).ok_or_else(|| {
        let names: Vec<&str> = Theorem::ALL.iter().map(|t| t.name()).collect();
        format!("unknown theorem `{name}`; expected one of {}", names.join(", "))
    })
}

/// Parses `argv` (including the program name) and executes it.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match execute(&cli) {
        Ok(outcome) => outcome,
        Err(e) => (exit_code(&e), format!("error: {e}\n")),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Malformed { .. } | Error::Precondition(_) => EXIT_INPUT,
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        Error::Assertion(_) => EXIT_ASSERTION,
    }
}

fn execute(cli: &Cli) -> Result<(i32, String)> {
    let dot_capable = matches!(
        cli.command,
        Command::Spec { .. } | Command::Downsets { .. } | Command::Envelope { .. } | Command::Dot { .. }
    );
    if cli.dot && !dot_capable {
        return Err(Error::Precondition(
            "--dot applies to spec, downsets, envelope and dot".into(),
        ));
    }
    if cli.dot && cli.json {
        return Err(Error::Precondition("--dot and --json are exclusive".into()));
    }
    match &cli.command {
        Command::Check { input } => check(load_input(input)?, cli.json),
        Command::Report { theorem, input } => {
            let report = theorem.report(&load_input(input)?.into_poset()?)?;
            let code = if report.agreement { EXIT_OK } else { EXIT_ASSERTION };
            let text = if cli.json {
                to_json(&report)
            } else {
                render_report(&report)
            };
            Ok((code, text))
        }
        Command::PcTable { input } => {
            let table = match load_input(input)? {
                Input::Poset(p) => {
                    let lattice = downset_lattice(&p)?;
                    let labels = lattice.sets().iter().map(|s| s.to_string()).collect();
                    PcTable::new(&lattice, labels)
                }
                Input::Lattice(l) => PcTable::new(&l, (0..l.size()).map(|i| i.to_string()).collect()),
            };
            Ok((EXIT_OK, if cli.json { to_json(&table) } else { table.render() }))
        }
        Command::Spec { input } => {
            let lattice = match load_input(input)? {
                Input::Poset(p) => downset_lattice(&p)?.into_lattice(),
                Input::Lattice(l) => l,
            };
            let spectrum = spec_poset(&lattice)?;
            let ideals: Vec<Vec<usize>> = spectrum.primes.iter().map(|i| i.members().collect()).collect();
            let text = if cli.dot {
                poset_dot(&spectrum.poset)
            } else if cli.json {
                to_json(&json!({ "poset": poset_json(&spectrum.poset), "prime_ideals": ideals }))
            } else {
                let mut out = String::new();
                for (x, ideal) in ideals.iter().enumerate() {
                    out += &format!("# point {x}: prime ideal {}\n", brace(ideal));
                }
                out + &write_poset(&spectrum.poset)
            };
            Ok((EXIT_OK, text))
        }
        Command::Downsets { input } => {
            let lattice = downset_lattice(&load_input(input)?.into_poset()?)?;
            let labels: Vec<String> = lattice.sets().iter().map(|s| s.to_string()).collect();
            Ok((EXIT_OK, emit_set_lattice(&lattice, &labels, cli)))
        }
        Command::Envelope { input } => {
            let envelope = boolean_envelope(&load_input(input)?.into_poset()?)?;
            if !envelope.is_homomorphism() {
                return Err(Error::Assertion(
                    "down-set inclusion is not a lattice homomorphism".into(),
                ));
            }
            let labels: Vec<String> = envelope.powerset.sets().iter().map(|s| s.to_string()).collect();
            let text = if cli.json {
                to_json(&json!({
                    "lattice": lattice_json(&envelope.powerset),
                    "sets": set_lists(envelope.powerset.sets()),
                    "embedding": envelope.embedding,
                }))
            } else if cli.dot {
                lattice_dot(&envelope.powerset, Some(&labels))
            } else {
                let mut out = String::new();
                for (i, &e) in envelope.embedding.iter().enumerate() {
                    out += &format!("# down-set {} is element {e}\n", envelope.downsets.set(i));
                }
                out + &emit_set_lattice(&envelope.powerset, &labels, cli)
            };
            Ok((EXIT_OK, text))
        }
        Command::Sweep { n, mode, jobs } => {
            let labeling = match mode {
                Mode::Labeled => Labeling::Labeled,
                Mode::Unlabeled => Labeling::Unlabeled,
            };
            let config = EnumerateConfig {
                jobs: *jobs,
                ..EnumerateConfig::default()
            };
            let summary = sweep_with(*n, labeling, &config)?;
            let code = if summary.disagreements == 0 {
                EXIT_OK
            } else {
                EXIT_ASSERTION
            };
            Ok((
                code,
                if cli.json {
                    to_json(&summary)
                } else {
                    summary.render_text()
                },
            ))
        }
        Command::Dot { input } => Ok((
            EXIT_OK,
            match load_input(input)? {
                Input::Poset(p) => poset_dot(&p),
                Input::Lattice(l) => lattice_dot(&l, None),
            },
        )),
    }
}

fn check(input: Input, json: bool) -> Result<(i32, String)> {
    let (kind, fields): (&str, Vec<(&str, bool)>) = match &input {
        Input::Poset(p) => ("poset", classify(p)?.fields().to_vec()),
        Input::Lattice(l) => ("lattice", classify_lattice(l)?.fields().to_vec()),
    };
    let text = if json {
        let profile: serde_json::Map<String, serde_json::Value> =
            fields.iter().map(|&(k, v)| (k.to_string(), v.into())).collect();
        to_json(&json!({ "kind": kind, "profile": profile }))
    } else {
        let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0) + 2;
        fields.iter().map(|(k, v)| format!("{k:<width$}{v}\n")).collect()
    };
    Ok((EXIT_OK, text))
}

#[derive(Serialize)]
struct Versioned<'a, T> {
    schema: u32,
    #[serde(flatten)]
    body: &'a T,
}

/// Pretty JSON carrying the schema version, with a trailing newline.
fn to_json<T: Serialize>(body: &T) -> String {
    serde_json::to_string_pretty(&Versioned { schema: SCHEMA, body }).expect("serializable") + "\n"
}

fn brace(items: &[usize]) -> String {
    let inner: Vec<String> = items.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn set_lists(sets: &[crate::poset::PointSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.iter().collect()).collect()
}

fn emit_set_lattice(lattice: &crate::duality::SetLattice, labels: &[String], cli: &Cli) -> String {
    if cli.dot {
        lattice_dot(lattice, Some(labels))
    } else if cli.json {
        to_json(&json!({ "lattice": lattice_json(lattice), "sets": set_lists(lattice.sets()) }))
    } else {
        let mut out = String::new();
        for (i, label) in labels.iter().enumerate() {
            out += &format!("# element {i}: {label}\n");
        }
        out + &write_lattice(lattice)
    }
}

pub fn render_report(report: &ConditionReport) -> String {
    let width = report.verdicts().map(|v| v.label.len()).max().unwrap_or(0) + 2;
    let mut out = format!("theorem {}\n", report.theorem.name());
    for group in &report.groups {
        let status = match (group.hypothesis, group.agreement) {
            (false, _) => "hypothesis fails, agreement not asserted",
            (true, true) => "hypothesis holds, conditions agree",
            (true, false) => "hypothesis holds, conditions DISAGREE",
        };
        out += &format!("{}: {status}\n", group.name);
        for v in &group.verdicts {
            out += &format!("  {:<width$}{}\n", v.label, v.holds);
        }
    }
    out += &format!("agreement: {}\n", report.agreement);
    if let Some(w) = &report.witness {
        out += &format!("witness: {}\n", w.note);
    }
    out
}

#[derive(Serialize)]
struct PcTable {
    elements: Vec<String>,
    pseudocomplement: Vec<Option<usize>>,
    implication: Vec<Vec<Option<usize>>>,
}

impl PcTable {
    fn new(lattice: &Lattice, elements: Vec<String>) -> Self {
        PcTable {
            elements,
            pseudocomplement: lattice.elements().map(|a| lattice.pseudocomplement(a)).collect(),
            implication: lattice
                .elements()
                .map(|a| lattice.elements().map(|b| lattice.rel_pseudocomplement(a, b)).collect())
                .collect(),
        }
    }

    fn render(&self) -> String {
        let name = |e: Option<usize>| e.map_or("-".to_string(), |i| self.elements[i].clone());
        let width = self.elements.iter().map(String::len).max().unwrap_or(1).max(6) + 2;
        let mut out = format!("{:<width$}pseudocomplement\n", "a");
        for (a, star) in self.pseudocomplement.iter().enumerate() {
            out += &format!("{:<width$}{}\n", self.elements[a], name(*star));
        }
        out += &format!("\n{:<width$}", "a -> b");
        for b in &self.elements {
            out += &format!("{b:<width$}");
        }
        out = out.trim_end().to_string() + "\n";
        for (a, row) in self.implication.iter().enumerate() {
            let mut line = format!("{:<width$}", self.elements[a]);
            for &c in row {
                line += &format!("{:<width$}", name(c));
            }
            out += line.trim_end();
            out += "\n";
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fspec(args: &[&str]) -> (i32, String) {
        run(std::iter::once("fspec").chain(args.iter().copied()))
    }

    #[test]
    fn check_fixture() {
        let (code, out) = fspec(&["check", "v3"]);
        assert_eq!(code, 0);
        assert!(out
            .lines()
            .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["stone", "false"]));
        let (code, out) = fspec(&["check", "m3", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["profile"]["pseudocomplemented"], false);
    }

    #[test]
    fn report_exit_codes() {
        assert_eq!(fspec(&["report", "stone", "v3"]).0, 0);
        assert_eq!(fspec(&["report", "no-such-theorem", "v3"]).0, 2);
        assert_eq!(fspec(&["report", "stone", "m3"]).0, 2);
    }

    #[test]
    fn sweep_three() {
        let (code, out) = fspec(&["sweep", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("5 posets, 0 disagreements"));
        assert_eq!(fspec(&["sweep", "9"]).0, 3);
    }

    #[test]
    fn input_errors() {
        assert_eq!(fspec(&["check", "/no/such/file"]).0, 2);
        assert_eq!(fspec(&["check", "v3", "--bogus"]).0, 2);
        assert_eq!(fspec(&["check", "v3", "--dot"]).0, 2);
        assert_eq!(fspec(&["--help"]).0, 0);
    }

    #[test]
    fn pc_table_of_m3_marks_missing_entries() {
        let (code, out) = fspec(&["pc-table", "m3"]);
        assert_eq!(code, 0);
        assert!(out.lines().nth(2).unwrap().ends_with('-'));
    }
}
