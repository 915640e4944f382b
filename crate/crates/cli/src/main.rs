use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use revlib::group::{analyze_sublibraries_with, closure, SubLibraryOptions};
use revlib::netlist::{self, Netlist};
use revlib::qopt::{optimize_elementary, optimize_with, OptimizeOptions, DEFAULT_PASS_LIMIT};
use revlib::report::{self, TableKind};
use revlib::synth::{min_cost_table, min_length_table};
use revlib::{BitVector, Error, GateInstance, GateKind, Library, Permutation};

#[derive(Parser, Debug)]
#[command(name = "revlib", version, about = "Reversible gate libraries, synthesis and optimization")]
struct Cli {
    /// Worker threads for table sweeps.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Metric {
    Length,
    Cost,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every instance of a gate kind with its cycle notation.
    Gates {
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 3)]
        n: u8,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether a gate set generates every reversible function.
    CheckUniversal {
        #[arg(long, conflicts_with = "gates", required_unless_present = "gates")]
        lib: Option<String>,
        /// Gates separated by `;` or newlines, e.g. "C 1 2; T3 1 2 3".
        #[arg(long)]
        gates: Option<String>,
        /// Register width (default: widest wire used).
        #[arg(long)]
        n: Option<u8>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Universal sub-library statistics of a library.
    Sublibs {
        #[arg(long)]
        lib: String,
        #[arg(long)]
        list_minimal: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Synthesize a minimum-length or minimum-cost circuit for a 3-bit target.
    Synth {
        /// Target permutation in cycle notation, e.g. "(7,8)"; "()" is the identity.
        #[arg(long)]
        target: String,
        #[arg(long, conflicts_with = "gates", required_unless_present = "gates")]
        lib: Option<String>,
        /// Custom 3-wire gate set instead of a named library.
        #[arg(long)]
        gates: Option<String>,
        #[arg(long, value_enum, default_value_t = Metric::Length)]
        metric: Metric,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute result tables and diff them against the reference values.
    Tables {
        /// Comma-separated table ids (1-5), `errata`, or `all`.
        #[arg(long, default_value = "all")]
        which: String,
        /// Restrict to these libraries (comma-separated).
        #[arg(long, value_delimiter = ',')]
        lib: Vec<String>,
        #[arg(long)]
        emit_diff: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Directory for one file per table (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose and optimize a netlist; prints the elementary netlist.
    Optimize {
        /// Netlist path, `-` for stdin.
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the JSON cost report here instead of stderr.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_PASS_LIMIT)]
        pass_limit: u32,
        /// Use only the standard network of each gate.
        #[arg(long)]
        no_variants: bool,
    },
    /// Apply a netlist to an input bit string.
    Simulate {
        input: PathBuf,
        /// Bits x1..xn, e.g. 110.
        #[arg(long = "bits")]
        bits: String,
        /// Print the output state vector (allows V and U gates).
        #[arg(long)]
        unitary: bool,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Compute(e.to_string())
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Compute(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs as usize)
        .build_global()
        .map_err(|e| Failure::Compute(e.to_string()))?;
    match cli.command {
        Command::Gates { kind, n, format } => cmd_gates(&kind, n, format),
        Command::CheckUniversal { lib, gates, n, format } => {
            cmd_check_universal(lib.as_deref(), gates.as_deref(), n, format)
        }
        Command::Sublibs { lib, list_minimal, format } => cmd_sublibs(&lib, list_minimal, format),
        Command::Synth { target, lib, gates, metric, out } => {
            let l = match (lib, gates) {
                (Some(name), _) => Library::named(&name)?,
                (None, Some(list)) => Library::new("custom", 3, netlist::parse_gate_list(&list)?)?,
                (None, None) => return Err(Failure::Usage("give --lib or --gates".into())),
            };
            cmd_synth(&target, &l, metric, out.as_deref())
        }
        Command::Tables { which, lib, emit_diff, format, out } => {
            cmd_tables(&which, &lib, emit_diff, format, out.as_deref())
        }
        Command::Optimize { input, out, report, pass_limit, no_variants } => cmd_optimize(
            &input,
            out.as_deref(),
            report.as_deref(),
            OptimizeOptions { pass_limit, variants: !no_variants },
        ),
        Command::Simulate { input, bits, unitary } => cmd_simulate(&input, &bits, unitary),
    }
}

fn read_input(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Compute(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Compute(e.to_string()))
        }
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn cmd_gates(kind: &str, n: u8, format: Format) -> CliResult<()> {
    let kind: GateKind = kind.parse()?;
    let mut rows = Vec::new();
    for g in revlib::gate::enumerate_gates(kind, n)? {
        rows.push((g.to_string(), g.semantics(n)?.to_cycles()));
    }
    let text = match format {
        Format::Text => {
            let w = rows.iter().map(|(g, _)| g.len()).max().unwrap_or(0);
            rows.iter().map(|(g, c)| format!("{g:<w$}  {c}\n")).collect()
        }
        Format::Csv => {
            let mut s = String::from("gate,cycles\n");
            for (g, c) in &rows {
                s.push_str(&format!("{},{}\n", csv_field(g), csv_field(c)));
            }
            s
        }
        Format::Json => json_text(&Value::Array(
            rows.iter().map(|(g, c)| json!({ "gate": g, "cycles": c })).collect(),
        )),
    };
    emit(None, &text)
}

fn cmd_check_universal(
    lib: Option<&str>,
    gates: Option<&str>,
    n: Option<u8>,
    format: Format,
) -> CliResult<()> {
    let (label, gates): (String, Vec<GateInstance>) = match (lib, gates) {
        (Some(name), _) => {
            let l = Library::named(name)?;
            (l.name().to_string(), l.gates().to_vec())
        }
        (None, Some(list)) => ("gates".to_string(), netlist::parse_gate_list(list)?),
        (None, None) => return Err(Failure::Usage("give --lib or --gates".into())),
    };
    if gates.is_empty() {
        return Err(Error::EmptyGenerators.into());
    }
    let n = n.unwrap_or_else(|| gates.iter().map(GateInstance::max_wire).max().unwrap_or(1));
    let perms = gates
        .iter()
        .map(|g| g.semantics(n))
        .collect::<Result<Vec<_>, _>>()?;
    let c = closure(&perms)?;
    let text = match format {
        Format::Text => format!(
            "{label}: {} ({} gates, {} wires)\nclosure size: {}\n",
            if c.universal { "universal" } else { "not universal" },
            gates.len(),
            n,
            c.size
        ),
        Format::Csv => format!(
            "name,gates,wires,universal,closure_size\n{},{},{},{},{}\n",
            csv_field(&label),
            gates.len(),
            n,
            c.universal,
            c.size
        ),
        Format::Json => json_text(&json!({
            "name": label,
            "gates": gates.len(),
            "wires": n,
            "universal": c.universal,
            "closure_size": c.size,
        })),
    };
    emit(None, &text)
}

fn cmd_sublibs(lib: &str, list_minimal: bool, format: Format) -> CliResult<()> {
    let l = Library::named(lib)?;
    let rep = analyze_sublibraries_with(&l, SubLibraryOptions { list_minimal, naive: false })?;
    let min_size = rep.min_universal_size.map_or(String::new(), |s| s.to_string());
    let text = match format {
        Format::Json => json_text(&serde_json::to_value(&rep).expect("report serializes")),
        Format::Csv => {
            let mut s = String::from(
                "library,library_size,total_subsets,universal_subsets,utilization_percent,\
                 min_universal_size,subsets_at_min_size,universal_at_min_size,min_utilization_percent\n",
            );
            s.push_str(&format!(
                "{},{},{},{},{:.3},{},{},{},{:.3}\n",
                rep.library,
                rep.library_size,
                rep.total_subsets,
                rep.universal_subsets,
                rep.utilization_percent,
                min_size,
                rep.subsets_at_min_size,
                rep.universal_at_min_size,
                rep.min_utilization_percent
            ));
            s
        }
        Format::Text => {
            let mut s = format!(
                "library {}: {} gates\n\
                 sub-libraries: {}, universal: {} ({:.3}%)\n\
                 minimal universal size: {}; subsets of that size: {}, universal: {} ({:.3}%)\n",
                rep.library,
                rep.library_size,
                rep.total_subsets,
                rep.universal_subsets,
                rep.utilization_percent,
                if min_size.is_empty() { "none" } else { &min_size },
                rep.subsets_at_min_size,
                rep.universal_at_min_size,
                rep.min_utilization_percent
            );
            for set in rep.minimal_subsets.iter().flatten() {
                s.push_str(&format!("{{{}}}\n", set.join(", ")));
            }
            s
        }
    };
    emit(None, &text)
}

fn cmd_synth(target: &str, l: &Library, metric: Metric, out: Option<&Path>) -> CliResult<()> {
    let p = Permutation::from_cycles(target, l.wires())?;
    let table = match metric {
        Metric::Length => min_length_table(l)?,
        Metric::Cost => min_cost_table(l, l.cost_model())?,
    };
    let c = table.reconstruct(&p)?;
    emit(out, &c.to_string())
}

fn parse_which(which: &str) -> CliResult<Vec<Option<TableKind>>> {
    let mut out = Vec::new();
    for w in which.split(',').map(str::trim) {
        match w {
            "all" => out.extend(TableKind::ALL.map(Some)),
            "errata" => out.push(None),
            _ => out.push(Some(w.parse()?)),
        }
    }
    Ok(out)
}

fn cmd_tables(
    which: &str,
    libs: &[String],
    emit_diff: bool,
    format: Format,
    out: Option<&Path>,
) -> CliResult<()> {
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| Failure::Compute(format!("{}: {e}", dir.display())))?;
    }
    let ext = match format {
        Format::Text => "txt",
        Format::Csv => "csv",
        Format::Json => "json",
    };
    let mut stdout_parts = Vec::new();
    for item in parse_which(which)? {
        let (name, body, diff) = match item {
            None => {
                let e = report::errata()?;
                let body = match format {
                    Format::Text => report::errata_text(&e),
                    Format::Csv => report::errata_csv(&e)?,
                    Format::Json => json_text(&serde_json::to_value(&e).expect("errata serialize")),
                };
                ("errata".to_string(), body, None)
            }
            Some(kind) => {
                let rep = report::table_report_for(kind, libs)?;
                let body = match format {
                    Format::Text => rep.to_text(emit_diff),
                    Format::Csv => rep.table.to_csv()?,
                    Format::Json => {
                        let mut v = rep.to_json();
                        if !emit_diff {
                            v.as_object_mut().expect("report is an object").remove("diffs");
                        }
                        json_text(&v)
                    }
                };
                let diff = (emit_diff && format == Format::Csv).then(|| rep.diffs_csv()).transpose()?;
                (kind.to_string(), body, diff)
            }
        };
        match out {
            Some(dir) => {
                emit(Some(&dir.join(format!("{name}.{ext}"))), &body)?;
                if let Some(d) = diff {
                    emit(Some(&dir.join(format!("{name}_diff.csv"))), &d)?;
                }
            }
            None => {
                stdout_parts.push(body);
                if let Some(d) = diff {
                    stdout_parts.push(d);
                }
            }
        }
    }
    if out.is_none() {
        emit(None, &stdout_parts.join("\n"))?;
    }
    Ok(())
}

fn cmd_optimize(
    input: &Path,
    out: Option<&Path>,
    report: Option<&Path>,
    opts: OptimizeOptions,
) -> CliResult<()> {
    let result = match netlist::parse(&read_input(input)?)? {
        Netlist::Classical(c) => optimize_with(&c, opts)?,
        Netlist::Elementary(e) => optimize_elementary(&e, opts.pass_limit)?,
    };
    emit(out, &result.circuit.to_string())?;
    let rep = json_text(&serde_json::to_value(result.report).expect("cost report serializes"));
    match report {
        Some(p) => emit(Some(p), &rep),
        None => {
            eprint!("{rep}");
            Ok(())
        }
    }
}

fn cmd_simulate(input: &Path, bits: &str, unitary: bool) -> CliResult<()> {
    let bits: BitVector = bits.parse()?;
    let net = netlist::parse(&read_input(input)?)?;
    if bits.len() != net.wires() as usize {
        return Err(Error::BitLength { got: bits.len(), expected: net.wires() as usize }.into());
    }
    if unitary {
        let ec = match net {
            Netlist::Classical(c) => revlib::qopt::decompose_to_elementary(&c)?,
            Netlist::Elementary(e) => e,
        };
        let u = ec.unitary();
        let col = revlib::perm::encode(&bits)?.value() as usize - 1;
        let mut s = String::new();
        for row in 0..u.dim() {
            let a = u.get(row, col);
            if !a.is_zero() {
                let out = revlib::perm::decode(revlib::StateIndex::new(row as u32 + 1, ec.wires())?, ec.wires())?;
                s.push_str(&format!("{out} {a}\n"));
            }
        }
        return emit(None, &s);
    }
    let c = net.into_classical()?;
    let y = c.permutation()?.apply_bits(&bits)?;
    emit(None, &format!("{y}\n"))
}
