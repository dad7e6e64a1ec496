//! `genera` — command-line front end for the exact invariant calculators in
//! `genera-core`.
//!
//! Exit codes: `0` success, `1` a verification suite reported a failure,
//! `2` usage, parse, or domain errors.
//!
//! `--json` switches every subcommand to a single machine-readable JSON
//! document on stdout with the same numeric content as the text output
//! (always exact; integers are emitted as arbitrary-precision JSON numbers).
//! `--approx` appends decimal approximations to exact rationals in text
//! output; it has no effect under `--json`.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use genera_core::genera::{ahat_poly, evaluate, genus_ph_ahat, l_poly};
use genera_core::json as gjson;
use genera_core::numbers::{bernoulli, decimal_approx, format_rational, Rational};
use genera_core::obstruction::{o0_formula, o0_stable_formula, realize_o0};
use genera_core::plumbing::{
    bounds_homotopy_sphere, determinant, e8_graph, signature, PlumbingGraph,
};
use genera_core::surgery::{bp_order, bp_order_alt, build_m0, build_w0, lemma1_pm, min_euler_char};
use genera_core::symmetric::{GradedPoly, Partition};
use genera_core::verify;
use genera_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "genera",
    version,
    about = "Exact genus, plumbing, and obstruction calculators",
    propagate_version = true
)]
struct Cli {
    /// Emit one JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Append decimal approximations to exact rationals (text output only)
    #[arg(long, global = true)]
    approx: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenusKind {
    /// Hirzebruch L-genus
    L,
    /// Ahat-genus
    Ahat,
}

#[derive(Subcommand)]
enum Command {
    /// Bernoulli numbers B_1 .. B_max (unsigned convention, B_m = |B_2m|)
    Bernoulli {
        /// Largest index to print
        #[arg(long)]
        max: u32,
    },

    /// A genus polynomial in the Pontrjagin classes, optionally paired
    /// against the Pontrjagin numbers of a manifold record
    Genus {
        /// Which multiplicative sequence to expand
        #[arg(long = "type", value_enum)]
        kind: GenusKind,

        /// Weight of the polynomial (dimension 4m)
        #[arg(long)]
        m: u32,

        /// Manifold record (JSON) to evaluate the polynomial on
        #[arg(long, value_name = "FILE")]
        eval: Option<PathBuf>,
    },

    /// Intersection form of a plumbing graph and the boundary
    /// homotopy-sphere criterion
    #[command(group(ArgGroup::new("source").required(true).args(["file", "e8"])))]
    Plumbing {
        /// Plumbing graph record (JSON)
        #[arg(long, value_name = "FILE")]
        file: Option<PathBuf>,

        /// Use the standard E8 graph instead of a file
        #[arg(long)]
        e8: bool,

        /// Half fibre dimension for --e8 (plumbing S^2m-bundles over S^2m)
        #[arg(long, default_value_t = 2)]
        m: u32,
    },

    /// Survey of the 4m-dimensional invariants: bP orders, W0 and M0 data
    Table {
        /// Largest m (rows run from m = 2)
        #[arg(long)]
        max: u32,
    },

    /// Top obstruction o0 on a manifold record
    Obstruction {
        /// Manifold record (JSON)
        #[arg(long, value_name = "FILE")]
        manifold: PathBuf,

        /// Use the stable formula (chi - c_2m)/2 instead of the
        /// Chern-number expansion
        #[arg(long)]
        stable: bool,
    },

    /// Copies (a, b) of a reference manifold and its reversal realizing a
    /// prescribed integer obstruction
    Realize {
        /// Euler characteristic of the reference manifold (chi >= 2)
        #[arg(long, allow_hyphen_values = true)]
        chi: String,

        /// Target value of the integer obstruction
        #[arg(long, allow_hyphen_values = true)]
        target: String,
    },

    /// Run the named self-verification suites
    #[command(group(ArgGroup::new("scope").required(true).args(["all", "id"])))]
    Verify {
        /// Run every suite
        #[arg(long)]
        all: bool,

        /// Run a single suite by id
        #[arg(long, value_name = "ID")]
        id: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let out = Output {
        json: cli.json,
        approx: cli.approx,
    };
    let (text, value, code) = match &cli.command {
        Command::Bernoulli { max } => cmd_bernoulli(&out, *max)?,
        Command::Genus { kind, m, eval } => cmd_genus(&out, *kind, *m, eval.as_deref())?,
        Command::Plumbing { file, e8, m } => cmd_plumbing(file.as_deref(), *e8, *m)?,
        Command::Table { max } => cmd_table(*max)?,
        Command::Obstruction { manifold, stable } => cmd_obstruction(manifold, *stable)?,
        Command::Realize { chi, target } => cmd_realize(chi, target)?,
        Command::Verify { all: _, id } => cmd_verify(id.as_deref())?,
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        print!("{text}");
    }
    Ok(code)
}

struct Output {
    json: bool,
    approx: bool,
}

impl Output {
    /// Exact rendering, with a decimal tail in approx mode.
    fn rational(&self, r: &Rational) -> String {
        if self.approx && !self.json {
            format!("{} (~ {})", format_rational(r), decimal_approx(r, 12))
        } else {
            format_rational(r)
        }
    }
}

fn parse_bigint(s: &str, what: &str) -> Result<BigInt> {
    s.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("{what}: `{s}` is not an integer")))
}

fn read_to_string(path: &std::path::Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

type CommandOutput = (String, Value, ExitCode);

fn cmd_bernoulli(out: &Output, max: u32) -> Result<CommandOutput> {
    if max == 0 {
        return Err(Error::Domain("--max must be at least 1".into()));
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    for m in 1..=max {
        let b = bernoulli(m)?;
        writeln!(text, "B_{m} = {}", out.rational(&b)).unwrap();
        rows.push(json!({ "m": m, "value": format_rational(&b) }));
    }
    Ok((
        text,
        json!({ "command": "bernoulli", "max": max, "values": rows }),
        ExitCode::SUCCESS,
    ))
}

fn genus_poly(kind: GenusKind, m: u32) -> Result<(&'static str, GradedPoly)> {
    if m == 0 {
        return Err(Error::Domain("--m must be at least 1".into()));
    }
    Ok(match kind {
        GenusKind::L => ("L", l_poly(m)),
        GenusKind::Ahat => ("Ahat", ahat_poly(m)),
    })
}

fn cmd_genus(
    out: &Output,
    kind: GenusKind,
    m: u32,
    eval: Option<&std::path::Path>,
) -> Result<CommandOutput> {
    let (name, poly) = genus_poly(kind, m)?;
    let mut text = format!("{name}_{m} = {poly}\n");
    let mut doc = json!({
        "command": "genus",
        "type": name,
        "m": m,
        "polynomial": gjson::graded_poly_to_json(&poly),
    });
    if let Some(path) = eval {
        let record = gjson::manifold_from_str(&read_to_string(path)?)?;
        let numbers = record.pontrjagin.as_ref().ok_or_else(|| {
            Error::MissingData(format!(
                "`{}` carries no Pontrjagin numbers (dimension {})",
                record.name, record.dim
            ))
        })?;
        let value = evaluate(&poly, numbers)?;
        writeln!(
            text,
            "<{name}_{m}, [{}]> = {}",
            record.name,
            out.rational(&value)
        )
        .unwrap();
        doc["evaluation"] = json!({
            "manifold": record.name,
            "value": format_rational(&value),
        });
    }
    Ok((text, doc, ExitCode::SUCCESS))
}

fn cmd_plumbing(file: Option<&std::path::Path>, e8: bool, m: u32) -> Result<CommandOutput> {
    let graph: PlumbingGraph = if let Some(path) = file {
        gjson::graph_from_str(&read_to_string(path)?)?
    } else {
        debug_assert!(e8);
        e8_graph(m)?
    };
    let matrix = graph.intersection_matrix();
    let det = determinant(&matrix);
    let sig = signature(&matrix)?;
    let verdict = bounds_homotopy_sphere(&graph);

    let mut text = format!(
        "plumbing of S^{0}-bundles over S^{0}: {1} vertices, {2} edges, total space dimension {3}\n",
        2 * graph.fiber_half_dim(),
        graph.vertices().len(),
        graph.edges().len(),
        graph.total_space_dim(),
    );
    writeln!(text, "intersection matrix:").unwrap();
    for i in 0..matrix.n() {
        let row = matrix
            .row(i)
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(text, "  {row}").unwrap();
    }
    writeln!(text, "determinant = {det}").unwrap();
    writeln!(text, "signature   = {sig}").unwrap();
    writeln!(text, "verdict     = {}", verdict.code()).unwrap();

    let matrix_json: Vec<Value> = (0..matrix.n())
        .map(|i| {
            Value::Array(
                matrix
                    .row(i)
                    .iter()
                    .map(gjson::bigint_to_json)
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let doc = json!({
        "command": "plumbing",
        "graph": gjson::graph_to_json(&graph),
        "intersection_matrix": matrix_json,
        "determinant": gjson::bigint_to_json(&det),
        "signature": sig,
        "verdict": verdict.code(),
    });
    Ok((text, doc, ExitCode::SUCCESS))
}

fn cmd_table(max: u32) -> Result<CommandOutput> {
    if max < 2 {
        return Err(Error::Domain(
            "--max must be at least 2 (the table starts at m = 2)".into(),
        ));
    }
    let header = [
        "m",
        "|bP_4m|",
        "sigma(W0)",
        "p_m[W0]",
        "chi(W0)",
        "q",
        "chi(M0)",
        "min |chi|",
    ];
    let mut cells: Vec<Vec<String>> = Vec::new();
    let mut rows_json = Vec::new();
    for m in 2..=max {
        let bp = bp_order(m)?;
        if bp != bp_order_alt(m)? {
            return Err(Error::Inconsistent(format!(
                "the two |bP| closed forms disagree at m = {m}"
            )));
        }
        let w0 = build_w0(m)?;
        let pm = w0.pontrjagin_number(&Partition::single(m));
        if pm != lemma1_pm(m)? {
            return Err(Error::Inconsistent(format!(
                "p_m[W0] construction and closed form disagree at m = {m}"
            )));
        }
        let rep = build_m0(m)?;
        let min_chi = min_euler_char(m)?;
        cells.push(vec![
            m.to_string(),
            bp.to_string(),
            w0.sigma.to_string(),
            pm.to_string(),
            w0.chi.to_string(),
            rep.q.to_string(),
            rep.result.chi.to_string(),
            min_chi.to_string(),
        ]);
        rows_json.push(json!({
            "m": m,
            "bp_order": gjson::bigint_to_json(&bp),
            "sigma_w0": gjson::bigint_to_json(&w0.sigma),
            "p_m_w0": gjson::bigint_to_json(&pm),
            "chi_w0": gjson::bigint_to_json(&w0.chi),
            "q": gjson::bigint_to_json(&rep.q),
            "chi_m0": gjson::bigint_to_json(&rep.result.chi),
            "min_euler_char": gjson::bigint_to_json(&min_chi),
        }));
    }

    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &cells {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut text = String::new();
    let render = |row: &[String], widths: &[usize]| -> String {
        row.iter()
            .zip(widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let header_row: Vec<String> = header.iter().map(|s| s.to_string()).collect();
    writeln!(text, "{}", render(&header_row, &widths)).unwrap();
    for row in &cells {
        writeln!(text, "{}", render(row, &widths)).unwrap();
    }
    Ok((
        text,
        json!({ "command": "table", "max": max, "rows": rows_json }),
        ExitCode::SUCCESS,
    ))
}

fn cmd_obstruction(path: &std::path::Path, stable: bool) -> Result<CommandOutput> {
    let record = gjson::manifold_from_str(&read_to_string(path)?)?;
    let o0 = if stable {
        o0_stable_formula(&record)?
    } else {
        o0_formula(&record)?
    };
    let mut text = format!(
        "manifold: {} (dimension {}, m = {})\n",
        record.name,
        record.dim,
        record.dim / 4
    );
    writeln!(
        text,
        "o0 = {o0}   [{} formula]",
        if stable { "stable" } else { "unstable" }
    )
    .unwrap();
    let mut doc = json!({
        "command": "obstruction",
        "manifold": record.name,
        "dim": record.dim,
        "m": record.dim / 4,
        "formula": if stable { "stable" } else { "unstable" },
        "o0": gjson::bigint_to_json(&o0),
    });
    // The parity pairing behind the mod-2 part, when the record allows it.
    // Whether the Sq^2 hypothesis applies is knowledge about the actual
    // manifold, so only the parity is reported here.
    if let Ok(pairing) = genus_ph_ahat(&record) {
        if pairing.is_integer() {
            let g = pairing.to_integer();
            let even = (&g % 2u32) == BigInt::from(0);
            writeln!(
                text,
                "<ph.Ahat, [{}]> = {g} ({})",
                record.name,
                if even { "even" } else { "odd" }
            )
            .unwrap();
            doc["pairing"] = json!({
                "value": gjson::bigint_to_json(&g),
                "even": even,
            });
        }
    }
    Ok((text, doc, ExitCode::SUCCESS))
}

fn cmd_realize(chi: &str, target: &str) -> Result<CommandOutput> {
    let chi = parse_bigint(chi, "--chi")?;
    let target = parse_bigint(target, "--target")?;
    let (a, b) = realize_o0(&chi, &target)?;
    let text = format!(
        "a = {a}\nb = {b}\ncheck: b*(chi - 1) - (a - 1) = {}\n",
        &b * (&chi - 1u32) - (&a - 1u32)
    );
    let doc = json!({
        "command": "realize",
        "chi": gjson::bigint_to_json(&chi),
        "target": gjson::bigint_to_json(&target),
        "a": gjson::bigint_to_json(&a),
        "b": gjson::bigint_to_json(&b),
    });
    Ok((text, doc, ExitCode::SUCCESS))
}

fn cmd_verify(id: Option<&str>) -> Result<CommandOutput> {
    let reports = match id {
        Some(id) => vec![verify::run_check(id)?],
        None => verify::run_all(),
    };
    let mut text = String::new();
    let mut checks_json = Vec::new();
    let mut all_passed = true;
    for report in &reports {
        let passed = report.passed();
        all_passed &= passed;
        writeln!(
            text,
            "{}  {:<22} {}",
            if passed { "ok  " } else { "FAIL" },
            report.id,
            report.title
        )
        .unwrap();
        for line in &report.lines {
            if !line.pass {
                writeln!(
                    text,
                    "      failed: {} (got {}, want {})",
                    line.label, line.got, line.want
                )
                .unwrap();
            }
        }
        checks_json.push(json!({
            "id": report.id,
            "title": report.title,
            "passed": passed,
            "lines": report
                .lines
                .iter()
                .map(|l| json!({
                    "label": l.label,
                    "got": l.got,
                    "want": l.want,
                    "pass": l.pass,
                }))
                .collect::<Vec<_>>(),
        }));
    }
    let n_pass = reports.iter().filter(|r| r.passed()).count();
    writeln!(text, "{} suites, {} passed", reports.len(), n_pass).unwrap();
    let doc = json!({
        "command": "verify",
        "passed": all_passed,
        "checks": checks_json,
    });
    let code = if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    };
    Ok((text, doc, code))
}
