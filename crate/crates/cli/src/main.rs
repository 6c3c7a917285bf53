use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use swan_core::autos::aut_report;
use swan_core::chains::chain_report;
use swan_core::classify::stabilization_counts;
use swan_core::swan::{is_free, is_stably_free, table, SwanInput};
use swan_core::verify::verify;
use swan_core::Error;

#[derive(Parser, Debug)]
#[command(name = "swan", version, about = "Swan modules over quaternion groups Q_{8p}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide stable freeness of (N, r) over Q_{8p}.
    StablyFree {
        #[arg(long)]
        p: u32,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
    },
    /// Decide freeness of (N, r); complete for p = 7.
    Free {
        #[arg(long)]
        p: u32,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
    },
    /// One verdict per residue of (Z/8p)^x.
    Table {
        #[arg(long)]
        p: u32,
    },
    /// Recompute every printed value and list matches and mismatches.
    Verify {
        #[arg(long, default_value_t = 7)]
        p: u32,
    },
    /// Automorphism invariants of Q(16, p, 1).
    Aut {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        k: Option<u64>,
    },
    /// Homotopy-type counts of minimal (Q_{8p}, n)-complexes.
    Classify {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u32,
    },
    /// The 4-periodic resolution over Z[Q_{8p}] and its pullback at r.
    Chain {
        #[arg(long)]
        p: u32,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
    },
}

struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: 0 }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(command: &Command) -> swan_core::Result<Output> {
    match *command {
        Command::StablyFree { p, r } => {
            let input = SwanInput::new(p, r)?;
            let sf = is_stably_free(&input);
            let text = format!("(N, {}) over Q_{}: stably free: {}\n", input.r(), input.group_order(), yes_no(sf));
            Ok(Output::ok(text, json!({"p": p, "r": input.r(), "stably_free": sf})))
        }
        Command::Free { p, r } => {
            let v = is_free(&SwanInput::new(p, r)?)?;
            let record = v.record();
            let mut text = format!("stably free: {}; free: {}\n", yes_no(v.stably_free), v.free.as_str());
            text.push_str(&format!("  rho1 = {}\n", record.rho1));
            if let (Some(raw), Some(class)) = (&record.rho2_raw_text, record.rho2_class) {
                text.push_str(&format!("  rho2 = {raw} (class {class})\n"));
            }
            for d in &v.diagnostics {
                text.push_str(&format!("  {d}\n"));
            }
            Ok(Output::ok(text, serde_json::to_value(&record).expect("verdict serializes")))
        }
        Command::Table { p } => {
            let rows = table(p)?;
            let mut text = format!("{:>4}  {:<12} {:<5} {:<6} {}\n", "r", "stably free", "rho1", "rho2", "free");
            let mut records = Vec::with_capacity(rows.len());
            for v in &rows {
                let rec = v.record();
                let rho2 = rec.rho2_class.map_or("-".to_string(), |c| c.to_string());
                text.push_str(&format!(
                    "{:>4}  {:<12} {:<5} {:<6} {}\n",
                    rec.r,
                    yes_no(rec.stably_free),
                    rec.rho1,
                    rho2,
                    rec.free.as_str()
                ));
                records.push(rec);
            }
            Ok(Output::ok(text, json!({"p": p, "rows": records})))
        }
        Command::Verify { p } => {
            let report = verify(p)?;
            let code = if report.mismatches().is_empty() { 0 } else { 2 };
            let value = serde_json::to_value(&report).expect("report serializes");
            Ok(Output { text: report.render_text(), json: value, code })
        }
        Command::Aut { p, k } => {
            let report = aut_report(p, k)?;
            let mut text = format!(
                "Q(16,{p},1): |Aut| = {}, |Inn| = {}, Out = {}\n  psi4 image mod {}: {:?}\n",
                report.aut_order,
                report.inn_order,
                report.out_invariants.iter().map(|d| format!("C{d}")).collect::<Vec<_>>().join(" x "),
                16 * p,
                report.psi4_image
            );
            if let Some(img) = &report.psik_image {
                text.push_str(&format!("  {}\n", serde_json::to_string(img).expect("image serializes")));
            }
            for f in &report.fixtures {
                text.push_str(&format!("  fixture {}\n", serde_json::to_string(f).expect("fixture serializes")));
            }
            Ok(Output::ok(text, serde_json::to_value(&report).expect("report serializes")))
        }
        Command::Classify { p, n } => {
            let report = stabilization_counts(p, n)?;
            Ok(Output::ok(report.render_text(), serde_json::to_value(&report).expect("report serializes")))
        }
        Command::Chain { p, r } => {
            let report = chain_report(p, r)?;
            let mut text = format!("Z[Q_{}] resolution, Z-ranks {:?}\n", 8 * p, report.zranks);
            for (k, divs) in report.elementary_divisors.iter().enumerate() {
                let nontrivial: Vec<_> = divs.iter().filter(|d| **d != 1).collect();
                text.push_str(&format!("  d{}: rank {}, divisors != 1: {:?}\n", k + 1, divs.len(), nontrivial));
            }
            text.push_str(&format!(
                "  d^2 = 0: {}; equivariant: {}; chain map: {}; regular character: {}\n",
                yes_no(report.squares_to_zero),
                yes_no(report.equivariant),
                yes_no(report.chain_map),
                yes_no(report.regular_character)
            ));
            text.push_str(&format!("  pullback at r = {} (m = {}): degree {}\n", report.r, report.m, report.degree));
            Ok(Output::ok(text, serde_json::to_value(&report).expect("report serializes")))
        }
    }
}

fn with_schema(value: Value) -> Value {
    match value {
        Value::Object(mut map) => {
            map.insert("schema".into(), json!(1));
            Value::Object(map)
        }
        other => json!({"schema": 1, "data": other}),
    }
}

fn emit(cli: &Cli, body: String) -> Result<(), String> {
    match &cli.out {
        Some(path) => fs::write(path, body).map_err(|e| format!("cannot write {path}: {e}")),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (body, code) = match run(&cli.command) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Json => format!("{:#}\n", with_schema(out.json)),
            };
            (body, out.code)
        }
        Err(e) => {
            let kind = match e {
                Error::OutOfScope(_) => "out of scope",
                _ => "error",
            };
            match cli.format {
                Format::Text => eprintln!("swan: {e}"),
                Format::Json => eprintln!("{}", json!({"schema": 1, "error": kind, "message": e.to_string()})),
            }
            return ExitCode::from(1);
        }
    };
    if let Err(msg) = emit(&cli, body) {
        eprintln!("swan: {msg}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
