use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use smallpart::identities::{build_entry_side, lookup, registry, verify_with_ceiling, SideValue};
use smallpart::tables::table;
use smallpart::{verify_all, Error, Status, VerificationReport};

/// Verify partition identities by building each side independently.
#[derive(Parser)]
#[command(name = "smallpart", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one identity or the whole registry.
    Verify(VerifyArgs),
    /// Print a worked table of weights at a fixed norm.
    Table {
        /// Table number: 2, 3, 4 or 7.
        #[arg(long)]
        id: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the coefficients of one side of an identity.
    Coeffs {
        #[arg(long)]
        id: String,
        /// Zero-based side index.
        #[arg(long)]
        side: usize,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List registered identities.
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    id: Option<String>,
    #[arg(long)]
    all: bool,
    /// Truncation order for series sides.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    order: u64,
    /// Largest norm reached by enumeration sides.
    #[arg(long, default_value_t = 20)]
    enum_ceiling: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Table { id, format } => run_table(id, format),
        Command::Coeffs {
            id,
            side,
            order,
            format,
        } => run_coeffs(&id, side, order, format),
        Command::List { format } => run_list(format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run_verify(args: VerifyArgs) -> Result<u8, Error> {
    let order = args.order as usize;
    let reports = match &args.id {
        Some(id) => vec![verify_with_ceiling(id, order, args.enum_ceiling)?],
        None => verify_all(order, args.enum_ceiling),
    };
    match args.format {
        Format::Json => {
            let value = if args.id.is_some() {
                serde_json::to_value(&reports[0])
            } else {
                serde_json::to_value(&reports)
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&value.expect("reports serialize")).expect("json")
            );
        }
        Format::Csv => {
            println!("id,kind,order,status,first_divergent_exponent,ms");
            for r in &reports {
                println!(
                    "{},{},{},{},{},{:.3}",
                    r.id,
                    r.kind.as_str(),
                    r.order,
                    r.status,
                    r.first_divergent_exponent
                        .map(|e| e.to_string())
                        .unwrap_or_default(),
                    r.ms
                );
            }
        }
        Format::Text => {
            for r in &reports {
                print_report_line(r);
                if args.id.is_some() {
                    print_sides(r);
                }
            }
            if args.id.is_none() {
                let failed = reports.iter().filter(|r| r.status.is_failure()).count();
                println!("{} identities checked, {failed} failed", reports.len());
            }
        }
    }
    let failed = reports.iter().any(|r| r.status.is_failure());
    Ok(if failed { EXIT_MISMATCH } else { 0 })
}

fn print_report_line(r: &VerificationReport) {
    let first = r
        .first_divergent_exponent
        .map(|e| format!(" first divergence at q^{e}"))
        .unwrap_or_default();
    let err = r
        .error
        .as_deref()
        .map(|e| format!(" ({e})"))
        .unwrap_or_default();
    println!(
        "{:<18} {:<16} order {:<4} {:>9.2} ms{first}{err}",
        r.id,
        r.status.as_str(),
        r.order,
        r.ms
    );
}

fn print_sides(r: &VerificationReport) {
    let labels: Vec<String> = lookup(&r.id)
        .map(|e| e.sides.iter().map(|s| s.label.clone()).collect())
        .unwrap_or_default();
    for (i, side) in r.sides.iter().enumerate() {
        let label = labels.get(i).map(String::as_str).unwrap_or("");
        let shown: Vec<&str> = side.coeffs.iter().take(12).map(String::as_str).collect();
        let more = if side.coeffs.len() > 12 { ", ..." } else { "" };
        println!("  [{i}] {:<18} {label}", side.tag);
        println!("      {}{more}", shown.join(", "));
    }
    if r.status == Status::Mismatch {
        println!("  sides disagree; see the coefficients above");
    }
}

fn run_table(id: u32, format: Format) -> Result<u8, Error> {
    let t = table(id)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&t).expect("json")),
        Format::Csv => {
            println!("set,weight,norm,partition,n,value");
            for c in &t.columns {
                for r in &c.rows {
                    let n = r.n.map(|n| n.to_string()).unwrap_or_default();
                    println!(
                        "{},{},{},\"{}\",{n},{}",
                        c.set, c.weight, c.norm, r.partition, r.weight
                    );
                }
            }
        }
        Format::Text => {
            println!("Table {}: {}", t.id, t.title);
            for c in &t.columns {
                println!();
                println!("{} with weight {} at N = {}", c.set, c.weight, c.norm);
                for r in &c.rows {
                    match r.n {
                        Some(n) => println!("  {:<24} n = {n:<3} {:>6}", r.partition, r.weight),
                        None => println!("  {:<24} {:>14}", r.partition, r.weight),
                    }
                }
                println!("  {:<24} {:>14}", "total", c.total);
            }
        }
    }
    Ok(0)
}

fn run_coeffs(id: &str, side: usize, order: usize, format: Format) -> Result<u8, Error> {
    let entry = lookup(id)?;
    let value = build_entry_side(&entry, side, order)?;
    let s = &entry.sides[side];
    let coeffs: Vec<String> = (0..value.len()).map(|k| value.coeff_string(k)).collect();
    match format {
        Format::Json => {
            let v = json!({
                "id": entry.id,
                "side": side,
                "tag": s.tag.as_str(),
                "label": s.label,
                "order": order,
                "coeffs": coeffs,
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
        Format::Csv => {
            println!("exponent,coefficient");
            for (k, c) in coeffs.iter().enumerate() {
                println!("{k},\"{c}\"");
            }
        }
        Format::Text => {
            println!("{} side {side} [{}] {}", entry.id, s.tag, s.label);
            if let SideValue::Series(series) = &value {
                println!("{series}");
            } else {
                for (k, c) in coeffs.iter().enumerate().skip(1) {
                    println!("N = {k}: {c}");
                }
            }
        }
    }
    Ok(0)
}

fn run_list(format: Format) -> Result<u8, Error> {
    let all = registry();
    match format {
        Format::Json => {
            let v: Vec<_> = all
                .iter()
                .map(|e| {
                    json!({
                        "id": e.id,
                        "kind": e.kind.as_str(),
                        "description": e.description,
                        "statement": e.statement,
                        "sides": e.sides.iter().map(|s| json!({"tag": s.tag.as_str(), "label": s.label})).collect::<Vec<_>>(),
                        "max_enum_norm": e.max_enum_norm,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
        Format::Csv => {
            println!("id,kind,sides,description");
            for e in &all {
                println!(
                    "{},{},{},\"{}\"",
                    e.id,
                    e.kind.as_str(),
                    e.sides.len(),
                    e.description
                );
            }
        }
        Format::Text => {
            for e in &all {
                let tags: Vec<&str> = e.sides.iter().map(|s| s.tag.as_str()).collect();
                println!("{:<18} {:<10} {}", e.id, e.kind.as_str(), tags.join(" | "));
                println!("    {}", e.description);
            }
        }
    }
    Ok(0)
}
