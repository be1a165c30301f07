//! Command-line front end: `decompose`, `compare`, `table`, `generators`.
//!
//! Exit codes: 0 success, 1 a `compare` run found disagreeing methods,
//! 2 invalid input, 3 internal cross-method inconsistency (a bug trap).

use clap::{Parser, Subcommand};
use jordan_tensor::cli::{
    self, blocks_compact, csv_header, CliError, Format, Method, OutputRecord,
};
use jordan_tensor::oracle::GeneratorInfo;
use jordan_tensor::Characteristic;

#[derive(Parser)]
#[command(
    name = "jordan-tensor",
    about = "Jordan block structure of a tensor product of Jordan blocks",
    version
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose J(a,s) (x) J(b,t) over characteristic p.
    Decompose {
        /// Size of the first block.
        #[arg(long)]
        s: usize,
        /// Size of the second block.
        #[arg(long)]
        t: usize,
        /// Field characteristic: 0 or a prime.
        #[arg(long, default_value_t = 0)]
        p: u64,
        /// Treat the first eigenvalue as 0.
        #[arg(long)]
        alpha_zero: bool,
        /// Treat the second eigenvalue as 0.
        #[arg(long)]
        beta_zero: bool,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include diagnostics (flags, graded determinants, nilpotency,
        /// dimension profile).
        #[arg(long)]
        extras: bool,
    },
    /// Run several methods over a grid and report any disagreement.
    Compare {
        /// Largest s (grid runs over 1 <= s <= smax, s <= t <= tmax).
        #[arg(long)]
        smax: usize,
        /// Largest t.
        #[arg(long)]
        tmax: usize,
        /// Comma-separated characteristics, e.g. 0,2,3,5.
        #[arg(long, value_delimiter = ',', default_value = "0,2,3,5,7")]
        primes: Vec<u64>,
        /// Comma-separated methods to compare.
        #[arg(long, value_delimiter = ',', value_enum,
              default_values_t = [Method::Delta, Method::Minors, Method::Oracle])]
        methods: Vec<Method>,
    },
    /// Print the decomposition table for a grid of (s, t, p).
    Table {
        #[arg(long)]
        smax: usize,
        #[arg(long)]
        tmax: usize,
        /// Comma-separated characteristics, e.g. 0,2,3,5.
        #[arg(long, value_delimiter = ',', default_value = "0,2,3,5,7")]
        primes: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        extras: bool,
    },
    /// Print homogeneous module generators realizing the block structure.
    Generators {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        /// Field characteristic: 0 or a prime.
        #[arg(long, default_value_t = 0)]
        p: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() {
    let args = Args::parse();
    std::process::exit(run(args.command));
}

fn run(command: Command) -> i32 {
    let outcome = match command {
        Command::Decompose {
            s,
            t,
            p,
            alpha_zero,
            beta_zero,
            method,
            format,
            extras,
        } => run_decompose(s, t, p, alpha_zero, beta_zero, method, format, extras),
        Command::Compare {
            smax,
            tmax,
            primes,
            methods,
        } => {
            return match cli::compare_grid(smax, tmax, &primes, &methods) {
                Ok(out) if out.mismatches.is_empty() => {
                    println!("compared {} cases: all methods agree", out.cases);
                    0
                }
                Ok(out) => {
                    println!(
                        "compared {} cases: {} mismatches",
                        out.cases,
                        out.mismatches.len()
                    );
                    for m in &out.mismatches {
                        let sides: Vec<String> = m
                            .results
                            .iter()
                            .map(|(name, blocks)| format!("{name}={blocks}"))
                            .collect();
                        println!("s={} t={} p={}: {}", m.s, m.t, m.p, sides.join(" "));
                    }
                    1
                }
                Err(e) => report(e),
            };
        }
        Command::Table {
            smax,
            tmax,
            primes,
            format,
            extras,
        } => run_table(smax, tmax, &primes, format, extras),
        Command::Generators { s, t, p, format } => run_generators(s, t, p, format),
    };
    match outcome {
        Ok(()) => 0,
        Err(e) => report(e),
    }
}

fn report(e: CliError) -> i32 {
    eprintln!("error: {e}");
    match e {
        CliError::Invalid(_) => 2,
        CliError::Disagreement { .. } => 3,
    }
}

#[allow(clippy::too_many_arguments)]
fn run_decompose(
    s: usize,
    t: usize,
    p: u64,
    alpha_zero: bool,
    beta_zero: bool,
    method: Method,
    format: Format,
    extras: bool,
) -> Result<(), CliError> {
    let spec = cli::validated_spec(s, t, alpha_zero, beta_zero, p)?;
    let record = cli::build_record(&spec, method, extras)?;
    match format {
        Format::Json => println!("{}", record.to_json()),
        Format::Csv => {
            println!("{}", csv_header());
            println!("{}", record.to_csv_line());
        }
        Format::Text => print_record_text(&record),
    }
    Ok(())
}

fn print_record_text(record: &OutputRecord) {
    println!(
        "s={} t={} p={} alpha_zero={} beta_zero={} method={}",
        record.s, record.t, record.p, record.alpha_zero, record.beta_zero, record.method
    );
    let class = match record.eigenvalue_class {
        jordan_tensor::EigenvalueClass::Zero => "zero",
        jordan_tensor::EigenvalueClass::NonzeroProduct => "nonzero-product",
    };
    println!("eigenvalue class: {class}");
    let blocks = record
        .blocks
        .iter()
        .map(|b| format!("{}^{}", b.size, b.multiplicity))
        .collect::<Vec<_>>()
        .join("+");
    println!("blocks: {blocks}");
    if let Some(extras) = &record.extras {
        if let Some(flags) = &extras.delta_flags {
            let bits: String = flags.iter().map(|b| char::from(b'0' + b)).collect();
            println!("delta flags: {bits}");
        }
        if let Some(dets) = &extras.roberts_determinants {
            println!("graded determinants: {}", dets.join(" "));
        }
        if let Some(n) = extras.nilpotency {
            println!("nilpotency: {n}");
        }
        if let Some(dims) = &extras.dims {
            let dims: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
            println!("dimension profile: {}", dims.join(" "));
        }
    }
}

fn run_table(
    smax: usize,
    tmax: usize,
    primes: &[u64],
    format: Format,
    extras: bool,
) -> Result<(), CliError> {
    let records = cli::table_records(smax, tmax, primes, extras)?;
    match format {
        Format::Csv => {
            println!("{}", csv_header());
            for r in &records {
                println!("{}", r.to_csv_line());
            }
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string(&records).expect("records always serialize")
            );
        }
        Format::Text => {
            for r in &records {
                let blocks = r
                    .blocks
                    .iter()
                    .map(|b| format!("{}^{}", b.size, b.multiplicity))
                    .collect::<Vec<_>>()
                    .join("+");
                println!("s={} t={} p={}: {}", r.s, r.t, r.p, blocks);
            }
        }
    }
    Ok(())
}

fn run_generators(s: usize, t: usize, p: u64, format: Format) -> Result<(), CliError> {
    // validate through the same path as decompose so errors exit with 2
    let spec = cli::validated_spec(s, t, false, false, p)?;
    let characteristic = Characteristic::new(p)?;
    let norm = spec.normalized();
    let generators = jordan_tensor::oracle::generating_set_info(norm.s(), norm.t(), characteristic);
    match format {
        Format::Json => {
            let payload = serde_json::json!({
                "s": norm.s(),
                "t": norm.t(),
                "p": p,
                "generators": generators,
            });
            println!("{payload}");
        }
        _ => {
            let decomposition = jordan_tensor::delta::decompose_via_delta(&norm);
            println!(
                "s={} t={} p={} blocks: {}",
                norm.s(),
                norm.t(),
                p,
                blocks_compact(&decomposition)
            );
            for (i, g) in generators.iter().enumerate() {
                println!(
                    "generator {i}: degree {}, chain length {}, {}: {}",
                    g.degree,
                    g.chain_length,
                    if g.leading { "leading" } else { "x-shift" },
                    polynomial_string(g)
                );
            }
        }
    }
    Ok(())
}

fn polynomial_string(g: &GeneratorInfo) -> String {
    let terms: Vec<String> = g
        .terms
        .iter()
        .map(|t| {
            let mut parts = Vec::new();
            if t.coeff != "1" || (t.x_exp == 0 && t.y_exp == 0) {
                parts.push(t.coeff.clone());
            }
            match t.x_exp {
                0 => {}
                1 => parts.push("x".to_string()),
                e => parts.push(format!("x^{e}")),
            }
            match t.y_exp {
                0 => {}
                1 => parts.push("y".to_string()),
                e => parts.push(format!("y^{e}")),
            }
            parts.join("*")
        })
        .collect();
    terms.join(" + ")
}
