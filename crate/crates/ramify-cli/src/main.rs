//! `ramify` — counting, poset checks, and finite-field censuses for
//! ramification types of polynomial self-maps of the affine line.
//!
//! Exit codes: 0 = success / verified, 1 = verification mismatch or model
//! falsification, 2 = usage or precondition error. JSON (or CSV) goes to
//! stdout; diagnostics and timings go to stderr.

use clap::{Parser, Subcommand, ValueEnum};
use ramify::census::{census, infer_c, verify_count, CensusOptions, DEFAULT_BUDGET};
use ramify::field::{prime_power, Field};
use ramify::partitions::partition_count;
use ramify::poset::{
    build_poset, check_vanishing, euler_mobius_check, orbit_decomposition, quotient_poset,
    GroupAction,
};
use ramify::report;
use ramify::types::{
    admissibility, c_of_m, enumerate_types, minimal_admissible_n, AdmissibilityKind, Convention,
};
use serde_json::{json, Map, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ramify",
    version,
    about = "Ramification-type counting, stratification-poset checks, and exhaustive point counts over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Eq12,
    Multiset,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HistogramFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Number of integer partitions of n
    Pcount {
        #[arg(long)]
        n: u64,
    },
    /// The counting function c(m), under one or both conventions
    Cofm {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "both")]
        convention: ConventionArg,
    },
    /// All ramification types of length m, as nested index lists
    Types {
        #[arg(long)]
        m: u32,
    },
    /// Admissibility of every length-m type, plus the enumerated minimal n
    Admissible {
        #[arg(long)]
        m: u32,
        /// Evaluate the predicates at this n (the minima are always included)
        #[arg(long)]
        n: Option<u32>,
    },
    /// Build the stratification-poset model and run structural checks
    Poset {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Comma-separated subset of:
        /// graded,semimodular,vanishing,euler-mobius,orbits,invariants
        #[arg(long)]
        checks: Option<String>,
        /// Truncate the breadth-first construction at this length
        #[arg(long)]
        max_length: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive ramification-length census over F_q
    Census {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        d: Option<u32>,
        /// Prime power shorthand for --p/--d
        #[arg(long)]
        q: Option<u64>,
        /// Include the per-length histogram (json) or emit it as CSV
        #[arg(long, value_enum, num_args = 0..=1, default_missing_value = "json")]
        histogram: Option<HistogramFormat>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Census plus comparison against qⁿ − c(m)·q^{n−m}
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, value_enum, num_args = 0..=1, default_missing_value = "json")]
        histogram: Option<HistogramFormat>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the census over several primes and solve for the constant c(m)
    Adjudicate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        /// Comma-separated primes, e.g. --p 11,13
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<u64>,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Resolves --p/--d/--q into a field; --q excludes the other two.
fn resolve_field(p: Option<u64>, d: Option<u32>, q: Option<u64>) -> Result<Field, String> {
    let (p, d) = match (p, d, q) {
        (None, None, Some(q)) => {
            prime_power(q).ok_or_else(|| format!("{q} is not a prime power"))?
        }
        (Some(p), d, None) => (p, d.unwrap_or(1)),
        (None, None, None) => return Err("one of --p or --q is required".into()),
        _ => return Err("--q cannot be combined with --p/--d".into()),
    };
    Field::new(p, d).map_err(|e| e.to_string())
}

fn emit(value: &Value, out: Option<&PathBuf>) -> Result<(), String> {
    let text = serde_json::to_string(value).map_err(|e| e.to_string())?;
    println!("{text}");
    if let Some(path) = out {
        std::fs::write(path, format!("{text}\n")).map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn emit_raw(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    print!("{text}");
    if let Some(path) = out {
        std::fs::write(path, text).map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Pcount { n } => {
            let count = partition_count(usize::try_from(n).map_err(|_| "n too large")?);
            emit(&report::pcount_value(n, &count), None)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cofm { m, convention } => {
            let eq12 = matches!(convention, ConventionArg::Eq12 | ConventionArg::Both)
                .then(|| c_of_m(m, Convention::Eq12))
                .transpose()
                .map_err(|e| e.to_string())?;
            let multiset = matches!(convention, ConventionArg::Multiset | ConventionArg::Both)
                .then(|| c_of_m(m, Convention::Multiset))
                .transpose()
                .map_err(|e| e.to_string())?;
            emit(
                &report::cofm_value(m, eq12.as_ref(), multiset.as_ref()),
                None,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Types { m } => {
            let types = enumerate_types(m);
            let value = json!({
                "m": m,
                "count": types.len(),
                "types": types.iter().map(report::type_value).collect::<Vec<_>>(),
            });
            emit(&value, None)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Admissible { m, n } => {
            if m == 0 {
                return Err("--m must be at least 1".into());
            }
            let types = enumerate_types(m);
            let mut value = Map::new();
            value.insert("m".into(), json!(m));
            if let Some(n) = n {
                value.insert("n".into(), json!(n));
                let rows: Vec<Value> = types
                    .iter()
                    .map(|t| {
                        let r = admissibility(t, n);
                        json!({
                            "type": report::type_value(t),
                            "combinatorial": r.combinatorial,
                            "affine": r.affine,
                            "reasons": r.reasons,
                        })
                    })
                    .collect();
                value.insert("types".into(), json!(rows));
            }
            value.insert(
                "minimal".into(),
                json!({
                    "combinatorial": minimal_admissible_n(m, AdmissibilityKind::Combinatorial),
                    "affine": minimal_admissible_n(m, AdmissibilityKind::Affine),
                }),
            );
            emit(&Value::Object(value), None)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Poset {
            n,
            m,
            checks,
            max_length,
            out,
        } => run_poset(n, m, checks, max_length, out),
        Command::Census {
            n,
            m,
            p,
            d,
            q,
            histogram,
            jobs,
            budget,
            out,
        } => {
            let field = resolve_field(p, d, q)?;
            let opts = CensusOptions {
                budget,
                jobs,
                shards: None,
            };
            let record = census(&field, n, m, &opts).map_err(|e| e.to_string())?;
            eprintln!(
                "census: q^n = {}^{} in {:.3}s over {} shard(s)",
                record.q,
                record.n,
                record.wall_time.as_secs_f64(),
                record.shard_count
            );
            match histogram {
                Some(HistogramFormat::Csv) => {
                    emit_raw(&report::histogram_csv(&record), out.as_ref())?
                }
                other => emit(
                    &report::census_value(&record, other.is_some()),
                    out.as_ref(),
                )?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            n,
            m,
            p,
            d,
            q,
            histogram,
            jobs,
            budget,
            out,
        } => {
            let field = resolve_field(p, d, q)?;
            let opts = CensusOptions {
                budget,
                jobs,
                shards: None,
            };
            let record = verify_count(&field, n, m, &opts).map_err(|e| e.to_string())?;
            eprintln!(
                "verify: census took {:.3}s over {} shard(s)",
                record.census.wall_time.as_secs_f64(),
                record.census.shard_count
            );
            let include_histogram = matches!(histogram, Some(HistogramFormat::Json));
            if histogram == Some(HistogramFormat::Csv) {
                emit_raw(&report::histogram_csv(&record.census), out.as_ref())?;
            } else {
                emit(&report::verify_value(&record, include_histogram), out.as_ref())?;
            }
            Ok(if record.verdict.is_match() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Adjudicate {
            n,
            m,
            p,
            d,
            jobs,
            budget,
            out,
        } => {
            if n < 3 * m {
                return Err(format!("adjudication needs n >= 3m (got n = {n}, m = {m})"));
            }
            let mut fields = Vec::new();
            for &prime in &p {
                if prime <= n as u64 + 1 {
                    return Err(format!(
                        "prime {prime} must exceed n + 1 = {}",
                        n + 1
                    ));
                }
                fields.push(Field::new(prime, d).map_err(|e| e.to_string())?);
            }
            let opts = CensusOptions {
                budget,
                jobs,
                shards: None,
            };
            let inference = infer_c(&fields, n, m, &opts).map_err(|e| e.to_string())?;
            for (record, _) in &inference.per_field {
                eprintln!(
                    "adjudicate: q = {} census took {:.3}s",
                    record.q,
                    record.wall_time.as_secs_f64()
                );
            }
            let c_eq12 = c_of_m(m, Convention::Eq12).map_err(|e| e.to_string())?;
            let c_multiset = c_of_m(m, Convention::Multiset).map_err(|e| e.to_string())?;
            let value = report::adjudicate_value(&inference, &c_eq12, &c_multiset);
            emit(&value, out.as_ref())?;
            let matched = value["verdict"] != json!("matches-neither");
            Ok(if matched {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

const ALL_CHECKS: &[&str] = &[
    "graded",
    "semimodular",
    "vanishing",
    "euler-mobius",
    "orbits",
    "invariants",
];

fn run_poset(
    n: u32,
    m: u32,
    checks: Option<String>,
    max_length: Option<u32>,
    out: Option<PathBuf>,
) -> Result<ExitCode, String> {
    if n == 0 || n > 6 {
        return Err("the poset model is built for 1 <= n <= 6".into());
    }
    if m == 0 {
        return Err("--m must be at least 1".into());
    }
    let selected: Vec<String> = match &checks {
        None => ALL_CHECKS.iter().map(|s| s.to_string()).collect(),
        Some(list) => {
            let names: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
            for name in &names {
                if !ALL_CHECKS.contains(&name.as_str()) {
                    return Err(format!(
                        "unknown check '{name}' (valid: {})",
                        ALL_CHECKS.join(",")
                    ));
                }
            }
            names
        }
    };

    let started = std::time::Instant::now();
    let build = build_poset(n as usize, max_length);
    let poset = &build.poset;
    let action = GroupAction::symmetric(n as usize);
    let mut check_values = Map::new();
    let mut all_pass = true;
    let mut notes: Vec<String> = Vec::new();

    for name in &selected {
        let (pass, value) = match name.as_str() {
            "graded" => report::graded_check_value(poset),
            "semimodular" => report::semimodular_check_value(&poset.is_locally_semimodular()),
            "vanishing" => {
                let vanishing = check_vanishing(poset, m);
                report::vanishing_check_value(&vanishing)
            }
            "euler-mobius" => report::euler_mobius_check_value(&euler_mobius_check(poset)),
            "orbits" => {
                let decomposition = orbit_decomposition(poset, &action);
                let max_len = max_length.unwrap_or_else(|| poset.max_rank());
                report::orbits_check_value(&decomposition, n, max_len)
            }
            "invariants" => {
                let quotient = quotient_poset(poset, m);
                notes.extend(quotient.notes.iter().cloned());
                let value = report::invariants_check_value(&quotient.poset, &action);
                (true, value)
            }
            _ => unreachable!("validated above"),
        };
        all_pass &= pass;
        check_values.insert(name.clone(), value);
    }

    if selected.iter().any(|c| c == "vanishing") {
        let quotient = quotient_poset(poset, m);
        notes.extend(quotient.notes);
    }
    notes.sort();
    notes.dedup();

    eprintln!(
        "poset: n = {n}, {} elements, checks ran in {:.3}s",
        poset.len(),
        started.elapsed().as_secs_f64()
    );
    let value = report::poset_value(n, m, &build, check_values, &notes);
    emit(&value, out.as_ref())?;
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
