//! `bv`: normal forms, products, equality, relation checks, key-exchange
//! sessions and timing for the braided Thompson group.
//!
//! Element arguments are either inline generator words (`"f0 b1 A2"`, the
//! empty string for the identity) or `@path` to a file in the three-line
//! element format.
//!
//! Exit codes: 0 success or equal, 1 different or mismatched secrets,
//! 2 usage or parse error.

use std::process::ExitCode;

use bv_core::aag::{run_session, KexParams};
use bv_core::bench::{run_bench, BenchMode};
use bv_core::bv::{check_relations, evaluate_word, parse_word, BVElement, FAMILY_NAMES};
use bv_core::text::parse_element;
use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "bv",
    version,
    about = "Exact arithmetic in the braided Thompson group BV"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form of an element
    Nf { input: String },
    /// Multiply elements left to right
    Mul {
        #[arg(required = true, num_args = 2..)]
        inputs: Vec<String>,
    },
    /// Print the inverse of an element
    Inv { input: String },
    /// Decide whether two inputs are the same element
    Eq { a: String, b: String },
    /// Check every relation of the presentation up to an index bound
    Relcheck {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        max_index: u64,
    },
    /// Run one simulated key exchange and print its transcript
    Aag {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        alice_set: usize,
        #[arg(long, default_value_t = 6)]
        alice_len: usize,
        #[arg(long, default_value_t = 4)]
        bob_set: usize,
        #[arg(long, default_value_t = 6)]
        bob_len: usize,
        #[arg(long, default_value_t = 8)]
        gen_len: usize,
    },
    /// Time multiplication on random elements
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [16usize, 32, 64, 128])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value = "nf")]
        mode: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Emit CSV (size,mode,trials,median_micros)
        #[arg(long)]
        csv: bool,
    },
}

fn load(input: &str) -> Result<BVElement, String> {
    if let Some(path) = input.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        parse_element(&text).map_err(|e| format!("{path}: {e}"))
    } else {
        let word = parse_word(input).map_err(|e| e.to_string())?;
        Ok(evaluate_word(&word))
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Nf { input } => match load(&input) {
            Ok(e) => {
                println!("{e}");
                ExitCode::SUCCESS
            }
            Err(msg) => usage_error(msg),
        },
        Command::Inv { input } => match load(&input) {
            Ok(e) => {
                println!("{}", e.invert());
                ExitCode::SUCCESS
            }
            Err(msg) => usage_error(msg),
        },
        Command::Mul { inputs } => {
            let mut acc = BVElement::identity();
            for input in &inputs {
                match load(input) {
                    Ok(e) => acc = acc.multiply(&e),
                    Err(msg) => return usage_error(msg),
                }
            }
            println!("{acc}");
            ExitCode::SUCCESS
        }
        Command::Eq { a, b } => {
            let (a, b) = match (load(&a), load(&b)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(msg), _) | (_, Err(msg)) => return usage_error(msg),
            };
            if a.equals(&b) {
                println!("equal");
                ExitCode::SUCCESS
            } else {
                println!("different");
                ExitCode::from(1)
            }
        }
        Command::Relcheck { max_index } => {
            let report = check_relations(max_index as usize);
            for (family, passed, total) in report.family_counts() {
                println!(
                    "family {family:>2}: {passed}/{total} pass  ({})",
                    FAMILY_NAMES[family - 1]
                );
            }
            for failure in report.failures() {
                println!("FAILED {failure}");
            }
            let total = report.instances.len();
            let passed = report.instances.iter().filter(|r| r.passed).count();
            println!("{passed}/{total} relation instances hold for indices <= {max_index}");
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Aag {
            seed,
            alice_set,
            alice_len,
            bob_set,
            bob_len,
            gen_len,
        } => {
            let params = KexParams {
                alice_set_size: alice_set,
                alice_key_length: alice_len,
                bob_set_size: bob_set,
                bob_key_length: bob_len,
                public_gen_word_length: gen_len,
                seed,
            };
            match run_session(&params) {
                Ok(session) => {
                    print!("{}", session.transcript());
                    if session.secrets_match() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Bench {
            sizes,
            trials,
            mode,
            seed,
            csv,
        } => {
            let mode: BenchMode = match mode.parse() {
                Ok(m) => m,
                Err(e) => return usage_error(e),
            };
            if sizes.contains(&0) || trials == 0 {
                return usage_error("sizes and trials must be positive");
            }
            let rows = run_bench(&sizes, trials, mode, seed);
            if csv {
                println!("{}", bv_core::bench::BenchRow::CSV_HEADER);
                for r in &rows {
                    println!("{}", r.csv());
                }
            } else {
                println!(
                    "{:>6} {:>5} {:>7} {:>16} {:>12}",
                    "size", "mode", "trials", "median_us", "input_bits"
                );
                for r in &rows {
                    println!(
                        "{:>6} {:>5} {:>7} {:>16.1} {:>12.0}",
                        r.size, r.mode, r.trials, r.median_micros, r.mean_input_bits
                    );
                }
            }
            ExitCode::SUCCESS
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse())
}
