use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cinv::bijection::{self, Bijection};
use cinv::enumerate::{generate_class, ClassLabel, ClassSize};
use cinv::stats::{distribution, size_json, Stat};
use cinv::verify::{verify, TheoremId, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "cinv",
    version,
    about = "Descent statistics on 321-avoiding centrosymmetric involutions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List every object of a class.
    Enumerate {
        #[arg(long)]
        class: ClassLabel,
        /// `m`, `n`, or `a,b` depending on the class.
        #[arg(long)]
        size: ClassSize,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Brute-force distribution of a statistic over a class.
    Stats {
        #[arg(long)]
        class: ClassLabel,
        #[arg(long)]
        size: ClassSize,
        #[arg(long)]
        stat: Stat,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Apply a named map to one object.
    Bijection {
        #[arg(long)]
        name: Bijection,
        #[arg(long)]
        apply: String,
        #[arg(long)]
        size: Option<ClassSize>,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Check a theorem at every size up to `--max-n`.
    Verify {
        #[arg(long)]
        name: TheoremId,
        #[arg(long)]
        max_n: usize,
        /// Largest size also checked by filtering raw involutions.
        #[arg(long, default_value_t = VerifyOptions::DEFAULT_RAW_MAX_N)]
        raw_max_n: usize,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// List the names accepted by --class, --stat and --name.
    Names,
}

fn usage_error(err: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Enumerate {
            class,
            size,
            format,
        } => {
            let objects = match generate_class(class, size) {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            match format {
                Format::Tsv => {
                    println!("object");
                    for obj in objects {
                        println!("{obj}");
                    }
                }
                Format::Json => {
                    let list: Vec<String> = objects.map(|o| o.to_string()).collect();
                    let out = json!({
                        "class": class.name(),
                        "size": size_json(size),
                        "count": list.len(),
                        "objects": list,
                    });
                    println!("{out}");
                }
            }
        }
        Command::Stats {
            class,
            size,
            stat,
            format,
            jobs,
        } => {
            let table = match distribution(class, size, stat, jobs) {
                Ok(t) => t,
                Err(e) => return usage_error(e),
            };
            match format {
                Format::Tsv => print!("{}", table.to_tsv()),
                Format::Json => println!("{}", table.to_json()),
            }
        }
        Command::Bijection {
            name,
            apply,
            size,
            format,
        } => {
            let output = match bijection::apply(name, &apply, size) {
                Ok(o) => o,
                Err(e) => return usage_error(e),
            };
            match format {
                Format::Tsv => println!("{output}"),
                Format::Json => {
                    println!(
                        "{}",
                        json!({ "name": name.name(), "input": apply, "output": output })
                    )
                }
            }
        }
        Command::Verify {
            name,
            max_n,
            raw_max_n,
            format,
            jobs,
        } => {
            let opts = VerifyOptions::new(max_n).raw_max_n(raw_max_n).jobs(jobs);
            let report = verify(name, &opts);
            match format {
                Format::Tsv => print!("{}", report.to_tsv()),
                Format::Json => println!("{}", report.to_json()),
            }
            eprintln!(
                "{name}: {} for n <= {max_n}, {} objects, {:.3}s",
                if report.passed() { "pass" } else { "FAIL" },
                report.checked(),
                report.duration.as_secs_f64()
            );
            if !report.passed() {
                return ExitCode::from(1);
            }
        }
        Command::Names => {
            let classes: Vec<&str> = ClassLabel::ALL.iter().map(|c| c.name()).collect();
            let stats: Vec<&str> = Stat::ALL.iter().map(|s| s.name()).collect();
            let theorems: Vec<&str> = TheoremId::ALL.iter().map(|t| t.name()).collect();
            println!("classes\t{}", classes.join(" "));
            println!("stats\t{}", stats.join(" "));
            println!("theorems\t{}", theorems.join(" "));
            for b in Bijection::ALL {
                println!("bijection\t{}\t{}", b.name(), b.help());
            }
        }
    }
    ExitCode::SUCCESS
}
