//! Command-line front end. All logic lives in the library; the binary only
//! parses arguments and forwards here.
//!
//! Exit codes form a small contract for CI consumption:
//! 0 success / all assertions passed, 1 an assertion failed,
//! 2 parse or I/O problem, 3 domain error (zero quaternion, guard exceeded,
//! bad tag), 4 closure cap exceeded.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::genfile::{FileError, GeneratorFile, LoadedGenerators};
use crate::group::{FiniteRotGroup, GroupError};
use crate::properties::{check_property, PropertyTag};
use crate::quaternion::Quaternion;
use crate::rotation::theta;
use crate::scalar::QuadScalar;
use crate::suite::{run_suite, SuiteConfig};
use crate::words::word_no_relation_search;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "so3kit",
    version,
    about = "Exact computational group theory for rotation groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the exact rotation image of a quaternion given as four
    /// comma-separated scalars, e.g. "1,2,0,0".
    Theta {
        components: String,
        /// Radicand of the ambient field (0 = plain rationals).
        #[arg(long, default_value_t = 0)]
        ambient_d: u64,
    },
    /// Generate the closure of the generators in FILE and summarize it.
    Closure {
        file: PathBuf,
        /// Element budget; exceeding it signals a (likely) infinite group.
        #[arg(long, default_value_t = 10_000)]
        cap: usize,
    },
    /// Decide the order of each generator in FILE (finite, certified
    /// infinite, or unknown within the cap).
    Order {
        file: PathBuf,
        #[arg(long, default_value_t = 1_000)]
        cap: u64,
    },
    /// Check property tags on the closure of the generators in FILE.
    Props {
        file: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        cap: usize,
        /// Comma-separated tags (default: all), e.g. "P3,R3,P4".
        #[arg(long)]
        tags: Option<String>,
    },
    /// List the internal direct-product decompositions of the closure.
    Decompose {
        file: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        cap: usize,
    },
    /// Search for word relations among the generators in FILE.
    Words {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_len: u32,
    },
    /// Run the complete verification suite.
    VerifyPaper {
        /// Write the structured report to this path as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Restrict every check to ambient d = 0 (plain rationals); the √3
        /// and √5 material is reported as skipped.
        #[arg(long)]
        rational_only: bool,
    },
}

pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Theta {
            components,
            ambient_d,
        } => cmd_theta(&components, ambient_d),
        Command::Closure { file, cap } => with_closure(&file, cap, cmd_closure_summary),
        Command::Order { file, cap } => cmd_order(&file, cap),
        Command::Props { file, cap, tags } => {
            let tags = match parse_tags(tags.as_deref()) {
                Ok(t) => t,
                Err(bad) => {
                    eprintln!("error: unknown property tag {bad:?}");
                    return EXIT_PARSE;
                }
            };
            with_closure(&file, cap, move |g| cmd_props(g, &tags))
        }
        Command::Decompose { file, cap } => with_closure(&file, cap, cmd_decompose),
        Command::Words { file, max_len } => cmd_words(&file, max_len),
        Command::VerifyPaper {
            json,
            seed,
            rational_only,
        } => cmd_verify(json.as_deref(), seed, rational_only),
    }
}

fn report_file_error(e: &FileError) -> i32 {
    eprintln!("error: {e}");
    EXIT_PARSE
}

fn load_generators(path: &std::path::Path) -> Result<LoadedGenerators, i32> {
    let file = GeneratorFile::from_path(path).map_err(|e| report_file_error(&e))?;
    file.load().map_err(|e| report_file_error(&e))
}

fn cmd_theta(components: &str, ambient_d: u64) -> i32 {
    let parts: Vec<&str> = components.split(',').collect();
    if parts.len() != 4 {
        eprintln!(
            "error: expected four comma-separated scalars, got {}",
            parts.len()
        );
        return EXIT_PARSE;
    }
    let mut scalars = Vec::with_capacity(4);
    for p in &parts {
        match QuadScalar::parse(p, ambient_d) {
            Ok(s) => scalars.push(s),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_PARSE;
            }
        }
    }
    let q = Quaternion::new(
        scalars[0].clone(),
        scalars[1].clone(),
        scalars[2].clone(),
        scalars[3].clone(),
    );
    match theta(&q) {
        Ok(m) => {
            println!("{m}");
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn with_closure(
    path: &std::path::Path,
    cap: usize,
    body: impl FnOnce(&FiniteRotGroup) -> i32,
) -> i32 {
    let loaded = match load_generators(path) {
        Ok(l) => l,
        Err(code) => return code,
    };
    match FiniteRotGroup::generate_closure(&loaded.rotations, cap) {
        Ok(group) => body(&group),
        Err(GroupError::ClosureExceedsCap { reached }) => {
            println!("closure exceeds cap: {reached} elements generated without closing");
            EXIT_CAP
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn cmd_closure_summary(group: &FiniteRotGroup) -> i32 {
    println!("order: {}", group.order());
    match group.classify_iso_type() {
        Ok(class) => println!("classification: {class}"),
        Err(e) => println!("classification: unavailable ({e})"),
    }
    println!("center order: {}", group.center().order());
    match group.subgroups() {
        Ok(subs) => println!("subgroups: {}", subs.len()),
        Err(e) => println!("subgroups: skipped ({e})"),
    }
    match group.decompositions() {
        Ok(decs) if decs.is_empty() => println!("decompositions: none"),
        Ok(decs) => {
            println!("decompositions ({}):", decs.len());
            for dec in decs {
                println!("  {}", describe_decomposition(group, &dec));
            }
        }
        Err(e) => println!("decompositions: skipped ({e})"),
    }
    EXIT_OK
}

fn describe_decomposition(group: &FiniteRotGroup, dec: &crate::group::Decomposition) -> String {
    let name = |s: &crate::group::Subgroup| match group.subgroup_as_group(s).classify_iso_type() {
        Ok(class) => class.to_string(),
        Err(_) => format!("order-{} subgroup", s.order()),
    };
    format!(
        "{} x {}  (elements {} x {})",
        name(&dec.factor_h),
        name(&dec.factor_k),
        dec.factor_h,
        dec.factor_k
    )
}

fn cmd_order(path: &std::path::Path, cap: u64) -> i32 {
    let loaded = match load_generators(path) {
        Ok(l) => l,
        Err(code) => return code,
    };
    for (i, rotation) in loaded.rotations.iter().enumerate() {
        println!("generator {}: {}", i + 1, rotation.element_order(cap));
    }
    EXIT_OK
}

fn parse_tags(spec: Option<&str>) -> Result<Vec<PropertyTag>, String> {
    match spec {
        None => Ok(PropertyTag::ALL.to_vec()),
        Some(list) => list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| PropertyTag::from_label(s).ok_or_else(|| s.to_string()))
            .collect(),
    }
}

fn cmd_props(group: &FiniteRotGroup, tags: &[PropertyTag]) -> i32 {
    for &tag in tags {
        match check_property(group, tag) {
            Ok(report) => println!("{report}"),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_DOMAIN;
            }
        }
    }
    EXIT_OK
}

fn cmd_decompose(group: &FiniteRotGroup) -> i32 {
    match group.decompositions() {
        Ok(decs) if decs.is_empty() => {
            println!("no non-trivial direct-product decompositions");
            EXIT_OK
        }
        Ok(decs) => {
            for dec in decs {
                println!("{}", describe_decomposition(group, &dec));
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn cmd_words(path: &std::path::Path, max_len: u32) -> i32 {
    let loaded = match load_generators(path) {
        Ok(l) => l,
        Err(code) => return code,
    };
    match word_no_relation_search(&loaded.rotations, max_len) {
        Ok(result) => {
            println!("{result}");
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn cmd_verify(json: Option<&std::path::Path>, seed: u64, rational_only: bool) -> i32 {
    let report = run_suite(&SuiteConfig {
        seed,
        rational_only,
    });
    print!("{}", report.human_summary());
    if let Some(path) = json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: cannot write report to {}: {e}", path.display());
            return EXIT_PARSE;
        }
        println!("report written to {}", path.display());
    }
    if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_ASSERTION_FAILED
    }
}
