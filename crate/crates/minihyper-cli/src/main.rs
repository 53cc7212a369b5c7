//! Batch front end: construct named families, analyze multiset files, run
//! theorem checkers, run classifications, and execute the verification
//! suite.
//!
//! Exit codes: 0 success, 1 a checked claim failed, 2 usage error,
//! 3 budget exhausted / incomplete result.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use minihyper::classify::{classify, ClassifyOptions, ClassifyParams, Frontier};
use minihyper::error::Error;
use minihyper::families::{self, Family309};
use minihyper::format;
use minihyper::multiset::{Mode, Multiset};
use minihyper::structure::structural_match;
use minihyper::theorems::{self, TheoremReport};
use minihyper::verify::{self, Status, VerifyOptions};

#[derive(Parser)]
#[command(name = "minihyper", version, about = "Arcs, minihypers and blocking sets in PG(r,q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Arc,
    Minihyper,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Arc => Mode::Arc,
            ModeArg::Minihyper => Mode::Minihyper,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// (5,1) in PG(2,3): line plus off-line point
    LinePlusPoint,
    /// (9,2) in PG(2,3): complement of a conic
    OvalComplement,
    /// (17,5) in PG(3,3): plane plus a line through one of its points
    PlanePlusLine,
    /// (22,6) in PG(3,3): plane plus a planar oval complement
    PlanePlusOvalComplement,
    /// (30,9) in PG(3,3): sum of two planes and a line
    TwoPlanesPlusLine,
    /// (30,9) in PG(3,3): union of two planes plus two skew lines
    TwoPlanesPlusSkewLines,
    /// (30,9) in PG(3,3): complement of a 10-cap
    CapComplement,
    /// (66,21) in PG(4,3): solid plus two planes
    #[value(name = "minihyper-66-21")]
    Minihyper6621,
    /// (70,22) in PG(4,3): solid plus family (a)
    #[value(name = "witness-70-22-a")]
    Witness7022A,
    /// (70,22) in PG(4,3): solid plus family (b)
    #[value(name = "witness-70-22-b")]
    Witness7022B,
    /// (70,22) in PG(4,3): solid plus family (c)
    #[value(name = "witness-70-22-c")]
    Witness7022C,
    /// (70,22) in PG(4,3): (66,21)-minihyper plus a line
    #[value(name = "witness-70-22-line")]
    Witness7022Line,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Ward,
    HillLizak,
    Kanda,
    MainReduction,
    StandardEquations,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum, parameters, flat bounds and theorem reports for one multiset file
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Write a named family to a multiset file
    Construct {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one named theorem checker on a multiset file
    Check {
        #[arg(value_enum)]
        theorem: TheoremArg,
        file: PathBuf,
        #[arg(long, value_enum, default_value = "minihyper")]
        mode: ModeArg,
        /// divisibility exponent e (p^e)
        #[arg(long, default_value_t = 1)]
        exponent: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Isomorph-free exhaustive classification of (n,w)-objects
    Classify {
        r: usize,
        q: u32,
        n: u64,
        w: u64,
        #[arg(long, value_enum, default_value = "minihyper")]
        mode: ModeArg,
        #[arg(long, default_value_t = 1)]
        cap: u32,
        /// worker threads (default: MINIHYPER_THREADS or 1)
        #[arg(long)]
        threads: Option<usize>,
        /// node budget; exhausted searches exit 3 and write a frontier
        #[arg(long)]
        budget: Option<u64>,
        /// resume from a frontier file written by an interrupted run
        #[arg(long)]
        resume: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the full verification suite and print a pass/fail table
    VerifyPaper {
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        #[arg(long)]
        threads: Option<usize>,
        /// node budget for the long classification criterion
        #[arg(long)]
        budget: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvariantViolation(_) => ExitCode::from(1),
                Error::SizeBudget { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn thread_count(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("MINIHYPER_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(1)
    .max(1)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Analyze { file, format } => analyze(&file, format),
        Command::Construct { family, out } => construct(family, out.as_deref()),
        Command::Check {
            theorem,
            file,
            mode,
            exponent,
            format,
        } => check(theorem, &file, mode.into(), exponent, format),
        Command::Classify {
            r,
            q,
            n,
            w,
            mode,
            cap,
            threads,
            budget,
            resume,
            out,
        } => run_classify(
            ClassifyParams {
                r,
                q,
                n,
                w,
                mode: mode.into(),
                cap,
            },
            thread_count(threads),
            budget,
            resume.as_deref(),
            &out,
        ),
        Command::VerifyPaper {
            format,
            threads,
            budget,
        } => verify_paper(format, thread_count(threads), budget),
    }
}

fn construct(family: FamilyArg, out: Option<&Path>) -> Result<u8, Error> {
    let multiset = match family {
        FamilyArg::LinePlusPoint => families::line_plus_point()?.0,
        FamilyArg::OvalComplement => {
            let g = minihyper::Geometry::shared(2, 3)?;
            let oval = families::conic(&g)?;
            Multiset::indicator(g, &oval).complement(1)?
        }
        FamilyArg::PlanePlusLine => families::plane_plus_line()?.0,
        FamilyArg::PlanePlusOvalComplement => families::plane_plus_oval_complement()?,
        FamilyArg::TwoPlanesPlusLine => families::minihyper_30_9(Family309::TwoPlanesPlusLine)?,
        FamilyArg::TwoPlanesPlusSkewLines => families::minihyper_30_9(Family309::TwoPlanesPlusSkewLines)?,
        FamilyArg::CapComplement => families::minihyper_30_9(Family309::CapComplement)?,
        FamilyArg::Minihyper6621 => families::minihyper_66_21()?,
        FamilyArg::Witness7022A => families::witness_70_22(Family309::TwoPlanesPlusLine)?,
        FamilyArg::Witness7022B => families::witness_70_22(Family309::TwoPlanesPlusSkewLines)?,
        FamilyArg::Witness7022C => families::witness_70_22(Family309::CapComplement)?,
        FamilyArg::Witness7022Line => families::witness_70_22_line_type()?.0,
    };
    let text = format::write_multiset(&multiset);
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn analyze(file: &Path, output: OutputFormat) -> Result<u8, Error> {
    let multiset = format::read_multiset(&std::fs::read_to_string(file)?)?;
    let geometry = multiset.geometry().clone();
    let spectrum = multiset.spectrum();
    let labels = structural_match(&multiset)?;
    let gammas: Vec<u64> = (0..=geometry.r())
        .map(|j| multiset.gamma(j))
        .collect::<Result<_, _>>()?;

    let mut reports: Vec<TheoremReport> = Vec::new();
    if spectrum.n > 0 {
        reports.push(theorems::ward_check(&multiset, Mode::Minihyper, 1)?);
        reports.push(theorems::hill_lizak(&multiset, Mode::Minihyper)?);
        reports.push(theorems::hill_lizak(&multiset, Mode::Arc)?);
        if geometry.q() == 3 {
            reports.push(theorems::kanda(&multiset, Mode::Minihyper)?);
            reports.push(theorems::kanda(&multiset, Mode::Arc)?);
        }
        if geometry.r() >= 2 {
            reports.push(theorems::main_reduction(&multiset)?);
        }
    }
    let standard = (geometry.r() == 4 && geometry.q() == 3 && spectrum.n == 70)
        .then(|| theorems::standard_equations(&multiset))
        .transpose()?;

    match output {
        OutputFormat::Json => {
            let value = serde_json::json!({
                "schema": 1,
                "space": { "r": geometry.r(), "q": geometry.q() },
                "spectrum": spectrum,
                "gamma": gammas,
                "labels": labels,
                "theorems": reports,
                "standard_equations": standard,
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable report"));
        }
        OutputFormat::Text => {
            println!("space: PG({},{})", geometry.r(), geometry.q());
            println!("cardinality: {}", spectrum.n);
            println!(
                "parameters: arc ({}, {}), minihyper ({}, {})",
                spectrum.n, spectrum.w_max, spectrum.n, spectrum.w_min
            );
            println!("hyperplane spectrum: {:?}", spectrum.a);
            println!("point spectrum: {:?}", spectrum.lambda);
            println!("gamma by dimension: {gammas:?}");
            if labels.is_empty() {
                println!("families: none recognized");
            } else {
                let tags: Vec<&str> = labels.iter().map(|l| l.tag()).collect();
                println!("families: {}", tags.join(", "));
            }
            for report in &reports {
                println!("---\n{report}");
            }
            if let Some(se) = &standard {
                println!("---\nstandard equations\n{se}");
            }
        }
    }
    Ok(0)
}

fn check(
    theorem: TheoremArg,
    file: &Path,
    mode: Mode,
    exponent: u32,
    output: OutputFormat,
) -> Result<u8, Error> {
    let multiset = format::read_multiset(&std::fs::read_to_string(file)?)?;
    if let TheoremArg::StandardEquations = theorem {
        let r = theorems::standard_equations(&multiset)?;
        match output {
            OutputFormat::Json => {
                let value = serde_json::json!({ "schema": 1, "standard_equations": r });
                println!("{}", serde_json::to_string_pretty(&value).expect("serializable report"));
            }
            OutputFormat::Text => println!("{r}"),
        }
        return Ok(if r.residuals.iter().all(|&x| x == 0) { 0 } else { 1 });
    }
    let report = match theorem {
        TheoremArg::Ward => theorems::ward_check(&multiset, mode, exponent)?,
        TheoremArg::HillLizak => theorems::hill_lizak(&multiset, mode)?,
        TheoremArg::Kanda => theorems::kanda(&multiset, mode)?,
        TheoremArg::MainReduction => theorems::main_reduction(&multiset)?,
        TheoremArg::StandardEquations => unreachable!(),
    };
    print_report(output, &report);
    Ok(if report.violations.is_empty() { 0 } else { 1 })
}

fn print_report(output: OutputFormat, report: &TheoremReport) {
    match output {
        OutputFormat::Json => {
            let value = serde_json::json!({ "schema": 1, "report": report });
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable report"));
        }
        OutputFormat::Text => println!("{report}"),
    }
}

fn run_classify(
    params: ClassifyParams,
    threads: usize,
    budget: Option<u64>,
    resume: Option<&Path>,
    out: &Path,
) -> Result<u8, Error> {
    if budget == Some(0) {
        return Err(Error::InvalidArgument("budget must be positive".into()));
    }
    // fail early if the output location is not writable
    let probe = std::fs::OpenOptions::new().create(true).append(true).open(out)?;
    drop(probe);

    let resume_frontier: Option<Frontier> = match resume {
        Some(path) => Some(format::read_frontier(&std::fs::read_to_string(path)?)?),
        None => None,
    };
    let options = ClassifyOptions {
        node_budget: budget.unwrap_or(u64::MAX),
        threads,
        resume: resume_frontier,
    };
    let outcome = classify(&params, &options)?;
    std::fs::write(out, format::write_catalog(&outcome.catalog))?;
    eprintln!(
        "{} representatives, {} nodes, {}",
        outcome.catalog.representatives.len(),
        outcome.catalog.stats.nodes,
        if outcome.catalog.complete { "complete" } else { "incomplete" }
    );
    if let Some(frontier) = outcome.frontier {
        let frontier_path = out.with_extension("frontier.json");
        let mut f = std::fs::File::create(&frontier_path)?;
        f.write_all(format::write_frontier(&frontier)?.as_bytes())?;
        eprintln!("frontier written to {}", frontier_path.display());
        return Ok(3);
    }
    Ok(0)
}

fn verify_paper(output: OutputFormat, threads: usize, budget: Option<u64>) -> Result<u8, Error> {
    let started = std::time::Instant::now();
    let options = VerifyOptions {
        threads,
        classification_budget: budget.unwrap_or(u64::MAX),
    };
    let results = verify::run_all(&options)?;
    match output {
        OutputFormat::Json => {
            let value = serde_json::json!({ "schema": 1, "criteria": results });
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable report"));
        }
        OutputFormat::Text => {
            // run time is quarantined to this header line
            println!("# verification suite, wall time {} ms", started.elapsed().as_millis());
            for r in &results {
                let mark = match &r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped(_) => "SKIP",
                };
                println!("{mark} {:<28} {}", r.id, r.description);
                if let Status::Skipped(reason) = &r.status {
                    println!("     reason: {reason}");
                }
                for d in &r.details {
                    println!("     {d}");
                }
            }
        }
    }
    let any_fail = results.iter().any(|r| r.status == Status::Fail);
    let any_skip = results.iter().any(|r| matches!(r.status, Status::Skipped(_)));
    Ok(if any_fail {
        1
    } else if any_skip {
        3
    } else {
        0
    })
}
