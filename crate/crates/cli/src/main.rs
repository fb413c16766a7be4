//! `axial`: batch front end for fusion tables, algebra checks and the
//! Sakuma classification.
//!
//! Exit codes: 0 when every check passes, 1 on a verification failure and
//! 2 on a usage or input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use axial_core::algebra::{check_axis, verify_form};
use axial_core::exact::format_rational;
use axial_core::fusion::{find_z2_gradings, refined_virasoro, virasoro_rules, FusionRules};
use axial_core::sakuma::{self, UniversalAlgebra};
use axial_core::{MultiPoly, Rational, RationalAlgebra};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "axial", version, about = "Exact computations with axial algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fusion rules
    Fusion {
        #[command(subcommand)]
        command: FusionCommand,
    },
    /// Checks on algebras given as JSON
    Algebra {
        #[command(subcommand)]
        command: AlgebraCommand,
    },
    /// The universal 2-generated 𝔙(4,3)-axial algebra and its classification
    Sakuma {
        #[command(subcommand)]
        command: SakumaCommand,
    },
}

#[derive(Subcommand)]
enum FusionCommand {
    /// Print the Virasoro rules 𝔙(P,Q) and their ℤ/2-gradings
    Vir {
        p: u32,
        q: u32,
        /// Print the rules as JSON instead
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum AlgebraCommand {
    /// Check every marked vector as an axis and verify the form
    Check {
        file: PathBuf,
        /// `vir:P,Q` (Frobenius-refined) or a fusion rules JSON file
        #[arg(long, default_value = "vir:4,3")]
        fusion: String,
        /// Print the report as JSON
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum SakumaCommand {
    /// Print the symbolic multiplication table and Gram matrix
    Table {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the rational points of p1 = p2 = 0 as JSON
    Solve,
    /// Classify the nine specialisations
    Classify {
        /// Write the JSON report here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        /// Process the points concurrently (same output)
        #[arg(long)]
        parallel: bool,
    },
    /// Re-derive the long products and print any difference
    Rederive,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Ok(passed) or an input error.
fn run(command: Command) -> Result<bool> {
    match command {
        Command::Fusion { command: FusionCommand::Vir { p, q, json } } => fusion_vir(p, q, json),
        Command::Algebra { command: AlgebraCommand::Check { file, fusion, json } } => {
            algebra_check(&file, &fusion, json)
        }
        Command::Sakuma { command } => {
            let u = sakuma::build_universal().context("building the universal algebra")?;
            match command {
                SakumaCommand::Table { format } => sakuma_table(&u, format),
                SakumaCommand::Solve => sakuma_solve(&u),
                SakumaCommand::Classify { out, parallel } => sakuma_classify(&u, out.as_deref(), parallel),
                SakumaCommand::Rederive => sakuma_rederive(&u),
            }
        }
    }
}

fn fusion_vir(p: u32, q: u32, json: bool) -> Result<bool> {
    let rules = virasoro_rules(p, q)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&rules)?);
        return Ok(true);
    }
    println!("V({p},{q})  central charge {}", format_rational(rules.central_charge()));
    println!();
    print!("{rules}");
    println!();
    for line in rules.product_lines() {
        println!("{line}");
    }
    println!();
    for g in find_z2_gradings(&rules) {
        let list = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>().join(", ");
        println!("grading {}: even {{{}}} odd {{{}}}", g.group, list(&g.even), list(&g.odd));
    }
    Ok(true)
}

/// Parses `vir:P,Q` or reads a fusion rules JSON file.
fn load_fusion(spec: &str) -> Result<FusionRules> {
    if let Some(pq) = spec.strip_prefix("vir:") {
        let (p, q) = pq.split_once(',').with_context(|| format!("expected vir:P,Q, got {spec:?}"))?;
        let p: u32 = p.trim().parse().with_context(|| format!("bad P in {spec:?}"))?;
        let q: u32 = q.trim().parse().with_context(|| format!("bad Q in {spec:?}"))?;
        return Ok(refined_virasoro(p, q)?);
    }
    let text = fs::read_to_string(spec).with_context(|| format!("reading fusion rules {spec}"))?;
    serde_json::from_str(&text).with_context(|| format!("parsing fusion rules {spec}"))
}

fn algebra_check(file: &Path, fusion: &str, json: bool) -> Result<bool> {
    let rules = load_fusion(fusion)?;
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", file.display()))?;
    let alg = RationalAlgebra::from_json(&value)?;
    if alg.marked().is_empty() {
        bail!("the algebra marks no axes");
    }
    let axes = alg
        .marked_vectors()
        .iter()
        .map(|a| check_axis(&alg, a, &rules))
        .collect::<Result<Vec<_>, _>>()?;
    let form = verify_form(&alg, rules.fields())?;
    let passed = axes.iter().all(|r| r.passed()) && form.passed();
    if json {
        let report = json!({ "axes": axes, "form": form, "passed": passed });
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        for (&m, r) in alg.marked().iter().zip(&axes) {
            println!("axis {}: {}", alg.labels()[m], if r.passed() { "pass" } else { "FAIL" });
            println!("  {r}");
        }
        println!(
            "form: symmetric={} associative={} perpendicular={:?}",
            form.symmetric, form.associative, form.perpendicular
        );
        for (i, j, k) in &form.failing_triples {
            let l = alg.labels();
            println!("  <{} {}, {}> != <{}, {} {}>", l[*i], l[*j], l[*k], l[*i], l[*j], l[*k]);
        }
        println!("{}", if passed { "PASS" } else { "FAIL" });
    }
    Ok(passed)
}

fn format_vector(labels: &[String], v: &[MultiPoly]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(labels)
        .filter(|(c, _)| **c != MultiPoly::default())
        .map(|(c, l)| format!("({c})*{l}"))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn sakuma_table(u: &UniversalAlgebra, format: Format) -> Result<bool> {
    let alg = &u.algebra;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&alg.to_json())?),
        Format::Text => {
            let l = alg.labels();
            for i in 0..alg.dim() {
                for j in i..alg.dim() {
                    println!("{} * {} = {}", l[i], l[j], format_vector(l, alg.product(i, j)));
                }
            }
            println!();
            for i in 0..alg.dim() {
                for j in i..alg.dim() {
                    println!("<{}, {}> = {}", l[i], l[j], alg.gram()[(i, j)]);
                }
            }
        }
    }
    Ok(true)
}

fn sakuma_solve(u: &UniversalAlgebra) -> Result<bool> {
    let points = sakuma::solve_points(u)?;
    println!("{}", serde_json::to_string(&points)?);
    Ok(true)
}

fn sakuma_classify(u: &UniversalAlgebra, out: Option<&Path>, parallel: bool) -> Result<bool> {
    let report = sakuma::classify(u, parallel)?;
    let text = serde_json::to_string_pretty(&report)?;
    match out {
        Some(path) => {
            fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display()))?;
            for p in &report.points {
                println!(
                    "{} lambda={} mu={} dim={} ideal_dim={} {}",
                    p.name,
                    format_rational(&p.lambda.0),
                    format_rational(&p.mu.0),
                    p.quotient_dim,
                    p.ideal_dim,
                    if p.passed { "pass" } else { "FAIL" }
                );
            }
            println!("total dim {}", report.total_dim);
        }
        None => println!("{text}"),
    }
    Ok(report.passed)
}

fn sakuma_rederive(u: &UniversalAlgebra) -> Result<bool> {
    let report = sakuma::rederive_products(u)?;
    print!("{report}");
    Ok(report.passed())
}
