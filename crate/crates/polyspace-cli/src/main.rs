//! Command-line surface for the planar polygon space toolkit.
//!
//! Every subcommand prints a human-readable summary by default and
//! machine-readable JSON with `--json`; output is deterministic (no
//! timestamps, fixed ordering). Exit codes: 0 success, 1 domain error
//! (non-generic input etc.), 2 usage error.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use polyspace::chambers::{enumerate_chambers, ChamberCatalog};
use polyspace::combinatorics::{chamber_signature, genetic_code, LengthVector};
use polyspace::homology::{a_vector, betti, euler_characteristic};
use polyspace::morse::{check_subset_bijection, critical_points, reduction};
use polyspace::presentations::{present_h1, torus_image_ranks};
use polyspace::taxonomy::{bettispecial_crosscheck, classify, ChamberClass};
use polyspace::walker::{fingerprint, verify_walker};

#[derive(Parser)]
#[command(name = "polyspace", version, about = "Exact invariants of planar polygon spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit JSON instead of the human-readable table.
    #[arg(long, global = true)]
    json: bool,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<std::path::PathBuf>,

    /// Worker threads for enumeration and verification (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Args)]
struct LengthsArg {
    /// Comma-separated bar lengths, integers or rationals (e.g. 1,1,2,2,3
    /// or 1/2,1/2,1,1,3/2).
    #[arg(long, value_name = "LIST")]
    lengths: String,
}

impl LengthsArg {
    fn parse(&self) -> polyspace::Result<LengthVector> {
        LengthVector::parse(&self.lengths)
    }
}

#[derive(Args)]
struct BarsArg {
    /// Number of bars.
    #[arg(long, value_name = "N")]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Chamber class: empty, disconnected, normal, or special with type.
    Classify(LengthsArg),
    /// Stratum counts, Betti numbers and Euler characteristic.
    Betti(LengthsArg),
    /// Chamber signature and genetic code of the ordered representative.
    Signature(LengthsArg),
    /// Enumerate all chambers for n bars (JSONL with --json).
    Chambers(BarsArg),
    /// Presentation of the degree-one subring of the cohomology.
    Present(LengthsArg),
    /// Ring-invariant fingerprint (Betti, d-invariants, annihilator ranks).
    Invariants(LengthsArg),
    /// Critical points and stratum bookkeeping of the reduction cobordism.
    Morse(LengthsArg),
    /// Pairwise chamber-separation report by invariant tier.
    WalkerVerify(BarsArg),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // Ignore the error if a pool already exists (repeated invocation in
        // tests).
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match run(&cli.command, cli.json) {
        Ok(output) => {
            let payload = if output.ends_with('\n') { output } else { output + "\n" };
            match &cli.out {
                None => {
                    print!("{payload}");
                    ExitCode::SUCCESS
                }
                Some(path) => match std::fs::write(path, payload) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        ExitCode::from(1)
                    }
                },
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: &Command, json: bool) -> polyspace::Result<String> {
    match command {
        Command::Classify(args) => {
            let l = args.parse()?;
            let class = classify(&l)?;
            if json {
                let type_json = class
                    .special_type()
                    .map(|t| serde_json::json!(t.indices()))
                    .unwrap_or(serde_json::Value::Null);
                Ok(serde_json::json!({
                    "n": l.n(),
                    "lengths": length_strings(&l),
                    "class": class.to_string(),
                    "type": type_json,
                })
                .to_string())
            } else {
                Ok(match class {
                    ChamberClass::Special(t) => format!("Special type {t}"),
                    ChamberClass::Normal => "Normal".into(),
                    ChamberClass::Disconnected => "Disconnected".into(),
                    ChamberClass::Empty => "Empty".into(),
                })
            }
        }
        Command::Betti(args) => {
            let l = args.parse()?;
            let a = a_vector(&l)?;
            let b = betti(&l)?.0;
            let chi = euler_characteristic(&l)?;
            if json {
                Ok(serde_json::json!({
                    "n": l.n(),
                    "lengths": length_strings(&l),
                    "a": a,
                    "betti": b,
                    "euler": chi,
                })
                .to_string())
            } else {
                let mut out = String::new();
                let _ = writeln!(out, "a     = {}", fmt_vec(&a));
                let _ = writeln!(out, "betti = {}", fmt_vec(&b));
                let _ = write!(out, "euler = {chi}");
                Ok(out)
            }
        }
        Command::Signature(args) => {
            let l = args.parse()?;
            let sig = chamber_signature(&l)?;
            let code = genetic_code(&sig);
            if json {
                Ok(serde_json::json!({
                    "n": sig.n,
                    "signature": sig.shorts,
                    "genetic_code": code.antichain,
                })
                .to_string())
            } else {
                let mut out = String::new();
                let _ = writeln!(out, "signature:    {}", fmt_masks(&sig.shorts));
                let _ = write!(out, "genetic code: {}", fmt_masks(&code.antichain));
                Ok(out)
            }
        }
        Command::Chambers(args) => {
            let catalog = enumerate_chambers(args.n)?;
            if json {
                Ok(catalog.to_jsonl())
            } else {
                Ok(render_catalog(&catalog))
            }
        }
        Command::Present(args) => {
            let l = args.parse()?;
            let ph = present_h1(&l)?;
            let ranks = ph.presentation.graded_ranks(ph.n - 3);
            let torus_ranks = torus_image_ranks(&ph);
            if json {
                let mut v = ph.to_json();
                v["graded_ranks"] = serde_json::json!(ranks);
                v["torus_image_ranks"] = serde_json::json!(torus_ranks);
                Ok(v.to_string())
            } else {
                let mut out = String::new();
                let _ = writeln!(out, "class:        {}", ph.class);
                let _ = writeln!(out, "generators:   {}", ph.presentation.generators().join(", "));
                let _ = writeln!(out, "relations:");
                for r in ph.presentation.relations() {
                    let _ = writeln!(out, "  {} = 0", ph.presentation.format_element(r));
                }
                let _ = writeln!(out, "graded ranks: {}", fmt_vec(&ranks));
                let _ = writeln!(out, "torus ranks:  {}", fmt_vec(&torus_ranks));
                let _ = writeln!(out, "torus images:");
                for (idx, img) in ph.torus_images.iter().enumerate() {
                    let rhs = match img.pinned() {
                        None => "(not pinned)".into(),
                        Some(e) => ph.presentation.format_element(e),
                    };
                    let _ = writeln!(out, "  X{} -> {}", idx + 1, rhs);
                }
                let _ = write!(out, "deficit degree: {}", ph.deficit_degree);
                Ok(out)
            }
        }
        Command::Invariants(args) => {
            let l = args.parse()?;
            let fp = fingerprint(&l)?;
            if json {
                Ok(serde_json::to_string(&fp).expect("fingerprint serializes"))
            } else {
                let mut out = String::new();
                let _ = writeln!(out, "class:    {}", fp.class);
                let _ = writeln!(out, "betti:    {}", fmt_vec(&fp.betti));
                if let Some((d1, d2, d3)) = fp.d {
                    let _ = writeln!(out, "d:        ({d1}, {d2}, {d3})");
                    if let Ok(report) = bettispecial_crosscheck(&l) {
                        let _ = writeln!(
                            out,
                            "closed-form betti check: {}",
                            if report.pass { "pass" } else { "FAIL" }
                        );
                    }
                }
                if !fp.ann_table.is_empty() {
                    let cells: Vec<String> = fp
                        .ann_table
                        .iter()
                        .map(|(k, i, r)| format!("A^{k}_{i}={r}"))
                        .collect();
                    let _ = writeln!(out, "ann table: {}", cells.join(" "));
                }
                if let Some(ranks) = &fp.h1_ranks {
                    let _ = writeln!(out, "h1 ranks: {}", fmt_vec(ranks));
                }
                if let Some(top) = fp.ann_top {
                    let _ = writeln!(out, "top annihilator rank: {top}");
                }
                Ok(out.trim_end().to_string())
            }
        }
        Command::Morse(args) => {
            let l = args.parse()?;
            let points = critical_points(&l)?;
            let step = reduction(&l)?;
            let report = check_subset_bijection(&l)?;
            if json {
                let pts: Vec<serde_json::Value> = points
                    .iter()
                    .map(|p| {
                        serde_json::json!({
                            "subset": p.subset,
                            "index": p.index,
                            "t": p.value.to_string(),
                            "signs": p.signs,
                        })
                    })
                    .collect();
                Ok(serde_json::json!({
                    "n": l.n(),
                    "critical_points": pts,
                    "reduction": {
                        "target": length_strings(&step.target),
                        "epsilon": step.epsilon.to_string(),
                    },
                    "bijection": report,
                })
                .to_string())
            } else {
                let mut out = String::new();
                let _ = writeln!(out, "critical points ({}):", points.len());
                for p in &points {
                    let _ = writeln!(out, "  J = {}, index {}, t = {}", p.subset, p.index, p.value);
                }
                let _ = writeln!(out, "reduction target: {}", step.target);
                let _ = writeln!(out, "epsilon:          {}", step.epsilon);
                let _ = write!(
                    out,
                    "stratum bijection: {}",
                    if report.pass { "pass" } else { "FAIL" }
                );
                Ok(out)
            }
        }
        Command::WalkerVerify(args) => {
            let report = verify_walker(args.n)?;
            if json {
                Ok(serde_json::to_string(&report).expect("report serializes"))
            } else {
                let mut out = String::new();
                let _ = writeln!(out, "n = {}: {} chambers, {} pairs", report.n, report.chambers,
                    report.pairs.len());
                let _ = writeln!(
                    out,
                    "tier counts: betti {}, fingerprint {}, balanced complex {}, rigidity {}",
                    report.tier_counts[0],
                    report.tier_counts[1],
                    report.tier_counts[2],
                    report.tier_counts[3]
                );
                let _ = writeln!(out, "betti collisions: {}", report.betti_collisions);
                for p in report.pairs.iter().filter(|p| p.tier as u8 >= 3) {
                    let _ = writeln!(out, "  {}-{}: {}", p.left, p.right, p.witness);
                }
                let _ = write!(out, "unexplained pairs: {}", report.unexplained.len());
                Ok(out)
            }
        }
    }
}

fn length_strings(l: &LengthVector) -> Vec<String> {
    l.entries().iter().map(|r| r.to_string()).collect()
}

fn fmt_vec<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn fmt_masks(masks: &[polyspace::combinatorics::SubsetMask]) -> String {
    if masks.is_empty() {
        return "(none)".into();
    }
    masks.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ")
}

fn render_catalog(catalog: &ChamberCatalog) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}: {} chambers", catalog.n, catalog.entries.len());
    for (i, e) in catalog.entries.iter().enumerate() {
        let _ = writeln!(
            out,
            "{:>4}  {:<16} betti {:<12} code {:<24} rep {}",
            i,
            e.class.to_string(),
            fmt_vec(&e.betti),
            fmt_masks(&e.genetic_code.antichain),
            e.representative,
        );
    }
    out.trim_end().to_string()
}
