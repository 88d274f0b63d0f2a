// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Command-line interface: validate linkage files, compute configuration
//! spaces by several methods, classify sampling complexity, run the
//! brute-force oracle, and emit SVG drawings.
//!
//! Exit codes: 0 success, 2 validation error, 3 quadrilateral recursion
//! not applicable, 4 unrealizable request.

use cayley_cspace::classify::{classify_triangle_free_1path, low_sampling_complexity, quantifier_exchange_check};
use cayley_cspace::cspace::{config_space, CspaceResult, Method};
use cayley_cspace::enumerate::triangle_free_1path_substrates;
use cayley_cspace::error::Error;
use cayley_cspace::henneberg::{enumerate_base_edges, is_1path};
use cayley_cspace::interval::IntervalSet;
use cayley_cspace::io::{read_linkage_file, EndpointRecord, ResultFile};
use cayley_cspace::linkage::Linkage;
use cayley_cspace::oracle::{default_sweep_range, init_thread_pool, realizable_at, sweep};
use cayley_cspace::quad::{qdim_config_space, QdimOutcome};
use cayley_cspace::realize::{rc_realize, OrientationSeq, Tolerance, ORIENTATION_CAP};
use cayley_cspace::svg::{render_interval_diagram, render_realization};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_VALIDATION: u8 = 2;
const EXIT_NOT_APPLICABLE: u8 = 3;
const EXIT_UNREALIZABLE: u8 = 4;

#[derive(Parser)]
#[command(name = "cayley", version, about = "Interval descriptions of 1-dof linkage configuration spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Extremes,
    Qdim,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a linkage file and report its structure.
    Check {
        path: PathBuf,
    },
    /// Compute the configuration space and write a result file.
    Cspace {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "extremes")]
        method: MethodArg,
        /// Absolute tolerance for endpoint and merge decisions.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Write the result file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Cross-check against the brute-force oracle and report the
        /// maximum endpoint discrepancy.
        #[arg(long)]
        verify: bool,
    },
    /// Classify sampling complexity of the substrate.
    Classify {
        path: Option<PathBuf>,
        /// Instead of a file, sweep all triangle-free 1-path substrates
        /// with up to N vertices and cross-validate the characterizations.
        #[arg(long)]
        exhaustive: Option<usize>,
        /// Decide once per base edge of the completed graph and check
        /// that all verdicts agree.
        #[arg(long)]
        all_base_edges: bool,
    },
    /// Emit an SVG drawing.
    Render {
        path: PathBuf,
        /// Draw a realization at this base non-edge length.
        #[arg(long)]
        dstar: Option<f64>,
        /// Draw the configuration space as a number-line diagram.
        #[arg(long)]
        interval_diagram: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the brute-force realizability sweep.
    Oracle {
        path: PathBuf,
        #[arg(long)]
        lo: Option<f64>,
        #[arg(long)]
        hi: Option<f64>,
        #[arg(long, default_value_t = 1401)]
        n: usize,
    },
}

fn main() -> ExitCode {
    init_thread_pool();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VALIDATION)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Check { path } => cmd_check(&path),
        Command::Cspace { path, method, tol, out, verify } => {
            cmd_cspace(&path, method, tol, out.as_deref(), verify)
        }
        Command::Classify { path, exhaustive, all_base_edges } => {
            cmd_classify(path.as_deref(), exhaustive, all_base_edges)
        }
        Command::Render { path, dstar, interval_diagram, out } => {
            cmd_render(&path, dstar, interval_diagram, out.as_deref())
        }
        Command::Oracle { path, lo, hi, n } => cmd_oracle(&path, lo, hi, n),
    }
}

fn emit(out: Option<&std::path::Path>, content: &str) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_check(path: &std::path::Path) -> Result<ExitCode, Error> {
    let l = read_linkage_file(path)?;
    let g = l.graph();
    let f = l.base_nonedge();
    println!("vertices: {}", g.vertex_count());
    println!("edges: {}", g.edge_count());
    println!("rigidity: {:?}", g.rigidity_status()?);
    let completed = g.with_edge(f.0, f.1)?;
    let bases = enumerate_base_edges(&completed)?;
    let list: Vec<String> = bases
        .iter()
        .map(|&(u, v)| format!("({},{})", u + 1, v + 1))
        .collect();
    println!("base edges of completion: {}", list.join(" "));
    println!("1-path: {}", is_1path(g, f));
    println!("triangle-free: {}", g.is_triangle_free());
    println!("construction steps: {}", l.construction().steps.len());
    Ok(ExitCode::SUCCESS)
}

fn interval_only_result(set: &IntervalSet, method: &str) -> ResultFile {
    ResultFile {
        intervals: set.intervals().iter().map(|iv| (iv.lo, iv.hi)).collect(),
        endpoints: set
            .endpoints()
            .iter()
            .map(|&value| EndpointRecord {
                value,
                step: None,
                variant: None,
                orientation: None,
                collinear_triple: None,
            })
            .collect(),
        method: method.to_string(),
    }
}

fn oracle_intervals(l: &Linkage, seed: Option<f64>, n: usize, tol: &Tolerance) -> Result<IntervalSet, Error> {
    let (lo, hi) = default_sweep_range(l, seed, tol);
    Ok(sweep(l, lo, hi, n, tol)?.to_interval_set(tol))
}

fn cmd_cspace(
    path: &std::path::Path,
    method: MethodArg,
    tol: f64,
    out: Option<&std::path::Path>,
    verify: bool,
) -> Result<ExitCode, Error> {
    let l = read_linkage_file(path)?;
    let tol = Tolerance { abs_tol: tol, ..Tolerance::default() };
    let (file, set) = match method {
        MethodArg::Extremes => {
            let r: CspaceResult = config_space(&l, &tol)?;
            (ResultFile::build(&r), r.intervals)
        }
        MethodArg::Qdim => match qdim_config_space(&l, &tol)? {
            QdimOutcome::Set(set) => {
                (interval_only_result(&set, Method::Qdim.as_str()), set)
            }
            QdimOutcome::NotApplicable => {
                eprintln!("quadrilateral recursion not applicable to this instance");
                return Ok(ExitCode::from(EXIT_NOT_APPLICABLE));
            }
        },
        MethodArg::Oracle => {
            let set = oracle_intervals(&l, None, 2001, &tol)?;
            (interval_only_result(&set, Method::Oracle.as_str()), set)
        }
    };
    if verify {
        let seed = set.endpoints().first().copied();
        let oracle_set = oracle_intervals(&l, seed, 2001, &tol)?;
        let max_disc = set
            .endpoints()
            .iter()
            .zip(oracle_set.endpoints().iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0_f64, f64::max);
        if set.endpoints().len() == oracle_set.endpoints().len() {
            eprintln!("verify: max endpoint discrepancy {max_disc:e}");
        } else {
            eprintln!(
                "verify: component count mismatch ({} vs oracle {})",
                set.intervals().len(),
                oracle_set.intervals().len()
            );
        }
    }
    emit(out, &file.to_json())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(
    path: Option<&std::path::Path>,
    exhaustive: Option<usize>,
    all_base_edges: bool,
) -> Result<ExitCode, Error> {
    if let Some(max_n) = exhaustive {
        let mut all_agree = true;
        let mut count = 0usize;
        for (g, f) in triangle_free_1path_substrates(max_n) {
            let r = classify_triangle_free_1path(&g, f)?;
            let verdicts: Vec<Option<bool>> = r.method_agreement.values().copied().collect();
            let agree = verdicts.iter().all(|v| *v == verdicts[0]);
            all_agree &= agree;
            count += 1;
            println!(
                "n={} edges={:?} low={} agree={}",
                g.vertex_count(),
                g.edges(),
                r.low_sampling,
                agree
            );
        }
        println!("instances: {count}");
        println!("all characterizations agree: {all_agree}");
        return Ok(ExitCode::SUCCESS);
    }
    let path = path.ok_or_else(|| Error::InvalidInput("need a file or --exhaustive".into()))?;
    let l = read_linkage_file(path)?;
    let g = l.graph();
    let f = l.base_nonedge();
    if all_base_edges {
        let completed = g.with_edge(f.0, f.1)?;
        let (agree, table) = quantifier_exchange_check(&completed)?;
        for ((u, v), low) in &table {
            println!("base ({},{}): low sampling {}", u + 1, v + 1, low);
        }
        println!("agree: {agree}");
        return Ok(ExitCode::SUCCESS);
    }
    let r = low_sampling_complexity(g, f)?;
    println!("low sampling complexity: {}", r.low_sampling);
    for e in &r.per_extreme {
        println!(
            "step {} on ({},{}): wellconstrained={} triangle_decomposable={:?}",
            e.step,
            e.base_pair.0 + 1,
            e.base_pair.1 + 1,
            e.wellconstrained,
            e.triangle_decomposable,
        );
    }
    if g.is_triangle_free() && is_1path(g, f) {
        let tf = classify_triangle_free_1path(g, f)?;
        if let Some(w) = tf.minor_witnesses {
            println!("minors: K33={} prism={}", w.k33, w.prism);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_render(
    path: &std::path::Path,
    dstar: Option<f64>,
    interval_diagram: bool,
    out: Option<&std::path::Path>,
) -> Result<ExitCode, Error> {
    let l = read_linkage_file(path)?;
    let tol = Tolerance::default();
    match (dstar, interval_diagram) {
        (Some(d), false) => {
            if !realizable_at(&l, d, &tol)? {
                eprintln!("length {d} lies outside the configuration space");
                return Ok(ExitCode::from(EXIT_UNREALIZABLE));
            }
            let c = l.construction();
            let k = c.steps.len();
            if k > ORIENTATION_CAP {
                return Err(Error::TooManyOrientations(k, ORIENTATION_CAP));
            }
            let realization = (0u64..(1 << k))
                .find_map(|mask| {
                    let sigma = OrientationSeq::from_mask(mask, k);
                    rc_realize(c, l.delta(), d, &sigma, &tol).ok().flatten()
                })
                .expect("realizable length admits a realization");
            emit(out, &render_realization(&l, &realization))?;
            Ok(ExitCode::SUCCESS)
        }
        (None, true) => {
            let r = config_space(&l, &tol)?;
            emit(out, &render_interval_diagram(&r))?;
            Ok(ExitCode::SUCCESS)
        }
        _ => Err(Error::InvalidInput(
            "pass exactly one of --dstar or --interval-diagram".into(),
        )),
    }
}

fn cmd_oracle(
    path: &std::path::Path,
    lo: Option<f64>,
    hi: Option<f64>,
    n: usize,
) -> Result<ExitCode, Error> {
    let l = read_linkage_file(path)?;
    let tol = Tolerance::default();
    // Seed the window with the smallest analytic candidate when one is
    // computable, so the default range encloses the lowest boundary.
    let seed = cayley_cspace::cspace::candidate_endpoints(&l, &tol)
        .ok()
        .and_then(|c| {
            c.endpoints
                .iter()
                .map(|e| e.value)
                .min_by(|a, b| a.partial_cmp(b).unwrap())
        });
    let (dlo, dhi) = default_sweep_range(&l, seed, &tol);
    let profile = sweep(&l, lo.unwrap_or(dlo), hi.unwrap_or(dhi), n, &tol)?;
    println!("boundaries: {:?}", profile.refined_boundaries);
    let set = profile.to_interval_set(&tol);
    for iv in set.intervals().iter() {
        println!("[{}, {}]", iv.lo, iv.hi);
    }
    Ok(ExitCode::SUCCESS)
}
