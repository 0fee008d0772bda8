//! Verification suites: cross-oracle checks run over a case grid, with one
//! machine-readable pass/fail line per case and a nonzero exit on any
//! failure.

use std::fmt::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use bgg_core::chevalley::Chevalley;
use bgg_core::kostant;
use bgg_core::repkit::{self, Irrep};
use bgg_core::rootcore::{ParabolicSubset, RootSystem, TypeLabel, Weight};
use bgg_core::splitkit;
use bgg_core::verma;
use bgg_core::{Bounds, Error};

use crate::jobs::JobSpec;

struct GridCase {
    label: String,
    rs: Arc<RootSystem>,
    chev: Arc<Chevalley>,
    irrep: Arc<Irrep>,
    parabolic: ParabolicSubset,
    lambda: Weight,
}

fn grid_types(grid: &str) -> Result<(Vec<(TypeLabel, usize)>, i64), Error> {
    match grid {
        "default" => Ok((
            vec![
                (TypeLabel::A, 1),
                (TypeLabel::A, 2),
                (TypeLabel::A, 3),
                (TypeLabel::B, 2),
                (TypeLabel::G, 2),
            ],
            2,
        )),
        "quick" => Ok((
            vec![(TypeLabel::A, 1), (TypeLabel::A, 2), (TypeLabel::B, 2)],
            1,
        )),
        other => Err(Error::InvalidInput(format!(
            "unknown grid `{other}` (expected default or quick)"
        ))),
    }
}

fn fundamental_grid(rank: usize, max_coord: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        let mut next = Vec::new();
        for prefix in &out {
            for c in 0..=max_coord {
                let mut v = prefix.clone();
                v.push(c);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Build the case grid: all listed types, all parabolic subsets, all
/// dominant weights with bounded fundamental coordinates and module
/// dimension within bounds. Modules are shared across parabolics.
fn build_grid(grid: &str, bounds: &Bounds) -> Result<(Vec<GridCase>, Vec<String>), Error> {
    let (types, max_coord) = grid_types(grid)?;
    let mut cases = Vec::new();
    let mut skipped = Vec::new();
    for (label, rank) in types {
        let rs = Arc::new(RootSystem::new(label, rank)?);
        let chev = Arc::new(Chevalley::new(&rs)?);
        for hw in fundamental_grid(rank, max_coord) {
            let lambda = rs.weight_from_fundamental_ints(&hw);
            let dim = repkit::weyl_dimension(&rs, &lambda)?;
            if dim > num_bigint::BigInt::from(bounds.dim_max) {
                skipped.push(format!(
                    "skip {}{} hw={:?}: dimension {} exceeds bound {}",
                    label.letter(),
                    rank,
                    hw,
                    dim,
                    bounds.dim_max
                ));
                continue;
            }
            let irrep = Arc::new(Irrep::new(&rs, &lambda, bounds)?);
            for mask in 0..(1u32 << rank) {
                let crossed: Vec<usize> = (0..rank).filter(|i| mask & (1 << i) != 0).collect();
                let parabolic = ParabolicSubset::from_crossed(rank, crossed.iter().copied())?;
                let crossed_1based: Vec<usize> = crossed.iter().map(|&i| i + 1).collect();
                cases.push(GridCase {
                    label: format!(
                        "{}{} crossed={:?} hw={:?}",
                        label.letter(),
                        rank,
                        crossed_1based,
                        hw
                    ),
                    rs: Arc::clone(&rs),
                    chev: Arc::clone(&chev),
                    irrep: Arc::clone(&irrep),
                    parabolic,
                    lambda: lambda.clone(),
                });
            }
        }
    }
    Ok((cases, skipped))
}

/// Run the per-case closure over the grid in parallel, preserving order.
fn run_cases<F>(cases: &[GridCase], bounds: &Bounds, check: F) -> Vec<(String, Result<String, Error>)>
where
    F: Fn(&GridCase, &Bounds) -> Result<String, Error> + Sync,
{
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<(String, Result<String, Error>)>>> =
        Mutex::new((0..cases.len()).map(|_| None).collect());
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(8);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= cases.len() {
                    break;
                }
                let outcome = check(&cases[i], bounds);
                results.lock().unwrap()[i] = Some((cases[i].label.clone(), outcome));
            });
        }
    });
    results.into_inner().unwrap().into_iter().map(Option::unwrap).collect()
}

fn render_results(
    title: &str,
    results: Vec<(String, Result<String, Error>)>,
    skipped: &[String],
    summary_ok: &str,
) -> Result<String, Error> {
    let mut out = String::new();
    let _ = writeln!(out, "suite {title}: {} cases", results.len());
    let mut failures = 0usize;
    for (label, res) in &results {
        match res {
            Ok(detail) => {
                let _ = writeln!(out, "  case {label}: ok ({detail})");
            }
            Err(e) => {
                failures += 1;
                let _ = writeln!(out, "  case {label}: FAIL ({e})");
            }
        }
    }
    for s in skipped {
        let _ = writeln!(out, "  {s}");
    }
    if failures == 0 {
        let _ = writeln!(out, "all {} cases: {}", results.len(), summary_ok);
        Ok(out)
    } else {
        Err(Error::Inconsistency(format!(
            "{failures} of {} cases failed\n{out}",
            results.len()
        )))
    }
}

fn kostant_case(case: &GridCase, bounds: &Bounds) -> Result<String, Error> {
    let ce = kostant::CeComplex::with_irrep(
        &case.rs,
        &case.chev,
        &case.parabolic,
        (*case.irrep).clone(),
        bounds,
    )?;
    let predicted = kostant::kostant_prediction(&case.rs, &case.parabolic, &case.lambda, bounds)?;
    let all = kostant::cohomology_all(&case.rs, &case.chev, &ce)?;
    for (k, brute) in all.into_iter().enumerate() {
        let want = predicted.get(k).cloned().unwrap_or_default();
        if brute != want {
            return Err(Error::Inconsistency(format!(
                "degree {k}: brute force {brute:?} vs prediction {want:?}"
            )));
        }
        if want.iter().any(|(_, m)| *m != 1) {
            return Err(Error::Inconsistency(format!(
                "degree {k}: a predicted multiplicity differs from 1"
            )));
        }
    }
    Ok(format!("{} degrees", ce.max_degree() + 1))
}

fn hodge_case(case: &GridCase, bounds: &Bounds) -> Result<String, Error> {
    let ce = kostant::CeComplex::with_irrep(
        &case.rs,
        &case.chev,
        &case.parabolic,
        (*case.irrep).clone(),
        bounds,
    )?;
    let mut harmonic_total = 0usize;
    for k in 0..=ce.max_degree() {
        let rep = kostant::hodge_decomposition(&ce, k)?;
        // dim ker □ must equal dim H^k; the cohomology routine also
        // re-verifies this blockwise against the harmonic spaces
        let decomp = kostant::cohomology(&case.rs, &case.chev, &ce, k)?;
        let grading = case.rs.parabolic_grading(&case.parabolic);
        let mut h = 0usize;
        for (nu, m) in &decomp {
            let d = repkit::weyl_dimension_levi(
                &case.rs,
                &grading.levi_roots,
                &case.parabolic.levi(),
                nu,
            )?;
            h += usize::try_from(d).map_err(|_| Error::Inconsistency("dimension overflow".into()))?
                * m;
        }
        if rep.dim_harmonic != h {
            return Err(Error::Inconsistency(format!(
                "degree {k}: ker □ has dimension {} but H^k has {h}",
                rep.dim_harmonic
            )));
        }
        harmonic_total += rep.dim_harmonic;
    }
    Ok(format!("harmonic total {harmonic_total}"))
}

fn resolution_suite(bounds: &Bounds) -> Result<String, Error> {
    let cases: Vec<(&str, Vec<i64>)> = vec![
        ("A2", vec![0, 0]),
        ("A2", vec![1, 0]),
        ("A2", vec![1, 1]),
        ("A1", vec![0]),
        ("A1", vec![1]),
    ];
    let mut out = String::new();
    let _ = writeln!(out, "suite resolution: {} cases", cases.len());
    for (ty, hw) in &cases {
        let rs = RootSystem::parse(ty)?;
        let chev = Chevalley::new(&rs)?;
        let lambda = rs.weight_from_fundamental_ints(hw);
        let res = verma::build_bgg_resolution(&rs, &chev, &lambda, bounds)?;
        let cutoff = crate::jobs::default_cutoff_pub(&rs, &lambda);
        let report = verma::verify_resolution(&rs, &res, cutoff, bounds)?;
        if !report.is_clean() {
            return Err(Error::Inconsistency(format!(
                "resolution for {ty} hw={hw:?} has defects: {:?}",
                report.defects
            )));
        }
        let _ = writeln!(
            out,
            "  case {ty} hw={hw:?}: ok (exact to height {cutoff}, {} weights checked)",
            report.homology_zero.len()
        );
    }
    let _ = writeln!(out, "all {} cases: resolutions exact", cases.len());
    Ok(out)
}

fn characters_suite(bounds: &Bounds) -> Result<String, Error> {
    let types = [(TypeLabel::A, 1), (TypeLabel::A, 2), (TypeLabel::B, 2)];
    let mut out = String::new();
    let mut count = 0usize;
    let mut body = String::new();
    for (label, rank) in types {
        let rs = RootSystem::new(label, rank)?;
        for hw in fundamental_grid(rank, 2) {
            let lambda = rs.weight_from_fundamental_ints(&hw);
            let (ok, failures) = verma::character_identity(&rs, &lambda, 10, bounds)?;
            count += 1;
            if !ok {
                return Err(Error::Inconsistency(format!(
                    "character identity fails for {}{} hw={:?}: {:?}",
                    label.letter(),
                    rank,
                    hw,
                    failures
                )));
            }
            let _ = writeln!(
                body,
                "  case {}{} hw={:?}: ok (height 10)",
                label.letter(),
                rank,
                hw
            );
        }
    }
    let _ = writeln!(out, "suite characters: {count} cases");
    out.push_str(&body);
    let _ = writeln!(out, "all {count} cases: alternating sum equals the character");
    Ok(out)
}

/// One splitting case with its own derived seed, so the suite is
/// deterministic and embarrassingly parallel at once.
pub fn splitting_case(seed: u64, index: usize) -> Result<(), Error> {
    let case_seed = seed.wrapping_add((index as u64).wrapping_mul(0x9E3779B97F4A7C15));
    let mut rng = splitkit::SplitMix64::new(case_seed);
    let c = splitkit::random_exact_complex(&mut rng, 6, 20);
    let s = splitkit::split_exact_complex(&c)
        .map_err(|e| Error::Inconsistency(format!("case {index}: {e}")))?;
    s.verify(&c)
        .map_err(|e| Error::Inconsistency(format!("case {index}: {e}")))?;
    Ok(())
}

fn splitting_suite(seed: u64, cases: usize) -> Result<String, Error> {
    let mut out = String::new();
    let _ = writeln!(out, "suite splitting: {cases} random exact complexes (seed {seed})");
    let next = AtomicUsize::new(0);
    let failures: Mutex<Vec<String>> = Mutex::new(Vec::new());
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(8);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= cases {
                    break;
                }
                if let Err(e) = splitting_case(seed, i) {
                    failures.lock().unwrap().push(e.to_string());
                }
            });
        }
    });
    let mut failures = failures.into_inner().unwrap();
    failures.sort();
    if !failures.is_empty() {
        return Err(Error::Inconsistency(format!(
            "{} of {cases} splitting cases failed\n{}",
            failures.len(),
            failures.join("\n")
        )));
    }
    let _ = writeln!(
        out,
        "all {cases} cases: bd + db = 1, b·b = 0, db idempotent (exact)"
    );
    Ok(out)
}

/// The negative control: corrupt one structure constant and insist the
/// Jacobi verification reports it. The control deliberately terminates
/// through the internal-consistency path (exit code 4).
fn jacobi_control() -> Result<String, Error> {
    let rs = RootSystem::new(TypeLabel::A, 2)?;
    let mut chev = Chevalley::new(&rs)?;
    let ax = rs.positive_root_index(&[1, 0]).expect("simple root");
    let ay = rs.positive_root_index(&[0, 1]).expect("simple root");
    let old = chev.n(ax, ay).expect("bracket constant");
    chev.override_constant(ax, ay, old + 1);
    match chev.verify_jacobi(&rs) {
        Err(Error::Inconsistency(msg)) => Err(Error::Inconsistency(format!(
            "negative control: corrupted structure constant detected as intended — {msg}"
        ))),
        Err(other) => Err(other),
        Ok(()) => Err(Error::Inconsistency(
            "negative control FAILED: corruption was not detected by the Jacobi check".into(),
        )),
    }
}

pub fn run_suite(spec: &JobSpec, bounds: &Bounds) -> Result<String, Error> {
    let suite = spec.suite.as_deref().unwrap_or("all");
    let grid = spec.grid.as_deref().unwrap_or("default");
    match suite {
        "kostant" => {
            let (cases, skipped) = build_grid(grid, bounds)?;
            let results = run_cases(&cases, bounds, kostant_case);
            render_results("kostant", results, &skipped, "brute force == prediction")
        }
        "hodge" => {
            let (cases, skipped) = build_grid(grid, bounds)?;
            let results = run_cases(&cases, bounds, hodge_case);
            render_results(
                "hodge",
                results,
                &skipped,
                "ker-laplacian + im d + im del splits every degree",
            )
        }
        "resolution" => resolution_suite(bounds),
        "characters" => characters_suite(bounds),
        "splitting" => splitting_suite(spec.seed.unwrap_or(0xB99D), spec.cases.unwrap_or(500)),
        "jacobi-control" => jacobi_control(),
        "all" => {
            let mut out = String::new();
            let (cases, skipped) = build_grid(grid, bounds)?;
            let results = run_cases(&cases, bounds, kostant_case);
            out.push_str(&render_results(
                "kostant",
                results,
                &skipped,
                "brute force == prediction",
            )?);
            let results = run_cases(&cases, bounds, hodge_case);
            out.push_str(&render_results(
                "hodge",
                results,
                &skipped,
                "ker-laplacian + im d + im del splits every degree",
            )?);
            out.push_str(&resolution_suite(bounds)?);
            out.push_str(&characters_suite(bounds)?);
            out.push_str(&splitting_suite(
                spec.seed.unwrap_or(0xB99D),
                spec.cases.unwrap_or(500),
            )?);
            Ok(out)
        }
        other => Err(Error::InvalidInput(format!(
            "unknown suite `{other}` (expected kostant, hodge, resolution, characters, splitting, jacobi-control, or all)"
        ))),
    }
}
