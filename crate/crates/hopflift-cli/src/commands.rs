//! Implementations of the CLI verbs. Each returns `Ok(())` for exit
//! code 0 and a [`CliError`] otherwise; all output is deterministic.

use std::collections::BTreeMap;
use std::path::Path;

use hopflift::algebra::ExactScalar;
use hopflift::analysis::{
    analyze, assert_kissing, experiment_e5_lift, gram_and_basis, AnalysisReport, LatticeReport,
};
use hopflift::constructions::{
    bw16_canonical, cell24_hopf, cell24_standard, e8_canonical, e8_hopf, lambda16_hopf,
    Configuration, FiberLabel, Method,
};
use serde::Serialize;

use crate::formats;
use crate::render::{render_frames, render_svg, RenderSpec};
use crate::CliError;

/// `build <target> <method> <out.json>`
pub fn build(target: &str, method: &str, out: &Path) -> Result<(), CliError> {
    let config = build_configuration(target, method)?;
    formats::write_config(&config, out)?;
    println!("wrote {} points to {}", config.len(), out.display());
    Ok(())
}

pub fn build_configuration(target: &str, method: &str) -> Result<Configuration, CliError> {
    let method: Method = method
        .parse()
        .map_err(|_| CliError::Input(format!("unknown method {method:?} (hopf|canonical)")))?;
    let result = match (target, method) {
        ("cell24", Method::Hopf) => cell24_hopf(),
        ("cell24", Method::Canonical) => cell24_standard(),
        ("e8", Method::Hopf) => e8_hopf(),
        ("e8", Method::Canonical) => e8_canonical(),
        ("lambda16", Method::Hopf) => lambda16_hopf(),
        ("lambda16", Method::Canonical) => bw16_canonical(),
        _ => {
            return Err(CliError::Input(format!(
                "unknown target {target:?} (cell24|e8|lambda16)"
            )))
        }
    };
    result.map_err(CliError::Construction)
}

#[derive(Serialize)]
struct FailureReport {
    status: &'static str,
    failures: Vec<Failure>,
}

#[derive(Serialize)]
struct Failure {
    kind: String,
    detail: String,
}

/// `verify <path>`: structural invariants, the exact kissing check,
/// and the known counts for the named constructions.
pub fn verify(path: &Path) -> Result<(), CliError> {
    let mut failures: Vec<Failure> = Vec::new();
    let config = match formats::load_for_verification(path)? {
        Ok(config) => Some(config),
        Err(e) => {
            failures.push(Failure {
                kind: "invariant".into(),
                detail: e.to_string(),
            });
            None
        }
    };

    if let Some(config) = &config {
        let kiss = assert_kissing(config);
        if let Some((i, j, dot)) = &kiss.witness {
            failures.push(Failure {
                kind: "kissing".into(),
                detail: format!("points {i} and {j} have dot {dot} > 1/2"),
            });
        }
        let report = analyze(config);
        check_named_expectations(config, &report, &mut failures);

        if failures.is_empty() {
            println!("{}: ok", path.display());
            println!("  name: {} ({})", config.meta().name, config.meta().method);
            println!("  points: {}", report.point_count);
            if let Some(max) = &report.max_offdiag_dot {
                println!("  max off-diagonal dot: {max}");
            }
            if let (Some(&lo), Some(&hi)) = (
                report.neighbor_counts.iter().min(),
                report.neighbor_counts.iter().max(),
            ) {
                if lo == hi {
                    println!("  nearest neighbors per point: {lo}");
                } else {
                    println!("  nearest neighbors per point: {lo}..{hi}");
                }
            }
            println!("  antipodal: {}", report.antipodal);
            return Ok(());
        }
    }

    let report = FailureReport {
        status: "fail",
        failures,
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    Err(CliError::Verification(format!(
        "{} failed verification",
        path.display()
    )))
}

/// Expected exact structure for the three named configurations:
/// (points, nearest neighbors, own-fiber neighbors, per-other-fiber
/// neighbors, non-antipodal fiber count).
fn named_expectations(name: &str) -> Option<(usize, u32, u32, u32, usize)> {
    match name {
        "cell24" => Some((24, 8, 0, 2, 4)),
        "e8" => Some((240, 56, 8, 6, 8)),
        "lambda16" => Some((4320, 280, 56, 14, 16)),
        _ => None,
    }
}

fn check_named_expectations(
    config: &Configuration,
    report: &AnalysisReport,
    failures: &mut Vec<Failure>,
) {
    let Some((count, neighbors, own, other, other_fibers)) =
        named_expectations(&config.meta().name)
    else {
        return;
    };
    if report.point_count != count {
        failures.push(Failure {
            kind: "count".into(),
            detail: format!("expected {count} points, found {}", report.point_count),
        });
        return;
    }
    let half = ExactScalar::ratio(1, 2);
    if report.max_offdiag_dot.as_ref() != Some(&half) {
        failures.push(Failure {
            kind: "angle".into(),
            detail: format!(
                "expected max off-diagonal dot 1/2, found {:?}",
                report.max_offdiag_dot.as_ref().map(ExactScalar::to_text)
            ),
        });
    }
    if let Some(bad) = report.neighbor_counts.iter().position(|&c| c != neighbors) {
        failures.push(Failure {
            kind: "neighbors".into(),
            detail: format!(
                "point {bad} has {} nearest neighbors, expected {neighbors}",
                report.neighbor_counts[bad]
            ),
        });
    }
    if !report.antipodal {
        failures.push(Failure {
            kind: "antipodal".into(),
            detail: "configuration is not closed under negation".into(),
        });
    }
    if config.meta().method == Method::Hopf {
        for (i, dec) in report.decomposition.iter().enumerate() {
            let own_label = config.labels()[i];
            let own_count = dec.get(&own_label).copied().unwrap_or(0);
            let others = dec.iter().filter(|(l, _)| **l != own_label).count();
            let others_ok = dec
                .iter()
                .filter(|(l, _)| **l != own_label)
                .all(|(_, &c)| c == other);
            if own_count != own || others != other_fibers || !others_ok {
                failures.push(Failure {
                    kind: "decomposition".into(),
                    detail: format!(
                        "point {i}: expected {own} own-fiber + {other}×{other_fibers} neighbors, found {:?}",
                        dec.iter().map(|(l, c)| (l.to_string(), *c)).collect::<Vec<_>>()
                    ),
                });
                break;
            }
        }
    }
}

/// Scale at which the named configurations become integral lattices.
fn certificate_scale(config: &Configuration) -> ExactScalar {
    match config.ambient_dim() {
        16 => ExactScalar::integer(2),
        _ => ExactScalar::sqrt2(),
    }
}

#[derive(Serialize)]
struct CompareDiff {
    field: String,
    left: String,
    right: String,
}

/// `compare <a> <b>`: exact spectrum equality plus matching lattice
/// certificates (rank, determinant, evenness).
pub fn compare(path_a: &Path, path_b: &Path) -> Result<(), CliError> {
    let a = formats::load_configuration(path_a)?;
    let b = formats::load_configuration(path_b)?;
    let mut diffs: Vec<CompareDiff> = Vec::new();

    if a.len() != b.len() {
        diffs.push(CompareDiff {
            field: "point_count".into(),
            left: a.len().to_string(),
            right: b.len().to_string(),
        });
    } else if !hopflift::analysis::spectra_equal(&a, &b) {
        diffs.push(CompareDiff {
            field: "dot_spectrum".into(),
            left: "see analyze".into(),
            right: "differs".into(),
        });
    }

    if diffs.is_empty() {
        let ca = gram_and_basis(&a, &certificate_scale(&a));
        let cb = gram_and_basis(&b, &certificate_scale(&b));
        match (ca, cb) {
            (Ok(ra), Ok(rb)) => {
                push_cert_diffs(&ra, &rb, &mut diffs);
            }
            (Err(ea), Err(eb)) => {
                // neither side is an integral lattice at its scale;
                // spectra equality already established
                let _ = (ea, eb);
            }
            (Ok(_), Err(e)) => diffs.push(CompareDiff {
                field: "lattice".into(),
                left: "certificate".into(),
                right: format!("error: {e}"),
            }),
            (Err(e), Ok(_)) => diffs.push(CompareDiff {
                field: "lattice".into(),
                left: format!("error: {e}"),
                right: "certificate".into(),
            }),
        }
    }

    if diffs.is_empty() {
        println!(
            "configurations match: {} points, identical spectra and lattice certificates",
            a.len()
        );
        Ok(())
    } else {
        println!("{}", serde_json::to_string_pretty(&diffs)?);
        Err(CliError::Verification("configurations differ".into()))
    }
}

fn push_cert_diffs(a: &LatticeReport, b: &LatticeReport, diffs: &mut Vec<CompareDiff>) {
    if a.rank != b.rank {
        diffs.push(CompareDiff {
            field: "rank".into(),
            left: a.rank.to_string(),
            right: b.rank.to_string(),
        });
    }
    if a.determinant != b.determinant {
        diffs.push(CompareDiff {
            field: "determinant".into(),
            left: a.determinant.to_string(),
            right: b.determinant.to_string(),
        });
    }
    if a.even != b.even {
        diffs.push(CompareDiff {
            field: "even".into(),
            left: a.even.to_string(),
            right: b.even.to_string(),
        });
    }
}

/// `render <path> [flags] <out.svg>`
#[allow(clippy::too_many_arguments)]
pub fn render(
    path: &Path,
    out: &Path,
    frames: usize,
    plane: (usize, usize),
    axes: (usize, usize),
    canvas: (u32, u32),
    radius: f64,
    per_frame: bool,
) -> Result<(), CliError> {
    let config = formats::load_configuration(path)?;
    let spec = RenderSpec {
        plane,
        frame_count: frames,
        projection_axes: axes,
        canvas,
        marker_radius: radius,
    };
    if per_frame {
        let docs = render_frames(&config, &spec).map_err(|e| CliError::Input(e.to_string()))?;
        let stem = out
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("frame");
        let dir = out.parent().unwrap_or_else(|| Path::new("."));
        for (i, doc) in docs.iter().enumerate() {
            let file = dir.join(format!("{stem}_frame_{i:03}.svg"));
            std::fs::write(&file, doc)?;
        }
        println!("wrote {} frames next to {}", docs.len(), out.display());
    } else {
        let svg = render_svg(&config, &spec).map_err(|e| CliError::Input(e.to_string()))?;
        std::fs::write(out, svg)?;
        println!(
            "wrote {} frames x {} markers to {}",
            frames,
            config.len(),
            out.display()
        );
    }
    Ok(())
}

/// `export <path> --format csv <out.csv>`
pub fn export(path: &Path, format: &str, out: &Path) -> Result<(), CliError> {
    if format != "csv" {
        return Err(CliError::Input(format!(
            "unsupported export format {format:?} (csv)"
        )));
    }
    let config = formats::load_configuration(path)?;
    std::fs::write(out, formats::to_csv(&config))?;
    println!("wrote {} rows to {}", config.len(), out.display());
    Ok(())
}

/// `experiment-e5 --fiber-size m`: the exploratory D5 → S⁷ lift. The
/// outcome is reported, not asserted; exit code 0 either way.
pub fn experiment_e5(fiber_size: u8) -> Result<(), CliError> {
    let (config, report) =
        experiment_e5_lift(fiber_size, &BTreeMap::new()).map_err(CliError::Construction)?;
    let max = report
        .max_offdiag_dot
        .clone()
        .expect("at least two points");
    let half = ExactScalar::ratio(1, 2);
    println!("lifted 40 D5 base points with {fiber_size} fiber points each");
    println!("  points: {}", config.len());
    println!("  max off-diagonal dot: {} (~{:.6})", max, max.to_f64());
    println!("  kissing (all dots ≤ 1/2): {}", max <= half);
    if max > half {
        println!("  the lifted set is not a kissing configuration at this fiber size");
    }
    let pole_count = config
        .labels()
        .iter()
        .filter(|l| matches!(l, FiberLabel::Seq(_)))
        .count();
    debug_assert_eq!(pole_count, config.len());
    Ok(())
}
