//! Accuracy study: chord, elementary-approximation and compensated rollover
//! lengths swept against the quadrature oracle, with CSV reporting.

use std::fmt::Write as _;
use std::path::Path;

use crate::ellipse::{CompensationParams, EllipseArc};
use crate::{Error, Result};

/// One grid point of an error sweep. Percent errors follow the signed
/// convention `(estimate - exact) / exact * 100`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub theta: f64,
    pub lambda: f64,
    pub exact: f64,
    pub chord_est: f64,
    pub approx_est: f64,
    pub compensated_est: f64,
    pub p_err_chord: f64,
    pub p_err_approx: f64,
    pub p_err_comp: f64,
}

/// Error sweep of one arc over a uniform roll-angle grid on `(0, pi/2]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorSweep {
    pub arc_id: String,
    pub lambda_star: f64,
    pub rows: Vec<SweepRow>,
}

/// Signed extremum (sign preserved) and signed mean of one estimator column.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimatorSummary {
    pub max_signed: f64,
    pub mean_signed: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSummary {
    pub chord: EstimatorSummary,
    pub approx: EstimatorSummary,
    pub compensated: EstimatorSummary,
}

/// Sweep a uniform roll-angle grid (`theta_i = (pi/2) i / n`, excluding the
/// zero-length point) and evaluate all three estimators per row.
pub fn sweep(arc: &EllipseArc, comp: &CompensationParams, n: usize, arc_id: &str) -> Result<ErrorSweep> {
    if n < 128 {
        return Err(Error::InvalidArgument(format!(
            "sweep grid must have at least 128 points, got {n}"
        )));
    }
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let theta = std::f64::consts::FRAC_PI_2 * i as f64 / n as f64;
        let angles = arc.rollover_from_roll(theta)?;
        let exact = arc.arc_length_exact(angles.lambda);
        let chord_est = arc.chord_length(angles.phi);
        let approx_est = arc.arc_length_approx(angles.lambda);
        let compensated_est = arc.arc_length_compensated(comp, &angles);
        let pct = |est: f64| (est - exact) / exact * 100.0;
        rows.push(SweepRow {
            theta,
            lambda: angles.lambda,
            exact,
            chord_est,
            approx_est,
            compensated_est,
            p_err_chord: pct(chord_est),
            p_err_approx: pct(approx_est),
            p_err_comp: pct(compensated_est),
        });
    }
    Ok(ErrorSweep {
        arc_id: arc_id.to_string(),
        lambda_star: arc.lambda_star,
        rows,
    })
}

fn column_summary(values: impl Iterator<Item = f64> + Clone) -> EstimatorSummary {
    let mut max_signed = 0.0f64;
    let mut sum = 0.0f64;
    let mut count = 0usize;
    for v in values {
        if v.abs() > max_signed.abs() {
            max_signed = v;
        }
        sum += v;
        count += 1;
    }
    EstimatorSummary {
        max_signed,
        mean_signed: if count == 0 { 0.0 } else { sum / count as f64 },
    }
}

/// Recompute the per-estimator summaries from the rows.
pub fn summarize(sweep: &ErrorSweep) -> Result<SweepSummary> {
    if sweep.rows.is_empty() {
        return Err(Error::InvalidArgument("cannot summarize an empty sweep".into()));
    }
    Ok(SweepSummary {
        chord: column_summary(sweep.rows.iter().map(|r| r.p_err_chord)),
        approx: column_summary(sweep.rows.iter().map(|r| r.p_err_approx)),
        compensated: column_summary(sweep.rows.iter().map(|r| r.p_err_comp)),
    })
}

pub const LAMBDA_STAR_NOTE: &str = "rows are keyed by the lambda* computed from the axes; \
published table columns labeled by arc index carry the first and third lambda* values swapped \
relative to their printed axes";

/// Render the full report: comment header, one CSV row per grid point per
/// arc, and a trailing summary block shaped like the published
/// three-arcs-by-three-estimators table.
pub fn render_report(sweeps: &[ErrorSweep], header_comment: &str) -> Result<String> {
    if sweeps.is_empty() {
        return Err(Error::InvalidArgument("report needs at least one sweep".into()));
    }
    let mut out = String::new();
    if !header_comment.is_empty() {
        for line in header_comment.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "# note: {LAMBDA_STAR_NOTE}");
    let _ = writeln!(
        out,
        "arc_id,theta,lambda,exact,chord,approx,comp,err_chord_pct,err_approx_pct,err_comp_pct"
    );
    for s in sweeps {
        for r in &s.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                s.arc_id,
                r.theta,
                r.lambda,
                r.exact,
                r.chord_est,
                r.approx_est,
                r.compensated_est,
                r.p_err_chord,
                r.p_err_approx,
                r.p_err_comp
            );
        }
    }
    let _ = writeln!(out, "# summary: signed percent, columns chord|approx|comp per arc");
    let _ = writeln!(out, "# arc_id,lambda_star,max_chord,max_approx,max_comp,avg_chord,avg_approx,avg_comp");
    for s in sweeps {
        let sum = summarize(s)?;
        let _ = writeln!(
            out,
            "# {},{},{},{},{},{},{},{}",
            s.arc_id,
            s.lambda_star,
            sum.chord.max_signed,
            sum.approx.max_signed,
            sum.compensated.max_signed,
            sum.chord.mean_signed,
            sum.approx.mean_signed,
            sum.compensated.mean_signed
        );
    }
    Ok(out)
}

/// Write the report to `out`.
pub fn report(sweeps: &[ErrorSweep], out: &Path, header_comment: &str) -> Result<()> {
    let text = render_report(sweeps, header_comment)?;
    std::fs::write(out, text)?;
    Ok(())
}

/// Parse a report written by [`report`] back into sweeps (comment lines are
/// skipped; summaries are recomputed on demand).
pub fn parse_report(text: &str) -> Result<Vec<ErrorSweep>> {
    let mut sweeps: Vec<ErrorSweep> = Vec::new();
    for line in text.lines() {
        if line.starts_with('#') || line.is_empty() || line.starts_with("arc_id,") {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 10 {
            return Err(Error::InvalidArgument(format!(
                "malformed report row: {line}"
            )));
        }
        let num = |i: usize| -> Result<f64> {
            fields[i]
                .parse::<f64>()
                .map_err(|e| Error::InvalidArgument(format!("bad number in report: {e}")))
        };
        let row = SweepRow {
            theta: num(1)?,
            lambda: num(2)?,
            exact: num(3)?,
            chord_est: num(4)?,
            approx_est: num(5)?,
            compensated_est: num(6)?,
            p_err_chord: num(7)?,
            p_err_approx: num(8)?,
            p_err_comp: num(9)?,
        };
        match sweeps.last_mut() {
            Some(s) if s.arc_id == fields[0] => s.rows.push(row),
            _ => sweeps.push(ErrorSweep {
                arc_id: fields[0].to_string(),
                lambda_star: f64::NAN,
                rows: vec![row],
            }),
        }
    }
    Ok(sweeps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_sweep_zero_error_columns() {
        let c = EllipseArc::new(0.04, 0.04).unwrap();
        let comp = c.calibrate_compensation(1024, 1.0).unwrap();
        let s = sweep(&c, &comp, 128, "circle").unwrap();
        for r in &s.rows {
            assert!(r.p_err_approx.abs() < 1e-9);
            assert!(r.p_err_comp.abs() < 1e-9);
            // closed-form circle chord error
            let expected = (2.0 * (r.theta / 2.0).sin() / r.theta - 1.0) * 100.0;
            assert!((r.p_err_chord - expected).abs() < 1e-9);
        }
        assert!(sweep(&c, &comp, 64, "too-small").is_err());
    }

    #[test]
    fn reference_arc_bands() {
        let arc = EllipseArc::new(0.05205, 0.03150).unwrap();
        let comp = arc.calibrate_compensation(1024, 1.0).unwrap();
        let s = sweep(&arc, &comp, 1024, "ea-mid").unwrap();
        let sum = summarize(&s).unwrap();
        assert!((sum.approx.max_signed - -1.57).abs() < 0.3, "{:?}", sum.approx);
        assert!((sum.approx.mean_signed - -0.28).abs() < 0.15);
        assert!((sum.chord.max_signed - -8.68).abs() < 0.5);

        let flat = EllipseArc::new(0.06901, 0.02595).unwrap();
        let comp_f = flat.calibrate_compensation(1024, 1.0).unwrap();
        let sf = sweep(&flat, &comp_f, 1024, "ea-flat").unwrap();
        let sum_f = summarize(&sf).unwrap();
        assert!((sum_f.chord.max_signed - -9.73).abs() < 0.5 || (sum_f.chord.max_signed - -6.04).abs() < 0.5);
    }

    #[test]
    fn summary_cases() {
        let mk_row = |p: f64| SweepRow {
            theta: 0.1,
            lambda: 0.1,
            exact: 1.0,
            chord_est: 1.0,
            approx_est: 1.0,
            compensated_est: 1.0,
            p_err_chord: p,
            p_err_approx: 0.0,
            p_err_comp: 0.0,
        };
        let s = ErrorSweep {
            arc_id: "synthetic".into(),
            lambda_star: 1.0,
            rows: vec![mk_row(0.1), mk_row(-2.5), mk_row(0.2)],
        };
        let sum = summarize(&s).unwrap();
        assert_eq!(sum.approx.max_signed, 0.0);
        assert_eq!(sum.approx.mean_signed, 0.0);
        // spike dominates the max, the mean dilutes it
        assert_eq!(sum.chord.max_signed, -2.5);
        assert!((sum.chord.mean_signed - (0.1 - 2.5 + 0.2) / 3.0).abs() < 1e-15);

        let empty = ErrorSweep {
            arc_id: "empty".into(),
            lambda_star: 1.0,
            rows: vec![],
        };
        assert!(summarize(&empty).is_err());
    }

    #[test]
    fn report_round_trip() {
        let c = EllipseArc::new(0.05, 0.045).unwrap();
        let comp = c.calibrate_compensation(512, 1.0).unwrap();
        let s = sweep(&c, &comp, 128, "rt").unwrap();
        let text = render_report(std::slice::from_ref(&s), "config-hash: test").unwrap();
        let parsed = parse_report(&text).unwrap();
        assert_eq!(parsed.len(), 1);
        assert_eq!(parsed[0].rows, s.rows);
        assert!(render_report(&[], "").is_err());
    }
}
