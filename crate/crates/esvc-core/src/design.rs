//! Fore/hind ellipse design: a small constrained program determines the
//! fore arc (and its mirrored hind copy) from a known mid arc.
//!
//! Free variables are the fore rollover angle at the segment point, the
//! axis ratio, and the foot width; the chord and radius relations are
//! eliminated in closed form, the tilt/tangency link enters an augmented
//! Lagrangian, and a deterministic multi-start BFGS drives everything.

use std::f64::consts::FRAC_PI_2;

use nalgebra::{Matrix3, Vector2, Vector3};

pub use crate::contact::SegmentChain;
use crate::contact::{FootGeometry, Segment};
use crate::ellipse::EllipseArc;
use crate::{Error, Result};

/// Inputs of the fore-ellipse program.
#[derive(Debug, Clone)]
pub struct DesignSpec {
    pub mid: EllipseArc,
    /// Foot-frame height above the zero-roll contact, meters.
    pub h_foot: f64,
    /// Chosen segment-point roll angle, radians.
    pub theta_m_star: f64,
    /// Nominal foot width pulled in by the fourth cost weight, meters.
    pub w_foot_nominal: f64,
    /// Cost weights: tangent mismatch, fore semi-major, fore semi-minor,
    /// width deviation.
    pub weights: [f64; 4],
}

impl DesignSpec {
    pub fn validate(&self) -> Result<()> {
        if self.weights.iter().any(|w| !w.is_finite() || *w < 0.0) || self.weights[0] <= 0.0 {
            return Err(Error::InvalidArgument(
                "weights must be non-negative with w1 > 0".into(),
            ));
        }
        if !(self.w_foot_nominal > 0.0 && self.w_foot_nominal < W_MAX) {
            return Err(Error::InvalidArgument(format!(
                "nominal width must be in (0, {W_MAX}), got {}",
                self.w_foot_nominal
            )));
        }
        SegmentChain::new(&self.mid, self.h_foot, self.theta_m_star).map(|_| ())
    }
}

/// Feasible output of the program.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DesignSolution {
    pub r_fa: f64,
    pub r_fb: f64,
    pub phi_f_star: f64,
    pub d_f_star: f64,
    pub w_foot: f64,
    pub theta_f_star: f64,
    /// `|eta_m - eta_f|` at the segment point, foot-frame slopes.
    pub slope_mismatch: f64,
    /// Final first-order residual of the augmented Lagrangian run.
    pub kkt_residual: f64,
    pub objective: f64,
}

const W_MAX: f64 = 0.2;
const D_F_MAX: f64 = 0.5;
const EQ_TOL: f64 = 1e-6;

/// Foot-frame tangent slopes of the two arcs at the segment point. The fore
/// slope rotates the fore-local slope back by the fore-axis tilt `delta`;
/// slopes at a rollover angle of `pi/2` come out infinite, so callers
/// compare angles when either side saturates.
pub fn slope_at_segment(
    mid: &EllipseArc,
    phi_m_star: f64,
    fore: &EllipseArc,
    phi_f_star: f64,
    delta: f64,
) -> (f64, f64) {
    let eta_m = (mid.r_b * mid.r_b) / (mid.r_a * mid.r_a) * phi_m_star.tan();
    let local = (fore.r_b * fore.r_b) / (fore.r_a * fore.r_a) * phi_f_star.tan();
    let eta_f = (local.atan() - delta).tan();
    (eta_m, eta_f)
}

/// Everything the closed-form elimination produces for one candidate
/// `(phi_f_star, rho, w)`.
#[derive(Debug, Clone, Copy)]
struct Candidate {
    r_fa: f64,
    r_fb: f64,
    d_f_star: f64,
    theta_f_star: f64,
    /// Tilt/tangency equality residual, radians.
    eq_link: f64,
    eta_m: f64,
    eta_f: f64,
}

struct Problem {
    chain: SegmentChain,
    theta_m_star: f64,
    rho_mid: f64,
    w_nominal: f64,
    weights: [f64; 4],
}

impl Problem {
    fn candidate(&self, x: &Vector3<f64>) -> Option<Candidate> {
        let (phi, rho, w) = (x[0], x[1], x[2]);
        if !(phi.is_finite() && rho.is_finite() && w.is_finite()) {
            return None;
        }
        if !(1e-4..=FRAC_PI_2 - 1e-7).contains(&phi)
            || !(1e-4..=1.2).contains(&rho)
            || !(1e-5..=0.25).contains(&w)
        {
            return None;
        }
        let (b_s, alpha8) = self.chain.width_chain(w);
        let delta = FRAC_PI_2 - alpha8;
        let theta_f_star = self.theta_m_star + delta;
        if !(1e-6..=FRAC_PI_2 - 1e-7).contains(&theta_f_star) {
            return None;
        }
        let d_f_star = b_s / (2.0 * phi.cos());
        let r_fa = d_f_star * (phi.cos().powi(2) + rho * rho * phi.sin().powi(2)).sqrt() / rho;
        let r_fb = rho * r_fa;
        // tangency at S2 links the tilt to the axis ratio
        let eq_link = (rho * rho * phi.tan()).atan() - theta_f_star;
        let local = (rho * rho * phi.tan()).atan();
        let eta_f = (local - delta).tan();
        let eta_m = (self.rho_mid * self.rho_mid)
            * self
                .chain
                .phi_m_star
                .tan();
        Some(Candidate {
            r_fa,
            r_fb,
            d_f_star,
            theta_f_star,
            eq_link,
            eta_m,
            eta_f,
        })
    }

    fn cost(&self, c: &Candidate, w: f64) -> f64 {
        let [w1, w2, w3, w4] = self.weights;
        let mism = c.eta_m - c.eta_f;
        w1 * mism * mism
            + w2 * c.r_fa * c.r_fa
            + w3 * c.r_fb * c.r_fb
            + w4 * (w - self.w_nominal) * (w - self.w_nominal)
    }

    /// Inequalities as `g(x) <= 0`.
    fn inequalities(&self, x: &Vector3<f64>, c: &Candidate) -> [f64; 6] {
        let (_, rho, w) = (x[0], x[1], x[2]);
        [
            rho - 1.0,                                       // r_fa >= r_fb
            self.rho_mid - rho,                              // e_m >= e_f
            self.chain.d0 * self.chain.alpha6.sin() - w / 2.0, // S2 inside half-width
            w - W_MAX,
            c.d_f_star - D_F_MAX,
            1e-4 - w,
        ]
    }
}

/// Augmented-Lagrangian value for one point.
fn al_value(p: &Problem, x: &Vector3<f64>, lam_eq: f64, lam_in: &[f64; 6], mu: f64) -> f64 {
    match p.candidate(x) {
        None => 1e9 + x.norm_squared(),
        Some(c) => {
            let mut v = p.cost(&c, x[2]);
            v += lam_eq * c.eq_link + 0.5 * mu * c.eq_link * c.eq_link;
            for (g, lam) in p.inequalities(x, &c).iter().zip(lam_in) {
                let t = (lam + mu * g).max(0.0);
                v += (t * t - lam * lam) / (2.0 * mu);
            }
            v
        }
    }
}

fn numeric_gradient(f: &dyn Fn(&Vector3<f64>) -> f64, x: &Vector3<f64>) -> Vector3<f64> {
    let mut g = Vector3::zeros();
    for i in 0..3 {
        let h = 1e-7 * (1.0 + x[i].abs());
        let mut xp = *x;
        let mut xm = *x;
        xp[i] += h;
        xm[i] -= h;
        g[i] = (f(&xp) - f(&xm)) / (2.0 * h);
    }
    g
}

/// Plain BFGS with Armijo backtracking; returns the minimizer and the final
/// gradient norm.
fn bfgs3(f: &dyn Fn(&Vector3<f64>) -> f64, x0: Vector3<f64>, max_iters: usize) -> (Vector3<f64>, f64) {
    let mut x = x0;
    let mut fx = f(&x);
    let mut g = numeric_gradient(f, &x);
    let mut h_inv = Matrix3::identity();
    for _ in 0..max_iters {
        if g.norm() < 1e-10 {
            break;
        }
        let mut dir = -(h_inv * g);
        if dir.dot(&g) >= 0.0 {
            dir = -g;
            h_inv = Matrix3::identity();
        }
        let mut step = 1.0;
        let slope = g.dot(&dir);
        let mut accepted = false;
        for _ in 0..40 {
            let xn = x + step * dir;
            let fn_ = f(&xn);
            if fn_ <= fx + 1e-4 * step * slope {
                let gn = numeric_gradient(f, &xn);
                let s = step * dir;
                let y = gn - g;
                let sy = s.dot(&y);
                if sy > 1e-14 {
                    let rho = 1.0 / sy;
                    let i = Matrix3::identity();
                    let left = i - rho * s * y.transpose();
                    h_inv = left * h_inv * left.transpose() + rho * s * s.transpose();
                }
                x = xn;
                fx = fn_;
                g = gn;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    (x, g.norm())
}

/// Solve the fore-ellipse program: deterministic 5x5x5 multi-start, an
/// augmented-Lagrangian outer loop with a BFGS inner loop, equality
/// residuals at or below 1e-6 and non-positive inequality violations.
/// Ties between equally good starts break toward the lexicographically
/// smallest `(r_fa, r_fb)`.
pub fn solve_fore_ellipse(spec: &DesignSpec) -> Result<DesignSolution> {
    spec.validate()?;
    let chain = SegmentChain::new(&spec.mid, spec.h_foot, spec.theta_m_star)?;
    let p = Problem {
        chain,
        theta_m_star: spec.theta_m_star,
        rho_mid: spec.mid.r_b / spec.mid.r_a,
        w_nominal: spec.w_foot_nominal,
        weights: spec.weights,
    };

    // quick emptiness scan of the width box
    let width_floor = 2.0 * p.chain.d0 * p.chain.alpha6.sin();
    let any_w = (1..=1000).map(|i| W_MAX * i as f64 / 1000.0).any(|w| {
        if w < width_floor {
            return false;
        }
        let (_, alpha8) = p.chain.width_chain(w);
        let tf = spec.theta_m_star + FRAC_PI_2 - alpha8;
        tf > 0.0 && tf < FRAC_PI_2
    });
    if !any_w {
        return Err(Error::InfeasibleSpec(format!(
            "no foot width in (0, {W_MAX}) satisfies the half-width bound (needs w >= {width_floor:.4}) with a valid fore roll angle"
        )));
    }

    let phi_starts = [0.35, 0.65, 0.95, 1.2, 1.45];
    let rho_starts: Vec<f64> = (0..5)
        .map(|i| p.rho_mid + (1.0 - p.rho_mid) * i as f64 / 4.0)
        .collect();
    let w_lo = width_floor.max(0.03).min(W_MAX - 0.01);
    let w_starts: Vec<f64> = (0..5)
        .map(|i| w_lo + (0.19 - w_lo) * i as f64 / 4.0)
        .collect();

    let mut best: Option<(DesignSolution, f64)> = None;
    let mut best_violation = f64::INFINITY;

    for &phi0 in &phi_starts {
        for &rho0 in &rho_starts {
            for &w0 in &w_starts {
                let mut x = Vector3::new(phi0, rho0, w0);
                let mut lam_eq = 0.0;
                let mut lam_in = [0.0f64; 6];
                let mut mu = 10.0;
                let mut grad_norm = f64::INFINITY;
                for _outer in 0..12 {
                    let f = |y: &Vector3<f64>| al_value(&p, y, lam_eq, &lam_in, mu);
                    let (xn, gn) = bfgs3(&f, x, 120);
                    x = xn;
                    grad_norm = gn;
                    let Some(c) = p.candidate(&x) else { break };
                    lam_eq += mu * c.eq_link;
                    for (lam, g) in lam_in.iter_mut().zip(p.inequalities(&x, &c)) {
                        *lam = (*lam + mu * g).max(0.0);
                    }
                    let viol = c
                        .eq_link
                        .abs()
                        .max(p.inequalities(&x, &c).iter().fold(0.0f64, |a, g| a.max(*g)));
                    if viol < 1e-10 && gn < 1e-7 {
                        break;
                    }
                    mu = (mu * 8.0).min(1e8);
                }
                // project boundary-grazing iterates back onto the box edge
                let snap = 1e-7;
                if x[1] > 1.0 && x[1] <= 1.0 + snap {
                    x[1] = 1.0;
                }
                if x[1] < p.rho_mid && x[1] >= p.rho_mid - snap {
                    x[1] = p.rho_mid;
                }
                if x[2] > W_MAX && x[2] <= W_MAX + snap {
                    x[2] = W_MAX;
                }
                let Some(c) = p.candidate(&x) else { continue };
                let viol = c
                    .eq_link
                    .abs()
                    .max(p.inequalities(&x, &c).iter().fold(0.0f64, |a, g| a.max(*g)));
                best_violation = best_violation.min(viol);
                if viol > EQ_TOL {
                    continue;
                }
                let sol = DesignSolution {
                    r_fa: c.r_fa,
                    r_fb: c.r_fb,
                    phi_f_star: x[0],
                    d_f_star: c.d_f_star,
                    w_foot: x[2],
                    theta_f_star: c.theta_f_star,
                    slope_mismatch: (c.eta_m - c.eta_f).abs(),
                    kkt_residual: viol.max(grad_norm),
                    objective: p.cost(&c, x[2]),
                };
                let replace = match &best {
                    None => true,
                    Some((cur, obj)) => {
                        sol.objective < obj - 1e-12
                            || (sol.objective <= obj + 1e-12
                                && (sol.r_fa, sol.r_fb) < (cur.r_fa, cur.r_fb))
                    }
                };
                if replace {
                    best = Some((sol, sol.objective));
                }
            }
        }
    }

    match best {
        Some((sol, _)) => Ok(sol),
        None => Err(Error::NoConvergence(format!(
            "no start reached feasibility (best violation {best_violation:.3e})"
        ))),
    }
}

/// Re-evaluate every printed constraint from a returned solution. Returns
/// `(name, residual)` pairs where equality residuals should vanish and
/// inequality entries are violations (positive = broken).
pub fn check_solution(spec: &DesignSpec, sol: &DesignSolution) -> Result<Vec<(&'static str, f64)>> {
    let chain = SegmentChain::new(&spec.mid, spec.h_foot, spec.theta_m_star)?;
    let fore = EllipseArc::new(sol.r_fa, sol.r_fb)?;
    let (b_s, alpha8) = chain.width_chain(sol.w_foot);
    let delta = sol.theta_f_star - spec.theta_m_star;
    let (eta_m, eta_f) = slope_at_segment(&spec.mid, chain.phi_m_star, &fore, sol.phi_f_star, delta);
    let checks = vec![
        (
            "eq_chord_halfwidth",
            b_s / 2.0 - sol.phi_f_star.cos() * sol.d_f_star,
        ),
        (
            "eq_tilt",
            sol.theta_f_star - spec.theta_m_star - (FRAC_PI_2 - alpha8),
        ),
        (
            "eq_cot_tangency",
            1.0 / sol.phi_f_star.tan()
                - fore.r_b * fore.r_b / (fore.r_a * fore.r_a * sol.theta_f_star.tan()),
        ),
        (
            "eq_radius",
            sol.d_f_star - fore.radius_at(sol.phi_f_star),
        ),
        (
            "ineq_halfwidth",
            chain.d0 * chain.alpha6.sin() - sol.w_foot / 2.0,
        ),
        ("ineq_slope_sq", eta_m * eta_m - eta_f * eta_f),
        ("ineq_eccentricity", fore.e - spec.mid.e),
        ("ineq_axes_order", sol.r_fb - sol.r_fa),
        ("ineq_pos_r_fa", -sol.r_fa),
        ("ineq_pos_r_fb", -sol.r_fb),
        ("ineq_pos_phi", -sol.phi_f_star),
        ("ineq_phi_box", sol.phi_f_star - FRAC_PI_2),
        ("ineq_d_box", sol.d_f_star - D_F_MAX),
        ("ineq_w_box", sol.w_foot - W_MAX),
    ];
    Ok(checks)
}

/// True when every equality residual is within `tol` and no inequality is
/// violated beyond `tol`.
pub fn solution_is_feasible(checks: &[(&'static str, f64)], tol: f64) -> bool {
    checks.iter().all(|(name, r)| {
        if name.starts_with("eq_") {
            r.abs() <= tol
        } else {
            *r <= tol
        }
    })
}

/// Closed-form construction of a full foot from the free parameters of the
/// design program (no solver): segment chain, tilt, fore axes, assembly.
pub fn foot_from_free_params(
    mid: &EllipseArc,
    h_foot: f64,
    theta_m_star: f64,
    w_foot: f64,
    phi_f_star: f64,
    l_foot: f64,
) -> Result<FootGeometry> {
    let chain = SegmentChain::new(mid, h_foot, theta_m_star)?;
    let (b_s, alpha8) = chain.width_chain(w_foot);
    let theta_f_star = theta_m_star + FRAC_PI_2 - alpha8;
    if !(theta_f_star > 0.0 && theta_f_star < FRAC_PI_2) {
        return Err(Error::InfeasibleSpec(format!(
            "fore roll angle at S2 out of range: {theta_f_star}"
        )));
    }
    if !(phi_f_star > theta_f_star && phi_f_star < FRAC_PI_2) {
        return Err(Error::InfeasibleSpec(format!(
            "phi_f_star must lie in ({theta_f_star}, pi/2), got {phi_f_star}"
        )));
    }
    let rho2 = theta_f_star.tan() / phi_f_star.tan();
    let rho = rho2.sqrt();
    let d_f_star = b_s / (2.0 * phi_f_star.cos());
    let r_fa = d_f_star * (phi_f_star.cos().powi(2) + rho2 * phi_f_star.sin().powi(2)).sqrt() / rho;
    let fore = EllipseArc::new(r_fa, rho * r_fa)?;
    FootGeometry::new(*mid, fore, h_foot, w_foot, l_foot, theta_m_star)
}

/// Solve the program and assemble the validated foot (mirrored hind arc,
/// calibrated compensation, convexity check).
pub fn assemble_foot(spec: &DesignSpec, sol: &DesignSolution, l_foot: f64) -> Result<FootGeometry> {
    let fore = EllipseArc::new(sol.r_fa, sol.r_fb)?;
    let foot = FootGeometry::new(
        spec.mid,
        fore,
        spec.h_foot,
        sol.w_foot,
        l_foot,
        spec.theta_m_star,
    )?;
    let profile = export_profile(&foot, 512)?;
    if !profile_is_convex(&profile) {
        return Err(Error::GeometryInvariant(
            "assembled rollover profile is not convex".into(),
        ));
    }
    Ok(foot)
}

/// One exported profile vertex (frontal plane, foot coordinates).
#[derive(Debug, Clone, Copy)]
pub struct ProfilePoint {
    pub y: f64,
    pub z: f64,
    pub segment: Segment,
}

/// Ordered rollover profile from the hind toe end to the fore toe end,
/// with the segment boundaries duplicated once under both tags.
pub fn export_profile(foot: &FootGeometry, n: usize) -> Result<Vec<ProfilePoint>> {
    if n < 16 {
        return Err(Error::InvalidArgument(format!(
            "profile needs at least 16 points, got {n}"
        )));
    }
    // split points proportionally to angular spans
    let span_f = FRAC_PI_2 - foot.phi_f_star;
    let span_m = 2.0 * foot.phi_m_star;
    let total = 2.0 * span_f + span_m;
    let n_f = ((n as f64 * span_f / total).round() as usize).max(2);
    let n_m = (n - 2 * n_f).max(2);

    let mut pts = Vec::with_capacity(n + 2);
    // hind: from the toe end (phi = pi/2) inward to the segment point
    for i in 0..n_f {
        let phi = FRAC_PI_2 + (foot.phi_f_star - FRAC_PI_2) * i as f64 / (n_f - 1) as f64;
        let p = foot.hind_point(phi);
        pts.push(ProfilePoint {
            y: p.x,
            z: p.y,
            segment: Segment::Hind,
        });
    }
    // mid: hind side to fore side
    for i in 0..n_m {
        let phi = -foot.phi_m_star + 2.0 * foot.phi_m_star * i as f64 / (n_m - 1) as f64;
        let p = foot.mid_point(phi);
        pts.push(ProfilePoint {
            y: p.x,
            z: p.y,
            segment: Segment::Mid,
        });
    }
    // fore: segment point out to the toe end
    for i in 0..n_f {
        let phi = foot.phi_f_star + (FRAC_PI_2 - foot.phi_f_star) * i as f64 / (n_f - 1) as f64;
        let p = foot.fore_point(phi);
        pts.push(ProfilePoint {
            y: p.x,
            z: p.y,
            segment: Segment::Fore,
        });
    }
    Ok(pts)
}

/// Convexity scan: traversed hind-to-fore along the lower profile, every
/// turn must have the same sense (up to a small tolerance for duplicated
/// boundary points).
pub fn profile_is_convex(pts: &[ProfilePoint]) -> bool {
    let mut sign = 0.0f64;
    for w in pts.windows(3) {
        let (a, b, c) = (&w[0], &w[1], &w[2]);
        let d1 = Vector2::new(b.y - a.y, b.z - a.z);
        let d2 = Vector2::new(c.y - b.y, c.z - b.z);
        // duplicated boundary vertices leave degenerate segments with
        // meaningless directions
        if d1.norm() < 1e-12 || d2.norm() < 1e-12 {
            continue;
        }
        let cross = d1.x * d2.y - d1.y * d2.x;
        let turn = cross / (d1.norm() * d2.norm());
        if turn.abs() < 1e-9 {
            continue;
        }
        if sign == 0.0 {
            sign = turn.signum();
        } else if turn.signum() != sign {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn ea1_mid() -> EllipseArc {
        EllipseArc::new(0.04575, 0.03750).unwrap()
    }

    fn reference_spec() -> DesignSpec {
        DesignSpec {
            mid: ea1_mid(),
            h_foot: 0.06,
            theta_m_star: 0.15,
            w_foot_nominal: 0.12,
            weights: [10.0, 1.0, 1.0, 100.0],
        }
    }

    #[test]
    fn segment_geometry_limits() {
        let mid = ea1_mid();
        // theta -> 0: chord degenerates
        assert!(SegmentChain::new(&mid, 0.06, 1e-9).is_err());
        let near = SegmentChain::new(&mid, 0.06, 1e-4).unwrap();
        assert!((near.d0 - 0.06).abs() < 1e-4);
        assert!(near.alpha6 < 1e-2);

        // circle mid: phi equals theta exactly
        let c = EllipseArc::new(0.04, 0.04).unwrap();
        let chain = SegmentChain::new(&c, 0.06, 0.3).unwrap();
        assert!((chain.phi_m_star - 0.3).abs() < 1e-12);
    }

    #[test]
    fn segment_geometry_against_coordinates() {
        // construct the points explicitly and measure
        let mid = ea1_mid();
        let (h, tms) = (0.06, 0.15);
        let chain = SegmentChain::new(&mid, h, tms).unwrap();
        let phi = chain.phi_m_star;
        let o_m = Vector2::new(0.0, mid.r_b - h);
        let s2 = o_m + mid.radius_at(phi) * Vector2::new(phi.sin(), -phi.cos());
        let bottom = Vector2::new(0.0, -h);
        assert!(((s2 - bottom).norm() - chain.b_m_star).abs() < 1e-12);
        assert!((s2.norm() - chain.d0).abs() < 1e-12);
        let alpha6 = (s2.x / s2.norm()).asin().abs();
        assert!((alpha6 - chain.alpha6).abs() < 1e-12);
        let w = 0.12;
        let s3 = Vector2::new(w / 2.0, 0.0);
        let (b_s, alpha8) = chain.width_chain(w);
        assert!(((s3 - s2).norm() - b_s).abs() < 1e-12);
        // angle at S3 between S3->O_i and S3->S2
        let u1 = (-s3).normalize();
        let u2 = (s2 - s3).normalize();
        assert!((u1.dot(&u2).acos() - alpha8).abs() < 1e-12);
    }

    #[test]
    fn slope_cases() {
        let c = EllipseArc::new(0.05, 0.05).unwrap();
        let (eta_m, _) = slope_at_segment(&c, PI / 4.0, &c, 0.3, 0.0);
        assert!((eta_m - 1.0).abs() < 1e-12);

        // zero tilt: the fore slope reduces to its local form
        let fore = EllipseArc::new(0.06, 0.05).unwrap();
        let (_, eta_f) = slope_at_segment(&c, 0.4, &fore, 0.5, 0.0);
        let local = (0.05f64 * 0.05 / (0.06 * 0.06)) * 0.5f64.tan();
        assert!((eta_f - local).abs() < 1e-12);

        // rotated copy of the mid arc matches tangents exactly
        let mid = ea1_mid();
        let phi_m: f64 = 0.5;
        let delta = 0.2;
        let ratio = mid.r_b * mid.r_b / (mid.r_a * mid.r_a);
        let psi = (ratio * phi_m.tan()).atan() + delta;
        let phi_f = (psi.tan() / ratio).atan();
        let (eta_m, eta_f) = slope_at_segment(&mid, phi_m, &mid, phi_f, delta);
        assert!((eta_m - eta_f).abs() < 1e-10, "{eta_m} vs {eta_f}");
    }

    #[test]
    fn reference_solve_is_feasible_and_deterministic() {
        let spec = reference_spec();
        let sol = solve_fore_ellipse(&spec).unwrap();
        let checks = check_solution(&spec, &sol).unwrap();
        assert!(solution_is_feasible(&checks, EQ_TOL), "{checks:?}");
        let fore = EllipseArc::new(sol.r_fa, sol.r_fb).unwrap();
        assert!(fore.e <= spec.mid.e + 1e-9);
        assert!(sol.slope_mismatch < 0.05);

        let sol2 = solve_fore_ellipse(&spec).unwrap();
        assert_eq!(sol, sol2);
    }

    #[test]
    fn infeasible_width_box() {
        // a huge mid arc pushes the segment point outside any allowed width
        let mid = EllipseArc::new(0.45, 0.28).unwrap();
        let spec = DesignSpec {
            mid,
            h_foot: 0.30,
            theta_m_star: 0.9,
            w_foot_nominal: 0.15,
            weights: [10.0, 1.0, 1.0, 100.0],
        };
        let chain = SegmentChain::new(&mid, 0.30, 0.9).unwrap();
        assert!(2.0 * chain.d0 * chain.alpha6.sin() > W_MAX);
        match solve_fore_ellipse(&spec) {
            Err(Error::InfeasibleSpec(_)) => {}
            other => panic!("expected InfeasibleSpec, got {other:?}"),
        }
    }

    #[test]
    fn assembled_profile_convex_and_symmetric() {
        let spec = reference_spec();
        let sol = solve_fore_ellipse(&spec).unwrap();
        let foot = assemble_foot(&spec, &sol, 0.10).unwrap();
        let profile = export_profile(&foot, 256).unwrap();
        assert!(profile_is_convex(&profile));
        // mirrored hind arc: symmetric profile
        let first = profile.first().unwrap();
        let last = profile.last().unwrap();
        assert!((first.y + last.y).abs() < 1e-12);
        assert!((first.z - last.z).abs() < 1e-12);

        assert!(export_profile(&foot, 8).is_err());
    }

    #[test]
    fn profile_refinement_converges() {
        let spec = reference_spec();
        let sol = solve_fore_ellipse(&spec).unwrap();
        let foot = assemble_foot(&spec, &sol, 0.10).unwrap();
        let coarse = export_profile(&foot, 64).unwrap();
        let fine = export_profile(&foot, 128).unwrap();
        // one-sided Hausdorff: coarse vertices lie on the curve, so measure
        // fine-to-coarse-segment distance; it must shrink like curvature * h^2
        let hausdorff = fine
            .iter()
            .map(|p| {
                coarse
                    .windows(2)
                    .map(|seg| {
                        let a = Vector2::new(seg[0].y, seg[0].z);
                        let b = Vector2::new(seg[1].y, seg[1].z);
                        let q = Vector2::new(p.y, p.z);
                        let ab = b - a;
                        let t = ((q - a).dot(&ab) / ab.norm_squared()).clamp(0.0, 1.0);
                        (q - (a + t * ab)).norm()
                    })
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0f64, f64::max);
        // max segment length ~ total_arc / 64; bound with max curvature 1/r_b_min
        let seg_len = 0.35 / 64.0;
        let bound = seg_len * seg_len / (8.0 * 0.024) * 4.0;
        assert!(hausdorff < bound, "{hausdorff} vs {bound}");
    }

    #[test]
    fn circle_mid_prefers_circle_fore() {
        // with no width pressure and symmetric axis weights the smallest
        // feasible fore arc is circular
        let spec = DesignSpec {
            mid: EllipseArc::new(0.04, 0.04).unwrap(),
            h_foot: 0.06,
            theta_m_star: 0.05,
            w_foot_nominal: 0.10,
            weights: [10.0, 1.0, 1.0, 100.0],
        };
        let sol = solve_fore_ellipse(&spec).unwrap();
        assert!(
            (sol.r_fa - sol.r_fb).abs() / sol.r_fa < 1e-5,
            "{} vs {}",
            sol.r_fa,
            sol.r_fb
        );
        assert!(sol.slope_mismatch < 1e-6);
        let checks = check_solution(&spec, &sol).unwrap();
        assert!(solution_is_feasible(&checks, EQ_TOL), "{checks:?}");
    }

    #[test]
    fn scaling_covariance() {
        let spec = reference_spec();
        let sol = solve_fore_ellipse(&spec).unwrap();
        let s = 2.0;
        // all lengths scale and the quadratic weights on lengths rescale by
        // 1/s^2, leaving the landscape invariant; scale down so both
        // instances stay inside the fixed width box
        let down = DesignSpec {
            mid: EllipseArc::new(spec.mid.r_a / s, spec.mid.r_b / s).unwrap(),
            h_foot: spec.h_foot / s,
            theta_m_star: spec.theta_m_star,
            w_foot_nominal: spec.w_foot_nominal / s,
            weights: [
                spec.weights[0],
                spec.weights[1] * (s * s),
                spec.weights[2] * (s * s),
                spec.weights[3] * (s * s),
            ],
        };
        let sol_down = solve_fore_ellipse(&down).unwrap();
        assert!((sol_down.r_fa * s - sol.r_fa).abs() / sol.r_fa < 1e-5);
        assert!((sol_down.r_fb * s - sol.r_fb).abs() / sol.r_fb < 1e-5);
        assert!((sol_down.d_f_star * s - sol.d_f_star).abs() / sol.d_f_star < 1e-5);
        assert!((sol_down.w_foot * s - sol.w_foot).abs() / sol.w_foot < 1e-5);
        assert!((sol_down.phi_f_star - sol.phi_f_star).abs() < 1e-6);
        assert!((sol_down.theta_f_star - sol.theta_f_star).abs() < 1e-6);
        assert!((sol_down.slope_mismatch - sol.slope_mismatch).abs() < 1e-8);
    }
}
