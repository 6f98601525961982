//! Step-to-step stepping control on the rolling foot.
//!
//! The COM follows linear-inverted-pendulum dynamics about the moving
//! contact point of the support foot; the support roll angle stays
//! kinematically consistent with the COM lean under the rolling constraint;
//! a deadbeat step-length controller plans each touchdown from the measured
//! pre-impact state; swing trajectories are two-segment cubic Hermite
//! splines. Purely kinematic: no rigid-body torques, no impact losses
//! beyond re-expressing the state in the new contact frame.

use nalgebra::{Matrix2, Matrix4, Point3, RowVector2, Vector2, Vector3};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::contact::RollingFoot;
use crate::transform::HomTransform;
use crate::{Error, Result};

/// Pendulum constants of the step-to-step model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HlipParams {
    /// COM height, meters.
    pub z0: f64,
    /// Single-support duration, seconds.
    pub t_ssp: f64,
    /// Gravity, m/s^2.
    pub g: f64,
    /// `sqrt(g / z0)`, 1/s.
    pub lam: f64,
    /// Double-support duration; fixed at zero.
    pub dsp_duration: f64,
}

impl HlipParams {
    pub fn new(z0: f64, t_ssp: f64) -> Result<Self> {
        if !(z0 > 0.0 && t_ssp > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "COM height and step duration must be positive, got ({z0}, {t_ssp})"
            )));
        }
        let g = 9.81;
        Ok(Self {
            z0,
            t_ssp,
            g,
            lam: (g / z0).sqrt(),
            dsp_duration: 0.0,
        })
    }
}

impl Default for HlipParams {
    fn default() -> Self {
        Self::new(0.70, 0.38).unwrap()
    }
}

/// Pre-impact COM state relative to the support contact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HlipState {
    /// Lateral position, meters.
    pub p: f64,
    /// Lateral velocity, m/s.
    pub v: f64,
}

impl HlipState {
    pub fn as_vector(&self) -> Vector2<f64> {
        Vector2::new(self.p, self.v)
    }

    pub fn from_vector(v: &Vector2<f64>) -> Self {
        Self { p: v[0], v: v[1] }
    }
}

/// Discrete step-to-step dynamics `X_{k+1} = A X_k + B u_k` with the
/// deadbeat gain `K`.
#[derive(Debug, Clone, PartialEq)]
pub struct S2SModel {
    pub a: Matrix2<f64>,
    pub b: Vector2<f64>,
    pub k: RowVector2<f64>,
}

/// Closed forms of the pre-impact S2S map: the pendulum flows for one
/// support duration after the step displacement shifts the position state.
pub fn build_s2s(params: &HlipParams) -> S2SModel {
    let lt = params.lam * params.t_ssp;
    let (ch, sh) = (lt.cosh(), lt.sinh());
    let a = Matrix2::new(ch, sh / params.lam, params.lam * sh, ch);
    let b = -a * Vector2::new(1.0, 0.0);
    // deadbeat placement: det(A + BK) = 1 - k1, trace = 2 cosh - k1 cosh - k2 lam sinh
    let k = RowVector2::new(1.0, ch / (params.lam * sh));
    S2SModel { a, b, k }
}

/// Period-one orbit: the fixed point of the S2S map for step length
/// `u = v_des * t_ssp`.
pub fn desired_orbit(params: &HlipParams, v_des: f64) -> (HlipState, f64) {
    let model = build_s2s(params);
    let u_h = v_des * params.t_ssp;
    let lhs = Matrix2::identity() - model.a;
    let x = lhs
        .try_inverse()
        .expect("I - A is invertible for positive support duration")
        * (model.b * u_h);
    (HlipState::from_vector(&x), u_h)
}

/// Deadbeat step length `u = u_h + K (X - X_h)`, saturated to `|u| <=
/// u_max`; the flag reports saturation.
pub fn step_target(
    model: &S2SModel,
    x_fd: &HlipState,
    x_h: &HlipState,
    u_h: f64,
    u_max: f64,
) -> (f64, bool) {
    let u = u_h + (model.k * (x_fd.as_vector() - x_h.as_vector()))[0];
    if u.abs() > u_max {
        (u.signum() * u_max, true)
    } else {
        (u, false)
    }
}

/// Map a body-frame COM position/velocity into the contact frame through
/// the foot-to-contact transform and its central-difference time
/// derivative. `roll_history` holds the support roll at `t - dt, t, t + dt`.
pub fn measure_pre_impact(
    foot: &dyn RollingFoot,
    p_body: &Point3<f64>,
    v_body: &Vector3<f64>,
    roll_history: &[f64],
    dt: f64,
) -> Result<HlipState> {
    if roll_history.len() < 3 {
        return Err(Error::InvalidArgument(
            "pre-impact measurement needs 3 bracketing roll samples".into(),
        ));
    }
    if !(dt > 0.0) {
        return Err(Error::InvalidArgument("sample step must be positive".into()));
    }
    let n = roll_history.len();
    let t_prev = foot.contact(roll_history[n - 3])?.foot_to_contact;
    let t_mid = foot.contact(roll_history[n - 2])?.foot_to_contact;
    let t_next = foot.contact(roll_history[n - 1])?.foot_to_contact;
    let t_dot = (t_next.0 - t_prev.0) / (2.0 * dt);
    let p_c = t_mid.apply_point(p_body);
    let v_c = velocity_through(&t_dot, &t_mid, p_body, v_body);
    Ok(HlipState { p: p_c.y, v: v_c.y })
}

/// `v^C = Tdot [p; 1] + T [v; 0]` — the velocity image of the block map
/// built from a transform and its derivative (the velocity's homogeneous
/// coordinate is zero so the map equals the time derivative of the
/// position image).
fn velocity_through(
    t_dot: &Matrix4<f64>,
    t: &HomTransform,
    p_body: &Point3<f64>,
    v_body: &Vector3<f64>,
) -> Vector3<f64> {
    let ph = p_body.to_homogeneous();
    let vh = Vector3::new(v_body.x, v_body.y, v_body.z).to_homogeneous();
    let out = t_dot * ph + t.0 * vh;
    Vector3::new(out.x, out.y, out.z)
}

/// A two-segment cubic Hermite swing trajectory: lift to an apex at half
/// time with the requested vertical clearance, then land with zero terminal
/// velocity. Position and velocity are continuous at the junction.
#[derive(Debug, Clone, Copy)]
pub struct SwingTrajectory {
    pub t_total: f64,
    p0: Vector3<f64>,
    v0: Vector3<f64>,
    apex: Vector3<f64>,
    v_apex: Vector3<f64>,
    p1: Vector3<f64>,
}

pub fn swing_trajectory(
    x0: &Point3<f64>,
    v0: &Vector3<f64>,
    x1: &Point3<f64>,
    t_total: f64,
    z_clear: f64,
) -> Result<SwingTrajectory> {
    if !(t_total > 0.0) || !(z_clear > 0.0) {
        return Err(Error::InvalidArgument(
            "swing duration and clearance must be positive".into(),
        ));
    }
    let apex = Vector3::new(
        0.5 * (x0.x + x1.x),
        0.5 * (x0.y + x1.y),
        x0.z.max(x1.z) + z_clear,
    );
    let v_apex = Vector3::new((x1.x - x0.x) / t_total, (x1.y - x0.y) / t_total, 0.0);
    Ok(SwingTrajectory {
        t_total,
        p0: x0.coords,
        v0: *v0,
        apex,
        v_apex,
        p1: x1.coords,
    })
}

fn hermite(
    p0: &Vector3<f64>,
    v0: &Vector3<f64>,
    p1: &Vector3<f64>,
    v1: &Vector3<f64>,
    dur: f64,
    s: f64,
) -> (Vector3<f64>, Vector3<f64>) {
    let s2 = s * s;
    let s3 = s2 * s;
    let h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    let h10 = s3 - 2.0 * s2 + s;
    let h01 = -2.0 * s3 + 3.0 * s2;
    let h11 = s3 - s2;
    let p = h00 * p0 + h10 * dur * v0 + h01 * p1 + h11 * dur * v1;
    let d00 = 6.0 * s2 - 6.0 * s;
    let d10 = 3.0 * s2 - 4.0 * s + 1.0;
    let d01 = -6.0 * s2 + 6.0 * s;
    let d11 = 3.0 * s2 - 2.0 * s;
    let v = (d00 * p0 + d10 * dur * v0 + d01 * p1 + d11 * dur * v1) / dur;
    (p, v)
}

impl SwingTrajectory {
    /// Position and velocity at `t` in `[0, t_total]`.
    pub fn eval(&self, t: f64) -> (Point3<f64>, Vector3<f64>) {
        let half = 0.5 * self.t_total;
        let t = t.clamp(0.0, self.t_total);
        let (p, v) = if t <= half {
            hermite(&self.p0, &self.v0, &self.apex, &self.v_apex, half, t / half)
        } else {
            hermite(
                &self.apex,
                &self.v_apex,
                &self.p1,
                &Vector3::zeros(),
                half,
                (t - half) / half,
            )
        };
        (Point3::from(p), v)
    }
}

/// Convex blend of the planned swing point with the measured one.
pub fn swing_feedback(x_star: &Point3<f64>, x_fd: &Point3<f64>, k_swa: f64) -> Point3<f64> {
    debug_assert!((0.0..=1.0).contains(&k_swa));
    Point3::from(x_star.coords + k_swa * (x_fd.coords - x_star.coords))
}

/// Walking-loop configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkConfig {
    /// Commanded lateral velocity, m/s.
    pub v_des: f64,
    pub n_steps: usize,
    /// Integration step, seconds; must divide the support duration.
    pub dt: f64,
    /// Swing blend gain.
    pub k_swa: f64,
    /// Swing apex clearance, meters.
    pub z_clear: f64,
    /// Step-length saturation, meters.
    pub u_max: f64,
    /// Commanded-velocity bound, m/s.
    pub v_des_max: f64,
    /// Standard deviation of the post-impact state disturbance `(p, v)`;
    /// zero disables noise. Draws are clamped to three deviations.
    pub noise_std: (f64, f64),
    pub seed: u64,
    /// Extra perturbation added to the initial post-impact state.
    pub initial_offset: (f64, f64),
}

impl Default for WalkConfig {
    fn default() -> Self {
        Self {
            v_des: 0.0,
            n_steps: 10,
            dt: 1e-3,
            k_swa: 0.3,
            z_clear: 0.03,
            u_max: 0.25,
            v_des_max: 0.5,
            noise_std: (0.0, 0.0),
            seed: 0,
            initial_offset: (0.0, 0.0),
        }
    }
}

/// Per-sample trace of the walking loop.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleRecord {
    pub t: f64,
    pub step: usize,
    /// Support roll angle, radians.
    pub theta: f64,
    pub y_com: f64,
    pub v_com: f64,
    /// Contact point position in the world, meters.
    pub y_contact: f64,
    /// Signed rollover length of the support foot, meters.
    pub rollover_length: f64,
    pub swing_y: f64,
    pub swing_z: f64,
    /// Commanded-vs-planned swing deviation, meters.
    pub swing_tracking_err: f64,
}

/// Per-step summary of the walking loop.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepRecord {
    pub index: usize,
    /// Measured pre-impact state.
    pub x_pre: HlipState,
    /// Deadbeat step target, meters.
    pub u_target: f64,
    /// Executed step length, meters.
    pub u_executed: f64,
    pub saturated: bool,
    /// `|X_pre - X_orbit|` (Euclidean), the step-to-step residual.
    pub orbit_residual: f64,
    /// Largest model-vs-oracle rollover mismatch over the step, meters.
    pub slip_residual: f64,
    pub max_roll: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FallInfo {
    pub t: f64,
    pub theta: f64,
    pub step: usize,
}

/// Full trace of one rollout. A recorded fall means the loop terminated
/// early with the log flushed up to the failure.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkLog {
    pub params: HlipParams,
    pub config: WalkConfig,
    pub steps: Vec<StepRecord>,
    pub samples: Vec<SampleRecord>,
    pub fall: Option<FallInfo>,
}

/// Roll angle consistent with the COM lean: the support leg pivots about
/// the moving contact point, so `theta = atan((y_com - y_contact) / z0)`
/// with `y_contact` itself a function of `theta` through the rolling
/// constraint. Solved by fixed-point iteration (the rollover radius is far
/// smaller than the COM height).
fn solve_support_roll(
    foot: &dyn RollingFoot,
    y_anchor: f64,
    y_com: f64,
    z0: f64,
    theta_guess: f64,
) -> Result<(f64, f64)> {
    let mut theta = theta_guess;
    let limit = foot.theta_limit() - 1e-9;
    for _ in 0..60 {
        let clamped = theta.clamp(-limit, limit);
        let l = foot.contact(clamped)?.rollover_length;
        let y_c = y_anchor + l;
        let next = ((y_com - y_c) / z0).atan();
        if (next - theta).abs() < 1e-14 {
            theta = next;
            break;
        }
        theta = next;
    }
    if theta.abs() >= limit {
        return Err(Error::Fall { t: 0.0, theta });
    }
    let y_c = y_anchor + foot.contact(theta)?.rollover_length;
    Ok((theta, y_c))
}

/// Run the kinematic walking loop. A detected fall terminates the loop and
/// is recorded in the log rather than returned as an error, so partial
/// traces stay available.
pub fn simulate_walk(
    foot: &dyn RollingFoot,
    params: &HlipParams,
    config: &WalkConfig,
) -> Result<WalkLog> {
    if config.n_steps == 0 {
        return Err(Error::InvalidArgument("need at least one step".into()));
    }
    if !(config.dt > 0.0) || config.dt > params.t_ssp {
        return Err(Error::InvalidArgument("bad integration step".into()));
    }
    if config.v_des.abs() > config.v_des_max {
        return Err(Error::InvalidArgument(format!(
            "commanded velocity {} exceeds the bound {}",
            config.v_des, config.v_des_max
        )));
    }
    if !(0.0..=1.0).contains(&config.k_swa) {
        return Err(Error::InvalidArgument("swing gain must be in [0, 1]".into()));
    }

    let model = build_s2s(params);
    let (x_h, u_h) = desired_orbit(params, config.v_des);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut draw = |std: f64| -> f64 {
        if std == 0.0 {
            return 0.0;
        }
        // Box-Muller on uniform draws, clamped to three deviations
        let u1: f64 = rng.gen_range(1e-12..1.0);
        let u2: f64 = rng.gen_range(0.0..1.0);
        let n = (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos();
        (n * std).clamp(-3.0 * std, 3.0 * std)
    };

    let n_sub = (params.t_ssp / config.dt).round() as usize;
    let lam2 = params.lam * params.lam;

    // start at the post-impact image of the desired orbit
    let mut p = x_h.p - u_h + config.initial_offset.0;
    let mut v = x_h.v + config.initial_offset.1;
    let mut y_contact = 0.0;
    let mut y_com = y_contact + p;
    let mut theta = (p / params.z0).atan();
    let mut y_anchor = y_contact - foot.contact(theta)?.rollover_length;
    let mut swing_anchor = 0.0; // previous contact location (lift-off point)

    let mut log = WalkLog {
        params: *params,
        config: config.clone(),
        steps: Vec::with_capacity(config.n_steps),
        samples: Vec::new(),
        fall: None,
    };

    'steps: for step in 0..config.n_steps {
        // plan the swing at step start toward the nominal landing target
        let x_now = HlipState { p, v };
        let x_pred = flow_preimpact(params, &x_now, params.t_ssp);
        let (u_plan, _) = step_target(&model, &x_pred, &x_h, u_h, config.u_max);
        let plan = swing_trajectory(
            &Point3::new(0.0, swing_anchor, 0.0),
            &Vector3::zeros(),
            &Point3::new(0.0, y_contact + u_plan, 0.0),
            params.t_ssp,
            config.z_clear,
        )?;

        let mut theta_hist = [theta; 3];
        let mut slip_residual = 0.0f64;
        let mut max_roll = theta.abs();
        let mut swing_cmd = plan.eval(0.0).0;

        for i in 0..n_sub {
            let t_abs = step as f64 * params.t_ssp + i as f64 * config.dt;

            // fall check against the foot's representable roll range
            if theta.abs() >= foot.theta_limit() - 1e-6 {
                log.fall = Some(FallInfo {
                    t: t_abs,
                    theta,
                    step,
                });
                break 'steps;
            }

            let sol = foot.contact(theta)?;
            let l_exact = foot.exact_rollover_length(theta)?;
            slip_residual = slip_residual.max((sol.rollover_length - l_exact).abs());
            max_roll = max_roll.max(theta.abs());

            // retarget the step from the flowed pre-impact prediction
            let t_rem = params.t_ssp - i as f64 * config.dt;
            let x_pred = flow_preimpact(params, &HlipState { p, v }, t_rem);
            let (u_now, _) = step_target(&model, &x_pred, &x_h, u_h, config.u_max);

            // swing command: blend the measured (previously commanded) point
            // with the retargeted plan
            let retarget = swing_trajectory(
                &Point3::new(0.0, swing_anchor, 0.0),
                &Vector3::zeros(),
                &Point3::new(0.0, y_contact + u_now, 0.0),
                params.t_ssp,
                config.z_clear,
            )?;
            let t_in = i as f64 * config.dt;
            let star = retarget.eval(t_in).0;
            swing_cmd = swing_feedback(&star, &swing_cmd, config.k_swa);

            log.samples.push(SampleRecord {
                t: t_abs,
                step,
                theta,
                y_com,
                v_com: v,
                y_contact,
                rollover_length: sol.rollover_length,
                swing_y: swing_cmd.y,
                swing_z: swing_cmd.z,
                swing_tracking_err: (swing_cmd.coords - star.coords).norm(),
            });

            // RK4 on (y_com, v_com) with the contact point re-solved per stage
            let accel = |y: f64, th_guess: f64| -> Result<(f64, f64)> {
                let (th, y_c) = solve_support_roll(foot, y_anchor, y, params.z0, th_guess)?;
                Ok((lam2 * (y - y_c), th))
            };
            let h = config.dt;
            let (a1, th1) = accel(y_com, theta)?;
            let (a2, th2) = accel(y_com + 0.5 * h * v, th1)?;
            let v2 = v + 0.5 * h * a1;
            let (a3, th3) = accel(y_com + 0.5 * h * v2, th2)?;
            let v3 = v + 0.5 * h * a2;
            let (a4, _) = accel(y_com + h * v3, th3)?;
            let v4 = v + h * a3;
            y_com += h / 6.0 * (v + 2.0 * v2 + 2.0 * v3 + v4);
            v += h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4);

            let (th_new, y_c_new) = solve_support_roll(foot, y_anchor, y_com, params.z0, theta)?;
            theta = th_new;
            y_contact = y_c_new;
            p = y_com - y_contact;
            theta_hist = [theta_hist[1], theta_hist[2], theta];
        }
        if log.fall.is_some() {
            break;
        }

        // pre-impact measurement through the transform pipeline, with a
        // virtual continuation sample so the central difference lands on
        // the impact instant
        let x_pre = {
            let h = config.dt;
            let accel = |y: f64, th_guess: f64| -> Result<(f64, f64)> {
                let (th, y_c) = solve_support_roll(foot, y_anchor, y, params.z0, th_guess)?;
                Ok((lam2 * (y - y_c), th))
            };
            let (a1, _) = accel(y_com, theta)?;
            let (a2, _) = accel(y_com + 0.5 * h * v, theta)?;
            let v2 = v + 0.5 * h * a1;
            let (a3, _) = accel(y_com + 0.5 * h * v2, theta)?;
            let v3 = v + 0.5 * h * a2;
            let (a4, _) = accel(y_com + h * v3, theta)?;
            let v4 = v + h * a3;
            let y_virtual = y_com + h / 6.0 * (v + 2.0 * v2 + 2.0 * v3 + v4);
            let (theta_virtual, _) =
                solve_support_roll(foot, y_anchor, y_virtual, params.z0, theta)?;
            let hist = [theta_hist[1], theta, theta_virtual];
            if hist[0] == hist[2] {
                HlipState { p, v }
            } else {
                let world_from_foot = HomTransform::translation_xyz(0.0, y_contact, 0.0)
                    .compose(&foot.contact(theta)?.foot_to_contact);
                let p_body = world_from_foot
                    .inverse()
                    .apply_point(&Point3::new(0.0, y_com, params.z0));
                let a_now = lam2 * (y_com - y_contact);
                let v_body = body_velocity(
                    foot,
                    &hist,
                    h,
                    y_com,
                    v,
                    a_now,
                    y_anchor,
                    params.z0,
                )?;
                measure_pre_impact(foot, &p_body, &v_body, &hist, h)?
            }
        };

        let (u_final, saturated) = step_target(&model, &x_pre, &x_h, u_h, config.u_max);

        // executed landing: the commanded swing point at touchdown
        let final_plan = swing_trajectory(
            &Point3::new(0.0, swing_anchor, 0.0),
            &Vector3::zeros(),
            &Point3::new(0.0, y_contact + u_final, 0.0),
            params.t_ssp,
            config.z_clear,
        )?;
        let star_end = final_plan.eval(params.t_ssp).0;
        let landing = swing_feedback(&star_end, &swing_cmd, config.k_swa);
        let u_exec = landing.y - y_contact;

        log.steps.push(StepRecord {
            index: step,
            x_pre,
            u_target: u_final,
            u_executed: u_exec,
            saturated,
            orbit_residual: (x_pre.as_vector() - x_h.as_vector()).norm(),
            slip_residual,
            max_roll,
        });

        // instantaneous support exchange: re-anchor at the landing point
        let old_contact = y_contact;
        y_contact = old_contact + u_exec;
        p = y_com - y_contact;
        p += draw(config.noise_std.0);
        v += draw(config.noise_std.1);
        y_com = y_contact + p;
        theta = (p / params.z0).atan();
        if theta.abs() >= foot.theta_limit() - 1e-6 {
            log.fall = Some(FallInfo {
                t: (step + 1) as f64 * params.t_ssp,
                theta,
                step,
            });
            break;
        }
        y_anchor = y_contact - foot.contact(theta)?.rollover_length;
        swing_anchor = old_contact;
    }

    Ok(log)
}

/// Flow a state forward by `dt` under the continuous pendulum dynamics
/// (closed form), giving the predicted pre-impact state.
fn flow_preimpact(params: &HlipParams, x: &HlipState, dt: f64) -> HlipState {
    let lt = params.lam * dt;
    let (ch, sh) = (lt.cosh(), lt.sinh());
    HlipState {
        p: ch * x.p + sh / params.lam * x.v,
        v: params.lam * sh * x.p + ch * x.v,
    }
}

/// Body-frame COM velocity consistent with the world COM motion and the
/// support pose history (finite difference of the body-frame image;
/// neighboring world samples reconstructed to second order).
#[allow(clippy::too_many_arguments)]
fn body_velocity(
    foot: &dyn RollingFoot,
    theta_hist: &[f64; 3],
    dt: f64,
    y_com: f64,
    v_com: f64,
    a_com: f64,
    y_anchor: f64,
    z0: f64,
) -> Result<Vector3<f64>> {
    let body_at = |theta: f64, y_c: f64, y: f64| -> Result<Point3<f64>> {
        let world_from_foot = HomTransform::translation_xyz(0.0, y_c, 0.0)
            .compose(&foot.contact(theta)?.foot_to_contact);
        Ok(world_from_foot.inverse().apply_point(&Point3::new(0.0, y, z0)))
    };
    let y_prev = y_com - v_com * dt + 0.5 * a_com * dt * dt;
    let y_next = y_com + v_com * dt + 0.5 * a_com * dt * dt;
    let y_c_prev = y_anchor + foot.contact(theta_hist[0])?.rollover_length;
    let y_c_next = y_anchor + foot.contact(theta_hist[2])?.rollover_length;
    let p_prev = body_at(theta_hist[0], y_c_prev, y_prev)?;
    let p_next = body_at(theta_hist[2], y_c_next, y_next)?;
    Ok((p_next.coords - p_prev.coords) / (2.0 * dt))
}
