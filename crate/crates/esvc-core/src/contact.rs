//! Analytic rolling-contact transforms for the assembled three-arc foot.
//!
//! Three frames: the foot frame `O_i` at the center of the upper surface
//! (z up, y lateral), the fixed frame `O_C` at the zero-roll ground contact,
//! and the moving contact frame `C` (world-aligned, origin at the current
//! contact point). Positive roll tips the foot toward +y, onto the fore
//! segment; the hind side is the mirror image.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::{Matrix4, Point3, Vector2, Vector3};

use crate::ellipse::{CompensationParams, EllipseArc};
use crate::transform::HomTransform;
use crate::{Error, Result};

/// Which part of the rollover profile carries the contact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Segment {
    Mid,
    Fore,
    Hind,
    /// Fore/hind rollover angle past the semi-major (toe) end.
    ToeRegion,
}

/// Contact state at one roll angle.
#[derive(Debug, Clone, Copy)]
pub struct ContactSolution {
    /// Maps foot-frame coordinates to contact-frame coordinates
    /// (equivalently: the pose of `O_i` expressed in `C`).
    pub foot_to_contact: HomTransform,
    /// Pose of the contact frame in the fixed frame: a pure lateral
    /// translation by the signed rollover length.
    pub contact_in_fixed: HomTransform,
    /// Signed rolled arc length from the zero-roll contact, meters.
    pub rollover_length: f64,
    pub segment: Segment,
}

/// The assembled three-segment foot with precomputed segment geometry and
/// per-arc length compensation. Immutable after construction.
#[derive(Debug, Clone)]
pub struct FootGeometry {
    pub mid: EllipseArc,
    pub fore: EllipseArc,
    /// Mirror image of the fore arc (identical axes).
    pub hind: EllipseArc,
    /// Height of the foot frame above the zero-roll contact, meters.
    pub h_foot: f64,
    /// Upper-surface width, meters.
    pub w_foot: f64,
    /// Sagittal foot length, meters.
    pub l_foot: f64,
    /// Roll angle at the mid/fore segment point S2, radians.
    pub theta_m_star: f64,
    /// Mid rollover angle at S2, radians.
    pub phi_m_star: f64,
    /// Fore rollover angle at S2, radians.
    pub phi_f_star: f64,
    /// Fore roll angle at S2 (foot roll plus the fore-axis tilt), radians.
    pub theta_f_star: f64,
    /// Distance from the fore center to S2, meters.
    pub d_f_star: f64,
    /// Distance from the foot frame to S2, meters.
    pub d0: f64,
    /// Angle of `O_i S2` from the vertical, radians.
    pub alpha6: f64,
    /// Complement of `alpha6`, radians.
    pub alpha7: f64,
    /// Angle at S3 in the triangle `O_i S2 S3`, radians.
    pub alpha8: f64,
    /// Chord `S2 S3`, meters.
    pub b_s: f64,
    /// Roll angle at which the fore rollover angle reaches `pi/2`, radians.
    pub alpha10: f64,
    /// Largest representable roll angle: the contact leaves the fore arc at
    /// the upper corner S3 beyond this (capped at `pi/2`), radians.
    pub theta_max: f64,
    pub comp_mid: CompensationParams,
    pub comp_fore: CompensationParams,
    /// Compensated mid arc length at S2, meters.
    pub l_m_star: f64,
    /// Compensated fore arc length from S2 to the toe end, meters.
    pub l_f_quarter: f64,
    /// Fore-axis tilt relative to the foot vertical, radians.
    pub(crate) delta: f64,
    /// Fore parameter angle at S2, radians.
    pub(crate) lambda_f_star: f64,
    /// Fore ellipse center in foot coordinates (y, z).
    pub(crate) fore_center: Vector2<f64>,
    /// Unit major-axis direction (toward the toe), foot coordinates.
    pub(crate) fore_u: Vector2<f64>,
    /// Unit minor-axis direction (toward S2's side of the major axis).
    pub(crate) fore_v: Vector2<f64>,
}

/// Common surface the walking loop needs from a support foot.
pub trait RollingFoot {
    fn contact(&self, theta: f64) -> Result<ContactSolution>;
    fn h_foot(&self) -> f64;
    /// Roll angles with `|theta|` at or beyond this are treated as a fall.
    fn theta_limit(&self) -> f64;
    /// Quadrature-exact signed rollover length; used to audit the zero-slip
    /// residual of the compensated model, never in the control path.
    fn exact_rollover_length(&self, theta: f64) -> Result<f64>;
}

/// Degenerate comparison geometry: a frontal-plane point contact (zero
/// rollover length at every roll angle).
#[derive(Debug, Clone, Copy)]
pub struct LineFoot {
    pub h_foot: f64,
    pub w_foot: f64,
    pub l_foot: f64,
}

impl RollingFoot for LineFoot {
    fn contact(&self, theta: f64) -> Result<ContactSolution> {
        if !theta.is_finite() || theta.abs() >= FRAC_PI_2 {
            return Err(Error::AngleOutOfRange {
                what: "roll angle",
                value: theta,
                min: -FRAC_PI_2,
                max: FRAC_PI_2,
            });
        }
        let rot = HomTransform::roll_about_x(theta);
        let t = -rot.apply_vector(&Vector3::new(0.0, 0.0, -self.h_foot));
        Ok(ContactSolution {
            foot_to_contact: HomTransform::from_parts(rot.rotation(), t),
            contact_in_fixed: HomTransform::identity(),
            rollover_length: 0.0,
            segment: Segment::Mid,
        })
    }

    fn h_foot(&self) -> f64 {
        self.h_foot
    }

    fn theta_limit(&self) -> f64 {
        FRAC_PI_2
    }

    fn exact_rollover_length(&self, _theta: f64) -> Result<f64> {
        Ok(0.0)
    }
}

fn clamp_acos(x: f64) -> f64 {
    x.clamp(-1.0, 1.0).acos()
}

fn clamp_asin(x: f64) -> f64 {
    x.clamp(-1.0, 1.0).asin()
}

/// Triangle-chain quantities shared by foot assembly and the design program.
#[derive(Debug, Clone, Copy)]
pub struct SegmentChain {
    pub phi_m_star: f64,
    pub d_m_star: f64,
    pub b_m_star: f64,
    pub alpha0_star: f64,
    pub d0: f64,
    pub alpha6: f64,
    pub alpha7: f64,
    pub l_m_star_exact: f64,
}

impl SegmentChain {
    /// Solve the triangles `O_i O_C' S2` for a mid arc, foot height and
    /// segment-point roll angle. Everything downstream of the foot width
    /// comes from [`width_chain`](Self::width_chain).
    pub fn new(mid: &EllipseArc, h_foot: f64, theta_m_star: f64) -> Result<Self> {
        if !(theta_m_star > 0.0 && theta_m_star < FRAC_PI_2) {
            return Err(Error::AngleOutOfRange {
                what: "segment-point roll angle",
                value: theta_m_star,
                min: 0.0,
                max: FRAC_PI_2,
            });
        }
        if !(h_foot > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "foot height must be positive, got {h_foot}"
            )));
        }
        let angles = mid.rollover_from_roll(theta_m_star)?;
        let phi_m_star = angles.phi;
        let d_m_star = mid.radius_at(phi_m_star);
        let b_m_star = mid.chord_length(phi_m_star);
        if b_m_star < 1e-12 {
            return Err(Error::GeometryInvariant(
                "degenerate segment chord (theta_m_star too small)".into(),
            ));
        }
        let alpha0_star = clamp_acos(
            (b_m_star * b_m_star + mid.r_b * mid.r_b - d_m_star * d_m_star)
                / (2.0 * b_m_star * mid.r_b),
        );
        let d0 =
            (h_foot * h_foot + b_m_star * b_m_star - 2.0 * h_foot * b_m_star * alpha0_star.cos())
                .sqrt();
        let alpha6 = clamp_asin(b_m_star * alpha0_star.sin() / d0);
        let alpha7 = FRAC_PI_2 - alpha6;
        let l_m_star_exact = mid.arc_length_exact(angles.lambda);
        Ok(Self {
            phi_m_star,
            d_m_star,
            b_m_star,
            alpha0_star,
            d0,
            alpha6,
            alpha7,
            l_m_star_exact,
        })
    }

    /// Chord `S2 S3` and the angle at S3 for a candidate foot width.
    pub fn width_chain(&self, w_foot: f64) -> (f64, f64) {
        let b_s = (w_foot * w_foot / 4.0 + self.d0 * self.d0
            - w_foot * self.d0 * self.alpha7.cos())
        .sqrt();
        let alpha8 = clamp_asin(self.d0 * self.alpha7.sin() / b_s);
        (b_s, alpha8)
    }
}

impl FootGeometry {
    /// Assemble and validate a foot from its mid and fore arcs. The fore arc
    /// must close the segment geometry: its tangency angle at S2 (derived
    /// from the fore-axis tilt) must place S2 at the distance demanded by
    /// the chord relation, to within 1e-6 m.
    pub fn new(
        mid: EllipseArc,
        fore: EllipseArc,
        h_foot: f64,
        w_foot: f64,
        l_foot: f64,
        theta_m_star: f64,
    ) -> Result<Self> {
        Self::with_calibration(mid, fore, h_foot, w_foot, l_foot, theta_m_star, 1024, 1.0)
    }

    #[allow(clippy::too_many_arguments)]
    pub fn with_calibration(
        mid: EllipseArc,
        fore: EllipseArc,
        h_foot: f64,
        w_foot: f64,
        l_foot: f64,
        theta_m_star: f64,
        comp_grid: usize,
        k_e: f64,
    ) -> Result<Self> {
        if !(w_foot > 0.0 && l_foot > 0.0) {
            return Err(Error::InvalidArgument(
                "foot width and length must be positive".into(),
            ));
        }
        if fore.e > mid.e + 1e-9 {
            return Err(Error::GeometryInvariant(format!(
                "fore eccentricity {} exceeds mid eccentricity {}",
                fore.e, mid.e
            )));
        }
        let chain = SegmentChain::new(&mid, h_foot, theta_m_star)?;
        if w_foot / 2.0 < chain.d0 * chain.alpha6.sin() - 1e-9 {
            return Err(Error::GeometryInvariant(format!(
                "segment point outside the half-width: w/2 = {} < {}",
                w_foot / 2.0,
                chain.d0 * chain.alpha6.sin()
            )));
        }
        let (b_s, alpha8) = chain.width_chain(w_foot);
        let delta = FRAC_PI_2 - alpha8;
        let theta_f_star = theta_m_star + delta;
        if !(theta_f_star > 0.0 && theta_f_star < FRAC_PI_2) {
            return Err(Error::GeometryInvariant(format!(
                "fore roll angle at S2 out of range: {theta_f_star}"
            )));
        }
        let phi_f_star = fore.phi_from_roll_continued(theta_f_star);
        if !(phi_f_star > 0.0 && phi_f_star < FRAC_PI_2) {
            return Err(Error::GeometryInvariant(format!(
                "fore rollover angle at S2 out of range: {phi_f_star}"
            )));
        }
        let d_f_star = fore.radius_at(phi_f_star);
        // chord relation (half of S2S3 spans the perpendicular from S2 to
        // the fore major axis)
        let closure = (b_s / 2.0 - phi_f_star.cos() * d_f_star).abs();
        if closure > 1.5e-6 {
            return Err(Error::GeometryInvariant(format!(
                "fore arc does not close the segment geometry at S2 (residual {closure:.3e} m)"
            )));
        }

        // placement of the fore ellipse in foot coordinates
        let o_m = Vector2::new(0.0, mid.r_b - h_foot);
        let s2 = o_m
            + chain.d_m_star * Vector2::new(chain.phi_m_star.sin(), -(chain.phi_m_star.cos()));
        let s3 = Vector2::new(w_foot / 2.0, 0.0);
        let m = 0.5 * (s2 + s3);
        let chord = s2 - s3;
        let fore_v = chord / chord.norm();
        let mut fore_u = Vector2::new(fore_v.y, -fore_v.x);
        if fore_u.dot(&m) < 0.0 {
            fore_u = -fore_u;
        }
        let fore_center = m - d_f_star * phi_f_star.sin() * fore_u;

        let comp_mid = mid.calibrate_compensation(comp_grid, k_e)?;
        let comp_fore = fore.calibrate_compensation(comp_grid, k_e)?;

        let mid_angles = mid.rollover_from_roll(theta_m_star)?;
        let l_m_star = mid.arc_length_compensated(&comp_mid, &mid_angles);
        let lambda_f_star = fore.lambda_of_phi(phi_f_star);
        let l_f_star = fore.compensated_length_continued(&comp_fore, phi_f_star);
        let l_f_quarter = fore.quarter_compensated(&comp_fore) - l_f_star;

        // roll angle at which the fore rollover angle reaches pi/2 (bisection)
        let phi_at = |theta: f64| fore.phi_from_roll_continued(theta + delta);
        let alpha10 = if phi_at(FRAC_PI_2) <= FRAC_PI_2 {
            FRAC_PI_2
        } else {
            let (mut lo, mut hi) = (theta_m_star, FRAC_PI_2);
            for _ in 0..200 {
                let mid_t = 0.5 * (lo + hi);
                if phi_at(mid_t) < FRAC_PI_2 {
                    lo = mid_t;
                } else {
                    hi = mid_t;
                }
                if hi - lo < 1e-13 {
                    break;
                }
            }
            0.5 * (lo + hi)
        };

        // coverage: the contact must stay on the fore arc (before S3) for
        // every representable roll angle
        let theta_s3 = PI - theta_f_star - delta;
        let theta_max = theta_s3.min(FRAC_PI_2);
        if theta_max <= theta_m_star + 1e-6 {
            return Err(Error::GeometryInvariant(format!(
                "fore arc coverage ends at roll {theta_max}, inside the mid range"
            )));
        }

        let foot = Self {
            mid,
            fore,
            hind: fore,
            h_foot,
            w_foot,
            l_foot,
            theta_m_star,
            phi_m_star: chain.phi_m_star,
            phi_f_star,
            theta_f_star,
            d_f_star,
            d0: chain.d0,
            alpha6: chain.alpha6,
            alpha7: chain.alpha7,
            alpha8,
            b_s,
            alpha10,
            theta_max,
            comp_mid,
            comp_fore,
            l_m_star,
            l_f_quarter,
            delta,
            lambda_f_star,
            fore_center,
            fore_u,
            fore_v,
        };
        foot.check_closure()?;
        Ok(foot)
    }

    /// Cross-checks among the stored values (chord and tilt relations).
    fn check_closure(&self) -> Result<()> {
        let eq21 = (self.b_s / 2.0 - self.phi_f_star.cos() * self.d_f_star).abs();
        let eq22 = (self.theta_f_star - self.theta_m_star - (FRAC_PI_2 - self.alpha8)).abs();
        if eq21 > 1.5e-6 || eq22 > 1e-9 {
            return Err(Error::GeometryInvariant(format!(
                "stored segment relations violated (chord {eq21:.2e} m, tilt {eq22:.2e} rad)"
            )));
        }
        // S3 must lie on the fore ellipse
        let s3 = self.fore_point(PI - self.phi_f_star);
        let err = (s3 - Vector2::new(self.w_foot / 2.0, 0.0)).norm();
        if err > 2e-6 {
            return Err(Error::GeometryInvariant(format!(
                "fore arc misses the upper corner S3 by {err:.2e} m"
            )));
        }
        Ok(())
    }

    /// Mid-profile point in foot coordinates at signed rollover angle
    /// (positive toward the fore side).
    pub fn mid_point(&self, phi_signed: f64) -> Vector2<f64> {
        let d = self.mid.radius_at(phi_signed.abs());
        Vector2::new(0.0, self.mid.r_b - self.h_foot)
            + d * Vector2::new(phi_signed.sin(), -(phi_signed.cos()))
    }

    /// Fore-profile point in foot coordinates at fore rollover angle
    /// `phi_f` in `[phi_f_star, pi - phi_f_star]`.
    pub fn fore_point(&self, phi_f: f64) -> Vector2<f64> {
        let d = self.fore.radius_at(phi_f);
        self.fore_center + d * (phi_f.sin() * self.fore_u + phi_f.cos() * self.fore_v)
    }

    /// Hind-profile point: the mirror of [`fore_point`](Self::fore_point).
    pub fn hind_point(&self, phi_f: f64) -> Vector2<f64> {
        let p = self.fore_point(phi_f);
        Vector2::new(-p.x, p.y)
    }

    fn check_roll(&self, theta: f64) -> Result<()> {
        if !theta.is_finite() || theta.abs() >= self.theta_max {
            return Err(Error::AngleOutOfRange {
                what: "roll angle",
                value: theta,
                min: -self.theta_max,
                max: self.theta_max,
            });
        }
        Ok(())
    }

    /// Contact solution with the roll angle routed to the owning segment.
    pub fn contact(&self, theta: f64) -> Result<ContactSolution> {
        self.check_roll(theta)?;
        if theta.abs() < self.theta_m_star {
            self.mid_contact(theta)
        } else {
            self.fore_contact(theta)
        }
    }

    /// Contact on the mid segment, `|theta| <= theta_m_star`.
    pub fn mid_contact(&self, theta: f64) -> Result<ContactSolution> {
        if theta.abs() > self.theta_m_star + 1e-12 {
            return Err(Error::AngleOutOfRange {
                what: "mid-segment roll angle",
                value: theta,
                min: -self.theta_m_star,
                max: self.theta_m_star,
            });
        }
        let s = if theta >= 0.0 { 1.0 } else { -1.0 };
        let tm = theta.abs();
        let angles = self.mid.rollover_from_roll(tm)?;
        let rot = HomTransform::roll_about_x(theta).rotation();

        let (y_ocp, z_ocp) = if angles.phi < 1e-12 {
            (0.0, 0.0)
        } else {
            let d = self.mid.radius_at(angles.phi);
            let b = self.mid.chord_length(angles.phi);
            let alpha0 = clamp_acos(
                (b * b + self.mid.r_b * self.mid.r_b - d * d) / (2.0 * b * self.mid.r_b),
            );
            let alpha1 = clamp_asin(self.mid.r_b * angles.phi.sin() / b);
            let alpha3 = PI - angles.phi_c - tm;
            let alpha4 = PI - alpha3 - alpha1;
            debug_assert!((PI - (alpha0 + alpha1 + angles.phi)).abs() < 1e-9);
            // lateral sign: the former contact point trails the new one
            (-s * b * alpha4.cos(), b * alpha4.sin())
        };
        let t_ocp_c = HomTransform::from_parts(rot, Vector3::new(0.0, y_ocp, z_ocp));
        let t_oi_c = t_ocp_c.compose(&HomTransform::translation_xyz(0.0, 0.0, self.h_foot));

        let l = self.mid.arc_length_compensated(&self.comp_mid, &angles);
        Ok(ContactSolution {
            foot_to_contact: t_oi_c,
            contact_in_fixed: HomTransform::translation_xyz(0.0, s * l, 0.0),
            rollover_length: s * l,
            segment: Segment::Mid,
        })
    }

    /// Contact on the fore (or mirrored hind) segment,
    /// `theta_m_star <= |theta| < theta_max`.
    pub fn fore_contact(&self, theta: f64) -> Result<ContactSolution> {
        self.check_roll(theta)?;
        let s = if theta >= 0.0 { 1.0 } else { -1.0 };
        let tm = theta.abs();
        if tm < self.theta_m_star - 1e-12 {
            return Err(Error::AngleOutOfRange {
                what: "fore-segment roll angle",
                value: theta,
                min: self.theta_m_star,
                max: self.theta_max,
            });
        }
        let theta_f = tm + self.delta;
        let phi_f = self.fore.phi_from_roll_continued(theta_f);

        let alpha9 = phi_f - self.phi_f_star;
        let d_f = self.fore.radius_at(phi_f);
        let b_f = (self.d_f_star * self.d_f_star + d_f * d_f
            - 2.0 * self.d_f_star * d_f * alpha9.cos())
        .sqrt();
        let alpha11 = if b_f < 1e-12 {
            0.0
        } else {
            clamp_acos(
                (self.d_f_star * self.d_f_star + b_f * b_f - d_f * d_f)
                    / (2.0 * self.d_f_star * b_f),
            )
        };
        let alpha12 = PI - self.alpha8 - self.alpha7;
        let alpha13 = alpha12 - self.phi_f_star;
        let alpha14 = alpha13 + alpha11;
        let l_oic =
            (b_f * b_f + self.d0 * self.d0 - 2.0 * b_f * self.d0 * alpha14.cos()).sqrt();
        let alpha15 = if b_f < 1e-12 {
            0.0
        } else {
            clamp_acos((self.d0 * self.d0 + l_oic * l_oic - b_f * b_f) / (2.0 * self.d0 * l_oic))
        };
        let alpha17 = FRAC_PI_2 + self.alpha6 - tm;
        let alpha18 = alpha17 + alpha15;

        let rot = HomTransform::roll_about_x(theta).rotation();
        let t = Vector3::new(0.0, s * l_oic * alpha18.cos(), l_oic * alpha18.sin());
        let t_oi_c = HomTransform::from_parts(rot, t);

        let l = self.l_m_star + self.fore_increment(phi_f);
        let segment = if phi_f > FRAC_PI_2 {
            Segment::ToeRegion
        } else if s > 0.0 {
            Segment::Fore
        } else {
            Segment::Hind
        };
        Ok(ContactSolution {
            foot_to_contact: t_oi_c,
            contact_in_fixed: HomTransform::translation_xyz(0.0, s * l, 0.0),
            rollover_length: s * l,
            segment,
        })
    }

    /// Compensated fore arc length rolled past S2 (reflection past the toe
    /// end keeps every evaluation inside the approximation's domain).
    fn fore_increment(&self, phi_f: f64) -> f64 {
        let l_star = self
            .fore
            .compensated_length_continued(&self.comp_fore, self.phi_f_star);
        self.fore.compensated_length_continued(&self.comp_fore, phi_f) - l_star
    }

    /// Signed total rollover length, piecewise over mid / fore / toe-region
    /// branches; continuous and strictly increasing in `|theta|`.
    pub fn total_rollover_length(&self, theta: f64) -> Result<f64> {
        self.check_roll(theta)?;
        let s = if theta >= 0.0 { 1.0 } else { -1.0 };
        let tm = theta.abs();
        let l = if tm < self.theta_m_star {
            let angles = self.mid.rollover_from_roll(tm)?;
            self.mid.arc_length_compensated(&self.comp_mid, &angles)
        } else {
            let phi_f = self.fore.phi_from_roll_continued(tm + self.delta);
            if tm < self.alpha10 {
                self.l_m_star + self.fore_increment(phi_f)
            } else {
                // past the toe end: quarter out, reflected remainder back
                let reflected = self
                    .fore
                    .compensated_length_continued(&self.comp_fore, PI - phi_f);
                let l_star = self
                    .fore
                    .compensated_length_continued(&self.comp_fore, self.phi_f_star);
                self.l_m_star
                    + (self.fore.quarter_compensated(&self.comp_fore) - l_star)
                    + (self.fore.quarter_compensated(&self.comp_fore) - reflected)
            }
        };
        Ok(s * l)
    }

    /// Full pose for roll / pitch / yaw: yaw about the vertical, pitch as a
    /// rigid rotation about the sagittal foot edge, then the rolling
    /// contact. Returns the foot-to-contact transform.
    pub fn full_transform(&self, roll: f64, pitch: f64, yaw: f64) -> Result<HomTransform> {
        Ok(self.full_pose(roll, pitch, yaw)?.0)
    }

    /// Foot-to-contact transform plus the contact-in-fixed companion.
    pub fn full_pose(&self, roll: f64, pitch: f64, yaw: f64) -> Result<(HomTransform, HomTransform)> {
        if !pitch.is_finite() || pitch.abs() >= FRAC_PI_2 {
            return Err(Error::AngleOutOfRange {
                what: "pitch angle",
                value: pitch,
                min: -FRAC_PI_2,
                max: FRAC_PI_2,
            });
        }
        let roll_sol = self.contact(roll)?;
        let t_pitch = if pitch == 0.0 {
            HomTransform::identity()
        } else {
            // the printed pitch matrix lacks the sin(beta) lift of a rigid
            // edge rotation and is not the identity at beta = 0; rotate
            // about the ground edge instead
            let edge = pitch.signum() * self.l_foot / 2.0;
            HomTransform::translation_xyz(edge, 0.0, 0.0)
                .compose(&HomTransform::pitch_about_y(pitch))
                .compose(&HomTransform::translation_xyz(-edge, 0.0, 0.0))
        };
        let t_yaw = HomTransform::yaw_about_z(yaw);
        let foot_to_contact = t_yaw.compose(&t_pitch).compose(&roll_sol.foot_to_contact);

        let lateral = t_yaw.apply_vector(&roll_sol.contact_in_fixed.translation());
        let contact_in_fixed = HomTransform::from_parts(nalgebra::Matrix3::identity(), lateral);
        Ok((foot_to_contact, contact_in_fixed))
    }

    /// Express body-frame COM and swing pre-contact points in the contact
    /// frame of the support foot.
    pub fn com_and_swing_in_contact(
        t: &HomTransform,
        p_com_body: &Point3<f64>,
        p_sw_body: &Point3<f64>,
    ) -> (Point3<f64>, Point3<f64>) {
        (t.apply_point(p_com_body), t.apply_point(p_sw_body))
    }

    /// Body point expressed in the fixed frame for an assembled pose.
    pub fn absolute_position(
        &self,
        roll: f64,
        pitch: f64,
        yaw: f64,
        p_body: &Point3<f64>,
    ) -> Result<Point3<f64>> {
        let (foot_to_contact, contact_in_fixed) = self.full_pose(roll, pitch, yaw)?;
        Ok(contact_in_fixed.apply_point(&foot_to_contact.apply_point(p_body)))
    }
}

impl RollingFoot for FootGeometry {
    fn contact(&self, theta: f64) -> Result<ContactSolution> {
        FootGeometry::contact(self, theta)
    }

    fn h_foot(&self) -> f64 {
        self.h_foot
    }

    fn theta_limit(&self) -> f64 {
        self.theta_max
    }

    fn exact_rollover_length(&self, theta: f64) -> Result<f64> {
        self.check_roll(theta)?;
        let s = if theta >= 0.0 { 1.0 } else { -1.0 };
        let tm = theta.abs();
        let l = if tm < self.theta_m_star {
            let angles = self.mid.rollover_from_roll(tm)?;
            self.mid.arc_length_exact(angles.lambda)
        } else {
            let mid_angles = self.mid.rollover_from_roll(self.theta_m_star)?;
            let phi_f = self.fore.phi_from_roll_continued(tm + self.delta);
            let lam_f = self.fore.lambda_of_phi(phi_f);
            self.mid.arc_length_exact(mid_angles.lambda)
                + (self.fore.arc_length_exact(lam_f)
                    - self.fore.arc_length_exact(self.lambda_f_star))
        };
        Ok(s * l)
    }
}

/// Uniformly sampled roll/pitch/yaw pose history.
#[derive(Debug, Clone)]
pub struct PoseTrajectory {
    pub t0: f64,
    pub dt: f64,
    /// `(roll, pitch, yaw)` per sample.
    pub poses: Vec<[f64; 3]>,
}

impl PoseTrajectory {
    pub fn time_at(&self, i: usize) -> f64 {
        self.t0 + self.dt * i as f64
    }
}

/// Entry-wise central finite difference of the foot-to-contact transform
/// along a pose trajectory; `t` must land on an interior sample.
pub fn transform_time_derivative(
    foot: &FootGeometry,
    traj: &PoseTrajectory,
    t: f64,
) -> Result<Matrix4<f64>> {
    if traj.poses.len() < 3 {
        return Err(Error::InvalidArgument(
            "need at least 3 pose samples for a central difference".into(),
        ));
    }
    if !(traj.dt > 0.0) {
        return Err(Error::InvalidArgument("pose sample step must be positive".into()));
    }
    let fi = (t - traj.t0) / traj.dt;
    let i = fi.round() as isize;
    if (fi - i as f64).abs() > 1e-6 {
        return Err(Error::InvalidArgument(format!(
            "t = {t} does not land on a trajectory sample"
        )));
    }
    if i < 1 || (i as usize) + 1 >= traj.poses.len() {
        return Err(Error::InvalidArgument(format!(
            "t = {t} has no bracketing samples"
        )));
    }
    let i = i as usize;
    let at = |j: usize| -> Result<Matrix4<f64>> {
        let [r, p, y] = traj.poses[j];
        Ok(foot.full_transform(r, p, y)?.0)
    };
    Ok((at(i + 1)? - at(i - 1)?) / (2.0 * traj.dt))
}
