//! Run configuration: one TOML file per run, sections per subcommand.
//! Unknown keys are rejected and everything is validated before any
//! computation starts.

use std::path::Path;

use serde::Deserialize;

use crate::design::DesignSpec;
use crate::ellipse::EllipseArc;
use crate::hlip::{HlipParams, WalkConfig};
use crate::{Error, Result};

#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ArcConfig {
    pub id: String,
    /// Semi-major axis, meters.
    pub r_a: f64,
    /// Semi-minor axis, meters.
    pub r_b: f64,
}

#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    /// Grid points over the roll range; at least 128.
    #[serde(default = "default_grid")]
    pub grid_n: usize,
    /// Compensation gain.
    #[serde(default = "default_k_e")]
    pub k_e: f64,
    /// Calibration grid; at least 256.
    #[serde(default = "default_calibration")]
    pub calibration_n: usize,
}

fn default_grid() -> usize {
    1024
}
fn default_k_e() -> f64 {
    1.0
}
fn default_calibration() -> usize {
    1024
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            grid_n: default_grid(),
            k_e: default_k_e(),
            calibration_n: default_calibration(),
        }
    }
}

#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct DesignConfig {
    /// Mid-arc semi-major axis, meters.
    pub mid_r_a: f64,
    /// Mid-arc semi-minor axis, meters.
    pub mid_r_b: f64,
    /// Foot-frame height, meters.
    pub h_foot: f64,
    /// Segment-point roll angle, radians.
    pub theta_m_star: f64,
    /// Nominal foot width, meters.
    pub w_foot_nominal: f64,
    /// Cost weights `[w1, w2, w3, w4]`.
    #[serde(default = "default_weights")]
    pub weights: [f64; 4],
    /// Sagittal foot length, meters.
    #[serde(default = "default_l_foot")]
    pub l_foot: f64,
}

fn default_weights() -> [f64; 4] {
    [10.0, 1.0, 1.0, 100.0]
}
fn default_l_foot() -> f64 {
    0.10
}

impl DesignConfig {
    pub fn to_spec(&self) -> Result<DesignSpec> {
        let mid = EllipseArc::new(self.mid_r_a, self.mid_r_b)?;
        let spec = DesignSpec {
            mid,
            h_foot: self.h_foot,
            theta_m_star: self.theta_m_star,
            w_foot_nominal: self.w_foot_nominal,
            weights: self.weights,
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ProfileConfig {
    /// Polyline vertices; at least 16.
    #[serde(default = "default_profile_n")]
    pub n: usize,
}

fn default_profile_n() -> usize {
    256
}

impl Default for ProfileConfig {
    fn default() -> Self {
        Self {
            n: default_profile_n(),
        }
    }
}

#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct WalkSection {
    /// "esvc" (uses the design section) or "line".
    #[serde(default = "default_foot_kind")]
    pub foot: String,
    #[serde(default)]
    pub v_des: f64,
    /// Walk duration, seconds; the step count is `floor(horizon / t_ssp)`.
    pub horizon_s: Option<f64>,
    /// Explicit step count; overrides the horizon.
    pub n_steps: Option<usize>,
    #[serde(default = "default_z0")]
    pub z0: f64,
    #[serde(default = "default_t_ssp")]
    pub t_ssp: f64,
    #[serde(default = "default_dt")]
    pub dt: f64,
    #[serde(default = "default_k_swa")]
    pub k_swa: f64,
    #[serde(default = "default_z_clear")]
    pub z_clear: f64,
    #[serde(default = "default_u_max")]
    pub u_max: f64,
    #[serde(default = "default_v_des_max")]
    pub v_des_max: f64,
    #[serde(default)]
    pub noise_std_p: f64,
    #[serde(default)]
    pub noise_std_v: f64,
    #[serde(default)]
    pub initial_offset_p: f64,
    #[serde(default)]
    pub initial_offset_v: f64,
}

fn default_foot_kind() -> String {
    "esvc".into()
}
fn default_z0() -> f64 {
    0.70
}
fn default_t_ssp() -> f64 {
    0.38
}
fn default_dt() -> f64 {
    1e-3
}
fn default_k_swa() -> f64 {
    0.3
}
fn default_z_clear() -> f64 {
    0.03
}
fn default_u_max() -> f64 {
    0.25
}
fn default_v_des_max() -> f64 {
    0.5
}

impl WalkSection {
    pub fn params(&self) -> Result<HlipParams> {
        HlipParams::new(self.z0, self.t_ssp)
    }

    pub fn walk_config(&self, seed: u64) -> Result<WalkConfig> {
        let n_steps = match (self.n_steps, self.horizon_s) {
            (Some(n), _) => n,
            (None, Some(h)) => {
                if !(h > 0.0) {
                    return Err(Error::Config {
                        key: "walk.horizon_s".into(),
                        message: "must be positive".into(),
                    });
                }
                (h / self.t_ssp).floor() as usize
            }
            (None, None) => {
                return Err(Error::Config {
                    key: "walk.n_steps".into(),
                    message: "either n_steps or horizon_s is required".into(),
                })
            }
        };
        Ok(WalkConfig {
            v_des: self.v_des,
            n_steps,
            dt: self.dt,
            k_swa: self.k_swa,
            z_clear: self.z_clear,
            u_max: self.u_max,
            v_des_max: self.v_des_max,
            noise_std: (self.noise_std_p, self.noise_std_v),
            seed,
            initial_offset: (self.initial_offset_p, self.initial_offset_v),
        })
    }
}

#[derive(Debug, Clone, Deserialize, PartialEq, Default)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    /// Output directory; the CLI flag overrides it.
    pub dir: Option<String>,
}

/// Top-level run configuration.
#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default)]
    pub output: OutputConfig,
    #[serde(default)]
    pub arcs: Vec<ArcConfig>,
    #[serde(default)]
    pub sweep: Option<SweepConfig>,
    #[serde(default)]
    pub design: Option<DesignConfig>,
    #[serde(default)]
    pub profile: Option<ProfileConfig>,
    #[serde(default)]
    pub walk: Option<WalkSection>,
    /// Default RNG seed; the CLI flag overrides it.
    #[serde(default)]
    pub seed: u64,
}

impl RunConfig {
    pub fn from_str(text: &str) -> Result<Self> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| Error::Config {
            key: e
                .span()
                .map(|s| format!("byte range {s:?}"))
                .unwrap_or_else(|| "<file>".into()),
            message: e.message().to_string(),
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_str(&text)
    }

    fn validate(&self) -> Result<()> {
        for (i, arc) in self.arcs.iter().enumerate() {
            EllipseArc::new(arc.r_a, arc.r_b).map_err(|e| Error::Config {
                key: format!("arcs[{i}]"),
                message: e.to_string(),
            })?;
        }
        if let Some(sweep) = &self.sweep {
            if sweep.grid_n < 128 {
                return Err(Error::Config {
                    key: "sweep.grid_n".into(),
                    message: format!("must be at least 128, got {}", sweep.grid_n),
                });
            }
            if sweep.calibration_n < 256 {
                return Err(Error::Config {
                    key: "sweep.calibration_n".into(),
                    message: format!("must be at least 256, got {}", sweep.calibration_n),
                });
            }
            if !(sweep.k_e > 0.0) {
                return Err(Error::Config {
                    key: "sweep.k_e".into(),
                    message: "must be positive".into(),
                });
            }
        }
        if let Some(design) = &self.design {
            design.to_spec().map_err(|e| Error::Config {
                key: "design".into(),
                message: e.to_string(),
            })?;
            if !(design.l_foot > 0.0) {
                return Err(Error::Config {
                    key: "design.l_foot".into(),
                    message: "must be positive".into(),
                });
            }
        }
        if let Some(profile) = &self.profile {
            if profile.n < 16 {
                return Err(Error::Config {
                    key: "profile.n".into(),
                    message: format!("must be at least 16, got {}", profile.n),
                });
            }
        }
        if let Some(walk) = &self.walk {
            match walk.foot.as_str() {
                "esvc" => {
                    if self.design.is_none() {
                        return Err(Error::Config {
                            key: "walk.foot".into(),
                            message: "foot = \"esvc\" needs a [design] section".into(),
                        });
                    }
                }
                "line" => {}
                other => {
                    return Err(Error::Config {
                        key: "walk.foot".into(),
                        message: format!("unknown foot kind {other:?} (expected esvc or line)"),
                    })
                }
            }
            walk.params().map_err(|e| Error::Config {
                key: "walk".into(),
                message: e.to_string(),
            })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_config() {
        let text = r#"
seed = 7

[output]
dir = "out"

[[arcs]]
id = "EA1"
r_a = 0.04575
r_b = 0.03750

[sweep]
grid_n = 1024

[design]
mid_r_a = 0.04575
mid_r_b = 0.03750
h_foot = 0.06
theta_m_star = 0.15
w_foot_nominal = 0.12

[walk]
foot = "esvc"
v_des = 0.1
horizon_s = 30.0
"#;
        let cfg = RunConfig::from_str(text).unwrap();
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.arcs.len(), 1);
        let wc = cfg.walk.as_ref().unwrap().walk_config(7).unwrap();
        assert_eq!(wc.n_steps, 78);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        assert!(RunConfig::from_str("[sweep]\nbogus_key = 1").is_err());
        assert!(RunConfig::from_str("[sweep]\ngrid_n = 64").is_err());
        assert!(RunConfig::from_str("[[arcs]]\nid=\"x\"\nr_a=0.01\nr_b=0.02").is_err());
        assert!(RunConfig::from_str("[walk]\nfoot=\"hover\"\nn_steps=1").is_err());
        // esvc walk without a design section
        assert!(RunConfig::from_str("[walk]\nfoot=\"esvc\"\nn_steps=1").is_err());
    }
}
