//! Rigid homogeneous transforms between the foot, fixed and contact frames.

use nalgebra::{Matrix3, Matrix4, Point3, Vector3};

/// A 4x4 homogeneous transform: orthonormal rotation block, translation
/// column, bottom row (0, 0, 0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomTransform(pub Matrix4<f64>);

impl HomTransform {
    pub fn identity() -> Self {
        Self(Matrix4::identity())
    }

    pub fn from_parts(rotation: Matrix3<f64>, translation: Vector3<f64>) -> Self {
        let mut m = Matrix4::identity();
        m.fixed_view_mut::<3, 3>(0, 0).copy_from(&rotation);
        m.fixed_view_mut::<3, 1>(0, 3).copy_from(&translation);
        Self(m)
    }

    pub fn translation_xyz(x: f64, y: f64, z: f64) -> Self {
        Self::from_parts(Matrix3::identity(), Vector3::new(x, y, z))
    }

    /// Rotation about the sagittal (x) axis; positive angle tips the frame
    /// toward +y (clockwise in the y-z plane seen from +x).
    pub fn roll_about_x(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::from_parts(
            Matrix3::new(1.0, 0.0, 0.0, 0.0, c, s, 0.0, -s, c),
            Vector3::zeros(),
        )
    }

    /// Rotation about the lateral (y) axis by the pitch angle.
    pub fn pitch_about_y(beta: f64) -> Self {
        let (s, c) = beta.sin_cos();
        Self::from_parts(
            Matrix3::new(c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c),
            Vector3::zeros(),
        )
    }

    /// Rotation about the vertical (z) axis by the yaw angle.
    pub fn yaw_about_z(gamma: f64) -> Self {
        let (s, c) = gamma.sin_cos();
        Self::from_parts(
            Matrix3::new(c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0),
            Vector3::zeros(),
        )
    }

    pub fn rotation(&self) -> Matrix3<f64> {
        self.0.fixed_view::<3, 3>(0, 0).into_owned()
    }

    pub fn translation(&self) -> Vector3<f64> {
        self.0.fixed_view::<3, 1>(0, 3).into_owned()
    }

    /// `self * rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &HomTransform) -> HomTransform {
        Self(self.0 * rhs.0)
    }

    /// Rigid inverse `(R, t) -> (R^T, -R^T t)`.
    pub fn inverse(&self) -> HomTransform {
        let r_t = self.rotation().transpose();
        Self::from_parts(r_t, -(r_t * self.translation()))
    }

    pub fn apply_point(&self, p: &Point3<f64>) -> Point3<f64> {
        Point3::from(self.rotation() * p.coords + self.translation())
    }

    pub fn apply_vector(&self, v: &Vector3<f64>) -> Vector3<f64> {
        self.rotation() * v
    }

    /// Largest deviation from rigidity: max of `|R R^T - I|` entries,
    /// `|det R - 1|`, and bottom-row error.
    pub fn rigidity_defect(&self) -> f64 {
        let r = self.rotation();
        let ortho = (r * r.transpose() - Matrix3::identity()).abs().max();
        let det = (r.determinant() - 1.0).abs();
        let bottom = (self.0.row(3) - Matrix4::identity().row(3)).abs().max();
        ortho.max(det).max(bottom)
    }

    /// Entry-wise maximum absolute difference.
    pub fn max_abs_diff(&self, other: &HomTransform) -> f64 {
        (self.0 - other.0).abs().max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_inverse_identity() {
        let t = HomTransform::roll_about_x(0.4)
            .compose(&HomTransform::translation_xyz(0.1, -0.2, 0.3))
            .compose(&HomTransform::yaw_about_z(1.1));
        let id = t.compose(&t.inverse());
        assert!(id.max_abs_diff(&HomTransform::identity()) < 1e-12);
        assert!(t.rigidity_defect() < 1e-12);
    }

    #[test]
    fn point_application() {
        let t = HomTransform::translation_xyz(1.0, 2.0, 3.0);
        let p = t.apply_point(&Point3::new(0.5, 0.0, -1.0));
        assert_eq!(p, Point3::new(1.5, 2.0, 2.0));
        let yaw = HomTransform::yaw_about_z(std::f64::consts::FRAC_PI_2);
        let q = yaw.apply_point(&Point3::new(1.0, 0.0, 0.0));
        assert!((q - Point3::new(0.0, 1.0, 0.0)).norm() < 1e-15);
    }
}
