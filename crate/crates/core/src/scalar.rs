//! Generic scalar abstraction for the numerical core.
//!
//! Every quantity in this crate is a plain real number, so the whole
//! library is written against a single [`Real`] trait and instantiated
//! at `f64` (the default used by the CLI and the test suites) or `f32`.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar usable throughout the crate.
///
/// The associated tolerances are the few knobs that must scale with the
/// precision of the type rather than with the problem: `f32` cannot
/// meaningfully resolve a 1e-12 relative determinant test.
pub trait Real:
    Float
    + FloatConst
    + NumAssign
    + FromPrimitive
    + Sum<Self>
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Relative tolerance below which a basis determinant counts as zero.
    const DEGENERACY_TOL: Self;
    /// Tolerance on lattice coordinates for membership / integrality tests.
    const MEMBERSHIP_TOL: Self;
    /// Relative tolerance for detecting reciprocal vectors on the cutoff
    /// sphere |K| = K0.
    const SHELL_TOL: Self;

    /// Shorthand for pulling an `f64` literal into the generic type.
    fn lossy(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal must convert into Real scalar")
    }

    /// Bessel function of the first kind, order zero.
    fn bessel_j0(self) -> Self;

    /// Bessel function of the first kind, order one.
    fn bessel_j1(self) -> Self;
}

impl Real for f64 {
    const DEGENERACY_TOL: Self = 1e-12;
    const MEMBERSHIP_TOL: Self = 1e-8;
    const SHELL_TOL: Self = 1e-10;

    fn bessel_j0(self) -> Self {
        libm::j0(self)
    }

    fn bessel_j1(self) -> Self {
        libm::j1(self)
    }
}

impl Real for f32 {
    const DEGENERACY_TOL: Self = 1e-6;
    const MEMBERSHIP_TOL: Self = 1e-4;
    const SHELL_TOL: Self = 1e-5;

    fn bessel_j0(self) -> Self {
        libm::j0(self as f64) as f32
    }

    fn bessel_j1(self) -> Self {
        libm::j1(self as f64) as f32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bessel_j0_reference_values() {
        // First zeros and a few table values of J0, 15 digits.
        assert!((0.0f64.bessel_j0() - 1.0).abs() < 1e-15);
        assert!((1.0f64.bessel_j0() - 0.765_197_686_557_966_6).abs() < 1e-14);
        assert!((2.404_825_557_695_773f64.bessel_j0()).abs() < 1e-14);
        assert!((5.520_078_110_286_311f64.bessel_j0()).abs() < 1e-13);
        assert!((10.0f64.bessel_j0() - (-0.245_935_764_451_348_34)).abs() < 1e-13);
        assert!((50.0f64.bessel_j0() - 0.055_812_327_669_251_9).abs() < 1e-13);
    }

    #[test]
    fn bessel_j1_reference_values() {
        assert!((0.0f64.bessel_j1()).abs() < 1e-15);
        assert!((1.0f64.bessel_j1() - 0.440_050_585_744_933_5).abs() < 1e-14);
        assert!((3.831_705_970_207_512f64.bessel_j1()).abs() < 1e-13);
    }

    #[test]
    fn lossy_roundtrip_f32() {
        let x: f32 = Real::lossy(0.25);
        assert_eq!(x, 0.25f32);
    }
}
