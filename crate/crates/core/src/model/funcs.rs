//! Closed registry of named scalar function families.
//!
//! Model documents reference functions by name; nothing user-scripted is
//! ever evaluated. The registry covers the coefficient functions (drift,
//! diffusion, terminal map, constraint) and the driver families.

use serde::{Deserialize, Serialize};

/// Names accepted for scalar function specs, used to distinguish an
/// unknown-function error from a plain parse error.
pub const SCALAR_FUNCTION_NAMES: &[&str] = &["affine", "polynomial", "sin_affine", "exponential"];

/// Names accepted for driver function specs.
pub const DRIVER_FUNCTION_NAMES: &[&str] = &["zero", "affine_y", "affine_yz"];

/// A scalar function of one real variable drawn from the closed registry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum FuncSpec {
    /// `a*x + b`
    Affine { a: f64, b: f64 },
    /// `sum_i coeffs[i] * x^i`
    Polynomial { coeffs: Vec<f64> },
    /// `a*x + b + eps*sin(x)`
    SinAffine { a: f64, b: f64, eps: f64 },
    /// `scale * exp(rate*x)`
    Exponential { scale: f64, rate: f64 },
}

impl FuncSpec {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            FuncSpec::Affine { a, b } => a * x + b,
            FuncSpec::Polynomial { coeffs } => {
                coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
            }
            FuncSpec::SinAffine { a, b, eps } => a * x + b + eps * x.sin(),
            FuncSpec::Exponential { scale, rate } => scale * (rate * x).exp(),
        }
    }

    /// True if the function is constant in `x`.
    pub fn is_constant(&self) -> bool {
        match self {
            FuncSpec::Affine { a, .. } => *a == 0.0,
            FuncSpec::Polynomial { coeffs } => coeffs.iter().skip(1).all(|c| *c == 0.0),
            FuncSpec::SinAffine { a, eps, .. } => *a == 0.0 && *eps == 0.0,
            FuncSpec::Exponential { scale, rate } => *scale == 0.0 || *rate == 0.0,
        }
    }

    /// True if the function is affine in `x`.
    pub fn is_affine(&self) -> bool {
        match self {
            FuncSpec::Affine { .. } => true,
            FuncSpec::Polynomial { coeffs } => coeffs.iter().skip(2).all(|c| *c == 0.0),
            FuncSpec::SinAffine { eps, .. } => *eps == 0.0,
            FuncSpec::Exponential { .. } => self.is_constant(),
        }
    }

    /// `(slope, intercept)` when the function is affine.
    pub fn affine_coefficients(&self) -> Option<(f64, f64)> {
        if !self.is_affine() {
            return None;
        }
        let intercept = self.eval(0.0);
        let slope = self.eval(1.0) - intercept;
        Some((slope, intercept))
    }
}

/// Driver function families. The driver is evaluated as `F(t, x, y, z)`;
/// every registry family happens to ignore `t` and `x`, which keeps the
/// limit equation tractable for the reference solvers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum DriverFunc {
    Zero,
    /// `rho*y + c`
    AffineY { rho: f64, c: f64 },
    /// `rho*y + zeta*z + c`
    AffineYz { rho: f64, zeta: f64, c: f64 },
}

impl DriverFunc {
    pub fn eval(&self, _t: f64, _x: f64, y: f64, z: f64) -> f64 {
        match self {
            DriverFunc::Zero => 0.0,
            DriverFunc::AffineY { rho, c } => rho * y + c,
            DriverFunc::AffineYz { rho, zeta, c } => rho * y + zeta * z + c,
        }
    }

    pub fn reads_y(&self) -> bool {
        match self {
            DriverFunc::Zero => false,
            DriverFunc::AffineY { rho, .. } => *rho != 0.0,
            DriverFunc::AffineYz { rho, .. } => *rho != 0.0,
        }
    }

    pub fn reads_z(&self) -> bool {
        match self {
            DriverFunc::Zero | DriverFunc::AffineY { .. } => false,
            DriverFunc::AffineYz { zeta, .. } => *zeta != 0.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_horner_matches_direct_sum() {
        let f = FuncSpec::Polynomial {
            coeffs: vec![1.0, -2.0, 0.5, 3.0],
        };
        let x = 1.7;
        let direct = 1.0 - 2.0 * x + 0.5 * x * x + 3.0 * x * x * x;
        assert!((f.eval(x) - direct).abs() < 1e-12);
    }

    #[test]
    fn affine_coefficients_roundtrip() {
        let f = FuncSpec::Affine { a: 2.0, b: -1.0 };
        assert_eq!(f.affine_coefficients(), Some((2.0, -1.0)));
        let p = FuncSpec::Polynomial {
            coeffs: vec![3.0, 4.0],
        };
        assert_eq!(p.affine_coefficients(), Some((4.0, 3.0)));
        let s = FuncSpec::SinAffine {
            a: 1.0,
            b: 0.0,
            eps: 0.5,
        };
        assert_eq!(s.affine_coefficients(), None);
    }

    #[test]
    fn driver_families_read_declared_arguments() {
        let f = DriverFunc::AffineYz {
            rho: -0.3,
            zeta: 0.4,
            c: 0.0,
        };
        assert!(f.reads_y() && f.reads_z());
        assert!((f.eval(0.0, 5.0, 2.0, 1.0) - (-0.6 + 0.4)).abs() < 1e-15);
        assert!(!DriverFunc::Zero.reads_y());
    }
}
