//! Exact-or-approximate scalar values and the comparison policy applied to them.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use serde::{Serialize, Serializer};

use crate::rational::ExactRational;

/// Relative tolerance for comparisons involving a floating-point operand.
/// Two values count as equal when `|a - b| <= TOLERANCE * max(1, |b|)`.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Clone, PartialEq)]
pub enum Scalar {
    Exact(ExactRational),
    Approx(f64),
}

impl Scalar {
    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64(),
            Scalar::Approx(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&ExactRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Approx(_) => None,
        }
    }

    /// Exact ordering when both sides are rational; otherwise values within
    /// [`TOLERANCE`] of `other` compare equal.
    pub fn compare(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.cmp(b),
            _ => {
                let (a, b) = (self.to_f64(), other.to_f64());
                if (a - b).abs() <= TOLERANCE * b.abs().max(1.0) {
                    Ordering::Equal
                } else if a < b {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    /// `self^exp`, exact when the base is exact and `exp` an integer.
    pub fn pow(&self, exp: f64) -> Scalar {
        match (self, crate::indices::integral_exponent(exp)) {
            (Scalar::Exact(r), Some(k)) => match r.pow(k) {
                Ok(v) => Scalar::Exact(v),
                Err(_) => Scalar::Approx(f64::INFINITY),
            },
            _ => Scalar::Approx(self.to_f64().powf(exp)),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.$method(b)),
                    (a, b) => Scalar::Approx(a.to_f64().$method(b.to_f64())),
                }
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

/// Exact division by zero falls back to IEEE semantics.
impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) if !b.is_zero() => Scalar::Exact(a / b),
            (a, b) => Scalar::Approx(a.to_f64() / b.to_f64()),
        }
    }
}

impl From<ExactRational> for Scalar {
    fn from(r: ExactRational) -> Self {
        Scalar::Exact(r)
    }
}

impl From<f64> for Scalar {
    fn from(x: f64) -> Self {
        Scalar::Approx(x)
    }
}

/// Exact values render as `p/q`; approximate values as a decimal with twelve
/// significant digits.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Approx(x) => f.write_str(&format_decimal(*x)),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "Exact({r})"),
            Scalar::Approx(x) => write!(f, "Approx({x})"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Fixed-point rendering with 12 significant digits.
pub fn format_decimal(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return format!("{:.11}", 0.0);
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}
