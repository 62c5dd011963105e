use std::fmt;
use std::ops::{Div, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector over the base dimensions (kg, m, s, A, K).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dimension {
    pub kg: i8,
    pub m: i8,
    pub s: i8,
    pub a: i8,
    pub k: i8,
}

impl Dimension {
    pub const fn new(kg: i8, m: i8, s: i8, a: i8, k: i8) -> Self {
        Dimension { kg, m, s, a, k }
    }

    pub const DIMENSIONLESS: Dimension = Dimension::new(0, 0, 0, 0, 0);
    pub const MASS: Dimension = Dimension::new(1, 0, 0, 0, 0);
    pub const LENGTH: Dimension = Dimension::new(0, 1, 0, 0, 0);
    pub const TIME: Dimension = Dimension::new(0, 0, 1, 0, 0);
    pub const CURRENT: Dimension = Dimension::new(0, 0, 0, 1, 0);
    pub const TEMPERATURE: Dimension = Dimension::new(0, 0, 0, 0, 1);
    pub const FREQUENCY: Dimension = Dimension::new(0, 0, -1, 0, 0);
    pub const ENERGY: Dimension = Dimension::new(1, 2, -2, 0, 0);
    pub const CHARGE: Dimension = Dimension::new(0, 0, 1, 1, 0);
    pub const RESISTANCE: Dimension = Dimension::new(1, 2, -3, -2, 0);
    pub const RESISTIVITY: Dimension = Dimension::new(1, 3, -3, -2, 0);
    pub const MAGNETIC_FIELD: Dimension = Dimension::new(1, 0, -2, -1, 0);
    pub const MAGNETIC_MOMENT: Dimension = Dimension::new(0, 2, 0, 1, 0);
    /// J·m³, the unit of the van-der-Waals coefficient.
    pub const VDW_COEFFICIENT: Dimension = Dimension::new(1, 5, -2, 0, 0);

    fn zip(self, other: Dimension, f: impl Fn(i8, i8) -> i8) -> Dimension {
        Dimension {
            kg: f(self.kg, other.kg),
            m: f(self.m, other.m),
            s: f(self.s, other.s),
            a: f(self.a, other.a),
            k: f(self.k, other.k),
        }
    }

    pub fn powi(self, n: i8) -> Dimension {
        self.zip(Dimension::DIMENSIONLESS, |x, _| x * n)
    }

    fn halved(self) -> Option<Dimension> {
        let all_even = [self.kg, self.m, self.s, self.a, self.k]
            .iter()
            .all(|e| e % 2 == 0);
        all_even.then(|| self.zip(Dimension::DIMENSIONLESS, |x, _| x / 2))
    }
}

impl Mul for Dimension {
    type Output = Dimension;
    fn mul(self, rhs: Dimension) -> Dimension {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Div for Dimension {
    type Output = Dimension;
    fn div(self, rhs: Dimension) -> Dimension {
        self.zip(rhs, |a, b| a - b)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Dimension::DIMENSIONLESS {
            return f.write_str("1");
        }
        let parts = [
            ("kg", self.kg),
            ("m", self.m),
            ("s", self.s),
            ("A", self.a),
            ("K", self.k),
        ];
        let mut first = true;
        for (sym, exp) in parts.into_iter().filter(|(_, e)| *e != 0) {
            if !first {
                f.write_str("·")?;
            }
            first = false;
            if exp == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{sym}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// A real value tagged with its SI dimension.
///
/// Multiplication and division compose dimensions; addition, subtraction and
/// comparison are checked and fail on mismatch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quantity {
    pub value: f64,
    pub dim: Dimension,
}

impl Quantity {
    pub const fn new(value: f64, dim: Dimension) -> Self {
        Quantity { value, dim }
    }

    pub const fn scalar(value: f64) -> Self {
        Quantity::new(value, Dimension::DIMENSIONLESS)
    }

    fn same_dim(&self, other: &Quantity) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    pub fn try_add(self, other: Quantity) -> Result<Quantity> {
        self.same_dim(&other)?;
        Ok(Quantity::new(self.value + other.value, self.dim))
    }

    pub fn try_sub(self, other: Quantity) -> Result<Quantity> {
        self.same_dim(&other)?;
        Ok(Quantity::new(self.value - other.value, self.dim))
    }

    pub fn try_cmp(&self, other: &Quantity) -> Result<Option<std::cmp::Ordering>> {
        self.same_dim(other)?;
        Ok(self.value.partial_cmp(&other.value))
    }

    pub fn powi(self, n: i8) -> Quantity {
        Quantity::new(self.value.powi(n as i32), self.dim.powi(n))
    }

    pub fn sqrt(self) -> Result<Quantity> {
        let dim = self.dim.halved().ok_or_else(|| {
            Error::invalid("sqrt", format!("dimension {} has odd exponents", self.dim))
        })?;
        Ok(Quantity::new(self.value.sqrt(), dim))
    }

    /// Unwraps the value after asserting the expected dimension.
    pub fn value_as(self, expected: Dimension) -> Result<f64> {
        if self.dim == expected {
            Ok(self.value)
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: expected,
            })
        }
    }
}

impl Mul for Quantity {
    type Output = Quantity;
    fn mul(self, rhs: Quantity) -> Quantity {
        Quantity::new(self.value * rhs.value, self.dim * rhs.dim)
    }
}

impl Div for Quantity {
    type Output = Quantity;
    fn div(self, rhs: Quantity) -> Quantity {
        Quantity::new(self.value / rhs.value, self.dim / rhs.dim)
    }
}

impl Mul<f64> for Quantity {
    type Output = Quantity;
    fn mul(self, rhs: f64) -> Quantity {
        Quantity::new(self.value * rhs, self.dim)
    }
}

impl Div<f64> for Quantity {
    type Output = Quantity;
    fn div(self, rhs: f64) -> Quantity {
        Quantity::new(self.value / rhs, self.dim)
    }
}
