//! Exact arithmetic in the field Q(φ), where φ is the golden ratio
//! satisfying φ² = φ + 1.
//!
//! Every value is a pair of rationals (a, b) representing a + b·φ. All
//! operations are exact; there is no floating-point constructor, so code
//! built on this type cannot silently degrade to approximate geometry.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

/// An element a + b·φ of Q(φ) with exact rational coefficients.
///
/// Rationals are kept in lowest terms with a positive denominator (the
/// `num_rational` normal form).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GoldenRational {
    a: Rational64,
    b: Rational64,
}

impl GoldenRational {
    pub fn new(a: Rational64, b: Rational64) -> Self {
        Self { a, b }
    }

    /// Integer constant a + 0·φ.
    pub fn from_int(a: i64) -> Self {
        Self::new(Rational64::from_integer(a), Rational64::zero())
    }

    /// The golden ratio φ itself.
    pub fn phi() -> Self {
        Self::new(Rational64::zero(), Rational64::one())
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// Rational part (coefficient of 1).
    pub fn rational_part(&self) -> Rational64 {
        self.a
    }

    /// Coefficient of φ.
    pub fn phi_part(&self) -> Rational64 {
        self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Field norm N(a + bφ) = a² + ab − b², the product with the
    /// conjugate a + b(1−φ). Zero only for the zero element.
    fn norm(&self) -> Rational64 {
        self.a * self.a + self.a * self.b - self.b * self.b
    }

    /// Multiplicative inverse.
    ///
    /// Panics if `self` is zero, like integer division.
    pub fn inverse(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero in Q(phi)");
        Self::new((self.a + self.b) / n, -self.b / n)
    }

    /// Serialization form `[[an, ad], [bn, bd]]` meaning (an/ad) + (bn/bd)·φ.
    pub fn to_pairs(&self) -> [[i64; 2]; 2] {
        [
            [*self.a.numer(), *self.a.denom()],
            [*self.b.numer(), *self.b.denom()],
        ]
    }
}

impl Add for GoldenRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for GoldenRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for GoldenRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for GoldenRational {
    type Output = Self;
    // (a1 + b1φ)(a2 + b2φ) = a1a2 + b1b2 + (a1b2 + a2b1 + b1b2)φ
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.a * rhs.a + self.b * rhs.b,
            self.a * rhs.b + self.b * rhs.a + self.b * rhs.b,
        )
    }
}

impl Div for GoldenRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse()
    }
}

impl fmt::Display for GoldenRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn frac(r: Rational64) -> String {
            if r.denom() == &1 {
                format!("{}", r.numer())
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        if self.b.is_zero() {
            return write!(f, "{}", frac(self.a));
        }
        let phi_term = if self.b.is_one() {
            "phi".to_string()
        } else if self.b == -Rational64::one() {
            "-phi".to_string()
        } else {
            format!("{}*phi", frac(self.b))
        };
        if self.a.is_zero() {
            write!(f, "{phi_term}")
        } else if self.b.is_negative() {
            write!(f, "{}{}", frac(self.a), phi_term.replace('-', " - "))
        } else {
            write!(f, "{} + {}", frac(self.a), phi_term)
        }
    }
}

/// A 3-vector over Q(φ).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GVec3 {
    pub x: GoldenRational,
    pub y: GoldenRational,
    pub z: GoldenRational,
}

impl GVec3 {
    pub fn new(x: GoldenRational, y: GoldenRational, z: GoldenRational) -> Self {
        Self { x, y, z }
    }

    pub fn negated(&self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.x - other.x, self.y - other.y, self.z - other.z)
    }

    pub fn dot(&self, other: &Self) -> GoldenRational {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Exact squared Euclidean distance.
    pub fn dist_sq(&self, other: &Self) -> GoldenRational {
        let d = self.sub(other);
        d.dot(&d)
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

impl fmt::Display for GVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GoldenRational {
        GoldenRational::new(Rational64::from_integer(a), Rational64::from_integer(b))
    }

    #[test]
    fn phi_squared_is_phi_plus_one() {
        let phi = GoldenRational::phi();
        assert_eq!(phi * phi, phi + GoldenRational::one());
    }

    #[test]
    fn inverse_of_phi_is_phi_minus_one() {
        let phi = GoldenRational::phi();
        assert_eq!(phi.inverse(), phi - GoldenRational::one());
        assert_eq!(phi * phi.inverse(), GoldenRational::one());
    }

    #[test]
    fn field_ops_are_exact() {
        let x = g(3, -2);
        let y = g(-1, 5);
        assert_eq!((x / y) * y, x);
        assert_eq!(x - x, GoldenRational::zero());
        assert_eq!(x + (-x), GoldenRational::zero());
        // distributivity on a concrete triple
        let z = g(7, 1);
        assert_eq!(x * (y + z), x * y + x * z);
    }

    #[test]
    fn rationals_stay_reduced() {
        let half = GoldenRational::new(Rational64::new(2, 4), Rational64::new(-3, -6));
        assert_eq!(half.to_pairs(), [[1, 2], [1, 2]]);
    }

    #[test]
    #[should_panic(expected = "division by zero")]
    fn inverse_of_zero_panics() {
        GoldenRational::zero().inverse();
    }

    #[test]
    fn vec3_negation_and_distance() {
        let phi = GoldenRational::phi();
        let v = GVec3::new(GoldenRational::zero(), GoldenRational::one(), phi);
        let w = v.negated();
        assert_eq!(w.negated(), v);
        // |v - (-v)|^2 = 4(1 + phi^2) = 4(2 + phi) = 8 + 4phi
        assert_eq!(v.dist_sq(&w), g(8, 4));
    }
}
