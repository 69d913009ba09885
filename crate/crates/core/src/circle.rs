use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// An element of Q/Z, the torsion subgroup of the circle written additively.
///
/// The paper's multiplicative T-valued cochains correspond to additive
/// values here via t <-> exp(2 pi i t). Always stored reduced with
/// 0 <= num < den and gcd(num, den) = 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CircleValue {
    num: i64,
    den: i64,
}

impl CircleValue {
    pub const ZERO: CircleValue = CircleValue { num: 0, den: 1 };

    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let den128 = den as i128;
        let mut n = (num as i128).rem_euclid(den128);
        let mut d = den128;
        if d < 0 {
            // rem_euclid already forced 0 <= n < |den| only for positive den
            n = (num as i128).rem_euclid(-den128);
            d = -den128;
        }
        let g = (n.gcd(&d)).max(1);
        CircleValue {
            num: (n / g) as i64,
            den: (d / g) as i64,
        }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Multiply by an integer (the additive form of raising to a power).
    pub fn scale(&self, k: i64) -> Self {
        CircleValue::new_i128(self.num as i128 * k as i128, self.den as i128)
    }

    fn new_i128(num: i128, den: i128) -> Self {
        let n = num.rem_euclid(den);
        let g = n.gcd(&den).max(1);
        let (n, d) = (n / g, den / g);
        assert!(n <= i64::MAX as i128 && d <= i64::MAX as i128);
        CircleValue {
            num: n as i64,
            den: d as i64,
        }
    }

    /// True when the value lies in (1/m)Z/Z.
    pub fn has_modulus(&self, m: i64) -> bool {
        m % self.den == 0
    }
}

impl Add for CircleValue {
    type Output = CircleValue;
    fn add(self, rhs: CircleValue) -> CircleValue {
        let d = self.den as i128 * rhs.den as i128;
        CircleValue::new_i128(
            self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128,
            d,
        )
    }
}

impl AddAssign for CircleValue {
    fn add_assign(&mut self, rhs: CircleValue) {
        *self = *self + rhs;
    }
}

impl Sub for CircleValue {
    type Output = CircleValue;
    fn sub(self, rhs: CircleValue) -> CircleValue {
        self + (-rhs)
    }
}

impl Neg for CircleValue {
    type Output = CircleValue;
    fn neg(self) -> CircleValue {
        CircleValue::new(-self.num, self.den)
    }
}

impl Mul<i64> for CircleValue {
    type Output = CircleValue;
    fn mul(self, rhs: i64) -> CircleValue {
        self.scale(rhs)
    }
}

impl fmt::Debug for CircleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Display for CircleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_mod_one() {
        assert_eq!(CircleValue::new(5, 4), CircleValue::new(1, 4));
        assert_eq!(CircleValue::new(-1, 4), CircleValue::new(3, 4));
        assert_eq!(CircleValue::new(2, 4), CircleValue::new(1, 2));
        assert!(CircleValue::new(8, 4).is_zero());
    }

    #[test]
    fn group_laws() {
        let a = CircleValue::new(1, 6);
        let b = CircleValue::new(3, 4);
        assert_eq!(a + b, CircleValue::new(11, 12));
        assert_eq!(a - a, CircleValue::ZERO);
        assert_eq!(-b, CircleValue::new(1, 4));
        assert_eq!(b.scale(4), CircleValue::ZERO);
        assert_eq!(b.scale(-1), -b);
    }

    #[test]
    fn modulus_membership() {
        assert!(CircleValue::new(1, 2).has_modulus(4));
        assert!(!CircleValue::new(1, 3).has_modulus(4));
    }
}
