//! Exact field scalars: rationals (characteristic 0) and prime fields GF(p).
//!
//! Every computation in this crate is exact; there is no floating point
//! anywhere. A `Field` is a characteristic tag used to construct scalars,
//! and a `Scalar` carries its own field so mixed-field arithmetic is caught
//! immediately.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field: `Q` when the characteristic is 0, otherwise GF(p).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, serde::Serialize)]
pub struct Field {
    characteristic: u32,
}

impl Field {
    pub fn rational() -> Field {
        Field { characteristic: 0 }
    }

    pub fn prime(p: u32) -> Result<Field> {
        if is_prime(p) {
            Ok(Field { characteristic: p })
        } else {
            Err(Error::BadCharacteristic(p))
        }
    }

    pub fn new(characteristic: u32) -> Result<Field> {
        if characteristic == 0 {
            Ok(Field::rational())
        } else {
            Field::prime(characteristic)
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rational(BigRational::from(BigInt::from(n))),
            p => {
                let m = n.rem_euclid(p as i64) as u64;
                Scalar::Modular { p, value: m }
            }
        }
    }

    /// Scalar from a fraction; the denominator must be invertible.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        let inv = d
            .inv()
            .ok_or_else(|| Error::Internal(format!("division by zero: {num}/{den}")))?;
        Ok(self.from_i64(num).mul(&inv))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "GF({p})"),
        }
    }
}

/// An exact element of Q or of GF(p).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Modular { p: u32, value: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::rational(),
            Scalar::Modular { p, .. } => Field { characteristic: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { p, value: a }, Scalar::Modular { p: q, value: b }) => {
                assert_eq!(p, q, "mixed-field arithmetic");
                Scalar::Modular {
                    p: *p,
                    value: ((*a as u128 + *b as u128) % (*p as u128)) as u64,
                }
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { p, value: a }, Scalar::Modular { p: q, value: b }) => {
                assert_eq!(p, q, "mixed-field arithmetic");
                Scalar::Modular {
                    p: *p,
                    value: ((*a as u128 * *b as u128) % (*p as u128)) as u64,
                }
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { p, value } => Scalar::Modular {
                p: *p,
                value: if *value == 0 { 0 } else { *p as u64 - *value },
            },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(a.recip()))
                }
            }
            Scalar::Modular { p, value } => {
                if *value == 0 {
                    None
                } else {
                    Some(Scalar::Modular {
                        p: *p,
                        value: mod_inv(*value, *p as u64),
                    })
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self.mul(&i))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.is_negative() {
                    write!(f, "-{}/{}", r.numer().abs(), r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Inverse of `a` modulo prime `m` by the extended Euclidean algorithm.
fn mod_inv(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "not invertible");
    old_s.rem_euclid(m as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = Field::rational();
        let a = f.from_ratio(1, 3).unwrap();
        let b = f.from_ratio(2, 3).unwrap();
        assert!(a.add(&b).is_one());
        assert!(a.add(&a.neg()).is_zero());
        assert!(a.mul(&a.inv().unwrap()).is_one());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(5).unwrap();
        let a = f.from_i64(3);
        assert_eq!(a.add(&a), f.from_i64(1));
        assert_eq!(a.mul(&a.inv().unwrap()), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(4));
        assert!(f.from_i64(10).is_zero());
    }

    #[test]
    fn characteristic_must_be_prime() {
        assert!(Field::new(4).is_err());
        assert!(Field::new(1).is_err());
        assert!(Field::new(0).is_ok());
        assert!(Field::new(2).is_ok());
        assert!(Field::new(31).is_ok());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(Field::rational().zero().inv().is_none());
        assert!(Field::prime(7).unwrap().zero().inv().is_none());
    }

    #[test]
    fn display_forms() {
        let f = Field::rational();
        assert_eq!(f.from_ratio(-1, 2).unwrap().to_string(), "-1/2");
        assert_eq!(f.from_i64(7).to_string(), "7");
        let g = Field::prime(3).unwrap();
        assert_eq!(g.from_i64(-1).to_string(), "2");
    }
}
