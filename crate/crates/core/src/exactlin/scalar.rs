//! Exact field elements: arbitrary-precision rationals or residues modulo an
//! odd prime.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field every structure map lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Field {
    Rational,
    Prime { p: u64 },
}

impl Field {
    /// The prime field `F_p`. `p` must be an odd prime below `2^32`.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::Field(
                "characteristic 2 is not supported (the constructions need 2 to be invertible)"
                    .into(),
            ));
        }
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::Field(format!("{p} is not an odd prime below 2^32")));
        }
        Ok(Field::Prime { p })
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime { p } => Scalar::Prime { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.into())),
            Field::Prime { p } => Scalar::Prime {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Parses `"p/q"`, `"-3"` or a residue, reducing into this field.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let rational = if let Some((n, d)) = text.split_once('/') {
            let n = BigInt::from_str(n.trim()).map_err(|e| Error::Parse(format!("{text:?}: {e}")))?;
            let d = BigInt::from_str(d.trim()).map_err(|e| Error::Parse(format!("{text:?}: {e}")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("{text:?}: zero denominator")));
            }
            BigRational::new(n, d)
        } else {
            let n = BigInt::from_str(text).map_err(|e| Error::Parse(format!("{text:?}: {e}")))?;
            BigRational::from_integer(n)
        };
        self.from_rational(&rational)
    }

    /// Image of a rational number in this field.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime { p } => {
                let pb = BigInt::from(p);
                let num = q.numer().mod_floor(&pb).to_u64().unwrap_or(0);
                let den = q.denom().mod_floor(&pb).to_u64().unwrap_or(0);
                if den == 0 {
                    return Err(Error::Field(format!("denominator of {q} vanishes mod {p}")));
                }
                Ok(Scalar::Prime {
                    value: mul_mod(num, inv_mod(den, p), p),
                    modulus: p,
                })
            }
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime { p } => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

/// An exact scalar. Rationals are kept in lowest terms with positive
/// denominator (guaranteed by `BigRational`); residues lie in `0..modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime { p: *modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    /// `Some(-1, 0, 1)` when the scalar is one of those small integers.
    pub fn as_small_int(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Prime { value, modulus } => {
                if *value <= modulus / 2 {
                    Some(*value as i64)
                } else {
                    Some(*value as i64 - *modulus as i64)
                }
            }
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Prime { value: (a + b) % p, modulus: *p }
            }
            _ => field_mismatch(self, other),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Prime { value: mul_mod(*a, *b, *p), modulus: *p }
            }
            _ => field_mismatch(self, other),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self.mul(&i))
    }

    /// Serialized form: `"p/q"` (or `"n"`) for rationals, the residue for `F_p`.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Rational(q) => serde_json::Value::String(q.to_string()),
            Scalar::Prime { value, .. } => serde_json::Value::from(*value),
        }
    }

    pub(crate) fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Prime { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cold]
fn field_mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("arithmetic across fields: {} vs {}", a.field(), b.field())
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_in_lowest_terms() {
        let f = Field::Rational;
        let a = f.parse("2/4").unwrap();
        assert_eq!(a.to_string(), "1/2");
        let b = f.parse("-3/-6").unwrap();
        assert_eq!(b, a);
        assert_eq!(a.add(&b), f.one());
        assert_eq!(f.parse("4/-6").unwrap().to_string(), "-2/3");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let three = f.int(3);
        assert_eq!(three.inv().unwrap(), f.int(5));
        assert_eq!(f.int(-1), f.int(6));
        assert_eq!(f.parse("1/2").unwrap(), f.int(4));
        assert_eq!(f.int(6).as_small_int(), Some(-1));
    }

    #[test]
    fn rejects_characteristic_two_and_composites() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(5).is_ok());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(Field::Rational.zero().inv().is_none());
        assert!(Field::prime(3).unwrap().zero().inv().is_none());
        assert!(Field::Rational.parse("1/0").is_err());
    }

    #[test]
    #[should_panic(expected = "across fields")]
    fn mixing_fields_panics() {
        let _ = Field::Rational.one().add(&Field::prime(3).unwrap().one());
    }
}
