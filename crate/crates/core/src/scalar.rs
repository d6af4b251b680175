//! Exact scalars: prime fields, the rationals and the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient domain of every module in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ScalarDomain {
    /// Integers modulo a prime `p`.
    PrimeField(u32),
    Rationals,
    Integers,
}

impl ScalarDomain {
    pub fn prime_field(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(ScalarDomain::PrimeField(p))
    }

    /// Parses the short codes used by the CLI and ring files: `f2`, `f3`, `f5`, `fP`, `q`, `z`.
    pub fn parse(code: &str) -> Result<Self> {
        match code {
            "q" | "Q" => Ok(ScalarDomain::Rationals),
            "z" | "Z" => Ok(ScalarDomain::Integers),
            s if s.starts_with('f') || s.starts_with('F') => {
                let p: u32 = s[1..]
                    .parse()
                    .map_err(|_| Error::UnknownScalar(code.to_string()))?;
                Self::prime_field(p)
            }
            _ => Err(Error::UnknownScalar(code.to_string())),
        }
    }

    pub fn code(&self) -> String {
        match self {
            ScalarDomain::PrimeField(p) => format!("f{p}"),
            ScalarDomain::Rationals => "q".to_string(),
            ScalarDomain::Integers => "z".to_string(),
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, ScalarDomain::Integers)
    }

    /// 0 for `Q` and `Z`.
    pub fn characteristic(&self) -> u32 {
        match self {
            ScalarDomain::PrimeField(p) => *p,
            _ => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            ScalarDomain::PrimeField(p) => Scalar::Mod {
                value: v.rem_euclid(p as i64) as u32,
                p,
            },
            ScalarDomain::Rationals => Scalar::Rational(BigRational::from_integer(v.into())),
            ScalarDomain::Integers => Scalar::Integer(v.into()),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match *self {
            ScalarDomain::PrimeField(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Mod {
                    value: r.to_u32().expect("residue fits"),
                    p,
                }
            }
            ScalarDomain::Rationals => Scalar::Rational(BigRational::from_integer(v.clone())),
            ScalarDomain::Integers => Scalar::Integer(v.clone()),
        }
    }

    /// Maps a rational into the domain; `None` when the value is not representable
    /// (a non-integer over `Z`, or a denominator divisible by `p`).
    pub fn from_rational(&self, v: &BigRational) -> Option<Scalar> {
        match *self {
            ScalarDomain::Rationals => Some(Scalar::Rational(v.clone())),
            ScalarDomain::Integers => v.is_integer().then(|| Scalar::Integer(v.to_integer())),
            ScalarDomain::PrimeField(_) => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                den.inverse().map(|d| num * d)
            }
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (ScalarDomain::PrimeField(p), Scalar::Mod { value, p: q }) => p == q && value < p,
            (ScalarDomain::Rationals, Scalar::Rational(_)) => true,
            (ScalarDomain::Integers, Scalar::Integer(_)) => true,
            _ => false,
        }
    }
}

impl fmt::Display for ScalarDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarDomain::PrimeField(p) => write!(f, "F{p}"),
            ScalarDomain::Rationals => write!(f, "Q"),
            ScalarDomain::Integers => write!(f, "Z"),
        }
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact scalar tagged with its domain. Mixing domains in one operation is a bug
/// and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { value: u32, p: u32 },
    Rational(BigRational),
    Integer(BigInt),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Integer(i) => i.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Rational(r) => r.is_one(),
            Scalar::Integer(i) => i.is_one(),
        }
    }

    pub fn domain(&self) -> ScalarDomain {
        match self {
            Scalar::Mod { p, .. } => ScalarDomain::PrimeField(*p),
            Scalar::Rational(_) => ScalarDomain::Rationals,
            Scalar::Integer(_) => ScalarDomain::Integers,
        }
    }

    /// Multiplicative inverse; over `Z` only the units have one.
    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Mod { value, p } => {
                if *value == 0 {
                    return None;
                }
                Some(Scalar::Mod {
                    value: pow_mod(*value as u64, (*p - 2) as u64, *p as u64) as u32,
                    p: *p,
                })
            }
            Scalar::Rational(r) => (!r.is_zero()).then(|| Scalar::Rational(r.recip())),
            Scalar::Integer(i) => {
                if i.abs().is_one() {
                    Some(Scalar::Integer(i.clone()))
                } else {
                    None
                }
            }
        }
    }

    /// Integer value; panics for non-integer scalars.
    pub fn as_bigint(&self) -> BigInt {
        match self {
            Scalar::Integer(i) => i.clone(),
            Scalar::Mod { value, .. } => BigInt::from(*value),
            Scalar::Rational(r) => {
                assert!(r.is_integer(), "non-integral rational {r}");
                r.to_integer()
            }
        }
    }

    pub fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Integer(i) => BigRational::from_integer(i.clone()),
            Scalar::Mod { value, .. } => BigRational::from_integer(BigInt::from(*value)),
            Scalar::Rational(r) => r.clone(),
        }
    }

    /// Exact quotient `self / other` if it exists in the domain.
    pub fn checked_div(&self, other: &Scalar) -> Option<Scalar> {
        match (self, other) {
            (Scalar::Integer(a), Scalar::Integer(b)) => {
                if b.is_zero() {
                    return None;
                }
                let (q, r) = a.div_rem(b);
                r.is_zero().then_some(Scalar::Integer(q))
            }
            _ => other.inverse().map(|inv| self * &inv),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Integer(i) => i.is_negative(),
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Mod { .. } => false,
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { value, .. } => write!(f, "{value}"),
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Integer(i) => write!(f, "{i}"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $modop:expr, $op:tt) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) => {
                        debug_assert_eq!(p, q);
                        let f: fn(u64, u64, u64) -> u64 = $modop;
                        Scalar::Mod { value: f(*a as u64, *b as u64, *p as u64) as u32, p: *p }
                    }
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a $op b),
                    (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a $op b),
                    (a, b) => panic!("scalar domain mismatch: {:?} vs {:?}", a.domain(), b.domain()),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |a, b, p| (a + b) % p, +);
binop!(Sub, sub, |a, b, p| (a + p - b) % p, -);
binop!(Mul, mul, |a, b, p| a * b % p, *);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod { value, p } => Scalar::Mod {
                value: (p - value) % p,
                p: *p,
            },
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Integer(i) => Scalar::Integer(-i),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_codes() {
        assert_eq!(
            ScalarDomain::parse("f2").unwrap(),
            ScalarDomain::PrimeField(2)
        );
        assert_eq!(ScalarDomain::parse("q").unwrap(), ScalarDomain::Rationals);
        assert_eq!(ScalarDomain::parse("z").unwrap(), ScalarDomain::Integers);
        assert!(ScalarDomain::parse("f4").is_err());
        assert!(ScalarDomain::parse("r").is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = ScalarDomain::PrimeField(5);
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(&a + &b, f.from_i64(2));
        assert_eq!(&a - &b, f.from_i64(4));
        assert_eq!(&a * &b, f.from_i64(2));
        assert_eq!(-&a, f.from_i64(2));
        assert_eq!(&a * &a.inverse().unwrap(), f.one());
        assert!(f.zero().inverse().is_none());
    }

    #[test]
    fn integer_division_is_exact_only() {
        let z = ScalarDomain::Integers;
        assert_eq!(
            z.from_i64(6).checked_div(&z.from_i64(3)),
            Some(z.from_i64(2))
        );
        assert_eq!(z.from_i64(6).checked_div(&z.from_i64(4)), None);
        assert!(z.from_i64(2).inverse().is_none());
        assert_eq!(z.from_i64(-1).inverse(), Some(z.from_i64(-1)));
    }

    #[test]
    fn rationals_map_into_prime_fields() {
        let f3 = ScalarDomain::PrimeField(3);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f3.from_rational(&half), Some(f3.from_i64(2)));
        let third = BigRational::new(1.into(), 3.into());
        assert_eq!(f3.from_rational(&third), None);
        assert_eq!(ScalarDomain::Integers.from_rational(&half), None);
    }
}
