//! Exact field elements.
//!
//! A scenario fixes one field: either the rationals or a prime field
//! `GF(p)`. Every [`Scalar`] carries enough information to know which
//! field it lives in, and mixing fields is an internal invariant violation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// The ground field of a scenario.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::P { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::P {
                value: (n as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    /// `num / den`; fails when `den` vanishes in the field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar, Error> {
        let d = self.int(den);
        let inv = d.inv().ok_or_else(|| Error::Parse(format!("zero denominator in {num}/{den}")))?;
        Ok(&self.int(num) * &inv)
    }

    /// Characteristic of the field (0 for the rationals).
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    /// Parses `"Q"` or `"GF:p"`.
    pub fn parse(s: &str) -> Result<Field, Error> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        if let Some(rest) = s.strip_prefix("GF:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime field spec {s:?}")))?;
            if !is_prime(p) {
                return Err(Error::Parse(format!("{p} is not prime")));
            }
            if p > u32::MAX as u64 {
                return Err(Error::Parse(format!("modulus {p} too large")));
            }
            return Ok(Field::Prime(p));
        }
        Err(Error::Parse(format!("unknown field {s:?}; expected \"Q\" or \"GF:p\"")))
    }

    /// Parses a scalar literal `"p"` or `"p/q"`.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar, Error> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| Error::Parse(format!("malformed scalar {s:?}")))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| Error::Parse(format!("malformed scalar {s:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        match self {
            Field::Rational => Ok(Scalar::Q(BigRational::new(num, den))),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let n = num.mod_floor(&m).to_u64().unwrap();
                let d = den.mod_floor(&m).to_u64().unwrap();
                if d == 0 {
                    return Err(Error::Parse(format!("denominator of {s:?} vanishes mod {p}")));
                }
                let a = Scalar::P { value: n, modulus: p };
                let b = Scalar::P { value: d, modulus: p };
                Ok(&a * &b.inv().unwrap())
            }
        }
    }

    /// Label used in scenario files.
    pub fn spec(self) -> String {
        match self {
            Field::Rational => "Q".to_string(),
            Field::Prime(p) => format!("GF:{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact element of a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    P { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::P { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::P { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::P { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::P { value, modulus } => Scalar::P {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn add_assign_ref(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => *a += b,
            (Scalar::P { value, modulus }, Scalar::P { value: b, modulus: m }) => {
                debug_assert_eq!(modulus, m, "mixed prime fields");
                *value = (*value + b) % *modulus;
            }
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
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

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::P { value, modulus }, Scalar::P { value: b, .. }) => Scalar::P {
                value: value * b % modulus,
                modulus: *modulus,
            },
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::P { value, modulus } => Scalar::P {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    /// Canonical text: `"p"` for integers, `"p/q"` with `q > 0` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    // BigRational keeps the denominator positive and reduced.
                    debug_assert!(q.denom().is_positive());
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::P { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_text_is_reduced() {
        let q = Field::Rational;
        assert_eq!(q.parse_scalar("4/6").unwrap().to_string(), "2/3");
        assert_eq!(q.parse_scalar("3/-6").unwrap().to_string(), "-1/2");
        assert_eq!(q.parse_scalar("-8/4").unwrap().to_string(), "-2");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(Field::Rational.parse_scalar("1/0").is_err());
        assert!(Field::Prime(5).parse_scalar("1/10").is_err());
        assert!(Field::Rational.parse_scalar("0.5").is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::Prime(5);
        let two = f.int(2);
        // 2 is a primitive fourth root of unity mod 5
        let sq = &two * &two;
        assert_eq!(sq, f.int(-1));
        assert_eq!(two.inv().unwrap(), f.int(3));
        assert_eq!(f.int(3), f.int(8));
        assert_eq!(Field::Prime(2).int(3), Field::Prime(2).int(1));
    }

    #[test]
    fn field_specs_parse() {
        assert_eq!(Field::parse("Q").unwrap(), Field::Rational);
        assert_eq!(Field::parse("GF:7").unwrap(), Field::Prime(7));
        assert!(Field::parse("GF:8").is_err());
        assert!(Field::parse("R").is_err());
    }

    proptest! {
        #[test]
        fn additive_and_multiplicative_inverses(n in -50i64..50, d in 1i64..50, p in prop::sample::select(vec![2u64, 3, 5, 7, 101])) {
            for field in [Field::Rational, Field::Prime(p)] {
                let Ok(a) = field.ratio(n, d) else { continue };
                prop_assert!((&a + &(-&a)).is_zero());
                if let Some(inv) = a.inv() {
                    prop_assert!((&a * &inv).is_one());
                } else {
                    prop_assert!(a.is_zero());
                }
            }
        }
    }
}
