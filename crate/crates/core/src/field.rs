//! Exact scalars: rationals or a prime field F_p.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default prime for the finite-field mode.
pub const DEFAULT_PRIME: u32 = 32003;

/// The ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u32),
}

impl Field {
    pub fn zero(self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::F(0, p),
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::F(v.rem_euclid(p as i64) as u32, p),
        }
    }

    /// Maps a rational into the field; fails if the denominator vanishes mod p.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rationals => Ok(Scalar::Q(q.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let num = q.numer().mod_floor(&pb).to_u32().unwrap();
                let den = q.denom().mod_floor(&pb).to_u32().unwrap();
                if den == 0 {
                    return Err(Error::NotRepresentable(q.to_string()));
                }
                Ok(Scalar::F(num, p).mul_ref(&Scalar::F(den, p).inv()))
            }
        }
    }

    /// Parses `p/q`, `p` or a decimal-free integer.
    pub fn parse(self, s: &str) -> Result<Scalar> {
        self.from_rational(&parse_rational(s)?)
    }

    /// Number of elements, `None` for the rationals.
    pub fn size(self) -> Option<u32> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(p),
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    /// `Q`, `Fp` (the default prime) or `Fp:<p>`.
    fn from_str(s: &str) -> Result<Field> {
        match s.split(':').collect::<Vec<_>>().as_slice() {
            ["Q"] => Ok(Field::Rationals),
            ["Fp"] => Ok(Field::Prime(DEFAULT_PRIME)),
            ["Fp", p] => {
                let p: u32 = p.parse().map_err(|_| Error::NotRepresentable(s.to_string()))?;
                if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) {
                    return Err(Error::FieldMismatch(format!("{p} is not prime")));
                }
                Ok(Field::Prime(p))
            }
            _ => Err(Error::FieldMismatch(format!("unknown field `{s}`, expected Q or Fp:<p>"))),
        }
    }
}

/// Parses a rational number written `p/q` or `p`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::NotRepresentable(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// An element of a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    /// value, modulus
    F(u32, u32),
}

fn mismatch() -> ! {
    panic!("scalars from different fields were combined")
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rationals,
            Scalar::F(_, p) => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::F(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::F(v, _) => *v == 1,
        }
    }

    pub fn add_ref(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::F(a, p), Scalar::F(b, q)) if p == q => {
                Scalar::F(((*a as u64 + *b as u64) % *p as u64) as u32, *p)
            }
            _ => mismatch(),
        }
    }

    pub fn sub_ref(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::F(a, p), Scalar::F(b, q)) if p == q => {
                Scalar::F(((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32, *p)
            }
            _ => mismatch(),
        }
    }

    pub fn mul_ref(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::F(a, p), Scalar::F(b, q)) if p == q => {
                Scalar::F(((*a as u64 * *b as u64) % *p as u64) as u32, *p)
            }
            _ => mismatch(),
        }
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::F(a, p) => Scalar::F((*p - *a) % *p, *p),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::F(a, p) => {
                let (mut t, mut nt) = (0i64, 1i64);
                let (mut r, mut nr) = (*p as i64, *a as i64);
                while nr != 0 {
                    let q = r / nr;
                    (t, nt) = (nt, t - q * nt);
                    (r, nr) = (nr, r - q * nr);
                }
                Scalar::F(t.rem_euclid(*p as i64) as u32, *p)
            }
        }
    }

    pub fn div_ref(&self, o: &Scalar) -> Scalar {
        self.mul_ref(&o.inv())
    }

    /// The value as a rational (residues are read as integers in `0..p`).
    pub fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Q(q) => q.clone(),
            Scalar::F(v, _) => BigRational::from_integer(BigInt::from(*v)),
        }
    }

    /// Integer value when the scalar is a rational integer fitting in i64.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Q(_) => None,
            Scalar::F(v, _) => Some(*v as i64),
        }
    }

    /// Canonical text: `p/q` over the rationals, the residue over F_p.
    pub fn to_canonical(&self) -> String {
        match self {
            Scalar::Q(q) => format!("{}/{}", q.numer(), q.denom()),
            Scalar::F(v, _) => v.to_string(),
        }
    }

    /// Shortest text: integers without a denominator.
    pub fn to_short(&self) -> String {
        match self {
            Scalar::Q(q) if q.is_integer() => q.numer().to_string(),
            _ => self.to_canonical(),
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Q(q) if q.is_negative())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_short())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $impl:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$impl(o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$impl(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$impl(o)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);
binop!(Div, div, div_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_inverse() {
        let f = Field::Prime(7);
        for v in 1..7 {
            let x = f.from_i64(v);
            assert!((&x * &x.inv()).is_one());
        }
    }

    #[test]
    fn parse_and_print() {
        let q = Field::Rationals.parse("-6/4").unwrap();
        assert_eq!(q.to_canonical(), "-3/2");
        assert_eq!(Field::Rationals.parse("5").unwrap().to_short(), "5");
        assert_eq!(Field::Prime(5).parse("1/2").unwrap(), Scalar::F(3, 5));
        assert!(Field::Prime(5).parse("1/5").is_err());
    }
}
