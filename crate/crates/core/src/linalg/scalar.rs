//! Exact scalars: residues modulo a prime, or arbitrary-precision rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Half-width of the integer window used when sampling rationals.
pub const RATIONAL_SAMPLE_RADIUS: i64 = 1 << 15;

/// The base field. Every scalar, matrix and algebra lives over exactly one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// `GF(p)`; the modulus is prime and below `2^32`.
    Prime(u64),
    Rationals,
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || p >= (1 << 32) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// Characteristic; `0` for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rationals => 0,
        }
    }

    /// Number of elements, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Prime(p) => Some(*p),
            Field::Rationals => None,
        }
    }

    /// Size of the set random scalars are drawn from.
    pub fn sample_size(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rationals => 2 * RATIONAL_SAMPLE_RADIUS as u64,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod {
                value: v.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
            Field::Rationals => Scalar::Rat(Box::new(BigRational::from_integer(BigInt::from(v)))),
        }
    }

    pub fn from_u64(&self, v: u64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod {
                value: v % p,
                modulus: *p,
            },
            Field::Rationals => Scalar::Rat(Box::new(BigRational::from_integer(BigInt::from(v)))),
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::Parse(format!("zero denominator in {num}/{den}")));
        }
        let n = self.from_i64(num);
        let d = self.from_i64(den);
        let inv = d
            .inv()
            .ok_or_else(|| Error::Parse(format!("denominator {den} vanishes in {self}")))?;
        Ok(&n * &inv)
    }

    /// Parses a decimal integer or a `num/den` string.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let bad = || Error::Parse(format!("malformed scalar {s:?}"));
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        match self {
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &pb) + &pb) % &pb;
                    r.to_string().parse().expect("residue fits in u64")
                };
                let n = Scalar::Mod {
                    value: reduce(&num),
                    modulus: *p,
                };
                let d = Scalar::Mod {
                    value: reduce(&den),
                    modulus: *p,
                };
                let inv = d
                    .inv()
                    .ok_or_else(|| Error::Parse(format!("denominator of {s:?} vanishes mod {p}")))?;
                Ok(&n * &inv)
            }
            Field::Rationals => Ok(Scalar::Rat(Box::new(BigRational::new(num, den)))),
        }
    }

    /// Uniform element of `GF(p)`, or an integer in
    /// `[-RATIONAL_SAMPLE_RADIUS, RATIONAL_SAMPLE_RADIUS)` for the rationals.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod {
                value: rng.gen_range(0..*p),
                modulus: *p,
            },
            Field::Rationals => {
                self.from_i64(rng.gen_range(-RATIONAL_SAMPLE_RADIUS..RATIONAL_SAMPLE_RADIUS))
            }
        }
    }

    /// All field elements, for finite fields.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Prime(p) => Some((0..*p).map(|v| self.from_u64(v)).collect()),
            Field::Rationals => None,
        }
    }

    /// A primitive `n`-th root of unity (the smallest residue with that
    /// property), if the field has one.
    pub fn primitive_root_of_unity(&self, n: u64) -> Option<Scalar> {
        match self {
            Field::Prime(p) => {
                if n == 0 || (p - 1) % n != 0 {
                    return None;
                }
                (1..*p)
                    .map(|v| self.from_u64(v))
                    .find(|z| z.pow(n).is_one() && (1..n).all(|k| !z.pow(k).is_one()))
            }
            Field::Rationals => match n {
                1 => Some(self.one()),
                2 => Some(self.from_i64(-1)),
                _ => None,
            },
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rationals => write!(f, "Q"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Residues are kept in `[0, p)`; rationals are kept
/// in lowest terms with positive denominator (guaranteed by `BigRational`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { value: u64, modulus: u64 },
    Rat(Box<BigRational>),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
            Scalar::Rat(_) => Field::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
            Scalar::Rat(r) => Scalar::Rat(Box::new(r.recip())),
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Residue for prime-field scalars.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Mod { value, .. } => Some(*value),
            Scalar::Rat(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }

    /// Canonical string form: the residue, or `num/den`.
    pub fn encode(&self) -> String {
        match self {
            Scalar::Mod { value, .. } => value.to_string(),
            Scalar::Rat(r) => format!("{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { value, .. } => write!(f, "{value}"),
            Scalar::Rat(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // Extended Euclid on signed values; p < 2^32 so everything fits in i64.
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "{a} is not invertible mod {p}");
    t0.rem_euclid(p as i64) as u64
}

#[track_caller]
fn same_modulus(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "scalars from different prime fields");
    a
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Mod { value: (a + b) % p, modulus: p }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(a.as_ref() + b.as_ref())),
            _ => panic!("scalars from different fields"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Mod { value: (a + p - b) % p, modulus: p }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(a.as_ref() - b.as_ref())),
            _ => panic!("scalars from different fields"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Mod { value: a * b % p, modulus: p }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(a.as_ref() * b.as_ref())),
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
            Scalar::Rat(r) => Scalar::Rat(Box::new(-r.as_ref())),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
