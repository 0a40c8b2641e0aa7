//! Exact scalars: rationals and residues modulo an odd prime.
//!
//! A [`Scalar`] carries its own field tag. Rational values act as field-free
//! literals: combining one with a residue reduces it modulo that prime, so
//! `Scalar::one()` works in every field.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub enum Scalar {
    /// Reduced fraction with positive denominator.
    Small(i64, i64),
    /// Only used when the value does not fit `Small`.
    Big(Box<BigRational>),
    /// Residue and modulus.
    Mod(u64, u64),
}

/// The coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn from_i128(num: i128, den: i128) -> Scalar {
    debug_assert!(den != 0);
    let g = gcd_i128(num, den);
    let (mut n, mut d) = if g > 1 { (num / g, den / g) } else { (num, den) };
    if d < 0 {
        n = -n;
        d = -d;
    }
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) => Scalar::Small(n, d),
        _ => Scalar::Big(Box::new(BigRational::new(BigInt::from(n), BigInt::from(d)))),
    }
}

fn from_big(r: BigRational) -> Scalar {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(n), Some(d)) => Scalar::Small(n, d),
        _ => Scalar::Big(Box::new(r)),
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn big_mod(n: &BigInt, p: u64) -> u64 {
    let m = n.mod_floor(&BigInt::from(p));
    m.to_u64().expect("residue fits u64")
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Small(0, 1)
    }

    pub fn one() -> Self {
        Scalar::Small(1, 1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Small(n, 1)
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        from_i128(n as i128, d as i128)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Small(n, _) => *n == 0,
            Scalar::Big(r) => r.is_zero(),
            Scalar::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Small(n, d) => *n == 1 && *d == 1,
            Scalar::Big(r) => r.is_one(),
            Scalar::Mod(v, p) => *v == 1 % *p,
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Scalar::Small(n, d) => BigRational::new(BigInt::from(*n), BigInt::from(*d)),
            Scalar::Big(r) => (**r).clone(),
            Scalar::Mod(..) => unreachable!("residue used as rational"),
        }
    }

    /// Reduce modulo `p`. Panics if the denominator vanishes mod `p`.
    pub fn reduce_mod(&self, p: u64) -> Scalar {
        match self {
            Scalar::Mod(_, q) => {
                assert_eq!(p, *q, "mixing residues of different primes");
                self.clone()
            }
            Scalar::Small(n, d) => {
                let nn = (*n as i128).rem_euclid(p as i128) as u64;
                let dd = (*d as i128).rem_euclid(p as i128) as u64;
                assert!(dd != 0, "denominator {d} vanishes modulo {p}");
                Scalar::Mod(
                    ((nn as u128 * pow_mod(dd, p - 2, p) as u128) % p as u128) as u64,
                    p,
                )
            }
            Scalar::Big(r) => {
                let nn = big_mod(r.numer(), p);
                let dd = big_mod(r.denom(), p);
                assert!(dd != 0, "denominator vanishes modulo {p}");
                Scalar::Mod(
                    ((nn as u128 * pow_mod(dd, p - 2, p) as u128) % p as u128) as u64,
                    p,
                )
            }
        }
    }

    fn modulus(&self) -> Option<u64> {
        match self {
            Scalar::Mod(_, p) => Some(*p),
            _ => None,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Small(n, d) => from_i128(*d as i128, *n as i128),
            Scalar::Big(r) => from_big(r.recip()),
            Scalar::Mod(v, p) => Scalar::Mod(pow_mod(*v, p - 2, *p), *p),
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut acc = Scalar::one();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    /// Express the value in the canonical form of `field`.
    pub fn in_field(&self, field: Field) -> Scalar {
        match field {
            Field::Rational => {
                assert!(self.modulus().is_none(), "residue used as rational");
                self.clone()
            }
            Field::Prime(p) => self.reduce_mod(p),
        }
    }

    fn add_impl(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    return from_i128(*a as i128 + *c as i128, 1);
                }
                from_i128(
                    *a as i128 * *d as i128 + *c as i128 * *b as i128,
                    *b as i128 * *d as i128,
                )
            }
            (Scalar::Mod(a, p), Scalar::Mod(b, q)) => {
                assert_eq!(p, q, "mixing residues of different primes");
                Scalar::Mod(((*a as u128 + *b as u128) % *p as u128) as u64, *p)
            }
            (Scalar::Mod(_, p), x) | (x, Scalar::Mod(_, p)) => {
                let p = *p;
                let y = if self.modulus().is_some() { self } else { o };
                y.add_impl(&x.reduce_mod(p))
            }
            _ => from_big(self.to_big() + o.to_big()),
        }
    }

    fn mul_impl(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    return from_i128(*a as i128 * *c as i128, 1);
                }
                from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            (Scalar::Mod(a, p), Scalar::Mod(b, q)) => {
                assert_eq!(p, q, "mixing residues of different primes");
                Scalar::Mod(((*a as u128 * *b as u128) % *p as u128) as u64, *p)
            }
            (Scalar::Mod(_, p), x) | (x, Scalar::Mod(_, p)) => {
                let p = *p;
                let y = if self.modulus().is_some() { self } else { o };
                y.mul_impl(&x.reduce_mod(p))
            }
            _ => from_big(self.to_big() * o.to_big()),
        }
    }

    fn neg_impl(&self) -> Scalar {
        match self {
            Scalar::Small(n, d) => from_i128(-(*n as i128), *d as i128),
            Scalar::Big(r) => from_big(-(**r).clone()),
            Scalar::Mod(v, p) => Scalar::Mod(if *v == 0 { 0 } else { p - v }, *p),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, o: &Scalar) -> bool {
        match (self, o) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => a == c && b == d,
            (Scalar::Mod(a, p), Scalar::Mod(b, q)) => a == b && p == q,
            (Scalar::Mod(a, p), x) | (x, Scalar::Mod(a, p)) => match x.reduce_mod(*p) {
                Scalar::Mod(b, _) => *a == b,
                _ => unreachable!(),
            },
            (Scalar::Big(a), Scalar::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(n, 1) => write!(f, "{n}"),
            Scalar::Small(n, d) => write!(f, "{n}/{d}"),
            Scalar::Big(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod(v, _) => write!(f, "{v}"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: &'a Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &'a Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add_impl(b));
binop!(Sub, sub, |a, b| a.add_impl(&b.neg_impl()));
binop!(Mul, mul, |a, b| a.mul_impl(b));
binop!(Div, div, |a, b| a.mul_impl(&b.inv().expect("division by zero")));

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_impl()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_impl()
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    /// Reject non-primes and characteristic 2.
    pub fn validate(&self) -> Result<()> {
        match self {
            Field::Rational => Ok(()),
            Field::Prime(2) => Err(Error::Characteristic2),
            Field::Prime(p) if !is_prime(*p) => {
                Err(Error::InvalidInput(format!("{p} is not prime")))
            }
            Field::Prime(p) if *p > u32::MAX as u64 => {
                Err(Error::InvalidInput(format!("prime {p} too large")))
            }
            Field::Prime(_) => Ok(()),
        }
    }

    pub fn int(&self, n: i64) -> Scalar {
        Scalar::from_int(n).in_field(*self)
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    /// Parse an integer or a `p/q` fraction.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let t = s.trim();
        let bad = || Error::InvalidInput(format!("bad scalar literal `{s}`"));
        let value = match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                from_big(BigRational::new(n, d))
            }
            None => {
                let n: BigInt = t.parse().map_err(|_| bad())?;
                from_big(BigRational::from_integer(n))
            }
        };
        if let Field::Prime(p) = self {
            let den_ok = match &value {
                Scalar::Small(_, d) => (*d as i128).rem_euclid(*p as i128) != 0,
                Scalar::Big(r) => big_mod(r.denom(), *p) != 0,
                Scalar::Mod(..) => true,
            };
            if !den_ok {
                return Err(Error::InvalidInput(format!(
                    "denominator of `{s}` vanishes modulo {p}"
                )));
            }
        }
        Ok(value.in_field(*self))
    }

    /// `gf:7` or `rational`.
    pub fn from_spec(s: &str) -> Result<Field> {
        let f = if s == "rational" || s == "Q" {
            Field::Rational
        } else if let Some(p) = s.strip_prefix("gf:") {
            Field::Prime(
                p.parse()
                    .map_err(|_| Error::InvalidInput(format!("bad field `{s}`")))?,
            )
        } else {
            return Err(Error::InvalidInput(format!("bad field `{s}`")));
        };
        f.validate()?;
        Ok(f)
    }

    pub fn spec(&self) -> String {
        match self {
            Field::Rational => "rational".into(),
            Field::Prime(p) => format!("gf:{p}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}
