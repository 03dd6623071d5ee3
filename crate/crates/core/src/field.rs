//! Exact coefficient arithmetic over a prime field F_p or the rationals.
//!
//! Every operation is exact; there is no floating point anywhere in the
//! kernel. Prime-field elements are stored reduced in `[0, p)`.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// A coefficient: an element of F_p (stored reduced) or an exact rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coef {
    Fp(u64),
    Rat(Box<BigRational>),
}

impl Coef {
    pub fn is_zero(&self) -> bool {
        match self {
            Coef::Fp(a) => *a == 0,
            Coef::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coef::Fp(a) => *a == 1,
            Coef::Rat(r) => r.is_one(),
        }
    }
}

/// The coefficient field: characteristic 0 (rationals) or a prime p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    characteristic: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    // Deterministic Miller-Rabin for u64.
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if a % n == 0 {
            continue;
        }
        let mut x = mod_pow(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

impl FieldCtx {
    /// The rational field Q.
    pub fn rationals() -> Self {
        FieldCtx { characteristic: 0 }
    }

    /// The prime field F_p. Errors unless `p` is prime.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldCtx { characteristic: p })
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn describe(&self) -> String {
        if self.characteristic == 0 {
            "Q".to_string()
        } else {
            format!("F_{}", self.characteristic)
        }
    }

    pub fn zero(&self) -> Coef {
        match self.characteristic {
            0 => Coef::Rat(Box::new(BigRational::zero())),
            _ => Coef::Fp(0),
        }
    }

    pub fn one(&self) -> Coef {
        match self.characteristic {
            0 => Coef::Rat(Box::new(BigRational::one())),
            _ => Coef::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coef {
        match self.characteristic {
            0 => Coef::Rat(Box::new(BigRational::from_integer(BigInt::from(n)))),
            p => {
                let r = n.rem_euclid(p as i64) as u64;
                Coef::Fp(r % p)
            }
        }
    }

    /// Exact a/b as a field element; errors when b maps to zero.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Coef> {
        match self.characteristic {
            0 => {
                if den == 0 {
                    return Err(Error::Invalid("zero denominator".into()));
                }
                Ok(Coef::Rat(Box::new(BigRational::new(
                    BigInt::from(num),
                    BigInt::from(den),
                ))))
            }
            _ => {
                let d = self.from_i64(den);
                if d.is_zero() {
                    return Err(Error::Invalid(format!(
                        "denominator {} is zero in {}",
                        den,
                        self.describe()
                    )));
                }
                Ok(self.mul(&self.from_i64(num), &self.inv(&d)?))
            }
        }
    }

    pub fn add(&self, a: &Coef, b: &Coef) -> Coef {
        match (a, b) {
            (Coef::Fp(x), Coef::Fp(y)) => {
                let p = self.characteristic;
                let s = x + y;
                Coef::Fp(if s >= p { s - p } else { s })
            }
            (Coef::Rat(x), Coef::Rat(y)) => Coef::Rat(Box::new(&**x + &**y)),
            _ => unreachable!("mixed coefficient kinds"),
        }
    }

    pub fn sub(&self, a: &Coef, b: &Coef) -> Coef {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coef) -> Coef {
        match a {
            Coef::Fp(x) => Coef::Fp(if *x == 0 { 0 } else { self.characteristic - x }),
            Coef::Rat(x) => Coef::Rat(Box::new(-&**x)),
        }
    }

    pub fn mul(&self, a: &Coef, b: &Coef) -> Coef {
        match (a, b) {
            (Coef::Fp(x), Coef::Fp(y)) => Coef::Fp(mul_mod(*x, *y, self.characteristic)),
            (Coef::Rat(x), Coef::Rat(y)) => Coef::Rat(Box::new(&**x * &**y)),
            _ => unreachable!("mixed coefficient kinds"),
        }
    }

    pub fn inv(&self, a: &Coef) -> Result<Coef> {
        if a.is_zero() {
            return Err(Error::Invalid("inverse of zero".into()));
        }
        Ok(match a {
            Coef::Fp(x) => Coef::Fp(mod_pow(*x, self.characteristic - 2, self.characteristic)),
            Coef::Rat(x) => Coef::Rat(Box::new(x.recip())),
        })
    }

    pub fn div(&self, a: &Coef, b: &Coef) -> Result<Coef> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Render a coefficient; rationals as `n` or `n/d`.
    pub fn format(&self, a: &Coef) -> String {
        match a {
            Coef::Fp(x) => x.to_string(),
            Coef::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }

    /// True when the rational is negative (used only for pretty-printing).
    pub fn is_negative(&self, a: &Coef) -> bool {
        match a {
            Coef::Fp(_) => false,
            Coef::Rat(r) => r.is_negative(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(FieldCtx::prime(32003).is_ok());
        assert!(FieldCtx::prime(2).is_ok());
        assert!(FieldCtx::prime(1).is_err());
        assert!(FieldCtx::prime(32001).is_err()); // 3 * 10667
        assert!(FieldCtx::prime(0).is_err());
    }

    #[test]
    fn fp_arithmetic_is_exact() {
        let f = FieldCtx::prime(7).unwrap();
        let a = f.from_i64(5);
        let b = f.from_i64(4);
        assert_eq!(f.add(&a, &b), f.from_i64(2));
        assert_eq!(f.mul(&a, &b), f.from_i64(6));
        assert_eq!(f.sub(&a, &b), f.from_i64(1));
        let inv = f.inv(&b).unwrap();
        assert_eq!(f.mul(&b, &inv), f.one());
        assert_eq!(f.from_i64(-3), f.from_i64(4));
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = FieldCtx::rationals();
        let third = f.from_ratio(1, 3).unwrap();
        let mut acc = f.zero();
        for _ in 0..3 {
            acc = f.add(&acc, &third);
        }
        assert_eq!(acc, f.one());
    }

    #[test]
    fn ratio_in_prime_field() {
        let f = FieldCtx::prime(7).unwrap();
        // 1/2 = 4 mod 7
        assert_eq!(f.from_ratio(1, 2).unwrap(), f.from_i64(4));
        assert!(f.from_ratio(1, 7).is_err());
    }
}
