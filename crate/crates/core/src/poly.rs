//! Exact multivariate polynomials in canonical form.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Coef;
use crate::monomial::Monomial;
use crate::ring::Ring;

/// A polynomial stored as terms in strictly decreasing order under the
/// ring's active monomial order; no zero coefficients are kept.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Coef)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring, c: Coef) -> Self {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((ring.one_monomial(), c));
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn variable(ring: &Ring, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(ring.var_monomial(i), ring.field().one())],
        }
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Coef) -> Self {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((m, c));
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Canonicalize an unsorted term list: merge duplicates, drop zeros, sort.
    pub fn from_terms(ring: &Ring, items: Vec<(Monomial, Coef)>) -> Self {
        let mut map: HashMap<Monomial, Coef> = HashMap::with_capacity(items.len());
        let field = ring.field();
        for (m, c) in items {
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = field.add(e.get(), &c);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        e.insert(s);
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !c.is_zero() {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Coef)> = map.into_iter().collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coef)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term under the active order.
    pub fn lead(&self) -> Option<(&Monomial, &Coef)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.same_ring(&other.ring)?;
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match order.compare(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(ca, cb);
                    if !s.is_zero() {
                        out.push((ma.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: out,
        })
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coef) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), field.mul(k, c)))
                .collect(),
        }
    }

    /// Multiply by a single term. Order-preserving, so no re-sort is needed.
    pub fn mul_term(&self, m: &Monomial, c: &Coef) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), field.mul(k, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.same_ring(&other.ring)?;
        let field = self.ring.field();
        let mut acc: HashMap<Monomial, Coef> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let prod = field.mul(ca, cb);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = field.add(e.get(), &prod);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            e.insert(s);
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        if !prod.is_zero() {
                            e.insert(prod);
                        }
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Coef)> = acc.into_iter().collect();
        let order = self.ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Result<Polynomial> {
        match self.lead() {
            None => Ok(self.clone()),
            Some((_, c)) => {
                let inv = self.ring.field().inv(c)?;
                Ok(self.scale(&inv))
            }
        }
    }

    /// True when the polynomial is `c * m` for a single monomial `m`.
    pub fn as_single_term(&self) -> Option<(&Monomial, &Coef)> {
        if self.terms.len() == 1 {
            self.lead()
        } else {
            None
        }
    }

    pub fn require_homogeneous(&self) -> Result<()> {
        if self.is_homogeneous() {
            Ok(())
        } else {
            Err(Error::NotHomogeneous)
        }
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field().clone();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_negative(c);
            let abs = if neg { field.neg(c) } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coef_str = field.format(&abs);
            if m.is_one() {
                write!(f, "{coef_str}")?;
            } else if abs.is_one() {
                write!(f, "{}", self.ring.format_monomial(m))?;
            } else {
                write!(f, "{}*{}", coef_str, self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::monomial::MonomialOrder;

    fn p2() -> Ring {
        Ring::new(
            &["x", "y"],
            FieldCtx::prime(32003).unwrap(),
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn add_cancels() {
        let r = p2();
        let x2 = Polynomial::variable(&r, 0).pow(2).unwrap();
        let s = x2.add(&x2.neg()).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn mul_difference_of_squares() {
        let r = p2();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        let lhs = x.add(&y).unwrap().mul(&x.sub(&y).unwrap()).unwrap();
        let rhs = x.pow(2).unwrap().sub(&y.pow(2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn power_binomial() {
        // (a + c)^2 = a^2 + 2ac + c^2 in k[a,b,c,d]
        let r = Ring::new(
            &["a", "b", "c", "d"],
            FieldCtx::prime(32003).unwrap(),
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let a = Polynomial::variable(&r, 0);
        let c = Polynomial::variable(&r, 2);
        let sq = a.add(&c).unwrap().pow(2).unwrap();
        assert_eq!(sq.num_terms(), 3);
        let two = r.field().from_i64(2);
        let expected = a
            .pow(2)
            .unwrap()
            .add(&a.mul(&c).unwrap().scale(&two))
            .unwrap()
            .add(&c.pow(2).unwrap())
            .unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn homogeneity_flag() {
        let r = p2();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        assert!(x.add(&y).unwrap().is_homogeneous());
        assert!(!x.pow(2).unwrap().add(&y).unwrap().is_homogeneous());
        assert!(Polynomial::zero(&r).is_homogeneous());
    }

    #[test]
    fn frobenius_over_fp() {
        // (x + y)^p has only p-th power monomials over F_p.
        let r = Ring::new(
            &["x", "y"],
            FieldCtx::prime(5).unwrap(),
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let f = Polynomial::variable(&r, 0)
            .add(&Polynomial::variable(&r, 1))
            .unwrap();
        let fp = f.pow(5).unwrap();
        assert_eq!(fp.num_terms(), 2);
        for (m, _) in fp.terms() {
            assert!(m.exps().iter().all(|&e| e % 5 == 0));
        }
    }
}
