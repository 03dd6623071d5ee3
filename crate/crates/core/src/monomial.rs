//! Monomials (exponent vectors) and total orders on them.

use smallvec::SmallVec;
use std::cmp::Ordering;

/// Exponent vector with cached total degree. The vector length always equals
/// the ambient ring's variable count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
            deg: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Monomial {
            deg: exps.iter().map(|&e| e as u32).sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps: SmallVec<[u16; 8]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    pub fn pow(&self, k: u16) -> Monomial {
        let exps: SmallVec<[u16; 8]> = self.exps.iter().map(|a| a * k).collect();
        Monomial {
            exps,
            deg: self.deg * k as u32,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps: SmallVec<[u16; 8]> = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(b, a)| b - a)
            .collect();
        Monomial {
            exps,
            deg: other.deg - self.deg,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 8]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// A total order on monomials: 1 is minimal and multiplication is monotone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic (the default).
    GrevLex,
    /// Pure lexicographic, x_0 > x_1 > ...
    Lex,
    /// Eliminate the first `split` variables: grevlex on the first block,
    /// ties broken by grevlex on the rest.
    BlockElim { split: usize },
}

fn grevlex(a: &[u16], b: &[u16], deg_a: u32, deg_b: u32) -> Ordering {
    match deg_a.cmp(&deg_b) {
        Ordering::Equal => {}
        c => return c,
    }
    // Last non-equal exponent: smaller exponent wins.
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for i in 0..a.len() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            c => return c,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Ordering {
        debug_assert_eq!(u.nvars(), v.nvars());
        match self {
            MonomialOrder::GrevLex => grevlex(u.exps(), v.exps(), u.degree(), v.degree()),
            MonomialOrder::Lex => lex(u.exps(), v.exps()),
            MonomialOrder::BlockElim { split } => {
                let s = (*split).min(u.nvars());
                let (ua, ub) = u.exps().split_at(s);
                let (va, vb) = v.exps().split_at(s);
                let da: u32 = ua.iter().map(|&e| e as u32).sum();
                let db: u32 = va.iter().map(|&e| e as u32).sum();
                match grevlex(ua, va, da, db) {
                    Ordering::Equal => {
                        grevlex(ub, vb, u.degree() - da, v.degree() - db)
                    }
                    c => c,
                }
            }
        }
    }
}

/// Order on module terms `(monomial, position)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleOrder {
    /// Term over position: ring order on the monomial, lower position wins ties.
    Top(MonomialOrder),
    /// Position over term: lower position dominates outright.
    Pot(MonomialOrder),
    /// Positions below `main` dominate positions at or above `main`; TOP
    /// within each block. Used to read kernels off tracked computations.
    BlockTop { order: MonomialOrder, main: usize },
}

impl ModuleOrder {
    pub fn ring_order(&self) -> MonomialOrder {
        match self {
            ModuleOrder::Top(o) | ModuleOrder::Pot(o) | ModuleOrder::BlockTop { order: o, .. } => *o,
        }
    }

    pub fn compare(&self, u: &Monomial, upos: usize, v: &Monomial, vpos: usize) -> Ordering {
        match self {
            ModuleOrder::Top(o) => match o.compare(u, v) {
                Ordering::Equal => vpos.cmp(&upos),
                c => c,
            },
            ModuleOrder::Pot(o) => match vpos.cmp(&upos) {
                Ordering::Equal => o.compare(u, v),
                c => c,
            },
            ModuleOrder::BlockTop { order, main } => {
                let ua = upos < *main;
                let va = vpos < *main;
                match (ua, va) {
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                    _ => match order.compare(u, v) {
                        Ordering::Equal => vpos.cmp(&upos),
                        c => c,
                    },
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::from_exps(exps)
    }

    #[test]
    fn grevlex_tiebreak() {
        // x^2 vs xy in two variables, x > y
        let o = MonomialOrder::GrevLex;
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::Lex;
        // x vs y^3
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 3])), Ordering::Greater);
    }

    #[test]
    fn reflexive_equal() {
        for o in [
            MonomialOrder::GrevLex,
            MonomialOrder::Lex,
            MonomialOrder::BlockElim { split: 1 },
        ] {
            assert_eq!(o.compare(&m(&[2, 1]), &m(&[2, 1])), Ordering::Equal);
        }
    }

    #[test]
    fn block_elim_dominates_on_first_block() {
        let o = MonomialOrder::BlockElim { split: 1 };
        // x appears => greater than any monomial in y alone
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_quotient() {
        let a = m(&[1, 2]);
        let b = m(&[2, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient(&b), m(&[1, 1]));
        assert_eq!(a.lcm(&m(&[3, 0])), m(&[3, 2]));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]

        /// u <= v implies uw <= vw, and 1 <= u, for every order kind.
        #[test]
        fn order_axioms(
            u in proptest::collection::vec(0u16..5, 3),
            v in proptest::collection::vec(0u16..5, 3),
            w in proptest::collection::vec(0u16..5, 3),
        ) {
            let (u, v, w) = (m(&u), m(&v), m(&w));
            let one = Monomial::one(3);
            for o in [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::BlockElim { split: 1 }] {
                let c = o.compare(&u, &v);
                let cw = o.compare(&u.mul(&w), &v.mul(&w));
                proptest::prop_assert_eq!(c, cw);
                proptest::prop_assert_ne!(o.compare(&one, &u.mul(&one)), Ordering::Greater);
            }
        }
    }
}
