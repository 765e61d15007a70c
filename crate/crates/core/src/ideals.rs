//! The chain of ideals `S ⊇ M ⊇ 2M ⊇ …` and the order function.
//!
//! An ideal `nM` is stored as a membership sieve on `[0, T)` with
//! `T = n·e + F + 1`; everything at or above `T` is a member, since
//! `n·e ∈ nM` and `nM + S ⊆ nM`.

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug)]
pub struct SemigroupIdeal<'a> {
    parent: &'a NumericalSemigroup,
    level: usize,
    threshold: i64,
    sieve: Vec<bool>,
}

impl<'a> SemigroupIdeal<'a> {
    /// The semigroup itself, as the level-0 ideal.
    pub fn whole(parent: &'a NumericalSemigroup) -> Self {
        let threshold = parent.frobenius() + 1;
        let sieve = (0..threshold).map(|k| parent.contains(k)).collect();
        SemigroupIdeal {
            parent,
            level: 0,
            threshold,
            sieve,
        }
    }

    /// `M = S ∖ {0}`.
    pub fn maximal(parent: &'a NumericalSemigroup) -> Self {
        Self::whole(parent).add_maximal()
    }

    /// `M + I`, computed as the union of the shifts `g + I` over the minimal
    /// generators `g`.
    pub fn add_maximal(&self) -> Self {
        let e = self.parent.multiplicity();
        let threshold = self.threshold + e;
        let gens = self.parent.minimal_generators();
        let sieve = (0..threshold)
            .map(|a| {
                gens.iter()
                    .take_while(|&&g| g <= a)
                    .any(|&g| self.contains(a - g))
            })
            .collect();
        SemigroupIdeal {
            parent: self.parent,
            level: self.level + 1,
            threshold,
            sieve,
        }
    }

    pub fn parent(&self) -> &'a NumericalSemigroup {
        self.parent
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Every integer at or above this value is a member.
    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    pub fn contains(&self, a: i64) -> bool {
        if a < 0 {
            false
        } else if a >= self.threshold {
            true
        } else {
            self.sieve[a as usize]
        }
    }

    /// Least member in each residue class modulo `e`.
    pub fn apery_set(&self) -> Vec<i64> {
        let e = self.parent.multiplicity();
        let mut ap = vec![-1i64; e as usize];
        let mut missing = e;
        let mut a = 0;
        while missing > 0 {
            if self.contains(a) && ap[(a % e) as usize] < 0 {
                ap[(a % e) as usize] = a;
                missing -= 1;
            }
            a += 1;
        }
        ap
    }
}

/// Lazily extended chain `0M = S, 1M, 2M, …`.
#[derive(Clone, Debug)]
pub struct IdealChain<'a> {
    semigroup: &'a NumericalSemigroup,
    levels: Vec<SemigroupIdeal<'a>>,
}

impl<'a> IdealChain<'a> {
    pub fn new(semigroup: &'a NumericalSemigroup) -> Self {
        IdealChain {
            semigroup,
            levels: vec![SemigroupIdeal::whole(semigroup)],
        }
    }

    pub fn semigroup(&self) -> &'a NumericalSemigroup {
        self.semigroup
    }

    /// The ideal `nM`, building intermediate levels as needed.
    pub fn level(&mut self, n: usize) -> &SemigroupIdeal<'a> {
        while self.levels.len() <= n {
            let next = self
                .levels
                .last()
                .expect("chain is never empty")
                .add_maximal();
            self.levels.push(next);
        }
        &self.levels[n]
    }

    /// `max { n : a ∈ nM }`.
    pub fn order(&mut self, a: i64) -> Result<usize> {
        if !self.semigroup.contains(a) {
            return Err(Error::NotAMember(a));
        }
        let mut n = 0;
        while self.level(n + 1).contains(a) {
            n += 1;
        }
        Ok(n)
    }
}

/// `ord(a)` for a single query. Builds a fresh chain; use
/// [`IdealChain::order`] for repeated queries.
pub fn order(s: &NumericalSemigroup, a: i64) -> Result<usize> {
    IdealChain::new(s).order(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    /// Is `a` in `nM`, i.e. a sum of `n` nonzero members plus a member?
    fn sum_of(s: &NumericalSemigroup, a: i64, n: usize) -> bool {
        if n == 0 {
            return s.contains(a);
        }
        (1..=a).any(|m| s.contains(m) && sum_of(s, a - m, n - 1))
    }

    #[test]
    fn maximal_ideal() {
        let s = sg(&[5, 6, 13]);
        let m = SemigroupIdeal::maximal(&s);
        assert!(m.contains(5));
        assert!(!m.contains(0));
        assert_eq!(m.level(), 1);
        assert_eq!(m.apery_set(), vec![5, 6, 12, 13, 19]);

        let n = sg(&[1]);
        let m = SemigroupIdeal::maximal(&n);
        assert!(!m.contains(0));
        assert!((1..20).all(|k| m.contains(k)));
    }

    #[test]
    fn powers_of_maximal_ideal() {
        let s = sg(&[5, 6, 13]);
        let mut chain = IdealChain::new(&s);
        assert_eq!(chain.level(0).apery_set(), s.apery_set());
        assert_eq!(chain.level(2).apery_set(), vec![10, 11, 12, 18, 19]);
        assert_eq!(chain.level(4).apery_set(), vec![20, 21, 22, 23, 24]);

        let n = sg(&[1]);
        let mut chain = IdealChain::new(&n);
        let two_m = chain.level(2);
        assert!(!two_m.contains(1));
        assert!((2..20).all(|k| two_m.contains(k)));
    }

    #[test]
    fn apery_sets_from_worked_tables() {
        let s = sg(&[10, 11, 19]);
        let mut chain = IdealChain::new(&s);
        assert_eq!(
            chain.level(2).apery_set(),
            vec![20, 21, 22, 33, 44, 55, 66, 57, 38, 29]
        );
        let s = sg(&[10, 19, 47]);
        let mut chain = IdealChain::new(&s);
        assert_eq!(
            chain.level(3).apery_set(),
            vec![30, 141, 132, 113, 104, 85, 76, 57, 48, 39]
        );
    }

    #[test]
    fn order_values() {
        let s = sg(&[5, 6, 13]);
        assert_eq!(order(&s, 19), Ok(2));
        assert_eq!(order(&s, 18), Ok(3));
        assert_eq!(order(&s, 5), Ok(1));
        assert_eq!(order(&s, 0), Ok(0));
        assert_eq!(order(&s, 14), Err(Error::NotAMember(14)));
        for gens in [[7, 9, 11], [4, 11, 29], [9, 10, 23]] {
            let s = sg(&gens);
            assert_eq!(order(&s, s.multiplicity()), Ok(1));
        }
    }

    #[test]
    fn chain_matches_exhaustive_sums() {
        for gens in [vec![5, 6, 13], vec![4, 11, 29], vec![3, 7], vec![6, 7, 15]] {
            let s = sg(&gens);
            let e = s.multiplicity();
            let mut chain = IdealChain::new(&s);
            for n in 0..=3 {
                let ideal = chain.level(n).clone();
                for a in 0..=3 * e + s.frobenius() {
                    assert_eq!(ideal.contains(a), sum_of(&s, a, n), "{gens:?} n={n} a={a}");
                }
            }
        }
    }

    #[test]
    fn residue_class_representation() {
        for gens in [vec![5, 6, 13], vec![10, 11, 19], vec![9, 10, 11, 23]] {
            let s = sg(&gens);
            let e = s.multiplicity();
            let mut chain = IdealChain::new(&s);
            for n in 0..6 {
                let ideal = chain.level(n).clone();
                let ap = ideal.apery_set();
                assert_eq!(ap[0], n as i64 * e);
                for a in 0..ideal.threshold() + 2 * e {
                    assert_eq!(ideal.contains(a), a >= ap[(a % e) as usize]);
                }
                let next = chain.level(n + 1).apery_set();
                for i in 0..e as usize {
                    assert!(next[i] == ap[i] || next[i] == ap[i] + e);
                }
                for a in 0..ideal.threshold() + e {
                    if chain.level(n + 1).contains(a) {
                        assert!(chain.level(n).contains(a));
                    }
                }
            }
        }
    }
}
