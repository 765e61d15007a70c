//! Numerical semigroups given by generators.
//!
//! A [`NumericalSemigroup`] keeps a boolean membership sieve over
//! `[0, F + e]`, where `F` is the Frobenius number and `e` the multiplicity.
//! Every integer above `F` is a member, so lookups beyond the sieve never
//! touch it.

use crate::error::SemigroupError;

/// Largest sieve the constructor will allocate. Inputs at the scale of the
/// worked examples stay far below this (Frobenius numbers in the hundreds).
pub const MAX_SIEVE_LEN: usize = 1 << 26;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    minimal_generators: Vec<i64>,
    frobenius: i64,
    gaps: Vec<i64>,
    /// `sieve[k]` is true iff `k` is a member, for `0 <= k <= F + e`.
    sieve: Vec<bool>,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `generators`. Duplicates and
    /// non-minimal generators are dropped.
    pub fn new(generators: &[i64]) -> Result<Self, SemigroupError> {
        if generators.is_empty() {
            return Err(SemigroupError::EmptyInput);
        }
        if let Some(&bad) = generators.iter().find(|&&g| g < 1) {
            return Err(SemigroupError::NonPositiveGenerator(bad));
        }
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();

        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::GcdNotOne(g));
        }

        let e = gens[0];
        // Reachability sieve, grown until `e` consecutive members appear.
        // From there on every integer is a member.
        let mut sieve: Vec<bool> = vec![true];
        let mut run = 1i64;
        let mut k = 0usize;
        while run < e {
            k += 1;
            if k >= MAX_SIEVE_LEN {
                return Err(SemigroupError::SieveLimit(MAX_SIEVE_LEN));
            }
            let member = gens
                .iter()
                .take_while(|&&g| g as usize <= k)
                .any(|&g| sieve[k - g as usize]);
            sieve.push(member);
            run = if member { run + 1 } else { 0 };
        }
        // The last `e` entries are the first run of `e` consecutive members.
        let frobenius = k as i64 - e;
        let gaps: Vec<i64> = (1..sieve.len())
            .filter(|&x| !sieve[x])
            .map(|x| x as i64)
            .collect();
        debug_assert_eq!(gaps.last().copied().unwrap_or(-1), frobenius);

        let mut s = NumericalSemigroup {
            minimal_generators: Vec::new(),
            frobenius,
            gaps,
            sieve,
        };
        // g is redundant iff g = m + (g - m) with both parts nonzero members.
        let minimal = gens
            .iter()
            .copied()
            .filter(|&g| !(1..g).any(|m| s.contains(m) && s.contains(g - m)))
            .collect();
        s.minimal_generators = minimal;
        Ok(s)
    }

    /// Membership test. Negative integers are never members.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n > self.frobenius {
            true
        } else {
            self.sieve[n as usize]
        }
    }

    pub fn multiplicity(&self) -> i64 {
        self.minimal_generators[0]
    }

    /// Embedding dimension: the number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.minimal_generators
    }

    /// Apery set with respect to the multiplicity. Entry `i` is the least
    /// member congruent to `i` modulo `e`.
    pub fn apery_set(&self) -> Vec<i64> {
        let e = self.multiplicity();
        let mut ap = vec![-1i64; e as usize];
        let mut missing = e;
        // Every Apery element is at most F + e, which is the sieve length - 1.
        for (k, &member) in self.sieve.iter().enumerate() {
            if !member {
                continue;
            }
            let slot = &mut ap[k % e as usize];
            if *slot < 0 {
                *slot = k as i64;
                missing -= 1;
                if missing == 0 {
                    break;
                }
            }
        }
        ap
    }

    /// Members of the semigroup in `[0, bound]`, in increasing order.
    pub fn members_up_to(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (0..=bound).filter(move |&k| self.contains(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    /// Plain coin-problem reachability over the raw input generators.
    fn reachable(gens: &[i64], bound: usize) -> Vec<bool> {
        let mut r = vec![false; bound + 1];
        r[0] = true;
        for k in 1..=bound {
            r[k] = gens.iter().any(|&g| g as usize <= k && r[k - g as usize]);
        }
        r
    }

    #[test]
    fn five_six_thirteen() {
        let s = sg(&[5, 6, 13]);
        assert_eq!(s.multiplicity(), 5);
        assert_eq!(s.embedding_dimension(), 3);
        assert_eq!(s.minimal_generators(), &[5, 6, 13]);
        assert_eq!(s.frobenius(), 14);
        assert_eq!(s.genus(), 8);
        assert_eq!(s.gaps(), &[1, 2, 3, 4, 7, 8, 9, 14]);
        assert!(s.contains(12));
        assert!(!s.contains(14));
        assert!(s.contains(0));
        assert!(!s.contains(-3));
        assert_eq!(s.apery_set(), vec![0, 6, 12, 13, 19]);
    }

    #[test]
    fn naturals() {
        let s = sg(&[1]);
        assert_eq!(s.multiplicity(), 1);
        assert_eq!(s.frobenius(), -1);
        assert!(s.gaps().is_empty());
        assert_eq!(s.apery_set(), vec![0]);
        let t = sg(&[1, 2, 7]);
        assert_eq!(t.minimal_generators(), &[1]);
    }

    #[test]
    fn errors() {
        assert_eq!(
            NumericalSemigroup::new(&[4, 6]),
            Err(SemigroupError::GcdNotOne(2))
        );
        assert_eq!(
            NumericalSemigroup::new(&[]),
            Err(SemigroupError::EmptyInput)
        );
        assert_eq!(
            NumericalSemigroup::new(&[0, 3]),
            Err(SemigroupError::NonPositiveGenerator(0))
        );
    }

    #[test]
    fn accessors_from_examples() {
        assert_eq!(sg(&[10, 11, 19]).minimal_generators(), &[10, 11, 19]);
        assert_eq!(sg(&[2, 3]).frobenius(), 1);
        assert_eq!(sg(&[5, 6, 13, 18]).minimal_generators(), &[5, 6, 13]);
        assert_eq!(sg(&[13, 6, 5, 6]).minimal_generators(), &[5, 6, 13]);
        assert_eq!(
            sg(&[10, 17, 22, 28]).apery_set(),
            vec![0, 51, 22, 73, 34, 45, 56, 17, 28, 39]
        );
    }

    #[test]
    fn agrees_with_reachability() {
        for gens in [
            vec![5, 6, 13],
            vec![10, 19, 47],
            vec![9, 10, 11, 23],
            vec![7, 12],
            vec![3, 5, 7],
        ] {
            let s = sg(&gens);
            let bound = (s.frobenius() + 3 * s.multiplicity()) as usize;
            let r = reachable(&gens, bound);
            for (k, &member) in r.iter().enumerate() {
                assert_eq!(s.contains(k as i64), member, "{gens:?} at {k}");
            }
            let ap = s.apery_set();
            assert_eq!(*ap.iter().max().unwrap(), s.frobenius() + s.multiplicity());
            for (i, &w) in ap.iter().enumerate() {
                assert_eq!(w % s.multiplicity(), i as i64);
                assert!(!s.contains(w - s.multiplicity()));
            }
        }
    }
}
