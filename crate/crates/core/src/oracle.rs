//! Brute-force recomputation of the derived quantities.
//!
//! Nothing here goes through the ideal chain or the ladder analysis. The
//! powers `nM` are built as truncated sumsets `M + … + M` over all members
//! of `M` (not just generators), Apery sets come from the set difference
//! `nM ∖ ((e + S) + nM)`, and orders come from a composition search.

use serde::{Deserialize, Serialize};

use crate::apery::{validate_table, AperyTable};
use crate::error::{Error, Result};
use crate::ideals::IdealChain;
use crate::semigroup::NumericalSemigroup;
use crate::tangent_cone::{full_product_test, torsion_monomials, Analysis};

/// Fixed-length bitset over `[0, len)`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    fn new(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    fn set(&mut self, k: usize) {
        self.words[k / 64] |= 1 << (k % 64);
    }

    fn get(&self, k: usize) -> bool {
        k < self.len && self.words[k / 64] >> (k % 64) & 1 == 1
    }

    /// `self |= other << shift`, dropping bits at or beyond `len`.
    fn or_shifted(&mut self, other: &Bits, shift: usize) {
        let n = self.words.len();
        let (ws, bs) = (shift / 64, shift % 64);
        for j in 0..n.saturating_sub(ws) {
            let w = other.words[j];
            self.words[j + ws] |= w << bs;
            if bs > 0 && j + ws + 1 < n {
                self.words[j + ws + 1] |= w >> (64 - bs);
            }
        }
        let tail = self.len % 64;
        if tail > 0 {
            self.words[n - 1] &= (1 << tail) - 1;
        }
    }

    fn and_not(&self, other: &Bits) -> Bits {
        Bits {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
            len: self.len,
        }
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&k| self.get(k))
    }
}

/// The sets `0M, 1M, …, max_level·M`, exact on `[0, bound]`.
#[derive(Clone, Debug)]
pub struct Oracle<'a> {
    semigroup: &'a NumericalSemigroup,
    bound: usize,
    semigroup_bits: Bits,
    levels: Vec<Bits>,
}

impl<'a> Oracle<'a> {
    /// Levels up to `max_level`, exact far enough to read Apery sets and
    /// Hilbert function values of every level below `max_level`.
    pub fn new(s: &'a NumericalSemigroup, max_level: usize) -> Self {
        let e = s.multiplicity();
        let bound = ((max_level + 1) as i64 * e + s.frobenius().max(0) + 1) as usize;
        Self::with_bound(s, max_level, bound)
    }

    pub fn with_bound(s: &'a NumericalSemigroup, max_level: usize, bound: usize) -> Self {
        let len = bound + 1;
        let mut semigroup_bits = Bits::new(len);
        for k in 0..len {
            if s.contains(k as i64) {
                semigroup_bits.set(k);
            }
        }
        let maximal: Vec<usize> = semigroup_bits.ones().filter(|&k| k > 0).collect();
        let mut levels = vec![semigroup_bits.clone()];
        for n in 0..max_level {
            let mut next = Bits::new(len);
            for &m in &maximal {
                next.or_shifted(&levels[n], m);
            }
            levels.push(next);
        }
        Oracle {
            semigroup: s,
            bound,
            semigroup_bits,
            levels,
        }
    }

    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    /// Largest integer on which the level sets are exact.
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Membership in `nM`; beyond the bound, falls back to `a >= n·e + F + 1`.
    pub fn in_level(&self, n: usize, a: i64) -> bool {
        if a < 0 {
            return false;
        }
        if a as usize > self.bound {
            let s = self.semigroup;
            return a > n as i64 * s.multiplicity() + s.frobenius();
        }
        self.levels[n].get(a as usize)
    }

    /// `Ap(nM) = nM ∖ ((e + S) + nM)`, sorted by residue class.
    pub fn apery_via_difference(&self, n: usize) -> Result<Vec<i64>> {
        if n >= self.max_level() {
            return Err(Error::CapExceeded {
                level: n,
                cap: self.max_level().saturating_sub(1),
            });
        }
        let e = self.semigroup.multiplicity() as usize;
        let level = &self.levels[n];
        let mut shifted = Bits::new(self.bound + 1);
        for s in self
            .semigroup_bits
            .ones()
            .take_while(|&s| s + e <= self.bound)
        {
            shifted.or_shifted(level, e + s);
        }
        let diff = level.and_not(&shifted);
        let mut ap = vec![-1i64; e];
        for k in diff.ones() {
            debug_assert!(ap[k % e] < 0, "two elements in residue class {}", k % e);
            ap[k % e] = k as i64;
        }
        Ok(ap)
    }

    /// `|nM ∖ (n+1)M|`.
    pub fn hilbert(&self, n: usize) -> usize {
        assert!(n < self.max_level(), "level {n} beyond oracle");
        self.levels[n].and_not(&self.levels[n + 1]).ones().count()
    }
}

/// `Ap(nM)` by the difference formula; `n` is capped at `e + 2`, two levels
/// past the largest possible reduction number.
pub fn apery_via_difference(s: &NumericalSemigroup, n: usize) -> Result<Vec<i64>> {
    let cap = s.multiplicity() as usize + 2;
    if n > cap {
        return Err(Error::CapExceeded { level: n, cap });
    }
    Oracle::new(s, n + 1).apery_via_difference(n)
}

/// `|nM ∖ (n+1)M|`, the dimension of `m^n / m^{n+1}`.
pub fn hilbert_oracle(s: &NumericalSemigroup, n: usize) -> usize {
    Oracle::new(s, n + 1).hilbert(n)
}

/// Largest `n <= n_max` such that `a` is a sum of `n` nonzero members.
pub fn order_oracle(s: &NumericalSemigroup, a: i64, n_max: usize) -> Result<usize> {
    if !s.contains(a) {
        return Err(Error::NotAMember(a));
    }
    let a = a as usize;
    // memo[n][k]: is k a sum of exactly n nonzero members?
    let mut memo: Vec<Vec<Option<bool>>> = vec![vec![None; a + 1]; n_max + 1];
    fn split(s: &NumericalSemigroup, k: usize, n: usize, memo: &mut [Vec<Option<bool>>]) -> bool {
        if n == 0 {
            return k == 0;
        }
        if let Some(v) = memo[n][k] {
            return v;
        }
        let v = (1..=k).any(|m| s.contains(m as i64) && split(s, k - m, n - 1, memo));
        memo[n][k] = Some(v);
        v
    }
    Ok((0..=n_max)
        .rev()
        .find(|&n| split(s, a, n, &mut memo))
        .unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub checks: Vec<Check>,
}

impl ConsistencyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn record(&mut self, name: &str, failure: Option<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: failure.is_none(),
            detail: failure,
        });
    }
}

/// Runs every cross-check for `s` against an already computed analysis.
pub fn check_analysis(s: &NumericalSemigroup, analysis: &Analysis) -> ConsistencyReport {
    let mut report = ConsistencyReport { checks: Vec::new() };
    let table: &AperyTable = &analysis.table;
    let d = &analysis.decomposition;
    let e = s.multiplicity();
    let r = table.reduction_number();
    let monomials = torsion_monomials(table, d);
    let deepest = monomials
        .iter()
        .map(|m| m.degree + m.summand.exponent + 1)
        .max()
        .unwrap_or(0);
    let oracle = Oracle::new(s, deepest.max(r + 3));

    let violations = validate_table(table);
    report.record(
        "table_rules",
        (!violations.is_empty()).then(|| format!("{violations:?}")),
    );

    let mut failure = None;
    for n in 0..=r + 1 {
        let expected = oracle
            .apery_via_difference(n)
            .expect("within oracle levels");
        if expected != table.row_extended(n) {
            failure = Some(format!("row {n}: difference formula gives {expected:?}"));
            break;
        }
    }
    report.record("apery_difference", failure);

    let (alpha, alpha_torsion) = d.alpha_invariants();
    let sum: usize = alpha.range(1..).map(|(_, c)| c).sum();
    let alpha_ok = alpha.get(&0) == Some(&1)
        && sum == e as usize - 1
        && alpha.get(&r).is_some_and(|&c| c > 0)
        && alpha.keys().all(|&k| k <= r)
        && r < e as usize;
    report.record(
        "alpha",
        (!alpha_ok).then(|| format!("alpha = {alpha:?}, r = {r}, e = {e}")),
    );

    let (betti0, betti1) = d.betti_numbers();
    let mut b0 = vec![0usize; r + 1];
    let mut b1 = vec![0usize; 2 * r + 2];
    for &deg in d.free_degrees() {
        b0[deg] += 1;
    }
    for t in d.torsion_summands() {
        b0[t.degree] += 1;
        b1[t.degree + t.exponent] += 1;
    }
    let dense = |m: &std::collections::BTreeMap<usize, usize>, len| {
        let mut v = vec![0usize; len];
        for (&k, &c) in m {
            if k < len {
                v[k] = c;
            }
        }
        v
    };
    let betti_ok = dense(&betti0, b0.len()) == b0
        && dense(&betti1, b1.len()) == b1
        && betti0.values().sum::<usize>()
            == alpha.values().sum::<usize>() + alpha_torsion.values().sum::<usize>();
    report.record(
        "betti",
        (!betti_ok).then(|| format!("{betti0:?} / {betti1:?}")),
    );

    let mut failure = None;
    for n in 0..=r + 2 {
        let (predicted, counted) = (d.hilbert_function(n), oracle.hilbert(n));
        if predicted != counted {
            failure = Some(format!(
                "degree {n}: predicted {predicted}, counted {counted}"
            ));
            break;
        }
    }
    if failure.is_none() && d.hilbert_function(1) != s.embedding_dimension() && e > 1 {
        failure = Some("H(1) differs from the embedding dimension".to_string());
    }
    report.record("hilbert", failure);

    let no_true_landing = d.columns().iter().all(|c| !c.has_true_landing());
    report.record(
        "cm_landings",
        (no_true_landing != d.is_cohen_macaulay())
            .then(|| "CM flag disagrees with landings".into()),
    );

    let mut failure = None;
    for m in &monomials {
        let c = m.summand.exponent;
        let target = m.exponent + c as i64 * e;
        if !oracle.in_level(m.degree + c + 1, target) {
            failure = Some(format!(
                "x^{c} does not kill t^{} in degree {}",
                m.exponent, m.degree
            ));
            break;
        }
    }
    report.record("torsion_kill", failure);

    let mut chain = IdealChain::new(s);
    let mut failure = None;
    'outer: for m in &monomials {
        for value in
            std::iter::once(m.exponent).chain(s.minimal_generators().iter().map(|g| m.exponent + g))
        {
            let n_max = r + 3;
            let by_chain = chain.order(value).expect("member");
            let by_search = order_oracle(s, value, n_max).expect("member");
            if by_chain.min(n_max) != by_search {
                failure = Some(format!(
                    "ord({value}): chain {by_chain}, search {by_search}"
                ));
                break 'outer;
            }
        }
    }
    report.record("order", failure);

    let full = full_product_test(s, table, d);
    let verdict = analysis.buchsbaum;
    report.record(
        "buchsbaum_routes",
        (full.is_none() != verdict.buchsbaum)
            .then(|| format!("fast path {verdict:?}, product test {full:?}")),
    );

    report
}

/// Builds the analysis and runs every cross-check. Construction failures
/// are reported as a failed check rather than an error.
pub fn consistency_report(s: &NumericalSemigroup) -> ConsistencyReport {
    match Analysis::of(s) {
        Ok(a) => check_analysis(s, &a),
        Err(err) => ConsistencyReport {
            checks: vec![Check {
                name: "construction".into(),
                passed: false,
                detail: Some(err.to_string()),
            }],
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn bit_shifts() {
        let mut a = Bits::new(130);
        a.set(0);
        a.set(3);
        let mut b = Bits::new(130);
        b.or_shifted(&a, 64);
        b.or_shifted(&a, 125);
        assert_eq!(b.ones().collect::<Vec<_>>(), vec![64, 67, 125, 128]);
        b.or_shifted(&a, 129);
        assert_eq!(b.ones().collect::<Vec<_>>(), vec![64, 67, 125, 128, 129]);
    }

    #[test]
    fn difference_formula_examples() {
        assert_eq!(
            apery_via_difference(&sg(&[10, 19, 47]), 9).unwrap(),
            vec![90, 171, 162, 153, 144, 135, 126, 117, 108, 99]
        );
        assert_eq!(
            apery_via_difference(&sg(&[5, 6, 13]), 0).unwrap(),
            vec![0, 6, 12, 13, 19]
        );
        assert_eq!(apery_via_difference(&sg(&[1]), 3).unwrap(), vec![3]);
        assert_eq!(
            apery_via_difference(&sg(&[1]), 4),
            Err(Error::CapExceeded { level: 4, cap: 3 })
        );
        assert_eq!(apery_via_difference(&sg(&[2, 3]), 2).unwrap(), vec![4, 5]);
    }

    #[test]
    fn hilbert_counts() {
        assert_eq!(hilbert_oracle(&sg(&[5, 6, 13]), 2), 4);
        assert_eq!(hilbert_oracle(&sg(&[5, 6, 13]), 1), 3);
        assert_eq!(hilbert_oracle(&sg(&[10, 11, 19]), 1), 3);
        assert_eq!(hilbert_oracle(&sg(&[10, 11, 19]), 0), 1);
        assert_eq!(hilbert_oracle(&sg(&[1]), 0), 1);
        assert_eq!(hilbert_oracle(&sg(&[1]), 5), 1);
    }

    #[test]
    fn order_by_composition() {
        let s = sg(&[5, 6, 13]);
        assert_eq!(order_oracle(&s, 19, 4), Ok(2));
        assert_eq!(order_oracle(&s, 18, 4), Ok(3));
        assert_eq!(order_oracle(&s, 5, 4), Ok(1));
        assert_eq!(order_oracle(&s, 0, 4), Ok(0));
        assert_eq!(order_oracle(&s, 7, 4), Err(Error::NotAMember(7)));
        let s = sg(&[7, 9, 11]);
        assert_eq!(order_oracle(&s, 7, 4), Ok(1));
    }

    #[test]
    fn reports_pass_on_examples() {
        for gens in [
            vec![10, 19, 47],
            vec![9, 10, 11, 23],
            vec![1],
            vec![5, 6, 13],
            vec![10, 11, 19],
            vec![4, 11, 29],
        ] {
            let rep = consistency_report(&sg(&gens));
            assert!(
                rep.all_passed(),
                "{gens:?}: {:?}",
                rep.failures().collect::<Vec<_>>()
            );
            assert_eq!(rep.checks.len(), 9);
        }
    }

    #[test]
    fn corrupted_analysis_is_caught() {
        let s = sg(&[5, 6, 13]);
        let mut a = Analysis::of(&s).unwrap();
        let mut rows = a.table.rows().to_vec();
        rows[2][1] = 16;
        a.table = AperyTable::from_rows(5, rows);
        let rep = check_analysis(&s, &a);
        let failed: Vec<_> = rep.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"table_rules"));
        assert!(failed.contains(&"apery_difference"));
    }
}
