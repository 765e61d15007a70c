//! Structure of the tangent cone `G` as a graded module over the fiber
//! cone `F` of `(t^e)`.
//!
//! Column `i >= 1` of the Apery table is a ladder. Its last landing ends at
//! `d_i`, the degree of a free summand `F(-d_i)`, and every climb `(b, c)`
//! between two landings is a torsion summand `(F / x^c F)(-b)` with
//! `x = (t^e)*`. Column 0 contributes the summand `F` itself.
//!
//! Degree `n` of column `i` is spanned by the class of `t^{ω_{n,i}}` exactly
//! when the column climbs at `n` (`ω_{n+1,i} = ω_{n,i} + e`), so the torsion
//! submodule has a monomial basis and the Buchsbaum condition
//! `G_+ · T(G) = 0` reduces to products of degree-one generators with
//! torsion monomials.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::apery::{build_apery_table, AperyTable};
use crate::error::{Error, Result};
use crate::ideals::IdealChain;
use crate::ladder::{analyze_ladder, LadderProfile};
use crate::semigroup::NumericalSemigroup;

/// `(F / x^exponent F)(-degree)`, owned by a column of the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TorsionSummand {
    pub degree: usize,
    pub exponent: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentConeDecomposition {
    multiplicity: usize,
    reduction_number: usize,
    /// Ladder profile of every column, column 0 included.
    columns: Vec<LadderProfile>,
    /// Sorted; `free_degrees[0] == 0` comes from column 0.
    free_degrees: Vec<usize>,
    /// `(column, summand)` in column order.
    torsion: Vec<(usize, TorsionSummand)>,
}

pub type AlphaMap = BTreeMap<usize, usize>;
pub type AlphaTorsionMap = BTreeMap<(usize, usize), usize>;

pub fn decompose(s: &NumericalSemigroup) -> Result<TangentConeDecomposition> {
    decompose_table(&build_apery_table(s)?)
}

pub fn decompose_table(table: &AperyTable) -> Result<TangentConeDecomposition> {
    let e = table.multiplicity();
    let mut columns = Vec::with_capacity(e);
    let mut free_degrees = vec![0];
    let mut torsion = Vec::new();
    for i in 0..e {
        let profile = analyze_ladder(&table.column(i))?;
        if i > 0 {
            match profile.landings.first() {
                Some(l) if l.start == 0 => {}
                _ => return Err(Error::MalformedColumn { column: i }),
            }
            free_degrees.push(profile.d().expect("checked above"));
            torsion.extend(profile.climbs.iter().map(|c| {
                (
                    i,
                    TorsionSummand {
                        degree: c.b,
                        exponent: c.c,
                    },
                )
            }));
        }
        columns.push(profile);
    }
    free_degrees.sort_unstable();
    Ok(TangentConeDecomposition {
        multiplicity: e,
        reduction_number: table.reduction_number(),
        columns,
        free_degrees,
        torsion,
    })
}

impl TangentConeDecomposition {
    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn reduction_number(&self) -> usize {
        self.reduction_number
    }

    pub fn columns(&self) -> &[LadderProfile] {
        &self.columns
    }

    pub fn free_degrees(&self) -> &[usize] {
        &self.free_degrees
    }

    /// Torsion summands tagged with the column that owns them.
    pub fn torsion_by_column(&self) -> &[(usize, TorsionSummand)] {
        &self.torsion
    }

    /// Torsion summands as a sorted multiset.
    pub fn torsion_summands(&self) -> Vec<TorsionSummand> {
        let mut t: Vec<_> = self.torsion.iter().map(|&(_, s)| s).collect();
        t.sort_unstable();
        t
    }

    /// `α_i` (free summands `F(-i)`) and `α_{i,j}` (summands `(F/x^j F)(-i)`).
    pub fn alpha_invariants(&self) -> (AlphaMap, AlphaTorsionMap) {
        let mut alpha = AlphaMap::new();
        for &d in &self.free_degrees {
            *alpha.entry(d).or_default() += 1;
        }
        let mut alpha_torsion = AlphaTorsionMap::new();
        for &(_, t) in &self.torsion {
            *alpha_torsion.entry((t.degree, t.exponent)).or_default() += 1;
        }
        (alpha, alpha_torsion)
    }

    /// Graded Betti numbers of the two-term resolution
    /// `0 -> ⊕ F(-i)^{β_{1,i}} -> ⊕ F(-i)^{β_{0,i}} -> G -> 0`.
    pub fn betti_numbers(&self) -> (AlphaMap, AlphaMap) {
        let (alpha, alpha_torsion) = self.alpha_invariants();
        let mut betti0 = alpha;
        let mut betti1 = AlphaMap::new();
        for (&(i, j), &count) in &alpha_torsion {
            *betti0.entry(i).or_default() += count;
            *betti1.entry(i + j).or_default() += count;
        }
        (betti0, betti1)
    }

    /// `dim_k m^n / m^{n+1}`.
    pub fn hilbert_function(&self, n: usize) -> usize {
        let free = self.free_degrees.iter().filter(|&&d| d <= n).count();
        let torsion = self
            .torsion
            .iter()
            .filter(|(_, t)| t.degree <= n && n < t.degree + t.exponent)
            .count();
        free + torsion
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Summands grouped by `(degree, torsion exponent)` with free summands
    /// first in each degree.
    pub fn summands(&self) -> Vec<(Summand, usize)> {
        let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &d in &self.free_degrees {
            *counts.entry((d, 0)).or_default() += 1;
        }
        for &(_, t) in &self.torsion {
            *counts.entry((t.degree, t.exponent)).or_default() += 1;
        }
        counts
            .into_iter()
            .map(|((degree, exponent), count)| {
                let s = if exponent == 0 {
                    Summand::Free { degree }
                } else {
                    Summand::Torsion(TorsionSummand { degree, exponent })
                };
                (s, count)
            })
            .collect()
    }

    /// `F ⊕ F(-1)^2 ⊕ (F/x^3F)(-2)`, with `x` standing for `(t^e)*`.
    pub fn render(&self) -> String {
        self.render_with(" ⊕ ", false)
    }

    /// ASCII form, `F + F(-1)^2 + F/x^3(-2)`.
    pub fn render_ascii(&self) -> String {
        self.render_with(" + ", true)
    }

    fn render_with(&self, sep: &str, ascii: bool) -> String {
        self.summands()
            .iter()
            .map(|(s, count)| {
                let base = match s {
                    Summand::Free { degree: 0 } => "F".to_string(),
                    Summand::Free { degree } => format!("F(-{degree})"),
                    Summand::Torsion(t) if ascii => format!("F/x^{}(-{})", t.exponent, t.degree),
                    Summand::Torsion(t) if t.exponent == 1 => format!("(F/xF)(-{})", t.degree),
                    Summand::Torsion(t) => format!("(F/x^{}F)(-{})", t.exponent, t.degree),
                };
                if *count > 1 {
                    format!("{base}^{count}")
                } else {
                    base
                }
            })
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for TangentConeDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Summand {
    Free { degree: usize },
    Torsion(TorsionSummand),
}

/// The class of `t^exponent` in degree `degree`, lying in a torsion summand
/// of `column`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionMonomial {
    pub column: usize,
    pub degree: usize,
    pub exponent: i64,
    pub summand: TorsionSummand,
}

/// Monomial basis of the torsion submodule `T(G)`, in (column, degree) order.
pub fn torsion_monomials(
    table: &AperyTable,
    decomposition: &TangentConeDecomposition,
) -> Vec<TorsionMonomial> {
    let e = table.multiplicity() as i64;
    let mut out = Vec::new();
    for &(column, summand) in decomposition.torsion_by_column() {
        for n in summand.degree..summand.degree + summand.exponent {
            debug_assert_eq!(table.entry(n + 1, column), table.entry(n, column) + e);
            out.push(TorsionMonomial {
                column,
                degree: n,
                exponent: table.entry(n, column),
                summand,
            });
        }
    }
    out
}

/// Why the tangent cone fails to be Buchsbaum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonBuchsbaumWitness {
    /// A torsion summand with exponent > 1: `x* · (t^monomial)* ≠ 0`.
    TorsionExponent {
        column: usize,
        summand: TorsionSummand,
        monomial: i64,
    },
    /// `(t^generator)* · (t^monomial)* ≠ 0` in degree `degree + 1`.
    Product {
        column: usize,
        degree: usize,
        monomial: i64,
        generator: i64,
    },
}

impl NonBuchsbaumWitness {
    /// The witnessing product as `(a, g)`; for a long torsion summand the
    /// degree-one factor is `x = t^e`.
    pub fn product(&self, multiplicity: i64) -> (i64, i64) {
        match *self {
            NonBuchsbaumWitness::TorsionExponent { monomial, .. } => (monomial, multiplicity),
            NonBuchsbaumWitness::Product {
                monomial,
                generator,
                ..
            } => (monomial, generator),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BuchsbaumRoute {
    CohenMacaulay,
    TorsionExponent,
    SingleBox,
    ProductTest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchsbaumVerdict {
    pub buchsbaum: bool,
    pub route: BuchsbaumRoute,
    pub witness: Option<NonBuchsbaumWitness>,
}

pub fn is_buchsbaum(
    s: &NumericalSemigroup,
    table: &AperyTable,
    decomposition: &TangentConeDecomposition,
) -> BuchsbaumVerdict {
    let torsion = decomposition.torsion_by_column();
    if torsion.is_empty() {
        return BuchsbaumVerdict {
            buchsbaum: true,
            route: BuchsbaumRoute::CohenMacaulay,
            witness: None,
        };
    }
    if let Some(&(column, summand)) = torsion.iter().find(|(_, t)| t.exponent > 1) {
        return BuchsbaumVerdict {
            buchsbaum: false,
            route: BuchsbaumRoute::TorsionExponent,
            witness: Some(NonBuchsbaumWitness::TorsionExponent {
                column,
                summand,
                monomial: table.entry(summand.degree, column),
            }),
        };
    }
    if torsion.len() == 1 {
        // T(G) is one-dimensional and sits in the socle.
        return BuchsbaumVerdict {
            buchsbaum: true,
            route: BuchsbaumRoute::SingleBox,
            witness: None,
        };
    }
    let witness = full_product_test(s, table, decomposition);
    BuchsbaumVerdict {
        buchsbaum: witness.is_none(),
        route: BuchsbaumRoute::ProductTest,
        witness,
    }
}

/// Checks `G_1 · T(G) = 0` monomial by monomial: the product of `(t^g)*`
/// with a torsion class `(t^a)*` of degree `n` survives iff `ord(a + g) = n + 1`.
/// Returns the first surviving product in (column, degree, generator) order.
pub fn full_product_test(
    s: &NumericalSemigroup,
    table: &AperyTable,
    decomposition: &TangentConeDecomposition,
) -> Option<NonBuchsbaumWitness> {
    let mut chain = IdealChain::new(s);
    for m in torsion_monomials(table, decomposition) {
        for &g in s.minimal_generators() {
            if !chain.level(m.degree + 2).contains(m.exponent + g) {
                return Some(NonBuchsbaumWitness::Product {
                    column: m.column,
                    degree: m.degree,
                    monomial: m.exponent,
                    generator: g,
                });
            }
        }
    }
    None
}

/// Everything derived from one semigroup.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub table: AperyTable,
    pub decomposition: TangentConeDecomposition,
    pub buchsbaum: BuchsbaumVerdict,
}

impl Analysis {
    pub fn of(s: &NumericalSemigroup) -> Result<Self> {
        let table = build_apery_table(s)?;
        let decomposition = decompose_table(&table)?;
        let buchsbaum = is_buchsbaum(s, &table, &decomposition);
        Ok(Analysis {
            table,
            decomposition,
            buchsbaum,
        })
    }
}
