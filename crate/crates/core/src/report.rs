//! Serializable per-semigroup report.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::apery::AperyTable;
use crate::error::Result;
use crate::oracle::{check_analysis, Check};
use crate::semigroup::NumericalSemigroup;
use crate::tangent_cone::Analysis;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionEntry {
    pub b: usize,
    pub c: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaTorsionEntry {
    pub i: usize,
    pub j: usize,
    pub count: usize,
}

/// `(t^g)* · (t^a)* ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub a: i64,
    pub g: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub generators: Vec<i64>,
    pub minimal_generators: Vec<i64>,
    pub e: i64,
    pub b: usize,
    pub frobenius: i64,
    pub genus: usize,
    pub r: usize,
    pub apery_table: Vec<Vec<i64>>,
    pub decomposition: String,
    pub free_degrees: Vec<usize>,
    pub torsion: Vec<TorsionEntry>,
    pub alpha: BTreeMap<usize, usize>,
    pub alpha_ij: Vec<AlphaTorsionEntry>,
    pub betti0: BTreeMap<usize, usize>,
    pub betti1: BTreeMap<usize, usize>,
    /// Hilbert function in degrees `0..=r+1`.
    pub hilbert: Vec<usize>,
    pub cohen_macaulay: bool,
    pub buchsbaum: bool,
    pub certificate: Option<Certificate>,
    #[serde(default)]
    pub checks: Vec<Check>,
}

impl Report {
    /// Analyzes the semigroup generated by `generators` and, when
    /// `with_checks` is set, runs the oracle cross-checks as well.
    pub fn build(generators: &[i64], with_checks: bool) -> Result<Self> {
        let s = NumericalSemigroup::new(generators)?;
        let analysis = Analysis::of(&s)?;
        let checks = if with_checks {
            check_analysis(&s, &analysis).checks
        } else {
            Vec::new()
        };
        Ok(Self::from_analysis(generators, &s, &analysis, checks))
    }

    pub fn from_analysis(
        generators: &[i64],
        s: &NumericalSemigroup,
        analysis: &Analysis,
        checks: Vec<Check>,
    ) -> Self {
        let d = &analysis.decomposition;
        let r = d.reduction_number();
        let (alpha, alpha_torsion) = d.alpha_invariants();
        let (betti0, betti1) = d.betti_numbers();
        Report {
            generators: generators.to_vec(),
            minimal_generators: s.minimal_generators().to_vec(),
            e: s.multiplicity(),
            b: s.embedding_dimension(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            r,
            apery_table: analysis.table.rows().to_vec(),
            decomposition: d.render(),
            free_degrees: d.free_degrees().to_vec(),
            torsion: d
                .torsion_summands()
                .into_iter()
                .map(|t| TorsionEntry {
                    b: t.degree,
                    c: t.exponent,
                })
                .collect(),
            alpha,
            alpha_ij: alpha_torsion
                .into_iter()
                .map(|((i, j), count)| AlphaTorsionEntry { i, j, count })
                .collect(),
            betti0,
            betti1,
            hilbert: (0..=r + 1).map(|n| d.hilbert_function(n)).collect(),
            cohen_macaulay: d.is_cohen_macaulay(),
            buchsbaum: analysis.buchsbaum.buchsbaum,
            certificate: analysis.buchsbaum.witness.map(|w| {
                let (a, g) = w.product(s.multiplicity());
                Certificate { a, g }
            }),
            checks,
        }
    }

    pub fn checks_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn table(&self) -> AperyTable {
        AperyTable::from_rows(self.e as usize, self.apery_table.clone())
    }
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn degree_map(name: &str, m: &BTreeMap<usize, usize>) -> String {
    if m.is_empty() {
        return "none".to_string();
    }
    join(m.iter().map(|(k, v)| format!("{name}_{k}={v}")), ", ")
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "S = <{}>", join(&self.minimal_generators, ", "))?;
        writeln!(
            f,
            "multiplicity e = {}, embedding dimension b = {}",
            self.e, self.b
        )?;
        writeln!(
            f,
            "Frobenius number = {}, genus = {}",
            self.frobenius, self.genus
        )?;
        writeln!(f, "reduction number r = {}", self.r)?;
        writeln!(f)?;
        write!(f, "{}", self.table())?;
        writeln!(f)?;
        writeln!(f, "G = {}   (x = (t^{})*)", self.decomposition, self.e)?;
        writeln!(f, "alpha: {}", degree_map("a", &self.alpha))?;
        let torsion_alpha = if self.alpha_ij.is_empty() {
            "none".to_string()
        } else {
            join(
                self.alpha_ij
                    .iter()
                    .map(|t| format!("a_{},{}={}", t.i, t.j, t.count)),
                ", ",
            )
        };
        writeln!(f, "alpha (torsion): {torsion_alpha}")?;
        writeln!(f, "betti 0: {}", degree_map("b0", &self.betti0))?;
        writeln!(f, "betti 1: {}", degree_map("b1", &self.betti1))?;
        writeln!(f, "Hilbert function: {}", join(&self.hilbert, " "))?;
        writeln!(f, "Cohen-Macaulay: {}", yes_no(self.cohen_macaulay))?;
        let mut line = String::new();
        if self.buchsbaum {
            line.push_str("Buchsbaum: yes");
        } else {
            line.push_str("Buchsbaum: no");
            if let Some(c) = self.certificate {
                let _ = write!(
                    line,
                    "\n  not Buchsbaum, certificate (t^{})*·(t^{})* = (t^{})* ≠ 0",
                    c.g,
                    c.a,
                    c.a + c.g
                );
            }
        }
        writeln!(f, "{line}")?;
        if !self.checks.is_empty() {
            let passed = self.checks.iter().filter(|c| c.passed).count();
            writeln!(f, "checks: {passed}/{} passed", self.checks.len())?;
            for c in self.checks.iter().filter(|c| !c.passed) {
                writeln!(
                    f,
                    "  FAILED {}: {}",
                    c.name,
                    c.detail.as_deref().unwrap_or("")
                )?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_keys_and_values() {
        let rep = Report::build(&[10, 19, 47], false).unwrap();
        let v: serde_json::Value = serde_json::from_str(&rep.to_json().unwrap()).unwrap();
        let alpha = v["alpha"].as_object().unwrap();
        assert_eq!(alpha.len(), 10);
        assert!(alpha.values().all(|c| c == 1));
        assert_eq!(v["r"], 9);
        assert_eq!(v["certificate"].is_null(), v["buchsbaum"] == true);
        for key in [
            "generators",
            "e",
            "b",
            "frobenius",
            "genus",
            "apery_table",
            "free_degrees",
            "torsion",
            "alpha_ij",
            "betti0",
            "betti1",
            "hilbert",
            "cohen_macaulay",
            "buchsbaum",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
    }

    #[test]
    fn text_mentions_certificate() {
        let rep = Report::build(&[5, 6, 13], true).unwrap();
        let text = rep.to_string();
        assert!(text.contains("certificate (t^6)*·(t^13)*"), "{text}");
        assert!(text.contains("Ap(4M) | 20 21 22 23 24"));
        assert!(text.contains("checks: 9/9 passed"));
    }

    #[test]
    fn round_trip() {
        for gens in [vec![5, 6, 13], vec![1], vec![9, 10, 11, 23]] {
            let rep = Report::build(&gens, true).unwrap();
            let back = Report::from_json(&rep.to_json().unwrap()).unwrap();
            assert_eq!(back, rep);
        }
    }
}
