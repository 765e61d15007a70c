//! The Apery table: rows `Ap(nM)` for `0 <= n <= r`, columns indexed by
//! residue class modulo the multiplicity.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::IdealChain;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperyTable {
    multiplicity: usize,
    rows: Vec<Vec<i64>>,
}

impl AperyTable {
    /// Wraps raw rows without checking them; see [`validate_table`].
    /// The reduction number is taken to be `rows.len() - 1`.
    pub fn from_rows(multiplicity: usize, rows: Vec<Vec<i64>>) -> Self {
        AperyTable { multiplicity, rows }
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn reduction_number(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[i64] {
        &self.rows[n]
    }

    pub fn entry(&self, n: usize, i: usize) -> i64 {
        self.rows[n][i]
    }

    /// `Ap(nM)` for any `n`; rows past `r` are shifted copies of row `r`.
    pub fn row_extended(&self, n: usize) -> Vec<i64> {
        let r = self.reduction_number();
        if n <= r {
            return self.rows[n].clone();
        }
        let shift = ((n - r) * self.multiplicity) as i64;
        self.rows[r].iter().map(|w| w + shift).collect()
    }

    pub fn column(&self, i: usize) -> Vec<i64> {
        self.rows.iter().map(|row| row[i]).collect()
    }

    fn row_label(n: usize) -> String {
        match n {
            0 => "Ap(S)".to_string(),
            1 => "Ap(M)".to_string(),
            n => format!("Ap({n}M)"),
        }
    }
}

/// Rows `Ap(S), Ap(M), …, Ap(rM)` with right-aligned columns.
impl fmt::Display for AperyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label_width = (0..self.rows.len())
            .map(|n| Self::row_label(n).len())
            .max()
            .unwrap_or(0);
        let cell_width = self
            .rows
            .iter()
            .flatten()
            .map(|w| w.to_string().len())
            .max()
            .unwrap_or(1);
        for (n, row) in self.rows.iter().enumerate() {
            write!(f, "{:<label_width$} |", Self::row_label(n))?;
            for w in row {
                write!(f, " {w:>cell_width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Computes the table and the reduction number: `r` is the first level with
/// `Ap((r+1)M) = e + Ap(rM)`.
pub fn build_apery_table(s: &NumericalSemigroup) -> Result<AperyTable> {
    let e = s.multiplicity();
    let mut chain = IdealChain::new(s);
    let mut rows = vec![chain.level(0).apery_set()];
    for n in 0..e as usize {
        let next = chain.level(n + 1).apery_set();
        if next.iter().zip(&rows[n]).all(|(a, b)| *a == b + e) {
            return Ok(AperyTable::from_rows(e as usize, rows));
        }
        rows.push(next);
    }
    Err(Error::ReductionBoundExceeded(e as usize - 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableRule {
    /// Row does not have exactly `e` entries.
    Shape,
    /// Entry not congruent to its column index.
    Residue,
    /// Column 0 must read `n·e`.
    ColumnZero,
    /// Consecutive entries of a column differ by something other than 0 or `e`.
    Step,
    /// `Ap(M)` and `Ap(S)` differ outside column 0.
    FirstRow,
    /// More than `e` rows.
    ReductionBound,
}

/// A rule broken at `(row, column)`. Step violations are reported at the
/// later of the two rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub row: usize,
    pub column: usize,
    pub rule: TableRule,
}

pub fn validate_table(table: &AperyTable) -> Vec<Violation> {
    let e = table.multiplicity();
    let mut out = Vec::new();
    let mut push = |row, column, rule| out.push(Violation { row, column, rule });
    let rows = table.rows();
    for (n, row) in rows.iter().enumerate() {
        if row.len() != e {
            push(n, row.len(), TableRule::Shape);
            continue;
        }
        for (i, &w) in row.iter().enumerate() {
            if e > 0 && w.rem_euclid(e as i64) != i as i64 {
                push(n, i, TableRule::Residue);
            }
        }
        if e > 0 && row[0] != (n * e) as i64 {
            push(n, 0, TableRule::ColumnZero);
        }
        if n == 0 {
            continue;
        }
        let prev = &rows[n - 1];
        if prev.len() != e {
            continue;
        }
        for i in 0..e {
            let step = row[i] - prev[i];
            if step != 0 && step != e as i64 {
                push(n, i, TableRule::Step);
            }
            if n == 1 && i > 0 && step != 0 {
                push(n, i, TableRule::FirstRow);
            }
        }
    }
    if rows.len() > e.max(1) {
        push(rows.len() - 1, 0, TableRule::ReductionBound);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(gens: &[i64]) -> AperyTable {
        build_apery_table(&NumericalSemigroup::new(gens).unwrap()).unwrap()
    }

    #[test]
    fn five_six_thirteen() {
        let t = table(&[5, 6, 13]);
        assert_eq!(t.reduction_number(), 4);
        assert_eq!(
            t.rows(),
            &[
                vec![0, 6, 12, 13, 19],
                vec![5, 6, 12, 13, 19],
                vec![10, 11, 12, 18, 19],
                vec![15, 16, 17, 18, 24],
                vec![20, 21, 22, 23, 24],
            ]
        );
        assert_eq!(t.row_extended(5), vec![25, 26, 27, 28, 29]);
        assert_eq!(t.column(4), vec![19, 19, 19, 24, 24]);
    }

    #[test]
    fn small_cases() {
        let t = table(&[2, 3]);
        assert_eq!(t.reduction_number(), 1);
        assert_eq!(t.rows(), &[vec![0, 3], vec![2, 3]]);
        let t = table(&[1]);
        assert_eq!(t.reduction_number(), 0);
        assert_eq!(t.rows(), &[vec![0]]);
    }

    #[test]
    fn ten_seventeen_twentytwo_twentyeight() {
        let t = table(&[10, 17, 22, 28]);
        assert_eq!(t.reduction_number(), 4);
        assert_eq!(t.row(4), &[40, 61, 52, 73, 54, 65, 66, 47, 58, 59]);
        assert!(validate_table(&t).is_empty());
    }

    #[test]
    fn misprinted_column_zero_is_flagged() {
        let mut t = table(&[10, 11, 19]).rows().to_vec();
        let printed = [0, 10, 15, 20, 25, 30, 35, 40, 45];
        for (row, w) in t.iter_mut().zip(printed) {
            row[0] = w;
        }
        let v = validate_table(&AperyTable::from_rows(10, t));
        let first_step = v.iter().find(|v| v.rule == TableRule::Step).unwrap();
        assert_eq!((first_step.row, first_step.column), (2, 0));
        assert!(v.iter().all(|v| v.column == 0));
    }

    #[test]
    fn corrupted_residue_is_flagged() {
        let mut rows = table(&[5, 6, 13]).rows().to_vec();
        rows[1][3] = 14;
        let v = validate_table(&AperyTable::from_rows(5, rows));
        assert!(v.contains(&Violation {
            row: 1,
            column: 3,
            rule: TableRule::Residue
        }));
    }

    #[test]
    fn renders_labelled_rows() {
        let text = table(&[5, 6, 13]).to_string();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "Ap(S)  |  0  6 12 13 19");
        assert_eq!(lines[2], "Ap(2M) | 10 11 12 18 19");
    }
}
