//! Ladders and landings.
//!
//! A ladder is a non-decreasing sequence `a_0 <= … <= a_n`. A landing is a
//! maximal run `a_s = … = a_t` with `t >= s + 1`; it is a true landing when
//! `s >= 1`. Between consecutive landings the ladder strictly increases.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Landing {
    pub start: usize,
    pub end: usize,
}

impl Landing {
    /// Number of equalities in the run, `k` in `a_s = … = a_{s+k}`.
    pub fn length(&self) -> usize {
        self.end - self.start
    }

    pub fn is_true_landing(&self) -> bool {
        self.start >= 1
    }
}

/// One climb between landing `j-1` and landing `j`: it starts at index
/// `b = e(L_{j-1})` and takes `c = s(L_j) - e(L_{j-1})` strict steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Climb {
    pub b: usize,
    pub c: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderProfile {
    pub len: usize,
    pub landings: Vec<Landing>,
    pub climbs: Vec<Climb>,
}

impl LadderProfile {
    /// Number of landings minus one; `-1` when there are none.
    pub fn l(&self) -> isize {
        self.landings.len() as isize - 1
    }

    /// End index of the last landing.
    pub fn d(&self) -> Option<usize> {
        self.landings.last().map(|l| l.end)
    }

    pub fn has_true_landing(&self) -> bool {
        self.landings.iter().any(Landing::is_true_landing)
    }

    /// Rebuilds a ladder whose strict steps all equal `step`.
    pub fn reconstruct(&self, first: i64, step: i64) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.len);
        if self.len == 0 {
            return out;
        }
        out.push(first);
        for k in 1..self.len {
            let flat = self.landings.iter().any(|l| l.start < k && k <= l.end);
            let prev = out[k - 1];
            out.push(if flat { prev } else { prev + step });
        }
        out
    }
}

pub fn analyze_ladder(values: &[i64]) -> Result<LadderProfile> {
    if let Some(k) = values.windows(2).position(|w| w[1] < w[0]) {
        return Err(Error::NotALadder { index: k + 1 });
    }
    let mut landings = Vec::new();
    let mut start = 0;
    for k in 1..=values.len() {
        if k == values.len() || values[k] != values[start] {
            if k - 1 > start {
                landings.push(Landing { start, end: k - 1 });
            }
            start = k;
        }
    }
    let climbs = landings
        .windows(2)
        .map(|w| Climb {
            b: w[0].end,
            c: w[1].start - w[0].end,
        })
        .collect();
    Ok(LadderProfile {
        len: values.len(),
        landings,
        climbs,
    })
}
