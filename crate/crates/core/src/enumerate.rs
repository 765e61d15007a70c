//! Enumeration of numerical semigroups along the semigroup tree.
//!
//! The root is the set of all naturals. The children of `S` are `S ∖ {g}`
//! for each minimal generator `g > F(S)`. Every numerical semigroup appears
//! exactly once. Along a branch the genus grows by one, the Frobenius
//! number grows strictly and the multiplicity never decreases, so all three
//! bounds prune whole subtrees.

use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TreeBounds {
    pub max_genus: Option<usize>,
    pub max_multiplicity: Option<i64>,
    pub max_frobenius: Option<i64>,
}

impl TreeBounds {
    pub fn genus(max_genus: usize) -> Self {
        TreeBounds {
            max_genus: Some(max_genus),
            ..Self::default()
        }
    }

    pub fn multiplicity_and_frobenius(max_multiplicity: i64, max_frobenius: i64) -> Self {
        TreeBounds {
            max_genus: None,
            max_multiplicity: Some(max_multiplicity),
            max_frobenius: Some(max_frobenius),
        }
    }

    /// Only a genus or a Frobenius bound makes the family finite.
    pub fn is_finite(&self) -> bool {
        self.max_genus.is_some() || self.max_frobenius.is_some()
    }

    fn admits(&self, s: &NumericalSemigroup) -> bool {
        self.max_genus.is_none_or(|g| s.genus() <= g)
            && self.max_multiplicity.is_none_or(|m| s.multiplicity() <= m)
            && self.max_frobenius.is_none_or(|f| s.frobenius() <= f)
    }
}

/// `S ∖ {g}` for a minimal generator `g > F(S)`. The child is generated by
/// the other minimal generators, their sums with `g`, and `2g`, `3g`.
pub fn remove_generator(s: &NumericalSemigroup, g: i64) -> NumericalSemigroup {
    let gens = s.minimal_generators();
    let mut child: Vec<i64> = gens.iter().copied().filter(|&n| n != g).collect();
    child.extend(gens.iter().filter(|&&n| n != g).map(|n| n + g));
    child.extend([2 * g, 3 * g]);
    NumericalSemigroup::new(&child).expect("removing a generator above F keeps gcd 1")
}

/// Children of `s` in the tree, by increasing removed generator.
pub fn children(s: &NumericalSemigroup) -> impl Iterator<Item = NumericalSemigroup> + '_ {
    let f = s.frobenius();
    s.minimal_generators()
        .iter()
        .filter(move |&&g| g > f)
        .map(move |&g| remove_generator(s, g))
}

/// Depth-first pre-order walk of the tree, children in increasing order of
/// the removed generator.
#[derive(Clone, Debug)]
pub struct SemigroupTree {
    bounds: TreeBounds,
    stack: Vec<NumericalSemigroup>,
}

impl SemigroupTree {
    /// Panics if the bounds do not describe a finite family.
    pub fn new(bounds: TreeBounds) -> Self {
        assert!(bounds.is_finite(), "need a genus or Frobenius bound");
        let root = NumericalSemigroup::new(&[1]).expect("naturals");
        SemigroupTree {
            bounds,
            stack: vec![root],
        }
    }
}

impl Iterator for SemigroupTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let s = self.stack.pop()?;
            if !self.bounds.admits(&s) {
                continue;
            }
            let mut kids: Vec<_> = children(&s).filter(|c| self.bounds.admits(c)).collect();
            kids.reverse();
            self.stack.extend(kids);
            return Some(s);
        }
    }
}
