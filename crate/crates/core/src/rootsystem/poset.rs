use crate::bitset::RootSet;
use crate::Coord;

/// Componentwise order on the positive roots.
#[derive(Clone, Debug)]
pub struct RootPoset {
    above: Vec<RootSet>,
    below: Vec<RootSet>,
    covers: Vec<(usize, usize)>,
    heights: Vec<usize>,
}

impl RootPoset {
    pub(crate) fn from_roots(roots: &[Vec<Coord>], heights: &[usize]) -> Self {
        let n = roots.len();
        let leq = |a: &[Coord], b: &[Coord]| a.iter().zip(b).all(|(x, y)| x <= y);
        let mut above = vec![RootSet::EMPTY; n];
        let mut below = vec![RootSet::EMPTY; n];
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if leq(&roots[i], &roots[j]) {
                    above[i].insert(j);
                    below[j].insert(i);
                    if heights[j] == heights[i] + 1 {
                        covers.push((i, j));
                    }
                }
            }
        }
        RootPoset { above, below, covers, heights: heights.to_vec() }
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    /// `{γ : γ ≥ γ_i}` including `i`.
    #[inline]
    pub fn up(&self, i: usize) -> RootSet {
        self.above[i]
    }

    /// `{γ : γ ≤ γ_i}` including `i`.
    #[inline]
    pub fn down(&self, i: usize) -> RootSet {
        self.below[i]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn height(&self, i: usize) -> usize {
        self.heights[i]
    }

    pub fn upper_covers(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers.iter().filter(move |c| c.0 == i).map(|c| c.1)
    }

    pub fn lower_covers(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers.iter().filter(move |c| c.1 == i).map(|c| c.0)
    }

    /// Elements of `set` with nothing of `set` strictly below them.
    pub fn minimal_in(&self, set: RootSet) -> RootSet {
        set.iter().filter(|&i| (self.below[i] & set) == RootSet::singleton(i)).collect()
    }

    /// Elements of `set` with nothing of `set` strictly above them.
    pub fn maximal_in(&self, set: RootSet) -> RootSet {
        set.iter().filter(|&i| (self.above[i] & set) == RootSet::singleton(i)).collect()
    }

    /// Whether `set` is totally ordered.
    pub fn is_chain(&self, set: RootSet) -> bool {
        set.iter().all(|i| set.is_subset(self.above[i] | self.below[i]))
    }

    pub fn is_down_closed(&self, set: RootSet) -> bool {
        set.iter().all(|i| self.below[i].is_subset(set))
    }

    /// Whether `set` is up-closed inside `within`.
    pub fn is_up_closed_in(&self, set: RootSet, within: RootSet) -> bool {
        set.iter().all(|i| (self.above[i] & within).is_subset(set))
    }

    /// Downward closure.
    pub fn ideal_generated(&self, gens: RootSet) -> RootSet {
        gens.iter().fold(RootSet::EMPTY, |acc, g| acc | self.below[g])
    }

    /// `[β₁, β₂]`.
    pub fn interval(&self, lo: usize, hi: usize) -> RootSet {
        self.above[lo] & self.below[hi]
    }
}
