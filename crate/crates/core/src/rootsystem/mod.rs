//! Finite crystallographic root systems in the simple-root basis.
//!
//! Cartan convention: `cartan[i][j] = ⟨α_j, α_i∨⟩ = 2(α_i, α_j) / (α_i, α_i)`.
//! The symmetrized form is `(α_i, α_j) = d_i · cartan[i][j]` with
//! `d_i = (α_i, α_i) / 2`; short roots have `d = 1`, long roots `d = 2`
//! (`B`, `C`, `F`) or `d = 3` (`G2`).
//!
//! Positive roots are generated height by height: for a root `γ` and a
//! simple root `α_i`, `γ + α_i` is a root iff `q = p − ⟨γ, α_i∨⟩ > 0`,
//! where `p` is the length of the `α_i`-string below `γ`. Roots are ordered
//! by height and then by descending coordinates, so simple root `α_{i+1}`
//! has index `i`.

mod format;
mod label;
mod poset;

use std::collections::HashMap;
use std::sync::OnceLock;

use dashmap::DashMap;
use num_traits::Zero;

pub use label::{Family, TypeLabel};
pub use poset::RootPoset;

use crate::bitset::RootSet;
use crate::error::{Error, Result};
use crate::linalg::{self, Echelon};
use crate::{Coord, Rational};

/// A root together with a sign: `s_α(α) = −α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedRoot {
    pub index: usize,
    pub positive: bool,
}

#[derive(Debug)]
pub struct RootSystem {
    label: TypeLabel,
    cartan: Vec<Vec<Coord>>,
    symmetrizer: Vec<Coord>,
    gram: Vec<Vec<Coord>>,
    neighbours: Vec<Vec<usize>>,
    roots: Vec<Vec<Coord>>,
    heights: Vec<usize>,
    index: HashMap<Vec<Coord>, usize>,
    poset: RootPoset,
    pair_spans: OnceLock<Vec<RootSet>>,
    // Memo for span closures: (Φ⁺ ∩ span S, x) ↦ Φ⁺ ∩ span(S ∪ {x}).
    extend_memo: DashMap<(RootSet, usize), RootSet>,
}

impl RootSystem {
    pub fn build(label: TypeLabel) -> Self {
        let n = label.rank();
        let (d, edges) = label.diagram();
        let mut gram = vec![vec![0; n]; n];
        let mut neighbours = vec![Vec::new(); n];
        for i in 0..n {
            gram[i][i] = 2 * d[i];
        }
        for &(i, j) in &edges {
            let b = -d[i].max(d[j]);
            gram[i][j] = b;
            gram[j][i] = b;
            neighbours[i].push(j);
            neighbours[j].push(i);
        }
        neighbours.iter_mut().for_each(|v| v.sort_unstable());
        let cartan: Vec<Vec<Coord>> = (0..n)
            .map(|i| (0..n).map(|j| gram[i][j] / d[i]).collect())
            .collect();

        let roots = generate_positive_roots(&cartan);
        let index: HashMap<Vec<Coord>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let heights: Vec<usize> = roots.iter().map(|r| r.iter().sum::<Coord>() as usize).collect();
        let poset = RootPoset::from_roots(&roots, &heights);

        RootSystem {
            label,
            cartan,
            symmetrizer: d,
            gram,
            neighbours,
            roots,
            heights,
            index,
            poset,
            pair_spans: OnceLock::new(),
            extend_memo: DashMap::new(),
        }
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.label.rank()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn cartan(&self) -> &[Vec<Coord>] {
        &self.cartan
    }

    /// `d_i = (α_i, α_i) / 2`.
    pub fn symmetrizer(&self) -> &[Coord] {
        &self.symmetrizer
    }

    /// Gram matrix of the simple roots under the symmetrized form.
    pub fn gram(&self) -> &[Vec<Coord>] {
        &self.gram
    }

    pub fn roots(&self) -> &[Vec<Coord>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[Coord] {
        &self.roots[i]
    }

    pub fn height(&self, i: usize) -> usize {
        self.heights[i]
    }

    pub fn all(&self) -> RootSet {
        RootSet::full(self.roots.len())
    }

    /// Root index of the simple root `α_{k+1}`.
    pub fn simple(&self, k: usize) -> usize {
        debug_assert_eq!(self.roots[k][k], 1);
        k
    }

    pub fn is_simple(&self, i: usize) -> bool {
        i < self.rank()
    }

    pub fn simple_roots(&self) -> RootSet {
        RootSet::full(self.rank())
    }

    pub fn index_of(&self, coords: &[Coord]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn poset(&self) -> &RootPoset {
        &self.poset
    }

    pub fn root_poset(&self) -> &RootPoset {
        &self.poset
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.poset.leq(i, j)
    }

    /// Simple-root indices where the root has a nonzero coordinate.
    pub fn support(&self, i: usize) -> RootSet {
        self.roots[i]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
            .collect()
    }

    pub fn dynkin_neighbours(&self, k: usize) -> &[usize] {
        &self.neighbours[k]
    }

    pub fn dynkin_degree(&self, k: usize) -> usize {
        self.neighbours[k].len()
    }

    /// Bond multiplicity `⟨α_i, α_j∨⟩⟨α_j, α_i∨⟩` between two simple roots.
    pub fn bond(&self, i: usize, j: usize) -> Coord {
        if i == j {
            0
        } else {
            self.cartan[i][j] * self.cartan[j][i]
        }
    }

    /// 1 for simply laced, 2 for doubly laced, 3 for `G2`.
    pub fn lacing(&self) -> Coord {
        let n = self.rank();
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| self.bond(i, j)).max().unwrap_or(0).max(1)
    }

    pub fn is_simply_laced(&self) -> bool {
        self.lacing() == 1
    }

    /// `(u, v)` for arbitrary coordinate vectors, as an integer.
    pub fn form(&self, u: &[Coord], v: &[Coord]) -> Coord {
        linalg::bilinear(&self.gram, u, v)
    }

    /// `(γ, δ)` for two positive roots.
    pub fn inner_product(&self, g: usize, h: usize) -> Result<Rational> {
        self.check_index(g)?;
        self.check_index(h)?;
        Ok(Rational::from_integer(self.form(&self.roots[g], &self.roots[h])))
    }

    /// `⟨v, α_k∨⟩ = Σ_j v_j · cartan[k][j]`.
    pub fn coroot_pairing(&self, v: &[Coord], k: usize) -> Coord {
        v.iter().zip(&self.cartan[k]).map(|(a, c)| a * c).sum()
    }

    /// Looks up `v` or `−v` among the positive roots.
    pub fn signed_index(&self, v: &[Coord]) -> Option<SignedRoot> {
        if let Some(&i) = self.index.get(v) {
            return Some(SignedRoot { index: i, positive: true });
        }
        let neg: Vec<Coord> = v.iter().map(|c| -c).collect();
        self.index.get(&neg).map(|&i| SignedRoot { index: i, positive: false })
    }

    /// Whether `v` is a root (of either sign).
    pub fn is_root(&self, v: &[Coord]) -> bool {
        self.signed_index(v).is_some()
    }

    /// Simple reflection `s_α(γ) = γ − ⟨γ, α∨⟩α`, where `alpha` is a root
    /// index that must be simple.
    pub fn reflect(&self, alpha: usize, gamma: usize) -> Result<SignedRoot> {
        self.check_index(alpha)?;
        self.check_index(gamma)?;
        if !self.is_simple(alpha) {
            return Err(Error::NotSimple(self.format_root(alpha)));
        }
        let image = self.reflect_vector(alpha, &self.roots[gamma]);
        Ok(self.signed_index(&image).expect("Weyl group preserves the root system"))
    }

    /// `s_{α_k}` applied to an arbitrary vector.
    pub fn reflect_vector(&self, k: usize, v: &[Coord]) -> Vec<Coord> {
        let c = self.coroot_pairing(v, k);
        let mut w = v.to_vec();
        w[k] -= c;
        w
    }

    /// Positive roots in the rational span of two independent roots.
    pub fn rank2_subsystem(&self, g1: usize, g2: usize) -> Result<RootSet> {
        self.check_index(g1)?;
        self.check_index(g2)?;
        if g1 == g2 {
            return Err(Error::ParallelRoots(self.format_root(g1), self.format_root(g2)));
        }
        Ok(self.pair_span(g1, g2))
    }

    /// `Φ⁺ ∩ span{γ_i, γ_j}` from the precomputed table (`{γ_i}` when
    /// `i == j`).
    #[inline]
    pub fn pair_span(&self, i: usize, j: usize) -> RootSet {
        let n = self.len();
        self.pair_spans.get_or_init(|| self.compute_pair_spans())[i * n + j]
    }

    fn compute_pair_spans(&self) -> Vec<RootSet> {
        let n = self.len();
        let mut table = vec![RootSet::EMPTY; n * n];
        for i in 0..n {
            table[i * n + i] = RootSet::singleton(i);
            for j in i + 1..n {
                let e = Echelon::from_rows(self.rank(), [self.root(i), self.root(j)]);
                let span: RootSet = (0..n).filter(|&k| k == i || k == j || e.contains(self.root(k))).collect();
                table[i * n + j] = span;
                table[j * n + i] = span;
            }
        }
        table
    }

    /// Dimension of the span of a set of roots.
    pub fn rank_of(&self, set: RootSet) -> usize {
        let mut e = Echelon::<Coord>::new(self.rank());
        for i in set {
            e.insert(&self.roots[i]);
            if e.rank() == self.rank() {
                break;
            }
        }
        e.rank()
    }

    /// `Φ⁺ ∩ span(set)`.
    pub fn span_closure(&self, set: RootSet) -> RootSet {
        set.iter().fold(RootSet::EMPTY, |flat, x| self.extend_closure(flat, x))
    }

    /// `Φ⁺ ∩ span(flat ∪ {x})`, where `flat` is already span-closed in `Φ⁺`.
    pub fn extend_closure(&self, flat: RootSet, x: usize) -> RootSet {
        if flat.contains(x) {
            return flat;
        }
        if flat.is_empty() {
            return RootSet::singleton(x);
        }
        if let Some(hit) = self.extend_memo.get(&(flat, x)) {
            return *hit;
        }
        let mut e = Echelon::<Coord>::new(self.rank());
        for i in flat {
            e.insert(&self.roots[i]);
        }
        e.insert(&self.roots[x]);
        let out = if e.rank() == self.rank() {
            self.all()
        } else {
            (0..self.len())
                .filter(|&k| flat.contains(k) || k == x || e.contains(&self.roots[k]))
                .collect()
        };
        self.extend_memo.insert((flat, x), out);
        out
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(i))
        }
    }
}

impl Clone for RootSystem {
    fn clone(&self) -> Self {
        RootSystem::build(self.label)
    }
}

/// Height-by-height generation from the simple roots using root strings.
fn generate_positive_roots(cartan: &[Vec<Coord>]) -> Vec<Vec<Coord>> {
    let n = cartan.len();
    let unit = |k: usize| (0..n).map(|j| Coord::from(j == k)).collect::<Vec<_>>();
    let mut known: std::collections::HashSet<Vec<Coord>> = (0..n).map(unit).collect();
    let mut all: Vec<Vec<Coord>> = (0..n).map(unit).collect();
    let mut layer: Vec<Vec<Coord>> = all.clone();
    while !layer.is_empty() {
        let mut next: Vec<Vec<Coord>> = Vec::new();
        for g in &layer {
            for k in 0..n {
                // p: how far the α_k-string extends below γ.
                let mut p = 0;
                let mut down = g.clone();
                loop {
                    down[k] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: Coord = g.iter().zip(&cartan[k]).map(|(a, c)| a * c).sum();
                if p - pairing > 0 {
                    let mut up = g.clone();
                    up[k] += 1;
                    if !known.contains(&up) && !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        for r in &next {
            known.insert(r.clone());
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| {
        let ha: Coord = a.iter().sum();
        let hb: Coord = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    #[test]
    fn a2_roots_in_order() {
        let rs = sys("A2");
        let labels: Vec<String> = (0..rs.len()).map(|i| rs.format_root(i)).collect();
        assert_eq!(labels, ["10", "01", "11"]);
    }

    #[test]
    fn cartan_matrices_follow_convention() {
        let b2 = sys("B2");
        assert_eq!(b2.cartan(), &[vec![2, -1], vec![-2, 2]]);
        let g2 = sys("G2");
        assert_eq!(g2.cartan(), &[vec![2, -3], vec![-1, 2]]);
        let f4 = sys("F4");
        assert_eq!(f4.cartan()[1][2], -2);
        assert_eq!(f4.cartan()[2][1], -1);
    }

    #[test]
    fn lacing_metadata() {
        assert_eq!(sys("E6").lacing(), 1);
        assert_eq!(sys("C3").lacing(), 2);
        assert_eq!(sys("G2").lacing(), 3);
    }

    #[test]
    fn reflection_rejects_non_simple() {
        let rs = sys("A2");
        assert!(matches!(rs.reflect(2, 0), Err(Error::NotSimple(_))));
        assert!(matches!(rs.reflect(0, 9), Err(Error::IndexOutOfRange(9))));
    }

    #[test]
    fn rank2_rejects_parallel() {
        let rs = sys("A2");
        assert!(rs.rank2_subsystem(1, 1).is_err());
    }

    #[test]
    fn span_closure_of_simple_roots_is_everything() {
        let rs = sys("D4");
        assert_eq!(rs.span_closure(rs.simple_roots()), rs.all());
        assert_eq!(rs.span_closure(RootSet::EMPTY), RootSet::EMPTY);
    }
}
