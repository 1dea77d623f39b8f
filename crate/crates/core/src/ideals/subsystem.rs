use num_traits::{One, Zero};

use crate::bitset::RootSet;
use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsystem::RootSystem;
use crate::Coord;

/// The positive roots of a root subsystem `Φ′ = Φ ∩ span Δ′`, with
/// coordinates in the basis `Δ′`.
///
/// For `Δ′ ⊆ Φ⁺` of this kind, `Φ′⁺ = Φ⁺ ∩ span Δ′` and its root poset is the
/// order induced from `Φ⁺`, so membership and order are read off the parent.
#[derive(Clone, Debug)]
pub struct SubsystemView<'a> {
    parent: &'a RootSystem,
    simple: Vec<usize>,
    roots: RootSet,
    coords: Vec<Vec<Coord>>,
}

impl<'a> SubsystemView<'a> {
    /// The whole system viewed as a subsystem of itself.
    pub fn whole(parent: &'a RootSystem) -> Self {
        SubsystemView {
            parent,
            simple: (0..parent.rank()).collect(),
            roots: parent.all(),
            coords: parent.roots().to_vec(),
        }
    }

    /// `Φ⁺ ∩ span(set)` with its simple roots, which are the indecomposable
    /// elements, ordered by parent index.
    pub fn spanned_by(parent: &'a RootSystem, set: RootSet) -> Self {
        let roots = parent.span_closure(set);
        if roots == parent.all() {
            return SubsystemView::whole(parent);
        }
        let mut decomposable = RootSet::EMPTY;
        let members = roots.to_vec();
        for (a, &x) in members.iter().enumerate() {
            for &y in &members[a + 1..] {
                let sum: Vec<Coord> = parent.root(x).iter().zip(parent.root(y)).map(|(p, q)| p + q).collect();
                if let Some(z) = parent.index_of(&sum) {
                    decomposable.insert(z);
                }
            }
        }
        let simple = (roots - decomposable).to_vec();
        Self::with_simple(parent, simple).expect("indecomposable roots form a simple system")
    }

    /// The subsystem with the given simple roots (parent indices, in order).
    /// Fails unless every positive root in their span has nonnegative
    /// integer coordinates with respect to them.
    pub fn with_simple(parent: &'a RootSystem, simple: Vec<usize>) -> Result<Self> {
        let roots = parent.span_closure(simple.iter().copied().collect());
        let basis: Vec<Vec<Coord>> = simple.iter().map(|&s| parent.root(s).to_vec()).collect();
        if linalg::rank(parent.rank(), &basis) != simple.len() {
            return Err(Error::BadCoordinates("dependent simple roots".into()));
        }
        let mut coords = vec![Vec::new(); parent.len()];
        for g in roots {
            let c = linalg::solve_in_basis(&basis, parent.root(g)).expect("root lies in the span");
            if c.iter().any(|q| !q.denom().is_one() || q.numer() < &0) {
                return Err(Error::BadCoordinates(format!(
                    "{} is not a nonnegative integer combination of the simple roots",
                    parent.format_root(g)
                )));
            }
            coords[g] = c.iter().map(|q| *q.numer()).collect();
        }
        Ok(SubsystemView { parent, simple, roots, coords })
    }

    pub fn parent(&self) -> &'a RootSystem {
        self.parent
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    /// Parent indices of `Δ′`.
    pub fn simple(&self) -> &[usize] {
        &self.simple
    }

    pub fn simple_set(&self) -> RootSet {
        self.simple.iter().copied().collect()
    }

    /// `Φ′⁺` as parent indices.
    pub fn roots(&self) -> RootSet {
        self.roots
    }

    /// Coordinates of a member of `Φ′⁺` in the basis `Δ′`.
    pub fn coords(&self, g: usize) -> &[Coord] {
        debug_assert!(self.roots.contains(g));
        &self.coords[g]
    }

    /// Componentwise order in `Δ′` coordinates.
    pub fn view_leq(&self, g: usize, h: usize) -> bool {
        self.coords(g).iter().zip(self.coords(h)).all(|(a, b)| a <= b)
    }

    /// Whether the order on `Φ′⁺` from `Δ′` coordinates equals the order
    /// induced from the parent root poset.
    pub fn order_is_induced(&self) -> bool {
        let poset = self.parent.poset();
        self.roots.iter().all(|g| self.roots.iter().all(|h| self.view_leq(g, h) == poset.leq(g, h)))
    }

    /// `{γ ∈ set : γ ≥ δ_k}` where `δ_k` is the `k`-th simple root of the view.
    pub fn filter(&self, set: RootSet, k: usize) -> RootSet {
        (set & self.roots).iter().filter(|&g| self.coords[g][k] > 0).collect()
    }

    /// `G(δ_k, δ_l, a, b)` inside `set`: members whose `(k, l)` coordinate
    /// pair is not a nonnegative multiple of `(a, b)`.
    pub fn g_set(&self, set: RootSet, k: usize, l: usize, a: Coord, b: Coord) -> RootSet {
        (set & self.roots)
            .iter()
            .filter(|&g| !is_multiple(self.coords[g][k], self.coords[g][l], a, b))
            .collect()
    }

    /// All `(a, b)` with `a, b ≥ 1` and `a δ_k + b δ_l ∈ Φ′⁺`.
    pub fn candidate_ab_pairs(&self, k: usize, l: usize) -> Vec<(Coord, Coord)> {
        if k == l {
            return Vec::new();
        }
        self.roots
            .iter()
            .filter_map(|g| {
                let c = &self.coords[g];
                let outside = c.iter().enumerate().any(|(m, x)| m != k && m != l && !x.is_zero());
                (!outside && c[k] > 0 && c[l] > 0).then(|| (c[k], c[l]))
            })
            .collect()
    }

    /// Parent index of `a δ_k + b δ_l`, if it is a root.
    pub fn combination(&self, k: usize, l: usize, a: Coord, b: Coord) -> Option<usize> {
        let v: Vec<Coord> = self
            .parent
            .root(self.simple[k])
            .iter()
            .zip(self.parent.root(self.simple[l]))
            .map(|(x, y)| a * x + b * y)
            .collect();
        self.parent.index_of(&v)
    }

    /// The view `Δ″ = {a δ_k + b δ_l} ∪ Δ′ ∖ {δ_k, δ_l}`, with the new root in
    /// the position of `min(k, l)`.
    pub fn contract(&self, k: usize, l: usize, a: Coord, b: Coord) -> Result<SubsystemView<'a>> {
        let new = self.combination(k, l, a, b).ok_or_else(|| {
            Error::NotARoot(format!("{a}·{} + {b}·{}", self.parent.format_root(self.simple[k]), self.parent.format_root(self.simple[l])))
        })?;
        let keep = k.min(l);
        let drop = k.max(l);
        let simple = self
            .simple
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != drop)
            .map(|(m, &s)| if m == keep { new } else { s })
            .collect();
        SubsystemView::with_simple(self.parent, simple)
    }
}

pub(crate) fn is_multiple(x: Coord, y: Coord, a: Coord, b: Coord) -> bool {
    if x < 0 || y < 0 || x % a != 0 {
        return false;
    }
    y == (x / a) * b
}
