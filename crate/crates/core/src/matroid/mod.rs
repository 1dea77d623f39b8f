//! The vector matroid of a set of positive roots.
//!
//! Flats are stored as bit sets over positive-root indices, restricted to
//! the ground set. Since the ground set lies inside `Φ⁺`, the closure in
//! the arrangement is `ground ∩ (Φ⁺ ∩ span S)`, and the inner closure is
//! memoized by the root system.
//!
//! Line-closedness reduces to independent sets. If every independent `B`
//! has a 2-closure `lc(B)` that is a flat, then any 2-closed `S` with a
//! maximal independent subset `B` satisfies `lc(B) ⊆ S ⊆ cl(S) = cl(B)`,
//! and `lc(B)` is a flat containing `B`, so `S = cl(B)` is a flat. The
//! converse is immediate because `lc(B)` is itself 2-closed.
//!
//! The fast decision procedure walks 2-closures outward from the empty set:
//! `lc(B ∪ {y}) = lc(lc(B) ∪ {y})`, and while every `lc(B)` seen so far is
//! a flat, the walk from `lc(B)` depends only on that set. So it suffices to
//! visit each distinct flat once, which makes the search proportional to
//! the number of flats instead of the number of independent sets.

mod polynomial;

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

pub use polynomial::Polynomial;

use crate::bitset::RootSet;
use crate::ideals::Ideal;
use crate::linalg::Echelon;
use crate::rootsystem::RootSystem;
use crate::Coord;

/// A closed subset of the ground set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Flat {
    pub members: RootSet,
    pub rank: usize,
}

/// All flats of an arrangement, grouped by rank.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    levels: Vec<Vec<Flat>>,
}

impl FlatLattice {
    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, k: usize) -> &[Flat] {
        self.levels.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Flat> {
        self.levels.iter().flatten()
    }
}

/// Outcome of the line-closedness test; `witness` is a 2-closed set that
/// is not a flat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineClosure {
    pub line_closed: bool,
    pub witness: Option<RootSet>,
}

pub struct Arrangement<'a> {
    system: &'a RootSystem,
    ground: RootSet,
    lattice: OnceLock<FlatLattice>,
}

impl<'a> Arrangement<'a> {
    pub fn new(system: &'a RootSystem, ground: RootSet) -> Self {
        assert!(ground.is_subset(system.all()), "ground set must consist of positive roots");
        Arrangement { system, ground, lattice: OnceLock::new() }
    }

    pub fn from_ideal(ideal: &Ideal<'a>) -> Self {
        Arrangement::new(ideal.system(), ideal.members())
    }

    pub fn system(&self) -> &'a RootSystem {
        self.system
    }

    pub fn ground(&self) -> RootSet {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    /// `cl(S) = A ∩ span S`.
    pub fn closure(&self, set: RootSet) -> Flat {
        let set = set & self.ground;
        let members = self.system.span_closure(set) & self.ground;
        Flat { members, rank: self.system.rank_of(set) }
    }

    pub fn rank(&self, set: RootSet) -> usize {
        self.system.rank_of(set & self.ground)
    }

    pub fn total_rank(&self) -> usize {
        self.rank(self.ground)
    }

    pub fn is_flat(&self, set: RootSet) -> bool {
        self.closure(set).members == set & self.ground
    }

    /// The lattice of flats, built once per arrangement.
    pub fn flats(&self) -> &FlatLattice {
        self.lattice.get_or_init(|| self.build_lattice())
    }

    fn build_lattice(&self) -> FlatLattice {
        let rs = self.system;
        // Each level stores (flat in A, Φ⁺ ∩ span) pairs.
        let mut levels: Vec<Vec<(RootSet, RootSet)>> = vec![vec![(RootSet::EMPTY, RootSet::EMPTY)]];
        loop {
            let prev = levels.last().unwrap();
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for &(members, span) in prev {
                let mut remaining = self.ground - members;
                while let Some(x) = remaining.first() {
                    let span2 = rs.extend_closure(span, x);
                    let flat = span2 & self.ground;
                    remaining = remaining - flat;
                    if seen.insert(flat) {
                        next.push((flat, span2));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_by_key(|(m, _)| m.to_vec());
            levels.push(next);
        }
        let levels = levels
            .into_iter()
            .enumerate()
            .map(|(rank, l)| l.into_iter().map(|(members, _)| Flat { members, rank }).collect())
            .collect();
        FlatLattice { levels }
    }

    /// All flats of rank 2.
    pub fn two_flats(&self) -> Vec<Flat> {
        self.flats().level(2).to_vec()
    }

    /// Subsets `B` with `rank(B) = |B|`, of sizes `1..=max_size`, in
    /// lexicographic order of their index lists.
    pub fn independent_sets(&self, max_size: usize) -> Vec<RootSet> {
        fn grow(
            arr: &Arrangement<'_>,
            elems: &[usize],
            start: usize,
            current: RootSet,
            basis: &Echelon<Coord>,
            max_size: usize,
            out: &mut Vec<RootSet>,
        ) {
            if current.len() == max_size {
                return;
            }
            for (pos, &x) in elems.iter().enumerate().skip(start) {
                let mut b = basis.clone();
                if b.insert(arr.system.root(x)) {
                    let next = current.with(x);
                    out.push(next);
                    grow(arr, elems, pos + 1, next, &b, max_size, out);
                }
            }
        }
        let elems = self.ground.to_vec();
        let mut out = Vec::new();
        grow(self, &elems, 0, RootSet::EMPTY, &Echelon::new(self.system.rank()), max_size, &mut out);
        out
    }

    /// The least 2-closed superset of `set`.
    pub fn two_closure(&self, set: RootSet) -> RootSet {
        self.two_closure_from(RootSet::EMPTY, set)
    }

    /// 2-closure of `closed ∪ extra`, where `closed` is already 2-closed.
    fn two_closure_from(&self, closed: RootSet, extra: RootSet) -> RootSet {
        let rs = self.system;
        let mut set = closed;
        let mut list: Vec<usize> = closed.to_vec();
        let mut i = list.len();
        for x in (extra & self.ground) - closed {
            set.insert(x);
            list.push(x);
        }
        while i < list.len() {
            let z = list[i];
            for j in 0..i {
                let add = (rs.pair_span(z, list[j]) & self.ground) - set;
                for x in add {
                    set.insert(x);
                    list.push(x);
                }
            }
            i += 1;
        }
        set
    }

    pub fn is_two_closed(&self, set: RootSet) -> bool {
        self.two_closure(set) == set & self.ground
    }

    /// Whether every 2-closed subset is a flat. On failure the witness is a
    /// 2-closed non-flat of the lowest possible rank, shrunk to the
    /// 2-closure of one of its bases.
    pub fn is_line_closed(&self) -> LineClosure {
        let mut visited: HashSet<RootSet> = HashSet::from([RootSet::EMPTY]);
        let mut queue = VecDeque::from([RootSet::EMPTY]);
        while let Some(s) = queue.pop_front() {
            for y in self.ground - s {
                let t = self.two_closure_from(s, RootSet::singleton(y));
                if !self.is_flat(t) {
                    return LineClosure { line_closed: false, witness: Some(self.shrink_witness(t)) };
                }
                if visited.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        LineClosure { line_closed: true, witness: None }
    }

    fn shrink_witness(&self, t: RootSet) -> RootSet {
        let mut basis = Echelon::<Coord>::new(self.system.rank());
        let b: RootSet = t.iter().filter(|&x| basis.insert(self.system.root(x))).collect();
        let lc = self.two_closure(b);
        debug_assert!(!self.is_flat(lc));
        lc
    }

    /// Line-closedness by checking `lc(B) = cl(B)` for every independent
    /// set `B` directly. Exponential; kept as an oracle for
    /// [`Arrangement::is_line_closed`].
    pub fn is_line_closed_by_independent_sets(&self) -> LineClosure {
        for b in self.independent_sets(self.total_rank()) {
            let lc = self.two_closure(b);
            if lc != self.closure(b).members {
                return LineClosure { line_closed: false, witness: Some(lc) };
            }
        }
        LineClosure { line_closed: true, witness: None }
    }

    /// `χ(t) = Σ_X μ(∅, X) t^{r − rank X}` over all flats, with `r` the
    /// rank of the arrangement.
    pub fn characteristic_polynomial(&self) -> Polynomial<Coord> {
        let lattice = self.flats();
        let r = lattice.rank();
        let mut coeffs = vec![0 as Coord; r + 1];
        let mut mobius: Vec<Vec<Coord>> = Vec::with_capacity(r + 1);
        for k in 0..=r {
            let level: Vec<Coord> = lattice
                .level(k)
                .iter()
                .map(|x| {
                    if k == 0 {
                        return 1;
                    }
                    let below: Coord = (0..k)
                        .flat_map(|j| lattice.level(j).iter().zip(&mobius[j]))
                        .filter(|(y, _)| y.members.is_subset(x.members))
                        .map(|(_, m)| *m)
                        .sum();
                    -below
                })
                .collect();
            coeffs[r - k] = level.iter().sum();
            mobius.push(level);
        }
        Polynomial::new(coeffs)
    }
}

/// A pair `x, y ∈ block` whose 2-flat in `within` lies entirely inside
/// `block`, if any.
pub fn two_flat_inside(rs: &RootSystem, within: RootSet, block: RootSet) -> Option<(usize, usize)> {
    let elems = block.to_vec();
    for (a, &x) in elems.iter().enumerate() {
        for &y in &elems[a + 1..] {
            if (rs.pair_span(x, y) & within).is_subset(block) {
                return Some((x, y));
            }
        }
    }
    None
}
