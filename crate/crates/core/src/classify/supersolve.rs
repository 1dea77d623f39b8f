use std::collections::HashMap;

use super::certificate::{BlockMeta, CertificateKind, PartitionCertificate};
use crate::bitset::RootSet;
use crate::ideals::{Ideal, SubsystemView};
use crate::matroid::{two_flat_inside, Arrangement};
use crate::rootsystem::RootSystem;

struct Generic<'r, 'a> {
    arr: &'r Arrangement<'a>,
    memo: HashMap<RootSet, bool>,
}

impl Generic<'_, '_> {
    /// Coatoms `F` of the flat `x` whose complement contains no 2-flat of
    /// `x`, ordered by the complement's index list.
    fn moves(&self, x: RootSet, rank: usize) -> Vec<(RootSet, RootSet)> {
        let rs = self.arr.system();
        let mut out: Vec<(RootSet, RootSet)> = self
            .arr
            .flats()
            .level(rank - 1)
            .iter()
            .filter(|f| f.members.is_subset(x))
            .map(|f| (f.members, x - f.members))
            .filter(|&(_, top)| two_flat_inside(rs, x, top).is_none())
            .collect();
        out.sort_by_key(|(_, top)| top.to_vec());
        out
    }

    fn solvable(&mut self, x: RootSet, rank: usize) -> bool {
        if rank <= 1 {
            return true;
        }
        if let Some(&v) = self.memo.get(&x) {
            return v;
        }
        let ok = self.moves(x, rank).into_iter().any(|(f, _)| self.solvable(f, rank - 1));
        self.memo.insert(x, ok);
        ok
    }
}

/// Supersolving partition of an arbitrary set of positive roots, found by
/// choosing the last block as the complement of a coatom flat, top down.
pub fn is_supersolvable_generic(arr: &Arrangement<'_>) -> Option<PartitionCertificate> {
    let mut g = Generic { arr, memo: HashMap::new() };
    let mut x = arr.ground();
    let mut rank = arr.total_rank();
    if !g.solvable(x, rank) {
        return None;
    }
    let mut blocks = Vec::new();
    while rank > 0 {
        let (f, top) = if rank == 1 {
            (RootSet::EMPTY, x)
        } else {
            g.moves(x, rank).into_iter().find(|&(f, _)| g.solvable(f, rank - 1)).expect("solvable flat")
        };
        blocks.push(top);
        x = f;
        rank -= 1;
    }
    blocks.reverse();
    let meta = vec![BlockMeta::CoatomComplement; blocks.len()];
    Some(PartitionCertificate { kind: CertificateKind::Supersolving, blocks, meta })
}

struct RootIdeal<'a> {
    rs: &'a RootSystem,
    memo: HashMap<RootSet, bool>,
}

impl RootIdeal<'_> {
    fn is_view_chain(view: &SubsystemView<'_>, set: RootSet) -> bool {
        let v = set.to_vec();
        v.iter().enumerate().all(|(i, &g)| v[i + 1..].iter().all(|&h| view.view_leq(g, h) || view.view_leq(h, g)))
    }

    /// Top-block candidates: chains `F_I(δ_k)` first, then `G_I(δ_k, δ_l, a, b)`.
    fn moves(&self, set: RootSet) -> Vec<(RootSet, BlockMeta)> {
        let view = SubsystemView::spanned_by(self.rs, set);
        let n = self.rs.rank_of(set);
        let simple = view.simple();
        let admissible = |block: RootSet| {
            !block.is_empty()
                && self.rs.rank_of(set - block) + 1 == n
                && two_flat_inside(self.rs, set, block).is_none()
        };
        let mut out = Vec::new();
        for k in 0..simple.len() {
            let f = view.filter(set, k);
            if Self::is_view_chain(&view, f) && admissible(f) {
                out.push((f, BlockMeta::Filter { alpha: simple[k] }));
            }
        }
        for k in 0..simple.len() {
            for l in k + 1..simple.len() {
                for (a, b) in view.candidate_ab_pairs(k, l) {
                    let Some(c) = view.combination(k, l, a, b) else { continue };
                    if !set.contains(c) {
                        continue;
                    }
                    let g = view.g_set(set, k, l, a, b);
                    if admissible(g) {
                        out.push((g, BlockMeta::GSet { alpha: simple[k], beta: simple[l], a, b }));
                    }
                }
            }
        }
        out
    }

    fn solvable(&mut self, set: RootSet) -> bool {
        if self.rs.rank_of(set) <= 1 {
            return true;
        }
        if let Some(&v) = self.memo.get(&set) {
            return v;
        }
        let ok = self.moves(set).into_iter().any(|(b, _)| self.solvable(set - b));
        self.memo.insert(set, ok);
        ok
    }
}

/// Supersolving partition of `A_I` whose blocks are all of the form
/// `F(δ)` or `G(δ, δ′, a, b)` relative to the simple roots of the subsystem
/// spanned by what remains. The remainder after a `G`-block is an ideal of
/// that smaller subsystem, so recursion stays inside root ideals.
pub fn is_supersolvable_rootideal(ideal: &Ideal<'_>) -> Option<PartitionCertificate> {
    let rs = ideal.system();
    let mut s = RootIdeal { rs, memo: HashMap::new() };
    let mut set = ideal.members();
    if !s.solvable(set) {
        return None;
    }
    let mut blocks = Vec::new();
    let mut meta = Vec::new();
    while !set.is_empty() {
        if rs.rank_of(set) == 1 {
            blocks.push(set);
            meta.push(BlockMeta::Filter { alpha: set.first().unwrap() });
            break;
        }
        let (b, m) = s.moves(set).into_iter().find(|&(b, _)| s.solvable(set - b)).expect("solvable ideal");
        blocks.push(b);
        meta.push(m);
        set = set - b;
    }
    blocks.reverse();
    meta.reverse();
    Some(PartitionCertificate { kind: CertificateKind::Supersolving, blocks, meta })
}
