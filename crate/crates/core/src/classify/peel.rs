use std::collections::HashMap;

use super::certificate::{BlockMeta, CertificateKind, PartitionCertificate};
use crate::bitset::RootSet;
use crate::ideals::Ideal;
use crate::rootsystem::RootPoset;

struct Peeler<'p> {
    poset: &'p RootPoset,
    memo: HashMap<RootSet, bool>,
}

impl Peeler<'_> {
    /// Minimal elements whose generated filter is a chain, in index order.
    fn moves(&self, set: RootSet) -> impl Iterator<Item = (usize, RootSet)> + '_ {
        self.poset
            .minimal_in(set)
            .into_iter()
            .map(move |m| (m, set & self.poset.up(m)))
            .filter(|&(_, f)| self.poset.is_chain(f))
    }

    fn peelable(&mut self, set: RootSet) -> bool {
        if set.is_empty() || self.poset.is_chain(set) {
            return true;
        }
        if let Some(&v) = self.memo.get(&set) {
            return v;
        }
        let moves: Vec<_> = self.moves(set).collect();
        let ok = moves.into_iter().any(|(_, f)| self.peelable(set - f));
        self.memo.insert(set, ok);
        ok
    }
}

/// A chain peeling of the ideal, found by backtracking over the choice of
/// minimal element with memoization on the remaining set.
pub fn chain_peeling(ideal: &Ideal<'_>) -> Option<PartitionCertificate> {
    let mut p = Peeler { poset: ideal.system().poset(), memo: HashMap::new() };
    let mut set = ideal.members();
    if !p.peelable(set) {
        return None;
    }
    let mut blocks = Vec::new();
    let mut meta = Vec::new();
    while !set.is_empty() {
        if p.poset.is_chain(set) {
            blocks.push(set);
            meta.push(BlockMeta::Chain { minimum: set.first().unwrap() });
            break;
        }
        let moves: Vec<_> = p.moves(set).collect();
        let (m, f) = moves
            .into_iter()
            .find(|&(_, f)| p.peelable(set - f))
            .expect("peelable set has a peelable move");
        blocks.push(f);
        meta.push(BlockMeta::Filter { alpha: m });
        set = set - f;
    }
    blocks.reverse();
    meta.reverse();
    Some(PartitionCertificate { kind: CertificateKind::Peeling, blocks, meta })
}

/// Greedy peeling: always take the first admissible minimal element and
/// never backtrack. Returns `None` if it gets stuck.
pub fn greedy_chain_peeling(ideal: &Ideal<'_>) -> Option<PartitionCertificate> {
    let p = Peeler { poset: ideal.system().poset(), memo: HashMap::new() };
    let mut set = ideal.members();
    let mut blocks = Vec::new();
    let mut meta = Vec::new();
    while !set.is_empty() {
        if p.poset.is_chain(set) {
            blocks.push(set);
            meta.push(BlockMeta::Chain { minimum: set.first().unwrap() });
            break;
        }
        let (m, f) = p.moves(set).next()?;
        blocks.push(f);
        meta.push(BlockMeta::Filter { alpha: m });
        set = set - f;
    }
    blocks.reverse();
    meta.reverse();
    Some(PartitionCertificate { kind: CertificateKind::Peeling, blocks, meta })
}
