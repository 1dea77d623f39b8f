use serde::{Deserialize, Serialize};

use crate::bitset::RootSet;
use crate::error::{Error, Result};
use crate::matroid::two_flat_inside;
use crate::rootsystem::RootSystem;
use crate::Coord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Peeling,
    Supersolving,
}

/// How a block arose. Root indices refer to the parent system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockMeta {
    /// `F(α)`: the filter generated by a minimal element.
    Filter { alpha: usize },
    /// `G(α, β, a, b)` relative to the simple roots of the current subsystem.
    GSet { alpha: usize, beta: usize, a: Coord, b: Coord },
    /// A whole remaining chain, peeled as one block.
    Chain { minimum: usize },
    /// Complement of a coatom flat, from the generic search.
    CoatomComplement,
}

/// Ordered blocks `Π₁, …, Πₙ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionCertificate {
    pub kind: CertificateKind,
    pub blocks: Vec<RootSet>,
    pub meta: Vec<BlockMeta>,
}

impl PartitionCertificate {
    pub fn ground(&self) -> RootSet {
        self.blocks.iter().fold(RootSet::EMPTY, |a, &b| a | b)
    }

    pub fn top(&self) -> Option<RootSet> {
        self.blocks.last().copied()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }
}

/// Checks that the blocks are disjoint, that `Π₁ ∪ … ∪ Π_i` has rank `i`,
/// and that no 2-flat of `Π₁ ∪ … ∪ Π_i` lies inside `Π_i`.
pub fn validate_supersolving(rs: &RootSystem, blocks: &[RootSet]) -> std::result::Result<(), String> {
    let mut stage = RootSet::EMPTY;
    for (i, &block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(format!("block {} is empty", i + 1));
        }
        if stage.intersects(block) {
            return Err(format!("block {} overlaps earlier blocks", i + 1));
        }
        stage |= block;
        let r = rs.rank_of(stage);
        if r != i + 1 {
            return Err(format!("stage {} has rank {r}", i + 1));
        }
        if let Some((x, y)) = two_flat_inside(rs, stage, block) {
            return Err(format!(
                "block {} contains the 2-flat through {} and {}",
                i + 1,
                rs.format_root(x),
                rs.format_root(y)
            ));
        }
    }
    Ok(())
}

/// Checks the chain-peeling conditions: peeling from the top, every block is
/// a chain and an order filter of what remains and contains one of its
/// minimal elements.
pub fn validate_peeling(rs: &RootSystem, blocks: &[RootSet]) -> std::result::Result<(), String> {
    let poset = rs.poset();
    let mut remaining = blocks.iter().fold(RootSet::EMPTY, |a, &b| a | b);
    for (i, &block) in blocks.iter().enumerate().rev() {
        if !block.is_subset(remaining) {
            return Err(format!("block {} overlaps later blocks", i + 1));
        }
        if !poset.is_chain(block) {
            return Err(format!("block {} is not a chain", i + 1));
        }
        if !poset.is_up_closed_in(block, remaining) {
            return Err(format!("block {} is not an order filter", i + 1));
        }
        if !poset.minimal_in(remaining).intersects(block) {
            return Err(format!("block {} has no minimal element", i + 1));
        }
        remaining = remaining - block;
    }
    Ok(())
}

/// Block sizes `{|Π₁|, …, |Πₙ|}`, sorted. Fails unless the blocks form a
/// supersolving partition of their union.
pub fn exponents(rs: &RootSystem, cert: &PartitionCertificate) -> Result<Vec<usize>> {
    validate_supersolving(rs, &cert.blocks).map_err(Error::NotSupersolving)?;
    let mut sizes = cert.block_sizes();
    sizes.sort_unstable();
    Ok(sizes)
}
