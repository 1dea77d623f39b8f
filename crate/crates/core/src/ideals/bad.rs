//! Detectors for the two minimal non-supersolvable configurations.

use serde::{Deserialize, Serialize};

use super::Ideal;
use crate::bitset::RootSet;
use crate::rootsystem::{Family, RootSystem};
use crate::Coord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BadIdealKind {
    Star,
    F4,
}

/// Witness that an ideal contains a minimal bad ideal.
///
/// `simple` holds `α₁, α₂, α₃, α₄` (root indices). `generators` holds
/// `γ₁, γ₃, γ₄` for a star (`γ₄ = α₁+α₂+α₃`, `γ₃ = α₁+α₂+α₄`,
/// `γ₁ = α₂+α₃+α₄`) and `η₁, η₂, η₃` for `F4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadIdealWitness {
    pub kind: BadIdealKind,
    pub simple: [usize; 4],
    pub generators: [usize; 3],
}

impl BadIdealWitness {
    /// The bad ideal itself: the downward closure of the generators.
    pub fn ideal(&self, rs: &RootSystem) -> RootSet {
        rs.poset().ideal_generated(self.generators.iter().copied().collect())
    }
}

fn sum_index(rs: &RootSystem, simple: &[usize]) -> Option<usize> {
    let mut v = vec![0 as Coord; rs.rank()];
    for &s in simple {
        v[s] += 1;
    }
    rs.index_of(&v)
}

/// Looks for distinct simple roots `α₁..α₄` with `α₁+α₂+α₃`, `α₁+α₂+α₄` and
/// `α₂+α₃+α₄` all in `I`. Only simply laced systems are searched, and only
/// nodes of Dynkin degree at least 3 can serve as `α₂`.
pub fn find_star_ideal(ideal: &Ideal<'_>) -> Option<BadIdealWitness> {
    let rs = ideal.system();
    if !rs.is_simply_laced() {
        return None;
    }
    for centre in 0..rs.rank() {
        let nb = rs.dynkin_neighbours(centre);
        if nb.len() < 3 {
            continue;
        }
        for x in 0..nb.len() {
            for y in x + 1..nb.len() {
                for z in y + 1..nb.len() {
                    let (a1, a3, a4) = (nb[x], nb[y], nb[z]);
                    let g4 = sum_index(rs, &[a1, centre, a3]);
                    let g3 = sum_index(rs, &[a1, centre, a4]);
                    let g1 = sum_index(rs, &[centre, a3, a4]);
                    if let (Some(g1), Some(g3), Some(g4)) = (g1, g3, g4) {
                        if ideal.contains(g1) && ideal.contains(g3) && ideal.contains(g4) {
                            return Some(BadIdealWitness {
                                kind: BadIdealKind::Star,
                                simple: [a1, centre, a3, a4],
                                generators: [g1, g3, g4],
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// `Î`, the `F4` roots of height at most 4 (13 roots). `None` for other types.
pub fn f4_bad_ideal(rs: &RootSystem) -> Option<RootSet> {
    (rs.label().family() == Family::F).then(|| (0..rs.len()).filter(|&i| rs.height(i) <= 4).collect())
}

pub fn contains_f4_bad_ideal(ideal: &Ideal<'_>) -> bool {
    f4_bad_ideal(ideal.system()).is_some_and(|hat| hat.is_subset(ideal.members()))
}

fn f4_witness(ideal: &Ideal<'_>) -> Option<BadIdealWitness> {
    if !contains_f4_bad_ideal(ideal) {
        return None;
    }
    let rs = ideal.system();
    let idx = |s: &str| rs.parse_root(s).expect("F4 root");
    Some(BadIdealWitness {
        kind: BadIdealKind::F4,
        simple: [0, 1, 2, 3],
        generators: [idx("1210"), idx("1111"), idx("0211")],
    })
}

/// Star witness, else `F4` witness, else `None`.
pub fn find_bad_ideal(ideal: &Ideal<'_>) -> Option<BadIdealWitness> {
    find_star_ideal(ideal).or_else(|| f4_witness(ideal))
}

/// Whether `supp γ` is a path in the Dynkin diagram and every coordinate on
/// it equals 1.
pub fn is_path_root(rs: &RootSystem, g: usize) -> bool {
    let coords = rs.root(g);
    if coords.iter().any(|&c| c > 1) {
        return false;
    }
    let support = rs.support(g);
    // Supports are connected and the diagram is a forest, so the induced
    // subgraph is a path iff no node has more than two support neighbours.
    support
        .iter()
        .all(|k| rs.dynkin_neighbours(k).iter().filter(|&&m| support.contains(m)).count() <= 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e6_has_a_star_once_the_branch_is_full() {
        let rs = RootSystem::build("E6".parse().unwrap());
        let i = Ideal::up_to_height(&rs, 3);
        let w = find_star_ideal(&i).expect("star");
        assert_eq!(w.simple[1], 3);
        assert_eq!(w.ideal(&rs).len(), 10);
    }

    #[test]
    fn multiply_laced_systems_have_no_star() {
        let rs = RootSystem::build("B4".parse().unwrap());
        assert!(find_star_ideal(&Ideal::full(&rs)).is_none());
        assert!(!contains_f4_bad_ideal(&Ideal::full(&rs)));
    }

    #[test]
    fn f4_hat_has_thirteen_roots() {
        let rs = RootSystem::build("F4".parse().unwrap());
        assert_eq!(f4_bad_ideal(&rs).unwrap().len(), 13);
    }
}
