//! Order ideals of the root poset.

mod bad;
mod blocks;
mod subsystem;

use std::fmt;

pub use bad::{
    contains_f4_bad_ideal, f4_bad_ideal, find_bad_ideal, find_star_ideal, is_path_root, BadIdealKind,
    BadIdealWitness,
};
pub use blocks::{candidate_ab_pairs, g_set, principal_filter, restrict_without_g};
pub use subsystem::SubsystemView;

use crate::bitset::RootSet;
use crate::error::{Error, Result};
use crate::rootsystem::RootSystem;

/// A downward-closed set of positive roots.
#[derive(Clone, Copy)]
pub struct Ideal<'a> {
    system: &'a RootSystem,
    members: RootSet,
}

impl<'a> Ideal<'a> {
    /// Wraps `members`, checking that it is downward closed.
    pub fn new(system: &'a RootSystem, members: RootSet) -> Result<Self> {
        if !members.is_subset(system.all()) || !system.poset().is_down_closed(members) {
            return Err(Error::NotAnIdeal(system.format_set(members).join(",")));
        }
        Ok(Ideal { system, members })
    }

    pub fn empty(system: &'a RootSystem) -> Self {
        Ideal { system, members: RootSet::EMPTY }
    }

    pub fn full(system: &'a RootSystem) -> Self {
        Ideal { system, members: system.all() }
    }

    /// Downward closure of the given roots.
    pub fn generated_by(system: &'a RootSystem, gens: &[usize]) -> Self {
        let members = system.poset().ideal_generated(gens.iter().copied().collect());
        Ideal { system, members }
    }

    /// Parses comma-separated generator roots, e.g. `"1110,1101,0111"`.
    pub fn parse(system: &'a RootSystem, text: &str) -> Result<Self> {
        let gens = system.parse_roots(text)?;
        Ok(Ideal::generated_by(system, &gens))
    }

    /// Roots of height at most `h`.
    pub fn up_to_height(system: &'a RootSystem, h: usize) -> Self {
        let members = (0..system.len()).filter(|&i| system.height(i) <= h).collect();
        Ideal { system, members }
    }

    pub fn system(&self) -> &'a RootSystem {
        self.system
    }

    pub fn members(&self) -> RootSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn is_chain(&self) -> bool {
        self.system.poset().is_chain(self.members)
    }

    /// Maximal elements, which generate the ideal.
    pub fn generators(&self) -> RootSet {
        self.system.poset().maximal_in(self.members)
    }

    /// Members in coordinate form, in root-index order.
    pub fn coordinates(&self) -> Vec<String> {
        self.system.format_set(self.members)
    }

    /// Removes an order filter of the ideal.
    pub fn without(&self, filter: RootSet) -> Ideal<'a> {
        Ideal { system: self.system, members: self.members - filter }
    }
}

impl fmt::Debug for Ideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({}; {})", self.system.label(), self.coordinates().join(","))
    }
}

impl PartialEq for Ideal<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.system, other.system) && self.members == other.members
    }
}

/// Every order ideal of the root poset, each exactly once.
///
/// Depth-first reverse search: the parent of a nonempty ideal is obtained
/// by deleting its largest-index element (always maximal, since index order
/// is a linear extension). Children of `I` are therefore `I ∪ {x}` for
/// addable `x` with index above every member of `I`.
pub fn enumerate_ideals(system: &RootSystem) -> IdealIter<'_> {
    IdealIter { system, stack: vec![RootSet::EMPTY] }
}

pub struct IdealIter<'a> {
    system: &'a RootSystem,
    stack: Vec<RootSet>,
}

impl<'a> Iterator for IdealIter<'a> {
    type Item = Ideal<'a>;

    fn next(&mut self) -> Option<Ideal<'a>> {
        let members = self.stack.pop()?;
        let poset = self.system.poset();
        let start = members.last().map_or(0, |m| m + 1);
        for x in (start..self.system.len()).rev() {
            if poset.down(x).without(x).is_subset(members) {
                self.stack.push(members.with(x));
            }
        }
        Some(Ideal { system: self.system, members })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_small() {
        let a2 = RootSystem::build("A2".parse().unwrap());
        let all: Vec<_> = enumerate_ideals(&a2).collect();
        assert_eq!(all.len(), 5);
        assert!(all.iter().any(|i| i.is_empty()));
        assert!(all.iter().any(|i| i.len() == 3));
    }

    #[test]
    fn rejects_non_ideal() {
        let a2 = RootSystem::build("A2".parse().unwrap());
        assert!(matches!(Ideal::new(&a2, RootSet::singleton(2)), Err(Error::NotAnIdeal(_))));
        assert!(Ideal::new(&a2, RootSet::from_indices([0, 1])).is_ok());
    }

    #[test]
    fn generators_are_maximal_elements() {
        let d4 = RootSystem::build("D4".parse().unwrap());
        let i = Ideal::parse(&d4, "1110,1101,0111").unwrap();
        assert_eq!(i.len(), 10);
        assert_eq!(d4.format_set(i.generators()), ["1110", "1101", "0111"]);
    }
}
