//! The two block shapes a top block of a supersolving partition can take.

use super::subsystem::SubsystemView;
use super::Ideal;
use crate::bitset::RootSet;
use crate::error::{Error, Result};
use crate::rootsystem::RootSystem;
use crate::Coord;

fn check_simple(rs: &RootSystem, alpha: usize) -> Result<()> {
    if alpha >= rs.len() {
        return Err(Error::IndexOutOfRange(alpha));
    }
    if !rs.is_simple(alpha) {
        return Err(Error::NotSimple(rs.format_root(alpha)));
    }
    Ok(())
}

/// `F_I(α) = {γ ∈ I | γ ≥ α}`.
pub fn principal_filter(ideal: &Ideal<'_>, alpha: usize) -> Result<RootSet> {
    let rs = ideal.system();
    check_simple(rs, alpha)?;
    if !ideal.contains(alpha) {
        return Err(Error::NotInIdeal(rs.format_root(alpha)));
    }
    Ok(ideal.members() & rs.poset().up(alpha))
}

/// `G_I(α, β, a, b)`: members `γ` with `γ_α α + γ_β β ≠ k(aα + bβ)` for all
/// `k ≥ 0`. Roots supported away from both `α` and `β` are not in `G`.
pub fn g_set(ideal: &Ideal<'_>, alpha: usize, beta: usize, a: Coord, b: Coord) -> Result<RootSet> {
    let rs = ideal.system();
    check_simple(rs, alpha)?;
    check_simple(rs, beta)?;
    let view = SubsystemView::whole(rs);
    if alpha == beta || a < 1 || b < 1 || view.combination(alpha, beta, a, b).is_none() {
        return Err(Error::NotARoot(format!("{a}α{} + {b}α{}", alpha + 1, beta + 1)));
    }
    Ok(view.g_set(ideal.members(), alpha, beta, a, b))
}

/// All `(a, b)` with `a, b ≥ 1` and `aα + bβ ∈ Φ⁺`, found by scanning the
/// positive roots supported exactly on `{α, β}`. Empty when `α = β` or the
/// two nodes are not bonded.
pub fn candidate_ab_pairs(rs: &RootSystem, alpha: usize, beta: usize) -> Vec<(Coord, Coord)> {
    if !rs.is_simple(alpha) || !rs.is_simple(beta) {
        return Vec::new();
    }
    SubsystemView::whole(rs).candidate_ab_pairs(alpha, beta)
}

/// The subsystem with `Δ′ = {aα + bβ} ∪ Δ ∖ {α, β}` together with
/// `I ∖ G_I(α, β, a, b)`, which is an order ideal of its root poset.
pub fn restrict_without_g<'a>(
    ideal: &Ideal<'a>,
    alpha: usize,
    beta: usize,
    a: Coord,
    b: Coord,
) -> Result<(SubsystemView<'a>, RootSet)> {
    let g = g_set(ideal, alpha, beta, a, b)?;
    let view = SubsystemView::whole(ideal.system()).contract(alpha, beta, a, b)?;
    let rest = ideal.members() - g;
    debug_assert!(rest.is_subset(view.roots()));
    Ok((view, rest))
}
