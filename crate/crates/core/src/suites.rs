//! Exhaustive property checks over all roots, intervals or ideals of a type.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bitset::RootSet;
use crate::classify::{
    chain_peeling, exponents, is_supersolvable_generic, is_supersolvable_rootideal, validate_supersolving,
};
use crate::ideals::{enumerate_ideals, Ideal, SubsystemView};
use crate::matroid::{Arrangement, Polynomial};
use crate::rootsystem::RootSystem;
use crate::Coord;

const MAX_FAILURES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Rank2,
    Chainroot,
    Twocases,
    PeelImpliesSs,
    ExponentsVsChi,
    LineClosedOracle,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Rank2,
        Suite::Chainroot,
        Suite::Twocases,
        Suite::PeelImpliesSs,
        Suite::ExponentsVsChi,
        Suite::LineClosedOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Rank2 => "rank2",
            Suite::Chainroot => "chainroot",
            Suite::Twocases => "twocases",
            Suite::PeelImpliesSs => "peel-implies-ss",
            Suite::ExponentsVsChi => "exponents-vs-chi",
            Suite::LineClosedOracle => "line-closed-oracle",
        }
    }

    pub fn run(self, rs: &RootSystem) -> SuiteOutcome {
        match self {
            Suite::Rank2 => rank2(rs),
            Suite::Chainroot => chainroot(rs),
            Suite::Twocases => twocases(rs),
            Suite::PeelImpliesSs => peel_implies_ss(rs),
            Suite::ExponentsVsChi => exponents_vs_chi(rs),
            Suite::LineClosedOracle => line_closed_oracle(rs),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub type_label: String,
    pub checked: usize,
    pub failures: Vec<String>,
    pub failure_count: usize,
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    fn new(suite: Suite, rs: &RootSystem) -> Self {
        SuiteOutcome {
            suite,
            type_label: rs.label().to_string(),
            checked: 0,
            failures: Vec::new(),
            failure_count: 0,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(msg);
        }
    }
}

fn fmt_set(rs: &RootSystem, set: RootSet) -> String {
    format!("{{{}}}", rs.format_set(set).join(", "))
}

fn add(u: &[Coord], v: &[Coord], s: Coord) -> Vec<Coord> {
    u.iter().zip(v).map(|(a, b)| a + s * b).collect()
}

/// At most one incomparable pair in each rank-2 subsystem, minimal if
/// present; and, without triple bonds, the sign of `(β, γ)` decides
/// whether `β ± γ` are roots.
fn rank2(rs: &RootSystem) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Rank2, rs);
    let poset = rs.poset();
    let n = rs.len();
    for i in 0..n {
        for j in i + 1..n {
            out.checked += 1;
            let psi = rs.pair_span(i, j);
            let elems = psi.to_vec();
            let mut incomparable = Vec::new();
            for (a, &x) in elems.iter().enumerate() {
                for &y in &elems[a + 1..] {
                    if !poset.leq(x, y) && !poset.leq(y, x) {
                        incomparable.push((x, y));
                    }
                }
            }
            let minimal = poset.minimal_in(psi);
            let ok = match incomparable.as_slice() {
                [] => true,
                [(x, y)] => minimal.contains(*x) && minimal.contains(*y),
                _ => false,
            };
            if !ok {
                out.fail(format!("subsystem {} has incomparable pairs {:?}", fmt_set(rs, psi), incomparable));
            }
        }
    }
    if rs.lacing() < 3 {
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                out.checked += 1;
                let (b, g) = (rs.root(i), rs.root(j));
                let ip = rs.form(b, g);
                let diff = rs.is_root(&add(b, g, -1));
                let sum = rs.is_root(&add(b, g, 1));
                let expect = match ip.signum() {
                    1 => Some((true, false)),
                    -1 => Some((false, true)),
                    _ if rs.is_simply_laced() => Some((false, false)),
                    _ => None,
                };
                if let Some(e) = expect {
                    if e != (diff, sum) {
                        out.fail(format!(
                            "β = {}, γ = {}: (β,γ) sign {}, β−γ root {diff}, β+γ root {sum}",
                            rs.format_root(i),
                            rs.format_root(j),
                            ip.signum()
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Every interval `[β₁, β₂]` that is a chain has `β₂ − β₁ = kβ` with
/// `β ∈ Φ⁺` and `k ≤ 3`; `k = 3` needs a triple bond and `k = 2` a
/// multiple bond.
fn chainroot(rs: &RootSystem) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Chainroot, rs);
    let poset = rs.poset();
    let lacing = rs.lacing();
    let mut with_k = [0usize; 4];
    for lo in 0..rs.len() {
        for hi in 0..rs.len() {
            if lo == hi || !poset.leq(lo, hi) {
                continue;
            }
            let interval = poset.interval(lo, hi);
            if !poset.is_chain(interval) {
                continue;
            }
            out.checked += 1;
            let d: Vec<Coord> = add(rs.root(hi), rs.root(lo), -1);
            let found = (1..=3).find(|&k| {
                d.iter().all(|c| c % k == 0) && rs.index_of(&d.iter().map(|c| c / k).collect::<Vec<_>>()).is_some()
            });
            let label = format!("[{}, {}]", rs.format_root(lo), rs.format_root(hi));
            match found {
                None => out.fail(format!("{label}: difference is not a multiple of a positive root")),
                Some(k) => {
                    with_k[k as usize] += 1;
                    if k as Coord > lacing {
                        out.fail(format!("{label}: k = {k} in a system with bonds of multiplicity {lacing}"));
                    }
                    if k >= 2 && out.notes.len() < MAX_FAILURES {
                        out.notes.push(format!("{label}: k = {k}"));
                    }
                }
            }
        }
    }
    out.notes.insert(0, format!("chains with k = 1, 2, 3: {}, {}, {}", with_k[1], with_k[2], with_k[3]));
    out
}

/// Whether `block` is the top block shape allowed for the ideal `set`.
pub fn top_block_shape(rs: &RootSystem, set: RootSet, block: RootSet) -> Option<String> {
    let view = SubsystemView::spanned_by(rs, set);
    let simple = view.simple();
    for k in 0..simple.len() {
        if view.filter(set, k) == block && rs.poset().is_chain(block) {
            return Some(format!("F({})", rs.format_root(simple[k])));
        }
    }
    for k in 0..simple.len() {
        for l in k + 1..simple.len() {
            for (a, b) in view.candidate_ab_pairs(k, l) {
                if view.g_set(set, k, l, a, b) == block {
                    return Some(format!("G({}, {}, {a}, {b})", rs.format_root(simple[k]), rs.format_root(simple[l])));
                }
            }
        }
    }
    None
}

/// The top block of every generic supersolving certificate is `F`- or
/// `G`-shaped.
fn twocases(rs: &RootSystem) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Twocases, rs);
    let (mut f, mut g) = (0, 0);
    for ideal in enumerate_ideals(rs) {
        let Some(cert) = is_supersolvable_generic(&Arrangement::from_ideal(&ideal)) else { continue };
        let Some(top) = cert.top() else { continue };
        out.checked += 1;
        match top_block_shape(rs, ideal.members(), top) {
            Some(s) if s.starts_with('F') => f += 1,
            Some(_) => g += 1,
            None => out.fail(format!("ideal {}: top block {} has neither shape", fmt_set(rs, ideal.members()), fmt_set(rs, top))),
        }
    }
    out.notes.push(format!("F-shaped {f}, G-shaped {g}"));
    out
}

/// Every chain peeling is a supersolving partition.
fn peel_implies_ss(rs: &RootSystem) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::PeelImpliesSs, rs);
    for ideal in enumerate_ideals(rs) {
        let Some(cert) = chain_peeling(&ideal) else { continue };
        out.checked += 1;
        if let Err(e) = validate_supersolving(rs, &cert.blocks) {
            out.fail(format!("ideal {}: {e}", fmt_set(rs, ideal.members())));
        }
    }
    out
}

fn check_exponents(rs: &RootSystem, ideal: &Ideal<'_>, chi: &Polynomial<Coord>, out: &mut SuiteOutcome) {
    let certs = [
        ("root-ideal", is_supersolvable_rootideal(ideal)),
        ("generic", is_supersolvable_generic(&Arrangement::from_ideal(ideal))),
    ];
    for (name, cert) in certs {
        let Some(cert) = cert else { continue };
        match exponents(rs, &cert) {
            Ok(e) => {
                let product = Polynomial::from_roots(e.iter().map(|&x| x as Coord));
                if &product != chi {
                    out.fail(format!("ideal {}: χ = {chi} but {name} exponents {e:?}", fmt_set(rs, ideal.members())));
                }
            }
            Err(err) => out.fail(format!("ideal {}: {name}: {err}", fmt_set(rs, ideal.members()))),
        }
    }
}

/// For every supersolvable ideal, `χ(t) = ∏ (t − |Πᵢ|)`.
fn exponents_vs_chi(rs: &RootSystem) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::ExponentsVsChi, rs);
    for ideal in enumerate_ideals(rs) {
        if is_supersolvable_rootideal(&ideal).is_none() {
            continue;
        }
        out.checked += 1;
        let chi = Arrangement::from_ideal(&ideal).characteristic_polynomial();
        check_exponents(rs, &ideal, &chi, &mut out);
        if ideal.members() == rs.all() {
            let mut roots = chi.integer_roots().unwrap_or_default();
            roots.sort_unstable();
            out.notes.push(format!("full arrangement: χ = {chi}, roots of χ {roots:?}"));
        }
    }
    out
}

/// The flat walk agrees with the independent-set check, and with
/// supersolvability; witnesses are 2-closed non-flats.
fn line_closed_oracle(rs: &RootSystem) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::LineClosedOracle, rs);
    for ideal in enumerate_ideals(rs) {
        out.checked += 1;
        let arr = Arrangement::from_ideal(&ideal);
        let fast = arr.is_line_closed();
        let slow = arr.is_line_closed_by_independent_sets();
        let name = fmt_set(rs, ideal.members());
        if fast.line_closed != slow.line_closed {
            out.fail(format!("ideal {name}: flat walk says {}, independent sets say {}", fast.line_closed, slow.line_closed));
        }
        if fast.line_closed != is_supersolvable_rootideal(&ideal).is_some() {
            out.fail(format!("ideal {name}: line-closed {} disagrees with supersolvability", fast.line_closed));
        }
        for w in [fast.witness, slow.witness].into_iter().flatten() {
            if !arr.is_two_closed(w) || arr.is_flat(w) {
                out.fail(format!("ideal {name}: witness {} is not a 2-closed non-flat", fmt_set(rs, w)));
            }
        }
    }
    out
}
