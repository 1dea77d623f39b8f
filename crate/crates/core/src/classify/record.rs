use serde::{Deserialize, Serialize};

use super::certificate::{exponents, validate_peeling, validate_supersolving, BlockMeta, CertificateKind, PartitionCertificate};
use super::peel::{chain_peeling, greedy_chain_peeling};
use super::supersolve::{is_supersolvable_generic, is_supersolvable_rootideal};
use crate::bitset::RootSet;
use crate::error::{Error, Result};
use crate::ideals::{find_bad_ideal, BadIdealKind, BadIdealWitness, Ideal};
use crate::matroid::Arrangement;
use crate::rootsystem::RootSystem;
use crate::Coord;

/// Where the Koszul verdict comes from.
pub const KOSZUL_SOURCE: &str = "equivalent to supersolvability; not computed from the algebra";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub kind: BadIdealKind,
    pub simple: Vec<String>,
    pub generators: Vec<String>,
    pub ideal: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum BlockShape {
    Filter { alpha: String },
    G { alpha: String, beta: String, a: Coord, b: Coord },
    Chain { minimum: String },
    Coatom,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRecord {
    pub roots: Vec<String>,
    #[serde(flatten)]
    pub shape: BlockShape,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub kind: CertificateKind,
    pub blocks: Vec<BlockRecord>,
}

impl CertificateRecord {
    pub fn from_certificate(rs: &RootSystem, cert: &PartitionCertificate) -> Self {
        let f = |i: usize| rs.format_root(i);
        let blocks = cert
            .blocks
            .iter()
            .zip(&cert.meta)
            .map(|(&b, m)| BlockRecord {
                roots: sorted_coords(rs, b),
                shape: match *m {
                    BlockMeta::Filter { alpha } => BlockShape::Filter { alpha: f(alpha) },
                    BlockMeta::GSet { alpha, beta, a, b } => BlockShape::G { alpha: f(alpha), beta: f(beta), a, b },
                    BlockMeta::Chain { minimum } => BlockShape::Chain { minimum: f(minimum) },
                    BlockMeta::CoatomComplement => BlockShape::Coatom,
                },
            })
            .collect();
        CertificateRecord { kind: cert.kind, blocks }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificates {
    pub peeling: Option<CertificateRecord>,
    pub supersolving: Option<CertificateRecord>,
}

/// Verdicts for one ideal. `supersolvable` comes from the root-ideal search
/// and `supersolvable_generic` from the flat-lattice search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub ideal: Vec<String>,
    pub generators: Vec<String>,
    pub size: usize,
    pub rank: usize,
    pub chain_peelable: bool,
    pub supersolvable: bool,
    pub supersolvable_generic: bool,
    pub line_closed: bool,
    pub bad_ideal_free: bool,
    pub bad_ideal: Option<WitnessRecord>,
    pub koszul: bool,
    pub koszul_source: String,
    pub exponents: Option<Vec<usize>>,
    pub certificates: Certificates,
    pub non_flat_witness: Option<Vec<String>>,
    pub greedy_peeling_stuck: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub certificate_errors: Vec<String>,
}

fn sorted_coords(rs: &RootSystem, set: RootSet) -> Vec<String> {
    let mut v = rs.format_set(set);
    v.sort();
    v
}

fn witness_record(rs: &RootSystem, w: &BadIdealWitness) -> WitnessRecord {
    WitnessRecord {
        kind: w.kind,
        simple: w.simple.iter().map(|&i| rs.format_root(i)).collect(),
        generators: w.generators.iter().map(|&i| rs.format_root(i)).collect(),
        ideal: sorted_coords(rs, w.ideal(rs)),
    }
}

impl ClassificationRecord {
    /// Disagreements among the verdicts, one line each.
    pub fn violations(&self) -> Vec<String> {
        let mut out = self.certificate_errors.clone();
        let verdicts = [
            ("supersolvable_generic", self.supersolvable_generic),
            ("chain_peelable", self.chain_peelable),
            ("line_closed", self.line_closed),
            ("bad_ideal_free", self.bad_ideal_free),
        ];
        for (name, v) in verdicts {
            if v != self.supersolvable {
                out.push(format!("supersolvable = {} but {name} = {v}", self.supersolvable));
            }
        }
        if self.koszul != self.supersolvable {
            out.push("koszul differs from supersolvable".into());
        }
        out
    }
}

/// Runs every predicate and records the verdicts without checking that
/// they agree.
pub fn classify_ideal_unchecked(ideal: &Ideal<'_>) -> ClassificationRecord {
    let rs = ideal.system();
    let arr = Arrangement::from_ideal(ideal);
    let peel = chain_peeling(ideal);
    let greedy = greedy_chain_peeling(ideal);
    let generic = is_supersolvable_generic(&arr);
    let ss = is_supersolvable_rootideal(ideal);
    let lc = arr.is_line_closed();
    let bad = find_bad_ideal(ideal);

    let mut errors = Vec::new();
    if let Some(c) = &peel {
        if let Err(e) = validate_peeling(rs, &c.blocks) {
            errors.push(format!("peeling certificate: {e}"));
        }
        if let Err(e) = validate_supersolving(rs, &c.blocks) {
            errors.push(format!("peeling certificate is not supersolving: {e}"));
        }
    }
    for (name, c) in [("root-ideal", &ss), ("generic", &generic)] {
        if let Some(c) = c {
            if c.ground() != ideal.members() {
                errors.push(format!("{name} certificate does not cover the ideal"));
            }
        }
    }
    let exps = ss.as_ref().and_then(|c| match exponents(rs, c) {
        Ok(e) => Some(e),
        Err(e) => {
            errors.push(format!("root-ideal certificate: {e}"));
            None
        }
    });
    if let (Some(e), Some(g)) = (&exps, &generic) {
        match exponents(rs, g) {
            Ok(ge) if &ge == e => {}
            Ok(ge) => errors.push(format!("exponents differ between searches: {e:?} vs {ge:?}")),
            Err(err) => errors.push(format!("generic certificate: {err}")),
        }
    }

    let supersolvable = ss.is_some();
    ClassificationRecord {
        ideal: sorted_coords(rs, ideal.members()),
        generators: sorted_coords(rs, ideal.generators()),
        size: ideal.len(),
        rank: rs.rank_of(ideal.members()),
        chain_peelable: peel.is_some(),
        supersolvable,
        supersolvable_generic: generic.is_some(),
        line_closed: lc.line_closed,
        bad_ideal_free: bad.is_none(),
        bad_ideal: bad.as_ref().map(|w| witness_record(rs, w)),
        koszul: supersolvable,
        koszul_source: KOSZUL_SOURCE.into(),
        exponents: exps,
        certificates: Certificates {
            peeling: peel.as_ref().map(|c| CertificateRecord::from_certificate(rs, c)),
            supersolving: ss.as_ref().map(|c| CertificateRecord::from_certificate(rs, c)),
        },
        non_flat_witness: lc.witness.map(|w| sorted_coords(rs, w)),
        greedy_peeling_stuck: peel.is_some() && greedy.is_none(),
        certificate_errors: errors,
    }
}

/// Classifies the ideal and fails if the verdicts disagree or a
/// certificate does not validate.
pub fn classify_ideal(ideal: &Ideal<'_>) -> Result<ClassificationRecord> {
    let record = classify_ideal_unchecked(ideal);
    let v = record.violations();
    if v.is_empty() {
        Ok(record)
    } else {
        Err(Error::EquivalenceViolation { ideal: record.generators.join(","), detail: v.join("; ") })
    }
}
