//! Chain peeling, supersolvability and the per-ideal classification.

mod certificate;
mod peel;
mod record;
mod supersolve;

pub use certificate::{
    exponents, validate_peeling, validate_supersolving, BlockMeta, CertificateKind, PartitionCertificate,
};
pub use peel::{chain_peeling, greedy_chain_peeling};
pub use record::{
    classify_ideal, classify_ideal_unchecked, BlockRecord, BlockShape, CertificateRecord, Certificates, ClassificationRecord,
    WitnessRecord, KOSZUL_SOURCE,
};
pub use supersolve::{is_supersolvable_generic, is_supersolvable_rootideal};
