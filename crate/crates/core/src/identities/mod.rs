//! Hook-length identities: enumerated left-hand sides, closed-form
//! right-hand sides, and exact comparison.

pub mod coeff;
pub mod lhs;
pub mod master;
pub mod registry;
pub mod rhs;
pub mod verify;
pub mod weights;

pub use coeff::{coefficient_identity_check, sc_core_count_check, CoeffFamily, CoeffParams};
pub use lhs::{lhs_series, lhs_series_with, LhsClass, LhsSpec, TermFilter};
pub use master::{MasterTables, MasterTheorem};
pub use registry::{ids, lookup, registry, IdentityRecord, Params, TRule};
pub use verify::{
    verify, verify_corrupted, verify_master, verify_master_random, verify_with, Corruption, Status,
    VerificationReport,
};
pub use weights::{ProductWeight, Rho, SignedRho, SumWeight, WeightSpec};
