//! The extremal graphs `G^S(k)`, their characterization families, and the
//! audits and counts built on them.

mod blueprint;
mod characterize;
mod counting;
mod presets;
mod verify;

pub use blueprint::{
    check_k, check_twin_condition, construction_order, eligible_labels, removal_cap, ExtremalBlueprint,
    MaterializedExtremal, OuterPolicy, OuterVertex, MAX_K,
};
pub use characterize::{
    audit_characterization, characterization_family, decompose, family_members_of_order, AuditMode,
    AuditReport, CharacterizationFamily, SAMPLED_LIMIT,
};
pub use counting::{counting, eta, separation_counts, ConstructionCounts, CountReport, SeparationCounts};
pub use presets::{
    od_disconnection_case, od_disconnection_case_with, tight_family_presets, tight_preset, DisconnectionCase,
    EdgeChoice, GraphFamily, TightPreset,
};
pub use verify::{verify_extremal, ExtremalCheck};
