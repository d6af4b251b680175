//! Ring documents and the campaign runner behind the `verify` binary.

mod campaign;
mod ring_file;

pub use campaign::{
    run_campaign, CampaignConfig, CampaignReport, Check, RingSpec, Status, Summary, TaskEntry,
    DEFAULT_BUDGET,
};
pub use ring_file::{load_ring_file, resolve_ring, Coefficient, RingDocument};
