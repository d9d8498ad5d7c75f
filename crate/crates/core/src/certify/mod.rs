//! Sign certificates over parameter regions and the verification suite.

pub mod claim;
pub mod engine;
pub mod region;
pub mod report;
pub mod suite;

pub use claim::{Factor, FactoredClaim, Sign, Strategy};
pub use engine::{certify_sign, Point, SignCertificate, Status, DEFAULT_MAX_DEPTH};
pub use region::{Region, SideConstraint};
pub use report::{Report, ReportItem};
pub use suite::{
    verify_all, verify_all_with, verify_half_plane, verify_lemma_computation, verify_skyscraper_condition, ClosedForms,
    VerifyConfig,
};
