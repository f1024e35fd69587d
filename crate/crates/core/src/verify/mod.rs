//! Renormalization, integrality and exhaustive identity checks.

mod boundary;
mod corpus;
mod identities;
mod renorm;
mod suites;

pub use identities::{
    theta_raw, verify_biedenharn_elliot, verify_fusion, verify_normalization_kink, verify_normalization_zero,
    verify_normalizations, verify_orthogonality, verify_r_vs_6j, verify_racah, verify_whitehead, IdentityReport, Instance,
};
pub use boundary::{boundary_factor, verify_boundary_integrality};
pub use corpus::{braid_corpus, graph_corpus, open_corpus, tet_colorings, twisted_links, CorpusEntry};
pub use renorm::{check_divisibility, check_integrality, renormalize, GraphCombinatorics};
pub use suites::{verify_divisibility, verify_engine_equivalence, verify_integrality};
