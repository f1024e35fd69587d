//! Shadow presentations of closed diagrams and their state-sums.

mod convert;
mod eval;
mod presentation;
mod symbols;

pub use convert::{sliced_to_shadow, POS_SIGN};
pub use eval::{shadow_eval, shadow_state_weight, shadow_states, shadow_sum, state_weight_frac, ShadowState, ShadowSum};
pub use presentation::{Crossing, Face, Region, ShadowError, ShadowFormatError, ShadowPresentation, Vertex};
pub use symbols::{crossed_tet_sym, tet_sym, tet_triples, theta_pow, theta_sym, unknot_pow, unknot_sym};
