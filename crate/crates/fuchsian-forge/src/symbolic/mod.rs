//! Exact symbolic engine: multivariate rational functions, the quadratic
//! tower containing the generator matrix entries, and the trace-identity
//! verifications built on them.

pub mod poly;
pub mod qmatrix;
pub mod theorem;
pub mod tower;

pub use poly::{c_poly, MultiPoly, NVARS, VAR_N, VAR_R, VAR_S, VAR_T};
pub use qmatrix::QMatrix;
pub use theorem::{
    check_commutator_identities, check_product_closed_form, check_trace_field_membership,
    closed_trace_form, generators, product_closed_form, trace_words, word_matrix, Letter,
    TraceWord,
};
pub use tower::{MultiRat, TowerElement};
