//! Desk-scale extremal graph theory for forbidden brooms.
//!
//! The broom `B(ell, s)` is a path on `ell` vertices with `s` extra leaves
//! attached to a penultimate vertex. This crate constructs the candidate
//! extremal families `H(k, n)`, `H*(k, n)` and `F(n)`, evaluates degree-power
//! sums `e_r` and star counts exactly, decides broom containment, generates
//! all small graphs up to isomorphism with hereditary broom filtering, runs
//! exhaustive extremal searches with full maximizer sets, and classifies
//! vertex r-sets by common neighborhood with Berge-path diagnostics.
//!
//! Everything is exact: arithmetic is checked, searches are exhaustive, and
//! canonical forms decide isomorphism outright at these sizes.

pub mod canon;
pub mod cli;
pub mod detect;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod hypergraph;
pub mod naive;
pub mod search;

pub use canon::{canonical_form, canonical_graph, canonical_labeling, CanonicalForm};
pub use detect::{
    contains_broom, find_broom, has_heavy_path_endpoint, is_broom_free, verify_broom_witness,
    BroomWitness,
};
pub use enumerate::{
    enumerate_count, enumerate_graphs, enumerate_via_dedup, for_each_graph, Enumerator,
};
pub use error::{Error, Result};
pub use families::{
    closed_form_value, family_min_n, make_broom, make_f, make_h, make_hstar, predicted_extremal,
    BroomSpec, FamilyId,
};
pub use graph::{Graph, Objective, MAX_VERTICES};
pub use graph6::{graph6_decode, graph6_encode};
pub use hypergraph::{
    broom_from_berge, check_berge_free, classify_rsets, find_berge_path, has_berge_path,
    BergeFreeVerdict, BergePath, NbrhoodClassification, UniformHypergraph,
};
pub use naive::count_subgraph_naive;
pub use search::{
    agreement_sweep, empirical_threshold, extremal_search, extremal_search_opts,
    uniqueness_claimed, verify_predictions, ExtremalReport, ObjectiveSweep, SearchOptions,
    SweepResult, VerifySummary,
};
