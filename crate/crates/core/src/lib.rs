//! Exact combinatorics and operator calculus for the generalized i-boson
//! lattice model.
//!
//! Everything is computed over `Q(sqrt 2)` with arbitrary-precision rationals;
//! identities are checked by exact coefficient comparison of truncated
//! multivariate power series. The crate is `no_std` (alloc only); IO, JSON
//! reports and the command-line front end live in the companion `iboson-cli`
//! crate.

#![no_std]

extern crate alloc;

pub mod checks;
pub mod fock;
pub mod lattice;
pub mod monodromy;
pub mod partition;
pub mod pfaffian;
pub mod plane;
pub mod qsqrt2;
pub mod scalar;
pub mod schur_q;
pub mod series;

pub use checks::{
    buc_macmahon_series, catalog, find_check, strict_buc_series, CheckInfo, CheckOutcome,
    CheckParams, SplitMix64,
};
pub use fock::{
    apply_fock_mode, check_gamma_commutation, check_vertex_conjugation, fock_inner,
    fock_inner_basis, gamma_minus_bra, gamma_minus_ket, gamma_plus, vev, CliffordWord, Flavor,
    FockLabel, FockVector, PairingMethod,
};
pub use lattice::{
    admissible_images, apply_mode_config, format_config, inner_product, is_admissible, map_to_fock,
    parse_config, LatticeContext, LatticeVector, ModeOp, PairConfig, Side, SiteConfig, Species,
};
pub use monodromy::{
    apply_b, apply_c, rtt_full_holds, rtt_single_site_holds, species_basis, BcMethod,
};
pub use partition::{
    interlaces, interlacing_covers, interlacing_extensions, interlacing_restrictions, sharp_count,
    strict_partitions_in_box, StrictPartition, TwoPartition,
};
pub use pfaffian::{pfaffian, pfaffian_in, SkewMatrix};
pub use plane::{
    b_weight, diagonal_slices, enumerate_boxed_strict, enumerate_by_weight, path_exponent,
    PathMethod, PlanePartition, SlicedPP,
};
pub use qsqrt2::{QSqrt2, Rat};
pub use scalar::{scalar_product, ScalarDims, ScalarRoute, ScalarVars};
pub use schur_q::{q_one_row, schur_q_branching, schur_q_pfaffian, skew_q_one_var, QContext};
pub use series::{MultiSeries, SeriesContext};
