//! Exact invariants of split crystallographic groups `Γ = Z^n ⋊ Z/m` and their
//! classification against a positive and a negative criterion for the
//! Gromov–Lawson–Rosenberg conjecture.
//!
//! Everything is computed in exact integer arithmetic: Smith normal forms,
//! cyclic group (co)homology via the periodic resolution, Tate cohomology,
//! lattice types `(r, s, t)`, and real K-theory coefficient tables.
//!
//! The `parallel` feature (on by default) runs the data-parallel loops on rayon;
//! see [`par::Execution`].

pub mod arith;
pub mod catalog;
pub mod classifier;
pub mod decomposition;
pub mod error;
pub mod group;
pub mod homology;
pub mod ktheory;
pub mod lattice;
pub mod par;

pub use classifier::{
    check_counterexample, check_positive, classify, classify_batch, classify_with, counterexample_witness,
    GlrStatus, HypothesisCheck, Verdict, Witness, WitnessReport,
};
pub use decomposition::{build_module, conjugate_random, decomposition_type, sylow_restriction, DecompositionType};
pub use error::{Error, Result};
pub use group::{is_free_outside_origin, CrystalGroup, GroupDescriptor};
pub use homology::{
    coinvariants, group_homology, homology_torus_lens, lhs_total_homology, norm_matrix, tate_cohomology,
    LatticeModule, Parity,
};
pub use ktheory::{ahss_e2, ko_bzn_away_from_p, ko_coeff, ko_real_group_algebra, tate_vanishing_report, E2Page};
pub use lattice::{FinAbGroup, IntMatrix};
pub use par::Execution;
