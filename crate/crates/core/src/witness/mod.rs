//! Certified constructions: fractional-Seshadri witnesses, the square lemma,
//! the Pell solver and principal polarizations.

pub mod fractional;
pub mod pell;
pub mod polarization;
pub mod square_lemma;

pub use fractional::{family_bundle, family_self_int, k_in_interval, k_qualifies, witness_search, FractionalWitness};
pub use pell::{pell_min, pell_min_with, PellMethod, PellSolution};
pub use polarization::{degree_one_partner, principal_classes, principal_polarization, PrincipalPolarizationCert};
pub use square_lemma::{
    a_k_is_square, lemma_square_scan, squarefree_decompose, LemmaScanReport, LemmaViolation, SquarefreeDecomposition,
};
