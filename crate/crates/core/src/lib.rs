//! Exact arithmetic on the Néron–Severi lattice of `E×E` for an elliptic
//! curve `E` with complex multiplication by `Z[σ]`.
//!
//! Every computation is generic over an integer [`Scalar`]. The aliases at
//! the crate root fix the scalar to [`BigInt`], which is what the CLI and most
//! callers want; `i64` or `i128` work as a fast path for small inputs.
//!
//! ```
//! use cmsurf::{witness_search, Order};
//!
//! let order = Order::sqrt(2.into()).unwrap();
//! let w = witness_search(&order).unwrap();
//! assert_eq!(w.self_int, 8.into());
//! ```

pub mod error;
pub mod lattice;
pub mod quad_order;
pub mod scalar;
pub mod seshadri;
pub mod witness;

pub use num_bigint::BigInt;
pub use num_rational::Ratio;

pub use error::{Error, Result};
pub use lattice::{
    basis_change_matrix, change_basis, det4, fiber_degree, gram_orthogonal, gram_standard, is_ample,
    is_ample_orthogonal, is_ample_standard, is_primitive, pair, self_int, standard_half_square, Basis,
    GramMatrix,
};
pub use quad_order::{CmOrder, Form, Integrality};
pub use scalar::{gcd_all, is_square, isqrt_floor, Scalar, SqrtFloor};
pub use seshadri::{
    check_divisibility, classes_with_half_square, curve_degrees, elliptic_min, enumerate_elliptic_classes,
    seshadri_cone, seshadri_upper_bounds, EllipticMin, SeshadriEstimate, SeshadriMethod,
};
pub use witness::{
    lemma_square_scan, pell_min, pell_min_with, principal_polarization, squarefree_decompose, witness_search,
    FractionalWitness, LemmaScanReport, PellMethod, PellSolution, PrincipalPolarizationCert,
    SquarefreeDecomposition,
};

/// Arbitrary-precision integer.
pub type Int = BigInt;
/// Exact rational over [`Int`].
pub type Rational = Ratio<BigInt>;
pub type Order = CmOrder<BigInt>;
pub type Class = lattice::DivisorClass<BigInt>;
pub type Gram = GramMatrix<BigInt>;
pub type Estimate = SeshadriEstimate<BigInt>;
pub type Witness = FractionalWitness<BigInt>;
pub type Pell = PellSolution<BigInt>;
pub type PolarizationCert = PrincipalPolarizationCert<BigInt>;
pub type LemmaReport = LemmaScanReport<BigInt>;

pub use lattice::DivisorClass;
