//! The integer scalar abstraction every lattice computation is generic over.
//!
//! All arithmetic in this crate is exact. The canonical scalar is
//! [`num_bigint::BigInt`]; machine integers (`i64`, `i128`) may be used as a
//! fast path when the caller knows the values stay small. Overflow in machine
//! integers panics in debug builds and is the caller's responsibility.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer ring element.
pub trait Scalar:
    Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Lift a small machine integer into the scalar type.
    fn of(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("value does not fit the scalar type")
    }
}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// Floor square root together with a perfect-square flag.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SqrtFloor<T> {
    pub root: T,
    pub is_square: bool,
}

/// Exact `⌊√n⌋` by integer Newton iteration.
///
/// Panics if `n` is negative.
pub fn isqrt_floor<T: Scalar>(n: &T) -> SqrtFloor<T> {
    assert!(!n.is_negative(), "isqrt_floor of a negative number");
    if n.is_zero() {
        return SqrtFloor { root: T::zero(), is_square: true };
    }
    let two = T::of(2);
    // Start strictly above the root; Newton then decreases monotonically to it.
    let mut x = initial_guess(n);
    loop {
        let y = (x.clone() + n.clone() / x.clone()) / two.clone();
        if y >= x {
            break;
        }
        x = y;
    }
    let is_square = x.clone() * x.clone() == *n;
    SqrtFloor { root: x, is_square }
}

fn initial_guess<T: Scalar>(n: &T) -> T {
    if let Some(f) = n.to_f64().filter(|f| f.is_finite()) {
        let g = f.sqrt() * (1.0 + 1e-9) + 2.0;
        if let Some(g) = T::from_f64(g.ceil()) {
            if g > n.clone() / g.clone() {
                return g;
            }
        }
    }
    n.clone() + T::one()
}

/// Whether `n` is a perfect square. Negative numbers are not squares.
pub fn is_square<T: Scalar>(n: &T) -> bool {
    !n.is_negative() && isqrt_floor(n).is_square
}

/// Greatest common divisor of a slice, always non-negative.
pub fn gcd_all<T: Scalar>(values: &[T]) -> T {
    values.iter().fold(T::zero(), |acc, v| acc.gcd(v))
}
