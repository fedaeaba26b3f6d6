//! The CM order `End(E) = Z[σ]` and the integer constants it contributes to
//! the intersection form on `E×E`.
//!
//! The generator is either `σ = √−e` ([`Form::Sqrt`]) or `σ = ½(1+√−e)` with
//! `e ≡ 3 (mod 4)` ([`Form::Half`]). The real part of `σ` is stored doubled so
//! that every derived quantity is an integer.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    /// `σ = √−e`
    Sqrt,
    /// `σ = ½(1+√−e)`, `e ≡ 3 (mod 4)`
    Half,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Sqrt => "sqrt",
            Form::Half => "half",
        })
    }
}

/// Whether every Seshadri constant on `E×E` is an integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Integrality {
    AllIntegral,
    FractionalExists,
}

impl fmt::Display for Integrality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Integrality::AllIntegral => "AllIntegral",
            Integrality::FractionalExists => "FractionalExists",
        })
    }
}

/// A validated CM order. Construct with [`CmOrder::new`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CmOrder<T> {
    e: T,
    form: Form,
}

impl<T: Scalar> CmOrder<T> {
    pub fn new(e: T, form: Form) -> Result<Self> {
        if !e.is_positive() {
            return Err(Error::NonPositiveRadicand(e.to_string()));
        }
        if form == Form::Half && e.mod_floor(&T::of(4)) != T::of(3) {
            return Err(Error::HalfFormResidue(e.to_string()));
        }
        Ok(Self { e, form })
    }

    pub fn sqrt(e: T) -> Result<Self> {
        Self::new(e, Form::Sqrt)
    }

    pub fn half(e: T) -> Result<Self> {
        Self::new(e, Form::Half)
    }

    pub fn e(&self) -> &T {
        &self.e
    }

    pub fn form(&self) -> Form {
        self.form
    }

    /// `|σ|² = deg σ`.
    pub fn norm_sigma(&self) -> T {
        match self.form {
            Form::Sqrt => self.e.clone(),
            Form::Half => (self.e.clone() + T::one()) / T::of(4),
        }
    }

    /// `|1−σ|² = #Fix(σ)`.
    pub fn norm_one_minus_sigma(&self) -> T {
        match self.form {
            Form::Sqrt => self.e.clone() + T::one(),
            Form::Half => (self.e.clone() + T::one()) / T::of(4),
        }
    }

    /// `2·Re(σ)`, which is 0 or 1.
    pub fn twice_re_sigma(&self) -> T {
        match self.form {
            Form::Sqrt => T::zero(),
            Form::Half => T::one(),
        }
    }

    /// `4|σ|² − (2 Re σ)²`, the determinant of the `(∇, Σ)` block. Always positive.
    pub fn discriminant(&self) -> T {
        let r = self.twice_re_sigma();
        T::of(4) * self.norm_sigma() - r.clone() * r
    }

    /// Only `Z[i]` and `Z[½(1+√−3)]` have integral Seshadri constants throughout.
    pub fn classify_integrality(&self) -> Integrality {
        let exceptional = match self.form {
            Form::Sqrt => self.e.is_one(),
            Form::Half => self.e == T::of(3),
        };
        if exceptional {
            Integrality::AllIntegral
        } else {
            Integrality::FractionalExists
        }
    }
}

impl<T: Scalar> fmt::Display for CmOrder<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.form {
            Form::Sqrt => write!(f, "Z[√−{}]", self.e),
            Form::Half => write!(f, "Z[½(1+√−{})]", self.e),
        }
    }
}
