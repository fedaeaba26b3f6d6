//! Machine-readable payloads. Every integer is a decimal string so consumers
//! limited to 64-bit numbers never truncate.

use cmsurf::{Class, Int, Rational};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    None,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub status: Status,
}

impl Envelope {
    pub fn new(command: &str, inputs: Value, result: Value, status: Status) -> Self {
        Self { schema_version: SCHEMA_VERSION.to_string(), command: command.to_string(), inputs, result, status }
    }
}

pub fn dec(v: &Int) -> String {
    v.to_string()
}

pub fn rational(v: &Rational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassOut {
    pub basis: String,
    pub coeffs: [String; 4],
}

impl From<&Class> for ClassOut {
    fn from(c: &Class) -> Self {
        Self { basis: c.basis().to_string(), coeffs: c.coeffs().clone().map(|v| v.to_string()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramOut {
    pub order: String,
    pub basis: String,
    pub matrix: Vec<Vec<String>>,
    pub determinant: String,
    pub signature: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOut {
    pub order: String,
    pub norm_sigma: String,
    pub norm_one_minus_sigma: String,
    pub twice_re_sigma: String,
    pub integrality: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChangeBasisOut {
    pub input: ClassOut,
    pub output: ClassOut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairOut {
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmpleOut {
    pub ample: bool,
    pub fiber_degree: String,
    pub self_int: String,
    pub standard_inequalities: bool,
    pub orthogonal_inequalities: bool,
    pub primitive: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeshadriConeOut {
    pub epsilon: String,
    /// `(L·F₁, L·F₂, L·Δ, L·Γ)`
    pub curve_degrees: [String; 4],
    pub self_int: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EstimateOut {
    pub self_int: String,
    pub sqrt_floor: String,
    pub sqrt_is_square: bool,
    pub exact_value: Option<String>,
    pub method: String,
    pub elliptic_min: Option<String>,
    pub elliptic_min_class: Option<ClassOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllipticScanOut {
    pub bound: String,
    pub count: String,
    pub classes: Vec<ClassOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityOut {
    pub modulus: String,
    pub divides: bool,
    pub curve_degrees: [String; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsqrtOut {
    pub root: String,
    pub is_square: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessOut {
    pub order: String,
    pub k: String,
    pub bundle: ClassOut,
    pub bundle_standard: ClassOut,
    pub self_int: String,
    pub nonsquare_root: String,
    pub sqrt_e_floor: String,
    pub sqrt_3e_floor: String,
    pub divisibility_modulus: String,
    pub half_bundle: Option<ClassOut>,
    pub half_bundle_self_int: Option<String>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquarefreeOut {
    pub m: String,
    pub n: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationOut {
    pub k: String,
    pub step: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaOut {
    pub m: String,
    pub n: String,
    pub k_max: String,
    pub two_step_checked: bool,
    pub square_ks: Vec<String>,
    pub violations: Vec<ViolationOut>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellOut {
    pub d: String,
    pub ell: String,
    pub k: String,
    pub method: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PpolOut {
    pub order: String,
    pub bundle: ClassOut,
    pub bundle_standard: ClassOut,
    pub self_int: String,
    pub ample: bool,
    pub evenness: bool,
    pub reported_epsilon: String,
    pub epsilon_source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorOut {
    pub kind: String,
    pub message: String,
}
