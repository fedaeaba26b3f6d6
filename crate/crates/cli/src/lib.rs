//! Command-line front end for `cmsurf`.
//!
//! Each subcommand wraps one library operation and emits an [`Envelope`],
//! either as `key: value` text or, with `--json`, as one JSON object per line.
//! Exit codes: 0 ok or none, 1 internal invariant breach, 2 usage or
//! validation error, 3 search cutoff exceeded.

pub mod payload;
mod render;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cmsurf::{
    change_basis, check_divisibility, curve_degrees, enumerate_elliptic_classes, fiber_degree, gram_orthogonal,
    gram_standard, is_ample, is_ample_orthogonal, is_ample_standard, isqrt_floor, lemma_square_scan, pair,
    pell_min_with, principal_polarization, self_int, seshadri_cone, seshadri_upper_bounds, squarefree_decompose,
    witness_search, Basis, Class, Error, Form, Int, Order, PellMethod, Witness,
};
use num_integer::Integer;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

pub use payload::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CUTOFF: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cmsurf", version, about = "Néron–Severi lattice and Seshadri-constant computations on E×E")]
pub struct Cli {
    /// Emit one JSON envelope per line instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Sqrt,
    Half,
}

impl From<FormArg> for Form {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Sqrt => Form::Sqrt,
            FormArg::Half => Form::Half,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Standard,
    Orthogonal,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::Standard => Basis::Standard,
            BasisArg::Orthogonal => Basis::Orthogonal,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PellMethodArg {
    Cf,
    Brute,
}

fn parse_int(s: &str) -> Result<Int, String> {
    s.trim().parse::<Int>().map_err(|_| format!("not an integer: {s:?}"))
}

fn parse_class(s: &str) -> Result<[Int; 4], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected four comma-separated integers, got {s:?}"));
    }
    let v: Vec<Int> = parts.iter().map(|p| parse_int(p)).collect::<Result<_, _>>()?;
    Ok([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()])
}

#[derive(Clone, Debug, Args)]
pub struct OrderArgs {
    /// Radicand e of σ = √−e or σ = ½(1+√−e).
    #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
    pub e: Int,
    #[arg(long, value_enum, default_value = "sqrt")]
    pub form: FormArg,
}

/// Either a single `--e` or an inclusive range `--e-from/--e-to`.
#[derive(Clone, Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_parser = parse_int, allow_hyphen_values = true, conflicts_with_all = ["e_from", "e_to"])]
    pub e: Option<Int>,
    #[arg(long, value_parser = parse_int, requires = "e_to")]
    pub e_from: Option<Int>,
    #[arg(long, value_parser = parse_int, requires = "e_from")]
    pub e_to: Option<Int>,
}

#[derive(Clone, Debug, Args)]
pub struct ClassArgs {
    /// Four comma-separated coefficients, e.g. 4,2,-1,0.
    #[arg(long = "class", value_parser = parse_class, allow_hyphen_values = true)]
    pub coeffs: [Int; 4],
    #[arg(long, value_enum, default_value = "standard")]
    pub basis: BasisArg,
}

impl ClassArgs {
    fn class(&self) -> Class {
        Class::new(self.coeffs.clone(), self.basis.into())
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Intersection matrix in the standard or orthogonal basis.
    Gram {
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long, value_enum, default_value = "standard")]
        basis: BasisArg,
    },
    /// Whether all Seshadri constants on E×E are integers.
    Classify {
        #[command(flatten)]
        sweep: SweepArgs,
        #[arg(long, value_enum, default_value = "sqrt")]
        form: FormArg,
    },
    /// Re-express a class in the other basis.
    ChangeBasis {
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum)]
        to: BasisArg,
    },
    /// Intersection number L·M.
    Pair {
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        other: [Int; 4],
        #[arg(long, value_enum, default_value = "standard")]
        other_basis: BasisArg,
    },
    /// Ampleness test with both inequality cross-checks.
    Ample {
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Exact Seshadri constant for non-negative standard coefficients.
    SeshadriCone {
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Upper bounds (and exact values when known) for an ample class.
    SeshadriBounds {
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
    /// Enumerate square-zero primitive classes of positive degree.
    EllipticScan {
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long)]
        bound: u32,
    },
    /// Whether a modulus divides every intersection number with L.
    Divisibility {
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_parser = parse_int)]
        modulus: Int,
    },
    /// Floor square root and perfect-square flag.
    Isqrt {
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        n: Int,
    },
    /// Fractional-Seshadri witness bundle for an order.
    Witness {
        #[command(flatten)]
        sweep: SweepArgs,
        #[arg(long, value_enum, default_value = "sqrt")]
        form: FormArg,
        /// Certify this k instead of searching for the smallest one.
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        k: Option<Int>,
    },
    /// e = m²n with n square-free.
    Squarefree {
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        e: Int,
    },
    /// Check that A_k = 6e² − 2ek² has no forbidden pairs of squares.
    LemmaScan {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Defaults to ⌊√(3e)⌋ + 3.
        #[arg(long, value_parser = parse_int)]
        k_max: Option<Int>,
    },
    /// Minimal solution of ℓ² − 2dk² = 1.
    Pell {
        #[arg(long, value_parser = parse_int, allow_hyphen_values = true)]
        d: Int,
        #[arg(long, value_enum, default_value = "cf")]
        method: PellMethodArg,
        /// Largest ℓ tried by the brute-force method.
        #[arg(long, value_parser = parse_int, default_value = "1000000")]
        cutoff: Int,
    },
    /// Irreducible principal polarization for Z[√−e], e ≡ 2, 3 (mod 4).
    Ppol {
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

/// Failure of a single evaluation, mapped to an exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub kind: String,
    pub message: String,
}

impl Failure {
    fn internal(message: impl Into<String>) -> Self {
        Self { code: EXIT_INTERNAL, kind: "Internal".into(), message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let kind = match &e {
            Error::NonPositiveRadicand(_) => "NonPositiveRadicand",
            Error::HalfFormResidue(_) => "HalfFormResidue",
            Error::ZeroClass => "ZeroClass",
            Error::NegativeCoefficient => "NegativeCoefficient",
            Error::NotAmple => "NotAmple",
            Error::NotPellSolvable(_) => "NotPellSolvable",
            Error::CutoffExceeded(_) => "CutoffExceeded",
            Error::WrongResidue(_) => "WrongResidue",
            Error::InvalidArgument(_) => "InvalidArgument",
        };
        let code = if matches!(e, Error::CutoffExceeded(_)) { EXIT_CUTOFF } else { EXIT_USAGE };
        Self { code, kind: kind.into(), message: e.to_string() }
    }
}

/// `Ok(None)` means the operation legitimately found nothing.
type Outcome = Result<Option<Value>, Failure>;

fn to_value<T: Serialize>(v: T) -> Value {
    serde_json::to_value(v).expect("payloads serialize")
}

fn order_inputs(o: &OrderArgs) -> Value {
    json!({ "e": dec(&o.e), "form": Form::from(o.form).to_string() })
}

fn class_inputs(c: &ClassArgs) -> Value {
    json!({ "class": c.coeffs.clone().map(|v| v.to_string()), "basis": Basis::from(c.basis).to_string() })
}

fn merge(a: Value, b: Value) -> Value {
    let (Value::Object(mut a), Value::Object(b)) = (a, b) else { unreachable!("inputs are objects") };
    a.extend(b);
    Value::Object(a)
}

fn order_of(o: &OrderArgs) -> Result<Order, Failure> {
    Ok(Order::new(o.e.clone(), o.form.into())?)
}

fn standard_of(c: &Class, order: &Order) -> ClassOut {
    ClassOut::from(&change_basis(c, Basis::Standard, order))
}

fn witness_out(w: &Witness) -> WitnessOut {
    let (lo, hi) = w.interval();
    WitnessOut {
        order: w.order.to_string(),
        k: dec(&w.k),
        bundle: ClassOut::from(&w.bundle),
        bundle_standard: standard_of(&w.bundle, &w.order),
        self_int: dec(&w.self_int),
        nonsquare_root: dec(&w.nonsquare_root),
        sqrt_e_floor: dec(&lo.root),
        sqrt_3e_floor: dec(&hi.root),
        divisibility_modulus: dec(&w.divisibility_modulus),
        half_bundle: w.half_bundle().as_ref().map(ClassOut::from),
        half_bundle_self_int: w.half_bundle_self_int().as_ref().map(dec),
        verified: w.verify(),
    }
}

fn eval_classify(e: &Int, form: FormArg) -> Outcome {
    let order = Order::new(e.clone(), form.into())?;
    Ok(Some(to_value(ClassifyOut {
        order: order.to_string(),
        norm_sigma: dec(&order.norm_sigma()),
        norm_one_minus_sigma: dec(&order.norm_one_minus_sigma()),
        twice_re_sigma: dec(&order.twice_re_sigma()),
        integrality: order.classify_integrality().to_string(),
    })))
}

fn eval_witness(e: &Int, form: FormArg, k: Option<&Int>) -> Outcome {
    let order = Order::new(e.clone(), form.into())?;
    let w = match k {
        Some(k) => Witness::for_k(&order, k.clone()),
        None => witness_search(&order),
    };
    match w {
        None => Ok(None),
        Some(w) => {
            let out = witness_out(&w);
            if !out.verified {
                return Err(Failure::internal(format!("witness for {order} failed re-verification")));
            }
            Ok(Some(to_value(out)))
        }
    }
}

fn default_k_max(e: &Int) -> Int {
    isqrt_floor(&(Int::from(3) * e.clone())).root + Int::from(3)
}

fn eval_lemma(e: &Int, k_max: Option<&Int>) -> Outcome {
    let k_max = k_max.cloned().unwrap_or_else(|| default_k_max(e));
    let r = lemma_square_scan(e, &k_max)?;
    let out = LemmaOut {
        m: dec(&r.decomposition.m),
        n: dec(&r.decomposition.n),
        k_max: dec(&r.k_max),
        two_step_checked: r.two_step_checked,
        square_ks: r.square_ks.iter().map(dec).collect(),
        violations: r.violations.iter().map(|v| ViolationOut { k: dec(&v.k), step: v.step.to_string() }).collect(),
        holds: r.holds(),
    };
    if !out.holds {
        return Err(Failure::internal(format!("square lemma violated at e = {e}: {:?}", out.violations)));
    }
    Ok(Some(to_value(out)))
}

fn eval_ppol(e: &Int) -> Outcome {
    let c = principal_polarization(e)?;
    if !c.holds() {
        return Err(Failure::internal(format!("principal polarization certificate failed at e = {e}")));
    }
    Ok(Some(to_value(PpolOut {
        order: c.order.to_string(),
        bundle: ClassOut::from(&c.bundle),
        bundle_standard: standard_of(&c.bundle, &c.order),
        self_int: dec(&c.self_int),
        ample: c.ample,
        evenness: c.evenness,
        reported_epsilon: rational(&c.reported_epsilon),
        epsilon_source: "imported".into(),
    })))
}

fn eval_single(command: &Command) -> Outcome {
    match command {
        Command::Gram { order, basis } => {
            let o = order_of(order)?;
            let g = match basis {
                BasisArg::Standard => gram_standard(&o),
                BasisArg::Orthogonal => gram_orthogonal(&o),
            };
            let (pos, neg) = g.signature();
            Ok(Some(to_value(GramOut {
                order: o.to_string(),
                basis: Basis::from(*basis).to_string(),
                matrix: g.entries().iter().map(|row| row.iter().map(dec).collect()).collect(),
                determinant: dec(&g.determinant()),
                signature: [pos.to_string(), neg.to_string()],
            })))
        }
        Command::ChangeBasis { order, class, to } => {
            let o = order_of(order)?;
            let c = class.class();
            let out = change_basis(&c, (*to).into(), &o);
            Ok(Some(to_value(ChangeBasisOut { input: ClassOut::from(&c), output: ClassOut::from(&out) })))
        }
        Command::Pair { order, class, other, other_basis } => {
            let o = order_of(order)?;
            let m = Class::new(other.clone(), (*other_basis).into());
            Ok(Some(to_value(PairOut { value: dec(&pair(&class.class(), &m, &o)) })))
        }
        Command::Ample { order, class } => {
            let o = order_of(order)?;
            let c = class.class();
            let out = AmpleOut {
                ample: is_ample(&c, &o),
                fiber_degree: dec(&fiber_degree(&c, &o)),
                self_int: dec(&self_int(&c, &o)),
                standard_inequalities: is_ample_standard(&c, &o),
                orthogonal_inequalities: is_ample_orthogonal(&c, &o),
                primitive: c.is_primitive().ok(),
            };
            if out.ample != out.standard_inequalities || out.ample != out.orthogonal_inequalities {
                return Err(Failure::internal("ampleness formulations disagree"));
            }
            Ok(Some(to_value(out)))
        }
        Command::SeshadriCone { order, class } => {
            let o = order_of(order)?;
            let c = class.class();
            let eps = seshadri_cone(&c, &o)?;
            Ok(Some(to_value(SeshadriConeOut {
                epsilon: dec(&eps),
                curve_degrees: curve_degrees(&c, &o).map(|v| v.to_string()),
                self_int: dec(&self_int(&c, &o)),
            })))
        }
        Command::SeshadriBounds { order, class, bound } => {
            let o = order_of(order)?;
            let est = seshadri_upper_bounds(&class.class(), &o, *bound)?;
            if !est.exact_within_sqrt_bound() {
                return Err(Failure::internal("exact value exceeds √(L²)"));
            }
            Ok(Some(to_value(EstimateOut {
                self_int: dec(&est.self_int),
                sqrt_floor: dec(&est.upper_bound_sqrt.root),
                sqrt_is_square: est.upper_bound_sqrt.is_square,
                exact_value: est.exact_value.as_ref().map(rational),
                method: est.method.to_string(),
                elliptic_min: est.elliptic_min.as_ref().map(|m| dec(&m.value)),
                elliptic_min_class: est.elliptic_min.as_ref().map(|m| ClassOut::from(&m.class)),
            })))
        }
        Command::EllipticScan { order, bound } => {
            let o = order_of(order)?;
            let classes = enumerate_elliptic_classes(&o, *bound);
            Ok(Some(to_value(EllipticScanOut {
                bound: bound.to_string(),
                count: classes.len().to_string(),
                classes: classes.iter().map(ClassOut::from).collect(),
            })))
        }
        Command::Divisibility { order, class, modulus } => {
            let o = order_of(order)?;
            if !modulus.is_positive() {
                return Err(Error::InvalidArgument(format!("modulus must be positive, got {modulus}")).into());
            }
            let c = class.class();
            Ok(Some(to_value(DivisibilityOut {
                modulus: dec(modulus),
                divides: check_divisibility(&c, &o, modulus),
                curve_degrees: curve_degrees(&c, &o).map(|v| v.to_string()),
            })))
        }
        Command::Isqrt { n } => {
            if n.is_negative() {
                return Err(Error::InvalidArgument(format!("n must be non-negative, got {n}")).into());
            }
            let r = isqrt_floor(n);
            Ok(Some(to_value(IsqrtOut { root: dec(&r.root), is_square: r.is_square })))
        }
        Command::Squarefree { e } => {
            let d = squarefree_decompose(e)?;
            Ok(Some(to_value(SquarefreeOut { m: dec(&d.m), n: dec(&d.n) })))
        }
        Command::Pell { d, method, cutoff } => {
            let m = match method {
                PellMethodArg::Cf => PellMethod::ContinuedFraction,
                PellMethodArg::Brute => PellMethod::BruteForce { cutoff: cutoff.clone() },
            };
            let s = pell_min_with(d, &m)?;
            if !s.satisfies() {
                return Err(Failure::internal("Pell solution does not satisfy the equation"));
            }
            Ok(Some(to_value(PellOut {
                d: dec(&s.d),
                ell: dec(&s.ell),
                k: dec(&s.k),
                method: format!("{method:?}").to_lowercase(),
            })))
        }
        Command::Classify { .. } | Command::Witness { .. } | Command::LemmaScan { .. } | Command::Ppol { .. } => {
            unreachable!("sweep commands are evaluated per e")
        }
    }
}

fn single_inputs(command: &Command) -> (&'static str, Value) {
    match command {
        Command::Gram { order, basis } => {
            ("gram", merge(order_inputs(order), json!({ "basis": Basis::from(*basis).to_string() })))
        }
        Command::ChangeBasis { order, class, to } => (
            "change-basis",
            merge(merge(order_inputs(order), class_inputs(class)), json!({ "to": Basis::from(*to).to_string() })),
        ),
        Command::Pair { order, class, other, other_basis } => (
            "pair",
            merge(
                merge(order_inputs(order), class_inputs(class)),
                json!({
                    "other": other.clone().map(|v| v.to_string()),
                    "other_basis": Basis::from(*other_basis).to_string(),
                }),
            ),
        ),
        Command::Ample { order, class } => ("ample", merge(order_inputs(order), class_inputs(class))),
        Command::SeshadriCone { order, class } => {
            ("seshadri-cone", merge(order_inputs(order), class_inputs(class)))
        }
        Command::SeshadriBounds { order, class, bound } => (
            "seshadri-bounds",
            merge(merge(order_inputs(order), class_inputs(class)), json!({ "bound": bound.to_string() })),
        ),
        Command::EllipticScan { order, bound } => {
            ("elliptic-scan", merge(order_inputs(order), json!({ "bound": bound.to_string() })))
        }
        Command::Divisibility { order, class, modulus } => (
            "divisibility",
            merge(merge(order_inputs(order), class_inputs(class)), json!({ "modulus": dec(modulus) })),
        ),
        Command::Isqrt { n } => ("isqrt", json!({ "n": dec(n) })),
        Command::Squarefree { e } => ("squarefree", json!({ "e": dec(e) })),
        Command::Pell { d, method, cutoff } => {
            let mut v = json!({ "d": dec(d), "method": format!("{method:?}").to_lowercase() });
            if *method == PellMethodArg::Brute {
                v = merge(v, json!({ "cutoff": dec(cutoff) }));
            }
            ("pell", v)
        }
        Command::Classify { .. } | Command::Witness { .. } | Command::LemmaScan { .. } | Command::Ppol { .. } => {
            unreachable!("sweep commands carry per-e inputs")
        }
    }
}

/// A sweep-capable command bound to one value of e.
fn sweep_eval(command: &Command, e: &Int) -> (&'static str, Value, Outcome) {
    match command {
        Command::Classify { form, .. } => (
            "classify",
            json!({ "e": dec(e), "form": Form::from(*form).to_string() }),
            eval_classify(e, *form),
        ),
        Command::Witness { form, k, .. } => {
            let mut inputs = json!({ "e": dec(e), "form": Form::from(*form).to_string() });
            if let Some(k) = k {
                inputs = merge(inputs, json!({ "k": dec(k) }));
            }
            ("witness", inputs, eval_witness(e, *form, k.as_ref()))
        }
        Command::LemmaScan { k_max, .. } => {
            let km = k_max.clone().unwrap_or_else(|| default_k_max(e));
            ("lemma-scan", json!({ "e": dec(e), "k_max": dec(&km) }), eval_lemma(e, Some(&km)))
        }
        Command::Ppol { .. } => ("ppol", json!({ "e": dec(e) }), eval_ppol(e)),
        _ => unreachable!("not a sweep command"),
    }
}

/// Whether a sweep visits e. Sweeps skip values for which the command is
/// undefined rather than emitting an error per value.
fn sweep_accepts(command: &Command, e: &Int) -> bool {
    let residue = e.mod_floor(&Int::from(4));
    match command {
        Command::Classify { form, .. } | Command::Witness { form, .. } => {
            e.is_positive() && (*form == FormArg::Sqrt || residue == Int::from(3))
        }
        Command::LemmaScan { .. } => *e >= Int::from(2),
        Command::Ppol { .. } => residue == Int::from(2) || residue == Int::from(3),
        _ => false,
    }
}

fn sweep_of(command: &Command) -> Option<&SweepArgs> {
    match command {
        Command::Classify { sweep, .. }
        | Command::Witness { sweep, .. }
        | Command::LemmaScan { sweep, .. }
        | Command::Ppol { sweep } => Some(sweep),
        _ => None,
    }
}

fn envelope(command: &str, inputs: Value, outcome: Outcome) -> (Envelope, i32, Option<Failure>) {
    match outcome {
        Ok(Some(result)) => (Envelope::new(command, inputs, result, Status::Ok), EXIT_OK, None),
        Ok(None) => (Envelope::new(command, inputs, Value::Null, Status::None), EXIT_OK, None),
        Err(f) => {
            let result = to_value(ErrorOut { kind: f.kind.clone(), message: f.message.clone() });
            (Envelope::new(command, inputs, result, Status::Error), f.code, Some(f))
        }
    }
}

/// Run a parsed command, writing envelopes to `out` and error messages to
/// `err`. Returns the process exit code.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut emit = |env: &Envelope, failure: Option<&Failure>| {
        if cli.json {
            writeln!(out, "{}", serde_json::to_string(env).expect("envelope serializes")).ok();
        } else if let Some(f) = failure {
            writeln!(err, "error: {}", f.message).ok();
        } else {
            write!(out, "{}", render::text(env)).ok();
        }
    };

    let Some(sweep) = sweep_of(&cli.command) else {
        let (name, inputs) = single_inputs(&cli.command);
        let (env, code, failure) = envelope(name, inputs, eval_single(&cli.command));
        emit(&env, failure.as_ref());
        return code;
    };

    match (&sweep.e, &sweep.e_from, &sweep.e_to) {
        (Some(e), _, _) => {
            let (name, inputs, outcome) = sweep_eval(&cli.command, e);
            let (env, code, failure) = envelope(name, inputs, outcome);
            emit(&env, failure.as_ref());
            code
        }
        (None, Some(from), Some(to)) => {
            if from > to {
                writeln!(err, "error: --e-from must not exceed --e-to").ok();
                return EXIT_USAGE;
            }
            let mut code = EXIT_OK;
            let mut e = from.clone();
            const CHUNK: usize = 256;
            while e <= *to {
                let mut chunk = Vec::with_capacity(CHUNK);
                while chunk.len() < CHUNK && e <= *to {
                    if sweep_accepts(&cli.command, &e) {
                        chunk.push(e.clone());
                    }
                    e += Int::one();
                }
                // evaluated in parallel, emitted in ascending e
                let results: Vec<_> = chunk
                    .par_iter()
                    .map(|e| {
                        let (name, inputs, outcome) = sweep_eval(&cli.command, e);
                        envelope(name, inputs, outcome)
                    })
                    .collect();
                for (env, c, failure) in results {
                    emit(&env, failure.as_ref());
                    code = code.max(c);
                }
            }
            code
        }
        _ => {
            writeln!(err, "error: give either --e or both --e-from and --e-to").ok();
            EXIT_USAGE
        }
    }
}

/// Parse `args` (including the program name) and execute.
pub fn run_with_args<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli, out, err),
        Err(e) => {
            write!(err, "{e}").ok();
            if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            }
        }
    }
}
