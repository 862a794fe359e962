//! Topological indices of the spinor operators via characteristic numbers.
//!
//! For a closed spin manifold `M` of even dimension, the index of each
//! operator in the family is the pairing of a universal polynomial in
//! Pontryagin classes with the fundamental class:
//!
//! * Dirac `D_1/2`: `∫ Â`.
//! * Dirac twisted by the complexified cotangent bundle `D_T`:
//!   `∫ Ch(T*_C)·Â`.
//! * Higher-spin `D_j` (with `D_3/2` the Rarita-Schwinger case `j = 1`):
//!   `(−1)^{j+1} ∫ (Ch(Λ^j T*_C) + Ch(Λ^{j−1} T*_C))·Â`.
//!
//! The `D_j` integrand comes from the recursion
//! `Ch(V_j⁺) − Ch(V_j⁻) = (−1)^{j+1}(Ch(Λ^j) + Ch(Λ^{j−1}))·(Ch(S⁺) − Ch(S⁻))`;
//! a competing closed form (`∫(Ch(Λ^{j−1}) − Ch(Λ^j))Â`, no sign) circulates
//! but fails its own `j = 1` specialization, which the recursion form
//! reproduces exactly. [`FormComparison`] computes both so the disagreement
//! is visible rather than silently resolved; [`dim8_audit`] does the same for
//! the widely quoted degree-8 Rarita-Schwinger coefficients, where the
//! engine's `p₁²` term differs from the traditional printed value.
//!
//! Everything is exact; manifolds enter only through their Pontryagin
//! numbers, supplied as a [`ManifoldDescriptor`].

use std::collections::BTreeMap;
use std::sync::{LazyLock, Mutex};

use num::{BigInt, BigRational, One, Zero};
use serde_json::{json, Value};

use crate::charclass::{
    ahat_series, ch_cotangent, ch_exterior_cotangent, format_pont_monomial,
    parse_pont_monomial, pont_weight, CharClass, PontMonomial,
};
use crate::{Error, Result};

/// The operator whose topological index is requested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OperatorKind {
    /// The spin Dirac operator `D_1/2`.
    Dirac,
    /// The Dirac operator twisted by the complexified cotangent bundle.
    TwistedCotangent,
    /// The higher-spin operator `D_j`, `j ≥ 1`; `j = 1` is Rarita-Schwinger.
    HigherSpin(usize),
}

impl OperatorKind {
    /// Canonical report tag: `D_1/2`, `D_T`, `D_3/2`, `D_5/2`, …
    pub fn tag(&self) -> String {
        match self {
            OperatorKind::Dirac => "D_1/2".to_string(),
            OperatorKind::TwistedCotangent => "D_T".to_string(),
            OperatorKind::HigherSpin(j) => format!("D_{}/2", 2 * j + 1),
        }
    }
}

/// A manifold reduced to the data the index formulas consume: its dimension
/// and its Pontryagin numbers (pairings of degree-`dim` monomials in `p_i`
/// with the fundamental class).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldDescriptor {
    pub dim: usize,
    pub pontryagin_numbers: BTreeMap<PontMonomial, BigRational>,
}

fn parse_big_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::InvalidDescriptor(format!("cannot parse rational '{text}'"));
    match text.split_once('/') {
        Some((n, d)) => {
            let num: BigInt = n.trim().parse().map_err(|_| bad())?;
            let den: BigInt = d.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::InvalidDescriptor(format!(
                    "zero denominator in '{text}'"
                )));
            }
            Ok(BigRational::new(num, den))
        }
        None => {
            let num: BigInt = text.trim().parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(num))
        }
    }
}

fn rational_from_value(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigRational::from_integer(BigInt::from(i)))
            } else {
                Err(Error::InvalidDescriptor(format!(
                    "number {n} is not an exact integer; write rationals as \"a/b\" or {{\"num\", \"den\"}}"
                )))
            }
        }
        Value::String(s) => parse_big_rational(s),
        Value::Object(map) => {
            let field = |key: &str| -> Result<BigInt> {
                match map.get(key) {
                    Some(Value::Number(n)) => n
                        .as_i64()
                        .map(BigInt::from)
                        .ok_or_else(|| Error::InvalidDescriptor(format!("non-integer '{key}'"))),
                    Some(Value::String(s)) => s
                        .trim()
                        .parse()
                        .map_err(|_| Error::InvalidDescriptor(format!("bad '{key}' value"))),
                    _ => Err(Error::InvalidDescriptor(format!(
                        "rational object missing '{key}'"
                    ))),
                }
            };
            let num = field("num")?;
            let den = field("den")?;
            if den.is_zero() {
                return Err(Error::InvalidDescriptor("zero denominator".into()));
            }
            Ok(BigRational::new(num, den))
        }
        other => Err(Error::InvalidDescriptor(format!(
            "expected a rational value, got {other}"
        ))),
    }
}

impl ManifoldDescriptor {
    pub fn new(dim: usize) -> Self {
        ManifoldDescriptor {
            dim,
            pontryagin_numbers: BTreeMap::new(),
        }
    }

    pub fn with_number(mut self, monomial: &str, value: BigRational) -> Result<Self> {
        let key = parse_pont_monomial(monomial)?;
        self.pontryagin_numbers.insert(key, value);
        self.validate()?;
        Ok(self)
    }

    /// Parses the JSON document format:
    /// `{"dim": 8, "pontryagin_numbers": {"p1^2": 768, "p2": "-48/1"}}`.
    /// Values may be integers, `"a/b"` strings, or `{"num", "den"}` objects;
    /// floating-point numbers are rejected.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| Error::InvalidDescriptor(format!("invalid JSON: {e}")))?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::InvalidDescriptor("descriptor must be a JSON object".into()))?;
        let dim = obj
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::InvalidDescriptor("missing integer field 'dim'".into()))?
            as usize;
        let mut numbers = BTreeMap::new();
        if let Some(v) = obj.get("pontryagin_numbers") {
            let map = v.as_object().ok_or_else(|| {
                Error::InvalidDescriptor("'pontryagin_numbers' must be an object".into())
            })?;
            for (key, val) in map {
                let mono = parse_pont_monomial(key)?;
                let rat = rational_from_value(val)?;
                numbers.insert(mono, rat);
            }
        }
        let descriptor = ManifoldDescriptor {
            dim,
            pontryagin_numbers: numbers,
        };
        descriptor.validate()?;
        Ok(descriptor)
    }

    /// Checks the dimension range and that every listed monomial is a
    /// `dim`-form (weight `4·Σ i·aᵢ = dim`), the only pairings that exist.
    pub fn validate(&self) -> Result<()> {
        if !(4..=12).contains(&self.dim) {
            return Err(Error::InvalidDescriptor(format!(
                "dimension {} outside the supported range 4..=12",
                self.dim
            )));
        }
        for mono in self.pontryagin_numbers.keys() {
            if 4 * pont_weight(mono) != self.dim {
                return Err(Error::InvalidDescriptor(format!(
                    "monomial {} is a {}-form; a dim-{} descriptor only pairs {}-forms",
                    format_pont_monomial(mono),
                    4 * pont_weight(mono),
                    self.dim,
                    self.dim
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mut numbers = serde_json::Map::new();
        for (mono, value) in &self.pontryagin_numbers {
            numbers.insert(
                format_pont_monomial(mono),
                json!({
                    "num": value.numer().to_string(),
                    "den": value.denom().to_string(),
                }),
            );
        }
        json!({ "dim": self.dim, "pontryagin_numbers": Value::Object(numbers) })
    }
}

/// The outcome of one index evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub operator: String,
    pub dim: usize,
    /// Canonical string of the top-degree symbolic class that was paired.
    pub symbolic_class: String,
    pub index: BigRational,
    pub is_integer: bool,
    pub note: Option<String>,
}

impl IndexReport {
    pub fn to_json(&self) -> Value {
        let mut obj = json!({
            "operator": self.operator,
            "dim": self.dim,
            "symbolic_class": self.symbolic_class,
            "index": {
                "num": self.index.numer().to_string(),
                "den": self.index.denom().to_string(),
            },
            "is_integer": self.is_integer,
        });
        if let Some(note) = &self.note {
            obj["note"] = json!(note);
        }
        obj
    }
}

impl std::fmt::Display for IndexReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "operator:       {}", self.operator)?;
        writeln!(f, "dim:            {}", self.dim)?;
        writeln!(f, "symbolic class: {}", self.symbolic_class)?;
        writeln!(f, "index:          {}", self.index)?;
        write!(f, "integer:        {}", self.is_integer)?;
        if let Some(note) = &self.note {
            write!(f, "\nnote:           {note}")?;
        }
        Ok(())
    }
}

static INTEGRAND_MEMO: LazyLock<Mutex<BTreeMap<(usize, String), CharClass>>> =
    LazyLock::new(|| Mutex::new(BTreeMap::new()));

fn check_hsd_range(dim: usize, j: usize) -> Result<()> {
    let n = dim / 2;
    if j == 0 || j >= n {
        return Err(Error::UnsupportedParameter(format!(
            "higher-spin index needs 1 ≤ j < dim/2; got j={j} in dimension {dim}"
        )));
    }
    Ok(())
}

/// The full (all-degrees) symbolic integrand for an operator on even `dim`.
/// Cached per `(dim, operator)`; population is idempotent.
pub fn symbolic_integrand(dim: usize, op: OperatorKind) -> Result<CharClass> {
    if let OperatorKind::HigherSpin(j) = op {
        check_hsd_range(dim, j)?;
    }
    let key = (dim, op.tag());
    if let Some(hit) = INTEGRAND_MEMO.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let ahat = ahat_series(dim)?;
    let class = match op {
        OperatorKind::Dirac => ahat,
        OperatorKind::TwistedCotangent => ch_cotangent(dim)?.mul(&ahat),
        OperatorKind::HigherSpin(j) => {
            let sum = ch_exterior_cotangent(dim, j)?.add(&ch_exterior_cotangent(dim, j - 1)?);
            let signed = if j % 2 == 1 {
                sum
            } else {
                sum.scale(&BigRational::from_integer(BigInt::from(-1)))
            };
            signed.mul(&ahat)
        }
    };
    INTEGRAND_MEMO
        .lock()
        .unwrap()
        .entry(key)
        .or_insert_with(|| class.clone());
    Ok(class)
}

/// The top-degree (volume-form) component of the symbolic integrand: the
/// polynomial actually paired with Pontryagin numbers.
pub fn symbolic_index_class(dim: usize, op: OperatorKind) -> Result<CharClass> {
    Ok(symbolic_integrand(dim, op)?.top_part())
}

/// Evaluates the index of `op` on the manifold described by `descriptor`.
pub fn index_for(descriptor: &ManifoldDescriptor, op: OperatorKind) -> Result<IndexReport> {
    descriptor.validate()?;
    if let OperatorKind::HigherSpin(j) = op {
        check_hsd_range(descriptor.dim, j)?;
    }
    if descriptor.dim % 2 == 1 {
        return Ok(IndexReport {
            operator: op.tag(),
            dim: descriptor.dim,
            symbolic_class: "0".to_string(),
            index: BigRational::zero(),
            is_integer: true,
            note: Some("odd-dimensional index vanishes".to_string()),
        });
    }
    let top = symbolic_index_class(descriptor.dim, op)?;
    let index = top.pair(&descriptor.pontryagin_numbers);
    let note = if descriptor.dim % 4 != 0 {
        Some(format!(
            "no 4k-form reaches degree {}; the index is identically 0",
            descriptor.dim
        ))
    } else {
        None
    };
    Ok(IndexReport {
        operator: op.tag(),
        dim: descriptor.dim,
        symbolic_class: top.to_string(),
        is_integer: index.denom().is_one(),
        index,
        note,
    })
}

pub fn index_dirac(descriptor: &ManifoldDescriptor) -> Result<IndexReport> {
    index_for(descriptor, OperatorKind::Dirac)
}

pub fn index_twisted_cotangent(descriptor: &ManifoldDescriptor) -> Result<IndexReport> {
    index_for(descriptor, OperatorKind::TwistedCotangent)
}

pub fn index_rarita_schwinger(descriptor: &ManifoldDescriptor) -> Result<IndexReport> {
    index_for(descriptor, OperatorKind::HigherSpin(1))
}

pub fn index_hsd(descriptor: &ManifoldDescriptor, j: usize) -> Result<IndexReport> {
    index_for(descriptor, OperatorKind::HigherSpin(j))
}

/// Side-by-side evaluation of the two circulating closed forms for the
/// higher-spin index integrand. The recursion form is the one the engine
/// uses; the difference form is shown for the record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormComparison {
    pub dim: usize,
    pub j: usize,
    /// Top part of `(−1)^{j+1}(Ch(Λ^j) + Ch(Λ^{j−1}))·Â`.
    pub recursion_class: String,
    /// Top part of `(Ch(Λ^{j−1}) − Ch(Λ^j))·Â`.
    pub difference_class: String,
    pub agree: bool,
}

pub fn closed_form_comparison(dim: usize, j: usize) -> Result<FormComparison> {
    check_hsd_range(dim, j)?;
    let recursion = symbolic_index_class(dim, OperatorKind::HigherSpin(j))?;
    let ahat = ahat_series(dim)?;
    let difference = ch_exterior_cotangent(dim, j - 1)?
        .sub(&ch_exterior_cotangent(dim, j)?)
        .mul(&ahat)
        .top_part();
    Ok(FormComparison {
        dim,
        j,
        agree: recursion == difference,
        recursion_class: recursion.to_string(),
        difference_class: difference.to_string(),
    })
}

impl FormComparison {
    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "j": self.j,
            "recursion_class": self.recursion_class,
            "difference_class": self.difference_class,
            "agree": self.agree,
        })
    }
}

/// The degree-8 Rarita-Schwinger coefficient audit.
///
/// The engine expands `(Ch(Λ¹) + 1)·Â` on an 8-manifold twice — once fully in
/// Chern roots, once by multiplying the two factors in the truncated
/// Pontryagin ring — and compares both against the traditional printed
/// coefficients `(543·p₁² − 996·p₂)/5760`. The `p₂` term agrees; the `p₁²`
/// term does not (the printed expansion drops the `p₁·(−p₁/24)` cross term:
/// `480 + 63 = 543` where the full product gives `480 − 240 + 63 = 303`).
/// Downstream, the relation `Ind D_3/2 = c·Ind D_1/2 + r·∫p₁²` then has
/// `r = −1/4` rather than the printed `−21/144`. Nothing is corrected
/// silently: every value is reported next to its printed counterpart with an
/// agreement flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dim8Audit {
    /// Engine value via full Chern-root expansion.
    pub engine_class: String,
    /// Engine value via truncated Pontryagin-ring product of the two factors.
    pub product_route_class: String,
    /// The two engine routes must agree for the audit to be meaningful.
    pub routes_agree: bool,
    pub engine_p1sq: BigRational,
    pub engine_p2: BigRational,
    pub printed_p1sq: BigRational,
    pub printed_p2: BigRational,
    pub p1sq_matches_printed: bool,
    pub p2_matches_printed: bool,
    /// Multiple of the Dirac index in the linear relation, derived by
    /// matching `p₂` coefficients (the engine's and the printed expansion's
    /// agree here: 249).
    pub dirac_multiple: BigRational,
    /// Engine coefficient of `∫p₁²` in the linear relation.
    pub engine_p1sq_correction: BigRational,
    /// Printed coefficient of `∫p₁²` in the linear relation.
    pub printed_p1sq_correction: BigRational,
    pub correction_matches_printed: bool,
    /// The two closed forms for the `j = 1` integrand on dim 8.
    pub forms: FormComparison,
}

pub fn dim8_audit() -> Result<Dim8Audit> {
    let rat = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    // Route 1: Chern-root expansion (what the index functions use).
    let engine = symbolic_index_class(8, OperatorKind::HigherSpin(1))?;
    // Route 2: product in the truncated Pontryagin ring.
    let ahat = ahat_series(8)?;
    let factor = ch_cotangent(8)?.add(&CharClass::one(8));
    let product_route = factor.mul(&ahat).top_part();

    let engine_p1sq = engine.coefficient(&[2]);
    let engine_p2 = engine.coefficient(&[0, 1]);
    let printed_p1sq = rat(543, 5760);
    let printed_p2 = rat(-996, 5760);

    let ahat_p1sq = ahat.coefficient(&[2]);
    let ahat_p2 = ahat.coefficient(&[0, 1]);
    // Match p₂: Ind D_3/2 − c·Ind D_1/2 must have no p₂ term.
    let dirac_multiple = &engine_p2 / &ahat_p2;
    let engine_correction = &engine_p1sq - &dirac_multiple * &ahat_p1sq;
    let printed_correction = rat(-21, 144);

    Ok(Dim8Audit {
        routes_agree: engine == product_route,
        engine_class: engine.to_string(),
        product_route_class: product_route.to_string(),
        p1sq_matches_printed: engine_p1sq == printed_p1sq,
        p2_matches_printed: engine_p2 == printed_p2,
        correction_matches_printed: engine_correction == printed_correction,
        engine_p1sq,
        engine_p2,
        printed_p1sq,
        printed_p2,
        dirac_multiple,
        engine_p1sq_correction: engine_correction,
        printed_p1sq_correction: printed_correction,
        forms: closed_form_comparison(8, 1)?,
    })
}

impl Dim8Audit {
    pub fn to_json(&self) -> Value {
        let rat_json = |r: &BigRational| {
            json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
        };
        json!({
            "engine_class": self.engine_class,
            "product_route_class": self.product_route_class,
            "routes_agree": self.routes_agree,
            "engine_p1sq": rat_json(&self.engine_p1sq),
            "engine_p2": rat_json(&self.engine_p2),
            "printed_p1sq": rat_json(&self.printed_p1sq),
            "printed_p2": rat_json(&self.printed_p2),
            "p1sq_matches_printed": self.p1sq_matches_printed,
            "p2_matches_printed": self.p2_matches_printed,
            "dirac_multiple": rat_json(&self.dirac_multiple),
            "engine_p1sq_correction": rat_json(&self.engine_p1sq_correction),
            "printed_p1sq_correction": rat_json(&self.printed_p1sq_correction),
            "correction_matches_printed": self.correction_matches_printed,
            "closed_forms": self.forms.to_json(),
        })
    }
}

/// The standard K3-surface descriptor (`dim 4`, `p₁[M] = −48`), the canonical
/// integer test case.
pub fn k3_descriptor() -> ManifoldDescriptor {
    ManifoldDescriptor::new(4)
        .with_number("p1", BigRational::from_integer(BigInt::from(-48)))
        .expect("K3 descriptor is valid")
}
