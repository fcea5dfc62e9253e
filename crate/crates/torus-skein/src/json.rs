//! JSON wire formats.
//!
//! Laurent polynomials serialize as maps from decimal exponent strings to
//! decimal coefficient strings, e.g. `{"-2": "1", "0": "-3"}` for
//! `t^-2 - 3`. Exact scalars are `{"num": ..., "den": ...}`, numeric ones
//! `{"re": ..., "im": ...}`. Elements are `{"basis": "T", "terms": [...]}`
//! with terms sorted by (p,q); the simple basis adds a multiplicity
//! field `n`. Serialization is deterministic, and deserializing our own
//! output reproduces it byte for byte.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::algebra::{CurveIndex, SimpleElement, SkeinElement};
use crate::quotient::{CommutatorCertificate, QuotientVector, Witness, ALL_CLASSES};
use crate::scalar::{LaurentPoly, RationalScalar, Scalar, ScalarContext, ScalarMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid JSON: {0}")]
pub struct JsonError(pub String);

fn bad(msg: impl Into<String>) -> JsonError {
    JsonError(msg.into())
}

pub fn laurent_to_value(p: &LaurentPoly) -> Value {
    let mut map = Map::new();
    for (exp, c) in p.terms() {
        map.insert(exp.to_string(), Value::String(c.to_string()));
    }
    Value::Object(map)
}

pub fn laurent_from_value(v: &Value) -> Result<LaurentPoly, JsonError> {
    let obj = v.as_object().ok_or_else(|| bad("expected exponent map"))?;
    let mut p = LaurentPoly::zero();
    for (k, c) in obj {
        let exp: i64 = k
            .parse()
            .map_err(|_| bad(format!("bad exponent key {k:?}")))?;
        let c = c
            .as_str()
            .ok_or_else(|| bad("coefficient must be a string"))?;
        let c: BigInt = c
            .parse()
            .map_err(|_| bad(format!("bad coefficient {c:?}")))?;
        p.add_term(exp, c);
    }
    Ok(p)
}

pub fn scalar_to_value(s: &Scalar) -> Value {
    match s {
        Scalar::Exact(r) => json!({
            "num": laurent_to_value(r.numerator()),
            "den": laurent_to_value(r.denominator()),
        }),
        Scalar::Numeric(z) => json!({ "re": z.re, "im": z.im }),
    }
}

pub fn scalar_from_value(v: &Value) -> Result<Scalar, JsonError> {
    let obj = v.as_object().ok_or_else(|| bad("expected scalar object"))?;
    if obj.contains_key("re") || obj.contains_key("im") {
        let re = obj
            .get("re")
            .and_then(Value::as_f64)
            .ok_or_else(|| bad("missing \"re\""))?;
        let im = obj
            .get("im")
            .and_then(Value::as_f64)
            .ok_or_else(|| bad("missing \"im\""))?;
        return Ok(Scalar::Numeric(num_complex::Complex64::new(re, im)));
    }
    let num = laurent_from_value(obj.get("num").ok_or_else(|| bad("missing \"num\""))?)?;
    let den = laurent_from_value(obj.get("den").ok_or_else(|| bad("missing \"den\""))?)?;
    let r = RationalScalar::new(num, den).map_err(|e| bad(e.to_string()))?;
    Ok(Scalar::Exact(r))
}

pub fn curve_to_value(c: CurveIndex) -> Value {
    json!({ "p": c.p(), "q": c.q() })
}

pub fn curve_from_value(v: &Value) -> Result<CurveIndex, JsonError> {
    let p = v
        .get("p")
        .and_then(Value::as_i64)
        .ok_or_else(|| bad("missing \"p\""))?;
    let q = v
        .get("q")
        .and_then(Value::as_i64)
        .ok_or_else(|| bad("missing \"q\""))?;
    Ok(CurveIndex::new(p, q))
}

pub fn element_to_value(e: &SkeinElement) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(c, s)| json!({ "p": c.p(), "q": c.q(), "coeff": scalar_to_value(s) }))
        .collect();
    json!({ "basis": "T", "terms": terms })
}

pub fn element_from_value(v: &Value) -> Result<SkeinElement, JsonError> {
    if v.get("basis").and_then(Value::as_str) != Some("T") {
        return Err(bad("expected \"basis\": \"T\""));
    }
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"terms\" array"))?;
    let mut e = SkeinElement::zero();
    let mut mode = None;
    for t in terms {
        let idx = curve_from_value(t)?;
        let coeff = scalar_from_value(t.get("coeff").ok_or_else(|| bad("missing \"coeff\""))?)?;
        check_mode(&mut mode, &coeff)?;
        if e.coeff(idx).is_some() {
            return Err(bad(format!("duplicate term ({},{})", idx.p(), idx.q())));
        }
        if !coeff.is_zero() {
            e = e
                .add(&SkeinElement::single(idx, coeff), &ctx_for(mode))
                .map_err(|err| bad(err.to_string()))?;
        }
    }
    Ok(e)
}

pub fn simple_to_value(e: &SimpleElement) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(c, n, s)| json!({ "p": c.p(), "q": c.q(), "n": n, "coeff": scalar_to_value(s) }))
        .collect();
    json!({ "basis": "simple", "terms": terms })
}

pub fn simple_from_value(v: &Value) -> Result<SimpleElement, JsonError> {
    if v.get("basis").and_then(Value::as_str) != Some("simple") {
        return Err(bad("expected \"basis\": \"simple\""));
    }
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"terms\" array"))?;
    let mut e = SimpleElement::zero();
    let mut mode = None;
    for t in terms {
        let idx = curve_from_value(t)?;
        let n = t
            .get("n")
            .and_then(Value::as_i64)
            .ok_or_else(|| bad("missing \"n\""))?;
        let coeff = scalar_from_value(t.get("coeff").ok_or_else(|| bad("missing \"coeff\""))?)?;
        check_mode(&mut mode, &coeff)?;
        e.add_term(idx, n, coeff, &ctx_for(mode))
            .map_err(|err| bad(err.to_string()))?;
    }
    Ok(e)
}

pub fn quotient_to_value(q: &QuotientVector) -> Value {
    let mut map = Map::new();
    for class in ALL_CLASSES {
        map.insert(
            class.name().to_string(),
            scalar_to_value(q.component(class)),
        );
    }
    Value::Object(map)
}

pub fn quotient_from_value(v: &Value) -> Result<QuotientVector, JsonError> {
    let get = |k: &str| -> Result<Scalar, JsonError> {
        scalar_from_value(v.get(k).ok_or_else(|| bad(format!("missing {k:?}")))?)
    };
    Ok(QuotientVector {
        phi: get("phi")?,
        ee: get("ee")?,
        eo: get("eo")?,
        oe: get("oe")?,
        oo: get("oo")?,
    })
}

pub fn witness_to_value(w: &Witness) -> Value {
    json!({
        "lambda": scalar_to_value(&w.lambda),
        "left": curve_to_value(w.left),
        "right": curve_to_value(w.right),
    })
}

pub fn witness_from_value(v: &Value) -> Result<Witness, JsonError> {
    Ok(Witness {
        lambda: scalar_from_value(v.get("lambda").ok_or_else(|| bad("missing \"lambda\""))?)?,
        left: curve_from_value(v.get("left").ok_or_else(|| bad("missing \"left\""))?)?,
        right: curve_from_value(v.get("right").ok_or_else(|| bad("missing \"right\""))?)?,
    })
}

pub fn certificate_to_value(c: &CommutatorCertificate) -> Value {
    json!({
        "residual": quotient_to_value(&c.residual),
        "witnesses": c.witnesses.iter().map(witness_to_value).collect::<Vec<_>>(),
    })
}

pub fn certificate_from_value(v: &Value) -> Result<CommutatorCertificate, JsonError> {
    let residual = quotient_from_value(
        v.get("residual")
            .ok_or_else(|| bad("missing \"residual\""))?,
    )?;
    let ws = v
        .get("witnesses")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"witnesses\" array"))?;
    let witnesses = ws
        .iter()
        .map(witness_from_value)
        .collect::<Result<_, _>>()?;
    Ok(CommutatorCertificate {
        residual,
        witnesses,
    })
}

fn check_mode(mode: &mut Option<ScalarMode>, s: &Scalar) -> Result<(), JsonError> {
    let m = match s {
        Scalar::Exact(_) => ScalarMode::Exact,
        Scalar::Numeric(_) => ScalarMode::Numeric,
    };
    match mode {
        None => {
            *mode = Some(m);
            Ok(())
        }
        Some(prev) if *prev == m => Ok(()),
        Some(_) => Err(bad("mixed exact and numeric coefficients")),
    }
}

/// Internal context only for merging deserialized terms; the mode is
/// dictated by the data itself. The placeholder t is never consulted
/// because deserialized coefficients are already concrete values.
fn ctx_for(mode: Option<ScalarMode>) -> ScalarContext {
    match mode {
        Some(ScalarMode::Numeric) => {
            ScalarContext::numeric(num_complex::Complex64::new(1.0, 0.0)).unwrap()
        }
        _ => ScalarContext::exact(),
    }
}
