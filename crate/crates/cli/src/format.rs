//! Number and polynomial renderings shared by the text and JSON outputs.

use fbc_core::laurent::LaurentPoly1V;
use fbc_core::{IntPoly, LaurentPoly};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

/// `x` to six significant digits, without trailing zeros.
pub fn sig6(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if magnitude < -4 {
        let s = format!("{x:.5e}");
        let (mantissa, exp) = s.split_once('e').unwrap_or((&s, "0"));
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        return format!("{mantissa}e{exp}");
    }
    let decimals = (5 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        // Round away digits beyond the sixth for large values.
        let scale = 10f64.powi(magnitude - 5);
        format!("{}", (x / scale).round() * scale)
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

/// A JSON number carrying the same six significant digits as [`sig6`].
pub fn num6(x: f64) -> Value {
    sig6(x)
        .parse::<f64>()
        .ok()
        .and_then(serde_json::Number::from_f64)
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

pub fn opt6(x: Option<f64>) -> Value {
    x.map(num6).unwrap_or(Value::Null)
}

/// Integers outside the `i64` range are emitted as decimal strings.
pub fn bigint(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

pub fn laurent_terms(p: &LaurentPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| json!({ "coeff": bigint(c), "exp": e.0 }))
            .collect(),
    )
}

pub fn univariate_terms(p: &LaurentPoly1V) -> Value {
    Value::Array(
        p.terms()
            .map(|(k, c)| json!({ "coeff": bigint(c), "exp": k }))
            .collect(),
    )
}

pub fn int_poly_coeffs(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(bigint).collect())
}

pub fn vector(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(1.430920491), "1.43092");
        assert_eq!(sig6(3.7320508075688776), "3.73205");
        assert_eq!(sig6(2.0), "2");
        assert_eq!(sig6(0.000123456789), "0.000123457");
        assert_eq!(sig6(-2.651212e-13), "-2.65121e-13");
        assert_eq!(sig6(1e-7), "1e-7");
        assert_eq!(sig6(-4.61347026), "-4.61347");
        assert_eq!(sig6(1234567.0), "1234570");
        assert_eq!(sig6(0.0), "0");
    }

    #[test]
    fn json_numbers_match_text() {
        assert_eq!(num6(1.430920491), json!(1.43092));
    }
}
