//! Flag parsing and numeric output conventions.

use num_complex::Complex64;
use serde::Serialize;
use serde_json::Value;

/// Parses `a+bi`, `a-bi`, `a`, `bi`, `i`, `-i` (also with `j`), with either
/// part optional and exponents allowed in both.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty complex number".into());
    }
    let value = match s.strip_suffix(['i', 'j']) {
        Some(body) => {
            let bytes = body.as_bytes();
            let split = (1..bytes.len())
                .rev()
                .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
            let (re, im) = match split {
                Some(k) => (
                    parse_part(&body[..k], text)?,
                    parse_imaginary(&body[k..], text)?,
                ),
                None => (0.0, parse_imaginary(body, text)?),
            };
            Complex64::new(re, im)
        }
        None => Complex64::new(parse_part(&s, text)?, 0.0),
    };
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(format!("'{text}' is not finite"));
    }
    Ok(value)
}

fn parse_imaginary(part: &str, text: &str) -> Result<f64, String> {
    match part {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => parse_part(part, text),
    }
}

fn parse_part(part: &str, text: &str) -> Result<f64, String> {
    part.parse::<f64>()
        .map_err(|_| format!("'{text}' is not a complex number of the form a+bi"))
}

/// Shortest round-trip decimal, `-0` printed as `0`, exponent notation
/// outside `[1e-5, 1e16)`.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs();
    if !x.is_finite() || (1e-5..1e16).contains(&magnitude) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// Pretty JSON with `-0` normalized to `0`.
pub fn to_json(value: &impl Serialize) -> String {
    let mut tree = serde_json::to_value(value).expect("report types serialize");
    normalize_zero(&mut tree);
    serde_json::to_string_pretty(&tree).expect("JSON values serialize")
}

fn normalize_zero(value: &mut Value) {
    match value {
        Value::Number(number) if number.as_f64() == Some(0.0) && number.is_f64() => {
            *value = Value::from(0.0);
        }
        Value::Array(items) => items.iter_mut().for_each(normalize_zero),
        Value::Object(map) => map.values_mut().for_each(normalize_zero),
        _ => {}
    }
}
