//! Exact parsing of numeric flag values.
//!
//! Accepted forms: decimals with an optional exponent (`-1.25e-3`),
//! fractions of decimals (`1/4`, `3.5/7`), and rational multiples of π
//! (`pi`, `-pi/3`, `2pi/3`, `0.5pi`). Rationals are reduced exactly and
//! rounded to the nearest `f64` once.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};

use crate::error::CliError;

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (
            &s[..i],
            s[i + 1..].parse::<i32>().ok().filter(|e| e.abs() <= 400)?,
        ),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = BigRational::from_integer(all_digits.parse::<BigInt>().ok()?);
    let shift = exponent - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    let scale = num::pow(ten, shift.unsigned_abs() as usize);
    if shift >= 0 {
        value *= scale;
    } else {
        value /= scale;
    }
    Some(if negative { -value } else { value })
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((num, den)) => {
            let den = parse_decimal(den)?;
            if den.is_zero() {
                return None;
            }
            Some(parse_decimal(num)? / den)
        }
        None => parse_decimal(s),
    }
}

/// Parses one scalar.
pub fn parse_scalar(text: &str) -> Result<f64, CliError> {
    let t = text.trim();
    let bad = || CliError::BadNumber(text.to_string());
    if let Some(i) = t.find("pi") {
        // c·π/d with the coefficient in front of `pi` and an optional divisor.
        let head = &t[..i];
        let tail = &t[i + 2..];
        let coeff = match head {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            h => parse_decimal(h.trim_end_matches('*')).ok_or_else(bad)?,
        };
        let coeff = match tail.strip_prefix('/') {
            Some(den) => {
                let den = parse_decimal(den).ok_or_else(bad)?;
                if den.is_zero() {
                    return Err(bad());
                }
                coeff / den
            }
            None if tail.is_empty() => coeff,
            None => return Err(bad()),
        };
        return Ok(to_f64(&coeff).ok_or_else(bad)? * std::f64::consts::PI);
    }
    let value = parse_rational(t).ok_or_else(bad)?;
    to_f64(&value).ok_or_else(bad)
}

fn to_f64(r: &BigRational) -> Option<f64> {
    let v = r.to_f64()?;
    if v.is_finite() {
        Some(v)
    } else {
        None
    }
}

/// Parses a comma-separated list of scalars.
pub fn parse_list(text: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.iter().any(|p| p.trim().is_empty()) {
        return Err(CliError::BadNumber(text.to_string()));
    }
    parts.into_iter().map(parse_scalar).collect()
}
