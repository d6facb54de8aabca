//! Number formatting and parsing shared by the commands.

use anyhow::{bail, Context};
use num_rational::Ratio;

/// `x` with 9 significant digits, like C's `%.9g`.
pub fn sig9(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let sci = format!("{x:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..9).contains(&exp) {
        trim_zeros(format!("{:.*}", (8 - exp) as usize, x))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `x` rounded to 9 significant digits, for JSON payloads.
pub fn round9(x: f64) -> f64 {
    sig9(x).parse().unwrap_or(x)
}

/// Parses "p/q", an integer, or a plain decimal into an exact rational.
pub fn parse_ratio(s: &str) -> anyhow::Result<Ratio<u64>> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: u64 = p.trim().parse().with_context(|| format!("bad numerator in {s:?}"))?;
        let q: u64 = q.trim().parse().with_context(|| format!("bad denominator in {s:?}"))?;
        if q == 0 {
            bail!("zero denominator in {s:?}");
        }
        return Ok(Ratio::new(p, q));
    }
    let (whole, frac) = s.split_once('.').unwrap_or((s, ""));
    if whole.is_empty() && frac.is_empty() || !(whole.chars().chain(frac.chars())).all(|c| c.is_ascii_digit()) {
        bail!("expected a nonnegative rational like 1/8 or 0.125, got {s:?}");
    }
    let denom = 10u64
        .checked_pow(frac.len() as u32)
        .context("too many decimal places")?;
    let digits: u64 = format!("{whole}{frac}").parse().context("value out of range")?;
    Ok(Ratio::new(digits, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_digits() {
        assert_eq!(sig9(0.19190163512), "0.191901635");
        assert_eq!(sig9(1.0), "1");
        assert_eq!(sig9(0.5), "0.5");
        assert_eq!(sig9(-2.5e-7), "-2.5e-7");
        assert_eq!(sig9(123456789012.0), "1.23456789e11");
        assert_eq!(sig9(0.99999999999), "1");
        assert_eq!(sig9(0.0), "0");
        assert_eq!(round9(0.12345678901), 0.123456789);
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_ratio("1/8").unwrap(), Ratio::new(1, 8));
        assert_eq!(parse_ratio("0.125").unwrap(), Ratio::new(1, 8));
        assert_eq!(parse_ratio(".5").unwrap(), Ratio::new(1, 2));
        assert_eq!(parse_ratio("3").unwrap(), Ratio::from_integer(3));
        assert_eq!(parse_ratio("22/176").unwrap(), Ratio::new(1, 8));
        for bad in ["", ".", "1/0", "-1/8", "1e-3", "x"] {
            assert!(parse_ratio(bad).is_err(), "{bad}");
        }
    }
}
