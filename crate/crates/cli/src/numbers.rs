//! Exact parsing of numeric arguments and score tokens.

use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::CliError;

pub type Exact = Ratio<i128>;

fn bad(text: &str, what: &str) -> CliError {
    CliError::Usage(format!("cannot parse {text:?} as {what}"))
}

/// Parses an integer, a decimal (`-1.25`, `3e-2`) or a fraction (`3/5`)
/// exactly.
pub fn parse_exact(text: &str) -> Result<Exact, CliError> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: i128 = num.trim().parse().map_err(|_| bad(text, "a fraction"))?;
        let den: i128 = den.trim().parse().map_err(|_| bad(text, "a fraction"))?;
        if den == 0 {
            return Err(bad(text, "a fraction with non-zero denominator"));
        }
        return Ok(Ratio::new(num, den));
    }
    parse_decimal(text)
}

fn pow10(exp: u32, text: &str) -> Result<i128, CliError> {
    10i128.checked_pow(exp).ok_or_else(|| bad(text, "a number in range"))
}

fn parse_decimal(text: &str) -> Result<Exact, CliError> {
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = text[pos + 1..].parse().map_err(|_| bad(text, "a number"))?;
            (&text[..pos], exp)
        }
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty()
        || !whole.bytes().all(|b| b.is_ascii_digit())
        || !frac.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(bad(text, "a number"));
    }
    let joined = format!("{whole}{frac}");
    let mut value: i128 = joined.parse().map_err(|_| bad(text, "a number in range"))?;
    if negative {
        value = -value;
    }
    let scale = exponent - frac.len() as i32;
    let ratio = if scale >= 0 {
        let factor = pow10(scale as u32, text)?;
        Ratio::from_integer(value.checked_mul(factor).ok_or_else(|| bad(text, "a number in range"))?)
    } else {
        Ratio::new(value, pow10(scale.unsigned_abs(), text)?)
    };
    Ok(ratio)
}

/// A threshold in `[0, 1]` for the GC and trimming commands.
pub fn parse_unit_fraction(text: &str) -> Result<Ratio<u64>, CliError> {
    let r = parse_exact(text)?;
    if r.is_negative() || r > Exact::one() {
        return Err(CliError::Usage(format!("{text:?} is outside [0, 1]")));
    }
    let num = r.numer().to_u64().ok_or_else(|| bad(text, "a fraction in range"))?;
    let den = r.denom().to_u64().ok_or_else(|| bad(text, "a fraction in range"))?;
    Ok(Ratio::new(num, den))
}

pub fn to_i64(value: i128, what: &str) -> Result<i64, CliError> {
    i64::try_from(value).map_err(|_| CliError::Usage(format!("{what} {value} exceeds the 64-bit range")))
}

/// Nearest-ish `f64`; only used once floating mode is already chosen.
pub fn exact_to_f64(r: &Exact) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Parses a size such as `100000`, `1e6` or `2.5e5`.
pub fn parse_size(text: &str) -> Result<usize, CliError> {
    let r = parse_exact(text)?;
    if !r.is_integer() || r.is_negative() {
        return Err(bad(text, "a non-negative integer size"));
    }
    r.to_integer().to_usize().ok_or_else(|| bad(text, "a size in range"))
}

/// Renders an exact value as an integer, a terminating decimal, or `p/q`.
pub fn format_exact(r: &Exact) -> String {
    if r.is_integer() {
        return r.to_integer().to_string();
    }
    let mut den = *r.denom();
    let (mut twos, mut fives) = (0u32, 0u32);
    while den % 2 == 0 {
        den /= 2;
        twos += 1;
    }
    while den % 5 == 0 {
        den /= 5;
        fives += 1;
    }
    if den != 1 {
        return format!("{}/{}", r.numer(), r.denom());
    }
    let digits = twos.max(fives);
    let scaled = r * Exact::from_integer(10i128.pow(digits));
    let value = scaled.to_integer();
    let sign = if value < 0 { "-" } else { "" };
    let magnitude = value.abs().to_string();
    let magnitude = format!("{magnitude:0>width$}", width = digits as usize + 1);
    let (whole, frac) = magnitude.split_at(magnitude.len() - digits as usize);
    format!("{sign}{whole}.{frac}")
}

/// Smallest integer `>= r`.
pub fn ceil(r: &Exact) -> i128 {
    r.ceil().to_integer()
}

pub fn is_zero(r: &Exact) -> bool {
    r.is_zero()
}
