//! Decimal and scientific renderings of exact values, rounded half-to-even.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{CountError, ExactCount, ExactRatio};

fn pow10(e: u64) -> BigUint {
    num_traits::pow(BigUint::from(10u32), e as usize)
}

fn digit_len(v: &BigUint) -> i64 {
    v.to_str_radix(10).len() as i64
}

/// Compares `num/den` with `10^e`.
fn cmp_pow10(num: &BigUint, den: &BigUint, e: i64) -> Ordering {
    if e >= 0 {
        num.cmp(&(den * pow10(e as u64)))
    } else {
        (num * pow10((-e) as u64)).cmp(den)
    }
}

/// `num/den` rounded to the nearest integer, ties to even.
fn div_round_half_even(num: &BigUint, den: &BigUint) -> BigUint {
    let (q, r) = num.div_rem(den);
    let twice = r << 1u32;
    match twice.cmp(den) {
        Ordering::Less => q,
        Ordering::Greater => q + 1u32,
        Ordering::Equal if q.is_even() => q,
        Ordering::Equal => q + 1u32,
    }
}

/// Rounds a positive `num/den` to `sig` significant digits.
///
/// Returns the digit string (always `sig` long) and the decimal exponent of
/// its leading digit.
fn round_significant(num: &BigUint, den: &BigUint, sig: usize) -> (String, i64) {
    debug_assert!(!num.is_zero() && !den.is_zero() && sig >= 1);
    let mut exp = digit_len(num) - digit_len(den);
    if cmp_pow10(num, den, exp) == Ordering::Less {
        exp -= 1;
    }
    let shift = sig as i64 - 1 - exp;
    let mut mantissa = if shift >= 0 {
        div_round_half_even(&(num * pow10(shift as u64)), den)
    } else {
        div_round_half_even(num, &(den * pow10((-shift) as u64)))
    };
    if mantissa == pow10(sig as u64) {
        mantissa /= 10u32;
        exp += 1;
    }
    (mantissa.to_str_radix(10), exp)
}

fn scientific_from_digits(digits: &str, exp: i64) -> String {
    let (lead, rest) = digits.split_at(1);
    let sign = if exp < 0 { '-' } else { '+' };
    if rest.is_empty() {
        format!("{lead}E{sign}{:03}", exp.abs())
    } else {
        format!("{lead}.{rest}E{sign}{:03}", exp.abs())
    }
}

/// Renders `r` with `sig_digits` significant digits.
///
/// Exact integers render in full with a trailing `.0` (`1/1` is `"1.0"`).
/// Other values render positionally (`5/3` at 12 digits is
/// `"1.66666666667"`), trailing zeros kept. When the integer part alone needs
/// all `sig_digits` digits, the mantissa/exponent form of
/// [`render_scientific`] is used instead.
pub fn render_decimal(r: &ExactRatio, sig_digits: usize) -> Result<String, CountError> {
    if sig_digits == 0 {
        return Err(CountError::ZeroPrecision);
    }
    let num = r.numerator().as_biguint();
    let den = r.denominator().as_biguint();
    if r.is_integer() {
        return Ok(format!("{}.0", num / den));
    }
    let (digits, exp) = round_significant(num, den, sig_digits);
    let frac_len = sig_digits as i64 - 1 - exp;
    if frac_len <= 0 {
        return Ok(scientific_from_digits(&digits, exp));
    }
    if exp >= 0 {
        let (int_part, frac_part) = digits.split_at(exp as usize + 1);
        Ok(format!("{int_part}.{frac_part}"))
    } else {
        let zeros = "0".repeat((-exp - 1) as usize);
        Ok(format!("0.{zeros}{digits}"))
    }
}

/// Renders `v` as `d.ddddddE+XXX` with `decimal_places` fractional digits.
pub fn render_scientific(v: &ExactCount, decimal_places: usize) -> Result<String, CountError> {
    if v.is_zero() {
        return Err(CountError::ZeroValue);
    }
    let (digits, exp) = round_significant(v.as_biguint(), &BigUint::one(), decimal_places + 1);
    Ok(scientific_from_digits(&digits, exp))
}

/// Renders a positive ratio in the same mantissa/exponent form as
/// [`render_scientific`].
pub fn render_ratio_scientific(
    r: &ExactRatio,
    decimal_places: usize,
) -> Result<String, CountError> {
    if r.numerator().is_zero() {
        return Err(CountError::ZeroValue);
    }
    let (digits, exp) = round_significant(
        r.numerator().as_biguint(),
        r.denominator().as_biguint(),
        decimal_places + 1,
    );
    Ok(scientific_from_digits(&digits, exp))
}

/// Inserts comma separators into the leading run of digits.
///
/// `"1114.38472522"` becomes `"1,114.38472522"`; scientific strings pass
/// through unchanged since their leading run is one digit.
pub fn group_thousands(s: &str) -> String {
    let split = s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
    let (int_part, rest) = s.split_at(split);
    let mut out = String::with_capacity(s.len() + int_part.len() / 3);
    for (i, ch) in int_part.chars().enumerate() {
        if i > 0 && (int_part.len() - i) % 3 == 0 {
            out.push(',');
        }
        out.push(ch);
    }
    out.push_str(rest);
    out
}
