//! Exact rational scalars.
//!
//! Every quantity in this crate is a `Ratio<i128>`. Values stay reduced, so
//! equality is structural. Arithmetic overflow panics (overflow checks are
//! enabled in every build profile of the workspace) instead of wrapping.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::Serializer;

pub type Rational = Ratio<i128>;

/// Largest magnitude accepted for a numerator or denominator read from text.
pub const MAX_INPUT_MAGNITUDE: i128 = 1 << 24;

#[inline]
pub fn int(v: i64) -> Rational {
    Rational::from_integer(v as i128)
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

pub fn floor_i64(q: &Rational) -> i64 {
    to_i64(q.floor().to_integer())
}

pub fn ceil_i64(q: &Rational) -> i64 {
    to_i64(q.ceil().to_integer())
}

fn to_i64(v: i128) -> i64 {
    i64::try_from(v).expect("coordinate out of i64 range")
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: i128 = num.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let den: i128 = den
        .parse()
        .map_err(|_| format!("bad denominator in {s:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    if num.abs() > MAX_INPUT_MAGNITUDE || den.abs() > MAX_INPUT_MAGNITUDE {
        return Err(format!("{s:?} exceeds the supported magnitude 2^24"));
    }
    Ok(Rational::new(num, den))
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if is_integer(q) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

pub(crate) fn serialize_opt<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_some(&format_rational(q)),
        None => s.serialize_none(),
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-6/4").unwrap(), Rational::new(-3, 2));
        assert_eq!(parse_rational(" 2 / -4 ").unwrap(), Rational::new(-1, 2));
        assert_eq!(format_rational(&Rational::new(-3, 2)), "-3/2");
        assert_eq!(format_rational(&Rational::new(8, 4)), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("99999999999").is_err());
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(floor_i64(&Rational::new(-1, 2)), -1);
        assert_eq!(ceil_i64(&Rational::new(-1, 2)), 0);
        assert_eq!(floor_i64(&int(4)), 4);
        assert_eq!(ceil_i64(&Rational::new(7, 3)), 3);
    }
}
