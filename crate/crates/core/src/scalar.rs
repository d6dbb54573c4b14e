//! Scalar types that can carry vertex values.
//!
//! Every value that enters the library comes from an input document and is
//! compared exactly. The only arithmetic performed on values is taking
//! midpoints of consecutive critical values and offsetting the extreme
//! critical values by one, so any ordered field works.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};

use num_rational::Ratio;
use num_traits::{Num, ToPrimitive};

/// An ordered field element usable as a function value.
pub trait Scalar:
    Copy + PartialOrd + Debug + Display + Num + ToPrimitive + Send + Sync + 'static
{
    /// Parses a decimal literal such as `-1.25`, `3` or `2e-1`.
    fn parse_decimal(text: &str) -> Option<Self>;

    /// Renders the value so that [`Scalar::parse_decimal`] gives it back unchanged.
    fn to_decimal(&self) -> String;

    fn is_finite_value(&self) -> bool;

    fn midpoint(a: Self, b: Self) -> Self {
        (a + b) / (Self::one() + Self::one())
    }
}

/// Total order on finite scalars.
///
/// Panics on NaN; inputs are validated as finite on entry.
pub fn cmp_values<T: Scalar>(a: &T, b: &T) -> Ordering {
    a.partial_cmp(b).expect("scalar values are finite")
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn parse_decimal(text: &str) -> Option<Self> {
                text.trim().parse::<$t>().ok().filter(|v| v.is_finite())
            }

            fn to_decimal(&self) -> String {
                // `Display` for floats prints the shortest string that round-trips.
                format!("{}", self)
            }

            fn is_finite_value(&self) -> bool {
                self.is_finite()
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

impl Scalar for Ratio<i64> {
    fn parse_decimal(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((num, den)) = text.split_once('/') {
            let num: i64 = num.trim().parse().ok()?;
            let den: i64 = den.trim().parse().ok()?;
            if den == 0 {
                return None;
            }
            return Some(Ratio::new(num, den));
        }
        parse_decimal_ratio(text)
    }

    fn to_decimal(&self) -> String {
        let mut den = *self.denom();
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
            return format!("{}/{}", self.numer(), self.denom());
        }
        let digits = twos.max(fives);
        if digits == 0 {
            return self.numer().to_string();
        }
        let scale = 10i128.pow(digits);
        let scaled = *self.numer() as i128 * scale / *self.denom() as i128;
        let sign = if scaled < 0 { "-" } else { "" };
        let abs = scaled.unsigned_abs();
        let int = abs / scale as u128;
        let frac = abs % scale as u128;
        let frac = format!("{:0width$}", frac, width = digits as usize);
        format!("{}{}.{}", sign, int, frac.trim_end_matches('0'))
    }

    fn is_finite_value(&self) -> bool {
        true
    }
}

fn parse_decimal_ratio(text: &str) -> Option<Ratio<i64>> {
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => (&text[..pos], text[pos + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let mut numer: i64 = 0;
    for c in int_part.chars().chain(frac_part.chars()) {
        numer = numer.checked_mul(10)?.checked_add(c.to_digit(10)? as i64)?;
    }
    let shift = exponent - frac_part.len() as i32;
    let pow = 10i64.checked_pow(shift.unsigned_abs())?;
    let value = if shift >= 0 {
        Ratio::from_integer(numer.checked_mul(pow)?)
    } else {
        Ratio::new(numer, pow)
    };
    Some(if negative { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = Ratio<i64>;

    #[test]
    fn float_decimal_round_trip() {
        for v in [0.0, 0.5, -1.25, 1e-7, 123456.789, 2.0] {
            assert_eq!(f64::parse_decimal(&v.to_decimal()), Some(v));
        }
        assert_eq!(f64::parse_decimal("inf"), None);
        assert_eq!(f64::parse_decimal("NaN"), None);
    }

    #[test]
    fn rational_parse() {
        assert_eq!(Q::parse_decimal("0.25"), Some(Q::new(1, 4)));
        assert_eq!(Q::parse_decimal("-1.5"), Some(Q::new(-3, 2)));
        assert_eq!(Q::parse_decimal("3"), Some(Q::from_integer(3)));
        assert_eq!(Q::parse_decimal("2e-1"), Some(Q::new(1, 5)));
        assert_eq!(Q::parse_decimal("1/3"), Some(Q::new(1, 3)));
        assert_eq!(Q::parse_decimal(".5"), Some(Q::new(1, 2)));
        assert_eq!(Q::parse_decimal("abc"), None);
        assert_eq!(Q::parse_decimal("1/0"), None);
    }

    #[test]
    fn rational_decimal_round_trip() {
        for v in [Q::new(1, 4), Q::new(-3, 2), Q::from_integer(7), Q::new(1, 3), Q::new(-1, 80)] {
            assert_eq!(Q::parse_decimal(&v.to_decimal()), Some(v), "{}", v.to_decimal());
        }
        assert_eq!(Q::new(-1, 80).to_decimal(), "-0.0125");
        assert_eq!(Q::new(1, 3).to_decimal(), "1/3");
    }

    #[test]
    fn midpoints() {
        assert_eq!(f64::midpoint(1.0, 2.0), 1.5);
        assert_eq!(Q::midpoint(Q::from_integer(0), Q::new(1, 2)), Q::new(1, 4));
    }
}
