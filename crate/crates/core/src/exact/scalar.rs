use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

/// `n / d` as an exact scalar. Panics on `d == 0`.
pub fn q(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Canonical `"p/q"` form, `"p"` when the denominator is one.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom() == &BigInt::from(1) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p/q"` or `"p"`. Accepts the Unicode minus sign as well.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim().replace('\u{2212}', "-");
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_strings() {
        assert_eq!(format_scalar(&q(-10, 4)), "-5/2");
        assert_eq!(format_scalar(&q(6, 3)), "2");
        assert_eq!(format_scalar(&q(0, 7)), "0");
        assert_eq!(parse_scalar("\u{2212}5/2").unwrap(), q(-5, 2));
        assert_eq!(parse_scalar(" 3 ").unwrap(), int(3));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }
}
