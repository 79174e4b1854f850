//! Ensemble parameters and the derived constants used throughout the crate.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{ExactRational, HalfInteger};

/// Validated parameters of the ensemble: subsystem dimension `m`, environment
/// dimension `n` with `1 ≤ m ≤ n`.
///
/// The derived exponent `α = n − m − 1/2` is always a proper (non-integer)
/// half-integer, and the total dimension parameter `d = m(2n − m)/2` may be a
/// half-integer as well.
///
/// # Examples
///
/// ```
/// use bures_hall::params::EnsembleParams;
///
/// let p = EnsembleParams::new(2, 3).unwrap();
/// assert_eq!(p.alpha().to_string(), "1/2");
/// assert_eq!(p.d().to_string(), "4");
/// assert!(EnsembleParams::new(3, 2).is_err());
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnsembleParams {
    m: u32,
    n: u32,
}

impl EnsembleParams {
    /// Validates `1 ≤ m ≤ n` and constructs the parameter set.
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::Validity(
                "subsystem dimension m must be at least 1".into(),
            ));
        }
        if m > n {
            return Err(Error::Validity(format!(
                "parameters require m ≤ n, got m={} n={}",
                m, n
            )));
        }
        Ok(EnsembleParams { m, n })
    }

    /// Subsystem dimension.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Environment dimension.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The weight exponent α = n − m − 1/2 (always a proper half-integer).
    pub fn alpha(&self) -> HalfInteger {
        // twice α = 2n − 2m − 1
        HalfInteger::from_twice(BigInt::from(2 * i64::from(self.n) - 2 * i64::from(self.m) - 1))
    }

    /// Twice the weight exponent, 2α = 2(n − m) − 1, as a plain integer.
    pub fn twice_alpha(&self) -> i64 {
        2 * i64::from(self.n) - 2 * i64::from(self.m) - 1
    }

    /// α as an exact rational.
    pub fn alpha_rational(&self) -> ExactRational {
        self.alpha().to_rational()
    }

    /// α as a float (exact: half-integers are representable).
    pub fn alpha_f64(&self) -> f64 {
        self.twice_alpha() as f64 / 2.0
    }

    /// Total dimension parameter d = m(2n − m)/2.
    pub fn d(&self) -> HalfInteger {
        let m = i64::from(self.m);
        let n = i64::from(self.n);
        HalfInteger::from_twice(BigInt::from(m * (2 * n - m)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_is_never_integer() {
        for m in 1..=8u32 {
            for n in m..=10 {
                let p = EnsembleParams::new(m, n).unwrap();
                assert!(!p.alpha().is_integer(), "α must be a proper half-integer");
            }
        }
    }

    #[test]
    fn derived_quantities() {
        let p = EnsembleParams::new(3, 4).unwrap();
        assert_eq!(p.twice_alpha(), 1);
        assert_eq!(p.d().to_string(), "15/2");
        let q = EnsembleParams::new(2, 2).unwrap();
        assert_eq!(q.twice_alpha(), -1);
        assert_eq!(q.d().to_string(), "2");
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert!(EnsembleParams::new(0, 3).is_err());
        assert!(EnsembleParams::new(4, 3).is_err());
    }
}
