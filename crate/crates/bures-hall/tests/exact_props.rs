//! Property tests for the exact arithmetic substrate: digamma recurrence,
//! gamma-quotient cancellation, field axioms of the {1, γ, ln 2} vector
//! space, and the parameter invariants every computation relies on.

use bures_hall::exact::{
    digamma_exact, gamma_quotient, rat, rat_int, DigammaNumber, HalfInteger, RatPoly,
};
use bures_hall::EnsembleParams;
use proptest::prelude::*;

/// A positive integer or proper half-integer up to 100, by its doubled value.
fn half_integer_arg() -> impl Strategy<Value = HalfInteger> {
    (1i64..=200).prop_map(|t| HalfInteger::from_twice(t.into()))
}

fn digamma_component() -> impl Strategy<Value = DigammaNumber> {
    (-40i64..=40, 1i64..=24, -40i64..=40, 1i64..=24, -40i64..=40, 1i64..=24).prop_map(
        |(a, b, c, d, e, f)| DigammaNumber {
            rational: rat(a, b),
            gamma_coeff: rat(c, d),
            ln2_coeff: rat(e, f),
        },
    )
}

proptest! {
    /// ψ₀(x+1) − ψ₀(x) = 1/x component-wise, for integer and half-integer x.
    #[test]
    fn digamma_satisfies_the_unit_shift_recurrence(x in half_integer_arg()) {
        let lo = digamma_exact(&x).unwrap();
        let hi = digamma_exact(&x.plus_int(1)).unwrap();
        let expect = DigammaNumber::from_rational(x.to_rational().recip());
        prop_assert_eq!(hi - lo, expect);
    }

    /// Γ(x+1)/Γ(x) collapses to the rational x: the √π and √2 bookkeeping
    /// of half-integer arguments cancels exactly.
    #[test]
    fn gamma_quotient_shift_collapses_to_the_argument(x in half_integer_arg()) {
        let q = gamma_quotient(&[x.plus_int(1)], &[x.clone()]).unwrap();
        prop_assert_eq!(q.as_rational(), Some(&x.to_rational()));
    }

    /// Addition in the Q ⊕ Qγ ⊕ Qln2 field is commutative and associative.
    #[test]
    fn digamma_field_addition_axioms(
        a in digamma_component(),
        b in digamma_component(),
        c in digamma_component(),
    ) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a + (b + c));
    }

    /// Scaling distributes over field addition.
    #[test]
    fn digamma_field_scaling_distributes(
        a in digamma_component(),
        b in digamma_component(),
        num in -30i64..=30,
        den in 1i64..=16,
    ) {
        let f = rat(num, den);
        prop_assert_eq!(
            (a.clone() + b.clone()).scale(&f),
            a.scale(&f) + b.scale(&f)
        );
    }

    /// Differentiation in k is closed and drops the degree by exactly one.
    #[test]
    fn polynomial_derivative_drops_degree_by_one(
        coeffs in prop::collection::vec((-50i64..=50, 1i64..=12), 2..8),
        lead in 1i64..=50,
    ) {
        let mut cs: Vec<_> = coeffs.iter().map(|&(n, d)| rat(n, d)).collect();
        cs.push(rat_int(lead)); // nonzero leading coefficient
        let poly = RatPoly::new(cs);
        let deg = poly.degree().unwrap();
        let deriv = poly.derivative();
        prop_assert_eq!(deriv.degree(), Some(deg - 1));
    }

    /// α = n − m − 1/2 is never an integer and the Gamma shape d > 0.
    #[test]
    fn ensemble_parameters_keep_their_invariants(m in 1u32..=20, extra in 0u32..=20) {
        let n = m + extra;
        let p = EnsembleParams::new(m, n).unwrap();
        prop_assert!(!p.alpha().is_integer());
        prop_assert_eq!(p.twice_alpha(), 2 * (i64::from(n) - i64::from(m)) - 1);
        prop_assert!(p.d().is_positive());
        // d = m(2α + m + 1)/2
        let m_r = rat_int(i64::from(m));
        let expect = &m_r * (p.alpha_rational() * rat_int(2) + &m_r + rat_int(1)) / rat_int(2);
        prop_assert_eq!(p.d().to_rational(), expect);
    }

    /// Swapped dimensions are rejected: the smaller subsystem comes first.
    #[test]
    fn oversized_first_dimension_is_rejected(n in 1u32..=20, extra in 1u32..=20) {
        prop_assert!(EnsembleParams::new(n + extra, n).is_err());
    }
}
