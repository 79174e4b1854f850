//! Exact spectral-moment engines: recurrence coefficient polynomials, seed
//! moments, the three-term chains for the plain moments κ(R_k) and the
//! log-weighted moments κ(T_k), and the mean entropy/purity endpoints.
//!
//! The central object is the three-term recurrence
//!
//! ```text
//! g₁(k)·R_{k+2} = g₂(k)·R_k + g₃(k)·R_{k−2}
//! ```
//!
//! whose coefficients are fixed polynomials in (α, m, k), tabulated in
//! [`tables`]. Chains ascend from closed-form seeds. Two situations break
//! the plain ascent and are resolved exactly through the "last moment"
//! representation κ(R_k) = −(b₁(k)·M(k−1) + b₂(k)·M(k+1))/2, whose
//! weighted tail moments M(t) are rational at integer t:
//!
//! - g₁(k) has the root k = 2n, so every even chain eventually hits a
//!   vanishing leading coefficient;
//! - at m = n (α = −1/2) the negative seeds R₋₁, R₋₃ diverge, so the odd
//!   chain cannot start from a k = 1 recurrence step.
//!
//! The log-weighted chain satisfies the differentiated recurrence
//! g₁T_{k+2} = g₂T_k + g₃T_{k−2} − g₁'R_{k+2} + g₂'R_k + g₃'R_{k−2}, and
//! T₁ = m(2α+m+1)ψ₀(α+m+1)/2 converts into the mean entropy.

mod tables;

use crate::biorth::{self, PrefactorClass};
use crate::error::{Error, Result};
use crate::exact::{
    digamma_exact, gamma_quotient, rat, rat_int, DigammaNumber, ExactRational, HalfInteger,
    RatPoly,
};
use crate::kernels::{self, KernelWorkspace};
use crate::params::EnsembleParams;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use tables::KPolyTable;

/// A polynomial in the recurrence index k with exact rational coefficients,
/// closed under differentiation (see [`RatPoly::derivative`]).
pub type CoefficientPolynomial = RatPoly;

/// Binds a monomial table to concrete (α, m), leaving a polynomial in k.
fn bind_k_poly(table: &KPolyTable, params: &EnsembleParams) -> CoefficientPolynomial {
    let t = BigInt::from(params.twice_alpha());
    let m = BigInt::from(params.m());
    let (mut max_t, mut max_m, mut max_k) = (0usize, 0usize, 0usize);
    for &(pt, pm, pk, _) in table.terms {
        max_t = max_t.max(pt as usize);
        max_m = max_m.max(pm as usize);
        max_k = max_k.max(pk as usize);
    }
    let powers = |base: &BigInt, top: usize| -> Vec<BigInt> {
        let mut v = Vec::with_capacity(top + 1);
        v.push(BigInt::one());
        for i in 1..=top {
            let next = &v[i - 1] * base;
            v.push(next);
        }
        v
    };
    let tp = powers(&t, max_t);
    let mp = powers(&m, max_m);
    let mut by_k = vec![BigInt::zero(); max_k + 1];
    for &(pt, pm, pk, c) in table.terms {
        by_k[pk as usize] += BigInt::from(c) * &tp[pt as usize] * &mp[pm as usize];
    }
    let den: BigInt = BigInt::one() << table.denom_log2;
    CoefficientPolynomial::new(
        by_k.into_iter()
            .map(|numer| ExactRational::new(numer, den.clone()))
            .collect(),
    )
}

fn g_table(i: usize) -> &'static KPolyTable {
    match i {
        1 => &tables::G1_TABLE,
        2 => &tables::G2_TABLE,
        3 => &tables::G3_TABLE,
        _ => panic!("recurrence coefficient index must be 1..=3"),
    }
}

/// The polynomial g_i(k) of the moment recurrence, bound to `params`.
pub fn coefficient_polynomial(i: usize, params: &EnsembleParams) -> CoefficientPolynomial {
    bind_k_poly(g_table(i), params)
}

/// g_i(k), exactly.
pub fn coeff_g(i: usize, k: i64, params: &EnsembleParams) -> ExactRational {
    coefficient_polynomial(i, params).eval(&rat_int(k))
}

/// g_i'(k): the k-derivative of the recurrence coefficient, exactly.
pub fn coeff_g_prime(i: usize, k: i64, params: &EnsembleParams) -> ExactRational {
    coefficient_polynomial(i, params)
        .derivative()
        .eval(&rat_int(k))
}

/// The coefficients b₁(k), b₂(k) of the last-moment representation
/// κ(R_k) = −(b₁(k)·M(k−1) + b₂(k)·M(k+1))/2.
///
/// Returns a pole error where the shared denominator polynomial vanishes.
pub fn coeff_b(i: usize, k: i64, params: &EnsembleParams) -> Result<ExactRational> {
    assert!((1..=2).contains(&i), "b-coefficient index must be 1 or 2");
    let kk = rat_int(k);
    let den = bind_k_poly(&tables::DB_TABLE, params).eval(&kk);
    if den.is_zero() {
        return Err(Error::Pole(format!(
            "coefficient b{i} is undefined at k = {k}: its denominator polynomial vanishes there"
        )));
    }
    Ok(match i {
        1 => -bind_k_poly(&tables::B1N_TABLE, params).eval(&kk) / den,
        _ => bind_k_poly(&tables::B2N_TABLE, params).eval(&kk) / den,
    })
}

/// The coefficients c₁(k), c₂(k) of the weighted-tail-moment identity
/// M(k−1) = c₁(k)·M(k+1) + c₂(k)·M(k+3).
///
/// Returns a pole error naming the vanishing denominator factor (the
/// denominator carries the roots k ∈ {0, 1, α, α+1, −α, −α−1, 2α+1, −2α−1}
/// and a quintic factor).
pub fn coeff_c(i: usize, k: i64, params: &EnsembleParams) -> Result<ExactRational> {
    assert!((1..=2).contains(&i), "c-coefficient index must be 1 or 2");
    let kk = rat_int(k);
    let den = bind_k_poly(&tables::DC_TABLE, params).eval(&kk);
    if den.is_zero() {
        let a = params.alpha_rational();
        let two_a = &a * rat_int(2);
        let linear_factors: [(&str, ExactRational); 8] = [
            ("k − 1", &kk - rat_int(1)),
            ("k", kk.clone()),
            ("k − 2α − 1", &kk - &two_a - rat_int(1)),
            ("k − α − 1", &kk - &a - rat_int(1)),
            ("k − α", &kk - &a),
            ("k + α", &kk + &a),
            ("k + α + 1", &kk + &a + rat_int(1)),
            ("k + 2α + 1", &kk + &two_a + rat_int(1)),
        ];
        let name = linear_factors
            .iter()
            .find(|(_, v)| v.is_zero())
            .map(|(n, _)| *n)
            .unwrap_or("its quintic denominator factor");
        return Err(Error::Pole(format!(
            "coefficient c{i} is undefined at k = {k}: factor {name} vanishes"
        )));
    }
    Ok(match i {
        1 => bind_k_poly(&tables::C1N_TABLE, params).eval(&kk) / den,
        _ => -bind_k_poly(&tables::C2N_TABLE, params).eval(&kk) / den,
    })
}

/// The five coefficients `a₁…a₅` of the closed one-point derivative
/// representation `d/dx[x(K01+K10)(x,x)]`.
///
/// `a₁` carries an explicit factor `(m−1)`; at m = 1 it is returned as an
/// exact zero without touching its `(2α+2m−1)` denominator factor, which
/// vanishes simultaneously at (m, n) = (1, 1).
pub fn coeff_a(i: usize, params: &EnsembleParams) -> ExactRational {
    assert!((1..=5).contains(&i), "coefficient index must be 1..=5");
    let a = params.alpha_rational();
    let m = rat_int(params.m() as i64);
    let one = rat_int(1);
    let two = rat_int(2);
    let four = rat_int(4);
    let am = &a + &m; // α+m
    let am1 = &a + &m + &one; // α+m+1
    let t2am1 = &a * &two + &m + &one; // 2α+m+1
    let t2a2m1 = &a * &two + &m * &two + &one; // 2α+2m+1
    match i {
        1 => {
            if params.m() == 1 {
                return rat_int(0);
            }
            let t2am = &a * &two + &m; // 2α+m
            let t2a2mm1 = &a * &two + &m * &two - &one; // 2α+2m−1
            (&m - &one) * &m * t2am * &t2am1 / (&four * &am * t2a2mm1 * &t2a2m1)
        }
        2 => {
            let poly = &a * &a * &four + &a * &four + &m * &m * rat_int(3)
                + &a * &m * rat_int(6)
                + &m * rat_int(3);
            &m * &t2am1 * poly / (&four * &am * &am1 * &t2a2m1)
        }
        3 => {
            let t2am2 = &a * &two + &m + &two; // 2α+m+2
            let t2a2m3 = &a * &two + &m * &two + rat_int(3); // 2α+2m+3
            &m * (&m + &one) * &t2am1 * t2am2 / (&four * &am1 * &t2a2m1 * t2a2m3)
        }
        4 => &m * &t2am1 / (&am * &t2a2m1),
        _ => &m * &t2am1 / (&am1 * &t2a2m1),
    }
}

// ---------------------------------------------------------------------------
// seeds
// ---------------------------------------------------------------------------

/// The closed-form seed κ(R_k) for k ∈ {−3, −2, −1, 0, 1, 2}.
///
/// Negative indices require α > 0 (m < n): at m = n the density carries a
/// non-integrable x^{−1/2}/x singularity against x^{−1}, and the displayed
/// closed forms do not apply.
pub fn seed_r(k: i64, params: &EnsembleParams) -> Result<ExactRational> {
    let a = params.alpha_rational();
    let m = rat_int(params.m() as i64);
    let one = rat_int(1);
    let two = rat_int(2);
    let four = rat_int(4);
    let t2am1 = &a * &two + &m + &one; // 2α+m+1
    if k < 0 && params.m() == params.n() {
        return Err(Error::Validity(format!(
            "negative spectral moments diverge at m = n (α = −1/2), requested k = {k}"
        )));
    }
    Ok(match k {
        0 => m,
        1 => &m * &t2am1 / &two,
        2 => {
            let poly = &a * &a * &four + &a * &four + &a * &m * rat_int(10)
                + &m * &m * rat_int(5)
                + &m * rat_int(5)
                + &two;
            &m * &t2am1 * poly / (&four * (&a * &two + &m * &two + &one))
        }
        -1 => &m * &t2am1 / (&two * &a * (&a + &one)),
        -2 => {
            let poly = &a * &a * &four + &a * &four + &a * &m * rat_int(6)
                + &m * &m * rat_int(3)
                + &m * rat_int(3)
                - &two;
            &m * &t2am1 * poly
                / (&four * (&a - &one) * &a * (&a + &one) * (&a + &two) * (&a * &two + &one))
        }
        -3 => {
            &m * (&a + &m - &one)
                * (&a + &m)
                * (&a + &m + &one)
                * (&a + &m + &two)
                * &t2am1
                / (&two
                    * (&a - &two)
                    * (&a - &one)
                    * &a
                    * &a
                    * (&a + &one)
                    * (&a + &one)
                    * (&a + &two)
                    * (&a + rat_int(3)))
        }
        _ => {
            return Err(Error::Validity(format!(
                "no closed-form seed for moment index k = {k}"
            )))
        }
    })
}

// ---------------------------------------------------------------------------
// weighted tail moments M(t) and the exact rescue path
// ---------------------------------------------------------------------------

/// Γ(A+1)Γ(s+1)Γ(A+s+1)/Γ(A+s+2): the closed form of
/// ∫ x^A e^{−x} J(s, x) dx.
fn ij_gamma(a_pow: &HalfInteger, s: &HalfInteger) -> Result<crate::exact::GammaQuotient> {
    let sum1 = HalfInteger::from_twice(a_pow.twice() + s.twice()).plus_int(1);
    gamma_quotient(
        &[a_pow.plus_int(1), s.plus_int(1), sum1.clone()],
        &[sum1.plus_int(1)],
    )
}

/// ∫ x^{t+α} e^{−x} q_a(x) Q_b(−x) dx at integer t, exactly. The common
/// prefactor squares to 2/π, which cancels the π from the two half-integer
/// Γ values, leaving a rational.
fn weighted_pair_exact(
    t: i64,
    qa: &RatPoly,
    qb: &RatPoly,
    params: &EnsembleParams,
) -> Result<ExactRational> {
    let alpha = params.alpha();
    let class = PrefactorClass::Sqrt2OverPi.as_quotient();
    let class2 = class.mul(&class);
    let mut acc = ExactRational::zero();
    for (i, ci) in qa.coeffs().iter().enumerate() {
        for (j, cj) in qb.coeffs().iter().enumerate() {
            if ci.is_zero() || cj.is_zero() {
                continue;
            }
            let ij = ij_gamma(
                &alpha.plus_int(t + i as i64),
                &alpha.plus_int(1 + j as i64),
            )?;
            let term = class2.scale(&(ci * cj)).mul(&ij);
            acc += term
                .as_rational()
                .ok_or_else(|| {
                    Error::Invariant(
                        "weighted tail moment must be rational at integer exponents".into(),
                    )
                })?
                .clone();
        }
    }
    Ok(-acc)
}

/// M(t) = ∫ x^{t+α} e^{−x} (q_{m+1}(x)·Q_m(−x) + q_m(x)·Q_{m+1}(−x)) dx,
/// exactly, for integer t ≥ 0.
pub fn weighted_tail_moment(t: i64, params: &EnsembleParams) -> Result<ExactRational> {
    if t < 0 {
        return Err(Error::Domain(format!(
            "exact weighted tail moments need t ≥ 0, got t = {t}"
        )));
    }
    let m = params.m() as usize;
    let qm = biorth::poly_q(m, params).rational_part().clone();
    let qm1 = biorth::poly_q(m + 1, params).rational_part().clone();
    Ok(weighted_pair_exact(t, &qm1, &qm, params)?
        + weighted_pair_exact(t, &qm, &qm1, params)?)
}

/// κ(R_k) through the last-moment representation, exactly. Used where the
/// plain recurrence cannot run: vanishing g₁ on the path, or the missing
/// odd negative seeds at m = n.
fn rescue_moment(k: i64, params: &EnsembleParams) -> Result<ExactRational> {
    let describe = |e: Error| {
        Error::SingularStep(format!(
            "no usable path to moment index k = {k}: {e}"
        ))
    };
    let b1 = coeff_b(1, k, params).map_err(describe)?;
    let b2 = coeff_b(2, k, params).map_err(describe)?;
    let lo = weighted_tail_moment(k - 1, params)?;
    let hi = weighted_tail_moment(k + 1, params)?;
    Ok(-(b1 * lo + b2 * hi) / rat_int(2))
}

// ---------------------------------------------------------------------------
// the exact moment chain
// ---------------------------------------------------------------------------

/// Where a chain's starting values came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedSource {
    /// Exact closed-form seeds (integer chains).
    ClosedForm,
    /// Quadrature-evaluated seeds (real-exponent chains).
    Quadrature,
}

/// A memoized one-parity-at-a-time ladder of exact moments κ(R_k).
pub struct MomentChain {
    params: EnsembleParams,
    values: BTreeMap<i64, ExactRational>,
    g: [CoefficientPolynomial; 3],
    seed_source: SeedSource,
}

impl MomentChain {
    /// An empty chain over closed-form seeds.
    pub fn new(params: &EnsembleParams) -> MomentChain {
        MomentChain {
            params: params.clone(),
            values: BTreeMap::new(),
            g: [
                coefficient_polynomial(1, params),
                coefficient_polynomial(2, params),
                coefficient_polynomial(3, params),
            ],
            seed_source: SeedSource::ClosedForm,
        }
    }

    /// The parameters this chain runs over.
    pub fn params(&self) -> &EnsembleParams {
        &self.params
    }

    /// How the chain is seeded.
    pub fn seed_source(&self) -> SeedSource {
        self.seed_source
    }

    fn ensure_seed(&mut self, k: i64) -> Result<()> {
        if !self.values.contains_key(&k) {
            let v = seed_r(k, &self.params)?;
            self.values.insert(k, v);
        }
        Ok(())
    }

    /// κ(R_k), computing and memoizing everything the ascent needs.
    ///
    /// Supported indices: k ≥ −3 for m < n, k ≥ 0 for m = n (negative
    /// moments diverge there). A vanishing g₁ on the path reroutes that
    /// single rung through the exact last-moment representation.
    pub fn get(&mut self, k: i64) -> Result<ExactRational> {
        if let Some(v) = self.values.get(&k) {
            return Ok(v.clone());
        }
        if (-3..=2).contains(&k) {
            self.ensure_seed(k)?;
            return Ok(self.values[&k].clone());
        }
        if k < -3 {
            return Err(Error::Validity(format!(
                "moment index {k} is below the seeded range (k ≥ −3)"
            )));
        }
        let odd = k.rem_euclid(2) == 1;
        if odd {
            self.ensure_seed(1)?;
            if !self.values.contains_key(&3) {
                let r3 = if self.params.m() == self.params.n() {
                    // no negative seeds at α = −1/2: start from the exact
                    // last-moment value instead of a k = 1 step
                    rescue_moment(3, &self.params)?
                } else {
                    let g1 = self.g[0].eval(&rat_int(1));
                    if g1.is_zero() {
                        rescue_moment(3, &self.params)?
                    } else {
                        self.ensure_seed(-1)?;
                        (self.g[1].eval(&rat_int(1)) * &self.values[&1]
                            + self.g[2].eval(&rat_int(1)) * &self.values[&-1])
                            / g1
                    }
                };
                self.values.insert(3, r3);
            }
        } else {
            self.ensure_seed(0)?;
            self.ensure_seed(2)?;
        }
        let mut j = if odd { 3 } else { 2 };
        while j + 2 <= k {
            if !self.values.contains_key(&(j + 2)) {
                let g1 = self.g[0].eval(&rat_int(j));
                let v = if g1.is_zero() {
                    rescue_moment(j + 2, &self.params)?
                } else {
                    (self.g[1].eval(&rat_int(j)) * &self.values[&j]
                        + self.g[2].eval(&rat_int(j)) * &self.values[&(j - 2)])
                        / g1
                };
                self.values.insert(j + 2, v);
            }
            j += 2;
        }
        Ok(self.values[&k].clone())
    }
}

/// κ(R_k) = mean of Σᵢ xᵢ^k over the ensemble, exactly.
///
/// # Examples
///
/// ```
/// use bures_hall::{moments::moment_r, EnsembleParams};
/// use bures_hall::exact::rat_int;
///
/// let params = EnsembleParams::new(2, 3).unwrap();
/// assert_eq!(moment_r(1, &params).unwrap(), rat_int(4));
/// assert_eq!(moment_r(2, &params).unwrap(), rat_int(15));
/// assert_eq!(moment_r(3, &params).unwrap(), rat_int(75));
/// ```
pub fn moment_r(k: i64, params: &EnsembleParams) -> Result<ExactRational> {
    MomentChain::new(params).get(k)
}

// ---------------------------------------------------------------------------
// real-exponent moments and the quadrature verifications
// ---------------------------------------------------------------------------

/// κ(R_k) for real k > −(α+1), by exact-to-rounding quadrature of the
/// one-point density.
pub fn moment_r_real(k: f64, ws: &KernelWorkspace) -> Result<f64> {
    kernels::density_moment(k, ws)
}

/// M(t) for real t > −(α+1), in floating point.
fn weighted_tail_moment_f64(t: f64, ws: &KernelWorkspace) -> f64 {
    let m = ws.params().m() as usize;
    let a = ws.params().alpha_f64();
    let pair = |ca: &[f64], cb: &[f64]| -> f64 {
        let mut acc = 0.0;
        for (i, ci) in ca.iter().enumerate() {
            for (j, cj) in cb.iter().enumerate() {
                acc += ci
                    * cj
                    * kernels::monomial_simplex_integral_f64(
                        t + a + i as f64,
                        a + 1.0 + j as f64,
                        1.0,
                    );
            }
        }
        -acc
    };
    pair(ws.q_coeffs_f64(m + 1), ws.q_coeffs_f64(m))
        + pair(ws.q_coeffs_f64(m), ws.q_coeffs_f64(m + 1))
}

/// Residual of the last-moment representation at real k:
/// |κ(R_k) + (b₁(k)·M(k−1) + b₂(k)·M(k+1))/2| / (1 + |κ(R_k)|), with
/// κ(R_k) from independent density quadrature.
pub fn verify_rklast(k: f64, ws: &KernelWorkspace) -> Result<f64> {
    let a = ws.params().alpha_f64();
    if !k.is_finite() || k <= -a {
        return Err(Error::Domain(format!(
            "last-moment check needs k > −α = {}, got {k}",
            -a
        )));
    }
    let direct = kernels::density_moment(k, ws)?;
    let den = bind_k_poly(&tables::DB_TABLE, ws.params()).eval_f64(k);
    if den.abs() < 1e-250 {
        return Err(Error::Pole(format!(
            "b coefficients are undefined at k = {k}: denominator vanishes"
        )));
    }
    let b1 = -bind_k_poly(&tables::B1N_TABLE, ws.params()).eval_f64(k) / den;
    let b2 = bind_k_poly(&tables::B2N_TABLE, ws.params()).eval_f64(k) / den;
    let rhs = -0.5
        * (b1 * weighted_tail_moment_f64(k - 1.0, ws)
            + b2 * weighted_tail_moment_f64(k + 1.0, ws));
    Ok((direct - rhs).abs() / (1.0 + direct.abs()))
}

/// Residual of the weighted-tail-moment identity at real k, in the
/// pole-cleared form D_c(k)·M(k−1) − N_{c1}(k)·M(k+1) + N_{c2}(k)·M(k+3),
/// normalized by the largest term. The cleared form stays valid at the
/// roots of D_c, where c₁ and c₂ themselves have poles.
pub fn verify_intid(k: f64, ws: &KernelWorkspace) -> Result<f64> {
    let a = ws.params().alpha_f64();
    if !k.is_finite() || k <= -a {
        return Err(Error::Domain(format!(
            "tail-moment identity check needs k > −α = {}, got {k}",
            -a
        )));
    }
    let t1 = bind_k_poly(&tables::DC_TABLE, ws.params()).eval_f64(k)
        * weighted_tail_moment_f64(k - 1.0, ws);
    let t2 = bind_k_poly(&tables::C1N_TABLE, ws.params()).eval_f64(k)
        * weighted_tail_moment_f64(k + 1.0, ws);
    let t3 = bind_k_poly(&tables::C2N_TABLE, ws.params()).eval_f64(k)
        * weighted_tail_moment_f64(k + 3.0, ws);
    let scale = t1.abs().max(t2.abs()).max(t3.abs()).max(1.0);
    Ok((t1 - t2 + t3).abs() / scale)
}

// ---------------------------------------------------------------------------
// log-weighted moments
// ---------------------------------------------------------------------------

fn psi(arg: HalfInteger) -> Result<DigammaNumber> {
    digamma_exact(&arg)
}

/// The closed-form seed κ(T_k) for k ∈ {−3, −2, −1, 0, 1}, as an exact
/// element of Q ⊕ Qγ ⊕ Q·ln2.
///
/// Negative indices require m < n. At m = n the k = 0 seed is still
/// defined: the term −(2α+1)ψ₀(2α+1) of its closed form has the exact
/// limit +1 as 2α+1 → 0, which is substituted there.
pub fn seed_t(k: i64, params: &EnsembleParams) -> Result<DigammaNumber> {
    let m_int = params.m() as i64;
    let ta = params.twice_alpha();
    let a = params.alpha_rational();
    let m = rat_int(m_int);
    let one = rat_int(1);
    let two = rat_int(2);
    let t2am1 = &a * &two + &m + &one; // 2α+m+1
    let h_a1 = HalfInteger::from_twice((ta + 2).into()); // α+1
    let h_2a1 = HalfInteger::from_twice((2 * ta + 2).into()); // 2α+1
    let h_am1 = HalfInteger::from_twice((ta + 2 * m_int + 2).into()); // α+m+1
    let h_2am1 = HalfInteger::from_twice((2 * ta + 2 * m_int + 2).into()); // 2α+m+1
    let h_2a2m1 = HalfInteger::from_twice((2 * ta + 4 * m_int + 2).into()); // 2α+2m+1
    if k < 0 && params.m() == params.n() {
        return Err(Error::Validity(format!(
            "negative log-weighted moments diverge at m = n (α = −1/2), requested k = {k}"
        )));
    }
    match k {
        1 => Ok(psi(h_am1)?.scale(&(&m * &t2am1 / &two))),
        0 => {
            let mut acc = psi(h_a1)?.scale(&-(&a + rat(1, 2)));
            if params.m() == params.n() {
                // exact limit of −(2α+1)ψ₀(2α+1) at 2α+1 = 0
                acc = acc + DigammaNumber::from_rational(one.clone());
            } else {
                acc = acc + psi(h_2a1)?.scale(&-(&a * &two + &one));
            }
            acc = acc
                + psi(h_am1)?.scale(&(&a + &m + rat(1, 2)))
                + psi(h_2am1)?.scale(&(&two * &t2am1))
                + psi(h_2a2m1)?.scale(&-(&a * &two + &m * &two + &one))
                + DigammaNumber::from_rational(-m.clone());
            Ok(acc)
        }
        -1 => {
            let lead = &one + rat_int(3) * &m * &t2am1 / (&two * &a * (&a + &one));
            let mid = (&a + &m) * (&a + &m + &one) / (&a * (&a + &one));
            let tail = (&a * &a + &a - &one) * &m * &t2am1
                / (&two * &a * &a * (&a + &one) * (&a + &one));
            Ok(psi(h_a1)?.scale(&lead) - psi(h_am1)?.scale(&mid)
                + DigammaNumber::from_rational(tail))
        }
        -2 => {
            let lead = &m
                * &t2am1
                * (rat_int(4) * &a * (&a + &one) + rat_int(3) * &m * &t2am1 - &two)
                / (rat_int(4) * (&a - &one) * &a * (&a + &one) * (&a + &two) * (&a * &two + &one));
            let num = bind_k_poly(&tables::NM2N_TABLE, params).coeff(0);
            let dsq = rat_int(8)
                * crate::exact::rat_powi(&(&a - &one), 2)
                * crate::exact::rat_powi(&a, 2)
                * crate::exact::rat_powi(&(&a + &one), 2)
                * crate::exact::rat_powi(&(&a + &two), 2)
                * crate::exact::rat_powi(&(&a * &two + &one), 2);
            let n_m2 = -num / dsq;
            Ok((psi(h_a1)? + psi(h_2a1)?.scale(&two) - psi(h_2am1)?.scale(&two)).scale(&lead)
                + DigammaNumber::from_rational(n_m2))
        }
        -3 => {
            let lead = &m
                * (&a + &m - &one)
                * (&a + &m)
                * (&a + &m + &one)
                * (&a + &m + &two)
                * &t2am1
                / (&two
                    * (&a - &two)
                    * (&a - &one)
                    * crate::exact::rat_powi(&a, 2)
                    * crate::exact::rat_powi(&(&a + &one), 2)
                    * (&a + &two)
                    * (&a + rat_int(3)));
            let num = bind_k_poly(&tables::NM3N_TABLE, params).coeff(0);
            let dsq = rat_int(24)
                * crate::exact::rat_powi(&(&a - &two), 2)
                * crate::exact::rat_powi(&(&a - &one), 2)
                * crate::exact::rat_powi(&a, 3)
                * crate::exact::rat_powi(&(&a + &one), 3)
                * crate::exact::rat_powi(&(&a + &two), 2)
                * crate::exact::rat_powi(&(&a + rat_int(3)), 2);
            let n_m3 = -(&m * &t2am1) * num / dsq;
            Ok((psi(h_a1)?.scale(&rat_int(3)) - psi(h_am1)?.scale(&two)).scale(&lead)
                + DigammaNumber::from_rational(n_m3))
        }
        _ => Err(Error::Validity(format!(
            "no closed-form seed for log-moment index k = {k}"
        ))),
    }
}

/// One step of the differentiated recurrence: produces T_{j+2} from T_j,
/// T_{j−2} and the plain moments at j−2, j, j+2.
fn t_step(
    j: i64,
    t_j: &DigammaNumber,
    t_jm2: &DigammaNumber,
    chain: &mut MomentChain,
    g: &[CoefficientPolynomial; 3],
    gp: &[CoefficientPolynomial; 3],
) -> Result<DigammaNumber> {
    let kk = rat_int(j);
    let g1 = g[0].eval(&kk);
    if g1.is_zero() {
        return Err(Error::SingularStep(format!(
            "log-moment step at k = {j} has a vanishing leading coefficient"
        )));
    }
    let r_up = chain.get(j + 2)?;
    let r_mid = chain.get(j)?;
    let r_dn = chain.get(j - 2)?;
    let drift = -gp[0].eval(&kk) * r_up + gp[1].eval(&kk) * r_mid + gp[2].eval(&kk) * r_dn;
    let total = t_j.scale(&g[1].eval(&kk))
        + t_jm2.scale(&g[2].eval(&kk))
        + DigammaNumber::from_rational(drift);
    Ok(total.scale(&(rat_int(1) / g1)))
}

/// κ(T_k) = mean of Σᵢ xᵢ^k ln(xᵢ), exactly. Indices above the seeds
/// (k ≥ 2) ascend the differentiated recurrence and need m < n.
pub fn moment_t(k: i64, params: &EnsembleParams) -> Result<DigammaNumber> {
    if (-3..=1).contains(&k) {
        return seed_t(k, params);
    }
    if k < -3 {
        return Err(Error::Validity(format!(
            "log-moment index {k} is below the seeded range (k ≥ −3)"
        )));
    }
    if params.m() == params.n() {
        return Err(Error::Validity(
            "log-moment chains above k = 1 need negative seeds, which do not exist at m = n"
                .into(),
        ));
    }
    let g = [
        coefficient_polynomial(1, params),
        coefficient_polynomial(2, params),
        coefficient_polynomial(3, params),
    ];
    let gp = [g[0].derivative(), g[1].derivative(), g[2].derivative()];
    let mut chain = MomentChain::new(params);
    let odd = k.rem_euclid(2) == 1;
    let mut j = if odd { 1 } else { 0 };
    let mut t_lo = seed_t(j - 2, params)?;
    let mut t_hi = seed_t(j, params)?;
    while j < k {
        let next = t_step(j, &t_hi, &t_lo, &mut chain, &g, &gp)?;
        t_lo = t_hi;
        t_hi = next;
        j += 2;
    }
    Ok(t_hi)
}

// ---------------------------------------------------------------------------
// entropy and purity
// ---------------------------------------------------------------------------

/// The mean von Neumann entropy, exactly: ψ₀(d+1) − ψ₀(n+1/2) with
/// d = m(2n−m)/2.
///
/// Computed along two independent routes — the closed form above, and the
/// log-moment route T₁ → κ(S) = ψ₀(d+1) − 2·T₁/(m(2α+m+1)) with T₁
/// reproduced from a k = −1 recurrence step where the negative seeds exist
/// (m < n) and from its closed seed at m = n. The two must agree exactly,
/// and the Euler-constant component must cancel; any discrepancy is an
/// internal invariant violation.
///
/// # Examples
///
/// ```
/// use bures_hall::{moments::mean_entropy, EnsembleParams};
///
/// let s = mean_entropy(&EnsembleParams::new(2, 3).unwrap()).unwrap();
/// // 2·ln2 − 59/60
/// assert!((s.to_f64() - 0.402_961_027_786_557_3).abs() < 1e-15);
/// ```
pub fn mean_entropy(params: &EnsembleParams) -> Result<DigammaNumber> {
    let m = params.m() as i64;
    let n = params.n() as i64;
    let d_plus_1 = HalfInteger::from_twice((m * (2 * n - m) + 2).into());
    let n_half = HalfInteger::from_twice((2 * n + 1).into());
    let closed = digamma_exact(&d_plus_1)? - digamma_exact(&n_half)?;
    let t1 = if params.m() == params.n() {
        seed_t(1, params)?
    } else {
        let g = [
            coefficient_polynomial(1, params),
            coefficient_polynomial(2, params),
            coefficient_polynomial(3, params),
        ];
        let gp = [g[0].derivative(), g[1].derivative(), g[2].derivative()];
        let mut chain = MomentChain::new(params);
        t_step(
            -1,
            &seed_t(-1, params)?,
            &seed_t(-3, params)?,
            &mut chain,
            &g,
            &gp,
        )?
    };
    let a = params.alpha_rational();
    let mrat = rat_int(m);
    let factor = rat_int(2) / (&mrat * (&a * rat_int(2) + &mrat + rat_int(1)));
    let through_t1 = digamma_exact(&d_plus_1)? - t1.scale(&factor);
    if through_t1 != closed {
        return Err(Error::Invariant(format!(
            "entropy mismatch between closed form and log-moment route at (m, n) = ({}, {})",
            params.m(),
            params.n()
        )));
    }
    if !closed.gamma_coeff.is_zero() {
        return Err(Error::Invariant(
            "entropy must have a vanishing Euler-constant component".into(),
        ));
    }
    Ok(closed)
}

/// The mean purity, exactly: κ(P) = κ(R₂)/(d(d+1)).
///
/// Computed both from the moment engine's κ(R₂) and from the independent
/// closed form (m² − 2mn − 4n² − 1)/(2n(m² − 2mn − 2)); the two must agree
/// exactly.
///
/// # Examples
///
/// ```
/// use bures_hall::{moments::mean_purity, EnsembleParams};
/// use bures_hall::exact::rat;
///
/// assert_eq!(mean_purity(&EnsembleParams::new(2, 3).unwrap()).unwrap(), rat(3, 4));
/// assert_eq!(mean_purity(&EnsembleParams::new(2, 2).unwrap()).unwrap(), rat(7, 8));
/// ```
pub fn mean_purity(params: &EnsembleParams) -> Result<ExactRational> {
    let r2 = moment_r(2, params)?;
    let d = params.d().to_rational();
    let via_moment = r2 / (&d * (&d + rat_int(1)));
    let m = rat_int(params.m() as i64);
    let n = rat_int(params.n() as i64);
    let two = rat_int(2);
    let closed = (&m * &m - &two * &m * &n - rat_int(4) * &n * &n - rat_int(1))
        / (&two * &n * (&m * &m - &two * &m * &n - &two));
    if via_moment != closed {
        return Err(Error::Invariant(format!(
            "purity mismatch between moment route and closed form at (m, n) = ({}, {})",
            params.m(),
            params.n()
        )));
    }
    Ok(closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::to_f64;
    use std::str::FromStr;

    fn params(m: u32, n: u32) -> EnsembleParams {
        EnsembleParams::new(m, n).unwrap()
    }

    #[test]
    fn tables_reproduce_reference_spot_values() {
        for &(table, ta, m, k, expect) in tables::SPOT_CHECKS {
            let n = ((ta + 1) / 2 + m) as u32;
            let p = params(m as u32, n);
            assert_eq!(p.twice_alpha(), ta);
            let got = bind_k_poly(table, &p).eval(&rat_int(k));
            let want = ExactRational::from_str(expect).unwrap();
            assert_eq!(got, want, "table spot at (2α, m, k) = ({ta}, {m}, {k})");
        }
    }

    #[test]
    fn a_ratio_and_special_values() {
        for (m, n) in [(1u32, 1u32), (2, 3), (3, 4), (6, 8)] {
            let p = params(m, n);
            // a₄/a₅ = (α+m+1)/(α+m)
            let a4 = coeff_a(4, &p);
            let a5 = coeff_a(5, &p);
            let alpha = p.alpha_rational();
            let expect = (&alpha + rat_int(m as i64 + 1)) / (&alpha + rat_int(m as i64));
            assert_eq!(a4 / a5, expect);
        }
        // a₁ vanishes at m = 1 (factor m−1), including the (1,1) corner where
        // the denominator factor 2α+2m−1 vanishes too.
        assert!(coeff_a(1, &params(1, 1)).is_zero());
        assert!(coeff_a(1, &params(1, 4)).is_zero());
        // spot value: (m,n) = (2,3), α = 1/2: a₄ = 2·4/((5/2)·6) = 8/15
        assert_eq!(coeff_a(4, &params(2, 3)), rat(8, 15));
    }

    #[test]
    fn seeds_satisfy_the_recurrence_at_k0_and_km1() {
        // g₁(0)·R₂ = g₂(0)·R₀ + g₃(0)·R₋₂ and the k = −1 analogue.
        for (m, n) in [(1u32, 3u32), (2, 4), (3, 5), (4, 8), (5, 7)] {
            let p = params(m, n);
            for (k, up, mid, dn) in [(0i64, 2i64, 0i64, -2i64), (-1, 1, -1, -3)] {
                let lhs = coeff_g(1, k, &p) * seed_r(up, &p).unwrap();
                let rhs = coeff_g(2, k, &p) * seed_r(mid, &p).unwrap()
                    + coeff_g(3, k, &p) * seed_r(dn, &p).unwrap();
                assert_eq!(lhs, rhs, "(m,n)=({m},{n}) closure at k={k}");
            }
        }
    }

    #[test]
    fn b_coefficient_has_the_advertised_root() {
        // b₁(1) = 0: its numerator carries the factor (k−1).
        let p = params(2, 4);
        assert!(coeff_b(1, 1, &p).unwrap().is_zero());
        assert!(!coeff_b(2, 1, &p).unwrap().is_zero());
    }

    #[test]
    fn c_coefficient_reports_pole_factor_at_k1() {
        // D_c carries the universal factor (k−1).
        let err = coeff_c(1, 1, &params(2, 3)).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("pole"), "{msg}");
        assert!(msg.contains("k − 1"), "{msg}");
    }

    #[test]
    fn known_exact_moments() {
        let cases: [(u32, u32, i64, &str); 16] = [
            (2, 3, 1, "4"),
            (2, 3, 2, "15"),
            (2, 3, 3, "75"),
            (2, 3, 4, "7245/16"),
            (2, 4, 1, "6"),
            (2, 4, 2, "231/8"),
            (2, 4, 3, "357/2"),
            (2, 4, 4, "10395/8"),
            (3, 4, 1, "15/2"),
            (3, 4, 2, "75/2"),
            (3, 4, 3, "1965/8"),
            (3, 4, 4, "1890"),
            (2, 2, 2, "21/4"),
            (2, 2, 3, "39/2"),
            (1, 1, 3, "15/8"),
            (3, 3, 2, "69/4"),
        ];
        for (m, n, k, expect) in cases {
            let got = moment_r(k, &params(m, n)).unwrap();
            let want = ExactRational::from_str(expect).unwrap();
            assert_eq!(got, want, "κ(R_{k}) at (m,n)=({m},{n})");
        }
    }

    #[test]
    fn m1_chain_matches_gamma_ratio_including_rescued_rungs() {
        // At m = 1, κ(R_k) = Γ(α+1+k)/Γ(α+1) = Π_{j=1..k} (α+j); for n = 1
        // the even chain must reroute through the rescue at k = 4, 6, 8.
        for n in 1u32..=8 {
            let p = params(1, n);
            let a = p.alpha_rational();
            let mut expect = rat_int(1);
            for k in 1i64..=8 {
                expect *= &a + rat_int(k);
                let got = moment_r(k, &p).unwrap();
                assert_eq!(got, expect, "m=1 n={n} k={k}");
            }
        }
    }

    #[test]
    fn rescued_rung_agrees_with_quadrature() {
        // (2,2): the step at k = 4 has g₁ = 0 (root k = 2n), so κ(R₆) goes
        // through the exact last-moment value; check it against direct
        // density quadrature.
        let p = params(2, 2);
        assert!(coeff_g(1, 4, &p).is_zero());
        let exact = moment_r(6, &p).unwrap();
        let ws = KernelWorkspace::new(&p, 48).unwrap();
        let quad = kernels::density_moment(6.0, &ws).unwrap();
        let rel = (to_f64(&exact) - quad).abs() / quad.abs();
        assert!(rel < 1e-9, "exact {} vs quadrature {quad}", to_f64(&exact));
    }

    #[test]
    fn moment_errors() {
        let square = params(3, 3);
        assert!(matches!(
            moment_r(-1, &square),
            Err(Error::Validity(_))
        ));
        assert!(matches!(moment_r(-4, &params(2, 4)), Err(Error::Validity(_))));
        assert!(matches!(seed_r(5, &params(2, 4)), Err(Error::Validity(_))));
    }

    #[test]
    fn real_chain_step_matches_direct_quadrature() {
        // seeds κ(R_{−1.5}), κ(R_{0.5}) at (2,4), one recurrence step to
        // κ(R_{2.5}), compared against direct quadrature.
        let p = params(2, 4);
        let ws = KernelWorkspace::new(&p, 48).unwrap();
        let r_lo = moment_r_real(-1.5, &ws).unwrap();
        let r_mid = moment_r_real(0.5, &ws).unwrap();
        let g1 = coefficient_polynomial(1, &p).eval_f64(0.5);
        let g2 = coefficient_polynomial(2, &p).eval_f64(0.5);
        let g3 = coefficient_polynomial(3, &p).eval_f64(0.5);
        let stepped = (g2 * r_mid + g3 * r_lo) / g1;
        let direct = moment_r_real(2.5, &ws).unwrap();
        assert!(
            (stepped - direct).abs() < 1e-6 * (1.0 + direct.abs()),
            "stepped {stepped} vs direct {direct}"
        );
    }

    #[test]
    fn verification_residuals_are_small() {
        for (m, n) in [(2u32, 4u32), (3, 5), (2, 2)] {
            let p = params(m, n);
            let ws = KernelWorkspace::new(&p, 48).unwrap();
            for k in [1.0, 2.0, 3.0, 2.3] {
                let r = verify_rklast(k, &ws).unwrap();
                assert!(r < 1e-6, "rklast (m,n)=({m},{n}) k={k}: {r}");
                let r = verify_intid(k, &ws).unwrap();
                assert!(r < 1e-6, "intid (m,n)=({m},{n}) k={k}: {r}");
            }
        }
    }

    #[test]
    fn entropy_and_purity_spot_values() {
        // (2,3): κ(S) = 2 ln2 − 59/60, κ(P) = 3/4
        let s = mean_entropy(&params(2, 3)).unwrap();
        assert_eq!(s.rational, rat(-59, 60));
        assert_eq!(s.ln2_coeff, rat_int(2));
        assert!(s.gamma_coeff.is_zero());
        assert_eq!(mean_purity(&params(2, 3)).unwrap(), rat(3, 4));
        // (2,2): κ(S) = 2 ln2 − 7/6, κ(P) = 7/8
        let s = mean_entropy(&params(2, 2)).unwrap();
        assert_eq!(s.rational, rat(-7, 6));
        assert_eq!(s.ln2_coeff, rat_int(2));
        assert_eq!(mean_purity(&params(2, 2)).unwrap(), rat(7, 8));
    }

    #[test]
    fn entropy_and_purity_hold_across_a_grid() {
        for m in 1u32..=6 {
            for n in m..=m + 3 {
                let p = params(m, n);
                let s = mean_entropy(&p).unwrap();
                if m == 1 {
                    // a 1×1 density matrix is the pure state: d = n − 1/2
                    // and ψ₀(d+1) − ψ₀(n+1/2) collapses to exactly zero
                    assert_eq!(s, DigammaNumber::zero(), "(m,n)=({m},{n})");
                } else {
                    assert!(s.to_f64() > 0.0, "(m,n)=({m},{n})");
                }
                let pu = mean_purity(&p).unwrap();
                let lo = rat(1, m as i64);
                assert!(pu <= rat_int(1) && pu >= lo, "(m,n)=({m},{n}): {pu}");
            }
        }
    }

    #[test]
    fn log_moment_seeds_match_m1_gamma_derivatives() {
        // At m = 1: κ(T_k) = Γ(α+1+k)·ψ₀(α+1+k)/Γ(α+1). The Γ-ratio form
        // needs α+1+k > 0, i.e. n − 1 ≥ −k; below that the seeds are the
        // analytic continuation and the comparison form is not evaluable.
        for n in 2u32..=6 {
            let p = params(1, n);
            let a = p.alpha();
            for k in [-3i64, -2, -1, 0, 1] {
                if k < 0 && i64::from(n) - 1 < -k {
                    continue;
                }
                let got = seed_t(k, &p).unwrap();
                let mut ratio = rat_int(1); // Γ(α+1+k)/Γ(α+1)
                if k >= 0 {
                    for j in 0..k {
                        ratio *= a.plus_int(1 + j).to_rational();
                    }
                } else {
                    for j in 0..(-k) {
                        ratio /= a.plus_int(-j).to_rational();
                    }
                }
                let want = digamma_exact(&a.plus_int(1 + k)).unwrap().scale(&ratio);
                assert_eq!(got, want, "m=1 n={n} k={k}");
            }
        }
    }

    #[test]
    fn log_moment_chain_extends_the_m1_oracle() {
        // moment_t climbs the differentiated recurrence; at m = 1 the
        // closed oracle continues to hold for k ≥ 2.
        for n in 2u32..=5 {
            let p = params(1, n);
            let a = p.alpha();
            for k in 2i64..=4 {
                let got = moment_t(k, &p).unwrap();
                let mut ratio = rat_int(1);
                for j in 0..k {
                    ratio *= a.plus_int(1 + j).to_rational();
                }
                let want = digamma_exact(&a.plus_int(1 + k)).unwrap().scale(&ratio);
                assert_eq!(got, want, "m=1 n={n} k={k}");
            }
        }
    }

    #[test]
    fn log_moment_errors() {
        assert!(matches!(seed_t(-1, &params(2, 2)), Err(Error::Validity(_))));
        assert!(matches!(moment_t(2, &params(3, 3)), Err(Error::Validity(_))));
        assert!(matches!(moment_t(-4, &params(2, 4)), Err(Error::Validity(_))));
    }
}
