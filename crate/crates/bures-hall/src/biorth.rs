//! The Cauchy–Laguerre biorthogonal polynomial system underlying the
//! ensemble's correlation kernels.
//!
//! Two families `p_k` and `q_k` are biorthogonal with respect to the
//! two-variable weight `x^α y^{α+1} e^{−x−y}/(x+y)`:
//!
//! ```text
//! ∫∫ p_k(x) q_l(y) · x^α y^{α+1} e^{−x−y}/(x+y) dx dy = δ_{kl}
//! ```
//!
//! Every coefficient of both families is an exact rational multiple of the
//! shared irrational factor √(2/π); this module carries the rationals and
//! the class tag separately so all identity manipulation stays exact. The
//! residual evaluators construct the difference polynomial of an identity
//! with exact arithmetic and float it only at the final evaluation point,
//! because the coefficient cancellations involved far exceed double
//! precision if floated early.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    gamma_half, gamma_quotient, rat_int, ExactRational, GammaQuotient, HalfInteger,
    RatPoly,
};
use crate::params::EnsembleParams;

/// The common irrational multiplier shared by all coefficients of a
/// [`ScaledPolynomial`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefactorClass {
    /// No prefactor: the rational coefficients are the true coefficients.
    One,
    /// The factor √(2/π) common to both polynomial families.
    Sqrt2OverPi,
}

impl PrefactorClass {
    /// The prefactor as a [`GammaQuotient`].
    pub fn as_quotient(self) -> GammaQuotient {
        match self {
            PrefactorClass::One => GammaQuotient::one(),
            PrefactorClass::Sqrt2OverPi => GammaQuotient::new(ExactRational::one(), -1, 1),
        }
    }

    /// The prefactor rounded to float.
    pub fn to_f64(self) -> f64 {
        self.as_quotient().to_f64()
    }
}

/// A polynomial with exact rational coefficients relative to a shared
/// irrational prefactor: the true polynomial is `prefactor · rational_part`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledPolynomial {
    rational_part: RatPoly,
    prefactor_class: PrefactorClass,
}

impl ScaledPolynomial {
    /// Wraps a rational polynomial with its prefactor class.
    pub fn new(rational_part: RatPoly, prefactor_class: PrefactorClass) -> Self {
        ScaledPolynomial {
            rational_part,
            prefactor_class,
        }
    }

    /// The exact rational part (true polynomial divided by the prefactor).
    pub fn rational_part(&self) -> &RatPoly {
        &self.rational_part
    }

    /// The shared irrational prefactor.
    pub fn prefactor_class(&self) -> PrefactorClass {
        self.prefactor_class
    }

    /// Degree of the polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.rational_part.degree()
    }

    /// True value at `x`, including the prefactor, in float.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.prefactor_class.to_f64() * self.rational_part.eval_f64(x)
    }
}

/// Builds Γ(arg) for a rational-plus-half-integer argument `base + j`.
fn half(alpha: &HalfInteger, j: i64) -> HalfInteger {
    alpha.plus_int(j)
}

/// The polynomial `p_k` of the first biorthogonal family.
///
/// Its coefficient at `x^j` is
/// `√2 (−1)^{k+j} Γ(2α+j+k+2) / (j! Γ(α+j+1) Γ(2α+j+2) (k−j)!)`,
/// an exact rational times the class factor √(2/π).
///
/// # Examples
///
/// ```
/// use bures_hall::biorth::poly_p;
/// use bures_hall::exact::rat_int;
/// use bures_hall::EnsembleParams;
///
/// // For α = 1/2 the constant p_0 = √2/Γ(3/2) = 2·√(2/π).
/// let params = EnsembleParams::new(2, 3).unwrap();
/// let p0 = poly_p(0, &params);
/// assert_eq!(p0.rational_part().coeff(0), rat_int(2));
/// ```
pub fn poly_p(k: usize, params: &EnsembleParams) -> ScaledPolynomial {
    let alpha = params.alpha();
    let two_alpha = HalfInteger::from_twice((2 * params.twice_alpha()).into());
    let mut coeffs = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let ji = j as i64;
        let ki = k as i64;
        // √2 · Γ(2α+j+k+2) / (Γ(j+1) Γ(α+j+1) Γ(2α+j+2) Γ(k−j+1))
        let q = gamma_quotient(
            &[half(&two_alpha, ji + ki + 2)],
            &[
                HalfInteger::from_int(ji + 1),
                half(&alpha, ji + 1),
                half(&two_alpha, ji + 2),
                HalfInteger::from_int(ki - ji + 1),
            ],
        )
        .expect("all gamma arguments are positive")
        .mul(&GammaQuotient::new(ExactRational::one(), 0, 1));
        debug_assert_eq!((q.sqrt_pi_power, q.sqrt2_power), (-1, 1));
        let sign = if (k + j).is_multiple_of(2) { 1 } else { -1 };
        coeffs.push(q.rational * rat_int(sign));
    }
    ScaledPolynomial::new(RatPoly::new(coeffs), PrefactorClass::Sqrt2OverPi)
}

/// The polynomial `q_k` of the second biorthogonal family.
///
/// Same sum as [`poly_p`] with an extra factor `(α+k+1)` and denominator
/// Γ(α+j+2) in place of Γ(α+j+1).
pub fn poly_q(k: usize, params: &EnsembleParams) -> ScaledPolynomial {
    let alpha = params.alpha();
    let two_alpha = HalfInteger::from_twice((2 * params.twice_alpha()).into());
    let extra = alpha.plus_int(k as i64 + 1).to_rational();
    let mut coeffs = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let ji = j as i64;
        let ki = k as i64;
        let q = gamma_quotient(
            &[half(&two_alpha, ji + ki + 2)],
            &[
                HalfInteger::from_int(ji + 1),
                half(&alpha, ji + 2),
                half(&two_alpha, ji + 2),
                HalfInteger::from_int(ki - ji + 1),
            ],
        )
        .expect("all gamma arguments are positive")
        .mul(&GammaQuotient::new(ExactRational::one(), 0, 1));
        debug_assert_eq!((q.sqrt_pi_power, q.sqrt2_power), (-1, 1));
        let sign = if (k + j).is_multiple_of(2) { 1 } else { -1 };
        coeffs.push(q.rational * &extra * rat_int(sign));
    }
    ScaledPolynomial::new(RatPoly::new(coeffs), PrefactorClass::Sqrt2OverPi)
}

/// The shared leading coefficient `S_k` of `p_k` and `q_k`.
///
/// Evaluates the singularity-free combination
/// `S_k = 2√2 Γ(2α+2k+2) / ((2α+2k) Γ(k+1) Γ(α+k) Γ(2α+k+2))`, in which the
/// removable `k Γ(k)` factor at k = 0 has been cancelled algebraically
/// (never by float limits).
pub fn leading_coeff_s(k: usize, params: &EnsembleParams) -> GammaQuotient {
    let alpha = params.alpha();
    let two_alpha = HalfInteger::from_twice((2 * params.twice_alpha()).into());
    let ki = k as i64;
    // Assemble with gamma_half directly: Γ(α+k) may have a negative
    // half-integer argument at k = 0, α = −1/2.
    let num = gamma_half(&half(&two_alpha, 2 * ki + 2)).expect("positive integer argument");
    let den = gamma_half(&HalfInteger::from_int(ki + 1))
        .expect("positive integer argument")
        .mul(&gamma_half(&half(&alpha, ki)).expect("non-pole half-integer argument"))
        .mul(&gamma_half(&half(&two_alpha, ki + 2)).expect("positive integer argument"));
    let two_alpha_2k = ExactRational::from_integer((params.twice_alpha() + 2 * ki).into());
    num.div(&den)
        .scale(&two_alpha_2k.recip())
        .mul(&GammaQuotient::new(rat_int(2), 0, 1))
}

/// The exact ratio `S_{k−1}/S_k = k(2α+k+1)/(2(2α+2k+1))`, with the
/// convention `S_{−1}/S_0 = 0` built in at k = 0.
pub fn s_ratio(k: usize, params: &EnsembleParams) -> ExactRational {
    if k == 0 {
        // S_{−1}/S_0 = 0; also keeps the α = −1/2 case away from the
        // vanishing denominator 2(2α+1).
        return ExactRational::zero();
    }
    let a2 = params.twice_alpha(); // 2α
    let ki = k as i64;
    ExactRational::new(
        (ki * (a2 + ki + 1)).into(),
        (2 * (a2 + 2 * ki + 1)).into(),
    )
}

/// Which expansion-coefficient family [`coeff_cd`] returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffKind {
    /// `c_{j,k}`: coefficient of `p_j` in the dual-basis expansion of `x·p_k`
    /// (row = j, col = k).
    C,
    /// `d_{k,j}`: coefficient of `q_k` in the expansion of `x·q_j`
    /// (row = k, col = j).
    D,
}

/// Expansion coefficient of `x·p_col` over `{p_row}` (c-case) or of
/// `x·q_col` over `{q_row}` (d-case).
///
/// Rows past the band (`row ≥ col+2`) are zero by contract; negative
/// indices are a domain error. The two families satisfy the exact sum rule
/// `c_{j,k} + d_{k,j} = 2(α+j+1)` for all j, k ≥ 0.
///
/// # Examples
///
/// ```
/// use bures_hall::biorth::{coeff_cd, s_ratio, CoeffKind};
/// use bures_hall::EnsembleParams;
///
/// let params = EnsembleParams::new(3, 5).unwrap();
/// // c_{m,m−1} = S_{m−1}/S_m at m = 3.
/// assert_eq!(
///     coeff_cd(CoeffKind::C, 3, 2, &params).unwrap(),
///     s_ratio(3, &params),
/// );
/// ```
pub fn coeff_cd(
    which: CoeffKind,
    row: i64,
    col: i64,
    params: &EnsembleParams,
) -> Result<ExactRational> {
    if row < 0 || col < 0 {
        return Err(Error::Domain(format!(
            "expansion coefficient indices must be nonnegative, got ({}, {})",
            row, col
        )));
    }
    if row >= col + 2 {
        return Ok(ExactRational::zero());
    }
    let alpha = params.alpha_rational();
    let colu = col as usize;
    let ratio_col = s_ratio(colu, params); // S_{col−1}/S_col (0 at col = 0)
    let ratio_next = s_ratio(colu + 1, params); // S_col/S_{col+1}
    let value = match which {
        CoeffKind::C => {
            if row == col + 1 {
                ratio_next
            } else if row == col {
                &alpha + rat_int(col + 1) + ratio_col - ratio_next
            } else if row == col - 1 {
                (&alpha + rat_int(col)) * rat_int(2) - ratio_col
            } else {
                (&alpha + rat_int(row + 1)) * rat_int(2)
            }
        }
        CoeffKind::D => {
            if row == col + 1 {
                ratio_next
            } else if row == col {
                &alpha + rat_int(col + 1) + ratio_next - ratio_col
            } else if row == col - 1 {
                (&alpha + rat_int(col + 1)) * rat_int(2) - ratio_col
            } else {
                (&alpha + rat_int(col + 1)) * rat_int(2)
            }
        }
    };
    Ok(value)
}

/// Which polynomial family an identity evaluator targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyKind {
    /// The `p` family.
    P,
    /// The `q` family.
    Q,
}

fn family_rational(kind: PolyKind, k: usize, params: &EnsembleParams) -> RatPoly {
    match kind {
        PolyKind::P => poly_p(k, params).rational_part.clone(),
        PolyKind::Q => poly_q(k, params).rational_part.clone(),
    }
}

/// Relative float residual of an exact residual polynomial at `x`, scaled
/// by the magnitude of the identity's left-hand side.
fn relative_residual(residual: &RatPoly, lhs: &RatPoly, x: f64) -> f64 {
    residual.eval_f64(x).abs() / (1.0 + lhs.eval_f64(x).abs())
}

/// The exact difference polynomial (LHS − RHS) of the structure relation
/// `x·A_k'(x) = (S_{k−1}/S_k)A_{k−1} − (α+1 ∓ S_k/S_{k+1} ± S_{k−1}/S_k)A_k +
/// x·A_k − (S_k/S_{k+1})A_{k+1}` for A ∈ {p, q}; identically zero when the
/// transcription is faithful.
pub fn structure_residual_exact(kind: PolyKind, k: usize, params: &EnsembleParams) -> RatPoly {
    assert!(k >= 1, "structure relation needs the index k−1");
    let alpha = params.alpha_rational();
    let rm1 = s_ratio(k, params); // S_{k−1}/S_k
    let r0 = s_ratio(k + 1, params); // S_k/S_{k+1}
    let am1 = family_rational(kind, k - 1, params);
    let a0 = family_rational(kind, k, params);
    let ap1 = family_rational(kind, k + 1, params);
    let middle = match kind {
        PolyKind::P => &alpha + rat_int(1) - &r0 + &rm1,
        PolyKind::Q => &alpha + rat_int(1) + &r0 - &rm1,
    };
    let lhs = a0.derivative().mul_x();
    let rhs = am1
        .scale(&rm1)
        .sub(&a0.scale(&middle))
        .add(&a0.mul_x())
        .sub(&ap1.scale(&r0));
    lhs.sub(&rhs)
}

/// Relative float residual of the structure relation at the point `x`.
pub fn structure_residual_poly(kind: PolyKind, k: usize, x: f64, params: &EnsembleParams) -> f64 {
    let residual = structure_residual_exact(kind, k, params);
    let lhs = family_rational(kind, k, params).derivative().mul_x();
    relative_residual(&residual, &lhs, x)
}

/// The four neighbour coefficients `r_{k,2}, r_{k,1}, r_{k,0}, r_{k,−1}` of
/// the p-family four-term recurrence.
pub fn four_term_r(k: usize, params: &EnsembleParams) -> [ExactRational; 4] {
    let a = params.alpha_rational();
    let m = rat_int(k as i64);
    let two = rat_int(2);
    let r2 = (&m + rat_int(2)) * (&a * &two + &m + rat_int(3))
        / (&two * (&a * &two + &m * &two + rat_int(5)));
    let r1 = (&a * &a * rat_int(4)
        + (&a + rat_int(1)) * rat_int(14)
        + &a * &m * rat_int(6)
        + &m * (&m * rat_int(3) + rat_int(13)))
        / (&two * (&a * &two + &m * &two + rat_int(5)));
    let r0 = (&a * &a * rat_int(4)
        + &m * &m * rat_int(3)
        + &a * (&m + rat_int(1)) * rat_int(6)
        + &m * rat_int(5)
        + rat_int(2))
        / (&two * (&a * &two + &m * &two + rat_int(1)));
    let rm1 = s_ratio(k, params);
    [r2, r1, r0, rm1]
}

/// The four neighbour coefficients `s_{k,2}, s_{k,1}, s_{k,0}, s_{k,−1}` of
/// the q-family four-term recurrence.
pub fn four_term_s(k: usize, params: &EnsembleParams) -> [ExactRational; 4] {
    let a = params.alpha_rational();
    let m = rat_int(k as i64);
    let two = rat_int(2);
    let [r2, _, _, rm1] = four_term_r(k, params);
    let s2 = r2 / (&a + &m + rat_int(2));
    let s1 = (&a * &a * &a * rat_int(4)
        + &a * &a * rat_int(2) * (&m * rat_int(5) + rat_int(11))
        + &a * (&m + rat_int(2)) * (&m * rat_int(9) + rat_int(17))
        + (&m + rat_int(1)) * (&m + rat_int(2)) * (&m * rat_int(3) + rat_int(8)))
        / (&two
            * (&a + &m + rat_int(1))
            * (&a + &m + rat_int(2))
            * (&a * &two + &m * &two + rat_int(5)));
    let s0 = ((&a + rat_int(1)) * (&a + rat_int(1)) * (&a * &two + rat_int(1)) * &two
        + &m * &m * &m * rat_int(3)
        + (&a * rat_int(9) + rat_int(10)) * &m * &m
        + (&a * &two + rat_int(3)) * (&a * rat_int(5) + rat_int(3)) * &m)
        / (&two
            * (&a + &m + rat_int(1))
            * (&a + &m + rat_int(2))
            * (&a * &two + &m * &two + rat_int(1)));
    let sm1 = rm1 / (&a + &m + rat_int(1));
    [s2, s1, s0, sm1]
}

/// The exact difference polynomial of the four-term recurrence
/// `x(p_{k+1} − p_k) = r_{k,2}p_{k+2} + r_{k,1}p_{k+1} + r_{k,0}p_k +
/// r_{k,−1}p_{k−1}` (or its q analogue with rescaled left side and the
/// `s_{k,·}` coefficients).
pub fn four_term_residual_exact(kind: PolyKind, k: usize, params: &EnsembleParams) -> RatPoly {
    assert!(k >= 1, "four-term recurrence needs the index k−1");
    let a = params.alpha_rational();
    let fm1 = family_rational(kind, k - 1, params);
    let f0 = family_rational(kind, k, params);
    let f1 = family_rational(kind, k + 1, params);
    let f2 = family_rational(kind, k + 2, params);
    let (lhs, coeffs) = match kind {
        PolyKind::P => (f1.sub(&f0).mul_x(), four_term_r(k, params)),
        PolyKind::Q => {
            let inv1 = (&a + rat_int(k as i64 + 2)).recip();
            let inv0 = (&a + rat_int(k as i64 + 1)).recip();
            (
                f1.scale(&inv1).sub(&f0.scale(&inv0)).mul_x(),
                four_term_s(k, params),
            )
        }
    };
    let [c2, c1, c0, cm1] = coeffs;
    let rhs = f2
        .scale(&c2)
        .add(&f1.scale(&c1))
        .add(&f0.scale(&c0))
        .add(&fm1.scale(&cm1));
    lhs.sub(&rhs)
}

/// Relative float residual of the four-term recurrence at the point `x`.
pub fn four_term_residual_poly(kind: PolyKind, k: usize, x: f64, params: &EnsembleParams) -> f64 {
    let residual = four_term_residual_exact(kind, k, params);
    let a = params.alpha_rational();
    let f0 = family_rational(kind, k, params);
    let f1 = family_rational(kind, k + 1, params);
    let lhs = match kind {
        PolyKind::P => f1.sub(&f0).mul_x(),
        PolyKind::Q => {
            let inv1 = (&a + rat_int(k as i64 + 2)).recip();
            let inv0 = (&a + rat_int(k as i64 + 1)).recip();
            f1.scale(&inv1).sub(&f0.scale(&inv0)).mul_x()
        }
    };
    relative_residual(&residual, &lhs, x)
}

/// Which partial-sum identity [`single_sum_residual`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingleSumKind {
    /// `2 Σ_{j<m} (α+j+1) p_j` against its closed four-polynomial form.
    PHat,
    /// `2(α+m+1) Σ_{k<m} q_k` against its closed four-polynomial form.
    QCheck,
    /// The mixed sum rule `2 Σ_{k<m} q_k = q_{m−1} + p_{m−1}`.
    PqCheck,
}

/// The exact difference polynomial of a partial-sum identity at the
/// ensemble's own subsystem dimension m.
pub fn single_sum_residual_exact(kind: SingleSumKind, params: &EnsembleParams) -> RatPoly {
    let m = params.m() as usize;
    let alpha = params.alpha_rational();
    let rm1 = s_ratio(m, params);
    let r0 = s_ratio(m + 1, params);
    match kind {
        SingleSumKind::PHat => {
            let mut lhs = RatPoly::zero();
            for j in 0..m {
                let w = (&alpha + rat_int(j as i64 + 1)) * rat_int(2);
                lhs = lhs.add(&family_rational(PolyKind::P, j, params).scale(&w));
            }
            let middle = &alpha + rat_int(m as i64 + 1) - &r0 + &rm1;
            let pm1 = family_rational(PolyKind::P, m - 1, params);
            let pm = family_rational(PolyKind::P, m, params);
            let pp1 = family_rational(PolyKind::P, m + 1, params);
            let rhs = pm1
                .scale(&rm1)
                .sub(&pp1.scale(&r0))
                .add(&pm.mul_x())
                .sub(&pm.scale(&middle));
            lhs.sub(&rhs)
        }
        SingleSumKind::QCheck => {
            let w = (&alpha + rat_int(m as i64 + 1)) * rat_int(2);
            let mut lhs = RatPoly::zero();
            for j in 0..m {
                lhs = lhs.add(&family_rational(PolyKind::Q, j, params));
            }
            lhs = lhs.scale(&w);
            let middle = &alpha + rat_int(m as i64 + 1) + &r0 - &rm1;
            let qm1 = family_rational(PolyKind::Q, m - 1, params);
            let qm = family_rational(PolyKind::Q, m, params);
            let qp1 = family_rational(PolyKind::Q, m + 1, params);
            let rhs = qm1
                .scale(&rm1)
                .sub(&qp1.scale(&r0))
                .add(&qm.mul_x())
                .sub(&qm.scale(&middle));
            lhs.sub(&rhs)
        }
        SingleSumKind::PqCheck => {
            let mut lhs = RatPoly::zero();
            for j in 0..m {
                lhs = lhs.add(&family_rational(PolyKind::Q, j, params));
            }
            lhs = lhs.scale(&rat_int(2));
            let rhs = family_rational(PolyKind::Q, m - 1, params)
                .add(&family_rational(PolyKind::P, m - 1, params));
            lhs.sub(&rhs)
        }
    }
}

/// Relative float residual of a partial-sum identity at the point `x`.
pub fn single_sum_residual(kind: SingleSumKind, x: f64, params: &EnsembleParams) -> f64 {
    let residual = single_sum_residual_exact(kind, params);
    let m = params.m() as usize;
    let lhs = match kind {
        SingleSumKind::PHat => {
            let alpha = params.alpha_rational();
            let mut acc = RatPoly::zero();
            for j in 0..m {
                let w = (&alpha + rat_int(j as i64 + 1)) * rat_int(2);
                acc = acc.add(&family_rational(PolyKind::P, j, params).scale(&w));
            }
            acc
        }
        SingleSumKind::QCheck | SingleSumKind::PqCheck => {
            let mut acc = RatPoly::zero();
            for j in 0..m {
                acc = acc.add(&family_rational(PolyKind::Q, j, params));
            }
            acc.scale(&rat_int(2))
        }
    };
    relative_residual(&residual, &lhs, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    

    fn params(m: u32, n: u32) -> EnsembleParams {
        EnsembleParams::new(m, n).unwrap()
    }

    #[test]
    fn constant_polynomials_agree() {
        for (m, n) in [(1, 1), (2, 4), (3, 3), (2, 7)] {
            let p = params(m, n);
            let p0 = poly_p(0, &p);
            let q0 = poly_q(0, &p);
            assert_eq!(p0, q0, "q_0 must equal p_0 for all α");
            // p_0 = √2/Γ(α+1): compare through S_0.
            let s0 = leading_coeff_s(0, &p);
            let class = PrefactorClass::Sqrt2OverPi.as_quotient();
            assert_eq!(class.scale(&p0.rational_part().coeff(0)), s0);
        }
    }

    #[test]
    fn leading_coefficients_match_s() {
        for (m, n) in [(1, 1), (2, 4), (3, 3), (4, 5)] {
            let p = params(m, n);
            let class = PrefactorClass::Sqrt2OverPi.as_quotient();
            for k in 0..=6usize {
                let s = leading_coeff_s(k, &p);
                let lp = poly_p(k, &p).rational_part().leading().unwrap().clone();
                let lq = poly_q(k, &p).rational_part().leading().unwrap().clone();
                assert_eq!(class.scale(&lp), s, "p_{} leading", k);
                assert_eq!(class.scale(&lq), s, "q_{} leading", k);
            }
        }
    }

    #[test]
    fn s_ratio_matches_quotient_of_s() {
        for (m, n) in [(1, 2), (3, 3), (2, 6)] {
            let p = params(m, n);
            for k in 1..=6usize {
                let direct = leading_coeff_s(k - 1, &p).div(&leading_coeff_s(k, &p));
                assert_eq!(direct.as_rational().unwrap(), &s_ratio(k, &p));
            }
            assert!(s_ratio(0, &p).is_zero());
        }
    }

    #[test]
    fn expansion_identities_hold_exactly() {
        // x·p_k = Σ_j c_{j,k} p_j and x·q_j = Σ_k d_{k,j} q_k, exact in x.
        for (m, n) in [(2, 3), (3, 3), (1, 5)] {
            let p = params(m, n);
            for col in 0..=(m as i64 + 1) {
                let mut rhs_p = RatPoly::zero();
                let mut rhs_q = RatPoly::zero();
                for row in 0..=(col + 1) {
                    let c = coeff_cd(CoeffKind::C, row, col, &p).unwrap();
                    rhs_p = rhs_p.add(&poly_p(row as usize, &p).rational_part().scale(&c));
                    let d = coeff_cd(CoeffKind::D, row, col, &p).unwrap();
                    rhs_q = rhs_q.add(&poly_q(row as usize, &p).rational_part().scale(&d));
                }
                let lhs_p = poly_p(col as usize, &p).rational_part().mul_x();
                let lhs_q = poly_q(col as usize, &p).rational_part().mul_x();
                assert!(lhs_p.sub(&rhs_p).is_zero(), "x·p_{} expansion", col);
                assert!(lhs_q.sub(&rhs_q).is_zero(), "x·q_{} expansion", col);
            }
        }
    }

    #[test]
    fn cd_sum_rule() {
        for (m, n) in [(2, 2), (3, 5), (6, 9)] {
            let p = params(m, n);
            let alpha = p.alpha_rational();
            for j in 0..=5i64 {
                for k in 0..=5i64 {
                    let c = coeff_cd(CoeffKind::C, j, k, &p).unwrap();
                    let d = coeff_cd(CoeffKind::D, k, j, &p).unwrap();
                    let expected = (&alpha + rat_int(j + 1)) * rat_int(2);
                    assert_eq!(c + d, expected, "c+d rule at j={} k={}", j, k);
                }
            }
        }
    }

    #[test]
    fn coeff_cd_rejects_negative_indices() {
        let p = params(2, 3);
        assert!(coeff_cd(CoeffKind::C, -1, 0, &p).is_err());
        assert!(coeff_cd(CoeffKind::D, 0, -2, &p).is_err());
    }

    #[test]
    fn structure_relations_are_exact() {
        for (m, n) in [(1, 1), (2, 4), (4, 5)] {
            let p = params(m, n);
            for k in 1..=(m as usize + 1) {
                assert!(structure_residual_exact(PolyKind::P, k, &p).is_zero());
                assert!(structure_residual_exact(PolyKind::Q, k, &p).is_zero());
            }
        }
        assert!(structure_residual_poly(PolyKind::P, 2, 1.0, &params(4, 5)) < 1e-10);
        assert!(structure_residual_poly(PolyKind::Q, 3, 7.5, &params(4, 5)) < 1e-10);
    }

    #[test]
    fn four_term_recurrences_are_exact() {
        for (m, n) in [(1, 2), (3, 3), (5, 6)] {
            let p = params(m, n);
            for k in 1..=(m as usize) {
                assert!(four_term_residual_exact(PolyKind::P, k, &p).is_zero());
                assert!(four_term_residual_exact(PolyKind::Q, k, &p).is_zero());
            }
        }
        assert!(four_term_residual_poly(PolyKind::P, 1, 2.0, &params(5, 6)) < 1e-10);
        assert!(four_term_residual_poly(PolyKind::Q, 2, 0.3, &params(5, 6)) < 1e-10);
    }

    #[test]
    fn four_term_rm1_is_s_ratio() {
        let p = params(4, 6);
        for k in 1..=6usize {
            let [_, _, _, rm1] = four_term_r(k, &p);
            assert_eq!(rm1, s_ratio(k, &p));
        }
    }

    #[test]
    fn single_sum_identities_are_exact() {
        for (m, n) in [(1, 1), (2, 5), (3, 4), (4, 4)] {
            let p = params(m, n);
            assert!(single_sum_residual_exact(SingleSumKind::PHat, &p).is_zero());
            assert!(single_sum_residual_exact(SingleSumKind::QCheck, &p).is_zero());
            assert!(single_sum_residual_exact(SingleSumKind::PqCheck, &p).is_zero());
        }
        assert!(single_sum_residual(SingleSumKind::PHat, 1.0, &params(3, 4)) < 1e-10);
        assert!(single_sum_residual(SingleSumKind::QCheck, 10.0, &params(2, 5)) < 1e-10);
    }

    #[test]
    fn marginal_integrals() {
        // ∫ p_k x^α e^{−x} dx = √2 and ∫ q_k y^{α+1} e^{−y} dy = √2(α+k+1),
        // via termwise exact Γ integrals: each term is rational·√2, so the
        // accumulated rational parts must sum to 1 resp. (α+k+1).
        for (m, n) in [(2, 3), (3, 3)] {
            let p = params(m, n);
            let alpha = p.alpha();
            let class = PrefactorClass::Sqrt2OverPi.as_quotient();
            for k in 0..=(m as usize + 1) {
                let mut acc_p = ExactRational::zero();
                for (j, c) in poly_p(k, &p).rational_part().coeffs().iter().enumerate() {
                    let g = gamma_half(&alpha.plus_int(j as i64 + 1)).unwrap();
                    let term = class.scale(c).mul(&g);
                    assert_eq!((term.sqrt_pi_power, term.sqrt2_power), (0, 1));
                    acc_p += term.rational;
                }
                assert_eq!(acc_p, rat_int(1), "∫p_{} marginal at {:?}", k, (m, n));

                let mut acc_q = ExactRational::zero();
                for (j, c) in poly_q(k, &p).rational_part().coeffs().iter().enumerate() {
                    let g = gamma_half(&alpha.plus_int(j as i64 + 2)).unwrap();
                    let term = class.scale(c).mul(&g);
                    assert_eq!((term.sqrt_pi_power, term.sqrt2_power), (0, 1));
                    acc_q += term.rational;
                }
                let expected = alpha.plus_int(k as i64 + 1).to_rational();
                assert_eq!(acc_q, expected, "∫q_{} marginal at {:?}", k, (m, n));
            }
        }
    }
}
