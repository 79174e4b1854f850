//! Correlation-kernel evaluation.
//!
//! The ensemble's one-point density is expressed through four kernel blocks
//! built from the biorthogonal pairs (p_k, q_k) and their Cauchy transforms
//! P_k, Q_k evaluated on the negative axis. Everything here reduces to the
//! exponential-integral family
//!
//! ```text
//! J(s, x) = ∫₀^∞ v^s e^{−v} / (x + v) dv ,   x > 0,
//! ```
//!
//! which this module computes by upward recursion J(s) = Γ(s) − x·J(s−1)
//! from closed-form bases, with two instability detectors and a
//! change-of-variable quadrature fallback.
//!
//! The module also provides the weighted inner products and squared-weight
//! integrals used to pin down the kernel algebra numerically, and the
//! one-point density moments κ(R_k) = m·∫ x^k h₁(x) dx evaluated by an
//! exact-to-rounding two-variable quadrature.

use crate::biorth::{self, PolyKind, PrefactorClass};
use crate::error::{Error, Result};
use crate::exact::{gamma_half, gamma_quotient, GammaQuotient, HalfInteger};
use crate::moments::coeff_a;
use crate::params::EnsembleParams;
use crate::quad::{gauss_legendre, QuadratureRule, SimplexWeightRule};
use std::sync::OnceLock;

/// Relative cancellation threshold for the upward recursion: a step that
/// cancels ten or more leading bits is treated as unstable.
const CANCEL_RATIO: f64 = 9.765_625e-4; // 2^{−10}

/// Cumulative forward-error budget, relative to the running value, beyond
/// which the recursion hands over to the quadrature fallback.
const ERROR_BUDGET: f64 = 1e-11;

fn legendre_24() -> &'static QuadratureRule {
    static RULE: OnceLock<QuadratureRule> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(24))
}

/// `e^x E₁(x)` for x > 0: a power series below 1, a modified-Lentz
/// continued fraction above.
fn j_base_int(x: f64) -> f64 {
    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
    if x <= 1.0 {
        let mut sum = 0.0_f64;
        let mut term = 1.0_f64;
        for n in 1..40 {
            let nf = n as f64;
            term *= -x / nf;
            let delta = -term / nf;
            sum += delta;
            if delta.abs() < 1e-18 * sum.abs().max(1.0) {
                break;
            }
        }
        (sum - EULER_GAMMA - x.ln()) * x.exp()
    } else {
        // e^x E₁(x) = 1/(x+1− 1²/(x+3− 2²/(x+5−…)))
        let tiny = 1e-300;
        let mut f = x + 1.0;
        let mut c = f;
        let mut d = 0.0_f64;
        for n in 1..200 {
            let an = -((n * n) as f64);
            let bn = x + (2 * n + 1) as f64;
            d = bn + an * d;
            if d == 0.0 {
                d = tiny;
            }
            c = bn + an / c;
            if c == 0.0 {
                c = tiny;
            }
            d = 1.0 / d;
            let delta = c * d;
            f *= delta;
            if (delta - 1.0).abs() < 1e-16 {
                break;
            }
        }
        1.0 / f
    }
}

/// `π e^x erfc(√x) / √x`, the closed form of J(−1/2, x); for very large x
/// the e^x factor would overflow, so the quadrature fallback takes over.
fn j_base_half(x: f64) -> f64 {
    if x <= 500.0 {
        let s = x.sqrt();
        std::f64::consts::PI * x.exp() * libm::erfc(s) / s
    } else {
        j_fallback(-0.5, x)
    }
}

/// Direct quadrature of J(s, x) after v = u², on panels graded toward the
/// origin so the 1/(x + u²) peak is resolved for small x:
/// J = 2 ∫₀^∞ u^{2s+1} e^{−u²} / (x + u²) du.
fn j_fallback(s: f64, x: f64) -> f64 {
    let rule = legendre_24();
    let mut cuts: Vec<f64> = vec![0.0];
    let mut p = x.sqrt().clamp(1.0 / 64.0, 1.0);
    cuts.push(p);
    while p < 1.0 {
        p = (2.0 * p).min(1.0);
        cuts.push(p);
    }
    let mut q = 1.0_f64;
    while q < 12.0 {
        q += 1.0;
        cuts.push(q);
    }
    let mut total = 0.0;
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b - a < 1e-13 {
            continue;
        }
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut panel = 0.0;
        for (&t, &wt) in rule.nodes.iter().zip(rule.weights.iter()) {
            let u = mid + half * t;
            panel += wt * 2.0 * u.powf(2.0 * s + 1.0) * (-u * u).exp() / (x + u * u);
        }
        total += half * panel;
    }
    total
}

/// The values J(base, x), J(base+1, x), …, J(base+steps, x) by upward
/// recursion with per-step stability monitoring. `base` must be 0 or −1/2.
fn j_chain(base: &HalfInteger, steps: usize, x: f64) -> Vec<f64> {
    let mut vals = Vec::with_capacity(steps + 1);
    let mut v = if base.is_integer() {
        j_base_int(x)
    } else {
        j_base_half(x)
    };
    vals.push(v);
    let mut err = 4.0 * f64::EPSILON * v.abs();
    for t in 1..=steps {
        let s_t = base.plus_int(t as i64);
        let gamma_t = gamma_half(&s_t)
            .expect("recursion arguments are positive")
            .to_f64();
        let prod = x * v;
        let mut next = gamma_t - prod;
        err = x * err + f64::EPSILON * (gamma_t.abs() + prod.abs() + next.abs());
        let cancelled = next.abs() < CANCEL_RATIO * gamma_t.abs().max(prod.abs());
        if cancelled || err > ERROR_BUDGET * next.abs().max(f64::MIN_POSITIVE) {
            next = j_fallback(s_t.to_f64(), x);
            err = 4e-12 * next.abs();
        }
        vals.push(next);
        v = next;
    }
    vals
}

/// J(s, x) for half-integer or integer s ≥ −1/2 and x > 0.
///
/// # Examples
///
/// ```
/// use bures_hall::exact::HalfInteger;
/// use bures_hall::kernels::base_integral_j;
///
/// let j0 = base_integral_j(&HalfInteger::from_int(0), 1.0).unwrap();
/// let j1 = base_integral_j(&HalfInteger::from_int(1), 1.0).unwrap();
/// assert!((j0 - 0.596_347).abs() < 1e-6);
/// assert!((j1 - 0.403_653).abs() < 1e-6);
/// assert!((j0 + j1 - 1.0).abs() < 1e-12); // J(1,x) = Γ(1) − x·J(0,x) at x = 1
/// ```
pub fn base_integral_j(s: &HalfInteger, x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "J(s, x) requires a finite x > 0, got x = {x}"
        )));
    }
    let twice = s.twice();
    if *twice < (-1).into() {
        return Err(Error::Domain(format!(
            "J(s, x) requires s ≥ −1/2, got s = {s}"
        )));
    }
    let (base, steps) = if s.is_integer() {
        let steps: i64 = s.twice().clone().try_into().map_err(|_| {
            Error::Domain(format!("recursion order out of range for s = {s}"))
        })?;
        (HalfInteger::from_int(0), (steps / 2) as usize)
    } else {
        let steps: i64 = (s.twice() + 1i32).try_into().map_err(|_| {
            Error::Domain(format!("recursion order out of range for s = {s}"))
        })?;
        (HalfInteger::from_twice((-1).into()), (steps / 2) as usize)
    };
    Ok(*j_chain(&base, steps, x).last().expect("chain is non-empty"))
}

/// Cached per-parameter data: floating-point polynomial coefficients with
/// the common prefactor folded in, leading-coefficient ratios, and the
/// quadrature node count.
pub struct KernelWorkspace {
    params: EnsembleParams,
    quad_nodes: usize,
    alpha_f64: f64,
    /// J-chain index of J(α, ·) within the half-integer chain from −1/2.
    alpha_base: usize,
    /// Floating coefficients of p_k (prefactor folded in), k = 0..=m+2.
    p_f64: Vec<Vec<f64>>,
    /// Floating coefficients of q_k (prefactor folded in), k = 0..=m+2.
    q_f64: Vec<Vec<f64>>,
    /// ratio[k] = S_{k−1}/S_k as a float (ratio[0] = 0).
    ratio: Vec<f64>,
}

impl KernelWorkspace {
    /// Builds the workspace for `params`, with `quad_nodes` points per
    /// quadrature direction (48 is ample for every integral in this crate).
    pub fn new(params: &EnsembleParams, quad_nodes: usize) -> Result<KernelWorkspace> {
        if quad_nodes < 8 {
            return Err(Error::Validity(format!(
                "quadrature node count must be at least 8, got {quad_nodes}"
            )));
        }
        let m = params.m() as usize;
        let class = PrefactorClass::Sqrt2OverPi.as_quotient();
        let mut p_f64 = Vec::with_capacity(m + 3);
        let mut q_f64 = Vec::with_capacity(m + 3);
        let mut ratio = Vec::with_capacity(m + 3);
        for k in 0..=m + 2 {
            let p = biorth::poly_p(k, params);
            let q = biorth::poly_q(k, params);
            p_f64.push(
                p.rational_part()
                    .coeffs()
                    .iter()
                    .map(|c| class.scale(c).to_f64())
                    .collect(),
            );
            q_f64.push(
                q.rational_part()
                    .coeffs()
                    .iter()
                    .map(|c| class.scale(c).to_f64())
                    .collect(),
            );
            ratio.push(crate::exact::to_f64(&biorth::s_ratio(k, params)));
        }
        let twice_alpha = params.twice_alpha();
        debug_assert!(twice_alpha >= -1);
        Ok(KernelWorkspace {
            params: params.clone(),
            quad_nodes,
            alpha_f64: params.alpha_f64(),
            alpha_base: ((twice_alpha + 1) / 2) as usize,
            p_f64,
            q_f64,
            ratio,
        })
    }

    /// The parameters this workspace was built for.
    pub fn params(&self) -> &EnsembleParams {
        &self.params
    }

    /// Quadrature node count per direction.
    pub fn quad_nodes(&self) -> usize {
        self.quad_nodes
    }

    /// p_k(x) with the full prefactor, 0 ≤ k ≤ m+2.
    pub fn poly_p(&self, k: usize, x: f64) -> f64 {
        horner(&self.p_f64[k], x)
    }

    /// q_k(x) with the full prefactor, 0 ≤ k ≤ m+2.
    pub fn poly_q(&self, k: usize, x: f64) -> f64 {
        horner(&self.q_f64[k], x)
    }

    /// S_{k−1}/S_k as a float (zero for k = 0), 0 ≤ k ≤ m+2.
    pub fn ratio(&self, k: usize) -> f64 {
        self.ratio[k]
    }

    /// Floating coefficients of q_k (prefactor folded in).
    pub(crate) fn q_coeffs_f64(&self, k: usize) -> &[f64] {
        &self.q_f64[k]
    }

    /// J(α + o, x) for o = 0..=max_offset, in one recursion pass.
    fn j_offsets(&self, x: f64, max_offset: usize) -> Vec<f64> {
        let base = HalfInteger::from_twice((-1).into());
        let chain = j_chain(&base, self.alpha_base + max_offset, x);
        chain[self.alpha_base..].to_vec()
    }

    /// ∂ₓJ(α + o, x) for o = 0..=max_offset, via the boundary-free
    /// reduction ∂ₓJ(s, x) = J(s, x) − s·J(s−1, x) (valid for s > 0) and
    /// the closed form ∂ₓJ(−1/2, x) = (1 − 1/(2x))·J(−1/2, x) − √π/x at
    /// the bottom of the half-integer chain.
    fn j_dx_offsets(&self, x: f64, max_offset: usize) -> Vec<f64> {
        let base = HalfInteger::from_twice((-1).into());
        let chain = j_chain(&base, self.alpha_base + max_offset, x);
        (0..=max_offset)
            .map(|o| {
                let idx = self.alpha_base + o;
                if idx == 0 {
                    (1.0 - 0.5 / x) * chain[0] - std::f64::consts::PI.sqrt() / x
                } else {
                    let s = self.alpha_f64 + o as f64;
                    chain[idx] - s * chain[idx - 1]
                }
            })
            .collect()
    }

    /// d/dx [P_k(−x)] from precomputed ∂ₓJ values.
    fn cauchy_p_dx_from(&self, k: usize, jdx: &[f64]) -> f64 {
        -self.p_f64[k]
            .iter()
            .enumerate()
            .map(|(j, c)| c * jdx[j])
            .sum::<f64>()
    }

    /// d/dx [Q_k(−x)] from precomputed ∂ₓJ values.
    fn cauchy_q_dx_from(&self, k: usize, jdx: &[f64]) -> f64 {
        -self.q_f64[k]
            .iter()
            .enumerate()
            .map(|(j, c)| c * jdx[j + 1])
            .sum::<f64>()
    }

    /// P_k(−x) from precomputed J values (js[o] = J(α + o, x)).
    fn cauchy_p_from(&self, k: usize, js: &[f64]) -> f64 {
        -self.p_f64[k]
            .iter()
            .enumerate()
            .map(|(j, c)| c * js[j])
            .sum::<f64>()
    }

    /// Q_k(−x) from precomputed J values (js[o] = J(α + o, x)).
    fn cauchy_q_from(&self, k: usize, js: &[f64]) -> f64 {
        -self.q_f64[k]
            .iter()
            .enumerate()
            .map(|(j, c)| c * js[j + 1])
            .sum::<f64>()
    }
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v <= 0.0 {
        return Err(Error::Domain(format!(
            "{name} must be a finite positive number, got {v}"
        )));
    }
    Ok(())
}

/// The Cauchy transform P_k evaluated at −x (x > 0), 0 ≤ k ≤ m+2.
pub fn cauchy_p(k: usize, x: f64, ws: &KernelWorkspace) -> Result<f64> {
    check_positive("x", x)?;
    let js = ws.j_offsets(x, ws.p_f64[k].len() - 1);
    Ok(ws.cauchy_p_from(k, &js))
}

/// The Cauchy transform Q_k evaluated at −x (x > 0), 0 ≤ k ≤ m+2.
pub fn cauchy_q(k: usize, x: f64, ws: &KernelWorkspace) -> Result<f64> {
    check_positive("x", x)?;
    let js = ws.j_offsets(x, ws.q_f64[k].len());
    Ok(ws.cauchy_q_from(k, &js))
}

/// Relative residual of the transform-side structure relation at −x:
/// writing G_k(x) = P_k(−x) (p-family) or H_k(x) = Q_k(−x) (q-family),
///
/// ```text
/// x·G_k'(x) = (S_{k−1}/S_k)·G_{k−1} − (1 − S_k/S_{k+1} + S_{k−1}/S_k)·G_k
///             − (S_k/S_{k+1})·G_{k+1}
/// x·H_k'(x) = (S_{k−1}/S_k)·H_{k−1} − (S_k/S_{k+1} − S_{k−1}/S_k)·H_k
///             − (S_k/S_{k+1})·H_{k+1}
/// ```
///
/// for 1 ≤ k ≤ m+1. The derivative is evaluated analytically through the
/// J-family (no finite differences), so the residual is quadrature-sharp.
pub fn transform_structure_residual(
    kind: PolyKind,
    k: usize,
    x: f64,
    ws: &KernelWorkspace,
) -> Result<f64> {
    check_positive("x", x)?;
    let m = ws.params.m() as usize;
    if k == 0 || k + 1 > m + 2 {
        return Err(Error::Validity(format!(
            "transform structure relation needs 1 ≤ k ≤ m+1 = {}, got k = {k}",
            m + 1
        )));
    }
    let rm1 = ws.ratio(k);
    let r0 = ws.ratio(k + 1);
    let max_offset = k + 2; // q-side reads J(α + j + 1) up to degree k+1
    let js = ws.j_offsets(x, max_offset);
    let jdx = ws.j_dx_offsets(x, max_offset);
    let (lhs, rhs) = match kind {
        PolyKind::P => {
            let lhs = x * ws.cauchy_p_dx_from(k, &jdx);
            let rhs = rm1 * ws.cauchy_p_from(k - 1, &js)
                - (1.0 - r0 + rm1) * ws.cauchy_p_from(k, &js)
                - r0 * ws.cauchy_p_from(k + 1, &js);
            (lhs, rhs)
        }
        PolyKind::Q => {
            let lhs = x * ws.cauchy_q_dx_from(k, &jdx);
            let rhs = rm1 * ws.cauchy_q_from(k - 1, &js)
                - (r0 - rm1) * ws.cauchy_q_from(k, &js)
                - r0 * ws.cauchy_q_from(k + 1, &js);
            (lhs, rhs)
        }
    };
    Ok((lhs - rhs).abs() / (1.0 + lhs.abs().max(rhs.abs())))
}

/// Relative residual of the transform-side four-term recurrence at −x,
/// with the same neighbour coefficients as the polynomial families:
///
/// ```text
/// −x·(G_{k+1} − G_k) = r_{k,2}G_{k+2} + r_{k,1}G_{k+1} + r_{k,0}G_k + r_{k,−1}G_{k−1}
/// −x·(H_{k+1}/(α+k+2) − H_k/(α+k+1)) = s_{k,2}H_{k+2} + … + s_{k,−1}H_{k−1}
/// ```
///
/// for 1 ≤ k ≤ m (the sign flips relative to the polynomial statement
/// because the transforms are evaluated at negated arguments).
pub fn transform_four_term_residual(
    kind: PolyKind,
    k: usize,
    x: f64,
    ws: &KernelWorkspace,
) -> Result<f64> {
    check_positive("x", x)?;
    let m = ws.params.m() as usize;
    if k == 0 || k + 2 > m + 2 {
        return Err(Error::Validity(format!(
            "transform four-term recurrence needs 1 ≤ k ≤ m = {m}, got k = {k}"
        )));
    }
    let a = ws.alpha_f64;
    let max_offset = k + 3;
    let js = ws.j_offsets(x, max_offset);
    let (lhs, rhs) = match kind {
        PolyKind::P => {
            let r: Vec<f64> = biorth::four_term_r(k, &ws.params)
                .iter()
                .map(crate::exact::to_f64)
                .collect();
            let g = |i: usize| ws.cauchy_p_from(i, &js);
            let lhs = -x * (g(k + 1) - g(k));
            let rhs = r[0] * g(k + 2) + r[1] * g(k + 1) + r[2] * g(k) + r[3] * g(k - 1);
            (lhs, rhs)
        }
        PolyKind::Q => {
            let s: Vec<f64> = biorth::four_term_s(k, &ws.params)
                .iter()
                .map(crate::exact::to_f64)
                .collect();
            let h = |i: usize| ws.cauchy_q_from(i, &js);
            let lhs = -x * (h(k + 1) / (a + k as f64 + 2.0) - h(k) / (a + k as f64 + 1.0));
            let rhs = s[0] * h(k + 2) + s[1] * h(k + 1) + s[2] * h(k) + s[3] * h(k - 1);
            (lhs, rhs)
        }
    };
    Ok((lhs - rhs).abs() / (1.0 + lhs.abs().max(rhs.abs())))
}

/// The four kernel blocks of the one-point correlation structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelBlock {
    /// Σ_{k<m} p_k(x) q_k(y)
    K00,
    /// −x^α e^{−x} Σ_{k<m} p_k(y) Q_k(−x)
    K01,
    /// −y^{α+1} e^{−y} Σ_{k<m} P_k(−y) q_k(x)
    K10,
    /// x^α y^{α+1} e^{−x−y} [Σ_{k<m} P_k(−y) Q_k(−x) − 1/(x+y)]
    K11,
}

/// Evaluates one kernel block at (x, y), x, y > 0.
pub fn kernel_eval(which: KernelBlock, x: f64, y: f64, ws: &KernelWorkspace) -> Result<f64> {
    check_positive("x", x)?;
    check_positive("y", y)?;
    let m = ws.params.m() as usize;
    let a = ws.alpha_f64;
    Ok(match which {
        KernelBlock::K00 => (0..m).map(|k| ws.poly_p(k, x) * ws.poly_q(k, y)).sum(),
        KernelBlock::K01 => {
            let js = ws.j_offsets(x, m);
            let sum: f64 = (0..m)
                .map(|k| ws.poly_p(k, y) * ws.cauchy_q_from(k, &js))
                .sum();
            -x.powf(a) * (-x).exp() * sum
        }
        KernelBlock::K10 => {
            let js = ws.j_offsets(y, m - 1);
            let sum: f64 = (0..m)
                .map(|k| ws.cauchy_p_from(k, &js) * ws.poly_q(k, x))
                .sum();
            -y.powf(a + 1.0) * (-y).exp() * sum
        }
        KernelBlock::K11 => {
            let jx = ws.j_offsets(x, m);
            let jy = ws.j_offsets(y, m - 1);
            let sum: f64 = (0..m)
                .map(|k| ws.cauchy_p_from(k, &jy) * ws.cauchy_q_from(k, &jx))
                .sum();
            x.powf(a) * y.powf(a + 1.0) * (-x - y).exp() * (sum - 1.0 / (x + y))
        }
    })
}

/// The one-point density h₁(x) = (K01(x,x) + K10(x,x)) / (2m); integrates
/// to 1 over (0, ∞).
pub fn density_h1(x: f64, ws: &KernelWorkspace) -> Result<f64> {
    let k01 = kernel_eval(KernelBlock::K01, x, x, ws)?;
    let k10 = kernel_eval(KernelBlock::K10, x, x, ws)?;
    Ok((k01 + k10) / (2.0 * ws.params.m() as f64))
}

/// Which side of each Christoffel–Darboux-type identity carries a Cauchy
/// transform: the first letter is the p-side, the second the q-side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CdKind {
    /// polynomials on both sides
    PolyPoly,
    /// transform on the p-side, polynomial on the q-side
    TransformPoly,
    /// polynomial on the p-side, transform on the q-side
    PolyTransform,
    /// transforms on both sides
    TransformTransform,
}

/// Relative residual of the summed Christoffel–Darboux-type identity at
/// (x, y), x, y > 0. Transform sides are evaluated at negated arguments;
/// the residual is |lhs − rhs| / (1 + max(|lhs|, |rhs|)).
pub fn cd_residual(which: CdKind, x: f64, y: f64, ws: &KernelWorkspace) -> Result<f64> {
    check_positive("x", x)?;
    check_positive("y", y)?;
    let m = ws.params.m() as usize;
    let a = ws.alpha_f64;
    let (p_transform, q_transform) = match which {
        CdKind::PolyPoly => (false, false),
        CdKind::TransformPoly => (true, false),
        CdKind::PolyTransform => (false, true),
        CdKind::TransformTransform => (true, true),
    };
    // A_k = p_k(x) or P_k(−x); the running variable is x or −x accordingly.
    let (avals, xvar) = if p_transform {
        let js = ws.j_offsets(x, m + 1);
        let v: Vec<f64> = (0..=m + 1).map(|k| ws.cauchy_p_from(k, &js)).collect();
        (v, -x)
    } else {
        ((0..=m + 1).map(|k| ws.poly_p(k, x)).collect(), x)
    };
    let (bvals, yvar) = if q_transform {
        let js = ws.j_offsets(y, m + 2);
        let v: Vec<f64> = (0..=m + 1).map(|k| ws.cauchy_q_from(k, &js)).collect();
        (v, -y)
    } else {
        ((0..=m + 1).map(|k| ws.poly_q(k, y)).collect(), y)
    };
    let rm1 = ws.ratio(m);
    let r0 = ws.ratio(m + 1);
    let am1 = a + m as f64 + 1.0;
    let lhs = (xvar + yvar) * (0..m).map(|k| avals[k] * bvals[k]).sum::<f64>();
    let phi_a = rm1 * avals[m - 1] - r0 * avals[m + 1] + xvar * avals[m]
        - (am1 - r0 + rm1) * avals[m];
    let phi_b = rm1 * bvals[m - 1] - r0 * bvals[m + 1] + yvar * bvals[m]
        - (am1 + r0 - rm1) * bvals[m];
    let constant = if which == CdKind::TransformTransform {
        -1.0
    } else {
        0.0
    };
    let rhs = constant
        + phi_a * phi_b / (2.0 * am1)
        + rm1 * (avals[m] * bvals[m - 1] + avals[m - 1] * bvals[m]);
    Ok((lhs - rhs).abs() / (1.0 + lhs.abs().max(rhs.abs())))
}

/// Which closed derivative formula to check against finite differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivKind {
    /// d/dx [x·K01(x,x)]
    K01,
    /// d/dx [x·K10(x,x)]
    K10,
    /// d/dx [x·(K01+K10)(x,x)] in fully recentred form
    OnePoint,
}

fn fd5<F: FnMut(f64) -> f64>(mut f: F, x: f64) -> f64 {
    let h = 1e-5_f64.max(1e-5 * x);
    (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
}

/// Relative residual between a five-point finite-difference derivative and
/// the closed derivative formula at x > 0.
pub fn deriv_residual(which: DerivKind, x: f64, ws: &KernelWorkspace) -> Result<f64> {
    check_positive("x", x)?;
    let h = 1e-5_f64.max(1e-5 * x);
    if x <= 2.0 * h {
        return Err(Error::Domain(format!(
            "derivative check needs x > {}, got {x}",
            2.0 * h
        )));
    }
    let m = ws.params.m() as usize;
    let a = ws.alpha_f64;
    let rm1 = ws.ratio(m);
    let weight = x.powf(a) * (-x).exp();
    let closed = match which {
        DerivKind::K01 => {
            let js = ws.j_offsets(x, m + 1);
            rm1 * weight
                * (ws.poly_p(m, x) * ws.cauchy_q_from(m - 1, &js)
                    + ws.poly_p(m - 1, x) * ws.cauchy_q_from(m, &js))
        }
        DerivKind::K10 => {
            let js = ws.j_offsets(x, m);
            rm1 * weight
                * x
                * (ws.cauchy_p_from(m, &js) * ws.poly_q(m - 1, x)
                    + ws.cauchy_p_from(m - 1, &js) * ws.poly_q(m, x))
        }
        DerivKind::OnePoint => {
            let js = ws.j_offsets(x, m + 2);
            let q = |k: usize| ws.poly_q(k, x);
            let cq = |k: usize| ws.cauchy_q_from(k, &js);
            let af = |i: usize| crate::exact::to_f64(&coeff_a(i, &ws.params));
            let mut bracket = af(2) * (q(m - 1) * cq(m) - q(m) * cq(m - 1))
                + af(3) * (q(m + 1) * cq(m) - q(m) * cq(m + 1))
                - x * (af(4) * q(m - 1) * cq(m - 1) + af(5) * q(m) * cq(m));
            if m >= 2 {
                bracket += af(1) * (q(m - 1) * cq(m - 2) - q(m - 2) * cq(m - 1));
            }
            -weight * bracket
        }
    };
    let fd = match which {
        DerivKind::K01 => fd5(
            |t| t * kernel_eval(KernelBlock::K01, t, t, ws).expect("t > 0"),
            x,
        ),
        DerivKind::K10 => fd5(
            |t| t * kernel_eval(KernelBlock::K10, t, t, ws).expect("t > 0"),
            x,
        ),
        DerivKind::OnePoint => fd5(
            |t| {
                t * (kernel_eval(KernelBlock::K01, t, t, ws).expect("t > 0")
                    + kernel_eval(KernelBlock::K10, t, t, ws).expect("t > 0"))
            },
            x,
        ),
    };
    Ok((fd - closed).abs() / (1.0 + closed.abs()))
}

/// ∫∫ p_k(x) q_l(y) x^α y^{α+1} e^{−x−y} / (x+y) dx dy, numerically. The
/// exact value is δ_{kl}; indices up to m+2 are available.
pub fn weighted_inner(k: usize, l: usize, ws: &KernelWorkspace) -> f64 {
    let a = ws.alpha_f64;
    let rule = SimplexWeightRule::new(a, a + 1.0, 1.0, ws.quad_nodes, ws.quad_nodes);
    rule.integrate(|x, y| ws.poly_p(k, x) * ws.poly_q(l, y))
}

/// Which variable carries the extra weight factor in a squared-singularity
/// integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// ∫∫ t·p_a(x) q_b(y) x^α y^{α+1} e^{−x−y} / (x+y)² dx dy with t = x or
/// t = y according to `axis`, numerically.
pub fn square_weight_integral(axis: Axis, a_idx: usize, b_idx: usize, ws: &KernelWorkspace) -> f64 {
    let a = ws.alpha_f64;
    let rule = match axis {
        Axis::X => SimplexWeightRule::new(a + 1.0, a + 1.0, 2.0, ws.quad_nodes, ws.quad_nodes),
        Axis::Y => SimplexWeightRule::new(a, a + 2.0, 2.0, ws.quad_nodes, ws.quad_nodes),
    };
    rule.integrate(|x, y| ws.poly_p(a_idx, x) * ws.poly_q(b_idx, y))
}

/// The exact value of [`square_weight_integral`]: a tridiagonal band in
/// (a_idx, b_idx) built from leading-coefficient ratios.
pub fn square_weight_reference(
    axis: Axis,
    a_idx: usize,
    b_idx: usize,
    params: &EnsembleParams,
) -> crate::exact::ExactRational {
    use crate::exact::rat_int;
    let lower = biorth::s_ratio(a_idx, params); // S_{a−1}/S_a  (0 when a_idx = 0)
    let upper = biorth::s_ratio(a_idx + 1, params); // S_a/S_{a+1}
    match axis {
        Axis::X => {
            if b_idx == a_idx + 1 {
                -upper
            } else if b_idx == a_idx {
                upper - lower
            } else if a_idx >= 1 && b_idx == a_idx - 1 {
                lower
            } else {
                rat_int(0)
            }
        }
        Axis::Y => {
            if b_idx == a_idx + 1 {
                upper
            } else if b_idx == a_idx {
                lower - upper + rat_int(1)
            } else if a_idx >= 1 && b_idx == a_idx - 1 {
                -lower
            } else {
                rat_int(0)
            }
        }
    }
}

/// κ(R_k) = m ∫ x^k h₁(x) dx for real k > −(α+1), by exact-to-rounding
/// two-variable quadrature of both off-diagonal kernel blocks.
pub fn density_moment(k: f64, ws: &KernelWorkspace) -> Result<f64> {
    let a = ws.alpha_f64;
    if !k.is_finite() || k <= -(a + 1.0) {
        return Err(Error::Domain(format!(
            "moment exponent must exceed −(α+1) = {}, got {k}",
            -(a + 1.0)
        )));
    }
    let m = ws.params.m() as usize;
    // ∫ x^k K01(x,x) dx: weight x^{k+α} y^{α+1} e^{−x−y}/(x+y) against
    // Σ_{j<m} p_j(x) q_j(y); the q-side Cauchy transform sign cancels the
    // leading minus of K01.
    let rule01 = SimplexWeightRule::new(k + a, a + 1.0, 1.0, ws.quad_nodes, ws.quad_nodes);
    let i01 = rule01.integrate(|x, y| {
        (0..m).map(|j| ws.poly_p(j, x) * ws.poly_q(j, y)).sum::<f64>()
    });
    // ∫ x^k K10(x,x) dx: the polynomial factor q_j rides on x here.
    let rule10 = SimplexWeightRule::new(k + a + 1.0, a, 1.0, ws.quad_nodes, ws.quad_nodes);
    let i10 = rule10.integrate(|x, y| {
        (0..m).map(|j| ws.poly_q(j, x) * ws.poly_p(j, y)).sum::<f64>()
    });
    Ok(0.5 * (i01 + i10))
}

/// Exact ∫∫ x^a y^b e^{−x−y} / (x+y)^r dx dy for half-integer exponents,
/// as a Gamma quotient: Γ(a+b+2−r) Γ(a+1) Γ(b+1) / Γ(a+b+2).
pub fn monomial_simplex_integral(
    a: &HalfInteger,
    b: &HalfInteger,
    r: i64,
) -> Result<GammaQuotient> {
    let sum2 = HalfInteger::from_twice(a.twice() + b.twice()).plus_int(2);
    gamma_quotient(
        &[sum2.plus_int(-r), a.plus_int(1), b.plus_int(1)],
        &[sum2],
    )
}

/// Floating-point counterpart of [`monomial_simplex_integral`] for real
/// exponents.
pub fn monomial_simplex_integral_f64(a: f64, b: f64, r: f64) -> f64 {
    libm::tgamma(a + b + 2.0 - r) * libm::tgamma(a + 1.0) * libm::tgamma(b + 1.0)
        / libm::tgamma(a + b + 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_int, to_f64, ExactRational};
    use num_traits::Zero;

    fn half(twice: i64) -> HalfInteger {
        HalfInteger::from_twice(twice.into())
    }

    #[test]
    fn j_closed_form_examples() {
        // e·E₁(1) and its one-step recursion partner.
        let j0 = base_integral_j(&half(0), 1.0).unwrap();
        let j1 = base_integral_j(&half(2), 1.0).unwrap();
        assert!((j0 - 0.596_347_362_323_194).abs() < 1e-13, "J(0,1) = {j0}");
        assert!((j1 - 0.403_652_637_676_806).abs() < 1e-13, "J(1,1) = {j1}");
        // π e erfc(1): the half-integer base.
        let jh = base_integral_j(&half(-1), 1.0).unwrap();
        let expect = std::f64::consts::PI * std::f64::consts::E * libm::erfc(1.0);
        assert!((jh - expect).abs() < 1e-13 * expect, "J(−1/2,1) = {jh}");
    }

    #[test]
    fn j_matches_direct_quadrature() {
        // Both parities, s up to 21/2, x across [1e−3, 50].
        for twice_s in [-1i64, 0, 1, 2, 3, 5, 8, 12, 15, 21] {
            let s = half(twice_s);
            for &x in &[1e-3, 1e-2, 0.1, 0.5, 1.0, 3.0, 10.0, 25.0, 50.0] {
                let chain = base_integral_j(&s, x).unwrap();
                let direct = j_fallback(s.to_f64(), x);
                let rel = (chain - direct).abs() / direct.abs();
                assert!(rel < 1e-10, "s={s} x={x}: chain {chain} vs direct {direct}");
            }
        }
    }

    #[test]
    fn j_detector_handoff_is_seamless() {
        // At large x the upward recursion cancels heavily and must hand
        // over to the fallback without a visible seam.
        for &x in &[150.0, 300.0, 450.0, 600.0] {
            for twice_s in [-1i64, 0, 5, 12] {
                let s = half(twice_s);
                let chain = base_integral_j(&s, x).unwrap();
                let direct = j_fallback(s.to_f64(), x);
                let rel = (chain - direct).abs() / direct.abs();
                assert!(rel < 1e-9, "s={s} x={x}: chain {chain} vs direct {direct}");
            }
        }
    }

    #[test]
    fn j_rejects_bad_arguments() {
        assert!(base_integral_j(&half(0), 0.0).is_err());
        assert!(base_integral_j(&half(0), -1.0).is_err());
        assert!(base_integral_j(&half(-2), 1.0).is_err());
    }

    #[test]
    fn biorthogonality_exact_via_gamma_quotients() {
        // Σ_{i,j} pc_k[i] qc_l[j] · (2/π) · ∫∫ x^{α+i} y^{α+1+j} e^{−x−y}/(x+y)
        // collapses to δ_{kl} in exact arithmetic.
        for (m, n) in [(2u32, 2u32), (3, 5)] {
            let params = EnsembleParams::new(m, n).unwrap();
            let class2 = PrefactorClass::Sqrt2OverPi
                .as_quotient()
                .mul(&PrefactorClass::Sqrt2OverPi.as_quotient());
            let alpha = params.alpha();
            for k in 0..=(m as usize + 1) {
                let pc = biorth::poly_p(k, &params);
                for l in 0..=(m as usize + 1) {
                    let qc = biorth::poly_q(l, &params);
                    let mut total = ExactRational::zero();
                    for (i, ci) in pc.rational_part().coeffs().iter().enumerate() {
                        for (j, cj) in qc.rational_part().coeffs().iter().enumerate() {
                            let ii = monomial_simplex_integral(
                                &alpha.plus_int(i as i64),
                                &alpha.plus_int(j as i64 + 1),
                                1,
                            )
                            .unwrap();
                            let term = class2.scale(&(ci * cj)).mul(&ii);
                            total += term
                                .as_rational()
                                .expect("π and √2 powers cancel")
                                .clone();
                        }
                    }
                    let expect = rat_int(i64::from(k == l));
                    assert_eq!(total, expect, "(m,n)=({m},{n}) k={k} l={l}");
                }
            }
        }
    }

    #[test]
    fn weighted_inner_reproduces_kronecker_delta() {
        for (m, n) in [(2u32, 3u32), (3, 3)] {
            let params = EnsembleParams::new(m, n).unwrap();
            let ws = KernelWorkspace::new(&params, 48).unwrap();
            for k in 0..=(m as usize + 1) {
                for l in 0..=(m as usize + 1) {
                    let v = weighted_inner(k, l, &ws);
                    let expect = f64::from(k == l);
                    assert!(
                        (v - expect).abs() < 1e-10,
                        "(m,n)=({m},{n}) k={k} l={l}: {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn square_weight_integrals_match_band_table() {
        for (m, n) in [(2u32, 4u32), (3, 3)] {
            let params = EnsembleParams::new(m, n).unwrap();
            let ws = KernelWorkspace::new(&params, 48).unwrap();
            for axis in [Axis::X, Axis::Y] {
                for a_idx in 0..=(m as usize) {
                    for b_idx in 0..=(m as usize + 1) {
                        let num = square_weight_integral(axis, a_idx, b_idx, &ws);
                        let exact =
                            to_f64(&square_weight_reference(axis, a_idx, b_idx, &params));
                        assert!(
                            (num - exact).abs() < 1e-10,
                            "(m,n)=({m},{n}) {axis:?} a={a_idx} b={b_idx}: {num} vs {exact}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn density_normalization_and_first_moment() {
        // ∫h₁ = 1 and m·∫x·h₁ = m(2α+m+1)/2 = κ(R₁).
        for (m, n) in [(1u32, 2u32), (2, 3), (2, 2), (3, 5), (4, 4)] {
            let params = EnsembleParams::new(m, n).unwrap();
            let ws = KernelWorkspace::new(&params, 48).unwrap();
            let mass = density_moment(0.0, &ws).unwrap();
            assert!(
                (mass - m as f64).abs() < 1e-10 * m as f64,
                "(m,n)=({m},{n}): mass {mass}"
            );
            let r1 = density_moment(1.0, &ws).unwrap();
            let expect = m as f64 * (2.0 * params.alpha_f64() + m as f64 + 1.0) / 2.0;
            assert!(
                (r1 - expect).abs() < 1e-10 * expect,
                "(m,n)=({m},{n}): κ(R₁) {r1} vs {expect}"
            );
        }
    }

    #[test]
    fn density_pointwise_consistency() {
        // h₁ from the kernel blocks is nonnegative and integrates against a
        // plain grid consistently with the quadrature moment at (2,3):
        // κ(R₂) = 15 there.
        let params = EnsembleParams::new(2, 3).unwrap();
        let ws = KernelWorkspace::new(&params, 48).unwrap();
        for &x in &[0.05, 0.3, 1.0, 2.5, 6.0, 12.0] {
            let h = density_h1(x, &ws).unwrap();
            assert!(h > -1e-12, "h₁({x}) = {h}");
        }
        let r2 = density_moment(2.0, &ws).unwrap();
        assert!((r2 - 15.0).abs() < 1e-9, "κ(R₂) = {r2}");
    }

    #[test]
    fn cd_residuals_vanish_at_sample_points() {
        let points = [
            (0.17, 2.9),
            (1.0, 1.0),
            (3.6, 0.42),
            (0.05, 0.08),
            (7.5, 4.1),
        ];
        for (m, n) in [(2u32, 3u32), (3, 3), (1, 4)] {
            let params = EnsembleParams::new(m, n).unwrap();
            let ws = KernelWorkspace::new(&params, 32).unwrap();
            for kind in [
                CdKind::PolyPoly,
                CdKind::TransformPoly,
                CdKind::PolyTransform,
                CdKind::TransformTransform,
            ] {
                for &(x, y) in &points {
                    let r = cd_residual(kind, x, y, &ws).unwrap();
                    assert!(r < 1e-8, "(m,n)=({m},{n}) {kind:?} at ({x},{y}): {r}");
                }
            }
        }
    }

    #[test]
    fn derivative_formulas_match_finite_differences() {
        for (m, n) in [(2u32, 3u32), (3, 3), (1, 2)] {
            let params = EnsembleParams::new(m, n).unwrap();
            let ws = KernelWorkspace::new(&params, 32).unwrap();
            for kind in [DerivKind::K01, DerivKind::K10, DerivKind::OnePoint] {
                for &x in &[0.2, 0.9, 2.2, 5.5] {
                    let r = deriv_residual(kind, x, &ws).unwrap();
                    assert!(r < 1e-6, "(m,n)=({m},{n}) {kind:?} at x={x}: {r}");
                }
            }
        }
    }

    #[test]
    fn transform_derivative_matches_finite_differences() {
        // The analytic ∂ₓJ reduction behind the transform structure
        // relation, cross-checked against a 5-point stencil on P_k(−x).
        for (m, n) in [(2u32, 3u32), (3, 3)] {
            let params = EnsembleParams::new(m, n).unwrap();
            let ws = KernelWorkspace::new(&params, 32).unwrap();
            for k in 0..=(m as usize + 1) {
                for &x in &[0.4, 1.3, 6.0] {
                    let jdx = ws.j_dx_offsets(x, k + 2);
                    let h = 1e-5 * x.max(1.0);
                    for (analytic, fd) in [
                        (ws.cauchy_p_dx_from(k, &jdx), {
                            let f = |t: f64| cauchy_p(k, t, &ws).unwrap();
                            (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h)
                                - f(x + 2.0 * h))
                                / (12.0 * h)
                        }),
                        (ws.cauchy_q_dx_from(k, &jdx), {
                            let f = |t: f64| cauchy_q(k, t, &ws).unwrap();
                            (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h)
                                - f(x + 2.0 * h))
                                / (12.0 * h)
                        }),
                    ] {
                        // The stencil side carries noise ~ ε(P)/h, so the
                        // comparison is held to stencil accuracy only.
                        let rel = (analytic - fd).abs() / (1.0 + analytic.abs());
                        assert!(
                            rel < 1e-6,
                            "(m,n)=({m},{n}) k={k} x={x}: analytic {analytic} vs fd {fd}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn transform_identities_hold() {
        for (m, n) in [(2u32, 2u32), (2, 3), (3, 5)] {
            let params = EnsembleParams::new(m, n).unwrap();
            let ws = KernelWorkspace::new(&params, 32).unwrap();
            // Residual noise grows with the index through the alternating
            // coefficient sums; 1e−8 holds with margin through k = m+1.
            for kind in [PolyKind::P, PolyKind::Q] {
                for k in 1..=(m as usize + 1) {
                    for &x in &[0.3, 2.0, 9.0] {
                        let r = transform_structure_residual(kind, k, x, &ws).unwrap();
                        assert!(r < 1e-8, "structure (m,n)=({m},{n}) {kind:?} k={k} x={x}: {r}");
                    }
                }
                for k in 1..=(m as usize) {
                    for &x in &[0.3, 2.0, 9.0] {
                        let r = transform_four_term_residual(kind, k, x, &ws).unwrap();
                        assert!(r < 1e-8, "four-term (m,n)=({m},{n}) {kind:?} k={k} x={x}: {r}");
                    }
                }
            }
        }
    }

    #[test]
    fn transform_identities_reject_out_of_range_indices() {
        let params = EnsembleParams::new(2, 4).unwrap();
        let ws = KernelWorkspace::new(&params, 16).unwrap();
        assert!(transform_structure_residual(PolyKind::P, 0, 1.0, &ws).is_err());
        assert!(transform_structure_residual(PolyKind::P, 4, 1.0, &ws).is_err());
        assert!(transform_four_term_residual(PolyKind::Q, 3, 1.0, &ws).is_err());
        assert!(transform_four_term_residual(PolyKind::Q, 1, -2.0, &ws).is_err());
    }
}
