//! Gaussian quadrature rules and the two-variable integrator used for every
//! weight of the form `x^A y^B e^{−x−y}/(x+y)^r`.
//!
//! All rules are built by the Golub–Welsch method: the nodes are the
//! eigenvalues of the symmetric tridiagonal Jacobi matrix of the weight's
//! orthogonal polynomials and the weights come from the first components of
//! its eigenvectors. The eigensolver is a self-contained implicit-shift QL
//! iteration, because the rules are needed for real (not just half-integer)
//! exponents and at orders in the hundreds, where naive root-finding for
//! generalized Laguerre polynomials overflows.
//!
//! The two-variable weights with a `1/(x+y)^r` factor are handled by the
//! substitution `(x, y) = (s·u, s·(1−u))`, which factorizes the integral
//! into a generalized Gauss–Laguerre integral in `s` and a Gauss–Jacobi
//! integral in `u`:
//!
//! ```text
//! ∫∫ F(x,y) x^A y^B e^{−x−y}/(x+y)^r dx dy
//!   = ∫₀^∞ s^{A+B+1−r} e^{−s} ∫₀¹ u^A (1−u)^B F(su, s(1−u)) du ds
//! ```
//!
//! For polynomial `F` both factors are integrated exactly (to rounding) by
//! modest-order rules; a naive tensor product over the unsubstituted
//! variables converges only like N^{−(2α+2)} because of the non-smooth
//! `1/(x+y)` diagonal, which is why it is not used anywhere in this crate.

/// Which classical weight a [`QuadratureRule`] integrates against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    /// `x^a e^{−x}` on `[0, ∞)`.
    GaussLaguerre,
    /// `(1−t)^a (1+t)^b` on `[−1, 1]`.
    GaussJacobi,
    /// Constant weight on `[−1, 1]` (the a = b = 0 Jacobi case).
    GaussLegendre,
}

/// Nodes and weights of a Gaussian rule; integrates polynomials of degree
/// `≤ 2·len − 1` against its weight exactly to rounding.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    /// Quadrature nodes, ascending.
    pub nodes: Vec<f64>,
    /// Positive quadrature weights.
    pub weights: Vec<f64>,
    /// The weight family this rule belongs to.
    pub kind: RuleKind,
}

impl QuadratureRule {
    /// Applies the rule to `f`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Symmetric tridiagonal eigensolver (implicit-shift QL) that tracks only
/// the first row of the eigenvector matrix, which is all Golub–Welsch
/// needs. `diag` holds the diagonal, `off[i]` couples entries i and i+1.
/// Returns `(eigenvalues, first_components)` sorted by eigenvalue.
fn tridiagonal_eigen_first_row(diag: &[f64], off: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = diag.len();
    let mut d = diag.to_vec();
    let mut e = vec![0.0; n];
    e[..n - 1].copy_from_slice(off);
    let mut z = vec![0.0; n];
    z[0] = 1.0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            // Find the first negligible off-diagonal at or after l.
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter <= 60, "QL iteration failed to converge");
            // Implicit shift from the 2×2 block at l.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c) = (1.0_f64, 1.0_f64);
            let mut p = 0.0;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let fz = z[i + 1];
                z[i + 1] = s * z[i] + c * fz;
                z[i] = c * z[i] - s * fz;
            }
            if r == 0.0 && i > l {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    let eigenvalues = order.iter().map(|&i| d[i]).collect();
    let first = order.iter().map(|&i| z[i]).collect();
    (eigenvalues, first)
}

/// Γ(x) for the positive real arguments quadrature normalization needs.
fn gamma_f64(x: f64) -> f64 {
    libm::tgamma(x)
}

/// Generalized Gauss–Laguerre rule: integrates against `x^a e^{−x}` on
/// `[0, ∞)`. Requires `a > −1`.
pub fn gauss_laguerre(order: usize, a: f64) -> QuadratureRule {
    assert!(order >= 1, "rule order must be positive");
    assert!(a > -1.0, "Laguerre exponent must exceed −1, got {}", a);
    let diag: Vec<f64> = (0..order).map(|i| 2.0 * i as f64 + a + 1.0).collect();
    let off: Vec<f64> = (1..order)
        .map(|i| {
            let i = i as f64;
            (i * (i + a)).sqrt()
        })
        .collect();
    let mu0 = gamma_f64(a + 1.0);
    let (nodes, first) = tridiagonal_eigen_first_row(&diag, &off);
    let weights = first.iter().map(|&v| mu0 * v * v).collect();
    QuadratureRule {
        nodes,
        weights,
        kind: RuleKind::GaussLaguerre,
    }
}

/// Gauss–Jacobi rule: integrates against `(1−t)^a (1+t)^b` on `[−1, 1]`.
/// Requires `a, b > −1`.
pub fn gauss_jacobi(order: usize, a: f64, b: f64) -> QuadratureRule {
    assert!(order >= 1, "rule order must be positive");
    assert!(a > -1.0 && b > -1.0, "Jacobi exponents must exceed −1");
    let ab = a + b;
    let mut diag = Vec::with_capacity(order);
    let mut off = Vec::with_capacity(order.saturating_sub(1));
    diag.push((b - a) / (ab + 2.0));
    for i in 1..order {
        let i = i as f64;
        let den = (2.0 * i + ab) * (2.0 * i + ab + 2.0);
        diag.push((b * b - a * a) / den);
        // β_i; the i = 1 case cancels the (i+a+b) factor against the
        // three-term denominator to avoid 0/0 at a+b = 0.
        let beta = if i == 1.0 {
            4.0 * (1.0 + a) * (1.0 + b) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0))
        } else {
            4.0 * i * (i + a) * (i + b) * (i + ab)
                / ((2.0 * i + ab) * (2.0 * i + ab) * (2.0 * i + ab + 1.0) * (2.0 * i + ab - 1.0))
        };
        off.push(beta.sqrt());
    }
    let mu0 = libm::exp2(ab + 1.0) * gamma_f64(a + 1.0) * gamma_f64(b + 1.0) / gamma_f64(ab + 2.0);
    let (nodes, first) = tridiagonal_eigen_first_row(&diag, &off);
    let weights = first.iter().map(|&v| mu0 * v * v).collect();
    QuadratureRule {
        nodes,
        weights,
        kind: RuleKind::GaussJacobi,
    }
}

/// Gauss–Legendre rule on `[−1, 1]`.
pub fn gauss_legendre(order: usize) -> QuadratureRule {
    assert!(order >= 1, "rule order must be positive");
    let diag = vec![0.0; order];
    let off: Vec<f64> = (1..order)
        .map(|i| {
            let i = i as f64;
            i / (4.0 * i * i - 1.0).sqrt()
        })
        .collect();
    let (nodes, first) = tridiagonal_eigen_first_row(&diag, &off);
    let weights = first.iter().map(|&v| 2.0 * v * v).collect();
    QuadratureRule {
        nodes,
        weights,
        kind: RuleKind::GaussLegendre,
    }
}

/// A double-exponential (tanh-sinh) rule on `(0, 1)`.
///
/// Each node is stored as the pair `(u, 1−u)` with both halves computed
/// from the exponential form directly, so integrands can use the distance
/// to either endpoint without catastrophic cancellation. The rule
/// converges geometrically for any integrable endpoint singularity —
/// algebraic `u^α` with `α > −1`, logarithms, and their products — which
/// Gaussian rules only handle when the singular factors match their
/// weight exactly.
#[derive(Debug, Clone)]
pub struct TanhSinhRule {
    /// Nodes as `(u, 1−u)` pairs.
    pub points: Vec<(f64, f64)>,
    /// Weights `du/dj · h`.
    pub weights: Vec<f64>,
}

impl TanhSinhRule {
    /// ∫₀¹ f(u, 1−u) du for integrands taking the split endpoint distances.
    pub fn integrate<F: FnMut(f64, f64) -> f64>(&self, mut f: F) -> f64 {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(&(u, v), &w)| w * f(u, v))
            .sum()
    }
}

/// Builds a tanh-sinh rule with roughly `points` nodes.
///
/// The map is `u = 1/(1 + e^{−2w})`, `w = (π/2)·sinh(jh)`, truncated at
/// `w = 40` where the remaining tail mass is below `e^{−40}` even against
/// a `u^{−1/2}`-type singularity; the step `h` is chosen so the truncation
/// happens at `j ≈ points/2`.
pub fn tanh_sinh_unit(points: usize) -> TanhSinhRule {
    assert!(points >= 16, "tanh-sinh rule needs at least 16 points");
    const MAX_W: f64 = 40.0;
    let half_points = (points / 2) as f64;
    let h = libm::asinh(2.0 * MAX_W / core::f64::consts::PI) / half_points;
    let mut pts = Vec::with_capacity(points + 1);
    let mut wts = Vec::with_capacity(points + 1);
    let mut j = 0u32;
    loop {
        let arg = f64::from(j) * h;
        let w = 0.5 * core::f64::consts::PI * libm::sinh(arg);
        if w > MAX_W {
            break;
        }
        let dw = 0.5 * core::f64::consts::PI * libm::cosh(arg) * h;
        let e = libm::exp(-2.0 * w);
        let lo = e / (1.0 + e);
        let hi = 1.0 / (1.0 + e);
        let weight = 2.0 * hi * lo * dw;
        pts.push((hi, lo));
        wts.push(weight);
        if j > 0 {
            pts.push((lo, hi));
            wts.push(weight);
        }
        j += 1;
    }
    TanhSinhRule {
        points: pts,
        weights: wts,
    }
}

/// Two-variable integrator for `∫∫ F(x,y) x^A y^B e^{−x−y}/(x+y)^r dx dy`
/// built on the `(x, y) = (su, s(1−u))` substitution.
///
/// Exact to rounding when `F` is a polynomial of degree below the rule
/// orders; requires `A, B > −1` and `A + B + 2 − r > 0`.
#[derive(Debug, Clone)]
pub struct SimplexWeightRule {
    outer: QuadratureRule,
    /// Inner nodes mapped to `u ∈ (0, 1)` with folded weights.
    inner_u: Vec<f64>,
    inner_w: Vec<f64>,
}

impl SimplexWeightRule {
    /// Builds the rule for exponents `A`, `B` and singularity power `r`,
    /// with `n_outer` radial and `n_inner` angular nodes.
    pub fn new(exp_x: f64, exp_y: f64, r: f64, n_outer: usize, n_inner: usize) -> Self {
        let outer_exp = exp_x + exp_y + 1.0 - r;
        assert!(
            outer_exp > -1.0,
            "combined radial exponent {} not integrable",
            outer_exp
        );
        let outer = gauss_laguerre(n_outer, outer_exp);
        // u^A (1−u)^B du with u = (1+t)/2: Jacobi weight (1−t)^B (1+t)^A,
        // folded scale 2^{−(A+B+1)}.
        let jac = gauss_jacobi(n_inner, exp_y, exp_x);
        let scale = libm::exp2(-(exp_x + exp_y + 1.0));
        let inner_u = jac.nodes.iter().map(|&t| 0.5 * (1.0 + t)).collect();
        let inner_w = jac.weights.iter().map(|&w| w * scale).collect();
        SimplexWeightRule {
            outer,
            inner_u,
            inner_w,
        }
    }

    /// Integrates `F` against the full two-variable weight.
    pub fn integrate<F: FnMut(f64, f64) -> f64>(&self, mut f: F) -> f64 {
        let mut total = 0.0;
        for (&s, &ws) in self.outer.nodes.iter().zip(&self.outer.weights) {
            let mut inner = 0.0;
            for (&u, &wu) in self.inner_u.iter().zip(&self.inner_w) {
                inner += wu * f(s * u, s * (1.0 - u));
            }
            total += ws * inner;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gamma_quotient, HalfInteger};

    fn gamma_half_f64(twice: i64) -> f64 {
        gamma_quotient(&[HalfInteger::from_twice(twice.into())], &[])
            .unwrap()
            .to_f64()
    }

    #[test]
    fn laguerre_moments_are_exact() {
        // ∫ x^{α+j} e^{−x} dx = Γ(α+j+1) for α = −1/2 and α = 3/2.
        for &twice_alpha in &[-1i64, 3] {
            let a = twice_alpha as f64 / 2.0;
            let rule = gauss_laguerre(24, a);
            for j in 0..20i64 {
                let exact = gamma_half_f64(twice_alpha + 2 * j + 2);
                let approx = rule.integrate(|x| x.powi(j as i32));
                assert!(
                    (approx - exact).abs() <= 1e-12 * exact.abs(),
                    "moment j={} α={}: {} vs {}",
                    j,
                    a,
                    approx,
                    exact
                );
            }
        }
    }

    #[test]
    fn laguerre_large_order_is_stable() {
        let rule = gauss_laguerre(420, 0.5);
        // Far-tail weights may underflow to zero; none may go negative.
        assert!(rule.weights.iter().all(|&w| w >= 0.0));
        let total: f64 = rule.weights.iter().sum();
        let exact = gamma_half_f64(3); // Γ(3/2)
        assert!((total - exact).abs() < 1e-12 * exact);
    }

    #[test]
    fn jacobi_moments_are_exact() {
        // ∫_{−1}^1 (1−t)^a (1+t)^b t^j dt against exact beta-moment values,
        // including the a+b = 0 corner case (a = 1/2, b = −1/2).
        for &(ta, tb) in &[(1i64, -1i64), (3, 1), (1, 5)] {
            let (a, b) = (ta as f64 / 2.0, tb as f64 / 2.0);
            let rule = gauss_jacobi(16, a, b);
            for j in 0..10u32 {
                // Exact via u-substitution: ∫ = 2^{a+b+1} ∫₀¹ (1−u)^a u^b (2u−1)^j du,
                // expanded binomially into beta functions.
                let mut exact = 0.0;
                for i in 0..=j {
                    let binom = (0..i).fold(1.0, |acc, t| {
                        acc * (j - t) as f64 / (t + 1) as f64
                    });
                    // ∫₀¹ u^{b+i}(1−u)^a du = Γ(b+i+1)Γ(a+1)/Γ(a+b+i+2)
                    let beta = gamma_half_f64(tb + 2 * i as i64 + 2) * gamma_half_f64(ta + 2)
                        / gamma_half_f64(ta + tb + 2 * i as i64 + 4);
                    exact += binom * 2.0f64.powi(i as i32) * (-1.0f64).powi((j - i) as i32) * beta;
                }
                exact *= libm::exp2(a + b + 1.0);
                let approx = rule.integrate(|t| t.powi(j as i32));
                assert!(
                    (approx - exact).abs() <= 5e-13 * (1.0 + exact.abs()),
                    "jacobi moment j={} (a,b)=({},{}): {} vs {}",
                    j,
                    a,
                    b,
                    approx,
                    exact
                );
            }
        }
    }

    #[test]
    fn legendre_rule_integrates_polynomials() {
        let rule = gauss_legendre(24);
        assert!((rule.integrate(|_| 1.0) - 2.0).abs() < 1e-14);
        assert!((rule.integrate(|t| t * t) - 2.0 / 3.0).abs() < 1e-14);
        assert!(rule.integrate(|t| t.powi(7)).abs() < 1e-14);
        // degree 46 still exact with 24 nodes
        assert!((rule.integrate(|t| t.powi(46)) - 2.0 / 47.0).abs() < 1e-14);
    }

    #[test]
    fn tanh_sinh_handles_endpoint_singularities() {
        let rule = tanh_sinh_unit(160);
        // ∫₀¹ du = 1 (smooth baseline)
        assert!((rule.integrate(|_, _| 1.0) - 1.0).abs() < 1e-13);
        // ∫₀¹ u^{−1/2}(1−u)^{−1/2} du = π
        let i = rule.integrate(|u, v| 1.0 / (u * v).sqrt());
        assert!((i - core::f64::consts::PI).abs() < 1e-12, "{i}");
        // ∫₀¹ ln u du = −1
        assert!((rule.integrate(|u, _| u.ln()) + 1.0).abs() < 1e-13);
        // ∫₀¹ u^{−1/2} ln u du = −4: algebraic and logarithmic together
        let i = rule.integrate(|u, _| u.ln() / u.sqrt());
        assert!((i + 4.0).abs() < 1e-12, "{i}");
        // complement nodes avoid cancellation: ∫₀¹ (1−u)^{−1/2} ln(1−u) du
        let i = rule.integrate(|_, v| v.ln() / v.sqrt());
        assert!((i + 4.0).abs() < 1e-12, "{i}");
    }

    #[test]
    fn simplex_rule_matches_exact_singular_integrals() {
        // ∫∫ x^{a+i} y^{b+j} e^{−x−y}/(x+y)^r = Γ(a+b+i+j+2−r)·B(a+i+1, b+j+1),
        // with the monomial supplied as the polynomial integrand. Exponents
        // chosen at α = −1/2, the hardest half-integer pair: r = 1 with the
        // bare weight (a, b) = (α, α+1); r = 2 with the lifted weight
        // (α+1, α+1) that the square-singular integrals always carry.
        for &(ta, tb, r) in &[(-1i64, 1i64, 1i64), (1, 1, 2)] {
            let (a, b) = (ta as f64 / 2.0, tb as f64 / 2.0);
            let rule = SimplexWeightRule::new(a, b, r as f64, 48, 48);
            for i in 0..6i64 {
                for j in 0..6i64 {
                    let approx = rule.integrate(|x, y| x.powi(i as i32) * y.powi(j as i32));
                    // Γ(a+b+i+j+2−r) Γ(a+i+1) Γ(b+j+1) / Γ(a+b+i+j+2)
                    let exact = gamma_half_f64(ta + tb + 2 * (i + j + 2 - r))
                        * gamma_half_f64(ta + 2 * i + 2)
                        * gamma_half_f64(tb + 2 * j + 2)
                        / gamma_half_f64(ta + tb + 2 * (i + j + 2));
                    assert!(
                        (approx - exact).abs() <= 1e-12 * (1.0 + exact.abs()),
                        "simplex (i,j,r)=({},{},{}): {} vs {}",
                        i,
                        j,
                        r,
                        approx,
                        exact
                    );
                }
            }
        }
    }
}
