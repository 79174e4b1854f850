//! Exact arithmetic substrate: big rationals, half-integers, digamma values
//! at integer and half-integer arguments, and Gamma-quotient evaluation.
//!
//! Every quantity in this module is represented exactly. Digamma values live
//! in the 3-dimensional vector space Q ⊕ Qγ ⊕ Q·ln2 (γ the Euler–Mascheroni
//! constant), which is closed under all the digamma arithmetic the crate
//! needs:
//!
//! ```text
//! ψ₀(N)       = −γ + Σ_{j=1}^{N−1} 1/j
//! ψ₀(N + 1/2) = −γ − 2 ln 2 + 2 Σ_{j=1}^{N} 1/(2j−1)
//! ```
//!
//! Gamma functions at half-integer arguments evaluate to rational multiples
//! of √π via Γ(k + 1/2) = (2k)!/(4^k k!) · √π, so quotients of Γ values at
//! integer/half-integer points times powers of √2 form a field representable
//! as `rational · √π^a · √2^b`. The irrational basis elements γ, ln2, √π, √2
//! are never floated inside a computation; they appear numerically only in
//! the final conversion to `f64`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator.
pub type ExactRational = num_rational::BigRational;

/// Shorthand for an integer-valued [`ExactRational`].
pub fn rat_int(v: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v))
}

/// Shorthand for the exact fraction `num/den`.
pub fn rat(num: i64, den: i64) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer power of a rational, with exact inversion for negative exponents.
pub fn rat_powi(base: &ExactRational, exp: i64) -> ExactRational {
    if exp == 0 {
        return ExactRational::one();
    }
    let mut acc = ExactRational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

// ---------------------------------------------------------------------------
// high-precision constants (as exact rational approximations)
// ---------------------------------------------------------------------------

/// Builds `digits / 10^scale` where `digits` is a decimal integer string.
fn constant_from_digits(digits: &str, scale: u32) -> ExactRational {
    let num: BigInt = digits.parse().expect("constant digit string");
    let den = BigInt::from(10u32).pow(scale);
    ExactRational::new(num, den)
}

/// Euler–Mascheroni constant γ to 49 decimal places (error < 2⁻¹⁶²).
fn gamma_euler() -> &'static ExactRational {
    static CELL: OnceLock<ExactRational> = OnceLock::new();
    CELL.get_or_init(|| {
        constant_from_digits("5772156649015328606065120900824024310421593359399", 49)
    })
}

/// ln 2 to 49 decimal places.
fn ln2_const() -> &'static ExactRational {
    static CELL: OnceLock<ExactRational> = OnceLock::new();
    CELL.get_or_init(|| {
        constant_from_digits("6931471805599453094172321214581765680755001343602", 49)
    })
}

/// √π to 49 decimal places.
fn sqrt_pi_const() -> &'static ExactRational {
    static CELL: OnceLock<ExactRational> = OnceLock::new();
    CELL.get_or_init(|| {
        constant_from_digits("17724538509055160272981674833411451827975494561223", 49)
    })
}

/// √2 to 49 decimal places.
fn sqrt2_const() -> &'static ExactRational {
    static CELL: OnceLock<ExactRational> = OnceLock::new();
    CELL.get_or_init(|| {
        constant_from_digits("14142135623730950488016887242096980785696718753769", 49)
    })
}

// ---------------------------------------------------------------------------
// correctly-rounded float conversion
// ---------------------------------------------------------------------------

/// Converts an exact rational to the nearest `f64` (round half to even).
///
/// The conversion is performed on the exact integer numerator/denominator,
/// so it is correctly rounded regardless of the operand's magnitude — the
/// naive `numer as f64 / denom as f64` loses the last bits once either side
/// exceeds 2⁵³.
///
/// # Examples
///
/// ```
/// use bures_hall::exact::{rat, to_f64};
///
/// assert_eq!(to_f64(&rat(7, 8)), 0.875);
/// assert_eq!(to_f64(&rat(1, 3)), 1.0 / 3.0);
/// ```
pub fn to_f64(value: &ExactRational) -> f64 {
    if value.is_zero() {
        return 0.0;
    }
    let negative = value.numer().is_negative();
    let num = value.numer().abs().to_biguint().expect("abs is nonnegative");
    let den = value.denom().to_biguint().expect("denominator is positive");
    let nbits = num.bits() as i64;
    let dbits = den.bits() as i64;

    // Scale so the integer quotient carries 54–56 significant bits, then
    // round the excess off with round-half-even (the division remainder
    // supplies the sticky bit).
    let shift = 55 - (nbits - dbits);
    let (q, rem) = if shift >= 0 {
        (num << shift as u64).div_rem(&den)
    } else {
        num.div_rem(&(den << (-shift) as u64))
    };
    let drop = q.bits() as i64 - 53;
    debug_assert!(drop >= 1, "quotient must carry excess bits");
    let mask = (BigUint::one() << drop as u64) - BigUint::one();
    let low = &q & &mask;
    let half = BigUint::one() << (drop - 1) as u64;
    let mut mantissa = (q >> drop as u64).to_u64().expect("53-bit mantissa");
    let sticky = !rem.is_zero();
    if low > half || (low == half && (sticky || mantissa & 1 == 1)) {
        mantissa += 1; // a carry to 2^53 is still exactly representable
    }
    let exponent = drop - shift;
    let magnitude = if exponent > i32::MAX as i64 {
        f64::INFINITY
    } else if exponent < i32::MIN as i64 {
        0.0
    } else {
        libm::ldexp(mantissa as f64, exponent as i32)
    };
    if negative {
        -magnitude
    } else {
        magnitude
    }
}

// ---------------------------------------------------------------------------
// half-integers
// ---------------------------------------------------------------------------

/// A number of the form `twice/2` with `twice` an arbitrary-precision
/// integer. The parity of `twice` distinguishes integers from proper
/// half-integers.
///
/// # Examples
///
/// ```
/// use bures_hall::exact::HalfInteger;
///
/// let alpha = HalfInteger::from_twice(1.into()); // 1/2
/// assert!(!alpha.is_integer());
/// assert_eq!(alpha.plus_int(2).to_string(), "5/2");
/// ```
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger {
    twice: BigInt,
}

impl HalfInteger {
    /// Constructs the value `twice/2`.
    pub fn from_twice(twice: BigInt) -> Self {
        HalfInteger { twice }
    }

    /// Constructs an integer value.
    pub fn from_int(v: i64) -> Self {
        HalfInteger {
            twice: BigInt::from(2 * v as i128),
        }
    }

    /// Twice the stored value.
    pub fn twice(&self) -> &BigInt {
        &self.twice
    }

    /// Whether the value is an integer (as opposed to a proper half-integer).
    pub fn is_integer(&self) -> bool {
        self.twice.is_even()
    }

    /// Whether the value is strictly positive.
    pub fn is_positive(&self) -> bool {
        self.twice.is_positive()
    }

    /// The value shifted by an integer: `self + j`.
    pub fn plus_int(&self, j: i64) -> Self {
        HalfInteger {
            twice: &self.twice + BigInt::from(2 * j as i128),
        }
    }

    /// The value as an exact rational.
    pub fn to_rational(&self) -> ExactRational {
        ExactRational::new(self.twice.clone(), BigInt::from(2))
    }

    /// The integer value, if the parity allows it.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(&self.twice / 2)
        } else {
            None
        }
    }

    /// Nearest-even float value (exact for any half-integer within range).
    pub fn to_f64(&self) -> f64 {
        to_f64(&self.to_rational())
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(v) => write!(f, "{}", v),
            None => write!(f, "{}/2", self.twice),
        }
    }
}

// ---------------------------------------------------------------------------
// digamma numbers
// ---------------------------------------------------------------------------

/// An exact element of Q ⊕ Qγ ⊕ Q·ln2: `rational + gamma_coeff·γ + ln2_coeff·ln2`.
///
/// Digamma values at positive integer and half-integer arguments live in
/// this space, and it is closed under addition and rational scaling, so
/// entropy-style digamma differences can be manipulated without ever
/// evaluating γ or ln 2 numerically. Equality is component-wise and exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigammaNumber {
    /// Coefficient of 1.
    pub rational: ExactRational,
    /// Coefficient of the Euler–Mascheroni constant γ.
    pub gamma_coeff: ExactRational,
    /// Coefficient of ln 2.
    pub ln2_coeff: ExactRational,
}

impl DigammaNumber {
    /// The zero element.
    pub fn zero() -> Self {
        DigammaNumber {
            rational: ExactRational::zero(),
            gamma_coeff: ExactRational::zero(),
            ln2_coeff: ExactRational::zero(),
        }
    }

    /// A purely rational element.
    pub fn from_rational(rational: ExactRational) -> Self {
        DigammaNumber {
            rational,
            gamma_coeff: ExactRational::zero(),
            ln2_coeff: ExactRational::zero(),
        }
    }

    /// Scales all three components by an exact rational.
    pub fn scale(&self, factor: &ExactRational) -> Self {
        DigammaNumber {
            rational: &self.rational * factor,
            gamma_coeff: &self.gamma_coeff * factor,
            ln2_coeff: &self.ln2_coeff * factor,
        }
    }

    /// Nearest-even float value of `rational + gamma_coeff·γ + ln2_coeff·ln2`.
    pub fn to_f64(&self) -> f64 {
        let exactly = &self.rational
            + &self.gamma_coeff * gamma_euler()
            + &self.ln2_coeff * ln2_const();
        to_f64(&exactly)
    }
}

impl Add for DigammaNumber {
    type Output = DigammaNumber;
    fn add(self, rhs: DigammaNumber) -> DigammaNumber {
        DigammaNumber {
            rational: self.rational + rhs.rational,
            gamma_coeff: self.gamma_coeff + rhs.gamma_coeff,
            ln2_coeff: self.ln2_coeff + rhs.ln2_coeff,
        }
    }
}

impl Sub for DigammaNumber {
    type Output = DigammaNumber;
    fn sub(self, rhs: DigammaNumber) -> DigammaNumber {
        DigammaNumber {
            rational: self.rational - rhs.rational,
            gamma_coeff: self.gamma_coeff - rhs.gamma_coeff,
            ln2_coeff: self.ln2_coeff - rhs.ln2_coeff,
        }
    }
}

impl Neg for DigammaNumber {
    type Output = DigammaNumber;
    fn neg(self) -> DigammaNumber {
        DigammaNumber {
            rational: -self.rational,
            gamma_coeff: -self.gamma_coeff,
            ln2_coeff: -self.ln2_coeff,
        }
    }
}

impl Mul<&ExactRational> for &DigammaNumber {
    type Output = DigammaNumber;
    fn mul(self, rhs: &ExactRational) -> DigammaNumber {
        self.scale(rhs)
    }
}

impl fmt::Display for DigammaNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + ({})γ + ({})ln2",
            self.rational, self.gamma_coeff, self.ln2_coeff
        )
    }
}

/// Exact digamma value at a positive integer or half-integer argument.
///
/// Uses the closed partial-sum forms
/// `ψ₀(N) = −γ + Σ_{j<N} 1/j` and
/// `ψ₀(N+1/2) = −γ − 2ln2 + 2 Σ_{j=1}^{N} 1/(2j−1)`.
///
/// # Examples
///
/// ```
/// use bures_hall::exact::{digamma_exact, rat, rat_int, HalfInteger};
///
/// let psi = digamma_exact(&HalfInteger::from_twice(7.into())).unwrap(); // ψ₀(7/2)
/// assert_eq!(psi.rational, rat(46, 15));
/// assert_eq!(psi.gamma_coeff, rat_int(-1));
/// assert_eq!(psi.ln2_coeff, rat_int(-2));
/// ```
pub fn digamma_exact(arg: &HalfInteger) -> Result<DigammaNumber> {
    if !arg.is_positive() {
        return Err(Error::Domain(format!(
            "digamma_exact requires a positive argument, got {}",
            arg
        )));
    }
    let mut value = DigammaNumber::zero();
    value.gamma_coeff = rat_int(-1);
    match arg.as_integer() {
        Some(n) => {
            // ψ₀(N) = −γ + H_{N−1}
            let n = n.to_u64().ok_or_else(|| {
                Error::Domain(format!("digamma argument {} too large to sum", arg))
            })?;
            let mut harmonic = ExactRational::zero();
            for j in 1..n {
                harmonic += ExactRational::new(BigInt::one(), BigInt::from(j));
            }
            value.rational = harmonic;
        }
        None => {
            // arg = N + 1/2 with N = (twice − 1)/2 ≥ 0
            let n = ((arg.twice() - BigInt::one()) / BigInt::from(2))
                .to_u64()
                .ok_or_else(|| {
                    Error::Domain(format!("digamma argument {} too large to sum", arg))
                })?;
            value.ln2_coeff = rat_int(-2);
            let mut odd_sum = ExactRational::zero();
            for j in 1..=n {
                odd_sum += ExactRational::new(BigInt::from(2), BigInt::from(2 * j - 1));
            }
            value.rational = odd_sum;
        }
    }
    Ok(value)
}

// ---------------------------------------------------------------------------
// gamma quotients
// ---------------------------------------------------------------------------

/// An exact value of the form `rational · √π^a · √2^b`.
///
/// This class is closed under products and quotients of Γ values at
/// integer/half-integer arguments and powers of √2. The √2 exponent is
/// normalized to {0, 1} (even powers fold into the rational part); the √π
/// exponent is kept as-is since no power of π is rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaQuotient {
    /// Rational prefactor.
    pub rational: ExactRational,
    /// Exponent of √π.
    pub sqrt_pi_power: i64,
    /// Exponent of √2, normalized into {0, 1}.
    pub sqrt2_power: i64,
}

impl GammaQuotient {
    /// The multiplicative identity.
    pub fn one() -> Self {
        GammaQuotient {
            rational: ExactRational::one(),
            sqrt_pi_power: 0,
            sqrt2_power: 0,
        }
    }

    /// Builds `rational · √π^a · √2^b` in normalized form.
    pub fn new(rational: ExactRational, sqrt_pi_power: i64, sqrt2_power: i64) -> Self {
        let mut out = GammaQuotient {
            rational,
            sqrt_pi_power,
            sqrt2_power,
        };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.rational.is_zero() {
            self.sqrt_pi_power = 0;
            self.sqrt2_power = 0;
            return;
        }
        // Fold √2^(2t) = 2^t into the rational part.
        let folded = self.sqrt2_power.div_euclid(2);
        self.sqrt2_power = self.sqrt2_power.rem_euclid(2);
        if folded != 0 {
            self.rational *= rat_powi(&rat_int(2), folded);
        }
    }

    /// Product of two quotients.
    pub fn mul(&self, rhs: &GammaQuotient) -> GammaQuotient {
        GammaQuotient::new(
            &self.rational * &rhs.rational,
            self.sqrt_pi_power + rhs.sqrt_pi_power,
            self.sqrt2_power + rhs.sqrt2_power,
        )
    }

    /// Quotient of two quotients.
    pub fn div(&self, rhs: &GammaQuotient) -> GammaQuotient {
        assert!(!rhs.rational.is_zero(), "division by a zero GammaQuotient");
        GammaQuotient::new(
            &self.rational / &rhs.rational,
            self.sqrt_pi_power - rhs.sqrt_pi_power,
            self.sqrt2_power - rhs.sqrt2_power,
        )
    }

    /// Scales the rational part.
    pub fn scale(&self, factor: &ExactRational) -> GammaQuotient {
        GammaQuotient::new(
            &self.rational * factor,
            self.sqrt_pi_power,
            self.sqrt2_power,
        )
    }

    /// The exact rational value, when the irrational parts are absent.
    pub fn as_rational(&self) -> Option<&ExactRational> {
        if self.sqrt_pi_power == 0 && self.sqrt2_power == 0 {
            Some(&self.rational)
        } else {
            None
        }
    }

    /// Nearest-even float value.
    pub fn to_f64(&self) -> f64 {
        let exactly = &self.rational
            * rat_powi(sqrt_pi_const(), self.sqrt_pi_power)
            * rat_powi(sqrt2_const(), self.sqrt2_power);
        to_f64(&exactly)
    }
}

impl fmt::Display for GammaQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} · √π^{} · √2^{}",
            self.rational, self.sqrt_pi_power, self.sqrt2_power
        )
    }
}

/// Exact Γ at an integer or half-integer argument that is not a pole.
///
/// Positive half-integers use Γ(k + 1/2) = (2k)!/(4^k k!) √π; negative
/// half-integers are lifted by the functional equation Γ(x) = Γ(x+1)/x.
/// Non-positive integers are poles and rejected.
pub fn gamma_half(arg: &HalfInteger) -> Result<GammaQuotient> {
    if arg.is_integer() {
        let n = arg.as_integer().expect("integer parity checked");
        if !n.is_positive() {
            return Err(Error::Domain(format!(
                "gamma pole at non-positive integer argument {}",
                arg
            )));
        }
        let n = n.to_u64().ok_or_else(|| {
            Error::Domain(format!("gamma argument {} too large for factorial", arg))
        })?;
        let mut fac = BigInt::one();
        for j in 2..n {
            fac *= BigInt::from(j);
        }
        return Ok(GammaQuotient::new(
            ExactRational::from_integer(fac),
            0,
            0,
        ));
    }
    // Half-integer: lift below 1/2 using Γ(x) = Γ(x+1)/x.
    if arg.twice().sign() == Sign::Minus {
        let shifted = arg.plus_int(1);
        let lifted = gamma_half(&shifted)?;
        return Ok(lifted.scale(&arg.to_rational().recip()));
    }
    // arg = k + 1/2 with k ≥ 0
    let k = ((arg.twice() - BigInt::one()) / BigInt::from(2))
        .to_u64()
        .expect("nonnegative half-integer");
    let mut num = BigInt::one(); // (2k)!
    for j in 2..=(2 * k) {
        num *= BigInt::from(j);
    }
    let mut den = BigInt::from(4u32).pow(k as u32); // 4^k k!
    for j in 2..=k {
        den *= BigInt::from(j);
    }
    Ok(GammaQuotient::new(ExactRational::new(num, den), 1, 0))
}

/// Exact quotient Π Γ(num_i) / Π Γ(den_j) at positive integer/half-integer
/// arguments.
///
/// # Examples
///
/// ```
/// use bures_hall::exact::{gamma_quotient, rat, HalfInteger};
///
/// // Γ(7/2)/Γ(3/2) = (5/2)(3/2) = 15/4
/// let q = gamma_quotient(
///     &[HalfInteger::from_twice(7.into())],
///     &[HalfInteger::from_twice(3.into())],
/// ).unwrap();
/// assert_eq!(q.rational, rat(15, 4));
/// assert_eq!(q.sqrt_pi_power, 0);
/// ```
pub fn gamma_quotient(
    numerators: &[HalfInteger],
    denominators: &[HalfInteger],
) -> Result<GammaQuotient> {
    let mut acc = GammaQuotient::one();
    for a in numerators {
        if !a.is_positive() {
            return Err(Error::Domain(format!(
                "gamma_quotient requires positive arguments, got {}",
                a
            )));
        }
        acc = acc.mul(&gamma_half(a)?);
    }
    for a in denominators {
        if !a.is_positive() {
            return Err(Error::Domain(format!(
                "gamma_quotient requires positive arguments, got {}",
                a
            )));
        }
        acc = acc.div(&gamma_half(a)?);
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// dense exact polynomials
// ---------------------------------------------------------------------------

/// A dense polynomial with exact rational coefficients, indexed by degree.
///
/// Used both for the biorthogonal polynomials (coefficients relative to a
/// shared irrational prefactor) and for the recurrence coefficient
/// polynomials in the variable k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<ExactRational>,
}

impl RatPoly {
    /// Builds a polynomial from coefficients (constant term first),
    /// trimming trailing zeros.
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    /// A constant polynomial.
    pub fn constant(c: ExactRational) -> Self {
        RatPoly::new(vec![c])
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^j (zero beyond the stored degree).
    pub fn coeff(&self, j: usize) -> ExactRational {
        self.coeffs.get(j).cloned().unwrap_or_else(ExactRational::zero)
    }

    /// Borrowed view of all coefficients, constant term first.
    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&ExactRational> {
        self.coeffs.last()
    }

    /// Exact sum.
    pub fn add(&self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect();
        RatPoly::new(coeffs)
    }

    /// Exact difference.
    pub fn sub(&self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect();
        RatPoly::new(coeffs)
    }

    /// Exact product.
    pub fn mul(&self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::new(coeffs)
    }

    /// Exact scalar multiple.
    pub fn scale(&self, factor: &ExactRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Multiplication by the variable (degree shift).
    pub fn mul_x(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ExactRational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        RatPoly::new(coeffs)
    }

    /// Exact formal derivative.
    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * rat_int(j as i64))
            .collect();
        RatPoly::new(coeffs)
    }

    /// Exact evaluation by Horner's scheme.
    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        let mut acc = ExactRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Float evaluation by Horner's scheme on pre-rounded coefficients.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + to_f64(c);
        }
        acc
    }

    /// Coefficients rounded to `f64`, constant term first.
    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }
}

/// Converts a finite `f64` to the exact rational it represents.
pub fn rational_from_f64(x: f64) -> Result<ExactRational> {
    ExactRational::from_float(x)
        .ok_or_else(|| Error::Domain(format!("non-finite float {} has no rational value", x)))
}
