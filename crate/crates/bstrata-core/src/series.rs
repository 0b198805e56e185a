//! Exact truncated exponential-generating-function arithmetic.
//!
//! A series of order `N` stores the coefficients of `x^n/n!` for
//! `n = 0..=N`; each coefficient is a polynomial in `t` with
//! arbitrary-precision rational entries, so plain rational series are the
//! degree-0 special case. Products use the binomial convolution, `exp` the
//! derivative recurrence `F' = G'·F`, and `log` its inversion. Fractional
//! powers are never computed as roots: `s^λ = exp(λ·log s)` with `λ` a
//! polynomial in `t`, which keeps every computation inside this module's
//! exact arithmetic.
//!
//! On top of the generic arithmetic sit the component-weight series
//! `D(x,t)` (both as its combinatorial double sum over Stirling numbers and
//! in the closed form `log(2−e^x)^{(−1−t)/2} + ((t+1)/2)x`), the strata
//! generating function `H(x,t) = exp(D(x,t))`, and its specializations
//! counting all strata (`t = 1`) and the zero-dimensional ones (`t = 0`).

use alloc::vec::Vec;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// Pascal triangle up to row `n`.
fn binomial_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut row = alloc::vec![BigInt::one(); m + 1];
        for k in 1..m {
            row[k] = &rows[m - 1][k - 1] + &rows[m - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Stirling numbers of the second kind, `S(n, j)` for all `0 ≤ j ≤ n ≤
/// n_max`, by the recurrence `S(n,j) = j·S(n−1,j) + S(n−1,j−1)`.
pub fn stirling_table(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    rows.push(alloc::vec![BigInt::one()]);
    for n in 1..=n_max {
        let mut row = alloc::vec![BigInt::zero(); n + 1];
        for j in 1..=n {
            let carry = &rows[n - 1][j - 1];
            let stay = if j < n { &rows[n - 1][j] * BigInt::from(j) } else { BigInt::zero() };
            row[j] = carry + stay;
        }
        rows.push(row);
    }
    rows
}

/// `S(n, j)` by the recurrence.
pub fn stirling(n: usize, j: usize) -> Result<BigInt, Error> {
    if j > n {
        return Err(Error::StirlingIndex { n, j });
    }
    Ok(stirling_table(n)[n][j].clone())
}

/// `S(n, j)` by the alternating sum `(1/j!) Σ (−1)^{j−i} C(j,i) i^n`.
/// Independent of the recurrence; the result is integral but computed in
/// rational arithmetic.
pub fn stirling_by_alternating_sum(n: usize, j: usize) -> Result<BigRational, Error> {
    if j > n {
        return Err(Error::StirlingIndex { n, j });
    }
    let mut sum = BigInt::zero();
    for i in 0..=j {
        let term = binomial(j, i) * num_traits::pow(BigInt::from(i), n);
        if (j - i).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let mut j_factorial = BigInt::one();
    for i in 2..=j {
        j_factorial *= BigInt::from(i);
    }
    Ok(BigRational::new(sum, j_factorial))
}

/// Fubini numbers (ordered set partitions): `Σ_j S(n,j)·j!`.
pub fn fubini(n: usize) -> BigInt {
    let table = stirling_table(n);
    let mut factorial = BigInt::one();
    let mut sum = if n == 0 { BigInt::one() } else { BigInt::zero() };
    for (j, s) in table[n].iter().enumerate().skip(1) {
        factorial *= BigInt::from(j);
        sum += s * &factorial;
    }
    sum
}

/// A polynomial in `t` with exact rational coefficients, constant term
/// first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyT {
    coeffs: Vec<BigRational>,
}

impl PolyT {
    pub fn zero() -> Self {
        PolyT { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(alloc::vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyT { coeffs }
    }

    /// `b + a·t` from integer parts.
    pub fn linear(constant: BigInt, t_coeff: BigInt) -> Self {
        Self::from_coeffs(alloc::vec![
            BigRational::from_integer(constant),
            BigRational::from_integer(t_coeff),
        ])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^d` (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> BigRational {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|d| self.coeff(d) + other.coeff(d)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|d| self.coeff(d) - other.coeff(d)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            alloc::vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// The coefficients as integers, if every denominator is one.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

/// Truncated exponential generating function: `Σ_{n=0}^{N} a_n x^n/n!`
/// with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EgfSeries {
    coeffs: Vec<PolyT>,
}

impl EgfSeries {
    pub fn zero(order: usize) -> Self {
        EgfSeries { coeffs: alloc::vec![PolyT::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = PolyT::one();
        s
    }

    /// The series `x` (truncation permitting).
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = PolyT::one();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<PolyT>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least its constant term");
        EgfSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Result<&PolyT, Error> {
        self.coeffs.get(n).ok_or(Error::OrderTooSmall { needed: n, order: self.order() })
    }

    pub fn coeffs(&self) -> &[PolyT] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<(), Error> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(EgfSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(EgfSeries { coeffs })
    }

    /// Binomial convolution: `c_n = Σ_k C(n,k) a_k b_{n−k}`.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_order(other)?;
        let order = self.order();
        let binom = binomial_table(order);
        let mut coeffs = Vec::with_capacity(order + 1);
        for (n, binom_row) in binom.iter().enumerate() {
            let mut c = PolyT::zero();
            for (k, b) in binom_row.iter().enumerate() {
                let term = self.coeffs[k].mul(&other.coeffs[n - k]);
                if term.is_zero() {
                    continue;
                }
                c = c.add(&term.scale(&BigRational::from_integer(b.clone())));
            }
            coeffs.push(c);
        }
        Ok(EgfSeries { coeffs })
    }

    /// Multiplies every coefficient by a fixed polynomial in `t`.
    pub fn scale_poly(&self, p: &PolyT) -> Self {
        EgfSeries { coeffs: self.coeffs.iter().map(|a| a.mul(p)).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        EgfSeries { coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    /// `exp` by the derivative recurrence; the constant term must vanish.
    pub fn exp(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTermNotZero);
        }
        let order = self.order();
        let binom = binomial_table(order.saturating_sub(1));
        let mut f = Vec::with_capacity(order + 1);
        f.push(PolyT::one());
        for m in 0..order {
            let mut next = PolyT::zero();
            for k in 0..=m {
                let term = self.coeffs[k + 1].mul(&f[m - k]);
                if term.is_zero() {
                    continue;
                }
                next = next.add(&term.scale(&BigRational::from_integer(binom[m][k].clone())));
            }
            f.push(next);
        }
        Ok(EgfSeries { coeffs: f })
    }

    /// `log`, inverse of `exp`; the constant term must be one.
    pub fn log(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let order = self.order();
        let binom = binomial_table(order.saturating_sub(1));
        let mut g = alloc::vec![PolyT::zero(); order + 1];
        for m in 0..order {
            let mut value = self.coeffs[m + 1].clone();
            for k in 0..m {
                let term = g[k + 1].mul(&self.coeffs[m - k]);
                if term.is_zero() {
                    continue;
                }
                value = value.sub(&term.scale(&BigRational::from_integer(binom[m][k].clone())));
            }
            g[m + 1] = value;
        }
        Ok(EgfSeries { coeffs: g })
    }

    /// `s^λ = exp(λ·log s)` for a polynomial exponent `λ`; the base must
    /// have constant term one.
    pub fn pow_poly(&self, exponent: &PolyT) -> Result<Self, Error> {
        self.log()?.scale_poly(exponent).exp()
    }

    /// Specializes `t` to a rational value, returning the scalar
    /// coefficient list.
    pub fn eval_t(&self, t: &BigRational) -> Vec<BigRational> {
        self.coeffs.iter().map(|p| p.eval(t)).collect()
    }
}

/// `e^x`: every coefficient is 1.
pub fn exp_x(order: usize) -> EgfSeries {
    EgfSeries { coeffs: alloc::vec![PolyT::one(); order + 1] }
}

/// `2 − e^x`: constant term 1, all later coefficients −1.
pub fn two_minus_exp_x(order: usize) -> EgfSeries {
    let minus_one = PolyT::constant(-BigRational::one());
    let mut coeffs = alloc::vec![minus_one; order + 1];
    coeffs[0] = PolyT::one();
    EgfSeries { coeffs }
}

fn one_half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// `(t+1)/2` as a polynomial.
fn half_t_plus_one() -> PolyT {
    PolyT::from_coeffs(alloc::vec![one_half(), one_half()])
}

/// The component-weight series as its combinatorial double sum: a bare `x`
/// plus, for each size `n ≥ 1` and block count `j`, the weight
/// `(j−1)!·S(n,j)` tagged with `t` exactly when `n + j` is even.
pub fn d_series_sum(order: usize) -> EgfSeries {
    let table = stirling_table(order);
    let mut coeffs = alloc::vec![PolyT::zero(); order + 1];
    for n in 1..=order {
        let mut tagged = BigInt::zero();
        let mut untagged = BigInt::zero();
        let mut factorial = BigInt::one(); // (j−1)!
        for (j, s) in table[n].iter().enumerate().skip(1) {
            if j > 1 {
                factorial *= BigInt::from(j - 1);
            }
            let weight = s * &factorial;
            if (n + j) % 2 == 0 {
                tagged += weight;
            } else {
                untagged += weight;
            }
        }
        if n == 1 {
            untagged += BigInt::one();
        }
        coeffs[n] = PolyT::linear(untagged, tagged);
    }
    EgfSeries { coeffs }
}

/// The closed form `((−1−t)/2)·log(2−e^x) + ((t+1)/2)·x`.
pub fn d_series_closed(order: usize) -> EgfSeries {
    let mu = half_t_plus_one();
    let lambda = PolyT::zero().sub(&mu);
    let log_part = two_minus_exp_x(order)
        .log()
        .expect("constant term is one")
        .scale_poly(&lambda);
    log_part
        .add(&EgfSeries::x(order).scale_poly(&mu))
        .expect("orders match")
}

/// The component-weight series; the closed form is the production route,
/// the double sum its cross-check.
pub fn d_series(order: usize) -> EgfSeries {
    d_series_closed(order)
}

/// The strata generating function `H(x,t) = exp(D(x,t))`, equal to
/// `(e^x/(2−e^x))^{(t+1)/2}`.
pub fn h_series(order: usize) -> EgfSeries {
    d_series(order).exp().expect("constant term is zero")
}

/// `H` built from the combinatorial sum instead of the closed form.
pub fn h_series_from_sum(order: usize) -> EgfSeries {
    d_series_sum(order).exp().expect("constant term is zero")
}

/// `H(x, t0)` for a fixed rational `t0`, entirely in scalar coefficients.
/// Much cheaper than specializing the bivariate series at large orders.
pub fn h_series_at(order: usize, t0: &BigRational) -> EgfSeries {
    let mu = (t0 + BigRational::one()) * one_half();
    let log_part = two_minus_exp_x(order).log().expect("constant term is one");
    let inner = EgfSeries::x(order)
        .sub(&log_part)
        .expect("orders match")
        .scale(&mu);
    inner.exp().expect("constant term is zero")
}

fn expect_integer(r: &BigRational) -> BigInt {
    assert!(r.is_integer(), "expected an integer coefficient, got {r}");
    r.to_integer()
}

/// The strata-count polynomials `p_n(t)` up to a truncation order, with the
/// counting specializations.
#[derive(Clone, Debug)]
pub struct StrataSeries {
    h: EgfSeries,
}

impl StrataSeries {
    pub fn new(order: usize) -> Self {
        StrataSeries { h: h_series(order) }
    }

    pub fn order(&self) -> usize {
        self.h.order()
    }

    pub fn series(&self) -> &EgfSeries {
        &self.h
    }

    /// `p_n(t)`, the coefficient of `x^n/n!`.
    pub fn polynomial(&self, n: usize) -> Result<&PolyT, Error> {
        self.h.coeff(n)
    }

    /// `p_n(1)`: the number of torus-invariant primes at rank `n`.
    pub fn total(&self, n: usize) -> Result<BigInt, Error> {
        Ok(expect_integer(&self.polynomial(n)?.eval(&BigRational::one())))
    }

    /// `p_n(0)`: the number of zero-dimensional strata (primitive primes).
    pub fn primitive(&self, n: usize) -> Result<BigInt, Error> {
        Ok(expect_integer(&self.polynomial(n)?.eval(&BigRational::zero())))
    }

    /// `p_n(0) / p_n(1)` as an exact fraction.
    pub fn ratio(&self, n: usize) -> Result<BigRational, Error> {
        Ok(BigRational::new(self.primitive(n)?, self.total(n)?))
    }
}

/// Scalar coefficient list of `H(x, t0)` as integers; panics if a
/// coefficient is non-integral (which the counting interpretation rules
/// out for `t0 ∈ {0, 1}`).
fn integer_counts_at(order: usize, t0: &BigRational) -> Vec<BigInt> {
    h_series_at(order, t0)
        .coeffs()
        .iter()
        .map(|p| expect_integer(&p.coeff(0)))
        .collect()
}

/// Total strata counts `p_n(1)` for `n = 0..=order`, by the scalar route.
pub fn total_counts(order: usize) -> Vec<BigInt> {
    integer_counts_at(order, &BigRational::one())
}

/// Primitive counts `p_n(0)` for `n = 0..=order`, by the scalar route.
pub fn primitive_counts(order: usize) -> Vec<BigInt> {
    integer_counts_at(order, &BigRational::zero())
}

/// Exact ratios `p_n(0)/p_n(1)` for `n = 0..=order`.
pub fn primitive_ratios(order: usize) -> Vec<BigRational> {
    let totals = total_counts(order);
    let primitives = primitive_counts(order);
    totals
        .into_iter()
        .zip(primitives)
        .map(|(t, p)| BigRational::new(p, t))
        .collect()
}
