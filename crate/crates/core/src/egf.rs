//! Truncated exponential-generating-function algebra over exact rationals.
//!
//! A series of order N stores the coefficients f_0..f_N of
//! f(x) = Σ f_n xⁿ/n!. Binary operations truncate to the smaller order,
//! so "compute everything to order N" composes freely. No operation ever
//! leaves the rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{binomial_row, factorial, Rat};

/// A truncated EGF: order N plus the exact coefficients f_0..f_N,
/// with the convention f(x) = Σ f_n xⁿ/n!.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfSeries {
    order: usize,
    coeffs: Vec<Rat>,
}

/// Precondition violations on the partial operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EgfError {
    /// `exp` and `compose` need a vanishing constant term to stay rational.
    ConstantTermNotZero,
    /// `log` and `rational_power` need constant term exactly 1.
    ConstantTermNotOne,
}

impl fmt::Display for EgfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EgfError::ConstantTermNotZero => {
                write!(f, "series must have constant term 0 for this operation")
            }
            EgfError::ConstantTermNotOne => {
                write!(f, "series must have constant term 1 for this operation")
            }
        }
    }
}

impl core::error::Error for EgfError {}

impl EgfSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        EgfSeries {
            order,
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    /// Build from explicit EGF coefficients f_0..f_N. Panics on an empty list.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least f_0");
        EgfSeries {
            order: coeffs.len() - 1,
            coeffs,
        }
    }

    /// Build from a coefficient function n ↦ f_n.
    pub fn from_fn(order: usize, f: impl Fn(usize) -> Rat) -> Self {
        EgfSeries {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// The series of the *function* c·x^k (EGF coefficient c·k! at index k).
    pub fn monomial(order: usize, k: usize, c: Rat) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c * Rat::from_integer(factorial(k));
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// f_n. Panics beyond the truncation order.
    pub fn coeff(&self, n: usize) -> &Rat {
        &self.coeffs[n]
    }

    /// Copy truncated to `order` (or unchanged if already shorter).
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        EgfSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Coefficientwise sum, truncated to the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        EgfSeries {
            order,
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &other.coeffs[n])
                .collect(),
        }
    }

    pub fn negate(&self) -> Self {
        EgfSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.negate())
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rat) -> Self {
        EgfSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|f| f * c).collect(),
        }
    }

    /// Product of the underlying functions: the binomial convolution
    /// (fg)_n = Σ_k C(n,k) f_k g_{n−k}, truncated to the smaller order.
    pub fn multiply(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let binoms = binomial_row(n);
            let mut acc = Rat::zero();
            for (k, binom) in binoms.iter().enumerate() {
                if !self.coeffs[k].is_zero() && !other.coeffs[n - k].is_zero() {
                    acc += binom * &self.coeffs[k] * &other.coeffs[n - k];
                }
            }
            coeffs.push(acc);
        }
        EgfSeries { order, coeffs }
    }

    /// exp(f) for f with f_0 = 0. Uses g' = f'·g, i.e.
    /// g_{n+1} = Σ_k C(n,k) f_{k+1} g_{n−k}, g_0 = 1.
    pub fn exp(&self) -> Result<Self, EgfError> {
        if !self.coeffs[0].is_zero() {
            return Err(EgfError::ConstantTermNotZero);
        }
        let order = self.order;
        let mut g = vec![Rat::zero(); order + 1];
        g[0] = Rat::one();
        for n in 0..order {
            let binoms = binomial_row(n);
            let mut acc = Rat::zero();
            for (k, binom) in binoms.iter().enumerate() {
                if !self.coeffs[k + 1].is_zero() && !g[n - k].is_zero() {
                    acc += binom * &self.coeffs[k + 1] * &g[n - k];
                }
            }
            g[n + 1] = acc;
        }
        Ok(EgfSeries { order, coeffs: g })
    }

    /// log(f) for f with f_0 = 1. Inverts the `exp` recurrence:
    /// h_{n+1} = f_{n+1} − Σ_{k<n} C(n,k) h_{k+1} f_{n−k}.
    pub fn log(&self) -> Result<Self, EgfError> {
        if !self.coeffs[0].is_one() {
            return Err(EgfError::ConstantTermNotOne);
        }
        let order = self.order;
        let mut h = vec![Rat::zero(); order + 1];
        for n in 0..order {
            let binoms = binomial_row(n);
            let mut acc = self.coeffs[n + 1].clone();
            for k in 0..n {
                if !h[k + 1].is_zero() && !self.coeffs[n - k].is_zero() {
                    acc -= &binoms[k] * &h[k + 1] * &self.coeffs[n - k];
                }
            }
            h[n + 1] = acc;
        }
        Ok(EgfSeries { order, coeffs: h })
    }

    /// g(φ(x)) for φ with φ_0 = 0, truncated to the smaller order.
    /// Works in ordinary coefficients (Horner), then converts back.
    pub fn compose(&self, inner: &Self) -> Result<Self, EgfError> {
        if !inner.coeffs[0].is_zero() {
            return Err(EgfError::ConstantTermNotZero);
        }
        let order = self.order.min(inner.order);
        let outer = self.truncate(order).to_ordinary();
        let phi = inner.truncate(order).to_ordinary();
        // Horner: r ← r·φ + a_k, truncating every product.
        let mut r = vec![Rat::zero(); order + 1];
        for k in (0..=order).rev() {
            r = ordinary_mul(&r, &phi, order);
            r[0] += &outer[k];
        }
        Ok(Self::from_ordinary(&r))
    }

    /// f^α for rational α and f with f_0 = 1. Satisfies the binomial
    /// expansion of (1+u)^α; in ordinary coefficients the ODE g'f = αf'g
    /// gives n·g_n = Σ_{j=1..n} (α·j − (n−j)) a_j g_{n−j}.
    pub fn rational_power(&self, alpha: &Rat) -> Result<Self, EgfError> {
        if !self.coeffs[0].is_one() {
            return Err(EgfError::ConstantTermNotOne);
        }
        let order = self.order;
        let a = self.to_ordinary();
        let mut g = vec![Rat::zero(); order + 1];
        g[0] = Rat::one();
        for n in 1..=order {
            let mut acc = Rat::zero();
            for j in 1..=n {
                if a[j].is_zero() || g[n - j].is_zero() {
                    continue;
                }
                let coeff = alpha * crate::arith::int(j as i64) - crate::arith::int((n - j) as i64);
                acc += coeff * &a[j] * &g[n - j];
            }
            g[n] = acc / crate::arith::int(n as i64);
        }
        Ok(Self::from_ordinary(&g))
    }

    /// The product formula: f(λ d/dx) g(x)|_{x=0} = Σ f_n g_n λⁿ/n!,
    /// a Hadamard-type product in the EGF convention.
    pub fn product_formula(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        EgfSeries {
            order,
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] * &other.coeffs[n])
                .collect(),
        }
    }

    /// Ordinary-series coefficients f_n/n!.
    pub(crate) fn to_ordinary(&self) -> Vec<Rat> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c / Rat::from_integer(factorial(n)))
            .collect()
    }

    /// Back from ordinary coefficients: f_n = n!·a_n.
    pub(crate) fn from_ordinary(ordinary: &[Rat]) -> Self {
        Self::from_coeffs(
            ordinary
                .iter()
                .enumerate()
                .map(|(n, c)| c * Rat::from_integer(factorial(n)))
                .collect(),
        )
    }
}

fn ordinary_mul(a: &[Rat], b: &[Rat], order: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};

    fn exp_x(order: usize) -> EgfSeries {
        EgfSeries::from_fn(order, |_| int(1))
    }

    /// e^x − 1: the EGF whose exp gives the Bell numbers.
    fn exp_x_minus_one(order: usize) -> EgfSeries {
        EgfSeries::from_fn(order, |n| if n == 0 { int(0) } else { int(1) })
    }

    #[test]
    fn add_identity_and_pointwise() {
        let f = exp_x(3);
        assert_eq!(f.add(&EgfSeries::zero(3)), f);

        let g = EgfSeries::from_fn(3, |n| int(n as i64));
        let sum = f.add(&g);
        assert_eq!(sum.coeffs(), &[int(1), int(2), int(3), int(4)]);

        assert_eq!(f.add(&f.negate()), EgfSeries::zero(3));
    }

    #[test]
    fn add_truncates_to_min_order() {
        let f = exp_x(5);
        let g = exp_x(3);
        assert_eq!(f.add(&g).order(), 3);
    }

    #[test]
    fn multiply_exponentials() {
        // e^x · e^x = e^{2x}: coefficients 2ⁿ.
        let f = exp_x(6);
        let prod = f.multiply(&f);
        for n in 0..=6 {
            assert_eq!(*prod.coeff(n), int(1 << n));
        }
    }

    #[test]
    fn multiply_monomials() {
        // x·x = x², whose EGF coefficient at n=2 is 2.
        let x = EgfSeries::monomial(4, 1, int(1));
        let sq = x.multiply(&x);
        assert_eq!(sq.coeffs(), &[int(0), int(0), int(2), int(0), int(0)]);
        // multiplicative identity
        let f = EgfSeries::from_fn(4, |n| ratio(3, (n + 1) as i64));
        assert_eq!(f.multiply(&EgfSeries::one(4)), f);
    }

    #[test]
    fn exp_gives_bell_numbers() {
        let bell = exp_x_minus_one(6).exp().unwrap();
        let expected = [1, 1, 2, 5, 15, 52, 203];
        for (n, b) in expected.iter().enumerate() {
            assert_eq!(*bell.coeff(n), int(*b));
        }
    }

    #[test]
    fn exp_of_factorial_weights() {
        // exp(x/(1−x)): x/(1−x) = Σ_{n≥1} n!·xⁿ/n!.
        let f = EgfSeries::from_fn(6, |n| {
            if n == 0 {
                int(0)
            } else {
                Rat::from_integer(factorial(n))
            }
        });
        let e = f.exp().unwrap();
        let expected = [1, 1, 3, 13, 73, 501, 4051];
        for (n, b) in expected.iter().enumerate() {
            assert_eq!(*e.coeff(n), int(*b));
        }
    }

    #[test]
    fn exp_of_zero_and_bad_constant() {
        assert_eq!(EgfSeries::zero(4).exp().unwrap(), EgfSeries::one(4));
        assert_eq!(EgfSeries::one(4).exp(), Err(EgfError::ConstantTermNotZero));
    }

    #[test]
    fn log_inverts_exp() {
        // Fixed "random" rationals with g_0 = 0, N = 8.
        let g = EgfSeries::from_coeffs(alloc::vec![
            int(0),
            ratio(3, 2),
            int(-2),
            ratio(7, 5),
            int(4),
            ratio(-11, 3),
            int(1),
            ratio(5, 9),
            int(-6),
        ]);
        assert_eq!(g.exp().unwrap().log().unwrap(), g);
    }

    #[test]
    fn log_of_bell_series() {
        let bell = exp_x_minus_one(6).exp().unwrap();
        assert_eq!(bell.log().unwrap(), exp_x_minus_one(6));
    }

    #[test]
    fn log_edge_cases() {
        assert_eq!(EgfSeries::one(4).log().unwrap(), EgfSeries::zero(4));
        assert_eq!(EgfSeries::zero(4).log(), Err(EgfError::ConstantTermNotOne));
    }

    #[test]
    fn compose_examples() {
        let e = exp_x(6);
        let x = EgfSeries::monomial(6, 1, int(1));
        assert_eq!(e.compose(&x).unwrap(), e);

        // e^x ∘ (e^x − 1) = Bell series, cross-checked against exp.
        let bell_via_compose = e.compose(&exp_x_minus_one(6)).unwrap();
        let bell_via_exp = exp_x_minus_one(6).exp().unwrap();
        assert_eq!(bell_via_compose, bell_via_exp);

        // g ∘ 0 = g_0.
        let g = EgfSeries::from_fn(5, |n| int(2 * n as i64 + 3));
        let c = g.compose(&EgfSeries::zero(5)).unwrap();
        let mut expected = EgfSeries::zero(5);
        expected.coeffs[0] = int(3);
        assert_eq!(c, expected);

        assert_eq!(g.compose(&e), Err(EgfError::ConstantTermNotZero));
    }

    #[test]
    fn rational_power_integer_case() {
        // (1+x)² via power vs. via multiply.
        let one_plus_x = EgfSeries::from_coeffs(alloc::vec![int(1), int(1), int(0), int(0),]);
        assert_eq!(
            one_plus_x.rational_power(&int(2)).unwrap(),
            one_plus_x.multiply(&one_plus_x)
        );
    }

    #[test]
    fn rational_power_catalan_square_root() {
        // √(1−4x) has ordinary coefficients 1, −2, −2, −4, −10 (Catalan);
        // squaring it back is the independent check.
        let f = EgfSeries::from_coeffs(alloc::vec![int(1), int(-4), int(0), int(0), int(0),]);
        let s = f.rational_power(&ratio(1, 2)).unwrap();
        let ord = s.to_ordinary();
        assert_eq!(
            ord,
            alloc::vec![int(1), int(-2), int(-2), int(-4), int(-10)]
        );
        assert_eq!(s.multiply(&s), f);
    }

    #[test]
    fn rational_power_zero_exponent_and_errors() {
        let f = EgfSeries::from_fn(5, |n| if n == 0 { int(1) } else { ratio(1, n as i64) });
        assert_eq!(f.rational_power(&int(0)).unwrap(), EgfSeries::one(5));
        assert_eq!(
            EgfSeries::zero(5).rational_power(&int(2)),
            Err(EgfError::ConstantTermNotOne)
        );
        // f^{-1}·f = 1
        let inv = f.rational_power(&int(-1)).unwrap();
        assert_eq!(inv.multiply(&f), EgfSeries::one(5));
    }

    #[test]
    fn product_formula_exponentials() {
        let f = exp_x(5);
        assert_eq!(f.product_formula(&f), f);
    }

    #[test]
    fn product_formula_example_one() {
        // Involution numbers × Bell numbers.
        let involution =
            EgfSeries::from_coeffs([1, 1, 2, 4, 10, 26, 76].iter().map(|&v| int(v)).collect());
        let bell = exp_x_minus_one(6).exp().unwrap();
        let z = involution.product_formula(&bell);
        let expected = [1, 1, 4, 20, 150, 1352, 15428];
        for (n, a) in expected.iter().enumerate() {
            assert_eq!(*z.coeff(n), int(*a));
        }
    }

    #[test]
    fn product_formula_symmetric() {
        let f = EgfSeries::from_fn(10, |n| ratio(2 * n as i64 + 1, n as i64 + 2));
        let g = EgfSeries::from_fn(10, |n| ratio(-(5 + n as i64), 3));
        assert_eq!(f.product_formula(&g), g.product_formula(&f));
    }

    #[test]
    fn ordinary_round_trip() {
        let f = EgfSeries::from_fn(7, |n| ratio(n as i64 + 1, 3));
        assert_eq!(EgfSeries::from_ordinary(&f.to_ordinary()), f);
    }
}
