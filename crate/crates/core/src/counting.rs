//! The graph-counting series Z(L, V, λ) and its closed forms.
//!
//! A [`CountingProblem`] pairs the origin multipliers L with the vertex
//! strengths V. The coefficients A_n of Z = Σ A_n λⁿ/n! count bipartite
//! line-graphs with n labelled lines, weighted by L and V. Two
//! independent computation routes are provided (plus the graph
//! enumeration oracle in [`crate::graphs`]):
//!
//! * [`z_series_bell`] uses the factorization A_n = 𝔹_n(L)·𝔹_n(V),
//! * [`z_series_pf`] evaluates the double exponential through the
//!   product formula.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{factorial, int, pow, ratio, Rat};
use crate::bell::{complete_bell, modified_hermite, WeightSequence};
use crate::egf::EgfSeries;

/// The input data of the counting formula: L, V, and the working order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingProblem {
    origin_weights: WeightSequence,
    vertex_weights: WeightSequence,
    order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountingError {
    /// One of the two weight sequences stops short of the working order.
    WeightsTooShort {
        which: &'static str,
        requested: usize,
        available: usize,
    },
    /// `alternative_description` needs Z_0 = 1.
    ConstantTermNotOne,
    /// The Hermite route index M must be at least 1.
    InvalidHermiteOrder,
}

impl fmt::Display for CountingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountingError::WeightsTooShort {
                which,
                requested,
                available,
            } => write!(
                f,
                "{which} weights are defined up to {available} but order {requested} was requested"
            ),
            CountingError::ConstantTermNotOne => {
                write!(f, "the series must have constant term 1")
            }
            CountingError::InvalidHermiteOrder => write!(f, "the Hermite index M must be >= 1"),
        }
    }
}

impl core::error::Error for CountingError {}

impl CountingProblem {
    /// Both sequences must be defined up to `order`.
    pub fn new(
        origin_weights: WeightSequence,
        vertex_weights: WeightSequence,
        order: usize,
    ) -> Result<Self, CountingError> {
        if origin_weights.len() < order {
            return Err(CountingError::WeightsTooShort {
                which: "L",
                requested: order,
                available: origin_weights.len(),
            });
        }
        if vertex_weights.len() < order {
            return Err(CountingError::WeightsTooShort {
                which: "V",
                requested: order,
                available: vertex_weights.len(),
            });
        }
        Ok(CountingProblem {
            origin_weights,
            vertex_weights,
            order,
        })
    }

    pub fn origin_weights(&self) -> &WeightSequence {
        &self.origin_weights
    }

    pub fn vertex_weights(&self) -> &WeightSequence {
        &self.vertex_weights
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The same problem with L and V exchanged.
    pub fn swapped(&self) -> Self {
        CountingProblem {
            origin_weights: self.vertex_weights.clone(),
            vertex_weights: self.origin_weights.clone(),
            order: self.order,
        }
    }
}

/// Z via the factorization A_n = 𝔹_n(L)·𝔹_n(V), with A_0 = 1.
pub fn z_series_bell(p: &CountingProblem) -> EgfSeries {
    let l = complete_bell(p.origin_weights(), p.order()).expect("problem invariant");
    let v = complete_bell(p.vertex_weights(), p.order()).expect("problem invariant");
    EgfSeries::from_coeffs((0..=p.order()).map(|n| &l[n] * &v[n]).collect())
}

/// Z via exp(Σ L_m λ^m/m! d^m/dx^m)·exp(Σ V_n xⁿ/n!)|_{x=0}, i.e. the
/// product formula applied to the two exponentials. Must agree with
/// [`z_series_bell`] exactly.
pub fn z_series_pf(p: &CountingProblem) -> EgfSeries {
    let l = p
        .origin_weights()
        .egf_series(p.order())
        .expect("problem invariant")
        .exp()
        .expect("weight series has no constant term");
    let v = p
        .vertex_weights()
        .egf_series(p.order())
        .expect("problem invariant")
        .exp()
        .expect("weight series has no constant term");
    l.product_formula(&v)
}

/// The closed forms of the fifth worked example (ŵ = a + a†,
/// F(x) = e^{x^M/M!} for M = 1, 2, 3).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    Z1,
    Z2,
    Z3,
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedForm::Z1 => write!(f, "Z1"),
            ClosedForm::Z2 => write!(f, "Z2"),
            ClosedForm::Z3 => write!(f, "Z3"),
        }
    }
}

/// Formal expansion of the closed forms, built purely from the EGF
/// primitives:
///
/// * Z₁ = exp(2λ + λ²/2),
/// * Z₂ = (1−λ²)^{−1/2} exp(2λ²/(1−λ²)),
/// * Z₃ = exp(φ³λ³/6 − φ⁴λ⁶/8)·(1−φλ³)^{−1/2}·
///   ₂F₀(1/6, 5/6; −; 3λ⁶/(2(1−φλ³)³)) with φ = (1−√(1−4λ³))/λ³
///   expanded through the Catalan numbers.
///
/// Z₃ diverges as a numeric series; only its formal coefficients are ever
/// produced here.
pub fn closed_form_series(which: ClosedForm, order: usize) -> EgfSeries {
    match which {
        ClosedForm::Z1 => {
            // 2λ + λ²/2 has EGF coefficients (0, 2, 1).
            EgfSeries::from_fn(order, |n| match n {
                1 => int(2),
                2 => int(1),
                _ => int(0),
            })
            .exp()
            .expect("zero constant term")
        }
        ClosedForm::Z2 => {
            let lambda_sq = EgfSeries::monomial(order, 2, int(1));
            let one_minus = EgfSeries::one(order).sub(&lambda_sq);
            let prefactor = one_minus
                .rational_power(&ratio(-1, 2))
                .expect("constant term 1");
            let inner = lambda_sq
                .scale(&int(2))
                .multiply(&one_minus.rational_power(&int(-1)).expect("constant term 1"));
            prefactor.multiply(&inner.exp().expect("zero constant term"))
        }
        ClosedForm::Z3 => {
            let phi = catalan_phi(order);
            let lambda3 = EgfSeries::monomial(order, 3, int(1));
            let lambda6 = EgfSeries::monomial(order, 6, int(1));
            let phi2 = phi.multiply(&phi);
            let phi3 = phi2.multiply(&phi);
            let phi4 = phi2.multiply(&phi2);
            // exp(φ³λ³/6 − φ⁴λ⁶/8)
            let arg = phi3
                .multiply(&lambda3)
                .scale(&ratio(1, 6))
                .sub(&phi4.multiply(&lambda6).scale(&ratio(1, 8)));
            let exp_part = arg.exp().expect("zero constant term");
            // (1 − φλ³)^{−1/2} and the ₂F₀ argument 3λ⁶/(2(1−φλ³)³)
            let denom = EgfSeries::one(order).sub(&phi.multiply(&lambda3));
            let prefactor = denom
                .rational_power(&ratio(-1, 2))
                .expect("constant term 1");
            let hyper_arg = lambda6
                .scale(&ratio(3, 2))
                .multiply(&denom.rational_power(&int(-3)).expect("constant term 1"));
            let hyper = hypergeometric_2f0(&ratio(1, 6), &ratio(5, 6), order)
                .compose(&hyper_arg)
                .expect("zero constant term");
            exp_part.multiply(&prefactor).multiply(&hyper)
        }
    }
}

/// φ(λ) = (1−√(1−4λ³))/λ³ = 2·Σ_k C_k λ^{3k} with C_k the Catalan
/// numbers — the expansion that avoids dividing by λ³.
fn catalan_phi(order: usize) -> EgfSeries {
    let mut ordinary = alloc::vec![Rat::zero(); order + 1];
    let mut catalan = Rat::one();
    for k in 0.. {
        if 3 * k > order {
            break;
        }
        ordinary[3 * k] = int(2) * &catalan;
        // C_{k+1} = C_k · 2(2k+1)/(k+2)
        catalan = catalan * int(2 * (2 * k as i64 + 1)) / int(k as i64 + 2);
    }
    EgfSeries::from_ordinary(&ordinary)
}

/// ₂F₀(a, b; −; u) = Σ_k (a)_k (b)_k u^k / k! as a formal series in u.
fn hypergeometric_2f0(a: &Rat, b: &Rat, order: usize) -> EgfSeries {
    let mut ordinary = Vec::with_capacity(order + 1);
    let mut term = Rat::one();
    for k in 0..=order {
        ordinary.push(term.clone());
        let kk = int(k as i64);
        term = term * (a + &kk) * (b + &kk) / int(k as i64 + 1);
    }
    EgfSeries::from_ordinary(&ordinary)
}

/// The Z series for ŵ = a + a†, L = δ_{m,M}, computed directly from the
/// modified Hermite values: A_{Mn} = (Mn)!/((M!)ⁿ n!)·h_{Mn}(2) and zero
/// at indices M does not divide.
pub fn hermite_route_series(m: usize, order: usize) -> Result<EgfSeries, CountingError> {
    if m < 1 {
        return Err(CountingError::InvalidHermiteOrder);
    }
    let two = int(2);
    Ok(EgfSeries::from_fn(order, |k| {
        if k % m != 0 {
            return Rat::zero();
        }
        let n = k / m;
        let scale = Rat::from_integer(factorial(k))
            / (pow(&Rat::from_integer(factorial(m)), n) * Rat::from_integer(factorial(n)));
        scale * modified_hermite(k, &two)
    }))
}

/// Read a counting problem back off a closed-form series: with
/// L_m = δ_{m,1} every 𝔹_n(L) = 1, so V must satisfy 𝔹_n(V) = A_n —
/// which makes V the formal log of Z. Requires Z_0 = 1.
pub fn alternative_description(z: &EgfSeries) -> Result<CountingProblem, CountingError> {
    let log = z.log().map_err(|_| CountingError::ConstantTermNotOne)?;
    let order = z.order();
    let origin = WeightSequence::from_fn(order, |n| if n == 1 { Rat::one() } else { Rat::zero() })
        .with_label("delta:1");
    let vertex = WeightSequence::new(log.coeffs()[1..].to_vec());
    CountingProblem::new(origin, vertex, order)
}
