//! Bell polynomials and the named sequence families built from them.
//!
//! A [`WeightSequence`] holds the h_1, h_2, ... data of a function
//! h(x) = Σ_{n≥1} h_n xⁿ/n! (index 0 is absent by convention). The partial
//! Bell polynomial 𝔹_{n,k}(h) is the weighted count of partitions of an
//! n-set into k blocks, a block of size j weighing h_j; the complete Bell
//! polynomial is the row sum.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{binomial, binomial_row, factorial, int, pow, ratio, Rat};
use crate::egf::EgfSeries;

/// Weights indexed from 1 up to some working order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSequence {
    weights: Vec<Rat>,
    label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BellError {
    /// An operation was asked for order N but the weights stop earlier.
    OrderExceedsWeights { requested: usize, available: usize },
    /// The Hermite family index M must be at least 1.
    InvalidHermiteOrder,
}

impl fmt::Display for BellError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BellError::OrderExceedsWeights {
                requested,
                available,
            } => write!(
                f,
                "order {requested} requested but weights are only defined up to {available}"
            ),
            BellError::InvalidHermiteOrder => write!(f, "the Hermite index M must be >= 1"),
        }
    }
}

impl core::error::Error for BellError {}

/// Errors from the named-preset registry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresetError {
    Unknown(String),
    BadParameter { preset: String, detail: String },
}

impl fmt::Display for PresetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresetError::Unknown(name) => {
                write!(f, "unknown preset `{name}`; valid presets: ")?;
                for (i, p) in PRESET_NAMES.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            PresetError::BadParameter { preset, detail } => {
                write!(f, "bad parameter for preset `{preset}`: {detail}")
            }
        }
    }
}

impl core::error::Error for PresetError {}

/// The named presets understood by [`WeightSequence::preset`]. The
/// parameterised ones take `name:INT`.
pub const PRESET_NAMES: &[&str] = &[
    "ones",
    "linear",
    "factorial",
    "no-singletons",
    "even-linear",
    "delta:M",
    "one-plus-delta:M",
    "gamma-ratio:r",
];

impl WeightSequence {
    /// Weights h_1..h_N given as a list ordered by index.
    pub fn new(weights: Vec<Rat>) -> Self {
        WeightSequence {
            weights,
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Build h_1..h_order from a function of the (1-based) index.
    pub fn from_fn(order: usize, f: impl Fn(usize) -> Rat) -> Self {
        Self::new((1..=order).map(f).collect())
    }

    /// Largest index with a defined weight.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// h_n for 1 ≤ n ≤ len. Panics outside that range.
    pub fn get(&self, n: usize) -> &Rat {
        assert!(n >= 1, "weights are indexed from 1");
        &self.weights[n - 1]
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// The series h(x) = Σ_{n=1..order} h_n xⁿ/n! as an [`EgfSeries`].
    pub fn egf_series(&self, order: usize) -> Result<EgfSeries, BellError> {
        if order > self.len() {
            return Err(BellError::OrderExceedsWeights {
                requested: order,
                available: self.len(),
            });
        }
        Ok(EgfSeries::from_fn(order, |n| {
            if n == 0 {
                Rat::zero()
            } else {
                self.weights[n - 1].clone()
            }
        }))
    }

    /// Look up a named preset and instantiate it to the given order.
    ///
    /// Parameterised presets are written `delta:3`, `one-plus-delta:2`,
    /// `gamma-ratio:2`.
    pub fn preset(spec: &str, order: usize) -> Result<Self, PresetError> {
        let (name, param) = match spec.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (spec, None),
        };
        let parse_param = |min: usize| -> Result<usize, PresetError> {
            let raw = param.ok_or_else(|| PresetError::BadParameter {
                preset: name.to_owned(),
                detail: "missing integer parameter".to_owned(),
            })?;
            let value: usize = raw.parse().map_err(|_| PresetError::BadParameter {
                preset: name.to_owned(),
                detail: format!("`{raw}` is not a nonnegative integer"),
            })?;
            if value < min {
                return Err(PresetError::BadParameter {
                    preset: name.to_owned(),
                    detail: format!("parameter must be >= {min}"),
                });
            }
            Ok(value)
        };
        let reject_param = || -> Result<(), PresetError> {
            if param.is_some() {
                Err(PresetError::Unknown(spec.to_owned()))
            } else {
                Ok(())
            }
        };
        let seq = match name {
            "ones" => {
                reject_param()?;
                Self::from_fn(order, |_| int(1))
            }
            "linear" => {
                reject_param()?;
                Self::from_fn(order, |n| int(n as i64))
            }
            "factorial" => {
                reject_param()?;
                Self::from_fn(order, |n| Rat::from_integer(factorial(n)))
            }
            "no-singletons" => {
                reject_param()?;
                Self::from_fn(order, |n| if n == 1 { int(0) } else { int(1) })
            }
            "even-linear" => {
                reject_param()?;
                Self::from_fn(order, |n| if n % 2 == 0 { int(n as i64) } else { int(0) })
            }
            "delta" => {
                let m = parse_param(1)?;
                Self::from_fn(order, |n| if n == m { int(1) } else { int(0) })
            }
            "one-plus-delta" => {
                let m = parse_param(2)?;
                Self::from_fn(order, |n| if n == 1 || n == m { int(1) } else { int(0) })
            }
            "gamma-ratio" => {
                let r = parse_param(2)?;
                Self::from_fn(order, |n| Rat::from_integer(gamma_ratio_product(r, n)))
            }
            _ => return Err(PresetError::Unknown(spec.to_owned())),
        };
        Ok(seq.with_label(spec))
    }
}

/// Π_{j=0}^{n−1} (1 + (r−1)j), the integer form of
/// (r−1)ⁿ·Γ(n + 1/(r−1)) / Γ(1/(r−1)).
pub(crate) fn gamma_ratio_product(r: usize, n: usize) -> num_bigint::BigInt {
    let mut acc = num_bigint::BigInt::one();
    for j in 0..n {
        acc *= num_bigint::BigInt::from(1 + (r - 1) * j);
    }
    acc
}

/// The partial Bell polynomial table 𝔹_{n,k}(h) for 1 ≤ k ≤ n ≤ N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BellTriangle {
    rows: Vec<Vec<Rat>>,
}

impl BellTriangle {
    /// Number of rows N.
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Row n as the slice [𝔹_{n,1}, ..., 𝔹_{n,n}]. 1-based.
    pub fn row(&self, n: usize) -> &[Rat] {
        &self.rows[n - 1]
    }

    /// 𝔹_{n,k}. 1-based in both indices.
    pub fn value(&self, n: usize, k: usize) -> &Rat {
        &self.rows[n - 1][k - 1]
    }

    /// Row sums 𝔹_n(h) = Σ_k 𝔹_{n,k}(h), with 𝔹_0 = 1 prepended.
    pub fn row_sums(&self) -> Vec<Rat> {
        let mut sums = vec![Rat::one()];
        for row in &self.rows {
            sums.push(row.iter().fold(Rat::zero(), |acc, v| acc + v));
        }
        sums
    }

    /// 𝔹_n(h, u) = Σ_k u^k 𝔹_{n,k}(h).
    pub fn eval_row(&self, n: usize, u: &Rat) -> Rat {
        if n == 0 {
            return Rat::one();
        }
        let mut acc = Rat::zero();
        let mut upow = u.clone();
        for v in self.row(n) {
            acc += v * &upow;
            upow *= u;
        }
        acc
    }
}

/// Compute the table 𝔹_{n,k}(h) for n ≤ order via the block-size
/// recurrence 𝔹_{n,k} = Σ_j C(n−1, j−1) h_j 𝔹_{n−j, k−1}.
pub fn bell_triangle(h: &WeightSequence, order: usize) -> Result<BellTriangle, BellError> {
    if order > h.len() {
        return Err(BellError::OrderExceedsWeights {
            requested: order,
            available: h.len(),
        });
    }
    // table[n][k], 0 ≤ k ≤ n ≤ order
    let mut table: Vec<Vec<Rat>> = Vec::with_capacity(order + 1);
    table.push(vec![Rat::one()]);
    for n in 1..=order {
        let mut row = vec![Rat::zero(); n + 1];
        for k in 1..=n {
            let mut acc = Rat::zero();
            for j in 1..=(n - k + 1) {
                let b = &table[n - j];
                if k - 1 <= n - j && !b[k - 1].is_zero() && !h.get(j).is_zero() {
                    acc += Rat::from_integer(binomial(n - 1, j - 1)) * h.get(j) * &b[k - 1];
                }
            }
            row[k] = acc;
        }
        table.push(row);
    }
    Ok(BellTriangle {
        rows: table.into_iter().skip(1).map(|r| r[1..].to_vec()).collect(),
    })
}

/// Complete Bell polynomials B_0(h)..B_N(h), with B_0 = 1.
///
/// Independent of [`EgfSeries::exp`]: the two routes are cross-checked in
/// the test suites.
pub fn complete_bell(h: &WeightSequence, order: usize) -> Result<Vec<Rat>, BellError> {
    Ok(bell_triangle(h, order)?.row_sums())
}

/// Two-variable Hermite polynomials H_n^{(M)}(x,y) for n = 0..=order,
/// by the closed-form sum H_n = n! Σ_r x^{n−Mr} y^r / ((n−Mr)! r!).
/// They satisfy Σ H_n tⁿ/n! = e^{xt + yt^M}.
pub fn hermite_kdf(m: usize, x: &Rat, y: &Rat, order: usize) -> Result<Vec<Rat>, BellError> {
    if m < 1 {
        return Err(BellError::InvalidHermiteOrder);
    }
    let mut out = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = Rat::zero();
        let nfac = Rat::from_integer(factorial(n));
        for r in 0..=(n / m) {
            let term = pow(x, n - m * r) * pow(y, r)
                / Rat::from_integer(factorial(n - m * r))
                / Rat::from_integer(factorial(r));
            acc += term;
        }
        out.push(nfac * acc);
    }
    Ok(out)
}

/// The involution numbers H_n^{(2)}(1, 1/2): partitions into singletons
/// and pairs.
pub fn involution_numbers(order: usize) -> Vec<Rat> {
    hermite_kdf(2, &int(1), &ratio(1, 2), order).expect("M=2 is valid")
}

/// Idempotent polynomial I_n(t) = Σ_k C(n,k) k^{n−k} t^k, with 0⁰ = 1.
pub fn idempotent_polynomial(n: usize, t: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for k in 0..=n {
        // k^{n−k} with 0⁰ = 1
        let kpow = if n == k {
            Rat::one()
        } else if k == 0 {
            Rat::zero()
        } else {
            pow(&int(k as i64), n - k)
        };
        if !kpow.is_zero() {
            acc += Rat::from_integer(binomial(n, k)) * kpow * pow(t, k);
        }
    }
    acc
}

/// Idempotent numbers I_n = I_n(1), n = 0..=order.
pub fn idempotent_numbers(order: usize) -> Vec<Rat> {
    (0..=order)
        .map(|n| idempotent_polynomial(n, &int(1)))
        .collect()
}

/// I_n^{(2)} = Σ_k C(n,k) (−1)^k I_k(1/2) I_{n−k}(1/2): the EGF
/// coefficients of exp(x·sinh x) = exp(−(x/2)e^{−x})·exp((x/2)e^x),
/// each factor an idempotent-polynomial generating function. Vanishes
/// at odd n.
pub fn idempotent_pair_sequence(order: usize) -> Vec<Rat> {
    let half = ratio(1, 2);
    let at_half: Vec<Rat> = (0..=order)
        .map(|k| idempotent_polynomial(k, &half))
        .collect();
    (0..=order)
        .map(|n| {
            let binoms = binomial_row(n);
            let mut acc = Rat::zero();
            for k in 0..=n {
                let sign = if k % 2 == 0 { int(1) } else { int(-1) };
                acc += sign * &binoms[k] * &at_half[k] * &at_half[n - k];
            }
            acc
        })
        .collect()
}

/// Modified Hermite polynomial h_n(x): the EGF-in-t coefficients of
/// exp(x·t + t²/2), via the recurrence h_{n+1} = x·h_n + n·h_{n−1}.
pub fn modified_hermite(n: usize, x: &Rat) -> Rat {
    let mut prev = Rat::one();
    if n == 0 {
        return prev;
    }
    let mut curr = x.clone();
    for k in 1..n {
        let next = x * &curr + int(k as i64) * &prev;
        prev = curr;
        curr = next;
    }
    curr
}

/// h_0(x)..h_order(x).
pub fn modified_hermite_sequence(order: usize, x: &Rat) -> Vec<Rat> {
    (0..=order).map(|n| modified_hermite(n, x)).collect()
}

/// Bell numbers B_0..B_order.
pub fn bell_numbers(order: usize) -> Vec<Rat> {
    complete_bell(
        &WeightSequence::preset("ones", order).expect("builtin"),
        order,
    )
    .expect("order matches weights")
}

/// Restricted Bell numbers: partitions without singleton blocks.
pub fn restricted_bell_numbers(order: usize) -> Vec<Rat> {
    complete_bell(
        &WeightSequence::preset("no-singletons", order).expect("builtin"),
        order,
    )
    .expect("order matches weights")
}
