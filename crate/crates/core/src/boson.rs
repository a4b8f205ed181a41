//! Normal ordering of boson words over the commutation relation
//! [a, a†] = 1.
//!
//! Three layers live here:
//!
//! * a brute-force rewrite engine ([`normal_order_word`]) that is the
//!   ground truth for any finite word,
//! * an independent polynomial-representation check
//!   ([`bargmann_check`]: a ↦ d/dz, a† ↦ z acting on monomials),
//! * the closed-form kernels ([`gw_kernel_analytic`]) for the word shapes
//!   a†a, (a†)^r a and a + a†, together with the log-form vertex operators
//!   extracted from any kernel.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial_row, falling, Rat};
use crate::bell::{gamma_ratio_product, WeightSequence};

/// A single generator: a† or a.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BosonOp {
    /// The creation operator a†.
    Create,
    /// The annihilation operator a.
    Annihilate,
}

/// The operator ŵ whose exponential gets normally ordered: either a
/// finite word over {a, a†} or the sum a + a†.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordSpec {
    Word(Vec<BosonOp>),
    /// The operator a + a†.
    Sum,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BosonError {
    /// Words must have length ≥ 1.
    EmptyWord,
    /// No closed-form kernel is implemented for this word shape.
    UnsupportedAnalyticKernel,
}

impl fmt::Display for BosonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BosonError::EmptyWord => write!(f, "boson words must contain at least one operator"),
            BosonError::UnsupportedAnalyticKernel => write!(
                f,
                "no closed-form kernel for this word shape (supported: \"ad a\", \
                 \"ad^r a\" with r >= 2, \"a+ad\"); use the brute-force route \
                 `normal_order_exp` instead"
            ),
        }
    }
}

impl core::error::Error for BosonError {}

impl WordSpec {
    /// A finite word, left to right. Errors on the empty word.
    pub fn word(ops: Vec<BosonOp>) -> Result<Self, BosonError> {
        if ops.is_empty() {
            return Err(BosonError::EmptyWord);
        }
        Ok(WordSpec::Word(ops))
    }

    /// (a†)^r a^s.
    pub fn powers(r: usize, s: usize) -> Result<Self, BosonError> {
        let mut ops = vec![BosonOp::Create; r];
        ops.resize(r + s, BosonOp::Annihilate);
        Self::word(ops)
    }

    /// The excess e(w) = #a† − #a of a word; `None` for the sum mode.
    pub fn excess(&self) -> Option<i64> {
        match self {
            WordSpec::Word(ops) => Some(word_excess(ops)),
            WordSpec::Sum => None,
        }
    }
}

/// #a† − #a.
pub fn word_excess(ops: &[BosonOp]) -> i64 {
    ops.iter()
        .map(|op| match op {
            BosonOp::Create => 1i64,
            BosonOp::Annihilate => -1i64,
        })
        .sum()
}

/// A normally ordered polynomial Σ c_{pq} (a†)^p a^q with exact rational
/// coefficients, keyed by (p, q). Zero coefficients are never stored, so
/// structural equality is semantic equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BosonPolynomial {
    terms: BTreeMap<(usize, usize), Rat>,
}

impl BosonPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, Rat::one())
    }

    /// c·(a†)^p a^q.
    pub fn monomial(p: usize, q: usize, c: Rat) -> Self {
        let mut poly = Self::default();
        poly.add_term(p, q, c);
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add c·(a†)^p a^q, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, p: usize, q: usize, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((p, q)).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(p, q));
        }
    }

    /// The coefficient of (a†)^p a^q (zero if absent).
    pub fn coeff(&self, p: usize, q: usize) -> Rat {
        self.terms.get(&(p, q)).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in lexicographic (p, q) order.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Rat)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(p, q), c) in &other.terms {
            out.add_term(p, q, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BosonPolynomial {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Product with a† and a treated as *commuting* symbols: the algebra
    /// of the double-dot interior, plain bivariate multiplication.
    pub fn commuting_mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&(p1, q1), c1) in &self.terms {
            for (&(p2, q2), c2) in &other.terms {
                out.add_term(p1 + p2, q1 + q2, c1 * c2);
            }
        }
        out
    }

    /// Evaluate with a ↦ z and a† ↦ z̄ (independent exact rationals).
    pub fn substitute(&self, z: &Rat, z_bar: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(p, q), c) in &self.terms {
            acc += c * crate::arith::pow(z_bar, p) * crate::arith::pow(z, q);
        }
        acc
    }

    /// If every term has the same excess p − q, return it (`None` for the
    /// zero polynomial or mixed excesses).
    pub fn uniform_excess(&self) -> Option<i64> {
        let mut iter = self.terms.keys();
        let first = iter.next()?;
        let e = first.0 as i64 - first.1 as i64;
        for k in iter {
            if k.0 as i64 - k.1 as i64 != e {
                return None;
            }
        }
        Some(e)
    }

    /// Image of the monomial z^k under the polynomial in the Bargmann
    /// representation a ↦ d/dz, a† ↦ z: each term (p, q) maps z^k to
    /// k(k−1)···(k−q+1)·z^{k−q+p}. Returned as exponent ↦ coefficient.
    pub fn bargmann_image(&self, k: usize) -> BTreeMap<usize, Rat> {
        let mut out: BTreeMap<usize, Rat> = BTreeMap::new();
        for (&(p, q), c) in &self.terms {
            if q > k {
                continue;
            }
            let coeff = c * Rat::from_integer(falling(k, q));
            let entry = out.entry(k - q + p).or_insert_with(Rat::zero);
            *entry += coeff;
            if entry.is_zero() {
                out.remove(&(k - q + p));
            }
        }
        out
    }
}

/// Normal-order a finite word by brute-force rewriting: repeatedly replace
/// the leftmost "a a†" factor by "a†a + 1". Intermediate states are an
/// integer-weighted multiset of words; each step removes one inversion, so
/// the loop terminates in the unique normal form.
pub fn normal_order_word(word: &[BosonOp]) -> BosonPolynomial {
    let mut result = BosonPolynomial::zero();
    let mut pending: BTreeMap<Vec<BosonOp>, BigInt> = BTreeMap::new();
    pending.insert(word.to_vec(), BigInt::one());
    while let Some((w, c)) = pending.pop_first() {
        match leftmost_inversion(&w) {
            None => {
                let p = w.iter().filter(|op| **op == BosonOp::Create).count();
                result.add_term(p, w.len() - p, Rat::from_integer(c));
            }
            Some(i) => {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                let mut contracted = w;
                contracted.drain(i..=i + 1);
                *pending.entry(swapped).or_insert_with(BigInt::zero) += &c;
                *pending.entry(contracted).or_insert_with(BigInt::zero) += c;
            }
        }
    }
    result
}

fn leftmost_inversion(w: &[BosonOp]) -> Option<usize> {
    w.windows(2)
        .position(|pair| pair[0] == BosonOp::Annihilate && pair[1] == BosonOp::Create)
}

/// The kernel data of 𝒩(e^{xŵ}): per order n the normally ordered g_n
/// with 𝒩(e^{xŵ}) = :Σ g_n xⁿ/n!:, together with the log form v_n giving
/// :exp(Σ v_n xⁿ/n!): — the vertex operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelSeries {
    order: usize,
    g: Vec<BosonPolynomial>,
    v: Vec<BosonPolynomial>,
}

impl KernelSeries {
    fn from_g(g: Vec<BosonPolynomial>) -> Self {
        let v = poly_series_log(&g);
        KernelSeries {
            order: g.len() - 1,
            g,
            v,
        }
    }

    fn from_v(v: Vec<BosonPolynomial>) -> Self {
        let g = poly_series_exp(&v);
        KernelSeries {
            order: v.len() - 1,
            g,
            v,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// g_n, for n ≤ order.
    pub fn g(&self, n: usize) -> &BosonPolynomial {
        &self.g[n]
    }

    /// v_n (v_0 is identically zero), for n ≤ order.
    pub fn v(&self, n: usize) -> &BosonPolynomial {
        &self.v[n]
    }

    /// Recompute exp(v) under the commuting product and compare with g:
    /// the structural invariant tying the two forms together.
    pub fn exp_log_consistent(&self) -> bool {
        poly_series_exp(&self.v) == self.g
    }
}

/// exp of a series with polynomial coefficients (v_0 must be zero):
/// g_{n+1} = Σ_k C(n,k) v_{k+1} g_{n−k} under the commuting product.
fn poly_series_exp(v: &[BosonPolynomial]) -> Vec<BosonPolynomial> {
    debug_assert!(v[0].is_zero(), "exp needs a vanishing order-0 term");
    let order = v.len() - 1;
    let mut g = vec![BosonPolynomial::zero(); order + 1];
    g[0] = BosonPolynomial::one();
    for n in 0..order {
        let binoms = binomial_row(n);
        let mut acc = BosonPolynomial::zero();
        for k in 0..=n {
            if !v[k + 1].is_zero() && !g[n - k].is_zero() {
                acc = acc.add(&v[k + 1].commuting_mul(&g[n - k]).scale(&binoms[k]));
            }
        }
        g[n + 1] = acc;
    }
    g
}

/// Inverse of [`poly_series_exp`] (g_0 must be one):
/// v_{n+1} = g_{n+1} − Σ_{k<n} C(n,k) v_{k+1} g_{n−k}.
fn poly_series_log(g: &[BosonPolynomial]) -> Vec<BosonPolynomial> {
    debug_assert!(g[0] == BosonPolynomial::one(), "log needs g_0 = 1");
    let order = g.len() - 1;
    let mut v = vec![BosonPolynomial::zero(); order + 1];
    for n in 0..order {
        let binoms = binomial_row(n);
        let mut acc = g[n + 1].clone();
        for k in 0..n {
            if !v[k + 1].is_zero() && !g[n - k].is_zero() {
                acc = acc.add(&v[k + 1].commuting_mul(&g[n - k]).scale(&-binoms[k].clone()));
            }
        }
        v[n + 1] = acc;
    }
    v
}

/// Compute 𝒩(e^{xŵ}) order by order with the rewrite engine:
/// g_n is the normal form of ŵⁿ (for the sum mode, (a+a†)ⁿ is expanded
/// into its 2ⁿ words first). The v_n follow by the formal log.
pub fn normal_order_exp(w: &WordSpec, order: usize) -> KernelSeries {
    let mut g = Vec::with_capacity(order + 1);
    g.push(BosonPolynomial::one());
    match w {
        WordSpec::Word(ops) => {
            let mut power: Vec<BosonOp> = Vec::new();
            for _ in 1..=order {
                power.extend_from_slice(ops);
                g.push(normal_order_word(&power));
            }
        }
        WordSpec::Sum => {
            // 2ⁿ words per order; the expansion itself bounds n well
            // below the shift width.
            assert!(order < 63, "sum-mode expansion of 2^n words is capped");
            for n in 1..=order {
                let mut acc = BosonPolynomial::zero();
                for bits in 0u64..(1 << n) {
                    let word: Vec<BosonOp> = (0..n)
                        .map(|i| {
                            if bits >> i & 1 == 1 {
                                BosonOp::Create
                            } else {
                                BosonOp::Annihilate
                            }
                        })
                        .collect();
                    acc = acc.add(&normal_order_word(&word));
                }
                g.push(acc);
            }
        }
    }
    KernelSeries::from_g(g)
}

/// The closed-form kernels:
///
/// * ŵ = a†a:       v_n = a†a for every n ≥ 1,
/// * ŵ = (a†)^r a:  v_n = Π_{j<n}(1+(r−1)j) · (a†)^{(r−1)n+1} a,
/// * ŵ = a + a†:    v_1 = a + a†, v_2 = 1, v_{n>2} = 0,
///
/// with g reconstructed by the commuting exp. Any other shape is refused.
pub fn gw_kernel_analytic(w: &WordSpec, order: usize) -> Result<KernelSeries, BosonError> {
    let mut v = vec![BosonPolynomial::zero(); order + 1];
    match analytic_shape(w) {
        Some(AnalyticShape::NumberOp) => {
            for vn in v.iter_mut().skip(1) {
                *vn = BosonPolynomial::monomial(1, 1, Rat::one());
            }
        }
        Some(AnalyticShape::CreationPower(r)) => {
            for (n, vn) in v.iter_mut().enumerate().skip(1) {
                *vn = BosonPolynomial::monomial(
                    (r - 1) * n + 1,
                    1,
                    Rat::from_integer(gamma_ratio_product(r, n)),
                );
            }
        }
        Some(AnalyticShape::Position) => {
            if order >= 1 {
                let mut v1 = BosonPolynomial::monomial(1, 0, Rat::one());
                v1.add_term(0, 1, Rat::one());
                v[1] = v1;
            }
            if order >= 2 {
                v[2] = BosonPolynomial::one();
            }
        }
        None => return Err(BosonError::UnsupportedAnalyticKernel),
    }
    Ok(KernelSeries::from_v(v))
}

enum AnalyticShape {
    /// a†a
    NumberOp,
    /// (a†)^r a with r ≥ 2
    CreationPower(usize),
    /// a + a†
    Position,
}

fn analytic_shape(w: &WordSpec) -> Option<AnalyticShape> {
    match w {
        WordSpec::Sum => Some(AnalyticShape::Position),
        WordSpec::Word(ops) => {
            let r = ops.iter().take_while(|op| **op == BosonOp::Create).count();
            if r + 1 == ops.len() && ops[r] == BosonOp::Annihilate && r >= 1 {
                if r == 1 {
                    Some(AnalyticShape::NumberOp)
                } else {
                    Some(AnalyticShape::CreationPower(r))
                }
            } else {
                None
            }
        }
    }
}

/// The vertex-strength sequence V_n^{(ŵ)}(z, z̄) for n = 1..=order:
/// the v_n of the kernel with a ↦ z, a† ↦ z̄ substituted. Uses the
/// closed-form kernel when the shape allows, the rewrite engine
/// otherwise. The coherent-state specialization of the formulas is
/// z = z̄ = 1.
pub fn v_sequence(w: &WordSpec, z: (&Rat, &Rat), order: usize) -> WeightSequence {
    let kernel = match gw_kernel_analytic(w, order) {
        Ok(k) => k,
        Err(_) => normal_order_exp(w, order),
    };
    WeightSequence::new(
        (1..=order)
            .map(|n| kernel.v(n).substitute(z.0, z.1))
            .collect(),
    )
}

/// Check a claimed normal form against the Bargmann representation
/// a ↦ d/dz, a† ↦ multiplication by z: true iff ŵ and P act identically
/// on every monomial z^k with k ≤ degree. Exact and fully independent of
/// the rewrite engine.
pub fn bargmann_check(w: &WordSpec, p: &BosonPolynomial, degree: usize) -> bool {
    for k in 0..=degree {
        if word_bargmann_image(w, k) != p.bargmann_image(k) {
            return false;
        }
    }
    true
}

fn word_bargmann_image(w: &WordSpec, k: usize) -> BTreeMap<usize, Rat> {
    let mut state: BTreeMap<usize, Rat> = BTreeMap::new();
    state.insert(k, Rat::one());
    let apply = |state: &BTreeMap<usize, Rat>, op: BosonOp| {
        let mut next: BTreeMap<usize, Rat> = BTreeMap::new();
        for (&deg, c) in state {
            match op {
                BosonOp::Create => {
                    *next.entry(deg + 1).or_insert_with(Rat::zero) += c;
                }
                BosonOp::Annihilate => {
                    if deg > 0 {
                        let entry = next.entry(deg - 1).or_insert_with(Rat::zero);
                        *entry += c * crate::arith::int(deg as i64);
                        if entry.is_zero() {
                            next.remove(&(deg - 1));
                        }
                    }
                }
            }
        }
        next
    };
    match w {
        WordSpec::Word(ops) => {
            // Operators act right to left.
            for op in ops.iter().rev() {
                state = apply(&state, *op);
            }
            state
        }
        WordSpec::Sum => {
            let mut out = apply(&state, BosonOp::Create);
            for (deg, c) in apply(&state, BosonOp::Annihilate) {
                let entry = out.entry(deg).or_insert_with(Rat::zero);
                *entry += c;
                if entry.is_zero() {
                    out.remove(&deg);
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use BosonOp::{Annihilate as A, Create as C};

    #[test]
    fn commutator_itself() {
        // a a† = a†a + 1
        let p = normal_order_word(&[A, C]);
        let mut expected = BosonPolynomial::monomial(1, 1, int(1));
        expected.add_term(0, 0, int(1));
        assert_eq!(p, expected);
    }

    #[test]
    fn number_operator_powers_are_stirling() {
        // (a†a)² = (a†)²a² + a†a; (a†a)³ = (a†)³a³ + 3(a†)²a² + a†a.
        let sq = normal_order_word(&[C, A, C, A]);
        assert_eq!(sq.coeff(2, 2), int(1));
        assert_eq!(sq.coeff(1, 1), int(1));
        assert_eq!(sq.terms().count(), 2);

        let cube = normal_order_word(&[C, A, C, A, C, A]);
        assert_eq!(cube.coeff(3, 3), int(1));
        assert_eq!(cube.coeff(2, 2), int(3));
        assert_eq!(cube.coeff(1, 1), int(1));
        assert_eq!(cube.terms().count(), 3);
    }

    #[test]
    fn excess_is_conserved() {
        let words: [&[BosonOp]; 4] = [
            &[A, C],
            &[A, A, C, C],
            &[C, A, A, C, A],
            &[A, C, A, C, C, A],
        ];
        for word in words {
            let p = normal_order_word(word);
            assert_eq!(p.uniform_excess(), Some(word_excess(word)), "{word:?}");
        }
    }

    #[test]
    fn kernel_of_number_operator_is_stirling_triangle() {
        let w = WordSpec::powers(1, 1).unwrap();
        let kernel = normal_order_exp(&w, 4);
        // g_2 = (a†)²a² + a†a; compare against :exp[a†a(e^x−1)]: via the
        // analytic route.
        assert_eq!(kernel.g(2).coeff(2, 2), int(1));
        assert_eq!(kernel.g(2).coeff(1, 1), int(1));
        let analytic = gw_kernel_analytic(&w, 4).unwrap();
        assert_eq!(kernel, analytic);
    }

    #[test]
    fn kernel_of_sum_matches_heisenberg_form() {
        // :e^{x²/2} e^{x(a+a†)}: — v_1 = a+a†, v_2 = 1, rest zero.
        let brute = normal_order_exp(&WordSpec::Sum, 4);
        let analytic = gw_kernel_analytic(&WordSpec::Sum, 4).unwrap();
        assert_eq!(brute, analytic);
        assert!(brute.v(3).is_zero());
        assert!(brute.v(4).is_zero());
        assert_eq!(brute.v(2), &BosonPolynomial::one());
    }

    #[test]
    fn squeezed_word_vertex_values() {
        // ŵ = (a†)²a: V_n(1,1) = n! — so 1, 2, 6 at n = 1..3.
        let w = WordSpec::powers(2, 1).unwrap();
        let kernel = normal_order_exp(&w, 3);
        let one = int(1);
        for (n, expected) in [(1usize, 1i64), (2, 2), (3, 6)] {
            assert_eq!(kernel.v(n).substitute(&one, &one), int(expected));
        }
    }

    #[test]
    fn analytic_vertex_operators() {
        // a†a: v_n = a†a for every n.
        let k = gw_kernel_analytic(&WordSpec::powers(1, 1).unwrap(), 5).unwrap();
        for n in 1..=5 {
            assert_eq!(k.v(n), &BosonPolynomial::monomial(1, 1, int(1)));
        }
        // (a†)²a: coefficient n!.
        let k2 = gw_kernel_analytic(&WordSpec::powers(2, 1).unwrap(), 4).unwrap();
        for n in 1..=4 {
            assert_eq!(
                k2.v(n),
                &BosonPolynomial::monomial(n + 1, 1, Rat::from_integer(crate::arith::factorial(n)))
            );
        }
        // a+a†: V = 2, 1, 0, 0 at z = z̄ = 1.
        let ks = gw_kernel_analytic(&WordSpec::Sum, 4).unwrap();
        let one = int(1);
        let vs: Vec<Rat> = (1..=4).map(|n| ks.v(n).substitute(&one, &one)).collect();
        assert_eq!(vs, [2, 1, 0, 0].map(int).to_vec());
    }

    #[test]
    fn analytic_rejects_general_words() {
        let err = gw_kernel_analytic(&WordSpec::powers(2, 2).unwrap(), 3).unwrap_err();
        assert_eq!(err, BosonError::UnsupportedAnalyticKernel);
        let msg = alloc::format!("{err}");
        assert!(msg.contains("normal_order_exp"));
    }

    #[test]
    fn v_sequence_examples() {
        let one = int(1);
        let z = (&one, &one);
        let nums = v_sequence(&WordSpec::powers(1, 1).unwrap(), z, 5);
        assert_eq!(nums.weights(), &[int(1), int(1), int(1), int(1), int(1)]);

        let squeezed = v_sequence(&WordSpec::powers(2, 1).unwrap(), z, 5);
        assert_eq!(
            squeezed.weights(),
            &[int(1), int(2), int(6), int(24), int(120)]
        );

        let sum = v_sequence(&WordSpec::Sum, z, 5);
        assert_eq!(sum.weights(), &[int(2), int(1), int(0), int(0), int(0)]);
    }

    #[test]
    fn v_sequence_brute_force_fallback() {
        // (a†)²a² has no closed-form kernel; the rewrite engine supplies
        // it. From a²(a†)² = (a†)²a² + 4a†a + 2 one gets
        // g_2 = (a†)⁴a⁴ + 4(a†)³a³ + 2(a†)²a², so v_2 = g_2 − v_1² and
        // V_2(1,1) = 4 + 2 = 6.
        let one = int(1);
        let w = WordSpec::powers(2, 2).unwrap();
        let seq = v_sequence(&w, (&one, &one), 2);
        assert_eq!(seq.weights(), &[int(1), int(6)]);
    }

    #[test]
    fn v_sequence_general_z() {
        // a†a at (z, z̄) = (2, 3): v_n = a†a ↦ z̄·z = 6.
        let z = int(2);
        let zbar = int(3);
        let seq = v_sequence(&WordSpec::powers(1, 1).unwrap(), (&z, &zbar), 3);
        assert_eq!(seq.weights(), &[int(6), int(6), int(6)]);
    }

    #[test]
    fn bargmann_accepts_true_normal_forms() {
        // a a† vs a†a + 1: both send z^k to (k+1) z^k.
        let w = WordSpec::word(vec![A, C]).unwrap();
        let mut p = BosonPolynomial::monomial(1, 1, int(1));
        p.add_term(0, 0, int(1));
        assert!(bargmann_check(&w, &p, 8));

        // (a†a)² vs (a†)²a² + a†a: k(k−1) + k = k².
        let w2 = WordSpec::word(vec![C, A, C, A]).unwrap();
        let mut p2 = BosonPolynomial::monomial(2, 2, int(1));
        p2.add_term(1, 1, int(1));
        assert!(bargmann_check(&w2, &p2, 8));
    }

    #[test]
    fn bargmann_rejects_wrong_polynomial() {
        // Drop the a†a term of (a†a)²: negative control.
        let w = WordSpec::word(vec![C, A, C, A]).unwrap();
        let p = BosonPolynomial::monomial(2, 2, int(1));
        assert!(!bargmann_check(&w, &p, 8));
    }

    #[test]
    fn kerr_kernel_matches_stirling_triangle() {
        // g_n for a†a is Σ_k S(n,k)(a†)^k a^k; the S(n,k) are the Bell
        // triangle of the all-ones weights — an independent recurrence.
        let h = crate::bell::WeightSequence::preset("ones", 6).unwrap();
        let triangle = crate::bell::bell_triangle(&h, 6).unwrap();
        let kernel = normal_order_exp(&WordSpec::powers(1, 1).unwrap(), 6);
        for n in 1..=6 {
            let g = kernel.g(n);
            assert_eq!(g.terms().count(), n, "g_{n} has {n} terms");
            for k in 1..=n {
                assert_eq!(g.coeff(k, k), *triangle.value(n, k), "S({n},{k})");
            }
        }
    }

    #[test]
    fn kernel_exp_log_round_trip() {
        for w in [
            WordSpec::powers(1, 1).unwrap(),
            WordSpec::powers(3, 1).unwrap(),
            WordSpec::powers(2, 2).unwrap(),
            WordSpec::Sum,
        ] {
            let kernel = normal_order_exp(&w, 4);
            assert!(kernel.exp_log_consistent(), "{w:?}");
        }
    }

    #[test]
    fn empty_word_rejected() {
        assert_eq!(WordSpec::word(vec![]), Err(BosonError::EmptyWord));
        assert_eq!(WordSpec::powers(0, 0), Err(BosonError::EmptyWord));
    }
}
