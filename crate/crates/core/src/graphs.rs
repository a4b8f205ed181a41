//! Exhaustive graph enumeration: the ground-truth oracle for the counting
//! series.
//!
//! A graph with n labelled lines is a pair of set partitions of the lines:
//! a partition π into white dots (origins) and a partition σ into black
//! dots (vertices); line i joins its π-block to its σ-block. The oracle
//! enumerates every pair, groups the resulting bipartite multigraphs by
//! isomorphism, and sums the L/V weights class by class — deliberately
//! *without* using the Bell-product factorization it is meant to check.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::Rat;
use crate::bell::WeightSequence;
use crate::counting::CountingProblem;

/// Hard ceiling for the enumeration: B_8² ≈ 1.7·10⁷ partition pairs.
pub const MAX_ORACLE_LINES: usize = 8;

/// Iterator over all set partitions of {0, ..., n−1}, produced as
/// restricted growth strings: a[0] = 0 and a[i] ≤ 1 + max(a[0..i]),
/// where a[i] names the block of element i.
pub struct SetPartitions {
    n: usize,
    state: Option<Vec<usize>>,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions {
            n,
            state: Some(vec![0; n]),
        }
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.state.take()?;
        // Advance: find the rightmost position that can still grow.
        let mut next = current.clone();
        let mut advanced = false;
        for i in (1..self.n).rev() {
            let prefix_max = *next[..i].iter().max().expect("i >= 1");
            if next[i] <= prefix_max {
                next[i] += 1;
                for slot in next.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
                advanced = true;
                break;
            }
        }
        if advanced {
            self.state = Some(next);
        }
        Some(current)
    }
}

/// Block sizes of a restricted growth string.
pub fn block_sizes(rgs: &[usize]) -> Vec<usize> {
    let blocks = rgs.iter().copied().max().map_or(0, |m| m + 1);
    let mut sizes = vec![0usize; blocks];
    for &b in rgs {
        sizes[b] += 1;
    }
    sizes
}

/// One isomorphism class of bipartite line-graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphClass {
    /// White (origin) degrees in the canonical node order.
    pub white_degrees: Vec<usize>,
    /// Black (vertex) degrees in the canonical node order.
    pub black_degrees: Vec<usize>,
    /// Edges as (white index, black index, multiplicity) under the
    /// canonical labelling.
    pub edges: Vec<(usize, usize, usize)>,
    /// Number of labelled-line partition pairs realizing the class.
    pub multiplicity: u64,
    /// multiplicity × Π L_m × Π V_k.
    pub weight: Rat,
}

/// All classes with a given number of lines, plus the weight total
/// (which must equal A_n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphClassRow {
    pub n: usize,
    pub classes: Vec<GraphClass>,
    pub total: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Refused: the enumeration is over B_n² partition pairs.
    TooManyLines { requested: usize, max: usize },
    /// The problem's weights do not cover the requested line count.
    OrderExceedsProblem { requested: usize, available: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyLines { requested, max } => write!(
                f,
                "refusing to enumerate {requested} lines: the oracle walks all pairs of set \
                 partitions and is capped at {max}"
            ),
            GraphError::OrderExceedsProblem {
                requested,
                available,
            } => write!(
                f,
                "graphs with {requested} lines need weights up to {requested}, \
                 but the problem only defines them up to {available}"
            ),
        }
    }
}

impl core::error::Error for GraphError {}

/// A multiplicity matrix: rows are white nodes, columns black nodes.
type Matrix = Vec<Vec<usize>>;

/// Enumerate and classify every graph with n labelled lines.
pub fn graph_oracle(p: &CountingProblem, n: usize) -> Result<GraphClassRow, GraphError> {
    if n > MAX_ORACLE_LINES {
        return Err(GraphError::TooManyLines {
            requested: n,
            max: MAX_ORACLE_LINES,
        });
    }
    if n > p.order() {
        return Err(GraphError::OrderExceedsProblem {
            requested: n,
            available: p.order(),
        });
    }

    let whites = weighted_partitions(n, p.origin_weights());
    let blacks = weighted_partitions(n, p.vertex_weights());

    let mut classes: BTreeMap<Vec<Matrix>, (u64, Rat)> = BTreeMap::new();
    for (pi, pi_blocks, pi_weight) in &whites {
        for (sigma, sigma_blocks, sigma_weight) in &blacks {
            let mut matrix = vec![vec![0usize; *sigma_blocks]; *pi_blocks];
            for line in 0..n {
                matrix[pi[line]][sigma[line]] += 1;
            }
            let key = canonical_form(&matrix);
            let entry = classes.entry(key).or_insert_with(|| (0, Rat::zero()));
            entry.0 += 1;
            entry.1 += pi_weight * sigma_weight;
        }
    }

    let mut out = Vec::with_capacity(classes.len());
    let mut total = Rat::zero();
    for (components, (multiplicity, weight)) in classes {
        total += &weight;
        out.push(assemble_class(&components, multiplicity, weight));
    }
    Ok(GraphClassRow {
        n,
        classes: out,
        total,
    })
}

/// Every partition of an n-set with its block count and Π weight(size).
fn weighted_partitions(n: usize, weights: &WeightSequence) -> Vec<(Vec<usize>, usize, Rat)> {
    SetPartitions::new(n)
        .map(|rgs| {
            let sizes = block_sizes(&rgs);
            let weight = sizes
                .iter()
                .fold(Rat::one(), |acc, &s| acc * weights.get(s));
            let blocks = sizes.len();
            (rgs, blocks, weight)
        })
        .collect()
}

/// Canonical form of a bipartite multigraph: the sorted list of its
/// connected components, each minimized over relabellings.
fn canonical_form(matrix: &Matrix) -> Vec<Matrix> {
    let mut comps = split_components(matrix);
    for comp in &mut comps {
        *comp = canonical_component(comp);
    }
    comps.sort();
    comps
}

/// Connected components as local multiplicity matrices.
fn split_components(matrix: &Matrix) -> Vec<Matrix> {
    let w = matrix.len();
    let b = if w == 0 { 0 } else { matrix[0].len() };
    let mut seen_w = vec![false; w];
    let mut seen_b = vec![false; b];
    let mut comps = Vec::new();
    for start in 0..w {
        if seen_w[start] {
            continue;
        }
        // BFS alternating sides.
        let mut whites = vec![start];
        let mut blacks = Vec::new();
        seen_w[start] = true;
        let mut frontier_w = vec![start];
        while !frontier_w.is_empty() {
            let mut frontier_b = Vec::new();
            for &wi in &frontier_w {
                for bi in 0..b {
                    if matrix[wi][bi] > 0 && !seen_b[bi] {
                        seen_b[bi] = true;
                        blacks.push(bi);
                        frontier_b.push(bi);
                    }
                }
            }
            frontier_w.clear();
            for &bi in &frontier_b {
                for wi in 0..w {
                    if matrix[wi][bi] > 0 && !seen_w[wi] {
                        seen_w[wi] = true;
                        whites.push(wi);
                        frontier_w.push(wi);
                    }
                }
            }
        }
        whites.sort_unstable();
        blacks.sort_unstable();
        comps.push(
            whites
                .iter()
                .map(|&wi| blacks.iter().map(|&bi| matrix[wi][bi]).collect())
                .collect(),
        );
    }
    comps
}

/// Canonical matrix of one connected component: minimize the
/// column-sorted matrix over all white orderings that keep degrees
/// non-increasing. Equal rows are interchangeable, so only distinct
/// arrangements of the row multiset are walked; components have at most
/// 8 edges, which keeps this tiny.
fn canonical_component(matrix: &Matrix) -> Matrix {
    // Group rows by degree, descending.
    let mut by_degree: BTreeMap<core::cmp::Reverse<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    for row in matrix {
        let degree: usize = row.iter().sum();
        by_degree
            .entry(core::cmp::Reverse(degree))
            .or_default()
            .push(row.clone());
    }
    let groups: Vec<Vec<Vec<usize>>> = by_degree.into_values().collect();

    let mut best: Option<Matrix> = None;
    let mut arrangement: Vec<Vec<usize>> = Vec::with_capacity(matrix.len());
    enumerate_arrangements(&groups, 0, &mut arrangement, &mut |rows| {
        let candidate = sort_columns(rows);
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    });
    best.expect("component is non-empty")
}

/// Walk every distinct concatenation of multiset permutations of the
/// degree groups.
fn enumerate_arrangements(
    groups: &[Vec<Vec<usize>>],
    group_idx: usize,
    arrangement: &mut Vec<Vec<usize>>,
    visit: &mut impl FnMut(&[Vec<usize>]),
) {
    if group_idx == groups.len() {
        visit(arrangement);
        return;
    }
    // Multiset permutation of one group: pool of (row, remaining count).
    let mut pool: Vec<(Vec<usize>, usize)> = Vec::new();
    for row in &groups[group_idx] {
        match pool.iter_mut().find(|(r, _)| r == row) {
            Some((_, count)) => *count += 1,
            None => pool.push((row.clone(), 1)),
        }
    }
    let group_len = groups[group_idx].len();
    permute_pool(&mut pool, group_len, groups, group_idx, arrangement, visit);
}

fn permute_pool(
    pool: &mut Vec<(Vec<usize>, usize)>,
    remaining: usize,
    groups: &[Vec<Vec<usize>>],
    group_idx: usize,
    arrangement: &mut Vec<Vec<usize>>,
    visit: &mut impl FnMut(&[Vec<usize>]),
) {
    if remaining == 0 {
        enumerate_arrangements(groups, group_idx + 1, arrangement, visit);
        return;
    }
    for i in 0..pool.len() {
        if pool[i].1 == 0 {
            continue;
        }
        pool[i].1 -= 1;
        arrangement.push(pool[i].0.clone());
        permute_pool(pool, remaining - 1, groups, group_idx, arrangement, visit);
        arrangement.pop();
        pool[i].1 += 1;
    }
}

/// Sort the columns of a row-arranged matrix descending; this removes the
/// black-side labelling.
fn sort_columns(rows: &[Vec<usize>]) -> Matrix {
    let b = rows[0].len();
    let mut cols: Vec<Vec<usize>> = (0..b)
        .map(|j| rows.iter().map(|r| r[j]).collect())
        .collect();
    cols.sort_unstable_by(|x, y| y.cmp(x));
    (0..rows.len())
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect()
}

/// Build the public class data from the sorted component matrices.
fn assemble_class(components: &[Matrix], multiplicity: u64, weight: Rat) -> GraphClass {
    let mut white_degrees = Vec::new();
    let mut black_degrees = Vec::new();
    let mut edges = Vec::new();
    let mut white_offset = 0;
    let mut black_offset = 0;
    for comp in components {
        let b = comp[0].len();
        for (wi, row) in comp.iter().enumerate() {
            white_degrees.push(row.iter().sum());
            for (bi, &mult) in row.iter().enumerate() {
                if mult > 0 {
                    edges.push((white_offset + wi, black_offset + bi, mult));
                }
            }
        }
        for bi in 0..b {
            black_degrees.push(comp.iter().map(|row| row[bi]).sum());
        }
        white_offset += comp.len();
        black_offset += b;
    }
    GraphClass {
        white_degrees,
        black_degrees,
        edges,
        multiplicity,
        weight,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::counting::z_series_bell;

    fn problem(l: &str, v: &str, order: usize) -> CountingProblem {
        CountingProblem::new(
            WeightSequence::preset(l, order).unwrap(),
            WeightSequence::preset(v, order).unwrap(),
            order,
        )
        .unwrap()
    }

    #[test]
    fn partition_counts_are_bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203];
        for (n, b) in bell.iter().enumerate() {
            assert_eq!(SetPartitions::new(n).count(), *b, "n={n}");
        }
    }

    #[test]
    fn partitions_are_valid_growth_strings() {
        for rgs in SetPartitions::new(6) {
            assert_eq!(rgs[0], 0);
            for i in 1..rgs.len() {
                let prefix_max = *rgs[..i].iter().max().unwrap();
                assert!(rgs[i] <= prefix_max + 1, "{rgs:?}");
            }
        }
    }

    #[test]
    fn single_line_single_class() {
        let row = graph_oracle(&problem("one-plus-delta:2", "ones", 4), 1).unwrap();
        assert_eq!(row.classes.len(), 1);
        assert_eq!(row.total, int(1));
        let class = &row.classes[0];
        assert_eq!(class.white_degrees, vec![1]);
        assert_eq!(class.black_degrees, vec![1]);
        assert_eq!(class.edges, vec![(0, 0, 1)]);
        assert_eq!(class.multiplicity, 1);
    }

    #[test]
    fn two_lines_four_classes() {
        // Two disjoint lines; one white to two blacks; two whites to one
        // black; a double edge — each of weight 1.
        let row = graph_oracle(&problem("one-plus-delta:2", "ones", 4), 2).unwrap();
        assert_eq!(row.classes.len(), 4);
        assert_eq!(row.total, int(4));
        for class in &row.classes {
            assert_eq!(class.weight, int(1));
            assert_eq!(class.multiplicity, 1);
        }
        let shapes: Vec<(Vec<usize>, Vec<usize>)> = row
            .classes
            .iter()
            .map(|c| (c.white_degrees.clone(), c.black_degrees.clone()))
            .collect();
        assert!(shapes.contains(&(vec![1, 1], vec![1, 1])));
        assert!(shapes.contains(&(vec![2], vec![1, 1])));
        assert!(shapes.contains(&(vec![1, 1], vec![2])));
        assert!(shapes.contains(&(vec![2], vec![2])));
    }

    #[test]
    fn zero_origin_weight_kills_single_line() {
        let row = graph_oracle(&problem("no-singletons", "factorial", 4), 1).unwrap();
        assert_eq!(row.total, int(0));
    }

    #[test]
    fn three_lines_class_structure() {
        // Hand enumeration of the 25 partition pairs for L = V = ones:
        // 10 classes with multiplicity multiset {1,1,1,1,3,3,3,3,3,6}.
        let row = graph_oracle(&problem("ones", "ones", 4), 3).unwrap();
        assert_eq!(row.classes.len(), 10);
        let mut mults: Vec<u64> = row.classes.iter().map(|c| c.multiplicity).collect();
        mults.sort_unstable();
        assert_eq!(mults, vec![1, 1, 1, 1, 3, 3, 3, 3, 3, 6]);
        assert_eq!(row.total, int(25));
    }

    #[test]
    fn totals_match_bell_route() {
        for (l, v) in [
            ("one-plus-delta:2", "ones"),
            ("linear", "ones"),
            ("no-singletons", "factorial"),
            ("even-linear", "ones"),
        ] {
            let p = problem(l, v, 5);
            let z = z_series_bell(&p);
            for n in 0..=5 {
                let row = graph_oracle(&p, n).unwrap();
                assert_eq!(row.total, *z.coeff(n), "{l}/{v} n={n}");
            }
        }
    }

    #[test]
    fn class_invariants() {
        let p = problem("linear", "factorial", 5);
        let mut pair_count = 0u64;
        for n in 0..=5 {
            let row = graph_oracle(&p, n).unwrap();
            pair_count = 0;
            for class in &row.classes {
                let white: usize = class.white_degrees.iter().sum();
                let black: usize = class.black_degrees.iter().sum();
                assert_eq!(white, n);
                assert_eq!(black, n);
                let edge_total: usize = class.edges.iter().map(|e| e.2).sum();
                assert_eq!(edge_total, n);
                pair_count += class.multiplicity;
            }
            // Σ multiplicities = (number of partition pairs) = B_n².
            let bn = SetPartitions::new(n).count() as u64;
            assert_eq!(pair_count, bn * bn);
        }
        assert!(pair_count > 0);
    }

    #[test]
    fn refusal_beyond_cap() {
        let p = problem("ones", "ones", 12);
        assert!(matches!(
            graph_oracle(&p, 9),
            Err(GraphError::TooManyLines { .. })
        ));
        let short = problem("ones", "ones", 2);
        assert!(matches!(
            graph_oracle(&short, 4),
            Err(GraphError::OrderExceedsProblem { .. })
        ));
    }

    #[test]
    fn empty_graph_row() {
        let row = graph_oracle(&problem("ones", "ones", 3), 0).unwrap();
        assert_eq!(row.total, int(1));
        assert_eq!(row.classes.len(), 1);
        assert!(row.classes[0].edges.is_empty());
    }

    #[test]
    fn canonical_form_merges_relabellings() {
        // The same path graph presented with permuted labels.
        let a = vec![vec![2, 1], vec![0, 1]];
        let b = vec![vec![1, 0], vec![1, 2]];
        assert_eq!(canonical_form(&a), canonical_form(&b));
        // And a genuinely different multigraph stays different.
        let c = vec![vec![2, 0], vec![0, 2]];
        assert_ne!(canonical_form(&a), canonical_form(&c));
    }
}
