//! The machine-readable document formats, as serde mirrors of the core
//! types. Rationals travel as exact `"p/q"` strings, never floats.

use serde::{Deserialize, Serialize};

use zqft_core::boson::BosonPolynomial;
use zqft_core::egf::EgfSeries;
use zqft_core::graphs::{GraphClass, GraphClassRow};

use crate::weightspec::parse_rational;

/// `{"order": N, "coeffs": ["p/q", ...]}` — a truncated EGF.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SeriesDoc {
    pub order: usize,
    pub coeffs: Vec<String>,
}

impl SeriesDoc {
    pub fn from_series(series: &EgfSeries) -> Self {
        SeriesDoc {
            order: series.order(),
            coeffs: series.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn to_series(&self) -> Result<EgfSeries, String> {
        if self.coeffs.len() != self.order + 1 {
            return Err(format!(
                "series of order {} must carry {} coefficients, found {}",
                self.order,
                self.order + 1,
                self.coeffs.len()
            ));
        }
        Ok(EgfSeries::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| parse_rational(c))
                .collect::<Result<Vec<_>, _>>()?,
        ))
    }
}

/// A named integer/rational sequence emitted by `sequence`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SequenceDoc {
    pub name: String,
    pub order: usize,
    pub values: Vec<String>,
}

/// One `{"p": .., "q": .., "c": ".."}` term of a normally ordered
/// polynomial; a polynomial is a list of these in (p, q) order.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TermDoc {
    pub p: usize,
    pub q: usize,
    pub c: String,
}

pub fn polynomial_doc(poly: &BosonPolynomial) -> Vec<TermDoc> {
    poly.terms()
        .map(|(&(p, q), c)| TermDoc {
            p,
            q,
            c: c.to_string(),
        })
        .collect()
}

pub fn polynomial_from_doc(terms: &[TermDoc]) -> Result<BosonPolynomial, String> {
    let mut poly = BosonPolynomial::zero();
    for term in terms {
        poly.add_term(term.p, term.q, parse_rational(&term.c)?);
    }
    Ok(poly)
}

/// One isomorphism class of the graph tabulation.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GraphClassDoc {
    pub white: Vec<usize>,
    pub black: Vec<usize>,
    pub edges: Vec<(usize, usize, usize)>,
    pub multiplicity: u64,
    pub weight: String,
}

/// `{"n": n, "classes": [...], "total": "rational"}`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GraphRowDoc {
    pub n: usize,
    pub classes: Vec<GraphClassDoc>,
    pub total: String,
}

impl GraphRowDoc {
    pub fn from_row(row: &GraphClassRow) -> Self {
        GraphRowDoc {
            n: row.n,
            classes: row.classes.iter().map(GraphClassDoc::from_class).collect(),
            total: row.total.to_string(),
        }
    }
}

impl GraphClassDoc {
    fn from_class(class: &GraphClass) -> Self {
        GraphClassDoc {
            white: class.white_degrees.clone(),
            black: class.black_degrees.clone(),
            edges: class.edges.clone(),
            multiplicity: class.multiplicity,
            weight: class.weight.to_string(),
        }
    }
}
