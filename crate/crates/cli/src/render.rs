//! Rendering of the document types in the three output formats. All
//! output is deterministic: identical input yields byte-identical text.

use clap::ValueEnum;

use crate::schema::{GraphRowDoc, SequenceDoc, SeriesDoc, TermDoc};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("documents always serialize");
    out.push('\n');
    out
}

/// CSV fields holding rationals or lists are always quoted.
fn csv_quote(field: &str) -> String {
    format!("\"{}\"", field.replace('"', "\"\""))
}

pub fn render_series(doc: &SeriesDoc, format: Format) -> String {
    match format {
        Format::Plain => format!("{}\n", doc.coeffs.join(",")),
        Format::Json => json(doc),
        Format::Csv => {
            let mut out = String::from("n,coefficient\n");
            for (n, c) in doc.coeffs.iter().enumerate() {
                out.push_str(&format!("{n},{}\n", csv_quote(c)));
            }
            out
        }
    }
}

pub fn render_sequence(doc: &SequenceDoc, format: Format) -> String {
    match format {
        Format::Plain => format!("{}\n", doc.values.join(",")),
        Format::Json => json(doc),
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (n, v) in doc.values.iter().enumerate() {
                out.push_str(&format!("{n},{}\n", csv_quote(v)));
            }
            out
        }
    }
}

pub fn render_polynomial(terms: &[TermDoc], format: Format) -> String {
    match format {
        Format::Plain => {
            if terms.is_empty() {
                return "0\n".into();
            }
            let rendered: Vec<String> = terms.iter().map(plain_term).collect();
            format!("{}\n", rendered.join(" + "))
        }
        Format::Json => json(&terms),
        Format::Csv => {
            let mut out = String::from("p,q,c\n");
            for t in terms {
                out.push_str(&format!("{},{},{}\n", t.p, t.q, csv_quote(&t.c)));
            }
            out
        }
    }
}

fn plain_term(term: &TermDoc) -> String {
    let mut parts: Vec<String> = Vec::new();
    if term.c != "1" || (term.p == 0 && term.q == 0) {
        parts.push(term.c.clone());
    }
    match term.p {
        0 => {}
        1 => parts.push("ad".into()),
        p => parts.push(format!("ad^{p}")),
    }
    match term.q {
        0 => {}
        1 => parts.push("a".into()),
        q => parts.push(format!("a^{q}")),
    }
    parts.join(" ")
}

pub fn render_graph_rows(rows: &[GraphRowDoc], format: Format) -> String {
    match format {
        Format::Plain => {
            let mut out = String::new();
            for row in rows {
                out.push_str(&format!(
                    "n={} classes={} total={}\n",
                    row.n,
                    row.classes.len(),
                    row.total
                ));
                for class in &row.classes {
                    let edges: Vec<String> = class
                        .edges
                        .iter()
                        .map(|(w, b, m)| format!("({w},{b})x{m}"))
                        .collect();
                    out.push_str(&format!(
                        "  white={:?} black={:?} edges=[{}] multiplicity={} weight={}\n",
                        class.white,
                        class.black,
                        edges.join(" "),
                        class.multiplicity,
                        class.weight
                    ));
                }
            }
            out
        }
        Format::Json => json(&rows),
        Format::Csv => {
            let mut out = String::from("n,white,black,edges,multiplicity,weight\n");
            for row in rows {
                for class in &row.classes {
                    let edges: Vec<String> = class
                        .edges
                        .iter()
                        .map(|(w, b, m)| format!("({w},{b})x{m}"))
                        .collect();
                    out.push_str(&format!(
                        "{},{},{},{},{},{}\n",
                        row.n,
                        csv_quote(&format!("{:?}", class.white)),
                        csv_quote(&format!("{:?}", class.black)),
                        csv_quote(&edges.join(" ")),
                        class.multiplicity,
                        csv_quote(&class.weight)
                    ));
                }
            }
            out
        }
    }
}
