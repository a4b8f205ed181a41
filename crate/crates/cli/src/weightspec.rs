//! Parsers for the little input languages of the CLI: weight-sequence
//! specs, boson words, and coherent-state points.
//!
//! Weight-spec grammar: `PRESET | PRESET ":" INT | "[" rational ("," rational)* "]"`.
//! Explicit lists are padded with zeros up to the working order.

use std::str::FromStr;

use zqft_core::arith::Rat;
use zqft_core::bell::WeightSequence;
use zqft_core::boson::{BosonOp, WordSpec};

pub fn parse_rational(text: &str) -> Result<Rat, String> {
    Rat::from_str(text.trim()).map_err(|e| {
        format!(
            "`{}` is not an exact rational (use p or p/q): {e}",
            text.trim()
        )
    })
}

pub fn parse_weight_spec(text: &str, order: usize) -> Result<WeightSequence, String> {
    let trimmed = text.trim();
    if let Some(inner) = trimmed.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| format!("unterminated list `{trimmed}`"))?;
        if inner.trim().is_empty() {
            return Err("empty weight list".into());
        }
        let mut weights = inner
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?;
        while weights.len() < order {
            weights.push(Rat::from_integer(0.into()));
        }
        Ok(WeightSequence::new(weights).with_label(trimmed))
    } else {
        WeightSequence::preset(trimmed, order).map_err(|e| e.to_string())
    }
}

/// Word syntax: `ad` for a†, `a` for a, whitespace-separated; the literal
/// `a+ad` selects the sum operator.
pub fn parse_word(text: &str) -> Result<WordSpec, String> {
    let trimmed = text.trim();
    if trimmed == "a+ad" {
        return Ok(WordSpec::Sum);
    }
    let ops = trimmed
        .split_whitespace()
        .map(|token| match token {
            "a" => Ok(BosonOp::Annihilate),
            "ad" => Ok(BosonOp::Create),
            other => Err(format!(
                "unknown operator token `{other}` (use `a`, `ad`, or the literal `a+ad`)"
            )),
        })
        .collect::<Result<Vec<_>, _>>()?;
    WordSpec::word(ops).map_err(|e| e.to_string())
}

/// `--z "p/q,p/q"`: the substitution point (z, z̄) as two independent
/// rationals.
pub fn parse_z(text: &str) -> Result<(Rat, Rat), String> {
    let mut parts = text.split(',');
    let z = parts
        .next()
        .ok_or_else(|| "expected `z,zbar`".to_string())
        .and_then(parse_rational)?;
    let z_bar = parts
        .next()
        .ok_or_else(|| format!("`{text}` is missing the z̄ component (expected `z,zbar`)"))
        .and_then(parse_rational)?;
    if parts.next().is_some() {
        return Err(format!(
            "`{text}` has too many components (expected `z,zbar`)"
        ));
    }
    Ok((z, z_bar))
}

#[cfg(test)]
mod tests {
    use super::*;
    use zqft_core::arith::{int, ratio};

    #[test]
    fn presets_resolve() {
        let ones = parse_weight_spec("ones", 4).unwrap();
        assert_eq!(ones.weights(), &[int(1), int(1), int(1), int(1)]);

        let opd = parse_weight_spec("one-plus-delta:2", 4).unwrap();
        assert_eq!(opd.weights(), &[int(1), int(1), int(0), int(0)]);
    }

    #[test]
    fn explicit_lists_pad_with_zeros() {
        let w = parse_weight_spec("[0, 1, 1, 1]", 6).unwrap();
        assert_eq!(
            w.weights(),
            &[int(0), int(1), int(1), int(1), int(0), int(0)]
        );
        let rationals = parse_weight_spec("[1/2,-3/4]", 2).unwrap();
        assert_eq!(rationals.weights(), &[ratio(1, 2), ratio(-3, 4)]);
    }

    #[test]
    fn bad_specs_are_rejected() {
        assert!(parse_weight_spec("[]", 3).is_err());
        assert!(parse_weight_spec("[1, x]", 3).is_err());
        assert!(parse_weight_spec("[1, 2", 3).is_err());
        assert!(parse_weight_spec("1.5", 3).is_err());
        let err = parse_weight_spec("nope", 3).unwrap_err();
        assert!(err.contains("ones"), "error should list presets: {err}");
    }

    #[test]
    fn words_parse() {
        assert_eq!(
            parse_word("ad ad a").unwrap(),
            WordSpec::powers(2, 1).unwrap()
        );
        assert_eq!(parse_word("a+ad").unwrap(), WordSpec::Sum);
        assert!(parse_word("").is_err());
        assert!(parse_word("b").is_err());
    }

    #[test]
    fn z_pairs_parse() {
        assert_eq!(parse_z("1,1").unwrap(), (int(1), int(1)));
        assert_eq!(parse_z("2/3,-5").unwrap(), (ratio(2, 3), int(-5)));
        assert!(parse_z("1").is_err());
        assert!(parse_z("1,2,3").is_err());
    }
}
