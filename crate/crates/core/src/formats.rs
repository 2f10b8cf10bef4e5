//! Input and output formats: variable naming, polynomial text and JSON,
//! graph text and JSON, and specification JSON for the statistics layer.
//!
//! Everything here is deterministic: JSON objects are emitted through
//! `serde_json::Value`, whose maps iterate in key order, so equal inputs
//! produce byte-equal output. Coefficients survive round trips exactly via
//! arbitrary-precision JSON numbers.

use std::collections::HashMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::ci::{CiStatement, RobustnessSpec, StateSpace};
use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, VertexSubset};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Names for the polynomial ring attached to a graph on `n` vertices:
/// `x1..xn` then `y1..yn`.
pub fn xy_variable_names(n: usize) -> Vec<String> {
    (1..=n)
        .map(|v| format!("x{v}"))
        .chain((1..=n).map(|v| format!("y{v}")))
        .collect()
}

/// Names for the probability ring of a state space: `p` followed by the
/// hidden state (1 or 2) and the observed coordinates. Coordinates are
/// concatenated digits when every dimension is at most 9, and
/// underscore-separated otherwise.
pub fn probability_variable_names(dims: &[usize]) -> Result<Vec<String>> {
    let space = StateSpace::new(dims.iter().copied())?;
    let compact = dims.iter().all(|&d| d <= 9);
    let mut names = Vec::with_capacity(2 * space.size());
    for row in 1..=2 {
        for state in space.states() {
            let mut name = format!("p{row}");
            for c in state {
                if compact {
                    name.push_str(&c.to_string());
                } else {
                    name.push('_');
                    name.push_str(&c.to_string());
                }
            }
            names.push(name);
        }
    }
    Ok(names)
}

fn check_names(n_vars: usize, names: &[String]) -> Result<()> {
    if names.len() != n_vars {
        return Err(Error::domain(format!(
            "{} variable names supplied for a ring with {} variables",
            names.len(),
            n_vars
        )));
    }
    Ok(())
}

/// Renders a monomial as `*`-joined named powers, or `1`.
pub fn render_monomial(m: &Monomial, names: &[String]) -> Result<String> {
    check_names(m.n_vars(), names)?;
    let factors: Vec<String> = (0..m.n_vars())
        .filter(|&i| m.exponent(i) > 0)
        .map(|i| match m.exponent(i) {
            1 => names[i].clone(),
            e => format!("{}^{}", names[i], e),
        })
        .collect();
    Ok(if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    })
}

/// Renders a polynomial in its stored term order, e.g. `x1*y2 - x2*y1` or
/// `3/2*x1^2 + 1`.
pub fn render_polynomial(p: &Polynomial, names: &[String]) -> Result<String> {
    if p.is_zero() {
        return Ok("0".to_string());
    }
    let mut out = String::new();
    for (idx, term) in p.terms().iter().enumerate() {
        let negative = term.coeff.is_negative();
        out.push_str(match (idx == 0, negative) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        });
        let magnitude = term.coeff.abs();
        let mono = render_monomial(&term.monomial, names)?;
        if term.monomial.is_one() {
            out.push_str(&magnitude.to_string());
        } else if magnitude == BigRational::from_integer(BigInt::from(1)) {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{magnitude}*{mono}"));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Star,
    Slash,
    Caret,
    Plus,
    Minus,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => pos += 1,
            b'*' => {
                toks.push((pos, Tok::Star));
                pos += 1;
            }
            b'/' => {
                toks.push((pos, Tok::Slash));
                pos += 1;
            }
            b'^' => {
                toks.push((pos, Tok::Caret));
                pos += 1;
            }
            b'+' => {
                toks.push((pos, Tok::Plus));
                pos += 1;
            }
            b'-' => {
                toks.push((pos, Tok::Minus));
                pos += 1;
            }
            b'0'..=b'9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let digits = &text[start..pos];
                let value = BigInt::from_str(digits)
                    .map_err(|e| Error::parse(format!("bad number at byte {start}: {e}")))?;
                toks.push((start, Tok::Num(value)));
            }
            b if b.is_ascii_alphabetic() => {
                let start = pos;
                while pos < bytes.len()
                    && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_')
                {
                    pos += 1;
                }
                toks.push((start, Tok::Name(text[start..pos].to_string())));
            }
            other => {
                return Err(Error::parse(format!(
                    "unexpected character '{}' at byte {}",
                    other as char, pos
                )));
            }
        }
    }
    Ok(toks)
}

/// Parses the text form produced by [`render_polynomial`]: terms are
/// `*`-separated factors, each a rational constant `a` or `a/b` or a named
/// power `name` or `name^k`, joined by `+` and `-`.
pub fn parse_polynomial(text: &str, names: &[String], ord: &MonomialOrder) -> Result<Polynomial> {
    check_names(ord.n_vars(), names)?;
    let index: HashMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::parse("empty polynomial"));
    }
    let n_vars = ord.n_vars();
    let mut terms: Vec<(BigRational, Monomial)> = Vec::new();
    let mut cursor = 0;

    // One rational or named-power factor, folded into the running term.
    let parse_factor =
        |cursor: &mut usize, coeff: &mut BigRational, exps: &mut Vec<u32>| -> Result<()> {
            let (at, tok) = toks
                .get(*cursor)
                .ok_or_else(|| Error::parse("expected a factor at end of input"))?;
            match tok {
                Tok::Num(n) => {
                    *cursor += 1;
                    let mut den = BigInt::from(1);
                    if let Some((_, Tok::Slash)) = toks.get(*cursor) {
                        *cursor += 1;
                        match toks.get(*cursor) {
                            Some((dat, Tok::Num(d))) => {
                                if d.is_zero() {
                                    return Err(Error::parse(format!(
                                        "zero denominator at byte {dat}"
                                    )));
                                }
                                den = d.clone();
                                *cursor += 1;
                            }
                            _ => {
                                return Err(Error::parse(format!(
                                    "expected a denominator after '/' at byte {at}"
                                )));
                            }
                        }
                    }
                    *coeff *= BigRational::new(n.clone(), den);
                    Ok(())
                }
                Tok::Name(name) => {
                    let var = *index.get(name.as_str()).ok_or_else(|| {
                        Error::parse(format!("unknown variable '{name}' at byte {at}"))
                    })?;
                    *cursor += 1;
                    let mut power: u32 = 1;
                    if let Some((_, Tok::Caret)) = toks.get(*cursor) {
                        *cursor += 1;
                        match toks.get(*cursor) {
                            Some((eat, Tok::Num(e))) => {
                                power = e.to_u32().ok_or_else(|| {
                                    Error::parse(format!("exponent too large at byte {eat}"))
                                })?;
                                *cursor += 1;
                            }
                            _ => {
                                return Err(Error::parse(format!(
                                    "expected an exponent after '^' at byte {at}"
                                )));
                            }
                        }
                    }
                    exps[var] = exps[var]
                        .checked_add(power)
                        .ok_or_else(|| Error::parse(format!("exponent overflow at byte {at}")))?;
                    Ok(())
                }
                other => Err(Error::parse(format!("unexpected {:?} at byte {at}", other))),
            }
        };

    let mut sign = BigRational::from_integer(BigInt::from(1));
    if let Some((_, Tok::Minus)) = toks.get(cursor) {
        sign = -sign;
        cursor += 1;
    } else if let Some((_, Tok::Plus)) = toks.get(cursor) {
        cursor += 1;
    }
    loop {
        let mut coeff = sign.clone();
        let mut exps = vec![0u32; n_vars];
        parse_factor(&mut cursor, &mut coeff, &mut exps)?;
        while let Some((_, Tok::Star)) = toks.get(cursor) {
            cursor += 1;
            parse_factor(&mut cursor, &mut coeff, &mut exps)?;
        }
        terms.push((coeff, Monomial::new(exps)));
        match toks.get(cursor) {
            None => break,
            Some((_, Tok::Plus)) => {
                sign = BigRational::from_integer(BigInt::from(1));
                cursor += 1;
            }
            Some((_, Tok::Minus)) => {
                sign = BigRational::from_integer(BigInt::from(-1));
                cursor += 1;
            }
            Some((at, tok)) => {
                return Err(Error::parse(format!(
                    "expected '+' or '-' before {:?} at byte {at}",
                    tok
                )));
            }
        }
    }
    Ok(Polynomial::from_terms(terms, ord))
}

fn bigint_number(n: &BigInt) -> Value {
    let number = serde_json::Number::from_str(&n.to_string())
        .expect("integer strings always parse as JSON numbers");
    Value::Number(number)
}

/// JSON form of a polynomial: an array of `[numerator, denominator,
/// [exponents...]]` triples in stored term order.
pub fn polynomial_to_json(p: &Polynomial) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|t| {
                json!([
                    bigint_number(t.coeff.numer()),
                    bigint_number(t.coeff.denom()),
                    t.monomial.exponents()
                ])
            })
            .collect(),
    )
}

fn bigint_from_value(v: &Value, what: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|_| Error::parse(format!("{what} must be an integer, got {n}"))),
        other => Err(Error::parse(format!(
            "{what} must be a number, got {other}"
        ))),
    }
}

/// Inverse of [`polynomial_to_json`]; the exponent rows must match the
/// order's variable count.
pub fn polynomial_from_json(value: &Value, ord: &MonomialOrder) -> Result<Polynomial> {
    let entries = value
        .as_array()
        .ok_or_else(|| Error::parse("polynomial JSON must be an array of terms"))?;
    let mut terms = Vec::with_capacity(entries.len());
    for entry in entries {
        let triple = entry
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| Error::parse("each term must be [numerator, denominator, exponents]"))?;
        let numer = bigint_from_value(&triple[0], "numerator")?;
        let denom = bigint_from_value(&triple[1], "denominator")?;
        if denom.is_zero() {
            return Err(Error::parse("zero denominator in term"));
        }
        let exp_values = triple[2]
            .as_array()
            .ok_or_else(|| Error::parse("exponents must be an array"))?;
        if exp_values.len() != ord.n_vars() {
            return Err(Error::parse(format!(
                "term has {} exponents, expected {}",
                exp_values.len(),
                ord.n_vars()
            )));
        }
        let exps: Vec<u32> = exp_values
            .iter()
            .map(|e| {
                e.as_u64()
                    .and_then(|u| u32::try_from(u).ok())
                    .ok_or_else(|| Error::parse(format!("bad exponent {e}")))
            })
            .collect::<Result<_>>()?;
        terms.push((BigRational::new(numer, denom), Monomial::new(exps)));
    }
    Ok(Polynomial::from_terms(terms, ord))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// JSON form of a graph: `{"edges": [[i, j], ...], "n": n}`.
pub fn graph_to_json(g: &LabeledGraph) -> Value {
    json!({
        "n": g.n(),
        "edges": g.edges().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
    })
}

pub fn graph_from_json(text: &str) -> Result<LabeledGraph> {
    let parsed: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("graph JSON: {e}")))?;
    LabeledGraph::new(parsed.n, parsed.edges)
}

/// Text form of a graph: one `i j` line per edge. `#` starts a comment and
/// blank lines are skipped; the vertex count is the largest endpoint.
pub fn parse_graph_text(text: &str) -> Result<LabeledGraph> {
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::parse(format!(
                "line {}: expected two vertex labels, got {:?}",
                idx + 1,
                line
            )));
        }
        let mut pair = [0usize; 2];
        for (slot, field) in pair.iter_mut().zip(&fields) {
            *slot = field.parse().map_err(|_| {
                Error::parse(format!("line {}: bad vertex label {:?}", idx + 1, field))
            })?;
        }
        edges.push((pair[0], pair[1]));
    }
    if edges.is_empty() {
        return Err(Error::parse(
            "no edges given; the text form cannot express an edgeless graph",
        ));
    }
    let n = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
    LabeledGraph::new(n, edges)
}

pub fn render_graph_text(g: &LabeledGraph) -> String {
    let mut out = format!("# n = {}\n", g.n());
    for (a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StatementJson {
    #[serde(rename = "S")]
    s: Vec<usize>,
    #[serde(rename = "T")]
    t: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecJson {
    dims: Vec<usize>,
    #[serde(default)]
    statements: Option<Vec<StatementJson>>,
    #[serde(default)]
    hamming_k: Option<usize>,
}

/// Specification JSON: `{"dims": [...], "statements": [{"S": [...], "T":
/// [...]}, ...]}`, or `{"dims": [...], "hamming_k": k}` for the distance-k
/// family.
pub fn spec_from_json(text: &str) -> Result<RobustnessSpec> {
    let parsed: SpecJson =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("specification JSON: {e}")))?;
    let space = StateSpace::new(parsed.dims)?;
    match (parsed.statements, parsed.hamming_k) {
        (Some(statements), None) => {
            let statements = statements
                .into_iter()
                .map(|st| {
                    CiStatement::new(
                        st.s.into_iter().collect::<VertexSubset>(),
                        st.t.into_iter().collect::<VertexSubset>(),
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            RobustnessSpec::new(space, statements)
        }
        (None, Some(k)) => RobustnessSpec::hamming(space, k),
        _ => Err(Error::domain(
            "give exactly one of \"statements\" and \"hamming_k\"",
        )),
    }
}

pub fn statement_to_json(st: &CiStatement) -> Value {
    json!({
        "S": st.independent().to_vec(),
        "T": st.given().to_vec(),
    })
}

pub fn spec_to_json(spec: &RobustnessSpec) -> Value {
    json!({
        "dims": spec.space().dims(),
        "statements": spec
            .statements()
            .iter()
            .map(statement_to_json)
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edge_ideal::{pair_binomial, xy_order};
    use crate::poly::rational;
    use proptest::prelude::*;

    #[test]
    fn variable_names() {
        assert_eq!(
            xy_variable_names(3),
            vec!["x1", "x2", "x3", "y1", "y2", "y3"]
        );
        let p = probability_variable_names(&[2, 2]).unwrap();
        assert_eq!(
            p,
            vec!["p111", "p112", "p121", "p122", "p211", "p212", "p221", "p222"]
        );
        // A dimension above nine forces the unambiguous form.
        let wide = probability_variable_names(&[2, 10]).unwrap();
        assert_eq!(wide[0], "p1_1_1");
        assert_eq!(wide[39], "p2_2_10");
    }

    #[test]
    fn renders_edge_binomials() {
        let names = xy_variable_names(3);
        let p = pair_binomial(3, 1, 2);
        assert_eq!(render_polynomial(&p, &names).unwrap(), "x1*y2 - x2*y1");
        assert_eq!(render_polynomial(&Polynomial::zero(), &names).unwrap(), "0");
    }

    #[test]
    fn renders_coefficients_and_powers() {
        let ord = MonomialOrder::lex(2);
        let names = vec!["a".to_string(), "b".to_string()];
        let p = Polynomial::from_terms(
            [
                (
                    BigRational::new(BigInt::from(3), BigInt::from(2)),
                    Monomial::new(vec![2, 1]),
                ),
                (rational(-1), Monomial::new(vec![0, 1])),
                (rational(5), Monomial::one(2)),
            ],
            &ord,
        );
        assert_eq!(render_polynomial(&p, &names).unwrap(), "3/2*a^2*b - b + 5");
        let negative_lead =
            Polynomial::from_terms([(rational(-2), Monomial::new(vec![1, 0]))], &ord);
        assert_eq!(render_polynomial(&negative_lead, &names).unwrap(), "-2*a");
    }

    #[test]
    fn name_count_must_match() {
        let names = xy_variable_names(2);
        assert!(render_polynomial(&pair_binomial(3, 1, 2), &names).is_err());
    }

    #[test]
    fn parses_what_it_renders() {
        let ord = xy_order(3);
        let names = xy_variable_names(3);
        for p in [
            pair_binomial(3, 1, 2),
            pair_binomial(3, 1, 2).mul(&pair_binomial(3, 2, 3), &ord),
            Polynomial::zero(),
            Polynomial::constant(BigRational::new(BigInt::from(-7), BigInt::from(3)), 6),
        ] {
            let text = render_polynomial(&p, &names).unwrap();
            assert_eq!(parse_polynomial(&text, &names, &ord).unwrap(), p, "{text}");
        }
    }

    #[test]
    fn parser_accepts_loose_spacing_and_merges() {
        let ord = MonomialOrder::lex(2);
        let names = vec!["a".to_string(), "b".to_string()];
        let p = parse_polynomial("2*a*3 - a*6 + b* b", &names, &ord).unwrap();
        // 6a - 6a + b^2.
        assert_eq!(
            p,
            Polynomial::from_terms([(rational(1), Monomial::new(vec![0, 2]))], &ord)
        );
        let q = parse_polynomial(" - a + 1/2", &names, &ord).unwrap();
        assert_eq!(q.terms().len(), 2);
    }

    #[test]
    fn parser_reports_locations() {
        let ord = MonomialOrder::lex(1);
        let names = vec!["a".to_string()];
        for bad in [
            "",
            "a +",
            "a^",
            "z",
            "a & a",
            "1/0",
            "a^99999999999",
            "a / 2",
        ] {
            let err = parse_polynomial(bad, &names, &ord).unwrap_err();
            assert!(matches!(err, Error::Parse(_)), "{bad}: {err}");
        }
    }

    #[test]
    fn polynomial_json_keeps_big_coefficients() {
        let ord = MonomialOrder::lex(2);
        let huge = BigInt::from(2).pow(100);
        let p = Polynomial::from_terms(
            [
                (
                    BigRational::new(huge.clone(), BigInt::from(3)),
                    Monomial::new(vec![1, 0]),
                ),
                (rational(-1), Monomial::new(vec![0, 5])),
            ],
            &ord,
        );
        let text = polynomial_to_json(&p).to_string();
        assert!(text.contains(&huge.to_string()));
        let back = polynomial_from_json(&serde_json::from_str(&text).unwrap(), &ord).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn polynomial_json_rejects_malformed_terms() {
        let ord = MonomialOrder::lex(2);
        for bad in [
            "{}",
            "[[1, 2]]",
            "[[1, 0, [1, 0]]]",
            "[[1, 1, [1]]]",
            "[[1.5, 1, [1, 0]]]",
            "[[1, 1, [1, -2]]]",
        ] {
            let value: Value = serde_json::from_str(bad).unwrap();
            assert!(polynomial_from_json(&value, &ord).is_err(), "{bad}");
        }
    }

    #[test]
    fn graph_json_round_trip() {
        let g = LabeledGraph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        let text = graph_to_json(&g).to_string();
        assert_eq!(text, r#"{"edges":[[1,2],[1,3],[1,4]],"n":4}"#);
        assert_eq!(graph_from_json(&text).unwrap(), g);
        // Malformed JSON is a parse error; bad vertex data is a domain error.
        assert!(matches!(
            graph_from_json("{\"edges\": []}").unwrap_err(),
            Error::Parse(_)
        ));
        assert!(matches!(
            graph_from_json("{\"n\": 2, \"edges\": [[1, 1]]}").unwrap_err(),
            Error::Domain(_)
        ));
        assert!(matches!(
            graph_from_json("{\"n\": 2, \"edges\": [], \"extra\": 1}").unwrap_err(),
            Error::Parse(_)
        ));
    }

    #[test]
    fn graph_text_round_trip() {
        let text = "# a path\n1 2\n2 3   # tail\n\n";
        let g = parse_graph_text(text).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
        let rendered = render_graph_text(&g);
        assert_eq!(rendered, "# n = 3\n1 2\n2 3\n");
        assert_eq!(parse_graph_text(&rendered).unwrap(), g);
        assert!(parse_graph_text("# only comments\n").is_err());
        assert!(parse_graph_text("1 2 3\n").is_err());
        assert!(parse_graph_text("1 two\n").is_err());
    }

    #[test]
    fn spec_json_forms() {
        let spec = spec_from_json(
            r#"{"dims": [2, 2], "statements": [{"S": [1], "T": [2]}, {"S": [2], "T": [1]}]}"#,
        )
        .unwrap();
        assert_eq!(spec.statements().len(), 2);
        let hamming = spec_from_json(r#"{"dims": [2, 2], "hamming_k": 1}"#).unwrap();
        assert_eq!(spec, hamming);
        assert_eq!(
            spec_to_json(&spec).to_string(),
            r#"{"dims":[2,2],"statements":[{"S":[1],"T":[2]},{"S":[2],"T":[1]}]}"#
        );
        assert!(spec_from_json(r#"{"dims": [2, 2]}"#).is_err());
        assert!(spec_from_json(r#"{"dims": [2, 2], "hamming_k": 1, "statements": []}"#).is_err());
        assert!(matches!(
            spec_from_json(r#"{"dims": [2, 2], "statements": [{"S": [], "T": [1, 2]}]}"#)
                .unwrap_err(),
            Error::Domain(_)
        ));
    }

    proptest! {
        #[test]
        fn text_round_trip(raw in proptest::collection::vec(
            (-5i64..=5, proptest::collection::vec(0u32..4, 4)),
            0..5,
        )) {
            let ord = MonomialOrder::lex(4);
            let names = xy_variable_names(2);
            let p = Polynomial::from_terms(
                raw.into_iter().map(|(c, e)| (rational(c), Monomial::new(e))),
                &ord,
            );
            let text = render_polynomial(&p, &names).unwrap();
            prop_assert_eq!(parse_polynomial(&text, &names, &ord).unwrap(), p);
        }

        #[test]
        fn json_round_trip(raw in proptest::collection::vec(
            (-9i64..=9, 1i64..=9, proptest::collection::vec(0u32..4, 3)),
            0..5,
        )) {
            let ord = MonomialOrder::lex(3);
            let p = Polynomial::from_terms(
                raw.into_iter().map(|(n, d, e)| {
                    (BigRational::new(BigInt::from(n), BigInt::from(d)), Monomial::new(e))
                }),
                &ord,
            );
            let value = polynomial_to_json(&p);
            prop_assert_eq!(polynomial_from_json(&value, &ord).unwrap(), p);
        }
    }
}
