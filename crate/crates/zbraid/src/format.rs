//! Text and JSON formats for matrices, permutations, words, normal forms and
//! derivation logs.
//!
//! Matrices are written `a b; c d`. Words separate letters with `|` and mark
//! inverse letters with a `^-1` suffix. Named generators: `s<i>` (sign flip
//! of coordinate `i`), `h:<matrix>` (an element of `H`), `g<i>:<2x2 block>`
//! (an element of `G_i`) and `w0`. Presentation letters may carry an explicit
//! type as `<letter>@<i>`.

use num_bigint::BigInt;
use serde_json::{json, Value};
use zbraid_core::bruhat::Perm;
use zbraid_core::engine::{GroupNF, MonoidNF, Signed};
use zbraid_core::lex::is_in_h;
use zbraid_core::presentation::shape::{embed_block, in_h_i};
use zbraid_core::presentation::{SLetter, SRule, SStep, SWord, TRule, TStep};
use zbraid_core::{Int, UniMatrix};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("bad token `{token}`: {why}")]
    Token { token: String, why: String },
    #[error(transparent)]
    Core(#[from] zbraid_core::Error),
}

pub type Result<T> = std::result::Result<T, FormatError>;

fn bad(token: &str, why: impl Into<String>) -> FormatError {
    FormatError::Token { token: token.to_string(), why: why.into() }
}

pub fn parse_int(tok: &str) -> Result<Int> {
    tok.parse::<BigInt>().map_err(|_| bad(tok, "not an integer"))
}

/// `a b; c d` or a JSON array of rows. `n`, when given, is enforced.
pub fn parse_matrix(s: &str, n: Option<usize>) -> Result<UniMatrix> {
    let s = s.trim();
    let rows: Vec<Vec<Int>> = if s.starts_with('[') {
        let v: Value = serde_json::from_str(s).map_err(|e| bad(s, e.to_string()))?;
        return matrix_from_json(&v, n);
    } else {
        s.split(';')
            .map(|r| r.split_whitespace().map(parse_int).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?
    };
    build(s, rows, n)
}

fn build(src: &str, rows: Vec<Vec<Int>>, n: Option<usize>) -> Result<UniMatrix> {
    let k = rows.len();
    if let Some(bad_row) = rows.iter().find(|r| r.len() != k) {
        let tok = bad_row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        return Err(bad(&tok, format!("row length {} in a matrix with {k} rows", bad_row.len())));
    }
    if let Some(n) = n {
        if k != n {
            return Err(bad(src, format!("expected a {n}x{n} matrix")));
        }
    }
    UniMatrix::from_rows(rows).map_err(|e| bad(src, e.to_string()))
}

fn int_json(v: &Int) -> Value {
    match i64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<Int> {
    match v {
        Value::Number(x) => parse_int(&x.to_string()),
        Value::String(s) => parse_int(s),
        other => Err(bad(&other.to_string(), "not an integer")),
    }
}

/// Entries are numbers when they fit in 64 bits and decimal strings otherwise.
pub fn matrix_json(m: &UniMatrix) -> Value {
    Value::Array(m.rows().iter().map(|r| Value::Array(r.iter().map(int_json).collect())).collect())
}

pub fn matrix_from_json(v: &Value, n: Option<usize>) -> Result<UniMatrix> {
    let rows = v.as_array().ok_or_else(|| bad(&v.to_string(), "expected an array of rows"))?;
    let rows: Vec<Vec<Int>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| bad(&r.to_string(), "expected a row array"))?
                .iter()
                .map(int_from_json)
                .collect()
        })
        .collect::<Result<_>>()?;
    build(&v.to_string(), rows, n)
}

/// One-line notation `2 1 3`, or `s<i>`, `w0`, `e` given the degree.
pub fn parse_perm(s: &str, m: usize) -> Result<Perm> {
    let s = s.trim();
    if s == "w0" {
        return Ok(Perm::longest(m));
    }
    if s == "e" || s == "1" && m != 1 {
        return Ok(Perm::identity(m));
    }
    if let Some(i) = s.strip_prefix('s') {
        let i: usize = i.parse().map_err(|_| bad(s, "expected s<i>"))?;
        if i == 0 || i >= m {
            return Err(bad(s, format!("simple index out of range for {m} strands")));
        }
        return Ok(Perm::simple(m, i));
    }
    let v: Vec<usize> = s.split_whitespace().map(|t| t.parse().map_err(|_| bad(t, "not a positive integer"))).collect::<Result<_>>()?;
    if v.len() != m {
        return Err(bad(s, format!("expected {m} images")));
    }
    Perm::from_one_line(&v).map_err(|_| bad(s, "not a permutation"))
}

/// A letter of the `Z^n` germ: a matrix or a named generator.
pub fn parse_zn_letter(s: &str, n: usize) -> Result<UniMatrix> {
    let s = s.trim();
    if s == "w0" {
        return Ok(UniMatrix::neg_identity(n));
    }
    if let Some(m) = s.strip_prefix("h:") {
        let m = parse_matrix(m, Some(n))?;
        if !is_in_h(&m) {
            return Err(bad(s, "not upper unitriangular"));
        }
        return Ok(m);
    }
    if let Some(rest) = s.strip_prefix('g') {
        let (i, blk) = rest.split_once(':').ok_or_else(|| bad(s, "expected g<i>:<2x2 block>"))?;
        let i: usize = i.trim().parse().map_err(|_| bad(s, "expected g<i>:<2x2 block>"))?;
        let b = parse_matrix(blk, Some(2))?;
        let blk = [[b.get(0, 0).clone(), b.get(0, 1).clone()], [b.get(1, 0).clone(), b.get(1, 1).clone()]];
        return embed_block(n, i, blk).map_err(|e| bad(s, e.to_string()));
    }
    if let Some(i) = s.strip_prefix('s') {
        let i: usize = i.parse().map_err(|_| bad(s, "expected s<i>"))?;
        if i == 0 || i > n {
            return Err(bad(s, format!("sign index out of range for n = {n}")));
        }
        return Ok(UniMatrix::sign_flip(n, i));
    }
    parse_matrix(s, Some(n))
}

/// Letters of a word with their inverse marks; blank input is the empty word.
pub fn split_word(s: &str) -> Vec<(&str, bool)> {
    s.split('|')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match t.strip_suffix("^-1") {
            Some(x) => (x.trim(), true),
            None => (t, false),
        })
        .collect()
}

pub fn parse_signed_word<E>(s: &str, letter: impl Fn(&str) -> Result<E>) -> Result<Vec<Signed<E>>> {
    split_word(s)
        .into_iter()
        .map(|(t, neg)| Ok(if neg { Signed::neg(letter(t)?) } else { Signed::pos(letter(t)?) }))
        .collect()
}

pub fn parse_positive_word<E>(s: &str, letter: impl Fn(&str) -> Result<E>) -> Result<Vec<E>> {
    split_word(s)
        .into_iter()
        .map(|(t, neg)| if neg { Err(bad(t, "inverse letter in a positive word")) } else { letter(t) })
        .collect()
}

pub fn format_word<E: std::fmt::Display>(w: &[E]) -> String {
    w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" | ")
}

/// `D^k | x1 | x2`, or `D^k |` for an empty body.
pub fn format_group_nf<E: std::fmt::Display>(nf: &GroupNF<E>) -> String {
    if nf.body.is_empty() {
        format!("D^{} |", nf.k)
    } else {
        format!("D^{} | {}", nf.k, format_word(&nf.body))
    }
}

pub fn group_nf_json<E>(nf: &GroupNF<E>, letter: impl Fn(&E) -> Value) -> Value {
    json!({ "k": nf.k, "body": nf.body.iter().map(letter).collect::<Vec<_>>() })
}

pub fn monoid_nf_json<E>(nf: &MonoidNF<E>, letter: impl Fn(&E) -> Value) -> Value {
    json!({ "body": nf.letters.iter().map(letter).collect::<Vec<_>>() })
}

pub fn perm_json(p: &Perm) -> Value {
    json!(p.one_line())
}

/// A presentation letter; the type defaults to the least `i` with the
/// letter in `H_i`.
pub fn parse_sletter(s: &str, n: usize) -> Result<SLetter> {
    let (body, ty) = match s.rsplit_once('@') {
        Some((b, t)) => (b, Some(t.trim().parse::<usize>().map_err(|_| bad(s, "expected @<type>"))?)),
        None => (s, None),
    };
    let g = parse_zn_letter(body, n)?;
    let ty = match ty {
        Some(t) => t,
        None => (1..n).find(|&i| in_h_i(&g, i)).ok_or_else(|| bad(s, "letter lies in no H_i"))?,
    };
    SLetter::new(g, ty).map_err(|e| bad(s, e.to_string()))
}

pub fn parse_sword(s: &str, n: usize) -> Result<SWord> {
    let letters = parse_positive_word(s, |t| parse_sletter(t, n))?;
    Ok(SWord::new(n, letters)?)
}

pub fn format_sletter(l: &SLetter) -> String {
    format!("{} @{}", l.elem, l.ty)
}

pub fn format_sword(w: &SWord) -> String {
    w.letters.iter().map(format_sletter).collect::<Vec<_>>().join(" | ")
}

pub fn sletter_json(l: &SLetter) -> Value {
    json!({ "type": l.ty, "matrix": matrix_json(&l.elem) })
}

pub fn sletter_from_json(v: &Value, n: usize) -> Result<SLetter> {
    let ty = v["type"].as_u64().ok_or_else(|| bad(&v.to_string(), "missing type"))? as usize;
    let m = matrix_from_json(&v["matrix"], Some(n))?;
    Ok(SLetter::new(m, ty)?)
}

pub fn sword_json(w: &SWord) -> Value {
    Value::Array(w.letters.iter().map(sletter_json).collect())
}

pub fn sword_from_json(v: &Value, n: usize) -> Result<SWord> {
    let ls = v.as_array().ok_or_else(|| bad(&v.to_string(), "expected an array of letters"))?;
    let letters = ls.iter().map(|l| sletter_from_json(l, n)).collect::<Result<_>>()?;
    Ok(SWord::new(n, letters)?)
}

fn srule_from_name(s: &str) -> Result<SRule> {
    Ok(match s {
        "S0" => SRule::S0,
        "S1" => SRule::S1,
        "S2" => SRule::S2,
        "S3" => SRule::S3,
        _ => return Err(bad(s, "unknown rule")),
    })
}

/// The derivation log: one record per step with the word after it.
pub fn derivation_json(start: &SWord, steps: &[SStep]) -> Result<Value> {
    let mut cur = start.clone();
    let mut out = Vec::with_capacity(steps.len());
    for s in steps {
        cur = zbraid_core::presentation::s_move(&cur, s)?;
        out.push(json!({
            "rule": s.rule.name(),
            "position": s.pos,
            "parameters": {
                "before": s.before.iter().map(sletter_json).collect::<Vec<_>>(),
                "after": s.after.iter().map(sletter_json).collect::<Vec<_>>(),
            },
            "word-after": sword_json(&cur),
        }));
    }
    Ok(Value::Array(out))
}

pub fn derivation_from_json(v: &Value, n: usize) -> Result<Vec<SStep>> {
    let arr = v.as_array().ok_or_else(|| bad(&v.to_string(), "expected an array of steps"))?;
    arr.iter()
        .map(|s| {
            let letters = |k: &str| -> Result<Vec<SLetter>> {
                s["parameters"][k]
                    .as_array()
                    .ok_or_else(|| bad(&s.to_string(), format!("missing parameters.{k}")))?
                    .iter()
                    .map(|l| sletter_from_json(l, n))
                    .collect()
            };
            Ok(SStep {
                rule: srule_from_name(s["rule"].as_str().unwrap_or(""))?,
                pos: s["position"].as_u64().ok_or_else(|| bad(&s.to_string(), "missing position"))? as usize,
                before: letters("before")?,
                after: letters("after")?,
            })
        })
        .collect()
}

pub fn tstep_json(s: &TStep, word_after: &[usize]) -> Value {
    let mut v = json!({ "rule": s.rule.name(), "position": s.pos, "parameters": {}, "word-after": word_after });
    if s.rule == TRule::T0 {
        v["parameters"] = json!({ "letter": s.letter });
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_text_and_json_round_trip() {
        let m = parse_matrix("-1 0; 0 1", Some(2)).unwrap();
        assert_eq!(m.to_string(), "-1 0; 0 1");
        assert_eq!(parse_matrix(&matrix_json(&m).to_string(), None).unwrap(), m);
        let big = parse_matrix("1 123456789012345678901234567890; 0 1", None).unwrap();
        assert_eq!(matrix_from_json(&matrix_json(&big), Some(2)).unwrap(), big);
    }

    #[test]
    fn bad_tokens_are_named() {
        let e = parse_matrix("1 x; 0 1", None).unwrap_err();
        assert!(e.to_string().contains("`x`"));
        assert!(parse_matrix("2 0; 0 1", None).is_err());
        assert!(parse_matrix("1 0 0; 0 1", None).is_err());
    }

    #[test]
    fn named_generators() {
        let g = parse_zn_letter("g2:0 1; 1 0", 3).unwrap();
        assert_eq!(g.to_string(), "1 0 0; 0 0 1; 0 1 0");
        assert_eq!(parse_zn_letter("s1", 2).unwrap().to_string(), "-1 0; 0 1");
        assert!(parse_zn_letter("h:1 0; 1 1", 2).is_err());
        let w = parse_signed_word("s1 | w0^-1", |t| parse_zn_letter(t, 2)).unwrap();
        assert!(w[1].inverse && !w[0].inverse);
    }

    #[test]
    fn sword_round_trip() {
        let w = parse_sword("g1:2 1; 1 1 | h:1 3 0; 0 1 0; 0 0 1@2", 3).unwrap();
        assert_eq!(w.type_word(), vec![1, 2]);
        assert_eq!(parse_sword(&format_sword(&w), 3).unwrap(), w);
        assert_eq!(sword_from_json(&sword_json(&w), 3).unwrap(), w);
    }

    #[test]
    fn perms() {
        assert_eq!(parse_perm("2 1 3", 3).unwrap(), Perm::simple(3, 1));
        assert_eq!(parse_perm("w0", 3).unwrap().one_line(), vec![3, 2, 1]);
        assert!(parse_perm("1 1 2", 3).is_err());
    }
}
