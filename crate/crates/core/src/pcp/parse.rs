use std::collections::HashSet;

use super::{is_prime, PcPresentation, Word};
use crate::error::{Error, Result};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..pos],
                    column: line[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(pos);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: line[..s].chars().count() + 1,
        });
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(tok: &Token<'_>, line: usize, what: &str) -> Result<T> {
    tok.text.parse().map_err(|_| {
        syntax(
            line,
            tok.column,
            format!("expected {what}, found `{}`", tok.text),
        )
    })
}

fn with_line(err: Error, line: usize) -> Error {
    match err {
        Error::Index { message, .. } => Error::Index {
            line: Some(line),
            message,
        },
        other => other,
    }
}

fn parse_word(toks: &[Token<'_>], line: usize, p: u32) -> Result<Word> {
    let mut pairs = Vec::with_capacity(toks.len());
    for tok in toks {
        let (idx, exp) = tok.text.split_once(':').ok_or_else(|| {
            syntax(
                line,
                tok.column,
                format!("expected `<index>:<exponent>`, found `{}`", tok.text),
            )
        })?;
        let index: usize = idx
            .parse()
            .map_err(|_| syntax(line, tok.column, format!("bad generator index `{idx}`")))?;
        let exp: u32 = exp.parse().map_err(|_| {
            syntax(
                line,
                tok.column + idx.chars().count() + 1,
                format!("bad exponent `{exp}`"),
            )
        })?;
        if exp >= p {
            return Err(syntax(
                line,
                tok.column + idx.chars().count() + 1,
                format!("exponent {exp} not in [0, {p})"),
            ));
        }
        pairs.push((index, exp));
    }
    Word::new(pairs).map_err(|e| with_line(e, line))
}

/// Parses the line-oriented presentation format:
///
/// ```text
/// name <identifier>
/// prime <p>
/// gens <n>
/// pow <i> = <word>
/// comm <j> <i> = <word>     # j > i
/// ```
///
/// A word is a (possibly empty) space separated list of `<index>:<exponent>`
/// tokens. Everything after `#` is a comment. `name`, `prime` and `gens` must
/// precede the relations.
pub fn parse_presentation(text: &str) -> Result<PcPresentation> {
    let mut name: Option<String> = None;
    let mut prime: Option<u32> = None;
    let mut pres: Option<PcPresentation> = None;
    let mut seen_pow = HashSet::new();
    let mut seen_comm = HashSet::new();
    let mut last_line = 0;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(head) = toks.first() else { continue };

        match head.text {
            "name" => {
                if toks.len() != 2 {
                    return Err(syntax(line, head.column, "expected `name <identifier>`"));
                }
                let id = toks[1].text;
                if !id
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'))
                {
                    return Err(syntax(
                        line,
                        toks[1].column,
                        format!("bad identifier `{id}`"),
                    ));
                }
                if name.is_some() {
                    return Err(syntax(line, head.column, "duplicate `name`"));
                }
                name = Some(id.to_string());
            }
            "prime" => {
                if toks.len() != 2 {
                    return Err(syntax(line, head.column, "expected `prime <p>`"));
                }
                if prime.is_some() {
                    return Err(syntax(line, head.column, "duplicate `prime`"));
                }
                let p: u32 = number(&toks[1], line, "a prime")?;
                if !is_prime(p) {
                    return Err(Error::NonPrime(p));
                }
                prime = Some(p);
            }
            "gens" => {
                if toks.len() != 2 {
                    return Err(syntax(line, head.column, "expected `gens <n>`"));
                }
                if pres.is_some() {
                    return Err(syntax(line, head.column, "duplicate `gens`"));
                }
                let (Some(nm), Some(p)) = (name.as_ref(), prime) else {
                    return Err(syntax(
                        line,
                        head.column,
                        "`name` and `prime` must precede `gens`",
                    ));
                };
                let n: usize = number(&toks[1], line, "a generator count")?;
                pres = Some(PcPresentation::new(nm.clone(), p, n).map_err(|e| with_line(e, line))?);
            }
            "pow" => {
                let Some(pres) = pres.as_mut() else {
                    return Err(syntax(line, head.column, "`gens` must precede relations"));
                };
                if toks.len() < 3 || toks[2].text != "=" {
                    return Err(syntax(line, head.column, "expected `pow <i> = <word>`"));
                }
                let i: usize = number(&toks[1], line, "a generator index")?;
                let word = parse_word(&toks[3..], line, pres.prime())?;
                if !seen_pow.insert(i) {
                    return Err(syntax(
                        line,
                        head.column,
                        format!("duplicate power relation for {i}"),
                    ));
                }
                pres.set_power(i, word).map_err(|e| with_line(e, line))?;
            }
            "comm" => {
                let Some(pres) = pres.as_mut() else {
                    return Err(syntax(line, head.column, "`gens` must precede relations"));
                };
                if toks.len() < 4 || toks[3].text != "=" {
                    return Err(syntax(
                        line,
                        head.column,
                        "expected `comm <j> <i> = <word>`",
                    ));
                }
                let j: usize = number(&toks[1], line, "a generator index")?;
                let i: usize = number(&toks[2], line, "a generator index")?;
                let word = parse_word(&toks[4..], line, pres.prime())?;
                if !seen_comm.insert((j, i)) {
                    return Err(syntax(
                        line,
                        head.column,
                        format!("duplicate commutator relation for ({j}, {i})"),
                    ));
                }
                pres.set_commutator(j, i, word)
                    .map_err(|e| with_line(e, line))?;
            }
            other => {
                return Err(syntax(
                    line,
                    head.column,
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }

    pres.ok_or_else(|| syntax(last_line.max(1), 1, "missing `name`, `prime` or `gens`"))
}
