use std::sync::Arc;

use super::Lines;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::moves::{swap_moves, Move};
use crate::ring::GroupRingElement;

fn int(n: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(n, format!("expected {what}")))
}

fn no_more(n: usize, mut toks: std::str::SplitWhitespace<'_>) -> Result<()> {
    match toks.next() {
        None => Ok(()),
        Some(t) => Err(Error::parse(n, format!("unexpected `{t}`"))),
    }
}

/// One script line; `swap` expands to its three transvections.
pub(crate) fn parse_move_line(n: usize, l: &str, group: &Arc<FiniteGroup>) -> Result<Vec<Move>> {
    let mut toks = l.split_whitespace();
    let cmd = toks.next().unwrap_or("");
    let moves = match cmd {
        "stab" => {
            let count = int(n, toks.next(), "a count")?;
            no_more(n, toks)?;
            vec![Move::Stabilize { count }]
        }
        "expand" => {
            let degree = int(n, toks.next(), "a degree")?;
            no_more(n, toks)?;
            vec![Move::ElementaryExpansion { degree }]
        }
        "collapse" => {
            let degree = int(n, toks.next(), "a degree")?;
            let cell = int(n, toks.next(), "a cell index")?;
            no_more(n, toks)?;
            vec![Move::Collapse { degree, cell }]
        }
        "transvect" => {
            let k = int(n, toks.next(), "a degree")?;
            let i = int(n, toks.next(), "a row index")?;
            let j = int(n, toks.next(), "a column index")?;
            let lit: Vec<&str> = toks.collect();
            if lit.is_empty() {
                return Err(Error::parse(n, "expected a group ring element"));
            }
            let e = GroupRingElement::parse(group, &lit.join(" "))
                .map_err(|e| Error::parse(n, e.to_string()))?;
            vec![Move::transvection(k, i, j, e)]
        }
        "scale" => {
            let k = int(n, toks.next(), "a degree")?;
            let i = int(n, toks.next(), "an index")?;
            let sign: i8 = match toks.next() {
                Some("1") | Some("+1") => 1,
                Some("-1") => -1,
                _ => return Err(Error::parse(n, "expected sign 1 or -1")),
            };
            let g = match toks.next() {
                None => group.identity(),
                Some(t) => {
                    let g: usize = t
                        .strip_prefix('g')
                        .and_then(|x| x.parse().ok())
                        .ok_or_else(|| Error::parse(n, format!("bad group element `{t}`")))?;
                    if g >= group.order() {
                        return Err(Error::parse(n, format!("element g{g} out of range")));
                    }
                    g
                }
            };
            no_more(n, toks)?;
            vec![Move::scaling(k, i, sign, g)]
        }
        "swap" => {
            let k = int(n, toks.next(), "a degree")?;
            let a = int(n, toks.next(), "an index")?;
            let b = int(n, toks.next(), "an index")?;
            no_more(n, toks)?;
            if a == b {
                return Err(Error::parse(n, "swap needs two different indices"));
            }
            swap_moves(group, k, a, b)
        }
        "attach" => {
            let rest: String = toks.collect::<Vec<_>>().join("");
            let columns = rest
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::parse(n, "expected comma-separated column indices"))?;
            if columns.is_empty() {
                return Err(Error::parse(n, "attach needs at least one column"));
            }
            vec![Move::AttachCells { columns }]
        }
        "split3" => {
            no_more(n, toks)?;
            vec![Move::SplitOff3Cells]
        }
        other => return Err(Error::parse(n, format!("unknown move `{other}`"))),
    };
    Ok(moves)
}

/// Parses a move script, one move per line.
pub fn parse_script(text: &str, group: &Arc<FiniteGroup>) -> Result<Vec<Move>> {
    let mut lines = Lines::new(text);
    let mut out = Vec::new();
    while let Some((n, l)) = lines.next() {
        out.extend(parse_move_line(n, l, group)?);
    }
    Ok(out)
}

pub fn write_script(moves: &[Move]) -> String {
    moves.iter().map(|m| format!("{m}\n")).collect()
}
