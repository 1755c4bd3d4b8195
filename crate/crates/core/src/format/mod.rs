//! Line-oriented text formats for presentations, complexes, move scripts and
//! certificates. `#` starts a comment; blank lines are ignored.

mod complex;
mod presentation;
mod script;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{make_group, FiniteGroup, GroupFamily};

pub use complex::{
    parse_certificate, parse_complex, write_certificate, write_chain_map, write_complex,
};
pub use presentation::{parse_presentation, write_presentation};
pub use script::{parse_script, write_script};

/// Non-empty lines with comments removed, tagged with 1-based line numbers.
pub(crate) struct Lines {
    items: Vec<(usize, String)>,
    pos: usize,
}

impl Lines {
    pub(crate) fn new(text: &str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                let l = l.split('#').next().unwrap_or("").trim();
                (!l.is_empty()).then(|| (i + 1, l.to_string()))
            })
            .collect();
        Lines { items, pos: 0 }
    }

    pub(crate) fn peek(&self) -> Option<&str> {
        self.items.get(self.pos).map(|(_, l)| l.as_str())
    }

    pub(crate) fn next(&mut self) -> Option<(usize, &str)> {
        let item = self.items.get(self.pos)?;
        self.pos += 1;
        Some((item.0, item.1.as_str()))
    }

    /// The line number of the next line, or one past the last.
    pub(crate) fn line_no(&self) -> usize {
        self.items
            .get(self.pos)
            .map(|(n, _)| *n)
            .unwrap_or_else(|| self.items.last().map_or(1, |(n, _)| n + 1))
    }

    pub(crate) fn expect(&mut self, what: &str) -> Result<(usize, String)> {
        let line = self.line_no();
        match self.next() {
            Some((n, l)) => Ok((n, l.to_string())),
            None => Err(Error::parse(line, format!("unexpected end of input, expected {what}"))),
        }
    }

    pub(crate) fn expect_exact(&mut self, word: &str) -> Result<()> {
        let (n, l) = self.expect(word)?;
        if l != word {
            return Err(Error::parse(n, format!("expected `{word}`, found `{l}`")));
        }
        Ok(())
    }

    pub(crate) fn is_done(&self) -> bool {
        self.pos >= self.items.len()
    }
}

/// Reads a `group <family>` or `group table N` line (followed by `N` rows).
pub(crate) fn parse_group(lines: &mut Lines) -> Result<Arc<FiniteGroup>> {
    let (n, l) = lines.expect("group line")?;
    let rest = l
        .strip_prefix("group ")
        .ok_or_else(|| Error::parse(n, format!("expected `group ...`, found `{l}`")))?
        .trim();
    if let Some(order) = rest.strip_prefix("table") {
        let order: usize = order
            .trim()
            .parse()
            .map_err(|_| Error::parse(n, "group table needs its order"))?;
        let mut table = Vec::with_capacity(order);
        for _ in 0..order {
            let (rn, row) = lines.expect("table row")?;
            let body = row
                .strip_prefix("row")
                .ok_or_else(|| Error::parse(rn, "expected `row ...`"))?;
            let cells: std::result::Result<Vec<usize>, _> =
                body.split_whitespace().map(str::parse).collect();
            let cells = cells.map_err(|_| Error::parse(rn, "table rows hold element indices"))?;
            table.push(cells);
        }
        let g = FiniteGroup::from_table(table, None).map_err(|e| Error::parse(n, e.to_string()))?;
        return Ok(Arc::new(g));
    }
    let family: GroupFamily = rest.parse().map_err(|e: Error| Error::parse(n, e.to_string()))?;
    let g = make_group(family).map_err(|e| Error::parse(n, e.to_string()))?;
    Ok(Arc::new(g))
}

pub(crate) fn write_group(g: &FiniteGroup, out: &mut String) {
    match g.family() {
        Some(f) => out.push_str(&format!("group {f}\n")),
        None => {
            out.push_str(&format!("group table {}\n", g.order()));
            for row in g.table() {
                let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                out.push_str(&format!("row {}\n", cells.join(" ")));
            }
        }
    }
}
