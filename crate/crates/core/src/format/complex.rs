use std::sync::Arc;

use num_bigint::BigInt;

use super::script::parse_move_line;
use super::{parse_group, write_group, Lines};
use crate::complex::{ChainComplex, ChainMap, HomologyGroup, HomologyReport};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::moves::{EquivalenceCertificate, MoveLog};
use crate::ring::{GroupRingElement, GroupRingMatrix};

fn write_matrix(label: &str, m: &GroupRingMatrix, out: &mut String) {
    out.push_str(label);
    out.push_str(":\n");
    for (i, j, e) in m.entries() {
        out.push_str(&format!("({i}, {j}, {e})\n"));
    }
}

fn write_body(c: &ChainComplex, out: &mut String) {
    let r = c.ranks();
    out.push_str(&format!("ranks {} {} {} {}\n", r[0], r[1], r[2], r[3]));
    match c.augmentation() {
        Some(w) => {
            let w: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("augmentation {}\n", w.join(" ")));
        }
        None => out.push_str("augmentation none\n"),
    }
    for k in 1..=3 {
        write_matrix(&format!("d{k}"), c.boundary(k), out);
    }
}

/// Writes the complex file format: `complex`, the group, ranks, augmentation weights
/// and the sparse `d1:`, `d2:`, `d3:` blocks.
pub fn write_complex(c: &ChainComplex) -> String {
    let mut out = String::from("complex\n");
    write_group(c.group(), &mut out);
    write_body(c, &mut out);
    out
}

fn parse_triple(n: usize, l: &str, group: &Arc<FiniteGroup>) -> Result<(usize, usize, GroupRingElement)> {
    let inner = l
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::parse(n, format!("expected `(row, col, element)`, found `{l}`")))?;
    let mut parts = inner.splitn(3, ',');
    let mut index = |what: &str| -> Result<usize> {
        parts
            .next()
            .and_then(|p| p.trim().parse().ok())
            .ok_or_else(|| Error::parse(n, format!("bad {what} index")))
    };
    let i = index("row")?;
    let j = index("column")?;
    let lit = parts
        .next()
        .ok_or_else(|| Error::parse(n, "missing element literal"))?;
    let e = GroupRingElement::parse(group, lit).map_err(|e| Error::parse(n, e.to_string()))?;
    Ok((i, j, e))
}

fn parse_matrix(
    lines: &mut Lines,
    label: &str,
    group: &Arc<FiniteGroup>,
    rows: usize,
    cols: usize,
) -> Result<GroupRingMatrix> {
    lines.expect_exact(&format!("{label}:"))?;
    let mut m = GroupRingMatrix::zero(group, rows, cols);
    while lines.peek().is_some_and(|l| l.starts_with('(')) {
        let (n, l) = lines.next().unwrap();
        let (i, j, e) = parse_triple(n, l, group)?;
        if i >= rows || j >= cols {
            return Err(Error::parse(
                n,
                format!("entry ({i}, {j}) outside the {rows}x{cols} matrix {label}"),
            ));
        }
        if m.entry(i, j).is_some() {
            return Err(Error::parse(n, format!("entry ({i}, {j}) of {label} given twice")));
        }
        m.set(i, j, e);
    }
    Ok(m)
}

fn parse_body(lines: &mut Lines, group: &Arc<FiniteGroup>) -> Result<ChainComplex> {
    let (n, l) = lines.expect("ranks line")?;
    let ranks: Vec<usize> = l
        .strip_prefix("ranks")
        .map(|r| r.split_whitespace().map(str::parse).collect::<std::result::Result<_, _>>())
        .and_then(|r| r.ok())
        .filter(|r: &Vec<usize>| r.len() == 4)
        .ok_or_else(|| Error::parse(n, "expected `ranks n0 n1 n2 n3`"))?;
    let ranks = [ranks[0], ranks[1], ranks[2], ranks[3]];
    let (an, al) = lines.expect("augmentation line")?;
    let rest = al
        .strip_prefix("augmentation")
        .ok_or_else(|| Error::parse(an, "expected `augmentation ...`"))?
        .trim();
    let augmentation = if rest == "none" {
        None
    } else {
        let w: std::result::Result<Vec<BigInt>, _> = rest.split_whitespace().map(str::parse).collect();
        let w = w.map_err(|_| Error::parse(an, "augmentation weights must be integers"))?;
        if w.len() != ranks[0] {
            return Err(Error::parse(an, format!("expected {} augmentation weights", ranks[0])));
        }
        Some(w)
    };
    let d1 = parse_matrix(lines, "d1", group, ranks[0], ranks[1])?;
    let d2 = parse_matrix(lines, "d2", group, ranks[1], ranks[2])?;
    let d3 = parse_matrix(lines, "d3", group, ranks[2], ranks[3])?;
    ChainComplex::new(group.clone(), ranks, d1, d2, d3, augmentation)
        .map_err(|e| Error::parse(n, e.to_string()))
}

pub fn parse_complex(text: &str) -> Result<ChainComplex> {
    let mut lines = Lines::new(text);
    lines.expect_exact("complex")?;
    let group = parse_group(&mut lines)?;
    let c = parse_body(&mut lines, &group)?;
    if !lines.is_done() {
        return Err(Error::parse(lines.line_no(), "trailing content after d3 block"));
    }
    Ok(c)
}

/// The `f0:` … `f3:` blocks of a chain map.
pub fn write_chain_map(f: &ChainMap) -> String {
    let mut out = String::new();
    for k in 0..4 {
        write_matrix(&format!("f{k}"), f.map(k), &mut out);
    }
    out
}

fn parse_homology_line(n: usize, l: &str) -> Result<HomologyGroup> {
    let bad = || Error::parse(n, format!("bad homology line `{l}`"));
    let rest = l.strip_prefix('H').ok_or_else(bad)?;
    let (deg, rest) = rest.split_once(": rank ").ok_or_else(bad)?;
    let (rank, rest) = rest.split_once(" torsion ").ok_or_else(bad)?;
    let inner = rest
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(bad)?;
    let torsion = if inner.is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|t| t.trim().parse::<BigInt>().map_err(|_| bad()))
            .collect::<Result<_>>()?
    };
    Ok(HomologyGroup {
        degree: deg.parse().map_err(|_| bad())?,
        rank: rank.parse().map_err(|_| bad())?,
        torsion,
    })
}

/// Writes a certificate: both complexes, the chain map, the move log (start complex and
/// moves) and the recorded cone homology.
pub fn write_certificate(cert: &EquivalenceCertificate) -> String {
    let mut out = String::from("certificate\n");
    write_group(cert.source.group(), &mut out);
    out.push_str("source\n");
    write_body(&cert.source, &mut out);
    out.push_str("end\ntarget\n");
    write_body(&cert.target, &mut out);
    out.push_str("end\nmap\n");
    out.push_str(&write_chain_map(&cert.map));
    out.push_str("end\nlog\n");
    write_body(&cert.log.start, &mut out);
    for mv in cert.log.moves() {
        out.push_str(&format!("move {mv}\n"));
    }
    out.push_str("end\ncone\n");
    out.push_str(&cert.cone.to_string());
    out.push_str("end\n");
    out
}

/// Parses a certificate. The log is replayed to rebuild its end; nothing is verified here.
pub fn parse_certificate(text: &str) -> Result<EquivalenceCertificate> {
    let mut lines = Lines::new(text);
    lines.expect_exact("certificate")?;
    let group = parse_group(&mut lines)?;
    lines.expect_exact("source")?;
    let source = parse_body(&mut lines, &group)?;
    lines.expect_exact("end")?;
    lines.expect_exact("target")?;
    let target = parse_body(&mut lines, &group)?;
    lines.expect_exact("end")?;
    lines.expect_exact("map")?;
    let mut maps = Vec::new();
    for k in 0..4 {
        maps.push(parse_matrix(
            &mut lines,
            &format!("f{k}"),
            &group,
            target.rank(k),
            source.rank(k),
        )?);
    }
    let maps: [GroupRingMatrix; 4] = maps.try_into().expect("four blocks");
    lines.expect_exact("end")?;
    let map = ChainMap::new(source.clone(), target.clone(), maps)?;
    lines.expect_exact("log")?;
    let start = parse_body(&mut lines, &group)?;
    let mut log = MoveLog::new(start);
    while lines.peek().is_some_and(|l| l.starts_with("move ")) {
        let (n, l) = lines.next().unwrap();
        let l = l.strip_prefix("move ").unwrap().to_string();
        for mv in parse_move_line(n, &l, &group)? {
            log.push(mv).map_err(|e| Error::parse(n, e.to_string()))?;
        }
    }
    lines.expect_exact("end")?;
    lines.expect_exact("cone")?;
    let mut groups = Vec::new();
    while lines.peek().is_some_and(|l| l.starts_with('H')) {
        let (n, l) = lines.next().unwrap();
        groups.push(parse_homology_line(n, l)?);
    }
    lines.expect_exact("end")?;
    if !lines.is_done() {
        return Err(Error::parse(lines.line_no(), "trailing content after certificate"));
    }
    Ok(EquivalenceCertificate {
        source,
        target,
        map,
        log,
        cone: HomologyReport {
            augmented: false,
            groups,
        },
    })
}
