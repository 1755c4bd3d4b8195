//! Elementary moves on chain complexes, each paired with the chain map it induces,
//! and the procedures built from them.

mod certificate;
mod compare;
mod reduce;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::{ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ring::{GroupRingElement, GroupRingMatrix};

pub use certificate::EquivalenceCertificate;
pub use compare::{schanuel_compare, CompareOutcome};
pub use reduce::reduce_d2;

/// An invertible elementary matrix, sized by the degree it acts on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementaryMatrix {
    /// `I + e·E_ij`, `i ≠ j`.
    Transvection { i: usize, j: usize, e: GroupRingElement },
    /// The identity with `±g` in position `(i, i)`.
    Scaling { i: usize, sign: i8, g: usize },
}

impl ElementaryMatrix {
    pub fn to_matrix(&self, group: &Arc<FiniteGroup>, n: usize) -> GroupRingMatrix {
        match self {
            ElementaryMatrix::Transvection { i, j, e } => {
                GroupRingMatrix::transvection(n, *i, *j, e.clone())
            }
            ElementaryMatrix::Scaling { i, sign, g } => {
                GroupRingMatrix::unit_scaling(group, n, *i, *sign, *g)
            }
        }
    }

    pub fn inverse(&self, group: &FiniteGroup) -> Self {
        match self {
            ElementaryMatrix::Transvection { i, j, e } => ElementaryMatrix::Transvection {
                i: *i,
                j: *j,
                e: e.neg(),
            },
            ElementaryMatrix::Scaling { i, sign, g } => ElementaryMatrix::Scaling {
                i: *i,
                sign: *sign,
                g: group.inv(*g),
            },
        }
    }

    fn check(&self, group: &FiniteGroup, n: usize) -> std::result::Result<(), String> {
        match self {
            ElementaryMatrix::Transvection { i, j, e } => {
                if i == j {
                    return Err("transvection needs i != j".into());
                }
                if *i >= n || *j >= n {
                    return Err(format!("transvection index out of range for rank {n}"));
                }
                if e.group().order() != group.order() {
                    return Err("transvection entry over another group".into());
                }
            }
            ElementaryMatrix::Scaling { i, sign, g } => {
                if *i >= n {
                    return Err(format!("scaling index out of range for rank {n}"));
                }
                if sign.abs() != 1 {
                    return Err("scaling sign must be +1 or -1".into());
                }
                if *g >= group.order() {
                    return Err(format!("no group element g{g}"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// Direct sum with `ZG^count` in degree 2 carrying zero boundary.
    Stabilize { count: usize },
    /// Direct sum with `ZG = ZG` in degrees `(degree, degree - 1)`, appended last.
    ElementaryExpansion { degree: usize },
    /// `∂_k ← ∂_k·E`, `∂_{k+1} ← E⁻¹·∂_{k+1}`; at degree 0 the augmentation follows `E`.
    BasisAutomorphism { degree: usize, matrix: ElementaryMatrix },
    /// Turns a 2-complex into a 3-complex whose `∂3` includes the given zero columns of `∂2`.
    AttachCells { columns: Vec<usize> },
    /// Removes all 3-cells when `∂3` is a coordinate inclusion.
    SplitOff3Cells,
    /// Removes the pair `(cell, b)` where column `cell` of `∂_degree` is the basis vector `e_b`
    /// and row `b` has no other entry.
    Collapse { degree: usize, cell: usize },
}

impl Move {
    pub fn transvection(degree: usize, i: usize, j: usize, e: GroupRingElement) -> Self {
        Move::BasisAutomorphism {
            degree,
            matrix: ElementaryMatrix::Transvection { i, j, e },
        }
    }

    pub fn scaling(degree: usize, i: usize, sign: i8, g: usize) -> Self {
        Move::BasisAutomorphism {
            degree,
            matrix: ElementaryMatrix::Scaling { i, sign, g },
        }
    }

    /// The inverse move where one exists within the move set.
    pub fn inverse(&self, group: &FiniteGroup) -> Option<Move> {
        match self {
            Move::BasisAutomorphism { degree, matrix } => Some(Move::BasisAutomorphism {
                degree: *degree,
                matrix: matrix.inverse(group),
            }),
            Move::Stabilize { count: 0 } => Some(self.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Stabilize { count } => write!(f, "stab {count}"),
            Move::ElementaryExpansion { degree } => write!(f, "expand {degree}"),
            Move::BasisAutomorphism { degree, matrix } => match matrix {
                ElementaryMatrix::Transvection { i, j, e } => {
                    write!(f, "transvect {degree} {i} {j} {e}")
                }
                ElementaryMatrix::Scaling { i, sign, g } => {
                    write!(f, "scale {degree} {i} {sign} g{g}")
                }
            },
            Move::AttachCells { columns } => {
                let c: Vec<String> = columns.iter().map(|c| c.to_string()).collect();
                write!(f, "attach {}", c.join(","))
            }
            Move::SplitOff3Cells => write!(f, "split3"),
            Move::Collapse { degree, cell } => write!(f, "collapse {degree} {cell}"),
        }
    }
}

/// The three transvections whose product is `[[0,1],[-1,0]]` on coordinates `(a, b)`:
/// `[[1,0],[-1,1]]·[[1,1],[0,1]]·[[1,0],[-1,1]]`.
pub fn swap_factors(group: &Arc<FiniteGroup>, a: usize, b: usize) -> [ElementaryMatrix; 3] {
    let minus_one = GroupRingElement::from_int(group, -1);
    let one = GroupRingElement::one(group);
    let lower = ElementaryMatrix::Transvection {
        i: b,
        j: a,
        e: minus_one,
    };
    let upper = ElementaryMatrix::Transvection { i: a, j: b, e: one };
    [lower.clone(), upper, lower]
}

/// `swap_factors` as a move script on degree `degree`.
pub fn swap_moves(group: &Arc<FiniteGroup>, degree: usize, a: usize, b: usize) -> Vec<Move> {
    swap_factors(group, a, b)
        .into_iter()
        .map(|matrix| Move::BasisAutomorphism { degree, matrix })
        .collect()
}

fn identity_maps(c: &ChainComplex) -> [GroupRingMatrix; 4] {
    [0, 1, 2, 3].map(|k| GroupRingMatrix::identity(c.group(), c.rank(k)))
}

fn boundaries(c: &ChainComplex) -> [GroupRingMatrix; 3] {
    [1, 2, 3].map(|k| c.boundary(k).clone())
}

fn rebuild(
    c: &ChainComplex,
    b: [GroupRingMatrix; 3],
    augmentation: Option<Vec<BigInt>>,
) -> Result<ChainComplex> {
    let ranks = [b[0].rows(), b[0].cols(), b[1].cols(), b[2].cols()];
    let [d1, d2, d3] = b;
    ChainComplex::new(c.group().clone(), ranks, d1, d2, d3, augmentation)
}

/// Applies one move; returns the new complex and the chain map from old to new.
pub fn apply_move(c: &ChainComplex, mv: &Move) -> std::result::Result<(ChainComplex, ChainMap), String> {
    let g = c.group();
    let n = c.ranks();
    let mut b = boundaries(c);
    let mut aug = c.augmentation().map(|w| w.to_vec());
    let mut maps = identity_maps(c);
    match mv {
        Move::Stabilize { count } => {
            let n2 = n[2] + count;
            b[1] = b[1].resized(n[1], n2);
            b[2] = b[2].resized(n2, n[3]);
            maps[2] = maps[2].resized(n2, n[2]);
        }
        Move::ElementaryExpansion { degree: i } => {
            let i = *i;
            if !(1..=3).contains(&i) {
                return Err(format!("expansion degree must be 1, 2 or 3, got {i}"));
            }
            let mut d = b[i - 1].resized(n[i - 1] + 1, n[i] + 1);
            d.set(n[i - 1], n[i], GroupRingElement::one(g));
            b[i - 1] = d;
            if i < 3 {
                b[i] = b[i].resized(n[i] + 1, n[i + 1]);
            }
            if i >= 2 {
                b[i - 2] = b[i - 2].resized(n[i - 2], n[i - 1] + 1);
            }
            if i == 1 {
                if let Some(w) = aug.as_mut() {
                    w.push(BigInt::zero());
                }
            }
            maps[i] = maps[i].resized(n[i] + 1, n[i]);
            maps[i - 1] = maps[i - 1].resized(n[i - 1] + 1, n[i - 1]);
        }
        Move::BasisAutomorphism { degree: k, matrix } => {
            let k = *k;
            if k > 3 {
                return Err(format!("no chain group in degree {k}"));
            }
            matrix.check(g, n[k])?;
            let e = matrix.to_matrix(g, n[k]);
            let e_inv = matrix.inverse(g).to_matrix(g, n[k]);
            if k >= 1 {
                b[k - 1] = b[k - 1].mul(&e).map_err(|e| e.to_string())?;
            }
            if k < 3 {
                b[k] = e_inv.mul(&b[k]).map_err(|e| e.to_string())?;
            }
            if k == 0 {
                if let Some(w) = aug.as_mut() {
                    let mut next = vec![BigInt::zero(); n[0]];
                    for (i, j, x) in e.entries() {
                        next[j] += &w[i] * x.augmentation();
                    }
                    *w = next;
                }
            }
            maps[k] = e_inv;
        }
        Move::AttachCells { columns } => {
            if n[3] != 0 {
                return Err("attach needs a 2-complex".into());
            }
            let mut seen = std::collections::BTreeSet::new();
            for &col in columns {
                if col >= n[2] {
                    return Err(format!("column {col} out of range for rank {}", n[2]));
                }
                if !seen.insert(col) {
                    return Err(format!("column {col} listed twice"));
                }
                if !c.boundary(2).column_is_zero(col) {
                    return Err(format!(
                        "column {col} has nonzero boundary: not a pi2-trivial summand in the implemented sense"
                    ));
                }
            }
            let mut d3 = GroupRingMatrix::zero(g, n[2], columns.len());
            for (t, &col) in columns.iter().enumerate() {
                d3.set(col, t, GroupRingElement::one(g));
            }
            b[2] = d3;
            maps[3] = GroupRingMatrix::zero(g, columns.len(), 0);
        }
        Move::SplitOff3Cells => {
            if coordinate_inclusion(c.boundary(3)).is_none() {
                return Err("boundary of the 3-cells is not a coordinate inclusion".into());
            }
            b[2] = GroupRingMatrix::zero(g, n[2], 0);
            maps[3] = GroupRingMatrix::zero(g, 0, n[3]);
        }
        Move::Collapse { degree: i, cell } => {
            let (i, cell) = (*i, *cell);
            if !(1..=3).contains(&i) {
                return Err(format!("collapse degree must be 1, 2 or 3, got {i}"));
            }
            if cell >= n[i] {
                return Err(format!("no cell {cell} in degree {i}"));
            }
            let d = c.boundary(i);
            let col = d.column(cell);
            let [(row, e)] = col.as_slice() else {
                return Err(format!("column {cell} of d{i} is not a basis vector"));
            };
            if !e.is_one() {
                return Err(format!("column {cell} of d{i} is not a basis vector"));
            }
            let row = *row;
            if d.row(row).len() != 1 {
                return Err(format!("row {row} of d{i} has other entries"));
            }
            let keep = |len: usize, drop: usize| -> Vec<usize> {
                (0..len).filter(|&x| x != drop).collect()
            };
            let ki = keep(n[i], cell);
            let kl = keep(n[i - 1], row);
            b[i - 1] = b[i - 1].select(&kl, &ki);
            if i < 3 {
                b[i] = b[i].select(&ki, &(0..n[i + 1]).collect::<Vec<_>>());
            }
            if i >= 2 {
                b[i - 2] = b[i - 2].select(&(0..n[i - 2]).collect::<Vec<_>>(), &kl);
            }
            if i == 1 {
                if let Some(w) = aug.as_mut() {
                    w.remove(row);
                }
            }
            maps[i] = maps[i].select(&ki, &(0..n[i]).collect::<Vec<_>>());
            maps[i - 1] = maps[i - 1].select(&kl, &(0..n[i - 1]).collect::<Vec<_>>());
        }
    }
    let next = rebuild(c, b, aug).map_err(|e| e.to_string())?;
    let map = ChainMap::new(c.clone(), next.clone(), maps).map_err(|e| e.to_string())?;
    Ok((next, map))
}

/// For a coordinate inclusion, the row hit by each column.
pub(crate) fn coordinate_inclusion(d: &GroupRingMatrix) -> Option<Vec<usize>> {
    let mut rows = Vec::with_capacity(d.cols());
    for j in 0..d.cols() {
        let col = d.column(j);
        let [(r, e)] = col.as_slice() else { return None };
        if !e.is_one() || rows.contains(r) {
            return None;
        }
        rows.push(*r);
    }
    Some(rows)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogEntry {
    pub mv: Move,
    pub before: [usize; 4],
    pub after: [usize; 4],
}

/// Moves applied to `start`, in order, ending at `end`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveLog {
    pub start: ChainComplex,
    pub entries: Vec<LogEntry>,
    pub end: ChainComplex,
}

impl MoveLog {
    pub fn new(start: ChainComplex) -> Self {
        MoveLog {
            end: start.clone(),
            start,
            entries: Vec::new(),
        }
    }

    pub fn moves(&self) -> impl Iterator<Item = &Move> {
        self.entries.iter().map(|e| &e.mv)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Applies `mv` to the current end and records it.
    pub fn push(&mut self, mv: Move) -> Result<ChainMap> {
        let index = self.entries.len();
        let (next, map) =
            apply_move(&self.end, &mv).map_err(|msg| Error::Move { index, msg })?;
        self.entries.push(LogEntry {
            mv,
            before: self.end.ranks(),
            after: next.ranks(),
        });
        self.end = next;
        Ok(map)
    }

    /// Replays every move from `start` and checks the recorded ranks and end exactly.
    pub fn replay(&self) -> Result<ChainComplex> {
        let mut c = self.start.clone();
        for (index, entry) in self.entries.iter().enumerate() {
            if c.ranks() != entry.before {
                return Err(Error::Move {
                    index,
                    msg: "recorded ranks before the move do not match".into(),
                });
            }
            c = apply_move(&c, &entry.mv)
                .map_err(|msg| Error::Move { index, msg })?
                .0;
            if c.ranks() != entry.after {
                return Err(Error::Move {
                    index,
                    msg: "recorded ranks after the move do not match".into(),
                });
            }
        }
        if c != self.end {
            return Err(Error::Move {
                index: self.entries.len(),
                msg: "replay does not reproduce the recorded end complex".into(),
            });
        }
        Ok(c)
    }

    /// The number of leading stabilization moves.
    pub fn stabilization_prefix(&self) -> usize {
        self.entries
            .iter()
            .take_while(|e| matches!(e.mv, Move::Stabilize { .. }))
            .count()
    }

    /// The complex after the first `k` moves.
    pub fn state_after(&self, k: usize) -> Result<ChainComplex> {
        let mut c = self.start.clone();
        for (index, entry) in self.entries.iter().take(k).enumerate() {
            c = apply_move(&c, &entry.mv)
                .map_err(|msg| Error::Move { index, msg })?
                .0;
        }
        Ok(c)
    }

    /// The composite chain map of moves `k..`, from the state after `k` moves to `end`.
    pub fn composite_from(&self, k: usize) -> Result<ChainMap> {
        let mut c = self.state_after(k)?;
        let mut total = ChainMap::identity(&c);
        for (index, entry) in self.entries.iter().enumerate().skip(k) {
            let (next, map) =
                apply_move(&c, &entry.mv).map_err(|msg| Error::Move { index, msg })?;
            total = total.then(&map)?;
            c = next;
        }
        Ok(total)
    }
}

/// Applies `script` in order; the first inapplicable move is reported with its index.
pub fn apply_moves(f: &ChainComplex, script: &[Move]) -> Result<(ChainComplex, MoveLog)> {
    let mut log = MoveLog::new(f.clone());
    for mv in script {
        log.push(mv.clone())?;
    }
    Ok((log.end.clone(), log))
}

pub fn stabilize(f: &ChainComplex, r: usize) -> Result<(ChainComplex, MoveLog)> {
    apply_moves(f, &[Move::Stabilize { count: r }])
}

pub fn elementary_expansion(f: &ChainComplex, degree: usize) -> Result<(ChainComplex, MoveLog)> {
    apply_moves(f, &[Move::ElementaryExpansion { degree }])
}

pub fn basis_automorphism(
    f: &ChainComplex,
    degree: usize,
    matrix: ElementaryMatrix,
) -> Result<(ChainComplex, MoveLog)> {
    apply_moves(f, &[Move::BasisAutomorphism { degree, matrix }])
}

/// Attaches 3-cells along zero columns of `∂2`.
pub fn attach_cells(f: &ChainComplex, columns: &[usize]) -> Result<ChainComplex> {
    if f.rank(3) != 0 {
        return Err(Error::input("attach_cells needs a 2-complex"));
    }
    apply_move(
        f,
        &Move::AttachCells {
            columns: columns.to_vec(),
        },
    )
    .map(|(c, _)| c)
    .map_err(Error::Input)
}
