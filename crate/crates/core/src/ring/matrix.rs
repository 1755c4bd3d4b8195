use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::element::{same_group, GroupRingElement};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::IntMatrix;

/// A sparse matrix over `ZG`. See the module docs for the composition convention.
#[derive(Clone)]
pub struct GroupRingMatrix {
    group: Arc<FiniteGroup>,
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), GroupRingElement>,
}

impl PartialEq for GroupRingMatrix {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group)
            && self.rows == other.rows
            && self.cols == other.cols
            && self.entries == other.entries
    }
}

impl Eq for GroupRingMatrix {}

impl fmt::Debug for GroupRingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingMatrix {}x{} [", self.rows, self.cols)?;
        for ((i, j), e) in &self.entries {
            write!(f, " ({i}, {j}, {e})")?;
        }
        write!(f, " ]")
    }
}

impl GroupRingMatrix {
    pub fn zero(group: &Arc<FiniteGroup>, rows: usize, cols: usize) -> Self {
        GroupRingMatrix {
            group: group.clone(),
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(group: &Arc<FiniteGroup>, n: usize) -> Self {
        let mut m = Self::zero(group, n, n);
        for i in 0..n {
            m.set(i, i, GroupRingElement::one(group));
        }
        m
    }

    /// Integer matrix embedded as multiples of the identity element.
    pub fn from_ints(group: &Arc<FiniteGroup>, rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols);
        let mut m = Self::zero(group, rows, cols);
        for (k, &v) in data.iter().enumerate() {
            m.set(k / cols, k % cols, GroupRingElement::from_int(group, v));
        }
        m
    }

    pub fn from_entries(
        group: &Arc<FiniteGroup>,
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, GroupRingElement)>,
    ) -> Result<Self> {
        let mut m = Self::zero(group, rows, cols);
        for (i, j, e) in entries {
            if i >= rows || j >= cols {
                return Err(Error::shape(format!(
                    "entry ({i}, {j}) outside a {rows}x{cols} matrix"
                )));
            }
            if !same_group(group, e.group()) {
                return Err(Error::GroupMismatch);
            }
            let sum = m.get(i, j).add(&e);
            m.set(i, j, sum);
        }
        Ok(m)
    }

    /// `I + e·E_ij` with `i ≠ j`.
    pub fn transvection(n: usize, i: usize, j: usize, e: GroupRingElement) -> Self {
        assert!(i != j && i < n && j < n, "transvection needs distinct indices below {n}");
        let mut m = Self::identity(e.group(), n);
        m.set(i, j, e);
        m
    }

    /// Identity except for the unit `sign·g` in position `(i, i)`.
    pub fn unit_scaling(group: &Arc<FiniteGroup>, n: usize, i: usize, sign: i8, g: usize) -> Self {
        let mut m = Self::identity(group, n);
        let mut u = GroupRingElement::element(group, g);
        if sign < 0 {
            u = u.neg();
        }
        m.set(i, i, u);
        m
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> GroupRingElement {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| GroupRingElement::zero(&self.group))
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<&GroupRingElement> {
        self.entries.get(&(i, j))
    }

    pub fn set(&mut self, i: usize, j: usize, e: GroupRingElement) {
        assert!(i < self.rows && j < self.cols, "({i}, {j}) out of range");
        if e.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), e);
        }
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &GroupRingElement)> {
        self.entries.iter().map(|((i, j), e)| (*i, *j, e))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn column_is_zero(&self, j: usize) -> bool {
        !self.entries.keys().any(|&(_, c)| c == j)
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.entries.range((i, 0)..(i + 1, 0)).next().is_none()
    }

    pub fn column(&self, j: usize) -> Vec<(usize, &GroupRingElement)> {
        self.entries()
            .filter(|&(_, c, _)| c == j)
            .map(|(i, _, e)| (i, e))
            .collect()
    }

    pub fn row(&self, i: usize) -> Vec<(usize, &GroupRingElement)> {
        self.entries
            .range((i, 0)..(i + 1, 0))
            .map(|(&(_, j), e)| (j, e))
            .collect()
    }

    fn check_group(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// Composite `self ∘ other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut by_row: Vec<Vec<(usize, &GroupRingElement)>> = vec![Vec::new(); other.rows];
        for ((j, k), b) in &other.entries {
            by_row[*j].push((*k, b));
        }
        let mut out = Self::zero(&self.group, self.rows, other.cols);
        for ((i, j), a) in &self.entries {
            for (k, b) in &by_row[*j] {
                let term = b.mul(a);
                let slot = out
                    .entries
                    .entry((*i, *k))
                    .or_insert_with(|| GroupRingElement::zero(&self.group));
                *slot = slot.add(&term);
            }
        }
        out.entries.retain(|_, e| !e.is_zero());
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        if self.shape() != other.shape() {
            return Err(Error::shape(format!(
                "cannot add {:?} and {:?}",
                self.shape(),
                other.shape()
            )));
        }
        let mut out = self.clone();
        for ((i, j), e) in &other.entries {
            let s = out.get(*i, *j).add(e);
            out.set(*i, *j, s);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for e in out.entries.values_mut() {
            *e = e.neg();
        }
        out
    }

    /// Block diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        let mut out = Self::zero(&self.group, self.rows + other.rows, self.cols + other.cols);
        out.place(0, 0, self);
        out.place(self.rows, self.cols, other);
        Ok(out)
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`, overwriting.
    pub fn place(&mut self, r0: usize, c0: usize, block: &Self) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for ((i, j), e) in &block.entries {
            self.set(r0 + i, c0 + j, e.clone());
        }
    }

    /// The same map viewed inside a larger free module: pads with zero rows and columns.
    pub fn resized(&self, rows: usize, cols: usize) -> Self {
        let mut out = Self::zero(&self.group, rows, cols);
        for ((i, j), e) in &self.entries {
            if *i < rows && *j < cols {
                out.set(*i, *j, e.clone());
            }
        }
        out
    }

    /// Submatrix on the given row and column indices, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut rpos = vec![None; self.rows];
        for (k, &r) in rows.iter().enumerate() {
            rpos[r] = Some(k);
        }
        let mut cpos = vec![None; self.cols];
        for (k, &c) in cols.iter().enumerate() {
            cpos[c] = Some(k);
        }
        let mut out = Self::zero(&self.group, rows.len(), cols.len());
        for ((i, j), e) in &self.entries {
            if let (Some(a), Some(b)) = (rpos[*i], cpos[*j]) {
                out.set(a, b, e.clone());
            }
        }
        out
    }

    /// Applies the map to a column vector.
    pub fn apply(&self, v: &[GroupRingElement]) -> Vec<GroupRingElement> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![GroupRingElement::zero(&self.group); self.rows];
        for ((i, j), a) in &self.entries {
            out[*i] = out[*i].add(&v[*j].mul(a));
        }
        out
    }

    /// Each entry replaced by its `|G|×|G|` right regular representation block,
    /// so that `integerize(A·B) = integerize(A)·integerize(B)`.
    ///
    /// Coordinate `i·|G| + g` corresponds to the element `g` in the `i`-th summand.
    pub fn integerize(&self) -> IntMatrix {
        let n = self.group.order();
        let mut triplets = Vec::new();
        for ((i, j), a) in &self.entries {
            for (k, c) in a.terms() {
                for g in 0..n {
                    triplets.push((i * n + self.group.mul(g, k), j * n + g, c.clone()));
                }
            }
        }
        IntMatrix::from_triplets(self.rows * n, self.cols * n, triplets)
    }

    /// Inverse of an elementary matrix (transvection or unit scaling), `None` for
    /// anything else.
    pub fn elementary_inverse(&self) -> Option<Self> {
        match self.elementary_kind()? {
            Elementary::Identity => Some(self.clone()),
            Elementary::Transvection { i, j } => {
                let mut inv = self.clone();
                inv.set(i, j, self.get(i, j).neg());
                Some(inv)
            }
            Elementary::Scaling { i, sign, g } => {
                let h = self.group.inv(g);
                Some(Self::unit_scaling(&self.group, self.rows, i, sign, h))
            }
        }
    }

    /// Classifies a square matrix as one of the elementary shapes.
    pub fn elementary_kind(&self) -> Option<Elementary> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut off = Vec::new();
        let mut odd_diag = Vec::new();
        for ((i, j), e) in &self.entries {
            if i == j {
                if !e.is_one() {
                    odd_diag.push((*i, e));
                }
            } else {
                off.push((*i, *j));
            }
        }
        let diag_count = self.entries.keys().filter(|(i, j)| i == j).count();
        let missing_diag = n - diag_count;
        match (off.len(), odd_diag.len(), missing_diag) {
            (0, 0, 0) => Some(Elementary::Identity),
            (1, 0, 0) => Some(Elementary::Transvection {
                i: off[0].0,
                j: off[0].1,
            }),
            (0, 1, 0) => {
                let (i, e) = odd_diag[0];
                if e.support_len() != 1 {
                    return None;
                }
                let (g, c) = e.terms().next().unwrap();
                if c.magnitude().is_one() {
                    let sign = if c == &BigInt::one() { 1 } else { -1 };
                    Some(Elementary::Scaling { i, sign, g })
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Elementary {
    Identity,
    Transvection { i: usize, j: usize },
    Scaling { i: usize, sign: i8, g: usize },
}
