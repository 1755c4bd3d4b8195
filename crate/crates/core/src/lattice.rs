//! Exact linear algebra over the integers.
//!
//! Matrices are stored as sorted sparse rows of arbitrary-precision integers.
//! Every routine first eliminates unit pivots sparsely (Markowitz order), which
//! handles the bulk of an integerized boundary matrix without fill-in blowup,
//! and finishes the small residual block densely.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type SparseRow = Vec<(usize, BigInt)>;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseRow>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.nrows, self.ncols)?;
        for r in self.to_dense() {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        IntMatrix {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.rows[i].push((i, BigInt::one()));
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, BigInt)>,
    ) -> Self {
        let mut rows: Vec<SparseRow> = vec![Vec::new(); nrows];
        for (r, c, v) in triplets {
            assert!(r < nrows && c < ncols, "triplet ({r}, {c}) out of range");
            rows[r].push((c, v));
        }
        for row in &mut rows {
            row.sort_by_key(|(c, _)| *c);
            let mut merged: SparseRow = Vec::with_capacity(row.len());
            for (c, v) in row.drain(..) {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv += v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            *row = merged;
        }
        IntMatrix { nrows, ncols, rows }
    }

    pub fn from_dense(rows: &[Vec<BigInt>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let triplets = rows.iter().enumerate().flat_map(|(i, r)| {
            assert_eq!(r.len(), ncols, "ragged dense matrix");
            r.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(j, v)| (i, j, v.clone()))
        });
        IntMatrix::from_triplets(nrows, ncols, triplets)
    }

    pub fn from_i64(nrows: usize, ncols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), nrows * ncols);
        let triplets = data
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(k, v)| (k / ncols, k % ncols, BigInt::from(*v)));
        IntMatrix::from_triplets(nrows, ncols, triplets)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &SparseRow {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        match self.rows[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.rows[i][k].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![BigInt::zero(); self.ncols];
                for (c, v) in r {
                    d[*c] = v.clone();
                }
                d
            })
            .collect()
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_triplets(
            self.ncols,
            self.nrows,
            self.triplets().map(|(i, j, v)| (j, i, v.clone())),
        )
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols, other.nrows, "inner dimensions differ");
        let mut rows = Vec::with_capacity(self.nrows);
        for r in &self.rows {
            let mut acc: Vec<BigInt> = vec![BigInt::zero(); other.ncols];
            for (k, a) in r {
                for (j, b) in &other.rows[*k] {
                    acc[*j] += a * b;
                }
            }
            rows.push(
                acc.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            );
        }
        IntMatrix {
            nrows: self.nrows,
            ncols: other.ncols,
            rows,
        }
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| axpy_row(a, &BigInt::one(), b))
            .collect();
        IntMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows,
        }
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.ncols);
        self.rows
            .iter()
            .map(|r| r.iter().map(|(c, v)| v * &x[*c]).sum())
            .collect()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// The nonzero diagonal entries of the Smith normal form, positive and in
    /// divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let mut elim = Elimination::new(self);
        elim.run();
        let mut factors = vec![BigInt::one(); elim.pivots.len()];
        factors.extend(dense_smith_diagonal(elim.residual_dense()));
        normalize_divisibility(factors)
    }

    /// A basis of the integer kernel `{x : A x = 0}`, each vector of length `ncols`.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let mut elim = Elimination::new(self);
        elim.run();
        let (residual, res_cols) = elim.residual_dense_with_cols();
        let ech = ColumnEchelon::compute(residual, res_cols.len());
        ech.kernel()
            .into_iter()
            .map(|y| elim.back_substitute(&res_cols, &y, None))
            .collect()
    }

    /// Integer solutions of `A x = b` for each right-hand side, `None` where none exists.
    pub fn solve_many(&self, rhs: &[Vec<BigInt>]) -> Vec<Option<Vec<BigInt>>> {
        for b in rhs {
            assert_eq!(b.len(), self.nrows, "right-hand side has wrong length");
        }
        let mut elim = Elimination::new(self);
        for (k, b) in rhs.iter().enumerate() {
            for (i, v) in b.iter().enumerate() {
                if !v.is_zero() {
                    elim.rhs[i].push((k, v.clone()));
                }
            }
        }
        elim.run();
        let (residual, res_cols) = elim.residual_dense_with_cols();
        let res_rows = elim.residual_rows();
        let ech = ColumnEchelon::compute(residual, res_cols.len());
        (0..rhs.len())
            .map(|k| {
                let b: Vec<BigInt> = res_rows.iter().map(|&i| elim.rhs_value(i, k)).collect();
                let y = ech.solve(&b)?;
                Some(elim.back_substitute(&res_cols, &y, Some(k)))
            })
            .collect()
    }

    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        self.solve_many(&[b.to_vec()]).pop().flatten()
    }
}

/// Row-style Hermite normal form of an integer lattice, used to pick canonical
/// coset representatives `v mod L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowHermite {
    ncols: usize,
    /// `(pivot column, row)`, pivot columns strictly increasing, pivots positive,
    /// entries above each pivot reduced into `[0, pivot)`.
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl RowHermite {
    /// The Hermite form of the lattice spanned by `generators`, each of length `ncols`.
    pub fn of_lattice(generators: &[Vec<BigInt>], ncols: usize) -> Self {
        let mut pool: Vec<Vec<BigInt>> = generators
            .iter()
            .filter(|g| g.iter().any(|x| !x.is_zero()))
            .cloned()
            .collect();
        for g in &pool {
            assert_eq!(g.len(), ncols, "generator has wrong length");
        }
        let mut rows: Vec<(usize, Vec<BigInt>)> = Vec::new();
        for c in 0..ncols {
            loop {
                let mut best: Option<usize> = None;
                for (k, r) in pool.iter().enumerate() {
                    if !r[c].is_zero()
                        && best.is_none_or(|b| r[c].magnitude() < pool[b][c].magnitude())
                    {
                        best = Some(k);
                    }
                }
                let Some(b) = best else { break };
                let piv = pool.swap_remove(b);
                let mut clean = true;
                for r in pool.iter_mut() {
                    if r[c].is_zero() {
                        continue;
                    }
                    let q = r[c].div_floor(&piv[c]);
                    row_axpy_dense(r, &-q, &piv);
                    if !r[c].is_zero() {
                        clean = false;
                    }
                }
                pool.retain(|r| r.iter().any(|x| !x.is_zero()));
                if clean {
                    let mut piv = piv;
                    if piv[c].is_negative() {
                        piv.iter_mut().for_each(|x| *x = -x.clone());
                    }
                    for (_, r) in rows.iter_mut() {
                        let q = r[c].div_floor(&piv[c]);
                        row_axpy_dense(r, &-q, &piv);
                    }
                    rows.push((c, piv));
                    break;
                }
                pool.push(piv);
            }
        }
        RowHermite { ncols, rows }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The unique representative of `v + L` whose pivot coordinates lie in `[0, pivot)`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.ncols, "vector has wrong length");
        let mut out = v.to_vec();
        for (c, r) in &self.rows {
            let q = out[*c].div_floor(&r[*c]);
            row_axpy_dense(&mut out, &-q, r);
        }
        out
    }

    pub fn is_reduced(&self, v: &[BigInt]) -> bool {
        self.reduce(v) == v
    }
}

/// `a += m·b` on dense rows.
fn row_axpy_dense(a: &mut [BigInt], m: &BigInt, b: &[BigInt]) {
    if m.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += m * y;
        }
    }
}

/// `a + m·b` on sparse rows.
fn axpy_row(a: &SparseRow, m: &BigInt, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|x| x.0);
        let cb = b.get(j).map(|x| x.0);
        match (ca, cb) {
            (Some(x), Some(y)) if x == y => {
                let v = &a[i].1 + m * &b[j].1;
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, m * &b[j].1));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn sparse_get(row: &SparseRow, c: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&c, |(k, _)| *k)
        .ok()
        .map(|k| &row[k].1)
}

/// Sparse Gaussian elimination restricted to unit pivots.
struct Elimination {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseRow>,
    /// Right-hand sides carried along, as sparse rows indexed by rhs number.
    rhs: Vec<SparseRow>,
    row_active: Vec<bool>,
    col_active: Vec<bool>,
    col_count: Vec<usize>,
    /// `(row, col)` of each pivot in elimination order; the pivot row is frozen
    /// in `rows` at the moment it is chosen.
    pivots: Vec<(usize, usize)>,
}

impl Elimination {
    fn new(m: &IntMatrix) -> Self {
        let mut col_count = vec![0; m.ncols];
        for r in &m.rows {
            for (c, _) in r {
                col_count[*c] += 1;
            }
        }
        Elimination {
            nrows: m.nrows,
            ncols: m.ncols,
            rows: m.rows.clone(),
            rhs: vec![Vec::new(); m.nrows],
            row_active: vec![true; m.nrows],
            col_active: vec![true; m.ncols],
            col_count,
            pivots: Vec::new(),
        }
    }

    fn choose_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            if !self.row_active[i] || row.is_empty() {
                continue;
            }
            let rlen = row.len() - 1;
            for (c, v) in row {
                if v.magnitude().is_one() {
                    let cost = rlen * (self.col_count[*c] - 1);
                    if best.is_none_or(|(_, _, b)| cost < b) {
                        best = Some((i, *c, cost));
                        if cost == 0 {
                            return Some((i, *c));
                        }
                    }
                }
            }
        }
        best.map(|(i, c, _)| (i, c))
    }

    fn run(&mut self) {
        while let Some((pr, pc)) = self.choose_pivot() {
            let pivot_row = self.rows[pr].clone();
            let pivot_rhs = self.rhs[pr].clone();
            let pv = sparse_get(&pivot_row, pc).unwrap().clone();
            self.row_active[pr] = false;
            self.col_active[pc] = false;
            for i in 0..self.nrows {
                if !self.row_active[i] {
                    continue;
                }
                let Some(a) = sparse_get(&self.rows[i], pc) else {
                    continue;
                };
                // pivot is ±1, so dividing by it is multiplying by it
                let m = -(a * &pv);
                for (c, _) in &self.rows[i] {
                    self.col_count[*c] -= 1;
                }
                let new_row = axpy_row(&self.rows[i], &m, &pivot_row);
                for (c, _) in &new_row {
                    self.col_count[*c] += 1;
                }
                self.rows[i] = new_row;
                if !pivot_rhs.is_empty() {
                    self.rhs[i] = axpy_row(&self.rhs[i], &m, &pivot_rhs);
                }
            }
            for (c, _) in &pivot_row {
                self.col_count[*c] -= 1;
            }
            self.pivots.push((pr, pc));
        }
    }

    fn residual_rows(&self) -> Vec<usize> {
        (0..self.nrows).filter(|&i| self.row_active[i]).collect()
    }

    fn residual_cols(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&j| self.col_active[j]).collect()
    }

    fn residual_dense(&self) -> Vec<Vec<BigInt>> {
        self.residual_dense_with_cols().0
    }

    fn residual_dense_with_cols(&self) -> (Vec<Vec<BigInt>>, Vec<usize>) {
        let cols = self.residual_cols();
        let mut pos = vec![usize::MAX; self.ncols];
        for (k, &c) in cols.iter().enumerate() {
            pos[c] = k;
        }
        let dense = self
            .residual_rows()
            .into_iter()
            .map(|i| {
                let mut d = vec![BigInt::zero(); cols.len()];
                for (c, v) in &self.rows[i] {
                    d[pos[*c]] = v.clone();
                }
                d
            })
            .collect();
        (dense, cols)
    }

    fn rhs_value(&self, row: usize, k: usize) -> BigInt {
        sparse_get(&self.rhs[row], k)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Extends a solution on the residual columns to all columns using the frozen
    /// pivot rows, in reverse pivot order.
    fn back_substitute(&self, res_cols: &[usize], y: &[BigInt], rhs: Option<usize>) -> Vec<BigInt> {
        let mut x = vec![BigInt::zero(); self.ncols];
        for (k, &c) in res_cols.iter().enumerate() {
            x[c] = y[k].clone();
        }
        for &(r, c) in self.pivots.iter().rev() {
            let row = &self.rows[r];
            let mut s = match rhs {
                Some(k) => self.rhs_value(r, k),
                None => BigInt::zero(),
            };
            let mut pv = BigInt::zero();
            for (j, v) in row {
                if *j == c {
                    pv = v.clone();
                } else {
                    s -= v * &x[*j];
                }
            }
            x[c] = s * pv;
        }
        x
    }
}

/// Diagonal of a Smith form of a dense matrix (not yet in divisibility order).
fn dense_smith_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].magnitude() < a[bi][bj].magnitude())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let p = a[t][t].clone();
            let mut done = true;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&p);
                if !q.is_zero() {
                    let (top, rest) = a.split_at_mut(i);
                    for (x, y) in rest[0][t..n].iter_mut().zip(&top[t][t..n]) {
                        *x -= &q * y;
                    }
                }
                if !a[i][t].is_zero() {
                    done = false;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&p);
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let v = &q * &row[t];
                        row[j] -= v;
                    }
                }
                if !a[t][j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
            // move the smallest remaining entry of row/column t into the pivot slot
            let mut bi = t;
            let mut bj = t;
            for i in t..m {
                if !a[i][t].is_zero() && a[i][t].magnitude() < a[bi][bj].magnitude() {
                    bi = i;
                    bj = t;
                }
            }
            for j in t..n {
                if !a[t][j].is_zero() && a[t][j].magnitude() < a[bi][bj].magnitude() {
                    bi = t;
                    bj = j;
                }
            }
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Rewrites a list of positive integers as the invariant factors of the
/// corresponding diagonal matrix, dropping nothing and sorting by divisibility.
fn normalize_divisibility(mut d: Vec<BigInt>) -> Vec<BigInt> {
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// Column-style Hermite echelon `A V = H` with `V` unimodular.
struct ColumnEchelon {
    h: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    /// `(row, col)` pivots; pivot `k` sits in column `k`.
    pivots: Vec<usize>,
    ncols: usize,
}

impl ColumnEchelon {
    fn compute(a: Vec<Vec<BigInt>>, ncols: usize) -> Self {
        let m = a.len();
        let mut h = a;
        let mut v: Vec<Vec<BigInt>> = (0..ncols)
            .map(|i| {
                (0..ncols)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut k = 0;
        for i in 0..m {
            if k == ncols {
                break;
            }
            // gcd-combine columns k.. on row i into column k
            loop {
                let mut best: Option<usize> = None;
                for j in k..ncols {
                    if !h[i][j].is_zero()
                        && best.is_none_or(|b| h[i][j].magnitude() < h[i][b].magnitude())
                    {
                        best = Some(j);
                    }
                }
                let Some(b) = best else { break };
                swap_cols(&mut h, k, b);
                swap_cols(&mut v, k, b);
                let p = h[i][k].clone();
                let mut clean = true;
                for j in k + 1..ncols {
                    if h[i][j].is_zero() {
                        continue;
                    }
                    let q = h[i][j].div_floor(&p);
                    col_axpy(&mut h, j, &-q.clone(), k);
                    col_axpy(&mut v, j, &-q, k);
                    if !h[i][j].is_zero() {
                        clean = false;
                    }
                }
                if clean {
                    break;
                }
            }
            if k < ncols && !h[i][k].is_zero() {
                pivots.push(i);
                k += 1;
            }
        }
        ColumnEchelon {
            h,
            v,
            pivots,
            ncols,
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn kernel(&self) -> Vec<Vec<BigInt>> {
        (self.rank()..self.ncols)
            .map(|j| self.v.iter().map(|row| row[j].clone()).collect())
            .collect()
    }

    fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let r = self.rank();
        let mut y = vec![BigInt::zero(); self.ncols];
        for (k, &i) in self.pivots.iter().enumerate() {
            let mut s = b[i].clone();
            for (j, yj) in y.iter().enumerate().take(k) {
                s -= &self.h[i][j] * yj;
            }
            let (q, rem) = s.div_rem(&self.h[i][k]);
            if !rem.is_zero() {
                return None;
            }
            y[k] = q;
        }
        for (i, bi) in b.iter().enumerate() {
            let s: BigInt = (0..r).map(|j| &self.h[i][j] * &y[j]).sum();
            if &s != bi {
                return None;
            }
        }
        Some(
            self.v
                .iter()
                .map(|row| (0..r).map(|j| &row[j] * &y[j]).sum())
                .collect(),
        )
    }
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// column `dst` += m · column `src`
fn col_axpy(a: &mut [Vec<BigInt>], dst: usize, m: &BigInt, src: usize) {
    if m.is_zero() {
        return;
    }
    for row in a.iter_mut() {
        if !row[src].is_zero() {
            let v = m * &row[src];
            row[dst] += v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn invariant_factors_of_small_matrices() {
        let a = IntMatrix::from_i64(2, 2, &[1, 1, 1, 1]);
        assert_eq!(a.invariant_factors(), ints(&[1]));
        let b = IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]);
        assert_eq!(b.invariant_factors(), ints(&[1, 6]));
        let c = IntMatrix::from_i64(3, 3, &[2, 4, 4, -6, 6, 12, 10, -4, -16]);
        assert_eq!(c.invariant_factors(), ints(&[2, 6, 12]));
        assert!(IntMatrix::zero(3, 2).invariant_factors().is_empty());
    }

    #[test]
    fn hermite_reduction_is_canonical() {
        let gens = vec![ints(&[2, 4, 1]), ints(&[0, 3, 3])];
        let h = RowHermite::of_lattice(&gens, 3);
        assert_eq!(h.rank(), 2);
        let v = ints(&[5, -7, 2]);
        let r = h.reduce(&v);
        assert!(h.is_reduced(&r));
        // shifting by lattice vectors does not change the representative
        let shifted: Vec<BigInt> = v
            .iter()
            .zip(&gens[0])
            .zip(&gens[1])
            .map(|((a, b), c)| a + b * 3 - c * 2)
            .collect();
        assert_eq!(h.reduce(&shifted), r);
    }

    #[test]
    fn kernel_of_all_ones() {
        let a = IntMatrix::from_i64(2, 2, &[1, 1, 1, 1]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(|x| x.is_zero()));
        assert_eq!(k[0][0].abs(), BigInt::one());
    }

    #[test]
    fn solve_detects_divisibility_obstruction() {
        let a = IntMatrix::from_i64(1, 1, &[2]);
        assert_eq!(a.solve(&ints(&[4])), Some(ints(&[2])));
        assert_eq!(a.solve(&ints(&[3])), None);
        let b = IntMatrix::from_i64(2, 1, &[1, 1]);
        assert_eq!(b.solve(&ints(&[1, 2])), None);
    }

    #[test]
    fn solve_with_dense_residual() {
        let a = IntMatrix::from_i64(2, 3, &[2, 3, 0, 4, 0, 6]);
        let b = ints(&[5, 10]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
    }
}
