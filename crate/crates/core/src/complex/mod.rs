//! Free chain complexes of length at most 3 over `ZG`, their integer homology,
//! the split-injectivity test for the top boundary, and chain maps.

mod chain_map;
mod homology;
mod solve;
mod split;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::IntMatrix;
use crate::ring::{same_group, GroupRingElement, GroupRingMatrix};

pub use chain_map::{is_equivalence, lift_chain_map, mapping_cone, ChainMap, EquivalenceReport};
pub use homology::{homology_of, HomologyGroup, HomologyReport};
pub use solve::{solve_left, solve_right};
pub use split::{d2_split, SplitOutcome, SplittingCertificate};

/// `0 → C3 → C2 → C1 → C0 (→ Z)` with `C_k = ZG^{n_k}`.
///
/// `boundary(k)` is the `n_{k-1} × n_k` matrix of `∂_k`. When present, the augmentation
/// is given by integer weights `w_i`, meaning `ε(λ e_i) = w_i · aug(λ)`.
#[derive(Clone, PartialEq, Eq)]
pub struct ChainComplex {
    group: Arc<FiniteGroup>,
    ranks: [usize; 4],
    boundaries: [GroupRingMatrix; 3],
    augmentation: Option<Vec<BigInt>>,
}

impl fmt::Debug for ChainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ChainComplex")
            .field("group", &self.group.to_string())
            .field("ranks", &self.ranks)
            .field("d1", &self.boundaries[0])
            .field("d2", &self.boundaries[1])
            .field("d3", &self.boundaries[2])
            .field("augmentation", &self.augmentation)
            .finish()
    }
}

/// One named invariant check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Diagnostics {
    pub checks: Vec<Check>,
}

impl Diagnostics {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }
}

impl ChainComplex {
    pub fn new(
        group: Arc<FiniteGroup>,
        ranks: [usize; 4],
        d1: GroupRingMatrix,
        d2: GroupRingMatrix,
        d3: GroupRingMatrix,
        augmentation: Option<Vec<BigInt>>,
    ) -> Result<Self> {
        for (k, d) in [&d1, &d2, &d3].into_iter().enumerate() {
            let want = (ranks[k], ranks[k + 1]);
            if d.shape() != want {
                return Err(Error::shape(format!(
                    "d{} is {:?}, expected {:?}",
                    k + 1,
                    d.shape(),
                    want
                )));
            }
            if !same_group(&group, d.group()) {
                return Err(Error::GroupMismatch);
            }
        }
        if let Some(w) = &augmentation {
            if w.len() != ranks[0] {
                return Err(Error::shape(format!(
                    "augmentation has {} weights for rank {}",
                    w.len(),
                    ranks[0]
                )));
            }
        }
        Ok(ChainComplex {
            group,
            ranks,
            boundaries: [d1, d2, d3],
            augmentation,
        })
    }

    /// The complex with one 0-cell and nothing else, augmented.
    pub fn point(group: Arc<FiniteGroup>) -> Self {
        let d1 = GroupRingMatrix::zero(&group, 1, 0);
        let d2 = GroupRingMatrix::zero(&group, 0, 0);
        let d3 = GroupRingMatrix::zero(&group, 0, 0);
        ChainComplex::new(group, [1, 0, 0, 0], d1, d2, d3, Some(vec![BigInt::from(1)])).unwrap()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn ranks(&self) -> [usize; 4] {
        self.ranks
    }

    pub fn rank(&self, k: usize) -> usize {
        self.ranks[k]
    }

    /// `∂_k` for `k ∈ {1, 2, 3}`.
    pub fn boundary(&self, k: usize) -> &GroupRingMatrix {
        assert!((1..=3).contains(&k), "boundary degree must be 1, 2 or 3");
        &self.boundaries[k - 1]
    }

    pub fn augmentation(&self) -> Option<&[BigInt]> {
        self.augmentation.as_deref()
    }

    pub fn is_augmented(&self) -> bool {
        self.augmentation.is_some()
    }

    pub fn top_degree(&self) -> usize {
        (1..=3).rev().find(|&k| self.ranks[k] > 0).unwrap_or(0)
    }

    /// `n0 - n1 + n2 - n3`.
    pub fn euler_char(&self) -> i64 {
        self.ranks[0] as i64 - self.ranks[1] as i64 + self.ranks[2] as i64
            - self.ranks[3] as i64
    }

    pub(crate) fn from_parts(
        group: Arc<FiniteGroup>,
        boundaries: [GroupRingMatrix; 3],
        augmentation: Option<Vec<BigInt>>,
    ) -> Result<Self> {
        let ranks = [
            boundaries[0].rows(),
            boundaries[0].cols(),
            boundaries[1].cols(),
            boundaries[2].cols(),
        ];
        let [d1, d2, d3] = boundaries;
        ChainComplex::new(group, ranks, d1, d2, d3, augmentation)
    }

    pub fn with_boundary(&self, k: usize, d: GroupRingMatrix) -> Result<Self> {
        let mut b = self.boundaries.clone();
        b[k - 1] = d;
        ChainComplex::from_parts(self.group.clone(), b, self.augmentation.clone())
    }

    pub fn with_augmentation(&self, augmentation: Option<Vec<BigInt>>) -> Result<Self> {
        ChainComplex::from_parts(self.group.clone(), self.boundaries.clone(), augmentation)
    }

    /// The degree ≤ 2 part.
    pub fn truncate_to_2(&self) -> Self {
        let mut b = self.boundaries.clone();
        b[2] = GroupRingMatrix::zero(&self.group, self.ranks[2], 0);
        ChainComplex::from_parts(self.group.clone(), b, self.augmentation.clone()).unwrap()
    }

    /// `ε` applied to each column of `m`, a matrix with `n0` rows.
    pub fn augment_columns(&self, m: &GroupRingMatrix) -> Option<Vec<BigInt>> {
        let w = self.augmentation.as_ref()?;
        let mut out = vec![BigInt::zero(); m.cols()];
        for (i, j, e) in m.entries() {
            out[j] += &w[i] * e.augmentation();
        }
        Some(out)
    }

    /// The integerized augmentation `Z^{n0·|G|} → Z`.
    pub fn integerized_augmentation(&self) -> Option<IntMatrix> {
        let w = self.augmentation.as_ref()?;
        let n = self.group.order();
        let triplets = w.iter().enumerate().flat_map(|(i, wi)| {
            (0..n)
                .filter(|_| !wi.is_zero())
                .map(move |g| (0, i * n + g, wi.clone()))
        });
        Some(IntMatrix::from_triplets(1, self.ranks[0] * n, triplets))
    }

    /// `ε(v)` for a vector `v ∈ C0`.
    pub fn augment(&self, v: &[GroupRingElement]) -> Option<BigInt> {
        let w = self.augmentation.as_ref()?;
        Some(w.iter().zip(v).map(|(wi, x)| wi * x.augmentation()).sum())
    }

    /// Checks every structural invariant and reports one line per invariant.
    pub fn validate(&self) -> Diagnostics {
        let mut checks = Vec::new();
        let shapes_ok = (0..3).all(|k| {
            self.boundaries[k].shape() == (self.ranks[k], self.ranks[k + 1])
                && same_group(&self.group, self.boundaries[k].group())
        });
        checks.push(Check::new(
            "shapes",
            shapes_ok,
            format!("ranks {:?}", self.ranks),
        ));
        for k in 1..=2 {
            let name = format!("d{k}d{} = 0", k + 1);
            let prod = self.boundaries[k - 1].mul(&self.boundaries[k]);
            let (pass, detail) = match prod {
                Ok(p) if p.is_zero() => (true, "exact".to_string()),
                Ok(p) => (false, format!("{} nonzero entries", p.nnz())),
                Err(e) => (false, e.to_string()),
            };
            checks.push(Check::new(name, pass, detail));
        }
        if self.boundaries[0].rows() == self.ranks[0] {
            if let Some(values) = self.augment_columns(&self.boundaries[0]) {
                let bad = values.iter().filter(|v| !v.is_zero()).count();
                let detail = if bad == 0 {
                    "exact".to_string()
                } else {
                    format!("{bad} columns with nonzero augmentation")
                };
                checks.push(Check::new("eps d1 = 0", bad == 0, detail));
            }
        }
        Diagnostics { checks }
    }
}

/// Reads an integer vector in the coordinates of [`GroupRingMatrix::integerize`] as a
/// vector over `ZG`.
pub fn ring_vector(group: &Arc<FiniteGroup>, v: &[BigInt]) -> Vec<GroupRingElement> {
    let n = group.order();
    assert_eq!(v.len() % n, 0);
    v.chunks(n)
        .map(|chunk| {
            GroupRingElement::from_terms(
                group,
                chunk
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(g, c)| (g, c.clone())),
            )
        })
        .collect()
}

/// Inverse of [`ring_vector`].
pub fn integer_vector(v: &[GroupRingElement]) -> Vec<BigInt> {
    let Some(first) = v.first() else {
        return Vec::new();
    };
    let n = first.group().order();
    let mut out = vec![BigInt::zero(); v.len() * n];
    for (i, e) in v.iter().enumerate() {
        for (g, c) in e.terms() {
            out[i * n + g] = c.clone();
        }
    }
    out
}
