use super::solve::left_system;
use super::{integer_vector, ring_vector, solve_left, ChainComplex};
use crate::error::{Error, Result};
use crate::lattice::RowHermite;
use crate::ring::GroupRingMatrix;

/// A left inverse `φ: C2 → C3` of `∂3`, i.e. `φ·∂3 = I`.
///
/// Left inverses differ by maps `ψ` with `ψ·∂3 = 0`; each row of `φ` is stored as the
/// Hermite-reduced representative of its class, so a valid certificate is unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingCertificate {
    pub phi: GroupRingMatrix,
}

/// The lattice of integerized rows `ψ` with `ψ·∂3 = 0`, in Hermite form.
fn annihilator_form(d3: &GroupRingMatrix) -> RowHermite {
    let n = d3.group().order();
    let ncols = d3.rows() * n;
    if d3.cols() == 0 {
        let unit: Vec<_> = (0..ncols)
            .map(|i| (0..ncols).map(|j| i32::from(i == j).into()).collect())
            .collect();
        return RowHermite::of_lattice(&unit, ncols);
    }
    RowHermite::of_lattice(&left_system(d3).kernel_basis(), ncols)
}

fn row_vector(m: &GroupRingMatrix, i: usize) -> Vec<num_bigint::BigInt> {
    let row: Vec<_> = (0..m.cols()).map(|j| m.get(i, j)).collect();
    integer_vector(&row)
}

impl SplittingCertificate {
    /// Recomputes `φ·∂3` from scratch, compares with the identity, and checks that
    /// every row of `φ` is in reduced form.
    pub fn verify(&self, complex: &ChainComplex) -> bool {
        let d3 = complex.boundary(3);
        if self.phi.shape() != (d3.cols(), d3.rows()) {
            return false;
        }
        let inverse = match self.phi.mul(d3) {
            Ok(p) => p == GroupRingMatrix::identity(complex.group(), d3.cols()),
            Err(_) => false,
        };
        if !inverse {
            return false;
        }
        let form = annihilator_form(d3);
        (0..self.phi.rows()).all(|i| form.is_reduced(&row_vector(&self.phi, i)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitOutcome {
    Split(SplittingCertificate),
    /// `∂3` is injective but not split over `ZG`.
    NoSplit,
    /// The integerized `∂3` has a nonzero kernel.
    NotInjective,
}

impl SplitOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            SplitOutcome::Split(_) => "Split",
            SplitOutcome::NoSplit => "NoSplit",
            SplitOutcome::NotInjective => "NotInjective",
        }
    }
}

/// Decides whether `∂3` is split injective over `ZG` by solving `φ·∂3 = I` for `φ`.
pub fn d2_split(complex: &ChainComplex) -> Result<SplitOutcome> {
    let n3 = complex.rank(3);
    if n3 == 0 {
        return Err(Error::input("d2_split needs at least one 3-cell"));
    }
    let d3 = complex.boundary(3);
    let g = complex.group();
    if d3.integerize().rank() < n3 * g.order() {
        return Ok(SplitOutcome::NotInjective);
    }
    let identity = GroupRingMatrix::identity(g, n3);
    let Some(raw) = solve_left(d3, &identity)? else {
        return Ok(SplitOutcome::NoSplit);
    };
    let form = annihilator_form(d3);
    let mut phi = GroupRingMatrix::zero(g, n3, d3.rows());
    for i in 0..n3 {
        let reduced = form.reduce(&row_vector(&raw, i));
        for (j, e) in ring_vector(g, &reduced).into_iter().enumerate() {
            phi.set(i, j, e);
        }
    }
    let cert = SplittingCertificate { phi };
    if !cert.verify(complex) {
        return Err(Error::Precondition(
            "internal: splitting solution failed verification".into(),
        ));
    }
    Ok(SplitOutcome::Split(cert))
}
