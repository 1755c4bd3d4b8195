use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::ChainComplex;
use crate::error::{Error, Result};
use crate::lattice::IntMatrix;

/// `Z^rank ⊕ Z/t_1 ⊕ … ⊕ Z/t_k` in one degree, with `t_1 | t_2 | …` and every `t_i > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub degree: i32,
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Whether this is exactly `Z`.
    pub fn is_integers(&self) -> bool {
        self.rank == 1 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.torsion.iter().map(|t| t.to_string()).collect();
        write!(
            f,
            "H{}: rank {} torsion [{}]",
            self.degree,
            self.rank,
            t.join(",")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyReport {
    pub augmented: bool,
    pub groups: Vec<HomologyGroup>,
}

impl HomologyReport {
    pub fn degree(&self, k: i32) -> Option<&HomologyGroup> {
        self.groups.iter().find(|g| g.degree == k)
    }

    /// Whether every group vanishes.
    pub fn is_acyclic(&self) -> bool {
        self.groups.iter().all(|g| g.is_zero())
    }
}

impl fmt::Display for HomologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.groups {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Homology of the integer complex `C_top → … → C_0` (or starting lower), where
/// `dims[k]` is the rank of the chain group in degree `first_degree + k` and
/// `boundaries[k]` maps degree `first_degree + k + 1` to `first_degree + k`.
///
/// Consecutive boundaries must compose to zero; panics if the ranks show otherwise.
pub fn homology_of(first_degree: i32, dims: &[usize], boundaries: &[IntMatrix]) -> Vec<HomologyGroup> {
    assert_eq!(boundaries.len() + 1, dims.len());
    let factors: Vec<Vec<BigInt>> = boundaries.iter().map(|d| d.invariant_factors()).collect();
    (0..dims.len())
        .map(|k| {
            let out_rank = if k == 0 { 0 } else { factors[k - 1].len() };
            let (in_rank, torsion) = match factors.get(k) {
                Some(f) => (
                    f.len(),
                    f.iter().filter(|t| !t.is_one()).cloned().collect(),
                ),
                None => (0, Vec::new()),
            };
            HomologyGroup {
                degree: first_degree + k as i32,
                rank: dims[k]
                    .checked_sub(out_rank + in_rank)
                    .expect("boundaries compose to zero"),
                torsion,
            }
        })
        .collect()
}

impl ChainComplex {
    /// Integer homology of the integerized complex, degrees 0 to 3.
    ///
    /// With `augmented`, the augmentation `C0 → Z` is appended and the report covers
    /// degrees -1 to 3; degree 0 is then `ker ε / im ∂1` and degree -1 is `coker ε`.
    pub fn integer_homology(&self, augmented: bool) -> Result<HomologyReport> {
        if let Some(bad) = self.validate().first_failure() {
            return Err(Error::Precondition(format!("not a chain complex: {} fails", bad.name)));
        }
        let n = self.group().order();
        let mut dims: Vec<usize> = self.ranks().iter().map(|r| r * n).collect();
        let mut bounds: Vec<IntMatrix> = (1..=3).map(|k| self.boundary(k).integerize()).collect();
        let first = if augmented {
            let eps = self
                .integerized_augmentation()
                .ok_or_else(|| Error::input("complex carries no augmentation"))?;
            dims.insert(0, 1);
            bounds.insert(0, eps);
            -1
        } else {
            0
        };
        Ok(HomologyReport {
            augmented,
            groups: homology_of(first, &dims, &bounds),
        })
    }

    /// Whether the cover is connected and simply connected at the chain level:
    /// `H0 = Z` and `H1 = 0`, torsion included, and when augmented, the augmented
    /// complex is exact in degrees -1 and 0.
    pub fn connectivity_check(&self) -> Result<(), String> {
        let h = self.integer_homology(false).map_err(|e| e.to_string())?;
        let h0 = h.degree(0).unwrap();
        if !h0.is_integers() {
            return Err(format!("H0 is not Z ({h0})"));
        }
        let h1 = h.degree(1).unwrap();
        if !h1.is_zero() {
            return Err(format!("H1 is not 0 ({h1})"));
        }
        if self.is_augmented() {
            let a = self.integer_homology(true).map_err(|e| e.to_string())?;
            for k in [-1, 0] {
                let g = a.degree(k).unwrap();
                if !g.is_zero() {
                    return Err(format!("augmented complex not exact at degree {k} ({g})"));
                }
            }
        }
        Ok(())
    }

    /// A `Z`-basis of `π2 = ker ∂2` in integerized coordinates.
    pub fn pi2_lattice(&self) -> Result<Vec<Vec<BigInt>>> {
        if self.rank(3) != 0 {
            return Err(Error::input(
                "pi2_lattice needs a 2-complex (no 3-cells)",
            ));
        }
        Ok(self.boundary(2).integerize().kernel_basis())
    }
}
