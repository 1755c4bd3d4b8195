use num_bigint::BigInt;
use num_traits::Zero;

use super::homology::homology_of;
use super::{ring_vector, solve_right, ChainComplex, Check, Diagnostics, HomologyReport};
use crate::error::{Error, Result};
use crate::lattice::IntMatrix;
use crate::ring::{same_group, GroupRingMatrix};

/// Degreewise maps `f_k: C_k → C'_k`, each an `n'_k × n_k` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub source: ChainComplex,
    pub target: ChainComplex,
    pub maps: [GroupRingMatrix; 4],
}

impl ChainMap {
    pub fn new(source: ChainComplex, target: ChainComplex, maps: [GroupRingMatrix; 4]) -> Result<Self> {
        if !same_group(source.group(), target.group()) {
            return Err(Error::GroupMismatch);
        }
        for (k, f) in maps.iter().enumerate() {
            if f.shape() != (target.rank(k), source.rank(k)) {
                return Err(Error::shape(format!(
                    "f{k} is {:?}, expected {:?}",
                    f.shape(),
                    (target.rank(k), source.rank(k))
                )));
            }
        }
        Ok(ChainMap {
            source,
            target,
            maps,
        })
    }

    pub fn identity(c: &ChainComplex) -> Self {
        let g = c.group();
        let maps = [0, 1, 2, 3].map(|k| GroupRingMatrix::identity(g, c.rank(k)));
        ChainMap {
            source: c.clone(),
            target: c.clone(),
            maps,
        }
    }

    pub fn zero(source: &ChainComplex, target: &ChainComplex) -> Result<Self> {
        let g = source.group();
        let maps = [0, 1, 2, 3].map(|k| GroupRingMatrix::zero(g, target.rank(k), source.rank(k)));
        ChainMap::new(source.clone(), target.clone(), maps)
    }

    pub fn map(&self, k: usize) -> &GroupRingMatrix {
        &self.maps[k]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ChainMap) -> Result<ChainMap> {
        if other.source.ranks() != self.target.ranks() {
            return Err(Error::shape("chain maps are not composable"));
        }
        let mut maps = self.maps.clone();
        for (k, m) in maps.iter_mut().enumerate() {
            *m = other.maps[k].mul(&self.maps[k])?;
        }
        ChainMap::new(self.source.clone(), other.target.clone(), maps)
    }

    /// Commutation with every boundary and compatibility with the augmentations.
    pub fn validate(&self) -> Diagnostics {
        let mut checks = Vec::new();
        for k in 1..=3 {
            let lhs = self.target.boundary(k).mul(&self.maps[k]);
            let rhs = self.maps[k - 1].mul(self.source.boundary(k));
            let (pass, detail) = match (lhs, rhs) {
                (Ok(l), Ok(r)) if l == r => (true, "exact".to_string()),
                (Ok(l), Ok(r)) => (
                    false,
                    format!("{} differing entries", l.sub(&r).map(|d| d.nnz()).unwrap_or(0)),
                ),
                (Err(e), _) | (_, Err(e)) => (false, e.to_string()),
            };
            checks.push(Check::new(format!("commutes in degree {k}"), pass, detail));
        }
        match (self.source.augmentation(), self.target.augmentation()) {
            (Some(w), Some(_)) => {
                let image = self.target.augment_columns(&self.maps[0]).unwrap();
                let pass = image.as_slice() == w;
                checks.push(Check::new(
                    "augmentation",
                    pass,
                    if pass { "compatible" } else { "eps' f0 != eps" },
                ));
            }
            (None, None) => {}
            _ => checks.push(Check::new(
                "augmentation",
                false,
                "only one side is augmented",
            )),
        }
        Diagnostics { checks }
    }
}

/// The algebraic mapping cone, integerized: degrees 0 to 4 with
/// `Cone_k = C_{k-1} ⊕ C'_k` and `d(a, b) = (-∂a, f a + ∂' b)`.
pub fn mapping_cone(f: &ChainMap) -> (Vec<usize>, Vec<IntMatrix>) {
    let g = f.source.group();
    let n = g.order();
    let src = |k: i32| if (0..=3).contains(&k) { f.source.rank(k as usize) } else { 0 };
    let tgt = |k: i32| if (0..=3).contains(&k) { f.target.rank(k as usize) } else { 0 };
    let dims: Vec<usize> = (0..=4).map(|k| (src(k - 1) + tgt(k)) * n).collect();
    let bounds = (1..=4)
        .map(|k: i32| {
            // rows: C_{k-2} ⊕ C'_{k-1}, cols: C_{k-1} ⊕ C'_k
            let (r_src, r_tgt) = (src(k - 2), tgt(k - 1));
            let (c_src, c_tgt) = (src(k - 1), tgt(k));
            let mut d = GroupRingMatrix::zero(g, r_src + r_tgt, c_src + c_tgt);
            if k >= 2 && c_src > 0 && r_src > 0 {
                d.place(0, 0, &f.source.boundary((k - 1) as usize).neg());
            }
            if c_src > 0 && r_tgt > 0 {
                d.place(r_src, 0, &f.maps[(k - 1) as usize]);
            }
            if k <= 3 && c_tgt > 0 && r_tgt > 0 {
                d.place(r_src, c_src, f.target.boundary(k as usize));
            }
            d.integerize()
        })
        .collect();
    (dims, bounds)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub equivalent: bool,
    /// Homology of the mapping cone, degrees 0 to 4.
    pub cone: HomologyReport,
}

/// A chain map of bounded free complexes over `ZG` is a chain homotopy equivalence
/// exactly when its mapping cone is acyclic over `Z`.
///
/// A map that does not commute with the boundaries has no cone; the report is then
/// not equivalent with no homology groups.
pub fn is_equivalence(f: &ChainMap) -> EquivalenceReport {
    let commutes = f
        .validate()
        .checks
        .iter()
        .all(|c| c.pass || !c.name.starts_with("commutes"));
    if !commutes {
        return EquivalenceReport {
            equivalent: false,
            cone: HomologyReport {
                augmented: false,
                groups: Vec::new(),
            },
        };
    }
    let (dims, bounds) = mapping_cone(f);
    let groups = homology_of(0, &dims, &bounds);
    let cone = HomologyReport {
        augmented: false,
        groups,
    };
    EquivalenceReport {
        equivalent: cone.is_acyclic(),
        cone,
    }
}

fn check_lift_preconditions(c: &ChainComplex, which: &str) -> Result<()> {
    let diag = c.validate();
    if let Some(bad) = diag.first_failure() {
        return Err(Error::Precondition(format!("{which} invalid: {}", bad.name)));
    }
    if !c.is_augmented() {
        return Err(Error::Precondition(format!("{which} is not augmented")));
    }
    c.connectivity_check()
        .map_err(|e| Error::Precondition(format!("{which}: {e}")))
}

/// A chain map `F → F'` covering the identity of `Z`, built degree by degree.
pub fn lift_chain_map(source: &ChainComplex, target: &ChainComplex) -> Result<ChainMap> {
    if !same_group(source.group(), target.group()) {
        return Err(Error::GroupMismatch);
    }
    check_lift_preconditions(source, "source")?;
    check_lift_preconditions(target, "target")?;
    let g = source.group();

    // f0: each source 0-cell goes to some chain with the same augmentation.
    let eps = target.integerized_augmentation().unwrap();
    let weights = source.augmentation().unwrap();
    let rhs: Vec<Vec<BigInt>> = weights.iter().map(|w| vec![w.clone()]).collect();
    let mut f0 = GroupRingMatrix::zero(g, target.rank(0), source.rank(0));
    for (l, sol) in eps.solve_many(&rhs).into_iter().enumerate() {
        let sol = sol.ok_or_else(|| {
            Error::Precondition("lifting fails in degree 0: augmentation not surjective".into())
        })?;
        for (i, e) in ring_vector(g, &sol).into_iter().enumerate() {
            f0.set(i, l, e);
        }
    }

    let mut maps = vec![f0];
    for k in 1..=3 {
        let needed = maps[k - 1].mul(source.boundary(k))?;
        let fk = if target.rank(k) == 0 {
            if !needed.is_zero() {
                return Err(Error::Precondition(format!(
                    "lifting fails in degree {k}: target has no {k}-cells"
                )));
            }
            GroupRingMatrix::zero(g, 0, source.rank(k))
        } else {
            solve_right(target.boundary(k), &needed)?.ok_or_else(|| {
                Error::Precondition(format!("lifting fails in degree {k}: not in the image"))
            })?
        };
        maps.push(fk);
    }
    let maps: [GroupRingMatrix; 4] = maps.try_into().expect("four degrees");
    let f = ChainMap::new(source.clone(), target.clone(), maps)?;
    debug_assert!(f.validate().all_pass());
    Ok(f)
}

/// Whether every boundary composite of an integer complex vanishes.
#[allow(dead_code)]
pub(crate) fn integer_complex_ok(bounds: &[IntMatrix]) -> bool {
    bounds
        .windows(2)
        .all(|w| w[0].mul(&w[1]).triplets().all(|(_, _, v)| v.is_zero()))
}
