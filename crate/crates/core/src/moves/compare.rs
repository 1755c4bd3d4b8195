use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{EquivalenceCertificate, Move, MoveLog};
use crate::complex::{is_equivalence, lift_chain_map, ring_vector, ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::ring::{same_group, GroupRingElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompareOutcome {
    Equivalent(Box<EquivalenceCertificate>),
    /// No equivalence found within the budget; says nothing either way.
    Unknown { candidates_tried: usize },
}

impl CompareOutcome {
    pub fn certificate(&self) -> Option<&EquivalenceCertificate> {
        match self {
            CompareOutcome::Equivalent(c) => Some(c),
            CompareOutcome::Unknown { .. } => None,
        }
    }
}

fn check_input(c: &ChainComplex, which: &str) -> Result<()> {
    if c.rank(3) != 0 {
        return Err(Error::input(format!("{which} is not a 2-complex")));
    }
    if let Some(bad) = c.validate().first_failure() {
        return Err(Error::Precondition(format!("{which} invalid: {}", bad.name)));
    }
    if !c.is_augmented() {
        return Err(Error::Precondition(format!("{which} is not augmented")));
    }
    c.connectivity_check()
        .map_err(|e| Error::Precondition(format!("{which}: {e}")))
}

/// Looks for a chain homotopy equivalence between `f` and `f2` after stabilizing the one
/// with smaller Euler characteristic.
///
/// The search tries the plain lift first, then lifts whose degree-2 map is corrected by
/// adding kernel vectors of the target `∂2` to one or two columns, in a seeded shuffled
/// order, evaluating at most `budget` corrections. Every returned certificate has passed
/// full verification.
pub fn schanuel_compare(
    f: &ChainComplex,
    f2: &ChainComplex,
    budget: usize,
    seed: u64,
) -> Result<CompareOutcome> {
    if !same_group(f.group(), f2.group()) {
        return Err(Error::GroupMismatch);
    }
    check_input(f, "first complex")?;
    check_input(f2, "second complex")?;

    let diff = f.euler_char() - f2.euler_char();
    let (source, target, log) = if diff < 0 {
        let mut log = MoveLog::new(f.clone());
        log.push(Move::Stabilize {
            count: diff.unsigned_abs() as usize,
        })?;
        (log.end.clone(), f2.clone(), log)
    } else if diff > 0 {
        let mut log = MoveLog::new(f2.clone());
        log.push(Move::Stabilize {
            count: diff as usize,
        })?;
        (f.clone(), log.end.clone(), log)
    } else {
        (f.clone(), f2.clone(), MoveLog::new(f.clone()))
    };

    let accept = |map: ChainMap| -> Option<EquivalenceCertificate> {
        if !is_equivalence(&map).equivalent {
            return None;
        }
        let cert = EquivalenceCertificate::new(map, log.clone());
        cert.is_valid().then_some(cert)
    };

    if source == target {
        if let Some(cert) = accept(ChainMap::identity(&source)) {
            return Ok(CompareOutcome::Equivalent(Box::new(cert)));
        }
    }
    let lift = lift_chain_map(&source, &target)?;
    if let Some(cert) = accept(lift.clone()) {
        return Ok(CompareOutcome::Equivalent(Box::new(cert)));
    }

    let candidates = corrections(&target, seed);
    let columns = source.rank(2);
    let mut tried = 0usize;
    let mut single: Vec<(usize, usize)> = Vec::new();
    for col in 0..columns {
        for w in 0..candidates.len() {
            single.push((col, w));
        }
    }
    let try_with = |fixes: &[(usize, usize)]| -> Option<EquivalenceCertificate> {
        let mut f2m = lift.maps[2].clone();
        for &(col, w) in fixes {
            for (i, e) in candidates[w].iter().enumerate() {
                if !e.is_zero() {
                    let cur = f2m.get(i, col);
                    f2m.set(i, col, cur.add(e));
                }
            }
        }
        let mut maps = lift.maps.clone();
        maps[2] = f2m;
        let map = ChainMap::new(source.clone(), target.clone(), maps).ok()?;
        accept(map)
    };
    for s in &single {
        if tried >= budget {
            return Ok(CompareOutcome::Unknown {
                candidates_tried: tried,
            });
        }
        tried += 1;
        if let Some(cert) = try_with(&[*s]) {
            return Ok(CompareOutcome::Equivalent(Box::new(cert)));
        }
    }
    for a in 0..single.len() {
        for b in a + 1..single.len() {
            if tried >= budget {
                return Ok(CompareOutcome::Unknown {
                    candidates_tried: tried,
                });
            }
            tried += 1;
            if let Some(cert) = try_with(&[single[a], single[b]]) {
                return Ok(CompareOutcome::Equivalent(Box::new(cert)));
            }
        }
    }
    Ok(CompareOutcome::Unknown {
        candidates_tried: tried,
    })
}

/// Vectors `w` in `C2` of `target` with `∂2 w = 0`, each with both signs: the integer
/// kernel basis of `∂2` and `±g·e_j` for zero columns `j`, shuffled by `seed`.
fn corrections(target: &ChainComplex, seed: u64) -> Vec<Vec<GroupRingElement>> {
    let g = target.group();
    let n2 = target.rank(2);
    let mut out: Vec<Vec<GroupRingElement>> = Vec::new();
    if n2 > 0 {
        let d2 = target.boundary(2);
        for v in d2.integerize().kernel_basis() {
            let w = ring_vector(g, &v);
            out.push(w.iter().map(|e| e.neg()).collect());
            out.push(w);
        }
        for j in 0..n2 {
            if d2.column_is_zero(j) {
                for h in 0..g.order() {
                    for sign in [1i64, -1] {
                        let mut w = vec![GroupRingElement::zero(g); n2];
                        w[j] = GroupRingElement::element(g, h).scale(&sign.into());
                        out.push(w);
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    out.shuffle(&mut rng);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fox::presentation_complex;
    use crate::group::GroupFamily;
    use crate::moves::stabilize;

    fn fox(f: GroupFamily) -> ChainComplex {
        presentation_complex(&f.marked_group().unwrap())
    }

    #[test]
    fn identical_inputs() {
        let f = fox(GroupFamily::Cyclic(3));
        let out = schanuel_compare(&f, &f, 10, 0).unwrap();
        let cert = out.certificate().expect("certificate");
        assert_eq!(cert.map, ChainMap::identity(&f));
    }

    #[test]
    fn group_mismatch() {
        let a = fox(GroupFamily::Cyclic(2));
        let b = fox(GroupFamily::Cyclic(3));
        assert!(matches!(schanuel_compare(&a, &b, 10, 0), Err(Error::GroupMismatch)));
    }

    #[test]
    fn stabilization_is_recorded() {
        let f = fox(GroupFamily::Cyclic(2));
        let (s, _) = stabilize(&f, 1).unwrap();
        let out = schanuel_compare(&f, &s, 50, 0).unwrap();
        let cert = out.certificate().expect("certificate");
        assert_eq!(cert.log.len(), 1);
        assert!(cert.is_valid());
    }
}
