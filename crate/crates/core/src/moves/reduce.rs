use super::{EquivalenceCertificate, Move, MoveLog};
use crate::complex::{d2_split, ChainComplex, SplitOutcome};
use crate::error::{Error, Result};

/// Trades the 3-cells of `X` for `n3` wedged 2-spheres: returns the 2-complex `K` and a
/// certificate that `X ⊕ ZG^{n3}` (in degree 2) is equivalent to `K`.
///
/// With `φ·∂3 = I`, the basis change `[[I, ∂3], [0, I]]·[[I, 0], [-φ, I]]` on
/// `C2 ⊕ ZG^{n3}` carries `∂3` to `[0; -I]` and fixes `∂2`; after a sign change the
/// 3-cells collapse against the new coordinates.
pub fn reduce_d2(x: &ChainComplex) -> Result<(ChainComplex, EquivalenceCertificate)> {
    if x.rank(3) == 0 {
        return Ok((x.clone(), EquivalenceCertificate::identity(x)));
    }
    let diag = x.validate();
    if let Some(bad) = diag.first_failure() {
        return Err(Error::Precondition(format!("invalid complex: {}", bad.name)));
    }
    if !x.is_augmented() {
        return Err(Error::Precondition("complex is not augmented".into()));
    }
    x.connectivity_check().map_err(Error::Precondition)?;
    let phi = match d2_split(x)? {
        SplitOutcome::Split(cert) => cert.phi,
        SplitOutcome::NoSplit => return Err(Error::NoSplit),
        SplitOutcome::NotInjective => return Err(Error::NotInjective),
    };

    let r = x.rank(3);
    let n2 = x.rank(2);
    let d3 = x.boundary(3).clone();
    let mut log = MoveLog::new(x.clone());
    log.push(Move::Stabilize { count: r })?;
    for (i, j, e) in phi.entries() {
        log.push(Move::transvection(2, n2 + i, j, e.clone()))?;
    }
    for (j, l, e) in d3.entries() {
        log.push(Move::transvection(2, j, n2 + l, e.neg()))?;
    }
    for i in 0..r {
        log.push(Move::scaling(2, n2 + i, -1, x.group().identity()))?;
    }
    for _ in 0..r {
        log.push(Move::Collapse { degree: 3, cell: 0 })?;
    }
    let map = log.composite_from(1)?;
    let k = log.end.clone();
    let cert = EquivalenceCertificate::new(map, log);
    let diag = cert.verify();
    if let Some(bad) = diag.first_failure() {
        return Err(Error::Precondition(format!(
            "internal: reduction certificate failed at {}: {}",
            bad.name, bad.detail
        )));
    }
    Ok((k, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fox::presentation_complex;
    use crate::group::GroupFamily;
    use crate::moves::{attach_cells, stabilize};
    use crate::ring::GroupRingMatrix;

    #[test]
    fn c2_round_trip() {
        let f = presentation_complex(&GroupFamily::Cyclic(2).marked_group().unwrap());
        let (s, _) = stabilize(&f, 1).unwrap();
        let x = attach_cells(&s, &[1]).unwrap();
        let (k, cert) = reduce_d2(&x).unwrap();
        assert_eq!(k.rank(3), 0);
        assert_eq!(k.euler_char(), 2);
        assert!(cert.is_valid());
        assert!(cert.cone.is_acyclic());
    }

    #[test]
    fn no_three_cells_is_identity() {
        let f = presentation_complex(&GroupFamily::Cyclic(3).marked_group().unwrap());
        let (k, cert) = reduce_d2(&f).unwrap();
        assert_eq!(k, f);
        assert!(cert.is_valid());
    }

    #[test]
    fn twice_identity_has_no_split() {
        let f = presentation_complex(&GroupFamily::Cyclic(2).marked_group().unwrap());
        let (s, _) = stabilize(&f, 1).unwrap();
        let g = s.group().clone();
        let mut d3 = GroupRingMatrix::zero(&g, 2, 1);
        d3.set(1, 0, crate::ring::GroupRingElement::from_int(&g, 2));
        let x = s.with_boundary(3, d3).unwrap();
        assert!(matches!(reduce_d2(&x), Err(Error::NoSplit)));
    }

    #[test]
    fn reduces_after_basis_change() {
        // ∂3 hits a mixture of a relator cell and a fresh sphere
        let f = presentation_complex(&GroupFamily::Dihedral(3).marked_group().unwrap());
        let (s, _) = stabilize(&f, 1).unwrap();
        let x = attach_cells(&s, &[3]).unwrap();
        let g = x.group().clone();
        let e = crate::ring::GroupRingElement::parse(&g, "g1 - g3").unwrap();
        let (y, _) = crate::moves::apply_moves(&x, &[Move::transvection(2, 0, 3, e)]).unwrap();
        assert_ne!(y.boundary(3), x.boundary(3));
        let (k, cert) = reduce_d2(&y).unwrap();
        assert_eq!(k.euler_char(), y.euler_char() + 1);
        assert!(cert.is_valid());
    }
}
