//! Fox free differential calculus, evaluated directly in `ZG`, and the cellular
//! chain complex of the universal cover of a presentation 2-complex.

use num_bigint::BigInt;
use num_traits::One;

use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::group::{MarkedGroup, Word};
use crate::ring::{GroupRingElement, GroupRingMatrix};

/// Image in `ZG` of the free derivative `∂w/∂x_i`.
///
/// Unrolls `∂(x_j u) = δ_ij + x_j ∂u` and `∂(x_j⁻¹ u) = -δ_ij x_j⁻¹ + x_j⁻¹ ∂u`: a letter
/// `x_i` at position `k` contributes the image of the prefix before it, and a letter
/// `x_i⁻¹` contributes minus the image of the prefix including it.
pub fn fox_derivative(marked: &MarkedGroup, w: &Word, i: usize) -> Result<GroupRingElement> {
    let gens = marked.presentation().generator_count();
    if i >= gens {
        return Err(Error::input(format!(
            "generator index {i} out of range ({gens} generators)"
        )));
    }
    let g = marked.group();
    let mut prefix = g.identity();
    let mut terms: Vec<(usize, BigInt)> = Vec::new();
    for l in w.letters() {
        if l.generator >= gens {
            return Err(Error::input(format!(
                "word uses generator {} out of range",
                l.generator
            )));
        }
        let img = marked.generator_image(l.generator);
        if l.exponent > 0 {
            if l.generator == i {
                terms.push((prefix, BigInt::one()));
            }
            prefix = g.mul(prefix, img);
        } else {
            prefix = g.mul(prefix, g.inv(img));
            if l.generator == i {
                terms.push((prefix, -BigInt::one()));
            }
        }
    }
    Ok(GroupRingElement::from_terms(g, terms))
}

/// The `g × r` matrix of Fox derivatives, entry `(i, j) = ∂ρ_j/∂x_i`.
pub fn fox_jacobian(marked: &MarkedGroup) -> GroupRingMatrix {
    let p = marked.presentation();
    let mut m = GroupRingMatrix::zero(marked.group(), p.generator_count(), p.relator_count());
    for (j, rel) in p.relators.iter().enumerate() {
        for i in 0..p.generator_count() {
            m.set(i, j, fox_derivative(marked, rel, i).expect("relators are valid words"));
        }
    }
    m
}

/// The `1 × g` first boundary with entries `x_i - 1`.
pub fn first_boundary(marked: &MarkedGroup) -> GroupRingMatrix {
    let g = marked.group();
    let n = marked.presentation().generator_count();
    let mut m = GroupRingMatrix::zero(g, 1, n);
    for i in 0..n {
        let e = GroupRingElement::element(g, marked.generator_image(i)).sub(&GroupRingElement::one(g));
        m.set(0, i, e);
    }
    m
}

/// Checks `Σ_i ∂ρ_j/∂x_i · (x_i - 1) = ρ_j - 1 = 0` for every relator.
pub fn fundamental_identity_holds(marked: &MarkedGroup) -> bool {
    first_boundary(marked)
        .mul(&fox_jacobian(marked))
        .map(|m| m.is_zero())
        .unwrap_or(false)
}

/// Chain complex of the universal cover of the presentation 2-complex: one 0-cell,
/// a 1-cell per generator, a 2-cell per relator, augmented by the coefficient sum.
pub fn presentation_complex(marked: &MarkedGroup) -> ChainComplex {
    let g = marked.group();
    let p = marked.presentation();
    ChainComplex::new(
        g.clone(),
        [1, p.generator_count(), p.relator_count(), 0],
        first_boundary(marked),
        fox_jacobian(marked),
        GroupRingMatrix::zero(g, p.relator_count(), 0),
        Some(vec![BigInt::one()]),
    )
    .expect("presentation complex shapes are consistent")
}

/// `Z`-rank of the relation module, realized as the kernel of the integerized first
/// boundary. For a finite group this is `(g - 1)·|G| + 1`.
pub fn relation_module_rank(marked: &MarkedGroup) -> usize {
    let d1 = first_boundary(marked).integerize();
    d1.ncols() - d1.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{bind_presentation, GroupFamily, Letter, Presentation};
    use std::sync::Arc;

    #[test]
    fn base_cases() {
        let m = GroupFamily::Cyclic(3).marked_group().unwrap();
        let g = m.group();
        let x = Word::power(0, 1);
        assert!(fox_derivative(&m, &x, 0).unwrap().is_one());
        let xinv = Word::power(0, -1);
        let expected = GroupRingElement::element(g, g.inv(1)).neg();
        assert_eq!(fox_derivative(&m, &xinv, 0).unwrap(), expected);
        assert!(fox_derivative(&m, &Word::empty(), 0).unwrap().is_zero());
        assert!(fox_derivative(&m, &x, 1).is_err());
    }

    #[test]
    fn derivative_of_cube_in_c3() {
        let m = GroupFamily::Cyclic(3).marked_group().unwrap();
        let d = fox_derivative(&m, &Word::power(0, 3), 0).unwrap();
        assert_eq!(d, GroupRingElement::norm(m.group()));
    }

    #[test]
    fn derivative_of_commutator() {
        // S3 with x a rotation, y a reflection, bound to a presentation with a commutator word.
        let m = GroupFamily::Dihedral(3).marked_group().unwrap();
        let g = m.group().clone();
        let p = Presentation::new(vec!["x".into(), "y".into()], vec![]).unwrap();
        let m = bind_presentation(Arc::clone(&g), p, m.genmap().to_vec()).unwrap();
        let comm = Word(vec![
            Letter::new(0, 1),
            Letter::new(1, 1),
            Letter::new(0, -1),
            Letter::new(1, -1),
        ]);
        let (x, y) = (m.generator_image(0), m.generator_image(1));
        let xyx_inv = g.mul(g.mul(x, y), g.inv(x));
        let expected = GroupRingElement::one(&g).sub(&GroupRingElement::element(&g, xyx_inv));
        assert_eq!(fox_derivative(&m, &comm, 0).unwrap(), expected);
    }

    #[test]
    fn cyclic_presentation_complex() {
        let m = GroupFamily::Cyclic(5).marked_group().unwrap();
        let c = presentation_complex(&m);
        assert_eq!(c.ranks(), [1, 1, 1, 0]);
        assert_eq!(c.boundary(2).get(0, 0), GroupRingElement::norm(m.group()));
        let x_minus_1 = GroupRingElement::parse(m.group(), "g1 - g0").unwrap();
        assert_eq!(c.boundary(1).get(0, 0), x_minus_1);
    }

    #[test]
    fn relation_module_ranks() {
        assert_eq!(relation_module_rank(&GroupFamily::Cyclic(2).marked_group().unwrap()), 1);
        assert_eq!(relation_module_rank(&GroupFamily::Dihedral(3).marked_group().unwrap()), 7);
        let trivial = Arc::new(crate::group::make_group(GroupFamily::Trivial).unwrap());
        let p = Presentation::new(vec!["x".into()], vec![Word::power(0, 1)]).unwrap();
        let m = bind_presentation(trivial, p, vec![0]).unwrap();
        assert_eq!(relation_module_rank(&m), 1);
    }
}
