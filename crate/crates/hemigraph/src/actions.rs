//! Lifting skeleton symmetries to the vertex-face incidence graph and
//! pushing them down to antipodal classes.
//!
//! A permutation of the solid's vertices that preserves the skeleton edge
//! relation induces a permutation of vertices and faces together (each
//! face goes to the face over its image corner set). If the induced
//! permutation also respects the antipodal pairing it descends to a
//! well-defined permutation of the classes, i.e. of the projective
//! vertex-face graph's vertices. These two maps compose to the morphism
//! that carries rotation groups into automorphism groups of the
//! projective graph.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::perm::Permutation;
use crate::polyhedron::{AntipodalPairing, Polyhedron};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ActionError {
    #[error("permutation does not preserve the skeleton edge ({0}, {1})")]
    NotASkeletonAutomorphism(usize, usize),
    #[error("image of face {0} is not a face")]
    FaceNotPreserved(usize),
    #[error("permutation has degree {found}, expected {expected}")]
    WrongDegree { expected: usize, found: usize },
    #[error("permutation does not respect the antipodal pairing at point {0}")]
    PairingNotRespected(usize),
}

/// Lifts a skeleton automorphism on V to the permutation of V ⊔ F acting
/// as the original on vertices and sending face f to the face whose
/// corner set is the image of f's. Face k sits at point |V| + k.
pub fn induced_vertex_face_action(
    rho: &Permutation,
    p: &Polyhedron,
) -> Result<Permutation, ActionError> {
    let nv = p.vertex_count();
    if rho.degree() != nv {
        return Err(ActionError::WrongDegree {
            expected: nv,
            found: rho.degree(),
        });
    }
    for &(u, v) in p.edges() {
        let (iu, iv) = (rho.apply(u), rho.apply(v));
        if p.edges().binary_search(&(iu.min(iv), iu.max(iv))).is_err() {
            return Err(ActionError::NotASkeletonAutomorphism(u, v));
        }
    }
    let mut images: Vec<usize> = (0..nv + p.face_count()).collect();
    for v in 0..nv {
        images[v] = rho.apply(v);
    }
    for (fi, face) in p.faces().iter().enumerate() {
        let corner_image: BTreeSet<usize> = face.iter().map(|&v| rho.apply(v)).collect();
        match p.face_with_corners(&corner_image) {
            Some(fj) => images[nv + fi] = nv + fj,
            None => return Err(ActionError::FaceNotPreserved(fi)),
        }
    }
    Ok(Permutation::from_images(images).expect("induced action is a bijection"))
}

/// Pushes a permutation of V ⊔ F down to antipodal classes: class [x]
/// goes to [phi(x)]. Vertex class c is point c; face class c is point
/// `n_vertex_classes + c`, matching the projective graph's numbering.
pub fn projectivize_action(
    phi: &Permutation,
    pairing: &AntipodalPairing,
) -> Result<Permutation, ActionError> {
    let nv = pairing_vertex_count(pairing);
    let nf = pairing_face_count(pairing);
    if phi.degree() != nv + nf {
        return Err(ActionError::WrongDegree {
            expected: nv + nf,
            found: phi.degree(),
        });
    }
    // well-definedness: phi must map antipodal pairs to antipodal pairs
    for v in 0..nv {
        let image_of_partner = phi.apply(pairing.vertex_partner(v));
        let partner_of_image = pairing.vertex_partner(phi.apply(v));
        if image_of_partner != partner_of_image {
            return Err(ActionError::PairingNotRespected(v));
        }
    }
    for f in 0..nf {
        let image_of_partner = phi.apply(nv + pairing.face_partner(f)) - nv;
        let partner_of_image = pairing.face_partner(phi.apply(nv + f) - nv);
        if image_of_partner != partner_of_image {
            return Err(ActionError::PairingNotRespected(nv + f));
        }
    }
    let nvc = pairing.n_vertex_classes();
    let mut images = vec![0usize; nvc + pairing.n_face_classes()];
    for v in 0..nv {
        images[pairing.vertex_class(v)] = pairing.vertex_class(phi.apply(v));
    }
    for f in 0..nf {
        images[nvc + pairing.face_class(f)] = nvc + pairing.face_class(phi.apply(nv + f) - nv);
    }
    Ok(Permutation::from_images(images).expect("class action of a pairing-respecting map is a bijection"))
}

fn pairing_vertex_count(pairing: &AntipodalPairing) -> usize {
    2 * pairing.n_vertex_classes()
}

fn pairing_face_count(pairing: &AntipodalPairing) -> usize {
    2 * pairing.n_face_classes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::{antipodal_pairing, icosahedron};

    #[test]
    fn identity_lifts_and_descends_to_identity() {
        let p = icosahedron();
        let pairing = antipodal_pairing(&p).unwrap();
        let lifted = induced_vertex_face_action(&Permutation::identity(12), &p).unwrap();
        assert!(lifted.is_identity());
        assert_eq!(lifted.degree(), 32);
        let descended = projectivize_action(&lifted, &pairing).unwrap();
        assert!(descended.is_identity());
        assert_eq!(descended.degree(), 16);
    }

    #[test]
    fn central_inversion_descends_to_identity() {
        let p = icosahedron();
        let pairing = antipodal_pairing(&p).unwrap();
        let inversion_on_vertices =
            Permutation::from_images((0..12).map(|v| pairing.vertex_partner(v)).collect())
                .unwrap();
        let lifted = induced_vertex_face_action(&inversion_on_vertices, &p).unwrap();
        assert!(!lifted.is_identity());
        let descended = projectivize_action(&lifted, &pairing).unwrap();
        assert!(descended.is_identity());
    }

    #[test]
    fn non_automorphisms_are_rejected() {
        let p = icosahedron();
        // swapping two non-adjacent vertices breaks some edge
        let bad = Permutation::from_cycles(12, &[&[0, 1]]);
        assert!(matches!(
            induced_vertex_face_action(&bad, &p),
            Err(ActionError::NotASkeletonAutomorphism(_, _))
        ));
        let wrong_degree = Permutation::identity(5);
        assert!(matches!(
            induced_vertex_face_action(&wrong_degree, &p),
            Err(ActionError::WrongDegree { .. })
        ));
    }

    #[test]
    fn pairing_violations_are_rejected() {
        let p = icosahedron();
        let pairing = antipodal_pairing(&p).unwrap();
        // transposing two non-antipodal vertices cannot descend
        let bad = Permutation::from_cycles(32, &[&[0, 1]]);
        assert!(matches!(
            projectivize_action(&bad, &pairing),
            Err(ActionError::PairingNotRespected(_))
        ));
    }
}
