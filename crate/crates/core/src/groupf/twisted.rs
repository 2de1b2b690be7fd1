use num_bigint::BigInt;

use crate::plmap::FMap;
use crate::zlinalg::class_rep;

use super::{ab, apply_aut, h1_matrix, AutWord, GroupError};

/// `h · f · φ(h^{-1})`, the twisted conjugate of `f` by `h`.
pub fn twisted_conjugate(h: &FMap, f: &FMap, phi: &AutWord) -> Result<FMap, GroupError> {
    Ok(h.compose(f).compose(&apply_aut(phi, &h.inverse())?))
}

/// Inner automorphism `τ_k(z) = k z k^{-1}`.
pub fn inner(k: &FMap, z: &FMap) -> FMap {
    k.compose(z).compose(&k.inverse())
}

/// Checks `(x g φ(x^{-1})) k = x (g k) ψ(x^{-1})` with `ψ = τ_{k^{-1}} ∘ φ`:
/// right multiplication by `k` carries the φ-class of `g` onto the ψ-class
/// of `g k`.
pub fn verify_shift_lemma(g: &FMap, k: &FMap, x: &FMap, phi: &AutWord) -> Result<bool, GroupError> {
    let x_inv = x.inverse();
    let phi_x_inv = apply_aut(phi, &x_inv)?;
    let lhs = x.compose(g).compose(&phi_x_inv).compose(k);
    let psi_x_inv = inner(&k.inverse(), &phi_x_inv);
    let rhs = x.compose(&g.compose(k)).compose(&psi_x_inv);
    Ok(lhs == rhs)
}

/// Canonical coordinates of the image of the φ-class of `f` in
/// `Coker(1 - H1(φ))`. Constant on twisted conjugacy classes.
pub fn project_class(f: &FMap, phi: &AutWord) -> Result<Vec<BigInt>, GroupError> {
    let m = h1_matrix(phi)?;
    Ok(class_rep(&ab(f).to_vec(), &m)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plmap::Vertex;

    fn bump() -> FMap {
        FMap::new(
            vec![Vertex::ints(-2, -2), Vertex::ints(-1, 0), Vertex::ints(1, 1)],
            0,
            0,
        )
        .unwrap()
    }

    #[test]
    fn shift_lemma_trivial_cases() {
        let g = FMap::slope_two_generator();
        let x = bump();
        assert!(verify_shift_lemma(&g, &FMap::identity(), &x, &AutWord::identity()).unwrap());
        assert!(verify_shift_lemma(&g, &FMap::translation(2), &x, &AutWord::rev()).unwrap());
    }

    #[test]
    fn projection_examples() {
        assert_eq!(
            project_class(&FMap::identity(), &AutWord::rev()).unwrap(),
            vec![BigInt::from(0); 2]
        );
        let a = project_class(&FMap::slope_two_generator(), &AutWord::rev()).unwrap();
        let b = project_class(
            &FMap::slope_two_generator().compose(&FMap::slope_two_generator()),
            &AutWord::rev(),
        )
        .unwrap();
        assert_ne!(a, b);

        let f = FMap::slope_two_generator();
        let h = bump().compose(&FMap::translation(1));
        let moved = twisted_conjugate(&h, &f, &AutWord::rev()).unwrap();
        assert_eq!(project_class(&moved, &AutWord::rev()).unwrap(), a);
    }
}
