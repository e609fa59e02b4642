//! Property-based invariants over the concrete matrix constructions:
//! randomized parameters must always reproduce the group law and preserve
//! the defining forms, independently of the exhaustive fixed-size checks.

use proptest::prelude::*;

use szk_core::gf2m::F2m;
use szk_core::simple::{su3_torus, su3_unipotent, sz_torus, sz_unipotent, unitary_form_holds, Mat};

fn gf(m: u32) -> F2m {
    F2m::with_default_poly(m).unwrap()
}

proptest! {
    /// Lower-unitriangular parametrization over GF(8): products follow the
    /// twisted pair-group law, every matrix has determinant 1, and the
    /// torus normalizes the parametrized subgroup.
    #[test]
    fn suzuki_matrices_obey_the_pair_group_law(
        a in 0u32..8, b in 0u32..8, c in 0u32..8, d in 0u32..8, lambda in 1u32..8
    ) {
        let f = gf(3);
        let lhs = sz_unipotent(&f, a, b).mul(&f, &sz_unipotent(&f, c, d));
        let rhs = sz_unipotent(&f, a ^ c, b ^ d ^ f.mul(a, f.frob(2, c)));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(lhs.determinant(&f), 1);

        let t = sz_torus(&f, lambda).unwrap();
        let conj = t.mul(&f, &lhs).mul(&f, &t.inverse(&f).unwrap());
        // Conjugation scales the parameters to (λa', λθ(λ)b'-shape): still
        // a member of the parametrized subgroup.
        let a2 = conj.at(3, 2);
        let b2 = conj.at(3, 1);
        prop_assert_eq!(conj, sz_unipotent(&f, a2, b2));

        let inv = lhs.inverse(&f).unwrap();
        prop_assert_eq!(lhs.mul(&f, &inv), Mat::identity(4));
    }

    /// Unitary constructions over GF(16): unipotent parameters satisfying
    /// the norm-trace constraint and arbitrary torus elements preserve the
    /// Hermitian form, have determinant 1, and multiply within the group.
    #[test]
    fn unitary_matrices_preserve_the_hermitian_form(
        a in 0u32..16, pick in 0usize..4, lambda in 1u32..16
    ) {
        let f = gf(4);
        let conj = 2u32; // x ↦ x⁴ = x^q on GF(q²), q = 4
        // Solve b + b^q = a^(1+q): the solution set is a coset of the
        // 4-element kernel, so every a admits exactly 4 values of b.
        let target = f.mul(a, f.frob(conj, a));
        let solutions: Vec<u32> = (0..16)
            .filter(|&b| f.add(b, f.frob(conj, b)) == target)
            .collect();
        prop_assert_eq!(solutions.len(), 4);
        let u = su3_unipotent(&f, conj, a, solutions[pick]);
        prop_assert!(unitary_form_holds(&f, conj, &u));
        prop_assert_eq!(u.determinant(&f), 1);

        let t = su3_torus(&f, 4, lambda).unwrap();
        prop_assert!(unitary_form_holds(&f, conj, &t));
        prop_assert_eq!(t.determinant(&f), 1);

        // Form preservation is closed under product and inverse.
        let prod = u.mul(&f, &t);
        prop_assert!(unitary_form_holds(&f, conj, &prod));
        let inv = prod.inverse(&f).unwrap();
        prop_assert!(unitary_form_holds(&f, conj, &inv));
        prop_assert_eq!(prod.mul(&f, &inv), Mat::identity(3));
    }
}
