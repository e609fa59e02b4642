//! Independent element-level cross-check of the class-level center
//! computation used by the normal-subgroup law verifier.
//!
//! `NormalLattice::own_center_order` computes |Z(Q)| from conjugacy-class
//! bitmask rows.  Here we recompute |Z(Q)| for every normal subgroup by
//! brute-force commutation over the member elements and require agreement.
//! The order-512 twisted triple group is used because its lattice contains
//! nonabelian normal subgroups whose centers strictly exceed the ambient
//! center — exactly the case where a class-level shortcut could go wrong.

use szk_core::build_spec;
use szk_core::normal::NormalLattice;

#[test]
fn element_level_centers_match_the_class_level_lattice() {
    let built = build_spec("B(m=3,l=1,eps=auto)", None).unwrap();
    let g = built.group().unwrap();
    let lat = NormalLattice::build(g).unwrap();
    assert_eq!(lat.count(), 2840, "normal subgroup count changed");

    let n = g.order();
    let mul_table: Vec<Vec<u16>> = (0..n)
        .map(|x| (0..n).map(|y| g.mul(x, y) as u16).collect())
        .collect();

    let mut oversized_nonabelian_centers = 0usize;
    for idx in 0..lat.count() {
        let set = lat.element_set(idx);
        let members: Vec<usize> = set.iter().collect();
        let direct_center = members
            .iter()
            .filter(|&&x| {
                members
                    .iter()
                    .all(|&y| mul_table[x][y] == mul_table[y][x])
            })
            .count();
        assert_eq!(
            direct_center,
            lat.own_center_order(idx),
            "center order mismatch for normal subgroup #{idx} (|Q|={})",
            members.len()
        );
        if members.len() == 64 && direct_center == 16 && !lat.is_abelian(idx) {
            oversized_nonabelian_centers += 1;
        }
    }

    // Nonabelian normal Q of order 64 with |Z(Q)| = 16 > |Z(P)| = 8: these
    // are the witnesses that the center-equality law fails for this group.
    assert_eq!(oversized_nonabelian_centers, 63);
}
