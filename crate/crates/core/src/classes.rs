//! Conjugacy classes by orbit saturation.

use crate::group::{conjugate, Group};

/// Conjugacy-class partition of a group.
///
/// Classes are discovered by an ascending scan of element indices, so the
/// representative of each class is its least index and the class list is
/// deterministically ordered by representative.
pub struct ConjugacyClasses {
    /// element index -> class index
    pub class_of: Vec<u32>,
    /// class index -> least element index in the class
    pub reps: Vec<usize>,
    /// class index -> class size
    pub sizes: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn count(&self) -> usize {
        self.reps.len()
    }

    /// Class of the inverse of each class representative.
    pub fn inverse_classes<G: Group + ?Sized>(&self, g: &G) -> Vec<u32> {
        self.reps
            .iter()
            .map(|&r| self.class_of[g.inv(r)])
            .collect()
    }

    /// Sorted multiset of class sizes.
    pub fn size_profile(&self) -> Vec<usize> {
        let mut s = self.sizes.clone();
        s.sort_unstable();
        s
    }
}

/// Compute the conjugacy classes of `g` by saturating orbits under
/// conjugation by the generators.
pub fn conjugacy_classes<G: Group + ?Sized>(g: &G) -> ConjugacyClasses {
    let n = g.order();
    let gens = g.generators();
    let mut class_of = vec![u32::MAX; n];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for x in 0..n {
        if class_of[x] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        class_of[x] = c;
        let mut orbit = vec![x];
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            i += 1;
            for &h in &gens {
                let z = conjugate(g, y, h);
                if class_of[z] == u32::MAX {
                    class_of[z] = c;
                    orbit.push(z);
                }
            }
        }
        sizes.push(orbit.len());
    }
    ConjugacyClasses {
        class_of,
        reps,
        sizes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{element_order, TableGroup};

    fn s3() -> TableGroup {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
        TableGroup::from_mul_fn(6, |a, b| {
            let composed = [
                perms[b][perms[a][0]],
                perms[b][perms[a][1]],
                perms[b][perms[a][2]],
            ];
            index(&composed)
        })
        .unwrap()
    }

    /// Quadratic oracle: the full conjugate set of every element,
    /// partitioned by equality.
    fn classes_oracle<G: Group + ?Sized>(g: &G) -> Vec<Vec<usize>> {
        let n = g.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> =
                (0..n).map(|h| conjugate(g, x, h)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen[y] = true;
            }
            out.push(class);
        }
        out
    }

    fn assert_matches_oracle<G: Group + ?Sized>(g: &G) {
        let fast = conjugacy_classes(g);
        let oracle = classes_oracle(g);
        assert_eq!(fast.count(), oracle.len());
        for (c, class) in oracle.iter().enumerate() {
            assert_eq!(fast.reps[c], class[0], "reps are least members");
            assert_eq!(fast.sizes[c], class.len());
            for &y in class {
                assert_eq!(fast.class_of[y] as usize, c);
            }
        }
    }

    #[test]
    fn s3_classes() {
        let g = s3();
        let cc = conjugacy_classes(&g);
        assert_eq!(cc.count(), 3);
        assert_eq!(cc.sizes, vec![1, 3, 2]); // id, transpositions, 3-cycles
        assert_matches_oracle(&g);
    }

    #[test]
    fn abelian_groups_have_singleton_classes() {
        let c6 = TableGroup::cyclic(6).unwrap();
        let cc = conjugacy_classes(&c6);
        assert_eq!(cc.count(), 6);
        assert!(cc.sizes.iter().all(|&s| s == 1));
        // inverse pairing: 1 and 5 are mutually inverse singletons
        let invs = cc.inverse_classes(&c6);
        assert_eq!(invs[cc.class_of[1] as usize], cc.class_of[5]);
        assert_matches_oracle(&c6);
    }

    #[test]
    fn direct_product_classes_match_oracle() {
        let a = s3();
        let b = s3();
        let g = TableGroup::direct_product(&a, &b).unwrap();
        assert_eq!(g.order(), 36);
        let cc = conjugacy_classes(&g);
        assert_eq!(cc.count(), 9); // 3 x 3 classes
        assert_matches_oracle(&g);
        // class sizes sum to the group order and divide it
        assert_eq!(cc.sizes.iter().sum::<usize>(), 36);
        for &s in &cc.sizes {
            assert_eq!(36 % s, 0);
        }
    }

    #[test]
    fn class_members_share_element_order() {
        let g = s3();
        let cc = conjugacy_classes(&g);
        for x in 0..g.order() {
            let r = cc.reps[cc.class_of[x] as usize];
            assert_eq!(element_order(&g, x), element_order(&g, r));
        }
    }
}
