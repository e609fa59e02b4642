//! Irreducible character degrees via the Dixon–Burnside class-algebra
//! method, character heights, and the family height predictions.
//!
//! Class matrices are simultaneously diagonalized over GF(p) for a prime
//! p ≡ 1 (mod exponent) with p > 2√|G|; each common eigenvector is a
//! central character ω, and the degree is the unique integer in [1, √|G|]
//! whose square is forced by the orthogonality relation. Only degrees and
//! mod-p central characters are computed — heights need nothing more.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::v2;
use crate::classes::{conjugacy_classes, ConjugacyClasses};
use crate::error::{Error, Result};
use crate::group::{element_order, Group};
use crate::modp::{dixon_prime, express_in_basis, poly_roots, MatP, PrimeField};
use crate::suzuki::{Family, SuzukiGroup};

/// Irreducible character degrees with their mod-p central characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTable {
    pub group_order: u64,
    pub prime: u64,
    pub class_sizes: Vec<usize>,
    /// Index of the class of the identity.
    pub identity_class: usize,
    /// Index of the class of inverses, per class.
    pub inverse_class: Vec<usize>,
    /// Character degrees, one per class, sorted ascending with ties broken
    /// by the central-character vector.
    pub degrees: Vec<u64>,
    /// Central character values ω(class) mod p, aligned with `degrees`.
    pub omegas: Vec<Vec<u64>>,
}

impl DegreeTable {
    /// Multiset of degrees as (degree, multiplicity), ascending.
    pub fn degree_multiset(&self) -> Vec<(u64, usize)> {
        let mut m: BTreeMap<u64, usize> = BTreeMap::new();
        for &d in &self.degrees {
            *m.entry(d).or_insert(0) += 1;
        }
        m.into_iter().collect()
    }

    pub fn linear_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 1).count()
    }

    /// Multiset of 2-parts of the degrees as (2-part, multiplicity).
    pub fn two_part_multiset(&self) -> Vec<(u64, usize)> {
        let mut m: BTreeMap<u64, usize> = BTreeMap::new();
        for &d in &self.degrees {
            *m.entry(1 << v2(d)).or_insert(0) += 1;
        }
        m.into_iter().collect()
    }

    /// Verify the second orthogonality relation mod p for all class pairs:
    /// Σ_χ χ(g_i)·χ(g_j⁻¹) = δ_{ij}·|C_G(g_i)| (mod p), with
    /// χ(g_k) = d_χ·ω_χ(k)/|C_k|.
    pub fn column_orthogonality_holds(&self) -> bool {
        let f = PrimeField { p: self.prime };
        let r = self.class_sizes.len();
        let n = self.group_order % self.prime;
        let mut chi = vec![vec![0u64; r]; r];
        for (t, omega) in self.omegas.iter().enumerate() {
            for k in 0..r {
                let size_inv = f
                    .inv(self.class_sizes[k] as u64 % self.prime)
                    .expect("class size nonzero mod p");
                chi[t][k] = f.mul(f.mul(self.degrees[t] % self.prime, omega[k]), size_inv);
            }
        }
        for i in 0..r {
            for j in 0..r {
                let mut acc = 0u64;
                for row in &chi {
                    acc = f.add(acc, f.mul(row[i], row[self.inverse_class[j]]));
                }
                let expected = if i == j {
                    f.mul(n, f.inv(self.class_sizes[i] as u64 % self.prime).unwrap())
                } else {
                    0
                };
                if acc != expected {
                    return false;
                }
            }
        }
        true
    }
}

fn exponent_from_classes<G: Group + ?Sized>(g: &G, classes: &ConjugacyClasses) -> u64 {
    let mut e = 1u64;
    for &rep in &classes.reps {
        e = crate::arith::lcm(e, element_order(g, rep) as u64);
    }
    e
}

/// Build the class matrix M_i with (M_i)_{jk} = #{x ∈ C_i : x⁻¹·g_k ∈ C_j},
/// so that every central character vector ω is an eigenvector with
/// eigenvalue ω(i).
fn class_matrix<G: Group + ?Sized>(
    g: &G,
    classes: &ConjugacyClasses,
    members: &[Vec<u32>],
    f: PrimeField,
    i: usize,
) -> MatP {
    let r = classes.reps.len();
    // Columns are independent; computing them in parallel and assembling by
    // index keeps the result identical for every thread count.
    let columns: Vec<Vec<u64>> = classes
        .reps
        .par_iter()
        .map(|&rep| {
            let mut col = vec![0u64; r];
            for &x in &members[i] {
                let y = g.mul(g.inv(x as usize), rep);
                col[classes.class_of[y] as usize] += 1;
            }
            col
        })
        .collect();
    let mut m = MatP::zero(f, r, r);
    for (k, col) in columns.iter().enumerate() {
        for (j, &count) in col.iter().enumerate() {
            if count != 0 {
                m.set(j, k, count);
            }
        }
    }
    m
}

/// Compute the degree table of `g` with precomputed conjugacy data.
pub fn character_degrees_with_classes<G: Group + ?Sized>(
    g: &G,
    classes: &ConjugacyClasses,
) -> Result<DegreeTable> {
    let n = g.order() as u64;
    let r = classes.reps.len();
    let exponent = exponent_from_classes(g, classes);
    let p = dixon_prime(n, exponent);
    let f = PrimeField::new(p)?;

    let mut members: Vec<Vec<u32>> = vec![Vec::new(); r];
    for (x, &c) in classes.class_of.iter().enumerate() {
        members[c as usize].push(x as u32);
    }
    let identity_class = classes.class_of[g.identity()] as usize;
    let inverse_class: Vec<usize> = classes
        .reps
        .iter()
        .map(|&rep| classes.class_of[g.inv(rep)] as usize)
        .collect();

    // Iteratively split the space of class functions into common
    // eigenspaces of the class matrices, processing classes in index order.
    let mut spaces: Vec<MatP> = vec![MatP::identity(f, r)];
    for i in 0..r {
        if i == identity_class {
            continue;
        }
        if spaces.iter().all(|s| s.cols == 1) {
            break;
        }
        let m_i = class_matrix(g, classes, &members, f, i);
        let mut next = Vec::with_capacity(spaces.len());
        for basis in spaces {
            if basis.cols == 1 {
                next.push(basis);
                continue;
            }
            let image = m_i.matmul(&basis);
            let restr = express_in_basis(&basis, &image).ok_or_else(|| {
                Error::Internal("class-matrix image left its invariant subspace".into())
            })?;
            let cp = restr.charpoly();
            let roots = poly_roots(f, &cp);
            let dim = basis.cols;
            let mut covered = 0usize;
            for lambda in roots {
                let mut shifted = restr.clone();
                for t in 0..restr.rows {
                    let v = f.sub(shifted.at(t, t), lambda);
                    shifted.set(t, t, v);
                }
                let null = shifted.nullspace();
                if null.is_empty() {
                    continue;
                }
                let mut sub = MatP::zero(f, basis.rows, null.len());
                for (c, vec) in null.iter().enumerate() {
                    for row in 0..basis.rows {
                        let mut acc = 0u64;
                        for (t, &coef) in vec.iter().enumerate() {
                            acc = f.add(acc, f.mul(basis.at(row, t), coef));
                        }
                        sub.data[row * null.len() + c] = acc;
                    }
                }
                covered += null.len();
                next.push(sub);
            }
            // The restricted matrix is diagonalizable (p does not divide
            // |G|), so its eigenspaces must exhaust the subspace.
            if covered != dim {
                return Err(Error::Internal(format!(
                    "eigenspaces cover {covered} of {dim} dimensions"
                )));
            }
        }
        spaces = next;
        let total: usize = spaces.iter().map(|s| s.cols).sum();
        if total != r {
            return Err(Error::Internal(format!(
                "eigenspace dimensions sum to {total}, expected {r}"
            )));
        }
    }
    if spaces.iter().any(|s| s.cols != 1) {
        return Err(Error::Internal(
            "class matrices did not fully separate the characters".into(),
        ));
    }

    // Each 1-dimensional space holds one central character; normalize at
    // the identity class and recover the degree from orthogonality.
    let mut chars: Vec<(u64, Vec<u64>)> = Vec::with_capacity(r);
    for s in &spaces {
        let v: Vec<u64> = (0..r).map(|row| s.at(row, 0)).collect();
        let pivot = v[identity_class];
        if pivot == 0 {
            return Err(Error::Internal(
                "central character vanishes at the identity class".into(),
            ));
        }
        let inv = f.inv(pivot)?;
        let omega: Vec<u64> = v.into_iter().map(|x| f.mul(x, inv)).collect();
        let mut s_sum = 0u64;
        for k in 0..r {
            let term = f.mul(
                f.mul(omega[k], omega[inverse_class[k]]),
                f.inv(self_mod(&f, classes.sizes[k] as u64))?,
            );
            s_sum = f.add(s_sum, term);
        }
        let d_sq = f.mul(n % p, f.inv(s_sum)?);
        let root = f
            .sqrt(d_sq)
            .ok_or_else(|| Error::Internal("degree squared is a non-residue".into()))?;
        let degree = root.min(p - root);
        if degree == 0 || n % degree != 0 {
            return Err(Error::Internal(format!(
                "recovered degree {degree} does not divide the group order {n}"
            )));
        }
        chars.push((degree, omega));
    }
    chars.sort();
    let degree_sum: u64 = chars.iter().map(|(d, _)| d * d).sum();
    if degree_sum != n {
        return Err(Error::Internal(format!(
            "degree squares sum to {degree_sum}, group order is {n}"
        )));
    }
    let (degrees, omegas): (Vec<u64>, Vec<Vec<u64>>) = chars.into_iter().unzip();
    Ok(DegreeTable {
        group_order: n,
        prime: p,
        class_sizes: classes.sizes.clone(),
        identity_class,
        inverse_class,
        degrees,
        omegas,
    })
}

fn self_mod(f: &PrimeField, x: u64) -> u64 {
    x % f.p
}

/// Compute the degree table of `g`.
pub fn character_degrees<G: Group + ?Sized>(g: &G) -> Result<DegreeTable> {
    let classes = conjugacy_classes(g);
    character_degrees_with_classes(g, &classes)
}

/// Counts of irreducible characters by height, where the height h of χ
/// satisfies 2^h·[G:P]₂ = χ(1)₂ for a Sylow 2-subgroup P of order 2^d.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeightProfile {
    pub defect: u32,
    pub counts: BTreeMap<u32, usize>,
}

impl HeightProfile {
    /// Heights that occur, ascending.
    pub fn support(&self) -> Vec<u32> {
        self.counts.keys().copied().collect()
    }

    pub fn character_count(&self) -> usize {
        self.counts.values().sum()
    }
}

/// Aggregate heights from a degree table. `sylow_order` must be the full
/// 2-part of the group order.
pub fn height_profile(table: &DegreeTable, sylow_order: u64) -> Result<HeightProfile> {
    if !sylow_order.is_power_of_two() {
        return Err(Error::Parameter(format!(
            "Sylow order {sylow_order} is not a power of two"
        )));
    }
    let defect = v2(sylow_order);
    if v2(table.group_order) != defect {
        return Err(Error::Parameter(format!(
            "group order 2-part 2^{} does not match Sylow order 2^{defect}",
            v2(table.group_order)
        )));
    }
    let index_v2 = v2(table.group_order) - defect; // zero by the check above
    let mut counts = BTreeMap::new();
    for &d in &table.degrees {
        let h = v2(d) - index_v2;
        *counts.entry(h).or_insert(0usize) += 1;
    }
    Ok(HeightProfile { defect, counts })
}

/// Predicted set of occurring heights for a group of the given family,
/// |Z| = 2^m, and θ of order n (ignored outside family A).
pub fn predicted_heights(family: Family, m: u32, theta_order: u32) -> Vec<u32> {
    let mut set = std::collections::BTreeSet::new();
    set.insert(0u32);
    match family {
        Family::A => {
            let n = theta_order;
            let r = m / n;
            if n % 2 == 1 {
                set.insert((m - r) / 2);
            } else if n == 2 {
                set.insert(m / 2);
            } else {
                set.insert((m - 2 * r) / 2);
                set.insert(m / 2);
            }
        }
        _ => {
            set.insert(m);
        }
    }
    set.into_iter().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// Comparison of an observed height support against the family prediction.
#[derive(Debug, Clone, Serialize)]
pub struct HeightCheck {
    pub group: String,
    pub predicted: Vec<u32>,
    pub observed: Vec<u32>,
    /// With `exact`, the supports must be equal (the group is the full
    /// 2-group); otherwise observed ⊆ predicted suffices (extensions may
    /// miss a height).
    pub exact: bool,
    pub verdict: Verdict,
}

/// Check an observed height support against the prediction for `p_group`.
/// `exact` demands equality (used for the 2-group itself); the containment
/// mode covers odd extensions. Groups whose membership in the classified
/// families is not established (family A with θ of even order) get an
/// inconclusive verdict.
pub fn check_height_prediction(
    p_group: &SuzukiGroup,
    profile: &HeightProfile,
    exact: bool,
) -> HeightCheck {
    let predicted = predicted_heights(p_group.family(), p_group.m(), p_group.theta_order());
    let observed = profile.support();
    let verdict = if p_group.family() == Family::A && p_group.theta_order() % 2 == 0 {
        Verdict::Inconclusive
    } else if exact {
        if observed == predicted {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    } else if observed.iter().all(|h| predicted.contains(h)) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    HeightCheck {
        group: p_group.spec_string(),
        predicted,
        observed,
        exact,
        verdict,
    }
}

/// The class-count bound: k(G) ≤ |P| for P a Sylow 2-subgroup, meaningful
/// here for groups with a unique 2-block.
#[derive(Debug, Clone, Serialize)]
pub struct KBoundCheck {
    pub group: String,
    pub class_count: usize,
    pub sylow_order: u64,
    pub holds: bool,
}

pub fn k_bound_check<G: Group + ?Sized>(g: &G, label: &str) -> KBoundCheck {
    let classes = conjugacy_classes(g);
    let sylow_order = 1u64 << v2(g.order() as u64);
    KBoundCheck {
        group: label.to_string(),
        class_count: classes.reps.len(),
        sylow_order,
        holds: (classes.reps.len() as u64) <= sylow_order,
    }
}

/// Independent degree oracle for small groups: enumerate multisets of
/// divisor degrees with the right count of linear characters and square
/// sum. Returns the solution only when it is unique.
pub fn degree_partition_oracle(
    class_count: usize,
    linear_count: usize,
    order: u64,
) -> Option<Vec<u64>> {
    let nonlinear = class_count - linear_count;
    let remaining = order - linear_count as u64;
    let divisors: Vec<u64> = crate::arith::divisors(order)
        .into_iter()
        .filter(|&d| d > 1 && d * d <= order)
        .collect();
    let mut solutions = Vec::new();
    let mut current = Vec::new();
    fn rec(
        divisors: &[u64],
        start: usize,
        left: usize,
        budget: u64,
        current: &mut Vec<u64>,
        solutions: &mut Vec<Vec<u64>>,
    ) {
        if solutions.len() > 1 {
            return;
        }
        if left == 0 {
            if budget == 0 {
                solutions.push(current.clone());
            }
            return;
        }
        let max_sq = divisors.last().map_or(0, |d| d * d);
        for idx in start..divisors.len() {
            let d = divisors[idx];
            let sq = d * d;
            if sq > budget {
                break;
            }
            // Unreachable budget even if all remaining slots take the
            // largest degree: a larger current degree is required.
            if budget > sq + (left as u64 - 1) * max_sq {
                continue;
            }
            current.push(d);
            rec(divisors, idx, left - 1, budget - sq, current, solutions);
            current.pop();
        }
    }
    rec(
        &divisors,
        0,
        nonlinear,
        remaining,
        &mut current,
        &mut solutions,
    );
    if solutions.len() == 1 {
        let mut out = vec![1u64; linear_count];
        out.extend(solutions.pop().unwrap());
        Some(out)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2m::F2m;
    use crate::group::TableGroup;

    fn gf(m: u32) -> F2m {
        F2m::with_default_poly(m).unwrap()
    }

    fn suzuki(m: u32, fam: Family, l: u32) -> SuzukiGroup {
        SuzukiGroup::new(gf(m), fam, Some(l), None).unwrap()
    }

    #[test]
    fn abelian_groups_have_all_linear_degrees() {
        let c12 = TableGroup::cyclic(12).unwrap();
        let t = character_degrees(&c12).unwrap();
        assert_eq!(t.degrees, vec![1; 12]);
        assert!(t.column_orthogonality_holds());
        let v4 = TableGroup::elementary_abelian_2(2).unwrap();
        let t = character_degrees(&v4).unwrap();
        assert_eq!(t.degrees, vec![1; 4]);
    }

    #[test]
    fn s3_and_q8_match_classical_tables() {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let s3 = TableGroup::from_mul_fn(6, |a, b| {
            let mut c = [0usize; 3];
            for i in 0..3 {
                c[i] = perms[b][perms[a][i]];
            }
            perms.iter().position(|p| *p == c).unwrap()
        })
        .unwrap();
        let t = character_degrees(&s3).unwrap();
        assert_eq!(t.degree_multiset(), vec![(1, 2), (2, 1)]);
        assert!(t.column_orthogonality_holds());
    }

    #[test]
    fn order64_degree_tables_frozen() {
        let a31 = suzuki(3, Family::A, 1);
        let t = character_degrees(&a31).unwrap();
        assert_eq!(t.prime, 17);
        assert_eq!(t.degree_multiset(), vec![(1, 8), (2, 14)]);
        assert_eq!(t.linear_count(), 8);
        assert!(t.column_orthogonality_holds());
        let profile = height_profile(&t, 64).unwrap();
        assert_eq!(profile.support(), vec![0, 1]);
        assert_eq!(profile.counts[&0], 8);
        assert_eq!(profile.counts[&1], 14);
        let check = check_height_prediction(&a31, &profile, true);
        assert_eq!(check.verdict, Verdict::Pass);
        assert_eq!(check.predicted, vec![0, 1]);

        // The twisted q = 4 triple group has 25 classes and height support
        // {0, 1, 2}: the degree-2 characters come from the noncentral
        // elements with small commutator image, and they push the support
        // outside the {0, m} prediction — consistent with this group NOT
        // having a transitive automorphism action on involutions.
        let b21 = suzuki(2, Family::B, 1);
        let t = character_degrees(&b21).unwrap();
        assert_eq!(t.degree_multiset(), vec![(1, 16), (2, 8), (4, 1)]);
        let profile = height_profile(&t, 64).unwrap();
        assert_eq!(profile.support(), vec![0, 1, 2]);
        let check = check_height_prediction(&b21, &profile, true);
        assert_eq!(check.verdict, Verdict::Fail);
        assert_eq!(check.predicted, vec![0, 2]);

        // The untwisted q = 4 triple group is the genuine one: 19 classes,
        // degrees forced to {1 × 16, 4 × 3}, heights exactly {0, 2}.
        let b20 = suzuki(2, Family::B, 0);
        let t = character_degrees(&b20).unwrap();
        assert_eq!(t.degree_multiset(), vec![(1, 16), (4, 3)]);
        let profile = height_profile(&t, 64).unwrap();
        assert_eq!(profile.support(), vec![0, 2]);
        let check = check_height_prediction(&b20, &profile, true);
        assert_eq!(check.verdict, Verdict::Pass);
    }

    #[test]
    fn order512_heights_match_prediction() {
        for (fam, l) in [(Family::B, 1u32), (Family::C, 1)] {
            let g = suzuki(3, fam, l);
            let t = character_degrees(&g).unwrap();
            assert_eq!(t.degree_multiset(), vec![(1, 64), (8, 7)]);
            let profile = height_profile(&t, 512).unwrap();
            let check = check_height_prediction(&g, &profile, true);
            assert_eq!(check.verdict, Verdict::Pass, "{}", g.spec_string());
            assert_eq!(check.predicted, vec![0, 3]);
        }
    }

    #[test]
    fn dixon_agrees_with_partition_oracle_at_order_64() {
        for (m, fam, l) in [(3, Family::A, 1), (3, Family::A, 2), (2, Family::B, 1)] {
            let g = suzuki(m, fam, l);
            let t = character_degrees(&g).unwrap();
            let oracle = degree_partition_oracle(
                t.degrees.len(),
                t.linear_count(),
                t.group_order,
            )
            .expect("unique partition");
            assert_eq!(t.degrees, oracle, "{}", g.spec_string());
        }
    }

    #[test]
    fn degree_tables_are_deterministic() {
        let g = suzuki(3, Family::A, 1);
        let t1 = character_degrees(&g).unwrap();
        let t2 = character_degrees(&g).unwrap();
        assert_eq!(t1, t2);
    }

    #[test]
    fn predicted_height_formulas() {
        // Pair family: θ-order n, r = m/n.
        assert_eq!(predicted_heights(Family::A, 3, 3), vec![0, 1]);
        assert_eq!(predicted_heights(Family::A, 6, 3), vec![0, 2]);
        assert_eq!(predicted_heights(Family::A, 5, 5), vec![0, 2]);
        assert_eq!(predicted_heights(Family::A, 6, 2), vec![0, 3]);
        assert_eq!(predicted_heights(Family::A, 8, 4), vec![0, 2, 4]);
        // Triple families: {0, m}.
        assert_eq!(predicted_heights(Family::B, 2, 2), vec![0, 2]);
        assert_eq!(predicted_heights(Family::C, 3, 3), vec![0, 3]);
        assert_eq!(predicted_heights(Family::D, 5, 5), vec![0, 5]);
    }

    #[test]
    fn k_bound_holds_for_small_groups() {
        let g = suzuki(3, Family::A, 1);
        let check = k_bound_check(&g, "pair-64");
        assert!(check.holds);
        assert_eq!(check.class_count, 22);
        assert_eq!(check.sylow_order, 64);
    }

    #[test]
    fn height_profile_rejects_wrong_sylow_order() {
        let g = suzuki(3, Family::A, 1);
        let t = character_degrees(&g).unwrap();
        assert!(height_profile(&t, 32).is_err());
        assert!(height_profile(&t, 63).is_err());
    }
}
