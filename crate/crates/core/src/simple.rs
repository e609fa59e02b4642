//! The two desk-scale ambient simple groups as explicit matrix groups:
//! the Suzuki group over GF(8) (4×4 matrices) and SU₃(4) (3×3 matrices
//! over GF(16) preserving a Hermitian form), with Sylow 2-subgroup
//! extraction, identification against the nilpotent families, trivial
//! intersection checking, and torus-induced automorphisms.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::autos::GroupMap;
use crate::error::{Error, Result};
use crate::gf2m::{F2m, Fe};
use crate::group::{minimal_generators, ElementSet, Group, SubgroupView};
use crate::iso::brute_force_isomorphic;
use crate::suzuki::SuzukiGroup;

const MAX_N: usize = 4;

/// A square matrix over GF(2^m), at most 4×4, by-value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat {
    pub n: u8,
    pub e: [Fe; MAX_N * MAX_N],
}

impl Mat {
    pub fn zero(n: usize) -> Self {
        Mat {
            n: n as u8,
            e: [0; MAX_N * MAX_N],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.e[i * n + i] = 1;
        }
        m
    }

    /// Antidiagonal of ones (the Weyl representative used here).
    pub fn antidiag(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.e[i * n + (n - 1 - i)] = 1;
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> Fe {
        self.e[r * self.n as usize + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Fe) {
        self.e[r * self.n as usize + c] = v;
    }

    pub fn mul(&self, f: &F2m, other: &Mat) -> Mat {
        let n = self.n as usize;
        let mut out = Mat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.at(k, j);
                    if b != 0 {
                        out.e[i * n + j] ^= f.mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n as usize;
        let mut out = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.at(i, j));
            }
        }
        out
    }

    /// Entrywise x ↦ x^(2^l).
    pub fn frobenius(&self, f: &F2m, l: u32) -> Mat {
        let n = self.n as usize;
        let mut out = *self;
        for i in 0..n * n {
            out.e[i] = f.frob(l, self.e[i]);
        }
        out
    }

    /// Inverse by Gauss–Jordan elimination; `None` for singular input.
    pub fn inverse(&self, f: &F2m) -> Option<Mat> {
        let n = self.n as usize;
        let mut a = *self;
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.at(r, col) != 0)?;
            if pivot != col {
                for c in 0..n {
                    let (x, y) = (a.at(col, c), a.at(pivot, c));
                    a.set(col, c, y);
                    a.set(pivot, c, x);
                    let (x, y) = (inv.at(col, c), inv.at(pivot, c));
                    inv.set(col, c, y);
                    inv.set(pivot, c, x);
                }
            }
            let scale = f.inv(a.at(col, col)).ok()?;
            for c in 0..n {
                a.set(col, c, f.mul(a.at(col, c), scale));
                inv.set(col, c, f.mul(inv.at(col, c), scale));
            }
            for r in 0..n {
                if r != col && a.at(r, col) != 0 {
                    let factor = a.at(r, col);
                    for c in 0..n {
                        let v = a.at(r, c) ^ f.mul(factor, a.at(col, c));
                        a.set(r, c, v);
                        let v = inv.at(r, c) ^ f.mul(factor, inv.at(col, c));
                        inv.set(r, c, v);
                    }
                }
            }
        }
        Some(inv)
    }

    pub fn determinant(&self, f: &F2m) -> Fe {
        let n = self.n as usize;
        let mut a = *self;
        let mut det: Fe = 1;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a.at(r, col) != 0) else {
                return 0;
            };
            if pivot != col {
                // Row swap changes the sign, which is trivial in
                // characteristic 2.
                for c in 0..n {
                    let (x, y) = (a.at(col, c), a.at(pivot, c));
                    a.set(col, c, y);
                    a.set(pivot, c, x);
                }
            }
            det = f.mul(det, a.at(col, col));
            let scale = f.inv(a.at(col, col)).expect("pivot nonzero");
            for r in col + 1..n {
                if a.at(r, col) != 0 {
                    let factor = f.mul(a.at(r, col), scale);
                    for c in col..n {
                        let v = a.at(r, c) ^ f.mul(factor, a.at(col, c));
                        a.set(r, c, v);
                    }
                }
            }
        }
        det
    }

    /// Pack the entries into a u64 key (n²·m bits, row-major).
    pub fn key(&self, m: u32) -> u64 {
        let n = self.n as usize;
        let mut k = 0u64;
        for i in 0..n * n {
            k = (k << m) | self.e[i] as u64;
        }
        k
    }

    /// Row-major hex entry list, e.g. "[1,0;a,1]" style with hex digits.
    pub fn hex_string(&self) -> String {
        let n = self.n as usize;
        let rows: Vec<String> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| format!("{:x}", self.at(i, j)))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        format!("[{}]", rows.join(";"))
    }
}

/// A finite matrix group materialized by closure, indexed deterministically
/// by ascending packed key.
pub struct MatrixGroup {
    field: F2m,
    tag: String,
    elems: Vec<Mat>,
    index: HashMap<u64, u32>,
    inv: Vec<u32>,
    gens: Vec<usize>,
    identity: usize,
}

impl MatrixGroup {
    /// Close `generators` under multiplication; the result is indexed by
    /// sorted key so discovery order never leaks into element indices.
    pub fn from_generators(
        field: F2m,
        tag: &str,
        generators: &[Mat],
        max_order: usize,
    ) -> Result<Self> {
        let m = field.m();
        let n = generators
            .first()
            .ok_or_else(|| Error::Parameter("no generator matrices".into()))?
            .n as usize;
        let id = Mat::identity(n);
        let mut seen: HashMap<u64, Mat> = HashMap::new();
        seen.insert(id.key(m), id);
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in generators {
                let y = x.mul(&field, g);
                let k = y.key(m);
                if !seen.contains_key(&k) {
                    if seen.len() >= max_order {
                        return Err(Error::Resource(format!(
                            "closure exceeded {max_order} elements for {tag}"
                        )));
                    }
                    seen.insert(k, y);
                    frontier.push(y);
                }
            }
        }
        let mut keyed: Vec<(u64, Mat)> = seen.into_iter().collect();
        keyed.sort_unstable_by_key(|(k, _)| *k);
        let elems: Vec<Mat> = keyed.iter().map(|(_, e)| *e).collect();
        let index: HashMap<u64, u32> = keyed
            .iter()
            .enumerate()
            .map(|(i, (k, _))| (*k, i as u32))
            .collect();
        let inv: Vec<u32> = elems
            .iter()
            .map(|e| {
                let inv_mat = e
                    .inverse(&field)
                    .ok_or_else(|| Error::Construction(format!("singular matrix in {tag}")))?;
                index
                    .get(&inv_mat.key(m))
                    .copied()
                    .ok_or_else(|| Error::Construction(format!("closure of {tag} not a group")))
            })
            .collect::<Result<_>>()?;
        let gens: Vec<usize> = generators
            .iter()
            .map(|g| index[&g.key(m)] as usize)
            .collect();
        let identity = index[&id.key(m)] as usize;
        Ok(MatrixGroup {
            field,
            tag: tag.to_string(),
            elems,
            index,
            inv,
            gens,
            identity,
        })
    }

    pub fn field(&self) -> &F2m {
        &self.field
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn matrix(&self, idx: usize) -> &Mat {
        &self.elems[idx]
    }

    pub fn index_of(&self, mat: &Mat) -> Option<usize> {
        self.index.get(&mat.key(self.field.m())).map(|&i| i as usize)
    }
}

impl Group for MatrixGroup {
    fn order(&self) -> usize {
        self.elems.len()
    }

    fn identity(&self) -> usize {
        self.identity
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let prod = self.elems[a].mul(&self.field, &self.elems[b]);
        self.index[&prod.key(self.field.m())] as usize
    }

    fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    fn generators(&self) -> Vec<usize> {
        self.gens.clone()
    }

    fn element_key(&self, x: usize) -> u64 {
        self.elems[x].key(self.field.m())
    }
}

/// A materialized ambient simple group together with its distinguished
/// Sylow 2-subgroup (ascending element indices).
pub struct AmbientGroup {
    pub group: MatrixGroup,
    pub sylow: Vec<usize>,
}

impl AmbientGroup {
    pub fn sylow_set(&self) -> ElementSet {
        ElementSet::from_indices(self.group.order(), self.sylow.iter().copied())
    }

    pub fn sylow_view(&self) -> Result<SubgroupView<'_, MatrixGroup>> {
        SubgroupView::new(&self.group, &self.sylow_set())
    }
}

/// Lower unitriangular generator of the Suzuki group: the parametrized
/// family satisfies S(a,b)·S(c,d) = S(a+c, b+d+a·θ(c)) with θ(x) = x⁴.
pub fn sz_unipotent(f: &F2m, a: Fe, b: Fe) -> Mat {
    let th = |x: Fe| f.frob(2, x);
    let mut s = Mat::identity(4);
    s.set(1, 0, a);
    s.set(2, 0, f.mul(a, th(a)) ^ b);
    s.set(2, 1, th(a));
    s.set(3, 0, f.mul(f.mul(a, a), th(a)) ^ f.mul(a, b) ^ th(b));
    s.set(3, 1, b);
    s.set(3, 2, a);
    s
}

/// Torus element: diag(λ⁻¹θ(λ)⁻¹·… ) chosen so that conjugation scales the
/// unipotent parameters by (λ, λθ(λ)).
pub fn sz_torus(f: &F2m, lambda: Fe) -> Result<Mat> {
    if lambda == 0 {
        return Err(Error::Parameter("torus parameter must be nonzero".into()));
    }
    let l3 = f.pow(lambda, 3);
    let l2 = f.mul(lambda, lambda);
    let mut m = Mat::zero(4);
    m.set(0, 0, f.inv(l3)?);
    m.set(1, 1, f.inv(l2)?);
    m.set(2, 2, l2);
    m.set(3, 3, l3);
    Ok(m)
}

/// Build the Suzuki simple group over GF(8): 29120 = 64·65·7 matrices.
/// Only the desk-scale instance q = 8 is materialized.
pub fn build_sz(q: u32) -> Result<AmbientGroup> {
    if q != 8 {
        return Err(Error::Parameter(format!(
            "only the q = 8 Suzuki group is materialized (got q = {q}); \
             the next instance has ~3.3e7 elements"
        )));
    }
    let f = F2m::with_default_poly(3)?;
    let gens = vec![
        sz_unipotent(&f, 1, 0),
        sz_unipotent(&f, 0, 1),
        sz_torus(&f, f.generator())?,
        Mat::antidiag(4),
    ];
    let group = MatrixGroup::from_generators(f, "sz(8)", &gens, 40000)?;
    let expected = 64 * 65 * 7;
    if group.order() != expected {
        return Err(Error::Construction(format!(
            "sz(8) closure has {} elements, expected {expected}",
            group.order()
        )));
    }
    let mut sylow: Vec<usize> = Vec::with_capacity(64);
    for a in 0..8 {
        for b in 0..8 {
            let s = sz_unipotent(&f, a, b);
            sylow.push(
                group
                    .index_of(&s)
                    .ok_or_else(|| Error::Construction("unipotent not in closure".into()))?,
            );
        }
    }
    sylow.sort_unstable();
    Ok(AmbientGroup { group, sylow })
}

/// Unipotent generator of the unitary group: u(a,b) with the constraint
/// b + b^q = a^(1+q) over GF(q²).
pub fn su3_unipotent(f: &F2m, conj: u32, a: Fe, b: Fe) -> Mat {
    let mut u = Mat::identity(3);
    u.set(0, 1, a);
    u.set(0, 2, b);
    u.set(1, 2, f.frob(conj, a));
    u
}

/// Torus element diag(λ, λ^(q−1), λ^(−q)).
pub fn su3_torus(f: &F2m, q: u64, lambda: Fe) -> Result<Mat> {
    if lambda == 0 {
        return Err(Error::Parameter("torus parameter must be nonzero".into()));
    }
    let mut m = Mat::zero(3);
    m.set(0, 0, lambda);
    m.set(1, 1, f.mul(f.pow(lambda, q), f.inv(lambda)?));
    m.set(2, 2, f.inv(f.pow(lambda, q))?);
    Ok(m)
}

/// Whether M preserves the Hermitian form with Gram matrix antidiag(1,1,1):
/// Mᵀ·J·M^(q) = J, with conjugation x ↦ x^q = x^(2^conj).
pub fn unitary_form_holds(f: &F2m, conj: u32, m: &Mat) -> bool {
    let j = Mat::antidiag(3);
    let lhs = m.transpose().mul(f, &j).mul(f, &m.frobenius(f, conj));
    lhs == j
}

/// Build SU₃(4) over GF(16): 62400 = 64·15·65 matrices. Only q = 4 is
/// materialized (gcd(3, q+1) = 1, so this equals the projective group).
pub fn build_su3(q: u32) -> Result<AmbientGroup> {
    if q != 4 {
        return Err(Error::Parameter(format!(
            "only the q = 4 unitary group is materialized (got q = {q}); \
             the next instance has ~5.5e6 elements"
        )));
    }
    let f = F2m::with_default_poly(4)?;
    let conj = 2u32; // x ↦ x⁴ on GF(16)
    // Two unipotent generators with nonzero a; solve b + b⁴ = a⁵ by scan.
    let mut unipotents = Vec::new();
    for a in [1 as Fe, f.generator()] {
        let target = f.mul(a, f.frob(conj, a));
        let b = (0..f.q())
            .find(|&b| f.frob(conj, b) ^ b == target)
            .ok_or_else(|| Error::Construction("no unipotent parameter".into()))?;
        unipotents.push(su3_unipotent(&f, conj, a, b));
    }
    let mut gens = unipotents;
    gens.push(su3_torus(&f, 4, f.generator())?);
    gens.push(Mat::antidiag(3));
    for g in &gens {
        if !unitary_form_holds(&f, conj, g) {
            return Err(Error::Construction(format!(
                "generator {} violates the Hermitian form",
                g.hex_string()
            )));
        }
    }
    let group = MatrixGroup::from_generators(f, "su3(4)", &gens, 70000)?;
    let expected = 64 * 15 * 65;
    if group.order() != expected {
        return Err(Error::Construction(format!(
            "su3(4) closure has {} elements, expected {expected}",
            group.order()
        )));
    }
    let mut sylow = Vec::with_capacity(64);
    for a in 0..f.q() {
        let target = f.mul(a, f.frob(conj, a));
        for b in 0..f.q() {
            if f.frob(conj, b) ^ b == target {
                let u = su3_unipotent(&f, conj, a, b);
                sylow.push(
                    group
                        .index_of(&u)
                        .ok_or_else(|| Error::Construction("unipotent not in closure".into()))?,
                );
            }
        }
    }
    if sylow.len() != 64 {
        return Err(Error::Construction(format!(
            "unitary Sylow has {} elements, expected 64",
            sylow.len()
        )));
    }
    sylow.sort_unstable();
    Ok(AmbientGroup { group, sylow })
}

/// Identify the ambient group's Sylow 2-subgroup against a candidate
/// nilpotent construction: explicit witness or definitive absence.
pub fn identify_sylow(
    ambient: &AmbientGroup,
    candidate: &SuzukiGroup,
) -> Result<Option<Vec<usize>>> {
    let view = ambient.sylow_view()?;
    brute_force_isomorphic(&view, candidate)
}

/// Result of the trivial-intersection check.
#[derive(Debug, Clone, Serialize)]
pub struct TiReport {
    pub group: String,
    pub sylow_order: usize,
    pub conjugates: usize,
    /// Every pair of distinct conjugates meets in the identity alone.
    pub ti: bool,
    /// |orbit| · |N_G(P)| = |G| cross-check (not part of the JSON shape).
    #[serde(skip)]
    pub normalizer_order: usize,
    #[serde(skip)]
    pub orbit_stabilizer_consistent: bool,
}

/// Enumerate the conjugates of the Sylow subgroup under the generator
/// orbit and verify pairwise trivial intersection.
pub fn ti_check(ambient: &AmbientGroup) -> Result<TiReport> {
    let g = &ambient.group;
    let base: Vec<u32> = ambient.sylow.iter().map(|&x| x as u32).collect();
    let conjugate = |set: &[u32], t: usize| -> Vec<u32> {
        let ti = g.inv(t);
        let mut out: Vec<u32> = set
            .iter()
            .map(|&x| g.mul(g.mul(t, x as usize), ti) as u32)
            .collect();
        out.sort_unstable();
        out
    };
    let mut orbit: Vec<Vec<u32>> = vec![base.clone()];
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(base.clone());
    let mut i = 0;
    while i < orbit.len() {
        let cur = orbit[i].clone();
        i += 1;
        for &t in &g.generators() {
            let conj = conjugate(&cur, t);
            if !seen.contains(&conj) {
                seen.insert(conj.clone());
                orbit.push(conj);
            }
        }
    }
    let identity = g.identity() as u32;
    // Sorted-merge intersection per pair; pairs are independent tasks and
    // the all-trivial conjunction is thread-order independent.
    let pair_trivial = |a: &[u32], b: &[u32]| -> bool {
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if a[i] != identity {
                        return false;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        true
    };
    let ti = (0..orbit.len())
        .into_par_iter()
        .all(|x| (x + 1..orbit.len()).all(|y| pair_trivial(&orbit[x], &orbit[y])));
    // Direct normalizer computation: g normalizes P iff it conjugates a
    // generating set of P into P.
    let sylow_set = ambient.sylow_set();
    let p_gens = minimal_generators(g, &sylow_set)?;
    let normalizer_order = (0..g.order())
        .into_par_iter()
        .filter(|&t| {
            let ti_idx = g.inv(t);
            p_gens
                .iter()
                .all(|&s| sylow_set.contains(g.mul(g.mul(t, s), ti_idx)))
        })
        .count();
    Ok(TiReport {
        group: g.tag().to_string(),
        sylow_order: ambient.sylow.len(),
        conjugates: orbit.len(),
        ti,
        normalizer_order,
        orbit_stabilizer_consistent: orbit.len() * normalizer_order == g.order(),
    })
}

/// Conjugation by a normalizing element, restricted to the Sylow subgroup,
/// as a verified automorphism in the Sylow's local indices.
pub fn torus_automorphism(ambient: &AmbientGroup, t: usize) -> Result<GroupMap> {
    let g = &ambient.group;
    let view = ambient.sylow_view()?;
    let ti = g.inv(t);
    let mut map = Vec::with_capacity(ambient.sylow.len());
    for &x in &ambient.sylow {
        let image = g.mul(g.mul(t, x), ti);
        match view.local_index(image) {
            Some(local) => map.push(local),
            None => {
                return Err(Error::Usage(format!(
                    "element {t} does not normalize the Sylow subgroup"
                )))
            }
        }
    }
    GroupMap::verified(&view, map)
}

/// Entrywise field automorphism x ↦ x^(2^j) of the whole matrix group,
/// as a verified automorphism (it permutes the closure).
pub fn frobenius_map(group: &MatrixGroup, j: u32) -> Result<GroupMap> {
    let f = group.field();
    let map: Vec<usize> = (0..group.order())
        .map(|idx| {
            group
                .index_of(&group.matrix(idx).frobenius(f, j))
                .ok_or_else(|| {
                    Error::Construction("field map does not preserve the closure".into())
                })
        })
        .collect::<Result<_>>()?;
    GroupMap::verified(group, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{center, exponent, involutions};
    use crate::suzuki::Family;

    fn gf(m: u32) -> F2m {
        F2m::with_default_poly(m).unwrap()
    }

    #[test]
    fn suzuki_group_order_and_sylow_law() {
        let amb = build_sz(8).unwrap();
        assert_eq!(amb.group.order(), 29120);
        assert_eq!(amb.sylow.len(), 64);
        let f = gf(3);
        // Exhaustive law check: S(a,b)·S(c,d) = S(a+c, b+d+a·θ(c)).
        for a in 0..8u32 {
            for b in 0..8u32 {
                for c in 0..8u32 {
                    for d in 0..8u32 {
                        let lhs = sz_unipotent(&f, a, b).mul(&f, &sz_unipotent(&f, c, d));
                        let rhs =
                            sz_unipotent(&f, a ^ c, b ^ d ^ f.mul(a, f.frob(2, c)));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
        // Determinant-1 invariant over the whole group.
        for i in 0..amb.group.order() {
            assert_eq!(amb.group.matrix(i).determinant(&f), 1);
        }
    }

    #[test]
    fn unitary_group_order_form_and_sylow_shape() {
        let amb = build_su3(4).unwrap();
        assert_eq!(amb.group.order(), 62400);
        assert_eq!(amb.sylow.len(), 64);
        let f = gf(4);
        for i in 0..amb.group.order() {
            assert!(unitary_form_holds(&f, 2, amb.group.matrix(i)));
            assert_eq!(amb.group.matrix(i).determinant(&f), 1);
        }
        let view = amb.sylow_view().unwrap();
        assert_eq!(exponent(&view), 4);
        assert_eq!(center(&view).len(), 4);
        assert_eq!(involutions(&view).len(), 3);
    }

    #[test]
    fn sylow_identification_resolves_the_twist() {
        let sz = build_sz(8).unwrap();
        let a32 = SuzukiGroup::new(gf(3), Family::A, Some(2), None).unwrap();
        let w = identify_sylow(&sz, &a32).unwrap();
        assert!(w.is_some(), "Suzuki-group Sylow matches the pair family at l=2");
        // Verify the witness is a genuine isomorphism.
        let map = w.unwrap();
        let view = sz.sylow_view().unwrap();
        for x in 0..64 {
            for y in 0..64 {
                assert_eq!(map[view.mul(x, y)], a32.mul(map[x], map[y]));
            }
        }

        let su = build_su3(4).unwrap();
        let b20 = SuzukiGroup::new(gf(2), Family::B, Some(0), None).unwrap();
        assert!(
            identify_sylow(&su, &b20).unwrap().is_some(),
            "unitary Sylow matches the untwisted triple family"
        );
        let b21 = SuzukiGroup::new(gf(2), Family::B, Some(1), None).unwrap();
        assert!(
            identify_sylow(&su, &b21).unwrap().is_none(),
            "unitary Sylow does not match the twisted triple family"
        );
        // The two ambient Sylows are non-isomorphic (|Z| = 8 vs 4).
        let sz_view = sz.sylow_view().unwrap();
        assert_eq!(center(&sz_view).len(), 8);
        let su_view = su.sylow_view().unwrap();
        assert_eq!(center(&su_view).len(), 4);
    }

    #[test]
    fn trivial_intersection_holds_in_both_ambient_groups() {
        for amb in [build_sz(8).unwrap(), build_su3(4).unwrap()] {
            let report = ti_check(&amb).unwrap();
            assert_eq!(report.conjugates, 65, "{}", report.group);
            assert!(report.ti, "{}", report.group);
            assert!(report.orbit_stabilizer_consistent, "{}", report.group);
            assert_eq!(
                report.normalizer_order * 65,
                amb.group.order(),
                "{}",
                report.group
            );
        }
    }

    #[test]
    fn torus_automorphism_realizes_odd_action() {
        let amb = build_su3(4).unwrap();
        let f = gf(4);
        // h(λ) for a generator λ of GF(16)^× has order 15 on the Sylow.
        let h = su3_torus(&f, 4, f.generator()).unwrap();
        let t = amb.group.index_of(&h).unwrap();
        let auto = torus_automorphism(&amb, t).unwrap();
        assert_eq!(auto.order(), 15);
        let cubed_pow = {
            // Fifth power has order 3.
            let mut a = auto.clone();
            for _ in 0..4 {
                a = a.compose(&auto);
            }
            a
        };
        assert_eq!(cubed_pow.order(), 3);
        // The full torus action is transitive on the 3 involutions.
        let view = amb.sylow_view().unwrap();
        let orbits = crate::autos::involution_orbits(&view, &[auto]);
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].len(), 3);
    }

    #[test]
    fn non_normalizing_element_is_rejected() {
        let amb = build_sz(8).unwrap();
        // The Weyl element does not normalize the Sylow subgroup.
        let w = amb.group.index_of(&Mat::antidiag(4)).unwrap();
        assert!(matches!(
            torus_automorphism(&amb, w),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn frobenius_is_an_automorphism_of_the_closure() {
        let amb = build_sz(8).unwrap();
        let fr = frobenius_map(&amb.group, 1).unwrap();
        assert_eq!(fr.order(), 3);
        // It normalizes the Sylow subgroup setwise.
        let sylow_set: std::collections::HashSet<usize> =
            amb.sylow.iter().copied().collect();
        for &x in &amb.sylow {
            assert!(sylow_set.contains(&fr.apply(x)));
        }
    }

    #[test]
    fn guards_reject_larger_instances() {
        assert!(matches!(build_sz(32), Err(Error::Parameter(_))));
        assert!(matches!(build_su3(8), Err(Error::Parameter(_))));
    }
}
