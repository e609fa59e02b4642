//! Verified automorphisms, involution-orbit transitivity, and semidirect
//! products.
//!
//! A [`GroupMap`] can only be produced by complete verification against a
//! group (or by composing/inverting verified maps), so holding one is proof
//! of automorphy. Two explicit families are constructed for the nilpotent
//! groups: diagonal (Singer-type) maps scaling the field coordinates, and
//! coordinatewise field maps x ↦ x^(2^j).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gf2m::Fe;
use crate::group::{involutions, Group};
use crate::iso::automorphisms;
use crate::suzuki::{Family, SuzukiGroup};

/// Cap on map-closure size (guards runaway composition closures).
pub const MAX_MAP_CLOSURE: usize = 1 << 12;

/// A verified automorphism of a fixed group, stored as an index permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupMap {
    map: Vec<usize>,
}

impl GroupMap {
    /// Verify that `map` is an automorphism of `g` and wrap it.
    ///
    /// Checks bijectivity plus f(x·s) = f(x)·f(s) for every element x and
    /// generator s, which forces multiplicativity on all of `g`.
    pub fn verified<G: Group + ?Sized>(g: &G, map: Vec<usize>) -> Result<Self> {
        let n = g.order();
        if map.len() != n {
            return Err(Error::Parameter(format!(
                "map length {} does not match group order {n}",
                map.len()
            )));
        }
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(Error::Parameter("map is not a bijection".into()));
            }
            seen[v] = true;
        }
        for x in 0..n {
            for &s in &g.generators() {
                if map[g.mul(x, s)] != g.mul(map[x], map[s]) {
                    return Err(Error::Parameter(format!(
                        "map is not multiplicative at ({x}, {s})"
                    )));
                }
            }
        }
        Ok(GroupMap { map })
    }

    /// Wrap an unchecked permutation. Only for maps already known to be
    /// automorphisms (e.g. output of exhaustive search).
    pub fn from_search_result(map: Vec<usize>) -> Self {
        GroupMap { map }
    }

    pub fn identity(n: usize) -> Self {
        GroupMap {
            map: (0..n).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// self ∘ other (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        GroupMap {
            map: other.map.iter().map(|&v| self.map[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0usize; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        GroupMap { map: inv }
    }

    /// Multiplicative order of the permutation.
    pub fn order(&self) -> usize {
        let mut cur = self.clone();
        let mut k = 1usize;
        while !cur.is_identity() {
            cur = cur.compose(self);
            k += 1;
        }
        k
    }
}

/// Diagonal map scaling the first coordinate by ξ. For pairs this is
/// (α, β) ↦ (ξα, ξθ(ξ)β); for triples a compatible β-scale η is found by
/// search so that every product term of the commutation form scales by the
/// same factor ξθ(ξ), which then multiplies γ.
pub fn singer_map(g: &SuzukiGroup, xi: Fe) -> Result<GroupMap> {
    let f = g.field();
    if xi == 0 || !f.contains(xi) {
        return Err(Error::Parameter(format!(
            "diagonal scale must be a nonzero field element, got {xi:#x}"
        )));
    }
    let scale = f.mul(xi, g.theta(xi));
    let map: Vec<usize> = match g.family() {
        Family::A => (0..g.order())
            .map(|idx| {
                let (a, b) = g.unpack_pair(idx);
                g.pack_pair(f.mul(xi, a), f.mul(scale, b))
            })
            .collect(),
        fam => {
            let eta = diagonal_beta_scale(g, xi).ok_or_else(|| {
                Error::Construction(format!(
                    "no compatible β-scale for ξ = {xi:#x} in family {}",
                    fam.letter()
                ))
            })?;
            (0..g.order())
                .map(|idx| {
                    let (a, b, c) = g.unpack_triple(idx);
                    g.pack_triple(f.mul(xi, a), f.mul(eta, b), f.mul(scale, c))
                })
                .collect()
        }
    };
    GroupMap::verified(g, map)
}

/// Find η with every term of the triple-family commutation form scaling by
/// ξθ(ξ) under (α, β) ↦ (ξα, ηβ); returns the least such η.
fn diagonal_beta_scale(g: &SuzukiGroup, xi: Fe) -> Option<Fe> {
    let f = g.field();
    let m = f.m();
    let target = f.mul(xi, g.theta(xi));
    (1..f.q()).find(|&eta| {
        let (mixed, beta_term) = match g.family() {
            Family::B => (f.mul(xi, g.theta(eta)), f.mul(eta, g.theta(eta))),
            Family::C => (
                f.mul(f.sqrt(xi), f.sq(g.theta(eta))),
                f.sq(eta),
            ),
            Family::D => (
                f.mul(f.frob(3 * g.twist() % m, xi), g.theta(eta)),
                f.mul(eta, f.frob(2 * g.twist() % m, eta)),
            ),
            Family::A => unreachable!(),
        };
        mixed == target && beta_term == target
    })
}

/// Coordinatewise field map x ↦ x^(2^j). For the triple families this is an
/// automorphism only when it fixes ε.
pub fn field_map(g: &SuzukiGroup, j: u32) -> Result<GroupMap> {
    let f = g.field();
    let j = j % f.m();
    if let Some(eps) = g.epsilon() {
        if f.frob(j, eps) != eps {
            return Err(Error::Parameter(format!(
                "field map with j = {j} does not fix epsilon = {eps:#x}"
            )));
        }
    }
    let map: Vec<usize> = match g.family() {
        Family::A => (0..g.order())
            .map(|idx| {
                let (a, b) = g.unpack_pair(idx);
                g.pack_pair(f.frob(j, a), f.frob(j, b))
            })
            .collect(),
        _ => (0..g.order())
            .map(|idx| {
                let (a, b, c) = g.unpack_triple(idx);
                g.pack_triple(f.frob(j, a), f.frob(j, b), f.frob(j, c))
            })
            .collect(),
    };
    GroupMap::verified(g, map)
}

/// Close a set of maps under composition (BFS, identity first).
pub fn close_maps(n: usize, gens: &[GroupMap]) -> Result<Vec<GroupMap>> {
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut maps = vec![GroupMap::identity(n)];
    index.insert(maps[0].map.clone(), 0);
    let mut frontier = 0usize;
    while frontier < maps.len() {
        let cur = maps[frontier].clone();
        frontier += 1;
        for gen in gens {
            for composed in [gen.compose(&cur), cur.compose(gen)] {
                if !index.contains_key(&composed.map) {
                    if maps.len() >= MAX_MAP_CLOSURE {
                        return Err(Error::Resource(format!(
                            "map closure exceeds {MAX_MAP_CLOSURE} elements"
                        )));
                    }
                    index.insert(composed.map.clone(), maps.len());
                    maps.push(composed);
                }
            }
        }
    }
    Ok(maps)
}

/// Orbits of the involutions of `g` under a set of maps. Each orbit is
/// ascending; orbits are ordered by least element.
pub fn involution_orbits<G: Group + ?Sized>(g: &G, maps: &[GroupMap]) -> Vec<Vec<usize>> {
    let invs = involutions(g);
    let mut seen = vec![false; g.order()];
    let mut orbits = Vec::new();
    for &x in &invs {
        if seen[x] {
            continue;
        }
        let mut orbit = vec![x];
        seen[x] = true;
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            for a in maps {
                let z = a.apply(y);
                if !seen[z] {
                    seen[z] = true;
                    orbit.push(z);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

/// How transitivity on involutions was decided.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum TransitivityMethod {
    /// Exhaustive automorphism enumeration (definitive both ways).
    FullAutomorphismGroup,
    /// Orbit of explicit diagonal and field maps (definitive when
    /// transitive; a non-full orbit would be inconclusive).
    ExplicitWitnesses,
}

/// Result of the involution-transitivity check.
#[derive(Debug, Clone, serde::Serialize)]
pub struct TransitivityReport {
    pub group: String,
    pub involution_count: usize,
    /// Orbit sizes, ascending.
    pub orbit_sizes: Vec<usize>,
    pub transitive: bool,
    pub method: TransitivityMethod,
}

/// Decide whether Aut(g) is transitive on the involutions of `g`.
///
/// Orders ≤ 64 use the full automorphism group. Larger groups use the
/// explicit diagonal maps for every nonzero ξ together with all admissible
/// field maps; for every catalog group these witnesses already act
/// transitively, so the answer is definitive.
pub fn verify_involution_transitivity(g: &SuzukiGroup) -> Result<TransitivityReport> {
    let (orbits, method) = if g.order() <= crate::iso::MAX_ISO_ORDER {
        let auts: Vec<GroupMap> = automorphisms(g)?
            .into_iter()
            .map(GroupMap::from_search_result)
            .collect();
        (involution_orbits(g, &auts), TransitivityMethod::FullAutomorphismGroup)
    } else {
        let f = g.field();
        let mut witnesses = Vec::new();
        for xi in 1..f.q() {
            witnesses.push(singer_map(g, xi)?);
        }
        for j in 1..f.m() {
            if let Ok(fm) = field_map(g, j) {
                witnesses.push(fm);
            }
        }
        (involution_orbits(g, &witnesses), TransitivityMethod::ExplicitWitnesses)
    };
    let involution_count: usize = orbits.iter().map(|o| o.len()).sum();
    let mut orbit_sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
    orbit_sizes.sort_unstable();
    let transitive = orbits.len() == 1 && involution_count > 0;
    if !transitive && method == TransitivityMethod::ExplicitWitnesses {
        return Err(Error::Internal(format!(
            "explicit witnesses left {} orbits on {}; inconclusive",
            orbits.len(),
            g.spec_string()
        )));
    }
    Ok(TransitivityReport {
        group: g.spec_string(),
        involution_count,
        orbit_sizes,
        transitive,
        method,
    })
}

/// Extension of a base group by a finite group of verified automorphisms:
/// elements are pairs (u, φ) with (u₁, φ₁)(u₂, φ₂) = (u₁·φ₁(u₂), φ₁∘φ₂).
pub struct SemidirectGroup<B: Group> {
    base: B,
    maps: Vec<GroupMap>,
    comp: Vec<u16>,
    inv_e: Vec<u16>,
    gens: Vec<usize>,
}

impl<B: Group> SemidirectGroup<B> {
    /// Build the extension of `base` by the closure of `map_gens`.
    pub fn new(base: B, map_gens: &[GroupMap]) -> Result<Self> {
        let n = base.order();
        for (i, m) in map_gens.iter().enumerate() {
            if m.len() != n {
                return Err(Error::Parameter(format!(
                    "map generator {i} has length {} but the base has order {n}",
                    m.len()
                )));
            }
        }
        let maps = close_maps(n, map_gens)?;
        let k = maps.len();
        if k > u16::MAX as usize {
            return Err(Error::Resource("too many automorphisms in extension".into()));
        }
        let index: HashMap<&[usize], usize> = maps
            .iter()
            .enumerate()
            .map(|(i, m)| (m.as_slice(), i))
            .collect();
        let mut comp = vec![0u16; k * k];
        for (i, a) in maps.iter().enumerate() {
            for (j, b) in maps.iter().enumerate() {
                comp[i * k + j] = index[a.compose(b).as_slice()] as u16;
            }
        }
        let mut inv_e = vec![0u16; k];
        for (i, a) in maps.iter().enumerate() {
            inv_e[i] = index[a.inverse().as_slice()] as u16;
        }
        let mut gens = Vec::new();
        for s in base.generators() {
            gens.push(s * k); // (s, id)
        }
        for m in map_gens {
            let e = index[m.as_slice()];
            if e != 0 {
                gens.push(base.identity() * k + e);
            }
        }
        Ok(SemidirectGroup {
            base,
            maps,
            comp,
            inv_e,
            gens,
        })
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    /// Number of automorphisms in the complement.
    pub fn complement_order(&self) -> usize {
        self.maps.len()
    }

    pub fn unpack(&self, idx: usize) -> (usize, usize) {
        (idx / self.maps.len(), idx % self.maps.len())
    }
}

impl<B: Group> Group for SemidirectGroup<B> {
    fn order(&self) -> usize {
        self.base.order() * self.maps.len()
    }

    fn identity(&self) -> usize {
        self.base.identity() * self.maps.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let k = self.maps.len();
        let (u1, e1) = (a / k, a % k);
        let (u2, e2) = (b / k, b % k);
        let u = self.base.mul(u1, self.maps[e1].apply(u2));
        let e = self.comp[e1 * k + e2] as usize;
        u * k + e
    }

    fn inv(&self, a: usize) -> usize {
        let k = self.maps.len();
        let (u, e) = (a / k, a % k);
        let ie = self.inv_e[e] as usize;
        self.maps[ie].apply(self.base.inv(u)) * k + ie
    }

    fn generators(&self) -> Vec<usize> {
        self.gens.clone()
    }

    fn element_key(&self, x: usize) -> u64 {
        x as u64
    }
}
