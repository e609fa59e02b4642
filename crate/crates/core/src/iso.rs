//! Group fingerprints and small-order brute-force isomorphism testing.
//!
//! The isomorphism search assigns images to a minimal generating sequence,
//! pruned by cheap conjugation invariants (element order, class size,
//! centralizer order), and extends each partial assignment to the generated
//! subgroup by breadth-first products with consistency checks — a
//! collision-free extension is automatically a homomorphism.

use serde::Serialize;

use crate::classes::conjugacy_classes;
use crate::error::{Error, Result};
use crate::group::{
    centralizer, derived_subgroup, element_order, exponent, frattini_2group, is_abelian,
    minimal_generators, ElementSet, Group,
};

/// Largest order accepted by the brute-force isomorphism search.
pub const MAX_ISO_ORDER: usize = 64;

/// Cap on enumerated automorphisms (guards against highly symmetric
/// groups such as large elementary abelian ones).
pub const MAX_AUTOMORPHISMS: usize = 1 << 17;

/// A deterministic bundle of isomorphism invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    pub exponent: u64,
    pub abelian: bool,
    pub center_order: usize,
    pub derived_order: usize,
    /// Frattini subgroup order; only computed for 2-groups (where it is
    /// the product of the square and derived subgroups).
    pub frattini_order: Option<usize>,
    /// (element order, multiplicity), ascending by order.
    pub element_order_histogram: Vec<(u64, usize)>,
    /// (class size, multiplicity), ascending by size.
    pub class_size_histogram: Vec<(usize, usize)>,
}

impl GroupFingerprint {
    /// Canonical JSON rendering (fixed field order, sorted histograms).
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("fingerprint serializes")
    }
}

/// Compute the invariant bundle of `g`.
pub fn fingerprint<G: Group + ?Sized>(g: &G) -> GroupFingerprint {
    let n = g.order();
    let mut order_hist = std::collections::BTreeMap::new();
    for x in 0..n {
        *order_hist.entry(element_order(g, x) as u64).or_insert(0usize) += 1;
    }
    let classes = conjugacy_classes(g);
    let mut class_hist = std::collections::BTreeMap::new();
    for &s in &classes.sizes {
        *class_hist.entry(s).or_insert(0usize) += 1;
    }
    GroupFingerprint {
        order: n,
        exponent: exponent(g),
        abelian: is_abelian(g),
        center_order: crate::group::center(g).len(),
        derived_order: derived_subgroup(g).len(),
        frattini_order: if n.is_power_of_two() && n > 1 {
            Some(frattini_2group(g).len())
        } else {
            None
        },
        element_order_histogram: order_hist.into_iter().collect(),
        class_size_histogram: class_hist.into_iter().collect(),
    }
}

/// Per-element invariant triple used to filter candidate images.
fn invariant_triples<G: Group + ?Sized>(g: &G) -> Vec<(u64, usize, usize)> {
    let classes = conjugacy_classes(g);
    (0..g.order())
        .map(|x| {
            (
                element_order(g, x) as u64,
                classes.sizes[classes.class_of[x] as usize],
                centralizer(g, x).len(),
            )
        })
        .collect()
}

/// Extend the partial generator assignment to the generated subgroup.
/// Returns false when the extension is inconsistent (not a homomorphism).
fn extend_map<G: Group + ?Sized, H: Group + ?Sized>(
    g: &G,
    h: &H,
    gens: &[usize],
    images: &[usize],
    map: &mut [usize],
) -> bool {
    const UNSET: usize = usize::MAX;
    for m in map.iter_mut() {
        *m = UNSET;
    }
    map[g.identity()] = h.identity();
    let mut queue = vec![g.identity()];
    while let Some(x) = queue.pop() {
        for (&s, &y) in gens.iter().zip(images) {
            let p = g.mul(x, s);
            let q = h.mul(map[x], y);
            if map[p] == UNSET {
                map[p] = q;
                queue.push(p);
            } else if map[p] != q {
                return false;
            }
        }
    }
    true
}

/// Whether a fully-defined map of equal-order groups is bijective.
fn is_bijective(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    for &v in map {
        if v == usize::MAX || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Depth-first search over generator images; collects up to `limit`
/// complete bijective homomorphisms (as index maps g → h).
fn image_search<G: Group + ?Sized, H: Group + ?Sized>(
    g: &G,
    h: &H,
    gens: &[usize],
    candidates: &[Vec<usize>],
    limit: usize,
) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut found = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    let mut map = vec![usize::MAX; n];
    fn rec<G: Group + ?Sized, H: Group + ?Sized>(
        g: &G,
        h: &H,
        gens: &[usize],
        candidates: &[Vec<usize>],
        limit: usize,
        images: &mut Vec<usize>,
        map: &mut [usize],
        found: &mut Vec<Vec<usize>>,
    ) {
        if found.len() >= limit {
            return;
        }
        let level = images.len();
        if level == gens.len() {
            if map.iter().all(|&v| v != usize::MAX) && is_bijective(map) {
                found.push(map.to_vec());
            }
            return;
        }
        for &cand in &candidates[level] {
            images.push(cand);
            if extend_map(g, h, &gens[..=level], images, map) {
                rec(g, h, gens, candidates, limit, images, map, found);
            }
            images.pop();
            if found.len() >= limit {
                return;
            }
        }
    }
    rec(g, h, gens, candidates, limit, &mut images, &mut map, &mut found);
    found
}

fn search_setup<G: Group + ?Sized, H: Group + ?Sized>(
    g: &G,
    h: &H,
) -> Result<(Vec<usize>, Vec<Vec<usize>>)> {
    let full = ElementSet::full(g.order());
    let gens = minimal_generators(g, &full)?;
    let triples_g = invariant_triples(g);
    let triples_h = invariant_triples(h);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            (0..h.order())
                .filter(|&y| triples_h[y] == triples_g[s])
                .collect()
        })
        .collect();
    Ok((gens, candidates))
}

/// Search for an isomorphism g → h; `None` is a definitive absence.
/// The returned witness maps g-indices to h-indices and is the least
/// such map in generator-image order.
pub fn brute_force_isomorphic<G: Group + ?Sized, H: Group + ?Sized>(
    g: &G,
    h: &H,
) -> Result<Option<Vec<usize>>> {
    if g.order() > MAX_ISO_ORDER || h.order() > MAX_ISO_ORDER {
        return Err(Error::Resource(format!(
            "isomorphism search supports orders up to {MAX_ISO_ORDER}"
        )));
    }
    if g.order() != h.order() || fingerprint(g) != fingerprint(h) {
        return Ok(None);
    }
    let (gens, candidates) = search_setup(g, h)?;
    Ok(image_search(g, h, &gens, &candidates, 1).into_iter().next())
}

/// Enumerate the full automorphism group of `g` as index maps, in
/// generator-image order.
pub fn automorphisms<G: Group + ?Sized>(g: &G) -> Result<Vec<Vec<usize>>> {
    if g.order() > MAX_ISO_ORDER {
        return Err(Error::Resource(format!(
            "automorphism enumeration supports orders up to {MAX_ISO_ORDER}"
        )));
    }
    let (gens, candidates) = search_setup(g, g)?;
    let found = image_search(g, g, &gens, &candidates, MAX_AUTOMORPHISMS + 1);
    if found.len() > MAX_AUTOMORPHISMS {
        return Err(Error::Resource(format!(
            "automorphism group exceeds {MAX_AUTOMORPHISMS} elements"
        )));
    }
    Ok(found)
}
