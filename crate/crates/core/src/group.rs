//! Finite-group engine.
//!
//! Every concrete group in this crate exposes its elements as indices
//! `0..order`, with multiplication, inversion and a small generating set.
//! All structural algorithms (closure, centers, derived subgroups,
//! quotients, ...) are written once against the [`Group`] trait.
//!
//! Index spaces are always deterministic: constructors sort elements by a
//! stable packed key, so every run of the toolkit numbers elements the
//! same way.

use crate::error::{Error, Result};

/// Hard cap on the order of any group this crate will materialize.
pub const MAX_GROUP_ORDER: usize = 1 << 17;

/// A finite group whose elements are indices `0..order`.
///
/// Implementations must be immutable after construction (`Sync` lets the
/// structural algorithms parallelize scans).
pub trait Group: Sync {
    fn order(&self) -> usize;
    fn identity(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;
    /// A small generating set (may be empty only for the trivial group).
    fn generators(&self) -> Vec<usize>;
    /// A stable, injective 64-bit key for an element; used for display and
    /// for deterministic ordering across runs.
    fn element_key(&self, a: usize) -> u64;
}

/// A subset of a group's index space, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElementSet {
    n: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        ElementSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = ElementSet::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, iter: I) -> Self {
        let mut s = ElementSet::empty(n);
        for i in iter {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    /// Insert; returns true if the element was not already present.
    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.n);
        let (w, b) = (i / 64, i % 64);
        let had = (self.words[w] >> b) & 1;
        self.words[w] |= 1 << b;
        had == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.n);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Ascending iteration over member indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// Backing bit words (little-endian by index); useful as a cheap
    /// deterministic sort key for collections of sets.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        debug_assert_eq!(self.n, other.n);
        ElementSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }
}

/// Subgroup generated by `seed`: breadth-first closure under right
/// multiplication (sufficient in a finite group).
pub fn closure<G: Group + ?Sized>(g: &G, seed: &[usize]) -> ElementSet {
    let mut set = ElementSet::empty(g.order());
    let id = g.identity();
    set.insert(id);
    let mut work = vec![id];
    while let Some(x) = work.pop() {
        for &s in seed {
            let y = g.mul(x, s);
            if set.insert(y) {
                work.push(y);
            }
        }
    }
    set
}

/// h^-1 x h.
pub fn conjugate<G: Group + ?Sized>(g: &G, x: usize, h: usize) -> usize {
    g.mul(g.mul(g.inv(h), x), h)
}

/// a^-1 b^-1 a b.
pub fn commutator<G: Group + ?Sized>(g: &G, a: usize, b: usize) -> usize {
    g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b))
}

/// x^k for k >= 0.
pub fn power<G: Group + ?Sized>(g: &G, x: usize, k: usize) -> usize {
    let mut out = g.identity();
    for _ in 0..k {
        out = g.mul(out, x);
    }
    out
}

/// Smallest normal subgroup containing `seed`: closure alternated with
/// conjugation by the group's generators.
pub fn normal_closure<G: Group + ?Sized>(g: &G, seed: &[usize]) -> ElementSet {
    let gens = g.generators();
    let mut gen_set: Vec<usize> = seed.to_vec();
    loop {
        let set = closure(g, &gen_set);
        let mut fresh = Vec::new();
        for x in set.iter() {
            for &h in &gens {
                let c = conjugate(g, x, h);
                if !set.contains(c) {
                    fresh.push(c);
                }
            }
        }
        if fresh.is_empty() {
            return set;
        }
        gen_set.extend(fresh);
    }
}

/// True if the set (assumed a subgroup) is invariant under conjugation.
pub fn is_normal<G: Group + ?Sized>(g: &G, set: &ElementSet) -> bool {
    let gens = g.generators();
    set.iter()
        .all(|x| gens.iter().all(|&h| set.contains(conjugate(g, x, h))))
}

/// Multiplicative order of an element.
pub fn element_order<G: Group + ?Sized>(g: &G, x: usize) -> usize {
    let id = g.identity();
    let mut y = x;
    let mut ord = 1;
    while y != id {
        y = g.mul(y, x);
        ord += 1;
    }
    ord
}

/// Exponent: lcm of all element orders.
pub fn exponent<G: Group + ?Sized>(g: &G) -> u64 {
    let mut e = 1u64;
    for x in 0..g.order() {
        e = crate::arith::lcm(e, element_order(g, x) as u64);
    }
    e
}

/// A group is abelian iff its generators commute pairwise.
pub fn is_abelian<G: Group + ?Sized>(g: &G) -> bool {
    let gens = g.generators();
    gens.iter()
        .all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

/// Elements commuting with every generator.
pub fn center<G: Group + ?Sized>(g: &G) -> ElementSet {
    let gens = g.generators();
    ElementSet::from_indices(
        g.order(),
        (0..g.order()).filter(|&x| gens.iter().all(|&h| g.mul(x, h) == g.mul(h, x))),
    )
}

/// Elements commuting with `x`.
pub fn centralizer<G: Group + ?Sized>(g: &G, x: usize) -> ElementSet {
    ElementSet::from_indices(
        g.order(),
        (0..g.order()).filter(|&y| g.mul(x, y) == g.mul(y, x)),
    )
}

/// Derived subgroup: normal closure of the commutators of generator pairs.
pub fn derived_subgroup<G: Group + ?Sized>(g: &G) -> ElementSet {
    let gens = g.generators();
    let mut comms = Vec::new();
    for &a in &gens {
        for &b in &gens {
            comms.push(commutator(g, a, b));
        }
    }
    normal_closure(g, &comms)
}

/// Subgroup generated by all squares.
pub fn squares_subgroup<G: Group + ?Sized>(g: &G) -> ElementSet {
    let sq: Vec<usize> = (0..g.order()).map(|x| g.mul(x, x)).collect();
    closure(g, &sq)
}

/// Frattini subgroup of a 2-group: generated by squares and commutators.
pub fn frattini_2group<G: Group + ?Sized>(g: &G) -> ElementSet {
    let mut seed: Vec<usize> = (0..g.order()).map(|x| g.mul(x, x)).collect();
    seed.extend(derived_subgroup(g).iter());
    closure(g, &seed)
}

/// All elements of order exactly 2.
pub fn involutions<G: Group + ?Sized>(g: &G) -> Vec<usize> {
    let id = g.identity();
    (0..g.order())
        .filter(|&x| x != id && g.mul(x, x) == id)
        .collect()
}

/// Subgroup generated by the involutions (Omega_1 for a 2-group).
pub fn omega1<G: Group + ?Sized>(g: &G) -> ElementSet {
    closure(g, &involutions(g))
}

/// Greedy minimal generating set for the subgroup `members` of `g`.
/// Scans indices ascending, keeps a generator whenever it enlarges the
/// closure, then drops redundant generators. Errors if `members` is not
/// closed (the generated subgroup would differ from the input).
pub fn minimal_generators<G: Group + ?Sized>(
    g: &G,
    members: &ElementSet,
) -> Result<Vec<usize>> {
    if !members.contains(g.identity()) {
        return Err(Error::Construction(
            "subgroup candidate does not contain the identity".into(),
        ));
    }
    let target = members.len();
    let mut gens: Vec<usize> = Vec::new();
    let mut cl = closure(g, &gens);
    for x in members.iter() {
        if cl.len() == target {
            break;
        }
        if !cl.contains(x) {
            gens.push(x);
            cl = closure(g, &gens);
        }
    }
    if cl != *members {
        return Err(Error::Construction(
            "set is not closed under multiplication".into(),
        ));
    }
    let mut i = 0;
    while gens.len() > 1 && i < gens.len() {
        let mut reduced = gens.clone();
        reduced.remove(i);
        if closure(g, &reduced).len() == target {
            gens = reduced;
        } else {
            i += 1;
        }
    }
    Ok(gens)
}

/// A subgroup of a parent group, re-indexed as a group in its own right.
pub struct SubgroupView<'a, G: Group + ?Sized> {
    parent: &'a G,
    members: Vec<usize>,
    pos: Vec<u32>,
    gens_local: Vec<usize>,
}

impl<'a, G: Group + ?Sized> SubgroupView<'a, G> {
    /// Wrap a member set as a group; verifies it really is a subgroup.
    pub fn new(parent: &'a G, set: &ElementSet) -> Result<Self> {
        let gens_parent = minimal_generators(parent, set)?;
        let members = set.to_vec();
        let mut pos = vec![u32::MAX; parent.order()];
        for (local, &p) in members.iter().enumerate() {
            pos[p] = local as u32;
        }
        let gens_local = gens_parent.iter().map(|&p| pos[p] as usize).collect();
        Ok(SubgroupView {
            parent,
            members,
            pos,
            gens_local,
        })
    }

    /// Parent index of a local element.
    pub fn parent_index(&self, local: usize) -> usize {
        self.members[local]
    }

    /// Local index of a parent element, if it belongs to the subgroup.
    pub fn local_index(&self, parent: usize) -> Option<usize> {
        match self.pos[parent] {
            u32::MAX => None,
            l => Some(l as usize),
        }
    }
}

impl<G: Group + ?Sized> Group for SubgroupView<'_, G> {
    fn order(&self) -> usize {
        self.members.len()
    }
    fn identity(&self) -> usize {
        self.pos[self.parent.identity()] as usize
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let p = self.parent.mul(self.members[a], self.members[b]);
        let l = self.pos[p];
        debug_assert!(l != u32::MAX, "subgroup view not closed");
        l as usize
    }
    fn inv(&self, a: usize) -> usize {
        self.pos[self.parent.inv(self.members[a])] as usize
    }
    fn generators(&self) -> Vec<usize> {
        self.gens_local.clone()
    }
    fn element_key(&self, a: usize) -> u64 {
        self.parent.element_key(self.members[a])
    }
}

/// Quotient of a group by a normal subgroup; cosets are indexed by their
/// minimal parent representative, discovered in ascending order.
pub struct QuotientGroup<'a, G: Group + ?Sized> {
    parent: &'a G,
    class_of: Vec<u32>,
    reps: Vec<usize>,
    gens: Vec<usize>,
}

impl<'a, G: Group + ?Sized> QuotientGroup<'a, G> {
    pub fn new(parent: &'a G, normal: &ElementSet) -> Result<Self> {
        if !is_normal(parent, normal) {
            return Err(Error::Construction(
                "quotient requested by a non-normal subgroup".into(),
            ));
        }
        // sanity: the divisor must be a subgroup (checked via generators)
        minimal_generators(parent, normal)?;
        let n = parent.order();
        let mut class_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if class_of[x] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for h in normal.iter() {
                class_of[parent.mul(h, x)] = c;
            }
        }
        let mut gens: Vec<usize> = parent
            .generators()
            .iter()
            .map(|&h| class_of[h] as usize)
            .collect();
        gens.sort_unstable();
        gens.dedup();
        let id = class_of[parent.identity()] as usize;
        gens.retain(|&c| c != id);
        Ok(QuotientGroup {
            parent,
            class_of,
            reps,
            gens,
        })
    }

    pub fn coset_rep(&self, c: usize) -> usize {
        self.reps[c]
    }

    pub fn coset_of(&self, parent_index: usize) -> usize {
        self.class_of[parent_index] as usize
    }
}

impl<G: Group + ?Sized> Group for QuotientGroup<'_, G> {
    fn order(&self) -> usize {
        self.reps.len()
    }
    fn identity(&self) -> usize {
        self.class_of[self.parent.identity()] as usize
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        self.class_of[self.parent.mul(self.reps[a], self.reps[b])] as usize
    }
    fn inv(&self, a: usize) -> usize {
        self.class_of[self.parent.inv(self.reps[a])] as usize
    }
    fn generators(&self) -> Vec<usize> {
        self.gens.clone()
    }
    fn element_key(&self, a: usize) -> u64 {
        self.parent.element_key(self.reps[a])
    }
}

/// A small group held as an explicit multiplication table; used for
/// controls in tests and for materializing quotients/subgroups.
pub struct TableGroup {
    n: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    id: usize,
    gens: Vec<usize>,
}

/// Cap on table-backed groups (the table is order^2 entries).
pub const MAX_TABLE_ORDER: usize = 4096;

impl TableGroup {
    /// Build from a multiplication function; verifies the group axioms
    /// (full associativity for orders <= 128, spot otherwise).
    pub fn from_mul_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        if n == 0 || n > MAX_TABLE_ORDER {
            return Err(Error::Resource(format!(
                "table group order {n} out of range 1..={MAX_TABLE_ORDER}"
            )));
        }
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let c = f(a, b);
                if c >= n {
                    return Err(Error::Construction(
                        "multiplication escapes the index range".into(),
                    ));
                }
                table[a * n + b] = c as u32;
            }
        }
        let mul = |a: usize, b: usize| table[a * n + b] as usize;
        let id = (0..n)
            .find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or_else(|| Error::Construction("no identity element".into()))?;
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let ai = (0..n)
                .find(|&b| mul(a, b) == id && mul(b, a) == id)
                .ok_or_else(|| Error::Construction(format!("element {a} has no inverse")))?;
            inv[a] = ai as u32;
        }
        if n <= 128 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                            return Err(Error::Construction(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        }
        let mut g = TableGroup {
            n,
            table,
            inv,
            id,
            gens: Vec::new(),
        };
        g.gens = minimal_generators(&g, &ElementSet::full(n))?;
        Ok(g)
    }

    /// Cyclic group of order n.
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::from_mul_fn(n, |a, b| (a + b) % n)
    }

    /// Direct product of two groups, materialized as a table.
    pub fn direct_product<A: Group + ?Sized, B: Group + ?Sized>(
        a: &A,
        b: &B,
    ) -> Result<Self> {
        let (na, nb) = (a.order(), b.order());
        let n = na
            .checked_mul(nb)
            .filter(|&n| n <= MAX_TABLE_ORDER)
            .ok_or_else(|| Error::Resource("direct product too large for a table".into()))?;
        Self::from_mul_fn(n, |x, y| {
            let (xa, xb) = (x / nb, x % nb);
            let (ya, yb) = (y / nb, y % nb);
            a.mul(xa, ya) * nb + b.mul(xb, yb)
        })
    }

    /// Elementary abelian group of order 2^k.
    pub fn elementary_abelian_2(k: u32) -> Result<Self> {
        let n = 1usize << k;
        Self::from_mul_fn(n, |a, b| a ^ b)
    }

    /// Materialize any (small) group as an explicit table, preserving the
    /// element indexing.
    pub fn materialize<G: Group + ?Sized>(g: &G) -> Result<Self> {
        let n = g.order();
        if n > MAX_TABLE_ORDER {
            return Err(Error::Resource(format!(
                "cannot materialize a table for order {n}"
            )));
        }
        Self::from_mul_fn(n, |a, b| g.mul(a, b))
    }
}

impl Group for TableGroup {
    fn order(&self) -> usize {
        self.n
    }
    fn identity(&self) -> usize {
        self.id
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }
    fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }
    fn generators(&self) -> Vec<usize> {
        self.gens.clone()
    }
    fn element_key(&self, a: usize) -> u64 {
        a as u64
    }
}
