//! Normal-subgroup enumeration and the structure laws that normal
//! subgroups of the twisted 2-group families must satisfy.
//!
//! A normal subgroup is a union of conjugacy classes, so the whole lattice
//! is computed at the class level: a subgroup becomes a bitset over class
//! indices, products and commutation of classes are representative
//! independent, and every normal subgroup is the join of the closures of
//! the single classes it contains. Element-level sets are materialized
//! only on demand.

use std::collections::HashSet;

use crate::classes::{conjugacy_classes, ConjugacyClasses};
use crate::error::{Error, Result};
use crate::group::{center, is_normal, ElementSet, Group, SubgroupView};
use crate::suzuki::{Family, SuzukiGroup};

/// Largest group order for which the normal-subgroup lattice is computed.
pub const MAX_LATTICE_GROUP_ORDER: usize = 1 << 12;

/// Safety valve on the number of distinct normal subgroups.
pub const MAX_LATTICE_SIZE: usize = 1 << 20;

/// The normal-subgroup lattice, held as bitsets over conjugacy classes.
pub struct NormalLattice {
    classes: ConjugacyClasses,
    /// Members of each class, ascending.
    members: Vec<Vec<usize>>,
    /// Words per class bitset.
    cw: usize,
    /// Flattened r rows: row i marks classes j with cᵢ elementwise
    /// commuting with all of cⱼ (a class-invariant relation).
    comm: Vec<u64>,
    /// Bitset of central (singleton) classes.
    central: Vec<u64>,
    /// Class bitsets of all normal subgroups, canonically sorted
    /// (ascending order, then ascending bit words).
    sets: Vec<Vec<u64>>,
    group_order: usize,
}

impl NormalLattice {
    /// Enumerate all normal subgroups of `g`.
    ///
    /// Every normal subgroup is the join of the normal closures of the
    /// single classes it contains, so the lattice is the join-closure of
    /// those atoms, starting from the trivial subgroup.
    pub fn build<G: Group + ?Sized>(g: &G) -> Result<Self> {
        let n = g.order();
        if n > MAX_LATTICE_GROUP_ORDER {
            return Err(Error::Resource(format!(
                "normal-subgroup lattice supports orders up to {MAX_LATTICE_GROUP_ORDER}, got {n}"
            )));
        }
        let classes = conjugacy_classes(g);
        let r = classes.count();
        let cw = r.div_ceil(64);
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); r];
        for x in 0..n {
            members[classes.class_of[x] as usize].push(x);
        }

        // Products of one representative against a whole class reach the
        // same classes as products over the full class pair, because
        // (xᵍ)·y = (x·y^(g⁻¹))ᵍ ranges over conjugates of rep-products.
        let mut hits = vec![0u64; r * r * cw];
        for i in 0..r {
            let rep = classes.reps[i];
            for j in 0..r {
                let row = &mut hits[(i * r + j) * cw..(i * r + j + 1) * cw];
                for &y in &members[j] {
                    let c = classes.class_of[g.mul(rep, y)] as usize;
                    row[c / 64] |= 1 << (c % 64);
                }
            }
        }
        // "Commutes with the whole class" is likewise representative
        // independent, and symmetric.
        let mut comm = vec![0u64; r * cw];
        for i in 0..r {
            let rep = classes.reps[i];
            for j in 0..r {
                let all = members[j]
                    .iter()
                    .all(|&y| g.mul(rep, y) == g.mul(y, rep));
                if all {
                    comm[i * cw + j / 64] |= 1 << (j % 64);
                }
            }
        }
        let mut central = vec![0u64; cw];
        for (i, &sz) in classes.sizes.iter().enumerate() {
            // A class is central exactly when it is a singleton.
            if sz == 1 {
                central[i / 64] |= 1 << (i % 64);
            }
        }

        let id_class = classes.class_of[g.identity()] as usize;
        // Close `cur` under class products, processing only classes listed
        // in `fresh` (cur without them must already be product-closed).
        // Product symmetry (xy conjugate to yx) means one orientation per
        // pair suffices.
        let close_from = |cur: &mut [u64], fresh: Vec<usize>, hits: &[u64]| {
            let mut work = fresh;
            while let Some(i) = work.pop() {
                let snapshot: Vec<u64> = cur.to_vec();
                for j in bits(&snapshot) {
                    let row = &hits[(i * r + j) * cw..(i * r + j + 1) * cw];
                    for (w, &h) in row.iter().enumerate() {
                        let mut new = h & !cur[w];
                        cur[w] |= h;
                        while new != 0 {
                            work.push(w * 64 + new.trailing_zeros() as usize);
                            new &= new - 1;
                        }
                    }
                }
            }
        };

        let mut trivial = vec![0u64; cw];
        trivial[id_class / 64] |= 1 << (id_class % 64);
        // Atomic join generators: closure of a single class (plus identity).
        let mut atoms: Vec<Vec<u64>> = Vec::new();
        let mut atom_seen: HashSet<Vec<u64>> = HashSet::new();
        for k in 0..r {
            if k == id_class {
                continue;
            }
            let mut a = trivial.clone();
            a[k / 64] |= 1 << (k % 64);
            close_from(&mut a, vec![k], &hits);
            if atom_seen.insert(a.clone()) {
                atoms.push(a);
            }
        }

        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        seen.insert(trivial.clone());
        let mut work = vec![trivial];
        while let Some(s) = work.pop() {
            for a in &atoms {
                let fresh: Vec<usize> = bits(a)
                    .filter(|&i| (s[i / 64] >> (i % 64)) & 1 == 0)
                    .collect();
                if fresh.is_empty() {
                    continue; // a ⊆ s: join is s itself
                }
                let mut joined = s.clone();
                for (w, &aw) in joined.iter_mut().zip(a.iter()) {
                    *w |= aw;
                }
                close_from(&mut joined, fresh, &hits);
                if seen.len() >= MAX_LATTICE_SIZE && !seen.contains(&joined) {
                    return Err(Error::Resource(format!(
                        "normal-subgroup lattice exceeds {MAX_LATTICE_SIZE} subgroups"
                    )));
                }
                if seen.insert(joined.clone()) {
                    work.push(joined);
                }
            }
        }

        let mut sets: Vec<Vec<u64>> = seen.into_iter().collect();
        let order_of = |s: &Vec<u64>| -> usize {
            bits(s).map(|i| classes.sizes[i]).sum()
        };
        sets.sort_by(|a, b| order_of(a).cmp(&order_of(b)).then_with(|| a.cmp(b)));
        Ok(NormalLattice {
            classes,
            members,
            cw,
            comm,
            central,
            sets,
            group_order: n,
        })
    }

    /// Number of normal subgroups.
    pub fn count(&self) -> usize {
        self.sets.len()
    }

    /// Order of the idx-th normal subgroup.
    pub fn subgroup_order(&self, idx: usize) -> usize {
        bits(&self.sets[idx])
            .map(|i| self.classes.sizes[i])
            .sum()
    }

    /// |Q ∩ Z|: central classes are singletons, so this counts them.
    pub fn central_intersection(&self, idx: usize) -> usize {
        self.sets[idx]
            .iter()
            .zip(&self.central)
            .map(|(&s, &c)| (s & c).count_ones() as usize)
            .sum()
    }

    /// Whether the subgroup contains the whole center.
    pub fn contains_center(&self, idx: usize) -> bool {
        self.sets[idx]
            .iter()
            .zip(&self.central)
            .all(|(&s, &c)| c & !s == 0)
    }

    /// Whether the subgroup is abelian (all member classes commute).
    pub fn is_abelian(&self, idx: usize) -> bool {
        let s = &self.sets[idx];
        bits(s).all(|i| {
            let row = &self.comm[i * self.cw..(i + 1) * self.cw];
            s.iter().zip(row).all(|(&sv, &rv)| sv & !rv == 0)
        })
    }

    /// Size of the subgroup's own center {x ∈ Q : x commutes with Q}.
    pub fn own_center_order(&self, idx: usize) -> usize {
        let s = &self.sets[idx];
        bits(s)
            .filter(|&i| {
                let row = &self.comm[i * self.cw..(i + 1) * self.cw];
                s.iter().zip(row).all(|(&sv, &rv)| sv & !rv == 0)
            })
            .map(|i| self.classes.sizes[i])
            .sum()
    }

    /// Materialize the idx-th subgroup as an element set.
    pub fn element_set(&self, idx: usize) -> ElementSet {
        ElementSet::from_indices(
            self.group_order,
            bits(&self.sets[idx]).flat_map(|i| self.members[i].iter().copied()),
        )
    }

    /// Class representatives inside the idx-th subgroup (ascending).
    pub fn class_reps(&self, idx: usize) -> Vec<usize> {
        bits(&self.sets[idx])
            .map(|i| self.classes.reps[i])
            .collect()
    }
}

/// Iterator over set bit indices of one word.
struct WordBits {
    word: u64,
    base: usize,
}

impl Iterator for WordBits {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(self.base + b)
    }
}

/// Iterate set bit indices of a word-backed bitset.
fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| WordBits {
        word: w,
        base: wi * 64,
    })
}

/// All normal subgroups of `g` as element sets, ascending by order and
/// then by member words.
pub fn normal_subgroups<G: Group + ?Sized>(g: &G) -> Result<Vec<ElementSet>> {
    let lat = NormalLattice::build(g)?;
    let mut out: Vec<ElementSet> = (0..lat.count()).map(|i| lat.element_set(i)).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.words().cmp(b.words())));
    Ok(out)
}

/// Outcome of one structure-law clause on one normal subgroup.
#[derive(Debug, Clone)]
pub struct ClauseCheck {
    /// Stable clause identifier.
    pub clause: &'static str,
    /// Whether the clause's hypothesis was met (false ⇒ vacuously true).
    pub applicable: bool,
    /// Whether the conclusion held (true when not applicable).
    pub holds: bool,
    /// True when the center-equality conjunct was waived because the
    /// subgroup is abelian (its center is itself, so literal equality with
    /// the ambient center is impossible unless Q = Z).
    pub waived: bool,
    /// Human-readable account of what was checked.
    pub detail: String,
}

/// Clause identifiers used by the per-family laws.
pub const CLAUSE_INTERSECTION_FLOOR: &str = "central-intersection-floor";
pub const CLAUSE_CENTER_EQUALITY: &str = "center-containment-and-equality";
pub const CLAUSE_SMALL_IMAGE_ABELIAN: &str = "abelian-when-small-image";
pub const CLAUSE_Z8_CONTAINMENT: &str = "center-containment-at-z8";

struct LawContext {
    z_order: usize,
    /// For family A with θ of odd order k and m = nk: 2^{n(k−1)}.
    floor: usize,
    family: Family,
}

fn law_context(p: &SuzukiGroup) -> Result<LawContext> {
    let k = p.theta_order();
    if p.family() == Family::A && k % 2 == 0 {
        return Err(Error::Usage(
            "structure laws for family A require a twist of odd order".into(),
        ));
    }
    let m = p.m();
    let n = m / k;
    Ok(LawContext {
        z_order: p.field().q() as usize,
        floor: 1usize << (n * (k - 1)),
        family: p.family(),
    })
}

/// Evaluate the structure-law clauses on stats of a single normal subgroup.
fn evaluate_clauses(
    ctx: &LawContext,
    q_order: usize,
    zq_order: usize,
    contains_z: bool,
    abelian: bool,
    own_center: usize,
) -> Vec<ClauseCheck> {
    let image = q_order / zq_order; // |QZ/Z| = |Q / (Q ∩ Z)|
    let mut out = Vec::new();
    let center_eq = |applicable: bool| -> ClauseCheck {
        if !applicable {
            return ClauseCheck {
                clause: CLAUSE_CENTER_EQUALITY,
                applicable: false,
                holds: true,
                waived: false,
                detail: String::new(),
            };
        }
        if abelian {
            ClauseCheck {
                clause: CLAUSE_CENTER_EQUALITY,
                applicable: true,
                holds: contains_z,
                waived: true,
                detail: format!(
                    "|Q|={q_order}, |QZ/Z|={image}: Z ≤ Q {}; center-equality waived (Q abelian, Z(Q)=Q)",
                    if contains_z { "holds" } else { "FAILS" }
                ),
            }
        } else {
            let eq = own_center == ctx.z_order && contains_z;
            ClauseCheck {
                clause: CLAUSE_CENTER_EQUALITY,
                applicable: true,
                holds: contains_z && eq,
                waived: false,
                detail: format!(
                    "|Q|={q_order}, |QZ/Z|={image}: Z ≤ Q {}; |Z(Q)|={own_center} vs |Z(P)|={}",
                    if contains_z { "holds" } else { "FAILS" },
                    ctx.z_order
                ),
            }
        }
    };
    match ctx.family {
        Family::A => {
            out.push(ClauseCheck {
                clause: CLAUSE_INTERSECTION_FLOOR,
                applicable: image >= 2,
                holds: image < 2 || zq_order >= ctx.floor,
                waived: false,
                detail: format!(
                    "|Q|={q_order}, |QZ/Z|={image}: |Q ∩ Z| = {zq_order} (floor {})",
                    ctx.floor
                ),
            });
            out.push(center_eq(image >= 4));
            out.push(ClauseCheck {
                clause: CLAUSE_SMALL_IMAGE_ABELIAN,
                applicable: image <= 2,
                holds: image > 2 || abelian,
                waived: false,
                detail: format!("|Q|={q_order}, |QZ/Z|={image}: abelian = {abelian}"),
            });
            out.push(ClauseCheck {
                clause: CLAUSE_Z8_CONTAINMENT,
                applicable: ctx.z_order == 8 && image == 2,
                holds: !(ctx.z_order == 8 && image == 2) || contains_z,
                waived: false,
                detail: format!(
                    "|Q|={q_order}, |QZ/Z|={image}, |Z|={}: Z ≤ Q = {contains_z}",
                    ctx.z_order
                ),
            });
        }
        Family::B | Family::C | Family::D => {
            out.push(center_eq(image >= 2));
        }
    }
    out
}

/// Evaluate the structure laws on one normal subgroup of a twisted-family
/// group (element-level path for individual queries).
pub fn verify_normal_laws(p: &SuzukiGroup, q: &ElementSet) -> Result<Vec<ClauseCheck>> {
    let ctx = law_context(p)?;
    if !is_normal(p, q) {
        return Err(Error::Usage(
            "structure laws apply to normal subgroups only".into(),
        ));
    }
    let view = SubgroupView::new(p, q)?;
    let z = center(p);
    let zq = z.intersection(q);
    let contains_z = z.is_subset_of(q);
    let own = center(&view);
    let abelian = own.len() == view.order();
    Ok(evaluate_clauses(
        &ctx,
        q.len(),
        zq.len(),
        contains_z,
        abelian,
        own.len(),
    ))
}

/// Aggregate outcome of the structure laws over every normal subgroup.
#[derive(Debug, Clone, serde::Serialize)]
pub struct NormalLawsSummary {
    pub group: String,
    /// Total number of normal subgroups examined.
    pub normal_count: usize,
    /// (clause id, applicable count, passed count, waived count).
    pub clause_stats: Vec<(String, usize, usize, usize)>,
    /// Total number of failed clause instances.
    pub failed_count: usize,
    /// Detail strings of failed clause instances (capped).
    pub failures: Vec<String>,
    /// Number of subgroups where the center-equality conjunct was waived.
    pub abelian_waivers: usize,
}

impl NormalLawsSummary {
    pub fn all_hold(&self) -> bool {
        self.failed_count == 0
    }
}

const MAX_REPORTED_FAILURES: usize = 12;

/// Run the structure laws over the full normal-subgroup lattice.
pub fn verify_normal_laws_all(p: &SuzukiGroup) -> Result<NormalLawsSummary> {
    let ctx = law_context(p)?;
    let lat = NormalLattice::build(p)?;
    let mut stats: Vec<(String, usize, usize, usize)> = Vec::new();
    let mut failures = Vec::new();
    let mut failed_count = 0usize;
    let mut waived_subgroups = 0usize;
    for idx in 0..lat.count() {
        let q_order = lat.subgroup_order(idx);
        let zq = lat.central_intersection(idx);
        let contains_z = lat.contains_center(idx);
        let abelian = lat.is_abelian(idx);
        let own = lat.own_center_order(idx);
        let checks = evaluate_clauses(&ctx, q_order, zq, contains_z, abelian, own);
        let mut waived_here = false;
        for c in checks {
            let slot = match stats.iter_mut().find(|(id, ..)| *id == c.clause) {
                Some(s) => s,
                None => {
                    stats.push((c.clause.to_string(), 0, 0, 0));
                    stats.last_mut().unwrap()
                }
            };
            if c.applicable {
                slot.1 += 1;
                if c.holds {
                    slot.2 += 1;
                } else {
                    failed_count += 1;
                    if failures.len() < MAX_REPORTED_FAILURES {
                        failures.push(format!("[{}] {}", c.clause, c.detail));
                    }
                }
                if c.waived {
                    slot.3 += 1;
                    waived_here = true;
                }
            }
        }
        if waived_here {
            waived_subgroups += 1;
        }
    }
    Ok(NormalLawsSummary {
        group: p.spec_string(),
        normal_count: lat.count(),
        clause_stats: stats,
        failed_count,
        failures,
        abelian_waivers: waived_subgroups,
    })
}
