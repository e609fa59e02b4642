//! The four families of Suzuki 2-groups (Higman's classification).
//!
//! Each group is a central extension built from a binary field F = GF(2^m)
//! and a Frobenius twist θ(x) = x^(2^l):
//!
//! * family A: pairs (α,β), law
//!   (α₁,β₁)(α₂,β₂) = (α₁+α₂, β₁+β₂+α₁θ(α₂)); order q².
//! * families B, C, D: triples (α,β,γ) with γ picking up a biadditive
//!   cocycle in (α,β); order q³. Each family constrains its parameters and
//!   carries an extra field constant ε restricted by an admissibility
//!   condition (which is exactly what forces all involutions central).
//!
//! Elements are packed bitfields: the element index *is* the concatenation
//! of the coordinates, so the index space equals the group and no element
//! table is stored.

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::gf2m::{F2m, Fe};
use crate::group::{Group, MAX_GROUP_ORDER};

/// The four family labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    /// Families built from triples carry the ε constant.
    pub fn has_epsilon(self) -> bool {
        !matches!(self, Family::A)
    }
}

/// A constructed Suzuki 2-group.
#[derive(Debug, Clone)]
pub struct SuzukiGroup {
    family: Family,
    field: F2m,
    m: u32,
    l: u32,
    eps: Fe,
    /// Basis generators (α-part, β-part, and γ-part for triples).
    gens: Vec<usize>,
    /// Present when θ has even order (family A outside the classical
    /// odd-order setting); the group is constructed but may fail the
    /// Suzuki-group identities.
    warning: Option<String>,
}

/// All ε values admissible for the given family/field/twist, ascending.
///
/// The square of a triple (α, β, γ) lands in the γ coordinate, where it
/// equals the diagonal of the family's γ-form at (α, β). A choice of ε is
/// admissible exactly when that diagonal has no nonzero root — i.e. when
/// every involution of the resulting group is central. The scan below marks
/// every ε that acquires a root; each family's diagonal is affine in ε with
/// a coefficient that vanishes only when α = 0 or β = 0, and in those cases
/// the ε-free part is already nonzero, so only pairs with both coordinates
/// nonzero exclude anything. For families B and C the excluded set also has
/// one-parameter closed forms (ρ⁻¹+θ(ρ) and ρ⁻¹+ρθ(ρ²) respectively); the
/// unit tests pin that equivalence. ε = 0 is always excluded (take α = β
/// for family B, and the analogous diagonal pairs for C and D).
pub fn find_epsilons(field: &F2m, family: Family, l: u32) -> Result<Vec<Fe>> {
    if !family.has_epsilon() {
        return Err(Error::Usage(
            "family A does not carry an epsilon parameter".into(),
        ));
    }
    check_family_constraints(field, family, l)?;
    let m = field.m();
    let mut excluded = vec![false; field.q() as usize];
    for alpha in 1..field.q() {
        for beta in 1..field.q() {
            // Diagonal of the γ-form, split as `base + ε·coef`.
            let (base, coef) = match family {
                Family::B => (
                    field.mul(alpha, field.frob(l, alpha)) ^ field.mul(beta, field.frob(l, beta)),
                    field.mul(alpha, field.frob(l, beta)),
                ),
                Family::C => (
                    field.mul(alpha, field.frob(l, alpha)) ^ field.sq(beta),
                    field.mul(field.sqrt(alpha), field.frob(l, field.sq(beta))),
                ),
                Family::D => (
                    field.mul(alpha, field.frob(l, alpha))
                        ^ field.mul(beta, field.frob(2 * l % m, beta)),
                    field.mul(field.frob(3 * l % m, alpha), field.frob(l, beta)),
                ),
                Family::A => unreachable!(),
            };
            let root = field.mul(base, field.inv(coef).expect("coef nonzero"));
            excluded[root as usize] = true;
        }
    }
    Ok((0..field.q()).filter(|&e| !excluded[e as usize]).collect())
}

/// Family-specific θ constraints (everything except ε admissibility).
fn check_family_constraints(field: &F2m, family: Family, l: u32) -> Result<()> {
    let m = field.m();
    let theta_order = m as u64 / gcd(m as u64, l as u64 % m as u64);
    match family {
        Family::A => {
            if l % m == 0 {
                return Err(Error::Parameter(
                    "family A requires a nontrivial twist (l not divisible by m)".into(),
                ));
            }
        }
        Family::B => {
            if m < 2 {
                return Err(Error::Parameter("family B requires m >= 2".into()));
            }
        }
        Family::C => {
            if m < 3 || m % 2 == 0 {
                return Err(Error::Parameter("family C requires odd m >= 3".into()));
            }
            if (2 * l + 1) % m != 0 {
                return Err(Error::Parameter(format!(
                    "family C requires 2l+1 ≡ 0 (mod m); for m={m} that forces l={}",
                    (m - 1) / 2
                )));
            }
        }
        Family::D => {
            if m < 5 || m % 5 != 0 {
                return Err(Error::Parameter(
                    "family D requires m >= 5 divisible by 5".into(),
                ));
            }
            if theta_order != 5 {
                return Err(Error::Parameter(format!(
                    "family D requires a twist of order 5, got order {theta_order}"
                )));
            }
        }
    }
    Ok(())
}

impl SuzukiGroup {
    /// Construct a group, validating all parameter constraints. For
    /// families B/C/D, `epsilon = None` picks the smallest admissible ε;
    /// an explicit value must itself be admissible. Family C derives its
    /// twist, so `l` must be `None` or the forced value (m−1)/2.
    pub fn new(field: F2m, family: Family, l: Option<u32>, epsilon: Option<Fe>) -> Result<Self> {
        let m = field.m();
        let l = match (family, l) {
            (Family::C, None) => (m - 1) / 2,
            (Family::C, Some(l)) => {
                // validated below by check_family_constraints
                l
            }
            (_, Some(l)) => l,
            (f, None) => {
                return Err(Error::Parameter(format!(
                    "family {} requires an explicit twist index l",
                    f.letter()
                )))
            }
        };
        check_family_constraints(&field, family, l)?;
        let eps = if family.has_epsilon() {
            let valid = find_epsilons(&field, family, l)?;
            match epsilon {
                None => *valid.first().ok_or_else(|| {
                    Error::Parameter(format!(
                        "family {} over {} with l={l} admits no epsilon",
                        family.letter(),
                        field
                    ))
                })?,
                Some(e) => {
                    if !field.contains(e) {
                        return Err(Error::Parameter(format!(
                            "epsilon {e:#x} outside {field}"
                        )));
                    }
                    if !valid.contains(&e) {
                        return Err(Error::Parameter(format!(
                            "epsilon {e:#x} is inadmissible for family {} (excluded form has a witness)",
                            family.letter()
                        )));
                    }
                    e
                }
            }
        } else {
            if epsilon.is_some() {
                return Err(Error::Usage(
                    "family A does not take an epsilon parameter".into(),
                ));
            }
            0
        };
        Self::build(field, family, l, eps, true)
    }

    /// Construct with an arbitrary ε, bypassing the admissibility check.
    /// The result is always a group, but need not be a Suzuki 2-group
    /// (it may have noncentral involutions); useful as a negative control.
    pub fn with_any_epsilon(field: F2m, family: Family, l: u32, eps: Fe) -> Result<Self> {
        if !family.has_epsilon() {
            return Err(Error::Usage(
                "family A does not take an epsilon parameter".into(),
            ));
        }
        check_family_constraints(&field, family, l)?;
        if !field.contains(eps) {
            return Err(Error::Parameter(format!("epsilon {eps:#x} outside {field}")));
        }
        Self::build(field, family, l, eps, true)
    }

    fn build(field: F2m, family: Family, l: u32, eps: Fe, _checked: bool) -> Result<Self> {
        let m = field.m();
        let coords = if family.has_epsilon() { 3 } else { 2 };
        let bits = coords * m;
        if bits as usize >= usize::BITS as usize || (1usize << bits) > MAX_GROUP_ORDER {
            return Err(Error::Resource(format!(
                "group order 2^{bits} exceeds the cap 2^{}",
                MAX_GROUP_ORDER.trailing_zeros()
            )));
        }
        let theta_order = m as u64 / gcd(m as u64, l as u64 % m as u64);
        let warning = if family == Family::A && theta_order % 2 == 0 {
            Some(format!(
                "twist has even order {theta_order}; the classical family A setting \
                 assumes odd order and the Suzuki-group identities may fail"
            ))
        } else {
            None
        };
        let mut gens = Vec::new();
        for i in 0..m {
            let e = 1u32 << i;
            match family {
                Family::A => {
                    gens.push(((e as usize) << m) | 0);
                    gens.push(e as usize);
                }
                _ => {
                    gens.push((e as usize) << (2 * m));
                    gens.push((e as usize) << m);
                    gens.push(e as usize);
                }
            }
        }
        Ok(SuzukiGroup {
            family,
            field,
            m,
            l: l % m,
            eps,
            gens,
            warning,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }
    pub fn field(&self) -> &F2m {
        &self.field
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn twist(&self) -> u32 {
        self.l
    }
    pub fn epsilon(&self) -> Option<Fe> {
        self.family.has_epsilon().then_some(self.eps)
    }
    /// Construction warning (family A with an even-order twist).
    pub fn warning(&self) -> Option<&str> {
        self.warning.as_deref()
    }

    /// Multiplicative order of the twist θ as a field automorphism.
    pub fn theta_order(&self) -> u32 {
        (self.m as u64 / gcd(self.m as u64, self.l as u64)) as u32
    }

    /// θ(x) = x^(2^l).
    pub fn theta(&self, x: Fe) -> Fe {
        self.field.frob(self.l, x)
    }

    pub fn pack_pair(&self, a: Fe, b: Fe) -> usize {
        debug_assert!(self.family == Family::A);
        ((a as usize) << self.m) | b as usize
    }

    pub fn unpack_pair(&self, idx: usize) -> (Fe, Fe) {
        debug_assert!(self.family == Family::A);
        let mask = (1usize << self.m) - 1;
        (((idx >> self.m) & mask) as Fe, (idx & mask) as Fe)
    }

    pub fn pack_triple(&self, a: Fe, b: Fe, c: Fe) -> usize {
        debug_assert!(self.family != Family::A);
        let m = self.m;
        ((a as usize) << (2 * m)) | ((b as usize) << m) | c as usize
    }

    pub fn unpack_triple(&self, idx: usize) -> (Fe, Fe, Fe) {
        debug_assert!(self.family != Family::A);
        let m = self.m;
        let mask = (1usize << m) - 1;
        (
            ((idx >> (2 * m)) & mask) as Fe,
            ((idx >> m) & mask) as Fe,
            (idx & mask) as Fe,
        )
    }

    /// The γ-correction the family law adds to a product (the biadditive
    /// cocycle). For family A the β coordinate plays the γ role.
    fn cocycle(&self, a1: Fe, b1: Fe, a2: Fe, b2: Fe) -> Fe {
        let f = &self.field;
        let l = self.l;
        let m = self.m;
        match self.family {
            Family::A => f.mul(a1, f.frob(l, a2)),
            Family::B => {
                f.mul(a1, f.frob(l, a2))
                    ^ f.mul(self.eps, f.mul(a1, f.frob(l, b2)))
                    ^ f.mul(b1, f.frob(l, b2))
            }
            Family::C => {
                f.mul(a1, f.frob(l, a2))
                    ^ f.mul(self.eps, f.mul(f.sqrt(a1), f.frob(l, f.sq(b2))))
                    ^ f.mul(b1, b2)
            }
            Family::D => {
                f.mul(a1, f.frob(l, a2))
                    ^ f.mul(self.eps, f.mul(f.frob(3 * l % m, a1), f.frob(l, b2)))
                    ^ f.mul(b1, f.frob(2 * l % m, b2))
            }
        }
    }

    /// Indices of the predicted center: (0,β) for family A, (0,0,γ) for
    /// the triple families. In both packings these are exactly 0..q.
    pub fn predicted_center(&self) -> Vec<usize> {
        (0..self.field.q() as usize).collect()
    }

    /// Image of the additive homomorphism τ_α(x) = αθ(x) + xθ(α),
    /// sorted ascending (family A only; α ≠ 0). This is the set of β's
    /// reachable as commutators [(α,·),(x,0)].
    pub fn tau_image(&self, alpha: Fe) -> Result<Vec<Fe>> {
        if self.family != Family::A {
            return Err(Error::Usage("τ_α is defined for family A only".into()));
        }
        if alpha == 0 {
            return Err(Error::Domain("τ_α requires α ≠ 0".into()));
        }
        let f = &self.field;
        let ta = self.theta(alpha);
        let mut img: Vec<Fe> = f
            .elements()
            .map(|x| f.mul(alpha, self.theta(x)) ^ f.mul(x, ta))
            .collect();
        img.sort_unstable();
        img.dedup();
        Ok(img)
    }

    /// Setwise product of two τ-images (the span check): the set
    /// {u + v : u ∈ Im τ_{α₁}, v ∈ Im τ_{α₂}}, sorted.
    pub fn tau_image_product(&self, alpha1: Fe, alpha2: Fe) -> Result<Vec<Fe>> {
        let i1 = self.tau_image(alpha1)?;
        let i2 = self.tau_image(alpha2)?;
        let mut out: Vec<Fe> = i1
            .iter()
            .flat_map(|&u| i2.iter().map(move |&v| u ^ v))
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Human-readable element form: "(0xa,0xb)" or "(0xa,0xb,0xc)".
    pub fn format_element(&self, idx: usize) -> String {
        if self.family == Family::A {
            let (a, b) = self.unpack_pair(idx);
            format!("({a:#x},{b:#x})")
        } else {
            let (a, b, c) = self.unpack_triple(idx);
            format!("({a:#x},{b:#x},{c:#x})")
        }
    }

    /// Canonical parameter string, e.g. "A(m=3,l=1)" or "B(m=2,l=1,eps=0x1)".
    pub fn spec_string(&self) -> String {
        match self.family {
            Family::A => format!("A(m={},l={})", self.m, self.l),
            Family::C => format!("C(m={},eps={:#x})", self.m, self.eps),
            f => format!("{}(m={},l={},eps={:#x})", f.letter(), self.m, self.l, self.eps),
        }
    }
}

impl Group for SuzukiGroup {
    fn order(&self) -> usize {
        let coords = if self.family.has_epsilon() { 3 } else { 2 };
        1usize << (coords * self.m)
    }

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        if self.family == Family::A {
            let (a1, b1) = self.unpack_pair(x);
            let (a2, b2) = self.unpack_pair(y);
            self.pack_pair(a1 ^ a2, b1 ^ b2 ^ self.cocycle(a1, 0, a2, 0))
        } else {
            let (a1, b1, c1) = self.unpack_triple(x);
            let (a2, b2, c2) = self.unpack_triple(y);
            self.pack_triple(a1 ^ a2, b1 ^ b2, c1 ^ c2 ^ self.cocycle(a1, b1, a2, b2))
        }
    }

    fn inv(&self, x: usize) -> usize {
        // with a biadditive cocycle c, (u,γ)⁻¹ = (u, γ + c(u,u))
        if self.family == Family::A {
            let (a, b) = self.unpack_pair(x);
            self.pack_pair(a, b ^ self.cocycle(a, 0, a, 0))
        } else {
            let (a, b, c) = self.unpack_triple(x);
            self.pack_triple(a, b, c ^ self.cocycle(a, b, a, b))
        }
    }

    fn generators(&self) -> Vec<usize> {
        self.gens.clone()
    }

    fn element_key(&self, a: usize) -> u64 {
        a as u64
    }
}
