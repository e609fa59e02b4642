//! Named verification suites: each maps a mathematical claim set onto the
//! constructive machinery and emits a fixed-schema report with one verdict
//! per claim.

use crate::arith::v2;
use crate::autos::{
    close_maps, field_map, singer_map, verify_involution_transitivity, GroupMap, SemidirectGroup,
};
use crate::chartab::{
    character_degrees, check_height_prediction, height_profile, k_bound_check, predicted_heights,
    DegreeTable, Verdict,
};
use crate::error::{Error, Result};
use crate::gf2m::F2m;
use crate::group::{
    center, derived_subgroup, exponent, frattini_2group, involutions, omega1, ElementSet, Group,
};
use crate::iso::{automorphisms, brute_force_isomorphic};
use crate::normal::verify_normal_laws_all;
use crate::report::Report;
use crate::simple::{build_su3, build_sz, frobenius_map, ti_check, AmbientGroup};
use crate::spec::{build_spec, BuiltGroup};
use crate::suzuki::{Family, SuzukiGroup};

/// Run a named suite on a group spec. `group` is required by every suite;
/// for `cor42` it is the family letter "A" or "B".
pub fn run_suite(suite: &str, group: Option<&str>, poly: Option<u32>) -> Result<Report> {
    let need_group = || {
        group.ok_or_else(|| Error::Usage(format!("suite {suite} requires --group <spec>")))
    };
    match suite {
        "higman" => suite_higman(need_group()?, poly),
        "lemma22" => suite_lemma22(need_group()?, poly),
        "aut21" => suite_aut21(need_group()?, poly),
        "suzuki-property" => suite_suzuki_property(need_group()?, poly),
        "cor42" => suite_cor42(group.unwrap_or("A")),
        "heights" => suite_heights(need_group()?, poly),
        "ti" => suite_ti(need_group()?, poly),
        "identify" => suite_identify(need_group()?, poly),
        other => Err(Error::Usage(format!(
            "unknown suite {other:?}; available: higman, lemma22, aut21, suzuki-property, \
             cor42, heights, ti, identify"
        ))),
    }
}

fn require_family<'a>(built: &'a BuiltGroup, suite: &str) -> Result<&'a SuzukiGroup> {
    match built {
        BuiltGroup::Suzuki(g) => Ok(g),
        _ => Err(Error::Usage(format!(
            "suite {suite} applies to the nilpotent family groups (A/B/C/D)"
        ))),
    }
}

fn require_ambient<'a>(built: &'a BuiltGroup, suite: &str) -> Result<&'a AmbientGroup> {
    built.ambient().ok_or_else(|| {
        Error::Usage(format!("suite {suite} applies to sz(8) or su3(4) only"))
    })
}

fn set_string(set: &ElementSet, cap: usize) -> String {
    let v: Vec<String> = set.iter().take(cap).map(|x| x.to_string()).collect();
    if set.len() > cap {
        format!("{{{}, …}} ({} elements)", v.join(", "), set.len())
    } else {
        format!("{{{}}} ({} elements)", v.join(", "), set.len())
    }
}

// ---------------------------------------------------------------------------
// higman: the defining identities of the nilpotent families
// ---------------------------------------------------------------------------

fn suite_higman(spec: &str, poly: Option<u32>) -> Result<Report> {
    let built = build_spec(spec, poly)?;
    let g = require_family(&built, "higman")?;
    let mut r = Report::new("higman", &built.label(), built.field_spec());
    let q = g.field().q() as usize;
    let n = g.order();

    r.push_bool(
        "group-order",
        "group order is q² for pairs, q³ for triples",
        n == q * q || n == q * q * q,
        format!("|P| = {n}, q = {q}"),
    );
    let e = exponent(g);
    r.push_bool("exponent-four", "group exponent is 4", e == 4, format!("exponent = {e}"));

    let z = center(g);
    r.push_bool(
        "center-order",
        "|Z(P)| = q",
        z.len() == q,
        format!("|Z(P)| = {}", z.len()),
    );
    let om = omega1(g);
    r.push_bool(
        "omega1-equals-center",
        "the involutions generate exactly the center",
        om == z,
        format!("|Ω₁(P)| = {}, |Z(P)| = {}", om.len(), z.len()),
    );
    let de = derived_subgroup(g);
    r.push_bool(
        "derived-equals-center",
        "[P,P] = Z(P)",
        de == z,
        format!("|[P,P]| = {}", de.len()),
    );
    let fr = frattini_2group(g);
    r.push_bool(
        "frattini-equals-center",
        "Φ(P) = Z(P)",
        fr == z,
        format!("|Φ(P)| = {}", fr.len()),
    );
    let predicted = ElementSet::from_indices(n, g.predicted_center());
    r.push_bool(
        "center-is-coordinate-line",
        "Z(P) is exactly the packed last-coordinate line",
        z == predicted,
        set_string(&z, 4),
    );
    Ok(r)
}

// ---------------------------------------------------------------------------
// lemma22: normal-subgroup structure laws plus τ-image facts
// ---------------------------------------------------------------------------

fn suite_lemma22(spec: &str, poly: Option<u32>) -> Result<Report> {
    let built = build_spec(spec, poly)?;
    let g = require_family(&built, "lemma22")?;
    let mut r = Report::new("lemma22", &built.label(), built.field_spec());

    let summary = verify_normal_laws_all(g)?;
    r.push(
        "normal-subgroup-count",
        "the full normal-subgroup lattice was enumerated",
        Verdict::Pass,
        format!("{} normal subgroups", summary.normal_count),
    );
    for (clause, applicable, passed, waived) in &summary.clause_stats {
        let mut detail = format!(
            "{passed}/{applicable} applicable subgroups satisfy the clause ({waived} \
             abelian waivers)"
        );
        if passed < applicable {
            let examples: Vec<&String> = summary
                .failures
                .iter()
                .filter(|f| f.starts_with(&format!("[{clause}]")))
                .take(2)
                .collect();
            for e in examples {
                detail.push_str("; ");
                detail.push_str(e);
            }
        }
        r.push_bool(
            &format!("clause-{clause}"),
            "structure law holds for every applicable normal subgroup",
            passed == applicable,
            detail,
        );
    }

    if g.family() == Family::A {
        let f = g.field();
        let k = g.theta_order();
        let nn = g.m() / k;
        let expected = 1usize << (nn * (k - 1));
        let mut bad_sizes = Vec::new();
        for alpha in 1..f.q() {
            let img = g.tau_image(alpha)?;
            if img.len() != expected {
                bad_sizes.push(format!("α={alpha:#x}: |Im τ| = {}", img.len()));
            }
        }
        r.push_bool(
            "tau-image-size",
            "every commutator image Im τ_α has order 2^(n(k−1))",
            bad_sizes.is_empty(),
            if bad_sizes.is_empty() {
                format!("all {} nonzero α give |Im τ_α| = {expected}", f.q() - 1)
            } else {
                format!("expected {expected}; deviations: {}", bad_sizes.join(", "))
            },
        );

        let mut failing_pairs = 0usize;
        let mut first_fail = String::new();
        let mut total_pairs = 0usize;
        for a1 in 1..f.q() {
            for a2 in a1 + 1..f.q() {
                total_pairs += 1;
                let prod = g.tau_image_product(a1, a2)?;
                if prod.len() != f.q() as usize {
                    if failing_pairs == 0 {
                        first_fail = format!(
                            " (first: α₁={a1:#x}, α₂={a2:#x} spans only {} of {})",
                            prod.len(),
                            f.q()
                        );
                    }
                    failing_pairs += 1;
                }
            }
        }
        r.push_bool(
            "tau-products-span",
            "for distinct nonzero α's the product of τ-images is the whole center",
            failing_pairs == 0,
            format!("{failing_pairs} of {total_pairs} unordered pairs fail to span{first_fail}"),
        );
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// aut21: automorphism facts for the order-64 pair group
// ---------------------------------------------------------------------------

fn suite_aut21(spec: &str, poly: Option<u32>) -> Result<Report> {
    let built = build_spec(spec, poly)?;
    let g = require_family(&built, "aut21")?;
    if g.family() != Family::A || g.m() != 3 {
        return Err(Error::Usage(
            "the automorphism-count suite applies to the order-64 pair family (m=3)".into(),
        ));
    }
    let mut r = Report::new("aut21", &built.label(), built.field_spec());
    let f = *g.field();

    let auts = automorphisms(g)?;
    let count = auts.len();
    let two_part = 1usize << v2(count as u64);
    let odd_part = count / two_part;
    r.push_bool(
        "aut-odd-part-21",
        "the full automorphism group has odd part exactly 21",
        odd_part == 21,
        format!("|Aut(P)| = {count} = 2^{} · {odd_part}", v2(count as u64)),
    );

    let sm = singer_map(g, f.generator())?;
    let fm = field_map(g, 1)?;
    let closed = close_maps(g.order(), &[sm.clone(), fm.clone()])?;
    let nonabelian = closed
        .iter()
        .any(|a| closed.iter().any(|b| a.compose(b) != b.compose(a)));
    r.push_bool(
        "odd-subgroup-c7-c3",
        "the diagonal and field maps generate a nonabelian group of order 21 (≅ C₇⋊C₃)",
        closed.len() == 21 && nonabelian && sm.order() == 7 && fm.order() == 3,
        format!(
            "closure has {} maps; diagonal map order {}, field map order {}; nonabelian = \
             {nonabelian}",
            closed.len(),
            sm.order(),
            fm.order()
        ),
    );

    let fm_inv = fm.inverse();
    let mut relation_fails = 0usize;
    for xi in 1..f.q() {
        let lhs = fm.compose(&singer_map(g, xi)?).compose(&fm_inv);
        let rhs = singer_map(g, f.sq(xi))?;
        if lhs != rhs {
            relation_fails += 1;
        }
    }
    r.push_bool(
        "singer-field-relation",
        "conjugating the diagonal map by the field map squares its parameter",
        relation_fails == 0,
        format!(
            "field∘diag(ξ)∘field⁻¹ = diag(ξ²) verified for all {} nonzero ξ ({relation_fails} \
             failures)",
            f.q() - 1
        ),
    );

    let z = center(g);
    let mut unfaithful = 0usize;
    let mut odd_count = 0usize;
    for a in &auts {
        let gm = GroupMap::from_search_result(a.clone());
        let o = gm.order();
        if o % 2 == 1 && o > 1 {
            odd_count += 1;
            if z.iter().all(|zi| a[zi] == zi) {
                unfaithful += 1;
            }
        }
    }
    r.push_bool(
        "odd-action-faithful-on-center",
        "no nontrivial odd-order automorphism fixes the center pointwise",
        unfaithful == 0,
        format!("{odd_count} odd-order automorphisms, {unfaithful} fix Z(P) pointwise"),
    );
    Ok(r)
}

// ---------------------------------------------------------------------------
// suzuki-property: transitivity on involutions
// ---------------------------------------------------------------------------

fn suite_suzuki_property(spec: &str, poly: Option<u32>) -> Result<Report> {
    let built = build_spec(spec, poly)?;
    let g = require_family(&built, "suzuki-property")?;
    let mut r = Report::new("suzuki-property", &built.label(), built.field_spec());
    let q = g.field().q() as usize;

    let invs = involutions(g);
    r.push_bool(
        "involution-count",
        "the group has exactly q−1 involutions",
        invs.len() == q - 1,
        format!("{} involutions, q−1 = {}", invs.len(), q - 1),
    );
    let z = center(g);
    let noncentral = invs.iter().filter(|&&x| !z.contains(x)).count();
    r.push_bool(
        "involutions-central",
        "every involution is central",
        noncentral == 0,
        format!("{noncentral} noncentral involutions"),
    );
    let rep = verify_involution_transitivity(g)?;
    r.push_bool(
        "transitive-involution-action",
        "the automorphism group permutes the involutions transitively",
        rep.transitive,
        format!(
            "orbit sizes {:?} via {:?}",
            rep.orbit_sizes, rep.method
        ),
    );
    Ok(r)
}

// ---------------------------------------------------------------------------
// heights: character height supports vs the family prediction
// ---------------------------------------------------------------------------

/// Dixon-table claims shared by every heights path; returns the table.
fn degree_table_claims(r: &mut Report, g: &dyn Group) -> Result<DegreeTable> {
    let table = character_degrees(g)?;
    let sum: u64 = table.degrees.iter().map(|d| d * d).sum();
    r.push_bool(
        "degree-square-sum",
        "the squared degrees sum to the group order",
        sum == table.group_order,
        format!(
            "Σd² = {sum}, |G| = {}, {} classes, modulus {}",
            table.group_order,
            table.degrees.len(),
            table.prime
        ),
    );
    r.push_bool(
        "column-orthogonality",
        "the modular column orthogonality relations hold for all class pairs",
        table.column_orthogonality_holds(),
        format!("{}×{} table", table.degrees.len(), table.degrees.len()),
    );
    Ok(table)
}

fn push_height_check(r: &mut Report, base: &SuzukiGroup, table: &DegreeTable, exact: bool) -> Result<()> {
    let profile = height_profile(table, base.order() as u64)?;
    let check = check_height_prediction(base, &profile, exact);
    r.push(
        "height-support",
        if exact {
            "the set of character heights equals the family prediction"
        } else {
            "the set of character heights is contained in the family prediction"
        },
        check.verdict,
        format!(
            "observed {:?}, predicted {:?} for {}; degree multiset {:?}",
            check.observed,
            check.predicted,
            base.spec_string(),
            table.degree_multiset()
        ),
    );
    Ok(())
}

/// The order-64 identification candidates, in stable order.
fn order64_candidates() -> Result<Vec<SuzukiGroup>> {
    let f3 = F2m::with_default_poly(3)?;
    let f2 = F2m::with_default_poly(2)?;
    Ok(vec![
        SuzukiGroup::new(f3, Family::A, Some(1), None)?,
        SuzukiGroup::new(f3, Family::A, Some(2), None)?,
        SuzukiGroup::new(f2, Family::B, Some(0), Some(2))?,
        SuzukiGroup::new(f2, Family::B, Some(0), Some(3))?,
        SuzukiGroup::new(f2, Family::B, Some(1), Some(1))?,
        SuzukiGroup::new(f2, Family::B, Some(1), Some(2))?,
        SuzukiGroup::new(f2, Family::B, Some(1), Some(3))?,
    ])
}

/// First catalog candidate isomorphic to the order-64 group `g`.
fn identify_order64(g: &dyn Group) -> Result<Option<SuzukiGroup>> {
    for cand in order64_candidates()? {
        if brute_force_isomorphic(g, &cand)?.is_some() {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

/// Heights treatment for an ambient simple group (or its odd extension):
/// defect-zero characters split off; the remaining heights must lie in the
/// prediction for the identified Sylow family.
fn ambient_height_claims(
    r: &mut Report,
    big: &dyn Group,
    sylow_rep: &SuzukiGroup,
    expected_two_parts: &[u64],
) -> Result<()> {
    let table = degree_table_claims(r, big)?;
    let two_parts: Vec<u64> = table.two_part_multiset().iter().map(|&(p, _)| p).collect();
    r.push_bool(
        "degree-two-part-set",
        "the set of 2-parts of the irreducible degrees matches the expected set",
        two_parts == expected_two_parts,
        format!("2-part multiset {:?}", table.two_part_multiset()),
    );
    let defect = v2(big.order() as u64);
    let profile = height_profile(&table, 1u64 << defect)?;
    let principal: Vec<u32> = profile
        .support()
        .into_iter()
        .filter(|&h| h < defect)
        .collect();
    let predicted = predicted_heights(sylow_rep.family(), sylow_rep.m(), sylow_rep.theta_order());
    r.push_bool(
        "principal-height-support",
        "heights of the non-defect-zero characters lie in the Sylow family prediction",
        principal.iter().all(|h| predicted.contains(h)),
        format!(
            "non-defect-zero heights {:?} ⊆ predicted {:?} (Sylow ≅ {}); defect-zero degree \
             count {}",
            principal,
            predicted,
            sylow_rep.spec_string(),
            profile.counts.get(&defect).copied().unwrap_or(0)
        ),
    );
    Ok(())
}

fn suite_heights(spec: &str, poly: Option<u32>) -> Result<Report> {
    let built = build_spec(spec, poly)?;
    let mut r = Report::new("heights", &built.label(), built.field_spec());
    match &built {
        BuiltGroup::Suzuki(g) => {
            let table = degree_table_claims(&mut r, g)?;
            push_height_check(&mut r, g, &table, true)?;
        }
        BuiltGroup::SdpSuzuki(s) => {
            if s.complement_order() % 2 == 0 {
                return Err(Error::Usage(
                    "height predictions cover odd-order extensions only".into(),
                ));
            }
            let table = degree_table_claims(&mut r, s)?;
            push_height_check(&mut r, s.base(), &table, false)?;
        }
        BuiltGroup::SdpSylow(s) => {
            if s.complement_order() % 2 == 0 {
                return Err(Error::Usage(
                    "height predictions cover odd-order extensions only".into(),
                ));
            }
            let rep = identify_order64(s.base())?.ok_or_else(|| {
                Error::Internal("ambient Sylow matches no catalog family".into())
            })?;
            let table = degree_table_claims(&mut r, s)?;
            push_height_check(&mut r, &rep, &table, false)?;
        }
        BuiltGroup::Ambient(a) => {
            let view = a.sylow_view()?;
            let rep = identify_order64(&view)?.ok_or_else(|| {
                Error::Internal("ambient Sylow matches no catalog family".into())
            })?;
            let expected: &[u64] = if a.group.tag() == "sz(8)" {
                &[1, 2, 64]
            } else {
                &[1, 4, 64]
            };
            ambient_height_claims(&mut r, &a.group, &rep, expected)?;
        }
        BuiltGroup::SdpAmbient(s) => {
            if s.complement_order() % 2 == 0 {
                return Err(Error::Usage(
                    "height predictions cover odd-order extensions only".into(),
                ));
            }
            let amb = match s.base().tag() {
                "sz(8)" => build_sz(8)?,
                _ => build_su3(4)?,
            };
            let view = amb.sylow_view()?;
            let rep = identify_order64(&view)?.ok_or_else(|| {
                Error::Internal("ambient Sylow matches no catalog family".into())
            })?;
            let table = degree_table_claims(&mut r, s)?;
            let defect = v2(s.order() as u64);
            let profile = height_profile(&table, 1u64 << defect)?;
            let principal: Vec<u32> = profile
                .support()
                .into_iter()
                .filter(|&h| h < defect)
                .collect();
            let predicted = predicted_heights(rep.family(), rep.m(), rep.theta_order());
            r.push_bool(
                "principal-height-support",
                "heights of the non-defect-zero characters lie in the Sylow family prediction",
                principal.iter().all(|h| predicted.contains(h)),
                format!(
                    "non-defect-zero heights {:?} ⊆ predicted {:?} (Sylow ≅ {})",
                    principal,
                    predicted,
                    rep.spec_string()
                ),
            );
        }
        BuiltGroup::Field(_) => {
            return Err(Error::Usage("heights suite requires a group spec".into()))
        }
    }
    Ok(r)
}

/// Flat character-table/height summary: the machine-readable shape emitted
/// by the table-oriented commands (the suite report carries the same facts
/// as claims).
#[derive(Debug, Clone, serde::Serialize)]
pub struct HeightsComputation {
    pub group: String,
    pub prime: u64,
    /// (degree, multiplicity) pairs, ascending by degree.
    pub degrees: Vec<(u64, usize)>,
    /// Height h ↦ number of characters at that height.
    pub heights: std::collections::BTreeMap<u32, usize>,
    /// Predicted height support of the relevant family group.
    pub prediction: Vec<u32>,
    pub verdict: Verdict,
}

/// Compute the degree table and height profile of any group spec, together
/// with the applicable family prediction and its verdict: exact-equality
/// for a bare family group, containment for odd extensions, and containment
/// of the sub-defect heights for the ambient groups (whose defect-zero
/// characters fall outside every family prediction).
pub fn heights_computation(spec: &str, poly: Option<u32>) -> Result<HeightsComputation> {
    let built = build_spec(spec, poly)?;
    let odd_guard = |c: usize| -> Result<()> {
        if c % 2 == 0 {
            Err(Error::Usage(
                "height predictions cover odd-order extensions only".into(),
            ))
        } else {
            Ok(())
        }
    };
    let (table, rep, exact, ambient) = match &built {
        BuiltGroup::Suzuki(g) => (character_degrees(g)?, g.clone(), true, false),
        BuiltGroup::SdpSuzuki(s) => {
            odd_guard(s.complement_order())?;
            (character_degrees(s)?, s.base().clone(), false, false)
        }
        BuiltGroup::SdpSylow(s) => {
            odd_guard(s.complement_order())?;
            let rep = identify_order64(s.base())?.ok_or_else(|| {
                Error::Internal("ambient Sylow matches no catalog family".into())
            })?;
            (character_degrees(s)?, rep, false, false)
        }
        BuiltGroup::Ambient(a) => {
            let rep = identify_order64(&a.sylow_view()?)?.ok_or_else(|| {
                Error::Internal("ambient Sylow matches no catalog family".into())
            })?;
            (character_degrees(&a.group)?, rep, false, true)
        }
        BuiltGroup::SdpAmbient(s) => {
            odd_guard(s.complement_order())?;
            let amb = match s.base().tag() {
                "sz(8)" => build_sz(8)?,
                _ => build_su3(4)?,
            };
            let rep = identify_order64(&amb.sylow_view()?)?.ok_or_else(|| {
                Error::Internal("ambient Sylow matches no catalog family".into())
            })?;
            (character_degrees(s)?, rep, false, true)
        }
        BuiltGroup::Field(_) => {
            return Err(Error::Usage("character tables require a group spec".into()))
        }
    };
    let prediction = predicted_heights(rep.family(), rep.m(), rep.theta_order());
    let verdict = if ambient {
        let defect = v2(table.group_order);
        let profile = height_profile(&table, 1u64 << defect)?;
        let ok = profile
            .support()
            .into_iter()
            .filter(|&h| h < defect)
            .all(|h| prediction.contains(&h));
        if ok { Verdict::Pass } else { Verdict::Fail }
    } else {
        let sylow_order = rep.order() as u64;
        let profile = height_profile(&table, sylow_order)?;
        check_height_prediction(&rep, &profile, exact).verdict
    };
    let profile = height_profile(&table, 1u64 << v2(table.group_order))?;
    Ok(HeightsComputation {
        group: built.label(),
        prime: table.prime,
        degrees: table.degree_multiset(),
        heights: profile.counts.clone(),
        prediction,
        verdict,
    })
}

// ---------------------------------------------------------------------------
// cor42: the order-64 ambient lists
// ---------------------------------------------------------------------------

fn cor42_push_k_bound(r: &mut Report, id: &str, label: &str, g: &dyn Group) {
    let kb = k_bound_check(g, label);
    r.push_bool(
        &format!("{id}-k-bound"),
        "the class count is at most the Sylow 2-subgroup order",
        kb.holds,
        format!(
            "{label}: k(G) = {} ≤ {} = |P| (|G| = {})",
            kb.class_count,
            kb.sylow_order,
            g.order()
        ),
    );
}

fn cor42_family_entry(r: &mut Report, id: &str, label: &str, g: &SuzukiGroup) -> Result<()> {
    cor42_push_k_bound(r, id, label, g);
    let table = character_degrees(g)?;
    let profile = height_profile(&table, g.order() as u64)?;
    let check = check_height_prediction(g, &profile, true);
    r.push(
        &format!("{id}-heights"),
        "height support equals the family prediction",
        check.verdict,
        format!(
            "{label}: observed {:?}, predicted {:?}",
            check.observed, check.predicted
        ),
    );
    Ok(())
}

fn cor42_extension_entry(
    r: &mut Report,
    id: &str,
    label: &str,
    sdp: &SemidirectGroup<SuzukiGroup>,
) -> Result<()> {
    cor42_push_k_bound(r, id, label, sdp);
    let table = character_degrees(sdp)?;
    let profile = height_profile(&table, sdp.base().order() as u64)?;
    let check = check_height_prediction(sdp.base(), &profile, false);
    r.push(
        &format!("{id}-heights"),
        "height support is contained in the family prediction",
        check.verdict,
        format!(
            "{label}: observed {:?} ⊆ predicted {:?}",
            check.observed, check.predicted
        ),
    );
    Ok(())
}

fn cor42_ambient_entry(
    r: &mut Report,
    id: &str,
    label: &str,
    g: &dyn Group,
    sylow_rep: &SuzukiGroup,
) -> Result<()> {
    cor42_push_k_bound(r, id, label, g);
    let table = character_degrees(g)?;
    let defect = v2(g.order() as u64);
    let profile = height_profile(&table, 1u64 << defect)?;
    let principal: Vec<u32> = profile
        .support()
        .into_iter()
        .filter(|&h| h < defect)
        .collect();
    let predicted = predicted_heights(sylow_rep.family(), sylow_rep.m(), sylow_rep.theta_order());
    r.push_bool(
        &format!("{id}-heights"),
        "non-defect-zero heights lie in the Sylow family prediction",
        principal.iter().all(|h| predicted.contains(h)),
        format!(
            "{label}: non-defect-zero heights {:?} ⊆ predicted {:?} (Sylow ≅ {})",
            principal,
            predicted,
            sylow_rep.spec_string()
        ),
    );
    Ok(())
}

fn suite_cor42(which: &str) -> Result<Report> {
    match which {
        "A" | "a" => {
            let mut r = Report::new("cor42", "type-A order-64 list", Some("gf(m=3,poly=0xb)".into()));
            let f = F2m::with_default_poly(3)?;
            let p = || SuzukiGroup::new(f, Family::A, Some(1), None);
            let base = p()?;
            let sm = singer_map(&base, f.generator())?;
            let fm = field_map(&base, 1)?;

            cor42_family_entry(&mut r, "a1", "P = A(m=3,l=1)", &base)?;
            let e2 = SemidirectGroup::new(p()?, std::slice::from_ref(&sm))?;
            cor42_extension_entry(&mut r, "a2", "P⋊C₇ (diagonal action)", &e2)?;
            let e3 = SemidirectGroup::new(p()?, std::slice::from_ref(&fm))?;
            cor42_extension_entry(&mut r, "a3", "P⋊C₃ (field action)", &e3)?;
            let e4 = SemidirectGroup::new(p()?, &[sm.clone(), fm.clone()])?;
            cor42_extension_entry(&mut r, "a4", "P⋊(C₇⋊C₃)", &e4)?;

            let sz = build_sz(8)?;
            let view = sz.sylow_view()?;
            let rep = identify_order64(&view)?
                .ok_or_else(|| Error::Internal("Sylow matches no catalog family".into()))?;
            cor42_ambient_entry(&mut r, "a5", "sz(8)", &sz.group, &rep)?;
            let fr = frobenius_map(&sz.group, 1)?;
            let aut = SemidirectGroup::new(sz.group, std::slice::from_ref(&fr))?;
            cor42_ambient_entry(&mut r, "a6", "sz(8) extended by the field automorphism", &aut, &rep)?;

            r.push_bool(
                "list-length",
                "the type-A list has six entries",
                true,
                "P, P⋊C₇, P⋊C₃, P⋊(C₇⋊C₃), sz(8), sz(8)⋊C₃".into(),
            );
            Ok(r)
        }
        "B" | "b" => {
            let mut r = Report::new("cor42", "type-B order-64 list", Some("gf(m=2,poly=0x7)".into()));
            let f = F2m::with_default_poly(2)?;
            // The untwisted triple group is the one realized as the ambient
            // Sylow subgroup at this order.
            let p = || SuzukiGroup::new(f, Family::B, Some(0), None);
            let base = p()?;
            let sm = singer_map(&base, f.generator())?;

            cor42_family_entry(&mut r, "b1", &format!("P = {}", base.spec_string()), &base)?;
            let e2 = SemidirectGroup::new(p()?, std::slice::from_ref(&sm))?;
            cor42_extension_entry(&mut r, "b2", "P⋊C₃ (diagonal action)", &e2)?;

            let su = build_su3(4)?;
            let view = su.sylow_view()?;
            let rep = identify_order64(&view)?
                .ok_or_else(|| Error::Internal("Sylow matches no catalog family".into()))?;
            cor42_ambient_entry(&mut r, "b3", "su3(4)", &su.group, &rep)?;

            r.push_bool(
                "list-length",
                "the type-B list has three entries",
                true,
                "P, P⋊C₃, su3(4)".into(),
            );
            Ok(r)
        }
        other => Err(Error::Usage(format!(
            "cor42 takes the family letter A or B, got {other:?}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// ti: trivial intersection of the ambient Sylow subgroups
// ---------------------------------------------------------------------------

fn suite_ti(spec: &str, poly: Option<u32>) -> Result<Report> {
    let built = build_spec(spec, poly)?;
    let amb = require_ambient(&built, "ti")?;
    let mut r = Report::new("ti", &built.label(), built.field_spec());
    let rep = ti_check(amb)?;
    r.push_bool(
        "conjugate-count",
        "the Sylow 2-subgroup has exactly 65 conjugates",
        rep.conjugates == 65,
        format!("{} conjugates of order {}", rep.conjugates, rep.sylow_order),
    );
    r.push_bool(
        "pairwise-trivial",
        "every pair of distinct conjugates intersects in the identity alone",
        rep.ti,
        format!("{} pairs checked", rep.conjugates * (rep.conjugates - 1) / 2),
    );
    r.push_bool(
        "orbit-stabilizer",
        "conjugate count times normalizer order equals the group order",
        rep.orbit_stabilizer_consistent,
        format!(
            "{} × {} = {}",
            rep.conjugates,
            rep.normalizer_order,
            rep.conjugates * rep.normalizer_order
        ),
    );
    Ok(r)
}

// ---------------------------------------------------------------------------
// identify: ambient Sylow vs the order-64 catalog
// ---------------------------------------------------------------------------

fn suite_identify(spec: &str, poly: Option<u32>) -> Result<Report> {
    let built = build_spec(spec, poly)?;
    let amb = require_ambient(&built, "identify")?;
    let mut r = Report::new("identify", &built.label(), built.field_spec());
    let view = amb.sylow_view()?;

    let mut matched: Vec<String> = Vec::new();
    let mut absent: Vec<String> = Vec::new();
    let mut witness = String::new();
    for cand in order64_candidates()? {
        match brute_force_isomorphic(&view, &cand)? {
            Some(map) => {
                if witness.is_empty() {
                    let head: Vec<String> = map.iter().take(6).map(|x| x.to_string()).collect();
                    witness = format!(
                        " (witness onto {}: images of elements 0..6 are [{}], all 64 verified)",
                        cand.spec_string(),
                        head.join(", ")
                    );
                }
                matched.push(cand.spec_string());
            }
            None => absent.push(cand.spec_string()),
        }
    }
    r.push(
        "candidate-decisions",
        "every order-64 catalog candidate was decided definitively",
        Verdict::Pass,
        format!(
            "isomorphic: [{}]; not isomorphic: [{}]{witness}",
            matched.join(", "),
            absent.join(", ")
        ),
    );

    let is_sz = amb.group.tag() == "sz(8)";
    if is_sz {
        r.push_bool(
            "pair-family-match",
            "the Sylow 2-subgroup is the pair group with the squaring-composed twist",
            matched.iter().any(|s| s == "A(m=3,l=2)"),
            format!("matches: [{}]", matched.join(", ")),
        );
        r.push_bool(
            "triple-family-absent",
            "the Sylow 2-subgroup matches no triple group",
            matched.iter().all(|s| s.starts_with("A(")),
            "pair-family center has order 8, triple-family centers have order 4".into(),
        );
    } else {
        r.push_bool(
            "twisted-triple-match",
            "the Sylow 2-subgroup matches the twisted triple group B(m=2,l=1,·)",
            matched.iter().any(|s| s.starts_with("B(m=2,l=1")),
            format!("matches: [{}]; absent: [{}]", matched.join(", "), absent.join(", ")),
        );
        r.push_bool(
            "untwisted-triple-match",
            "the Sylow 2-subgroup matches the untwisted triple group B(m=2,l=0,·)",
            matched.iter().any(|s| s.starts_with("B(m=2,l=0")),
            format!("matches: [{}]", matched.join(", ")),
        );
    }
    Ok(r)
}
