//! The fixed catalog of constructible groups and the named verification
//! suites, with their parameter constraints and resource budgets.

/// One constructible group, with its canonical spec string.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct CatalogEntry {
    pub spec: &'static str,
    pub order: usize,
    /// Parameter constraints / notes shown in help output.
    pub constraint: &'static str,
}

const A_NOTE: &str = "pair family; twist θ = x^(2^l) must have odd order for the classified laws";
const B_NOTE: &str = "triple family; any l; eps=auto picks the least admissible value";
const C_NOTE: &str = "triple family; m odd ≥ 3; twist forced to l=(m−1)/2 so 2l+1 ≡ 0 (mod m)";
const D_NOTE: &str = "triple family; m ≥ 5 divisible by 5; twist must have order 5";

/// Every group the toolkit materializes, in stable order.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry { spec: "A(m=3,l=1)", order: 64, constraint: A_NOTE },
        CatalogEntry { spec: "A(m=3,l=2)", order: 64, constraint: A_NOTE },
        CatalogEntry { spec: "A(m=5,l=1)", order: 1024, constraint: A_NOTE },
        CatalogEntry { spec: "A(m=5,l=2)", order: 1024, constraint: A_NOTE },
        CatalogEntry { spec: "A(m=5,l=3)", order: 1024, constraint: A_NOTE },
        CatalogEntry { spec: "A(m=5,l=4)", order: 1024, constraint: A_NOTE },
        CatalogEntry { spec: "A(m=6,l=2)", order: 4096, constraint: A_NOTE },
        CatalogEntry { spec: "A(m=6,l=4)", order: 4096, constraint: A_NOTE },
        CatalogEntry { spec: "B(m=2,l=0,eps=auto)", order: 64, constraint: B_NOTE },
        CatalogEntry { spec: "B(m=2,l=1,eps=auto)", order: 64, constraint: B_NOTE },
        CatalogEntry { spec: "B(m=3,l=0,eps=auto)", order: 512, constraint: B_NOTE },
        CatalogEntry { spec: "B(m=3,l=1,eps=auto)", order: 512, constraint: B_NOTE },
        CatalogEntry { spec: "B(m=3,l=2,eps=auto)", order: 512, constraint: B_NOTE },
        CatalogEntry { spec: "C(m=3,eps=auto)", order: 512, constraint: C_NOTE },
        CatalogEntry { spec: "C(m=5,eps=auto)", order: 32768, constraint: C_NOTE },
        CatalogEntry { spec: "D(m=5,l=1,eps=auto)", order: 32768, constraint: D_NOTE },
        CatalogEntry { spec: "D(m=5,l=2,eps=auto)", order: 32768, constraint: D_NOTE },
        CatalogEntry { spec: "D(m=5,l=3,eps=auto)", order: 32768, constraint: D_NOTE },
        CatalogEntry { spec: "D(m=5,l=4,eps=auto)", order: 32768, constraint: D_NOTE },
        CatalogEntry { spec: "sz(8)", order: 29120, constraint: "4×4 matrices over gf(m=3); only q=8 is desk-scale" },
        CatalogEntry { spec: "su3(4)", order: 62400, constraint: "3×3 matrices over gf(m=4); only q=4 is desk-scale" },
    ]
}

/// A named verification suite.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct SuiteInfo {
    pub name: &'static str,
    /// What the suite checks, in one line.
    pub summary: &'static str,
    /// Accepted group specs.
    pub accepts: &'static str,
    /// Resource budget / guard notes.
    pub budget: &'static str,
}

/// All suites, in stable order.
pub fn suites() -> Vec<SuiteInfo> {
    vec![
        SuiteInfo {
            name: "higman",
            summary: "Ω₁(P) = Z(P) = Φ(P) = [P,P], exponent 4, |Z| = q, |P| ∈ {q²,q³}",
            accepts: "any nilpotent family group (A/B/C/D)",
            budget: "orders up to 2^15; < 2 min at the largest size",
        },
        SuiteInfo {
            name: "lemma22",
            summary: "normal-subgroup structure laws over the full lattice, plus τ-image sizes and spans for pairs",
            accepts: "family groups of order ≤ 4096",
            budget: "lattice cap 2^20 subgroups",
        },
        SuiteInfo {
            name: "aut21",
            summary: "full automorphism count (odd part 21), C₇⋊C₃ subgroup, Singer/field relation, faithful odd action on the center",
            accepts: "pair family at m=3 (order 64)",
            budget: "exhaustive search, < 5 min",
        },
        SuiteInfo {
            name: "suzuki-property",
            summary: "automorphisms permute the q−1 involutions transitively",
            accepts: "any family group",
            budget: "full Aut at order ≤ 64; explicit diagonal/field witnesses above",
        },
        SuiteInfo {
            name: "cor42",
            summary: "the order-64 ambient lists: class counts k ≤ 64 and height supports per entry",
            accepts: "family letter A or B",
            budget: "includes 29120/62400/87360-element character computations; < 10 min",
        },
        SuiteInfo {
            name: "heights",
            summary: "character height support equals (2-groups) or is contained in (extensions) the family prediction",
            accepts: "family groups, sdp extensions, sz(8), su3(4)",
            budget: "class counts ≤ 316; < 1 min per small group",
        },
        SuiteInfo {
            name: "ti",
            summary: "Sylow 2-subgroup is trivial-intersection: 65 conjugates, pairwise trivial",
            accepts: "sz(8) or su3(4)",
            budget: "single closure + 65² bitset intersections; < 5 min",
        },
        SuiteInfo {
            name: "identify",
            summary: "identify the ambient Sylow 2-subgroup against every order-64 family candidate",
            accepts: "sz(8) or su3(4)",
            budget: "isomorphism search capped at order 64",
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::build_spec;

    #[test]
    fn catalog_is_stable_and_consistent() {
        let cat = catalog();
        assert_eq!(cat.len(), 21);
        let specs: Vec<&str> = cat.iter().map(|e| e.spec).collect();
        assert!(specs.contains(&"A(m=3,l=1)"));
        assert!(specs.contains(&"sz(8)"));
        // No duplicates.
        let mut sorted = specs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), specs.len());
        assert_eq!(suites().len(), 8);
    }

    #[test]
    fn every_small_catalog_entry_builds_with_the_stated_order() {
        for e in catalog() {
            if e.order > 4096 {
                continue; // large entries exercised in integration tests
            }
            let built = build_spec(e.spec, None).unwrap();
            assert_eq!(built.group().unwrap().order(), e.order, "{}", e.spec);
        }
    }
}
