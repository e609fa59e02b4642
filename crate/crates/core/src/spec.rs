//! Text grammar for naming fields, groups, and semidirect products, plus
//! the builder that turns a parsed spec into a live group object.
//!
//! Forms:
//!   gf(m=3,poly=0xb)                      — a field (poly optional)
//!   A(m=3,l=1)                            — pair family
//!   B(m=2,l=1,eps=auto) C(m=3) D(m=5,l=1) — triple families (eps optional,
//!                                           `auto` or an explicit hex value)
//!   sz(8)  su3(4)                         — ambient simple matrix groups
//!   sdp(BASE; singer(xi=0x2), frob(j=1))  — extension of BASE by the
//!                                           closure of the listed actions
//!   sdp(su3(4); torus(lambda=0x2))        — ambient Sylow extended by a
//!                                           torus conjugation
//!
//! Values are decimal or 0x-prefixed hex. Whitespace is ignored.

use crate::autos::{field_map, singer_map, GroupMap, SemidirectGroup};
use crate::error::{Error, Result};
use crate::gf2m::{F2m, Fe};
use crate::group::{Group, TableGroup};
use crate::simple::{
    build_su3, build_sz, frobenius_map, su3_torus, sz_torus, torus_automorphism, AmbientGroup,
    MatrixGroup,
};
use crate::suzuki::{Family, SuzukiGroup};

/// Epsilon request in a triple-family spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpsChoice {
    /// Pick the least admissible value.
    Auto,
    /// Use this value (must be admissible).
    Value(Fe),
}

/// One action inside an `sdp(...)` form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    /// Diagonal (Singer-type) automorphism; `None` means the field generator.
    Singer { xi: Option<Fe> },
    /// Coordinatewise field automorphism x ↦ x^(2^j).
    Frob { j: u32 },
    /// Conjugation by the torus element with this parameter, restricted to
    /// the Sylow 2-subgroup; `None` means the field generator.
    Torus { lambda: Option<Fe> },
}

/// Which ambient simple group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmbientKind {
    Sz,
    Su3,
}

/// A parsed spec string, not yet constructed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedSpec {
    Field {
        m: u32,
        poly: Option<u32>,
    },
    Suzuki {
        family: Family,
        m: u32,
        l: Option<u32>,
        eps: EpsChoice,
        poly: Option<u32>,
    },
    Ambient {
        kind: AmbientKind,
        q: u32,
    },
    Sdp {
        base: Box<ParsedSpec>,
        actions: Vec<Action>,
    },
}

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected '{}' at position {} in {:?}",
                c as char, self.pos, self.src
            )))
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// An identifier: letters, digits, underscores (starting with a letter).
    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse(format!(
                "expected a name at position {start} in {:?}",
                self.src
            )));
        }
        Ok(&self.src[start..self.pos])
    }

    fn done(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.bytes.len() {
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "unexpected trailing input at position {} in {:?}",
                self.pos, self.src
            )))
        }
    }
}

fn parse_number(s: &str, what: &str) -> Result<u32> {
    let parsed = if let Some(hex) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        u32::from_str_radix(hex, 16)
    } else {
        s.parse::<u32>()
    };
    parsed.map_err(|_| Error::Parse(format!("{what}: {s:?} is not a number")))
}

/// key=value list inside parentheses; returns pairs in written order.
fn parse_kvlist(cur: &mut Cursor) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    if cur.peek() == Some(b')') {
        return Ok(out);
    }
    loop {
        let key = cur.ident()?.to_string();
        cur.expect(b'=')?;
        let val = cur.ident()?.to_string();
        out.push((key, val));
        if !cur.eat(b',') {
            break;
        }
    }
    Ok(out)
}

fn take_key(kvs: &mut Vec<(String, String)>, key: &str) -> Option<String> {
    let idx = kvs.iter().position(|(k, _)| k == key)?;
    Some(kvs.remove(idx).1)
}

fn reject_leftover(kvs: &[(String, String)], form: &str) -> Result<()> {
    if let Some((k, _)) = kvs.first() {
        return Err(Error::Parse(format!("unknown key {k:?} in {form} spec")));
    }
    Ok(())
}

fn parse_action(cur: &mut Cursor) -> Result<Action> {
    let name = cur.ident()?.to_string();
    let mut kvs = if cur.eat(b'(') {
        let kvs = parse_kvlist(cur)?;
        cur.expect(b')')?;
        kvs
    } else {
        Vec::new()
    };
    let action = match name.as_str() {
        "singer" => {
            let xi = take_key(&mut kvs, "xi")
                .map(|v| parse_number(&v, "xi"))
                .transpose()?;
            Action::Singer { xi }
        }
        "frob" => {
            let j = take_key(&mut kvs, "j")
                .ok_or_else(|| Error::Parse("frob action requires j=<power>".into()))?;
            Action::Frob {
                j: parse_number(&j, "j")?,
            }
        }
        "torus" => {
            let lambda = take_key(&mut kvs, "lambda")
                .map(|v| parse_number(&v, "lambda"))
                .transpose()?;
            Action::Torus { lambda }
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown action {other:?} (expected singer, frob, or torus)"
            )))
        }
    };
    reject_leftover(&kvs, &name)?;
    Ok(action)
}

fn parse_spec_inner(cur: &mut Cursor) -> Result<ParsedSpec> {
    let head = cur.ident()?.to_string();
    match head.as_str() {
        "gf" => {
            cur.expect(b'(')?;
            let mut kvs = parse_kvlist(cur)?;
            cur.expect(b')')?;
            let m = take_key(&mut kvs, "m")
                .ok_or_else(|| Error::Parse("gf spec requires m=<degree>".into()))?;
            let poly = take_key(&mut kvs, "poly")
                .map(|v| parse_number(&v, "poly"))
                .transpose()?;
            reject_leftover(&kvs, "gf")?;
            Ok(ParsedSpec::Field {
                m: parse_number(&m, "m")?,
                poly,
            })
        }
        "A" | "B" | "C" | "D" => {
            let family = match head.as_str() {
                "A" => Family::A,
                "B" => Family::B,
                "C" => Family::C,
                _ => Family::D,
            };
            cur.expect(b'(')?;
            let mut kvs = parse_kvlist(cur)?;
            cur.expect(b')')?;
            let m = take_key(&mut kvs, "m")
                .ok_or_else(|| Error::Parse(format!("{head} spec requires m=<degree>")))?;
            let l = take_key(&mut kvs, "l")
                .map(|v| parse_number(&v, "l"))
                .transpose()?;
            let eps = match take_key(&mut kvs, "eps") {
                None => EpsChoice::Auto,
                Some(v) if v == "auto" => EpsChoice::Auto,
                Some(v) => EpsChoice::Value(parse_number(&v, "eps")?),
            };
            let poly = take_key(&mut kvs, "poly")
                .map(|v| parse_number(&v, "poly"))
                .transpose()?;
            reject_leftover(&kvs, &head)?;
            Ok(ParsedSpec::Suzuki {
                family,
                m: parse_number(&m, "m")?,
                l,
                eps,
                poly,
            })
        }
        "sz" | "su3" => {
            cur.expect(b'(')?;
            let q = cur.ident()?.to_string();
            cur.expect(b')')?;
            Ok(ParsedSpec::Ambient {
                kind: if head == "sz" {
                    AmbientKind::Sz
                } else {
                    AmbientKind::Su3
                },
                q: parse_number(&q, "q")?,
            })
        }
        "sdp" => {
            cur.expect(b'(')?;
            let base = parse_spec_inner(cur)?;
            cur.expect(b';')?;
            let mut actions = vec![parse_action(cur)?];
            while cur.eat(b',') {
                actions.push(parse_action(cur)?);
            }
            cur.expect(b')')?;
            Ok(ParsedSpec::Sdp {
                base: Box::new(base),
                actions,
            })
        }
        other => Err(Error::Parse(format!(
            "unknown spec head {other:?} (expected gf, A, B, C, D, sz, su3, or sdp)"
        ))),
    }
}

/// Parse a spec string.
pub fn parse_spec(src: &str) -> Result<ParsedSpec> {
    let mut cur = Cursor::new(src);
    let spec = parse_spec_inner(&mut cur)?;
    cur.done()?;
    Ok(spec)
}

/// A constructed object: a field, a concrete group, or an extension.
pub enum BuiltGroup {
    Field(F2m),
    Suzuki(SuzukiGroup),
    Ambient(AmbientGroup),
    /// Nilpotent family extended by verified automorphisms.
    SdpSuzuki(SemidirectGroup<SuzukiGroup>),
    /// Ambient Sylow subgroup (as a table) extended by torus conjugations.
    SdpSylow(SemidirectGroup<TableGroup>),
    /// Full ambient matrix group extended by field automorphisms.
    SdpAmbient(SemidirectGroup<MatrixGroup>),
}

impl BuiltGroup {
    /// The underlying group, or a usage error for a bare field spec.
    pub fn group(&self) -> Result<&dyn Group> {
        match self {
            BuiltGroup::Field(_) => Err(Error::Usage(
                "a field spec names no group; use a family, sz, su3, or sdp spec".into(),
            )),
            BuiltGroup::Suzuki(g) => Ok(g),
            BuiltGroup::Ambient(a) => Ok(&a.group),
            BuiltGroup::SdpSuzuki(g) => Ok(g),
            BuiltGroup::SdpSylow(g) => Ok(g),
            BuiltGroup::SdpAmbient(g) => Ok(g),
        }
    }

    /// Canonical label with all defaulted parameters resolved.
    pub fn label(&self) -> String {
        match self {
            BuiltGroup::Field(f) => f.to_string(),
            BuiltGroup::Suzuki(g) => g.spec_string(),
            BuiltGroup::Ambient(a) => a.group.tag().to_string(),
            BuiltGroup::SdpSuzuki(g) => format!(
                "sdp({}; {} maps)",
                g.base().spec_string(),
                g.complement_order()
            ),
            BuiltGroup::SdpSylow(g) => format!(
                "sdp(sylow-64; {} maps)",
                g.complement_order()
            ),
            BuiltGroup::SdpAmbient(g) => format!(
                "sdp({}; {} maps)",
                g.base().tag(),
                g.complement_order()
            ),
        }
    }

    /// The field the construction is written over, if any.
    pub fn field_spec(&self) -> Option<String> {
        match self {
            BuiltGroup::Field(f) => Some(f.to_string()),
            BuiltGroup::Suzuki(g) => Some(g.field().to_string()),
            BuiltGroup::Ambient(a) => Some(a.group.field().to_string()),
            BuiltGroup::SdpSuzuki(g) => Some(g.base().field().to_string()),
            BuiltGroup::SdpSylow(_) => None,
            BuiltGroup::SdpAmbient(g) => Some(g.base().field().to_string()),
        }
    }

    pub fn suzuki(&self) -> Option<&SuzukiGroup> {
        match self {
            BuiltGroup::Suzuki(g) => Some(g),
            BuiltGroup::SdpSuzuki(g) => Some(g.base()),
            _ => None,
        }
    }

    pub fn ambient(&self) -> Option<&AmbientGroup> {
        match self {
            BuiltGroup::Ambient(a) => Some(a),
            _ => None,
        }
    }
}

fn build_field(m: u32, poly: Option<u32>, poly_override: Option<u32>) -> Result<F2m> {
    match poly.or(poly_override) {
        Some(p) => F2m::new(m, p),
        None => F2m::with_default_poly(m),
    }
}

impl ParsedSpec {
    /// Construct the named object. `poly_override` substitutes for a
    /// missing poly key on field/family specs (it is an error for ambient
    /// matrix groups, whose entry fields are fixed).
    pub fn build(&self, poly_override: Option<u32>) -> Result<BuiltGroup> {
        match self {
            ParsedSpec::Field { m, poly } => {
                Ok(BuiltGroup::Field(build_field(*m, *poly, poly_override)?))
            }
            ParsedSpec::Suzuki {
                family,
                m,
                l,
                eps,
                poly,
            } => {
                let field = build_field(*m, *poly, poly_override)?;
                let eps = match eps {
                    EpsChoice::Auto => None,
                    EpsChoice::Value(e) => Some(*e),
                };
                Ok(BuiltGroup::Suzuki(SuzukiGroup::new(
                    field, *family, *l, eps,
                )?))
            }
            ParsedSpec::Ambient { kind, q } => {
                if poly_override.is_some() {
                    return Err(Error::Usage(
                        "poly override applies to field and family specs only".into(),
                    ));
                }
                let amb = match kind {
                    AmbientKind::Sz => build_sz(*q)?,
                    AmbientKind::Su3 => build_su3(*q)?,
                };
                Ok(BuiltGroup::Ambient(amb))
            }
            ParsedSpec::Sdp { base, actions } => {
                build_sdp(base, actions, poly_override)
            }
        }
    }
}

fn build_sdp(
    base: &ParsedSpec,
    actions: &[Action],
    poly_override: Option<u32>,
) -> Result<BuiltGroup> {
    match base.build(poly_override)? {
        BuiltGroup::Suzuki(g) => {
            let maps: Vec<GroupMap> = actions
                .iter()
                .map(|a| match *a {
                    Action::Singer { xi } => {
                        singer_map(&g, xi.unwrap_or_else(|| g.field().generator()))
                    }
                    Action::Frob { j } => field_map(&g, j),
                    Action::Torus { .. } => Err(Error::Usage(
                        "torus actions apply to ambient simple groups".into(),
                    )),
                })
                .collect::<Result<_>>()?;
            Ok(BuiltGroup::SdpSuzuki(SemidirectGroup::new(g, &maps)?))
        }
        BuiltGroup::Ambient(amb) => {
            let any_torus = actions.iter().any(|a| matches!(a, Action::Torus { .. }));
            let all_torus = actions.iter().all(|a| matches!(a, Action::Torus { .. }));
            if any_torus && !all_torus {
                return Err(Error::Usage(
                    "torus actions cannot be mixed with other actions".into(),
                ));
            }
            if any_torus {
                // Sylow subgroup extended by torus conjugation.
                let f = *amb.group.field();
                let maps: Vec<GroupMap> = actions
                    .iter()
                    .map(|a| {
                        let Action::Torus { lambda } = *a else {
                            unreachable!()
                        };
                        let lambda = lambda.unwrap_or_else(|| f.generator());
                        // The unitary group is written over GF(q²), so its
                        // q is the square root of the entry-field size.
                        let t = match amb.group.tag() {
                            "sz(8)" => sz_torus(&f, lambda)?,
                            _ => su3_torus(&f, 1u64 << (f.m() / 2), lambda)?,
                        };
                        let idx = amb.group.index_of(&t).ok_or_else(|| {
                            Error::Internal("torus matrix missing from closure".into())
                        })?;
                        torus_automorphism(&amb, idx)
                    })
                    .collect::<Result<_>>()?;
                let table = TableGroup::materialize(&amb.sylow_view()?)?;
                Ok(BuiltGroup::SdpSylow(SemidirectGroup::new(table, &maps)?))
            } else {
                let maps: Vec<GroupMap> = actions
                    .iter()
                    .map(|a| match *a {
                        Action::Frob { j } => frobenius_map(&amb.group, j),
                        Action::Singer { .. } => Err(Error::Usage(
                            "singer actions apply to the nilpotent families; use torus or \
                             frob on ambient groups"
                                .into(),
                        )),
                        Action::Torus { .. } => unreachable!(),
                    })
                    .collect::<Result<_>>()?;
                Ok(BuiltGroup::SdpAmbient(SemidirectGroup::new(
                    amb.group, &maps,
                )?))
            }
        }
        BuiltGroup::Field(_) => Err(Error::Usage(
            "sdp base must be a group, not a field".into(),
        )),
        _ => Err(Error::Usage("sdp bases cannot be nested".into())),
    }
}

/// Parse and build in one step.
pub fn build_spec(src: &str, poly_override: Option<u32>) -> Result<BuiltGroup> {
    parse_spec(src)?.build(poly_override)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{center, involutions};

    #[test]
    fn parses_canonical_forms() {
        assert_eq!(
            parse_spec("gf(m=3,poly=0xb)").unwrap(),
            ParsedSpec::Field { m: 3, poly: Some(0xb) }
        );
        assert_eq!(
            parse_spec("A(m=3,l=1)").unwrap(),
            ParsedSpec::Suzuki {
                family: Family::A,
                m: 3,
                l: Some(1),
                eps: EpsChoice::Auto,
                poly: None,
            }
        );
        assert_eq!(
            parse_spec("B(m=2,l=1,eps=0x2)").unwrap(),
            ParsedSpec::Suzuki {
                family: Family::B,
                m: 2,
                l: Some(1),
                eps: EpsChoice::Value(2),
                poly: None,
            }
        );
        assert_eq!(
            parse_spec("C(m=3,eps=auto)").unwrap(),
            ParsedSpec::Suzuki {
                family: Family::C,
                m: 3,
                l: None,
                eps: EpsChoice::Auto,
                poly: None,
            }
        );
        assert_eq!(
            parse_spec("sz(8)").unwrap(),
            ParsedSpec::Ambient { kind: AmbientKind::Sz, q: 8 }
        );
        assert_eq!(
            parse_spec(" sdp( A(m=3,l=1) ; singer(xi=0x2), frob(j=1) ) ").unwrap(),
            ParsedSpec::Sdp {
                base: Box::new(ParsedSpec::Suzuki {
                    family: Family::A,
                    m: 3,
                    l: Some(1),
                    eps: EpsChoice::Auto,
                    poly: None,
                }),
                actions: vec![
                    Action::Singer { xi: Some(2) },
                    Action::Frob { j: 1 },
                ],
            }
        );
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "",
            "E(m=3)",
            "A(m=3",
            "A(m=3,l=1)x",
            "A(m=3,l=1,zz=4)",
            "gf(poly=0xb)",
            "sdp(A(m=3,l=1))",
            "sdp(A(m=3,l=1); spin(x=1))",
            "A(m=zz,l=1)",
        ] {
            assert!(
                matches!(parse_spec(bad), Err(Error::Parse(_))),
                "expected parse error for {bad:?}"
            );
        }
    }

    #[test]
    fn builds_groups_with_expected_orders() {
        assert_eq!(
            build_spec("A(m=3,l=1)", None).unwrap().group().unwrap().order(),
            64
        );
        assert_eq!(
            build_spec("B(m=2,l=1,eps=auto)", None)
                .unwrap()
                .group()
                .unwrap()
                .order(),
            64
        );
        // P ⋊ C₇ via the diagonal map.
        let sdp = build_spec("sdp(A(m=3,l=1); singer(xi=0x2))", None).unwrap();
        assert_eq!(sdp.group().unwrap().order(), 448);
        // P ⋊ (C₇⋊C₃): closure of both actions has 21 maps.
        let sdp = build_spec("sdp(A(m=3,l=1); singer(xi=0x2), frob(j=1))", None).unwrap();
        assert_eq!(sdp.group().unwrap().order(), 64 * 21);
    }

    #[test]
    fn field_spec_is_not_a_group() {
        let f = build_spec("gf(m=3)", None).unwrap();
        assert!(matches!(f.group(), Err(Error::Usage(_))));
        assert_eq!(f.label(), "gf(m=3,poly=0xb)");
    }

    #[test]
    fn reducible_poly_is_rejected_at_build() {
        // x³+1 = (x+1)(x²+x+1) is reducible.
        assert!(matches!(
            build_spec("gf(m=3,poly=0x9)", None),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn torus_sdp_realizes_odd_extension_of_the_sylow() {
        // Sylow of su3(4) extended by the full torus conjugation: 64·15.
        let sdp = build_spec("sdp(su3(4); torus(lambda=0x2))", None).unwrap();
        let g = sdp.group().unwrap();
        assert_eq!(g.order(), 64 * 15);
        // Frobenius on the whole ambient group: 29120·3.
        let aut = build_spec("sdp(sz(8); frob(j=1))", None).unwrap();
        assert_eq!(aut.group().unwrap().order(), 87360);
    }

    #[test]
    fn label_resolves_defaults() {
        let b = build_spec("B(m=2,l=0)", None).unwrap();
        assert_eq!(b.label(), "B(m=2,l=0,eps=0x2)");
        let c = build_spec("C(m=3)", None).unwrap();
        assert_eq!(c.label(), "C(m=3,eps=0x1)");
    }

    #[test]
    fn poly_override_changes_the_field() {
        let g = build_spec("A(m=3,l=1)", Some(0xd)).unwrap();
        assert_eq!(g.field_spec().unwrap(), "gf(m=3,poly=0xd)");
        // The rewritten field still yields a group with the same shape.
        let grp = g.group().unwrap();
        assert_eq!(grp.order(), 64);
        assert_eq!(center(grp).len(), 8);
        assert_eq!(involutions(grp).len(), 7);
    }
}
