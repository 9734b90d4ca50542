//! Named group families and the group-spec grammar.
//!
//! Every family implements [`GroupFamily`] and is registered by name in a
//! [`FamilyRegistry`]. A group spec is `<name>` or `<name>:<args>`:
//!
//! | spec                       | group                                     |
//! |----------------------------|-------------------------------------------|
//! | `dihedral:<n>`             | dihedral group of the `n`-gon, `n` odd    |
//! | `a4`                       | `A4 = ⟨(123), (12)(34)⟩`                  |
//! | `pq:<p>,<q>,<u>`           | `Z/p ⋊ Z/q`, complement `x ↦ u·x`         |
//! | `cyclic:<n>`               | `Z/n` acting regularly                    |
//! | `gens:<deg>;<perm>;<perm>` | closure of one-line generators            |

use std::collections::BTreeMap;

use crate::error::GroupError;
use crate::frobenius::{build_frobenius_system, FrobeniusSystem};
use crate::group::generate_group;
use crate::perm::Perm;

/// A constructor for a family of Frobenius systems, addressed by name.
pub trait GroupFamily: Send + Sync {
    fn name(&self) -> &'static str;

    /// Argument syntax shown in help and error messages.
    fn syntax(&self) -> &'static str;

    /// Builds the system from the text after `name:`. `offset` is the byte
    /// position of `args` in the full spec, used to annotate parse errors.
    fn build(&self, args: &str, offset: usize) -> Result<FrobeniusSystem, GroupError>;
}

pub struct FamilyRegistry {
    families: BTreeMap<&'static str, Box<dyn GroupFamily>>,
}

impl FamilyRegistry {
    pub fn empty() -> Self {
        FamilyRegistry {
            families: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, family: Box<dyn GroupFamily>) {
        self.families.insert(family.name(), family);
    }

    pub fn get(&self, name: &str) -> Option<&dyn GroupFamily> {
        self.families.get(name).map(|f| f.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.families.keys().copied()
    }

    pub fn syntaxes(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.families.values().map(|f| f.syntax())
    }

    /// Parses and builds a group spec such as `dihedral:5` or `gens:3;2,3,1`.
    pub fn parse(&self, spec: &str) -> Result<FrobeniusSystem, GroupError> {
        let (name, args, offset) = match spec.find(':') {
            Some(i) => (&spec[..i], &spec[i + 1..], i + 1),
            None => (spec, "", spec.len()),
        };
        let family = self.get(name).ok_or_else(|| GroupError::Parse {
            position: 0,
            message: format!(
                "unknown group family {name:?}; expected one of: {}",
                self.syntaxes().collect::<Vec<_>>().join(", ")
            ),
        })?;
        family.build(args, offset)
    }
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        let mut reg = FamilyRegistry::empty();
        reg.register(Box::new(Dihedral));
        reg.register(Box::new(Alternating4));
        reg.register(Box::new(Metacyclic));
        reg.register(Box::new(Cyclic));
        reg.register(Box::new(Generated));
        reg
    }
}

/// Parses a group spec with the default registry.
pub fn parse_group_spec(spec: &str) -> Result<FrobeniusSystem, GroupError> {
    FamilyRegistry::default().parse(spec)
}

fn parse_uint(token: &str, position: usize) -> Result<usize, GroupError> {
    token.trim().parse().map_err(|_| GroupError::Parse {
        position,
        message: format!("expected a non-negative integer, found {token:?}"),
    })
}

/// Splits `args` on `sep`, returning each piece with its absolute position.
fn split_positions(args: &str, sep: char, offset: usize) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, ch) in args.char_indices() {
        if ch == sep {
            out.push((&args[start..i], offset + start));
            start = i + ch.len_utf8();
        }
    }
    out.push((&args[start..], offset + start));
    out
}

fn expect_no_args(name: &str, args: &str, offset: usize) -> Result<(), GroupError> {
    if args.is_empty() {
        Ok(())
    } else {
        Err(GroupError::Parse {
            position: offset,
            message: format!("{name} takes no arguments"),
        })
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Multiplicative order of `u` modulo `p`, or `None` if `u` is not a unit.
fn multiplicative_order(u: usize, p: usize) -> Option<usize> {
    let u = u % p;
    if u == 0 {
        return None;
    }
    let mut x = u;
    for k in 1..=p {
        if x == 1 {
            return Some(k);
        }
        x = x * u % p;
    }
    None
}

fn affine_map(p: usize, mul: usize, add: usize) -> Perm {
    Perm::from_images((0..p).map(|x| (mul * x + add) % p).collect())
        .expect("unit multiplier gives a bijection")
}

/// The dihedral group of the regular `n`-gon. Frobenius only for odd `n`;
/// even `n` is built and then rejected by the Frobenius test.
pub fn build_dihedral(n: usize) -> Result<FrobeniusSystem, GroupError> {
    if n < 3 {
        return Err(GroupError::InvalidParameter(format!(
            "dihedral group needs n >= 3, got {n}"
        )));
    }
    let rotation = affine_map(n, 1, 1);
    let reflection = Perm::from_images((0..n).map(|x| (n - x) % n).collect())?;
    build_frobenius_system(generate_group(&[rotation, reflection], n)?)
}

/// `Z/p ⋊ Z/q` acting on `Z/p` by `x ↦ u^i·x + a`.
pub fn build_pq(p: usize, q: usize, u: usize) -> Result<FrobeniusSystem, GroupError> {
    if !is_prime(p) || !is_prime(q) {
        return Err(GroupError::InvalidParameter(format!(
            "p = {p} and q = {q} must both be prime"
        )));
    }
    if p % q != 1 {
        return Err(GroupError::InvalidParameter(format!(
            "p = {p} is not congruent to 1 mod q = {q}"
        )));
    }
    match multiplicative_order(u, p) {
        Some(ord) if ord == q => {}
        Some(ord) => {
            return Err(GroupError::InvalidParameter(format!(
                "{u} has multiplicative order {ord} mod {p}, expected {q}"
            )))
        }
        None => {
            return Err(GroupError::InvalidParameter(format!(
                "{u} is not a unit mod {p}"
            )))
        }
    }
    let translation = affine_map(p, 1, 1);
    let scaling = affine_map(p, u % p, 0);
    build_frobenius_system(generate_group(&[translation, scaling], p)?)
}

/// `A4 = ⟨(123), (12)(34)⟩` on four points.
pub fn build_a4() -> Result<FrobeniusSystem, GroupError> {
    let gens = [
        Perm::from_cycles(4, &[&[1, 2, 3]])?,
        Perm::from_cycles(4, &[&[1, 2], &[3, 4]])?,
    ];
    build_frobenius_system(generate_group(&gens, 4)?)
}

/// `Z/n` acting on itself by translation (regular, trivial complement).
pub fn build_cyclic(n: usize) -> Result<FrobeniusSystem, GroupError> {
    if n < 1 {
        return Err(GroupError::InvalidParameter(
            "cyclic group needs n >= 1".into(),
        ));
    }
    build_frobenius_system(generate_group(&[affine_map(n, 1, 1)], n)?)
}

pub struct Dihedral;

impl GroupFamily for Dihedral {
    fn name(&self) -> &'static str {
        "dihedral"
    }

    fn syntax(&self) -> &'static str {
        "dihedral:<n>"
    }

    fn build(&self, args: &str, offset: usize) -> Result<FrobeniusSystem, GroupError> {
        build_dihedral(parse_uint(args, offset)?)
    }
}

pub struct Alternating4;

impl GroupFamily for Alternating4 {
    fn name(&self) -> &'static str {
        "a4"
    }

    fn syntax(&self) -> &'static str {
        "a4"
    }

    fn build(&self, args: &str, offset: usize) -> Result<FrobeniusSystem, GroupError> {
        expect_no_args("a4", args, offset)?;
        build_a4()
    }
}

pub struct Metacyclic;

impl GroupFamily for Metacyclic {
    fn name(&self) -> &'static str {
        "pq"
    }

    fn syntax(&self) -> &'static str {
        "pq:<p>,<q>,<u>"
    }

    fn build(&self, args: &str, offset: usize) -> Result<FrobeniusSystem, GroupError> {
        let parts = split_positions(args, ',', offset);
        if parts.len() != 3 {
            return Err(GroupError::Parse {
                position: offset,
                message: format!("pq expects three arguments p,q,u; found {}", parts.len()),
            });
        }
        let p = parse_uint(parts[0].0, parts[0].1)?;
        let q = parse_uint(parts[1].0, parts[1].1)?;
        let u = parse_uint(parts[2].0, parts[2].1)?;
        build_pq(p, q, u)
    }
}

pub struct Cyclic;

impl GroupFamily for Cyclic {
    fn name(&self) -> &'static str {
        "cyclic"
    }

    fn syntax(&self) -> &'static str {
        "cyclic:<n>"
    }

    fn build(&self, args: &str, offset: usize) -> Result<FrobeniusSystem, GroupError> {
        build_cyclic(parse_uint(args, offset)?)
    }
}

pub struct Generated;

impl GroupFamily for Generated {
    fn name(&self) -> &'static str {
        "gens"
    }

    fn syntax(&self) -> &'static str {
        "gens:<degree>;<perm>;<perm>;..."
    }

    fn build(&self, args: &str, offset: usize) -> Result<FrobeniusSystem, GroupError> {
        let mut parts = split_positions(args, ';', offset).into_iter();
        let (deg_text, deg_pos) = parts.next().expect("split yields at least one piece");
        let degree = parse_uint(deg_text, deg_pos)?;
        if degree == 0 {
            return Err(GroupError::Parse {
                position: deg_pos,
                message: "degree must be positive".into(),
            });
        }
        let mut gens = Vec::new();
        for (text, pos) in parts {
            if text.trim().is_empty() {
                continue;
            }
            let one_line = split_positions(text, ',', pos)
                .into_iter()
                .map(|(t, p)| parse_uint(t, p))
                .collect::<Result<Vec<_>, _>>()?;
            if one_line.len() != degree {
                return Err(GroupError::Parse {
                    position: pos,
                    message: format!(
                        "permutation has {} entries, expected {degree}",
                        one_line.len()
                    ),
                });
            }
            let perm = Perm::from_one_line(&one_line).map_err(|e| GroupError::Parse {
                position: pos,
                message: e.to_string(),
            })?;
            gens.push(perm);
        }
        build_frobenius_system(generate_group(&gens, degree)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::star_property_check;
    use crate::group::{check_frobenius, FrobeniusVerdict};

    #[test]
    fn dihedral_sizes() {
        let d3 = build_dihedral(3).unwrap();
        assert_eq!((d3.order(), d3.n(), d3.h()), (6, 3, 2));
        let d5 = build_dihedral(5).unwrap();
        assert_eq!((d5.order(), d5.n(), d5.h()), (10, 5, 2));
        for sys in [&d3, &d5] {
            assert_eq!(check_frobenius(sys.group()), FrobeniusVerdict::Frobenius);
            assert!(star_property_check(sys));
            sys.validate().unwrap();
        }
    }

    #[test]
    fn even_dihedral_is_not_frobenius() {
        match build_dihedral(4) {
            Err(GroupError::NotFrobenius(reason)) => {
                assert!(reason.to_string().contains("fixes points"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            build_dihedral(2),
            Err(GroupError::InvalidParameter(_))
        ));
    }

    #[test]
    fn pq_constructions() {
        let g21 = build_pq(7, 3, 2).unwrap();
        assert_eq!((g21.order(), g21.n(), g21.h()), (21, 7, 3));
        let d5 = build_pq(5, 2, 4).unwrap();
        assert_eq!((d5.order(), d5.n(), d5.h()), (10, 5, 2));
        // Same group as the dihedral construction, element for element.
        assert_eq!(
            d5.group().elements(),
            build_dihedral(5).unwrap().group().elements()
        );
        let g55 = build_pq(11, 5, 3).unwrap();
        assert_eq!((g55.order(), g55.n(), g55.h()), (55, 11, 5));
        g55.validate().unwrap();
    }

    #[test]
    fn pq_parameter_errors() {
        let err = build_pq(7, 3, 3).unwrap_err();
        assert!(err.to_string().contains("order 6"), "{err}");
        assert!(build_pq(7, 5, 2).is_err());
        assert!(build_pq(8, 7, 3).is_err());
        assert!(build_pq(7, 3, 7).is_err());
    }

    #[test]
    fn multiplicative_orders() {
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(multiplicative_order(3, 7), Some(6));
        assert_eq!(multiplicative_order(4, 5), Some(2));
        assert_eq!(multiplicative_order(0, 5), None);
    }

    #[test]
    fn parse_specs() {
        let a4 = parse_group_spec("a4").unwrap();
        assert_eq!((a4.n(), a4.h()), (4, 3));
        let s3 = parse_group_spec("gens:3;2,3,1;2,1,3").unwrap();
        assert_eq!(s3.order(), 6);
        let z6 = parse_group_spec("cyclic:6").unwrap();
        assert!(z6.is_regular());
        assert_eq!(parse_group_spec("pq:7,3,2").unwrap().order(), 21);
        assert_eq!(parse_group_spec("dihedral:7").unwrap().order(), 14);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_group_spec("pq:7,x,2") {
            Err(GroupError::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        match parse_group_spec("gens:3;2,3;1,2,3") {
            Err(GroupError::Parse { position, .. }) => assert_eq!(position, 7),
            other => panic!("unexpected {other:?}"),
        }
        match parse_group_spec("gens:3;2,2,1") {
            Err(GroupError::Parse { position, .. }) => assert_eq!(position, 7),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_group_spec("octahedral:3"),
            Err(GroupError::Parse { position: 0, .. })
        ));
        assert!(matches!(
            parse_group_spec("a4:1"),
            Err(GroupError::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_group_spec("dihedral:4"),
            Err(GroupError::NotFrobenius(_))
        ));
    }

    #[test]
    fn registry_is_extensible() {
        struct Trivial;
        impl GroupFamily for Trivial {
            fn name(&self) -> &'static str {
                "trivial"
            }
            fn syntax(&self) -> &'static str {
                "trivial"
            }
            fn build(&self, _: &str, _: usize) -> Result<FrobeniusSystem, GroupError> {
                build_cyclic(1)
            }
        }
        let mut reg = FamilyRegistry::default();
        reg.register(Box::new(Trivial));
        assert_eq!(reg.parse("trivial").unwrap().order(), 1);
        assert!(reg.names().any(|n| n == "pq"));
    }
}
