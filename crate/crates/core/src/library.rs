//! Named knot complexes shipped as data files.

use crate::builders::{cable_exponents, conway_model, staircase, thin_model, torus_knot_exponents, unknot};
use crate::complex::{mirror, CfkComplex};
use crate::error::LoadError;
use crate::format::load;

/// Library names with their shipped file contents.
pub const FILES: &[(&str, &str)] = &[
    ("unknot", include_str!("../data/unknot.json")),
    ("T(2,3)", include_str!("../data/t2_3.json")),
    ("-T(2,3)", include_str!("../data/mirror_t2_3.json")),
    ("figure-eight", include_str!("../data/figure_eight.json")),
    ("T(2,9)", include_str!("../data/t2_9.json")),
    ("T(4,5)", include_str!("../data/t4_5.json")),
    ("T(2,3;2,5)", include_str!("../data/t2_3_2_5.json")),
    ("-T(2,3;2,5)", include_str!("../data/mirror_t2_3_2_5.json")),
    ("Conway", include_str!("../data/conway.json")),
];

const ALIASES: &[(&str, &str)] = &[("trefoil", "T(2,3)"), ("4_1", "figure-eight"), ("conway", "Conway")];

pub fn names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(n, _)| *n)
}

fn canonical_name(name: &str) -> &str {
    let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    ALIASES
        .iter()
        .find(|(a, _)| *a == compact)
        .map(|(_, n)| *n)
        .or_else(|| FILES.iter().map(|(n, _)| *n).find(|n| *n == compact))
        .unwrap_or(name)
}

/// Loads a library complex by name. Whitespace is ignored, and `trefoil`,
/// `4_1` and `conway` are accepted as aliases.
pub fn knot(name: &str) -> Result<CfkComplex, LoadError> {
    let key = canonical_name(name);
    let text = FILES
        .iter()
        .find(|(n, _)| *n == key)
        .map(|(_, t)| *t)
        .ok_or_else(|| LoadError::UnknownKnot(name.to_string()))?;
    load(text)
}

/// Every library complex, in the order of [`FILES`].
pub fn all() -> Vec<CfkComplex> {
    names().map(|n| knot(n).expect("shipped library files are valid")).collect()
}

/// Rebuilds a library complex from the builders; the shipped files are the
/// serialized output of this function.
pub fn build(name: &str) -> Option<CfkComplex> {
    let torus = |p, q| staircase(&torus_knot_exponents(p, q).expect("coprime"));
    let cable = || {
        let base = torus_knot_exponents(2, 3).expect("coprime");
        staircase(&cable_exponents(&base, 2, 5).expect("L-space cable"))
    };
    let c = match canonical_name(name) {
        "unknot" => unknot(),
        "T(2,3)" => torus(2, 3),
        "-T(2,3)" => mirror(&torus(2, 3)),
        "figure-eight" => thin_model(0, 1),
        "T(2,9)" => torus(2, 9),
        "T(4,5)" => torus(4, 5),
        "T(2,3;2,5)" => cable(),
        "-T(2,3;2,5)" => mirror(&cable()),
        "Conway" => conway_model(),
        _ => return None,
    };
    Some(c.with_name(canonical_name(name)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::serialize;

    #[test]
    fn shipped_files_match_builders() {
        for (name, text) in FILES {
            let built = build(name).unwrap();
            assert_eq!(serialize(&built), *text, "{name}");
        }
    }

    #[test]
    fn aliases_and_unknown_names() {
        assert_eq!(knot("trefoil").unwrap().name(), "T(2,3)");
        assert_eq!(knot("T(2, 9)").unwrap().name(), "T(2,9)");
        assert!(matches!(knot("T(3,7)"), Err(LoadError::UnknownKnot(_))));
    }
}
