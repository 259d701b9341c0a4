//! Text format for complexes.
//!
//! ```text
//! {
//!   "name": "T(2,3)",
//!   "generators": [ {"id": "a", "alexander": 1, "maslov": 0}, ... ],
//!   "differential": [ {"from": "b", "to": "c", "upower": 0}, ... ]
//! }
//! ```
//!
//! `maslov` is either present on every generator or omitted everywhere.
//! Serialization is canonical: generators sorted by (alexander desc, id asc),
//! entries by (from, to, upower).

use serde::{Deserialize, Serialize};

use crate::complex::{validate, CfkComplex, Generator};
use crate::error::{LoadError, ParseError};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGenerator {
    id: String,
    alexander: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    maslov: Option<i64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    from: String,
    to: String,
    upower: i64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComplex {
    name: String,
    generators: Vec<RawGenerator>,
    #[serde(default)]
    differential: Vec<RawEntry>,
}

/// Parses a complex. Structural defects are reported, the axioms are not checked.
pub fn parse(text: &str) -> Result<CfkComplex, ParseError> {
    let raw: RawComplex = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let generators = raw
        .generators
        .into_iter()
        .map(|g| Generator { id: g.id, alexander: g.alexander, maslov: g.maslov })
        .collect();
    let differential = raw.differential.into_iter().map(|e| (e.from, e.to, e.upower)).collect();
    Ok(CfkComplex::from_raw(raw.name, generators, differential)?)
}

/// Parses and validates.
pub fn load(text: &str) -> Result<CfkComplex, LoadError> {
    let c = parse(text)?;
    let report = validate(&c);
    if report.is_valid() {
        Ok(c)
    } else {
        Err(LoadError::Invalid { name: c.name().to_string(), report })
    }
}

pub fn load_file(path: &std::path::Path) -> Result<CfkComplex, LoadError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| LoadError::Io { path: path.display().to_string(), source })?;
    load(&text)
}

/// Returns a copy with generators and entries in canonical order.
pub fn canonical(c: &CfkComplex) -> CfkComplex {
    let mut generators = c.generators().to_vec();
    generators.sort_by(|a, b| b.alexander.cmp(&a.alexander).then_with(|| a.id.cmp(&b.id)));
    let mut differential = c.differential();
    differential.sort();
    CfkComplex::new(c.name(), generators, differential)
        .expect("reordering a well-formed complex keeps it well-formed")
}

pub fn serialize(c: &CfkComplex) -> String {
    let c = canonical(c);
    let raw = RawComplex {
        name: c.name().to_string(),
        generators: c
            .generators()
            .iter()
            .map(|g| RawGenerator { id: g.id.clone(), alexander: g.alexander, maslov: g.maslov })
            .collect(),
        differential: c
            .differential()
            .into_iter()
            .map(|e| RawEntry { from: e.from, to: e.to, upower: i64::from(e.upower) })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&raw).expect("complex serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::ComplexError;

    const TREFOIL: &str = r#"{
      "name": "T(2,3)",
      "generators": [ {"id":"a","alexander":1,"maslov":0},
                      {"id":"b","alexander":0,"maslov":-1},
                      {"id":"c","alexander":-1,"maslov":-2} ],
      "differential": [ {"from":"b","to":"c","upower":0},
                        {"from":"b","to":"a","upower":1} ]
    }"#;

    #[test]
    fn parses_the_documented_example() {
        let c = parse(TREFOIL).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.edges().len(), 2);
        assert!(validate(&c).is_valid());
    }

    #[test]
    fn serialization_is_canonical() {
        let c = parse(TREFOIL).unwrap();
        let s = serialize(&c);
        assert_eq!(serialize(&parse(&s).unwrap()), s);
        let b = s.find("\"b\"").unwrap();
        let c_pos = s.find("\"c\"").unwrap();
        assert!(b < c_pos);
        // entries sorted by (from, to, upower): b->a before b->c
        let ba = s.find("\"to\": \"a\"").unwrap();
        let bc = s.find("\"to\": \"c\"").unwrap();
        assert!(ba < bc);
    }

    #[test]
    fn maslov_may_be_omitted_uniformly() {
        let text = r#"{"name":"u","generators":[{"id":"x","alexander":0}],"differential":[]}"#;
        let c = parse(text).unwrap();
        assert!(!c.has_maslov());
        assert!(!serialize(&c).contains("maslov"));
    }

    #[test]
    fn duplicate_id_is_named() {
        let text = r#"{"name":"u","generators":[{"id":"x","alexander":0},{"id":"x","alexander":1}]}"#;
        match parse(text) {
            Err(ParseError::Malformed(ComplexError::DuplicateId(id))) => assert_eq!(id, "x"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_locations() {
        let text = "{\n  \"name\": \"u\",\n  \"generators\": [ {\"id\": \"x\", \"alexander\": \"zero\"} ]\n}";
        match parse(text) {
            Err(ParseError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse(r#"{"name":"u","generators":[],"bogus":1}"#), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn validation_failure_is_distinct_from_parse_failure() {
        let text = r#"{"name":"two","generators":[{"id":"x","alexander":0},{"id":"y","alexander":0}]}"#;
        assert!(parse(text).is_ok());
        assert!(matches!(load(text), Err(LoadError::Invalid { .. })));
    }
}
