//! Structured-text matroid descriptions.
//!
//! A description is a JSON document with an explicit `kind` tag:
//!
//! ```json
//! {"kind": "uniform", "r": 2, "n": 4}
//! {"kind": "graph", "vertices": 3, "edges": [[0,1],[1,2],[0,2]]}
//! {"kind": "bases", "n": 2, "bases": [[0],[1]]}
//! {"kind": "direct_sum", "parts": [{"kind":"uniform","r":1,"n":1}, ...]}
//! ```

use matroid_hopf::matroid::{GroundSubset, Matroid, MatroidError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MatroidSpec {
    Uniform {
        r: usize,
        n: usize,
    },
    Graph {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Bases {
        n: usize,
        bases: Vec<Vec<usize>>,
    },
    DirectSum {
        parts: Vec<MatroidSpec>,
    },
}

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("basis element {element} is outside the ground set 0..{n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

impl MatroidSpec {
    pub fn to_matroid(&self) -> Result<Matroid, SpecError> {
        match self {
            MatroidSpec::Uniform { r, n } => Ok(Matroid::uniform(*r, *n)?),
            MatroidSpec::Graph { vertices, edges } => Ok(Matroid::graphic(*vertices, edges)?),
            MatroidSpec::Bases { n, bases } => {
                for basis in bases {
                    for &e in basis {
                        if e >= *n {
                            return Err(SpecError::ElementOutOfRange { element: e, n: *n });
                        }
                    }
                }
                let family: Vec<GroundSubset> = bases
                    .iter()
                    .map(|b| GroundSubset::from_elements(b.iter().map(|&e| e as u8)))
                    .collect();
                Ok(Matroid::from_bases(*n, &family)?)
            }
            MatroidSpec::DirectSum { parts } => {
                let mut sum = Matroid::empty();
                for part in parts {
                    sum = sum.direct_sum(&part.to_matroid()?)?;
                }
                Ok(sum)
            }
        }
    }

    /// Canonical single-line rendering; `parse_spec(render(spec))` returns
    /// an equal spec and matroid.
    #[allow(dead_code)]
    pub fn render(&self) -> String {
        serde_json::to_string(self).expect("spec serialization cannot fail")
    }
}

/// Parses a description document and validates it into a matroid.
pub fn parse_spec(text: &str) -> Result<(MatroidSpec, Matroid), SpecError> {
    let spec: MatroidSpec = serde_json::from_str(text).map_err(|e| SpecError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let matroid = spec.to_matroid()?;
    Ok((spec, matroid))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_uniform() {
        let (_, m) = parse_spec(r#"{"kind":"uniform","r":1,"n":1}"#).unwrap();
        assert_eq!(m, Matroid::uniform(1, 1).unwrap());
    }

    #[test]
    fn parses_triangle_graph() {
        let (_, m) =
            parse_spec(r#"{"kind":"graph","vertices":3,"edges":[[0,1],[1,2],[0,2]]}"#).unwrap();
        assert_eq!(m, Matroid::uniform(2, 3).unwrap());
    }

    #[test]
    fn rejects_unequal_bases() {
        let err = parse_spec(r#"{"kind":"bases","n":2,"bases":[[0],[0,1]]}"#).unwrap_err();
        assert!(matches!(
            err,
            SpecError::Matroid(MatroidError::UnequalBasisCardinality { .. })
        ));
        assert!(err.to_string().contains("unequal cardinality"));
    }

    #[test]
    fn rejects_out_of_range_elements() {
        let err = parse_spec(r#"{"kind":"bases","n":2,"bases":[[0],[7]]}"#).unwrap_err();
        assert!(matches!(
            err,
            SpecError::ElementOutOfRange { element: 7, n: 2 }
        ));
    }

    #[test]
    fn reports_syntax_position() {
        let err = parse_spec("{\"kind\":\n  oops}").unwrap_err();
        match err {
            SpecError::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("expected syntax error, got {other}"),
        }
    }

    #[test]
    fn direct_sum_concatenates_parts() {
        let (_, m) = parse_spec(
            r#"{"kind":"direct_sum","parts":[{"kind":"uniform","r":1,"n":1},{"kind":"uniform","r":0,"n":1}]}"#,
        )
        .unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(m.bases(), &[GroundSubset::from_elements([0])]);
    }

    #[test]
    fn render_round_trips() {
        for text in [
            r#"{"kind":"uniform","r":2,"n":4}"#,
            r#"{"kind":"graph","vertices":3,"edges":[[0,1],[1,2],[0,2]]}"#,
            r#"{"kind":"bases","n":3,"bases":[[0,1],[0,2]]}"#,
            r#"{"kind":"direct_sum","parts":[{"kind":"uniform","r":1,"n":2}]}"#,
        ] {
            let (spec, m) = parse_spec(text).unwrap();
            let (respec, rem) = parse_spec(&spec.render()).unwrap();
            assert_eq!(spec, respec);
            assert_eq!(m, rem);
        }
    }
}
