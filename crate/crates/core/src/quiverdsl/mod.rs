//! Bound-quiver data model, validation, and the `.qv` / JSON formats.

mod json;
mod model;
mod text;

use thiserror::Error;

pub use json::{emit_json, parse_json, QuiverJson};
pub use model::{Arrow, BoundQuiver, Path, Quiver, Relation};
pub use text::{emit_text, parse_quiver};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("NoVertices: a quiver needs at least one vertex")]
    NoVertices,
    #[error("InvalidName: {0:?} is not a valid name")]
    InvalidName(String),
    #[error("DuplicateVertex: {0}")]
    DuplicateVertex(String),
    #[error("DuplicateArrow: {0}")]
    DuplicateArrow(String),
    #[error("UnknownVertex: {0}")]
    UnknownVertex(String),
    #[error("UnknownArrow: {0}")]
    UnknownArrow(String),
    #[error("NotComposable: relation {relation}, path {path} does not compose")]
    NotComposable { relation: usize, path: String },
    #[error("EmptyRelation: relation {relation} has no nonzero terms")]
    EmptyRelation { relation: usize },
    #[error("NonHomogeneous: relation {relation} mixes paths of different lengths")]
    NonHomogeneous { relation: usize },
    #[error("NonParallel: relation {relation} mixes paths with different endpoints")]
    NonParallel { relation: usize },
    #[error("DegreeBelowTwo: relation {relation} has degree {degree}, admissible ideals need at least 2")]
    DegreeBelowTwo { relation: usize, degree: usize },
    #[error("Disconnected: the underlying graph is not connected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("SyntaxError at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("ValidationError: {0}")]
    Validation(ValidationError),
    #[error("JsonError: {0}")]
    Json(String),
}

impl DslError {
    /// Short error kind used in diagnostics, e.g. `NonHomogeneous`.
    pub fn kind(&self) -> &'static str {
        match self {
            DslError::Syntax { .. } => "SyntaxError",
            DslError::Json(_) => "JsonError",
            DslError::Validation(v) => v.kind(),
        }
    }
}

impl ValidationError {
    pub fn kind(&self) -> &'static str {
        match self {
            ValidationError::NoVertices => "NoVertices",
            ValidationError::InvalidName(_) => "InvalidName",
            ValidationError::DuplicateVertex(_) => "DuplicateVertex",
            ValidationError::DuplicateArrow(_) => "DuplicateArrow",
            ValidationError::UnknownVertex(_) => "UnknownVertex",
            ValidationError::UnknownArrow(_) => "UnknownArrow",
            ValidationError::NotComposable { .. } => "NotComposable",
            ValidationError::EmptyRelation { .. } => "EmptyRelation",
            ValidationError::NonHomogeneous { .. } => "NonHomogeneous",
            ValidationError::NonParallel { .. } => "NonParallel",
            ValidationError::DegreeBelowTwo { .. } => "DegreeBelowTwo",
            ValidationError::Disconnected => "Disconnected",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub homogeneous: bool,
    pub parallel: bool,
    pub degree_at_least_two: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub connected: bool,
    pub acyclic: bool,
    pub has_loops: bool,
    pub relations: Vec<RelationCheck>,
    pub failures: Vec<ValidationError>,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check connectivity and the per-relation admissibility conditions.
/// Cycles and loops are reported but do not fail validation.
pub fn validate(bq: &BoundQuiver) -> ValidationReport {
    let q = &bq.quiver;
    let connected = q.is_connected();
    let mut failures = Vec::new();
    if !connected {
        failures.push(ValidationError::Disconnected);
    }
    let mut relations = Vec::with_capacity(bq.relations.len());
    for (ri, r) in bq.relations.iter().enumerate() {
        if r.terms().is_empty() {
            failures.push(ValidationError::EmptyRelation { relation: ri });
            relations.push(RelationCheck {
                homogeneous: false,
                parallel: false,
                degree_at_least_two: false,
            });
            continue;
        }
        let degree = r.degree();
        let check = RelationCheck {
            homogeneous: degree.is_some(),
            parallel: r.endpoints().is_some(),
            degree_at_least_two: r.terms().iter().all(|(_, p)| p.len() >= 2),
        };
        if !check.homogeneous {
            failures.push(ValidationError::NonHomogeneous { relation: ri });
        }
        if !check.parallel {
            failures.push(ValidationError::NonParallel { relation: ri });
        }
        if check.homogeneous && !check.degree_at_least_two {
            failures.push(ValidationError::DegreeBelowTwo {
                relation: ri,
                degree: degree.unwrap_or(0),
            });
        }
        relations.push(check);
    }
    ValidationReport {
        connected,
        acyclic: q.is_acyclic(),
        has_loops: q.has_loops(),
        relations,
        failures,
    }
}

/// First validation failure, if any.
pub(crate) fn check(bq: &BoundQuiver) -> Result<(), DslError> {
    match validate(bq).failures.into_iter().next() {
        Some(e) => Err(DslError::Validation(e)),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE_2_2: &str = "
        # three vertices with 2-cycles between neighbours
        quiver zigzag {
          vertices: 1, 2, 3;
          arrows:
            a: 1 -> 2;  # alpha
            d: 2 -> 1;  # delta
            b: 2 -> 3;  # beta
            g: 3 -> 2;  # gamma
          relations:
            a*b;
            g*d;
            d*a - b*g;
        }";

    #[test]
    fn parses_example_2_2() {
        let bq = parse_quiver(EXAMPLE_2_2).unwrap();
        assert_eq!(bq.n(), 3);
        assert_eq!(bq.quiver.arrows().len(), 4);
        assert_eq!(bq.relations.len(), 3);
        let report = validate(&bq);
        assert!(report.passes());
        assert!(report.connected);
        assert!(!report.acyclic);
        assert_eq!(bq.relations[2].display(&bq.quiver), "d*a - b*g");
    }

    #[test]
    fn empty_relations_block() {
        let bq = parse_quiver("quiver a2 { vertices: x y; arrows: t: x -> y; relations: }").unwrap();
        assert!(bq.relations.is_empty());
        let bq = parse_quiver("quiver pt { vertices: 1; arrows: }").unwrap();
        assert_eq!(bq.n(), 1);
    }

    #[test]
    fn a3_orientation_is_acyclic() {
        let bq = parse_quiver("quiver a3 { vertices: 1,2,3; arrows: x: 2 -> 1; y: 2 -> 3; }").unwrap();
        let r = validate(&bq);
        assert!(r.passes() && r.acyclic);
    }

    #[test]
    fn non_homogeneous_relation() {
        let err = parse_quiver(
            "quiver bad { vertices: 1,2,3; arrows: a: 1->2; b: 2->3; c: 1->3; relations: a*b - c; }",
        )
        .unwrap_err();
        assert_eq!(err, DslError::Validation(ValidationError::NonHomogeneous { relation: 0 }));
        assert_eq!(err.kind(), "NonHomogeneous");
    }

    #[test]
    fn disconnected_fails() {
        let err = parse_quiver("quiver two { vertices: 1,2,3,4; arrows: a: 1->2; b: 3->4; }").unwrap_err();
        assert_eq!(err, DslError::Validation(ValidationError::Disconnected));
    }

    #[test]
    fn degree_one_and_non_parallel() {
        let err = parse_quiver("quiver k { vertices: 1,2; arrows: a: 1->2; b: 1->2; relations: a - b; }")
            .unwrap_err();
        assert_eq!(err, DslError::Validation(ValidationError::DegreeBelowTwo { relation: 0, degree: 1 }));
        let err = parse_quiver(
            "quiver k { vertices: 1,2,3; arrows: a: 1->2; b: 2->3; c: 2->1; relations: a*b - a*c; }",
        )
        .unwrap_err();
        assert_eq!(err, DslError::Validation(ValidationError::NonParallel { relation: 0 }));
    }

    #[test]
    fn coefficients_and_signs() {
        let bq = parse_quiver(
            "quiver c { vertices: 1,2,3; arrows: a: 1->2; b: 1->2; d: 2->3;
               relations: -3/2*a*d + 2*b*d; }",
        )
        .unwrap();
        assert_eq!(bq.relations[0].display(&bq.quiver), "-3/2*a*d + 2*b*d");
        let err = parse_quiver("quiver c { vertices: 1,2; arrows: a: 1->2; relations: a*a*; }").unwrap_err();
        assert!(matches!(err, DslError::Syntax { .. }));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_quiver("quiver q {\n  vertices: 1;\n  arrows: a 1 -> 1;\n}").unwrap_err();
        assert_eq!(
            err,
            DslError::Syntax {
                line: 3,
                column: 13,
                message: "expected `:`, found `1`".into()
            }
        );
        let err = parse_quiver("quiver q { vertices: 1; arrows: a: 1 => 1; }").unwrap_err();
        assert!(matches!(err, DslError::Syntax { line: 1, column: 38, .. }), "{err:?}");
    }

    #[test]
    fn unknown_names() {
        let err = parse_quiver("quiver q { vertices: 1,2; arrows: a: 1 -> 3; }").unwrap_err();
        assert_eq!(err, DslError::Validation(ValidationError::UnknownVertex("3".into())));
        let err = parse_quiver("quiver q { vertices: 1,2; arrows: a: 1 -> 2; relations: a*z; }").unwrap_err();
        assert_eq!(err, DslError::Validation(ValidationError::UnknownArrow("z".into())));
        let err = parse_quiver("quiver q { vertices: 1,2; arrows: a: 1 -> 2; relations: a*a; }").unwrap_err();
        assert!(matches!(err, DslError::Validation(ValidationError::NotComposable { .. })));
    }

    #[test]
    fn loops_parse() {
        let bq = parse_quiver("quiver l { vertices: 1; arrows: x: 1 -> 1; relations: x*x; }").unwrap();
        let r = validate(&bq);
        assert!(r.passes() && r.has_loops && !r.acyclic);
    }

    #[test]
    fn text_round_trip() {
        let bq = parse_quiver(EXAMPLE_2_2).unwrap();
        let text = emit_text(&bq);
        assert_eq!(parse_quiver(&text).unwrap(), bq);
    }
}
