//! JSON file forms for matrices, projections, tuples and maps.
//!
//! Entries are strings in the scalar grammar. A matrix file may carry its
//! field parameter as `"d"`; when present it must match the active context.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::lattice::Projection;
use crate::maps::{make_induced, make_unitary_conj, MapKind, ProjectionMap};
use crate::scalar::{parse_scalar, Automorphism, FieldContext};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    pub rows: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &Matrix) -> Self {
        MatrixFile {
            d: Some(m.ctx().d()),
            rows: (0..m.rows())
                .map(|r| m.row(r).iter().map(ToString::to_string).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self, ctx: FieldContext) -> Result<Matrix> {
        if let Some(d) = self.d {
            if d != ctx.d() {
                return Err(Error::ContextMismatch(d, ctx.d()));
            }
        }
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .map(|(c, text)| {
                        parse_scalar(text, ctx).map_err(|e| {
                            Error::Format(format!("entry ({}, {}) {text:?}: {e}", r + 1, c + 1))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(ctx, rows)
    }
}

/// Either the projection matrix itself or a matrix whose columns span the
/// range. Written files always use `matrix`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProjectionFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub span: Option<MatrixFile>,
}

impl ProjectionFile {
    pub fn from_projection(p: &Projection) -> Self {
        ProjectionFile { matrix: Some(MatrixFile::from_matrix(p.matrix())), span: None }
    }

    pub fn to_projection(&self, ctx: FieldContext) -> Result<Projection> {
        match (&self.matrix, &self.span) {
            (Some(m), None) => Projection::new(m.to_matrix(ctx)?),
            (None, Some(s)) => Projection::from_span(&s.to_matrix(ctx)?),
            _ => Err(Error::Format("a projection needs exactly one of \"matrix\" or \"span\"".into())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleFile {
    pub projections: Vec<ProjectionFile>,
}

impl TupleFile {
    pub fn from_tuple(tuple: &[Projection]) -> Self {
        TupleFile { projections: tuple.iter().map(ProjectionFile::from_projection).collect() }
    }

    pub fn to_tuple(&self, ctx: FieldContext) -> Result<Vec<Projection>> {
        if self.projections.is_empty() {
            return Err(Error::EmptyTuple);
        }
        let tuple: Vec<Projection> = self
            .projections
            .iter()
            .enumerate()
            .map(|(i, p)| {
                p.to_projection(ctx).map_err(|e| match e {
                    Error::Format(msg) => Error::Format(format!("projection {}: {msg}", i + 1)),
                    other => other,
                })
            })
            .collect::<Result<_>>()?;
        let n = tuple[0].dim();
        if let Some(p) = tuple.iter().find(|p| p.dim() != n) {
            return Err(Error::DimensionMismatch(format!(
                "tuple mixes dimensions {n} and {}",
                p.dim()
            )));
        }
        Ok(tuple)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum MapFile {
    #[serde(rename = "unitary")]
    Unitary {
        #[serde(rename = "U")]
        u: MatrixFile,
    },
    #[serde(rename = "anti-unitary")]
    AntiUnitary {
        #[serde(rename = "U")]
        u: MatrixFile,
    },
    #[serde(rename = "induced")]
    Induced {
        f: Automorphism,
        #[serde(rename = "B")]
        b: MatrixFile,
    },
}

impl MapFile {
    pub fn from_map(m: &ProjectionMap) -> Self {
        match m.kind() {
            MapKind::UnitaryConj(u) => MapFile::Unitary { u: MatrixFile::from_matrix(u) },
            MapKind::AntiUnitaryConj(u) => MapFile::AntiUnitary { u: MatrixFile::from_matrix(u) },
            MapKind::Induced(f, b) => MapFile::Induced { f: *f, b: MatrixFile::from_matrix(b) },
        }
    }

    pub fn to_map(&self, ctx: FieldContext) -> Result<ProjectionMap> {
        match self {
            MapFile::Unitary { u } => make_unitary_conj(u.to_matrix(ctx)?, false),
            MapFile::AntiUnitary { u } => make_unitary_conj(u.to_matrix(ctx)?, true),
            MapFile::Induced { f, b } => make_induced(*f, b.to_matrix(ctx)?),
        }
    }
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("file forms serialize")
}

/// Single-line form.
pub fn to_json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("file forms serialize")
}

pub fn parse_matrix(text: &str, ctx: FieldContext) -> Result<Matrix> {
    from_json::<MatrixFile>(text)?.to_matrix(ctx)
}

pub fn parse_projection(text: &str, ctx: FieldContext) -> Result<Projection> {
    from_json::<ProjectionFile>(text)?.to_projection(ctx)
}

pub fn parse_tuple(text: &str, ctx: FieldContext) -> Result<Vec<Projection>> {
    from_json::<TupleFile>(text)?.to_tuple(ctx)
}

pub fn parse_map(text: &str, ctx: FieldContext) -> Result<ProjectionMap> {
    from_json::<MapFile>(text)?.to_map(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> FieldContext {
        FieldContext::default()
    }

    #[test]
    fn matrix_roundtrip() {
        let m = parse_matrix(r#"{"d":2,"rows":[["1","1/2+i"],["r*i","-3"]]}"#, ctx()).unwrap();
        assert_eq!(m.get(0, 1), &ctx().parse("1/2+i").unwrap());
        let text = to_json(&MatrixFile::from_matrix(&m));
        assert_eq!(parse_matrix(&text, ctx()).unwrap(), m);
        assert!(parse_matrix(r#"{"rows":[["1"]]}"#, ctx()).is_ok());
    }

    #[test]
    fn matrix_errors() {
        assert_eq!(
            parse_matrix(r#"{"d":3,"rows":[["1"]]}"#, ctx()),
            Err(Error::ContextMismatch(3, 2))
        );
        assert!(matches!(parse_matrix(r#"{"rows":[["1","2"],["3"]]}"#, ctx()), Err(Error::DimensionMismatch(_))));
        assert!(matches!(parse_matrix(r#"{"rows":[["1+"]]}"#, ctx()), Err(Error::Format(_))));
        assert!(matches!(parse_matrix(r#"{"rows":[["1"]],"x":1}"#, ctx()), Err(Error::Format(_))));
        assert!(matches!(parse_matrix("not json", ctx()), Err(Error::Format(_))));
    }

    #[test]
    fn projection_forms() {
        let span = parse_projection(r#"{"span":{"rows":[["1"],["1"]]}}"#, ctx()).unwrap();
        let half = ctx().ratio(1, 2);
        assert_eq!(span.matrix().get(0, 1), &half);
        let text = to_json(&ProjectionFile::from_projection(&span));
        assert!(text.contains("\"matrix\""));
        assert_eq!(parse_projection(&text, ctx()).unwrap(), span);
        assert_eq!(
            parse_projection(r#"{"matrix":{"rows":[["1","1"],["0","0"]]}}"#, ctx()),
            Err(Error::NotHermitian)
        );
        assert!(matches!(parse_projection(r#"{}"#, ctx()), Err(Error::Format(_))));
    }

    #[test]
    fn tuple_and_map_roundtrip() {
        let t = parse_tuple(
            r#"{"projections":[{"span":{"rows":[["1"],["0"]]}},{"span":{"rows":[["1"],["r"]]}}]}"#,
            ctx(),
        )
        .unwrap();
        assert_eq!(parse_tuple(&to_json(&TupleFile::from_tuple(&t)), ctx()).unwrap(), t);
        assert_eq!(parse_tuple(r#"{"projections":[]}"#, ctx()), Err(Error::EmptyTuple));
        let mixed = r#"{"projections":[{"span":{"rows":[["1"],["0"]]}},{"span":{"rows":[["1"],["0"],["0"]]}}]}"#;
        assert!(matches!(parse_tuple(mixed, ctx()), Err(Error::DimensionMismatch(_))));

        let m = parse_map(r#"{"kind":"induced","f":"flip","B":{"rows":[["1","0"],["0","1"]]}}"#, ctx()).unwrap();
        assert_eq!(parse_map(&to_json(&MapFile::from_map(&m)), ctx()).unwrap(), m);
        let u = parse_map(r#"{"kind":"anti-unitary","U":{"rows":[["0","1"],["1","0"]]}}"#, ctx()).unwrap();
        assert_eq!(parse_map(&to_json(&MapFile::from_map(&u)), ctx()).unwrap(), u);
        assert_eq!(
            parse_map(r#"{"kind":"unitary","U":{"rows":[["1","1"],["0","1"]]}}"#, ctx()),
            Err(Error::NotUnitary)
        );
        assert!(matches!(parse_map(r#"{"kind":"induced","f":"wild","B":{"rows":[["1"]]}}"#, ctx()), Err(Error::Format(_))));
    }
}
