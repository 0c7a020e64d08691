use serde::{Deserialize, Serialize};

use super::model::BoundQuiver;
use super::text::resolve;
use super::{check, DslError};
use crate::polyring::parse_rational;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// Coefficients are strings (`"3/2"`); plain JSON integers are accepted on input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: serde_json::Value,
    pub path: Vec<String>,
}

/// JSON mirror of the `.qv` format. Endpoints refer to vertices by name.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuiverJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub relations: Vec<Vec<TermJson>>,
}

impl From<&BoundQuiver> for QuiverJson {
    fn from(bq: &BoundQuiver) -> Self {
        let q = &bq.quiver;
        let name_of = |v: usize| q.vertices()[v].clone();
        Self {
            name: Some(bq.name.clone()),
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowJson {
                    name: a.name.clone(),
                    source: name_of(a.source),
                    target: name_of(a.target),
                })
                .collect(),
            relations: bq
                .relations
                .iter()
                .map(|r| {
                    r.terms()
                        .iter()
                        .map(|(c, p)| TermJson {
                            coeff: serde_json::Value::String(c.to_string()),
                            path: p.arrows().iter().map(|&a| q.arrow(a).name.clone()).collect(),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// Parse and validate a JSON bound-quiver description.
pub fn parse_json(text: &str) -> Result<BoundQuiver, DslError> {
    let raw: QuiverJson = serde_json::from_str(text).map_err(|e| DslError::Json(e.to_string()))?;
    let mut relations = Vec::with_capacity(raw.relations.len());
    for terms in raw.relations {
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let coeff = match &t.coeff {
                serde_json::Value::String(s) => parse_rational(s),
                serde_json::Value::Number(n) => n.as_i64().and_then(|i| parse_rational(&i.to_string())),
                _ => None,
            }
            .ok_or_else(|| DslError::Json(format!("bad coefficient {}", t.coeff)))?;
            out.push((coeff, t.path));
        }
        relations.push(out);
    }
    let arrows = raw
        .arrows
        .into_iter()
        .map(|a| (a.name, a.source, a.target))
        .collect();
    let bq = resolve(
        raw.name.unwrap_or_else(|| "Q".to_string()),
        raw.vertices,
        arrows,
        relations,
    )
    .map_err(DslError::Validation)?;
    check(&bq)?;
    Ok(bq)
}

pub fn emit_json(bq: &BoundQuiver) -> String {
    serde_json::to_string_pretty(&QuiverJson::from(bq)).expect("serializable")
}
