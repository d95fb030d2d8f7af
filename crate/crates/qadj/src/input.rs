use std::fs;

use qadj_core::{parse_polynomial, resolve_germ, PlaneCurveGerm, ResolutionGraph, ResolutionOptions};
use serde_json::{json, Value};

use crate::config::InputSource;
use crate::error::CliError;
use crate::graph_doc::GraphDoc;

/// A resolved input and the echo that goes into every report.
pub struct Subject {
    pub echo: Value,
    pub graph: ResolutionGraph,
}

fn germ_from_texts(texts: &[String]) -> Result<PlaneCurveGerm, CliError> {
    if let [one] = texts {
        return PlaneCurveGerm::from_product(one).map_err(|e| CliError::from(e).with_fragment(one.as_str()));
    }
    let mut ps = Vec::new();
    for t in texts {
        ps.push(parse_polynomial(t).map_err(|e| CliError::from(e).with_fragment(t.as_str()))?);
    }
    PlaneCurveGerm::new(ps).map_err(|e| CliError::from(e).with_fragment(texts.join(", ")))
}

fn resolve(germ: &PlaneCurveGerm, depth_limit: usize, fragment: &str) -> Result<ResolutionGraph, CliError> {
    let opts = ResolutionOptions {
        max_depth: depth_limit,
        ..Default::default()
    };
    resolve_germ(germ, &opts).map_err(|e| CliError::from(e).with_fragment(fragment))
}

pub fn load(source: &InputSource, depth_limit: usize) -> Result<Subject, CliError> {
    match source {
        InputSource::Inline(texts) => {
            let germ = germ_from_texts(texts)?;
            Ok(Subject {
                echo: json!({ "poly": texts }),
                graph: resolve(&germ, depth_limit, &texts.join(", "))?,
            })
        }
        InputSource::File(path) => {
            let shown = path.display().to_string();
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::input("unreadable-input", e.to_string()).with_fragment(shown.as_str()))?;
            let doc: Value = serde_json::from_str(&text)
                .map_err(|e| CliError::input("malformed-document", e.to_string()).with_fragment(shown.as_str()))?;
            let graph = if doc.get("curves").is_some() {
                let g: GraphDoc = serde_json::from_value(doc.clone())
                    .map_err(|e| CliError::input("malformed-graph", e.to_string()).with_fragment(shown.as_str()))?;
                g.to_graph()?
            } else {
                let branches: Vec<String> = doc
                    .get("branches")
                    .and_then(|b| serde_json::from_value(b.clone()).ok())
                    .ok_or_else(|| {
                        CliError::input("malformed-document", "expected \"branches\" or \"curves\"")
                            .with_fragment(shown.as_str())
                    })?;
                let germ = germ_from_texts(&branches)?;
                resolve(&germ, depth_limit, &branches.join(", "))?
            };
            Ok(Subject {
                echo: json!({ "file": shown, "document": doc }),
                graph,
            })
        }
    }
}
