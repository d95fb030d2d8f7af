//! Versioned JSON form of a resolution graph, and its DOT export.

use std::collections::BTreeSet;
use std::fmt::Write;

use qadj_core::rational::parse_rational;
use qadj_core::{
    parse_polynomial, parse_polynomial_in, BlowUpChartPath, BlowUpStep, Chart, ExceptionalCurve, PlaneCurveGerm,
    Provenance, ResolutionGraph,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const GRAPH_SCHEMA: &str = "qadj.resolution-graph";
pub const GRAPH_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    #[serde(default = "default_schema")]
    pub schema: String,
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub r: usize,
    /// Branch equations, when known. Needed to cross-check charts.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branches: Option<Vec<String>>,
    pub curves: Vec<CurveDoc>,
}

fn default_schema() -> String {
    GRAPH_SCHEMA.to_string()
}

fn default_version() -> u32 {
    GRAPH_SCHEMA_VERSION
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDoc {
    pub id: usize,
    pub a: Vec<u64>,
    pub c: u64,
    pub adjacent: Vec<usize>,
    pub branch_contacts: Vec<usize>,
    pub open_euler: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chart: Option<ChartDoc>,
}

/// `x = X(u, v)`, `y = Y(u, v)` with the curve at `u = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartDoc {
    pub x: String,
    pub y: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub path: Vec<StepDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepDoc {
    Blow,
    BlowSwapped,
    Translate(String),
}

impl GraphDoc {
    pub fn from_graph(graph: &ResolutionGraph, with_charts: bool) -> Self {
        let branches = graph
            .germ()
            .map(|g| g.branches().iter().map(|b| b.to_string()).collect());
        let curves = graph
            .curves()
            .iter()
            .map(|c| CurveDoc {
                id: c.id,
                a: c.a.clone(),
                c: c.c,
                adjacent: c.adjacent.iter().copied().collect(),
                branch_contacts: c.branch_contacts.clone(),
                open_euler: c.open_euler,
                chart: c.chart.as_ref().filter(|_| with_charts).map(chart_doc),
            })
            .collect();
        GraphDoc {
            schema: default_schema(),
            schema_version: GRAPH_SCHEMA_VERSION,
            r: graph.r(),
            branches,
            curves,
        }
    }

    pub fn to_graph(&self) -> Result<ResolutionGraph, CliError> {
        if self.schema != GRAPH_SCHEMA || self.schema_version != GRAPH_SCHEMA_VERSION {
            return Err(CliError::input(
                "unsupported-schema",
                format!("expected {GRAPH_SCHEMA} version {GRAPH_SCHEMA_VERSION}"),
            )
            .with_fragment(format!("{} version {}", self.schema, self.schema_version)));
        }
        let germ = match &self.branches {
            Some(bs) => {
                let mut ps = Vec::new();
                for b in bs {
                    ps.push(parse_polynomial(b).map_err(|e| CliError::from(e).with_fragment(b.as_str()))?);
                }
                Some(PlaneCurveGerm::new(ps)?)
            }
            None => None,
        };
        let mut curves = Vec::new();
        for c in &self.curves {
            let chart = match &c.chart {
                Some(ch) => Some(parse_chart(ch).map_err(|e| e.with_fragment(format!("chart of E{}", c.id)))?),
                None => None,
            };
            curves.push(ExceptionalCurve {
                id: c.id,
                a: c.a.clone(),
                c: c.c,
                adjacent: c.adjacent.iter().copied().collect::<BTreeSet<_>>(),
                branch_contacts: c.branch_contacts.clone(),
                open_euler: c.open_euler,
                chart,
            });
        }
        Ok(ResolutionGraph::from_parts(
            self.r,
            curves,
            Provenance::UserSupplied { germ },
        )?)
    }
}

fn chart_doc(ch: &Chart) -> ChartDoc {
    ChartDoc {
        x: ch.x.render(["u", "v"]),
        y: ch.y.render(["u", "v"]),
        path: ch
            .path
            .steps
            .iter()
            .map(|s| match s {
                BlowUpStep::Blow => StepDoc::Blow,
                BlowUpStep::BlowSwapped => StepDoc::BlowSwapped,
                BlowUpStep::Translate(t) => StepDoc::Translate(t.to_string()),
            })
            .collect(),
    }
}

fn parse_chart(ch: &ChartDoc) -> Result<Chart, CliError> {
    let x = parse_polynomial_in(&ch.x, ["u", "v"]).map_err(|e| CliError::from(e).with_fragment(ch.x.as_str()))?;
    let y = parse_polynomial_in(&ch.y, ["u", "v"]).map_err(|e| CliError::from(e).with_fragment(ch.y.as_str()))?;
    let mut steps = Vec::new();
    for s in &ch.path {
        steps.push(match s {
            StepDoc::Blow => BlowUpStep::Blow,
            StepDoc::BlowSwapped => BlowUpStep::BlowSwapped,
            StepDoc::Translate(t) => BlowUpStep::Translate(
                parse_rational(t)
                    .ok_or_else(|| CliError::input("bad-rational", "not a rational number").with_fragment(t))?,
            ),
        });
    }
    let path = BlowUpChartPath { steps };
    if !path.steps.is_empty() && path.map() != (x.clone(), y.clone()) {
        return Err(CliError::input(
            "chart-path-mismatch",
            "chart path does not compose to the given map",
        ));
    }
    Ok(Chart { x, y, path })
}

/// Dual graph with `E_k : a=(…), c=…` labels and one leaf per branch.
pub fn to_dot(graph: &ResolutionGraph) -> String {
    let mut s = String::from("graph resolution {\n  node [shape=box];\n");
    for c in graph.curves() {
        let a: Vec<String> = c.a.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(
            s,
            "  E{} [label=\"E_{} : a=({}), c={}\"];",
            c.id,
            c.id,
            a.join(","),
            c.c
        );
    }
    for (i, j) in graph.edges() {
        let _ = writeln!(s, "  E{} -- E{};", graph.curves()[i].id, graph.curves()[j].id);
    }
    for b in 0..graph.r() {
        let _ = writeln!(s, "  f{} [shape=plaintext, label=\"f_{}\"];", b + 1, b + 1);
    }
    for c in graph.curves() {
        for &b in &c.branch_contacts {
            let _ = writeln!(s, "  E{} -- f{} [style=dashed];", c.id, b + 1);
        }
    }
    s.push_str("}\n");
    s
}
