//! The correspondence table, the commutativity report and DOT export.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use super::{CotorsionPair, Corr, TorsionPair};
use crate::error::Result;
use crate::silting::Members;

/// One silting object and everything attached to it.
#[derive(Clone, Debug, Serialize)]
pub struct CorrespondenceRow {
    pub silting: Members,
    pub cotorsion: CotorsionPair,
    pub thick: Members,
    pub wide: BTreeSet<usize>,
    pub torsion: TorsionPair,
}

/// One edge identity checked for one silting object.
#[derive(Clone, Debug, Serialize)]
pub struct DiagramEdge {
    pub silting: Vec<String>,
    pub edge: &'static str,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramReport {
    pub edges: Vec<DiagramEdge>,
    pub complete: bool,
}

impl DiagramReport {
    pub fn all_pass(&self) -> bool {
        self.edges.iter().all(|e| e.pass)
    }
}

pub const EDGE_TORSION: &str = "Phi(Xi(U)) = vartheta(H0(U))";
pub const EDGE_THICK: &str = "beta(Xi(U).x) = thick(U_rho)";
pub const EDGE_WIDE: &str = "W(thick(U_rho)) = alpha(Fac(H0(U)))";

impl Corr {
    pub fn correspondence_row(&self, u: &Members) -> Result<CorrespondenceRow> {
        let cotorsion = self.xi(u);
        let torsion = self.phi(&cotorsion);
        Ok(CorrespondenceRow {
            silting: u.clone(),
            thick: self.thick_of_rho(u)?,
            wide: self.alpha_map(&torsion.t),
            cotorsion,
            torsion,
        })
    }

    /// One row per basic 2-term silting object.
    pub fn correspondence_table(&self) -> Result<Vec<CorrespondenceRow>> {
        self.k
            .enumerate_two_term_silting()?
            .iter()
            .map(|u| self.correspondence_row(u))
            .collect()
    }

    pub fn row_json(&self, r: &CorrespondenceRow) -> Value {
        json!({
            "silting": self.names(&r.silting),
            "cotorsion_pair": { "x": self.names(&r.cotorsion.x), "y": self.names(&r.cotorsion.y) },
            "thick": self.names(&r.thick),
            "wide": self.module_names(&r.wide),
            "torsion_class": self.module_names(&r.torsion.t),
        })
    }

    pub fn verify_main_diagram(&self) -> Result<DiagramReport> {
        let mut edges = Vec::new();
        for u in self.k.enumerate_two_term_silting()? {
            let name = self.names(&u);
            let h0 = self.h0(&u);
            let xi = self.xi(&u);
            let thick = self.thick_of_rho(&u)?;

            let lhs = self.phi(&xi);
            let rhs = self.vartheta(&h0);
            edges.push(DiagramEdge {
                silting: name.clone(),
                edge: EDGE_TORSION,
                pass: lhs == rhs,
                lhs: self.module_names(&lhs.t),
                rhs: self.module_names(&rhs.t),
            });

            let beta = self.beta_map(&xi.x);
            edges.push(DiagramEdge {
                silting: name.clone(),
                edge: EDGE_THICK,
                pass: beta == thick,
                lhs: self.names(&beta),
                rhs: self.names(&thick),
            });

            let w = self.script_w(&thick);
            let a = self.alpha_map(&self.m.fac(&h0));
            edges.push(DiagramEdge {
                silting: name,
                edge: EDGE_WIDE,
                pass: w == a,
                lhs: self.module_names(&w),
                rhs: self.module_names(&a),
            });
        }
        Ok(DiagramReport {
            edges,
            complete: self.is_complete(),
        })
    }

    /// Hasse diagram of the given subcategories under inclusion.
    pub fn hasse_dot(&self, sets: &[Members]) -> String {
        let label = |s: &Members| {
            if s.is_empty() {
                "0".to_string()
            } else {
                self.names(s).join(", ")
            }
        };
        let mut out = String::from("digraph thick {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, s) in sets.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", label(s)));
        }
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                if i == j || !(a.is_subset(b) && a != b) {
                    continue;
                }
                let covered = sets
                    .iter()
                    .any(|c| c != a && c != b && a.is_subset(c) && c.is_subset(b));
                if !covered {
                    out.push_str(&format!("  n{i} -> n{j};\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}
