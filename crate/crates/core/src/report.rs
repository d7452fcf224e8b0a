//! Machine (key-sorted JSON) and human (aligned table) reports.

use serde_json::{json, Map, Value};

use crate::antipode::{PropositionVerdict, RelativeAntipodeReport};
use crate::linalg::SparseVec;
use crate::structures::{AxiomEntry, AxiomReport, FlagSet, Verdict, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureInfo {
    pub kind: String,
    pub dim: usize,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodeSection {
    pub strict: Option<AxiomReport>,
    pub relative: Option<RelativeAntipodeReport>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub structure: StructureInfo,
    pub flags: Option<FlagSet>,
    pub axioms: AxiomReport,
    pub antipode: Option<AntipodeSection>,
    pub propositions: Option<Vec<PropositionVerdict>>,
}

fn sparse_json(v: &SparseVec) -> Value {
    Value::Array(v.iter().map(|(i, c)| json!([i, c.to_string()])).collect())
}

fn witness_json(w: &Witness) -> Value {
    json!({
        "indices": w.indices,
        "lhs": sparse_json(&w.lhs),
        "rhs": sparse_json(&w.rhs),
    })
}

fn entry_json(e: &AxiomEntry) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), json!(e.name));
    m.insert("verdict".into(), json!(e.verdict.as_str()));
    m.insert("hypothesis_met".into(), json!(e.hypothesis_met));
    m.insert("skipped".into(), json!(e.skipped));
    if let Some(w) = &e.witness {
        m.insert("witness".into(), witness_json(w));
    }
    Value::Object(m)
}

fn axioms_json(r: &AxiomReport) -> Value {
    Value::Array(r.entries.iter().map(entry_json).collect())
}

fn combined(r: &AxiomReport, names: &[&str]) -> &'static str {
    let ok = names
        .iter()
        .all(|n| r.entry(n).is_some_and(AxiomEntry::passed));
    if ok {
        Verdict::Pass.as_str()
    } else {
        Verdict::Fail.as_str()
    }
}

fn relative_json(r: &RelativeAntipodeReport) -> Value {
    json!({
        "a": combined(&r.axioms, &["commutes_alpha"]),
        "b": combined(&r.axioms, &["unit_preserved", "counit_preserved"]),
        "c": combined(&r.axioms, &["relative_inverse"]),
        "axioms": axioms_json(&r.axioms),
        "k_uniform": r.uniform,
        "k_per_basis": r.per_basis,
    })
}

fn proposition_json(p: &PropositionVerdict) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), json!(p.name));
    m.insert("hypotheses".into(), json!(p.hypotheses));
    m.insert("hypotheses_met".into(), json!(p.hypotheses_met()));
    m.insert("min_exponent".into(), json!(p.min_exponent));
    m.insert("strict".into(), json!(p.strict));
    m.insert("skipped".into(), json!(p.skipped));
    if let Some(w) = &p.witness {
        m.insert("witness".into(), witness_json(w));
    }
    Value::Object(m)
}

impl Report {
    pub fn new(structure: StructureInfo) -> Self {
        Report {
            structure,
            flags: None,
            axioms: AxiomReport::default(),
            antipode: None,
            propositions: None,
        }
    }

    /// True when every axiom with a met hypothesis passes, the relative
    /// antipode conditions pass if they were checked, and every proposition
    /// whose hypotheses hold found an exponent. The strict antipode section
    /// is informational.
    pub fn all_pass(&self) -> bool {
        let antipode_ok = self.antipode.as_ref().is_none_or(|a| {
            a.relative
                .as_ref()
                .is_none_or(RelativeAntipodeReport::passes)
        });
        let props_ok = self.propositions.as_ref().is_none_or(|ps| {
            ps.iter()
                .filter(|p| p.hypotheses_met())
                .all(PropositionVerdict::found)
        });
        self.axioms.all_pass() && antipode_ok && props_ok
    }

    pub fn to_value(&self) -> Value {
        let s = &self.structure;
        let flags = self.flags.map(|f| {
            Value::Object(
                f.as_pairs()
                    .iter()
                    .map(|(k, v)| (k.to_string(), json!(v)))
                    .collect(),
            )
        });
        let antipode = self.antipode.as_ref().map(|a| {
            json!({
                "strict": a.strict.as_ref().map(|r| {
                    if r.all_pass() { "pass" } else { "fail" }
                }),
                "strict_axioms": a.strict.as_ref().map(axioms_json),
                "relative": a.relative.as_ref().map(relative_json),
            })
        });
        let props = self
            .propositions
            .as_ref()
            .map(|ps| Value::Array(ps.iter().map(proposition_json).collect()));
        json!({
            "structure": {"kind": s.kind, "dim": s.dim, "basis": s.basis},
            "flags": flags,
            "axioms": axioms_json(&self.axioms),
            "antipode": antipode,
            "propositions": props,
        })
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let s = &self.structure;
        let mut rows: Vec<[String; 3]> = Vec::new();
        let push_entries = |prefix: &str, r: &AxiomReport, rows: &mut Vec<[String; 3]>| {
            for e in &r.entries {
                let mut note = Vec::new();
                if !e.hypothesis_met {
                    note.push("hypothesis not met".to_string());
                }
                if e.skipped > 0 {
                    note.push(format!("{} tuples truncated", e.skipped));
                }
                if let Some(w) = &e.witness {
                    note.push(format!(
                        "at {}: {} vs {}",
                        fmt_tuple(&w.indices, &s.basis),
                        fmt_sparse(&w.lhs),
                        fmt_sparse(&w.rhs)
                    ));
                }
                rows.push([
                    format!("{prefix}{}", e.name),
                    e.verdict.as_str().into(),
                    note.join("; "),
                ]);
            }
        };
        push_entries("", &self.axioms, &mut rows);
        if let Some(a) = &self.antipode {
            if let Some(r) = &a.strict {
                push_entries("strict.", r, &mut rows);
            }
            if let Some(r) = &a.relative {
                push_entries("relative.", &r.axioms, &mut rows);
                let per: Vec<String> = r
                    .per_basis
                    .iter()
                    .map(|k| k.map_or("-".into(), |k| k.to_string()))
                    .collect();
                rows.push([
                    "relative.k_uniform".into(),
                    r.uniform.map_or("-".into(), |k| k.to_string()),
                    format!("per basis [{}]", per.join(", ")),
                ]);
            }
        }
        if let Some(ps) = &self.propositions {
            for p in ps {
                let mut note = Vec::new();
                if !p.hypotheses_met() {
                    note.push("hypothesis not met".to_string());
                }
                if let Some(strict) = p.strict {
                    note.push(format!("strict {}", if strict { "pass" } else { "fail" }));
                }
                if let Some(w) = &p.witness {
                    note.push(format!("witness {}", fmt_tuple(&w.indices, &s.basis)));
                }
                rows.push([
                    format!("prop.{}", p.name),
                    p.min_exponent.map_or("none".into(), |k| format!("k={k}")),
                    note.join("; "),
                ]);
            }
        }
        let w0 = rows.iter().map(|r| r[0].chars().count()).max().unwrap_or(0);
        let w1 = rows.iter().map(|r| r[1].chars().count()).max().unwrap_or(0);
        let mut out = format!("{} of dimension {}\n", s.kind, s.dim);
        if let Some(f) = &self.flags {
            let on: Vec<&str> = f.as_pairs().iter().filter(|p| p.1).map(|p| p.0).collect();
            out.push_str(&format!("flags: {}\n", on.join(" ")));
        }
        for [a, b, c] in rows {
            let line = format!("{a:<w0$}  {b:<w1$}  {c}");
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Flattened row-major coordinates, `{index: coef, ...}`.
fn fmt_sparse(v: &SparseVec) -> String {
    let items: Vec<String> = v.iter().map(|(i, c)| format!("{i}: {c}")).collect();
    format!("{{{}}}", items.join(", "))
}

fn fmt_tuple(indices: &[usize], basis: &[String]) -> String {
    let names: Vec<&str> = indices.iter().map(|&i| basis[i].as_str()).collect();
    format!("({})", names.join(", "))
}
