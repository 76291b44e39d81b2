//! Report rendering. JSON reports carry a top-level `schema: 1` field and
//! are deterministic for a fixed input.

use serde_json::{json, Map, Value};

use hh1::criteria::{CriterionVerdict, FullAnalysis};
use hh1::pipeline::Analysis;

pub fn algebra_block(a: &Analysis) -> Value {
    json!({
        "field": a.pres.field.to_string(),
        "dim": a.dim_algebra(),
        "graded": a.graded.is_some(),
        "ext_matrix": a.ext.pairs,
    })
}

fn lie_block(a: &Analysis) -> Value {
    json!({
        "derived_dims": a.series.derived_dims,
        "lcs_dims": a.series.lcs_dims,
        "solvable": a.series.solvable,
        "strongly_solvable": a.series.strongly_solvable,
        "nilpotent": a.series.nilpotent,
        "perfect": a.series.perfect,
        "abelian": a.series.abelian,
        "center_dim": a.series.center_dim,
    })
}

fn hh1_block(a: &Analysis) -> Value {
    let mut m = Map::new();
    m.insert("dim".into(), json!(a.hh1.dim));
    m.insert("rad_dim".into(), json!(a.rad.dim));
    m.insert("rad_equals_full".into(), json!(a.rad.rad_equals_full));
    if let Some(dims) = a.graded_dims() {
        m.insert("graded_dims".into(), json!(dims));
    }
    m.insert("representatives".into(), json!(a.rep_labels()));
    Value::Object(m)
}

fn sigma_block(a: &Analysis) -> Value {
    json!({
        "0": a.sigma_display(0),
        "1": a.sigma_display(1),
        "2": a.sigma_display(2),
    })
}

pub fn basis_text(a: &Analysis) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "algebra over {} of dimension {}\n",
        a.pres.field,
        a.dim_algebra()
    ));
    for (i, group) in a.basis.by_length.iter().enumerate() {
        let words: Vec<String> = group
            .iter()
            .map(|p| a.pres.quiver.path_display(p))
            .collect();
        out.push_str(&format!("B_{i} ({}): {}\n", group.len(), words.join(", ")));
    }
    out
}

pub fn basis_json(a: &Analysis) -> String {
    let degrees: Vec<Vec<String>> = a
        .basis
        .by_length
        .iter()
        .map(|g| g.iter().map(|p| a.pres.quiver.path_display(p)).collect())
        .collect();
    json!({
        "schema": 1,
        "algebra": algebra_block(a),
        "basis": { "by_degree": degrees },
    })
    .to_string()
}

pub fn hh1_text(a: &Analysis) -> String {
    let mut out = String::new();
    out.push_str(&format!("dim HH1 = {}\n", a.hh1.dim));
    out.push_str(&format!(
        "dim HH1_rad = {} (rad_equals_full: {})\n",
        a.rad.dim, a.rad.rad_equals_full
    ));
    if let Some(dims) = a.graded_dims() {
        out.push_str(&format!("graded piece dims by target length: {dims:?}\n"));
    }
    out.push_str("representatives:\n");
    for label in a.rep_labels() {
        out.push_str(&format!("  {label}\n"));
    }
    out
}

pub fn hh1_json(a: &Analysis) -> String {
    json!({
        "schema": 1,
        "algebra": algebra_block(a),
        "hh1": hh1_block(a),
    })
    .to_string()
}

pub fn bracket_text(a: &Analysis) -> String {
    let mut out = String::new();
    out.push_str(&format!("Lie algebra of dimension {}\n", a.lie.dim));
    for (i, label) in a.lie.labels.iter().enumerate() {
        out.push_str(&format!("  v{} = {label}\n", i + 1));
    }
    for i in 0..a.lie.dim {
        for j in (i + 1)..a.lie.dim {
            let terms: Vec<String> = a.lie.table[i][j]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| {
                    if c.is_one() {
                        format!("v{}", k + 1)
                    } else {
                        format!("{c}*v{}", k + 1)
                    }
                })
                .collect();
            let rhs = if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            };
            out.push_str(&format!("[v{}, v{}] = {rhs}\n", i + 1, j + 1));
        }
    }
    out
}

pub fn bracket_json(a: &Analysis) -> String {
    let table: Vec<Vec<Vec<String>>> = a
        .lie
        .table
        .iter()
        .map(|row| {
            row.iter()
                .map(|entry| entry.iter().map(|c| c.to_string()).collect())
                .collect()
        })
        .collect();
    json!({
        "schema": 1,
        "lie": {
            "dim": a.lie.dim,
            "labels": a.lie.labels,
            "table": table,
        },
    })
    .to_string()
}

pub fn sigma_text(a: &Analysis, i: usize) -> String {
    let members = a.sigma_display(i);
    let overlap = a.sigma_im_overlap(i);
    let note = if overlap > 0 {
        format!("  (Im delta0 touches {overlap} coordinate(s) of target length {i})")
    } else {
        String::new()
    };
    if members.is_empty() {
        format!("Sigma_{i} is empty{note}\n")
    } else {
        format!("Sigma_{i} = {{{}}}{note}\n", members.join(", "))
    }
}

pub fn sigma_json(a: &Analysis, i: usize) -> String {
    json!({
        "schema": 1,
        "sigma": { i.to_string(): a.sigma_display(i) },
    })
    .to_string()
}

pub fn criteria_text(verdicts: &[CriterionVerdict]) -> String {
    let mut out = String::new();
    for v in verdicts {
        let status = if !v.applicable {
            "n/a  "
        } else if v.fires {
            "FIRES"
        } else {
            "-    "
        };
        out.push_str(&format!("{status} {:28} => {:?}", v.id, v.conclusion));
        if let Some(w) = &v.witness {
            out.push_str(&format!("  ({w})"));
        }
        out.push('\n');
    }
    out
}

pub fn criteria_json(verdicts: &[CriterionVerdict]) -> String {
    json!({
        "schema": 1,
        "criteria": verdicts,
    })
    .to_string()
}

pub fn analyze_value(fa: &FullAnalysis) -> Value {
    let a = &fa.analysis;
    let mut m = Map::new();
    m.insert("schema".into(), json!(1));
    m.insert("algebra".into(), algebra_block(a));
    m.insert("hh1".into(), hh1_block(a));
    m.insert("lie".into(), lie_block(a));
    m.insert("sigma".into(), sigma_block(a));
    m.insert(
        "criteria".into(),
        serde_json::to_value(&fa.verdicts).expect("serialize"),
    );
    if let Some(cmp) = &fa.oracle {
        m.insert(
            "oracle".into(),
            json!({
                "dim": cmp.report.dim_hh1,
                "flags": {
                    "solvable": cmp.report.series.solvable,
                    "strongly_solvable": cmp.report.series.strongly_solvable,
                    "nilpotent": cmp.report.series.nilpotent,
                    "perfect": cmp.report.series.perfect,
                    "abelian": cmp.report.series.abelian,
                    "rad_equals_full": cmp.report.rad_equals_full,
                },
                "agree": cmp.agree,
            }),
        );
    }
    Value::Object(m)
}

pub fn analyze_json(fa: &FullAnalysis) -> String {
    analyze_value(fa).to_string()
}

pub fn analyze_text(fa: &FullAnalysis) -> String {
    let a = &fa.analysis;
    let mut out = String::new();
    out.push_str(&format!(
        "algebra: dim {} over {}, {}\n",
        a.dim_algebra(),
        a.pres.field,
        if a.graded.is_some() {
            "graded by length"
        } else {
            "not graded"
        }
    ));
    out.push_str(&format!(
        "ext quiver: loops {:?}, pair counts {:?}\n",
        a.ext.loops, a.ext.pairs
    ));
    out.push_str(&hh1_text(a));
    out.push_str(&format!(
        "lie: derived dims {:?}, lcs dims {:?}\n",
        a.series.derived_dims, a.series.lcs_dims
    ));
    out.push_str(&format!(
        "flags: solvable={} strongly_solvable={} nilpotent={} perfect={} abelian={} center_dim={}\n",
        a.series.solvable,
        a.series.strongly_solvable,
        a.series.nilpotent,
        a.series.perfect,
        a.series.abelian,
        a.series.center_dim
    ));
    for i in 0..=2 {
        out.push_str(&sigma_text(a, i));
    }
    out.push_str("criteria:\n");
    out.push_str(&criteria_text(&fa.verdicts));
    if let Some(cmp) = &fa.oracle {
        out.push_str(&format!(
            "oracle: dim HH1 = {}, dim Der = {}, dim Inn = {}, agree = {}\n",
            cmp.report.dim_hh1, cmp.report.dim_der, cmp.report.dim_inn, cmp.agree
        ));
        if !cmp.agree {
            for miss in &cmp.mismatches {
                out.push_str(&format!("  mismatch: {miss}\n"));
            }
        }
    }
    out
}
