//! Deterministic rendering of command payloads as JSON, markdown or a
//! plain operation-table layout.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Value};

use rclkit::aggregation::OperationTable;
use rclkit::approx::{AxiomReport, RclStructure, RoughObject, RoughOrderReport};
use rclkit::bias::BiasReport;
use rclkit::granular::{Dependence, SetRcl, SgrclReport};
use rclkit::laws::LawFlags;
use rclkit::negation::UnaryTable;
use rclkit::search::ClaimResult;
use rclkit::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
    TextTable,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Markdown => "markdown",
            Format::TextTable => "text-table",
        }
    }
}

/// A titled law battery, e.g. the laws of one implication.
pub struct LawSection<'a> {
    pub title: String,
    pub flags: &'a LawFlags,
    /// Laws whose failure counts as a violation of the suite.
    pub asserted: Vec<&'static str>,
}

pub struct RoughView<'a> {
    pub structure: &'a RclStructure,
    pub objects: &'a [RoughObject],
    pub order: &'a RoughOrderReport,
    pub interval_defect: Option<(usize, String)>,
}

pub struct DependenceView<'a> {
    pub set: &'a SetRcl,
    pub x: &'a rclkit::bits::BitSet,
    pub z: &'a rclkit::bits::BitSet,
    pub dependence: &'a Dependence,
}

pub enum Payload<'a> {
    Table(&'a OperationTable),
    /// Rows of unary operations over the same carrier, e.g. `¬` and `~`.
    Unary(Vec<(&'a str, &'a UnaryTable)>),
    Axioms(&'a AxiomReport),
    Laws(Vec<LawSection<'a>>),
    Rough(RoughView<'a>),
    Bias(&'a BiasReport),
    Claim(&'a ClaimResult),
    Sgrcl(&'a SetRcl, &'a SgrclReport),
    Dependence(DependenceView<'a>),
    Json(Value),
}

fn unsupported(f: Format) -> Error {
    Error::UnsupportedFormat(f.name().to_string())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

pub fn render_report(p: &Payload, f: Format) -> Result<String> {
    match p {
        Payload::Table(t) => table(t, f),
        Payload::Unary(rows) => unary(rows, f),
        Payload::Axioms(r) => axioms(r, f),
        Payload::Laws(sections) => laws(sections, f),
        Payload::Rough(v) => rough(v, f),
        Payload::Bias(r) => bias(r, f),
        Payload::Claim(r) => claim(r, f),
        Payload::Sgrcl(s, r) => sgrcl(s, r, f),
        Payload::Dependence(v) => dependence(v, f),
        Payload::Json(v) => match f {
            Format::Json => Ok(pretty(v)),
            other => Err(unsupported(other)),
        },
    }
}

fn table(t: &OperationTable, f: Format) -> Result<String> {
    let names = t.lattice().names();
    let rows = t.name_rows();
    let symbol = t.kind().symbol();
    Ok(match f {
        Format::Json => pretty(&json!({
            "operation": t.kind(),
            "symbol": symbol,
            "elements": names,
            "rows": rows,
        })),
        Format::TextTable => {
            let mut s = format!("{symbol} | {}\n", names.join(" "));
            for (name, row) in names.iter().zip(&rows) {
                let _ = writeln!(s, "{name}: {}", row.join(" "));
            }
            s
        }
        Format::Markdown => {
            let mut s = format!("| {symbol} | {} |\n", names.join(" | "));
            let _ = writeln!(s, "|---|{}", "---|".repeat(names.len()));
            for (name, row) in names.iter().zip(&rows) {
                let _ = writeln!(s, "| {name} | {} |", row.join(" | "));
            }
            s
        }
    })
}

fn unary(rows: &[(&str, &UnaryTable)], f: Format) -> Result<String> {
    let Some((_, first)) = rows.first() else {
        return Ok(String::new());
    };
    let names = first.lattice().names();
    Ok(match f {
        Format::Json => {
            let mut values = serde_json::Map::new();
            let mut attained = serde_json::Map::new();
            for (sym, t) in rows {
                values.insert(sym.to_string(), json!(t.names()));
                if let Some(a) = t.attained() {
                    attained.insert(sym.to_string(), json!(a));
                }
            }
            pretty(&json!({ "elements": names, "rows": values, "attained": attained }))
        }
        Format::TextTable => {
            let mut s = format!("Neg | {}\n", names.join(" "));
            for (sym, t) in rows {
                let _ = writeln!(s, "{sym}: {}", t.names().join(" "));
            }
            s
        }
        Format::Markdown => {
            let mut s = format!("| Neg | {} |\n", names.join(" | "));
            let _ = writeln!(s, "|---|{}", "---|".repeat(names.len()));
            for (sym, t) in rows {
                let _ = writeln!(s, "| {sym} | {} |", t.names().join(" | "));
            }
            let unattained: Vec<String> = rows
                .iter()
                .flat_map(|(sym, t)| {
                    let l = t.lattice();
                    t.attained()
                        .unwrap_or(&[])
                        .iter()
                        .enumerate()
                        .filter(|(_, ok)| !**ok)
                        .map(move |(a, _)| format!("{sym}{}", l.name(a)))
                        .collect::<Vec<_>>()
                })
                .collect();
            if !unattained.is_empty() {
                let _ = writeln!(s, "\nunattained: {}", unattained.join(", "));
            }
            s
        }
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn axioms(r: &AxiomReport, f: Format) -> Result<String> {
    match f {
        Format::Json => Ok(pretty(&serde_json::to_value(r)?)),
        Format::TextTable => Err(unsupported(f)),
        Format::Markdown => {
            let mut s = String::from("# Approximation axioms\n\n");
            let _ = writeln!(s, "core: {}  \nrcl: {}\n", yes(r.is_core), yes(r.is_rcl));
            s.push_str("| axiom | statement | result | violations |\n|---|---|---|---|\n");
            for st in &r.statuses {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} |",
                    st.axiom,
                    st.formula,
                    if st.passed { "pass" } else { "FAIL" },
                    st.violations
                );
            }
            s.push_str("\n## Violations\n\n");
            let failures: Vec<_> = r.failures().collect();
            if failures.is_empty() {
                s.push_str("violations: none\n");
            }
            for st in failures {
                let w: Vec<String> = st.witnesses.iter().map(|w| w.to_string()).collect();
                let _ = writeln!(s, "- {}: {}", st.axiom, w.join(" "));
            }
            Ok(s)
        }
    }
}

fn laws(sections: &[LawSection], f: Format) -> Result<String> {
    match f {
        Format::Json => {
            let v: Vec<Value> = sections
                .iter()
                .map(|sec| {
                    json!({
                        "title": sec.title,
                        "asserted": sec.asserted,
                        "results": sec.flags.results,
                        "notes": sec.flags.notes,
                    })
                })
                .collect();
            Ok(pretty(&Value::Array(v)))
        }
        Format::TextTable => Err(unsupported(f)),
        Format::Markdown => {
            let mut s = String::new();
            for sec in sections {
                let _ = writeln!(s, "# {}\n", sec.title);
                s.push_str("| law | statement | result | violations |\n|---|---|---|---|\n");
                for r in &sec.flags.results {
                    let mark = if sec.asserted.contains(&r.law.as_str()) {
                        ""
                    } else {
                        " (info)"
                    };
                    let _ = writeln!(
                        s,
                        "| {}{} | {} | {} | {} |",
                        r.law,
                        mark,
                        r.statement,
                        if r.passed { "pass" } else { "FAIL" },
                        r.violations
                    );
                }
                for note in &sec.flags.notes {
                    let _ = writeln!(s, "\nnote: {note}");
                }
                s.push_str("\n## Violations\n\n");
                let failures: Vec<_> = sec.flags.failures().collect();
                if failures.is_empty() {
                    s.push_str("violations: none\n");
                }
                for r in failures {
                    let w: Vec<String> = r.witnesses.iter().map(|w| w.to_string()).collect();
                    let _ = writeln!(s, "- {}: {}", r.law, w.join(" "));
                }
                s.push('\n');
            }
            Ok(s)
        }
    }
}

fn object_json(s: &RclStructure, o: &RoughObject) -> Value {
    let l = s.lattice();
    json!({
        "lower": o.lower_end.map(|x| l.name(x)),
        "upper": o.upper_end.map(|x| l.name(x)),
        "members": o.members.iter().map(|x| l.name(x)).collect::<Vec<_>>(),
    })
}

fn rough(v: &RoughView, f: Format) -> Result<String> {
    let l = v.structure.lattice();
    let interval_name = |i: Option<usize>| {
        i.map(|i| {
            let o = &v.order.objects[i];
            format!("({},{})", l.name(o.lower_end.unwrap()), l.name(o.upper_end.unwrap()))
        })
    };
    match f {
        Format::Json => Ok(pretty(&json!({
            "objects": v.objects.iter().map(|o| object_json(v.structure, o)).collect::<Vec<_>>(),
            "interval_representation": match &v.interval_defect {
                None => json!("holds"),
                Some((x, why)) => json!({ "element": l.name(*x), "reason": why }),
            },
            "rough_order": {
                "partial_order": v.order.reflexive && v.order.antisymmetric && v.order.transitive,
                "least": interval_name(v.order.least),
                "greatest": interval_name(v.order.greatest),
                "bottom_pair_is_least": v.order.bottom_pair_is_least,
                "top_pair_is_greatest": v.order.top_pair_is_greatest,
                "missing_meets": v.order.missing_meets.len(),
                "missing_joins": v.order.missing_joins.len(),
            },
        }))),
        Format::TextTable => Err(unsupported(f)),
        Format::Markdown => {
            let mut s = String::from("# Rough objects\n\n| lower | upper | members |\n|---|---|---|\n");
            for o in v.objects {
                let name = |x: Option<usize>| x.map_or("-".to_string(), |x| l.name(x).to_string());
                let members: Vec<&str> = o.members.iter().map(|x| l.name(x)).collect();
                let _ = writeln!(
                    s,
                    "| {} | {} | {} |",
                    name(o.lower_end),
                    name(o.upper_end),
                    members.join(", ")
                );
            }
            s.push_str("\n## Interval representation\n\n");
            match &v.interval_defect {
                None => s.push_str("holds\n"),
                Some((x, why)) => {
                    let _ = writeln!(s, "fails at {}: {why}", l.name(*x));
                }
            }
            let o = v.order;
            let _ = write!(
                s,
                "\n## Rough order\n\npartial order: {}  \nleast: {}  \ngreatest: {}  \n(⊥,⊥) least: {}  \n(⊤,⊤) greatest: {}  \nmissing meets: {}  \nmissing joins: {}\n",
                yes(o.reflexive && o.antisymmetric && o.transitive),
                interval_name(o.least).unwrap_or_else(|| "none".into()),
                interval_name(o.greatest).unwrap_or_else(|| "none".into()),
                yes(o.bottom_pair_is_least),
                yes(o.top_pair_is_greatest),
                o.missing_meets.len(),
                o.missing_joins.len()
            );
            Ok(s)
        }
    }
}

fn bias(r: &BiasReport, f: Format) -> Result<String> {
    match f {
        Format::Json => Ok(pretty(&serde_json::to_value(r)?)),
        Format::TextTable => Err(unsupported(f)),
        Format::Markdown => {
            let mut s = format!("# Bias audit\n\nreading: {}\n\n", r.reading);
            s.push_str("| i | C | E | F | C·F | C⊗F | E·F | E⊗F | |F(C·F)| | |F(C⊗F)| | |F(E·F)| | |F(E⊗F)| |\n");
            s.push_str(&format!("|{}\n", "---|".repeat(12)));
            for c in &r.cases {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                    c.index,
                    c.c,
                    c.e,
                    c.f,
                    c.c_cca_f,
                    c.c_oa_f,
                    c.e_cca_f,
                    c.e_oa_f,
                    c.card_c_cca_f,
                    c.card_c_oa_f,
                    c.card_e_cca_f,
                    c.card_e_oa_f
                );
            }
            let _ = writeln!(s, "\nflat: {}", r.flat);
            match &r.sharp {
                Some(v) => {
                    let _ = writeln!(s, "sharp: {v}");
                }
                None => s.push_str("sharp: undefined\n"),
            }
            if !r.degenerate.is_empty() {
                let d: Vec<String> = r.degenerate.iter().map(|i| i.to_string()).collect();
                let _ = writeln!(s, "degenerate cases: {}", d.join(", "));
            }
            if r.skipped_degenerate {
                s.push_str("sharp averaged over non-degenerate cases only\n");
            }
            Ok(s)
        }
    }
}

fn claim(r: &ClaimResult, f: Format) -> Result<String> {
    match f {
        Format::Json => Ok(r.to_json()),
        Format::TextTable => Err(unsupported(f)),
        Format::Markdown => {
            let status = serde_json::to_value(r.status)?;
            let mut s = format!(
                "# Claim {}\n\nstatement: {}  \nstatus: {}  \nsearched sizes: 1..={}  \nlattices: {}  \nstructures: {}  \nviolating structures: {}  \nviolations: {}\n",
                r.claim,
                r.statement,
                status.as_str().unwrap_or_default(),
                r.searched_max_size,
                r.counts.lattices,
                r.counts.structures,
                r.counts.violating_structures,
                r.counts.violations
            );
            if let Some(a) = &r.attainment {
                let _ = write!(
                    s,
                    "\n## Negation attainment\n\nviolations at unattained ¬: {}  \nviolations at attained ¬: {}  \nstructures with unattained ¬: {}\n",
                    a.violations_with_unattained_negation,
                    a.violations_with_attained_negation,
                    a.structures_with_unattained_negation
                );
            }
            if let Some(w) = &r.witness {
                let _ = write!(
                    s,
                    "\n## Witness\n\nsize {}, lattice {}, law {} at ({})\n\n```json\n{}```\n",
                    w.size,
                    w.lattice_index,
                    w.law,
                    w.tuple.join(","),
                    w.structure.to_json()
                );
            }
            Ok(s)
        }
    }
}

fn sgrcl(set: &SetRcl, r: &SgrclReport, f: Format) -> Result<String> {
    let _ = set;
    match f {
        Format::Json => Ok(pretty(&serde_json::to_value(r)?)),
        Format::TextTable => Err(unsupported(f)),
        Format::Markdown => {
            let mut s = String::from("# Granular axioms\n\n| axiom | result | violations |\n|---|---|---|\n");
            let all = [&r.wra, &r.ls, &r.fu];
            for law in all {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} |",
                    law.law,
                    if law.passed { "pass" } else { "FAIL" },
                    law.violations
                );
            }
            s.push_str("\n## Violations\n\n");
            if r.all_pass() {
                s.push_str("violations: none\n");
            }
            for law in all.iter().filter(|l| !l.passed) {
                let w: Vec<String> = law.witnesses.iter().map(|w| format!("({})", w.join(", "))).collect();
                let _ = writeln!(s, "- {}: {}", law.law, w.join(" "));
            }
            Ok(s)
        }
    }
}

fn dependence(v: &DependenceView, f: Format) -> Result<String> {
    let lit = |b: &rclkit::bits::BitSet| v.set.literal(b);
    let d = v.dependence;
    let opt = |b: &Option<rclkit::bits::BitSet>| b.as_ref().map(&lit);
    let cca = lit(&v.set.cca(v.x, v.z));
    let reading = serde_json::to_value(d.reading)?;
    match f {
        Format::Json => Ok(pretty(&json!({
            "reading": reading,
            "x": lit(v.x),
            "z": lit(v.z),
            "common_granular_part": lit(&d.common),
            "beta_i": opt(&d.beta_i),
            "beta_s": opt(&d.beta_s),
            "attained_i": d.attained_i,
            "attained_s": d.attained_s,
            "cca": cca,
        }))),
        Format::TextTable => Err(unsupported(f)),
        Format::Markdown => Ok(format!(
            "# Rough dependence\n\nreading: {}  \nx: {}  \nz: {}  \ncommon granular part: {}  \nβ_i: {}  \nβ_s: {}  \nx·z: {}\n",
            reading.as_str().unwrap_or_default(),
            lit(v.x),
            lit(v.z),
            lit(&d.common),
            opt(&d.beta_i).unwrap_or_else(|| "none".into()),
            opt(&d.beta_s).unwrap_or_else(|| "none".into()),
            cca
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rclkit::aggregation::{operation_table, AggregationOp};
    use rclkit::approx::worked_example;

    #[test]
    fn cca_text_table_first_row() {
        let s = worked_example();
        let t = operation_table(&s, AggregationOp::Cca);
        let text = render_report(&Payload::Table(&t), Format::TextTable).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("· | ⊥ ⊤ a b c e f"));
        assert_eq!(lines.next(), Some("⊥: ⊥ ⊥ ⊥ ⊥ ⊥ ⊥ ⊥"));
    }

    #[test]
    fn empty_failures_say_none() {
        let s = RclStructure::identity(worked_example().lattice_arc().clone());
        let text = render_report(&Payload::Axioms(s.axiom_report()), Format::Markdown).unwrap();
        assert!(text.contains("## Violations\n\nviolations: none\n"));
    }

    #[test]
    fn text_table_is_only_for_tables() {
        let s = worked_example();
        assert_eq!(
            render_report(&Payload::Axioms(s.axiom_report()), Format::TextTable),
            Err(Error::UnsupportedFormat("text-table".into()))
        );
    }
}
