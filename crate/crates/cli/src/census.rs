use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use coxcess::coxgen::{full_group_sweep, AnyGroup, CoxeterMatrix, FiniteCoxeterGroup};

use crate::classes::{histogram_text, GroupInfo};
use crate::table::Table;
use crate::{to_json, CliError, CliResult, Ctx, Format, Report};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub label: String,
    /// A reduced word for the smallest-index class member, 1-based.
    pub representative: String,
    pub size: usize,
    pub element_order: usize,
    pub min_len: usize,
    pub max_len: usize,
    pub max_count: usize,
    pub excess_histogram: BTreeMap<usize, usize>,
    pub all_max_zero_excess: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CensusDoc {
    pub group: GroupInfo,
    pub order: usize,
    pub classes: Vec<CensusRow>,
}

/// Strips right descents down to the identity.
pub(crate) fn reduced_word<G: FiniteCoxeterGroup + ?Sized>(g: &G, mut x: usize) -> Vec<usize> {
    let mut word = Vec::new();
    while x != g.identity() {
        let i = (0..g.rank())
            .find(|&i| g.length(g.mul(x, g.generator(i))) < g.length(x))
            .expect("non-identity elements have a descent");
        word.push(i + 1);
        x = g.mul(x, g.generator(i));
    }
    word.reverse();
    word
}

pub(crate) fn word_text(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

pub(crate) fn load_group(ctx: &Ctx, preset: Option<&str>, matrix: Option<&Path>) -> CliResult<AnyGroup> {
    let mut budget = ctx.budget;
    if ctx.big {
        budget.max_group_order = budget.max_group_order.max(3_000_000);
    }
    Ok(match (preset, matrix) {
        (Some(name), None) => AnyGroup::from_preset(name, &budget)?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let m = CoxeterMatrix::parse(&text)?;
            let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("W");
            AnyGroup::from_matrix(name, &m, &budget)?
        }
        _ => return Err(CliError::Usage("give exactly one of a preset name or --matrix".into())),
    })
}

pub fn run(ctx: &Ctx, preset: Option<&str>, matrix: Option<&Path>) -> CliResult<Report> {
    let g = load_group(ctx, preset, matrix)?;
    let mut budget = ctx.budget;
    budget.max_class_size = budget.max_class_size.max(g.order() as u64);
    let census = full_group_sweep(&g, &budget, ctx.exec)?;
    let classes: Vec<CensusRow> = census
        .iter()
        .enumerate()
        .map(|(k, c)| CensusRow {
            label: format!("c{}", k + 1),
            representative: word_text(&reduced_word(&g, c.representative)),
            size: c.size,
            element_order: c.element_order,
            min_len: c.min_length,
            max_len: c.max_length,
            max_count: c.max_count,
            excess_histogram: c.histogram.clone(),
            all_max_zero_excess: c.all_max_zero(),
        })
        .collect();
    let holds = census.iter().all(|c| c.theorem_holds());
    let doc = CensusDoc {
        group: GroupInfo {
            ty: g.name(),
            rank: g.rank(),
        },
        order: g.order(),
        classes,
    };
    let table = Table::new(
        doc.classes
            .iter()
            .map(|r| {
                vec![
                    ("label", Some(r.label.clone())),
                    ("size", Some(r.size.to_string())),
                    ("order", Some(r.element_order.to_string())),
                    ("min_len", Some(r.min_len.to_string())),
                    ("max_len", Some(r.max_len.to_string())),
                    ("max_count", Some(r.max_count.to_string())),
                    ("excess_histogram", Some(histogram_text(&r.excess_histogram))),
                    ("all_max_zero_excess", Some(r.all_max_zero_excess.to_string())),
                    ("representative", Some(r.representative.clone())),
                ]
            })
            .collect(),
    );
    let stdout = match ctx.format {
        Format::Json => to_json(&doc),
        Format::Csv => table.csv(),
        Format::Human => {
            let exceptional = doc.classes.iter().filter(|r| !r.all_max_zero_excess).count();
            format!(
                "{}: order {}, {} classes, zero-excess maximum in every class: {}, classes with a nonzero-excess maximum: {}\n{}",
                doc.group.ty,
                doc.order,
                doc.classes.len(),
                if holds { "yes" } else { "NO" },
                exceptional,
                table.human()
            )
        }
    };
    Ok(Report {
        stdout,
        code: i32::from(!holds),
    })
}
