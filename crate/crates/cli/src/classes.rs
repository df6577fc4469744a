use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use coxcess::excess::{class_census, class_descriptors, split_tag_of, ClassLabel, SplitTag};
use coxcess::reps::{corresponding_element_a, length_formulas, w_lambda_rho, MaximalPartition, MaximalSplitPartition};
use coxcess::roots::length_a;
use coxcess::{SignedCycleType, SignedPermutation};

use crate::table::Table;
use crate::{degree, to_json, CliError, CliResult, Ctx, Format, Report, TypeArg};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GroupInfo {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ClassesDoc {
    pub group: GroupInfo,
    pub classes: Vec<ClassRow>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassRow {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    #[serde(rename = "min_len_A", default, skip_serializing_if = "Option::is_none")]
    pub min_len_a: Option<usize>,
    #[serde(rename = "max_len_A", default, skip_serializing_if = "Option::is_none")]
    pub max_len_a: Option<usize>,
    #[serde(rename = "min_len_B", default, skip_serializing_if = "Option::is_none")]
    pub min_len_b: Option<usize>,
    #[serde(rename = "max_len_B", default, skip_serializing_if = "Option::is_none")]
    pub max_len_b: Option<usize>,
    #[serde(rename = "min_len_D", default, skip_serializing_if = "Option::is_none")]
    pub min_len_d: Option<usize>,
    #[serde(rename = "max_len_D", default, skip_serializing_if = "Option::is_none")]
    pub max_len_d: Option<usize>,
    /// The displayed closed form for the maximal D-length, which runs `2n`
    /// above the true value.
    #[serde(rename = "max_len_D_printed", default, skip_serializing_if = "Option::is_none")]
    pub max_len_d_printed: Option<usize>,
    pub rep_uc: String,
    pub rep_wlr: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brute_min_len: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brute_max_len: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formulas_match: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub excess_histogram: Option<BTreeMap<usize, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub all_max_zero_excess: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
}

pub(crate) fn histogram_text(h: &BTreeMap<usize, usize>) -> String {
    h.iter().map(|(e, c)| format!("{e}:{c}")).collect::<Vec<_>>().join(" ")
}

impl ClassRow {
    fn cells(&self) -> Vec<(&'static str, Option<String>)> {
        let num = |v: Option<usize>| v.map(|x| x.to_string());
        vec![
            ("label", Some(self.label.clone())),
            ("size", num(self.size)),
            ("min_len_A", num(self.min_len_a)),
            ("max_len_A", num(self.max_len_a)),
            ("min_len_B", num(self.min_len_b)),
            ("max_len_B", num(self.max_len_b)),
            ("min_len_D", num(self.min_len_d)),
            ("max_len_D", num(self.max_len_d)),
            ("max_len_D_printed", num(self.max_len_d_printed)),
            ("rep_uc", Some(self.rep_uc.clone())),
            ("rep_wlr", Some(self.rep_wlr.clone())),
            ("brute_min_len", num(self.brute_min_len)),
            ("brute_max_len", num(self.brute_max_len)),
            ("formulas_match", self.formulas_match.map(|b| b.to_string())),
            ("max_count", num(self.max_count)),
            ("excess_histogram", self.excess_histogram.as_ref().map(histogram_text)),
            ("all_max_zero_excess", self.all_max_zero_excess.map(|b| b.to_string())),
            ("status", self.status.clone()),
        ]
    }
}

enum Filter {
    Partition(Vec<usize>),
    Signed(SignedCycleType),
}

fn parse_filter(ty: TypeArg, n: usize, text: &str) -> CliResult<Filter> {
    let filter = if ty == TypeArg::A {
        let mut parts = text
            .split(',')
            .map(|p| p.trim().parse::<usize>().ok().filter(|&v| v > 0))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| CliError::Usage(format!("bad partition {text:?}")))?;
        parts.sort_by(|a, b| b.cmp(a));
        if parts.iter().sum::<usize>() != n {
            return Err(CliError::Usage(format!("{text:?} is not a partition of {n}")));
        }
        Filter::Partition(parts)
    } else {
        let ct: SignedCycleType = text.parse()?;
        if ct.rank() != n {
            return Err(CliError::Usage(format!("class {text:?} has rank {}, not {n}", ct.rank())));
        }
        Filter::Signed(ct)
    };
    Ok(filter)
}

pub(crate) fn rows(ctx: &Ctx, ty: TypeArg, n: usize, filter: Option<&str>) -> CliResult<Vec<ClassRow>> {
    let filter = filter.map(|f| parse_filter(ty, n, f)).transpose()?;
    let mut out = Vec::new();
    for desc in class_descriptors(ty.classical(), n)? {
        let keep = match (&filter, &desc.label) {
            (None, _) => true,
            (Some(Filter::Partition(p)), ClassLabel::Partition(q)) => p == q,
            (Some(Filter::Signed(c)), ClassLabel::Signed(d, _)) => c == d,
            _ => false,
        };
        if !keep {
            continue;
        }
        let uc = desc.minimal_representative();
        let mut row = match &desc.label {
            ClassLabel::Partition(parts) => {
                let w = corresponding_element_a(&MaximalPartition::normalize(parts)?);
                ClassRow {
                    label: desc.to_string(),
                    min_len_a: Some(n - parts.len()),
                    max_len_a: Some(length_a(&w)?),
                    rep_uc: uc.to_string(),
                    rep_wlr: w.to_string(),
                    ..ClassRow::default()
                }
            }
            ClassLabel::Signed(ct, tag) => {
                let f = length_formulas(ct);
                let mut w = w_lambda_rho(&MaximalSplitPartition::from_cycle_type(ct));
                if matches!(tag, SplitTag::Plus | SplitTag::Minus) && split_tag_of(&w) != Some(*tag) {
                    w = w.conjugate_by(&SignedPermutation::sign_change(n, n));
                }
                let in_d = ct.in_type_d();
                ClassRow {
                    label: desc.to_string(),
                    min_len_b: Some(f.min_b),
                    max_len_b: Some(f.max_b),
                    min_len_d: in_d.then_some(f.min_d),
                    max_len_d: in_d.then_some(f.max_d),
                    max_len_d_printed: (ty == TypeArg::D).then_some(f.max_d_printed),
                    rep_uc: uc.to_string(),
                    rep_wlr: w.to_string(),
                    ..ClassRow::default()
                }
            }
        };
        if ctx.exhaustive {
            match class_census(&desc, &ctx.budget, ctx.exec) {
                Ok(c) => {
                    let expected = match ty {
                        TypeArg::A => (row.min_len_a, row.max_len_a),
                        TypeArg::B => (row.min_len_b, row.max_len_b),
                        TypeArg::D => (row.min_len_d, row.max_len_d),
                    };
                    row.size = Some(c.size);
                    row.brute_min_len = Some(c.min_length);
                    row.brute_max_len = Some(c.max_length);
                    row.formulas_match = Some(expected == (Some(c.min_length), Some(c.max_length)));
                    row.max_count = Some(c.max_count);
                    row.all_max_zero_excess = Some(c.all_max_zero());
                    row.excess_histogram = Some(c.histogram);
                }
                Err(coxcess::Error::Budget { .. }) => row.status = Some("skipped(budget)".into()),
                Err(e) => return Err(e.into()),
            }
        }
        out.push(row);
    }
    if out.is_empty() {
        return Err(CliError::Usage("no class matches the filter".into()));
    }
    Ok(out)
}

const EXPLAIN: &str = "\
minB = minL + v and minD = minL, where minL = n - z + 2 sum_{i<v} (v - i) l_i over the v negative cycle
lengths in ascending order and z is the number of cycles.
maxB = n^2 - minL' - v' and maxD = n^2 - n - minL', where ' is the dual type (odd cycles change sign).
max_len_D_printed = n^2 + n - minL' is the displayed closed form; it exceeds maxD by 2n.
rep_uc has minimal length in its class, rep_wlr maximal length.
";

pub fn run(ctx: &Ctx, ty: TypeArg, rank: usize, filter: Option<&str>) -> CliResult<Report> {
    let n = degree(ty, rank)?;
    let classes = rows(ctx, ty, n, filter)?;
    let code = i32::from(classes.iter().any(|r| r.formulas_match == Some(false)));
    let doc = ClassesDoc {
        group: GroupInfo {
            ty: format!("{ty:?}"),
            rank,
        },
        classes,
    };
    let table = Table::new(doc.classes.iter().map(ClassRow::cells).collect());
    let stdout = match ctx.format {
        Format::Json => to_json(&doc),
        Format::Csv => table.csv(),
        Format::Human => {
            let group = if ty == TypeArg::A { format!("A{rank} (S_{n})") } else { format!("{ty:?}{rank}") };
            let mut s = format!("{group}: {} classes\n", table.len());
            s += &table.human();
            if ctx.explain {
                s += "\n";
                s += EXPLAIN;
            }
            s
        }
    };
    Ok(Report { stdout, code })
}
