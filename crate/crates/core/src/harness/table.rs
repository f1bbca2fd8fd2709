use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::reference::{PaperReference, ReferenceAlgorithm};
use super::{Algorithm, SummaryRow};
use crate::benchmarks::FunctionId;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableFormat {
    #[default]
    Md,
    Csv,
}

/// Scientific notation with three decimals and a signed two-digit
/// exponent, e.g. `5.008E-26`.
pub fn format_sci(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let s = format!("{v:.3e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}E{sign}{:02}", exp.abs())
}

fn cell(v: Option<f64>) -> String {
    v.map(format_sci).unwrap_or_else(|| "N/A".to_string())
}

/// One row per function with measured Ave/Std next to the published
/// Ave/Std of the same algorithm, followed by the published baselines.
pub fn render_table(rows: &[SummaryRow], refs: &PaperReference, format: TableFormat) -> String {
    let algorithms: BTreeSet<Algorithm> = rows.iter().map(|r| r.algorithm).collect();
    let functions: BTreeSet<FunctionId> = rows.iter().map(|r| r.function).collect();
    let by_cell: BTreeMap<(Algorithm, FunctionId), &SummaryRow> = rows
        .iter()
        .map(|r| ((r.algorithm, r.function), r))
        .collect();

    let mut header = vec!["function".to_string()];
    for a in &algorithms {
        let label = a.reference().label();
        header.extend([
            format!("{label} Ave"),
            format!("{label} Std"),
            format!("{label} paper Ave"),
            format!("{label} paper Std"),
        ]);
    }
    for b in ReferenceAlgorithm::BASELINES {
        header.extend([format!("{b} paper Ave"), format!("{b} paper Std")]);
    }

    let body: Vec<Vec<String>> = functions
        .iter()
        .map(|&f| {
            let mut line = vec![f.to_string()];
            for &a in &algorithms {
                match by_cell.get(&(a, f)) {
                    Some(r) => line.extend([
                        format_sci(r.mean),
                        format_sci(r.std),
                        cell(r.paper_mean),
                        cell(r.paper_std),
                    ]),
                    None => {
                        let paper = refs.values(a.reference(), f);
                        line.extend([
                            "-".to_string(),
                            "-".to_string(),
                            cell(paper.map(|p| p.0)),
                            cell(paper.map(|p| p.1)),
                        ]);
                    }
                }
            }
            for b in ReferenceAlgorithm::BASELINES {
                let paper = refs.values(b, f);
                line.extend([cell(paper.map(|p| p.0)), cell(paper.map(|p| p.1))]);
            }
            line
        })
        .collect();

    match format {
        TableFormat::Md => {
            let mut out = String::new();
            let join = |cells: &[String]| format!("| {} |\n", cells.join(" | "));
            out.push_str(&join(&header));
            out.push_str(&join(&vec!["---".to_string(); header.len()]));
            for line in &body {
                out.push_str(&join(line));
            }
            out
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header).expect("in-memory write");
            for line in &body {
                w.write_record(line).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
        }
    }
}
