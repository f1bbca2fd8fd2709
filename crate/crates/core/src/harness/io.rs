use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{RunRecord, SummaryRow};
use crate::error::{Error, Result};

pub const RECORD_HEADER: [&str; 7] = [
    "algorithm",
    "function",
    "run",
    "seed",
    "best_objective",
    "evaluations",
    "wall_time_ms",
];

pub const SUMMARY_HEADER: [&str; 6] = [
    "algorithm",
    "function",
    "mean",
    "std",
    "paper_mean",
    "paper_std",
];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl OutputFormat {
    /// `.json` selects JSON; anything else is CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => OutputFormat::Json,
            _ => OutputFormat::Csv,
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(Error::Parse(format!("unknown format `{s}`"))),
        }
    }
}

fn sci(v: f64) -> String {
    format!("{v:e}")
}

fn opt_sci(v: Option<f64>) -> String {
    v.map(sci).unwrap_or_default()
}

fn field<T: FromStr>(row: &csv::StringRecord, i: usize, name: &str) -> Result<T> {
    let raw = row.get(i).unwrap_or("");
    raw.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("column `{name}`: cannot parse `{raw}`")))
}

fn opt_field(row: &csv::StringRecord, i: usize, name: &str) -> Result<Option<f64>> {
    match row.get(i).map(str::trim) {
        None | Some("") => Ok(None),
        Some(_) => field(row, i, name).map(Some),
    }
}

fn check_header(reader: &mut csv::Reader<impl Read>, expected: &[&str]) -> Result<()> {
    let header = reader.headers()?;
    if header.iter().ne(expected.iter().copied()) {
        return Err(Error::Parse(format!(
            "unexpected CSV header `{}`",
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    Ok(())
}

fn write_json<T: Serialize>(mut out: impl Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, value)?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(())
}

pub fn write_records_to(
    out: impl Write,
    format: OutputFormat,
    records: &[RunRecord],
) -> Result<()> {
    match format {
        OutputFormat::Json => write_json(out, &records),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(RECORD_HEADER)?;
            for r in records {
                w.write_record([
                    r.algorithm.to_string(),
                    r.function.to_string(),
                    r.run.to_string(),
                    r.seed.to_string(),
                    sci(r.best_objective),
                    r.evaluations.to_string(),
                    sci(r.wall_time_ms),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

pub fn read_records_from(input: impl Read, format: OutputFormat) -> Result<Vec<RunRecord>> {
    match format {
        OutputFormat::Json => Ok(serde_json::from_reader(input)?),
        OutputFormat::Csv => {
            let mut reader = csv::Reader::from_reader(input);
            check_header(&mut reader, &RECORD_HEADER)?;
            reader
                .records()
                .map(|row| {
                    let row = row?;
                    Ok(RunRecord {
                        algorithm: field(&row, 0, "algorithm")?,
                        function: field(&row, 1, "function")?,
                        run: field(&row, 2, "run")?,
                        seed: field(&row, 3, "seed")?,
                        best_objective: field(&row, 4, "best_objective")?,
                        evaluations: field(&row, 5, "evaluations")?,
                        wall_time_ms: field(&row, 6, "wall_time_ms")?,
                    })
                })
                .collect()
        }
    }
}

pub fn write_summary_to(out: impl Write, format: OutputFormat, rows: &[SummaryRow]) -> Result<()> {
    match format {
        OutputFormat::Json => write_json(out, &rows),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(SUMMARY_HEADER)?;
            for r in rows {
                w.write_record([
                    r.algorithm.to_string(),
                    r.function.to_string(),
                    sci(r.mean),
                    sci(r.std),
                    opt_sci(r.paper_mean),
                    opt_sci(r.paper_std),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

pub fn read_summary_from(input: impl Read, format: OutputFormat) -> Result<Vec<SummaryRow>> {
    match format {
        OutputFormat::Json => Ok(serde_json::from_reader(input)?),
        OutputFormat::Csv => {
            let mut reader = csv::Reader::from_reader(input);
            check_header(&mut reader, &SUMMARY_HEADER)?;
            reader
                .records()
                .map(|row| {
                    let row = row?;
                    Ok(SummaryRow {
                        algorithm: field(&row, 0, "algorithm")?,
                        function: field(&row, 1, "function")?,
                        mean: field(&row, 2, "mean")?,
                        std: field(&row, 3, "std")?,
                        paper_mean: opt_field(&row, 4, "paper_mean")?,
                        paper_std: opt_field(&row, 5, "paper_std")?,
                    })
                })
                .collect()
        }
    }
}

pub fn write_records(path: &Path, format: OutputFormat, records: &[RunRecord]) -> Result<()> {
    write_records_to(BufWriter::new(File::create(path)?), format, records)
}

pub fn read_records(path: &Path, format: OutputFormat) -> Result<Vec<RunRecord>> {
    read_records_from(BufReader::new(File::open(path)?), format)
}

pub fn write_summary(path: &Path, format: OutputFormat, rows: &[SummaryRow]) -> Result<()> {
    write_summary_to(BufWriter::new(File::create(path)?), format, rows)
}

pub fn read_summary(path: &Path, format: OutputFormat) -> Result<Vec<SummaryRow>> {
    read_summary_from(BufReader::new(File::open(path)?), format)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks::FunctionId;
    use crate::harness::Algorithm;
    use proptest::prelude::*;

    fn records_csv(records: &[RunRecord]) -> String {
        let mut buf = Vec::new();
        write_records_to(&mut buf, OutputFormat::Csv, records).unwrap();
        String::from_utf8(buf).unwrap()
    }

    fn sample() -> RunRecord {
        RunRecord {
            algorithm: Algorithm::Gsabc,
            function: FunctionId::new(1).unwrap(),
            run: 0,
            seed: 42,
            best_objective: 5.008e-26,
            evaluations: 50_000,
            wall_time_ms: 12.5,
        }
    }

    #[test]
    fn empty_records_give_header_only() {
        assert_eq!(
            records_csv(&[]),
            "algorithm,function,run,seed,best_objective,evaluations,wall_time_ms\n"
        );
    }

    #[test]
    fn one_record_gives_two_lines() {
        let text = records_csv(&[sample()]);
        assert_eq!(text.lines().count(), 2);
        assert!(text.ends_with('\n'));
        assert_eq!(
            text.lines().nth(1).unwrap(),
            "gsabc,f1,0,42,5.008e-26,50000,1.25e1"
        );
    }

    #[test]
    fn missing_reference_is_an_empty_field() {
        let row = SummaryRow {
            algorithm: Algorithm::Gsa,
            function: FunctionId::new(19).unwrap(),
            mean: -3.86,
            std: 0.0,
            paper_mean: None,
            paper_std: None,
        };
        let mut buf = Vec::new();
        write_summary_to(&mut buf, OutputFormat::Csv, std::slice::from_ref(&row)).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().nth(1).unwrap(), "gsa,f19,-3.86e0,0e0,,");
        let back = read_summary_from(text.as_bytes(), OutputFormat::Csv).unwrap();
        assert_eq!(back, vec![row.clone()]);

        let mut buf = Vec::new();
        write_summary_to(&mut buf, OutputFormat::Json, std::slice::from_ref(&row)).unwrap();
        assert!(String::from_utf8_lossy(&buf).contains("\"paper_mean\": null"));
        assert_eq!(
            read_summary_from(buf.as_slice(), OutputFormat::Json).unwrap(),
            vec![row]
        );
    }

    #[test]
    fn bad_header_rejected() {
        let err = read_records_from("a,b\n1,2\n".as_bytes(), OutputFormat::Csv);
        assert!(matches!(err, Err(Error::Parse(_))));
    }

    #[test]
    fn format_from_extension() {
        assert_eq!(
            OutputFormat::from_path(Path::new("x.JSON")),
            OutputFormat::Json
        );
        assert_eq!(
            OutputFormat::from_path(Path::new("x.csv")),
            OutputFormat::Csv
        );
        assert_eq!(OutputFormat::from_path(Path::new("x")), OutputFormat::Csv);
    }

    proptest! {
        #[test]
        fn records_round_trip(
            best in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL | proptest::num::f64::ZERO,
            wall in 0f64..1e7,
            seed in any::<u64>(),
            run in 0usize..1000,
            evals in 0u64..1_000_000,
            json in any::<bool>(),
        ) {
            let rec = RunRecord { best_objective: best, wall_time_ms: wall, seed, run, evaluations: evals, ..sample() };
            let format = if json { OutputFormat::Json } else { OutputFormat::Csv };
            let mut buf = Vec::new();
            write_records_to(&mut buf, format, std::slice::from_ref(&rec)).unwrap();
            let back = read_records_from(buf.as_slice(), format).unwrap();
            prop_assert_eq!(back.len(), 1);
            prop_assert_eq!(back[0].best_objective.to_bits(), rec.best_objective.to_bits());
            prop_assert_eq!(&back[0], &rec);
        }
    }
}
