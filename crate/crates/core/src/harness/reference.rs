//! Published mean/std results of the six compared algorithms on the
//! 23-function suite, embedded as static data.
//!
//! Rows are stored exactly as printed (comma decimal separators, `N/A`
//! for missing entries). The printed tables drop the minus sign on the
//! averages of functions whose optimum is negative; [`ReferenceEntry::ave`]
//! restores it, while [`ReferenceEntry::ave_verbatim`] keeps the original.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::benchmarks::{Benchmark, FunctionId};
use crate::error::{Error, Result};

/// Columns of the published tables, in table order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ReferenceAlgorithm {
    Gsa,
    Abc,
    Pso,
    De,
    Fep,
    Gsabc,
}

impl ReferenceAlgorithm {
    pub const ALL: [ReferenceAlgorithm; 6] = [
        ReferenceAlgorithm::Gsa,
        ReferenceAlgorithm::Abc,
        ReferenceAlgorithm::Pso,
        ReferenceAlgorithm::De,
        ReferenceAlgorithm::Fep,
        ReferenceAlgorithm::Gsabc,
    ];

    /// The comparison baselines that are not implemented here.
    pub const BASELINES: [ReferenceAlgorithm; 3] = [
        ReferenceAlgorithm::Pso,
        ReferenceAlgorithm::De,
        ReferenceAlgorithm::Fep,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ReferenceAlgorithm::Gsa => "GSA",
            ReferenceAlgorithm::Abc => "ABC",
            ReferenceAlgorithm::Pso => "PSO",
            ReferenceAlgorithm::De => "DE",
            ReferenceAlgorithm::Fep => "FEP",
            ReferenceAlgorithm::Gsabc => "GSABC",
        }
    }
}

impl fmt::Display for ReferenceAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReferenceEntry {
    pub algorithm: ReferenceAlgorithm,
    pub function: FunctionId,
    pub ave_verbatim: String,
    pub std_verbatim: String,
    /// Average with the sign restored from the function's optimum.
    pub ave: Option<f64>,
    pub std: Option<f64>,
    pub available: bool,
}

// One row per function; columns are Ave/Std pairs for
// GSA, ABC, PSO, DE, FEP, GSABC.
const TABLES: &str = "\
f1 9,855E-17 6,956E-17 5,388E-16 1,014E-16 1,360E-04 2,020E-04 8,200E-14 5,900E-14 5,700E-04 1,300E-04 5,008E-26 1,256E-26
f2 2,912E-08 8,024E-09 3,060E-10 1,305E-10 4,214E-02 4,542E-02 1,500E-09 9,900E-10 8,100E-03 7,700E-04 9,033E-13 7,827E-13
f3 9,155E+01 7,534E+01 4,996E+03 1,653E+03 7,013E+01 2,212E+01 6,800E-11 7,400E-11 1,600E-02 1,400E-02 2,993E-04 2,912E-04
f4 5,376E+00 1,326E+00 2,651E+01 6,718E+00 1,086E+00 3,170E-01 0,000E+00 0,000E+00 3,000E-01 5,000E-01 5,104E-09 1,039E-09
f5 2,671E+01 3,903E+00 5,126E-03 1,282E-01 9,672E+01 6,012E+01 0,000E+00 0,000E+00 5,060E+00 5,870E+00 2,686E-03 2,136E-02
f6 4,235E-17 5,050E-17 5,152E-16 1,194E-16 1,020E-04 8,280E-05 0,000E+00 0,000E+00 0,000E+00 0,000E+00 1,351E-25 8,538E-26
f7 1,055E-02 4,892E-03 1,328E-01 2,995E-02 1,229E-01 4,496E-02 4,630E-03 1,200E-03 1,415E-01 3,522E-01 5,956E-03 6,196E-03
f8 3,719E+03 5,573E+02 1,257E+04 4,183E+01 4,841E+03 1,153E+03 1,108E+04 5,747E+02 1,255E+04 5,260E+01 1,221E+04 1,266E+02
f9 1,198E+01 2,229E+00 7,215E+00 4,168E+00 4,670E+01 1,163E+01 6,920E+01 3,880E+01 4,600E-02 1,200E-02 0,000E+00 1,004E-11
f10 6,825E-09 1,131E-09 5,467E-09 2,154E-09 2,760E-01 5,090E-01 9,700E-08 4,200E-08 1,800E-02 2,100E-03 1,927E-13 2,554E-13
f11 1,444E+00 6,575E-01 0,000E-12 2,294E-12 9,215E-03 7,724E-03 0,000E+00 0,000E+00 1,600E-02 2,200E-02 0,000E+00 6,651E-01
f12 6,853E-17 3,051E-02 5,014E-16 1,105E-16 6,917E-03 2,630E-02 7,900E-15 8,000E-15 9,200E-06 3,600E-06 6,954E-28 8,446E-13
f13 7,172E-16 2,205E-04 4,620E-16 1,353E-16 6,675E-03 8,907E-03 5,100E-14 4,800E-14 1,600E-04 7,300E-05 1,325E-26 5,621E-16
f14 1,072E+00 2,971E+00 9,980E-01 0,000E+00 3,627E+00 2,561E+00 9,980E-01 3,300E-16 1,220E+00 5,600E-01 9,980E-01 1,364E+00
f15 1,370E-03 1,486E-03 6,613E-04 6,718E-04 5,770E-04 2,220E-04 4,500E-14 3,300E-04 5,000E-04 3,200E-04 3,333E-04 1,196E-04
f16 1,032E+00 3,864E-09 1,032E+00 0,000E+00 1,032E+00 6,250E-16 1,032E+00 3,100E-13 1,030E+00 4,900E-07 1,032E+00 0,000E+00
f17 3,979E-01 9,367E-08 3,979E-01 0,000E+00 3,979E-01 0,000E+00 3,979E-01 9,900E-09 3,980E-01 1,500E-07 3,979E-01 0,000E+00
f18 3,000E+00 8,529E-07 3,000E+00 4,575E-09 3,000E+00 1,330E-15 3,000E+00 2,000E-15 3,020E+00 1,100E-01 3,000E+00 2,735E-12
f19 3,863E+00 6,050E-03 3,863E+00 4,885E-15 3,863E+00 2,580E-15 N/A N/A 3,860E+00 1,400E-05 3,863E+00 0,000E+00
f20 3,322E+00 3,299E-01 3,322E+00 0,000E+00 3,266E+00 6,052E-02 N/A N/A 3,270E+00 5,900E-02 3,322E+00 2,851E-02
f21 1,015E+01 1,365E+00 1,015E+01 0,000E+00 6,865E+00 3,020E+00 1,015E+01 2,500E-06 5,520E+00 1,590E+00 1,015E+01 1,661E+00
f22 1,040E+01 1,412E-01 1,040E+01 0,000E+00 8,457E+00 3,087E+00 1,040E+01 3,900E-07 5,530E+00 2,120E+00 1,040E+01 6,301E-01
f23 1,054E+01 5,302E-03 1,054E+01 0,000E+00 9,953E+00 1,783E+00 1,054E+01 1,900E-07 6,570E+00 3,140E+00 1,054E+01 0,000E+00
";

/// `"9,855E-17"` -> `9.855e-17`; `"N/A"` -> `None`.
pub fn parse_printed(cell: &str) -> Result<Option<f64>> {
    if cell == "N/A" {
        return Ok(None);
    }
    cell.replace(',', ".")
        .parse::<f64>()
        .map(Some)
        .map_err(|_| Error::Parse(format!("bad table cell `{cell}`")))
}

#[derive(Debug, Clone)]
pub struct PaperReference {
    entries: Vec<ReferenceEntry>,
}

impl PaperReference {
    pub fn embedded() -> Self {
        Self::parse(TABLES).expect("embedded tables are well-formed")
    }

    fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::with_capacity(23 * 6);
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let mut cells = line.split_whitespace();
            let function: FunctionId = cells
                .next()
                .ok_or_else(|| Error::Parse("empty row".into()))?
                .parse()?;
            let values: Vec<&str> = cells.collect();
            if values.len() != 12 {
                return Err(Error::Parse(format!(
                    "{function}: expected 12 cells, got {}",
                    values.len()
                )));
            }
            let negative_optimum = Benchmark::new(function).known_minimum() < 0.0;
            for (algorithm, pair) in ReferenceAlgorithm::ALL.iter().zip(values.chunks(2)) {
                let ave = parse_printed(pair[0])?;
                let std = parse_printed(pair[1])?;
                entries.push(ReferenceEntry {
                    algorithm: *algorithm,
                    function,
                    ave_verbatim: pair[0].to_string(),
                    std_verbatim: pair[1].to_string(),
                    ave: ave.map(|v| if negative_optimum { -v.abs() } else { v }),
                    std,
                    available: ave.is_some() && std.is_some(),
                });
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[ReferenceEntry] {
        &self.entries
    }

    pub fn get(
        &self,
        algorithm: ReferenceAlgorithm,
        function: FunctionId,
    ) -> Option<&ReferenceEntry> {
        self.entries
            .iter()
            .find(|e| e.algorithm == algorithm && e.function == function)
    }

    /// `(ave, std)` when the entry exists and is available.
    pub fn values(
        &self,
        algorithm: ReferenceAlgorithm,
        function: FunctionId,
    ) -> Option<(f64, f64)> {
        self.get(algorithm, function)
            .filter(|e| e.available)
            .and_then(|e| Some((e.ave?, e.std?)))
    }
}
