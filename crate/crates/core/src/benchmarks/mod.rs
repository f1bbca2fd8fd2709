//! The 23-function test suite: seven unimodal high-dimensional functions,
//! six multimodal high-dimensional functions and ten fixed-dimension
//! multimodal functions. Every function is minimized.

mod constants;

use std::f64::consts::{E, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use constants::*;

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::RandomSource;
use crate::space::SearchSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    Unimodal,
    Multimodal,
    FixedMultimodal,
}

impl Category {
    pub fn ids(self) -> Vec<FunctionId> {
        let range = match self {
            Category::Unimodal => 1..=7,
            Category::Multimodal => 8..=13,
            Category::FixedMultimodal => 14..=23,
        };
        range.map(FunctionId).collect()
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Unimodal => "unimodal",
            Category::Multimodal => "multimodal",
            Category::FixedMultimodal => "fixed_multimodal",
        })
    }
}

/// `f1` through `f23`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FunctionId(u8);

impl FunctionId {
    pub const COUNT: u8 = 23;

    pub fn new(n: u8) -> Result<Self> {
        if (1..=Self::COUNT).contains(&n) {
            Ok(Self(n))
        } else {
            Err(Error::UnknownFunctionId(format!("f{n}")))
        }
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = FunctionId> {
        (1..=Self::COUNT).map(FunctionId)
    }

    pub fn category(self) -> Category {
        match self.0 {
            1..=7 => Category::Unimodal,
            8..=13 => Category::Multimodal,
            _ => Category::FixedMultimodal,
        }
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.0)
    }
}

impl FromStr for FunctionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s.trim().strip_prefix(['f', 'F']).unwrap_or(s.trim());
        digits
            .parse::<u8>()
            .ok()
            .and_then(|n| FunctionId::new(n).ok())
            .ok_or_else(|| Error::UnknownFunctionId(s.to_string()))
    }
}

impl Serialize for FunctionId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FunctionId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Which box to use for the two functions whose printed range differs from
/// the standard domain (`f14` and `f19`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundsMode {
    /// `f14` on `[-65.536, 65.536]^2`, `f19` on `[0, 1]^3`.
    #[default]
    Canonical,
    /// `f14` on `[-65, 65]^2`, `f19` on `[1, 3]^3`.
    Literal,
}

/// One benchmark function with its domain and optimum.
#[derive(Debug, Clone)]
pub struct Benchmark {
    id: FunctionId,
    name: &'static str,
    space: SearchSpace,
    known_minimum: f64,
    reported_minimum: &'static str,
    known_minimizer: Option<Vec<f64>>,
    noise: bool,
}

struct Row {
    name: &'static str,
    dim: usize,
    lo: f64,
    hi: f64,
    known_minimum: f64,
    reported_minimum: &'static str,
}

const fn row(
    name: &'static str,
    dim: usize,
    lo: f64,
    hi: f64,
    known_minimum: f64,
    reported_minimum: &'static str,
) -> Row {
    Row {
        name,
        dim,
        lo,
        hi,
        known_minimum,
        reported_minimum,
    }
}

const ROWS: [Row; 23] = [
    row("Sphere", 30, -100.0, 100.0, 0.0, "0"),
    row("Schwefel 2.22", 30, -10.0, 10.0, 0.0, "0"),
    row("Schwefel 1.2", 30, -100.0, 100.0, 0.0, "0"),
    row("Schwefel 2.21", 30, -100.0, 100.0, 0.0, "0"),
    row("Rosenbrock", 30, -30.0, 30.0, 0.0, "0"),
    row("Step", 30, -100.0, 100.0, 0.0, "0"),
    row("Quartic with noise", 30, -1.28, 1.28, 0.0, "0"),
    row(
        "Schwefel 2.26",
        30,
        -500.0,
        500.0,
        -12_569.486_618_172_983,
        "-12569.5",
    ),
    row("Rastrigin", 30, -5.12, 5.12, 0.0, "0"),
    row("Ackley", 30, -32.0, 32.0, 0.0, "0"),
    row("Griewank", 30, -600.0, 600.0, 0.0, "0"),
    row("Penalized", 30, -50.0, 50.0, 0.0, "0"),
    row("Penalized 2", 30, -50.0, 50.0, 0.0, "0"),
    row(
        "Shekel's foxholes",
        2,
        -65.536,
        65.536,
        0.998_003_837_794_449_8,
        "1",
    ),
    row("Kowalik", 4, -5.0, 5.0, 3.074_859_878_056_056e-4, "0.00030"),
    row(
        "Six-hump camel back",
        2,
        -5.0,
        5.0,
        -1.031_628_453_489_877_6,
        "-1.0316",
    ),
    row("Branin", 2, -5.0, 5.0, 0.397_887_357_729_738_16, "0.398"),
    row("Goldstein-Price", 2, -2.0, 2.0, 3.0, "3"),
    row("Hartman 3", 3, 0.0, 1.0, -3.862_782_147_820_755, "-3.86"),
    row("Hartman 6", 6, 0.0, 1.0, -3.321_995_171_584_241, "-3.32"),
    row(
        "Shekel 5",
        4,
        0.0,
        10.0,
        -10.153_199_679_058_229,
        "-10.1532",
    ),
    row(
        "Shekel 7",
        4,
        0.0,
        10.0,
        -10.402_940_566_818_662,
        "-10.4028",
    ),
    row(
        "Shekel 10",
        4,
        0.0,
        10.0,
        -10.536_409_816_692_045,
        "-10.5363",
    ),
];

fn minimizer(id: FunctionId) -> Vec<f64> {
    match id.0 {
        1..=4 | 6 | 7 | 9..=11 => vec![0.0; 30],
        5 | 13 => vec![1.0; 30],
        8 => vec![420.968_743_696_169_04; 30],
        12 => vec![-1.0; 30],
        14 => vec![-31.978_336_129_956_833, -31.978_337_703_486_062],
        15 => vec![
            0.192_833_452_679_748_33,
            0.190_836_237_309_025_94,
            0.123_117_292_378_968_28,
            0.135_765_989_221_437_57,
        ],
        16 => vec![0.089_842_014_929_453_89, -0.712_656_402_369_394],
        17 => vec![PI, 2.275],
        18 => vec![0.0, -1.0],
        19 => vec![
            0.114_614_327_869_381_44,
            0.555_648_849_854_593_4,
            0.852_546_952_926_669_5,
        ],
        20 => vec![
            0.201_707_610_426_689_67,
            0.146_780_953_521_309_27,
            0.476_744_852_136_898_77,
            0.275_342_389_929_457_8,
            0.311_651_875_549_326_83,
            0.657_275_168_357_007_7,
        ],
        21 => vec![
            4.000_037_152_376_549,
            4.000_133_278_657_566,
            4.000_037_151_057_555,
            4.000_133_277_090_425,
        ],
        22 => vec![
            4.000_572_914_277_084,
            4.000_689_366_040_889,
            3.999_489_710_793_844_7,
            3.999_606_160_006_792_3,
        ],
        _ => vec![
            4.000_746_530_253_313,
            4.000_592_936_779_709,
            3.999_663_395_771_478_7,
            3.999_509_799_329_997_5,
        ],
    }
}

impl Benchmark {
    pub fn new(id: FunctionId) -> Self {
        Self::with_bounds(id, BoundsMode::Canonical)
    }

    pub fn with_bounds(id: FunctionId, mode: BoundsMode) -> Self {
        let r = &ROWS[id.0 as usize - 1];
        let (lo, hi) = match (id.0, mode) {
            (14, BoundsMode::Literal) => (-65.0, 65.0),
            (19, BoundsMode::Literal) => (1.0, 3.0),
            _ => (r.lo, r.hi),
        };
        let space = SearchSpace::uniform(r.dim, lo, hi).expect("benchmark bounds are valid");
        let known_minimizer = Some(minimizer(id)).filter(|x| space.contains(x));
        Self {
            id,
            name: r.name,
            space,
            known_minimum: r.known_minimum,
            reported_minimum: r.reported_minimum,
            known_minimizer,
            noise: id.0 == 7,
        }
    }

    /// The same function with `f7`'s additive noise switched off.
    pub fn without_noise(mut self) -> Self {
        self.noise = false;
        self
    }

    pub fn id(&self) -> FunctionId {
        self.id
    }

    pub fn category(&self) -> Category {
        self.id.category()
    }

    pub fn known_minimum(&self) -> f64 {
        self.known_minimum
    }

    /// The optimum as printed in the function tables, e.g. `"-12569.5"`.
    pub fn reported_minimum(&self) -> &'static str {
        self.reported_minimum
    }

    /// `None` when the minimizer lies outside the selected box.
    pub fn known_minimizer(&self) -> Option<&[f64]> {
        self.known_minimizer.as_deref()
    }

    pub fn is_noisy(&self) -> bool {
        self.noise
    }

    /// The deterministic part of the function.
    pub fn noiseless_value(&self, x: &[f64]) -> f64 {
        evaluate_id(self.id.0, x)
    }

    pub fn spec(&self) -> BenchmarkSpec {
        BenchmarkSpec {
            id: self.id,
            name: self.name.to_string(),
            dimension: self.space.dimension(),
            lower: self.space.lower()[0],
            upper: self.space.upper()[0],
            f_min: self.reported_minimum.to_string(),
            known_minimum: self.known_minimum,
            known_minimizer: self.known_minimizer.clone(),
            category: self.category(),
        }
    }
}

impl Objective for Benchmark {
    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn value(&self, x: &[f64], noise: &mut dyn RandomSource) -> f64 {
        let base = self.noiseless_value(x);
        if self.noise {
            base + noise.next_f64()
        } else {
            base
        }
    }

    fn name(&self) -> &str {
        self.name
    }
}

pub fn make_function(id: FunctionId) -> Benchmark {
    Benchmark::new(id)
}

/// Looks a function up by its textual id (`"f9"`, `"9"`).
pub fn function_by_name(id: &str) -> Result<Benchmark> {
    Ok(Benchmark::new(id.parse()?))
}

pub fn suite() -> Vec<Benchmark> {
    FunctionId::all().map(Benchmark::new).collect()
}

/// Machine-readable description of one benchmark.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkSpec {
    pub id: FunctionId,
    pub name: String,
    pub dimension: usize,
    pub lower: f64,
    pub upper: f64,
    /// Optimum as printed in the function tables.
    pub f_min: String,
    /// Optimum to full double precision.
    pub known_minimum: f64,
    pub known_minimizer: Option<Vec<f64>>,
    pub category: Category,
}

pub fn manifest() -> Vec<BenchmarkSpec> {
    suite().iter().map(Benchmark::spec).collect()
}

/// Boundary penalty of the two penalized functions.
pub fn penalty_u(x: f64, a: f64, k: f64, m: f64) -> f64 {
    if x > a {
        k * (x - a).powf(m)
    } else if x < -a {
        k * (-x - a).powf(m)
    } else {
        0.0
    }
}

fn evaluate_id(id: u8, x: &[f64]) -> f64 {
    let n = x.len() as f64;
    match id {
        1 => x.iter().map(|v| v * v).sum(),
        2 => x.iter().map(|v| v.abs()).sum::<f64>() + x.iter().map(|v| v.abs()).product::<f64>(),
        3 => {
            let mut prefix = 0.0;
            x.iter()
                .map(|v| {
                    prefix += v;
                    prefix * prefix
                })
                .sum()
        }
        4 => x.iter().fold(0.0, |m, v| m.max(v.abs())),
        5 => x
            .windows(2)
            .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
            .sum(),
        6 => x.iter().map(|v| (v + 0.5).floor().powi(2)).sum(),
        7 => x
            .iter()
            .enumerate()
            .map(|(i, v)| (i + 1) as f64 * v.powi(4))
            .sum(),
        8 => x.iter().map(|v| -v * v.abs().sqrt().sin()).sum(),
        9 => x
            .iter()
            .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
            .sum(),
        10 => {
            let sq = x.iter().map(|v| v * v).sum::<f64>() / n;
            let cos = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
            -20.0 * (-0.2 * sq.sqrt()).exp() - cos.exp() + 20.0 + E
        }
        11 => {
            let sum = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
            let prod: f64 = x
                .iter()
                .enumerate()
                .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
                .product();
            sum - prod + 1.0
        }
        12 => {
            let y: Vec<f64> = x.iter().map(|v| 1.0 + (v + 1.0) / 4.0).collect();
            let last = y[y.len() - 1];
            let inner: f64 = y
                .windows(2)
                .map(|w| (w[0] - 1.0).powi(2) * (1.0 + 10.0 * (PI * w[1]).sin().powi(2)))
                .sum();
            PI / n * (10.0 * (PI * y[0]).sin().powi(2) + inner + (last - 1.0).powi(2))
                + x.iter()
                    .map(|v| penalty_u(*v, 10.0, 100.0, 4.0))
                    .sum::<f64>()
        }
        13 => {
            let last = x[x.len() - 1];
            let inner: f64 = x
                .windows(2)
                .map(|w| (w[0] - 1.0).powi(2) * (1.0 + (3.0 * PI * w[1]).sin().powi(2)))
                .sum();
            0.1 * ((3.0 * PI * x[0]).sin().powi(2)
                + inner
                + (last - 1.0).powi(2) * (1.0 + (2.0 * PI * last).sin().powi(2)))
                + x.iter()
                    .map(|v| penalty_u(*v, 5.0, 100.0, 4.0))
                    .sum::<f64>()
        }
        14 => {
            let holes: f64 = (0..25)
                .map(|j| {
                    let d: f64 = (0..2).map(|i| (x[i] - FOXHOLES_A[i][j]).powi(6)).sum();
                    1.0 / ((j + 1) as f64 + d)
                })
                .sum();
            1.0 / (1.0 / 500.0 + holes)
        }
        15 => KOWALIK_A
            .iter()
            .zip(&KOWALIK_B)
            .map(|(a, b)| {
                let model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
                (a - model).powi(2)
            })
            .sum(),
        16 => {
            let (a, b) = (x[0], x[1]);
            4.0 * a * a - 2.1 * a.powi(4) + a.powi(6) / 3.0 + a * b - 4.0 * b * b + 4.0 * b.powi(4)
        }
        17 => {
            let (a, b) = (x[0], x[1]);
            (b - 5.1 / (4.0 * PI * PI) * a * a + 5.0 / PI * a - 6.0).powi(2)
                + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * a.cos()
                + 10.0
        }
        18 => {
            let (a, b) = (x[0], x[1]);
            let left = 1.0
                + (a + b + 1.0).powi(2)
                    * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
            let right = 30.0
                + (2.0 * a - 3.0 * b).powi(2)
                    * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
            left * right
        }
        19 => hartman(x, &HARTMAN3_A, &HARTMAN3_P),
        20 => hartman(x, &HARTMAN6_A, &HARTMAN6_P),
        21 => shekel(x, 5),
        22 => shekel(x, 7),
        23 => shekel(x, 10),
        _ => unreachable!("function ids are validated on construction"),
    }
}

fn hartman<const D: usize>(x: &[f64], a: &[[f64; D]; 4], p: &[[f64; D]; 4]) -> f64 {
    -(0..4)
        .map(|i| {
            let e: f64 = (0..D).map(|j| a[i][j] * (x[j] - p[i][j]).powi(2)).sum();
            HARTMAN_C[i] * (-e).exp()
        })
        .sum::<f64>()
}

fn shekel(x: &[f64], m: usize) -> f64 {
    -SHEKEL_A[..m]
        .iter()
        .zip(&SHEKEL_C)
        .map(|(a, c)| {
            let d: f64 = x.iter().zip(a).map(|(v, ai)| (v - ai).powi(2)).sum();
            1.0 / (d + c)
        })
        .sum::<f64>()
}
