//! Reproduction suites: rebuild each tabulated code, measure it, and compare
//! with the fixture values in `fixtures/reference_tables.toml`.

use std::fmt;
use std::str::FromStr;

use serde::Deserialize;

use crate::code::{grey_rankin_bound, is_self_complementary, is_two_weight, LinearCode};
use crate::constructions::{
    build_self_complementary_minus, build_self_complementary_plus, build_two_weight,
    default_multipliers, GrVariant, MultiplierSet,
};
use crate::error::ConstructionError;
use crate::field::FieldSpec;
use crate::poly::{find_simplex_generators, Polynomial};

const FIXTURES: &str = include_str!("../fixtures/reference_tables.toml");

#[derive(Debug, Deserialize)]
struct Fixtures {
    table1: Table1,
    example1: Example1,
    example2: Example2,
    grey_rankin: GreyRankin,
}

#[derive(Debug, Deserialize)]
struct Table1 {
    title: String,
    g1: Vec<KeyedPoly>,
    cases: Vec<Table1Case>,
}

#[derive(Debug, Deserialize)]
struct KeyedPoly {
    k: u32,
    poly: String,
}

#[derive(Debug, Deserialize)]
struct Table1Case {
    p: usize,
    m: usize,
    k: u32,
    d: usize,
    w1: usize,
    w2: usize,
}

#[derive(Debug, Deserialize)]
struct Example1 {
    title: String,
    q: u32,
    t: u32,
    g1: String,
    cases: Vec<Example1Case>,
}

#[derive(Debug, Deserialize)]
struct Example1Case {
    p: usize,
    n: usize,
    k: usize,
    w1: usize,
    w2: usize,
}

#[derive(Debug, Deserialize)]
struct Example2 {
    title: String,
    q: u32,
    t: u32,
    g1: String,
    cases: Vec<Example2Case>,
}

#[derive(Debug, Deserialize)]
struct Example2Case {
    p: usize,
    multipliers: Option<String>,
    n: usize,
    k: usize,
    d: usize,
    w1: Option<usize>,
    w2: Option<usize>,
}

#[derive(Debug, Deserialize)]
struct GreyRankin {
    title: String,
    cases: Vec<GreyRankinCase>,
}

#[derive(Debug, Deserialize)]
struct GreyRankinCase {
    variant: String,
    t: u32,
    n: usize,
    k: usize,
    d: usize,
    cited_n: Option<usize>,
}

fn fixtures() -> Fixtures {
    toml::from_str(FIXTURES).expect("embedded fixture file is valid")
}

/// Which suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Table1,
    Example1,
    Example2,
    GreyRankin,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Table1, Suite::Example1, Suite::Example2, Suite::GreyRankin];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::Example1 => "example1",
            Suite::Example2 => "example2",
            Suite::GreyRankin => "grey-rankin",
        }
    }

    pub fn run(&self) -> SuiteResult {
        let fx = fixtures();
        match self {
            Suite::Table1 => run_table1(&fx.table1),
            Suite::Example1 => run_example1(&fx.example1),
            Suite::Example2 => run_example2(&fx.example2),
            Suite::GreyRankin => run_grey_rankin(&fx.grey_rankin),
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Parameters of one code, as expected or as measured. Weights are the
/// two nonzero weights when the code is (or must be) two-weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub weights: Option<(usize, usize)>,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.weights {
            Some((w1, w2)) => write!(f, "[{}, {}, {}; {}, {}]", self.n, self.k, self.d, w1, w2),
            None => write!(f, "[{}, {}, {}]", self.n, self.k, self.d),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub label: String,
    pub expected: CodeParams,
    /// `Err` carries the build or measurement failure.
    pub measured: Result<CodeParams, String>,
    /// Extra measured facts, e.g. the multiplier set used.
    pub detail: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: String,
    pub title: String,
    pub cases: Vec<CaseResult>,
    /// Informational lines; they never affect `pass`.
    pub notes: Vec<String>,
}

impl SuiteResult {
    pub fn pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}: {}", self.name, self.title)?;
        let width = self.cases.iter().map(|c| c.label.len()).max().unwrap_or(0);
        for case in &self.cases {
            let measured = match &case.measured {
                Ok(p) => p.to_string(),
                Err(e) => format!("error: {e}"),
            };
            write!(
                f,
                "  {} {:<width$}  expected {}  measured {}",
                if case.pass { "PASS" } else { "FAIL" },
                case.label,
                case.expected,
                measured,
            )?;
            if !case.detail.is_empty() {
                write!(f, "  {}", case.detail)?;
            }
            writeln!(f)?;
        }
        for note in &self.notes {
            writeln!(f, "  NOTE {note}")?;
        }
        let passed = self.cases.iter().filter(|c| c.pass).count();
        writeln!(
            f,
            "  {}: {passed}/{} cases",
            if self.pass() { "PASS" } else { "FAIL" },
            self.cases.len()
        )
    }
}

fn measure(code: &LinearCode) -> Result<CodeParams, String> {
    let dist = code.weight_distribution().map_err(|e| e.to_string())?;
    Ok(CodeParams {
        n: code.length(),
        k: code.dimension(),
        d: dist.min_nonzero().unwrap_or(0),
        weights: is_two_weight(&dist),
    })
}

fn case(label: String, expected: CodeParams, built: Result<LinearCode, ConstructionError>, detail: String) -> CaseResult {
    let measured = built.map_err(|e| e.to_string()).and_then(|c| measure(&c));
    let pass = match &measured {
        Ok(m) => {
            (m.n, m.k, m.d) == (expected.n, expected.k, expected.d)
                && (expected.weights.is_none() || expected.weights == m.weights)
        }
        Err(_) => false,
    };
    CaseResult {
        label,
        expected,
        measured,
        detail,
        pass,
    }
}

fn first_simplex_generator(field: FieldSpec, t: u32) -> Result<Polynomial, ConstructionError> {
    Ok(find_simplex_generators(field, t)?.remove(0))
}

fn run_table1(fx: &Table1) -> SuiteResult {
    let field = FieldSpec::binary();
    let cases = fx
        .cases
        .iter()
        .map(|c| {
            let expected = CodeParams {
                n: c.p * c.m,
                k: 2 * c.k as usize,
                d: c.d,
                weights: Some((c.w1, c.w2)),
            };
            let built = (|| {
                let g1 = match fx.g1.iter().find(|g| g.k == c.k) {
                    Some(g) => Polynomial::parse(field, &g.poly)?,
                    None => first_simplex_generator(field, c.k)?,
                };
                build_two_weight(&g1, c.k, &default_multipliers(field, c.k, c.p)?)
            })();
            case(format!("p={} m={} k={}", c.p, c.m, c.k), expected, built, String::new())
        })
        .collect();
    SuiteResult {
        name: Suite::Table1.name().into(),
        title: fx.title.clone(),
        cases,
        notes: vec![],
    }
}

fn run_example1(fx: &Example1) -> SuiteResult {
    let cases = fx
        .cases
        .iter()
        .map(|c| {
            let expected = CodeParams {
                n: c.n,
                k: c.k,
                d: c.w1,
                weights: Some((c.w1, c.w2)),
            };
            let built = (|| {
                let field = FieldSpec::new(fx.q)?;
                let g1 = Polynomial::parse(field, &fx.g1)?;
                build_two_weight(&g1, fx.t, &default_multipliers(field, fx.t, c.p)?)
            })();
            case(format!("p={}", c.p), expected, built, String::new())
        })
        .collect();
    SuiteResult {
        name: Suite::Example1.name().into(),
        title: fx.title.clone(),
        cases,
        notes: vec![],
    }
}

fn run_example2(fx: &Example2) -> SuiteResult {
    let cases = fx
        .cases
        .iter()
        .map(|c| {
            let expected = CodeParams {
                n: c.n,
                k: c.k,
                d: c.d,
                weights: c.w1.zip(c.w2),
            };
            let mut used = String::new();
            let built = (|| {
                let field = FieldSpec::new(fx.q)?;
                let g1 = Polynomial::parse(field, &fx.g1)?;
                let m = crate::poly::simplex_length(fx.q, fx.t) as usize;
                let multipliers = match &c.multipliers {
                    Some(text) => MultiplierSet::parse(field, m, text)?,
                    None => default_multipliers(field, fx.t, c.p)?,
                };
                used = format!("multipliers={multipliers}");
                build_two_weight(&g1, fx.t, &multipliers)
            })();
            case(format!("p={}", c.p), expected, built, used)
        })
        .collect();
    SuiteResult {
        name: Suite::Example2.name().into(),
        title: fx.title.clone(),
        cases,
        notes: vec![],
    }
}

fn run_grey_rankin(fx: &GreyRankin) -> SuiteResult {
    let field = FieldSpec::binary();
    let mut notes = Vec::new();
    let cases = fx
        .cases
        .iter()
        .map(|c| {
            let expected = CodeParams {
                n: c.n,
                k: c.k,
                d: c.d,
                weights: None,
            };
            let variant: GrVariant = c.variant.parse().expect("fixture variant");
            if let Some(cited) = c.cited_n.filter(|&cited| cited != c.n) {
                notes.push(format!(
                    "t={} {variant}: construction length {} differs from the cited length {cited}",
                    c.t, c.n
                ));
            }
            let built = first_simplex_generator(field, c.t).and_then(|g1| match variant {
                GrVariant::Minus => build_self_complementary_minus(&g1, c.t),
                GrVariant::Plus => build_self_complementary_plus(&g1, c.t),
            });
            let mut detail = String::new();
            let mut extra_ok = true;
            if let Ok(code) = &built {
                let selfc = is_self_complementary(code).unwrap_or(false);
                let met = code
                    .min_distance()
                    .ok()
                    .and_then(|d| grey_rankin_bound(code.length(), d).ok())
                    .is_some_and(|b| b.met_by(code.size()));
                extra_ok = selfc && met;
                detail = format!("selfc={selfc} gr_met={met}");
            }
            let mut result = case(format!("{variant} t={}", c.t), expected, built, detail);
            result.pass &= extra_ok;
            result
        })
        .collect();
    SuiteResult {
        name: Suite::GreyRankin.name().into(),
        title: fx.title.clone(),
        cases,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        let fx = fixtures();
        assert_eq!(fx.table1.cases.len(), 13);
        assert_eq!(fx.example1.cases.len(), 7);
        assert_eq!(fx.example2.cases.len(), 5);
        assert_eq!(fx.grey_rankin.cases.len(), 7);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn failed_case_is_reported() {
        let expected = CodeParams { n: 1, k: 1, d: 1, weights: None };
        let r = case(
            "x".into(),
            expected,
            Err(ConstructionError::Invalid("boom".into())),
            String::new(),
        );
        assert!(!r.pass);
        let suite = SuiteResult {
            name: "s".into(),
            title: "t".into(),
            cases: vec![r],
            notes: vec!["n".into()],
        };
        assert!(!suite.pass());
        let text = suite.to_string();
        assert!(text.contains("FAIL x"));
        assert!(text.contains("NOTE n"));
    }
}
