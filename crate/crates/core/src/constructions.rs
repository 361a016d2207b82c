//! Quasi-cyclic two-weight and self-complementary constructions built on a
//! cyclic simplex generator g1(x).
//!
//! Every builder checks its own output by exhaustive enumeration and
//! returns [`ConstructionError::Verification`] instead of an unverified code.
//!
//! The two-weight construction uses generator rows
//!
//! ```text
//!   g1      g1      ...  g1
//!   mu_0 g1 mu_1 g1 ...  mu_{p-1} g1
//! ```
//!
//! where the mu_j are pairwise distinct elements of {0} and {a x^e}. Since
//! x has order m in the simplex code's multiplicative structure when
//! gcd(q - 1, t) = 1, distinct mu_j give distinct ring elements, so a
//! nonzero codeword vanishes on at most one block.

use std::fmt;
use std::str::FromStr;

use crate::code::{grey_rankin_bound, is_self_complementary, is_two_weight, LinearCode};
use crate::error::ConstructionError;
use crate::field::{FieldElement, FieldSpec};
use crate::poly::{is_simplex_generator, simplex_length, Polynomial};
use crate::qc::{expand, QcGeneratorSpec};

/// Predicted parameters of the two-weight family with copy count `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Su2Params {
    pub q: u32,
    pub t: u32,
    pub i: u64,
    pub n: u64,
    pub k: u32,
    pub w1: u64,
    pub w2: u64,
}

pub fn su2_params(q: u32, t: u32, i: u64) -> Result<Su2Params, ConstructionError> {
    FieldSpec::new(q)?;
    if t == 0 {
        return Err(ConstructionError::Invalid("t must be positive".into()));
    }
    if gcd(u64::from(q - 1), u64::from(t)) != 1 {
        return Err(ConstructionError::Invalid(format!(
            "gcd(q - 1, t) = gcd({}, {t}) != 1",
            q - 1
        )));
    }
    let qt = u64::from(q)
        .checked_pow(t)
        .ok_or_else(|| ConstructionError::Invalid("q^t overflows".into()))?;
    if !(2..=qt).contains(&i) {
        return Err(ConstructionError::Invalid(format!("i = {i} outside 2..={qt}")));
    }
    let qt1 = qt / u64::from(q);
    Ok(Su2Params {
        q,
        t,
        i,
        n: i * simplex_length(q, t),
        k: 2 * t,
        w1: (i - 1) * qt1,
        w2: i * qt1,
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Factor applied to g1 in one block of the second generator row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Multiplier {
    Zero,
    /// `a * x^e` with `a` nonzero.
    Term { a: FieldElement, e: usize },
}

impl Multiplier {
    pub fn term(a: FieldElement, e: usize) -> Self {
        Self::Term { a, e }
    }

    /// `mu * g1 mod x^m - 1` as a polynomial of degree below m.
    fn apply(&self, g1: &Polynomial, m: usize) -> Result<Polynomial, ConstructionError> {
        match *self {
            Self::Zero => Ok(Polynomial::zero(g1.field())),
            Self::Term { a, e } => {
                let word = crate::poly::CyclicWord::from_poly(g1, m)?.rotate(e);
                Ok(word.to_polynomial().scale(a)?)
            }
        }
    }
}

impl fmt::Display for Multiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Zero => f.write_str("0"),
            Self::Term { a, e } => write!(f, "{a},{e}"),
        }
    }
}

/// The p second-row block factors, zero marker included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierSet {
    field: FieldSpec,
    m: usize,
    entries: Vec<Multiplier>,
}

impl MultiplierSet {
    /// Validates entries against GF(q) and circulant order `m`: nonzero
    /// coefficients, exponents below m, and no repeated entry.
    pub fn new(field: FieldSpec, m: usize, entries: Vec<Multiplier>) -> Result<Self, ConstructionError> {
        if entries.is_empty() {
            return Err(ConstructionError::Multipliers("empty multiplier set".into()));
        }
        for (idx, mu) in entries.iter().enumerate() {
            if let Multiplier::Term { a, e } = *mu {
                if !field.contains(a) {
                    return Err(ConstructionError::Multipliers(format!(
                        "entry {idx}: coefficient not in {field}"
                    )));
                }
                if a.is_zero() {
                    return Err(ConstructionError::Multipliers(format!(
                        "entry {idx}: coefficient must be nonzero (use `0` for the zero block)"
                    )));
                }
                if e >= m {
                    return Err(ConstructionError::Multipliers(format!(
                        "entry {idx}: exponent {e} not below m = {m}"
                    )));
                }
            }
            if entries[..idx].contains(mu) {
                return Err(ConstructionError::Multipliers(format!(
                    "entry {idx} ({mu}) repeats an earlier entry"
                )));
            }
        }
        Ok(Self { field, m, entries })
    }

    /// Parses `0;1,0;2,0` style specs: `;`-separated entries, each `0` or `a,e`.
    pub fn parse(field: FieldSpec, m: usize, text: &str) -> Result<Self, ConstructionError> {
        let mut entries = Vec::new();
        for part in text.split(';') {
            let part = part.trim();
            let entry = match part.split_once(',') {
                None if part == "0" => Multiplier::Zero,
                None => {
                    return Err(ConstructionError::Multipliers(format!(
                        "entry {part:?} is neither `0` nor `a,e`"
                    )))
                }
                Some((a, e)) => {
                    let a: i64 = a.trim().parse().map_err(|_| {
                        ConstructionError::Multipliers(format!("bad coefficient in {part:?}"))
                    })?;
                    let e: usize = e.trim().parse().map_err(|_| {
                        ConstructionError::Multipliers(format!("bad exponent in {part:?}"))
                    })?;
                    let q = i64::from(field.q());
                    if a <= -q || a >= q {
                        return Err(ConstructionError::Multipliers(format!(
                            "coefficient {a} out of range for {field}"
                        )));
                    }
                    Multiplier::term(field.element_signed(a), e)
                }
            };
            entries.push(entry);
        }
        Self::new(field, m, entries)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &[Multiplier] {
        &self.entries
    }

    /// Block count p.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(Multiplier::to_string).collect();
        parts.join(";")
    }
}

impl fmt::Display for MultiplierSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Zero marker followed by a*x^e in the order (1,0), (1,1), ..., (1,m-1),
/// (2,0), ...; p entries in total.
pub fn default_multipliers(field: FieldSpec, t: u32, p: usize) -> Result<MultiplierSet, ConstructionError> {
    let q = field.q();
    let qt = u64::from(q).checked_pow(t).unwrap_or(u64::MAX);
    if p < 2 || p as u64 > qt {
        return Err(ConstructionError::Invalid(format!("p = {p} outside 2..={qt}")));
    }
    let m = simplex_length(q, t) as usize;
    let mut entries = vec![Multiplier::Zero];
    entries.extend(
        field
            .elements()
            .skip(1)
            .flat_map(|a| (0..m).map(move |e| Multiplier::term(a, e)))
            .take(p - 1),
    );
    MultiplierSet::new(field, m, entries)
}

fn check_generator(g1: &Polynomial, t: u32) -> Result<usize, ConstructionError> {
    if !is_simplex_generator(g1, t) {
        return Err(ConstructionError::InvalidGenerator(format!(
            "{} does not generate a cyclic simplex code of dimension {t} over {}",
            g1.to_algebraic(),
            g1.field()
        )));
    }
    Ok(simplex_length(g1.field().q(), t) as usize)
}

fn two_weight_rows(
    g1: &Polynomial,
    m: usize,
    multipliers: &MultiplierSet,
) -> Result<Vec<Vec<Polynomial>>, ConstructionError> {
    let first = vec![g1.clone(); multipliers.len()];
    let second = multipliers
        .entries()
        .iter()
        .map(|mu| mu.apply(g1, m))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(vec![first, second])
}

fn build(spec: &QcGeneratorSpec) -> Result<LinearCode, ConstructionError> {
    Ok(LinearCode::from_generator(expand(spec))?)
}

/// Symbolic spec of the two-weight construction; no verification.
pub fn two_weight_spec(
    g1: &Polynomial,
    t: u32,
    multipliers: &MultiplierSet,
) -> Result<QcGeneratorSpec, ConstructionError> {
    let m = check_generator(g1, t)?;
    if multipliers.field() != g1.field() || multipliers.m() != m {
        return Err(ConstructionError::Multipliers(format!(
            "multipliers were built for {} with m = {}, g1 needs {} with m = {m}",
            multipliers.field(),
            multipliers.m(),
            g1.field()
        )));
    }
    QcGeneratorSpec::new(g1.field(), m, two_weight_rows(g1, m, multipliers)?, vec![])
        .map_err(|e| ConstructionError::Invalid(e.to_string()))
}

/// 2-generator quasi-cyclic two-weight code with p = |multipliers| blocks of
/// order m = (q^t - 1)/(q - 1). Verified to be [pm, 2t; (p-1)q^(t-1), p q^(t-1)].
pub fn build_two_weight(
    g1: &Polynomial,
    t: u32,
    multipliers: &MultiplierSet,
) -> Result<LinearCode, ConstructionError> {
    let spec = two_weight_spec(g1, t, multipliers)?;
    let code = build(&spec)?;
    let expected = su2_params(g1.field().q(), t, multipliers.len() as u64)?;
    let dist = code.weight_distribution()?;
    let measured = (code.length() as u64, code.dimension() as u32, is_two_weight(&dist));
    let want = (expected.n, expected.k, Some((expected.w1 as usize, expected.w2 as usize)));
    if measured != want {
        return Err(ConstructionError::Verification(format!(
            "expected [{}, {}; {}, {}], measured n = {}, k = {}, weights {:?}",
            expected.n,
            expected.k,
            expected.w1,
            expected.w2,
            measured.0,
            measured.1,
            dist.nonzero_weights()
        )));
    }
    Ok(code)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GrVariant {
    /// [2^(2t-1) - 2^(t-1), 2t+1, 2^(2t-2) - 2^(t-1)]
    Minus,
    /// [2^(2t-1) + 2^(t-1), 2t+1, 2^(2t-2)]
    Plus,
}

impl fmt::Display for GrVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Minus => "minus",
            Self::Plus => "plus",
        })
    }
}

impl FromStr for GrVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "minus" => Ok(Self::Minus),
            "plus" => Ok(Self::Plus),
            other => Err(format!("unknown variant {other:?}")),
        }
    }
}

/// Parameters (n, k, d) of binary self-complementary codes meeting the
/// Grey-Rankin bound.
pub fn gr_params(t: u32, variant: GrVariant) -> (u64, u32, u64) {
    let big = 1u64 << (2 * t - 1);
    let small = 1u64 << (t - 1);
    match variant {
        GrVariant::Minus => (big - small, 2 * t + 1, (big >> 1) - small),
        GrVariant::Plus => (big + small, 2 * t + 1, big >> 1),
    }
}

/// Symbolic spec of a 3-generator self-complementary code; no verification.
pub fn self_complementary_spec(
    g1: &Polynomial,
    t: u32,
    variant: GrVariant,
) -> Result<QcGeneratorSpec, ConstructionError> {
    let field = g1.field();
    if field.q() != 2 {
        return Err(ConstructionError::Invalid(format!(
            "self-complementary constructions are binary, got {field}"
        )));
    }
    if t < 2 {
        return Err(ConstructionError::Invalid(format!("t = {t} must be at least 2")));
    }
    let m = check_generator(g1, t)?;
    let p = match variant {
        GrVariant::Minus => 1usize << (t - 1),
        GrVariant::Plus => (1usize << (t - 1)) + 1,
    };
    let multipliers = default_multipliers(field, t, p)?;
    let mut rows = two_weight_rows(g1, m, &multipliers)?;
    rows.push(vec![Polynomial::all_ones(field, m); p]);
    let extra = match variant {
        GrVariant::Minus => vec![],
        GrVariant::Plus => vec![vec![field.zero(), field.zero(), field.one()]],
    };
    QcGeneratorSpec::new(field, m, rows, extra).map_err(|e| ConstructionError::Invalid(e.to_string()))
}

fn build_self_complementary(
    g1: &Polynomial,
    t: u32,
    variant: GrVariant,
) -> Result<LinearCode, ConstructionError> {
    let spec = self_complementary_spec(g1, t, variant)?;
    let code = build(&spec)?;
    let (n, k, d) = gr_params(t, variant);
    let dist = code.weight_distribution()?;
    let measured_d = dist.min_nonzero().unwrap_or(0) as u64;
    let measured = (code.length() as u64, code.dimension() as u32, measured_d);
    if measured != (n, k, d) {
        return Err(ConstructionError::Verification(format!(
            "expected [{n}, {k}, {d}], measured [{}, {}, {}]",
            measured.0, measured.1, measured.2
        )));
    }
    if !is_self_complementary(&code)? {
        return Err(ConstructionError::Verification(
            "all-ones word is not a codeword".into(),
        ));
    }
    let bound = grey_rankin_bound(code.length(), measured_d as usize)?;
    if !bound.met_by(code.size()) {
        return Err(ConstructionError::Verification(format!(
            "|C| = {} does not meet the Grey-Rankin bound {bound}",
            code.size()
        )));
    }
    Ok(code)
}

/// Length 2^(2t-1) - 2^(t-1): i = 2^(t-1) blocks plus an all-ones generator row.
pub fn build_self_complementary_minus(g1: &Polynomial, t: u32) -> Result<LinearCode, ConstructionError> {
    build_self_complementary(g1, t, GrVariant::Minus)
}

/// Length 2^(2t-1) + 2^(t-1): i = 2^(t-1) + 1 blocks, an all-ones generator
/// row, and one parity column set only in the all-ones band.
pub fn build_self_complementary_plus(g1: &Polynomial, t: u32) -> Result<LinearCode, ConstructionError> {
    build_self_complementary(g1, t, GrVariant::Plus)
}
