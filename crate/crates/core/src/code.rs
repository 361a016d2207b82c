//! Linear codes and everything measured about them.
//!
//! All weight claims are settled by enumerating the q^k codewords. Binary
//! codes go through a bit-packed Gray-code kernel; other fields use a
//! message odometer in which every digit step adds one basis row.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::CodeError;
use crate::field::FieldSpec;
use crate::qc::{row_shift_invariance_witness, Matrix};

/// Default cap on the number of codewords an enumeration may visit.
pub const DEFAULT_GUARD: u64 = 1 << 24;

/// A linear code given by a (possibly redundant) generator matrix together
/// with a reduced row echelon basis of its row space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    raw: Matrix,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// Row-reduces `raw` over GF(q). The resulting basis is in reduced row
    /// echelon form, so membership tests are a single elimination pass.
    pub fn from_generator(raw: Matrix) -> Result<Self, CodeError> {
        if raw.n_rows() == 0 || raw.n_cols() == 0 || raw.is_zero() {
            return Err(CodeError::ZeroMatrix);
        }
        let f = raw.field();
        let n = raw.n_cols();
        let mut rows: Vec<Vec<u8>> = raw.rows().map(<[u8]>::to_vec).collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..n {
            let Some(pr) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pr);
            let inv = f.inv_raw(rows[rank][col]).expect("pivot is nonzero");
            for c in rows[rank].iter_mut() {
                *c = f.mul_raw(*c, inv);
            }
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == rank || row[col] == 0 {
                    continue;
                }
                let factor = row[col];
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub_raw(*x, f.mul_raw(factor, p));
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rows.truncate(rank);
        let basis = Matrix::from_rows(f, &rows).expect("rows share the raw matrix shape");
        Ok(Self { raw, basis, pivots })
    }

    pub fn field(&self) -> FieldSpec {
        self.raw.field()
    }

    pub fn length(&self) -> usize {
        self.raw.n_cols()
    }

    pub fn dimension(&self) -> usize {
        self.basis.n_rows()
    }

    pub fn raw_generator(&self) -> &Matrix {
        &self.raw
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// q^k, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        u128::from(self.field().q())
            .checked_pow(self.dimension() as u32)
            .unwrap_or(u128::MAX)
    }

    /// True iff `word` lies in the row space.
    pub fn contains(&self, word: &[u8]) -> bool {
        if word.len() != self.length() {
            return false;
        }
        let f = self.field();
        let mut w = word.to_vec();
        for (row, &col) in self.basis.rows().zip(&self.pivots) {
            let c = w[col];
            if c == 0 {
                continue;
            }
            for (x, &b) in w.iter_mut().zip(row) {
                *x = f.sub_raw(*x, f.mul_raw(c, b));
            }
        }
        w.iter().all(|&c| c == 0)
    }

    /// The codeword with basis coefficients `message`.
    pub fn encode(&self, message: &[u8]) -> Result<Vec<u8>, CodeError> {
        if message.len() != self.dimension() {
            return Err(CodeError::Invalid(format!(
                "message length {} != dimension {}",
                message.len(),
                self.dimension()
            )));
        }
        let f = self.field();
        let mut w = vec![0u8; self.length()];
        for (row, &c) in self.basis.rows().zip(message) {
            let c = c % f.q() as u8;
            if c == 0 {
                continue;
            }
            for (x, &b) in w.iter_mut().zip(row) {
                *x = f.add_raw(*x, f.mul_raw(c, b));
            }
        }
        Ok(w)
    }

    fn check_guard(&self, guard: u64) -> Result<(), CodeError> {
        let size = self.size();
        if size > u128::from(guard) {
            return Err(CodeError::TooLarge { size, guard });
        }
        Ok(())
    }

    /// All codewords, messages in lexicographic order over basis
    /// coefficient tuples (the last coefficient varies fastest).
    pub fn codewords(&self, guard: u64) -> Result<Codewords<'_>, CodeError> {
        self.check_guard(guard)?;
        Ok(Codewords {
            code: self,
            digits: vec![0; self.dimension()],
            word: vec![0; self.length()],
            started: false,
            done: false,
        })
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution, CodeError> {
        self.weight_distribution_with_guard(DEFAULT_GUARD)
    }

    pub fn weight_distribution_with_guard(&self, guard: u64) -> Result<WeightDistribution, CodeError> {
        self.check_guard(guard)?;
        let mut counts = vec![0u64; self.length() + 1];
        if self.field().q() == 2 {
            binary_weights(&self.basis, &mut counts);
        } else {
            for w in self.codewords(guard)? {
                counts[hamming_weight(&w)] += 1;
            }
        }
        Ok(WeightDistribution::from_dense(&counts))
    }

    pub fn min_distance(&self) -> Result<usize, CodeError> {
        self.min_distance_with_guard(DEFAULT_GUARD)
    }

    pub fn min_distance_with_guard(&self, guard: u64) -> Result<usize, CodeError> {
        let dist = self.weight_distribution_with_guard(guard)?;
        Ok(dist.min_nonzero().expect("a code of positive dimension has a nonzero word"))
    }
}

pub fn hamming_weight(word: &[u8]) -> usize {
    word.iter().filter(|&&c| c != 0).count()
}

/// Gray-code walk over all 2^k combinations of bit-packed basis rows.
fn binary_weights(basis: &Matrix, counts: &mut [u64]) {
    let n = basis.n_cols();
    let words = n.div_ceil(64);
    let packed: Vec<Vec<u64>> = basis
        .rows()
        .map(|row| {
            let mut out = vec![0u64; words];
            for (i, &c) in row.iter().enumerate() {
                if c != 0 {
                    out[i / 64] |= 1 << (i % 64);
                }
            }
            out
        })
        .collect();
    let k = packed.len();
    let mut acc = vec![0u64; words];
    counts[0] += 1;
    for step in 1u64..(1u64 << k) {
        let flip = &packed[step.trailing_zeros() as usize];
        let mut weight = 0u32;
        for (a, &r) in acc.iter_mut().zip(flip) {
            *a ^= r;
            weight += a.count_ones();
        }
        counts[weight as usize] += 1;
    }
}

/// Iterator over every codeword; see [`LinearCode::codewords`].
pub struct Codewords<'a> {
    code: &'a LinearCode,
    digits: Vec<u8>,
    word: Vec<u8>,
    started: bool,
    done: bool,
}

impl Iterator for Codewords<'_> {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.word.clone());
        }
        let f = self.code.field();
        let q = f.q() as u8;
        // Incrementing digit j (and wrapping q-1 -> 0) both amount to adding row j once.
        let mut j = self.digits.len();
        loop {
            if j == 0 {
                self.done = true;
                return None;
            }
            j -= 1;
            for (w, &r) in self.word.iter_mut().zip(self.code.basis.row(j)) {
                *w = f.add_raw(*w, r);
            }
            self.digits[j] += 1;
            if self.digits[j] < q {
                return Some(self.word.clone());
            }
            self.digits[j] = 0;
        }
    }
}

/// Number of codewords of each Hamming weight, the zero word included.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightDistribution {
    counts: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    pub fn from_counts(counts: impl IntoIterator<Item = (usize, u64)>) -> Self {
        Self {
            counts: counts.into_iter().filter(|&(_, c)| c > 0).collect(),
        }
    }

    fn from_dense(dense: &[u64]) -> Self {
        Self::from_counts(dense.iter().copied().enumerate())
    }

    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Distinct nonzero weights, ascending.
    pub fn nonzero_weights(&self) -> Vec<usize> {
        self.counts.keys().copied().filter(|&w| w > 0).collect()
    }

    pub fn min_nonzero(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|(w, c)| format!("{w}:{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The two nonzero weights `(w1, w2)`, `w1 < w2`, if there are exactly two.
pub fn is_two_weight(dist: &WeightDistribution) -> Option<(usize, usize)> {
    match dist.nonzero_weights()[..] {
        [w1, w2] => Some((w1, w2)),
        _ => None,
    }
}

/// Pairwise linear independence of coordinates: no zero column and no
/// column a scalar multiple of another.
pub fn is_projective(code: &LinearCode) -> bool {
    let f = code.field();
    let basis = code.basis();
    let mut seen = HashSet::with_capacity(code.length());
    for col in 0..code.length() {
        let column: Vec<u8> = (0..basis.n_rows()).map(|r| basis.row(r)[col]).collect();
        let Some(&lead) = column.iter().find(|&&c| c != 0) else {
            return false;
        };
        let inv = f.inv_raw(lead).expect("nonzero");
        let normalized: Vec<u8> = column.iter().map(|&c| f.mul_raw(c, inv)).collect();
        if !seen.insert(normalized) {
            return false;
        }
    }
    true
}

/// For a binary linear code, closure under complement is membership of the
/// all-ones word.
pub fn is_self_complementary(code: &LinearCode) -> Result<bool, CodeError> {
    let q = code.field().q();
    if q != 2 {
        return Err(CodeError::NotBinary(q));
    }
    Ok(code.contains(&vec![1u8; code.length()]))
}

/// The Grey-Rankin bound 8d(n-d) / (n - (n-2d)^2), kept as an exact ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GreyRankinBound {
    numerator: u128,
    denominator: u128,
}

impl GreyRankinBound {
    pub fn numerator(&self) -> u128 {
        self.numerator
    }

    pub fn denominator(&self) -> u128 {
        self.denominator
    }

    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    /// Integer value when the ratio is integral.
    pub fn exact(&self) -> Option<u128> {
        self.numerator.is_multiple_of(self.denominator).then(|| self.numerator / self.denominator)
    }

    /// `size == bound`, compared without rounding.
    pub fn met_by(&self, size: u128) -> bool {
        size.checked_mul(self.denominator) == Some(self.numerator)
    }
}

impl fmt::Display for GreyRankinBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(v) => write!(f, "{v}"),
            None => {
                let g = gcd(self.numerator, self.denominator);
                write!(f, "{}/{}", self.numerator / g, self.denominator / g)
            }
        }
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn grey_rankin_bound(n: usize, d: usize) -> Result<GreyRankinBound, CodeError> {
    let (n, d) = (n as i128, d as i128);
    let gap = n - 2 * d;
    let denominator = n - gap * gap;
    if denominator <= 0 {
        return Err(CodeError::BoundInapplicable(denominator));
    }
    let numerator = 8 * d * (n - d);
    if numerator < 0 {
        return Err(CodeError::Invalid(format!("d = {d} exceeds n = {n}")));
    }
    Ok(GreyRankinBound {
        numerator: numerator as u128,
        denominator: denominator as u128,
    })
}

/// Everything the toolkit reports about a code.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub weight_distribution: WeightDistribution,
    pub two_weight: Option<(usize, usize)>,
    pub projective: bool,
    /// `None` for non-binary codes.
    pub self_complementary: Option<bool>,
    pub block_order: usize,
    pub qc: bool,
    /// `None` when n - (n - 2d)^2 is not positive.
    pub grey_rankin: Option<GreyRankinBound>,
    /// Self-complementary and |C| equal to the bound.
    pub grey_rankin_met: bool,
}

impl PropertyReport {
    /// One-line summary, stable for scripting.
    pub fn machine_summary(&self) -> String {
        let weights: Vec<String> = self
            .weight_distribution
            .nonzero_weights()
            .iter()
            .map(usize::to_string)
            .collect();
        let selfc = match self.self_complementary {
            Some(b) => b.to_string(),
            None => "n/a".to_string(),
        };
        let bound = match &self.grey_rankin {
            Some(b) => b.to_string(),
            None => "n/a".to_string(),
        };
        format!(
            "[{},{},{}] q={} weights={{{}}} two_weight={} projective={} selfc={} qc={} gr_bound={} gr_met={}",
            self.n,
            self.k,
            self.d,
            self.q,
            weights.join(","),
            self.two_weight.is_some(),
            self.projective,
            selfc,
            self.qc,
            bound,
            self.grey_rankin_met
        )
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field: GF({})", self.q)?;
        writeln!(f, "parameters: [{}, {}, {}]", self.n, self.k, self.d)?;
        writeln!(f, "weight distribution: {}", self.weight_distribution)?;
        match self.two_weight {
            Some((w1, w2)) => writeln!(f, "two-weight: yes ({w1}, {w2})")?,
            None => writeln!(f, "two-weight: no")?,
        }
        writeln!(f, "projective: {}", yes_no(self.projective))?;
        match self.self_complementary {
            Some(b) => writeln!(f, "self-complementary: {}", yes_no(b))?,
            None => writeln!(f, "self-complementary: n/a (non-binary)")?,
        }
        writeln!(f, "quasi-cyclic (m = {}): {}", self.block_order, yes_no(self.qc))?;
        match &self.grey_rankin {
            Some(b) => writeln!(
                f,
                "Grey-Rankin bound: {b} (met with equality: {})",
                yes_no(self.grey_rankin_met)
            ),
            None => writeln!(f, "Grey-Rankin bound: n/a"),
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn analyze(code: &LinearCode, m: usize) -> Result<PropertyReport, CodeError> {
    analyze_with_guard(code, m, DEFAULT_GUARD)
}

/// Builds a [`PropertyReport`]. Block rotation covers the first
/// `(n / m) * m` coordinates; any remainder is treated as fixed parity.
pub fn analyze_with_guard(code: &LinearCode, m: usize, guard: u64) -> Result<PropertyReport, CodeError> {
    if m == 0 {
        return Err(CodeError::Invalid("block order m must be positive".into()));
    }
    let dist = code.weight_distribution_with_guard(guard)?;
    let n = code.length();
    let d = dist.min_nonzero().expect("positive dimension");
    let self_complementary = is_self_complementary(code).ok();
    let grey_rankin = grey_rankin_bound(n, d).ok();
    let grey_rankin_met = self_complementary == Some(true)
        && grey_rankin.is_some_and(|b| b.met_by(code.size()));
    Ok(PropertyReport {
        q: code.field().q(),
        n,
        k: code.dimension(),
        d,
        two_weight: is_two_weight(&dist),
        weight_distribution: dist,
        projective: is_projective(code),
        self_complementary,
        block_order: m,
        qc: row_shift_invariance_witness(code, m, n / m),
        grey_rankin,
        grey_rankin_met,
    })
}
