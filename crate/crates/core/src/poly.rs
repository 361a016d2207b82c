//! Polynomials over GF(q), residues modulo x^m - 1, and discovery of
//! generator polynomials for cyclic simplex codes.
//!
//! Coefficients are stored in ascending degree: index `i` holds the
//! coefficient of x^i, so `1 1 1 0 1` is 1 + x + x^2 + x^4.

use std::cmp::Ordering;
use std::fmt;

use crate::error::PolyError;
use crate::field::{FieldElement, FieldSpec};

/// Upper bound on q^k for [`find_simplex_generators`].
pub const SIMPLEX_SEARCH_LIMIT: u64 = 1 << 20;

/// A polynomial in canonical form: no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldSpec,
    coeffs: Vec<u8>,
}

impl Polynomial {
    pub fn zero(field: FieldSpec) -> Self {
        Self { field, coeffs: Vec::new() }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self { field, coeffs: vec![1] }
    }

    /// `c * x^degree`.
    pub fn monomial(c: FieldElement, degree: usize) -> Self {
        let field = c.field();
        if c.is_zero() {
            return Self::zero(field);
        }
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c.value();
        Self { field, coeffs }
    }

    /// Builds from integer coefficients, reducing each modulo q.
    pub fn from_coeffs(field: FieldSpec, coeffs: &[i64]) -> Self {
        let coeffs = coeffs
            .iter()
            .map(|&c| field.element_signed(c).value())
            .collect();
        Self::from_raw(field, coeffs)
    }

    pub fn from_elements(field: FieldSpec, coeffs: &[FieldElement]) -> Result<Self, PolyError> {
        let mut raw = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if !field.contains(*c) {
                return Err(crate::error::FieldError::Mismatch {
                    left: field.q(),
                    right: c.field().q(),
                }
                .into());
            }
            raw.push(c.value());
        }
        Ok(Self::from_raw(field, raw))
    }

    /// `x^m - 1`.
    pub fn x_pow_minus_one(field: FieldSpec, m: usize) -> Self {
        let mut coeffs = vec![0; m + 1];
        coeffs[0] = field.neg_raw(1);
        coeffs[m] = field.add_raw(coeffs[m], 1);
        Self::from_raw(field, coeffs)
    }

    /// The all-ones polynomial 1 + x + ... + x^(len-1).
    pub fn all_ones(field: FieldSpec, len: usize) -> Self {
        Self::from_raw(field, vec![1; len])
    }

    pub(crate) fn from_raw(field: FieldSpec, mut coeffs: Vec<u8>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Raw residues, ascending degree, canonical (possibly empty).
    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    /// Coefficient of x^i; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field
            .element(u64::from(self.coeffs.get(i).copied().unwrap_or(0)))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn same_field(&self, other: &Self) -> Result<(), PolyError> {
        if self.field != other.field {
            return Err(crate::error::FieldError::Mismatch {
                left: self.field.q(),
                right: other.field.q(),
            }
            .into());
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_field(other)?;
        let f = self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                f.add_raw(a, b)
            })
            .collect();
        Ok(Self::from_raw(f, coeffs))
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        Self {
            field: f,
            coeffs: self.coeffs.iter().map(|&c| f.neg_raw(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: FieldElement) -> Result<Self, PolyError> {
        if !self.field.contains(c) {
            return Err(crate::error::FieldError::Mismatch {
                left: self.field.q(),
                right: c.field().q(),
            }
            .into());
        }
        let f = self.field;
        let coeffs = self.coeffs.iter().map(|&a| f.mul_raw(a, c.value())).collect();
        Ok(Self::from_raw(f, coeffs))
    }

    /// Multiplication by x^e.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; e];
        coeffs.extend_from_slice(&self.coeffs);
        Self { field: self.field, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field));
        }
        let f = self.field;
        let mut out = vec![0u8; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add_raw(out[i + j], f.mul_raw(a, b));
            }
        }
        Ok(Self::from_raw(f, out))
    }

    /// Euclidean division: `self = quotient * divisor + remainder`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        self.same_field(divisor)?;
        let f = self.field;
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = f
            .inv_raw(divisor.coeffs[dd])
            .expect("canonical polynomial has nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![0u8; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let factor = f.mul_raw(c, lead_inv);
            quot[i - dd] = factor;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = f.sub_raw(rem[idx], f.mul_raw(factor, d));
            }
        }
        rem.truncate(dd);
        Ok((Self::from_raw(f, quot), Self::from_raw(f, rem)))
    }

    /// Parses space-separated residues in ascending degree. Negative
    /// residues down to `-(q-1)` are accepted and normalized (`-1` becomes `q-1`).
    pub fn parse(field: FieldSpec, text: &str) -> Result<Self, PolyError> {
        let q = i64::from(field.q());
        let mut coeffs = Vec::new();
        for tok in text.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| PolyError::Parse(format!("invalid coefficient {tok:?}")))?;
            if v <= -q || v >= q {
                return Err(PolyError::Parse(format!(
                    "coefficient {v} out of range for GF({q})"
                )));
            }
            coeffs.push(field.element_signed(v).value());
        }
        if coeffs.is_empty() {
            return Err(PolyError::Parse("empty polynomial".into()));
        }
        Ok(Self::from_raw(field, coeffs))
    }

    /// Text form; the zero polynomial renders as `0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        parts.join(" ")
    }

    /// Algebraic rendering such as `x^4 + x^2 + x + 1`, highest degree first.
    pub fn to_algebraic(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            let term = match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            };
            terms.push(term);
        }
        terms.join(" + ")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Lexicographic order on the ascending coefficient sequence.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .q()
            .cmp(&other.field.q())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A fixed-width residue modulo x^m - 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicWord {
    field: FieldSpec,
    coeffs: Vec<u8>,
}

impl CyclicWord {
    pub fn new(field: FieldSpec, coeffs: Vec<u8>) -> Result<Self, PolyError> {
        if coeffs.is_empty() {
            return Err(PolyError::Precondition("cyclic word of length 0".into()));
        }
        if let Some(&bad) = coeffs.iter().find(|&&c| u32::from(c) >= field.q()) {
            return Err(PolyError::Precondition(format!(
                "residue {bad} out of range for {field}"
            )));
        }
        Ok(Self { field, coeffs })
    }

    /// Reduces `p` modulo x^m - 1.
    pub fn from_poly(p: &Polynomial, m: usize) -> Result<Self, PolyError> {
        if m == 0 {
            return Err(PolyError::Precondition("ring order m must be positive".into()));
        }
        let f = p.field();
        let mut coeffs = vec![0u8; m];
        for (i, &c) in p.coeffs().iter().enumerate() {
            coeffs[i % m] = f.add_raw(coeffs[i % m], c);
        }
        Ok(Self { field: f, coeffs })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    /// Multiplication by x^s: cyclic rotation right by `s`.
    pub fn rotate(&self, s: usize) -> Self {
        let m = self.coeffs.len();
        let mut out = vec![0; m];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[(i + s) % m] = c;
        }
        Self { field: self.field, coeffs: out }
    }

    /// Residue of `self * b` modulo x^m - 1.
    pub fn cyclic_mul(&self, b: &Polynomial) -> Result<Self, PolyError> {
        if self.field != b.field() {
            return Err(crate::error::FieldError::Mismatch {
                left: self.field.q(),
                right: b.field().q(),
            }
            .into());
        }
        let f = self.field;
        let m = self.coeffs.len();
        let mut out = vec![0u8; m];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &c) in b.coeffs().iter().enumerate() {
                let idx = (i + j) % m;
                out[idx] = f.add_raw(out[idx], f.mul_raw(a, c));
            }
        }
        Ok(Self { field: f, coeffs: out })
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_raw(self.field, self.coeffs.clone())
    }
}

/// Length (q^k - 1)/(q - 1) of the q-ary simplex code of dimension k.
pub fn simplex_length(q: u32, k: u32) -> u64 {
    (u64::from(q).saturating_pow(k) - 1) / (u64::from(q) - 1)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Checks that `g` generates a cyclic simplex code of dimension `k`: it is
/// monic of degree m - k, divides x^m - 1, and every nonzero codeword has
/// weight q^(k-1).
pub fn is_simplex_generator(g: &Polynomial, k: u32) -> bool {
    let f = g.field();
    let q = f.q();
    if k == 0 || u64::from(q).checked_pow(k).is_none_or(|s| s > SIMPLEX_SEARCH_LIMIT) {
        return false;
    }
    let m = simplex_length(q, k) as usize;
    if g.degree() != Some(m - k as usize) || !g.is_monic() {
        return false;
    }
    match Polynomial::x_pow_minus_one(f, m).divmod(g) {
        Ok((_, r)) if r.is_zero() => {}
        _ => return false,
    }
    is_equidistant_cyclic(g, m, k)
}

/// Enumerates all a(x) g(x) mod x^m - 1 with deg a < k and checks each
/// nonzero one has weight q^(k-1).
fn is_equidistant_cyclic(g: &Polynomial, m: usize, k: u32) -> bool {
    let f = g.field();
    let target = (f.q() as usize).pow(k - 1);
    let Ok(base) = CyclicWord::from_poly(g, m) else {
        return false;
    };
    let rows: Vec<CyclicWord> = (0..k as usize).map(|s| base.rotate(s)).collect();
    let mut digits = vec![0u8; rows.len()];
    let mut word = vec![0u8; m];
    let q = f.q() as u8;
    // Odometer over message digits; each digit step adds its row once.
    loop {
        let mut j = 0;
        loop {
            if j == rows.len() {
                return true;
            }
            for (w, &r) in word.iter_mut().zip(rows[j].coeffs()) {
                *w = f.add_raw(*w, r);
            }
            digits[j] += 1;
            if digits[j] < q {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
        if word.iter().filter(|&&c| c != 0).count() != target {
            return false;
        }
    }
}

/// All monic generator polynomials of cyclic simplex codes of dimension `k`
/// over `field`, sorted by ascending coefficient sequence.
///
/// Enumerates every monic degree-k divisor h of x^m - 1 and tests the
/// cofactor g = (x^m - 1)/h for equidistance.
pub fn find_simplex_generators(field: FieldSpec, k: u32) -> Result<Vec<Polynomial>, PolyError> {
    let q = field.q();
    if k < 2 {
        return Err(PolyError::Precondition(format!("k = {k} must be at least 2")));
    }
    if gcd(u64::from(q - 1), u64::from(k)) != 1 {
        return Err(PolyError::Precondition(format!(
            "gcd(q - 1, k) = gcd({}, {k}) != 1; no cyclic simplex code is guaranteed",
            q - 1
        )));
    }
    let size = u64::from(q)
        .checked_pow(k)
        .filter(|&s| s <= SIMPLEX_SEARCH_LIMIT)
        .ok_or_else(|| {
            PolyError::Precondition(format!("q^k = {q}^{k} exceeds the search limit 2^20"))
        })?;
    let m = simplex_length(q, k) as usize;
    let modulus = Polynomial::x_pow_minus_one(field, m);
    let mut found = Vec::new();
    for index in 0..size {
        let mut coeffs = Vec::with_capacity(k as usize + 1);
        let mut rest = index;
        for _ in 0..k {
            coeffs.push((rest % u64::from(q)) as u8);
            rest /= u64::from(q);
        }
        coeffs.push(1);
        let h = Polynomial::from_raw(field, coeffs);
        let (g, r) = modulus.divmod(&h)?;
        if r.is_zero() && is_equidistant_cyclic(&g, m, k) {
            found.push(g);
        }
    }
    if found.is_empty() {
        return Err(PolyError::NoGenerators { q, k });
    }
    found.sort();
    Ok(found)
}
