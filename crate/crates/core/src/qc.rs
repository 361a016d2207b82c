//! Circulant matrices and block-circulant generator matrices of
//! quasi-cyclic codes.
//!
//! Coordinates are kept in block order (block 0 occupies columns
//! `0..m`, block 1 columns `m..2m`, ...). A quasi-cyclic code in this
//! order is one closed under rotating every length-m block by one
//! position at the same time.

use std::fmt;

use crate::code::LinearCode;
use crate::error::{FieldError, MatrixError};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::{CyclicWord, Polynomial};

/// A dense row-major matrix over GF(q).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    n_rows: usize,
    n_cols: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, n_rows: usize, n_cols: usize) -> Self {
        Self {
            field,
            n_rows,
            n_cols,
            data: vec![0; n_rows * n_cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds from rows of residues; every row must have the same length and
    /// every residue must lie in `0..q`.
    pub fn from_rows(field: FieldSpec, rows: &[Vec<u8>]) -> Result<Self, MatrixError> {
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * n_cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n_cols {
                return Err(MatrixError::Shape(format!(
                    "row {i} has {} entries, expected {n_cols}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&c| u32::from(c) >= field.q()) {
                return Err(MatrixError::Shape(format!(
                    "entry {bad} in row {i} is out of range for {field}"
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(Self {
            field,
            n_rows: rows.len(),
            n_cols,
            data,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.n_cols..(i + 1) * self.n_cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> + '_ {
        (0..self.n_rows).map(move |i| self.row(i))
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.field.element(u64::from(self.data[i * self.n_cols + j]))
    }

    pub fn set(&mut self, i: usize, j: usize, value: FieldElement) -> Result<(), FieldError> {
        if !self.field.contains(value) {
            return Err(FieldError::Mismatch {
                left: self.field.q(),
                right: value.field().q(),
            });
        }
        self.data[i * self.n_cols + j] = value.value();
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&c| c == 0)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.field != other.field {
            return Err(FieldError::Mismatch {
                left: self.field.q(),
                right: other.field.q(),
            }
            .into());
        }
        if self.n_cols != other.n_rows {
            return Err(MatrixError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.n_rows, self.n_cols, other.n_rows, other.n_cols
            )));
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.n_rows, other.n_cols);
        for i in 0..self.n_rows {
            for t in 0..self.n_cols {
                let a = self.data[i * self.n_cols + t];
                if a == 0 {
                    continue;
                }
                for j in 0..other.n_cols {
                    let idx = i * other.n_cols + j;
                    out.data[idx] = f.add_raw(out.data[idx], f.mul_raw(a, other.data[t * other.n_cols + j]));
                }
            }
        }
        Ok(out)
    }

    /// Parses the text format: a header `q n_rows n_cols` followed by one
    /// line of space-separated residues per row. Blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, MatrixError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| MatrixError::Parse("missing header line".into()))?;
        let nums = parse_numbers(header)?;
        let [q, n_rows, n_cols] = nums[..] else {
            return Err(MatrixError::Parse(format!(
                "header must be `q n_rows n_cols`, got {header:?}"
            )));
        };
        let q = u32::try_from(q).map_err(|_| MatrixError::Parse(format!("bad q {q}")))?;
        let field = FieldSpec::new(q)?;
        let (n_rows, n_cols) = (n_rows as usize, n_cols as usize);
        let mut rows = Vec::with_capacity(n_rows);
        for (i, line) in lines.enumerate() {
            if i >= n_rows {
                return Err(MatrixError::Parse(format!("more than {n_rows} rows")));
            }
            let vals = parse_numbers(line)?;
            if vals.len() != n_cols {
                return Err(MatrixError::Parse(format!(
                    "row {i} has {} entries, expected {n_cols}",
                    vals.len()
                )));
            }
            let mut row = Vec::with_capacity(n_cols);
            for v in vals {
                if v >= u64::from(q) {
                    return Err(MatrixError::Parse(format!(
                        "entry {v} in row {i} is not a residue mod {q}"
                    )));
                }
                row.push(v as u8);
            }
            rows.push(row);
        }
        if rows.len() != n_rows {
            return Err(MatrixError::Parse(format!(
                "expected {n_rows} rows, found {}",
                rows.len()
            )));
        }
        let mut m = Self::from_rows(field, &rows)?;
        m.n_cols = n_cols;
        Ok(m)
    }

    /// Canonical text form; always ends with a newline.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.field.q(), self.n_rows, self.n_cols);
        for row in self.rows() {
            let parts: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn parse_numbers(line: &str) -> Result<Vec<u64>, MatrixError> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| MatrixError::Parse(format!("invalid number {t:?}")))
        })
        .collect()
}

/// An m x m circulant given by its first row c(x).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantSpec {
    defining_poly: Polynomial,
    m: usize,
}

impl CirculantSpec {
    pub fn new(defining_poly: Polynomial, m: usize) -> Result<Self, MatrixError> {
        if m == 0 {
            return Err(MatrixError::Shape("circulant order must be positive".into()));
        }
        if defining_poly.degree().is_some_and(|d| d >= m) {
            return Err(MatrixError::Shape(format!(
                "defining polynomial degree {} is not below m = {m}",
                defining_poly.degree().unwrap_or(0)
            )));
        }
        Ok(Self { defining_poly, m })
    }

    pub fn defining_poly(&self) -> &Polynomial {
        &self.defining_poly
    }

    pub fn m(&self) -> usize {
        self.m
    }
}

/// Row s holds x^s c(x) mod x^m - 1, i.e. row 0 rotated right by s.
pub fn circulant(spec: &CirculantSpec) -> Matrix {
    let f = spec.defining_poly.field();
    let m = spec.m;
    let mut out = Matrix::zeros(f, m, m);
    write_circulant(&mut out, 0, 0, spec.defining_poly.coeffs(), m);
    out
}

fn write_circulant(out: &mut Matrix, row0: usize, col0: usize, coeffs: &[u8], m: usize) {
    let stride = out.n_cols;
    for s in 0..m {
        for (i, &c) in coeffs.iter().enumerate() {
            out.data[(row0 + s) * stride + col0 + (i + s) % m] = c;
        }
    }
}

/// Symbolic description of an r-generator quasi-cyclic generator matrix:
/// an r x p grid of circulant-defining polynomials, plus optional constant
/// columns appended on the right (one constant per generator band).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QcGeneratorSpec {
    field: FieldSpec,
    m: usize,
    rows: Vec<Vec<Polynomial>>,
    extra_columns: Vec<Vec<FieldElement>>,
}

impl QcGeneratorSpec {
    pub fn new(
        field: FieldSpec,
        m: usize,
        rows: Vec<Vec<Polynomial>>,
        extra_columns: Vec<Vec<FieldElement>>,
    ) -> Result<Self, MatrixError> {
        if m == 0 {
            return Err(MatrixError::Shape("circulant order must be positive".into()));
        }
        let p = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || p == 0 {
            return Err(MatrixError::Shape("empty generator grid".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != p {
                return Err(MatrixError::Shape(format!(
                    "generator row {i} has {} blocks, expected {p}",
                    row.len()
                )));
            }
            for (j, poly) in row.iter().enumerate() {
                if poly.field() != field {
                    return Err(FieldError::Mismatch {
                        left: field.q(),
                        right: poly.field().q(),
                    }
                    .into());
                }
                if poly.degree().is_some_and(|d| d >= m) {
                    return Err(MatrixError::Shape(format!(
                        "block ({i}, {j}) has degree {} >= m = {m}",
                        poly.degree().unwrap_or(0)
                    )));
                }
            }
        }
        for (c, col) in extra_columns.iter().enumerate() {
            if col.len() != rows.len() {
                return Err(MatrixError::Shape(format!(
                    "extra column {c} has {} constants, expected {}",
                    col.len(),
                    rows.len()
                )));
            }
            if let Some(e) = col.iter().find(|e| !field.contains(**e)) {
                return Err(FieldError::Mismatch {
                    left: field.q(),
                    right: e.field().q(),
                }
                .into());
            }
        }
        Ok(Self {
            field,
            m,
            rows,
            extra_columns,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of generator rows r.
    pub fn generators(&self) -> usize {
        self.rows.len()
    }

    /// Number of circulant blocks p per generator row.
    pub fn blocks(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.rows
    }

    pub fn extra_columns(&self) -> &[Vec<FieldElement>] {
        &self.extra_columns
    }

    /// Length of the expanded code, p*m plus the extra columns.
    pub fn length(&self) -> usize {
        self.blocks() * self.m + self.extra_columns.len()
    }
}

/// Expands the grid into an (r*m) x (p*m + extras) matrix.
pub fn expand(spec: &QcGeneratorSpec) -> Matrix {
    let m = spec.m;
    let p = spec.blocks();
    let mut out = Matrix::zeros(spec.field, spec.generators() * m, spec.length());
    for (i, row) in spec.rows.iter().enumerate() {
        for (j, poly) in row.iter().enumerate() {
            write_circulant(&mut out, i * m, j * m, poly.coeffs(), m);
        }
    }
    let stride = out.n_cols;
    for (c, col) in spec.extra_columns.iter().enumerate() {
        for (i, value) in col.iter().enumerate() {
            for s in 0..m {
                out.data[(i * m + s) * stride + p * m + c] = value.value();
            }
        }
    }
    out
}

/// Rotates each of the first `p` length-`m` blocks of `word` right by one;
/// trailing coordinates are left in place.
pub fn rotate_blocks(word: &[u8], m: usize, p: usize) -> Vec<u8> {
    let mut out = word.to_vec();
    for b in 0..p {
        let block = &word[b * m..(b + 1) * m];
        for (i, &c) in block.iter().enumerate() {
            out[b * m + (i + 1) % m] = c;
        }
    }
    out
}

/// True iff rotating every length-m block of every basis codeword by one
/// position yields a codeword. Coordinates beyond `p*m` (parity columns)
/// are held fixed.
pub fn row_shift_invariance_witness(code: &LinearCode, m: usize, p: usize) -> bool {
    if m == 0 || p == 0 || p * m > code.length() {
        return false;
    }
    code.basis()
        .rows()
        .all(|row| code.contains(&rotate_blocks(row, m, p)))
}

/// Circulant of `c * d mod x^m - 1`; used to cross-check circulant products.
pub fn circulant_of_product(c: &Polynomial, d: &Polynomial, m: usize) -> Result<Matrix, MatrixError> {
    let word = CyclicWord::from_poly(c, m)
        .and_then(|w| w.cyclic_mul(d))
        .map_err(|e| MatrixError::Shape(e.to_string()))?;
    Ok(circulant(&CirculantSpec::new(word.to_polynomial(), m)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> FieldSpec {
        FieldSpec::binary()
    }

    fn rows_of(m: &Matrix) -> Vec<Vec<u8>> {
        m.rows().map(<[u8]>::to_vec).collect()
    }

    #[test]
    fn circulant_examples() {
        let one = CirculantSpec::new(Polynomial::one(gf2()), 3).unwrap();
        assert_eq!(circulant(&one), Matrix::identity(gf2(), 3));

        let x = CirculantSpec::new(Polynomial::from_coeffs(gf2(), &[0, 1]), 3).unwrap();
        assert_eq!(rows_of(&circulant(&x)), vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]);

        let c = CirculantSpec::new(Polynomial::from_coeffs(gf2(), &[1, 1]), 3).unwrap();
        assert_eq!(rows_of(&circulant(&c)), vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
    }

    #[test]
    fn circulant_rejects_high_degree() {
        let p = Polynomial::from_coeffs(gf2(), &[1, 0, 0, 1]);
        assert!(CirculantSpec::new(p, 3).is_err());
    }

    #[test]
    fn expand_examples() {
        let f = gf2();
        let spec = QcGeneratorSpec::new(f, 3, vec![vec![Polynomial::one(f)]], vec![]).unwrap();
        assert_eq!(expand(&spec), Matrix::identity(f, 3));

        let g1 = Polynomial::from_coeffs(f, &[1, 1, 1, 0, 1]);
        let spec = QcGeneratorSpec::new(f, 7, vec![vec![g1.clone(), g1.clone()]], vec![]).unwrap();
        let g = expand(&spec);
        assert_eq!((g.n_rows(), g.n_cols()), (7, 14));
        for row in g.rows() {
            assert_eq!(row[..7], row[7..]);
        }
        assert_eq!(g.row(0), &[1, 1, 1, 0, 1, 0, 0, 1, 1, 1, 0, 1, 0, 0]);
    }

    #[test]
    fn expand_with_parity_band() {
        let f = gf2();
        let spec = QcGeneratorSpec::new(
            f,
            3,
            vec![vec![Polynomial::one(f)], vec![Polynomial::all_ones(f, 3)]],
            vec![vec![f.zero(), f.one()]],
        )
        .unwrap();
        let g = expand(&spec);
        assert_eq!((g.n_rows(), g.n_cols()), (6, 4));
        for i in 0..3 {
            assert_eq!(g.row(i)[3], 0);
            assert_eq!(g.row(i + 3), &[1, 1, 1, 1]);
        }
    }

    #[test]
    fn spec_validation() {
        let f = gf2();
        let f3 = FieldSpec::new(3).unwrap();
        let one = Polynomial::one(f);
        assert!(QcGeneratorSpec::new(f, 3, vec![], vec![]).is_err());
        assert!(QcGeneratorSpec::new(f, 3, vec![vec![one.clone()], vec![]], vec![]).is_err());
        assert!(QcGeneratorSpec::new(f, 3, vec![vec![Polynomial::one(f3)]], vec![]).is_err());
        assert!(QcGeneratorSpec::new(f, 3, vec![vec![one.clone()]], vec![vec![]]).is_err());
        assert!(QcGeneratorSpec::new(f, 0, vec![vec![one]], vec![]).is_err());
    }

    #[test]
    fn text_format() {
        let text = "3 2 3\n0 1 2\n2 2 0\n";
        let m = Matrix::parse(text).unwrap();
        assert_eq!(m.to_text(), text);
        assert!(Matrix::parse("3 2 3\n0 1 2\n").is_err());
        assert!(Matrix::parse("3 1 3\n0 1 3\n").is_err());
        assert!(Matrix::parse("4 1 1\n0\n").is_err());
        assert!(Matrix::parse("2 1\n0\n").is_err());
        assert!(Matrix::parse("").is_err());
        assert!(Matrix::parse("2 1 2\n0 1 1\n").is_err());
    }

    #[test]
    fn rotate_blocks_holds_tail() {
        assert_eq!(rotate_blocks(&[1, 0, 0, 0, 1, 0, 1], 3, 2), vec![0, 1, 0, 0, 0, 1, 1]);
    }
}
