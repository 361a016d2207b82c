//! Prime fields GF(q).
//!
//! Elements are small residues tagged with their modulus so that mixing
//! elements of GF(2) and GF(3) in one process is caught at the call site.
//! Hot loops elsewhere in the crate work on raw `u8` residues through the
//! `*_raw` helpers on [`FieldSpec`].

use std::fmt;

use crate::error::FieldError;

/// Largest modulus accepted; residues are stored in a `u8`.
pub const MAX_MODULUS: u32 = 251;

/// The prime field GF(q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    q: u8,
}

impl FieldSpec {
    /// Creates GF(q), rejecting non-prime or out-of-range moduli.
    pub fn new(q: u32) -> Result<Self, FieldError> {
        if !(2..=MAX_MODULUS).contains(&q) || !is_prime(q) {
            return Err(FieldError::InvalidModulus(q));
        }
        Ok(Self { q: q as u8 })
    }

    /// GF(2).
    pub fn binary() -> Self {
        Self { q: 2 }
    }

    pub fn q(&self) -> u32 {
        u32::from(self.q)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { value: 0, q: self.q }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { value: 1, q: self.q }
    }

    /// Element with residue `value mod q`.
    pub fn element(&self, value: u64) -> FieldElement {
        FieldElement {
            value: (value % u64::from(self.q)) as u8,
            q: self.q,
        }
    }

    /// Element from a signed integer, so `-1` maps to `q - 1`.
    pub fn element_signed(&self, value: i64) -> FieldElement {
        FieldElement {
            value: value.rem_euclid(i64::from(self.q)) as u8,
            q: self.q,
        }
    }

    /// All field elements in residue order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |value| FieldElement { value, q: self.q })
    }

    pub fn contains(&self, e: FieldElement) -> bool {
        e.q == self.q
    }

    #[inline]
    pub fn add_raw(&self, a: u8, b: u8) -> u8 {
        let s = u16::from(a) + u16::from(b);
        let q = u16::from(self.q);
        (if s >= q { s - q } else { s }) as u8
    }

    #[inline]
    pub fn sub_raw(&self, a: u8, b: u8) -> u8 {
        self.add_raw(a, self.neg_raw(b))
    }

    #[inline]
    pub fn neg_raw(&self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul_raw(&self, a: u8, b: u8) -> u8 {
        ((u16::from(a) * u16::from(b)) % u16::from(self.q)) as u8
    }

    /// Multiplicative inverse of a nonzero residue, by Fermat's little theorem.
    pub fn inv_raw(&self, a: u8) -> Option<u8> {
        if a.is_multiple_of(self.q) {
            return None;
        }
        let mut result = 1u8;
        let mut base = a;
        let mut exp = self.q - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul_raw(result, base);
            }
            base = self.mul_raw(base, base);
            exp >>= 1;
        }
        Some(result)
    }

    fn check(&self, e: FieldElement) -> Result<(), FieldError> {
        if e.q != self.q {
            return Err(FieldError::Mismatch {
                left: self.q(),
                right: u32::from(e.q),
            });
        }
        Ok(())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

/// An element of a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u8,
    q: u8,
}

// Arithmetic returns `Result` because operands may come from different fields,
// so the `std::ops` traits do not fit.
#[allow(clippy::should_implement_trait)]
impl FieldElement {
    pub fn value(&self) -> u8 {
        self.value
    }

    pub fn field(&self) -> FieldSpec {
        FieldSpec { q: self.q }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn add(self, rhs: Self) -> Result<Self, FieldError> {
        let f = self.field();
        f.check(rhs)?;
        Ok(Self {
            value: f.add_raw(self.value, rhs.value),
            q: self.q,
        })
    }

    pub fn sub(self, rhs: Self) -> Result<Self, FieldError> {
        self.add(rhs.neg())
    }

    pub fn neg(self) -> Self {
        Self {
            value: self.field().neg_raw(self.value),
            q: self.q,
        }
    }

    pub fn mul(self, rhs: Self) -> Result<Self, FieldError> {
        let f = self.field();
        f.check(rhs)?;
        Ok(Self {
            value: f.mul_raw(self.value, rhs.value),
            q: self.q,
        })
    }

    pub fn inv(self) -> Result<Self, FieldError> {
        let value = self
            .field()
            .inv_raw(self.value)
            .ok_or(FieldError::ZeroInverse)?;
        Ok(Self { value, q: self.q })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
