//! Coefficient fields for homology ranks: GF(2) with bit-packed rows and
//! GF(p) for a prime p < 2^31.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
#[derive(Default)]
pub enum Field {
    #[default]
    Gf2,
    Gfp(u32),
}

impl Field {
    pub const CROSS_CHECK_PRIME: u32 = 32003;

    /// GF(p); `p = 2` yields `Field::Gf2`.
    pub fn prime(p: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("{p} is too large (limit 2^31)")));
        }
        Ok(if p == 2 { Field::Gf2 } else { Field::Gfp(p) })
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Gf2 => 2,
            Field::Gfp(p) => p,
        }
    }
}


impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Gf2 => f.write_str("gf2"),
            Field::Gfp(p) => write!(f, "gfp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        if s.eq_ignore_ascii_case("gf2") {
            return Ok(Field::Gf2);
        }
        let p = s
            .strip_prefix("gfp:")
            .ok_or_else(|| Error::InvalidField(format!("`{s}`: expected gf2 or gfp:P")))?;
        let p: u32 = p
            .parse()
            .map_err(|e| Error::InvalidField(format!("`{s}`: {e}")))?;
        Field::prime(p)
    }
}

impl From<Field> for String {
    fn from(f: Field) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for Field {
    type Error = Error;

    fn try_from(s: String) -> Result<Field> {
        s.parse()
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Incremental row echelon basis over a field; `rank()` is the dimension of
/// the span of everything pushed so far.
pub(crate) enum Echelon {
    Gf2 {
        pivots: HashMap<usize, Vec<u64>>,
    },
    Gfp {
        p: u64,
        pivots: HashMap<usize, Vec<u64>>,
    },
}

impl Echelon {
    pub(crate) fn new(field: Field) -> Self {
        match field {
            Field::Gf2 => Echelon::Gf2 {
                pivots: HashMap::new(),
            },
            Field::Gfp(p) => Echelon::Gfp {
                p: p as u64,
                pivots: HashMap::new(),
            },
        }
    }

    pub(crate) fn rank(&self) -> usize {
        match self {
            Echelon::Gf2 { pivots } | Echelon::Gfp { pivots, .. } => pivots.len(),
        }
    }

    /// Pushes a sparse row given as `(column, coefficient)` pairs with
    /// coefficients in {-1, +1}.
    pub(crate) fn push_signed(&mut self, entries: &[(usize, i8)], columns: usize) {
        match self {
            Echelon::Gf2 { pivots } => {
                let mut row = vec![0u64; columns.div_ceil(64)];
                for &(c, _) in entries {
                    row[c / 64] ^= 1 << (c % 64);
                }
                loop {
                    let Some(lead) = leading_bit(&row) else { return };
                    match pivots.get(&lead) {
                        Some(pivot) => {
                            for (a, b) in row.iter_mut().zip(pivot) {
                                *a ^= b;
                            }
                        }
                        None => {
                            pivots.insert(lead, row);
                            return;
                        }
                    }
                }
            }
            Echelon::Gfp { p, pivots } => {
                let p = *p;
                let mut row = vec![0u64; columns];
                for &(c, s) in entries {
                    row[c] = (row[c] + if s > 0 { 1 } else { p - 1 }) % p;
                }
                loop {
                    let Some(lead) = row.iter().position(|&x| x != 0) else { return };
                    match pivots.get(&lead) {
                        Some(pivot) => {
                            let factor = row[lead];
                            for (a, &b) in row.iter_mut().zip(pivot).skip(lead) {
                                *a = (*a + p - factor * b % p) % p;
                            }
                        }
                        None => {
                            let inv = pow_mod(row[lead], p - 2, p);
                            for a in row.iter_mut().skip(lead) {
                                *a = *a * inv % p;
                            }
                            pivots.insert(lead, row);
                            return;
                        }
                    }
                }
            }
        }
    }
}

fn leading_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
