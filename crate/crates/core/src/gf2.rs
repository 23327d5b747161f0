//! Dense linear algebra over GF(2).
//!
//! Vectors are packed into 64-bit words. Matrices keep their columns packed,
//! since every operation the reductions need (rank, column selection, basis
//! expansion) works column by column.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Vector of length `len` with ones at `indices`.
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Parity of the inner product with `other`.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot product");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + bit)
            })
        })
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "BitVec({s})")
    }
}

/// An `rows × cols` matrix over GF(2). Either dimension may be zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    rows: usize,
    columns: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            columns: vec![BitVec::zeros(rows); cols],
        }
    }

    pub fn from_columns(rows: usize, columns: Vec<BitVec>) -> Result<Self> {
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch {
                expected: rows,
                found: bad.len(),
            });
        }
        Ok(Self { rows, columns })
    }

    /// Builds a matrix from row bit patterns, each of length `cols`.
    pub fn from_rows(cols: usize, rows: &[BitVec]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for j in row.iter_ones() {
                m.columns[j].set(i, true);
            }
        }
        Ok(m)
    }

    pub fn from_bool_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let packed: Vec<BitVec> = rows.iter().map(|r| BitVec::from_bools(r)).collect();
        Self::from_rows(cols, &packed)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.columns[col].get(row)
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.columns[col].set(row, value);
    }

    pub fn column(&self, col: usize) -> &BitVec {
        &self.columns[col]
    }

    pub fn row(&self, row: usize) -> BitVec {
        let mut r = BitVec::zeros(self.cols());
        for (j, c) in self.columns.iter().enumerate() {
            if c.get(row) {
                r.set(j, true);
            }
        }
        r
    }
}

/// Incremental column echelon form. Each stored vector has a distinct pivot
/// (its lowest set coordinate) and remembers which inserted columns it is the
/// sum of.
struct Echelon {
    pivots: Vec<(usize, BitVec, BitVec)>,
    tracked: usize,
}

impl Echelon {
    fn new(tracked: usize) -> Self {
        Self {
            pivots: Vec::new(),
            tracked,
        }
    }

    /// Reduces `v` against the stored vectors; returns the residue and the
    /// combination of inserted columns that was subtracted.
    fn reduce(&self, v: &BitVec) -> (BitVec, BitVec) {
        let mut residue = v.clone();
        let mut combo = BitVec::zeros(self.tracked);
        for (pivot, vec, c) in &self.pivots {
            if residue.get(*pivot) {
                residue.xor_assign(vec);
                combo.xor_assign(c);
            }
        }
        (residue, combo)
    }

    /// Inserts `v` labelled as tracked column `label`. Returns false if `v`
    /// already lies in the span.
    fn insert(&mut self, v: &BitVec, label: usize) -> bool {
        let (residue, mut combo) = self.reduce(v);
        let Some(pivot) = residue.first_one() else {
            return false;
        };
        combo.flip(label);
        // Keep earlier vectors free of the new pivot so reduction stays a
        // single pass.
        for (_, vec, c) in &mut self.pivots {
            if vec.get(pivot) {
                vec.xor_assign(&residue);
                c.xor_assign(&combo);
            }
        }
        self.pivots.push((pivot, residue, combo));
        true
    }
}

pub fn rank(mat: &BitMatrix) -> usize {
    independent_columns(mat).len()
}

/// Greedy leftmost maximal independent set of columns, in increasing order.
pub fn independent_columns(mat: &BitMatrix) -> Vec<usize> {
    let mut echelon = Echelon::new(mat.cols());
    (0..mat.cols())
        .filter(|&j| echelon.insert(mat.column(j), j))
        .collect()
}

/// Writes column `col` as a sum of columns from `basis`.
///
/// Returns the (sorted) subset of `basis` whose sum equals column `col`.
pub fn express_in_basis(mat: &BitMatrix, basis: &[usize], col: usize) -> Result<Vec<usize>> {
    let mut echelon = Echelon::new(basis.len());
    for (slot, &b) in basis.iter().enumerate() {
        if !echelon.insert(mat.column(b), slot) {
            return Err(Error::InvalidParameter(format!(
                "basis column {b} is dependent on earlier basis columns"
            )));
        }
    }
    let (residue, combo) = echelon.reduce(mat.column(col));
    if !residue.is_zero() {
        return Err(Error::NotInSpan(col));
    }
    let mut picked: Vec<usize> = combo.iter_ones().map(|slot| basis[slot]).collect();
    picked.sort_unstable();
    Ok(picked)
}

/// Solves `mat · z = rhs`. Free variables are set to zero.
pub fn solve_affine(mat: &BitMatrix, rhs: &BitVec) -> Result<Option<BitVec>> {
    if rhs.len() != mat.rows() {
        return Err(Error::DimensionMismatch {
            expected: mat.rows(),
            found: rhs.len(),
        });
    }
    let n = mat.cols();
    // Augmented rows: coefficients followed by the right-hand side bit.
    let mut rows: Vec<BitVec> = (0..mat.rows())
        .map(|i| {
            let mut r = BitVec::zeros(n + 1);
            for j in 0..n {
                if mat.get(i, j) {
                    r.set(j, true);
                }
            }
            r.set(n, rhs.get(i));
            r
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut next = 0;
    for col in 0..n {
        let Some(found) = (next..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(next, found);
        let pivot_row = rows[next].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != next && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivot_cols.push(col);
        next += 1;
    }
    if rows[next..].iter().any(|r| r.get(n)) {
        return Ok(None);
    }
    let mut z = BitVec::zeros(n);
    for (i, &col) in pivot_cols.iter().enumerate() {
        z.set(col, rows[i].get(n));
    }
    Ok(Some(z))
}
