//! Linear algebra over the two-element field.
//!
//! Vectors are bit-packed into `u64` words and matrices are stored by
//! column, which is the natural layout for column reduction.

mod homology;
mod reduce;

pub use homology::{homology_presentation, induced_map, HomologyPresentation};
pub use reduce::{column_reduce, image_basis, intersection_dim, kernel_basis, rank, Pairing, Subspace};

use std::fmt;

const WORD: usize = 64;

/// A vector in Z2^len.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(WORD)] }
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.toggle(i);
        }
        v
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        Self::from_indices(bits.len(), bits.iter().enumerate().filter(|(_, b)| **b != 0).map(|(i, _)| i))
    }

    pub fn unit(len: usize, i: usize) -> Self {
        Self::from_indices(len, [i])
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {} out of range {}", i, self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        if self.get(i) != bit {
            self.toggle(i);
        }
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "bit {} out of range {}", i, self.len);
        self.words[i / WORD] ^= 1 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    /// Index of the highest set bit (the "low" entry of a column).
    pub fn last_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, w)| **w != 0)
            .map(|(k, w)| k * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum::<u32>() % 2 == 1
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "[{}]", s)
    }
}

/// A `rows × cols` matrix over Z2, stored column by column.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix { rows, cols: vec![BitVec::zeros(rows); cols] }
    }

    pub fn identity(n: usize) -> Self {
        BitMatrix { rows: n, cols: (0..n).map(|i| BitVec::unit(n, i)).collect() }
    }

    /// Builds a matrix from its columns; every column must have length `rows`.
    pub fn from_columns(rows: usize, cols: Vec<BitVec>) -> Self {
        assert!(cols.iter().all(|c| c.len() == rows), "column length mismatch");
        BitMatrix { rows, cols }
    }

    /// Builds a matrix from row-major 0/1 entries.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), ncols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), ncols, "ragged rows");
            for (j, &b) in row.iter().enumerate() {
                if b != 0 {
                    m.cols[j].toggle(i);
                }
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cols[col].get(row)
    }

    pub fn set(&mut self, row: usize, col: usize, bit: bool) {
        self.cols[col].set(row, bit);
    }

    pub fn column(&self, j: usize) -> &BitVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[BitVec] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<BitVec> {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BitVec::is_zero)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.ncols(), self.rows);
        for (j, col) in self.cols.iter().enumerate() {
            for i in col.ones() {
                t.cols[i].toggle(j);
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.ncols(), "vector length mismatch");
        let mut out = BitVec::zeros(self.rows);
        for j in v.ones() {
            out.xor_assign(&self.cols[j]);
        }
        out
    }

    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.ncols(), rhs.nrows(), "matrix shapes do not compose");
        BitMatrix { rows: self.rows, cols: rhs.cols.iter().map(|c| self.mul_vec(c)).collect() }
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, rhs.rows, "row count mismatch");
        let mut cols = self.cols.clone();
        cols.extend(rhs.cols.iter().cloned());
        BitMatrix { rows: self.rows, cols }
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.ncols())?;
        for i in 0..self.rows {
            let row: String = (0..self.ncols()).map(|j| if self.get(i, j) { '1' } else { '0' }).collect();
            writeln!(f, "  {}", row)?;
        }
        Ok(())
    }
}
