use super::{BitMatrix, BitVec};
use crate::error::{Error, Result};

/// Column reduction with the "low" pivot (highest nonzero row) and a record
/// of which original columns were added into each reduced column.
pub(crate) struct Reduction {
    pub reduced: Vec<BitVec>,
    pub transform: Vec<BitVec>,
    /// `pivot_of_row[r]` is the column whose low entry is `r`.
    pub pivot_of_row: Vec<Option<usize>>,
}

impl Reduction {
    pub fn run(m: &BitMatrix) -> Self {
        let n = m.ncols();
        let mut reduced: Vec<BitVec> = Vec::with_capacity(n);
        let mut transform: Vec<BitVec> = Vec::with_capacity(n);
        let mut pivot_of_row = vec![None; m.nrows()];
        for j in 0..n {
            let mut col = m.column(j).clone();
            let mut track = BitVec::unit(n, j);
            while let Some(low) = col.last_one() {
                match pivot_of_row[low] {
                    Some(k) => {
                        col.xor_assign(&reduced[k]);
                        track.xor_assign(&transform[k]);
                    }
                    None => {
                        pivot_of_row[low] = Some(j);
                        break;
                    }
                }
            }
            reduced.push(col);
            transform.push(track);
        }
        Reduction { reduced, transform, pivot_of_row }
    }

    pub fn rank(&self) -> usize {
        self.reduced.iter().filter(|c| !c.is_zero()).count()
    }

    /// Reduces `v` against the pivots; returns the remainder and the
    /// combination of original columns that was added.
    pub fn reduce_vector(&self, v: &BitVec) -> (BitVec, BitVec) {
        let mut rest = v.clone();
        let mut combo = BitVec::zeros(self.reduced.len());
        while let Some(low) = rest.last_one() {
            match self.pivot_of_row[low] {
                Some(k) => {
                    rest.xor_assign(&self.reduced[k]);
                    combo.xor_assign(&self.transform[k]);
                }
                None => break,
            }
        }
        (rest, combo)
    }
}

/// A linear subspace of Z2^ambient_dim with an independent basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: BitMatrix,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: BitMatrix::zeros(ambient_dim, 0) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: BitMatrix::identity(ambient_dim) }
    }

    /// The span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient_dim: usize, vectors: Vec<BitVec>) -> Self {
        image_basis(&BitMatrix::from_columns(ambient_dim, vectors))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis(&self) -> &BitMatrix {
        &self.basis
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let (rest, _) = Reduction::run(&self.basis).reduce_vector(v);
        rest.is_zero()
    }
}

pub fn rank(m: &BitMatrix) -> usize {
    Reduction::run(m).rank()
}

/// Basis of `{v : m v = 0}`.
pub fn kernel_basis(m: &BitMatrix) -> Subspace {
    let red = Reduction::run(m);
    let cols = red
        .reduced
        .iter()
        .zip(red.transform)
        .filter(|(c, _)| c.is_zero())
        .map(|(_, t)| t)
        .collect();
    Subspace { ambient_dim: m.ncols(), basis: BitMatrix::from_columns(m.ncols(), cols) }
}

/// Basis of the column span of `m`.
pub fn image_basis(m: &BitMatrix) -> Subspace {
    let red = Reduction::run(m);
    let cols = red.reduced.into_iter().filter(|c| !c.is_zero()).collect();
    Subspace { ambient_dim: m.nrows(), basis: BitMatrix::from_columns(m.nrows(), cols) }
}

pub fn intersection_dim(a: &Subspace, b: &Subspace) -> Result<usize> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::AmbientMismatch { left: a.ambient_dim, right: b.ambient_dim });
    }
    Ok(a.dim() + b.dim() - rank(&a.basis.hstack(&b.basis)))
}

/// Birth/death pairing of a filtered boundary matrix.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pairing {
    /// `(birth column, death column)`, sorted by death column.
    pub pairs: Vec<(usize, usize)>,
    /// Positive columns never killed, in increasing order.
    pub essential: Vec<usize>,
}

/// Standard persistence reduction of a square boundary matrix whose columns
/// (and rows) are indexed by the filtration order.
pub fn column_reduce(ordered_boundary: &BitMatrix) -> Result<Pairing> {
    let n = ordered_boundary.ncols();
    if ordered_boundary.nrows() != n {
        return Err(Error::ShapeMismatch(format!(
            "filtered boundary matrix must be square, got {}x{}",
            ordered_boundary.nrows(),
            n
        )));
    }
    for j in 0..n {
        if let Some(row) = ordered_boundary.column(j).last_one() {
            if row >= j {
                return Err(Error::FiltrationOrder { column: j, row });
            }
        }
    }
    let red = Reduction::run(ordered_boundary);
    let mut pairs = Vec::new();
    let mut killed = vec![false; n];
    for (j, col) in red.reduced.iter().enumerate() {
        if let Some(low) = col.last_one() {
            pairs.push((low, j));
            killed[low] = true;
        }
    }
    let essential = (0..n).filter(|&j| red.reduced[j].is_zero() && !killed[j]).collect();
    Ok(Pairing { pairs, essential })
}
