//! Piecewise-linear maps given by their values on vertices.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::scalar::{cmp_values, Scalar};

/// A simplicial complex with a value at every vertex, extended linearly
/// over each simplex.
#[derive(Clone, Debug)]
pub struct VertexValuedMap<T> {
    complex: SimplicialComplex,
    values: Vec<T>,
    // per simplex: values of its vertices, in vertex order
    simplex_values: Vec<Vec<T>>,
}

impl<T: Scalar> VertexValuedMap<T> {
    pub fn new(complex: SimplicialComplex, values: impl IntoIterator<Item = (VertexId, T)>) -> Result<Self> {
        let mut given: HashMap<VertexId, T> = HashMap::new();
        for (v, x) in values {
            if complex.vertices().binary_search(&v).is_err() {
                return Err(Error::UnknownVertex(v));
            }
            if !x.is_finite_value() {
                return Err(Error::NonFiniteValue(v));
            }
            given.insert(v, x);
        }
        let values = complex
            .vertices()
            .iter()
            .map(|v| given.get(v).copied().ok_or(Error::MissingValue(*v)))
            .collect::<Result<Vec<T>>>()?;
        let position = |v: &VertexId| complex.vertices().binary_search(v).expect("vertex of the complex");
        let simplex_values = complex
            .simplices()
            .iter()
            .map(|s| s.vertices().iter().map(|v| values[position(v)]).collect())
            .collect();
        Ok(VertexValuedMap { complex, values, simplex_values })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn value(&self, v: VertexId) -> Option<T> {
        self.complex.vertices().binary_search(&v).ok().map(|i| self.values[i])
    }

    /// `(vertex, value)` pairs in vertex order.
    pub fn vertex_values(&self) -> impl Iterator<Item = (VertexId, T)> + '_ {
        self.complex.vertices().iter().copied().zip(self.values.iter().copied())
    }

    /// Values at the vertices of simplex `idx`, aligned with its vertex list.
    pub fn values_of(&self, idx: usize) -> &[T] {
        &self.simplex_values[idx]
    }

    pub fn max_of(&self, idx: usize) -> T {
        self.simplex_values[idx].iter().copied().max_by(cmp_values).expect("nonempty simplex")
    }

    pub fn min_of(&self, idx: usize) -> T {
        self.simplex_values[idx].iter().copied().min_by(cmp_values).expect("nonempty simplex")
    }

    pub fn is_constant_on(&self, idx: usize) -> bool {
        let v = &self.simplex_values[idx];
        v.iter().all(|x| *x == v[0])
    }
}

/// Critical values `t_0 < … < t_N` interleaved with regular values
/// `s_{-1} < t_0 < s_0 < … < t_N < s_N`.
///
/// Grid points are addressed by position: `2k + 1` is `t_k`, `2k + 2` is
/// `s_k`, and position 0 is the sentinel `s_{-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalGrid<T> {
    criticals: Vec<T>,
    regulars: Vec<T>,
}

impl<T: Scalar> CriticalGrid<T> {
    /// Grid for the given critical values (sorted and deduplicated here).
    pub fn from_criticals(mut criticals: Vec<T>) -> Result<Self> {
        criticals.sort_by(cmp_values);
        criticals.dedup();
        if criticals.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let n = criticals.len();
        let mut regulars = Vec::with_capacity(n + 1);
        regulars.push(criticals[0] - T::one());
        for w in criticals.windows(2) {
            let mid = T::midpoint(w[0], w[1]);
            if !(w[0] < mid && mid < w[1]) {
                return Err(Error::DegenerateGrid(w[0].to_decimal(), w[1].to_decimal()));
            }
            regulars.push(mid);
        }
        regulars.push(criticals[n - 1] + T::one());
        Ok(CriticalGrid { criticals, regulars })
    }

    pub fn criticals(&self) -> &[T] {
        &self.criticals
    }

    pub fn regulars(&self) -> &[T] {
        &self.regulars
    }

    pub fn critical_count(&self) -> usize {
        self.criticals.len()
    }

    /// Number of grid positions, `2 (N + 1) + 1`.
    pub fn len_points(&self) -> usize {
        2 * self.criticals.len() + 1
    }

    pub fn point(&self, pos: usize) -> T {
        if pos % 2 == 1 {
            self.criticals[pos / 2]
        } else {
            self.regulars[pos / 2]
        }
    }

    pub fn is_sentinel(&self, pos: usize) -> bool {
        pos == 0 || pos == self.len_points() - 1
    }

    pub fn critical_index(&self, value: T) -> Option<usize> {
        self.criticals.binary_search_by(|c| cmp_values(c, &value)).ok()
    }
}

/// Position of `t_k` in the grid.
pub const fn critical_pos(k: usize) -> usize {
    2 * k + 1
}

/// Position of the regular value just below `t_k`.
pub const fn below_pos(k: usize) -> usize {
    2 * k
}

/// Position of the regular value just above `t_k`.
pub const fn above_pos(k: usize) -> usize {
    2 * k + 2
}

/// All vertex values as potential critical values.
pub fn critical_values<T: Scalar>(f: &VertexValuedMap<T>) -> Result<CriticalGrid<T>> {
    CriticalGrid::from_criticals(f.values.clone())
}

/// Simplices in lower-star order with their entry values (the maximum
/// vertex value): by value, then dimension, then lexicographically.
pub fn lower_star_filtration<T: Scalar>(f: &VertexValuedMap<T>) -> Vec<(Simplex, T)> {
    let mut order: Vec<(usize, T)> = (0..f.complex.len()).map(|i| (i, f.max_of(i))).collect();
    // Simplex indices are already sorted by (dimension, lexicographic).
    order.sort_by(|a, b| match cmp_values(&a.1, &b.1) {
        Ordering::Equal => a.0.cmp(&b.0),
        o => o,
    });
    order.into_iter().map(|(i, v)| (f.complex.simplex(i).clone(), v)).collect()
}
