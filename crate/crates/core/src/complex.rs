//! Finite abstract simplicial complexes.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::z2::{self, BitMatrix, BitVec};

pub type VertexId = u32;

/// A simplex, stored as its strictly increasing vertex list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Sorts the vertices; fails if one is repeated.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        let original = vertices.clone();
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(original));
        }
        Ok(Simplex(vertices))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// Codimension-one faces, obtained by dropping each vertex in turn.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = if self.0.len() > 1 { self.0.len() } else { 0 };
        (0..n).map(move |skip| {
            Simplex(self.0.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| *v).collect())
        })
    }

    /// All nonempty faces, including the simplex itself.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (1u32..(1u32 << n)).map(move |mask| {
            Simplex((0..n).filter(|i| mask >> i & 1 == 1).map(|i| self.0[i]).collect())
        })
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A face-closed set of simplices.
///
/// Simplices are kept sorted by dimension and then lexicographically; their
/// position in that order is their index.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertices: Vec<VertexId>,
    simplices: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
    facets: Vec<Vec<usize>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.simplices == other.simplices
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Closure of the given simplices under taking faces.
    pub fn build<S: AsRef<[VertexId]>>(maximal_simplices: &[S]) -> Result<Self> {
        let mut all = BTreeSet::new();
        for s in maximal_simplices {
            let s = Simplex::new(s.as_ref().to_vec())?;
            if s.0.is_empty() {
                continue;
            }
            all.extend(s.faces());
        }
        Ok(Self::from_closed(all))
    }

    fn from_closed(all: BTreeSet<Simplex>) -> Self {
        let mut simplices: Vec<Simplex> = all.into_iter().collect();
        simplices.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        let index: HashMap<Simplex, usize> = simplices.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let facets = simplices.iter().map(|s| s.facets().map(|f| index[&f]).collect()).collect();
        let vertices = simplices.iter().take_while(|s| s.dim() == 0).map(|s| s.0[0]).collect();
        SimplicialComplex { vertices, simplices, index, facets }
    }

    pub fn empty() -> Self {
        Self::from_closed(BTreeSet::new())
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Sorted vertex ids.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn simplex(&self, idx: usize) -> &Simplex {
        &self.simplices[idx]
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    /// Indices of the facets of simplex `idx`.
    pub fn facets_of(&self, idx: usize) -> &[usize] {
        &self.facets[idx]
    }

    /// Top dimension, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.last().map(Simplex::dim)
    }

    pub fn count_of_dim(&self, d: usize) -> usize {
        self.simplices.iter().filter(|s| s.dim() == d).count()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.simplices.iter().all(|s| other.contains(s))
    }

    /// Maximal simplices, i.e. those that are not a facet of another simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered = vec![false; self.len()];
        for fs in &self.facets {
            for &f in fs {
                covered[f] = true;
            }
        }
        self.simplices.iter().zip(covered).filter(|(_, c)| !c).map(|(s, _)| s.clone()).collect()
    }

    /// The subcomplex made of the simplices accepted by `keep`; `keep` must
    /// be face-closed for the result to be a complex.
    pub fn subcomplex(&self, mut keep: impl FnMut(&Simplex) -> bool) -> SimplicialComplex {
        Self::from_closed(self.simplices.iter().filter(|s| keep(s)).cloned().collect())
    }

    /// Boundary matrix `C_d → C_{d-1}` in the simplex order of each dimension.
    pub fn boundary_matrix(&self, d: usize) -> BitMatrix {
        let start = |k: usize| self.simplices.iter().position(|s| s.dim() >= k).unwrap_or(self.len());
        let (lo, hi) = (start(d), start(d + 1));
        if d == 0 {
            return BitMatrix::zeros(0, hi - lo);
        }
        let (rlo, rhi) = (start(d - 1), lo);
        let cols = (lo..hi)
            .map(|j| BitVec::from_indices(rhi - rlo, self.facets[j].iter().map(|&f| f - rlo)))
            .collect();
        BitMatrix::from_columns(rhi - rlo, cols)
    }

    /// Z2 Betti numbers in degrees `0..=dim`.
    pub fn betti_numbers(&self) -> Vec<usize> {
        let Some(top) = self.dim() else { return Vec::new() };
        (0..=top)
            .map(|d| {
                let out = self.boundary_matrix(d);
                let cycles = out.ncols() - z2::rank(&out);
                cycles - z2::rank(&self.boundary_matrix(d + 1))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_triangle() {
        let k = SimplicialComplex::build(&[[0, 1, 2]]).unwrap();
        assert_eq!(k.len(), 7);
        assert_eq!(k.dim(), Some(2));
        assert_eq!(k.betti_numbers(), vec![1, 0, 0]);
    }

    #[test]
    fn square_circle() {
        let k = SimplicialComplex::build(&[[0, 1], [1, 2], [2, 3], [3, 0]]).unwrap();
        assert_eq!(k.len(), 8);
        assert_eq!(k.betti_numbers(), vec![1, 1]);
    }

    #[test]
    fn octahedron_count() {
        // 0 = north, 1 = south, 2..=5 equator
        let mut tris = Vec::new();
        for pole in [0u32, 1] {
            for i in 0..4u32 {
                tris.push(vec![pole, 2 + i, 2 + (i + 1) % 4]);
            }
        }
        let k = SimplicialComplex::build(&tris).unwrap();
        assert_eq!(k.len(), 26);
        assert_eq!(k.betti_numbers(), vec![1, 0, 1]);
    }

    #[test]
    fn duplicate_vertex_rejected() {
        assert_eq!(SimplicialComplex::build(&[[0, 1, 0]]), Err(Error::DuplicateVertex(vec![0, 1, 0])));
    }

    #[test]
    fn rebuild_is_idempotent() {
        let k = SimplicialComplex::build(&[vec![0, 1, 2], vec![2, 3], vec![4]]).unwrap();
        let all: Vec<Vec<VertexId>> = k.simplices().iter().map(|s| s.vertices().to_vec()).collect();
        assert_eq!(SimplicialComplex::build(&all).unwrap(), k);
        let max: Vec<Vec<VertexId>> = k.maximal_simplices().iter().map(|s| s.vertices().to_vec()).collect();
        assert_eq!(max, vec![vec![4], vec![2, 3], vec![0, 1, 2]]);
    }
}
