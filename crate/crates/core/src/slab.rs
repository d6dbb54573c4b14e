//! Cell complexes for level sets `f⁻¹(t)` and interlevel sets `f⁻¹([a, b])`.
//!
//! A cell is a pair (carrier simplex, region). For a slice value `s`, the
//! slice cell of `σ` is `σ ∩ f⁻¹(s)` and exists when `σ` has vertices
//! strictly on both sides of `s` (dimension `dim σ − 1`) or when `f ≡ s` on
//! `σ` (dimension `dim σ`). Between two consecutive slice values `s < s'`
//! with no vertex value strictly between them, the slab cell of a
//! nonconstant `σ` is `σ ∩ f⁻¹([s, s'])` and exists when `min f|σ ≤ s` and
//! `max f|σ ≥ s'` (dimension `dim σ`).
//!
//! Every cell is a convex polytope, so its Z2 boundary is the set of its
//! codimension-one faces. A face `τ ∩ f⁻¹(s)` of a carrier facet `τ` that
//! does not cross `s` collapses to the face of `τ` spanned by its vertices
//! of value `s`. Level cells at `t` are literally the slice cells at `t` of
//! any interlevel complex with `t` as an endpoint, so inclusions are the
//! identity on cell ids.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::complex::Simplex;
use crate::error::{Error, Result};
use crate::function::VertexValuedMap;
use crate::scalar::{cmp_values, Scalar};
use crate::z2::{self, BitMatrix, BitVec, HomologyPresentation};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Region<T> {
    Slice(T),
    Slab(T, T),
}

impl<T: Scalar> Region<T> {
    fn cmp_key(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Region::Slice(a), Region::Slice(b)) => cmp_values(a, b),
            (Region::Slice(_), Region::Slab(..)) => Ordering::Less,
            (Region::Slab(..), Region::Slice(_)) => Ordering::Greater,
            (Region::Slab(a, b), Region::Slab(c, d)) => cmp_values(a, c).then_with(|| cmp_values(b, d)),
        }
    }
}

/// Identifies a cell by the simplex (index into the complex of the map)
/// whose relative interior it meets, and the region it lives in.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CellId<T> {
    pub carrier: usize,
    pub region: Region<T>,
}

impl<T: Scalar> CellId<T> {
    pub fn slice(carrier: usize, s: T) -> Self {
        CellId { carrier, region: Region::Slice(s) }
    }

    pub fn slab(carrier: usize, s: T, s2: T) -> Self {
        CellId { carrier, region: Region::Slab(s, s2) }
    }
}

impl<T: Scalar> Eq for CellId<T> {}

impl<T: Scalar> PartialOrd for CellId<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Ord for CellId<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.carrier.cmp(&other.carrier).then_with(|| self.region.cmp_key(&other.region))
    }
}

impl<T: Scalar> fmt::Display for CellId<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.region {
            Region::Slice(s) => write!(f, "simplex #{} ∩ f={}", self.carrier, s),
            Region::Slab(a, b) => write!(f, "simplex #{} ∩ {}≤f≤{}", self.carrier, a, b),
        }
    }
}

#[derive(Clone, Debug)]
struct Cell<T> {
    id: CellId<T>,
    dim: usize,
    boundary: Vec<usize>,
}

/// A finite cell complex with Z2 boundary. Cells are ordered by dimension
/// and then by id.
#[derive(Clone, Debug)]
pub struct CellComplex<T> {
    slice_values: Vec<T>,
    cells: Vec<Cell<T>>,
    index: BTreeMap<CellId<T>, usize>,
    // first global index of each dimension, plus a final end marker
    dim_start: Vec<usize>,
}

impl<T: Scalar> CellComplex<T> {
    /// Assembles a complex from `(id, dim, boundary ids)` triples without
    /// checking `∂∘∂ = 0`; see [`CellComplex::validate`].
    pub fn from_parts(mut slice_values: Vec<T>, parts: Vec<(CellId<T>, usize, Vec<CellId<T>>)>) -> Result<Self> {
        slice_values.sort_by(cmp_values);
        slice_values.dedup();
        let mut parts = parts;
        parts.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        let index: BTreeMap<CellId<T>, usize> = parts.iter().enumerate().map(|(i, p)| (p.0, i)).collect();
        if index.len() != parts.len() {
            return Err(Error::MalformedCell { cell: "?".into(), reason: "duplicate cell id".into() });
        }
        let top = parts.last().map_or(0, |p| p.1 + 1);
        let mut dim_start = vec![0; top + 1];
        for d in 0..=top {
            dim_start[d] = parts.iter().position(|p| p.1 >= d).unwrap_or(parts.len());
        }
        let cells = parts
            .into_iter()
            .map(|(id, dim, bd)| {
                let boundary = bd
                    .iter()
                    .map(|b| {
                        index.get(b).copied().ok_or_else(|| Error::MalformedCell {
                            cell: id.to_string(),
                            reason: format!("boundary cell {} is not in the complex", b),
                        })
                    })
                    .collect::<Result<Vec<usize>>>()?;
                Ok(Cell { id, dim, boundary })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CellComplex { slice_values, cells, index, dim_start })
    }

    pub fn slice_values(&self) -> &[T] {
        &self.slice_values
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell_ids(&self) -> impl Iterator<Item = (CellId<T>, usize)> + '_ {
        self.cells.iter().map(|c| (c.id, c.dim))
    }

    pub fn contains(&self, id: &CellId<T>) -> bool {
        self.index.contains_key(id)
    }

    pub fn boundary_of(&self, id: &CellId<T>) -> Option<Vec<CellId<T>>> {
        self.index.get(id).map(|&i| self.cells[i].boundary.iter().map(|&b| self.cells[b].id).collect())
    }

    /// Top cell dimension plus one (0 for the empty complex).
    pub fn dim_count(&self) -> usize {
        self.dim_start.len() - 1
    }

    pub fn count_of_dim(&self, d: usize) -> usize {
        if d >= self.dim_count() {
            0
        } else {
            self.dim_start[d + 1] - self.dim_start[d]
        }
    }

    fn local_index(&self, global: usize) -> usize {
        global - self.dim_start[self.cells[global].dim]
    }

    /// `∂_d : C_d → C_{d-1}`.
    pub fn boundary_matrix(&self, d: usize) -> BitMatrix {
        let rows = if d == 0 { 0 } else { self.count_of_dim(d - 1) };
        let cols = (0..self.count_of_dim(d))
            .map(|j| {
                let cell = &self.cells[self.dim_start[d] + j];
                BitVec::from_indices(rows, cell.boundary.iter().map(|&b| self.local_index(b)))
            })
            .collect();
        BitMatrix::from_columns(rows, cols)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells.iter().map(|c| if c.dim % 2 == 0 { 1 } else { -1 }).sum()
    }

    /// Checks facet dimensions and `∂∘∂ = 0`, naming the first offending cell.
    pub fn validate(&self) -> Result<()> {
        for cell in &self.cells {
            if cell.dim == 0 && !cell.boundary.is_empty() {
                return Err(self.malformed(cell, "a vertex cell has a nonempty boundary".into()));
            }
            if let Some(&b) = cell.boundary.iter().find(|&&b| self.cells[b].dim + 1 != cell.dim) {
                return Err(self.malformed(cell, format!("boundary cell {} has the wrong dimension", self.cells[b].id)));
            }
            let mut twice = BTreeSet::new();
            for &b in &cell.boundary {
                for &bb in &self.cells[b].boundary {
                    if !twice.remove(&bb) {
                        twice.insert(bb);
                    }
                }
            }
            if let Some(&bb) = twice.iter().next() {
                return Err(self.malformed(cell, format!("∂∂ contains {}", self.cells[bb].id)));
            }
        }
        Ok(())
    }

    fn malformed(&self, cell: &Cell<T>, reason: String) -> Error {
        Error::MalformedCell { cell: cell.id.to_string(), reason }
    }
}

struct Builder<'a, T> {
    f: &'a VertexValuedMap<T>,
}

impl<T: Scalar> Builder<'_, T> {
    /// The cell that `σ ∩ f⁻¹(s)` canonically is, with its dimension.
    fn slice_cell(&self, sigma: usize, s: T) -> Option<(usize, usize)> {
        let vals = self.f.values_of(sigma);
        let below = vals.iter().any(|v| *v < s);
        let above = vals.iter().any(|v| *v > s);
        if below && above {
            return Some((sigma, self.f.complex().simplex(sigma).dim() - 1));
        }
        let on: Vec<_> = self
            .f
            .complex()
            .simplex(sigma)
            .vertices()
            .iter()
            .zip(vals)
            .filter(|(_, v)| **v == s)
            .map(|(id, _)| *id)
            .collect();
        if on.is_empty() {
            return None;
        }
        let dim = on.len() - 1;
        let face = Simplex::new(on).expect("face of a simplex");
        let idx = self.f.complex().index_of(&face).expect("complex is face-closed");
        Some((idx, dim))
    }

    fn spans(&self, sigma: usize, s: T, s2: T) -> bool {
        self.f.min_of(sigma) <= s && self.f.max_of(sigma) >= s2
    }

    fn build(&self, slices: Vec<T>) -> Result<CellComplex<T>> {
        let mut slices = slices;
        slices.sort_by(cmp_values);
        slices.dedup();
        let complex = self.f.complex();
        let mut parts = Vec::new();

        for &s in &slices {
            for sigma in 0..complex.len() {
                let Some((carrier, dim)) = self.slice_cell(sigma, s) else { continue };
                if carrier != sigma {
                    continue;
                }
                let boundary: BTreeSet<CellId<T>> = if dim == 0 {
                    BTreeSet::new()
                } else {
                    complex
                        .facets_of(sigma)
                        .iter()
                        .filter_map(|&tau| self.slice_cell(tau, s))
                        .filter(|&(_, d)| d + 1 == dim)
                        .map(|(c, _)| CellId::slice(c, s))
                        .collect()
                };
                parts.push((CellId::slice(sigma, s), dim, boundary.into_iter().collect()));
            }
        }

        for w in slices.windows(2) {
            let (s, s2) = (w[0], w[1]);
            for sigma in 0..complex.len() {
                if !self.spans(sigma, s, s2) {
                    continue;
                }
                let dim = complex.simplex(sigma).dim();
                let mut candidates: Vec<(CellId<T>, usize)> = Vec::new();
                for v in [s, s2] {
                    if let Some((c, d)) = self.slice_cell(sigma, v) {
                        candidates.push((CellId::slice(c, v), d));
                    }
                }
                for &tau in complex.facets_of(sigma) {
                    if self.spans(tau, s, s2) {
                        candidates.push((CellId::slab(tau, s, s2), dim - 1));
                    } else {
                        let v = if self.f.max_of(tau) <= s { s } else { s2 };
                        if let Some((c, d)) = self.slice_cell(tau, v) {
                            candidates.push((CellId::slice(c, v), d));
                        }
                    }
                }
                let boundary: BTreeSet<CellId<T>> =
                    candidates.into_iter().filter(|&(_, d)| d + 1 == dim).map(|(c, _)| c).collect();
                parts.push((CellId::slab(sigma, s, s2), dim, boundary.into_iter().collect()));
            }
        }

        let c = CellComplex::from_parts(slices, parts)?;
        c.validate()?;
        Ok(c)
    }
}

/// Cell complex of the level set `f⁻¹(t)`.
pub fn level_complex<T: Scalar>(f: &VertexValuedMap<T>, t: T) -> Result<CellComplex<T>> {
    Builder { f }.build(vec![t])
}

/// Cell complex of the interlevel set `f⁻¹([a, b])`.
pub fn interlevel_complex<T: Scalar>(f: &VertexValuedMap<T>, a: T, b: T) -> Result<CellComplex<T>> {
    interlevel_complex_refined(f, a, b, &[])
}

/// Like [`interlevel_complex`] with additional slice values inside `(a, b)`;
/// extra values outside the interval are ignored.
pub fn interlevel_complex_refined<T: Scalar>(f: &VertexValuedMap<T>, a: T, b: T, extra: &[T]) -> Result<CellComplex<T>> {
    if a > b {
        return Err(Error::ReversedInterval(a.to_decimal(), b.to_decimal()));
    }
    let inside = |v: &T| a < *v && *v < b;
    let mut slices = vec![a, b];
    slices.extend(f.vertex_values().map(|(_, v)| v).filter(inside));
    slices.extend(extra.iter().copied().filter(inside));
    Builder { f }.build(slices)
}

/// For each cell of `src`, its index in `dst`; checks that boundaries
/// are carried onto boundaries.
pub fn cell_inclusion<T: Scalar>(src: &CellComplex<T>, dst: &CellComplex<T>) -> Result<Vec<usize>> {
    let map = src
        .cells
        .iter()
        .map(|c| {
            dst.index.get(&c.id).copied().ok_or_else(|| Error::MalformedCell {
                cell: c.id.to_string(),
                reason: "missing from the target complex".into(),
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    for (c, &image) in src.cells.iter().zip(&map) {
        let mapped: BTreeSet<usize> = c.boundary.iter().map(|&b| map[b]).collect();
        let target: BTreeSet<usize> = dst.cells[image].boundary.iter().copied().collect();
        if mapped != target || dst.cells[image].dim != c.dim {
            return Err(Error::MalformedCell {
                cell: c.id.to_string(),
                reason: "inclusion does not commute with the boundary".into(),
            });
        }
    }
    Ok(map)
}

/// Degree-`d` chain map of a cell inclusion, `C_d(src) → C_d(dst)`.
pub fn inclusion_chain_map<T: Scalar>(src: &CellComplex<T>, dst: &CellComplex<T>, cell_map: &[usize], d: usize) -> BitMatrix {
    let rows = dst.count_of_dim(d);
    let cols = (0..src.count_of_dim(d))
        .map(|j| BitVec::unit(rows, dst.local_index(cell_map[src.dim_start[d] + j])))
        .collect();
    BitMatrix::from_columns(rows, cols)
}

/// The inclusion `f⁻¹(t) ↪ f⁻¹([a, b])` for `t ∈ {a, b}`.
#[derive(Clone, Debug)]
pub struct InclusionMap<T> {
    pub src: CellComplex<T>,
    pub dst: CellComplex<T>,
    pub cell_map: Vec<usize>,
}

impl<T: Scalar> InclusionMap<T> {
    pub fn chain_map(&self, d: usize) -> BitMatrix {
        inclusion_chain_map(&self.src, &self.dst, &self.cell_map, d)
    }

    /// Matrix of the induced map `H_d(src) → H_d(dst)`.
    pub fn induced(&self, d: usize) -> Result<BitMatrix> {
        z2::induced_map(&homology_of(&self.src, d)?, &homology_of(&self.dst, d)?, &self.chain_map(d))
    }
}

pub fn include_level<T: Scalar>(f: &VertexValuedMap<T>, t: T, a: T, b: T) -> Result<InclusionMap<T>> {
    if t != a && t != b {
        return Err(Error::NotAnEndpoint(t.to_decimal()));
    }
    let src = level_complex(f, t)?;
    let dst = interlevel_complex(f, a, b)?;
    let cell_map = cell_inclusion(&src, &dst)?;
    Ok(InclusionMap { src, dst, cell_map })
}

/// Degree-`r` homology of a cell complex.
pub fn homology_of<T: Scalar>(c: &CellComplex<T>, r: usize) -> Result<HomologyPresentation> {
    z2::homology_presentation(&c.boundary_matrix(r + 1), &c.boundary_matrix(r))
}

/// Betti numbers in degrees `0..=max_degree`.
pub fn betti_numbers<T: Scalar>(c: &CellComplex<T>, max_degree: usize) -> Result<Vec<usize>> {
    (0..=max_degree).map(|r| homology_of(c, r).map(|h| h.betti())).collect()
}
