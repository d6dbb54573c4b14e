//! Filtrations and the telescope construction that turns a filtration into a
//! piecewise-linear map with the same sub-level persistence.

use std::collections::BTreeMap;

use crate::complex::{SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::function::VertexValuedMap;
use crate::scalar::Scalar;

/// A nested sequence `K_0 ⊆ K_1 ⊆ … ⊆ K_N` with strictly increasing times.
#[derive(Clone, Debug)]
pub struct Filtration<T> {
    stages: Vec<SimplicialComplex>,
    times: Vec<T>,
}

impl<T: Scalar> Filtration<T> {
    pub fn new(stages: Vec<SimplicialComplex>, times: Vec<T>) -> Result<Self> {
        if stages.is_empty() || stages.len() != times.len() || times.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::BadFiltrationTimes);
        }
        for (i, w) in stages.windows(2).enumerate() {
            if let Some(s) = w[0].simplices().iter().find(|s| !w[1].contains(s)) {
                return Err(Error::NotSubcomplex { stage: i, simplex: s.vertices().to_vec() });
            }
        }
        Ok(Filtration { stages, times })
    }

    pub fn stages(&self) -> &[SimplicialComplex] {
        &self.stages
    }

    pub fn times(&self) -> &[T] {
        &self.times
    }
}

/// Triangulates `K_0×[t_0,t_1] ∪ … ∪ K_{N-1}×[t_{N-1},t_N] ∪ K_N` with the
/// projection to the time axis as the vertex values.
///
/// The copy of vertex `v` at stage `i` receives a fresh id; ids are assigned
/// in `(stage, v)` order. Each prism `σ × [t_i, t_{i+1}]` is cut into
/// `dim σ + 1` simplices by the staircase rule along increasing vertex ids,
/// so that neighbouring prisms agree on shared faces.
pub fn telescope<T: Scalar>(filt: &Filtration<T>) -> Result<VertexValuedMap<T>> {
    let mut ids: BTreeMap<(usize, VertexId), VertexId> = BTreeMap::new();
    for (i, stage) in filt.stages.iter().enumerate() {
        for &v in stage.vertices() {
            let next = ids.len() as VertexId;
            ids.insert((i, v), next);
        }
    }

    let last = filt.stages.len() - 1;
    let mut maximal: Vec<Vec<VertexId>> = Vec::new();
    for (i, stage) in filt.stages.iter().enumerate().take(last) {
        for sigma in stage.maximal_simplices() {
            let vs = sigma.vertices();
            for k in 0..vs.len() {
                let bottom = vs[..=k].iter().map(|v| ids[&(i, *v)]);
                let top = vs[k..].iter().map(|v| ids[&(i + 1, *v)]);
                maximal.push(bottom.chain(top).collect());
            }
        }
    }
    for sigma in filt.stages[last].maximal_simplices() {
        maximal.push(sigma.vertices().iter().map(|v| ids[&(last, *v)]).collect());
    }

    let complex = SimplicialComplex::build(&maximal)?;
    let values = ids.iter().map(|((i, _), id)| (*id, filt.times[*i]));
    VertexValuedMap::new(complex, values)
}
