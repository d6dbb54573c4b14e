//! Small named maps used throughout the tests and the check harness.

use crate::complex::{SimplicialComplex, VertexId};
use crate::function::VertexValuedMap;
use crate::scalar::Scalar;
use crate::telescope::{telescope, Filtration};

/// Builds a map from maximal simplices and integer vertex values.
pub fn map<T: Scalar>(maximal: &[Vec<VertexId>], values: &[(VertexId, f64)]) -> VertexValuedMap<T> {
    let complex = SimplicialComplex::build(maximal).expect("fixture complex");
    let values = values.iter().map(|&(v, x)| (v, T::parse_decimal(&x.to_string()).expect("fixture value")));
    VertexValuedMap::new(complex, values).expect("fixture map")
}

/// A single edge from 0 to 1.
pub fn interval_edge<T: Scalar>() -> VertexValuedMap<T> {
    map(&[vec![0, 1]], &[(0, 0.0), (1, 1.0)])
}

/// Square a–b–c–d–a with heights a = 0, b = d = 1, c = 2.
pub fn square_circle<T: Scalar>() -> VertexValuedMap<T> {
    map(&[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]], &[(0, 0.0), (1, 1.0), (2, 2.0), (3, 1.0)])
}

/// Two edges a(0)–b(2) and c(1)–b(2) joined at the top.
pub fn lambda_map<T: Scalar>() -> VertexValuedMap<T> {
    map(&[vec![0, 1], vec![2, 1]], &[(0, 0.0), (1, 2.0), (2, 1.0)])
}

/// Two edges a(2)–b(0) and c(1)–b(0) joined at the bottom.
pub fn v_map<T: Scalar>() -> VertexValuedMap<T> {
    map(&[vec![0, 1], vec![2, 1]], &[(0, 2.0), (1, 0.0), (2, 1.0)])
}

/// Octahedral sphere with the height function: north pole 0 at 1, south
/// pole 1 at −1, equator 2..=5 at 0.
pub fn octahedron<T: Scalar>() -> VertexValuedMap<T> {
    let mut tris = Vec::new();
    for pole in [0, 1] {
        for i in 0..4 {
            tris.push(vec![pole, 2 + i, 2 + (i + 1) % 4]);
        }
    }
    map(&tris, &[(0, 1.0), (1, -1.0), (2, 0.0), (3, 0.0), (4, 0.0), (5, 0.0)])
}

/// Two points at time 0 joined by an edge at time 1.
pub fn two_points_filtration<T: Scalar>() -> Filtration<T> {
    let k0 = SimplicialComplex::build(&[[0], [1]]).expect("stage");
    let k1 = SimplicialComplex::build(&[[0, 1]]).expect("stage");
    Filtration::new(vec![k0, k1], vec![T::zero(), T::one()]).expect("nested")
}

pub fn two_points_telescope<T: Scalar>() -> VertexValuedMap<T> {
    telescope(&two_points_filtration()).expect("telescope")
}
