//! Seeded random complexes for the randomized check suite.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use levelpers::{Scalar, SimplicialComplex, VertexId, VertexValuedMap};

pub const MAX_VERTICES: usize = 12;
pub const MAX_SIMPLEX_DIM: usize = 3;

/// A random map on at most [`MAX_VERTICES`] vertices whose maximal
/// simplices have dimension at most [`MAX_SIMPLEX_DIM`]. With `distinct`
/// the vertex values are a permutation of `0..n`; otherwise they are drawn
/// from a few integers so that ties are common.
pub fn random_map<T: Scalar>(rng: &mut impl Rng, distinct: bool) -> VertexValuedMap<T> {
    let n = rng.gen_range(1..=MAX_VERTICES);
    let ids: Vec<VertexId> = (0..n as VertexId).collect();
    let mut maximal: Vec<Vec<VertexId>> = (0..rng.gen_range(1..=2 * n))
        .map(|_| {
            let size = rng.gen_range(1..=(MAX_SIMPLEX_DIM + 1).min(n));
            ids.choose_multiple(rng, size).copied().collect()
        })
        .collect();
    maximal.extend(ids.iter().map(|&v| vec![v]));
    let complex = SimplicialComplex::build(&maximal).expect("random simplices are well formed");

    let raw: Vec<i64> = if distinct {
        let mut perm: Vec<i64> = (0..n as i64).collect();
        perm.shuffle(rng);
        perm
    } else {
        (0..n).map(|_| rng.gen_range(0..4)).collect()
    };
    let values = ids.iter().map(|&v| (v, T::parse_decimal(&raw[v as usize].to_string()).expect("integers parse")));
    VertexValuedMap::new(complex, values).expect("every vertex has a value")
}

/// `count` maps from `seed`, alternating distinct and repeated values.
pub fn random_corpus<T: Scalar>(seed: u64, count: usize) -> Vec<VertexValuedMap<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|k| random_map(&mut rng, k % 2 == 0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_respects_bounds_and_is_reproducible() {
        let a = random_corpus::<f64>(7, 20);
        let b = random_corpus::<f64>(7, 20);
        for (f, g) in a.iter().zip(&b) {
            assert_eq!(f.complex().simplices(), g.complex().simplices());
            assert!(f.complex().vertices().len() <= MAX_VERTICES);
            assert!(f.complex().dim().unwrap() <= MAX_SIMPLEX_DIM);
        }
        let distinct = &a[0];
        let mut values: Vec<f64> = distinct.vertex_values().map(|(_, v)| v).collect();
        values.sort_by(f64::total_cmp);
        values.dedup();
        assert_eq!(values.len(), distinct.complex().vertices().len());
    }
}
