use proptest::prelude::*;

use levelpers::complex::{SimplicialComplex, VertexId};
use levelpers::function::{critical_pos, CriticalGrid};
use levelpers::level::{auxiliary_numbers, End, LevelBar, LevelBarcode};
use levelpers::slab::{betti_numbers, cell_inclusion, homology_of, inclusion_chain_map, interlevel_complex, interlevel_complex_refined, level_complex};
use levelpers::z2::{self, BitMatrix, BitVec, Subspace};
use levelpers::{
    barcode_from_i, barcode_from_llle, compute_relevant_numbers, lower_star_filtration, mu_from_betti,
    relevant_from_barcode, sublevel_barcode, sublevel_from_level, BettiTable, Map, Rational, Scalar, VertexValuedMap,
};

fn random_map() -> impl Strategy<Value = Map> {
    (1usize..=7).prop_flat_map(|nv| {
        let simplex = proptest::sample::subsequence((0..nv as VertexId).collect::<Vec<_>>(), 1..=nv.min(4));
        (proptest::collection::vec(simplex, 1..=6), proptest::collection::vec(0i32..4, nv))
    })
    .prop_map(|(simplices, values)| {
        let complex = SimplicialComplex::build(&simplices).unwrap();
        let values: Vec<(VertexId, f64)> = complex.vertices().iter().map(|&v| (v, values[v as usize] as f64)).collect();
        VertexValuedMap::new(complex, values).unwrap()
    })
}

fn max_degree(f: &Map) -> usize {
    f.complex().dim().unwrap_or(0)
}

fn bit_matrix(rows: usize, cols: usize) -> impl Strategy<Value = BitMatrix> {
    proptest::collection::vec(proptest::collection::vec(0u8..2, cols), rows).prop_map(move |r| {
        if rows == 0 {
            BitMatrix::zeros(0, cols)
        } else {
            BitMatrix::from_rows(&r)
        }
    })
}

fn sized_matrix() -> impl Strategy<Value = BitMatrix> {
    (0usize..=8, 0usize..=8).prop_flat_map(|(r, c)| bit_matrix(r, c))
}

// Exhaustive count of the vectors of Z2^n lying in a subspace.
fn members(s: &Subspace) -> Vec<u32> {
    let n = s.ambient_dim();
    (0u32..1 << n)
        .filter(|bits| s.contains(&BitVec::from_indices(n, (0..n).filter(|i| bits >> i & 1 == 1))))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn rank_of_transpose(m in sized_matrix()) {
        prop_assert_eq!(z2::rank(&m), z2::rank(&m.transpose()));
    }

    #[test]
    fn rank_nullity(m in sized_matrix()) {
        let k = z2::kernel_basis(&m);
        prop_assert_eq!(k.dim() + z2::rank(&m), m.ncols());
        for v in k.basis().columns() {
            prop_assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn intersection_by_enumeration(n in 0usize..=10, a in proptest::collection::vec(any::<u16>(), 0..5), b in proptest::collection::vec(any::<u16>(), 0..5)) {
        let vecs = |xs: &[u16]| xs.iter().map(|x| BitVec::from_indices(n, (0..n).filter(|i| x >> i & 1 == 1))).collect();
        let sa = Subspace::span(n, vecs(&a));
        let sb = Subspace::span(n, vecs(&b));
        let ma = members(&sa);
        let common = members(&sb).into_iter().filter(|v| ma.contains(v)).count();
        prop_assert_eq!(1usize << z2::intersection_dim(&sa, &sb).unwrap(), common);
    }

    #[test]
    fn induced_maps_compose(f in random_map(), a in 0i32..4, b in 0i32..4, c in 0i32..4) {
        // X_{t} ⊆ X_{[t, u]} ⊆ X_{[t, w]} for t ≤ u ≤ w; the first map is a level inclusion,
        // the second an interlevel inclusion.
        let mut v = [a, b, c];
        v.sort();
        let (t, u, w) = (v[0] as f64, v[1] as f64, v[2] as f64 + 0.5);
        let lev = level_complex(&f, t).unwrap();
        let mid = interlevel_complex_refined(&f, t, u, &[]).unwrap();
        // refining with u makes mid's cells a subset of big's cells
        let big = interlevel_complex_refined(&f, t, w, &[u]).unwrap();
        let m1 = cell_inclusion(&lev, &mid).unwrap();
        let m2 = cell_inclusion(&mid, &big).unwrap();
        let m12: Vec<usize> = m1.iter().map(|&i| m2[i]).collect();
        for r in 0..=max_degree(&f) {
            let (h0, h1, h2) = (homology_of(&lev, r).unwrap(), homology_of(&mid, r).unwrap(), homology_of(&big, r).unwrap());
            let g = z2::induced_map(&h0, &h1, &inclusion_chain_map(&lev, &mid, &m1, r)).unwrap();
            let h = z2::induced_map(&h1, &h2, &inclusion_chain_map(&mid, &big, &m2, r)).unwrap();
            let gh = z2::induced_map(&h0, &h2, &inclusion_chain_map(&lev, &big, &m12, r)).unwrap();
            prop_assert_eq!(h.mul(&g), gh);
        }
    }

    #[test]
    fn lower_star_is_a_filtration(f in random_map()) {
        let order = lower_star_filtration(&f);
        let pos: std::collections::HashMap<_, _> = order.iter().enumerate().map(|(i, (s, _))| (s.clone(), i)).collect();
        for (i, (s, v)) in order.iter().enumerate() {
            for face in s.facets() {
                prop_assert!(pos[&face] < i);
            }
            let max = s.vertices().iter().map(|&x| f.value(x).unwrap()).fold(f64::MIN, f64::max);
            prop_assert_eq!(*v, max);
        }
    }

    #[test]
    fn level_sets_are_valid_complexes(f in random_map()) {
        let grid = levelpers::critical_values(&f).unwrap();
        let top = max_degree(&f);
        for p in 0..grid.len_points() {
            let c = level_complex(&f, grid.point(p)).unwrap();
            c.validate().unwrap();
            let betti = betti_numbers(&c, top).unwrap();
            let alt: i64 = betti.iter().enumerate().map(|(r, b)| if r % 2 == 0 { *b as i64 } else { -(*b as i64) }).sum();
            prop_assert_eq!(c.euler_characteristic(), alt);
        }
    }

    #[test]
    fn same_gap_regular_values_agree(f in random_map()) {
        let grid = levelpers::critical_values(&f).unwrap();
        let top = max_degree(&f);
        for w in grid.criticals().windows(2) {
            let mid = f64::midpoint(w[0], w[1]);
            let near = f64::midpoint(w[0], mid);
            prop_assert_eq!(
                betti_numbers(&level_complex(&f, mid).unwrap(), top).unwrap(),
                betti_numbers(&level_complex(&f, near).unwrap(), top).unwrap()
            );
        }
    }

    #[test]
    fn refinement_does_not_change_homology(f in random_map(), a in 0i32..4, len in 0i32..4) {
        let (lo, hi) = (a as f64, (a + len) as f64 + 0.5);
        let plain = interlevel_complex(&f, lo, hi).unwrap();
        let refined = interlevel_complex_refined(&f, lo, hi, &[lo + 0.25]).unwrap();
        let top = max_degree(&f);
        prop_assert_eq!(betti_numbers(&plain, top).unwrap(), betti_numbers(&refined, top).unwrap());
        for t in [lo, hi] {
            let lev = level_complex(&f, t).unwrap();
            let m0 = cell_inclusion(&lev, &plain).unwrap();
            let m1 = cell_inclusion(&lev, &refined).unwrap();
            for r in 0..=top {
                let h = homology_of(&lev, r).unwrap();
                let a = z2::induced_map(&h, &homology_of(&plain, r).unwrap(), &inclusion_chain_map(&lev, &plain, &m0, r)).unwrap();
                let b = z2::induced_map(&h, &homology_of(&refined, r).unwrap(), &inclusion_chain_map(&lev, &refined, &m1, r)).unwrap();
                prop_assert_eq!(z2::rank(&a), z2::rank(&b));
            }
        }
    }

    #[test]
    fn sublevel_round_trip_and_diagonal(f in random_map()) {
        let b = sublevel_barcode(&f).unwrap();
        let top = max_degree(&f);
        let beta = BettiTable::from_barcode(&b, top + 1);
        prop_assert_eq!(mu_from_betti(&beta).unwrap(), b.clone());
        let grid = b.grid().clone();
        for (i, &t) in grid.criticals().iter().enumerate() {
            let sub = f.complex().subcomplex(|s| s.vertices().iter().all(|&v| f.value(v).unwrap() <= t));
            let direct = sub.betti_numbers();
            for r in 0..=top {
                prop_assert_eq!(beta.get(r, i, i), direct.get(r).copied().unwrap_or(0));
            }
        }
    }

    #[test]
    fn level_pipelines_agree(f in random_map()) {
        let top = max_degree(&f);
        let nums = compute_relevant_numbers(&f, top).unwrap();
        let from_i = barcode_from_i(&nums).unwrap();
        let from_llle = barcode_from_llle(&nums).unwrap();
        prop_assert_eq!(&from_i, &from_llle);
        prop_assert_eq!(&relevant_from_barcode(&from_i), &nums);
        prop_assert!(auxiliary_numbers(&nums).min_value() >= 0);
        prop_assert_eq!(sublevel_from_level(&from_i), sublevel_barcode(&f).unwrap());
        // bars through a regular value account for its whole level homology
        for r in 0..=top {
            for k in 0..nums.grid().critical_count() {
                let s = critical_pos(k) + 1;
                let through: usize = from_i.bars().filter(|(b, _)| b.degree == r && b.contains_pos(s)).map(|(_, m)| m).sum();
                prop_assert_eq!(through, nums.degree(r).l(s));
            }
        }
    }

    #[test]
    fn synthetic_barcodes_round_trip(n in 1usize..=5, raw in proptest::collection::vec((0usize..2, 0usize..4, 0usize..5, 0usize..5, 1usize..3), 0..10)) {
        let grid = CriticalGrid::from_criticals((0..n).map(|k| k as f64).collect()).unwrap();
        let mut b = LevelBarcode::new(grid, 2);
        for (deg, kind, x, y, m) in raw {
            let (lo, hi) = (x.min(y) % n, x.max(y) % n);
            let (lo, hi) = (lo.min(hi), lo.max(hi));
            let (left, right) = match kind {
                0 => (End::Closed, End::Closed),
                1 => (End::Open, End::Open),
                2 => (End::Open, End::Closed),
                _ => (End::Closed, End::Open),
            };
            if lo == hi && kind != 0 {
                continue;
            }
            b.add(LevelBar::new(deg, left, lo, hi, right), m);
        }
        let nums = relevant_from_barcode(&b);
        prop_assert_eq!(&barcode_from_i(&nums).unwrap(), &b);
        prop_assert_eq!(&barcode_from_llle(&nums).unwrap(), &b);
    }
}

#[test]
fn exact_scalars_give_the_same_barcodes() {
    let float = levelpers::fixtures::octahedron::<f64>();
    let exact = levelpers::fixtures::octahedron::<Rational>();
    let a = barcode_from_i(&compute_relevant_numbers(&float, 2).unwrap()).unwrap();
    let b = barcode_from_i(&compute_relevant_numbers(&exact, 2).unwrap()).unwrap();
    let bars = |x: Vec<(LevelBar, usize)>| x;
    assert_eq!(bars(a.bars().collect()), bars(b.bars().collect()));
    assert_eq!(b.grid().regulars()[1], Rational::new(-1, 2));
    assert_eq!(b.grid().regulars()[1].to_decimal(), "-0.5");
}
