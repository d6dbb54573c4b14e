//! The invariant harness: every identity the pipelines must satisfy,
//! evaluated on one analyzed map.

use rayon::prelude::*;

use levelpers::function::{critical_pos, CriticalGrid};
use levelpers::level::auxiliary_numbers;
use levelpers::slab::{
    betti_numbers, cell_inclusion, homology_of, inclusion_chain_map, interlevel_complex, interlevel_complex_refined,
    level_complex, CellComplex,
};
use levelpers::z2::{induced_map, rank};
use levelpers::{
    barcode_from_i, barcode_from_llle, mu_from_betti, relevant_from_barcode, sublevel_from_level, BettiTable, Result,
    Scalar, VertexValuedMap,
};

use crate::report::{Analysis, CheckRecord, Computed};

pub const CHECK_NAMES: [&str; 11] = [
    "boundary_squared_zero",
    "euler_characteristic",
    "same_gap_betti",
    "refinement_independence",
    "conversion_agreement",
    "numbers_round_trip",
    "barcode_round_trip",
    "betti_round_trip",
    "bridge",
    "nonnegativity",
    "count_conservation",
];

/// Evaluates every check. Each record names the first violation found.
pub fn run_checks<T: Scalar>(f: &VertexValuedMap<T>, a: &Analysis<T>) -> Vec<CheckRecord> {
    let Some(c) = &a.results else {
        return CHECK_NAMES
            .iter()
            .map(|name| record(name, Ok(Ok(())), "empty complex"))
            .collect();
    };
    let structural = structural_checks(f, &c.grid);
    let mut out = vec![
        record("boundary_squared_zero", structural.boundary.map(Ok), "all level and interlevel complexes"),
        record("euler_characteristic", structural.euler, "all level and interlevel complexes"),
        record("same_gap_betti", structural.same_gap, "two regular values in every gap"),
        record("refinement_independence", structural.refinement, "one extra slice in every interlevel set"),
    ];
    out.push(record("conversion_agreement", conversion_agreement(c), "barcode from i = barcode from l+, l-, e"));
    out.push(record(
        "numbers_round_trip",
        Ok(if relevant_from_barcode(&c.level) == c.numbers { Ok(()) } else { Err(first_numbers_difference(c)) }),
        "numbers recomputed from the barcode",
    ));
    out.push(record("barcode_round_trip", barcode_round_trip(c), "barcode recovered from its own numbers"));
    out.push(record("betti_round_trip", betti_round_trip(c), "sub-level bars recovered from Betti numbers"));
    out.push(record("bridge", Ok(bridge(c, a.max_degree)), "sub-level bars derived from level bars"));
    out.push(record("nonnegativity", Ok(nonnegativity(c)), "N, mu and auxiliary counts"));
    out.push(record("count_conservation", Ok(count_conservation(c)), "bars through each regular value"));
    out
}

/// Outer `Err`: a computation failed. Inner `Err`: the invariant is violated.
type Outcome = Result<std::result::Result<(), String>>;

fn record(name: &str, outcome: Outcome, scope: &str) -> CheckRecord {
    let (passed, detail) = match outcome {
        Ok(Ok(())) => (true, scope.to_string()),
        Ok(Err(why)) => (false, why),
        Err(e) => (false, format!("computation failed: {}", e)),
    };
    CheckRecord { name: name.to_string(), passed, detail }
}

struct Structural {
    boundary: Result<()>,
    euler: Outcome,
    same_gap: Outcome,
    refinement: Outcome,
}

fn all_betti<T: Scalar>(c: &CellComplex<T>) -> Result<Vec<usize>> {
    betti_numbers(c, c.dim_count().max(1) - 1)
}

fn euler_matches<T: Scalar>(c: &CellComplex<T>) -> Result<bool> {
    let alt: i64 = all_betti(c)?.iter().enumerate().map(|(r, &b)| if r % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
    Ok(alt == c.euler_characteristic())
}

fn structural_checks<T: Scalar>(f: &VertexValuedMap<T>, grid: &CriticalGrid<T>) -> Structural {
    let g = grid.len_points();
    let top = f.complex().dim().unwrap_or(0);
    let pairs: Vec<(usize, usize)> = (0..g).flat_map(|x| (x..g).map(move |y| (x, y))).collect();

    // ∂∂ = 0 is verified by construction; a failure surfaces as an error here.
    let per_pair: Result<Vec<(bool, Option<String>)>> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let (a, b) = (grid.point(x), grid.point(y));
            let c = if x == y { level_complex(f, a)? } else { interlevel_complex(f, a, b)? };
            c.validate()?;
            let euler = euler_matches(&c)?;
            let refined = if x < y { refinement_violation(f, &c, a, b, top)? } else { None };
            Ok((euler, refined.map(|why| format!("[{}, {}]: {}", a, b, why))))
        })
        .collect();
    let per_pair = match per_pair {
        Ok(v) => v,
        Err(e) => {
            let msg = e.to_string();
            return Structural {
                boundary: Err(e),
                euler: Ok(Err(format!("not evaluated: {}", msg))),
                same_gap: Ok(Err(format!("not evaluated: {}", msg))),
                refinement: Ok(Err(format!("not evaluated: {}", msg))),
            };
        }
    };
    let euler = match per_pair.iter().zip(&pairs).find(|((ok, _), _)| !ok) {
        None => Ok(()),
        Some((_, &(x, y))) => Err(format!("Euler characteristic differs from the Betti sum on [{}, {}]", grid.point(x), grid.point(y))),
    };
    let refinement = match per_pair.into_iter().find_map(|(_, r)| r) {
        None => Ok(()),
        Some(why) => Err(why),
    };
    Structural { boundary: Ok(()), euler: Ok(euler), same_gap: same_gap(f, grid, top), refinement: Ok(refinement) }
}

fn same_gap<T: Scalar>(f: &VertexValuedMap<T>, grid: &CriticalGrid<T>, top: usize) -> Outcome {
    let n = grid.critical_count();
    // each regular value against another value in the same gap
    for k in 0..=n {
        let s = grid.regulars()[k];
        let other = if k < n { T::midpoint(s, grid.criticals()[k]) } else { T::midpoint(s, grid.criticals()[n - 1]) };
        let a = betti_numbers(&level_complex(f, s)?, top)?;
        let b = betti_numbers(&level_complex(f, other)?, top)?;
        if a != b {
            return Ok(Err(format!("levels {} and {} have Betti numbers {:?} and {:?}", s, other, a, b)));
        }
    }
    Ok(Ok(()))
}

/// Compares `X_[a,b]` with the same set cut by one more slice: Betti numbers
/// and the ranks of the maps from both end levels must agree.
fn refinement_violation<T: Scalar>(
    f: &VertexValuedMap<T>,
    plain: &CellComplex<T>,
    a: T,
    b: T,
    top: usize,
) -> Result<Option<String>> {
    let extra = T::midpoint(a, T::midpoint(a, b));
    let refined = interlevel_complex_refined(f, a, b, &[extra])?;
    refined.validate()?;
    let (p, q) = (betti_numbers(plain, top)?, betti_numbers(&refined, top)?);
    if p != q {
        return Ok(Some(format!("Betti numbers {:?} become {:?} after slicing at {}", p, q, extra)));
    }
    for t in [a, b] {
        let lev = level_complex(f, t)?;
        let m0 = cell_inclusion(&lev, plain)?;
        let m1 = cell_inclusion(&lev, &refined)?;
        for r in 0..=top {
            let h = homology_of(&lev, r)?;
            let r0 = rank(&induced_map(&h, &homology_of(plain, r)?, &inclusion_chain_map(&lev, plain, &m0, r))?);
            let r1 = rank(&induced_map(&h, &homology_of(&refined, r)?, &inclusion_chain_map(&lev, &refined, &m1, r))?);
            if r0 != r1 {
                return Ok(Some(format!("rank of H{} from level {} changes from {} to {}", r, t, r0, r1)));
            }
        }
    }
    Ok(None)
}

fn conversion_agreement<T: Scalar>(c: &Computed<T>) -> Outcome {
    let other = barcode_from_llle(&c.numbers)?;
    if other == c.level {
        return Ok(Ok(()));
    }
    let a: Vec<_> = c.level.bars().collect();
    let b: Vec<_> = other.bars().collect();
    let diff = a
        .iter()
        .filter(|x| !b.contains(x))
        .chain(b.iter().filter(|x| !a.contains(x)))
        .next()
        .map(|(bar, _)| format!("{}", bar))
        .unwrap_or_default();
    Ok(Err(format!("the two routes disagree on {}", diff)))
}

fn first_numbers_difference<T: Scalar>(c: &Computed<T>) -> String {
    let back = relevant_from_barcode(&c.level);
    let g = c.grid.len_points();
    for r in 0..c.numbers.degree_count() {
        let (p, q) = (c.numbers.degree(r), back.degree(r));
        for x in 0..g {
            if p.l(x) != q.l(x) {
                return format!("l{}({}) is {} directly but {} from the barcode", r, x, p.l(x), q.l(x));
            }
            for y in 0..g {
                if p.i(x, y) != q.i(x, y) {
                    return format!("i{}({}, {}) is {} directly but {} from the barcode", r, x, y, p.i(x, y), q.i(x, y));
                }
                if p.lplus(x, y) != q.lplus(x, y) || p.lminus(x, y) != q.lminus(x, y) {
                    return format!("l±{}({}, {}) differs", r, x, y);
                }
                if (0..g).any(|z| p.e(x, y, z) != q.e(x, y, z)) {
                    return format!("e{}({}, {}, ·) differs", r, x, y);
                }
            }
        }
    }
    "numbers differ".into()
}

fn barcode_round_trip<T: Scalar>(c: &Computed<T>) -> Outcome {
    let again = barcode_from_i(&relevant_from_barcode(&c.level))?;
    Ok(if again == c.level { Ok(()) } else { Err("barcode_from_i(relevant_from_barcode(B)) differs from B".into()) })
}

fn betti_round_trip<T: Scalar>(c: &Computed<T>) -> Outcome {
    let beta = BettiTable::from_barcode(&c.sublevel, c.dim + 1);
    let again = mu_from_betti(&beta)?;
    Ok(if again == c.sublevel { Ok(()) } else { Err("mu_from_betti(betti_from_bars(B)) differs from B".into()) })
}

/// Level bars reach degree `max_degree`, so the derived sub-level bars are
/// complete up to that degree, and in every degree once `max_degree`
/// covers the dimension.
fn bridge<T: Scalar>(c: &Computed<T>, max_degree: usize) -> std::result::Result<(), String> {
    let derived = sublevel_from_level(&c.level);
    let (x, y) = if max_degree >= c.dim {
        (derived, c.sublevel.clone())
    } else {
        (derived.truncated(max_degree), c.sublevel.truncated(max_degree))
    };
    if x == y {
        return Ok(());
    }
    let a: Vec<_> = x.bars().collect();
    let b: Vec<_> = y.bars().collect();
    let missing = b.iter().find(|p| !a.contains(p));
    let extra = a.iter().find(|p| !b.contains(p));
    Err(format!("derived bars differ from the filtration's: missing {:?}, extra {:?}", missing, extra))
}

fn nonnegativity<T: Scalar>(c: &Computed<T>) -> std::result::Result<(), String> {
    let min = auxiliary_numbers(&c.numbers).min_value();
    if min < 0 {
        return Err(format!("an auxiliary count is {}", min));
    }
    barcode_from_i(&c.numbers).map_err(|e| e.to_string())?;
    barcode_from_llle(&c.numbers).map_err(|e| e.to_string())?;
    mu_from_betti(&BettiTable::from_barcode(&c.sublevel, c.dim + 1)).map_err(|e| e.to_string())?;
    Ok(())
}

fn count_conservation<T: Scalar>(c: &Computed<T>) -> std::result::Result<(), String> {
    for r in 0..c.numbers.degree_count() {
        for k in 0..c.grid.critical_count() {
            let s = critical_pos(k) + 1;
            let through: usize = c.level.bars().filter(|(b, _)| b.degree == r && b.contains_pos(s)).map(|(_, m)| m).sum();
            let l = c.numbers.degree(r).l(s);
            if through != l {
                return Err(format!("{} bars of degree {} pass {} but its level has dimension {}", through, r, c.grid.point(s), l));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::analyze;
    use levelpers::fixtures;

    #[test]
    fn fixtures_pass_every_check() {
        let maps = [
            fixtures::interval_edge::<f64>(),
            fixtures::square_circle(),
            fixtures::lambda_map(),
            fixtures::v_map(),
            fixtures::octahedron(),
            fixtures::two_points_telescope(),
        ];
        for f in &maps {
            let checks = run_checks(f, &analyze(f, None).unwrap());
            assert_eq!(checks.len(), CHECK_NAMES.len());
            for c in &checks {
                assert!(c.passed, "{}: {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn lower_max_degree_still_passes() {
        let f = fixtures::octahedron::<f64>();
        for d in 0..=3 {
            for c in run_checks(&f, &analyze(&f, Some(d)).unwrap()) {
                assert!(c.passed, "max degree {}: {}: {}", d, c.name, c.detail);
            }
        }
    }
}
