use super::numbers::RelevantNumbers;
use super::{End, LevelBar, LevelBarcode};
use crate::error::{Error, Result};
use crate::function::{above_pos, below_pos, critical_pos as c};
use crate::scalar::Scalar;
use crate::sublevel::{Death, SublevelBar, SublevelBarcode};

fn realizable(formula: &'static str, degree: usize, birth: usize, death: usize, value: i64) -> Result<usize> {
    if value < 0 {
        Err(Error::Unrealizable { formula, degree, birth, death, value })
    } else {
        Ok(value as usize)
    }
}

/// Bar counts from the `i` numbers alone, by four inclusion–exclusions with
/// the regular values adjacent to each critical value.
pub fn barcode_from_i<T: Scalar>(nums: &RelevantNumbers<T>) -> Result<LevelBarcode<T>> {
    let n = nums.grid().critical_count();
    let mut out = LevelBarcode::new(nums.grid().clone(), nums.degree_count());
    for r in 0..nums.degree_count() {
        let d = nums.degree(r);
        let i = |x: usize, y: usize| d.i(x, y) as i64;
        for k in 0..n {
            for j in k..n {
                let (bk, ak, bj, aj) = (below_pos(k), above_pos(k), below_pos(j), above_pos(j));
                let cc = i(c(k), c(j)) - i(bk, c(j)) - i(c(k), aj) + i(bk, aj);
                out.add(LevelBar::new(r, End::Closed, k, j, End::Closed), realizable("N[,] from i", r, k, j, cc)?);
                if k == j {
                    continue;
                }
                let oo = i(ak, bj) - i(c(k), bj) - i(ak, c(j)) + i(c(k), c(j));
                let oc = i(ak, c(j)) - i(c(k), c(j)) - i(ak, aj) + i(c(k), aj);
                let co = i(c(k), bj) - i(c(k), c(j)) - i(bk, bj) + i(bk, c(j));
                out.add(LevelBar::new(r, End::Open, k, j, End::Open), realizable("N(,) from i", r, k, j, oo)?);
                out.add(LevelBar::new(r, End::Open, k, j, End::Closed), realizable("N(,] from i", r, k, j, oc)?);
                out.add(LevelBar::new(r, End::Closed, k, j, End::Open), realizable("N[,) from i", r, k, j, co)?);
            }
        }
    }
    Ok(out)
}

/// Relevant numbers on the full grid from bar counts, by counting the bars
/// that contain a point or interval, or that die at a given end.
pub fn relevant_from_barcode<T: Scalar>(b: &LevelBarcode<T>) -> RelevantNumbers<T> {
    let mut nums = RelevantNumbers::zeros(b.grid().clone(), b.degree_count());
    let g = b.grid().len_points();
    for (bar, m) in b.bars() {
        let d = nums.degree_mut(bar.degree);
        let inside: Vec<usize> = (0..g).filter(|&p| bar.contains_pos(p)).collect();
        let (lo, hi) = (c(bar.birth), c(bar.death));
        for &x in &inside {
            d.set_l(x, d.l(x) + m);
            for &y in inside.iter().filter(|&&y| y >= x) {
                d.set_i(x, y, d.i(x, y) + m);
            }
            if bar.right == End::Open {
                for y in hi..g {
                    d.set_lplus(x, y, d.lplus(x, y) + m);
                }
            }
            if bar.left == End::Open {
                for z in 0..=lo {
                    d.set_lminus(x, z, d.lminus(x, z) + m);
                }
            }
            if bar.left == End::Open && bar.right == End::Open {
                for y in hi..g {
                    for z in 0..=lo {
                        d.set_e(x, y, z, d.e(x, y, z) + m);
                    }
                }
            }
        }
    }
    nums
}

/// Auxiliary counts on the critical grid, `n × n` per degree, row = `i`,
/// column = `j`:
///
/// * `open_right[i][j]`: bars meeting `X_{t_i}` with open right end at `t_j`;
/// * `open_left[i][j]`: bars meeting `X_{t_j}` with open left end at `t_i`;
/// * `both[i][j]`: bars meeting both `X_{t_i}` and `X_{t_j}`;
/// * `closed_left[i][j]`: bars meeting `X_{t_j}` with closed left end at `t_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxiliaryNumbers {
    pub n: usize,
    pub open_right: Vec<Vec<i64>>,
    pub open_left: Vec<Vec<i64>>,
    pub both: Vec<Vec<i64>>,
    pub closed_left: Vec<Vec<i64>>,
}

impl AuxiliaryNumbers {
    fn at(table: &[i64], n: usize, i: usize, j: usize) -> i64 {
        if i < n && j < n {
            table[i * n + j]
        } else {
            0
        }
    }

    pub fn open_right(&self, r: usize, i: usize, j: usize) -> i64 {
        Self::at(&self.open_right[r], self.n, i, j)
    }

    pub fn open_left(&self, r: usize, i: usize, j: usize) -> i64 {
        Self::at(&self.open_left[r], self.n, i, j)
    }

    pub fn both(&self, r: usize, i: usize, j: usize) -> i64 {
        Self::at(&self.both[r], self.n, i, j)
    }

    pub fn closed_left(&self, r: usize, i: usize, j: usize) -> i64 {
        Self::at(&self.closed_left[r], self.n, i, j)
    }

    /// Smallest entry over all tables (0 when there are none).
    pub fn min_value(&self) -> i64 {
        [&self.open_right, &self.open_left, &self.both, &self.closed_left]
            .iter()
            .flat_map(|t| t.iter().flatten())
            .copied()
            .min()
            .unwrap_or(0)
            .min(0)
    }
}

pub fn auxiliary_numbers<T: Scalar>(nums: &RelevantNumbers<T>) -> AuxiliaryNumbers {
    let n = nums.grid().critical_count();
    let per_degree = |f: &dyn Fn(usize, usize, usize) -> i64| -> Vec<Vec<i64>> {
        (0..nums.degree_count())
            .map(|r| (0..n * n).map(|ij| f(r, ij / n, ij % n)).collect())
            .collect()
    };
    let lplus = |r: usize, x, y| nums.degree(r).lplus(x, y) as i64;
    let lminus = |r: usize, x, y| nums.degree(r).lminus(x, y) as i64;
    let open_right = per_degree(&|r, i, j| if i < j { lplus(r, c(i), c(j)) - lplus(r, c(i), c(j - 1)) } else { 0 });
    let open_left = per_degree(&|r, i, j| if i < j { lminus(r, c(j), c(i)) - lminus(r, c(j), c(i + 1)) } else { 0 });
    let both = per_degree(&|r, i, j| if i <= j { nums.degree(r).i(c(i), c(j)) as i64 } else { 0 });
    let closed_left = per_degree(&|r, i, j| {
        if i > j {
            0
        } else if i == 0 {
            both[r][j]
        } else {
            both[r][i * n + j] - both[r][(i - 1) * n + j] - open_left[r][(i - 1) * n + j]
        }
    });
    AuxiliaryNumbers { n, open_right, open_left, both, closed_left }
}

/// Bar counts from `l⁺`, `l⁻`, `e` and `i` through the auxiliary counts.
pub fn barcode_from_llle<T: Scalar>(nums: &RelevantNumbers<T>) -> Result<LevelBarcode<T>> {
    let n = nums.grid().critical_count();
    let aux = auxiliary_numbers(nums);
    let mut out = LevelBarcode::new(nums.grid().clone(), nums.degree_count());
    for r in 0..nums.degree_count() {
        let d = nums.degree(r);
        let e = |x: usize, up: usize, down: usize| d.e(x, up, down) as i64;

        // (t_k, t_j), probed at the regular value just above t_k
        let mut oo = vec![0i64; n * n];
        for k in 0..n {
            for j in k + 1..n {
                let t = above_pos(k);
                oo[k * n + j] = e(t, c(j), c(k)) - e(t, c(j), c(k + 1)) - e(t, c(j - 1), c(k)) + e(t, c(j - 1), c(k + 1));
                out.add(LevelBar::new(r, End::Open, k, j, End::Open), realizable("N(,) from e", r, k, j, oo[k * n + j])?);
            }
        }
        let oo_at = |i: usize, j: usize| if i < n && j < n { oo[i * n + j] } else { 0 };

        let mut co = vec![0i64; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let mut v = aux.open_right(r, i, j);
                if i > 0 {
                    v -= aux.open_right(r, i - 1, j) + oo_at(i - 1, j);
                }
                co[i * n + j] = v;
                out.add(LevelBar::new(r, End::Closed, i, j, End::Open), realizable("N[,) from l+", r, i, j, v)?);
            }
        }
        let co_at = |i: usize, j: usize| if i < n && j < n { co[i * n + j] } else { 0 };

        for j in (0..n).rev() {
            for i in 0..j {
                let v = aux.open_left(r, i, j) - aux.open_left(r, i, j + 1) - oo_at(i, j + 1);
                out.add(LevelBar::new(r, End::Open, i, j, End::Closed), realizable("N(,] from l-", r, i, j, v)?);
            }
            for i in 0..=j {
                let v = aux.closed_left(r, i, j) - aux.closed_left(r, i, j + 1) - co_at(i, j + 1);
                out.add(LevelBar::new(r, End::Closed, i, j, End::Closed), realizable("N[,] from n", r, i, j, v)?);
            }
        }
    }
    Ok(out)
}

/// The sub-level barcode determined by a level barcode.
///
/// `[t_i, t_j)` level bars are sub-level bars as they are; closed bars
/// `[t_i, t_l]` give `[t_i, ∞)` in the same degree and open bars
/// `(t_l, t_i)` give `[t_i, ∞)` one degree up, so the result reaches degree
/// `degree_count`.
pub fn sublevel_from_level<T: Scalar>(b: &LevelBarcode<T>) -> SublevelBarcode<T> {
    let mut out = SublevelBarcode::new(b.grid().clone());
    for (bar, m) in b.bars() {
        let mapped = match (bar.left, bar.right) {
            (End::Closed, End::Open) => Some(SublevelBar { degree: bar.degree, birth: bar.birth, death: Death::At(bar.death) }),
            (End::Closed, End::Closed) => Some(SublevelBar { degree: bar.degree, birth: bar.birth, death: Death::Never }),
            (End::Open, End::Open) => Some(SublevelBar { degree: bar.degree + 1, birth: bar.death, death: Death::Never }),
            (End::Open, End::Closed) => None,
        };
        if let Some(s) = mapped {
            out.add(s, m);
        }
    }
    out
}
