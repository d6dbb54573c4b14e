//! Sub-level persistence: bars `[t_i, t_j)` and `[t_i, ∞)` of the lower-star
//! filtration, Betti numbers of sub-level inclusions, and the
//! inclusion–exclusion that recovers bars from those Betti numbers.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::function::{critical_values, lower_star_filtration, CriticalGrid, VertexValuedMap};
use crate::scalar::Scalar;
use crate::z2::{column_reduce, BitMatrix, BitVec};

/// Right end of a sub-level bar, as a critical index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Death {
    At(usize),
    Never,
}

/// A bar `[t_birth, t_death)` in homology degree `degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SublevelBar {
    pub degree: usize,
    pub birth: usize,
    pub death: Death,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SublevelBarcode<T> {
    grid: CriticalGrid<T>,
    bars: BTreeMap<SublevelBar, usize>,
}

impl<T: Scalar> SublevelBarcode<T> {
    pub fn new(grid: CriticalGrid<T>) -> Self {
        SublevelBarcode { grid, bars: BTreeMap::new() }
    }

    pub fn grid(&self) -> &CriticalGrid<T> {
        &self.grid
    }

    /// Adds `count` copies of a bar; zero counts are ignored.
    pub fn add(&mut self, bar: SublevelBar, count: usize) {
        if count > 0 {
            *self.bars.entry(bar).or_default() += count;
        }
    }

    pub fn multiplicity(&self, bar: &SublevelBar) -> usize {
        self.bars.get(bar).copied().unwrap_or(0)
    }

    /// Bars with multiplicities, sorted by (degree, birth, death).
    pub fn bars(&self) -> impl Iterator<Item = (SublevelBar, usize)> + '_ {
        self.bars.iter().map(|(b, m)| (*b, *m))
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    /// Bars of degree at most `max_degree`.
    pub fn truncated(&self, max_degree: usize) -> Self {
        SublevelBarcode {
            grid: self.grid.clone(),
            bars: self.bars.iter().filter(|(b, _)| b.degree <= max_degree).map(|(b, m)| (*b, *m)).collect(),
        }
    }

    pub fn death_value(&self, d: Death) -> Option<T> {
        match d {
            Death::At(j) => Some(self.grid.criticals()[j]),
            Death::Never => None,
        }
    }
}

/// Persistence of the lower-star filtration; pairs whose ends enter at the
/// same value are dropped.
pub fn sublevel_barcode<T: Scalar>(f: &VertexValuedMap<T>) -> Result<SublevelBarcode<T>> {
    let grid = critical_values(f)?;
    let order = lower_star_filtration(f);
    let position: HashMap<_, usize> = order.iter().enumerate().map(|(p, (s, _))| (s.clone(), p)).collect();
    let n = order.len();
    let cols = order
        .iter()
        .map(|(s, _)| BitVec::from_indices(n, s.facets().map(|t| position[&t])))
        .collect();
    let pairing = column_reduce(&BitMatrix::from_columns(n, cols))?;

    let crit = |v: T| grid.critical_index(v).expect("entry values are vertex values");
    let mut barcode = SublevelBarcode::new(grid.clone());
    for (i, j) in pairing.pairs {
        if order[i].1 != order[j].1 {
            let bar = SublevelBar { degree: order[i].0.dim(), birth: crit(order[i].1), death: Death::At(crit(order[j].1)) };
            barcode.add(bar, 1);
        }
    }
    for i in pairing.essential {
        barcode.add(SublevelBar { degree: order[i].0.dim(), birth: crit(order[i].1), death: Death::Never }, 1);
    }
    Ok(barcode)
}

/// `dim img(H_r(X_{≤t}) → H_r(X_{≤t'}))`: the number of `r`-bars containing
/// `[t, t']`. `t_prime = None` stands for `+∞`.
pub fn betti_from_bars<T: Scalar>(b: &SublevelBarcode<T>, r: usize, t: T, t_prime: Option<T>) -> usize {
    b.bars()
        .filter(|(bar, _)| bar.degree == r && b.grid.criticals()[bar.birth] <= t)
        .filter(|(bar, _)| match (b.death_value(bar.death), t_prime) {
            (None, _) => true,
            (Some(d), Some(tp)) => tp < d,
            (Some(_), None) => false,
        })
        .map(|(_, m)| m)
        .sum()
}

/// `β_r(t_i, t_j)` on the critical grid for `i ≤ j ≤ N + 1`, where index
/// `N + 1` stands for `+∞`.
#[derive(Clone, Debug, PartialEq)]
pub struct BettiTable<T> {
    grid: CriticalGrid<T>,
    degree_count: usize,
    values: Vec<Vec<usize>>,
}

impl<T: Scalar> BettiTable<T> {
    pub fn from_barcode(b: &SublevelBarcode<T>, degree_count: usize) -> Self {
        let n = b.grid.critical_count();
        let crit = b.grid.criticals();
        let values = (0..degree_count)
            .map(|r| {
                let mut table = vec![0; n * (n + 1)];
                for i in 0..n {
                    for j in i..=n {
                        let tp = if j == n { None } else { Some(crit[j]) };
                        table[i * (n + 1) + j] = betti_from_bars(b, r, crit[i], tp);
                    }
                }
                table
            })
            .collect();
        BettiTable { grid: b.grid.clone(), degree_count, values }
    }

    pub fn degree_count(&self) -> usize {
        self.degree_count
    }

    /// `β_r(t_i, t_j)`; `j = N + 1` is `+∞`.
    pub fn get(&self, r: usize, i: usize, j: usize) -> usize {
        let n = self.grid.critical_count();
        assert!(i <= j && j <= n && i < n, "β index out of range");
        self.values[r][i * (n + 1) + j]
    }
}

/// Bar multiplicities from Betti numbers by the four-case inclusion–exclusion.
pub fn mu_from_betti<T: Scalar>(beta: &BettiTable<T>) -> Result<SublevelBarcode<T>> {
    let n = beta.grid.critical_count();
    let b = |r, i, j| beta.get(r, i, j) as i64;
    let mut out = SublevelBarcode::new(beta.grid.clone());
    for r in 0..beta.degree_count {
        for i in 0..n {
            for j in i + 1..=n {
                let mu = match (i, j == n) {
                    (0, false) => b(r, 0, j - 1) - b(r, 0, j),
                    (_, false) => b(r, i, j - 1) - b(r, i - 1, j - 1) - b(r, i, j) + b(r, i - 1, j),
                    (0, true) => b(r, 0, n),
                    (_, true) => b(r, i, n) - b(r, i - 1, n),
                };
                if mu < 0 {
                    return Err(Error::Unrealizable { formula: "mu_from_betti", degree: r, birth: i, death: j, value: mu });
                }
                let death = if j == n { Death::Never } else { Death::At(j) };
                out.add(SublevelBar { degree: r, birth: i, death }, mu as usize);
            }
        }
    }
    Ok(out)
}
