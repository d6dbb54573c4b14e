//! Level persistence: bar codes with open or closed ends, the relevant level
//! persistence numbers, and the conversions between them.

mod convert;
mod numbers;

pub use convert::{
    auxiliary_numbers, barcode_from_i, barcode_from_llle, relevant_from_barcode, sublevel_from_level, AuxiliaryNumbers,
};
pub use numbers::{compute_relevant_numbers, DegreeNumbers, RelevantNumbers};

use std::collections::BTreeMap;
use std::fmt;

use crate::function::{critical_pos, CriticalGrid};
use crate::scalar::Scalar;

/// Whether a bar end is included in the interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    Open,
    Closed,
}

/// A level bar between critical values `t_birth ≤ t_death`, given by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LevelBar {
    pub degree: usize,
    pub birth: usize,
    pub death: usize,
    pub left: End,
    pub right: End,
}

impl LevelBar {
    pub fn new(degree: usize, left: End, birth: usize, death: usize, right: End) -> Self {
        LevelBar { degree, birth, death, left, right }
    }

    /// Whether the interval contains grid position `pos`.
    pub fn contains_pos(&self, pos: usize) -> bool {
        let (lo, hi) = (critical_pos(self.birth), critical_pos(self.death));
        let left = match self.left {
            End::Closed => pos >= lo,
            End::Open => pos > lo,
        };
        let right = match self.right {
            End::Closed => pos <= hi,
            End::Open => pos < hi,
        };
        left && right
    }

    fn is_well_formed(&self) -> bool {
        match (self.left, self.right) {
            (End::Closed, End::Closed) => self.birth <= self.death,
            _ => self.birth < self.death,
        }
    }
}

impl fmt::Display for LevelBar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.left == End::Closed { '[' } else { '(' };
        let r = if self.right == End::Closed { ']' } else { ')' };
        write!(f, "H{} {}t{}, t{}{}", self.degree, l, self.birth, self.death, r)
    }
}

/// The multiset of level bars in degrees `0..degree_count`.
#[derive(Clone, Debug, PartialEq)]
pub struct LevelBarcode<T> {
    grid: CriticalGrid<T>,
    degree_count: usize,
    bars: BTreeMap<LevelBar, usize>,
}

impl<T: Scalar> LevelBarcode<T> {
    pub fn new(grid: CriticalGrid<T>, degree_count: usize) -> Self {
        LevelBarcode { grid, degree_count, bars: BTreeMap::new() }
    }

    pub fn grid(&self) -> &CriticalGrid<T> {
        &self.grid
    }

    pub fn degree_count(&self) -> usize {
        self.degree_count
    }

    /// Adds `count` copies of `bar`.
    ///
    /// Panics if the bar is malformed, its endpoints are off the grid, or
    /// its degree is not tracked.
    pub fn add(&mut self, bar: LevelBar, count: usize) {
        assert!(bar.is_well_formed(), "malformed bar {}", bar);
        assert!(bar.death < self.grid.critical_count(), "bar {} is off the grid", bar);
        assert!(bar.degree < self.degree_count, "bar {} has an untracked degree", bar);
        if count > 0 {
            *self.bars.entry(bar).or_default() += count;
        }
    }

    pub fn count(&self, degree: usize, left: End, birth: usize, death: usize, right: End) -> usize {
        self.bars.get(&LevelBar::new(degree, left, birth, death, right)).copied().unwrap_or(0)
    }

    /// Bars with multiplicities, sorted by (degree, birth, death).
    pub fn bars(&self) -> impl Iterator<Item = (LevelBar, usize)> + '_ {
        self.bars.iter().map(|(b, m)| (*b, *m))
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }
}
