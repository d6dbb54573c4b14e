//! Running the pipelines and turning their results into a serializable
//! document.

use serde::{Deserialize, Serialize};

use levelpers::{
    barcode_from_i, compute_relevant_numbers, critical_values, sublevel_barcode, CriticalGrid, Death, End, LevelBarcode,
    RelevantNumbers, Result, Scalar, SublevelBarcode, VertexValuedMap,
};

/// Everything computed for one map. `None` for the empty complex.
#[derive(Clone, Debug)]
pub struct Analysis<T> {
    pub max_degree: usize,
    pub results: Option<Computed<T>>,
}

#[derive(Clone, Debug)]
pub struct Computed<T> {
    pub grid: CriticalGrid<T>,
    /// Dimension of the complex.
    pub dim: usize,
    /// Persistence of the lower-star filtration, all degrees.
    pub sublevel: SublevelBarcode<T>,
    pub numbers: RelevantNumbers<T>,
    /// Level barcode obtained from the `i` numbers.
    pub level: LevelBarcode<T>,
}

/// Runs the sub-level and level pipelines for degrees `0..=max_degree`
/// (default: the dimension of the complex).
pub fn analyze<T: Scalar>(f: &VertexValuedMap<T>, max_degree: Option<usize>) -> Result<Analysis<T>> {
    let Some(dim) = f.complex().dim() else {
        return Ok(Analysis { max_degree: max_degree.unwrap_or(0), results: None });
    };
    let max_degree = max_degree.unwrap_or(dim);
    let grid = critical_values(f)?;
    let sublevel = sublevel_barcode(f)?;
    let numbers = compute_relevant_numbers(f, max_degree)?;
    let level = barcode_from_i(&numbers)?;
    Ok(Analysis { max_degree, results: Some(Computed { grid, dim, sublevel, numbers, level }) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EndFlag {
    Open,
    Closed,
}

impl From<End> for EndFlag {
    fn from(e: End) -> Self {
        match e {
            End::Open => EndFlag::Open,
            End::Closed => EndFlag::Closed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SublevelBarRecord {
    pub degree: usize,
    pub birth: String,
    /// `None` for bars that never die.
    pub death: Option<String>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelBarRecord {
    pub degree: usize,
    pub left: EndFlag,
    pub birth: String,
    pub death: String,
    pub right: EndFlag,
    pub multiplicity: usize,
}

/// Relevant numbers of one degree, indexed by position in `grid`:
/// `i[x][y]`, `lplus[x][y]` (`x ≤ y`), `lminus[x][y]` (`y ≤ x`) and
/// `e[x][y][z]` (`z ≤ x ≤ y`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumbersRecord {
    pub degree: usize,
    pub l: Vec<usize>,
    pub i: Vec<Vec<usize>>,
    pub lplus: Vec<Vec<usize>>,
    pub lminus: Vec<Vec<usize>>,
    pub e: Vec<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Serialized results. Sections a command did not ask for are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub max_degree: usize,
    /// Critical values, ascending, as decimal strings.
    pub criticals: Vec<String>,
    /// All grid points: sentinels, criticals and the regular values between.
    pub grid: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sublevel_bars: Option<Vec<SublevelBarRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level_bars: Option<Vec<LevelBarRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numbers: Option<Vec<NumbersRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckRecord>>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Sections {
    pub sublevel: bool,
    pub level: bool,
    pub numbers: bool,
}

impl Sections {
    pub const ALL: Sections = Sections { sublevel: true, level: true, numbers: true };
    pub const NONE: Sections = Sections { sublevel: false, level: false, numbers: false };
}

impl ResultDocument {
    pub fn from_analysis<T: Scalar>(a: &Analysis<T>, sections: Sections, checks: Option<Vec<CheckRecord>>) -> Self {
        let mut doc = ResultDocument { max_degree: a.max_degree, checks, ..Default::default() };
        let Some(c) = &a.results else {
            doc.sublevel_bars = sections.sublevel.then(Vec::new);
            doc.level_bars = sections.level.then(Vec::new);
            doc.numbers = sections.numbers.then(Vec::new);
            return doc;
        };
        doc.criticals = c.grid.criticals().iter().map(|t| t.to_decimal()).collect();
        doc.grid = (0..c.grid.len_points()).map(|p| c.grid.point(p).to_decimal()).collect();
        if sections.sublevel {
            let crit = |k: usize| c.grid.criticals()[k].to_decimal();
            doc.sublevel_bars = Some(
                c.sublevel
                    .bars()
                    .filter(|(b, _)| b.degree <= a.max_degree)
                    .map(|(b, m)| SublevelBarRecord {
                        degree: b.degree,
                        birth: crit(b.birth),
                        death: match b.death {
                            Death::At(j) => Some(crit(j)),
                            Death::Never => None,
                        },
                        multiplicity: m,
                    })
                    .collect(),
            );
        }
        if sections.level {
            let crit = |k: usize| c.grid.criticals()[k].to_decimal();
            doc.level_bars = Some(
                c.level
                    .bars()
                    .map(|(b, m)| LevelBarRecord {
                        degree: b.degree,
                        left: b.left.into(),
                        birth: crit(b.birth),
                        death: crit(b.death),
                        right: b.right.into(),
                        multiplicity: m,
                    })
                    .collect(),
            );
        }
        if sections.numbers {
            doc.numbers = Some((0..c.numbers.degree_count()).map(|r| numbers_record(&c.numbers, r)).collect());
        }
        doc
    }

    /// Whether a check section is present and every check passed.
    pub fn checks_passed(&self) -> bool {
        self.checks.iter().flatten().all(|c| c.passed)
    }
}

fn numbers_record<T: Scalar>(n: &RelevantNumbers<T>, r: usize) -> NumbersRecord {
    let d = n.degree(r);
    let g = d.grid_len();
    let table = |f: &dyn Fn(usize, usize) -> usize| (0..g).map(|x| (0..g).map(|y| f(x, y)).collect()).collect();
    NumbersRecord {
        degree: r,
        l: (0..g).map(|x| d.l(x)).collect(),
        i: table(&|x, y| d.i(x, y)),
        lplus: table(&|x, y| d.lplus(x, y)),
        lminus: table(&|x, y| d.lminus(x, y)),
        e: (0..g).map(|x| (0..g).map(|y| (0..g).map(|z| d.e(x, y, z)).collect()).collect()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use levelpers::fixtures;

    #[test]
    fn circle_document() {
        let a = analyze(&fixtures::square_circle::<f64>(), None).unwrap();
        let doc = ResultDocument::from_analysis(&a, Sections::ALL, None);
        assert_eq!(doc.criticals, ["0", "1", "2"]);
        assert_eq!(doc.grid, ["-1", "0", "0.5", "1", "1.5", "2", "3"]);
        let level = doc.level_bars.unwrap();
        assert_eq!(level.len(), 2);
        assert!(level.contains(&LevelBarRecord {
            degree: 0,
            left: EndFlag::Closed,
            birth: "0".into(),
            death: "2".into(),
            right: EndFlag::Closed,
            multiplicity: 1
        }));
        assert!(level.contains(&LevelBarRecord {
            degree: 0,
            left: EndFlag::Open,
            birth: "0".into(),
            death: "2".into(),
            right: EndFlag::Open,
            multiplicity: 1
        }));
        let sub = doc.sublevel_bars.unwrap();
        assert_eq!(
            sub,
            [
                SublevelBarRecord { degree: 0, birth: "0".into(), death: None, multiplicity: 1 },
                SublevelBarRecord { degree: 1, birth: "2".into(), death: None, multiplicity: 1 },
            ]
        );
        let numbers = doc.numbers.unwrap();
        assert_eq!(numbers.len(), 2);
        assert_eq!(numbers[0].l, [0, 1, 2, 2, 2, 1, 0]);
    }

    #[test]
    fn empty_complex_gives_empty_tables() {
        let f = VertexValuedMap::<f64>::new(levelpers::SimplicialComplex::empty(), []).unwrap();
        let doc = ResultDocument::from_analysis(&analyze(&f, None).unwrap(), Sections::ALL, None);
        assert!(doc.criticals.is_empty());
        assert_eq!(doc.level_bars, Some(vec![]));
        assert_eq!(doc.sublevel_bars, Some(vec![]));
        assert_eq!(doc.numbers, Some(vec![]));
    }

    #[test]
    fn lower_max_degree_truncates() {
        let a = analyze(&fixtures::square_circle::<f64>(), Some(0)).unwrap();
        let doc = ResultDocument::from_analysis(&a, Sections::ALL, None);
        assert!(doc.sublevel_bars.unwrap().iter().all(|b| b.degree == 0));
        assert_eq!(doc.numbers.unwrap().len(), 1);
    }
}
