//! Flat CSV renderings of a [`ResultDocument`].

use serde::{Deserialize, Serialize};

use crate::report::{CheckRecord, EndFlag, ResultDocument};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BarKind {
    Level,
    Sublevel,
}

/// One CSV row per bar. Infinite deaths are written as `inf`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BarRow {
    pub degree: usize,
    pub left_flag: EndFlag,
    pub birth: String,
    pub death: String,
    pub right_flag: EndFlag,
    pub multiplicity: usize,
    pub kind: BarKind,
}

/// One CSV row per nonzero relevant number. Arguments are grid values;
/// unused ones are empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberRow {
    pub degree: usize,
    pub number: String,
    pub x: String,
    pub y: String,
    pub z: String,
    pub value: usize,
}

pub const INFINITY: &str = "inf";

/// Bar rows for every bar section present in the document, level bars first.
pub fn bar_rows(doc: &ResultDocument) -> Vec<BarRow> {
    let level = doc.level_bars.iter().flatten().map(|b| BarRow {
        degree: b.degree,
        left_flag: b.left,
        birth: b.birth.clone(),
        death: b.death.clone(),
        right_flag: b.right,
        multiplicity: b.multiplicity,
        kind: BarKind::Level,
    });
    let sublevel = doc.sublevel_bars.iter().flatten().map(|b| BarRow {
        degree: b.degree,
        left_flag: EndFlag::Closed,
        birth: b.birth.clone(),
        death: b.death.clone().unwrap_or_else(|| INFINITY.into()),
        right_flag: EndFlag::Open,
        multiplicity: b.multiplicity,
        kind: BarKind::Sublevel,
    });
    level.chain(sublevel).collect()
}

pub fn number_rows(doc: &ResultDocument) -> Vec<NumberRow> {
    let mut rows = Vec::new();
    let g = &doc.grid;
    for n in doc.numbers.iter().flatten() {
        let mut push = |number: &str, x: usize, y: Option<usize>, z: Option<usize>, value: usize| {
            if value > 0 {
                let at = |p: Option<usize>| p.map(|p| g[p].clone()).unwrap_or_default();
                rows.push(NumberRow { degree: n.degree, number: number.into(), x: g[x].clone(), y: at(y), z: at(z), value });
            }
        };
        for (x, &v) in n.l.iter().enumerate() {
            push("l", x, None, None, v);
        }
        for (name, table) in [("i", &n.i), ("lplus", &n.lplus), ("lminus", &n.lminus)] {
            for (x, row) in table.iter().enumerate() {
                for (y, &v) in row.iter().enumerate() {
                    // i is symmetric; list each pair once
                    if name != "i" || x <= y {
                        push(name, x, Some(y), None, v);
                    }
                }
            }
        }
        for (x, plane) in n.e.iter().enumerate() {
            for (y, row) in plane.iter().enumerate() {
                for (z, &v) in row.iter().enumerate() {
                    push("e", x, Some(y), Some(z), v);
                }
            }
        }
    }
    rows
}

pub fn to_csv<R: Serialize>(rows: &[R]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// Writes a header even when there are no rows.
pub fn bars_csv(doc: &ResultDocument) -> Result<String, csv::Error> {
    with_header(&bar_rows(doc), &["degree", "left_flag", "birth", "death", "right_flag", "multiplicity", "kind"])
}

pub fn numbers_csv(doc: &ResultDocument) -> Result<String, csv::Error> {
    with_header(&number_rows(doc), &["degree", "number", "x", "y", "z", "value"])
}

pub fn checks_csv(checks: &[CheckRecord]) -> Result<String, csv::Error> {
    with_header(checks, &["name", "passed", "detail"])
}

fn with_header<R: Serialize>(rows: &[R], header: &[&str]) -> Result<String, csv::Error> {
    if rows.is_empty() {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(header)?;
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        return Ok(String::from_utf8(bytes).expect("csv output is UTF-8"));
    }
    to_csv(rows)
}

pub fn parse_bar_rows(text: &str) -> Result<Vec<BarRow>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes()).deserialize().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{analyze, Sections};
    use levelpers::fixtures;

    #[test]
    fn lambda_rows() {
        let a = analyze(&fixtures::lambda_map::<f64>(), None).unwrap();
        let doc = ResultDocument::from_analysis(&a, Sections::ALL, None);
        let text = bars_csv(&doc).unwrap();
        assert!(text.starts_with("degree,left_flag,birth,death,right_flag,multiplicity,kind\n"));
        assert!(text.contains("0,closed,1,2,open,1,level\n"), "{}", text);
        assert!(text.contains("0,closed,0,inf,open,1,sublevel\n"), "{}", text);
        assert_eq!(parse_bar_rows(&text).unwrap(), bar_rows(&doc));
    }

    #[test]
    fn empty_document_has_a_header() {
        let text = bars_csv(&ResultDocument::default()).unwrap();
        assert_eq!(text, "degree,left_flag,birth,death,right_flag,multiplicity,kind\n");
    }

    #[test]
    fn number_rows_skip_zeros() {
        let a = analyze(&fixtures::interval_edge::<f64>(), None).unwrap();
        let doc = ResultDocument::from_analysis(&a, Sections::ALL, None);
        let rows = number_rows(&doc);
        assert!(rows.iter().all(|r| r.value > 0));
        assert!(rows.contains(&NumberRow {
            degree: 0,
            number: "i".into(),
            x: "0".into(),
            y: "1".into(),
            z: String::new(),
            value: 1
        }));
    }
}
