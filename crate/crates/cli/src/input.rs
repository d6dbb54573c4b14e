//! Reading input documents.
//!
//! Two shapes are accepted:
//!
//! ```json
//! {"vertices": [{"id": 0, "value": 0}, ...], "maximal_simplices": [[0, 1], ...]}
//! {"filtration": {"times": [0, 1], "stages": [[[0], [1]], [[0, 1]]]}}
//! ```
//!
//! Values may be JSON numbers or decimal strings; both are parsed from their
//! literal text so no precision is lost. Filtrations are turned into maps
//! with the telescope construction.

use std::collections::BTreeSet;

use serde_json::Value;

use levelpers::{telescope, Error as ModelError, Filtration, Scalar, SimplicialComplex, VertexId, VertexValuedMap};

use crate::InputError;

#[derive(Debug)]
pub struct ParsedInput<T> {
    pub map: VertexValuedMap<T>,
    pub filtration: Option<Filtration<T>>,
}

pub fn parse_input<T: Scalar>(text: &str) -> Result<ParsedInput<T>, InputError> {
    let root: Value = serde_json::from_str(text).map_err(|e| {
        let (line, column) = (e.line(), e.column());
        let full = e.to_string();
        let message = full.strip_suffix(&format!(" at line {} column {}", line, column)).unwrap_or(&full).to_string();
        InputError::Json { line, column, message }
    })?;
    let obj = root.as_object().ok_or_else(|| field("$", "expected a JSON object"))?;
    if let Some(filt) = obj.get("filtration") {
        let filtration = parse_filtration(filt)?;
        let map = telescope(&filtration).map_err(|e| model("filtration", e))?;
        return Ok(ParsedInput { map, filtration: Some(filtration) });
    }
    let vertices = obj
        .get("vertices")
        .ok_or_else(|| field("vertices", "missing (expected either vertices + maximal_simplices or filtration)"))?;
    let simplices = obj.get("maximal_simplices").ok_or_else(|| field("maximal_simplices", "missing"))?;
    let mut values = Vec::new();
    let mut seen = BTreeSet::new();
    for (k, v) in array(vertices, "vertices")?.iter().enumerate() {
        let path = format!("vertices[{}]", k);
        let id = vertex_id(v.get("id").ok_or_else(|| field(&format!("{}.id", path), "missing"))?, &format!("{}.id", path))?;
        if !seen.insert(id) {
            return Err(field(&format!("{}.id", path), &format!("duplicate vertex id {}", id)));
        }
        let value = scalar::<T>(v.get("value").ok_or_else(|| field(&format!("{}.value", path), "missing"))?, &format!("{}.value", path))?;
        values.push((id, value));
    }
    let mut maximal = simplex_list(simplices, "maximal_simplices", Some(&seen))?;
    // listed vertices that no simplex mentions are isolated points
    let covered: BTreeSet<VertexId> = maximal.iter().flatten().copied().collect();
    maximal.extend(seen.iter().filter(|v| !covered.contains(v)).map(|v| vec![*v]));
    let complex = SimplicialComplex::build(&maximal).map_err(|e| model("maximal_simplices", e))?;
    let map = VertexValuedMap::new(complex, values).map_err(|e| model("vertices", e))?;
    Ok(ParsedInput { map, filtration: None })
}

fn parse_filtration<T: Scalar>(v: &Value) -> Result<Filtration<T>, InputError> {
    let times = v.get("times").ok_or_else(|| field("filtration.times", "missing"))?;
    let times = array(times, "filtration.times")?
        .iter()
        .enumerate()
        .map(|(k, t)| scalar::<T>(t, &format!("filtration.times[{}]", k)))
        .collect::<Result<Vec<T>, _>>()?;
    let stages = v.get("stages").ok_or_else(|| field("filtration.stages", "missing"))?;
    let stages = array(stages, "filtration.stages")?
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let path = format!("filtration.stages[{}]", k);
            let simplices = simplex_list(s, &path, None)?;
            SimplicialComplex::build(&simplices).map_err(|e| model(&path, e))
        })
        .collect::<Result<Vec<_>, _>>()?;
    match Filtration::new(stages, times) {
        Ok(f) => Ok(f),
        Err(ModelError::NotSubcomplex { stage, simplex }) => Err(field(
            &format!("filtration.stages[{}]", stage),
            &format!("simplex {:?} is missing from stage {}", simplex, stage + 1),
        )),
        Err(e) => Err(model("filtration", e)),
    }
}

fn simplex_list(v: &Value, path: &str, known: Option<&BTreeSet<VertexId>>) -> Result<Vec<Vec<VertexId>>, InputError> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let spath = format!("{}[{}]", path, k);
            array(s, &spath)?
                .iter()
                .enumerate()
                .map(|(m, id)| {
                    let ipath = format!("{}[{}]", spath, m);
                    let id = vertex_id(id, &ipath)?;
                    match known {
                        Some(known) if !known.contains(&id) => Err(field(&ipath, &format!("unknown vertex id {}", id))),
                        _ => Ok(id),
                    }
                })
                .collect()
        })
        .collect()
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, InputError> {
    v.as_array().ok_or_else(|| field(path, "expected an array"))
}

fn vertex_id(v: &Value, path: &str) -> Result<VertexId, InputError> {
    v.as_u64()
        .and_then(|x| VertexId::try_from(x).ok())
        .ok_or_else(|| field(path, "expected a nonnegative integer vertex id"))
}

fn scalar<T: Scalar>(v: &Value, path: &str) -> Result<T, InputError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(field(path, "expected a number or a decimal string")),
    };
    T::parse_decimal(&text).ok_or_else(|| field(path, &format!("{:?} is not a finite decimal value", text)))
}

fn field(path: &str, message: &str) -> InputError {
    InputError::Field { path: path.to_string(), message: message.to_string() }
}

fn model(path: &str, e: ModelError) -> InputError {
    InputError::Field { path: path.to_string(), message: e.to_string() }
}
