//! The polygon text format.
//!
//! ```text
//! # comments run to the end of the line
//! vertices: [["-1/8","-3/2"], ["7/8","-3/2"], ...]
//! lattice: [["1","0"], ["0","1"]]
//! ```
//!
//! Each field value is JSON and may continue over several lines. The
//! lattice rows are the basis vectors; it defaults to the integer lattice.

use std::fmt::Write as _;

use serde_json::Value;

use crate::error::GeometryError;
use crate::lattice::Lattice2;
use crate::polygon::CsPolygon;
use crate::rational::Rational;
use crate::vector::{Point2, Vec2};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}, field `{field}`: {message}")]
    Parse { line: usize, field: String, message: String },
    #[error("invalid polygon: {0}")]
    Validation(#[from] GeometryError),
}

/// The raw content of a polygon file: any vertex ring plus a lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonDocument {
    pub vertices: Vec<Point2>,
    pub lattice: Lattice2,
}

impl PolygonDocument {
    /// Validates the ring as a centrally symmetric convex polygon, keeping
    /// the labeling of the file.
    pub fn to_polygon(&self) -> Result<CsPolygon, FormatError> {
        Ok(CsPolygon::from_vertices(&self.vertices)?)
    }
}

fn parse_error(line: usize, field: &str, message: impl Into<String>) -> FormatError {
    FormatError::Parse { line, field: field.to_string(), message: message.into() }
}

fn scalar(v: &Value, line: usize, field: &str) -> Result<Rational, FormatError> {
    match v {
        Value::String(s) => s.parse().map_err(|e| parse_error(line, field, format!("bad rational {s:?}: {e}"))),
        Value::Number(n) => n
            .as_i64()
            .map(Rational::from_integer)
            .ok_or_else(|| parse_error(line, field, format!("{n} is not an integer; write fractions as strings"))),
        other => Err(parse_error(line, field, format!("expected a rational string, found {other}"))),
    }
}

fn points(v: &Value, line: usize, field: &str) -> Result<Vec<Point2>, FormatError> {
    let rows = v.as_array().ok_or_else(|| parse_error(line, field, "expected a list of pairs"))?;
    rows.iter()
        .enumerate()
        .map(|(i, row)| match row.as_array().map(|r| r.as_slice()) {
            Some([x, y]) => Ok(Vec2::new(scalar(x, line, field)?, scalar(y, line, field)?)),
            _ => Err(parse_error(line, field, format!("entry {} is not a pair", i + 1))),
        })
        .collect()
}

fn split_fields(text: &str) -> Result<Vec<(usize, String, String)>, FormatError> {
    let mut fields: Vec<(usize, String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let starts_field = !line.starts_with(char::is_whitespace)
            && line.split_once(':').is_some_and(|(k, _)| {
                !k.is_empty() && k.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
            });
        if starts_field {
            let (k, rest) = line.split_once(':').expect("checked");
            fields.push((i + 1, k.to_string(), rest.to_string()));
        } else if let Some(last) = fields.last_mut() {
            last.2.push('\n');
            last.2.push_str(line);
        } else {
            return Err(parse_error(i + 1, "", "expected `vertices:` or `lattice:`"));
        }
    }
    Ok(fields)
}

pub fn parse_document(text: &str) -> Result<PolygonDocument, FormatError> {
    let mut vertices = None;
    let mut lattice = None;
    for (line, key, body) in split_fields(text)? {
        let value: Value = serde_json::from_str(&body).map_err(|e| parse_error(line, &key, e.to_string()))?;
        match key.as_str() {
            "vertices" if vertices.is_none() => vertices = Some(points(&value, line, &key)?),
            "lattice" if lattice.is_none() => {
                let rows = points(&value, line, &key)?;
                let [b1, b2] = <[Point2; 2]>::try_from(rows)
                    .map_err(|_| parse_error(line, &key, "expected exactly two basis vectors"))?;
                lattice = Some(Lattice2::new(b1, b2).map_err(|e| parse_error(line, &key, e.to_string()))?);
            }
            "vertices" | "lattice" => return Err(parse_error(line, &key, "field given twice")),
            _ => return Err(parse_error(line, &key, "unknown field")),
        }
    }
    let vertices = vertices.ok_or_else(|| parse_error(1, "vertices", "missing field"))?;
    Ok(PolygonDocument { vertices, lattice: lattice.unwrap_or_else(Lattice2::integer) })
}

fn pair_list(points: &[&Point2]) -> String {
    let mut s = String::from("[");
    for (i, p) in points.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        write!(s, "[\"{}\",\"{}\"]", p.x, p.y).expect("writing to a string");
    }
    s.push(']');
    s
}

/// Canonical serialization: both fields, one line each.
pub fn format_document(doc: &PolygonDocument) -> String {
    let (b1, b2) = doc.lattice.basis();
    let verts: Vec<&Point2> = doc.vertices.iter().collect();
    format!("vertices: {}\nlattice: {}\n", pair_list(&verts), pair_list(&[b1, b2]))
}

pub fn format_polygon(p: &CsPolygon, lattice: &Lattice2) -> String {
    format_document(&PolygonDocument { vertices: p.vertices(), lattice: lattice.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::pt;

    const OCT_A: &str = "# family A at 1/8\nvertices: [[\"-1/8\",\"-3/2\"],[\"7/8\",\"-3/2\"],[\"9/8\",\"−1/2\"],[\"7/8\",\"1/2\"],\n  [\"1/8\",\"3/2\"],[\"-7/8\",\"3/2\"],[\"-9/8\",\"1/2\"],[\"-7/8\",\"-1/2\"]]\n";

    #[test]
    fn parses_with_defaults() {
        let d = parse_document(OCT_A).unwrap();
        assert_eq!(d.vertices.len(), 8);
        assert_eq!(d.vertices[2], pt(9, 8, -1, 2));
        assert!(d.lattice.is_integer_lattice());
        let p = d.to_polygon().unwrap();
        assert_eq!(p.vertex(0), pt(-1, 8, -3, 2));
    }

    #[test]
    fn round_trip() {
        let d = parse_document(OCT_A).unwrap();
        let s = format_document(&d);
        assert!(s.starts_with("vertices: [[\"-1/8\",\"-3/2\"],"));
        assert!(s.ends_with("lattice: [[\"1\",\"0\"],[\"0\",\"1\"]]\n"));
        assert_eq!(format_document(&parse_document(&s).unwrap()), s);
    }

    #[test]
    fn integer_shorthand_and_lattice() {
        let d = parse_document("vertices: [[\"1\",0],[0,\"1\"],[-1,0],[0,-1]]\nlattice: [[\"2\",\"0\"],[\"1\",\"1\"]]").unwrap();
        assert_eq!(d.vertices[1], Vec2::ints(0, 1));
        assert_eq!(d.lattice.det(), &Rational::from(2));
    }

    #[test]
    fn errors_carry_context() {
        match parse_document("vertices: [[\"1/0\",\"1\"]]") {
            Err(FormatError::Parse { line: 1, field, message }) => {
                assert_eq!(field, "vertices");
                assert!(message.contains("1/0"));
            }
            other => panic!("{other:?}"),
        }
        match parse_document("\n\nlattice: [[\"1\",\"0\"]]\nvertices: []") {
            Err(FormatError::Parse { line: 3, field, .. }) => assert_eq!(field, "lattice"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_document("colour: 3"), Err(FormatError::Parse { line: 1, .. })));
        assert!(matches!(parse_document("# nothing"), Err(FormatError::Parse { .. })));
        assert!(matches!(parse_document("vertices: [[1, 2]"), Err(FormatError::Parse { line: 1, .. })));
        let odd = parse_document("vertices: [[1,0],[0,1],[-1,0]]").unwrap();
        assert_eq!(odd.to_polygon(), Err(FormatError::Validation(GeometryError::OddVertexCount(3))));
    }
}
