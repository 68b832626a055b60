//! Polygon files on disk, with `-` for stdin and stdout.

use std::fs;
use std::io::{self, Read, Write};

use multifold_core::format::{format_document, parse_document, FormatError, PolygonDocument};
use multifold_core::{CsPolygon, Lattice2};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
}

impl IoError {
    /// Whether the file was read but its content is invalid.
    pub fn is_content_error(&self) -> bool {
        matches!(self, IoError::Format { .. })
    }
}

fn display(path: &str) -> String {
    if path == "-" {
        "<stdin>".to_string()
    } else {
        path.to_string()
    }
}

pub fn read_text(path: &str) -> Result<String, IoError> {
    let wrap = |source| IoError::Io { path: display(path), source };
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(wrap)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(wrap)
    }
}

pub fn write_text(path: &str, text: &str) -> Result<(), IoError> {
    let wrap = |source| IoError::Io { path: if path == "-" { "<stdout>".into() } else { path.into() }, source };
    if path == "-" {
        let mut out = io::stdout().lock();
        out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(wrap)
    } else {
        fs::write(path, text).map_err(wrap)
    }
}

pub fn read_document(path: &str) -> Result<PolygonDocument, IoError> {
    let text = read_text(path)?;
    parse_document(&text).map_err(|source| IoError::Format { path: display(path), source })
}

/// Reads and validates a polygon, keeping the vertex labeling of the file.
pub fn read_polygon(path: &str) -> Result<(CsPolygon, Lattice2), IoError> {
    let doc = read_document(path)?;
    let p = doc.to_polygon().map_err(|source| IoError::Format { path: display(path), source })?;
    Ok((p, doc.lattice))
}

pub fn write_document(doc: &PolygonDocument, path: &str) -> Result<(), IoError> {
    write_text(path, &format_document(doc))
}

pub fn write_polygon(p: &CsPolygon, lattice: &Lattice2, path: &str) -> Result<(), IoError> {
    write_document(&PolygonDocument { vertices: p.vertices(), lattice: lattice.clone() }, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use multifold_core::families::octagon_b;
    use multifold_core::q;

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("b.poly");
        let path = path.to_str().unwrap();
        let p = octagon_b(&q(7, 24)).unwrap();
        write_polygon(&p, &Lattice2::integer(), path).unwrap();
        let first = fs::read_to_string(path).unwrap();
        let (back, l) = read_polygon(path).unwrap();
        assert_eq!(back, p);
        assert!(l.is_integer_lattice());
        write_polygon(&back, &l, path).unwrap();
        assert_eq!(fs::read_to_string(path).unwrap(), first);
    }

    #[test]
    fn missing_file() {
        let e = read_polygon("/nonexistent/x.poly").unwrap_err();
        assert!(!e.is_content_error());
        assert!(e.to_string().starts_with("/nonexistent/x.poly: "));
    }
}
