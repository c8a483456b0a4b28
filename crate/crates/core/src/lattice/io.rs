//! Text formats for point streams: CSV (one point per line, coordinates in
//! index order 0..n−1) and a JSON array of arrays.

use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};
use crate::hadamard::LatticePoint;

pub fn write_csv<W: Write>(
    out: &mut W,
    points: impl IntoIterator<Item = LatticePoint>,
) -> io::Result<usize> {
    let mut count = 0;
    for p in points {
        let mut first = true;
        for x in p.coords() {
            if !first {
                out.write_all(b",")?;
            }
            first = false;
            write!(out, "{x}")?;
        }
        out.write_all(b"\n")?;
        count += 1;
    }
    Ok(count)
}

pub fn write_json<W: Write>(
    out: &mut W,
    points: impl IntoIterator<Item = LatticePoint>,
) -> io::Result<usize> {
    let mut count = 0;
    out.write_all(b"[")?;
    for p in points {
        if count > 0 {
            out.write_all(b",")?;
        }
        out.write_all(b"[")?;
        for (i, x) in p.coords().iter().enumerate() {
            if i > 0 {
                out.write_all(b",")?;
            }
            write!(out, "{x}")?;
        }
        out.write_all(b"]")?;
        count += 1;
    }
    out.write_all(b"]\n")?;
    Ok(count)
}

/// Parses CSV written by [`write_csv`]. Blank lines are skipped; every point
/// gets `level`.
pub fn read_csv<R: BufRead>(input: R, m: u32, level: u64) -> Result<Vec<LatticePoint>> {
    let mut points = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::Input(e.to_string()))?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let coords = line
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Input(format!("line {}: {e}", lineno + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        points.push(LatticePoint::new(m, coords, level)?);
    }
    Ok(points)
}
