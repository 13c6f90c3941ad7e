//! CSV tables and JSON summaries, written atomically.
//!
//! Floats are printed with `{:.16e}`, seventeen significant digits, which is
//! enough for every `f64` to parse back to the same bits.

use std::io::{self, Write as _};
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Text(String),
    /// A value that does not exist for this row, written as an empty field.
    Missing,
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Text(x.to_string())
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Text(x.to_string())
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Missing, Cell::Float)
    }
}

pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, PartialEq)]
pub struct CsvTable {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl CsvTable {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        w.write_record(&self.header).expect("writing to memory");
        for row in &self.rows {
            let fields = row.iter().map(|cell| match cell {
                Cell::Float(x) => format_float(*x),
                Cell::Int(n) => n.to_string(),
                Cell::Text(s) => s.clone(),
                Cell::Missing => String::new(),
            });
            w.write_record(fields).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("flushing to memory")).expect("fields are UTF-8")
    }
}

/// Header and rows of a CSV file as strings.
pub fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let header = r.headers().map(|h| h.iter().map(str::to_string).collect()).unwrap_or_default();
    let rows = r
        .records()
        .map_while(|rec| rec.ok())
        .map(|rec| rec.iter().map(str::to_string).collect())
        .collect();
    (header, rows)
}

/// Where the JSON summary of a run with CSV output `csv` goes.
pub fn summary_path(csv: &Path) -> PathBuf {
    csv.with_extension("json")
}

/// Writes every `(path, contents)` pair or none of them: each file goes to a
/// temporary sibling first, and the renames happen only once all writes
/// succeeded. Temporaries are deleted when dropped.
pub fn write_all_or_nothing(files: &[(&Path, &str)]) -> io::Result<()> {
    let mut staged = Vec::with_capacity(files.len());
    for (path, contents) in files {
        let dir = match path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d,
            _ => Path::new("."),
        };
        let mut tmp = tempfile::Builder::new().prefix(".nqa-").suffix(".partial").tempfile_in(dir)?;
        tmp.write_all(contents.as_bytes())?;
        tmp.as_file().sync_all()?;
        staged.push((tmp, *path));
    }
    for (tmp, path) in staged {
        tmp.persist(path).map_err(|e| e.error)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    #[test]
    fn floats_round_trip() {
        for &x in &[0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, f64::MIN_POSITIVE, 0.0] {
            assert_eq!(format_float(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
    }

    #[test]
    fn render_and_parse() {
        let mut t = CsvTable::new(vec!["a", "b", "c"]);
        t.push(vec![Cell::Float(0.5), Cell::Missing, Cell::Text("x, \"y\"".into())]);
        t.push(vec![Cell::Int(3), true.into(), "z".into()]);
        let text = t.render();
        let (h, rows) = parse_csv(&text);
        assert_eq!(h, ["a", "b", "c"]);
        assert_eq!(rows[0], ["5.0000000000000000e-1", "", "x, \"y\""]);
        assert_eq!(rows[1], ["3", "true", "z"]);
    }

    #[test]
    fn failed_write_leaves_nothing() {
        let dir = std::env::temp_dir().join(format!("nqa-out-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let good = dir.join("a.csv");
        let bad = dir.join("missing").join("b.json");
        assert!(write_all_or_nothing(&[(&good, "x"), (&bad, "y")]).is_err());
        assert!(!good.exists());
        assert_eq!(fs::read_dir(&dir).unwrap().count(), 0);
        write_all_or_nothing(&[(&good, "x")]).unwrap();
        assert_eq!(fs::read_to_string(&good).unwrap(), "x");
        fs::remove_dir_all(&dir).unwrap();
    }
}
