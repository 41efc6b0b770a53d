//! CSV tables with a header row and a trailing metadata row.

use crate::spectral::fmt_f64;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct CsvTable {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    meta: Vec<(String, String)>,
}

impl CsvTable {
    pub fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new(), meta: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn meta(&mut self, key: &str, value: impl Into<String>) {
        self.meta.push((key.to_string(), value.into()));
    }

    pub fn meta_f64(&mut self, key: &str, value: f64) {
        self.meta(key, fmt_f64(value));
    }

    pub fn rows(&self) -> &[Vec<String>] {
        &self.rows
    }

    /// Header, rows, then `#meta,key=value,...`; `\n` line endings.
    pub fn render(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.join(","));
            out.push('\n');
        }
        out.push_str("#meta");
        for (k, v) in &self.meta {
            out.push(',');
            out.push_str(k);
            out.push('=');
            out.push_str(v);
        }
        out.push('\n');
        out
    }
}

/// Formats a float cell.
pub fn f(x: f64) -> String {
    fmt_f64(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout() {
        let mut t = CsvTable::new(&["a", "b"]);
        t.push(vec!["1".into(), f(0.5)]);
        t.meta("config_hash", "abc");
        t.meta_f64("tol", 1e-6);
        assert_eq!(t.render(), "a,b\n1,5.0000000000000000e-1\n#meta,config_hash=abc,tol=9.9999999999999995e-7\n");
    }
}
