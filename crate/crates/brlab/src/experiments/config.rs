//! `key = value` configuration files with per-command schemas and defaults.

use std::collections::BTreeMap;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Allowed keys of one command, with their default values.
pub type Schema = &'static [(&'static str, &'static str)];

/// Parsed configuration: every schema key has a value (default or explicit).
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    command: String,
    values: BTreeMap<String, String>,
    lines: BTreeMap<String, usize>,
}

impl Config {
    /// Parses `text` against `schema`. Unknown keys, duplicates and malformed lines are
    /// rejected with their line number.
    pub fn parse(command: &str, schema: Schema, text: &str) -> Result<Self> {
        let mut values: BTreeMap<String, String> = schema.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
        let mut lines = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config { line: line_no, msg: format!("expected `key = value`, found `{line}`") })?;
            let key = key.trim();
            let value = value.trim();
            if key.is_empty() || value.is_empty() {
                return Err(Error::Config { line: line_no, msg: "empty key or value".into() });
            }
            if !values.contains_key(key) {
                return Err(Error::Config { line: line_no, msg: format!("unknown key `{key}` for {command}") });
            }
            if lines.insert(key.to_string(), line_no).is_some() {
                return Err(Error::Config { line: line_no, msg: format!("duplicate key `{key}`") });
            }
            values.insert(key.to_string(), value.to_string());
        }
        Ok(Self { command: command.to_string(), values, lines })
    }

    pub fn defaults(command: &str, schema: Schema) -> Self {
        Self::parse(command, schema, "").expect("defaults parse")
    }

    pub fn command(&self) -> &str {
        &self.command
    }

    /// Overrides a key that exists in the schema (used for command-line flags).
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match self.values.get_mut(key) {
            Some(v) => {
                *v = value.to_string();
                Ok(())
            }
            None => Err(Error::Config { line: 0, msg: format!("unknown key `{key}` for {}", self.command) }),
        }
    }

    pub fn raw(&self, key: &str) -> &str {
        self.values.get(key).map(String::as_str).unwrap_or_else(|| panic!("key `{key}` missing from schema"))
    }

    fn line_of(&self, key: &str) -> usize {
        self.lines.get(key).copied().unwrap_or(0)
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<T>
    where
        T::Err: std::fmt::Display,
    {
        self.raw(key).parse::<T>().map_err(|e| Error::Config { line: self.line_of(key), msg: format!("bad value for `{key}`: {e}") })
    }

    pub fn get_list<T: FromStr>(&self, key: &str) -> Result<Vec<T>>
    where
        T::Err: std::fmt::Display,
    {
        self.raw(key)
            .split(',')
            .map(|s| s.trim().parse::<T>().map_err(|e| Error::Config { line: self.line_of(key), msg: format!("bad list entry in `{key}`: {e}") }))
            .collect()
    }

    /// Reports a semantic problem with a key at the key's line.
    pub fn invalid(&self, key: &str, msg: impl Into<String>) -> Error {
        Error::Config { line: self.line_of(key), msg: format!("`{key}`: {}", msg.into()) }
    }

    /// Canonical `key=value` listing, sorted by key, prefixed by the command.
    pub fn canonical(&self) -> String {
        let mut out = format!("command={}\n", self.command);
        for (k, v) in &self.values {
            out.push_str(&format!("{k}={v}\n"));
        }
        out
    }

    /// Hex SHA-256 of the canonical listing.
    pub fn hash(&self) -> String {
        let digest = Sha256::digest(self.canonical().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SCHEMA: Schema = &[("alpha", "1.0"), ("N", "64"), ("list", "1,2,3")];

    #[test]
    fn defaults_and_overrides() {
        let c = Config::parse("t", SCHEMA, "# comment\n\nalpha = 2.5  # trailing\n").unwrap();
        assert_eq!(c.get::<f64>("alpha").unwrap(), 2.5);
        assert_eq!(c.get::<usize>("N").unwrap(), 64);
        assert_eq!(c.get_list::<u32>("list").unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        match Config::parse("t", SCHEMA, "alpha = 1\n\nbogus = 3\n") {
            Err(Error::Config { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        match Config::parse("t", SCHEMA, "alpha 1\n") {
            Err(Error::Config { line, .. }) => assert_eq!(line, 1),
            other => panic!("{other:?}"),
        }
        let c = Config::parse("t", SCHEMA, "\nN = x\n").unwrap();
        match c.get::<usize>("N") {
            Err(Error::Config { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(Config::parse("t", SCHEMA, "N = 1\nN = 2\n").is_err());
    }

    #[test]
    fn hash_depends_on_effective_values_only() {
        let a = Config::parse("t", SCHEMA, "").unwrap();
        let b = Config::parse("t", SCHEMA, "alpha = 1.0\n").unwrap();
        let c = Config::parse("t", SCHEMA, "alpha = 1.5\n").unwrap();
        assert_eq!(a.hash(), b.hash());
        assert_ne!(a.hash(), c.hash());
        assert_eq!(a.hash().len(), 64);
    }
}
