use std::path::Path;

use serde::Serialize;

use crate::error::CliResult;

pub const SCHEMA: &str = "l2alex/1";

/// Inline text, or the contents of the file after a leading `@`.
pub fn read_arg(value: &str) -> CliResult<String> {
    match value.strip_prefix('@') {
        Some(path) => Ok(std::fs::read_to_string(path)?),
        None => Ok(value.to_string()),
    }
}

/// CSV with a versioned comment line naming the columns.
pub fn csv_table<T: Serialize>(kind: &str, columns: &str, rows: &[T]) -> CliResult<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(columns.split(','))?;
    for r in rows {
        w.serialize(r)?;
    }
    let body = String::from_utf8(w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?)
        .expect("csv output is utf-8");
    Ok(format!("# {SCHEMA} {kind}\n{body}"))
}

pub fn write_output(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
