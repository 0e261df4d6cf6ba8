//! Reader for the small coefficient tables the crate writes.

use std::io::BufRead;

use crate::error::{Error, Result};

/// Parses a table whose first column is the index `k = 0, 1, 2, ...` and
/// returns the remaining numeric columns of each row.
pub(crate) fn read_rows<R: BufRead>(input: R, header: &[&str]) -> Result<Vec<Vec<f64>>> {
    let mut lines = input.lines().enumerate();
    let expected = header.join(",");
    let first = lines.next().map(|(_, line)| line).transpose()?;
    if first.as_deref().map(str::trim) != Some(expected.as_str()) {
        return Err(Error::Parse { line: 1, message: format!("expected header `{expected}`") });
    }
    let mut rows = Vec::new();
    for (i, line) in lines {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let lineno = i + 1;
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != header.len() {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected {} fields, found {}", header.len(), fields.len()),
            });
        }
        let k: usize = fields[0]
            .parse()
            .map_err(|_| Error::Parse { line: lineno, message: format!("bad index `{}`", fields[0]) })?;
        if k != rows.len() {
            return Err(Error::Parse { line: lineno, message: format!("index {k} out of sequence") });
        }
        let values = fields[1..]
            .iter()
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|_| Error::Parse { line: lineno, message: format!("bad number `{f}`") })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(values);
    }
    Ok(rows)
}
