use std::io::Read;
use std::path::Path;

use warping_core::puzzle::fixtures;
use warping_core::{parse_gauss_code, Error, OrientedKnotDiagram};

/// Stdin for `None` or `-`, a file if the path exists, the text itself
/// otherwise.
pub fn read(arg: Option<&str>) -> Result<String, Error> {
    match arg {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Format {
                    line: 0,
                    reason: format!("reading stdin: {e}"),
                })?;
            Ok(s)
        }
        Some(a) if Path::new(a).is_file() => {
            std::fs::read_to_string(a).map_err(|e| Error::Format {
                line: 0,
                reason: format!("reading {a}: {e}"),
            })
        }
        Some(a) if looks_like_path(a) => Err(Error::Format {
            line: 0,
            reason: format!("no such file {a}"),
        }),
        Some(a) => Ok(a.to_string()),
    }
}

/// Inline inputs never contain `/`, and only file names contain `.` without
/// spaces.
fn looks_like_path(a: &str) -> bool {
    !a.trim_start().starts_with('{') && (a.contains('/') || (a.contains('.') && !a.contains(' ')))
}

pub fn knot(arg: Option<&str>) -> Result<OrientedKnotDiagram, Error> {
    let text = read(arg)?;
    let text = text.trim();
    if text.starts_with('{') {
        return OrientedKnotDiagram::from_json(&serde_json::from_str(text)?);
    }
    parse_gauss_code(fixtures::preset_code(text).unwrap_or(text))
}
