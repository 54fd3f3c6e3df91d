use std::path::Path;

use crate::catalog::expr::{parse_expr, GroupExpr};
use crate::error::{Error, Result};
use crate::perm::parse_cycles;

/// Parses a group file:
///
/// ```text
/// # comment
/// group S3
/// degree 3
/// gen (1 2)
/// gen (1 2 3)
/// ```
///
/// or `expr <construction>` in place of the `degree`/`gen` lines.
pub fn parse_group_file(text: &str) -> Result<(String, GroupExpr)> {
    let mut name: Option<String> = None;
    let mut degree: Option<usize> = None;
    let mut gens: Vec<String> = Vec::new();
    let mut expr: Option<GroupExpr> = None;
    let mut last = 0;
    let syntax = |line: usize, message: String| Error::Syntax { line, message };
    let at = |line: usize| move |e: Error| Error::AtLine {
        line,
        source: Box::new(e),
    };

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (key, rest) = body
            .split_once(char::is_whitespace)
            .map_or((body, ""), |(k, r)| (k, r.trim()));
        match key {
            "group" => {
                if rest.is_empty() {
                    return Err(syntax(line, "group needs a name".into()));
                }
                if name.replace(rest.to_string()).is_some() {
                    return Err(syntax(line, "duplicate group line".into()));
                }
            }
            "degree" => {
                if expr.is_some() {
                    return Err(syntax(line, "degree given together with expr".into()));
                }
                let d: usize = rest
                    .parse()
                    .ok()
                    .filter(|&d| d > 0)
                    .ok_or_else(|| syntax(line, format!("bad degree {rest:?}")))?;
                if degree.replace(d).is_some() {
                    return Err(syntax(line, "duplicate degree line".into()));
                }
            }
            "gen" => {
                let d = degree.ok_or_else(|| syntax(line, "gen before degree".into()))?;
                parse_cycles(rest, d).map_err(at(line))?;
                gens.push(rest.to_string());
            }
            "expr" => {
                if degree.is_some() || expr.is_some() {
                    return Err(syntax(line, "expr must be the only construction".into()));
                }
                expr = Some(parse_expr(rest).map_err(at(line))?);
            }
            other => return Err(syntax(line, format!("unknown keyword {other:?}"))),
        }
    }

    let name = name.unwrap_or_else(|| "unnamed".to_string());
    match (expr, degree) {
        (Some(e), _) => Ok((name, e)),
        (None, Some(degree)) => Ok((name, GroupExpr::Perm { degree, gens })),
        (None, None) => Err(syntax(last.max(1), "no degree/gen lines and no expr".into())),
    }
}

pub fn read_group_file(path: &Path) -> Result<(String, GroupExpr)> {
    parse_group_file(&std::fs::read_to_string(path)?)
}
