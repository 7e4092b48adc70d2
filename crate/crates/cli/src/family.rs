//! Graph sources: inline family specs or a graph file.
//!
//! ```text
//! path:n  cycle:n  complete:n  empty:n  complete_multipartite:a,b,c  union:spec,spec,...
//! ```

use std::path::Path;

use compedge_core::{Error, Graph, Result};

const FAMILIES: &[&str] = &["path", "cycle", "complete", "empty", "complete_multipartite", "union"];

fn is_family(token: &str) -> bool {
    token.split_once(':').is_some_and(|(head, _)| FAMILIES.contains(&head))
}

/// Resolves a command-line graph argument: a family spec when it starts
/// with a known family name, otherwise a path to a graph file.
pub fn resolve(arg: &str) -> Result<Graph> {
    if is_family(arg) {
        return parse_spec(arg);
    }
    let path = Path::new(arg);
    if !path.exists() {
        return Err(Error::InvalidInput(format!(
            "{arg:?} is neither a family spec ({}) nor an existing graph file",
            FAMILIES.iter().map(|f| format!("{f}:...")).collect::<Vec<_>>().join(", ")
        )));
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {arg}: {e}")))?;
    Graph::parse(&text)
}

fn number(spec: &str, text: &str) -> Result<usize> {
    text.trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("{spec:?}: expected a non-negative integer, found {text:?}")))
}

pub fn parse_spec(spec: &str) -> Result<Graph> {
    let (head, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::InvalidInput(format!("{spec:?}: expected family:arguments")))?;
    match head {
        "path" => Graph::path(number(spec, rest)?),
        "cycle" => Graph::cycle(number(spec, rest)?),
        "complete" => Graph::complete(number(spec, rest)?),
        "empty" => Graph::empty(number(spec, rest)?),
        "complete_multipartite" => {
            let parts = rest.split(',').map(|p| number(spec, p)).collect::<Result<Vec<_>>>()?;
            Graph::complete_multipartite(&parts)
        }
        "union" => {
            let members = split_union(rest)?;
            let graphs = members.iter().map(|m| parse_spec(m)).collect::<Result<Vec<_>>>()?;
            Graph::disjoint_union(&graphs)
        }
        _ => Err(Error::InvalidInput(format!("{spec:?}: unknown family {head:?}"))),
    }
}

/// Splits the members of a union. A bare number continues the previous
/// member, so `union:complete_multipartite:1,2,path:3` has two members.
/// Nested unions are flattened.
fn split_union(rest: &str) -> Result<Vec<String>> {
    let mut members: Vec<String> = Vec::new();
    for token in rest.split(',') {
        if is_family(token) {
            members.push(token.strip_prefix("union:").unwrap_or(token).to_string());
        } else {
            match members.last_mut() {
                Some(last) if !token.is_empty() && token.chars().all(|c| c.is_ascii_digit()) => {
                    last.push(',');
                    last.push_str(token);
                }
                _ => return Err(Error::InvalidInput(format!("union member {token:?} is not a family spec"))),
            }
        }
    }
    if members.is_empty() {
        return Err(Error::InvalidInput("a union needs at least one member".into()));
    }
    Ok(members)
}
