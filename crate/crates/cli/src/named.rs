//! Graph arguments: either a file (`-` for stdin) or a short name such as
//! `K_{1,3}`, `C_6`, `P_4`, `K_5`, `E_3`, `L(7,2)` or `C(6,2)`.

use std::io::Read;
use std::path::Path;

use clawtop::graph::{circular_graph, claw, complete, cycle, interval_graph, path};
use clawtop::io::parse_graph;
use clawtop::{Error, Graph, Result};

fn number(s: &str) -> Result<usize> {
    s.trim()
        .trim_matches(|c| c == '{' || c == '}')
        .parse()
        .map_err(|_| Error::input(format!("bad number {s:?} in graph name")))
}

fn pair(inner: &str) -> Result<(usize, usize)> {
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| Error::input(format!("expected two parameters in {inner:?}")))?;
    Ok((number(a)?, number(b)?))
}

/// Parses a short graph name; `None` when `name` is not one.
pub fn named_graph(name: &str) -> Option<Result<Graph>> {
    let name = name.trim();
    if matches!(name, "claw" | "K_{1,3}" | "K_1,3" | "K13") {
        return Some(Ok(claw()));
    }
    for (prefix, circular) in [("L(", false), ("C(", true)] {
        if let Some(inner) = name.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) {
            return Some(pair(inner).and_then(|(n, k)| {
                if circular {
                    circular_graph(n, k)
                } else {
                    interval_graph(n, k)
                }
            }));
        }
    }
    let (letter, rest) = name.split_at(name.char_indices().nth(1).map_or(name.len(), |(i, _)| i));
    let rest = rest.strip_prefix('_')?;
    let n = match number(rest) {
        Ok(n) => n,
        Err(e) => return Some(Err(e)),
    };
    Some(match letter {
        "K" => Ok(complete(n)),
        "C" => cycle(n),
        "P" => Ok(path(n)),
        "E" => Ok(Graph::empty(n)),
        _ => return None,
    })
}

/// Reads a graph from a name, a file path, or `-` for stdin.
pub fn load_graph(arg: &str) -> Result<Graph> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::input(format!("reading stdin: {e}")))?;
        return parse_graph(&text);
    }
    if Path::new(arg).exists() {
        let text = std::fs::read_to_string(arg).map_err(|e| Error::input(format!("reading {arg}: {e}")))?;
        return parse_graph(&text);
    }
    named_graph(arg).unwrap_or_else(|| Err(Error::input(format!("{arg:?} is neither a file nor a graph name"))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(named_graph("K_{1,3}").unwrap().unwrap(), claw());
        assert_eq!(named_graph("C_6").unwrap().unwrap(), cycle(6).unwrap());
        assert_eq!(named_graph("L(4,2)").unwrap().unwrap(), path(4));
        assert_eq!(named_graph("C(6,2)").unwrap().unwrap(), cycle(6).unwrap());
        assert_eq!(named_graph("E_3").unwrap().unwrap().edge_count(), 0);
        assert!(named_graph("C(2,2)").unwrap().is_err());
        assert!(named_graph("graph.txt").is_none());
    }
}
