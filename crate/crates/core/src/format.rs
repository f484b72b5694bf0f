//! Plain-text graph files: a `p edge <order> <edges>` header followed by
//! one `e <u> <v>` line per edge, 1-based. Lines starting with `c` are comments.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.order(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {}", e.u() + 1, e.v() + 1);
    }
    out
}

fn parse_field(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid {what} `{tok}`"),
    })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        match tag {
            c if c.starts_with('c') => continue,
            "p" => {
                if header.is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "duplicate problem line".into(),
                    });
                }
                match toks.next() {
                    Some("edge") => {}
                    other => {
                        return Err(Error::Parse {
                            line,
                            message: format!("expected `p edge`, found {other:?}"),
                        })
                    }
                }
                let order = parse_field(toks.next(), line, "vertex count")?;
                let count = parse_field(toks.next(), line, "edge count")?;
                if order == 0 {
                    return Err(Error::Parse {
                        line,
                        message: "vertex count must be positive".into(),
                    });
                }
                header = Some((order, count));
            }
            "e" => {
                let Some((order, _)) = header else {
                    return Err(Error::Parse {
                        line,
                        message: "edge line before `p edge` header".into(),
                    });
                };
                let u = parse_field(toks.next(), line, "endpoint")?;
                let v = parse_field(toks.next(), line, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > order {
                        return Err(Error::Parse {
                            line,
                            message: format!("vertex {x} outside 1..={order}"),
                        });
                    }
                }
                let e = Edge::new(u - 1, v - 1).map_err(|_| Error::Parse {
                    line,
                    message: format!("self-loop at vertex {u}"),
                })?;
                edges.push((line, e));
            }
            other => {
                return Err(Error::Parse {
                    line,
                    message: format!("unrecognized line tag `{other}`"),
                })
            }
        }
        if toks.next().is_some() {
            return Err(Error::Parse {
                line,
                message: "trailing tokens".into(),
            });
        }
    }
    let (order, count) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing `p edge` header".into(),
    })?;
    let mut sorted: Vec<Edge> = edges.iter().map(|(_, e)| *e).collect();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        let line = edges.iter().rev().find(|(_, e)| *e == w[0]).unwrap().0;
        return Err(Error::Parse {
            line,
            message: format!("duplicate edge {}", w[0]),
        });
    }
    if sorted.len() != count {
        return Err(Error::Parse {
            line: 0,
            message: format!("header declares {count} edges, found {}", sorted.len()),
        });
    }
    Graph::from_edges(order, sorted)
}
