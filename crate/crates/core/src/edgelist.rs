//! Plain edge-list text: a header line `n m` followed by `m` lines `u v`.
//!
//! Labels that are not already dense integers in `0..n` are relabeled: numeric
//! labels by value, anything else lexicographically. Lines starting with `#`
//! are ignored.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse(text: &str) -> Result<Graph> {
    let bad = |msg: String| Error::MalformedEdgeList(msg);
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| bad("missing `n m` header".into()))?;
    let mut fields = header.split_whitespace();
    let mut header_field = |what: &str| -> Result<usize> {
        fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(|| bad(format!("header needs integer {what}")))
    };
    let n = header_field("n")?;
    let m = header_field("m")?;

    let mut pairs = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => pairs.push((u.to_string(), v.to_string())),
            _ => return Err(bad(format!("expected `u v`, found `{line}`"))),
        }
    }
    if pairs.len() != m {
        return Err(bad(format!("header announces {m} edges, found {}", pairs.len())));
    }

    let dense = pairs.iter().all(|(u, v)| {
        [u, v]
            .iter()
            .all(|s| s.parse::<usize>().is_ok_and(|x| x < n))
    });
    let edges: Vec<(usize, usize)> = if dense {
        pairs
            .iter()
            .map(|(u, v)| (u.parse().unwrap(), v.parse().unwrap()))
            .collect()
    } else {
        let ids = relabeling(&pairs);
        if ids.len() > n {
            return Err(bad(format!("{} distinct labels exceed n = {n}", ids.len())));
        }
        pairs.iter().map(|(u, v)| (ids[u], ids[v])).collect()
    };
    Graph::new(n, &edges)
}

fn relabeling(pairs: &[(String, String)]) -> BTreeMap<String, usize> {
    let labels: Vec<&String> = pairs.iter().flat_map(|(u, v)| [u, v]).collect();
    let numeric = labels.iter().all(|s| s.parse::<i64>().is_ok());
    let mut distinct: Vec<&String> = labels;
    if numeric {
        distinct.sort_by_key(|s| s.parse::<i64>().unwrap());
    } else {
        distinct.sort();
    }
    distinct.dedup();
    distinct
        .into_iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect()
}

pub fn write(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
