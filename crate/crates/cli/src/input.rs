//! Reading graphs from the command line: named fixtures, graph6 files and
//! edge-list files.

use std::path::Path;

use sddlab_core::enumerate::{GraphStream, StreamFilter};
use sddlab_core::named::NamedGraph;
use sddlab_core::{edgelist, graph6, Error, Graph, Result};
use sha2::{Digest, Sha256};

/// Graphs plus a digest of where they came from.
pub struct Loaded {
    pub graphs: Vec<Graph>,
    pub digest: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Edge-list files start with an `n m` header; anything else is read as graph6.
fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| {
            let fields: Vec<&str> = l.split_whitespace().collect();
            fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok())
        })
}

pub fn load_file(path: &Path, filter: StreamFilter) -> Result<Loaded> {
    let bytes = std::fs::read(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Error::MalformedGraph6(format!("{} is not UTF-8", path.display())))?;
    let graphs = if looks_like_edge_list(&text) {
        vec![edgelist::parse(&text)?]
    } else {
        GraphStream::from_graph6_text(&text)
            .with_filter(filter)
            .collect::<Result<Vec<_>>>()?
    };
    Ok(Loaded {
        graphs,
        digest: format!("sha256:{}", sha256_hex(&bytes)),
    })
}

pub fn load_named(name: &str) -> Result<Loaded> {
    let g = name.parse::<NamedGraph>()?.build()?;
    let digest = format!("sha256:{}", sha256_hex(graph6::encode(&g)?.as_bytes()));
    Ok(Loaded {
        graphs: vec![g],
        digest,
    })
}

/// Either `--graph NAME` or `--input FILE`, all graphs kept.
pub fn load_one_source(graph: Option<&str>, input: Option<&Path>) -> Result<Loaded> {
    match (graph, input) {
        (Some(name), None) => load_named(name),
        (None, Some(path)) => load_file(
            path,
            StreamFilter {
                connected_only: false,
                ..StreamFilter::default()
            },
        ),
        _ => Err(Error::BadParameter(
            "give exactly one of --graph and --input".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_detection() {
        assert!(looks_like_edge_list("# comment\n3 2\n0 1\n1 2\n"));
        assert!(!looks_like_edge_list("Bw\n"));
        assert!(!looks_like_edge_list(">>graph6<<Bw\n"));
    }

    #[test]
    fn digest_is_hex() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
