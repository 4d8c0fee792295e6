//! Streams of pairwise non-isomorphic graphs.
//!
//! Native generation works level by level: every representative on k
//! vertices is extended by one new vertex over all neighbor subsets, and
//! the batch is deduplicated by canonical form. Emission order is the
//! lexicographic order of canonical forms, so runs are reproducible byte
//! for byte. Larger orders are ingested from external graph6 line streams.

use std::collections::HashMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use crate::canon::{canonical_graph_with_cap, canonical_key};
use crate::error::{Error, Result};
use crate::forest::LinearForestSpec;
use crate::graph::Graph;
use crate::graph6::parse_graph6;

/// Order cap for unrestricted native enumeration (12,346 classes at n = 8).
pub const NATIVE_ENUMERATION_CAP: usize = 8;

/// Order cap for the forest-free restricted generator used by the scans.
/// Forest-free classes stay sparse enough that two more levels are cheap.
pub const FOREST_FREE_CAP: usize = 10;

// ---------------------------------------------------------------------------
// Native generation
// ---------------------------------------------------------------------------

fn extend_by_vertex(g: &Graph, neighbors: u64) -> Graph {
    let mut out = g.union(&Graph::empty(1).expect("order 1")).expect("within cap");
    let new = out.order() - 1;
    let mut row = neighbors;
    while row != 0 {
        let v = row.trailing_zeros() as usize;
        out.add_edge(v, new).expect("in range");
        row &= row - 1;
    }
    out
}

/// One canonical representative per isomorphism class on `n` vertices,
/// sorted by canonical form. Accepts an optional keep-filter that must be
/// hereditary under vertex deletion (deleting any vertex of a kept graph
/// leaves a kept graph), which lets the level-by-level extension prune
/// whole subtrees without losing classes.
fn generate_classes(n: usize, cap: usize, keep: impl Fn(&Graph) -> bool) -> Result<Vec<Graph>> {
    let mut level: Vec<Graph> = vec![Graph::empty(1)?];
    if n == 0 {
        return Ok(vec![Graph::empty(0)?]);
    }
    for k in 2..=n {
        let mut next: HashMap<u128, Graph> = HashMap::new();
        for rep in &level {
            for mask in 0u64..(1u64 << (k - 1)) {
                let candidate = extend_by_vertex(rep, mask);
                if !keep(&candidate) {
                    continue;
                }
                let key = canonical_key(&candidate, cap)?;
                next.entry(key)
                    .or_insert_with(|| canonical_graph_with_cap(&candidate, cap).expect("within cap"));
            }
        }
        let mut batch: Vec<(u128, Graph)> = next.into_iter().collect();
        batch.sort_by_key(|(key, _)| *key);
        level = batch.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}

fn native_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<Graph>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All isomorphism classes on `n` vertices (1 <= n <= 8), cached per run.
pub fn nonisomorphic_graphs(n: usize) -> Result<Arc<Vec<Graph>>> {
    if !(1..=NATIVE_ENUMERATION_CAP).contains(&n) {
        return Err(Error::capacity(format!(
            "native enumeration handles 1 <= n <= {NATIVE_ENUMERATION_CAP}, got {n}; \
             supply an external graph6 stream for larger orders"
        )));
    }
    if let Some(hit) = native_cache().lock().unwrap().get(&n) {
        return Ok(Arc::clone(hit));
    }
    let classes = Arc::new(generate_classes(n, NATIVE_ENUMERATION_CAP, |_| true)?);
    native_cache().lock().unwrap().insert(n, Arc::clone(&classes));
    Ok(classes)
}

/// Every isomorphism class on `n` vertices that packs none of the given
/// path multisets. Avoidance is closed under vertex deletion, so restricted
/// extension is exhaustive.
pub fn graphs_avoiding_paths(n: usize, orders: &[usize]) -> Result<Vec<Graph>> {
    if !(1..=FOREST_FREE_CAP).contains(&n) {
        return Err(Error::capacity(format!(
            "forest-free enumeration handles 1 <= n <= {FOREST_FREE_CAP}, got {n}; \
             supply an external graph6 stream for larger orders"
        )));
    }
    generate_classes(n, FOREST_FREE_CAP, |g| !crate::forest::packs_paths(g, orders))
}

/// Every forest-free isomorphism class on `n` vertices.
pub fn forest_free_graphs(n: usize, spec: &LinearForestSpec) -> Result<Vec<Graph>> {
    graphs_avoiding_paths(n, spec.orders())
}

// ---------------------------------------------------------------------------
// GraphStream
// ---------------------------------------------------------------------------

/// A malformed stream line, kept with its 1-based line number.
#[derive(Debug)]
pub struct StreamIssue {
    pub line: usize,
    pub error: Error,
}

pub enum StreamSource {
    Native(usize),
    File(PathBuf),
    Stdin,
}

enum StreamInner {
    Mem(std::vec::IntoIter<Graph>),
    Lines { reader: BufReader<Box<dyn Read + Send>>, line_no: usize },
}

/// Iterator over graphs from a native level or a graph6 line source.
pub struct GraphStream {
    pub source: StreamSource,
    inner: StreamInner,
    emitted: usize,
}

impl GraphStream {
    pub fn count_emitted(&self) -> usize {
        self.emitted
    }

    /// Drains the stream, failing on the first malformed line.
    pub fn collect_strict(self) -> Result<Vec<Graph>> {
        let mut graphs = Vec::new();
        for item in self {
            match item {
                Ok(g) => graphs.push(g),
                Err(issue) => {
                    return Err(Error::parameter(format!(
                        "line {}: {}",
                        issue.line, issue.error
                    )));
                }
            }
        }
        Ok(graphs)
    }

    /// Drains the stream, keeping diagnostics for malformed lines.
    pub fn collect_lenient(self) -> (Vec<Graph>, Vec<StreamIssue>) {
        let mut graphs = Vec::new();
        let mut issues = Vec::new();
        for item in self {
            match item {
                Ok(g) => graphs.push(g),
                Err(issue) => issues.push(issue),
            }
        }
        (graphs, issues)
    }
}

impl Iterator for GraphStream {
    type Item = std::result::Result<Graph, StreamIssue>;

    fn next(&mut self) -> Option<Self::Item> {
        match &mut self.inner {
            StreamInner::Mem(iter) => {
                let g = iter.next()?;
                self.emitted += 1;
                Some(Ok(g))
            }
            StreamInner::Lines { reader, line_no } => loop {
                let mut buf = String::new();
                match reader.read_line(&mut buf) {
                    Ok(0) => return None,
                    Ok(_) => {
                        *line_no += 1;
                        let line = buf.trim_end_matches(['\n', '\r']);
                        if line.is_empty() {
                            continue;
                        }
                        return Some(match parse_graph6(line) {
                            Ok(g) => {
                                self.emitted += 1;
                                Ok(g)
                            }
                            Err(error) => Err(StreamIssue { line: *line_no, error }),
                        });
                    }
                    Err(e) => {
                        *line_no += 1;
                        return Some(Err(StreamIssue { line: *line_no, error: Error::Io(e) }));
                    }
                }
            },
        }
    }
}

/// Native stream of all classes on `n` vertices.
pub fn enumerate_nonisomorphic(n: usize) -> Result<GraphStream> {
    let classes = nonisomorphic_graphs(n)?;
    Ok(GraphStream {
        source: StreamSource::Native(n),
        inner: StreamInner::Mem(classes.as_ref().clone().into_iter()),
        emitted: 0,
    })
}

/// Opens a graph6 line stream; `-` reads standard input.
pub fn read_graph6_stream(path: &str) -> Result<GraphStream> {
    let (source, reader): (StreamSource, Box<dyn Read + Send>) = if path == "-" {
        (StreamSource::Stdin, Box::new(io::stdin()))
    } else {
        let p = Path::new(path);
        (StreamSource::File(p.to_path_buf()), Box::new(File::open(p)?))
    };
    Ok(GraphStream {
        source,
        inner: StreamInner::Lines { reader: BufReader::new(reader), line_no: 0 },
        emitted: 0,
    })
}
