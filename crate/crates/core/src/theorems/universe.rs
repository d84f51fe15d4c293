use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::families::{canonical_key, enumerate_connected, read_graph6_file, MAX_CANON_ORDER, MAX_ENUM_ORDER};
use crate::graph::Graph;

use super::{cap_check, VerifyConfig};

/// Bounds for an enumerated universe of connected graphs.
pub(crate) struct Bounds {
    pub min_n: usize,
    pub default_max: usize,
    /// Largest order accepted from the built-in enumerator.
    pub builtin_cap: usize,
    /// Largest order accepted from universe files.
    pub file_cap: usize,
}

pub(crate) struct Universe {
    pub graphs: Vec<Graph>,
    pub description: String,
    pub notes: Vec<String>,
}

/// Connected graphs with `min_n <= n <= max` from the built-in enumerator,
/// plus every graph read from universe files that satisfies the order and
/// connectivity preconditions (up to `file_cap`). File graphs isomorphic to
/// an enumerated one are dropped.
pub(crate) fn connected(id: &str, cfg: &VerifyConfig, b: &Bounds) -> Result<Universe> {
    let max = cfg.max_n.unwrap_or(b.default_max);
    let mut graphs = Vec::new();
    let mut parts = Vec::new();
    let mut notes = Vec::new();
    if cfg.builtin {
        cap_check(id, max, b.builtin_cap.min(MAX_ENUM_ORDER), "built-in order")?;
        for n in b.min_n.max(1)..=max {
            graphs.extend(enumerate_connected(n)?);
        }
        parts.push(format!("connected graphs {}<=n<={max} (built-in)", b.min_n.max(1)));
    } else if cfg.universe.is_empty() {
        return Err(Error::MissingUniverse(id.to_string()));
    }
    let mut seen: HashSet<(usize, u128)> = graphs.iter().map(|g| (g.order(), canonical_key(g).unwrap())).collect();
    for path in &cfg.universe {
        let (mut kept, mut skipped, mut duplicate) = (0, 0, 0);
        for g in read_graph6_file(path)? {
            let n = g.order();
            if n < b.min_n || n > b.file_cap || !g.is_connected() {
                skipped += 1;
                continue;
            }
            if n <= MAX_CANON_ORDER && !seen.insert((n, canonical_key(&g)?)) {
                duplicate += 1;
                continue;
            }
            graphs.push(g);
            kept += 1;
        }
        parts.push(format!("{} graphs from {}", kept, path.display()));
        if skipped > 0 {
            notes.push(format!(
                "{}: {skipped} graphs skipped (disconnected or order outside {}..={})",
                path.display(),
                b.min_n,
                b.file_cap
            ));
        }
        if duplicate > 0 {
            notes.push(format!("{}: {duplicate} graphs isomorphic to earlier ones dropped", path.display()));
        }
    }
    Ok(Universe { graphs, description: parts.join("; "), notes })
}
