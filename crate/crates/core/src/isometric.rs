//! Backtracking search for isometric copies of a small pattern graph.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::traversal::DistanceMatrix;

/// Patterns larger than this are rejected by [`find_isometric`].
pub const MAX_PATTERN: usize = 12;

/// `mapping[a]` is the host vertex assigned to pattern vertex `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternEmbedding {
    pub mapping: Vec<usize>,
}

/// First distance-preserving injective map (lexicographic in the mapping
/// vector) of `pattern` into `host`.
pub fn find_isometric(pattern: &Graph, host: &Graph) -> Option<PatternEmbedding> {
    assert!(pattern.n() <= MAX_PATTERN, "pattern too large");
    let pdm = DistanceMatrix::new(pattern);
    let hdm = DistanceMatrix::new(host);
    find_isometric_with(pattern, &pdm, host, &hdm)
}

pub fn find_isometric_with(
    pattern: &Graph,
    pdm: &DistanceMatrix,
    host: &Graph,
    hdm: &DistanceMatrix,
) -> Option<PatternEmbedding> {
    let p = pattern.n();
    let n = host.n();
    if p > n {
        return None;
    }
    let pdiam = (0..p).map(|a| pdm.ecc(a)).max().unwrap_or(0) as usize;

    // counts[v][d] = number of vertices at distance d (1..=pdiam)
    let profile = |dm: &DistanceMatrix, v: usize| {
        let mut c = vec![0u32; pdiam + 1];
        for &d in dm.row(v) {
            let d = d as usize;
            if (1..=pdiam).contains(&d) {
                c[d] += 1;
            }
        }
        c
    };
    let pprof: Vec<Vec<u32>> = (0..p).map(|a| profile(pdm, a)).collect();
    let hprof: Vec<Vec<u32>> = (0..n).map(|h| profile(hdm, h)).collect();

    let candidates: Vec<Vec<usize>> = (0..p)
        .map(|a| {
            (0..n)
                .filter(|&h| {
                    host.degree(h) >= pattern.degree(a)
                        && pprof[a].iter().zip(&hprof[h]).all(|(need, have)| have >= need)
                })
                .collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }

    let mut mapping = Vec::with_capacity(p);
    let mut used = vec![false; n];
    if extend(pdm, hdm, &candidates, &mut mapping, &mut used) {
        Some(PatternEmbedding { mapping })
    } else {
        None
    }
}

fn extend(
    pdm: &DistanceMatrix,
    hdm: &DistanceMatrix,
    candidates: &[Vec<usize>],
    mapping: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let a = mapping.len();
    if a == candidates.len() {
        return true;
    }
    for &h in &candidates[a] {
        if used[h] {
            continue;
        }
        let fits = mapping
            .iter()
            .enumerate()
            .all(|(b, &hb)| hdm.get(h, hb) == pdm.get(a, b));
        if !fits {
            continue;
        }
        used[h] = true;
        mapping.push(h);
        if extend(pdm, hdm, candidates, mapping, used) {
            return true;
        }
        mapping.pop();
        used[h] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path};

    #[test]
    fn triangle_in_k4() {
        let e = find_isometric(&cycle(3), &complete(4)).unwrap();
        assert_eq!(e.mapping, vec![0, 1, 2]);
    }

    #[test]
    fn no_square_in_pentagon() {
        assert!(find_isometric(&cycle(4), &cycle(5)).is_none());
    }

    #[test]
    fn lexicographic_first() {
        let e = find_isometric(&path(3), &path(5)).unwrap();
        assert_eq!(e.mapping, vec![0, 1, 2]);
    }

    #[test]
    fn isometric_is_stricter_than_subgraph() {
        // P4 is a subgraph of C4 but not an isometric one
        assert!(find_isometric(&path(4), &cycle(4)).is_none());
        assert!(find_isometric(&path(4), &cycle(6)).is_some());
        // a hexagon never embeds isometrically in a longer cycle
        assert!(find_isometric(&cycle(6), &cycle(8)).is_none());
    }

    #[test]
    fn embedding_preserves_distances() {
        let host = crate::generate::gen_chordal(30, 5, 3);
        let pat = path(4);
        if let Some(e) = find_isometric(&pat, &host) {
            let hdm = DistanceMatrix::new(&host);
            for a in 0..4 {
                for b in 0..4 {
                    assert_eq!(hdm.get(e.mapping[a], e.mapping[b]) as usize, a.abs_diff(b));
                }
            }
        }
    }
}
