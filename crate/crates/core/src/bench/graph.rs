//! Interaction graphs for the Hamiltonian evolution benchmarks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Path,
    Cycle,
    /// `k x k` grid.
    Square,
    /// Triangle of `k` rows, row `i` holding `i + 1` vertices.
    Triangular,
    /// Honeycomb patch shaped as a hexagon of hexagons.
    Hexagonal,
    /// Hexagonal patch with an extra vertex on every edge.
    HeavyHex,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Path, Family::Cycle, Family::Square, Family::Triangular, Family::Hexagonal, Family::HeavyHex];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Square => "square",
            Family::Triangular => "triangular",
            Family::Hexagonal => "hexagonal",
            Family::HeavyHex => "heavy_hex",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s || (s == "heavy-hex" && *f == Family::HeavyHex))
            .ok_or_else(|| Error::Config(format!("unknown graph family '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InteractionGraph {
    pub family: Family,
    pub n: usize,
    /// Sorted, each as `(a, b)` with `a < b`.
    pub edges: Vec<(usize, usize)>,
}

impl InteractionGraph {
    fn from_edges(family: Family, n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let set: BTreeSet<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        InteractionGraph { family, n, edges: set.into_iter().collect() }
    }
}

fn exact_root(n: usize, f: impl Fn(usize) -> usize) -> Option<usize> {
    (1..=n).take_while(|&k| f(k) <= n).find(|&k| f(k) == n)
}

type Patch = (Vec<(i64, i64)>, Vec<(usize, usize)>);

/// Corners and sides of the hexagon-of-hexagons patch with `radius` rings.
/// Vertices sit on an integer grid where a cell centred at `(x, y)` has its
/// corners at `(x ± 1, y ± 1)` and `(x, y ± 2)`.
fn honeycomb(radius: usize) -> Patch {
    const CORNERS: [(i64, i64); 6] = [(1, 1), (0, 2), (-1, 1), (-1, -1), (0, -2), (1, -1)];
    let r = radius as i64 - 1;
    let mut cells = Vec::new();
    for q in -r..=r {
        for s in -r..=r {
            if (q + s).abs() <= r {
                cells.push((2 * q + s, 3 * s));
            }
        }
    }
    let mut id: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for &(x, y) in &cells {
        for (dx, dy) in CORNERS {
            id.insert((y + dy, x + dx), 0);
        }
    }
    for (i, v) in id.values_mut().enumerate() {
        *v = i;
    }
    let mut edges = Vec::new();
    for &(x, y) in &cells {
        for k in 0..6 {
            let (ax, ay) = CORNERS[k];
            let (bx, by) = CORNERS[(k + 1) % 6];
            edges.push((id[&(y + ay, x + ax)], id[&(y + by, x + bx)]));
        }
    }
    let coords = id.keys().map(|&(y, x)| (x, y)).collect();
    (coords, edges)
}

pub fn make_graph(family: Family, n: usize) -> Result<InteractionGraph> {
    let bad = || Error::InadmissibleGraph { family: family.name().to_string(), n };
    let g = match family {
        Family::Path if n >= 2 => InteractionGraph::from_edges(family, n, (0..n - 1).map(|i| (i, i + 1))),
        Family::Cycle if n >= 3 => InteractionGraph::from_edges(family, n, (0..n).map(|i| (i, (i + 1) % n))),
        Family::Square => {
            let k = exact_root(n, |k| k * k).filter(|&k| k >= 2).ok_or_else(bad)?;
            let mut edges = Vec::new();
            for i in 0..k {
                for j in 0..k {
                    if j + 1 < k {
                        edges.push((i * k + j, i * k + j + 1));
                    }
                    if i + 1 < k {
                        edges.push((i * k + j, (i + 1) * k + j));
                    }
                }
            }
            InteractionGraph::from_edges(family, n, edges)
        }
        Family::Triangular => {
            let k = exact_root(n, |k| k * (k + 1) / 2).filter(|&k| k >= 2).ok_or_else(bad)?;
            let idx = |i: usize, j: usize| i * (i + 1) / 2 + j;
            let mut edges = Vec::new();
            for i in 0..k {
                for j in 0..=i {
                    if j < i {
                        edges.push((idx(i, j), idx(i, j + 1)));
                    }
                    if i + 1 < k {
                        edges.push((idx(i, j), idx(i + 1, j)));
                        edges.push((idx(i, j), idx(i + 1, j + 1)));
                    }
                }
            }
            InteractionGraph::from_edges(family, n, edges)
        }
        Family::Hexagonal => {
            let r = exact_root(n, |r| 6 * r * r).ok_or_else(bad)?;
            let (_, edges) = honeycomb(r);
            InteractionGraph::from_edges(family, n, edges)
        }
        Family::HeavyHex => {
            let r = exact_root(n, |r| 15 * r * r - 3 * r).ok_or_else(bad)?;
            let (coords, edges) = honeycomb(r);
            let hex = InteractionGraph::from_edges(Family::Hexagonal, coords.len(), edges);
            let mut heavy = Vec::new();
            for (e, &(a, b)) in hex.edges.iter().enumerate() {
                let mid = hex.n + e;
                heavy.push((a, mid));
                heavy.push((mid, b));
            }
            InteractionGraph::from_edges(family, n, heavy)
        }
        _ => return Err(bad()),
    };
    debug_assert!(g.edges.iter().all(|&(a, b)| a < b && b < n));
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degree_counts(g: &InteractionGraph) -> BTreeMap<usize, usize> {
        let mut deg = vec![0; g.n];
        for &(a, b) in &g.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        let mut out = BTreeMap::new();
        for d in deg {
            *out.entry(d).or_insert(0) += 1;
        }
        out
    }

    #[test]
    fn small_graphs() {
        assert_eq!(make_graph(Family::Path, 5).unwrap().edges, vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(make_graph(Family::Triangular, 3).unwrap().edges, vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(make_graph(Family::Cycle, 5).unwrap().edges.len(), 5);
        assert_eq!(make_graph(Family::Square, 4).unwrap().edges, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn edge_counts_of_tilings() {
        // (family, n, |E|)
        let cases = [
            (Family::Square, 9, 12),
            (Family::Triangular, 6, 9),
            (Family::Triangular, 10, 18),
            (Family::Hexagonal, 6, 6),
            (Family::Hexagonal, 24, 30),
            (Family::Hexagonal, 54, 72),
            (Family::HeavyHex, 12, 12),
            (Family::HeavyHex, 54, 60),
        ];
        for (f, n, e) in cases {
            let g = make_graph(f, n).unwrap();
            assert_eq!(g.edges.len(), e, "{f} {n}");
        }
    }

    #[test]
    fn honeycomb_degrees() {
        // Coronene: 12 inner vertices of degree 3, 12 boundary of degree 2.
        let g = make_graph(Family::Hexagonal, 24).unwrap();
        assert_eq!(degree_counts(&g), BTreeMap::from([(2, 12), (3, 12)]));
        let h = make_graph(Family::HeavyHex, 54).unwrap();
        assert_eq!(degree_counts(&h), BTreeMap::from([(2, 42), (3, 12)]));
    }

    #[test]
    fn inadmissible_sizes() {
        assert!(make_graph(Family::Square, 5).is_err());
        assert!(make_graph(Family::Triangular, 4).is_err());
        assert!(make_graph(Family::Hexagonal, 12).is_err());
        assert!(make_graph(Family::HeavyHex, 6).is_err());
        assert!(make_graph(Family::Path, 1).is_err());
        assert!(make_graph(Family::Cycle, 2).is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("hex".parse::<Family>().is_err());
    }
}
