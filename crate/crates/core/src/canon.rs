//! Canonical labeling of set systems over `{1, ..., n}`.
//!
//! Individualization-refinement: vertex colors are refined by the multiset of
//! (size, member colors) of the sets containing each vertex until stable; the
//! search then branches on the first non-singleton cell. Every discrete leaf
//! yields a relabeling, and the lexicographically least relabeled set list is
//! the canonical encoding. Automorphisms found at equivalent leaves prune both
//! sibling orbits and whole subtrees.

use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Result of canonically relabeling a set system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalLabeling {
    /// `perm[v]` is the new 0-based position of the 0-based vertex `v`.
    pub perm: Vec<usize>,
    /// Relabeled sets in `VertexSet` order.
    pub encoding: Vec<VertexSet>,
}

/// Canonically labels `sets` viewed as a hypergraph on `n` vertices.
pub fn canonical_labeling(n: usize, sets: &[VertexSet]) -> CanonicalLabeling {
    assert!(n <= MAX_VERTICES, "canonical labeling supports at most 64 vertices");
    if n == 0 {
        let mut encoding = sets.to_vec();
        encoding.sort();
        return CanonicalLabeling {
            perm: Vec::new(),
            encoding,
        };
    }
    let mut search = Search::new(n, sets);
    let colors = search.refine(vec![0; n]);
    let mut path = Vec::new();
    search.descend(colors, &mut path);
    let best = search.best.expect("search visits at least one leaf");
    CanonicalLabeling {
        perm: best.perm,
        encoding: best.encoding,
    }
}

/// Relabels `sets` by a 0-based position map and sorts the result.
pub fn encode(sets: &[VertexSet], perm: &[usize]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = sets.iter().map(|s| s.map_positions(perm)).collect();
    out.sort();
    out
}

struct Leaf {
    perm: Vec<usize>,
    encoding: Vec<VertexSet>,
    path: Vec<usize>,
}

struct Search<'a> {
    n: usize,
    sets: &'a [VertexSet],
    members: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(n: usize, sets: &'a [VertexSet]) -> Self {
        let members: Vec<Vec<usize>> = sets.iter().map(|s| s.iter().map(|v| v - 1).collect()).collect();
        let mut incidence = vec![Vec::new(); n];
        for (i, m) in members.iter().enumerate() {
            for &v in m {
                incidence[v].push(i);
            }
        }
        Search {
            n,
            sets,
            members,
            incidence,
            first: None,
            best: None,
            automorphisms: Vec::new(),
        }
    }

    /// Refines an ordered coloring to the coarsest stable refinement. Colors
    /// come back as dense ranks `0..k`, ordered consistently with the input.
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let mut count = rank_in_place(&mut colors);
        loop {
            let set_sigs: Vec<(usize, Vec<u32>)> = self
                .members
                .iter()
                .map(|m| {
                    let mut c: Vec<u32> = m.iter().map(|&v| colors[v]).collect();
                    c.sort_unstable();
                    (m.len(), c)
                })
                .collect();
            let set_rank = dense_ranks(&set_sigs);
            let vertex_sigs: Vec<(u32, Vec<u32>)> = (0..self.n)
                .map(|v| {
                    let mut r: Vec<u32> = self.incidence[v].iter().map(|&s| set_rank[s]).collect();
                    r.sort_unstable();
                    (colors[v], r)
                })
                .collect();
            let next = dense_ranks(&vertex_sigs);
            let next_count = next.iter().copied().max().map_or(0, |m| m as usize + 1);
            colors = next;
            if next_count == count {
                return colors;
            }
            count = next_count;
        }
    }

    /// Returns `Some(level)` when the caller chain should unwind to the node at
    /// depth `level`.
    fn descend(&mut self, colors: Vec<u32>, path: &mut Vec<usize>) -> Option<usize> {
        let depth = path.len();
        let Some(cell) = target_cell(&colors) else {
            return self.leaf(&colors, path);
        };
        let mut explored: Vec<usize> = Vec::new();
        for &w in &cell {
            if !explored.is_empty() && self.in_explored_orbit(w, &explored, path) {
                continue;
            }
            let child = self.refine(individualize(&colors, w));
            path.push(w);
            let jump = self.descend(child, path);
            path.pop();
            explored.push(w);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, colors: &[u32], path: &[usize]) -> Option<usize> {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let encoding = encode(self.sets, &perm);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                perm,
                encoding,
                path: path.to_vec(),
            };
            self.best = Some(Leaf {
                perm: leaf.perm.clone(),
                encoding: leaf.encoding.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if first.encoding == encoding {
            let level = common_prefix(path, &first.path);
            let auto = automorphism(&perm, &first.perm);
            self.automorphisms.push(auto);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best set with first");
        match encoding.cmp(&best.encoding) {
            std::cmp::Ordering::Less => {
                self.best = Some(Leaf {
                    perm,
                    encoding,
                    path: path.to_vec(),
                });
                None
            }
            std::cmp::Ordering::Equal => {
                let level = common_prefix(path, &best.path);
                let auto = automorphism(&perm, &best.perm);
                self.automorphisms.push(auto);
                Some(level)
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    /// Whether `w` shares an orbit with an explored sibling under the known
    /// automorphisms that fix the current path pointwise.
    fn in_explored_orbit(&self, w: usize, explored: &[usize], path: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for g in &self.automorphisms {
            if path.iter().all(|&v| g[v] == v) {
                any = true;
                for (v, &image) in g.iter().enumerate() {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, w);
        explored.iter().any(|&e| find(&mut parent, e) == root)
    }
}

/// Vertex map `v -> u` sending each vertex to the one occupying the same
/// position in the other leaf.
fn automorphism(perm: &[usize], other: &[usize]) -> Vec<usize> {
    let mut inverse = vec![0; other.len()];
    for (v, &p) in other.iter().enumerate() {
        inverse[p] = v;
    }
    perm.iter().map(|&p| inverse[p]).collect()
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// First (lowest-colored) cell with at least two vertices, in vertex order.
fn target_cell(colors: &[u32]) -> Option<Vec<usize>> {
    let k = colors.iter().copied().max()? as usize + 1;
    let mut sizes = vec![0usize; k];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    let c = sizes.iter().position(|&s| s > 1)? as u32;
    Some((0..colors.len()).filter(|&v| colors[v] == c).collect())
}

fn individualize(colors: &[u32], w: usize) -> Vec<u32> {
    let c = colors[w];
    colors
        .iter()
        .enumerate()
        .map(|(v, &x)| if x == c && v != w { 2 * x + 1 } else { 2 * x })
        .collect()
}

fn rank_in_place(colors: &mut [u32]) -> usize {
    let ranks = dense_ranks(colors);
    let count = ranks.iter().copied().max().map_or(0, |m| m as usize + 1);
    colors.copy_from_slice(&ranks);
    count
}

fn dense_ranks<T: Ord + Clone>(items: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = items.to_vec();
    sorted.sort();
    sorted.dedup();
    items
        .iter()
        .map(|x| sorted.binary_search(x).expect("present") as u32)
        .collect()
}
