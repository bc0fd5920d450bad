//! Leaf-labelled trivalent trees (models of a partition).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A trivalent tree whose leaves carry the parts of a partition.
///
/// Vertices `0..ℓ` are leaves, with leaf `i` labelled `leaf_labels[i]`;
/// vertices `ℓ..2ℓ−2` are internal and have degree 3.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TreeModel {
    leaf_labels: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
}

impl TreeModel {
    /// Checks degrees, connectivity and acyclicity; neighbor lists are sorted.
    pub fn new(leaf_labels: Vec<usize>, mut adjacency: Vec<Vec<usize>>) -> Result<Self> {
        let l = leaf_labels.len();
        let bad = |why: String| Err(Error::InvalidModel(why));
        if l < 3 {
            return bad(format!("{l} leaves, need at least 3"));
        }
        if leaf_labels.contains(&0) {
            return bad("leaf labels must be positive".into());
        }
        if adjacency.len() != 2 * l - 2 {
            return bad(format!(
                "{} vertices, expected {}",
                adjacency.len(),
                2 * l - 2
            ));
        }
        for (v, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            let want = if v < l { 1 } else { 3 };
            if nbrs.len() != want {
                return bad(format!(
                    "vertex {v} has degree {}, expected {want}",
                    nbrs.len()
                ));
            }
            if nbrs.windows(2).any(|w| w[0] == w[1]) || nbrs.contains(&v) {
                return bad(format!("vertex {v} has a repeated or self edge"));
            }
        }
        for (v, nbrs) in adjacency.iter().enumerate() {
            for &u in nbrs {
                if u >= adjacency.len() || !adjacency[u].contains(&v) {
                    return bad(format!("edge {v}-{u} is not symmetric"));
                }
            }
        }
        // 2ℓ−3 edges on 2ℓ−2 vertices: connected implies acyclic.
        let mut seen = vec![false; adjacency.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if seen.contains(&false) {
            return bad("tree is disconnected".into());
        }
        Ok(TreeModel {
            leaf_labels,
            adjacency,
        })
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_labels.len()
    }

    pub fn leaf_labels(&self) -> &[usize] {
        &self.leaf_labels
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn internal_vertices(&self) -> std::ops::Range<usize> {
        self.leaf_count()..self.adjacency.len()
    }

    /// The partition whose parts are the leaf labels.
    pub fn label_partition(&self) -> Partition {
        Partition::new(self.leaf_labels.clone()).expect("labels are positive")
    }

    /// Leaves on the far side of `from → to`, as a bitmask over leaf ids.
    fn side(&self, from: usize, to: usize) -> u64 {
        let l = self.leaf_count();
        let mut mask = 0u64;
        let mut stack = vec![(from, to)];
        while let Some((prev, v)) = stack.pop() {
            if v < l {
                mask |= 1 << v;
            }
            stack.extend(
                self.adjacency[v]
                    .iter()
                    .filter(|&&u| u != prev)
                    .map(|&u| (v, u)),
            );
        }
        mask
    }

    /// `π(v) = (m(C_1), m(C_2), m(C_3))` over the components of `T ∖ {v}`.
    pub fn vertex_partition(&self, v: usize) -> Result<Partition> {
        if !self.internal_vertices().contains(&v) {
            return Err(Error::InvalidModel(format!("vertex {v} is not internal")));
        }
        let sums = self.adjacency[v].iter().map(|&u| {
            let mask = self.side(v, u);
            (0..self.leaf_count())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| self.leaf_labels[i])
                .sum()
        });
        Partition::new(sums.collect())
    }

    /// Nontrivial splits, each recorded as the side not containing leaf 0.
    pub fn splits(&self) -> BTreeSet<u64> {
        let l = self.leaf_count();
        let mut out = BTreeSet::new();
        for u in self.internal_vertices() {
            for &v in &self.adjacency[u] {
                if v > u {
                    let s = self.side(u, v);
                    out.insert(if s & 1 == 1 { !s & ((1 << l) - 1) } else { s });
                }
            }
        }
        out
    }

    /// Same unlabelled-by-part topology on the same leaf ids.
    pub fn same_topology(&self, other: &TreeModel) -> bool {
        self.leaf_count() == other.leaf_count() && self.splits() == other.splits()
    }

    /// The two nearest-neighbor interchanges across every internal edge.
    pub fn nni_neighbors(&self) -> Vec<TreeModel> {
        let mut out = Vec::new();
        for u in self.internal_vertices() {
            for &v in &self.adjacency[u] {
                if v <= u {
                    continue;
                }
                let b = self.adjacency[u]
                    .iter()
                    .copied()
                    .find(|&x| x != v)
                    .expect("degree 3");
                for c in self.adjacency[v].iter().copied().filter(|&x| x != u) {
                    let mut adj = self.adjacency.clone();
                    swap_edge_end(&mut adj, b, u, v);
                    swap_edge_end(&mut adj, c, v, u);
                    out.push(
                        TreeModel::new(self.leaf_labels.clone(), adj)
                            .expect("interchange keeps a tree"),
                    );
                }
            }
        }
        out
    }
}

/// Re-hangs `x` from `old` onto `new`.
fn swap_edge_end(adj: &mut [Vec<usize>], x: usize, old: usize, new: usize) {
    adj[old].retain(|&y| y != x);
    adj[new].push(x);
    for y in adj[x].iter_mut() {
        if *y == old {
            *y = new;
        }
    }
}

fn require_tree(pi: &Partition) -> Result<()> {
    if pi.length() < 3 {
        return Err(Error::TooFewParts(pi.to_string()));
    }
    Ok(())
}

/// Every leaf-labelled trivalent tree on the parts of `π`, by leaf insertion.
/// There are `(2ℓ−5)!!`; equal parts are not identified.
pub fn enumerate_models(pi: &Partition) -> Result<Vec<TreeModel>> {
    require_tree(pi)?;
    let l = pi.length();
    let center = l;
    let mut edges = vec![(0, center), (1, center), (2, center)];
    let mut out = Vec::new();
    insert_leaves(pi.parts(), 3, &mut edges, &mut out);
    Ok(out)
}

fn insert_leaves(
    labels: &[usize],
    leaf: usize,
    edges: &mut Vec<(usize, usize)>,
    out: &mut Vec<TreeModel>,
) {
    let l = labels.len();
    if leaf == l {
        let mut adj = vec![Vec::new(); 2 * l - 2];
        for &(a, b) in edges.iter() {
            adj[a].push(b);
            adj[b].push(a);
        }
        out.push(TreeModel::new(labels.to_vec(), adj).expect("leaf insertion builds a tree"));
        return;
    }
    let mid = l + leaf - 2;
    for k in 0..edges.len() {
        let (a, b) = edges[k];
        edges[k] = (a, mid);
        edges.push((mid, b));
        edges.push((leaf, mid));
        insert_leaves(labels, leaf + 1, edges, out);
        edges.truncate(edges.len() - 2);
        edges[k] = (a, b);
    }
}

/// The path-backbone tree: parts in sorted order, two leaves at each end.
pub fn caterpillar_model(pi: &Partition) -> Result<TreeModel> {
    require_tree(pi)?;
    let l = pi.length();
    let spine = |j: usize| l + j;
    let mut adj = vec![Vec::new(); 2 * l - 2];
    let mut join = |a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for j in 1..l - 2 {
        join(spine(j - 1), spine(j));
    }
    join(0, spine(0));
    for leaf in 1..l - 1 {
        join(leaf, spine(leaf - 1));
    }
    join(l - 1, spine(l - 3));
    TreeModel::new(pi.parts().to_vec(), adj)
}
