//! Explicit Motzkin trees, exhaustive enumeration and per-vertex statistics.
//!
//! Trees are stored as their preorder arity word (each vertex contributes its
//! number of children, 0, 1 or 2). The word determines the plane tree, and a
//! flat vector keeps deep trees free of recursion on clone and drop.

use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree {
    arities: Vec<u8>,
}

impl Tree {
    pub fn leaf() -> Self {
        Self { arities: vec![0] }
    }

    pub fn unary(child: &Tree) -> Self {
        let mut arities = Vec::with_capacity(child.size() + 1);
        arities.push(1);
        arities.extend_from_slice(&child.arities);
        Self { arities }
    }

    pub fn binary(left: &Tree, right: &Tree) -> Self {
        let mut arities = Vec::with_capacity(left.size() + right.size() + 1);
        arities.push(2);
        arities.extend_from_slice(&left.arities);
        arities.extend_from_slice(&right.arities);
        Self { arities }
    }

    /// A path of `n` vertices.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTree);
        }
        let mut arities = vec![1; n];
        arities[n - 1] = 0;
        Ok(Self { arities })
    }

    /// Validates a preorder arity word.
    pub fn from_arities(arities: Vec<u8>) -> Result<Self> {
        let malformed = || Error::MalformedTree(arities.iter().map(|a| a.to_string()).collect());
        let mut open = 1usize;
        for &a in &arities {
            if a > 2 || open == 0 {
                return Err(malformed());
            }
            open = open - 1 + a as usize;
        }
        if open != 0 {
            return Err(malformed());
        }
        Ok(Self { arities })
    }

    /// Wraps a word that is known to be well formed.
    pub(crate) fn from_arities_unchecked(arities: Vec<u8>) -> Self {
        debug_assert!(Self::from_arities(arities.clone()).is_ok());
        Self { arities }
    }

    pub fn size(&self) -> usize {
        self.arities.len()
    }

    pub fn arities(&self) -> &[u8] {
        &self.arities
    }

    pub fn leaf_count(&self) -> usize {
        self.arities.iter().filter(|&&a| a == 0).count()
    }

    /// Number of vertices in the subtree rooted at each preorder position.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.size()];
        let mut stack: Vec<usize> = Vec::new();
        for v in (0..self.size()).rev() {
            let mut s = 1;
            for _ in 0..self.arities[v] {
                s += stack.pop().expect("well-formed word");
            }
            sizes[v] = s;
            stack.push(s);
        }
        sizes
    }

    /// Preorder positions of the children of `v`, left to right.
    pub fn children(&self, v: usize) -> Vec<usize> {
        match self.arities[v] {
            0 => vec![],
            1 => vec![v + 1],
            _ => {
                let left = self.subtree_len(v + 1);
                vec![v + 1, v + 1 + left]
            }
        }
    }

    fn subtree_len(&self, start: usize) -> usize {
        let mut open = 1usize;
        let mut end = start;
        while open > 0 {
            open = open - 1 + self.arities[end] as usize;
            end += 1;
        }
        end - start
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.arities {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let arities = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                '2' => Ok(2),
                _ => Err(Error::MalformedTree(s.to_string())),
            })
            .collect::<Result<Vec<u8>>>()?;
        Tree::from_arities(arities)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexStats {
    /// Shortest distance down to a leaf.
    pub rank: u32,
    /// Longest distance down to a leaf.
    pub max_depth: u32,
    pub balanced: bool,
}

impl VertexStats {
    pub fn is_protected(&self, k: u32) -> bool {
        self.rank >= k
    }
}

/// Statistics of every vertex, indexed by preorder position.
pub fn vertex_stats(tree: &Tree) -> Vec<VertexStats> {
    let n = tree.size();
    let mut out = vec![
        VertexStats {
            rank: 0,
            max_depth: 0,
            balanced: true
        };
        n
    ];
    // children are completed before their parent when scanning backwards
    let mut stack: Vec<(u32, u32)> = Vec::new();
    for v in (0..n).rev() {
        let (rank, max_depth) = match tree.arities[v] {
            0 => (0, 0),
            1 => {
                let (r, d) = stack.pop().expect("well-formed word");
                (r + 1, d + 1)
            }
            _ => {
                let (r1, d1) = stack.pop().expect("well-formed word");
                let (r2, d2) = stack.pop().expect("well-formed word");
                (r1.min(r2) + 1, d1.max(d2) + 1)
            }
        };
        out[v] = VertexStats {
            rank,
            max_depth,
            balanced: rank == max_depth,
        };
        stack.push((rank, max_depth));
    }
    out
}

/// Every Motzkin tree with `n` vertices, each exactly once.
///
/// Order: a leaf (only for `n = 1`), then unary roots over the trees of size
/// `n - 1` in their own order, then binary roots by ascending left size, then
/// left tree, then right tree. [`crate::sampler::CountTable::unrank`] follows
/// the same order.
pub fn enumerate(n: usize) -> Result<impl Iterator<Item = Tree>> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    let mut lists: Vec<Rc<Vec<Tree>>> = vec![Rc::new(Vec::new())];
    for size in 1..n {
        let trees: Vec<Tree> = of_size(&lists, size).collect();
        lists.push(Rc::new(trees));
    }
    Ok(of_size(&lists, n))
}

fn of_size(lists: &[Rc<Vec<Tree>>], n: usize) -> Box<dyn Iterator<Item = Tree>> {
    if n == 1 {
        return Box::new(std::iter::once(Tree::leaf()));
    }
    let below = Rc::clone(&lists[n - 1]);
    let unary = (0..below.len()).map(move |i| Tree::unary(&below[i]));
    let lists: Vec<Rc<Vec<Tree>>> = lists.to_vec();
    let binary = (1..n - 1).flat_map(move |l| {
        let left = Rc::clone(&lists[l]);
        let right = Rc::clone(&lists[n - 1 - l]);
        (0..left.len()).flat_map(move |i| {
            let left = Rc::clone(&left);
            let right = Rc::clone(&right);
            (0..right.len()).map(move |j| Tree::binary(&left[i], &right[j]))
        })
    });
    Box::new(unary.chain(binary))
}

/// Exact totals over all trees of one size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AggregateCounts {
    pub n: usize,
    pub trees: u64,
    pub leaves_total: u64,
    /// Index `k` counts `k`-protected vertices, for `k <= k_max`.
    pub protected_total: Vec<u64>,
    /// Index `k` counts balanced vertices of rank `k`, for every rank `< n`.
    pub balanced_rank_total: Vec<u64>,
    pub balanced_total: u64,
    /// Trees whose root is balanced.
    pub balanced_root_trees: u64,
    /// Sum of the ranks of all balanced vertices.
    pub eb: u64,
}

pub const DEFAULT_K_MAX: usize = 8;

impl AggregateCounts {
    fn empty(n: usize, k_max: usize) -> Self {
        Self {
            n,
            trees: 0,
            leaves_total: 0,
            protected_total: vec![0; k_max + 1],
            balanced_rank_total: vec![0; n],
            balanced_total: 0,
            balanced_root_trees: 0,
            eb: 0,
        }
    }

    pub fn add_tree(&mut self, tree: &Tree) {
        debug_assert_eq!(tree.size(), self.n);
        self.trees += 1;
        let stats = vertex_stats(tree);
        if stats[0].balanced {
            self.balanced_root_trees += 1;
        }
        for s in &stats {
            if s.rank == 0 {
                self.leaves_total += 1;
            }
            let reach = (s.rank as usize).min(self.protected_total.len() - 1);
            for c in &mut self.protected_total[..=reach] {
                *c += 1;
            }
            if s.balanced {
                self.balanced_total += 1;
                self.balanced_rank_total[s.rank as usize] += 1;
                self.eb += u64::from(s.rank);
            }
        }
    }
}

/// Brute-force tallies over every tree with `n` vertices.
pub fn aggregate(n: usize, k_max: usize) -> Result<AggregateCounts> {
    let mut counts = AggregateCounts::empty(n, k_max);
    for tree in enumerate(n)? {
        counts.add_tree(&tree);
    }
    Ok(counts)
}
