//! Planar binary rooted trees.
//!
//! Text form: `TREE := "." | "(" TREE "," TREE ")"`. The canonical order is
//! the lexicographic order of these strings. Because serializations are
//! prefix-free it reduces to a structural comparison with `Node < Leaf`
//! (`'(' < '.'` in ASCII).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf,
    Node(Arc<Tree>, Arc<Tree>),
}

impl Tree {
    /// The two-leaf tree `Y = (.,.)`.
    pub fn y() -> Tree {
        Tree::vee(Tree::Leaf, Tree::Leaf)
    }

    pub fn vee(t: Tree, s: Tree) -> Tree {
        Tree::Node(Arc::new(t), Arc::new(s))
    }

    pub fn split(&self) -> Result<(Tree, Tree)> {
        match self {
            Tree::Leaf => Err(Error::Range("cannot split a leaf".into())),
            Tree::Node(l, r) => Ok(((**l).clone(), (**r).clone())),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Number of internal nodes, i.e. `leaf_count - 1`.
    pub fn node_count(&self) -> usize {
        self.leaf_count() - 1
    }

    /// `t / s`: graft `t` on the first leaf of `s`.
    pub fn over(t: &Tree, s: &Tree) -> Tree {
        match s {
            Tree::Leaf => t.clone(),
            Tree::Node(l, r) => Tree::Node(Arc::new(Tree::over(t, l)), r.clone()),
        }
    }

    /// `t \ s`: graft `s` on the last leaf of `t`.
    pub fn under(t: &Tree, s: &Tree) -> Tree {
        match t {
            Tree::Leaf => s.clone(),
            Tree::Node(l, r) => Tree::Node(l.clone(), Arc::new(Tree::under(r, s))),
        }
    }

    /// The left comb with `n` internal nodes: `comb_1 = Y`, `comb_n = Y / comb_{n-1}`.
    pub fn left_comb(n: usize) -> Result<Tree> {
        if n < 1 {
            return Err(Error::Range("left_comb needs n >= 1".into()));
        }
        let mut t = Tree::y();
        for _ in 1..n {
            t = Tree::over(&Tree::y(), &t);
        }
        Ok(t)
    }

    /// All trees with `n` leaves in canonical order.
    pub fn enumerate(n: usize) -> Result<Vec<Tree>> {
        if n < 1 {
            return Err(Error::Range("enumerate needs at least one leaf".into()));
        }
        let mut table: Vec<Vec<Tree>> = vec![Vec::new(), vec![Tree::Leaf]];
        for m in 2..=n {
            let mut all = Vec::new();
            for k in 1..m {
                for l in &table[k] {
                    for r in &table[m - k] {
                        all.push(Tree::vee(l.clone(), r.clone()));
                    }
                }
            }
            all.sort();
            table.push(all);
        }
        Ok(table.swap_remove(n))
    }

    /// Cuts along the path from leaf `i` to the root.
    ///
    /// Leaves are numbered `0..=n` left to right; valid cuts are `1..=n-1`.
    /// Returns `(r, s)`: `r` keeps everything hanging left of the path and
    /// has `i + 1` leaves, `s` keeps everything hanging right and has
    /// `n - i + 1` leaves.
    pub fn path_cut(&self, i: usize) -> Result<(Tree, Tree)> {
        let n = self.node_count();
        if i < 1 || i + 1 > n {
            return Err(Error::Range(format!("cut {i} invalid for a tree with {} leaves", n + 1)));
        }
        let mut lefts = Vec::new();
        let mut rights = Vec::new();
        let mut cur = self;
        let mut idx = i;
        while let Tree::Node(l, r) = cur {
            let nl = l.leaf_count();
            if idx < nl {
                rights.push(r.as_ref());
                cur = l;
            } else {
                lefts.push(l.as_ref());
                idx -= nl;
                cur = r;
            }
        }
        let mut left = Tree::Leaf;
        for t in lefts.iter().rev() {
            left = Tree::vee((*t).clone(), left);
        }
        let mut right = Tree::Leaf;
        for t in rights.iter().rev() {
            right = Tree::vee(right, (*t).clone());
        }
        Ok((left, right))
    }

    /// All ways of writing `self = t1 \ t2` with both factors non-trivial:
    /// `t2` is the subtree at a non-root internal node of the right edge.
    pub fn right_edge_splittings(&self) -> Vec<(Tree, Tree)> {
        let mut out = Vec::new();
        if let Tree::Node(l, r) = self {
            if !r.is_leaf() {
                out.push((Tree::vee((**l).clone(), Tree::Leaf), (**r).clone()));
                for (a, b) in r.right_edge_splittings() {
                    out.push((Tree::vee((**l).clone(), a), b));
                }
            }
        }
        out
    }

    /// All ways of writing `self = t1 / t2` with both factors non-trivial:
    /// `t1` is the subtree at a non-root internal node of the left edge.
    pub fn left_edge_splittings(&self) -> Vec<(Tree, Tree)> {
        let mut out = Vec::new();
        if let Tree::Node(l, r) = self {
            if !l.is_leaf() {
                out.push(((**l).clone(), Tree::vee(Tree::Leaf, (**r).clone())));
                for (a, b) in l.left_edge_splittings() {
                    out.push((a, Tree::vee(b, (**r).clone())));
                }
            }
        }
        out
    }

    fn write_into(&self, out: &mut String) {
        match self {
            Tree::Leaf => out.push('.'),
            Tree::Node(l, r) => {
                out.push('(');
                l.write_into(out);
                out.push(',');
                r.write_into(out);
                out.push(')');
            }
        }
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Tree::Leaf, Tree::Leaf) => Ordering::Equal,
            (Tree::Node(..), Tree::Leaf) => Ordering::Less,
            (Tree::Leaf, Tree::Node(..)) => Ordering::Greater,
            (Tree::Node(a, b), Tree::Node(c, d)) => a.cmp(c).then_with(|| b.cmp(d)),
        }
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_into(&mut s);
        f.write_str(&s)
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tree> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let t = parse_tree(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::Parse(format!("trailing input in tree {s:?}")));
        }
        Ok(t)
    }
}

fn parse_tree(b: &[u8], pos: &mut usize) -> Result<Tree> {
    let err = |p: usize| Error::Parse(format!("bad tree syntax at byte {p}"));
    match b.get(*pos) {
        Some(b'.') => {
            *pos += 1;
            Ok(Tree::Leaf)
        }
        Some(b'(') => {
            *pos += 1;
            let l = parse_tree(b, pos)?;
            if b.get(*pos) != Some(&b',') {
                return Err(err(*pos));
            }
            *pos += 1;
            let r = parse_tree(b, pos)?;
            if b.get(*pos) != Some(&b')') {
                return Err(err(*pos));
            }
            *pos += 1;
            Ok(Tree::vee(l, r))
        }
        _ => Err(err(*pos)),
    }
}

/// Shorthand for tests and examples: parses a tree literal, panicking on bad input.
pub fn tree(s: &str) -> Tree {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}
