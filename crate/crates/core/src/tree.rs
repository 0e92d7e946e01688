//! Weighted ordered trees.
//!
//! Every vertex other than the root and the leaves carries a weight between 1
//! and its outdegree. Children are kept in left-to-right order, which is also
//! the order preorder visits them in.
//!
//! Text form: `[` subtrees of the root `]`, where a subtree is `L` or
//! `(w subtree+)`, e.g. `[(1 L L) L]`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::{GuardExceeded, ParseError};
use crate::fpath::{FPath, FStep, StatTriple};

/// Largest edge count produced by [`enumerate`].
pub const DEFAULT_GUARD: usize = 11;

/// A non-root vertex. Leaves have no children and weight 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub weight: usize,
    pub children: Vec<Node>,
}

impl Node {
    pub fn leaf() -> Node {
        Node {
            weight: 0,
            children: Vec::new(),
        }
    }

    pub fn interior(weight: usize, children: Vec<Node>) -> Node {
        Node { weight, children }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    fn edges(&self) -> usize {
        self.children.iter().map(|c| 1 + c.edges()).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TreeError {
    /// Vertices are numbered in preorder with the root as 0.
    #[error("vertex {0} has a weight outside 1..=outdegree")]
    WeightOutOfRange(usize),
    #[error("vertex {0} is a leaf but carries a weight")]
    WeightOnLeafOrRoot(usize),
    #[error("a tree needs at least one edge")]
    NoEdges,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WTree {
    children: Vec<Node>,
}

impl WTree {
    /// Builds the tree whose root has the given subtrees.
    pub fn new(children: Vec<Node>) -> Result<WTree, TreeError> {
        if children.is_empty() {
            return Err(TreeError::NoEdges);
        }
        let tree = WTree { children };
        for (i, v) in tree.preorder().into_iter().enumerate().skip(1) {
            if v.is_leaf() && v.weight != 0 {
                return Err(TreeError::WeightOnLeafOrRoot(i));
            }
            if !v.is_leaf() && !(1..=v.children.len()).contains(&v.weight) {
                return Err(TreeError::WeightOutOfRange(i));
            }
        }
        Ok(tree)
    }

    pub fn single_edge() -> WTree {
        WTree {
            children: vec![Node::leaf()],
        }
    }

    pub fn children(&self) -> &[Node] {
        &self.children
    }

    pub fn edges(&self) -> usize {
        self.children.iter().map(|c| 1 + c.edges()).sum()
    }

    /// Non-root vertices in preorder, preceded by a leaf-shaped placeholder
    /// for the root so that indices match the usual labels `v_0, v_1, ...`.
    pub fn preorder(&self) -> Vec<&Node> {
        fn visit<'a>(v: &'a Node, out: &mut Vec<&'a Node>) {
            out.push(v);
            for c in &v.children {
                visit(c, out);
            }
        }
        static ROOT: Node = Node {
            weight: 0,
            children: Vec::new(),
        };
        let mut out = vec![&ROOT];
        for c in &self.children {
            visit(c, &mut out);
        }
        out
    }

    pub fn root_degree(&self) -> usize {
        self.children.len()
    }

    pub fn leaves(&self) -> usize {
        self.preorder()[1..].iter().filter(|v| v.is_leaf()).count()
    }

    pub fn ones(&self) -> usize {
        self.preorder()[1..]
            .iter()
            .filter(|v| v.weight == 1)
            .count()
    }

    pub fn stats(&self) -> StatTriple {
        StatTriple::new(self.root_degree() - 1, self.leaves() - 1, self.ones())
    }

    /// Root with the subtrees of `other` followed by those of `self`, left to
    /// right. Read right to left this is `self` then `other`, which is what
    /// makes the bijection a homomorphism.
    pub fn direct_sum(&self, other: &WTree) -> WTree {
        let mut children = other.children.clone();
        children.extend_from_slice(&self.children);
        WTree { children }
    }

    /// One single-subtree tree per child of the root, rightmost first.
    pub fn decompose(&self) -> Vec<WTree> {
        self.children
            .iter()
            .rev()
            .map(|c| WTree {
                children: vec![c.clone()],
            })
            .collect()
    }

    /// Step `s_i` comes from vertex `v_{n-i+1}`: an interior vertex gives
    /// `(wt, wt - outdeg + 1)` and a leaf gives `(0,1)`.
    pub fn to_fpath(&self) -> FPath {
        let order = self.preorder();
        let n = order.len() - 2;
        let steps = (1..=n)
            .map(|i| {
                let v = order[n - i + 1];
                if v.is_leaf() {
                    FStep::NORTH
                } else {
                    let (w, d) = (v.weight as i64, v.children.len() as i64);
                    FStep::new(w, w - d + 1).expect("weight bounds give a step in F")
                }
            })
            .collect();
        FPath::from_steps_unchecked(steps)
    }

    /// Rebuilds the tree from its preorder outdegrees.
    pub fn from_fpath(q: &FPath) -> WTree {
        let n = q.len();
        // (weight, outdegree) of v_1 .. v_{n+1}
        let mut spec: Vec<(usize, usize)> = q
            .steps()
            .iter()
            .rev()
            .map(|s| {
                if s.is_north() {
                    (0, 0)
                } else {
                    (
                        s.dx() as usize,
                        (s.dx() as i64 - s.dy() as i64 + 1) as usize,
                    )
                }
            })
            .collect();
        spec.push((0, 0));
        debug_assert_eq!(spec.len(), n + 1);

        // each frame is a vertex still waiting for children
        let mut stack: Vec<(Node, usize)> = vec![(Node::leaf(), q.height() + 1)];
        for (weight, degree) in spec {
            let mut node = Node {
                weight,
                children: Vec::with_capacity(degree),
            };
            if degree > 0 {
                stack.push((node, degree));
                continue;
            }
            // attach the finished subtree and close every parent it completes
            loop {
                let (parent, slots) = stack.last_mut().expect("slot arithmetic");
                parent.children.push(node);
                if parent.children.len() < *slots {
                    break;
                }
                let (done, _) = stack.pop().unwrap();
                if stack.is_empty() {
                    return WTree {
                        children: done.children,
                    };
                }
                node = done;
            }
        }
        unreachable!("the last vertex closes the root")
    }
}

/// All weighted ordered trees with `edges` edges, ordered by shape and then
/// by weights.
pub fn enumerate(edges: usize) -> Result<Vec<WTree>, GuardExceeded> {
    enumerate_with_limit(edges, DEFAULT_GUARD)
}

pub fn enumerate_with_limit(edges: usize, limit: usize) -> Result<Vec<WTree>, GuardExceeded> {
    GuardExceeded::check(edges, limit)?;
    if edges == 0 {
        return Ok(Vec::new());
    }
    let mut forests: Vec<Vec<Vec<Node>>> = vec![vec![Vec::new()]];
    for k in 1..=edges {
        let mut all = Vec::new();
        for first in 1..=k {
            for sub in &forests[first - 1] {
                for rest in &forests[k - first] {
                    let mut forest = vec![Node {
                        weight: 0,
                        children: sub.clone(),
                    }];
                    forest.extend(rest.iter().cloned());
                    all.push(forest);
                }
            }
        }
        forests.push(all);
    }
    let mut out = Vec::new();
    for shape in forests.swap_remove(edges) {
        let mut tree = WTree { children: shape };
        reset_weights(&mut tree.children);
        loop {
            out.push(tree.clone());
            if !advance_weights(&mut tree.children) {
                break;
            }
        }
    }
    Ok(out)
}

fn reset_weights(nodes: &mut [Node]) {
    for v in nodes {
        v.weight = if v.is_leaf() { 0 } else { 1 };
        reset_weights(&mut v.children);
    }
}

/// Odometer over weights, last vertex in preorder turning fastest.
fn advance_weights(nodes: &mut [Node]) -> bool {
    for v in nodes.iter_mut().rev() {
        if advance_weights(&mut v.children) {
            return true;
        }
        if !v.is_leaf() && v.weight < v.children.len() {
            v.weight += 1;
            reset_weights(&mut v.children);
            return true;
        }
        if !v.is_leaf() {
            v.weight = 1;
        }
    }
    false
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_leaf() {
            return f.write_str("L");
        }
        write!(f, "({}", self.weight)?;
        for c in &self.children {
            write!(f, " {c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for WTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_space(&mut self) {
        while self.text.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_space();
        self.text.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::new(
                self.pos,
                format!("expected {:?}", byte as char),
            ))
        }
    }

    fn subtree(&mut self) -> Result<Node, ParseError> {
        match self.peek() {
            Some(b'L') => {
                self.pos += 1;
                Ok(Node::leaf())
            }
            Some(b'(') => {
                self.pos += 1;
                self.skip_space();
                let start = self.pos;
                while self.text.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let weight = std::str::from_utf8(&self.text[start..self.pos])
                    .unwrap()
                    .parse::<usize>()
                    .map_err(|_| ParseError::new(start, "expected a weight"))?;
                let mut children = Vec::new();
                while self.peek() != Some(b')') {
                    children.push(self.subtree()?);
                }
                if children.is_empty() {
                    return Err(ParseError::new(
                        self.pos,
                        "a weighted vertex needs children",
                    ));
                }
                self.pos += 1;
                Ok(Node { weight, children })
            }
            _ => Err(ParseError::new(self.pos, "expected 'L' or '('")),
        }
    }
}

impl FromStr for WTree {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<WTree, ParseError> {
        let mut p = Parser {
            text: text.as_bytes(),
            pos: 0,
        };
        p.expect(b'[')?;
        let mut children = Vec::new();
        while p.peek() != Some(b']') {
            if p.peek().is_none() {
                return Err(ParseError::new(p.pos, "expected ']'"));
            }
            children.push(p.subtree()?);
        }
        p.pos += 1;
        if p.peek().is_some() {
            return Err(ParseError::new(p.pos, "trailing input"));
        }
        WTree::new(children).map_err(|e| ParseError::new(0, e.to_string()))
    }
}
