//! Source/sink oriented trees and the tree-shaped A2 webs they describe.
//!
//! An orientation is coherent when every vertex is a source (all incident
//! edges point away) or a sink (all point in). On a tree that forces classes
//! to alternate along every edge, so a coherent orientation is determined by
//! one bit: the class of the root. [`orient_with_word`] reads that bit off
//! the boundary word and checks the rest of the boundary against it.
//!
//! A boundary vertex reads `+` when it is a sink and `-` when it is a source.
//!
//! Two routes count the all-`+` webs with (p+1)-valent internal vertices:
//! [`enumerate_sourcesink_trees`] builds them from (p², p)-coral diagrams
//! whose stars are expanded into two-level oriented stars, and
//! [`sourcesink_trees_by_filter`] walks every (p+1)-valent tree of the right
//! size and keeps the ones the parity check accepts.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::coral::{enumerate_coral_tuple, for_each_coral_code};
use crate::error::{Error, Result};
use crate::numbers::{raney_closed, Count};
use crate::trees::{depths, parents, CanonicalCode, PlaneTree};
use crate::ExactNat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Signs at the boundary vertices, left to right. Never empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryWord(Vec<Sign>);

impl BoundaryWord {
    pub fn new(signs: Vec<Sign>) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::Parse("boundary word must be nonempty".into()));
        }
        Ok(Self(signs))
    }

    /// `len` pluses.
    pub fn constant(len: usize) -> Self {
        assert!(len >= 1, "boundary word must be nonempty");
        Self(vec![Sign::Plus; len])
    }

    /// One minus followed by `pluses` pluses.
    pub fn minus_then_plus(pluses: usize) -> Self {
        let mut signs = vec![Sign::Minus];
        signs.extend(std::iter::repeat_n(Sign::Plus, pluses));
        Self(signs)
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for BoundaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| f.write_char(s.as_char()))
    }
}

impl FromStr for BoundaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(Error::Parse(format!("bad boundary sign {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(signs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexClass {
    Source,
    Sink,
}

impl VertexClass {
    pub fn opposite(self) -> Self {
        match self {
            VertexClass::Source => VertexClass::Sink,
            VertexClass::Sink => VertexClass::Source,
        }
    }

    /// `o` for a source (edges point out), `i` for a sink.
    pub fn as_char(self) -> char {
        match self {
            VertexClass::Source => 'o',
            VertexClass::Sink => 'i',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'o' => Some(VertexClass::Source),
            'i' => Some(VertexClass::Sink),
            _ => None,
        }
    }

    fn of_boundary(sign: Sign) -> Self {
        match sign {
            Sign::Plus => VertexClass::Sink,
            Sign::Minus => VertexClass::Source,
        }
    }
}

/// Preorder indices of the vertices of degree at most one, left to right:
/// every childless vertex, and the root when it has a single child. Such a
/// root only occurs in the bare arc and is placed at the left end.
pub fn boundary_vertices(code: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    if code.len() > 1 && code[0] == 1 {
        out.push(0);
    }
    out.extend(
        code.iter()
            .enumerate()
            .filter(|(_, &c)| c == 0)
            .map(|(v, _)| v),
    );
    out
}

/// A plane tree with a coherent source/sink orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedTreeWeb {
    tree: PlaneTree,
    code: CanonicalCode,
    classes: Vec<VertexClass>,
    boundary: BoundaryWord,
}

impl OrientedTreeWeb {
    pub fn tree(&self) -> &PlaneTree {
        &self.tree
    }

    pub fn code(&self) -> &CanonicalCode {
        &self.code
    }

    /// Class of every vertex, boundary vertices included, in preorder.
    pub fn classes(&self) -> &[VertexClass] {
        &self.classes
    }

    pub fn boundary(&self) -> &BoundaryWord {
        &self.boundary
    }

    /// Classes of the non-boundary vertices, in preorder.
    pub fn internal_classes(&self) -> Vec<VertexClass> {
        let boundary = boundary_vertices(self.code.as_slice());
        self.classes
            .iter()
            .enumerate()
            .filter(|(v, _)| boundary.binary_search(v).is_err())
            .map(|(_, &c)| c)
            .collect()
    }

    /// Directed edges `(from, to)` in preorder vertex indices.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        parents(self.code.as_slice())
            .into_iter()
            .enumerate()
            .filter_map(|(v, parent)| parent.map(|u| (u, v)))
            .map(|(u, v)| match self.classes[u] {
                VertexClass::Source => (u, v),
                VertexClass::Sink => (v, u),
            })
            .collect()
    }

    /// Graphviz text. Edges are written parent first so `ordering=out`
    /// keeps the planar layout; `dir` carries the orientation.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph web {\n  ordering=out;\n  node [shape=point];\n");
        for (v, class) in self.classes.iter().enumerate() {
            let label = match class {
                VertexClass::Source => "source",
                VertexClass::Sink => "sink",
            };
            writeln!(out, "  n{v} [xlabel=\"{label}\"];").unwrap();
        }
        for (v, parent) in parents(self.code.as_slice()).into_iter().enumerate() {
            if let Some(u) = parent {
                let dir = match self.classes[u] {
                    VertexClass::Source => "forward",
                    VertexClass::Sink => "back",
                };
                writeln!(out, "  n{u} -> n{v} [dir={dir}];").unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Coherent classes for `code` realizing `word`, if any.
///
/// Classes alternate with depth, so the first boundary vertex fixes all of
/// them; the remaining boundary vertices only need checking.
pub fn orient_code(code: &[u32], word: &BoundaryWord) -> Option<Vec<VertexClass>> {
    let boundary = boundary_vertices(code);
    if boundary.len() != word.len() {
        return None;
    }
    let depths = depths(code);
    let class_at = |root: VertexClass, v: usize| {
        if depths[v].is_multiple_of(2) {
            root
        } else {
            root.opposite()
        }
    };
    let first = VertexClass::of_boundary(word.signs()[0]);
    let root = class_at(first, boundary[0]);
    let consistent = boundary
        .iter()
        .zip(word.signs())
        .all(|(&v, &sign)| class_at(root, v) == VertexClass::of_boundary(sign));
    consistent.then(|| (0..code.len()).map(|v| class_at(root, v)).collect())
}

/// Orients `t` so that its boundary reads `w`.
///
/// Returns `None` when no coherent orientation realizes `w`, including when
/// `w` has the wrong length. When one exists it is unique.
pub fn orient_with_word(t: &PlaneTree, w: &BoundaryWord) -> Option<OrientedTreeWeb> {
    let code = t.encode();
    let classes = orient_code(code.as_slice(), w)?;
    Some(OrientedTreeWeb {
        tree: t.clone(),
        code,
        classes,
        boundary: w.clone(),
    })
}

fn web_from_code(code: &[u32], word: &BoundaryWord) -> Option<OrientedTreeWeb> {
    let classes = orient_code(code, word)?;
    let code = CanonicalCode::from_trusted(code.to_vec());
    Some(OrientedTreeWeb {
        tree: code.to_tree(),
        code,
        classes,
        boundary: word.clone(),
    })
}

/// Boundary length `k(p² - 1) + (p + 1)` of the all-plus webs counted by
/// `R(p², p, k)`.
pub fn sourcesink_boundary_len(p: u32, k: u32) -> usize {
    (k * (p * p - 1) + p + 1) as usize
}

/// Replaces every non-root p²-star by a vertex with p children that each
/// carry p of the original tops, in order.
fn expand_stars(t: &PlaneTree, p: usize) -> PlaneTree {
    fn expand_above(t: &PlaneTree, p: usize) -> PlaneTree {
        if t.is_leaf() {
            return PlaneTree::leaf();
        }
        debug_assert_eq!(t.children().len(), p * p);
        let middles = t
            .children()
            .chunks(p)
            .map(|tops| PlaneTree::node(tops.iter().map(|c| expand_above(c, p)).collect()))
            .collect();
        PlaneTree::node(middles)
    }
    PlaneTree::node(t.children().iter().map(|c| expand_above(c, p)).collect())
}

/// All-plus source/sink (p+1)-valent trees built from (p², p)-coral
/// diagrams with `k` two-level stars, sorted by code.
///
/// The base vertex is a source; each star is a sink attachment vertex
/// carrying p sources that each carry p sinks.
pub fn enumerate_sourcesink_trees(p: u32, k: u32) -> Vec<OrientedTreeWeb> {
    assert!(p >= 2, "source/sink trees need p >= 2");
    let word = BoundaryWord::constant(sourcesink_boundary_len(p, k));
    let mut webs: Vec<OrientedTreeWeb> = enumerate_coral_tuple(p * p, p, k)
        .iter()
        .map(|d| {
            let tree = expand_stars(d.tree(), p as usize);
            orient_with_word(&tree, &word).expect("expanded stars are coherently oriented")
        })
        .collect();
    webs.sort_by(|a, b| a.code.cmp(&b.code));
    webs
}

fn check_cap(needed: ExactNat, cap: u64) -> Result<()> {
    if needed > ExactNat::from(cap) {
        return Err(Error::SizeLimit { needed, cap });
    }
    Ok(())
}

/// Walks every (p,p)-coral diagram with `stars` stars (every (p+1)-valent
/// plane tree with `stars + 1` internal vertices) and keeps those that
/// `word` orients, sorted by code.
fn filter_pp_trees(
    p: u32,
    stars: u32,
    word: &BoundaryWord,
    cap: u64,
) -> Result<Vec<OrientedTreeWeb>> {
    check_cap(raney_closed::<ExactNat>(p, p, stars), cap)?;
    let mut webs = Vec::new();
    for_each_coral_code(p, p, stars, |code| {
        if let Some(web) = web_from_code(code, word) {
            webs.push(web);
        }
    });
    webs.sort_by(|a, b| a.code.cmp(&b.code));
    Ok(webs)
}

/// The all-plus webs with boundary length `k(p² - 1) + (p + 1)`, found by
/// filtering every (p+1)-valent tree of that size.
///
/// Fails with [`Error::SizeLimit`] when more than `cap` trees would be walked.
pub fn sourcesink_trees_by_filter(p: u32, k: u32, cap: u64) -> Result<Vec<OrientedTreeWeb>> {
    assert!(p >= 2, "source/sink trees need p >= 2");
    let word = BoundaryWord::constant(sourcesink_boundary_len(p, k));
    filter_pp_trees(p, k * (p + 1), &word, cap)
}

pub fn count_sourcesink_by_filter(p: u32, k: u32, cap: u64) -> Result<ExactNat> {
    sourcesink_trees_by_filter(p, k, cap).map(|webs| ExactNat::from(webs.len()))
}

/// Connected cycle-free A2 webs with `3(k + 1)` pluses on the boundary.
pub fn enumerate_a2_tree_webs_constant(k: u32) -> Vec<OrientedTreeWeb> {
    enumerate_sourcesink_trees(2, k)
}

/// Connected cycle-free A2 webs with boundary `- + ... +` of length `3k + 2`.
///
/// For `k = 0` the only such web is a bare arc from the minus to the plus.
pub fn enumerate_a2_tree_webs_minus(k: u32, cap: u64) -> Result<Vec<OrientedTreeWeb>> {
    let word = BoundaryWord::minus_then_plus(3 * k as usize + 1);
    if k == 0 {
        let arc = PlaneTree::node(vec![PlaneTree::leaf()]);
        return Ok(vec![
            orient_with_word(&arc, &word).expect("an arc joins - to +")
        ]);
    }
    // A trivalent tree with 3k + 2 leaves has 3k internal vertices.
    filter_pp_trees(2, 3 * k - 1, &word, cap)
}

/// The two conjectured sl_n tree-web counts, `(n-2)^k R(n+1, n-1, k)` and
/// `(n-2)^k R(n-1, n-j, k)`, exactly as stated. Neither is verified by any
/// enumeration here.
pub fn conjecture_values<T: Count>(n: u32, j: u32, k: u32) -> Result<(T, T)> {
    if n < 3 || j < 1 || j > n - 1 {
        return Err(Error::ParameterMismatch(format!(
            "conjectures need n >= 3 and 1 <= j <= n - 1, got n = {n}, j = {j}"
        )));
    }
    let factor = (0..k).fold(T::one(), |acc, _| acc * T::from_u32(n - 2).unwrap());
    let constant = factor.clone() * raney_closed::<T>(n + 1, n - 1, k);
    let mixed = factor * raney_closed::<T>(n - 1, n - j, k);
    Ok((constant, mixed))
}
