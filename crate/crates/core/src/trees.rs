//! Plane rooted trees and their canonical codes.
//!
//! A plane tree is identified by its preorder sequence of child counts. Two
//! trees are the same planar embedding (with the root fixed) exactly when
//! their codes are equal, so codes double as sort keys and set members.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numbers::weak_compositions;

/// Rooted tree whose children are ordered left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PlaneTree {
    children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        Self::default()
    }

    pub fn node(children: Vec<PlaneTree>) -> Self {
        Self { children }
    }

    /// A root with `arity` leaf children.
    pub fn star(arity: usize) -> Self {
        Self::node(vec![Self::leaf(); arity])
    }

    pub fn children(&self) -> &[PlaneTree] {
        &self.children
    }

    pub fn into_children(self) -> Vec<PlaneTree> {
        self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(PlaneTree::vertex_count)
            .sum::<usize>()
    }

    pub fn leaf_count(&self) -> usize {
        if self.is_leaf() {
            1
        } else {
            self.children.iter().map(PlaneTree::leaf_count).sum()
        }
    }

    pub fn encode(&self) -> CanonicalCode {
        let mut code = Vec::with_capacity(self.vertex_count());
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            code.push(t.children.len() as u32);
            stack.extend(t.children.iter().rev());
        }
        CanonicalCode(code)
    }

    pub fn decode(code: &CanonicalCode) -> Self {
        build_from_preorder(&code.0)
    }

    /// Preorder indices of the childless vertices, which are the terminal
    /// vertices on the boundary line read left to right.
    pub fn boundary_leaves(&self) -> Vec<usize> {
        self.encode()
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 0)
            .map(|(v, _)| v)
            .collect()
    }

    /// Graphviz text; `ordering=out` keeps the planar order of children.
    pub fn to_dot(&self) -> String {
        let code = self.encode();
        let parents = parents(code.as_slice());
        let mut out = String::from("graph plane_tree {\n  ordering=out;\n  node [shape=point];\n");
        for v in 0..parents.len() {
            writeln!(out, "  n{v};").unwrap();
        }
        for (v, parent) in parents.iter().enumerate() {
            if let Some(u) = parent {
                writeln!(out, "  n{u} -- n{v};").unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

fn build_from_preorder(code: &[u32]) -> PlaneTree {
    // Frames hold a node's expected child count and the children built so far.
    let mut stack: Vec<(u32, Vec<PlaneTree>)> = Vec::new();
    for &c in code {
        let mut finished = if c == 0 {
            Some(PlaneTree::leaf())
        } else {
            stack.push((c, Vec::with_capacity(c as usize)));
            None
        };
        while let Some(t) = finished.take() {
            match stack.last_mut() {
                None => return t,
                Some((want, kids)) => {
                    kids.push(t);
                    if kids.len() == *want as usize {
                        let (_, kids) = stack.pop().unwrap();
                        finished = Some(PlaneTree::node(kids));
                    }
                }
            }
        }
    }
    unreachable!("validated codes always close the root")
}

pub fn encode(t: &PlaneTree) -> CanonicalCode {
    t.encode()
}

/// Parses a raw child-count sequence into a tree.
pub fn decode(code: &[u32]) -> Result<PlaneTree> {
    let code = CanonicalCode::new(code.to_vec())?;
    Ok(PlaneTree::decode(&code))
}

/// Preorder child-count sequence of a plane tree.
///
/// A sequence is valid iff the running deficit `1 + sum(c_i - 1)` stays
/// positive and first reaches zero at the last entry.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u32>);

impl CanonicalCode {
    pub fn new(code: Vec<u32>) -> Result<Self> {
        validate(&code)?;
        Ok(Self(code))
    }

    /// Wraps a code produced by one of the generators.
    pub(crate) fn from_trusted(code: Vec<u32>) -> Self {
        debug_assert!(validate(&code).is_ok(), "generator produced {code:?}");
        Self(code)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0.len()
    }

    pub fn to_tree(&self) -> PlaneTree {
        PlaneTree::decode(self)
    }
}

pub fn validate(code: &[u32]) -> Result<()> {
    let malformed = |reason| Error::MalformedCode {
        code: code.to_vec(),
        reason,
    };
    if code.is_empty() {
        return Err(malformed("empty code"));
    }
    let mut deficit: i64 = 1;
    for (i, &c) in code.iter().enumerate() {
        deficit += i64::from(c) - 1;
        if deficit == 0 && i + 1 < code.len() {
            return Err(malformed("tree closes before the end of the code"));
        }
    }
    if deficit != 0 {
        return Err(malformed("tree is left open at the end of the code"));
    }
    Ok(())
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for CanonicalCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let code = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad code entry {part:?}: {e}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Self::new(code)
    }
}

/// Parent of each vertex, indexed by preorder position.
pub fn parents(code: &[u32]) -> Vec<Option<usize>> {
    let mut parents = Vec::with_capacity(code.len());
    // (vertex, children still to come)
    let mut open: Vec<(usize, u32)> = Vec::new();
    for (v, &c) in code.iter().enumerate() {
        parents.push(open.last().map(|&(u, _)| u));
        if let Some(top) = open.last_mut() {
            top.1 -= 1;
            if top.1 == 0 {
                open.pop();
            }
        }
        if c > 0 {
            open.push((v, c));
        }
    }
    parents
}

/// Depth of each vertex, indexed by preorder position.
pub fn depths(code: &[u32]) -> Vec<u32> {
    let mut depths = Vec::with_capacity(code.len());
    let mut open: Vec<(u32, u32)> = Vec::new();
    for &c in code {
        let depth = open.last().map_or(0, |&(d, _)| d + 1);
        depths.push(depth);
        if let Some(top) = open.last_mut() {
            top.1 -= 1;
            if top.1 == 0 {
                open.pop();
            }
        }
        if c > 0 {
            open.push((depth, c));
        }
    }
    depths
}

/// Codes of all full p-ary trees with `internal` internal vertices, indexed
/// by that count from 0 to `max_internal`. Within a size the order is
/// unspecified.
pub(crate) fn pary_code_table(p: u32, max_internal: u32) -> Vec<Vec<Vec<u32>>> {
    let mut table: Vec<Vec<Vec<u32>>> = vec![vec![vec![0]]];
    for size in 1..=max_internal {
        let mut trees = Vec::new();
        for split in weak_compositions(size - 1, p) {
            let mut buf = vec![p];
            concat_products(&table, split.parts(), &mut buf, &mut |code| {
                trees.push(code.to_vec())
            });
        }
        table.push(trees);
    }
    table
}

/// Calls `emit` with `buf` extended by every concatenation of one tree from
/// each `table[sizes[i]]`, in order.
pub(crate) fn concat_products(
    table: &[Vec<Vec<u32>>],
    sizes: &[u32],
    buf: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    match sizes.split_first() {
        None => emit(buf),
        Some((&size, rest)) => {
            for tree in &table[size as usize] {
                let mark = buf.len();
                buf.extend_from_slice(tree);
                concat_products(table, rest, buf, emit);
                buf.truncate(mark);
            }
        }
    }
}

/// Every plane tree whose vertices have 0 or `p` children, with exactly
/// `internal` vertices having `p` children, sorted by canonical code.
pub fn enumerate_pary_trees(p: u32, internal: u32) -> Vec<PlaneTree> {
    assert!(p >= 1, "p must be positive");
    let mut codes = pary_code_table(p, internal).swap_remove(internal as usize);
    codes.sort_unstable();
    codes
        .into_iter()
        .map(|c| CanonicalCode::from_trusted(c).to_tree())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::p_catalan;
    use std::collections::BTreeSet;

    fn cherry() -> PlaneTree {
        PlaneTree::star(2)
    }

    /// The (2,2)-coral diagram with three stars built up in the first figure.
    fn three_star_coral() -> PlaneTree {
        let upper = PlaneTree::node(vec![PlaneTree::leaf(), cherry()]);
        PlaneTree::node(vec![PlaneTree::leaf(), upper, cherry()])
    }

    #[test]
    fn encode_examples() {
        assert_eq!(PlaneTree::leaf().encode().as_slice(), &[0]);
        assert_eq!(cherry().encode().as_slice(), &[2, 0, 0]);
        assert_eq!(
            three_star_coral().encode().as_slice(),
            &[3, 0, 2, 0, 2, 0, 0, 2, 0, 0]
        );
        assert_eq!(
            three_star_coral().encode().to_string(),
            "3,0,2,0,2,0,0,2,0,0"
        );
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode(&[0]).unwrap(), PlaneTree::leaf());
        assert_eq!(decode(&[2, 0, 0]).unwrap(), cherry());
        assert_eq!(
            decode(&[3, 0, 2, 0, 2, 0, 0, 2, 0, 0]).unwrap(),
            three_star_coral()
        );
    }

    #[test]
    fn decode_rejects_malformed() {
        assert!(matches!(decode(&[2, 0]), Err(Error::MalformedCode { .. })));
        assert!(matches!(decode(&[]), Err(Error::MalformedCode { .. })));
        assert!(matches!(decode(&[0, 0]), Err(Error::MalformedCode { .. })));
        assert!(matches!(
            decode(&[1, 0, 0]),
            Err(Error::MalformedCode { .. })
        ));
        assert!("2,0".parse::<CanonicalCode>().is_err());
        assert!("2,x,0".parse::<CanonicalCode>().is_err());
        assert_eq!("2,0,0".parse::<CanonicalCode>().unwrap(), cherry().encode());
    }

    #[test]
    fn child_order_matters() {
        let left = PlaneTree::node(vec![cherry(), PlaneTree::leaf()]);
        let right = PlaneTree::node(vec![PlaneTree::leaf(), cherry()]);
        assert_ne!(left, right);
        assert_ne!(left.encode(), right.encode());
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(PlaneTree::leaf().boundary_leaves(), vec![0]);
        assert_eq!(cherry().boundary_leaves(), vec![1, 2]);
        // (r+1) + k(p-1) = 3 + 3 leaves for the three-star (2,2) diagram.
        assert_eq!(three_star_coral().boundary_leaves(), vec![1, 3, 5, 6, 8, 9]);
        let arc = PlaneTree::node(vec![PlaneTree::leaf()]);
        assert_eq!(arc.boundary_leaves(), vec![1]);
    }

    #[test]
    fn dot_examples() {
        fn node_lines(dot: &str) -> usize {
            dot.lines()
                .map(str::trim)
                .filter(|l| {
                    l.starts_with('n') && l[1..].trim_end_matches(';').parse::<usize>().is_ok()
                })
                .count()
        }
        let leaf = PlaneTree::leaf().to_dot();
        assert_eq!(node_lines(&leaf), 1);
        assert!(!leaf.contains("--"));
        let dot = cherry().to_dot();
        assert_eq!(node_lines(&dot), 3);
        assert!(dot.contains("n0 -- n1;") && dot.contains("n0 -- n2;"));
        assert_eq!(dot.matches(" -- ").count(), 2);
        let t = three_star_coral();
        assert_eq!(node_lines(&t.to_dot()), t.vertex_count());
    }

    #[test]
    fn parents_and_depths() {
        let code = three_star_coral().encode();
        assert_eq!(
            parents(code.as_slice()),
            vec![
                None,
                Some(0),
                Some(0),
                Some(2),
                Some(2),
                Some(4),
                Some(4),
                Some(0),
                Some(7),
                Some(7)
            ]
        );
        assert_eq!(depths(code.as_slice()), vec![0, 1, 1, 2, 2, 3, 3, 1, 2, 2]);
    }

    #[test]
    fn pary_examples() {
        assert_eq!(enumerate_pary_trees(2, 0), vec![PlaneTree::leaf()]);
        let two = enumerate_pary_trees(2, 2);
        assert_eq!(two.len(), 2);
        let codes: Vec<String> = two.iter().map(|t| t.encode().to_string()).collect();
        assert_eq!(codes, ["2,0,2,0,0", "2,2,0,0,0"]);
        assert_eq!(enumerate_pary_trees(3, 3).len(), 12);
        assert_eq!(enumerate_pary_trees(2, 3).len(), 5);
    }

    /// Brute force over all sequences in {0, p}^n, kept when they are valid
    /// codes.
    fn pary_by_brute_force(p: u32, internal: u32) -> BTreeSet<Vec<u32>> {
        let n = (p * internal + 1) as usize;
        (0u64..1 << n)
            .map(|mask| {
                (0..n)
                    .map(|i| if mask >> i & 1 == 1 { p } else { 0 })
                    .collect::<Vec<u32>>()
            })
            .filter(|c| validate(c).is_ok())
            .collect()
    }

    #[test]
    fn pary_counts_and_brute_force() {
        for p in 1..=4u32 {
            for j in 0..=6u32 {
                let trees = enumerate_pary_trees(p, j);
                assert_eq!(trees.len() as u64, p_catalan::<u64>(p, j), "p={p} j={j}");
                let codes: Vec<Vec<u32>> = trees.iter().map(|t| t.encode().into_vec()).collect();
                assert!(codes.windows(2).all(|w| w[0] < w[1]));
                for (t, c) in trees.iter().zip(&codes) {
                    assert!(validate(c).is_ok());
                    assert_eq!(t.boundary_leaves().len() as u32, j * (p - 1) + 1);
                }
                if p * j < 20 {
                    assert_eq!(
                        codes.into_iter().collect::<BTreeSet<_>>(),
                        pary_by_brute_force(p, j)
                    );
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_tree() -> impl Strategy<Value = PlaneTree> {
            Just(PlaneTree::leaf()).prop_recursive(6, 64, 5, |inner| {
                prop::collection::vec(inner, 1..5).prop_map(PlaneTree::node)
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(2000))]

            #[test]
            fn round_trip(t in arb_tree()) {
                let code = t.encode();
                prop_assert!(validate(code.as_slice()).is_ok());
                prop_assert_eq!(code.vertex_count(), t.vertex_count());
                prop_assert_eq!(&PlaneTree::decode(&code), &t);
                prop_assert_eq!(&code.to_string().parse::<CanonicalCode>().unwrap(), &code);
                prop_assert_eq!(t.boundary_leaves().len(), t.leaf_count());
            }
        }
    }
}
