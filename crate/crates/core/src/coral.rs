//! (p,r)-coral diagrams.
//!
//! A coral diagram grows from a base vertex with `r + 1` upward edges by
//! placing p-stars on terminal vertices, never on the leftmost base edge. The
//! reserved edge is stored literally as the first (leaf) child of the root, so
//! every diagram is an ordinary [`PlaneTree`] with these invariants:
//!
//! * the root has `r + 1` children and the first one is a leaf;
//! * every other vertex has 0 or `p` children;
//! * the number of non-root vertices with `p` children is the star count `k`.
//!
//! Two generators produce the diagrams independently: [`enumerate_coral_tiered`]
//! places stars tier by tier and [`enumerate_coral_tuple`] grafts an r-tuple
//! of full p-ary trees onto the base. Both return diagrams sorted by code.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::numbers::{compositions, weak_compositions, Composition, WeakComposition};
use crate::trees::{concat_products, pary_code_table, CanonicalCode, PlaneTree};
use crate::ExactNat;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoralDiagram {
    p: u32,
    r: u32,
    k: u32,
    tree: PlaneTree,
    code: CanonicalCode,
}

impl CoralDiagram {
    /// Checks the coral invariants and derives the star count.
    pub fn new(p: u32, r: u32, tree: PlaneTree) -> Result<Self> {
        let code = tree.encode();
        let k = check_coral_code(p, r, code.as_slice())?;
        Ok(Self {
            p,
            r,
            k,
            tree,
            code,
        })
    }

    pub fn from_code(p: u32, r: u32, code: CanonicalCode) -> Result<Self> {
        let k = check_coral_code(p, r, code.as_slice())?;
        Ok(Self {
            p,
            r,
            k,
            tree: code.to_tree(),
            code,
        })
    }

    /// The diagram with no stars.
    pub fn bare(p: u32, r: u32) -> Self {
        Self::from_code(p, r, base_code(r)).expect("bare base is a coral diagram")
    }

    fn from_generated(p: u32, r: u32, k: u32, code: Vec<u32>) -> Self {
        let code = CanonicalCode::from_trusted(code);
        debug_assert_eq!(check_coral_code(p, r, code.as_slice()), Ok(k));
        Self {
            p,
            r,
            k,
            tree: code.to_tree(),
            code,
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Number of p-stars.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn tree(&self) -> &PlaneTree {
        &self.tree
    }

    pub fn code(&self) -> &CanonicalCode {
        &self.code
    }

    /// `r + 1 + k(p - 1)` terminal vertices.
    pub fn boundary_len(&self) -> usize {
        self.tree.boundary_leaves().len()
    }
}

fn base_code(r: u32) -> CanonicalCode {
    let mut code = vec![r + 1];
    code.extend(std::iter::repeat_n(0, r as usize + 1));
    CanonicalCode::from_trusted(code)
}

/// Returns the star count if `code` satisfies the (p,r)-coral invariants.
pub fn check_coral_code(p: u32, r: u32, code: &[u32]) -> Result<u32> {
    let invalid = |reason| Error::InvalidDiagram { p, r, reason };
    if p == 0 || r == 0 {
        return Err(invalid("p and r must be positive"));
    }
    crate::trees::validate(code)?;
    if code[0] != r + 1 {
        return Err(invalid("root must have r + 1 children"));
    }
    if code[1] != 0 {
        return Err(invalid("leftmost root child must be a leaf"));
    }
    let mut stars = 0;
    for &c in &code[1..] {
        if c == p {
            stars += 1;
        } else if c != 0 {
            return Err(invalid("non-root vertices need 0 or p children"));
        }
    }
    Ok(stars)
}

/// Diagrams grouped by the tier sizes that produced them.
///
/// For each strong composition `(l1, ..., lj)` of `k`, in lexicographic
/// order, `l1` stars go on a subset of the `r` eligible base edges and each
/// later tier puts `li` stars on a subset of the `p * l(i-1)` tops of the
/// previous tier's stars. Tops skipped in their tier are never used again,
/// so every diagram is produced exactly once. Codes within a group are
/// sorted.
pub fn coral_tiers(p: u32, r: u32, k: u32) -> Vec<(Composition, Vec<CanonicalCode>)> {
    assert!(p >= 1 && r >= 1, "p and r must be positive");
    compositions(k)
        .map(|lambda| {
            let mut arena = Arena::base(r);
            let frontier: Vec<usize> = (2..=r as usize + 1).collect();
            let mut codes = Vec::new();
            arena.grow(p, &frontier, lambda.parts(), &mut codes);
            codes.sort_unstable();
            (
                lambda,
                codes.into_iter().map(CanonicalCode::from_trusted).collect(),
            )
        })
        .collect()
}

/// All (p,r)-coral diagrams with `k` stars, built tier by tier, sorted by code.
pub fn enumerate_coral_tiered(p: u32, r: u32, k: u32) -> Vec<CoralDiagram> {
    let mut codes: Vec<CanonicalCode> = coral_tiers(p, r, k)
        .into_iter()
        .flat_map(|(_, codes)| codes)
        .collect();
    codes.sort_unstable();
    codes
        .into_iter()
        .map(|c| CoralDiagram::from_generated(p, r, k, c.into_vec()))
        .collect()
}

struct Arena {
    children: Vec<Vec<usize>>,
}

impl Arena {
    fn base(r: u32) -> Self {
        let n = r as usize + 2;
        let mut children = vec![Vec::new(); n];
        children[0] = (1..n).collect();
        Self { children }
    }

    fn grow(&mut self, p: u32, frontier: &[usize], tiers: &[u32], out: &mut Vec<Vec<u32>>) {
        let Some((&size, rest)) = tiers.split_first() else {
            out.push(self.preorder());
            return;
        };
        for chosen in frontier.iter().copied().combinations(size as usize) {
            let mark = self.children.len();
            let mut next = Vec::with_capacity(chosen.len() * p as usize);
            for &site in &chosen {
                let first = self.children.len();
                self.children.extend((0..p).map(|_| Vec::new()));
                self.children[site] = (first..first + p as usize).collect();
                next.extend(first..first + p as usize);
            }
            self.grow(p, &next, rest, out);
            for &site in &chosen {
                self.children[site].clear();
            }
            self.children.truncate(mark);
        }
    }

    fn preorder(&self) -> Vec<u32> {
        let mut code = Vec::with_capacity(self.children.len());
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            code.push(self.children[v].len() as u32);
            stack.extend(self.children[v].iter().rev());
        }
        code
    }
}

/// Calls `emit` with the code of every (p,r)-coral diagram with `k` stars.
///
/// For each length-r weak composition `(i1, ..., ir)` of `k`, a full p-ary
/// tree with `ij` internal vertices is grafted on the j-th eligible base
/// edge. Codes arrive in no particular order and are not stored.
pub fn for_each_coral_code(p: u32, r: u32, k: u32, mut emit: impl FnMut(&[u32])) {
    assert!(p >= 1 && r >= 1, "p and r must be positive");
    let table = pary_code_table(p, k);
    let mut buf = vec![r + 1, 0];
    for split in weak_compositions(k, r) {
        concat_products(&table, split.parts(), &mut buf, &mut emit);
    }
}

/// All (p,r)-coral diagrams with `k` stars, built from r-tuples of p-ary
/// trees, sorted by code.
pub fn enumerate_coral_tuple(p: u32, r: u32, k: u32) -> Vec<CoralDiagram> {
    let mut codes = Vec::new();
    for_each_coral_code(p, r, k, |c| codes.push(c.to_vec()));
    codes.sort_unstable();
    codes
        .into_iter()
        .map(|c| CoralDiagram::from_generated(p, r, k, c))
        .collect()
}

/// Number of (p,r)-coral diagrams with `k` stars, counted by walking the
/// tuple generator.
pub fn count_coral(p: u32, r: u32, k: u32) -> ExactNat {
    let mut n: u64 = 0;
    for_each_coral_code(p, r, k, |_| n += 1);
    ExactNat::from(n)
}

/// Maps a (p,p)-coral with `k` stars to a (p,1)-coral with `k + 1` stars.
///
/// The leftmost base edge is subdivided and the new vertex becomes the root:
/// it keeps the old reserved leaf on its left and carries the old base, now
/// a p-star, on its right.
pub fn bijection_pp_to_p1(d: &CoralDiagram) -> Result<CoralDiagram> {
    if d.r != d.p {
        return Err(Error::ParameterMismatch(format!(
            "expected a (p,p)-coral diagram, got ({},{})",
            d.p, d.r
        )));
    }
    let old_base = PlaneTree::node(d.tree.children()[1..].to_vec());
    let tree = PlaneTree::node(vec![PlaneTree::leaf(), old_base]);
    CoralDiagram::new(d.p, 1, tree)
}

/// Inverse of [`bijection_pp_to_p1`]: contracts the root edge of a (p,1)-coral.
pub fn bijection_p1_to_pp(d: &CoralDiagram) -> Result<CoralDiagram> {
    if d.r != 1 || d.k == 0 {
        return Err(Error::ParameterMismatch(format!(
            "expected a (p,1)-coral diagram with at least one star, got ({},{}) with k = {}",
            d.p, d.r, d.k
        )));
    }
    let mut children = vec![PlaneTree::leaf()];
    children.extend(d.tree.children()[1].children().iter().cloned());
    CoralDiagram::new(d.p, d.p, PlaneTree::node(children))
}

/// Reads a (1,r)-coral as the lengths of the r chains above the eligible
/// base edges.
pub fn coral_to_weak_composition(d: &CoralDiagram) -> Result<WeakComposition> {
    if d.p != 1 {
        return Err(Error::ParameterMismatch(format!(
            "expected a (1,r)-coral diagram, got ({},{})",
            d.p, d.r
        )));
    }
    let parts = d.tree.children()[1..]
        .iter()
        .map(|mut t| {
            let mut len = 0;
            while let [only] = t.children() {
                len += 1;
                t = only;
            }
            len
        })
        .collect();
    Ok(WeakComposition::new(parts).expect("r >= 1"))
}

/// Inverse of [`coral_to_weak_composition`].
pub fn weak_composition_to_coral(w: &WeakComposition) -> CoralDiagram {
    let chain = |len: u32| (0..len).fold(PlaneTree::leaf(), |t, _| PlaneTree::node(vec![t]));
    let mut children = vec![PlaneTree::leaf()];
    children.extend(w.parts().iter().map(|&len| chain(len)));
    CoralDiagram::new(1, w.len() as u32, PlaneTree::node(children))
        .expect("chains form a (1,r)-coral")
}
