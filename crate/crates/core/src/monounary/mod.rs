//! Finite monounary algebras: a set `{0, .., n-1}` with one total unary
//! operation, i.e. a functional graph.
//!
//! Every finite monounary algebra splits into connected components, and
//! each component consists of a single cycle (its core) with in-trees
//! hanging off the cycle vertices. Most of what this crate does reduces
//! to that picture.

mod canon;
mod parse;
mod tree;

pub use canon::{canonical_code, canonical_labeling, find_isomorphism, is_isomorphic, CanonicalCode};
pub use parse::{parse_mua, to_mua};
pub use tree::{associated_forest, tree_decomposition, tree_of_forest, TreeAlg};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A finite monounary algebra on `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonoAlg {
    map: Vec<usize>,
}

impl fmt::Debug for MonoAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonoAlg{:?}", self.map)
    }
}

impl MonoAlg {
    /// Builds an algebra from its operation table; `map[i]` is `f(i)`.
    pub fn new(map: Vec<usize>) -> Result<Self> {
        if map.is_empty() {
            return Err(Error::InvalidAlgebra("universe must be non-empty".into()));
        }
        let n = map.len();
        if let Some((i, &y)) = map.iter().enumerate().find(|(_, &y)| y >= n) {
            return Err(Error::InvalidAlgebra(format!(
                "f({i}) = {y} is outside the universe of size {n}"
            )));
        }
        Ok(MonoAlg { map })
    }

    pub(crate) fn from_map_unchecked(map: Vec<usize>) -> Self {
        debug_assert!(!map.is_empty() && map.iter().all(|&y| y < map.len()));
        MonoAlg { map }
    }

    /// The pure cycle of length `n`: `i -> i+1 mod n`.
    pub fn cycle(n: usize) -> Result<Self> {
        Self::mpl(n, 0)
    }

    /// A tail of length `l` attached to a cycle of length `n`.
    ///
    /// Elements `0..n` form the cycle, `n..n+l` the tail; `n` is the free
    /// end of the tail when `l > 0` and the tail runs into element `0`.
    pub fn mpl(n: usize, l: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidAlgebra("cycle length must be at least 1".into()));
        }
        let mut map: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        for i in 0..l {
            map.push(if i + 1 < l { n + i + 1 } else { 0 });
        }
        Ok(MonoAlg { map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn image(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    pub fn preimages(&self) -> Vec<Vec<usize>> {
        let mut pre = vec![Vec::new(); self.len()];
        for (x, &y) in self.map.iter().enumerate() {
            pre[y].push(x);
        }
        pre
    }

    /// Marks the elements that lie on a cycle, i.e. `f^k(x) = x` for some
    /// `k >= 1`.
    pub fn cycle_elements(&self) -> Vec<bool> {
        let n = self.len();
        let mut indeg = vec![0usize; n];
        for &y in &self.map {
            indeg[y] += 1;
        }
        let mut on_cycle = vec![true; n];
        let mut stack: Vec<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
        while let Some(x) = stack.pop() {
            on_cycle[x] = false;
            let y = self.map[x];
            indeg[y] -= 1;
            if indeg[y] == 0 {
                stack.push(y);
            }
        }
        on_cycle
    }

    /// Weakly connected components ordered by their smallest element.
    pub fn components(&self) -> Vec<Component<'_>> {
        let n = self.len();
        let mut label = vec![usize::MAX; n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let pre = self.preimages();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut members = Vec::new();
            let mut stack = vec![start];
            label[start] = id;
            while let Some(x) = stack.pop() {
                members.push(x);
                for &y in pre[x].iter().chain(std::iter::once(&self.map[x])) {
                    if label[y] == usize::MAX {
                        label[y] = id;
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        comps
            .into_iter()
            .map(|elements| Component {
                parent: self,
                elements,
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Elements without an `f`-preimage.
    pub fn independent_elements(&self) -> Vec<usize> {
        let mut has_pre = vec![false; self.len()];
        for &y in &self.map {
            has_pre[y] = true;
        }
        (0..self.len()).filter(|&x| !has_pre[x]).collect()
    }

    /// Minimum number of generators: per component, the number of
    /// independent elements, or 1 for a bare cycle.
    pub fn mgen(&self) -> usize {
        self.components().iter().map(Component::mgen).sum()
    }

    /// The subuniverse generated by `xs` (forward orbit closure).
    ///
    /// # Panics
    /// If an element of `xs` is outside the universe.
    pub fn generate(&self, xs: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        let mut seen = vec![false; self.len()];
        let mut out = BTreeSet::new();
        for x in xs {
            assert!(x < self.len(), "element {x} outside universe of size {}", self.len());
            let mut y = x;
            while !seen[y] {
                seen[y] = true;
                out.insert(y);
                y = self.map[y];
            }
        }
        out
    }

    /// `self ⊔ other`; the elements of `other` are shifted by `self.len()`.
    pub fn disjoint_union(&self, other: &MonoAlg) -> MonoAlg {
        let shift = self.len();
        let mut map = self.map.clone();
        map.extend(other.map.iter().map(|&y| y + shift));
        MonoAlg { map }
    }

    /// Attaches a fresh tail `x_0 -> x_1 -> .. -> x_{m-1} -> at`.
    ///
    /// The new elements get labels `n..n+m` in tail order, so `n` is the
    /// free end when `m > 0`.
    pub fn attach_tail(&self, at: usize, m: usize) -> Result<MonoAlg> {
        let n = self.len();
        if at >= n {
            return Err(Error::InvalidAlgebra(format!(
                "tail anchor {at} is outside the universe of size {n}"
            )));
        }
        let mut map = self.map.clone();
        for i in 0..m {
            map.push(if i + 1 < m { n + i + 1 } else { at });
        }
        Ok(MonoAlg { map })
    }

    /// The subalgebra on a closed subset, relabelled in increasing order
    /// of the original labels.
    pub fn restrict(&self, elements: &[usize]) -> Result<MonoAlg> {
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() {
            return Err(Error::InvalidAlgebra("subalgebra must be non-empty".into()));
        }
        let mut new_label = vec![usize::MAX; self.len()];
        for (i, &x) in sorted.iter().enumerate() {
            if x >= self.len() {
                return Err(Error::InvalidAlgebra(format!("element {x} outside universe")));
            }
            new_label[x] = i;
        }
        let mut map = Vec::with_capacity(sorted.len());
        for &x in &sorted {
            let y = new_label[self.map[x]];
            if y == usize::MAX {
                return Err(Error::InvalidAlgebra(format!(
                    "subset is not closed: f({x}) = {} is missing",
                    self.map[x]
                )));
            }
            map.push(y);
        }
        Ok(MonoAlg { map })
    }

    /// Relabels by a permutation: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<MonoAlg> {
        let n = self.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::contract("relabelling is not a permutation of the universe"));
        }
        let mut map = vec![0; n];
        for x in 0..n {
            map[perm[x]] = perm[self.map[x]];
        }
        Ok(MonoAlg { map })
    }
}

/// One connected component of a [`MonoAlg`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component<'a> {
    parent: &'a MonoAlg,
    elements: Vec<usize>,
}

impl<'a> Component<'a> {
    pub fn parent(&self) -> &'a MonoAlg {
        self.parent
    }

    /// Sorted labels of the component inside its parent.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The component as a standalone algebra (labels in increasing order).
    pub fn to_algebra(&self) -> MonoAlg {
        self.parent
            .restrict(&self.elements)
            .expect("components are closed under f")
    }

    pub fn core(&self) -> CoreInfo {
        core_of(self)
    }

    pub fn mgen(&self) -> usize {
        let mut has_pre = vec![false; self.parent.len()];
        for &x in &self.elements {
            has_pre[self.parent.image(x)] = true;
        }
        let ind = self.elements.iter().filter(|&&x| !has_pre[x]).count();
        ind.max(1)
    }
}

/// The unique cycle of a finite connected component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoreInfo {
    /// Cycle elements in `f` order, starting from the smallest one.
    pub cycle: Vec<usize>,
}

impl CoreInfo {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }
}

pub fn core_of(c: &Component<'_>) -> CoreInfo {
    let f = c.parent;
    // After |c| steps any walk is on the cycle.
    let mut x = c.elements[0];
    for _ in 0..c.len() {
        x = f.image(x);
    }
    let mut cycle = vec![x];
    let mut y = f.image(x);
    while y != x {
        cycle.push(y);
        y = f.image(y);
    }
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap_or(0);
    cycle.rotate_left(start);
    CoreInfo { cycle }
}
