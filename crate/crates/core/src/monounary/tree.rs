use super::{Component, MonoAlg};
use crate::error::{Error, Result};

/// A connected monounary algebra whose core is a single fixed point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeAlg {
    alg: MonoAlg,
    root: usize,
}

impl TreeAlg {
    pub fn new(alg: MonoAlg) -> Result<Self> {
        let on_cycle = alg.cycle_elements();
        let mut fixed = (0..alg.len()).filter(|&x| on_cycle[x]);
        let root = fixed.next();
        match (root, fixed.next()) {
            (Some(r), None) if alg.image(r) == r => Ok(TreeAlg { alg, root: r }),
            _ => Err(Error::InvalidAlgebra(
                "a tree-algebra needs exactly one cycle element, a fixed point".into(),
            )),
        }
    }

    /// The one-element tree.
    pub fn point() -> Self {
        TreeAlg {
            alg: MonoAlg::from_map_unchecked(vec![0]),
            root: 0,
        }
    }

    pub fn algebra(&self) -> &MonoAlg {
        &self.alg
    }

    pub fn into_algebra(self) -> MonoAlg {
        self.alg
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.alg.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Children of the root, in increasing label order.
    pub fn root_children(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| x != self.root && self.alg.image(x) == self.root)
            .collect()
    }
}

/// Elements of the in-tree hanging below `root`, ignoring preimages that
/// lie on a cycle.
fn in_tree(alg: &MonoAlg, pre: &[Vec<usize>], on_cycle: &[bool], root: usize) -> Vec<usize> {
    let mut out = vec![root];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        out.extend(pre[x].iter().copied().filter(|&y| !on_cycle[y]));
        i += 1;
    }
    debug_assert!(out[1..].iter().all(|&y| alg.image(y) != y));
    out.sort_unstable();
    out
}

/// The tree on `elements` with `root` turned into a fixed point. Labels
/// follow the increasing order of `elements`.
fn induced_tree(alg: &MonoAlg, elements: &[usize], root: usize) -> TreeAlg {
    let pos = |x: usize| elements.binary_search(&x).expect("in-tree is closed");
    let map: Vec<usize> = elements
        .iter()
        .map(|&x| if x == root { pos(root) } else { pos(alg.image(x)) })
        .collect();
    TreeAlg {
        alg: MonoAlg::from_map_unchecked(map),
        root: pos(root),
    }
}

/// The tree-algebras rooted at the core vertices of `c`, in `f` order
/// starting at the smallest core element.
pub fn tree_decomposition(c: &Component<'_>) -> Vec<TreeAlg> {
    let alg = c.parent();
    let pre = alg.preimages();
    let on_cycle = alg.cycle_elements();
    c.core()
        .cycle
        .iter()
        .map(|&r| induced_tree(alg, &in_tree(alg, &pre, &on_cycle, r), r))
        .collect()
}

/// One tree per child of the root: the child's subtree with the child
/// made into a fixed point. The point maps to the empty forest.
pub fn associated_forest(t: &TreeAlg) -> Vec<TreeAlg> {
    let alg = &t.alg;
    let pre = alg.preimages();
    let mut on_cycle = vec![false; alg.len()];
    on_cycle[t.root] = true;
    t.root_children()
        .into_iter()
        .map(|c| induced_tree(alg, &in_tree(alg, &pre, &on_cycle, c), c))
        .collect()
}

/// Joins the roots of `forest` under a fresh looped root (label 0).
pub fn tree_of_forest(forest: &[TreeAlg]) -> TreeAlg {
    let mut map = vec![0];
    for t in forest {
        let shift = map.len();
        map.extend(
            (0..t.len()).map(|x| if x == t.root { 0 } else { t.alg.image(x) + shift }),
        );
    }
    TreeAlg {
        alg: MonoAlg::from_map_unchecked(map),
        root: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monounary::is_isomorphic;

    #[test]
    fn tree_validation() {
        assert!(TreeAlg::new(MonoAlg::cycle(1).unwrap()).is_ok());
        assert!(TreeAlg::new(MonoAlg::mpl(1, 3).unwrap()).is_ok());
        assert!(TreeAlg::new(MonoAlg::cycle(2).unwrap()).is_err());
        assert!(TreeAlg::new(MonoAlg::new(vec![0, 1]).unwrap()).is_err());
    }

    #[test]
    fn bare_cycle_decomposes_into_points() {
        let c3 = MonoAlg::cycle(3).unwrap();
        let trees = tree_decomposition(&c3.components()[0]);
        assert_eq!(trees.len(), 3);
        assert!(trees.iter().all(|t| t.len() == 1));
    }

    #[test]
    fn mpl_decomposition() {
        let m = MonoAlg::mpl(2, 2).unwrap();
        let sizes: Vec<_> = tree_decomposition(&m.components()[0])
            .iter()
            .map(TreeAlg::len)
            .collect();
        assert_eq!(sizes, vec![3, 1]);
        let t0 = &tree_decomposition(&m.components()[0])[0];
        assert!(is_isomorphic(t0.algebra(), &MonoAlg::mpl(1, 2).unwrap()));
    }

    #[test]
    fn forest_of_point_and_star() {
        assert!(associated_forest(&TreeAlg::point()).is_empty());
        let star = TreeAlg::new(MonoAlg::new(vec![0, 0, 0, 0]).unwrap()).unwrap();
        let f = associated_forest(&star);
        assert_eq!(f.len(), 3);
        assert!(f.iter().all(|t| t.len() == 1));
        assert_eq!(tree_of_forest(&[]), TreeAlg::point());
        assert!(is_isomorphic(tree_of_forest(&f).algebra(), star.algebra()));
    }
}
