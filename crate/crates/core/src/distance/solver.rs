use std::collections::HashMap;
use std::sync::Mutex;

use super::assignment::{assignment_min, assignment_min_brute, CostMatrix, BRUTE_FORCE_LIMIT};
use super::Distance;
use crate::monounary::{Component, MonoAlg, TreeAlg};

type ShapeId = u32;

/// Rooted tree shapes, hash-consed: two in-trees get the same id iff they
/// are isomorphic.
#[derive(Default)]
struct Shapes {
    children: Vec<Vec<ShapeId>>,
    leaves: Vec<u64>,
    index: HashMap<Vec<ShapeId>, ShapeId>,
}

impl Shapes {
    fn intern(&mut self, mut children: Vec<ShapeId>) -> ShapeId {
        children.sort_unstable();
        if let Some(&id) = self.index.get(&children) {
            return id;
        }
        let id = self.children.len() as ShapeId;
        let leaves = if children.is_empty() {
            1
        } else {
            children.iter().map(|&c| self.leaves[c as usize]).sum()
        };
        self.children.push(children.clone());
        self.leaves.push(leaves);
        self.index.insert(children, id);
        id
    }

    /// Shape of the in-tree below every element, ignoring preimages that
    /// lie on a cycle.
    fn intern_algebra(&mut self, alg: &MonoAlg, on_cycle: &[bool]) -> Vec<ShapeId> {
        let n = alg.len();
        let mut kids: Vec<Vec<ShapeId>> = vec![Vec::new(); n];
        let mut pending = vec![0usize; n];
        for x in 0..n {
            if !on_cycle[x] {
                pending[alg.image(x)] += 1;
            }
        }
        let mut shape = vec![0; n];
        let mut stack: Vec<usize> = (0..n).filter(|&x| pending[x] == 0).collect();
        while let Some(x) = stack.pop() {
            shape[x] = self.intern(std::mem::take(&mut kids[x]));
            if on_cycle[x] {
                continue;
            }
            let p = alg.image(x);
            kids[p].push(shape[x]);
            pending[p] -= 1;
            if pending[p] == 0 {
                stack.push(p);
            }
        }
        shape
    }

    fn intern_tree(&mut self, t: &TreeAlg) -> ShapeId {
        let mut on_cycle = vec![false; t.len()];
        on_cycle[t.root()] = true;
        self.intern_algebra(t.algebra(), &on_cycle)[t.root()]
    }
}

/// A connected component reduced to what the distance needs.
struct ComponentShape {
    /// In-tree shapes along the core, in `f` order.
    trees: Vec<ShapeId>,
    mgen: u64,
}

#[derive(Default)]
struct State {
    shapes: Shapes,
    memo: HashMap<(ShapeId, ShapeId), u64>,
}

/// Generator-distance calculator with a shared memo of tree-pair
/// distances. Safe to share between threads.
#[derive(Default)]
pub struct DistanceSolver {
    state: Mutex<State>,
    cross_check: bool,
}

impl DistanceSolver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Re-solves every assignment of size at most 8 by enumerating
    /// permutations and panics on disagreement.
    pub fn with_cross_check(mut self, on: bool) -> Self {
        self.cross_check = on;
        self
    }

    /// Number of memoized tree pairs.
    pub fn memo_len(&self) -> usize {
        self.state.lock().unwrap().memo.len()
    }

    pub fn distance(&self, a: &MonoAlg, b: &MonoAlg) -> Distance {
        Distance::Finite(self.assignment_matrix(a, b).map_or(0, |m| self.solve(&m)))
    }

    /// The matrix the component matching is solved on: rows are the
    /// components of the algebra with fewer components, padded with
    /// phantom rows holding the generator counts of the columns.
    /// `None` when both sides are empty of components (never for valid
    /// algebras).
    pub fn assignment_matrix(&self, a: &MonoAlg, b: &MonoAlg) -> Option<CostMatrix> {
        let mut ca = self.component_shapes(a);
        let mut cb = self.component_shapes(b);
        if ca.len() > cb.len() {
            std::mem::swap(&mut ca, &mut cb);
        }
        if cb.is_empty() {
            return None;
        }
        // Fill the matrix eagerly; recursion may re-enter the solver.
        let mut rows = Vec::with_capacity(cb.len());
        for i in 0..cb.len() {
            let row: Vec<u64> = cb
                .iter()
                .map(|bj| match ca.get(i) {
                    Some(ai) => self.component_pair(ai, bj),
                    None => bj.mgen,
                })
                .collect();
            rows.push(row);
        }
        Some(CostMatrix::from_fn(cb.len(), |i, j| rows[i][j]))
    }

    pub fn connected_distance(&self, a: &Component<'_>, b: &Component<'_>) -> Distance {
        let sa = self.component_shapes(&a.to_algebra()).pop().expect("one component");
        let sb = self.component_shapes(&b.to_algebra()).pop().expect("one component");
        Distance::Finite(self.component_pair(&sa, &sb))
    }

    pub fn tree_distance(&self, t1: &TreeAlg, t2: &TreeAlg) -> Distance {
        let (s1, s2) = {
            let mut st = self.state.lock().unwrap();
            (st.shapes.intern_tree(t1), st.shapes.intern_tree(t2))
        };
        Distance::Finite(self.tree_pair(s1, s2))
    }

    pub fn forest_distance(&self, f1: &[TreeAlg], f2: &[TreeAlg]) -> Distance {
        let (s1, s2) = self.intern_forests(f1, f2);
        Distance::Finite(self.forest_pair(&s1, &s2))
    }

    /// The padded matrix used for two forests: rows are the trees of the
    /// shorter forest plus phantom rows.
    pub fn forest_matrix(&self, f1: &[TreeAlg], f2: &[TreeAlg]) -> CostMatrix {
        let (s1, s2) = self.intern_forests(f1, f2);
        self.forest_cost(&s1, &s2)
    }

    fn intern_forests(&self, f1: &[TreeAlg], f2: &[TreeAlg]) -> (Vec<ShapeId>, Vec<ShapeId>) {
        let mut st = self.state.lock().unwrap();
        let s1 = f1.iter().map(|t| st.shapes.intern_tree(t)).collect();
        let s2 = f2.iter().map(|t| st.shapes.intern_tree(t)).collect();
        (s1, s2)
    }

    fn component_shapes(&self, alg: &MonoAlg) -> Vec<ComponentShape> {
        let on_cycle = alg.cycle_elements();
        let shape = self.state.lock().unwrap().shapes.intern_algebra(alg, &on_cycle);
        alg.components()
            .iter()
            .map(|c| ComponentShape {
                trees: c.core().cycle.iter().map(|&r| shape[r]).collect(),
                mgen: c.mgen() as u64,
            })
            .collect()
    }

    fn component_pair(&self, a: &ComponentShape, b: &ComponentShape) -> u64 {
        let n = a.trees.len();
        if n != b.trees.len() {
            return a.mgen + b.mgen;
        }
        (0..n)
            .map(|k| {
                (0..n)
                    .map(|i| self.tree_pair(a.trees[i], b.trees[(i + k) % n]))
                    .sum::<u64>()
            })
            .min()
            .unwrap_or(0)
    }

    fn tree_pair(&self, s1: ShapeId, s2: ShapeId) -> u64 {
        if s1 == s2 {
            return 0;
        }
        let key = (s1.min(s2), s1.max(s2));
        let (c1, c2) = {
            let st = self.state.lock().unwrap();
            if let Some(&d) = st.memo.get(&key) {
                return d;
            }
            (
                st.shapes.children[s1 as usize].clone(),
                st.shapes.children[s2 as usize].clone(),
            )
        };
        let d = self.forest_pair(&c1, &c2);
        self.state.lock().unwrap().memo.insert(key, d);
        d
    }

    fn forest_pair(&self, f1: &[ShapeId], f2: &[ShapeId]) -> u64 {
        let m = self.forest_cost(f1, f2);
        self.solve(&m)
    }

    fn forest_cost(&self, f1: &[ShapeId], f2: &[ShapeId]) -> CostMatrix {
        let (short, long) = if f1.len() <= f2.len() { (f1, f2) } else { (f2, f1) };
        let phantom: Vec<u64> = {
            let st = self.state.lock().unwrap();
            long.iter().map(|&s| st.shapes.leaves[s as usize]).collect()
        };
        let mut entries = Vec::with_capacity(long.len() * long.len());
        for i in 0..long.len() {
            for (j, &t) in long.iter().enumerate() {
                entries.push(match short.get(i) {
                    Some(&s) => self.tree_pair(s, t),
                    None => phantom[j],
                });
            }
        }
        CostMatrix::from_fn(long.len(), |i, j| entries[i * long.len() + j])
    }

    fn solve(&self, m: &CostMatrix) -> u64 {
        let fast = assignment_min(m);
        if self.cross_check && m.size() <= BRUTE_FORCE_LIMIT {
            let slow = assignment_min_brute(m).expect("within brute-force limit");
            assert_eq!(fast.value, slow.value, "assignment mismatch on {m:?}");
        }
        fast.value
    }
}

/// Generator distance between two finite monounary algebras.
pub fn distance(a: &MonoAlg, b: &MonoAlg) -> Distance {
    DistanceSolver::new().distance(a, b)
}

pub fn connected_distance(a: &Component<'_>, b: &Component<'_>) -> Distance {
    DistanceSolver::new().connected_distance(a, b)
}

pub fn tree_distance(t1: &TreeAlg, t2: &TreeAlg) -> Distance {
    DistanceSolver::new().tree_distance(t1, t2)
}

pub fn forest_distance(f1: &[TreeAlg], f2: &[TreeAlg]) -> Distance {
    DistanceSolver::new().forest_distance(f1, f2)
}
