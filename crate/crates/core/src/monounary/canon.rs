//! Canonical forms for finite monounary algebras.
//!
//! Each in-tree hanging off a cycle vertex gets an AHU-style code
//! (`(` + sorted child codes + `)`), a component is encoded by the least
//! rotation of its cycle's tree codes wrapped in `[` `]`, and an algebra by
//! the sorted concatenation of its component codes.
//!
//! Codes are never built by string concatenation bottom-up (that is
//! quadratic on long chains). Shapes are first ranked level by level; the
//! ranking is an order-preserving image of a fixed total order on shapes
//! (height, then child ranks lexicographically), so sorting children and
//! picking rotations by rank is canonical across algebras.

use std::fmt;

use super::MonoAlg;

/// Isomorphism invariant of a [`MonoAlg`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    components: usize,
    bytes: Vec<u8>,
}

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Number of connected components encoded.
    pub fn components(&self) -> usize {
        self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components == 1
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // only ASCII brackets are ever emitted
        f.write_str(std::str::from_utf8(&self.bytes).unwrap_or("?"))
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({}; {})", self.components, self)
    }
}

pub fn canonical_code(a: &MonoAlg) -> CanonicalCode {
    Canonizer::new(a).finish().0
}

/// Canonical traversal order of the elements. For isomorphic algebras
/// `a`, `b`, mapping `canonical_labeling(a)[k]` to
/// `canonical_labeling(b)[k]` is an isomorphism.
pub fn canonical_labeling(a: &MonoAlg) -> Vec<usize> {
    Canonizer::new(a).finish().1
}

pub fn is_isomorphic(a: &MonoAlg, b: &MonoAlg) -> bool {
    a.len() == b.len() && canonical_code(a) == canonical_code(b)
}

/// An isomorphism `phi` with `phi[x]` the image in `b` of `x` in `a`.
pub fn find_isomorphism(a: &MonoAlg, b: &MonoAlg) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let (ca, la) = Canonizer::new(a).finish();
    let (cb, lb) = Canonizer::new(b).finish();
    if ca != cb {
        return None;
    }
    let mut phi = vec![0; a.len()];
    for (x, y) in la.into_iter().zip(lb) {
        phi[x] = y;
    }
    Some(phi)
}

struct Canonizer<'a> {
    alg: &'a MonoAlg,
    on_cycle: Vec<bool>,
    /// Non-cycle preimages, sorted by rank once ranks are known.
    children: Vec<Vec<usize>>,
    rank: Vec<u32>,
}

impl<'a> Canonizer<'a> {
    fn new(alg: &'a MonoAlg) -> Self {
        let n = alg.len();
        let on_cycle = alg.cycle_elements();
        let mut children = vec![Vec::new(); n];
        for x in 0..n {
            if !on_cycle[x] {
                children[alg.image(x)].push(x);
            }
        }

        // Heights, processing children before parents.
        let mut height = vec![0usize; n];
        let mut pending: Vec<usize> = children.iter().map(Vec::len).collect();
        let mut stack: Vec<usize> = (0..n).filter(|&x| pending[x] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(x) = stack.pop() {
            order.push(x);
            if on_cycle[x] {
                continue;
            }
            let p = alg.image(x);
            height[p] = height[p].max(height[x] + 1);
            pending[p] -= 1;
            if pending[p] == 0 {
                stack.push(p);
            }
        }
        debug_assert_eq!(order.len(), n);

        let max_h = height.iter().copied().max().unwrap_or(0);
        let mut levels = vec![Vec::new(); max_h + 1];
        for x in 0..n {
            levels[height[x]].push(x);
        }

        let mut rank = vec![0u32; n];
        let mut next_rank = 0u32;
        for level in levels {
            let mut keyed: Vec<(Vec<u32>, usize)> = level
                .into_iter()
                .map(|x| {
                    let mut key: Vec<u32> = children[x].iter().map(|&c| rank[c]).collect();
                    key.sort_unstable();
                    (key, x)
                })
                .collect();
            keyed.sort_unstable();
            let mut prev: Option<&Vec<u32>> = None;
            for (key, x) in &keyed {
                if prev != Some(key) {
                    next_rank += 1;
                    prev = Some(key);
                }
                rank[*x] = next_rank;
            }
        }

        for ch in children.iter_mut() {
            ch.sort_unstable_by_key(|&c| rank[c]);
        }

        Canonizer {
            alg,
            on_cycle,
            children,
            rank,
        }
    }

    fn finish(self) -> (CanonicalCode, Vec<usize>) {
        let n = self.alg.len();
        let mut seen = vec![false; n];
        let mut comps: Vec<(Vec<u8>, Vec<usize>)> = Vec::new();
        for start in 0..n {
            if !self.on_cycle[start] || seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut y = self.alg.image(start);
            while y != start {
                seen[y] = true;
                cycle.push(y);
                y = self.alg.image(y);
            }
            let ranks: Vec<u32> = cycle.iter().map(|&c| self.rank[c]).collect();
            cycle.rotate_left(least_rotation(&ranks));

            let mut bytes = vec![b'['];
            let mut labels = Vec::new();
            for &root in &cycle {
                self.emit(root, &mut bytes, &mut labels);
            }
            bytes.push(b']');
            comps.push((bytes, labels));
        }
        comps.sort_by(|a, b| a.0.cmp(&b.0));

        let components = comps.len();
        let mut bytes = Vec::with_capacity(2 * n + 2 * components);
        let mut labels = Vec::with_capacity(n);
        for (b, l) in comps {
            bytes.extend_from_slice(&b);
            labels.extend_from_slice(&l);
        }
        (CanonicalCode { components, bytes }, labels)
    }

    /// Preorder walk of the in-tree at `root`, children in rank order.
    fn emit(&self, root: usize, bytes: &mut Vec<u8>, labels: &mut Vec<usize>) {
        let mut stack = vec![(root, 0usize)];
        bytes.push(b'(');
        labels.push(root);
        while let Some((x, i)) = stack.last_mut() {
            if let Some(&c) = self.children[*x].get(*i) {
                *i += 1;
                bytes.push(b'(');
                labels.push(c);
                stack.push((c, 0));
            } else {
                bytes.push(b')');
                stack.pop();
            }
        }
    }
}

/// Start index of the lexicographically least rotation (Booth's algorithm).
pub(crate) fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &s[i % n];
    let mut fail = vec![usize::MAX; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let mut i = fail[j - k - 1];
        while i != usize::MAX && at(j) != at(k + i + 1) {
            if at(j) < at(k + i + 1) {
                k = j - i - 1;
            }
            i = fail[i];
        }
        if i == usize::MAX && at(j) != at(k) {
            if at(j) < at(k) {
                k = j;
            }
            fail[j - k] = usize::MAX;
        } else {
            fail[j - k] = if i == usize::MAX { 0 } else { i + 1 };
        }
    }
    k % n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_least_rotation(s: &[u32]) -> Vec<u32> {
        (0..s.len())
            .map(|k| {
                let mut r = s.to_vec();
                r.rotate_left(k);
                r
            })
            .min()
            .unwrap()
    }

    #[test]
    fn booth_matches_naive() {
        let cases: &[&[u32]] = &[
            &[1],
            &[2, 1],
            &[1, 1, 1],
            &[3, 1, 2, 1, 2],
            &[2, 2, 1, 2, 2, 1],
            &[1, 2, 1, 1, 2, 1, 1],
            &[5, 4, 3, 2, 1, 0],
        ];
        for &s in cases {
            let k = least_rotation(s);
            let mut r = s.to_vec();
            r.rotate_left(k);
            assert_eq!(r, naive_least_rotation(s), "{s:?}");
        }
    }

    #[test]
    fn small_codes() {
        let c1 = MonoAlg::cycle(1).unwrap();
        assert_eq!(canonical_code(&c1).to_string(), "[()]");
        let c2 = MonoAlg::cycle(2).unwrap();
        let m11 = MonoAlg::mpl(1, 1).unwrap();
        assert_eq!(canonical_code(&c2).to_string(), "[()()]");
        assert_eq!(canonical_code(&m11).to_string(), "[(())]");
        assert!(!is_isomorphic(&c2, &m11));
        let c4 = MonoAlg::cycle(4).unwrap();
        let c2c2 = c2.disjoint_union(&c2);
        assert!(!is_isomorphic(&c4, &c2c2));
        assert_eq!(canonical_code(&c2c2).components(), 2);
    }

    #[test]
    fn rotated_cycle_is_isomorphic() {
        let c3 = MonoAlg::cycle(3).unwrap();
        let rotated = MonoAlg::new(vec![2, 0, 1]).unwrap();
        assert!(is_isomorphic(&c3, &rotated));
        assert!(!is_isomorphic(&c3, &MonoAlg::cycle(4).unwrap()));
    }

    #[test]
    fn orientation_matters() {
        // Trees of sizes 1, 2, 3 on a 3-cycle in both cyclic orders.
        let a = MonoAlg::new(vec![1, 2, 0, 1, 2, 2]).unwrap();
        let b = MonoAlg::new(vec![1, 2, 0, 2, 1, 1]).unwrap();
        assert!(!is_isomorphic(&a, &b));
    }

    #[test]
    fn isomorphism_is_a_homomorphism() {
        let a = MonoAlg::new(vec![1, 2, 0, 1, 3, 3, 6]).unwrap();
        let perm = [4, 6, 0, 2, 1, 5, 3];
        let b = a.relabel(&perm).unwrap();
        let phi = find_isomorphism(&a, &b).unwrap();
        for x in 0..a.len() {
            assert_eq!(phi[a.image(x)], b.image(phi[x]));
        }
    }
}
