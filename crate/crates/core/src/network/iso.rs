//! Isomorphism of subuniverses by mapping a small generating set.
//!
//! A homomorphism is determined by its values on generators, so it is
//! enough to try every image tuple for one generating set and extend each
//! by generation, checking every operation along the way.

use super::algebra::{for_each_new_tuple, FiniteAlgebra, SubUniverse};

/// Whether a bijective homomorphism `a -> b` exists.
pub fn fa_isomorphic(a: &SubUniverse<'_>, b: &SubUniverse<'_>) -> bool {
    let (fa, fb) = (a.parent(), b.parent());
    if a.len() != b.len() || fa.signature() != fb.signature() {
        return false;
    }
    let gens = small_generating_set(a);
    let orbit_a: Vec<usize> = gens.iter().map(|&g| fa.closure([g]).len()).collect();
    let orbit_b: Vec<usize> = b.elements().iter().map(|&y| fb.closure([y]).len()).collect();
    let candidates: Vec<Vec<usize>> = orbit_a
        .iter()
        .map(|&size| {
            b.elements()
                .iter()
                .zip(&orbit_b)
                .filter(|&(_, &s)| s == size)
                .map(|(&y, _)| y)
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search(fa, fb, &gens, &candidates, &mut images, a.len())
}

fn search(
    fa: &FiniteAlgebra,
    fb: &FiniteAlgebra,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    size: usize,
) -> bool {
    let i = images.len();
    if i == gens.len() {
        return extends(fa, fb, gens, images, size);
    }
    for &y in &candidates[i] {
        images.push(y);
        // generated sizes must agree on every prefix
        let ok = fa.closure(gens[..=i].iter().copied()).len() == fb.closure(images.iter().copied()).len();
        if ok && search(fa, fb, gens, candidates, images, size) {
            return true;
        }
        images.pop();
    }
    false
}

/// Extends `gens[i] -> images[i]` to the generated subuniverse and checks
/// it is an injective homomorphism onto a set of `size` elements.
fn extends(fa: &FiniteAlgebra, fb: &FiniteAlgebra, gens: &[usize], images: &[usize], size: usize) -> bool {
    let mut m = PartialMap {
        phi: vec![None; fa.size()],
        used: vec![false; fb.size()],
        queue: Vec::new(),
    };
    for (oa, ob) in fa.ops().iter().zip(fb.ops()) {
        if oa.arity() == 0 && !m.assign(oa.table()[0], ob.table()[0]) {
            return false;
        }
    }
    for (&g, &y) in gens.iter().zip(images) {
        if !m.assign(g, y) {
            return false;
        }
    }
    let mut done = Vec::with_capacity(size);
    let mut pairs = Vec::new();
    let mut mapped = Vec::new();
    while let Some(e) = m.queue.pop() {
        done.push(e);
        for (oa, ob) in fa.ops().iter().zip(fb.ops()) {
            for_each_new_tuple(&done, oa.arity(), |args| {
                mapped.clear();
                mapped.extend(args.iter().map(|&x| m.phi[x].expect("processed elements are mapped")));
                pairs.push((fa.index(oa, args), fb.index(ob, &mapped)));
            });
        }
        for (r, s) in pairs.drain(..) {
            if !m.assign(r, s) {
                return false;
            }
        }
    }
    done.len() == size
}

struct PartialMap {
    phi: Vec<Option<usize>>,
    used: Vec<bool>,
    queue: Vec<usize>,
}

impl PartialMap {
    /// Records `x -> y`; false if that breaks functionality or injectivity.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        match self.phi[x] {
            Some(z) => z == y,
            None if self.used[y] => false,
            None => {
                self.phi[x] = Some(y);
                self.used[y] = true;
                self.queue.push(x);
                true
            }
        }
    }
}

/// A generating set of `s`: the smallest of size at most two if one
/// exists, otherwise a greedy one.
fn small_generating_set(s: &SubUniverse<'_>) -> Vec<usize> {
    let fa = s.parent();
    let n = s.len();
    if fa.closure([]).len() == n {
        return Vec::new();
    }
    let singles: Vec<Vec<usize>> = s.elements().iter().map(|&x| fa.closure([x])).collect();
    if let Some(i) = singles.iter().position(|c| c.len() == n) {
        return vec![s.elements()[i]];
    }
    for (i, &x) in s.elements().iter().enumerate() {
        for &y in &s.elements()[i + 1..] {
            if fa.closure_from(&singles[i], [y]).len() == n {
                return vec![x, y];
            }
        }
    }
    let mut gens = Vec::new();
    let mut cur = fa.closure([]);
    for &x in s.elements() {
        if cur.binary_search(&x).is_err() {
            gens.push(x);
            cur = fa.closure_from(&cur, [x]);
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::algebra::enumerate_subalgebras;

    fn zn(n: usize) -> FiniteAlgebra {
        let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let neg = (0..n).map(|x| (n - x) % n).collect();
        FiniteAlgebra::new(n, vec![(2, add), (1, neg), (0, vec![0])]).unwrap()
    }

    #[test]
    fn cyclic_subgroups_by_order() {
        let z = zn(12);
        let subs = enumerate_subalgebras(&z);
        for a in &subs {
            for b in &subs {
                assert_eq!(fa_isomorphic(a, b), a.len() == b.len());
            }
        }
    }

    #[test]
    fn across_parents() {
        let (z6, z12) = (zn(6), zn(12));
        let a = SubUniverse::new(&z6, vec![0, 2, 4]).unwrap();
        let b = SubUniverse::new(&z12, vec![0, 4, 8]).unwrap();
        assert!(fa_isomorphic(&a, &b));
        assert!(!fa_isomorphic(&SubUniverse::full(&z6), &SubUniverse::full(&z12)));
    }

    #[test]
    fn signature_must_match() {
        let z3 = zn(3);
        let plain = FiniteAlgebra::new(3, vec![(1, vec![1, 2, 0])]).unwrap();
        assert!(!fa_isomorphic(&SubUniverse::full(&z3), &SubUniverse::full(&plain)));
    }

    #[test]
    fn non_isomorphic_unary_algebras() {
        // a 2-cycle with a leaf versus a chain into a fixed point
        let a = FiniteAlgebra::new(3, vec![(1, vec![1, 0, 0])]).unwrap();
        let b = FiniteAlgebra::new(3, vec![(1, vec![0, 0, 1])]).unwrap();
        let c = FiniteAlgebra::new(3, vec![(1, vec![2, 0, 0])]).unwrap();
        assert!(!fa_isomorphic(&SubUniverse::full(&a), &SubUniverse::full(&b)));
        assert!(fa_isomorphic(&SubUniverse::full(&a), &SubUniverse::full(&c)));
    }
}
