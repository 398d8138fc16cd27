//! Deciding whether `A` is largely embeddable into `B`.
//!
//! If `B = ⟨A' ∪ {b}⟩` with `A' ≅ A`, either the orbit of `b` never meets
//! `A'` (then `⟨b⟩` is a whole component of `B` shaped like a cycle with
//! one tail), or it enters `A'` after `t` steps (then `B` is `A'` with a
//! tail of length `t` glued on). Both shapes are searched directly.

use crate::error::{Error, Result};
use crate::monounary::{find_isomorphism, MonoAlg};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// `B ≅ A ⊔ M(cycle, tail)`.
    DisjointMpl { cycle: usize, tail: usize },
    /// `B ≅ A +_at length`; `at` is an element of `A`.
    Tail { at: usize, length: usize },
}

/// Certificate for `A ⊑ B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LargeEmbedWitness {
    pub kind: WitnessKind,
    /// Injective homomorphism `A -> B`, `embedding[x]` is the image of `x`.
    pub embedding: Vec<usize>,
    /// The extra element of `B` that together with the image generates `B`.
    pub generator: usize,
}

impl LargeEmbedWitness {
    /// Checks the witness against the algebras it claims to relate.
    pub fn verify(&self, small: &MonoAlg, big: &MonoAlg) -> Result<()> {
        let bad = |msg: &str| Err(Error::contract(format!("invalid large-embedding witness: {msg}")));
        if self.embedding.len() != small.len() || self.generator >= big.len() {
            return bad("sizes do not match");
        }
        let mut in_image = vec![false; big.len()];
        for &y in &self.embedding {
            if y >= big.len() || std::mem::replace(&mut in_image[y], true) {
                return bad("embedding is not injective");
            }
        }
        for x in 0..small.len() {
            if self.embedding[small.image(x)] != big.image(self.embedding[x]) {
                return bad("embedding is not a homomorphism");
            }
        }
        let generated = big.generate(self.embedding.iter().copied().chain([self.generator]));
        if generated.len() != big.len() {
            return bad("image and generator do not generate the target");
        }
        let extra: Vec<usize> = (0..big.len()).filter(|&y| !in_image[y]).collect();
        match self.kind {
            WitnessKind::Tail { at, length } => {
                if at >= small.len() || extra.len() != length {
                    return bad("tail length or anchor out of range");
                }
                if length > 0 {
                    let mut y = self.generator;
                    for _ in 0..length {
                        if in_image[y] {
                            return bad("tail is shorter than claimed");
                        }
                        y = big.image(y);
                    }
                    if y != self.embedding[at] {
                        return bad("tail does not end at the anchor");
                    }
                }
            }
            WitnessKind::DisjointMpl { cycle, tail } => {
                if cycle == 0 || extra.len() != cycle + tail {
                    return bad("extra component has the wrong size");
                }
                if extra.iter().any(|&y| in_image[big.image(y)]) {
                    return bad("extra elements run into the image");
                }
                let piece = big.restrict(&extra)?;
                let expected = MonoAlg::mpl(cycle, tail)?;
                if find_isomorphism(&piece, &expected).is_none() {
                    return bad("extra component is not the claimed cycle-with-tail");
                }
            }
        }
        Ok(())
    }
}

/// Returns a witness iff `a` is isomorphic to a large subalgebra of `b`.
pub fn is_largely_embeddable(a: &MonoAlg, b: &MonoAlg) -> Option<LargeEmbedWitness> {
    if b.len() < a.len() {
        return None;
    }
    let t = b.len() - a.len();
    if t == 0 {
        let phi = find_isomorphism(a, b)?;
        let generator = phi[0];
        return Some(LargeEmbedWitness {
            kind: WitnessKind::Tail { at: 0, length: 0 },
            embedding: phi,
            generator,
        });
    }

    let mut indeg = vec![0usize; b.len()];
    for &y in b.table() {
        indeg[y] += 1;
    }

    // A whole component of size t shaped like M(n, l).
    for comp in b.components() {
        if comp.len() != t || comp.mgen() != 1 {
            continue;
        }
        let rest = complement(b.len(), comp.elements());
        if rest.is_empty() {
            continue;
        }
        let rest_alg = b.restrict(&rest).expect("complement of a component is closed");
        if let Some(phi) = find_isomorphism(a, &rest_alg) {
            let cycle = comp.core().len();
            let generator = comp
                .elements()
                .iter()
                .copied()
                .find(|&y| indeg[y] == 0)
                .unwrap_or(comp.core().cycle[0]);
            return Some(LargeEmbedWitness {
                kind: WitnessKind::DisjointMpl {
                    cycle,
                    tail: t - cycle,
                },
                embedding: phi.into_iter().map(|x| rest[x]).collect(),
                generator,
            });
        }
    }

    // A removable tail of length t starting at an independent element.
    'start: for x in (0..b.len()).filter(|&x| indeg[x] == 0) {
        let mut prefix = vec![x];
        let mut cur = x;
        for _ in 1..t {
            cur = b.image(cur);
            if indeg[cur] != 1 {
                continue 'start;
            }
            prefix.push(cur);
        }
        let end = b.image(cur);
        if prefix.contains(&end) {
            continue;
        }
        let rest = complement(b.len(), &prefix);
        let rest_alg = b.restrict(&rest).expect("removing a hanging tail leaves a closed set");
        if let Some(phi) = find_isomorphism(a, &rest_alg) {
            let embedding: Vec<usize> = phi.into_iter().map(|y| rest[y]).collect();
            let at = embedding
                .iter()
                .position(|&y| y == end)
                .expect("tail end lies in the image");
            return Some(LargeEmbedWitness {
                kind: WitnessKind::Tail { at, length: t },
                embedding,
                generator: x,
            });
        }
    }
    None
}

fn complement(n: usize, removed: &[usize]) -> Vec<usize> {
    let mut keep = vec![true; n];
    for &r in removed {
        keep[r] = false;
    }
    (0..n).filter(|&x| keep[x]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize) -> MonoAlg {
        MonoAlg::cycle(n).unwrap()
    }

    #[test]
    fn point_into_tail() {
        let w = is_largely_embeddable(&c(1), &MonoAlg::mpl(1, 2).unwrap()).unwrap();
        assert_eq!(w.kind, WitnessKind::Tail { at: 0, length: 2 });
        w.verify(&c(1), &MonoAlg::mpl(1, 2).unwrap()).unwrap();
    }

    #[test]
    fn disjoint_mpl_always_works() {
        let a = MonoAlg::new(vec![1, 2, 0, 1]).unwrap();
        for n in 1..4 {
            for l in 0..3 {
                let b = a.disjoint_union(&MonoAlg::mpl(n, l).unwrap());
                let w = is_largely_embeddable(&a, &b).expect("a ⊑ a ⊔ M(n,l)");
                w.verify(&a, &b).unwrap();
            }
        }
    }

    #[test]
    fn negative_cases() {
        assert!(is_largely_embeddable(&c(2), &c(3)).is_none());
        assert!(is_largely_embeddable(&c(3), &c(2)).is_none());
        // two extra leaves need two generators
        let star = MonoAlg::new(vec![0, 0, 0]).unwrap();
        assert!(is_largely_embeddable(&c(1), &star).is_none());
        assert!(is_largely_embeddable(&c(1), &c(1).disjoint_union(&c(1)).disjoint_union(&c(1))).is_none());
    }

    #[test]
    fn isomorphic_pair() {
        let a = MonoAlg::new(vec![1, 0, 0]).unwrap();
        let b = MonoAlg::new(vec![1, 0, 1]).unwrap();
        let w = is_largely_embeddable(&a, &b).unwrap();
        assert_eq!(w.kind, WitnessKind::Tail { at: 0, length: 0 });
        w.verify(&a, &b).unwrap();
    }

    #[test]
    fn forged_witness_rejected() {
        let a = c(1);
        let b = MonoAlg::mpl(1, 2).unwrap();
        let mut w = is_largely_embeddable(&a, &b).unwrap();
        w.kind = WitnessKind::Tail { at: 0, length: 1 };
        assert!(w.verify(&a, &b).is_err());
        let mut w = is_largely_embeddable(&a, &b).unwrap();
        w.embedding = vec![1];
        assert!(w.verify(&a, &b).is_err());
    }
}
