use super::large::{LargeEmbedWitness, WitnessKind};
use crate::error::Result;
use crate::monounary::MonoAlg;

/// Given `c ⊑ a` and `c ⊑ b`, builds `d` with `a ⊑ d` and `b ⊑ d`.
///
/// When either step adds a separate `M(n, l)` component, the same
/// component is added to the other side. When both steps glue a tail onto
/// `c`, the second tail is glued onto `a` at the image of its anchor; tails
/// on the same base commute, so the result also extends `b` by the first
/// tail.
pub fn push_up_witness(
    c: &MonoAlg,
    a: &MonoAlg,
    wa: &LargeEmbedWitness,
    b: &MonoAlg,
    wb: &LargeEmbedWitness,
) -> Result<MonoAlg> {
    wa.verify(c, a)?;
    wb.verify(c, b)?;
    match (wa.kind, wb.kind) {
        (WitnessKind::DisjointMpl { cycle, tail }, _) => Ok(b.disjoint_union(&MonoAlg::mpl(cycle, tail)?)),
        (_, WitnessKind::DisjointMpl { cycle, tail }) => Ok(a.disjoint_union(&MonoAlg::mpl(cycle, tail)?)),
        (WitnessKind::Tail { .. }, WitnessKind::Tail { at, length }) => a.attach_tail(wa.embedding[at], length),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::is_largely_embeddable;
    use crate::monounary::is_isomorphic;

    fn check(c: &MonoAlg, a: &MonoAlg, b: &MonoAlg) -> MonoAlg {
        let wa = is_largely_embeddable(c, a).unwrap();
        let wb = is_largely_embeddable(c, b).unwrap();
        let d = push_up_witness(c, a, &wa, b, &wb).unwrap();
        assert!(is_largely_embeddable(a, &d).is_some(), "{a:?} into {d:?}");
        assert!(is_largely_embeddable(b, &d).is_some(), "{b:?} into {d:?}");
        d
    }

    #[test]
    fn mixed_cases() {
        let c1 = MonoAlg::cycle(1).unwrap();
        let a = c1.disjoint_union(&MonoAlg::cycle(2).unwrap());
        let b = MonoAlg::mpl(1, 1).unwrap();
        check(&c1, &a, &b);
    }

    #[test]
    fn trivial_case() {
        let c = MonoAlg::new(vec![1, 0, 0]).unwrap();
        let d = check(&c, &c, &c);
        assert!(is_isomorphic(&d, &c));
    }

    #[test]
    fn tail_tail_commutes() {
        let c = MonoAlg::cycle(2).unwrap();
        let a = c.attach_tail(0, 1).unwrap();
        let b = c.attach_tail(1, 2).unwrap();
        let d = check(&c, &a, &b);
        assert!(is_isomorphic(&d, &a.attach_tail(1, 2).unwrap()));
        assert!(is_isomorphic(&d, &b.attach_tail(0, 1).unwrap()));
    }

    #[test]
    fn rejects_forged_witness() {
        let c = MonoAlg::cycle(1).unwrap();
        let a = MonoAlg::mpl(1, 1).unwrap();
        let wa = is_largely_embeddable(&c, &a).unwrap();
        let mut bad = wa.clone();
        bad.embedding = vec![1];
        assert!(push_up_witness(&c, &a, &bad, &a, &wa).is_err());
    }
}
