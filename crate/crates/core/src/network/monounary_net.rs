//! The network of all monounary algebras up to a size cap, one vertex per
//! isomorphism class. Used as a brute-force oracle for the exact distance.
//!
//! A blue edge joins `A` to `B` exactly when `B ≅ A ⊔ M(n, l)` or
//! `B ≅ A +_a m` with `m ≥ 1`, so the edges are generated by applying
//! these two moves to every vertex, never by testing pairs.

use std::collections::HashMap;

use super::graph::Network;
use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::monounary::{canonical_code, CanonicalCode, MonoAlg};

/// Largest cap accepted by [`enumerate_monounary`] and
/// [`build_monounary_network`]. At 14 there are about 720 000 classes.
pub const MONOUNARY_CAP_LIMIT: usize = 14;

/// Largest cap accepted by [`enumerate_monounary_exhaustive`].
pub const EXHAUSTIVE_CAP_LIMIT: usize = 7;

fn check_cap(cap: usize, limit: usize) -> Result<()> {
    if cap == 0 {
        return Err(Error::contract("cap must be at least 1"));
    }
    if cap > limit {
        return Err(Error::CapTooLarge { requested: cap, limit });
    }
    Ok(())
}

/// One representative per isomorphism class of algebras with at most `cap`
/// elements, ordered by size and then by canonical code.
///
/// Classes of size `n` are the one-leaf extensions of classes of size
/// `n - 1` (removing an element without preimages leaves a subalgebra)
/// together with the disjoint unions of cycles, which have no such
/// element.
pub fn enumerate_monounary(cap: usize) -> Result<Vec<MonoAlg>> {
    check_cap(cap, MONOUNARY_CAP_LIMIT)?;
    Ok(levels(cap).into_iter().flatten().map(|(_, a)| a).collect())
}

fn levels(cap: usize) -> Vec<Vec<(CanonicalCode, MonoAlg)>> {
    let mut out: Vec<Vec<(CanonicalCode, MonoAlg)>> = Vec::with_capacity(cap);
    for n in 1..=cap {
        let mut found: HashMap<CanonicalCode, MonoAlg> = HashMap::new();
        if let Some(prev) = out.last() {
            for (_, a) in prev {
                for x in 0..a.len() {
                    let b = a.attach_tail(x, 1).expect("anchor in range");
                    found.entry(canonical_code(&b)).or_insert(b);
                }
            }
        }
        for parts in partitions(n) {
            let b = parts
                .iter()
                .map(|&k| MonoAlg::cycle(k).expect("positive length"))
                .reduce(|acc, c| acc.disjoint_union(&c))
                .expect("non-empty partition");
            found.entry(canonical_code(&b)).or_insert(b);
        }
        let mut level: Vec<(CanonicalCode, MonoAlg)> = found.into_iter().collect();
        level.sort_by(|x, y| x.0.cmp(&y.0));
        out.push(level);
    }
    out
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Same classes as [`enumerate_monounary`], found by canonicalizing every
/// one of the `n^n` operation tables. Only for cross-checking.
pub fn enumerate_monounary_exhaustive(cap: usize) -> Result<Vec<MonoAlg>> {
    check_cap(cap, EXHAUSTIVE_CAP_LIMIT)?;
    let mut out = Vec::new();
    for n in 1..=cap {
        let mut found: HashMap<CanonicalCode, MonoAlg> = HashMap::new();
        let mut map = vec![0usize; n];
        loop {
            let a = MonoAlg::new(map.clone()).expect("entries in range");
            found.entry(canonical_code(&a)).or_insert(a);
            let Some(i) = (0..n).rev().find(|&i| map[i] + 1 < n) else {
                break;
            };
            map[i] += 1;
            map[i + 1..].iter_mut().for_each(|y| *y = 0);
        }
        let mut level: Vec<(CanonicalCode, MonoAlg)> = found.into_iter().collect();
        level.sort_by(|x, y| x.0.cmp(&y.0));
        out.extend(level.into_iter().map(|(_, a)| a));
    }
    Ok(out)
}

/// The monounary network up to a cap, with vertices ordered by size.
pub struct MonoNetwork {
    cap: usize,
    /// Operation tables of all vertices, concatenated.
    tables: Vec<u8>,
    starts: Vec<u32>,
    /// First vertex of each size; `size_start[s]..size_start[s + 1]` are
    /// the vertices with `s` elements.
    size_start: Vec<usize>,
    index: HashMap<CanonicalCode, u32>,
    network: Network,
}

impl MonoNetwork {
    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn network(&self) -> &Network {
        &self.network
    }

    pub fn vertex_count(&self) -> usize {
        self.starts.len() - 1
    }

    /// Vertices with exactly `size` elements.
    pub fn vertices_of_size(&self, size: usize) -> std::ops::Range<usize> {
        if size == 0 || size > self.cap {
            return 0..0;
        }
        self.size_start[size]..self.size_start[size + 1]
    }

    pub fn algebra(&self, v: usize) -> MonoAlg {
        let t = &self.tables[self.starts[v] as usize..self.starts[v + 1] as usize];
        MonoAlg::new(t.iter().map(|&y| y as usize).collect()).expect("stored tables are valid")
    }

    /// The vertex isomorphic to `a`, if `a` is within the cap.
    pub fn vertex_of(&self, a: &MonoAlg) -> Option<usize> {
        if a.len() > self.cap {
            return None;
        }
        self.index.get(&canonical_code(a)).map(|&v| v as usize)
    }

    fn vertex_or_err(&self, a: &MonoAlg) -> Result<usize> {
        self.vertex_of(a).ok_or(Error::CapTooLarge {
            requested: a.len(),
            limit: self.cap,
        })
    }

    /// Network distance between the classes of `a` and `b`, using every
    /// vertex of the network.
    pub fn distance(&self, a: &MonoAlg, b: &MonoAlg) -> Result<Distance> {
        self.distance_at_cap(a, b, self.cap)
    }

    /// Network distance in the subnetwork of algebras with at most `cap`
    /// elements.
    pub fn distance_at_cap(&self, a: &MonoAlg, b: &MonoAlg, cap: usize) -> Result<Distance> {
        let (u, v) = (self.vertex_or_err(a)?, self.vertex_or_err(b)?);
        Ok(self.distances_at_cap(u, &[v], cap)?[0])
    }

    /// Distances from vertex `u` to each of `targets` within the algebras of
    /// at most `cap` elements.
    pub fn distances_at_cap(&self, u: usize, targets: &[usize], cap: usize) -> Result<Vec<Distance>> {
        if cap > self.cap {
            return Err(Error::CapTooLarge {
                requested: cap,
                limit: self.cap,
            });
        }
        let limit = self.size_start[cap + 1];
        if u >= limit {
            return Err(Error::contract(format!("vertex {u} is larger than cap {cap}")));
        }
        self.network.distances_to(u, targets, |w| w < limit)
    }
}

/// Builds the network of all monounary algebras with at most `cap`
/// elements.
pub fn build_monounary_network(cap: usize) -> Result<MonoNetwork> {
    check_cap(cap, MONOUNARY_CAP_LIMIT)?;
    let levels = levels(cap);

    let mut size_start = vec![0usize; cap + 2];
    let mut tables = Vec::new();
    let mut starts = vec![0u32];
    let mut index = HashMap::new();
    let mut algebras = Vec::new();
    for (i, level) in levels.into_iter().enumerate() {
        size_start[i + 1] = algebras.len();
        for (code, a) in level {
            index.insert(code, algebras.len() as u32);
            tables.extend(a.table().iter().map(|&y| y as u8));
            starts.push(tables.len() as u32);
            algebras.push(a);
        }
    }
    size_start[cap + 1] = algebras.len();

    let lookup = |b: &MonoAlg| -> usize { index[&canonical_code(b)] as usize };
    let mut blue = Vec::new();
    let mut ups = Vec::new();
    for (v, a) in algebras.iter().enumerate() {
        let room = cap - a.len();
        ups.clear();
        for x in 0..a.len() {
            for m in 1..=room {
                ups.push(lookup(&a.attach_tail(x, m).expect("anchor in range")));
            }
        }
        for k in 1..=room {
            for l in 0..=room - k {
                ups.push(lookup(&a.disjoint_union(&MonoAlg::mpl(k, l).expect("positive cycle"))));
            }
        }
        ups.sort_unstable();
        ups.dedup();
        blue.extend(ups.iter().map(|&w| (v, w)));
    }
    let sizes: Vec<usize> = algebras.iter().map(MonoAlg::len).collect();
    drop(algebras);
    let classes = (0..sizes.len() as u32).collect();
    let network = Network::new(sizes, classes, Vec::new(), blue)?;
    Ok(MonoNetwork {
        cap,
        tables,
        starts,
        size_start,
        index,
        network,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::is_largely_embeddable;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=8).map(|c| enumerate_monounary(c).unwrap().len()).collect();
        assert_eq!(counts, [1, 4, 11, 30, 77, 207, 550, 1501]);
        assert!(matches!(
            enumerate_monounary(MONOUNARY_CAP_LIMIT + 1),
            Err(Error::CapTooLarge { .. })
        ));
        assert!(enumerate_monounary(0).is_err());
    }

    #[test]
    fn leaf_extension_matches_exhaustive_search() {
        for cap in 1..=6 {
            let fast: Vec<CanonicalCode> = enumerate_monounary(cap).unwrap().iter().map(canonical_code).collect();
            let slow: Vec<CanonicalCode> = enumerate_monounary_exhaustive(cap)
                .unwrap()
                .iter()
                .map(canonical_code)
                .collect();
            assert_eq!(fast, slow, "cap {cap}");
        }
    }

    #[test]
    fn edges_match_decision_procedure() {
        let net = build_monounary_network(5).unwrap();
        let n = net.vertex_count();
        let mut expected = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = (net.algebra(u), net.algebra(v));
                if is_largely_embeddable(&a, &b).is_some() || is_largely_embeddable(&b, &a).is_some() {
                    expected.push((u, v));
                }
            }
        }
        let got: Vec<(usize, usize)> = net.network().blue_edges().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn cap_two_edges() {
        let net = build_monounary_network(2).unwrap();
        let c1 = net.vertex_of(&MonoAlg::cycle(1).unwrap()).unwrap();
        let c2 = net.vertex_of(&MonoAlg::cycle(2).unwrap()).unwrap();
        let m11 = net.vertex_of(&MonoAlg::mpl(1, 1).unwrap()).unwrap();
        let two = net.vertex_of(&MonoAlg::new(vec![0, 1]).unwrap()).unwrap();
        let mut around_c1: Vec<usize> = net
            .network()
            .neighbors(c1)
            .map(|(w, _)| w)
            .collect();
        around_c1.sort_unstable();
        let mut want = vec![m11, two];
        want.sort_unstable();
        assert_eq!(around_c1, want);
        assert!(net.network().neighbors(c1).all(|(w, _)| w != c2));
    }

    #[test]
    fn cap_refusals() {
        let net = build_monounary_network(3).unwrap();
        let big = MonoAlg::cycle(4).unwrap();
        assert!(net.distance(&big, &MonoAlg::cycle(1).unwrap()).is_err());
        let c1 = MonoAlg::cycle(1).unwrap();
        assert!(net.distance_at_cap(&c1, &c1, 4).is_err());
        assert_eq!(net.distance(&c1, &c1).unwrap(), Distance::ZERO);
    }
}
