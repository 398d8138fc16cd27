use super::algebra::{enumerate_subalgebras, is_large_subalgebra, FiniteAlgebra, SubUniverse};
use super::graph::Network;
use super::iso::fa_isomorphic;

/// The network of all subalgebras of one finite algebra. Vertex `i` of
/// [`SubalgebraNetwork::network`] is `vertices[i]`.
#[derive(Debug, Clone)]
pub struct SubalgebraNetwork<'a> {
    pub vertices: Vec<SubUniverse<'a>>,
    /// Isomorphism class of each vertex, numbered in order of first
    /// appearance.
    pub classes: Vec<u32>,
    /// Pairs `(w, v)` with `w` a proper large subalgebra of `v`.
    pub large_pairs: Vec<(usize, usize)>,
    pub network: Network,
}

impl SubalgebraNetwork<'_> {
    /// Index of the whole algebra (always the last vertex).
    pub fn top(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Whether vertex `v` is a large subalgebra of the whole algebra.
    pub fn large_in_top(&self, v: usize) -> bool {
        v == self.top() || self.large_pairs.contains(&(v, self.top()))
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let count = self.classes.iter().max().map_or(0, |&c| c as usize + 1);
        let mut sizes = vec![0; count];
        for &c in &self.classes {
            sizes[c as usize] += 1;
        }
        sizes
    }
}

/// Red edges join isomorphic subalgebras. A blue edge joins distinct `u`
/// and `v` when some `w ≅ u` is a proper large subalgebra of `v`, or the
/// same with `u` and `v` swapped.
pub fn build_subalgebra_network(fa: &FiniteAlgebra) -> SubalgebraNetwork<'_> {
    let vertices = enumerate_subalgebras(fa);
    let n = vertices.len();

    let mut classes = vec![u32::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for v in 0..n {
        let found = reps
            .iter()
            .position(|&r| vertices[r].len() == vertices[v].len() && fa_isomorphic(&vertices[r], &vertices[v]));
        classes[v] = match found {
            Some(c) => c as u32,
            None => {
                reps.push(v);
                (reps.len() - 1) as u32
            }
        };
    }

    let mut red = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if classes[u] == classes[v] {
                red.push((u, v));
            }
        }
    }

    let mut large_pairs = Vec::new();
    for w in 0..n {
        for v in w + 1..n {
            let (sw, sv) = (&vertices[w], &vertices[v]);
            if sw.len() < sv.len() && sw.is_subset_of(sv) && is_large_subalgebra(sw, sv).expect("nested subuniverses") {
                large_pairs.push((w, v));
            }
        }
    }

    let mut blue = Vec::new();
    for &(w, v) in &large_pairs {
        for u in (0..n).filter(|&u| classes[u] == classes[w]) {
            blue.push((u, v));
        }
    }

    let sizes = vertices.iter().map(SubUniverse::len).collect();
    let network = Network::new(sizes, classes.clone(), red, blue).expect("edges use valid vertices");
    SubalgebraNetwork {
        vertices,
        classes,
        large_pairs,
        network,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::builtin::cyclic_group;

    #[test]
    fn trivial_algebra() {
        let one = cyclic_group(1).unwrap();
        let net = build_subalgebra_network(&one);
        assert_eq!(net.network.vertex_count(), 1);
        assert_eq!(net.network.red_count() + net.network.blue_count(), 0);
    }

    #[test]
    fn cyclic_chain() {
        // Z_8: subgroups of order 1, 2, 4, 8 in a chain; each is large in
        // every larger one
        let z8 = cyclic_group(8).unwrap();
        let net = build_subalgebra_network(&z8);
        assert_eq!(net.network.vertex_count(), 4);
        assert_eq!(net.network.red_count(), 0);
        assert_eq!(net.network.blue_count(), 6);
        assert!((0..4).all(|v| net.large_in_top(v)));
    }
}
