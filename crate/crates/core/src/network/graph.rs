use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::distance::Distance;
use crate::error::{Error, Result};

/// Edge colour: red joins isomorphic vertices (cost 0), blue joins a
/// vertex to a large extension (cost 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

/// An undirected graph with red and blue edges. Loops and duplicate edges
/// are dropped on construction.
#[derive(Debug, Clone)]
pub struct Network {
    sizes: Vec<usize>,
    classes: Vec<u32>,
    red: Vec<(u32, u32)>,
    blue: Vec<(u32, u32)>,
    offsets: Vec<usize>,
    /// `neighbor << 1 | cost`
    adjacency: Vec<u32>,
}

fn normalize(edges: Vec<(usize, usize)>, n: usize) -> Result<Vec<(u32, u32)>> {
    let mut out = Vec::with_capacity(edges.len());
    for (u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::contract(format!("edge ({u}, {v}) names a vertex outside 0..{n}")));
        }
        if u != v {
            out.push((u.min(v) as u32, u.max(v) as u32));
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

impl Network {
    /// `sizes[v]` is the universe size of vertex `v` and `classes[v]` its
    /// isomorphism-class tag; both only feed labels.
    pub fn new(
        sizes: Vec<usize>,
        classes: Vec<u32>,
        red: Vec<(usize, usize)>,
        blue: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let n = sizes.len();
        if classes.len() != n {
            return Err(Error::contract("one class tag per vertex required"));
        }
        if n >= (1 << 31) {
            return Err(Error::contract("too many vertices"));
        }
        let red = normalize(red, n)?;
        let blue = normalize(blue, n)?;
        let mut degree = vec![0usize; n + 1];
        for &(u, v) in red.iter().chain(&blue) {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = vec![0usize; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + degree[v];
        }
        let mut fill = offsets.clone();
        let mut adjacency = vec![0u32; offsets[n]];
        for (edges, cost) in [(&red, 0u32), (&blue, 1u32)] {
            for &(u, v) in edges.iter() {
                adjacency[fill[u as usize]] = v << 1 | cost;
                fill[u as usize] += 1;
                adjacency[fill[v as usize]] = u << 1 | cost;
                fill[v as usize] += 1;
            }
        }
        for v in 0..n {
            adjacency[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Ok(Network {
            sizes,
            classes,
            red,
            blue,
            offsets,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn size(&self, v: usize) -> usize {
        self.sizes[v]
    }

    pub fn class(&self, v: usize) -> u32 {
        self.classes[v]
    }

    pub fn red_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.red.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn blue_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.blue.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn red_count(&self) -> usize {
        self.red.len()
    }

    pub fn blue_count(&self) -> usize {
        self.blue.len()
    }

    /// Neighbours of `v` with their colours, sorted by neighbour.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, Color)> + '_ {
        self.adjacency[self.offsets[v]..self.offsets[v + 1]].iter().map(|&e| {
            let color = if e & 1 == 1 { Color::Blue } else { Color::Red };
            ((e >> 1) as usize, color)
        })
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::contract(format!("unknown vertex {v}")))
        }
    }

    /// Blue-length of a shortest path from `u` to every vertex.
    pub fn distances_from(&self, u: usize) -> Result<Vec<Distance>> {
        self.distances_within(u, |_| true)
    }

    /// As [`Network::distances_from`], on the subnetwork induced by the
    /// vertices satisfying `keep` (`u` itself must satisfy it).
    pub fn distances_within(&self, u: usize, keep: impl Fn(usize) -> bool) -> Result<Vec<Distance>> {
        self.check(u)?;
        if !keep(u) {
            return Err(Error::contract(format!("source {u} is filtered out")));
        }
        let raw = self.bfs01(u, &keep, None);
        Ok(raw
            .into_iter()
            .map(|d| if d == u32::MAX { Distance::Infinite } else { Distance::Finite(d.into()) })
            .collect())
    }

    /// 0-1 breadth-first search. Stops early once every vertex in `targets`
    /// is settled.
    fn bfs01(&self, u: usize, keep: &impl Fn(usize) -> bool, targets: Option<&[usize]>) -> Vec<u32> {
        let n = self.vertex_count();
        let mut dist = vec![u32::MAX; n];
        let mut settled = vec![false; n];
        let mut remaining = targets.map(|t| {
            let mut want = vec![false; n];
            t.iter().for_each(|&x| want[x] = true);
            (want, t.len())
        });
        let mut deque = VecDeque::new();
        dist[u] = 0;
        deque.push_back(u);
        while let Some(x) = deque.pop_front() {
            if std::mem::replace(&mut settled[x], true) {
                continue;
            }
            if let Some((want, left)) = remaining.as_mut() {
                if std::mem::replace(&mut want[x], false) {
                    *left -= 1;
                    if *left == 0 {
                        break;
                    }
                }
            }
            let d = dist[x];
            for &e in &self.adjacency[self.offsets[x]..self.offsets[x + 1]] {
                let y = (e >> 1) as usize;
                let cost = e & 1;
                if settled[y] || !keep(y) || d + cost >= dist[y] {
                    continue;
                }
                dist[y] = d + cost;
                if cost == 0 {
                    deque.push_front(y);
                } else {
                    deque.push_back(y);
                }
            }
        }
        dist
    }

    /// Distances from `u` to each of `targets` within the vertices kept by
    /// `keep`, stopping as soon as all of them are known.
    pub fn distances_to(&self, u: usize, targets: &[usize], keep: impl Fn(usize) -> bool) -> Result<Vec<Distance>> {
        self.check(u)?;
        for &t in targets {
            self.check(t)?;
        }
        let mut distinct = targets.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let raw = self.bfs01(u, &keep, Some(&distinct));
        Ok(targets
            .iter()
            .map(|&t| {
                if raw[t] == u32::MAX || !keep(t) {
                    Distance::Infinite
                } else {
                    Distance::Finite(raw[t].into())
                }
            })
            .collect())
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Distance> {
        self.check(v)?;
        Ok(self.distances_to(u, &[v], |_| true)?[0])
    }

    /// Vertices reachable from `start` along edges of either colour, sorted.
    pub fn component_of(&self, start: usize) -> Result<Vec<usize>> {
        Ok(self
            .distances_from(start)?
            .into_iter()
            .enumerate()
            .filter(|(_, d)| d.is_finite())
            .map(|(v, _)| v)
            .collect())
    }

    /// Largest distance between two vertices of `start`'s component.
    pub fn component_diameter(&self, start: usize) -> Result<Distance> {
        let comp = self.component_of(start)?;
        let mut best = Distance::ZERO;
        for &v in &comp {
            let dist = self.distances_from(v)?;
            for &w in &comp {
                best = best.max(dist[w]);
            }
        }
        Ok(best)
    }

    /// The subnetwork on `vertices` (in the given order; vertex `i` of the
    /// result is `vertices[i]`).
    pub fn induced(&self, vertices: &[usize]) -> Result<Network> {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check(v)?;
            if pos[v] != usize::MAX {
                return Err(Error::contract(format!("vertex {v} listed twice")));
            }
            pos[v] = i;
        }
        let keep = |edges: &[(u32, u32)]| -> Vec<(usize, usize)> {
            edges
                .iter()
                .map(|&(u, v)| (pos[u as usize], pos[v as usize]))
                .filter(|&(a, b)| a != usize::MAX && b != usize::MAX)
                .collect()
        };
        Network::new(
            vertices.iter().map(|&v| self.sizes[v]).collect(),
            vertices.iter().map(|&v| self.classes[v]).collect(),
            keep(&self.red),
            keep(&self.blue),
        )
    }

    /// Graphviz rendering: red edges dashed, blue edges solid, vertices
    /// labelled with their size and class tag.
    pub fn export_dot(&self) -> String {
        let mut out = String::from("graph network {\n");
        for v in 0..self.vertex_count() {
            let _ = writeln!(out, "  v{v} [label=\"{} #{}\"];", self.sizes[v], self.classes[v]);
        }
        for &(u, v) in &self.red {
            let _ = writeln!(out, "  v{u} -- v{v} [style=dashed,color=red];");
        }
        for &(u, v) in &self.blue {
            let _ = writeln!(out, "  v{u} -- v{v} [color=blue];");
        }
        out.push_str("}\n");
        out
    }
}

/// Free-function form of [`Network::distance`].
pub fn network_distance(net: &Network, u: usize, v: usize) -> Result<Distance> {
    net.distance(u, v)
}

/// Free-function form of [`Network::component_diameter`].
pub fn component_diameter(net: &Network, start: usize) -> Result<Distance> {
    net.component_diameter(start)
}
