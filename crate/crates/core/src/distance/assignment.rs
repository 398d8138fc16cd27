//! Square min-cost assignment.

use crate::error::{Error, Result};

/// A square matrix of non-negative integer costs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostMatrix {
    size: usize,
    entries: Vec<u64>,
}

/// An optimal assignment: row `i` is matched to column `matching[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub value: u64,
    pub matching: Vec<usize>,
}

impl CostMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(Error::contract(format!(
                    "cost matrix is not square: row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
            for (j, c) in row.into_iter().enumerate() {
                let c = u64::try_from(c)
                    .map_err(|_| Error::contract(format!("negative cost {c} at ({i}, {j})")))?;
                entries.push(c);
            }
        }
        Ok(CostMatrix { size, entries })
    }

    pub(crate) fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        CostMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.entries[row * self.size + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.entries.chunks(self.size.max(1)).take(self.size)
    }

    pub fn cost_of(&self, matching: &[usize]) -> u64 {
        matching.iter().enumerate().map(|(i, &j)| self.get(i, j)).sum()
    }
}

/// Exact minimum by the O(m³) potentials method (shortest augmenting
/// paths with dual variables).
pub fn assignment_min(c: &CostMatrix) -> Assignment {
    let n = c.size;
    if n == 0 {
        return Assignment {
            value: 0,
            matching: Vec::new(),
        };
    }
    const INF: i64 = i64::MAX / 4;
    let cost = |i: usize, j: usize| c.get(i - 1, j - 1) as i64;
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    // p[j]: row matched to column j (1-based, 0 = free)
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![INF; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = INF;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost(i0, j) - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut matching = vec![0; n];
    for j in 1..=n {
        matching[p[j] - 1] = j - 1;
    }
    Assignment {
        value: c.cost_of(&matching),
        matching,
    }
}

/// Largest matrix accepted by [`assignment_min_brute`].
pub const BRUTE_FORCE_LIMIT: usize = 8;

/// Enumerates all permutations. Only for cross-checking small instances.
pub fn assignment_min_brute(c: &CostMatrix) -> Result<Assignment> {
    if c.size > BRUTE_FORCE_LIMIT {
        return Err(Error::contract(format!(
            "brute-force assignment is limited to {BRUTE_FORCE_LIMIT}x{BRUTE_FORCE_LIMIT}"
        )));
    }
    let mut perm: Vec<usize> = (0..c.size).collect();
    let mut best = Assignment {
        value: c.cost_of(&perm),
        matching: perm.clone(),
    };
    // Heap's algorithm
    let mut counters = vec![0usize; c.size];
    let mut i = 1;
    while i < c.size {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            let value = c.cost_of(&perm);
            if value < best.value {
                best = Assignment {
                    value,
                    matching: perm.clone(),
                };
            }
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cases() {
        let m = CostMatrix::new(vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap();
        assert_eq!(assignment_min(&m).value, 0);
        let m = CostMatrix::new(vec![vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(assignment_min(&m).value, 2);
        assert_eq!(assignment_min(&CostMatrix::new(vec![]).unwrap()).value, 0);
    }

    #[test]
    fn rejects_malformed() {
        assert!(CostMatrix::new(vec![vec![1, 2]]).is_err());
        assert!(CostMatrix::new(vec![vec![1, -2], vec![0, 0]]).is_err());
        let big = CostMatrix::from_fn(9, |_, _| 0);
        assert!(assignment_min_brute(&big).is_err());
    }

    proptest! {
        #[test]
        fn agrees_with_enumeration(size in 0usize..7, seed in prop::collection::vec(0u64..20, 49)) {
            let m = CostMatrix::from_fn(size, |i, j| seed[i * 7 + j]);
            let fast = assignment_min(&m);
            let slow = assignment_min_brute(&m).unwrap();
            prop_assert_eq!(fast.value, slow.value);
            prop_assert_eq!(m.cost_of(&fast.matching), fast.value);
            let mut cols = fast.matching.clone();
            cols.sort_unstable();
            prop_assert_eq!(cols, (0..size).collect::<Vec<_>>());
        }
    }
}
