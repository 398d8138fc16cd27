use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};

/// One operation of a [`FiniteAlgebra`], stored as a row-major table:
/// the value at `(x_0, .., x_{k-1})` sits at index `Σ x_j n^{k-1-j}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Operation {
    arity: usize,
    table: Vec<usize>,
}

impl Operation {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }
}

/// A finite algebra given by its universe size and operation tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    size: usize,
    ops: Vec<Operation>,
    names: Option<Vec<String>>,
}

/// Largest table accepted for a single operation.
pub const MAX_TABLE_LEN: usize = 1 << 24;

pub(crate) fn table_len(size: usize, arity: usize) -> Option<usize> {
    let mut len = 1usize;
    for _ in 0..arity {
        len = len.checked_mul(size)?;
    }
    (len <= MAX_TABLE_LEN).then_some(len)
}

impl FiniteAlgebra {
    /// `ops` pairs each arity with its table.
    pub fn new(size: usize, ops: Vec<(usize, Vec<usize>)>) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidAlgebra("universe must be non-empty".into()));
        }
        let mut checked = Vec::with_capacity(ops.len());
        for (i, (arity, table)) in ops.into_iter().enumerate() {
            let expected = table_len(size, arity).ok_or_else(|| {
                Error::InvalidAlgebra(format!("operation {i}: table for arity {arity} is too large"))
            })?;
            if table.len() != expected {
                return Err(Error::InvalidAlgebra(format!(
                    "operation {i}: expected {expected} table entries, found {}",
                    table.len()
                )));
            }
            if let Some(&bad) = table.iter().find(|&&y| y >= size) {
                return Err(Error::InvalidAlgebra(format!(
                    "operation {i}: value {bad} is outside the universe of size {size}"
                )));
            }
            checked.push(Operation { arity, table });
        }
        Ok(FiniteAlgebra {
            size,
            ops: checked,
            names: None,
        })
    }

    /// Attaches display names, one per element.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.size {
            return Err(Error::InvalidAlgebra(format!(
                "{} names for {} elements",
                names.len(),
                self.size
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ops(&self) -> &[Operation] {
        &self.ops
    }

    pub fn signature(&self) -> Vec<usize> {
        self.ops.iter().map(|o| o.arity).collect()
    }

    pub fn name(&self, x: usize) -> String {
        match &self.names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn apply(&self, op: usize, args: &[usize]) -> usize {
        let o = &self.ops[op];
        assert_eq!(args.len(), o.arity, "wrong number of arguments");
        self.index(o, args)
    }

    /// The subuniverse generated by `x`, sorted. Contains every constant.
    pub fn closure(&self, x: impl IntoIterator<Item = usize>) -> Vec<usize> {
        self.closure_from(&[], x)
    }

    /// Closure of `base ∪ extra`, where `base` is already closed.
    pub fn closure_from(&self, base: &[usize], extra: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut member = vec![false; self.size];
        let mut done = Vec::with_capacity(self.size);
        for &b in base {
            member[b] = true;
            done.push(b);
        }
        let mut queue = Vec::new();
        let constants = self.ops.iter().filter(|o| o.arity == 0).map(|o| o.table[0]);
        for x in constants.chain(extra) {
            assert!(x < self.size, "element {x} out of range");
            if !member[x] {
                member[x] = true;
                queue.push(x);
            }
        }
        let mut fresh = Vec::new();
        while let Some(e) = queue.pop() {
            done.push(e);
            for op in &self.ops {
                for_each_new_tuple(&done, op.arity, |args| fresh.push(self.index(op, args)));
            }
            for r in fresh.drain(..) {
                if !member[r] {
                    member[r] = true;
                    queue.push(r);
                }
            }
        }
        done.sort_unstable();
        done
    }

    pub(crate) fn index(&self, op: &Operation, args: &[usize]) -> usize {
        op.table[args.iter().fold(0, |acc, &a| acc * self.size + a)]
    }

    pub fn is_closed(&self, elements: &[usize]) -> bool {
        if elements.iter().any(|&x| x >= self.size) {
            return false;
        }
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        let sorted: Vec<usize> = set.into_iter().collect();
        !sorted.is_empty() && self.closure(sorted.iter().copied()) == sorted
    }
}

/// Calls `f` on every tuple over `done` that uses the last element of
/// `done`, each exactly once. Running this after every insertion visits
/// every tuple over the final set exactly once.
pub(crate) fn for_each_new_tuple(done: &[usize], arity: usize, mut f: impl FnMut(&[usize])) {
    let Some(last) = done.len().checked_sub(1) else {
        return;
    };
    if arity == 0 {
        return;
    }
    let mut idx = vec![0usize; arity];
    let mut args = vec![0usize; arity];
    for pivot in 0..arity {
        // positions before the pivot range over done[..last],
        // positions after it over done[..=last]
        if pivot > 0 && last == 0 {
            continue;
        }
        let bound = |j: usize| if j < pivot { last } else { last + 1 };
        idx.fill(0);
        idx[pivot] = last;
        'tuples: loop {
            for j in 0..arity {
                args[j] = done[idx[j]];
            }
            f(&args);
            let mut j = arity;
            loop {
                if j == 0 {
                    break 'tuples;
                }
                j -= 1;
                if j == pivot {
                    continue;
                }
                idx[j] += 1;
                if idx[j] < bound(j) {
                    break;
                }
                idx[j] = 0;
            }
        }
    }
}

/// A non-empty closed subset of a [`FiniteAlgebra`], sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubUniverse<'a> {
    parent: &'a FiniteAlgebra,
    elements: Vec<usize>,
}

impl<'a> SubUniverse<'a> {
    pub fn new(parent: &'a FiniteAlgebra, elements: Vec<usize>) -> Result<Self> {
        if !parent.is_closed(&elements) {
            return Err(Error::contract("elements do not form a non-empty closed subset"));
        }
        let mut elements = elements;
        elements.sort_unstable();
        elements.dedup();
        Ok(SubUniverse { parent, elements })
    }

    pub fn full(parent: &'a FiniteAlgebra) -> Self {
        SubUniverse {
            parent,
            elements: (0..parent.size()).collect(),
        }
    }

    pub fn parent(&self) -> &'a FiniteAlgebra {
        self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &SubUniverse<'_>) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }
}

/// All subuniverses of `fa`, sorted by size and then by elements.
///
/// Starts from the closures of single elements (and of the constants) and
/// keeps adding one outside element to every known subuniverse until
/// nothing new appears. Every subuniverse is reached this way, because it
/// is the closure of a chain of single-element extensions.
pub fn enumerate_subalgebras(fa: &FiniteAlgebra) -> Vec<SubUniverse<'_>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: Vec<Vec<usize>> = Vec::new();
    let mut push = |set: Vec<usize>, queue: &mut Vec<Vec<usize>>| {
        if !set.is_empty() && seen.insert(set.clone()) {
            queue.push(set);
        }
    };
    push(fa.closure([]), &mut queue);
    for x in 0..fa.size() {
        push(fa.closure([x]), &mut queue);
    }
    let mut found = Vec::new();
    while let Some(s) = queue.pop() {
        let mut member = vec![false; fa.size()];
        for &x in &s {
            member[x] = true;
        }
        for x in (0..fa.size()).filter(|&x| !member[x]) {
            push(fa.closure_from(&s, [x]), &mut queue);
        }
        found.push(s);
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found
        .into_iter()
        .map(|elements| SubUniverse { parent: fa, elements })
        .collect()
}

/// Whether `sub ∪ {b}` generates `amb` for some `b ∈ amb`.
pub fn is_large_subalgebra(sub: &SubUniverse<'_>, amb: &SubUniverse<'_>) -> Result<bool> {
    if !std::ptr::eq(sub.parent, amb.parent) {
        return Err(Error::contract("subuniverses belong to different algebras"));
    }
    if !sub.is_subset_of(amb) {
        return Err(Error::contract("first subuniverse is not contained in the second"));
    }
    let fa = sub.parent;
    Ok(amb
        .elements
        .iter()
        .any(|&b| fa.closure_from(&sub.elements, [b]).len() == amb.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Z_n under addition, negation and zero.
    fn zn(n: usize) -> FiniteAlgebra {
        let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let neg = (0..n).map(|x| (n - x) % n).collect();
        FiniteAlgebra::new(n, vec![(2, add), (1, neg), (0, vec![0])]).unwrap()
    }

    #[test]
    fn tuple_enumeration_is_exact() {
        let done = [4, 7, 9];
        for arity in 0..4 {
            let mut all = Vec::new();
            for k in 1..=done.len() {
                for_each_new_tuple(&done[..k], arity, |t| all.push(t.to_vec()));
            }
            let expected = if arity == 0 { 0 } else { 3usize.pow(arity as u32) };
            assert_eq!(all.len(), expected, "arity {arity}");
            let distinct: HashSet<_> = all.into_iter().collect();
            assert_eq!(distinct.len(), expected);
        }
    }

    #[test]
    fn closure_in_cyclic_group() {
        let z12 = zn(12);
        assert_eq!(z12.closure([]), vec![0]);
        assert_eq!(z12.closure([8]), vec![0, 4, 8]);
        assert_eq!(z12.closure([8, 3]).len(), 12);
        assert_eq!(z12.closure_from(&[0, 6], [4]), vec![0, 2, 4, 6, 8, 10]);
    }

    #[test]
    fn subgroups_of_cyclic_groups() {
        // one subgroup per divisor
        for (n, divisors) in [(1, 1), (6, 4), (12, 6), (7, 2)] {
            assert_eq!(enumerate_subalgebras(&zn(n)).len(), divisors, "Z_{n}");
        }
    }

    #[test]
    fn large_subgroups_of_z12() {
        let z = zn(12);
        let subs = enumerate_subalgebras(&z);
        let full = SubUniverse::full(&z);
        // in a cyclic group every subgroup is large (the generator suffices)
        for s in &subs {
            assert!(is_large_subalgebra(s, &full).unwrap());
        }
        let z4 = SubUniverse::new(&z, vec![0, 3, 6, 9]).unwrap();
        let z2 = SubUniverse::new(&z, vec![0, 6]).unwrap();
        assert!(is_large_subalgebra(&z2, &z4).unwrap());
        assert!(is_large_subalgebra(&z4, &z2).is_err());
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteAlgebra::new(0, vec![]).is_err());
        assert!(FiniteAlgebra::new(2, vec![(2, vec![0, 1, 1])]).is_err());
        assert!(FiniteAlgebra::new(2, vec![(1, vec![0, 2])]).is_err());
        assert!(FiniteAlgebra::new(2, vec![(40, vec![])]).is_err());
        assert!(SubUniverse::new(&zn(4), vec![0, 1]).is_err());
    }
}
