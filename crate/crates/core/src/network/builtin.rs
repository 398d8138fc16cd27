//! Ready-made operation-table algebras: permutation groups, cyclic groups,
//! Boolean algebras and direct products.

use super::algebra::{table_len, FiniteAlgebra};
use crate::error::{Error, Result};

/// Largest degree accepted for permutation groups.
pub const MAX_DEGREE: usize = 5;
/// Largest number of atoms accepted for Boolean algebras.
pub const MAX_ATOMS: usize = 4;
/// Largest order accepted for cyclic groups.
pub const MAX_CYCLIC: usize = 256;

/// `S_n` with composition, inverse and identity. Elements are the
/// permutations of `{1..n}` in lexicographic order, named in cycle
/// notation; `p·q` applies `q` first.
pub fn symmetric_group(n: usize) -> Result<FiniteAlgebra> {
    permutation_group(n, false)
}

/// `A_n`, the even permutations, with the same operations as `S_n`.
pub fn alternating_group(n: usize) -> Result<FiniteAlgebra> {
    permutation_group(n, true)
}

fn permutation_group(n: usize, even_only: bool) -> Result<FiniteAlgebra> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::InvalidAlgebra(format!("degree must be in 1..={MAX_DEGREE}, got {n}")));
    }
    let perms: Vec<Vec<usize>> = all_permutations(n)
        .into_iter()
        .filter(|p| !even_only || is_even(p))
        .collect();
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("closed under the operations");
    let m = perms.len();
    let mut mul = Vec::with_capacity(m * m);
    for p in &perms {
        for q in &perms {
            let pq: Vec<usize> = (0..n).map(|i| p[q[i]]).collect();
            mul.push(index(&pq));
        }
    }
    let inv = perms
        .iter()
        .map(|p| {
            let mut q = vec![0; n];
            for (i, &pi) in p.iter().enumerate() {
                q[pi] = i;
            }
            index(&q)
        })
        .collect();
    let identity: Vec<usize> = (0..n).collect();
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteAlgebra::new(m, vec![(2, mul), (1, inv), (0, vec![index(&identity)])])?.with_names(names)
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

/// Cycle notation on the points `1..=n`: each cycle starts at its least
/// point, cycles by least point, fixed points omitted, `e` for the
/// identity. Points above 9 are separated by commas.
pub fn cycle_notation(p: &[usize]) -> String {
    let wide = p.len() > 9;
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if wide && !first {
                out.push(',');
            }
            out.push_str(&(x + 1).to_string());
            first = false;
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// Parses cycle notation such as `(12)(34)`, `(1,3,2)` or `e` into a
/// permutation of `{0..n-1}` (so `1` denotes point 0). Without commas
/// every digit is one point.
pub fn parse_cycles(n: usize, text: &str) -> Result<Vec<usize>> {
    let bad = |msg: String| Error::parse(1, 1, msg);
    let mut p: Vec<usize> = (0..n).collect();
    let text = text.trim();
    if text == "e" || text.is_empty() {
        return Ok(p);
    }
    let mut moved = vec![false; n];
    let mut rest = text;
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(bad(format!("expected `(` in `{text}`")));
        };
        let end = body.find(')').ok_or_else(|| bad(format!("unclosed cycle in `{text}`")))?;
        let inner = &body[..end];
        let points: Vec<&str> = if inner.contains(',') {
            inner.split(',').map(str::trim).collect()
        } else {
            inner.split_whitespace().flat_map(|t| t.split_inclusive(|_| true)).collect()
        };
        let mut cycle = Vec::with_capacity(points.len());
        for s in points {
            let v: usize = s.parse().map_err(|_| bad(format!("bad point `{s}` in `{text}`")))?;
            if v == 0 || v > n {
                return Err(bad(format!("point {v} is outside 1..={n}")));
            }
            if std::mem::replace(&mut moved[v - 1], true) {
                return Err(bad(format!("point {v} appears twice in `{text}`")));
            }
            cycle.push(v - 1);
        }
        for (i, &x) in cycle.iter().enumerate() {
            p[x] = cycle[(i + 1) % cycle.len()];
        }
        rest = body[end + 1..].trim_start();
    }
    Ok(p)
}

/// `Z_n` with addition, negation and zero.
pub fn cyclic_group(n: usize) -> Result<FiniteAlgebra> {
    if n == 0 || n > MAX_CYCLIC {
        return Err(Error::InvalidAlgebra(format!("order must be in 1..={MAX_CYCLIC}, got {n}")));
    }
    let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    let neg = (0..n).map(|x| (n - x) % n).collect();
    FiniteAlgebra::new(n, vec![(2, add), (1, neg), (0, vec![0])])
}

/// The Boolean algebra of subsets of `k` atoms with join, meet,
/// complement, 0 and 1. Element `x` is the set of atoms whose bits are set
/// in `x`; atoms are named `a`, `b`, ...
pub fn boolean_algebra(k: usize) -> Result<FiniteAlgebra> {
    if k > MAX_ATOMS {
        return Err(Error::InvalidAlgebra(format!("at most {MAX_ATOMS} atoms, got {k}")));
    }
    let n = 1usize << k;
    let join = (0..n * n).map(|i| (i / n) | (i % n)).collect();
    let meet = (0..n * n).map(|i| (i / n) & (i % n)).collect();
    let comp = (0..n).map(|x| !x & (n - 1)).collect();
    let names = (0..n)
        .map(|x| match x {
            0 => "0".to_string(),
            _ if x == n - 1 => "1".to_string(),
            _ => (0..k).filter(|b| x >> b & 1 == 1).map(|b| (b'a' + b as u8) as char).collect(),
        })
        .collect();
    FiniteAlgebra::new(n, vec![(2, join), (2, meet), (1, comp), (0, vec![0]), (0, vec![n - 1])])?.with_names(names)
}

/// `a × b` with componentwise operations; `(x, y)` is element `x·|b| + y`.
pub fn direct_product(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    if a.signature() != b.signature() {
        return Err(Error::InvalidAlgebra("direct product needs equal signatures".into()));
    }
    let (na, nb) = (a.size(), b.size());
    let n = na * nb;
    let mut ops = Vec::with_capacity(a.ops().len());
    for (k, oa) in a.ops().iter().enumerate() {
        let arity = oa.arity();
        let len = table_len(n, arity).ok_or_else(|| Error::InvalidAlgebra("product is too large".into()))?;
        let mut table = Vec::with_capacity(len);
        let mut xs = vec![0; arity];
        let mut ys = vec![0; arity];
        for idx in 0..len {
            let mut rest = idx;
            for j in (0..arity).rev() {
                let e = rest % n;
                rest /= n;
                xs[j] = e / nb;
                ys[j] = e % nb;
            }
            table.push(a.apply(k, &xs) * nb + b.apply(k, &ys));
        }
        ops.push((arity, table));
    }
    let names = (0..n).map(|e| format!("({},{})", a.name(e / nb), b.name(e % nb))).collect();
    FiniteAlgebra::new(n, ops)?.with_names(names)
}

/// Parses `sym:N`, `alt:N`, `bool:K` or `cyclic:N`.
pub fn builtin(spec: &str) -> Result<FiniteAlgebra> {
    let bad = || Error::parse(1, 1, format!("unknown builtin `{spec}` (expected sym:N, alt:N, bool:K or cyclic:N)"));
    let (kind, arg) = spec.split_once(':').ok_or_else(bad)?;
    let arg: usize = arg.trim().parse().map_err(|_| bad())?;
    match kind.trim() {
        "sym" => symmetric_group(arg),
        "alt" => alternating_group(arg),
        "bool" => boolean_algebra(arg),
        "cyclic" => cyclic_group(arg),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        let orders: Vec<usize> = (1..=5).map(|n| symmetric_group(n).unwrap().size()).collect();
        assert_eq!(orders, [1, 2, 6, 24, 120]);
        let orders: Vec<usize> = (1..=5).map(|n| alternating_group(n).unwrap().size()).collect();
        assert_eq!(orders, [1, 1, 3, 12, 60]);
        assert!(symmetric_group(6).is_err());
        assert_eq!(boolean_algebra(3).unwrap().size(), 8);
    }

    #[test]
    fn group_axioms_hold() {
        let g = symmetric_group(4).unwrap();
        let e = g.apply(2, &[]);
        for x in 0..24 {
            assert_eq!(g.apply(0, &[x, e]), x);
            assert_eq!(g.apply(0, &[x, g.apply(1, &[x])]), e);
            for y in 0..24 {
                for z in 0..24 {
                    let l = g.apply(0, &[g.apply(0, &[x, y]), z]);
                    let r = g.apply(0, &[x, g.apply(0, &[y, z])]);
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn composition_order() {
        // q first: (12)·(23) sends 3 to 2 and then to 1
        let p = parse_cycles(3, "(12)").unwrap();
        let q = parse_cycles(3, "(23)").unwrap();
        let pq: Vec<usize> = (0..3).map(|i| p[q[i]]).collect();
        assert_eq!(cycle_notation(&pq), "(123)");
    }

    #[test]
    fn cycle_notation_round_trip() {
        for s in ["e", "(12)", "(12)(34)", "(1324)", "(1423)", "(243)"] {
            assert_eq!(cycle_notation(&parse_cycles(4, s).unwrap()), s);
        }
        assert_eq!(cycle_notation(&parse_cycles(4, "(324)").unwrap()), "(243)");
        assert_eq!(cycle_notation(&parse_cycles(4, "(1,2)").unwrap()), "(12)");
        assert!(parse_cycles(4, "(15)").is_err());
        assert!(parse_cycles(4, "(121)").is_err());
        assert!(parse_cycles(4, "(12").is_err());
    }

    #[test]
    fn product_and_spec() {
        let z2 = cyclic_group(2).unwrap();
        let v = direct_product(&z2, &z2).unwrap();
        assert_eq!(v.size(), 4);
        for x in 0..4 {
            assert_eq!(v.apply(0, &[x, x]), 0);
        }
        assert_eq!(builtin("alt:4").unwrap().size(), 12);
        assert!(builtin("sym4").is_err());
        assert!(builtin("foo:2").is_err());
    }
}
