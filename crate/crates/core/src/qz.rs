//! Subgroups of `Q/Z` given by choice sequences.
//!
//! A choice sequence assigns to the `i`-th prime `p_i` an exponent
//! `k_i ∈ ℕ ∪ {∞}` and denotes the subgroup generated by the `p_i^{k_i}`-th
//! roots (all `p_i`-power roots when `k_i = ∞`). Only sequences equal to a
//! default value at all but finitely many positions are representable.
//! Primes are never materialized; positions are all that matter.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::distance::Distance;
use crate::error::{Error, Result};

/// A natural number or `∞`, with `Fin(n) < Inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtNat {
    Fin(u64),
    Inf,
}

impl ExtNat {
    pub fn is_inf(self) -> bool {
        self == ExtNat::Inf
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(n) => write!(f, "{n}"),
            ExtNat::Inf => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtNat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" => Ok(ExtNat::Inf),
            t => t
                .parse()
                .map(ExtNat::Fin)
                .map_err(|_| Error::parse(1, 1, format!("expected a natural number or `inf`, found `{t}`"))),
        }
    }
}

/// A choice sequence: `default` everywhere except at the listed positions.
/// Always normalized, so structural equality is equality of sequences.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChoiceSeq {
    default: ExtNat,
    exceptions: BTreeMap<u64, ExtNat>,
}

impl ChoiceSeq {
    pub fn new(default: ExtNat, exceptions: impl IntoIterator<Item = (u64, ExtNat)>) -> Self {
        let exceptions = exceptions.into_iter().filter(|&(_, v)| v != default).collect();
        ChoiceSeq { default, exceptions }
    }

    pub fn constant(default: ExtNat) -> Self {
        Self::new(default, [])
    }

    pub fn default_value(&self) -> ExtNat {
        self.default
    }

    pub fn exceptions(&self) -> &BTreeMap<u64, ExtNat> {
        &self.exceptions
    }

    pub fn get(&self, i: u64) -> ExtNat {
        self.exceptions.get(&i).copied().unwrap_or(self.default)
    }

    /// Positions where either sequence may differ from its default.
    fn support<'a>(&'a self, other: &'a ChoiceSeq) -> impl Iterator<Item = u64> + 'a {
        let mut keys: Vec<u64> = self.exceptions.keys().chain(other.exceptions.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
    }

    /// Pointwise maximum.
    pub fn join(&self, other: &ChoiceSeq) -> ChoiceSeq {
        let default = self.default.max(other.default);
        let exceptions: Vec<(u64, ExtNat)> = self.support(other).map(|i| (i, self.get(i).max(other.get(i)))).collect();
        ChoiceSeq::new(default, exceptions)
    }
}

impl fmt::Display for ChoiceSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "default={}", self.default)?;
        for (n, (i, v)) in self.exceptions.iter().enumerate() {
            write!(f, "{}{i}:{v}", if n == 0 { ';' } else { ',' })?;
        }
        Ok(())
    }
}

impl FromStr for ChoiceSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_choice_seq(s)
    }
}

/// Reads `default=<nat|inf>[;<idx>:<nat|inf>,...]`, e.g. `default=inf;0:3,5:2`.
/// Exceptions equal to the default are dropped; repeated indices are an
/// error.
pub fn parse_choice_seq(text: &str) -> Result<ChoiceSeq> {
    let bad = |col: usize, msg: String| Error::parse(1, col + 1, msg);
    let text = text.trim();
    let (head, tail) = match text.split_once(';') {
        Some((h, t)) => (h, Some(t)),
        None => (text, None),
    };
    let value = head
        .trim()
        .strip_prefix("default=")
        .ok_or_else(|| bad(0, format!("expected `default=`, found `{head}`")))?;
    let default: ExtNat = value.parse().map_err(|_| bad(8, format!("bad default value `{value}`")))?;
    let mut exceptions = BTreeMap::new();
    if let Some(tail) = tail {
        let mut col = head.len() + 1;
        for item in tail.split(',') {
            let (idx, val) = item
                .split_once(':')
                .ok_or_else(|| bad(col, format!("expected `<index>:<value>`, found `{item}`")))?;
            let i: u64 = idx.trim().parse().map_err(|_| bad(col, format!("bad index `{idx}`")))?;
            let v: ExtNat = val.parse().map_err(|_| bad(col, format!("bad value `{val}`")))?;
            if exceptions.insert(i, v).is_some() {
                return Err(bad(col, format!("index {i} given twice")));
            }
            col += item.len() + 1;
        }
    }
    Ok(ChoiceSeq::new(default, exceptions))
}

/// `k ≡ k'`: the same positions hold `∞`, and the sequences differ at only
/// finitely many positions.
pub fn seq_equiv(k: &ChoiceSeq, k2: &ChoiceSeq) -> bool {
    // differing defaults make both conditions fail infinitely often
    k.default == k2.default && k.support(k2).all(|i| k.get(i).is_inf() == k2.get(i).is_inf())
}

/// `k ⪯ k'`: `k ≡ k'` and `k_i ≤ k'_i` everywhere.
pub fn seq_preceq(k: &ChoiceSeq, k2: &ChoiceSeq) -> bool {
    seq_equiv(k, k2) && k.support(k2).all(|i| k.get(i) <= k2.get(i))
}

/// Generator distance between the subgroups denoted by `k` and `k2`.
pub fn qz_distance(k: &ChoiceSeq, k2: &ChoiceSeq) -> Distance {
    if k == k2 {
        Distance::ZERO
    } else if !seq_equiv(k, k2) {
        Distance::Infinite
    } else if seq_preceq(k, k2) || seq_preceq(k2, k) {
        Distance::from(1)
    } else {
        Distance::from(2)
    }
}

/// Diameter of the connected component containing `k`: 0, 1 or 2
/// according to whether none, one, or several positions are finite.
pub fn qz_diameter(k: &ChoiceSeq) -> Distance {
    if !k.default.is_inf() {
        return Distance::from(2);
    }
    let finite = k.exceptions.values().filter(|v| !v.is_inf()).count();
    Distance::from(finite.min(2) as u64)
}

impl PartialOrd for ChoiceSeq {
    /// The order `⪯`; `None` for incomparable sequences.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (seq_preceq(self, other), seq_preceq(other, self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtNat::{Fin, Inf};

    fn seq(s: &str) -> ChoiceSeq {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_normalize() {
        let k = seq("default=inf;0:3,5:2,7:inf");
        assert_eq!(k.exceptions().len(), 2);
        assert_eq!(k.get(5), Fin(2));
        assert_eq!(k.get(6), Inf);
        assert_eq!(k.to_string(), "default=inf;0:3,5:2");
        assert_eq!(seq(&k.to_string()), k);
        assert_eq!(seq(" default=0 "), ChoiceSeq::constant(Fin(0)));
        for bad in ["", "dflt=1", "default=x", "default=1;3", "default=1;a:2", "default=1;1:2,1:3", "default=-1"] {
            assert!(bad.parse::<ChoiceSeq>().is_err(), "{bad}");
        }
    }

    #[test]
    fn equivalence() {
        assert!(!seq_equiv(&seq("default=inf"), &seq("default=inf;0:3")));
        assert!(seq_equiv(&seq("default=inf;0:3"), &seq("default=inf;0:5")));
        // position 2 is infinite on one side only
        assert!(!seq_equiv(&seq("default=inf;0:3"), &seq("default=inf;0:5,2:1")));
        assert!(seq_equiv(&seq("default=4;0:inf"), &seq("default=4;0:inf,9:1")));
        assert!(!seq_equiv(&seq("default=0"), &seq("default=inf")));
    }

    #[test]
    fn order() {
        let k = seq("default=inf;0:2");
        assert!(seq_preceq(&k, &k));
        assert!(seq_preceq(&k, &seq("default=inf;0:3")));
        assert!(!seq_preceq(&seq("default=inf;0:2,1:5"), &seq("default=inf;0:3,1:4")));
        assert_eq!(k.partial_cmp(&seq("default=inf;0:3")), Some(Ordering::Less));
        assert_eq!(seq("default=inf;0:1").partial_cmp(&seq("default=inf;1:1")), None);
    }

    #[test]
    fn join_dominates() {
        let (a, b) = (seq("default=inf;0:1,1:5"), seq("default=inf;0:2,1:1"));
        let j = a.join(&b);
        assert!(seq_preceq(&a, &j) && seq_preceq(&b, &j));
        assert_eq!(j, seq("default=inf;0:2,1:5"));
        assert_eq!(qz_distance(&a, &b), Distance::from(2));
        assert_eq!(qz_distance(&a, &j) + qz_distance(&j, &b), Distance::from(2));
    }
}
