//! Partition and composition combinatorics for `(k,c)` representations.
//!
//! Unipotent orbits are indexed by partitions; dominance orders them.
//! Compositions index the semi-Whittaker characters `ψ_λ`; they compare
//! through their underlying partitions.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::satake::{GroupData, GroupKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("malformed integer list {0:?}")]
    Malformed(String),
    #[error("partition parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("composition has size {got}, expected {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("{partition} is not a nilpotent orbit of {group}")]
    InvalidOrbit { partition: String, group: String },
    #[error("k and c must be at least 1")]
    ZeroParameter,
}

fn parse_list(s: &str) -> Result<Vec<usize>, OrbitError> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| OrbitError::Malformed(s.to_string()))
}

fn write_list(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    let s: Vec<String> = parts.iter().map(ToString::to_string).collect();
    f.write_str(&s.join(","))
}

/// Weakly decreasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, OrbitError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(OrbitError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// `(part^mult)`.
    pub fn rectangle(part: usize, mult: usize) -> Self {
        assert!(part > 0);
        Partition(vec![part; mult])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn multiplicity(&self, part: usize) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = OrbitError;
    fn from_str(s: &str) -> Result<Self, OrbitError> {
        Partition::new(parse_list(s)?)
    }
}

/// Sequence of non-negative integers. Zero parts are allowed; they are
/// dropped when passing to the underlying partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn underlying_partition(&self) -> Partition {
        let mut p: Vec<usize> = self.0.iter().copied().filter(|&x| x > 0).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Partition(p)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for Composition {
    type Err = OrbitError;
    fn from_str(s: &str) -> Result<Self, OrbitError> {
        Ok(Composition(parse_list(s)?))
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl fmt::Display for Dominance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dominance::Less => "LESS",
            Dominance::Equal => "EQUAL",
            Dominance::Greater => "GREATER",
            Dominance::Incomparable => "INCOMPARABLE",
        })
    }
}

/// Dominance order by zero-padded prefix sums. Different sizes are
/// incomparable.
pub fn dominance_compare(lambda: &Partition, mu: &Partition) -> Dominance {
    if lambda.size() != mu.size() {
        return Dominance::Incomparable;
    }
    let len = lambda.len().max(mu.len());
    let (mut sl, mut sm) = (0usize, 0usize);
    let (mut ge, mut le) = (true, true);
    for i in 0..len {
        sl += lambda.0.get(i).copied().unwrap_or(0);
        sm += mu.0.get(i).copied().unwrap_or(0);
        ge &= sl >= sm;
        le &= sl <= sm;
    }
    match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Greater,
        (false, true) => Dominance::Less,
        (false, false) => Dominance::Incomparable,
    }
}

/// The `(k,c)` vanishing condition: `λ` is greater than or not comparable
/// with `μ`.
pub fn greater_or_noncomparable(lambda: &Composition, mu: &Partition) -> bool {
    matches!(
        dominance_compare(&lambda.underlying_partition(), mu),
        Dominance::Greater | Dominance::Incomparable
    )
}

/// Parity rule for nilpotent orbits: for `Sp` odd parts have even
/// multiplicity, for `SO` even parts do; every partition is a `GL` orbit.
pub fn valid_nilpotent_orbit(group: GroupData, lambda: &Partition) -> bool {
    let bad_parity = match group.kind() {
        GroupKind::Sp => 1,
        GroupKind::So => 0,
        GroupKind::Gl => return true,
    };
    let mut distinct: Vec<usize> = lambda.0.clone();
    distinct.dedup();
    distinct
        .into_iter()
        .filter(|p| p % 2 == bad_parity)
        .all(|p| lambda.multiplicity(p) % 2 == 0)
}

/// `((2k−1)^c 1^c)`.
pub fn doubling_orbit(group: GroupData, k: usize, c: usize) -> Result<Partition, OrbitError> {
    if k == 0 || c == 0 {
        return Err(OrbitError::ZeroParameter);
    }
    let mut parts = vec![2 * k - 1; c];
    parts.extend(std::iter::repeat_n(1, c));
    let p = Partition(parts);
    if !valid_nilpotent_orbit(group, &p) {
        return Err(OrbitError::InvalidOrbit {
            partition: p.to_string(),
            group: group.to_string(),
        });
    }
    Ok(p)
}

/// Upper bound on `dim J_{N,ψ_λ}(σ_{k,c})` from the gluing filtration.
///
/// `B(1, c, λ) = 1` iff every part of `λ` is at most 1; otherwise
/// `B(k, c, λ) = Σ B(k−1, c, λ − ε)` over 0/1 vectors `ε ≤ λ` with `c` ones.
pub fn semi_whittaker_dim_bound(k: usize, c: usize, lambda: &Composition) -> Result<u64, OrbitError> {
    if k == 0 || c == 0 {
        return Err(OrbitError::ZeroParameter);
    }
    if lambda.size() != k * c {
        return Err(OrbitError::SizeMismatch {
            expected: k * c,
            got: lambda.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(bound_rec(k, c, lambda.parts(), &mut memo))
}

fn bound_rec(k: usize, c: usize, lambda: &[usize], memo: &mut HashMap<(usize, Vec<usize>), u64>) -> u64 {
    if k == 1 {
        return u64::from(lambda.iter().all(|&p| p <= 1));
    }
    let key = (k, lambda.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    let mut rest = lambda.to_vec();
    peel(&mut rest, 0, c, k, c, memo, &mut total);
    memo.insert(key, total);
    total
}

/// Enumerates 0/1 vectors with `remaining` ones from position `i` on,
/// subtracting them from `rest` in place.
fn peel(
    rest: &mut Vec<usize>,
    i: usize,
    remaining: usize,
    k: usize,
    c: usize,
    memo: &mut HashMap<(usize, Vec<usize>), u64>,
    total: &mut u64,
) {
    if remaining == 0 {
        *total += bound_rec(k - 1, c, rest, memo);
        return;
    }
    if rest.len() - i < remaining {
        return;
    }
    if rest[i] > 0 {
        rest[i] -= 1;
        peel(rest, i + 1, remaining - 1, k, c, memo, total);
        rest[i] += 1;
    }
    peel(rest, i + 1, remaining, k, c, memo, total);
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, usize::MAX)
}

/// Partitions of `n` with parts at most `max_part` and at most `max_len` parts.
pub fn partitions_bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    fn go(n: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            go(n - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n` into positive parts (`2^{n−1}` of them).
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition(Vec::new())];
    }
    (0u64..1 << (n - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for bit in 0..n - 1 {
                if mask >> bit & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Composition(parts)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(dominance_compare(&p("2,2"), &p("2,1,1")), Dominance::Greater);
        assert_eq!(dominance_compare(&p("2,1,1"), &p("2,2")), Dominance::Less);
        assert_eq!(dominance_compare(&p("3,1,1,1"), &p("2,2,2")), Dominance::Incomparable);
        assert_eq!(dominance_compare(&p("3,2,1"), &p("3,2,1")), Dominance::Equal);
        assert_eq!(dominance_compare(&p("3"), &p("2")), Dominance::Incomparable);
    }

    #[test]
    fn greater_or_noncomparable_examples() {
        let top = Partition::rectangle(2, 2);
        assert!(greater_or_noncomparable(&c("3,1"), &top));
        assert!(!greater_or_noncomparable(&c("2,2"), &top));
        assert!(!greater_or_noncomparable(&c("2,1,1"), &top));
        // zero parts are ignored; order of parts is irrelevant
        assert!(greater_or_noncomparable(&c("1,0,3"), &top));
    }

    #[test]
    fn orbit_validity() {
        assert!(valid_nilpotent_orbit(GroupData::sp(2), &p("3,3,1,1")));
        assert!(!valid_nilpotent_orbit(GroupData::sp(1), &p("3,1")));
        assert!(valid_nilpotent_orbit(GroupData::so(4), &p("2,2,1,1,1,1")));
        assert!(!valid_nilpotent_orbit(GroupData::so(2), &p("2,1,1")));
        assert!(valid_nilpotent_orbit(GroupData::gl(2), &p("3,1")));
    }

    #[test]
    fn doubling_orbits() {
        assert_eq!(doubling_orbit(GroupData::sp(2), 2, 4).unwrap(), p("3,3,3,3,1,1,1,1"));
        assert_eq!(doubling_orbit(GroupData::sp(1), 1, 2).unwrap(), p("1,1,1,1"));
        assert!(matches!(doubling_orbit(GroupData::sp(1), 2, 3), Err(OrbitError::InvalidOrbit { .. })));
        assert!(doubling_orbit(GroupData::so(2), 2, 3).is_ok());
        assert_eq!(doubling_orbit(GroupData::sp(1), 0, 2), Err(OrbitError::ZeroParameter));
    }

    #[test]
    fn dim_bound_examples() {
        assert_eq!(semi_whittaker_dim_bound(1, 3, &c("1,1,1")).unwrap(), 1);
        assert_eq!(semi_whittaker_dim_bound(2, 1, &c("2")).unwrap(), 1);
        assert_eq!(semi_whittaker_dim_bound(2, 2, &c("3,1")).unwrap(), 0);
        assert_eq!(semi_whittaker_dim_bound(2, 2, &c("2,2")).unwrap(), 1);
        assert_eq!(semi_whittaker_dim_bound(1, 2, &c("2")).unwrap(), 0);
        assert!(matches!(
            semi_whittaker_dim_bound(2, 2, &c("2,1")),
            Err(OrbitError::SizeMismatch { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn dim_bound_unrolled_by_hand() {
        // (2,1,1) with k=2, c=2: peel two ones from three slots.
        // (1,0,1),(1,1,0) are all ≤ 1 → 1 each; (2,0,0) → 0.
        assert_eq!(semi_whittaker_dim_bound(2, 2, &c("2,1,1")).unwrap(), 2);
    }

    #[test]
    fn enumerators() {
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(10).len(), 42);
        assert_eq!(compositions(4).len(), 8);
        assert!(compositions(6).iter().all(|c| c.size() == 6));
        assert_eq!(partitions_bounded(4, 4, 2).len(), 3);
    }

    #[test]
    fn malformed_input() {
        assert!("3,x".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("2,0,1".parse::<Composition>().is_ok());
    }
}
