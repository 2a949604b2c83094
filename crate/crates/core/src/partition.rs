//! Integer partitions (type-A nilpotent orbits and SL(2)-types) and Levi block shapes.

use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter(
                "partition parts must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self(parts))
    }

    /// Builds from parts that are already weakly decreasing and positive.
    pub fn from_sorted(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!(
                "{parts:?} is not a weakly decreasing list of positive integers"
            )));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `(1,1,…,1)`: the zero orbit of GL(n).
    pub fn zero_orbit(n: usize) -> Self {
        Self(vec![1; n])
    }

    /// `(n)`: the principal orbit of GL(n).
    pub fn principal(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self(vec![n])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero_orbit(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    /// Conjugate partition: column lengths of the Young diagram.
    pub fn transpose(&self) -> Self {
        let width = self.0.first().copied().unwrap_or(0);
        Self(
            (1..=width)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::new(v).expect("parts of valid partitions are positive")
    }

    /// Dimension of the GL(n) nilpotent orbit: `n² − Σ (λ^t_j)²`.
    pub fn orbit_dimension(&self) -> usize {
        let n = self.total();
        n * n - self.transpose().0.iter().map(|c| c * c).sum::<usize>()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// Columnwise sum of partitions after zero padding.
///
/// In type A this is induction of nilpotent orbits from a Levi: the orbit
/// induced from `O_{p¹} × … × O_{pᵏ}` has partition `Σ_i p^i` taken columnwise.
pub fn partition_colsum(ps: &[Partition]) -> Result<Partition> {
    if ps.is_empty() {
        return Err(Error::EmptyInput(
            "partition_colsum needs at least one partition".into(),
        ));
    }
    let len = ps.iter().map(Partition::len).max().unwrap_or(0);
    let parts = (0..len)
        .map(|j| ps.iter().map(|p| p.0.get(j).copied().unwrap_or(0)).sum())
        .collect();
    Ok(Partition(parts))
}

/// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Ordered block sizes of a Levi subgroup `GL(n₁)×…×GL(n_k) ⊂ GL(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeviBlocks(Vec<usize>);

impl LeviBlocks {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() || blocks.contains(&0) {
            return Err(Error::BlockMismatch(format!(
                "Levi blocks must be a non-empty list of positive sizes, got {blocks:?}"
            )));
        }
        Ok(Self(blocks))
    }

    pub fn whole(n: usize) -> Self {
        Self(vec![n])
    }

    pub fn torus(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn blocks(&self) -> &[usize] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn count(&self) -> usize {
        self.0.len()
    }

    pub fn is_proper(&self) -> bool {
        self.0.len() > 1
    }

    /// Coordinate ranges covered by each block.
    pub fn ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.0
            .iter()
            .map(|&b| {
                let r = start..start + b;
                start += b;
                r
            })
            .collect()
    }
}

impl fmt::Display for LeviBlocks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// All compositions (ordered block lists) of `n`.
pub fn compositions_of(n: usize) -> Vec<LeviBlocks> {
    fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<LeviBlocks>) {
        if rest == 0 {
            out.push(LeviBlocks(cur.clone()));
            return;
        }
        for b in 1..=rest {
            cur.push(b);
            go(rest - b, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, &mut Vec::new(), &mut out);
    }
    out
}
