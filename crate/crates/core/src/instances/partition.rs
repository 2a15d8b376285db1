//! Partitions, multipartitions and their colored sequences.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalars::{q_int_sym, RatFunc};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::OutOfRange("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `m_k(λ)`.
    pub fn multiplicity(&self, k: u32) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// `(k, m_k(λ))` for the distinct parts, ascending.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((k, m)) if *k == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `λ ⊕ k`.
    pub fn add(&self, k: u32) -> Result<Self> {
        let mut parts = self.parts.clone();
        parts.push(k);
        Partition::new(parts)
    }

    /// `λ ⊖ k`; fails when `k` is not a part.
    pub fn remove(&self, k: u32) -> Result<Self> {
        let pos = self
            .parts
            .iter()
            .position(|&p| p == k)
            .ok_or_else(|| Error::OutOfRange(format!("{self} has no part {k}")))?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Ok(Partition { parts })
    }

    /// `Z_λ = Π_k [k]^{m_k} m_k!`.
    pub fn z_quantum(&self) -> RatFunc {
        self.multiplicities()
            .into_iter()
            .map(|(k, m)| {
                let qk = q_int_sym(k as i64);
                let power: RatFunc = std::iter::repeat_n(qk, m).product();
                power * RatFunc::integer(factorial(m))
            })
            .product()
    }

    /// `z_λ = Π_k k^{m_k} m_k!`.
    pub fn z_classical(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .map(|(k, m)| BigInt::from(k).pow(m as u32) * factorial(m))
            .product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub(crate) fn factorial(m: usize) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, k| acc * k)
}

/// All partitions of `n`, in reverse lexicographic order of parts.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for k in (1..=max.min(n)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// One partition per color; colors are `1..=len`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        MultiPartition { components }
    }

    /// `λ` in color `i`, every other color empty.
    pub fn single(colors: usize, i: u32, lambda: Partition) -> Result<Self> {
        check_color(colors, i)?;
        let mut components = vec![Partition::empty(); colors];
        components[i as usize - 1] = lambda;
        Ok(MultiPartition { components })
    }

    pub fn colors(&self) -> usize {
        self.components.len()
    }

    /// `λⁱ` for a 1-based color.
    pub fn component(&self, i: u32) -> &Partition {
        &self.components[i as usize - 1]
    }

    pub fn size(&self) -> u32 {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn colored_sequence(&self) -> ColoredSequence {
        let mut entries = Vec::new();
        for (c, lambda) in self.components.iter().enumerate() {
            entries.extend(lambda.parts().iter().map(|&k| (k, c as u32 + 1)));
        }
        ColoredSequence::new(entries)
    }
}

pub(crate) fn check_color(colors: usize, i: u32) -> Result<()> {
    if i == 0 || i as usize > colors {
        return Err(Error::OutOfRange(format!("color {i} outside 1..={colors}")));
    }
    Ok(())
}

/// Lexicographically sorted `(part, color)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredSequence {
    entries: Vec<(u32, u32)>,
}

impl ColoredSequence {
    pub fn new(mut entries: Vec<(u32, u32)>) -> Self {
        entries.sort_unstable();
        ColoredSequence { entries }
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn prt(&self, r: usize) -> u32 {
        self.entries[r].0
    }

    pub fn clr(&self, r: usize) -> u32 {
        self.entries[r].1
    }

    pub fn size(&self) -> u32 {
        self.entries.iter().map(|e| e.0).sum()
    }

    pub fn to_multipartition(&self, colors: usize) -> Result<MultiPartition> {
        let mut parts = vec![Vec::new(); colors];
        for &(k, c) in &self.entries {
            check_color(colors, c)?;
            parts[c as usize - 1].push(k);
        }
        Ok(MultiPartition::new(
            parts.into_iter().map(Partition::new).collect::<Result<_>>()?,
        ))
    }

    /// Flattened `[k₁, c₁, k₂, c₂, …]`.
    pub fn to_key(&self) -> Vec<u32> {
        self.entries.iter().flat_map(|&(k, c)| [k, c]).collect()
    }

    pub fn from_key(key: &[u32]) -> Self {
        ColoredSequence {
            entries: key.chunks_exact(2).map(|c| (c[0], c[1])).collect(),
        }
    }

    /// Distinct entries with their multiplicities, ascending.
    pub fn grouped(&self) -> Vec<((u32, u32), usize)> {
        let mut out: Vec<((u32, u32), usize)> = Vec::new();
        for &e in &self.entries {
            match out.last_mut() {
                Some((f, m)) if *f == e => *m += 1,
                _ => out.push((e, 1)),
            }
        }
        out
    }

    /// The multiset union, resorted.
    pub fn union(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Self::new(entries)
    }

    /// Removes one copy of `entry`, if present.
    pub fn without(&self, entry: (u32, u32)) -> Option<Self> {
        let pos = self.entries.iter().position(|&e| e == entry)?;
        let mut entries = self.entries.clone();
        entries.remove(pos);
        Some(ColoredSequence { entries })
    }
}

/// All colored sequences of total size `n` over `colors` colors, sorted.
pub fn colored_sequences(n: u32, colors: usize) -> Vec<ColoredSequence> {
    fn go(n: u32, colors: u32, min: (u32, u32), prefix: &mut Vec<(u32, u32)>, out: &mut Vec<ColoredSequence>) {
        if n == 0 {
            out.push(ColoredSequence {
                entries: prefix.clone(),
            });
            return;
        }
        for k in min.0..=n {
            let first = if k == min.0 { min.1 } else { 1 };
            for c in first..=colors {
                prefix.push((k, c));
                go(n - k, colors, (k, c), prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, colors as u32, (1, 1), &mut Vec::new(), &mut out);
    out.sort();
    out
}
