//! Gradings by Λ ≅ ℕʳ, biadditive maps and the twisting bookkeeping.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of Λ ≅ ℕʳ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Degree(pub Vec<u32>);

impl Degree {
    pub fn zero(rank: usize) -> Self {
        Degree(vec![0; rank])
    }

    pub fn scalar(n: u32) -> Self {
        Degree(vec![n])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn signed(&self) -> GroupDegree {
        GroupDegree(self.0.iter().map(|&c| c as i64).collect())
    }

    /// `self - other` when it stays in Λ.
    pub fn checked_sub(&self, other: &Degree) -> Option<Degree> {
        assert_eq!(self.rank(), other.rank(), "degree rank mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Degree)
    }
}

impl Add<&Degree> for &Degree {
    type Output = Degree;

    fn add(self, rhs: &Degree) -> Degree {
        assert_eq!(self.rank(), rhs.rank(), "degree rank mismatch");
        Degree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An element of the Grothendieck group G(Λ) ≅ ℤʳ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupDegree(pub Vec<i64>);

impl GroupDegree {
    pub fn zero(rank: usize) -> Self {
        GroupDegree(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

impl Add<&GroupDegree> for &GroupDegree {
    type Output = GroupDegree;

    fn add(self, rhs: &GroupDegree) -> GroupDegree {
        assert_eq!(self.rank(), rhs.rank(), "degree rank mismatch");
        GroupDegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&GroupDegree> for &GroupDegree {
    type Output = GroupDegree;

    fn sub(self, rhs: &GroupDegree) -> GroupDegree {
        assert_eq!(self.rank(), rhs.rank(), "degree rank mismatch");
        GroupDegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for GroupDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A biadditive map Λ×Λ → ℤ, stored as the r×r matrix of its values on
/// standard generators; `(λ, μ) ↦ λᵀ M μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct BiadditiveMap {
    rank: usize,
    entries: Vec<i64>,
}

impl BiadditiveMap {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let rank = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != rank) {
            return Err(Error::NotSquare {
                rank,
                detail: format!("a row of length {}", bad.len()),
            });
        }
        Ok(BiadditiveMap {
            rank,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zero(rank: usize) -> Self {
        BiadditiveMap {
            rank,
            entries: vec![0; rank * rank],
        }
    }

    /// The rank-one map `ζ(m, n) = c·mn`.
    pub fn scalar(c: i64) -> Self {
        BiadditiveMap {
            rank: 1,
            entries: vec![c],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.rank.max(1))
            .take(self.rank)
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    fn check_rank(&self, found: usize) -> Result<()> {
        if found != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found,
            });
        }
        Ok(())
    }

    pub fn evaluate(&self, lambda: &Degree, mu: &Degree) -> Result<i64> {
        self.check_rank(lambda.rank())?;
        self.check_rank(mu.rank())?;
        Ok(self.eval(&lambda.signed(), &mu.signed()))
    }

    pub fn evaluate_signed(&self, lambda: &GroupDegree, mu: &GroupDegree) -> Result<i64> {
        self.check_rank(lambda.rank())?;
        self.check_rank(mu.rank())?;
        Ok(self.eval(lambda, mu))
    }

    /// Evaluation with ranks already validated by the caller.
    pub(crate) fn eval(&self, lambda: &GroupDegree, mu: &GroupDegree) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if lambda.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += lambda.0[i] * self.entries[i * self.rank + j] * mu.0[j];
            }
        }
        s
    }

    pub(crate) fn eval_deg(&self, lambda: &Degree, mu: &Degree) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if lambda.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += lambda.0[i] as i64 * self.entries[i * self.rank + j] * mu.0[j] as i64;
            }
        }
        s
    }

    pub fn transpose(&self) -> Self {
        let r = self.rank;
        let mut entries = vec![0; r * r];
        for i in 0..r {
            for j in 0..r {
                entries[j * r + i] = self.entries[i * r + j];
            }
        }
        BiadditiveMap { rank: r, entries }
    }

    fn zip(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Result<Self> {
        self.check_rank(other.rank)?;
        Ok(BiadditiveMap {
            rank: self.rank,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(*a, *b))
                .collect(),
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }
}

impl Neg for &BiadditiveMap {
    type Output = BiadditiveMap;

    fn neg(self) -> BiadditiveMap {
        BiadditiveMap {
            rank: self.rank,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl TryFrom<Vec<Vec<i64>>> for BiadditiveMap {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        BiadditiveMap::new(rows)
    }
}

impl From<BiadditiveMap> for Vec<Vec<i64>> {
    fn from(m: BiadditiveMap) -> Self {
        m.rows()
    }
}

impl fmt::Display for BiadditiveMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// A pair `(′, ″)` of biadditive maps; used for χ, ξ and γ alike.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistingDatum {
    pub prime: BiadditiveMap,
    pub doubleprime: BiadditiveMap,
}

impl TwistingDatum {
    pub fn new(prime: BiadditiveMap, doubleprime: BiadditiveMap) -> Result<Self> {
        prime.check_rank(doubleprime.rank)?;
        Ok(TwistingDatum { prime, doubleprime })
    }

    pub fn zero(rank: usize) -> Self {
        TwistingDatum {
            prime: BiadditiveMap::zero(rank),
            doubleprime: BiadditiveMap::zero(rank),
        }
    }

    pub fn rank(&self) -> usize {
        self.prime.rank
    }
}

impl fmt::Display for TwistingDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.prime, self.doubleprime)
    }
}

/// `ξ′ = χ′ᵀ + γ′ − γ″ᵀ`, `ξ″ = χ″ + γ′ − γ″`.
pub fn dual_twisting(chi: &TwistingDatum, gamma: &TwistingDatum) -> Result<TwistingDatum> {
    let xi1 = chi
        .prime
        .transpose()
        .try_add(&gamma.prime)?
        .try_sub(&gamma.doubleprime.transpose())?;
    let xi2 = chi.doubleprime.try_add(&gamma.prime)?.try_sub(&gamma.doubleprime)?;
    TwistingDatum::new(xi1, xi2)
}

/// `χ′ = −γ′ᵀ`; false on rank mismatch.
pub fn compatibility_check(chi: &TwistingDatum, gamma: &TwistingDatum) -> bool {
    chi.rank() == gamma.rank() && chi.prime == -&gamma.prime.transpose()
}

/// Shifts `α±` of the coproducts and `β±` of the products of `H±`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shift {
    pub alpha_plus: BiadditiveMap,
    pub alpha_minus: BiadditiveMap,
    pub beta_plus: BiadditiveMap,
    pub beta_minus: BiadditiveMap,
}

impl Shift {
    pub fn zero(rank: usize) -> Self {
        Shift {
            alpha_plus: BiadditiveMap::zero(rank),
            alpha_minus: BiadditiveMap::zero(rank),
            beta_plus: BiadditiveMap::zero(rank),
            beta_minus: BiadditiveMap::zero(rank),
        }
    }

    /// `α⁺ = α⁻ = α`, `β± = 0`.
    pub fn coproduct_only(alpha: BiadditiveMap) -> Self {
        let r = alpha.rank();
        Shift {
            alpha_plus: alpha.clone(),
            alpha_minus: alpha,
            beta_plus: BiadditiveMap::zero(r),
            beta_minus: BiadditiveMap::zero(r),
        }
    }

    /// `α⁺ = α⁻ = α`, `β⁺ = β`, `β⁻ = −βᵀ`; preserves compatibility.
    pub fn compatible(alpha: BiadditiveMap, beta: BiadditiveMap) -> Result<Self> {
        alpha.check_rank(beta.rank)?;
        let beta_minus = -&beta.transpose();
        Ok(Shift {
            alpha_plus: alpha.clone(),
            alpha_minus: alpha,
            beta_plus: beta,
            beta_minus,
        })
    }

    pub fn rank(&self) -> usize {
        self.alpha_plus.rank
    }

    fn check(&self) -> Result<()> {
        let r = self.rank();
        for m in [&self.alpha_minus, &self.beta_plus, &self.beta_minus] {
            m.check_rank(r)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedTwistings {
    pub chi: TwistingDatum,
    pub xi: TwistingDatum,
    pub gamma: TwistingDatum,
}

/// The six shifted maps `χ̃, ξ̃, γ̃`.
pub fn shift_twisting(
    chi: &TwistingDatum,
    xi: &TwistingDatum,
    gamma: &TwistingDatum,
    shift: &Shift,
) -> Result<ShiftedTwistings> {
    shift.check()?;
    let Shift {
        alpha_plus: ap,
        alpha_minus: am,
        beta_plus: bp,
        beta_minus: bm,
    } = shift;
    Ok(ShiftedTwistings {
        chi: TwistingDatum::new(
            chi.prime.try_add(&ap.transpose())?.try_add(bp)?,
            chi.doubleprime.try_add(ap)?.try_add(bp)?,
        )?,
        xi: TwistingDatum::new(
            xi.prime.try_add(&am.transpose())?.try_add(bm)?,
            xi.doubleprime.try_add(am)?.try_add(bm)?,
        )?,
        gamma: TwistingDatum::new(
            gamma.prime.try_sub(ap)?.try_add(bm)?,
            gamma.doubleprime.try_sub(am)?.try_add(bp)?,
        )?,
    })
}
