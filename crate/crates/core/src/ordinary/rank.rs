//! Rank tables, with honest integer ranks and torsion for integral laws.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{smith_normal_form, IntMatrix};
use crate::monomial::Monomial;

use super::{reduction_system, Presentation};

/// Rank of a finitely generated abelian group with its nontrivial invariant
/// factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralRank {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

/// `rank(k)` for `k = 0..=n`, plus integer data for integral laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRankTable {
    pub ranks: Vec<usize>,
    pub integral: Option<Vec<IntegralRank>>,
}

impl GradedRankTable {
    /// Rank in degree `k`; zero outside `0..=n`.
    pub fn rank(&self, k: i64) -> usize {
        usize::try_from(k).ok().and_then(|k| self.ranks.get(k)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.ranks.iter().sum()
    }

    pub fn has_torsion(&self) -> bool {
        self.integral.iter().flatten().any(|r| !r.torsion.is_empty())
    }

    /// Build for a presentation using the default base cone. For integral
    /// laws the engine count is checked against the integer computation.
    pub fn compute(pres: &Presentation, base: Option<usize>) -> Result<Self> {
        let sys = reduction_system(pres, base)?;
        let n = pres.rank() as u32;
        let ranks: Vec<usize> = (0..=n).map(|k| sys.graded_rank(k)).collect();
        let integral = if pres.kind().is_integral() {
            let table: Vec<IntegralRank> = (0..=n).map(|k| integral_rank(pres, k)).collect();
            for (k, (a, b)) in ranks.iter().zip(&table).enumerate() {
                if *a != b.rank {
                    return Err(Error::Internal(alloc::format!(
                        "degree {k}: reduction gives rank {a}, integer linear algebra gives {}",
                        b.rank
                    )));
                }
            }
            Some(table)
        } else {
            None
        };
        Ok(Self { ranks, integral })
    }
}

/// The degree-`k` part of the coefficient-free slice of the relations,
/// i.e. the specialization of all coefficient generators to zero, over `Z`.
pub fn integral_rank(pres: &Presentation, k: u32) -> IntegralRank {
    let nvars = pres.num_vars();
    let cols = Monomial::all_of_degree(nvars, k);
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for rel in pres.relations() {
        let slice = rel.scalar_slice();
        let Some(d) = slice.order() else { continue };
        if d > k {
            continue;
        }
        let part = slice.degree_part(d);
        for m in Monomial::all_of_degree(nvars, k - d) {
            let mut row = alloc::vec![BigInt::zero(); cols.len()];
            for (mono, c) in part.terms() {
                let prod = m.mul(mono);
                let j = cols.binary_search_by(|x| prod.cmp(x)).expect("degree-k monomial");
                row[j] += c.scalar_part().to_integer();
            }
            rows.push(row);
        }
    }
    if rows.is_empty() || cols.is_empty() {
        return IntegralRank { rank: cols.len(), torsion: Vec::new() };
    }
    let snf = smith_normal_form(&IntMatrix::from_rows(&rows));
    let factors = snf.invariant_factors();
    IntegralRank {
        rank: cols.len() - snf.rank(),
        torsion: factors.into_iter().filter(|f| !f.is_zero() && !f.is_one()).collect(),
    }
}
