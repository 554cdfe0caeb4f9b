//! Brute-force integer ranks of the classical Chow ring
//! `Z[t_ρ] / (monomials of non-faces, Σ ⟨e_i, v_ρ⟩ t_ρ)`, degree by degree.
//!
//! Works directly from a fan file with its own face test, monomial
//! enumeration and Hermite reduction, sharing nothing with the reduction
//! engine it checks.

use num_bigint::BigInt;

use crate::fanfile::FanFile;

fn monomials(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if degree == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in 0..=degree {
        for mut rest in monomials(nvars - 1, degree - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

fn is_face(file: &FanFile, exps: &[u32]) -> bool {
    let support: Vec<usize> = (0..exps.len()).filter(|&i| exps[i] > 0).map(|i| i + 1).collect();
    support.is_empty() || file.max_cones.iter().any(|c| support.iter().all(|r| c.contains(r)))
}

/// Rank of the row lattice, by Hermite row reduction.
pub fn hermite_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        loop {
            // smallest nonzero entry at or below `rank` becomes the pivot
            let pivot = (rank..rows.len())
                .filter(|&r| rows[r][c] != BigInt::from(0))
                .min_by(|&a, &b| rows[a][c].magnitude().cmp(rows[b][c].magnitude()));
            let Some(p) = pivot else { break };
            rows.swap(rank, p);
            let mut done = true;
            for r in rank + 1..rows.len() {
                if rows[r][c] == BigInt::from(0) {
                    continue;
                }
                let q = &rows[r][c] / &rows[rank][c];
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                if rows[r][c] != BigInt::from(0) {
                    done = false;
                }
            }
            if done {
                rank += 1;
                break;
            }
        }
    }
    rank
}

/// `Z`-ranks of the degree-`k` pieces for `k = 0..=max_degree`.
pub fn chow_ranks(file: &FanFile, max_degree: u32) -> Vec<usize> {
    let nvars = file.rays.len();
    (0..=max_degree)
        .map(|k| {
            let cols = monomials(nvars, k);
            let index = |m: &Vec<u32>| cols.iter().position(|c| c == m).expect("same degree");
            let mut rows: Vec<Vec<BigInt>> = Vec::new();
            for (j, m) in cols.iter().enumerate() {
                if !is_face(file, m) {
                    let mut row = vec![BigInt::from(0); cols.len()];
                    row[j] = BigInt::from(1);
                    rows.push(row);
                }
            }
            if k > 0 {
                for i in 0..file.rank {
                    for m in monomials(nvars, k - 1) {
                        let mut row = vec![BigInt::from(0); cols.len()];
                        for (r, v) in file.rays.iter().enumerate() {
                            let mut prod = m.clone();
                            prod[r] += 1;
                            row[index(&prod)] += v[i];
                        }
                        rows.push(row);
                    }
                }
            }
            cols.len() - if rows.is_empty() { 0 } else { hermite_rank(rows) }
        })
        .collect()
}
