//! Independent branching oracle: build the Weyl character as an exact
//! Laurent polynomial and read block multiplicities off coefficients.
//!
//! For a block subgroup `L` with positive roots `Φ_L^+`, the coefficient of
//! `x^τ` in `χ_μ · ∏_{α ∈ Φ_L^+} (1 - x^{-α})` at an `L`-dominant `τ` is
//! the multiplicity of the `L`-module with highest weight `τ`.

use std::collections::BTreeMap;

use super::branching::LeviShape;
use super::laurent::Laurent;
use super::root::{RootSystem, RootType};
use crate::{Error, Result};

/// Largest rank the oracle accepts unless overridden.
pub const DEFAULT_ORACLE_BUDGET: usize = 5;

/// Environment variable overriding [`DEFAULT_ORACLE_BUDGET`].
pub const ORACLE_BUDGET_VAR: &str = "ORBITNORM_ORACLE_RANK";

/// The configured oracle rank budget.
pub fn oracle_budget() -> usize {
    std::env::var(ORACLE_BUDGET_VAR).ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_ORACLE_BUDGET)
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if prefix.len() == n {
            out.push((prefix.clone(), sign));
            return;
        }
        for i in 0..n {
            if used[i] {
                continue;
            }
            // inversions created by placing i after the unused smaller ones
            let inv = (0..i).filter(|&j| !used[j]).count();
            used[i] = true;
            prefix.push(i);
            rec(prefix, used, if inv % 2 == 0 { sign } else { -sign }, out);
            prefix.pop();
            used[i] = false;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], 1, &mut out);
    out
}

/// `χ_μ` of `Sp(n)` as a Laurent polynomial, via `A_{μ+ρ} / A_ρ`.
pub fn sp_character(highest: &[i64]) -> Result<Laurent> {
    let n = highest.len();
    let sys = RootSystem::new(RootType::C, n);
    let rho: Vec<i64> = sys.rho().iter().map(|r| r / 2).collect();
    let shifted: Vec<i64> = highest.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut alt = Laurent::new();
    for (perm, sign) in permutations(n) {
        for flips in 0u32..(1 << n) {
            let e: Vec<i64> = (0..n)
                .map(|i| {
                    let v = shifted[perm[i]];
                    if flips >> i & 1 == 1 {
                        -v
                    } else {
                        v
                    }
                })
                .collect();
            let s = if flips.count_ones() % 2 == 0 { sign } else { -sign };
            alt.add_term(e, s);
        }
    }
    let neg_rho: Vec<i64> = rho.iter().map(|r| -r).collect();
    let mut chi = alt.shift(&neg_rho);
    for a in sys.positive_roots() {
        let alpha: Vec<i64> = a.iter().map(|x| x / 2).collect();
        chi = chi.div_one_minus(&alpha, &rho)?;
    }
    Ok(chi)
}

/// Full block decomposition of `V_highest` computed by the oracle.
pub fn constant_term_decomposition(
    highest: &[i64],
    sizes: &[usize],
    budget: usize,
) -> Result<BTreeMap<Vec<i64>, u64>> {
    let n = highest.len();
    if n > budget {
        return Err(Error::RankBudgetExceeded { rank: n, budget });
    }
    if sizes.iter().sum::<usize>() != n || sizes.contains(&0) {
        return Err(Error::ShapeMismatch(format!("block sizes {sizes:?} do not partition rank {n}")));
    }
    let sys = RootSystem::new(RootType::C, n);
    sys.require_dominant(&highest.iter().map(|x| 2 * x).collect::<Vec<_>>())?;
    let mut poly = sp_character(highest)?;
    let mut offset = 0;
    for &a in sizes {
        for i in offset..offset + a {
            for j in i + 1..offset + a {
                let mut alpha = vec![0; n];
                alpha[i] = 1;
                alpha[j] = -1;
                poly = poly.mul_one_minus(&alpha);
            }
        }
        offset += a;
    }
    let levi_dominant = |e: &[i64]| {
        let mut offset = 0;
        sizes.iter().all(|&a| {
            let ok = e[offset..offset + a].windows(2).all(|p| p[0] >= p[1]);
            offset += a;
            ok
        })
    };
    let mut out = BTreeMap::new();
    for (e, &c) in poly.terms() {
        if levi_dominant(e) {
            if c < 0 {
                return Err(Error::NegativeMultiplicity(c));
            }
            out.insert(e.clone(), c as u64);
        }
    }
    Ok(out)
}

/// Oracle value of `[V_highest |_L : ⊠ V_{τ_i}]` for `Sp(n)`.
pub fn constant_term(sys: &RootSystem, highest: &[i64], shape: &LeviShape) -> Result<u64> {
    constant_term_with_budget(sys, highest, shape, oracle_budget())
}

pub fn constant_term_with_budget(sys: &RootSystem, highest: &[i64], shape: &LeviShape, budget: usize) -> Result<u64> {
    if sys.root_type() != RootType::C {
        return Err(Error::Unsupported("the oracle handles type C only".into()));
    }
    sys.check_rank(highest)?;
    let table = constant_term_decomposition(highest, &shape.block_sizes, budget)?;
    Ok(table.get(&shape.concatenated()).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().map(|p| p.1).sum::<i64>(), 0);
        assert!(perms.contains(&(vec![1, 0, 2], -1)));
        assert!(perms.contains(&(vec![1, 2, 0], 1)));
    }

    #[test]
    fn characters_of_small_modules() {
        let chi = sp_character(&[1, 0]).unwrap();
        assert_eq!(chi.len(), 4);
        assert!(chi.terms().all(|(_, &c)| c == 1));
        let chi = sp_character(&[1, 1]).unwrap();
        assert_eq!(chi.coefficient(&[0, 0]), 1);
        assert_eq!(chi.terms().map(|(_, c)| c).sum::<i64>(), 5);
        assert_eq!(sp_character(&[0, 0, 0]).unwrap(), Laurent::monomial(vec![0, 0, 0], 1));
    }

    #[test]
    fn oracle_examples() {
        let c2 = RootSystem::new(RootType::C, 2);
        assert_eq!(constant_term(&c2, &[1, 0], &LeviShape::trivial(&[2])).unwrap(), 0);
        assert_eq!(constant_term(&c2, &[1, 1], &LeviShape::trivial(&[2])).unwrap(), 0);
        assert_eq!(constant_term(&c2, &[2, 2], &LeviShape::trivial(&[2])).unwrap(), 1);
        assert_eq!(constant_term(&c2, &[1, 1], &LeviShape::trivial(&[1, 1])).unwrap(), 1);
        assert_eq!(constant_term(&c2, &[0, 0], &LeviShape::trivial(&[1, 1])).unwrap(), 1);
        let c6 = RootSystem::new(RootType::C, 6);
        assert_eq!(
            constant_term_with_budget(&c6, &[0; 6], &LeviShape::trivial(&[6]), 5),
            Err(Error::RankBudgetExceeded { rank: 6, budget: 5 })
        );
    }
}
