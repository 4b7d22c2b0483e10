//! Alternating-sum character formula for the closure of an even generic
//! orbit `(c_0, …, c_{2p+1})`, evaluated one K-type at a time through weight
//! multiplicities.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use super::{KtypeRequest, MultiplicityTable};
use crate::orbit::Orbit;
use crate::weights::{dominant_weights, RootSystem, RootType};
use crate::{Error, Result};

/// Largest rank `char_formula_spectrum` accepts.
pub const CHAR_FORMULA_MAX_RANK: usize = 8;

/// One Weyl group factor with the coordinates it acts on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylBlock {
    pub root_type: RootType,
    pub weight: Vec<i64>,
}

impl WeylBlock {
    fn new(root_type: RootType, weight: Vec<i64>) -> WeylBlock {
        WeylBlock { root_type, weight }
    }

    pub fn rank(&self) -> usize {
        self.weight.len()
    }

    /// `λ - wλ` with `sgn(w)`, summed over the group and collected.
    fn differences(&self) -> HashMap<Vec<i64>, i64> {
        let n = self.rank();
        let mut out = HashMap::new();
        for (perm, sign) in permutations(n) {
            for flips in 0u32..(1 << n) {
                if self.root_type == RootType::D && flips.count_ones() % 2 == 1 {
                    continue;
                }
                let s = if flips.count_ones() % 2 == 0 { sign } else { -sign };
                let diff: Vec<i64> = (0..n)
                    .map(|i| {
                        let v = self.weight[perm[i]];
                        self.weight[i] - if flips >> i & 1 == 1 { -v } else { v }
                    })
                    .collect();
                *out.entry(diff).or_insert(0) += s;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

impl fmt::Display for WeylBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.root_type {
            RootType::D => "D",
            _ => "C",
        };
        write!(f, "{letter}{}", self.rank())
    }
}

/// The summand for one subset `I`: `μ_j` for `j ∉ I`, `ν_i` for `i ∈ I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub subset: Vec<usize>,
    pub blocks: Vec<WeylBlock>,
}

impl Family {
    /// The concatenated weight `λ_I`.
    pub fn weight(&self) -> Vec<i64> {
        self.blocks.iter().flat_map(|b| b.weight.iter().copied()).collect()
    }

    /// Weyl factor labels, e.g. `C3 x D2 x C2 x D1`. Empty factors are
    /// omitted.
    pub fn weyl_label(&self) -> String {
        let parts: Vec<String> = self.blocks.iter().filter(|b| b.rank() > 0).map(WeylBlock::to_string).collect();
        parts.join(" x ")
    }

    fn signed_differences(&self) -> HashMap<Vec<i64>, i64> {
        let mut acc: HashMap<Vec<i64>, i64> = HashMap::from([(Vec::new(), 1)]);
        for block in &self.blocks {
            let local = block.differences();
            let mut next = HashMap::new();
            for (prefix, c) in &acc {
                for (tail, d) in &local {
                    let mut v = prefix.clone();
                    v.extend_from_slice(tail);
                    *next.entry(v).or_insert(0) += c * d;
                }
            }
            next.retain(|_, c: &mut i64| *c != 0);
            acc = next;
        }
        acc
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .filter(|b| b.rank() > 0)
            .map(|b| b.weight.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}: ({})", self.weyl_label(), parts.join(";"))
    }
}

/// Data of the character formula: the weights `μ_i`, `ν_i` and one family
/// per subset `I ⊆ {0, …, p}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharFormulaSpec {
    orbit: Orbit,
    families: Vec<Family>,
}

fn descending(top: i64, bottom: i64) -> Vec<i64> {
    (bottom..=top).rev().collect()
}

impl CharFormulaSpec {
    /// Requires an even generic symplectic orbit with every `c_{2i+1} ≥ 2`.
    pub fn new(orbit: &Orbit) -> Result<CharFormulaSpec> {
        orbit.require_generic()?;
        let cols: Vec<i64> = orbit.columns().iter().map(|&c| i64::from(c)).collect();
        if cols.iter().any(|c| c % 2 == 1) {
            return Err(Error::Unsupported(format!("{orbit} is not even")));
        }
        if cols.chunks(2).any(|p| p[1] < 2) {
            return Err(Error::Unsupported(format!("{orbit} has an odd-indexed column below 2")));
        }
        let pairs: Vec<(i64, i64)> = cols.chunks(2).map(|p| (p[0], p[1])).collect();
        let mu = |(a, b): (i64, i64)| {
            [WeylBlock::new(RootType::C, descending(a / 2, 1)), WeylBlock::new(RootType::D, descending(b / 2 - 1, 0))]
        };
        let nu = |(a, b): (i64, i64)| {
            [WeylBlock::new(RootType::C, descending(b / 2 - 1, 1)), WeylBlock::new(RootType::D, descending(a / 2, 0))]
        };
        let count = pairs.len();
        let families = (0..1usize << count)
            .map(|mask| {
                // index 0 is the most significant bit, matching the usual display order
                let subset: Vec<usize> = (0..count).filter(|i| mask >> (count - 1 - i) & 1 == 1).collect();
                let blocks = pairs
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &pair)| if subset.contains(&i) { nu(pair) } else { mu(pair) })
                    .collect();
                Family { subset, blocks }
            })
            .collect();
        Ok(CharFormulaSpec { orbit: orbit.clone(), families })
    }

    pub fn orbit(&self) -> &Orbit {
        &self.orbit
    }

    /// `p + 1`, the number of column pairs.
    pub fn pair_count(&self) -> usize {
        self.orbit.columns().len() / 2
    }

    pub fn divisor(&self) -> i64 {
        1 << self.pair_count()
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn rank(&self) -> usize {
        self.orbit.rank()
    }
}

impl fmt::Display for CharFormulaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: 1/{} x", self.orbit, self.divisor())?;
        for family in &self.families {
            writeln!(f, "  {family}")?;
        }
        Ok(())
    }
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    heap(n, &mut perm, &mut 1, &mut out);
    out
}

// Heap's algorithm; each swap flips the sign
fn heap(k: usize, perm: &mut Vec<usize>, sign: &mut i64, out: &mut Vec<(Vec<usize>, i64)>) {
    if k <= 1 {
        out.push((perm.clone(), *sign));
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, perm, sign, out);
        let j = if k % 2 == 0 { i } else { 0 };
        perm.swap(j, k - 1);
        *sign = -*sign;
    }
    heap(k - 1, perm, sign, out);
}

/// Signed, collected `Σ_w sgn(w) e^{λ_I - wλ_I}` over all families, keyed by
/// dominant representative.
fn collected_terms(spec: &CharFormulaSpec) -> HashMap<Vec<i64>, i64> {
    let sys = RootSystem::new(RootType::C, spec.rank());
    let mut out: HashMap<Vec<i64>, i64> = HashMap::new();
    for family in &spec.families {
        for (v, c) in family.signed_differences() {
            let doubled: Vec<i64> = v.iter().map(|x| 2 * x).collect();
            *out.entry(sys.dominant_rep(&doubled)).or_insert(0) += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Multiplicity of `V_μ` in the closure's ring of functions according to
/// the character formula.
pub fn char_formula_spectrum(spec: &CharFormulaSpec, mu: &[i64]) -> Result<u64> {
    char_formula_table(spec, &KtypeRequest::Explicit(vec![mu.to_vec()])).map(|t| t.entries()[0].1)
}

/// `char_formula_spectrum` over a list of K-types.
pub fn char_formula_table(spec: &CharFormulaSpec, req: &KtypeRequest) -> Result<MultiplicityTable> {
    let n = spec.rank();
    if n > CHAR_FORMULA_MAX_RANK {
        return Err(Error::RankBudgetExceeded { rank: n, budget: CHAR_FORMULA_MAX_RANK });
    }
    let ktypes = req.ktypes(n)?;
    let terms = collected_terms(spec);
    let sys = RootSystem::new(RootType::C, n);
    let entries = ktypes
        .into_par_iter()
        .map(|mu| {
            let doubled: Vec<i64> = mu.iter().map(|x| 2 * x).collect();
            let weights = dominant_weights(&sys, &doubled)?;
            let mut sum: i64 = 0;
            for (w, c) in &terms {
                sum += c * weights.get(w) as i64;
            }
            let divisor = spec.divisor();
            if sum % divisor != 0 {
                return Err(Error::NonIntegralResult { sum, divisor });
            }
            let m = sum / divisor;
            if m < 0 {
                return Err(Error::NegativeMultiplicity(m));
            }
            Ok((mu, m as u64))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiplicityTable::from_entries(entries))
}
