use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};

use crate::{Error, Result};

/// A Laurent polynomial in `n` variables with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: HashMap<Vec<i64>, i64>,
}

impl Laurent {
    pub fn new() -> Laurent {
        Laurent::default()
    }

    pub fn monomial(exponent: Vec<i64>, coefficient: i64) -> Laurent {
        let mut p = Laurent::new();
        p.add_term(exponent, coefficient);
        p
    }

    pub fn add_term(&mut self, exponent: Vec<i64>, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        match self.terms.entry(exponent) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coefficient;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coefficient);
            }
        }
    }

    pub fn coefficient(&self, exponent: &[i64]) -> i64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &i64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiply by `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> Laurent {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c))
                .collect(),
        }
    }

    /// Multiply by `1 - x^{-alpha}`.
    pub fn mul_one_minus(&self, alpha: &[i64]) -> Laurent {
        let mut out = self.clone();
        let neg: Vec<i64> = alpha.iter().map(|a| -a).collect();
        for (e, &c) in &self.terms {
            let lowered: Vec<i64> = e.iter().zip(&neg).map(|(a, b)| a + b).collect();
            out.add_term(lowered, -c);
        }
        out
    }

    /// Exact division by `1 - x^{-alpha}`, where `height` pairs strictly
    /// positively with `alpha`.
    pub fn div_one_minus(&self, alpha: &[i64], height: &[i64]) -> Result<Laurent> {
        let pair = |e: &[i64]| -> i64 { e.iter().zip(height).map(|(a, b)| a * b).sum() };
        let step = pair(alpha);
        assert!(step > 0, "height does not separate {alpha:?}");
        let floor = self.terms.keys().map(|e| pair(e)).min().unwrap_or(0);
        let mut rest: BTreeMap<(i64, Vec<i64>), i64> =
            self.terms.iter().map(|(e, &c)| ((pair(e), e.clone()), c)).collect();
        let mut quotient = Laurent::new();
        while let Some(((h, top), c)) = rest.pop_last() {
            if c == 0 {
                continue;
            }
            if h - step < floor {
                return Err(Error::Unsupported(format!("division by 1 - x^-{alpha:?} is not exact")));
            }
            quotient.add_term(top.clone(), c);
            let lowered: Vec<i64> = top.iter().zip(alpha).map(|(a, b)| a - b).collect();
            *rest.entry((h - step, lowered)).or_insert(0) += c;
        }
        Ok(quotient)
    }
}
