//! K-type spectra of induced modules and of the rings of regular functions
//! on orbits and their closures.

mod char_formula;

pub use char_formula::{char_formula_spectrum, char_formula_table, CharFormulaSpec, Family, WeylBlock, CHAR_FORMULA_MAX_RANK};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::orbit::Orbit;
use crate::params::{b_module_factors, Block, InducedForm};
use crate::weights::{diminutive_ktypes, ktypes_up_to_height, levi_decomposition, RootSystem, RootType};
use crate::{Error, Result};

/// Which K-types to evaluate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KtypeRequest {
    /// `(1^k 0^{n-k})`, `0 ≤ k ≤ n`.
    Diminutive,
    /// Every dominant weight with `Σ μ_i ≤ h`.
    UpToHeight(u64),
    Explicit(Vec<Vec<i64>>),
}

impl KtypeRequest {
    pub fn ktypes(&self, rank: usize) -> Result<Vec<Vec<i64>>> {
        match self {
            KtypeRequest::Diminutive => Ok(diminutive_ktypes(rank)),
            KtypeRequest::UpToHeight(h) => Ok(ktypes_up_to_height(rank, *h)),
            KtypeRequest::Explicit(list) => {
                let sys = RootSystem::new(RootType::C, rank);
                for mu in list {
                    sys.require_dominant(&mu.iter().map(|x| 2 * x).collect::<Vec<_>>())?;
                }
                Ok(list.clone())
            }
        }
    }
}

impl FromStr for KtypeRequest {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "diminutive" => Ok(KtypeRequest::Diminutive),
            other => match other.strip_prefix("height=") {
                Some(h) => h
                    .parse()
                    .map(KtypeRequest::UpToHeight)
                    .map_err(|_| Error::Parse(format!("bad height in {other:?}"))),
                None => Err(Error::Parse(format!("unknown K-type selection {other:?}"))),
            },
        }
    }
}

/// K-types (dominant `Sp(n)` weights) with multiplicities, in request
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiplicityTable {
    entries: Vec<(Vec<i64>, u64)>,
}

#[derive(Serialize, Deserialize)]
struct Row {
    ktype: Vec<i64>,
    mult: u64,
}

impl MultiplicityTable {
    pub fn from_entries(entries: Vec<(Vec<i64>, u64)>) -> MultiplicityTable {
        MultiplicityTable { entries }
    }

    pub fn entries(&self) -> &[(Vec<i64>, u64)] {
        &self.entries
    }

    /// Multiplicity of `ktype`; absent means zero.
    pub fn get(&self, ktype: &[i64]) -> u64 {
        self.entries.iter().find(|(k, _)| k == ktype).map_or(0, |(_, m)| *m)
    }

    /// Entrywise sum over the same K-type list.
    pub fn add(&self, other: &MultiplicityTable) -> MultiplicityTable {
        let mut sums: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        for (k, m) in self.entries.iter().chain(&other.entries) {
            *sums.entry(k.clone()).or_insert(0) += m;
        }
        let order = if self.entries.is_empty() { &other.entries } else { &self.entries };
        MultiplicityTable { entries: order.iter().map(|(k, _)| (k.clone(), sums[k])).collect() }
    }

    /// `[{"ktype":[..],"mult":n}, ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(
            self.entries.iter().map(|(k, m)| Row { ktype: k.clone(), mult: *m }).collect::<Vec<_>>(),
        )
        .expect("table json")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<MultiplicityTable> {
        let rows: Vec<Row> = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(MultiplicityTable { entries: rows.into_iter().map(|r| (r.ktype, r.mult)).collect() })
    }
}

impl fmt::Display for MultiplicityTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, m) in &self.entries {
            let k: Vec<String> = k.iter().map(i64::to_string).collect();
            writeln!(f, "({})\t{m}", k.join(","))?;
        }
        Ok(())
    }
}

/// Sort blocks so equal shapes share cache entries. Permuting blocks is a
/// Weyl group symmetry and leaves every multiplicity unchanged.
fn canonical_blocks(form: &InducedForm) -> (Vec<usize>, Vec<i64>) {
    let mut blocks: Vec<&Block> = form.blocks.iter().collect();
    blocks.sort_by(|a, b| b.size.cmp(&a.size).then_with(|| b.ktype.cmp(&a.ktype)));
    (blocks.iter().map(|b| b.size).collect(), blocks.iter().flat_map(|b| b.ktype.iter().copied()).collect())
}

/// `[Ind(⊠ blocks) : V_μ]` for one K-type, by Frobenius reciprocity.
pub fn induced_multiplicity(form: &InducedForm, ktype: &[i64]) -> Result<u64> {
    let n = form.rank();
    if ktype.len() != n {
        return Err(Error::ShapeMismatch(format!("K-type {ktype:?} for a module of rank {n}")));
    }
    if n == 0 {
        return Ok(1);
    }
    let (sizes, target) = canonical_blocks(form);
    let sys = RootSystem::new(RootType::C, n);
    let table = levi_decomposition(&sys, ktype, &sizes)?;
    Ok(table.get(&target).copied().unwrap_or(0))
}

/// Spectrum of an induced module on the requested K-types.
pub fn induced_spectrum(form: &InducedForm, req: &KtypeRequest) -> Result<MultiplicityTable> {
    let ktypes = req.ktypes(form.rank())?;
    let entries = ktypes
        .into_par_iter()
        .map(|mu| induced_multiplicity(form, &mu).map(|m| (mu, m)))
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiplicityTable { entries })
}

/// Block sizes `(b_{2i-1}+b_{2i})/2` for interior pairs and
/// `(b_0+b_{2k+1})/2` per chain.
pub fn orbit_shape(orbit: &Orbit) -> Result<Vec<usize>> {
    orbit.require_generic()?;
    let mut sizes = Vec::new();
    for chain in orbit.chain_decompose().chains() {
        sizes.extend(chain.interior_pairs().into_iter().map(|b| b as usize));
        sizes.push(((chain.first() + chain.last()) / 2) as usize);
    }
    sizes.retain(|&s| s > 0);
    Ok(sizes)
}

/// Block sizes `(c_{2i}+c_{2i+1})/2`.
pub fn pairs_shape(orbit: &Orbit) -> Result<Vec<usize>> {
    orbit.require_symplectic()?;
    Ok(orbit.columns().chunks(2).map(|p| ((p[0] + p[1]) / 2) as usize).filter(|&s| s > 0).collect())
}

/// Diminutive spectrum of the regular functions on a generic orbit.
pub fn r_orbit_spectrum(orbit: &Orbit, req: &KtypeRequest) -> Result<MultiplicityTable> {
    induced_spectrum(&InducedForm::trivial(&orbit_shape(orbit)?), req)
}

/// Diminutive spectrum of the regular functions on the closure of a
/// generic orbit, computed through the normal orbit `O^#`.
pub fn r_closure_spectrum(orbit: &Orbit, req: &KtypeRequest) -> Result<MultiplicityTable> {
    r_orbit_spectrum(&orbit.sharp_orbit()?, req)
}

/// Spectrum of the module induced from `{c_{2i}, c_{2i+1}}^+` blocks.
pub fn pairs_spectrum(orbit: &Orbit, req: &KtypeRequest) -> Result<MultiplicityTable> {
    induced_spectrum(&InducedForm::trivial(&pairs_shape(orbit)?), req)
}

/// Sum over `Norm(O)` of the spectra of the distinguished modules.
pub fn sum_distinguished_spectrum(orbit: &Orbit, req: &KtypeRequest) -> Result<MultiplicityTable> {
    let factors = b_module_factors(orbit)?;
    let tables = factors
        .par_iter()
        .map(|f| induced_spectrum(&f.to_induced_form(), req))
        .collect::<Result<Vec<_>>>()?;
    Ok(tables.iter().fold(MultiplicityTable::default(), |acc, t| acc.add(t)))
}

/// Normality read off the spectra: the orbit and its closure agree on every
/// diminutive K-type.
pub fn normality_by_spectrum(orbit: &Orbit) -> Result<bool> {
    Ok(r_orbit_spectrum(orbit, &KtypeRequest::Diminutive)? == r_closure_spectrum(orbit, &KtypeRequest::Diminutive)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(cols: &[u32]) -> Orbit {
        Orbit::symplectic(cols).unwrap()
    }

    fn mults(t: &MultiplicityTable) -> Vec<u64> {
        t.entries().iter().map(|e| e.1).collect()
    }

    #[test]
    fn small_induced_spectra() {
        let d = KtypeRequest::Diminutive;
        assert_eq!(mults(&induced_spectrum(&InducedForm::trivial(&[1, 1]), &d).unwrap()), vec![1, 0, 1]);
        assert_eq!(mults(&induced_spectrum(&InducedForm::trivial(&[2]), &d).unwrap()), vec![1, 0, 0]);
        assert_eq!(induced_multiplicity(&InducedForm::trivial(&[]), &[]).unwrap(), 1);
    }

    #[test]
    fn shapes() {
        assert_eq!(orbit_shape(&c(&[4, 2, 2, 0])).unwrap(), vec![2, 2]);
        assert_eq!(orbit_shape(&c(&[6, 4, 4, 2])).unwrap(), vec![4, 4]);
        assert_eq!(orbit_shape(&c(&[2, 2])).unwrap(), vec![2]);
        assert_eq!(pairs_shape(&c(&[6, 4, 4, 2])).unwrap(), vec![5, 3]);
        assert_eq!(pairs_shape(&c(&[4, 2, 2, 0])).unwrap(), vec![3, 1]);
    }

    #[test]
    fn normality_examples() {
        assert!(!normality_by_spectrum(&c(&[4, 2, 2, 0])).unwrap());
        assert!(normality_by_spectrum(&c(&[6, 4, 2, 0])).unwrap());
        assert!(normality_by_spectrum(&c(&[2, 2])).unwrap());
    }

    #[test]
    fn sum_identity_small() {
        let d = KtypeRequest::Diminutive;
        for cols in [&[4, 2, 2, 0][..], &[2, 2], &[6, 4, 4, 2]] {
            let o = c(cols);
            let sum = sum_distinguished_spectrum(&o, &d).unwrap();
            assert_eq!(sum, r_closure_spectrum(&o, &d).unwrap(), "{o}");
            assert_eq!(sum, pairs_spectrum(&o, &d).unwrap(), "{o}");
        }
    }

    #[test]
    fn char_formula_matches_distinguished_sum() {
        for cols in [&[6, 4, 4, 2][..], &[2, 2], &[4, 2], &[6, 4, 2, 2], &[8, 4, 2, 2]] {
            let o = c(cols);
            let spec = CharFormulaSpec::new(&o).unwrap();
            let d = KtypeRequest::Diminutive;
            assert_eq!(char_formula_table(&spec, &d).unwrap(), sum_distinguished_spectrum(&o, &d).unwrap(), "{o}");
        }
    }

    #[test]
    fn table_json_roundtrip() {
        let t = MultiplicityTable::from_entries(vec![(vec![1, 1, 0, 0], 3)]);
        assert_eq!(t.to_json().to_string(), r#"[{"ktype":[1,1,0,0],"mult":3}]"#);
        assert_eq!(MultiplicityTable::from_json(&t.to_json()).unwrap(), t);
        assert_eq!("height=2".parse::<KtypeRequest>().unwrap(), KtypeRequest::UpToHeight(2));
    }
}
