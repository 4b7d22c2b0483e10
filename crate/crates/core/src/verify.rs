//! Batch checks of the spectrum identities over enumerated orbits.

use std::fmt;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::chain::Normality;
use crate::enumerate::generic_orbits_up_to;
use crate::orbit::Orbit;
use crate::spectra::{
    char_formula_table, normality_by_spectrum, pairs_spectrum, r_closure_spectrum, sum_distinguished_spectrum,
    CharFormulaSpec, KtypeRequest, CHAR_FORMULA_MAX_RANK,
};
use crate::weights::{constant_term_decomposition, diminutive_ktypes, levi_decomposition, RootSystem, RootType};
use crate::Result;

/// Outcome of one batch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub name: &'static str,
    pub checked: usize,
    pub mismatches: Vec<String>,
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.checked > 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} checked, {} mismatches, {:.2?}",
            self.name,
            self.checked,
            self.mismatches.len(),
            self.elapsed
        )?;
        for m in self.mismatches.iter().take(10) {
            write!(f, "\n  {m}")?;
        }
        Ok(())
    }
}

fn run<T: Send + Sync>(
    name: &'static str,
    cases: Vec<T>,
    check: impl Fn(&T) -> Result<Option<String>> + Sync,
) -> Result<Report> {
    let start = Instant::now();
    let checked = cases.len();
    let mut mismatches: Vec<String> =
        cases.par_iter().map(&check).collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
    mismatches.sort();
    Ok(Report { name, checked, mismatches, elapsed: start.elapsed() })
}

fn values(t: &crate::spectra::MultiplicityTable) -> Vec<u64> {
    t.entries().iter().map(|e| e.1).collect()
}

/// Sum of distinguished spectra equals the module induced from the
/// `{c_{2i}, c_{2i+1}}^+` blocks, on diminutive K-types.
pub fn verify_sum_identity(max_size: u32) -> Result<Report> {
    run("sum-identity", generic_orbits_up_to(max_size), |o| {
        let d = KtypeRequest::Diminutive;
        let (sum, pairs) = (sum_distinguished_spectrum(o, &d)?, pairs_spectrum(o, &d)?);
        Ok((sum != pairs).then(|| format!("{o}: sum {:?} vs pairs {:?}", values(&sum), values(&pairs))))
    })
}

/// Sum of distinguished spectra equals the closure spectrum computed
/// through `O^#`.
pub fn verify_closure_bound(max_size: u32) -> Result<Report> {
    run("closure-bound", generic_orbits_up_to(max_size), |o| {
        let d = KtypeRequest::Diminutive;
        let (sum, closure) = (sum_distinguished_spectrum(o, &d)?, r_closure_spectrum(o, &d)?);
        Ok((sum != closure).then(|| format!("{o}: sum {:?} vs closure {:?}", values(&sum), values(&closure))))
    })
}

/// Spectral normality agrees with the chain criterion.
pub fn verify_normality(max_size: u32) -> Result<Report> {
    run("normality", generic_orbits_up_to(max_size), |o| {
        let by_chains = matches!(o.kp_normality()?, Normality::Normal);
        let by_spectrum = normality_by_spectrum(o)?;
        Ok((by_chains != by_spectrum).then(|| format!("{o}: chains say {by_chains}, spectrum says {by_spectrum}")))
    })
}

/// Orbits the character formula applies to, up to `max_size`.
pub fn char_formula_orbits(max_size: u32) -> Vec<Orbit> {
    generic_orbits_up_to(max_size)
        .into_iter()
        .filter(|o| o.rank() <= CHAR_FORMULA_MAX_RANK && CharFormulaSpec::new(o).is_ok())
        .collect()
}

/// Character formula against the distinguished sum on `req`.
pub fn verify_char_formula(orbits: Vec<Orbit>, req: &KtypeRequest) -> Result<Report> {
    run("char-formula", orbits, |o| {
        let spec = CharFormulaSpec::new(o)?;
        let (cf, sum) = (char_formula_table(&spec, req)?, sum_distinguished_spectrum(o, req)?);
        Ok((cf != sum).then(|| format!("{o}: formula {:?} vs sum {:?}", values(&cf), values(&sum))))
    })
}

/// Ordered block sizes summing to `n`.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// One oracle comparison: a K-type and a block shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCase {
    pub highest: Vec<i64>,
    pub sizes: Vec<usize>,
}

/// Every diminutive K-type against every block shape, for each rank up to
/// `max_rank`.
pub fn exhaustive_oracle_cases(max_rank: usize) -> Vec<OracleCase> {
    (1..=max_rank)
        .flat_map(|n| {
            let shapes = compositions(n);
            diminutive_ktypes(n).into_iter().flat_map(move |mu| {
                shapes.clone().into_iter().map(move |sizes| OracleCase { highest: mu.clone(), sizes })
            })
        })
        .collect()
}

/// `count` cases at `rank` with dominant weights of entries at most
/// `max_entry` and random block shapes.
pub fn random_oracle_cases(rank: usize, count: usize, max_entry: i64, seed: u64) -> Vec<OracleCase> {
    let mut rng = StdRng::seed_from_u64(seed);
    let shapes = compositions(rank);
    (0..count)
        .map(|_| {
            let mut highest: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=max_entry)).collect();
            highest.sort_unstable_by(|a, b| b.cmp(a));
            OracleCase { highest, sizes: shapes[rng.gen_range(0..shapes.len())].clone() }
        })
        .collect()
}

/// The full block decompositions from both algorithms must agree.
pub fn verify_oracle(cases: Vec<OracleCase>, budget: usize) -> Result<Report> {
    run("oracle", cases, |case| {
        let sys = RootSystem::new(RootType::C, case.highest.len());
        let fast = levi_decomposition(&sys, &case.highest, &case.sizes)?;
        let slow = constant_term_decomposition(&case.highest, &case.sizes, budget)?;
        Ok((*fast != slow).then(|| format!("{:?} on {:?}: {:?} vs {:?}", case.highest, case.sizes, fast, slow)))
    })
}
