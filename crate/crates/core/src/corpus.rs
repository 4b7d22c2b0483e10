//! Golden examples stored as TOML and replayed against the library.

use std::collections::BTreeSet;
use std::fmt;

use serde::Deserialize;

use crate::chain::Normality;
use crate::orbit::Orbit;
use crate::spectra::{normality_by_spectrum, orbit_shape, pairs_shape};
use crate::{Error, Result};

/// The corpus shipped with the crate.
pub const BUNDLED: &str = include_str!("../corpus/examples.toml");

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Published,
    ByHand,
    Computed,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(tag = "what", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Expectation {
    Chains { value: String, source: Source },
    ComponentGroupRank { value: usize, source: Source },
    LusztigQuotientRank { value: usize, source: Source },
    Normality { value: String, source: Source },
    NormalityBySpectrum { value: bool, source: Source },
    NormRows { value: Vec<Vec<String>>, source: Source },
    NormOrbits { value: Vec<String>, source: Source },
    NormMinimum { value: String, source: Source },
    ParamCount { value: usize, source: Source },
    MemberParamCounts { value: Vec<(String, usize)>, source: Source },
    Distinguished { value: Vec<String>, source: Source },
    DistinguishedSet { value: Vec<String>, source: Source },
    InfinitesimalCharacter { value: String, source: Source },
    Extract { generic: String, removed: Vec<u32>, source: Source },
    SharpOrbit { value: String, source: Source },
    ClosureShape { value: Vec<usize>, source: Source },
    OrbitShape { value: Vec<usize>, source: Source },
}

impl Expectation {
    pub fn label(&self) -> &'static str {
        match self {
            Expectation::Chains { .. } => "chains",
            Expectation::ComponentGroupRank { .. } => "component-group-rank",
            Expectation::LusztigQuotientRank { .. } => "lusztig-quotient-rank",
            Expectation::Normality { .. } => "normality",
            Expectation::NormalityBySpectrum { .. } => "normality-by-spectrum",
            Expectation::NormRows { .. } => "norm-rows",
            Expectation::NormOrbits { .. } => "norm-orbits",
            Expectation::NormMinimum { .. } => "norm-minimum",
            Expectation::ParamCount { .. } => "param-count",
            Expectation::MemberParamCounts { .. } => "member-param-counts",
            Expectation::Distinguished { .. } => "distinguished",
            Expectation::DistinguishedSet { .. } => "distinguished-set",
            Expectation::InfinitesimalCharacter { .. } => "infinitesimal-character",
            Expectation::Extract { .. } => "extract",
            Expectation::SharpOrbit { .. } => "sharp-orbit",
            Expectation::ClosureShape { .. } => "closure-shape",
            Expectation::OrbitShape { .. } => "orbit-shape",
        }
    }

    pub fn source(&self) -> Source {
        match self {
            Expectation::Chains { source, .. }
            | Expectation::ComponentGroupRank { source, .. }
            | Expectation::LusztigQuotientRank { source, .. }
            | Expectation::Normality { source, .. }
            | Expectation::NormalityBySpectrum { source, .. }
            | Expectation::NormRows { source, .. }
            | Expectation::NormOrbits { source, .. }
            | Expectation::NormMinimum { source, .. }
            | Expectation::ParamCount { source, .. }
            | Expectation::MemberParamCounts { source, .. }
            | Expectation::Distinguished { source, .. }
            | Expectation::DistinguishedSet { source, .. }
            | Expectation::InfinitesimalCharacter { source, .. }
            | Expectation::Extract { source, .. }
            | Expectation::SharpOrbit { source, .. }
            | Expectation::ClosureShape { source, .. }
            | Expectation::OrbitShape { source, .. } => *source,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    pub kind: String,
    pub orbit: String,
    pub checks: Vec<Expectation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct Corpus {
    #[serde(rename = "entry")]
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn parse(text: &str) -> Result<Corpus> {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn bundled() -> Corpus {
        Corpus::parse(BUNDLED).expect("bundled corpus parses")
    }

    pub fn check_count(&self) -> usize {
        self.entries.iter().map(|e| e.checks.len()).sum()
    }
}

/// Result of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub entry: String,
    pub what: &'static str,
    pub passed: bool,
    /// What the library produced, when it differs.
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "ok" } else { "MISMATCH" };
        write!(f, "{status:8} {} / {}", self.entry, self.what)?;
        if !self.passed {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

fn chain_text(o: &Orbit) -> String {
    o.chain_decompose().to_string()
}

fn columns_text(o: &Orbit) -> String {
    o.columns().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn sorted(v: impl IntoIterator<Item = String>) -> BTreeSet<String> {
    v.into_iter().collect()
}

/// Returns `Ok(None)` on a match, `Ok(Some(actual))` on a mismatch.
fn evaluate(orbit: &Orbit, check: &Expectation) -> Result<Option<String>> {
    let differ = |same: bool, actual: String| if same { None } else { Some(actual) };
    Ok(match check {
        Expectation::Chains { value, .. } => differ(chain_text(orbit) == *value, chain_text(orbit)),
        Expectation::ComponentGroupRank { value, .. } => {
            let r = orbit.component_group_rank()?;
            differ(r == *value, r.to_string())
        }
        Expectation::LusztigQuotientRank { value, .. } => {
            let r = orbit.lusztig_quotient_rank()?;
            differ(r == *value, r.to_string())
        }
        Expectation::Normality { value, .. } => {
            let got = match orbit.kp_normality()? {
                Normality::Normal => "normal",
                Normality::NonNormal { .. } => "non-normal",
            };
            differ(got == value, got.to_string())
        }
        Expectation::NormalityBySpectrum { value, .. } => {
            let got = normality_by_spectrum(orbit)?;
            differ(got == *value, got.to_string())
        }
        Expectation::NormRows { value, .. } => {
            let set = orbit.norm_set()?;
            let rows: Vec<Vec<String>> =
                set.by_co_rank().iter().map(|r| r.iter().map(|m| chain_text(m.orbit())).collect()).collect();
            differ(rows == *value, format!("{rows:?}"))
        }
        Expectation::NormOrbits { value, .. } => {
            let got = sorted(orbit.norm_set()?.orbits().map(chain_text));
            differ(got == sorted(value.iter().cloned()), format!("{got:?}"))
        }
        Expectation::NormMinimum { value, .. } => {
            let m = orbit.norm_minimum()?;
            differ(columns_text(&m) == *value, columns_text(&m))
        }
        Expectation::ParamCount { value, .. } => {
            let set = orbit.norm_set()?;
            let n: usize = set.members().iter().map(|m| set.attached_parameters(m).len()).sum();
            differ(n == *value, n.to_string())
        }
        Expectation::MemberParamCounts { value, .. } => {
            let set = orbit.norm_set()?;
            let mut got: Vec<(String, usize)> =
                set.members().iter().map(|m| (chain_text(m.orbit()), set.attached_parameters(m).len())).collect();
            let mut want = value.clone();
            got.sort();
            want.sort();
            differ(got == want, format!("{got:?}"))
        }
        Expectation::Distinguished { value, .. } => {
            let got: Vec<String> = orbit.norm_set()?.distinguished_all().iter().map(ToString::to_string).collect();
            differ(got == *value, format!("{got:?}"))
        }
        Expectation::DistinguishedSet { value, .. } => {
            let got = sorted(orbit.norm_set()?.distinguished_all().iter().map(ToString::to_string));
            differ(got == sorted(value.iter().cloned()), format!("{got:?}"))
        }
        Expectation::InfinitesimalCharacter { value, .. } => {
            let got: Vec<String> = orbit.infinitesimal_character()?.iter().map(ToString::to_string).collect();
            let got = got.join(",");
            differ(got == *value, got)
        }
        Expectation::Extract { generic, removed, .. } => {
            let (g, r) = orbit.extract_generic()?;
            differ(columns_text(&g) == *generic && r == *removed, format!("{} minus {r:?}", columns_text(&g)))
        }
        Expectation::SharpOrbit { value, .. } => {
            let s = orbit.sharp_orbit()?;
            differ(columns_text(&s) == *value, columns_text(&s))
        }
        Expectation::ClosureShape { value, .. } => {
            let s = pairs_shape(orbit)?;
            differ(s == *value, format!("{s:?}"))
        }
        Expectation::OrbitShape { value, .. } => {
            let s = orbit_shape(orbit)?;
            differ(s == *value, format!("{s:?}"))
        }
    })
}

/// Replay every check. Domain errors count as mismatches.
pub fn replay(corpus: &Corpus) -> Vec<Outcome> {
    let mut out = Vec::new();
    for entry in &corpus.entries {
        let orbit = Orbit::parse_with_kind(&entry.kind, &entry.orbit);
        for check in &entry.checks {
            let result = orbit.as_ref().map_err(Clone::clone).and_then(|o| evaluate(o, check));
            let (passed, detail) = match result {
                Ok(None) => (true, String::new()),
                Ok(Some(actual)) => (false, actual),
                Err(e) => (false, format!("error: {e}")),
            };
            out.push(Outcome { entry: entry.name.clone(), what: check.label(), passed, detail });
        }
    }
    out
}
