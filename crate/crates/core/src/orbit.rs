//! Nilpotent orbits recorded by the columns of their Young diagram.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::halfint::HalfInt;
use crate::{Error, Result};

/// Which classical group the orbit lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    /// `Sp(2n, ℂ)`, type C.
    Symplectic,
    /// `O(n, ℂ)`, types B and D.
    Orthogonal,
}

impl GroupKind {
    /// Parse a kind flag. `B` and `D` both mean orthogonal.
    pub fn from_flag(flag: &str) -> Result<Self> {
        match flag.trim() {
            "C" | "c" => Ok(GroupKind::Symplectic),
            "B" | "b" | "D" | "d" => Ok(GroupKind::Orthogonal),
            other => Err(Error::Parse(format!("unknown group kind {other:?}, expected C, B or D"))),
        }
    }
}

/// A validated nilpotent orbit in canonical column form.
///
/// Symplectic orbits carry an even number of columns and orthogonal orbits an
/// odd number; in both cases a single trailing zero is appended only when the
/// count needs it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orbit {
    kind: GroupKind,
    columns: Vec<u32>,
}

impl Orbit {
    /// Validate `columns` as an orbit of the given kind.
    pub fn new(kind: GroupKind, columns: &[u32]) -> Result<Self> {
        for (i, w) in columns.windows(2).enumerate() {
            if w[1] > w[0] {
                return Err(Error::NotDecreasing { index: i + 1, value: w[1] });
            }
        }
        let columns = canonical_columns(kind, columns);
        match kind {
            GroupKind::Symplectic => {
                for (pair, c) in columns.chunks(2).enumerate() {
                    if (c[0] + c[1]) % 2 != 0 {
                        return Err(Error::ParityViolation { pair });
                    }
                }
            }
            GroupKind::Orthogonal => {
                let rows = transpose(&columns);
                let mut i = 0;
                while i < rows.len() {
                    let run = rows[i..].iter().take_while(|&&r| r == rows[i]).count();
                    if rows[i] % 2 == 0 && run % 2 == 1 {
                        return Err(Error::InvalidOrthogonal { row: rows[i] });
                    }
                    i += run;
                }
            }
        }
        Ok(Orbit { kind, columns })
    }

    pub fn symplectic(columns: &[u32]) -> Result<Self> {
        Orbit::new(GroupKind::Symplectic, columns)
    }

    pub fn orthogonal(columns: &[u32]) -> Result<Self> {
        Orbit::new(GroupKind::Orthogonal, columns)
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    /// Columns with trailing zeros removed.
    pub fn nonzero_columns(&self) -> &[u32] {
        let end = self.columns.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1);
        &self.columns[..end]
    }

    /// Number of boxes in the diagram.
    pub fn size(&self) -> u64 {
        self.columns.iter().map(|&c| u64::from(c)).sum()
    }

    /// `n` for `Sp(2n)`.
    pub fn rank(&self) -> usize {
        (self.size() / 2) as usize
    }

    /// Row lengths (the partition of the Jordan type).
    pub fn rows(&self) -> Vec<u32> {
        transpose(&self.columns)
    }

    /// `C`, `B` or `D`.
    pub fn kind_letter(&self) -> &'static str {
        match self.kind {
            GroupKind::Symplectic => "C",
            GroupKind::Orthogonal if self.size() % 2 == 1 => "B",
            GroupKind::Orthogonal => "D",
        }
    }

    pub(crate) fn require_symplectic(&self) -> Result<()> {
        match self.kind {
            GroupKind::Symplectic => Ok(()),
            GroupKind::Orthogonal => Err(Error::KindMismatch { expected: "symplectic" }),
        }
    }

    /// Lusztig's special condition: an odd `c_{2i}` must equal `c_{2i+1}`.
    pub fn is_special(&self) -> Result<bool> {
        self.require_symplectic()?;
        Ok(self.columns.chunks(2).all(|c| c[0] % 2 == 0 || c[0] == c[1]))
    }

    /// Per-column segments of the infinitesimal character.
    ///
    /// `c_{2i}` contributes `c/2, c/2 - 1, …` down to its last positive
    /// value, `c_{2i+1}` contributes `c/2 - 1, …` down to its last
    /// nonnegative value.
    pub fn infinitesimal_segments(&self) -> Result<Vec<Vec<HalfInt>>> {
        self.require_symplectic()?;
        Ok(self
            .columns
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let top = i64::from(c) - if i % 2 == 0 { 0 } else { 2 };
                let floor = if i % 2 == 0 { 1 } else { 0 };
                (0..)
                    .map(|j| top - 2 * j)
                    .take_while(|&d| d >= floor)
                    .map(HalfInt::from_doubled)
                    .collect()
            })
            .collect())
    }

    /// The infinitesimal character as a weakly decreasing multiset.
    pub fn infinitesimal_character(&self) -> Result<Vec<HalfInt>> {
        let mut all: Vec<HalfInt> = self.infinitesimal_segments()?.into_iter().flatten().collect();
        all.sort_unstable_by(|a, b| b.cmp(a));
        Ok(all)
    }

    /// Closure order: `self ⊆ closure(other)`, i.e. the rows of `self` are
    /// dominated by the rows of `other`.
    pub fn closure_leq(&self, other: &Orbit) -> Result<bool> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch {
                expected: match other.kind {
                    GroupKind::Symplectic => "symplectic",
                    GroupKind::Orthogonal => "orthogonal",
                },
            });
        }
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { left: self.size(), right: other.size() });
        }
        Ok(dominated_by(&self.rows(), &other.rows()))
    }

    /// Symplectic orbit obtained by prepending the column `c_1 + 2`.
    pub fn to_symplectic(&self) -> Result<Orbit> {
        if self.kind != GroupKind::Orthogonal {
            return Err(Error::KindMismatch { expected: "orthogonal" });
        }
        let mut cols = Vec::with_capacity(self.columns.len() + 1);
        cols.push(self.columns[0] + 2);
        cols.extend_from_slice(&self.columns);
        Orbit::symplectic(&cols)
    }

    /// Inverse of [`Orbit::to_symplectic`]: drop the leading column.
    pub fn to_orthogonal(&self) -> Result<Orbit> {
        self.require_symplectic()?;
        let expected = self.columns.get(1).copied().unwrap_or(0) + 2;
        let found = self.columns.first().copied().unwrap_or(0);
        if found != expected {
            return Err(Error::LeadingColumnMissing { expected, found });
        }
        Orbit::orthogonal(&self.columns[1..])
    }

    /// `{"kind":"C","columns":[...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(OrbitJson { kind: self.kind_letter().to_string(), columns: self.columns.clone() })
            .expect("orbit json")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: OrbitJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let orbit = Orbit::new(GroupKind::from_flag(&raw.kind)?, &raw.columns)?;
        check_letter(&orbit, &raw.kind)?;
        Ok(orbit)
    }

    /// Parse the `C 8,6,6,4` style pair of kind flag and column list.
    pub fn parse_with_kind(flag: &str, columns: &str) -> Result<Self> {
        let orbit = Orbit::new(GroupKind::from_flag(flag)?, &parse_columns(columns)?)?;
        check_letter(&orbit, flag)?;
        Ok(orbit)
    }
}

fn check_letter(orbit: &Orbit, flag: &str) -> Result<()> {
    let flag = flag.trim().to_ascii_uppercase();
    if orbit.kind == GroupKind::Orthogonal && flag != orbit.kind_letter() {
        return Err(Error::Parse(format!(
            "orbit of size {} is type {}, not {flag}",
            orbit.size(),
            orbit.kind_letter()
        )));
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct OrbitJson {
    kind: String,
    columns: Vec<u32>,
}

/// Parse `"8,6,6,4"` (parentheses and spaces tolerated).
pub fn parse_columns(text: &str) -> Result<Vec<u32>> {
    let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
    if trimmed.trim().is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad column {t:?} in {text:?}"))))
        .collect()
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.columns.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Symplectic orbits parse from a bare column list.
impl FromStr for Orbit {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Orbit::symplectic(&parse_columns(s)?)
    }
}

pub(crate) fn canonical_columns(kind: GroupKind, columns: &[u32]) -> Vec<u32> {
    let end = columns.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1);
    let mut out = columns[..end].to_vec();
    let want_odd = kind == GroupKind::Orthogonal;
    if (out.len() % 2 == 1) != want_odd {
        out.push(0);
    }
    out
}

/// Conjugate partition.
pub fn transpose(parts: &[u32]) -> Vec<u32> {
    let top = parts.first().copied().unwrap_or(0);
    (1..=top).map(|k| parts.iter().filter(|&&p| p >= k).count() as u32).collect()
}

/// Dominance order on partitions of the same size.
pub fn dominated_by(lower: &[u32], upper: &[u32]) -> bool {
    let len = lower.len().max(upper.len());
    let (mut a, mut b) = (0u64, 0u64);
    for i in 0..len {
        a += u64::from(lower.get(i).copied().unwrap_or(0));
        b += u64::from(upper.get(i).copied().unwrap_or(0));
        if a > b {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(cols: &[u32]) -> Orbit {
        Orbit::symplectic(cols).unwrap()
    }

    #[test]
    fn validate_examples() {
        let o = c(&[8, 6, 6, 4, 4, 2, 2, 0]);
        assert_eq!(o.size(), 32);
        assert_eq!(c(&[2]).columns(), &[2, 0]);
        assert_eq!(c(&[2]).size(), 2);
        assert_eq!(Orbit::symplectic(&[3, 2]), Err(Error::ParityViolation { pair: 0 }));
        assert_eq!(Orbit::symplectic(&[4, 4, 3, 2]), Err(Error::ParityViolation { pair: 1 }));
        assert!(matches!(Orbit::symplectic(&[2, 4]), Err(Error::NotDecreasing { index: 1, value: 4 })));
    }

    #[test]
    fn canonical_padding() {
        assert_eq!(c(&[4, 4, 0, 0]).columns(), &[4, 4]);
        assert_eq!(c(&[6, 4, 4, 2, 2, 0, 0]).columns(), &[6, 4, 4, 2, 2, 0]);
        assert_eq!(c(&[]).columns(), &[] as &[u32]);
        assert_eq!(Orbit::orthogonal(&[2, 2]).unwrap().columns(), &[2, 2, 0]);
        assert_eq!(Orbit::orthogonal(&[0]).unwrap().columns(), &[0]);
    }

    #[test]
    fn special_examples() {
        assert!(c(&[6, 6, 3, 3]).is_special().unwrap());
        assert!(c(&[2, 2]).is_special().unwrap());
        assert!(!c(&[3, 1]).is_special().unwrap());
        assert!(!c(&[5, 3, 2, 2]).is_special().unwrap());
    }

    #[test]
    fn infinitesimal_examples() {
        let show = |o: &Orbit| o.infinitesimal_character().unwrap().iter().map(|h| h.to_string()).collect::<Vec<_>>().join("");
        assert_eq!(show(&c(&[6, 4, 4, 2, 2, 0])), "322111100");
        assert_eq!(show(&c(&[2, 0])), "1");
        let segs = c(&[6, 4, 4, 2]).infinitesimal_segments().unwrap();
        let text: Vec<String> = segs.iter().map(|s| s.iter().map(|h| h.to_string()).collect()).collect();
        assert_eq!(text, ["321", "10", "21", "0"]);
        // odd columns give half-integers
        let segs = c(&[3, 3]).infinitesimal_segments().unwrap();
        assert_eq!(segs[0], vec![HalfInt::half_of(3), HalfInt::half_of(1)]);
        assert_eq!(segs[1], vec![HalfInt::half_of(1)]);
    }

    #[test]
    fn closure_order_examples() {
        assert!(c(&[6, 6, 3, 3]).closure_leq(&c(&[6, 4, 4, 2, 2, 0])).unwrap());
        let o = c(&[8, 6, 6, 4]);
        assert!(o.closure_leq(&o).unwrap());
        // columns (4,4) are the Jordan type (2,2,2,2): the smaller orbit
        assert!(c(&[4, 4]).closure_leq(&c(&[2, 2, 2, 2])).unwrap());
        assert!(!c(&[2, 2, 2, 2]).closure_leq(&c(&[4, 4])).unwrap());
        assert!(matches!(c(&[2, 2]).closure_leq(&c(&[2])), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn orthogonal_maps() {
        let q = Orbit::orthogonal(&[4, 4, 2]).unwrap();
        assert_eq!(q.to_symplectic().unwrap().columns(), &[6, 4, 4, 2]);
        let q = Orbit::orthogonal(&[2, 2]).unwrap();
        assert_eq!(q.to_symplectic().unwrap().columns(), &[4, 2, 2, 0]);
        let q = Orbit::orthogonal(&[0]).unwrap();
        assert_eq!(q.to_symplectic().unwrap().columns(), &[2, 0]);
        assert_eq!(c(&[6, 4, 4, 2]).to_orthogonal().unwrap(), Orbit::orthogonal(&[4, 4, 2]).unwrap());
        // rows (2,1): the even row 2 occurs once
        assert_eq!(Orbit::orthogonal(&[2, 1]), Err(Error::InvalidOrthogonal { row: 2 }));
    }

    #[test]
    fn json_and_text() {
        let o = c(&[8, 6, 6, 4, 4, 2, 2, 0]);
        let j = o.to_json();
        assert_eq!(j.to_string(), r#"{"columns":[8,6,6,4,4,2,2,0],"kind":"C"}"#);
        assert_eq!(Orbit::from_json(&j).unwrap(), o);
        assert_eq!(Orbit::parse_with_kind("C", "8,6,6,4,4,2,2,0").unwrap(), o);
        assert_eq!("(2,2)".parse::<Orbit>().unwrap(), c(&[2, 2]));
        let q = Orbit::parse_with_kind("D", "2,2").unwrap();
        assert_eq!(q.kind_letter(), "D");
        assert!(Orbit::parse_with_kind("B", "2,2").is_err());
    }

    #[test]
    fn transpose_roundtrip() {
        assert_eq!(transpose(&[6, 4, 4, 2, 2]), vec![5, 5, 3, 3, 1, 1]);
        assert_eq!(transpose(&transpose(&[5, 3, 3, 1])), vec![5, 3, 3, 1]);
    }
}
