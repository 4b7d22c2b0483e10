//! Chains: the `[b0 (b1 b2) … b_{2k+1}]` segments an orbit splits into, and
//! everything read off from them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::orbit::{GroupKind, Orbit};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(value: u32) -> Parity {
        if value % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `0` or `1`, the subscript used in factor notation.
    pub fn digit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_digit(d: u32) -> Result<Parity> {
        match d {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            _ => Err(Error::Parse(format!("parity must be 0 or 1, got {d}"))),
        }
    }
}

/// One chain `b_0 ≥ (b_1 = b_2) ≥ … ≥ (b_{2k-1} = b_{2k}) ≥ b_{2k+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    entries: Vec<u32>,
    start: usize,
}

impl Chain {
    /// Build a chain from its entries, checking the shape and parity.
    pub fn new(entries: Vec<u32>) -> Result<Chain> {
        Chain::at(entries, 0)
    }

    pub(crate) fn at(entries: Vec<u32>, start: usize) -> Result<Chain> {
        let bad = |why: &str| Error::Parse(format!("{entries:?} is not a chain: {why}"));
        if entries.len() < 2 || entries.len() % 2 != 0 {
            return Err(bad("needs an even number of entries, at least two"));
        }
        if entries.windows(2).any(|w| w[1] > w[0]) {
            return Err(bad("entries must weakly decrease"));
        }
        if entries[1..entries.len() - 1].chunks(2).any(|p| p[0] != p[1]) {
            return Err(bad("interior entries must come in equal pairs"));
        }
        if entries.iter().any(|&b| b % 2 != entries[0] % 2) {
            return Err(bad("entries must share one parity"));
        }
        Ok(Chain { entries, start })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Index of `b_0` among the columns of the orbit this chain came from.
    pub fn start(&self) -> usize {
        self.start
    }

    /// Number of interior pairs.
    pub fn k(&self) -> usize {
        self.entries.len() / 2 - 1
    }

    pub fn first(&self) -> u32 {
        self.entries[0]
    }

    pub fn last(&self) -> u32 {
        *self.entries.last().expect("chain is nonempty")
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.entries[0])
    }

    /// Values of the interior pairs `(b_{2i-1} = b_{2i})`, `i = 1..=k`.
    pub fn interior_pairs(&self) -> Vec<u32> {
        self.entries[1..self.entries.len() - 1].iter().step_by(2).copied().collect()
    }

    /// Length two, or every `b_{2i} > b_{2i+1}`.
    pub fn is_generic(&self) -> bool {
        self.entries.len() == 2 || self.entries.chunks(2).all(|p| p[0] > p[1])
    }

    /// First `(i, j)` with `b_{2i-2} > (b_{2i-1} = … = b_{2j}) > b_{2j+1}`.
    pub fn normality_witness(&self) -> Option<(usize, usize)> {
        let pairs = self.interior_pairs();
        let b = &self.entries;
        for i in 1..=pairs.len() {
            let v = pairs[i - 1];
            if b[2 * i - 2] <= v {
                continue;
            }
            let mut j = i;
            while j < pairs.len() && pairs[j] == v {
                j += 1;
            }
            if b[2 * j + 1] < v {
                return Some((i, j));
            }
        }
        None
    }

    /// Text form such as `[6(66)(44)2]` or `[12(10,10)8]`.
    pub fn notation(&self) -> String {
        // a comma only where two adjacent numbers would otherwise run together
        let pair = |a: u32, b: u32| {
            let sep = if a >= 10 || b >= 10 { "," } else { "" };
            format!("{a}{sep}{b}")
        };
        let b = &self.entries;
        if b.len() == 2 {
            return format!("[{}]", pair(b[0], b[1]));
        }
        let mut s = format!("[{}", b[0]);
        for v in self.interior_pairs() {
            s.push_str(&format!("({})", pair(v, v)));
        }
        s.push_str(&format!("{}]", self.last()));
        s
    }

    /// Parse [`Chain::notation`] output.
    pub fn parse(text: &str) -> Result<Chain> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("chain {t:?} must be bracketed")))?;
        let number = |s: &str| s.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad chain entry {s:?} in {t:?}")));
        let pair = |s: &str| -> Result<[u32; 2]> {
            if let Some((a, b)) = s.split_once(',') {
                return Ok([number(a)?, number(b)?]);
            }
            let s = s.trim();
            if s.len() != 2 {
                return Err(Error::Parse(format!("pair {s:?} in {t:?} needs a comma")));
            }
            Ok([number(&s[..1])?, number(&s[1..])?])
        };
        let entries: Vec<u32> = match (inner.find('('), inner.rfind(')')) {
            (None, None) => pair(inner)?.to_vec(),
            (Some(open), Some(close)) if open < close => {
                let mut entries = vec![number(&inner[..open])?];
                for group in inner[open + 1..close].split(")(") {
                    if group.contains(['(', ')']) {
                        return Err(Error::Parse(format!("bad grouping in {t:?}")));
                    }
                    entries.extend(pair(group)?);
                }
                entries.push(number(&inner[close + 1..])?);
                entries
            }
            _ => return Err(Error::Parse(format!("unbalanced parentheses in {t:?}"))),
        };
        Chain::new(entries)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}

/// Ordered chains of an orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainDecomposition {
    chains: Vec<Chain>,
}

impl ChainDecomposition {
    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Concatenated entries; equal to the orbit's columns.
    pub fn columns(&self) -> Vec<u32> {
        self.chains.iter().flat_map(|c| c.entries.iter().copied()).collect()
    }
}

impl fmt::Display for ChainDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.chains {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Greedy split of a column list: cut after the first odd index `j` with
/// `c_j > c_{j+1}`.
pub(crate) fn split_columns(columns: &[u32]) -> Vec<Chain> {
    let mut chains = Vec::new();
    let mut start = 0;
    while start < columns.len() {
        let mut end = start + 1;
        while end + 1 < columns.len() && columns[end] == columns[end + 1] {
            end += 2;
        }
        let chain = Chain::at(columns[start..=end].to_vec(), start)
            .unwrap_or_else(|e| panic!("valid type C columns {columns:?} split badly: {e}"));
        chains.push(chain);
        start = end + 1;
    }
    chains
}

/// Outcome of the normality criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normality {
    Normal,
    /// The closure is not normal; the chain at `chain` has the offending
    /// run of equal pairs `i..=j`.
    NonNormal { chain: usize, i: usize, j: usize },
}

impl Normality {
    pub fn is_normal(self) -> bool {
        self == Normality::Normal
    }
}

impl Orbit {
    /// Chain decomposition. Orthogonal orbits are decomposed through their
    /// symplectic image (see [`Orbit::to_symplectic`]).
    pub fn chain_decompose(&self) -> ChainDecomposition {
        let chains = match self.kind() {
            GroupKind::Symplectic => split_columns(self.columns()),
            GroupKind::Orthogonal => {
                split_columns(self.to_symplectic().expect("orthogonal image").columns())
            }
        };
        ChainDecomposition { chains }
    }

    /// Every chain generic.
    pub fn is_generic(&self) -> bool {
        self.chain_decompose().chains.iter().all(Chain::is_generic)
    }

    pub(crate) fn require_generic(&self) -> Result<()> {
        self.require_symplectic()?;
        if self.is_generic() {
            Ok(())
        } else {
            Err(Error::NotGeneric(self.to_string()))
        }
    }

    /// Rank of the component group: the number of chains.
    pub fn component_group_rank(&self) -> Result<usize> {
        self.require_symplectic()?;
        Ok(self.chain_decompose().len())
    }

    /// Rank of Lusztig's quotient: chains ending in a positive even entry.
    /// Defined for special orbits whose chains are even or constant odd.
    pub fn lusztig_quotient_rank(&self) -> Result<usize> {
        let chains = self.chain_decompose();
        let shaped = chains.chains.iter().all(|c| {
            c.parity() == Parity::Even || c.entries.iter().all(|&b| b == c.first())
        });
        if !self.is_special()? || !shaped {
            return Err(Error::NotSpecialForm(self.to_string()));
        }
        Ok(chains.chains.iter().filter(|c| c.last() > 0 && c.last() % 2 == 0).count())
    }

    /// Normality of the closure via the chain criterion.
    pub fn kp_normality(&self) -> Result<Normality> {
        self.require_symplectic()?;
        for (idx, c) in self.chain_decompose().chains.iter().enumerate() {
            if let Some((i, j)) = c.normality_witness() {
                return Ok(Normality::NonNormal { chain: idx, i, j });
            }
        }
        Ok(Normality::Normal)
    }

    /// `((c_0+c_1)/2, (c_0+c_1)/2, (c_2+c_3)/2, …)`.
    pub fn sharp_orbit(&self) -> Result<Orbit> {
        self.require_generic()?;
        let cols: Vec<u32> = self
            .columns()
            .chunks(2)
            .flat_map(|p| {
                let avg = (p[0] + p[1]) / 2;
                [avg, avg]
            })
            .collect();
        let sharp = Orbit::symplectic(&cols)?;
        assert!(sharp.kp_normality()?.is_normal(), "sharp orbit {sharp} of {self} is not normal");
        Ok(sharp)
    }

    /// Split off as few repeated column pairs `(c, c)` as possible so that
    /// the rest is generic. Returns the generic remainder and the values of
    /// the removed pairs, in removal order.
    pub fn extract_generic(&self) -> Result<(Orbit, Vec<u32>)> {
        self.require_symplectic()?;
        let mut cols = self.columns().to_vec();
        let mut removed = Vec::new();
        'outer: loop {
            for chain in split_columns(&cols) {
                let b = chain.entries();
                if let Some(i) = (0..b.len() / 2).find(|&i| b.len() > 2 && b[2 * i] == b[2 * i + 1]) {
                    // leftmost interior pair touching the first violation
                    let m = i.max(1);
                    let at = chain.start() + 2 * m - 1;
                    removed.push(cols[at]);
                    cols.drain(at..at + 2);
                    continue 'outer;
                }
            }
            break;
        }
        Ok((Orbit::symplectic(&cols)?, removed))
    }
}
