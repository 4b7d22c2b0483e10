use std::fmt;

use crate::halfint::HalfInt;
use crate::{Error, Result};

/// A weight in standard coordinates, stored doubled so half-integers stay
/// exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    doubled: Vec<i64>,
}

impl Weight {
    pub fn from_ints(coords: &[i64]) -> Weight {
        Weight { doubled: coords.iter().map(|c| 2 * c).collect() }
    }

    pub fn from_doubled(doubled: Vec<i64>) -> Weight {
        Weight { doubled }
    }

    pub fn from_halfints(coords: &[HalfInt]) -> Weight {
        Weight { doubled: coords.iter().map(|c| c.doubled()).collect() }
    }

    pub fn zero(rank: usize) -> Weight {
        Weight { doubled: vec![0; rank] }
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn coords(&self) -> Vec<HalfInt> {
        self.doubled.iter().map(|&d| HalfInt::from_doubled(d)).collect()
    }

    /// Integer coordinates, if all are integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.doubled.iter().map(|&d| (d % 2 == 0).then_some(d / 2)).collect()
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(HalfInt::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    /// `GL(n)`: roots `e_i - e_j`, `n` coordinates.
    A,
    B,
    C,
    D,
}

/// A classical root system in its standard coordinate realization. All
/// vectors are doubled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    ty: RootType,
    rank: usize,
    positive: Vec<Vec<i64>>,
    simple: Vec<Vec<i64>>,
    rho: Vec<i64>,
}

fn unit(n: usize, i: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = scale;
    v
}

fn combo(n: usize, i: usize, si: i64, j: usize, sj: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] += si;
    v[j] += sj;
    v
}

impl RootSystem {
    /// `rank` is the number of coordinates.
    pub fn new(ty: RootType, rank: usize) -> RootSystem {
        let n = rank;
        let mut positive = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                positive.push(combo(n, i, 2, j, -2));
                if ty != RootType::A {
                    positive.push(combo(n, i, 2, j, 2));
                }
            }
            match ty {
                RootType::B => positive.push(unit(n, i, 2)),
                RootType::C => positive.push(unit(n, i, 4)),
                _ => {}
            }
        }
        let mut simple: Vec<Vec<i64>> = (0..n.saturating_sub(1)).map(|i| combo(n, i, 2, i + 1, -2)).collect();
        if n > 0 {
            match ty {
                RootType::A => {}
                RootType::B => simple.push(unit(n, n - 1, 2)),
                RootType::C => simple.push(unit(n, n - 1, 4)),
                RootType::D if n >= 2 => simple.push(combo(n, n - 2, 2, n - 1, 2)),
                RootType::D => {}
            }
        }
        let mut rho = vec![0; n];
        for a in &positive {
            for (r, x) in rho.iter_mut().zip(a) {
                *r += x;
            }
        }
        for r in &mut rho {
            *r /= 2;
        }
        RootSystem { ty, rank, positive, simple, rho }
    }

    pub fn root_type(&self) -> RootType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Positive roots, doubled.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// Simple roots, doubled.
    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple
    }

    /// Half the sum of positive roots, doubled.
    pub fn rho(&self) -> &[i64] {
        &self.rho
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact: u64 = (1..=n).product();
        match self.ty {
            RootType::A => fact,
            RootType::B | RootType::C => fact << n,
            RootType::D if n == 0 => 1,
            RootType::D => fact << (n - 1),
        }
    }

    pub(crate) fn check_rank(&self, w: &[i64]) -> Result<()> {
        if w.len() != self.rank {
            return Err(Error::ShapeMismatch(format!("weight has {} coordinates, expected {}", w.len(), self.rank)));
        }
        Ok(())
    }

    /// Dominant and integral for the group: all coordinates integers, or for
    /// B and D all half-integers.
    pub fn is_dominant(&self, w: &[i64]) -> bool {
        if w.len() != self.rank {
            return false;
        }
        let integral = w.iter().all(|d| d % 2 == 0);
        let half = w.iter().all(|d| d % 2 != 0);
        let lattice_ok = match self.ty {
            RootType::A | RootType::C => integral,
            RootType::B | RootType::D => integral || half,
        };
        lattice_ok && self.is_dominant_chamber(w)
    }

    /// In the closed dominant chamber (no integrality check).
    pub fn is_dominant_chamber(&self, w: &[i64]) -> bool {
        let n = w.len();
        let decreasing = w.windows(2).all(|p| p[0] >= p[1]);
        match self.ty {
            RootType::A => decreasing,
            RootType::B | RootType::C => decreasing && w.last().is_none_or(|&x| x >= 0),
            RootType::D => {
                n < 2 || w[..n - 1].windows(2).all(|p| p[0] >= p[1]) && w[n - 2] >= w[n - 1].abs()
            }
        }
    }

    pub(crate) fn require_dominant(&self, w: &[i64]) -> Result<()> {
        self.check_rank(w)?;
        if self.is_dominant(w) {
            Ok(())
        } else {
            Err(Error::NotDominant(Weight::from_doubled(w.to_vec()).to_string()))
        }
    }

    /// The dominant element of the Weyl orbit of `w`.
    pub fn dominant_rep(&self, w: &[i64]) -> Vec<i64> {
        let mut v = w.to_vec();
        match self.ty {
            RootType::A => v.sort_unstable_by(|a, b| b.cmp(a)),
            RootType::B | RootType::C => {
                for x in &mut v {
                    *x = x.abs();
                }
                v.sort_unstable_by(|a, b| b.cmp(a));
            }
            RootType::D => {
                let negative = w.iter().filter(|&&x| x < 0).count();
                for x in &mut v {
                    *x = x.abs();
                }
                v.sort_unstable_by(|a, b| b.cmp(a));
                if negative % 2 == 1 {
                    if let Some(last) = v.last_mut() {
                        *last = -*last;
                    }
                }
            }
        }
        v
    }

    /// Size of the Weyl orbit of `w`.
    pub fn orbit_size(&self, w: &[i64]) -> u64 {
        let d = self.dominant_rep(w);
        let n = d.len() as u64;
        let mut denom: u64 = 1;
        let mut i = 0;
        let mut zeros = 0u64;
        while i < d.len() {
            let run = d[i..].iter().take_while(|&&x| x.abs() == d[i].abs()).count();
            if d[i] == 0 {
                zeros = run as u64;
            }
            denom *= (1..=run as u64).product::<u64>();
            i += run;
        }
        let perms = (1..=n).product::<u64>() / denom;
        match self.ty {
            RootType::A => {
                let mut denom = 1u64;
                let mut i = 0;
                while i < d.len() {
                    let run = d[i..].iter().take_while(|&&x| x == d[i]).count();
                    denom *= (1..=run as u64).product::<u64>();
                    i += run;
                }
                (1..=n).product::<u64>() / denom
            }
            RootType::B | RootType::C => perms << (n - zeros),
            RootType::D if zeros > 0 => perms << (n - zeros),
            RootType::D => perms << n.saturating_sub(1),
        }
    }

    /// Apply the `i`-th simple reflection.
    pub fn reflect_simple(&self, i: usize, w: &[i64]) -> Vec<i64> {
        let mut v = w.to_vec();
        let n = self.rank;
        if i + 1 < n {
            v.swap(i, i + 1);
        } else {
            match self.ty {
                RootType::A => unreachable!("type A has {} simple roots", n - 1),
                RootType::B | RootType::C => v[n - 1] = -v[n - 1],
                RootType::D => {
                    let (a, b) = (v[n - 2], v[n - 1]);
                    v[n - 2] = -b;
                    v[n - 1] = -a;
                }
            }
        }
        v
    }

    /// Every element of the Weyl orbit of `w`.
    pub fn orbit(&self, w: &[i64]) -> Vec<Vec<i64>> {
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![w.to_vec()];
        seen.insert(w.to_vec());
        while let Some(v) = stack.pop() {
            for i in 0..self.simple.len() {
                let r = self.reflect_simple(i, &v);
                if seen.insert(r.clone()) {
                    stack.push(r);
                }
            }
        }
        let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
