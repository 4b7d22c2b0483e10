//! Fundamental degenerations and the set `Norm(O)` they generate from a
//! generic orbit.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::chain::{split_columns, Chain, Parity};
use crate::orbit::{canonical_columns, GroupKind, Orbit};
use crate::{Error, Result};

/// Which of the four local rules applies to `(b0, b1, b2, b3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DegenerationCase {
    /// `b0 > b1 = b2 > b3`
    StrictStrict,
    /// `b0 = b1 = b2 > b3`
    EqualLeft,
    /// `b0 > b1 = b2 = b3`
    EqualRight,
    /// `b0 = b1 = b2 = b3`
    AllEqual,
}

/// Apply one fundamental degeneration to the quadruple `b`.
///
/// In the first two cases a trailing `(0, 0)` is dropped.
pub fn fundamental_degeneration(b: [u32; 4]) -> Result<(DegenerationCase, Vec<u32>)> {
    let [b0, b1, b2, b3] = b;
    if b1 != b2 {
        return Err(Error::NoEqualPair { b1, b2 });
    }
    if b0 < b1 || b2 < b3 || b1 == 0 || b.iter().any(|&x| x % 2 != b0 % 2) {
        return Err(Error::InvalidDegeneration(format!("{b:?} is not b0 >= b1 = b2 >= b3 > .. of one parity")));
    }
    let (case, mut out) = match (b0 > b1, b2 > b3) {
        (true, true) => (DegenerationCase::StrictStrict, vec![b0, b1 + 2, b2 - 2, b3]),
        (false, true) => (DegenerationCase::EqualLeft, vec![b0 + 1, b1 + 1, b2 - 2, b3]),
        (true, false) => (DegenerationCase::EqualRight, vec![b0, b1 + 2, b2 - 1, b3 - 1]),
        (false, false) => (DegenerationCase::AllEqual, vec![b0 + 1, b1 + 1, b2 - 1, b3 - 1]),
    };
    if matches!(case, DegenerationCase::StrictStrict | DegenerationCase::EqualLeft) && out[2] == 0 && out[3] == 0 {
        out.truncate(2);
    }
    Ok((case, out))
}

/// One degeneration step inside an orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Degeneration {
    pub case: DegenerationCase,
    /// Index of `b0` among the columns of the source orbit.
    pub position: usize,
    pub before: [u32; 4],
    pub after: Vec<u32>,
}

impl fmt::Display for Degeneration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.before;
        write!(f, "({a},{b},{c},{d}) -> {:?} at column {}", self.after, self.position)
    }
}

/// A member of `Norm(O)` together with the chain of the origin that each of
/// its columns descends from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormMember {
    orbit: Orbit,
    owners: Vec<usize>,
    co_rank: usize,
}

impl NormMember {
    pub fn orbit(&self) -> &Orbit {
        &self.orbit
    }

    /// Number of degenerations separating this member from the origin.
    pub fn co_rank(&self) -> usize {
        self.co_rank
    }

    /// For each chain of the member, the index of the origin chain it
    /// descends from.
    pub fn chain_origins(&self) -> Vec<usize> {
        split_columns(self.orbit.columns()).iter().map(|c| self.owners[c.start()]).collect()
    }

    /// Chains paired with the parity `δ` inherited from their origin chain.
    pub fn chains_with_delta(&self, origin_parities: &[Parity]) -> Vec<(Chain, Parity)> {
        let chains = split_columns(self.orbit.columns());
        chains
            .into_iter()
            .map(|c| {
                let owner = self.owners[c.start()];
                (c, origin_parities[owner])
            })
            .collect()
    }
}

/// `Norm(O)`: every orbit reachable from a generic `O` by fundamental
/// degenerations on interior equal pairs.
#[derive(Debug, Clone)]
pub struct NormSet {
    origin: Orbit,
    origin_parities: Vec<Parity>,
    members: Vec<NormMember>,
    edges: Vec<(usize, Degeneration, usize)>,
}

impl NormSet {
    pub fn origin(&self) -> &Orbit {
        &self.origin
    }

    /// Parities of the origin's chains.
    pub fn origin_parities(&self) -> &[Parity] {
        &self.origin_parities
    }

    /// Members ordered by co-rank, then by columns in decreasing
    /// lexicographic order. The origin comes first.
    pub fn members(&self) -> &[NormMember] {
        &self.members
    }

    pub fn orbits(&self) -> impl Iterator<Item = &Orbit> {
        self.members.iter().map(|m| &m.orbit)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `(source, step, target)` as indices into [`NormSet::members`].
    pub fn edges(&self) -> &[(usize, Degeneration, usize)] {
        &self.edges
    }

    pub fn find(&self, orbit: &Orbit) -> Option<&NormMember> {
        self.members.iter().find(|m| &m.orbit == orbit)
    }

    /// Members grouped by co-rank.
    pub fn by_co_rank(&self) -> Vec<Vec<&NormMember>> {
        let top = self.members.iter().map(|m| m.co_rank).max().unwrap_or(0);
        (0..=top).map(|r| self.members.iter().filter(|m| m.co_rank == r).collect()).collect()
    }

    /// The unique member lying in the closure of every other member.
    pub fn minimum(&self) -> &Orbit {
        let minimal: Vec<&Orbit> = self
            .orbits()
            .filter(|a| self.orbits().all(|b| a.closure_leq(b).expect("same size")))
            .collect();
        assert_eq!(minimal.len(), 1, "Norm({}) has no unique minimum", self.origin);
        minimal[0]
    }
}

type State = (Vec<u32>, Vec<usize>);

fn successors(state: &State) -> Vec<(Degeneration, State)> {
    let (cols, owners) = state;
    let mut out = Vec::new();
    for chain in split_columns(cols) {
        let s = chain.start();
        let owner = owners[s];
        assert!(
            owners[s..s + chain.entries().len()].iter().all(|&o| o == owner),
            "chain {chain} of {cols:?} mixes columns from different origin chains"
        );
        for i in 1..=chain.k() {
            let p = s + 2 * i - 2;
            let before = [cols[p], cols[p + 1], cols[p + 2], cols[p + 3]];
            let (case, after) = fundamental_degeneration(before).expect("interior pair of a chain");
            let mut next = cols[..p].to_vec();
            next.extend_from_slice(&after);
            next.extend_from_slice(&cols[p + 4..]);
            assert!(
                next.windows(2).all(|w| w[0] >= w[1]),
                "degeneration of {before:?} in {cols:?} breaks column order"
            );
            let next = canonical_columns(GroupKind::Symplectic, &next);
            let mut next_owners = owners.clone();
            next_owners.resize(next.len(), *owners.last().expect("nonempty"));
            out.push((Degeneration { case, position: p, before, after }, (next, next_owners)));
        }
    }
    out
}

impl Orbit {
    /// Compute `Norm(self)` by breadth-first closure under fundamental
    /// degenerations.
    pub fn norm_set(&self) -> Result<NormSet> {
        self.require_generic()?;
        let chains = self.chain_decompose();
        let origin_parities: Vec<Parity> = chains.chains().iter().map(Chain::parity).collect();
        let mut owners = Vec::new();
        for (idx, c) in chains.chains().iter().enumerate() {
            owners.extend(std::iter::repeat_n(idx, c.entries().len()));
        }
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut states: Vec<(State, usize)> = Vec::new();
        let mut raw_edges = Vec::new();
        index.insert(self.columns().to_vec(), 0);
        states.push(((self.columns().to_vec(), owners), 0));
        let mut frontier = vec![0usize];
        let mut rank = 0;
        while !frontier.is_empty() {
            rank += 1;
            let expanded: Vec<(usize, Vec<(Degeneration, State)>)> =
                frontier.par_iter().map(|&i| (i, successors(&states[i].0))).collect();
            let mut next_frontier = Vec::new();
            for (src, succ) in expanded {
                for (step, state) in succ {
                    let dst = match index.get(&state.0) {
                        Some(&d) => {
                            assert_eq!(
                                states[d].0 .1, state.1,
                                "{:?} reached with two different chain origins",
                                state.0
                            );
                            d
                        }
                        None => {
                            let d = states.len();
                            index.insert(state.0.clone(), d);
                            states.push((state, rank));
                            next_frontier.push(d);
                            d
                        }
                    };
                    raw_edges.push((src, step, dst));
                }
            }
            frontier = next_frontier;
        }

        let mut order: Vec<usize> = (0..states.len()).collect();
        order.sort_by(|&a, &b| states[a].1.cmp(&states[b].1).then_with(|| states[b].0 .0.cmp(&states[a].0 .0)));
        let mut position = vec![0; states.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let members = order
            .iter()
            .map(|&i| {
                let ((cols, owners), co_rank) = &states[i];
                Ok(NormMember { orbit: Orbit::symplectic(cols)?, owners: owners.clone(), co_rank: *co_rank })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut edges: Vec<_> = raw_edges.into_iter().map(|(s, d, t)| (position[s], d, position[t])).collect();
        edges.sort_by_key(|e| (e.0, e.2, e.1.position));
        Ok(NormSet { origin: self.clone(), origin_parities, members, edges })
    }

    /// The closure-minimal member of `Norm(self)`.
    pub fn norm_minimum(&self) -> Result<Orbit> {
        let set = self.norm_set()?;
        let min = set.minimum().clone();
        assert!(
            min.chain_decompose().chains().iter().all(|c| c.entries().len() == 2),
            "minimum {min} of Norm({self}) has a long chain"
        );
        Ok(min)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(cols: &[u32]) -> Orbit {
        Orbit::symplectic(cols).unwrap()
    }

    #[test]
    fn four_cases() {
        assert_eq!(fundamental_degeneration([4, 2, 2, 0]).unwrap(), (DegenerationCase::StrictStrict, vec![4, 4]));
        assert_eq!(fundamental_degeneration([6, 6, 6, 4]).unwrap(), (DegenerationCase::EqualLeft, vec![7, 7, 4, 4]));
        assert_eq!(fundamental_degeneration([7, 5, 5, 5]).unwrap(), (DegenerationCase::EqualRight, vec![7, 7, 4, 4]));
        assert_eq!(fundamental_degeneration([3, 3, 3, 3]).unwrap(), (DegenerationCase::AllEqual, vec![4, 4, 2, 2]));
        assert_eq!(fundamental_degeneration([6, 4, 4, 2]).unwrap().1, vec![6, 6, 2, 2]);
        assert_eq!(fundamental_degeneration([4, 4, 2, 2]), Err(Error::NoEqualPair { b1: 4, b2: 2 }));
        assert!(matches!(fundamental_degeneration([5, 4, 4, 2]), Err(Error::InvalidDegeneration(_))));
    }

    #[test]
    fn norm_of_single_long_chain() {
        let set = c(&[8, 6, 6, 4, 4, 2, 2, 0]).norm_set().unwrap();
        let rows: Vec<Vec<String>> = set
            .by_co_rank()
            .iter()
            .map(|row| row.iter().map(|m| m.orbit().chain_decompose().to_string()).collect())
            .collect();
        assert_eq!(
            rows,
            vec![
                vec!["[8(66)(44)(22)0]"],
                vec!["[88][4(44)(22)0]", "[8(66)6][2(22)0]", "[8(66)(44)4]"],
                vec!["[88][55][2(22)0]", "[88][4(44)4]", "[8(66)6][33]"],
                vec!["[88][55][33]"],
            ]
        );
        assert_eq!(set.minimum(), &c(&[8, 8, 5, 5, 3, 3]));
    }

    #[test]
    fn norm_of_two_chains() {
        let set = c(&[12, 10, 10, 8, 7, 5, 5, 3, 3, 1]).norm_set().unwrap();
        let mut got: Vec<String> = set.orbits().map(|o| o.chain_decompose().to_string()).collect();
        got.sort();
        let mut want = vec![
            "[12(10,10)8][7(55)(33)1]",
            "[12(10,10)8][77][3(33)1]",
            "[12,12][88][7(55)(33)1]",
            "[12(10,10)8][7(55)5][11]",
            "[12,12][88][77][3(33)1]",
            "[12(10,10)8][77][44][11]",
            "[12,12][88][7(55)5][11]",
            "[12,12][88][77][44][11]",
        ];
        want.sort();
        assert_eq!(got, want);
        // [44] descends from the odd chain
        let m = set.find(&c(&[12, 10, 10, 8, 7, 7, 4, 4, 1, 1])).unwrap();
        assert_eq!(m.chain_origins(), vec![0, 1, 1, 1]);
    }

    #[test]
    fn norm_small_examples() {
        let set = c(&[6, 4, 4, 2, 2, 0]).norm_set().unwrap();
        let got: Vec<&Orbit> = set.orbits().collect();
        assert_eq!(got, vec![&c(&[6, 4, 4, 2, 2, 0]), &c(&[6, 6, 2, 2, 2, 0]), &c(&[6, 4, 4, 4]), &c(&[6, 6, 3, 3])]);
        assert_eq!(c(&[6, 4, 4, 2, 2, 0]).norm_minimum().unwrap(), c(&[6, 6, 3, 3]));
        assert_eq!(c(&[4, 4]).norm_set().unwrap().len(), 1);
        assert_eq!(c(&[2, 2]).norm_minimum().unwrap(), c(&[2, 2]));
        assert_eq!(c(&[8, 6, 6, 4, 4, 2, 2, 0]).norm_minimum().unwrap(), c(&[8, 8, 5, 5, 3, 3]));
        assert!(matches!(c(&[8, 8, 6, 6, 6, 4, 4, 2]).norm_set(), Err(Error::NotGeneric(_))));
    }

    #[test]
    fn edges_point_down_one_rank() {
        let set = c(&[8, 6, 6, 4, 4, 2, 2, 0]).norm_set().unwrap();
        assert!(!set.edges().is_empty());
        for (s, _, t) in set.edges() {
            assert_eq!(set.members()[*s].co_rank() + 1, set.members()[*t].co_rank());
        }
    }
}
