//! Restriction of `Sp(n)` modules to block subgroups `U(a_1) × … × U(a_r)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::freudenthal::dominant_weights;
use super::root::{RootSystem, RootType};
use crate::{Error, Result};

/// Block sizes of a Levi subgroup `GL(a_1) × … × GL(a_r)` of `Sp(2n)`
/// together with a target highest weight for each block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeviShape {
    pub block_sizes: Vec<usize>,
    pub targets: Vec<Vec<i64>>,
}

impl LeviShape {
    pub fn new(block_sizes: Vec<usize>, targets: Vec<Vec<i64>>) -> Result<LeviShape> {
        let shape = LeviShape { block_sizes, targets };
        shape.validate()?;
        Ok(shape)
    }

    /// All block targets zero.
    pub fn trivial(block_sizes: &[usize]) -> LeviShape {
        LeviShape { targets: block_sizes.iter().map(|&a| vec![0; a]).collect(), block_sizes: block_sizes.to_vec() }
    }

    pub fn rank(&self) -> usize {
        self.block_sizes.iter().sum()
    }

    /// Targets concatenated into one weight.
    pub fn concatenated(&self) -> Vec<i64> {
        self.targets.concat()
    }

    fn validate(&self) -> Result<()> {
        if self.block_sizes.len() != self.targets.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} blocks but {} targets",
                self.block_sizes.len(),
                self.targets.len()
            )));
        }
        for (a, t) in self.block_sizes.iter().zip(&self.targets) {
            if *a == 0 || t.len() != *a {
                return Err(Error::ShapeMismatch(format!("block of size {a} with target {t:?}")));
            }
            if t.windows(2).any(|p| p[0] < p[1]) {
                return Err(Error::ShapeMismatch(format!("block target {t:?} is not weakly decreasing")));
            }
        }
        Ok(())
    }
}

fn kostka_cache() -> &'static Mutex<HashMap<(Vec<i64>, Vec<i64>), u64>> {
    static CACHE: OnceLock<Mutex<HashMap<(Vec<i64>, Vec<i64>), u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Multiplicity of the weight `content` in the `GL(m)` module with highest
/// weight `shape` (a Kostka number after shifting both to partitions).
pub fn kostka(shape: &[i64], content: &[i64]) -> u64 {
    assert_eq!(shape.len(), content.len(), "Kostka arguments of different lengths");
    if shape.iter().sum::<i64>() != content.iter().sum::<i64>() {
        return 0;
    }
    let low = shape.iter().chain(content).copied().min().unwrap_or(0).min(0);
    let lam: Vec<i64> = shape.iter().map(|x| x - low).collect();
    let mut mu: Vec<i64> = content.iter().map(|x| x - low).collect();
    mu.sort_unstable_by(|a, b| b.cmp(a));
    kostka_partition(&lam, &mu)
}

fn kostka_partition(lam: &[i64], mu: &[i64]) -> u64 {
    if lam.is_empty() {
        return 1;
    }
    let key = (lam.to_vec(), mu.to_vec());
    if let Some(&v) = kostka_cache().lock().expect("kostka cache").get(&key) {
        return v;
    }
    // remove the horizontal strip holding the largest letter
    let m = lam.len();
    let strip = mu[m - 1];
    let mut total = 0u64;
    let mut nu = vec![0i64; m - 1];
    fn rec(i: usize, lam: &[i64], nu: &mut Vec<i64>, left: i64, mu: &[i64], total: &mut u64) {
        let m = lam.len();
        if i == m - 1 {
            if left == lam[m - 1] {
                *total += kostka_partition(nu, &mu[..m - 1]);
            }
            return;
        }
        // nu_i between lam_{i+1} and lam_i
        for v in lam[i + 1]..=lam[i] {
            let taken = lam[i] - v;
            if taken > left {
                continue;
            }
            nu[i] = v;
            rec(i + 1, lam, nu, left - taken, mu, total);
        }
    }
    rec(0, lam, &mut nu, strip, mu, &mut total);
    kostka_cache().lock().expect("kostka cache").insert(key, total);
    total
}

/// Weakly decreasing integer vectors of the given length and sum with
/// entries in `lo..=hi`.
fn decreasing_vectors(len: usize, sum: i64, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn rec(len: usize, sum: i64, lo: i64, hi: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if len == 0 {
            if sum == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let l = len as i64;
        for v in (lo..=hi).rev() {
            // the remaining entries lie in lo..=v
            if sum - v < lo * (l - 1) || sum - v > v * (l - 1) {
                continue;
            }
            prefix.push(v);
            rec(len - 1, sum - v, lo, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, sum, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Levi-dominant elements (each block weakly decreasing) of the `W(C_n)`
/// orbit of a dominant integral weight.
fn levi_dominant_orbit(dominant: &[i64], sizes: &[usize]) -> Vec<Vec<i64>> {
    // distinct absolute values with their counts
    let mut values: Vec<(i64, usize)> = Vec::new();
    for &x in dominant {
        match values.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => values.push((x, 1)),
        }
    }
    let mut out = Vec::new();
    fn per_block(
        b: usize,
        sizes: &[usize],
        counts: &mut Vec<usize>,
        values: &[(i64, usize)],
        acc: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if b == sizes.len() {
            out.push(acc.clone());
            return;
        }
        // choose how many copies of each value go to this block, and how
        // many of those are negated
        let mut picks: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
        for (i, &(v, _)) in values.iter().enumerate() {
            let mut next = Vec::new();
            for p in &picks {
                let used: usize = p.iter().map(|(t, _)| t).sum();
                for take in 0..=counts[i].min(sizes[b] - used) {
                    let neg_max = if v == 0 { 0 } else { take };
                    for neg in 0..=neg_max {
                        let mut q = p.clone();
                        q.push((take, neg));
                        next.push(q);
                    }
                }
            }
            picks = next;
        }
        for p in picks {
            if p.iter().map(|(t, _)| t).sum::<usize>() != sizes[b] {
                continue;
            }
            let mut block = Vec::with_capacity(sizes[b]);
            for (i, &(take, neg)) in p.iter().enumerate() {
                let v = values[i].0;
                block.extend(std::iter::repeat_n(v, take - neg));
                block.extend(std::iter::repeat_n(-v, neg));
            }
            block.sort_unstable_by(|a, b| b.cmp(a));
            for (i, &(take, _)) in p.iter().enumerate() {
                counts[i] -= take;
            }
            let len = acc.len();
            acc.extend_from_slice(&block);
            per_block(b + 1, sizes, counts, values, acc, out);
            acc.truncate(len);
            for (i, &(take, _)) in p.iter().enumerate() {
                counts[i] += take;
            }
        }
    }
    let mut counts: Vec<usize> = values.iter().map(|&(_, c)| c).collect();
    per_block(0, sizes, &mut counts, &values, &mut Vec::new(), &mut out);
    out
}

type Decomposition = BTreeMap<Vec<i64>, u64>;
type DecompKey = (Vec<i64>, Vec<usize>);

fn decomposition_cache() -> &'static Mutex<HashMap<DecompKey, Arc<Decomposition>>> {
    static CACHE: OnceLock<Mutex<HashMap<DecompKey, Arc<Decomposition>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn require_sp(sys: &RootSystem) -> Result<()> {
    if sys.root_type() != RootType::C {
        return Err(Error::Unsupported(format!("branching is implemented for type C, not {:?}", sys.root_type())));
    }
    Ok(())
}

/// Full decomposition of `V_highest` restricted to the block subgroup:
/// concatenated block highest weights mapped to multiplicities.
///
/// `highest` is in integer coordinates.
pub fn levi_decomposition(sys: &RootSystem, highest: &[i64], sizes: &[usize]) -> Result<Arc<Decomposition>> {
    require_sp(sys)?;
    if sizes.iter().sum::<usize>() != sys.rank() || sizes.contains(&0) {
        return Err(Error::ShapeMismatch(format!("block sizes {sizes:?} do not partition rank {}", sys.rank())));
    }
    let key = (highest.to_vec(), sizes.to_vec());
    if let Some(hit) = decomposition_cache().lock().expect("branching cache").get(&key) {
        return Ok(hit.clone());
    }
    let doubled: Vec<i64> = highest.iter().map(|x| 2 * x).collect();
    let table = dominant_weights(sys, &doubled)?;

    let mut remaining: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (w, m) in &table.entries {
        let w: Vec<i64> = w.iter().map(|x| x / 2).collect();
        for v in levi_dominant_orbit(&w, sizes) {
            *remaining.entry(v).or_insert(0) += *m as i64;
        }
    }

    let mut result = Decomposition::new();
    let mut candidates: HashMap<Vec<i64>, Vec<(Vec<i64>, u64)>> = HashMap::new();
    loop {
        remaining.retain(|_, m| *m != 0);
        let Some((top, m)) = remaining.iter().next_back().map(|(k, v)| (k.clone(), *v)) else {
            break;
        };
        if m < 0 {
            return Err(Error::NegativeMultiplicity(m));
        }
        result.insert(top.clone(), m as u64);
        // weights of the block module with highest weight `top`
        let mut offset = 0;
        let mut products: Vec<(Vec<i64>, u64)> = vec![(Vec::new(), 1)];
        for &a in sizes {
            let tau = top[offset..offset + a].to_vec();
            offset += a;
            let block = candidates
                .entry(tau.clone())
                .or_insert_with(|| {
                    let sum: i64 = tau.iter().sum();
                    decreasing_vectors(a, sum, tau[a - 1], tau[0])
                        .into_iter()
                        .filter_map(|nu| {
                            let k = kostka(&tau, &nu);
                            (k > 0).then_some((nu, k))
                        })
                        .collect()
                })
                .clone();
            products = products
                .into_iter()
                .flat_map(|(p, k)| {
                    block.iter().map(move |(nu, kb)| {
                        let mut q = p.clone();
                        q.extend_from_slice(nu);
                        (q, k * kb)
                    })
                })
                .collect();
        }
        for (w, k) in products {
            *remaining.entry(w).or_insert(0) -= m * k as i64;
        }
    }
    let result = Arc::new(result);
    decomposition_cache().lock().expect("branching cache").entry(key).or_insert(result.clone());
    Ok(result)
}

/// `[V_highest |_{U(a_1) × … × U(a_r)} : ⊠ V_{τ_i}]`.
pub fn branch_to_levi(sys: &RootSystem, highest: &[i64], shape: &LeviShape) -> Result<u64> {
    shape.validate()?;
    sys.require_dominant(&highest.iter().map(|x| 2 * x).collect::<Vec<_>>())?;
    let table = levi_decomposition(sys, highest, &shape.block_sizes)?;
    Ok(table.get(&shape.concatenated()).copied().unwrap_or(0))
}

/// `(1^k 0^{n-k})` for `k = 0..=n`.
pub fn diminutive_ktypes(n: usize) -> Vec<Vec<i64>> {
    (0..=n).map(|k| (0..n).map(|i| i64::from(i < k)).collect()).collect()
}

/// Dominant `Sp(n)` weights with `|μ| = Σ μ_i ≤ height`.
pub fn ktypes_up_to_height(n: usize, height: u64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for s in 0..=height as i64 {
        let mut v = decreasing_vectors(n, s, 0, s);
        v.reverse();
        out.extend(v);
    }
    out
}
