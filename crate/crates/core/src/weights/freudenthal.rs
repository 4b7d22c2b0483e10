use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::Ratio;

use super::root::{dot, RootSystem, RootType, Weight};
use crate::{Error, Result};

/// Multiplicities of the dominant weights of one irreducible module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantWeights {
    /// `(weight, multiplicity)`, highest first.
    pub entries: Vec<(Vec<i64>, u64)>,
    index: HashMap<Vec<i64>, u64>,
}

impl DominantWeights {
    /// Multiplicity of a dominant weight (doubled coordinates).
    pub fn get(&self, dominant: &[i64]) -> u64 {
        self.index.get(dominant).copied().unwrap_or(0)
    }
}

type Key = (RootType, usize, Vec<i64>);

fn cache() -> &'static Mutex<HashMap<Key, Arc<DominantWeights>>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<DominantWeights>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Dominant weights of `V_highest` and their multiplicities, by
/// Freudenthal's recursion. Results are memoized per highest weight; a
/// cache entry is only published once complete.
pub fn dominant_weights(sys: &RootSystem, highest: &[i64]) -> Result<Arc<DominantWeights>> {
    sys.require_dominant(highest)?;
    let key = (sys.root_type(), sys.rank(), highest.to_vec());
    if let Some(hit) = cache().lock().expect("weight cache").get(&key) {
        return Ok(hit.clone());
    }
    let computed = Arc::new(compute(sys, highest)?);
    cache().lock().expect("weight cache").entry(key).or_insert(computed.clone());
    Ok(computed)
}

fn compute(sys: &RootSystem, highest: &[i64]) -> Result<DominantWeights> {
    // dominant weights below `highest`: close under subtracting positive roots
    let mut seen: HashSet<Vec<i64>> = HashSet::from([highest.to_vec()]);
    let mut stack = vec![highest.to_vec()];
    while let Some(mu) = stack.pop() {
        for a in sys.positive_roots() {
            let nu: Vec<i64> = mu.iter().zip(a).map(|(x, y)| x - y).collect();
            if sys.is_dominant_chamber(&nu) && !seen.contains(&nu) {
                seen.insert(nu.clone());
                stack.push(nu);
            }
        }
    }
    let rho = sys.rho();
    let mut order: Vec<Vec<i64>> = seen.into_iter().collect();
    order.sort_by(|a, b| dot(b, rho).cmp(&dot(a, rho)).then_with(|| b.cmp(a)));

    let shifted = |w: &[i64]| -> i64 {
        let s: Vec<i64> = w.iter().zip(rho).map(|(x, r)| x + r).collect();
        dot(&s, &s)
    };
    let top = shifted(highest);
    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    mult.insert(highest.to_vec(), 1);
    for mu in order.iter().skip(1) {
        let mut num: i64 = 0;
        for a in sys.positive_roots() {
            let mut nu: Vec<i64> = mu.clone();
            loop {
                for (x, y) in nu.iter_mut().zip(a) {
                    *x += y;
                }
                let m = mult.get(&sys.dominant_rep(&nu)).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                num = num
                    .checked_add(2 * m as i64 * dot(&nu, a))
                    .ok_or(Error::Overflow("Freudenthal numerator"))?;
            }
        }
        let den = top - shifted(mu);
        assert!(den > 0, "Freudenthal denominator vanished at {mu:?}");
        assert_eq!(num % den, 0, "Freudenthal quotient not integral at {mu:?}");
        let m = num / den;
        if m < 0 {
            return Err(Error::NegativeMultiplicity(m));
        }
        if m > 0 {
            mult.insert(mu.clone(), m as u64);
        }
    }
    let entries: Vec<(Vec<i64>, u64)> =
        order.into_iter().filter_map(|w| mult.get(&w).map(|&m| (w.clone(), m))).collect();
    Ok(DominantWeights { index: entries.iter().cloned().collect(), entries })
}

/// Multiplicity of `target` in `V_highest`.
pub fn weight_multiplicity(sys: &RootSystem, highest: &Weight, target: &Weight) -> Result<u64> {
    sys.check_rank(target.doubled())?;
    let table = dominant_weights(sys, highest.doubled())?;
    Ok(table.get(&sys.dominant_rep(target.doubled())))
}

/// Weyl's dimension formula.
pub fn dimension(sys: &RootSystem, highest: &Weight) -> Result<u64> {
    sys.require_dominant(highest.doubled())?;
    let rho = sys.rho();
    let lr: Vec<i64> = highest.doubled().iter().zip(rho).map(|(x, r)| x + r).collect();
    let mut value = Ratio::<i128>::from_integer(1);
    for a in sys.positive_roots() {
        value *= Ratio::new(i128::from(dot(&lr, a)), i128::from(dot(rho, a)));
    }
    assert!(value.is_integer(), "Weyl dimension {value} is not an integer");
    u64::try_from(value.to_integer()).map_err(|_| Error::Overflow("Weyl dimension"))
}

/// `Σ multiplicity × orbit size` over the dominant weights.
pub fn total_from_weights(sys: &RootSystem, highest: &Weight) -> Result<u64> {
    let table = dominant_weights(sys, highest.doubled())?;
    table.entries.iter().try_fold(0u64, |acc, (w, m)| {
        acc.checked_add(m * sys.orbit_size(w)).ok_or(Error::Overflow("weight total"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(ty: RootType, n: usize) -> RootSystem {
        RootSystem::new(ty, n)
    }

    #[test]
    fn small_multiplicities() {
        let c2 = sys(RootType::C, 2);
        let w = Weight::from_ints(&[1, 1]);
        assert_eq!(weight_multiplicity(&c2, &w, &Weight::from_ints(&[0, 0])).unwrap(), 1);
        assert_eq!(weight_multiplicity(&c2, &w, &w).unwrap(), 1);
        assert_eq!(dimension(&c2, &w).unwrap(), 5);
        let c1 = sys(RootType::C, 1);
        let st = Weight::from_ints(&[1]);
        assert_eq!(weight_multiplicity(&c1, &st, &Weight::from_ints(&[-1])).unwrap(), 1);
        assert_eq!(weight_multiplicity(&c1, &st, &Weight::from_ints(&[0])).unwrap(), 0);
        // adjoint of sl3 in GL(3) coordinates: zero weight twice
        let a2 = sys(RootType::A, 3);
        let adj = Weight::from_ints(&[1, 0, -1]);
        assert_eq!(weight_multiplicity(&a2, &adj, &Weight::from_ints(&[0, 0, 0])).unwrap(), 2);
        assert_eq!(dimension(&a2, &adj).unwrap(), 8);
        assert_eq!(dimension(&sys(RootType::B, 2), &Weight::from_doubled(vec![1, 1])).unwrap(), 4);
        assert_eq!(dimension(&sys(RootType::D, 4), &Weight::from_ints(&[1, 0, 0, 0])).unwrap(), 8);
        assert_eq!(dimension(&sys(RootType::D, 3), &Weight::from_ints(&[1, 1, 0])).unwrap(), 15);
        // C2 adjoint: zero weight multiplicity equals the rank
        assert_eq!(weight_multiplicity(&c2, &Weight::from_ints(&[2, 0]), &Weight::zero(2)).unwrap(), 2);
    }

    #[test]
    fn standard_and_trivial_dimensions() {
        for n in 1..6 {
            let c = sys(RootType::C, n);
            let mut e1 = vec![0; n];
            e1[0] = 1;
            assert_eq!(dimension(&c, &Weight::from_ints(&e1)).unwrap(), 2 * n as u64);
            for ty in [RootType::A, RootType::B, RootType::C, RootType::D] {
                assert_eq!(dimension(&sys(ty, n), &Weight::zero(n)).unwrap(), 1);
            }
        }
    }

    #[test]
    fn totals_equal_dimension() {
        // doubled coordinates; the odd entries are half-integral weights
        let cases: Vec<(RootType, Vec<i64>)> = vec![
            (RootType::C, vec![4, 2, 2]),
            (RootType::C, vec![6, 4, 0, 0]),
            (RootType::B, vec![3, 1, 1]),
            (RootType::B, vec![6, 6, 2]),
            (RootType::D, vec![4, 4, 0, 0]),
            (RootType::D, vec![3, 1, 1, -1]),
            (RootType::A, vec![8, 4, 0, -2]),
        ];
        for (ty, w) in cases {
            let s = sys(ty, w.len());
            let w = Weight::from_doubled(w);
            assert_eq!(total_from_weights(&s, &w).unwrap(), dimension(&s, &w).unwrap(), "{ty:?} {w}");
        }
    }

    #[test]
    fn rejects_non_dominant() {
        let c2 = sys(RootType::C, 2);
        assert!(matches!(dimension(&c2, &Weight::from_ints(&[0, 1])), Err(Error::NotDominant(_))));
        assert!(matches!(
            weight_multiplicity(&c2, &Weight::from_ints(&[1, 0]), &Weight::from_ints(&[0])),
            Err(Error::ShapeMismatch(_))
        ));
    }
}
