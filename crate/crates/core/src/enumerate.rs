//! Enumeration of nilpotent orbits by size.

use crate::orbit::Orbit;

fn partitions(total: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if total == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=max.min(total)).rev() {
        prefix.push(part);
        partitions(total - part, part, prefix, out);
        prefix.pop();
    }
}

/// Every partition of `total`, largest parts first, in decreasing lex order.
pub fn partitions_of(total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    partitions(total, total, &mut Vec::new(), &mut out);
    out
}

/// All orbits of `Sp(size)` (`size` even), as column lists.
pub fn symplectic_orbits(size: u32) -> Vec<Orbit> {
    if size % 2 == 1 {
        return Vec::new();
    }
    partitions_of(size).into_iter().filter_map(|cols| Orbit::symplectic(&cols).ok()).collect()
}

/// All orbits of `O(size)`.
pub fn orthogonal_orbits(size: u32) -> Vec<Orbit> {
    partitions_of(size).into_iter().filter_map(|cols| Orbit::orthogonal(&cols).ok()).collect()
}

/// Generic symplectic orbits of every even size up to `max_size`.
pub fn generic_orbits_up_to(max_size: u32) -> Vec<Orbit> {
    symplectic_orbits_up_to(max_size).into_iter().filter(Orbit::is_generic).collect()
}

/// Symplectic orbits of every even size `2..=max_size`.
pub fn symplectic_orbits_up_to(max_size: u32) -> Vec<Orbit> {
    (1..=max_size / 2).flat_map(|n| symplectic_orbits(2 * n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn orbit_counts() {
        // symplectic partitions (odd rows with even multiplicity): 2, 4, 8, 14 for sizes 2..8
        let c: Vec<usize> = [2, 4, 6, 8].iter().map(|&s| symplectic_orbits(s).len()).collect();
        assert_eq!(c, vec![2, 4, 8, 14]);
        // orthogonal: even rows with even multiplicity
        let b: Vec<usize> = [3, 4, 5].iter().map(|&s| orthogonal_orbits(s).len()).collect();
        assert_eq!(b, vec![2, 3, 4]);
        assert!(symplectic_orbits(5).is_empty());
    }
}
