//! Lengths of subgroup chains in symmetric groups.

use super::SymmetryError;

/// Maximal length of a strictly descending subgroup chain in `Sym_n`:
/// `⌊(3n − 1)/2⌋ − b(n)`, with `b(n)` the binary digit sum of `n`.
pub fn chain_length_bound(n: usize) -> usize {
    assert!(n >= 1, "chain length is defined for n >= 1");
    (3 * n - 1) / 2 - n.count_ones() as usize
}

/// The classification-free estimate `n·log₂ n` (Lagrange plus `n! ≤ nⁿ`).
pub fn elementary_chain_bound(n: usize) -> f64 {
    assert!(n >= 1, "chain length is defined for n >= 1");
    n as f64 * (n as f64).log2()
}

/// Which estimate sizes the fixing sets chosen during the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoundMode {
    /// `⌈3m/2⌉` from the exact chain-length formula.
    #[default]
    Classification,
    /// `⌈m·log₂ m⌉` from the elementary chain estimate.
    Elementary,
}

impl BoundMode {
    /// Admissible fixing-set size when the acting set has `m` points.
    pub fn fixing_set_bound(self, m: usize) -> usize {
        match self {
            BoundMode::Classification => (3 * m).div_ceil(2),
            BoundMode::Elementary if m == 0 => 0,
            BoundMode::Elementary => elementary_chain_bound(m).ceil() as usize,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundMode::Classification => "csg",
            BoundMode::Elementary => "elementary",
        }
    }
}

/// Largest `n` for which [`longest_chain_bruteforce`] is supported.
pub const BRUTEFORCE_MAX_N: usize = 5;

/// Subgroup lattice of `Sym_n` for `n ≤ 5`, subgroups as bitsets over the
/// `n!` elements.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    pub element_count: usize,
    pub subgroups: Vec<u128>,
}

impl SubgroupLattice {
    pub fn of_symmetric_group(n: usize) -> Result<SubgroupLattice, SymmetryError> {
        if !(1..=BRUTEFORCE_MAX_N).contains(&n) {
            return Err(SymmetryError::ChainDegreeOutOfRange { n });
        }
        let elements = all_permutations(n);
        let index = |p: &[usize]| elements.iter().position(|q| q.as_slice() == p).unwrap();
        // table[a][b] = index of a∘b
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| index(&b.iter().map(|&x| a[x]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let identity = index(&(0..n).collect::<Vec<_>>());

        let close = |gens: &[usize]| -> u128 {
            let mut set: u128 = 1 << identity;
            let mut frontier = vec![identity];
            while let Some(x) = frontier.pop() {
                for &g in gens {
                    let y = table[g][x];
                    if set & (1 << y) == 0 {
                        set |= 1 << y;
                        frontier.push(y);
                    }
                }
            }
            set
        };

        // Every subgroup is reached by adjoining one element at a time.
        let mut subgroups: Vec<u128> = vec![1 << identity];
        let mut generators: Vec<Vec<usize>> = vec![vec![]];
        let mut next = 0;
        while next < subgroups.len() {
            let (set, gens) = (subgroups[next], generators[next].clone());
            for g in 0..elements.len() {
                if set & (1 << g) != 0 {
                    continue;
                }
                let mut extended = gens.clone();
                extended.push(g);
                let closure = close(&extended);
                if !subgroups.contains(&closure) {
                    subgroups.push(closure);
                    generators.push(extended);
                }
            }
            next += 1;
        }
        subgroups.sort_by_key(|s| (s.count_ones(), *s));
        Ok(SubgroupLattice {
            element_count: elements.len(),
            subgroups,
        })
    }

    /// Longest strictly descending chain from the whole group to the
    /// trivial group, counted in strict inclusions.
    pub fn longest_chain(&self) -> usize {
        // Subgroups are sorted by order, so every proper subgroup precedes
        // its supergroups.
        let mut longest = vec![0usize; self.subgroups.len()];
        for (i, &h) in self.subgroups.iter().enumerate() {
            longest[i] = self.subgroups[..i]
                .iter()
                .enumerate()
                .filter(|&(_, &k)| k & !h == 0 && k != h)
                .map(|(j, _)| longest[j] + 1)
                .max()
                .unwrap_or(0);
        }
        *longest.last().unwrap()
    }
}

/// Exhaustive longest subgroup chain in `Sym_n`, `1 ≤ n ≤ 5`.
pub fn longest_chain_bruteforce(n: usize) -> Result<usize, SymmetryError> {
    Ok(SubgroupLattice::of_symmetric_group(n)?.longest_chain())
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}
