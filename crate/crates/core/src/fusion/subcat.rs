use std::collections::{BTreeSet, HashSet};
use std::fmt;

use super::{FusionError, FusionRing, DIM_TOL};

/// Largest rank accepted by [`FusionRing::enumerate_subcategories`].
pub const DEFAULT_ENUMERATION_BOUND: usize = 16;

/// A fusion subcategory, stored as its sorted set of simple indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subcategory {
    members: Vec<usize>,
}

impl Subcategory {
    /// Checks that `members` contains the unit and is closed under duals and fusion.
    pub fn new(ring: &FusionRing, members: impl IntoIterator<Item = usize>) -> Result<Self, FusionError> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        let members: Vec<usize> = set.iter().copied().collect();
        if let Some(&bad) = members.iter().find(|&&i| i >= ring.rank()) {
            return Err(FusionError::IndexOutOfRange(bad));
        }
        let fail = |reason: String| FusionError::NotSubcategory { members: members.clone(), reason };
        if !set.contains(&0) {
            return Err(fail("missing the unit".into()));
        }
        for &i in &members {
            if !set.contains(&ring.dual(i)) {
                return Err(fail(format!("dual of {i} missing")));
            }
            for &j in &members {
                if let Some(k) = (0..ring.rank()).find(|&k| ring.n(i, j, k) > 0 && !set.contains(&k)) {
                    return Err(fail(format!("{k} appears in {i}⊗{j}")));
                }
            }
        }
        Ok(Subcategory { members })
    }

    /// The subcategory of all simples.
    pub fn whole(ring: &FusionRing) -> Self {
        Subcategory { members: (0..ring.rank()).collect() }
    }

    /// The trivial subcategory {0}.
    pub fn unit() -> Self {
        Subcategory { members: vec![0] }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.members == [0]
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subcategory) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    pub fn intersection(&self, other: &Subcategory) -> Subcategory {
        Subcategory { members: self.members.iter().copied().filter(|&i| other.contains(i)).collect() }
    }
}

impl fmt::Display for Subcategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.members.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl FusionRing {
    /// Smallest fusion subcategory containing `generators`.
    pub fn subcategory_closure(&self, generators: &[usize]) -> Result<Subcategory, FusionError> {
        if let Some(&bad) = generators.iter().find(|&&i| i >= self.rank()) {
            return Err(FusionError::IndexOutOfRange(bad));
        }
        let mut inside = vec![false; self.rank()];
        let mut queue = vec![0usize];
        queue.extend_from_slice(generators);
        let mut members = Vec::new();
        while let Some(x) = queue.pop() {
            if inside[x] {
                continue;
            }
            inside[x] = true;
            members.push(x);
            queue.push(self.dual(x));
            for &y in &members {
                for k in 0..self.rank() {
                    if !inside[k] && self.n(x, y, k) > 0 {
                        queue.push(k);
                    }
                }
            }
        }
        members.sort_unstable();
        Ok(Subcategory { members })
    }

    /// Every fusion subcategory, ordered by size and then by members.
    pub fn enumerate_subcategories(&self) -> Result<Vec<Subcategory>, FusionError> {
        self.enumerate_subcategories_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn enumerate_subcategories_bounded(&self, bound: usize) -> Result<Vec<Subcategory>, FusionError> {
        if self.rank() > bound {
            return Err(FusionError::RankTooLarge { rank: self.rank(), bound });
        }
        // Each subcategory is the closure of some subcategory plus one more
        // simple, so growing from {0} one generator at a time reaches all.
        let mut seen: HashSet<Subcategory> = HashSet::new();
        let mut frontier = vec![Subcategory::unit()];
        seen.insert(Subcategory::unit());
        while let Some(s) = frontier.pop() {
            for i in 0..self.rank() {
                if s.contains(i) {
                    continue;
                }
                let mut gens = s.members.clone();
                gens.push(i);
                let c = self.subcategory_closure(&gens)?;
                if seen.insert(c.clone()) {
                    frontier.push(c);
                }
            }
        }
        let mut all: Vec<Subcategory> = seen.into_iter().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(all)
    }

    /// Invertible simples: float dimension 1, confirmed exactly when possible.
    pub fn pointed_part(&self) -> Subcategory {
        let members = (0..self.rank())
            .filter(|&i| match self.fpdims() {
                Some(d) => d[i] == crate::exactnum::CycNum::from_int(1),
                None => (self.fpdims_float()[i] - 1.0).abs() <= DIM_TOL,
            })
            .collect();
        Subcategory { members }
    }
}
