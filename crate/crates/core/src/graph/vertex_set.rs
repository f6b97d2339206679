use std::cmp::Ordering;
use std::fmt;

use crate::error::{invalid, Result};

/// Largest ground set supported by the bitmask representation.
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices `1..=n` of a graph or clutter.
///
/// Stored as a bitmask (bit `i - 1` for vertex `x_i`); the 0/1 incidence
/// vector is derived from it, so the two views always agree.
///
/// Sets are ordered by cardinality first and then lexicographically on
/// their sorted vertex lists, which is the canonical order of every
/// enumeration in this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    mask: u64,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet { n, mask: 0 }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            n,
            mask: full_mask(n),
        }
    }

    /// Builds a set from 1-based vertex labels.
    pub fn from_vertices(n: usize, vertices: &[usize]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(invalid(format!(
                "ground set of size {n} exceeds the supported {MAX_VERTICES}"
            )));
        }
        let mut mask = 0u64;
        for &v in vertices {
            if v == 0 || v > n {
                return Err(invalid(format!("vertex {v} is outside 1..={n}")));
            }
            mask |= 1 << (v - 1);
        }
        Ok(VertexSet { n, mask })
    }

    /// Builds a set from a 0/1 incidence vector.
    pub fn from_incidence(incidence: &[u32]) -> Result<Self> {
        let n = incidence.len();
        let mut vertices = Vec::new();
        for (i, &x) in incidence.iter().enumerate() {
            match x {
                0 => {}
                1 => vertices.push(i + 1),
                _ => return Err(invalid("incidence vectors are 0/1")),
            }
        }
        Self::from_vertices(n, &vertices)
    }

    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(mask & !full_mask(n) == 0);
        VertexSet { n, mask }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= self.n && self.mask >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v >= 1 && v <= self.n, "vertex {v} outside 1..={}", self.n);
        self.mask |= 1 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        if v >= 1 && v <= self.n {
            self.mask &= !(1 << (v - 1));
        }
    }

    /// Vertices in increasing order, 1-based.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut m = self.mask;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(i + 1)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn incidence(&self) -> Vec<u32> {
        (0..self.n).map(|i| (self.mask >> i & 1) as u32).collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_mask(self.n.max(other.n), self.mask | other.mask)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_mask(self.n, self.mask & other.mask)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_mask(self.n, self.mask & !other.mask)
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet::from_mask(self.n, full_mask(self.n) & !self.mask)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.mask & other.mask == 0
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Shortlex comparison of two bitmasks viewed as sorted vertex lists.
pub(crate) fn shortlex(a: u64, b: u64) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        // the first differing element decides: the list holding the smaller
        // vertex there comes first
        let diff = a ^ b;
        if diff == 0 {
            Ordering::Equal
        } else if a >> diff.trailing_zeros() & 1 == 1 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex(self.mask, other.mask).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
