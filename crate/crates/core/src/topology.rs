//! Finite topological spaces stored as their family of closed subsets.
//!
//! Points are the indices `0..n`; a subset is a bitmask over the low `n`
//! bits. Every family handed out by this module is sorted by ascending mask
//! value, which is also a linear extension of inclusion.

use std::fmt;

use crate::error::{Error, Result};

/// Bitmask over the points of a space. Bit `i` set means point `i` is a member.
pub type Mask = u64;

/// Largest supported point count for general spaces.
pub const MAX_POINTS: usize = 63;

/// Largest point count [`enumerate_spaces`] accepts.
pub const MAX_ENUMERATION_POINTS: usize = 4;

// Spaces this small get a precomputed closure lookup.
const CLOSURE_TABLE_MAX_POINTS: usize = 12;

#[inline]
pub fn full_mask(n: usize) -> Mask {
    if n == 0 {
        0
    } else {
        Mask::MAX >> (64 - n)
    }
}

#[inline]
pub(crate) fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

fn check_point_count(n: usize) -> Result<()> {
    if n > MAX_POINTS {
        return Err(Error::TooManyPoints {
            count: n,
            max: MAX_POINTS,
        });
    }
    Ok(())
}

fn check_mask(mask: Mask, n: usize) -> Result<()> {
    if mask & !full_mask(n) != 0 {
        return Err(Error::MaskOutOfRange { mask, arity: n });
    }
    Ok(())
}

/// A subset of the points of a particular space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    mask: Mask,
    arity: usize,
}

impl Subset {
    pub fn new(mask: Mask, arity: usize) -> Result<Self> {
        check_point_count(arity)?;
        check_mask(mask, arity)?;
        Ok(Subset { mask, arity })
    }

    pub(crate) fn from_raw(mask: Mask, arity: usize) -> Self {
        debug_assert!(mask & !full_mask(arity) == 0);
        Subset { mask, arity }
    }

    pub fn empty(arity: usize) -> Self {
        Subset { mask: 0, arity }
    }

    pub fn full(arity: usize) -> Self {
        Subset {
            mask: full_mask(arity),
            arity,
        }
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I, arity: usize) -> Result<Self> {
        check_point_count(arity)?;
        let mut mask = 0;
        for p in points {
            if p >= arity {
                return Err(Error::MaskOutOfRange {
                    mask: 1 << p.min(63),
                    arity,
                });
            }
            mask |= 1 << p;
        }
        Ok(Subset { mask, arity })
    }

    pub fn mask(&self) -> Mask {
        self.mask
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, point: usize) -> bool {
        point < self.arity && self.mask & (1 << point) != 0
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        is_subset(self.mask, other.mask)
    }

    pub fn complement(&self) -> Subset {
        Subset {
            mask: !self.mask & full_mask(self.arity),
            arity: self.arity,
        }
    }

    /// Member points in ascending order.
    pub fn points(&self) -> impl Iterator<Item = usize> {
        let mask = self.mask;
        (0..self.arity).filter(move |i| mask & (1 << i) != 0)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, p) in self.points().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// A finite topological space given by its closed sets.
///
/// Invariants: the family contains the empty and the full set, is closed under
/// pairwise union and intersection, and is strictly ascending by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    point_count: usize,
    labels: Option<Vec<String>>,
    closed: Vec<Mask>,
    closure_table: Option<Vec<Mask>>,
}

impl FiniteSpace {
    // Caller guarantees `closed` is canonical and satisfies the axioms.
    fn from_canonical(point_count: usize, closed: Vec<Mask>) -> Self {
        let mut space = FiniteSpace {
            point_count,
            labels: None,
            closed,
            closure_table: None,
        };
        if point_count <= CLOSURE_TABLE_MAX_POINTS {
            let table = (0..=full_mask(point_count))
                .map(|s| space.closure_by_scan(s))
                .collect();
            space.closure_table = Some(table);
        }
        space
    }

    /// Attach display labels, one per point. Labels must be distinct and
    /// non-empty and may not contain commas.
    pub fn with_labels<S: Into<String>>(mut self, labels: Vec<S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.point_count {
            return Err(Error::Format(format!(
                "expected {} point labels, got {}",
                self.point_count,
                labels.len()
            )));
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.contains(',') {
                return Err(Error::Format(format!("invalid point label {label:?}")));
            }
            if labels[..i].contains(label) {
                return Err(Error::Format(format!("duplicate point label {label:?}")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `point`, falling back to its decimal index.
    pub fn label(&self, point: usize) -> String {
        match &self.labels {
            Some(labels) => labels[point].clone(),
            None => point.to_string(),
        }
    }

    /// Index of the point carrying `label`.
    pub fn point_by_label(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(labels) => labels.iter().position(|l| l == label),
            None => label.parse().ok().filter(|&p| p < self.point_count),
        }
    }

    /// The closed family, ascending by mask.
    pub fn closed_sets(&self) -> &[Mask] {
        &self.closed
    }

    pub fn closed_count(&self) -> usize {
        self.closed.len()
    }

    pub fn closed_subsets(&self) -> impl Iterator<Item = Subset> + '_ {
        self.closed
            .iter()
            .map(move |&m| Subset::from_raw(m, self.point_count))
    }

    /// Complements of the closed sets, ascending by mask.
    pub fn open_sets(&self) -> Vec<Mask> {
        let full = self.full_mask();
        let mut opens: Vec<Mask> = self.closed.iter().map(|&c| !c & full).collect();
        opens.sort_unstable();
        opens
    }

    pub fn full_mask(&self) -> Mask {
        full_mask(self.point_count)
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.point_count)
    }

    pub fn empty(&self) -> Subset {
        Subset::empty(self.point_count)
    }

    /// Position of `mask` in the closed family.
    pub fn closed_index(&self, mask: Mask) -> Option<usize> {
        self.closed.binary_search(&mask).ok()
    }

    pub fn is_closed_mask(&self, mask: Mask) -> bool {
        self.closed_index(mask).is_some()
    }

    pub fn subset(&self, mask: Mask) -> Result<Subset> {
        Subset::new(mask, self.point_count)
    }

    pub(crate) fn check_arity(&self, s: &Subset) -> Result<()> {
        if s.arity != self.point_count {
            return Err(Error::ArityMismatch {
                expected: self.point_count,
                found: s.arity,
            });
        }
        Ok(())
    }

    pub fn is_closed(&self, s: &Subset) -> Result<bool> {
        self.check_arity(s)?;
        Ok(self.is_closed_mask(s.mask))
    }

    /// Smallest closed set containing `s`.
    pub fn closure(&self, s: &Subset) -> Result<Subset> {
        self.check_arity(s)?;
        Ok(Subset::from_raw(
            self.closure_mask(s.mask),
            self.point_count,
        ))
    }

    /// Closure on raw masks; `mask` must lie within the space.
    #[inline]
    pub fn closure_mask(&self, mask: Mask) -> Mask {
        match &self.closure_table {
            Some(table) => table[mask as usize],
            None => self.closure_by_scan(mask),
        }
    }

    fn closure_by_scan(&self, mask: Mask) -> Mask {
        self.closed
            .iter()
            .filter(|&&c| is_subset(mask, c))
            .fold(self.full_mask(), |acc, &c| acc & c)
    }
}

/// Validate `family` as the closed sets of a space on `n` points.
///
/// Duplicates are dropped and the result is sorted. Axiom violations name
/// the first offending pair in ascending order.
pub fn validate_space(n: usize, family: &[Mask]) -> Result<FiniteSpace> {
    check_point_count(n)?;
    for &m in family {
        check_mask(m, n)?;
    }
    let mut closed = family.to_vec();
    closed.sort_unstable();
    closed.dedup();

    if closed.binary_search(&0).is_err() {
        return Err(Error::MissingEmptySet);
    }
    if closed.binary_search(&full_mask(n)).is_err() {
        return Err(Error::MissingFullSet);
    }
    for (i, &a) in closed.iter().enumerate() {
        for &b in &closed[i + 1..] {
            if closed.binary_search(&(a | b)).is_err() {
                return Err(Error::NotClosedUnderUnion(a, b));
            }
            if closed.binary_search(&(a & b)).is_err() {
                return Err(Error::NotClosedUnderIntersection(a, b));
            }
        }
    }
    Ok(FiniteSpace::from_canonical(n, closed))
}

/// Build a space from its open sets by complementing each one.
pub fn from_open_family(n: usize, opens: &[Mask]) -> Result<FiniteSpace> {
    check_point_count(n)?;
    for &m in opens {
        check_mask(m, n)?;
    }
    let full = full_mask(n);
    let closed: Vec<Mask> = opens.iter().map(|&o| !o & full).collect();
    validate_space(n, &closed)
}

/// Smallest topology whose closed family contains every seed.
pub fn generate_from_closed_subbasis(n: usize, seeds: &[Mask]) -> Result<FiniteSpace> {
    check_point_count(n)?;
    for &m in seeds {
        check_mask(m, n)?;
    }
    let mut family: Vec<Mask> = seeds.to_vec();
    family.push(0);
    family.push(full_mask(n));
    family.sort_unstable();
    family.dedup();

    loop {
        let mut fresh = Vec::new();
        for (i, &a) in family.iter().enumerate() {
            for &b in &family[i + 1..] {
                for c in [a | b, a & b] {
                    if family.binary_search(&c).is_err() {
                        fresh.push(c);
                    }
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        family.extend(fresh);
        family.sort_unstable();
        family.dedup();
    }
    validate_space(n, &family)
}

/// All topologies on `n` labeled points, `n <= 4`.
///
/// A candidate family is encoded as a bitmask over the `2^n` subsets (bit `s`
/// set when subset `s` is closed); spaces are yielded in ascending order of
/// that encoding.
pub fn enumerate_spaces(n: usize) -> Result<SpaceEnumerator> {
    if n > MAX_ENUMERATION_POINTS {
        return Err(Error::UnsupportedSize(n));
    }
    let subsets = 1u32 << n;
    Ok(SpaceEnumerator {
        n,
        next: 0,
        end: 1u64 << subsets,
    })
}

/// Iterator returned by [`enumerate_spaces`].
#[derive(Debug, Clone)]
pub struct SpaceEnumerator {
    n: usize,
    next: u64,
    end: u64,
}

impl SpaceEnumerator {
    fn accepts(&self, encoding: u64) -> bool {
        let full = full_mask(self.n);
        let member = |s: Mask| encoding & (1u64 << s) != 0;
        if !member(0) || !member(full) {
            return false;
        }
        for a in 0..=full {
            if !member(a) {
                continue;
            }
            for b in a + 1..=full {
                if member(b) && (!member(a | b) || !member(a & b)) {
                    return false;
                }
            }
        }
        true
    }
}

impl Iterator for SpaceEnumerator {
    type Item = FiniteSpace;

    fn next(&mut self) -> Option<FiniteSpace> {
        while self.next < self.end {
            let encoding = self.next;
            self.next += 1;
            if self.accepts(encoding) {
                let closed = (0..=full_mask(self.n))
                    .filter(|&s| encoding & (1u64 << s) != 0)
                    .collect();
                return Some(FiniteSpace::from_canonical(self.n, closed));
            }
        }
        None
    }
}
