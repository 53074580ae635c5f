//! Exhaustive verification campaign over all small labeled topologies.
//!
//! Every ordered pair of spaces with at most `max_points` points is checked
//! against every function between them. Work is split into one unit per
//! `(X, Y)` pair, run in parallel, and merged back in enumeration order so
//! that the report does not depend on scheduling.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::adjunction::is_adjoint;
use crate::continuity::{
    check_ddag, is_continuous, verify_theorem_with, AdjointOracle, SetFunction,
};
use crate::error::{Error, Result};
use crate::topology::{enumerate_spaces, FiniteSpace, Mask, Subset};

/// All `|Y|^|X|` maps `X -> Y` in lexicographic order of their image tuples.
pub fn enumerate_functions(x: &Arc<FiniteSpace>, y: &Arc<FiniteSpace>) -> FunctionEnumerator {
    let done = x.point_count() > 0 && y.point_count() == 0;
    FunctionEnumerator {
        domain: x.clone(),
        codomain: y.clone(),
        next: (!done).then(|| vec![0; x.point_count()]),
    }
}

#[derive(Debug, Clone)]
pub struct FunctionEnumerator {
    domain: Arc<FiniteSpace>,
    codomain: Arc<FiniteSpace>,
    next: Option<Vec<usize>>,
}

impl Iterator for FunctionEnumerator {
    type Item = SetFunction;

    fn next(&mut self) -> Option<SetFunction> {
        let current = self.next.take()?;
        let mut successor = current.clone();
        let base = self.codomain.point_count();
        let mut carried = true;
        for digit in successor.iter_mut().rev() {
            *digit += 1;
            if *digit < base {
                carried = false;
                break;
            }
            *digit = 0;
        }
        if !carried {
            self.next = Some(successor);
        }
        Some(
            SetFunction::new(self.domain.clone(), self.codomain.clone(), current)
                .expect("enumerated mapping is in range"),
        )
    }
}

/// Totals for one `(|X|, |Y|)` size block.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BlockStats {
    pub domain_points: usize,
    pub codomain_points: usize,
    pub space_pairs: u64,
    pub functions: u64,
    pub continuous: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceCount {
    pub points: usize,
    pub spaces: usize,
}

/// A function for which the theorem check did not go through.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub domain_points: usize,
    pub domain_closed_sets: Vec<Mask>,
    pub codomain_points: usize,
    pub codomain_closed_sets: Vec<Mask>,
    pub mapping: Vec<usize>,
    pub message: String,
}

impl Mismatch {
    fn new(phi: &SetFunction, err: &Error) -> Self {
        Mismatch {
            domain_points: phi.domain().point_count(),
            domain_closed_sets: phi.domain().closed_sets().to_vec(),
            codomain_points: phi.codomain().point_count(),
            codomain_closed_sets: phi.codomain().closed_sets().to_vec(),
            mapping: phi.mapping().to_vec(),
            message: err.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub max_points: usize,
    pub spaces_checked: Vec<SpaceCount>,
    pub functions_checked: u64,
    pub continuous_count: u64,
    pub blocks: Vec<BlockStats>,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CampaignReport {
    pub fn block(&self, domain_points: usize, codomain_points: usize) -> Option<&BlockStats> {
        self.blocks
            .iter()
            .find(|b| b.domain_points == domain_points && b.codomain_points == codomain_points)
    }
}

/// Configurable campaign run. [`run_campaign`] covers the common case.
#[derive(Clone, Debug)]
pub struct Campaign {
    max_points: usize,
    include_four: bool,
    threads: Option<usize>,
    oracle: AdjointOracle,
}

impl Campaign {
    pub fn new(max_points: usize) -> Self {
        Campaign {
            max_points,
            include_four: false,
            threads: None,
            oracle: is_adjoint,
        }
    }

    /// Allow `max_points = 4`.
    pub fn include_four(mut self, yes: bool) -> Self {
        self.include_four = yes;
        self
    }

    /// Run on a dedicated pool of `threads` workers instead of the global one.
    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    /// Replace the adjointness check (used for mutation testing).
    pub fn oracle(mut self, oracle: AdjointOracle) -> Self {
        self.oracle = oracle;
        self
    }

    pub fn run(&self) -> Result<CampaignReport> {
        let limit = if self.include_four { 4 } else { 3 };
        if self.max_points == 0 || self.max_points > limit {
            return Err(Error::UnsupportedSize(self.max_points));
        }
        match self.threads {
            Some(threads) => rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| Error::Format(e.to_string()))?
                .install(|| self.run_inner()),
            None => self.run_inner(),
        }
    }

    fn run_inner(&self) -> Result<CampaignReport> {
        let start = Instant::now();
        let spaces = all_spaces(self.max_points)?;
        let spaces_checked = (0..=self.max_points)
            .map(|n| SpaceCount {
                points: n,
                spaces: spaces.iter().filter(|s| s.point_count() == n).count(),
            })
            .collect();

        let units: Vec<(usize, usize)> = (0..spaces.len())
            .flat_map(|i| (0..spaces.len()).map(move |j| (i, j)))
            .collect();
        let oracle = self.oracle;
        let results: Vec<UnitResult> = units
            .par_iter()
            .map(|&(i, j)| check_pair(&spaces[i], &spaces[j], oracle))
            .collect();

        let side = self.max_points + 1;
        let mut blocks: Vec<BlockStats> = (0..side * side)
            .map(|k| BlockStats {
                domain_points: k / side,
                codomain_points: k % side,
                ..BlockStats::default()
            })
            .collect();
        let mut mismatches = Vec::new();
        for (&(i, j), unit) in units.iter().zip(results) {
            let block = &mut blocks[spaces[i].point_count() * side + spaces[j].point_count()];
            block.space_pairs += 1;
            block.functions += unit.functions;
            block.continuous += unit.continuous;
            mismatches.extend(unit.mismatches);
        }

        Ok(CampaignReport {
            max_points: self.max_points,
            spaces_checked,
            functions_checked: blocks.iter().map(|b| b.functions).sum(),
            continuous_count: blocks.iter().map(|b| b.continuous).sum(),
            blocks,
            mismatches,
            elapsed: start.elapsed(),
        })
    }
}

struct UnitResult {
    functions: u64,
    continuous: u64,
    mismatches: Vec<Mismatch>,
}

fn check_pair(x: &Arc<FiniteSpace>, y: &Arc<FiniteSpace>, oracle: AdjointOracle) -> UnitResult {
    let mut unit = UnitResult {
        functions: 0,
        continuous: 0,
        mismatches: Vec::new(),
    };
    for phi in enumerate_functions(x, y) {
        unit.functions += 1;
        match verify_theorem_with(&phi, oracle) {
            Ok(report) => unit.continuous += u64::from(report.continuous),
            Err(err) => unit.mismatches.push(Mismatch::new(&phi, &err)),
        }
    }
    unit
}

/// Every space with at most `max_points` points, ordered by size and then
/// by enumeration order.
pub fn all_spaces(max_points: usize) -> Result<Vec<Arc<FiniteSpace>>> {
    let mut spaces = Vec::new();
    for n in 0..=max_points {
        spaces.extend(enumerate_spaces(n)?.map(Arc::new));
    }
    Ok(spaces)
}

/// Exhaustive theorem check up to `max_points` points (3, or 4 with
/// `include_four`).
pub fn run_campaign(max_points: usize, include_four: bool) -> Result<CampaignReport> {
    Campaign::new(max_points).include_four(include_four).run()
}

/// A discontinuous function together with the evidence against it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GalleryEntry {
    pub function: SetFunction,
    /// Closed `V` whose preimage is not closed.
    pub continuity_witness: Subset,
    /// `(cl(φ⁻¹(V)), V)`, which breaks `U ⊆ cl(φ⁻¹(V)) ⟹ φ(U) ⊆ V`.
    pub converse_pair: (Subset, Subset),
}

/// The first `limit` discontinuous functions in campaign order.
pub fn find_discontinuous_gallery(max_points: usize, limit: usize) -> Result<Vec<GalleryEntry>> {
    if max_points > 3 {
        return Err(Error::UnsupportedSize(max_points));
    }
    let mut gallery = Vec::new();
    if limit == 0 {
        return Ok(gallery);
    }
    let spaces = all_spaces(max_points)?;
    for x in &spaces {
        for y in &spaces {
            for phi in enumerate_functions(x, y) {
                let Some(v) = is_continuous(&phi).witness else {
                    continue;
                };
                let u = x.closure(&phi.preimage(&v)?)?;
                gallery.push(GalleryEntry {
                    function: phi,
                    continuity_witness: v,
                    converse_pair: (u, v),
                });
                if gallery.len() == limit {
                    return Ok(gallery);
                }
            }
        }
    }
    Ok(gallery)
}

/// Re-derive an entry's verdicts from scratch.
pub fn gallery_entry_is_valid(entry: &GalleryEntry) -> bool {
    let phi = &entry.function;
    let (u, v) = entry.converse_pair;
    let preimage = phi.preimage_mask(v.mask());
    !is_continuous(phi).continuous
        && !check_ddag(phi).holds
        && !phi.domain().is_closed_mask(preimage)
        && u.mask() == phi.domain().closure_mask(preimage)
        && !crate::topology::is_subset(phi.image_mask(u.mask()), v.mask())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::validate_space;

    fn space(n: usize, family: &[Mask]) -> Arc<FiniteSpace> {
        Arc::new(validate_space(n, family).unwrap())
    }

    #[test]
    fn function_counts() {
        let two = space(2, &[0, 3]);
        let three = space(3, &[0, 7]);
        let empty = space(0, &[0]);
        assert_eq!(enumerate_functions(&two, &two).count(), 4);
        assert_eq!(enumerate_functions(&three, &two).count(), 8);
        assert_eq!(enumerate_functions(&empty, &two).count(), 1);
        assert_eq!(enumerate_functions(&empty, &empty).count(), 1);
        assert_eq!(enumerate_functions(&two, &empty).count(), 0);
    }

    #[test]
    fn function_order_is_lexicographic() {
        let two = space(2, &[0, 3]);
        let maps: Vec<Vec<usize>> = enumerate_functions(&two, &two)
            .map(|f| f.mapping().to_vec())
            .collect();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn campaign_size_limits() {
        assert_eq!(
            run_campaign(4, false).unwrap_err(),
            Error::UnsupportedSize(4)
        );
        assert_eq!(
            run_campaign(0, false).unwrap_err(),
            Error::UnsupportedSize(0)
        );
        assert_eq!(
            run_campaign(5, true).unwrap_err(),
            Error::UnsupportedSize(5)
        );
    }

    #[test]
    fn two_point_campaign() {
        let report = run_campaign(2, false).unwrap();
        assert!(report.mismatches.is_empty());
        let block = report.block(2, 2).unwrap();
        assert_eq!(block.space_pairs, 16);
        assert_eq!(block.functions, 64);
        assert_eq!(
            report
                .spaces_checked
                .iter()
                .map(|c| c.spaces)
                .collect::<Vec<_>>(),
            vec![1, 1, 4]
        );
    }

    #[test]
    fn gallery_basics() {
        assert!(find_discontinuous_gallery(3, 0).unwrap().is_empty());
        let gallery = find_discontinuous_gallery(2, 1000).unwrap();
        assert!(gallery.iter().all(gallery_entry_is_valid));
        let target = (vec![0u64, 3], vec![0u64, 1, 2, 3], vec![0usize, 1]);
        assert!(gallery.iter().any(|e| {
            (
                e.function.domain().closed_sets().to_vec(),
                e.function.codomain().closed_sets().to_vec(),
                e.function.mapping().to_vec(),
            ) == target
        }));
    }
}
