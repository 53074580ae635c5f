//! The category of closed subsets of a space, viewed as a poset category, and
//! functors between two such categories stored as index tables.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::topology::{is_subset, FiniteSpace, Mask, Subset};

/// The unique morphism `from -> to` of a poset category, when it exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Inclusion {
    from: Mask,
    to: Mask,
}

impl Inclusion {
    /// `None` unless `from` is contained in `to`.
    pub fn new(from: Mask, to: Mask) -> Option<Self> {
        is_subset(from, to).then_some(Inclusion { from, to })
    }

    pub fn identity(object: Mask) -> Self {
        Inclusion {
            from: object,
            to: object,
        }
    }

    pub fn source(&self) -> Mask {
        self.from
    }

    pub fn target(&self) -> Mask {
        self.to
    }

    /// `after ∘ self`; `None` when the two are not composable.
    pub fn then(self, after: Inclusion) -> Option<Inclusion> {
        (self.to == after.from).then_some(Inclusion {
            from: self.from,
            to: after.to,
        })
    }
}

/// A hom-set of `Closed(X)`: empty or a single inclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomSet {
    Empty,
    SingletonInclusion(Inclusion),
}

impl HomSet {
    pub fn is_empty(&self) -> bool {
        matches!(self, HomSet::Empty)
    }
}

/// Morphisms from `u` to `up` in `Closed(space)`.
pub fn hom(space: &FiniteSpace, u: &Subset, up: &Subset) -> Result<HomSet> {
    for s in [u, up] {
        if !space.is_closed(s)? {
            return Err(Error::NotClosed(s.mask()));
        }
    }
    Ok(match Inclusion::new(u.mask(), up.mask()) {
        Some(i) => HomSet::SingletonInclusion(i),
        None => HomSet::Empty,
    })
}

pub(crate) fn same_space(a: &Arc<FiniteSpace>, b: &Arc<FiniteSpace>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A map `Closed(source) -> Closed(target)`.
///
/// `table[i]` is the index in `target.closed_sets()` of the image of
/// `source.closed_sets()[i]`. Construction checks that the table is total and
/// in range but not that it is monotone; see [`is_functor`].
#[derive(Clone, Debug)]
pub struct MonotoneMap {
    source: Arc<FiniteSpace>,
    target: Arc<FiniteSpace>,
    table: Vec<usize>,
}

impl PartialEq for MonotoneMap {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
            && same_space(&self.source, &other.source)
            && same_space(&self.target, &other.target)
    }
}

impl Eq for MonotoneMap {}

impl MonotoneMap {
    pub fn new(
        source: Arc<FiniteSpace>,
        target: Arc<FiniteSpace>,
        table: Vec<usize>,
    ) -> Result<Self> {
        if table.len() != source.closed_count() {
            return Err(Error::MalformedTable(format!(
                "{} entries for {} closed sets",
                table.len(),
                source.closed_count()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&j| j >= target.closed_count()) {
            return Err(Error::MalformedTable(format!(
                "index {bad} is out of range for {} target closed sets",
                target.closed_count()
            )));
        }
        Ok(MonotoneMap {
            source,
            target,
            table,
        })
    }

    /// Tabulate `f` over the closed sets of `source`. Every image must be
    /// closed in `target`.
    pub fn from_fn<F>(source: Arc<FiniteSpace>, target: Arc<FiniteSpace>, f: F) -> Result<Self>
    where
        F: Fn(Mask) -> Mask,
    {
        let table = source
            .closed_sets()
            .iter()
            .map(|&u| {
                let image = f(u);
                target.closed_index(image).ok_or_else(|| {
                    Error::MalformedTable(format!("image {image:#b} of {u:#b} is not closed"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MonotoneMap {
            source,
            target,
            table,
        })
    }

    /// Build from explicit `(closed set, image)` pairs covering every source
    /// closed set exactly once.
    pub fn from_pairs(
        source: Arc<FiniteSpace>,
        target: Arc<FiniteSpace>,
        pairs: &[(Mask, Mask)],
    ) -> Result<Self> {
        let mut table = vec![None; source.closed_count()];
        for &(u, image) in pairs {
            let i = source.closed_index(u).ok_or_else(|| {
                Error::MalformedTable(format!("{u:#b} is not a source closed set"))
            })?;
            let j = target.closed_index(image).ok_or_else(|| {
                Error::MalformedTable(format!("{image:#b} is not a target closed set"))
            })?;
            if table[i].replace(j).is_some() {
                return Err(Error::MalformedTable(format!("{u:#b} listed twice")));
            }
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(i, j)| {
                j.ok_or_else(|| {
                    Error::MalformedTable(format!("no image for {:#b}", source.closed_sets()[i]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MonotoneMap {
            source,
            target,
            table,
        })
    }

    pub fn source(&self) -> &Arc<FiniteSpace> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteSpace> {
        &self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Image of the `i`-th source closed set, as a mask.
    #[inline]
    pub fn image_at(&self, i: usize) -> Mask {
        self.target.closed_sets()[self.table[i]]
    }

    /// Image of a closed mask; `None` if `u` is not closed in the source.
    pub fn apply_mask(&self, u: Mask) -> Option<Mask> {
        self.source.closed_index(u).map(|i| self.image_at(i))
    }

    pub fn apply(&self, u: &Subset) -> Result<Subset> {
        if !self.source.is_closed(u)? {
            return Err(Error::NotClosed(u.mask()));
        }
        let image = self.apply_mask(u.mask()).expect("closed");
        Ok(self.target.subset(image).expect("target mask"))
    }

    /// `(closed set, image)` in canonical source order.
    pub fn entries(&self) -> impl Iterator<Item = (Mask, Mask)> + '_ {
        self.source
            .closed_sets()
            .iter()
            .enumerate()
            .map(move |(i, &u)| (u, self.image_at(i)))
    }

    /// Action on a morphism of the source category.
    pub fn on_morphism(&self, s: Inclusion) -> Result<Inclusion> {
        let from = self
            .apply_mask(s.source())
            .ok_or(Error::NotClosed(s.source()))?;
        let to = self
            .apply_mask(s.target())
            .ok_or(Error::NotClosed(s.target()))?;
        Inclusion::new(from, to).ok_or(Error::NotMonotone(s.source(), s.target()))
    }
}

/// Outcome of [`is_functor`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FunctorVerdict {
    pub functor: bool,
    /// First `(U, U')` with `U ⊆ U'` whose images are not nested.
    pub witness: Option<(Subset, Subset)>,
}

/// A map between poset categories is a functor exactly when it is monotone.
pub fn is_functor(m: &MonotoneMap) -> FunctorVerdict {
    let closed = m.source.closed_sets();
    let n = m.source.point_count();
    for (i, &u) in closed.iter().enumerate() {
        for (j, &up) in closed.iter().enumerate().skip(i + 1) {
            if is_subset(u, up) && !is_subset(m.image_at(i), m.image_at(j)) {
                return FunctorVerdict {
                    functor: false,
                    witness: Some((Subset::from_raw(u, n), Subset::from_raw(up, n))),
                };
            }
        }
    }
    FunctorVerdict {
        functor: true,
        witness: None,
    }
}

/// `g ∘ f`.
pub fn compose(g: &MonotoneMap, f: &MonotoneMap) -> Result<MonotoneMap> {
    if !same_space(&f.target, &g.source) {
        return Err(Error::SpaceMismatch);
    }
    Ok(MonotoneMap {
        source: f.source.clone(),
        target: g.target.clone(),
        table: f.table.iter().map(|&j| g.table[j]).collect(),
    })
}

pub fn identity_functor(space: &Arc<FiniteSpace>) -> MonotoneMap {
    MonotoneMap {
        source: space.clone(),
        target: space.clone(),
        table: (0..space.closed_count()).collect(),
    }
}

// The bijection Hom(Φ(L), M) -> Hom(L, Ψ(M)) of a poset adjunction.
fn beta(psi: &MonotoneMap, l: Mask, r: Inclusion) -> Option<Inclusion> {
    Inclusion::new(l, psi.apply_mask(r.target())?)
}

/// Check both naturality squares of the hom-set bijection for
/// `phi: Closed(X) -> Closed(Y)` and `psi: Closed(Y) -> Closed(X)`.
///
/// Bijections must exist for every closed pair first; the first pair without
/// one is reported as [`Error::BijectionMissing`]. Then, for every
/// `r: Φ(L) -> M`, every `t: M -> M'` and every `s: L' -> L`, the composites
/// `β(t∘r) = Ψ(t)∘β(r)` and `β(r∘Φ(s)) = β(r)∘s` are computed and compared.
pub fn check_naturality(phi: &MonotoneMap, psi: &MonotoneMap) -> Result<bool> {
    if !same_space(&phi.source, &psi.target) || !same_space(&phi.target, &psi.source) {
        return Err(Error::SpaceMismatch);
    }
    let xs = phi.source.closed_sets();
    let ys = phi.target.closed_sets();
    for (i, &u) in xs.iter().enumerate() {
        for (j, &v) in ys.iter().enumerate() {
            let left = is_subset(phi.image_at(i), v);
            let right = is_subset(u, psi.image_at(j));
            if left != right {
                return Err(Error::BijectionMissing { u, v });
            }
        }
    }

    for (li, &l) in xs.iter().enumerate() {
        let phi_l = phi.image_at(li);
        for &m in ys {
            let Some(r) = Inclusion::new(phi_l, m) else {
                continue;
            };
            let Some(beta_r) = beta(psi, l, r) else {
                return Ok(false);
            };
            for t in ys.iter().filter_map(|&mp| Inclusion::new(m, mp)) {
                let lhs = r.then(t).and_then(|tr| beta(psi, l, tr));
                let rhs = beta_r.then(psi.on_morphism(t)?);
                if lhs.is_none() || lhs != rhs {
                    return Ok(false);
                }
            }
            for s in xs.iter().filter_map(|&lp| Inclusion::new(lp, l)) {
                let lhs = phi
                    .on_morphism(s)?
                    .then(r)
                    .and_then(|rs| beta(psi, s.source(), rs));
                let rhs = s.then(beta_r);
                if lhs.is_none() || lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
