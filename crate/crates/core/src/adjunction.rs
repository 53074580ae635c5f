//! Adjoint pairs between closed-set categories.
//!
//! `(Φ, Ψ)` is adjoint exactly when `Φ(U) ⊆ V ⟺ U ⊆ Ψ(V)` for every closed
//! `U` of the source and closed `V` of the target. Each pair `(U, V)` falls in
//! one of three cases depending on which of the two inclusions hold.

use serde::Serialize;

use crate::category::{compose, same_space, MonotoneMap};
use crate::error::{Error, Result};
use crate::topology::{is_subset, Mask, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HomCaseKind {
    /// `Φ(U) ⊆ V` and `U ⊆ Ψ(V)`.
    Case1,
    /// `Φ(U) ⊄ V` and `U ⊄ Ψ(V)`.
    Case2,
    /// Exactly one inclusion holds; the hom-sets have different sizes.
    NoBijection,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HomCase {
    pub kind: HomCaseKind,
    /// `Φ(U) ⊆ V`
    pub left_inclusion: bool,
    /// `U ⊆ Ψ(V)`
    pub right_inclusion: bool,
}

impl HomCase {
    fn from_inclusions(left: bool, right: bool) -> Self {
        let kind = match (left, right) {
            (true, true) => HomCaseKind::Case1,
            (false, false) => HomCaseKind::Case2,
            _ => HomCaseKind::NoBijection,
        };
        HomCase {
            kind,
            left_inclusion: left,
            right_inclusion: right,
        }
    }

    pub fn has_bijection(&self) -> bool {
        self.kind != HomCaseKind::NoBijection
    }
}

fn check_opposite(phi: &MonotoneMap, psi: &MonotoneMap) -> Result<()> {
    if same_space(phi.source(), psi.target()) && same_space(phi.target(), psi.source()) {
        Ok(())
    } else {
        Err(Error::SpaceMismatch)
    }
}

pub fn classify_hom_case(
    phi: &MonotoneMap,
    psi: &MonotoneMap,
    u: &Subset,
    v: &Subset,
) -> Result<HomCase> {
    check_opposite(phi, psi)?;
    let x = phi.source();
    let y = phi.target();
    if !x.is_closed(u)? {
        return Err(Error::NotClosed(u.mask()));
    }
    if !y.is_closed(v)? {
        return Err(Error::NotClosed(v.mask()));
    }
    let phi_u = phi.apply_mask(u.mask()).expect("closed");
    let psi_v = psi.apply_mask(v.mask()).expect("closed");
    Ok(HomCase::from_inclusions(
        is_subset(phi_u, v.mask()),
        is_subset(u.mask(), psi_v),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdjunctionVerdict {
    pub adjoint: bool,
    /// Smallest `(U, V)` by `(mask, mask)` at which the criterion fails.
    pub witness: Option<(Subset, Subset)>,
}

// First failing pair in (U, V) lexicographic mask order. Closed families are
// sorted, so index order is mask order.
pub(crate) fn first_violation(phi: &MonotoneMap, psi: &MonotoneMap) -> Option<(Mask, Mask)> {
    let xs = phi.source().closed_sets();
    let ys = phi.target().closed_sets();
    let psi_images: Vec<Mask> = (0..ys.len()).map(|j| psi.image_at(j)).collect();
    for (i, &u) in xs.iter().enumerate() {
        let phi_u = phi.image_at(i);
        for (&v, &psi_v) in ys.iter().zip(&psi_images) {
            if is_subset(phi_u, v) != is_subset(u, psi_v) {
                return Some((u, v));
            }
        }
    }
    None
}

pub fn is_adjoint(phi: &MonotoneMap, psi: &MonotoneMap) -> Result<AdjunctionVerdict> {
    check_opposite(phi, psi)?;
    let nx = phi.source().point_count();
    let ny = phi.target().point_count();
    Ok(match first_violation(phi, psi) {
        None => AdjunctionVerdict {
            adjoint: true,
            witness: None,
        },
        Some((u, v)) => AdjunctionVerdict {
            adjoint: false,
            witness: Some((Subset::from_raw(u, nx), Subset::from_raw(v, ny))),
        },
    })
}

/// The right adjoint of `phi`, if one exists.
///
/// The candidate sends `V` to the union of all closed `U` with `phi(U) ⊆ V`;
/// it is returned only if every such union is closed and the pair passes
/// [`is_adjoint`].
pub fn try_right_adjoint(phi: &MonotoneMap) -> Option<MonotoneMap> {
    let x = phi.source();
    let y = phi.target();
    let xs = x.closed_sets();
    let mut table = Vec::with_capacity(y.closed_count());
    for &v in y.closed_sets() {
        let join = xs
            .iter()
            .enumerate()
            .filter(|&(i, _)| is_subset(phi.image_at(i), v))
            .fold(0, |acc, (_, &u)| acc | u);
        table.push(x.closed_index(join)?);
    }
    let psi = MonotoneMap::new(y.clone(), x.clone(), table).ok()?;
    first_violation(phi, &psi).is_none().then_some(psi)
}

/// The left adjoint of `psi`, if one exists. Dual of [`try_right_adjoint`]:
/// `U` goes to the intersection of all closed `V` with `U ⊆ psi(V)`.
pub fn try_left_adjoint(psi: &MonotoneMap) -> Option<MonotoneMap> {
    let y = psi.source();
    let x = psi.target();
    let ys = y.closed_sets();
    let mut table = Vec::with_capacity(x.closed_count());
    for &u in x.closed_sets() {
        let meet = ys
            .iter()
            .enumerate()
            .filter(|&(j, _)| is_subset(u, psi.image_at(j)))
            .fold(y.full_mask(), |acc, (_, &v)| acc & v);
        table.push(y.closed_index(meet)?);
    }
    let phi = MonotoneMap::new(x.clone(), y.clone(), table).ok()?;
    first_violation(&phi, psi).is_none().then_some(phi)
}

/// Compose `(phi1, psi1): X ⇄ Y` with `(phi2, psi2): Y ⇄ Z` into
/// `(phi2 ∘ phi1, psi1 ∘ psi2): X ⇄ Z`.
pub fn compose_adjunctions(
    first: (&MonotoneMap, &MonotoneMap),
    second: (&MonotoneMap, &MonotoneMap),
) -> Result<(MonotoneMap, MonotoneMap)> {
    let (phi1, psi1) = first;
    let (phi2, psi2) = second;
    if !is_adjoint(phi1, psi1)?.adjoint || !is_adjoint(phi2, psi2)?.adjoint {
        return Err(Error::NotAdjointInput);
    }
    if !same_space(phi2.source(), phi1.target()) {
        return Err(Error::SpaceMismatch);
    }
    Ok((compose(phi2, phi1)?, compose(psi1, psi2)?))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::category::identity_functor;
    use crate::topology::{enumerate_spaces, validate_space, FiniteSpace};

    fn space(n: usize, family: &[Mask]) -> Arc<FiniteSpace> {
        Arc::new(validate_space(n, family).unwrap())
    }

    #[test]
    fn identity_cases() {
        let s = space(2, &[0, 0b10, 0b11]);
        let id = identity_functor(&s);
        for u in s.closed_subsets() {
            assert_eq!(
                classify_hom_case(&id, &id, &u, &u).unwrap().kind,
                HomCaseKind::Case1
            );
        }
        let case = classify_hom_case(&id, &id, &s.full(), &s.empty()).unwrap();
        assert_eq!(case.kind, HomCaseKind::Case2);
        assert!(!case.left_inclusion && !case.right_inclusion);
    }

    #[test]
    fn constant_zero_pair_has_no_bijection() {
        let s = space(2, &[0, 0b10, 0b11]);
        let zero = MonotoneMap::from_fn(s.clone(), s.clone(), |_| 0).unwrap();
        let case = classify_hom_case(&zero, &zero, &s.subset(0b10).unwrap(), &s.empty()).unwrap();
        assert_eq!(case.kind, HomCaseKind::NoBijection);
        assert!(case.left_inclusion);
        assert!(!case.right_inclusion);
        let verdict = is_adjoint(&zero, &zero).unwrap();
        assert!(!verdict.adjoint);
        let (u, v) = verdict.witness.unwrap();
        assert_eq!((u.mask(), v.mask()), (0b10, 0));
    }

    #[test]
    fn classify_errors() {
        let s = space(2, &[0, 0b10, 0b11]);
        let d = space(2, &[0, 1, 2, 3]);
        let id = identity_functor(&s);
        assert_eq!(
            classify_hom_case(&id, &id, &s.subset(0b01).unwrap(), &s.empty()).unwrap_err(),
            Error::NotClosed(0b01)
        );
        assert_eq!(
            classify_hom_case(&id, &identity_functor(&d), &s.empty(), &s.empty()).unwrap_err(),
            Error::SpaceMismatch
        );
        assert_eq!(
            is_adjoint(&id, &identity_functor(&d)).unwrap_err(),
            Error::SpaceMismatch
        );
    }

    #[test]
    fn identity_is_self_adjoint() {
        for n in 0..=3 {
            for s in enumerate_spaces(n).unwrap() {
                let s = Arc::new(s);
                let id = identity_functor(&s);
                assert_eq!(
                    is_adjoint(&id, &id).unwrap(),
                    AdjunctionVerdict {
                        adjoint: true,
                        witness: None
                    }
                );
                assert_eq!(try_right_adjoint(&id), Some(id.clone()));
                assert_eq!(try_left_adjoint(&id), Some(id.clone()));
            }
        }
    }

    #[test]
    fn no_right_adjoint_for_constant_full() {
        // Sending everything to the full set fails to preserve the empty join.
        let s = space(2, &[0, 0b10, 0b11]);
        let top = MonotoneMap::from_fn(s.clone(), s.clone(), |_| 0b11).unwrap();
        assert_eq!(try_right_adjoint(&top), None);
    }

    #[test]
    fn compose_with_identity_pair() {
        let s = space(2, &[0, 0b10, 0b11]);
        let id = identity_functor(&s);
        let (f, g) = compose_adjunctions((&id, &id), (&id, &id)).unwrap();
        assert_eq!(f, id);
        assert_eq!(g, id);

        let zero = MonotoneMap::from_fn(s.clone(), s.clone(), |_| 0).unwrap();
        assert_eq!(
            compose_adjunctions((&zero, &zero), (&id, &id)).unwrap_err(),
            Error::NotAdjointInput
        );
        let d = space(2, &[0, 1, 2, 3]);
        let did = identity_functor(&d);
        assert_eq!(
            compose_adjunctions((&id, &id), (&did, &did)).unwrap_err(),
            Error::SpaceMismatch
        );
    }
}
