//! Set functions between finite spaces, continuity, and the pair of functors
//! `T_φ: U ↦ cl(φ(U))` and `T^φ: V ↦ cl(φ⁻¹(V))` they induce on closed sets.
//!
//! [`verify_theorem`] checks that `φ` is continuous exactly when
//! `(T_φ, T^φ)` is an adjoint pair, along with the intermediate conditions
//! that connect the two.

use std::sync::Arc;

use crate::adjunction::{is_adjoint, AdjunctionVerdict};
use crate::category::MonotoneMap;
use crate::error::{Error, Result};
use crate::topology::{is_subset, FiniteSpace, Mask, Subset};

/// A total map from the points of `domain` to the points of `codomain`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFunction {
    domain: Arc<FiniteSpace>,
    codomain: Arc<FiniteSpace>,
    mapping: Vec<usize>,
}

impl SetFunction {
    pub fn new(
        domain: Arc<FiniteSpace>,
        codomain: Arc<FiniteSpace>,
        mapping: Vec<usize>,
    ) -> Result<Self> {
        if mapping.len() != domain.point_count() {
            return Err(Error::InvalidMapping(format!(
                "{} images for {} domain points",
                mapping.len(),
                domain.point_count()
            )));
        }
        if let Some((p, &q)) = mapping
            .iter()
            .enumerate()
            .find(|&(_, &q)| q >= codomain.point_count())
        {
            return Err(Error::InvalidMapping(format!(
                "point {p} maps to {q}, outside the {} codomain points",
                codomain.point_count()
            )));
        }
        Ok(SetFunction {
            domain,
            codomain,
            mapping,
        })
    }

    pub fn identity(space: &Arc<FiniteSpace>) -> Self {
        SetFunction {
            domain: space.clone(),
            codomain: space.clone(),
            mapping: (0..space.point_count()).collect(),
        }
    }

    pub fn domain(&self) -> &Arc<FiniteSpace> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteSpace> {
        &self.codomain
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    #[inline]
    pub fn image_mask(&self, s: Mask) -> Mask {
        self.mapping
            .iter()
            .enumerate()
            .filter(|&(p, _)| s & (1 << p) != 0)
            .fold(0, |acc, (_, &q)| acc | (1 << q))
    }

    #[inline]
    pub fn preimage_mask(&self, t: Mask) -> Mask {
        self.mapping
            .iter()
            .enumerate()
            .filter(|&(_, &q)| t & (1 << q) != 0)
            .fold(0, |acc, (p, _)| acc | (1 << p))
    }

    pub fn image(&self, s: &Subset) -> Result<Subset> {
        self.domain.check_arity(s)?;
        Ok(Subset::from_raw(
            self.image_mask(s.mask()),
            self.codomain.point_count(),
        ))
    }

    pub fn preimage(&self, t: &Subset) -> Result<Subset> {
        self.codomain.check_arity(t)?;
        Ok(Subset::from_raw(
            self.preimage_mask(t.mask()),
            self.domain.point_count(),
        ))
    }

    fn check_closed_pair(&self, u: &Subset, v: &Subset) -> Result<()> {
        if !self.domain.is_closed(u)? {
            return Err(Error::NotClosed(u.mask()));
        }
        if !self.codomain.is_closed(v)? {
            return Err(Error::NotClosed(v.mask()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContinuityVerdict {
    pub continuous: bool,
    /// Smallest closed `V` whose preimage is not closed.
    pub witness: Option<Subset>,
}

pub fn is_continuous(phi: &SetFunction) -> ContinuityVerdict {
    let witness = phi
        .codomain
        .closed_sets()
        .iter()
        .find(|&&v| !phi.domain.is_closed_mask(phi.preimage_mask(v)))
        .map(|&v| Subset::from_raw(v, phi.codomain.point_count()));
    ContinuityVerdict {
        continuous: witness.is_none(),
        witness,
    }
}

/// `T_φ: Closed(X) -> Closed(Y)`, `U ↦ cl(φ(U))`.
pub fn induced_direct(phi: &SetFunction) -> MonotoneMap {
    let y = &phi.codomain;
    MonotoneMap::from_fn(phi.domain.clone(), y.clone(), |u| {
        y.closure_mask(phi.image_mask(u))
    })
    .expect("closures are closed")
}

/// `T^φ: Closed(Y) -> Closed(X)`, `V ↦ cl(φ⁻¹(V))`.
pub fn induced_inverse(phi: &SetFunction) -> MonotoneMap {
    let x = &phi.domain;
    MonotoneMap::from_fn(phi.codomain.clone(), x.clone(), |v| {
        x.closure_mask(phi.preimage_mask(v))
    })
    .expect("closures are closed")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DdagVerdict {
    pub holds: bool,
    /// Smallest closed `(U, V)` with `U ⊆ cl(φ⁻¹(V))` but `φ(U) ⊄ V`.
    pub witness: Option<(Subset, Subset)>,
}

fn ddag_fails_at(phi: &SetFunction, u: Mask, v: Mask) -> bool {
    is_subset(u, phi.domain.closure_mask(phi.preimage_mask(v))) && !is_subset(phi.image_mask(u), v)
}

/// Checks `U ⊆ cl(φ⁻¹(V)) ⟹ φ(U) ⊆ V` for all closed `U`, `V`.
pub fn check_ddag(phi: &SetFunction) -> DdagVerdict {
    let nx = phi.domain.point_count();
    let ny = phi.codomain.point_count();
    for &u in phi.domain.closed_sets() {
        for &v in phi.codomain.closed_sets() {
            if ddag_fails_at(phi, u, v) {
                return DdagVerdict {
                    holds: false,
                    witness: Some((Subset::from_raw(u, nx), Subset::from_raw(v, ny))),
                };
            }
        }
    }
    DdagVerdict {
        holds: true,
        witness: None,
    }
}

/// The three pointwise biconditionals linking `T_φ`, closures and `φ` at one
/// closed pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProofConditions {
    /// `T_φ(U) ⊆ V ⟺ U ⊆ T^φ(V)`
    pub functor_form: bool,
    /// `cl(φ(U)) ⊆ V ⟺ U ⊆ cl(φ⁻¹(V))`
    pub closure_form: bool,
    /// `φ(U) ⊆ V ⟺ U ⊆ cl(φ⁻¹(V))`
    pub image_form: bool,
}

impl ProofConditions {
    pub fn agree(&self) -> bool {
        self.functor_form == self.closure_form && self.closure_form == self.image_form
    }
}

pub fn proof_conditions(phi: &SetFunction, u: &Subset, v: &Subset) -> Result<ProofConditions> {
    phi.check_closed_pair(u, v)?;
    let (u, v) = (u.mask(), v.mask());
    let x = &phi.domain;
    let y = &phi.codomain;

    let direct = induced_direct(phi);
    let inverse = induced_inverse(phi);
    let t_u = direct.apply_mask(u).expect("closed");
    let t_v = inverse.apply_mask(v).expect("closed");

    let image = phi.image_mask(u);
    let closed_preimage = x.closure_mask(phi.preimage_mask(v));

    Ok(ProofConditions {
        functor_form: is_subset(t_u, v) == is_subset(u, t_v),
        closure_form: is_subset(y.closure_mask(image), v) == is_subset(u, closed_preimage),
        image_form: is_subset(image, v) == is_subset(u, closed_preimage),
    })
}

/// `φ(U) ⊆ V ⟹ U ⊆ cl(φ⁻¹(V))`. Holds for every `φ`.
pub fn forward_inclusion_lemma(phi: &SetFunction, u: &Subset, v: &Subset) -> Result<bool> {
    phi.check_closed_pair(u, v)?;
    let (u, v) = (u.mask(), v.mask());
    let lhs = is_subset(phi.image_mask(u), v);
    let rhs = is_subset(u, phi.domain.closure_mask(phi.preimage_mask(v)));
    Ok(!lhs || rhs)
}

/// Adjointness decision procedure used by [`verify_theorem_with`].
pub type AdjointOracle = fn(&MonotoneMap, &MonotoneMap) -> Result<AdjunctionVerdict>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub continuous: bool,
    pub adjoint: bool,
    pub agree: bool,
    /// Closed `V` with a non-closed preimage.
    pub continuity_witness: Option<Subset>,
    /// Smallest closed `(U, V)` where `(T_φ, T^φ)` breaks the adjunction
    /// criterion. Such pairs are exactly the violations of
    /// `U ⊆ cl(φ⁻¹(V)) ⟹ φ(U) ⊆ V`.
    pub adjunction_witness: Option<(Subset, Subset)>,
    /// `(cl(φ⁻¹(V)), V)` built from the continuity witness `V`.
    pub converse_witness: Option<(Subset, Subset)>,
}

pub fn verify_theorem(phi: &SetFunction) -> Result<TheoremReport> {
    verify_theorem_with(phi, is_adjoint)
}

/// [`verify_theorem`] with a caller-supplied adjointness check.
pub fn verify_theorem_with(phi: &SetFunction, oracle: AdjointOracle) -> Result<TheoremReport> {
    let x = &phi.domain;
    let nx = x.point_count();
    let violation = |what: String| Err(Error::TheoremViolation(what));

    let continuity = is_continuous(phi);
    let direct = induced_direct(phi);
    let inverse = induced_inverse(phi);
    let adjunction = oracle(&direct, &inverse)?;

    let agree = continuity.continuous == adjunction.adjoint;
    if !agree {
        return violation(format!(
            "continuous = {} but adjoint = {}",
            continuity.continuous, adjunction.adjoint
        ));
    }

    let ddag = check_ddag(phi);
    if ddag.holds != adjunction.adjoint || ddag.witness != adjunction.witness {
        return violation(format!(
            "(T_φ, T^φ) adjoint = {} with witness {:?}, but the closure condition gives {} with witness {:?}",
            adjunction.adjoint, adjunction.witness, ddag.holds, ddag.witness
        ));
    }

    let preimages_closed = inverse
        .entries()
        .all(|(v, t_v)| t_v == phi.preimage_mask(v));
    if preimages_closed != continuity.continuous {
        return violation(format!(
            "T^φ agrees with the raw preimage = {preimages_closed}, continuous = {}",
            continuity.continuous
        ));
    }

    let converse_witness = match continuity.witness {
        None => None,
        Some(v) => {
            let u = x.closure_mask(phi.preimage_mask(v.mask()));
            if !ddag_fails_at(phi, u, v.mask()) {
                return violation(format!(
                    "the pair (cl(φ⁻¹(V)), V) = ({u:#b}, {:#b}) does not break the closure condition",
                    v.mask()
                ));
            }
            Some((Subset::from_raw(u, nx), v))
        }
    };

    Ok(TheoremReport {
        continuous: continuity.continuous,
        adjoint: adjunction.adjoint,
        agree,
        continuity_witness: continuity.witness,
        adjunction_witness: adjunction.witness,
        converse_witness,
    })
}
