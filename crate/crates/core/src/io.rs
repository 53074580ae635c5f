//! JSON documents for spaces, functions, functor tables and verdicts.
//!
//! Points are always referred to by label. Spaces without labels use the
//! decimal point index as label.

use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::adjunction::AdjunctionVerdict;
use crate::category::MonotoneMap;
use crate::continuity::{ContinuityVerdict, SetFunction, TheoremReport};
use crate::error::{Error, Result};
use crate::topology::{from_open_family, validate_space, FiniteSpace, Mask, Subset};

/// `{"points": [...], "closed_sets": [[...], ...]}` or the same with
/// `open_sets`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_sets: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub open_sets: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionDoc {
    pub domain: SpaceDoc,
    pub codomain: SpaceDoc,
    pub map: IndexMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonotoneMapDoc {
    pub source: SpaceDoc,
    pub target: SpaceDoc,
    pub table: Vec<(Vec<String>, Vec<String>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDoc {
    #[serde(rename = "U")]
    pub u: Vec<String>,
    #[serde(rename = "V")]
    pub v: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionDoc {
    pub adjoint: bool,
    pub witness: Option<PairDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContinuityWitnessDoc {
    #[serde(rename = "V")]
    pub v: Vec<String>,
    pub preimage: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContinuityDoc {
    pub continuous: bool,
    pub witness: Option<ContinuityWitnessDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremDoc {
    pub continuous: bool,
    pub adjoint: bool,
    pub agree: bool,
    pub continuity_witness: Option<Vec<String>>,
    pub adjunction_witness: Option<PairDoc>,
    pub converse_witness: Option<PairDoc>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Format(e.to_string())
}

/// Labels of the members of `mask`, in point order.
pub fn labels_of(space: &FiniteSpace, mask: Mask) -> Vec<String> {
    (0..space.point_count())
        .filter(|p| mask & (1 << p) != 0)
        .map(|p| space.label(p))
        .collect()
}

/// `a,b` style rendering; the empty set is the empty string.
pub fn label_list(space: &FiniteSpace, mask: Mask) -> String {
    labels_of(space, mask).join(",")
}

/// `{a,b}` style rendering.
pub fn braced(space: &FiniteSpace, mask: Mask) -> String {
    format!("{{{}}}", label_list(space, mask))
}

pub fn mask_from_labels<S: AsRef<str>>(space: &FiniteSpace, labels: &[S]) -> Result<Mask> {
    labels.iter().try_fold(0, |acc, label| {
        let label = label.as_ref();
        space
            .point_by_label(label)
            .map(|p| acc | (1 << p))
            .ok_or_else(|| Error::Format(format!("unknown point {label:?}")))
    })
}

/// Parse a comma-separated label list; the empty string is the empty set.
pub fn parse_label_set(space: &FiniteSpace, text: &str) -> Result<Subset> {
    if text.is_empty() {
        return Ok(space.empty());
    }
    let labels: Vec<&str> = text.split(',').collect();
    space.subset(mask_from_labels(space, &labels)?)
}

fn family_masks(space: &FiniteSpace, sets: &[Vec<String>]) -> Result<Vec<Mask>> {
    sets.iter().map(|s| mask_from_labels(space, s)).collect()
}

pub fn space_from_doc(doc: &SpaceDoc) -> Result<FiniteSpace> {
    let n = doc.points.len();
    // Label bookkeeping goes through an indiscrete carrier first.
    let carrier =
        validate_space(n, &[0, crate::topology::full_mask(n)])?.with_labels(doc.points.clone())?;
    let space = match (&doc.closed_sets, &doc.open_sets) {
        (Some(closed), None) => validate_space(n, &family_masks(&carrier, closed)?)?,
        (None, Some(open)) => from_open_family(n, &family_masks(&carrier, open)?)?,
        _ => {
            return Err(Error::Format(
                "exactly one of \"closed_sets\" and \"open_sets\" is required".into(),
            ))
        }
    };
    space.with_labels(doc.points.clone())
}

pub fn space_to_doc(space: &FiniteSpace) -> SpaceDoc {
    SpaceDoc {
        points: (0..space.point_count()).map(|p| space.label(p)).collect(),
        closed_sets: Some(
            space
                .closed_sets()
                .iter()
                .map(|&c| labels_of(space, c))
                .collect(),
        ),
        open_sets: None,
    }
}

pub fn parse_space(json: &str) -> Result<FiniteSpace> {
    let doc: SpaceDoc = serde_json::from_str(json).map_err(json_error)?;
    space_from_doc(&doc)
}

pub fn function_from_doc(doc: &FunctionDoc) -> Result<SetFunction> {
    let domain = Arc::new(space_from_doc(&doc.domain)?);
    let codomain = Arc::new(space_from_doc(&doc.codomain)?);
    let mut mapping = vec![None; domain.point_count()];
    for (from, to) in &doc.map {
        let p = domain
            .point_by_label(from)
            .ok_or_else(|| Error::InvalidMapping(format!("unknown domain point {from:?}")))?;
        let q = codomain
            .point_by_label(to)
            .ok_or_else(|| Error::InvalidMapping(format!("unknown codomain point {to:?}")))?;
        mapping[p] = Some(q);
    }
    let mapping = mapping
        .into_iter()
        .enumerate()
        .map(|(p, q)| {
            q.ok_or_else(|| {
                Error::InvalidMapping(format!("no image for point {:?}", domain.label(p)))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SetFunction::new(domain, codomain, mapping)
}

pub fn function_to_doc(phi: &SetFunction) -> FunctionDoc {
    let (x, y) = (phi.domain(), phi.codomain());
    FunctionDoc {
        domain: space_to_doc(x),
        codomain: space_to_doc(y),
        map: phi
            .mapping()
            .iter()
            .enumerate()
            .map(|(p, &q)| (x.label(p), y.label(q)))
            .collect(),
    }
}

pub fn parse_function(json: &str) -> Result<SetFunction> {
    let doc: FunctionDoc = serde_json::from_str(json).map_err(json_error)?;
    function_from_doc(&doc)
}

pub fn monotone_map_to_doc(m: &MonotoneMap) -> MonotoneMapDoc {
    let (x, y) = (m.source(), m.target());
    MonotoneMapDoc {
        source: space_to_doc(x),
        target: space_to_doc(y),
        table: m
            .entries()
            .map(|(u, image)| (labels_of(x, u), labels_of(y, image)))
            .collect(),
    }
}

pub fn monotone_map_from_doc(doc: &MonotoneMapDoc) -> Result<MonotoneMap> {
    let source = Arc::new(space_from_doc(&doc.source)?);
    let target = Arc::new(space_from_doc(&doc.target)?);
    let pairs = doc
        .table
        .iter()
        .map(|(u, image)| {
            Ok((
                mask_from_labels(&source, u)?,
                mask_from_labels(&target, image)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    MonotoneMap::from_pairs(source, target, &pairs)
}

pub fn parse_monotone_map(json: &str) -> Result<MonotoneMap> {
    let doc: MonotoneMapDoc = serde_json::from_str(json).map_err(json_error)?;
    monotone_map_from_doc(&doc)
}

fn pair_doc(x: &FiniteSpace, y: &FiniteSpace, pair: Option<(Subset, Subset)>) -> Option<PairDoc> {
    pair.map(|(u, v)| PairDoc {
        u: labels_of(x, u.mask()),
        v: labels_of(y, v.mask()),
    })
}

/// `x` and `y` are the source and target of the left adjoint.
pub fn adjunction_to_doc(
    x: &FiniteSpace,
    y: &FiniteSpace,
    verdict: &AdjunctionVerdict,
) -> AdjunctionDoc {
    AdjunctionDoc {
        adjoint: verdict.adjoint,
        witness: pair_doc(x, y, verdict.witness),
    }
}

pub fn continuity_to_doc(phi: &SetFunction, verdict: &ContinuityVerdict) -> ContinuityDoc {
    ContinuityDoc {
        continuous: verdict.continuous,
        witness: verdict.witness.map(|v| ContinuityWitnessDoc {
            v: labels_of(phi.codomain(), v.mask()),
            preimage: labels_of(phi.domain(), phi.preimage_mask(v.mask())),
        }),
    }
}

pub fn theorem_to_doc(phi: &SetFunction, report: &TheoremReport) -> TheoremDoc {
    let (x, y) = (phi.domain(), phi.codomain());
    TheoremDoc {
        continuous: report.continuous,
        adjoint: report.adjoint,
        agree: report.agree,
        continuity_witness: report.continuity_witness.map(|v| labels_of(y, v.mask())),
        adjunction_witness: pair_doc(x, y, report.adjunction_witness),
        converse_witness: pair_doc(x, y, report.converse_witness),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SIERPINSKI: &str = r#"{"points": ["a","b"], "closed_sets": [[], ["b"], ["a","b"]]}"#;

    #[test]
    fn parse_closed_and_open() {
        let s = parse_space(SIERPINSKI).unwrap();
        assert_eq!(s.closed_sets(), &[0, 0b10, 0b11]);
        let o =
            parse_space(r#"{"points": ["a","b"], "open_sets": [[], ["a"], ["a","b"]]}"#).unwrap();
        assert_eq!(s, o);
    }

    #[test]
    fn space_doc_errors() {
        assert!(matches!(
            parse_space(r#"{"points": ["a"]}"#),
            Err(Error::Format(_))
        ));
        assert!(matches!(
            parse_space(r#"{"points": ["a"], "closed_sets": [[]], "open_sets": [[]]}"#),
            Err(Error::Format(_))
        ));
        assert!(matches!(
            parse_space(r#"{"points": ["a"], "closed_sets": [[], ["z"]]}"#),
            Err(Error::Format(_))
        ));
        assert_eq!(
            parse_space(r#"{"points": ["a","b"], "closed_sets": [[], ["a"], ["b"]]}"#).unwrap_err(),
            Error::MissingFullSet
        );
        assert!(parse_space("{").is_err());
    }

    #[test]
    fn label_sets() {
        let s = parse_space(SIERPINSKI).unwrap();
        assert_eq!(parse_label_set(&s, "").unwrap(), s.empty());
        assert_eq!(parse_label_set(&s, "b,a").unwrap(), s.full());
        assert!(parse_label_set(&s, "c").is_err());
        assert_eq!(label_list(&s, 0b11), "a,b");
        assert_eq!(braced(&s, 0), "{}");
    }

    #[test]
    fn function_doc_errors() {
        let bad_key = format!(
            r#"{{"domain": {SIERPINSKI}, "codomain": {SIERPINSKI}, "map": {{"a": "a", "c": "b"}}}}"#
        );
        assert!(matches!(
            parse_function(&bad_key),
            Err(Error::InvalidMapping(_))
        ));
        let partial =
            format!(r#"{{"domain": {SIERPINSKI}, "codomain": {SIERPINSKI}, "map": {{"a": "a"}}}}"#);
        assert!(matches!(
            parse_function(&partial),
            Err(Error::InvalidMapping(_))
        ));
    }

    #[test]
    fn monotone_map_doc_roundtrip() {
        let s = Arc::new(parse_space(SIERPINSKI).unwrap());
        let m =
            MonotoneMap::from_fn(s.clone(), s.clone(), |u| if u == 0 { 0 } else { 0b11 }).unwrap();
        let json = serde_json::to_string(&monotone_map_to_doc(&m)).unwrap();
        assert_eq!(parse_monotone_map(&json).unwrap(), m);
    }
}
