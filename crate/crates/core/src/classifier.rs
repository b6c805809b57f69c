//! Top-level verdicts: Ulrich line-bundle status and Ulrich complexity.
//!
//! Existence is never inferred from numerics. It comes only from the certified
//! constructions: the explicit line bundles on (0,2,2) and (0,2,4), and the
//! special rank-two recipe. Every `impossible` verdict is re-derived by the
//! matching argument in [`crate::numerics`] before it is returned.

use serde::{Deserialize, Serialize};

use crate::citation::Citation;
use crate::construction::{special_rank2_recipe, verify_recipe};
use crate::error::{Error, Result};
use crate::geometry::{picard_classification, BranchTriple};
use crate::lattice::{preset_lattice, DivisorClass, Preset};
use crate::numerics::{
    check_numerical_ulrich, odd_rank_obstruction, p1xp1_line_search, rank1_rho1_search,
    verify_024_certificate, FeasibilityStatus, UlrichCandidate,
};

/// T1 = {(0,4,2n): n ≥ 2} ∪ {(2,2,2n): n ≥ 1}, on the sorted triple.
pub fn in_t1(t: &BranchTriple) -> bool {
    matches!(t.degrees(), [0, 4, c] | [2, 2, c] if c % 2 == 0 && c >= t.n2())
}

/// T2 = {(0,2,2), (0,2,4)}.
pub fn in_t2(t: &BranchTriple) -> bool {
    matches!(t.degrees(), [0, 2, 2] | [0, 2, 4])
}

/// n for sorted triples (0,2,2n) with n ≥ 3.
fn quadric_family_index(t: &BranchTriple) -> Option<i64> {
    match t.degrees() {
        [0, 2, c] if c % 2 == 0 && c >= 6 => Some(c / 2),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LineBundleAvailability {
    Exists,
    Impossible,
    Open,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReasonKind {
    OddRankParity,
    PicardOneElimination,
    QuadricDiscriminant,
    CertifiedConstruction,
    OpenFamily,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reason {
    pub kind: ReasonKind,
    pub citations: Vec<Citation>,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineBundleStatus {
    pub status: LineBundleAvailability,
    pub reason: Reason,
}

fn expect_status(
    got: FeasibilityStatus,
    want: FeasibilityStatus,
    what: &str,
    t: &BranchTriple,
) -> Result<()> {
    if got != want {
        return Err(Error::consistency(format!(
            "{what} on {t} returned {got:?}, classifier expected {want:?}"
        )));
    }
    Ok(())
}

pub fn line_bundle_status(t: &BranchTriple) -> Result<LineBundleStatus> {
    let (status, kind, citations, text) = if !t.is_even() {
        let v = odd_rank_obstruction(t, 1)?;
        expect_status(
            v.status,
            FeasibilityStatus::InfeasibleParity,
            "odd-rank parity",
            t,
        )?;
        (
            LineBundleAvailability::Impossible,
            ReasonKind::OddRankParity,
            vec![Citation::OddRankParity],
            format!("odd cover: n(n−6) = {} is odd", t.sum() * (t.sum() - 6)),
        )
    } else if picard_classification(t)?.rho_is_one {
        let v = rank1_rho1_search(t)?;
        expect_status(
            v.status,
            FeasibilityStatus::InfeasibleSearch,
            "ρ = 1 elimination",
            t,
        )?;
        (
            LineBundleAvailability::Impossible,
            ReasonKind::PicardOneElimination,
            vec![
                Citation::PicardJumpFamilies,
                Citation::PicardOneElimination,
                Citation::LineBundleFamilies,
            ],
            format!(
                "ρ(S) = 1; the c2 equality reduces to n1²+n2²+n3² = {} ≠ 0",
                v.residual.unwrap_or_default()
            ),
        )
    } else if let Some(n) = quadric_family_index(t) {
        let v = p1xp1_line_search(n, None)?;
        expect_status(
            v.status,
            FeasibilityStatus::InfeasibleSearch,
            "P¹×P¹ discriminant",
            t,
        )?;
        (
            LineBundleAvailability::Impossible,
            ReasonKind::QuadricDiscriminant,
            vec![Citation::QuadricDiscriminant, Citation::LineBundleNecessity],
            format!(
                "(0,2,2n) with n = {n}: n²+1 = {} is not a perfect square",
                n * n + 1
            ),
        )
    } else if t.degrees() == [0, 2, 4] {
        verify_024_certificate()?;
        (
            LineBundleAvailability::Exists,
            ReasonKind::CertifiedConstruction,
            vec![Citation::LowDegreeLineBundles],
            "K3 surface; D = H + Γ1 + E1' − E2' has D² = 4, D·H = 6 and the required vanishings"
                .to_string(),
        )
    } else if t.degrees() == [0, 2, 2] {
        // Degree-4 del Pezzo: a conic through two of the five blown-up points.
        let lat = preset_lattice(Preset::DelPezzo(4))?;
        let conic = DivisorClass::new(vec![2, -1, -1, 0, 0, 0]);
        let genus = lat.arithmetic_genus(&conic)?;
        if !check_numerical_ulrich(&lat, &UlrichCandidate::line_bundle(conic), None)?
            || genus != 0.into()
        {
            return Err(Error::consistency(
                "degree-4 del Pezzo witness fails the Chern equalities",
            ));
        }
        (
            LineBundleAvailability::Exists,
            ReasonKind::CertifiedConstruction,
            vec![Citation::LowDegreeLineBundles],
            "del Pezzo surface of degree 4 with H = −K; a rational normal curve class is Ulrich"
                .to_string(),
        )
    } else if in_t1(t) {
        (
            LineBundleAvailability::Open,
            ReasonKind::OpenFamily,
            vec![Citation::LineBundleNecessity, Citation::OpenCases],
            "numerically allowed family; existence of an Ulrich line bundle is undecided"
                .to_string(),
        )
    } else {
        return Err(Error::consistency(format!(
            "{t} is even with ρ > 1 but lies in no known family"
        )));
    };
    Ok(LineBundleStatus {
        status,
        reason: Reason {
            kind,
            citations,
            text,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplexityKind {
    Exact,
    UpperBound,
    LowerBoundOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub low: u32,
    pub high: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityVerdict {
    pub kind: ComplexityKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bounds: Option<Bounds>,
    pub trail: Vec<Citation>,
}

impl ComplexityVerdict {
    fn exact(value: u32, trail: Vec<Citation>) -> Self {
        ComplexityVerdict {
            kind: ComplexityKind::Exact,
            value: Some(value),
            bounds: None,
            trail,
        }
    }

    fn bounded(kind: ComplexityKind, low: u32, high: Option<u32>, trail: Vec<Citation>) -> Self {
        ComplexityVerdict {
            kind,
            value: None,
            bounds: Some(Bounds { low, high }),
            trail,
        }
    }

    /// Smallest rank not excluded.
    pub fn lower(&self) -> u32 {
        self.value.or(self.bounds.map(|b| b.low)).unwrap_or(1)
    }

    /// Largest rank needed, if known.
    pub fn upper(&self) -> Option<u32> {
        self.value.or(self.bounds.and_then(|b| b.high))
    }
}

pub fn ulrich_complexity(t: &BranchTriple) -> Result<ComplexityVerdict> {
    if !t.is_even() {
        return Ok(ComplexityVerdict::bounded(
            ComplexityKind::LowerBoundOnly,
            2,
            None,
            vec![
                Citation::OddRankParity,
                Citation::LineBundleNecessity,
                Citation::Complexity,
            ],
        ));
    }
    // Every even triple except (0,2,2) has a rank-two witness.
    let rank_two = if t.degrees() == [0, 2, 2] {
        false
    } else {
        let recipe = special_rank2_recipe(t)?;
        verify_recipe(t, &recipe)?;
        true
    };
    let verdict = if in_t2(t) {
        let mut trail = vec![Citation::LowDegreeLineBundles];
        if rank_two {
            trail.push(Citation::SpecialRankTwo);
        }
        trail.push(Citation::ComplexityOne);
        ComplexityVerdict::exact(1, trail)
    } else if in_t1(t) {
        ComplexityVerdict::bounded(
            ComplexityKind::UpperBound,
            1,
            Some(2),
            vec![
                Citation::SpecialRankTwo,
                Citation::OpenCases,
                Citation::ComplexityBounded,
            ],
        )
    } else {
        ComplexityVerdict::exact(
            2,
            vec![
                Citation::LineBundleNecessity,
                Citation::SpecialRankTwo,
                Citation::ComplexityGeneric,
            ],
        )
    };
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::validate_triple;

    fn triple(a: i64, b: i64, c: i64) -> BranchTriple {
        validate_triple(a, b, c).unwrap()
    }

    #[test]
    fn line_bundle_examples() {
        let s = line_bundle_status(&triple(0, 2, 6)).unwrap();
        assert_eq!(s.status, LineBundleAvailability::Impossible);
        assert_eq!(s.reason.kind, ReasonKind::QuadricDiscriminant);
        assert!(s.reason.citations.contains(&Citation::QuadricDiscriminant));

        let s = line_bundle_status(&triple(0, 2, 4)).unwrap();
        assert_eq!(s.status, LineBundleAvailability::Exists);
        let s = line_bundle_status(&triple(0, 2, 2)).unwrap();
        assert_eq!(s.status, LineBundleAvailability::Exists);

        let s = line_bundle_status(&triple(0, 4, 8)).unwrap();
        assert_eq!(s.status, LineBundleAvailability::Open);
        let s = line_bundle_status(&triple(2, 2, 2)).unwrap();
        assert_eq!(s.status, LineBundleAvailability::Open);

        let s = line_bundle_status(&triple(1, 3, 7)).unwrap();
        assert_eq!(s.reason.kind, ReasonKind::OddRankParity);
        let s = line_bundle_status(&triple(2, 4, 6)).unwrap();
        assert_eq!(s.reason.kind, ReasonKind::PicardOneElimination);
    }

    #[test]
    fn complexity_examples() {
        let v = ulrich_complexity(&triple(2, 4, 6)).unwrap();
        assert_eq!((v.kind, v.value), (ComplexityKind::Exact, Some(2)));
        assert!(v.trail.contains(&Citation::ComplexityGeneric));

        let v = ulrich_complexity(&triple(0, 2, 2)).unwrap();
        assert_eq!((v.kind, v.value), (ComplexityKind::Exact, Some(1)));
        assert!(!v.trail.contains(&Citation::SpecialRankTwo));

        let v = ulrich_complexity(&triple(0, 2, 4)).unwrap();
        assert!(v.trail.contains(&Citation::SpecialRankTwo));

        let v = ulrich_complexity(&triple(0, 4, 4)).unwrap();
        assert_eq!(v.kind, ComplexityKind::UpperBound);
        assert_eq!(
            v.bounds,
            Some(Bounds {
                low: 1,
                high: Some(2)
            })
        );

        let v = ulrich_complexity(&triple(1, 1, 1)).unwrap();
        assert_eq!(v.kind, ComplexityKind::LowerBoundOnly);
        assert_eq!(v.bounds, Some(Bounds { low: 2, high: None }));
    }

    #[test]
    fn family_predicates() {
        assert!(in_t1(&triple(0, 4, 4)));
        assert!(in_t1(&triple(2, 2, 2)));
        assert!(in_t1(&triple(2, 2, 8)));
        assert!(!in_t1(&triple(0, 2, 4)));
        assert!(!in_t1(&triple(2, 4, 4)));
        assert!(in_t2(&triple(4, 0, 2)));
        assert!(!in_t2(&triple(0, 2, 6)));
        assert_eq!(quadric_family_index(&triple(0, 2, 6)), Some(3));
        assert_eq!(quadric_family_index(&triple(0, 2, 4)), None);
    }
}
