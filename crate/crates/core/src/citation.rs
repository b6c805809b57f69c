//! Statement labels attached to verdicts and derivation traces.
//!
//! Every verdict the crate produces carries the labels of the results it
//! rests on, so a reader can audit which step decided each case. The label
//! strings are part of the output format and must stay stable.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Citation {
    /// Branch degrees share a parity.
    #[serde(rename = "Def. 2.7")]
    SameParity,
    /// At most one branch curve may be empty.
    #[serde(rename = "Prop. 2.8 remark")]
    Disconnected,
    /// Ulrich bundle and Ulrich complexity definitions.
    #[serde(rename = "Def. 2.1/2.2")]
    UlrichDefinition,
    /// Numerical Ulrich equalities for c1 and c2.
    #[serde(rename = "Prop. 2.3")]
    UlrichEqualities,
    #[serde(rename = "Def. 2.4")]
    SpecialUlrichDefinition,
    /// Chern targets of a special Ulrich bundle.
    #[serde(rename = "Cor. 2.5")]
    SpecialUlrichTargets,
    /// Zero loci of sections of rank-two bundles.
    #[serde(rename = "Thm. 2.6")]
    CayleyBacharach,
    /// Closed formulas for K², χ, q of a bidouble plane.
    #[serde(rename = "Prop. 2.8")]
    BidoubleInvariants,
    /// Picard number of S equals that of one intermediate cover.
    #[serde(rename = "Lemma 3.1")]
    PicardReduction,
    /// Resolution of a double plane with transverse branch components.
    #[serde(rename = "Lemma 3.2")]
    ResolutionPicard,
    /// ρ(S) = 1 iff all intermediate covers have ρ = 1.
    #[serde(rename = "Cor. 3.3")]
    PicardOneCriterion,
    /// Picard numbers of low-degree intermediate double planes.
    #[serde(rename = "Prop. 3.4")]
    IntermediatePicardTable,
    /// Families with ρ(S) > 1.
    #[serde(rename = "Thm. 1.1")]
    PicardJumpFamilies,
    /// No odd-rank Ulrich bundles on odd covers.
    #[serde(rename = "Lemma 4.1")]
    OddRankParity,
    /// An Ulrich line bundle forces ρ(S) > 1.
    #[serde(rename = "Lemma 4.2")]
    PicardOneElimination,
    #[serde(rename = "Cor. 4.3")]
    LineBundleFamilies,
    /// No Ulrich line bundle on (0,2,2n), n ≥ 3.
    #[serde(rename = "Prop. 4.4")]
    QuadricDiscriminant,
    /// Necessary families for Ulrich line bundles.
    #[serde(rename = "Thm. 4.5")]
    LineBundleNecessity,
    /// Explicit Ulrich line bundles on (0,2,2) and (0,2,4).
    #[serde(rename = "Prop. 4.6")]
    LowDegreeLineBundles,
    /// Undecided low-degree cases.
    #[serde(rename = "Remark 4.7")]
    OpenCases,
    /// Special rank-two Ulrich bundle construction.
    #[serde(rename = "Thm. 5.1")]
    SpecialRankTwo,
    #[serde(rename = "Thm. 1.2")]
    Complexity,
    #[serde(rename = "Thm. 1.2(a)")]
    ComplexityGeneric,
    #[serde(rename = "Thm. 1.2(b)")]
    ComplexityBounded,
    #[serde(rename = "Thm. 1.2(c)")]
    ComplexityOne,
}

impl Citation {
    pub const ALL: [Citation; 25] = [
        Citation::SameParity,
        Citation::Disconnected,
        Citation::UlrichDefinition,
        Citation::UlrichEqualities,
        Citation::SpecialUlrichDefinition,
        Citation::SpecialUlrichTargets,
        Citation::CayleyBacharach,
        Citation::BidoubleInvariants,
        Citation::PicardReduction,
        Citation::ResolutionPicard,
        Citation::PicardOneCriterion,
        Citation::IntermediatePicardTable,
        Citation::PicardJumpFamilies,
        Citation::OddRankParity,
        Citation::PicardOneElimination,
        Citation::LineBundleFamilies,
        Citation::QuadricDiscriminant,
        Citation::LineBundleNecessity,
        Citation::LowDegreeLineBundles,
        Citation::OpenCases,
        Citation::SpecialRankTwo,
        Citation::Complexity,
        Citation::ComplexityGeneric,
        Citation::ComplexityBounded,
        Citation::ComplexityOne,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Citation::SameParity => "Def. 2.7",
            Citation::Disconnected => "Prop. 2.8 remark",
            Citation::UlrichDefinition => "Def. 2.1/2.2",
            Citation::UlrichEqualities => "Prop. 2.3",
            Citation::SpecialUlrichDefinition => "Def. 2.4",
            Citation::SpecialUlrichTargets => "Cor. 2.5",
            Citation::CayleyBacharach => "Thm. 2.6",
            Citation::BidoubleInvariants => "Prop. 2.8",
            Citation::PicardReduction => "Lemma 3.1",
            Citation::ResolutionPicard => "Lemma 3.2",
            Citation::PicardOneCriterion => "Cor. 3.3",
            Citation::IntermediatePicardTable => "Prop. 3.4",
            Citation::PicardJumpFamilies => "Thm. 1.1",
            Citation::OddRankParity => "Lemma 4.1",
            Citation::PicardOneElimination => "Lemma 4.2",
            Citation::LineBundleFamilies => "Cor. 4.3",
            Citation::QuadricDiscriminant => "Prop. 4.4",
            Citation::LineBundleNecessity => "Thm. 4.5",
            Citation::LowDegreeLineBundles => "Prop. 4.6",
            Citation::OpenCases => "Remark 4.7",
            Citation::SpecialRankTwo => "Thm. 5.1",
            Citation::Complexity => "Thm. 1.2",
            Citation::ComplexityGeneric => "Thm. 1.2(a)",
            Citation::ComplexityBounded => "Thm. 1.2(b)",
            Citation::ComplexityOne => "Thm. 1.2(c)",
        }
    }
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One human-readable derivation step together with the result it applies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub citation: Citation,
    pub text: String,
}

impl TraceStep {
    pub fn new(citation: Citation, text: impl Into<String>) -> Self {
        TraceStep {
            citation,
            text: text.into(),
        }
    }
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.citation, self.text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serde_name_matches_label() {
        for c in Citation::ALL {
            let json = serde_json::to_string(&c).unwrap();
            assert_eq!(json, format!("\"{}\"", c.label()));
            let back: Citation = serde_json::from_str(&json).unwrap();
            assert_eq!(back, c);
        }
    }
}
