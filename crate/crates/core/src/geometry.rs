//! Branch data and numerical invariants of smooth bidouble planes.
//!
//! Everything here describes the *generic* member of a family: branch curves
//! are assumed smooth, transverse and general, and only their degrees enter.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::citation::Citation;
use crate::error::{Error, Result};

/// Largest accepted branch degree. Keeps every closed-form invariant in `i64`.
pub const MAX_BRANCH_DEGREE: i64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Validated branch degrees, sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTriple")]
pub struct BranchTriple {
    n1: i64,
    n2: i64,
    n3: i64,
    parity: Parity,
}

#[derive(Deserialize)]
struct RawTriple {
    n1: i64,
    n2: i64,
    n3: i64,
    parity: Parity,
}

impl TryFrom<RawTriple> for BranchTriple {
    type Error = Error;

    fn try_from(raw: RawTriple) -> Result<Self> {
        let t = validate_triple(raw.n1, raw.n2, raw.n3)?;
        if t.parity != raw.parity || t.degrees() != [raw.n1, raw.n2, raw.n3] {
            return Err(Error::domain("serialized triple is not in canonical form"));
        }
        Ok(t)
    }
}

/// Sorts and validates a raw triple of branch degrees.
pub fn validate_triple(a: i64, b: i64, c: i64) -> Result<BranchTriple> {
    if a < 0 || b < 0 || c < 0 {
        return Err(Error::domain(format!(
            "branch degrees must be non-negative, got ({a}, {b}, {c})"
        )));
    }
    if a.max(b).max(c) > MAX_BRANCH_DEGREE {
        return Err(Error::domain(format!(
            "branch degrees above {MAX_BRANCH_DEGREE} are not supported"
        )));
    }
    if a % 2 != b % 2 || b % 2 != c % 2 {
        return Err(Error::Parity(a, b, c));
    }
    if [a, b, c].iter().filter(|&&x| x == 0).count() >= 2 {
        return Err(Error::Disconnected(a, b, c));
    }
    let mut n = [a, b, c];
    n.sort_unstable();
    let parity = if n[0] % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    };
    Ok(BranchTriple {
        n1: n[0],
        n2: n[1],
        n3: n[2],
        parity,
    })
}

impl BranchTriple {
    pub fn n1(&self) -> i64 {
        self.n1
    }

    pub fn n2(&self) -> i64 {
        self.n2
    }

    pub fn n3(&self) -> i64 {
        self.n3
    }

    pub fn degrees(&self) -> [i64; 3] {
        [self.n1, self.n2, self.n3]
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_even(&self) -> bool {
        self.parity == Parity::Even
    }

    /// n = n1 + n2 + n3.
    pub fn sum(&self) -> i64 {
        self.n1 + self.n2 + self.n3
    }

    /// The three branch pairs of the intermediate double planes, in the order
    /// (n2,n3), (n1,n3), (n1,n2). Each pair is ascending.
    pub fn intermediate_pairs(&self) -> [(i64, i64); 3] {
        [(self.n2, self.n3), (self.n1, self.n3), (self.n1, self.n2)]
    }
}

impl fmt::Display for BranchTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n1, self.n2, self.n3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub k_squared: i64,
    pub chi: i64,
    pub h_squared: i64,
    pub h_dot_k: i64,
    pub q: i64,
    pub n: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<i64>,
    #[serde(rename = "M", skip_serializing_if = "Option::is_none", default)]
    pub big_m: Option<i64>,
}

/// 4·(χ − 4) = Σn_i² + Σ_{i<j} n_i n_j − 6n. Always divisible by 4 on valid triples.
pub fn chi_numerator(t: &BranchTriple) -> i64 {
    let [a, b, c] = t.degrees();
    a * a + b * b + c * c + a * b + a * c + b * c - 6 * t.sum()
}

pub fn invariants(t: &BranchTriple) -> SurfaceInvariants {
    let n = t.sum();
    let num = chi_numerator(t);
    debug_assert_eq!(num % 4, 0, "χ is not integral for {t}");
    let (m, big_m) = if t.is_even() {
        let [m1, m2, m3] = t.degrees().map(|x| x / 2);
        let m = m1 + m2 + m3;
        (Some(m), Some(m * m + m1 * m1 + m2 * m2 + m3 * m3))
    } else {
        (None, None)
    };
    SurfaceInvariants {
        k_squared: (n - 6) * (n - 6),
        chi: 4 + num / 4,
        h_squared: 4,
        h_dot_k: 2 * (n - 6),
        q: 0,
        n,
        m,
        big_m,
    }
}

/// Picard numbers of the double plane branched over curves of degrees a ≤ b.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntermediatePicard {
    pub rho: i64,
    /// Picard number of the minimal resolution, when known.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rho_resolution: Option<i64>,
}

pub fn intermediate_picard(a: i64, b: i64) -> Result<IntermediatePicard> {
    if a < 0 || a > b || (b - a) % 2 != 0 || (a == 0 && b == 0) {
        return Err(Error::domain(format!(
            "intermediate pair ({a},{b}) must satisfy 0 <= a <= b, a = b mod 2, not both zero"
        )));
    }
    let picard = match (a + b, a, b) {
        // A_1 points over D1 ∩ D2 contribute ab exceptional classes to the
        // resolution and nothing to Y itself.
        (s, _, _) if s >= 6 => IntermediatePicard {
            rho: 1,
            rho_resolution: Some(1 + a * b),
        },
        // Rational resolution with ρ = 8; subtract the ab exceptional curves.
        (4, _, _) => IntermediatePicard {
            rho: 8 - a * b,
            rho_resolution: Some(8),
        },
        // P¹×P¹.
        (2, 0, 2) => IntermediatePicard {
            rho: 2,
            rho_resolution: None,
        },
        // Quadric cone.
        (2, 1, 1) => IntermediatePicard {
            rho: 1,
            rho_resolution: None,
        },
        _ => unreachable!("pair ({a},{b}) passed validation"),
    };
    Ok(picard)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicardWitness {
    pub pair: (i64, i64),
    pub rho: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicardClassification {
    pub rho_is_one: bool,
    pub witnesses: Vec<PicardWitness>,
}

/// Direct membership test in the explicit families with ρ(S) > 1, quantified
/// over all permutations of the raw input.
pub fn in_picard_jump_families(raw: [i64; 3]) -> bool {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    PERMS.iter().any(|p| {
        let (x, y, z) = (raw[p[0]], raw[p[1]], raw[p[2]]);
        let even_z = z % 2 == 0;
        let odd_z = z % 2 == 1;
        (x == 0 && y == 2 && even_z && z >= 2)
            || (x == 0 && y == 4 && even_z && z >= 4)
            || (x == 1 && y == 3 && odd_z && z >= 1)
            || (x == 2 && y == 2 && even_z && z >= 2)
    })
}

/// Picard classification through the intermediate covers, cross-checked
/// against the explicit family list.
pub fn picard_classification(t: &BranchTriple) -> Result<PicardClassification> {
    let mut witnesses = Vec::new();
    for (a, b) in t.intermediate_pairs() {
        let ip = intermediate_picard(a, b)?;
        if ip.rho > 1 {
            witnesses.push(PicardWitness {
                pair: (a, b),
                rho: ip.rho,
            });
        }
    }
    let rho_is_one = witnesses.is_empty();
    if rho_is_one == in_picard_jump_families(t.degrees()) {
        return Err(Error::consistency(format!(
            "intermediate-cover route gives rho_is_one = {rho_is_one} for {t}, family list disagrees"
        )));
    }
    Ok(PicardClassification {
        rho_is_one,
        witnesses,
    })
}

/// Citations backing [`picard_classification`].
pub fn picard_citations() -> [Citation; 4] {
    [
        Citation::PicardOneCriterion,
        Citation::IntermediatePicardTable,
        Citation::ResolutionPicard,
        Citation::PicardJumpFamilies,
    ]
}

/// All valid sorted triples with n3 ≤ `max_degree`, in lexicographic order.
pub fn enumerate_triples(max_degree: i64) -> Vec<BranchTriple> {
    let mut out = Vec::new();
    for a in 0..=max_degree {
        for b in a..=max_degree {
            for c in b..=max_degree {
                if let Ok(t) = validate_triple(a, b, c) {
                    out.push(t);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_sorts() {
        let t = validate_triple(6, 2, 4).unwrap();
        assert_eq!(t.degrees(), [2, 4, 6]);
        assert_eq!(t.parity(), Parity::Even);
    }

    #[test]
    fn validate_errors() {
        assert!(matches!(
            validate_triple(0, 0, 4),
            Err(Error::Disconnected(..))
        ));
        assert!(matches!(
            validate_triple(0, 0, 0),
            Err(Error::Disconnected(..))
        ));
        assert!(matches!(validate_triple(1, 2, 3), Err(Error::Parity(..))));
        assert!(matches!(validate_triple(-1, 1, 3), Err(Error::Domain(_))));
        assert!(validate_triple(0, 2, 2).is_ok());
    }

    #[test]
    fn invariants_examples() {
        let i = invariants(&validate_triple(0, 2, 4).unwrap());
        assert_eq!(
            (i.k_squared, i.chi, i.h_dot_k, i.m, i.big_m),
            (0, 2, 0, Some(3), Some(14))
        );
        let i = invariants(&validate_triple(0, 2, 2).unwrap());
        assert_eq!(
            (i.k_squared, i.chi, i.h_dot_k, i.m, i.big_m),
            (4, 1, -4, Some(2), Some(6))
        );
        let i = invariants(&validate_triple(2, 2, 2).unwrap());
        assert_eq!(
            (i.k_squared, i.chi, i.h_dot_k, i.m, i.big_m),
            (0, 1, 0, Some(3), Some(12))
        );
        let i = invariants(&validate_triple(1, 1, 3).unwrap());
        assert_eq!((i.m, i.big_m), (None, None));
        assert_eq!(i.h_squared, 4);
        assert_eq!(i.q, 0);
    }

    #[test]
    fn invariants_ignore_input_order() {
        let a = invariants(&validate_triple(4, 0, 2).unwrap());
        let b = invariants(&validate_triple(2, 4, 0).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn intermediate_examples() {
        assert_eq!(intermediate_picard(0, 4).unwrap().rho, 8);
        assert_eq!(
            intermediate_picard(2, 6).unwrap(),
            IntermediatePicard {
                rho: 1,
                rho_resolution: Some(13)
            }
        );
        assert_eq!(intermediate_picard(1, 1).unwrap().rho, 1);
        assert_eq!(intermediate_picard(1, 3).unwrap().rho, 5);
        assert_eq!(intermediate_picard(2, 2).unwrap().rho, 4);
        assert_eq!(intermediate_picard(0, 2).unwrap().rho, 2);
        assert!(intermediate_picard(0, 0).is_err());
        assert!(intermediate_picard(3, 1).is_err());
        assert!(intermediate_picard(1, 2).is_err());
    }

    #[test]
    fn classification_examples() {
        let c = picard_classification(&validate_triple(4, 4, 4).unwrap()).unwrap();
        assert!(c.rho_is_one);
        assert!(c.witnesses.is_empty());

        let c = picard_classification(&validate_triple(1, 3, 7).unwrap()).unwrap();
        assert!(!c.rho_is_one);
        assert_eq!(
            c.witnesses,
            vec![PicardWitness {
                pair: (1, 3),
                rho: 5
            }]
        );

        let c = picard_classification(&validate_triple(2, 2, 10).unwrap()).unwrap();
        assert_eq!(
            c.witnesses,
            vec![PicardWitness {
                pair: (2, 2),
                rho: 4
            }]
        );
    }

    #[test]
    fn family_membership_is_permutation_invariant() {
        assert!(in_picard_jump_families([3, 1, 1]));
        assert!(in_picard_jump_families([4, 0, 2]));
        assert!(!in_picard_jump_families([0, 6, 6]));
        assert!(!in_picard_jump_families([1, 1, 5]));
    }

    #[test]
    fn enumerate_small() {
        let ts = enumerate_triples(2);
        let got: Vec<_> = ts.iter().map(|t| t.degrees()).collect();
        assert_eq!(got, vec![[0, 2, 2], [1, 1, 1], [2, 2, 2]]);
    }
}
