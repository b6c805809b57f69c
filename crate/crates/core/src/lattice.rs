//! Integer intersection lattices with a distinguished polarization and
//! canonical class.
//!
//! Coordinates and Gram entries are `i64`; every pairing accumulates in `i128`
//! with checked arithmetic and fails with [`Error::Overflow`] rather than wrap.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{invariants, BranchTriple};

/// Integer coordinate vector of a divisor class in a lattice basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DivisorClass(pub Vec<i64>);

impl DivisorClass {
    pub fn new(coords: Vec<i64>) -> Self {
        DivisorClass(coords)
    }

    pub fn zero(rank: usize) -> Self {
        DivisorClass(vec![0; rank])
    }

    /// The `i`-th basis vector.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        DivisorClass(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// gcd of all coordinates (0 for the zero class).
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &x| g.gcd(&x))
    }

    pub fn checked_add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.zip_with(other, |a, b| a.checked_add(b))
    }

    pub fn checked_sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.zip_with(other, |a, b| a.checked_sub(b))
    }

    pub fn checked_scale(&self, k: i64) -> Result<DivisorClass> {
        self.0
            .iter()
            .map(|&x| x.checked_mul(k).ok_or(Error::Overflow("class scaling")))
            .collect::<Result<Vec<_>>>()
            .map(DivisorClass)
    }

    fn zip_with(
        &self,
        other: &DivisorClass,
        f: impl Fn(i64, i64) -> Option<i64>,
    ) -> Result<DivisorClass> {
        check_len(self.len(), other.len())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| f(a, b).ok_or(Error::Overflow("class arithmetic")))
            .collect::<Result<Vec<_>>>()
            .map(DivisorClass)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A class `numerator / denominator`, e.g. the candidates (a/m)·H.
///
/// The fraction is not kept reduced; call [`RationalClass::normalized`] where
/// coprimality matters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalClass {
    pub numerator: DivisorClass,
    pub denominator: i64,
}

impl RationalClass {
    pub fn new(numerator: DivisorClass, denominator: i64) -> Result<Self> {
        if denominator < 1 {
            return Err(Error::domain(format!(
                "rational class denominator must be >= 1, got {denominator}"
            )));
        }
        Ok(RationalClass {
            numerator,
            denominator,
        })
    }

    pub fn integral(class: DivisorClass) -> Self {
        RationalClass {
            numerator: class,
            denominator: 1,
        }
    }

    /// Divides numerator and denominator by gcd(content, denominator).
    pub fn normalized(&self) -> RationalClass {
        let g = self.numerator.content().gcd(&self.denominator);
        if g <= 1 {
            return self.clone();
        }
        RationalClass {
            numerator: DivisorClass(self.numerator.0.iter().map(|x| x / g).collect()),
            denominator: self.denominator / g,
        }
    }
}

impl fmt::Display for RationalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// Finite-rank integer lattice with symmetric pairing, polarization `h` and
/// canonical class `k`. `chi` is χ(O_S) of the surface the lattice models,
/// when known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionLattice {
    pub name: String,
    pub basis_labels: Vec<String>,
    pub gram: Vec<Vec<i64>>,
    pub h: DivisorClass,
    pub k: DivisorClass,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chi: Option<i64>,
}

fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected != actual {
        return Err(Error::Shape { expected, actual });
    }
    Ok(())
}

impl IntersectionLattice {
    pub fn new(
        name: impl Into<String>,
        basis_labels: Vec<String>,
        gram: Vec<Vec<i64>>,
        h: DivisorClass,
        k: DivisorClass,
        chi: Option<i64>,
    ) -> Result<Self> {
        let rank = gram.len();
        if rank == 0 {
            return Err(Error::domain("lattice rank must be positive"));
        }
        check_len(rank, basis_labels.len())?;
        for row in &gram {
            check_len(rank, row.len())?;
        }
        for (i, row) in gram.iter().enumerate() {
            for (j, &x) in row.iter().enumerate().take(i) {
                if x != gram[j][i] {
                    return Err(Error::domain(format!(
                        "Gram matrix is not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        check_len(rank, h.len())?;
        check_len(rank, k.len())?;
        let lat = IntersectionLattice {
            name: name.into(),
            basis_labels,
            gram,
            h,
            k,
            chi,
        };
        if lat.pair(&lat.h, &lat.h)? <= 0 {
            return Err(Error::domain("polarization must satisfy H^2 > 0"));
        }
        Ok(lat)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    /// d1ᵀ · G · d2.
    pub fn pair(&self, d1: &DivisorClass, d2: &DivisorClass) -> Result<i64> {
        let rank = self.rank();
        check_len(rank, d1.len())?;
        check_len(rank, d2.len())?;
        let overflow = || Error::Overflow("pairing");
        let mut acc: i128 = 0;
        for (i, row) in self.gram.iter().enumerate() {
            let x = d1.0[i] as i128;
            if x == 0 {
                continue;
            }
            let mut inner: i128 = 0;
            for (j, &g) in row.iter().enumerate() {
                let term = (g as i128)
                    .checked_mul(d2.0[j] as i128)
                    .ok_or_else(overflow)?;
                inner = inner.checked_add(term).ok_or_else(overflow)?;
            }
            acc = acc
                .checked_add(x.checked_mul(inner).ok_or_else(overflow)?)
                .ok_or_else(overflow)?;
        }
        i64::try_from(acc).map_err(|_| overflow())
    }

    pub fn self_intersection(&self, d: &DivisorClass) -> Result<i64> {
        self.pair(d, d)
    }

    /// d · H.
    pub fn degree(&self, d: &DivisorClass) -> Result<i64> {
        self.pair(d, &self.h)
    }

    /// Pairing of two rational classes, as an exact fraction.
    pub fn pair_rational(&self, r1: &RationalClass, r2: &RationalClass) -> Result<Ratio<i64>> {
        let num = self.pair(&r1.numerator, &r2.numerator)?;
        let den = r1
            .denominator
            .checked_mul(r2.denominator)
            .ok_or(Error::Overflow("rational pairing"))?;
        Ok(Ratio::new(num, den))
    }

    /// Arithmetic genus 1 + (d² + d·K)/2 by adjunction.
    pub fn arithmetic_genus(&self, d: &DivisorClass) -> Result<Ratio<i64>> {
        let dd = self.self_intersection(d)?;
        let dk = self.pair(d, &self.k)?;
        let num = dd
            .checked_add(dk)
            .and_then(|s| s.checked_add(2))
            .ok_or(Error::Overflow("adjunction"))?;
        Ok(Ratio::new(num, 2))
    }

    /// Class by basis label.
    pub fn class_of(&self, label: &str) -> Option<DivisorClass> {
        self.basis_labels
            .iter()
            .position(|l| l == label)
            .map(|i| DivisorClass::basis(self.rank(), i))
    }
}

/// Named lattices with fixed Gram data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// NS(S) ⊗ Q = Q·H for an even triple with ρ = 1.
    Rank1Bidouble(BranchTriple),
    /// P¹ × P¹ with the (1,1) polarization.
    P1xP1,
    /// Blow-up of the plane in 9 − d points, anticanonically polarized.
    DelPezzo(u32),
    /// Sublattice of NS(S) for the (0,2,4) K3 surface spanned by Γ₁, Γ₂, E₁′, E₂′.
    K3_024,
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::Rank1Bidouble(t) => {
                write!(f, "rank1_bidouble({},{},{})", t.n1(), t.n2(), t.n3())
            }
            Preset::P1xP1 => f.write_str("p1xp1"),
            Preset::DelPezzo(d) => write!(f, "delpezzo{d}"),
            Preset::K3_024 => f.write_str("k3_024"),
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    /// Accepts `p1xp1`, `k3_024`, `delpezzoN` / `delpezzo(N)` and
    /// `rank1_bidouble(n1,n2,n3)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownPreset(s.to_string());
        match s {
            "p1xp1" => return Ok(Preset::P1xP1),
            "k3_024" => return Ok(Preset::K3_024),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("delpezzo") {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .unwrap_or(rest);
            if inner.is_empty() || !inner.bytes().all(|b| b.is_ascii_digit()) {
                return Err(unknown());
            }
            let d: u32 = inner.parse().map_err(|_| unknown())?;
            return Ok(Preset::DelPezzo(d));
        }
        if let Some(rest) = s.strip_prefix("rank1_bidouble(") {
            let inner = rest.strip_suffix(')').ok_or_else(unknown)?;
            let parts: Vec<i64> = inner
                .split(',')
                .map(|p| {
                    let p = p.trim();
                    if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(unknown());
                    }
                    p.parse::<i64>().map_err(|_| unknown())
                })
                .collect::<Result<_>>()?;
            if parts.len() != 3 {
                return Err(unknown());
            }
            let t = crate::geometry::validate_triple(parts[0], parts[1], parts[2])?;
            return Ok(Preset::Rank1Bidouble(t));
        }
        Err(unknown())
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn preset_lattice(preset: Preset) -> Result<IntersectionLattice> {
    match preset {
        Preset::Rank1Bidouble(t) => {
            if !t.is_even() {
                return Err(Error::domain(format!(
                    "rank1_bidouble needs an even triple; K is not an integral multiple of H for {t}"
                )));
            }
            let inv = invariants(&t);
            let m = inv.m.expect("even triple has m");
            IntersectionLattice::new(
                preset.to_string(),
                labels(&["H"]),
                vec![vec![4]],
                DivisorClass(vec![1]),
                DivisorClass(vec![m - 3]),
                Some(inv.chi),
            )
        }
        Preset::P1xP1 => IntersectionLattice::new(
            "p1xp1",
            labels(&["F1", "F2"]),
            vec![vec![0, 1], vec![1, 0]],
            DivisorClass(vec![1, 1]),
            DivisorClass(vec![-2, -2]),
            Some(1),
        ),
        Preset::DelPezzo(d) => {
            if !(1..=9).contains(&d) {
                return Err(Error::domain(format!(
                    "delpezzo degree must be in 1..=9, got {d}"
                )));
            }
            let rank = (10 - d) as usize;
            let mut gram = vec![vec![0; rank]; rank];
            gram[0][0] = 1;
            for (i, row) in gram.iter_mut().enumerate().skip(1) {
                row[i] = -1;
            }
            let mut names = vec!["L".to_string()];
            names.extend((1..rank).map(|i| format!("e{i}")));
            let mut h = vec![-1; rank];
            h[0] = 3;
            let k = h.iter().map(|x| -x).collect();
            IntersectionLattice::new(
                preset.to_string(),
                names,
                gram,
                DivisorClass(h),
                DivisorClass(k),
                Some(1),
            )
        }
        Preset::K3_024 => IntersectionLattice::new(
            "k3_024",
            labels(&["G1", "G2", "E1'", "E2'"]),
            vec![
                vec![0, 2, 1, 1],
                vec![2, 0, 1, 1],
                vec![1, 1, -2, 0],
                vec![1, 1, 0, -2],
            ],
            DivisorClass(vec![1, 1, 0, 0]),
            DivisorClass(vec![0, 0, 0, 0]),
            Some(2),
        ),
    }
}

/// Every class with coordinates in `[-bound, bound]` satisfying d·H =
/// `degree_target` and d² = `selfint_target`, in lexicographic order.
///
/// The box is split on the first coordinate and searched in parallel; chunks
/// are concatenated in coordinate order so the output is deterministic.
pub fn brute_force_search(
    lat: &IntersectionLattice,
    bound: i64,
    degree_target: i64,
    selfint_target: i64,
) -> Result<Vec<DivisorClass>> {
    if bound < 0 {
        return Err(Error::domain("search bound must be non-negative"));
    }
    let rank = lat.rank();
    // G·h, so that d·H is a dot product.
    let gh: Vec<i64> = (0..rank)
        .map(|i| lat.pair(&DivisorClass::basis(rank, i), &lat.h))
        .collect::<Result<_>>()?;
    let chunks: Vec<Result<Vec<DivisorClass>>> = (-bound..=bound)
        .into_par_iter()
        .map(|first| {
            let mut found = Vec::new();
            let mut d = vec![-bound; rank];
            d[0] = first;
            loop {
                let deg: i128 = d
                    .iter()
                    .zip(&gh)
                    .map(|(&x, &g)| x as i128 * g as i128)
                    .sum();
                if deg == degree_target as i128 {
                    let cls = DivisorClass(d.clone());
                    if lat.self_intersection(&cls)? == selfint_target {
                        found.push(cls);
                    }
                }
                // odometer over coordinates 1..rank
                let mut i = rank - 1;
                loop {
                    if i == 0 {
                        return Ok(found);
                    }
                    if d[i] < bound {
                        d[i] += 1;
                        break;
                    }
                    d[i] = -bound;
                    i -= 1;
                }
            }
        })
        .collect();
    let mut out = Vec::new();
    for chunk in chunks {
        out.extend(chunk?);
    }
    Ok(out)
}
