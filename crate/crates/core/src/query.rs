//! Aggregated per-triple results and their text, JSON and CSV renderings.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::citation::{Citation, TraceStep};
use crate::classifier::{
    line_bundle_status, ulrich_complexity, ComplexityKind, ComplexityVerdict,
    LineBundleAvailability, LineBundleStatus,
};
use crate::construction::{special_rank2_recipe, CBRecipe};
use crate::error::{Error, Result};
use crate::geometry::{
    invariants, picard_citations, picard_classification, validate_triple, BranchTriple,
    PicardClassification, SurfaceInvariants,
};
use crate::lattice::{brute_force_search, DivisorClass, IntersectionLattice};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryResult {
    pub triple: BranchTriple,
    /// Results hold for general branch curves only.
    pub generic: bool,
    pub invariants: SurfaceInvariants,
    pub picard: PicardClassification,
    pub line_bundle: LineBundleStatus,
    pub complexity: ComplexityVerdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub recipe: Option<CBRecipe>,
    pub notes: Vec<TraceStep>,
    pub citations: Vec<Citation>,
}

pub fn classify(t: &BranchTriple) -> Result<QueryResult> {
    let invariants = invariants(t);
    let picard = picard_classification(t)?;
    let line_bundle = line_bundle_status(t)?;
    let complexity = ulrich_complexity(t)?;
    let mut notes = Vec::new();
    let recipe = if !t.is_even() {
        None
    } else {
        match special_rank2_recipe(t) {
            Ok(r) => Some(r),
            Err(Error::ExcludedCase { message, citation }) => {
                notes.push(TraceStep::new(
                    citation,
                    format!("no rank-two recipe: {message}; rank one suffices here"),
                ));
                None
            }
            Err(e) => return Err(e),
        }
    };

    let mut citations: BTreeSet<Citation> = BTreeSet::new();
    citations.insert(Citation::BidoubleInvariants);
    citations.extend(picard_citations());
    citations.extend(line_bundle.reason.citations.iter().copied());
    citations.extend(complexity.trail.iter().copied());
    citations.extend(notes.iter().map(|n| n.citation));
    if recipe.is_some() {
        citations.insert(Citation::SpecialRankTwo);
        citations.insert(Citation::CayleyBacharach);
        citations.insert(Citation::SpecialUlrichTargets);
    }

    Ok(QueryResult {
        triple: *t,
        generic: true,
        invariants,
        picard,
        line_bundle,
        complexity,
        recipe,
        notes,
        citations: citations.into_iter().collect(),
    })
}

/// Classifies every triple in parallel; output is sorted by triple.
pub fn classify_all(triples: &[BranchTriple]) -> Result<Vec<QueryResult>> {
    let mut out = triples
        .par_iter()
        .map(classify)
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|q| q.triple);
    Ok(out)
}

fn availability_str(a: LineBundleAvailability) -> &'static str {
    match a {
        LineBundleAvailability::Exists => "exists",
        LineBundleAvailability::Impossible => "impossible",
        LineBundleAvailability::Open => "open",
    }
}

fn complexity_kind_str(k: ComplexityKind) -> &'static str {
    match k {
        ComplexityKind::Exact => "exact",
        ComplexityKind::UpperBound => "upper_bound",
        ComplexityKind::LowerBoundOnly => "lower_bound_only",
    }
}

/// `2`, `1..2` or `2..`.
pub fn complexity_value_str(v: &ComplexityVerdict) -> String {
    match (v.value, v.bounds) {
        (Some(x), _) => x.to_string(),
        (None, Some(b)) => match b.high {
            Some(h) => format!("{}..{}", b.low, h),
            None => format!("{}..", b.low),
        },
        (None, None) => String::new(),
    }
}

pub const CSV_HEADER: &str = "n1,n2,n3,parity,k_squared,chi,rho_gt_1,line_bundle,uc_kind,uc_value,recipe_deg_c,recipe_deg_c_prime,z_count";

fn opt(v: Option<i64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn row_fields(q: &QueryResult) -> [String; 13] {
    let t = &q.triple;
    [
        t.n1().to_string(),
        t.n2().to_string(),
        t.n3().to_string(),
        t.parity().to_string(),
        q.invariants.k_squared.to_string(),
        q.invariants.chi.to_string(),
        (!q.picard.rho_is_one).to_string(),
        availability_str(q.line_bundle.status).to_string(),
        complexity_kind_str(q.complexity.kind).to_string(),
        complexity_value_str(&q.complexity),
        opt(q.recipe.map(|r| r.deg_c)),
        opt(q.recipe.map(|r| r.deg_c_prime)),
        opt(q.recipe.map(|r| r.z_count)),
    ]
}

/// Header plus one LF-terminated row per result.
pub fn render_csv(results: &[QueryResult]) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for q in results {
        out.push_str(&row_fields(q).join(","));
        out.push('\n');
    }
    out
}

/// Fixed-width table with the CSV columns.
pub fn render_table(results: &[QueryResult]) -> String {
    let header: Vec<&str> = CSV_HEADER.split(',').collect();
    let rows: Vec<[String; 13]> = results.iter().map(row_fields).collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            rows.iter()
                .map(|r| r[i].len())
                .chain(std::iter::once(header[i].len()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    let line = |cells: Vec<&str>, out: &mut String| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(header.clone(), &mut out);
    for r in &rows {
        line(r.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

/// One compact JSON object per line.
pub fn render_json_lines(results: &[QueryResult]) -> Result<String> {
    let mut out = String::new();
    for q in results {
        out.push_str(&to_json(q, false)?);
        out.push('\n');
    }
    Ok(out)
}

pub fn to_json<T: Serialize>(value: &T, pretty: bool) -> Result<String> {
    let s = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    s.map_err(|e| Error::consistency(format!("JSON rendering failed: {e}")))
}

pub fn render_text(q: &QueryResult) -> String {
    let mut s = String::new();
    let t = &q.triple;
    let inv = &q.invariants;
    let _ = writeln!(
        s,
        "bidouble plane {t} ({}, generic branch curves)",
        t.parity()
    );
    let _ = writeln!(
        s,
        "  invariants: K² = {}, χ = {}, H² = {}, H·K = {}, q = {}, n = {}",
        inv.k_squared, inv.chi, inv.h_squared, inv.h_dot_k, inv.q, inv.n
    );
    if let (Some(m), Some(big_m)) = (inv.m, inv.big_m) {
        let _ = writeln!(s, "  m = {m}, M = {big_m}");
    }
    if q.picard.rho_is_one {
        let _ = writeln!(s, "  Picard number: ρ = 1");
    } else {
        let w: Vec<String> = q
            .picard
            .witnesses
            .iter()
            .map(|w| format!("({},{}) → ρ = {}", w.pair.0, w.pair.1, w.rho))
            .collect();
        let _ = writeln!(s, "  Picard number: ρ > 1 via {}", w.join(", "));
    }
    let _ = writeln!(
        s,
        "  Ulrich line bundle: {} [{}] {}",
        availability_str(q.line_bundle.status),
        join_citations(&q.line_bundle.reason.citations),
        q.line_bundle.reason.text
    );
    let _ = writeln!(
        s,
        "  Ulrich complexity: {} {} [{}]",
        complexity_kind_str(q.complexity.kind),
        complexity_value_str(&q.complexity),
        join_citations(&q.complexity.trail)
    );
    if let Some(r) = &q.recipe {
        let _ = writeln!(
            s,
            "  rank-two recipe: deg ℓ = {}, deg C = {}, deg C′ = {}, #Z = {}, M mod 4 = {}{}",
            r.deg_e1,
            r.deg_c,
            r.deg_c_prime,
            r.z_count,
            r.residue,
            if r.tangency_note {
                " (ℓ meets C in one ramified point)"
            } else {
                ""
            }
        );
    }
    for n in &q.notes {
        let _ = writeln!(s, "  note: {n}");
    }
    let _ = writeln!(s, "  citations: {}", join_citations(&q.citations));
    s
}

pub fn join_citations(c: &[Citation]) -> String {
    c.iter().map(|c| c.label()).collect::<Vec<_>>().join(", ")
}

/// Parses an unsigned decimal branch degree; signs are rejected.
pub fn parse_degree(s: &str) -> std::result::Result<i64, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{s}` is not an unsigned decimal degree"));
    }
    s.parse::<i64>()
        .map_err(|_| format!("`{s}` is out of range"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedLine {
    pub line: usize,
    pub result: Result<BranchTriple>,
}

/// Triples file: three whitespace-separated degrees per line, `#` starts a
/// comment, blank lines are ignored.
pub fn parse_triples(content: &str) -> Vec<ParsedLine> {
    let mut out = Vec::new();
    for (idx, raw) in content.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let result = if tokens.len() != 3 {
            Err(Error::domain(format!(
                "expected three degrees, found {}",
                tokens.len()
            )))
        } else {
            tokens
                .iter()
                .map(|t| parse_degree(t).map_err(Error::Domain))
                .collect::<Result<Vec<_>>>()
                .and_then(|v| validate_triple(v[0], v[1], v[2]))
        };
        out.push(ParsedLine {
            line: idx + 1,
            result,
        });
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassHit {
    pub class: DivisorClass,
    /// Arithmetic genus, rendered exactly (`"0"`, `"1/2"`).
    pub genus: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSearchReport {
    pub preset: String,
    pub bound: i64,
    pub degree: i64,
    pub selfint: i64,
    pub trace: Vec<TraceStep>,
    pub candidates: Vec<ClassHit>,
}

pub fn lattice_search(
    lat: &IntersectionLattice,
    bound: i64,
    degree: i64,
    selfint: i64,
) -> Result<LatticeSearchReport> {
    let found = brute_force_search(lat, bound, degree, selfint)?;
    let candidates = found
        .into_iter()
        .map(|class| {
            let genus = lat.arithmetic_genus(&class)?.to_string();
            Ok(ClassHit { class, genus })
        })
        .collect::<Result<Vec<_>>>()?;
    let trace = vec![TraceStep::new(
        Citation::UlrichEqualities,
        format!(
            "exhaustive search over [-{bound},{bound}]^{} for d·H = {degree}, d² = {selfint}: {} class(es)",
            lat.rank(),
            candidates.len()
        ),
    )];
    Ok(LatticeSearchReport {
        preset: lat.name.clone(),
        bound,
        degree,
        selfint,
        trace,
        candidates,
    })
}
