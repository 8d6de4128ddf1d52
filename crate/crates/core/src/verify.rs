//! Verification drivers. Each [`Claim`] is checked exhaustively over a
//! parameter range and summarized in a [`VerificationReport`].
//!
//! Sweep claims run over every labeled graph of each order in range; their
//! counterexamples carry the graph in graph6 and can be re-checked with
//! [`replay_counterexample`]. Family claims build explicit constructions and
//! replay every witness set through the forcing engine before reporting it.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::constructions::{
    counterexample_graph_unchecked, counterexample_join_witness, counterexample_min_set,
    five_leg_spider, gap_family_large_witness, gap_family_min_witness, gap_family_unchecked, prism,
    prism_witness_set, spider_witness_set, twin_spider,
};
use crate::enumerate::{decode, labeled_graphs, pair_count};
use crate::error::{Error, Result};
use crate::forcing::{is_zero_forcing_set, reversal};
use crate::forts::{enumerate_forts, is_minimal_cover};
use crate::graph::{complete, path, Family, Graph};
use crate::io::{parse_graph6, to_graph6};
use crate::minimal::{
    count_minimal_zfs, enumerate_minimal_zfs, in_every_minimal_zfs, is_clique_plus_isolates,
    is_minimal_zfs, summarize, zero_forcing_number, ZfsTable,
};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// `Z̄ = n-1` iff `G ≅ K_m ∪ kK_1` with `k ≥ 2`, as stated.
    ZbarExtremal,
    /// `Z̄ = n-1` iff `G ≅ K_m ∪ kK_1` with `m ≥ 2` and any `k ≥ 0`.
    ZbarExtremalClique,
    ZbarEqualsZIff,
    CorollaryFamilies,
    JoinFamilies,
    AddUniversalGap,
    DeleteUniversalPreserves,
    MinimalCoverEquiv,
    IsolateIff,
    ComponentProduct,
    Reversal2k,
    SpiderExponential,
    SpiderPolynomialTwin,
    PrismExponential,
    CycleCount,
    GapNMinus7,
}

impl Claim {
    pub const ALL: [Claim; 16] = [
        Claim::ZbarExtremal,
        Claim::ZbarExtremalClique,
        Claim::ZbarEqualsZIff,
        Claim::CorollaryFamilies,
        Claim::JoinFamilies,
        Claim::AddUniversalGap,
        Claim::DeleteUniversalPreserves,
        Claim::MinimalCoverEquiv,
        Claim::IsolateIff,
        Claim::ComponentProduct,
        Claim::Reversal2k,
        Claim::SpiderExponential,
        Claim::SpiderPolynomialTwin,
        Claim::PrismExponential,
        Claim::CycleCount,
        Claim::GapNMinus7,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::ZbarExtremal => "zbar_extremal",
            Claim::ZbarExtremalClique => "zbar_extremal_clique",
            Claim::ZbarEqualsZIff => "zbar_equals_z_iff",
            Claim::CorollaryFamilies => "corollary_families",
            Claim::JoinFamilies => "join_families",
            Claim::AddUniversalGap => "add_universal_gap",
            Claim::DeleteUniversalPreserves => "delete_universal_preserves",
            Claim::MinimalCoverEquiv => "minimal_cover_equiv",
            Claim::IsolateIff => "isolate_iff",
            Claim::ComponentProduct => "component_product",
            Claim::Reversal2k => "reversal_2k",
            Claim::SpiderExponential => "spider_exponential",
            Claim::SpiderPolynomialTwin => "spider_polynomial_twin",
            Claim::PrismExponential => "prism_exponential",
            Claim::CycleCount => "cycle_count",
            Claim::GapNMinus7 => "gap_n_minus_7",
        }
    }

    /// Name of the ranged parameter and its default bounds.
    pub fn default_range(self) -> (&'static str, usize, usize) {
        match self {
            Claim::ZbarExtremal
            | Claim::ZbarExtremalClique
            | Claim::ZbarEqualsZIff
            | Claim::DeleteUniversalPreserves => ("n", 1, 6),
            Claim::MinimalCoverEquiv | Claim::IsolateIff => ("n", 1, 5),
            Claim::CorollaryFamilies => ("n", 1, 10),
            Claim::JoinFamilies => ("a_b", 3, 5),
            Claim::AddUniversalGap => ("n", 7, 10),
            Claim::ComponentProduct => ("component_order", 1, 4),
            Claim::Reversal2k => ("k", 1, 3),
            Claim::SpiderExponential | Claim::SpiderPolynomialTwin => ("k", 3, 3),
            Claim::PrismExponential => ("m", 2, 3),
            Claim::CycleCount => ("n", 5, 12),
            Claim::GapNMinus7 => ("n", 7, 11),
        }
    }

    /// Hard limits on the ranged parameter.
    fn allowed_range(self) -> (usize, usize) {
        match self {
            Claim::ZbarExtremal
            | Claim::ZbarExtremalClique
            | Claim::ZbarEqualsZIff
            | Claim::DeleteUniversalPreserves
            | Claim::MinimalCoverEquiv
            | Claim::IsolateIff => (1, crate::limits::HARD_SWEEP_ORDER),
            Claim::CorollaryFamilies => (1, 20),
            Claim::JoinFamilies => (3, 10),
            Claim::AddUniversalGap => (7, 23),
            Claim::ComponentProduct => (1, 5),
            Claim::Reversal2k => (1, 6),
            Claim::SpiderExponential | Claim::SpiderPolynomialTwin => (3, 4),
            Claim::PrismExponential => (1, 4),
            Claim::CycleCount => (3, 24),
            Claim::GapNMinus7 => (7, 24),
        }
    }

    pub fn is_sweep(self) -> bool {
        matches!(
            self,
            Claim::ZbarExtremal
                | Claim::ZbarExtremalClique
                | Claim::ZbarEqualsZIff
                | Claim::DeleteUniversalPreserves
                | Claim::MinimalCoverEquiv
                | Claim::IsolateIff
        )
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

/// Inclusive range for the claim's ranged parameter; `None` uses the default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClaimParams {
    pub range: Option<(usize, usize)>,
}

impl ClaimParams {
    pub fn range(lo: usize, hi: usize) -> Self {
        ClaimParams {
            range: Some((lo, hi)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sets: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    #[serde(default)]
    pub sets: Vec<VertexSet>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub params: serde_json::Value,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub counterexample: Option<Counterexample>,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

struct Outcome {
    witnesses: Vec<Witness>,
    counterexample: Option<Counterexample>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            witnesses: Vec::new(),
            counterexample: None,
        }
    }

    fn note(&mut self, label: impl Into<String>, g: Option<&Graph>, sets: Vec<VertexSet>) {
        self.witnesses.push(Witness {
            label: label.into(),
            graph6: g.map(to_graph6),
            sets,
        });
    }

    /// Records a failure and returns it, keeping only the first one.
    fn fail(mut self, g: &Graph, sets: Vec<VertexSet>, detail: impl Into<String>) -> Self {
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                graph6: to_graph6(g),
                sets,
                detail: detail.into(),
            });
        }
        self
    }
}

pub fn verify_claim(claim: Claim, params: ClaimParams) -> Result<VerificationReport> {
    let (key, dlo, dhi) = claim.default_range();
    let (lo, hi) = params.range.unwrap_or((dlo, dhi));
    let (alo, ahi) = claim.allowed_range();
    if lo > hi || lo < alo || hi > ahi {
        return Err(Error::InvalidParameter(format!(
            "{claim}: {key} range {lo}..={hi} outside {alo}..={ahi}"
        )));
    }
    let start = Instant::now();
    let outcome = match claim {
        c if c.is_sweep() => sweep(c, lo, hi)?,
        Claim::CorollaryFamilies => corollary_families(lo, hi)?,
        Claim::JoinFamilies => join_families(lo, hi)?,
        Claim::AddUniversalGap => add_universal_gap(lo, hi)?,
        Claim::ComponentProduct => component_product(lo, hi)?,
        Claim::Reversal2k => reversal_2k(lo, hi)?,
        Claim::SpiderExponential => spider_exponential(lo, hi)?,
        Claim::SpiderPolynomialTwin => spider_polynomial_twin(lo, hi)?,
        Claim::PrismExponential => prism_exponential(lo, hi)?,
        Claim::CycleCount => cycle_count(lo, hi)?,
        Claim::GapNMinus7 => gap_n_minus_7(lo, hi)?,
        _ => unreachable!("sweep claims handled above"),
    };
    Ok(VerificationReport {
        claim: claim.id().to_string(),
        params: json!({ key: [lo, hi] }),
        verdict: if outcome.counterexample.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        witnesses: outcome.witnesses,
        counterexample: outcome.counterexample,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

/// Per-graph result of a sweep claim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub graph6: String,
    pub order: usize,
    /// False only when the graph is outside the claim's hypothesis.
    pub applicable: bool,
    pub holds: bool,
    pub z: usize,
    pub zbar: usize,
    pub minimal_count: u64,
}

pub fn sweep_record(claim: Claim, g: &Graph) -> Result<SweepRecord> {
    let s = summarize(g)?;
    let applicable = claim != Claim::DeleteUniversalPreserves
        || (g.order() >= 2 && !g.universal_vertices().is_empty());
    Ok(SweepRecord {
        graph6: to_graph6(g),
        order: g.order(),
        applicable,
        holds: sweep_check(claim, g)?.is_none(),
        z: s.z,
        zbar: s.zbar,
        minimal_count: s.minimal_count,
    })
}

/// Checks one graph against a sweep claim. `Ok(None)` means the claim holds
/// (or the graph is outside its hypothesis).
pub fn sweep_check(claim: Claim, g: &Graph) -> Result<Option<Counterexample>> {
    let n = g.order();
    let cex = |sets: Vec<VertexSet>, detail: String| {
        Some(Counterexample {
            graph6: to_graph6(g),
            sets,
            detail,
        })
    };
    Ok(match claim {
        Claim::ZbarExtremal | Claim::ZbarExtremalClique => {
            let (zbar, w) = ZfsTable::build(g)?.max_minimal();
            let shape = if claim == Claim::ZbarExtremal {
                is_clique_plus_isolates(g, 1, 2)
            } else {
                is_clique_plus_isolates(g, 2, 0)
            };
            if (zbar + 1 == n) != shape {
                cex(
                    vec![w],
                    format!("Z̄ = {zbar} on {n} vertices; clique-plus-isolates form: {shape}"),
                )
            } else {
                None
            }
        }
        Claim::ZbarEqualsZIff => {
            let t = ZfsTable::build(g)?;
            let (z, wmin) = t.minimum();
            let (zbar, wmax) = t.max_minimal();
            let contains = t.every_zfs_contains_minimum();
            if (z == zbar) != contains {
                cex(
                    vec![wmin, wmax],
                    format!("Z = {z}, Z̄ = {zbar}, every ZFS contains a minimum: {contains}"),
                )
            } else {
                None
            }
        }
        Claim::DeleteUniversalPreserves => {
            if n < 2 || g.universal_vertices().is_empty() {
                return Ok(None);
            }
            let s = summarize(g)?;
            if s.z != s.zbar {
                return Ok(None);
            }
            for v in g.universal_vertices() {
                let (h, _) = g.delete_vertex(v)?;
                let t = summarize(&h)?;
                if t.z != t.zbar {
                    return Ok(cex(
                        vec![VertexSet::singleton(v), t.witness_max_minimal],
                        format!(
                            "Z̄ = Z = {}, but deleting {v} gives Z = {}, Z̄ = {}",
                            s.z, t.z, t.zbar
                        ),
                    ));
                }
            }
            None
        }
        Claim::MinimalCoverEquiv => {
            let forts = enumerate_forts(g, true)?;
            (0..1u64 << n)
                .map(VertexSet::from_bits)
                .find(|&s| is_minimal_zfs(g, s) != is_minimal_cover(s, &forts))
                .and_then(|s| {
                    cex(
                        vec![s],
                        format!(
                            "minimal ZFS: {}, minimal cover of minimal forts: {}",
                            is_minimal_zfs(g, s),
                            is_minimal_cover(s, &forts)
                        ),
                    )
                })
        }
        Claim::IsolateIff => {
            for v in 0..n {
                let every = in_every_minimal_zfs(g, v)?;
                if every != (g.degree(v) == 0) {
                    return Ok(cex(
                        vec![VertexSet::singleton(v)],
                        format!(
                            "vertex {v}: degree {}, in every minimal ZFS: {every}",
                            g.degree(v)
                        ),
                    ));
                }
            }
            None
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "{other} is not a sweep claim"
            )));
        }
    })
}

/// Re-runs a sweep counterexample. Returns true if the claim still fails on
/// the recorded graph.
pub fn replay_counterexample(claim: Claim, cex: &Counterexample) -> Result<bool> {
    let g = parse_graph6(&cex.graph6)?;
    Ok(sweep_check(claim, &g)?.is_some())
}

fn sweep(claim: Claim, lo: usize, hi: usize) -> Result<Outcome> {
    let mut out = Outcome::new();
    for n in lo..=hi {
        let total = 1u64 << pair_count(n);
        let failure = (0..total)
            .into_par_iter()
            .map(|c| sweep_check(claim, &decode(n, c)))
            .find_map_first(|r| match r {
                Ok(None) => None,
                other => Some(other),
            });
        let applicable = if claim == Claim::DeleteUniversalPreserves {
            labeled_graphs(n)?
                .filter(|g| n >= 2 && !g.universal_vertices().is_empty())
                .count() as u64
        } else {
            total
        };
        match failure {
            Some(Err(e)) => return Err(e),
            Some(Ok(Some(c))) => {
                out.counterexample.get_or_insert(c);
                out.note(format!("order {n}: failed"), None, vec![]);
            }
            _ => out.note(
                format!("order {n}: {applicable} labeled graphs checked"),
                None,
                vec![],
            ),
        }
    }
    Ok(out)
}

fn cycle_count(lo: usize, hi: usize) -> Result<Outcome> {
    let mut out = Outcome::new();
    for n in lo..=hi {
        let g = Family::Cycle(n).build()?;
        let count = count_minimal_zfs(&g)?;
        let s = summarize(&g)?;
        if count != n as u128 || s.z != 2 || s.zbar != 2 {
            return Ok(out.fail(
                &g,
                vec![s.witness_min, s.witness_max_minimal],
                format!("C_{n}: {count} minimal sets, Z = {}, Z̄ = {}", s.z, s.zbar),
            ));
        }
        out.note(
            format!("C_{n}: {count} minimal sets, Z = Z̄ = 2"),
            Some(&g),
            vec![s.witness_min],
        );
    }
    Ok(out)
}

fn corollary_families(lo: usize, hi: usize) -> Result<Outcome> {
    let mut out = Outcome::new();
    let mut families = Vec::new();
    for n in lo..=hi {
        if n >= 3 {
            families.push(Family::Cycle(n));
        }
        families.push(Family::Empty(n));
        if n >= 3 {
            families.push(Family::Star(n));
        }
        if n >= 4 {
            families.push(Family::Wheel(n));
        }
        if n >= 2 {
            families.push(Family::Complete(n));
        }
    }
    for fam in families {
        let g = fam.build()?;
        let s = summarize(&g)?;
        if s.z != s.zbar {
            return Ok(out.fail(
                &g,
                vec![s.witness_min, s.witness_max_minimal],
                format!("{fam:?}: Z = {}, Z̄ = {}", s.z, s.zbar),
            ));
        }
        out.note(format!("{fam:?}: Z = Z̄ = {}", s.z), Some(&g), vec![]);
    }
    Ok(out)
}

fn join_families(lo: usize, hi: usize) -> Result<Outcome> {
    let mut out = Outcome::new();
    for a in lo..=hi {
        for b in lo..=hi {
            let ka = complete(a)?;
            let g = ka.join(&Family::Empty(b).build()?)?;
            let s = summarize(&g)?;
            if s.z != s.zbar || s.z != a + b - 2 {
                return Ok(out.fail(
                    &g,
                    vec![s.witness_min, s.witness_max_minimal],
                    format!("K_{a} ∨ K̄_{b}: Z = {}, Z̄ = {}", s.z, s.zbar),
                ));
            }
            out.note(format!("K_{a} ∨ K̄_{b}: Z = Z̄ = {}", s.z), Some(&g), vec![]);

            let g = ka.join(&Family::Cycle(b).build()?)?;
            let s = summarize(&g)?;
            if s.z != s.zbar || s.z != a + 2 {
                return Ok(out.fail(
                    &g,
                    vec![s.witness_min, s.witness_max_minimal],
                    format!(
                        "K_{a} ∨ C_{b}: Z = {}, Z̄ = {}, expected {}",
                        s.z,
                        s.zbar,
                        a + 2
                    ),
                ));
            }
            out.note(format!("K_{a} ∨ C_{b}: Z = Z̄ = {}", s.z), Some(&g), vec![]);
        }
    }
    Ok(out)
}

fn add_universal_gap(lo: usize, hi: usize) -> Result<Outcome> {
    let mut out = Outcome::new();
    for n in lo..=hi {
        let g = counterexample_graph_unchecked(n)?;
        let (z, _) = zero_forcing_number(&g)?;
        let zbar = ZfsTable::build(&g)?.max_minimal().0;
        let h = g.add_universal_vertex()?;
        let (zh, hmin) = zero_forcing_number(&h)?;
        let (zbarh, hmax) = ZfsTable::build(&h)?.max_minimal();
        let witness = counterexample_join_witness();
        let witness_ok = is_minimal_zfs(&h, witness);
        let min_ok = is_zero_forcing_set(&g, counterexample_min_set());
        if z != 3 || zbar != 3 || zh != 4 || zbarh < 5 || !witness_ok || !min_ok {
            return Ok(out.fail(
                &g,
                vec![witness],
                format!(
                    "G_{n}: Z = {z}, Z̄ = {zbar}; join: Z = {zh}, Z̄ = {zbarh}; \
                     witness minimal: {witness_ok}; {{1,2,3}} forces: {min_ok}"
                ),
            ));
        }
        out.note(
            format!("G_{n}: Z = Z̄ = 3"),
            Some(&g),
            vec![counterexample_min_set()],
        );
        out.note(
            format!("G_{n} ∨ K_1: Z = 4, Z̄ = {zbarh}"),
            Some(&h),
            vec![hmin, witness, hmax],
        );
    }
    Ok(out)
}

fn connected_labeled(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(labeled_graphs(n)?.filter(Graph::is_connected));
    }
    Ok(out)
}

fn component_product(lo: usize, hi: usize) -> Result<Outcome> {
    let mut out = Outcome::new();
    let graphs = connected_labeled(lo, hi)?;
    let counts: Vec<usize> = graphs
        .iter()
        .map(|g| enumerate_minimal_zfs(g).map(|v| v.len()))
        .collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..graphs.len())
        .flat_map(|i| (0..graphs.len()).map(move |j| (i, j)))
        .collect();
    let failure = pairs
        .par_iter()
        .map(|&(i, j)| -> Result<Option<(Graph, String)>> {
            let u = graphs[i].disjoint_union(&graphs[j])?;
            let full = enumerate_minimal_zfs(&u)?.len();
            let factored = count_minimal_zfs(&u)?;
            let product = counts[i] * counts[j];
            Ok((full != product || factored != product as u128).then(|| {
                (
                    u,
                    format!("full scan {full}, factored {factored}, product {product}"),
                )
            }))
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });
    match failure {
        Some(Err(e)) => return Err(e),
        Some(Ok(Some((g, detail)))) => return Ok(out.fail(&g, vec![], detail)),
        _ => {}
    }
    out.note(
        format!(
            "{} connected labeled graphs of order {lo}..={hi}; {} ordered pairs checked",
            graphs.len(),
            pairs.len()
        ),
        None,
        vec![],
    );
    Ok(out)
}

fn reversal_2k(lo: usize, hi: usize) -> Result<Outcome> {
    let mut out = Outcome::new();
    for base in [complete(2)?, path(4)?] {
        for k in lo..=hi {
            let mut g = base.clone();
            for _ in 1..k {
                g = g.disjoint_union(&base)?;
            }
            let (z, _) = zero_forcing_number(&g)?;
            let mut choices = Vec::new();
            for block in g.components().blocks {
                let (sub, new_to_old) = g.induced_subgraph(block)?;
                let lift = |s: VertexSet| s.iter().map(|v| new_to_old[v]).collect::<VertexSet>();
                let (_, first) = zero_forcing_number(&sub)?;
                let second = reversal(&sub, first);
                choices.push((lift(first), lift(second)));
            }
            let mut sets = BTreeSet::new();
            for mask in 0..1u32 << k {
                let s = choices
                    .iter()
                    .enumerate()
                    .fold(VertexSet::EMPTY, |acc, (i, &(a, b))| {
                        acc | if mask >> i & 1 == 1 { a } else { b }
                    });
                if !is_zero_forcing_set(&g, s) || s.len() != z {
                    return Ok(out.fail(
                        &g,
                        vec![s],
                        format!("S(I) of size {} with Z = {z} is not minimum", s.len()),
                    ));
                }
                sets.insert(s.bits());
            }
            if sets.len() < 1 << k {
                return Ok(out.fail(
                    &g,
                    vec![],
                    format!("only {} distinct sets for k = {k}", sets.len()),
                ));
            }
            out.note(
                format!("{k} components: {} distinct minimum sets", sets.len()),
                Some(&g),
                sets.into_iter().map(VertexSet::from_bits).collect(),
            );
        }
    }
    Ok(out)
}

fn spider_exponential(lo: usize, hi: usize) -> Result<Outcome> {
    let mut out = Outcome::new();
    for k in lo..=hi {
        let g = five_leg_spider(k)?;
        let mut all = BTreeSet::new();
        for j in 1..=k {
            let mut per_j = BTreeSet::new();
            for mask in 0..1u32 << k {
                let legs: Vec<usize> = (1..=k).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let s = spider_witness_set(k, j, &legs)?;
                if !is_minimal_zfs(&g, s) {
                    return Ok(out.fail(
                        &g,
                        vec![s],
                        format!("S(I, {j}) with I = {legs:?} is not a minimal ZFS"),
                    ));
                }
                per_j.insert(s.bits());
            }
            if per_j.len() < 1 << (k - 1) {
                return Ok(out.fail(
                    &g,
                    vec![],
                    format!("j = {j}: only {} distinct sets", per_j.len()),
                ));
            }
            all.extend(per_j);
        }
        if all.len() != k << (k - 1) {
            return Ok(out.fail(
                &g,
                vec![],
                format!(
                    "{} distinct sets overall, expected {}",
                    all.len(),
                    k << (k - 1)
                ),
            ));
        }
        let total = ZfsTable::build(&g)?.count_minimal();
        if total < 1 << (k - 1) {
            return Ok(out.fail(
                &g,
                vec![],
                format!("full enumeration found only {total} minimal sets"),
            ));
        }
        out.note(
            format!(
                "S_5^{k}: {} constructed minimal sets, {total} minimal sets in total",
                all.len()
            ),
            Some(&g),
            all.into_iter().take(8).map(VertexSet::from_bits).collect(),
        );
    }
    Ok(out)
}

fn branchpoints(g: &Graph) -> usize {
    (0..g.order()).filter(|&v| g.degree(v) >= 3).count()
}

fn spider_polynomial_twin(lo: usize, hi: usize) -> Result<Outcome> {
    let mut out = Outcome::new();
    for k in lo..=hi {
        let s = five_leg_spider(k)?;
        let t = twin_spider(k)?;
        let shape = |g: &Graph| (g.order(), g.leaves().len(), branchpoints(g));
        let cs = ZfsTable::build(&s)?.count_minimal();
        let ct = ZfsTable::build(&t)?.count_minimal();
        if shape(&s) != shape(&t) || ct >= cs {
            return Ok(out.fail(
                &t,
                vec![],
                format!(
                    "k = {k}: (order, leaves, branchpoints) {:?} vs {:?}; counts {cs} vs {ct}",
                    shape(&s),
                    shape(&t)
                ),
            ));
        }
        out.note(
            format!("k = {k}: five-leg spider has {cs} minimal sets"),
            Some(&s),
            vec![],
        );
        out.note(
            format!("k = {k}: twin spider has {ct} minimal sets"),
            Some(&t),
            vec![],
        );
    }
    Ok(out)
}

fn prism_exponential(lo: usize, hi: usize) -> Result<Outcome> {
    let mut out = Outcome::new();
    for m in lo..=hi {
        let g = prism(m)?;
        let (z, _) = zero_forcing_number(&g)?;
        if z != 2 * m {
            return Ok(out.fail(
                &g,
                vec![],
                format!("C_5 □ K_{m}: Z = {z}, expected {}", 2 * m),
            ));
        }
        let mut sets = BTreeSet::new();
        for mask in 0..1u32 << m {
            let idx: Vec<usize> = (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let s = prism_witness_set(m, &idx)?;
            if s.len() != z || !is_zero_forcing_set(&g, s) {
                return Ok(out.fail(&g, vec![s], format!("S({idx:?}) is not a minimum ZFS")));
            }
            sets.insert(s.bits());
        }
        if sets.len() != 1 << m {
            return Ok(out.fail(&g, vec![], format!("only {} distinct sets", sets.len())));
        }
        out.note(
            format!(
                "C_5 □ K_{m}: Z = {z}, {} distinct minimum sets S(I)",
                sets.len()
            ),
            Some(&g),
            sets.into_iter().map(VertexSet::from_bits).collect(),
        );
    }
    Ok(out)
}

fn gap_n_minus_7(lo: usize, hi: usize) -> Result<Outcome> {
    let mut out = Outcome::new();
    for n in lo..=hi {
        let g = gap_family_unchecked(n)?;
        let s = summarize(&g)?;
        let large = gap_family_large_witness(n);
        let small = gap_family_min_witness();
        let ok = s.z == 5
            && s.zbar == n - 2
            && is_minimal_zfs(&g, large)
            && is_zero_forcing_set(&g, small);
        if !ok {
            return Ok(out.fail(
                &g,
                vec![large, small],
                format!("n = {n}: Z = {}, Z̄ = {}", s.z, s.zbar),
            ));
        }
        out.note(
            format!("n = {n}: Z = 5, Z̄ = {}, gap {}", s.zbar, s.zbar - s.z),
            Some(&g),
            vec![small, large],
        );
    }
    Ok(out)
}
