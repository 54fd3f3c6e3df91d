//! Theorem registry and the corpus-wide verification runner.
//!
//! Each registered statement is instantiated over every corpus group: the
//! hypothesis is evaluated first and the conclusion only when it holds, so an
//! instance is vacuous, confirmed, or a counterexample.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Mutex;
use std::time::Instant;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith;
use crate::catalog;
use crate::classify::{sylow_in, GroupAnalysis, SubgroupSummary};
use crate::embedding;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::normal::NormalLattice;
use crate::subgroup::{self, Subgroup};

pub const DEFAULT_INSTANCE_LIMIT: usize = 500;
pub const DEFAULT_EXAMPLE_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    Thm15,
    Thm16,
    Prop31,
    Prop32,
    Prop33,
    Prop34,
    Prop35,
    Prop41,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::Thm15,
        TheoremId::Thm16,
        TheoremId::Prop31,
        TheoremId::Prop32,
        TheoremId::Prop33,
        TheoremId::Prop34,
        TheoremId::Prop35,
        TheoremId::Prop41,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Thm15 => "thm-1.5",
            TheoremId::Thm16 => "thm-1.6",
            TheoremId::Prop31 => "prop-3.1",
            TheoremId::Prop32 => "prop-3.2",
            TheoremId::Prop33 => "prop-3.3",
            TheoremId::Prop34 => "prop-3.4",
            TheoremId::Prop35 => "prop-3.5",
            TheoremId::Prop41 => "prop-4.1",
        }
    }

    /// Parses a theorem id, or `all` for every registered theorem.
    pub fn parse_list(text: &str) -> Result<Vec<TheoremId>> {
        if text == "all" {
            return Ok(Self::ALL.to_vec());
        }
        text.split(',').map(|t| t.trim().parse()).collect()
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown theorem id {s:?}")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    #[serde(rename = "vacuous")]
    Vacuous,
    #[serde(rename = "confirmed")]
    Confirmed,
    #[serde(rename = "COUNTEREXAMPLE")]
    Counterexample,
}

/// The three sufficient conditions of the implication scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Item {
    GenCap,
    PartialPi,
    SQuasinormal,
}

impl Item {
    pub const ALL: [Item; 3] = [Item::GenCap, Item::PartialPi, Item::SQuasinormal];
}

/// Instantiated objects of a theorem, as lattice node ids or explicit subgroups.
#[derive(Clone, Debug)]
pub enum Binding {
    /// A normal `p`-subgroup `P` (node id).
    NormalPGroup { p: u64, node: usize },
    /// A normal `E` with `p | |E|` and `gcd(|E|, p - 1) = 1`.
    PNilpotency { p: u64, e: usize },
    /// A `p`-soluble normal `E`.
    PSoluble { p: u64, e: usize },
    /// Normal `F*(E) ≤ X ≤ E`.
    Hypercentral { e: usize, x: usize },
    /// `p`-soluble normal `F_p(E) ≤ X ≤ E`.
    PSolubleChain { p: u64, e: usize, x: usize },
    /// A pool `p`-subgroup `H` and one sufficient condition.
    Implication {
        p: u64,
        h: Subgroup,
        pool: &'static str,
        item: Item,
    },
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct BindingReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<SubgroupSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<SubgroupSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<SubgroupSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pool: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub item: Option<Item>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremInstance {
    pub theorem: TheoremId,
    pub group: String,
    pub bindings: BindingReport,
    pub hypothesis_holds: bool,
    /// `None` when the hypothesis fails and the conclusion is not evaluated.
    pub conclusion_holds: Option<bool>,
    pub verdict: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Chief series (node ids) certifying a partial S-Π conclusion.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

/// Per-group state shared by all instances: the analysis plus memo tables.
pub struct GroupContext<'g> {
    name: String,
    analysis: GroupAnalysis<'g>,
    pspi: Mutex<HashMap<(FixedBitSet, u64), bool>>,
    zu: Mutex<HashMap<usize, usize>>,
}

impl<'g> GroupContext<'g> {
    pub fn new(name: &str, g: &'g FiniteGroup) -> Result<Self> {
        Ok(GroupContext {
            name: name.to_string(),
            analysis: GroupAnalysis::new(g)?,
            pspi: Mutex::new(HashMap::new()),
            zu: Mutex::new(HashMap::new()),
        })
    }

    pub fn analysis(&self) -> &GroupAnalysis<'g> {
        &self.analysis
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    fn group(&self) -> &'g FiniteGroup {
        self.analysis.group()
    }

    fn lattice(&self) -> &NormalLattice {
        self.analysis.lattice()
    }

    /// Memoised partial S-Π verdict.
    pub fn partial_s_pi(&self, h: &Subgroup, p: u64) -> Result<bool> {
        let key = (h.members().clone(), p);
        if let Some(&v) = self.pspi.lock().unwrap().get(&key) {
            return Ok(v);
        }
        let v = embedding::partial_s_pi(&self.analysis, h, p)?.holds;
        self.pspi.lock().unwrap().insert(key, v);
        Ok(v)
    }

    /// Every maximal subgroup of the `p`-group `pg` satisfies partial S-Π.
    pub fn maximal_hypothesis(&self, pg: &Subgroup, p: u64) -> Result<bool> {
        for m in subgroup::p_group_maximal_subgroups(self.group(), pg, p)? {
            if !self.partial_s_pi(&m, p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every cyclic subgroup of `pg` of order `p` (and of order 4 when `pg` is
    /// a non-abelian 2-group) satisfies partial S-Π.
    pub fn cyclic_hypothesis(&self, pg: &Subgroup, p: u64) -> Result<bool> {
        let g = self.group();
        let mut pool = subgroup::cyclic_subgroups_of_order(g, pg, p, p)?;
        if p == 2 && !subgroup::is_abelian(g, pg) {
            pool.extend(subgroup::cyclic_subgroups_of_order(g, pg, 2, 4)?);
        }
        for c in &pool {
            if !self.partial_s_pi(c, p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Which of the two hypotheses on a Sylow subgroup hold (maximal, cyclic).
    fn either_hypothesis(&self, pg: &Subgroup, p: u64) -> Result<Option<&'static str>> {
        if self.maximal_hypothesis(pg, p)? {
            Ok(Some("maximal subgroups"))
        } else if self.cyclic_hypothesis(pg, p)? {
            Ok(Some("cyclic subgroups"))
        } else {
            Ok(None)
        }
    }

    /// Node of the preimage of `Z_𝔘(G/B)` for the normal subgroup at node `base`.
    pub fn u_hypercentre_above(&self, base: usize) -> usize {
        if let Some(&z) = self.zu.lock().unwrap().get(&base) {
            return z;
        }
        let z = self.analysis.u_hypercentre_above(base);
        self.zu.lock().unwrap().insert(base, z);
        z
    }

    fn summary(&self, s: &Subgroup) -> SubgroupSummary {
        self.analysis.summarize(s)
    }

    fn node_summary(&self, i: usize) -> SubgroupSummary {
        self.summary(self.analysis.node(i))
    }
}

/// Every binding of `id` over the group, in a deterministic order.
pub fn instances(id: TheoremId, ctx: &GroupContext<'_>) -> Result<Vec<Binding>> {
    let a = ctx.analysis();
    let lat = ctx.lattice();
    let n = lat.len();
    let primes = a.primes();
    let mut out = Vec::new();
    match id {
        TheoremId::Prop31 | TheoremId::Prop33 => {
            for &p in &primes {
                for node in 0..n {
                    if arith::is_p_power(lat.order(node), p) {
                        out.push(Binding::NormalPGroup { p, node });
                    }
                }
            }
        }
        TheoremId::Prop32 | TheoremId::Prop34 => {
            for e in 0..n {
                let order = lat.order(e);
                for p in arith::prime_divisors(order) {
                    if arith::gcd(order, p - 1) == 1 {
                        out.push(Binding::PNilpotency { p, e });
                    }
                }
            }
        }
        TheoremId::Prop35 => {
            for &p in &primes {
                for e in 0..n {
                    if a.is_p_soluble_within(e, p) {
                        out.push(Binding::PSoluble { p, e });
                    }
                }
            }
        }
        TheoremId::Thm15 => {
            for e in 0..n {
                let fs = a.f_star_within(e)?;
                for x in 0..n {
                    if lat.le(fs, x) && lat.le(x, e) {
                        out.push(Binding::Hypercentral { e, x });
                    }
                }
            }
        }
        TheoremId::Thm16 => {
            for &p in &primes {
                for e in 0..n {
                    if !a.is_p_soluble_within(e, p) {
                        continue;
                    }
                    let fp = a.fitting_p_within(e, p);
                    for x in 0..n {
                        if lat.le(fp, x) && lat.le(x, e) {
                            out.push(Binding::PSolubleChain { p, e, x });
                        }
                    }
                }
            }
        }
        TheoremId::Prop41 => {
            for &p in &primes {
                for (h, pool) in standard_pool(a, p)? {
                    for item in Item::ALL {
                        out.push(Binding::Implication {
                            p,
                            h: h.clone(),
                            pool,
                            item,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The `p`-subgroup pool: one Sylow `p`-subgroup, its maximal subgroups, and
/// its cyclic subgroups of order `p` (and 4 when `p = 2`), without repeats.
pub fn standard_pool(a: &GroupAnalysis<'_>, p: u64) -> Result<Vec<(Subgroup, &'static str)>> {
    let g = a.group();
    let sylow = a.sylow(p);
    let mut out = vec![(sylow.clone(), "sylow")];
    out.extend(
        subgroup::p_group_maximal_subgroups(g, &sylow, p)?
            .into_iter()
            .map(|m| (m, "maximal")),
    );
    out.extend(
        subgroup::cyclic_subgroups_of_order(g, &sylow, p, p)?
            .into_iter()
            .map(|c| (c, "cyclic")),
    );
    if p == 2 {
        out.extend(
            subgroup::cyclic_subgroups_of_order(g, &sylow, 2, 4)?
                .into_iter()
                .map(|c| (c, "cyclic")),
        );
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|(s, _)| seen.insert(s.members().clone()));
    Ok(out)
}

struct Evaluation {
    hypothesis: bool,
    conclusion: Option<bool>,
    detail: Option<String>,
    witness: Option<Vec<usize>>,
}

impl Evaluation {
    fn vacuous(detail: impl Into<String>) -> Self {
        Evaluation {
            hypothesis: false,
            conclusion: None,
            detail: Some(detail.into()),
            witness: None,
        }
    }

    fn concluded(conclusion: bool, detail: Option<String>) -> Self {
        Evaluation {
            hypothesis: true,
            conclusion: Some(conclusion),
            detail,
            witness: None,
        }
    }
}

fn evaluate(ctx: &GroupContext<'_>, id: TheoremId, binding: &Binding) -> Result<Evaluation> {
    let a = ctx.analysis();
    let g = ctx.group();
    let lat = ctx.lattice();
    let zu = ctx.u_hypercentre_above(NormalLattice::TRIVIAL);
    Ok(match (id, binding) {
        (TheoremId::Prop31 | TheoremId::Prop33, &Binding::NormalPGroup { p, node }) => {
            let pg = a.node(node);
            let hyp = if id == TheoremId::Prop31 {
                ctx.maximal_hypothesis(pg, p)?
            } else {
                ctx.cyclic_hypothesis(pg, p)?
            };
            if !hyp {
                return Ok(Evaluation::vacuous("some pool subgroup of P fails partial S-Π"));
            }
            Evaluation::concluded(lat.le(node, zu), None)
        }
        (TheoremId::Prop32 | TheoremId::Prop34, &Binding::PNilpotency { p, e }) => {
            let pg = sylow_in(g, a.node(e), p);
            let hyp = if id == TheoremId::Prop32 {
                ctx.maximal_hypothesis(&pg, p)?
            } else {
                ctx.cyclic_hypothesis(&pg, p)?
            };
            if !hyp {
                return Ok(Evaluation::vacuous("some pool subgroup of the Sylow subgroup fails partial S-Π"));
            }
            Evaluation::concluded(a.is_p_nilpotent_within(e, p), None)
        }
        (TheoremId::Prop35, &Binding::PSoluble { p, e }) => {
            let pg = sylow_in(g, a.node(e), p);
            let Some(branch) = ctx.either_hypothesis(&pg, p)? else {
                return Ok(Evaluation::vacuous("both Sylow hypotheses fail"));
            };
            let z = ctx.u_hypercentre_above(a.radical_p_prime_within(e, p));
            Evaluation::concluded(lat.le(e, z), Some(format!("hypothesis on {branch}")))
        }
        (TheoremId::Thm15, &Binding::Hypercentral { e, x }) => {
            let xs = a.node(x);
            let mut used = Vec::new();
            for q in arith::prime_divisors(xs.order_u64()) {
                let pg = sylow_in(g, xs, q);
                let cyclic = pg.elements().any(|y| g.element_order(y) == pg.order_u64());
                if cyclic {
                    continue;
                }
                match ctx.either_hypothesis(&pg, q)? {
                    Some(branch) => used.push(format!("{q}: {branch}")),
                    None => {
                        return Ok(Evaluation::vacuous(format!(
                            "non-cyclic Sylow {q}-subgroup of X fails both hypotheses"
                        )))
                    }
                }
            }
            let detail = if used.is_empty() {
                "every Sylow subgroup of X is cyclic".to_string()
            } else {
                used.join("; ")
            };
            Evaluation::concluded(lat.le(e, zu), Some(detail))
        }
        (TheoremId::Thm16, &Binding::PSolubleChain { p, e, x }) => {
            let pg = sylow_in(g, a.node(x), p);
            let Some(branch) = ctx.either_hypothesis(&pg, p)? else {
                return Ok(Evaluation::vacuous("both Sylow hypotheses fail"));
            };
            let z = ctx.u_hypercentre_above(a.radical_p_prime_within(e, p));
            Evaluation::concluded(lat.le(e, z), Some(format!("hypothesis on {branch}")))
        }
        (TheoremId::Prop41, Binding::Implication { p, h, item, .. }) => {
            let hyp = match item {
                Item::GenCap => embedding::gen_cap(a, h)?.holds,
                Item::PartialPi => embedding::partial_pi(a, h)?.holds,
                Item::SQuasinormal => embedding::s_quasinormal(a, h)?,
            };
            if !hyp {
                return Ok(Evaluation::vacuous("sufficient condition fails"));
            }
            let v = embedding::partial_s_pi(a, h, *p)?;
            Evaluation {
                hypothesis: true,
                conclusion: Some(v.holds),
                detail: None,
                witness: v.witness,
            }
        }
        (id, b) => {
            return Err(Error::InvalidArgument(format!(
                "binding {b:?} does not belong to {id}"
            )))
        }
    })
}

fn report_bindings(ctx: &GroupContext<'_>, binding: &Binding) -> BindingReport {
    let node = |i: usize| Some(ctx.node_summary(i));
    match binding {
        &Binding::NormalPGroup { p, node: n } => BindingReport {
            p: Some(p),
            subgroup: node(n),
            ..Default::default()
        },
        &Binding::PNilpotency { p, e } | &Binding::PSoluble { p, e } => BindingReport {
            p: Some(p),
            e: node(e),
            ..Default::default()
        },
        &Binding::Hypercentral { e, x } => BindingReport {
            e: node(e),
            x: node(x),
            ..Default::default()
        },
        &Binding::PSolubleChain { p, e, x } => BindingReport {
            p: Some(p),
            e: node(e),
            x: node(x),
            ..Default::default()
        },
        Binding::Implication { p, h, pool, item } => BindingReport {
            p: Some(*p),
            subgroup: Some(ctx.summary(h)),
            pool: Some(pool),
            item: Some(*item),
            ..Default::default()
        },
    }
}

/// Evaluates the hypothesis, then the conclusion when the hypothesis holds.
pub fn check_instance(ctx: &GroupContext<'_>, id: TheoremId, binding: &Binding) -> Result<TheoremInstance> {
    let ev = evaluate(ctx, id, binding)?;
    let verdict = match (ev.hypothesis, ev.conclusion) {
        (false, _) => Outcome::Vacuous,
        (true, Some(true)) => Outcome::Confirmed,
        (true, _) => Outcome::Counterexample,
    };
    Ok(TheoremInstance {
        theorem: id,
        group: ctx.name().to_string(),
        bindings: report_bindings(ctx, binding),
        hypothesis_holds: ev.hypothesis,
        conclusion_holds: ev.conclusion,
        verdict,
        detail: ev.detail,
        witness: ev.witness,
    })
}

/// Outcome of one theorem on one group.
#[derive(Clone, Debug)]
pub struct GroupTheoremResult {
    pub theorem: TheoremId,
    pub instances: Vec<TheoremInstance>,
    /// Bindings dropped by the instance limit.
    pub truncated: usize,
}

pub fn check_group(
    name: &str,
    g: &FiniteGroup,
    theorems: &[TheoremId],
    instance_limit: usize,
) -> Result<Vec<GroupTheoremResult>> {
    let ctx = GroupContext::new(name, g)?;
    theorems
        .iter()
        .map(|&id| {
            let mut bindings = instances(id, &ctx)?;
            let truncated = bindings.len().saturating_sub(instance_limit);
            if truncated > 0 {
                log::warn!("{id} on {name}: {truncated} instances over the limit dropped");
            }
            bindings.truncate(instance_limit);
            let instances = bindings
                .iter()
                .map(|b| check_instance(&ctx, id, b))
                .collect::<Result<_>>()?;
            Ok(GroupTheoremResult {
                theorem: id,
                instances,
                truncated,
            })
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub theorems: Vec<TheoremId>,
    pub max_order: u64,
    pub include_1875: bool,
    /// Worker threads; 0 picks the rayon default.
    pub jobs: usize,
    pub instance_limit: usize,
    pub example_limit: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            theorems: TheoremId::ALL.to_vec(),
            max_order: 400,
            include_1875: false,
            jobs: 0,
            instance_limit: DEFAULT_INSTANCE_LIMIT,
            example_limit: DEFAULT_EXAMPLE_LIMIT,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusGroup {
    pub name: String,
    pub order: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusInfo {
    pub max_order: u64,
    pub group_count: usize,
    pub include_example_1875: bool,
    pub groups: Vec<CorpusGroup>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Truncation {
    pub group: String,
    pub dropped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremSummary {
    pub id: TheoremId,
    pub instances: usize,
    pub vacuous: usize,
    pub confirmed: usize,
    pub counterexamples: usize,
    /// The first confirmed instances, for spot checks.
    pub examples: Vec<TheoremInstance>,
    pub counterexample_instances: Vec<TheoremInstance>,
    pub truncated: Vec<Truncation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub tool_version: String,
    pub corpus: CorpusInfo,
    pub theorems: Vec<TheoremSummary>,
    pub timing_ms: u64,
}

impl RunReport {
    pub fn counterexamples(&self) -> usize {
        self.theorems.iter().map(|t| t.counterexamples).sum()
    }

    pub fn theorem(&self, id: TheoremId) -> Option<&TheoremSummary> {
        self.theorems.iter().find(|t| t.id == id)
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self)
            .map_err(|e| Error::InvalidArgument(format!("report serialisation: {e}")))?;
        std::fs::write(path, text + "\n")?;
        Ok(())
    }
}

/// Runs the selected theorems over the built-in corpus.
pub fn run_corpus(opts: &RunOptions) -> Result<RunReport> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    pool.install(|| {
        let groups = catalog::builtin_corpus(opts.max_order, opts.include_1875)?;
        let mut report = run_groups(&groups, opts)?;
        report.corpus.max_order = opts.max_order;
        report.corpus.include_example_1875 = opts.include_1875;
        report.timing_ms = start.elapsed().as_millis() as u64;
        Ok(report)
    })
}

/// Runs the selected theorems over explicit groups, in parallel across groups;
/// results are assembled in input order.
pub fn run_groups(groups: &[(String, FiniteGroup)], opts: &RunOptions) -> Result<RunReport> {
    let start = Instant::now();
    let per_group: Vec<Vec<GroupTheoremResult>> = groups
        .par_iter()
        .map(|(name, g)| check_group(name, g, &opts.theorems, opts.instance_limit))
        .collect::<Result<_>>()?;

    let mut theorems: Vec<TheoremSummary> = opts
        .theorems
        .iter()
        .map(|&id| TheoremSummary {
            id,
            instances: 0,
            vacuous: 0,
            confirmed: 0,
            counterexamples: 0,
            examples: Vec::new(),
            counterexample_instances: Vec::new(),
            truncated: Vec::new(),
        })
        .collect();
    for ((name, _), results) in groups.iter().zip(per_group) {
        for (summary, r) in theorems.iter_mut().zip(results) {
            if r.truncated > 0 {
                summary.truncated.push(Truncation {
                    group: name.clone(),
                    dropped: r.truncated,
                });
            }
            for inst in r.instances {
                summary.instances += 1;
                match inst.verdict {
                    Outcome::Vacuous => summary.vacuous += 1,
                    Outcome::Confirmed => {
                        summary.confirmed += 1;
                        if summary.examples.len() < opts.example_limit {
                            summary.examples.push(inst);
                        }
                    }
                    Outcome::Counterexample => {
                        summary.counterexamples += 1;
                        summary.counterexample_instances.push(inst);
                    }
                }
            }
        }
    }

    Ok(RunReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        corpus: CorpusInfo {
            max_order: groups.iter().map(|(_, g)| g.order_u64()).max().unwrap_or(0),
            group_count: groups.len(),
            include_example_1875: false,
            groups: groups
                .iter()
                .map(|(name, g)| CorpusGroup {
                    name: name.clone(),
                    order: g.order_u64(),
                })
                .collect(),
        },
        theorems,
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, parse_expr};

    fn group(text: &str) -> FiniteGroup {
        build(&parse_expr(text).unwrap(), 10_000).unwrap()
    }

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert!("thm-9.9".parse::<TheoremId>().is_err());
        assert_eq!(TheoremId::parse_list("all").unwrap().len(), 8);
    }

    #[test]
    fn normal_p_subgroups_of_a4() {
        let g = group("Alt(4)");
        let ctx = GroupContext::new("A4", &g).unwrap();
        let b = instances(TheoremId::Prop31, &ctx).unwrap();
        let orders: Vec<(u64, u64)> = b
            .iter()
            .map(|b| match b {
                Binding::NormalPGroup { p, node } => (*p, ctx.lattice().order(*node)),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(orders, vec![(2, 1), (2, 4), (3, 1)]);
    }

    #[test]
    fn s3xc2_hypercentral_instance() {
        let g = group("Direct(Sym(3), Cyclic(2))");
        let ctx = GroupContext::new("S3xC2", &g).unwrap();
        let top = ctx.lattice().top();
        let x = ctx.analysis().f_star_within(top).unwrap();
        assert_eq!(ctx.lattice().order(x), 6);
        let inst = check_instance(&ctx, TheoremId::Thm15, &Binding::Hypercentral { e: top, x }).unwrap();
        assert_eq!(inst.verdict, Outcome::Confirmed);
    }

    #[test]
    fn s4_klein_instance_is_vacuous() {
        let g = group("Sym(4)");
        let ctx = GroupContext::new("S4", &g).unwrap();
        let top = ctx.lattice().top();
        let v4 = ctx.lattice().id_of(&ctx.analysis().fitting()).unwrap();
        let inst = check_instance(&ctx, TheoremId::Thm15, &Binding::Hypercentral { e: top, x: v4 }).unwrap();
        assert_eq!(inst.verdict, Outcome::Vacuous);
        let trivial = check_instance(
            &ctx,
            TheoremId::Thm15,
            &Binding::Hypercentral {
                e: NormalLattice::TRIVIAL,
                x: NormalLattice::TRIVIAL,
            },
        )
        .unwrap();
        assert_eq!(trivial.verdict, Outcome::Confirmed);
    }

    #[test]
    fn a5_partial_pi_item_is_vacuous() {
        let g = group("Alt(5)");
        let ctx = GroupContext::new("A5", &g).unwrap();
        let h = ctx.analysis().sylow(5);
        let b = Binding::Implication {
            p: 5,
            h,
            pool: "sylow",
            item: Item::PartialPi,
        };
        assert_eq!(check_instance(&ctx, TheoremId::Prop41, &b).unwrap().verdict, Outcome::Vacuous);
    }

    #[test]
    fn mismatched_binding_is_rejected() {
        let g = group("Cyclic(2)");
        let ctx = GroupContext::new("C2", &g).unwrap();
        let b = Binding::PSoluble { p: 2, e: 0 };
        assert!(check_instance(&ctx, TheoremId::Thm15, &b).is_err());
    }

    #[test]
    fn empty_corpus_run() {
        let opts = RunOptions {
            max_order: 1,
            ..RunOptions::default()
        };
        let r = run_corpus(&opts).unwrap();
        assert_eq!(r.corpus.group_count, 1);
        assert_eq!(r.counterexamples(), 0);
    }
}
