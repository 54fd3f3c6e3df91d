//! Subgroup embedding predicates evaluated against chief factors.
//!
//! Everything works inside `G` itself. For a cover pair `K ⋖ L` of normal
//! subgroups put `X = (H∩L)K`. Since `K ≤ X` and `K` is normal,
//! `N_{G/K}(X/K) = N_G(X)/K`, so the section conditions on `G/K` become
//! conditions on `X` and `N_G(X)` and no quotient group is ever built.
//!
//! The existential predicates (some chief series works) are reachability
//! questions in the DAG whose edges are the cover pairs passing the per-factor
//! test: a chief series is exactly a path from the trivial node to the top.

use std::collections::VecDeque;

use serde::Serialize;

use crate::arith;
use crate::classify::GroupAnalysis;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::normal::{self, NormalLattice};
use crate::subgroup::{self, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Refutation {
    pub lower: usize,
    pub upper: usize,
    pub clause: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    /// Lattice node ids of a chief series realising an existential predicate.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    /// First violating cover pair of a universal predicate.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refutation: Option<Refutation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    fn yes() -> Self {
        Verdict {
            holds: true,
            witness: None,
            refutation: None,
            note: None,
        }
    }

    fn refuted(lower: usize, upper: usize, clause: impl Into<String>) -> Self {
        Verdict {
            holds: false,
            witness: None,
            refutation: Some(Refutation {
                lower,
                upper,
                clause: clause.into(),
            }),
            note: None,
        }
    }
}

/// `X = (H∩L)K` for the cover pair `(k, l)`, with the orders needed by the clauses.
pub struct Section {
    pub x: Subgroup,
    /// `|X| / |K|`
    pub covered: u64,
    /// `|L| / |K|`
    pub factor: u64,
}

pub fn section(a: &GroupAnalysis<'_>, h: &Subgroup, k: usize, l: usize) -> Result<Section> {
    let g = a.group();
    let (low, high) = (a.node(k), a.node(l));
    let hl = subgroup::intersect(g, h, high)?;
    let x = if hl.is_subset(low) {
        low.clone()
    } else {
        subgroup::extend(g, low, hl.generators())
    };
    Ok(Section {
        covered: x.order_u64() / low.order_u64(),
        factor: high.order_u64() / low.order_u64(),
        x,
    })
}

/// `|G : N_G(X)|`, short-circuiting normal `X`.
pub fn normalizer_index(a: &GroupAnalysis<'_>, x: &Subgroup) -> u64 {
    if a.lattice().id_of(x).is_some() {
        1
    } else {
        subgroup::normalizer_index(a.group(), x)
    }
}

fn check_member(a: &GroupAnalysis<'_>, h: &Subgroup) -> Result<()> {
    if h.belongs_to(a.group()) {
        Ok(())
    } else {
        Err(Error::ParentMismatch)
    }
}

/// Breadth-first search from the trivial node along cover pairs accepted by
/// `edge`; each edge is evaluated at most once.
fn reach(
    lattice: &NormalLattice,
    mut edge: impl FnMut(usize, usize) -> Result<bool>,
) -> Result<Verdict> {
    let n = lattice.len();
    let top = lattice.top();
    let mut parent = vec![usize::MAX; n];
    parent[NormalLattice::TRIVIAL] = NormalLattice::TRIVIAL;
    let mut queue = VecDeque::from([NormalLattice::TRIVIAL]);
    while let Some(k) = queue.pop_front() {
        if k == top {
            break;
        }
        for &l in lattice.upper_covers(k) {
            if parent[l] == usize::MAX && edge(k, l)? {
                parent[l] = k;
                queue.push_back(l);
            }
        }
    }
    if parent[top] == usize::MAX {
        return Ok(Verdict {
            holds: false,
            witness: None,
            refutation: None,
            note: Some("no chief series satisfies the factor condition".into()),
        });
    }
    let mut path = vec![top];
    let mut cur = top;
    while cur != NormalLattice::TRIVIAL {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    Ok(Verdict {
        holds: true,
        witness: Some(path),
        refutation: None,
        note: None,
    })
}

/// Sylow clause: `X/K` is a Sylow `p`-subgroup of `L/K`.
fn sylow_clause(s: &Section, p: u64) -> bool {
    s.covered == arith::p_part(s.factor, p)
}

/// Partial S-Π-property of the `p`-subgroup `H`: some chief series on every
/// factor of which `X/K` is Sylow in `L/K` or `|G : N_G(X)|` is a `p`-number.
pub fn partial_s_pi(a: &GroupAnalysis<'_>, h: &Subgroup, p: u64) -> Result<Verdict> {
    check_member(a, h)?;
    subgroup::check_p_group(h, p)?;
    reach(a.lattice(), |k, l| {
        let s = section(a, h, k, l)?;
        Ok(sylow_clause(&s, p) || arith::is_pi_number(normalizer_index(a, &s.x), &[p]))
    })
}

/// Partial Π-property: some chief series with `|G : N_G(X)|` a
/// `π(X/K)`-number on every factor.
pub fn partial_pi(a: &GroupAnalysis<'_>, h: &Subgroup) -> Result<Verdict> {
    check_member(a, h)?;
    reach(a.lattice(), |k, l| {
        let s = section(a, h, k, l)?;
        let pi = arith::prime_divisors(s.covered);
        Ok(arith::is_pi_number(normalizer_index(a, &s.x), &pi))
    })
}

/// Cover-avoidance: every chief factor is covered (`L ≤ HK`) or avoided (`H∩L ≤ K`).
pub fn cap(a: &GroupAnalysis<'_>, h: &Subgroup) -> Result<Verdict> {
    check_member(a, h)?;
    for &(k, l) in a.lattice().covers() {
        let s = section(a, h, k, l)?;
        // X = HK ∩ L by Dedekind, so L ≤ HK iff X = L
        if s.covered == 1 || s.covered == s.factor {
            continue;
        }
        return Ok(Verdict::refuted(k, l, "neither covers nor avoids"));
    }
    Ok(Verdict::yes())
}

/// Generalized CAP: every chief factor is avoided, or (non-abelian factor) `|L : X|`
/// is a `q'`-number for each prime `q` of `|X/K|`, or (`q`-group factor)
/// `|G : N_G(X)|` is a `q`-number.
///
/// The quantifier runs over every cover pair of the normal lattice.
pub fn gen_cap(a: &GroupAnalysis<'_>, h: &Subgroup) -> Result<Verdict> {
    check_member(a, h)?;
    for &(k, l) in a.lattice().covers() {
        let s = section(a, h, k, l)?;
        if s.covered == 1 {
            continue;
        }
        let residue = s.factor / s.covered;
        if a.factor_is_abelian((k, l)) {
            let q = arith::prime_divisors(s.factor)[0];
            let index = normalizer_index(a, &s.x);
            if !arith::is_pi_number(index, &[q]) {
                return Ok(Verdict::refuted(
                    k,
                    l,
                    format!("|G : N_G(X)| = {index} is not a {q}-number"),
                ));
            }
        } else {
            for q in arith::prime_divisors(s.covered) {
                if residue % q == 0 {
                    return Ok(Verdict::refuted(
                        k,
                        l,
                        format!("|L : X| = {residue} is not a {q}'-number"),
                    ));
                }
            }
        }
    }
    Ok(Verdict::yes())
}

/// `H` permutes with every Sylow subgroup of `G`.
pub fn s_quasinormal(a: &GroupAnalysis<'_>, h: &Subgroup) -> Result<bool> {
    check_member(a, h)?;
    if a.lattice().id_of(h).is_some() {
        return Ok(true);
    }
    let g = a.group();
    for p in a.primes() {
        for s in a.sylow_subgroups(p).iter() {
            if !subgroup::permutes(g, h, s)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Each Sylow subgroup of `H` is a Sylow subgroup of some S-quasinormal subgroup.
///
/// Candidates for the S-quasinormal overgroup of a Sylow `q`-subgroup `Q` of `H`
/// are `Q·N` for every normal `N` (which includes `Q` itself). A failure is
/// therefore only known to hold among those candidates; the verdict says so.
pub fn s_qn_embedded(a: &GroupAnalysis<'_>, h: &Subgroup) -> Result<Verdict> {
    check_member(a, h)?;
    let g = a.group();
    if a.lattice().id_of(h).is_some() {
        return Ok(Verdict::yes());
    }
    for q in arith::prime_divisors(h.order_u64()) {
        // Sylow subgroups of H are conjugate in H, and conjugating W by an
        // element of H preserves S-quasinormality, so one Q suffices.
        let sq = crate::classify::sylow_in(g, h, q);
        let mut found = false;
        for node in a.lattice().nodes() {
            let w = subgroup::extend(g, node, sq.generators());
            if arith::p_part(w.order_u64(), q) != sq.order_u64() {
                continue;
            }
            if s_quasinormal(a, &w)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(Verdict {
                holds: false,
                witness: None,
                refutation: None,
                note: Some(format!(
                    "no S-quasinormal Q·N found for the Sylow {q}-subgroup; \
                     negative verdict is limited to these candidates"
                )),
            });
        }
    }
    Ok(Verdict::yes())
}

/// Which existential predicate a witness path should satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    PartialSPi(u64),
    PartialPi,
}

/// Re-checks a witness chief series with genuine quotient groups: each step
/// must be a chief factor (a minimal normal subgroup of `G/K`) and the factor
/// condition must hold in `G/K`.
pub fn validate_witness(
    g: &FiniteGroup,
    h: &Subgroup,
    chain: &[Subgroup],
    kind: WitnessKind,
) -> Result<bool> {
    let (Some(first), Some(last)) = (chain.first(), chain.last()) else {
        return Ok(false);
    };
    if !first.is_trivial() || last.order() != g.order() {
        return Ok(false);
    }
    for w in chain.windows(2) {
        let (low, high) = (&w[0], &w[1]);
        if !low.is_subset(high) || low == high {
            return Ok(false);
        }
        let q = normal::quotient(g, low)?;
        let image = q.image();
        let top = q.image_of(high);
        if !normal::minimal_normals(image)?.contains(&top) {
            return Ok(false);
        }
        let hl = subgroup::intersect(g, h, high)?;
        let y = q.image_of(&hl);
        let index = subgroup::normalizer_index(image, &y);
        let ok = match kind {
            WitnessKind::PartialSPi(p) => {
                y.order_u64() == arith::p_part(top.order_u64(), p)
                    || arith::is_pi_number(index, &[p])
            }
            WitnessKind::PartialPi => {
                arith::is_pi_number(index, &arith::prime_divisors(y.order_u64()))
            }
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Node ids to subgroups, for [`validate_witness`].
pub fn witness_chain(a: &GroupAnalysis<'_>, ids: &[usize]) -> Vec<Subgroup> {
    ids.iter().map(|&i| a.node(i).clone()).collect()
}
