//! Subgroups as bitsets over the parent's element table, and the
//! subgroup-level constructions the embedding predicates are built from.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub use crate::arith::{is_pi_number, p_part};

/// A subgroup of a [`FiniteGroup`], stored as a set of element indices together
/// with a small generating set.
#[derive(Clone)]
pub struct Subgroup {
    parent: u64,
    members: FixedBitSet,
    order: usize,
    gens: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parent.hash(state);
        self.members.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens {:?})", self.order, self.gens)
    }
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn order_u64(&self) -> u64 {
        self.order as u64
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    /// A generating set (element indices of the parent).
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn same_parent(&self, other: &Subgroup) -> bool {
        self.parent == other.parent
    }

    pub fn belongs_to(&self, g: &FiniteGroup) -> bool {
        self.parent == g.id()
    }

    /// Generators written in cycle notation.
    pub fn describe(&self, g: &FiniteGroup) -> Vec<String> {
        self.gens.iter().map(|&x| g.element(x).to_string()).collect()
    }
}

fn check_parent(a: &Subgroup, b: &Subgroup) -> Result<()> {
    if a.parent != b.parent {
        return Err(Error::ParentMismatch);
    }
    Ok(())
}

pub fn trivial(g: &FiniteGroup) -> Subgroup {
    let mut members = FixedBitSet::with_capacity(g.order());
    members.insert(FiniteGroup::IDENTITY);
    Subgroup {
        parent: g.id(),
        members,
        order: 1,
        gens: Vec::new(),
    }
}

pub fn whole(g: &FiniteGroup) -> Subgroup {
    let mut members = FixedBitSet::with_capacity(g.order());
    members.insert_range(..);
    let mut gens: Vec<usize> = Vec::new();
    for &x in g.generator_indices() {
        if x != FiniteGroup::IDENTITY && !gens.contains(&x) {
            gens.push(x);
        }
    }
    Subgroup {
        parent: g.id(),
        members,
        order: g.order(),
        gens,
    }
}

/// Closes `members` (already closed under `gens[..]` except the last entry)
/// under right multiplication by every generator. Returns `false` if the
/// closure grows past `limit`.
fn close(
    g: &FiniteGroup,
    members: &mut FixedBitSet,
    list: &mut Vec<usize>,
    gens: &[usize],
    limit: usize,
) -> bool {
    let mut head = 0;
    while head < list.len() {
        let y = list[head];
        head += 1;
        for &s in gens {
            let z = g.mul(y, s);
            if !members.contains(z) {
                members.insert(z);
                list.push(z);
                if list.len() > limit {
                    return false;
                }
            }
        }
    }
    true
}

fn adjoin_bounded(g: &FiniteGroup, h: &Subgroup, x: usize, limit: usize) -> Option<Subgroup> {
    if h.contains(x) {
        return Some(h.clone());
    }
    let mut gens = h.gens.clone();
    gens.push(x);
    let mut members = h.members.clone();
    let mut list: Vec<usize> = h.members.ones().collect();
    if !close(g, &mut members, &mut list, &gens, limit) {
        return None;
    }
    Some(Subgroup {
        parent: h.parent,
        order: list.len(),
        members,
        gens,
    })
}

fn adjoin(g: &FiniteGroup, h: &Subgroup, x: usize) -> Subgroup {
    adjoin_bounded(g, h, x, usize::MAX).expect("unbounded closure")
}

/// Smallest subgroup containing `seed`.
pub fn span(g: &FiniteGroup, seed: &[usize]) -> Subgroup {
    extend(g, &trivial(g), seed)
}

/// `⟨h, extra⟩`.
pub fn extend(g: &FiniteGroup, h: &Subgroup, extra: &[usize]) -> Subgroup {
    let mut out = h.clone();
    for &x in extra {
        if !out.contains(x) {
            out = adjoin(g, &out, x);
        }
    }
    out
}

/// Like [`span`] but gives up (returning `None`) once the subgroup would exceed `limit` elements.
pub fn span_bounded(g: &FiniteGroup, seed: &[usize], limit: usize) -> Option<Subgroup> {
    let mut out = trivial(g);
    for &x in seed {
        if !out.contains(x) {
            out = adjoin_bounded(g, &out, x, limit)?;
        }
    }
    Some(out)
}

/// Wraps a set already known to be a subgroup, choosing generators greedily in index order.
pub fn from_members(g: &FiniteGroup, members: FixedBitSet) -> Subgroup {
    let mut h = trivial(g);
    for x in members.ones() {
        if !h.contains(x) {
            h = adjoin(g, &h, x);
        }
    }
    debug_assert_eq!(h.members, members, "set is not a subgroup");
    h
}

pub fn join(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    check_parent(a, b)?;
    if b.is_subset(a) {
        return Ok(a.clone());
    }
    if a.is_subset(b) {
        return Ok(b.clone());
    }
    Ok(extend(g, a, &b.gens))
}

pub fn intersect(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    check_parent(a, b)?;
    if a.is_subset(b) {
        return Ok(a.clone());
    }
    if b.is_subset(a) {
        return Ok(b.clone());
    }
    let mut members = a.members.clone();
    members.intersect_with(&b.members);
    Ok(from_members(g, members))
}

/// The set `AB` and whether it is a subgroup.
#[derive(Clone, Debug)]
pub struct ProductSet {
    pub members: FixedBitSet,
    pub size: usize,
    pub is_subgroup: bool,
}

pub fn product(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Result<ProductSet> {
    check_parent(a, b)?;
    let mut members = FixedBitSet::with_capacity(g.order());
    for x in a.elements() {
        for y in b.elements() {
            members.insert(g.mul(x, y));
        }
    }
    let size = members.count_ones(..);
    let mut common = a.members.clone();
    common.intersect_with(&b.members);
    assert_eq!(
        size * common.count_ones(..),
        a.order * b.order,
        "product formula |AB| = |A||B|/|A∩B| violated"
    );
    // AB is a subgroup iff it is closed under right multiplication by generators of A and B.
    let is_subgroup = g.order() % size == 0
        && members.ones().all(|x| {
            a.gens
                .iter()
                .chain(b.gens.iter())
                .all(|&s| members.contains(g.mul(x, s)))
        });
    Ok(ProductSet {
        members,
        size,
        is_subgroup,
    })
}

/// `(A, B)` permute (`AB = BA`) iff `|⟨A, B⟩| = |A||B|/|A∩B|`.
pub fn permutes(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Result<bool> {
    check_parent(a, b)?;
    if a.is_subset(b) || b.is_subset(a) {
        return Ok(true);
    }
    let mut common = a.members.clone();
    common.intersect_with(&b.members);
    let size = a.order * b.order / common.count_ones(..);
    if g.order() % size != 0 {
        return Ok(false);
    }
    let mut seed = a.gens.clone();
    seed.extend_from_slice(&b.gens);
    Ok(matches!(span_bounded(g, &seed, size), Some(j) if j.order == size))
}

pub fn conjugate(g: &FiniteGroup, h: &Subgroup, x: usize) -> Subgroup {
    let mut members = FixedBitSet::with_capacity(g.order());
    for y in h.elements() {
        members.insert(g.conj(y, x));
    }
    Subgroup {
        parent: h.parent,
        members,
        order: h.order,
        gens: h.gens.iter().map(|&y| g.conj(y, x)).collect(),
    }
}

fn normalizes(g: &FiniteGroup, h: &Subgroup, x: usize) -> bool {
    h.gens.iter().all(|&t| h.contains(g.conj(t, x)))
}

/// `N_A(H)` for `A = ambient`.
pub fn normalizer_in(g: &FiniteGroup, ambient: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    check_parent(ambient, h)?;
    let mut members = FixedBitSet::with_capacity(g.order());
    for x in ambient.elements() {
        if normalizes(g, h, x) {
            members.insert(x);
        }
    }
    Ok(from_members(g, members))
}

pub fn normalizer(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    normalizer_in(g, &whole(g), h).expect("same parent")
}

/// `|G : N_G(H)|` without materialising generators for the normalizer.
pub fn normalizer_index(g: &FiniteGroup, h: &Subgroup) -> u64 {
    let count = (0..g.order()).filter(|&x| normalizes(g, h, x)).count();
    (g.order() / count) as u64
}

pub fn centralizer_in(g: &FiniteGroup, ambient: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    check_parent(ambient, h)?;
    let mut members = FixedBitSet::with_capacity(g.order());
    for x in ambient.elements() {
        if h.gens.iter().all(|&t| g.mul(t, x) == g.mul(x, t)) {
            members.insert(x);
        }
    }
    Ok(from_members(g, members))
}

pub fn centralizer(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    centralizer_in(g, &whole(g), h).expect("same parent")
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    let w = whole(g);
    centralizer_in(g, &w, &w).expect("same parent")
}

/// `Z(H)` for a subgroup `H`.
pub fn center_of(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    centralizer_in(g, h, h).expect("same parent")
}

pub fn is_abelian(g: &FiniteGroup, h: &Subgroup) -> bool {
    h.gens
        .iter()
        .all(|&a| h.gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

pub fn is_normal_in(g: &FiniteGroup, ambient: &Subgroup, h: &Subgroup) -> bool {
    ambient.parent == h.parent && ambient.gens.iter().all(|&a| normalizes(g, h, a))
}

pub fn is_normal(g: &FiniteGroup, h: &Subgroup) -> bool {
    h.belongs_to(g) && g.generator_indices().iter().all(|&a| normalizes(g, h, a))
}

/// Smallest subgroup containing `seed` and normalised by `ambient`.
pub fn normal_closure_in(g: &FiniteGroup, ambient: &Subgroup, seed: &[usize]) -> Subgroup {
    let mut h = span(g, seed);
    loop {
        let mut grew = false;
        let mut i = 0;
        while i < h.gens.len() {
            let t = h.gens[i];
            for &a in &ambient.gens {
                let c = g.conj(t, a);
                if !h.contains(c) {
                    h = adjoin(g, &h, c);
                    grew = true;
                }
            }
            i += 1;
        }
        if !grew {
            return h;
        }
    }
}

/// `[A, B]` for subgroups normalised by `ambient`.
pub fn commutator_subgroup(
    g: &FiniteGroup,
    ambient: &Subgroup,
    a: &Subgroup,
    b: &Subgroup,
) -> Subgroup {
    let mut seed = Vec::new();
    for &x in &a.gens {
        for &y in &b.gens {
            seed.push(g.commutator(x, y));
        }
    }
    normal_closure_in(g, ambient, &seed)
}

/// `H'`
pub fn derived_of(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    commutator_subgroup(g, h, h, h)
}

pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    derived_of(g, &whole(g))
}

/// `H = γ1 ⊇ γ2 ⊇ …`, stopping at the first repeated term (included once).
pub fn lower_central_series_of(g: &FiniteGroup, h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(g, h, last, h);
        if next == *last {
            return series;
        }
        series.push(next);
    }
}

pub fn lower_central_series(g: &FiniteGroup) -> Vec<Subgroup> {
    lower_central_series_of(g, &whole(g))
}

/// `H ⊇ H' ⊇ H'' ⊇ …` until stable.
pub fn derived_series_of(g: &FiniteGroup, h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().unwrap();
        let next = derived_of(g, last);
        if next == *last {
            return series;
        }
        series.push(next);
    }
}

pub fn exponent(g: &FiniteGroup, h: &Subgroup) -> u64 {
    h.elements().fold(1, |acc, x| arith::lcm(acc, g.element_order(x)))
}

pub fn is_p_group(h: &Subgroup, p: u64) -> bool {
    arith::is_p_power(h.order_u64(), p)
}

pub(crate) fn check_p_group(h: &Subgroup, p: u64) -> Result<()> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !is_p_group(h, p) {
        return Err(Error::NotPGroup {
            order: h.order_u64(),
            p,
        });
    }
    Ok(())
}

/// `Φ(P) = P'·P^p` for a `p`-group `P`.
pub fn frattini_p(g: &FiniteGroup, pg: &Subgroup, p: u64) -> Result<Subgroup> {
    check_p_group(pg, p)?;
    let mut seed: Vec<usize> = pg.elements().map(|x| g.pow(x, p as i64)).collect();
    for &x in &pg.gens {
        for &y in &pg.gens {
            seed.push(g.commutator(x, y));
        }
    }
    seed.sort_unstable();
    seed.dedup();
    Ok(normal_closure_in(g, pg, &seed))
}

/// All subgroups of index `p` in the `p`-group `P`, as hyperplanes of `P/Φ(P)`.
pub fn p_group_maximal_subgroups(g: &FiniteGroup, pg: &Subgroup, p: u64) -> Result<Vec<Subgroup>> {
    let phi = frattini_p(g, pg, p)?;
    // basis of P/Φ(P), lifted to P
    let mut basis = Vec::new();
    let mut reached = phi.clone();
    for x in pg.elements() {
        if reached.order == pg.order {
            break;
        }
        if !reached.contains(x) {
            reached = adjoin(g, &reached, x);
            basis.push(x);
        }
    }
    let d = basis.len();
    let pu = p as usize;
    let mut out = Vec::new();
    // functionals with leading non-zero coordinate 1
    let total = pu.pow(d as u32);
    for code in 1..total {
        let mut coords = vec![0usize; d];
        let mut c = code;
        for slot in coords.iter_mut().rev() {
            *slot = c % pu;
            c /= pu;
        }
        let pivot = coords.iter().position(|&v| v != 0).unwrap();
        if coords[pivot] != 1 {
            continue;
        }
        let mut seed = Vec::with_capacity(d);
        for j in 0..d {
            if j == pivot {
                continue;
            }
            // b_j · b_pivot^(-f_j) lies in the kernel of f
            let shift = g.pow(basis[pivot], -(coords[j] as i64));
            seed.push(g.mul(basis[j], shift));
        }
        let m = extend(g, &phi, &seed);
        assert_eq!(m.order * pu, pg.order, "hyperplane does not have index p");
        out.push(m);
    }
    debug_assert_eq!(out.len(), (total - 1) / (pu - 1).max(1));
    Ok(out)
}

/// `Ω(P)`: generated by elements of order dividing `p`, or dividing 4 when `P`
/// is a non-abelian 2-group.
pub fn omega(g: &FiniteGroup, pg: &Subgroup, p: u64) -> Result<Subgroup> {
    check_p_group(pg, p)?;
    let m = if p == 2 && !is_abelian(g, pg) { 4 } else { p };
    let seed: Vec<usize> = pg
        .elements()
        .filter(|&x| m % g.element_order(x) == 0)
        .collect();
    Ok(span(g, &seed))
}

/// Distinct `⟨x⟩` over `x ∈ P` of exact order `m`, where `m = p` or `m = 4` with `p = 2`.
pub fn cyclic_subgroups_of_order(
    g: &FiniteGroup,
    pg: &Subgroup,
    p: u64,
    m: u64,
) -> Result<Vec<Subgroup>> {
    check_p_group(pg, p)?;
    if !(m == p || (m == 4 && p == 2)) {
        return Err(Error::InvalidArgument(format!(
            "cyclic subgroups of order {m} requested for p = {p}"
        )));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in pg.elements() {
        if g.element_order(x) == m {
            let c = span(g, &[x]);
            if seen.insert(c.members.clone()) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{generate_group, DEFAULT_ELEMENT_CAP};
    use crate::perm::parse_cycles;

    fn group(gens: &[&str], degree: usize) -> FiniteGroup {
        let gens: Vec<_> = gens.iter().map(|g| parse_cycles(g, degree).unwrap()).collect();
        generate_group(&gens, degree, DEFAULT_ELEMENT_CAP).unwrap()
    }

    fn el(g: &FiniteGroup, cycles: &str) -> usize {
        g.index_of(&parse_cycles(cycles, g.degree()).unwrap()).unwrap()
    }

    fn sub(g: &FiniteGroup, cycles: &[&str]) -> Subgroup {
        let seed: Vec<usize> = cycles.iter().map(|c| el(g, c)).collect();
        span(g, &seed)
    }

    fn q8() -> FiniteGroup {
        group(&["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], 8)
    }

    #[test]
    fn spans() {
        let a5 = group(&["(1 2 3 4 5)", "(1 2 3)"], 5);
        assert_eq!(span(&a5, &[0]).order(), 1);
        assert_eq!(sub(&a5, &["(1 2 3 4 5)"]).order(), 5);
        let a4 = group(&["(1 2 3)", "(2 3 4)"], 4);
        assert_eq!(sub(&a4, &["(1 2)(3 4)", "(1 3)(2 4)"]).order(), 4);
    }

    #[test]
    fn intersections() {
        let s3 = group(&["(1 2)", "(1 2 3)"], 3);
        let a = sub(&s3, &["(1 2 3)"]);
        assert_eq!(intersect(&s3, &a, &a).unwrap(), a);
        let b = sub(&s3, &["(1 2)"]);
        assert!(intersect(&s3, &a, &b).unwrap().is_trivial());

        let s4 = group(&["(1 2)", "(1 2 3 4)"], 4);
        let d8 = sub(&s4, &["(1 2 3 4)", "(1 3)"]);
        let a4 = sub(&s4, &["(1 2 3)", "(2 3 4)"]);
        let v4 = intersect(&s4, &d8, &a4).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(v4, sub(&s4, &["(1 2)(3 4)", "(1 3)(2 4)"]));

        let other = group(&["(1 2)"], 2);
        assert!(matches!(
            intersect(&s3, &a, &whole(&other)),
            Err(Error::ParentMismatch)
        ));
    }

    #[test]
    fn products() {
        let s3 = group(&["(1 2)", "(1 2 3)"], 3);
        let a = sub(&s3, &["(1 2)"]);
        let t = trivial(&s3);
        let pr = product(&s3, &a, &t).unwrap();
        assert!(pr.is_subgroup && pr.size == 2);
        let b = sub(&s3, &["(1 3)"]);
        let pr = product(&s3, &a, &b).unwrap();
        assert_eq!(pr.size, 4);
        assert!(!pr.is_subgroup);
        assert!(!permutes(&s3, &a, &b).unwrap());
        let c = sub(&s3, &["(1 2 3)"]);
        let pr = product(&s3, &a, &c).unwrap();
        assert!(pr.is_subgroup && pr.size == 6);
        assert!(permutes(&s3, &a, &c).unwrap());
    }

    #[test]
    fn normalizers_and_centralizers() {
        let a5 = group(&["(1 2 3 4 5)", "(1 2 3)"], 5);
        let c5 = sub(&a5, &["(1 2 3 4 5)"]);
        assert_eq!(normalizer(&a5, &c5).order(), 10);
        assert_eq!(normalizer_index(&a5, &c5), 6);
        assert_eq!(normalizer(&a5, &whole(&a5)).order(), 60);
        assert!(center(&a5).is_trivial());
        assert_eq!(center(&q8()).order(), 2);

        let s3 = group(&["(1 2)", "(1 2 3)"], 3);
        let c3 = sub(&s3, &["(1 2 3)"]);
        assert_eq!(centralizer(&s3, &c3).order(), 3);
        assert!(is_normal(&s3, &c3));
        assert!(!is_normal(&s3, &sub(&s3, &["(1 2)"])));
    }

    #[test]
    fn derived_and_lower_central() {
        let s3 = group(&["(1 2)", "(1 2 3)"], 3);
        assert_eq!(derived_subgroup(&s3).order(), 3);
        let d8 = group(&["(1 2 3 4)", "(1 3)"], 4);
        let orders: Vec<usize> = lower_central_series(&d8).iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![8, 2, 1]);
        assert_eq!(exponent(&q8(), &whole(&q8())), 4);
        let a5 = group(&["(1 2 3 4 5)", "(1 2 3)"], 5);
        assert_eq!(derived_subgroup(&a5).order(), 60);
    }

    #[test]
    fn maximal_subgroups_of_p_groups() {
        let v4 = group(&["(1 2)", "(3 4)"], 4);
        let m = p_group_maximal_subgroups(&v4, &whole(&v4), 2).unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.iter().all(|s| s.order() == 2));

        let q = q8();
        let m = p_group_maximal_subgroups(&q, &whole(&q), 2).unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.iter().all(|s| s.order() == 4 && s.generators().len() >= 1));
        assert!(m.iter().all(|s| s.elements().any(|x| q.element_order(x) == 4)));

        let c9 = group(&["(1 2 3 4 5 6 7 8 9)"], 9);
        let m = p_group_maximal_subgroups(&c9, &whole(&c9), 3).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 3);

        let s3 = group(&["(1 2)", "(1 2 3)"], 3);
        assert!(matches!(
            p_group_maximal_subgroups(&s3, &whole(&s3), 2),
            Err(Error::NotPGroup { order: 6, p: 2 })
        ));
        assert!(matches!(
            p_group_maximal_subgroups(&v4, &whole(&v4), 4),
            Err(Error::NotPrime(4))
        ));
    }

    #[test]
    fn frattini_examples() {
        let e8 = group(&["(1 2)", "(3 4)", "(5 6)"], 6);
        assert!(frattini_p(&e8, &whole(&e8), 2).unwrap().is_trivial());
        assert_eq!(frattini_p(&q8(), &whole(&q8()), 2).unwrap().order(), 2);
        let c8 = group(&["(1 2 3 4 5 6 7 8)"], 8);
        assert_eq!(frattini_p(&c8, &whole(&c8), 2).unwrap().order(), 4);
    }

    #[test]
    fn omega_examples() {
        let e9 = group(&["(1 2 3)", "(4 5 6)"], 6);
        assert_eq!(omega(&e9, &whole(&e9), 3).unwrap().order(), 9);
        assert_eq!(omega(&q8(), &whole(&q8()), 2).unwrap().order(), 8);
        let c4c2 = group(&["(1 2 3 4)", "(5 6)"], 6);
        let om = omega(&c4c2, &whole(&c4c2), 2).unwrap();
        assert_eq!(om.order(), 4);
        assert_eq!(exponent(&c4c2, &om), 2);
    }

    #[test]
    fn cyclic_subgroup_lists() {
        let v4 = group(&["(1 2)", "(3 4)"], 4);
        assert_eq!(cyclic_subgroups_of_order(&v4, &whole(&v4), 2, 2).unwrap().len(), 3);
        let c5 = group(&["(1 2 3 4 5)"], 5);
        assert_eq!(cyclic_subgroups_of_order(&c5, &whole(&c5), 5, 5).unwrap().len(), 1);
        assert_eq!(cyclic_subgroups_of_order(&q8(), &whole(&q8()), 2, 4).unwrap().len(), 3);
        assert!(matches!(
            cyclic_subgroups_of_order(&c5, &whole(&c5), 5, 4),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn p_part_and_pi_numbers() {
        assert_eq!(p_part(60, 2), 4);
        assert!(is_pi_number(1, &[]));
        assert!(!is_pi_number(6, &[5]));
    }
}
