//! Normal subgroups: the lattice with its covering relation, chief series,
//! quotient groups and subgroups viewed as groups in their own right.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{generate_group, FiniteGroup};
use crate::perm::Permutation;
use crate::subgroup::{self, Subgroup};

pub const DEFAULT_NODE_CAP: usize = 4096;

/// Smallest normal subgroup of `G` containing `seed`.
pub fn normal_closure(g: &FiniteGroup, seed: &[usize]) -> Subgroup {
    subgroup::normal_closure_in(g, &subgroup::whole(g), seed)
}

/// Every normal subgroup of a group, ordered by increasing order, with the
/// covering relation `K ⋖ L` (no normal subgroup strictly between).
///
/// Node 0 is the trivial subgroup and the last node is the whole group.
#[derive(Clone, Debug)]
pub struct NormalLattice {
    nodes: Vec<Subgroup>,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    index: HashMap<FixedBitSet, usize>,
}

pub fn normal_lattice(g: &FiniteGroup) -> Result<NormalLattice> {
    normal_lattice_with_cap(g, DEFAULT_NODE_CAP)
}

/// Builds the lattice from the normal closures of one element per conjugacy
/// class, closed under pairwise joins. Every normal subgroup is the join of
/// the normal closures of its elements, so nothing is missed.
pub fn normal_lattice_with_cap(g: &FiniteGroup, cap: usize) -> Result<NormalLattice> {
    let w = subgroup::whole(g);
    let mut found: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut list: Vec<Subgroup> = Vec::new();
    let push = |s: Subgroup, list: &mut Vec<Subgroup>, found: &mut HashMap<FixedBitSet, usize>| {
        if found.contains_key(s.members()) {
            return Ok(());
        }
        if list.len() >= cap {
            return Err(Error::ResourceCap {
                what: "normal lattice size",
                cap,
                reached: list.len() + 1,
            });
        }
        found.insert(s.members().clone(), list.len());
        list.push(s);
        Ok(())
    };

    for class in g.conjugacy_classes() {
        let closure = subgroup::normal_closure_in(g, &w, &[class[0]]);
        push(closure, &mut list, &mut found)?;
    }

    let mut i = 0;
    while i < list.len() {
        for j in 0..i {
            let (a, b) = (&list[i], &list[j]);
            if a.is_subset(b) || b.is_subset(a) {
                continue;
            }
            let joined = subgroup::extend(g, a, b.generators());
            push(joined, &mut list, &mut found)?;
        }
        i += 1;
    }

    list.sort_by_cached_key(|s| (s.order(), s.elements().collect::<Vec<_>>()));
    let index: HashMap<FixedBitSet, usize> = list
        .iter()
        .enumerate()
        .map(|(i, s)| (s.members().clone(), i))
        .collect();

    let n = list.len();
    let mut upper = vec![Vec::new(); n];
    let mut lower = vec![Vec::new(); n];
    let mut covers = Vec::new();
    for l in 0..n {
        let below: Vec<usize> = (0..l).filter(|&k| list[k].is_subset(&list[l])).collect();
        for &k in &below {
            let interval_empty = below
                .iter()
                .all(|&m| m == k || !list[k].is_subset(&list[m]));
            if interval_empty {
                covers.push((k, l));
                upper[k].push(l);
                lower[l].push(k);
            }
        }
    }
    covers.sort_unstable();

    Ok(NormalLattice {
        nodes: list,
        covers,
        upper,
        lower,
        index,
    })
}

/// A maximal chain of normal subgroups `1 = G_0 < … < G_n = G` by lattice node id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiefSeries {
    pub chain: Vec<usize>,
    pub factor_orders: Vec<u64>,
}

impl NormalLattice {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Subgroup] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Subgroup {
        &self.nodes[i]
    }

    pub const TRIVIAL: usize = 0;

    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, k: usize) -> &[usize] {
        &self.upper[k]
    }

    pub fn lower_covers(&self, l: usize) -> &[usize] {
        &self.lower[l]
    }

    pub fn is_cover(&self, k: usize, l: usize) -> bool {
        self.upper[k].contains(&l)
    }

    pub fn id_of(&self, s: &Subgroup) -> Option<usize> {
        self.index.get(s.members()).copied()
    }

    /// Node id of a subgroup that must be normal.
    pub fn require(&self, s: &Subgroup) -> Result<usize> {
        self.id_of(s).ok_or(Error::NotNormal)
    }

    /// Node `a` is contained in node `b`.
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.nodes[a].is_subset(&self.nodes[b])
    }

    pub fn order(&self, i: usize) -> u64 {
        self.nodes[i].order_u64()
    }

    pub fn join(&self, g: &FiniteGroup, a: usize, b: usize) -> usize {
        if self.le(a, b) {
            return b;
        }
        if self.le(b, a) {
            return a;
        }
        let j = subgroup::extend(g, &self.nodes[a], self.nodes[b].generators());
        self.id_of(&j).expect("join of normal subgroups is normal")
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        let mut m = self.nodes[a].members().clone();
        m.intersect_with(self.nodes[b].members());
        self.index[&m]
    }

    /// Atoms of the lattice.
    pub fn minimal_normal_ids(&self) -> &[usize] {
        &self.upper[Self::TRIVIAL]
    }

    pub fn socle_id(&self, g: &FiniteGroup) -> usize {
        self.minimal_normal_ids()
            .iter()
            .fold(Self::TRIVIAL, |acc, &m| self.join(g, acc, m))
    }

    fn series_from_chain(&self, chain: Vec<usize>) -> ChiefSeries {
        let factor_orders = chain
            .windows(2)
            .map(|w| self.order(w[1]) / self.order(w[0]))
            .collect();
        ChiefSeries {
            chain,
            factor_orders,
        }
    }

    /// A chain of covers from the trivial node up to `target`.
    pub fn chain_to(&self, target: usize) -> Vec<usize> {
        let mut chain = vec![target];
        let mut cur = target;
        while cur != Self::TRIVIAL {
            cur = self.lower[cur][0];
            chain.push(cur);
        }
        chain.reverse();
        chain
    }

    /// A chain of covers from `base` up to the top node.
    pub fn chain_from(&self, base: usize) -> Vec<usize> {
        let mut chain = vec![base];
        let mut cur = base;
        let top = self.top();
        while cur != top {
            cur = self.upper[cur][0];
            chain.push(cur);
        }
        chain
    }

    /// One chief series (through the first cover at each step).
    pub fn some_chief_series(&self) -> ChiefSeries {
        self.series_from_chain(self.chain_from(Self::TRIVIAL))
    }

    /// All chief series, depth first; errors once more than `limit` exist.
    pub fn chief_series_enumerate(&self, limit: usize) -> Result<Vec<ChiefSeries>> {
        let mut out = Vec::new();
        let mut path = vec![Self::TRIVIAL];
        self.enumerate_from(&mut path, &mut out, limit)?;
        Ok(out)
    }

    fn enumerate_from(
        &self,
        path: &mut Vec<usize>,
        out: &mut Vec<ChiefSeries>,
        limit: usize,
    ) -> Result<()> {
        let cur = *path.last().unwrap();
        if cur == self.top() {
            if out.len() >= limit {
                return Err(Error::ResourceCap {
                    what: "chief series count",
                    cap: limit,
                    reached: limit + 1,
                });
            }
            out.push(self.series_from_chain(path.clone()));
            return Ok(());
        }
        for &next in &self.upper[cur] {
            path.push(next);
            self.enumerate_from(path, out, limit)?;
            path.pop();
        }
        Ok(())
    }

    /// True iff `(k, l)` is a cover pair; both must be normal and nested.
    pub fn is_chief_factor(&self, k: &Subgroup, l: &Subgroup) -> Result<bool> {
        let ki = self.require(k)?;
        let li = self.require(l)?;
        if !self.le(ki, li) {
            return Err(Error::NotNested);
        }
        Ok(self.is_cover(ki, li))
    }
}

pub fn minimal_normals(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    if g.order() == 1 {
        return Err(Error::TrivialGroup);
    }
    let lat = normal_lattice(g)?;
    Ok(lat
        .minimal_normal_ids()
        .iter()
        .map(|&i| lat.node(i).clone())
        .collect())
}

pub fn socle(g: &FiniteGroup) -> Result<Subgroup> {
    let lat = normal_lattice(g)?;
    Ok(lat.node(lat.socle_id(g)).clone())
}

pub fn chief_series_enumerate(g: &FiniteGroup, limit: usize) -> Result<Vec<ChiefSeries>> {
    normal_lattice(g)?.chief_series_enumerate(limit)
}

pub fn is_chief_factor(g: &FiniteGroup, k: &Subgroup, l: &Subgroup) -> Result<bool> {
    normal_lattice(g)?.is_chief_factor(k, l)
}

/// The natural map `G → G/N`, with `G/N` realised as the permutation group
/// induced by right multiplication on the right cosets of `N`.
pub struct QuotientMap {
    kernel: Subgroup,
    image: FiniteGroup,
    element_map: Vec<u32>,
    first_preimage: Vec<u32>,
    coset_of: Vec<u32>,
}

pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<QuotientMap> {
    if !n.belongs_to(g) {
        return Err(Error::ParentMismatch);
    }
    if !subgroup::is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let size = g.order();
    let unset = u32::MAX;
    let mut coset_of = vec![unset; size];
    let mut reps = Vec::new();
    for x in 0..size {
        if coset_of[x] != unset {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for y in n.elements() {
            coset_of[g.mul(y, x)] = c;
        }
    }
    let m = reps.len();
    let image_gens: Vec<Permutation> = g
        .generator_indices()
        .iter()
        .map(|&s| {
            Permutation::from_zero_based(reps.iter().map(|&r| coset_of[g.mul(r, s)]).collect())
        })
        .collect();
    let image = generate_group(&image_gens, m, m)?;
    assert_eq!(image.order(), m, "coset action has the wrong order");

    let mut element_map = vec![0u32; size];
    for x in 1..size {
        let (parent, j) = g.tree_edge(x);
        let gen_image = image.generator_indices()[j];
        element_map[x] = image.mul(element_map[parent] as usize, gen_image) as u32;
    }
    let mut first_preimage = vec![unset; m];
    for (x, &y) in element_map.iter().enumerate() {
        if first_preimage[y as usize] == unset {
            first_preimage[y as usize] = x as u32;
        }
    }

    Ok(QuotientMap {
        kernel: n.clone(),
        image,
        element_map,
        first_preimage,
        coset_of,
    })
}

impl QuotientMap {
    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn image(&self) -> &FiniteGroup {
        &self.image
    }

    pub fn map(&self, x: usize) -> usize {
        self.element_map[x] as usize
    }

    /// Index of the right coset `Nx` in coset-representative order.
    pub fn coset(&self, x: usize) -> usize {
        self.coset_of[x] as usize
    }

    /// `HN/N` as a subgroup of the image.
    pub fn image_of(&self, h: &Subgroup) -> Subgroup {
        let seed: Vec<usize> = h.generators().iter().map(|&x| self.map(x)).collect();
        subgroup::span(&self.image, &seed)
    }

    /// Full preimage in the source of a subgroup of the image.
    pub fn preimage(&self, source: &FiniteGroup, s: &Subgroup) -> Subgroup {
        let lifts: Vec<usize> = s
            .generators()
            .iter()
            .map(|&y| self.first_preimage[y] as usize)
            .collect();
        subgroup::extend(source, &self.kernel, &lifts)
    }
}

/// A subgroup `H ≤ G` rebuilt as a standalone group, with index maps both ways.
pub struct Restriction {
    group: FiniteGroup,
    to_parent: Vec<u32>,
    from_parent: Vec<u32>,
}

pub fn restrict(g: &FiniteGroup, h: &Subgroup) -> Result<Restriction> {
    if !h.belongs_to(g) {
        return Err(Error::ParentMismatch);
    }
    let gens: Vec<Permutation> = h.generators().iter().map(|&x| g.element(x).clone()).collect();
    let group = generate_group(&gens, g.degree(), h.order())?;
    let to_parent: Vec<u32> = group
        .elements()
        .iter()
        .map(|p| g.index_of(p).expect("subgroup element") as u32)
        .collect();
    let mut from_parent = vec![u32::MAX; g.order()];
    for (i, &x) in to_parent.iter().enumerate() {
        from_parent[x as usize] = i as u32;
    }
    Ok(Restriction {
        group,
        to_parent,
        from_parent,
    })
}

impl Restriction {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn to_parent(&self, x: usize) -> usize {
        self.to_parent[x] as usize
    }

    pub fn from_parent(&self, x: usize) -> Option<usize> {
        match self.from_parent[x] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }

    /// A subgroup of the restricted group, mapped back into the parent.
    pub fn lift(&self, parent: &FiniteGroup, s: &Subgroup) -> Subgroup {
        let seed: Vec<usize> = s.generators().iter().map(|&x| self.to_parent(x)).collect();
        subgroup::span(parent, &seed)
    }

    /// A subgroup of the parent contained in `H`, expressed inside the restricted group.
    pub fn lower(&self, s: &Subgroup) -> Result<Subgroup> {
        let seed = s
            .generators()
            .iter()
            .map(|&x| self.from_parent(x).ok_or(Error::NotNested))
            .collect::<Result<Vec<_>>>()?;
        Ok(subgroup::span(&self.group, &seed))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ELEMENT_CAP;
    use crate::perm::parse_cycles;
    use crate::subgroup::{span, trivial, whole};

    fn group(gens: &[&str], degree: usize) -> FiniteGroup {
        let gens: Vec<_> = gens.iter().map(|g| parse_cycles(g, degree).unwrap()).collect();
        generate_group(&gens, degree, DEFAULT_ELEMENT_CAP).unwrap()
    }

    fn el(g: &FiniteGroup, cycles: &str) -> usize {
        g.index_of(&parse_cycles(cycles, g.degree()).unwrap()).unwrap()
    }

    #[test]
    fn normal_closures() {
        let s3 = group(&["(1 2)", "(1 2 3)"], 3);
        assert_eq!(normal_closure(&s3, &[el(&s3, "(1 2 3)")]).order(), 3);
        assert_eq!(normal_closure(&s3, &[el(&s3, "(1 2)")]).order(), 6);
        assert!(normal_closure(&s3, &[0]).is_trivial());
    }

    #[test]
    fn lattices() {
        let s4 = group(&["(1 2)", "(1 2 3 4)"], 4);
        let lat = normal_lattice(&s4).unwrap();
        let orders: Vec<u64> = (0..lat.len()).map(|i| lat.order(i)).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        let all = lat.chief_series_enumerate(10).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].factor_orders, vec![4, 3, 2]);

        let a5 = group(&["(1 2 3 4 5)", "(1 2 3)"], 5);
        let lat = normal_lattice(&a5).unwrap();
        assert_eq!(lat.len(), 2);
        assert_eq!(lat.chief_series_enumerate(10).unwrap()[0].factor_orders, vec![60]);

        let v4 = group(&["(1 2)", "(3 4)"], 4);
        let lat = normal_lattice(&v4).unwrap();
        assert_eq!(lat.len(), 5);
        let all = lat.chief_series_enumerate(10).unwrap();
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(|s| s.factor_orders == vec![2, 2]));
        assert!(matches!(
            lat.chief_series_enumerate(2),
            Err(Error::ResourceCap { cap: 2, .. })
        ));
        assert!(matches!(
            normal_lattice_with_cap(&v4, 3),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn minimal_normals_and_socle() {
        let a4 = group(&["(1 2 3)", "(2 3 4)"], 4);
        let mins = minimal_normals(&a4).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 4);

        // S3 x C2 on 5 points
        let g = group(&["(1 2)", "(1 2 3)", "(4 5)"], 5);
        let mut orders: Vec<usize> = minimal_normals(&g).unwrap().iter().map(Subgroup::order).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 3]);
        assert_eq!(socle(&g).unwrap().order(), 6);

        let t = group(&[], 2);
        assert!(matches!(minimal_normals(&t), Err(Error::TrivialGroup)));
    }

    #[test]
    fn quotients() {
        let s4 = group(&["(1 2)", "(1 2 3 4)"], 4);
        let v4 = span(&s4, &[el(&s4, "(1 2)(3 4)"), el(&s4, "(1 3)(2 4)")]);
        let q = quotient(&s4, &v4).unwrap();
        assert_eq!(q.image().order(), 6);
        assert!(!q.image().is_abelian());
        for x in 0..s4.order() {
            assert_eq!(q.map(x) == 0, v4.contains(x));
            for y in 0..s4.order() {
                assert_eq!(q.map(s4.mul(x, y)), q.image().mul(q.map(x), q.map(y)));
            }
        }

        let q = quotient(&s4, &trivial(&s4)).unwrap();
        assert_eq!(q.image().order(), 24);
        let mut seen: Vec<usize> = (0..24).map(|x| q.map(x)).collect();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), 24);

        let q = quotient(&s4, &whole(&s4)).unwrap();
        assert_eq!(q.image().order(), 1);

        let c2 = span(&s4, &[el(&s4, "(1 2)")]);
        assert!(matches!(quotient(&s4, &c2), Err(Error::NotNormal)));
    }

    #[test]
    fn preimages_round_trip() {
        let s4 = group(&["(1 2)", "(1 2 3 4)"], 4);
        let lat = normal_lattice(&s4).unwrap();
        let q = quotient(&s4, lat.node(1)).unwrap();
        let a4 = lat.node(2);
        let img = q.image_of(a4);
        assert_eq!(img.order(), 3);
        assert_eq!(&q.preimage(&s4, &img), a4);
    }

    #[test]
    fn chief_factor_checks() {
        let s4 = group(&["(1 2)", "(1 2 3 4)"], 4);
        let lat = normal_lattice(&s4).unwrap();
        let (one, v4, a4) = (lat.node(0), lat.node(1), lat.node(2));
        assert!(lat.is_chief_factor(v4, a4).unwrap());
        assert!(!lat.is_chief_factor(one, a4).unwrap());
        assert!(matches!(lat.is_chief_factor(a4, v4), Err(Error::NotNested)));
        let c2 = span(&s4, &[el(&s4, "(1 2)")]);
        assert!(matches!(lat.is_chief_factor(one, &c2), Err(Error::NotNormal)));
    }

    #[test]
    fn restrictions() {
        let s4 = group(&["(1 2)", "(1 2 3 4)"], 4);
        let lat = normal_lattice(&s4).unwrap();
        let a4 = lat.node(2);
        let r = restrict(&s4, a4).unwrap();
        assert_eq!(r.group().order(), 12);
        let inner = normal_lattice(r.group()).unwrap();
        assert_eq!(inner.len(), 3);
        let v4 = r.lift(&s4, inner.node(1));
        assert_eq!(&v4, lat.node(1));
        assert_eq!(r.lower(&v4).unwrap(), *inner.node(1));
        let c2 = span(&s4, &[el(&s4, "(1 2)")]);
        assert!(r.lower(&c2).is_err());
    }
}
