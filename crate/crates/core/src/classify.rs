//! Group-class predicates and canonical subgroups: Sylow subgroups, radicals,
//! Fitting subgroups, hypercentres and the nilpotent residual.
//!
//! Everything is computed against the normal lattice of the group. Radicals of
//! a normal subgroup `E` (`O_p(E)`, `O_{p'}(E)`, `F(E)`, `F_p(E)`) are
//! characteristic in `E`, hence normal in `G`, so the `*_within` variants read
//! them off the lattice of `G` instead of building a lattice for `E`.

use std::collections::{BTreeMap, HashSet};
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::arith;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::normal::{self, NormalLattice};
use crate::subgroup::{self, Subgroup};

/// Sylow `p`-subgroup of `ambient`, grown one normalising `p`-element at a time
/// in element-index order.
pub fn sylow_in(g: &FiniteGroup, ambient: &Subgroup, p: u64) -> Subgroup {
    let target = arith::p_part(ambient.order_u64(), p) as usize;
    let mut s = subgroup::trivial(g);
    while s.order() < target {
        let norm = if s.is_trivial() {
            ambient.clone()
        } else {
            subgroup::normalizer_in(g, ambient, &s).expect("same parent")
        };
        // a proper p-subgroup is proper in its normaliser inside a Sylow overgroup
        let y = norm
            .elements()
            .find(|&y| !s.contains(y) && g.is_p_element(y, p))
            .expect("p-element normalising a non-Sylow p-subgroup");
        s = subgroup::extend(g, &s, &[y]);
    }
    s
}

pub fn sylow(g: &FiniteGroup, p: u64) -> Subgroup {
    sylow_in(g, &subgroup::whole(g), p)
}

/// A group together with its normal lattice and a few lazily filled caches.
pub struct GroupAnalysis<'g> {
    group: &'g FiniteGroup,
    lattice: NormalLattice,
    whole: Subgroup,
    sylow_classes: Mutex<BTreeMap<u64, Arc<Vec<Subgroup>>>>,
}

impl<'g> GroupAnalysis<'g> {
    pub fn new(group: &'g FiniteGroup) -> Result<Self> {
        Self::with_lattice(group, normal::normal_lattice(group)?)
    }

    pub fn with_lattice(group: &'g FiniteGroup, lattice: NormalLattice) -> Result<Self> {
        Ok(GroupAnalysis {
            group,
            lattice,
            whole: subgroup::whole(group),
            sylow_classes: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn lattice(&self) -> &NormalLattice {
        &self.lattice
    }

    pub fn whole(&self) -> &Subgroup {
        &self.whole
    }

    pub fn node(&self, i: usize) -> &Subgroup {
        self.lattice.node(i)
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    pub fn order(&self) -> u64 {
        self.group.order_u64()
    }

    pub fn primes(&self) -> Vec<u64> {
        arith::prime_divisors(self.order())
    }

    pub fn sylow(&self, p: u64) -> Subgroup {
        sylow_in(self.group, &self.whole, p)
    }

    /// Every Sylow `p`-subgroup (the conjugacy class of [`Self::sylow`]).
    pub fn sylow_subgroups(&self, p: u64) -> Arc<Vec<Subgroup>> {
        if let Some(found) = self.sylow_classes.lock().unwrap().get(&p) {
            return found.clone();
        }
        let g = self.group;
        let first = self.sylow(p);
        let mut seen = HashSet::new();
        seen.insert(first.members().clone());
        let mut class = vec![first];
        let mut head = 0;
        while head < class.len() {
            for &s in g.generator_indices() {
                let c = subgroup::conjugate(g, &class[head], s);
                if seen.insert(c.members().clone()) {
                    class.push(c);
                }
            }
            head += 1;
        }
        let class = Arc::new(class);
        self.sylow_classes
            .lock()
            .unwrap()
            .insert(p, class.clone());
        class
    }

    fn largest_node_below(&self, e: usize, pred: impl Fn(usize) -> bool) -> usize {
        let best = (0..=e)
            .filter(|&i| self.lattice.le(i, e) && pred(i))
            .max_by_key(|&i| self.lattice.order(i))
            .unwrap_or(NormalLattice::TRIVIAL);
        debug_assert!((0..=e)
            .filter(|&i| self.lattice.le(i, e) && pred(i))
            .all(|i| self.lattice.le(i, best)));
        best
    }

    /// `O_p(E)` for the normal subgroup at node `e`.
    pub fn radical_p_within(&self, e: usize, p: u64) -> usize {
        self.largest_node_below(e, |i| arith::is_p_power(self.lattice.order(i), p))
    }

    /// `O_{p'}(E)` for the normal subgroup at node `e`.
    pub fn radical_p_prime_within(&self, e: usize, p: u64) -> usize {
        self.largest_node_below(e, |i| self.lattice.order(i) % p != 0)
    }

    /// `F(E)`: the product of the `O_q(E)`.
    pub fn fitting_within(&self, e: usize) -> usize {
        arith::prime_divisors(self.lattice.order(e))
            .into_iter()
            .fold(NormalLattice::TRIVIAL, |acc, q| {
                self.lattice.join(self.group, acc, self.radical_p_within(e, q))
            })
    }

    /// `F_p(E) = O_{p',p}(E)`.
    pub fn fitting_p_within(&self, e: usize, p: u64) -> usize {
        let base = self.radical_p_prime_within(e, p);
        let base_order = self.lattice.order(base);
        self.largest_node_below(e, |i| {
            self.lattice.le(base, i) && arith::is_p_power(self.lattice.order(i) / base_order, p)
        })
    }

    pub fn radical_p(&self, p: u64) -> Subgroup {
        self.node(self.radical_p_within(self.top(), p)).clone()
    }

    pub fn radical_p_prime(&self, p: u64) -> Subgroup {
        self.node(self.radical_p_prime_within(self.top(), p)).clone()
    }

    pub fn fitting(&self) -> Subgroup {
        self.node(self.fitting_within(self.top())).clone()
    }

    pub fn fitting_p(&self, p: u64) -> Subgroup {
        self.node(self.fitting_p_within(self.top(), p)).clone()
    }

    /// Factors `(K, L)` of a chief series of `G` passing through node `e`, below `e`.
    pub fn chief_factors_below(&self, e: usize) -> Vec<(usize, usize)> {
        self.lattice
            .chain_to(e)
            .windows(2)
            .map(|w| (w[0], w[1]))
            .collect()
    }

    pub fn factor_order(&self, (k, l): (usize, usize)) -> u64 {
        self.lattice.order(l) / self.lattice.order(k)
    }

    /// `L/K` is abelian iff `[L, L] ≤ K`.
    pub fn factor_is_abelian(&self, (k, l): (usize, usize)) -> bool {
        let g = self.group;
        let (low, high) = (self.node(k), self.node(l));
        let gens = high.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| low.contains(g.commutator(a, b))))
    }

    pub fn is_soluble_within(&self, e: usize) -> bool {
        self.chief_factors_below(e).into_iter().all(|f| {
            arith::is_prime_power(self.factor_order(f)) && self.factor_is_abelian(f)
        })
    }

    pub fn is_p_soluble_within(&self, e: usize, p: u64) -> bool {
        self.chief_factors_below(e).into_iter().all(|f| {
            let n = self.factor_order(f);
            arith::is_p_power(n, p) || n % p != 0
        })
    }

    /// `E` is `p`-nilpotent iff `|O_{p'}(E)|` is the `p'`-part of `|E|`.
    pub fn is_p_nilpotent_within(&self, e: usize, p: u64) -> bool {
        let complement = self.lattice.order(self.radical_p_prime_within(e, p));
        complement == arith::p_prime_part(self.lattice.order(e), p)
    }

    pub fn is_abelian(&self) -> bool {
        self.group.is_abelian()
    }

    /// Every Sylow subgroup is normal.
    pub fn is_nilpotent(&self) -> bool {
        self.primes()
            .into_iter()
            .all(|p| self.lattice.id_of(&self.sylow(p)).is_some())
    }

    /// Every chief factor is an elementary abelian `q`-group.
    pub fn is_soluble(&self) -> bool {
        self.is_soluble_within(self.top())
    }

    /// Independent route: the derived series reaches the trivial subgroup.
    pub fn is_soluble_by_derived_series(&self) -> bool {
        subgroup::derived_series_of(self.group, &self.whole)
            .last()
            .unwrap()
            .is_trivial()
    }

    pub fn is_p_soluble(&self, p: u64) -> bool {
        self.is_p_soluble_within(self.top(), p)
    }

    pub fn is_p_nilpotent(&self, p: u64) -> bool {
        self.is_p_nilpotent_within(self.top(), p)
    }

    pub fn is_supersoluble(&self) -> bool {
        self.lattice
            .some_chief_series()
            .factor_orders
            .iter()
            .all(|&n| arith::is_prime(n))
    }

    pub fn is_p_supersoluble(&self, p: u64) -> bool {
        self.is_p_soluble(p)
            && self
                .lattice
                .some_chief_series()
                .factor_orders
                .iter()
                .all(|&n| n % p != 0 || n == p)
    }

    pub fn center(&self) -> Subgroup {
        subgroup::center(self.group)
    }

    /// `Z_∞(G)`: iterate `Z_{k+1} = {x : [x, s] ∈ Z_k for every generator s}`.
    pub fn hypercentre(&self) -> Subgroup {
        let g = self.group;
        let mut z = subgroup::trivial(g);
        loop {
            let mut members = fixedbitset::FixedBitSet::with_capacity(g.order());
            for x in 0..g.order() {
                if g.generator_indices()
                    .iter()
                    .all(|&s| z.contains(g.commutator(x, s)))
                {
                    members.insert(x);
                }
            }
            if &members == z.members() {
                return z;
            }
            z = subgroup::from_members(g, members);
        }
    }

    /// The preimage of `Z_𝔘(G/B)` for the normal subgroup at node `base`.
    ///
    /// A chief factor of prime order `q` is 𝔘-central: `G/C_G(L/K)` embeds in the
    /// cyclic group `Aut(C_q)` of order `q - 1`, so `L/K ⋊ G/C_G(L/K)` is
    /// supersoluble. A chief factor of composite order never is. So each layer
    /// adds the join of the minimal normal subgroups of prime order above the
    /// previous one.
    pub fn u_hypercentre_above(&self, base: usize) -> usize {
        let mut z = base;
        loop {
            let z_order = self.lattice.order(z);
            let next = self
                .lattice
                .upper_covers(z)
                .iter()
                .filter(|&&l| arith::is_prime(self.lattice.order(l) / z_order))
                .fold(z, |acc, &l| self.lattice.join(self.group, acc, l));
            if next == z {
                return z;
            }
            z = next;
        }
    }

    pub fn u_hypercentre_id(&self) -> usize {
        self.u_hypercentre_above(NormalLattice::TRIVIAL)
    }

    /// `Z_𝔘(G)`.
    pub fn u_hypercentre(&self) -> Subgroup {
        self.node(self.u_hypercentre_id()).clone()
    }

    /// `F*(G)` from `F*(G)/F(G) = Soc(F(G)C_G(F(G))/F(G))`.
    pub fn f_star(&self) -> Result<Subgroup> {
        let g = self.group;
        let fit = self.fitting();
        let cent = subgroup::centralizer(g, &fit);
        let fc = subgroup::join(g, &fit, &cent)?;
        let q = normal::quotient(g, &fit)?;
        let img = q.image_of(&fc);
        let r = normal::restrict(q.image(), &img)?;
        let inner = GroupAnalysis::new(r.group())?;
        let soc = inner.node(inner.lattice.socle_id(r.group())).clone();
        let soc_img = r.lift(q.image(), &soc);
        Ok(q.preimage(g, &soc_img))
    }

    /// `F*(E)` for the normal subgroup at node `e` (equal to `F(E)` when `E` is soluble).
    pub fn f_star_within(&self, e: usize) -> Result<usize> {
        if self.is_soluble_within(e) {
            return Ok(self.fitting_within(e));
        }
        let r = normal::restrict(self.group, self.node(e))?;
        let inner = GroupAnalysis::new(r.group())?;
        let fs = r.lift(self.group, &inner.f_star()?);
        self.lattice.require(&fs)
    }

    /// `G^𝔑`: the last term of the lower central series.
    pub fn nilpotent_residual(&self) -> Subgroup {
        subgroup::lower_central_series_of(self.group, &self.whole)
            .pop()
            .unwrap()
    }

    pub fn summarize(&self, s: &Subgroup) -> SubgroupSummary {
        SubgroupSummary {
            order: s.order_u64(),
            node: self.lattice.id_of(s),
            generators: s.describe(self.group),
        }
    }

    pub fn report(&self) -> Result<ClassReport> {
        let primes = self
            .primes()
            .into_iter()
            .map(|p| PrimeReport {
                p,
                p_soluble: self.is_p_soluble(p),
                p_supersoluble: self.is_p_supersoluble(p),
                p_nilpotent: self.is_p_nilpotent(p),
                sylow: self.summarize(&self.sylow(p)),
                sylow_count: self.sylow_subgroups(p).len(),
                o_p: self.summarize(&self.radical_p(p)),
                o_p_prime: self.summarize(&self.radical_p_prime(p)),
                f_p: self.summarize(&self.fitting_p(p)),
            })
            .collect();
        let series = self.lattice.some_chief_series();
        Ok(ClassReport {
            order: self.order(),
            degree: self.group.degree(),
            normal_subgroups: self.lattice.len(),
            chief_factor_orders: series.factor_orders,
            abelian: self.is_abelian(),
            nilpotent: self.is_nilpotent(),
            soluble: self.is_soluble(),
            supersoluble: self.is_supersoluble(),
            center: self.summarize(&self.center()),
            hypercentre: self.summarize(&self.hypercentre()),
            u_hypercentre: self.summarize(&self.u_hypercentre()),
            fitting: self.summarize(&self.fitting()),
            f_star: self.summarize(&self.f_star()?),
            derived_subgroup: self.summarize(&subgroup::derived_subgroup(self.group)),
            nilpotent_residual: self.summarize(&self.nilpotent_residual()),
            primes,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupSummary {
    pub order: u64,
    /// Normal-lattice node id, when the subgroup is normal.
    pub node: Option<usize>,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimeReport {
    pub p: u64,
    pub p_soluble: bool,
    pub p_supersoluble: bool,
    pub p_nilpotent: bool,
    pub sylow: SubgroupSummary,
    pub sylow_count: usize,
    pub o_p: SubgroupSummary,
    pub o_p_prime: SubgroupSummary,
    pub f_p: SubgroupSummary,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub order: u64,
    pub degree: usize,
    pub normal_subgroups: usize,
    pub chief_factor_orders: Vec<u64>,
    pub abelian: bool,
    pub nilpotent: bool,
    pub soluble: bool,
    pub supersoluble: bool,
    pub center: SubgroupSummary,
    pub hypercentre: SubgroupSummary,
    pub u_hypercentre: SubgroupSummary,
    pub fitting: SubgroupSummary,
    pub f_star: SubgroupSummary,
    pub derived_subgroup: SubgroupSummary,
    pub nilpotent_residual: SubgroupSummary,
    pub primes: Vec<PrimeReport>,
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

    fn s3() -> FiniteGroup {
        group(&["(1 2)", "(1 2 3)"], 3)
    }
    fn s4() -> FiniteGroup {
        group(&["(1 2)", "(1 2 3 4)"], 4)
    }
    fn a4() -> FiniteGroup {
        group(&["(1 2 3)", "(2 3 4)"], 4)
    }
    fn a5() -> FiniteGroup {
        group(&["(1 2 3 4 5)", "(1 2 3)"], 5)
    }
    fn sl23() -> FiniteGroup {
        // action on the 8 non-zero vectors of F_3^2
        group(&["(3 4 5)(6 8 7)", "(1 4 7)(2 8 5)"], 8)
    }

    #[test]
    fn sylow_subgroups() {
        let g = a5();
        let a = GroupAnalysis::new(&g).unwrap();
        assert_eq!(a.sylow(5).order(), 5);
        assert_eq!(a.sylow_subgroups(5).len(), 6);
        assert_eq!(a.sylow(7).order(), 1);
        let g = s4();
        let a = GroupAnalysis::new(&g).unwrap();
        assert_eq!(a.sylow(2).order(), 8);
        assert_eq!(a.sylow_subgroups(2).len(), 3);
        let g = a4();
        let a = GroupAnalysis::new(&g).unwrap();
        let v4 = a.sylow(2);
        assert_eq!(v4.order(), 4);
        assert_eq!(a.lattice().id_of(&v4), Some(1));
    }

    #[test]
    fn radicals() {
        let g = s4();
        let a = GroupAnalysis::new(&g).unwrap();
        assert_eq!(a.fitting().order(), 4);
        assert_eq!(a.radical_p_prime(2).order(), 1);
        assert_eq!(a.fitting_p(2).order(), 4);
        let g = a4();
        let a = GroupAnalysis::new(&g).unwrap();
        assert_eq!(a.radical_p_prime(3).order(), 4);
        assert_eq!(a.radical_p(3).order(), 1);
    }

    #[test]
    fn nilpotency_flags() {
        let g = s3();
        let a = GroupAnalysis::new(&g).unwrap();
        assert!(!a.is_p_nilpotent(3));
        assert!(a.is_p_nilpotent(2));
        assert!(a.is_supersoluble());
        assert!(!a.is_nilpotent());

        let g = a5();
        let a = GroupAnalysis::new(&g).unwrap();
        for p in [2, 3, 5] {
            assert!(!a.is_p_soluble(p));
        }
        assert!(!a.is_soluble() && !a.is_soluble_by_derived_series());

        let g = group(&["(1 2 3 4 5 6 7 8)", "(1 3)(4 8)(5 7)"], 8);
        let a = GroupAnalysis::new(&g).unwrap();
        assert!(a.is_nilpotent());
        assert_eq!(a.fitting().order(), g.order());
    }

    #[test]
    fn supersolubility() {
        let g = a4();
        assert!(!GroupAnalysis::new(&g).unwrap().is_supersoluble());
        let g = s4();
        let a = GroupAnalysis::new(&g).unwrap();
        assert!(a.is_p_supersoluble(3));
        assert!(!a.is_p_supersoluble(2));
        assert!(a.is_soluble() && a.is_soluble_by_derived_series());
    }

    #[test]
    fn hypercentres() {
        let g = a4();
        assert!(GroupAnalysis::new(&g).unwrap().u_hypercentre().is_trivial());
        let g = s3();
        assert_eq!(GroupAnalysis::new(&g).unwrap().u_hypercentre().order(), 6);
        let g = sl23();
        assert_eq!(g.order(), 24);
        let a = GroupAnalysis::new(&g).unwrap();
        assert_eq!(a.u_hypercentre().order(), 2);
        assert_eq!(a.center().order(), 2);
        assert_eq!(a.hypercentre().order(), 2);
        let d8 = group(&["(1 2 3 4)", "(1 3)"], 4);
        assert_eq!(GroupAnalysis::new(&d8).unwrap().hypercentre().order(), 8);
    }

    #[test]
    fn generalized_fitting() {
        let g = a5();
        assert_eq!(GroupAnalysis::new(&g).unwrap().f_star().unwrap().order(), 60);
        let g = s4();
        let a = GroupAnalysis::new(&g).unwrap();
        assert_eq!(a.f_star().unwrap(), a.fitting());
        let c6 = group(&["(1 2 3 4 5 6)"], 6);
        assert_eq!(GroupAnalysis::new(&c6).unwrap().f_star().unwrap().order(), 6);
        let s5 = group(&["(1 2)", "(1 2 3 4 5)"], 5);
        let a = GroupAnalysis::new(&s5).unwrap();
        assert_eq!(a.f_star().unwrap().order(), 60);
        assert_eq!(a.f_star_within(a.top()).unwrap(), a.lattice().id_of(&a.f_star().unwrap()).unwrap());
    }

    #[test]
    fn nilpotent_residuals() {
        let g = s3();
        assert_eq!(GroupAnalysis::new(&g).unwrap().nilpotent_residual().order(), 3);
        let q8 = group(&["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], 8);
        assert!(GroupAnalysis::new(&q8).unwrap().nilpotent_residual().is_trivial());
        let g = a5();
        assert_eq!(GroupAnalysis::new(&g).unwrap().nilpotent_residual().order(), 60);
    }

    #[test]
    fn report_serializes() {
        let g = s4();
        let r = GroupAnalysis::new(&g).unwrap().report().unwrap();
        assert_eq!(r.chief_factor_orders, vec![4, 3, 2]);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["fitting"]["order"], 4);
        assert_eq!(json["primes"][0]["p"], 2);
    }
}
