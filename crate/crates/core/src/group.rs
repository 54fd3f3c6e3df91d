//! Fully enumerated permutation groups.
//!
//! A [`FiniteGroup`] stores every element, discovered breadth-first from the
//! generators, so element indices are reproducible. Index 0 is the identity.
//! Groups up to [`TABLE_LIMIT`] elements also carry a Cayley table.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use crate::arith;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_ELEMENT_CAP: usize = 10_000;

/// Largest order for which a full multiplication table is kept.
pub const TABLE_LIMIT: usize = 4096;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

pub struct FiniteGroup {
    id: u64,
    degree: usize,
    generators: Vec<Permutation>,
    generator_indices: Vec<usize>,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, u32>,
    /// element `i` = `tree[i].0 * generators[tree[i].1]` (unused for the identity)
    tree: Vec<(u32, u32)>,
    inverses: Vec<u32>,
    table: Option<Vec<u32>>,
    classes: OnceLock<Vec<Vec<usize>>>,
    orders: OnceLock<Vec<u64>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Closure of `gens` under composition, enumerated breadth-first.
///
/// Fails with [`Error::ResourceCap`] once more than `cap` elements are found.
pub fn generate_group(gens: &[Permutation], degree: usize, cap: usize) -> Result<FiniteGroup> {
    if degree == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    if cap == 0 {
        return Err(Error::InvalidArgument("element cap must be positive".into()));
    }
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }

    let k = gens.len();
    let mut elements = vec![Permutation::identity(degree)];
    let mut lookup = HashMap::new();
    lookup.insert(elements[0].clone(), 0u32);
    let mut tree = vec![(0u32, 0u32)];
    // right_mul[i * k + j] = index of elements[i] * gens[j]
    let mut right_mul: Vec<u32> = Vec::new();

    let mut head = 0;
    while head < elements.len() {
        for (j, g) in gens.iter().enumerate() {
            let y = elements[head].compose(g);
            let idx = match lookup.get(&y) {
                Some(&idx) => idx,
                None => {
                    let idx = elements.len() as u32;
                    if elements.len() >= cap {
                        return Err(Error::ResourceCap {
                            what: "group order",
                            cap,
                            reached: elements.len() + 1,
                        });
                    }
                    lookup.insert(y.clone(), idx);
                    elements.push(y);
                    tree.push((head as u32, j as u32));
                    idx
                }
            };
            right_mul.push(idx);
        }
        head += 1;
    }

    let n = elements.len();
    let generator_indices = gens.iter().map(|g| lookup[g] as usize).collect();
    let inverses = elements.iter().map(|e| lookup[&e.inverse()]).collect();

    let table = (n <= TABLE_LIMIT).then(|| {
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            let row = x * n;
            table[row] = x as u32;
            for y in 1..n {
                let (parent, j) = tree[y];
                let prefix = table[row + parent as usize] as usize;
                table[row + y] = right_mul[prefix * k + j as usize];
            }
        }
        table
    });

    Ok(FiniteGroup {
        id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
        degree,
        generators: gens.to_vec(),
        generator_indices,
        elements,
        lookup,
        tree,
        inverses,
        table,
        classes: OnceLock::new(),
        orders: OnceLock::new(),
    })
}

impl FiniteGroup {
    pub(crate) fn id(&self) -> u64 {
        self.id
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn order_u64(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Element indices of the generators, in the order they were supplied.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn element(&self, x: usize) -> &Permutation {
        &self.elements[x]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, perm: &Permutation) -> Option<usize> {
        self.lookup.get(perm).map(|&i| i as usize)
    }

    /// Breadth-first parent of `x` and the generator position used to reach it.
    pub(crate) fn tree_edge(&self, x: usize) -> (usize, usize) {
        let (p, j) = self.tree[x];
        (p as usize, j as usize)
    }

    pub const IDENTITY: usize = 0;

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.lookup[&self.elements[a].compose(&self.elements[b])] as usize,
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `g^-1 x g`
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `x^-1 y^-1 x y`
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let a = self.mul(self.inv(x), self.inv(y));
        self.mul(self.mul(a, x), y)
    }

    pub fn pow(&self, x: usize, mut e: i64) -> usize {
        let mut base = if e < 0 { self.inv(x) } else { x };
        e = e.abs();
        let mut acc = Self::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generator_indices;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    fn orders(&self) -> &[u64] {
        self.orders.get_or_init(|| {
            (0..self.order())
                .map(|x| {
                    let mut k = 1;
                    let mut y = x;
                    while y != Self::IDENTITY {
                        y = self.mul(y, x);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    /// Smallest `k >= 1` with `x^k = 1`.
    pub fn element_order(&self, x: usize) -> u64 {
        self.orders()[x]
    }

    /// True iff the order of `x` is a power of `p` (the identity included).
    pub fn is_p_element(&self, x: usize, p: u64) -> bool {
        arith::is_p_power(self.element_order(x), p)
    }

    /// Orbits of the conjugation action, each sorted, listed by smallest member.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut assigned = vec![false; n];
            let mut classes = Vec::new();
            for x in 0..n {
                if assigned[x] {
                    continue;
                }
                assigned[x] = true;
                let mut class = vec![x];
                let mut head = 0;
                while head < class.len() {
                    let y = class[head];
                    head += 1;
                    for &s in &self.generator_indices {
                        let z = self.conj(y, s);
                        if !assigned[z] {
                            assigned[z] = true;
                            class.push(z);
                        }
                    }
                }
                class.sort_unstable();
                classes.push(class);
            }
            classes
        })
    }
}
