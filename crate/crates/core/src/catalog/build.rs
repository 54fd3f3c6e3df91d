use crate::arith;
use crate::catalog::expr::{parse_action, GroupExpr, Word};
use crate::error::{Error, Result};
use crate::group::{generate_group, FiniteGroup};
use crate::perm::{parse_cycles, Permutation};

/// Builds the permutation group described by `expr`, failing once more than
/// `cap` elements are generated.
pub fn build(expr: &GroupExpr, cap: usize) -> Result<FiniteGroup> {
    let (degree, gens) = generators(expr, cap)?;
    generate_group(&gens, degree, cap)
}

fn cycles(degree: usize, gens: &[&str]) -> Result<(usize, Vec<Permutation>)> {
    let gens = gens
        .iter()
        .map(|g| parse_cycles(g, degree))
        .collect::<Result<_>>()?;
    Ok((degree, gens))
}

fn n_cycle(n: usize) -> Permutation {
    let images: Vec<usize> = (2..=n).chain(std::iter::once(1)).collect();
    Permutation::from_images(&images).expect("n-cycle")
}

fn transposition(n: usize, a: usize, b: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.swap(a - 1, b - 1);
    Permutation::from_images(&images).expect("transposition")
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument(format!("{what} needs a positive argument")))
    } else {
        Ok(())
    }
}

/// Degree and generators, in construction order.
fn generators(expr: &GroupExpr, cap: usize) -> Result<(usize, Vec<Permutation>)> {
    use GroupExpr::*;
    match expr {
        Cyclic(n) => {
            positive(*n, "Cyclic")?;
            Ok((*n, vec![n_cycle(*n)]))
        }
        Sym(n) => {
            positive(*n, "Sym")?;
            Ok(match n {
                1 => (1, vec![Permutation::identity(1)]),
                2 => (2, vec![transposition(2, 1, 2)]),
                _ => (*n, vec![transposition(*n, 1, 2), n_cycle(*n)]),
            })
        }
        Alt(n) => {
            positive(*n, "Alt")?;
            if *n < 3 {
                return Ok((*n, vec![Permutation::identity(*n)]));
            }
            let gens = (3..=*n)
                .map(|k| {
                    let mut images: Vec<usize> = (1..=*n).collect();
                    // the 3-cycle (1 2 k)
                    images[0] = 2;
                    images[1] = k;
                    images[k - 1] = 1;
                    Permutation::from_images(&images).expect("3-cycle")
                })
                .collect();
            Ok((*n, gens))
        }
        Dihedral(order) => match order {
            0 => Err(Error::InvalidArgument("Dihedral needs a positive order".into())),
            _ if order % 2 == 1 => Err(Error::InvalidArgument(format!(
                "Dihedral order {order} is odd"
            ))),
            2 => cycles(2, &["(1 2)"]),
            4 => cycles(4, &["(1 2)", "(3 4)"]),
            _ => {
                let m = order / 2;
                // reflection k <-> m + 2 - k
                let images: Vec<usize> = (1..=m).map(|k| if k == 1 { 1 } else { m + 2 - k }).collect();
                Ok((m, vec![n_cycle(m), Permutation::from_images(&images)?]))
            }
        },
        Quaternion8 => cycles(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]),
        // SL(2,3) on the eight non-zero vectors of F_3^2
        SL23 => cycles(8, &["(3 4 5)(6 8 7)", "(1 4 7)(2 8 5)"]),
        ElemAbelian(p, k) => {
            if !arith::is_prime(*p as u64) {
                return Err(Error::NotPrime(*p as u64));
            }
            if *k == 0 {
                return Ok((1, vec![Permutation::identity(1)]));
            }
            let degree = p * k;
            let c = n_cycle(*p);
            Ok((degree, (0..*k).map(|i| c.embed(i * p, degree)).collect()))
        }
        Direct(a, b) => {
            let (da, ga) = generators(a, cap)?;
            let (db, gb) = generators(b, cap)?;
            let degree = da + db;
            let gens = ga
                .iter()
                .map(|g| g.embed(0, degree))
                .chain(gb.iter().map(|g| g.embed(da, degree)))
                .collect();
            Ok((degree, gens))
        }
        Semidirect {
            normal,
            complement,
            action,
        } => semidirect(&build(normal, cap)?, &build(complement, cap)?, action),
        Perm { degree, gens } => {
            positive(*degree, "Perm")?;
            let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
            cycles(*degree, &gens)
        }
    }
}

fn eval_word(g: &FiniteGroup, word: &Word) -> usize {
    word.iter().fold(FiniteGroup::IDENTITY, |acc, &(i, e)| {
        g.mul(acc, g.pow(g.generator_indices()[i], e))
    })
}

/// `N ⋊ K` acting on the elements of `N`: `N` by right translation, each
/// generator of `K` through the automorphism its action map defines.
fn semidirect(n: &FiniteGroup, k: &FiniteGroup, action: &str) -> Result<(usize, Vec<Permutation>)> {
    let maps = parse_action(action, n.generators().len(), k.generators().len())?;
    let order = n.order();
    let ngens = n.generator_indices();

    let mut autos = Vec::with_capacity(maps.len());
    for (j, words) in maps.iter().enumerate() {
        let images: Vec<usize> = words.iter().map(|w| eval_word(n, w)).collect();
        // extend along the breadth-first tree, then check every relation
        let mut phi = vec![FiniteGroup::IDENTITY; order];
        for x in 1..order {
            let (parent, s) = n.tree_edge(x);
            phi[x] = n.mul(phi[parent], images[s]);
        }
        for x in 0..order {
            for (s, &gen) in ngens.iter().enumerate() {
                if phi[n.mul(x, gen)] != n.mul(phi[x], images[s]) {
                    return Err(Error::InvalidAction(format!(
                        "map for complement generator g{} is not a homomorphism",
                        j + 1
                    )));
                }
            }
        }
        let mut hit = vec![false; order];
        for &y in &phi {
            if std::mem::replace(&mut hit[y], true) {
                return Err(Error::InvalidAction(format!(
                    "map for complement generator g{} is not bijective",
                    j + 1
                )));
            }
        }
        autos.push(Permutation::from_zero_based(
            phi.into_iter().map(|y| y as u32).collect(),
        ));
    }

    // the assignment K-generator -> automorphism must respect K's relations
    let mut psi: Vec<Permutation> = vec![Permutation::identity(order); k.order()];
    for y in 1..k.order() {
        let (parent, s) = k.tree_edge(y);
        psi[y] = psi[parent].compose(&autos[s]);
    }
    for y in 0..k.order() {
        for (s, &gen) in k.generator_indices().iter().enumerate() {
            if psi[k.mul(y, gen)] != psi[y].compose(&autos[s]) {
                return Err(Error::InvalidAction(
                    "action does not respect the relations of the complement".into(),
                ));
            }
        }
    }
    let mut distinct = psi.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() < k.order() {
        log::warn!(
            "action is not faithful: kernel of order {} is factored out",
            k.order() / distinct.len()
        );
    }

    let mut gens: Vec<Permutation> = ngens
        .iter()
        .map(|&s| Permutation::from_zero_based((0..order).map(|y| n.mul(y, s) as u32).collect()))
        .collect();
    gens.extend(autos);
    Ok((order, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::expr::parse_expr;
    use crate::group::DEFAULT_ELEMENT_CAP;

    fn order(text: &str) -> usize {
        build(&parse_expr(text).unwrap(), DEFAULT_ELEMENT_CAP)
            .unwrap()
            .order()
    }

    #[test]
    fn standard_families() {
        assert_eq!(order("Cyclic(1)"), 1);
        assert_eq!(order("Cyclic(12)"), 12);
        assert_eq!(order("Sym(4)"), 24);
        assert_eq!(order("Alt(5)"), 60);
        assert_eq!(order("Alt(2)"), 1);
        assert_eq!(order("Dihedral(2)"), 2);
        assert_eq!(order("Dihedral(4)"), 4);
        assert_eq!(order("Dihedral(10)"), 10);
        assert_eq!(order("Quaternion8"), 8);
        assert_eq!(order("SL23"), 24);
        assert_eq!(order("ElemAbelian(3, 3)"), 27);
        let g = build(&parse_expr("Direct(Cyclic(2), Cyclic(3))").unwrap(), 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        let a5 = build(&GroupExpr::Alt(5), 100).unwrap();
        assert_eq!(a5.degree(), 5);
    }

    #[test]
    fn semidirect_products() {
        assert_eq!(order("Semidirect(Cyclic(7), Cyclic(3), \"g1->g1^2\")"), 21);
        assert_eq!(order("Semidirect(Cyclic(5), Cyclic(4), \"g1->g1^2\")"), 20);
        let g = build(
            &parse_expr("Semidirect(ElemAbelian(3, 2), Cyclic(2), \"g1->g1^-1, g2->g2^-1\")").unwrap(),
            100,
        )
        .unwrap();
        assert_eq!((g.order(), g.degree()), (18, 9));
        // an action with a kernel: C4 acting through inversion
        assert_eq!(order("Semidirect(Cyclic(5), Cyclic(4), \"g1->g1^-1\")"), 10);
    }

    #[test]
    fn invalid_actions() {
        for text in [
            // not a homomorphism of C5 (generator image of order 1)
            "Semidirect(Cyclic(5), Cyclic(4), \"g1->1\")",
            // x -> x^2 has order 4 in Aut(C5), but the complement has order 3
            "Semidirect(Cyclic(5), Cyclic(3), \"g1->g1^2\")",
            "Semidirect(ElemAbelian(2, 2), Cyclic(2), \"g1->g1*g1\")",
        ] {
            assert!(
                matches!(build(&parse_expr(text).unwrap(), 1000), Err(Error::InvalidAction(_))),
                "{text}"
            );
        }
    }

    #[test]
    fn caps_and_bad_arguments() {
        assert!(build(&GroupExpr::Sym(6), 100).unwrap_err().is_resource_cap());
        assert!(matches!(build(&GroupExpr::Dihedral(7), 100), Err(Error::InvalidArgument(_))));
        assert!(matches!(build(&GroupExpr::ElemAbelian(4, 2), 100), Err(Error::NotPrime(4))));
    }

    #[test]
    fn deterministic() {
        let e = parse_expr("Direct(Sym(3), Quaternion8)").unwrap();
        let a = build(&e, 1000).unwrap();
        let b = build(&e, 1000).unwrap();
        assert_eq!(a.elements(), b.elements());
    }
}
