use rayon::prelude::*;

use crate::catalog::build::build;
use crate::catalog::expr::GroupExpr;
use crate::error::Result;
use crate::group::FiniteGroup;

/// Name of the order-1875 group `(C5² × C5²) ⋊ C3`.
pub const ORDER_1875_NAME: &str = "(C5^2xC5^2):C3";

/// `(L1 × L2) ⋊ ⟨α⟩` with `L1 = ⟨a, b⟩ ≅ C5²`, `L2 = ⟨a', b'⟩` a copy, and `α` of
/// order 3 acting by `a ↦ b, b ↦ a⁻¹b⁻¹` on both copies. Generators `g1..g4`
/// are `a, b, a', b'`; `g5` is `α`.
pub fn order_1875_group() -> GroupExpr {
    let l = GroupExpr::ElemAbelian(5, 2);
    GroupExpr::semidirect(
        GroupExpr::direct(l.clone(), l),
        GroupExpr::Cyclic(3),
        "g1->g2, g2->g1^-1*g2^-1, g3->g4, g4->g3^-1*g4^-1",
    )
}

/// The fixed list of corpus constructions, smallest families first.
pub fn corpus_entries() -> Vec<(String, GroupExpr)> {
    use GroupExpr::*;
    let mut out: Vec<(String, GroupExpr)> = Vec::new();
    for n in 1..=32 {
        out.push((format!("C{n}"), Cyclic(n)));
    }
    for (p, k) in [(2, 2), (2, 3), (3, 2), (3, 3), (5, 2), (5, 3)] {
        out.push((format!("C{p}^{k}"), ElemAbelian(p, k)));
    }
    for n in (6..=32).step_by(2) {
        out.push((format!("D{n}"), Dihedral(n)));
    }
    out.push(("Q8".into(), Quaternion8));
    out.push(("C4xC2".into(), GroupExpr::direct(Cyclic(4), Cyclic(2))));
    for n in 3..=5 {
        out.push((format!("S{n}"), Sym(n)));
    }
    out.push(("A4".into(), Alt(4)));
    out.push(("A5".into(), Alt(5)));
    out.push(("SL(2,3)".into(), SL23));
    out.push(("S3xC2".into(), GroupExpr::direct(Sym(3), Cyclic(2))));
    out.push(("A4xC3".into(), GroupExpr::direct(Alt(4), Cyclic(3))));
    out.push(("D8xC2".into(), GroupExpr::direct(Dihedral(8), Cyclic(2))));
    out.push((
        "C7:C3".into(),
        GroupExpr::semidirect(Cyclic(7), Cyclic(3), "g1->g1^2"),
    ));
    out.push((
        "C5:C4".into(),
        GroupExpr::semidirect(Cyclic(5), Cyclic(4), "g1->g1^2"),
    ));
    out.push((
        "(C3xC3):C2".into(),
        GroupExpr::semidirect(ElemAbelian(3, 2), Cyclic(2), "g1->g1^-1, g2->g2^-1"),
    ));
    out
}

/// Corpus groups of order at most `max_order`, plus the order-1875 group when
/// `include_1875` is set (regardless of `max_order`).
pub fn builtin_corpus(max_order: u64, include_1875: bool) -> Result<Vec<(String, FiniteGroup)>> {
    let mut chosen: Vec<(String, GroupExpr)> = corpus_entries()
        .into_iter()
        .filter(|(_, e)| e.expected_order().is_some_and(|o| o <= max_order))
        .collect();
    if include_1875 {
        chosen.push((ORDER_1875_NAME.to_string(), order_1875_group()));
    }
    chosen
        .into_par_iter()
        .map(|(name, e)| {
            let cap = e.expected_order().unwrap_or(1) as usize;
            Ok((name, build(&e, cap)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_semantics() {
        let tiny = builtin_corpus(1, false).unwrap();
        assert_eq!(tiny.len(), 1);
        assert_eq!(tiny[0].1.order(), 1);
        let names: Vec<String> = builtin_corpus(60, false)
            .unwrap()
            .into_iter()
            .map(|(n, _)| n)
            .collect();
        assert!(names.contains(&"A5".to_string()));
        assert!(!names.contains(&"S5".to_string()));
    }

    #[test]
    fn orders_match_constructions() {
        let corpus = builtin_corpus(400, false).unwrap();
        assert!(corpus.len() >= 40);
        for ((name, e), (name2, g)) in corpus_entries().iter().zip(&corpus) {
            assert_eq!(name, name2);
            assert_eq!(Some(g.order_u64()), e.expected_order(), "{name}");
        }
    }
}
