mod common;

use common::{arb_vector, gram_schmidt};
use proptest::prelude::*;
use qlogic_core::linalg::is_zero_vec;
use qlogic_core::logic::{
    bivaluation_on, build_block, build_context, check_admissibility,
    evaluate_counterfactual_pasted, evaluate_counterfactual_unpasted, evaluate_factual,
    invariant_check, locate_pair, paste, Admissibility, BlockLattice, Context, ContextCollection,
    Location, Mode, Proposition, Rule, TruthValue, Valuation,
};
use qlogic_core::{Subspace, Vector};

/// A random orthonormal-up-to-scale basis of `C^n`, with the first `cut + 1`
/// directions merged into one member so that rank > 1 members occur.
fn arb_context(n: usize, tag: &'static str) -> impl Strategy<Value = Context> {
    (prop::collection::vec(arb_vector(n), n), 0..n - 1).prop_filter_map(
        "dependent draw",
        move |(vs, cut)| {
            let basis = gram_schmidt(&vs);
            if basis.len() != n {
                return None;
            }
            let mut members = vec![Proposition::new(
                format!("{tag}0"),
                Subspace::from_span(n, basis[..=cut].to_vec()).unwrap(),
            )];
            for (i, v) in basis[cut + 1..].iter().enumerate() {
                members.push(Proposition::new(
                    format!("{tag}{}", i + 1),
                    Subspace::from_span(n, vec![v.clone()]).unwrap(),
                ));
            }
            Some(build_context(tag, members).expect("orthogonal basis gives a context"))
        },
    )
}

fn arb_two_contexts() -> impl Strategy<Value = (Context, Context)> {
    (2usize..=3).prop_flat_map(|n| (arb_context(n, "A"), arb_context(n, "B")))
}

fn nontrivial(block: &BlockLattice) -> Vec<Subspace> {
    block
        .elements()
        .iter()
        .filter(|s| !s.is_trivial())
        .cloned()
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn block_operations_are_subspace_operations(ctx in (2usize..=3).prop_flat_map(|n| arb_context(n, "A"))) {
        let k = ctx.members().len();
        let projections = ctx.projections().to_vec();
        let block = build_block(ctx);
        prop_assert_eq!(block.len(), 1 << k);
        let el = block.elements();
        for a in 0..el.len() {
            prop_assert_eq!(&el[block.complement_index(a)], &el[a].orthocomplement());
            for p in &projections {
                prop_assert!(invariant_check(&el[a], p).unwrap());
            }
            for b in 0..el.len() {
                prop_assert_eq!(&el[block.meet_index(a, b)], &el[a].meet(&el[b]).unwrap());
                prop_assert_eq!(&el[block.join_index(a, b)], &el[a].join(&el[b]).unwrap());
            }
        }
    }

    #[test]
    fn block_is_distributive(ctx in (2usize..=3).prop_flat_map(|n| arb_context(n, "A"))) {
        let block = build_block(ctx);
        let el = block.elements();
        for a in el {
            for b in el {
                for c in el {
                    let lhs = a.meet(&b.join(c).unwrap()).unwrap();
                    let rhs = a.meet(b).unwrap().join(&a.meet(c).unwrap()).unwrap();
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn pasting_preserves_block_order((a, b) in arb_two_contexts()) {
        let coll = ContextCollection::from_contexts([a, b]).unwrap();
        let total: usize = coll.blocks().iter().map(BlockLattice::len).sum();
        let pasted = paste(coll.clone());
        prop_assert!(pasted.len() <= total);
        for (bi, block) in coll.blocks().iter().enumerate() {
            let emb = pasted.embedding(bi);
            for i in 0..block.len() {
                prop_assert_eq!(&pasted.elements()[emb[i]], &block.elements()[i]);
                for j in 0..block.len() {
                    prop_assert_eq!(
                        pasted.leq(emb[i], emb[j]),
                        block.elements()[i].leq(&block.elements()[j]).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn modes_agree_inside_a_block((a, b) in arb_two_contexts()) {
        let coll = ContextCollection::from_contexts([a, b]).unwrap();
        let props: Vec<Subspace> = coll.blocks().iter().flat_map(nontrivial).collect();
        for state in &props {
            for s in &props {
                let p = Proposition::new("P", s.clone());
                let unpasted = evaluate_counterfactual_unpasted(&p, state, &coll).unwrap();
                match locate_pair(&coll, state, s) {
                    Location::Cohabiting(_) => {
                        prop_assert_eq!(unpasted, evaluate_counterfactual_pasted(&p, state).unwrap());
                    }
                    Location::NoCommonBlock => {
                        prop_assert_eq!(unpasted.value, TruthValue::Indeterminate);
                        prop_assert_eq!(unpasted.rule, Rule::NoCommonBlock);
                    }
                }
            }
        }
    }

    #[test]
    fn ray_state_counterfactual_matches_factual(
        (ctx, psi) in (2usize..=3).prop_flat_map(|n| (arb_context(n, "A"), arb_vector(n)))
    ) {
        prop_assume!(!is_zero_vec(&psi));
        let n = ctx.ambient_dim();
        let ray = Subspace::from_span(n, vec![psi.clone()]).unwrap();
        let block = build_block(ctx);
        for s in nontrivial(&block) {
            let p = Proposition::new("P", s);
            let factual = evaluate_factual(&p, &psi).unwrap().value;
            let counter = evaluate_counterfactual_pasted(&p, &ray).unwrap().value;
            prop_assert_ne!(counter, TruthValue::Indeterminate);
            prop_assert_eq!(factual, counter);
        }
    }

    #[test]
    fn unpasted_member_states_never_yield_inadmissible_bivaluations((a, b) in arb_two_contexts()) {
        let coll = ContextCollection::from_contexts([a, b]).unwrap();
        for source in coll.contexts() {
            for state in source.members() {
                for ctx in coll.contexts() {
                    let val = Valuation::evaluate(ctx.members(), &state.subspace, Mode::Unpasted, &coll).unwrap();
                    if let Some(assignment) = bivaluation_on(ctx, &val) {
                        prop_assert_eq!(check_admissibility(ctx, &assignment).unwrap(), Admissibility::Admissible);
                    }
                }
            }
        }
    }
}

#[test]
fn gram_schmidt_yields_orthogonal_vectors() {
    let vs: Vec<Vector> = [[1, 1, 0], [1, 0, 1], [0, 1, 1]]
        .iter()
        .map(|r| r.iter().map(|&x| x.into()).collect())
        .collect();
    let basis = gram_schmidt(&vs);
    assert_eq!(basis.len(), 3);
    for i in 0..3 {
        for j in (i + 1)..3 {
            assert!(qlogic_core::linalg::inner(&basis[i], &basis[j]).is_zero());
        }
    }
}
