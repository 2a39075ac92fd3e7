//! Algebraic laws of the free representation, checked with proptest.

use proptest::prelude::*;

use repgeo::rep::{general_linear_group, representation_from_gl};
use repgeo::term::{eval_module, eval_word, Word};
use repgeo::textio::{parse_module, parse_ring, serialize_module};
use repgeo::{
    enumerate_group_homs, Assignment, FreeContext, GroupWord, ModuleElement, PrimeField, Representation, RingElement,
};

const P: u32 = 3;

fn ctx() -> repgeo::term::Ctx {
    FreeContext::standard(PrimeField::new(P).unwrap(), 2, 2)
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec((0usize..2, -3i64..=3), 0..5).prop_map(Word::reduce)
}

fn ring() -> impl Strategy<Value = RingElement> {
    prop::collection::vec((word(), -4i64..=4), 0..4).prop_map(|t| RingElement::from_terms(&ctx(), t).unwrap())
}

fn module() -> impl Strategy<Value = ModuleElement> {
    prop::collection::vec((0usize..2, word(), -4i64..=4), 0..4)
        .prop_map(|t| ModuleElement::from_terms(&ctx(), t).unwrap())
}

/// A faithful representation of `S₃ = GL(2,2)` on `GF(3)²`.
fn s3_rep() -> Representation {
    let f = PrimeField::new(P).unwrap();
    let (s3, _) = general_linear_group(PrimeField::new(2).unwrap(), 2, 1 << 10).unwrap();
    let (gl, mats) = general_linear_group(f, 2, 1 << 10).unwrap();
    enumerate_group_homs(&s3, &gl, 1 << 20)
        .unwrap()
        .iter()
        .find(|h| h.is_injective())
        .map(|h| representation_from_gl(f, 2, h, &mats).unwrap())
        .unwrap()
}

proptest! {
    #[test]
    fn words_form_a_group(a in word(), b in word(), c in word()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inv()).is_identity());
        prop_assert_eq!(a.mul(&Word::identity()), a.clone());
    }

    #[test]
    fn ring_laws(a in ring(), b in ring(), c in ring()) {
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn module_laws(u in module(), v in module(), r in ring(), s in ring()) {
        prop_assert_eq!(u.act(&r.mul(&s).unwrap()).unwrap(), u.act(&r).unwrap().act(&s).unwrap());
        prop_assert_eq!(u.add(&v).unwrap().act(&r).unwrap(), u.act(&r).unwrap().add(&v.act(&r).unwrap()).unwrap());
        prop_assert_eq!(u.act(&r.add(&s).unwrap()).unwrap(), u.act(&r).unwrap().add(&u.act(&s).unwrap()).unwrap());
    }

    #[test]
    fn text_round_trip(u in module(), r in ring()) {
        let c = ctx();
        prop_assert_eq!(parse_module(&u.to_string(), &c).unwrap(), u.clone());
        prop_assert_eq!(parse_ring(&r.to_string(), &c).unwrap(), r);
        let once = serialize_module(&u);
        prop_assert_eq!(serialize_module(&parse_module(&once, &c).unwrap()), once);
    }

    #[test]
    fn evaluation_is_a_homomorphism(u in module(), v in module(), w in word(), index in 0u64..(81 * 36)) {
        let rep = s3_rep();
        let c = ctx();
        let asg = Assignment::from_index(&rep, 2, 2, index % Assignment::space_size(&rep, 2, 2) as u64);
        prop_assert_eq!(asg.index(&rep), index % Assignment::space_size(&rep, 2, 2) as u64);
        let sum = eval_module(&rep, &asg, &u.add(&v).unwrap());
        prop_assert_eq!(sum, eval_module(&rep, &asg, &u).add(&eval_module(&rep, &asg, &v)));
        let gw = GroupWord::from_word(&c, w).unwrap();
        let moved = eval_module(&rep, &asg, &u.act_word(&gw).unwrap());
        let g = eval_word(&rep, &asg, &gw);
        prop_assert_eq!(moved, rep.act(&eval_module(&rep, &asg, &u), g).unwrap());
    }
}
