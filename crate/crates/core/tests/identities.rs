//! Cross-checks between registry records, weights and execution strategies.

use hookpart::enumerate::{enumerate_up_to, PartitionClass};
use hookpart::identities::registry::Lhs;
use hookpart::identities::verify::sides;
use hookpart::identities::weights::divisible_boxes;
use hookpart::identities::{
    ids, lhs_series_with, lookup, registry, verify, verify_master_random, MasterTheorem,
    ProductWeight, Rho, SignedRho, TRule, WeightSpec,
};
use hookpart::series::int;
use hookpart::{Exec, Monomial, RingElement};

const CAP: u32 = 8;

/// `z ↦ z^2`.
fn square_z(e: &RingElement) -> RingElement {
    RingElement::from_terms(
        e.terms()
            .map(|(m, c)| (Monomial::new(m.b, m.x, 2 * m.z), c.clone())),
        CAP,
    )
}

#[test]
fn paired_weight_equals_signed_product() {
    let paired = WeightSpec::product(ProductWeight::Paired(Rho::NekrasovOkounkov));
    let signed = WeightSpec::product(ProductWeight::Signed(SignedRho::NoSigned(int(1))));
    let full = WeightSpec::product(ProductWeight::Plain(Rho::InvHook));
    let half = WeightSpec::product(ProductWeight::Paired(Rho::InvHook));
    for lam in enumerate_up_to(20, PartitionClass::SelfConjugate).unwrap() {
        for t in [2, 4] {
            let boxes = divisible_boxes(&lam.cell_hooks(), t);
            let p = paired.evaluate(&boxes, CAP).unwrap();
            let s = signed.evaluate(&boxes, CAP).unwrap();
            assert_eq!(square_z(&p), s, "{lam}, t = {t}");
            let h = half.evaluate(&boxes, CAP).unwrap();
            assert_eq!(
                &h * &h,
                full.evaluate(&boxes, CAP).unwrap(),
                "{lam}, t = {t}"
            );
        }
    }
}

#[test]
fn setting_b_to_one_drops_the_rank() {
    let rec = lookup("sc-no-even").unwrap();
    let p = rec.default_params();
    let Lhs::Enumerated(spec) = (rec.lhs)(&p).unwrap() else {
        panic!("enumerated left-hand side expected");
    };
    assert!(spec.use_b);
    let mut plain = spec.clone();
    plain.use_b = false;
    let (lhs, rhs) = sides(&rec, &p, Exec::Sequential).unwrap();
    let unranked = lhs_series_with(&plain, p.n, p.dz, Exec::Sequential).unwrap();
    assert_eq!(lhs.eval_b_one(), unranked);
    assert_eq!(rhs.eval_b_one(), unranked);
}

#[test]
fn setting_x_to_one_gives_rank_generating_function() {
    let tri = lookup("sc-trivariate-gen").unwrap();
    let bg = lookup("sc-bg-gen").unwrap();
    let (tri_lhs, tri_rhs) = sides(&tri, &tri.default_params(), Exec::Sequential).unwrap();
    let (bg_lhs, bg_rhs) = sides(&bg, &bg.default_params(), Exec::Sequential).unwrap();
    assert_eq!(tri_lhs.eval_x_one(), bg_lhs);
    assert_eq!(tri_rhs.eval_x_one(), bg_rhs);
}

#[test]
fn random_master_runs_are_reproducible() {
    for (theorem, t) in [
        (MasterTheorem::Bg4Multi, 2),
        (MasterTheorem::Signed, 4),
        (MasterTheorem::OddBc, 3),
        (MasterTheorem::HanJi, 2),
    ] {
        let mut a = verify_master_random(theorem, t, 12, 7).unwrap();
        let mut b = verify_master_random(theorem, t, 12, 7).unwrap();
        a.wall_time_ms = 0;
        b.wall_time_ms = 0;
        assert_eq!(a, b);
    }
}

#[test]
fn sequential_and_parallel_agree() {
    for id in ["nekrasov-okounkov", "sc-master", "bc-clps", "petreolle"] {
        let rec = lookup(id).unwrap();
        let mut p = rec.default_params();
        p.n = p.n.min(14);
        assert_eq!(
            sides(&rec, &p, Exec::Sequential).unwrap(),
            sides(&rec, &p, Exec::Parallel).unwrap(),
            "{id}"
        );
    }
}

#[test]
fn parity_violations_are_rejected() {
    for rec in registry() {
        let mut p = rec.default_params();
        p.t = match rec.rule {
            TRule::Even => 3,
            TRule::Odd => 4,
            TRule::Unit => 2,
            TRule::Any => continue,
        };
        assert!(verify(&rec, &p).is_err(), "{}", rec.id);
    }
}

#[test]
fn registry_is_complete() {
    let all = ids();
    assert_eq!(all.len(), 39);
    for id in [
        "sc-master",
        "bc-master",
        "jacobi-triple",
        "sc-core-count",
        "petreolle",
    ] {
        assert!(all.contains(&id), "{id}");
    }
    assert!(lookup("no-such-identity").is_err());
}
