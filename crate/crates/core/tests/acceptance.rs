//! End-to-end acceptance suite.
//!
//! Each test pins one acceptance criterion: the worked small-type examples
//! with every number frozen (orbit counts and sizes, Δ memberships, class
//! counts, automorphism counts), plus the property suites that back the
//! machinery (group axioms, the resultant/splitting-tower agreement,
//! cardinality formulas by enumeration, Hensel exactness and uniqueness,
//! unit-group histograms, one-unit order formulas).  A criterion passes by
//! printing a single `PASS` line; any violated claim panics with the
//! computed and expected values.

use std::collections::BTreeSet;

use chainring::{
    are_isomorphic, aut_count, classify, delta, derive_presenting, is_eisenstein,
    lift_coprime_factorization, verify_unit_invariants, ActionContext, Budget, ChainRing,
    EisensteinPoly, GaloisRing, GrPoly, SubstUnit, TypeParams,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn eis(ctx: &ActionContext, coeffs: &[i64]) -> EisensteinPoly {
    EisensteinPoly::new(
        ctx.galois(),
        ctx.params().e,
        GrPoly::from_int_coeffs(ctx.galois(), coeffs),
    )
    .unwrap()
}

fn ring_from(ctx: &ActionContext, coeffs: &[i64]) -> ChainRing {
    ChainRing::with_params(ctx.params(), Some(eis(ctx, coeffs))).unwrap()
}

fn orbit_id_of(orbits: &[chainring::Orbit], q: &EisensteinPoly) -> usize {
    orbits
        .iter()
        .position(|o| o.contains(q))
        .unwrap_or_else(|| panic!("{:?} not found in any orbit", q.encode()))
}

#[test]
fn criterion_1_type_6_2_1_2() {
    let budget = Budget::default();
    let ctx = ActionContext::new(6, 2, 1, 2).unwrap();
    assert_eq!(ctx.nabla_size(), 8, "|nabla| for (6,2,1,2)");
    let orbits = ctx.all_orbits(&budget, 2).unwrap();
    assert_eq!(orbits.len(), 4, "orbit count");
    assert!(orbits.iter().all(|o| o.len() == 2), "all orbits have size 2");

    let r_minus = ring_from(&ctx, &[-2, 0, 1]); // Y^2 - 2
    let r_plus = ring_from(&ctx, &[2, 0, 1]); // Y^2 + 2
    assert_eq!(r_minus.uniformizer_count(), 16);
    assert_eq!(r_minus.uniformizers().count(), 16);

    let d_minus = delta(&ctx, &r_minus, &orbits, &budget, 2).unwrap();
    let mut want = vec![eis(&ctx, &[-2, 0, 1]), eis(&ctx, &[2, 4, 1])];
    want.sort();
    assert_eq!(d_minus.members, want, "Delta of Y^2-2 is {{Y^2-2, Y^2+4Y+2}}");
    assert!(d_minus.union_of_orbits);

    let d_plus = delta(&ctx, &r_plus, &orbits, &budget, 2).unwrap();
    let mut want = vec![eis(&ctx, &[2, 0, 1]), eis(&ctx, &[-2, 4, 1])];
    want.sort();
    assert_eq!(d_plus.members, want, "Delta of Y^2+2 is {{Y^2+2, Y^2+4Y-2}}");

    for (ring, d) in [(&r_minus, &d_minus), (&r_plus, &d_plus)] {
        for q in &d.members {
            assert_eq!(
                ring.roots_in_uniformizers(q.poly()).len(),
                8,
                "each Delta member has 8 roots among the 16 uniformizers"
            );
        }
    }

    let report = classify(6, 2, 1, 2, &budget, 2).unwrap();
    assert_eq!(report.classes.len(), 4, "four isomorphism classes");
    // the four published representatives land in four distinct orbits that
    // together are exactly the classes
    let published = [[-2, 0, 1], [2, 0, 1], [2, 2, 1], [-2, 2, 1]];
    let ids: BTreeSet<usize> =
        published.iter().map(|c| orbit_id_of(&orbits, &eis(&ctx, c))).collect();
    assert_eq!(ids.len(), 4, "published representatives are pairwise non-isomorphic");
    let class_ids: BTreeSet<usize> =
        report.classes.iter().flat_map(|c| c.delta_orbit_ids.iter().copied()).collect();
    assert_eq!(ids, class_ids);

    println!("PASS criterion 1: (6,2,1,2) orbits, Delta sets, root counts, 4 classes");
}

#[test]
fn criterion_2_type_4_2_3_3() {
    let budget = Budget::default();
    let ctx = ActionContext::new(4, 2, 3, 3).unwrap();
    assert_eq!(ctx.nabla_size(), 702, "|nabla| for (4,2,3,3)");
    let orbits = ctx.all_orbits(&budget, 2).unwrap();
    assert_eq!(orbits.len(), 2);
    assert!(orbits.iter().all(|o| o.len() == 351), "two orbits of size 351");
    assert_eq!(ctx.uniformizer_count(), 18954, "|U| = 18954");

    let g = eis(&ctx, &[-3, 3, 1]); // Y^2 + 3Y - 3
    let ring = ChainRing::with_params(ctx.params(), Some(g.clone())).unwrap();
    assert_eq!(ring.uniformizer_count(), 18954);

    let report = classify(4, 2, 3, 3, &budget, 2).unwrap();
    assert_eq!(report.classes.len(), 2, "two isomorphism classes");
    for class in &report.classes {
        assert_eq!(class.aut_count, Some(54), "18954/351 = 54 relative automorphisms");
    }

    // the presenting polynomial comes out of the Hensel split
    // Y^4 + Y^3 + Y^2 - 3 = (Y^2 + 3Y - 3)(Y^2 + 7Y + 1) over GR(9,3)
    let rw = ctx.galois();
    let eps = GrPoly::from_int_coeffs(rw, &[1, 1]); // 1 + Y
    let derived = derive_presenting(4, 2, 3, 3, &eps).unwrap();
    assert_eq!(derived, g, "derive_presenting(4,2,1+Y) = Y^2+3Y-3");

    let g0 = GrPoly::from_int_coeffs(rw, &[-3, 0, 1, 1, 1]);
    let k = rw.residue_field();
    let gbar = GrPoly::from_int_coeffs(&k, &[0, 0, 1]);
    let hbar = GrPoly::from_int_coeffs(&k, &[1, 1, 1]);
    let (u, v) = lift_coprime_factorization(rw, &g0, &gbar, &hbar).unwrap();
    assert_eq!(u, g.poly().clone());
    assert_eq!(v, GrPoly::from_int_coeffs(rw, &[1, 7, 1]), "cofactor (Y-1)^2");
    assert_eq!(u.mul(rw, &v), g0, "the lifted factorization is exact");

    // Delta is the orbit of g (the type is neat); Y^2-3Y+3 presents the
    // other class
    let d = delta(&ctx, &ring, &orbits, &budget, 2).unwrap();
    let gid = orbit_id_of(&orbits, &g);
    assert_eq!(d.orbit_ids, vec![gid]);
    assert_eq!(d.members, orbits[gid].members());
    let other = eis(&ctx, &[3, -3, 1]);
    assert_eq!(orbit_id_of(&orbits, &other), 1 - gid, "Y^2-3Y+3 lies in the other orbit");

    println!("PASS criterion 2: (4,2,3,3) orbits, |U|, classes, derived presenting polynomial");
}

#[test]
fn criterion_3_type_3_2_3_3() {
    let budget = Budget::default();
    let ctx4 = ActionContext::new(4, 2, 3, 3).unwrap();
    let ctx3 = ActionContext::new(3, 2, 3, 3).unwrap();
    assert_eq!(ctx3.nabla_size(), 702);
    assert_eq!(ctx3.uniformizer_count(), 702, "|U| = 702");

    let orbits4 = ctx4.all_orbits(&budget, 2).unwrap();
    let orbits3 = ctx3.all_orbits(&budget, 2).unwrap();
    assert_eq!(orbits3.len(), 2);
    assert!(orbits3.iter().all(|o| o.len() == 351));
    assert_eq!(orbits3, orbits4, "the (3,2,3,3) orbits coincide with the (4,2,3,3) ones");

    // quotient of the (4,2,3,3) ring at i = 3 keeps the same Delta
    let r4 = ring_from(&ctx4, &[-3, 3, 1]);
    let r3 = r4.quotient(3).unwrap();
    assert_eq!(r3.params(), TypeParams::new(3, 2, 3, 3).unwrap());
    assert_eq!(r3.uniformizers().count(), 702);
    let d4 = delta(&ctx4, &r4, &orbits4, &budget, 2).unwrap();
    let d3 = delta(&ctx3, &r3, &orbits3, &budget, 2).unwrap();
    assert_eq!(d3.members, d4.members, "Delta' = Delta under the quotient");

    let report = classify(3, 2, 3, 3, &budget, 2).unwrap();
    assert_eq!(report.classes.len(), 2);

    println!("PASS criterion 3: (3,2,3,3) orbits, |U| = 702, quotient keeps Delta");
}

#[test]
fn criterion_4_type_5_2_2_2() {
    let budget = Budget::default();
    let ctx = ActionContext::new(5, 2, 2, 2).unwrap();
    assert_eq!(ctx.nabla_size(), 192, "|nabla| = 192");
    let orbits = ctx.all_orbits(&budget, 2).unwrap();
    assert_eq!(orbits.len(), 10, "ten orbits");
    let mut sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
    sizes.sort();
    assert_eq!(sizes, [12, 12, 12, 12, 24, 24, 24, 24, 24, 24], "6 of size 24, 4 of size 12");

    let ring = ring_from(&ctx, &[-2, 4, 1]); // Y^2 + 4Y - 2
    assert_eq!(ring.size(), 1024, "ring order 1024");
    assert_eq!(ring.galois().characteristic(), 8, "characteristic 8");

    let d = delta(&ctx, &ring, &orbits, &budget, 2).unwrap();
    assert!(d.union_of_orbits);
    assert_eq!(d.orbit_ids.len(), 4, "Delta is a union of four orbits");
    assert!(d.orbit_ids.iter().all(|&i| orbits[i].len() == 12), "all four of size 12");
    assert_eq!(d.members.len(), 48);

    let report = classify(5, 2, 2, 2, &budget, 2).unwrap();
    assert_eq!(report.classes.len(), 7, "seven isomorphism classes");

    println!("PASS criterion 4: (5,2,2,2) orbit sizes, Delta of Y^2+4Y-2, 7 classes");
}

#[test]
fn criterion_5_type_4_3_2_3() {
    let budget = Budget::default();
    let ctx = ActionContext::new(4, 3, 2, 3).unwrap();
    assert_eq!(ctx.nabla_size(), 648, "|nabla| = 648");
    let orbits = ctx.all_orbits(&budget, 2).unwrap();
    assert_eq!(orbits.len(), 17, "17 orbits");
    let mut sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
    sizes.sort();
    let mut expected = vec![8; 9];
    expected.extend_from_slice(&[72; 8]);
    assert_eq!(sizes, expected, "8 orbits of size 72 and 9 of size 8");

    // Delta of the ring presented by g = Y^3 + 6Y^2 + 3Y + 6 is all of nabla
    let g = eis(&ctx, &[6, 3, 6, 1]);
    let ring = ChainRing::with_params(ctx.params(), Some(g.clone())).unwrap();
    let d = delta(&ctx, &ring, &orbits, &budget, 2).unwrap();
    assert_eq!(d.members.len(), 648, "Delta = nabla");
    assert_eq!(d.orbit_ids, (0..17).collect::<Vec<_>>());
    assert_eq!(orbits[orbit_id_of(&orbits, &g)].len(), 72, "g lies in a long orbit");
    let short = eis(&ctx, &[-3, 0, 0, 1]); // Y^3 - 3
    assert_eq!(orbits[orbit_id_of(&orbits, &short)].len(), 8, "Y^3-3 lies in a short orbit");

    // a single class: the two presentations give isomorphic rings
    let report = classify(4, 3, 2, 3, &budget, 2).unwrap();
    assert_eq!(report.classes.len(), 1, "one isomorphism class");
    let ring_short = ChainRing::with_params(ctx.params(), Some(short)).unwrap();
    assert!(are_isomorphic(&ring, &ring_short, &budget).unwrap());

    // neatification lands in (6,3,2,3) and quotients back to the original
    let neat = ring.neatification().unwrap();
    assert_eq!(neat.params(), TypeParams::new(6, 3, 2, 3).unwrap());
    let back = neat.quotient(4).unwrap();
    assert!(are_isomorphic(&back, &ring, &budget).unwrap());
    assert!(are_isomorphic(&back, &ring_short, &budget).unwrap());

    let report6 = classify(6, 3, 2, 3, &budget, 4).unwrap();
    assert_eq!(report6.classes.len(), 17, "(6,3,2,3) has 17 classes");
    assert_eq!(report6.orbits.len(), 17);

    println!("PASS criterion 5: (4,3,2,3) orbits, Delta = nabla, neatification, 17 classes above");
}

#[test]
fn criterion_6_t_group_order() {
    let ctx = ActionContext::new(3, 2, 2, 2).unwrap();
    assert_eq!(ctx.t_group_order(), 3072, "|T_x| for (3,2,2,2)");
    let ctx = ActionContext::new(6, 2, 1, 2).unwrap();
    assert_eq!(ctx.t_group_order(), 1 << 17, "|T_x| for (6,2,1,2)");
    println!("PASS criterion 6: t_group_order(3,2,2,2) = 3072");
}

fn random_subst(ctx: &ActionContext, rng: &mut StdRng) -> SubstUnit {
    let rw = ctx.galois();
    let bound = rw.zq().modulus();
    let a = ctx.params().a as usize;
    loop {
        let coeffs: Vec<_> = (0..a)
            .map(|_| {
                let coords: Vec<u64> = (0..rw.f()).map(|_| rng.gen_range(0..bound)).collect();
                rw.from_coords(&coords).unwrap()
            })
            .collect();
        if rw.is_unit(&coeffs[0]) {
            return ctx.subst_unit(&GrPoly::from_coeffs(rw, coeffs)).unwrap();
        }
    }
}

fn random_unit_poly(ctx: &ActionContext, deg: usize, rng: &mut StdRng) -> GrPoly {
    let rw = ctx.galois();
    let bound = rw.zq().modulus();
    loop {
        let coeffs: Vec<_> = (0..=deg)
            .map(|_| {
                let coords: Vec<u64> = (0..rw.f()).map(|_| rng.gen_range(0..bound)).collect();
                rw.from_coords(&coords).unwrap()
            })
            .collect();
        let t = GrPoly::from_coeffs(rw, coeffs);
        if rw.is_unit(&t.coeff(rw, 0)) {
            return t;
        }
    }
}

fn trial_is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= x {
        if x % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn upow(b: u128, k: u32) -> u128 {
    (0..k).fold(1u128, |acc, _| acc * b)
}

#[test]
fn criterion_7_property_suites() {
    let budget = Budget::default();
    let mut rng = StdRng::seed_from_u64(0x5eed);

    // group axioms and the action law, randomized, >= 10^4 samples total
    let mut samples = 0usize;
    for (a, e, f, p) in [(6u32, 2u32, 1u32, 2u64), (5, 2, 2, 2), (3, 2, 3, 3), (4, 3, 2, 3)] {
        let ctx = ActionContext::new(a, e, f, p).unwrap();
        let nabla = ctx.enumerate_nabla(&budget).unwrap();
        let id = ctx.subst_identity();
        for q in &nabla {
            assert_eq!(&ctx.resultant_action(id.poly(), q).unwrap(), q, "identity acts trivially");
        }
        for _ in 0..1500 {
            let t1 = random_subst(&ctx, &mut rng);
            let t2 = random_subst(&ctx, &mut rng);
            let t3 = random_subst(&ctx, &mut rng);
            let left = ctx.subst_product(&t1, &ctx.subst_product(&t2, &t3));
            let right = ctx.subst_product(&ctx.subst_product(&t1, &t2), &t3);
            assert_eq!(left, right, "associativity");
            let inv = ctx.subst_inverse(&t1);
            assert_eq!(ctx.subst_product(&inv, &t1), id, "left inverse");
            assert_eq!(ctx.subst_product(&t1, &inv), id, "right inverse");
            assert_eq!(ctx.subst_product(&t1, &id), t1, "right identity");
            samples += 1;
        }
        for _ in 0..1200 {
            let t1 = random_subst(&ctx, &mut rng);
            let t2 = random_subst(&ctx, &mut rng);
            let q = &nabla[rng.gen_range(0..nabla.len())];
            let t12 = ctx.subst_product(&t1, &t2);
            let step = ctx
                .resultant_action(t1.poly(), &ctx.resultant_action(t2.poly(), q).unwrap())
                .unwrap();
            let joint = ctx.resultant_action(t12.poly(), q).unwrap();
            assert_eq!(step, joint, "(t1*t2)*q = t1*(t2*q)");
            // Eisenstein closure, checked explicitly on top of the
            // constructor's own validation
            assert!(is_eisenstein(ctx.galois(), e, joint.poly()));
            samples += 1;
        }
    }
    assert!(samples >= 10_000, "at least 10^4 randomized samples, got {samples}");

    // resultant and splitting tower agree: every action class on (6,2,1,2),
    // randomized on larger types
    let ctx = ActionContext::new(6, 2, 1, 2).unwrap();
    let nabla = ctx.enumerate_nabla(&budget).unwrap();
    for q in &nabla {
        for t in ctx.uniformizer_transversal() {
            assert_eq!(ctx.resultant_action(&t, q).unwrap().poly(), &ctx.splitting_action(&t, q));
        }
    }
    for (a, e, f, p) in [(4u32, 2u32, 3u32, 3u64), (5, 2, 2, 2), (4, 3, 2, 3)] {
        let ctx = ActionContext::new(a, e, f, p).unwrap();
        let nabla = ctx.enumerate_nabla(&budget).unwrap();
        for _ in 0..20 {
            let t = random_unit_poly(&ctx, 2 * e as usize, &mut rng);
            let q = &nabla[rng.gen_range(0..nabla.len())];
            assert_eq!(ctx.resultant_action(&t, q).unwrap().poly(), &ctx.splitting_action(&t, q));
        }
    }

    // compatibility: if q(u) = 0 then (t*q)(t*u) = 0
    for (a, e, f, p, g) in
        [(6u32, 2u32, 1u32, 2u64, vec![-2i64, 0, 1]), (4, 2, 3, 3, vec![-3, 3, 1])]
    {
        let ctx = ActionContext::new(a, e, f, p).unwrap();
        let ring = ring_from(&ctx, &g);
        let q = eis(&ctx, &g);
        let roots = ring.roots_in_uniformizers(q.poly());
        assert!(!roots.is_empty());
        for _ in 0..10 {
            let t = random_subst(&ctx, &mut rng);
            let tq = ctx.resultant_action(t.poly(), &q).unwrap();
            for u in &roots {
                let tu = ctx.star_uniformizer(&ring, &t, u).unwrap();
                assert!(ring.is_zero(&ring.eval_poly(tq.poly(), &tu)), "(t*q)(t*u) = 0");
            }
        }
    }

    // root counts are constant along orbits
    for (a, e, f, p, g) in
        [(6u32, 2u32, 1u32, 2u64, vec![-2i64, 0, 1]), (5, 2, 2, 2, vec![-2, 4, 1])]
    {
        let ctx = ActionContext::new(a, e, f, p).unwrap();
        let ring = ring_from(&ctx, &g);
        let unifs: Vec<_> = ring.uniformizers().collect();
        for orbit in ctx.all_orbits(&budget, 2).unwrap() {
            let counts: BTreeSet<usize> = orbit
                .members()
                .iter()
                .map(|q| {
                    unifs.iter().filter(|u| ring.is_zero(&ring.eval_poly(q.poly(), u))).count()
                })
                .collect();
            assert_eq!(counts.len(), 1, "root count is an orbit invariant");
        }
    }

    // transitivity on U: t -> t(pi)pi maps the transversal bijectively onto
    // the uniformizers
    for (a, e, f, p, g) in [
        (6u32, 2u32, 1u32, 2u64, vec![-2i64, 0, 1]),
        (5, 2, 2, 2, vec![-2, 4, 1]),
        (3, 2, 3, 3, vec![-3, 3, 1]),
    ] {
        let ctx = ActionContext::new(a, e, f, p).unwrap();
        let ring = ring_from(&ctx, &g);
        let pi = ring.pi();
        let ts = ctx.uniformizer_transversal();
        let images: BTreeSet<_> = ts
            .iter()
            .map(|t| {
                let t = ctx.subst_unit(t).unwrap();
                ctx.star_uniformizer(&ring, &t, &pi).unwrap()
            })
            .collect();
        assert_eq!(images.len(), ts.len(), "the transversal maps injectively");
        let all: BTreeSet<_> = ring.uniformizers().collect();
        assert_eq!(images, all, "and onto U");
    }

    // |R| = p^(fa) and |U| = (p^f - 1) p^(f(a-2)) by enumeration on every
    // type with |R| <= 10^6
    let mut types_checked = 0usize;
    for p in 2..=1000u64 {
        if !trial_is_prime(p) {
            continue;
        }
        for f in 1..=20u32 {
            if upow(p as u128, 2 * f) > 1_000_000 {
                break;
            }
            for a in 2..=40u32 {
                let order = upow(p as u128, f * a);
                if order > 1_000_000 {
                    break;
                }
                for e in 1..=a {
                    let ring = if e == a {
                        ChainRing::new(a, e, f, p, None).unwrap()
                    } else {
                        let rw = TypeParams::new(a, e, f, p).unwrap().coefficient_ring().unwrap();
                        let eps = GrPoly::from_int_coeffs(&rw, &[1]);
                        let q = derive_presenting(a, e, f, p, &eps).unwrap();
                        ChainRing::new(a, e, f, p, Some(q)).unwrap()
                    };
                    assert_eq!(ring.elements().count() as u128, order, "|R| at ({a},{e},{f},{p})");
                    let units = (upow(p as u128, f) - 1) * upow(p as u128, f * (a - 2));
                    assert_eq!(
                        ring.uniformizers().count() as u128,
                        units,
                        "|U| at ({a},{e},{f},{p})"
                    );
                    assert_eq!(ring.uniformizer_count(), units);
                    types_checked += 1;
                }
            }
        }
    }
    assert!(types_checked > 400, "swept {types_checked} types");

    // rho-expansions are bijective
    for (a, e, f, p, g) in [
        (6u32, 2u32, 1u32, 2u64, Some(vec![-2i64, 0, 1])),
        (5, 2, 2, 2, Some(vec![-2, 4, 1])),
        (4, 2, 3, 3, Some(vec![-3, 3, 1])),
        (3, 3, 2, 2, None),
    ] {
        let ring = match g {
            Some(g) => {
                let ctx = ActionContext::new(a, e, f, p).unwrap();
                ring_from(&ctx, &g)
            }
            None => ChainRing::new(a, e, f, p, None).unwrap(),
        };
        let mut seen = BTreeSet::new();
        let mut count = 0u128;
        for x in ring.elements() {
            let digits = ring.rho_expansion(&x);
            assert!(digits.iter().all(|d| ring.galois().in_teichmuller_set(d)));
            assert_eq!(ring.from_expansion(&digits).unwrap(), x, "expansion round-trip");
            seen.insert(digits);
            count += 1;
        }
        assert_eq!(seen.len() as u128, count, "expansions are distinct");
        assert_eq!(count, ring.size());
    }

    // Hensel lifting is exact and unique, exhaustively over moduli <= 8
    let z8 = GaloisRing::canonical(2, 3, 1).unwrap();
    let k2 = z8.residue_field();
    let g = GrPoly::from_int_coeffs(&z8, &[-2, 0, 1, 0, 0, 0, 1]); // Y^6 + Y^2 - 2
    let (u, v) = lift_coprime_factorization(
        &z8,
        &g,
        &GrPoly::from_int_coeffs(&k2, &[0, 0, 1]),
        &GrPoly::from_int_coeffs(&k2, &[1, 0, 0, 0, 1]),
    )
    .unwrap();
    assert_eq!(u, GrPoly::from_int_coeffs(&z8, &[-2, 0, 1]));
    assert_eq!(v, GrPoly::from_int_coeffs(&z8, &[-3, 0, 2, 0, 1]));
    assert_eq!(u.mul(&z8, &v), g, "exact product, not just mod p^k");
    let mut solutions = 0;
    for b0 in (0..8).step_by(2) {
        for b1 in (0..8).step_by(2) {
            let cand = GrPoly::from_int_coeffs(&z8, &[b0, b1, 1]);
            if let Ok((quot, rem)) = g.divmod_monic(&z8, &cand) {
                if rem.is_zero() && quot.reduce_mod_p(&z8) == v.reduce_mod_p(&z8) {
                    solutions += 1;
                    assert_eq!(cand, u);
                }
            }
        }
    }
    assert_eq!(solutions, 1, "unique monic lift over Z/8 by exhaustion");

    let z4 = GaloisRing::canonical(2, 2, 1).unwrap();
    let k2 = z4.residue_field();
    let g4 = GrPoly::from_int_coeffs(&z4, &[2, 0, 3, 0, 1]); // Y^4 + 3Y^2 + 2
    let (u4, v4) = lift_coprime_factorization(
        &z4,
        &g4,
        &GrPoly::from_int_coeffs(&k2, &[0, 0, 1]),
        &GrPoly::from_int_coeffs(&k2, &[1, 0, 1]),
    )
    .unwrap();
    assert_eq!(u4.mul(&z4, &v4), g4);
    let mut solutions = 0;
    for b0 in (0..4).step_by(2) {
        for b1 in (0..4).step_by(2) {
            let cand = GrPoly::from_int_coeffs(&z4, &[b0, b1, 1]);
            if let Ok((quot, rem)) = g4.divmod_monic(&z4, &cand) {
                if rem.is_zero() && quot.reduce_mod_p(&z4) == v4.reduce_mod_p(&z4) {
                    solutions += 1;
                    assert_eq!(cand, u4);
                }
            }
        }
    }
    assert_eq!(solutions, 1, "unique monic lift over Z/4 by exhaustion");

    // one-unit orders: ord(r^(p^n) - 1) = m + ne while it stays below a, and
    // the order of 1 - pi^(m0), m0 = ceil((e+1)/(p-1)), is p^ceil((a-m0)/e)
    for (a, e, f, p, g) in [
        (6u32, 2u32, 1u32, 2u64, vec![-2i64, 0, 1]),
        (5, 2, 2, 2, vec![-2, 4, 1]),
        (4, 2, 3, 3, vec![-3, 3, 1]),
        (3, 2, 3, 3, vec![-3, 3, 1]),
        (4, 3, 2, 3, vec![6, 3, 6, 1]),
        (6, 3, 2, 3, vec![6, 3, 6, 1]),
    ] {
        let ctx = ActionContext::new(a, e, f, p).unwrap();
        let ring = ring_from(&ctx, &g);
        let pi = ring.pi();
        for m in 1..a {
            if m * (p as u32) <= m + e {
                continue; // lemma hypothesis mp > m + e
            }
            for r in [
                ring.sub(&ring.one(), &ring.pow(&pi, m as u64)),
                ring.add(&ring.one(), &ring.pow(&pi, m as u64)),
            ] {
                let mut x = r;
                for n in 1..=4u32 {
                    x = ring.pow(&x, p);
                    let expected = m + n * e;
                    if expected < a {
                        assert_eq!(
                            ring.ord(&ring.sub(&x, &ring.one())),
                            expected,
                            "ord(r^(p^{n}) - 1) at ({a},{e},{f},{p}), m = {m}"
                        );
                    } else {
                        assert_eq!(x, ring.one(), "r^(p^{n}) = 1 once m + ne >= a");
                        break;
                    }
                }
            }
        }
        let m0 = (e + 1).div_ceil((p - 1) as u32);
        if m0 < a {
            let r = ring.sub(&ring.one(), &ring.pow(&pi, m0 as u64));
            let expected = (p as u64).pow((a - m0).div_ceil(e));
            assert_eq!(ring.unit_order(&r).unwrap(), expected, "order of 1 - pi^m0");
        }
    }

    // unit-group histograms for every Galois ring of size <= 10^4
    let mut rings_checked = 0;
    for p in 2..=10_000u64 {
        if !trial_is_prime(p) {
            continue;
        }
        for n in 1..=14u32 {
            if upow(p as u128, n) > 10_000 {
                break;
            }
            for f in 1..=14usize {
                if upow(p as u128, n * f as u32) > 10_000 {
                    break;
                }
                let ring = GaloisRing::canonical(p, n, f).unwrap();
                assert!(
                    verify_unit_invariants(&ring, 10_000).unwrap(),
                    "unit histogram at GR({p}^{n}, {f})"
                );
                rings_checked += 1;
            }
        }
    }
    assert!(rings_checked > 1200, "checked {rings_checked} Galois rings");

    // Frobenius has order exactly f
    for (p, n, f) in [(2u64, 2u32, 2usize), (2, 3, 2), (2, 2, 3), (3, 2, 2), (3, 1, 3), (5, 1, 2)]
    {
        let ring = GaloisRing::canonical(p, n, f).unwrap();
        for j in 1..f {
            assert!(
                ring.enumerate().any(|x| {
                    let y = (0..j).fold(x.clone(), |y, _| ring.frobenius(&y));
                    y != x
                }),
                "frobenius^{j} is not the identity on GR({p}^{n},{f})"
            );
        }
        for x in ring.enumerate() {
            let y = (0..f).fold(x.clone(), |y, _| ring.frobenius(&y));
            assert_eq!(y, x, "frobenius^f = id");
        }
    }

    println!("PASS criterion 7: property suites (group axioms, oracles, enumerations, orders)");
}

#[test]
fn criterion_8_isomorphism_test() {
    let budget = Budget::default();
    let ctx = ActionContext::new(6, 2, 1, 2).unwrap();
    let r_minus = ring_from(&ctx, &[-2, 0, 1]);
    let r_plus = ring_from(&ctx, &[2, 0, 1]);
    let r_mate = ring_from(&ctx, &[2, 4, 1]); // same orbit as Y^2 - 2

    assert!(!are_isomorphic(&r_minus, &r_plus, &budget).unwrap(), "Y^2-2 and Y^2+2 differ");
    assert!(are_isomorphic(&r_minus, &r_mate, &budget).unwrap(), "Y^2-2 and Y^2+4Y+2 agree");
    assert!(are_isomorphic(&r_minus, &r_minus, &budget).unwrap());
    let other_mate = ring_from(&ctx, &[-2, 4, 1]);
    assert!(are_isomorphic(&r_plus, &other_mate, &budget).unwrap());
    assert_eq!(aut_count(&r_minus, &budget).unwrap(), 8);

    // different parameters are never isomorphic
    let ctx5 = ActionContext::new(5, 2, 2, 2).unwrap();
    let r5 = ring_from(&ctx5, &[-2, 4, 1]);
    assert!(!are_isomorphic(&r_minus, &r5, &budget).unwrap());

    // classification reports are identical whatever the parallelism
    let budget = Budget::default();
    let r1 = classify(6, 2, 1, 2, &budget, 1).unwrap();
    let r3 = classify(6, 2, 1, 2, &budget, 3).unwrap();
    assert_eq!(r1, r3, "reports are deterministic across job counts");

    println!("PASS criterion 8: isomorphism test separates and identifies correctly");
}
