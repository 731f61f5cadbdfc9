//! Verification harness: recomputes the worked examples against their
//! published values.
//!
//! Checks are grouped in blocks tagged `ex2` .. `ex7` (one per worked ring
//! type) and `sec6` (substitution-group orders).  Each check prints its
//! claim, the computed value and the expected value on one line; the run
//! fails -- and the process exits nonzero -- if any computed value differs.

use chainring::{
    are_isomorphic, aut_count, classify, delta, derive_presenting, lift_coprime_factorization,
    ActionContext, Budget, ChainRing, EisensteinPoly, GrPoly, Orbit,
};

use crate::poly_text;

pub struct Check {
    pub tag: &'static str,
    pub claim: String,
    pub computed: String,
    pub expected: String,
}

impl Check {
    fn passed(&self) -> bool {
        self.computed == self.expected
    }
}

fn check(
    tag: &'static str,
    claim: impl Into<String>,
    computed: impl ToString,
    expected: impl Into<String>,
) -> Check {
    Check { tag, claim: claim.into(), computed: computed.to_string(), expected: expected.into() }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn eis(ctx: &ActionContext, coeffs: &[i64]) -> EisensteinPoly {
    let poly = GrPoly::from_int_coeffs(ctx.galois(), coeffs);
    EisensteinPoly::new(ctx.galois(), ctx.params().e, poly).expect("fixture is Eisenstein")
}

fn ring_from(ctx: &ActionContext, coeffs: &[i64]) -> ChainRing {
    ChainRing::with_params(ctx.params(), Some(eis(ctx, coeffs))).expect("fixture ring builds")
}

fn sorted_sizes(orbits: &[Orbit]) -> Vec<usize> {
    let mut sizes: Vec<usize> = orbits.iter().map(Orbit::len).collect();
    sizes.sort_unstable();
    sizes
}

fn member_set(ctx: &ActionContext, members: &[EisensteinPoly]) -> String {
    let texts: Vec<String> =
        members.iter().map(|q| poly_text::print(ctx.galois(), q.poly())).collect();
    format!("{{{}}}", texts.join(", "))
}

/// The ring Z[Y]/(8, Y^2 - 2) of type (6, 2, 1, 2) and its published data.
fn ex2(jobs: usize) -> chainring::Result<Vec<Check>> {
    let budget = Budget::default();
    let ctx = ActionContext::new(6, 2, 1, 2)?;
    let orbits = ctx.all_orbits(&budget, jobs)?;

    // Test hook: with CHAINRING_VERIFY_INJECT_WRONG_Q=1 the Delta check runs
    // against Y^2 + 2 instead, so the failure path of this harness is itself
    // observable end to end.
    let inject =
        std::env::var("CHAINRING_VERIFY_INJECT_WRONG_Q").map_or(false, |v| v == "1");
    let q = if inject { [2, 0, 1] } else { [-2, 0, 1] };
    let ring = ring_from(&ctx, &q);
    let d = delta(&ctx, &ring, &orbits, &budget, jobs)?;
    let roots: Vec<usize> =
        d.members.iter().map(|q| ring.roots_in_uniformizers(q.poly()).len()).collect();

    let r_minus = ring_from(&ctx, &[-2, 0, 1]);
    Ok(vec![
        check("ex2", "orbit count of nabla in type (6, 2, 1, 2)", orbits.len(), "4"),
        check("ex2", "orbit sizes", format!("{:?}", sorted_sizes(&orbits)), "[2, 2, 2, 2]"),
        check(
            "ex2",
            format!("Delta of Z[Y]/(8, {})", poly_text::print(ctx.galois(), ring.presenting().unwrap().poly())),
            member_set(&ctx, &d.members),
            "{Y^2 + 4*Y + 2, Y^2 - 2}",
        ),
        check("ex2", "Delta is a union of orbits", yes_no(d.union_of_orbits), "yes"),
        check(
            "ex2",
            "roots of each Delta member among the 16 uniformizers",
            format!("{roots:?}"),
            "[8, 8]",
        ),
        check("ex2", "uniformizer count |U|", r_minus.uniformizer_count(), "16"),
        check(
            "ex2",
            "relative automorphisms of Z[Y]/(8, Y^2 - 2)",
            aut_count(&r_minus, &budget)?,
            "8",
        ),
        check(
            "ex2",
            "isomorphism classes in type (6, 2, 1, 2)",
            classify(6, 2, 1, 2, &budget, jobs)?.classes.len(),
            "4",
        ),
    ])
}

/// The companion ring Z[Y]/(8, Y^2 + 2): same type, different class.
fn ex3(jobs: usize) -> chainring::Result<Vec<Check>> {
    let budget = Budget::default();
    let ctx = ActionContext::new(6, 2, 1, 2)?;
    let orbits = ctx.all_orbits(&budget, jobs)?;
    let r_plus = ring_from(&ctx, &[2, 0, 1]);
    let r_minus = ring_from(&ctx, &[-2, 0, 1]);
    let d = delta(&ctx, &r_plus, &orbits, &budget, jobs)?;
    let q_minus = GrPoly::from_int_coeffs(ctx.galois(), &[-2, 0, 1]);
    Ok(vec![
        check(
            "ex3",
            "Delta of Z[Y]/(8, Y^2 + 2)",
            member_set(&ctx, &d.members),
            "{Y^2 + 2, Y^2 + 4*Y - 2}",
        ),
        check(
            "ex3",
            "Y^2 - 2 has a zero in Z[Y]/(8, Y^2 + 2)",
            yes_no(r_plus.has_uniformizer_root(&q_minus)),
            "no",
        ),
        check(
            "ex3",
            "Z[Y]/(8, Y^2 - 2) and Z[Y]/(8, Y^2 + 2) are isomorphic",
            yes_no(are_isomorphic(&r_minus, &r_plus, &budget)?),
            "no",
        ),
    ])
}

/// Type (4, 2, 3, 3): derived presenting polynomial and class data.
fn ex4(jobs: usize) -> chainring::Result<Vec<Check>> {
    let budget = Budget::default();
    let ctx = ActionContext::new(4, 2, 3, 3)?;
    let orbits = ctx.all_orbits(&budget, jobs)?;
    let report = classify(4, 2, 3, 3, &budget, jobs)?;
    let auts: Vec<Option<u64>> = report.classes.iter().map(|c| c.aut_count).collect();

    // the same derivation over Z/9 and over GR(9, 3)
    let z9 = chainring::GaloisRing::canonical(3, 2, 1)?;
    let eps1 = GrPoly::from_int_coeffs(&z9, &[1, 1]);
    let g1 = derive_presenting(4, 2, 1, 3, &eps1)?;
    let eps3 = GrPoly::from_int_coeffs(ctx.galois(), &[1, 1]);
    let g3 = derive_presenting(4, 2, 3, 3, &eps3)?;
    let g3_expected = GrPoly::from_int_coeffs(ctx.galois(), &[-3, 3, 1]);

    // the split of g0 = Y^4 + Y^3 + Y^2 - 3 behind that derivation
    let g0 = GrPoly::from_int_coeffs(&z9, &[-3, 0, 1, 1, 1]);
    let k = z9.residue_field();
    let gbar = GrPoly::from_int_coeffs(&k, &[0, 0, 1]);
    let hbar = GrPoly::from_int_coeffs(&k, &[1, 1, 1]);
    let (g, cofactor) = lift_coprime_factorization(&z9, &g0, &gbar, &hbar)?;

    let ring = ring_from(&ctx, &[-3, 3, 1]);
    Ok(vec![
        check(
            "ex4",
            "orbit sizes of nabla in type (4, 2, 3, 3)",
            format!("{:?}", sorted_sizes(&orbits)),
            "[351, 351]",
        ),
        check("ex4", "uniformizer count |U|", ring.uniformizer_count(), "18954"),
        check(
            "ex4",
            "derive-g for eps = 1 + Y over Z/9",
            poly_text::print(&z9, g1.poly()),
            "Y^2 + 3*Y - 3",
        ),
        check(
            "ex4",
            "derive-g for eps = 1 + Y over GR(9, 3) has the same integer coefficients",
            yes_no(g3.poly() == &g3_expected),
            "yes",
        ),
        check(
            "ex4",
            "Eisenstein factor of Y^4 + Y^3 + Y^2 - 3 over Z/9",
            poly_text::print(&z9, &g),
            "Y^2 + 3*Y - 3",
        ),
        check(
            "ex4",
            "cofactor of that split",
            poly_text::print(&z9, &cofactor),
            "Y^2 - 2*Y + 1",
        ),
        check("ex4", "order of the Teichmuller unit group H0", ring.info().h0_order, "26"),
        check("ex4", "isomorphism classes in type (4, 2, 3, 3)", report.classes.len(), "2"),
        check(
            "ex4",
            "relative automorphisms per class",
            format!("{auts:?}"),
            "[Some(54), Some(54)]",
        ),
    ])
}

/// Type (3, 2, 3, 3): same orbits as (4, 2, 3, 3), Delta survives the quotient.
fn ex5(jobs: usize) -> chainring::Result<Vec<Check>> {
    let budget = Budget::default();
    let ctx4 = ActionContext::new(4, 2, 3, 3)?;
    let ctx3 = ActionContext::new(3, 2, 3, 3)?;
    let orbits4 = ctx4.all_orbits(&budget, jobs)?;
    let orbits3 = ctx3.all_orbits(&budget, jobs)?;

    let r4 = ring_from(&ctx4, &[-3, 3, 1]);
    let r3q = r4.quotient(3)?;
    let r3 = ring_from(&ctx3, &[-3, 3, 1]);
    let d4 = delta(&ctx4, &r4, &orbits4, &budget, jobs)?;
    let d3q = delta(&ctx3, &r3q, &orbits3, &budget, jobs)?;
    let d3 = delta(&ctx3, &r3, &orbits3, &budget, jobs)?;

    Ok(vec![
        check(
            "ex5",
            "orbit sizes of nabla in type (3, 2, 3, 3)",
            format!("{:?}", sorted_sizes(&orbits3)),
            "[351, 351]",
        ),
        check(
            "ex5",
            "the (3, 2, 3, 3) orbits coincide with the (4, 2, 3, 3) orbits",
            yes_no(orbits3 == orbits4),
            "yes",
        ),
        check("ex5", "uniformizer count |U|", r3.uniformizer_count(), "702"),
        check(
            "ex5",
            "type of the quotient at i = 3 of the (4, 2, 3, 3) ring",
            format!(
                "({}, {}, {}, {})",
                r3q.params().a,
                r3q.params().e,
                r3q.params().f,
                r3q.params().p
            ),
            "(3, 2, 3, 3)",
        ),
        check(
            "ex5",
            "Delta of that quotient equals Delta of the directly built ring",
            yes_no(d3q.members == d3.members),
            "yes",
        ),
        check(
            "ex5",
            "and equals Delta computed upstairs in type (4, 2, 3, 3)",
            yes_no(d3q.members == d4.members),
            "yes",
        ),
        check("ex5", "|Delta|", d3.members.len(), "351"),
        check(
            "ex5",
            "isomorphism classes in type (3, 2, 3, 3)",
            classify(3, 2, 3, 3, &budget, jobs)?.classes.len(),
            "2",
        ),
    ])
}

/// Type (5, 2, 2, 2): a Delta spanning several orbits, seven classes.
fn ex6(jobs: usize) -> chainring::Result<Vec<Check>> {
    let budget = Budget::default();
    let ctx = ActionContext::new(5, 2, 2, 2)?;
    let orbits = ctx.all_orbits(&budget, jobs)?;
    let ring = ring_from(&ctx, &[-2, 4, 1]);
    let d = delta(&ctx, &ring, &orbits, &budget, jobs)?;
    let delta_orbit_sizes: Vec<usize> = d.orbit_ids.iter().map(|&i| orbits[i].len()).collect();
    Ok(vec![
        check("ex6", "|nabla| in type (5, 2, 2, 2)", ctx.nabla_size(), "192"),
        check("ex6", "orbit count", orbits.len(), "10"),
        check(
            "ex6",
            "orbit sizes",
            format!("{:?}", sorted_sizes(&orbits)),
            "[12, 12, 12, 12, 24, 24, 24, 24, 24, 24]",
        ),
        check("ex6", "order of the ring Z[Y]/(8, Y^2 + 4*Y - 2)", ring.size(), "1024"),
        check("ex6", "characteristic", ring.galois().characteristic(), "8"),
        check("ex6", "|Delta| of that ring", d.members.len(), "48"),
        check(
            "ex6",
            "Delta spans four orbits of size 12",
            format!("{delta_orbit_sizes:?}"),
            "[12, 12, 12, 12]",
        ),
        check(
            "ex6",
            "isomorphism classes in type (5, 2, 2, 2)",
            classify(5, 2, 2, 2, &budget, jobs)?.classes.len(),
            "7",
        ),
    ])
}

/// Type (4, 3, 2, 3): Delta = nabla, one class; its neatification has 17.
fn ex7(jobs: usize) -> chainring::Result<Vec<Check>> {
    let budget = Budget::default();
    let ctx = ActionContext::new(4, 3, 2, 3)?;
    let orbits = ctx.all_orbits(&budget, jobs)?;
    let g = eis(&ctx, &[6, 3, 6, 1]);
    let ring = ChainRing::with_params(ctx.params(), Some(g))?;
    let d = delta(&ctx, &ring, &orbits, &budget, jobs)?;
    let neat = ring.neatification()?;

    let mut checks = vec![
        check("ex7", "orbit count of nabla in type (4, 3, 2, 3)", orbits.len(), "17"),
        check(
            "ex7",
            "orbit sizes",
            format!("{:?}", sorted_sizes(&orbits)),
            "[8, 8, 8, 8, 8, 8, 8, 8, 8, 72, 72, 72, 72, 72, 72, 72, 72]",
        ),
        check(
            "ex7",
            "Delta of the ring presented by Y^3 + 6*Y^2 + 3*Y + 6 covers nabla",
            format!("{} of {}", d.members.len(), ctx.nabla_size()),
            "648 of 648",
        ),
        check(
            "ex7",
            "isomorphism classes in type (4, 3, 2, 3)",
            classify(4, 3, 2, 3, &budget, jobs)?.classes.len(),
            "1",
        ),
        check(
            "ex7",
            "type of the neatification",
            format!(
                "({}, {}, {}, {})",
                neat.params().a,
                neat.params().e,
                neat.params().f,
                neat.params().p
            ),
            "(6, 3, 2, 3)",
        ),
    ];
    checks.push(check(
        "ex7",
        "isomorphism classes in type (6, 3, 2, 3)",
        classify(6, 3, 2, 3, &budget, jobs)?.classes.len(),
        "17",
    ));
    Ok(checks)
}

/// Substitution-group orders.
fn sec6(_jobs: usize) -> chainring::Result<Vec<Check>> {
    Ok(vec![
        check(
            "sec6",
            "order of the substitution group for (3, 2, 2, 2)",
            ActionContext::new(3, 2, 2, 2)?.t_group_order(),
            "3072",
        ),
        check(
            "sec6",
            "order of the substitution group for (6, 2, 1, 2)",
            ActionContext::new(6, 2, 1, 2)?.t_group_order(),
            "131072",
        ),
    ])
}

/// Run the blocks (all, or just the one named by `only`); print one line per
/// check and a summary.  Returns whether everything passed.
pub fn run(only: Option<&str>, jobs: usize) -> chainring::Result<bool> {
    type Block = fn(usize) -> chainring::Result<Vec<Check>>;
    let blocks: &[(&str, Block)] = &[
        ("ex2", ex2),
        ("ex3", ex3),
        ("ex4", ex4),
        ("ex5", ex5),
        ("ex6", ex6),
        ("ex7", ex7),
        ("sec6", sec6),
    ];
    if let Some(tag) = only {
        if !blocks.iter().any(|(t, _)| *t == tag) {
            return Err(chainring::Error::BadParameters(format!(
                "unknown tag {tag:?}; expected one of ex2, ex3, ex4, ex5, ex6, ex7, sec6"
            )));
        }
    }
    let mut passed = 0usize;
    let mut failed = 0usize;
    for (tag, block) in blocks {
        if only.is_some_and(|o| o != *tag) {
            continue;
        }
        for c in block(jobs)? {
            let verdict = if c.passed() {
                passed += 1;
                "pass"
            } else {
                failed += 1;
                "FAIL"
            };
            println!(
                "{verdict}  [{}] {}: computed {}, expected {}",
                c.tag, c.claim, c.computed, c.expected
            );
        }
    }
    println!();
    println!("{} checks: {passed} passed, {failed} failed", passed + failed);
    Ok(failed == 0)
}
