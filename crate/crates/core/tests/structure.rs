use constacyclic::enumerate::{descriptor_generators, ideal_count, ideal_membership_check};
use constacyclic::{ChainCtx, Enumeration, Exec, FactorData, Params, Poly};
use num_bigint::BigUint;

const RUNS: [(u32, usize); 4] = [(1, 1), (1, 3), (2, 3), (1, 7)];

#[test]
fn idempotents_and_omega() {
    for (m, n) in RUNS {
        let p = Params::with_degree(m, n, 2, 2, 1, 1).unwrap();
        let data = FactorData::build(&p).unwrap();
        data.verify().unwrap();
        let f = p.field();
        let modulus = data.modulus();
        let mut sum = Poly::zero();
        for (i, a) in data.entries().iter().enumerate() {
            let eps = &a.idempotent;
            assert_eq!(eps.mulmod(eps, modulus, f).unwrap(), *eps);
            for b in &data.entries()[i + 1..] {
                assert!(eps.mulmod(&b.idempotent, modulus, f).unwrap().is_zero());
            }
            sum = sum.add(eps);
            let ctx = ChainCtx::for_factor(&p, a).unwrap();
            let lhs = ctx.mul(&ctx.mul(ctx.omega(), ctx.omega()), &ctx.f_pow(4));
            let rhs = ctx
                .reduce(&p.base_poly().pow(4, f).scale(p.alpha_inv(), f))
                .unwrap();
            assert_eq!(lhs, rhs);
        }
        assert!(sum.rem(modulus, f).unwrap().is_one());
    }
}

#[test]
fn descriptors_satisfy_closure_and_generator_bound() {
    for (m, n) in RUNS {
        let p = Params::with_degree(m, n, 2, 2, 1, 1).unwrap();
        let en = Enumeration::build(&p).unwrap();
        for (cat, ctx) in en.catalogs.iter().zip(&en.chains) {
            if cat.len() > &BigUint::from(1u32 << 16) {
                // spot check the larger factors
                for d in cat.iter().step_by(97) {
                    assert!(ideal_membership_check(&d, ctx));
                    assert!(descriptor_generators(&d, ctx).len() <= 2);
                }
                continue;
            }
            let forms = cat.verify(ctx, Exec::Parallel, 1 << 16).unwrap();
            assert_eq!(&BigUint::from(forms.len()), cat.len());
        }
    }
}

#[test]
fn counts_across_parameters() {
    let expect = [(1u32, 1usize, 135u64), (1, 3, 106_515), (2, 1, 789), (3, 1, 7353)];
    for (m, n, count) in expect {
        let p = Params::with_degree(m, n, 2, 2, 1, 1).unwrap();
        assert_eq!(Enumeration::build(&p).unwrap().count().unwrap(), BigUint::from(count));
    }
    for q in [2u32, 4, 8, 16] {
        for k in [2, 3] {
            for lambda in [2, 3] {
                ideal_count(&BigUint::from(q), k, lambda).unwrap();
            }
        }
    }
}

#[test]
fn factorization_is_seed_independent() {
    for (m, n) in RUNS {
        let p = Params::with_degree(m, n, 3, 2, 1, 1).unwrap();
        let a = FactorData::build_seeded(&p, 1).unwrap();
        let b = FactorData::build_seeded(&p, 99).unwrap();
        let fa: Vec<&Poly> = a.entries().iter().map(|e| &e.f).collect();
        let fb: Vec<&Poly> = b.entries().iter().map(|e| &e.f).collect();
        assert_eq!(fa, fb);
    }
}
