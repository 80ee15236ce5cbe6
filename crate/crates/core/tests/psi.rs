use constacyclic::{AmbientElem, AmbientRing, Params, Poly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ring(m: u32, n: usize, delta: u32, alpha: u32) -> AmbientRing {
    AmbientRing::new(&Params::with_degree(m, n, 2, 2, delta, alpha).unwrap())
}

#[test]
fn psi_homomorphism_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in [1, 3] {
        let r = ring(1, n, 1, 1);
        for _ in 0..1000 {
            let a = r.random_elem(&mut rng);
            let b = r.random_elem(&mut rng);
            let (pa, pb) = (r.psi_lift(&a), r.psi_lift(&b));
            assert_eq!(r.psi_lift(&r.add(&a, &b)), r.radd(&pa, &pb));
            assert_eq!(r.psi_lift(&r.mul(&a, &b)), r.rmul(&pa, &pb));
        }
    }
}

#[test]
fn psi_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (m, n, delta, alpha) in [(1, 1, 1, 1), (1, 3, 1, 1), (2, 5, 2, 3), (4, 3, 9, 11)] {
        let r = ring(m, n, delta, alpha);
        for _ in 0..1000 {
            let a = r.random_elem(&mut rng);
            assert_eq!(r.psi_inverse(&r.psi_lift(&a)), a);
            let c = r.random_rpoly(&mut rng);
            assert_eq!(r.psi_lift(&r.psi_inverse(&c)), c);
        }
        assert_eq!(r.psi_inverse(&r.rzero()), AmbientElem::default());
    }
}

/// Ψ((x^n + δ0)^{i + l·2^k}) = α^l u^{2l} (x^n + δ0)^i.
fn check_power_identity(r: &AmbientRing, i: usize, l: usize, shift: usize) {
    let p = r.params();
    let f = p.field();
    let base = p.base_poly();
    let lhs = r.psi_lift(&r.elem(&base.pow(i + l * shift, f), &Poly::zero()));
    let rest = r.psi_lift(&r.elem(&base.pow(i, f), &Poly::zero()));
    let scale = f.pow(p.alpha(), l as u64);
    let mut ul = r.rone();
    for _ in 0..2 * l {
        ul = r.mul_u(&ul);
    }
    let rhs = r.rscale(&r.rmul(&ul, &rest), scale);
    assert_eq!(lhs, rhs, "i = {i}, l = {l}");
}

#[test]
fn power_identity_n1() {
    // with n = 1 the shift l·2^k·n is l·2^k
    for (m, delta, alpha) in [(1, 1, 1), (2, 3, 2), (3, 6, 5)] {
        let r = ring(m, 1, delta, alpha);
        for i in 0..4 {
            for l in 0..2 {
                check_power_identity(&r, i, l, 4);
            }
        }
    }
}

#[test]
fn power_identity_general_n() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (m, n) in [(1, 3), (2, 3), (1, 5)] {
        let r = ring(m, n, 1, 1);
        for _ in 0..20 {
            let i = rng.gen_range(0..4 * n);
            let l = rng.gen_range(0..2);
            check_power_identity(&r, i, l, 4);
        }
    }
}

#[test]
fn lifted_u_square_is_alpha_inverse_times_base_power() {
    let r = ring(2, 3, 2, 3);
    let p = r.params();
    let u2 = r.rpoly_from_u_parts(&[(2, Poly::one())]).unwrap();
    let expected = p.base_poly().pow(4, p.field()).scale(p.alpha_inv(), p.field());
    assert_eq!(r.psi_inverse(&u2).xi0, expected);
    assert!(r.psi_inverse(&u2).xi1.is_zero());
}
