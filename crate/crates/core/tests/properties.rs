use proptest::prelude::*;

use triality_synth::circuit::{emit_text, evaluate, parse_text, peephole, Circuit, Gate, Su2};
use triality_synth::lie8::{triality_group, triality_inverse, PauliWord};
use triality_synth::matlib::{
    cs_decompose, kron_factor, projective_distance, random_special_orthogonal, random_su2, rng_from_seed, RealMatrix,
};
use triality_synth::synth::{synthesize, verify};

fn arb_gate() -> impl Strategy<Value = Gate> {
    prop_oneof![
        (1usize..=3, 0usize..2).prop_map(|(c, k)| {
            let t = [1, 2, 3].into_iter().filter(|&q| q != c).nth(k).unwrap();
            Gate::cx(c, t)
        }),
        (1usize..=3, -7.0f64..7.0).prop_map(|(q, t)| Gate::rx(q, t)),
        (1usize..=3, -7.0f64..7.0).prop_map(|(q, t)| Gate::ry(q, t)),
        (1usize..=3, -7.0f64..7.0).prop_map(|(q, t)| Gate::rz(q, t)),
        (1usize..=3, any::<u64>()).prop_map(|(q, s)| {
            Gate::u(q, Su2::from_matrix(&random_su2(&mut rng_from_seed(s)), 1e-12).unwrap())
        }),
    ]
}

fn arb_circuit() -> impl Strategy<Value = Circuit> {
    prop::collection::vec(arb_gate(), 0..24).prop_map(|g| Circuit::from_gates(3, g))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn synthesized_circuits_meet_bounds(seed in any::<u64>()) {
        let v = random_special_orthogonal(8, seed);
        let s = synthesize(&v).unwrap();
        let r = verify(&v, &s.circuit).unwrap();
        prop_assert!(r.error <= 1e-8);
        prop_assert!(r.imag_residue <= 1e-10);
        prop_assert!(r.cnots <= 14 && r.rotations <= 35);
        prop_assert_eq!(s.tree.census.parameter_count(), 28);
        prop_assert!(projective_distance(&s.tree.product(), &v).unwrap() < 1e-8);
    }

    #[test]
    fn peephole_preserves_unitary(c in arb_circuit()) {
        let p = peephole(&c);
        let d = evaluate(&p).unwrap().sub(&evaluate(&c).unwrap()).frobenius_norm();
        prop_assert!(d < 1e-9, "drift {d}");
        prop_assert!(p.cnot_count() <= c.cnot_count());
        prop_assert!(p.rotation_count() <= c.rotation_count());
    }

    #[test]
    fn text_round_trip(c in arb_circuit()) {
        let back = parse_text(&emit_text(&c)).unwrap();
        prop_assert_eq!(back.gates.len(), c.gates.len());
        let d = evaluate(&back).unwrap().sub(&evaluate(&c).unwrap()).frobenius_norm();
        prop_assert!(d < 1e-12);
    }

    #[test]
    fn kron_factor_recovers_product(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let a = random_su2(&mut rng).kron(&random_su2(&mut rng));
        let u = random_su2(&mut rng).kron(&a);
        let (x, y) = kron_factor(&u, 2, 4, 1e-9).unwrap();
        prop_assert!(x.kron(&y).sub(&u).frobenius_norm() < 1e-10);
    }

    #[test]
    fn cs_decomposition_reassembles(seed in any::<u64>(), n in 2usize..=8, p_frac in 0.0f64..1.0) {
        let p = 1 + ((n - 1) as f64 * p_frac) as usize;
        let v = random_special_orthogonal(n, seed);
        let cs = cs_decompose(&v, p).unwrap();
        prop_assert!((&cs.reassemble() - &v).max_abs() < 1e-10);
        for k in [&cs.k1, &cs.k2] {
            prop_assert!(k.block(0, p, p, n - p).max_abs() < 1e-10);
            prop_assert!(k.block(p, 0, n - p, p).max_abs() < 1e-10);
            prop_assert!(k.block(0, 0, p, p).det() > 0.0);
        }
    }

    #[test]
    fn triality_is_an_order_three_homomorphism(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (a, b) = (random_special_orthogonal(8, s1), random_special_orthogonal(8, s2));
        let ta = triality_group(&a).unwrap();
        let tab = triality_group(&(&a * &b)).unwrap();
        prop_assert!(projective_distance(&tab, &(&ta * &triality_group(&b).unwrap())).unwrap() < 1e-9);
        let t3 = triality_group(&triality_group(&ta).unwrap()).unwrap();
        prop_assert!(projective_distance(&t3, &a).unwrap() < 1e-9);
        prop_assert!(projective_distance(&triality_inverse(&ta).unwrap(), &a).unwrap() < 1e-9);
    }

    #[test]
    fn chi2_is_conjugation(seed in any::<u64>()) {
        let delta = RealMatrix::diagonal(&[1.0, 1.0, 1.0, 1.0, 1.0, -1.0, -1.0, 1.0]);
        let d = triality_inverse(&delta).unwrap();
        let xxy = "XXY".parse::<PauliWord>().unwrap().real_matrix().unwrap();
        prop_assert!(projective_distance(&d, &xxy).unwrap() < 1e-12);
        let v = random_special_orthogonal(8, seed);
        let lhs = triality_inverse(&(&(&delta * &triality_group(&v).unwrap()) * &delta)).unwrap();
        let rhs = &(&d * &v) * &d.transpose();
        prop_assert!(projective_distance(&lhs, &rhs).unwrap() < 1e-9);
    }
}
