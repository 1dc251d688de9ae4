use num_complex::Complex64;
use proptest::prelude::*;
use qutrit_teleport::analysis::{
    completeness, fidelity_after_recovery, outcome_probability, profile_gate, GateClass,
};
use qutrit_teleport::engine::oracle_gates;
use qutrit_teleport::sim::haar_state;
use qutrit_teleport::ExtScalar;
use rand_core::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;

#[test]
fn no_gate_is_unitary() {
    for g in oracle_gates() {
        let p = profile_gate(&g);
        assert!(!p.unitarity_deviation_sq.is_zero());
        assert!(!g.gram().is_identity());
        assert!(p.frobenius_norm_sq.to_f64() < 3.0);
    }
}

#[test]
fn completeness_is_exact_for_every_channel() {
    for i in 0..9 {
        assert!(completeness(i).unwrap().is_identity);
    }
}

#[test]
fn profile_is_scale_covariant() {
    for s in [ExtScalar::integer(2), ExtScalar::ratio(1, 3)] {
        let s2 = s.square();
        for g in oracle_gates() {
            let base = profile_gate(&g);
            let scaled = profile_gate(&g.scaled(&s));
            assert_eq!(scaled.frobenius_norm_sq, &base.frobenius_norm_sq * &s2);
            assert_eq!(scaled.rank, base.rank);
            assert_eq!(scaled.classification, base.classification);
            assert_eq!(
                scaled.scaled_unitarity_deviation_sq,
                &base.scaled_unitarity_deviation_sq * &s2.square()
            );
        }
    }
}

#[test]
fn recovery_restores_random_states() {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(2024);
    let invertible: Vec<_> = oracle_gates()
        .into_iter()
        .filter(|g| profile_gate(g).classification != GateClass::Singular)
        .collect();
    assert_eq!(invertible.len(), 4);
    for g in invertible {
        let (i, k) = (g.channel.unwrap(), g.outcome.unwrap());
        for _ in 0..1000 {
            let phi = haar_state(&mut rng);
            let f = fidelity_after_recovery(i, k, &phi).unwrap().recovered().unwrap();
            assert!((f - 1.0).abs() < 1e-12, "({i},{k}) fidelity {f}");
        }
    }
}

fn state() -> impl Strategy<Value = [Complex64; 3]> {
    any::<u64>().prop_map(|seed| haar_state(&mut Xoshiro256PlusPlus::seed_from_u64(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn probabilities_sum_to_one(phi in state(), channel in 0usize..9) {
        let total: f64 = (0..9).map(|k| outcome_probability(channel, k, &phi).unwrap()).sum();
        prop_assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn probabilities_are_in_unit_interval(phi in state(), channel in 0usize..9, k in 0usize..9) {
        let p = outcome_probability(channel, k, &phi).unwrap();
        prop_assert!((0.0..=1.0 + 1e-12).contains(&p));
    }
}
