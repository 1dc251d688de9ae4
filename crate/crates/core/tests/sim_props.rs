use proptest::prelude::*;
use qutrit_teleport::sim::{haar_state_for_seed, run_batch, run_trial, EventKind, Simulator, StateMode};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trials_replay_and_respect_causality(channel in 0usize..9, seed in any::<u64>(), state_seed in any::<u64>()) {
        let phi = haar_state_for_seed(state_seed);
        let a = run_trial(channel, &phi, seed).unwrap();
        prop_assert_eq!(&a, &run_trial(channel, &phi, seed).unwrap());
        let kinds: Vec<_> = a.event_log.iter().map(|e| e.kind).collect();
        prop_assert_eq!(kinds, vec![
            EventKind::Prepare,
            EventKind::Entangle,
            EventKind::JointMeasure,
            EventKind::ClassicalSend,
            EventKind::Recover,
        ]);
        prop_assert!(a.outcome_probability > 0.0);
        prop_assert_eq!(usize::from(a.classical_message), a.outcome);
    }

    #[test]
    fn batches_are_deterministic(channel in 0usize..9, n in 1usize..200, seed in any::<u64>()) {
        let a = run_batch(channel, n, seed, StateMode::HaarRandom).unwrap();
        let b = run_batch(channel, n, seed, StateMode::HaarRandom).unwrap();
        prop_assert_eq!(&a, &b);
        let total: f64 = a.empirical_outcome_frequencies.iter().sum();
        prop_assert!((total - 1.0).abs() < 1e-12);
        if let Some(f) = a.mean_fidelity_invertible {
            prop_assert!((f - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn born_convergence_is_flagged_not_failed() {
    let s = Simulator::oracle().run_batch(3, 100_000, 17, StateMode::HaarRandom).unwrap().summary;
    let critical = s.chi_square_critical_999.unwrap();
    eprintln!("chi-square {:.3} against 0.999 quantile {:.3} (dof {})", s.chi_square_vs_born, critical, s.chi_square_dof);
    assert_eq!(s.chi_square_exceeds_critical, s.chi_square_vs_born > critical);
}

#[test]
fn haar_mean_fidelity_on_invertible_outcomes() {
    let s = run_batch(0, 10_000, 5, StateMode::HaarRandom).unwrap();
    assert!((s.mean_fidelity_invertible.unwrap() - 1.0).abs() < 1e-12);
}
