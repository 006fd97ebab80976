mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stabnf::synth::{self, a_to_x, SynthMethod};
use stabnf::BitMat;

proptest! {
    #[test]
    fn words_multiply_back(a in invertible(40)) {
        for m in [SynthMethod::Pmh, SynthMethod::Gauss] {
            let w = a_to_x(&a, m).unwrap();
            prop_assert_eq!(BitMat::from_word(a.n(), &w).unwrap(), a.clone());
        }
    }

    #[test]
    fn every_section_width_works(a in invertible(20), m in 1usize..6) {
        let w = synth::pmh(&a, m).unwrap();
        prop_assert_eq!(BitMat::from_word(a.n(), &w).unwrap(), a);
    }

    #[test]
    fn optimal_is_minimal_and_correct(a in invertible(4)) {
        let opt = a_to_x(&a, SynthMethod::Optimal).unwrap();
        prop_assert_eq!(BitMat::from_word(a.n(), &opt).unwrap(), a.clone());
        prop_assert!(opt.len() <= a_to_x(&a, SynthMethod::Pmh).unwrap().len());
        prop_assert!(opt.len() <= a_to_x(&a, SynthMethod::Gauss).unwrap().len());
    }
}

#[test]
fn pmh_beats_gauss_on_large_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [16, 32, 64] {
        for _ in 0..20 {
            let a = random_invertible(n, &mut rng);
            let p = a_to_x(&a, SynthMethod::Pmh).unwrap().len();
            let g = a_to_x(&a, SynthMethod::Gauss).unwrap().len();
            assert!(p <= g, "n={n}: pmh {p} > gauss {g}");
        }
    }
}

#[test]
fn gauss_uses_at_most_n_squared() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in [5, 17, 33] {
        let a = random_invertible(n, &mut rng);
        assert!(a_to_x(&a, SynthMethod::Gauss).unwrap().len() <= n * n);
    }
}

#[test]
fn optimal_refuses_large_inputs() {
    assert!(a_to_x(&BitMat::identity(6), SynthMethod::Optimal).is_err());
    assert!(a_to_x(&BitMat::identity(6), SynthMethod::Pmh).unwrap().is_empty());
}

#[test]
fn method_names_parse() {
    assert_eq!("PMH".parse::<SynthMethod>().unwrap(), SynthMethod::Pmh);
    assert_eq!("bfs".parse::<SynthMethod>().unwrap(), SynthMethod::Optimal);
    assert!("magic".parse::<SynthMethod>().is_err());
}
