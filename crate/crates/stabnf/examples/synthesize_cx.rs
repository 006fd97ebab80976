//! CNOT synthesis of an invertible matrix: PMH, Gauss-Jordan and exact BFS.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stabnf::synth::{a_to_x, SynthMethod};
use stabnf::{BitMat, Transvection};

fn random_invertible(n: usize, rng: &mut ChaCha8Rng) -> BitMat {
    use rand::Rng;
    let mut a = BitMat::identity(n);
    for _ in 0..4 * n * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i != j {
            a.transvect_left(Transvection { target: i, control: j }).unwrap();
        }
    }
    a
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let swap = BitMat::from_rows(&["01", "10"])?;
    let w = a_to_x(&swap, SynthMethod::Optimal)?;
    println!("swap = {}", w.iter().map(ToString::to_string).collect::<String>());

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [4, 16, 32, 64] {
        let a = random_invertible(n, &mut rng);
        let pmh = a_to_x(&a, SynthMethod::Pmh)?;
        let gauss = a_to_x(&a, SynthMethod::Gauss)?;
        assert_eq!(BitMat::from_word(n, &pmh)?, a);
        let opt = if n <= 4 { a_to_x(&a, SynthMethod::Optimal)?.len().to_string() } else { "-".into() };
        println!("n = {n:>2}: pmh {:>4}  gauss {:>4}  optimal {opt}", pmh.len(), gauss.len());
    }
    Ok(())
}
