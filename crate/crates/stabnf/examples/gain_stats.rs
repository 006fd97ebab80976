//! Mean two-qubit gain of the graph-state reduction over random graphs.
//! Pass `--full` for 200 samples per cell and n up to 50.

use stabnf::graphstate::{gain_stats, max_edges, GainStats};
use stabnf::synth::SynthMethod;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let full = std::env::args().any(|a| a == "--full");
    let (ns, samples): (&[usize], usize) = if full { (&[5, 10, 20, 50], 200) } else { (&[5, 10, 20], 40) };
    println!("{}", GainStats::CSV_HEADER);
    for &n in ns {
        for density in [0.2, 0.6, 1.0] {
            let edges = (density * max_edges(n) as f64).round() as usize;
            let s = gain_stats(n, edges, samples, 1, SynthMethod::Pmh)?;
            println!("{}", s.csv_row());
        }
    }
    Ok(())
}
