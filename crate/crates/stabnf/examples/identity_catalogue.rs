//! Checks every Clifford identity used by the normal forms against the
//! dense oracle.

fn main() {
    let start = std::time::Instant::now();
    let mut failed = 0;
    for (name, res) in stabnf::identities::check_all() {
        match res {
            Ok(k) => println!("ok    {name} ({k} cases)"),
            Err(e) => {
                failed += 1;
                println!("FAIL  {name}: {e}");
            }
        }
    }
    println!("{failed} failures in {:.1?}", start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
