//! Scripted REPL session: fold gates one at a time, undo, then finish.

use stabnf::cli::Repl;

fn main() {
    let mut repl = Repl::new(2);
    println!("{}", repl.banner());
    for line in ["H 0", "P 0", "CX 1 0", "undo", "CZ 0 1", "H 1", "finish"] {
        println!("> {line}");
        println!("{}", repl.handle(line).text);
    }
}
