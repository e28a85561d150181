//! Prints the axiom report of every bundled model.

use relindex::absmodel::{bundled_models, check_axioms, Axiom};

fn main() {
    for b in bundled_models() {
        let r = check_axioms(&b.model);
        let flags: Vec<String> = Axiom::ALL
            .iter()
            .map(|&a| {
                let o = r.get(a);
                format!("{a:?}={}{}", o.holds, o.counterexample.as_ref().map(|c| format!("{c:?}")).unwrap_or_default())
            })
            .collect();
        println!("{:<22} {}", b.name, flags.join(" "));
    }
}
