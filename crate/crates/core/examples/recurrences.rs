//! Checks the three-term recurrences linking X and Y of one degree.

use riesz::basis::recurrence_check;

fn main() {
    for n in 0..=6 {
        let outcomes = recurrence_check(n);
        let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed).collect();
        println!("degree {n}: {} relations, {} failed", outcomes.len(), failed.len());
        for o in failed {
            println!("  {o:?}");
        }
    }
}
