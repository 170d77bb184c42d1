use buchi_core::curves::{curve_rhs, is_squarefree, squarefree_mod_p, CHECK_PRIMES};
use buchi_core::families::Side;

#[test]
fn squarefree_up_to_eighteen() {
    for n in 1..=18 {
        for side in [Side::Left, Side::Right] {
            let c = curve_rhs(n, side).unwrap();
            let start = std::time::Instant::now();
            assert!(is_squarefree(&c), "n={n} {side}");
            eprintln!("n={n} {side}: {:?}", start.elapsed());
            for p in CHECK_PRIMES {
                assert_eq!(squarefree_mod_p(&c.integer_coeffs(), p), Some(true));
            }
        }
    }
}
