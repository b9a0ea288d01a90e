//! Which characteristics admit the supersingular branch, by the order of p mod n.

use isocert::certifier::{supersingular_constraint, CHAR_P_BOUND};
use isocert::exact::is_prime_u64;

fn main() -> isocert::Result<()> {
    for n in [3u64, 5, 7, 11] {
        println!("n = {n}");
        for p in (3..CHAR_P_BOUND).filter(|&p| is_prime_u64(p)) {
            let (order, allowed) = supersingular_constraint(n, p)?;
            let order = order.map_or("-".to_string(), |o| o.to_string());
            println!("  p = {p:>2}  order {order:>2}  allowed {allowed}");
        }
    }
    Ok(())
}
