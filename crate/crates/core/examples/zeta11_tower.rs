//! Adding conj(u) after u, with u = zeta_11 * 2^(1/11), leaves an
//! intermediate field that is not closed under conjugation.

use kronecker::cyclotomic::{example71_verify, naive_tower, undoubled_tower};
use kronecker::tower::{conjugate_closure, tower_double, tower_validate};

fn main() {
    println!("{}", example71_verify());
    let naive = naive_tower();
    println!("naive tower:\n{naive}{}", tower_validate(&naive));
    let doubled = tower_double(&undoubled_tower());
    println!("doubled tower:\n{doubled}");
    println!("closure of the naive tower: {:?}", conjugate_closure(&naive).failing_steps());
}
