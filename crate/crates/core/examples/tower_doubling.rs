//! Parse a tower, classify its steps, and double it so every field is
//! closed under complex conjugation.

use kronecker::tower::{tower_double, tower_validate, TowerDesc};

fn main() {
    let text = "base: Q\nroot(3, 2)\nzeta(3)*root(3, 2)\nroot(2, 1 + root(2, 2))\n";
    let tower = TowerDesc::parse(text).unwrap();
    println!("{}", tower_validate(&tower));
    let doubled = tower_double(&tower);
    print!("{doubled}");
    println!("\n{}", tower_validate(&doubled.tower));
}
