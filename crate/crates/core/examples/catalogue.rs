//! Named presets with their expected tangent dimensions.

use higher_tangent::generators::{catalogue, documentation_fixtures};
use higher_tangent::tangent::tangent_complex;

fn main() {
    for spec in catalogue() {
        let s = spec.build();
        let got = tangent_complex(&s).unwrap().trimmed();
        let mark = if got.dims() == spec.expected_tangent() { "ok" } else { "MISMATCH" };
        println!("{:<24} levels {:?} tangent {:?} [{mark}]", spec.name, s.dims(), got.dims());
    }
    for f in documentation_fixtures() {
        println!("{:<24} expected ({}) [documentation only]", f.name, f.expected_tangent.join(", "));
    }
}
