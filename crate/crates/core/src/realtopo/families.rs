//! Product quartics whose sign regions change with the relative position of
//! their factors.

use crate::polyarith::{rat, ratio, Polynomial, Rational, Ring, VarSet};

#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub label: String,
    pub form: Polynomial,
}

fn xyz() -> (Ring, Polynomial, Polynomial, Polynomial) {
    let ring = VarSet::unit(&["x", "y", "z"]).expect("valid ring");
    let v = |i| Polynomial::var(&ring, i);
    let (x, y, z) = (v(0), v(1), v(2));
    (ring, x, y, z)
}

/// The cubic `y^2 z = x^3 - x z^2` (an oval and an unbounded branch) times
/// the horizontal line `y = t z`.
pub fn line_cubic(t: &Rational) -> FamilyMember {
    let (_, x, y, z) = xyz();
    let z2 = &z * &z;
    let cubic = &(&(&y * &y) * &z) - &(&(&(&x * &x) * &x) - &(&x * &z2));
    let line = &y - &z.scale(t);
    FamilyMember {
        label: format!("t = {t}"),
        form: &cubic * &line,
    }
}

/// `(x^2 + y^2 - z^2)((x - a z)^2 + y^2 - r^2 z^2)`: the unit circle and a
/// circle of radius `r` centred at `(a, 0)`.
pub fn two_circles(a: &Rational, r: &Rational) -> Polynomial {
    let (_, x, y, z) = xyz();
    let z2 = &z * &z;
    let c1 = &(&(&x * &x) + &(&y * &y)) - &z2;
    let u = &x - &z.scale(a);
    let c2 = &(&(&u * &u) + &(&y * &y)) - &z2.scale(&(r * r));
    &c1 * &c2
}

/// One product per relative position of two circles: nested, internally
/// tangent, crossing, externally tangent, disjoint.
pub fn two_conics() -> Vec<FamilyMember> {
    let cases = [
        ("nested", ratio(1, 4), ratio(1, 2)),
        ("internally tangent", ratio(1, 2), ratio(1, 2)),
        ("crossing", rat(1), rat(1)),
        ("externally tangent", rat(2), rat(1)),
        ("disjoint", rat(3), rat(1)),
    ];
    cases
        .into_iter()
        .map(|(label, a, r)| FamilyMember {
            label: format!("{label} (a = {a}, r = {r})"),
            form: two_circles(&a, &r),
        })
        .collect()
}
