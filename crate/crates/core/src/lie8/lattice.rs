/// Membership in the root lattice ℤD₄: integer vectors with even coordinate sum.
pub fn root_lattice_membership(v: [i64; 4]) -> bool {
    v.iter().sum::<i64>().rem_euclid(2) == 0
}

/// Membership in the dual lattice: all coordinates integers, or all half-integers.
pub fn dual_lattice_membership(x: [f64; 4]) -> bool {
    let int = |t: f64| t.is_finite() && (t - t.round()).abs() < 1e-12;
    x.iter().all(|&t| int(t)) || x.iter().all(|&t| int(t - 0.5))
}
