use std::f64::consts::PI;

use crate::matlib::C64;

use super::gate::{Circuit, Gate};
use super::su2::{Axis, Su2};

/// Components below this are treated as zero when lowering a fused SU(2) product.
const LOWER_TOL: f64 = 1e-14;
/// A lowering is accepted only if it rebuilds the product to this accuracy.
const REBUILD_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PeepholeStats {
    pub cnots_removed: usize,
    pub fusions: usize,
    pub dropped: usize,
    pub rounds: usize,
}

/// Local simplification: CNOT cancellation (through commuting gates), single-qubit
/// fusion along a wire, and lowering of fused products to the cheapest rotation form.
///
/// The recorded phase is kept exact, so evaluate() is unchanged, not just up to phase.
pub fn peephole(c: &Circuit) -> Circuit {
    peephole_with_stats(c).0
}

pub fn peephole_with_stats(c: &Circuit) -> (Circuit, PeepholeStats) {
    let mut out = c.clone();
    let mut stats = PeepholeStats::default();
    loop {
        stats.rounds += 1;
        let before = stats;
        lower_all(&mut out, &mut stats);
        cancel_cnots(&mut out, &mut stats);
        fuse_single(&mut out, &mut stats);
        if stats.cnots_removed == before.cnots_removed
            && stats.fusions == before.fusions
            && stats.dropped == before.dropped
        {
            return (out, stats);
        }
    }
}

/// Whether single-qubit `s` on qubit `q` commutes with gate `g`.
fn commutes_single(s: &Su2, q: usize, g: &Gate) -> bool {
    match *g {
        Gate::Cnot { control, target } => {
            if q == control {
                s.is_z_type(0.0)
            } else if q == target {
                s.is_x_type(0.0)
            } else {
                true
            }
        }
        _ => !g.qubits().contains(&q),
    }
}

fn commutes_cnot(c: usize, t: usize, g: &Gate) -> bool {
    match *g {
        Gate::Cnot { control, target } => {
            let shares_only_control = control == c && target != t && target != c;
            let shares_only_target = target == t && control != c && control != t;
            let disjoint = control != c && control != t && target != c && target != t;
            shares_only_control || shares_only_target || disjoint
        }
        _ => {
            let q = g.qubits()[0];
            let s = g.su2().expect("single-qubit gate");
            commutes_single(&s, q, &Gate::cx(c, t))
        }
    }
}

fn cancel_cnots(c: &mut Circuit, stats: &mut PeepholeStats) {
    let mut i = 0;
    while i < c.gates.len() {
        if let Gate::Cnot { control, target } = c.gates[i] {
            let mut partner = None;
            for j in i + 1..c.gates.len() {
                if c.gates[j] == c.gates[i] {
                    partner = Some(j);
                    break;
                }
                if !commutes_cnot(control, target, &c.gates[j]) {
                    break;
                }
            }
            if let Some(j) = partner {
                c.gates.remove(j);
                c.gates.remove(i);
                stats.cnots_removed += 2;
                continue;
            }
        }
        i += 1;
    }
}

fn single_of(g: &Gate) -> Option<(usize, Su2)> {
    g.su2().map(|s| (g.qubits()[0], s))
}

fn fuse_single(c: &mut Circuit, stats: &mut PeepholeStats) {
    let mut i = 0;
    while i < c.gates.len() {
        let Some((q, si)) = single_of(&c.gates[i]) else {
            i += 1;
            continue;
        };
        // next single-qubit gate on q, and the gates on q in between
        let mut between: Vec<Gate> = Vec::new();
        let mut partner = None;
        for j in i + 1..c.gates.len() {
            let g = c.gates[j];
            if !g.qubits().contains(&q) {
                continue;
            }
            if let Some((_, sj)) = single_of(&g) {
                partner = Some((j, sj));
                break;
            }
            between.push(g);
        }
        let Some((j, sj)) = partner else {
            i += 1;
            continue;
        };
        let forward = between.iter().all(|g| commutes_single(&si, q, g));
        let backward = between.iter().all(|g| commutes_single(&sj, q, g));
        if !forward && !backward {
            i += 1;
            continue;
        }
        let (gi, gj) = (c.gates[i], c.gates[j]);
        let (lowered, sign) = match (gi, gj) {
            (
                Gate::AxisRotation { axis: a, theta: t1, .. },
                Gate::AxisRotation { axis: b, theta: t2, .. },
            ) if a == b => lower_axis(a, q, t1 + t2),
            _ => lower(q, sj * si),
        };
        let old_cost = gi.rotation_count() + gj.rotation_count();
        let new_cost: usize = lowered.iter().map(Gate::rotation_count).sum();
        if new_cost > old_cost || (new_cost == old_cost && lowered.len() >= 2) {
            i += 1;
            continue;
        }
        c.phase *= sign;
        stats.fusions += 1;
        if forward {
            c.gates.splice(j..=j, lowered);
            c.gates.remove(i);
        } else {
            c.gates.remove(j);
            c.gates.splice(i..=i, lowered);
        }
    }
}

/// Replaces each single-qubit gate by its cheapest exact form when that is cheaper.
fn lower_all(c: &mut Circuit, stats: &mut PeepholeStats) {
    let mut out = Vec::with_capacity(c.gates.len());
    for g in c.gates.drain(..) {
        let Some((q, s)) = single_of(&g) else {
            out.push(g);
            continue;
        };
        let (lowered, sign) = match g {
            Gate::AxisRotation { axis, theta, .. } => lower_axis(axis, q, theta),
            _ => lower(q, s),
        };
        let cost: usize = lowered.iter().map(Gate::rotation_count).sum();
        if cost < g.rotation_count() || lowered.is_empty() {
            if lowered.is_empty() {
                stats.dropped += 1;
            } else {
                stats.fusions += 1;
            }
            c.phase *= sign;
            out.extend(lowered);
        } else {
            out.push(g);
        }
    }
    c.gates = out;
}

/// R_a(θ) with θ reduced mod 4π; dropped (with its sign moved to the phase) when ±I.
fn lower_axis(axis: Axis, q: usize, theta: f64) -> (Vec<Gate>, C64) {
    let four_pi = 4.0 * PI;
    let mut t = theta % four_pi;
    if t > 2.0 * PI {
        t -= four_pi;
    } else if t <= -2.0 * PI {
        t += four_pi;
    }
    if t.abs() <= LOWER_TOL {
        return (vec![], C64::new(1.0, 0.0));
    }
    if (t.abs() - 2.0 * PI).abs() <= LOWER_TOL {
        return (vec![], C64::new(-1.0, 0.0));
    }
    (vec![Gate::AxisRotation { axis, qubit: q, theta: t }], C64::new(1.0, 0.0))
}

/// Cheapest exact gate list for U (application order) plus the sign moved to the phase.
fn lower(q: usize, u: Su2) -> (Vec<Gate>, C64) {
    let one = C64::new(1.0, 0.0);
    if let Some(sign) = u.as_scalar(LOWER_TOL) {
        if u.distance(&Su2([sign, 0.0, 0.0, 0.0])) <= REBUILD_TOL {
            return (vec![], C64::new(sign, 0.0));
        }
    }
    if let Some((axis, theta)) = u.as_axis_rotation(LOWER_TOL) {
        if Su2::rotation(axis, theta).distance(&u) <= REBUILD_TOL {
            return (vec![Gate::AxisRotation { axis, qubit: q, theta }], one);
        }
    }
    if let Some((a, t1, b, t2)) = two_axis_form(&u) {
        // matrix order R_a(t1) R_b(t2): R_b applied first
        return (
            vec![
                Gate::AxisRotation { axis: b, qubit: q, theta: t2 },
                Gate::AxisRotation { axis: a, qubit: q, theta: t1 },
            ],
            one,
        );
    }
    (vec![Gate::SingleQubit { qubit: q, matrix: u }], one)
}

/// U = R_a(θ1) R_b(θ2) for some ordered pair of distinct axes, if one exists.
///
/// With c_k, s_k the half-angle cosines and sines: a0 = c1c2, u_a = s1c2, u_b = c1s2 and
/// u_c = ε_abc s1s2, so a0·u_c = ε_abc u_a u_b characterizes the form.
pub(crate) fn two_axis_form(u: &Su2) -> Option<(Axis, f64, Axis, f64)> {
    let v = u.0;
    for a in Axis::ALL {
        for b in Axis::ALL {
            if a == b {
                continue;
            }
            let c = Axis::from_index(3 - a.index() - b.index());
            let eps = levi_civita(a, b, c);
            let (ua, ub, uc) = (v[a.index() + 1], v[b.index() + 1], v[c.index() + 1]);
            if (v[0] * uc - eps * ua * ub).abs() > LOWER_TOL {
                continue;
            }
            // (c1, s1) is parallel to both (a0, u_a) and (u_b, ε u_c)
            let (x, y) = if v[0].hypot(ua) >= ub.hypot(uc) { (v[0], ua) } else { (ub, eps * uc) };
            let t1 = 2.0 * y.atan2(x);
            let rest = Su2::rotation(a, t1).adjoint() * *u;
            let Some((axis, t2)) = rest.as_axis_rotation(1e-12).or_else(|| {
                rest.as_scalar(1e-12).map(|s| (b, if s > 0.0 { 0.0 } else { 2.0 * PI }))
            }) else {
                continue;
            };
            if axis != b {
                continue;
            }
            if (Su2::rotation(a, t1) * Su2::rotation(b, t2)).distance(u) <= REBUILD_TOL {
                return Some((a, t1, b, t2));
            }
        }
    }
    None
}

fn levi_civita(a: Axis, b: Axis, c: Axis) -> f64 {
    let (i, j, k) = (a.index(), b.index(), c.index());
    if (i + 1) % 3 == j && (j + 1) % 3 == k {
        1.0
    } else {
        -1.0
    }
}
