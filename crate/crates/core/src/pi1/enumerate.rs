//! Finite windows onto `π₁(X, A)` and the checks that run over them.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use super::{EdgePath, GraphComplex, GraphError, RelClass, Step, Vertex};

/// Reduced paths from `start` of length at most `max_len`, in lexicographic
/// step order. `keep` filters what is returned; `first_ok` restricts the
/// first step.
fn reduced_paths(
    g: &GraphComplex,
    start: Vertex,
    max_len: usize,
    first_ok: &dyn Fn(Step) -> bool,
    keep: &mut dyn FnMut(&[Step], Vertex),
) {
    fn go(
        g: &GraphComplex,
        at: Vertex,
        max_len: usize,
        steps: &mut Vec<Step>,
        first_ok: &dyn Fn(Step) -> bool,
        keep: &mut dyn FnMut(&[Step], Vertex),
    ) {
        keep(steps, at);
        if steps.len() == max_len {
            return;
        }
        for s in g.steps_from(at) {
            if steps.is_empty() && !first_ok(s) {
                continue;
            }
            if steps.last() == Some(&s.reversed()) {
                continue;
            }
            let (_, to) = g.ends(s).expect("step from adjacency");
            steps.push(s);
            go(g, to, max_len, steps, first_ok, keep);
            steps.pop();
        }
    }
    let mut steps = Vec::new();
    go(g, start, max_len, &mut steps, first_ok, keep);
}

/// All classes whose canonical representative has length at most `max_len`,
/// ordered by length and then lexicographically by step.
pub fn enumerate_classes(g: &GraphComplex, max_len: usize) -> Vec<RelClass> {
    let mut out = BTreeSet::new();
    out.insert((0, RelClass::identity()));
    for &a in g.base_vertices() {
        let first_ok = |s: Step| !g.in_base(s);
        reduced_paths(g, a, max_len, &first_ok, &mut |steps, end| {
            let canonical = steps.last().is_some_and(|&s| !g.in_base(s))
                && g.base_vertices().contains(&end);
            if canonical {
                out.insert((steps.len(), RelClass { steps: steps.to_vec() }));
            }
        });
    }
    out.into_iter().map(|(_, c)| c).collect()
}

/// Reduced loops at `x0` of length at most `max_len`.
pub fn loops_at(g: &GraphComplex, x0: Vertex, max_len: usize) -> Vec<EdgePath> {
    let mut out = Vec::new();
    reduced_paths(g, x0, max_len, &|_| true, &mut |steps, end| {
        if end == x0 {
            out.push(EdgePath { start: x0, steps: steps.to_vec() });
        }
    });
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoReport {
    pub loops: usize,
    pub classes: usize,
    pub injective: bool,
    pub multiplicative: bool,
    pub surjective: bool,
}

impl IsoReport {
    pub fn holds(&self) -> bool {
        self.injective && self.multiplicative && self.surjective
    }
}

/// Checks that `[loop at x0] ↦ class_of(loop)` behaves as an isomorphism
/// `π₁(X, x0) → π₁(X, A)` on the window of loops of length `<= max_len`.
///
/// Surjectivity is tested against `enumerate_classes(g, max_len)`, allowing
/// preimage loops of length up to `max_len + 2·diam(A)`.
pub fn basepoint_iso_report(
    g: &GraphComplex,
    x0: Vertex,
    max_len: usize,
) -> Result<IsoReport, GraphError> {
    if !g.base_vertices().contains(&x0) {
        return Err(GraphError::EndpointOutsideBase(x0));
    }
    if !g.validate() {
        return Err(GraphError::Invalid);
    }
    let loops = loops_at(g, x0, max_len);
    let classes: Vec<RelClass> = loops
        .iter()
        .map(|l| g.class_of(l).expect("loop at a base vertex"))
        .collect();

    // distinct reduced loops are distinct homotopy classes, so injectivity
    // means no two of them share a relative class
    let distinct: BTreeSet<&RelClass> = classes.iter().collect();
    let injective = distinct.len() == loops.len();

    let multiplicative = (0..loops.len()).into_par_iter().all(|i| {
        loops.iter().zip(&classes).all(|(l2, c2)| {
            let joined = g.concat(&loops[i], l2).expect("loops at x0");
            let lhs = g.class_of(&joined).expect("loop at x0");
            lhs == g.rel_product(&classes[i], c2)
        })
    });

    let window = enumerate_classes(g, max_len);
    let budget = max_len + 2 * g.base_diameter();
    let surjective = window.iter().all(|c| {
        let Some(rep) = g.representative(c) else {
            return true;
        };
        let lead = g.base_path(x0, rep.start()).expect("in A");
        let tail = g.base_path(g.end_of(&rep), x0).expect("in A");
        let lp = g.reduce(&g.concat(&g.concat(&lead, &rep).unwrap(), &tail).unwrap());
        lp.len() <= budget && g.class_of(&lp).as_ref() == Ok(c)
    });

    Ok(IsoReport {
        loops: loops.len(),
        classes: window.len(),
        injective,
        multiplicative,
        surjective,
    })
}

pub fn basepoint_iso_check(g: &GraphComplex, x0: Vertex, max_len: usize) -> bool {
    basepoint_iso_report(g, x0, max_len).is_ok_and(|r| r.holds())
}

/// For base vertices `x0`, `x1` joined by `γ` in `A`, conjugating a loop at
/// `x0` into the loop `γ^-1 · l · γ` at `x1` does not change its relative
/// class, and both basepoints give the same isomorphism verdict.
pub fn basepoint_independence_check(g: &GraphComplex, max_len: usize) -> bool {
    let base: Vec<Vertex> = g.base_vertices().iter().copied().collect();
    let verdicts: Vec<bool> = base.iter().map(|&x| basepoint_iso_check(g, x, max_len)).collect();
    if verdicts.windows(2).any(|w| w[0] != w[1]) {
        return false;
    }
    for &x0 in &base {
        for &x1 in &base {
            let gamma = g.base_path(x0, x1).expect("in A");
            for l in loops_at(g, x0, max_len) {
                let moved = g
                    .concat(&g.concat(&g.reverse(&gamma), &l).unwrap(), &gamma)
                    .unwrap();
                if g.class_of(&moved) != g.class_of(&l) {
                    return false;
                }
            }
        }
    }
    true
}

/// Identity, inverses and associativity on the window of classes of length
/// `<= max_len`; associativity is checked on all triples of classes of length
/// `<= assoc_len`.
pub fn group_axioms_check(g: &GraphComplex, max_len: usize, assoc_len: usize) -> bool {
    let window = enumerate_classes(g, max_len);
    let in_window: HashMap<&RelClass, ()> = window.iter().map(|c| (c, ())).collect();
    let id = RelClass::identity();
    let units = window
        .iter()
        .all(|c| g.rel_product(&id, c) == *c && g.rel_product(c, &id) == *c);
    let inverses = window.iter().all(|c| {
        let inv = g.rel_inverse(c);
        in_window.contains_key(&inv)
            && g.rel_product(c, &inv).is_identity()
            && g.rel_product(&inv, c).is_identity()
    });
    let small: Vec<&RelClass> = window.iter().filter(|c| c.len() <= assoc_len).collect();
    let assoc = small.par_iter().all(|a| {
        small.iter().all(|b| {
            let ab = g.rel_product(a, b);
            small.iter().all(|c| {
                g.rel_product(&ab, c) == g.rel_product(a, &g.rel_product(b, c))
            })
        })
    });
    units && inverses && assoc
}
