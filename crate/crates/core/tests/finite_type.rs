//! Finite-type crystals against oracles that know nothing about paths.

mod common;

use std::collections::BTreeSet;

use common::a2_oracle;
use ls_crystal::explorer::explore;
use ls_crystal::{BigPath, BigWeight, CartanMatrix, OrderConfig, Rational};
use num_bigint::BigInt;

const FINITE: [(u32, u32); 6] = [(0, 0), (1, 1), (1, 2), (2, 1), (1, 3), (3, 1)];

/// Positive coroots in the simple-coroot basis, by closure under the simple
/// reflections `s_j(h) = h - <alpha_j, h> alpha_j^vee`.
fn positive_coroots(a1: i64, a2: i64) -> Vec<(i64, i64)> {
    let mut seen = BTreeSet::from([(1, 0), (0, 1)]);
    let mut stack = vec![(1, 0), (0, 1)];
    while let Some(h) = stack.pop() {
        // <alpha_j, h> with <alpha_j, alpha_i^vee> = a_ij, A = [[2, -a1], [-a2, 2]].
        let pairs = [2 * h.0 - a2 * h.1, 2 * h.1 - a1 * h.0];
        for (j, pair) in pairs.into_iter().enumerate() {
            let mut r = h;
            if j == 0 {
                r.0 -= pair
            } else {
                r.1 -= pair
            }
            if r.0 >= 0 && r.1 >= 0 && seen.insert(r) {
                stack.push(r);
            }
        }
    }
    seen.into_iter().collect()
}

fn weyl_dimension(a1: u32, a2: u32, mu: (i64, i64)) -> i64 {
    let (mut num, mut den) = (1i64, 1i64);
    for (c1, c2) in positive_coroots(a1 as i64, a2 as i64) {
        num *= c1 * (mu.0 + 1) + c2 * (mu.1 + 1);
        den *= c1 + c2;
    }
    assert_eq!(num % den, 0);
    num / den
}

/// Dominant representative of the orbit, by reflecting away negative coordinates.
fn dominant(a1: u32, a2: u32, mut mu: (i64, i64)) -> (i64, i64) {
    let (a1, a2) = (a1 as i64, a2 as i64);
    loop {
        if mu.0 < 0 {
            let k = mu.0;
            mu = (mu.0 - 2 * k, mu.1 + a2 * k);
        } else if mu.1 < 0 {
            let k = mu.1;
            mu = (mu.0 + a1 * k, mu.1 - 2 * k);
        } else {
            return mu;
        }
    }
}

#[test]
fn coroot_counts() {
    assert_eq!(positive_coroots(0, 0).len(), 2);
    assert_eq!(positive_coroots(1, 1).len(), 3);
    assert_eq!(positive_coroots(1, 2).len(), 4);
    assert_eq!(positive_coroots(1, 3).len(), 6);
    assert_eq!(weyl_dimension(1, 1, (1, 1)), 8);
    assert_eq!(
        weyl_dimension(1, 3, (1, 0)) * weyl_dimension(1, 3, (0, 1)),
        7 * 14
    );
}

#[test]
fn dominant_shapes_match_weyl_dimension() {
    for (a1, a2) in FINITE {
        let cm = CartanMatrix::new(a1, a2).unwrap();
        for mu in [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2)] {
            let seed = BigPath::highest(cm, BigWeight::from_ints(mu.0, mu.1));
            let g = explore(&seed, 60, &OrderConfig::default()).unwrap();
            assert!(g.is_closed(), "({a1},{a2}) {mu:?} not closed");
            assert_eq!(
                g.len() as i64,
                weyl_dimension(a1, a2, mu),
                "({a1},{a2}) shape {mu:?}"
            );
        }
    }
}

#[test]
fn lambda_crystal_matches_dominant_representative() {
    for (a1, a2) in FINITE {
        let cm = CartanMatrix::new(a1, a2).unwrap();
        let g = explore(
            &BigPath::highest(cm, BigWeight::lambda()),
            60,
            &OrderConfig::default(),
        )
        .unwrap();
        assert!(g.is_closed());
        assert_eq!(
            g.len() as i64,
            weyl_dimension(a1, a2, dominant(a1, a2, (1, -1))),
            "({a1},{a2})"
        );
    }
}

#[test]
fn a2_adjoint_matches_brute_force() {
    let cm = CartanMatrix::new(1, 1).unwrap();
    let shape = BigWeight::from_ints(1, 1);
    let g = explore(&BigPath::highest(cm, shape.clone()), 20, &OrderConfig::default()).unwrap();
    let oracle: BTreeSet<String> = a2_oracle::enumerate((1, 1), 3, 12)
        .into_iter()
        .map(|(dirs, cuts)| {
            let dirs = dirs.iter().map(|d| BigWeight::from_ints(d.0, d.1)).collect();
            let mut c = vec![Rational::from_integer(BigInt::from(0))];
            c.extend(
                cuts.iter()
                    .map(|&(k, d)| Rational::new(BigInt::from(k), BigInt::from(d))),
            );
            c.push(Rational::from_integer(BigInt::from(1)));
            BigPath::from_parts(cm, shape.clone(), dirs, c).unwrap().to_text()
        })
        .collect();
    let nodes: BTreeSet<String> = g.nodes.iter().map(|p| p.to_text()).collect();
    assert_eq!(oracle.len(), 8);
    assert_eq!(nodes, oracle);
    assert_eq!(g.weight_tally[&BigWeight::zero()], 2);
}
