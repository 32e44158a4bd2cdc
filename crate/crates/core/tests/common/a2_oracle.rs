//! Independent brute-force enumeration of LS paths for A2 with an i64
//! weight model of its own: positive roots, orbit closure, the step order,
//! longest-chain distances and sigma-chains are all recomputed here.

use std::collections::{BTreeSet, HashMap};

pub type Wt = (i64, i64);
/// Directions and interior cuts `(numerator, denominator)`.
pub type RawPath = (Vec<Wt>, Vec<(i64, i64)>);
type Pairing = fn(Wt) -> i64;

// A2 positive roots in fundamental-weight coordinates; coroot pairings
// are mu_1, mu_2 and mu_1 + mu_2.
const ROOTS: [(Wt, Pairing); 3] = [((2, -1), |m| m.0), ((-1, 2), |m| m.1), ((1, 1), |m| m.0 + m.1)];

fn steps(x: Wt) -> Vec<(Wt, i64)> {
    ROOTS
        .iter()
        .filter_map(|&(b, pair)| {
            let p = pair(x);
            (p < 0).then_some(((x.0 - p * b.0, x.1 - p * b.1), p))
        })
        .collect()
}

pub fn orbit(mu: Wt) -> BTreeSet<Wt> {
    let mut seen = BTreeSet::from([mu]);
    let mut stack = vec![mu];
    while let Some(x) = stack.pop() {
        for (b, pair) in ROOTS {
            let p = pair(x);
            let y = (x.0 - p * b.0, x.1 - p * b.1);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen
}

/// Longest step chain from `a` to `b`, if any.
fn dist(a: Wt, b: Wt, memo: &mut HashMap<(Wt, Wt), Option<u32>>) -> Option<u32> {
    if a == b {
        return Some(0);
    }
    if let Some(&d) = memo.get(&(a, b)) {
        return d;
    }
    let d = steps(a)
        .into_iter()
        .filter_map(|(y, _)| dist(y, b, memo).map(|d| d + 1))
        .max();
    memo.insert((a, b), d);
    d
}

fn sigma_chain(num: i64, den: i64, a: Wt, b: Wt, memo: &mut HashMap<(Wt, Wt), Option<u32>>) -> bool {
    if a == b {
        return true;
    }
    steps(a).into_iter().any(|(y, p)| {
        (num * p) % den == 0
            && dist(a, y, memo) == Some(1)
            && dist(y, b, memo).is_some()
            && sigma_chain(num, den, y, b, memo)
    })
}

/// All LS paths of the given dominant shape with at most `max_segments`
/// segments and cut denominators up to `max_den`, as (directions, cuts).
pub fn enumerate(shape: Wt, max_segments: usize, max_den: i64) -> Vec<RawPath> {
    let pts: Vec<Wt> = orbit(shape).into_iter().collect();
    let mut fracs: Vec<(i64, i64)> = (2..=max_den)
        .flat_map(|d| (1..d).map(move |k| (k, d)))
        .filter(|&(k, d)| gcd(k, d) == 1)
        .collect();
    fracs.sort_by(|x, y| (x.0 * y.1).cmp(&(y.0 * x.1)));
    let mut memo = HashMap::new();
    let mut out = Vec::new();
    let mut stack: Vec<RawPath> = pts.iter().map(|&p| (vec![p], vec![])).collect();
    while let Some((dirs, cuts)) = stack.pop() {
        // Endpoint sum_k (c_{k+1} - c_k) nu_k must be integral.
        let mut bounds = vec![(0, 1)];
        bounds.extend(cuts.iter().copied());
        bounds.push((1, 1));
        let (mut x, mut y, mut den) = (0i64, 0i64, 1i64);
        for (k, d) in dirs.iter().enumerate() {
            let (p0, q0) = bounds[k];
            let (p1, q1) = bounds[k + 1];
            let (n, q) = (p1 * q0 - p0 * q1, q0 * q1);
            let l = den / gcd(den, q) * q;
            x = x * (l / den) + n * (l / q) * d.0;
            y = y * (l / den) + n * (l / q) * d.1;
            den = l;
        }
        if x % den == 0 && y % den == 0 {
            out.push((dirs.clone(), cuts.clone()));
        }
        if dirs.len() == max_segments {
            continue;
        }
        let last = *dirs.last().unwrap();
        for &next in &pts {
            if next == last || dist(last, next, &mut memo).is_none() {
                continue;
            }
            for &(k, d) in &fracs {
                if let Some(&(pk, pd)) = cuts.last() {
                    if k * pd <= pk * d {
                        continue;
                    }
                }
                if sigma_chain(k, d, last, next, &mut memo) {
                    let mut nd = dirs.clone();
                    nd.push(next);
                    let mut nc = cuts.clone();
                    nc.push((k, d));
                    stack.push((nd, nc));
                }
            }
        }
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}
