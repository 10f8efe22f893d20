//! Shared fixtures, random-instance generators, and independent oracles for
//! the integration suites.

// Each integration-test binary compiles this module separately and uses a
// different slice of it.
#![allow(dead_code)]

use std::sync::Arc;

use latcap::capacity::{cdf_from_mass, LatticeFn};
use latcap::lattice::{Elem, Lattice};
use latcap::rational::{rat, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Fixed-seed generator with a stable stream across platforms.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn b3() -> Arc<Lattice> {
    Arc::new(Lattice::boolean(3).unwrap())
}

pub fn b4() -> Arc<Lattice> {
    Arc::new(Lattice::boolean(4).unwrap())
}

/// The three-valued capacity on B₃: 1 on top, `c` on the co-atoms.
pub fn phi_c(lat: &Arc<Lattice>, c: Rational) -> LatticeFn {
    let values = lat
        .elements()
        .map(|x| match lat.id(x) {
            "123" => rat(1, 1),
            "12" | "13" | "23" => c.clone(),
            _ => rat(0, 1),
        })
        .collect();
    LatticeFn::new(lat.clone(), values).unwrap()
}

/// The order-dependence example capacity on B₄.
pub fn varphi4(lat: &Arc<Lattice>) -> LatticeFn {
    let values = lat
        .elements()
        .map(|x| match lat.id(x) {
            "1234" => rat(1, 1),
            "123" | "124" | "234" => rat(1, 2),
            "134" | "13" | "23" => rat(1, 3),
            "12" | "34" => rat(1, 6),
            _ => rat(0, 1),
        })
        .collect();
    LatticeFn::new(lat.clone(), values).unwrap()
}

/// The coupling example's second marginal on B₄ as a cdf.
pub fn psi4(lat: &Arc<Lattice>) -> LatticeFn {
    let mass = LatticeFn::from_sparse(
        lat.clone(),
        &[
            ("12", rat(1, 6)),
            ("34", rat(1, 6)),
            ("234", rat(1, 3)),
            ("124", rat(1, 3)),
        ],
    )
    .unwrap();
    cdf_from_mass(&mass)
}

/// A random lattice with `min_size..=6` elements, built as an
/// intersection-closed family of subsets (meet = intersection, join =
/// least common superset).
pub fn random_lattice_sized(rng: &mut ChaCha8Rng, min_size: usize) -> Arc<Lattice> {
    loop {
        let base: u32 = rng.random_range(2..=5);
        let full = (1u32 << base) - 1;
        let mut sets = vec![full];
        for _ in 0..rng.random_range(2..=5) {
            sets.push(rng.random_range(0..=full));
        }
        // Close under intersection.
        loop {
            let mut added = false;
            let snapshot = sets.clone();
            for &a in &snapshot {
                for &b in &snapshot {
                    if !sets.contains(&(a & b)) {
                        sets.push(a & b);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        sets.sort_by_key(|&s| (s.count_ones(), s));
        sets.dedup();
        if sets.len() < min_size.max(2) || sets.len() > 6 {
            continue;
        }
        let names: Vec<String> = sets.iter().map(|s| format!("s{s:x}")).collect();
        let mut relation = Vec::new();
        for (i, &a) in sets.iter().enumerate() {
            for (j, &b) in sets.iter().enumerate() {
                if i != j && a & b == a {
                    relation.push((names[i].clone(), names[j].clone()));
                }
            }
        }
        return Arc::new(Lattice::build(&names, &relation).unwrap());
    }
}

/// A random lattice with 2..=6 elements, biased toward the larger sizes by
/// cycling the minimum through 2..=5.
pub fn random_lattice(rng: &mut ChaCha8Rng) -> Arc<Lattice> {
    let min = rng.random_range(2..=5);
    random_lattice_sized(rng, min)
}

fn small_rat(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.random_range(0..=4), rng.random_range(1..=3))
}

/// A random nonnegative monotone function with small rational values.
pub fn random_monotone(rng: &mut ChaCha8Rng, lat: &Arc<Lattice>) -> LatticeFn {
    let mut values = vec![Rational::zero(); lat.len()];
    for x in lat.elements_bottom_up() {
        let mut v = small_rat(rng);
        for y in lat.elements() {
            if y != x && lat.leq(y, x) && values[y.index()] > v {
                v = values[y.index()].clone();
            }
        }
        values[x.index()] = v;
    }
    LatticeFn::new(lat.clone(), values).unwrap()
}

/// A random capacity: monotone, 0 at bottom, 1 at top.
pub fn random_capacity(rng: &mut ChaCha8Rng, lat: &Arc<Lattice>) -> LatticeFn {
    loop {
        let raw = random_monotone(rng, lat);
        let bottom = raw.get(lat.bottom()).clone();
        let span = raw.get(lat.top()) - &bottom;
        if span.is_zero() {
            continue;
        }
        let values = lat
            .elements()
            .map(|x| (raw.get(x) - &bottom) / &span)
            .collect();
        return LatticeFn::new(lat.clone(), values).unwrap();
    }
}

/// A random completely monotone capacity: a normalized random mass with
/// nothing at the bottom, accumulated into a cdf.
pub fn random_cdf(rng: &mut ChaCha8Rng, lat: &Arc<Lattice>) -> LatticeFn {
    loop {
        let mut mass = vec![Rational::zero(); lat.len()];
        for x in lat.elements() {
            if x == lat.bottom() {
                continue;
            }
            if rng.random_bool(0.6) {
                mass[x.index()] = small_rat(rng);
            }
        }
        let total: Rational = mass.iter().sum();
        if total.is_zero() {
            continue;
        }
        let values = mass.into_iter().map(|m| m / &total).collect();
        let mass_fn = LatticeFn::new(lat.clone(), values).unwrap();
        return cdf_from_mass(&mass_fn);
    }
}

/// Exhaustive maximization of the path functional: the independent oracle
/// for the shortest-path computation of λ.
pub fn lambda_exhaustive(phi: &LatticeFn, a: Elem, b: Elem) -> Rational {
    let lat = phi.lattice().clone();
    let path_value = |seq: &[Elem]| -> Rational {
        let vertex: Rational = seq.iter().map(|&v| phi.get(v).clone()).sum();
        let edges: Rational = seq
            .windows(2)
            .map(|w| phi.get(lat.join(w[0], w[1])).clone())
            .sum();
        vertex - edges
    };
    if a == b {
        return path_value(&[a]);
    }
    let mut best: Option<Rational> = None;
    let mut stack: Vec<Vec<Elem>> = vec![vec![a]];
    while let Some(path) = stack.pop() {
        if *path.last().unwrap() == b {
            let v = path_value(&path);
            if best.as_ref().is_none_or(|cur| v > *cur) {
                best = Some(v);
            }
            continue;
        }
        for next in lat.elements() {
            if !path.contains(&next) {
                let mut longer = path.clone();
                longer.push(next);
                stack.push(longer);
            }
        }
    }
    best.unwrap()
}

/// A random monotone path of the requested length (or as long as the
/// lattice allows): repeatedly appends a random element not below any
/// chosen one.
pub fn random_monotone_path(rng: &mut ChaCha8Rng, lat: &Arc<Lattice>, len: usize) -> Vec<Elem> {
    let mut seq: Vec<Elem> = Vec::new();
    while seq.len() < len {
        let candidates: Vec<Elem> = lat
            .elements()
            .filter(|&e| !seq.iter().any(|&a| a == e || lat.lt(e, a)))
            .collect();
        if candidates.is_empty() {
            break;
        }
        let pick = candidates[rng.random_range(0..candidates.len())];
        seq.push(pick);
    }
    seq
}
