//! Real-valued functions on a lattice and their capacity-theoretic
//! operators: Möbius inversion, the successive difference functional and its
//! dual, complete monotonicity/alternation classification, and support
//! checks.

use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice, Subset};
use crate::rational::Rational;

/// A total map from lattice elements to exact rationals.
#[derive(Debug, Clone)]
pub struct LatticeFn {
    lattice: Arc<Lattice>,
    values: Vec<Rational>,
}

impl PartialEq for LatticeFn {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.lattice, &other.lattice) || self.lattice == other.lattice)
            && self.values == other.values
    }
}

impl Eq for LatticeFn {}

impl LatticeFn {
    pub fn new(lattice: Arc<Lattice>, values: Vec<Rational>) -> Result<Self> {
        if values.len() != lattice.len() {
            return Err(Error::DimensionMismatch("one value per lattice element"));
        }
        Ok(LatticeFn { lattice, values })
    }

    pub fn zero(lattice: Arc<Lattice>) -> Self {
        let n = lattice.len();
        LatticeFn { lattice, values: vec![Rational::zero(); n] }
    }

    /// Builds a function from named entries; elements not mentioned get 0.
    pub fn from_sparse<S: AsRef<str>>(lattice: Arc<Lattice>, entries: &[(S, Rational)]) -> Result<Self> {
        let mut values = vec![Rational::zero(); lattice.len()];
        for (name, v) in entries {
            let e = lattice.elem(name.as_ref())?;
            values[e.index()] = v.clone();
        }
        Ok(LatticeFn { lattice, values })
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn get(&self, e: Elem) -> &Rational {
        &self.values[e.index()]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Pointwise difference over the same lattice.
    pub fn pointwise_sub(&self, other: &LatticeFn) -> LatticeFn {
        debug_assert_eq!(self.values.len(), other.values.len());
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a - b)
            .collect();
        LatticeFn { lattice: self.lattice.clone(), values }
    }

    pub fn is_monotone(&self) -> bool {
        self.lattice
            .covers()
            .iter()
            .all(|&(lo, hi)| self.get(lo) <= self.get(hi))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }

    pub fn is_capacity(&self) -> bool {
        self.is_monotone()
            && self.get(self.lattice.bottom()).is_zero()
            && self.get(self.lattice.top()).is_one()
    }
}

/// Requires a nonnegative monotone function.
pub(crate) fn check_m1(phi: &LatticeFn) -> Result<()> {
    if !phi.is_monotone() {
        return Err(Error::NotMonotone);
    }
    if !phi.is_nonnegative() {
        return Err(Error::NegativeValue);
    }
    Ok(())
}

/// Classification flags for a lattice function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CapacityClass {
    pub is_monotone: bool,
    pub is_capacity: bool,
    pub is_completely_monotone: bool,
    pub is_completely_alternating: bool,
    /// Whether the value at the bottom is nonnegative. The Möbius sign
    /// criterion characterizes complete monotonicity under this assumption;
    /// the flag records violations separately since the difference operators
    /// themselves are insensitive to an additive shift.
    pub bottom_nonnegative: bool,
}

/// Computes all classification flags. Complete monotonicity is decided by
/// the sign of the Möbius inverse away from the bottom (one inversion pass,
/// never by quantifying over difference operators); complete alternation by
/// running the same test for the negated function on the dual lattice.
pub fn classify(phi: &LatticeFn) -> CapacityClass {
    let lat = phi.lattice();
    let is_monotone = phi.is_monotone();
    let is_capacity = phi.is_capacity();
    let bottom_nonnegative = !phi.get(lat.bottom()).is_negative();

    let inv = mobius_inverse(phi);
    let is_completely_monotone = lat
        .elements()
        .filter(|&x| x != lat.bottom())
        .all(|x| !inv.get(x).is_negative());

    let dual = Arc::new(lat.dual());
    let negated = LatticeFn {
        lattice: dual.clone(),
        values: phi.values.iter().map(|v| -v).collect(),
    };
    let dual_inv = mobius_inverse(&negated);
    let is_completely_alternating = dual
        .elements()
        .filter(|&x| x != dual.bottom())
        .all(|x| !dual_inv.get(x).is_negative());

    CapacityClass {
        is_monotone,
        is_capacity,
        is_completely_monotone,
        is_completely_alternating,
        bottom_nonnegative,
    }
}

/// The unique `f` with φ(x) = Σ_{y ≤ x} f(y), by back-substitution in a
/// bottom-up order.
pub fn mobius_inverse(phi: &LatticeFn) -> LatticeFn {
    let lat = phi.lattice().clone();
    let mut f = vec![Rational::zero(); lat.len()];
    for x in lat.elements_bottom_up() {
        let mut s = phi.get(x).clone();
        let mut rest = lat.down_mask(x) & !(1u64 << x.index());
        while rest != 0 {
            let y = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            s -= &f[y];
        }
        f[x.index()] = s;
    }
    LatticeFn { lattice: lat, values: f }
}

/// Zeta transform: φ(x) = Σ_{y ≤ x} f(y); exact inverse of
/// [`mobius_inverse`].
pub fn cdf_from_mass(mass: &LatticeFn) -> LatticeFn {
    let lat = mass.lattice().clone();
    let values = lat
        .elements()
        .map(|x| {
            let mut s = Rational::zero();
            let mut rest = lat.down_mask(x);
            while rest != 0 {
                let y = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                s += &mass.values[y];
            }
            s
        })
        .collect();
    LatticeFn { lattice: lat, values }
}

/// Deduplicated copy of `a`, sorted by element index.
fn dedup_sorted(a: &[Elem]) -> Vec<Elem> {
    let mut v = a.to_vec();
    v.sort();
    v.dedup();
    v
}

/// The maximal `b`-meet antichain of `a`: a subset whose meets with `b` are
/// pairwise incomparable and dominate every `aᵢ ∧ b`. The successive
/// difference functional is invariant under this reduction.
pub fn maximal_meet_antichain(lat: &Lattice, a: &[Elem], b: Elem) -> Result<Vec<Elem>> {
    let a = dedup_sorted(a);
    if a.is_empty() {
        return Err(Error::EmptyGenerator);
    }
    if a.iter().any(|&x| lat.leq(b, x)) {
        return Err(Error::Unreducible);
    }
    let meets: Vec<Elem> = a.iter().map(|&x| lat.meet(x, b)).collect();
    let mut keep = Vec::new();
    let mut seen_meets: Vec<Elem> = Vec::new();
    for (i, &m) in meets.iter().enumerate() {
        let dominated = meets
            .iter()
            .enumerate()
            .any(|(j, &m2)| j != i && (lat.lt(m, m2) || (m == m2 && j < i)));
        if !dominated && !seen_meets.contains(&m) {
            seen_meets.push(m);
            keep.push(a[i]);
        }
    }
    Ok(keep)
}

/// The successive difference functional ∇_A^b φ = Σ_{A′⊆A} (−1)^{|A′|} φ(⋀A′ ∧ b).
///
/// Elements of `a` above `b` make the value vanish; otherwise the expansion
/// runs on the maximal `b`-meet antichain only.
pub fn nabla(phi: &LatticeFn, a: &[Elem], b: Elem) -> Result<Rational> {
    let lat = phi.lattice().clone();
    let a = dedup_sorted(a);
    if a.is_empty() {
        return Err(Error::EmptyGenerator);
    }
    if a.iter().any(|&x| lat.leq(b, x)) {
        return Ok(Rational::zero());
    }
    let reduced = maximal_meet_antichain(&lat, &a, b)?;
    let mut total = Rational::zero();
    for pick in 0u64..(1 << reduced.len()) {
        let mut m = b;
        let mut rest = pick;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            m = lat.meet(m, reduced[i]);
        }
        if pick.count_ones() % 2 == 0 {
            total += phi.get(m);
        } else {
            total -= phi.get(m);
        }
    }
    Ok(total)
}

/// The dual successive difference Δ_B^b φ = Σ_{B′⊆B} (−1)^{|B′|} φ(⋁B′ ∨ b),
/// i.e. ∇ evaluated on the dual lattice.
pub fn delta(phi: &LatticeFn, b_set: &[Elem], b: Elem) -> Result<Rational> {
    let lat = phi.lattice().clone();
    let bs = dedup_sorted(b_set);
    if bs.is_empty() {
        return Err(Error::EmptyGenerator);
    }
    if bs.iter().any(|&x| lat.leq(x, b)) {
        return Ok(Rational::zero());
    }
    // Minimal distinct joins with `b` play the antichain role on the dual.
    let joins: Vec<Elem> = bs.iter().map(|&x| lat.join(x, b)).collect();
    let mut reduced = Vec::new();
    let mut seen: Vec<Elem> = Vec::new();
    for (i, &m) in joins.iter().enumerate() {
        let dominated = joins
            .iter()
            .enumerate()
            .any(|(j, &m2)| j != i && (lat.lt(m2, m) || (m == m2 && j < i)));
        if !dominated && !seen.contains(&m) {
            seen.push(m);
            reduced.push(bs[i]);
        }
    }
    let mut total = Rational::zero();
    for pick in 0u64..(1 << reduced.len()) {
        let mut m = b;
        let mut rest = pick;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            m = lat.join(m, reduced[i]);
        }
        if pick.count_ones() % 2 == 0 {
            total += phi.get(m);
        } else {
            total -= phi.get(m);
        }
    }
    Ok(total)
}

/// π_A^b = {x ≤ b : x ≰ a for all a ∈ A}; the successive difference
/// functional equals the Möbius-inverse mass of this set.
pub fn pi_set(lat: &Lattice, a: &[Elem], b: Elem) -> Subset {
    let mut excluded = 0u64;
    for &x in a {
        excluded |= lat.down_mask(x);
    }
    Subset::from_mask(lat.down_mask(b) & !excluded)
}

/// True iff the Möbius inverse of `phi` vanishes outside the down-set `v`.
/// The answer is recomputed through the difference-functional criterion
/// (∇_V^b φ = 0 for every b ∉ V) and the two routes are cross-asserted.
pub fn support_check(phi: &LatticeFn, v: Subset) -> Result<bool> {
    let lat = phi.lattice().clone();
    if !lat.is_down_set(v) {
        return Err(Error::NotADownSet);
    }
    let inv = mobius_inverse(phi);
    let by_inverse = lat
        .elements()
        .filter(|&x| !v.contains(x))
        .all(|x| inv.get(x).is_zero());

    let by_nabla = if v.is_empty() {
        lat.elements().all(|x| inv.get(x).is_zero())
    } else {
        let antichain = lat.maximal_of(v);
        lat.elements()
            .filter(|&b| !v.contains(b))
            .map(|b| nabla(phi, &antichain, b))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .all(|r| r.is_zero())
    };
    assert_eq!(by_inverse, by_nabla, "support criteria must agree");
    Ok(by_inverse)
}

/// The dual capacity φ*(x) = 1 − φ(x), attached to the dual lattice.
pub fn dual_capacity(phi: &LatticeFn) -> Result<LatticeFn> {
    if !phi.is_capacity() {
        return Err(Error::NotACapacity);
    }
    let dual = Arc::new(phi.lattice().dual());
    let values = phi.values.iter().map(|v| Rational::one() - v).collect();
    Ok(LatticeFn { lattice: dual, values })
}
