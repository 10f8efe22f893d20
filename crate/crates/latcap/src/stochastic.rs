//! Stochastic comparison machinery: the antichain condition for cdf
//! dominance, explicit coupling construction by exact LP feasibility, the
//! successive-difference sufficiency test for membership couplings, and
//! joint marginal bounds with their reduced dual.

use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::capacity::{mobius_inverse, nabla, LatticeFn};
use crate::error::{Error, Result};
use crate::frechet::{frechet_bound, lambda_diff, IdealFn};
use crate::ideal::{Extension, IdealLattice};
use crate::lattice::{Elem, Subset};
use crate::lp::{LinearProgram, LpStatus, Sense};
use crate::rational::Rational;

/// Outcome of a universally quantified condition, with a violating witness
/// (an antichain or a monotone path) on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionOutcome {
    Holds,
    Violated(Vec<Elem>),
}

impl ConditionOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, ConditionOutcome::Holds)
    }
}

/// A joint probability mass on 𝓛 × L, stored as sparse atoms sorted by
/// (node index, element index).
#[derive(Debug, Clone)]
pub struct JointPmf {
    ideals: Arc<IdealLattice>,
    atoms: Vec<(usize, Elem, Rational)>,
}

impl PartialEq for JointPmf {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ideals, &other.ideals) && self.atoms == other.atoms
    }
}

impl JointPmf {
    fn new(ideals: Arc<IdealLattice>, mut atoms: Vec<(usize, Elem, Rational)>) -> JointPmf {
        atoms.retain(|(_, _, m)| !m.is_zero());
        atoms.sort_by_key(|&(v, y, _)| (v, y));
        JointPmf { ideals, atoms }
    }

    /// Wraps externally supplied atoms (node index, element, mass ≥ 0);
    /// zeros are dropped and the rest sorted canonically.
    pub fn from_atoms(ideals: Arc<IdealLattice>, atoms: Vec<(usize, Elem, Rational)>) -> JointPmf {
        assert!(atoms.iter().all(|(_, _, m)| !m.is_negative()), "masses must be nonnegative");
        JointPmf::new(ideals, atoms)
    }

    pub fn ideals(&self) -> &Arc<IdealLattice> {
        &self.ideals
    }

    pub fn atoms(&self) -> &[(usize, Elem, Rational)] {
        &self.atoms
    }

    pub fn total_mass(&self) -> Rational {
        self.atoms.iter().map(|(_, _, m)| m.clone()).sum()
    }

    /// Marginal over the up-set coordinate, as an extension pmf.
    pub fn upset_marginal(&self) -> Result<Extension> {
        let mut pmf = std::collections::BTreeMap::new();
        for (v, _, m) in &self.atoms {
            *pmf.entry(*v).or_insert_with(Rational::zero) += m;
        }
        Extension::from_pmf(self.ideals.clone(), pmf)
    }

    /// Marginal over the element coordinate, as a mass function on L.
    pub fn element_marginal(&self) -> LatticeFn {
        let base = self.ideals.base().clone();
        let mut values = vec![Rational::zero(); base.len()];
        for (_, y, m) in &self.atoms {
            values[y.index()] += m;
        }
        LatticeFn::new(base, values).expect("marginal is total")
    }

    /// True iff every atom (V, y) satisfies y ∈ V.
    pub fn supported_on_membership(&self) -> bool {
        self.atoms.iter().all(|&(v, y, _)| self.ideals.node(v).contains(y))
    }

    /// True iff every atom's up-set is principal ⟨x⟩* with x ≤ y, i.e. the
    /// pmf encodes a pair of lattice variables with the first below the
    /// second.
    pub fn supported_on_dominance(&self) -> bool {
        let base = self.ideals.base();
        self.atoms.iter().all(|&(v, y, _)| {
            let gens = self.ideals.node(v).generators();
            gens.len() == 1 && base.leq(gens[0], y)
        })
    }
}

/// Coupling feasibility outcome.
#[derive(Debug, Clone, PartialEq)]
pub enum Coupling {
    Feasible(JointPmf),
    Infeasible,
}

impl Coupling {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Coupling::Feasible(_))
    }
}

/// Requires a cdf: a completely monotone function of total mass one. Mass
/// at the bottom is allowed (a point mass at 0̂ is a legitimate lattice
/// variable even though its cdf is not a capacity). Returns the mass
/// function.
pub fn check_cdf(phi: &LatticeFn) -> Result<LatticeFn> {
    if !phi.is_monotone() || !phi.get(phi.lattice().top()).is_one() {
        return Err(Error::NotACdf);
    }
    let inv = mobius_inverse(phi);
    if !inv.is_nonnegative() {
        return Err(Error::NotACdf);
    }
    Ok(inv)
}

fn check_m1_capacity(phi: &LatticeFn) -> Result<()> {
    crate::capacity::check_m1(phi)?;
    if !phi.is_capacity() {
        return Err(Error::NotACapacity);
    }
    Ok(())
}

/// The antichain dominance condition: ∇_Aφ(1̂) ≤ ∇_Aψ(1̂) for every
/// antichain A, equivalent to the existence of a coupling with X ≤ Y.
/// Every ∇ value is cross-checked against the up-set mass of the Möbius
/// inverse (the two routes of the representation theorem), and the first
/// violating antichain in lexicographic order is returned as certificate.
pub fn norberg_dominance(phi_cdf: &LatticeFn, psi_cdf: &LatticeFn) -> Result<ConditionOutcome> {
    let f_phi = check_cdf(phi_cdf)?;
    let f_psi = check_cdf(psi_cdf)?;
    let lat = phi_cdf.lattice().clone();
    let top = lat.top();
    for antichain in lat.antichains() {
        let lhs = nabla(phi_cdf, &antichain, top)?;
        let rhs = nabla(psi_cdf, &antichain, top)?;
        // Second route: P(X ∉ ⟨A⟩) as mass outside the down-set.
        let outside = lat.complement(lat.down_set(&antichain));
        let lhs_mass: Rational = outside.elems().map(|x| f_phi.get(x).clone()).sum();
        let rhs_mass: Rational = outside.elems().map(|x| f_psi.get(x).clone()).sum();
        assert_eq!(lhs, lhs_mass, "difference functional must equal up-set mass");
        assert_eq!(rhs, rhs_mass, "difference functional must equal up-set mass");
        if lhs > rhs {
            return Ok(ConditionOutcome::Violated(antichain));
        }
    }
    Ok(ConditionOutcome::Holds)
}

/// Builds a coupling of two cdfs supported on {(x, y) : x ≤ y} by exact LP
/// feasibility; infeasible exactly when the antichain condition fails. The
/// first coordinate is reported as the principal up-set ⟨x⟩*.
pub fn dominance_coupling(
    ideals: &Arc<IdealLattice>,
    phi_cdf: &LatticeFn,
    psi_cdf: &LatticeFn,
) -> Result<Coupling> {
    let f_phi = check_cdf(phi_cdf)?;
    let f_psi = check_cdf(psi_cdf)?;
    let lat = phi_cdf.lattice().clone();
    let pairs: Vec<(Elem, Elem)> = lat
        .elements()
        .flat_map(|x| lat.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| lat.leq(x, y))
        .collect();
    let mut lp = LinearProgram::minimize(vec![Rational::zero(); pairs.len()]);
    for x in lat.elements() {
        let coeffs = pairs
            .iter()
            .map(|&(px, _)| if px == x { Rational::one() } else { Rational::zero() })
            .collect();
        lp.add_row(coeffs, Sense::Eq, f_phi.get(x).clone());
    }
    for y in lat.elements() {
        let coeffs = pairs
            .iter()
            .map(|&(_, py)| if py == y { Rational::one() } else { Rational::zero() })
            .collect();
        lp.add_row(coeffs, Sense::Eq, f_psi.get(y).clone());
    }
    match lp.feasible()? {
        None => Ok(Coupling::Infeasible),
        Some(point) => {
            let atoms = pairs
                .iter()
                .zip(point)
                .map(|(&(x, y), m)| (ideals.principal(x), y, m))
                .collect();
            Ok(Coupling::Feasible(JointPmf::new(ideals.clone(), atoms)))
        }
    }
}

/// State of the monotone-path search.
struct PathNode {
    seq: Vec<Elem>,
    phi: LatticeFn,
    /// Down-set generated by the sequence so far.
    downset: Subset,
}

/// Breadth-first search over monotone paths in (length, lex) order for a
/// violation Λ_{seq}φ(1̂) > ∇_{seq}ψ(1̂). With `support_guided` every
/// appended element must bring new ψ-support into the generated down-set;
/// otherwise it must change the λ-difference image or the support overlap.
///
/// Pruning is exact for the unrestricted mode: a prefix with Λφ(1̂) = 0
/// cannot spawn a violation (both sides only shrink along extensions and
/// the right side stays nonnegative), and an element that changes neither
/// the λ-difference image nor the down-set's overlap with the ψ-support
/// can be dropped from any violating path without changing either side.
fn comp_search(
    phi: &LatticeFn,
    psi_cdf: &LatticeFn,
    f_psi: &LatticeFn,
    support_guided: bool,
) -> Result<ConditionOutcome> {
    let lat = phi.lattice().clone();
    let top = lat.top();
    let psi_supp = Subset::from_elems(
        &lat.elements().filter(|&y| !f_psi.get(y).is_zero()).collect::<Vec<_>>(),
    );

    let mut level: Vec<PathNode> = vec![PathNode {
        seq: Vec::new(),
        phi: phi.clone(),
        downset: Subset::empty(),
    }];
    while !level.is_empty() {
        let mut next_level: Vec<PathNode> = Vec::new();
        for node in &level {
            for e in lat.elements() {
                // Monotone-path extension: e may not sit below an earlier
                // element (nor repeat one).
                let blocked = node.seq.iter().any(|&a| a == e || lat.lt(e, a));
                if blocked {
                    continue;
                }
                let next_downset = node.downset.union(lat.down_set(&[e]));
                let psi_effective =
                    next_downset.intersection(psi_supp) != node.downset.intersection(psi_supp);
                if support_guided && !psi_effective {
                    continue;
                }
                let next_phi = lambda_diff(&node.phi, e)?;
                if !support_guided && !psi_effective && next_phi == node.phi {
                    continue;
                }
                let mut seq = node.seq.clone();
                seq.push(e);
                let lhs = next_phi.get(top);
                if !lhs.is_zero() {
                    let rhs = nabla(psi_cdf, &seq, top)?;
                    if *lhs > rhs {
                        return Ok(ConditionOutcome::Violated(seq));
                    }
                    next_level.push(PathNode { seq, phi: next_phi, downset: next_downset });
                }
            }
        }
        level = next_level;
    }
    Ok(ConditionOutcome::Holds)
}

/// The sufficiency test for membership couplings:
/// Λ_{a₁..a_k}φ(1̂) ≤ ∇_{a₁..a_k}ψ(1̂) over every monotone path of distinct
/// elements.
///
/// Violations are searched in two passes, each breadth-first in
/// (length, lex) order: first among paths whose every step brings new
/// ψ-support into the generated down-set (those witnesses pair each
/// λ-difference step with an actual drop on the right-hand side), then,
/// if that family is clean, over the exhaustive path family. The first
/// violation found is returned as the certificate.
pub fn comp_condition(phi: &LatticeFn, psi_cdf: &LatticeFn) -> Result<ConditionOutcome> {
    check_m1_capacity(phi)?;
    let f_psi = check_cdf(psi_cdf)?;
    match comp_search(phi, psi_cdf, &f_psi, true)? {
        ConditionOutcome::Violated(seq) => Ok(ConditionOutcome::Violated(seq)),
        ConditionOutcome::Holds => comp_search(phi, psi_cdf, &f_psi, false),
    }
}

/// Feasibility of a joint law on {(V, y) : y ∈ V} with up-set marginal
/// projecting to φ and element marginal with cdf ψ.
pub fn membership_coupling(
    ideals: &Arc<IdealLattice>,
    phi: &LatticeFn,
    psi_cdf: &LatticeFn,
) -> Result<Coupling> {
    check_m1_capacity(phi)?;
    let f_psi = check_cdf(psi_cdf)?;
    let cells = live_cells(ideals, phi, &f_psi, true);
    let mut lp = LinearProgram::minimize(vec![Rational::zero(); cells.len()]);
    coupling_rows(ideals, phi, &f_psi, &cells, &mut lp);
    match lp.feasible()? {
        None => Ok(Coupling::Infeasible),
        Some(point) => {
            let atoms = cells
                .iter()
                .zip(point)
                .map(|(&(v, y), m)| (v, y, m))
                .collect();
            Ok(Coupling::Feasible(JointPmf::new(ideals.clone(), atoms)))
        }
    }
}

/// A dense weight function on 𝓛 × L.
#[derive(Debug, Clone)]
pub struct JointFn {
    weights: Vec<Vec<Rational>>,
}

impl JointFn {
    pub fn new(ideals: &IdealLattice, weights: Vec<Vec<Rational>>) -> Result<JointFn> {
        if weights.len() != ideals.len()
            || weights.iter().any(|row| row.len() != ideals.base().len())
        {
            return Err(Error::DimensionMismatch("one weight per (node, element) cell"));
        }
        Ok(JointFn { weights })
    }

    pub fn from_fn(ideals: &IdealLattice, f: impl Fn(usize, Elem) -> Rational) -> JointFn {
        let base = ideals.base();
        let weights = (0..ideals.len())
            .map(|v| base.elements().map(|y| f(v, y)).collect())
            .collect();
        JointFn { weights }
    }

    /// The membership indicator w₁(V, y) = χ_{y ∈ V}.
    pub fn membership_indicator(ideals: &IdealLattice) -> JointFn {
        JointFn::from_fn(ideals, |v, y| {
            if ideals.node(v).contains(y) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn get(&self, v: usize, y: Elem) -> &Rational {
        &self.weights[v][y.index()]
    }
}

/// Cells (V, y) that can carry mass at all: the equality marginals with
/// nonnegative variables force q(V, ·) = 0 whenever V contains an element
/// of zero φ-mass, and q(·, y) = 0 whenever y carries no ψ-mass. Dropping
/// those cells changes no feasible point and no objective value.
fn live_cells(
    ideals: &IdealLattice,
    phi: &LatticeFn,
    f_psi: &LatticeFn,
    membership_only: bool,
) -> Vec<(usize, Elem)> {
    let base = ideals.base();
    let positive = Subset::from_elems(
        &base.elements().filter(|&x| !phi.get(x).is_zero()).collect::<Vec<_>>(),
    );
    (0..ideals.len())
        .filter(|&v| ideals.node(v).members().is_subset_of(positive))
        .flat_map(|v| base.elements().map(move |y| (v, y)))
        .filter(|&(_, y)| !f_psi.get(y).is_zero())
        .filter(|&(v, y)| !membership_only || ideals.node(v).contains(y))
        .collect()
}

fn coupling_rows(
    ideals: &IdealLattice,
    phi: &LatticeFn,
    f_psi: &LatticeFn,
    cells: &[(usize, Elem)],
    lp: &mut LinearProgram,
) {
    let base = ideals.base();
    for x in base.elements() {
        let coeffs = cells
            .iter()
            .map(|&(v, _)| {
                if ideals.node(v).contains(x) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        lp.add_row(coeffs, Sense::Eq, phi.get(x).clone());
    }
    for y in base.elements() {
        let coeffs = cells
            .iter()
            .map(|&(_, cy)| if cy == y { Rational::one() } else { Rational::zero() })
            .collect();
        lp.add_row(coeffs, Sense::Eq, f_psi.get(y).clone());
    }
}

/// The joint bound: the exact maximum of E[w(𝒳, Y)] over joint laws with
/// the given marginals.
pub fn joint_frechet(
    ideals: &Arc<IdealLattice>,
    phi: &LatticeFn,
    psi_cdf: &LatticeFn,
    w: &JointFn,
) -> Result<Rational> {
    check_m1_capacity(phi)?;
    let f_psi = check_cdf(psi_cdf)?;
    let cells = live_cells(ideals, phi, &f_psi, false);
    let objective: Vec<Rational> = cells.iter().map(|&(v, y)| w.get(v, y).clone()).collect();
    let mut lp = LinearProgram::maximize(objective);
    coupling_rows(ideals, phi, &f_psi, &cells, &mut lp);
    let out = lp.solve()?;
    match out.status {
        LpStatus::Optimal => Ok(out.value),
        LpStatus::Infeasible => Err(Error::Infeasible),
        LpStatus::Unbounded => unreachable!("the coupling polytope is bounded"),
    }
}

/// The reduced dual of the membership bound, searched over monotone 0/1
/// level functions: every monotone h with 0 ≤ h ≤ 1 decomposes into
/// indicators of nested up-sets, and the marginal bound is additive along
/// nested indicator families, so the minimum of ψ(h) − S^φ(h̃) is attained
/// at h = χ_U for an up-set U (possibly empty). Must agree exactly with
/// the joint bound for the membership indicator.
pub fn joint_dual_reduced(
    ideals: &Arc<IdealLattice>,
    phi: &LatticeFn,
    psi_cdf: &LatticeFn,
) -> Result<Rational> {
    check_m1_capacity(phi)?;
    let f_psi = check_cdf(psi_cdf)?;
    let base = ideals.base().clone();
    // Only the intersection S = supp(ψ) ∩ U enters the mass term, and among
    // up-sets with the same S the largest one — the complement of the
    // down-closure of supp(ψ) ∖ S — maximizes the subtracted bound. When the
    // support is large, fall back to scanning every node of 𝓛.
    let supp: Vec<Elem> = base.elements().filter(|&y| !f_psi.get(y).is_zero()).collect();
    let candidates: Vec<Subset> = if supp.len() <= 16 {
        (0u32..(1 << supp.len()))
            .filter_map(|pick| {
                let outside: Vec<Elem> = supp
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| pick & (1 << i) == 0)
                    .map(|(_, &y)| y)
                    .collect();
                let chosen: Vec<Elem> = supp
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| pick & (1 << i) != 0)
                    .map(|(_, &y)| y)
                    .collect();
                let excluded = base.down_set(&outside);
                // S must be realizable as supp ∩ U for an up-set U.
                if chosen.iter().any(|&s| excluded.contains(s)) {
                    return None;
                }
                Some(base.complement(excluded))
            })
            .collect()
    } else {
        (0..ideals.len()).map(|u| ideals.node(u).members()).collect()
    };

    // h ≡ 0 contributes 0.
    let mut best = Rational::zero();
    for members in candidates {
        if members.is_empty() {
            continue;
        }
        let psi_mass: Rational = members.elems().map(|y| f_psi.get(y).clone()).sum();
        // h̃ for h = χ_U is the indicator of {V ⊆ U}.
        let g = IdealFn::from_fn(ideals, |v| {
            if v.members().is_subset_of(members) {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let bound = frechet_bound(ideals, phi, &g)?;
        let candidate = psi_mass - bound;
        if candidate < best {
            best = candidate;
        }
    }
    Ok(best + Rational::one())
}
