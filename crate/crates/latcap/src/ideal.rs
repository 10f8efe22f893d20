//! The distributive lattice of nonempty dual order ideals (up-sets) under
//! reverse inclusion, and completely monotone extensions living on it.
//!
//! Nodes are keyed by their canonical generator: the antichain of minimal
//! elements. Extensions store only their probability mass function; values
//! are accumulated on demand.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::capacity::{check_m1, mobius_inverse, LatticeFn};
use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice, Subset};
use crate::rational::Rational;

/// Default cap on the number of up-sets enumerated.
pub const DEFAULT_IDEAL_CAP: usize = 200_000;

/// A nonempty dual order ideal, canonically represented by the antichain of
/// its minimal elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct UpSet {
    generators: Vec<Elem>,
    members: Subset,
}

impl UpSet {
    /// The up-set generated by a nonempty set, with the generator reduced to
    /// minimal elements. Reduction is idempotent and order-independent.
    pub fn generate(lat: &Lattice, gens: &[Elem]) -> Result<UpSet> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerator);
        }
        let members = lat.up_set_members(gens);
        let generators = lat.minimal_of(members);
        Ok(UpSet { generators, members })
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn members(&self) -> Subset {
        self.members
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e)
    }

    /// Paper-style rendering: `⟨12,13⟩*`.
    pub fn render(&self, lat: &Lattice) -> String {
        let names: Vec<&str> = self.generators.iter().map(|&g| lat.id(g)).collect();
        format!("⟨{}⟩*", names.join(","))
    }
}

/// The lattice 𝓛 of all nonempty up-sets of a base lattice, ordered by
/// reverse inclusion (V ⪯ U iff V ⊇ U).
pub struct IdealLattice {
    base: Arc<Lattice>,
    nodes: Vec<UpSet>,
    by_members: HashMap<u64, usize>,
    principal: Vec<usize>,
}

impl IdealLattice {
    pub fn build(base: &Arc<Lattice>) -> Result<IdealLattice> {
        Self::build_with_cap(base, DEFAULT_IDEAL_CAP)
    }

    /// Enumerates antichains in lexicographic element order; errors out with
    /// the count reached once `cap` is exceeded.
    pub fn build_with_cap(base: &Arc<Lattice>, cap: usize) -> Result<IdealLattice> {
        let mut nodes = Vec::new();
        let mut by_members = HashMap::new();
        for antichain in base.antichains() {
            if nodes.len() == cap {
                return Err(Error::CapExceeded { got: cap + 1, cap });
            }
            let members = base.up_set_members(&antichain);
            by_members.insert(members.mask(), nodes.len());
            nodes.push(UpSet { generators: antichain, members });
        }
        let principal = base
            .elements()
            .map(|e| by_members[&base.up_mask(e)])
            .collect();
        Ok(IdealLattice { base: base.clone(), nodes, by_members, principal })
    }

    pub fn base(&self) -> &Arc<Lattice> {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn node(&self, i: usize) -> &UpSet {
        &self.nodes[i]
    }

    pub fn nodes(&self) -> &[UpSet] {
        &self.nodes
    }

    /// Index of the node with the given member set, if any.
    pub fn node_by_members(&self, members: Subset) -> Option<usize> {
        self.by_members.get(&members.mask()).copied()
    }

    pub fn node_of(&self, upset: &UpSet) -> Option<usize> {
        self.node_by_members(upset.members())
    }

    /// Node of the principal up-set generated by `e`.
    pub fn principal(&self, e: Elem) -> usize {
        self.principal[e.index()]
    }

    /// Reverse inclusion: `i ⪯ j` iff the `i` up-set contains the `j` one.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.nodes[j].members.is_subset_of(self.nodes[i].members)
    }

    /// The minimum of 𝓛 (the whole base lattice, generated by the bottom).
    pub fn minimum(&self) -> usize {
        self.principal(self.base.bottom())
    }

    /// The maximum of 𝓛 (the singleton up-set of the top).
    pub fn maximum(&self) -> usize {
        self.principal(self.base.top())
    }

    /// Materializes 𝓛 as a [`Lattice`] whose element ids are the rendered
    /// generators. Limited to 64 nodes by the mask representation.
    pub fn as_lattice(&self) -> Result<Lattice> {
        let names: Vec<String> = self.nodes.iter().map(|u| u.render(&self.base)).collect();
        let mut relation = Vec::new();
        for i in 0..self.nodes.len() {
            for j in 0..self.nodes.len() {
                if i != j && self.le(i, j) {
                    relation.push((names[i].clone(), names[j].clone()));
                }
            }
        }
        Lattice::build_with_cap(&names, &relation, crate::lattice::MAX_ELEMENTS)
    }
}

impl std::fmt::Debug for IdealLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdealLattice")
            .field("base", &self.base)
            .field("nodes", &self.nodes.len())
            .finish()
    }
}

/// A completely monotone extension, stored as a nonnegative pmf on 𝓛.
/// Values Φ(U) = Σ_{V ⪯ U} pmf(V) are computed on demand.
#[derive(Debug, Clone)]
pub struct Extension {
    ideals: Arc<IdealLattice>,
    pmf: BTreeMap<usize, Rational>,
}

impl PartialEq for Extension {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ideals, &other.ideals) && self.pmf == other.pmf
    }
}

impl Extension {
    /// Wraps a pmf, dropping zero atoms and rejecting negative ones.
    pub fn from_pmf(ideals: Arc<IdealLattice>, pmf: BTreeMap<usize, Rational>) -> Result<Extension> {
        for mass in pmf.values() {
            if mass.is_negative() {
                return Err(Error::NegativeValue);
            }
        }
        let pmf = pmf.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        Ok(Extension { ideals, pmf })
    }

    pub fn ideals(&self) -> &Arc<IdealLattice> {
        &self.ideals
    }

    /// Nonzero atoms, keyed by node index.
    pub fn pmf(&self) -> &BTreeMap<usize, Rational> {
        &self.pmf
    }

    pub fn total_mass(&self) -> Rational {
        self.pmf.values().sum()
    }

    /// Φ at a node: cumulative mass of atoms below it in reverse inclusion,
    /// i.e. atoms whose up-set contains the node's.
    pub fn evaluate(&self, node: usize) -> Rational {
        self.evaluate_members(self.ideals.node(node).members())
    }

    pub fn evaluate_upset(&self, u: &UpSet) -> Rational {
        self.evaluate_members(u.members())
    }

    fn evaluate_members(&self, members: Subset) -> Rational {
        self.pmf
            .iter()
            .filter(|(&v, _)| members.is_subset_of(self.ideals.node(v).members()))
            .map(|(_, m)| m.clone())
            .sum()
    }

    /// Mass of atoms containing `x` but avoiding every element of `avoid`.
    pub fn mass_containing_avoiding(&self, x: Elem, avoid: &[Elem]) -> Rational {
        self.pmf
            .iter()
            .filter(|(&v, _)| {
                let u = self.ideals.node(v);
                u.contains(x) && avoid.iter().all(|&a| !u.contains(a))
            })
            .map(|(_, m)| m.clone())
            .sum()
    }

    /// The projection φ(x) = Φ(⟨x⟩*) = Σ {mass of atoms containing x}.
    pub fn project(&self) -> LatticeFn {
        let base = self.ideals.base().clone();
        let values = base
            .elements()
            .map(|x| {
                self.pmf
                    .iter()
                    .filter(|(&v, _)| self.ideals.node(v).contains(x))
                    .map(|(_, m)| m.clone())
                    .sum()
            })
            .collect();
        LatticeFn::new(base, values).expect("projection is total")
    }

    /// Pointwise sum of two extensions over the same ideal lattice.
    pub fn add(&self, other: &Extension) -> Extension {
        let mut pmf = self.pmf.clone();
        for (&v, m) in &other.pmf {
            *pmf.entry(v).or_insert_with(Rational::zero) += m;
        }
        Extension { ideals: self.ideals.clone(), pmf }
    }

    /// Φ as a function on the materialized 𝓛 lattice, node order preserved.
    pub fn values_on_ideals(&self) -> Vec<Rational> {
        (0..self.ideals.len()).map(|i| self.evaluate(i)).collect()
    }
}

fn check_base(ideals: &IdealLattice, phi: &LatticeFn) -> Result<()> {
    if !Arc::ptr_eq(ideals.base(), phi.lattice()) && ideals.base() != phi.lattice() {
        return Err(Error::DimensionMismatch("function and ideal lattice share a base"));
    }
    Ok(())
}

/// The greedy (level-set) extension of a nonnegative monotone function:
/// each distinct positive value `rᵢ` contributes mass `rᵢ − rᵢ₋₁` on the
/// up-set {φ > rᵢ₋₁}. Projects back to φ exactly, with total mass φ(1̂).
pub fn greedy_extension(ideals: &Arc<IdealLattice>, phi: &LatticeFn) -> Result<Extension> {
    check_base(ideals, phi)?;
    check_m1(phi)?;
    let base = ideals.base();
    let mut levels: Vec<Rational> = phi.values().iter().filter(|v| v.is_positive()).cloned().collect();
    levels.sort();
    levels.dedup();
    let mut pmf = BTreeMap::new();
    let mut prev = Rational::zero();
    for level in levels {
        let members = Subset::from_elems(
            &base
                .elements()
                .filter(|&x| *phi.get(x) > prev)
                .collect::<Vec<_>>(),
        );
        let node = ideals
            .node_by_members(members)
            .expect("level sets of a monotone function are nonempty up-sets");
        pmf.insert(node, &level - &prev);
        prev = level;
    }
    Extension::from_pmf(ideals.clone(), pmf)
}

/// The Möbius extension: the Möbius inverse of φ placed on principal
/// up-sets. Requires the inverse to be nonnegative.
pub fn mobius_extension(ideals: &Arc<IdealLattice>, phi: &LatticeFn) -> Result<Extension> {
    check_base(ideals, phi)?;
    let base = ideals.base();
    let inv = mobius_inverse(phi);
    let mut pmf = BTreeMap::new();
    for x in base.elements() {
        let m = inv.get(x);
        if m.is_negative() {
            return Err(Error::NotCompletelyMonotone(base.id(x).to_string()));
        }
        if m.is_positive() {
            pmf.insert(ideals.principal(x), m.clone());
        }
    }
    Extension::from_pmf(ideals.clone(), pmf)
}

/// Decides whether `ext` is the Möbius extension of `phi` by the pair
/// criterion Φ(⟨a,b⟩*) = φ(a ∧ b) over all unordered pairs.
pub fn is_mobius_extension(ext: &Extension, phi: &LatticeFn) -> Result<bool> {
    check_base(ext.ideals(), phi)?;
    if &ext.project() != phi {
        return Err(Error::MarginalMismatch);
    }
    let base = ext.ideals().base().clone();
    for a in base.elements() {
        for b in base.elements().filter(|&b| b > a) {
            let u = UpSet::generate(&base, &[a, b])?;
            if ext.evaluate_upset(&u) != *phi.get(base.meet(a, b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The dual-Möbius extension of a completely alternating capacity: its pmf
/// lives on complements of principal order ideals, and the pair values obey
/// Φ(⟨a,b⟩*) = φ(a) + φ(b) − φ(a ∨ b).
pub fn dual_mobius_extension(ideals: &Arc<IdealLattice>, phi: &LatticeFn) -> Result<Extension> {
    check_base(ideals, phi)?;
    if !phi.is_capacity() {
        return Err(Error::NotACapacity);
    }
    let base = ideals.base();
    let dual = Arc::new(base.dual());
    let star = LatticeFn::new(
        dual.clone(),
        phi.values().iter().map(|v| Rational::one() - v).collect(),
    )?;
    let inv = mobius_inverse(&star);
    let mut pmf = BTreeMap::new();
    for y in dual.elements() {
        let m = inv.get(y);
        if m.is_negative() {
            return Err(Error::NotCompletelyAlternating);
        }
        if m.is_positive() {
            // The complement of the principal order ideal of y in the base.
            let members = base.complement(base.down_set(&[y]));
            let node = ideals
                .node_by_members(members)
                .expect("complement of a proper principal ideal is a nonempty up-set");
            pmf.insert(node, m.clone());
        }
    }
    Extension::from_pmf(ideals.clone(), pmf)
}
