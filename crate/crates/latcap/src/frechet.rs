//! Tree functionals, the optimal pairwise lower bound λ(φ;a,b), successive
//! λ-difference operators, and marginal-constrained bounds over the ideal
//! lattice with their linear-programming duals.
//!
//! λ is defined as a maximum of the tree functional over paths, but is
//! computed by single-source shortest paths: rooting a path at its far end
//! turns the functional into a sum of nonnegative edge weights
//! w(u→v) = φ(u∨v) − φ(u), so λ(φ;a,x) = φ(x) − dist(a,x). Exhaustive path
//! maximization is kept in the test suite as an independent oracle.

use std::sync::Arc;

use num_traits::Zero;

use crate::capacity::{check_m1, LatticeFn};
use crate::error::{Error, Result};
use crate::ideal::{greedy_extension, Extension, IdealLattice, UpSet};
use crate::lattice::Elem;
use crate::lp::{LinearProgram, LpStatus, Sense};
use crate::rational::Rational;

/// A tree with vertex set on the lattice; validated connected and acyclic.
#[derive(Debug, Clone)]
pub struct TreeGraph {
    vertices: Vec<Elem>,
    edges: Vec<(Elem, Elem)>,
}

impl TreeGraph {
    pub fn new(vertices: Vec<Elem>, edges: Vec<(Elem, Elem)>) -> Result<TreeGraph> {
        if vertices.is_empty() {
            return Err(Error::NotATree("a tree needs at least one vertex"));
        }
        let mut sorted = vertices.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != vertices.len() {
            return Err(Error::NotATree("duplicate vertex"));
        }
        if edges.len() + 1 != vertices.len() {
            return Err(Error::NotATree("a tree has exactly |V| − 1 edges"));
        }
        let mut seen_edges: Vec<(Elem, Elem)> = Vec::new();
        for &(a, b) in &edges {
            if a == b {
                return Err(Error::NotATree("self-loop"));
            }
            if !vertices.contains(&a) || !vertices.contains(&b) {
                return Err(Error::NotATree("edge endpoint outside the vertex set"));
            }
            let key = if a < b { (a, b) } else { (b, a) };
            if seen_edges.contains(&key) {
                return Err(Error::NotATree("duplicate edge"));
            }
            seen_edges.push(key);
        }
        let tree = TreeGraph { vertices, edges };
        if !tree.connected() {
            return Err(Error::NotATree("not connected"));
        }
        Ok(tree)
    }

    /// The path (a₁,…,aₙ): consecutive elements joined by edges.
    pub fn path(seq: &[Elem]) -> Result<TreeGraph> {
        let edges = seq.windows(2).map(|w| (w[0], w[1])).collect();
        TreeGraph::new(seq.to_vec(), edges)
    }

    pub fn vertices(&self) -> &[Elem] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(Elem, Elem)] {
        &self.edges
    }

    fn connected(&self) -> bool {
        let n = self.vertices.len();
        let pos = |e: Elem| self.vertices.iter().position(|&v| v == e).unwrap();
        let mut reach = vec![false; n];
        let mut stack = vec![0usize];
        reach[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let (pa, pb) = (pos(a), pos(b));
                for (from, to) in [(pa, pb), (pb, pa)] {
                    if from == v && !reach[to] {
                        reach[to] = true;
                        stack.push(to);
                    }
                }
            }
        }
        reach.into_iter().all(|r| r)
    }

    /// (child, parent) pairs of the orientation rooted at `root`.
    fn parents(&self, root: Elem) -> Result<Vec<(Elem, Elem)>> {
        if !self.vertices.contains(&root) {
            return Err(Error::RootNotInTree);
        }
        let mut parent: Vec<(Elem, Elem)> = Vec::new();
        let mut placed = vec![root];
        while placed.len() < self.vertices.len() {
            let before = placed.len();
            for &(a, b) in &self.edges {
                let a_in = placed.contains(&a);
                let b_in = placed.contains(&b);
                if a_in && !b_in {
                    parent.push((b, a));
                    placed.push(b);
                } else if b_in && !a_in {
                    parent.push((a, b));
                    placed.push(a);
                }
            }
            debug_assert!(placed.len() > before, "tree is connected");
        }
        Ok(parent)
    }
}

/// φ(G) = Σ_{a∈G} φ(a) − Σ_{{a,b}∈E(G)} φ(a∨b).
pub fn tree_value(phi: &LatticeFn, g: &TreeGraph) -> Rational {
    let lat = phi.lattice();
    let vertex_sum: Rational = g.vertices.iter().map(|&v| phi.get(v).clone()).sum();
    let edge_sum: Rational = g.edges.iter().map(|&(a, b)| phi.get(lat.join(a, b)).clone()).sum();
    vertex_sum - edge_sum
}

/// φ(G;a) = Σ_{(x,y) child→parent} [φ(x∨y) − φ(x)]; nonnegative for
/// monotone φ, and φ(G) = φ(a) − φ(G;a).
pub fn rooted_value(phi: &LatticeFn, g: &TreeGraph, root: Elem) -> Result<Rational> {
    let lat = phi.lattice();
    let mut total = Rational::zero();
    for (child, parent) in g.parents(root)? {
        total += phi.get(lat.join(child, parent)) - phi.get(child);
    }
    Ok(total)
}

/// Shortest-path distances from `a` in the complete digraph with weights
/// w(u→v) = φ(u∨v) − φ(u). Ties resolved toward the lowest element index.
fn distances_from(phi: &LatticeFn, a: Elem) -> Vec<Rational> {
    let lat = phi.lattice();
    let n = lat.len();
    let mut dist: Vec<Option<Rational>> = vec![None; n];
    let mut done = vec![false; n];
    dist[a.index()] = Some(Rational::zero());
    loop {
        let mut u: Option<usize> = None;
        for i in 0..n {
            if done[i] || dist[i].is_none() {
                continue;
            }
            match u {
                None => u = Some(i),
                Some(j) => {
                    if dist[i].as_ref().unwrap() < dist[j].as_ref().unwrap() {
                        u = Some(i);
                    }
                }
            }
        }
        let u = match u {
            Some(u) => u,
            None => break,
        };
        done[u] = true;
        let du = dist[u].clone().unwrap();
        let phi_u = phi.get(Elem(u as u32)).clone();
        for v in 0..n {
            if done[v] {
                continue;
            }
            let joined = lat.join(Elem(u as u32), Elem(v as u32));
            let cand = &du + phi.get(joined) - &phi_u;
            let better = match &dist[v] {
                None => true,
                Some(old) => cand < *old,
            };
            if better {
                dist[v] = Some(cand);
            }
        }
    }
    dist.into_iter()
        .map(|d| d.expect("complete digraph reaches everything"))
        .collect()
}

/// λ(φ;a,·) as a function of the second argument: the optimal lower bound
/// for Φ(⟨a,·⟩*) over completely monotone extensions with marginal φ.
pub fn lambda_table(phi: &LatticeFn, a: Elem) -> Result<LatticeFn> {
    check_m1(phi)?;
    let dist = distances_from(phi, a);
    let values = phi
        .lattice()
        .elements()
        .map(|x| phi.get(x) - &dist[x.index()])
        .collect();
    LatticeFn::new(phi.lattice().clone(), values)
}

/// λ(φ;a,b).
pub fn lambda_bound(phi: &LatticeFn, a: Elem, b: Elem) -> Result<Rational> {
    Ok(lambda_table(phi, a)?.get(b).clone())
}

/// The λ-difference Λ_aφ = φ − λ(φ;a,·); nonnegative, monotone, and zero
/// at `a`.
pub fn lambda_diff(phi: &LatticeFn, a: Elem) -> Result<LatticeFn> {
    check_m1(phi)?;
    // φ(x) − λ(φ;a,x) is exactly the shortest-path distance.
    LatticeFn::new(phi.lattice().clone(), distances_from(phi, a))
}

/// Iterated λ-difference in the given order. Order matters in general.
pub fn successive_lambda(phi: &LatticeFn, seq: &[Elem]) -> Result<LatticeFn> {
    if seq.is_empty() {
        return Err(Error::EmptyGenerator);
    }
    let mut seen = 0u64;
    for &e in seq {
        if seen & (1 << e.index()) != 0 {
            return Err(Error::DuplicateElement(phi.lattice().id(e).to_string()));
        }
        seen |= 1 << e.index();
    }
    check_m1(phi)?;
    let mut current = phi.clone();
    for &a in seq {
        current = lambda_diff(&current, a)?;
    }
    Ok(current)
}

/// A dense real-valued function on the ideal lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealFn {
    values: Vec<Rational>,
}

impl IdealFn {
    pub fn new(ideals: &IdealLattice, values: Vec<Rational>) -> Result<IdealFn> {
        if values.len() != ideals.len() {
            return Err(Error::DimensionMismatch("one value per ideal-lattice node"));
        }
        Ok(IdealFn { values })
    }

    pub fn from_fn(ideals: &IdealLattice, f: impl Fn(&UpSet) -> Rational) -> IdealFn {
        IdealFn { values: ideals.nodes().iter().map(f).collect() }
    }

    /// The indicator g_U(V) = χ_{V ⪯ U}, whose bound is B_φ(U).
    pub fn indicator_below(ideals: &IdealLattice, node: usize) -> IdealFn {
        let u = ideals.node(node).members();
        IdealFn::from_fn(ideals, |v| {
            if u.is_subset_of(v.members()) {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            }
        })
    }

    pub fn get(&self, node: usize) -> &Rational {
        &self.values[node]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

pub(crate) fn marginal_rows(ideals: &IdealLattice, phi: &LatticeFn, lp: &mut LinearProgram) {
    let base = ideals.base();
    for x in base.elements() {
        let coeffs = (0..ideals.len())
            .map(|v| {
                if ideals.node(v).contains(x) {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                }
            })
            .collect();
        lp.add_row(coeffs, Sense::Eq, phi.get(x).clone());
    }
}

/// B_φ(g): the exact minimum of Σ_V f(V) g(V) over nonnegative pmfs on 𝓛
/// with marginal φ. Infeasible exactly when φ is not nonnegative monotone.
pub fn frechet_bound(ideals: &Arc<IdealLattice>, phi: &LatticeFn, g: &IdealFn) -> Result<Rational> {
    let mut lp = LinearProgram::minimize(g.values.clone());
    marginal_rows(ideals, phi, &mut lp);
    let out = lp.solve()?;
    match out.status {
        LpStatus::Optimal => Ok(out.value),
        LpStatus::Infeasible => Err(Error::Infeasible),
        LpStatus::Unbounded => unreachable!("the marginal polytope is bounded"),
    }
}

/// B_φ(U) for a single node.
pub fn frechet_bound_at(ideals: &Arc<IdealLattice>, phi: &LatticeFn, node: usize) -> Result<Rational> {
    frechet_bound(ideals, phi, &IdealFn::indicator_below(ideals, node))
}

/// The dual program S^φ(g) = max { Σ_x r_x φ(x) : Σ_{x∈V} r_x ≤ g(V) ∀V },
/// solved as its own linear program over sign-free coefficients. Returns
/// the optimal value together with an optimal coefficient vector.
pub fn dual_bound(
    ideals: &Arc<IdealLattice>,
    phi: &LatticeFn,
    g: &IdealFn,
) -> Result<(Rational, LatticeFn)> {
    let base = ideals.base().clone();
    let n = base.len();
    let mut lp = LinearProgram::maximize(phi.values().to_vec());
    for j in 0..n {
        lp.set_free(j);
    }
    for v in 0..ideals.len() {
        let members = ideals.node(v).members();
        let coeffs = base
            .elements()
            .map(|x| {
                if members.contains(x) {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                }
            })
            .collect();
        lp.add_row(coeffs, Sense::Le, g.get(v).clone());
    }
    let out = lp.solve()?;
    match out.status {
        LpStatus::Optimal => {
            let r = LatticeFn::new(base, out.primal)?;
            Ok((out.value, r))
        }
        // An unbounded dual signals an infeasible marginal system.
        LpStatus::Unbounded => Err(Error::Infeasible),
        LpStatus::Infeasible => {
            unreachable!("g is finite and r = 0 satisfies every constraint with g ≥ r-form slack")
        }
    }
}

/// Builds an extension along a monotone path by stacking greedy extensions
/// of the decomposition pieces λ(φᵢ; aᵢ₊₁, ·) plus the tail φₙ. The result
/// projects to φ and reproduces every prefix λ-difference as an indicator
/// mass: Λ_{a₁..a_k}φ(x) equals the mass of up-sets containing x and
/// avoiding a₁..a_k.
pub fn construct_extension_along_path(
    ideals: &Arc<IdealLattice>,
    phi: &LatticeFn,
    seq: &[Elem],
) -> Result<Extension> {
    check_m1(phi)?;
    if seq.is_empty() {
        return Err(Error::EmptyGenerator);
    }
    if !ideals.base().is_monotone_path(seq)? {
        return Err(Error::NotMonotonePath);
    }
    let mut current = phi.clone();
    let mut total = Extension::from_pmf(ideals.clone(), Default::default())?;
    for &a in seq {
        let next = lambda_diff(&current, a)?;
        let lambda_part = current.pointwise_sub(&next);
        total = total.add(&greedy_extension(ideals, &lambda_part)?);
        current = next;
    }
    total = total.add(&greedy_extension(ideals, &current)?);
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::capacity::{classify, mobius_inverse, nabla};
    use crate::ideal::{is_mobius_extension, mobius_extension};
    use crate::lattice::Lattice;
    use crate::rational::rat;
    use crate::testutil::{b3, b4, phi_c, varphi4};

    fn ideals3() -> (Arc<Lattice>, Arc<IdealLattice>) {
        let lat = b3();
        let ideals = Arc::new(IdealLattice::build(&lat).unwrap());
        (lat, ideals)
    }

    /// Exhaustive maximization of the tree functional over simple paths,
    /// the independent oracle for λ.
    fn lambda_exhaustive(phi: &LatticeFn, a: Elem, b: Elem) -> Rational {
        let lat = phi.lattice().clone();
        let mut best: Option<Rational> = None;
        let mut consider = |seq: &[Elem]| {
            let g = TreeGraph::path(seq).unwrap();
            let v = tree_value(phi, &g);
            if best.as_ref().is_none_or(|cur| v > *cur) {
                best = Some(v);
            }
        };
        if a == b {
            consider(&[a]);
            return best.unwrap();
        }
        let mut stack: Vec<Vec<Elem>> = vec![vec![a]];
        while let Some(path) = stack.pop() {
            let last = *path.last().unwrap();
            if last == b {
                consider(&path);
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

    #[test]
    fn tree_values() {
        let lat = b3();
        let e = |s: &str| lat.elem(s).unwrap();
        let half = phi_c(&lat, rat(1, 2));
        let two_thirds = phi_c(&lat, rat(2, 3));

        let single = TreeGraph::new(vec![e("12")], vec![]).unwrap();
        assert_eq!(tree_value(&half, &single), rat(1, 2));
        assert_eq!(rooted_value(&half, &single, e("12")).unwrap(), rat(0, 1));

        let path = TreeGraph::path(&[e("12"), e("13")]).unwrap();
        assert_eq!(tree_value(&half, &path), rat(0, 1));
        assert_eq!(tree_value(&two_thirds, &path), rat(1, 3));
        assert_eq!(rooted_value(&two_thirds, &path, e("13")).unwrap(), rat(1, 3));

        // φ(G) = φ(root) − φ(G;root) for every root.
        let tree = TreeGraph::new(
            vec![e("1"), e("12"), e("13"), e("123")],
            vec![(e("1"), e("12")), (e("1"), e("13")), (e("13"), e("123"))],
        )
        .unwrap();
        for root in tree.vertices().to_vec() {
            let lhs = tree_value(&two_thirds, &tree);
            let rhs = two_thirds.get(root) - rooted_value(&two_thirds, &tree, root).unwrap();
            assert_eq!(lhs, rhs);
        }
        assert!(matches!(rooted_value(&half, &path, e("23")), Err(Error::RootNotInTree)));
    }

    #[test]
    fn tree_validation() {
        let lat = b3();
        let e = |s: &str| lat.elem(s).unwrap();
        assert!(TreeGraph::new(
            vec![e("1"), e("2"), e("3")],
            vec![(e("1"), e("2")), (e("2"), e("3")), (e("3"), e("1"))],
        )
        .is_err());
        assert!(TreeGraph::new(
            vec![e("1"), e("2"), e("3"), e("12")],
            vec![(e("1"), e("2")), (e("2"), e("3")), (e("3"), e("2"))],
        )
        .is_err());
        assert!(TreeGraph::new(vec![], vec![]).is_err());
    }

    #[test]
    fn lambda_on_b3_tables() {
        let lat = b3();
        let e = |s: &str| lat.elem(s).unwrap();
        let two_thirds = phi_c(&lat, rat(2, 3));
        let half = phi_c(&lat, rat(1, 2));
        assert_eq!(lambda_bound(&two_thirds, e("12"), e("13")).unwrap(), rat(1, 3));
        assert_eq!(lambda_bound(&half, e("12"), e("13")).unwrap(), rat(0, 1));
        for a in lat.elements() {
            assert_eq!(lambda_bound(&half, a, a).unwrap(), *half.get(a));
        }
        let decreasing = LatticeFn::from_sparse(lat.clone(), &[("∅", rat(1, 1))]).unwrap();
        assert!(matches!(lambda_bound(&decreasing, e("1"), e("2")), Err(Error::NotMonotone)));
    }

    #[test]
    fn lambda_matches_exhaustive_oracle() {
        let lat = b3();
        for c in [rat(1, 2), rat(2, 3), rat(1, 3)] {
            let phi = phi_c(&lat, c);
            for a in lat.elements() {
                let table = lambda_table(&phi, a).unwrap();
                for b in lat.elements() {
                    assert_eq!(*table.get(b), lambda_exhaustive(&phi, a, b));
                }
            }
        }
    }

    #[test]
    fn lambda_diff_properties() {
        let lat = b3();
        let two_thirds = phi_c(&lat, rat(2, 3));
        for a in lat.elements() {
            let d = lambda_diff(&two_thirds, a).unwrap();
            assert!(d.get(a).is_zero());
            assert!(d.is_monotone() && d.is_nonnegative());
            let lam = lambda_table(&two_thirds, a).unwrap();
            assert!(lam.is_monotone() && lam.is_nonnegative());
            // Decomposition φ = λ(φ;a,·) + Λ_aφ.
            for x in lat.elements() {
                assert_eq!(lam.get(x) + d.get(x), *two_thirds.get(x));
            }
        }
        // Completely monotone case: Λ_aφ(x) = φ(x) − φ(a∧x).
        let third = phi_c(&lat, rat(1, 3));
        for a in lat.elements() {
            let d = lambda_diff(&third, a).unwrap();
            for x in lat.elements() {
                assert_eq!(*d.get(x), third.get(x) - third.get(lat.meet(a, x)));
            }
        }
    }

    #[test]
    fn successive_lambda_is_order_dependent() {
        let lat4 = b4();
        let e = |s: &str| lat4.elem(s).unwrap();
        let phi = varphi4(&lat4);
        let l1234 = successive_lambda(&phi, &[e("12"), e("34")]).unwrap();
        let l3412 = successive_lambda(&phi, &[e("34"), e("12")]).unwrap();
        assert_eq!(*l1234.get(e("234")), rat(1, 3));
        assert_eq!(*l3412.get(e("234")), rat(1, 6));
        for x in lat4.elements() {
            if x == e("234") {
                continue;
            }
            let expect = match lat4.id(x) {
                "1234" => rat(2, 3),
                "124" => rat(1, 3),
                "13" | "23" | "123" | "134" => rat(1, 6),
                _ => rat(0, 1),
            };
            assert_eq!(*l1234.get(x), expect, "at {}", lat4.id(x));
            assert_eq!(*l3412.get(x), expect, "at {}", lat4.id(x));
        }
        let triple = successive_lambda(&phi, &[e("34"), e("12"), e("234")]).unwrap();
        assert_eq!(*triple.get(lat4.top()), rat(1, 2));

        assert!(matches!(
            successive_lambda(&phi, &[e("12"), e("12")]),
            Err(Error::DuplicateElement(_))
        ));
    }

    #[test]
    fn successive_lambda_drops_dominated_tail() {
        // Appending an element below an earlier one leaves the operator
        // unchanged.
        let lat = b3();
        let e = |s: &str| lat.elem(s).unwrap();
        let two_thirds = phi_c(&lat, rat(2, 3));
        let with_tail = successive_lambda(&two_thirds, &[e("12"), e("13"), e("1")]).unwrap();
        let without = successive_lambda(&two_thirds, &[e("12"), e("13")]).unwrap();
        assert_eq!(with_tail, without);
    }

    #[test]
    fn frechet_bound_tables_on_b3() {
        let (lat, ideals) = ideals3();
        let e = |s: &str| lat.elem(s).unwrap();
        let two_thirds = phi_c(&lat, rat(2, 3));
        let half = phi_c(&lat, rat(1, 2));
        let node = |gens: &[&str]| {
            let elems: Vec<Elem> = gens.iter().map(|s| e(s)).collect();
            ideals.node_of(&UpSet::generate(&lat, &elems).unwrap()).unwrap()
        };
        assert_eq!(frechet_bound_at(&ideals, &two_thirds, node(&["12", "13"])).unwrap(), rat(1, 3));
        assert_eq!(frechet_bound_at(&ideals, &half, node(&["12", "13"])).unwrap(), rat(0, 1));
        assert_eq!(frechet_bound_at(&ideals, &two_thirds, node(&["12"])).unwrap(), rat(2, 3));
        assert_eq!(frechet_bound_at(&ideals, &two_thirds, node(&["123"])).unwrap(), rat(1, 1));
        assert_eq!(
            frechet_bound_at(&ideals, &two_thirds, node(&["12", "13", "23"])).unwrap(),
            rat(0, 1)
        );

        // Infeasible marginal: not monotone.
        let broken = LatticeFn::from_sparse(lat.clone(), &[("1", rat(1, 1))]).unwrap();
        assert!(matches!(
            frechet_bound_at(&ideals, &broken, node(&["12"])),
            Err(Error::Infeasible)
        ));
    }

    #[test]
    fn frechet_bound_of_cm_capacity_is_mobius_extension() {
        let (lat, ideals) = ideals3();
        let third = phi_c(&lat, rat(1, 3));
        let ext = mobius_extension(&ideals, &third).unwrap();
        for v in 0..ideals.len() {
            assert_eq!(frechet_bound_at(&ideals, &third, v).unwrap(), ext.evaluate(v));
        }
    }

    #[test]
    fn dual_bound_agrees_and_certifies() {
        let (lat, ideals) = ideals3();
        let e = |s: &str| lat.elem(s).unwrap();
        let two_thirds = phi_c(&lat, rat(2, 3));
        let node = ideals
            .node_of(&UpSet::generate(&lat, &[e("12"), e("13")]).unwrap())
            .unwrap();
        let g = IdealFn::indicator_below(&ideals, node);
        let (value, r) = dual_bound(&ideals, &two_thirds, &g).unwrap();
        assert_eq!(value, rat(1, 3));
        assert_eq!(value, frechet_bound(&ideals, &two_thirds, &g).unwrap());
        // The coefficient vector is feasible: r(V) ≤ g(V) on every node.
        for v in 0..ideals.len() {
            let rv: Rational = ideals.node(v).members().elems().map(|x| r.get(x).clone()).sum();
            assert!(rv <= *g.get(v));
        }

        // g ≡ 1 prices the total mass.
        let ones = IdealFn::from_fn(&ideals, |_| rat(1, 1));
        let (value, _) = dual_bound(&ideals, &two_thirds, &ones).unwrap();
        assert_eq!(value, rat(1, 1));
    }

    #[test]
    fn tree_certificate_lower_bounds_frechet() {
        // The path certificate r(V) = Σ_vertices χ − Σ_edge-joins χ is dual
        // feasible for g = χ_{V ⪯ ⟨G⟩*} and prices exactly φ(G).
        let (lat, ideals) = ideals3();
        let e = |s: &str| lat.elem(s).unwrap();
        let two_thirds = phi_c(&lat, rat(2, 3));
        let g_tree = TreeGraph::path(&[e("12"), e("13"), e("23")]).unwrap();
        let gens: Vec<Elem> = g_tree.vertices().to_vec();
        let u = UpSet::generate(&lat, &gens).unwrap();
        let node = ideals.node_of(&u).unwrap();
        let g = IdealFn::indicator_below(&ideals, node);

        let mut r = vec![Rational::zero(); lat.len()];
        for &v in g_tree.vertices() {
            r[v.index()] += rat(1, 1);
        }
        for &(a, b) in g_tree.edges() {
            r[lat.join(a, b).index()] -= rat(1, 1);
        }
        for v in 0..ideals.len() {
            let rv: Rational = ideals
                .node(v)
                .members()
                .elems()
                .map(|x| r[x.index()].clone())
                .sum();
            assert!(rv <= *g.get(v), "certificate must be dual feasible");
        }
        let priced: Rational = lat
            .elements()
            .map(|x| &r[x.index()] * two_thirds.get(x))
            .sum();
        assert_eq!(priced, tree_value(&two_thirds, &g_tree));
        assert!(priced <= frechet_bound(&ideals, &two_thirds, &g).unwrap());
    }

    #[test]
    fn constructed_extension_reproduces_prefix_lambdas() {
        let lat4 = b4();
        let ideals4 = Arc::new(IdealLattice::build(&lat4).unwrap());
        let e = |s: &str| lat4.elem(s).unwrap();
        let phi = varphi4(&lat4);
        let seq = [e("34"), e("12")];
        let ext = construct_extension_along_path(&ideals4, &phi, &seq).unwrap();
        assert_eq!(ext.project(), phi);
        assert_eq!(ext.mass_containing_avoiding(e("234"), &seq), rat(1, 6));
        for k in 1..=seq.len() {
            let prefix = &seq[..k];
            let lam = successive_lambda(&phi, prefix).unwrap();
            for x in lat4.elements() {
                assert_eq!(
                    ext.mass_containing_avoiding(x, prefix),
                    *lam.get(x),
                    "prefix of length {k} at {}",
                    lat4.id(x)
                );
            }
        }
        // Single-step identity at the top.
        let (lat, ideals) = ideals3();
        let two_thirds = phi_c(&lat, rat(2, 3));
        let a1 = lat.elem("12").unwrap();
        let ext = construct_extension_along_path(&ideals, &two_thirds, &[a1]).unwrap();
        let lam = lambda_bound(&two_thirds, a1, lat.top()).unwrap();
        assert_eq!(
            ext.mass_containing_avoiding(lat.top(), &[a1]),
            two_thirds.get(lat.top()) - lam
        );
    }

    #[test]
    fn constructed_extension_on_linear_extension_is_mobius() {
        let (lat, ideals) = ideals3();
        let third = phi_c(&lat, rat(1, 3));
        let linear: Vec<Elem> = lat.linear_extensions().next().unwrap();
        let ext = construct_extension_along_path(&ideals, &third, &linear).unwrap();
        let mob = mobius_extension(&ideals, &third).unwrap();
        assert_eq!(ext.pmf(), mob.pmf());
        assert!(is_mobius_extension(&ext, &third).unwrap());
    }

    #[test]
    fn non_monotone_path_rejected() {
        let lat4 = b4();
        let e = |s: &str| lat4.elem(s).unwrap();
        let ideals4 = Arc::new(IdealLattice::build(&lat4).unwrap());
        let phi = varphi4(&lat4);
        assert!(matches!(
            construct_extension_along_path(&ideals4, &phi, &[e("234"), e("34")]),
            Err(Error::NotMonotonePath)
        ));
    }

    #[test]
    fn lambda_equals_nabla_on_completely_monotone() {
        let lat = b3();
        let third = phi_c(&lat, rat(1, 3));
        assert!(classify(&third).is_completely_monotone);
        assert!(mobius_inverse(&third).is_nonnegative());
        for a in lat.elements() {
            for b in lat.elements() {
                if a == b || !lat.is_monotone_path(&[a, b]).unwrap() {
                    continue;
                }
                let lam = successive_lambda(&third, &[a, b]).unwrap();
                for x in lat.elements() {
                    assert_eq!(*lam.get(x), nabla(&third, &[a, b], x).unwrap());
                }
            }
        }
    }
}
