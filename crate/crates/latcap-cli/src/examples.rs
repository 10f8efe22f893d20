//! The `paper-examples` command: re-derives every bundled worked example
//! from the shipped fixture files and reports pass/fail per example.

use std::collections::BTreeSet;
use std::sync::Arc;

use latcap::capacity::{cdf_from_mass, classify, nabla, LatticeFn};
use latcap::frechet::{frechet_bound_at, successive_lambda};
use latcap::ideal::{greedy_extension, is_mobius_extension, mobius_extension, IdealLattice, UpSet};
use latcap::lattice::Elem;
use latcap::rational::rat;
use latcap::stochastic::{
    comp_condition, membership_coupling, ConditionOutcome, Coupling, JointPmf,
};

use crate::problem::{CliResult, Problem};

pub const B3_FIXTURE: &str = include_str!("../fixtures/b3.json");
pub const B4_FIXTURE: &str = include_str!("../fixtures/b4.json");

struct Outcome {
    name: &'static str,
    detail: String,
    pass: bool,
}

fn check(name: &'static str, run: impl FnOnce() -> Result<String, String>) -> Outcome {
    match run() {
        Ok(detail) => Outcome { name, detail, pass: true },
        Err(detail) => Outcome { name, detail, pass: false },
    }
}

macro_rules! expect {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn eq<T: PartialEq + std::fmt::Debug>(got: T, want: T, what: &str) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

pub fn run() -> CliResult<bool> {
    let b3 = Problem::parse("fixtures/b3.json", B3_FIXTURE.as_bytes(), None)?;
    let b4 = Problem::parse("fixtures/b4.json", B4_FIXTURE.as_bytes(), None)?;
    let ideals3 = Arc::new(IdealLattice::build(&b3.lattice)?);
    let ideals4 = Arc::new(IdealLattice::build(&b4.lattice)?);

    let outcomes = vec![
        check("ideal-lattice-of-b3", || {
            let expected: BTreeSet<Vec<&str>> = [
                vec!["∅"],
                vec!["1", "2", "3"],
                vec!["1", "2"],
                vec!["1", "3"],
                vec!["2", "3"],
                vec!["1", "23"],
                vec!["2", "13"],
                vec!["3", "12"],
                vec!["1"],
                vec!["2"],
                vec!["3"],
                vec!["12", "13", "23"],
                vec!["12", "13"],
                vec!["12", "23"],
                vec!["13", "23"],
                vec!["12"],
                vec!["13"],
                vec!["23"],
                vec!["123"],
            ]
            .into_iter()
            .collect();
            let got: BTreeSet<Vec<&str>> = ideals3
                .nodes()
                .iter()
                .map(|u| u.generators().iter().map(|&g| b3.lattice.id(g)).collect())
                .collect();
            eq(ideals3.len(), 19, "node count")?;
            expect!(got == expected, "generator sets differ from the listed nineteen");
            Ok("19 up-sets with the listed generators".into())
        }),
        check("three-case-capacity-extensions", || {
            let lat = &b3.lattice;
            let e = |s: &str| lat.elem(s).unwrap();
            let triple = ideals3
                .node_of(&UpSet::generate(lat, &[e("12"), e("13"), e("23")]).unwrap())
                .unwrap();
            let top_node = ideals3.principal(e("123"));
            for name in ["phi_1_4", "phi_1_3", "phi_1_2", "phi_2_3"] {
                let phi = &b3.capacities[name];
                let c = phi.get(e("12")).clone();
                let ext = greedy_extension(&ideals3, phi).map_err(|e| e.to_string())?;
                for u in 0..ideals3.len() {
                    let expected = if u == top_node {
                        rat(1, 1)
                    } else if ideals3.le(triple, u) {
                        c.clone()
                    } else {
                        rat(0, 1)
                    };
                    eq(ext.evaluate(u), expected, &format!("{name} at node {u}"))?;
                }
                eq(ext.project(), phi.clone(), &format!("{name} projection"))?;
            }
            Ok("greedy extensions reproduce the 1 / c / 0 table for all four c".into())
        }),
        check("mobius-extension-of-phi-1-3", || {
            let lat = &b3.lattice;
            let e = |s: &str| lat.elem(s).unwrap();
            let third = &b3.capacities["phi_1_3"];
            let ext = mobius_extension(&ideals3, third).map_err(|e| e.to_string())?;
            for s in ["12", "13", "23"] {
                let node = ideals3.principal(e(s));
                eq(ext.pmf().get(&node).cloned(), Some(rat(1, 3)), &format!("mass at ⟨{s}⟩*"))?;
            }
            eq(ext.pmf().len(), 3, "atom count")?;
            let mut pairs = 0;
            for a in lat.elements() {
                for bpt in lat.elements().filter(|&b| b > a) {
                    let u = UpSet::generate(lat, &[a, bpt]).unwrap();
                    eq(
                        ext.evaluate_upset(&u),
                        third.get(lat.meet(a, bpt)).clone(),
                        "pair value",
                    )?;
                    pairs += 1;
                }
            }
            eq(pairs, 28, "pair count")?;
            expect!(
                is_mobius_extension(&ext, third).map_err(|e| e.to_string())?,
                "pair criterion rejected the construction"
            );
            Ok("pmf is 1/3 on the three principal co-atoms; pair values match on all 28 pairs".into())
        }),
        check("frechet-bound-tables", || {
            let lat = &b3.lattice;
            let e = |s: &str| lat.elem(s).unwrap();
            let node = |gens: &[&str]| {
                let elems: Vec<Elem> = gens.iter().map(|s| e(s)).collect();
                ideals3.node_of(&UpSet::generate(lat, &elems).unwrap()).unwrap()
            };
            let top = node(&["123"]);
            let principal = [node(&["12"]), node(&["13"]), node(&["23"])];
            let pair_nodes = [node(&["12", "13"]), node(&["12", "23"]), node(&["13", "23"])];
            let mut t23 = Vec::new();
            let mut t12 = Vec::new();
            for u in 0..ideals3.len() {
                t23.push(
                    frechet_bound_at(&ideals3, &b3.capacities["phi_2_3"], u)
                        .map_err(|e| e.to_string())?,
                );
                t12.push(
                    frechet_bound_at(&ideals3, &b3.capacities["phi_1_2"], u)
                        .map_err(|e| e.to_string())?,
                );
            }
            for u in 0..ideals3.len() {
                let want23 = if u == top {
                    rat(1, 1)
                } else if principal.contains(&u) {
                    rat(2, 3)
                } else if pair_nodes.contains(&u) {
                    rat(1, 3)
                } else {
                    rat(0, 1)
                };
                eq(t23[u].clone(), want23, &format!("B_2/3 at node {u}"))?;
                let want12 = if u == top {
                    rat(1, 1)
                } else if principal.contains(&u) {
                    rat(1, 2)
                } else {
                    rat(0, 1)
                };
                eq(t12[u].clone(), want12, &format!("B_1/2 at node {u}"))?;
            }
            let ideal_lat = Arc::new(ideals3.as_lattice().map_err(|e| e.to_string())?);
            let f23 = LatticeFn::new(ideal_lat.clone(), t23).map_err(|e| e.to_string())?;
            let f12 = LatticeFn::new(ideal_lat, t12).map_err(|e| e.to_string())?;
            expect!(classify(&f23).is_completely_monotone, "B_2/3 table must be completely monotone");
            expect!(!classify(&f12).is_completely_monotone, "B_1/2 table must not be completely monotone");
            Ok("both bound tables match; monotonicity classes as stated".into())
        }),
        check("order-dependent-lambda", || {
            let lat = &b4.lattice;
            let e = |s: &str| lat.elem(s).unwrap();
            let phi = &b4.capacities["phi"];
            let l1234 = successive_lambda(phi, &[e("12"), e("34")]).map_err(|e| e.to_string())?;
            let l3412 = successive_lambda(phi, &[e("34"), e("12")]).map_err(|e| e.to_string())?;
            eq(l1234.get(e("234")).clone(), rat(1, 3), "Λ_{12,34} at 234")?;
            eq(l3412.get(e("234")).clone(), rat(1, 6), "Λ_{34,12} at 234")?;
            for x in lat.elements().filter(|&x| x != e("234")) {
                let want = match lat.id(x) {
                    "1234" => rat(2, 3),
                    "124" => rat(1, 3),
                    "13" | "23" | "123" | "134" => rat(1, 6),
                    _ => rat(0, 1),
                };
                eq(l1234.get(x).clone(), want.clone(), &format!("Λ_{{12,34}} at {}", lat.id(x)))?;
                eq(l3412.get(x).clone(), want, &format!("Λ_{{34,12}} at {}", lat.id(x)))?;
            }
            Ok("1/3 vs 1/6 at 234; identical tables elsewhere".into())
        }),
        check("membership-coupling-example", || {
            let lat = &b4.lattice;
            let e = |s: &str| lat.elem(s).unwrap();
            let phi = &b4.capacities["phi"];
            let psi = b4.psi.as_ref().expect("fixture has psi");
            let path = [e("34"), e("12"), e("234")];
            let lam = successive_lambda(phi, &path).map_err(|e| e.to_string())?;
            eq(lam.get(lat.top()).clone(), rat(1, 2), "Λ_{34,12,234} at top")?;
            eq(
                nabla(psi, &path, lat.top()).map_err(|e| e.to_string())?,
                rat(1, 3),
                "∇_{34,12,234} of psi at top",
            )?;
            match comp_condition(phi, psi).map_err(|e| e.to_string())? {
                ConditionOutcome::Violated(witness) => {
                    eq(witness, path.to_vec(), "witness path")?;
                }
                ConditionOutcome::Holds => return Err("comparison condition unexpectedly holds".into()),
            }
            expect!(
                matches!(
                    membership_coupling(&ideals4, phi, psi).map_err(|e| e.to_string())?,
                    Coupling::Feasible(_)
                ),
                "membership coupling must be feasible"
            );
            // The listed joint mass replays as a witness.
            let node = |gens: &[&str]| {
                let elems: Vec<Elem> = gens.iter().map(|s| e(s)).collect();
                ideals4.node_of(&UpSet::generate(lat, &elems).unwrap()).unwrap()
            };
            let gamma = JointPmf::from_atoms(
                ideals4.clone(),
                vec![
                    (node(&["12"]), e("12"), rat(1, 6)),
                    (node(&["13", "23", "34"]), e("34"), rat(1, 6)),
                    (node(&["13", "23"]), e("234"), rat(1, 6)),
                    (node(&["234"]), e("234"), rat(1, 6)),
                    (node(&["124"]), e("124"), rat(1, 3)),
                ],
            );
            expect!(gamma.supported_on_membership(), "listed mass must live on membership cells");
            eq(gamma.total_mass(), rat(1, 1), "total mass")?;
            eq(gamma.upset_marginal().map_err(|e| e.to_string())?.project(), phi.clone(), "first marginal")?;
            eq(cdf_from_mass(&gamma.element_marginal()), psi.clone(), "second marginal")?;
            Ok("condition fails on (34,12,234) with 1/2 > 1/3, yet the listed coupling replays".into())
        }),
    ];

    let mut all_pass = true;
    for o in &outcomes {
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("{status} {} — {}", o.name, o.detail);
        all_pass &= o.pass;
    }
    if all_pass {
        println!("all {} examples reproduced", outcomes.len());
    }
    Ok(all_pass)
}
