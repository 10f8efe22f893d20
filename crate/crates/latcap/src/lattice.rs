//! Finite lattices: order validation, meet/join tables, covers, Möbius
//! function, order ideals, antichains, and linear extensions.
//!
//! Elements are kept as indices into a name table; all subset bookkeeping
//! uses 64-bit masks, which caps a lattice at 64 elements. Everything is
//! immutable after construction, so lattices can be shared freely across
//! threads (the Möbius row cache is guarded by a mutex).

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Hard ceiling imposed by the mask representation.
pub const MAX_ELEMENTS: usize = 64;

/// Default cap on lattice size; downstream ideal-lattice construction is
/// exponential, so fail fast on large inputs.
pub const DEFAULT_ELEMENT_CAP: usize = 64;

/// Default cap on the Boolean-lattice generator exponent.
pub const DEFAULT_BOOLEAN_CAP: usize = 6;

/// Opaque handle to a lattice element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A set of elements of one lattice, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset {
    mask: u64,
}

impl Subset {
    pub fn empty() -> Self {
        Subset { mask: 0 }
    }

    pub fn from_elems(elems: &[Elem]) -> Self {
        let mut mask = 0u64;
        for e in elems {
            mask |= 1 << e.0;
        }
        Subset { mask }
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        Subset { mask }
    }

    pub(crate) fn mask(self) -> u64 {
        self.mask
    }

    pub fn contains(self, e: Elem) -> bool {
        self.mask & (1 << e.0) != 0
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn len(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset { mask: self.mask | other.mask }
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset { mask: self.mask & other.mask }
    }

    /// Members in increasing element order.
    pub fn elems(self) -> impl Iterator<Item = Elem> {
        let mut mask = self.mask;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let i = mask.trailing_zeros();
                mask &= mask - 1;
                Some(Elem(i))
            }
        })
    }
}

/// A finite lattice: validated partial order with total meet and join.
pub struct Lattice {
    names: Vec<String>,
    index: HashMap<String, u32>,
    /// `up[i]` is the mask of elements `j` with `i ≤ j` (including `i`).
    up: Vec<u64>,
    /// `down[i]` is the mask of elements `j` with `j ≤ i` (including `i`).
    down: Vec<u64>,
    meet_tab: Vec<u32>,
    join_tab: Vec<u32>,
    covers: Vec<(Elem, Elem)>,
    bottom: Elem,
    top: Elem,
    /// Element indices sorted bottom-up (by down-set size, then index).
    topo: Vec<u32>,
    mobius_cache: Mutex<HashMap<u32, Arc<Vec<BigInt>>>>,
}

impl Clone for Lattice {
    fn clone(&self) -> Self {
        Lattice {
            names: self.names.clone(),
            index: self.index.clone(),
            up: self.up.clone(),
            down: self.down.clone(),
            meet_tab: self.meet_tab.clone(),
            join_tab: self.join_tab.clone(),
            covers: self.covers.clone(),
            bottom: self.bottom,
            top: self.top,
            topo: self.topo.clone(),
            mobius_cache: Mutex::new(HashMap::new()),
        }
    }
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
            && self.up == other.up
            && self.meet_tab == other.meet_tab
            && self.join_tab == other.join_tab
    }
}

impl Eq for Lattice {}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Lattice")
            .field("names", &self.names)
            .field("bottom", &self.names[self.bottom.index()])
            .field("top", &self.names[self.top.index()])
            .finish()
    }
}

impl Lattice {
    /// Builds and validates a lattice from element ids and a generating
    /// relation. The relation may be the cover set or any set of pairs; the
    /// builder takes the reflexive-transitive closure, rejects cycles and
    /// pairs without a unique meet or join, and recomputes covers as the
    /// transitive reduction.
    pub fn build<S: AsRef<str>, P: AsRef<str>>(elements: &[S], relation: &[(P, P)]) -> Result<Lattice> {
        Self::build_with_cap(elements, relation, DEFAULT_ELEMENT_CAP)
    }

    /// As [`Lattice::build`], with an explicit element cap (at most 64).
    pub fn build_with_cap<S: AsRef<str>, P: AsRef<str>>(
        elements: &[S],
        relation: &[(P, P)],
        cap: usize,
    ) -> Result<Lattice> {
        let cap = cap.min(MAX_ELEMENTS);
        if elements.is_empty() {
            return Err(Error::EmptyLattice);
        }
        if elements.len() > cap {
            return Err(Error::CapExceeded { got: elements.len(), cap });
        }
        let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i as u32).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }

        let n = names.len();
        let mut up = vec![0u64; n];
        for (i, m) in up.iter_mut().enumerate() {
            *m = 1 << i;
        }
        for (a, b) in relation {
            let ia = *index
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownElement(a.as_ref().to_string()))?;
            let ib = *index
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownElement(b.as_ref().to_string()))?;
            up[ia as usize] |= 1 << ib;
        }

        // Reflexive-transitive closure to a fixpoint.
        loop {
            let mut changed = false;
            for i in 0..n {
                let mut acc = up[i];
                let mut rest = acc;
                while rest != 0 {
                    let j = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    acc |= up[j];
                }
                if acc != up[i] {
                    up[i] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }

        for i in 0..n {
            for j in (i + 1)..n {
                if up[i] & (1 << j) != 0 && up[j] & (1 << i) != 0 {
                    return Err(Error::NotAPoset(names[i].clone(), names[j].clone()));
                }
            }
        }

        let mut down = vec![0u64; n];
        for (i, &mask) in up.iter().enumerate() {
            let mut rest = mask;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                down[j] |= 1 << i;
            }
        }

        let mut meet_tab = vec![0u32; n * n];
        let mut join_tab = vec![0u32; n * n];
        for i in 0..n {
            for j in i..n {
                let meet = Self::unique_bound(down[i] & down[j], &down)
                    .ok_or_else(|| Error::NotALattice(names[i].clone(), names[j].clone(), "meet"))?;
                let join = Self::unique_bound(up[i] & up[j], &up)
                    .ok_or_else(|| Error::NotALattice(names[i].clone(), names[j].clone(), "join"))?;
                meet_tab[i * n + j] = meet;
                meet_tab[j * n + i] = meet;
                join_tab[i * n + j] = join;
                join_tab[j * n + i] = join;
            }
        }

        let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
        let bottom = (0..n).find(|&i| up[i] == full).expect("meets exist, so a bottom exists");
        let top = (0..n).find(|&i| down[i] == full).expect("joins exist, so a top exists");

        let mut covers = Vec::new();
        for (i, &mask) in up.iter().enumerate() {
            let mut rest = mask & !(1u64 << i);
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let between = up[i] & down[j] & !(1u64 << i) & !(1u64 << j);
                if between == 0 {
                    covers.push((Elem(i as u32), Elem(j as u32)));
                }
            }
        }
        covers.sort();

        let mut topo: Vec<u32> = (0..n as u32).collect();
        topo.sort_by_key(|&i| (down[i as usize].count_ones(), i));

        Ok(Lattice {
            names,
            index,
            up,
            down,
            meet_tab,
            join_tab,
            covers,
            bottom: Elem(bottom as u32),
            top: Elem(top as u32),
            topo,
            mobius_cache: Mutex::new(HashMap::new()),
        })
    }

    /// The maximum of `mask` under the order encoded by `bounds` (`down` for
    /// meets, `up` for joins), if it exists.
    fn unique_bound(mask: u64, bounds: &[u64]) -> Option<u32> {
        let mut rest = mask;
        while rest != 0 {
            let k = rest.trailing_zeros();
            rest &= rest - 1;
            if mask & !bounds[k as usize] == 0 {
                return Some(k);
            }
        }
        None
    }

    /// The Boolean lattice of subsets of `{1..n}` ordered by inclusion, with
    /// digit-string element names ("∅", "1", "12", ...).
    pub fn boolean(n: usize) -> Result<Lattice> {
        Self::boolean_with_cap(n, DEFAULT_BOOLEAN_CAP)
    }

    pub fn boolean_with_cap(n: usize, cap: usize) -> Result<Lattice> {
        if n > cap.min(DEFAULT_BOOLEAN_CAP) {
            return Err(Error::CapExceeded { got: n, cap: cap.min(DEFAULT_BOOLEAN_CAP) });
        }
        let name_of = |s: u32| -> String {
            if s == 0 {
                "∅".to_string()
            } else {
                (0..n).filter(|d| s & (1 << d) != 0).map(|d| (d + 1).to_string()).collect()
            }
        };
        let mut sets: Vec<u32> = (0..(1u32 << n)).collect();
        sets.sort_by_key(|&s| (s.count_ones(), name_of(s)));
        let names: Vec<String> = sets.iter().map(|&s| name_of(s)).collect();
        let mut covers = Vec::new();
        for &s in &sets {
            for d in 0..n {
                if s & (1 << d) == 0 {
                    covers.push((name_of(s), name_of(s | (1 << d))));
                }
            }
        }
        Self::build_with_cap(&names, &covers, MAX_ELEMENTS)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.names.len() as u32).map(Elem)
    }

    /// Elements listed bottom-up (every element comes after all elements
    /// below it); ties broken by element index.
    pub fn elements_bottom_up(&self) -> impl Iterator<Item = Elem> + '_ {
        self.topo.iter().map(|&i| Elem(i))
    }

    pub fn id(&self, e: Elem) -> &str {
        &self.names[e.index()]
    }

    pub fn elem(&self, id: &str) -> Result<Elem> {
        self.index
            .get(id)
            .map(|&i| Elem(i))
            .ok_or_else(|| Error::UnknownElement(id.to_string()))
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn covers(&self) -> &[(Elem, Elem)] {
        &self.covers
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.up[a.index()] & (1 << b.0) != 0
    }

    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.meet_tab[a.index() * self.len() + b.index()])
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.join_tab[a.index() * self.len() + b.index()])
    }

    /// Greatest lower bound of a subset; the meet of the empty set is the top.
    pub fn meet_of(&self, a: &[Elem]) -> Elem {
        a.iter().fold(self.top, |acc, &e| self.meet(acc, e))
    }

    /// Least upper bound of a subset; the join of the empty set is the bottom.
    pub fn join_of(&self, a: &[Elem]) -> Elem {
        a.iter().fold(self.bottom, |acc, &e| self.join(acc, e))
    }

    pub(crate) fn up_mask(&self, e: Elem) -> u64 {
        self.up[e.index()]
    }

    pub(crate) fn down_mask(&self, e: Elem) -> u64 {
        self.down[e.index()]
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.len() == 64 {
            !0
        } else {
            (1u64 << self.len()) - 1
        }
    }

    pub fn full_subset(&self) -> Subset {
        Subset::from_mask(self.full_mask())
    }

    pub fn complement(&self, s: Subset) -> Subset {
        Subset::from_mask(self.full_mask() & !s.mask())
    }

    /// The order ideal (down-set) generated by `a`; empty when `a` is empty.
    pub fn down_set(&self, a: &[Elem]) -> Subset {
        Subset::from_mask(a.iter().fold(0u64, |m, &e| m | self.down[e.index()]))
    }

    /// The dual order ideal (up-set) generated by `a` as a plain subset.
    pub fn up_set_members(&self, a: &[Elem]) -> Subset {
        Subset::from_mask(a.iter().fold(0u64, |m, &e| m | self.up[e.index()]))
    }

    /// Elements of `s` minimal within `s`.
    pub fn minimal_of(&self, s: Subset) -> Vec<Elem> {
        s.elems()
            .filter(|&e| self.down[e.index()] & s.mask() == 1 << e.0)
            .collect()
    }

    /// Elements of `s` maximal within `s`.
    pub fn maximal_of(&self, s: Subset) -> Vec<Elem> {
        s.elems()
            .filter(|&e| self.up[e.index()] & s.mask() == 1 << e.0)
            .collect()
    }

    pub fn is_down_set(&self, s: Subset) -> bool {
        s.elems().all(|e| self.down[e.index()] & !s.mask() == 0)
    }

    pub fn is_antichain(&self, a: &[Elem]) -> bool {
        for (k, &x) in a.iter().enumerate() {
            for &y in &a[k + 1..] {
                if x == y || self.leq(x, y) || self.leq(y, x) {
                    return false;
                }
            }
        }
        true
    }

    /// Möbius function of the lattice, by the row recursion
    /// µ(x,x) = 1 and Σ_{x ≤ z ≤ y} µ(x,z) = 0. Rows are memoized.
    pub fn mobius(&self, x: Elem, y: Elem) -> Result<Rational> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(
                self.id(x).to_string(),
                self.id(y).to_string(),
            ));
        }
        let row = self.mobius_row(x);
        Ok(Rational::from(row[y.index()].clone()))
    }

    pub(crate) fn mobius_row(&self, x: Elem) -> Arc<Vec<BigInt>> {
        let mut cache = self.mobius_cache.lock().unwrap();
        if let Some(row) = cache.get(&x.0) {
            return row.clone();
        }
        let n = self.len();
        let mut row = vec![BigInt::zero(); n];
        row[x.index()] = BigInt::from(1);
        for &yi in &self.topo {
            let y = yi as usize;
            if y == x.index() || self.up[x.index()] & (1 << yi) == 0 {
                continue;
            }
            // µ(x,y) = −Σ_{x ≤ z < y} µ(x,z)
            let mut s = BigInt::zero();
            let mut rest = self.up[x.index()] & self.down[y] & !(1u64 << yi);
            while rest != 0 {
                let z = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                s += &row[z];
            }
            row[y] = -s;
        }
        let row = Arc::new(row);
        cache.insert(x.0, row.clone());
        row
    }

    /// Möbius value by the cross-cut alternating count: Σ_k (−1)^k N_k where
    /// N_k counts k-subsets of `crosscut` whose meet is `a`. Requires
    /// `crosscut ⊆ [a,b)` dominating the half-open interval. This is an
    /// independent route kept separate from [`Lattice::mobius`].
    pub fn mobius_crosscut(&self, a: Elem, b: Elem, crosscut: &[Elem]) -> Result<Rational> {
        if !self.lt(a, b) {
            return Err(Error::NotComparable(
                self.id(a).to_string(),
                self.id(b).to_string(),
            ));
        }
        let interval = self.up[a.index()] & self.down[b.index()] & !(1u64 << b.0);
        let mut set: Vec<Elem> = Vec::new();
        let mut seen = 0u64;
        for &c in crosscut {
            if interval & (1 << c.0) == 0 {
                return Err(Error::InvalidCrosscutSet(self.id(c).to_string()));
            }
            if seen & (1 << c.0) == 0 {
                seen |= 1 << c.0;
                set.push(c);
            }
        }
        let dominated = set.iter().fold(0u64, |m, &c| m | self.down[c.index()]);
        if interval & !dominated != 0 {
            let missing = (interval & !dominated).trailing_zeros();
            return Err(Error::NotDominating(self.names[missing as usize].clone()));
        }
        if set.len() > 24 {
            return Err(Error::CapExceeded { got: set.len(), cap: 24 });
        }
        let mut total = BigInt::zero();
        for pick in 1u64..(1 << set.len()) {
            let mut m = self.top;
            let mut rest = pick;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                m = self.meet(m, set[i]);
            }
            if m == a {
                if pick.count_ones() % 2 == 1 {
                    total -= 1;
                } else {
                    total += 1;
                }
            }
        }
        Ok(Rational::from(total))
    }

    /// True iff the sequence has no inversion of the strict order
    /// (`i < j` whenever `seq[i] < seq[j]`). Elements must be distinct.
    pub fn is_monotone_path(&self, seq: &[Elem]) -> Result<bool> {
        let mut seen = 0u64;
        for &e in seq {
            if seen & (1 << e.0) != 0 {
                return Err(Error::DuplicateElement(self.id(e).to_string()));
            }
            seen |= 1 << e.0;
        }
        for (i, &x) in seq.iter().enumerate() {
            for &y in &seq[i + 1..] {
                if self.lt(y, x) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The dual lattice: order reversed, meet and join swapped.
    pub fn dual(&self) -> Lattice {
        let n = self.len();
        let mut covers: Vec<(Elem, Elem)> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        covers.sort();
        let mut topo: Vec<u32> = (0..n as u32).collect();
        topo.sort_by_key(|&i| (self.up[i as usize].count_ones(), i));
        Lattice {
            names: self.names.clone(),
            index: self.index.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
            meet_tab: self.join_tab.clone(),
            join_tab: self.meet_tab.clone(),
            covers,
            bottom: self.top,
            top: self.bottom,
            topo,
            mobius_cache: Mutex::new(HashMap::new()),
        }
    }

    /// Lazily enumerates all linear extensions in lexicographic order of
    /// element index.
    pub fn linear_extensions(&self) -> LinearExtensions<'_> {
        LinearExtensions { lat: self, prefix: Vec::new(), cursors: vec![0], used: 0 }
    }

    /// Lazily enumerates all nonempty antichains in lexicographic order of
    /// their sorted index lists.
    pub fn antichains(&self) -> Antichains<'_> {
        Antichains { lat: self, current: Vec::new(), cursors: vec![0] }
    }
}

/// Iterator over linear extensions; each item is a monotone arrangement of
/// the whole lattice.
pub struct LinearExtensions<'a> {
    lat: &'a Lattice,
    prefix: Vec<u32>,
    cursors: Vec<u32>,
    used: u64,
}

impl Iterator for LinearExtensions<'_> {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Self::Item> {
        let n = self.lat.len() as u32;
        loop {
            let depth = self.cursors.len().checked_sub(1)?;
            let start = self.cursors[depth];
            // Next unused element whose strict down-set is exhausted.
            let candidate = (start..n).find(|&c| {
                self.used & (1 << c) == 0
                    && self.lat.down[c as usize] & !(1 << c) & !self.used == 0
            });
            match candidate {
                Some(c) => {
                    self.cursors[depth] = c + 1;
                    self.prefix.push(c);
                    self.used |= 1 << c;
                    if self.prefix.len() == n as usize {
                        let out = self.prefix.iter().map(|&i| Elem(i)).collect();
                        let c = self.prefix.pop().unwrap();
                        self.used &= !(1 << c);
                        return Some(out);
                    }
                    self.cursors.push(0);
                }
                None => {
                    self.cursors.pop();
                    {
                        let c = self.prefix.pop()?;
                        self.used &= !(1 << c)
                    }
                }
            }
        }
    }
}

/// Iterator over nonempty antichains as sorted element lists.
pub struct Antichains<'a> {
    lat: &'a Lattice,
    current: Vec<u32>,
    cursors: Vec<u32>,
}

impl Iterator for Antichains<'_> {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Self::Item> {
        let n = self.lat.len() as u32;
        loop {
            let depth = self.cursors.len().checked_sub(1)?;
            let start = self.cursors[depth];
            let candidate = (start..n).find(|&c| {
                self.current.iter().all(|&g| {
                    self.lat.up[g as usize] & (1 << c) == 0
                        && self.lat.down[g as usize] & (1 << c) == 0
                })
            });
            match candidate {
                Some(c) => {
                    self.cursors[depth] = c + 1;
                    self.current.push(c);
                    self.cursors.push(c + 1);
                    return Some(self.current.iter().map(|&i| Elem(i)).collect());
                }
                None => {
                    self.cursors.pop();
                    self.current.pop()?;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn b3() -> Lattice {
        Lattice::boolean(3).unwrap()
    }

    #[test]
    fn singleton_lattice() {
        let l = Lattice::build(&["e"], &[] as &[(&str, &str)]).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l.bottom(), l.top());
        assert_eq!(l.id(l.bottom()), "e");
    }

    #[test]
    fn boolean_three_matches_naming() {
        let l = b3();
        assert_eq!(l.len(), 8);
        assert_eq!(l.id(l.bottom()), "∅");
        assert_eq!(l.id(l.top()), "123");
        let names: Vec<&str> = l.elements().map(|e| l.id(e)).collect();
        assert_eq!(names, ["∅", "1", "2", "3", "12", "13", "23", "123"]);
    }

    #[test]
    fn boolean_four_cover_count() {
        // n·2^(n−1) covers, by enumeration.
        let l = Lattice::boolean(4).unwrap();
        assert_eq!(l.len(), 16);
        assert_eq!(l.covers().len(), 32);
    }

    #[test]
    fn boolean_zero_is_singleton() {
        let l = Lattice::boolean(0).unwrap();
        assert_eq!(l.len(), 1);
    }

    #[test]
    fn boolean_cap() {
        assert!(matches!(Lattice::boolean(7), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn diamond_minus_top_is_not_a_lattice() {
        let err = Lattice::build(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap_err();
        assert_eq!(err, Error::NotALattice("b".into(), "c".into(), "join"));
    }

    #[test]
    fn cycle_is_not_a_poset() {
        let err = Lattice::build(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert_eq!(err.code(), "NotAPoset");
    }

    #[test]
    fn relation_may_be_any_generating_set() {
        // Full order relation instead of covers; closure and reduction agree.
        let chain = Lattice::build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        let a = chain.elem("a").unwrap();
        let c = chain.elem("c").unwrap();
        assert!(chain.leq(a, c));
        assert_eq!(chain.covers().len(), 2);
    }

    #[test]
    fn meets_and_joins_match_brute_force() {
        let l = b3();
        for x in l.elements() {
            for y in l.elements() {
                let lower: Vec<Elem> = l
                    .elements()
                    .filter(|&z| l.leq(z, x) && l.leq(z, y))
                    .collect();
                let glb = lower
                    .iter()
                    .copied()
                    .find(|&m| lower.iter().all(|&z| l.leq(z, m)))
                    .unwrap();
                assert_eq!(l.meet(x, y), glb);
                let upper: Vec<Elem> = l
                    .elements()
                    .filter(|&z| l.leq(x, z) && l.leq(y, z))
                    .collect();
                let lub = upper
                    .iter()
                    .copied()
                    .find(|&m| upper.iter().all(|&z| l.leq(m, z)))
                    .unwrap();
                assert_eq!(l.join(x, y), lub);
            }
        }
    }

    #[test]
    fn meet_of_subsets() {
        let l = b3();
        let e = |s: &str| l.elem(s).unwrap();
        assert_eq!(l.meet_of(&[e("12"), e("13")]), e("1"));
        assert_eq!(l.meet_of(&[]), l.top());
        assert_eq!(l.meet_of(&[e("1"), e("23")]), l.bottom());
    }

    #[test]
    fn mobius_values_on_b3() {
        let l = b3();
        let e = |s: &str| l.elem(s).unwrap();
        assert_eq!(l.mobius(e("1"), e("1")).unwrap(), rat(1, 1));
        assert_eq!(l.mobius(e("∅"), e("123")).unwrap(), rat(-1, 1));
        assert_eq!(l.mobius(e("1"), e("13")).unwrap(), rat(-1, 1));
        assert_eq!(l.mobius(e("∅"), e("12")).unwrap(), rat(1, 1));
        assert!(l.mobius(e("1"), e("23")).is_err());
    }

    #[test]
    fn mobius_row_sums_vanish() {
        let l = b3();
        for x in l.elements() {
            for y in l.elements() {
                if !l.lt(x, y) {
                    continue;
                }
                let mut s = Rational::from(BigInt::zero());
                for z in l.elements() {
                    if l.leq(x, z) && l.leq(z, y) {
                        s += l.mobius(x, z).unwrap();
                    }
                }
                assert!(s.is_zero(), "row sum must vanish for {} < {}", l.id(x), l.id(y));
            }
        }
    }

    #[test]
    fn crosscut_on_b3() {
        let l = b3();
        let e = |s: &str| l.elem(s).unwrap();
        // Co-atoms dominate [∅, 123).
        let c = [e("12"), e("13"), e("23")];
        assert_eq!(l.mobius_crosscut(e("∅"), e("123"), &c).unwrap(), rat(-1, 1));
        // Atoms below 12: N₁ = 0, N₂ = 1.
        assert_eq!(l.mobius_crosscut(e("∅"), e("12"), &[e("1"), e("2")]).unwrap(), rat(1, 1));
        // A covering pair with the trivial cross-cut.
        assert_eq!(l.mobius_crosscut(e("1"), e("12"), &[e("1")]).unwrap(), rat(-1, 1));
        // {12, 13} does not dominate 23 in [∅, 123).
        let err = l.mobius_crosscut(e("∅"), e("123"), &[e("12"), e("13")]).unwrap_err();
        assert_eq!(err.code(), "NotDominating");
    }

    #[test]
    fn down_sets() {
        let l4 = Lattice::boolean(4).unwrap();
        let e = |s: &str| l4.elem(s).unwrap();
        let d = l4.down_set(&[e("12"), e("234")]);
        let names: Vec<&str> = d.elems().map(|x| l4.id(x)).collect();
        assert_eq!(names, ["∅", "1", "2", "3", "4", "12", "23", "24", "34", "234"]);
        assert_eq!(l4.down_set(&[l4.top()]).len(), 16);
        assert!(l4.down_set(&[]).is_empty());
    }

    #[test]
    fn linear_extensions_of_chain_and_square() {
        let chain = Lattice::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let exts: Vec<Vec<Elem>> = chain.linear_extensions().collect();
        assert_eq!(exts.len(), 1);
        assert_eq!(exts[0].len(), 3);

        let b2 = Lattice::boolean(2).unwrap();
        assert_eq!(b2.linear_extensions().count(), 2);

        let l = b3();
        let first = l.linear_extensions().next().unwrap();
        assert_eq!(first.first().copied(), Some(l.bottom()));
        assert_eq!(first.last().copied(), Some(l.top()));
        for ext in l.linear_extensions() {
            assert_eq!(ext.len(), l.len());
            assert!(l.is_monotone_path(&ext).unwrap());
        }
        // Number of linear extensions of the three-element Boolean lattice.
        assert_eq!(l.linear_extensions().count(), 48);
    }

    #[test]
    fn monotone_path_checks() {
        let l4 = Lattice::boolean(4).unwrap();
        let e = |s: &str| l4.elem(s).unwrap();
        assert!(l4.is_monotone_path(&[e("34"), e("12"), e("234")]).unwrap());
        assert!(!l4.is_monotone_path(&[e("234"), e("34")]).unwrap());
        assert!(l4.is_monotone_path(&[e("12")]).unwrap());
        assert!(matches!(
            l4.is_monotone_path(&[e("12"), e("12")]),
            Err(Error::DuplicateElement(_))
        ));
    }

    #[test]
    fn dual_is_an_involution() {
        let l = b3();
        let d = l.dual();
        assert_eq!(d.id(d.bottom()), "123");
        assert_eq!(d.dual(), l);

        let chain = Lattice::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let dc = chain.dual();
        assert!(dc.leq(dc.elem("c").unwrap(), dc.elem("a").unwrap()));
    }

    #[test]
    fn antichain_enumeration_counts() {
        // Nonempty antichains of B₃ = nodes of its ideal lattice = 19.
        assert_eq!(b3().antichains().count(), 19);
        // Dedekind count for B₄ minus the empty antichain.
        assert_eq!(Lattice::boolean(4).unwrap().antichains().count(), 167);
        for a in b3().antichains() {
            assert!(b3().is_antichain(&a));
        }
    }

    #[test]
    fn minimal_and_maximal() {
        let l = b3();
        let e = |s: &str| l.elem(s).unwrap();
        let s = Subset::from_elems(&[e("12"), e("123"), e("1")]);
        assert_eq!(l.minimal_of(s), vec![e("1")]);
        assert_eq!(l.maximal_of(s), vec![e("123")]);
    }
}
