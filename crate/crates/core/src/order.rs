//! Finite ordered sets and lattices: suprema and infima, adjunctions,
//! way-below and way-above, (op-)continuity, and the Scott-style topology.
//!
//! Orders need not be anti-symmetric; results that are only determined up
//! to the equivalence `x <= y <= x` return the least-index representative.

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::ultra::Ultrafilter;

/// Names `a, b, c, ...` for small carriers.
pub fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect()
}

/// A finite carrier with a reflexive-transitive relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poset {
    carrier: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    pub fn new(carrier: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = carrier.len();
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::ShapeMismatch(format!(
                "relation table must be {n}x{n}"
            )));
        }
        let p = Poset { carrier, leq };
        for x in 0..n {
            if !p.leq(x, x) {
                return Err(Error::NotAPreorder(format!(
                    "{} is not below itself",
                    p.name(x)
                )));
            }
            for y in 0..n {
                for z in 0..n {
                    if p.leq(x, y) && p.leq(y, z) && !p.leq(x, z) {
                        return Err(Error::NotAPreorder(format!(
                            "{} <= {} <= {} but not {} <= {}",
                            p.name(x),
                            p.name(y),
                            p.name(z),
                            p.name(x),
                            p.name(z)
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn from_leq_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let leq = (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect();
        Poset::new(default_names(n), leq)
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        Poset::from_leq_fn(n, |x, y| x <= y).unwrap()
    }

    pub fn antichain(n: usize) -> Self {
        Poset::from_leq_fn(n, |x, y| x == y).unwrap()
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.carrier
    }

    pub fn name(&self, x: usize) -> &str {
        &self.carrier[x]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.carrier
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn equiv(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) && self.leq(y, x)
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (0..n).all(|y| !(self.equiv(x, y) && x != y)))
    }

    /// The same carrier with the relation transposed.
    pub fn op(&self) -> Poset {
        let n = self.len();
        Poset {
            carrier: self.carrier.clone(),
            leq: (0..n).map(|x| (0..n).map(|y| self.leq[y][x]).collect()).collect(),
        }
    }

    fn is_upper_bound(&self, z: usize, set: u32) -> bool {
        bits::elems(set).all(|x| self.leq(x, z))
    }

    fn is_lower_bound(&self, z: usize, set: u32) -> bool {
        bits::elems(set).all(|x| self.leq(z, x))
    }

    /// Least upper bound of a subset, as a least-index representative.
    pub fn supremum_mask(&self, set: u32) -> Option<usize> {
        (0..self.len()).find(|&s| {
            self.is_upper_bound(s, set)
                && (0..self.len()).all(|z| !self.is_upper_bound(z, set) || self.leq(s, z))
        })
    }

    pub fn infimum_mask(&self, set: u32) -> Option<usize> {
        (0..self.len()).find(|&s| {
            self.is_lower_bound(s, set)
                && (0..self.len()).all(|z| !self.is_lower_bound(z, set) || self.leq(z, s))
        })
    }

    pub fn supremum(&self, set: &[usize]) -> Option<usize> {
        self.supremum_mask(bits::from_slice(set))
    }

    pub fn infimum(&self, set: &[usize]) -> Option<usize> {
        self.infimum_mask(bits::from_slice(set))
    }

    /// Bottom element: the supremum of the empty subset.
    pub fn bottom(&self) -> Option<usize> {
        self.supremum_mask(0)
    }

    pub fn top(&self) -> Option<usize> {
        self.infimum_mask(0)
    }

    /// Every subset, the empty one included, has a supremum.
    pub fn is_complete_lattice(&self) -> bool {
        bits::masks(self.len()).all(|m| self.supremum_mask(m).is_some())
    }

    /// Nonempty, and every pair has an upper bound inside the set.
    pub fn is_directed_up(&self, set: u32) -> bool {
        !bits::is_empty(set)
            && bits::elems(set).all(|x| {
                bits::elems(set).all(|y| {
                    bits::elems(set).any(|z| self.leq(x, z) && self.leq(y, z))
                })
            })
    }

    pub fn is_directed_down(&self, set: u32) -> bool {
        self.op().is_directed_up(set)
    }

    pub fn is_down_set(&self, set: u32) -> bool {
        (0..self.len()).all(|y| {
            !bits::elems(set).any(|x| self.leq(y, x)) || bits::contains(set, y)
        })
    }

    pub fn is_up_set(&self, set: u32) -> bool {
        self.op().is_down_set(set)
    }

    fn complete_or_err(&self) -> Result<()> {
        if self.is_complete_lattice() {
            Ok(())
        } else {
            Err(Error::NotACompleteLattice)
        }
    }

    /// `y` is way below `x`: whenever `x <= sup D` for an up-directed
    /// down-set `D`, already `y` is in `D`. Quantifies over all such `D`
    /// by literal enumeration.
    pub fn way_below(&self, y: usize, x: usize) -> Result<bool> {
        self.complete_or_err()?;
        for d in bits::masks(self.len()) {
            if !self.is_directed_up(d) || !self.is_down_set(d) {
                continue;
            }
            let sup = self.supremum_mask(d).expect("complete");
            if self.leq(x, sup) && !bits::contains(d, y) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `y` is way above `x`: the order dual of `way_below`.
    pub fn way_above(&self, y: usize, x: usize) -> Result<bool> {
        self.op().way_below(y, x)
    }

    /// Complete, and every element is the supremum of its way-below
    /// approximants.
    pub fn is_continuous_lattice(&self) -> bool {
        if !self.is_complete_lattice() {
            return false;
        }
        (0..self.len()).all(|x| {
            let approx: Vec<usize> = (0..self.len())
                .filter(|&y| self.way_below(y, x).expect("complete"))
                .collect();
            match self.supremum(&approx) {
                Some(s) => self.equiv(s, x),
                None => false,
            }
        })
    }

    pub fn is_op_continuous_lattice(&self) -> bool {
        self.op().is_continuous_lattice()
    }

    /// Scott-style open: a down-set that is unreachable by up-directed
    /// suprema. The down-set clause keeps the specialisation round trip
    /// intact on finite carriers, where the inaccessibility clause alone
    /// would make every subset open.
    pub fn scott_open(&self, set: &[usize]) -> bool {
        let a = bits::from_slice(set);
        self.scott_open_mask(a)
    }

    pub fn scott_open_mask(&self, a: u32) -> bool {
        if !self.is_down_set(a) {
            return false;
        }
        for d in bits::masks(self.len()) {
            if !self.is_directed_up(d) || !self.is_down_set(d) {
                continue;
            }
            if let Some(sup) = self.supremum_mask(d) {
                if bits::contains(a, sup) && (d & a) == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Down-closure of a subset.
    pub fn down_closure(&self, set: u32) -> u32 {
        let mut out = 0;
        for y in 0..self.len() {
            if bits::elems(set).any(|x| self.leq(y, x)) {
                out |= 1 << y;
            }
        }
        out
    }
}

/// A monotone map between finite posets, given by a value table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    pub source: Poset,
    pub target: Poset,
    pub values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source: Poset, target: Poset, values: Vec<usize>) -> Result<Self> {
        if values.len() != source.len() || values.iter().any(|&v| v >= target.len().max(1)) {
            return Err(Error::ShapeMismatch(
                "value table does not match the carriers".into(),
            ));
        }
        for x in 0..source.len() {
            for y in 0..source.len() {
                if source.leq(x, y) && !target.leq(values[x], values[y]) {
                    return Err(Error::DomainMismatch(format!(
                        "map is not monotone at ({}, {})",
                        source.name(x),
                        source.name(y)
                    )));
                }
            }
        }
        Ok(MonotoneMap { source, target, values })
    }

    pub fn identity(p: &Poset) -> Self {
        MonotoneMap {
            source: p.clone(),
            target: p.clone(),
            values: (0..p.len()).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }
}

/// Checks the unit and counit inequalities `1 <= g . f` and `f . g <= 1`
/// pointwise, for `f : X -> Y` and `g : Y -> X`.
pub fn adjoint_pair(f: &MonotoneMap, g: &MonotoneMap) -> Result<bool> {
    if f.source != g.target || f.target != g.source {
        return Err(Error::DomainMismatch(
            "adjoint candidates must go in opposite directions between the same posets".into(),
        ));
    }
    let unit = (0..f.source.len()).all(|x| f.source.leq(x, g.apply(f.apply(x))));
    let counit = (0..g.source.len()).all(|y| g.source.leq(f.apply(g.apply(y)), y));
    Ok(unit && counit)
}

/// The convergence point an op-continuous lattice assigns to an
/// ultrafilter: the meet over all member sets of the join of the member
/// set, evaluated literally.
pub fn alpha_from_lattice(p: &Poset, x: &Ultrafilter) -> Result<usize> {
    if !p.is_op_continuous_lattice() {
        return Err(Error::NotOpContinuous);
    }
    if x.base_size() != p.len() {
        return Err(Error::ShapeMismatch(
            "ultrafilter base does not match the carrier".into(),
        ));
    }
    let mut joins: u32 = 0;
    for a in bits::masks(p.len()) {
        if x.member(a) {
            let j = p.supremum_mask(a).expect("complete");
            joins |= 1 << j;
        }
    }
    Ok(p.infimum_mask(joins).expect("complete"))
}

/// All reflexive-transitive relations on `n` named elements. The test
/// suites quantify over these for tiny `n`.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let names = default_names(n);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|(x, y)| x != y)
        .collect();
    let mut out = Vec::new();
    for choice in bits::masks(pairs.len()) {
        let mut leq = vec![vec![false; n]; n];
        for (x, row) in leq.iter_mut().enumerate() {
            row[x] = true;
        }
        for (i, (x, y)) in pairs.iter().enumerate() {
            if bits::contains(choice, i) {
                leq[*x][*y] = true;
            }
        }
        if let Ok(p) = Poset::new(names.clone(), leq) {
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Poset {
        // 0 = bottom, 1 and 2 incomparable, 3 = top
        Poset::from_leq_fn(4, |x, y| x == y || x == 0 || y == 3).unwrap()
    }

    #[test]
    fn suprema_examples() {
        let c = Poset::chain(3);
        assert_eq!(c.supremum(&[0, 1]), Some(1));
        let a = Poset::antichain(2);
        assert_eq!(a.supremum(&[0, 1]), None);
        let d = diamond();
        assert_eq!(d.supremum(&[1, 2]), Some(3));
        assert_eq!(d.infimum(&[1, 2]), Some(0));
    }

    #[test]
    fn complete_lattice_examples() {
        assert!(diamond().is_complete_lattice());
        assert!(!Poset::antichain(2).is_complete_lattice());
        assert!(Poset::chain(1).is_complete_lattice());
        assert!(!Poset::new(vec![], vec![]).unwrap().is_complete_lattice());
    }

    #[test]
    fn complete_iff_binary_joins_meets_and_bounds() {
        // finite lattice criterion against the exhaustive subset scan
        for p in all_posets(4) {
            let binary = p.bottom().is_some()
                && p.top().is_some()
                && (0..p.len()).all(|x| {
                    (0..p.len()).all(|y| {
                        p.supremum(&[x, y]).is_some() && p.infimum(&[x, y]).is_some()
                    })
                });
            assert_eq!(binary, p.is_complete_lattice());
        }
    }

    #[test]
    fn way_below_examples() {
        let c = Poset::chain(3);
        assert!(c.way_below(1, 2).unwrap());
        let d = diamond();
        assert!(!d.way_below(3, 0).unwrap());
        for x in 0..d.len() {
            assert!(d.way_below(x, x).unwrap());
        }
    }

    #[test]
    fn way_below_collapses_to_leq_on_finite_lattices() {
        for p in all_posets(4).into_iter().filter(Poset::is_complete_lattice) {
            for y in 0..p.len() {
                for x in 0..p.len() {
                    assert_eq!(p.way_below(y, x).unwrap(), p.leq(y, x));
                }
            }
        }
    }

    #[test]
    fn way_below_needs_a_complete_lattice() {
        let a = Poset::antichain(2);
        assert!(matches!(a.way_below(0, 1), Err(Error::NotACompleteLattice)));
    }

    #[test]
    fn continuity_examples() {
        assert!(diamond().is_continuous_lattice());
        assert!(diamond().is_op_continuous_lattice());
        assert!(!Poset::antichain(2).is_continuous_lattice());
        // every finite complete lattice is continuous and op-continuous
        for p in all_posets(3).into_iter().filter(Poset::is_complete_lattice) {
            assert!(p.is_continuous_lattice());
            assert!(p.is_op_continuous_lattice());
        }
        // a chain under the reversed order is still a complete chain
        let rev = Poset::from_leq_fn(6, |x, y| x >= y).unwrap();
        assert!(rev.is_continuous_lattice() && rev.is_op_continuous_lattice());
    }

    #[test]
    fn scott_open_examples() {
        let c = Poset::chain(3);
        assert!(c.scott_open(&[]));
        assert!(c.scott_open(&[0, 1, 2]));
        assert!(c.scott_open(&[0]));
        assert!(!c.scott_open(&[2]));
    }

    #[test]
    fn scott_opens_form_a_topology() {
        for p in all_posets(3) {
            let opens: Vec<u32> =
                bits::masks(p.len()).filter(|&a| p.scott_open_mask(a)).collect();
            assert!(opens.contains(&0));
            assert!(opens.contains(&bits::full(p.len())));
            for &a in &opens {
                for &b in &opens {
                    assert!(opens.contains(&(a & b)));
                    assert!(opens.contains(&(a | b)));
                }
            }
        }
    }

    #[test]
    fn scott_topology_returns_the_order() {
        // specialisation reading: x <= y iff every open containing y contains x
        for p in all_posets(3) {
            let opens: Vec<u32> =
                bits::masks(p.len()).filter(|&a| p.scott_open_mask(a)).collect();
            for x in 0..p.len() {
                for y in 0..p.len() {
                    let specialisation = opens
                        .iter()
                        .all(|&a| !bits::contains(a, y) || bits::contains(a, x));
                    assert_eq!(specialisation, p.leq(x, y));
                }
            }
        }
    }

    #[test]
    fn adjoint_pair_examples() {
        let d = diamond();
        let id = MonotoneMap::identity(&d);
        assert!(adjoint_pair(&id, &id).unwrap());

        // constants: const-bottom is left adjoint to const-top, not the
        // other way around (the unit fails at the top)
        let bot = MonotoneMap::new(d.clone(), d.clone(), vec![0; 4]).unwrap();
        let top = MonotoneMap::new(d.clone(), d.clone(), vec![3; 4]).unwrap();
        assert!(adjoint_pair(&bot, &top).unwrap());
        assert!(!adjoint_pair(&top, &bot).unwrap());
    }

    #[test]
    fn truncated_addition_adjoint_to_minus_on_reversed_chain() {
        // chain levels 0..=5 under >=, the underlying order of the value
        // chain; x |-> min(x+u, top) is left adjoint to x |-> x-.u
        let k = 5usize;
        let p = Poset::from_leq_fn(k + 1, |x, y| x >= y).unwrap();
        for u in 0..=k {
            let f = MonotoneMap::new(
                p.clone(),
                p.clone(),
                (0..=k).map(|x| (x + u).min(k)).collect(),
            )
            .unwrap();
            let g = MonotoneMap::new(
                p.clone(),
                p.clone(),
                (0..=k).map(|x| x.saturating_sub(u)).collect(),
            )
            .unwrap();
            assert!(adjoint_pair(&f, &g).unwrap());
        }
    }

    #[test]
    fn adjoints_determine_each_other() {
        for p in all_posets(3) {
            let n = p.len();
            let maps: Vec<MonotoneMap> = all_maps(n)
                .into_iter()
                .filter_map(|vals| MonotoneMap::new(p.clone(), p.clone(), vals).ok())
                .collect();
            for f in &maps {
                let rights: Vec<&MonotoneMap> = maps
                    .iter()
                    .filter(|g| adjoint_pair(f, g).unwrap())
                    .collect();
                for g in &rights {
                    for g2 in &rights {
                        for y in 0..n {
                            assert!(p.equiv(g.apply(y), g2.apply(y)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn left_adjoints_preserve_existing_suprema() {
        for p in all_posets(4) {
            let n = p.len();
            let maps: Vec<MonotoneMap> = all_maps(n)
                .into_iter()
                .filter_map(|vals| MonotoneMap::new(p.clone(), p.clone(), vals).ok())
                .collect();
            for f in &maps {
                if !maps.iter().any(|g| adjoint_pair(f, g).unwrap()) {
                    continue;
                }
                for set in bits::masks(n) {
                    if let Some(s) = p.supremum_mask(set) {
                        let image = bits::elems(set).fold(0u32, |m, x| m | 1 << f.apply(x));
                        let fs = p.supremum_mask(image).expect("image sup exists");
                        assert!(p.equiv(f.apply(s), fs));
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_of_principal_is_the_point() {
        for p in [Poset::chain(3), diamond()] {
            for x in 0..p.len() {
                let uf = Ultrafilter::principal(p.len(), x).unwrap();
                assert_eq!(alpha_from_lattice(&p, &uf).unwrap(), x);
            }
        }
        let a = Poset::antichain(2);
        let uf = Ultrafilter::principal(2, 0).unwrap();
        assert!(matches!(
            alpha_from_lattice(&a, &uf),
            Err(Error::NotOpContinuous)
        ));
    }

    fn all_maps(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v: Vec<usize>| {
                    (0..n).map(move |t| {
                        let mut w = v.clone();
                        w.push(t);
                        w
                    })
                })
                .collect();
        }
        out
    }
}
