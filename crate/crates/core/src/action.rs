//! Value-chain actions on ordered sets and their equivalence with tensored
//! separated metric spaces.
//!
//! An action is stored as a full table over the chain values; actions over
//! the exact rationals have no finite representation and are rejected.

use crate::bits;
use crate::colimit::{is_cocomplete, is_tensored, tensor};
use crate::error::{Error, Result};
use crate::metric::MetricSpace;
use crate::order::Poset;
use crate::quantale::Quantale;

/// An ordered set together with an action table `act[x][u] -> element`,
/// one column per chain value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdAction {
    pub poset: Poset,
    pub quantale: Quantale,
    pub act: Vec<Vec<usize>>,
}

/// Outcome of checking the five algebra conditions, one flag each:
/// unit `x+0 ~ x`; associativity `(x+u)+v ~ x+(u+v)`; monotone in the
/// point and antitone in the value; `x+top` a bottom element; and the
/// action sending value-infima to order-joins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ActionConditions {
    pub unit: bool,
    pub associative: bool,
    pub monotone: bool,
    pub bottom: bool,
    pub distributes: bool,
}

impl ActionConditions {
    pub fn first_three(&self) -> bool {
        self.unit && self.associative && self.monotone
    }

    pub fn all(&self) -> bool {
        self.first_three() && self.bottom && self.distributes
    }
}

impl OrdAction {
    pub fn new(poset: Poset, quantale: Quantale, act: Vec<Vec<usize>>) -> Result<Self> {
        let levels = quantale.chain_len()?;
        let n = poset.len();
        if act.len() != n || act.iter().any(|row| row.len() != levels) {
            return Err(Error::ShapeMismatch(format!(
                "action table must be {n}x{levels}"
            )));
        }
        if act.iter().flatten().any(|&e| e >= n) {
            return Err(Error::ShapeMismatch("action value out of range".into()));
        }
        Ok(OrdAction { poset, quantale, act })
    }

    /// The canonical action of the value chain on itself by truncated
    /// addition, over the reversed order (the underlying order of the
    /// chain as a metric space).
    pub fn chain_on_itself(quantale: &Quantale) -> Result<OrdAction> {
        let len = quantale.chain_len()?;
        let poset = Poset::from_leq_fn(len, |x, y| x >= y)?;
        let act = (0..len)
            .map(|x| (0..len).map(|u| (x + u).min(len - 1)).collect())
            .collect();
        OrdAction::new(poset, quantale.clone(), act)
    }

    pub fn apply(&self, x: usize, level: usize) -> usize {
        self.act[x][level]
    }

    pub fn check_conditions(&self) -> ActionConditions {
        let p = &self.poset;
        let n = p.len();
        let k = self.act.first().map_or(1, Vec::len) - 1;

        let unit = (0..n).all(|x| p.equiv(self.apply(x, 0), x));

        let associative = (0..n).all(|x| {
            (0..=k).all(|u| {
                (0..=k).all(|v| {
                    p.equiv(
                        self.apply(self.apply(x, u), v),
                        self.apply(x, (u + v).min(k)),
                    )
                })
            })
        });

        let monotone = (0..n).all(|x| {
            (0..n).all(|x2| {
                !p.leq(x, x2) || (0..=k).all(|u| p.leq(self.apply(x, u), self.apply(x2, u)))
            })
        }) && (0..n).all(|x| {
            (0..=k).all(|u| (u..=k).all(|v| p.leq(self.apply(x, v), self.apply(x, u))))
        });

        let bottom = (0..n).all(|x| (0..n).all(|y| p.leq(self.apply(x, k), y)));

        // condition (5): the action turns the infimum of any subset of
        // values into the order join of the pointwise actions; the empty
        // subset is the bottom condition again
        let distributes = (0..n).all(|x| {
            bits::masks(k + 1).all(|s| {
                let min_level = bits::elems(s).next().unwrap_or(k);
                let target = self.apply(x, min_level);
                let image: Vec<usize> = bits::elems(s).map(|u| self.apply(x, u)).collect();
                let upper = image.iter().all(|&e| p.leq(e, target));
                let least = (0..n).all(|z| {
                    !image.iter().all(|&e| p.leq(e, z)) || p.leq(target, z)
                });
                upper && least
            })
        });

        ActionConditions { unit, associative, monotone, bottom, distributes }
    }

    fn require_first_three(&self) -> Result<()> {
        let c = self.check_conditions();
        if c.first_three() {
            Ok(())
        } else {
            Err(Error::ActionConditionsViolated(format!("{c:?}")))
        }
    }

    fn require_all(&self) -> Result<()> {
        let c = self.check_conditions();
        if c.all() {
            Ok(())
        } else {
            Err(Error::ActionConditionsViolated(format!("{c:?}")))
        }
    }
}

/// The metric of an algebra: `d(x,y) = inf { u | x + u <= y }`, the
/// infimum taken over the finite chain, with the empty set giving the top.
pub fn metric_from_action(a: &OrdAction) -> Result<MetricSpace> {
    a.require_first_three()?;
    let n = a.poset.len();
    let k = a.quantale.chain_len()? - 1;
    let mut d = Vec::with_capacity(n);
    for x in 0..n {
        let mut row = Vec::with_capacity(n);
        for y in 0..n {
            let level = (0..=k).find(|&u| a.poset.leq(a.apply(x, u), y));
            row.push(match level {
                Some(u) => a.quantale.value_of_level(u)?,
                None => a.quantale.top(),
            });
        }
        d.push(row);
    }
    let m = MetricSpace::new(a.quantale.clone(), a.poset.names().to_vec(), d)?;
    debug_assert!(m.check_metric_axioms());
    Ok(m)
}

/// The algebra of a tensored separated space: `x + u` is the tensor.
pub fn action_from_metric(m: &MetricSpace) -> Result<OrdAction> {
    if !is_tensored(m)? {
        return Err(Error::NotTensored);
    }
    if !m.is_separated() {
        return Err(Error::NotSeparated);
    }
    let values = m.quantale().values()?;
    let act = (0..m.len())
        .map(|x| {
            values
                .iter()
                .map(|u| Ok(tensor(m, x, u)?.expect("tensored")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    OrdAction::new(m.underlying_order()?, m.quantale().clone(), act)
}

/// Decides metric-map-hood through the underlying orders of two tensored
/// spaces: monotone, and `f(x) + u <= f(x + u)` for all tensors. Agrees
/// with the direct distance check; the suites compare both routes.
pub fn map_is_metric_via_order(
    values: &[usize],
    x: &MetricSpace,
    y: &MetricSpace,
) -> Result<bool> {
    if !is_tensored(x)? || !is_tensored(y)? {
        return Err(Error::NotTensored);
    }
    if values.len() != x.len() || values.iter().any(|&v| v >= y.len()) {
        return Err(Error::ShapeMismatch("value table does not match the carriers".into()));
    }
    let xo = x.underlying_order()?;
    let yo = y.underlying_order()?;
    let monotone = (0..x.len())
        .all(|a| (0..x.len()).all(|b| !xo.leq(a, b) || yo.leq(values[a], values[b])));
    if !monotone {
        return Ok(false);
    }
    for a in 0..x.len() {
        for u in x.quantale().values()? {
            let tx = tensor(x, a, &u)?.expect("tensored");
            let ty = tensor(y, values[a], &u)?.expect("tensored");
            if !yo.leq(ty, values[tx]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For algebras with all five conditions: a complete lattice on which
/// every `(-) + u` preserves all suprema. Coincides with cocompleteness
/// of the induced metric.
pub fn cocomplete_algebra_check(a: &OrdAction) -> Result<bool> {
    a.require_all()?;
    let p = &a.poset;
    if !p.is_complete_lattice() {
        return Ok(false);
    }
    let k = a.quantale.chain_len()? - 1;
    for u in 0..=k {
        for set in bits::masks(p.len()) {
            let s = p.supremum_mask(set).expect("complete");
            let image = bits::elems(set).fold(0u32, |m, e| m | 1 << a.apply(e, u));
            let image_sup = p.supremum_mask(image).expect("complete");
            if !p.equiv(a.apply(s, u), image_sup) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Agreement helper used by the suites: the induced metric of a
/// well-behaved algebra is cocomplete exactly when the algebra passes the
/// lattice-side check.
pub fn algebra_vs_metric_cocompleteness(a: &OrdAction) -> Result<(bool, bool)> {
    let lattice_side = cocomplete_algebra_check(a)?;
    let metric_side = is_cocomplete(&metric_from_action(a)?)?;
    Ok((lattice_side, metric_side))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::chain_space_from_levels;
    use crate::metric::is_metric_map_table;
    use crate::order::all_posets;

    fn v3() -> Quantale {
        Quantale::unit_chain(3)
    }

    fn all_spaces(q: &Quantale, n: usize) -> Vec<MetricSpace> {
        let len = q.chain_len().unwrap();
        let cells: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|(x, y)| x != y)
            .collect();
        let mut tables = vec![vec![vec![0usize; n]; n]];
        for &(x, y) in &cells {
            tables = tables
                .into_iter()
                .flat_map(|t| {
                    (0..len).map(move |l| {
                        let mut t2 = t.clone();
                        t2[x][y] = l;
                        t2
                    })
                })
                .collect();
        }
        tables
            .into_iter()
            .filter_map(|t| {
                let m = chain_space_from_levels(q, &t).unwrap();
                m.check_metric_axioms().then_some(m)
            })
            .collect()
    }

    /// All actions on antisymmetric posets of size `n` satisfying the
    /// unit condition, by raw table enumeration.
    fn unit_actions(q: &Quantale, n: usize) -> Vec<OrdAction> {
        let k = q.chain_len().unwrap() - 1;
        let mut out = Vec::new();
        for p in all_posets(n).into_iter().filter(Poset::is_antisymmetric) {
            let mut tables: Vec<Vec<Vec<usize>>> =
                vec![(0..n).map(|x| vec![x]).collect()];
            for _level in 1..=k {
                tables = tables
                    .into_iter()
                    .flat_map(|t| {
                        // extend every row by one column
                        let mut exts = vec![t];
                        for x in 0..n {
                            exts = exts
                                .into_iter()
                                .flat_map(|e| {
                                    (0..n).map(move |tgt| {
                                        let mut e2 = e.clone();
                                        e2[x].push(tgt);
                                        e2
                                    })
                                })
                                .collect();
                        }
                        exts
                    })
                    .collect();
            }
            for t in tables {
                out.push(OrdAction::new(p.clone(), q.clone(), t).unwrap());
            }
        }
        out
    }

    #[test]
    fn chain_acting_on_itself_satisfies_everything() {
        let a = OrdAction::chain_on_itself(&v3()).unwrap();
        let c = a.check_conditions();
        assert!(c.all(), "{c:?}");
        assert!(cocomplete_algebra_check(&a).unwrap());
    }

    #[test]
    fn constant_action_fails_the_bottom_condition() {
        let q = v3();
        let p = Poset::chain(2);
        let act = (0..2).map(|x| vec![x; q.chain_len().unwrap()]).collect();
        let a = OrdAction::new(p, q, act).unwrap();
        let c = a.check_conditions();
        assert!(c.unit && c.associative && c.monotone);
        assert!(!c.bottom);
        assert!(!c.distributes);
    }

    #[test]
    fn antichains_admit_no_well_behaved_action() {
        // without a bottom the fourth condition cannot hold, so the
        // lattice-side cocompleteness check refuses the input
        let q = v3();
        let p = Poset::antichain(2);
        let act = (0..2).map(|x| vec![x; q.chain_len().unwrap()]).collect();
        let a = OrdAction::new(p, q, act).unwrap();
        assert!(matches!(
            cocomplete_algebra_check(&a),
            Err(Error::ActionConditionsViolated(_))
        ));
    }

    #[test]
    fn induced_metric_of_the_chain_action_is_the_chain_metric() {
        let q = v3();
        let a = OrdAction::chain_on_itself(&q).unwrap();
        let m = metric_from_action(&a).unwrap();
        assert_eq!(m.table(), MetricSpace::of_quantale(&q).unwrap().table());
    }

    #[test]
    fn order_below_gives_distance_zero() {
        let q = Quantale::unit_chain(2);
        for a in unit_actions(&q, 2) {
            if !a.check_conditions().first_three() {
                continue;
            }
            let m = metric_from_action(&a).unwrap();
            assert!(m.check_metric_axioms());
            for x in 0..2 {
                for y in 0..2 {
                    if a.poset.leq(x, y) {
                        assert!(m.d(x, y).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn actions_from_tensored_spaces_satisfy_all_conditions() {
        let q = Quantale::unit_chain(2);
        for m in all_spaces(&q, 2) {
            if !is_tensored(&m).unwrap() || !m.is_separated() {
                continue;
            }
            let a = action_from_metric(&m).unwrap();
            assert!(a.check_conditions().all());
            // the tensor witness satisfies the characterising equality
            for x in 0..m.len() {
                for (u, uv) in q.values().unwrap().iter().enumerate() {
                    let t = a.apply(x, u);
                    for y in 0..m.len() {
                        assert_eq!(
                            m.d(t, y),
                            &q.minus(m.d(x, y), uv).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn metric_action_round_trip_small() {
        let q = Quantale::unit_chain(2);
        // metric -> action -> metric is the identity on tensored separated
        // spaces
        for m in all_spaces(&q, 2) {
            if !is_tensored(&m).unwrap() || !m.is_separated() {
                continue;
            }
            let back = metric_from_action(&action_from_metric(&m).unwrap()).unwrap();
            assert_eq!(back.table(), m.table());
        }
        // action -> metric -> action is the identity on algebras with all
        // five conditions
        for a in unit_actions(&q, 2) {
            if !a.check_conditions().all() {
                continue;
            }
            let m = metric_from_action(&a).unwrap();
            let back = action_from_metric(&m).unwrap();
            assert_eq!(back.poset, a.poset);
            for x in 0..2 {
                for u in 0..q.chain_len().unwrap() {
                    assert!(a.poset.equiv(back.apply(x, u), a.apply(x, u)));
                }
            }
        }
    }

    #[test]
    fn with_distributivity_the_infimum_is_attained() {
        let q = Quantale::unit_chain(2);
        for a in unit_actions(&q, 2) {
            if !a.check_conditions().all() {
                continue;
            }
            let m = metric_from_action(&a).unwrap();
            for x in 0..2 {
                for y in 0..2 {
                    let level = q.level_of(m.d(x, y)).unwrap();
                    // the defining set is nonempty and contains its infimum
                    assert!(a.poset.leq(a.apply(x, level), y));
                    if m.d(x, y).is_zero() {
                        assert!(a.poset.leq(x, y));
                    }
                }
            }
        }
    }

    #[test]
    fn via_order_criterion_matches_the_direct_check() {
        let q = Quantale::unit_chain(2);
        let spaces: Vec<MetricSpace> = all_spaces(&q, 2)
            .into_iter()
            .filter(|m| is_tensored(m).unwrap())
            .collect();
        for x in &spaces {
            for y in &spaces {
                for table in [vec![0usize, 0], vec![0, 1], vec![1, 0], vec![1, 1]] {
                    let via_order = map_is_metric_via_order(&table, x, y).unwrap();
                    assert_eq!(via_order, is_metric_map_table(x, y, &table));
                }
            }
        }
    }

    #[test]
    fn metric_maps_between_tensored_spaces_are_monotone() {
        let q = Quantale::unit_chain(2);
        let v = MetricSpace::of_quantale(&q).unwrap();
        for table in [vec![0usize, 0, 0], vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]] {
            if is_metric_map_table(&v, &v, &table) {
                assert!(map_is_metric_via_order(&table, &v, &v).unwrap());
            }
        }
    }

    #[test]
    fn algebra_and_metric_cocompleteness_agree() {
        let q = Quantale::unit_chain(2);
        for a in unit_actions(&q, 2) {
            if !a.check_conditions().all() {
                continue;
            }
            let (lattice_side, metric_side) = algebra_vs_metric_cocompleteness(&a).unwrap();
            assert_eq!(lattice_side, metric_side);
        }
        let two = MetricSpace::discrete(&q, crate::order::default_names(2));
        assert!(!is_cocomplete(&two).unwrap());
    }

    #[test]
    fn directed_value_sets_attain_their_extrema() {
        // every nonempty subset of a chain is up- and down-directed, so
        // the directed side conditions collapse to plain preservation
        let q = v3();
        let k = q.chain_len().unwrap();
        let p = Poset::from_leq_fn(k, |x, y| x >= y).unwrap();
        for s in bits::masks(k) {
            if s == 0 {
                continue;
            }
            assert!(p.is_directed_up(s) && p.is_directed_down(s));
            let min = bits::elems(s).next().unwrap();
            let max = bits::elems(s).last().unwrap();
            assert!(bits::contains(s, min) && bits::contains(s, max));
        }
    }

    #[test]
    fn antitone_actions_send_attained_suprema_to_attained_infima() {
        let q = Quantale::unit_chain(2);
        let k = q.chain_len().unwrap() - 1;
        for a in unit_actions(&q, 2) {
            if !a.check_conditions().all() {
                continue;
            }
            for x in 0..a.poset.len() {
                for s in bits::masks(k + 1) {
                    if s == 0 {
                        continue;
                    }
                    let max = bits::elems(s).last().unwrap();
                    let image: Vec<usize> = bits::elems(s).map(|u| a.apply(x, u)).collect();
                    let inf = a
                        .poset
                        .infimum(&image)
                        .expect("image of a chain has an infimum");
                    assert!(a.poset.equiv(a.apply(x, max), inf));
                }
            }
        }
    }
}
