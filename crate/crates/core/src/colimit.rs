//! Weighted suprema and infima, tensors and cotensors, cocompleteness,
//! the closed colimit formula, and Isbell conjugation — all decided by
//! witness scans against the defining equalities.
//!
//! Existence checks scan every carrier element against the defining
//! equation; carriers are tiny by design and no cleverness is attempted.
//! Results that are determined up to `~` return the least-index
//! representative, and every suite comparison is up to `~`, never by index.

use crate::bits;
use crate::error::{Error, Result};
use crate::metric::{function_space, MetricMap, MetricSpace, Variance, Weight};
use crate::quantale::Value;

/// `sup_y (d(y,x) (-) w(y))` for every `x`: the right-hand side of the
/// defining equality of a weighted supremum.
fn sup_profile(m: &MetricSpace, w: &Weight) -> Result<Vec<Value>> {
    let q = m.quantale();
    (0..m.len())
        .map(|x| {
            q.join(
                (0..m.len())
                    .map(|y| q.minus(m.d(y, x), w.at(y)))
                    .collect::<Result<Vec<_>>>()?
                    .iter(),
            )
        })
        .collect()
}

/// A supremum of a down-set: any `x0` with `d(x0,x) = sup_y (d(y,x) (-) w(y))`
/// for every `x`; least-index representative, absent if no witness exists.
pub fn weighted_sup(m: &MetricSpace, w: &Weight) -> Result<Option<usize>> {
    if w.variance != Variance::Contravariant {
        return Err(Error::InvalidWeight("supremum takes a down-set".into()));
    }
    w.validate(m)?;
    let profile = sup_profile(m, w)?;
    Ok((0..m.len()).find(|&cand| (0..m.len()).all(|x| *m.d(cand, x) == profile[x])))
}

/// An infimum of an up-set: `d(x,x0) = sup_y (d(x,y) (-) w(y))` for every `x`.
pub fn weighted_inf(m: &MetricSpace, w: &Weight) -> Result<Option<usize>> {
    if w.variance != Variance::Covariant {
        return Err(Error::InvalidWeight("infimum takes an up-set".into()));
    }
    w.validate(m)?;
    let q = m.quantale();
    let profile: Vec<Value> = (0..m.len())
        .map(|x| {
            q.join(
                (0..m.len())
                    .map(|y| q.minus(m.d(x, y), w.at(y)))
                    .collect::<Result<Vec<_>>>()?
                    .iter(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((0..m.len()).find(|&cand| (0..m.len()).all(|x| *m.d(x, cand) == profile[x])))
}

/// The tensor `x + u`, characterised by `d(x+u, y) = d(x,y) (-) u`.
pub fn tensor(m: &MetricSpace, x: usize, u: &Value) -> Result<Option<usize>> {
    let q = m.quantale();
    let target: Vec<Value> = (0..m.len())
        .map(|y| q.minus(m.d(x, y), u))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..m.len()).find(|&cand| (0..m.len()).all(|y| *m.d(cand, y) == target[y])))
}

/// The cotensor `x (-) u`, characterised by `d(y, x(-)u) = d(y,x) (-) u`.
pub fn cotensor(m: &MetricSpace, x: usize, u: &Value) -> Result<Option<usize>> {
    let q = m.quantale();
    let target: Vec<Value> = (0..m.len())
        .map(|y| q.minus(m.d(y, x), u))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..m.len()).find(|&cand| (0..m.len()).all(|y| *m.d(y, cand) == target[y])))
}

/// Tensors for every point and every chain value.
pub fn is_tensored(m: &MetricSpace) -> Result<bool> {
    let values = m.quantale().values()?;
    for x in 0..m.len() {
        for u in &values {
            if tensor(m, x, u)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_cotensored(m: &MetricSpace) -> Result<bool> {
    let values = m.quantale().values()?;
    for x in 0..m.len() {
        for u in &values {
            if cotensor(m, x, u)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Order-complete, tensored and cotensored — the workable characterisation
/// of "every down-set has a supremum".
pub fn is_cocomplete(m: &MetricSpace) -> Result<bool> {
    m.require_axioms()?;
    Ok(m.underlying_order()?.is_complete_lattice() && is_tensored(m)? && is_cotensored(m)?)
}

/// The closed colimit form: the supremum of a down-set is the
/// order-theoretic join of the tensors `x + w(x)`. (The join of the
/// underlying order; on the value space itself, where that order is
/// "greater or equal", it reads as a numeric infimum.) Only legal on
/// cocomplete spaces, so that oracle comparisons against `weighted_sup`
/// stay honest.
pub fn sup_by_formula(m: &MetricSpace, w: &Weight) -> Result<usize> {
    if w.variance != Variance::Contravariant {
        return Err(Error::InvalidWeight("supremum takes a down-set".into()));
    }
    w.validate(m)?;
    if !is_cocomplete(m)? {
        return Err(Error::NotCocomplete);
    }
    let mut tensors: u32 = 0;
    for x in 0..m.len() {
        let t = tensor(m, x, w.at(x))?
            .ok_or_else(|| Error::FormulaInapplicable(format!("missing tensor at {}", m.name(x))))?;
        tensors |= 1 << t;
    }
    m.underlying_order()?
        .supremum_mask(tensors)
        .ok_or_else(|| Error::FormulaInapplicable("missing order supremum".into()))
}

/// Isbell conjugate of a down-set: its up-set of upper bounds,
/// `w+(x) = sup_y (d(y,x) (-) w(y))`.
pub fn isbell_plus(m: &MetricSpace, w: &Weight) -> Result<Weight> {
    if w.variance != Variance::Contravariant {
        return Err(Error::InvalidWeight("conjugate (+) takes a down-set".into()));
    }
    w.validate(m)?;
    Weight::new(m, Variance::Covariant, sup_profile(m, w)?)
}

/// Isbell conjugate of an up-set: its down-set of lower bounds,
/// `w-(x) = sup_y (d(x,y) (-) w(y))`.
pub fn isbell_minus(m: &MetricSpace, w: &Weight) -> Result<Weight> {
    if w.variance != Variance::Covariant {
        return Err(Error::InvalidWeight("conjugate (-) takes an up-set".into()));
    }
    w.validate(m)?;
    let q = m.quantale();
    let values: Vec<Value> = (0..m.len())
        .map(|x| {
            q.join(
                (0..m.len())
                    .map(|y| q.minus(m.d(x, y), w.at(y)))
                    .collect::<Result<Vec<_>>>()?
                    .iter(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Weight::new(m, Variance::Contravariant, values)
}

/// The down-set of a subset: `w_A(x) = inf_{a in A} d(x,a)`; the empty
/// subset gives the constant top.
pub fn down_set_of_subset(m: &MetricSpace, a: &[usize]) -> Result<Weight> {
    let q = m.quantale();
    let values: Vec<Value> = (0..m.len())
        .map(|x| q.meet(a.iter().map(|&p| m.d(x, p)).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    Weight::new(m, Variance::Contravariant, values)
}

/// The formal-ball weight `(x,u) |-> d(-,x) + u`.
pub fn formal_ball(m: &MetricSpace, x: usize, u: &Value) -> Result<Weight> {
    let q = m.quantale();
    let values: Vec<Value> = (0..m.len())
        .map(|y| q.add(m.d(y, x), u))
        .collect::<Result<Vec<_>>>()?;
    Weight::new(m, Variance::Contravariant, values)
}

/// The weight of a family of points: `x |-> inf_i d(x, phi(i))`.
pub fn fam_weight(m: &MetricSpace, family: &[usize]) -> Result<Weight> {
    let q = m.quantale();
    let values: Vec<Value> = (0..m.len())
        .map(|x| q.meet(family.iter().map(|&p| m.d(x, p)).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    Weight::new(m, Variance::Contravariant, values)
}

/// All valid weights of one variance over a chain-quantale space, by
/// enumerating every value table and keeping the metric ones.
pub fn all_weights(m: &MetricSpace, variance: Variance) -> Result<Vec<Weight>> {
    let values = m.quantale().values()?;
    let mut tables: Vec<Vec<Value>> = vec![vec![]];
    for _ in 0..m.len() {
        tables = tables
            .into_iter()
            .flat_map(|t| {
                values.iter().map(move |v| {
                    let mut t2 = t.clone();
                    t2.push(v.clone());
                    t2
                })
            })
            .collect();
    }
    Ok(tables
        .into_iter()
        .map(|values| Weight { variance, values })
        .filter(|w| w.is_valid(m))
        .collect())
}

/// The space of down-sets `[0,inf]^{X^op}` with the sup-metric, together
/// with the weight each carrier element denotes.
pub fn down_set_space(m: &MetricSpace) -> Result<(MetricSpace, Vec<Weight>)> {
    let v = MetricSpace::of_quantale(m.quantale())?;
    let (space, maps) = function_space(&m.dual(), &v)?;
    let weights = maps
        .iter()
        .map(|t| Weight {
            variance: Variance::Contravariant,
            values: t
                .iter()
                .map(|&l| m.quantale().value_of_level(l).expect("level"))
                .collect(),
        })
        .collect();
    Ok((space, weights))
}

/// The space of up-sets `[0,inf]^X` with the sup-metric (not dualised).
pub fn up_set_space(m: &MetricSpace) -> Result<(MetricSpace, Vec<Weight>)> {
    let v = MetricSpace::of_quantale(m.quantale())?;
    let (space, maps) = function_space(m, &v)?;
    let weights = maps
        .iter()
        .map(|t| Weight {
            variance: Variance::Covariant,
            values: t
                .iter()
                .map(|&l| m.quantale().value_of_level(l).expect("level"))
                .collect(),
        })
        .collect();
    Ok((space, weights))
}

pub fn index_of_weight(weights: &[Weight], w: &Weight) -> Option<usize> {
    weights.iter().position(|cand| cand.values == w.values)
}

/// Does `f` preserve tensors and order-theoretic suprema? By the
/// equivalence theorem for cocomplete spaces this decides preservation of
/// all weighted suprema; `preserves_weighted_sups_by_definition` is the
/// raw counterpart the suites cross-check against.
pub fn preserves_weighted_sups(f: &MetricMap) -> Result<bool> {
    if !is_cocomplete(&f.source)? {
        return Err(Error::NotCocomplete);
    }
    f.target.require_axioms()?;
    let q = f.source.quantale();
    // tensors: the image of x+u must satisfy the characterising equality
    for x in 0..f.source.len() {
        for u in q.values()? {
            let t = tensor(&f.source, x, &u)?.expect("cocomplete");
            for y in 0..f.target.len() {
                if *f.target.d(f.apply(t), y) != q.minus(f.target.d(f.apply(x), y), &u)? {
                    return Ok(false);
                }
            }
        }
    }
    // order suprema: the image of a supremum must be a least upper bound
    // of the image
    let src_order = f.source.underlying_order()?;
    let dst_order = f.target.underlying_order()?;
    for set in bits::masks(f.source.len()) {
        let s = src_order.supremum_mask(set).expect("complete");
        let image = bits::elems(set).fold(0u32, |m, x| m | 1 << f.apply(x));
        match dst_order.supremum_mask(image) {
            Some(lub) if dst_order.equiv(lub, f.apply(s)) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Raw definition: for every enumerable down-set `w`,
/// `d'(f(Sup w), x') = sup_x (d'(f(x), x') (-) w(x))`.
pub fn preserves_weighted_sups_by_definition(f: &MetricMap) -> Result<bool> {
    if !is_cocomplete(&f.source)? {
        return Err(Error::NotCocomplete);
    }
    let q = f.source.quantale();
    for w in all_weights(&f.source, Variance::Contravariant)? {
        let s = weighted_sup(&f.source, &w)?.expect("cocomplete");
        for x2 in 0..f.target.len() {
            let rhs = q.join(
                (0..f.source.len())
                    .map(|x| q.minus(f.target.d(f.apply(x), x2), w.at(x)))
                    .collect::<Result<Vec<_>>>()?
                    .iter(),
            )?;
            if *f.target.d(f.apply(s), x2) != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{adjoint_pair_met, chain_space_from_levels, co_yoneda, yoneda};
    use crate::order::default_names;
    use crate::quantale::Quantale;

    fn v2() -> Quantale {
        Quantale::unit_chain(2)
    }

    fn v3() -> Quantale {
        Quantale::unit_chain(3)
    }

    /// All valid metric tables on `n` points over a chain.
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

    #[test]
    fn yoneda_weights_have_their_point_as_supremum() {
        for m in all_spaces(&v2(), 2) {
            for x in 0..m.len() {
                let s = weighted_sup(&m, &yoneda(&m, x)).unwrap().unwrap();
                assert!(m.equiv(s, x));
            }
        }
    }

    #[test]
    fn subset_weights_have_order_suprema_as_suprema() {
        // w_A has supremum x0 iff x0 is the order supremum of A and every
        // d(-,x) preserves it; the right-hand side evaluated literally
        for m in all_spaces(&v2(), 2) {
            let q = m.quantale();
            let order = m.underlying_order().unwrap();
            for a in bits::masks(m.len()) {
                let subset: Vec<usize> = bits::elems(a).collect();
                let w = down_set_of_subset(&m, &subset).unwrap();
                let got = weighted_sup(&m, &w).unwrap();
                let oracle = (0..m.len()).find(|&x0| {
                    let is_sup = match order.supremum_mask(a) {
                        Some(s) => order.equiv(s, x0),
                        None => false,
                    };
                    let preserved = (0..m.len()).all(|x| {
                        // d(-,x) lands in the naturally ordered values, so
                        // preserving the supremum of A means hitting the
                        // numeric maximum of the distances
                        let image = q
                            .join(bits::elems(a).map(|p| m.d(p, x)).collect::<Vec<_>>().into_iter())
                            .unwrap();
                        *m.d(x0, x) == image
                    });
                    is_sup && preserved
                });
                match (got, oracle) {
                    (Some(g), Some(o)) => assert!(m.equiv(g, o)),
                    (None, None) => {}
                    other => panic!("mismatch {other:?}"),
                }
            }
        }
    }

    #[test]
    fn no_supremum_on_a_discrete_pair() {
        let m = MetricSpace::discrete(&v3(), default_names(2));
        let w = down_set_of_subset(&m, &[0, 1]).unwrap();
        assert_eq!(weighted_sup(&m, &w).unwrap(), None);
    }

    #[test]
    fn infima_examples() {
        let q = v3();
        let v = MetricSpace::of_quantale(&q).unwrap();
        for x in 0..v.len() {
            let i = weighted_inf(&v, &co_yoneda(&v, x)).unwrap().unwrap();
            assert!(v.equiv(i, x));
        }
        // the constant-zero up-set picks out the order bottom, here the top
        // value of the chain
        let zero = Weight::new(&v, Variance::Covariant, vec![Value::zero(); v.len()]).unwrap();
        let i = weighted_inf(&v, &zero).unwrap().unwrap();
        assert_eq!(i, v.len() - 1);
    }

    #[test]
    fn infimum_is_supremum_in_the_dual() {
        for m in all_spaces(&v2(), 2) {
            for w in all_weights(&m, Variance::Covariant).unwrap() {
                let direct = weighted_inf(&m, &w).unwrap();
                let dual_w = Weight {
                    variance: Variance::Contravariant,
                    values: w.values.clone(),
                };
                let via_dual = weighted_sup(&m.dual(), &dual_w).unwrap();
                match (direct, via_dual) {
                    (Some(a), Some(b)) => assert!(m.equiv(a, b)),
                    (None, None) => {}
                    other => panic!("mismatch {other:?}"),
                }
            }
        }
    }

    #[test]
    fn tensors_on_the_value_chain_are_addition() {
        let q = v3();
        let v = MetricSpace::of_quantale(&q).unwrap();
        for x in 0..v.len() {
            let xv = q.value_of_level(x).unwrap();
            for u in q.values().unwrap() {
                let t = tensor(&v, x, &u).unwrap().unwrap();
                assert_eq!(q.value_of_level(t).unwrap(), q.add(&xv, &u).unwrap());
                let c = cotensor(&v, x, &u).unwrap().unwrap();
                assert_eq!(q.value_of_level(c).unwrap(), q.minus(&xv, &u).unwrap());
            }
        }
    }

    #[test]
    fn tensor_with_zero_is_the_identity() {
        for m in all_spaces(&v2(), 2) {
            for x in 0..m.len() {
                let t = tensor(&m, x, &Value::zero()).unwrap().unwrap();
                assert!(m.equiv(t, x));
            }
        }
    }

    #[test]
    fn tensor_can_be_absent_off_the_grid() {
        // d(a,b) = 1, d(b,a) = top over the half-step chain; no point
        // realises the profile of a + 1/2
        let q = Quantale::chain(Value::rat(1, 2), 4).unwrap();
        let m = chain_space_from_levels(&q, &[vec![0, 2], vec![4, 0]]).unwrap();
        assert!(m.check_metric_axioms());
        assert_eq!(tensor(&m, 0, &Value::rat(1, 2)).unwrap(), None);
    }

    #[test]
    fn cocompleteness_examples() {
        let q = v3();
        let v = MetricSpace::of_quantale(&q).unwrap();
        assert!(is_cocomplete(&v).unwrap());
        let two = MetricSpace::discrete(&q, default_names(2));
        assert!(!is_cocomplete(&two).unwrap());
        // order-embedded lattices are cocomplete over the two-element chain,
        // where the top really is the only value above zero
        let diamond =
            crate::order::Poset::from_leq_fn(4, |x, y| x == y || x == 0 || y == 3).unwrap();
        let m1 = MetricSpace::from_order(&diamond, &Quantale::unit_chain(1));
        assert!(is_cocomplete(&m1).unwrap());
        // over a taller chain the embedding loses its tensors: the top
        // plays infinity but top - u is an intermediate value no distance
        // table entry matches
        let m3 = MetricSpace::from_order(&diamond, &q);
        assert!(!is_tensored(&m3).unwrap());
    }

    #[test]
    fn closed_formula_agrees_with_the_witness_scan() {
        for m in all_spaces(&v2(), 2) {
            if !is_cocomplete(&m).unwrap() {
                continue;
            }
            for w in all_weights(&m, Variance::Contravariant).unwrap() {
                let direct = weighted_sup(&m, &w).unwrap().expect("cocomplete");
                let formula = sup_by_formula(&m, &w).unwrap();
                assert!(m.equiv(direct, formula));
            }
        }
    }

    #[test]
    fn closed_formula_on_the_chain() {
        let q = v3();
        let v = MetricSpace::of_quantale(&q).unwrap();
        for x in 0..v.len() {
            assert!(v.equiv(sup_by_formula(&v, &yoneda(&v, x)).unwrap(), x));
        }
        // the constant-top weight lands on the order bottom (the top value)
        let w = Weight::new(&v, Variance::Contravariant, vec![q.top(); v.len()]).unwrap();
        assert_eq!(sup_by_formula(&v, &w).unwrap(), v.len() - 1);
    }

    #[test]
    fn closed_formula_requires_cocompleteness() {
        let m = MetricSpace::discrete(&v3(), default_names(2));
        let w = yoneda(&m, 0);
        assert!(matches!(sup_by_formula(&m, &w), Err(Error::NotCocomplete)));
    }

    #[test]
    fn isbell_conjugates_of_yoneda_weights() {
        for m in all_spaces(&v2(), 2) {
            for x in 0..m.len() {
                let plus = isbell_plus(&m, &yoneda(&m, x)).unwrap();
                assert_eq!(plus.values, co_yoneda(&m, x).values);
                let minus = isbell_minus(&m, &co_yoneda(&m, x)).unwrap();
                assert_eq!(minus.values, yoneda(&m, x).values);
            }
        }
    }

    #[test]
    fn isbell_triple_law() {
        for m in all_spaces(&v2(), 2) {
            for w in all_weights(&m, Variance::Contravariant).unwrap() {
                let plus = isbell_plus(&m, &w).unwrap();
                let back = isbell_minus(&m, &plus).unwrap();
                let again = isbell_plus(&m, &back).unwrap();
                assert_eq!(plus.values, again.values);
                // unit: the conjugate round trip shrinks the weight
                assert!(back
                    .values
                    .iter()
                    .zip(&w.values)
                    .all(|(b, orig)| b <= orig));
            }
        }
    }

    #[test]
    fn isbell_adjunction_on_materialised_weight_spaces() {
        let q = v2();
        let m = chain_space_from_levels(&q, &[vec![0, 1], vec![2, 0]]).unwrap();
        let (down, downs) = down_set_space(&m).unwrap();
        let (up, ups) = up_set_space(&m).unwrap();
        let up_op = up.dual();
        let plus = MetricMap::new(
            down.clone(),
            up_op.clone(),
            downs
                .iter()
                .map(|w| index_of_weight(&ups, &isbell_plus(&m, w).unwrap()).unwrap())
                .collect(),
        )
        .unwrap();
        let minus = MetricMap::new(
            up_op,
            down,
            ups.iter()
                .map(|w| index_of_weight(&downs, &isbell_minus(&m, w).unwrap()).unwrap())
                .collect(),
        )
        .unwrap();
        assert!(adjoint_pair_met(&plus, &minus).unwrap());
    }

    #[test]
    fn conjugates_commute_with_yoneda_embeddings() {
        for m in all_spaces(&v2(), 2) {
            for x in 0..m.len() {
                assert_eq!(isbell_plus(&m, &yoneda(&m, x)).unwrap().values, co_yoneda(&m, x).values);
                assert_eq!(isbell_minus(&m, &co_yoneda(&m, x)).unwrap().values, yoneda(&m, x).values);
            }
        }
    }

    #[test]
    fn subset_and_family_weights() {
        let q = v3();
        let v = MetricSpace::of_quantale(&q).unwrap();
        assert_eq!(down_set_of_subset(&v, &[2]).unwrap().values, yoneda(&v, 2).values);
        assert!(down_set_of_subset(&v, &[]).unwrap().values.iter().all(|x| *x == q.top()));
        // a family weight is the subset weight of its image
        assert_eq!(
            fam_weight(&v, &[1, 2, 1]).unwrap().values,
            down_set_of_subset(&v, &[1, 2]).unwrap().values
        );
    }

    #[test]
    fn formal_balls() {
        let q = v3();
        let v = MetricSpace::of_quantale(&q).unwrap();
        for x in 0..v.len() {
            assert_eq!(formal_ball(&v, x, &Value::zero()).unwrap().values, yoneda(&v, x).values);
            for u in q.values().unwrap() {
                let w = formal_ball(&v, x, &u).unwrap();
                let s = weighted_sup(&v, &w).unwrap().unwrap();
                let t = tensor(&v, x, &u).unwrap().unwrap();
                assert!(v.equiv(s, t));
            }
        }
    }

    #[test]
    fn tensors_and_suprema_in_function_spaces_are_pointwise() {
        let q = v2();
        let x = MetricSpace::discrete(&q, default_names(2));
        let v = MetricSpace::of_quantale(&q).unwrap();
        let (fx, maps) = function_space(&x, &v).unwrap();
        for h in 0..fx.len() {
            for u in q.values().unwrap() {
                let t = tensor(&fx, h, &u).unwrap().unwrap();
                for p in 0..x.len() {
                    let pointwise = tensor(&v, maps[h][p], &u).unwrap().unwrap();
                    assert!(v.equiv(maps[t][p], pointwise));
                }
            }
        }
    }

    #[test]
    fn preservation_examples() {
        let q = Quantale::unit_chain(1);
        let chain3 = crate::order::Poset::chain(3);
        let m = MetricSpace::from_order(&chain3, &q);
        assert!(is_cocomplete(&m).unwrap());
        let id = MetricMap::identity(&m);
        assert!(preserves_weighted_sups(&id).unwrap());
        assert!(preserves_weighted_sups_by_definition(&id).unwrap());
        // a monotone map that moves the bottom is not sup-preserving
        let shift = MetricMap::new(m.clone(), m.clone(), vec![1, 1, 2]).unwrap();
        assert!(!preserves_weighted_sups(&shift).unwrap());
        assert!(!preserves_weighted_sups_by_definition(&shift).unwrap());
    }

    #[test]
    fn left_adjoints_preserve_weighted_sups() {
        let q = v3();
        let v = MetricSpace::of_quantale(&q).unwrap();
        for u in q.values().unwrap() {
            let f = MetricMap::new(
                v.clone(),
                v.clone(),
                q.values()
                    .unwrap()
                    .iter()
                    .map(|x| q.level_of(&q.add(&u, x).unwrap()).unwrap())
                    .collect(),
            )
            .unwrap();
            assert!(preserves_weighted_sups(&f).unwrap());
        }
    }

    #[test]
    fn preservation_routes_agree() {
        let q = v2();
        let spaces: Vec<MetricSpace> = all_spaces(&q, 2)
            .into_iter()
            .filter(|m| is_cocomplete(m).unwrap())
            .collect();
        for src in &spaces {
            for dst in &spaces {
                for table in [vec![0usize, 0], vec![0, 1], vec![1, 0], vec![1, 1]] {
                    if !crate::metric::is_metric_map_table(src, dst, &table) {
                        continue;
                    }
                    let f = MetricMap::new(src.clone(), dst.clone(), table).unwrap();
                    assert_eq!(
                        preserves_weighted_sups(&f).unwrap(),
                        preserves_weighted_sups_by_definition(&f).unwrap()
                    );
                }
            }
        }
    }
}
