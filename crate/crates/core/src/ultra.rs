//! Ultrafilters on finite sets and the ultrafilter functor on orders and
//! metrics. On a finite base every ultrafilter is principal, but the
//! formulas of the lifted structures quantify over member sets, and the
//! implementation evaluates them that way: collapses to the principal
//! point are theorems the test suites prove, not shortcuts taken here.

use crate::approach::Approach;
use crate::bits;
use crate::colimit::tensor;
use crate::error::{Error, Result};
use crate::metric::{is_metric_map_table, MetricSpace};
use crate::order::Poset;
use crate::quantale::Value;

/// A (principal) ultrafilter on a finite base, with membership queried
/// through the ultrafilter axioms: `A` is a member iff the point lies in
/// `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ultrafilter {
    base: usize,
    point: usize,
}

impl Ultrafilter {
    pub fn principal(base: usize, point: usize) -> Result<Self> {
        if point >= base {
            return Err(Error::ShapeMismatch(format!(
                "point {point} outside a base of {base} elements"
            )));
        }
        Ok(Ultrafilter { base, point })
    }

    pub fn base_size(&self) -> usize {
        self.base
    }

    pub fn point(&self) -> usize {
        self.point
    }

    pub fn member(&self, mask: u32) -> bool {
        bits::contains(mask, self.point)
    }

    /// Member sets, as masks.
    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        bits::masks(self.base).filter(move |&a| self.member(a))
    }
}

/// All ultrafilters on an `n`-element set: the `n` principal ones.
pub fn ultrafilters(n: usize) -> Vec<Ultrafilter> {
    (0..n).map(|x| Ultrafilter { base: n, point: x }).collect()
}

/// The monad unit `x |-> { A | x in A }`.
pub fn unit(n: usize, x: usize) -> Result<Ultrafilter> {
    Ultrafilter::principal(n, x)
}

/// Finds the principal point of a membership family given as a predicate,
/// verifying the ultrafilter axioms along the way.
fn principal_point_of_family(n: usize, member: impl Fn(u32) -> bool) -> Result<usize> {
    let full = bits::full(n);
    for a in bits::masks(n) {
        let complement = full & !a;
        if member(a) == member(complement) {
            return Err(Error::InvalidCompactStructure(format!(
                "family is not an ultrafilter: {a:b} and its complement agree"
            )));
        }
        for b in bits::masks(n) {
            if member(a) && a & b == a && !member(b) {
                return Err(Error::InvalidCompactStructure(
                    "family is not upward closed".into(),
                ));
            }
            if member(a) && member(b) && !member(a & b) {
                return Err(Error::InvalidCompactStructure(
                    "family is not closed under intersection".into(),
                ));
            }
        }
    }
    (0..n)
        .find(|&x| member(1 << x))
        .ok_or_else(|| Error::InvalidCompactStructure("no principal point".into()))
}

/// Monad multiplication: for an ultrafilter on the set of ultrafilters,
/// evaluates `{ A | A# in XX }` literally, where
/// `A# = { x in UX | A in x }`.
pub fn mult(big: &Ultrafilter, base: &[Ultrafilter]) -> Result<Ultrafilter> {
    if big.base_size() != base.len() {
        return Err(Error::ShapeMismatch(
            "outer ultrafilter base does not index the inner ultrafilters".into(),
        ));
    }
    let n = base.first().map_or(0, Ultrafilter::base_size);
    if base.iter().any(|u| u.base_size() != n) {
        return Err(Error::ShapeMismatch("inner bases differ".into()));
    }
    let sharp = |a: u32| -> u32 {
        base.iter()
            .enumerate()
            .filter(|(_, x)| x.member(a))
            .fold(0, |m, (i, _)| m | 1 << i)
    };
    let point = principal_point_of_family(n, |a| big.member(sharp(a)))?;
    Ultrafilter::principal(n, point)
}

/// Image ultrafilter `Uf(x) = { B | f^{-1}(B) in x }`, evaluated literally.
pub fn image(f: &[usize], target_size: usize, x: &Ultrafilter) -> Result<Ultrafilter> {
    if f.len() != x.base_size() {
        return Err(Error::ShapeMismatch(
            "map table does not match the ultrafilter base".into(),
        ));
    }
    let preimage = |b: u32| -> u32 {
        f.iter()
            .enumerate()
            .filter(|(_, y)| bits::contains(b, **y))
            .fold(0, |m, (i, _)| m | 1 << i)
    };
    let point = principal_point_of_family(target_size, |b| x.member(preimage(b)))?;
    Ultrafilter::principal(target_size, point)
}

fn lifted_names(names: &[String]) -> Vec<String> {
    names.iter().map(|s| format!("U({s})")).collect()
}

/// The lifted order on ultrafilters:
/// `x <= y` iff for all members `A` of `x` and `B` of `y` there are
/// `a in A`, `b in B` with `a <= b`; evaluated literally.
pub fn lift_order(p: &Poset) -> Poset {
    let n = p.len();
    let ufs = ultrafilters(n);
    let leq = ufs
        .iter()
        .map(|x| {
            ufs.iter()
                .map(|y| {
                    x.members().all(|a| {
                        y.members().all(|b| {
                            bits::elems(a)
                                .any(|i| bits::elems(b).any(|j| p.leq(i, j)))
                        })
                    })
                })
                .collect()
        })
        .collect();
    Poset::new(lifted_names(p.names()), leq).expect("lifted relation is a preorder")
}

/// The lifted metric
/// `Ud(x,y) = sup_{A in x, B in y} inf_{a in A, b in B} d(a,b)`,
/// evaluated literally over all member sets.
pub fn lift_metric(m: &MetricSpace) -> Result<MetricSpace> {
    let n = m.len();
    let q = m.quantale();
    let ufs = ultrafilters(n);
    let mut d = Vec::with_capacity(n);
    for x in &ufs {
        let mut row = Vec::with_capacity(n);
        for y in &ufs {
            let mut sup = q.zero();
            for a in x.members() {
                for b in y.members() {
                    let mut inf = q.top();
                    for i in bits::elems(a) {
                        for j in bits::elems(b) {
                            if *m.d(i, j) < inf {
                                inf = m.d(i, j).clone();
                            }
                        }
                    }
                    if inf > sup {
                        sup = inf;
                    }
                }
            }
            row.push(sup);
        }
        d.push(row);
    }
    MetricSpace::new(q.clone(), lifted_names(m.names()), d)
}

/// Eilenberg-Moore laws for a convergence table `alpha : UX -> X` (indexed
/// by principal points): `alpha . unit = id` and
/// `alpha . U(alpha) = alpha . mult`, both computed literally.
pub fn em_algebra_check(n: usize, alpha: &[usize]) -> Result<bool> {
    if alpha.len() != n || alpha.iter().any(|&v| v >= n.max(1)) {
        return Err(Error::ShapeMismatch("convergence table must index the carrier".into()));
    }
    let base = ultrafilters(n);
    for x in 0..n {
        if alpha[unit(n, x)?.point()] != x {
            return Ok(false);
        }
    }
    for j in 0..n {
        // an element of UUX: the principal ultrafilter over the j-th
        // principal ultrafilter
        let big = Ultrafilter::principal(n, j)?;
        let via_mult = alpha[mult(&big, &base)?.point()];
        let via_image = alpha[image(alpha, n, &big)?.point()];
        if via_mult != via_image {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A metric space together with a compact Hausdorff convergence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetCompHaus {
    pub space: MetricSpace,
    pub alpha: Vec<usize>,
}

impl MetCompHaus {
    pub fn new(space: MetricSpace, alpha: Vec<usize>) -> Result<Self> {
        if alpha.len() != space.len() || alpha.iter().any(|&v| v >= space.len().max(1)) {
            return Err(Error::ShapeMismatch("convergence table must index the carrier".into()));
        }
        Ok(MetCompHaus { space, alpha })
    }

    /// EM laws plus `alpha` being a metric map from the lifted metric.
    pub fn is_metric_compact_hausdorff(&self) -> Result<bool> {
        self.space.require_axioms()?;
        if !em_algebra_check(self.space.len(), &self.alpha)? {
            return Ok(false);
        }
        let lifted = lift_metric(&self.space)?;
        Ok(is_metric_map_table(&lifted, &self.space, &self.alpha))
    }

    fn require_valid(&self) -> Result<()> {
        if self.is_metric_compact_hausdorff()? {
            Ok(())
        } else {
            Err(Error::InvalidCompactStructure(
                "not a metric compact Hausdorff structure".into(),
            ))
        }
    }

    /// The canonical structure on the value chain: convergence
    /// `sup_{A in v} inf A`, which on a finite carrier picks the point.
    pub fn of_quantale(q: &crate::quantale::Quantale) -> Result<MetCompHaus> {
        let space = MetricSpace::of_quantale(q)?;
        let n = space.len();
        let mut alpha = Vec::with_capacity(n);
        for uf in ultrafilters(n) {
            // xi(v) = sup_{A in v} inf_{i in A} value(i), literally
            let mut sup = q.zero();
            for a in uf.members() {
                let inf = q.meet(
                    bits::elems(a)
                        .map(|i| q.value_of_level(i))
                        .collect::<Result<Vec<_>>>()?
                        .iter(),
                )?;
                if inf > sup {
                    sup = inf;
                }
            }
            alpha.push(q.level_of(&sup)?);
        }
        MetCompHaus::new(space, alpha)
    }

    pub fn dual(&self) -> MetCompHaus {
        MetCompHaus { space: self.space.dual(), alpha: self.alpha.clone() }
    }
}

/// An ordered set together with a compact Hausdorff convergence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdCompHaus {
    pub poset: Poset,
    pub alpha: Vec<usize>,
}

impl OrdCompHaus {
    pub fn new(poset: Poset, alpha: Vec<usize>) -> Result<Self> {
        if alpha.len() != poset.len() || alpha.iter().any(|&v| v >= poset.len().max(1)) {
            return Err(Error::ShapeMismatch("convergence table must index the carrier".into()));
        }
        Ok(OrdCompHaus { poset, alpha })
    }

    /// EM laws plus monotonicity of `alpha` from the lifted order.
    pub fn is_ordered_compact_hausdorff(&self) -> Result<bool> {
        if !em_algebra_check(self.poset.len(), &self.alpha)? {
            return Ok(false);
        }
        let lifted = lift_order(&self.poset);
        Ok((0..self.poset.len()).all(|x| {
            (0..self.poset.len()).all(|y| {
                !lifted.leq(x, y) || self.poset.leq(self.alpha[x], self.alpha[y])
            })
        }))
    }
}

/// A finite topological space presented by its ultrafilter convergence,
/// with its (down-set) opens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopSpace {
    pub poset: Poset,
    /// `converges[x][y]`: the principal ultrafilter at `x` converges to `y`.
    pub converges: Vec<Vec<bool>>,
    /// Open sets, as masks.
    pub opens: Vec<u32>,
}

impl TopSpace {
    /// A continuous map preserves ultrafilter convergence.
    pub fn is_continuous(&self, target: &TopSpace, f: &[usize]) -> bool {
        f.len() == self.poset.len()
            && (0..f.len()).all(|z| {
                (0..f.len()).all(|x| !self.converges[z][x] || target.converges[f[z]][f[x]])
            })
    }
}

/// The topological space of an ordered compact Hausdorff structure: opens
/// are the down-sets, and an ultrafilter converges to everything above its
/// structure point.
pub fn k_top(och: &OrdCompHaus) -> Result<TopSpace> {
    if !och.is_ordered_compact_hausdorff()? {
        return Err(Error::InvalidCompactStructure(
            "not an ordered compact Hausdorff structure".into(),
        ));
    }
    let n = och.poset.len();
    let converges = (0..n)
        .map(|x| (0..n).map(|y| och.poset.leq(och.alpha[x], y)).collect())
        .collect();
    let opens = bits::masks(n).filter(|&a| och.poset.is_down_set(a)).collect();
    Ok(TopSpace { poset: och.poset.clone(), converges, opens })
}

/// The approach space of a metric compact Hausdorff structure:
/// `a(x, y) = d(alpha(x), y)`.
pub fn k_approach(mch: &MetCompHaus) -> Result<Approach> {
    mch.require_valid()?;
    let n = mch.space.len();
    let conv = (0..n)
        .map(|x| (0..n).map(|y| mch.space.d(mch.alpha[x], y).clone()).collect())
        .collect();
    Approach::new_conv(
        mch.space.quantale().clone(),
        mch.space.names().to_vec(),
        conv,
    )
}

/// The tensor of a lifted space: the image of the ultrafilter under
/// `x |-> x + u`.
pub fn lifted_tensor(m: &MetricSpace, x: &Ultrafilter, u: &Value) -> Result<Ultrafilter> {
    if x.base_size() != m.len() {
        return Err(Error::ShapeMismatch("ultrafilter base does not match the carrier".into()));
    }
    let t: Vec<usize> = (0..m.len())
        .map(|p| tensor(m, p, u)?.ok_or(Error::NotTensored))
        .collect::<Result<Vec<_>>>()?;
    image(&t, m.len(), x)
}

/// Point-set expansion `A^(eps) = { x | delta(x, A) <= eps }`.
pub fn expansion(a: &Approach, set: &[usize], eps: &Value) -> Result<Vec<usize>> {
    let mask = a.expansion_mask(bits::from_slice(set), eps)?;
    Ok(bits::elems(mask).collect())
}

/// The left-adjoint translation: the set of ultrafilters carries the
/// expansion metric
/// `d(x,y) = inf { eps | every A in x has A^(eps) in y }`
/// and the monad multiplication as its convergence.
pub fn m_functor(a: &Approach) -> Result<MetCompHaus> {
    a.validate()?;
    let n = a.len();
    let q = a.quantale();
    let eps_candidates = a.eps_grid()?;
    let ufs = ultrafilters(n);
    let mut d = Vec::with_capacity(n);
    for x in &ufs {
        let mut row = Vec::with_capacity(n);
        for y in &ufs {
            let mut best = q.top();
            for eps in &eps_candidates {
                if *eps >= best {
                    continue;
                }
                let ok = x.members().all(|m_set| {
                    y.member(a.expansion_mask(m_set, eps).expect("valid space"))
                });
                if ok {
                    best = eps.clone();
                }
            }
            row.push(best);
        }
        d.push(row);
    }
    let space = MetricSpace::new(q.clone(), lifted_names(a.names()), d)?;
    let base = ultrafilters(n);
    let alpha = (0..n)
        .map(|j| Ok(mult(&Ultrafilter::principal(n, j)?, &base)?.point()))
        .collect::<Result<Vec<_>>>()?;
    MetCompHaus::new(space, alpha)
}

/// Morphism check between metric compact Hausdorff spaces, evaluated both
/// through the order-and-metric description and through the approach
/// spaces they induce. The two routes must agree; a disagreement is
/// reported as an error rather than silently resolved.
pub fn map_check_compact(
    f: &[usize],
    x: &MetCompHaus,
    y: &MetCompHaus,
) -> Result<bool> {
    x.require_valid()?;
    y.require_valid()?;
    if f.len() != x.space.len() || f.iter().any(|&v| v >= y.space.len().max(1)) {
        return Err(Error::ShapeMismatch("map table does not match the carriers".into()));
    }
    let yo = y.space.underlying_order()?;
    let via_structure = is_metric_map_table(&x.space, &y.space, f)
        && (0..x.space.len()).all(|p| {
            let uf = Ultrafilter::principal(x.space.len(), p).expect("in range");
            let lhs = y.alpha[image(f, y.space.len(), &uf).expect("principal").point()];
            let rhs = f[x.alpha[p]];
            yo.leq(lhs, rhs)
        });
    let via_approach =
        crate::approach::is_approach_map(&k_approach(x)?, &k_approach(y)?, f)?;
    if via_structure != via_approach {
        return Err(Error::RouteMismatch(format!(
            "structure route says {via_structure}, approach route says {via_approach}"
        )));
    }
    Ok(via_structure)
}

#[cfg(test)]
mod set_level_tests {
    use super::*;

    #[test]
    fn finite_sets_have_exactly_the_principal_ultrafilters() {
        // exhaustive scan over all subset families for tiny bases
        for n in 1..=3usize {
            let family_count = 1u64 << (1 << n);
            let mut found = 0;
            for fam in 0..family_count {
                let member = |a: u32| fam >> a & 1 == 1;
                if principal_point_of_family(n, member).is_ok()
                    && bits::masks(n).all(|a| {
                        // the family really is the principal one at its point
                        let p = (0..n).find(|&x| member(1 << x)).unwrap();
                        member(a) == bits::contains(a, p)
                    })
                {
                    found += 1;
                }
            }
            assert_eq!(found, n as u64, "|U(S)| = |S| for |S| = {n}");
            assert_eq!(ultrafilters(n).len(), n);
        }
    }

    #[test]
    fn mult_collapses_double_principals() {
        let n = 3;
        let base = ultrafilters(n);
        for (j, inner) in base.iter().enumerate() {
            let big = Ultrafilter::principal(n, j).unwrap();
            let m = mult(&big, &base).unwrap();
            assert_eq!(m.point(), inner.point());
        }
    }

    #[test]
    fn image_of_principal_is_principal_at_the_image() {
        let f = vec![2usize, 0, 2];
        for x in 0..3 {
            let uf = Ultrafilter::principal(3, x).unwrap();
            assert_eq!(image(&f, 3, &uf).unwrap().point(), f[x]);
        }
    }

    #[test]
    fn monad_laws_on_small_bases() {
        for n in 1..=3usize {
            let base = ultrafilters(n);
            // mult . unit_{UX} = id and mult . U(unit) = id
            for (j, x) in base.iter().enumerate() {
                let outer = Ultrafilter::principal(n, j).unwrap();
                assert_eq!(mult(&outer, &base).unwrap().point(), x.point());
                let into_double = image(&(0..n).collect::<Vec<_>>(), n, x).unwrap();
                assert_eq!(mult(&into_double, &base).unwrap().point(), x.point());
            }
            // associativity along principal towers
            for j in 0..n {
                let triple = Ultrafilter::principal(n, j).unwrap();
                let via_mult = mult(&mult(&triple, &base).unwrap(), &base).unwrap();
                let mult_table: Vec<usize> = (0..n)
                    .map(|i| mult(&Ultrafilter::principal(n, i).unwrap(), &base).unwrap().point())
                    .collect();
                let via_image = mult(&image(&mult_table, n, &triple).unwrap(), &base).unwrap();
                assert_eq!(via_mult.point(), via_image.point());
            }
        }
    }
}
