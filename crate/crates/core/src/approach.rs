//! Finite approach spaces, in the point-set-distance presentation (a table
//! `delta[x][A]` over all subsets) and the ultrafilter-convergence
//! presentation (a table `a[x][y]` over principal ultrafilters), with the
//! conversions between them, the cocompleteness hierarchy, and the
//! translations to lattices with a value-chain action.

use crate::action::{cocomplete_algebra_check, metric_from_action, OrdAction};
use crate::bits;
use crate::colimit::{is_cocomplete, tensor};
use crate::error::{Error, Result};
use crate::metric::{is_metric_map_table, MetricSpace, Variance, Weight};
use crate::order::alpha_from_lattice;
use crate::quantale::{Quantale, Value};
use crate::ultra::{k_approach, lift_metric, lift_order, m_functor, ultrafilters, MetCompHaus, TopSpace, Ultrafilter};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Form {
    /// `delta[x][mask]`: distance from a point to a subset.
    Dist(Vec<Vec<Value>>),
    /// `a[z][x]`: value of convergence of the principal ultrafilter at `z`
    /// to the point `x`.
    Conv(Vec<Vec<Value>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approach {
    quantale: Quantale,
    carrier: Vec<String>,
    form: Form,
}

impl Approach {
    pub fn new_dist(quantale: Quantale, carrier: Vec<String>, delta: Vec<Vec<Value>>) -> Result<Self> {
        let n = carrier.len();
        let subsets = 1usize << n;
        if delta.len() != n || delta.iter().any(|row| row.len() != subsets) {
            return Err(Error::ShapeMismatch(format!(
                "distance table must be {n} x 2^{n}"
            )));
        }
        if delta.iter().flatten().any(|v| !quantale.contains(v)) {
            return Err(Error::QuantaleMismatch("distance outside the quantale".into()));
        }
        Ok(Approach { quantale, carrier, form: Form::Dist(delta) })
    }

    pub fn new_conv(quantale: Quantale, carrier: Vec<String>, conv: Vec<Vec<Value>>) -> Result<Self> {
        let n = carrier.len();
        if conv.len() != n || conv.iter().any(|row| row.len() != n) {
            return Err(Error::ShapeMismatch(format!("convergence table must be {n}x{n}")));
        }
        if conv.iter().flatten().any(|v| !quantale.contains(v)) {
            return Err(Error::QuantaleMismatch("convergence outside the quantale".into()));
        }
        Ok(Approach { quantale, carrier, form: Form::Conv(conv) })
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn quantale(&self) -> &Quantale {
        &self.quantale
    }

    pub fn names(&self) -> &[String] {
        &self.carrier
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.carrier
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn is_dist_form(&self) -> bool {
        matches!(self.form, Form::Dist(_))
    }

    /// Convergence of the principal ultrafilter at `z` to `x`, in either
    /// presentation: for a distance table this is
    /// `sup_{A in z} delta(x, A)`, evaluated literally.
    pub fn conv_value(&self, z: usize, x: usize) -> Value {
        match &self.form {
            Form::Conv(a) => a[z][x].clone(),
            Form::Dist(delta) => {
                let mut sup = Value::zero();
                for mask in bits::masks(self.len()) {
                    if bits::contains(mask, z) && delta[x][mask as usize] > sup {
                        sup = delta[x][mask as usize].clone();
                    }
                }
                sup
            }
        }
    }

    /// Point-set distance, in either presentation: for a convergence table
    /// this is the infimum of `a(z, x)` over ultrafilters containing the
    /// set; the empty set gets the top.
    pub fn delta_value(&self, x: usize, mask: u32) -> Value {
        match &self.form {
            Form::Dist(delta) => delta[x][mask as usize].clone(),
            Form::Conv(a) => {
                let mut inf = self.quantale.top();
                for z in bits::elems(mask) {
                    if a[z][x] < inf {
                        inf = a[z][x].clone();
                    }
                }
                inf
            }
        }
    }

    /// `A^(eps) = { x | delta(x, A) <= eps }` as a mask.
    pub fn expansion_mask(&self, mask: u32, eps: &Value) -> Result<u32> {
        if !self.quantale.contains(eps) {
            return Err(Error::QuantaleMismatch(format!("{eps} outside the quantale")));
        }
        Ok((0..self.len())
            .filter(|&x| self.delta_value(x, mask) <= *eps)
            .fold(0, |m, x| m | 1 << x))
    }

    /// Candidate epsilons that exhaust the behaviour of expansions: all
    /// chain values, or on the rationals the finitely many table values
    /// together with zero and top.
    pub fn eps_grid(&self) -> Result<Vec<Value>> {
        if self.quantale.is_chain() {
            return self.quantale.values();
        }
        let mut grid = vec![Value::zero(), self.quantale.top()];
        let table = match &self.form {
            Form::Dist(t) | Form::Conv(t) => t,
        };
        for v in table.iter().flatten() {
            grid.push(v.clone());
        }
        grid.sort();
        grid.dedup();
        Ok(grid)
    }

    /// Literal `Ua` on principal towers:
    /// `Ua(X, x) = sup_{AA in X, A in x} inf_{a in AA, p in A} a(a, p)`,
    /// where the outer ultrafilter is the principal one at the `big`-th
    /// principal ultrafilter.
    pub fn ua_literal(&self, big: usize, inner: usize) -> Value {
        let n = self.len();
        let big_uf = Ultrafilter::principal(n, big).expect("in range");
        let inner_uf = Ultrafilter::principal(n, inner).expect("in range");
        let mut sup = Value::zero();
        for aa in big_uf.members() {
            for a in inner_uf.members() {
                let mut inf = self.quantale.top();
                for uf_idx in bits::elems(aa) {
                    for p in bits::elems(a) {
                        let v = self.conv_value(uf_idx, p);
                        if v < inf {
                            inf = v;
                        }
                    }
                }
                if inf > sup {
                    sup = inf;
                }
            }
        }
        sup
    }

    fn violation(&self) -> Option<String> {
        match &self.form {
            Form::Dist(delta) => {
                let n = self.len();
                let top = self.quantale.top();
                for x in 0..n {
                    if !delta[x][1usize << x].is_zero() {
                        return Some(format!("delta({0},{{{0}}}) is not 0", self.carrier[x]));
                    }
                    if delta[x][0] != top {
                        return Some(format!("delta({},{{}}) is not the top", self.carrier[x]));
                    }
                    for a in bits::masks(n) {
                        for b in bits::masks(n) {
                            let union = delta[x][(a | b) as usize].clone();
                            let min = delta[x][a as usize].clone().min(delta[x][b as usize].clone());
                            if union != min {
                                return Some(format!(
                                    "delta({}, union) is not the minimum",
                                    self.carrier[x]
                                ));
                            }
                        }
                    }
                }
                let grid = self.eps_grid().ok()?;
                for x in 0..n {
                    for a in bits::masks(n) {
                        for eps in &grid {
                            let expanded = self.expansion_mask(a, eps).ok()?;
                            let bound = self
                                .quantale
                                .add(&delta[x][expanded as usize], eps)
                                .ok()?;
                            if delta[x][a as usize] > bound {
                                return Some(format!(
                                    "expansion axiom fails at {} with eps {eps}",
                                    self.carrier[x]
                                ));
                            }
                        }
                    }
                }
                None
            }
            Form::Conv(a) => {
                let n = self.len();
                for x in 0..n {
                    if !a[x][x].is_zero() {
                        return Some(format!("a(principal {0}, {0}) is not 0", self.carrier[x]));
                    }
                }
                for big in 0..n {
                    for inner in 0..n {
                        let ua = self.ua_literal(big, inner);
                        for x in 0..n {
                            let lhs = self.quantale.add(&ua, &a[inner][x]).ok()?;
                            // the multiplication sends the principal tower
                            // at `big` to the principal ultrafilter at `big`
                            if lhs < a[big][x] {
                                return Some(format!(
                                    "convergence axiom fails at tower {}, {}, {}",
                                    self.carrier[big], self.carrier[inner], self.carrier[x]
                                ));
                            }
                        }
                    }
                }
                None
            }
        }
    }

    pub fn check_axioms(&self) -> bool {
        self.violation().is_none()
    }

    pub fn validate(&self) -> Result<()> {
        match self.violation() {
            None => Ok(()),
            Some(msg) => Err(Error::InvalidApproachSpace(msg)),
        }
    }

    /// The convergence presentation, from either.
    pub fn to_conv(&self) -> Result<Approach> {
        self.validate()?;
        let n = self.len();
        let conv = (0..n)
            .map(|z| (0..n).map(|x| self.conv_value(z, x)).collect())
            .collect();
        Approach::new_conv(self.quantale.clone(), self.carrier.clone(), conv)
    }

    /// The point-set-distance presentation, from either.
    pub fn to_dist(&self) -> Result<Approach> {
        self.validate()?;
        let n = self.len();
        let delta = (0..n)
            .map(|x| {
                bits::masks(n)
                    .map(|mask| self.delta_value(x, mask))
                    .collect()
            })
            .collect();
        Approach::new_dist(self.quantale.clone(), self.carrier.clone(), delta)
    }

    /// The underlying metric `a0(x,y) = a(principal x, y)`.
    pub fn underlying_metric(&self) -> Result<MetricSpace> {
        self.validate()?;
        let n = self.len();
        let d = (0..n)
            .map(|x| (0..n).map(|y| self.conv_value(x, y)).collect())
            .collect();
        let m = MetricSpace::new(self.quantale.clone(), self.carrier.clone(), d)?;
        debug_assert!(m.check_metric_axioms());
        Ok(m)
    }

    /// The underlying topological space: convergence is the zero-set of
    /// the approach convergence, opens the down-sets of the induced order.
    pub fn underlying_top(&self) -> Result<TopSpace> {
        let a0 = self.underlying_metric()?;
        let poset = a0.underlying_order()?;
        let n = self.len();
        let converges = (0..n)
            .map(|z| (0..n).map(|x| self.conv_value(z, x).is_zero()).collect())
            .collect();
        let opens = bits::masks(n).filter(|&a| poset.is_down_set(a)).collect();
        Ok(TopSpace { poset, converges, opens })
    }

    /// The approach structure a metric induces:
    /// `a_d(z, y) = sup_{A in z} inf_{w in A} d(w, y)`, literally.
    pub fn from_metric(m: &MetricSpace) -> Result<Approach> {
        m.require_axioms()?;
        let n = m.len();
        let q = m.quantale();
        let conv = ultrafilters(n)
            .iter()
            .map(|uf| {
                (0..n)
                    .map(|y| {
                        let mut sup = q.zero();
                        for a in uf.members() {
                            let mut inf = q.top();
                            for w in bits::elems(a) {
                                if *m.d(w, y) < inf {
                                    inf = m.d(w, y).clone();
                                }
                            }
                            if inf > sup {
                                sup = inf;
                            }
                        }
                        sup
                    })
                    .collect()
            })
            .collect();
        Approach::new_conv(q.clone(), m.names().to_vec(), conv)
    }

    /// The value chain as an approach space: `a(v, u) = u (-) v`.
    pub fn of_quantale(q: &Quantale) -> Result<Approach> {
        Approach::from_metric(&MetricSpace::of_quantale(q)?)
    }

    /// The dual value chain: `a(v, u) = v (-) u`.
    pub fn of_quantale_dual(q: &Quantale) -> Result<Approach> {
        Approach::from_metric(&MetricSpace::of_quantale(q)?.dual())
    }

    /// The plus structure on the product:
    /// `c(w, (x,y)) = a(pr1 w, x) + b(pr2 w, y)`.
    pub fn plus_product(&self, other: &Approach) -> Result<Approach> {
        if self.quantale != other.quantale {
            return Err(Error::QuantaleMismatch("product factors live in different quantales".into()));
        }
        self.validate()?;
        other.validate()?;
        let names: Vec<String> = self
            .carrier
            .iter()
            .flat_map(|a| other.carrier.iter().map(move |b| format!("({a},{b})")))
            .collect();
        let mut conv = Vec::new();
        for z1 in 0..self.len() {
            for z2 in 0..other.len() {
                let mut row = Vec::new();
                for x in 0..self.len() {
                    for y in 0..other.len() {
                        row.push(self.quantale.add(
                            &self.conv_value(z1, x),
                            &other.conv_value(z2, y),
                        )?);
                    }
                }
                conv.push(row);
            }
        }
        Approach::new_conv(self.quantale.clone(), names, conv)
    }

    pub fn pair_index(&self, other: &Approach, x: usize, y: usize) -> usize {
        x * other.len() + y
    }

    /// T0: the underlying metric is separated.
    pub fn is_t0(&self) -> Result<bool> {
        Ok(self.underlying_metric()?.is_separated())
    }

    /// Degree of compactness `sup_z inf_x a(z, x)`.
    pub fn compactness_degree(&self) -> Result<Value> {
        self.validate()?;
        let n = self.len();
        let q = &self.quantale;
        let mut sup = q.zero();
        for z in 0..n {
            let inf = q.meet(
                (0..n).map(|x| self.conv_value(z, x)).collect::<Vec<_>>().iter(),
            )?;
            if inf > sup {
                sup = inf;
            }
        }
        Ok(sup)
    }

    /// Plus-exponentiability: the convergence of a multiplied tower is
    /// already the infimum of its factorisations,
    /// `a(m(X), x) = inf_z (Ua(X, z) + a(z, x))` over all towers.
    pub fn plus_exponentiable_check(&self) -> Result<bool> {
        self.validate()?;
        let n = self.len();
        let q = &self.quantale;
        for big in 0..n {
            for x in 0..n {
                let rhs = q.meet(
                    (0..n)
                        .map(|z| q.add(&self.ua_literal(big, z), &self.conv_value(z, x)))
                        .collect::<Result<Vec<_>>>()?
                        .iter(),
                )?;
                if self.conv_value(big, x) != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// A weight on the set of ultrafilters of a space (the down-set side of
/// the approach Yoneda machinery), validated against the lifted metric of
/// the underlying metric.
pub fn validate_uf_weight(a: &Approach, w: &Weight) -> Result<()> {
    if w.variance != Variance::Contravariant {
        return Err(Error::InvalidWeight("ultrafilter weights are down-sets".into()));
    }
    let lifted = lift_metric(&a.underlying_metric()?)?;
    w.validate(&lifted)
}

/// All valid ultrafilter weights over a chain-quantale space.
pub fn all_uf_weights(a: &Approach) -> Result<Vec<Weight>> {
    let lifted = lift_metric(&a.underlying_metric()?)?;
    crate::colimit::all_weights(&lifted, Variance::Contravariant)
}

/// A supremum of an ultrafilter weight: any `x0` with
/// `a(principal x0, x) = sup_z (a(z, x) (-) w(z))` for all `x`.
pub fn weighted_sup_app(a: &Approach, w: &Weight) -> Result<Option<usize>> {
    validate_uf_weight(a, w)?;
    let n = a.len();
    let q = a.quantale();
    let profile: Vec<Value> = (0..n)
        .map(|x| {
            q.join(
                (0..n)
                    .map(|z| q.minus(&a.conv_value(z, x), w.at(z)))
                    .collect::<Result<Vec<_>>>()?
                    .iter(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((0..n).find(|&cand| (0..n).all(|x| a.conv_value(cand, x) == profile[x])))
}

/// The generic-convergence-point table, when every ultrafilter has one:
/// `alpha` with `a0(alpha(z), x) = a(z, x)` for all `x`.
pub fn u_witness(a: &Approach) -> Result<Option<Vec<usize>>> {
    let a0 = a.underlying_metric()?;
    let n = a.len();
    let mut alpha = Vec::with_capacity(n);
    for z in 0..n {
        let cand = (0..n).find(|&c| (0..n).all(|x| *a0.d(c, x) == a.conv_value(z, x)));
        match cand {
            Some(c) => alpha.push(c),
            None => return Ok(None),
        }
    }
    Ok(Some(alpha))
}

pub fn is_u_cocomplete(a: &Approach) -> Result<bool> {
    Ok(u_witness(a)?.is_some())
}

/// Cocomplete: U-cocomplete with a cocomplete underlying metric.
pub fn is_cocomplete_app(a: &Approach) -> Result<bool> {
    Ok(is_u_cocomplete(a)? && is_cocomplete(&a.underlying_metric()?)?)
}

/// The closed form for approach suprema: the order join of the tensors
/// `alpha(z) + w(z)`.
pub fn formula_sup_app(a: &Approach, w: &Weight) -> Result<usize> {
    validate_uf_weight(a, w)?;
    if !is_cocomplete_app(a)? {
        return Err(Error::NotCocomplete);
    }
    let a0 = a.underlying_metric()?;
    let alpha = u_witness(a)?.expect("cocomplete");
    let mut tensors: u32 = 0;
    for z in 0..a.len() {
        let t = tensor(&a0, alpha[z], w.at(z))?
            .ok_or_else(|| Error::FormulaInapplicable("missing tensor".into()))?;
        tensors |= 1 << t;
    }
    a0.underlying_order()?
        .supremum_mask(tensors)
        .ok_or_else(|| Error::FormulaInapplicable("missing order supremum".into()))
}

/// Isbell conjugate of an up-set on the points:
/// `w-(z) = sup_x (a(z, x) (-) w(x))`, a down-set on the ultrafilters.
pub fn isbell_minus_app(a: &Approach, w: &Weight) -> Result<Weight> {
    if w.variance != Variance::Covariant {
        return Err(Error::InvalidWeight("conjugate (-) takes an up-set".into()));
    }
    w.validate(&a.underlying_metric()?)?;
    let q = a.quantale();
    let values: Vec<Value> = (0..a.len())
        .map(|z| {
            q.join(
                (0..a.len())
                    .map(|x| q.minus(&a.conv_value(z, x), w.at(x)))
                    .collect::<Result<Vec<_>>>()?
                    .iter(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let lifted = lift_metric(&a.underlying_metric()?)?;
    Weight::new(&lifted, Variance::Contravariant, values)
}

/// Isbell conjugate of a down-set on the ultrafilters:
/// `w+(x) = sup_z (a(z, x) (-) w(z))`, an up-set on the points.
pub fn isbell_plus_app(a: &Approach, w: &Weight) -> Result<Weight> {
    validate_uf_weight(a, w)?;
    let q = a.quantale();
    let values: Vec<Value> = (0..a.len())
        .map(|x| {
            q.join(
                (0..a.len())
                    .map(|z| q.minus(&a.conv_value(z, x), w.at(z)))
                    .collect::<Result<Vec<_>>>()?
                    .iter(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Weight::new(&a.underlying_metric()?, Variance::Covariant, values)
}

/// Approach-map condition on finite carriers:
/// `a(z, x) >= b(f(z), f(x))` over principal ultrafilters.
pub fn is_approach_map(src: &Approach, dst: &Approach, f: &[usize]) -> Result<bool> {
    if f.len() != src.len() || f.iter().any(|&v| v >= dst.len().max(1)) {
        return Err(Error::ShapeMismatch("map table does not match the carriers".into()));
    }
    Ok((0..src.len()).all(|z| {
        (0..src.len()).all(|x| src.conv_value(z, x) >= dst.conv_value(f[z], f[x]))
    }))
}

/// For U-cocomplete spaces: approach maps are exactly the maps that are
/// metric on the underlying metrics and continuous on the underlying
/// topologies. Returns both sides for the suites to compare.
pub fn approach_vs_metric_and_continuous(
    src: &Approach,
    dst: &Approach,
    f: &[usize],
) -> Result<(bool, bool)> {
    if !is_u_cocomplete(src)? || !is_u_cocomplete(dst)? {
        return Err(Error::InvalidApproachSpace("both spaces must be U-cocomplete".into()));
    }
    let via_app = is_approach_map(src, dst, f)?;
    let metric = is_metric_map_table(&src.underlying_metric()?, &dst.underlying_metric()?, f);
    let continuous = src.underlying_top()?.is_continuous(&dst.underlying_top()?, f);
    Ok((via_app, metric && continuous))
}

fn all_tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                (0..n).map(move |v| {
                    let mut t2 = t.clone();
                    t2.push(v);
                    t2
                })
            })
            .collect();
    }
    out
}

/// The finite power `X^I` for a discrete compact Hausdorff exponent of
/// the given size: the categorical product structure
/// `a(tuple z, tuple x) = max_i a(z_i, x_i)`.
fn finite_power(a: &Approach, size: usize) -> Result<(Approach, Vec<Vec<usize>>)> {
    let tuples = all_tuples(a.len(), size);
    let names = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t.iter().map(|&i| a.names()[i].as_str()).collect();
            format!("[{}]", parts.join(" "))
        })
        .collect();
    let conv = tuples
        .iter()
        .map(|zt| {
            tuples
                .iter()
                .map(|xt| {
                    let mut sup = Value::zero();
                    for i in 0..size {
                        let v = a.conv_value(zt[i], xt[i]);
                        if v > sup {
                            sup = v;
                        }
                    }
                    sup
                })
                .collect()
        })
        .collect();
    Ok((Approach::new_conv(a.quantale().clone(), names, conv)?, tuples))
}

/// Absolute cocompleteness, decided through the finite shadow of the
/// order-theoretic characterisation: U-cocomplete, cocomplete underlying
/// metric, underlying topology carried by a complete lattice with
/// continuous convergence and finite-power joins, and the directed-limit
/// side conditions (which finite chains satisfy automatically, and which
/// are still checked literally).
pub fn is_absolutely_cocomplete(a: &Approach) -> Result<bool> {
    a.validate()?;
    if !a.quantale().is_chain() {
        return Err(Error::UnsupportedEnumeration);
    }
    if !a.is_t0()? {
        return Err(Error::NotT0);
    }
    let alpha = match u_witness(a)? {
        Some(alpha) => alpha,
        None => return Ok(false),
    };
    let a0 = a.underlying_metric()?;
    if !is_cocomplete(&a0)? {
        return Ok(false);
    }
    let order = a0.underlying_order()?;
    if !order.is_complete_lattice() {
        return Ok(false);
    }
    debug_assert!(order.is_op_continuous_lattice());
    // the convergence must be continuous, i.e. monotone from the lifted
    // order on ultrafilters
    let lifted = lift_order(&order);
    let alpha_monotone = (0..a.len()).all(|z| {
        (0..a.len()).all(|w| !lifted.leq(z, w) || order.leq(alpha[z], alpha[w]))
    });
    if !alpha_monotone {
        return Ok(false);
    }
    // finite-power joins must be continuous, i.e. monotone for the
    // product order
    for size in 0..=a.len() {
        let tuples = all_tuples(a.len(), size);
        let joins: Vec<usize> = tuples
            .iter()
            .map(|t| order.supremum(t).expect("complete"))
            .collect();
        for (i, t1) in tuples.iter().enumerate() {
            for (j, t2) in tuples.iter().enumerate() {
                let pointwise = (0..size).all(|p| order.leq(t1[p], t2[p]));
                if pointwise && !order.leq(joins[i], joins[j]) {
                    return Ok(false);
                }
            }
        }
    }
    // directed side conditions: tensoring preserves down-directed infima
    // in the point, and sends up-directed value suprema to down-directed
    // order infima
    let q = a.quantale();
    let values = q.values()?;
    for u in &values {
        for d_set in bits::masks(a.len()) {
            if d_set == 0 || !order.is_directed_down(d_set) {
                continue;
            }
            let inf = order.infimum_mask(d_set).expect("complete");
            let t_inf = tensor(&a0, inf, u)?.expect("tensored");
            let image = bits::elems(d_set)
                .map(|p| tensor(&a0, p, u).map(|t| t.expect("tensored")))
                .collect::<Result<Vec<_>>>()?;
            let image_inf = order.infimum(&image).expect("complete");
            if !order.equiv(t_inf, image_inf) {
                return Ok(false);
            }
        }
    }
    for x in 0..a.len() {
        for s in bits::masks(values.len()) {
            if s == 0 {
                continue;
            }
            let sup_level = bits::elems(s).last().expect("nonempty");
            let t_sup = tensor(&a0, x, &values[sup_level])?.expect("tensored");
            let image = bits::elems(s)
                .map(|l| tensor(&a0, x, &values[l]).map(|t| t.expect("tensored")))
                .collect::<Result<Vec<_>>>()?;
            let image_inf = order.infimum(&image).expect("complete");
            if !order.equiv(t_sup, image_inf) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The companion criterion: cocomplete, and the tensor map, the
/// convergence and the finite-power joins are approach maps.
pub fn is_absolutely_cocomplete_three_maps(a: &Approach) -> Result<bool> {
    a.validate()?;
    if !a.quantale().is_chain() {
        return Err(Error::UnsupportedEnumeration);
    }
    if !is_cocomplete_app(a)? {
        return Ok(false);
    }
    let a0 = a.underlying_metric()?;
    let order = a0.underlying_order()?;
    let q = a.quantale();
    let values = q.values()?;

    // tensor map X (+) V -> X
    let v_app = Approach::of_quantale(q)?;
    let prod = a.plus_product(&v_app)?;
    let mut table = Vec::with_capacity(prod.len());
    for x in 0..a.len() {
        for u in &values {
            table.push(tensor(&a0, x, u)?.expect("tensored"));
        }
    }
    if !is_approach_map(&prod, a, &table)? {
        return Ok(false);
    }

    // convergence UX -> X
    let alpha = u_witness(a)?.expect("cocomplete implies U-cocomplete");
    let ux = k_approach(&m_functor(a)?)?;
    if !is_approach_map(&ux, a, &alpha)? {
        return Ok(false);
    }

    // joins X^I -> X for finite discrete exponents
    for size in 0..=a.len() {
        let (power, tuples) = finite_power(a, size)?;
        let joins: Vec<usize> = tuples
            .iter()
            .map(|t| order.supremum(t).expect("complete"))
            .collect();
        if !is_approach_map(&power, a, &joins)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both characterisations at once, for the coherence suites.
pub fn absolutely_cocomplete_routes(a: &Approach) -> Result<(bool, bool)> {
    Ok((is_absolutely_cocomplete(a)?, is_absolutely_cocomplete_three_maps(a)?))
}

/// Forward translation of the main equivalence: the underlying order with
/// the tensor action.
pub fn app_to_lattice_action(a: &Approach) -> Result<OrdAction> {
    if !is_absolutely_cocomplete(a)? {
        return Err(Error::InvalidApproachSpace("not absolutely cocomplete".into()));
    }
    let a0 = a.underlying_metric()?;
    let order = a0.underlying_order()?;
    let values = a.quantale().values()?;
    let act = (0..a.len())
        .map(|x| {
            values
                .iter()
                .map(|u| Ok(tensor(&a0, x, u)?.expect("tensored")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    OrdAction::new(order, a.quantale().clone(), act)
}

/// Backward translation: the metric of the action together with the
/// lattice-theoretic convergence.
pub fn lattice_action_to_app(action: &OrdAction) -> Result<Approach> {
    if !action.poset.is_op_continuous_lattice() {
        return Err(Error::NotOpContinuous);
    }
    if !action.check_conditions().all() || !cocomplete_algebra_check(action)? {
        return Err(Error::ActionConditionsViolated(
            "the action is not a sup-preserving algebra".into(),
        ));
    }
    let m = metric_from_action(action)?;
    let n = action.poset.len();
    let alpha: Vec<usize> = (0..n)
        .map(|z| alpha_from_lattice(&action.poset, &Ultrafilter::principal(n, z)?))
        .collect::<Result<Vec<_>>>()?;
    let mch = MetCompHaus::new(m, alpha)?;
    k_approach(&mch)
}
