//! Finite generalized metric spaces over a value quantale.
//!
//! A metric here satisfies only `d(x,x) = 0` and the triangle law
//! `d(x,y) + d(y,z) >= d(x,z)`; no symmetry, separation or finiteness is
//! assumed. Distances live in the ambient quantale, so over a finite chain
//! the triangle law uses truncated addition.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::{default_names, Poset};
use crate::quantale::{Quantale, Value};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricSpace {
    quantale: Quantale,
    carrier: Vec<String>,
    d: Vec<Vec<Value>>,
}

impl MetricSpace {
    /// Builds a space, checking shapes and quantale membership. The metric
    /// axioms themselves are a separate query so that violating tables can
    /// be represented and reported.
    pub fn new(quantale: Quantale, carrier: Vec<String>, d: Vec<Vec<Value>>) -> Result<Self> {
        let n = carrier.len();
        if d.len() != n || d.iter().any(|row| row.len() != n) {
            return Err(Error::ShapeMismatch(format!("distance table must be {n}x{n}")));
        }
        for row in &d {
            for v in row {
                if !quantale.contains(v) {
                    return Err(Error::QuantaleMismatch(format!(
                        "distance {v} does not live in the declared quantale"
                    )));
                }
            }
        }
        Ok(MetricSpace { quantale, carrier, d })
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

    pub fn name(&self, x: usize) -> &str {
        &self.carrier[x]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.carrier
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn d(&self, x: usize, y: usize) -> &Value {
        &self.d[x][y]
    }

    pub fn table(&self) -> &Vec<Vec<Value>> {
        &self.d
    }

    fn axiom_violation(&self) -> Option<String> {
        for x in 0..self.len() {
            if !self.d(x, x).is_zero() {
                return Some(format!("d({0},{0}) is {1}, not 0", self.name(x), self.d(x, x)));
            }
        }
        for x in 0..self.len() {
            for y in 0..self.len() {
                for z in 0..self.len() {
                    let lhs = self.quantale.add(self.d(x, y), self.d(y, z)).expect("member");
                    if lhs < *self.d(x, z) {
                        return Some(format!(
                            "triangle fails at ({}, {}, {})",
                            self.name(x),
                            self.name(y),
                            self.name(z)
                        ));
                    }
                }
            }
        }
        None
    }

    pub fn check_metric_axioms(&self) -> bool {
        self.axiom_violation().is_none()
    }

    pub fn require_axioms(&self) -> Result<()> {
        match self.axiom_violation() {
            None => Ok(()),
            Some(msg) => Err(Error::MetricAxiomsViolated(msg)),
        }
    }

    /// `d(x,y) = 0 = d(y,x)` implies `x = y`.
    pub fn is_separated(&self) -> bool {
        (0..self.len()).all(|x| (0..self.len()).all(|y| x == y || !self.equiv(x, y)))
    }

    /// Equivalence `x ~ y`: zero distance both ways.
    pub fn equiv(&self, x: usize, y: usize) -> bool {
        self.d(x, y).is_zero() && self.d(y, x).is_zero()
    }

    /// The dual space: the transposed table.
    pub fn dual(&self) -> MetricSpace {
        let n = self.len();
        MetricSpace {
            quantale: self.quantale.clone(),
            carrier: self.carrier.clone(),
            d: (0..n).map(|x| (0..n).map(|y| self.d[y][x].clone()).collect()).collect(),
        }
    }

    /// `x <= y` whenever `d(x,y) = 0`.
    pub fn underlying_order(&self) -> Result<Poset> {
        self.require_axioms()?;
        let n = self.len();
        Poset::new(
            self.carrier.clone(),
            (0..n).map(|x| (0..n).map(|y| self.d[x][y].is_zero()).collect()).collect(),
        )
    }

    /// Interprets an order as a metric: distance `0` below, top otherwise.
    pub fn from_order(p: &Poset, quantale: &Quantale) -> MetricSpace {
        let n = p.len();
        let top = quantale.top();
        MetricSpace {
            quantale: quantale.clone(),
            carrier: p.names().to_vec(),
            d: (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| if p.leq(x, y) { Value::zero() } else { top.clone() })
                        .collect()
                })
                .collect(),
        }
    }

    /// The one-point space, unit for the plus product.
    pub fn point(quantale: &Quantale) -> MetricSpace {
        MetricSpace {
            quantale: quantale.clone(),
            carrier: vec!["*".into()],
            d: vec![vec![Value::zero()]],
        }
    }

    /// The discrete space on given names.
    pub fn discrete(quantale: &Quantale, carrier: Vec<String>) -> MetricSpace {
        let n = carrier.len();
        let top = quantale.top();
        MetricSpace {
            quantale: quantale.clone(),
            carrier,
            d: (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| if x == y { Value::zero() } else { top.clone() })
                        .collect()
                })
                .collect(),
        }
    }

    /// The value chain as a metric space, with `d(u,v) = v (-) u`.
    pub fn of_quantale(quantale: &Quantale) -> Result<MetricSpace> {
        let values = quantale.values()?;
        let d = values
            .iter()
            .map(|u| {
                values
                    .iter()
                    .map(|v| quantale.minus(v, u).expect("member"))
                    .collect()
            })
            .collect();
        Ok(MetricSpace {
            quantale: quantale.clone(),
            carrier: values.iter().map(Value::to_string).collect(),
            d,
        })
    }

    fn same_quantale(&self, other: &MetricSpace) -> Result<()> {
        if self.quantale == other.quantale {
            Ok(())
        } else {
            Err(Error::QuantaleMismatch(
                "product factors live in different quantales".into(),
            ))
        }
    }

    fn pair_names(&self, other: &MetricSpace) -> Vec<String> {
        self.carrier
            .iter()
            .flat_map(|a| other.carrier.iter().map(move |b| format!("({a},{b})")))
            .collect()
    }

    /// Index of the pair `(x, y)` in a product carrier.
    pub fn pair_index(&self, other: &MetricSpace, x: usize, y: usize) -> usize {
        x * other.len() + y
    }

    /// The plus product: `d((x,y),(x',y')) = a(x,x') + b(y,y')`.
    pub fn plus_product(&self, other: &MetricSpace) -> Result<MetricSpace> {
        self.same_quantale(other)?;
        let mut d = Vec::new();
        for x in 0..self.len() {
            for y in 0..other.len() {
                let mut row = Vec::new();
                for x2 in 0..self.len() {
                    for y2 in 0..other.len() {
                        row.push(self.quantale.add(self.d(x, x2), other.d(y, y2))?);
                    }
                }
                d.push(row);
            }
        }
        MetricSpace::new(self.quantale.clone(), self.pair_names(other), d)
    }

    /// The categorical product: `d((x,y),(x',y')) = max(a(x,x'), b(y,y'))`.
    pub fn max_product(&self, other: &MetricSpace) -> Result<MetricSpace> {
        self.same_quantale(other)?;
        let mut d = Vec::new();
        for x in 0..self.len() {
            for y in 0..other.len() {
                let mut row = Vec::new();
                for x2 in 0..self.len() {
                    for y2 in 0..other.len() {
                        row.push(self.d(x, x2).clone().max(other.d(y, y2).clone()));
                    }
                }
                d.push(row);
            }
        }
        MetricSpace::new(self.quantale.clone(), self.pair_names(other), d)
    }
}

/// Direction of a weight: a contravariant weight is a "down-set"
/// `X^op -> V`, a covariant one an "up-set" `X -> V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variance {
    #[serde(rename = "contra")]
    Contravariant,
    #[serde(rename = "co")]
    Covariant,
}

/// A finite assignment of values to the carrier together with its
/// direction. Validity (being a metric map in the flagged direction) is
/// checked against a particular space:
/// contravariant: `w(x) <= d(x,y) + w(y)` for all pairs;
/// covariant: `w(y) <= d(x,y) + w(x)` for all pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    pub variance: Variance,
    pub values: Vec<Value>,
}

impl Weight {
    pub fn new(space: &MetricSpace, variance: Variance, values: Vec<Value>) -> Result<Self> {
        let w = Weight { variance, values };
        w.validate(space)?;
        Ok(w)
    }

    pub fn at(&self, x: usize) -> &Value {
        &self.values[x]
    }

    pub fn is_valid(&self, space: &MetricSpace) -> bool {
        self.validate(space).is_ok()
    }

    pub fn validate(&self, space: &MetricSpace) -> Result<()> {
        if self.values.len() != space.len() {
            return Err(Error::InvalidWeight("table does not match the carrier".into()));
        }
        for v in &self.values {
            if !space.quantale().contains(v) {
                return Err(Error::InvalidWeight(format!("value {v} outside the quantale")));
            }
        }
        let q = space.quantale();
        for x in 0..space.len() {
            for y in 0..space.len() {
                let ok = match self.variance {
                    Variance::Contravariant => {
                        *self.at(x) <= q.add(space.d(x, y), self.at(y))?
                    }
                    Variance::Covariant => *self.at(y) <= q.add(space.d(x, y), self.at(x))?,
                };
                if !ok {
                    return Err(Error::InvalidWeight(format!(
                        "not a metric map at ({}, {})",
                        space.name(x),
                        space.name(y)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The Yoneda weight of a point: `d(-, x)`, a contravariant weight.
pub fn yoneda(space: &MetricSpace, x: usize) -> Weight {
    Weight {
        variance: Variance::Contravariant,
        values: (0..space.len()).map(|y| space.d(y, x).clone()).collect(),
    }
}

/// The contravariant-Yoneda counterpart `d(x, -)`, a covariant weight.
pub fn co_yoneda(space: &MetricSpace, x: usize) -> Weight {
    Weight {
        variance: Variance::Covariant,
        values: (0..space.len()).map(|y| space.d(x, y).clone()).collect(),
    }
}

/// The Yoneda identity for one point and one down-set:
/// `sup_y (w(y) (-) d(y,x)) = w(x)`.
pub fn yoneda_lemma_check(space: &MetricSpace, x: usize, w: &Weight) -> Result<bool> {
    if w.variance != Variance::Contravariant {
        return Err(Error::InvalidWeight("the lemma takes a down-set".into()));
    }
    w.validate(space)?;
    let q = space.quantale();
    let lhs = q.join(
        (0..space.len())
            .map(|y| q.minus(w.at(y), space.d(y, x)))
            .collect::<Result<Vec<_>>>()?
            .iter(),
    )?;
    Ok(lhs == *w.at(x))
}

/// A metric map between finite spaces, given by a value table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricMap {
    pub source: MetricSpace,
    pub target: MetricSpace,
    pub values: Vec<usize>,
}

/// The defining inequality `d(x,y) >= d'(f(x), f(y))`, on raw tables.
pub fn is_metric_map_table(source: &MetricSpace, target: &MetricSpace, values: &[usize]) -> bool {
    values.len() == source.len()
        && values.iter().all(|&v| v < target.len())
        && (0..source.len()).all(|x| {
            (0..source.len()).all(|y| source.d(x, y) >= target.d(values[x], values[y]))
        })
}

impl MetricMap {
    pub fn new(source: MetricSpace, target: MetricSpace, values: Vec<usize>) -> Result<Self> {
        if values.len() != source.len() || values.iter().any(|&v| v >= target.len()) {
            return Err(Error::ShapeMismatch("value table does not match the carriers".into()));
        }
        if !is_metric_map_table(&source, &target, &values) {
            return Err(Error::DomainMismatch("table is not a metric map".into()));
        }
        Ok(MetricMap { source, target, values })
    }

    pub fn identity(space: &MetricSpace) -> Self {
        MetricMap {
            source: space.clone(),
            target: space.clone(),
            values: (0..space.len()).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    /// Dualizing source and target leaves the table a metric map.
    pub fn dualize(&self) -> MetricMap {
        MetricMap {
            source: self.source.dual(),
            target: self.target.dual(),
            values: self.values.clone(),
        }
    }

    pub fn is_isometry(&self) -> bool {
        (0..self.source.len()).all(|x| {
            (0..self.source.len())
                .all(|y| self.source.d(x, y) == self.target.d(self.apply(x), self.apply(y)))
        })
    }
}

/// Metric adjunction `f -| g`: `d'(f(x), x') = d(x, g(x'))` for all pairs.
pub fn adjoint_pair_met(f: &MetricMap, g: &MetricMap) -> Result<bool> {
    if f.source != g.target || f.target != g.source {
        return Err(Error::DomainMismatch(
            "adjoint candidates must go in opposite directions between the same spaces".into(),
        ));
    }
    Ok((0..f.source.len()).all(|x| {
        (0..g.source.len()).all(|x2| f.target.d(f.apply(x), x2) == f.source.d(x, g.apply(x2)))
    }))
}

/// The space of all metric maps `X -> Y` under the sup-metric
/// `[h,k] = sup_x d'(h(x), k(x))`, together with the value tables of its
/// elements. Demands a chain quantale so the carrier stays enumerable in
/// the intended uses (weights valued in the quantale itself).
pub fn function_space(
    x: &MetricSpace,
    y: &MetricSpace,
) -> Result<(MetricSpace, Vec<Vec<usize>>)> {
    if !x.quantale().is_chain() {
        return Err(Error::UnsupportedEnumeration);
    }
    x.same_quantale(y)?;
    let mut maps: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..x.len() {
        maps = maps
            .into_iter()
            .flat_map(|m| {
                (0..y.len()).map(move |t| {
                    let mut m2 = m.clone();
                    m2.push(t);
                    m2
                })
            })
            .collect();
    }
    maps.retain(|m| is_metric_map_table(x, y, m));
    let q = x.quantale();
    let mut d = Vec::with_capacity(maps.len());
    for h in &maps {
        let mut row = Vec::with_capacity(maps.len());
        for k in &maps {
            let sup = q.join(
                (0..x.len())
                    .map(|p| y.d(h[p], k[p]))
                    .collect::<Vec<_>>(),
            )?;
            row.push(sup);
        }
        d.push(row);
    }
    let names = maps
        .iter()
        .map(|m| {
            let parts: Vec<&str> = m.iter().map(|&t| y.name(t)).collect();
            format!("[{}]", parts.join(" "))
        })
        .collect();
    let space = MetricSpace::new(q.clone(), names, d)?;
    Ok((space, maps))
}

/// Small-space helper used across the test corpora: a space from a level
/// table over a chain.
pub fn chain_space_from_levels(q: &Quantale, levels: &[Vec<usize>]) -> Result<MetricSpace> {
    let n = levels.len();
    let d = levels
        .iter()
        .map(|row| row.iter().map(|&l| q.value_of_level(l)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    MetricSpace::new(q.clone(), default_names(n), d)
}
