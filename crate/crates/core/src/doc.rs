//! Structure documents: the JSON exchange format for every structure in
//! the crate, tagged by `"type"`. Serialization is canonical — object
//! keys sorted, values in lowest terms — so re-serializing a parsed
//! document is byte-identical.

use serde_json::{json, Map, Value as Json};

use crate::action::OrdAction;
use crate::approach::{Approach, Form};
use crate::error::{Error, Result};
use crate::metric::{MetricSpace, Variance, Weight};
use crate::order::Poset;
use crate::quantale::{Quantale, Value};
use crate::ultra::MetCompHaus;

/// A weight document carries its values keyed by element name; it binds
/// to a concrete space on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDoc {
    pub variance: Variance,
    pub values: Vec<(String, Value)>,
}

impl WeightDoc {
    pub fn bind(&self, space: &MetricSpace) -> Result<Weight> {
        let mut values = vec![None; space.len()];
        for (name, v) in &self.values {
            values[space.index_of(name)?] = Some(v.clone());
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| Error::Malformed(format!("missing weight value for {}", space.name(i))))
            })
            .collect::<Result<Vec<_>>>()?;
        Weight::new(space, self.variance, values)
    }

    pub fn of_weight(space: &MetricSpace, w: &Weight) -> WeightDoc {
        WeightDoc {
            variance: w.variance,
            values: space
                .names()
                .iter()
                .cloned()
                .zip(w.values.iter().cloned())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Poset(Poset),
    Metric(MetricSpace),
    Weight(WeightDoc),
    Action(OrdAction),
    MetCompHaus(MetCompHaus),
    Approach(Approach),
}

impl Document {
    pub fn type_name(&self) -> &'static str {
        match self {
            Document::Poset(_) => "poset",
            Document::Metric(_) => "metric",
            Document::Weight(_) => "weight",
            Document::Action(_) => "action",
            Document::MetCompHaus(_) => "met_comp_haus",
            Document::Approach(_) => "approach",
        }
    }

    /// Structure-level validity: the axioms of the represented structure.
    /// Weight documents are only structurally checked (their validity is
    /// relative to a space).
    pub fn validate(&self) -> Result<()> {
        match self {
            Document::Poset(_) => Ok(()),
            Document::Metric(m) => m.require_axioms(),
            Document::Weight(_) => Ok(()),
            Document::Action(a) => {
                let c = a.check_conditions();
                if c.first_three() {
                    Ok(())
                } else {
                    Err(Error::ActionConditionsViolated(format!("{c:?}")))
                }
            }
            Document::MetCompHaus(m) => {
                if m.is_metric_compact_hausdorff()? {
                    Ok(())
                } else {
                    Err(Error::InvalidCompactStructure(
                        "convergence is not a compact Hausdorff structure for the metric".into(),
                    ))
                }
            }
            Document::Approach(a) => a.validate(),
        }
    }
}

fn quantale_json(q: &Quantale) -> Json {
    serde_json::to_value(q).expect("quantale serializes")
}

fn names_json(names: &[String]) -> Json {
    Json::Array(names.iter().map(|s| Json::String(s.clone())).collect())
}

fn value_table_json(table: &[Vec<Value>]) -> Json {
    Json::Array(
        table
            .iter()
            .map(|row| Json::Array(row.iter().map(|v| Json::String(v.to_string())).collect()))
            .collect(),
    )
}

pub fn to_json(doc: &Document) -> Json {
    match doc {
        Document::Poset(p) => poset_json(p),
        Document::Metric(m) => metric_json(m),
        Document::Weight(w) => json!({
            "type": "weight",
            "variance": if w.variance == Variance::Contravariant { "contra" } else { "co" },
            "values": w
                .values
                .iter()
                .map(|(k, v)| (k.clone(), Json::String(v.to_string())))
                .collect::<Map<String, Json>>(),
        }),
        Document::Action(a) => json!({
            "type": "action",
            "poset": poset_json(&a.poset),
            "quantale": quantale_json(&a.quantale),
            "act": a
                .act
                .iter()
                .map(|row| {
                    Json::Array(
                        row.iter()
                            .map(|&e| Json::String(a.poset.name(e).to_string()))
                            .collect(),
                    )
                })
                .collect::<Vec<_>>(),
        }),
        Document::MetCompHaus(m) => json!({
            "type": "met_comp_haus",
            "metric": metric_json(&m.space),
            "alpha": m
                .alpha
                .iter()
                .map(|&e| Json::String(m.space.name(e).to_string()))
                .collect::<Vec<_>>(),
        }),
        Document::Approach(a) => {
            let (form, table) = match a.form() {
                Form::Dist(t) => ("dist", t),
                Form::Conv(t) => ("conv", t),
            };
            json!({
                "type": "approach",
                "form": form,
                "quantale": quantale_json(a.quantale()),
                "carrier": names_json(a.names()),
                "table": value_table_json(table),
            })
        }
    }
}

fn poset_json(p: &Poset) -> Json {
    json!({
        "type": "poset",
        "carrier": names_json(p.names()),
        "leq": (0..p.len())
            .map(|x| Json::Array((0..p.len()).map(|y| Json::Bool(p.leq(x, y))).collect()))
            .collect::<Vec<_>>(),
    })
}

fn metric_json(m: &MetricSpace) -> Json {
    json!({
        "type": "metric",
        "quantale": quantale_json(m.quantale()),
        "carrier": names_json(m.names()),
        "d": value_table_json(m.table()),
    })
}

/// Canonical one-line form: sorted keys, lowest-terms values.
pub fn to_canonical_string(doc: &Document) -> String {
    to_json(doc).to_string()
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

fn get<'a>(obj: &'a Map<String, Json>, key: &str) -> Result<&'a Json> {
    obj.get(key).ok_or_else(|| bad(format!("missing field {key:?}")))
}

fn parse_names(j: &Json) -> Result<Vec<String>> {
    j.as_array()
        .ok_or_else(|| bad("carrier must be an array"))?
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| bad("carrier entries must be strings"))
        })
        .collect()
}

fn parse_value(j: &Json) -> Result<Value> {
    j.as_str()
        .ok_or_else(|| bad("values must be strings"))?
        .parse()
}

fn parse_value_table(j: &Json) -> Result<Vec<Vec<Value>>> {
    j.as_array()
        .ok_or_else(|| bad("table must be an array"))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| bad("table rows must be arrays"))?
                .iter()
                .map(parse_value)
                .collect()
        })
        .collect()
}

fn parse_quantale(j: &Json) -> Result<Quantale> {
    serde_json::from_value(j.clone()).map_err(|e| bad(format!("bad quantale: {e}")))
}

fn parse_poset(obj: &Map<String, Json>) -> Result<Poset> {
    let carrier = parse_names(get(obj, "carrier")?)?;
    let leq = get(obj, "leq")?
        .as_array()
        .ok_or_else(|| bad("leq must be an array"))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| bad("leq rows must be arrays"))?
                .iter()
                .map(|b| b.as_bool().ok_or_else(|| bad("leq entries must be booleans")))
                .collect()
        })
        .collect::<Result<Vec<Vec<bool>>>>()?;
    Poset::new(carrier, leq)
}

fn parse_metric(obj: &Map<String, Json>) -> Result<MetricSpace> {
    let quantale = parse_quantale(get(obj, "quantale")?)?;
    let carrier = parse_names(get(obj, "carrier")?)?;
    let d = parse_value_table(get(obj, "d")?)?;
    MetricSpace::new(quantale, carrier, d)
}

fn element_index(names: &[String], name: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| bad(format!("unknown element {name:?}")))
}

pub fn parse(s: &str) -> Result<Document> {
    let j: Json = serde_json::from_str(s).map_err(|e| bad(format!("invalid JSON: {e}")))?;
    let obj = j.as_object().ok_or_else(|| bad("document must be an object"))?;
    let ty = get(obj, "type")?
        .as_str()
        .ok_or_else(|| bad("type must be a string"))?;
    match ty {
        "poset" => Ok(Document::Poset(parse_poset(obj)?)),
        "metric" => Ok(Document::Metric(parse_metric(obj)?)),
        "weight" => {
            let variance = match get(obj, "variance")?.as_str() {
                Some("contra") => Variance::Contravariant,
                Some("co") => Variance::Covariant,
                _ => return Err(bad("variance must be \"contra\" or \"co\"")),
            };
            let values = get(obj, "values")?
                .as_object()
                .ok_or_else(|| bad("values must be an object"))?
                .iter()
                .map(|(k, v)| Ok((k.clone(), parse_value(v)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Document::Weight(WeightDoc { variance, values }))
        }
        "action" => {
            let poset = parse_poset(
                get(obj, "poset")?
                    .as_object()
                    .ok_or_else(|| bad("poset must be an object"))?,
            )?;
            let quantale = parse_quantale(get(obj, "quantale")?)?;
            let act = get(obj, "act")?
                .as_array()
                .ok_or_else(|| bad("act must be an array"))?
                .iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| bad("act rows must be arrays"))?
                        .iter()
                        .map(|e| {
                            element_index(
                                poset.names(),
                                e.as_str().ok_or_else(|| bad("act entries must be names"))?,
                            )
                        })
                        .collect()
                })
                .collect::<Result<Vec<Vec<usize>>>>()?;
            Ok(Document::Action(OrdAction::new(poset, quantale, act)?))
        }
        "met_comp_haus" => {
            let metric = parse_metric(
                get(obj, "metric")?
                    .as_object()
                    .ok_or_else(|| bad("metric must be an object"))?,
            )?;
            let alpha = get(obj, "alpha")?
                .as_array()
                .ok_or_else(|| bad("alpha must be an array"))?
                .iter()
                .map(|e| {
                    element_index(
                        metric.names(),
                        e.as_str().ok_or_else(|| bad("alpha entries must be names"))?,
                    )
                })
                .collect::<Result<Vec<usize>>>()?;
            Ok(Document::MetCompHaus(MetCompHaus::new(metric, alpha)?))
        }
        "approach" => {
            let quantale = parse_quantale(get(obj, "quantale")?)?;
            let carrier = parse_names(get(obj, "carrier")?)?;
            let table = parse_value_table(get(obj, "table")?)?;
            match get(obj, "form")?.as_str() {
                Some("dist") => Ok(Document::Approach(Approach::new_dist(quantale, carrier, table)?)),
                Some("conv") => Ok(Document::Approach(Approach::new_conv(quantale, carrier, table)?)),
                _ => Err(bad("form must be \"dist\" or \"conv\"")),
            }
        }
        other => Err(bad(format!("unknown document type {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::chain_space_from_levels;
    use crate::order::default_names;
    use crate::ultra::ultrafilters;

    fn docs() -> Vec<Document> {
        let q = Quantale::unit_chain(2);
        let m = chain_space_from_levels(&q, &[vec![0, 1], vec![2, 0]]).unwrap();
        let a = crate::approach::Approach::from_metric(&m).unwrap();
        let action = crate::action::OrdAction::chain_on_itself(&q).unwrap();
        let mch = MetCompHaus::new(m.clone(), (0..ultrafilters(2).len()).collect()).unwrap();
        vec![
            Document::Poset(Poset::chain(3)),
            Document::Metric(MetricSpace::discrete(&Quantale::rational(), default_names(2))),
            Document::Metric(m.clone()),
            Document::Weight(WeightDoc::of_weight(&m, &crate::metric::yoneda(&m, 0))),
            Document::Action(action),
            Document::MetCompHaus(mch),
            Document::Approach(a.clone()),
            Document::Approach(a.to_dist().unwrap()),
        ]
    }

    #[test]
    fn serialization_round_trips_byte_identically() {
        for doc in docs() {
            let s = to_canonical_string(&doc);
            let parsed = parse(&s).unwrap();
            assert_eq!(parsed, doc);
            assert_eq!(to_canonical_string(&parsed), s);
            parsed.validate().unwrap();
        }
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(matches!(parse("not json"), Err(Error::Malformed(_))));
        assert!(matches!(parse("{\"type\":\"nope\"}"), Err(Error::Malformed(_))));
        assert!(matches!(
            parse("{\"type\":\"metric\",\"carrier\":[\"a\"]}"),
            Err(Error::Malformed(_))
        ));
        // negative distances are not values
        let bad = r#"{"type":"metric","quantale":{"kind":"extended_rational"},"carrier":["a"],"d":[["-1"]]}"#;
        assert!(parse(bad).is_err());
    }

    #[test]
    fn weight_documents_bind_by_name() {
        let q = Quantale::unit_chain(2);
        let m = chain_space_from_levels(&q, &[vec![0, 1], vec![2, 0]]).unwrap();
        let doc = WeightDoc {
            variance: Variance::Contravariant,
            values: vec![("b".into(), Value::zero()), ("a".into(), Value::int(1))],
        };
        let w = doc.bind(&m).unwrap();
        assert_eq!(*w.at(0), Value::int(1));
        assert_eq!(*w.at(1), Value::zero());
    }
}
