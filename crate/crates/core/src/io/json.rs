use serde_json::{json, Map, Value};

use crate::algebra::{ElementaryFamily, Verdict, Witness};
use crate::category::MorphismMap;
use crate::counting::{to_decimal, CountReport};
use crate::magma::{FiniteMagma, PairRelation};

/// `{"count": "<n>", "items": [...]}`, items in the given order.
pub fn list_report(items: Vec<Value>) -> Value {
    json!({ "count": items.len().to_string(), "items": items })
}

pub fn magma_json(m: &FiniteMagma) -> Value {
    let rows: Vec<&[usize]> = (0..m.order()).map(|a| m.row(a)).collect();
    let mut obj = Map::new();
    obj.insert("order".into(), json!(m.order()));
    if let Some(word) = m.word() {
        obj.insert("word".into(), json!(word));
    }
    obj.insert("zero".into(), json!(m.zero()));
    obj.insert("table".into(), json!(rows));
    Value::Object(obj)
}

pub fn relation_json(r: &PairRelation) -> Value {
    json!(r.pairs().map(|(g, h)| [g, h]).collect::<Vec<_>>())
}

pub fn morphism_map_json(f: &MorphismMap) -> Value {
    json!({ "objects": f.object_map, "morphisms": f.morphism_map })
}

/// Target element index to sorted basis indices.
pub fn family_json(w: &ElementaryFamily) -> Value {
    let obj: Map<String, Value> = w
        .parts()
        .iter()
        .enumerate()
        .map(|(h, part)| (h.to_string(), json!(part.to_vec())))
        .collect();
    Value::Object(obj)
}

pub fn verdict_json(v: &Verdict) -> Value {
    let witness = match v.witness {
        None => Value::Null,
        Some(Witness::Pair(h, k)) => json!({ "pair": [h, k] }),
        Some(Witness::Element(h)) => json!({ "element": h }),
        Some(Witness::Basis(g)) => json!({ "basis": g }),
    };
    json!({ "property": v.property.name(), "holds": v.holds, "witness": witness })
}

pub fn count_report_json(r: &CountReport) -> Value {
    let parameters: Map<String, Value> = r.parameters.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    let alternatives: Map<String, Value> = r
        .alternatives
        .iter()
        .map(|(k, v)| (k.to_string(), json!(to_decimal(v))))
        .collect();
    json!({
        "formula": r.formula_name,
        "parameters": parameters,
        "closed_form_value": to_decimal(&r.closed_form_value),
        "brute_force_value": r.brute_force_value.as_ref().map(to_decimal),
        "agrees": r.agrees,
        "alternatives": alternatives,
    })
}

/// Compact single-line rendering with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values serialize");
    s.push('\n');
    s
}
