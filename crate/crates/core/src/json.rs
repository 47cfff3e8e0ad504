//! JSON tree reader and writer.
//!
//! ```json
//! {
//!   "nodes": [0, 1, 2],
//!   "edges": [[0, 1], [0, 2]],
//!   "order": {"0": [2, 1]},
//!   "weights": [[0, 1, 2.5]],
//!   "labels": ["root", "a", "b"],
//!   "root": 0
//! }
//! ```
//!
//! Node ids are integers or strings; vertex `i` is the `i`-th entry of
//! `nodes`. String ids become vertex labels unless `labels` is given.
//! `order` maps an id to its neighbors counterclockwise; vertices it omits
//! keep their edges in edge-list order. `weights`, `labels`, and `root`
//! are optional.

use std::collections::HashMap;

use serde_json::{json, Map, Value};

use crate::error::{ParseError, TreeError};
use crate::tree::{Tree, VertexId};

fn bad(msg: impl Into<String>) -> ParseError {
    ParseError::Json(msg.into())
}

/// Textual form of a node id, used to match ids across fields.
fn id_key(v: &Value) -> Result<String, ParseError> {
    match v {
        Value::Number(n) if n.is_u64() || n.is_i64() => Ok(n.to_string()),
        Value::String(s) => Ok(s.clone()),
        other => Err(bad(format!("node id must be an integer or string, found {other}"))),
    }
}

struct Ids(HashMap<String, VertexId>);

impl Ids {
    fn get(&self, v: &Value) -> Result<VertexId, ParseError> {
        let key = id_key(v)?;
        self.0.get(&key).copied().ok_or_else(|| bad(format!("unknown node id {key}")))
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, ParseError> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

/// Reads a tree from the JSON schema above.
pub fn parse_json(text: &str) -> Result<Tree, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let doc: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let obj = doc.as_object().ok_or_else(|| bad("top level must be an object"))?;
    let nodes = array(obj.get("nodes").ok_or_else(|| bad("missing field \"nodes\""))?, "nodes")?;
    if nodes.is_empty() {
        return Err(TreeError::Empty.into());
    }
    let mut ids = HashMap::with_capacity(nodes.len());
    for (i, v) in nodes.iter().enumerate() {
        if ids.insert(id_key(v)?, i).is_some() {
            return Err(bad(format!("duplicate node id {v}")));
        }
    }
    let ids = Ids(ids);
    let n = nodes.len();

    let mut edges = Vec::new();
    for e in array(obj.get("edges").unwrap_or(&Value::Array(Vec::new())), "edges")? {
        match e.as_array().map(Vec::as_slice) {
            Some([a, b]) => edges.push((ids.get(a)?, ids.get(b)?)),
            _ => return Err(bad(format!("edge must be a pair of ids, found {e}"))),
        }
    }
    let mut neighbors = vec![Vec::new(); n];
    for &(u, v) in &edges {
        if u == v {
            return Err(TreeError::SelfLoop(u).into());
        }
        neighbors[u].push(v);
        neighbors[v].push(u);
    }
    if let Some(order) = obj.get("order") {
        let order = order.as_object().ok_or_else(|| bad("order must be an object"))?;
        for (key, list) in order {
            let v = ids.get(&Value::String(key.clone()))?;
            let list: Vec<VertexId> =
                array(list, "order entry")?.iter().map(|w| ids.get(w)).collect::<Result<_, _>>()?;
            let mut given = list.clone();
            let mut actual = neighbors[v].clone();
            given.sort_unstable();
            actual.sort_unstable();
            if given != actual {
                return Err(TreeError::Rotation {
                    vertex: v,
                    detail: format!("order {list:?} does not match neighbors {actual:?}"),
                }
                .into());
            }
            neighbors[v] = list;
        }
    }
    let mut tree = Tree::new(neighbors)?;

    if let Some(labels) = obj.get("labels") {
        let labels = array(labels, "labels")?
            .iter()
            .map(|l| l.as_str().map(str::to_owned).ok_or_else(|| bad("labels must be strings")))
            .collect::<Result<Vec<_>, _>>()?;
        tree = tree.with_labels(labels)?;
    } else if nodes.iter().any(Value::is_string) {
        tree = tree.with_labels(nodes.iter().map(|v| id_key(v).unwrap()).collect())?;
    }
    if let Some(weights) = obj.get("weights") {
        let mut list = Vec::new();
        for w in array(weights, "weights")? {
            match w.as_array().map(Vec::as_slice) {
                Some([a, b, x]) => {
                    let x = x.as_f64().ok_or_else(|| bad(format!("weight must be a number, found {x}")))?;
                    list.push(((ids.get(a)?, ids.get(b)?), x));
                }
                _ => return Err(bad(format!("weight must be [id, id, number], found {w}"))),
            }
        }
        tree = tree.with_weights(list)?;
    }
    if let Some(root) = obj.get("root") {
        tree = tree.with_root(ids.get(root)?)?;
    }
    Ok(tree)
}

/// Writes `tree` with integer node ids, explicit rotation, and any labels,
/// weights, and root it carries.
pub fn emit_json(tree: &Tree) -> String {
    let mut obj = Map::new();
    obj.insert("nodes".into(), json!((0..tree.len()).collect::<Vec<_>>()));
    obj.insert("edges".into(), json!(tree.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>()));
    let order: Map<String, Value> =
        (0..tree.len()).filter(|&v| tree.degree(v) > 0).map(|v| (v.to_string(), json!(tree.neighbors(v)))).collect();
    obj.insert("order".into(), Value::Object(order));
    if let Some(weights) = tree.weights() {
        obj.insert("weights".into(), json!(weights.iter().map(|(&(u, v), &w)| json!([u, v, w])).collect::<Vec<_>>()));
    }
    if let Some(labels) = tree.labels() {
        obj.insert("labels".into(), json!(labels));
    }
    if let Some(root) = tree.root() {
        obj.insert("root".into(), json!(root));
    }
    serde_json::to_string(&Value::Object(obj)).expect("JSON values serialize")
}
