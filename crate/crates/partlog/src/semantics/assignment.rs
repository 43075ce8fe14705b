use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partition::{Partition, Universe};

/// Partitions bound to atom names, all on one universe. The constants 0 and
/// 1 are not bound; they always denote the bottom and the top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    universe: Universe,
    bindings: BTreeMap<String, Partition>,
}

impl Assignment {
    pub fn new(universe: &Universe) -> Self {
        Assignment {
            universe: universe.clone(),
            bindings: BTreeMap::new(),
        }
    }

    /// Binds (or rebinds) `name`.
    pub fn bind(&mut self, name: impl Into<String>, p: Partition) -> Result<()> {
        self.universe.check_same(p.universe())?;
        self.bindings.insert(name.into(), p);
        Ok(())
    }

    pub fn with(mut self, name: impl Into<String>, p: Partition) -> Result<Self> {
        self.bind(name, p)?;
        Ok(self)
    }

    pub fn get(&self, name: &str) -> Option<&Partition> {
        self.bindings.get(name)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn bindings(&self) -> &BTreeMap<String, Partition> {
        &self.bindings
    }

    pub(crate) fn bindings_json(&self) -> Value {
        Value::Object(
            self.bindings
                .iter()
                .map(|(k, p)| (k.clone(), json!(p.block_labels())))
                .collect(),
        )
    }

    /// `{"universe": [...], "bindings": {"s": [["a","b"],["c"]], ...}}`.
    pub fn to_json(&self) -> Value {
        json!({"universe": self.universe.labels(), "bindings": self.bindings_json()})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |why: &str| Error::InvalidModel(why.to_string());
        let obj = v.as_object().ok_or_else(|| bad("expected a JSON object"))?;
        let labels = obj
            .get("universe")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `universe` array"))?
            .iter()
            .map(|l| {
                l.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| bad("universe labels must be strings"))
            })
            .collect::<Result<Vec<_>>>()?;
        let universe = Universe::new(labels)?;
        let mut a = Assignment::new(&universe);
        let bindings = match obj.get("bindings") {
            None => return Ok(a),
            Some(b) => b.as_object().ok_or_else(|| bad("`bindings` must be an object"))?,
        };
        for (name, blocks) in bindings {
            if !crate::formula::is_atom_name(name) {
                return Err(Error::InvalidModel(format!("`{name}` is not an atom name")));
            }
            let blocks: Vec<Vec<String>> = serde_json::from_value(blocks.clone())
                .map_err(|_| Error::InvalidModel(format!("binding `{name}` must be a list of label lists")))?;
            a.bind(name.clone(), Partition::new(&universe, &blocks)?)?;
        }
        Ok(a)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::InvalidModel(format!("not JSON: {e}")))?;
        Self::from_json(&v)
    }
}

impl serde::Serialize for Assignment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let text = r#"{"universe":["a","b","c"],"bindings":{"s":[["a","b"],["c"]],"t":[["c","a"],["b"]]}}"#;
        let a = Assignment::from_json_str(text).unwrap();
        assert_eq!(a.get("t").unwrap().to_string(), "{{a,c},{b}}");
        assert_eq!(Assignment::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn rejects_bad_models() {
        for text in [
            "[1,2]",
            r#"{"bindings":{}}"#,
            r#"{"universe":["a"],"bindings":{}}"#,
            r#"{"universe":["a","b"],"bindings":{"s":[["a"]]}}"#,
            r#"{"universe":["a","b"],"bindings":{"S":[["a","b"]]}}"#,
            r#"{"universe":["a","b"],"bindings":{"s":"ab"}}"#,
            "not json",
        ] {
            assert!(Assignment::from_json_str(text).is_err(), "{text}");
        }
    }

    #[test]
    fn binding_checks_universe() {
        let u = Universe::range(2).unwrap();
        let v = Universe::range(3).unwrap();
        let mut a = Assignment::new(&u);
        assert_eq!(a.bind("s", Partition::top(&v)), Err(Error::UniverseMismatch));
    }
}
