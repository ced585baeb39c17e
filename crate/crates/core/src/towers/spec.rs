use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::groups::{GroupChain, SubgroupDescriptor};
use crate::literal::parse_descriptor;

/// Which construction joins stage `i - 1` with the group `G_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Iota {
    III,
    IV,
}

impl fmt::Display for Iota {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Iota::III => "III",
            Iota::IV => "IV",
        })
    }
}

impl FromStr for Iota {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "III" => Ok(Iota::III),
            "IV" => Ok(Iota::IV),
            other => Err(format!("expected \"III\" or \"IV\", got \"{other}\"")),
        }
    }
}

/// Input of the representation builders: the groups `G_1..G_n`, the
/// construction sequence `iota_2..iota_n`, and the subgroups `Z_i`, `V_i`.
///
/// Stage `i` (1-based, `i >= 2`) reads `iota[i - 2]`, `zdescs[i - 2]` and
/// `vdescs[i - 2]`; the descriptors constrain the group part of stage
/// `i - 1`. A missing `Z` means the full group part; a missing `V` means
/// `Z` for type III and the full group part for type IV. `Z` is ignored for
/// type IV stages.
///
/// `G_i` is `Z^{k_i}` (the trivial group for `k_i = 0`) unless `groups`
/// overrides it with another group of the same rank, such as `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationSpec {
    pub ranks: Vec<usize>,
    pub iota: Vec<Iota>,
    pub zdescs: Vec<Option<SubgroupDescriptor>>,
    pub vdescs: Vec<Option<SubgroupDescriptor>>,
    pub groups: Vec<Option<GroupChain>>,
}

impl RepresentationSpec {
    /// A spec with default descriptors.
    pub fn new(ranks: Vec<usize>, iota: Vec<Iota>) -> Result<Self> {
        let steps = iota.len();
        let spec = RepresentationSpec {
            ranks,
            iota,
            zdescs: vec![None; steps],
            vdescs: vec![None; steps],
            groups: Vec::new(),
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Number of stages.
    pub fn n(&self) -> usize {
        self.ranks.len()
    }

    /// Checks the lengths and group overrides. Descriptor shapes are checked
    /// against the stages when a tower is built.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if n == 0 {
            return Err(Error::field("ranks", "at least one stage is required"));
        }
        let steps = n - 1;
        if self.iota.len() != steps {
            return Err(Error::field("iota", format!("expected {steps} entries for {n} stages, got {}", self.iota.len())));
        }
        for (name, list) in [("zdescs", &self.zdescs), ("vdescs", &self.vdescs)] {
            if list.len() != steps {
                return Err(Error::field(name, format!("expected {steps} entries, got {}", list.len())));
            }
        }
        if !self.groups.is_empty() && self.groups.len() != n {
            return Err(Error::field("groups", format!("expected {n} entries, got {}", self.groups.len())));
        }
        for (i, g) in self.groups.iter().enumerate() {
            if let Some(g) = g {
                if g.rank() != self.ranks[i] {
                    return Err(Error::field(
                        format!("groups[{i}]"),
                        format!("group {g} has rank {} but ranks[{i}] = {}", g.rank(), self.ranks[i]),
                    ));
                }
            }
        }
        Ok(())
    }

    /// `G_i` for 1-based `i`.
    pub fn group(&self, i: usize) -> GroupChain {
        if let Some(Some(g)) = self.groups.get(i - 1) {
            return *g;
        }
        match self.ranks[i - 1] {
            0 => GroupChain::Trivial,
            k => GroupChain::ZLex(k),
        }
    }

    /// `iota_i` for `i` in `2..=n`.
    pub fn iota_at(&self, i: usize) -> Iota {
        self.iota[i - 2]
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::field("<document>", e.to_string()))?;
        Self::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::field("<document>", "expected a JSON object"))?;
        for key in obj.keys() {
            if !["ranks", "iota", "zdescs", "vdescs", "groups"].contains(&key.as_str()) {
                return Err(Error::field(key.clone(), "unknown field"));
            }
        }
        let ranks = array(obj, "ranks")?
            .ok_or_else(|| Error::field("ranks", "missing"))?
            .iter()
            .enumerate()
            .map(|(i, v)| {
                v.as_u64()
                    .map(|k| k as usize)
                    .ok_or_else(|| Error::field(format!("ranks[{i}]"), format!("expected a non-negative integer, got {v}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let steps = ranks.len().saturating_sub(1);
        let iota = array(obj, "iota")?
            .map_or(&[][..], Vec::as_slice)
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let field = format!("iota[{i}]");
                let s = v
                    .as_str()
                    .ok_or_else(|| Error::field(field.clone(), format!("expected a string, got {v}")))?;
                s.parse::<Iota>().map_err(|msg| Error::field(field, msg))
            })
            .collect::<Result<Vec<_>>>()?;
        let zdescs = descriptors(obj, "zdescs", steps)?;
        let vdescs = descriptors(obj, "vdescs", steps)?;
        let groups = array(obj, "groups")?
            .map_or(&[][..], Vec::as_slice)
            .iter()
            .enumerate()
            .map(|(i, v)| match v {
                Value::Null => Ok(None),
                Value::String(s) => parse_group(s)
                    .map(Some)
                    .ok_or_else(|| Error::field(format!("groups[{i}]"), format!("unknown group \"{s}\""))),
                other => Err(Error::field(format!("groups[{i}]"), format!("expected a string or null, got {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let spec = RepresentationSpec {
            ranks,
            iota,
            zdescs,
            vdescs,
            groups,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_value(&self) -> Value {
        let descs = |list: &[Option<SubgroupDescriptor>]| -> Vec<Value> {
            list.iter()
                .map(|d| d.as_ref().map_or(Value::Null, |d| Value::String(d.to_string())))
                .collect()
        };
        let mut v = json!({
            "ranks": self.ranks,
            "iota": self.iota.iter().map(|i| i.to_string()).collect::<Vec<_>>(),
            "zdescs": descs(&self.zdescs),
            "vdescs": descs(&self.vdescs),
        });
        if !self.groups.is_empty() {
            v["groups"] = self
                .groups
                .iter()
                .map(|g| g.map_or(Value::Null, |g| Value::String(g.to_string())))
                .collect();
        }
        v
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("plain JSON values serialize")
    }
}

fn array<'a>(obj: &'a Map<String, Value>, field: &str) -> Result<Option<&'a Vec<Value>>> {
    match obj.get(field) {
        None | Some(Value::Null) => Ok(None),
        Some(Value::Array(a)) => Ok(Some(a)),
        Some(other) => Err(Error::field(field, format!("expected an array, got {other}"))),
    }
}

fn descriptors(obj: &Map<String, Value>, field: &str, steps: usize) -> Result<Vec<Option<SubgroupDescriptor>>> {
    let Some(list) = array(obj, field)? else {
        return Ok(vec![None; steps]);
    };
    list.iter()
        .enumerate()
        .map(|(i, v)| match v {
            Value::Null => Ok(None),
            Value::String(s) => parse_descriptor(s)
                .map(Some)
                .map_err(|e| Error::field(format!("{field}[{i}]"), e.to_string())),
            other => Err(Error::field(format!("{field}[{i}]"), format!("expected a descriptor string or null, got {other}"))),
        })
        .collect()
}

fn parse_group(s: &str) -> Option<GroupChain> {
    match s {
        "Z" => Some(GroupChain::ZLex(1)),
        "Q" => Some(GroupChain::QChain),
        "1" => Some(GroupChain::Trivial),
        _ => s
            .strip_prefix("Z^")
            .and_then(|k| k.parse().ok())
            .and_then(|k| GroupChain::zlex(k).ok()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_round_trips() {
        let text = r#"{"ranks":[1,2,0],"iota":["III","IV"],"zdescs":["2Z",null],"vdescs":[null,"[Z,0]"],"groups":["Q",null,null]}"#;
        let spec = RepresentationSpec::from_json(text).unwrap();
        assert_eq!(spec.n(), 3);
        assert_eq!(spec.group(1), GroupChain::QChain);
        assert_eq!(spec.group(2), GroupChain::ZLex(2));
        assert_eq!(spec.group(3), GroupChain::Trivial);
        assert_eq!(spec.iota_at(3), Iota::IV);
        assert_eq!(RepresentationSpec::from_json(&spec.to_json()).unwrap(), spec);
    }

    #[test]
    fn errors_name_the_field() {
        let err = RepresentationSpec::from_json(r#"{"ranks":[1,1],"iota":["V"]}"#).unwrap_err();
        assert!(matches!(&err, Error::Field { field, .. } if field == "iota[0]"), "{err}");
        let err = RepresentationSpec::from_json(r#"{"ranks":[1,1],"iota":[]}"#).unwrap_err();
        assert!(matches!(&err, Error::Field { field, .. } if field == "iota"), "{err}");
        let err = RepresentationSpec::from_json(r#"{"ranks":[1,-1],"iota":["III"]}"#).unwrap_err();
        assert!(matches!(&err, Error::Field { field, .. } if field == "ranks[1]"), "{err}");
        let err = RepresentationSpec::from_json(r#"{"ranks":[1,1],"iota":["III"],"zdescs":["3"]}"#).unwrap_err();
        assert!(matches!(&err, Error::Field { field, .. } if field == "zdescs[0]"), "{err}");
        let err = RepresentationSpec::from_json(r#"{"ranks":[2],"groups":["Q"]}"#).unwrap_err();
        assert!(matches!(&err, Error::Field { field, .. } if field == "groups[0]"), "{err}");
        let err = RepresentationSpec::from_json(r#"{"ranks":[1],"extra":1}"#).unwrap_err();
        assert!(matches!(&err, Error::Field { field, .. } if field == "extra"), "{err}");
    }
}
