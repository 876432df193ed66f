//! Structured verification reports.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A conjecture checked exhaustively up to the stated bound.
    VerifiedToBound,
    /// A conjecture contradicted by the witness.
    Counterexample,
}

impl Status {
    pub fn is_ok(self) -> bool {
        matches!(self, Status::Pass | Status::VerifiedToBound)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::VerifiedToBound => "verified to bound",
            Status::Counterexample => "COUNTEREXAMPLE",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Item {
    pub id: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Item {
    pub fn new(id: impl Into<String>, status: Status) -> Self {
        Item {
            id: id.into(),
            params: BTreeMap::new(),
            status,
            witness: None,
        }
    }

    /// Pass when `ok`, otherwise Fail carrying the witness produced by `witness`.
    pub fn check(id: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        let mut it = Item::new(id, if ok { Status::Pass } else { Status::Fail });
        if !ok {
            it.witness = Some(witness());
        }
        it
    }

    pub fn param(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), v.into());
        self
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub items: Vec<Item>,
    pub version: String,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            items: Vec::new(),
            version: VERSION.to_string(),
        }
    }

    pub fn push(&mut self, item: Item) {
        self.items.push(item);
    }

    pub fn extend(&mut self, other: Report) {
        self.items.extend(other.items);
    }

    pub fn all_ok(&self) -> bool {
        self.items.iter().all(|i| i.status.is_ok())
    }

    pub fn first_failure(&self) -> Option<&Item> {
        self.items.iter().find(|i| !i.status.is_ok())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for it in &self.items {
            let params: Vec<String> = it.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, "  {:<28} {:<20} {}", it.id, params.join(" "), it.status)?;
            if let Some(w) = &it.witness {
                write!(f, "  [{w}]")?;
            }
            writeln!(f)?;
        }
        let ok = self.items.iter().filter(|i| i.status.is_ok()).count();
        write!(f, "{ok}/{} ok", self.items.len())
    }
}
