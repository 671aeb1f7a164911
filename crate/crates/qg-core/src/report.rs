//! Uniform pass/fail reporting for structural checks.

use serde::Serialize;
use std::fmt;

/// One named check with an optional counterexample witness.
#[derive(Debug, Clone, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckItem {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckItem { name: name.into(), pass: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckItem {
            name: name.into(),
            pass: false,
            witness: Some(witness.into()),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, witness: impl Into<String>) -> Self {
        if ok {
            CheckItem::pass(name)
        } else {
            CheckItem::fail(name, witness)
        }
    }
}

/// A titled collection of check results.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub title: String,
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new(title: impl Into<String>) -> Self {
        CheckReport { title: title.into(), items: Vec::new() }
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.items.iter().find(|i| !i.pass)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for item in &self.items {
            if item.pass {
                writeln!(f, "  [ok]   {}", item.name)?;
            } else {
                writeln!(
                    f,
                    "  [FAIL] {}: {}",
                    item.name,
                    item.witness.as_deref().unwrap_or("")
                )?;
            }
        }
        Ok(())
    }
}
