use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::Args;
use serde_json::Value;
use tamari_core::{interval_from_bounds, DyckPath, GraftingTree, IntervalPoset};

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Inline JSON, or a path to a JSON file.
    #[arg(long, conflicts_with = "stdin", required_unless_present = "stdin")]
    pub input: Option<String>,
    /// Read the JSON document from standard input.
    #[arg(long)]
    pub stdin: bool,
}

impl InputArgs {
    pub fn read(&self) -> Result<String> {
        if self.stdin {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
            return Ok(s);
        }
        let raw = self.input.as_deref().unwrap_or_default();
        let t = raw.trim_start();
        if t.starts_with('{') || t.starts_with('[') {
            return Ok(raw.to_string());
        }
        std::fs::read_to_string(Path::new(raw)).with_context(|| format!("reading {raw}"))
    }

    /// An interval given as a canonical poset, as Dyck-word bounds
    /// `{"lower", "upper"}`, or as a grafting tree `{"tree", "labels"}`.
    pub fn interval(&self) -> Result<IntervalPoset> {
        parse_interval(&self.read()?)
    }
}

pub fn parse_interval(text: &str) -> Result<IntervalPoset> {
    let v: Value = serde_json::from_str(text).context("input is not valid JSON")?;
    let has = |k: &str| v.get(k).is_some();
    if has("increasing") || has("decreasing") {
        return serde_json::from_value(v).context("invalid interval-poset");
    }
    if has("lower") && has("upper") {
        let word = |k: &str| -> Result<DyckPath> {
            let s = v[k].as_str().with_context(|| format!("`{k}` must be a string"))?;
            Ok(s.parse()?)
        };
        let (lo, hi) = (word("lower")?.to_tree(), word("upper")?.to_tree());
        return Ok(interval_from_bounds(&lo, &hi)?);
    }
    if has("tree") && has("labels") {
        let g: GraftingTree = serde_json::from_value(v).context("invalid grafting tree")?;
        return Ok(g.to_interval());
    }
    bail!("expected an interval-poset, Dyck bounds or a grafting tree")
}
