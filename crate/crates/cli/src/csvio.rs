//! CSV output for sweeps: fixed header, twelve significant digits, LF line
//! endings. Formatting then parsing then formatting again reproduces the
//! bytes exactly, so downstream tooling can diff sweep files.

use anyhow::{bail, Context, Result};

use ramancp_core::analysis::SweepRow;

pub const HEADER: &str = "epsilon,delta_t,infidelity";

pub fn format_rows(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(32 * (rows.len() + 1));
    out.push_str(HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{:.11e},{:.11e},{:.11e}\n",
            r.epsilon, r.delta_t, r.infidelity
        ));
    }
    out
}

pub fn parse(text: &str) -> Result<Vec<SweepRow>> {
    let mut lines = text.lines();
    let header = lines.next().context("empty csv input")?;
    if header != HEADER {
        bail!("unexpected csv header {header:?}");
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split(',');
        let mut next = |name: &str| -> Result<f64> {
            fields
                .next()
                .with_context(|| format!("row {}: missing {name}", i + 2))?
                .parse::<f64>()
                .with_context(|| format!("row {}: bad {name}", i + 2))
        };
        let epsilon = next("epsilon")?;
        let delta_t = next("delta_t")?;
        let infidelity = next("infidelity")?;
        if fields.next().is_some() {
            bail!("row {}: too many fields", i + 2);
        }
        rows.push(SweepRow { epsilon, delta_t, infidelity });
    }
    Ok(rows)
}
