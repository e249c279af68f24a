//! Loader for the published harmonic ordinary partition table.

use std::collections::BTreeMap;

use harmopart::BlockPartition;

pub const TABLE: &str = include_str!("../fixtures/harmonic_ordinary_table.txt");

/// One applied correction: weight, printed text, replacement.
#[derive(Debug, Clone)]
pub struct Fix {
    pub n: usize,
    pub printed: String,
    pub corrected: String,
}

#[derive(Debug, Clone)]
pub struct PublishedTable {
    /// Entries after applying the fixes.
    pub rows: BTreeMap<usize, Vec<BlockPartition>>,
    pub fixes: Vec<Fix>,
}

/// Parses the table, applies every `fix` line, and checks that each fix is
/// forced: the printed entry either fails to parse or has the wrong weight,
/// and the replacement has the right one.
pub fn load() -> Result<PublishedTable, String> {
    let mut fixes = Vec::new();
    let mut raw: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for line in TABLE.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("fix ") {
            let (n, body) = rest.split_once(':').ok_or("bad fix line")?;
            let (printed, corrected) = body.split_once("=>").ok_or("bad fix line")?;
            fixes.push(Fix {
                n: n.trim().parse().map_err(|_| "bad fix weight")?,
                printed: printed.trim().to_string(),
                corrected: corrected.trim().to_string(),
            });
            continue;
        }
        let (n, rest) = line.split_once(':').ok_or_else(|| format!("bad row `{line}`"))?;
        let items = rest
            .split('|')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect();
        raw.insert(n.trim().parse().map_err(|_| format!("bad weight in `{line}`"))?, items);
    }
    for fix in &fixes {
        let row = raw
            .get_mut(&fix.n)
            .ok_or_else(|| format!("fix for missing row {}", fix.n))?;
        let slot = row
            .iter_mut()
            .find(|s| **s == fix.printed)
            .ok_or_else(|| format!("fix target `{}` not in row {}", fix.printed, fix.n))?;
        let printed_ok = fix.printed.parse::<BlockPartition>().is_ok_and(|p| p.weight() == fix.n);
        if printed_ok {
            return Err(format!(
                "fix at n={} replaces a well-formed entry `{}`",
                fix.n, fix.printed
            ));
        }
        let corrected: BlockPartition = fix.corrected.parse().map_err(|e| format!("{e}"))?;
        if corrected.weight() != fix.n {
            return Err(format!(
                "correction `{}` has weight {}",
                fix.corrected,
                corrected.weight()
            ));
        }
        *slot = fix.corrected.clone();
    }
    let mut rows = BTreeMap::new();
    for (n, items) in raw {
        let parsed = items
            .iter()
            .map(|s| s.parse::<BlockPartition>().map_err(|e| format!("n={n} `{s}`: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(p) = parsed.iter().find(|p| p.weight() != n) {
            return Err(format!("n={n}: entry {p} has weight {}", p.weight()));
        }
        rows.insert(n, parsed);
    }
    Ok(PublishedTable { rows, fixes })
}
