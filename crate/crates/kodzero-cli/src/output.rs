//! Output formatting: every subcommand builds one or more structured
//! records; `text` renders them as aligned `key: value` lines, `records`
//! renders each as a single JSON line with lexicographically sorted keys, so
//! identical invocations produce byte-identical output.

use clap::ValueEnum;
use serde_json::Value;

/// Output format selector (`--format`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable `key: value` lines.
    Text,
    /// Line-delimited JSON with sorted keys.
    Records,
}

/// Serializes one record as a JSON line. `serde_json`'s default map is a
/// `BTreeMap`, so keys serialize in sorted order and the bytes are stable.
pub fn record_line(value: &Value) -> String {
    let mut line = serde_json::to_string(value).expect("records are finite JSON");
    line.push('\n');
    line
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn record_keys_are_sorted() {
        let v = json!({"zeta": 1, "alpha": 2, "mid": {"b": 1, "a": 2}});
        assert_eq!(
            record_line(&v),
            "{\"alpha\":2,\"mid\":{\"a\":2,\"b\":1},\"zeta\":1}\n"
        );
    }
}
