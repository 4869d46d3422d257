//! Line-oriented audit report records.
//!
//! Every line is an independently parseable sequence of `key=value` pairs and
//! starts with `schema=1` plus a `record` kind (`report`, `instance`, or
//! `counterexample`). Values containing spaces are double-quoted with `\"`
//! and `\\` escapes. Wall-clock fields are emitted only on request so that
//! repeated runs produce byte-identical files.

use std::fmt::Write as _;

use sgcg_core::Player;

use crate::audit::{AuditReport, Counterexample};

pub const SCHEMA_VERSION: u32 = 1;

fn quoted(value: &str) -> String {
    if !value.is_empty()
        && !value.contains(|c: char| c.is_whitespace() || c == '"' || c == '\\')
    {
        return value.to_string();
    }
    let mut out = String::with_capacity(value.len() + 2);
    out.push('"');
    for ch in value.chars() {
        if ch == '"' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

fn push_kv(line: &mut String, key: &str, value: &str) {
    if !line.is_empty() {
        line.push(' ');
    }
    let _ = write!(line, "{key}={}", quoted(value));
}

fn player_name(p: Player) -> &'static str {
    match p {
        Player::Salome => "salome",
        Player::Andjiga => "andjiga",
    }
}

fn winner_name(salome_wins: bool) -> &'static str {
    if salome_wins {
        "salome"
    } else {
        "andjiga"
    }
}

fn counterexample_line(claim: &str, index: usize, cx: &Counterexample) -> String {
    let mut line = String::new();
    push_kv(&mut line, "schema", &SCHEMA_VERSION.to_string());
    push_kv(&mut line, "record", "counterexample");
    push_kv(&mut line, "claim", claim);
    push_kv(&mut line, "index", &index.to_string());
    push_kv(&mut line, "graph", &cx.graph.compact_string());
    if let Some(other) = &cx.other {
        push_kv(&mut line, "other", &other.compact_string());
    }
    if let Some(p) = cx.p {
        push_kv(&mut line, "p", &p.to_string());
    }
    if let Some(d) = cx.d {
        push_kv(&mut line, "d", &d.to_string());
    }
    if let Some(first) = cx.first {
        push_kv(&mut line, "first", player_name(first));
    }
    if let Some(w) = cx.left_salome_wins {
        push_kv(&mut line, "winner", winner_name(w));
    }
    if let Some(w) = cx.right_salome_wins {
        push_kv(&mut line, "other_winner", winner_name(w));
    }
    if let Some(w) = cx.oracle_left {
        push_kv(&mut line, "oracle", winner_name(w));
    }
    if let Some(w) = cx.oracle_right {
        push_kv(&mut line, "other_oracle", winner_name(w));
    }
    push_kv(&mut line, "note", &cx.note);
    line
}

/// Renders one report as its record lines: a summary line, one line per
/// instance, then one line per stored counterexample.
pub fn report_lines(report: &AuditReport, timings: bool) -> Vec<String> {
    let mut lines = Vec::new();
    let mut summary = String::new();
    push_kv(&mut summary, "schema", &SCHEMA_VERSION.to_string());
    push_kv(&mut summary, "record", "report");
    push_kv(&mut summary, "claim", report.claim);
    push_kv(&mut summary, "statement", report.statement);
    push_kv(&mut summary, "verdict", &report.verdict.to_string());
    push_kv(&mut summary, "instances", &report.instances.to_string());
    push_kv(&mut summary, "cells", &report.cells.to_string());
    push_kv(&mut summary, "seed", &report.seed.to_string());
    push_kv(&mut summary, "counterexamples", &report.counterexamples_total.to_string());
    for (i, note) in report.notes.iter().enumerate() {
        push_kv(&mut summary, &format!("note{i}"), note);
    }
    if timings {
        if let Some(ms) = report.runtime_ms {
            push_kv(&mut summary, "runtime_ms", &ms.to_string());
        }
        if let Some(ms) = report.finished_unix_ms {
            push_kv(&mut summary, "finished_unix_ms", &ms.to_string());
        }
    }
    lines.push(summary);
    for record in &report.instance_log {
        let mut line = String::new();
        push_kv(&mut line, "schema", &SCHEMA_VERSION.to_string());
        push_kv(&mut line, "record", "instance");
        push_kv(&mut line, "claim", report.claim);
        push_kv(&mut line, "index", &record.index.to_string());
        push_kv(&mut line, "graph", &record.graph);
        push_kv(&mut line, "status", &record.status.to_string());
        push_kv(&mut line, "detail", &record.detail);
        lines.push(line);
    }
    for (i, cx) in report.counterexamples.iter().enumerate() {
        lines.push(counterexample_line(report.claim, i, cx));
    }
    lines
}

/// Parses one record line back into key/value pairs.
pub fn parse_record_line(line: &str) -> Result<Vec<(String, String)>, String> {
    let mut pairs = Vec::new();
    let mut chars = line.chars().peekable();
    while chars.peek().is_some() {
        while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
            chars.next();
        }
        if chars.peek().is_none() {
            break;
        }
        let mut key = String::new();
        loop {
            match chars.next() {
                Some('=') => break,
                Some(c) if c.is_whitespace() => {
                    return Err(format!("key `{key}` has no value"));
                }
                Some(c) => key.push(c),
                None => return Err(format!("key `{key}` has no value")),
            }
        }
        let mut value = String::new();
        if chars.peek() == Some(&'"') {
            chars.next();
            loop {
                match chars.next() {
                    Some('\\') => match chars.next() {
                        Some(c) => value.push(c),
                        None => return Err("dangling escape".to_string()),
                    },
                    Some('"') => break,
                    Some(c) => value.push(c),
                    None => return Err("unterminated quote".to_string()),
                }
            }
        } else {
            while let Some(&c) = chars.peek() {
                if c.is_whitespace() {
                    break;
                }
                value.push(c);
                chars.next();
            }
        }
        pairs.push((key, value));
    }
    if pairs.is_empty() {
        return Err("empty record line".to_string());
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quoting_round_trips() {
        for value in ["plain", "two words", "has \"quotes\"", "back\\slash", ""] {
            let mut line = String::new();
            push_kv(&mut line, "k", value);
            let pairs = parse_record_line(&line).unwrap();
            assert_eq!(pairs, vec![("k".to_string(), value.to_string())]);
        }
    }

    #[test]
    fn schema_on_every_line() {
        use crate::audit::{check_class_count, AuditConfig};
        let cfg = AuditConfig { n_max: 3, ..AuditConfig::default() };
        let report = check_class_count(&cfg);
        let lines = report_lines(&report, false);
        assert!(lines.len() > 1);
        for line in &lines {
            let pairs = parse_record_line(line).unwrap();
            assert_eq!(pairs[0], ("schema".to_string(), "1".to_string()));
            assert!(pairs.iter().any(|(k, _)| k == "record"));
            assert!(pairs.iter().any(|(k, _)| k == "claim"));
        }
    }

    #[test]
    fn timings_are_opt_in() {
        use crate::audit::{check_class_count, AuditConfig};
        let cfg = AuditConfig { n_max: 2, ..AuditConfig::default() };
        let report = check_class_count(&cfg);
        let plain = report_lines(&report, false);
        assert!(!plain[0].contains("runtime_ms"));
        let timed = report_lines(&report, true);
        assert!(timed[0].contains("runtime_ms"));
    }
}
