use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use innmonoid::verify::SuiteReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Everything a command prints. `failed` decides the exit code.
pub struct Report {
    pub command: String,
    pub digest: String,
    pub result: Value,
    /// Property suites, listed after `result`.
    pub suites: Vec<SuiteReport>,
    pub failed: bool,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{:x}", Sha256::digest(bytes))
}

fn suite_value(r: &SuiteReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            let mut m = Map::new();
            m.insert("name".into(), json!(c.name));
            m.insert(
                "status".into(),
                json!(if c.passed() { "ok" } else { "FAIL" }),
            );
            m.insert("cases".into(), json!(c.cases));
            m.insert("failures".into(), json!(c.failures));
            if let Some(d) = &c.first_failure {
                m.insert("first_failure".into(), json!(d));
            }
            Value::Object(m)
        })
        .collect();
    json!({
        "suite": r.suite,
        "status": if r.passed() { "pass" } else { "FAIL" },
        "checks": checks,
    })
}

impl Report {
    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut result = self.result.clone();
                if !self.suites.is_empty() {
                    let suites: Vec<Value> = self.suites.iter().map(suite_value).collect();
                    match &mut result {
                        Value::Object(m) => {
                            m.insert("suites".into(), Value::Array(suites));
                        }
                        _ => result = json!({ "suites": suites }),
                    }
                }
                let v = json!({
                    "command": self.command,
                    "input_digest": self.digest,
                    "result": result,
                    "status": if self.failed { "fail" } else { "pass" },
                });
                let mut s = serde_json::to_string_pretty(&v).expect("values serialise");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = format!("command: {}\ninput_digest: {}\n", self.command, self.digest);
                render(&self.result, 0, &mut out);
                for suite in &self.suites {
                    out.push_str(&suite.to_string());
                }
                out.push_str(if self.failed {
                    "status: fail\n"
                } else {
                    "status: pass\n"
                });
                out
            }
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.is_empty() => Some("[]".into()),
        _ => None,
    }
}

/// Indented `key: value` lines; list items start with `- `.
fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        let mut inner = String::new();
                        render(x, indent + 2, &mut inner);
                        out.push_str(&format!("{pad}- {}", &inner[indent + 2..]));
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(result: Value) -> Report {
        Report {
            command: "x".into(),
            digest: digest(b""),
            result,
            suites: Vec::new(),
            failed: false,
        }
    }

    #[test]
    fn json_keys_are_sorted() {
        let r = report(json!({"zeta": 1, "alpha": {"b": 2, "a": 1}}));
        let s = r.emit(Format::Json);
        assert!(s.find("\"alpha\"").unwrap() < s.find("\"zeta\"").unwrap());
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
        assert_eq!(s, r.emit(Format::Json));
    }

    #[test]
    fn text_layout() {
        let r = report(json!({"list": [{"b": 1, "a": "x y"}, "plain"], "map": "{}"}));
        let text = r.emit(Format::Text);
        assert!(
            text.contains("list:\n  - a: x y\n    b: 1\n  - plain\nmap: {}\n"),
            "{text}"
        );
    }

    #[test]
    fn empty_input_digest() {
        assert_eq!(
            digest(b""),
            "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
