//! Report assembly and rendering. JSON output is deterministic (sorted keys
//! via the default map, ordered arrays elsewhere); `--table` renders the
//! same data as aligned plain text.

use serde_json::{json, Map, Value};

pub struct Report {
    command: String,
    input: Option<(String, String)>,
    args: Map<String, Value>,
    results: Map<String, Value>,
    certificates: Option<Value>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            input: None,
            args: Map::new(),
            results: Map::new(),
            certificates: None,
        }
    }

    pub fn input(mut self, path: &str, sha256: &str) -> Report {
        self.input = Some((path.to_string(), sha256.to_string()));
        self
    }

    pub fn arg(mut self, key: &str, value: impl Into<Value>) -> Report {
        self.args.insert(key.to_string(), value.into());
        self
    }

    pub fn result(mut self, key: &str, value: impl Into<Value>) -> Report {
        self.results.insert(key.to_string(), value.into());
        self
    }

    pub fn certificates(mut self, value: Value) -> Report {
        self.certificates = Some(value);
        self
    }

    fn to_value(&self) -> Value {
        let mut top = Map::new();
        top.insert("command".into(), Value::String(self.command.clone()));
        if let Some((path, sha)) = &self.input {
            top.insert("input".into(), json!({ "path": path, "sha256": sha }));
        }
        if !self.args.is_empty() {
            top.insert("args".into(), Value::Object(self.args.clone()));
        }
        top.insert("results".into(), Value::Object(self.results.clone()));
        if let Some(c) = &self.certificates {
            top.insert("certificates".into(), c.clone());
        }
        Value::Object(top)
    }

    pub fn print(&self, table: bool) {
        if table {
            println!("# {}", self.command);
            if let Some((path, sha)) = &self.input {
                println!("input: {path} (sha256 {})", &sha[..16]);
            }
            for (k, v) in &self.args {
                println!("arg {k}: {}", scalar(v));
            }
            for (k, v) in &self.results {
                render(k, v, 0);
            }
            if let Some(c) = &self.certificates {
                render("certificates", c, 0);
            }
        } else {
            println!("{}", serde_json::to_string_pretty(&self.to_value()).expect("serializable"));
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render(key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Array(items) => {
            // Arrays of [label, value]-style pairs become aligned rows.
            let all_pairs = items.iter().all(|i| matches!(i, Value::Array(p) if p.len() >= 2));
            if all_pairs && !items.is_empty() {
                println!("{pad}{key}:");
                for item in items {
                    let parts: Vec<String> =
                        item.as_array().unwrap().iter().map(scalar).collect();
                    let (last, head) = parts.split_last().unwrap();
                    println!("{pad}  {} = {last}", head.join(" "));
                }
            } else {
                let parts: Vec<String> = items.iter().map(scalar).collect();
                println!("{pad}{key}: {}", parts.join(", "));
            }
        }
        Value::Object(map) => {
            println!("{pad}{key}:");
            for (k, inner) in map {
                render(k, inner, depth + 1);
            }
        }
        other => println!("{pad}{key}: {}", scalar(other)),
    }
}
