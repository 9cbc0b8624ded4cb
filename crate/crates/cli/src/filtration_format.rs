//! Filtration documents, as line-based text (`.filt`) or JSON (`.json`).
//!
//! ```text
//! filtration 1
//! node K
//! attr kind = elementary
//! attr separable = true
//! node C(T)
//! attr kind = commutative
//! attr spectrum_dim = 1
//! attr spectrum_compact = true
//! flags liminary=unknown group_derived=false real_line=false
//! ```
//!
//! A `note <text>` line attaches free text to the document.
//!
//! The JSON form uses the same keys:
//! `{"filtration": 1, "nodes": [{"name": "K", "attrs": {"kind": "elementary"}}],
//! "flags": {"liminary": "unknown"}}`. Values are `true`, `false`,
//! `unknown`, naturals or `infinite`. Parsing is structural only; seeds
//! that contradict the rules surface when the document is inferred.

use orbit_rank_core::inference::{
    AlgebraFlags, DocError, FiberDim, FiltrationDoc, FiltrationNode, NodeAnnotation, NodeKind,
};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiltrationError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid JSON filtration: {0}")]
    Json(String),
    #[error(transparent)]
    Doc(#[from] DocError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum AttrValue {
    Bool(bool),
    Unknown,
    Nat(u32),
    Infinite,
    Word(String),
}

impl AttrValue {
    fn parse(text: &str) -> Self {
        match text {
            "true" => Self::Bool(true),
            "false" => Self::Bool(false),
            "unknown" => Self::Unknown,
            "infinite" => Self::Infinite,
            _ => text
                .parse()
                .map_or_else(|_| Self::Word(text.to_string()), Self::Nat),
        }
    }

    fn from_json(v: &Value) -> Result<Self, String> {
        match v {
            Value::Bool(b) => Ok(Self::Bool(*b)),
            Value::Null => Ok(Self::Unknown),
            Value::Number(n) => n
                .as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .map(Self::Nat)
                .ok_or_else(|| format!("`{n}` is not a natural number")),
            Value::String(s) => Ok(Self::parse(s)),
            other => Err(format!("unsupported value `{other}`")),
        }
    }
}

fn describe(v: &AttrValue) -> String {
    match v {
        AttrValue::Bool(b) => b.to_string(),
        AttrValue::Unknown => "unknown".into(),
        AttrValue::Nat(n) => n.to_string(),
        AttrValue::Infinite => "infinite".into(),
        AttrValue::Word(w) => w.clone(),
    }
}

fn as_bool(key: &str, v: &AttrValue) -> Result<Option<bool>, String> {
    match v {
        AttrValue::Bool(b) => Ok(Some(*b)),
        AttrValue::Unknown => Ok(None),
        other => Err(format!("`{key}` expects true, false or unknown, found `{}`", describe(other))),
    }
}

fn as_nat(key: &str, v: &AttrValue) -> Result<Option<u32>, String> {
    match v {
        AttrValue::Nat(n) => Ok(Some(*n)),
        AttrValue::Unknown => Ok(None),
        other => Err(format!("`{key}` expects a natural number or unknown, found `{}`", describe(other))),
    }
}

/// Node under construction; `kind` may come after other attributes.
#[derive(Default)]
struct NodeDraft {
    name: String,
    kind: Option<NodeKind>,
    attrs: Vec<(String, AttrValue)>,
}

impl NodeDraft {
    fn finish(self) -> Result<FiltrationNode, String> {
        let mut a = NodeAnnotation::new(self.kind.unwrap_or(NodeKind::Generic));
        for (key, v) in &self.attrs {
            let key = key.as_str();
            match key {
                "spectrum_dim" => a.spectrum_dim = as_nat(key, v)?,
                "compactification_dim" => a.compactification_dim = as_nat(key, v)?,
                "ambient_dim" => a.ambient_dim = as_nat(key, v)?,
                "seed_rr_lo" => a.seed_rr_lo = as_nat(key, v)?,
                "seed_rr_hi" => a.seed_rr_hi = as_nat(key, v)?,
                "seed_tsr_lo" => a.seed_tsr_lo = as_nat(key, v)?,
                "seed_tsr_hi" => a.seed_tsr_hi = as_nat(key, v)?,
                "spectrum_compact" => a.spectrum_compact = as_bool(key, v)?,
                "irreps_infinite_dim" => a.irreps_infinite_dim = as_bool(key, v)?,
                "hausdorff_spectrum" => a.hausdorff_spectrum = as_bool(key, v)?,
                "no_compact_spectrum_component" => {
                    a.no_compact_spectrum_component = as_bool(key, v)?
                }
                "separable" => a.separable = as_bool(key, v)?,
                "stable" => a.stable = as_bool(key, v)?,
                "fiber_dim" => {
                    a.fiber_dim = match v {
                        AttrValue::Infinite => Some(FiberDim::Infinite),
                        AttrValue::Nat(0) => return Err("`fiber_dim` must be positive".into()),
                        AttrValue::Nat(n) => Some(FiberDim::Finite(*n)),
                        AttrValue::Unknown => None,
                        other => {
                            return Err(format!(
                                "`fiber_dim` expects a natural number, infinite or unknown, found `{}`",
                                describe(other)
                            ))
                        }
                    }
                }
                other => return Err(format!("unknown attribute `{other}`")),
            }
        }
        Ok(FiltrationNode {
            name: self.name,
            annotation: a,
        })
    }

    fn add(&mut self, key: &str, value: AttrValue) -> Result<(), String> {
        if key == "kind" {
            let word = describe(&value);
            let kind = NodeKind::parse(&word).ok_or_else(|| format!("unknown node kind `{word}`"))?;
            if self.kind.replace(kind).is_some() {
                return Err("`kind` given twice".into());
            }
        } else if self.attrs.iter().any(|(k, _)| k == key) {
            return Err(format!("attribute `{key}` given twice"));
        } else {
            self.attrs.push((key.to_string(), value));
        }
        Ok(())
    }
}

fn apply_flag(flags: &mut AlgebraFlags, key: &str, v: &AttrValue) -> Result<(), String> {
    let definite = |v: &AttrValue| match as_bool(key, v)? {
        Some(b) => Ok(b),
        None => Err(format!("flag `{key}` must be true or false")),
    };
    match key {
        "liminary" => flags.liminary = as_bool(key, v)?,
        "group_derived" => flags.group_derived = definite(v)?,
        "real_line" => flags.real_line = definite(v)?,
        other => return Err(format!("unknown flag `{other}`")),
    }
    Ok(())
}

pub fn parse_filtration_text(text: &str) -> Result<FiltrationDoc, FiltrationError> {
    let err = |line: usize, message: String| FiltrationError::Syntax { line, message };
    let mut header = false;
    let mut drafts: Vec<(usize, NodeDraft)> = Vec::new();
    let mut flags = AlgebraFlags::default();
    let mut flags_seen = false;
    let mut notes = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        match words[0] {
            "filtration" if !header => {
                if words[1..] != ["1"] {
                    return Err(err(line, "expected `filtration 1`".into()));
                }
                header = true;
            }
            _ if !header => return Err(err(line, "expected header `filtration 1`".into())),
            "note" => notes.push(content["note".len()..].trim().to_string()),
            "node" => {
                let [_, name] = words[..] else {
                    return Err(err(line, "expected `node <name>`".into()));
                };
                drafts.push((
                    line,
                    NodeDraft {
                        name: name.to_string(),
                        ..NodeDraft::default()
                    },
                ));
            }
            "attr" => {
                let rest = content["attr".len()..].trim();
                let (key, value) = rest
                    .split_once('=')
                    .ok_or_else(|| err(line, "expected `attr <key> = <value>`".into()))?;
                let (key, value) = (key.trim(), value.trim());
                if key.is_empty() || value.is_empty() || value.contains(char::is_whitespace) {
                    return Err(err(line, "expected `attr <key> = <value>`".into()));
                }
                let (_, draft) = drafts
                    .last_mut()
                    .ok_or_else(|| err(line, "`attr` before any `node`".into()))?;
                draft
                    .add(key, AttrValue::parse(value))
                    .map_err(|m| err(line, m))?;
            }
            "flags" => {
                if std::mem::replace(&mut flags_seen, true) {
                    return Err(err(line, "`flags` given twice".into()));
                }
                for word in &words[1..] {
                    let (key, value) = word
                        .split_once('=')
                        .ok_or_else(|| err(line, format!("expected `key=value`, found `{word}`")))?;
                    apply_flag(&mut flags, key, &AttrValue::parse(value)).map_err(|m| err(line, m))?;
                }
            }
            other => return Err(err(line, format!("unexpected `{other}`"))),
        }
    }
    if !header {
        return Err(err(1, "missing header `filtration 1`".into()));
    }
    let mut nodes = Vec::with_capacity(drafts.len());
    for (line, draft) in drafts {
        nodes.push(draft.finish().map_err(|m| err(line, m))?);
    }
    let doc = FiltrationDoc::new(nodes, flags)?;
    Ok(notes.into_iter().fold(doc, FiltrationDoc::with_note))
}

pub fn parse_filtration_json(text: &str) -> Result<FiltrationDoc, FiltrationError> {
    let bad = |m: String| FiltrationError::Json(m);
    let root: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let obj = root.as_object().ok_or_else(|| bad("expected an object".into()))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "filtration" | "nodes" | "flags" | "notes") {
            return Err(bad(format!("unknown key `{key}`")));
        }
    }
    if obj.get("filtration").and_then(Value::as_u64) != Some(1) {
        return Err(bad("expected \"filtration\": 1".into()));
    }
    let nodes_json = obj
        .get("nodes")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("expected a \"nodes\" array".into()))?;
    let mut nodes = Vec::with_capacity(nodes_json.len());
    for (i, n) in nodes_json.iter().enumerate() {
        let ctx = |m: String| bad(format!("node {i}: {m}"));
        let name = n
            .get("name")
            .and_then(Value::as_str)
            .ok_or_else(|| ctx("missing \"name\"".into()))?;
        let mut draft = NodeDraft {
            name: name.to_string(),
            ..NodeDraft::default()
        };
        if let Some(attrs) = n.get("attrs") {
            let attrs = attrs
                .as_object()
                .ok_or_else(|| ctx("\"attrs\" must be an object".into()))?;
            for (key, v) in attrs {
                let value = AttrValue::from_json(v).map_err(ctx)?;
                draft.add(key, value).map_err(ctx)?;
            }
        }
        nodes.push(draft.finish().map_err(ctx)?);
    }
    let mut flags = AlgebraFlags::default();
    if let Some(f) = obj.get("flags") {
        let f = f
            .as_object()
            .ok_or_else(|| bad("\"flags\" must be an object".into()))?;
        for (key, v) in f {
            let value = AttrValue::from_json(v).map_err(bad)?;
            apply_flag(&mut flags, key, &value).map_err(bad)?;
        }
    }
    let mut doc = FiltrationDoc::new(nodes, flags)?;
    if let Some(notes) = obj.get("notes") {
        let notes = notes
            .as_array()
            .ok_or_else(|| bad("\"notes\" must be an array of strings".into()))?;
        for note in notes {
            let note = note
                .as_str()
                .ok_or_else(|| bad("\"notes\" must be an array of strings".into()))?;
            doc = doc.with_note(note);
        }
    }
    Ok(doc)
}

/// Chooses the format by extension: `.json` is JSON, anything else text.
pub fn parse_filtration(path: &str, text: &str) -> Result<FiltrationDoc, FiltrationError> {
    if path.ends_with(".json") {
        parse_filtration_json(text)
    } else {
        parse_filtration_text(text)
    }
}

fn bool_word(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "unknown",
    }
}

/// The `.filt` text of a document. Only known attributes are written.
pub fn render_filtration(doc: &FiltrationDoc) -> String {
    let mut out = String::from("filtration 1\n");
    for note in doc.notes() {
        out.push_str(&format!("note {note}\n"));
    }
    for node in doc.nodes() {
        let a = &node.annotation;
        out.push_str(&format!("node {}\nattr kind = {}\n", node.name, a.kind.as_str()));
        let nats = [
            ("spectrum_dim", a.spectrum_dim),
            ("compactification_dim", a.compactification_dim),
            ("ambient_dim", a.ambient_dim),
        ];
        let bools = [
            ("spectrum_compact", a.spectrum_compact),
            ("irreps_infinite_dim", a.irreps_infinite_dim),
            ("hausdorff_spectrum", a.hausdorff_spectrum),
            ("no_compact_spectrum_component", a.no_compact_spectrum_component),
            ("separable", a.separable),
            ("stable", a.stable),
        ];
        for (key, v) in nats {
            if let Some(v) = v {
                out.push_str(&format!("attr {key} = {v}\n"));
            }
        }
        for (key, v) in bools {
            if v.is_some() {
                out.push_str(&format!("attr {key} = {}\n", bool_word(v)));
            }
        }
        match a.fiber_dim {
            Some(FiberDim::Infinite) => out.push_str("attr fiber_dim = infinite\n"),
            Some(FiberDim::Finite(d)) => out.push_str(&format!("attr fiber_dim = {d}\n")),
            None => {}
        }
        let seeds = [
            ("seed_rr_lo", a.seed_rr_lo),
            ("seed_rr_hi", a.seed_rr_hi),
            ("seed_tsr_lo", a.seed_tsr_lo),
            ("seed_tsr_hi", a.seed_tsr_hi),
        ];
        for (key, v) in seeds {
            if let Some(v) = v {
                out.push_str(&format!("attr {key} = {v}\n"));
            }
        }
    }
    let f = doc.flags();
    out.push_str(&format!(
        "flags liminary={} group_derived={} real_line={}\n",
        bool_word(f.liminary),
        f.group_derived,
        f.real_line
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOEPLITZ: &str = "filtration 1\nnode K\nattr kind = elementary\nattr separable = true\n\
        node C(T)\nattr kind = commutative\nattr spectrum_dim = 1\nattr spectrum_compact = true\n\
        flags liminary=unknown group_derived=false real_line=false\n";

    #[test]
    fn text_and_json_agree() {
        let text = parse_filtration_text(TOEPLITZ).unwrap();
        let json = parse_filtration_json(
            r#"{"filtration": 1,
                "nodes": [
                  {"name": "K", "attrs": {"kind": "elementary", "separable": true}},
                  {"name": "C(T)", "attrs": {"kind": "commutative", "spectrum_dim": 1, "spectrum_compact": true}}
                ],
                "flags": {"liminary": "unknown", "group_derived": false, "real_line": false}}"#,
        )
        .unwrap();
        assert_eq!(text, json);
        assert_eq!(text.nodes().len(), 2);
        assert_eq!(text.nodes()[0].annotation.spectrum_dim, Some(0));
    }

    #[test]
    fn render_round_trip() {
        let doc = parse_filtration_text(TOEPLITZ).unwrap();
        assert_eq!(parse_filtration_text(&render_filtration(&doc)).unwrap(), doc);
    }

    #[test]
    fn seeds_are_not_checked_at_parse_time() {
        let text = "filtration 1\nnode A\nattr seed_rr_lo = 3\nattr seed_rr_hi = 1\n";
        assert!(parse_filtration_text(text).is_ok());
    }

    #[test]
    fn structural_errors() {
        let cases = [
            ("node A\n", 1),
            ("filtration 1\nattr kind = commutative\n", 2),
            ("filtration 1\nnode A\nattr colour = red\n", 2),
            ("filtration 1\nnode A\nattr kind = elementary\nattr kind = commutative\n", 4),
            ("filtration 1\nnode A\nattr spectrum_dim = yes\n", 2),
            ("filtration 1\nnode A\nflags group_derived=unknown\n", 3),
        ];
        for (text, line) in cases {
            match parse_filtration_text(text) {
                Err(FiltrationError::Syntax { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(matches!(
            parse_filtration_text("filtration 1\n"),
            Err(FiltrationError::Doc(DocError::Empty))
        ));
        assert!(matches!(
            parse_filtration_text("filtration 1\nnode A\nattr kind = commutative\nattr irreps_infinite_dim = true\n"),
            Err(FiltrationError::Doc(DocError::KindConflict { .. }))
        ));
    }
}
