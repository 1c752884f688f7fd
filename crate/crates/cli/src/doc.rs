//! Input documents: coverings, braid words, curves/intervals and restriction
//! specs.

use bcover::{Base, BraidWord, MonodromySequence, RestrictionSpec, Transposition};
use serde::{Deserialize, Serialize};

use crate::InputError;

/// `{"degree": d, "monodromy": [[a, b], …]}` with 1-based sheets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoveringDocument {
    pub degree: u32,
    pub monodromy: Vec<[u32; 2]>,
}

impl CoveringDocument {
    pub fn from_sequence(seq: &MonodromySequence) -> Self {
        CoveringDocument {
            degree: seq.degree(),
            monodromy: seq.entries().iter().map(|t| [t.a(), t.b()]).collect(),
        }
    }

    pub fn to_sequence(&self) -> Result<MonodromySequence, InputError> {
        let mut entries = Vec::with_capacity(self.monodromy.len());
        for (k, &[x, y]) in self.monodromy.iter().enumerate() {
            let t = Transposition::on(self.degree, x, y)
                .map_err(|e| InputError::new(format!("monodromy entry {}: {e}", k + 1)))?;
            entries.push(t);
        }
        Ok(MonodromySequence::new(self.degree, entries)?)
    }
}

pub fn parse_covering(text: &str) -> Result<MonodromySequence, InputError> {
    let doc: CoveringDocument = serde_json::from_str(text)?;
    doc.to_sequence()
}

/// Single-line JSON covering document followed by a newline.
pub fn emit_covering(seq: &MonodromySequence) -> String {
    let mut out = serde_json::to_string(&CoveringDocument::from_sequence(seq)).expect("plain data");
    out.push('\n');
    out
}

/// Whitespace-separated signed generator indices, e.g. `"2 1 1 -2"`.
pub fn parse_letters(text: &str) -> Result<Vec<i32>, InputError> {
    text.split_whitespace()
        .map(|tok| {
            let l: i32 = tok
                .parse()
                .map_err(|_| InputError::new(format!("bad braid letter {tok:?}")))?;
            if l == 0 {
                return Err(InputError::new("braid letter 0 is not a generator"));
            }
            Ok(l)
        })
        .collect()
}

pub fn parse_braid(strands: usize, text: &str) -> Result<BraidWord, InputError> {
    Ok(BraidWord::new(strands, parse_letters(text)?)?)
}

/// `{"base": j, "word": [...]}` for curves `(α_j)w` and intervals `(x_j)w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransportDocument {
    pub base: usize,
    #[serde(default)]
    pub word: Vec<i32>,
}

impl TransportDocument {
    pub fn braid(&self, strands: usize) -> Result<BraidWord, InputError> {
        Ok(BraidWord::new(strands, self.word.clone())?)
    }
}

pub fn parse_transport(text: &str) -> Result<TransportDocument, InputError> {
    Ok(serde_json::from_str(text)?)
}

/// A curve system: one document or a list of documents sharing their word.
pub fn parse_system(text: &str) -> Result<Vec<TransportDocument>, InputError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let docs = if value.is_array() {
        serde_json::from_value(value)?
    } else {
        vec![serde_json::from_value(value)?]
    };
    Ok(docs)
}

pub fn parse_base(text: &str) -> Result<Base, InputError> {
    match text {
        "start" => Ok(Base::Start),
        "end" => Ok(Base::End),
        other => Err(InputError::new(format!(
            "base must be start or end, got {other:?}"
        ))),
    }
}

pub fn base_name(base: Base) -> &'static str {
    match base {
        Base::Start => "start",
        Base::End => "end",
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RestrictionDocument {
    indices: Vec<usize>,
    base: String,
}

/// `{"indices": [...], "base": "start"|"end"}`.
pub fn parse_restriction(text: &str) -> Result<RestrictionSpec, InputError> {
    let doc: RestrictionDocument = serde_json::from_str(text)?;
    Ok(RestrictionSpec::new(doc.indices, parse_base(&doc.base)?)?)
}

/// Comma-separated list of positive integers; empty text is the empty list.
pub fn parse_csv(text: &str) -> Result<Vec<u32>, InputError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u32>()
                .map_err(|_| InputError::new(format!("expected a positive integer, got {s:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covering_examples() {
        let p3 = parse_covering(r#"{"degree":4,"monodromy":[[1,2],[2,3],[3,4]]}"#).unwrap();
        assert_eq!(p3, MonodromySequence::disk(3));
        let empty = parse_covering(r#"{"degree":2,"monodromy":[]}"#).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.degree(), 2);
        assert!(parse_covering(r#"{"degree":3,"monodromy":[[3,3]]}"#).is_err());
        assert!(parse_covering(r#"{"degree":3,"monodromy":[[1,4]]}"#).is_err());
        assert!(parse_covering(r#"{"degree":0,"monodromy":[]}"#).is_err());
        assert!(parse_covering(r#"{"degree":3,"monodromy":[[1,2,3]]}"#).is_err());
        assert!(parse_covering("not json").is_err());
    }

    #[test]
    fn covering_normalizes_pairs() {
        let s = parse_covering(r#"{"degree":3,"monodromy":[[2,1],[3,2]]}"#).unwrap();
        assert_eq!(
            emit_covering(&s),
            "{\"degree\":3,\"monodromy\":[[1,2],[2,3]]}\n"
        );
    }

    #[test]
    fn braid_words() {
        assert_eq!(parse_letters("2 1 1 -2").unwrap(), vec![2, 1, 1, -2]);
        assert_eq!(parse_letters("  ").unwrap(), Vec::<i32>::new());
        assert!(parse_letters("1 0").is_err());
        assert!(parse_letters("1 x").is_err());
        assert!(parse_braid(3, "3").is_err());
        assert_eq!(parse_braid(3, "-2 1").unwrap().letters(), &[-2, 1]);
    }

    #[test]
    fn transports_and_restrictions() {
        let t = parse_transport(r#"{"base":1,"word":[-2,-1,2]}"#).unwrap();
        assert_eq!(t.base, 1);
        assert_eq!(t.word, vec![-2, -1, 2]);
        assert_eq!(
            parse_transport(r#"{"base":3}"#).unwrap().word,
            Vec::<i32>::new()
        );
        assert_eq!(
            parse_system(r#"[{"base":1,"word":[]},{"base":2,"word":[]}]"#)
                .unwrap()
                .len(),
            2
        );
        let r = parse_restriction(r#"{"indices":[3,1],"base":"end"}"#).unwrap();
        assert_eq!(r.indices(), &[1, 3]);
        assert_eq!(r.base(), Base::End);
        assert!(parse_restriction(r#"{"indices":[],"base":"end"}"#).is_err());
        assert!(parse_restriction(r#"{"indices":[1],"base":"middle"}"#).is_err());
        assert_eq!(parse_csv("1, 3,2").unwrap(), vec![1, 3, 2]);
        assert!(parse_csv("1,-3").is_err());
    }
}
