//! Plain-text and JSON forms of presentations.
//!
//! ```text
//! gen e0_1 e0_2 e1_2
//! rel e0_1 e1_2 e0_2'   # triangle
//! rel e0_2' e1_2 e0_1   # triangle
//! ```

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::presentation::{HeightWindow, Presentation, PresentationError, RelatorTag, SpreadFamily};

fn tag_comment(tag: &RelatorTag) -> Option<String> {
    match tag {
        RelatorTag::Other => None,
        RelatorTag::Triangle => Some("triangle".into()),
        RelatorTag::SpreadPower { height, loop_id, family } => {
            let mut s = format!("spread-power height={height} loop={loop_id}");
            if *family != SpreadFamily::Plain {
                let name = match family {
                    SpreadFamily::Alpha => "alpha",
                    SpreadFamily::Beta => "beta",
                    SpreadFamily::Plain => unreachable!(),
                };
                write!(s, " family={name}").expect("writing to a string");
            }
            Some(s)
        }
    }
}

fn parse_tag(text: &str) -> Result<RelatorTag, String> {
    let mut parts = text.split_whitespace();
    match parts.next() {
        None | Some("other") => Ok(RelatorTag::Other),
        Some("triangle") => Ok(RelatorTag::Triangle),
        Some("spread-power") => {
            let (mut height, mut loop_id, mut family) = (None, None, SpreadFamily::Plain);
            for part in parts {
                let (key, value) = part.split_once('=').ok_or_else(|| format!("bad tag field {part:?}"))?;
                match key {
                    "height" => height = Some(value.parse().map_err(|_| format!("bad height {value:?}"))?),
                    "loop" => loop_id = Some(value.parse().map_err(|_| format!("bad loop id {value:?}"))?),
                    "family" => {
                        family = match value {
                            "alpha" => SpreadFamily::Alpha,
                            "beta" => SpreadFamily::Beta,
                            "plain" => SpreadFamily::Plain,
                            _ => return Err(format!("unknown family {value:?}")),
                        }
                    }
                    _ => return Err(format!("unknown tag field {key:?}")),
                }
            }
            Ok(RelatorTag::SpreadPower {
                height: height.ok_or("spread-power tag needs height=")?,
                loop_id: loop_id.ok_or("spread-power tag needs loop=")?,
                family,
            })
        }
        Some(other) => Err(format!("unknown tag {other:?}")),
    }
}

impl Presentation {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "gen {}", self.generators().join(" ")).expect("writing to a string");
        if let Some(w) = self.window() {
            let extends = if w.extends_to_all_heights { " extends" } else { "" };
            writeln!(out, "window {} {}{extends}", w.min, w.max).expect("writing to a string");
        }
        for (r, tag) in self.relators().iter().zip(self.tags()) {
            match tag_comment(tag) {
                Some(c) => writeln!(out, "rel {}  # {c}", self.format_word(r)),
                None => writeln!(out, "rel {}", self.format_word(r)),
            }
            .expect("writing to a string");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, PresentationError> {
        let mut generators: Vec<String> = Vec::new();
        let mut window = None;
        let mut relators: Vec<(usize, String, RelatorTag)> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let err = |message: String| PresentationError::Parse { line, message };
            let (body, comment) = match raw.split_once('#') {
                Some((b, c)) => (b.trim(), Some(c.trim())),
                None => (raw.trim(), None),
            };
            let Some((keyword, rest)) = body.split_once(char::is_whitespace).or(
                (!body.is_empty()).then_some((body, "")),
            ) else {
                continue;
            };
            match keyword {
                "gen" => generators.extend(rest.split_whitespace().map(String::from)),
                "rel" => {
                    let tag = comment.map_or(Ok(RelatorTag::Other), parse_tag).map_err(err)?;
                    relators.push((line, rest.to_string(), tag));
                }
                "window" => {
                    let fields: Vec<&str> = rest.split_whitespace().collect();
                    let parse = |s: &str| s.parse::<i64>().map_err(|_| err(format!("bad height {s:?}")));
                    match fields.as_slice() {
                        [lo, hi] | [lo, hi, "extends"] => {
                            window = Some(HeightWindow {
                                min: parse(lo)?,
                                max: parse(hi)?,
                                extends_to_all_heights: fields.len() == 3,
                            })
                        }
                        _ => return Err(err("expected: window <min> <max> [extends]".into())),
                    }
                }
                other => return Err(err(format!("unknown keyword {other:?}"))),
            }
        }
        let shell = Presentation::untagged(generators, Vec::new())?;
        let mut words = Vec::with_capacity(relators.len());
        let mut tags = Vec::with_capacity(relators.len());
        for (line, text, tag) in relators {
            let word = shell.parse_word(&text).map_err(|e| PresentationError::Parse {
                line,
                message: e.to_string(),
            })?;
            words.push(word);
            tags.push(tag);
        }
        Ok(Presentation::new(shell.generators().to_vec(), words, tags)?.with_window(window))
    }
}

#[derive(Serialize, Deserialize)]
struct RelatorEntry {
    word: String,
    tag: RelatorTag,
}

#[derive(Serialize, Deserialize)]
struct PresentationFile {
    generators: Vec<String>,
    relators: Vec<RelatorEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    window: Option<HeightWindow>,
}

impl Serialize for Presentation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PresentationFile {
            generators: self.generators().to_vec(),
            relators: self
                .relators()
                .iter()
                .zip(self.tags())
                .map(|(r, &tag)| RelatorEntry { word: self.format_word(r), tag })
                .collect(),
            window: self.window(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let file = PresentationFile::deserialize(deserializer)?;
        let shell = Presentation::untagged(file.generators, Vec::new()).map_err(serde::de::Error::custom)?;
        let mut words = Vec::new();
        let mut tags = Vec::new();
        for entry in file.relators {
            words.push(shell.parse_word(&entry.word).map_err(serde::de::Error::custom)?);
            tags.push(entry.tag);
        }
        Presentation::new(shell.generators().to_vec(), words, tags)
            .map(|p| p.with_window(file.window))
            .map_err(serde::de::Error::custom)
    }
}
