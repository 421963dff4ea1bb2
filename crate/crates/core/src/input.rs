//! Ring and group input records.
//!
//! Both are small TOML documents with named sections. Rational matrix entries
//! are strings of the form `"p/q"` or `"p"`.
//!
//! ```toml
//! [ring]
//! name = "taf_d6"
//! coefficients = "Z[1/6]"
//!
//! [[generator]]
//! symbol = "x"
//! degree = 8
//!
//! [[relation]]
//! symbol = "f"
//! degree = 48
//! ```

use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graded_ring::{GradedSymbol, RingPresentation};
use crate::invariants::{
    builtin_table, generate_group, GradedBlock, GradedGroupRep, GroupElement, Irreducible,
    RationalCharacterTable, RationalMatrix,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("ParseError at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("ParseError in field {field}: {message}")]
    Field { field: String, message: String },
}

fn field_error(field: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Field {
        field: field.into(),
        message: message.into(),
    }
}

fn syntax_error(text: &str, err: &toml::de::Error) -> ParseError {
    let offset = err.span().map_or(0, |s| s.start);
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    ParseError::Syntax {
        line,
        column,
        message: err.message().to_string(),
    }
}

fn parse_toml<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, ParseError> {
    toml::from_str(text).map_err(|e| syntax_error(text, &e))
}

fn render_toml<T: Serialize>(record: &T) -> String {
    toml::to_string(record).expect("records serialize to TOML")
}

pub fn parse_rational(field: &str, s: &str) -> Result<BigRational, ParseError> {
    let s = s.trim();
    if s.ends_with("/0") || s.contains("/-") {
        return Err(field_error(field, format!("invalid rational {s:?}")));
    }
    BigRational::from_str(s).map_err(|_| field_error(field, format!("invalid rational {s:?}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolRecord {
    pub symbol: String,
    pub degree: u32,
    /// Display-only, e.g. the explicit relation polynomial.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equation: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingHeader {
    pub name: String,
    #[serde(default = "default_coefficients")]
    pub coefficients: String,
    #[serde(default = "default_true")]
    pub regular_sequence: bool,
}

fn default_coefficients() -> String {
    "K".into()
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingInputRecord {
    pub ring: RingHeader,
    #[serde(default, rename = "generator")]
    pub generators: Vec<SymbolRecord>,
    #[serde(default, rename = "relation", skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<SymbolRecord>,
}

impl RingInputRecord {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse_toml(text)
    }

    pub fn to_text(&self) -> String {
        render_toml(self)
    }

    pub fn from_presentation(p: &RingPresentation) -> Self {
        let records = |v: &[GradedSymbol]| {
            v.iter()
                .map(|s| SymbolRecord {
                    symbol: s.symbol.clone(),
                    degree: s.degree,
                    equation: None,
                })
                .collect()
        };
        Self {
            ring: RingHeader {
                name: p.name().to_string(),
                coefficients: p.coefficient_label().to_string(),
                regular_sequence: p.regular_sequence_asserted(),
            },
            generators: records(p.generators()),
            relations: records(p.relations()),
        }
    }

    pub fn to_presentation(&self) -> Result<RingPresentation, ParseError> {
        if self.generators.is_empty() {
            return Err(field_error(
                "generator",
                "at least one generator is required",
            ));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if g.degree == 0 {
                return Err(field_error(
                    format!("generator[{i}].degree"),
                    "must be at least 1",
                ));
            }
        }
        for (i, r) in self.relations.iter().enumerate() {
            if r.degree < 2 {
                return Err(field_error(
                    format!("relation[{i}].degree"),
                    "must be at least 2",
                ));
            }
        }
        let symbols = |v: &[SymbolRecord]| {
            v.iter()
                .map(|s| GradedSymbol {
                    symbol: s.symbol.clone(),
                    degree: s.degree,
                })
                .collect()
        };
        RingPresentation::new(
            self.ring.name.clone(),
            self.ring.coefficients.clone(),
            symbols(&self.generators),
            symbols(&self.relations),
            self.ring.regular_sequence,
        )
        .map_err(|e| field_error("ring", e.to_string()))
    }
}

/// Parses a ring file straight to a presentation.
pub fn parse_ring(text: &str) -> Result<RingPresentation, ParseError> {
    RingInputRecord::parse(text)?.to_presentation()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupHeader {
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockRecord {
    pub degree: u32,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorRecord {
    pub name: String,
    /// One square matrix per block, rows of rational strings.
    pub matrices: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IrreducibleRecord {
    pub name: String,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterTableRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    /// Class representatives as words in the generator names, `1` for the identity.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub classes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sizes: Vec<usize>,
    #[serde(default, rename = "irreducible", skip_serializing_if = "Vec::is_empty")]
    pub irreducibles: Vec<IrreducibleRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupInputRecord {
    pub group: GroupHeader,
    #[serde(rename = "block")]
    pub blocks: Vec<BlockRecord>,
    #[serde(default, rename = "generator")]
    pub generators: Vec<GeneratorRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character_table: Option<CharacterTableRecord>,
}

/// A group with its optional character table, ready for computation.
#[derive(Debug, Clone)]
pub struct LoadedGroup {
    pub group: GradedGroupRep,
    pub table: Option<RationalCharacterTable>,
}

impl GroupInputRecord {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse_toml(text)
    }

    pub fn to_text(&self) -> String {
        render_toml(self)
    }

    fn blocks(&self) -> Result<Vec<GradedBlock>, ParseError> {
        if self.blocks.is_empty() {
            return Err(field_error("block", "at least one block is required"));
        }
        self.blocks
            .iter()
            .enumerate()
            .map(|(i, b)| {
                if b.degree == 0 || b.dimension == 0 {
                    Err(field_error(
                        format!("block[{i}]"),
                        "degree and dimension must be positive",
                    ))
                } else {
                    Ok(GradedBlock {
                        degree: b.degree,
                        dimension: b.dimension,
                    })
                }
            })
            .collect()
    }

    fn generators(
        &self,
        blocks: &[GradedBlock],
    ) -> Result<Vec<(String, GroupElement)>, ParseError> {
        let mut out = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            if g.matrices.len() != blocks.len() {
                return Err(field_error(
                    format!("generator[{i}].matrices"),
                    format!(
                        "expected {} block matrices, found {}",
                        blocks.len(),
                        g.matrices.len()
                    ),
                ));
            }
            let mut mats = Vec::new();
            for (j, (rows, block)) in g.matrices.iter().zip(blocks).enumerate() {
                let field = format!("generator[{i}].matrices[{j}]");
                if rows.len() != block.dimension || rows.iter().any(|r| r.len() != block.dimension)
                {
                    return Err(field_error(
                        field,
                        format!("must be {0}x{0}", block.dimension),
                    ));
                }
                let parsed = rows
                    .iter()
                    .map(|r| r.iter().map(|s| parse_rational(&field, s)).collect())
                    .collect::<Result<Vec<Vec<_>>, _>>()?;
                mats.push(RationalMatrix::from_rows(parsed).expect("shape checked above"));
            }
            out.push((g.name.clone(), GroupElement::new(mats)));
        }
        Ok(out)
    }

    /// Enumerates the group (up to `cap` elements) and resolves its table.
    pub fn load(&self, cap: usize) -> Result<LoadedGroup, crate::Error> {
        let blocks = self.blocks()?;
        let generators = self.generators(&blocks)?;
        let group = generate_group(self.group.name.clone(), blocks, generators, cap)?;
        let table = match &self.character_table {
            None => None,
            Some(t) => Some(resolve_table(t, &group)?),
        };
        Ok(LoadedGroup { group, table })
    }
}

fn resolve_table(
    t: &CharacterTableRecord,
    group: &GradedGroupRep,
) -> Result<RationalCharacterTable, crate::Error> {
    if let Some(name) = &t.builtin {
        return Ok(builtin_table(name, group)?);
    }
    let reps = t
        .classes
        .iter()
        .enumerate()
        .map(|(i, w)| {
            group.evaluate_word(w).ok_or_else(|| {
                field_error(
                    format!("character_table.classes[{i}]"),
                    format!("unknown word {w:?}"),
                )
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let irreducibles = t
        .irreducibles
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let field = format!("character_table.irreducible[{i}].values");
            Ok(Irreducible {
                name: r.name.clone(),
                values: r
                    .values
                    .iter()
                    .map(|v| parse_rational(&field, v))
                    .collect::<Result<_, ParseError>>()?,
            })
        })
        .collect::<Result<Vec<_>, ParseError>>()?;
    Ok(RationalCharacterTable::new(
        group,
        &reps,
        &t.sizes,
        irreducibles,
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TAF: &str = r#"
[ring]
name = "taf_d6"
coefficients = "Z[1/6]"

[[generator]]
symbol = "x"
degree = 8

[[generator]]
symbol = "y"
degree = 12

[[generator]]
symbol = "z"
degree = 24

[[relation]]
symbol = "f"
degree = 48
"#;

    #[test]
    fn parses_ring() {
        let p = parse_ring(TAF).unwrap();
        assert_eq!(p.generator_degrees(), vec![8, 12, 24]);
        assert_eq!(p.relation_degrees(), vec![48]);
        assert_eq!(p.coefficient_label(), "Z[1/6]");
        assert!(p.regular_sequence_asserted());
    }

    #[test]
    fn reserialization_is_a_fixpoint() {
        let rec = RingInputRecord::parse(TAF).unwrap();
        let text = rec.to_text();
        let again = RingInputRecord::parse(&text).unwrap();
        assert_eq!(again, rec);
        assert_eq!(again.to_text(), text);
        assert_eq!(
            RingInputRecord::from_presentation(&rec.to_presentation().unwrap()),
            rec
        );
    }

    #[test]
    fn syntax_errors_carry_location() {
        let err =
            parse_ring("[ring]\nname = \"x\"\n[[generator]]\nsymbol = \"x\"\ndegree = \"two\"\n")
                .unwrap_err();
        match err {
            ParseError::Syntax { line, .. } => assert_eq!(line, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_ring("[ring]\nname = 1\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn field_errors_name_the_field() {
        let text = "[ring]\nname = \"bad\"\n[[generator]]\nsymbol = \"x\"\ndegree = 0\n";
        assert_eq!(
            parse_ring(text),
            Err(field_error("generator[0].degree", "must be at least 1"))
        );
        let text = "[ring]\nname = \"bad\"\n[[generator]]\nsymbol = \"x\"\ndegree = 2\n[[relation]]\nsymbol = \"x\"\ndegree = 4\n";
        assert!(matches!(parse_ring(text), Err(ParseError::Field { .. })));
    }

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational("f", "-3/6").unwrap(),
            crate::series::rational(-1) / crate::series::rational(2)
        );
        assert!(parse_rational("f", "1/0").is_err());
        assert!(parse_rational("f", "0.5").is_err());
    }

    const S3: &str = r#"
[group]
name = "S3"

[[block]]
degree = 4
dimension = 2

[[generator]]
name = "s"
matrices = [[["-1", "1"], ["0", "1"]]]

[[generator]]
name = "t"
matrices = [[["1", "0"], ["1", "-1"]]]

[character_table]
classes = ["1", "s", "s*t"]
sizes = [1, 3, 2]

[[character_table.irreducible]]
name = "eps"
values = ["1", "1", "1"]

[[character_table.irreducible]]
name = "det"
values = ["1", "-1", "1"]

[[character_table.irreducible]]
name = "V"
values = ["2", "0", "-1"]
"#;

    #[test]
    fn loads_group_with_explicit_table() {
        let rec = GroupInputRecord::parse(S3).unwrap();
        let loaded = rec.load(100).unwrap();
        assert_eq!(loaded.group.order(), 6);
        let table = loaded.table.unwrap();
        let builtin = builtin_table("S3", &loaded.group).unwrap();
        assert_eq!(table, builtin);
        let text = rec.to_text();
        assert_eq!(GroupInputRecord::parse(&text).unwrap(), rec);
    }

    #[test]
    fn group_shape_errors() {
        let text = S3.replace(r#"[[["-1", "1"], ["0", "1"]]]"#, r#"[[["-1", "1"]]]"#);
        let err = GroupInputRecord::parse(&text)
            .unwrap()
            .load(100)
            .unwrap_err();
        assert!(
            err.to_string().contains("generator[0].matrices[0]"),
            "{err}"
        );
        let text = S3.replace("s*t", "s*u");
        let err = GroupInputRecord::parse(&text)
            .unwrap()
            .load(100)
            .unwrap_err();
        assert!(
            err.to_string().contains("character_table.classes[2]"),
            "{err}"
        );
        let err = GroupInputRecord::parse(S3).unwrap().load(3).unwrap_err();
        assert!(err.to_string().starts_with("OrderCapExceeded"), "{err}");
    }
}
