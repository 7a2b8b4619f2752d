//! Tower description files: the working field, levels, covers, named points,
//! checker parameters and optional checker instances.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;

use crate::cover::CoverMap;
use crate::curve::{CurveLevel, Point};
use crate::divisor::{parse_point, Divisor};
use crate::error::{Error, Result};
use crate::exact::expr::{parse_bipoly, parse_rational_poly};
use crate::exact::NumberField;
use crate::ideals::INTERPOLATION_CAP;
use crate::pic::DEFAULT_TORSION_BOUND;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTower {
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    field: Option<RawField>,
    levels: Vec<RawLevel>,
    #[serde(default)]
    covers: Vec<RawCover>,
    #[serde(default)]
    points: BTreeMap<String, RawPoint>,
    #[serde(default)]
    params: Params,
    #[serde(default)]
    trace: Option<TraceSpec>,
    #[serde(default)]
    phi: Option<PhiSpec>,
    #[serde(default)]
    field_basis: Option<FieldBasisSpec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawField {
    generator: String,
    minpoly: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLevel {
    id: String,
    kind: String,
    #[serde(default)]
    equation: Option<String>,
    #[serde(default)]
    parent: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCover {
    source: String,
    target: String,
    formulas: RawFormulas,
    degree: usize,
    #[serde(default)]
    generator: Option<String>,
    #[serde(default)]
    minpoly: Option<String>,
    #[serde(default)]
    inverse: Option<RawFormulas>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFormulas {
    t: String,
    #[serde(default)]
    x: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoint {
    level: String,
    at: String,
}

/// Checker parameters.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields, default)]
pub struct Params {
    pub torsion_bound: u32,
    pub search_bound: u32,
    pub series_cap: usize,
    pub interpolation_cap: usize,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            torsion_bound: DEFAULT_TORSION_BOUND,
            search_bound: 8,
            series_cap: 1024,
            interpolation_cap: INTERPOLATION_CAP,
        }
    }
}

/// A trace instance: `a1 = a2 + a3` on one level, the listed fiber points
/// and the generators of the group as permutations of them.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceSpec {
    pub level: String,
    pub a1: String,
    pub a2: String,
    pub a3: String,
    pub points: Vec<String>,
    pub generators: Vec<Vec<usize>>,
}

/// A shrinking instance: a class `target` (a named point) on `level`, the
/// named points forming the declared basis there, and the height bound for
/// the search for auxiliary points.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhiSpec {
    pub level: String,
    pub basis: Vec<String>,
    pub target: String,
    #[serde(default = "default_phi_search")]
    pub search: i64,
}

fn default_phi_search() -> i64 {
    3
}

/// Two named points whose classes span the plane used for the field.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldBasisSpec {
    pub level: String,
    pub a1: String,
    pub a2: String,
}

/// A loaded and verified tower.
#[derive(Clone)]
pub struct Tower {
    pub name: String,
    pub field: Arc<NumberField>,
    pub levels: Vec<Arc<CurveLevel>>,
    pub covers: Vec<Arc<CoverMap>>,
    pub points: BTreeMap<String, Point>,
    pub params: Params,
    pub trace: Option<TraceSpec>,
    pub phi: Option<PhiSpec>,
    pub field_basis: Option<FieldBasisSpec>,
}

/// Line and column (1-based) of byte offset `at` in `text`.
fn line_col(text: &str, at: usize) -> (usize, usize) {
    let before = &text[..at.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before
        .rfind('\n')
        .map_or(before.chars().count(), |i| before[i + 1..].chars().count())
        + 1;
    (line, col)
}

/// Resolves errors in a string value to a position in the file. The value is
/// located by its JSON encoding; a parse error inside it is offset by its
/// column within the string.
struct Locator<'a> {
    text: &'a str,
}

impl Locator<'_> {
    fn at(&self, value: &str, err: Error) -> Error {
        let quoted = serde_json::to_string(value).unwrap_or_default();
        let Some(start) = self.text.find(&quoted) else {
            return err;
        };
        let (line, column) = line_col(self.text, start + 1);
        match err {
            Error::Parse { column: c, message, .. } => Error::Parse {
                line,
                column: column + c - 1,
                message,
            },
            other => Error::Parse {
                line,
                column,
                message: other.to_string(),
            },
        }
    }

    fn key(&self, value: &str, message: String) -> Error {
        self.at(value, Error::Config(message))
    }
}

impl Tower {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut t = Self::from_json(&text)?;
        if t.name.is_empty() {
            t.name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
        }
        Ok(t)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawTower = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let loc = Locator { text };
        // no field, or a degree-one minimal polynomial, means `Q`
        let field = match &raw.field {
            Some(f) => {
                let mp = parse_rational_poly(&f.minpoly, &f.generator).map_err(|e| loc.at(&f.minpoly, e))?;
                if mp.deg() <= 1 {
                    NumberField::rationals()
                } else {
                    NumberField::new(f.generator.clone(), mp).map_err(|e| loc.at(&f.minpoly, e))?
                }
            }
            None => NumberField::rationals(),
        };

        let mut levels: Vec<Arc<CurveLevel>> = Vec::new();
        for l in &raw.levels {
            if levels.iter().any(|x| x.id() == l.id) {
                return Err(loc.key(&l.id, format!("duplicate level id `{}`", l.id)));
            }
            if let Some(p) = &l.parent {
                if !levels.iter().any(|x| x.id() == p) {
                    return Err(loc.key(p, format!("parent `{p}` of `{}` is not declared before it", l.id)));
                }
            }
            let level = match l.kind.as_str() {
                "base" => CurveLevel::base(l.id.clone(), &field),
                "plane" => {
                    let eq = l
                        .equation
                        .as_ref()
                        .ok_or_else(|| loc.key(&l.id, format!("plane level `{}` needs an equation", l.id)))?;
                    let f = parse_bipoly(eq, &field).map_err(|e| loc.at(eq, e))?;
                    CurveLevel::plane(l.id.clone(), &field, &f, l.parent.clone()).map_err(|e| loc.at(eq, e))?
                }
                other => {
                    return Err(loc.key(
                        &l.kind,
                        format!("unknown level kind `{other}` (expected base or plane)"),
                    ))
                }
            };
            levels.push(level);
        }
        let find = |id: &str| -> Result<Arc<CurveLevel>> {
            levels
                .iter()
                .find(|l| l.id() == id)
                .cloned()
                .ok_or_else(|| loc.key(id, format!("unknown level `{id}`")))
        };

        let mut covers = Vec::new();
        for c in &raw.covers {
            let (src, tgt) = (find(&c.source)?, find(&c.target)?);
            let cover = match (&c.generator, &c.minpoly, &c.inverse) {
                (Some(g), Some(m), Some(inv)) => CoverMap::from_strings(
                    &src,
                    &tgt,
                    &c.formulas.t,
                    c.formulas.x.as_deref(),
                    g,
                    m,
                    &inv.t,
                    inv.x.as_deref().unwrap_or("1"),
                    c.degree,
                ),
                (None, None, None) if c.formulas.x.is_none() && c.formulas.t.trim() == "t" => {
                    if c.degree != 2 {
                        Err(Error::InvalidCover {
                            source_level: c.source.clone(),
                            target_level: c.target.clone(),
                            reason: format!("a projection has degree 2, not {}", c.degree),
                        })
                    } else {
                        CoverMap::projection(&src, &tgt)
                    }
                }
                _ => Err(Error::InvalidCover {
                    source_level: c.source.clone(),
                    target_level: c.target.clone(),
                    reason: "covers other than the projection need generator, minpoly and inverse".into(),
                }),
            }
            .map_err(|e| loc.at(&c.formulas.t, e))?;
            covers.push(Arc::new(cover));
        }

        let mut points = BTreeMap::new();
        for (name, p) in &raw.points {
            let level = find(&p.level)?;
            let pt = parse_point(&level, &p.at).map_err(|e| loc.at(&p.at, e))?;
            points.insert(name.clone(), pt);
        }

        let tower = Tower {
            name: raw.name.unwrap_or_default(),
            field,
            levels,
            covers,
            points,
            params: raw.params,
            trace: raw.trace,
            phi: raw.phi,
            field_basis: raw.field_basis,
        };
        tower.check_instances(&loc)?;
        Ok(tower)
    }

    fn check_instances(&self, loc: &Locator<'_>) -> Result<()> {
        let named = |n: &String| {
            if self.points.contains_key(n) {
                Ok(())
            } else {
                Err(loc.key(n, format!("unknown point `{n}`")))
            }
        };
        if let Some(t) = &self.trace {
            let level = self.level(&t.level).map_err(|e| loc.at(&t.level, e))?;
            for d in [&t.a1, &t.a2, &t.a3] {
                Divisor::parse(&level, d).map_err(|e| loc.at(d, e))?;
            }
            for p in &t.points {
                parse_point(&level, p).map_err(|e| loc.at(p, e))?;
            }
        }
        if let Some(p) = &self.phi {
            self.level(&p.level).map_err(|e| loc.at(&p.level, e))?;
            p.basis.iter().try_for_each(named)?;
            named(&p.target)?;
        }
        if let Some(b) = &self.field_basis {
            self.level(&b.level).map_err(|e| loc.at(&b.level, e))?;
            named(&b.a1)?;
            named(&b.a2)?;
        }
        Ok(())
    }

    pub fn level(&self, id: &str) -> Result<Arc<CurveLevel>> {
        self.levels
            .iter()
            .find(|l| l.id() == id)
            .cloned()
            .ok_or_else(|| Error::Config(format!("unknown level `{id}`")))
    }

    pub fn point(&self, name: &str) -> Result<Point> {
        self.points
            .get(name)
            .cloned()
            .ok_or_else(|| Error::Config(format!("unknown point `{name}`")))
    }

    /// Covers whose target is `level`.
    pub fn covers_onto(&self, level: &str) -> Vec<Arc<CoverMap>> {
        self.covers
            .iter()
            .filter(|c| c.target().id() == level)
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"{
  "levels": [
    {"id": "L", "kind": "base"},
    {"id": "E", "kind": "plane", "equation": "x^2 = t^3 - 2", "parent": "L"}
  ],
  "covers": [{"source": "E", "target": "L", "formulas": {"t": "t"}, "degree": 2}],
  "points": {"P": {"level": "E", "at": "(3, 5)"}}
}"#;

    #[test]
    fn loads_small_tower() {
        let t = Tower::from_json(SMALL).unwrap();
        assert_eq!(t.levels.len(), 2);
        assert_eq!(t.covers.len(), 1);
        assert_eq!(t.point("P").unwrap().to_string(), "(3, 5)");
        assert_eq!(t.params, Params::default());
    }

    #[test]
    fn positions_in_errors() {
        match Tower::from_json("{\n  \"field\": 3,\n}") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{:?}", other.err()),
        }
        let bad = SMALL.replace("t^3 - 2", "t^3 - 2 +");
        match Tower::from_json(&bad) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 4);
                assert!(column > 40, "{column}");
            }
            other => panic!("{:?}", other.err()),
        }
        let bad = SMALL.replace("(3, 5)", "(3, 4)");
        assert!(matches!(Tower::from_json(&bad), Err(Error::Parse { line: 7, .. })));
        let bad = SMALL.replace("\"parent\": \"L\"", "\"parent\": \"M\"");
        assert!(matches!(Tower::from_json(&bad), Err(Error::Parse { line: 4, .. })));
    }
}
