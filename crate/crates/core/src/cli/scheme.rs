//! Loading a scheme from a fixture name, a points file or an ideal file.

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use crate::algebra::field::{Field, FieldSpec};
use crate::algebra::parse::{parse_points, IdealFile};
use crate::error::{Error, Result};
use crate::geometry::{points_ideal, Fixture, ProjPoint};
use crate::groebner::{saturation, Ideal};
use crate::report::{RunConfig, SchemeInfo};

#[derive(Clone, Debug)]
pub enum SchemeSource {
    Fixture(String, Option<usize>),
    Points(PathBuf),
    Ideal(PathBuf),
}

pub struct LoadedScheme<F: Field> {
    pub ideal: Ideal<F>,
    pub info: SchemeInfo,
    pub notices: Vec<String>,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::invalid(format!("{}: {e}", path.display())))
}

/// The field named in an ideal file header.
pub fn ideal_file_field(path: &Path) -> Result<FieldSpec> {
    Ok(IdealFile::parse(&read(path)?)?.field)
}

/// Points from text, checked pairwise distinct as projective points.
pub fn points_from_text<F: Field>(field: &F, text: &str) -> Result<Vec<ProjPoint<F>>> {
    let raw = parse_points(text)?;
    let mut seen: HashMap<Vec<F::Elem>, usize> = HashMap::new();
    let mut out = Vec::with_capacity(raw.len());
    for (k, coords) in raw.iter().enumerate() {
        let p = ProjPoint::from_rationals(field, coords)?;
        if let Some(first) = seen.insert(p.coords().to_vec(), k + 1) {
            return Err(Error::invalid(format!(
                "point {} equals point {first} in projective space",
                k + 1
            )));
        }
        out.push(p);
    }
    Ok(out)
}

/// Generators from ideal-file text; rejects non-homogeneous input.
pub fn ideal_from_text<F: Field>(field: &F, text: &str) -> Result<Ideal<F>> {
    let file = IdealFile::parse(text)?;
    let gens = file.polynomials(field)?;
    for (g, (line, _)) in gens.iter().zip(&file.generators) {
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneous(format!("generator on line {line}")));
        }
    }
    Ideal::new(field, file.nvars, gens)
}

pub fn load_scheme<F: Field>(field: &F, source: &SchemeSource, cfg: &RunConfig) -> Result<LoadedScheme<F>> {
    let mut notices = Vec::new();
    let (ideal, label) = match source {
        SchemeSource::Fixture(name, n) => {
            let f = Fixture::parse(name, *n)?;
            (f.recipe(cfg.seed).build(field)?, format!("fixture {}", f.name()))
        }
        SchemeSource::Points(path) => {
            let pts = points_from_text(field, &read(path)?)?;
            (points_ideal(field, &pts)?, format!("points file {}", path.display()))
        }
        SchemeSource::Ideal(path) => {
            let given = ideal_from_text(field, &read(path)?)?.with_budget(cfg.budgets);
            let sat = saturation(&given, None)?;
            if !sat.same_ideal(&given)? {
                notices.push("the ideal was replaced by its saturation".to_string());
            }
            (sat, format!("ideal file {}", path.display()))
        }
    };
    let ideal = ideal.with_budget(cfg.budgets);
    let info = SchemeInfo {
        source: label,
        nvars: ideal.nvars(),
        generators: ideal.generators().iter().map(|g| g.to_string()).collect(),
    };
    Ok(LoadedScheme { ideal, info, notices })
}
