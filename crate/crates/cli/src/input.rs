//! Line-oriented input files: sections of vectors, polyhedra and polynomial
//! strings, with rationals written as p/q.

use std::fmt;
use wellpoised::exactmath::{Int, Rat};
use wellpoised::polyalg::{parse_polynomial, Polynomial, PolynomialIdeal, Ring};
use wellpoised::polyhedra::{RationalCone, SigmaPolyhedron};
use wellpoised::semicanonical::PolyhedralDivisorSpec;

#[derive(Debug)]
pub struct InputError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, InputError> {
    Err(InputError { line, message: message.into() })
}

const KEYWORDS: &[&str] = &[
    "variables",
    "lattice_rank",
    "tail_cone",
    "coefficients",
    "base_ideal",
    "linear_forms",
    "weights",
    "a",
    "offsets",
    "grading",
    "ideal",
];

#[derive(Debug, Default)]
pub struct InputFile {
    pub sections: Vec<(String, Vec<(usize, String)>)>,
}

impl InputFile {
    pub fn parse(text: &str) -> Result<InputFile, InputError> {
        let mut file = InputFile::default();
        let mut current: Option<usize> = None;
        for (k, raw) in text.lines().enumerate() {
            let lineno = k + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let first = line.split_whitespace().next().unwrap();
            if KEYWORDS.contains(&first) {
                file.sections.push((first.to_string(), Vec::new()));
                current = Some(file.sections.len() - 1);
                let rest = line[first.len()..].trim();
                if !rest.is_empty() {
                    file.sections[current.unwrap()]
                        .1
                        .push((lineno, rest.to_string()));
                }
            } else {
                match current {
                    Some(i) => file.sections[i].1.push((lineno, line.to_string())),
                    None => {
                        return err(
                            lineno,
                            format!("expected a section keyword, found '{first}'"),
                        )
                    }
                }
            }
        }
        if file.sections.is_empty() {
            return err(0, "empty input file");
        }
        Ok(file)
    }

    pub fn section(&self, name: &str) -> Option<&Vec<(usize, String)>> {
        self.sections
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c)
    }

    pub fn required(&self, name: &str) -> Result<&Vec<(usize, String)>, InputError> {
        self.section(name)
            .ok_or_else(|| InputError { line: 0, message: format!("missing section '{name}'") })
    }
}

pub fn parse_rat(s: &str, line: usize) -> Result<Rat, InputError> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: Int = num
            .trim()
            .parse()
            .map_err(|_| InputError { line, message: format!("bad numerator '{num}'") })?;
        let d: Int = den
            .trim()
            .parse()
            .map_err(|_| InputError { line, message: format!("bad denominator '{den}'") })?;
        if d == Int::from(0) {
            return err(line, "zero denominator");
        }
        Ok(Rat::new(n, d))
    } else {
        let n: Int = s
            .parse()
            .map_err(|_| InputError { line, message: format!("bad number '{s}'") })?;
        Ok(Rat::from_integer(n))
    }
}

pub fn parse_rat_vector(s: &str, line: usize) -> Result<Vec<Rat>, InputError> {
    s.split_whitespace()
        .map(|tok| parse_rat(tok, line))
        .collect()
}

pub fn parse_int_vector(s: &str, line: usize) -> Result<Vec<Int>, InputError> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<Int>()
                .map_err(|_| InputError { line, message: format!("bad integer '{tok}'") })
        })
        .collect()
}

/// A coefficient line is a vertex list `v ; v ; …`, each vertex a rational
/// vector. The empty set is rejected.
pub fn parse_polyhedron(
    s: &str,
    line: usize,
    tail: &RationalCone,
) -> Result<SigmaPolyhedron, InputError> {
    if s.trim() == "empty" {
        return err(line, "empty polyhedral coefficients are not supported");
    }
    let mut vertices = Vec::new();
    for chunk in s.split(';') {
        let v = parse_rat_vector(chunk, line)?;
        if v.is_empty() {
            return err(line, "empty vertex");
        }
        vertices.push(v);
    }
    let dim = tail.ambient_dim;
    if vertices.iter().any(|v| v.len() != dim) {
        return err(line, format!("vertex dimension must be {dim}"));
    }
    SigmaPolyhedron::new(dim, vertices, tail.clone())
        .map_err(|e| InputError { line, message: e.to_string() })
}

pub fn parse_tail_cone(file: &InputFile) -> Result<RationalCone, InputError> {
    let rows = file.required("tail_cone")?;
    if rows.is_empty() {
        return err(0, "tail_cone section needs at least one ray (or a dimension marker)");
    }
    let mut rays: Vec<Vec<Int>> = Vec::new();
    let mut dim = None;
    for (line, s) in rows {
        let v = parse_int_vector(s, *line)?;
        match dim {
            None => dim = Some(v.len()),
            Some(d) if d != v.len() => return err(*line, "inconsistent ray dimensions"),
            _ => {}
        }
        rays.push(v);
    }
    Ok(RationalCone::new(dim.unwrap(), rays))
}

pub struct DivisorFile {
    pub spec: PolyhedralDivisorSpec,
    pub weights: Vec<Vec<Rat>>,
}

pub fn parse_divisor_file(text: &str) -> Result<DivisorFile, InputError> {
    let file = InputFile::parse(text)?;
    let vars = file.required("variables")?;
    let names: Vec<String> = vars
        .iter()
        .flat_map(|(_, s)| s.split_whitespace().map(|t| t.to_string()))
        .collect();
    if names.is_empty() {
        return err(0, "no variables declared");
    }
    let ring = Ring::new(names);
    let tail = parse_tail_cone(&file)?;
    let coeff_rows = file.required("coefficients")?;
    let mut coefficients = Vec::new();
    for (line, s) in coeff_rows {
        coefficients.push(parse_polyhedron(s, *line, &tail)?);
    }
    let mut base_gens: Vec<Polynomial> = Vec::new();
    if let Some(rows) = file.section("base_ideal") {
        for (line, s) in rows {
            let p = parse_polynomial(s, &ring)
                .map_err(|e| InputError { line: *line, message: e.to_string() })?;
            base_gens.push(p);
        }
    }
    let base = PolynomialIdeal::new(ring, base_gens);
    let spec = PolyhedralDivisorSpec::new(base, coefficients, true)
        .map_err(|e| InputError { line: 0, message: e.to_string() })?;
    if let Some(rows) = file.section("lattice_rank") {
        if let Some((line, s)) = rows.first() {
            let declared: usize = s
                .trim()
                .parse()
                .map_err(|_| InputError { line: *line, message: "bad lattice_rank".into() })?;
            if declared != spec.lattice_rank {
                return err(*line, format!("lattice_rank {declared} does not match the coefficients"));
            }
        }
    }
    let mut weights = Vec::new();
    if let Some(rows) = file.section("weights") {
        for (line, s) in rows {
            let w = parse_rat_vector(s, *line)?;
            if w.len() != spec.m + spec.lattice_rank {
                return err(
                    *line,
                    format!("weight must have length {}", spec.m + spec.lattice_rank),
                );
            }
            weights.push(w);
        }
    }
    Ok(DivisorFile { spec, weights })
}

pub struct ArrangementFile {
    pub spec: wellpoised::arrangement::ArrangementSpec,
}

pub fn parse_arrangement_file(text: &str) -> Result<ArrangementFile, InputError> {
    let file = InputFile::parse(text)?;
    let vars = file.required("variables")?;
    let names: Vec<String> = vars
        .iter()
        .flat_map(|(_, s)| s.split_whitespace().map(|t| t.to_string()))
        .collect();
    let ring = Ring::new(names);
    let tail = parse_tail_cone(&file)?;
    let form_rows = file.required("linear_forms")?;
    let mut forms = Vec::new();
    for (line, s) in form_rows {
        let p = parse_polynomial(s, &ring)
            .map_err(|e| InputError { line: *line, message: e.to_string() })?;
        forms.push(p);
    }
    let coeff_rows = file.required("coefficients")?;
    if coeff_rows.len() != form_rows.len() {
        return err(0, "one coefficient line per linear form");
    }
    let mut coefficients = Vec::new();
    for (line, s) in coeff_rows {
        coefficients.push(parse_polyhedron(s, *line, &tail)?);
    }
    let spec = wellpoised::arrangement::ArrangementSpec::new(forms, coefficients)
        .map_err(|e| InputError { line: 0, message: e.to_string() })?;
    Ok(ArrangementFile { spec })
}

pub struct HypertoricFile {
    pub spec: wellpoised::quotients::HypertoricSpec,
}

pub fn parse_hypertoric_file(text: &str) -> Result<HypertoricFile, InputError> {
    let file = InputFile::parse(text)?;
    let a_rows = file.required("a")?;
    let mut a = Vec::new();
    for (line, s) in a_rows {
        a.push(parse_int_vector(s, *line)?);
    }
    let offsets = match file.section("offsets") {
        Some(rows) => {
            let mut o = Vec::new();
            for (line, s) in rows {
                let v = parse_int_vector(s, *line)?;
                o.extend(v);
            }
            o
        }
        None => vec![Int::from(0); a.len()],
    };
    if offsets.len() != a.len() {
        return err(0, "one offset per vector in a");
    }
    let spec = wellpoised::quotients::HypertoricSpec::new(a, offsets)
        .map_err(|e| InputError { line: 0, message: e.to_string() })?;
    Ok(HypertoricFile { spec })
}

pub struct PresentationFile {
    pub presentation: wellpoised::quotients::GradedPresentation,
}

pub fn parse_presentation_file(text: &str) -> Result<PresentationFile, InputError> {
    let file = InputFile::parse(text)?;
    let vars = file.required("variables")?;
    let names: Vec<String> = vars
        .iter()
        .flat_map(|(_, s)| s.split_whitespace().map(|t| t.to_string()))
        .collect();
    let ring = Ring::new(names);
    let grading_rows = file.required("grading")?;
    let mut rows = Vec::new();
    for (line, s) in grading_rows {
        let v = parse_int_vector(s, *line)?;
        if v.len() != ring.n() {
            return err(*line, format!("grading row must have {} entries", ring.n()));
        }
        rows.push(v);
    }
    let grading = wellpoised::exactmath::IntMatrix::from_rows(&rows);
    let mut gens = Vec::new();
    if let Some(rowsec) = file.section("ideal") {
        for (line, s) in rowsec {
            let p = parse_polynomial(s, &ring)
                .map_err(|e| InputError { line: *line, message: e.to_string() })?;
            gens.push(p);
        }
    }
    let ideal = PolynomialIdeal::new(ring, gens);
    Ok(PresentationFile {
        presentation: wellpoised::quotients::GradedPresentation::new(ideal, grading),
    })
}

pub fn parse_weights_file(text: &str, expected_len: usize) -> Result<Vec<Vec<Rat>>, InputError> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line == "weights" {
            continue;
        }
        let w = parse_rat_vector(line, k + 1)?;
        if w.len() != expected_len {
            return err(k + 1, format!("weight must have length {expected_len}"));
        }
        out.push(w);
    }
    Ok(out)
}
