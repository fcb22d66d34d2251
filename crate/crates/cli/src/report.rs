//! Deterministic report emission in the two output formats: human-oriented
//! text and one key=value record per line for machines.

use wellpoised::exactmath::{Int, Rat};
use wellpoised::polyalg::PolynomialIdeal;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

pub struct Report {
    pub format: Format,
    lines: Vec<String>,
}

impl Report {
    pub fn new(format: Format) -> Self {
        Report { format, lines: Vec::new() }
    }

    pub fn kv(&mut self, key: &str, value: impl AsRef<str>) {
        match self.format {
            Format::Machine => self.lines.push(format!("{key}={}", value.as_ref())),
            Format::Text => self.lines.push(format!("{key}: {}", value.as_ref())),
        }
    }

    pub fn heading(&mut self, title: &str) {
        match self.format {
            Format::Machine => {}
            Format::Text => {
                self.lines.push(String::new());
                self.lines.push(format!("== {title} =="));
            }
        }
    }

    pub fn finish(self) -> String {
        let mut out = self.lines.join("\n");
        out.push('\n');
        out
    }
}

pub fn fmt_rat(x: &Rat) -> String {
    if x.is_integer() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn fmt_rat_vec(v: &[Rat]) -> String {
    format!(
        "({})",
        v.iter().map(fmt_rat).collect::<Vec<_>>().join(",")
    )
}

pub fn fmt_int_vec(v: &[Int]) -> String {
    format!(
        "({})",
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    )
}

/// Reduced grevlex generators in the content-1, lex-leading-positive
/// normalization, joined deterministically.
pub fn fmt_ideal(ideal: &PolynomialIdeal) -> String {
    let gens = ideal.reduced_grevlex_basis();
    if gens.is_empty() {
        return "<0>".to_string();
    }
    let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    format!("<{}>", parts.join(", "))
}

/// FNV-1a over the input bytes; embedded in every report so downstream
/// comparisons are stable.
pub fn fnv64(bytes: &[u8]) -> String {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    format!("fnv64:{hash:016x}")
}
