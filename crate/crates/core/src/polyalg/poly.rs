//! Monomials, rings and polynomials with exact rational coefficients.

use crate::exactmath::{Int, Rat};
use crate::polyalg::PolyError;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Exponent vector; nonnegative in polynomial context.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// grevlex comparison: higher total degree wins; on ties the monomial with
    /// the smaller exponent in the last differing position wins.
    pub fn grevlex_cmp(&self, other: &Monomial) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..self.0.len()).rev() {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {}
            }
        }
        Ordering::Equal
    }

    /// plain lexicographic comparison on exponents
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.0.cmp(&other.0)
    }
}

/// A polynomial ring is identified by its ordered variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    pub vars: Arc<Vec<String>>,
}

impl Ring {
    pub fn new(vars: Vec<String>) -> Self {
        Ring { vars: Arc::new(vars) }
    }

    pub fn from_names(names: &[&str]) -> Self {
        Ring::new(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::one(self.n()), Rat::one())],
        }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::var(self.n(), i), Rat::one())],
        }
    }

    pub fn monomial(&self, m: Monomial, c: Rat) -> Polynomial {
        let mut p = self.zero();
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }
}

/// Polynomial with nonzero rational coefficients, terms stored sorted in
/// descending grevlex order (the canonical storage order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    pub ring: Ring,
    pub terms: Vec<(Monomial, Rat)>,
}

impl Polynomial {
    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, Rat)>) -> Polynomial {
        let mut p = Polynomial { ring: ring.clone(), terms };
        p.normalize_storage();
        p
    }

    fn normalize_storage(&mut self) {
        self.terms
            .sort_by(|a, b| b.0.grevlex_cmp(&a.0));
        let mut out: Vec<(Monomial, Rat)> = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 += c;
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        self.terms = out;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> i64 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                terms.push((m1.mul(m2), c1 * c2));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scales so the integer coefficients are coprime and the leading term in
    /// the canonical storage order has positive sign.
    pub fn content_normalize(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = Int::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut num = Int::zero();
        for (_, c) in &self.terms {
            num = num.gcd(&(c.numer() * (&den / c.denom())));
        }
        let scale = Rat::new(den, num);
        let mut p = self.scale(&scale.abs());
        if p.terms[0].1.is_negative() {
            p = p.neg();
        }
        p
    }

    /// Sum of the terms attaining the minimum of ⟨w, exponent⟩.
    pub fn initial_form(&self, w: &[Rat]) -> Result<Polynomial, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if w.len() != self.ring.n() {
            return Err(PolyError::WeightLength { got: w.len(), want: self.ring.n() });
        }
        let weight = |m: &Monomial| -> Rat {
            m.0.iter()
                .zip(w)
                .map(|(e, wi)| Rat::from_integer(Int::from(*e)) * wi)
                .sum()
        };
        let min = self
            .terms
            .iter()
            .map(|(m, _)| weight(m))
            .min()
            .expect("nonzero");
        Ok(Polynomial::from_terms(
            &self.ring,
            self.terms
                .iter()
                .filter(|(m, _)| weight(m) == min)
                .cloned()
                .collect(),
        ))
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Homogenizes with a fresh last variable into the given (larger) ring.
    pub fn homogenize(&self, bigger: &Ring) -> Polynomial {
        assert_eq!(bigger.n(), self.ring.n() + 1);
        let d = self.total_degree();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.push(d - m.total_degree());
                (Monomial(e), c.clone())
            })
            .collect();
        Polynomial::from_terms(bigger, terms)
    }

    /// Sets the last variable to 1, landing in the given (smaller) ring.
    pub fn dehomogenize(&self, smaller: &Ring) -> Polynomial {
        assert_eq!(smaller.n() + 1, self.ring.n());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial(m.0[..smaller.n()].to_vec()), c.clone()))
            .collect();
        Polynomial::from_terms(smaller, terms)
    }

    /// Substitutes each variable by the given polynomial (all in a common target ring).
    pub fn substitute(&self, images: &[Polynomial], target: &Ring) -> Polynomial {
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.one().scale(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e as u32));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let n = self.ring.n();
        if self.is_zero() {
            return Monomial::one(n);
        }
        let mut g = self.terms[0].0.clone();
        for (m, _) in &self.terms[1..] {
            g = Monomial(g.0.iter().zip(&m.0).map(|(a, b)| *a.min(b)).collect());
        }
        g
    }

    pub fn div_by_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (mm.div(m), c.clone()))
                .collect(),
        }
    }

    /// Maps this polynomial into another ring along a variable-index map.
    pub fn rename(&self, target: &Ring, var_map: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0i64; target.n()];
                for (i, &exp) in m.0.iter().enumerate() {
                    if exp != 0 {
                        e[var_map[i]] += exp;
                    }
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                if abs.is_integer() {
                    factors.push(format!("{}", abs.numer()));
                } else {
                    factors.push(format!("{}/{}", abs.numer(), abs.denom()));
                }
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    factors.push(self.ring.vars[i].clone());
                } else {
                    factors.push(format!("{}^{}", self.ring.vars[i], e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Parses integer/rational coefficients, `^` powers, optional `*`,
/// alphanumeric variable names.
pub fn parse_polynomial(input: &str, ring: &Ring) -> Result<Polynomial, PolyError> {
    let bytes: Vec<char> = input.chars().collect();
    let mut pos = 0usize;
    let n = ring.n();
    let mut terms: Vec<(Monomial, Rat)> = Vec::new();

    fn skip_ws(bytes: &[char], pos: &mut usize) {
        while *pos < bytes.len() && bytes[*pos].is_whitespace() {
            *pos += 1;
        }
    }

    fn parse_uint(bytes: &[char], pos: &mut usize) -> Option<Int> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start {
            return None;
        }
        let s: String = bytes[start..*pos].iter().collect();
        Some(s.parse::<Int>().expect("digits"))
    }

    skip_ws(&bytes, &mut pos);
    if pos == bytes.len() {
        return Err(PolyError::Parse(pos, "empty polynomial".into()));
    }
    while pos < bytes.len() {
        skip_ws(&bytes, &mut pos);
        let mut sign = Rat::one();
        if pos < bytes.len() && (bytes[pos] == '+' || bytes[pos] == '-') {
            if bytes[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
            skip_ws(&bytes, &mut pos);
        } else if !terms.is_empty() {
            return Err(PolyError::Parse(pos, "expected '+' or '-'".into()));
        }
        // term: optional coefficient, then variable powers
        let mut coeff = sign;
        let mut exps = vec![0i64; n];
        let mut saw_anything = false;
        if let Some(num) = parse_uint(&bytes, &mut pos) {
            saw_anything = true;
            let mut c = Rat::from_integer(num);
            skip_ws(&bytes, &mut pos);
            if pos < bytes.len() && bytes[pos] == '/' {
                pos += 1;
                skip_ws(&bytes, &mut pos);
                let den = parse_uint(&bytes, &mut pos)
                    .ok_or_else(|| PolyError::Parse(pos, "expected denominator".into()))?;
                if den.is_zero() {
                    return Err(PolyError::Parse(pos, "zero denominator".into()));
                }
                c /= Rat::from_integer(den);
            }
            coeff *= c;
        }
        loop {
            skip_ws(&bytes, &mut pos);
            if pos < bytes.len() && bytes[pos] == '*' {
                pos += 1;
                skip_ws(&bytes, &mut pos);
            }
            if pos >= bytes.len() || !bytes[pos].is_alphabetic() {
                break;
            }
            let start = pos;
            while pos < bytes.len() && (bytes[pos].is_alphanumeric() || bytes[pos] == '_') {
                pos += 1;
            }
            let name: String = bytes[start..pos].iter().collect();
            let idx = ring
                .var_index(&name)
                .ok_or_else(|| PolyError::Parse(start, format!("unknown variable '{name}'")))?;
            let mut e = 1i64;
            skip_ws(&bytes, &mut pos);
            if pos < bytes.len() && bytes[pos] == '^' {
                pos += 1;
                skip_ws(&bytes, &mut pos);
                let v = parse_uint(&bytes, &mut pos)
                    .ok_or_else(|| PolyError::Parse(pos, "expected exponent".into()))?;
                e = i64::try_from(v).map_err(|_| PolyError::Parse(pos, "exponent too large".into()))?;
            }
            exps[idx] += e;
            saw_anything = true;
        }
        if !saw_anything {
            return Err(PolyError::Parse(pos, "expected term".into()));
        }
        terms.push((Monomial(exps), coeff));
        skip_ws(&bytes, &mut pos);
        if pos < bytes.len() && bytes[pos] != '+' && bytes[pos] != '-' {
            return Err(PolyError::Parse(pos, "unexpected character".into()));
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}
