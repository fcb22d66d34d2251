//! Ideal-level operations: initial ideals (min convention), saturation,
//! elimination kernels, equality, binomial primality, circuits.

use crate::exactmath::{primitive, rank_of_rat_rows, smith_normal_form, Int, IntMatrix, Rat};
use crate::polyalg::groebner::{buchberger, normal_form, MonomialOrder};
use crate::polyalg::poly::{Monomial, Polynomial, Ring};
use crate::polyalg::PolyError;
use num_traits::{One, Signed, Zero};

/// Finitely generated ideal over ℚ. An optional grading matrix (one column of
/// multidegrees per variable) is checked on construction; `positive_weight`
/// is a strictly positive integer grading the ideal is homogeneous for, used
/// to shift weight orders; `universal_groebner` marks generating sets whose
/// initial forms generate every initial ideal (principal ideals, circuits).
#[derive(Debug, Clone)]
pub struct PolynomialIdeal {
    pub ring: Ring,
    pub generators: Vec<Polynomial>,
    pub grading: Option<IntMatrix>,
    pub positive_weight: Option<Vec<Int>>,
    pub universal_groebner: bool,
}

impl PolynomialIdeal {
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Self {
        let gens: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert_eq!(g.ring, ring, "generator in wrong ring");
        }
        PolynomialIdeal {
            ring,
            generators: gens,
            grading: None,
            positive_weight: None,
            universal_groebner: false,
        }
    }

    pub fn with_grading(mut self, grading: IntMatrix) -> Self {
        assert_eq!(grading.cols, self.ring.n(), "one multidegree column per variable");
        for g in &self.generators {
            assert!(
                is_homogeneous(g, &grading),
                "generator {g} is not homogeneous under the grading"
            );
        }
        self.grading = Some(grading);
        self
    }

    pub fn with_positive_weight(mut self, w: Vec<Int>) -> Self {
        assert_eq!(w.len(), self.ring.n());
        assert!(w.iter().all(|x| x.is_positive()), "weights must be positive");
        self.positive_weight = Some(w);
        self
    }

    pub fn mark_universal(mut self) -> Self {
        self.universal_groebner = true;
        self
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn groebner_basis(&self, order: &MonomialOrder) -> Vec<Polynomial> {
        buchberger(&self.generators, order)
    }

    pub fn reduced_grevlex_basis(&self) -> Vec<Polynomial> {
        self.groebner_basis(&MonomialOrder::grevlex())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        if self.is_zero_ideal() {
            return false;
        }
        let gb = self.reduced_grevlex_basis();
        normal_form(f, &gb, &MonomialOrder::grevlex()).is_zero()
    }

    pub fn is_unit_ideal(&self) -> bool {
        let gb = self.reduced_grevlex_basis();
        gb.iter().any(|g| {
            g.num_terms() == 1 && g.terms[0].0.is_one()
        })
    }

    /// Keeps grading metadata while replacing generators.
    fn like(&self, generators: Vec<Polynomial>) -> PolynomialIdeal {
        PolynomialIdeal {
            ring: self.ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            grading: self.grading.clone(),
            positive_weight: self.positive_weight.clone(),
            universal_groebner: false,
        }
    }
}

pub fn is_homogeneous(f: &Polynomial, grading: &IntMatrix) -> bool {
    if f.is_zero() {
        return true;
    }
    let deg = |m: &Monomial| -> Vec<Int> {
        let e: Vec<Int> = m.0.iter().map(|&x| Int::from(x)).collect();
        grading.mul_vec(&e)
    };
    let d0 = deg(&f.terms[0].0);
    f.terms.iter().all(|(m, _)| deg(m) == d0)
}

/// True iff the two ideals in the same ring have equal reduced Gröbner bases
/// under grevlex.
pub fn ideal_equals(a: &PolynomialIdeal, b: &PolynomialIdeal) -> Result<bool, PolyError> {
    if a.ring != b.ring {
        return Err(PolyError::RingMismatch);
    }
    Ok(a.reduced_grevlex_basis() == b.reduced_grevlex_basis())
}

/// (I : m^∞) by the extra-variable construction: eliminate z from I + ⟨z·m − 1⟩.
pub fn saturate(ideal: &PolynomialIdeal, m: &Monomial) -> PolynomialIdeal {
    if ideal.is_zero_ideal() || m.is_one() {
        return ideal.clone();
    }
    // principal shortcut: strip the monomial factor supported on m's variables
    if ideal.generators.len() == 1 {
        let g = &ideal.generators[0];
        let content = g.monomial_content();
        let stripped = Monomial(
            content
                .0
                .iter()
                .enumerate()
                .map(|(i, &e)| if m.0[i] > 0 { 0 } else { e })
                .collect(),
        );
        let factor = content.div(&stripped);
        return ideal.like(vec![g.div_by_monomial(&factor)]);
    }

    let mut vars: Vec<String> = vec!["zsat_".to_string()];
    vars.extend(ideal.ring.vars.iter().cloned());
    let big = Ring::new(vars);
    let map: Vec<usize> = (1..=ideal.ring.n()).collect();
    let mut gens: Vec<Polynomial> = ideal
        .generators
        .iter()
        .map(|g| g.rename(&big, &map))
        .collect();
    // z*m - 1
    let mut e = vec![0i64; big.n()];
    e[0] = 1;
    for (i, &x) in m.0.iter().enumerate() {
        e[1 + i] = x;
    }
    let zm = big.monomial(Monomial(e), Rat::one());
    gens.push(zm.sub(&big.one()));
    let gb = buchberger(&gens, &MonomialOrder::eliminate(1));
    let kept: Vec<Polynomial> = gb
        .into_iter()
        .filter(|g| g.terms.iter().all(|(mm, _)| mm.0[0] == 0))
        .map(|g| {
            let terms = g
                .terms
                .iter()
                .map(|(mm, c)| (Monomial(mm.0[1..].to_vec()), c.clone()))
                .collect();
            Polynomial::from_terms(&ideal.ring, terms)
        })
        .collect();
    ideal.like(kept)
}

/// Saturation by the product of all variables.
pub fn saturate_by_all_vars(ideal: &PolynomialIdeal) -> PolynomialIdeal {
    let m = Monomial(vec![1; ideal.ring.n()]);
    saturate(ideal, &m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialIdealResult {
    pub ideal: PolynomialIdeal,
    pub contains_monomial: bool,
}

impl PartialEq for PolynomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.generators == other.generators
    }
}
impl Eq for PolynomialIdeal {}

/// in_w(I) in the min convention: the ideal generated by the w-minimal forms
/// of all elements. Reported together with a contains-a-monomial flag
/// (computed by saturating by the product of the variables).
pub fn initial_ideal(ideal: &PolynomialIdeal, w: &[Rat]) -> Result<InitialIdealResult, PolyError> {
    if w.len() != ideal.ring.n() {
        return Err(PolyError::WeightLength { got: w.len(), want: ideal.ring.n() });
    }
    if ideal.is_zero_ideal() {
        return Ok(InitialIdealResult { ideal: ideal.clone(), contains_monomial: false });
    }
    let gens: Vec<Polynomial> = if w.iter().all(|x| x.is_zero()) {
        ideal.generators.clone()
    } else if ideal.universal_groebner {
        // initial forms of a universal Gröbner basis generate directly
        ideal
            .generators
            .iter()
            .map(|g| g.initial_form(w).expect("nonzero generator"))
            .collect()
    } else if let Some(d) = positive_shift_weight(ideal, w) {
        // weight order (shifted positive) refined by grevlex; min convention
        // realized by negating the weight row for the max-order engine
        let neg: Vec<Rat> = d.iter().map(|x| -x.clone()).collect();
        let order = MonomialOrder { elim: 0, weights: vec![neg] };
        let gb = buchberger(&ideal.generators, &order);
        gb.iter()
            .map(|g| g.initial_form(w).expect("nonzero"))
            .collect()
    } else {
        // general route: homogenize, saturate by the homogenizing variable
        // (weight 0), take initials there, dehomogenize
        let mut vars: Vec<String> = ideal.ring.vars.as_ref().clone();
        vars.push("hsat_".to_string());
        let big = Ring::new(vars);
        let hgens: Vec<Polynomial> = ideal
            .generators
            .iter()
            .map(|g| g.homogenize(&big))
            .collect();
        let hideal = PolynomialIdeal::new(big.clone(), hgens)
            .with_positive_weight(vec![Int::one(); big.n()]);
        let hvar = Monomial::var(big.n(), big.n() - 1);
        let hsat = saturate(&hideal, &hvar);
        let mut wh: Vec<Rat> = w.to_vec();
        wh.push(Rat::zero());
        let inner = initial_ideal(&hsat, &wh)?;
        inner
            .ideal
            .generators
            .iter()
            .map(|g| g.dehomogenize(&ideal.ring))
            .collect()
    };
    let result = ideal.like(gens);
    let reduced = result.like(result.reduced_grevlex_basis());
    let sat = saturate_by_all_vars(&reduced);
    let contains_monomial = sat.is_unit_ideal();
    Ok(InitialIdealResult { ideal: reduced, contains_monomial })
}

/// Shifts w by a multiple of the ideal's positive grading until nonnegative.
/// Valid because initial forms of graded polynomials are shift-invariant.
fn positive_shift_weight(ideal: &PolynomialIdeal, w: &[Rat]) -> Option<Vec<Rat>> {
    if w.iter().all(|x| !x.is_negative()) {
        return Some(w.to_vec());
    }
    let d = ideal.positive_weight.as_ref()?;
    let mut shift = Rat::zero();
    for (wi, di) in w.iter().zip(d) {
        if wi.is_negative() {
            let need = -wi / Rat::from_integer(di.clone());
            if need > shift {
                shift = need;
            }
        }
    }
    shift += Rat::one();
    Some(
        w.iter()
            .zip(d)
            .map(|(wi, di)| wi + &shift * Rat::from_integer(di.clone()))
            .collect(),
    )
}

/// Kernel of the map sending fresh target variables to `targets`, modulo
/// `modulo`: the vanishing ideal of the image parametrization, computed by
/// eliminating the source variables.
pub fn algebra_map_kernel(
    targets: &[Polynomial],
    target_names: &[String],
    modulo: &PolynomialIdeal,
) -> PolynomialIdeal {
    assert_eq!(targets.len(), target_names.len());
    let source = &modulo.ring;
    for t in targets {
        assert_eq!(t.ring, *source, "targets must live in the source ring");
    }
    let mut vars: Vec<String> = source.vars.as_ref().clone();
    vars.extend(target_names.iter().cloned());
    let big = Ring::new(vars);
    let src_map: Vec<usize> = (0..source.n()).collect();
    let mut gens: Vec<Polynomial> = Vec::new();
    for (k, t) in targets.iter().enumerate() {
        let y = big.var(source.n() + k);
        gens.push(y.sub(&t.rename(&big, &src_map)));
    }
    for g in &modulo.generators {
        gens.push(g.rename(&big, &src_map));
    }
    let gb = buchberger(&gens, &MonomialOrder::eliminate(source.n()));
    let target_ring = Ring::new(target_names.to_vec());
    let kept: Vec<Polynomial> = gb
        .into_iter()
        .filter(|g| g.terms.iter().all(|(m, _)| m.0[..source.n()].iter().all(|&e| e == 0)))
        .map(|g| {
            let terms = g
                .terms
                .iter()
                .map(|(m, c)| (Monomial(m.0[source.n()..].to_vec()), c.clone()))
                .collect();
            Polynomial::from_terms(&target_ring, terms)
        })
        .collect();
    PolynomialIdeal::new(target_ring, kept)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BinomialPrimality {
    Prime,
    NotCertified(String),
}

/// Certifies primality of an ideal generated by binomials x^a − c·x^b (and
/// possibly monomials): PRIME when the ideal is saturated, monomial-free and
/// the exponent-difference lattice of its reduced basis is saturated with unit
/// coefficients; a principal binomial with primitive difference is certified
/// for any nonzero coefficient.
pub fn is_binomial_prime(ideal: &PolynomialIdeal) -> Result<BinomialPrimality, PolyError> {
    for g in &ideal.generators {
        if g.num_terms() > 2 {
            return Err(PolyError::NotBinomial(g.num_terms()));
        }
    }
    if ideal.is_zero_ideal() {
        return Ok(BinomialPrimality::Prime);
    }
    let gb = ideal.reduced_grevlex_basis();
    if gb.iter().any(|g| g.num_terms() > 2) {
        return Ok(BinomialPrimality::NotCertified(
            "reduced basis is not binomial".into(),
        ));
    }
    if gb.iter().any(|g| g.num_terms() == 1) {
        return Ok(BinomialPrimality::NotCertified("contains a monomial".into()));
    }
    let sat = saturate_by_all_vars(ideal);
    if !ideal_equals(&sat, ideal)? {
        return Ok(BinomialPrimality::NotCertified(
            "not saturated: a monomial factor or embedded component is present".into(),
        ));
    }
    // exponent-difference lattice and coefficients from the reduced basis
    let mut rows: Vec<Vec<Int>> = Vec::new();
    let mut coeffs: Vec<Rat> = Vec::new();
    for g in &gb {
        let (a, ca) = &g.terms[0];
        let (b, cb) = &g.terms[1];
        rows.push(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| Int::from(x - y))
                .collect(),
        );
        coeffs.push(-(cb / ca));
    }
    let m = IntMatrix::from_rows(&rows);
    let (d, _, _) = smith_normal_form(&m);
    let k = m.rows.min(m.cols);
    for i in 0..k {
        let di = d.at(i, i);
        if !di.is_zero() && !di.is_one() {
            return Ok(BinomialPrimality::NotCertified(format!(
                "exponent lattice not saturated (elementary divisor {di})"
            )));
        }
    }
    let all_units = coeffs.iter().all(|c| c.is_one());
    if all_units {
        return Ok(BinomialPrimality::Prime);
    }
    if gb.len() == 1 {
        let diff = primitive(&rows[0]);
        if diff == rows[0] && !coeffs[0].is_zero() {
            return Ok(BinomialPrimality::Prime);
        }
    }
    Ok(BinomialPrimality::NotCertified(
        "coefficients are not units after normalization".into(),
    ))
}

/// Support-minimal integer relations among linear forms: for forms
/// ℓ_0, …, ℓ_m the circuits are returned as affine-linear polynomials
/// λ_0 + λ_1 t_1 + ⋯ + λ_m t_m in torus coordinates t_i = ℓ_i/ℓ_0.
pub fn circuits(forms: &[Polynomial]) -> Vec<Polynomial> {
    assert!(!forms.is_empty());
    let src = &forms[0].ring;
    let c1 = src.n();
    let m = forms.len() - 1;
    // coefficient matrix, one column per form
    let mat: Vec<Vec<Rat>> = (0..forms.len())
        .map(|j| {
            let mut col = vec![Rat::zero(); c1];
            for (mm, cc) in &forms[j].terms {
                assert_eq!(mm.total_degree(), 1, "forms must be linear");
                let i = mm.0.iter().position(|&e| e == 1).unwrap();
                col[i] = cc.clone();
            }
            col
        })
        .collect();
    let t_ring = Ring::new((1..=m).map(|i| format!("t{i}")).collect());

    let mut out: Vec<Polynomial> = Vec::new();
    let n = forms.len();
    // circuits are the minimal dependent subsets; scan subsets by size
    for size in 2..=n.min(c1 + 1) {
        for subset in combinations(n, size) {
            let cols: Vec<Vec<Rat>> = subset.iter().map(|&j| mat[j].clone()).collect();
            if rank_of_rat_rows(&cols) != size - 1 {
                continue;
            }
            // dependent; minimal iff every proper subset is independent
            let minimal = (0..size).all(|drop| {
                let sub: Vec<Vec<Rat>> = subset
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != drop)
                    .map(|(_, &j)| mat[j].clone())
                    .collect();
                rank_of_rat_rows(&sub) == size - 1
            });
            if !minimal {
                continue;
            }
            let Some(lambda) = kernel_vector(&cols) else { continue };
            let mut full = vec![Rat::zero(); n];
            for (k, &j) in subset.iter().enumerate() {
                full[j] = lambda[k].clone();
            }
            let ints = crate::exactmath::primitive_of_rat(&full);
            let mut terms: Vec<(Monomial, Rat)> = Vec::new();
            for (j, coef) in ints.iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                let mono = if j == 0 {
                    Monomial::one(m)
                } else {
                    Monomial::var(m, j - 1)
                };
                terms.push((mono, Rat::from_integer(coef.clone())));
            }
            out.push(Polynomial::from_terms(&t_ring, terms).content_normalize());
        }
    }
    out.sort_by(|a, b| {
        a.terms
            .len()
            .cmp(&b.terms.len())
            .then_with(|| format!("{a}").cmp(&format!("{b}")))
    });
    out.dedup();
    out
}

/// All size-k subsets of {0, …, n−1} in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k;
        while i > 0 {
            i -= 1;
            if cur[i] != i + n - k {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
        if k == 0 {
            return out;
        }
    }
}

// one kernel vector of the column collection (as rows of a transposed system)
fn kernel_vector(cols: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    let k = cols.len();
    if k == 0 {
        return None;
    }
    let dim = cols[0].len();
    // solve sum_j lambda_j cols[j] = 0
    let mut m: Vec<Vec<Rat>> = (0..dim)
        .map(|i| (0..k).map(|j| cols[j][i].clone()).collect())
        .collect();
    // gauss
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..k {
        if row >= dim {
            break;
        }
        let Some(p) = (row..dim).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let piv = m[row][col].clone();
        for i in 0..dim {
            if i != row && !m[i][col].is_zero() {
                let f = &m[i][col] / &piv;
                for j in 0..k {
                    let v = &m[row][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free = (0..k).find(|c| !pivot_cols.contains(c))?;
    let mut lambda = vec![Rat::zero(); k];
    lambda[free] = Rat::one();
    for &(r, c) in pivots.iter().rev() {
        lambda[c] = -&m[r][free] / &m[r][c];
    }
    Some(lambda)
}
