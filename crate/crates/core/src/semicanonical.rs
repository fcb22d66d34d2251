//! Semi-canonical embeddings from polyhedral divisors on an embedded base:
//! the ambient toric cone δ, the presentation ideal J in Hilbert-basis
//! coordinates, degree-polyhedron module generators, tropical weight lifts,
//! degenerate bases Y_w and the cone-lifting verdict.

use crate::exactmath::{
    dot_int, dot_int_rat, kernel_lattice, primitive, primitive_of_rat, rank_of_rat_rows, Int,
    IntMatrix, Rat,
};
use crate::polyalg::{
    algebra_map_kernel, ideal_equals, initial_ideal, is_binomial_prime, saturate_by_all_vars,
    BinomialPrimality, Monomial, MonomialOrder, PolyError, Polynomial, PolynomialIdeal, Ring,
};
use crate::polyhedra::{
    dd_extreme_rays, hilbert_basis, HilbertBasis, PolyhedraError, RationalCone, SigmaPolyhedron,
};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SemiError {
    #[error("polyhedral divisor is not proper: Σ Δ_i is not strictly contained in σ")]
    ImproperDivisor,
    #[error("the cone δ is not pointed or not full-dimensional")]
    DegenerateDelta,
    #[error("initial ideal of the base contains a monomial: weight outside the tropical variety")]
    MonomialInInitial,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("generating set fails the Gröbner/minimality precondition: {0}")]
    NotGroebner(String),
    #[error(transparent)]
    Polyhedra(#[from] PolyhedraError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The pair (base-ideal data, polyhedral coefficients) defining a divisor
/// 𝔇 = Σ Δ_i ⊗ D_i on a base embedded in ℙ^m with torus coordinates t_1…t_m.
#[derive(Debug, Clone)]
pub struct PolyhedralDivisorSpec {
    /// ideal of Y° in t_1…t_m, stored saturated by t_1⋯t_m
    pub base_ideal: PolynomialIdeal,
    pub m: usize,
    /// Δ_0, …, Δ_m with a common tail σ
    pub coefficients: Vec<SigmaPolyhedron>,
    pub lattice_rank: usize,
    /// the input base ideal is trusted to be prime (checked nowhere)
    pub base_trusted_prime: bool,
}

impl PolyhedralDivisorSpec {
    pub fn new(
        base_ideal: PolynomialIdeal,
        coefficients: Vec<SigmaPolyhedron>,
        base_trusted_prime: bool,
    ) -> Result<Self, SemiError> {
        if coefficients.is_empty() {
            return Err(SemiError::DimensionMismatch("no polyhedral coefficients".into()));
        }
        let m = coefficients.len() - 1;
        if base_ideal.ring.n() != m {
            return Err(SemiError::DimensionMismatch(format!(
                "base ring has {} variables but there are {} coefficients",
                base_ideal.ring.n(),
                m + 1
            )));
        }
        let lattice_rank = coefficients[0].ambient_dim;
        for c in &coefficients {
            if c.ambient_dim != lattice_rank {
                return Err(SemiError::DimensionMismatch(
                    "coefficient polyhedra in different lattices".into(),
                ));
            }
            if !c.same_tail(&coefficients[0]) {
                return Err(SemiError::DimensionMismatch(
                    "coefficient polyhedra have different tail cones".into(),
                ));
            }
        }
        // properness: Σ Δ_i ⊊ σ, strict iff 0 is not in the sum
        let mut sum = coefficients[0].clone();
        for c in &coefficients[1..] {
            sum = sum.minkowski_sum(c)?;
        }
        let sigma = &coefficients[0].tail;
        let sigma_ineqs = sigma.dual().generators;
        let inside = sum.vertices.iter().all(|v| {
            sigma_ineqs
                .iter()
                .all(|n| !dot_int_rat(n, v).is_negative())
        });
        if !inside {
            return Err(SemiError::ImproperDivisor);
        }
        let origin: Vec<Rat> = vec![Rat::zero(); lattice_rank];
        if sum.contains(&origin) {
            return Err(SemiError::ImproperDivisor);
        }

        let mut base_ideal = saturate_by_all_vars(&base_ideal);
        if base_ideal.generators.len() <= 1 {
            base_ideal = base_ideal.mark_universal();
        }
        Ok(PolyhedralDivisorSpec {
            base_ideal,
            m,
            coefficients,
            lattice_rank,
            base_trusted_prime,
        })
    }

    pub fn sigma(&self) -> &RationalCone {
        &self.coefficients[0].tail
    }

    /// Same divisor over a degenerated base (used for 𝔇_w).
    pub fn with_base(&self, base_ideal: PolynomialIdeal, trusted: bool) -> PolyhedralDivisorSpec {
        let mut spec = self.clone();
        spec.base_ideal = base_ideal;
        spec.base_trusted_prime = trusted;
        spec
    }

    /// Default 𝒢: the stored generators (circuits for arrangement bases, the
    /// generator itself for principal bases).
    pub fn default_generating_set(&self) -> Vec<Polynomial> {
        self.base_ideal.generators.clone()
    }
}

/// δ ⊆ ℝ^m × N_ℝ: the positive hull of ({0}×σ) ∪ ⋃ {e_i}×Δ_i with
/// e_0 = −Σ e_i. Checked pointed and full-dimensional.
pub fn build_delta(spec: &PolyhedralDivisorSpec) -> Result<RationalCone, SemiError> {
    let m = spec.m;
    let r = spec.lattice_rank;
    let dim = m + r;
    let mut gens: Vec<Vec<Int>> = Vec::new();
    for ray in &spec.sigma().generators {
        let mut g = vec![Int::zero(); m];
        g.extend(ray.iter().cloned());
        gens.push(g);
    }
    for (i, delta_i) in spec.coefficients.iter().enumerate() {
        let e_i: Vec<Rat> = if i == 0 {
            vec![-Rat::one(); m]
        } else {
            let mut e = vec![Rat::zero(); m];
            e[i - 1] = Rat::one();
            e
        };
        for v in &delta_i.vertices {
            let mut g = e_i.clone();
            g.extend(v.iter().cloned());
            gens.push(primitive_of_rat(&g));
        }
    }
    let delta = RationalCone::new(dim, gens);
    if !delta.is_pointed() || !delta.is_full_dimensional() {
        return Err(SemiError::DegenerateDelta);
    }
    Ok(delta)
}

/// Hilbert-basis coordinates, presentation ideal and lift matrix of a
/// semi-canonical embedding.
#[derive(Debug, Clone)]
pub struct SemiCanonicalPresentation {
    /// ℋ with the stable descending-lexicographic ordering used for variables
    pub coordinates: HilbertBasis,
    /// X_1, …, X_n
    pub variables: Vec<String>,
    pub presentation_ideal: PolynomialIdeal,
    /// rows are the elements of ℋ in variable order
    pub lift_matrix: IntMatrix,
    /// full (ℤ^m × M)-multidegree of each variable (equal to the lift rows)
    pub multidegrees: Vec<Vec<Int>>,
}

impl SemiCanonicalPresentation {
    pub fn ring(&self) -> &Ring {
        &self.presentation_ideal.ring
    }

    /// lift_matrix · w; injective because δ is pointed.
    pub fn lift_weight(&self, w: &[Rat]) -> Result<Vec<Rat>, SemiError> {
        if w.len() != self.lift_matrix.cols {
            return Err(SemiError::DimensionMismatch(format!(
                "weight has length {}, expected {}",
                w.len(),
                self.lift_matrix.cols
            )));
        }
        Ok(self.lift_matrix.mul_vec_rat(w))
    }
}

/// Builds ℋ = Hilbert basis of δ∨ and the kernel of
/// ℂ[x_h] → (ℂ[t^±, χ^±]/I_Y), x_h ↦ t^v χ^u for h = (v, u).
pub fn semicanonical_presentation(
    spec: &PolyhedralDivisorSpec,
) -> Result<SemiCanonicalPresentation, SemiError> {
    let delta = build_delta(spec)?;
    let delta_dual = delta.dual();
    let hb = hilbert_basis(&delta_dual)?;
    let mut elements = hb.elements.clone();
    elements.sort();
    elements.reverse(); // descending lexicographic, matching variable labels
    let n = elements.len();
    let variables: Vec<String> = (1..=n).map(|i| format!("X{i}")).collect();
    let x_ring = Ring::new(variables.clone());
    let lift_matrix = IntMatrix::from_rows(&elements);

    let m = spec.m;
    let r = spec.lattice_rank;

    // kernel of the monomial map restricted to Y°
    let kernel = if n == m + r && lift_matrix.det().abs().is_one() {
        smooth_kernel(spec, &x_ring, &lift_matrix)
    } else {
        elimination_kernel(spec, &variables, &elements)?
    };

    // M-part grading (the χ-degrees); the v-part is metadata only
    let grading_rows: Vec<Vec<Int>> = (0..r)
        .map(|k| elements.iter().map(|h| h[m + k].clone()).collect())
        .collect();
    let grading = IntMatrix::from_rows(&grading_rows);
    let mut ideal = PolynomialIdeal::new(x_ring, kernel.generators).with_grading(grading);

    // positive grading from an interior point of σ when available
    let sigma = spec.sigma();
    if sigma.is_full_dimensional() && sigma.ambient_dim > 0 {
        let xi = sigma.interior_point();
        let degs: Vec<Int> = elements
            .iter()
            .map(|h| dot_int(&xi, &h[m..]))
            .collect();
        if degs.iter().all(|d| d.is_positive()) {
            ideal = ideal.with_positive_weight(degs);
        }
    }

    let coordinates = HilbertBasis { cone: hb.cone, elements: elements.clone() };
    Ok(SemiCanonicalPresentation {
        coordinates,
        variables,
        presentation_ideal: ideal,
        lift_matrix,
        multidegrees: elements,
    })
}

/// When δ∨ is smooth the lattice map is unimodular: rewrite each base
/// relation as a Laurent polynomial in the X's, clear denominators and
/// saturate by the product of the variables.
fn smooth_kernel(
    spec: &PolyhedralDivisorSpec,
    x_ring: &Ring,
    lift: &IntMatrix,
) -> PolynomialIdeal {
    let inv = lift
        .inverse_unimodular()
        .expect("smooth cone has unimodular lift matrix");
    let n = x_ring.n();
    let m = spec.m;
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in &spec.base_ideal.generators {
        // X-exponent of each term: (α, 0) · lift⁻¹
        let mut rows: Vec<(Vec<Int>, Rat)> = Vec::new();
        for (mono, coef) in &g.terms {
            let mut a: Vec<Int> = mono.0.iter().map(|&e| Int::from(e)).collect();
            a.resize(m + spec.lattice_rank, Int::zero());
            // row vector times inverse: (a · inv) has entry_j = Σ_k a_k inv[k][j]
            let beta: Vec<Int> = (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| &a[k] * inv.at(k, j))
                        .sum()
                })
                .collect();
            rows.push((beta, coef.clone()));
        }
        // shift to nonnegative exponents
        let mins: Vec<Int> = (0..n)
            .map(|j| rows.iter().map(|(b, _)| b[j].clone()).min().unwrap())
            .collect();
        let terms: Vec<(Monomial, Rat)> = rows
            .into_iter()
            .map(|(b, c)| {
                let e: Vec<i64> = b
                    .iter()
                    .zip(&mins)
                    .map(|(x, mn)| i64::try_from(x - mn).expect("small exponent"))
                    .collect();
                (Monomial(e), c)
            })
            .collect();
        gens.push(Polynomial::from_terms(x_ring, terms));
    }
    let ideal = PolynomialIdeal::new(x_ring.clone(), gens);
    let sat = saturate_by_all_vars(&ideal);
    PolynomialIdeal::new(x_ring.clone(), sat.reduced_grevlex_basis())
}

/// General route: eliminate the torus variables and one inverse variable per
/// t_i and per χ_j from ⟨x_h − t^{v⁺}t̄^{v⁻}χ^{u⁺}χ̄^{u⁻}⟩ + I_Y + ⟨t t̄ − 1, χ χ̄ − 1⟩.
fn elimination_kernel(
    spec: &PolyhedralDivisorSpec,
    variables: &[String],
    elements: &[Vec<Int>],
) -> Result<PolynomialIdeal, SemiError> {
    let m = spec.m;
    let r = spec.lattice_rank;
    let mut src_names: Vec<String> = spec.base_ideal.ring.vars.as_ref().clone();
    for name in spec.base_ideal.ring.vars.iter() {
        src_names.push(format!("{name}_inv"));
    }
    for k in 1..=r {
        src_names.push(format!("ch{k}"));
    }
    for k in 1..=r {
        src_names.push(format!("ch{k}_inv"));
    }
    let src = Ring::new(src_names);
    let t_of = |i: usize| i; // 0..m
    let tinv_of = |i: usize| m + i;
    let ch_of = |k: usize| 2 * m + k;
    let chinv_of = |k: usize| 2 * m + r + k;

    let mut modulo_gens: Vec<Polynomial> = Vec::new();
    let base_map: Vec<usize> = (0..m).collect();
    for g in &spec.base_ideal.generators {
        modulo_gens.push(g.rename(&src, &base_map));
    }
    for i in 0..m {
        let mut e = vec![0i64; src.n()];
        e[t_of(i)] = 1;
        e[tinv_of(i)] = 1;
        modulo_gens.push(src.monomial(Monomial(e), Rat::one()).sub(&src.one()));
    }
    for k in 0..r {
        let mut e = vec![0i64; src.n()];
        e[ch_of(k)] = 1;
        e[chinv_of(k)] = 1;
        modulo_gens.push(src.monomial(Monomial(e), Rat::one()).sub(&src.one()));
    }
    let modulo = PolynomialIdeal::new(src.clone(), modulo_gens);

    let mut targets: Vec<Polynomial> = Vec::new();
    for h in elements {
        let mut e = vec![0i64; src.n()];
        for i in 0..m {
            let x = i64::try_from(&h[i]).expect("small exponent");
            if x >= 0 {
                e[t_of(i)] = x;
            } else {
                e[tinv_of(i)] = -x;
            }
        }
        for k in 0..r {
            let x = i64::try_from(&h[m + k]).expect("small exponent");
            if x >= 0 {
                e[ch_of(k)] = x;
            } else {
                e[chinv_of(k)] = -x;
            }
        }
        targets.push(src.monomial(Monomial(e), Rat::one()));
    }
    let kernel = algebra_map_kernel(&targets, &variables.to_vec(), &modulo);
    Ok(kernel)
}

/// One element g·t^v·χ^u of the finite generating set 𝒮.
#[derive(Debug, Clone)]
pub struct ModuleGenerator {
    pub g: Polynomial,
    pub v: Vec<Int>,
    pub u: Vec<Int>,
}

/// Degree-polyhedron module generators: for each g in 𝒢, builds
/// P_g = {(v,u) : v_i ≥ −Δ_i(u), Σ v_i ≤ Δ_0(u) − deg g} and extracts the
/// height-1 Hilbert basis elements of pos-hull(P_g × {1}).
pub fn generating_set(
    spec: &PolyhedralDivisorSpec,
    g_set: &[Polynomial],
) -> Result<Vec<ModuleGenerator>, SemiError> {
    check_generating_set(spec, g_set)?;
    let m = spec.m;
    let r = spec.lattice_rank;
    let mut out = Vec::new();
    for g in g_set {
        let cone = degree_polyhedron_cone(spec, g.total_degree());
        let dd = dd_extreme_rays(m + r + 1, &cone);
        if !dd.lineality.is_empty() {
            return Err(SemiError::DegenerateDelta);
        }
        let hb = hilbert_basis(&RationalCone::new(m + r + 1, dd.rays))?;
        for el in &hb.elements {
            if el[m + r].is_one() {
                out.push(ModuleGenerator {
                    g: g.clone(),
                    v: el[..m].to_vec(),
                    u: el[m..m + r].to_vec(),
                });
            }
        }
    }
    Ok(out)
}

/// H-description of pos-hull(P_g × {1}) ⊂ ℝ^m × N_ℝ × ℝ_λ.
fn degree_polyhedron_cone(spec: &PolyhedralDivisorSpec, deg: i64) -> Vec<Vec<Int>> {
    let m = spec.m;
    let r = spec.lattice_rank;
    let dim = m + r + 1;
    let mut halfspaces: Vec<Vec<Int>> = Vec::new();
    // u ∈ σ∨
    for ray in &spec.sigma().generators {
        let mut n = vec![Int::zero(); dim];
        for (k, x) in ray.iter().enumerate() {
            n[m + k] = x.clone();
        }
        halfspaces.push(n);
    }
    // λ ≥ 0
    let mut lam = vec![Int::zero(); dim];
    lam[dim - 1] = Int::one();
    halfspaces.push(lam);
    // v_i + ⟨u, w⟩ ≥ 0 for each vertex w of Δ_i, i ≥ 1
    for i in 1..=m {
        for w in &spec.coefficients[i].vertices {
            let mut n = vec![Rat::zero(); dim];
            n[i - 1] = Rat::one();
            for (k, x) in w.iter().enumerate() {
                n[m + k] = x.clone();
            }
            halfspaces.push(primitive_of_rat(&n));
        }
    }
    // ⟨u, w⟩ − Σ v_i − deg·λ ≥ 0 for each vertex w of Δ_0
    for w in &spec.coefficients[0].vertices {
        let mut n = vec![Rat::zero(); dim];
        for x in n.iter_mut().take(m) {
            *x = -Rat::one();
        }
        for (k, x) in w.iter().enumerate() {
            n[m + k] = x.clone();
        }
        n[dim - 1] = -Rat::from_integer(Int::from(deg));
        halfspaces.push(primitive_of_rat(&n));
    }
    halfspaces.sort();
    halfspaces.dedup();
    halfspaces
}

/// Lattice membership test for the degree polyhedron P_g.
pub fn degree_polyhedron_contains(
    spec: &PolyhedralDivisorSpec,
    deg: i64,
    v: &[Int],
    u: &[Int],
) -> bool {
    let mut point: Vec<Int> = v.to_vec();
    point.extend(u.iter().cloned());
    point.push(Int::one());
    let cone = degree_polyhedron_cone(spec, deg);
    cone.iter().all(|n| !dot_int(n, &point).is_negative())
}

/// Membership of (v, u) in δ∨ (exponent of a section of the ambient toric ring).
pub fn delta_dual_contains(delta: &RationalCone, v: &[Int], u: &[Int]) -> bool {
    let mut p = v.to_vec();
    p.extend(u.iter().cloned());
    delta
        .generators
        .iter()
        .all(|g| !dot_int(g, &p).is_negative())
}

fn check_generating_set(
    spec: &PolyhedralDivisorSpec,
    g_set: &[Polynomial],
) -> Result<(), SemiError> {
    if g_set.is_empty() {
        if spec.base_ideal.is_zero_ideal() {
            return Ok(());
        }
        return Err(SemiError::NotGroebner("empty generating set".into()));
    }
    let candidate = PolynomialIdeal::new(spec.base_ideal.ring.clone(), g_set.to_vec());
    if !ideal_equals(&candidate, &spec.base_ideal)? {
        return Err(SemiError::NotGroebner(
            "set does not generate the saturated base ideal".into(),
        ));
    }
    let reduced = spec.base_ideal.reduced_grevlex_basis();
    let normalized: Vec<Polynomial> = g_set.iter().map(|g| g.content_normalize()).collect();
    for rb in &reduced {
        if !normalized.contains(rb) {
            return Err(SemiError::NotGroebner(format!(
                "set does not contain the reduced degree-refining basis element {rb}"
            )));
        }
    }
    for g in g_set {
        for i in 0..spec.base_ideal.ring.n() {
            if g.terms.iter().all(|(mono, _)| mono.0[i] > 0) {
                return Err(SemiError::NotGroebner(format!(
                    "generator {g} is divisible by {}",
                    spec.base_ideal.ring.vars[i]
                )));
            }
        }
    }
    Ok(())
}

/// The ideal generated by 𝒮 inside the presentation ring: the toric relations
/// of ℋ plus the lifted module generators. Used as the independent route for
/// comparing with the elimination-computed presentation ideal.
pub fn module_generators_ideal(
    pres: &SemiCanonicalPresentation,
    delta: &RationalCone,
    gens: &[ModuleGenerator],
) -> PolynomialIdeal {
    let ring = pres.ring().clone();
    let n = ring.n();
    let hb = &pres.coordinates;
    // toric relations from the kernel lattice of the exponent matrix
    let cols = IntMatrix::from_rows(&hb.elements).transpose();
    let lattice = kernel_lattice(&cols);
    let mut gens_x: Vec<Polynomial> = Vec::new();
    for l in lattice {
        let mut plus = vec![0i64; n];
        let mut minus = vec![0i64; n];
        for (j, x) in l.iter().enumerate() {
            let v = i64::try_from(x).expect("small exponent");
            if v >= 0 {
                plus[j] = v;
            } else {
                minus[j] = -v;
            }
        }
        let p = ring.monomial(Monomial(plus), Rat::one());
        let q = ring.monomial(Monomial(minus), Rat::one());
        gens_x.push(p.sub(&q));
    }
    let toric = saturate_by_all_vars(&PolynomialIdeal::new(ring.clone(), gens_x));
    let mut all = toric.generators;
    for mg in gens {
        let mut terms: Vec<(Monomial, Rat)> = Vec::new();
        for (mono, coef) in &mg.g.terms {
            let mut point: Vec<Int> = mono.0.iter().map(|&e| Int::from(e)).collect();
            for (k, vi) in mg.v.iter().enumerate() {
                point[k] += vi;
            }
            point.extend(mg.u.iter().cloned());
            debug_assert!(delta_dual_contains(delta, &point[..pres.lift_matrix.cols - mg.u.len()], &point[pres.lift_matrix.cols - mg.u.len()..]));
            let coeffs = hb
                .decompose(&point)
                .expect("section exponent decomposes over ℋ");
            let e: Vec<i64> = coeffs
                .iter()
                .map(|c| i64::try_from(c).expect("small multiplicity"))
                .collect();
            terms.push((Monomial(e), coef.clone()));
        }
        all.push(Polynomial::from_terms(&ring, terms));
    }
    PolynomialIdeal::new(ring, all)
}

/// Ideal of Y_w: the saturated initial ideal of the (saturated) base ideal.
pub fn degenerate_base(
    spec: &PolyhedralDivisorSpec,
    w: &[Rat],
) -> Result<PolynomialIdeal, SemiError> {
    if w.len() != spec.m + spec.lattice_rank {
        return Err(SemiError::DimensionMismatch(format!(
            "weight length {} (expected {})",
            w.len(),
            spec.m + spec.lattice_rank
        )));
    }
    let wt = &w[..spec.m];
    let init = initial_ideal(&spec.base_ideal, wt)?;
    if init.contains_monomial {
        return Err(SemiError::MonomialInInitial);
    }
    let mut sat = saturate_by_all_vars(&init.ideal);
    if sat.generators.len() <= 1 {
        sat = sat.mark_universal();
    }
    Ok(sat)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriState {
    True,
    False,
    Unknown,
}

impl std::fmt::Display for TriState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TriState::True => write!(f, "true"),
            TriState::False => write!(f, "false"),
            TriState::Unknown => write!(f, "unknown"),
        }
    }
}

/// Per-weight verdict of the cone-lifting criterion.
#[derive(Debug, Clone)]
pub struct ConeLiftReport {
    /// weight in ℝ^m × N_ℝ
    pub weight: Vec<Rat>,
    pub lifted_weight: Vec<Rat>,
    pub condition_irreducible: TriState,
    pub condition_initial_generates: bool,
    pub condition_degree_polyhedra: bool,
    pub base_initial: PolynomialIdeal,
    pub in_w_jd: PolynomialIdeal,
    pub jd_w: PolynomialIdeal,
    pub ideals_equal: bool,
    pub prime_certified: bool,
}

/// Irreducibility certificate for a saturated, monomial-free base ideal.
/// Routes: the zero ideal, linear ideals, toric binomial certificates,
/// principal binomials with primitive difference (reducible when imprimitive),
/// and the trusted-input flag when the ideal equals the original base.
pub fn certify_irreducible(
    ideal: &PolynomialIdeal,
    trusted_original: Option<&PolynomialIdeal>,
) -> TriState {
    if ideal.is_zero_ideal() {
        return TriState::True;
    }
    if let Some(orig) = trusted_original {
        if ideal_equals(ideal, orig).unwrap_or(false) {
            return TriState::True;
        }
    }
    let gb = ideal.reduced_grevlex_basis();
    if gb.iter().all(|g| g.total_degree() <= 1) {
        return TriState::True;
    }
    if gb.iter().all(|g| g.num_terms() <= 2) {
        match is_binomial_prime(ideal) {
            Ok(BinomialPrimality::Prime) => return TriState::True,
            Ok(BinomialPrimality::NotCertified(_)) => {
                if gb.len() == 1 && gb[0].num_terms() == 2 {
                    // x^a − c x^b with no common factor: irreducible over ℂ
                    // iff a − b is primitive; k-fold differences split into k
                    // components
                    let diff: Vec<Int> = gb[0].terms[0]
                        .0
                         .0
                        .iter()
                        .zip(&gb[0].terms[1].0 .0)
                        .map(|(a, b)| Int::from(a - b))
                        .collect();
                    if primitive(&diff) == diff {
                        return TriState::True;
                    }
                    return TriState::False;
                }
            }
            Err(_) => {}
        }
    }
    TriState::Unknown
}

/// Runs the full cone-lifting check at one weight: the three hypotheses, both
/// ideals in_w(J_𝔇) and J_{𝔇_w}, their equality, and a primality certificate.
pub fn cone_lift_check(
    spec: &PolyhedralDivisorSpec,
    pres: &SemiCanonicalPresentation,
    g_set: &[Polynomial],
    w: &[Rat],
) -> Result<ConeLiftReport, SemiError> {
    let lifted = pres.lift_weight(w)?;
    let base_initial = degenerate_base(spec, w)?;

    // (2) initial forms of 𝒢 generate in_w(I_Y)
    let wt = &w[..spec.m];
    let init_forms: Vec<Polynomial> = g_set
        .iter()
        .map(|g| g.initial_form(wt))
        .collect::<Result<_, _>>()?;
    let g_initial = saturate_by_all_vars(&PolynomialIdeal::new(
        spec.base_ideal.ring.clone(),
        init_forms,
    ));
    let condition_initial_generates = ideal_equals(&g_initial, &base_initial)?;

    // (3) degrees of initial forms are preserved, so the degree polyhedra agree
    let condition_degree_polyhedra = g_set
        .iter()
        .map(|g| {
            g.initial_form(wt)
                .map(|f| f.total_degree() == g.total_degree())
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .all(|b| b);

    // (1) irreducibility of Y_w
    let trusted = if spec.base_trusted_prime {
        Some(&spec.base_ideal)
    } else {
        None
    };
    let condition_irreducible = certify_irreducible(&base_initial, trusted);

    let in_w = initial_ideal(&pres.presentation_ideal, &lifted)?;
    let in_w_jd = in_w.ideal;

    let spec_w = spec.with_base(base_initial.clone(), false);
    let pres_w = semicanonical_presentation(&spec_w)?;
    let jd_w = pres_w.presentation_ideal;

    let ideals_equal = ideal_equals(&in_w_jd, &jd_w)?;
    let kernel_route = ideals_equal && condition_irreducible == TriState::True;
    let binomial_route = matches!(
        is_binomial_prime(&in_w_jd),
        Ok(BinomialPrimality::Prime)
    );
    let prime_certified = kernel_route || binomial_route;

    Ok(ConeLiftReport {
        weight: w.to_vec(),
        lifted_weight: lifted,
        condition_irreducible,
        condition_initial_generates,
        condition_degree_polyhedra,
        base_initial,
        in_w_jd,
        jd_w,
        ideals_equal,
        prime_certified,
    })
}

/// Weight-matrix valuation 𝔳_M of a class f modulo J: the lexicographic
/// minimum of M·α over the terms of the normal form of f with respect to the
/// M-refined order. None encodes the value ∞ (f ≡ 0).
pub fn matrix_valuation(
    pres: &SemiCanonicalPresentation,
    m_rows: &[Vec<Rat>],
    f: &Polynomial,
) -> Result<Option<Vec<Rat>>, PolyError> {
    let n = pres.ring().n();
    for row in m_rows {
        if row.len() != n {
            return Err(PolyError::WeightLength { got: row.len(), want: n });
        }
    }
    if rank_of_rat_rows(m_rows) != m_rows.len() {
        return Err(PolyError::NotFullRank);
    }
    if f.is_zero() {
        return Ok(None);
    }
    let ideal = &pres.presentation_ideal;
    let d = ideal
        .positive_weight
        .as_ref()
        .expect("matrix valuation requires a full-dimensional tail cone");
    // min convention: feed −M, shifted positive row by row
    let mut weights: Vec<Vec<Rat>> = Vec::new();
    for row in m_rows {
        let neg: Vec<Rat> = row.iter().map(|x| -x.clone()).collect();
        let mut shift = Rat::zero();
        for (wi, di) in neg.iter().zip(d) {
            if wi.is_negative() {
                let need = -wi / Rat::from_integer(di.clone());
                if need > shift {
                    shift = need;
                }
            }
        }
        shift += Rat::one();
        weights.push(
            neg.iter()
                .zip(d)
                .map(|(wi, di)| wi + &shift * Rat::from_integer(di.clone()))
                .collect(),
        );
    }
    let order = MonomialOrder { elim: 0, weights };
    let gb = ideal.groebner_basis(&order);
    let nf = crate::polyalg::normal_form(f, &gb, &order);
    if nf.is_zero() {
        return Ok(None);
    }
    let value_of = |mono: &Monomial| -> Vec<Rat> {
        m_rows
            .iter()
            .map(|row| {
                mono.0
                    .iter()
                    .zip(row)
                    .map(|(&e, x)| Rat::from_integer(Int::from(e)) * x)
                    .sum()
            })
            .collect()
    };
    let best = nf
        .terms
        .iter()
        .map(|(mono, _)| value_of(mono))
        .min()
        .expect("nonzero normal form");
    Ok(Some(best))
}

/// Tie-breaking rows completing a primary weight to a full-rank valuation
/// matrix inside the lifted cone: the lifts of (w, 0) and of N-direction
/// shifts of w.
pub fn valuation_rows_for_weight(
    pres: &SemiCanonicalPresentation,
    spec: &PolyhedralDivisorSpec,
    w: &[Rat],
) -> Result<Vec<Vec<Rat>>, SemiError> {
    let mut rows = vec![pres.lift_weight(w)?];
    for k in 0..spec.lattice_rank {
        let mut shifted = w.to_vec();
        shifted[spec.m + k] += Rat::one();
        rows.push(pres.lift_weight(&shifted)?);
    }
    // keep a maximal independent subset, scanning in order
    let mut kept: Vec<Vec<Rat>> = Vec::new();
    for row in rows {
        let mut trial = kept.clone();
        trial.push(row.clone());
        if rank_of_rat_rows(&trial) == trial.len() {
            kept = trial;
        }
    }
    Ok(kept)
}
