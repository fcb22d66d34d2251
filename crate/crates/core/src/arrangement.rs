//! Arrangement varieties: arrangement-to-divisor conversion, Bergman-fan cone
//! enumeration from matroid flats, well-poised verification, value semigroups,
//! Newton-Okounkov cones, saturation and the Cohen-Macaulay sufficient test.

use crate::exactmath::{primitive, rank_of_rat_rows, Int, Rat};
use crate::polyalg::{circuits, combinations, Polynomial, PolynomialIdeal, Ring};
use crate::polyhedra::{is_admissable, PolyhedraError, PolyhedronByInequalities, SigmaPolyhedron};
use crate::semicanonical::{
    cone_lift_check, semicanonical_presentation, ConeLiftReport, PolyhedralDivisorSpec,
    SemiCanonicalPresentation, SemiError,
};
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ArrangementError {
    #[error("linear forms do not have full rank")]
    RankDeficient,
    #[error("arrangement is not generic (the matroid is not uniform)")]
    NotGeneric,
    #[error("index set has the wrong size: complement must have exactly c elements")]
    BadIndexSet,
    #[error(transparent)]
    Semi(#[from] SemiError),
    #[error(transparent)]
    Polyhedra(#[from] PolyhedraError),
}

/// A full-rank hyperplane arrangement on ℙ^c with a σ-polyhedron attached to
/// each hyperplane V(ℓ_i).
#[derive(Debug, Clone)]
pub struct ArrangementSpec {
    pub c: usize,
    /// ℓ_0, …, ℓ_m, degree-1 forms in c+1 variables
    pub linear_forms: Vec<Polynomial>,
    /// Δ_0, …, Δ_m
    pub coefficients: Vec<SigmaPolyhedron>,
}

impl ArrangementSpec {
    pub fn new(
        linear_forms: Vec<Polynomial>,
        coefficients: Vec<SigmaPolyhedron>,
    ) -> Result<Self, ArrangementError> {
        assert_eq!(
            linear_forms.len(),
            coefficients.len(),
            "one polyhedral coefficient per hyperplane"
        );
        assert!(!linear_forms.is_empty());
        let c1 = linear_forms[0].ring.n();
        for f in &linear_forms {
            assert_eq!(f.ring, linear_forms[0].ring);
            assert_eq!(f.total_degree(), 1, "forms must be linear");
            assert!(
                f.terms.iter().all(|(m, _)| m.total_degree() == 1),
                "forms must be homogeneous"
            );
        }
        let spec = ArrangementSpec { c: c1 - 1, linear_forms, coefficients };
        if spec.matroid().rank(&(0..spec.m() + 1).collect::<Vec<_>>()) != c1 {
            return Err(ArrangementError::RankDeficient);
        }
        Ok(spec)
    }

    pub fn m(&self) -> usize {
        self.linear_forms.len() - 1
    }

    /// Column vector of a form in the coordinate basis.
    fn form_columns(&self) -> Vec<Vec<Rat>> {
        let c1 = self.c + 1;
        self.linear_forms
            .iter()
            .map(|f| {
                let mut col = vec![Rat::zero(); c1];
                for (m, coef) in &f.terms {
                    let i = m.0.iter().position(|&e| e == 1).unwrap();
                    col[i] = coef.clone();
                }
                col
            })
            .collect()
    }

    pub fn matroid(&self) -> Matroid {
        Matroid { columns: self.form_columns() }
    }

    /// True when two hyperplanes coincide; allowed, but the resulting
    /// variety may fail to be normal.
    pub fn has_repeated_forms(&self) -> bool {
        let cols = self.form_columns();
        for i in 0..cols.len() {
            for j in i + 1..cols.len() {
                let both = vec![cols[i].clone(), cols[j].clone()];
                if rank_of_rat_rows(&both) <= 1 {
                    return true;
                }
            }
        }
        false
    }
}

/// Linear matroid of the forms, with rank, closure and flat enumeration.
#[derive(Debug, Clone)]
pub struct Matroid {
    pub columns: Vec<Vec<Rat>>,
}

impl Matroid {
    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn rank(&self, subset: &[usize]) -> usize {
        let rows: Vec<Vec<Rat>> = subset.iter().map(|&i| self.columns[i].clone()).collect();
        rank_of_rat_rows(&rows)
    }

    pub fn full_rank(&self) -> usize {
        self.rank(&(0..self.n()).collect::<Vec<_>>())
    }

    pub fn closure(&self, subset: &[usize]) -> BTreeSet<usize> {
        let r = self.rank(subset);
        let mut out = BTreeSet::new();
        for i in 0..self.n() {
            let mut ext: Vec<usize> = subset.to_vec();
            ext.push(i);
            if self.rank(&ext) == r {
                out.insert(i);
            }
        }
        out
    }

    pub fn is_uniform(&self) -> bool {
        let r = self.full_rank();
        for size in 1..=r {
            for subset in combinations(self.n(), size) {
                if self.rank(&subset) != size {
                    return false;
                }
            }
        }
        true
    }

    /// All proper nonempty flats (closure-closed subsets of rank < full rank,
    /// excluding the closure of the empty set).
    pub fn proper_flats(&self) -> Vec<BTreeSet<usize>> {
        let full = self.full_rank();
        let loops = self.closure(&[]);
        let mut flats: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        // flats are closures of subsets; enumerate closures of independent sets
        let mut frontier: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        frontier.insert(loops.clone());
        while let Some(f) = frontier.iter().next().cloned() {
            frontier.remove(&f);
            let fv: Vec<usize> = f.iter().cloned().collect();
            let r = self.rank(&fv);
            if r >= full {
                continue;
            }
            for i in 0..self.n() {
                if f.contains(&i) {
                    continue;
                }
                let mut ext = fv.clone();
                ext.push(i);
                let cl = self.closure(&ext);
                if self.rank(&cl.iter().cloned().collect::<Vec<_>>()) < full
                    && !flats.contains(&cl)
                {
                    flats.insert(cl.clone());
                    frontier.insert(cl);
                }
            }
        }
        flats.into_iter().filter(|f| !f.is_empty()).collect()
    }
}

/// A cone of the Bergman fan, recorded by a chain of flats with generators in
/// ℝ^m under the e_0 = −Σ e_i convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BergmanCone {
    pub flag: Vec<BTreeSet<usize>>,
    pub generators: Vec<Vec<Int>>,
}

impl BergmanCone {
    /// Sum of the flag's indicator vectors: a relative-interior representative.
    pub fn representative(&self, m: usize) -> Vec<Rat> {
        let mut w = vec![Rat::zero(); m];
        for g in &self.generators {
            for (x, y) in w.iter_mut().zip(g) {
                *x += Rat::from_integer(y.clone());
            }
        }
        w
    }

    pub fn label(&self) -> String {
        if self.flag.is_empty() {
            return "0".into();
        }
        self.flag
            .iter()
            .map(|f| {
                let inner = f
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!("{{{inner}}}")
            })
            .collect::<Vec<_>>()
            .join("<")
    }
}

fn indicator(m: usize, flat: &BTreeSet<usize>) -> Vec<Int> {
    // e_F with e_0 = −Σ_{i=1}^m e_i
    let mut v = vec![Int::zero(); m];
    for &i in flat {
        if i == 0 {
            for x in v.iter_mut() {
                *x -= Int::one();
            }
        } else {
            v[i - 1] += Int::one();
        }
    }
    v
}

/// All cones of the Bergman fan of the arrangement matroid (including the
/// zero cone). For a uniform matroid the coarse subset fan is used, whose
/// maximal cones are indexed by size-c subsets; otherwise one cone per flag
/// of proper nonempty flats.
pub fn bergman_cones(a: &ArrangementSpec) -> Vec<BergmanCone> {
    let matroid = a.matroid();
    let m = a.m();
    let mut out = vec![BergmanCone { flag: Vec::new(), generators: Vec::new() }];
    if matroid.full_rank() == m + 1 {
        // every element is a coloop: the tropical variety is pure lineality
        return out;
    }
    if matroid.is_uniform() {
        let c = matroid.full_rank() - 1;
        for size in 1..=c {
            for subset in combinations(m + 1, size) {
                let flat: BTreeSet<usize> = subset.iter().cloned().collect();
                let generators = subset
                    .iter()
                    .map(|&i| {
                        let single: BTreeSet<usize> = [i].into_iter().collect();
                        indicator(m, &single)
                    })
                    .collect();
                out.push(BergmanCone { flag: vec![flat], generators });
            }
        }
    } else {
        let flats = matroid.proper_flats();
        // chains of strictly increasing flats
        let mut chains: Vec<Vec<BTreeSet<usize>>> = flats.iter().map(|f| vec![f.clone()]).collect();
        let mut k = 0;
        while k < chains.len() {
            let chain = chains[k].clone();
            let last = chain.last().unwrap();
            for f in &flats {
                if last.is_subset(f) && last != f {
                    let mut next = chain.clone();
                    next.push(f.clone());
                    chains.push(next);
                }
            }
            k += 1;
        }
        for chain in chains {
            let generators: Vec<Vec<Int>> = chain
                .iter()
                .map(|f| primitive(&indicator(m, f)))
                .filter(|v| !v.iter().all(|x| x.is_zero()))
                .collect();
            if generators.is_empty() && !chain.is_empty() {
                continue; // flat union of components: lineality only
            }
            out.push(BergmanCone { flag: chain, generators });
        }
    }
    out.sort_by_key(|c| (c.flag.len(), c.label()));
    out.dedup();
    out
}

/// Base ideal of the arrangement image P ↦ [ℓ_0(P) : ⋯ : ℓ_m(P)]: the ideal
/// generated by the circuits in torus coordinates.
pub fn arrangement_to_divisor(a: &ArrangementSpec) -> Result<PolyhedralDivisorSpec, ArrangementError> {
    let cs = circuits(&a.linear_forms);
    let t_ring = if cs.is_empty() {
        Ring::new((1..=a.m()).map(|i| format!("t{i}")).collect())
    } else {
        cs[0].ring.clone()
    };
    let base = PolynomialIdeal::new(t_ring, cs).mark_universal();
    Ok(PolyhedralDivisorSpec::new(base, a.coefficients.clone(), true)?)
}

/// Cone-lift reports for one interior representative per Bergman cone,
/// extended by zero into N_ℝ and lifted; 𝒢 is the circuit set.
pub fn verify_well_poised(
    a: &ArrangementSpec,
) -> Result<Vec<(BergmanCone, ConeLiftReport)>, ArrangementError> {
    let spec = arrangement_to_divisor(a)?;
    let pres = semicanonical_presentation(&spec)?;
    let g = spec.default_generating_set();
    let cones = bergman_cones(a);
    let r = spec.lattice_rank;
    let reports: Result<Vec<_>, SemiError> = cones
        .par_iter()
        .map(|cone| {
            let mut w = cone.representative(a.m());
            w.extend(vec![Rat::zero(); r]);
            cone_lift_check(&spec, &pres, &g, &w).map(|rep| (cone.clone(), rep))
        })
        .collect();
    Ok(reports?)
}

pub fn arrangement_presentation(
    a: &ArrangementSpec,
) -> Result<SemiCanonicalPresentation, ArrangementError> {
    let spec = arrangement_to_divisor(a)?;
    Ok(semicanonical_presentation(&spec)?)
}

/// The value semigroup S_w attached to a maximal Bergman cone with
/// minimizing index set ℐ: lattice points (v, u) ∈ ℤ^c × M with
/// v_j ≥ −⌊Δ_{i_j}(u)⌋ and Σ v_j ≤ Σ_{j∈ℐ} ⌊Δ_j(u)⌋.
#[derive(Debug, Clone)]
pub struct SemigroupDescription {
    pub i_set: Vec<usize>,
    pub complement: Vec<usize>,
    pub lower: Vec<SigmaPolyhedron>,
    /// the individual Δ_j for j ∈ ℐ; their floors are summed for the upper bound
    pub upper_terms: Vec<SigmaPolyhedron>,
    pub upper_sum: SigmaPolyhedron,
    /// per maximal cone of the common normal-fan refinement: cone rays and
    /// the linear functionals (vertices) giving each floor bound there
    pub pieces: Vec<PiecewiseBound>,
}

/// On one refinement cone every ⌊Δ_i(u)⌋ is the floor of a single linear
/// functional: the pairing with the minimizing vertex recorded here.
#[derive(Debug, Clone)]
pub struct PiecewiseBound {
    pub cone_rays: Vec<Vec<Int>>,
    /// minimizing vertex of Δ_j for each j ∈ ℐ; the upper bound on Σv is the
    /// sum of the individual floors
    pub upper_vertices: Vec<Vec<Rat>>,
    /// minimizing vertex of Δ_{i_j} for each complement index
    pub lower_vertices: Vec<Vec<Rat>>,
}

impl SemigroupDescription {
    pub fn c(&self) -> usize {
        self.complement.len()
    }

    /// floors of the support values at u
    pub fn bounds_at(&self, u: &[Rat]) -> Result<(Vec<Int>, Int), PolyhedraError> {
        let mut lowers = Vec::new();
        for p in &self.lower {
            lowers.push(-(p.support_value(u)?.floor().to_integer()));
        }
        let upper = self.upper_floor_at(u)?;
        Ok((lowers, upper))
    }

    fn upper_floor_at(&self, u: &[Rat]) -> Result<Int, PolyhedraError> {
        // Σ_{j∈ℐ} ⌊Δ_j(u)⌋ — per-coefficient floors, not the floor of the sum
        let mut total = Int::zero();
        for p in &self.upper_terms {
            total += p.support_value(u)?.floor().to_integer();
        }
        Ok(total)
    }

    pub fn contains(&self, v: &[Int], u: &[Rat]) -> Result<bool, PolyhedraError> {
        let (lowers, upper) = self.bounds_at(u)?;
        if v.len() != lowers.len() {
            return Ok(false);
        }
        for (vi, lo) in v.iter().zip(&lowers) {
            if vi < lo {
                return Ok(false);
            }
        }
        let sum: Int = v.iter().cloned().sum();
        Ok(sum <= upper)
    }
}

impl SemigroupDescription {
    fn new(
        i_set: Vec<usize>,
        complement: Vec<usize>,
        lower: Vec<SigmaPolyhedron>,
        upper_terms: Vec<SigmaPolyhedron>,
        pieces: Vec<PiecewiseBound>,
    ) -> Self {
        let mut upper_sum = upper_terms[0].clone();
        for p in &upper_terms[1..] {
            upper_sum = upper_sum.minkowski_sum(p).expect("common tail");
        }
        SemigroupDescription { i_set, complement, lower, upper_terms, upper_sum, pieces }
    }
}

fn check_generic(a: &ArrangementSpec, i_set: &[usize]) -> Result<Vec<usize>, ArrangementError> {
    if !a.matroid().is_uniform() {
        return Err(ArrangementError::NotGeneric);
    }
    let all: BTreeSet<usize> = (0..=a.m()).collect();
    let iset: BTreeSet<usize> = i_set.iter().cloned().collect();
    let complement: Vec<usize> = all.difference(&iset).cloned().collect();
    if complement.len() != a.c {
        return Err(ArrangementError::BadIndexSet);
    }
    Ok(complement)
}

pub fn value_semigroup(
    a: &ArrangementSpec,
    i_set: &[usize],
) -> Result<SemigroupDescription, ArrangementError> {
    let complement = check_generic(a, i_set)?;
    let lower: Vec<SigmaPolyhedron> = complement
        .iter()
        .map(|&j| a.coefficients[j].clone())
        .collect();
    let upper_terms: Vec<SigmaPolyhedron> =
        i_set.iter().map(|&j| a.coefficients[j].clone()).collect();

    // piecewise-linear data over the common refinement of all normal fans
    let refinement = crate::polyhedra::normal_fan_refinement(&a.coefficients)?;
    let mut pieces = Vec::new();
    for (rep, picks) in refinement {
        let upper_vertices: Vec<Vec<Rat>> = i_set
            .iter()
            .map(|&j| a.coefficients[j].vertices[picks[j]].clone())
            .collect();
        let lower_vertices: Vec<Vec<Rat>> = complement
            .iter()
            .map(|&j| a.coefficients[j].vertices[picks[j]].clone())
            .collect();
        pieces.push(PiecewiseBound { cone_rays: vec![rep], upper_vertices, lower_vertices });
    }

    let mut i_sorted = i_set.to_vec();
    i_sorted.sort_unstable();
    Ok(SemigroupDescription::new(
        i_sorted, complement, lower, upper_terms, pieces,
    ))
}

/// The Newton-Okounkov cone: the un-floored inequality description in
/// ℝ^c × M_ℝ, one inequality per vertex (and per Minkowski-sum vertex for the
/// upper bound), plus σ∨ constraints on the u part.
pub fn nok_cone(
    a: &ArrangementSpec,
    i_set: &[usize],
) -> Result<PolyhedronByInequalities, ArrangementError> {
    let complement = check_generic(a, i_set)?;
    let c = a.c;
    let r = a.coefficients[0].ambient_dim;
    let dim = c + r;
    let mut ineqs: Vec<(Vec<Int>, Rat)> = Vec::new();
    // u ∈ σ∨
    for ray in &a.coefficients[0].tail.generators {
        let mut n = vec![Int::zero(); dim];
        for (k, x) in ray.iter().enumerate() {
            n[c + k] = x.clone();
        }
        ineqs.push((n, Rat::zero()));
    }
    // v_j + ⟨u, w⟩ ≥ 0 per vertex w of Δ_{i_j}
    for (j, &idx) in complement.iter().enumerate() {
        for w in &a.coefficients[idx].vertices {
            let mut n = vec![Rat::zero(); dim];
            n[j] = Rat::one();
            for (k, x) in w.iter().enumerate() {
                n[c + k] = x.clone();
            }
            let prim = crate::exactmath::primitive_of_rat(&n);
            ineqs.push((prim, Rat::zero()));
        }
    }
    // ⟨u, w⟩ − Σ v_j ≥ 0 per vertex w of Σ_{j∈ℐ} Δ_j
    let mut sum = a.coefficients[i_set[0]].clone();
    for &j in &i_set[1..] {
        sum = sum.minkowski_sum(&a.coefficients[j])?;
    }
    for w in &sum.vertices {
        let mut n = vec![Rat::zero(); dim];
        for x in n.iter_mut().take(c) {
            *x = -Rat::one();
        }
        for (k, x) in w.iter().enumerate() {
            n[c + k] = x.clone();
        }
        let prim = crate::exactmath::primitive_of_rat(&n);
        ineqs.push((prim, Rat::zero()));
    }
    ineqs.sort();
    ineqs.dedup();
    Ok(PolyhedronByInequalities { ambient_dim: dim, inequalities: ineqs })
}

/// S_w is saturated iff {Δ_i}_{i∈ℐ} is admissable.
pub fn is_saturated(
    a: &ArrangementSpec,
    i_set: &[usize],
) -> Result<(bool, Option<Vec<Int>>), ArrangementError> {
    check_generic(a, i_set)?;
    let polys: Vec<SigmaPolyhedron> = i_set.iter().map(|&j| a.coefficients[j].clone()).collect();
    Ok(is_admissable(&polys)?)
}

/// Sufficient (not necessary) Cohen-Macaulay test: some subset of size
/// m − c + 1 of the coefficients is admissable.
pub fn cm_sufficient(a: &ArrangementSpec) -> Result<bool, ArrangementError> {
    let m = a.m();
    let size = m + 1 - a.c;
    for subset in combinations(m + 1, size) {
        let polys: Vec<SigmaPolyhedron> =
            subset.iter().map(|&j| a.coefficients[j].clone()).collect();
        if is_admissable(&polys)?.0 {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int_vec, rat, rat_int, rat_vec};
    use crate::polyalg::{ideal_equals, parse_polynomial};
    use crate::polyhedra::RationalCone;
    use crate::semicanonical::TriState;

    pub fn e8_arrangement() -> ArrangementSpec {
        let r = Ring::from_names(&["x0", "x1"]);
        let forms = vec![
            parse_polynomial("x1", &r).unwrap(),
            parse_polynomial("x1 - x0", &r).unwrap(),
            parse_polynomial("x0", &r).unwrap(),
        ];
        let coeffs = vec![
            SigmaPolyhedron::half_line(rat(6, 5)),
            SigmaPolyhedron::half_line(rat(-1, 2)),
            SigmaPolyhedron::half_line(rat(-2, 3)),
        ];
        ArrangementSpec::new(forms, coeffs).unwrap()
    }

    #[test]
    fn e8_divisor_base() {
        let a = e8_arrangement();
        let spec = arrangement_to_divisor(&a).unwrap();
        let tring = spec.base_ideal.ring.clone();
        let expect = PolynomialIdeal::new(
            tring.clone(),
            vec![parse_polynomial("t1 + t2 - 1", &tring).unwrap()],
        );
        assert!(ideal_equals(&spec.base_ideal, &expect).unwrap());
    }

    #[test]
    fn e8_presentation_exponents() {
        let a = e8_arrangement();
        let pres = arrangement_presentation(&a).unwrap();
        let gens = &pres.presentation_ideal.generators;
        assert_eq!(gens.len(), 1, "principal");
        let mut exps: Vec<i64> = gens[0]
            .terms
            .iter()
            .map(|(m, _)| m.0.iter().sum())
            .collect();
        exps.sort_unstable();
        assert_eq!(exps, vec![2, 3, 5], "x^2 + y^3 + z^5 pattern");
    }

    #[test]
    fn bergman_u23() {
        let a = e8_arrangement();
        let cones = bergman_cones(&a);
        // zero cone + 3 rays
        assert_eq!(cones.len(), 4);
        let rays: Vec<Vec<Int>> = cones
            .iter()
            .filter(|c| !c.generators.is_empty())
            .map(|c| c.generators[0].clone())
            .collect();
        assert!(rays.contains(&int_vec(&[1, 0])));
        assert!(rays.contains(&int_vec(&[0, 1])));
        assert!(rays.contains(&int_vec(&[-1, -1])));
    }

    #[test]
    fn e8_well_poised() {
        let a = e8_arrangement();
        let reports = verify_well_poised(&a).unwrap();
        assert_eq!(reports.len(), 4);
        for (cone, rep) in &reports {
            assert!(rep.prime_certified, "cone {} not certified", cone.label());
            assert!(rep.ideals_equal);
        }
    }

    #[test]
    fn e8_saturation_and_cm() {
        let a = e8_arrangement();
        for pair in [[0usize, 1], [0, 2], [1, 2]] {
            let (sat, witness) = is_saturated(&a, &pair).unwrap();
            assert!(!sat, "pair {pair:?} should not be saturated");
            assert!(witness.is_some());
        }
        assert!(!cm_sufficient(&a).unwrap(), "documented false negative");

        // all-integral coefficients are admissable
        let r = Ring::from_names(&["x0", "x1"]);
        let forms = vec![
            parse_polynomial("x1", &r).unwrap(),
            parse_polynomial("x1 - x0", &r).unwrap(),
            parse_polynomial("x0", &r).unwrap(),
        ];
        let coeffs = vec![
            SigmaPolyhedron::half_line(rat_int(1)),
            SigmaPolyhedron::half_line(rat_int(0)),
            SigmaPolyhedron::half_line(rat_int(-2)),
        ];
        let b = ArrangementSpec::new(forms, coeffs).unwrap();
        assert!(cm_sufficient(&b).unwrap());
        assert!(is_saturated(&b, &[0, 1]).unwrap().0);

        // one non-integral coefficient among m − c + 1 integral ones suffices
        let r2 = Ring::from_names(&["x0", "x1"]);
        let forms2 = vec![
            parse_polynomial("x1", &r2).unwrap(),
            parse_polynomial("x1 - x0", &r2).unwrap(),
            parse_polynomial("x0", &r2).unwrap(),
        ];
        let coeffs2 = vec![
            SigmaPolyhedron::half_line(rat(1, 2)),
            SigmaPolyhedron::half_line(rat_int(0)),
            SigmaPolyhedron::half_line(rat_int(0)),
        ];
        let c2 = ArrangementSpec::new(forms2, coeffs2).unwrap();
        assert!(cm_sufficient(&c2).unwrap());
    }

    #[test]
    fn e8_value_semigroup_bounds() {
        let a = e8_arrangement();
        let s = value_semigroup(&a, &[0, 2]).unwrap();
        assert_eq!(s.complement, vec![1]);
        // u = 10: v ≥ 5 and v ≤ 12 − 7 = 5
        let (lowers, upper) = s.bounds_at(&[rat_int(10)]).unwrap();
        assert_eq!(lowers, vec![Int::from(5)]);
        assert_eq!(upper, Int::from(5));
        assert!(s.contains(&int_vec(&[5]), &[rat_int(10)]).unwrap());
        assert!(!s.contains(&int_vec(&[6]), &[rat_int(10)]).unwrap());
    }

    #[test]
    fn e8_nok_cone() {
        let a = e8_arrangement();
        let cone = nok_cone(&a, &[0, 2]).unwrap();
        // {(v,u) : u ≥ 0, u/2 ≤ v ≤ 8u/15}
        assert!(cone.contains(&[rat(8, 15), rat_int(1)]));
        assert!(cone.contains(&[rat(1, 2), rat_int(1)]));
        assert!(cone.contains(&[rat(31, 60), rat_int(1)]));
        assert!(!cone.contains(&[rat(9, 15), rat_int(1)]));
        assert!(!cone.contains(&[rat(4, 10), rat_int(1)]));
        assert!(!cone.contains(&[rat_int(0), rat_int(-1)]));
    }

    #[test]
    fn saturation_gap_at_witness() {
        // (1,2) is outside S_w but 3·(1,2) = (3,6) is inside
        let a = e8_arrangement();
        let s = value_semigroup(&a, &[0, 2]).unwrap();
        assert!(!s.contains(&int_vec(&[1]), &[rat_int(2)]).unwrap());
        assert!(s.contains(&int_vec(&[3]), &[rat_int(6)]).unwrap());
    }

    #[test]
    fn generic_u35_counts() {
        let r = Ring::from_names(&["x", "y", "z"]);
        let forms = vec![
            parse_polynomial("x", &r).unwrap(),
            parse_polynomial("y", &r).unwrap(),
            parse_polynomial("z", &r).unwrap(),
            parse_polynomial("x + y + z", &r).unwrap(),
            parse_polynomial("x + 2*y + 3*z", &r).unwrap(),
        ];
        let sigma = RationalCone::from_i64(1, &[&[1]]);
        let mut coeffs = vec![SigmaPolyhedron::half_line(rat_int(1))];
        for _ in 0..4 {
            coeffs.push(
                SigmaPolyhedron::point(rat_vec(&[0]), sigma.clone()).unwrap(),
            );
        }
        let a = ArrangementSpec::new(forms, coeffs).unwrap();
        let cones = bergman_cones(&a);
        let maximal = cones.iter().filter(|c| c.generators.len() == 2).count();
        assert_eq!(maximal, 10, "C(5,2) maximal cones");
        assert_eq!(cones.len(), 1 + 5 + 10);

        let reports = verify_well_poised(&a).unwrap();
        for (cone, rep) in &reports {
            assert!(rep.prime_certified, "cone {}", cone.label());
            assert_eq!(rep.condition_irreducible, TriState::True);
        }
    }

    #[test]
    fn simplex_arrangement_zero_cone_only() {
        // c = m: the base is all of P^c, the base ideal is zero and the
        // tropical variety is lineality only
        let r = Ring::from_names(&["x0", "x1"]);
        let forms = vec![
            parse_polynomial("x0", &r).unwrap(),
            parse_polynomial("x1", &r).unwrap(),
        ];
        let coeffs = vec![
            SigmaPolyhedron::half_line(rat(1, 2)),
            SigmaPolyhedron::half_line(rat_int(0)),
        ];
        let a = ArrangementSpec::new(forms, coeffs).unwrap();
        let spec = arrangement_to_divisor(&a).unwrap();
        assert!(spec.base_ideal.is_zero_ideal());
        let cones = bergman_cones(&a);
        assert_eq!(cones.len(), 1, "single zero cone");
        assert!(cones[0].generators.is_empty());
        let reports = verify_well_poised(&a).unwrap();
        assert_eq!(reports.len(), 1);
        let (_, rep) = &reports[0];
        assert!(rep.ideals_equal);
        assert!(rep.prime_certified);
        // the presentation ideal is the toric ideal of ℋ (zero here)
        let pres = arrangement_presentation(&a).unwrap();
        assert!(pres.presentation_ideal.is_zero_ideal());
    }

    #[test]
    fn rank_two_value_semigroup_khovanskii_span() {
        // three points on P^1 with rank-2 polyhedral data: the values of the
        // Hilbert-basis generators ℕ-span exactly the description
        let r = Ring::from_names(&["x0", "x1"]);
        let forms = vec![
            parse_polynomial("x1", &r).unwrap(),
            parse_polynomial("x1 - x0", &r).unwrap(),
            parse_polynomial("x0", &r).unwrap(),
        ];
        let quad = RationalCone::from_i64(2, &[&[1, 0], &[0, 1]]);
        let coeffs = vec![
            SigmaPolyhedron::point(vec![rat(1, 2), rat(1, 3)], quad.clone()).unwrap(),
            SigmaPolyhedron::point(rat_vec(&[0, 0]), quad.clone()).unwrap(),
            SigmaPolyhedron::point(rat_vec(&[0, 0]), quad).unwrap(),
        ];
        let a = ArrangementSpec::new(forms, coeffs).unwrap();
        let iset = [0usize, 1];
        let desc = value_semigroup(&a, &iset).unwrap();
        assert_eq!(desc.complement, vec![2]);

        let spec = arrangement_to_divisor(&a).unwrap();
        let pres = crate::semicanonical::semicanonical_presentation(&spec).unwrap();
        // value of a generator: (⟨e_2, v⟩, u) with e_2 = (0, 1) in ℝ^m
        let values: Vec<(Int, Int, Int)> = pres
            .coordinates
            .elements
            .iter()
            .map(|h| (h[1].clone(), h[2].clone(), h[3].clone()))
            .collect();
        // ℕ-span within the box u ≤ (8, 8)
        let mut span = std::collections::BTreeSet::new();
        let bound = Int::from(8);
        fn extend(
            values: &[(Int, Int, Int)],
            idx: usize,
            acc: (Int, Int, Int),
            bound: &Int,
            span: &mut std::collections::BTreeSet<(Int, Int, Int)>,
        ) {
            if &acc.1 > bound || &acc.2 > bound {
                return;
            }
            span.insert(acc.clone());
            for k in idx..values.len() {
                let next = (
                    &acc.0 + &values[k].0,
                    &acc.1 + &values[k].1,
                    &acc.2 + &values[k].2,
                );
                extend(values, k, next, bound, span);
            }
        }
        extend(
            &values,
            0,
            (Int::from(0), Int::from(0), Int::from(0)),
            &bound,
            &mut span,
        );

        // description points in the same box
        let mut described = std::collections::BTreeSet::new();
        for u1 in 0i64..=8 {
            for u2 in 0i64..=8 {
                let u = vec![rat_int(u1), rat_int(u2)];
                let (lowers, upper) = desc.bounds_at(&u).unwrap();
                let lo: i64 = (&lowers[0]).try_into().unwrap();
                let hi: i64 = (&upper).try_into().unwrap();
                for v in lo..=hi {
                    described.insert((Int::from(v), Int::from(u1), Int::from(u2)));
                }
            }
        }
        assert_eq!(span, described);
    }

    #[test]
    fn nok_cones_share_normalized_volume_across_index_sets() {
        // re-indexing induces a unimodular change: the primitive-ray
        // determinant of each 2-dimensional NOK cone is the same
        let a = e8_arrangement();
        let mut dets = Vec::new();
        for iset in [[0usize, 1], [0, 2], [1, 2]] {
            let cone = nok_cone(&a, &iset).unwrap();
            // extract the two extreme rays from the inequality description
            let normals: Vec<Vec<Int>> =
                cone.inequalities.iter().map(|(n, _)| n.clone()).collect();
            let dd = crate::polyhedra::dd_extreme_rays(2, &normals);
            assert_eq!(dd.rays.len(), 2, "2-dimensional cone for {iset:?}");
            let d = &dd.rays[0][0] * &dd.rays[1][1] - &dd.rays[0][1] * &dd.rays[1][0];
            let abs = if d < Int::from(0) { -d } else { d };
            dets.push(abs);
        }
        assert_eq!(dets[0], dets[1]);
        assert_eq!(dets[1], dets[2]);
        assert_eq!(dets[0], Int::from(1));
    }

    #[test]
    fn non_uniform_arrangement_flag_cones() {
        // two coincident hyperplanes and one transverse: the matroid is not
        // uniform and the Bergman fan comes from flags of flats
        let r = Ring::from_names(&["x0", "x1"]);
        let forms = vec![
            parse_polynomial("x0", &r).unwrap(),
            parse_polynomial("x0", &r).unwrap(),
            parse_polynomial("x1", &r).unwrap(),
        ];
        let coeffs = vec![
            SigmaPolyhedron::half_line(rat(1, 3)),
            SigmaPolyhedron::half_line(rat_int(0)),
            SigmaPolyhedron::half_line(rat_int(0)),
        ];
        let a = ArrangementSpec::new(forms, coeffs).unwrap();
        assert!(a.has_repeated_forms());
        assert!(!a.matroid().is_uniform());
        let cones = bergman_cones(&a);
        // zero cone plus the rays of the flats {0,1} and {2}
        assert_eq!(cones.len(), 3);
        let rays: Vec<Vec<Int>> = cones
            .iter()
            .filter(|c| !c.generators.is_empty())
            .map(|c| c.generators[0].clone())
            .collect();
        assert!(rays.contains(&int_vec(&[0, -1])), "e_0 + e_1");
        assert!(rays.contains(&int_vec(&[0, 1])), "e_2");
        let reports = verify_well_poised(&a).unwrap();
        for (cone, rep) in &reports {
            assert!(rep.prime_certified, "cone {}", cone.label());
        }
    }

    #[test]
    fn non_generic_rejected_for_semigroups() {
        let r = Ring::from_names(&["x0", "x1"]);
        let forms = vec![
            parse_polynomial("x0", &r).unwrap(),
            parse_polynomial("x0", &r).unwrap(),
            parse_polynomial("x1", &r).unwrap(),
        ];
        let coeffs = vec![
            SigmaPolyhedron::half_line(rat(1, 2)),
            SigmaPolyhedron::half_line(rat_int(0)),
            SigmaPolyhedron::half_line(rat_int(0)),
        ];
        let a = ArrangementSpec::new(forms, coeffs).unwrap();
        assert!(a.has_repeated_forms());
        assert!(matches!(
            value_semigroup(&a, &[0, 1]),
            Err(ArrangementError::NotGeneric)
        ));
    }
}
