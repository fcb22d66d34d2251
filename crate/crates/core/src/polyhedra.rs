//! Exact rational cones and σ-polyhedra: double-description duals, Hilbert
//! bases, support functions, Minkowski sums, faces, admissability.

use crate::exactmath::{
    dot_int, dot_int_rat, dot_rat, int, is_zero_vec, primitive, primitive_of_rat, rank_of_rat_rows,
    Int, IntMatrix, Rat,
};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyhedraError {
    #[error("cone is not pointed")]
    NotPointed,
    #[error("functional is unbounded below on the polyhedron")]
    UnboundedBelow,
    #[error("polyhedra have different tail cones")]
    TailMismatch,
    #[error("ambient dimension mismatch")]
    DimensionMismatch,
    #[error("a σ-polyhedron needs at least one vertex")]
    EmptyPolyhedron,
}

/// Output of the double description method on a system ⟨a_i, x⟩ ≥ 0:
/// extreme rays plus a lineality basis.
#[derive(Debug, Clone)]
pub struct DdOutput {
    pub rays: Vec<Vec<Int>>,
    pub lineality: Vec<Vec<Int>>,
}

/// Double description: extreme rays and lineality of {x : ⟨a, x⟩ ≥ 0 for a in halfspaces}.
/// Halfspaces are inserted in the given order.
pub fn dd_extreme_rays(dim: usize, halfspaces: &[Vec<Int>]) -> DdOutput {
    // state: lineality basis + rays, each ray tagged with its zero set over processed halfspaces
    let mut lineality: Vec<Vec<Int>> = (0..dim)
        .map(|i| {
            let mut e = vec![Int::zero(); dim];
            e[i] = Int::one();
            e
        })
        .collect();
    let mut rays: Vec<(Vec<Int>, Vec<bool>)> = Vec::new();
    let mut processed: Vec<Vec<Int>> = Vec::new();

    for a in halfspaces {
        assert_eq!(a.len(), dim);
        let pivot_idx = lineality.iter().position(|l| !dot_int(l, a).is_zero());
        if let Some(p) = pivot_idx {
            let mut pivot = lineality.remove(p);
            if dot_int(&pivot, a).is_negative() {
                pivot = pivot.iter().map(|x| -x).collect();
            }
            let pa = dot_int(&pivot, a);
            for l in lineality.iter_mut() {
                let la = dot_int(l, a);
                if !la.is_zero() {
                    // l <- pa*l - la*pivot, lands on the hyperplane
                    let new: Vec<Int> = l
                        .iter()
                        .zip(&pivot)
                        .map(|(x, y)| &pa * x - &la * y)
                        .collect();
                    *l = primitive(&new);
                }
            }
            for (r, zs) in rays.iter_mut() {
                let ra = dot_int(r, a);
                if !ra.is_zero() {
                    let new: Vec<Int> = r
                        .iter()
                        .zip(&pivot)
                        .map(|(x, y)| &pa * x - &ra * y)
                        .collect();
                    *r = primitive(&new);
                }
                zs.push(true);
            }
            // the pivot itself becomes a ray strictly inside the new halfspace
            let mut zs = vec![false; processed.len()];
            for (k, h) in processed.iter().enumerate() {
                zs[k] = dot_int(&pivot, h).is_zero();
            }
            zs.push(false);
            rays.push((primitive(&pivot), zs));
            processed.push(a.clone());
            continue;
        }

        // a vanishes on the lineality: split rays by sign
        let signs: Vec<Int> = rays.iter().map(|(r, _)| dot_int(r, a)).collect();
        let mut new_rays: Vec<(Vec<Int>, Vec<bool>)> = Vec::new();
        for (k, (r, zs)) in rays.iter().enumerate() {
            if !signs[k].is_negative() {
                let mut zs = zs.clone();
                zs.push(signs[k].is_zero());
                new_rays.push((r.clone(), zs));
            }
        }
        // adjacent (+,-) pairs generate new rays on the hyperplane
        for i in 0..rays.len() {
            if !signs[i].is_positive() {
                continue;
            }
            for j in 0..rays.len() {
                if !signs[j].is_negative() {
                    continue;
                }
                if !adjacent(&rays, i, j) {
                    continue;
                }
                let (ri, zi) = &rays[i];
                let (rj, zj) = &rays[j];
                let (si, sj) = (&signs[i], &signs[j]);
                // si*rj - sj*ri satisfies ⟨a,·⟩ = 0 and stays in the cone
                let new: Vec<Int> = rj
                    .iter()
                    .zip(ri)
                    .map(|(y, x)| si * y - sj * x)
                    .collect();
                let new = primitive(&new);
                if is_zero_vec(&new) {
                    continue;
                }
                let mut zs: Vec<bool> = zi.iter().zip(zj).map(|(a, b)| *a && *b).collect();
                zs.push(true);
                new_rays.push((new, zs));
            }
        }
        rays = new_rays;
        dedup_rays(&mut rays);
        processed.push(a.clone());
    }

    let mut out_rays: Vec<Vec<Int>> = rays.into_iter().map(|(r, _)| r).collect();
    out_rays.sort();
    out_rays.dedup();
    let lineality = canonical_lattice_basis(&lineality);
    DdOutput { rays: out_rays, lineality }
}

fn dedup_rays(rays: &mut Vec<(Vec<Int>, Vec<bool>)>) {
    rays.sort_by(|a, b| a.0.cmp(&b.0));
    rays.dedup_by(|a, b| a.0 == b.0);
}

// combinatorial adjacency: no third ray's zero set contains the common zero set
fn adjacent(rays: &[(Vec<Int>, Vec<bool>)], i: usize, j: usize) -> bool {
    let common: Vec<bool> = rays[i]
        .1
        .iter()
        .zip(&rays[j].1)
        .map(|(a, b)| *a && *b)
        .collect();
    for (k, (_, zs)) in rays.iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        if common.iter().zip(zs).all(|(c, z)| !*c || *z) {
            return false;
        }
    }
    true
}

fn canonical_lattice_basis(vecs: &[Vec<Int>]) -> Vec<Vec<Int>> {
    if vecs.is_empty() {
        return Vec::new();
    }
    let m = IntMatrix::from_rows(vecs);
    let (h, _) = crate::exactmath::hermite_normal_form(&m);
    h.row_vecs()
        .into_iter()
        .filter(|r| !is_zero_vec(r))
        .collect()
}

/// A rational polyhedral cone given by primitive integer generators.
/// Non-pointed cones list both directions of their lineality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCone {
    pub ambient_dim: usize,
    pub generators: Vec<Vec<Int>>,
}

impl RationalCone {
    pub fn new(ambient_dim: usize, generators: Vec<Vec<Int>>) -> Self {
        let mut gens: Vec<Vec<Int>> = generators
            .into_iter()
            .filter(|g| !is_zero_vec(g))
            .map(|g| primitive(&g))
            .collect();
        gens.sort();
        gens.dedup();
        for g in &gens {
            assert_eq!(g.len(), ambient_dim, "generator dimension mismatch");
        }
        RationalCone { ambient_dim, generators: gens }
    }

    pub fn from_i64(dim: usize, gens: &[&[i64]]) -> Self {
        RationalCone::new(
            dim,
            gens.iter().map(|g| crate::exactmath::int_vec(g)).collect(),
        )
    }

    pub fn zero(dim: usize) -> Self {
        RationalCone { ambient_dim: dim, generators: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// The dual cone {u : ⟨u, v⟩ ≥ 0 for all v in self}, via double description.
    pub fn dual(&self) -> RationalCone {
        let dd = dd_extreme_rays(self.ambient_dim, &self.generators);
        let mut gens = dd.rays;
        for l in dd.lineality {
            gens.push(l.iter().map(|x| -x).collect());
            gens.push(l);
        }
        RationalCone::new(self.ambient_dim, gens)
    }

    /// Extreme rays (canonical V-description) and lineality basis.
    pub fn skeleton(&self) -> DdOutput {
        let dual = self.dual();
        dd_extreme_rays(self.ambient_dim, &dual.generators)
    }

    /// Canonical form: extreme rays plus ± lineality basis.
    pub fn canonicalize(&self) -> RationalCone {
        let sk = self.skeleton();
        let mut gens = sk.rays;
        for l in sk.lineality {
            gens.push(l.iter().map(|x| -x).collect());
            gens.push(l);
        }
        RationalCone::new(self.ambient_dim, gens)
    }

    pub fn extreme_rays(&self) -> Vec<Vec<Int>> {
        self.skeleton().rays
    }

    pub fn is_pointed(&self) -> bool {
        self.skeleton().lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Dimension of the linear span of the cone.
    pub fn dim(&self) -> usize {
        if self.generators.is_empty() {
            return 0;
        }
        IntMatrix::from_rows(&self.generators).rank()
    }

    pub fn contains_int(&self, v: &[Int]) -> bool {
        let normals = self.dual().generators;
        normals.iter().all(|n| !dot_int(n, v).is_negative())
    }

    pub fn contains_rat(&self, v: &[Rat]) -> bool {
        let normals = self.dual().generators;
        normals
            .iter()
            .all(|n| !dot_int_rat(n, v).is_negative())
    }

    /// Σ of primitive extreme rays; interior point when the cone is full-dimensional.
    pub fn interior_point(&self) -> Vec<Int> {
        let rays = self.extreme_rays();
        let mut p = vec![Int::zero(); self.ambient_dim];
        for r in rays {
            for (x, y) in p.iter_mut().zip(&r) {
                *x += y;
            }
        }
        p
    }

    /// Equality as sets of points.
    pub fn same_cone(&self, other: &RationalCone) -> bool {
        self.canonicalize() == other.canonicalize()
    }
}

/// Minimal generating set of the semigroup cone ∩ ℤⁿ of a pointed cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertBasis {
    pub cone: RationalCone,
    pub elements: Vec<Vec<Int>>,
}

/// Hilbert basis of a pointed rational cone by bounded enumeration over the
/// zonotope of the extreme rays, then generate-and-reduce minimalization.
pub fn hilbert_basis(c: &RationalCone) -> Result<HilbertBasis, PolyhedraError> {
    let sk = c.skeleton();
    if !sk.lineality.is_empty() {
        return Err(PolyhedraError::NotPointed);
    }
    let rays = sk.rays;
    let dim = c.ambient_dim;
    if rays.is_empty() {
        return Ok(HilbertBasis { cone: c.clone(), elements: Vec::new() });
    }

    // smooth shortcut: the rays already generate the semigroup
    if rays.len() == rays[0].len() {
        let det = IntMatrix::from_rows(&rays).det();
        if det.abs().is_one() {
            let mut elements = rays.clone();
            elements.sort();
            return Ok(HilbertBasis { cone: c.clone(), elements });
        }
    }

    let normals = c.dual().generators;
    // grading by an interior point of the dual; positive on the cone minus 0
    let dual_interior = {
        let mut p = vec![Int::zero(); dim];
        for n in &normals {
            for (x, y) in p.iter_mut().zip(n) {
                *x += y;
            }
        }
        p
    };

    // every Hilbert basis element lies in the [0,1)-zonotope of the rays
    let mut lo = vec![Int::zero(); dim];
    let mut hi = vec![Int::zero(); dim];
    for r in &rays {
        for j in 0..dim {
            if r[j].is_positive() {
                hi[j] += &r[j];
            } else {
                lo[j] += &r[j];
            }
        }
    }

    let use_i64 = lo.iter().chain(hi.iter()).all(|x| x.abs() < int(1 << 20))
        && normals
            .iter()
            .flat_map(|n| n.iter())
            .all(|x| x.abs() < int(1 << 20));

    let mut candidates: Vec<Vec<Int>> = Vec::new();
    if use_i64 {
        let lo64: Vec<i64> = lo.iter().map(|x| x.try_into().unwrap()).collect();
        let hi64: Vec<i64> = hi.iter().map(|x| x.try_into().unwrap()).collect();
        let normals64: Vec<Vec<i64>> = normals
            .iter()
            .map(|n| n.iter().map(|x| x.try_into().unwrap()).collect())
            .collect();
        let mut point = vec![0i64; dim];
        enumerate_box_i64(&lo64, &hi64, &normals64, 0, &mut point, &mut candidates);
    } else {
        let mut point = vec![Int::zero(); dim];
        enumerate_box_big(&lo, &hi, &normals, 0, &mut point, &mut candidates);
    }
    candidates.retain(|p| !is_zero_vec(p));
    for r in &rays {
        candidates.push(r.clone());
    }
    candidates.sort();
    candidates.dedup();

    // generate-and-reduce, ascending by grade
    candidates.sort_by_key(|p| (dot_int(&dual_interior, p), p.clone()));
    let mut basis: Vec<Vec<Int>> = Vec::new();
    'next: for cand in candidates {
        for h in &basis {
            let diff: Vec<Int> = cand.iter().zip(h).map(|(a, b)| a - b).collect();
            if is_zero_vec(&diff) {
                continue 'next;
            }
            if normals.iter().all(|n| !dot_int(n, &diff).is_negative()) {
                continue 'next; // cand = h + (element of the cone), reducible
            }
        }
        basis.push(cand);
    }
    basis.sort();
    Ok(HilbertBasis { cone: c.clone(), elements: basis })
}

fn enumerate_box_i64(
    lo: &[i64],
    hi: &[i64],
    normals: &[Vec<i64>],
    idx: usize,
    point: &mut Vec<i64>,
    out: &mut Vec<Vec<Int>>,
) {
    if idx == lo.len() {
        if normals
            .iter()
            .all(|n| n.iter().zip(point.iter()).map(|(a, b)| a * b).sum::<i64>() >= 0)
        {
            out.push(point.iter().map(|&x| Int::from(x)).collect());
        }
        return;
    }
    for v in lo[idx]..=hi[idx] {
        point[idx] = v;
        enumerate_box_i64(lo, hi, normals, idx + 1, point, out);
    }
    point[idx] = 0;
}

fn enumerate_box_big(
    lo: &[Int],
    hi: &[Int],
    normals: &[Vec<Int>],
    idx: usize,
    point: &mut Vec<Int>,
    out: &mut Vec<Vec<Int>>,
) {
    if idx == lo.len() {
        if normals.iter().all(|n| !dot_int(n, point).is_negative()) {
            out.push(point.clone());
        }
        return;
    }
    let mut v = lo[idx].clone();
    while v <= hi[idx] {
        point[idx] = v.clone();
        enumerate_box_big(lo, hi, normals, idx + 1, point, out);
        v += Int::one();
    }
    point[idx] = Int::zero();
}

impl HilbertBasis {
    /// Greedy decomposition of a lattice point of the cone as an ℕ-combination
    /// of basis elements. Returns the multiplicities.
    pub fn decompose(&self, v: &[Int]) -> Option<Vec<Int>> {
        let normals = self.cone.dual().generators;
        if !normals.iter().all(|n| !dot_int(n, v).is_negative()) {
            return None;
        }
        let mut rem = v.to_vec();
        let mut coeffs = vec![Int::zero(); self.elements.len()];
        'outer: while !is_zero_vec(&rem) {
            for (k, h) in self.elements.iter().enumerate() {
                let diff: Vec<Int> = rem.iter().zip(h).map(|(a, b)| a - b).collect();
                if normals.iter().all(|n| !dot_int(n, &diff).is_negative()) {
                    rem = diff;
                    coeffs[k] += Int::one();
                    continue 'outer;
                }
            }
            return None;
        }
        Some(coeffs)
    }

    pub fn generates(&self, v: &[Int]) -> bool {
        self.decompose(v).is_some()
    }
}

/// A σ-polyhedron conv(vertices) + tail, with canonical vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaPolyhedron {
    pub ambient_dim: usize,
    pub vertices: Vec<Vec<Rat>>,
    pub tail: RationalCone,
}

impl SigmaPolyhedron {
    pub fn new(
        ambient_dim: usize,
        vertices: Vec<Vec<Rat>>,
        tail: RationalCone,
    ) -> Result<Self, PolyhedraError> {
        if vertices.is_empty() {
            return Err(PolyhedraError::EmptyPolyhedron);
        }
        if tail.ambient_dim != ambient_dim
            || vertices.iter().any(|v| v.len() != ambient_dim)
        {
            return Err(PolyhedraError::DimensionMismatch);
        }
        // canonical form via the homogenization cone pos{(v,1)} ∪ pos{(ray,0)}
        let mut gens: Vec<Vec<Int>> = Vec::new();
        for v in &vertices {
            let mut h: Vec<Rat> = v.clone();
            h.push(Rat::one());
            gens.push(primitive_of_rat(&h));
        }
        for r in &tail.generators {
            let mut h = r.clone();
            h.push(Int::zero());
            gens.push(h);
        }
        let cone = RationalCone::new(ambient_dim + 1, gens);
        let sk = cone.skeleton();
        assert!(
            sk.lineality.is_empty(),
            "σ-polyhedron tail cone must be pointed"
        );
        let mut verts: Vec<Vec<Rat>> = Vec::new();
        let mut tail_rays: Vec<Vec<Int>> = Vec::new();
        for r in sk.rays {
            let last = r[ambient_dim].clone();
            if last.is_zero() {
                tail_rays.push(r[..ambient_dim].to_vec());
            } else {
                let v: Vec<Rat> = r[..ambient_dim]
                    .iter()
                    .map(|x| Rat::new(x.clone(), last.clone()))
                    .collect();
                verts.push(v);
            }
        }
        verts.sort();
        Ok(SigmaPolyhedron {
            ambient_dim,
            vertices: verts,
            tail: RationalCone::new(ambient_dim, tail_rays),
        })
    }

    pub fn point(v: Vec<Rat>, tail: RationalCone) -> Result<Self, PolyhedraError> {
        let d = v.len();
        SigmaPolyhedron::new(d, vec![v], tail)
    }

    /// Half-line [a, ∞) in one dimension.
    pub fn half_line(a: Rat) -> Self {
        SigmaPolyhedron::new(1, vec![vec![a]], RationalCone::from_i64(1, &[&[1]])).unwrap()
    }

    pub fn same_tail(&self, other: &SigmaPolyhedron) -> bool {
        self.tail.same_cone(&other.tail)
    }

    fn check_dual_tail(&self, u: &[Rat]) -> Result<(), PolyhedraError> {
        if u.len() != self.ambient_dim {
            return Err(PolyhedraError::DimensionMismatch);
        }
        for r in &self.tail.generators {
            if dot_int_rat(r, u).is_negative() {
                return Err(PolyhedraError::UnboundedBelow);
            }
        }
        Ok(())
    }

    /// min over the polyhedron of ⟨u, ·⟩; requires u in the dual of the tail.
    pub fn support_value(&self, u: &[Rat]) -> Result<Rat, PolyhedraError> {
        self.check_dual_tail(u)?;
        Ok(self
            .vertices
            .iter()
            .map(|v| dot_rat(u, v))
            .min()
            .expect("nonempty vertex set"))
    }

    pub fn support_value_int(&self, u: &[Int]) -> Result<Rat, PolyhedraError> {
        let ur: Vec<Rat> = u.iter().map(|x| Rat::from_integer(x.clone())).collect();
        self.support_value(&ur)
    }

    pub fn minkowski_sum(&self, other: &SigmaPolyhedron) -> Result<SigmaPolyhedron, PolyhedraError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(PolyhedraError::DimensionMismatch);
        }
        if !self.same_tail(other) {
            return Err(PolyhedraError::TailMismatch);
        }
        let mut verts = Vec::new();
        for a in &self.vertices {
            for b in &other.vertices {
                verts.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        SigmaPolyhedron::new(self.ambient_dim, verts, self.tail.clone())
    }

    /// The face on which ⟨u, ·⟩ attains its minimum.
    pub fn face_at(&self, u: &[Rat]) -> Result<SigmaPolyhedron, PolyhedraError> {
        let m = self.support_value(u)?;
        let verts: Vec<Vec<Rat>> = self
            .vertices
            .iter()
            .filter(|v| dot_rat(u, v) == m)
            .cloned()
            .collect();
        let tail_rays: Vec<Vec<Int>> = self
            .tail
            .extreme_rays()
            .into_iter()
            .filter(|r| dot_int_rat(r, u).is_zero())
            .collect();
        SigmaPolyhedron::new(
            self.ambient_dim,
            verts,
            RationalCone::new(self.ambient_dim, tail_rays),
        )
    }

    pub fn has_integral_vertices(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(|x| x.is_integer()))
    }

    /// H-description via the dual of the homogenization cone.
    pub fn to_inequalities(&self) -> PolyhedronByInequalities {
        let mut gens: Vec<Vec<Int>> = Vec::new();
        for v in &self.vertices {
            let mut h: Vec<Rat> = v.clone();
            h.push(Rat::one());
            gens.push(primitive_of_rat(&h));
        }
        for r in &self.tail.generators {
            let mut h = r.clone();
            h.push(Int::zero());
            gens.push(h);
        }
        let cone = RationalCone::new(self.ambient_dim + 1, gens);
        let dual = cone.dual();
        let mut ineqs = Vec::new();
        for n in dual.generators {
            let normal = n[..self.ambient_dim].to_vec();
            let bound = Rat::from_integer(-n[self.ambient_dim].clone());
            if is_zero_vec(&normal) {
                continue; // 0 ≥ -c, trivially true on a nonempty polyhedron
            }
            ineqs.push((normal, bound));
        }
        PolyhedronByInequalities { ambient_dim: self.ambient_dim, inequalities: ineqs }
    }

    pub fn contains(&self, p: &[Rat]) -> bool {
        self.to_inequalities().contains(p)
    }

    pub fn same_polyhedron(&self, other: &SigmaPolyhedron) -> bool {
        self.vertices == other.vertices && self.tail.same_cone(&other.tail)
    }
}

/// {x : ⟨normal, x⟩ ≥ bound}; may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyhedronByInequalities {
    pub ambient_dim: usize,
    pub inequalities: Vec<(Vec<Int>, Rat)>,
}

impl PolyhedronByInequalities {
    pub fn contains(&self, p: &[Rat]) -> bool {
        self.inequalities
            .iter()
            .all(|(n, b)| dot_int_rat(n, p) >= *b)
    }

    pub fn contains_int(&self, p: &[Int]) -> bool {
        let pr: Vec<Rat> = p.iter().map(|x| Rat::from_integer(x.clone())).collect();
        self.contains(&pr)
    }
}

/// Inequality description of conv{p/d : (p, d) in points}.
pub fn convex_hull_scaled(points: &[(Vec<Rat>, Rat)]) -> PolyhedronByInequalities {
    assert!(!points.is_empty(), "convex hull of empty set");
    let dim = points[0].0.len();
    let scaled: Vec<Vec<Rat>> = points
        .iter()
        .map(|(p, d)| {
            assert!(d.is_positive(), "degrees must be positive");
            p.iter().map(|x| x / d).collect()
        })
        .collect();
    let poly = SigmaPolyhedron::new(dim, scaled, RationalCone::zero(dim)).expect("nonempty");
    poly.to_inequalities()
}

/// Common refinement of the normal fans of a family of σ-polyhedra with a
/// shared tail. Yields, per full-dimensional cone, an interior representative
/// (sum of primitive extreme rays) and the selected vertex of each polyhedron.
pub fn normal_fan_refinement(
    polys: &[SigmaPolyhedron],
) -> Result<Vec<(Vec<Int>, Vec<usize>)>, PolyhedraError> {
    assert!(!polys.is_empty());
    let dim = polys[0].ambient_dim;
    for p in polys {
        if p.ambient_dim != dim {
            return Err(PolyhedraError::DimensionMismatch);
        }
        if !p.same_tail(&polys[0]) {
            return Err(PolyhedraError::TailMismatch);
        }
    }
    let tail = &polys[0].tail;
    // σ is pointed (enforced by the σ-polyhedron constructor), so σ∨ is
    // full-dimensional and the maximal refinement cones have this dimension
    let sigma_dual_dim = dim;

    let mut out: Vec<(Vec<Int>, Vec<usize>)> = Vec::new();
    let mut seen: BTreeSet<Vec<Int>> = BTreeSet::new();
    let choices: Vec<usize> = polys.iter().map(|p| p.vertices.len()).collect();
    let mut pick = vec![0usize; polys.len()];
    loop {
        // cone of u's selecting vertex pick[i] from polys[i]
        let mut halfspaces: Vec<Vec<Int>> = Vec::new();
        for r in &tail.generators {
            halfspaces.push(r.clone());
        }
        for (i, p) in polys.iter().enumerate() {
            let v = &p.vertices[pick[i]];
            for (k, w) in p.vertices.iter().enumerate() {
                if k == pick[i] {
                    continue;
                }
                // ⟨u, w⟩ ≥ ⟨u, v⟩
                let diff: Vec<Rat> = w.iter().zip(v).map(|(a, b)| a - b).collect();
                let n = primitive_of_rat(&diff);
                if !is_zero_vec(&n) {
                    halfspaces.push(n);
                }
            }
        }
        halfspaces.sort();
        halfspaces.dedup();
        let dd = dd_extreme_rays(dim, &halfspaces);
        let cone_dim = {
            let mut span: Vec<Vec<Rat>> = Vec::new();
            for r in dd.rays.iter().chain(dd.lineality.iter()) {
                span.push(r.iter().map(|x| Rat::from_integer(x.clone())).collect());
            }
            if span.is_empty() { 0 } else { rank_of_rat_rows(&span) }
        };
        if cone_dim == sigma_dual_dim {
            let mut rep = vec![Int::zero(); dim];
            for r in &dd.rays {
                for (x, y) in rep.iter_mut().zip(r) {
                    *x += y;
                }
            }
            let rep = primitive(&rep);
            if !is_zero_vec(&rep) && seen.insert(rep.clone()) {
                out.push((rep, pick.clone()));
            } else if is_zero_vec(&rep) && seen.insert(rep.clone()) {
                // σ∨ is all of space only when σ = {0}; keep the zero rep once
                out.push((rep, pick.clone()));
            }
        }
        // next tuple
        let mut i = 0;
        loop {
            if i == pick.len() {
                out.sort_by(|a, b| a.0.cmp(&b.0));
                return Ok(out);
            }
            pick[i] += 1;
            if pick[i] < choices[i] {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// Admissability: for every u in σ∨ at most one polyhedron's minimizing face
/// is non-integral. Decided per maximal cone of the common normal-fan
/// refinement; on failure returns the representative u as witness.
pub fn is_admissable(polys: &[SigmaPolyhedron]) -> Result<(bool, Option<Vec<Int>>), PolyhedraError> {
    if polys.len() <= 1 {
        return Ok((true, None));
    }
    for p in &polys[1..] {
        if !p.same_tail(&polys[0]) {
            return Err(PolyhedraError::TailMismatch);
        }
    }
    let pieces = normal_fan_refinement(polys)?;
    for (rep, _picks) in &pieces {
        let u: Vec<Rat> = rep.iter().map(|x| Rat::from_integer(x.clone())).collect();
        let mut non_integral = 0usize;
        for p in polys {
            let face = p.face_at(&u)?;
            if !face.has_integral_vertices() {
                non_integral += 1;
            }
        }
        if non_integral > 1 {
            return Ok((false, Some(rep.clone())));
        }
    }
    Ok((true, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_int, rat_vec};

    #[test]
    fn dual_orthant() {
        let c = RationalCone::from_i64(2, &[&[1, 0], &[0, 1]]);
        let d = c.dual();
        assert_eq!(d.generators, vec![crate::exactmath::int_vec(&[0, 1]), crate::exactmath::int_vec(&[1, 0])]);
    }

    #[test]
    fn dual_slanted() {
        let c = RationalCone::from_i64(2, &[&[1, 0], &[1, 2]]);
        let d = c.dual();
        let expect = RationalCone::from_i64(2, &[&[0, 1], &[2, -1]]);
        assert!(d.same_cone(&expect));
        // sample-grid sign oracle
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                let v = crate::exactmath::int_vec(&[x, y]);
                let in_dual = d.contains_int(&v);
                let oracle = [[1i64, 0], [1, 2]]
                    .iter()
                    .all(|g| g[0] * x + g[1] * y >= 0);
                assert_eq!(in_dual, oracle, "({x},{y})");
            }
        }
    }

    #[test]
    fn dual_of_line() {
        let c = RationalCone::from_i64(2, &[&[1, 0], &[-1, 0]]);
        let d = c.dual();
        let expect = RationalCone::from_i64(2, &[&[0, 1], &[0, -1]]);
        assert!(d.same_cone(&expect));
        assert!(d.dual().same_cone(&c));
    }

    #[test]
    fn dual_involution() {
        let c = RationalCone::from_i64(3, &[&[1, 0, 0], &[1, 2, 0], &[0, 1, 3], &[2, 1, 1]]);
        assert!(c.dual().dual().same_cone(&c));
    }

    #[test]
    fn hilbert_orthant_and_ray() {
        let c = RationalCone::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let hb = hilbert_basis(&c).unwrap();
        assert_eq!(hb.elements.len(), 3);

        let r = RationalCone::from_i64(2, &[&[2, 3]]);
        let hb = hilbert_basis(&r).unwrap();
        assert_eq!(hb.elements, vec![crate::exactmath::int_vec(&[2, 3])]);
    }

    #[test]
    fn hilbert_slanted() {
        let c = RationalCone::from_i64(2, &[&[1, 0], &[1, 2]]);
        let hb = hilbert_basis(&c).unwrap();
        assert_eq!(
            hb.elements,
            vec![
                crate::exactmath::int_vec(&[1, 0]),
                crate::exactmath::int_vec(&[1, 1]),
                crate::exactmath::int_vec(&[1, 2]),
            ]
        );
    }

    #[test]
    fn hilbert_not_pointed() {
        let c = RationalCone::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(hilbert_basis(&c), Err(PolyhedraError::NotPointed));
    }

    #[test]
    fn support_values() {
        let p = SigmaPolyhedron::half_line(rat(6, 5));
        assert_eq!(p.support_value(&[rat_int(1)]).unwrap(), rat(6, 5));
        let p2 = SigmaPolyhedron::half_line(rat(-1, 2));
        assert_eq!(p2.support_value(&[rat_int(2)]).unwrap(), rat_int(-1));
        assert_eq!(
            p2.support_value(&[rat_int(-1)]),
            Err(PolyhedraError::UnboundedBelow)
        );

        let seg = SigmaPolyhedron::new(
            2,
            vec![rat_vec(&[0, 0]), rat_vec(&[1, 0])],
            RationalCone::zero(2),
        )
        .unwrap();
        assert_eq!(
            seg.support_value(&[rat_int(-1), rat_int(5)]).unwrap(),
            rat_int(-1)
        );
    }

    #[test]
    fn minkowski_intervals() {
        let a = SigmaPolyhedron::half_line(rat(6, 5));
        let b = SigmaPolyhedron::half_line(rat(-1, 2));
        let s = a.minkowski_sum(&b).unwrap();
        assert_eq!(s.vertices, vec![vec![rat(7, 10)]]);

        let origin = SigmaPolyhedron::point(rat_vec(&[0]), RationalCone::from_i64(1, &[&[1]])).unwrap();
        let t = a.minkowski_sum(&origin).unwrap();
        assert!(t.same_polyhedron(&a));
    }

    #[test]
    fn minkowski_support_additivity() {
        let p = SigmaPolyhedron::new(
            2,
            vec![rat_vec(&[0, 0]), rat_vec(&[2, 0]), rat_vec(&[0, 3])],
            RationalCone::zero(2),
        )
        .unwrap();
        let q = SigmaPolyhedron::new(
            2,
            vec![rat_vec(&[1, 1]), rat_vec(&[-1, 2])],
            RationalCone::zero(2),
        )
        .unwrap();
        let s = p.minkowski_sum(&q).unwrap();
        for x in -5i64..=5 {
            for y in -5i64..=5 {
                let u = vec![rat_int(x), rat_int(y)];
                let lhs = s.support_value(&u).unwrap();
                let rhs = p.support_value(&u).unwrap() + q.support_value(&u).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn faces() {
        let p = SigmaPolyhedron::half_line(rat(6, 5));
        let f = p.face_at(&[rat_int(1)]).unwrap();
        assert_eq!(f.vertices, vec![vec![rat(6, 5)]]);
        assert!(f.tail.is_zero());

        let square = SigmaPolyhedron::new(
            2,
            vec![rat_vec(&[0, 0]), rat_vec(&[1, 0]), rat_vec(&[0, 1]), rat_vec(&[1, 1])],
            RationalCone::zero(2),
        )
        .unwrap();
        let edge = square.face_at(&[rat_int(1), rat_int(0)]).unwrap();
        assert_eq!(edge.vertices, vec![rat_vec(&[0, 0]), rat_vec(&[0, 1])]);
        let whole = square.face_at(&[rat_int(0), rat_int(0)]).unwrap();
        assert!(whole.same_polyhedron(&square));
    }

    #[test]
    fn admissability() {
        let a = SigmaPolyhedron::half_line(rat(6, 5));
        let b = SigmaPolyhedron::half_line(rat(-1, 2));
        let (ok, witness) = is_admissable(&[a.clone(), b]).unwrap();
        assert!(!ok);
        assert_eq!(witness, Some(vec![Int::one()]));

        let c = SigmaPolyhedron::half_line(rat_int(0));
        let d = SigmaPolyhedron::half_line(rat_int(1));
        assert_eq!(is_admissable(&[c, d]).unwrap(), (true, None));

        assert_eq!(is_admissable(&[a]).unwrap(), (true, None));
    }

    #[test]
    fn admissability_boundary_vertices() {
        // both polytopes have non-integral vertices but never on the same cone
        let zero = RationalCone::zero(1);
        let p = SigmaPolyhedron::new(1, vec![vec![rat(1, 2)], vec![rat_int(1)]], zero.clone()).unwrap();
        let q = SigmaPolyhedron::new(1, vec![vec![rat_int(0)], vec![rat(3, 2)]], zero).unwrap();
        assert_eq!(is_admissable(&[p, q]).unwrap(), (true, None));
    }

    #[test]
    fn hull_scaled_random_membership_oracle() {
        // fixed pseudo-random points; membership cross-checked against an
        // exact triangle-decomposition oracle, independent of the DD route
        let pts: Vec<Vec<Rat>> = [
            (3, 1), (-2, 4), (0, -3), (5, 2), (-4, -1),
            (1, 5), (2, -2), (-1, 2), (4, -4), (-3, 3),
        ]
        .iter()
        .map(|&(x, y)| vec![rat_int(x), rat_int(y)])
        .collect();
        let input: Vec<(Vec<Rat>, Rat)> =
            pts.iter().map(|p| (p.clone(), rat_int(1))).collect();
        let hull = convex_hull_scaled(&input);

        let signed_area = |a: &[Rat], b: &[Rat], c: &[Rat]| -> Rat {
            (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0])
        };
        let in_triangle = |p: &[Rat], a: &[Rat], b: &[Rat], c: &[Rat]| -> bool {
            let d = signed_area(a, b, c);
            if d.is_zero() {
                return false;
            }
            let s1 = signed_area(p, a, b);
            let s2 = signed_area(p, b, c);
            let s3 = signed_area(p, c, a);
            let nonneg = |x: &Rat| !x.is_negative();
            let nonpos = |x: &Rat| !x.is_positive();
            (nonneg(&s1) && nonneg(&s2) && nonneg(&s3))
                || (nonpos(&s1) && nonpos(&s2) && nonpos(&s3))
        };
        let oracle = |p: &[Rat]| -> bool {
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    for k in j + 1..pts.len() {
                        if in_triangle(p, &pts[i], &pts[j], &pts[k]) {
                            return true;
                        }
                    }
                }
            }
            pts.iter().any(|q| *q == p)
        };
        for x in -6i64..=6 {
            for y in -6i64..=6 {
                let p = vec![rat_int(x), rat_int(y)];
                assert_eq!(hull.contains(&p), oracle(&p), "({x},{y})");
            }
        }
    }

    #[test]
    fn hull_scaled() {
        let pts = vec![
            (rat_vec(&[0, 0]), rat_int(1)),
            (rat_vec(&[2, 0]), rat_int(2)),
            (rat_vec(&[0, 2]), rat_int(2)),
        ];
        let hull = convex_hull_scaled(&pts);
        assert!(hull.contains(&rat_vec(&[0, 0])));
        assert!(hull.contains(&rat_vec(&[1, 0])));
        assert!(hull.contains(&[rat(1, 2), rat(1, 2)]));
        assert!(!hull.contains(&rat_vec(&[1, 1])));

        let single = convex_hull_scaled(&[(rat_vec(&[3, 4]), rat_int(1))]);
        assert!(single.contains(&rat_vec(&[3, 4])));
        assert!(!single.contains(&rat_vec(&[3, 5])));
    }
}
