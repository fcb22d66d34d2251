//! Buchberger's algorithm with sugar-flavoured pair selection, the coprime
//! and chain criteria, and content normalization after every reduction.

use crate::exactmath::Rat;
use crate::polyalg::poly::{Monomial, Polynomial};
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// A term order: optional elimination block (first `elim` variables), then
/// weight rows compared in sequence, then grevlex. Leading terms are maximal.
///
/// With nonnegative weight rows this is a genuine term order; negative rows
/// are only used on ideals homogeneous under a positive grading, where the
/// caller shifts them first.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialOrder {
    pub elim: usize,
    pub weights: Vec<Vec<Rat>>,
}

impl MonomialOrder {
    pub fn grevlex() -> Self {
        MonomialOrder { elim: 0, weights: Vec::new() }
    }

    pub fn eliminate(block: usize) -> Self {
        MonomialOrder { elim: block, weights: Vec::new() }
    }

    pub fn weighted(rows: Vec<Vec<Rat>>) -> Self {
        MonomialOrder { elim: 0, weights: rows }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.elim > 0 {
            let da: i64 = a.0[..self.elim].iter().sum();
            let db: i64 = b.0[..self.elim].iter().sum();
            match da.cmp(&db) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        for w in &self.weights {
            let wa: Rat = a
                .0
                .iter()
                .zip(w)
                .map(|(e, wi)| Rat::from_integer((*e).into()) * wi)
                .sum();
            let wb: Rat = b
                .0
                .iter()
                .zip(w)
                .map(|(e, wi)| Rat::from_integer((*e).into()) * wi)
                .sum();
            match wa.cmp(&wb) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        a.grevlex_cmp(b)
    }

    pub fn leading_term<'a>(&self, f: &'a Polynomial) -> Option<(&'a Monomial, &'a Rat)> {
        f.terms
            .iter()
            .max_by(|x, y| self.cmp(&x.0, &y.0))
            .map(|(m, c)| (m, c))
    }
}

/// Fully reduces `f` modulo `basis`: no term of the result is divisible by a
/// leading term of the basis. Content-normalized.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let ring = f.ring.clone();
    let leads: Vec<(Monomial, Rat)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (m, c) = order.leading_term(g).expect("nonzero");
            (m.clone(), c.clone())
        })
        .collect();
    let gens: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();

    let mut work = f.clone();
    let mut result = ring.zero();
    while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = order.leading_term(&work).expect("nonzero");
            (m.clone(), c.clone())
        };
        let reducer = leads.iter().position(|(m, _)| m.divides(&lm));
        match reducer {
            Some(k) => {
                // exact congruence mod the ideal; callers use the result as a
                // representative, so no rescaling here
                let q = lm.div(&leads[k].0);
                let factor = &lc / &leads[k].1;
                work = work.sub(&gens[k].mul_term(&q, &factor));
            }
            None => {
                result = result.add(&ring.monomial(lm.clone(), lc.clone()));
                work = work.sub(&ring.monomial(lm, lc));
            }
        }
    }
    result
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (lmf, lcf) = order.leading_term(f).expect("nonzero");
    let (lmg, lcg) = order.leading_term(g).expect("nonzero");
    let l = lmf.lcm(lmg);
    let a = f.mul_term(&l.div(lmf), &(Rat::from_integer(1.into()) / lcf));
    let b = g.mul_term(&l.div(lmg), &(Rat::from_integer(1.into()) / lcg));
    a.sub(&b)
}

/// Reduced Gröbner basis: pairwise reduced, content-normalized generators,
/// sorted ascending by leading term. Unique for a fixed order.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.content_normalize())
        .collect();
    if basis.is_empty() {
        return basis;
    }

    let mut pairs: BTreeSet<(i64, usize, usize)> = BTreeSet::new();
    let lead = |basis: &[Polynomial], i: usize| -> Monomial {
        order.leading_term(&basis[i]).expect("nonzero").0.clone()
    };
    for i in 0..basis.len() {
        for j in 0..i {
            let l = lead(&basis, i).lcm(&lead(&basis, j));
            pairs.insert((l.total_degree(), j, i));
        }
    }
    let mut dropped: BTreeSet<(usize, usize)> = BTreeSet::new();

    while let Some(&(d, i, j)) = pairs.iter().next() {
        pairs.remove(&(d, i, j));
        dropped.insert((i, j));
        let li = lead(&basis, i);
        let lj = lead(&basis, j);
        if li.coprime(&lj) {
            continue;
        }
        // chain criterion
        let lcm_ij = li.lcm(&lj);
        let mut skip = false;
        for k in 0..basis.len() {
            if k == i || k == j {
                continue;
            }
            let lk = lead(&basis, k);
            if lk.divides(&lcm_ij)
                && dropped.contains(&(k.min(i), k.max(i)))
                && dropped.contains(&(k.min(j), k.max(j)))
            {
                skip = true;
                break;
            }
        }
        if skip {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let r = r.content_normalize();
            let new_idx = basis.len();
            let lr = order.leading_term(&r).expect("nonzero").0.clone();
            basis.push(r);
            for k in 0..new_idx {
                let l = lead(&basis, k).lcm(&lr);
                pairs.insert((l.total_degree(), k, new_idx));
            }
        }
    }

    reduce_basis(basis, order)
}

fn reduce_basis(mut basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    // minimal: drop generators whose leading term another one divides
    loop {
        let leads: Vec<Monomial> = basis
            .iter()
            .map(|g| order.leading_term(g).expect("nonzero").0.clone())
            .collect();
        let mut remove: Option<usize> = None;
        'outer: for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i != j && leads[j].divides(&leads[i]) {
                    // break ties deterministically when leads are equal
                    if leads[j] != leads[i] || j < i {
                        remove = Some(i);
                        break 'outer;
                    }
                }
            }
        }
        match remove {
            Some(i) => {
                basis.remove(i);
            }
            None => break,
        }
    }
    // fully reduce tails
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let others: Vec<Polynomial> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = normal_form(&basis[i], &others, order);
        if !r.is_zero() {
            reduced.push(r.content_normalize());
        }
    }
    reduced.sort_by(|a, b| {
        let la = order.leading_term(a).expect("nonzero").0.clone();
        let lb = order.leading_term(b).expect("nonzero").0.clone();
        order.cmp(&la, &lb)
    });
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat_int;
    use crate::polyalg::poly::{parse_polynomial, Ring};

    #[test]
    fn principal_and_zero() {
        let r = Ring::from_names(&["x", "y"]);
        let f = parse_polynomial("x", &r).unwrap();
        let gb = buchberger(&[f.clone()], &MonomialOrder::grevlex());
        assert_eq!(gb, vec![f]);
        let gb = buchberger(&[], &MonomialOrder::grevlex());
        assert!(gb.is_empty());
    }

    #[test]
    fn simple_basis() {
        let r = Ring::from_names(&["x", "y"]);
        let f = parse_polynomial("x^2 - y", &r).unwrap();
        let g = parse_polynomial("x*y - 1", &r).unwrap();
        let gb = buchberger(&[f, g], &MonomialOrder::grevlex());
        // the variety is x^3 = 1, y = x^2; NF of x^3 must agree with evaluation
        let x3 = parse_polynomial("x^3", &r).unwrap();
        let nf = normal_form(&x3, &gb, &MonomialOrder::grevlex());
        let pt = [rat_int(1), rat_int(1)];
        assert_eq!(nf.eval(&pt), x3.eval(&pt));
        // y^3 - 1 is in the ideal
        let y3 = parse_polynomial("y^3 - 1", &r).unwrap();
        assert!(normal_form(&y3, &gb, &MonomialOrder::grevlex()).is_zero());
    }

    #[test]
    fn elimination_order_property() {
        let r = Ring::from_names(&["s", "y0", "y1", "y2"]);
        let gens = [
            parse_polynomial("y0 - s^2", &r).unwrap(),
            parse_polynomial("y1 - s^3", &r).unwrap(),
            parse_polynomial("y2 - s^4", &r).unwrap(),
        ];
        let order = MonomialOrder::eliminate(1);
        let gb = buchberger(&gens, &order);
        let in_subring: Vec<&Polynomial> = gb
            .iter()
            .filter(|g| g.terms.iter().all(|(m, _)| m.0[0] == 0))
            .collect();
        // y0^2 - y2 must appear among eliminated relations
        let target = parse_polynomial("y0^2 - y2", &r).unwrap();
        assert!(
            in_subring
                .iter()
                .any(|g| normal_form(&target, &[(*g).clone()], &order).is_zero()),
            "elimination ideal should contain y0^2 - y2"
        );
    }
}
