//! Ideals of polynomial rings and the Gröbner-basis engine behind them:
//! normal forms, colon ideals, saturation, elimination, intersections,
//! radical membership and unit tests in quotient rings.
//!
//! Reduced bases are unique for a fixed order, so every operation that
//! returns an ideal returns a canonical generator list.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::scalar::FieldSpec;
use crate::Error;

/// An ideal of k[x1..xn], held by generators, with a reduced Gröbner basis
/// cached per monomial order. The cache is internally synchronized so ideals
/// can be shared across threads.
#[derive(Debug)]
pub struct Ideal {
    field: FieldSpec,
    nvars: usize,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().unwrap().clone();
        Ideal {
            field: self.field,
            nvars: self.nvars,
            gens: self.gens.clone(),
            cache: Mutex::new(cache),
        }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.nvars == other.nvars
            && *self.groebner(&MonomialOrder::GrevLex) == *other.groebner(&MonomialOrder::GrevLex)
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn new(field: FieldSpec, nvars: usize, gens: Vec<Polynomial>) -> Self {
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "generator signature mismatch");
            assert_eq!(g.field(), field, "generator field mismatch");
        }
        Ideal {
            field,
            nvars,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn zero(field: FieldSpec, nvars: usize) -> Self {
        Self::new(field, nvars, Vec::new())
    }

    pub fn unit(field: FieldSpec, nvars: usize) -> Self {
        let one = Polynomial::one(field, nvars);
        Self::new(field, nvars, vec![one])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The reduced Gröbner basis under `ord`: monic, autoreduced, sorted with
    /// leading terms descending. Cached per order.
    pub fn groebner(&self, ord: &MonomialOrder) -> Arc<Vec<Polynomial>> {
        if let Some(hit) = self.cache.lock().unwrap().get(ord) {
            return hit.clone();
        }
        let basis = Arc::new(reduced_groebner(self.field, self.nvars, &self.gens, ord));
        self.cache
            .lock()
            .unwrap()
            .insert(ord.clone(), basis.clone());
        basis
    }

    /// Canonical generators: the grevlex reduced basis.
    pub fn canonical_gens(&self) -> Vec<Polynomial> {
        self.groebner(&MonomialOrder::GrevLex).as_ref().clone()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.groebner(&MonomialOrder::GrevLex).is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        let gb = self.groebner(&MonomialOrder::GrevLex);
        gb.len() == 1 && gb[0].is_one()
    }

    /// Unique normal form of `f` with respect to the reduced basis.
    pub fn reduce(&self, f: &Polynomial, ord: &MonomialOrder) -> Polynomial {
        assert_eq!(f.nvars(), self.nvars, "variable signature mismatch");
        let gb = self.groebner(ord);
        normal_form(f, &gb, ord)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f, &MonomialOrder::GrevLex).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn add_ideal(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.field, self.nvars, gens)
    }

    pub fn add_poly(&self, f: &Polynomial) -> Ideal {
        let mut gens = self.gens.clone();
        gens.push(f.clone());
        Ideal::new(self.field, self.nvars, gens)
    }

    /// All generators are single terms, judged on the canonical basis.
    pub fn is_monomial_ideal(&self) -> bool {
        self.canonical_gens().iter().all(|g| g.is_monomial())
    }

    /// I ∩ J through the tag-variable method: eliminate t from t·I + (1−t)·J.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.nvars, other.nvars);
        assert_eq!(self.field, other.field);
        if self.is_trivial() {
            return other.clone();
        }
        if other.is_trivial() {
            return self.clone();
        }
        let n = self.nvars;
        let ext = n + 1; // tag variable is the last one
        let up: Vec<Option<usize>> = (0..n).map(Some).collect();
        let t = Polynomial::var(self.field, ext, n);
        let one_minus_t = Polynomial::one(self.field, ext).sub(&t);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(g.map_vars(&up, ext).unwrap().mul(&t));
        }
        for g in &other.gens {
            gens.push(g.map_vars(&up, ext).unwrap().mul(&one_minus_t));
        }
        let extended = Ideal::new(self.field, ext, gens);
        extended.eliminate_into(&[n], n, &restriction_map(ext, &[n]))
    }

    /// (I : f) = {r | f·r ∈ I}, via intersection with (f) and exact division.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal, Error> {
        if f.is_zero() {
            return Err(Error::Input("colon by the zero polynomial".into()));
        }
        let principal = Ideal::new(self.field, self.nvars, vec![f.clone()]);
        let meet = self.intersect(&principal);
        let gens = meet
            .canonical_gens()
            .iter()
            .map(|g| {
                g.exact_div(f)
                    .expect("member of (f) must be divisible by f")
            })
            .collect();
        Ok(Ideal::new(self.field, self.nvars, gens))
    }

    /// (I : f^∞) by the adjoined-variable method: (I + (1 − f·t)) ∩ k[x].
    pub fn saturate_poly(&self, f: &Polynomial) -> Result<Ideal, Error> {
        if f.is_zero() {
            return Err(Error::Input("saturation by the zero polynomial".into()));
        }
        let n = self.nvars;
        let ext = n + 1;
        let up: Vec<Option<usize>> = (0..n).map(Some).collect();
        let t = Polynomial::var(self.field, ext, n);
        let fe = f.map_vars(&up, ext).unwrap();
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.map_vars(&up, ext).unwrap())
            .collect();
        gens.push(Polynomial::one(self.field, ext).sub(&fe.mul(&t)));
        let extended = Ideal::new(self.field, ext, gens);
        Ok(extended.eliminate_into(&[n], n, &restriction_map(ext, &[n])))
    }

    /// I ∩ k[kept variables], returned in the same ring.
    pub fn eliminate(&self, drop: &[usize]) -> Ideal {
        for &d in drop {
            assert!(d < self.nvars, "eliminated variable out of range");
        }
        let mut block: Vec<usize> = drop.to_vec();
        block.sort_unstable();
        block.dedup();
        if block.is_empty() {
            return self.clone();
        }
        let gb = self.groebner(&MonomialOrder::Elim(block.clone()));
        let kept: Vec<Polynomial> = gb
            .iter()
            .filter(|g| {
                g.terms()
                    .iter()
                    .all(|(m, _)| block.iter().all(|&d| m.exp(d) == 0))
            })
            .cloned()
            .collect();
        Ideal::new(self.field, self.nvars, kept)
    }

    /// Eliminate and restrict to the smaller ring in one step. `map` sends
    /// old variable indices to new ones (None for each dropped variable).
    pub fn eliminate_into(&self, drop: &[usize], new_nvars: usize, map: &[Option<usize>]) -> Ideal {
        let inside = self.eliminate(drop);
        let gens = inside
            .canonical_gens()
            .iter()
            .map(|g| {
                g.map_vars(map, new_nvars)
                    .expect("eliminated variable survived")
            })
            .collect();
        Ideal::new(self.field, new_nvars, gens)
    }

    /// f ∈ √I, decided by 1 ∈ I + (1 − f·t).
    pub fn radical_member(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        let n = self.nvars;
        let ext = n + 1;
        let up: Vec<Option<usize>> = (0..n).map(Some).collect();
        let t = Polynomial::var(self.field, ext, n);
        let fe = f.map_vars(&up, ext).unwrap();
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.map_vars(&up, ext).unwrap())
            .collect();
        gens.push(Polynomial::one(self.field, ext).sub(&fe.mul(&t)));
        Ideal::new(self.field, ext, gens).is_trivial()
    }

    /// f is a unit of k[x]/I, i.e. 1 ∈ I + (f).
    pub fn unit_in_quotient(&self, f: &Polynomial) -> bool {
        self.add_poly(f).is_trivial()
    }

    /// Render canonical generators against variable names.
    pub fn render(&self, vars: &[String]) -> Vec<String> {
        self.canonical_gens()
            .iter()
            .map(|g| g.render(vars))
            .collect()
    }
}

/// Variable map that deletes the listed indices and renumbers the rest.
pub fn restriction_map(nvars: usize, drop: &[usize]) -> Vec<Option<usize>> {
    let mut map = Vec::with_capacity(nvars);
    let mut next = 0;
    for i in 0..nvars {
        if drop.contains(&i) {
            map.push(None);
        } else {
            map.push(Some(next));
            next += 1;
        }
    }
    map
}

/// Full normal form of `f` against `basis` under `ord`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: &MonomialOrder) -> Polynomial {
    let field = f.field();
    let nvars = f.nvars();
    let mut rem_terms: Vec<(Monomial, crate::scalar::Scalar)> = Vec::new();
    let mut work = f.clone();
    'outer: while let Some((wm, wc)) = work.leading_term(ord) {
        let (wm, wc) = (wm.clone(), wc.clone());
        for g in basis {
            let (gm, gc) = g
                .leading_term(ord)
                .expect("zero polynomial in Groebner basis");
            if let Some(q) = gm.div_into(&wm) {
                let c = wc.div(gc);
                work = work.sub(&g.mul_term(&q, &c));
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        rem_terms.push((wm.clone(), wc.clone()));
        work = work.sub(&Polynomial::monomial(field, nvars, wm, wc));
    }
    Polynomial::from_terms(field, nvars, rem_terms)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(ord).unwrap();
    let (gm, gc) = g.leading_term(ord).unwrap();
    let l = fm.lcm(gm);
    let uf = fm.div_into(&l).unwrap();
    let ug = gm.div_into(&l).unwrap();
    f.mul_term(&uf, &fc.inv()).sub(&g.mul_term(&ug, &gc.inv()))
}

/// Buchberger with normal pair selection (smallest lcm first) plus the
/// coprimality and chain criteria, followed by autoreduction to the unique
/// reduced basis.
fn reduced_groebner(
    field: FieldSpec,
    nvars: usize,
    gens: &[Polynomial],
    ord: &MonomialOrder,
) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    // short-circuit: a constant generator makes the ideal trivial
    if basis.iter().any(|g| g.is_constant()) {
        return vec![Polynomial::one(field, nvars)];
    }
    if basis.is_empty() {
        return Vec::new();
    }

    let lt = |p: &Polynomial| -> Monomial { p.leading_term(ord).unwrap().0.clone() };

    let mut pending: Vec<(usize, usize)> = Vec::new();
    let mut processed: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.push((i, j));
        }
    }

    while !pending.is_empty() {
        // normal selection: smallest lcm in the active order, ties by index
        let mut best = 0;
        for k in 1..pending.len() {
            let (i, j) = pending[k];
            let (bi, bj) = pending[best];
            let lk = lt(&basis[i]).lcm(&lt(&basis[j]));
            let lb = lt(&basis[bi]).lcm(&lt(&basis[bj]));
            match ord.cmp(&lk, &lb) {
                Ordering::Less => best = k,
                Ordering::Equal => {
                    if (i, j) < (bi, bj) {
                        best = k;
                    }
                }
                Ordering::Greater => {}
            }
        }
        let (i, j) = pending.swap_remove(best);
        processed.push((i, j));

        let lti = lt(&basis[i]);
        let ltj = lt(&basis[j]);
        if lti.coprime(&ltj) {
            continue;
        }
        let lij = lti.lcm(&ltj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lt(&basis[k]).divides(&lij)
                && pair_done(&processed, &pending, i, k)
                && pair_done(&processed, &pending, j, k)
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], ord);
        let r = normal_form(&s, &basis, ord);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![Polynomial::one(field, nvars)];
        }
        let new_idx = basis.len();
        basis.push(r);
        for k in 0..new_idx {
            pending.push((k, new_idx));
        }
    }

    // minimalize: drop members whose leading term another one divides
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if lt(&basis[j]).divides(&lt(&basis[i])) && (lt(&basis[j]) != lt(&basis[i]) || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // full autoreduction, then monic under the active order + canonical sort
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let r = normal_form(&minimal[i], &others, ord);
        if !r.is_zero() {
            let lead = r.leading_term(ord).unwrap().1.clone();
            reduced.push(r.scale(&lead.inv()));
        }
    }
    reduced.sort_by(|a, b| {
        let la = a.leading_term(ord).unwrap().0;
        let lb = b.leading_term(ord).unwrap().0;
        ord.cmp(lb, la)
    });
    reduced
}

fn pair_done(processed: &[(usize, usize)], pending: &[(usize, usize)], a: usize, b: usize) -> bool {
    let key = (a.min(b), a.max(b));
    processed.contains(&key) && !pending.contains(&key)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_many, parse_polynomial, var_names};

    fn q() -> FieldSpec {
        FieldSpec::Q
    }

    fn ideal(gens: &[&str], vars: &[&str]) -> Ideal {
        let vars = var_names(vars);
        let gens = parse_many(gens, q(), &vars).unwrap();
        Ideal::new(q(), vars.len(), gens)
    }

    fn poly(src: &str, vars: &[&str]) -> Polynomial {
        parse_polynomial(src, q(), &var_names(vars)).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let xy = ideal(&["x*y"], &["x", "y"]);
        assert!(xy
            .reduce(&poly("x*y", &["x", "y"]), &MonomialOrder::GrevLex)
            .is_zero());
        assert_eq!(
            xy.reduce(&poly("x^2", &["x", "y"]), &MonomialOrder::GrevLex),
            poly("x^2", &["x", "y"])
        );
        let i = ideal(&["x*y - 1"], &["x", "y"]);
        let f = poly("y*(x*y - 1) + y", &["x", "y"]);
        assert_eq!(i.reduce(&f, &MonomialOrder::Lex), poly("y", &["x", "y"]));
    }

    #[test]
    fn colon_examples() {
        let vars = ["x", "y"];
        assert_eq!(
            ideal(&["x*y"], &vars)
                .colon_poly(&poly("x", &vars))
                .unwrap(),
            ideal(&["y"], &vars)
        );
        assert_eq!(
            ideal(&["x^2"], &vars)
                .colon_poly(&poly("x", &vars))
                .unwrap(),
            ideal(&["x"], &vars)
        );
        assert_eq!(
            ideal(&["x"], &vars).colon_poly(&poly("y", &vars)).unwrap(),
            ideal(&["x"], &vars)
        );
        assert!(ideal(&["x"], &vars)
            .colon_poly(&Polynomial::zero(q(), 2))
            .is_err());
    }

    #[test]
    fn saturation_examples() {
        let vars = ["x", "y"];
        assert_eq!(
            ideal(&["x*y"], &vars)
                .saturate_poly(&poly("x", &vars))
                .unwrap(),
            ideal(&["y"], &vars)
        );
        assert!(ideal(&["x^2", "x*y"], &vars)
            .saturate_poly(&poly("x", &vars))
            .unwrap()
            .is_trivial());
        assert!(ideal(&["x^2*y^3"], &vars)
            .saturate_poly(&poly("x*y", &vars))
            .unwrap()
            .is_trivial());
    }

    #[test]
    fn saturation_equals_colon_fixpoint() {
        // independent route: iterate single colons until stable
        let cases: Vec<(Vec<&str>, &str, Vec<&str>)> = vec![
            (vec!["x*y"], "x", vec!["x", "y"]),
            (vec!["x^2*y", "x*y^2"], "x", vec!["x", "y"]),
            (vec!["x^3"], "x", vec!["x"]),
            (vec!["x^2 - x"], "x", vec!["x"]),
        ];
        for (gens, f, vars) in cases {
            let i = ideal(&gens, &vars);
            let f = poly(f, &vars);
            let mut j = i.clone();
            loop {
                let next = j.colon_poly(&f).unwrap();
                if next == j {
                    break;
                }
                j = next;
            }
            assert_eq!(i.saturate_poly(&f).unwrap(), j, "{gens:?} : {f}^inf");
        }
    }

    #[test]
    fn elimination_examples() {
        let vars = ["x", "y"];
        let e = ideal(&["x*y - 1"], &vars).eliminate(&[1]);
        assert!(e.is_zero_ideal());

        let vars3 = ["x", "y", "t"];
        let e = ideal(&["x - t", "y - t^2"], &vars3).eliminate(&[2]);
        assert_eq!(e, ideal(&["y - x^2"], &vars3));

        // elimination of the inverse variable must match saturation
        let vars_u = ["x", "y", "u"];
        let e = ideal(&["x*y", "x*u - 1"], &vars_u).eliminate(&[2]);
        let sat = ideal(&["x*y"], &vars_u)
            .saturate_poly(&poly("x", &vars_u))
            .unwrap();
        assert_eq!(e, sat);
        assert_eq!(e, ideal(&["y"], &vars_u));
    }

    #[test]
    fn radical_membership() {
        let vars = ["x", "y"];
        assert!(ideal(&["x^2"], &vars).radical_member(&poly("x", &vars)));
        assert!(!ideal(&["x*y"], &vars).radical_member(&poly("x", &vars)));
        assert!(ideal(&["x^2", "y^2"], &vars).radical_member(&poly("x + y", &vars)));
    }

    #[test]
    fn units_in_quotients() {
        let vars = ["x", "y"];
        assert!(ideal(&["x*y - 1"], &vars).unit_in_quotient(&poly("x", &vars)));
        assert!(!ideal(&["x^2"], &vars).unit_in_quotient(&poly("x", &vars)));
        assert!(ideal(&["x^2"], &vars).unit_in_quotient(&poly("1 + x", &vars)));
    }

    #[test]
    fn intersection_examples() {
        let vars = ["x", "y"];
        assert_eq!(
            ideal(&["x"], &vars).intersect(&ideal(&["y"], &vars)),
            ideal(&["x*y"], &vars)
        );
        assert_eq!(
            ideal(&["x^2"], &vars).intersect(&ideal(&["y"], &vars)),
            ideal(&["x^2*y"], &vars)
        );
        let i = ideal(&["x^2 - y"], &vars);
        assert_eq!(i.intersect(&Ideal::unit(q(), 2)), i);
    }

    #[test]
    fn canonical_basis_is_permutation_invariant() {
        let vars = var_names(&["x", "y", "z"]);
        let gens = parse_many(&["x^2 + y*z", "x*z - y", "y^3 - z^2 + x"], q(), &vars).unwrap();
        let a = Ideal::new(q(), 3, gens.clone());
        let mut rev = gens;
        rev.reverse();
        let b = Ideal::new(q(), 3, rev);
        assert_eq!(
            *a.groebner(&MonomialOrder::GrevLex),
            *b.groebner(&MonomialOrder::GrevLex)
        );
        assert_eq!(
            *a.groebner(&MonomialOrder::Lex),
            *b.groebner(&MonomialOrder::Lex)
        );
    }

    #[test]
    fn membership_and_ideal_equality_agree() {
        let vars = ["x", "y"];
        let i = ideal(&["x*y - 1", "x^2"], &vars);
        assert!(i.is_trivial()); // x^2*y^2 = 1 and x^2 = 0 force 1 = 0
        let j = ideal(&["x + y", "y^2"], &vars);
        let f = poly("x^2", &vars);
        assert!(j.contains(&f));
        assert_eq!(j.add_poly(&f), j);
    }

    #[test]
    fn groebner_over_prime_field() {
        let vars = var_names(&["x", "y"]);
        let f = FieldSpec::Fp(5);
        let gens = parse_many(&["x^2 + 4*y", "x*y + 3"], f, &vars).unwrap();
        let i = Ideal::new(f, 2, gens);
        let gb = i.groebner(&MonomialOrder::Lex);
        // basis members belong to the ideal's grevlex basis too
        for g in gb.iter() {
            assert!(i.contains(g));
        }
    }
}
