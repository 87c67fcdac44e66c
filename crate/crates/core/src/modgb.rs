//! Gröbner bases for submodules of free modules k[x]^r.
//!
//! Vectors carry one polynomial per component. Orders are
//! position-over-term on top of the ring orders, with two extensions: a
//! variable-elimination variant (the eliminated block dominates every
//! component) and a component-split variant whose first block of
//! components dominates the rest (used to read off syzygies from a basis
//! of the graph module).

use std::cmp::Ordering;

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VecPoly {
    pub entries: Vec<Polynomial>,
}

impl VecPoly {
    pub fn zero(field: FieldSpec, nvars: usize, rank: usize) -> Self {
        VecPoly {
            entries: (0..rank).map(|_| Polynomial::zero(field, nvars)).collect(),
        }
    }

    pub fn basis_vector(field: FieldSpec, nvars: usize, rank: usize, comp: usize) -> Self {
        let mut v = Self::zero(field, nvars, rank);
        v.entries[comp] = Polynomial::one(field, nvars);
        v
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &VecPoly) -> VecPoly {
        VecPoly {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &VecPoly) -> VecPoly {
        VecPoly {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> VecPoly {
        VecPoly {
            entries: self.entries.iter().map(|p| p.mul_term(m, c)).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> VecPoly {
        VecPoly {
            entries: self.entries.iter().map(|p| p.mul(f)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> VecPoly {
        VecPoly {
            entries: self.entries.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn exact_div(&self, f: &Polynomial) -> Option<VecPoly> {
        let entries = self
            .entries
            .iter()
            .map(|p| {
                if p.is_zero() {
                    Some(p.clone())
                } else {
                    p.exact_div(f)
                }
            })
            .collect::<Option<Vec<_>>>()?;
        Some(VecPoly { entries })
    }

    pub fn map_vars(&self, map: &[Option<usize>], new_nvars: usize) -> Option<VecPoly> {
        let entries = self
            .entries
            .iter()
            .map(|p| p.map_vars(map, new_nvars))
            .collect::<Option<Vec<_>>>()?;
        Some(VecPoly { entries })
    }

    /// Leading (component, monomial, coefficient) under the module order.
    pub fn leading(&self, ord: &ModOrder) -> Option<(usize, Monomial, Scalar)> {
        let mut best: Option<(usize, Monomial, Scalar)> = None;
        for (comp, p) in self.entries.iter().enumerate() {
            for (m, c) in p.terms() {
                match &best {
                    None => best = Some((comp, m.clone(), c.clone())),
                    Some((bc, bm, _)) => {
                        if ord.cmp_terms(comp, m, *bc, bm) == Ordering::Greater {
                            best = Some((comp, m.clone(), c.clone()));
                        }
                    }
                }
            }
        }
        best
    }
}

/// Module term orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModOrder {
    /// Position over term: earlier components dominate, ring order breaks
    /// ties inside a component.
    Pot(MonomialOrder),
    /// The listed ring variables dominate everything (graded within the
    /// block), then position over term on the rest.
    ElimPot(Vec<usize>),
    /// Components below the split dominate all components at or above it;
    /// position over term within each zone.
    SplitPot(usize),
}

impl ModOrder {
    pub fn cmp_terms(&self, ca: usize, ma: &Monomial, cb: usize, mb: &Monomial) -> Ordering {
        match self {
            ModOrder::Pot(ord) => match ca.cmp(&cb) {
                Ordering::Less => Ordering::Greater,
                Ordering::Greater => Ordering::Less,
                Ordering::Equal => ord.cmp(ma, mb),
            },
            ModOrder::ElimPot(block) => {
                let block_ord = MonomialOrder::Elim(block.clone());
                // the Elim ring order already ranks the block first; compare
                // block degrees, then position, then the full Elim order
                let da: u64 = block.iter().map(|&i| ma.exp(i) as u64).sum();
                let db: u64 = block.iter().map(|&i| mb.exp(i) as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => match ca.cmp(&cb) {
                        Ordering::Less => Ordering::Greater,
                        Ordering::Greater => Ordering::Less,
                        Ordering::Equal => block_ord.cmp(ma, mb),
                    },
                    other => other,
                }
            }
            ModOrder::SplitPot(split) => {
                let za = usize::from(ca >= *split);
                let zb = usize::from(cb >= *split);
                match za.cmp(&zb) {
                    Ordering::Less => Ordering::Greater,
                    Ordering::Greater => Ordering::Less,
                    Ordering::Equal => match ca.cmp(&cb) {
                        Ordering::Less => Ordering::Greater,
                        Ordering::Greater => Ordering::Less,
                        Ordering::Equal => MonomialOrder::GrevLex.cmp(ma, mb),
                    },
                }
            }
        }
    }
}

/// Full normal form of a vector against a basis.
pub fn vec_normal_form(v: &VecPoly, basis: &[VecPoly], ord: &ModOrder) -> VecPoly {
    if basis.is_empty() {
        return v.clone();
    }
    let field = v.entries[0].field();
    let nvars = v.entries[0].nvars();
    let rank = v.rank();
    let mut rem = VecPoly::zero(field, nvars, rank);
    let mut work = v.clone();
    'outer: while let Some((wc, wm, wcoef)) = work.leading(ord) {
        for g in basis {
            let Some((gc, gm, gcoef)) = g.leading(ord) else {
                continue;
            };
            if gc == wc {
                if let Some(q) = gm.div_into(&wm) {
                    let c = wcoef.div(&gcoef);
                    work = work.sub(&g.mul_term(&q, &c));
                    continue 'outer;
                }
            }
        }
        let mut t = VecPoly::zero(field, nvars, rank);
        t.entries[wc] = Polynomial::monomial(field, nvars, wm.clone(), wcoef.clone());
        rem = rem.add(&t);
        work = work.sub(&t);
    }
    rem
}

/// Reduced Gröbner basis of the span of `gens` under `ord`: monic,
/// autoreduced, deterministically sorted.
pub fn module_groebner(gens: &[VecPoly], ord: &ModOrder) -> Vec<VecPoly> {
    let mut basis: Vec<VecPoly> = gens.iter().filter(|v| !v.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Vec::new();
    }
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.push((i, j));
        }
    }
    while let Some((i, j)) = pending.pop() {
        let (ci, mi, coefi) = basis[i].leading(ord).unwrap();
        let (cj, mj, coefj) = basis[j].leading(ord).unwrap();
        if ci != cj {
            continue;
        }
        let l = mi.lcm(&mj);
        let ui = mi.div_into(&l).unwrap();
        let uj = mj.div_into(&l).unwrap();
        let s = basis[i]
            .mul_term(&ui, &coefi.inv())
            .sub(&basis[j].mul_term(&uj, &coefj.inv()));
        let r = vec_normal_form(&s, &basis, ord);
        if r.is_zero() {
            continue;
        }
        let new_idx = basis.len();
        basis.push(r);
        for k in 0..new_idx {
            pending.push((k, new_idx));
        }
    }

    // minimalize by leading-term divisibility within the same component
    let leads: Vec<(usize, Monomial)> = basis
        .iter()
        .map(|g| {
            let (c, m, _) = g.leading(ord).unwrap();
            (c, m)
        })
        .collect();
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if leads[j].0 == leads[i].0
                && leads[j].1.divides(&leads[i].1)
                && (leads[j].1 != leads[i].1 || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<VecPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    let mut reduced: Vec<VecPoly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<VecPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let r = vec_normal_form(&minimal[i], &others, ord);
        if !r.is_zero() {
            let (_, _, c) = r.leading(ord).unwrap();
            reduced.push(r.scale(&c.inv()));
        }
    }
    reduced.sort_by(|a, b| {
        let (ca, ma, _) = a.leading(ord).unwrap();
        let (cb, mb, _) = b.leading(ord).unwrap();
        ord.cmp_terms(cb, &mb, ca, &ma)
    });
    reduced
}

/// Membership in the span.
pub fn in_span(v: &VecPoly, gens: &[VecPoly]) -> bool {
    let ord = ModOrder::Pot(MonomialOrder::GrevLex);
    let gb = module_groebner(gens, &ord);
    vec_normal_form(v, &gb, &ord).is_zero()
}

/// Canonical form of a span for equality tests.
pub fn canonical_span(gens: &[VecPoly]) -> Vec<VecPoly> {
    module_groebner(gens, &ModOrder::Pot(MonomialOrder::GrevLex))
}

pub fn spans_equal(a: &[VecPoly], b: &[VecPoly]) -> bool {
    canonical_span(a) == canonical_span(b)
}

/// U ∩ V by the tag-variable method over k[x, t]^r.
pub fn intersect_spans(
    field: FieldSpec,
    nvars: usize,
    rank: usize,
    u: &[VecPoly],
    v: &[VecPoly],
) -> Vec<VecPoly> {
    debug_assert!(u.iter().chain(v).all(|w| w.rank() == rank));
    let ext = nvars + 1;
    let up: Vec<Option<usize>> = (0..nvars).map(Some).collect();
    let t = Polynomial::var(field, ext, nvars);
    let one_minus_t = Polynomial::one(field, ext).sub(&t);
    let mut gens: Vec<VecPoly> = Vec::new();
    for w in u {
        gens.push(w.map_vars(&up, ext).unwrap().mul_poly(&t));
    }
    for w in v {
        gens.push(w.map_vars(&up, ext).unwrap().mul_poly(&one_minus_t));
    }
    let ord = ModOrder::ElimPot(vec![nvars]);
    let gb = module_groebner(&gens, &ord);
    let down = crate::ideal::restriction_map(ext, &[nvars]);
    gb.into_iter()
        .filter(|w| {
            w.entries
                .iter()
                .all(|p| p.terms().iter().all(|(m, _)| m.exp(nvars) == 0))
        })
        .map(|w| w.map_vars(&down, nvars).unwrap())
        .collect()
}

/// (U : f) = {v | f·v ∈ U}, through U ∩ f·k[x]^r and exact division.
pub fn quotient_span(
    field: FieldSpec,
    nvars: usize,
    rank: usize,
    u: &[VecPoly],
    f: &Polynomial,
) -> Vec<VecPoly> {
    assert!(!f.is_zero(), "module quotient by zero");
    let f_basis: Vec<VecPoly> = (0..rank)
        .map(|i| {
            let mut v = VecPoly::zero(field, nvars, rank);
            v.entries[i] = f.clone();
            v
        })
        .collect();
    let meet = intersect_spans(field, nvars, rank, u, &f_basis);
    meet.iter()
        .map(|w| w.exact_div(f).expect("member of f·R^r divides by f"))
        .collect()
}

/// (U : f^∞): the stable limit of repeated quotients.
pub fn saturate_span(
    field: FieldSpec,
    nvars: usize,
    rank: usize,
    u: &[VecPoly],
    f: &Polynomial,
) -> Vec<VecPoly> {
    let mut cur = canonical_span(u);
    loop {
        let next = canonical_span(&quotient_span(field, nvars, rank, &cur, f));
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Generators of the syzygy module {c ∈ k[x]^k : Σ c_i w_i ∈ span(zeros)},
/// read off a basis of the graph module in k[x]^{r+k}.
pub fn syzygies(
    field: FieldSpec,
    nvars: usize,
    rank: usize,
    vectors: &[VecPoly],
    zeros: &[VecPoly],
) -> Vec<VecPoly> {
    let k = vectors.len();
    let big_rank = rank + k;
    let mut gens: Vec<VecPoly> = Vec::new();
    for (i, w) in vectors.iter().enumerate() {
        let mut g = VecPoly::zero(field, nvars, big_rank);
        g.entries[..rank].clone_from_slice(&w.entries);
        g.entries[rank + i] = Polynomial::one(field, nvars);
        gens.push(g);
    }
    for z in zeros {
        let mut g = VecPoly::zero(field, nvars, big_rank);
        g.entries[..rank].clone_from_slice(&z.entries);
        gens.push(g);
    }
    let gb = module_groebner(&gens, &ModOrder::SplitPot(rank));
    gb.into_iter()
        .filter(|g| g.entries[..rank].iter().all(|p| p.is_zero()))
        .map(|g| VecPoly {
            entries: g.entries[rank..].to_vec(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polynomial, var_names};

    fn q() -> FieldSpec {
        FieldSpec::Q
    }

    fn p(src: &str, vars: &[&str]) -> Polynomial {
        parse_polynomial(src, q(), &var_names(vars)).unwrap()
    }

    fn v(entries: &[&str], vars: &[&str]) -> VecPoly {
        VecPoly {
            entries: entries.iter().map(|s| p(s, vars)).collect(),
        }
    }

    #[test]
    fn membership_examples() {
        let vars = ["x", "y"];
        // x·e1 ∈ span{e1}
        assert!(in_span(&v(&["x", "0"], &vars), &[v(&["1", "0"], &vars)]));
        // e1 ∉ span{x·e1}
        assert!(!in_span(&v(&["1", "0"], &vars), &[v(&["x", "0"], &vars)]));
        // y·e1 ∉ span{x·e1}
        assert!(!in_span(&v(&["y", "0"], &vars), &[v(&["x", "0"], &vars)]));
    }

    #[test]
    fn quotient_examples() {
        let vars = ["x"];
        let x = p("x", &vars);
        // ({x·e1} : x) = {e1}
        let qspan = quotient_span(q(), 1, 1, &[v(&["x"], &vars)], &x);
        assert!(spans_equal(&qspan, &[v(&["1"], &vars)]));
        // ({x^2·e1} : x) = {x·e1}
        let qspan = quotient_span(q(), 1, 1, &[v(&["x^2"], &vars)], &x);
        assert!(spans_equal(&qspan, &[v(&["x"], &vars)]));
        // ((0) : x) = (0)
        let qspan = quotient_span(q(), 1, 1, &[], &x);
        assert!(qspan.is_empty());
    }

    #[test]
    fn intersection_in_rank_two() {
        let vars = ["x", "y"];
        // span{x·e1, y·e2} ∩ span{e1} = span{x·e1}
        let meet = intersect_spans(
            q(),
            2,
            2,
            &[v(&["x", "0"], &vars), v(&["0", "y"], &vars)],
            &[v(&["1", "0"], &vars)],
        );
        assert!(spans_equal(&meet, &[v(&["x", "0"], &vars)]));
    }

    #[test]
    fn saturation_stabilizes() {
        let vars = ["x"];
        let x = p("x", &vars);
        let sat = saturate_span(q(), 1, 1, &[v(&["x^3"], &vars)], &x);
        assert!(spans_equal(&sat, &[v(&["1"], &vars)]));
    }

    #[test]
    fn syzygies_of_dependent_vectors() {
        let vars = ["x", "y"];
        // w1 = x·e1, w2 = y·e1: the Koszul relation y·w1 - x·w2 = 0
        let syz = syzygies(q(), 2, 1, &[v(&["x"], &vars), v(&["y"], &vars)], &[]);
        assert_eq!(syz.len(), 1);
        let expected = v(&["y", "-x"], &vars);
        let neg = VecPoly {
            entries: expected.entries.iter().map(|e| e.neg()).collect(),
        };
        assert!(spans_equal(&syz, &[expected.clone()]) || spans_equal(&syz, &[neg]));
    }

    #[test]
    fn canonical_span_is_input_order_invariant() {
        let vars = ["x", "y"];
        let a = [v(&["x", "y"], &vars), v(&["y", "x"], &vars)];
        let b = [v(&["y", "x"], &vars), v(&["x", "y"], &vars)];
        assert_eq!(canonical_span(&a), canonical_span(&b));
    }
}
