//! Multivariate polynomials with exact coefficients.
//!
//! Terms are stored with no zero coefficients, strictly descending in
//! degree-reverse-lexicographic order. That fixed storage order makes
//! structural equality canonical; computations under other monomial orders
//! locate leading terms by scanning.

use std::fmt;

use crate::monomial::{Monomial, MonomialOrder};
use crate::scalar::{is_negative, FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    field: FieldSpec,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(field: FieldSpec, nvars: usize) -> Self {
        Polynomial {
            nvars,
            field,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: FieldSpec, nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(field, nvars);
        if !c.is_zero() {
            p.terms.push((Monomial::one(nvars), c));
        }
        p
    }

    pub fn one(field: FieldSpec, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    pub fn var(field: FieldSpec, nvars: usize, idx: usize) -> Self {
        Self::from_terms(
            field,
            nvars,
            vec![(Monomial::var(nvars, idx, 1), field.one())],
        )
    }

    pub fn monomial(field: FieldSpec, nvars: usize, m: Monomial, c: Scalar) -> Self {
        Self::from_terms(field, nvars, vec![(m, c)])
    }

    /// Build from arbitrary terms: combines duplicates, drops zeros, sorts.
    pub fn from_terms(field: FieldSpec, nvars: usize, terms: Vec<(Monomial, Scalar)>) -> Self {
        let mut p = Polynomial {
            nvars,
            field,
            terms,
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        let ord = MonomialOrder::GrevLex;
        self.terms.sort_by(|(ma, _), (mb, _)| ord.cmp(mb, ma));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.drain(..) {
            debug_assert_eq!(m.nvars(), self.nvars);
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = last.1.add(&c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        self.terms = out;
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Single-term test; constants count as monomials.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() <= 1
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exp(var))
            .max()
            .unwrap_or(0)
    }

    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exp(i) > 0))
            .collect()
    }

    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        if *ord == MonomialOrder::GrevLex {
            return self.terms.first().map(|(m, c)| (m, c));
        }
        self.terms
            .iter()
            .max_by(|(ma, _), (mb, _)| ord.cmp(ma, mb))
            .map(|(m, c)| (m, c))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_sig(other);
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::from_terms(self.field, self.nvars, terms)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.field, self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc.mul(c)))
                .collect(),
        }
        // products of distinct sorted monomials by a fixed monomial stay
        // sorted and distinct, but GF(p) coefficients may vanish
        .resorted()
    }

    fn resorted(mut self) -> Polynomial {
        self.normalize();
        self
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(&Monomial::one(self.nvars), c)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_sig(other);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), ca.mul(cb)));
            }
        }
        Self::from_terms(self.field, self.nvars, terms)
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut acc = Self::one(self.field, self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Leading coefficient scaled to one (grevlex leading term).
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Exact multivariate division: returns `self / divisor` when the
    /// division leaves no remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        self.check_sig(divisor);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let ord = MonomialOrder::GrevLex;
        let (dm, dc) = (&divisor.terms[0].0, &divisor.terms[0].1);
        let mut rem = self.clone();
        let mut quot_terms = Vec::new();
        while let Some((rm, rc)) = rem.leading_term(&ord) {
            let qm = dm.div_into(rm)?;
            let qc = rc.div(dc);
            quot_terms.push((qm.clone(), qc.clone()));
            rem = rem.sub(&divisor.mul_term(&qm, &qc));
        }
        Some(Self::from_terms(self.field, self.nvars, quot_terms))
    }

    /// Exponentwise-minimum monomial over all terms (the monomial content).
    pub fn monomial_content(&self) -> Monomial {
        let mut exps = vec![u32::MAX; self.nvars];
        for (m, _) in &self.terms {
            for i in 0..self.nvars {
                exps[i] = exps[i].min(m.exp(i));
            }
        }
        if self.terms.is_empty() {
            return Monomial::one(self.nvars);
        }
        Monomial::from_exps(exps)
    }

    /// Move the polynomial into a ring whose variable list extends or
    /// reorders this one. `map[i]` gives the new index of old variable i,
    /// `None` when the variable is dropped (must not occur in any term).
    pub fn map_vars(&self, map: &[Option<usize>], new_nvars: usize) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.map_vars(map, new_nvars)?, c.clone()));
        }
        Some(Self::from_terms(self.field, new_nvars, terms))
    }

    /// Substitute polynomials for the variables.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let (field, nvars) = match images.first() {
            Some(p) => (p.field, p.nvars),
            None => (self.field, 0),
        };
        let mut acc = Polynomial::zero(field, nvars);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(field, nvars, c.clone());
            for (i, img) in images.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    t = t.mul(&img.pow(e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    fn check_sig(&self, other: &Polynomial) {
        assert_eq!(self.nvars, other.nvars, "variable signature mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
    }

    /// Rendering against a variable name list; inverse of the parser.
    pub fn render(&self, vars: &[String]) -> String {
        self.render_ordered(vars, &MonomialOrder::GrevLex)
    }

    /// Rendering with terms sorted descending under the given order.
    pub fn render_ordered(&self, vars: &[String], ord: &MonomialOrder) -> String {
        assert_eq!(vars.len(), self.nvars);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut terms = self.terms.clone();
        if *ord != MonomialOrder::GrevLex {
            terms.sort_by(|(ma, _), (mb, _)| ord.cmp(mb, ma));
        }
        let mut out = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = is_negative(c);
            let mag = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_one() {
                factors.push(mag.to_string());
            }
            for v in 0..self.nvars {
                match m.exp(v) {
                    0 => {}
                    1 => factors.push(vars[v].clone()),
                    e => factors.push(format!("{}^{}", vars[v], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.render(&vars))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Q
    }

    #[test]
    fn arithmetic_combines_terms() {
        let x = Polynomial::var(q(), 2, 0);
        let y = Polynomial::var(q(), 2, 1);
        let p = x.add(&y).mul(&x.sub(&y));
        let expect = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(p, expect);
    }

    #[test]
    fn char_p_kills_multiples() {
        let f = FieldSpec::Fp(2);
        let x = Polynomial::var(f, 1, 0);
        assert!(x.add(&x).is_zero());
        let sq = x.add(&Polynomial::one(f, 1)).pow(2);
        // (x+1)^2 = x^2 + 1 over GF(2)
        assert_eq!(sq.terms().len(), 2);
    }

    #[test]
    fn exact_division() {
        let x = Polynomial::var(q(), 2, 0);
        let y = Polynomial::var(q(), 2, 1);
        let prod = x.add(&y).mul(&x.mul(&y));
        assert_eq!(prod.exact_div(&x.add(&y)), Some(x.mul(&y)));
        assert_eq!(x.exact_div(&y), None);
    }

    #[test]
    fn substitution() {
        let x = Polynomial::var(q(), 1, 0);
        let p = x.pow(2); // x^2
        let img = Polynomial::var(q(), 2, 1); // x -> y in a 2-var ring
        let q2 = p.substitute(&[img.clone()]);
        assert_eq!(q2, img.pow(2));
    }
}
