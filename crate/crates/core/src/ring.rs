//! Finitely presented commutative algebras and multiplicative-set
//! descriptions, plus the status tags carried by certified results.

use std::fmt;

use crate::ideal::Ideal;
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::scalar::FieldSpec;
use crate::Error;

/// How much trust a computed value carries. `Exact` is only produced
/// together with a passed certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Exact,
    LowerBound,
    Unverified,
}

impl Status {
    pub fn merge(self, other: Status) -> Status {
        self.max(other)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Exact => "exact",
            Status::LowerBound => "lower-bound",
            Status::Unverified => "unverified",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatusTagged<T> {
    pub value: T,
    pub status: Status,
    /// Human-readable note on why the status holds (the passed certificate
    /// for `Exact`, the gap otherwise).
    pub certificate: String,
}

impl<T> StatusTagged<T> {
    pub fn exact(value: T, certificate: impl Into<String>) -> Self {
        StatusTagged {
            value,
            status: Status::Exact,
            certificate: certificate.into(),
        }
    }

    pub fn tagged(value: T, status: Status, certificate: impl Into<String>) -> Self {
        StatusTagged {
            value,
            status,
            certificate: certificate.into(),
        }
    }
}

/// A commutative algebra k[x1..xn]/I over an exact field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPresentation {
    field: FieldSpec,
    vars: Vec<String>,
    ideal: Ideal,
}

impl RingPresentation {
    pub fn new(field: FieldSpec, vars: Vec<String>, ideal: Ideal) -> Result<Self, Error> {
        field.validate()?;
        let mut seen = std::collections::HashSet::new();
        for v in &vars {
            if v.is_empty() || !v.chars().next().unwrap().is_alphabetic() && !v.starts_with('_') {
                return Err(Error::Input(format!("invalid variable name '{v}'")));
            }
            if !seen.insert(v.clone()) {
                return Err(Error::Input(format!("duplicate variable '{v}'")));
            }
        }
        if ideal.nvars() != vars.len() || ideal.field() != field {
            return Err(Error::Input("ideal signature mismatch".into()));
        }
        Ok(RingPresentation { field, vars, ideal })
    }

    /// Parse a presentation from generator strings.
    pub fn parse(field: FieldSpec, vars: &[&str], gens: &[&str]) -> Result<Self, Error> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let gens = gens
            .iter()
            .map(|s| parse_polynomial(s, field, &vars))
            .collect::<Result<Vec<_>, _>>()?;
        let n = vars.len();
        RingPresentation::new(field, vars, Ideal::new(field, n, gens))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn is_zero_ring(&self) -> bool {
        self.ideal.is_trivial()
    }

    pub fn poly(&self, src: &str) -> Result<Polynomial, Error> {
        parse_polynomial(src, self.field, &self.vars)
    }

    pub fn render_ideal(&self, ideal: &Ideal) -> Vec<String> {
        ideal.render(&self.vars)
    }
}

/// A multiplicative set: either finitely many generators (the monoid they
/// generate is implied) or the complement of a prime ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultSetSpec {
    Gens(Vec<Polynomial>),
    PrimeComplement(Ideal),
}

impl MultSetSpec {
    pub fn gens(gens: Vec<Polynomial>) -> Result<Self, Error> {
        if gens.is_empty() {
            return Err(Error::Input("empty generator list".into()));
        }
        Ok(MultSetSpec::Gens(gens))
    }

    pub fn parse_gens(ring: &RingPresentation, srcs: &[&str]) -> Result<Self, Error> {
        let gens = srcs
            .iter()
            .map(|s| ring.poly(s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::gens(gens)
    }
}
