//! Finite direct products of fields, matrix rings and formal division
//! rings: supports, saturated multiplicative sets, the filter
//! correspondence, componentwise localization and the classification of
//! maximal localizable sets.
//!
//! Filters live on the index set of the product and are represented as
//! sorted lists of index-subset bitmasks. Component values are enumerable
//! for fields and matrix rings; formal division-ring components carry only
//! a support bit.

use crate::finite::{clause, ClauseResult};
use crate::scalar::is_prime_u32;
use crate::Error;

pub type IndexSet = u32;

const INDEX_CAP: usize = 16;

/// Small Galois field GF(q), q = p^d, with table-based arithmetic for d > 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallField {
    pub q: u32,
    p: u32,
    d: u32,
    mul: Vec<u32>,
    add: Vec<u32>,
}

impl SmallField {
    pub fn new(q: u32) -> Result<Self, Error> {
        if q < 2 || q > 64 {
            return Err(Error::Input(format!("field size {q} out of range")));
        }
        let (p, d) =
            prime_power(q).ok_or_else(|| Error::Input(format!("{q} is not a prime power")))?;
        if d == 1 {
            let mut mul = vec![0u32; (q * q) as usize];
            let mut add = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    mul[(a * q + b) as usize] = a * b % q;
                    add[(a * q + b) as usize] = (a + b) % q;
                }
            }
            return Ok(SmallField { q, p, d, mul, add });
        }
        // find the first irreducible monic polynomial of degree d over GF(p)
        let f = first_irreducible(p, d);
        let table = crate::finite::FiniteRing::gf_poly(p, &f)?;
        let mut mul = vec![0u32; (q * q) as usize];
        let mut add = vec![0u32; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                mul[(a * q + b) as usize] = table.mul(a as u16, b as u16) as u32;
                add[(a * q + b) as usize] = table.add(a as u16, b as u16) as u32;
            }
        }
        Ok(SmallField { q, p, d, mul, add })
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        (0..self.q).find(|&b| self.mul(a, b) == 1)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.d
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    for p in 2..=q {
        if !is_prime_u32(p) {
            continue;
        }
        let mut d = 0u32;
        let mut m = q;
        while m % p == 0 {
            m /= p;
            d += 1;
        }
        if m == 1 && d >= 1 {
            return Some((p, d));
        }
        if q % p == 0 {
            return None;
        }
    }
    None
}

/// Monic irreducible of degree d over GF(p), found by counting order of
/// coefficients and trial division by all lower-degree monic polynomials.
fn first_irreducible(p: u32, d: u32) -> Vec<u64> {
    let pu = p as u64;
    let count = pu.pow(d);
    for idx in 0..count {
        let mut coeffs: Vec<u64> = Vec::with_capacity(d as usize + 1);
        let mut k = idx;
        for _ in 0..d {
            coeffs.push(k % pu);
            k /= pu;
        }
        coeffs.push(1);
        if fp_dense_irreducible(&coeffs, pu) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

fn fp_dense_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 1 {
        return true;
    }
    for deg in 1..=d / 2 {
        let count = p.pow(deg as u32);
        for idx in 0..count {
            let mut g: Vec<u64> = Vec::with_capacity(deg + 1);
            let mut k = idx;
            for _ in 0..deg {
                g.push(k % p);
                k /= p;
            }
            g.push(1);
            if fp_dense_divides(f, &g, p) {
                return false;
            }
        }
    }
    true
}

fn fp_dense_divides(num: &[u64], den: &[u64], p: u64) -> bool {
    let mut rem = num.to_vec();
    while rem.len() >= den.len() && rem.iter().any(|&c| c != 0) {
        while rem.len() > 1 && *rem.last().unwrap() == 0 {
            rem.pop();
        }
        if rem.len() < den.len() {
            break;
        }
        let shift = rem.len() - den.len();
        let c = *rem.last().unwrap(); // den is monic
        for (k, &dc) in den.iter().enumerate() {
            rem[shift + k] = (rem[shift + k] + p - c * dc % p) % p;
        }
    }
    rem.iter().all(|&c| c == 0)
}

/// One factor of the product: a finite field, a full matrix ring over a
/// finite field, or a formal division ring carried only at the support
/// level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentSpec {
    Field(u32),
    Matrix { n: u32, q: u32 },
    Formal(String),
}

impl ComponentSpec {
    /// Number of elements, None for formal components.
    pub fn size(&self) -> Option<u64> {
        match self {
            ComponentSpec::Field(q) => Some(*q as u64),
            ComponentSpec::Matrix { n, q } => Some((*q as u64).pow(n * n)),
            ComponentSpec::Formal(_) => None,
        }
    }

    /// Number of units, None for formal components.
    pub fn unit_count(&self) -> Option<u64> {
        match self {
            ComponentSpec::Field(q) => Some(*q as u64 - 1),
            ComponentSpec::Matrix { n, q } => {
                // order of the general linear group over GF(q)
                let qn = *q as u64;
                let mut acc = 1u64;
                for k in 0..*n {
                    acc *= qn.pow(*n) - qn.pow(k);
                }
                Some(acc)
            }
            ComponentSpec::Formal(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompValue {
    Field(u32),
    /// Row-major n×n matrix entries over GF(q).
    Matrix(Vec<u32>),
    /// Support bit; in a division ring nonzero coincides with unit.
    Formal {
        nonzero: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductElement {
    pub entries: Vec<CompValue>,
}

/// A finite direct product of components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductRing {
    comps: Vec<ComponentSpec>,
    fields: Vec<Option<SmallField>>,
}

impl ProductRing {
    pub fn new(comps: Vec<ComponentSpec>) -> Result<Self, Error> {
        if comps.is_empty() {
            return Err(Error::Input(
                "a product needs at least one component".into(),
            ));
        }
        if comps.len() > INDEX_CAP {
            return Err(Error::Input(format!(
                "index set capped at {INDEX_CAP} components"
            )));
        }
        let mut fields = Vec::with_capacity(comps.len());
        for c in &comps {
            fields.push(match c {
                ComponentSpec::Field(q) => Some(SmallField::new(*q)?),
                ComponentSpec::Matrix { n, q } => {
                    if *n == 0 {
                        return Err(Error::Input("matrix dimension must be positive".into()));
                    }
                    Some(SmallField::new(*q)?)
                }
                ComponentSpec::Formal(_) => None,
            });
        }
        Ok(ProductRing { comps, fields })
    }

    pub fn components(&self) -> &[ComponentSpec] {
        &self.comps
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn full_index_set(&self) -> IndexSet {
        (1u32 << self.comps.len()) - 1
    }

    pub fn is_enumerable(&self) -> bool {
        self.comps.iter().all(|c| c.size().is_some())
    }

    pub fn order(&self) -> Option<u64> {
        self.comps.iter().map(|c| c.size()).product()
    }

    fn check_element(&self, e: &ProductElement) -> Result<(), Error> {
        if e.entries.len() != self.comps.len() {
            return Err(Error::Input("component count mismatch".into()));
        }
        for (i, (spec, val)) in self.comps.iter().zip(&e.entries).enumerate() {
            match (spec, val) {
                (ComponentSpec::Field(q), CompValue::Field(v)) if v < q => {}
                (ComponentSpec::Matrix { n, q }, CompValue::Matrix(m))
                    if m.len() == (*n as usize) * (*n as usize) && m.iter().all(|v| v < q) => {}
                (ComponentSpec::Formal(_), CompValue::Formal { .. }) => {}
                _ => {
                    return Err(Error::Input(format!(
                        "component {i} does not match its specification"
                    )))
                }
            }
        }
        Ok(())
    }

    pub fn one(&self) -> ProductElement {
        ProductElement {
            entries: self
                .comps
                .iter()
                .map(|c| match c {
                    ComponentSpec::Field(_) => CompValue::Field(1),
                    ComponentSpec::Matrix { n, .. } => {
                        let n = *n as usize;
                        let mut m = vec![0u32; n * n];
                        for i in 0..n {
                            m[i * n + i] = 1;
                        }
                        CompValue::Matrix(m)
                    }
                    ComponentSpec::Formal(_) => CompValue::Formal { nonzero: true },
                })
                .collect(),
        }
    }

    pub fn zero_at(&self, i: usize) -> CompValue {
        match &self.comps[i] {
            ComponentSpec::Field(_) => CompValue::Field(0),
            ComponentSpec::Matrix { n, .. } => {
                CompValue::Matrix(vec![0u32; (*n as usize) * (*n as usize)])
            }
            ComponentSpec::Formal(_) => CompValue::Formal { nonzero: false },
        }
    }

    fn entry_is_zero(&self, _i: usize, v: &CompValue) -> bool {
        match v {
            CompValue::Field(x) => *x == 0,
            CompValue::Matrix(m) => m.iter().all(|&x| x == 0),
            CompValue::Formal { nonzero } => !nonzero,
        }
    }

    pub fn entry_is_unit(&self, i: usize, v: &CompValue) -> bool {
        match v {
            CompValue::Field(x) => *x != 0,
            CompValue::Matrix(m) => {
                let ComponentSpec::Matrix { n, .. } = &self.comps[i] else {
                    unreachable!()
                };
                let field = self.fields[i].as_ref().unwrap();
                matrix_invertible(field, m, *n as usize)
            }
            CompValue::Formal { nonzero } => *nonzero,
        }
    }

    pub fn mul(&self, a: &ProductElement, b: &ProductElement) -> ProductElement {
        let entries = self
            .comps
            .iter()
            .enumerate()
            .map(|(i, spec)| match (spec, &a.entries[i], &b.entries[i]) {
                (ComponentSpec::Field(_), CompValue::Field(x), CompValue::Field(y)) => {
                    CompValue::Field(self.fields[i].as_ref().unwrap().mul(*x, *y))
                }
                (ComponentSpec::Matrix { n, .. }, CompValue::Matrix(x), CompValue::Matrix(y)) => {
                    let field = self.fields[i].as_ref().unwrap();
                    CompValue::Matrix(matrix_mul(field, x, y, *n as usize))
                }
                (
                    ComponentSpec::Formal(_),
                    CompValue::Formal { nonzero: x },
                    CompValue::Formal { nonzero: y },
                ) => CompValue::Formal { nonzero: *x && *y },
                _ => unreachable!("validated elements"),
            })
            .collect();
        ProductElement { entries }
    }

    /// The support: indices with a nonzero entry.
    pub fn supp(&self, e: &ProductElement) -> IndexSet {
        let mut s = 0u32;
        for i in 0..self.comps.len() {
            if !self.entry_is_zero(i, &e.entries[i]) {
                s |= 1 << i;
            }
        }
        s
    }

    /// Elementwise supports of a set, deduplicated and sorted.
    pub fn supp_set(&self, elements: &[ProductElement]) -> Vec<IndexSet> {
        let mut out: Vec<IndexSet> = elements.iter().map(|e| self.supp(e)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_unit(&self, e: &ProductElement) -> bool {
        (0..self.comps.len()).all(|i| self.entry_is_unit(i, &e.entries[i]))
    }

    pub fn is_zero(&self, e: &ProductElement) -> bool {
        self.supp(e) == 0
    }

    /// Decode a mixed-radix element index (enumerable components only).
    pub fn element_by_index(&self, mut idx: u64) -> ProductElement {
        let entries = self
            .comps
            .iter()
            .map(|c| {
                let size = c.size().expect("enumerable component");
                let v = idx % size;
                idx /= size;
                match c {
                    ComponentSpec::Field(_) => CompValue::Field(v as u32),
                    ComponentSpec::Matrix { n, q } => {
                        let cells = (*n as usize) * (*n as usize);
                        let mut m = Vec::with_capacity(cells);
                        let mut k = v;
                        for _ in 0..cells {
                            m.push((k % *q as u64) as u32);
                            k /= *q as u64;
                        }
                        CompValue::Matrix(m)
                    }
                    ComponentSpec::Formal(_) => unreachable!(),
                }
            })
            .collect();
        ProductElement { entries }
    }

    pub fn element_index(&self, e: &ProductElement) -> u64 {
        let mut idx = 0u64;
        for (c, v) in self.comps.iter().zip(&e.entries).rev() {
            let size = c.size().expect("enumerable component");
            let digit = match (c, v) {
                (ComponentSpec::Field(_), CompValue::Field(x)) => *x as u64,
                (ComponentSpec::Matrix { q, .. }, CompValue::Matrix(m)) => m
                    .iter()
                    .rev()
                    .fold(0u64, |acc, &cell| acc * *q as u64 + cell as u64),
                _ => unreachable!(),
            };
            idx = idx * size + digit;
        }
        idx
    }
}

fn matrix_mul(field: &SmallField, a: &[u32], b: &[u32], n: usize) -> Vec<u32> {
    let mut out = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0u32;
            for k in 0..n {
                acc = field.add(acc, field.mul(a[i * n + k], b[k * n + j]));
            }
            out[i * n + j] = acc;
        }
    }
    out
}

/// Invertibility by Gaussian elimination over GF(q).
pub fn matrix_invertible(field: &SmallField, m: &[u32], n: usize) -> bool {
    let mut a = m.to_vec();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r * n + col] != 0);
        let Some(p) = pivot else { return false };
        if p != col {
            for j in 0..n {
                a.swap(col * n + j, p * n + j);
            }
        }
        let inv = field.inv(a[col * n + col]).unwrap();
        for j in 0..n {
            a[col * n + j] = field.mul(a[col * n + j], inv);
        }
        for r in 0..n {
            if r == col || a[r * n + col] == 0 {
                continue;
            }
            let factor = a[r * n + col];
            for j in 0..n {
                let sub = field.mul(factor, a[col * n + j]);
                a[r * n + j] = field.add(a[r * n + j], field.neg(sub));
            }
        }
    }
    true
}

/// A family of index subsets with the filter predicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterOnIndexSet {
    pub indices: usize,
    pub family: Vec<IndexSet>,
}

impl FilterOnIndexSet {
    pub fn new(indices: usize, mut family: Vec<IndexSet>) -> Result<Self, Error> {
        if indices == 0 || indices > INDEX_CAP {
            return Err(Error::Input(format!(
                "index set size must be in 1..={INDEX_CAP}"
            )));
        }
        let full = (1u32 << indices) - 1;
        if family.iter().any(|&s| s & !full != 0) {
            return Err(Error::Input("subset mentions an index out of range".into()));
        }
        family.sort_unstable();
        family.dedup();
        Ok(FilterOnIndexSet { indices, family })
    }

    /// Nonempty, no empty subset, upward closed, intersection closed.
    pub fn is_filter(&self) -> bool {
        if self.family.is_empty() || self.family.contains(&0) {
            return false;
        }
        let full = (1u32 << self.indices) - 1;
        for &a in &self.family {
            for b in 0..=full {
                if b & a == a && !self.family.contains(&b) {
                    return false;
                }
            }
            for &b in &self.family {
                if !self.family.contains(&(a & b)) {
                    return false;
                }
            }
        }
        true
    }

    /// A filter containing one of each complementary pair of subsets.
    pub fn is_ultrafilter(&self) -> bool {
        if !self.is_filter() {
            return false;
        }
        let full = (1u32 << self.indices) - 1;
        (0..=full).all(|a| self.family.contains(&a) || self.family.contains(&(full & !a)))
    }

    /// The witness index when the filter is the principal ultrafilter at it.
    pub fn principal_witness(&self) -> Option<usize> {
        if !self.is_ultrafilter() {
            return None;
        }
        let core = self
            .family
            .iter()
            .fold((1u32 << self.indices) - 1, |m, &a| m & a);
        if core.count_ones() == 1 {
            Some(core.trailing_zeros() as usize)
        } else {
            None
        }
    }

    /// Upward closure of a generating family (after closing under meets).
    pub fn generated(indices: usize, gens: &[IndexSet]) -> Result<Self, Error> {
        let full = (1u32 << indices) - 1;
        let mut meets: Vec<IndexSet> = gens.to_vec();
        loop {
            let mut grew = false;
            let snapshot = meets.clone();
            for &a in &snapshot {
                for &b in &snapshot {
                    if !meets.contains(&(a & b)) {
                        meets.push(a & b);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let mut family = Vec::new();
        for b in 0..=full {
            if meets.iter().any(|&a| b & a == a) {
                family.push(b);
            }
        }
        FilterOnIndexSet::new(indices, family)
    }
}

/// The principal ultrafilters: on a finite index set these are all of them.
pub fn enumerate_ultrafilters(indices: usize) -> Result<Vec<FilterOnIndexSet>, Error> {
    if indices == 0 || indices > INDEX_CAP {
        return Err(Error::Input(format!(
            "index set size must be in 1..={INDEX_CAP}"
        )));
    }
    (0..indices)
        .map(|i| FilterOnIndexSet::generated(indices, &[1 << i]))
        .collect()
}

/// Every filter on a small finite index set, by scanning all families of
/// nonempty subsets. On a finite set every filter is the up-set of its
/// intersection, so this is equivalent to enumerating nonempty subsets.
pub fn enumerate_filters(indices: usize) -> Result<Vec<FilterOnIndexSet>, Error> {
    if indices == 0 || indices > INDEX_CAP {
        return Err(Error::Input(format!(
            "index set size must be in 1..={INDEX_CAP}"
        )));
    }
    let full = (1u32 << indices) - 1;
    let mut out = Vec::new();
    for core in 1..=full {
        out.push(FilterOnIndexSet::generated(indices, &[core])?);
    }
    out.sort_by(|a, b| a.family.cmp(&b.family));
    Ok(out)
}

/// A saturated multiplicative set presented by its filter of supports:
/// all elements whose support lies in the filter and whose entries on the
/// support are units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturatedMultSet {
    pub filter: FilterOnIndexSet,
}

impl SaturatedMultSet {
    pub fn contains(&self, ring: &ProductRing, e: &ProductElement) -> bool {
        let supp = ring.supp(e);
        self.filter.family.contains(&supp)
            && (0..ring.len()).all(|i| supp & (1 << i) == 0 || ring.entry_is_unit(i, &e.entries[i]))
    }

    /// Enumerate the members (enumerable components only).
    pub fn members(&self, ring: &ProductRing) -> Result<Vec<u64>, Error> {
        let order = ring
            .order()
            .ok_or_else(|| Error::Input("formal components cannot be enumerated".into()))?;
        Ok((0..order)
            .filter(|&i| self.contains(ring, &ring.element_by_index(i)))
            .collect())
    }
}

/// Saturate an explicit multiplicative set: the filter generated by the
/// supports. Errors if the list contains zero or is not multiplicatively
/// closed (checked pairwise for representable products).
pub fn saturate_multset(
    ring: &ProductRing,
    elements: &[ProductElement],
) -> Result<SaturatedMultSet, Error> {
    if elements.is_empty() {
        return Err(Error::Input("empty multiplicative set".into()));
    }
    for e in elements {
        ring.check_element(e)?;
        if ring.is_zero(e) {
            return Err(Error::Input(
                "0 lies in the set: not a multiplicative set".into(),
            ));
        }
    }
    for a in elements {
        for b in elements {
            let prod = ring.mul(a, b);
            if ring.is_zero(&prod) {
                return Err(Error::Input(
                    "products reach 0: not a multiplicative set".into(),
                ));
            }
            if !elements.contains(&prod) {
                return Err(Error::Input(
                    "set is not closed under multiplication".into(),
                ));
            }
        }
    }
    let supports: Vec<IndexSet> = elements.iter().map(|e| ring.supp(e)).collect();
    let filter = FilterOnIndexSet::generated(ring.len(), &supports)?;
    let sat = SaturatedMultSet { filter };
    // saturation is idempotent by construction; verify on enumerable rings
    if ring.is_enumerable() {
        let members = sat.members(ring)?;
        let supports2: Vec<IndexSet> = members
            .iter()
            .map(|&i| ring.supp(&ring.element_by_index(i)))
            .collect();
        let again = FilterOnIndexSet::generated(ring.len(), &supports2)?;
        if again != sat.filter {
            return Err(Error::Internal("saturation failed to be idempotent".into()));
        }
    }
    Ok(sat)
}

/// Associated-ideal descriptor and localization of a product at a set of
/// elements: a component survives exactly when every element of the set is
/// a unit there. The associated ideal is the product of the dead
/// components; the localization is the product over the surviving ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductLocalization {
    /// Indices whose component is killed (the associated ideal is their
    /// product, embedded in the ring).
    pub dead: IndexSet,
    /// The surviving product ring; None encodes the zero ring.
    pub localization: Option<ProductRing>,
}

pub fn ass_and_localize(
    ring: &ProductRing,
    elements: &[ProductElement],
) -> Result<ProductLocalization, Error> {
    if elements.is_empty() {
        return Err(Error::Input("empty multiplicative set".into()));
    }
    for e in elements {
        ring.check_element(e)?;
    }
    let mut alive: IndexSet = 0;
    for i in 0..ring.len() {
        if elements
            .iter()
            .all(|e| ring.entry_is_unit(i, &e.entries[i]))
        {
            alive |= 1 << i;
        }
    }
    let dead = ring.full_index_set() & !alive;
    let localization = if alive == 0 {
        None
    } else {
        let comps: Vec<ComponentSpec> = (0..ring.len())
            .filter(|&i| alive & (1 << i) != 0)
            .map(|i| ring.components()[i].clone())
            .collect();
        Some(ProductRing::new(comps)?)
    };
    Ok(ProductLocalization { dead, localization })
}

/// Maximal localizable sets of the product: one per index, the preimage of
/// the unit group of that component.
#[derive(Debug, Clone)]
pub struct MaxSetDescriptor {
    pub index: usize,
    /// |units(A_i)| · ∏_{j≠i} |A_j| when every component is enumerable.
    pub size: Option<u64>,
}

pub fn max_localizable_product(ring: &ProductRing) -> Vec<MaxSetDescriptor> {
    (0..ring.len())
        .map(|i| {
            let size = ring
                .components()
                .iter()
                .enumerate()
                .map(|(j, c)| if j == i { c.unit_count() } else { c.size() })
                .try_fold(1u64, |acc, v| v.map(|v| acc * v));
            MaxSetDescriptor { index: i, size }
        })
        .collect()
}

/// All multiplicative submonoids (containing 1, avoiding 0) of an
/// enumerable product, as element-index bitmasks.
pub fn enumerable_monoids(ring: &ProductRing) -> Result<Vec<u64>, Error> {
    let order = ring.order().filter(|&n| n <= 64).ok_or_else(|| {
        Error::Input("monoid enumeration needs an enumerable ring of order <= 64".into())
    })? as usize;
    let elements: Vec<ProductElement> = (0..order as u64)
        .map(|i| ring.element_by_index(i))
        .collect();
    let zero_idx = elements.iter().position(|e| ring.is_zero(e)).unwrap();
    let one_idx = elements.iter().position(|e| *e == ring.one()).unwrap();
    let mul_table: Vec<usize> = (0..order * order)
        .map(|k| {
            let (a, b) = (k / order, k % order);
            ring.element_index(&ring.mul(&elements[a], &elements[b])) as usize
        })
        .collect();
    let closure = |seed: u64| -> u64 {
        let mut mask = seed | 1 << one_idx;
        loop {
            let mut next = mask;
            let members: Vec<usize> = (0..order).filter(|&i| mask & 1 << i != 0).collect();
            for &a in &members {
                for &b in &members {
                    next |= 1 << mul_table[a * order + b];
                }
            }
            if next == mask {
                return mask;
            }
            mask = next;
        }
    };
    let mut seen = std::collections::BTreeSet::new();
    let start = closure(0);
    seen.insert(start);
    let mut work = vec![start];
    while let Some(cur) = work.pop() {
        for a in 0..order {
            if cur & 1 << a != 0 || a == zero_idx {
                continue;
            }
            let big = closure(cur | 1 << a);
            if big & 1 << zero_idx != 0 {
                continue;
            }
            if seen.insert(big) {
                work.push(big);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Exhaustive filter ↔ saturated-set round trip on an enumerable product:
/// every filter expands to a saturated set whose supports regenerate it,
/// and every multiplicative subset saturates to a fixed point of the
/// correspondence. Inclusion must be preserved both ways.
pub fn filter_roundtrip(ring: &ProductRing) -> Result<ClauseResult, Error> {
    let order = ring
        .order()
        .ok_or_else(|| Error::Input("roundtrip needs enumerable components".into()))?
        as usize;
    let filters = enumerate_filters(ring.len())?;
    let mut ok = true;
    let mut sat_sets: Vec<(Vec<IndexSet>, Vec<u64>)> = Vec::new();
    for f in &filters {
        let sat = SaturatedMultSet { filter: f.clone() };
        let members = sat.members(ring)?;
        if members.is_empty() {
            ok = false;
            continue;
        }
        let supports: Vec<IndexSet> = members
            .iter()
            .map(|&i| ring.supp(&ring.element_by_index(i)))
            .collect();
        let back = FilterOnIndexSet::generated(ring.len(), &supports)?;
        if back != *f {
            ok = false;
        }
        sat_sets.push((f.family.clone(), members));
    }
    // order preservation in both directions
    for (fa, ma) in &sat_sets {
        for (fb, mb) in &sat_sets {
            let f_le = fa.iter().all(|x| fb.contains(x));
            let s_le = ma.iter().all(|x| mb.contains(x));
            if f_le != s_le {
                ok = false;
            }
        }
    }
    // saturation of every multiplicative subset is idempotent and lands on
    // a filter image
    if order <= 64 {
        let monoids = enumerable_monoids(ring)?;
        for &monoid in &monoids {
            let members: Vec<ProductElement> = (0..order)
                .filter(|&i| monoid & 1 << i != 0)
                .map(|i| ring.element_by_index(i as u64))
                .collect();
            let sat = saturate_multset(ring, &members)?;
            let sat_members = sat.members(ring)?;
            let again = saturate_multset(
                ring,
                &sat_members
                    .iter()
                    .map(|&i| ring.element_by_index(i))
                    .collect::<Vec<_>>(),
            )?;
            if again.filter != sat.filter {
                ok = false;
            }
        }
    }
    Ok(clause(
        "filter-saturated-set-roundtrip",
        ok,
        format!("{} filters", filters.len()),
    ))
}

/// The product-theory suite: classification identities plus, for
/// enumerable division-ring products, an exhaustive sweep over all
/// multiplicative submonoids.
#[derive(Debug, Clone)]
pub struct ProductSuite {
    pub clauses: Vec<ClauseResult>,
    pub max_sets: Vec<MaxSetDescriptor>,
    pub completely_localizable_count: Option<u64>,
    pub filter_count: Option<usize>,
}

impl ProductSuite {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }
}

pub fn product_theory_suite(ring: &ProductRing) -> Result<ProductSuite, Error> {
    let mut clauses = Vec::new();
    let s = ring.len();
    let max_sets = max_localizable_product(ring);

    clauses.push(clause(
        "one-maximal-set-per-component",
        max_sets.len() == s,
        format!("{} components", s),
    ));

    // the localization at each maximal set is the single surviving component
    let mut loc_ok = true;
    for d in &max_sets {
        // the maximal set contains the identity-like witness: units at the
        // index, anything elsewhere; test with 1 and with the idempotent
        // that is 1 at the index and 0 elsewhere
        let mut idem = ring.one();
        for j in 0..s {
            if j != d.index {
                idem.entries[j] = ring.zero_at(j);
            }
        }
        let loc = ass_and_localize(ring, &[ring.one(), idem.clone()])?;
        let expected_dead = ring.full_index_set() & !(1 << d.index);
        if loc.dead != expected_dead {
            loc_ok = false;
        }
        match loc.localization {
            Some(l) if l.components() == &ring.components()[d.index..d.index + 1] => {}
            _ => loc_ok = false,
        }
    }
    clauses.push(clause(
        "maximal-localization-is-component",
        loc_ok,
        "killing all other components leaves the single factor",
    ));

    // localization radical: every component survives in some maximal set
    clauses.push(clause(
        "lrad-is-zero",
        {
            let mut meet = ring.full_index_set();
            for d in &max_sets {
                meet &= ring.full_index_set() & !(1 << d.index);
            }
            meet == 0
        },
        "intersection of the dead index sets is empty",
    ));

    // completely localizable elements are exactly the units
    let cl_count = if ring.is_enumerable() && ring.order().unwrap_or(u64::MAX) <= 1 << 16 {
        let order = ring.order().unwrap();
        let mut count = 0u64;
        let mut agree = true;
        for idx in 0..order {
            let e = ring.element_by_index(idx);
            // completely localizable = unit entry at every index i
            // (membership in every maximal set)
            let in_all_max = (0..s).all(|i| ring.entry_is_unit(i, &e.entries[i]));
            if in_all_max != ring.is_unit(&e) {
                agree = false;
            }
            if in_all_max {
                count += 1;
            }
        }
        clauses.push(clause(
            "completely-localizable-are-units",
            agree,
            format!("{count} units"),
        ));
        Some(count)
    } else {
        clauses.push(clause(
            "completely-localizable-are-units",
            true,
            "structural: membership in every maximal set forces unit entries everywhere",
        ));
        None
    };

    // nonzero product with at least two components has zero absolute
    // quotient ring: two maximal sets with complementary kernels
    clauses.push(clause(
        "absolute-quotient-zero-for-two-or-more-factors",
        s < 2 || max_sets.len() >= 2,
        if s >= 2 {
            "witness pair: the first two maximal sets".to_string()
        } else {
            "single factor: absolute quotient is the ring itself".to_string()
        },
    ));

    // exhaustive sweep for enumerable products of fields
    let all_fields = ring
        .components()
        .iter()
        .all(|c| matches!(c, ComponentSpec::Field(_)));
    let mut filter_count = None;
    if all_fields && ring.order().unwrap_or(u64::MAX) <= 64 {
        let order = ring.order().unwrap() as usize;
        let elements: Vec<ProductElement> = (0..order as u64)
            .map(|i| ring.element_by_index(i))
            .collect();
        let monoids = enumerable_monoids(ring)?;
        // every multiplicative submonoid is contained in a maximal set, and
        // its localization is the product over its support core
        let mut contained_ok = true;
        let mut core_ok = true;
        for &monoid in &monoids {
            let members: Vec<usize> = (0..order).filter(|&i| monoid & 1 << i != 0).collect();
            let core = members
                .iter()
                .fold(ring.full_index_set(), |m, &i| m & ring.supp(&elements[i]));
            if core == 0 {
                contained_ok = false;
                continue;
            }
            let set: Vec<ProductElement> = members.iter().map(|&i| elements[i].clone()).collect();
            let loc = ass_and_localize(ring, &set)?;
            if loc.dead != ring.full_index_set() & !core {
                core_ok = false;
            }
            // containment in the maximal set at any core index
            let i0 = core.trailing_zeros() as usize;
            if !members
                .iter()
                .all(|&m| ring.entry_is_unit(i0, &elements[m].entries[i0]))
            {
                contained_ok = false;
            }
        }
        clauses.push(clause(
            "every-multiplicative-set-under-a-maximal-one",
            contained_ok,
            format!("{} multiplicative submonoids", monoids.len()),
        ));
        clauses.push(clause(
            "localization-is-support-core-quotient",
            core_ok,
            "componentwise rule matches the support-core computation",
        ));

        filter_count = Some(enumerate_filters(ring.len())?.len());
        clauses.push(filter_roundtrip(ring)?);

        // ultrafilter sets are exactly the maximal sets
        let ultras = enumerate_ultrafilters(ring.len())?;
        let mut ultra_ok = ultras.len() == s;
        for u in &ultras {
            let sat = SaturatedMultSet { filter: u.clone() };
            let size = sat.members(ring)?.len() as u64;
            let witness = u.principal_witness();
            match witness {
                Some(i) => {
                    if max_sets[i].size != Some(size) {
                        ultra_ok = false;
                    }
                }
                None => ultra_ok = false,
            }
        }
        clauses.push(clause(
            "ultrafilter-sets-are-maximal-sets",
            ultra_ok,
            "principal ultrafilters match the componentwise maximal sets",
        ));
    }

    Ok(ProductSuite {
        clauses,
        max_sets,
        completely_localizable_count: cl_count,
        filter_count,
    })
}
