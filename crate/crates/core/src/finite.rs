//! Exhaustive oracle over small finite commutative rings.
//!
//! Rings are multiplication/addition tables over indexed elements. Subsets
//! are bitmasks, so the element count is capped at 64 for the enumeration
//! machinery (table validation accepts up to 256). Everything here is brute
//! force on purpose: this module is the ground truth the symbolic pipeline
//! is checked against.

use crate::ring::Status;
use crate::Error;

pub const MASK_CAP: usize = 64;
pub const TABLE_CAP: usize = 256;

pub type SubsetMask = u64;

/// A finite commutative unital ring as explicit operation tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    n: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    zero: u16,
    one: u16,
}

impl FiniteRing {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> u16 {
        self.zero
    }

    pub fn one(&self) -> u16 {
        self.one
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.n + b as usize]
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.n + b as usize]
    }

    pub fn neg(&self, a: u16) -> u16 {
        (0..self.n as u16)
            .find(|&b| self.add(a, b) == self.zero)
            .expect("validated ring has additive inverses")
    }

    /// Build from raw tables, checking every ring axiom by full enumeration.
    pub fn from_tables(
        n: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: u16,
        one: u16,
    ) -> Result<Self, Error> {
        if n == 0 || n > TABLE_CAP {
            return Err(Error::Input(format!("ring order {n} out of range")));
        }
        if add.len() != n * n || mul.len() != n * n {
            return Err(Error::Input("table shape mismatch".into()));
        }
        if add.iter().chain(mul.iter()).any(|&v| v as usize >= n) {
            return Err(Error::Input("table entry out of range".into()));
        }
        let ring = FiniteRing {
            n,
            add,
            mul,
            zero,
            one,
        };
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<(), Error> {
        let n = self.n as u16;
        let witness = |law: &str, t: (u16, u16, u16)| {
            Err(Error::Input(format!(
                "not a commutative ring: {law} fails at {t:?}"
            )))
        };
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return witness("additive identity", (a, self.zero, 0));
            }
            if self.mul(a, self.one) != a {
                return witness("multiplicative identity", (a, self.one, 0));
            }
            if (0..n).all(|b| self.add(a, b) != self.zero) {
                return witness("additive inverse", (a, 0, 0));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return witness("commutative addition", (a, b, 0));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return witness("commutative multiplication", (a, b, 0));
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return witness("associative addition", (a, b, c));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return witness("associative multiplication", (a, b, c));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return witness("distributivity", (a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn cyclic(n: usize) -> Result<Self, Error> {
        if n == 0 || n > TABLE_CAP {
            return Err(Error::Input(format!("ring order {n} out of range")));
        }
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = ((a + b) % n) as u16;
                mul[a * n + b] = ((a * b) % n) as u16;
            }
        }
        Self::from_tables(n, add, mul, 0, (1 % n) as u16)
    }

    /// GF(p)[x]/(f) by table expansion; f need not be irreducible. The
    /// element with index e has coefficients given by the base-p digits of
    /// e, least significant digit first.
    pub fn gf_poly(p: u32, f_coeffs: &[u64]) -> Result<Self, Error> {
        crate::scalar::FieldSpec::Fp(p).validate()?;
        let d = f_coeffs.len().saturating_sub(1);
        if d == 0 || *f_coeffs.last().unwrap() % p as u64 == 0 {
            return Err(Error::Input(
                "modulus must have positive degree and invertible leading coefficient".into(),
            ));
        }
        let n = (p as usize).checked_pow(d as u32).unwrap_or(usize::MAX);
        if n > TABLE_CAP {
            return Err(Error::Input(format!("ring order {n} out of range")));
        }
        let pu = p as u64;
        let digits = |mut e: usize| -> Vec<u64> {
            let mut v = vec![0u64; d];
            for slot in v.iter_mut() {
                *slot = (e % p as usize) as u64;
                e /= p as usize;
            }
            v
        };
        let index = |v: &[u64]| -> usize {
            v.iter()
                .rev()
                .fold(0usize, |acc, &c| acc * p as usize + c as usize)
        };
        // reduce a (possibly long) coefficient vector modulo f
        let monic_inv = mod_inv_u64(*f_coeffs.last().unwrap() % pu, pu);
        let reduce = |mut v: Vec<u64>| -> Vec<u64> {
            while v.len() > d {
                let lead = *v.last().unwrap() % pu;
                let shift = v.len() - 1 - d;
                if lead != 0 {
                    let c = lead * monic_inv % pu;
                    for (k, &fc) in f_coeffs.iter().enumerate() {
                        let idx = shift + k;
                        v[idx] = (v[idx] + pu - c * (fc % pu) % pu) % pu;
                    }
                }
                v.pop();
            }
            v.resize(d, 0);
            v
        };
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            let da = digits(a);
            for b in 0..n {
                let db = digits(b);
                let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % pu).collect();
                add[a * n + b] = index(&sum) as u16;
                let mut prod = vec![0u64; 2 * d - 1];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % pu;
                    }
                }
                mul[a * n + b] = index(&reduce(prod)) as u16;
            }
        }
        Self::from_tables(n, add, mul, 0, 1)
    }

    /// Componentwise product ring with mixed-radix element indices.
    pub fn product(factors: &[FiniteRing]) -> Result<Self, Error> {
        if factors.is_empty() {
            return Err(Error::Input("empty product".into()));
        }
        let n: usize = factors.iter().map(|r| r.n).product();
        if n > TABLE_CAP {
            return Err(Error::Input(format!("ring order {n} out of range")));
        }
        let decode = |mut e: usize| -> Vec<u16> {
            factors
                .iter()
                .map(|r| {
                    let c = (e % r.n) as u16;
                    e /= r.n;
                    c
                })
                .collect()
        };
        let encode = |v: &[u16]| -> usize {
            factors
                .iter()
                .zip(v)
                .rev()
                .fold(0usize, |acc, (r, &c)| acc * r.n + c as usize)
        };
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            let da = decode(a);
            for b in 0..n {
                let db = decode(b);
                let s: Vec<u16> = factors
                    .iter()
                    .enumerate()
                    .map(|(i, r)| r.add(da[i], db[i]))
                    .collect();
                let m: Vec<u16> = factors
                    .iter()
                    .enumerate()
                    .map(|(i, r)| r.mul(da[i], db[i]))
                    .collect();
                add[a * n + b] = encode(&s) as u16;
                mul[a * n + b] = encode(&m) as u16;
            }
        }
        let zero = encode(&factors.iter().map(|r| r.zero).collect::<Vec<_>>());
        let one = encode(&factors.iter().map(|r| r.one).collect::<Vec<_>>());
        Self::from_tables(n, add, mul, zero as u16, one as u16)
    }

    fn require_mask_cap(&self) -> Result<(), Error> {
        if self.n > MASK_CAP {
            return Err(Error::Input(format!(
                "subset operations need order <= {MASK_CAP}, ring has {}",
                self.n
            )));
        }
        Ok(())
    }

    pub fn full_mask(&self) -> SubsetMask {
        if self.n == MASK_CAP {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn is_unit(&self, a: u16) -> bool {
        (0..self.n as u16).any(|b| self.mul(a, b) == self.one)
    }

    pub fn units_mask(&self) -> SubsetMask {
        (0..self.n as u16)
            .filter(|&a| self.is_unit(a))
            .fold(0, |m, a| m | 1 << a)
    }

    pub fn is_nilpotent(&self, a: u16) -> bool {
        let mut x = a;
        for _ in 0..self.n {
            if x == self.zero {
                return true;
            }
            x = self.mul(x, a);
        }
        x == self.zero
    }

    pub fn nilpotents_mask(&self) -> SubsetMask {
        (0..self.n as u16)
            .filter(|&a| self.is_nilpotent(a))
            .fold(0, |m, a| m | 1 << a)
    }

    /// Smallest multiplicatively closed superset containing 1.
    pub fn monoid_closure(&self, set: SubsetMask) -> Result<SubsetMask, Error> {
        self.require_mask_cap()?;
        let mut mask = set | 1 << self.one;
        loop {
            let mut next = mask;
            let members: Vec<u16> = mask_elements(mask);
            for &a in &members {
                for &b in &members {
                    next |= 1 << self.mul(a, b);
                }
            }
            if next == mask {
                return Ok(mask);
            }
            mask = next;
        }
    }

    /// {r | s·r = 0 for some s in the monoid closure of S}; checked to be
    /// an ideal.
    pub fn ass_bruteforce(&self, set: SubsetMask) -> Result<SubsetMask, Error> {
        let monoid = self.monoid_closure(set)?;
        let members = mask_elements(monoid);
        let mut out = 0u64;
        for r in 0..self.n as u16 {
            if members.iter().any(|&s| self.mul(s, r) == self.zero) {
                out |= 1 << r;
            }
        }
        if !self.is_ideal(out) {
            return Err(Error::Internal(
                "associated set failed the ideal axioms".into(),
            ));
        }
        Ok(out)
    }

    pub fn is_ideal(&self, mask: SubsetMask) -> bool {
        if mask & 1 << self.zero == 0 {
            return false;
        }
        let members = mask_elements(mask);
        for &a in &members {
            for &b in &members {
                if mask & 1 << self.add(a, b) == 0 {
                    return false;
                }
            }
            for r in 0..self.n as u16 {
                if mask & 1 << self.mul(a, r) == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Quotient by an ideal, with the map from old to new indices.
    pub fn quotient(&self, ideal: SubsetMask) -> Result<(FiniteRing, Vec<u16>), Error> {
        self.require_mask_cap()?;
        if !self.is_ideal(ideal) {
            return Err(Error::Input("mask is not an ideal".into()));
        }
        let members = mask_elements(ideal);
        let mut rep = vec![u16::MAX; self.n];
        let mut reps: Vec<u16> = Vec::new();
        for a in 0..self.n as u16 {
            if rep[a as usize] != u16::MAX {
                continue;
            }
            let class_rep = reps.len() as u16;
            reps.push(a);
            for &t in &members {
                rep[self.add(a, t) as usize] = class_rep;
            }
        }
        let m = reps.len();
        let mut add = vec![0u16; m * m];
        let mut mul = vec![0u16; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                add[i * m + j] = rep[self.add(a, b) as usize];
                mul[i * m + j] = rep[self.mul(a, b) as usize];
            }
        }
        let q =
            FiniteRing::from_tables(m, add, mul, rep[self.zero as usize], rep[self.one as usize])?;
        Ok((q, rep))
    }

    /// Localization at S from first principles: the quotient by ass(S), in
    /// which every image of S must be a unit. A failed unit check is an
    /// internal error: it can never happen for a genuine commutative ring.
    pub fn localize(&self, set: SubsetMask) -> Result<(FiniteRing, Vec<u16>), Error> {
        let ass = self.ass_bruteforce(set)?;
        let (q, rep) = self.quotient(ass)?;
        for &s in &mask_elements(set) {
            if !q.is_unit(rep[s as usize]) {
                return Err(Error::Internal(
                    "image of the multiplicative set is not a unit in the localization".into(),
                ));
            }
        }
        Ok((q, rep))
    }

    /// All ideals, by closure search.
    pub fn ideals(&self) -> Result<Vec<SubsetMask>, Error> {
        self.require_mask_cap()?;
        let close = |seed: SubsetMask| -> SubsetMask {
            let mut mask = seed | 1 << self.zero;
            loop {
                let mut next = mask;
                let members = mask_elements(mask);
                for &a in &members {
                    for &b in &members {
                        next |= 1 << self.add(a, b);
                    }
                    for r in 0..self.n as u16 {
                        next |= 1 << self.mul(a, r);
                    }
                }
                if next == mask {
                    return mask;
                }
                mask = next;
            }
        };
        let mut seen: std::collections::BTreeSet<SubsetMask> = std::collections::BTreeSet::new();
        let mut work = vec![close(0)];
        seen.insert(work[0]);
        while let Some(cur) = work.pop() {
            for a in 0..self.n as u16 {
                if cur & 1 << a != 0 {
                    continue;
                }
                let bigger = close(cur | 1 << a);
                if seen.insert(bigger) {
                    work.push(bigger);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    pub fn is_prime_ideal(&self, mask: SubsetMask) -> bool {
        if !self.is_ideal(mask) || mask == self.full_mask() {
            return false;
        }
        for a in 0..self.n as u16 {
            if mask & 1 << a != 0 {
                continue;
            }
            for b in 0..self.n as u16 {
                if mask & 1 << b != 0 {
                    continue;
                }
                if mask & 1 << self.mul(a, b) != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn minimal_prime_ideals(&self) -> Result<Vec<SubsetMask>, Error> {
        let primes: Vec<SubsetMask> = self
            .ideals()?
            .into_iter()
            .filter(|&m| self.is_prime_ideal(m))
            .collect();
        Ok(primes
            .iter()
            .copied()
            .filter(|&p| !primes.iter().any(|&q| q != p && q & p == q))
            .collect())
    }

    /// All multiplicative submonoids containing 1 and avoiding 0, by
    /// closure-and-extend search. These are exactly the localizable
    /// monoids of the ring.
    pub fn localizable_monoids(&self) -> Result<Vec<SubsetMask>, Error> {
        self.require_mask_cap()?;
        let start = self.monoid_closure(0)?;
        if start & 1 << self.zero != 0 {
            return Ok(Vec::new()); // zero ring
        }
        let mut seen: std::collections::BTreeSet<SubsetMask> = std::collections::BTreeSet::new();
        seen.insert(start);
        let mut work = vec![start];
        while let Some(cur) = work.pop() {
            for a in 0..self.n as u16 {
                if cur & 1 << a != 0 || a == self.zero {
                    continue;
                }
                let bigger = self.monoid_closure(cur | 1 << a)?;
                if bigger & 1 << self.zero != 0 {
                    continue;
                }
                if seen.insert(bigger) {
                    work.push(bigger);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Preimage of the unit group of R/ideal.
    pub fn unit_preimage(&self, ideal: SubsetMask) -> Result<SubsetMask, Error> {
        let (q, rep) = self.quotient(ideal)?;
        let mut out = 0u64;
        for a in 0..self.n as u16 {
            if q.is_unit(rep[a as usize]) {
                out |= 1 << a;
            }
        }
        Ok(out)
    }
}

fn mod_inv_u64(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

pub fn mask_elements(mask: SubsetMask) -> Vec<u16> {
    (0..64u16).filter(|&i| mask & 1 << i != 0).collect()
}

pub fn mask_popcount(mask: SubsetMask) -> usize {
    mask.count_ones() as usize
}

/// Search for a ring isomorphism by backtracking on element images with
/// closure propagation. Only intended for small orders.
pub fn find_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<u16>> {
    if a.order() != b.order() {
        return None;
    }
    let n = a.order();
    let mut map = vec![u16::MAX; n];
    let mut used = vec![false; n];
    map[a.zero() as usize] = b.zero();
    used[b.zero() as usize] = true;
    if a.zero() != a.one() {
        if b.zero() == b.one() {
            return None;
        }
        if map[a.one() as usize] == u16::MAX {
            map[a.one() as usize] = b.one();
            used[b.one() as usize] = true;
        }
    }
    fn consistent(a: &FiniteRing, b: &FiniteRing, map: &[u16]) -> bool {
        let n = a.order() as u16;
        for x in 0..n {
            if map[x as usize] == u16::MAX {
                continue;
            }
            for y in 0..n {
                if map[y as usize] == u16::MAX {
                    continue;
                }
                let s = a.add(x, y);
                if map[s as usize] != u16::MAX
                    && b.add(map[x as usize], map[y as usize]) != map[s as usize]
                {
                    return false;
                }
                let m = a.mul(x, y);
                if map[m as usize] != u16::MAX
                    && b.mul(map[x as usize], map[y as usize]) != map[m as usize]
                {
                    return false;
                }
            }
        }
        true
    }
    fn backtrack(a: &FiniteRing, b: &FiniteRing, map: &mut Vec<u16>, used: &mut Vec<bool>) -> bool {
        let next = (0..a.order()).find(|&i| map[i] == u16::MAX);
        let Some(x) = next else {
            return consistent(a, b, map);
        };
        for img in 0..b.order() as u16 {
            if used[img as usize] {
                continue;
            }
            map[x] = img;
            used[img as usize] = true;
            if consistent(a, b, map) && backtrack(a, b, map, used) {
                return true;
            }
            map[x] = u16::MAX;
            used[img as usize] = false;
        }
        false
    }
    if backtrack(a, b, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// One verified claim inside a survey or suite report.
#[derive(Debug, Clone)]
pub struct ClauseResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

pub fn clause(name: &str, pass: bool, detail: impl Into<String>) -> ClauseResult {
    ClauseResult {
        name: name.to_string(),
        pass,
        detail: detail.into(),
    }
}

/// Everything the exhaustive survey computes for one ring.
#[derive(Debug, Clone)]
pub struct Survey {
    pub order: usize,
    pub localizable_monoids: Vec<SubsetMask>,
    pub max_localizable: Vec<SubsetMask>,
    pub minimal_primes: Vec<SubsetMask>,
    pub nilpotents: SubsetMask,
    pub localizable_elements: SubsetMask,
    pub non_localizable_elements: SubsetMask,
    pub completely_localizable: SubsetMask,
    pub lrad: SubsetMask,
    pub c_ideal: SubsetMask,
    pub qc_order: usize,
    /// None encodes the zero ring.
    pub qa_order: Option<usize>,
    pub clauses: Vec<ClauseResult>,
}

impl Survey {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }

    pub fn status(&self) -> Status {
        if self.all_pass() {
            Status::Exact
        } else {
            Status::Unverified
        }
    }
}

pub fn survey(ring: &FiniteRing, cap: usize) -> Result<Survey, Error> {
    if ring.order() > cap.min(MASK_CAP) {
        return Err(Error::Refused(format!(
            "survey cap {} exceeded by ring of order {}",
            cap.min(MASK_CAP),
            ring.order()
        )));
    }
    let full = ring.full_mask();
    let monoids = ring.localizable_monoids()?;
    let maximal: Vec<SubsetMask> = monoids
        .iter()
        .copied()
        .filter(|&s| !monoids.iter().any(|&t| t != s && t & s == s))
        .collect();
    let min_primes = ring.minimal_prime_ideals()?;
    let nilpotents = ring.nilpotents_mask();
    let localizable = maximal.iter().fold(0u64, |m, &s| m | s);
    let non_localizable = full & !localizable;
    let completely = maximal.iter().fold(full, |m, &s| m & s);
    let ass_of: std::collections::BTreeMap<SubsetMask, SubsetMask> = monoids
        .iter()
        .map(|&s| Ok((s, ring.ass_bruteforce(s)?)))
        .collect::<Result<_, Error>>()?;
    let lrad = maximal.iter().fold(full, |m, &s| m & ass_of[&s]);
    let c_ideal = ring.ass_bruteforce(completely)?;
    let (qc, qc_rep) = ring.localize(completely)?;

    let mut clauses = Vec::new();

    // maximal localizable sets are exactly the complements of minimal primes
    let complements: std::collections::BTreeSet<SubsetMask> =
        min_primes.iter().map(|&p| full & !p).collect();
    let max_set: std::collections::BTreeSet<SubsetMask> = maximal.iter().copied().collect();
    clauses.push(clause(
        "max-sets-are-prime-complements",
        complements == max_set,
        format!(
            "{} maximal sets vs {} minimal primes",
            max_set.len(),
            complements.len()
        ),
    ));

    // localization at a prime complement is a local ring with the image of
    // the prime as its unique maximal ideal
    let mut local_ok = true;
    for &p in &min_primes {
        let sp = full & !p;
        let (q, rep) = ring.localize(sp)?;
        let qideals = q.ideals()?;
        let qfull = q.full_mask();
        let maximal_ideals: Vec<SubsetMask> = qideals
            .iter()
            .copied()
            .filter(|&i| i != qfull && !qideals.iter().any(|&j| j != i && j != qfull && j & i == i))
            .collect();
        let image_p = mask_elements(p)
            .iter()
            .fold(0u64, |m, &e| m | 1 << rep[e as usize]);
        if maximal_ideals.len() != 1 || maximal_ideals[0] != image_p {
            local_ok = false;
        }
    }
    clauses.push(clause(
        "localization-at-prime-complement-is-local",
        local_ok,
        "unique maximal ideal equals the image of the prime",
    ));

    // ass(S_p) ⊆ p
    let ass_inside = min_primes.iter().all(|&p| {
        let sp = full & !p;
        ass_of.get(&sp).map(|&a| a & !p == 0).unwrap_or(false)
    });
    clauses.push(clause(
        "ass-prime-complement-inside-prime",
        ass_inside,
        "annihilator-based associated ideal stays inside the prime",
    ));

    clauses.push(clause(
        "lrad-inside-nilradical",
        lrad & !nilpotents == 0,
        "intersection of associated ideals of maximal sets",
    ));

    let union_primes = min_primes.iter().fold(0u64, |m, &p| m | p);
    clauses.push(clause(
        "completely-localizable-formula",
        completely == full & !union_primes,
        "intersection of maximal sets equals complement of union of minimal primes",
    ));

    clauses.push(clause(
        "c-ideal-inside-nilradical",
        c_ideal & !nilpotents == 0,
        "associated ideal of the completely localizable set",
    ));

    // nilradical of the complete localization is the image of the nilradical
    {
        let image_nil = mask_elements(nilpotents)
            .iter()
            .fold(0u64, |m, &e| m | 1 << qc_rep[e as usize]);
        clauses.push(clause(
            "qc-nilradical-is-image",
            qc.nilpotents_mask() == image_nil,
            "computed on the quotient tables",
        ));
    }

    clauses.push(clause(
        "localizable-lrad-disjoint",
        localizable & lrad == 0,
        "no localizable element lies in the localization radical",
    ));
    clauses.push(clause(
        "lrad-inside-nonlocalizable",
        lrad & !non_localizable == 0,
        "",
    ));
    let sum_set = |set: SubsetMask, ideal: SubsetMask| -> SubsetMask {
        let mut out = 0u64;
        for &a in &mask_elements(set) {
            for &b in &mask_elements(ideal) {
                out |= 1 << ring.add(a, b);
            }
        }
        out
    };
    clauses.push(clause(
        "localizable-plus-lrad-stable",
        sum_set(localizable, lrad) == localizable,
        "",
    ));
    clauses.push(clause(
        "nonlocalizable-plus-lrad-stable",
        sum_set(non_localizable, lrad) == non_localizable,
        "",
    ));
    clauses.push(clause(
        "localizable-iff-not-nilpotent",
        localizable == full & !nilpotents,
        "",
    ));

    // each maximal set is recovered as the preimage of the units of its own
    // localization, which separates the localizations pairwise
    let mut recovered = true;
    for &s in &maximal {
        if ring.unit_preimage(ass_of[&s])? != s {
            recovered = false;
        }
    }
    clauses.push(clause(
        "max-sets-recovered-from-localizations",
        recovered,
        "preimage of units of the localization returns the maximal set",
    ));

    // ass(S) is the least ideal whose quotient makes S invertible
    let ideals = ring.ideals()?;
    let unit_preimages: Vec<(SubsetMask, SubsetMask)> = ideals
        .iter()
        .map(|&b| Ok((b, ring.unit_preimage(b)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    let mut least_ok = true;
    for (&s, &a) in &ass_of {
        // the associated ideal itself qualifies
        let self_units = unit_preimages
            .iter()
            .find(|(b, _)| *b == a)
            .map(|(_, u)| s & !u == 0)
            .unwrap_or(false);
        if !self_units {
            least_ok = false;
        }
        for (b, u) in &unit_preimages {
            if s & !u == 0 && a & !b != 0 {
                least_ok = false;
            }
        }
    }
    clauses.push(clause(
        "ass-is-least-compatible-ideal",
        least_ok,
        "checked against every ideal of the ring",
    ));

    // the union-of-maximals decision rule for the per-ideal absolute
    // quotient ring
    let mut union_rule_ok = true;
    let mut ass_values: Vec<SubsetMask> = ass_of.values().copied().collect();
    ass_values.sort_unstable();
    ass_values.dedup();
    for &a in &ass_values {
        let class: Vec<SubsetMask> = monoids.iter().copied().filter(|s| ass_of[s] == a).collect();
        let class_max: Vec<SubsetMask> = class
            .iter()
            .copied()
            .filter(|&s| !class.iter().any(|&t| t != s && t & s == s))
            .collect();
        let union = class_max.iter().fold(0u64, |m, &s| m | s);
        let closure = ring.monoid_closure(union)?;
        let localizable_union = closure & 1 << ring.zero() == 0;
        if localizable_union {
            let ass_union = ring.ass_bruteforce(closure)?;
            // kernel matches the class ideal exactly when the class has a
            // unique maximal element
            if (ass_union == a) != (class_max.len() == 1) {
                union_rule_ok = false;
            }
        } else if class_max.len() == 1 {
            // a unique maximal element is itself the union, always localizable
            union_rule_ok = false;
        }
    }
    clauses.push(clause(
        "union-qa-criterion",
        union_rule_ok,
        "union of class-maximal sets decides the per-ideal absolute quotient",
    ));

    // evidence for the open question: maximal associated ideals vs
    // associated ideals of maximal sets
    let max_ass: std::collections::BTreeSet<SubsetMask> = ass_values
        .iter()
        .copied()
        .filter(|&a| !ass_values.iter().any(|&b| b != a && b | a == b))
        .collect();
    let ass_max: std::collections::BTreeSet<SubsetMask> =
        maximal.iter().map(|&s| ass_of[&s]).collect();
    clauses.push(clause(
        "max-ass-equals-ass-max-evidence",
        max_ass == ass_max,
        "evidence only; the general question stays open",
    ));

    // absolute quotient ring: nonzero exactly for a unique maximal set
    let qa_order = if maximal.len() == 1 {
        let (qa, _) = ring.localize(maximal[0])?;
        Some(qa.order())
    } else {
        None
    };

    Ok(Survey {
        order: ring.order(),
        localizable_monoids: monoids,
        max_localizable: maximal,
        minimal_primes: min_primes,
        nilpotents,
        localizable_elements: localizable,
        non_localizable_elements: non_localizable,
        completely_localizable: completely,
        lrad,
        c_ideal,
        qc_order: qc.order(),
        qa_order,
        clauses,
    })
}

/// Bridge between the Gröbner pipeline and the table pipeline for rings
/// GF(p)[x]/(f): element index e corresponds to the polynomial whose
/// coefficients are the base-p digits of e.
pub mod crosscheck {
    use super::{mask_popcount, ClauseResult, FiniteRing, SubsetMask};
    use crate::localization;
    use crate::monomial::MonomialOrder;
    use crate::poly::Polynomial;
    use crate::ring::{MultSetSpec, RingPresentation};
    use crate::scalar::{FieldSpec, Scalar};
    use crate::Error;

    pub struct CrosscheckReport {
        pub instances: usize,
        pub mismatches: Vec<String>,
        pub clauses: Vec<ClauseResult>,
    }

    impl CrosscheckReport {
        pub fn all_pass(&self) -> bool {
            self.mismatches.is_empty()
        }
    }

    fn element_polynomial(p: u32, d: usize, e: u16, ring: &RingPresentation) -> Polynomial {
        let mut terms = Vec::new();
        let mut k = e as u64;
        for i in 0..d {
            let c = k % p as u64;
            k /= p as u64;
            if c != 0 {
                terms.push((
                    crate::monomial::Monomial::var(1, 0, i as u32),
                    Scalar::Fp { p, val: c },
                ));
            }
        }
        Polynomial::from_terms(ring.field(), 1, terms)
    }

    /// Number of elements of GF(p)[x]/J for a nonzero ideal J: p to the
    /// number of standard monomials of the basis.
    fn quotient_order(p: u32, ideal: &crate::ideal::Ideal) -> Result<u64, Error> {
        if ideal.is_trivial() {
            return Ok(1);
        }
        let gb = ideal.groebner(&MonomialOrder::GrevLex);
        let min_power = gb
            .iter()
            .filter_map(|g| {
                let (m, _) = g.leading_term(&MonomialOrder::GrevLex)?;
                Some(m.exp(0))
            })
            .min()
            .ok_or_else(|| Error::Input("quotient is infinite".into()))?;
        Ok((p as u64).pow(min_power))
    }

    /// Run both pipelines over every singleton and pair generator set of
    /// the ring GF(p)[x]/(f) and compare associated ideals, localizability
    /// and localization orders.
    pub fn run(p: u32, f_src: &str) -> Result<CrosscheckReport, Error> {
        let pres = RingPresentation::parse(FieldSpec::Fp(p), &["x"], &[f_src])?;
        let f = pres.poly(f_src)?;
        let d = f.degree_in(0) as usize;
        let table = {
            let mut coeffs = vec![0u64; d + 1];
            for (m, c) in f.terms() {
                let Scalar::Fp { val, .. } = c else {
                    unreachable!()
                };
                coeffs[m.exp(0) as usize] = *val;
            }
            FiniteRing::gf_poly(p, &coeffs)?
        };
        let n = table.order() as u16;

        let mut sets: Vec<Vec<u16>> = Vec::new();
        for a in 0..n {
            sets.push(vec![a]);
        }
        for a in 0..n {
            for b in (a + 1)..n {
                sets.push(vec![a, b]);
            }
        }

        let mut mismatches = Vec::new();
        for set in &sets {
            let mask: SubsetMask = set.iter().fold(0, |m, &e| m | 1 << e);
            let gens: Vec<Polynomial> = set
                .iter()
                .map(|&e| element_polynomial(p, d, e, &pres))
                .collect();
            let spec = MultSetSpec::Gens(gens);
            let ass_sym = localization::ass_set(&pres, &spec)?;
            let ass_tab = table.ass_bruteforce(mask)?;

            // transport the symbolic ideal to a subset of the table ring
            let mut transported: SubsetMask = 0;
            for e in 0..n {
                if ass_sym.contains(&element_polynomial(p, d, e, &pres)) {
                    transported |= 1 << e;
                }
            }
            if transported != ass_tab {
                mismatches.push(format!(
                    "set {set:?}: associated ideals disagree ({transported:#b} vs {ass_tab:#b})"
                ));
                continue;
            }
            let loc_sym = !ass_sym.is_trivial();
            let loc_tab = ass_tab != table.full_mask();
            if loc_sym != loc_tab {
                mismatches.push(format!("set {set:?}: localizability disagrees"));
                continue;
            }
            let order_sym = quotient_order(p, &ass_sym)?;
            let order_tab = (table.order() / mask_popcount(ass_tab)) as u64;
            if order_sym != order_tab {
                mismatches.push(format!(
                    "set {set:?}: localization orders disagree ({order_sym} vs {order_tab})"
                ));
            }
        }

        let clauses = vec![super::clause(
            "symbolic-matches-table",
            mismatches.is_empty(),
            format!("{} generator sets", sets.len()),
        )];
        Ok(CrosscheckReport {
            instances: sets.len(),
            mismatches,
            clauses,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mask(elems: &[u16]) -> SubsetMask {
        elems.iter().fold(0, |m, &e| m | 1 << e)
    }

    #[test]
    fn builders_validate() {
        assert!(FiniteRing::cyclic(6).is_ok());
        assert!(FiniteRing::cyclic(1).is_ok()); // the zero ring is first class
        let gf4 = FiniteRing::gf_poly(2, &[1, 1, 1]).unwrap(); // x^2+x+1 irreducible
        assert_eq!(gf4.order(), 4);
        assert_eq!(mask_popcount(gf4.units_mask()), 3);
        let dual = FiniteRing::gf_poly(2, &[0, 0, 1]).unwrap(); // x^2
        assert_eq!(dual.order(), 4);
        assert_eq!(mask_popcount(dual.units_mask()), 2);
    }

    #[test]
    fn bad_tables_name_a_witness() {
        let n = 2;
        let add = vec![0, 1, 1, 0];
        let mul = vec![1, 1, 1, 1];
        let err = FiniteRing::from_tables(n, add, mul, 0, 1).unwrap_err();
        assert!(format!("{err}").contains("fails at"));
    }

    #[test]
    fn product_is_isomorphic_to_cyclic() {
        let z2 = FiniteRing::cyclic(2).unwrap();
        let z3 = FiniteRing::cyclic(3).unwrap();
        let prod = FiniteRing::product(&[z2, z3]).unwrap();
        let z6 = FiniteRing::cyclic(6).unwrap();
        assert!(find_isomorphism(&prod, &z6).is_some());
        let z4 = FiniteRing::cyclic(4).unwrap();
        let z2z2 = FiniteRing::product(&[
            FiniteRing::cyclic(2).unwrap(),
            FiniteRing::cyclic(2).unwrap(),
        ])
        .unwrap();
        assert!(find_isomorphism(&z2z2, &z4).is_none());
    }

    #[test]
    fn monoid_closure_examples() {
        let z6 = FiniteRing::cyclic(6).unwrap();
        assert_eq!(z6.monoid_closure(mask(&[2])).unwrap(), mask(&[1, 2, 4]));
        let z4 = FiniteRing::cyclic(4).unwrap();
        assert_eq!(z4.monoid_closure(mask(&[3])).unwrap(), mask(&[1, 3]));
        assert_eq!(z4.monoid_closure(mask(&[1])).unwrap(), mask(&[1]));
    }

    #[test]
    fn ass_bruteforce_examples() {
        let z6 = FiniteRing::cyclic(6).unwrap();
        assert_eq!(
            z6.ass_bruteforce(mask(&[1, 3, 5])).unwrap(),
            mask(&[0, 2, 4])
        );
        assert_eq!(
            z6.ass_bruteforce(mask(&[1, 2, 4, 5])).unwrap(),
            mask(&[0, 3])
        );
        let z4 = FiniteRing::cyclic(4).unwrap();
        assert_eq!(z4.ass_bruteforce(mask(&[2])).unwrap(), z4.full_mask());
    }

    #[test]
    fn localize_examples() {
        let z6 = FiniteRing::cyclic(6).unwrap();
        let (q, _) = z6.localize(mask(&[1, 3, 5])).unwrap();
        assert_eq!(q.order(), 2);
        let (q, _) = z6.localize(mask(&[1, 2, 4, 5])).unwrap();
        assert_eq!(q.order(), 3);
        let z4 = FiniteRing::cyclic(4).unwrap();
        let (q, _) = z4.localize(z4.units_mask()).unwrap();
        assert_eq!(q.order(), 4);
    }

    #[test]
    fn survey_z6() {
        let z6 = FiniteRing::cyclic(6).unwrap();
        let s = survey(&z6, 64).unwrap();
        assert!(s.all_pass(), "{:#?}", s.clauses);
        let max: std::collections::BTreeSet<_> = s.max_localizable.iter().copied().collect();
        assert_eq!(
            max,
            [mask(&[1, 3, 5]), mask(&[1, 2, 4, 5])]
                .into_iter()
                .collect()
        );
        assert_eq!(s.lrad, mask(&[0]));
        assert_eq!(s.completely_localizable, mask(&[1, 5]));
        assert_eq!(s.qa_order, None);
    }

    #[test]
    fn survey_z4() {
        let z4 = FiniteRing::cyclic(4).unwrap();
        let s = survey(&z4, 64).unwrap();
        assert!(s.all_pass(), "{:#?}", s.clauses);
        assert_eq!(s.minimal_primes, vec![mask(&[0, 2])]);
        assert_eq!(s.qa_order, Some(4));
        assert_eq!(s.localizable_elements, mask(&[1, 3]));
    }

    #[test]
    fn survey_field() {
        let gf4 = FiniteRing::gf_poly(2, &[1, 1, 1]).unwrap();
        let s = survey(&gf4, 64).unwrap();
        assert!(s.all_pass());
        assert_eq!(s.max_localizable, vec![gf4.units_mask()]);
        assert_eq!(s.lrad, 1 << gf4.zero());
        assert_eq!(s.qc_order, 4);
        assert_eq!(s.qa_order, Some(4));
    }

    #[test]
    fn crosscheck_examples() {
        // GF(2)[x]/(x^2): the only singleton killing the ring is {x}
        let rep = crosscheck::run(2, "x^2").unwrap();
        assert!(rep.all_pass(), "{:?}", rep.mismatches);
        // GF(2)[x]/(x^2+x): both idempotent localizations show up
        let rep = crosscheck::run(2, "x^2 + x").unwrap();
        assert!(rep.all_pass(), "{:?}", rep.mismatches);
        // GF(3)[x]/(x^2 - x) with a unit generator
        let rep = crosscheck::run(3, "x^2 - x").unwrap();
        assert!(rep.all_pass(), "{:?}", rep.mismatches);
        assert_eq!(rep.instances, 9 + 36);
    }
}
