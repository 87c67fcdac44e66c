//! The localization calculus for finitely presented commutative rings:
//! associated ideals, the ascending colon chain, adjoined-inverse
//! presentations, element classification, maximal localizable sets, the
//! localization radical, complete and absolute quotient rings, and
//! homomorphism/isomorphism tests between localizations.
//!
//! All ideals returned here are full preimages in the polynomial ring, so
//! the zero ideal of k[x]/I is represented by I itself.

use crate::ideal::{restriction_map, Ideal};
use crate::poly::Polynomial;
use crate::primes::{self, MinimalPrimes};
use crate::ring::{MultSetSpec, RingPresentation, Status, StatusTagged};
use crate::Error;

/// Extended presentation realizing the localization at finitely many
/// generators: one inverse variable and one relation s·u − 1 per generator.
#[derive(Debug, Clone)]
pub struct LocalizationPresentation {
    pub base: RingPresentation,
    pub extended: RingPresentation,
    /// Names of the adjoined inverse variables, one per generator.
    pub inverse_vars: Vec<String>,
    /// The generators being inverted, as polynomials of the base ring.
    pub set_gens: Vec<Polynomial>,
    pub zero_ring: bool,
}

impl LocalizationPresentation {
    /// Lift a base-ring polynomial along the canonical map.
    pub fn lift(&self, f: &Polynomial) -> Polynomial {
        let up: Vec<Option<usize>> = (0..self.base.nvars()).map(Some).collect();
        f.map_vars(&up, self.extended.nvars()).unwrap()
    }

    /// Is the image of a base-ring element a unit of the localization?
    pub fn image_is_unit(&self, f: &Polynomial) -> bool {
        self.extended.ideal().unit_in_quotient(&self.lift(f))
    }
}

fn reduced_gens(ring: &RingPresentation, spec: &MultSetSpec) -> Result<Vec<Polynomial>, Error> {
    match spec {
        MultSetSpec::Gens(gens) => {
            if gens.is_empty() {
                return Err(Error::Input("empty multiplicative generator list".into()));
            }
            for g in gens {
                if g.nvars() != ring.nvars() || g.field() != ring.field() {
                    return Err(Error::Input("generator signature mismatch".into()));
                }
            }
            Ok(gens
                .iter()
                .map(|g| {
                    ring.ideal()
                        .reduce(g, &crate::monomial::MonomialOrder::GrevLex)
                })
                .collect())
        }
        MultSetSpec::PrimeComplement(_) => Err(Error::Input(
            "operation requires a finitely generated multiplicative set".into(),
        )),
    }
}

/// ass(R, S) as a full preimage ideal: (I : (∏ gens)^∞). Any element of the
/// generated monoid divides a power of the product, so saturating by the
/// product captures the whole monoid. The unit ideal encodes a
/// non-localizable set.
pub fn ass_set(ring: &RingPresentation, spec: &MultSetSpec) -> Result<Ideal, Error> {
    let gens = reduced_gens(ring, spec)?;
    if gens.iter().any(|g| g.is_zero()) {
        return Ok(Ideal::unit(ring.field(), ring.nvars()));
    }
    let mut product = Polynomial::one(ring.field(), ring.nvars());
    for g in &gens {
        product = product.mul(g);
    }
    ring.ideal().saturate_poly(&product)
}

/// The ascending chain a₀ = Σ_g (I : g), a_{λ+1} = Σ_g (a_λ : g), with the
/// first stabilization index. The fixpoint equals ass(R, S).
pub fn chain_ideal(ring: &RingPresentation, spec: &MultSetSpec) -> Result<(Ideal, u32), Error> {
    let gens = reduced_gens(ring, spec)?;
    if gens.iter().any(|g| g.is_zero()) {
        return Ok((Ideal::unit(ring.field(), ring.nvars()), 0));
    }
    let step = |ideal: &Ideal| -> Ideal {
        let mut sum = Vec::new();
        for g in &gens {
            sum.extend(
                ideal
                    .colon_poly(g)
                    .expect("nonzero generator")
                    .canonical_gens(),
            );
        }
        Ideal::new(ring.field(), ring.nvars(), sum)
    };
    let mut current = step(ring.ideal());
    let mut lambda = 0u32;
    loop {
        let next = step(&current);
        if next == current {
            return Ok((current, lambda));
        }
        current = next;
        lambda += 1;
    }
}

/// Localizability criterion: ass(R, S) is proper.
pub fn is_localizable_set(ring: &RingPresentation, spec: &MultSetSpec) -> Result<bool, Error> {
    Ok(!ass_set(ring, spec)?.is_trivial())
}

fn fresh_names(taken: &[String], count: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(count);
    let mut k = 0usize;
    while out.len() < count {
        let cand = format!("u{k}");
        if !taken.contains(&cand) && !out.contains(&cand) {
            out.push(cand);
        }
        k += 1;
    }
    out
}

/// Build the adjoined-inverse presentation k[x, u]/(I, s_i·u_i − 1).
pub fn localize_presentation(
    ring: &RingPresentation,
    spec: &MultSetSpec,
) -> Result<LocalizationPresentation, Error> {
    let gens = match spec {
        MultSetSpec::Gens(gens) => gens.clone(),
        MultSetSpec::PrimeComplement(_) => {
            return Err(Error::Input(
                "presentations require finitely many generators".into(),
            ))
        }
    };
    if gens.is_empty() {
        return Err(Error::Input("empty multiplicative generator list".into()));
    }
    let n = ring.nvars();
    let ext_n = n + gens.len();
    let inverse_vars = fresh_names(ring.vars(), gens.len());
    let mut vars = ring.vars().to_vec();
    vars.extend(inverse_vars.iter().cloned());

    let up: Vec<Option<usize>> = (0..n).map(Some).collect();
    let mut ext_gens: Vec<Polynomial> = ring
        .ideal()
        .generators()
        .iter()
        .map(|g| g.map_vars(&up, ext_n).unwrap())
        .collect();
    for (i, s) in gens.iter().enumerate() {
        let u = Polynomial::var(ring.field(), ext_n, n + i);
        let s_ext = s.map_vars(&up, ext_n).unwrap();
        ext_gens.push(s_ext.mul(&u).sub(&Polynomial::one(ring.field(), ext_n)));
    }
    let extended = RingPresentation::new(
        ring.field(),
        vars,
        Ideal::new(ring.field(), ext_n, ext_gens),
    )?;
    let zero_ring = extended.is_zero_ring();
    Ok(LocalizationPresentation {
        base: ring.clone(),
        extended,
        inverse_vars,
        set_gens: gens,
        zero_ring,
    })
}

/// Kernel of the canonical map into the localization, recovered by
/// eliminating the inverse variables from the extended ideal.
pub fn kernel_of_sigma(pres: &LocalizationPresentation) -> Ideal {
    let n = pres.base.nvars();
    let ext_n = pres.extended.nvars();
    let drop: Vec<usize> = (n..ext_n).collect();
    pres.extended
        .ideal()
        .eliminate_into(&drop, n, &restriction_map(ext_n, &drop))
}

/// Where an element sits in the localizability hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementClass {
    Unit,
    CompletelyLocalizable,
    Localizable,
    NonLocalizable,
}

impl ElementClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ElementClass::Unit => "unit",
            ElementClass::CompletelyLocalizable => "completely-localizable",
            ElementClass::Localizable => "localizable",
            ElementClass::NonLocalizable => "non-localizable",
        }
    }
}

/// Classify one element: nilpotents are exactly the non-localizable
/// elements; an element outside every minimal prime is completely
/// localizable; units are singled out first among those.
pub fn classify_element(
    ring: &RingPresentation,
    r: &Polynomial,
) -> Result<StatusTagged<ElementClass>, Error> {
    let ideal = ring.ideal();
    if ideal.radical_member(r) {
        return Ok(StatusTagged::exact(
            ElementClass::NonLocalizable,
            "nilpotence decided by radical membership",
        ));
    }
    if ideal.unit_in_quotient(r) {
        return Ok(StatusTagged::exact(
            ElementClass::Unit,
            "inverse certified by membership of 1 in I + (r)",
        ));
    }
    let mp = primes::minimal_primes(ideal)?;
    let outside_all = mp.primes.iter().all(|p| !p.contains(r));
    let class = if outside_all {
        ElementClass::CompletelyLocalizable
    } else {
        ElementClass::Localizable
    };
    Ok(StatusTagged::tagged(
        class,
        mp.status,
        match mp.status {
            Status::Exact => "minimal primes exact".to_string(),
            _ => "minimal prime list unverified; boundary with completely-localizable uncertain"
                .to_string(),
        },
    ))
}

/// Maximal localizable sets: one prime complement per minimal prime.
pub fn max_localizable_sets(
    ring: &RingPresentation,
) -> Result<StatusTagged<Vec<MultSetSpec>>, Error> {
    if ring.is_zero_ring() {
        return Err(Error::Input("zero ring has no localizable sets".into()));
    }
    let mp = primes::minimal_primes(ring.ideal())?;
    let specs = mp
        .primes
        .iter()
        .map(|p| MultSetSpec::PrimeComplement(p.clone()))
        .collect();
    Ok(StatusTagged::tagged(
        specs,
        mp.status,
        "complements of the computed minimal primes",
    ))
}

/// ass(R, R∖p) for a minimal prime p, by successive saturation at witnesses
/// outside p drawn from the other minimal primes. Exact for radical ideals
/// (where the answer is p itself) and for monomial ideals (through the
/// irreducible decomposition); otherwise a certified lower bound.
pub fn ass_prime_complement(
    ring: &RingPresentation,
    p: &Ideal,
    extra_witnesses: &[Polynomial],
) -> Result<StatusTagged<Ideal>, Error> {
    if p.is_trivial() {
        return Err(Error::Input("prime must be proper".into()));
    }
    let mp = primes::minimal_primes(ring.ideal())?;
    if !mp.primes.iter().any(|q| q == p) {
        return Err(Error::Input(
            "ideal is not in the computed minimal prime list".into(),
        ));
    }
    for w in extra_witnesses {
        if p.contains(w) {
            return Err(Error::Input(
                "extra witness lies in the prime it should avoid".into(),
            ));
        }
    }

    // witness pool: generators of the other minimal primes not lying in p
    let mut witnesses: Vec<Polynomial> = Vec::new();
    for q in &mp.primes {
        if q == p {
            continue;
        }
        for g in q.canonical_gens() {
            if !p.contains(&g) && !witnesses.contains(&g) {
                witnesses.push(g);
            }
        }
    }
    witnesses.extend(extra_witnesses.iter().cloned());

    let mut fix = ring.ideal().clone();
    loop {
        let mut next = fix.clone();
        for w in &witnesses {
            next = next.saturate_poly(w)?;
        }
        if next == fix {
            break;
        }
        fix = next;
    }

    // exactness certificates
    if ring.ideal().is_monomial_ideal() {
        let comps = primes::monomial_irreducible_components(ring.ideal());
        let under: Vec<&Ideal> = comps.iter().filter(|c| p.contains_ideal(c)).collect();
        let mut meet = Ideal::unit(ring.field(), ring.nvars());
        for c in under {
            meet = meet.intersect(c);
        }
        if !meet.contains_ideal(&fix) {
            return Err(Error::Internal(
                "witness saturation escaped the primary component".into(),
            ));
        }
        return Ok(StatusTagged::exact(
            meet,
            "intersection of irreducible monomial components under the prime",
        ));
    }
    if mp.status == Status::Exact {
        let mut radical_meet = Ideal::unit(ring.field(), ring.nvars());
        for q in &mp.primes {
            radical_meet = radical_meet.intersect(q);
        }
        if radical_meet == *ring.ideal() {
            // radical defining ideal: the associated ideal is the prime itself
            if fix != *p {
                return Err(Error::Internal(
                    "saturation fixpoint differs from the prime on a radical ideal".into(),
                ));
            }
            return Ok(StatusTagged::exact(
                fix,
                "defining ideal is radical with exact minimal primes",
            ));
        }
    }
    Ok(StatusTagged::tagged(
        fix,
        Status::LowerBound,
        "witness-pool saturation cannot see embedded components",
    ))
}

/// The localization radical and the associated ideal of the completely
/// localizable set, both as the intersection of the per-prime associated
/// ideals, with the containment chain c ⊆ Lrad ⊆ nilradical asserted.
#[derive(Debug, Clone)]
pub struct LocalizationRadical {
    pub lrad: Ideal,
    pub c_ideal: Ideal,
    pub status: Status,
    pub certificate: String,
}

pub fn localization_radical(ring: &RingPresentation) -> Result<LocalizationRadical, Error> {
    let mp = primes::minimal_primes(ring.ideal())?;
    let mut status = mp.status;
    let mut meet = Ideal::unit(ring.field(), ring.nvars());
    for p in &mp.primes {
        let a = ass_prime_complement(ring, p, &[])?;
        status = status.merge(a.status);
        meet = meet.intersect(&a.value);
    }
    let lrad = meet.clone();
    let c_ideal = meet;

    // containments that must always hold
    if !lrad.contains_ideal(&c_ideal) {
        return Err(Error::Internal("c ⊄ Lrad".into()));
    }
    for g in lrad.canonical_gens() {
        if !ring.ideal().radical_member(&g) {
            return Err(Error::Internal(
                "localization radical escapes the nilradical".into(),
            ));
        }
    }
    Ok(LocalizationRadical {
        lrad,
        c_ideal,
        status,
        certificate:
            "intersection of per-prime associated ideals; containment in the nilradical checked"
                .into(),
    })
}

/// A handle on the local factor R_p: fraction arithmetic happens against the
/// associated ideal of the prime complement.
#[derive(Debug, Clone)]
pub struct LocalFactor {
    pub ring: RingPresentation,
    pub prime: Ideal,
    pub ass: StatusTagged<Ideal>,
}

#[derive(Debug, Clone)]
pub struct LocalFraction {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl LocalFactor {
    pub fn fraction(&self, num: Polynomial, den: Polynomial) -> Result<LocalFraction, Error> {
        if self.prime.contains(&den) {
            return Err(Error::Input(
                "denominator lies in the prime of the site".into(),
            ));
        }
        Ok(LocalFraction { num, den })
    }

    pub fn add(&self, a: &LocalFraction, b: &LocalFraction) -> LocalFraction {
        LocalFraction {
            num: a.num.mul(&b.den).add(&b.num.mul(&a.den)),
            den: a.den.mul(&b.den),
        }
    }

    pub fn mul(&self, a: &LocalFraction, b: &LocalFraction) -> LocalFraction {
        LocalFraction {
            num: a.num.mul(&b.num),
            den: a.den.mul(&b.den),
        }
    }

    pub fn neg(&self, a: &LocalFraction) -> LocalFraction {
        LocalFraction {
            num: a.num.neg(),
            den: a.den.clone(),
        }
    }

    /// a/s = b/t iff a·t − b·s lies in the associated ideal of the site.
    pub fn eq(&self, a: &LocalFraction, b: &LocalFraction) -> StatusTagged<bool> {
        let cross = a.num.mul(&b.den).sub(&b.num.mul(&a.den));
        let ans = self.ass.value.contains(&cross);
        StatusTagged::tagged(
            ans,
            self.ass.status,
            match self.ass.status {
                Status::Exact => "site ideal exact".to_string(),
                _ => "site ideal is a lower bound; a false answer could still flip".to_string(),
            },
        )
    }

    pub fn is_zero(&self, a: &LocalFraction) -> StatusTagged<bool> {
        let zero = LocalFraction {
            num: Polynomial::zero(self.ring.field(), self.ring.nvars()),
            den: Polynomial::one(self.ring.field(), self.ring.nvars()),
        };
        self.eq(a, &zero)
    }

    pub fn is_unit(&self, a: &LocalFraction) -> bool {
        !self.prime.contains(&a.num)
    }
}

/// The complete quotient ring as a product of local factors, one per
/// minimal prime. Requires exact primes and a nilpotent nilradical.
pub fn q_c(ring: &RingPresentation, nilpotency_bound: u32) -> Result<Vec<LocalFactor>, Error> {
    let mp = primes::minimal_primes(ring.ideal())?;
    if mp.status != Status::Exact {
        return Err(Error::Refused(
            "minimal primes are not certified exact".into(),
        ));
    }
    match primes::nilpotency_index(ring.ideal(), nilpotency_bound)? {
        Some(_) => {}
        None => {
            return Err(Error::Refused(format!(
                "nilradical not nilpotent within bound {nilpotency_bound}"
            )))
        }
    }
    let mut factors = Vec::new();
    for p in &mp.primes {
        let ass = ass_prime_complement(ring, p, &[])?;
        factors.push(LocalFactor {
            ring: ring.clone(),
            prime: p.clone(),
            ass,
        });
    }
    Ok(factors)
}

/// Outcome of the absolute quotient ring decision.
#[derive(Debug, Clone)]
pub enum QaOutcome {
    /// A unique maximal localizable set: the local factor at its prime.
    Ring(Box<LocalFactor>),
    /// At least two maximal localizable sets force the zero ring; the two
    /// distinct prime complements serve as the witness pair.
    ZeroRing {
        witnesses: Box<(MultSetSpec, MultSetSpec)>,
    },
}

pub fn q_a(ring: &RingPresentation) -> Result<QaOutcome, Error> {
    let mp = primes::minimal_primes(ring.ideal())?;
    if mp.status != Status::Exact {
        return Err(Error::Refused(
            "minimal primes are not certified exact".into(),
        ));
    }
    if mp.primes.len() == 1 {
        let p = &mp.primes[0];
        let ass = ass_prime_complement(ring, p, &[])?;
        return Ok(QaOutcome::Ring(Box::new(LocalFactor {
            ring: ring.clone(),
            prime: p.clone(),
            ass,
        })));
    }
    Ok(QaOutcome::ZeroRing {
        witnesses: Box::new((
            MultSetSpec::PrimeComplement(mp.primes[0].clone()),
            MultSetSpec::PrimeComplement(mp.primes[1].clone()),
        )),
    })
}

/// Is there a canonical map from the S-localization to the T-localization?
/// Holds exactly when every generator of S becomes a unit over T.
pub fn hom_exists(
    ring: &RingPresentation,
    s: &MultSetSpec,
    t: &MultSetSpec,
) -> Result<bool, Error> {
    if !is_localizable_set(ring, s)? || !is_localizable_set(ring, t)? {
        return Err(Error::Input("both sets must be localizable".into()));
    }
    let pres_t = localize_presentation(ring, t)?;
    let gens_s = match s {
        MultSetSpec::Gens(g) => g.clone(),
        _ => unreachable!("checked by reduced_gens in is_localizable_set"),
    };
    Ok(gens_s.iter().all(|g| pres_t.image_is_unit(g)))
}

/// R-isomorphism of the two localizations: maps both ways and equal
/// associated ideals.
pub fn localization_iso(
    ring: &RingPresentation,
    s: &MultSetSpec,
    t: &MultSetSpec,
) -> Result<bool, Error> {
    Ok(
        hom_exists(ring, s, t)?
            && hom_exists(ring, t, s)?
            && ass_set(ring, s)? == ass_set(ring, t)?,
    )
}

/// Membership of r in the largest multiplicative set with the same
/// localization as S: the preimage of the unit group.
pub fn in_largest_multset(
    ring: &RingPresentation,
    s: &MultSetSpec,
    r: &Polynomial,
) -> Result<bool, Error> {
    if !is_localizable_set(ring, s)? {
        return Err(Error::Input("set is not localizable".into()));
    }
    let pres = localize_presentation(ring, s)?;
    Ok(pres.image_is_unit(r))
}

pub fn minimal_primes_of(ring: &RingPresentation) -> Result<MinimalPrimes, Error> {
    primes::minimal_primes(ring.ideal())
}

/// Nilradical of the presentation as a full preimage ideal.
pub fn nilradical(ring: &RingPresentation) -> Result<StatusTagged<Ideal>, Error> {
    let rad = primes::radical(ring.ideal())?;
    Ok(StatusTagged::tagged(
        rad.radical,
        rad.status,
        "intersection of minimal primes",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn ring(field: FieldSpec, vars: &[&str], gens: &[&str]) -> RingPresentation {
        RingPresentation::parse(field, vars, gens).unwrap()
    }

    fn multset(r: &RingPresentation, gens: &[&str]) -> MultSetSpec {
        MultSetSpec::parse_gens(r, gens).unwrap()
    }

    fn q() -> FieldSpec {
        FieldSpec::Q
    }

    #[test]
    fn ass_set_examples() {
        let r = ring(q(), &["x", "y"], &["x*y"]);
        let a = ass_set(&r, &multset(&r, &["x"])).unwrap();
        assert_eq!(a, Ideal::new(q(), 2, vec![r.poly("y").unwrap()]));

        let r = ring(q(), &["x"], &["x^2"]);
        assert!(ass_set(&r, &multset(&r, &["x"])).unwrap().is_trivial());

        let f5 = FieldSpec::Fp(5);
        let r = ring(f5, &["x"], &["x^2 - x"]);
        let a = ass_set(&r, &multset(&r, &["x"])).unwrap();
        let expected = Ideal::new(f5, 1, vec![r.poly("x - 1").unwrap()]);
        assert_eq!(a, expected);
    }

    #[test]
    fn chain_examples_with_steps() {
        let r = ring(q(), &["x", "y"], &["x*y"]);
        let (a, step) = chain_ideal(&r, &multset(&r, &["x"])).unwrap();
        assert_eq!(a, Ideal::new(q(), 2, vec![r.poly("y").unwrap()]));
        assert_eq!(step, 0);

        let r = ring(q(), &["x"], &["x^3"]);
        let (a, step) = chain_ideal(&r, &multset(&r, &["x"])).unwrap();
        assert!(a.is_trivial());
        assert_eq!(step, 2);

        let r = ring(q(), &["x"], &["x^2"]);
        let (a, step) = chain_ideal(&r, &multset(&r, &["x"])).unwrap();
        assert!(a.is_trivial());
        assert_eq!(step, 1);
    }

    #[test]
    fn presentation_and_kernel() {
        let r = ring(q(), &["x"], &[]);
        let pres = localize_presentation(&r, &multset(&r, &["x"])).unwrap();
        assert!(!pres.zero_ring);
        assert_eq!(pres.extended.vars(), &["x".to_string(), "u0".to_string()]);
        assert!(kernel_of_sigma(&pres).is_zero_ideal());

        let r = ring(q(), &["x"], &["x^2"]);
        let pres = localize_presentation(&r, &multset(&r, &["x"])).unwrap();
        assert!(pres.zero_ring);
        assert!(kernel_of_sigma(&pres).is_trivial());

        let r = ring(q(), &["x", "y"], &["x*y"]);
        let pres = localize_presentation(&r, &multset(&r, &["x"])).unwrap();
        let k = kernel_of_sigma(&pres);
        assert_eq!(k, ass_set(&r, &multset(&r, &["x"])).unwrap());
    }

    #[test]
    fn triple_agreement_on_examples() {
        let cases: Vec<(FieldSpec, Vec<&str>, Vec<&str>, Vec<&str>)> = vec![
            (q(), vec!["x", "y"], vec!["x*y"], vec!["x"]),
            (q(), vec!["x"], vec!["x^3"], vec!["x"]),
            (q(), vec!["x", "y"], vec!["x^2*y"], vec!["x", "y"]),
            (FieldSpec::Fp(3), vec!["x"], vec!["x^2"], vec!["x + 1"]),
        ];
        for (field, vars, gens, sgens) in cases {
            let r = ring(field, &vars, &gens);
            let s = multset(&r, &sgens);
            let a1 = ass_set(&r, &s).unwrap();
            let (a2, _) = chain_ideal(&r, &s).unwrap();
            let a3 = kernel_of_sigma(&localize_presentation(&r, &s).unwrap());
            assert_eq!(a1, a2, "{vars:?} {gens:?} {sgens:?}");
            assert_eq!(a1, a3, "{vars:?} {gens:?} {sgens:?}");
        }
    }

    #[test]
    fn localizability() {
        let r = ring(q(), &["x", "y"], &["x*y"]);
        assert!(is_localizable_set(&r, &multset(&r, &["x"])).unwrap());
        let r2 = ring(q(), &["x"], &["x^2"]);
        assert!(!is_localizable_set(&r2, &multset(&r2, &["x"])).unwrap());
        let r3 = ring(q(), &["x"], &[]);
        assert!(is_localizable_set(&r3, &multset(&r3, &["x", "x + 1"])).unwrap());
    }

    #[test]
    fn classification_examples() {
        let r = ring(q(), &["x", "y"], &["x*y"]);
        assert_eq!(
            classify_element(&r, &r.poly("x").unwrap()).unwrap().value,
            ElementClass::Localizable
        );
        assert_eq!(
            classify_element(&r, &r.poly("x + y").unwrap())
                .unwrap()
                .value,
            ElementClass::CompletelyLocalizable
        );
        assert_eq!(
            classify_element(&r, &r.poly("5").unwrap()).unwrap().value,
            ElementClass::Unit
        );
        let r2 = ring(q(), &["x"], &["x^2"]);
        assert_eq!(
            classify_element(&r2, &r2.poly("x").unwrap()).unwrap().value,
            ElementClass::NonLocalizable
        );
    }

    #[test]
    fn max_sets_and_radical_case() {
        let r = ring(q(), &["x", "y"], &["x*y"]);
        let sets = max_localizable_sets(&r).unwrap();
        assert_eq!(sets.status, Status::Exact);
        assert_eq!(sets.value.len(), 2);

        // ass(S_p) = p for both primes of the radical ideal (x*y)
        let mp = minimal_primes_of(&r).unwrap();
        for p in &mp.primes {
            let a = ass_prime_complement(&r, p, &[]).unwrap();
            assert_eq!(a.status, Status::Exact);
            assert_eq!(&a.value, p);
        }

        let lr = localization_radical(&r).unwrap();
        assert_eq!(lr.status, Status::Exact);
        assert_eq!(lr.lrad, *r.ideal()); // zero in R
        assert_eq!(lr.c_ideal, *r.ideal());
    }

    #[test]
    fn ass_prime_complement_monomial_examples() {
        let r = ring(q(), &["x", "y"], &["x^2*y"]);
        let py = Ideal::new(q(), 2, vec![r.poly("y").unwrap()]);
        let px = Ideal::new(q(), 2, vec![r.poly("x").unwrap()]);
        let ay = ass_prime_complement(&r, &py, &[]).unwrap();
        assert_eq!(ay.status, Status::Exact);
        assert_eq!(ay.value, py);
        let ax = ass_prime_complement(&r, &px, &[]).unwrap();
        assert_eq!(ax.status, Status::Exact);
        assert_eq!(ax.value, Ideal::new(q(), 2, vec![r.poly("x^2").unwrap()]));
    }

    #[test]
    fn embedded_component_stays_exact_for_monomials() {
        // (x^2, x*y): the embedded component at (x, y) must not pollute
        // ass at the lone minimal prime (x)
        let r = ring(q(), &["x", "y"], &["x^2", "x*y"]);
        let px = Ideal::new(q(), 2, vec![r.poly("x").unwrap()]);
        let a = ass_prime_complement(&r, &px, &[]).unwrap();
        assert_eq!(a.status, Status::Exact);
        assert_eq!(a.value, px);
    }

    #[test]
    fn qc_and_qa_examples() {
        let r = ring(q(), &["x", "y"], &["x*y"]);
        let factors = q_c(&r, 64).unwrap();
        assert_eq!(factors.len(), 2);

        let r1 = ring(q(), &["x"], &[]);
        assert_eq!(q_c(&r1, 64).unwrap().len(), 1);
        match q_a(&r1).unwrap() {
            QaOutcome::Ring(f) => assert!(f.prime.is_zero_ideal()),
            _ => panic!("expected the fraction-field handle"),
        }

        match q_a(&r).unwrap() {
            QaOutcome::ZeroRing { witnesses } => {
                let (a, b) = *witnesses;
                assert_ne!(a, b);
            }
            _ => panic!("two maximal localizable sets force the zero ring"),
        }

        let rx2 = ring(q(), &["x"], &["x^2"]);
        match q_a(&rx2).unwrap() {
            QaOutcome::Ring(f) => {
                assert_eq!(f.prime, Ideal::new(q(), 1, vec![rx2.poly("x").unwrap()]))
            }
            _ => panic!("unique minimal prime"),
        }
    }

    #[test]
    fn hom_and_iso_examples() {
        let r = ring(q(), &["x"], &[]);
        let s = multset(&r, &["x"]);
        let t2 = multset(&r, &["x^2"]);
        assert!(localization_iso(&r, &s, &t2).unwrap());

        let t = multset(&r, &["x", "x + 1"]);
        assert!(hom_exists(&r, &s, &t).unwrap());
        assert!(!hom_exists(&r, &t, &s).unwrap());
        assert!(!localization_iso(&r, &s, &t).unwrap());

        let rxy = ring(q(), &["x", "y"], &["x*y"]);
        let sx = multset(&rxy, &["x"]);
        let sxy = multset(&rxy, &["x + y"]);
        assert!(!localization_iso(&rxy, &sx, &sxy).unwrap());
    }

    #[test]
    fn largest_multset_membership() {
        let r = ring(q(), &["x"], &[]);
        assert!(in_largest_multset(&r, &multset(&r, &["x^2"]), &r.poly("x").unwrap()).unwrap());
        assert!(!in_largest_multset(&r, &multset(&r, &["x"]), &r.poly("x + 1").unwrap()).unwrap());

        let rxy = ring(q(), &["x", "y"], &["x*y"]);
        assert!(
            in_largest_multset(&rxy, &multset(&rxy, &["x"]), &rxy.poly("x + y^2").unwrap())
                .unwrap()
        );
    }

    #[test]
    fn fraction_arithmetic_at_sites() {
        let r = ring(q(), &["x", "y"], &["x*y"]);
        let px = Ideal::new(q(), 2, vec![r.poly("x").unwrap()]);
        let ass = ass_prime_complement(&r, &px, &[]).unwrap();
        let site = LocalFactor {
            ring: r.clone(),
            prime: px,
            ass,
        };
        let one = Polynomial::one(q(), 2);
        let x_over_1 = site.fraction(r.poly("x").unwrap(), one.clone()).unwrap();
        assert!(site.is_zero(&x_over_1).value);
        let y_over_1 = site.fraction(r.poly("y").unwrap(), one.clone()).unwrap();
        assert!(!site.is_zero(&y_over_1).value);
        assert!(site.fraction(one.clone(), r.poly("x").unwrap()).is_err());

        // (a/s)·(s/a) = 1 for a, s outside the prime
        let a = r.poly("y + 1").unwrap();
        let s = r.poly("y - 2").unwrap();
        let f1 = site.fraction(a.clone(), s.clone()).unwrap();
        let f2 = site.fraction(s, a).unwrap();
        let prod = site.mul(&f1, &f2);
        let unit = site.fraction(one.clone(), one).unwrap();
        assert!(site.eq(&prod, &unit).value);
    }

    #[test]
    fn unit_generators_give_zero_ass() {
        let r = ring(q(), &["x"], &["x^2"]);
        let s = multset(&r, &["3", "1 + x"]);
        let a = ass_set(&r, &s).unwrap();
        assert_eq!(a, *r.ideal());
        let pres = localize_presentation(&r, &s).unwrap();
        assert!(!pres.zero_ring);
        assert_eq!(kernel_of_sigma(&pres), *r.ideal());
    }
}
