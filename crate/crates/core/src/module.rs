//! Localization of finitely presented modules, torsion submodules and the
//! exactness condition.
//!
//! A module is the cokernel of a relation matrix over a ring presentation.
//! All submodule computations happen on full preimages in k[x]^rank, with
//! the defining-ideal columns adjoined so that the ambient zero is
//! represented faithfully.

use crate::localization::{self, LocalizationPresentation};
use crate::modgb::{
    canonical_span, in_span, intersect_spans, quotient_span, saturate_span, spans_equal, syzygies,
    VecPoly,
};
use crate::poly::Polynomial;
use crate::ring::{MultSetSpec, RingPresentation};
use crate::Error;

#[derive(Debug, Clone)]
pub struct ModulePresentation {
    pub ring: RingPresentation,
    pub rank: usize,
    /// Relation vectors (columns of the presentation matrix).
    pub relations: Vec<VecPoly>,
}

impl ModulePresentation {
    pub fn new(
        ring: RingPresentation,
        rank: usize,
        relations: Vec<VecPoly>,
    ) -> Result<Self, Error> {
        if rank == 0 {
            return Err(Error::Input("module rank must be positive".into()));
        }
        for r in &relations {
            if r.rank() != rank {
                return Err(Error::Input("relation length differs from rank".into()));
            }
            for e in &r.entries {
                if e.nvars() != ring.nvars() || e.field() != ring.field() {
                    return Err(Error::Input("relation entry signature mismatch".into()));
                }
            }
        }
        Ok(ModulePresentation {
            ring,
            rank,
            relations,
        })
    }

    /// The ideal columns h·e_j spanning the ambient zero submodule.
    pub fn ideal_columns(&self) -> Vec<VecPoly> {
        ideal_columns(&self.ring, self.rank)
    }

    /// Relation span plus ideal columns: the preimage of the zero submodule
    /// of the presented module.
    pub fn zero_span(&self) -> Vec<VecPoly> {
        let mut gens = self.relations.clone();
        gens.extend(self.ideal_columns());
        gens
    }
}

pub fn ideal_columns(ring: &RingPresentation, rank: usize) -> Vec<VecPoly> {
    let field = ring.field();
    let nvars = ring.nvars();
    let mut out = Vec::new();
    for h in ring.ideal().generators() {
        for j in 0..rank {
            let mut v = VecPoly::zero(field, nvars, rank);
            v.entries[j] = h.clone();
            out.push(v);
        }
    }
    out
}

/// Membership of v in the submodule generated by `gens` inside R^rank
/// (the defining ideal acts as zero).
pub fn submodule_member(
    ring: &RingPresentation,
    rank: usize,
    v: &VecPoly,
    gens: &[VecPoly],
) -> Result<bool, Error> {
    if v.rank() != rank || gens.iter().any(|g| g.rank() != rank) {
        return Err(Error::Input("rank mismatch".into()));
    }
    let mut span = gens.to_vec();
    span.extend(ideal_columns(ring, rank));
    Ok(in_span(v, &span))
}

/// (U : f) over the ring presentation.
pub fn module_quotient(
    ring: &RingPresentation,
    rank: usize,
    gens: &[VecPoly],
    f: &Polynomial,
) -> Result<Vec<VecPoly>, Error> {
    if f.is_zero() {
        return Err(Error::Input("module quotient by zero".into()));
    }
    let mut span = gens.to_vec();
    span.extend(ideal_columns(ring, rank));
    Ok(quotient_span(ring.field(), ring.nvars(), rank, &span, f))
}

#[derive(Debug, Clone)]
pub struct TorsionResult {
    pub generators: Vec<VecPoly>,
    /// Set when the multiplicative set is non-localizable: the torsion is
    /// the whole module because the localization is the zero ring.
    pub zero_ring: bool,
}

/// Torsion of M at S: the kernel of M → S⁻¹M, computed as the saturation of
/// the zero span by the product of the generators.
pub fn torsion_submodule(
    module: &ModulePresentation,
    spec: &MultSetSpec,
) -> Result<TorsionResult, Error> {
    let ring = &module.ring;
    let ass = localization::ass_set(ring, spec)?;
    if ass.is_trivial() {
        let whole: Vec<VecPoly> = (0..module.rank)
            .map(|i| VecPoly::basis_vector(ring.field(), ring.nvars(), module.rank, i))
            .collect();
        return Ok(TorsionResult {
            generators: whole,
            zero_ring: true,
        });
    }
    let MultSetSpec::Gens(gens) = spec else {
        return Err(Error::Input(
            "torsion requires a finitely generated multiplicative set".into(),
        ));
    };
    let mut f = Polynomial::one(ring.field(), ring.nvars());
    for g in gens {
        f = f.mul(g);
    }
    let torsion = saturate_span(
        ring.field(),
        ring.nvars(),
        module.rank,
        &module.zero_span(),
        &f,
    );
    // the associated ideal times the module must land inside the torsion
    for a in ass.canonical_gens() {
        for j in 0..module.rank {
            let mut v = VecPoly::zero(ring.field(), ring.nvars(), module.rank);
            v.entries[j] = a.clone();
            if !in_span(&v, &torsion) {
                return Err(Error::Internal(
                    "associated ideal escapes the torsion submodule".into(),
                ));
            }
        }
    }
    Ok(TorsionResult {
        generators: torsion,
        zero_ring: false,
    })
}

#[derive(Debug, Clone)]
pub struct LocalizedModule {
    pub presentation: LocalizationPresentation,
    pub rank: usize,
    /// Relations re-read over the extended ring.
    pub relations: Vec<VecPoly>,
    pub is_zero_module: bool,
}

/// S⁻¹M: the same relation matrix over the adjoined-inverse presentation.
pub fn localize_module(
    module: &ModulePresentation,
    spec: &MultSetSpec,
) -> Result<LocalizedModule, Error> {
    let ring = &module.ring;
    let pres = localization::localize_presentation(ring, spec)?;
    let ext_n = pres.extended.nvars();
    let up: Vec<Option<usize>> = (0..ring.nvars()).map(Some).collect();
    let relations: Vec<VecPoly> = module
        .relations
        .iter()
        .map(|r| r.map_vars(&up, ext_n).unwrap())
        .collect();
    let mut zero_span = relations.clone();
    zero_span.extend(ideal_columns(&pres.extended, module.rank));
    let is_zero_module = (0..module.rank).all(|i| {
        let e = VecPoly::basis_vector(pres.extended.field(), ext_n, module.rank, i);
        in_span(&e, &zero_span)
    });
    Ok(LocalizedModule {
        presentation: pres,
        rank: module.rank,
        relations,
        is_zero_module,
    })
}

/// The exactness condition and an independent injectivity computation for
/// an inclusion M₁ ⊆ M₂ of submodules of R^rank.
///
/// `condition` is whether (M₁ ∩ 𝔞M₂)/𝔞M₁ is S-torsion, with 𝔞 the
/// associated ideal of S. `direct` recomputes whether S⁻¹M₁ → S⁻¹M₂ stays
/// injective, by comparing the syzygies of the M₁ generators over the
/// localized ring against the extension of their syzygies over the base
/// ring. The condition must imply directness; a violation is an internal
/// error.
pub fn exactness_check(
    ring: &RingPresentation,
    rank: usize,
    m1: &[VecPoly],
    m2: &[VecPoly],
    spec: &MultSetSpec,
) -> Result<(bool, bool), Error> {
    for v in m1 {
        if !submodule_member(ring, rank, v, m2)? {
            return Err(Error::Input(
                "first module is not contained in the second".into(),
            ));
        }
    }
    let ass = localization::ass_set(ring, spec)?;
    if ass.is_trivial() {
        return Err(Error::Input("multiplicative set is not localizable".into()));
    }
    let MultSetSpec::Gens(gens) = spec else {
        return Err(Error::Input(
            "exactness requires a finitely generated multiplicative set".into(),
        ));
    };
    let field = ring.field();
    let nvars = ring.nvars();
    let mut f = Polynomial::one(field, nvars);
    for g in gens {
        f = f.mul(g);
    }

    let scale_module = |vectors: &[VecPoly]| -> Vec<VecPoly> {
        let mut out = Vec::new();
        for a in ass.canonical_gens() {
            for w in vectors {
                out.push(w.mul_poly(&a));
            }
        }
        out.extend(ideal_columns(ring, rank));
        out
    };

    let mut m1_full = m1.to_vec();
    m1_full.extend(ideal_columns(ring, rank));
    let am2 = scale_module(m2);
    let am1 = scale_module(m1);

    let meet = intersect_spans(field, nvars, rank, &m1_full, &am2);
    let am1_sat = saturate_span(field, nvars, rank, &am1, &f);
    let condition = meet.iter().all(|w| in_span(w, &am1_sat));

    // independent injectivity computation over the localization
    let pres = localization::localize_presentation(ring, spec)?;
    let ext_n = pres.extended.nvars();
    let up: Vec<Option<usize>> = (0..nvars).map(Some).collect();
    let syz_base = syzygies(field, nvars, rank, m1, &ideal_columns(ring, rank));
    let m1_ext: Vec<VecPoly> = m1.iter().map(|w| w.map_vars(&up, ext_n).unwrap()).collect();
    let syz_loc = syzygies(
        field,
        ext_n,
        rank,
        &m1_ext,
        &ideal_columns(&pres.extended, rank),
    );
    let mut syz_base_ext: Vec<VecPoly> = syz_base
        .iter()
        .map(|w| w.map_vars(&up, ext_n).unwrap())
        .collect();
    syz_base_ext.extend(ideal_columns(&pres.extended, m1.len().max(1)));
    let direct = if m1.is_empty() {
        true
    } else {
        syz_loc.iter().all(|c| in_span(c, &syz_base_ext))
    };

    if condition && !direct {
        return Err(Error::Internal(
            "exactness condition held but the localized inclusion failed to stay injective".into(),
        ));
    }
    Ok((condition, direct))
}

/// Compare the two routes to S⁻¹M: localizing the presentation directly
/// versus first passing to M/𝔞M over R/𝔞 and localizing the image of S.
/// Both live in the same extended ring; the spans must agree.
pub fn compare_localization_routes(
    module: &ModulePresentation,
    spec: &MultSetSpec,
) -> Result<bool, Error> {
    let ring = &module.ring;
    let ass = localization::ass_set(ring, spec)?;
    if ass.is_trivial() {
        return Err(Error::Input("multiplicative set is not localizable".into()));
    }
    let pres = localization::localize_presentation(ring, spec)?;
    let ext_n = pres.extended.nvars();
    let up: Vec<Option<usize>> = (0..ring.nvars()).map(Some).collect();
    let lifted: Vec<VecPoly> = module
        .relations
        .iter()
        .map(|r| r.map_vars(&up, ext_n).unwrap())
        .collect();

    // route 1: relations + (I, s·u − 1) columns
    let mut direct_span = lifted.clone();
    direct_span.extend(ideal_columns(&pres.extended, module.rank));

    // route 2: relations + (ass, s·u − 1) columns (quotient first)
    let quotient_ring = RingPresentation::new(ring.field(), ring.vars().to_vec(), ass.clone())?;
    let pres2 = localization::localize_presentation(&quotient_ring, spec)?;
    if pres2.extended.vars() != pres.extended.vars() {
        return Err(Error::Internal(
            "the two localization routes disagree on variable naming".into(),
        ));
    }
    let mut quotient_span_gens = lifted;
    quotient_span_gens.extend(ideal_columns(&pres2.extended, module.rank));

    Ok(spans_equal(&direct_span, &quotient_span_gens))
}

/// The canonical short sequence 0 → t_S(M) → M → image(M) → 0: torsion
/// generators must vanish in the localized module.
pub fn torsion_vanishes_in_localization(
    module: &ModulePresentation,
    spec: &MultSetSpec,
) -> Result<bool, Error> {
    let torsion = torsion_submodule(module, spec)?;
    if torsion.zero_ring {
        return Ok(true);
    }
    let localized = localize_module(module, spec)?;
    let ext_n = localized.presentation.extended.nvars();
    let up: Vec<Option<usize>> = (0..module.ring.nvars()).map(Some).collect();
    let mut zero_span = localized.relations.clone();
    zero_span.extend(ideal_columns(&localized.presentation.extended, module.rank));
    Ok(torsion
        .generators
        .iter()
        .all(|w| in_span(&w.map_vars(&up, ext_n).unwrap(), &zero_span)))
}

/// Canonical generators of a submodule for display and comparison.
pub fn canonical_submodule(ring: &RingPresentation, rank: usize, gens: &[VecPoly]) -> Vec<VecPoly> {
    let mut span = gens.to_vec();
    span.extend(ideal_columns(ring, rank));
    canonical_span(&span)
}
