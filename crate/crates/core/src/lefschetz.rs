//! The Hard Lefschetz test.
//!
//! An element `w` of degree 2 is Hard Lefschetz for an Artinian presentation
//! with socle degree `2m` iff for every `k = 1..m` the degree `m+k` component
//! of `Q[x]/(f_1..f_N, w^k)` vanishes; by Poincare duality of the quotient it
//! is enough to test surjectivity of multiplication, which is exactly this
//! ideal-membership statement. An independent linear-algebra oracle checks
//! the same surjectivity as a matrix rank over `Q`.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::biquotient::GradedAlgebraPresentation;
use crate::error::{Error, Result};
use crate::groebner::{buchberger_bounded, extend_basis, Budget, GroebnerBasis, MonomialOrder, OrderKind};
use crate::linalg;
use crate::polyring::{Monomial, Polynomial, Rational, VariableContext};

/// A degree-2 candidate class. The zero class is allowed (and fails).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaCandidate {
    poly: Polynomial,
}

impl OmegaCandidate {
    pub fn new(poly: Polynomial) -> Result<Self> {
        if !poly.is_zero() && poly.homogeneous_degree() != Some(2) {
            return Err(Error::InvalidInput(
                "a Lefschetz candidate must be homogeneous of degree 2".into(),
            ));
        }
        Ok(OmegaCandidate { poly })
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }
}

/// The distinguished candidate `sum i * x_i`.
pub fn default_omega(pres: &GradedAlgebraPresentation) -> OmegaCandidate {
    let ctx = pres.context_arc().clone();
    let coeffs: Vec<Rational> = (1..=ctx.num_vars() as i64)
        .map(|i| Rational::from_integer(i.into()))
        .collect();
    OmegaCandidate {
        poly: Polynomial::linear_form(ctx, &coeffs).expect("matching lengths"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HlpVerdict {
    pub passes: bool,
    /// Smallest `k` at which surjectivity fails.
    pub failing_k: Option<u32>,
    /// Monomial basis of the offending nonzero component, empty on a pass.
    pub witness_monomials: Vec<Monomial>,
}

impl HlpVerdict {
    fn pass() -> Self {
        HlpVerdict { passes: true, failing_k: None, witness_monomials: Vec::new() }
    }

    fn fail(k: u32, witness: Vec<Monomial>) -> Self {
        debug_assert!(!witness.is_empty());
        HlpVerdict { passes: false, failing_k: Some(k), witness_monomials: witness }
    }
}

#[derive(Debug, Clone)]
pub struct HlpOptions {
    pub budget: Budget,
    pub order: OrderKind,
    /// Adjoin the normal form of `w^k` modulo the relations instead of the
    /// raw power. Generates the same ideal, so the verdict cannot change.
    pub reduce_powers: bool,
    /// Run the independent `k`-checks on the rayon pool. The verdict is the
    /// smallest failing `k` either way.
    pub parallel: bool,
}

impl Default for HlpOptions {
    fn default() -> Self {
        HlpOptions {
            budget: Budget::default(),
            order: OrderKind::GrevLex,
            reduce_powers: false,
            parallel: true,
        }
    }
}

impl HlpOptions {
    pub fn with_budget(budget: Budget) -> Self {
        HlpOptions { budget, ..HlpOptions::default() }
    }
}

/// Truncated Groebner basis of the relations ideal, Artinian-checked.
///
/// The truncation bound `2m + max variable degree` covers every graded query
/// the Lefschetz loop makes, and the vanishing of all components in the
/// window above `2m` certifies the quotient is Artinian with socle degree at
/// most `2m` (standard monomials are closed under division, so a nonzero
/// component beyond the window would leave a trace inside it).
pub fn relations_basis(
    pres: &GradedAlgebraPresentation,
    order: MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    let ctx = pres.context();
    let maxw = ctx.degrees().iter().copied().max().unwrap_or(2);
    let bound = 2 * pres.m() + maxw;
    let gb = buchberger_bounded(pres.relations(), order, budget, bound)?;
    for d in 2 * pres.m() + 1..=bound {
        if gb.graded_quotient_dim(d)? != 0 {
            return Err(Error::NotArtinian { degree: d });
        }
    }
    Ok(gb)
}

fn check_candidate(pres: &GradedAlgebraPresentation, w: &OmegaCandidate) -> Result<()> {
    if w.poly().context() != pres.context() {
        return Err(Error::ContextMismatch("candidate vs. presentation".into()));
    }
    Ok(())
}

/// Does any monomial of weighted degree `d` exist at all? With every
/// variable in even degree this rules out odd `d` without Groebner work.
fn monomials_exist(ctx: &VariableContext, d: u32) -> bool {
    fn rec(weights: &[u32], d: u32) -> bool {
        match weights {
            [] => d == 0,
            [w, rest @ ..] => (0..=d / w).any(|e| rec(rest, d - e * w)),
        }
    }
    rec(ctx.degrees(), d)
}

fn eval_power(
    gb_i: &GroebnerBasis,
    pres: &GradedAlgebraPresentation,
    w: &OmegaCandidate,
    opts: &HlpOptions,
    k: u32,
) -> Result<(u64, Vec<Monomial>)> {
    let d = pres.m() + k;
    if !monomials_exist(pres.context(), d) {
        return Ok((0, Vec::new()));
    }
    let wk = w.poly().pow(k);
    let adjoin = if opts.reduce_powers { gb_i.normal_form(&wk)? } else { wk };
    let (dim, witness) = if adjoin.is_zero() {
        // w^k already lies in the ideal
        let dim = gb_i.graded_quotient_dim(d)?;
        let wit = if dim > 0 { gb_i.graded_quotient_basis(d)? } else { Vec::new() };
        (dim, wit)
    } else {
        let gb_k = extend_basis(gb_i, &[adjoin], &opts.budget, Some(d))
            .map_err(|e| e.with_k(k))?;
        let dim = gb_k.graded_quotient_dim(d)?;
        let wit = if dim > 0 { gb_k.graded_quotient_basis(d)? } else { Vec::new() };
        (dim, wit)
    };
    Ok((dim, witness))
}

/// The ideal-membership Hard Lefschetz test over `k = 1..m`, ascending,
/// reporting the smallest failing `k`. A pass at some `k` never short-circuits
/// the remaining checks.
pub fn is_hard_lefschetz(
    pres: &GradedAlgebraPresentation,
    w: &OmegaCandidate,
    opts: &HlpOptions,
) -> Result<HlpVerdict> {
    check_candidate(pres, w)?;
    let order = MonomialOrder::new(opts.order, pres.context_arc().clone());
    let gb_i = relations_basis(pres, order, &opts.budget)?;
    hlp_with_basis(&gb_i, pres, w, opts)
}

/// The `k`-loop against a prebuilt relations basis (see [`relations_basis`]).
pub fn hlp_with_basis(
    gb_i: &GroebnerBasis,
    pres: &GradedAlgebraPresentation,
    w: &OmegaCandidate,
    opts: &HlpOptions,
) -> Result<HlpVerdict> {
    check_candidate(pres, w)?;
    let m = pres.m();
    if opts.parallel {
        let results: Vec<Result<(u64, Vec<Monomial>)>> = (1..=m)
            .into_par_iter()
            .map(|k| eval_power(gb_i, pres, w, opts, k))
            .collect();
        for (idx, res) in results.into_iter().enumerate() {
            let (dim, witness) = res?;
            if dim > 0 {
                return Ok(HlpVerdict::fail(idx as u32 + 1, witness));
            }
        }
    } else {
        for k in 1..=m {
            let (dim, witness) = eval_power(gb_i, pres, w, opts, k)?;
            if dim > 0 {
                return Ok(HlpVerdict::fail(k, witness));
            }
        }
    }
    Ok(HlpVerdict::pass())
}

/// Independent surjectivity check: assemble the matrix of multiplication by
/// `w^k` from the degree `m-k` monomial basis of `Q[x]/(f_i)` to the degree
/// `m+k` one and compare its rank over `Q` with the target dimension.
pub fn surjectivity_rank_oracle(
    pres: &GradedAlgebraPresentation,
    w: &OmegaCandidate,
    k: u32,
    opts: &HlpOptions,
) -> Result<bool> {
    check_candidate(pres, w)?;
    let order = MonomialOrder::new(opts.order, pres.context_arc().clone());
    let gb_i = relations_basis(pres, order, &opts.budget)?;
    surjectivity_rank_oracle_with(&gb_i, pres, w, k)
}

/// The rank oracle against a prebuilt relations basis.
pub fn surjectivity_rank_oracle_with(
    gb_i: &GroebnerBasis,
    pres: &GradedAlgebraPresentation,
    w: &OmegaCandidate,
    k: u32,
) -> Result<bool> {
    check_candidate(pres, w)?;
    let m = pres.m();
    if k < 1 || k > m {
        return Err(Error::InvalidInput(format!("k = {k} outside 1..={m}")));
    }
    let lo = gb_i.graded_quotient_basis(m - k)?;
    let hi = gb_i.graded_quotient_basis(m + k)?;
    if hi.is_empty() {
        return Ok(true);
    }
    let index: HashMap<&Monomial, usize> =
        hi.iter().enumerate().map(|(i, mon)| (mon, i)).collect();
    let wk = w.poly().pow(k);
    let ctx = pres.context_arc().clone();
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(lo.len());
    for u in &lo {
        let basis_elt = Polynomial::from_terms(
            ctx.clone(),
            [(u.clone(), Rational::from_integer(1.into()))],
        )?;
        let image = gb_i.normal_form(&basis_elt.mul(&wk)?)?;
        let mut row = vec![Rational::from_integer(0.into()); hi.len()];
        for (mon, c) in image.terms() {
            row[*index.get(mon).expect("normal form lives in the standard basis")] = c.clone();
        }
        rows.push(row);
    }
    Ok(linalg::rank(rows) == hi.len())
}

/// Graded dimensions of `Q[x]/(f_i)` for degrees `0..=2m`; odd entries are 0.
pub fn betti_numbers(pres: &GradedAlgebraPresentation, budget: &Budget) -> Result<Vec<u64>> {
    let order = MonomialOrder::grevlex(pres.context_arc().clone());
    let gb_i = relations_basis(pres, order, budget)?;
    betti_with_basis(&gb_i, pres)
}

/// Betti numbers from a prebuilt relations basis.
pub fn betti_with_basis(
    gb_i: &GroebnerBasis,
    pres: &GradedAlgebraPresentation,
) -> Result<Vec<u64>> {
    (0..=2 * pres.m()).map(|d| gb_i.graded_quotient_dim(d)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HlpReport {
    pub verdict: HlpVerdict,
    pub betti: Vec<u64>,
    pub euler: u64,
    pub runtime_ms: u128,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    passes: bool,
    failing_k: Option<u32>,
    witness: Vec<String>,
    betti: &'a [u64],
    euler: u64,
    runtime_ms: u128,
}

impl HlpReport {
    /// `{ "passes": bool, "failing_k": N|null, "witness": [..], "betti": [..],
    ///    "euler": N, "runtime_ms": N }`
    pub fn to_json(&self, pres: &GradedAlgebraPresentation) -> serde_json::Value {
        let ctx = pres.context();
        serde_json::to_value(ReportJson {
            passes: self.verdict.passes,
            failing_k: self.verdict.failing_k,
            witness: self
                .verdict
                .witness_monomials
                .iter()
                .map(|m| ctx.monomial_string(m))
                .collect(),
            betti: &self.betti,
            euler: self.euler,
            runtime_ms: self.runtime_ms,
        })
        .expect("report serializes")
    }
}

/// One-shot verdict plus Betti data, sharing a single relations basis.
pub fn hlp_report(
    pres: &GradedAlgebraPresentation,
    w: &OmegaCandidate,
    opts: &HlpOptions,
) -> Result<HlpReport> {
    let start = Instant::now();
    check_candidate(pres, w)?;
    let order = MonomialOrder::new(opts.order, pres.context_arc().clone());
    let gb_i = relations_basis(pres, order, &opts.budget)?;
    let betti = betti_with_basis(&gb_i, pres)?;
    let euler = betti.iter().sum();
    let verdict = hlp_with_basis(&gb_i, pres, w, opts)?;
    Ok(HlpReport { verdict, betti, euler, runtime_ms: start.elapsed().as_millis() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biquotient::{cohomology_presentation, Family, GroupSpec, TorusSpec};
    use crate::polyring::VariableContext;

    /// The model of CP^1: Q[x]/(x^2), m = 1.
    fn cp1() -> GradedAlgebraPresentation {
        let ctx = VariableContext::standard("x", 1).unwrap();
        let x = Polynomial::variable(ctx.clone(), 0).unwrap();
        GradedAlgebraPresentation::new(ctx, vec![x.mul(&x).unwrap()], 1).unwrap()
    }

    fn su3() -> GradedAlgebraPresentation {
        cohomology_presentation(
            &GroupSpec::new(Family::Su, 3).unwrap(),
            &TorusSpec::sk2(1),
        )
        .unwrap()
    }

    #[test]
    fn default_omega_shape() {
        let pres = su3();
        assert_eq!(default_omega(&pres).poly().to_string(), "x1 + 2*x2");
        let p5 = cohomology_presentation(
            &GroupSpec::new(Family::Sp, 5).unwrap(),
            &TorusSpec::s1(),
        )
        .unwrap();
        assert_eq!(
            default_omega(&p5).poly().to_string(),
            "x1 + 2*x2 + 3*x3 + 4*x4 + 5*x5"
        );
        assert_eq!(default_omega(&cp1()).poly().to_string(), "x1");
    }

    #[test]
    fn candidate_validation() {
        let pres = su3();
        let ctx = pres.context_arc().clone();
        let x1 = Polynomial::variable(ctx.clone(), 0).unwrap();
        assert!(OmegaCandidate::new(x1.clone()).is_ok());
        assert!(OmegaCandidate::new(Polynomial::zero(ctx.clone())).is_ok());
        assert!(OmegaCandidate::new(x1.mul(&x1).unwrap()).is_err());
        assert!(OmegaCandidate::new(x1.add(&Polynomial::one(ctx)).unwrap()).is_err());
    }

    #[test]
    fn cp1_passes_with_x_and_fails_with_zero() {
        let pres = cp1();
        let opts = HlpOptions::default();
        let x = OmegaCandidate::new(Polynomial::variable(pres.context_arc().clone(), 0).unwrap())
            .unwrap();
        let verdict = is_hard_lefschetz(&pres, &x, &opts).unwrap();
        assert!(verdict.passes);
        assert_eq!(verdict.failing_k, None);

        let zero = OmegaCandidate::new(Polynomial::zero(pres.context_arc().clone())).unwrap();
        let verdict = is_hard_lefschetz(&pres, &zero, &opts).unwrap();
        assert!(!verdict.passes);
        assert_eq!(verdict.failing_k, Some(1));
        let ctx = pres.context();
        let witness: Vec<String> = verdict
            .witness_monomials
            .iter()
            .map(|m| ctx.monomial_string(m))
            .collect();
        assert_eq!(witness, vec!["x1"]);
        // the rank oracle agrees on both candidates
        assert!(surjectivity_rank_oracle(&pres, &x, 1, &opts).unwrap());
        assert!(!surjectivity_rank_oracle(&pres, &zero, 1, &opts).unwrap());
    }

    #[test]
    fn su3_passes_and_betti_match() {
        let pres = su3();
        let opts = HlpOptions::default();
        let w = default_omega(&pres);
        let verdict = is_hard_lefschetz(&pres, &w, &opts).unwrap();
        assert!(verdict.passes, "{verdict:?}");
        let betti = betti_numbers(&pres, &Budget::default()).unwrap();
        assert_eq!(betti, vec![1, 0, 2, 0, 2, 0, 1]);
        // oracle agreement at every k
        let order = MonomialOrder::grevlex(pres.context_arc().clone());
        let gb = relations_basis(&pres, order, &Budget::default()).unwrap();
        for k in 1..=3 {
            assert!(surjectivity_rank_oracle_with(&gb, &pres, &w, k).unwrap(), "k={k}");
        }
        // zero candidate fails at k = 1 with the degree-4 staircase as witness
        let zero = OmegaCandidate::new(Polynomial::zero(pres.context_arc().clone())).unwrap();
        let verdict = is_hard_lefschetz(&pres, &zero, &opts).unwrap();
        assert_eq!(verdict.failing_k, Some(1));
        let ctx = pres.context();
        let witness: Vec<String> = verdict
            .witness_monomials
            .iter()
            .map(|m| ctx.monomial_string(m))
            .collect();
        assert_eq!(witness, vec!["x1*x2", "x2^2"]);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let pres = su3();
        let w = default_omega(&pres);
        let seq = HlpOptions { parallel: false, ..HlpOptions::default() };
        let par = HlpOptions { parallel: true, ..HlpOptions::default() };
        assert_eq!(
            is_hard_lefschetz(&pres, &w, &seq).unwrap(),
            is_hard_lefschetz(&pres, &w, &par).unwrap()
        );
        let zero = OmegaCandidate::new(Polynomial::zero(pres.context_arc().clone())).unwrap();
        assert_eq!(
            is_hard_lefschetz(&pres, &zero, &seq).unwrap(),
            is_hard_lefschetz(&pres, &zero, &par).unwrap()
        );
    }

    #[test]
    fn reduced_power_mode_is_equivalent() {
        let pres = su3();
        let w = default_omega(&pres);
        let raw = HlpOptions::default();
        let red = HlpOptions { reduce_powers: true, ..HlpOptions::default() };
        assert_eq!(
            is_hard_lefschetz(&pres, &w, &raw).unwrap(),
            is_hard_lefschetz(&pres, &w, &red).unwrap()
        );
    }

    #[test]
    fn limit_error_carries_k() {
        let pres = cohomology_presentation(
            &GroupSpec::new(Family::Sp, 3).unwrap(),
            &TorusSpec::s1(),
        )
        .unwrap();
        let w = default_omega(&pres);
        // basis cap large enough for the relations basis itself but too small
        // for the extensions
        let mut opts = HlpOptions::default();
        let order = MonomialOrder::grevlex(pres.context_arc().clone());
        let gb_i = relations_basis(&pres, order, &Budget::default()).unwrap();
        opts.budget = Budget { max_basis: gb_i.len() as u64 + 1, max_coeff_bits: 1 << 20 };
        let err = is_hard_lefschetz(&pres, &w, &opts).unwrap_err();
        match err {
            Error::Limit { at_k, .. } => assert!(at_k.is_some()),
            other => panic!("expected limit error, got {other:?}"),
        }
    }

    #[test]
    fn non_artinian_is_rejected() {
        // Q[x1,x2]/(x1^2) is not Artinian; give it a fake socle bookkeeping
        let ctx = VariableContext::standard("x", 2).unwrap();
        let x1 = Polynomial::variable(ctx.clone(), 0).unwrap();
        let x2 = Polynomial::variable(ctx.clone(), 1).unwrap();
        // sum deg f - sum deg x = 4 + 2 - 4 = 2, so m = 1 passes the socle
        // identity, but the quotient is infinite-dimensional
        let pres = GradedAlgebraPresentation::new(
            ctx,
            vec![x1.mul(&x1).unwrap(), x2.clone()],
            1,
        )
        .unwrap();
        // (x1^2, x2) is Artinian though; use (x1^2, x1^2 scaled) instead
        let w = default_omega(&pres);
        let _ = is_hard_lefschetz(&pres, &w, &HlpOptions::default()).unwrap();
        let bad = GradedAlgebraPresentation::new(
            VariableContext::standard("x", 2).unwrap(),
            vec![
                {
                    let c = VariableContext::standard("x", 2).unwrap();
                    let x1 = Polynomial::variable(c.clone(), 0).unwrap();
                    x1.mul(&x1).unwrap()
                },
                {
                    let c = VariableContext::standard("x", 2).unwrap();
                    let x1 = Polynomial::variable(c.clone(), 0).unwrap();
                    x1.mul(&x1).unwrap().scale(&Rational::from_integer(2.into()))
                },
            ],
            2,
        )
        .unwrap();
        let w = default_omega(&bad);
        let err = is_hard_lefschetz(&bad, &w, &HlpOptions::default()).unwrap_err();
        assert!(matches!(err, Error::NotArtinian { .. }));
    }
}
