use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial, Rational, VariableContext};

use super::order::MonomialOrder;

/// A reduced Groebner basis: generators are monic, no term of any generator
/// is divisible by the leading monomial of another, and the set is unique
/// for the pair (ideal, order). A `degree_bound` marks a truncated basis of
/// a homogeneous ideal, valid for graded queries up to that bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
    degree_bound: Option<u32>,
    /// Generator terms re-sorted descending under `order`, leads first.
    work_terms: Vec<Vec<(Monomial, Rational)>>,
    lead_masks: Vec<u64>,
    lead_degs: Vec<u32>,
}

impl GroebnerBasis {
    pub(crate) fn assemble_with_flags(
        generators: Vec<Polynomial>,
        order: MonomialOrder,
        degree_bound: Option<u32>,
        reduced: bool,
    ) -> Self {
        let work_terms: Vec<Vec<(Monomial, Rational)>> = generators
            .iter()
            .map(|g| {
                let mut t = g.terms().to_vec();
                if !order.is_canonical() {
                    t.sort_unstable_by(|(a, _), (b, _)| order.cmp(b, a));
                }
                t
            })
            .collect();
        let lead_masks = work_terms.iter().map(|t| t[0].0.divmask()).collect();
        let lead_degs = work_terms
            .iter()
            .map(|t| t[0].0.weighted_degree(order.weights()))
            .collect();
        GroebnerBasis {
            generators,
            order,
            reduced,
            degree_bound,
            work_terms,
            lead_masks,
            lead_degs,
        }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn degree_bound(&self) -> Option<u32> {
        self.degree_bound
    }

    pub fn context_arc(&self) -> &Arc<VariableContext> {
        self.order.context_arc()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Leading monomial of the `i`-th generator under the basis order.
    pub fn leading_monomial(&self, i: usize) -> &Monomial {
        &self.work_terms[i][0].0
    }

    fn check_context(&self, p: &Polynomial) -> Result<()> {
        if p.context() == self.context_arc().as_ref() {
            Ok(())
        } else {
            Err(Error::ContextMismatch("polynomial vs. basis".into()))
        }
    }

    fn find_reducer(&self, m: &Monomial) -> Option<usize> {
        let mask = !m.divmask();
        let deg = m.weighted_degree(self.order.weights());
        (0..self.work_terms.len()).find(|&i| {
            self.lead_degs[i] <= deg
                && self.lead_masks[i] & mask == 0
                && self.work_terms[i][0].0.divides(m)
        })
    }

    /// Remainder of multivariate division by the basis: no term of the result
    /// is divisible by any leading monomial of the basis.
    ///
    /// On a truncated basis this is only defined for polynomials whose terms
    /// stay within the degree bound; beyond it the truncation could lie.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        self.check_context(p)?;
        if let (Some(b), Some(d)) = (self.degree_bound, p.degree()) {
            if d > b {
                return Err(Error::DegreeBound { degree: d, bound: b });
            }
        }
        let mut cur: Vec<(Monomial, Rational)> = p.terms().to_vec();
        if !self.order.is_canonical() {
            cur.sort_unstable_by(|(a, _), (b, _)| self.order.cmp(b, a));
        }
        let mut out: Vec<(Monomial, Rational)> = Vec::new();
        let mut start = 0;
        while start < cur.len() {
            let (m, c) = cur[start].clone();
            match self.find_reducer(&m) {
                Some(gi) => {
                    let gterms = &self.work_terms[gi];
                    let (glm, glc) = &gterms[0];
                    let factor_mon = glm.divide(&m).expect("reducer divides");
                    let factor_coef = &c / glc;
                    cur = merge_sub(&cur[start..], gterms, &factor_mon, &factor_coef, &self.order);
                    start = 0;
                }
                None => {
                    out.push(cur[start].clone());
                    start += 1;
                }
            }
        }
        Polynomial::from_terms(self.context_arc().clone(), out)
    }

    /// Like [`GroebnerBasis::normal_form`] but reusing the basis verbatim.
    pub(crate) fn order_ref(&self) -> &MonomialOrder {
        &self.order
    }

    /// True iff `p` lies in the ideal, i.e. its normal form vanishes.
    pub fn ideal_contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    fn check_bound(&self, d: u32) -> Result<()> {
        match self.degree_bound {
            Some(b) if d > b => Err(Error::DegreeBound { degree: d, bound: b }),
            _ => Ok(()),
        }
    }

    /// All monomials of weighted degree `d` not divisible by any leading
    /// monomial: a vector-space basis of the degree-`d` component of the
    /// quotient ring. Sorted descending in the basis order.
    pub fn graded_quotient_basis(&self, d: u32) -> Result<Vec<Monomial>> {
        self.check_bound(d)?;
        let mut out = Vec::new();
        self.enumerate_standard(d, &mut |m: &Monomial| out.push(m.clone()));
        out.sort_unstable_by(|a, b| self.order.cmp(b, a));
        Ok(out)
    }

    /// Dimension of the degree-`d` component of the quotient ring.
    pub fn graded_quotient_dim(&self, d: u32) -> Result<u64> {
        self.check_bound(d)?;
        let mut count = 0u64;
        self.enumerate_standard(d, &mut |_| count += 1);
        Ok(count)
    }

    fn enumerate_standard(&self, d: u32, visit: &mut impl FnMut(&Monomial)) {
        let ctx = self.context_arc();
        let n = ctx.num_vars();
        let mut exps = vec![0u16; n];
        self.rec_standard(d, 0, &mut exps, ctx.degrees(), n, visit);
    }

    fn rec_standard(
        &self,
        remaining: u32,
        var: usize,
        exps: &mut Vec<u16>,
        weights: &[u32],
        n: usize,
        visit: &mut impl FnMut(&Monomial),
    ) {
        if var == n - 1 {
            let w = weights[var];
            if remaining % w == 0 && remaining / w <= u16::MAX as u32 {
                exps[var] = (remaining / w) as u16;
                let m = Monomial::new(exps);
                if self.find_reducer(&m).is_none() {
                    visit(&m);
                }
                exps[var] = 0;
            }
            return;
        }
        let w = weights[var];
        for e in 0..=(remaining / w) {
            exps[var] = e as u16;
            self.rec_standard(remaining - e * w, var + 1, exps, weights, n, visit);
        }
        exps[var] = 0;
    }
}
