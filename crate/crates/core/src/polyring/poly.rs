use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::context::same_context;
use super::{Monomial, Rational, VariableContext};

/// Sparse multivariate polynomial over `Q`.
///
/// Terms are stored without zero coefficients, sorted descending by the
/// weighted graded reverse lexicographic order of the ambient context; that
/// fixed order is also the canonical serialization order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: Arc<VariableContext>,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(ctx: Arc<VariableContext>) -> Self {
        Polynomial { ctx, terms: Vec::new() }
    }

    pub fn one(ctx: Arc<VariableContext>) -> Self {
        Polynomial::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: Arc<VariableContext>, c: Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ctx);
        }
        let n = ctx.num_vars();
        Polynomial { ctx, terms: vec![(Monomial::one(n), c)] }
    }

    pub fn variable(ctx: Arc<VariableContext>, i: usize) -> Result<Self> {
        if i >= ctx.num_vars() {
            return Err(Error::InvalidInput(format!("variable index {i} out of range")));
        }
        let m = Monomial::variable(ctx.num_vars(), i);
        Ok(Polynomial { ctx, terms: vec![(m, Rational::one())] })
    }

    /// Build from arbitrary (monomial, coefficient) pairs; duplicates are
    /// merged and zero coefficients dropped.
    pub fn from_terms(
        ctx: Arc<VariableContext>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Result<Self> {
        let mut map: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            if m.num_vars() != ctx.num_vars() {
                return Err(Error::InvalidInput(
                    "monomial length does not match the context".into(),
                ));
            }
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<(Monomial, Rational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        sort_terms(&mut terms, ctx.degrees());
        Ok(Polynomial { ctx, terms })
    }

    /// The linear form `sum coeffs[i] * x_i`.
    pub fn linear_form(ctx: Arc<VariableContext>, coeffs: &[Rational]) -> Result<Self> {
        if coeffs.len() != ctx.num_vars() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for {} variables",
                coeffs.len(),
                ctx.num_vars()
            )));
        }
        let n = ctx.num_vars();
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Monomial::variable(n, i), c.clone()));
        Polynomial::from_terms(ctx, terms)
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn context_arc(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn same_context(&self, other: &Polynomial) -> bool {
        same_context(&self.ctx, &other.ctx)
    }

    /// Terms in canonical (descending) order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Weighted degree of the polynomial, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| self.ctx.monomial_degree(m))
    }

    /// All terms share one weighted degree. The zero polynomial is
    /// homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = self.ctx.monomial_degree(m0);
                self.terms.iter().all(|(m, _)| self.ctx.monomial_degree(m) == d)
            }
        }
    }

    /// Degree if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_homogeneous() {
            self.degree()
        } else {
            None
        }
    }

    fn check_context(&self, other: &Polynomial, op: &str) -> Result<()> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch(op.to_string()))
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_context(other, "add")?;
        let weights = self.ctx.degrees();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp_grevlex(mb, weights) {
                std::cmp::Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Ok(Polynomial { ctx: self.ctx.clone(), terms: out })
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Polynomial { ctx: self.ctx.clone(), terms }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ctx.clone());
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Polynomial { ctx: self.ctx.clone(), terms }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_context(other, "mul")?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.ctx.clone()));
        }
        let mut map: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                *map.entry(m).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        let mut terms: Vec<(Monomial, Rational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        sort_terms(&mut terms, self.ctx.degrees());
        Ok(Polynomial { ctx: self.ctx.clone(), terms })
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        if k == 0 {
            return Polynomial::one(self.ctx.clone());
        }
        let mut base = self.clone();
        let mut acc: Option<Polynomial> = None;
        let mut k = k;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base).expect("same context"),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.mul(&base).expect("same context");
        }
        acc.expect("k > 0")
    }

    /// Sum of the terms of weighted degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| self.ctx.monomial_degree(m) == d)
            .cloned()
            .collect();
        Polynomial { ctx: self.ctx.clone(), terms }
    }

    /// Apply the ring homomorphism sending the `j`-th variable of `self`'s
    /// context to `images[j]`. Every nonzero image must be homogeneous of the
    /// degree of its variable, so the map preserves the grading; zero images
    /// are allowed and kill the variable.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ctx.num_vars() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.ctx.num_vars()
            )));
        }
        let target = images
            .first()
            .map(|p| p.context_arc().clone())
            .expect("contexts are nonempty");
        for (j, img) in images.iter().enumerate() {
            if !same_context(img.context_arc(), &target) {
                return Err(Error::ContextMismatch("substitution images".into()));
            }
            if !img.is_zero() && img.homogeneous_degree() != Some(self.ctx.degree(j)) {
                return Err(Error::SubstitutionDegree {
                    variable: self.ctx.name(j).to_string(),
                    expected: self.ctx.degree(j),
                });
            }
        }
        // Cache image powers up to the maximal exponent that actually occurs.
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(target.clone()), p.clone()])
            .collect();
        let mut max_exp = vec![0u16; images.len()];
        for (m, _) in &self.terms {
            for (j, &e) in m.exponents().iter().enumerate() {
                max_exp[j] = max_exp[j].max(e);
            }
        }
        for (j, pw) in powers.iter_mut().enumerate() {
            for e in 2..=max_exp[j] as usize {
                let next = pw[e - 1].mul(&images[j])?;
                pw.push(next);
            }
        }
        let mut acc = Polynomial::zero(target.clone());
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target.clone(), c.clone());
            for (j, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[j][e as usize])?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }
}

pub(crate) fn sort_terms(terms: &mut [(Monomial, Rational)], weights: &[u32]) {
    terms.sort_unstable_by(|(a, _), (b, _)| b.cmp_grevlex(a, weights));
}

/// Canonical rational text: `n` when integral, otherwise `n/d`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `n` or `n/d` with optional sign; inverse of [`format_rational`].
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int =
        |t: &str| t.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad integer `{t}`")));
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Rational::new(parse_int(n)?, den))
        }
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form: terms descending in the canonical order,
    /// e.g. `3*x1^2*x2 - 1/2*x2^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = self.ctx.monomial_string(m);
            if mono == "1" {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx2() -> Arc<VariableContext> {
        VariableContext::standard("x", 2).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn var(c: &Arc<VariableContext>, i: usize) -> Polynomial {
        Polynomial::variable(c.clone(), i).unwrap()
    }

    #[test]
    fn add_cancels_and_has_identity() {
        let c = ctx2();
        let (x1, x2) = (var(&c, 0), var(&c, 1));
        let s = x1.add(&x2).unwrap().add(&x1.neg()).unwrap();
        assert_eq!(s, x2);
        let p = x1.mul(&x2).unwrap();
        assert_eq!(p.add(&Polynomial::zero(c.clone())).unwrap(), p);
        // rational normalization: 1/2 x1^2 + 1/2 x1^2 = x1^2
        let half = x1.mul(&x1).unwrap().scale(&q(1, 2));
        let whole = half.add(&half).unwrap();
        assert_eq!(whole, x1.mul(&x1).unwrap());
    }

    #[test]
    fn mul_expands() {
        let c = ctx2();
        let (x1, x2) = (var(&c, 0), var(&c, 1));
        assert_eq!(
            x1.mul(&x2).unwrap().to_string(),
            "x1*x2"
        );
        let p = x1.add(&x2).unwrap();
        assert_eq!(p.mul(&Polynomial::one(c.clone())).unwrap(), p);
        let q = x1.sub(&x2).unwrap();
        let prod = p.mul(&q).unwrap();
        let expect = x1.mul(&x1).unwrap().sub(&x2.mul(&x2).unwrap()).unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = var(&ctx2(), 0);
        let b = var(&VariableContext::standard("y", 2).unwrap(), 0);
        assert!(matches!(a.add(&b), Err(Error::ContextMismatch(_))));
        assert!(matches!(a.mul(&b), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn homogeneous_component_partitions() {
        let c = ctx2();
        let x1 = var(&c, 0);
        let p = x1.add(&x1.mul(&x1).unwrap()).unwrap();
        assert_eq!(p.homogeneous_component(4), x1.mul(&x1).unwrap());
        assert_eq!(p.homogeneous_component(2), x1);
        assert!(p.homogeneous_component(6).is_zero());
        assert!(Polynomial::zero(c.clone()).homogeneous_component(8).is_zero());
        // components reassemble p
        let mut sum = Polynomial::zero(c.clone());
        for d in 0..=4 {
            sum = sum.add(&p.homogeneous_component(d)).unwrap();
        }
        assert_eq!(sum, p);
    }

    #[test]
    fn substitution_examples() {
        // renaming: y1*y2 -> x1*x2
        let yc = VariableContext::standard("y", 2).unwrap();
        let xc = ctx2();
        let p = var(&yc, 0).mul(&var(&yc, 1)).unwrap();
        let images = vec![var(&xc, 0), var(&xc, 1)];
        assert_eq!(p.substitute(&images).unwrap(), var(&xc, 0).mul(&var(&xc, 1)).unwrap());
        // killing a variable
        let p2 = var(&yc, 0).mul(&var(&yc, 0)).unwrap();
        let images2 = vec![Polynomial::zero(xc.clone()), var(&xc, 1)];
        assert!(p2.substitute(&images2).unwrap().is_zero());
        // degree mismatch is rejected
        let bad = vec![var(&xc, 0).mul(&var(&xc, 1)).unwrap(), var(&xc, 1)];
        assert!(matches!(
            p.substitute(&bad),
            Err(Error::SubstitutionDegree { .. })
        ));
    }

    #[test]
    fn display_canonical_form() {
        let c = ctx2();
        let (x1, x2) = (var(&c, 0), var(&c, 1));
        let p = x1
            .pow(2)
            .mul(&x2)
            .unwrap()
            .scale(&q(3, 1))
            .sub(&x2.pow(3).scale(&q(1, 2)))
            .unwrap();
        assert_eq!(p.to_string(), "3*x1^2*x2 - 1/2*x2^3");
        assert_eq!(Polynomial::zero(c.clone()).to_string(), "0");
        let neg = x1.neg().add(&Polynomial::one(c.clone())).unwrap();
        assert_eq!(neg.to_string(), "-x1 + 1");
    }

    #[test]
    fn rational_text_round_trip() {
        for s in ["0", "7", "-3", "5/3", "-11/4"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    // Random polynomials for the ring laws, in 3 variables of degree 2.
    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let ctx = VariableContext::standard("x", 3).unwrap();
        proptest::collection::vec(
            ((0u16..4, 0u16..4, 0u16..4), -6i64..=6),
            0..8,
        )
        .prop_map(move |raw| {
            let terms = raw.into_iter().map(|((a, b, c), n)| {
                (Monomial::new(&[a, b, c]), Rational::from_integer(n.into()))
            });
            Polynomial::from_terms(ctx.clone(), terms).unwrap()
        })
    }

    proptest! {
        #[test]
        fn ring_laws(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            let assoc_l = p.add(&q).unwrap().add(&r).unwrap();
            let assoc_r = p.add(&q.add(&r).unwrap()).unwrap();
            prop_assert_eq!(assoc_l, assoc_r);
            prop_assert_eq!(p.add(&q).unwrap(), q.add(&p).unwrap());
            prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
            let massoc_l = p.mul(&q).unwrap().mul(&r).unwrap();
            let massoc_r = p.mul(&q.mul(&r).unwrap()).unwrap();
            prop_assert_eq!(massoc_l, massoc_r);
            let dist_l = p.mul(&q.add(&r).unwrap()).unwrap();
            let dist_r = p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap();
            prop_assert_eq!(dist_l, dist_r);
        }

        #[test]
        fn substitution_is_multiplicative(p in arb_poly(), q in arb_poly()) {
            // x_i -> linear forms in a fresh 2-variable context
            let target = VariableContext::standard("z", 2).unwrap();
            let images = vec![
                Polynomial::linear_form(target.clone(), &[Rational::from_integer(1.into()), Rational::from_integer(2.into())]).unwrap(),
                Polynomial::linear_form(target.clone(), &[Rational::from_integer((-1).into()), Rational::from_integer(1.into())]).unwrap(),
                Polynomial::zero(target.clone()),
            ];
            let lhs = p.mul(&q).unwrap().substitute(&images).unwrap();
            let rhs = p.substitute(&images).unwrap().mul(&q.substitute(&images).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn homogeneous_product_degree(p in arb_poly(), q in arb_poly()) {
            // deg(pq) = deg p + deg q for homogeneous inputs
            let ph = p.homogeneous_component(4);
            let qh = q.homogeneous_component(6);
            let prod = ph.mul(&qh).unwrap();
            if !ph.is_zero() && !qh.is_zero() {
                prop_assert!(!prod.is_zero()); // Q[x] is a domain
                prop_assert_eq!(prod.homogeneous_degree(), Some(10));
            }
        }
    }
}
