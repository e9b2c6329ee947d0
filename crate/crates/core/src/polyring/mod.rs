//! Exact multivariate polynomial arithmetic over `Q` with an even weighted
//! grading.
//!
//! All cohomology classes handled by this crate are elements of symmetric
//! algebras `S(s*)` or `S(t* x t*)` with generators in even degrees, so the
//! grading of a [`VariableContext`] assigns every variable a positive even
//! degree and all degree arithmetic is weighted by it.

mod context;
mod monomial;
mod poly;

pub use context::VariableContext;
pub use monomial::Monomial;
pub use poly::{format_rational, parse_rational, Polynomial};

use crate::error::{Error, Result};

/// Arbitrary-precision rational coefficients, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// The `i`-th elementary symmetric polynomial evaluated at `args`.
///
/// Uses the recurrence `e_i(a_1..a_n) = a_n e_{i-1}(a_1..a_{n-1}) + e_i(a_1..a_{n-1})`,
/// with `e_0 = 1` and `e_i = 0` for `i > n`.
pub fn elementary_symmetric(i: usize, args: &[Polynomial]) -> Result<Polynomial> {
    let first = args
        .first()
        .ok_or_else(|| Error::InvalidInput("elementary_symmetric needs at least one argument".into()))?;
    let ctx = first.context_arc().clone();
    for a in args {
        if !a.same_context(first) {
            return Err(Error::ContextMismatch(
                "elementary_symmetric arguments".into(),
            ));
        }
    }
    if i == 0 {
        return Ok(Polynomial::one(ctx));
    }
    if i > args.len() {
        return Ok(Polynomial::zero(ctx));
    }
    // Row of the Pascal-style recurrence: e[j] after consuming a prefix of args.
    let mut e: Vec<Polynomial> = Vec::with_capacity(i + 1);
    e.push(Polynomial::one(ctx.clone()));
    for _ in 0..i {
        e.push(Polynomial::zero(ctx.clone()));
    }
    for a in args {
        for j in (1..=i).rev() {
            let t = e[j - 1].mul(a)?;
            e[j] = e[j].add(&t)?;
        }
    }
    Ok(e.pop().expect("row is nonempty"))
}
