use std::cmp::Ordering;
use std::sync::Arc;

use crate::polyring::{Monomial, VariableContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    /// Weighted graded reverse lexicographic, the default.
    GrevLex,
    /// Plain lexicographic with `x1 > x2 > ...`.
    Lex,
}

/// A total multiplicative monomial order with `1` minimal. Variable
/// precedence is `x1 > ... > xn`; the graded kind weighs degrees by the
/// variable degrees of the originating context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    ctx: Arc<VariableContext>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, ctx: Arc<VariableContext>) -> Self {
        MonomialOrder { kind, ctx }
    }

    pub fn grevlex(ctx: Arc<VariableContext>) -> Self {
        MonomialOrder::new(OrderKind::GrevLex, ctx)
    }

    pub fn lex(ctx: Arc<VariableContext>) -> Self {
        MonomialOrder::new(OrderKind::Lex, ctx)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn context_arc(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn weights(&self) -> &[u32] {
        self.ctx.degrees()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::GrevLex => a.cmp_grevlex(b, self.ctx.degrees()),
            OrderKind::Lex => a.cmp_lex(b),
        }
    }

    /// True when this order sorts terms exactly like the canonical in-memory
    /// order of [`crate::polyring::Polynomial`].
    pub(crate) fn is_canonical(&self) -> bool {
        self.kind == OrderKind::GrevLex
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mons() -> Vec<Monomial> {
        let mut out = Vec::new();
        for a in 0..4u16 {
            for b in 0..4u16 {
                for c in 0..3u16 {
                    out.push(Monomial::new(&[a, b, c]));
                }
            }
        }
        out
    }

    #[test]
    fn orders_are_total_multiplicative_with_one_minimal() {
        let ctx = VariableContext::standard("x", 3).unwrap();
        let one = Monomial::one(3);
        for kind in [OrderKind::GrevLex, OrderKind::Lex] {
            let ord = MonomialOrder::new(kind, ctx.clone());
            let ms = mons();
            for u in &ms {
                if !u.is_one() {
                    assert_eq!(ord.cmp(&one, u), Ordering::Less, "{kind:?}");
                }
                for v in &ms {
                    let c = ord.cmp(u, v);
                    assert_eq!(c, ord.cmp(v, u).reverse());
                    if c == Ordering::Less {
                        // multiplicative: u < v implies uw < vw
                        let w = Monomial::new(&[1, 2, 0]);
                        assert_eq!(ord.cmp(&u.mul(&w), &v.mul(&w)), Ordering::Less);
                    }
                }
            }
        }
    }

    #[test]
    fn weighted_grading_drives_grevlex() {
        // deg(x1) = 4, deg(x2) = 2: x2^3 has weighted degree 6 > deg(x1) = 4
        let ctx = VariableContext::new(vec!["x1".into(), "x2".into()], vec![4, 2]).unwrap();
        let ord = MonomialOrder::grevlex(ctx);
        let x1 = Monomial::new(&[1, 0]);
        let x2cubed = Monomial::new(&[0, 3]);
        assert_eq!(ord.cmp(&x2cubed, &x1), Ordering::Greater);
    }
}
