//! Monomial key arithmetic for the Buchberger engine.
//!
//! The engine is generic over [`Arith`], which packs monomials into totally
//! ordered keys. The fast path packs a monomial into one `u128` whose natural
//! integer order equals the monomial order: grevlex keys carry the weighted
//! degree in the top 16 bits followed by complemented exponent bytes in
//! reverse variable order; lex keys are plain exponent bytes. Multiplication
//! is then integer addition (with a base correction for complemented fields)
//! and divisibility is a SWAR borrow test, so the inner loops never touch
//! exponent vectors.
//!
//! The packing is only used when every monomial the run can produce fits the
//! byte fields, which the caller guarantees via the degree bound of a
//! homogeneous run.

use std::cmp::Ordering;

use crate::polyring::Monomial;

use super::order::{MonomialOrder, OrderKind};

pub(crate) trait Arith {
    type Key: Clone + Ord;

    fn encode(&self, m: &Monomial) -> Self::Key;
    fn decode(&self, k: &Self::Key) -> Monomial;
    fn deg(&self, k: &Self::Key) -> u32;
    fn mul(&self, a: &Self::Key, b: &Self::Key) -> Self::Key;
    /// Does `a` divide `b`?
    fn divides(&self, a: &Self::Key, b: &Self::Key) -> bool;
    /// `b / a`; caller guarantees divisibility.
    fn quotient(&self, a: &Self::Key, b: &Self::Key) -> Self::Key;
    fn lcm(&self, a: &Self::Key, b: &Self::Key) -> Self::Key;
    fn coprime(&self, a: &Self::Key, b: &Self::Key) -> bool;
}

/// Exponent bytes with a free SWAR guard bit.
const FIELD_MAX: u16 = 127;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct PackedKey {
    k: u128,
    deg: u32,
}

pub(crate) struct PackedArith {
    n: usize,
    weights: Vec<u32>,
    kind: OrderKind,
    /// Complement base, one `FIELD_MAX` per exponent byte (grevlex only).
    base: u128,
    /// Guard bits, one per exponent byte.
    guard: u128,
    /// All exponent bytes.
    field_mask: u128,
}

impl PackedArith {
    /// `None` unless every monomial of weighted degree up to `bound` fits the
    /// byte fields.
    pub(crate) fn try_new(order: &MonomialOrder, bound: Option<u32>) -> Option<Self> {
        let ctx = order.context_arc();
        let n = ctx.num_vars();
        let bound = bound?;
        if n > 14 {
            return None;
        }
        let min_w = ctx.degrees().iter().copied().min().unwrap_or(2);
        if bound / min_w > FIELD_MAX as u32 || bound > u16::MAX as u32 / 2 {
            return None;
        }
        let mut base = 0u128;
        let mut guard = 0u128;
        for i in 0..n {
            base |= (FIELD_MAX as u128) << (8 * i);
            guard |= 0x80u128 << (8 * i);
        }
        Some(PackedArith {
            n,
            weights: ctx.degrees().to_vec(),
            kind: order.kind(),
            base,
            guard,
            field_mask: base | guard,
        })
    }

    #[inline]
    fn exp_at(&self, k: u128, var: usize) -> u16 {
        match self.kind {
            OrderKind::GrevLex => FIELD_MAX - ((k >> (8 * var)) & 0xff) as u16,
            OrderKind::Lex => ((k >> (8 * (self.n - 1 - var))) & 0xff) as u16,
        }
    }
}

impl Arith for PackedArith {
    type Key = PackedKey;

    fn encode(&self, m: &Monomial) -> PackedKey {
        let exps = m.exponents();
        debug_assert_eq!(exps.len(), self.n);
        let deg = m.weighted_degree(&self.weights);
        let mut k = 0u128;
        match self.kind {
            OrderKind::GrevLex => {
                for (i, &e) in exps.iter().enumerate() {
                    debug_assert!(e <= FIELD_MAX);
                    k |= ((FIELD_MAX - e) as u128) << (8 * i);
                }
                k |= (deg as u128) << (8 * self.n);
            }
            OrderKind::Lex => {
                for (i, &e) in exps.iter().enumerate() {
                    debug_assert!(e <= FIELD_MAX);
                    k |= (e as u128) << (8 * (self.n - 1 - i));
                }
            }
        }
        PackedKey { k, deg }
    }

    fn decode(&self, key: &PackedKey) -> Monomial {
        let exps: Vec<u16> = (0..self.n).map(|v| self.exp_at(key.k, v)).collect();
        Monomial::new(&exps)
    }

    #[inline]
    fn deg(&self, k: &PackedKey) -> u32 {
        k.deg
    }

    #[inline]
    fn mul(&self, a: &PackedKey, b: &PackedKey) -> PackedKey {
        let k = match self.kind {
            OrderKind::GrevLex => a.k + b.k - self.base,
            OrderKind::Lex => a.k + b.k,
        };
        PackedKey { k, deg: a.deg + b.deg }
    }

    #[inline]
    fn divides(&self, a: &PackedKey, b: &PackedKey) -> bool {
        if a.deg > b.deg {
            return false;
        }
        let (x, y) = match self.kind {
            // complemented fields: a | b iff compl(a) >= compl(b) per field
            OrderKind::GrevLex => (a.k & self.field_mask, b.k & self.field_mask),
            // plain fields: a | b iff b >= a per field
            OrderKind::Lex => (b.k, a.k),
        };
        ((x | self.guard) - y) & self.guard == self.guard
    }

    #[inline]
    fn quotient(&self, a: &PackedKey, b: &PackedKey) -> PackedKey {
        debug_assert!(self.divides(a, b));
        let k = match self.kind {
            OrderKind::GrevLex => b.k - a.k + self.base,
            OrderKind::Lex => b.k - a.k,
        };
        PackedKey { k, deg: b.deg - a.deg }
    }

    fn lcm(&self, a: &PackedKey, b: &PackedKey) -> PackedKey {
        let mut deg = 0u32;
        let mut m = vec![0u16; self.n];
        for (v, slot) in m.iter_mut().enumerate() {
            let e = self.exp_at(a.k, v).max(self.exp_at(b.k, v));
            *slot = e;
            deg += e as u32 * self.weights[v];
        }
        let key = self.encode(&Monomial::new(&m));
        debug_assert_eq!(key.deg, deg);
        key
    }

    fn coprime(&self, a: &PackedKey, b: &PackedKey) -> bool {
        (0..self.n).all(|v| self.exp_at(a.k, v) == 0 || self.exp_at(b.k, v) == 0)
    }
}

/// Fallback for contexts the packing cannot hold: explicit exponent vectors
/// with a cached weighted degree.
#[derive(Debug, Clone, Eq, PartialEq)]
pub(crate) struct GenKey {
    deg: u32,
    kind: OrderKind,
    mon: Monomial,
}

impl Ord for GenKey {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.kind {
            OrderKind::GrevLex => {
                self.deg.cmp(&other.deg).then_with(|| {
                    for (a, b) in self
                        .mon
                        .exponents()
                        .iter()
                        .zip(other.mon.exponents())
                        .rev()
                    {
                        if a != b {
                            return b.cmp(a);
                        }
                    }
                    Ordering::Equal
                })
            }
            OrderKind::Lex => self.mon.cmp_lex(&other.mon),
        }
    }
}

impl PartialOrd for GenKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) struct GenericArith {
    weights: Vec<u32>,
    kind: OrderKind,
}

impl GenericArith {
    pub(crate) fn new(order: &MonomialOrder) -> Self {
        GenericArith { weights: order.weights().to_vec(), kind: order.kind() }
    }
}

impl Arith for GenericArith {
    type Key = GenKey;

    fn encode(&self, m: &Monomial) -> GenKey {
        GenKey { deg: m.weighted_degree(&self.weights), kind: self.kind, mon: m.clone() }
    }

    fn decode(&self, k: &GenKey) -> Monomial {
        k.mon.clone()
    }

    fn deg(&self, k: &GenKey) -> u32 {
        k.deg
    }

    fn mul(&self, a: &GenKey, b: &GenKey) -> GenKey {
        GenKey { deg: a.deg + b.deg, kind: self.kind, mon: a.mon.mul(&b.mon) }
    }

    fn divides(&self, a: &GenKey, b: &GenKey) -> bool {
        a.deg <= b.deg && a.mon.divides(&b.mon)
    }

    fn quotient(&self, a: &GenKey, b: &GenKey) -> GenKey {
        GenKey {
            deg: b.deg - a.deg,
            kind: self.kind,
            mon: a.mon.divide(&b.mon).expect("caller guarantees divisibility"),
        }
    }

    fn lcm(&self, a: &GenKey, b: &GenKey) -> GenKey {
        let mon = a.mon.lcm(&b.mon);
        GenKey { deg: mon.weighted_degree(&self.weights), kind: self.kind, mon }
    }

    fn coprime(&self, a: &GenKey, b: &GenKey) -> bool {
        a.mon.coprime(&b.mon)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::VariableContext;

    fn mons3() -> Vec<Monomial> {
        let mut out = Vec::new();
        for a in 0..5u16 {
            for b in 0..5u16 {
                for c in 0..4u16 {
                    out.push(Monomial::new(&[a, b, c]));
                }
            }
        }
        out
    }

    #[test]
    fn packed_agrees_with_generic() {
        let ctx = VariableContext::new(
            vec!["x1".into(), "x2".into(), "x3".into()],
            vec![2, 4, 2],
        )
        .unwrap();
        for kind in [OrderKind::GrevLex, OrderKind::Lex] {
            let order = MonomialOrder::new(kind, ctx.clone());
            let packed = PackedArith::try_new(&order, Some(40)).unwrap();
            let generic = GenericArith::new(&order);
            let ms = mons3();
            for a in &ms {
                let pa = packed.encode(a);
                let ga = generic.encode(a);
                assert_eq!(packed.decode(&pa), *a);
                assert_eq!(packed.deg(&pa), generic.deg(&ga));
                for b in &ms {
                    let pb = packed.encode(b);
                    let gb = generic.encode(b);
                    assert_eq!(pa.cmp(&pb), ga.cmp(&gb), "cmp {a:?} {b:?} {kind:?}");
                    assert_eq!(
                        packed.divides(&pa, &pb),
                        generic.divides(&ga, &gb),
                        "div {a:?} {b:?}"
                    );
                    assert_eq!(packed.coprime(&pa, &pb), generic.coprime(&ga, &gb));
                    assert_eq!(
                        packed.decode(&packed.mul(&pa, &pb)),
                        generic.decode(&generic.mul(&ga, &gb)).clone(),
                    );
                    assert_eq!(
                        packed.decode(&packed.lcm(&pa, &pb)),
                        generic.decode(&generic.lcm(&ga, &gb)),
                    );
                    if packed.divides(&pa, &pb) {
                        assert_eq!(
                            packed.decode(&packed.quotient(&pa, &pb)),
                            generic.decode(&generic.quotient(&ga, &gb)),
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn packing_eligibility() {
        let ctx = VariableContext::standard("x", 5).unwrap();
        let order = MonomialOrder::grevlex(ctx.clone());
        assert!(PackedArith::try_new(&order, Some(52)).is_some());
        assert!(PackedArith::try_new(&order, None).is_none());
        assert!(PackedArith::try_new(&order, Some(1000)).is_none());
        let wide = VariableContext::standard("x", 15).unwrap();
        assert!(PackedArith::try_new(&MonomialOrder::grevlex(wide), Some(10)).is_none());
    }
}
