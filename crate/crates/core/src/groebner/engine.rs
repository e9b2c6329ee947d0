use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, LimitKind, Result};
use crate::polyring::{Monomial, Polynomial, Rational, VariableContext};

use super::basis::GroebnerBasis;
use super::key::{Arith, GenericArith, PackedArith};
use super::order::MonomialOrder;
use super::Budget;

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(
    gens: &[Polynomial],
    order: MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    run(gens, order, budget, None, None, true)
}

/// Degree-truncated run for homogeneous ideals: the result contains every
/// element of the reduced basis of lead degree at most `bound`, so graded
/// quotient data derived from it is exact in all degrees up to the bound.
pub fn buchberger_bounded(
    gens: &[Polynomial],
    order: MonomialOrder,
    budget: &Budget,
    bound: u32,
) -> Result<GroebnerBasis> {
    require_homogeneous(gens)?;
    run(gens, order, budget, Some(bound), None, true)
}

/// Extend a known basis by extra generators. S-pairs inside the seed are
/// skipped because they already reduce to zero over it; only pairs touching
/// the new generators are processed.
pub fn extend_basis(
    seed: &GroebnerBasis,
    extra: &[Polynomial],
    budget: &Budget,
    bound: Option<u32>,
) -> Result<GroebnerBasis> {
    extend_inner(seed, extra, budget, bound, true)
}

/// Like [`extend_basis`], but skips the final tail inter-reduction: the
/// result is a minimal (not reduced) basis whose leading terms, and hence
/// graded quotient data, are exactly those of the reduced one.
pub(crate) fn extend_basis_staircase(
    seed: &GroebnerBasis,
    extra: &[Polynomial],
    budget: &Budget,
    bound: u32,
) -> Result<GroebnerBasis> {
    extend_inner(seed, extra, budget, Some(bound), false)
}

fn extend_inner(
    seed: &GroebnerBasis,
    extra: &[Polynomial],
    budget: &Budget,
    bound: Option<u32>,
    tail_reduce: bool,
) -> Result<GroebnerBasis> {
    match bound {
        Some(b) => {
            require_homogeneous(extra)?;
            require_homogeneous(seed.generators())?;
            if let Some(seed_bound) = seed.degree_bound() {
                if b > seed_bound {
                    return Err(Error::DegreeBound { degree: b, bound: seed_bound });
                }
            }
        }
        None => {
            if seed.degree_bound().is_some() {
                return Err(Error::InvalidInput(
                    "cannot extend a truncated basis without a degree bound".into(),
                ));
            }
        }
    }
    run(extra, seed.order().clone(), budget, bound, Some(seed), tail_reduce)
}

fn require_homogeneous(polys: &[Polynomial]) -> Result<()> {
    if polys.iter().any(|p| !p.is_homogeneous()) {
        return Err(Error::InvalidInput(
            "degree-truncated Buchberger requires homogeneous generators".into(),
        ));
    }
    Ok(())
}

fn run(
    gens: &[Polynomial],
    order: MonomialOrder,
    budget: &Budget,
    bound: Option<u32>,
    seed: Option<&GroebnerBasis>,
    tail_reduce: bool,
) -> Result<GroebnerBasis> {
    let ctx = order.context_arc().clone();
    for p in gens {
        if p.context() != ctx.as_ref() {
            return Err(Error::ContextMismatch("buchberger generators".into()));
        }
    }
    let generators = match PackedArith::try_new(&order, bound) {
        Some(arith) => {
            Engine::new(arith, ctx, &order, *budget, bound)
                .run(gens, seed, tail_reduce)?
        }
        None => Engine::new(GenericArith::new(&order), ctx, &order, *budget, bound)
            .run(gens, seed, tail_reduce)?,
    };
    Ok(GroebnerBasis::assemble_with_flags(generators, order, bound, tail_reduce))
}

/// Basis element: primitive integer coefficients, positive lead, terms
/// descending in the key order.
struct BasisPoly<K> {
    terms: Vec<(K, BigInt)>,
    lead_deg: u32,
}

#[derive(Clone, Copy)]
enum SrcId {
    Basis(usize),
    Input(usize),
}

/// A pending `mult * src[pos..]` summand of the polynomial under reduction.
struct Stream<K> {
    mult_key: K,
    mult_coef: Rational,
    src: SrcId,
    pos: usize,
}

struct HeapItem<K: Ord> {
    key: K,
    sid: usize,
}

impl<K: Ord> PartialEq for HeapItem<K> {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key && self.sid == other.sid
    }
}

impl<K: Ord> Eq for HeapItem<K> {}

impl<K: Ord> PartialOrd for HeapItem<K> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<K: Ord> Ord for HeapItem<K> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key.cmp(&other.key).then(self.sid.cmp(&other.sid))
    }
}

struct Pair<K> {
    i: usize,
    j: usize,
    lcm: K,
}

struct Engine<'o, A: Arith> {
    arith: A,
    ctx: Arc<VariableContext>,
    order: &'o MonomialOrder,
    budget: Budget,
    bound: Option<u32>,
    basis: Vec<BasisPoly<A::Key>>,
    heap: BinaryHeap<Reverse<(u32, u64)>>,
    slab: Vec<Option<Pair<A::Key>>>,
}

impl<'o, A: Arith> Engine<'o, A> {
    fn new(
        arith: A,
        ctx: Arc<VariableContext>,
        order: &'o MonomialOrder,
        budget: Budget,
        bound: Option<u32>,
    ) -> Self {
        Engine {
            arith,
            ctx,
            order,
            budget,
            bound,
            basis: Vec::new(),
            heap: BinaryHeap::new(),
            slab: Vec::new(),
        }
    }

    fn run(
        mut self,
        gens: &[Polynomial],
        seed: Option<&GroebnerBasis>,
        tail_reduce: bool,
    ) -> Result<Vec<Polynomial>> {
        if let Some(s) = seed {
            for g in s.generators() {
                let Some(w) = self.to_basis_poly(g) else { continue };
                if let Some(b) = self.bound {
                    // homogeneous seed: leads above the bound cannot touch
                    // the truncated staircase
                    if w.lead_deg > b {
                        continue;
                    }
                }
                self.basis.push(w);
            }
        }
        for g in gens {
            if let Some(b) = self.bound {
                // same argument as for the seed: a homogeneous generator
                // beyond the bound is invisible below it
                if let Some(d) = g.degree() {
                    if d > b {
                        continue;
                    }
                }
            }
            self.add_generator(g)?;
        }
        self.complete()?;
        self.into_reduced(tail_reduce)
    }

    /// Convert a polynomial into engine form: key-sorted, denominators
    /// cleared, content stripped, positive lead.
    fn to_basis_poly(&self, p: &Polynomial) -> Option<BasisPoly<A::Key>> {
        if p.is_zero() {
            return None;
        }
        let rational: Vec<(A::Key, Rational)> = p
            .terms()
            .iter()
            .map(|(m, c)| (self.arith.encode(m), c.clone()))
            .collect();
        Some(self.assemble(rational))
    }

    fn assemble(&self, mut terms: Vec<(A::Key, Rational)>) -> BasisPoly<A::Key> {
        debug_assert!(!terms.is_empty());
        terms.sort_unstable_by(|(a, _), (b, _)| b.cmp(a));
        let mut denom_lcm = BigInt::one();
        for (_, c) in &terms {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut content = BigInt::zero();
        let scaled: Vec<BigInt> = terms
            .iter()
            .map(|(_, c)| {
                let v = c.numer() * (&denom_lcm / c.denom());
                content = content.gcd(&v);
                v
            })
            .collect();
        if content.is_zero() {
            content = BigInt::one();
        }
        if scaled[0].is_negative() {
            content = -content;
        }
        let out: Vec<(A::Key, BigInt)> = terms
            .into_iter()
            .zip(scaled)
            .map(|((k, _), v)| (k, v / &content))
            .collect();
        let lead_deg = self.arith.deg(&out[0].0);
        BasisPoly { terms: out, lead_deg }
    }

    fn find_reducer(&self, key: &A::Key) -> Option<usize> {
        let deg = self.arith.deg(key);
        self.basis.iter().position(|g| {
            !g.terms.is_empty()
                && g.lead_deg <= deg
                && self.arith.divides(&g.terms[0].0, key)
        })
    }

    /// Heap-based simultaneous division: reduce the sum of the given streams
    /// to normal form against the current basis. Emitted terms come out in
    /// strictly descending key order.
    fn reduce_streams(
        &self,
        inputs: &[Vec<(A::Key, BigInt)>],
        initial: Vec<Stream<A::Key>>,
    ) -> Result<Vec<(A::Key, Rational)>> {
        let mut streams = initial;
        let mut heap: BinaryHeap<HeapItem<A::Key>> = BinaryHeap::new();
        let src = |s: &Stream<A::Key>| -> &[(A::Key, BigInt)] {
            match s.src {
                SrcId::Basis(i) => &self.basis[i].terms,
                SrcId::Input(i) => &inputs[i],
            }
        };
        for (sid, s) in streams.iter().enumerate() {
            if s.pos < src(s).len() {
                let key = self.arith.mul(&s.mult_key, &src(s)[s.pos].0);
                heap.push(HeapItem { key, sid });
            }
        }
        let mut out: Vec<(A::Key, Rational)> = Vec::new();
        while let Some(top) = heap.pop() {
            let key = top.key;
            let mut coef;
            {
                let s = &mut streams[top.sid];
                coef = &s.mult_coef * &src(s)[s.pos].1;
                s.pos += 1;
                if s.pos < src(s).len() {
                    let next = self.arith.mul(&s.mult_key, &src(s)[s.pos].0);
                    heap.push(HeapItem { key: next, sid: top.sid });
                }
            }
            while heap.peek().map_or(false, |n| n.key == key) {
                let it = heap.pop().expect("peeked");
                let s = &mut streams[it.sid];
                coef += &s.mult_coef * &src(s)[s.pos].1;
                s.pos += 1;
                if s.pos < src(s).len() {
                    let next = self.arith.mul(&s.mult_key, &src(s)[s.pos].0);
                    heap.push(HeapItem { key: next, sid: it.sid });
                }
            }
            if coef.is_zero() {
                continue;
            }
            match self.find_reducer(&key) {
                Some(gi) => {
                    let g = &self.basis[gi];
                    let q = coef / g.terms[0].1.clone();
                    let bits = q.numer().bits() + q.denom().bits();
                    if bits > self.budget.max_coeff_bits {
                        return Err(Error::Limit {
                            what: LimitKind::CoefficientBits,
                            reached: bits,
                            cap: self.budget.max_coeff_bits,
                            at_k: None,
                        });
                    }
                    if g.terms.len() > 1 {
                        let mult_key = self.arith.quotient(&g.terms[0].0, &key);
                        let sid = streams.len();
                        let first = self.arith.mul(&mult_key, &g.terms[1].0);
                        streams.push(Stream {
                            mult_key,
                            mult_coef: -q,
                            src: SrcId::Basis(gi),
                            pos: 1,
                        });
                        heap.push(HeapItem { key: first, sid });
                    }
                }
                None => out.push((key, coef)),
            }
        }
        Ok(out)
    }

    fn add_generator(&mut self, g: &Polynomial) -> Result<()> {
        let Some(w) = self.to_basis_poly(g) else {
            return Ok(());
        };
        let unit = self.arith.encode(&Monomial::one(self.ctx.num_vars()));
        let inputs = vec![w.terms];
        let initial = vec![Stream {
            mult_key: unit,
            mult_coef: Rational::one(),
            src: SrcId::Input(0),
            pos: 0,
        }];
        let reduced = self.reduce_streams(&inputs, initial)?;
        self.insert(reduced)
    }

    fn insert(&mut self, reduced: Vec<(A::Key, Rational)>) -> Result<()> {
        if reduced.is_empty() {
            return Ok(());
        }
        let poly = self.assemble(reduced);
        if self.basis.len() as u64 + 1 > self.budget.max_basis {
            return Err(Error::Limit {
                what: LimitKind::BasisSize,
                reached: self.basis.len() as u64 + 1,
                cap: self.budget.max_basis,
                at_k: None,
            });
        }
        let bits = poly
            .terms
            .iter()
            .map(|(_, c)| c.bits())
            .max()
            .unwrap_or(0);
        if bits > self.budget.max_coeff_bits {
            return Err(Error::Limit {
                what: LimitKind::CoefficientBits,
                reached: bits,
                cap: self.budget.max_coeff_bits,
                at_k: None,
            });
        }
        let t = self.basis.len();
        self.basis.push(poly);
        self.update_pairs(t);
        Ok(())
    }

    /// Gebauer-Moeller pair update after appending basis element `t`.
    fn update_pairs(&mut self, t: usize) {
        let lt = self.basis[t].terms[0].0.clone();
        // chain criterion on surviving old pairs
        for slot in self.slab.iter_mut() {
            let Some(pair) = slot else { continue };
            if self.arith.divides(&lt, &pair.lcm) {
                let lcm_it = self.arith.lcm(&self.basis[pair.i].terms[0].0, &lt);
                let lcm_jt = self.arith.lcm(&self.basis[pair.j].terms[0].0, &lt);
                if lcm_it != pair.lcm && lcm_jt != pair.lcm {
                    *slot = None;
                }
            }
        }
        // candidate pairs (i, t), i ascending
        let cands: Vec<(usize, A::Key, bool)> = (0..t)
            .filter(|&i| !self.basis[i].terms.is_empty())
            .map(|i| {
                let li = &self.basis[i].terms[0].0;
                (i, self.arith.lcm(li, &lt), self.arith.coprime(li, &lt))
            })
            .collect();
        // criterion M: drop candidates whose lcm another candidate's lcm
        // strictly divides
        let survives_m = |lcm: &A::Key| {
            !cands
                .iter()
                .any(|(_, other, _)| other != lcm && self.arith.divides(other, lcm))
        };
        // criteria F and B: one representative per lcm class, none at all if
        // some member of the class has coprime leads
        let mut chosen: Vec<(usize, A::Key)> = Vec::new();
        for (i, lcm, _) in &cands {
            if chosen.iter().any(|(_, l)| l == lcm) {
                continue;
            }
            if !survives_m(lcm) {
                continue;
            }
            if cands.iter().any(|(_, l, coprime)| l == lcm && *coprime) {
                continue;
            }
            chosen.push((*i, lcm.clone()));
        }
        for (i, lcm) in chosen {
            let deg = self.arith.deg(&lcm);
            if let Some(b) = self.bound {
                if deg > b {
                    continue;
                }
            }
            let seq = self.slab.len() as u64;
            self.heap.push(Reverse((deg, seq)));
            self.slab.push(Some(Pair { i, j: t, lcm }));
        }
    }

    fn complete(&mut self) -> Result<()> {
        while let Some(Reverse((deg, seq))) = self.heap.pop() {
            if let Some(b) = self.bound {
                // ascending pop order: everything from here on is out of range
                if deg > b {
                    break;
                }
            }
            let Some(pair) = self.slab[seq as usize].take() else {
                continue;
            };
            let reduced = self.reduce_spair(&pair)?;
            self.insert(reduced)?;
        }
        Ok(())
    }

    fn reduce_spair(&self, pair: &Pair<A::Key>) -> Result<Vec<(A::Key, Rational)>> {
        let f = &self.basis[pair.i];
        let g = &self.basis[pair.j];
        let lf = &f.terms[0];
        let lg = &g.terms[0];
        let d = lf.1.gcd(&lg.1);
        // S = (lc_g/d) u_f f - (lc_f/d) u_g g; the lcm heads cancel in the heap
        let initial = vec![
            Stream {
                mult_key: self.arith.quotient(&lf.0, &pair.lcm),
                mult_coef: Rational::from_integer(&lg.1 / &d),
                src: SrcId::Basis(pair.i),
                pos: 0,
            },
            Stream {
                mult_key: self.arith.quotient(&lg.0, &pair.lcm),
                mult_coef: -Rational::from_integer(&lf.1 / &d),
                src: SrcId::Basis(pair.j),
                pos: 0,
            },
        ];
        self.reduce_streams(&[], initial)
    }

    /// Minimalize, optionally tail-reduce, normalize monic and sort by lead.
    fn into_reduced(mut self, tail_reduce: bool) -> Result<Vec<Polynomial>> {
        let mut idx: Vec<usize> = (0..self.basis.len())
            .filter(|&i| !self.basis[i].terms.is_empty())
            .collect();
        idx.sort_by(|&a, &b| {
            self.basis[a].terms[0]
                .0
                .cmp(&self.basis[b].terms[0].0)
                .then(a.cmp(&b))
        });
        let mut kept: Vec<usize> = Vec::new();
        for &i in &idx {
            let lead = &self.basis[i].terms[0].0;
            if !kept
                .iter()
                .any(|&k| self.arith.divides(&self.basis[k].terms[0].0, lead))
            {
                kept.push(i);
            }
        }
        let minimal: Vec<BasisPoly<A::Key>> = kept
            .iter()
            .map(|&i| BasisPoly {
                terms: std::mem::take(&mut self.basis[i].terms),
                lead_deg: self.basis[i].lead_deg,
            })
            .collect();
        self.basis = minimal;
        let mut out: Vec<Polynomial> = Vec::new();
        for i in 0..self.basis.len() {
            let own = std::mem::take(&mut self.basis[i].terms);
            let lead = own[0].clone();
            let tail: Vec<(A::Key, Rational)> = if tail_reduce {
                // lead is irreducible by minimality; normal-form the tail
                let inputs = vec![own[1..].to_vec()];
                let unit = self.arith.encode(&Monomial::one(self.ctx.num_vars()));
                let initial = vec![Stream {
                    mult_key: unit,
                    mult_coef: Rational::one(),
                    src: SrcId::Input(0),
                    pos: 0,
                }];
                self.reduce_streams(&inputs, initial)?
            } else {
                own[1..]
                    .iter()
                    .map(|(k, c)| (k.clone(), Rational::from_integer(c.clone())))
                    .collect()
            };
            let mut rational = Vec::with_capacity(tail.len() + 1);
            rational.push((lead.0.clone(), Rational::from_integer(lead.1.clone())));
            rational.extend(tail);
            // store the (integer) cleaned version for later tail reductions
            self.basis[i] = self.assemble(rational.clone());
            // emit monic
            let lc = rational[0].1.clone();
            let terms = rational
                .into_iter()
                .map(|(k, c)| (self.arith.decode(&k), c / &lc));
            out.push(
                Polynomial::from_terms(self.ctx.clone(), terms).expect("engine terms are valid"),
            );
        }
        Ok(out)
    }
}
