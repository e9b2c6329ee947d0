use smallvec::SmallVec;

/// Exponent vector of a monomial. The length is fixed by the ambient
/// variable context; exponents are small non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
}

impl Monomial {
    pub fn new(exps: &[u16]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, n) }
    }

    /// The monomial `x_i`.
    pub fn variable(n: usize, i: usize) -> Self {
        let mut exps = SmallVec::from_elem(0, n);
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        debug_assert_eq!(self.exps.len(), weights.len());
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum::<u64>()
            .try_into()
            .expect("weighted degree overflow")
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn divide(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(&b, &a)| b - a).collect();
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial { exps }
    }

    /// True when the supports are disjoint (the Buchberger product criterion).
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Graded reverse lexicographic comparison, graded by `weights`.
    ///
    /// Ties in weighted degree are broken at the last differing exponent,
    /// where the larger exponent loses.
    pub fn cmp_grevlex(&self, other: &Monomial, weights: &[u32]) -> std::cmp::Ordering {
        let da = self.weighted_degree(weights);
        let db = other.weighted_degree(weights);
        if da != db {
            return da.cmp(&db);
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        std::cmp::Ordering::Equal
    }

    /// Plain lexicographic comparison with `x1 > x2 > ...`.
    pub fn cmp_lex(&self, other: &Monomial) -> std::cmp::Ordering {
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a != b {
                return a.cmp(b);
            }
        }
        std::cmp::Ordering::Equal
    }

    /// Divisibility prefilter mask: bit (5v + t) is set when exponent of
    /// variable v reaches the t-th threshold. `a.divides(b)` implies
    /// `mask(a) & !mask(b) == 0`, so a nonzero value rejects fast.
    pub(crate) fn divmask(&self) -> u64 {
        const THRESHOLDS: [u16; 5] = [1, 2, 3, 5, 8];
        let mut mask = 0u64;
        for (v, &e) in self.exps.iter().take(12).enumerate() {
            for (t, &th) in THRESHOLDS.iter().enumerate() {
                if e >= th {
                    mask |= 1 << (5 * v + t);
                }
            }
        }
        mask
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_lcm() {
        let a = Monomial::new(&[2, 0, 1]);
        let b = Monomial::new(&[2, 1, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.divide(&b).unwrap(), Monomial::new(&[0, 1, 2]));
        assert_eq!(a.lcm(&b), b);
        assert_eq!(a.mul(&b), Monomial::new(&[4, 1, 4]));
        assert!(Monomial::new(&[1, 0, 0]).coprime(&Monomial::new(&[0, 2, 0])));
        assert!(!a.coprime(&b));
    }

    #[test]
    fn divmask_is_consistent_with_divides() {
        let ms = [
            Monomial::new(&[0, 0]),
            Monomial::new(&[1, 0]),
            Monomial::new(&[4, 2]),
            Monomial::new(&[9, 1]),
            Monomial::new(&[3, 8]),
        ];
        for a in &ms {
            for b in &ms {
                if a.divides(b) {
                    assert_eq!(a.divmask() & !b.divmask(), 0);
                }
            }
        }
    }

    #[test]
    fn weighted_degree() {
        let m = Monomial::new(&[1, 2]);
        assert_eq!(m.weighted_degree(&[2, 2]), 6);
        assert_eq!(m.weighted_degree(&[4, 2]), 8);
    }

    #[test]
    fn grevlex_orders_degree_then_reverse() {
        use std::cmp::Ordering;
        let w = [2, 2];
        let x2 = Monomial::new(&[2, 0]);
        let xy = Monomial::new(&[1, 1]);
        let y2 = Monomial::new(&[0, 2]);
        let x = Monomial::new(&[1, 0]);
        assert_eq!(x2.cmp_grevlex(&xy, &w), Ordering::Greater);
        assert_eq!(xy.cmp_grevlex(&y2, &w), Ordering::Greater);
        assert_eq!(x.cmp_grevlex(&y2, &w), Ordering::Less);
        // lex puts any power of x1 above pure x2 monomials
        assert_eq!(x.cmp_lex(&y2), Ordering::Greater);
    }
}
