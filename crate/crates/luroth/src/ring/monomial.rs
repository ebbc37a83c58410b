//! Monomials with cached total degree and the monomial orders used by the Gröbner engine.

use std::cmp::Ordering;

/// Hard upper bound on the number of polynomial ring variables.
///
/// 8 covers every ring this crate works in: the P⁵ conic space (6 variables), one
/// auxiliary variable for ideal intersections, and one more for eliminants.
pub const MAX_VARS: usize = 8;

/// A power product with exponents capped at `MAX_VARS` variables.
///
/// The total degree is cached; the cache is an invariant maintained by every constructor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u16,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], deg: 0 }
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables supported");
        let mut m = Monomial::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m.deg = exps.iter().sum();
        m
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn deg(&self) -> u16 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i] + other.exps[i];
        }
        Monomial { exps, deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self` when the division is exact.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = other.exps[i] - self.exps[i];
        }
        Some(Monomial { exps, deg: other.deg - self.deg })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        let mut deg = 0;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].max(other.exps[i]);
            deg += exps[i];
        }
        Monomial { exps, deg }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        let mut deg = 0;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].min(other.exps[i]);
            deg += exps[i];
        }
        Monomial { exps, deg }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Divide out one variable completely (used when dividing by a pivot power).
    pub fn with_exp(&self, i: usize, e: u16) -> Monomial {
        let mut m = *self;
        m.deg = m.deg - m.exps[i] + e;
        m.exps[i] = e;
        m
    }
}

/// A monomial order on a ring with `nvars` variables.
///
/// `Elim(k)` is the block order eliminating the first `k` variables: front blocks are
/// compared by graded reverse lexicographic order, ties broken the same way on the back
/// block. Basis elements free of the first `k` variables generate the elimination ideal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Order {
    Grevlex,
    Lex,
    Elim(usize),
}

impl Order {
    /// Compare monomials; `Greater` means "comes first" (is more leading).
    pub fn cmp(&self, nvars: usize, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            Order::Grevlex => grevlex_cmp(a, b, 0, nvars),
            Order::Lex => {
                for i in 0..nvars {
                    match a.exp(i).cmp(&b.exp(i)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            Order::Elim(k) => {
                grevlex_cmp(a, b, 0, k).then_with(|| grevlex_cmp(a, b, k, nvars))
            }
        }
    }
}

fn grevlex_cmp(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let da: u16 = (lo..hi).map(|i| a.exp(i)).sum();
    let db: u16 = (lo..hi).map(|i| b.exp(i)).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (lo..hi).rev() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => continue,
            // Reverse lexicographic: the larger monomial has the *smaller* trailing
            // exponent difference.
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}
