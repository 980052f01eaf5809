use std::fmt;

/// Largest supported number of variables.
pub const MAX_VARS: usize = 16;

/// A monomial stored as a dense exponent vector with cached total degree.
///
/// Entries past `nvars` are always zero, so derived equality and hashing
/// only look at the meaningful prefix.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        Monomial {
            exps: [0; MAX_VARS],
            nvars: nvars as u8,
            degree: 0,
        }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        let mut m = Self::one(exps.len());
        m.exps[..exps.len()].copy_from_slice(exps);
        m.degree = exps.iter().map(|&e| e as u32).sum();
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_square_free(&self) -> bool {
        self.exponents().iter().all(|&e| e <= 1)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..self.nvars() {
            m.exps[i] += other.exps[i];
        }
        m.degree += other.degree;
        m
    }

    pub fn mul_var(&self, var: usize) -> Monomial {
        let mut m = *self;
        m.exps[var] += 1;
        m.degree += 1;
        m
    }

    /// True when `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.exps[..self.nvars()]
                .iter()
                .zip(&other.exps[..self.nvars()])
                .all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for i in 0..self.nvars() {
            m.exps[i] -= self.exps[i];
        }
        m.degree -= self.degree;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        let mut degree = 0;
        for i in 0..self.nvars() {
            m.exps[i] = m.exps[i].max(other.exps[i]);
            degree += m.exps[i] as u32;
        }
        m.degree = degree;
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        let mut degree = 0;
        for i in 0..self.nvars() {
            m.exps[i] = m.exps[i].min(other.exps[i]);
            degree += m.exps[i] as u32;
        }
        m.degree = degree;
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exponents()
            .iter()
            .zip(other.exponents())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Monomial ideal colon `(self) : other`, i.e. `self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        let mut degree = 0;
        for i in 0..self.nvars() {
            m.exps[i] = self.exps[i].saturating_sub(other.exps[i]);
            degree += m.exps[i] as u32;
        }
        m.degree = degree;
        m
    }

    /// Weighted degree `w . exponents`.
    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.exponents()
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.exponents())
    }
}

/// All monomials of total degree `degree` in `nvars` variables, in lex-decreasing
/// enumeration order (callers sort if they need a specific monomial order).
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; nvars];
    fn rec(var: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        let n = exps.len();
        if var + 1 == n {
            exps[var] = left as u16;
            out.push(Monomial::from_exponents(exps));
            exps[var] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[var] = e as u16;
            rec(var + 1, left - e, exps, out);
        }
        exps[var] = 0;
    }
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, degree, &mut exps, &mut out);
    out
}

/// Binomial coefficient as u128; small arguments only.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `dim_K R_d` for `R = K[x_1..x_n]`.
pub fn count_monomials(nvars: usize, degree: u32) -> u128 {
    if nvars == 0 {
        return (degree == 0) as u128;
    }
    binomial(degree as u64 + nvars as u64 - 1, nvars as u64 - 1)
}
