//! Monomial ideals: minimal generators, truncations, Hilbert numerators and
//! the Taylor support bound for Betti numbers.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{count_monomials, monomials_of_degree, Monomial};
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Upper bound on the number of generator subsets enumerated for Betti supports.
pub const MAX_TAYLOR_SUBSETS: u128 = 1 << 24;

/// A monomial ideal given by its minimal generators, sorted decreasing in the
/// ring order. No generator divides another; no generators means the zero ideal.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Ring,
    generators: Vec<Monomial>,
}

fn minimal_subset(mut monomials: Vec<Monomial>) -> Vec<Monomial> {
    monomials.sort_by_key(|m| m.degree());
    monomials.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(monomials.len());
    for m in monomials {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Divisibility-minimal generating set of the ideal spanned by `monomials`.
    pub fn minimalize(ring: &Ring, monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let mut generators = minimal_subset(monomials.into_iter().collect());
        generators.sort_by(|a, b| ring.compare(b, a));
        MonomialIdeal {
            ring: ring.clone(),
            generators,
        }
    }

    pub fn zero(ring: &Ring) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            generators: Vec::new(),
        }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> Self {
        Self::minimalize(ring, (0..ring.nvars()).map(|i| ring.var(i)))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.generators.iter().map(|g| g.degree()).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.generators.iter().map(|g| g.degree()).max()
    }

    pub fn is_square_free(&self) -> bool {
        self.generators.iter().all(|g| g.is_square_free())
    }

    pub fn to_polynomials(&self) -> Vec<Polynomial> {
        self.generators
            .iter()
            .map(|m| Polynomial::monomial(&self.ring, *m))
            .collect()
    }

    /// `M_{<d>}`: the ideal generated by the degree-`d` monomials of `M`.
    pub fn trunc_geq(&self, d: u32) -> MonomialIdeal {
        let n = self.ring.nvars();
        let mut found: HashSet<Monomial> = HashSet::new();
        for g in self.generators.iter().filter(|g| g.degree() <= d) {
            for u in monomials_of_degree(n, d - g.degree()) {
                found.insert(g.mul(&u));
            }
        }
        let mut generators: Vec<Monomial> = found.into_iter().collect();
        generators.sort_by(|a, b| self.ring.compare(b, a));
        MonomialIdeal {
            ring: self.ring.clone(),
            generators,
        }
    }

    /// `M_{<=d}`: minimal generators of degree at most `d`.
    pub fn trunc_leq(&self, d: u32) -> MonomialIdeal {
        MonomialIdeal {
            ring: self.ring.clone(),
            generators: self
                .generators
                .iter()
                .copied()
                .filter(|g| g.degree() <= d)
                .collect(),
        }
    }

    /// `m^d * M` for the maximal ideal `m`.
    pub fn scale_by_max_ideal_power(&self, d: u32) -> MonomialIdeal {
        let us = monomials_of_degree(self.ring.nvars(), d);
        let products = self
            .generators
            .iter()
            .flat_map(|g| us.iter().map(move |u| g.mul(u)));
        Self::minimalize(&self.ring, products)
    }

    /// Degree-`d` monomials outside the ideal, decreasing in the ring order.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        self.ring
            .monomials_of_degree(d)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }

    pub fn hilbert_numerator(&self) -> HilbertNumerator {
        let coeffs = numerator_pivot(self.generators.clone());
        HilbertNumerator::new(coeffs, self.ring.nvars())
    }

    /// `HF(d)` of `R/M` or of `M` itself.
    pub fn hilbert_function(&self, subject: HilbertSubject, d: u32) -> u128 {
        let quotient = self.standard_monomials(d).len() as u128;
        match subject {
            HilbertSubject::Quotient => quotient,
            HilbertSubject::Ideal => count_monomials(self.ring.nvars(), d) - quotient,
        }
    }

    /// Pairs `(i, deg lcm(S))` over generator subsets `S` of size `i + 1`, for
    /// `i < min(r, n)`. A superset of the support of the ideal's Betti table.
    pub fn betti_candidate_degrees(&self) -> Result<BTreeSet<(usize, u32)>> {
        let r = self.generators.len();
        let max_size = r.min(self.ring.nvars());
        let subsets: u128 = (1..=max_size as u64)
            .map(|k| crate::monomial::binomial(r as u64, k))
            .sum();
        if subsets > MAX_TAYLOR_SUBSETS {
            return Err(Error::TooManyGenerators {
                generators: r,
                subsets,
            });
        }
        let mut out = BTreeSet::new();
        fn rec(
            gens: &[Monomial],
            start: usize,
            size: usize,
            lcm: Monomial,
            max_size: usize,
            out: &mut BTreeSet<(usize, u32)>,
        ) {
            for k in start..gens.len() {
                let l = lcm.lcm(&gens[k]);
                out.insert((size, l.degree()));
                if size + 1 < max_size {
                    rec(gens, k + 1, size + 1, l, max_size, out);
                }
            }
        }
        if max_size > 0 {
            rec(&self.generators, 0, 0, self.ring.one(), max_size, &mut out);
        }
        Ok(out)
    }

    /// Degree-range superset of the Taylor candidates, for ideals with too
    /// many generators to enumerate subsets: `lcm` of `i + 1` distinct minimal
    /// generators has degree at least `i + min_degree`, at most the sum of the
    /// `i + 1` largest degrees, and at most `deg lcm(all)`.
    pub fn betti_degree_range(&self) -> BTreeSet<(usize, u32)> {
        let mut degrees: Vec<u32> = self.generators.iter().map(|g| g.degree()).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let Some(&lo) = degrees.last() else {
            return BTreeSet::new();
        };
        let top = self
            .generators
            .iter()
            .fold(self.ring.one(), |acc, g| acc.lcm(g))
            .degree();
        let mut out = BTreeSet::new();
        let mut sum = 0;
        for (i, d) in degrees.iter().take(self.ring.nvars()).enumerate() {
            sum += d;
            for j in lo + i as u32..=sum.min(top) {
                out.insert((i, j));
            }
        }
        out
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("(0)");
        }
        let parts: Vec<String> = self
            .generators
            .iter()
            .map(|m| self.ring.fmt_monomial(m))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{self}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HilbertSubject {
    Quotient,
    Ideal,
}

/// `N(t)` with `HS_{R/M}(t) = N(t) / (1 - t)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertNumerator {
    coeffs: Vec<i64>,
    nvars: usize,
}

impl HilbertNumerator {
    pub fn new(mut coeffs: Vec<i64>, nvars: usize) -> Self {
        trim(&mut coeffs);
        HilbertNumerator { coeffs, nvars }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Coefficient of `t^d` in `N(t) / (1 - t)^n`.
    pub fn hilbert_function(&self, d: u32) -> i128 {
        let n = self.nvars as u64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(k, _)| *k as u32 <= d)
            .map(|(k, &c)| {
                let m = d as u64 - k as u64;
                let ways = if n == 0 {
                    (m == 0) as u128
                } else {
                    crate::monomial::binomial(m + n - 1, n - 1)
                };
                c as i128 * ways as i128
            })
            .sum()
    }

    /// Numerator of the Hilbert series of the ideal itself: `1 - N(t)`.
    pub fn ideal_numerator(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.coeffs.len().max(1)];
        v[0] = 1;
        for (k, c) in self.coeffs.iter().enumerate() {
            v[k] -= c;
        }
        trim(&mut v);
        v
    }

    /// Multiplicity of `1 - t` as a factor of `N(t)` (the codimension).
    pub fn codimension(&self) -> usize {
        let mut c = self.coeffs.clone();
        let mut k = 0;
        while !c.is_empty() && c.iter().sum::<i64>() == 0 {
            // synthetic division by (1 - t)
            let mut q = vec![0i64; c.len() - 1];
            let mut acc = 0;
            for i in 0..c.len() - 1 {
                acc += c[i];
                q[i] = acc;
            }
            c = q;
            trim(&mut c);
            k += 1;
        }
        k
    }
}

impl fmt::Display for HilbertNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_t_polynomial(&self.coeffs))
    }
}

pub fn format_t_polynomial(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let abs = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        match (k, abs) {
            (0, _) => out.push_str(&abs.to_string()),
            (1, 1) => out.push('t'),
            (1, _) => out.push_str(&format!("{abs}*t")),
            (_, 1) => out.push_str(&format!("t^{k}")),
            _ => out.push_str(&format!("{abs}*t^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn trim(v: &mut Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, c) in b.iter().enumerate() {
        a[k + shift] += c;
    }
}

/// Pivot recursion `N(M) = N(M + (x)) + t * N(M : x)` where `x` is the
/// variable dividing the most generators, and `N(M' + (x)) = (1 - t) N(M')`
/// for the generators `M'` not involving `x`.
fn numerator_pivot(gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimal_subset(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            acc = poly_mul(&acc, &f);
        }
        trim(&mut acc);
        return acc;
    }
    let n = gens[0].nvars();
    let var = (0..n)
        .max_by_key(|&v| (gens.iter().filter(|g| g.exponent(v) > 0).count(), std::cmp::Reverse(v)))
        .expect("at least one variable");
    let x = Monomial::variable(n, var);
    let without: Vec<Monomial> = gens.iter().copied().filter(|g| g.exponent(var) == 0).collect();
    let colon: Vec<Monomial> = gens.iter().map(|g| g.colon(&x)).collect();
    let mut out = poly_mul(&numerator_pivot(without), &[1, -1]);
    poly_add_shifted(&mut out, &numerator_pivot(colon), 1);
    trim(&mut out);
    out
}
