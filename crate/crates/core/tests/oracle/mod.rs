//! Reference computations that share no code with the library beyond parsing.
//!
//! Graded pieces of `I` are spanned directly by monomial multiples of the
//! generators and row reduced densely, so no Groebner basis is involved.
//! Betti numbers come from the Koszul complex on `R/I` built on top of that.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use degen_core::{IdealHandle, MonomialIdeal};

pub type Exps = Vec<u16>;

#[derive(Debug, Clone)]
pub struct Ideal {
    pub n: usize,
    pub p: u64,
    pub gens: Vec<Vec<(Exps, u64)>>,
}

impl Ideal {
    pub fn from_handle(h: &IdealHandle) -> Self {
        let gens = h
            .generators()
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                g.terms()
                    .iter()
                    .map(|(c, m)| (m.exponents().to_vec(), c.value() as u64))
                    .collect()
            })
            .collect();
        Ideal {
            n: h.ring().nvars(),
            p: h.ring().characteristic() as u64,
            gens,
        }
    }

    pub fn from_monomials(n: usize, p: u64, gens: &[Exps]) -> Self {
        Ideal {
            n,
            p,
            gens: gens.iter().map(|m| vec![(m.clone(), 1)]).collect(),
        }
    }
}

pub fn deg(m: &[u16]) -> u32 {
    m.iter().map(|&e| e as u32).sum()
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn monomials(n: usize, d: u32) -> Vec<Exps> {
    fn go(n: usize, left: u32, cur: &mut Exps, out: &mut Vec<Exps>) {
        if cur.len() == n - 1 {
            cur.push(left as u16);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e as u16);
            go(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, d, &mut Vec::new(), &mut out);
    out
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Fully reduced row echelon form: `(pivot column, row)` with unit pivots.
fn rref(mut rows: Vec<Vec<u64>>, p: u64) -> Vec<(usize, Vec<u64>)> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut r0 = 0;
    for c in 0..ncols {
        let Some(k) = (r0..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r0, k);
        let inv = inv_mod(rows[r0][c], p);
        for x in rows[r0].iter_mut() {
            *x = *x * inv % p;
        }
        let piv = rows[r0].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r0 && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&piv) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        r0 += 1;
    }
    for (k, row) in rows.into_iter().take(r0).enumerate() {
        let c = row.iter().position(|&x| x != 0).unwrap();
        let _ = k;
        pivots.push((c, row));
    }
    pivots
}

pub fn rank(rows: Vec<Vec<u64>>, p: u64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rref(rows, p).len()
}

/// `R_a / I_a` with a monomial basis of non-pivot columns.
struct Piece {
    index: HashMap<Exps, usize>,
    pivots: Vec<(usize, Vec<u64>)>,
    /// column of `R_a` for each quotient coordinate
    basis: Vec<usize>,
    coord: HashMap<usize, usize>,
}

pub struct Oracle {
    ideal: Ideal,
    pieces: HashMap<u32, Piece>,
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl Oracle {
    pub fn new(ideal: Ideal) -> Self {
        Oracle {
            ideal,
            pieces: HashMap::new(),
        }
    }

    fn piece(&mut self, a: u32) -> &Piece {
        if !self.pieces.contains_key(&a) {
            let n = self.ideal.n;
            let p = self.ideal.p;
            let mons = monomials(n, a);
            let index: HashMap<Exps, usize> =
                mons.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
            let mut rows = Vec::new();
            for g in &self.ideal.gens {
                let dg = deg(&g[0].0);
                if dg > a {
                    continue;
                }
                for u in monomials(n, a - dg) {
                    let mut row = vec![0u64; mons.len()];
                    for (m, c) in g {
                        let prod: Exps = m.iter().zip(&u).map(|(x, y)| x + y).collect();
                        let k = index[&prod];
                        row[k] = (row[k] + c) % p;
                    }
                    rows.push(row);
                }
            }
            let pivots = if rows.is_empty() { Vec::new() } else { rref(rows, p) };
            let pivot_cols: Vec<usize> = pivots.iter().map(|x| x.0).collect();
            let basis: Vec<usize> = (0..mons.len()).filter(|c| !pivot_cols.contains(c)).collect();
            let coord = basis.iter().enumerate().map(|(k, &c)| (c, k)).collect();
            self.pieces.insert(
                a,
                Piece {
                    index,
                    pivots,
                    basis,
                    coord,
                },
            );
        }
        &self.pieces[&a]
    }

    /// `dim_K I_a`.
    pub fn ideal_dim(&mut self, a: u32) -> usize {
        self.piece(a).pivots.len()
    }

    /// `dim_K (R/I)_a`.
    pub fn quotient_dim(&mut self, a: u32) -> usize {
        self.piece(a).basis.len()
    }

    /// Coordinates in `(R/I)_a` of the class of the monomial `m`.
    fn reduce(&mut self, m: &Exps) -> Vec<(usize, u64)> {
        let p = self.ideal.p;
        let piece = self.piece(deg(m));
        let col = piece.index[m];
        if let Some(&k) = piece.coord.get(&col) {
            return vec![(k, 1)];
        }
        // m is a pivot column: m = -(sum of the row's non-pivot entries)
        let row = &piece.pivots.iter().find(|(c, _)| *c == col).unwrap().1;
        row.iter()
            .enumerate()
            .filter(|&(c, &v)| c != col && v != 0)
            .map(|(c, &v)| (piece.coord[&c], (p - v) % p))
            .collect()
    }

    /// Rank of the Koszul differential `K_i (x) (R/I)_{j-i} -> K_{i-1} (x) (R/I)_{j-i+1}`.
    fn koszul_rank(&mut self, i: usize, j: u32) -> usize {
        let n = self.ideal.n;
        let p = self.ideal.p;
        if i == 0 || i > n || (j as i64) < i as i64 {
            return 0;
        }
        let a = j - i as u32;
        let src_basis: Vec<Exps> = {
            let piece = self.piece(a);
            let mons = monomials(n, a);
            piece.basis.iter().map(|&c| mons[c].clone()).collect()
        };
        let tgt_dim = self.quotient_dim(a + 1);
        let tgt_sets = subsets(n, i - 1);
        let tgt_index: HashMap<Vec<usize>, usize> =
            tgt_sets.into_iter().enumerate().map(|(k, s)| (s, k)).collect();
        let mut rows = Vec::new();
        for s in subsets(n, i) {
            for q in &src_basis {
                let mut row = vec![0u64; binom(n, i - 1) * tgt_dim];
                for (pos, &k) in s.iter().enumerate() {
                    let mut rest = s.clone();
                    rest.remove(pos);
                    let block = tgt_index[&rest] * tgt_dim;
                    let mut xq = q.clone();
                    xq[k] += 1;
                    for (c, v) in self.reduce(&xq) {
                        let v = if pos % 2 == 0 { v } else { (p - v) % p };
                        row[block + c] = (row[block + c] + v) % p;
                    }
                }
                rows.push(row);
            }
        }
        if tgt_dim == 0 {
            return 0;
        }
        rank(rows, p)
    }

    /// `beta_{i,j}(R/I)`.
    pub fn quotient_betti(&mut self, i: usize, j: u32) -> u64 {
        let n = self.ideal.n;
        if i > n || (j as i64) < i as i64 {
            return 0;
        }
        let chain = binom(n, i) * self.quotient_dim(j - i as u32);
        (chain - self.koszul_rank(i, j) - self.koszul_rank(i + 1, j)) as u64
    }

    /// Nonzero `beta_{i,j}(R/I)` for all `i` and rows `j - i <= max_row`.
    pub fn quotient_table(&mut self, max_row: u32) -> BTreeMap<(usize, u32), u64> {
        let mut out = BTreeMap::new();
        for i in 0..=self.ideal.n {
            for r in 0..=max_row {
                let j = i as u32 + r;
                let b = self.quotient_betti(i, j);
                if b != 0 {
                    out.insert((i, j), b);
                }
            }
        }
        out
    }
}

/// Hilbert series numerator of `R/M` by inclusion-exclusion over subsets of
/// the generators: `sum_S (-1)^|S| t^deg(lcm S)`.
pub fn inclusion_exclusion_numerator(gens: &[Exps], n: usize) -> Vec<i64> {
    let mut coeffs: BTreeMap<u32, i64> = BTreeMap::new();
    let r = gens.len();
    for mask in 0u64..(1u64 << r) {
        let mut l = vec![0u16; n];
        for (k, g) in gens.iter().enumerate() {
            if mask >> k & 1 == 1 {
                for v in 0..n {
                    l[v] = l[v].max(g[v]);
                }
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        *coeffs.entry(deg(&l)).or_default() += sign;
    }
    let top = coeffs.keys().max().copied().unwrap_or(0) as usize;
    let mut out = vec![0i64; top + 1];
    for (d, c) in coeffs {
        out[d as usize] += c;
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

/// Standard monomials of degree `d` counted by brute force.
pub fn count_standard(gens: &[Exps], n: usize, d: u32) -> usize {
    monomials(n, d)
        .iter()
        .filter(|m| !gens.iter().any(|g| g.iter().zip(m.iter()).all(|(a, b)| a <= b)))
        .count()
}

pub fn monomial_exps(m: &MonomialIdeal) -> Vec<Exps> {
    m.generators().iter().map(|g| g.exponents().to_vec()).collect()
}

pub fn handle(text: &str) -> IdealHandle {
    let file = degen_core::parse_input(text).expect("parses");
    IdealHandle::new(&file.ring, file.ideal("I").expect("ideal I").to_vec()).expect("ideal")
}

pub const SYMMETRIC_MINORS: &str = "ring 101 [a,b,c,d,e,f] grevlex\n\
    I = -b^2+a*d, -b*c+a*e, -c*d+b*e, -c^2+a*f, -c*e+b*f, -e^2+d*f";
