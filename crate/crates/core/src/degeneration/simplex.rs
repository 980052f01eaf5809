//! Dense two-phase simplex over exact rationals, Bland's rule throughout.
//!
//! Solves `max c.x` subject to `A x <= b`, `x >= 0`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum LpOutcome {
    Optimal(Vec<BigRational>),
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
    basis: Vec<usize>,
    /// objective `z = value + sum obj[k] x_k` over nonbasic `k`
    obj: Vec<BigRational>,
    value: BigRational,
    /// columns allowed to enter the basis
    active: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        self.rhs[r] /= &p;
        let (pivot_row, pivot_rhs) = (self.rows[r].clone(), self.rhs[r].clone());
        for k in 0..self.rows.len() {
            if k == r || self.rows[k][col].is_zero() {
                continue;
            }
            let f = self.rows[k][col].clone();
            for (v, pv) in self.rows[k].iter_mut().zip(&pivot_row) {
                *v -= &f * pv;
            }
            self.rhs[k] -= &f * &pivot_rhs;
        }
        let f = self.obj[col].clone();
        if !f.is_zero() {
            for (v, pv) in self.obj.iter_mut().zip(&pivot_row) {
                *v -= &f * pv;
            }
            self.value += &f * &pivot_rhs;
        }
        self.basis[r] = col;
    }

    /// Runs to optimality; false when unbounded.
    fn optimize(&mut self) -> bool {
        loop {
            let Some(col) = (0..self.active).find(|&k| self.obj[k].is_positive()) else {
                return true;
            };
            let mut best: Option<(usize, BigRational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / a;
                let better = match &best {
                    None => true,
                    Some((br, bv)) => ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br]),
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, col),
                None => return false,
            }
        }
    }
}

pub(crate) fn maximize(c: &[BigRational], a: &[Vec<BigRational>], b: &[BigRational]) -> LpOutcome {
    let n = c.len();
    let m = b.len();
    let x0 = n + m;
    let width = n + m + 1;
    let rows: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row = vec![BigRational::zero(); width];
            row[..n].clone_from_slice(&a[i]);
            row[n + i] = BigRational::one();
            row[x0] = -BigRational::one();
            row
        })
        .collect();
    let mut obj = vec![BigRational::zero(); width];
    obj[x0] = -BigRational::one();
    let mut t = Tableau {
        rows,
        rhs: b.to_vec(),
        basis: (n..n + m).collect(),
        obj,
        value: BigRational::zero(),
        active: width,
    };

    // phase 1: drive the auxiliary variable to zero
    if let Some(r) = (0..m).filter(|&i| b[i].is_negative()).min_by(|&i, &j| b[i].cmp(&b[j])) {
        t.pivot(r, x0);
        t.optimize();
        if !t.value.is_zero() {
            return LpOutcome::Infeasible;
        }
        if let Some(r) = t.basis.iter().position(|&v| v == x0) {
            let col = (0..x0).find(|&k| !t.rows[r][k].is_zero()).expect("degenerate row");
            t.pivot(r, col);
        }
    }
    for row in t.rows.iter_mut() {
        row[x0] = BigRational::zero();
    }
    t.active = x0;

    // phase 2: the real objective in terms of the current nonbasics
    t.obj = vec![BigRational::zero(); width];
    t.obj[..n].clone_from_slice(c);
    t.value = BigRational::zero();
    for r in 0..m {
        let v = t.basis[r];
        let f = t.obj[v].clone();
        if f.is_zero() {
            continue;
        }
        for (o, pv) in t.obj.iter_mut().zip(&t.rows[r]) {
            *o -= &f * pv;
        }
        t.value += &f * &t.rhs[r];
    }
    if !t.optimize() {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![BigRational::zero(); n];
    for (r, &v) in t.basis.iter().enumerate() {
        if v < n {
            x[v] = t.rhs[r].clone();
        }
    }
    LpOutcome::Optimal(x)
}
