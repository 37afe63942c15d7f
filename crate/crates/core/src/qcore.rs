//! q-numbers, q-factorials, Gaussian binomials and finite q-Pochhammer symbols.

use std::sync::Mutex;

use crate::error::Result;
use crate::scalar::{Number, QParam};

/// `[x]_q = (1 - q^x) / (1 - q)`.
pub fn q_number(x: &Number, q: &QParam) -> Result<Number> {
    let one = q.lift(&Number::one());
    let num = &one - q.pow(x)?;
    num.checked_div(&(&one - q.value()))
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`.
pub fn q_factorial(n: u32, q: &QParam) -> Result<Number> {
    let mut acc = q.lift(&Number::one());
    for k in 1..=n {
        acc = acc * q_number(&Number::int(k as i64), q)?;
    }
    Ok(acc)
}

/// Gaussian binomial coefficient; zero for `k` outside `[0, n]`.
pub fn q_binomial(n: u32, k: i64, q: &QParam) -> Result<Number> {
    if k < 0 || k > n as i64 {
        return Ok(q.lift(&Number::zero()));
    }
    let k = (k as u32).min(n - k as u32);
    if q.is_exact() {
        return Ok(pascal_row(n, k, q)?.swap_remove(k as usize));
    }
    let one = q.lift(&Number::one());
    let mut acc = one.clone();
    for i in 0..k {
        let top = &one - q.pow_int((n - i) as i64)?;
        let bottom = &one - q.pow_int((i + 1) as i64)?;
        acc = acc * top.checked_div(&bottom)?;
    }
    Ok(acc)
}

/// Row `n` of the Pascal-type triangle, columns `0..=k`.
fn pascal_row(n: u32, k: u32, q: &QParam) -> Result<Vec<Number>> {
    let k = k as usize;
    let powers = q_powers(q, k);
    let one = q.lift(&Number::one());
    let mut row = vec![q.lift(&Number::zero()); k + 1];
    row[0] = one;
    for m in 1..=n as usize {
        for j in (1..=k.min(m)).rev() {
            row[j] = &row[j - 1] + &powers[j] * &row[j];
        }
    }
    Ok(row)
}

fn q_powers(q: &QParam, k: usize) -> Vec<Number> {
    let mut out = Vec::with_capacity(k + 1);
    out.push(q.lift(&Number::one()));
    for j in 1..=k {
        out.push(&out[j - 1] * q.value());
    }
    out
}

/// `(x : q)_n = (1 - x)(1 - xq)...(1 - xq^{n-1})`.
pub fn q_pochhammer(x: &Number, q: &QParam, n: u32) -> Result<Number> {
    let one = q.lift(&Number::one());
    let mut acc = one.clone();
    let mut term = q.lift(x);
    for _ in 0..n {
        acc = acc * (&one - &term);
        term = term * q.value();
    }
    Ok(acc)
}

/// Lazily grown triangle of Gaussian binomials for a fixed `q`.
///
/// Rows are appended whole under a lock, so concurrent readers never see a
/// partially built row. With a band `b`, only columns `0..=b` are stored and
/// `get(n, k)` uses the symmetry `k -> n - k` to reach the band.
#[derive(Debug)]
pub struct QBinomialTable {
    q: QParam,
    band: Option<usize>,
    state: Mutex<TableState>,
}

#[derive(Debug)]
struct TableState {
    rows: Vec<Vec<Number>>,
    powers: Vec<Number>,
}

impl QBinomialTable {
    pub fn new(q: &QParam, band: Option<usize>) -> Self {
        let one = q.lift(&Number::one());
        QBinomialTable {
            q: q.clone(),
            band,
            state: Mutex::new(TableState {
                rows: vec![vec![one.clone()]],
                powers: vec![one],
            }),
        }
    }

    pub fn q(&self) -> &QParam {
        &self.q
    }

    pub fn rows_built(&self) -> usize {
        self.state.lock().expect("table lock poisoned").rows.len()
    }

    pub fn get(&self, n: u32, k: i64) -> Result<Number> {
        if k < 0 || k > n as i64 {
            return Ok(self.q.lift(&Number::zero()));
        }
        let mut k = k as usize;
        let n = n as usize;
        if let Some(b) = self.band {
            if k > b {
                k = n - k;
            }
            if k > b {
                return q_binomial(n as u32, k as i64, &self.q);
            }
        }
        let mut state = self.state.lock().expect("table lock poisoned");
        while state.rows.len() <= n {
            self.push_row(&mut state);
        }
        Ok(state.rows[n][k].clone())
    }

    fn push_row(&self, state: &mut TableState) {
        let prev = state.rows.last().expect("seeded with row 0");
        let n = prev.len();
        let width = self.band.map_or(n + 1, |b| (n + 1).min(b + 1));
        while state.powers.len() < width {
            let next = &state.powers[state.powers.len() - 1] * self.q.value();
            state.powers.push(next);
        }
        let prev = state.rows.last().expect("seeded with row 0");
        let zero = self.q.lift(&Number::zero());
        let mut row = Vec::with_capacity(width);
        row.push(self.q.lift(&Number::one()));
        for j in 1..width {
            let up = prev.get(j).unwrap_or(&zero);
            row.push(&prev[j - 1] + &state.powers[j] * up);
        }
        state.rows.push(row);
    }
}
