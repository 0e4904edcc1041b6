//! The alternating sums `E(m, q, t, n)` behind the Veronese bound, their
//! recursions, and a resumable scan of the nonnegativity conjecture.
//!
//! ```text
//! E(m, q, t, n) = Σ_{j=0}^{t} (-1)^{t-j} C(q-j, t-j) C(n, m+j)
//! ```
//!
//! At the boundary `n = mq + m + q` consecutive terms `Γ_j = C(q-j, t-j)
//! C(n, m+j)` have ratio `(t-j)(mq+q-j) / ((q-j)(m+j+1))`, so `E` telescopes
//! from `Γ_0 = C(q,t) C(n,m)`:
//!
//! ```text
//! E(m, q, t, mq+m+q) = C(q,t) C(mq+m+q, m) Σ_j (-1)^{t-j} (t)_j (mq+q)_j / ((q)_j (m+j)_j)
//! ```
//!
//! The prefactor is `Γ_0`, not `Γ_t = C(mq+m+q, m+t)`, and the last falling
//! factorial is `(m+j)_j = (m+1)...(m+j)`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::binomial::{binomial, falling_factorial};
use crate::error::{Error, Result};

fn alternate(sign_exp: usize, x: BigInt) -> BigInt {
    if sign_exp.is_multiple_of(2) {
        x
    } else {
        -x
    }
}

/// `E(m, q, t, n)` by the defining sum.
pub fn e_value(m: usize, q: usize, t: usize, n: usize) -> BigInt {
    (0..=t).map(|j| alternate(t - j, gamma(m, q, t, j, n))).sum()
}

/// `Γ(m, q, t, j, n) = C(q-j, t-j) C(n, m+j)`.
pub fn gamma(m: usize, q: usize, t: usize, j: usize, n: usize) -> BigInt {
    let (m, q, t, j, n) = (m as i64, q as i64, t as i64, j as i64, n as i64);
    binomial(q - j, t - j) * binomial(n, m + j)
}

/// `Γ_{j+1} / Γ_j` at `n = mq + m + q`, namely
/// `(t-j)(mq+q-j) / ((q-j)(m+j+1))`, reduced.
pub fn alpha_ratio(m: usize, q: usize, t: usize, j: usize) -> Result<BigRational> {
    if m == 0 || t == 0 || t > q || j >= t {
        return Err(Error::invalid(format!("alpha_ratio needs m >= 1, 1 <= t <= q, j < t; got ({m},{q},{t},{j})")));
    }
    let num = BigInt::from((t - j) * (m * q + q - j));
    let den = BigInt::from((q - j) * (m + j + 1));
    Ok(BigRational::new(num, den))
}

/// `E` at `n = mq + m + q` by telescoping the consecutive-term ratios from
/// `Γ_0`.
pub fn e_telescoped(m: usize, q: usize, t: usize) -> Result<BigInt> {
    let n = m * q + m + q;
    let mut prod = BigRational::one();
    let mut sum = BigRational::zero();
    for j in 0..=t {
        if j > 0 {
            prod *= alpha_ratio(m, q, t, j - 1)?;
        }
        sum += if (t - j).is_multiple_of(2) { prod.clone() } else { -prod.clone() };
    }
    integral(sum * BigRational::from_integer(gamma(m, q, t, 0, n)), "telescoped E")
}

/// `E(m, q, t, mq+m+q)` through falling factorials, in exact rationals.
pub fn e_falling_factorial(m: usize, q: usize, t: usize) -> Result<BigInt> {
    if m == 0 || t == 0 || t > q {
        return Err(Error::invalid(format!("needs m >= 1 and 1 <= t <= q; got ({m},{q},{t})")));
    }
    let (mi, qi) = (m as i64, q as i64);
    let n = mi * qi + mi + qi;
    let mut sum = BigRational::zero();
    for j in 0..=t {
        let ju = j as u32;
        let num = falling_factorial(t as i64, ju) * falling_factorial(mi * qi + qi, ju);
        let den = falling_factorial(qi, ju) * falling_factorial(mi + j as i64, ju);
        let term = BigRational::new(num, den);
        sum += if (t - j).is_multiple_of(2) { term } else { -term };
    }
    let pre = binomial(qi, t as i64) * binomial(n, mi);
    integral(sum * BigRational::from_integer(pre), "falling-factorial E")
}

fn integral(x: BigRational, what: &str) -> Result<BigInt> {
    if !x.is_integer() {
        return Err(Error::Contradiction(format!("{what} is not an integer: {x}")));
    }
    Ok(x.to_integer())
}

/// `E` through `E(m,q,t,n) = E(m,q-1,t,n) - E(m,q-1,t-1,n)`, unrolled down
/// to the rows `t = 1` and `t = q`, which are summed directly.
pub fn e_rec_q(m: usize, q: usize, t: usize, n: usize) -> Result<BigInt> {
    if !(q > t && t >= 2) {
        return Err(Error::invalid(format!("q-recursion needs q > t >= 2; got q = {q}, t = {t}")));
    }
    fn go(m: usize, q: usize, t: usize, n: usize, memo: &mut HashMap<(usize, usize), BigInt>) -> BigInt {
        if t == 1 || t == q {
            return e_value(m, q, t, n);
        }
        if let Some(v) = memo.get(&(q, t)) {
            return v.clone();
        }
        let v = go(m, q - 1, t, n, memo) - go(m, q - 1, t - 1, n, memo);
        memo.insert((q, t), v.clone());
        v
    }
    Ok(go(m, q, t, n, &mut HashMap::new()))
}

/// `E` through `E(m,q,t,n) = E(m,q,t,n-1) + E(m-1,q,t,n-1)`, unrolled down
/// to `m = 1` or `n = 0`, which are summed directly.
pub fn e_rec_n(m: usize, q: usize, t: usize, n: usize) -> Result<BigInt> {
    if m < 2 || n < 1 {
        return Err(Error::invalid(format!("n-recursion needs m >= 2 and n >= 1; got m = {m}, n = {n}")));
    }
    fn go(m: usize, q: usize, t: usize, n: usize, memo: &mut HashMap<(usize, usize), BigInt>) -> BigInt {
        if m == 1 || n == 0 {
            return e_value(m, q, t, n);
        }
        if let Some(v) = memo.get(&(m, n)) {
            return v.clone();
        }
        let v = go(m, q, t, n - 1, memo) + go(m - 1, q, t, n - 1, memo);
        memo.insert((m, n), v.clone());
        v
    }
    Ok(go(m, q, t, n, &mut HashMap::new()))
}

/// Which known result, if any, covers a cell `(m, q, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProofStatus {
    M1Case,
    T1Lemma,
    TEqQLemma,
    QSmall,
    TLe4,
    Open,
}

impl ProofStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ProofStatus::M1Case => "m1-case",
            ProofStatus::T1Lemma => "t1-lemma",
            ProofStatus::TEqQLemma => "t-eq-q-lemma",
            ProofStatus::QSmall => "q-small",
            ProofStatus::TLe4 => "t-le-4",
            ProofStatus::Open => "open",
        }
    }

    pub fn is_proved(&self) -> bool {
        *self != ProofStatus::Open
    }
}

impl fmt::Display for ProofStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for ProofStatus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// First matching status in the order m1-case, t1-lemma, t-eq-q-lemma,
/// q-small (`q ≤ m + t - 1`), t-le-4, open.
pub fn classify_cell(m: usize, q: usize, t: usize) -> ProofStatus {
    if m == 1 {
        ProofStatus::M1Case
    } else if t == 1 {
        ProofStatus::T1Lemma
    } else if t == q {
        ProofStatus::TEqQLemma
    } else if q < m + t {
        ProofStatus::QSmall
    } else if t <= 4 {
        ProofStatus::TLe4
    } else {
        ProofStatus::Open
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EConjectureCell {
    pub m: usize,
    pub q: usize,
    pub t: usize,
    pub n: usize,
    pub e_value: BigInt,
    pub holds: bool,
    pub proof_status: ProofStatus,
}

pub const CSV_HEADER: &str = "m,q,t,n,E,holds,proof_status";

impl EConjectureCell {
    /// Evaluates the cell at `n = mq + m + q`.
    pub fn evaluate(m: usize, q: usize, t: usize) -> Self {
        let n = m * q + m + q;
        let e_value = e_value(m, q, t, n);
        EConjectureCell {
            m,
            q,
            t,
            n,
            holds: !e_value.is_negative(),
            e_value,
            proof_status: classify_cell(m, q, t),
        }
    }

    pub fn key(&self) -> (usize, usize, usize) {
        (self.m, self.q, self.t)
    }

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.m, self.q, self.t, self.n, self.e_value, self.holds, self.proof_status
        )
    }
}

impl Serialize for EConjectureCell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EConjectureCell", 7)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("t", &self.t)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("E", &self.e_value.to_string())?;
        st.serialize_field("holds", &self.holds)?;
        st.serialize_field("proof_status", &self.proof_status)?;
        st.end()
    }
}

/// Streams the cells `1 ≤ m ≤ m_max`, `1 ≤ t ≤ q ≤ q_max` in `(m, q, t)`
/// order. A failing cell is always emitted; a failing cell inside a proved
/// region is additionally an error.
#[derive(Debug, Clone)]
pub struct ConjectureScan {
    m_max: usize,
    q_max: usize,
    next: Option<(usize, usize, usize)>,
}

impl ConjectureScan {
    pub fn new(m_max: usize, q_max: usize) -> Self {
        let next = (m_max >= 1 && q_max >= 1).then_some((1, 1, 1));
        ConjectureScan { m_max, q_max, next }
    }

    /// Skips every cell up to and including `key`.
    pub fn resume_after(mut self, key: (usize, usize, usize)) -> Self {
        while let Some(k) = self.next {
            if k > key {
                break;
            }
            self.advance();
        }
        self
    }

    fn advance(&mut self) {
        let Some((m, q, t)) = self.next else { return };
        self.next = if t < q {
            Some((m, q, t + 1))
        } else if q < self.q_max {
            Some((m, q + 1, 1))
        } else if m < self.m_max {
            Some((m + 1, 1, 1))
        } else {
            None
        };
    }
}

impl Iterator for ConjectureScan {
    type Item = Result<EConjectureCell>;

    fn next(&mut self) -> Option<Self::Item> {
        let (m, q, t) = self.next?;
        self.advance();
        let cell = EConjectureCell::evaluate(m, q, t);
        if cell.proof_status.is_proved() && !cell.holds {
            return Some(Err(Error::Contradiction(format!(
                "E({m},{q},{t},{}) = {} < 0 in a proved cell ({})",
                cell.n, cell.e_value, cell.proof_status
            ))));
        }
        Some(Ok(cell))
    }
}

/// Collects a whole scan, stopping at the first proved-cell failure.
pub fn conjecture_scan(m_max: usize, q_max: usize) -> Result<Vec<EConjectureCell>> {
    ConjectureScan::new(m_max, q_max).collect()
}

/// `(n - m - qm - q) C(n, m) / (m + 1)`, the `t = 1` row in closed form.
pub fn e_t1_closed(m: usize, q: usize, n: usize) -> Result<BigInt> {
    let num = (BigInt::from(n) - BigInt::from(m * q + m + q)) * binomial(n as i64, m as i64);
    let (quo, rem) = num.div_rem(&BigInt::from(m + 1));
    if !rem.is_zero() {
        return Err(Error::Contradiction(format!("t = 1 closed form not integral at ({m},{q},{n})")));
    }
    Ok(quo)
}
