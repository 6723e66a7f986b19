//! Dense linear algebra over GF(2) with bit-packed rows.
//!
//! Everything realizability-related eventually bottoms out here: squaring an
//! adjacency matrix, testing idempotence, and solving sparse systems of
//! parity equations with a reproducible witness for either outcome.

use serde::Serialize;
use thiserror::Error;

const WORD_BITS: usize = 64;

/// Largest dimension accepted by [`stz_bruteforce`] (the search is `2^n`).
pub const BRUTEFORCE_MAX_DIM: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("dimension {0} exceeds the 2^n brute-force limit ({BRUTEFORCE_MAX_DIM})")]
    DimensionTooLarge(usize),
}

/// Square boolean matrix over GF(2), rows packed into `u64` words.
///
/// Rows are stored contiguously; `n <= 64` keeps one word per row, larger
/// matrices spill into multiple words per row transparently.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zero(n: usize) -> Self {
        let words = n.div_ceil(WORD_BITS).max(1);
        Gf2Matrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from `rows[i][j]` taken mod 2.
    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let n = rows.len();
        let mut m = Self::zero(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "row {i} has wrong width");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v & 1 == 1);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / WORD_BITS] >> (j % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.bits[i * self.words + j / WORD_BITS];
        let mask = 1u64 << (j % WORD_BITS);
        if v {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    /// Parity of `<row_i, row_j>`, the GF(2) dot product of two rows.
    pub fn row_dot_parity(&self, i: usize, j: usize) -> bool {
        let (a, b) = (self.row(i), self.row(j));
        let mut ones = 0u32;
        for w in 0..self.words {
            ones ^= (a[w] & b[w]).count_ones();
        }
        ones & 1 == 1
    }

    /// Parity of the number of ones in row `i`.
    pub fn row_weight_parity(&self, i: usize) -> bool {
        let mut ones = 0u32;
        for w in self.row(i) {
            ones ^= w.count_ones();
        }
        ones & 1 == 1
    }

    /// Matrix product over GF(2) by row combination: row i of the result is
    /// the XOR of the rows of `other` selected by row i of `self`.
    pub fn mul(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.n, other.n);
        let mut out = Gf2Matrix::zero(self.n);
        let mut acc = vec![0u64; self.words];
        for i in 0..self.n {
            acc.iter_mut().for_each(|w| *w = 0);
            self.combine_rows_into(other, i, &mut acc);
            out.bits[i * out.words..(i + 1) * out.words].copy_from_slice(&acc);
        }
        out
    }

    pub fn square(&self) -> Gf2Matrix {
        self.mul(self)
    }

    pub fn is_idempotent(&self) -> bool {
        let mut acc = vec![0u64; self.words];
        for i in 0..self.n {
            acc.iter_mut().for_each(|w| *w = 0);
            self.combine_rows_into(self, i, &mut acc);
            if acc != self.row(i) {
                return false;
            }
        }
        true
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    fn combine_rows_into(&self, other: &Gf2Matrix, i: usize, acc: &mut [u64]) {
        for w in 0..self.words {
            let mut word = self.row(i)[w];
            while word != 0 {
                let k = w * WORD_BITS + word.trailing_zeros() as usize;
                word &= word - 1;
                let rk = other.row(k);
                for (a, b) in acc.iter_mut().zip(rk) {
                    *a ^= b;
                }
            }
        }
    }

    /// Returns a copy with the diagonal entries of `mask` (bit k => (k,k)) set.
    fn with_diagonal(&self, mask: u32) -> Gf2Matrix {
        let mut m = self.clone();
        let mut bits = mask;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            m.set(k, k, true);
        }
        m
    }
}

impl std::fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
            if i + 1 < self.n {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Gf2Matrix({}x{})\n{}", self.n, self.n, self)
    }
}

/// One parity equation: the variables in `support` sum to `rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Equation {
    pub support: Vec<usize>,
    pub rhs: bool,
}

impl Equation {
    pub fn new(mut support: Vec<usize>, rhs: bool) -> Self {
        support.sort_unstable();
        support.dedup();
        Equation { support, rhs }
    }

    pub fn is_satisfied_by(&self, assignment: &[u8]) -> bool {
        let sum = self
            .support
            .iter()
            .fold(0u8, |acc, &v| acc ^ (assignment[v] & 1));
        sum == u8::from(self.rhs)
    }
}

impl std::fmt::Display for Equation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.support.is_empty() {
            write!(f, "0 = {}", u8::from(self.rhs))
        } else {
            let lhs = self
                .support
                .iter()
                .map(|v| format!("X{}", v + 1))
                .collect::<Vec<_>>()
                .join(" + ");
            write!(f, "{lhs} = {}", u8::from(self.rhs))
        }
    }
}

/// A system of parity equations over `nvars` variables.
#[derive(Clone, Debug, Serialize)]
pub struct Gf2System {
    pub nvars: usize,
    pub equations: Vec<Equation>,
}

impl Gf2System {
    pub fn new(nvars: usize) -> Self {
        Gf2System {
            nvars,
            equations: Vec::new(),
        }
    }

    pub fn push(&mut self, support: Vec<usize>, rhs: bool) {
        let eq = Equation::new(support, rhs);
        debug_assert!(eq.support.iter().all(|&v| v < self.nvars));
        self.equations.push(eq);
    }
}

/// Outcome of Gaussian elimination on a [`Gf2System`].
///
/// Exactly one of `particular` and `conflict` is present. `conflict` lists
/// indices of original equations whose XOR is the contradiction `0 = 1`.
#[derive(Clone, Debug, Serialize)]
pub struct Gf2Solution {
    pub rank: usize,
    pub particular: Option<Vec<u8>>,
    pub free_vars: Vec<usize>,
    pub conflict: Option<Vec<usize>>,
    /// Reduced row-echelon pivot rows, one per pivot variable in ascending
    /// pivot order; each expresses its pivot in terms of free variables.
    pub reduced: Vec<Equation>,
}

impl Gf2Solution {
    pub fn is_consistent(&self) -> bool {
        self.conflict.is_none()
    }

    /// Number of solutions (`2^(nvars - rank)`) when consistent.
    pub fn solution_count(&self, nvars: usize) -> Option<u128> {
        self.is_consistent()
            .then(|| 1u128 << (nvars - self.rank).min(127))
    }
}

struct PackedRow {
    coeffs: Vec<u64>,
    rhs: bool,
    combo: Vec<u64>,
}

impl PackedRow {
    fn xor_in(&mut self, other: &PackedRow) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a ^= b;
        }
        for (a, b) in self.combo.iter_mut().zip(&other.combo) {
            *a ^= b;
        }
        self.rhs ^= other.rhs;
    }

    fn lowest_var(&self) -> Option<usize> {
        for (w, &word) in self.coeffs.iter().enumerate() {
            if word != 0 {
                return Some(w * WORD_BITS + word.trailing_zeros() as usize);
            }
        }
        None
    }

    fn has_var(&self, v: usize) -> bool {
        self.coeffs[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }
}

/// Gaussian elimination with a deterministic pivot rule (equations in input
/// order, pivot on the lowest variable index) and full back-substitution.
///
/// Inconsistency is a normal return: the first contradiction encountered is
/// reported as the XOR combination of original equations producing `0 = 1`.
pub fn solve(sys: &Gf2System) -> Gf2Solution {
    let var_words = sys.nvars.div_ceil(WORD_BITS).max(1);
    let eq_words = sys.equations.len().div_ceil(WORD_BITS).max(1);
    // RREF rows sorted by pivot variable.
    let mut pivots: Vec<(usize, PackedRow)> = Vec::new();
    let mut conflict: Option<Vec<usize>> = None;

    for (idx, eq) in sys.equations.iter().enumerate() {
        let mut row = PackedRow {
            coeffs: vec![0; var_words],
            rhs: eq.rhs,
            combo: vec![0; eq_words],
        };
        for &v in &eq.support {
            row.coeffs[v / WORD_BITS] ^= 1 << (v % WORD_BITS);
        }
        row.combo[idx / WORD_BITS] |= 1 << (idx % WORD_BITS);

        for (pv, prow) in &pivots {
            if row.has_var(*pv) {
                row.xor_in(prow);
            }
        }
        match row.lowest_var() {
            None => {
                if row.rhs && conflict.is_none() {
                    let mut combo = Vec::new();
                    for (w, &word) in row.combo.iter().enumerate() {
                        let mut bits = word;
                        while bits != 0 {
                            combo.push(w * WORD_BITS + bits.trailing_zeros() as usize);
                            bits &= bits - 1;
                        }
                    }
                    conflict = Some(combo);
                }
            }
            Some(pv) => {
                for (_, prow) in pivots.iter_mut() {
                    if prow.has_var(pv) {
                        prow.xor_in(&row);
                    }
                }
                let pos = pivots.partition_point(|(v, _)| *v < pv);
                pivots.insert(pos, (pv, row));
            }
        }
    }

    let rank = pivots.len();
    let pivot_vars: Vec<usize> = pivots.iter().map(|(v, _)| *v).collect();
    let free_vars: Vec<usize> = (0..sys.nvars)
        .filter(|v| pivot_vars.binary_search(v).is_err())
        .collect();
    let reduced: Vec<Equation> = pivots
        .iter()
        .map(|(_, row)| {
            let mut support = Vec::new();
            for (w, &word) in row.coeffs.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    support.push(w * WORD_BITS + bits.trailing_zeros() as usize);
                    bits &= bits - 1;
                }
            }
            Equation::new(support, row.rhs)
        })
        .collect();

    let particular = conflict.is_none().then(|| {
        // Free variables at zero; in RREF each pivot then equals its rhs.
        let mut x = vec![0u8; sys.nvars];
        for (pv, row) in &pivots {
            x[*pv] = u8::from(row.rhs);
        }
        x
    });

    Gf2Solution {
        rank,
        particular,
        free_vars,
        conflict,
        reduced,
    }
}

/// Exhaustive STZ search: some diagonal set `K` with `(M + D_K)^2 = M + D_K`.
///
/// Independent of the linear-system route on purpose; it exists as an
/// oracle, so it does the literal `2^n` scan over diagonals.
pub fn stz_bruteforce(m: &Gf2Matrix) -> Result<Option<Vec<usize>>, Gf2Error> {
    let n = m.dim();
    if n > BRUTEFORCE_MAX_DIM {
        return Err(Gf2Error::DimensionTooLarge(n));
    }
    for mask in 0u32..1u32 << n {
        let a = m.with_diagonal(mask);
        if a.is_idempotent() {
            let k = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            return Ok(Some(k));
        }
    }
    Ok(None)
}
