//! Continued-fraction style decomposition of SL2(Z) elements into S and T
//! letters, the evaluation route for multiplier systems and representations.

use super::UnimodularMatrix;

/// One letter of a generator word. T carries its (possibly negative) exponent
/// so word lengths stay logarithmic in the entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    S,
    T(i64),
}

/// A word over {S, T^n} together with a sign: the source matrix equals
/// sign * (product of the letters, left to right).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWord {
    pub letters: Vec<Letter>,
    pub sign: i8,
}

impl GeneratorWord {
    /// Re-multiply the word exactly.
    pub fn product(&self) -> UnimodularMatrix {
        let mut m = UnimodularMatrix::identity();
        for letter in &self.letters {
            let g = match letter {
                Letter::S => UnimodularMatrix::s(),
                Letter::T(n) => UnimodularMatrix::t_pow(*n),
            };
            m = m.mul(&g);
        }
        if self.sign < 0 {
            m = m.neg();
        }
        m
    }

    /// Number of single-generator factors (T^n counts |n| times).
    pub fn expanded_len(&self) -> u64 {
        self.letters
            .iter()
            .map(|l| match l {
                Letter::S => 1,
                Letter::T(n) => n.unsigned_abs(),
            })
            .sum()
    }
}

/// Decompose M as sign * g_1 ... g_r with g_i in {S, T^n}, by the Euclidean
/// reduction on the first column. The letter count is O(log max |entry|).
pub fn decompose_word(m: &UnimodularMatrix) -> GeneratorWord {
    // Invariant: m = w * r where w is the word accumulated so far.
    let mut r = *m;
    let mut letters: Vec<Letter> = Vec::new();
    while r.c != 0 {
        if r.c.abs() > r.a.abs() || r.a == 0 {
            // Swap rows via S^{-1} = -S; fold the sign into the matrix and
            // record S (S^{-1} = S^3 = -S, handled by tracking -I separately).
            // We use r -> S^{-1} r, w -> w S.
            // S^{-1} = [0,1;-1,0]
            let (a, b, c, d) = (r.a, r.b, r.c, r.d);
            r = UnimodularMatrix { a: c, b: d, c: -a, d: -b };
            letters.push(Letter::S);
            continue;
        }
        // |a| >= |c| > 0: strip the integer quotient via T^{-q}.
        let q = (r.a as f64 / r.c as f64).round() as i64;
        if q != 0 {
            // r -> T^{-q} r, w -> w T^q
            let t = UnimodularMatrix::t_pow(-q);
            r = t.mul(&r);
            letters.push(Letter::T(q));
        } else {
            // |a| <= |c|/2 already; force a row swap next.
            let (a, b, c, d) = (r.a, r.b, r.c, r.d);
            r = UnimodularMatrix { a: c, b: d, c: -a, d: -b };
            letters.push(Letter::S);
        }
    }
    // r is now +-T^b.
    let sign = if r.a == 1 { 1 } else { -1 };
    let b = if sign == 1 { r.b } else { -r.b };
    if b != 0 {
        letters.push(Letter::T(b));
    }
    GeneratorWord { letters, sign }
}
