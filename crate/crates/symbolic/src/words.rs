use num_bigint::BigUint;
use num_traits::Zero;

use crate::{SymbolicError, TransitionMatrix};

/// Exhaustive cycle enumeration refuses periods above this.
pub const MAX_ENUMERATION_PERIOD: usize = 24;

/// A finite word over {0, .., q-1}; symbols index the transition matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<usize>,
}

impl Word {
    pub fn new(symbols: Vec<usize>) -> Result<Self, SymbolicError> {
        if symbols.is_empty() {
            return Err(SymbolicError::EmptyWord);
        }
        Ok(Word { symbols })
    }

    /// Convenience for alphabets up to 10 symbols: one digit per symbol.
    pub fn from_digits(s: &str) -> Result<Self, SymbolicError> {
        let symbols: Vec<usize> = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or(SymbolicError::EmptyWord))
            .collect::<Result<_, _>>()?;
        Word::new(symbols)
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// A word read cyclically, stored as its lexicographically minimal rotation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleWord {
    symbols: Vec<usize>,
}

impl CycleWord {
    pub fn new(symbols: Vec<usize>) -> Result<Self, SymbolicError> {
        if symbols.is_empty() {
            return Err(SymbolicError::EmptyWord);
        }
        Ok(CycleWord { symbols: minimal_rotation(&symbols) })
    }

    pub fn from_digits(s: &str) -> Result<Self, SymbolicError> {
        let w = Word::from_digits(s)?;
        CycleWord::new(w.symbols)
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Smallest d dividing len() such that the word is d-periodic; equals
    /// len() exactly when the word is not a power of a shorter word.
    pub fn minimal_period(&self) -> usize {
        let n = self.symbols.len();
        for d in 1..=n {
            if n % d != 0 {
                continue;
            }
            if (0..n).all(|i| self.symbols[i] == self.symbols[i % d]) {
                return d;
            }
        }
        n
    }

    pub fn rotations(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let n = self.symbols.len();
        (0..n).map(move |r| {
            (0..n).map(|i| self.symbols[(i + r) % n]).collect()
        })
    }
}

fn minimal_rotation(symbols: &[usize]) -> Vec<usize> {
    let n = symbols.len();
    let mut best = 0usize;
    for cand in 1..n {
        for i in 0..n {
            let a = symbols[(cand + i) % n];
            let b = symbols[(best + i) % n];
            if a < b {
                best = cand;
                break;
            }
            if a > b {
                break;
            }
        }
    }
    (0..n).map(|i| symbols[(best + i) % n]).collect()
}

fn check_symbols(symbols: &[usize], a: &TransitionMatrix) -> Result<(), SymbolicError> {
    for &s in symbols {
        if s >= a.q() {
            return Err(SymbolicError::SymbolOutOfRange { symbol: s, q: a.q() });
        }
    }
    Ok(())
}

/// True iff every adjacent pair of symbols has a positive matrix entry.
/// Single-symbol words are vacuously admissible.
pub fn is_admissible(w: &Word, a: &TransitionMatrix) -> Result<bool, SymbolicError> {
    check_symbols(w.symbols(), a)?;
    Ok(w.symbols().windows(2).all(|p| a.allows(p[0], p[1])))
}

/// Cyclic admissibility: adjacent pairs plus the wrap-around pair.
pub fn is_admissible_cycle(w: &CycleWord, a: &TransitionMatrix) -> Result<bool, SymbolicError> {
    check_symbols(w.symbols(), a)?;
    let s = w.symbols();
    let n = s.len();
    Ok((0..n).all(|i| a.allows(s[i], s[(i + 1) % n])))
}

/// Number of p-periodic sequences of the shift = trace(A^p), with all
/// rotations counted. Arbitrary precision: the count grows like rho^p.
pub fn count_periodic_points(a: &TransitionMatrix, p: u32) -> Result<BigUint, SymbolicError> {
    if p == 0 {
        return Err(SymbolicError::ZeroPeriod);
    }
    let q = a.q();
    let base: Vec<BigUint> = (0..q * q).map(|k| BigUint::from(a.entry(k / q, k % q))).collect();
    let pow = mat_pow(&base, q, p);
    let mut tr = BigUint::zero();
    for i in 0..q {
        tr += pow[i * q + i].clone();
    }
    Ok(tr)
}

fn mat_mul(a: &[BigUint], b: &[BigUint], q: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); q * q];
    for i in 0..q {
        for k in 0..q {
            let aik = &a[i * q + k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..q {
                let prod = aik * &b[k * q + j];
                out[i * q + j] += prod;
            }
        }
    }
    out
}

fn mat_pow(base: &[BigUint], q: usize, mut p: u32) -> Vec<BigUint> {
    let mut result: Vec<BigUint> = vec![BigUint::zero(); q * q];
    for i in 0..q {
        result[i * q + i] = BigUint::from(1u8);
    }
    let mut sq = base.to_vec();
    while p > 0 {
        if p & 1 == 1 {
            result = mat_mul(&result, &sq, q);
        }
        p >>= 1;
        if p > 0 {
            sq = mat_mul(&sq, &sq, q);
        }
    }
    result
}

/// All admissible cycle words of length exactly p, deduplicated under
/// rotation and returned in sorted canonical order. Includes powers of
/// shorter words; the sum of minimal periods over the returned classes
/// equals trace(A^p).
pub fn periodic_words(a: &TransitionMatrix, p: usize) -> Result<Vec<CycleWord>, SymbolicError> {
    if p == 0 {
        return Err(SymbolicError::ZeroPeriod);
    }
    if p > MAX_ENUMERATION_PERIOD {
        return Err(SymbolicError::PeriodTooLarge { p, max: MAX_ENUMERATION_PERIOD });
    }
    let q = a.q();
    let mut found: std::collections::BTreeSet<CycleWord> = std::collections::BTreeSet::new();
    let mut stack: Vec<usize> = Vec::with_capacity(p);

    // DFS over admissible strings, closing the cycle at depth p
    fn dfs(
        a: &TransitionMatrix,
        q: usize,
        p: usize,
        stack: &mut Vec<usize>,
        found: &mut std::collections::BTreeSet<CycleWord>,
    ) {
        if stack.len() == p {
            let first = stack[0];
            let last = *stack.last().unwrap();
            if a.allows(last, first) {
                found.insert(CycleWord::new(stack.clone()).unwrap());
            }
            return;
        }
        for next in 0..q {
            if let Some(&last) = stack.last() {
                if !a.allows(last, next) {
                    continue;
                }
            }
            stack.push(next);
            dfs(a, q, p, stack, found);
            stack.pop();
        }
    }
    dfs(a, q, p, &mut stack, &mut found);
    Ok(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fibonacci() -> TransitionMatrix {
        // symbols 0, 1 with edges 0->1, 1->0, 1->1 (no 0->0)
        TransitionMatrix::from_rows(vec![vec![0, 1], vec![1, 1]]).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let a = fibonacci();
        assert!(is_admissible(&Word::from_digits("011").unwrap(), &a).unwrap());
        assert!(is_admissible(&Word::from_digits("0").unwrap(), &a).unwrap());
        assert!(is_admissible(&Word::from_digits("1").unwrap(), &a).unwrap());
        assert!(!is_admissible(&Word::from_digits("00").unwrap(), &a).unwrap());
    }

    #[test]
    fn out_of_range_symbol_is_an_error() {
        let a = fibonacci();
        let w = Word::new(vec![0, 2]).unwrap();
        assert_eq!(
            is_admissible(&w, &a).unwrap_err(),
            SymbolicError::SymbolOutOfRange { symbol: 2, q: 2 }
        );
    }

    #[test]
    fn count_matches_known_values() {
        let a = fibonacci();
        // trace(A^p) = Lucas numbers 1, 3, 4, 7, 11, ...
        assert_eq!(count_periodic_points(&a, 1).unwrap(), BigUint::from(1u8));
        assert_eq!(count_periodic_points(&a, 2).unwrap(), BigUint::from(3u8));
        assert_eq!(count_periodic_points(&a, 3).unwrap(), BigUint::from(4u8));
        assert_eq!(count_periodic_points(&a, 12).unwrap(), BigUint::from(322u16));
        let full = TransitionMatrix::full_shift(2).unwrap();
        assert_eq!(count_periodic_points(&full, 2).unwrap(), BigUint::from(4u8));
    }

    #[test]
    fn count_survives_large_powers() {
        let full = TransitionMatrix::full_shift(3).unwrap();
        // 3^64 overflows u64; BigUint keeps it exact
        let c = count_periodic_points(&full, 64).unwrap();
        assert_eq!(c, BigUint::from(3u8).pow(64));
    }

    #[test]
    fn periodic_words_fibonacci() {
        let a = fibonacci();
        let p1 = periodic_words(&a, 1).unwrap();
        assert_eq!(p1, vec![CycleWord::from_digits("1").unwrap()]);
        let p2 = periodic_words(&a, 2).unwrap();
        assert_eq!(
            p2,
            vec![CycleWord::from_digits("01").unwrap(), CycleWord::from_digits("11").unwrap()]
        );
        // counting identity: sum of minimal periods = trace(A^2) = 3
        let total: usize = p2.iter().map(|w| w.minimal_period()).sum();
        assert_eq!(total, 3);
    }

    #[test]
    fn enumeration_guard() {
        let a = fibonacci();
        let err = periodic_words(&a, 25).unwrap_err();
        assert_eq!(err, SymbolicError::PeriodTooLarge { p: 25, max: 24 });
    }

    #[test]
    fn canonical_rotation_and_minimal_period() {
        let w = CycleWord::from_digits("110").unwrap();
        assert_eq!(w.symbols(), &[0, 1, 1]);
        assert_eq!(w.minimal_period(), 3);
        let p = CycleWord::from_digits("0101").unwrap();
        assert_eq!(p.minimal_period(), 2);
    }
}
