//! Fibonacci words over the alphabet `{a, b}`.
//!
//! `w_0 = b`, `w_1 = a`, `w_i = w_{i-1} w_{i-2}`; every `w_i` with `i ≥ 1` is
//! a prefix of the next, so they converge to the infinite word
//! `w = abaababaabaab…`. For `i ≥ 1`, `w_{i+2}` without its last two letters
//! is a palindrome `m_i`, and these satisfy `m_1 = a`, `m_2 = aba`,
//! `m_i = m_{i-1} s_{i-1} m_{i-2}` with `s_i = ab` (even `i`) or `ba` (odd `i`).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// Longest word this module will materialize.
pub const MAX_WORD_LEN: u64 = 10_000_000;

/// Largest index accepted by [`fib`] (the value must fit in a `u64`).
pub const MAX_FIB_INDEX: usize = 92;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn push_word(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }

    /// The word without its last `n` letters (empty if `n ≥ len`).
    pub fn truncated(&self, n: usize) -> Word {
        Word(self.0[..self.len().saturating_sub(n)].to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|l| l.as_char()).collect();
        f.write_str(&s)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'a' | 'A' => Ok(Letter::A),
                'b' | 'B' => Ok(Letter::B),
                _ => Err(Error::InvalidArgument("words use only the letters a and b")),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// Fibonacci numbers with `f(0) = f(1) = 1`.
///
/// Panics if `i > MAX_FIB_INDEX`.
pub fn fib(i: usize) -> u64 {
    assert!(i <= MAX_FIB_INDEX, "fib({i}) does not fit in a u64");
    let (mut prev, mut cur) = (1u64, 1u64);
    for _ in 1..i {
        let next = prev + cur;
        prev = cur;
        cur = next;
    }
    cur
}

fn check_len(len: u64) -> Result<()> {
    if len > MAX_WORD_LEN {
        return Err(Error::ResourceLimit {
            what: "word materialization",
            limit: MAX_WORD_LEN,
        });
    }
    Ok(())
}

fn fib_checked(i: usize) -> Result<u64> {
    if i > MAX_FIB_INDEX {
        return Err(Error::ResourceLimit {
            what: "word materialization",
            limit: MAX_WORD_LEN,
        });
    }
    Ok(fib(i))
}

/// `w_i`, of length 1 for `i = 0` and `fib(i)` otherwise.
pub fn word_term(i: usize) -> Result<Word> {
    if i == 0 {
        return Ok(Word(alloc::vec![Letter::B]));
    }
    check_len(fib_checked(i)?)?;
    let mut older = Word(alloc::vec![Letter::B]);
    let mut newer = Word(alloc::vec![Letter::A]);
    for _ in 1..i {
        let next = newer.concat(&older);
        older = core::mem::replace(&mut newer, next);
    }
    Ok(newer)
}

/// Letter `n` (0-based) of the infinite Fibonacci word.
///
/// The letter is `b` exactly when the Zeckendorf representation of `n` over
/// `1, 2, 3, 5, 8, …` uses the term `1`.
pub fn letter_at(n: u64) -> Letter {
    let mut terms: [u64; MAX_FIB_INDEX] = [0; MAX_FIB_INDEX];
    let mut count = 0;
    let (mut x, mut y) = (1u64, 2u64);
    while x <= n {
        terms[count] = x;
        count += 1;
        match x.checked_add(y) {
            Some(z) => {
                x = y;
                y = z;
            }
            None => {
                if y <= n {
                    terms[count] = y;
                    count += 1;
                }
                break;
            }
        }
    }
    let mut rest = n;
    let mut uses_one = false;
    for &t in terms[..count].iter().rev() {
        if t <= rest {
            rest -= t;
            if t == 1 {
                uses_one = true;
            }
        }
    }
    if uses_one {
        Letter::B
    } else {
        Letter::A
    }
}

/// Lazy stream of the letters of the infinite Fibonacci word.
#[derive(Clone, Debug, Default)]
pub struct FibWordLetters {
    next: u64,
}

impl FibWordLetters {
    pub fn new() -> Self {
        Self::default()
    }

    /// Stream starting at position `start`.
    pub fn starting_at(start: u64) -> Self {
        Self { next: start }
    }
}

impl Iterator for FibWordLetters {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        let l = letter_at(self.next);
        self.next += 1;
        Some(l)
    }
}

/// The first `n` letters of the infinite Fibonacci word.
pub fn fib_word_prefix(n: usize) -> Result<Word> {
    check_len(n as u64)?;
    if n == 0 {
        return Ok(Word::empty());
    }
    let mut i = 1;
    while fib_checked(i)? < n as u64 {
        i += 1;
    }
    let w = word_term(i)?;
    Ok(Word(w.0[..n].to_vec()))
}

/// `s_i`: `ab` for even `i`, `ba` for odd `i`.
pub fn separator(i: usize) -> Result<Word> {
    if i == 0 {
        return Err(Error::OutOfRange {
            what: "separator index",
            value: 0,
            min: 1,
            max: u64::MAX,
        });
    }
    Ok(if i % 2 == 0 {
        Word(alloc::vec![Letter::A, Letter::B])
    } else {
        Word(alloc::vec![Letter::B, Letter::A])
    })
}

/// `m_i`, built with `m_i = m_{i-1} s_{i-1} m_{i-2}`; its length is
/// `fib(i + 2) - 2`.
pub fn palindromic_prefix(i: usize) -> Result<Word> {
    if i == 0 {
        return Err(Error::OutOfRange {
            what: "palindromic prefix index",
            value: 0,
            min: 1,
            max: u64::MAX,
        });
    }
    check_len(fib_checked(i + 2)? - 2)?;
    let mut older = Word(alloc::vec![Letter::A]);
    if i == 1 {
        return Ok(older);
    }
    let mut newer: Word = "aba".parse()?;
    for k in 3..=i {
        let mut next = newer.clone();
        next.push_word(&separator(k - 1)?);
        next.push_word(&older);
        older = core::mem::replace(&mut newer, next);
    }
    Ok(newer)
}

pub fn is_palindrome(w: &Word) -> bool {
    let l = w.letters();
    l.iter().eq(l.iter().rev())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn fib_values() {
        assert_eq!(fib(0), 1);
        assert_eq!(fib(1), 1);
        assert_eq!(fib(7), 21);
        assert_eq!(fib(MAX_FIB_INDEX), 12_200_160_415_121_876_738);
    }

    #[test]
    fn first_word_terms() {
        assert_eq!(word_term(0).unwrap(), w("b"));
        assert_eq!(word_term(1).unwrap(), w("a"));
        assert_eq!(word_term(2).unwrap(), w("ab"));
        assert_eq!(word_term(4).unwrap(), w("abaab"));
        assert_eq!(word_term(5).unwrap(), w("abaababa"));
    }

    #[test]
    fn prefixes() {
        assert!(fib_word_prefix(0).unwrap().is_empty());
        assert_eq!(fib_word_prefix(8).unwrap(), w("abaababa"));
        assert_eq!(fib_word_prefix(13).unwrap(), word_term(6).unwrap());
        // The displayed "abaabaab…" for the infinite word contradicts the
        // recurrence; the recurrence wins.
        assert_ne!(fib_word_prefix(8).unwrap(), w("abaabaab"));
    }

    #[test]
    fn separators() {
        assert_eq!(separator(1).unwrap(), w("ba"));
        assert_eq!(separator(2).unwrap(), w("ab"));
        assert_eq!(separator(4).unwrap(), w("ab"));
        assert!(separator(0).is_err());
    }

    #[test]
    fn small_palindromes() {
        assert_eq!(palindromic_prefix(1).unwrap(), w("a"));
        assert_eq!(palindromic_prefix(2).unwrap(), w("aba"));
        assert_eq!(palindromic_prefix(3).unwrap(), w("abaaba"));
        assert_eq!(palindromic_prefix(3).unwrap(), word_term(5).unwrap().truncated(2));
        assert!(palindromic_prefix(0).is_err());
    }

    #[test]
    fn palindrome_check() {
        assert!(is_palindrome(&Word::empty()));
        assert!(is_palindrome(&w("aba")));
        assert!(!is_palindrome(&w("ab")));
    }

    #[test]
    fn materialization_cap() {
        assert!(matches!(
            palindromic_prefix(40),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(fib_word_prefix(MAX_WORD_LEN as usize + 1).is_err());
        assert!(word_term(200).is_err());
    }

    #[test]
    fn streamed_letters_match_materialized_word() {
        let word = word_term(18).unwrap();
        let streamed: Vec<Letter> = FibWordLetters::new().take(word.len()).collect();
        assert_eq!(streamed, word.letters());
        assert_eq!(
            FibWordLetters::starting_at(100).next(),
            Some(word.letters()[100])
        );
    }

    #[test]
    fn word_laws() {
        for i in 1..=25 {
            let m = palindromic_prefix(i).unwrap();
            assert!(is_palindrome(&m), "m_{i}");
            assert_eq!(m.len() as u64, fib(i + 2) - 2);
            if i >= 3 {
                assert_eq!(m, word_term(i + 2).unwrap().truncated(2));
            }
        }
        for i in 2..=25 {
            assert!(word_term(i).unwrap().ends_with(&separator(i).unwrap()));
        }
        for i in 1..=25 {
            assert!(word_term(i).unwrap().is_prefix_of(&word_term(i + 1).unwrap()));
        }
    }
}
