//! Stirling permutations over multisets and their word statistics.
//!
//! A word over the multiset `{1^m1, ..., n^mn}` is a Stirling permutation
//! when, for each letter `i`, everything between two occurrences of `i` is at
//! least `i`. Enumeration streams the words in lexicographic order by a
//! depth-first search: at any prefix the set of currently "open" letters
//! (some but not all copies placed) forms an increasing stack, and the next
//! letter must be at least the top of that stack.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, VarId};

/// Default cap on the total number of letters in an enumeration.
pub const MAX_LETTERS: usize = 18;

/// Multiplicities `(m_1, ..., m_n)` of the letters `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultisetSpec {
    mult: Vec<u16>,
}

impl MultisetSpec {
    pub fn new(mult: Vec<u16>) -> MultisetSpec {
        MultisetSpec { mult }
    }

    /// The classical multiset `{1,1,2,2,...,n,n}`.
    pub fn classical(n: usize) -> MultisetSpec {
        MultisetSpec { mult: vec![2; n] }
    }

    /// The restricted multiset `{1,2,2,...,m,m}` with the letter 1 single.
    pub fn restricted(m: usize) -> MultisetSpec {
        let mut mult = vec![2; m];
        if m > 0 {
            mult[0] = 1;
        }
        MultisetSpec { mult }
    }

    pub fn multiplicities(&self) -> &[u16] {
        &self.mult
    }

    pub fn total_letters(&self) -> usize {
        self.mult.iter().map(|&m| m as usize).sum()
    }

    pub fn num_letters(&self) -> u16 {
        self.mult.len() as u16
    }
}

/// Checks both the multiset content and the betweenness condition.
pub fn is_stirling(word: &[u16], spec: &MultisetSpec) -> bool {
    let n = spec.mult.len();
    let mut counts = vec![0u16; n];
    for &w in word {
        if w == 0 || w as usize > n {
            return false;
        }
        counts[w as usize - 1] += 1;
    }
    if counts != spec.mult {
        return false;
    }
    // between the first and last copy of each letter, nothing smaller
    let mut first = vec![usize::MAX; n + 1];
    let mut last = vec![0usize; n + 1];
    for (i, &w) in word.iter().enumerate() {
        let w = w as usize;
        if first[w] == usize::MAX {
            first[w] = i;
        }
        last[w] = i;
    }
    for letter in 1..=n {
        if first[letter] == usize::MAX {
            continue;
        }
        if word[first[letter]..=last[letter]]
            .iter()
            .any(|&w| (w as usize) < letter)
        {
            return false;
        }
    }
    true
}

/// A validated Stirling permutation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StirlingPerm {
    word: Vec<u16>,
}

impl StirlingPerm {
    pub fn new(word: Vec<u16>, spec: &MultisetSpec) -> Result<StirlingPerm> {
        if !is_stirling(&word, spec) {
            return Err(Error::InvalidWord);
        }
        Ok(StirlingPerm { word })
    }

    pub fn word(&self) -> &[u16] {
        &self.word
    }
}

impl fmt::Display for StirlingPerm {
    /// Digit string when all letters are single digits, otherwise
    /// comma-separated letters.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.iter().all(|&w| w <= 9) {
            for &w in &self.word {
                write!(f, "{w}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|w| w.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

/// Parses a digit-string word such as `"884554122377366"`.
pub fn word_from_digits(s: &str) -> Result<Vec<u16>> {
    s.chars()
        .map(|c| {
            c.to_digit(10)
                .filter(|&d| d > 0)
                .map(|d| d as u16)
                .ok_or(Error::InvalidWord)
        })
        .collect()
}

enum IterState {
    Fresh,
    Mid,
    Done,
}

/// Lexicographic stream over all Stirling permutations of a multiset.
pub struct StirlingIter {
    mult: Vec<u16>,
    remaining: Vec<u16>,
    placed: Vec<u16>,
    open: Vec<u16>,
    word: Vec<u16>,
    total: usize,
    state: IterState,
}

impl StirlingIter {
    fn letter_idx(&self, l: u16) -> usize {
        l as usize - 1
    }

    /// Smallest letter `>= from` that may legally extend the current prefix.
    fn min_placeable(&self, from: u16) -> Option<u16> {
        let lo = match self.open.last() {
            Some(&top) => from.max(top),
            None => from,
        };
        (lo..=self.mult.len() as u16).find(|&l| self.remaining[self.letter_idx(l)] > 0)
    }

    fn place(&mut self, l: u16) {
        let i = self.letter_idx(l);
        self.word.push(l);
        self.remaining[i] -= 1;
        self.placed[i] += 1;
        if self.mult[i] >= 2 {
            if self.placed[i] == 1 {
                self.open.push(l);
            } else if self.remaining[i] == 0 {
                let top = self.open.pop();
                debug_assert_eq!(top, Some(l), "only the top open letter can close");
            }
        }
    }

    fn unplace(&mut self) -> u16 {
        let l = self.word.pop().expect("backtrack on nonempty word");
        let i = self.letter_idx(l);
        if self.mult[i] >= 2 {
            if self.remaining[i] == 0 {
                self.open.push(l);
            } else if self.placed[i] == 1 {
                let top = self.open.pop();
                debug_assert_eq!(top, Some(l));
            }
        }
        self.remaining[i] += 1;
        self.placed[i] -= 1;
        l
    }

    /// Fills the word to full length with the smallest legal letters. Any
    /// prefix extends to a full word: closing the open letters from the top
    /// down and then appending each unused letter as a run is always legal.
    fn descend(&mut self) {
        while self.word.len() < self.total {
            let l = self.min_placeable(1).expect("every prefix is completable");
            self.place(l);
        }
    }

    fn current(&self) -> StirlingPerm {
        StirlingPerm {
            word: self.word.clone(),
        }
    }
}

impl Iterator for StirlingIter {
    type Item = StirlingPerm;

    fn next(&mut self) -> Option<StirlingPerm> {
        match self.state {
            IterState::Done => None,
            IterState::Fresh => {
                self.state = IterState::Mid;
                self.descend();
                Some(self.current())
            }
            IterState::Mid => loop {
                if self.word.is_empty() {
                    self.state = IterState::Done;
                    return None;
                }
                let last = self.unplace();
                if let Some(l) = self.min_placeable(last + 1) {
                    self.place(l);
                    self.descend();
                    return Some(self.current());
                }
            },
        }
    }
}

/// Streams the Stirling permutations of `spec` in lexicographic order.
pub fn enumerate(spec: &MultisetSpec) -> Result<StirlingIter> {
    let total = spec.total_letters();
    if total > MAX_LETTERS {
        return Err(Error::BoundExceeded {
            what: "letters",
            got: total,
            max: MAX_LETTERS,
        });
    }
    Ok(StirlingIter {
        mult: spec.mult.clone(),
        remaining: spec.mult.clone(),
        placed: vec![0; spec.mult.len()],
        open: Vec::new(),
        word: Vec::new(),
        total,
        state: IterState::Fresh,
    })
}

// ---------------------------------------------------------------------------
// Word statistics
// ---------------------------------------------------------------------------

/// `(asc, des, plat)` over the zero-padded word: positions `0..=len`
/// comparing `w_i` with `w_{i+1}`, where `w_0 = w_{len+1} = 0`.
pub fn basic_counts(word: &[u16]) -> (usize, usize, usize) {
    let at = |i: usize| -> u16 {
        if i == 0 || i > word.len() {
            0
        } else {
            word[i - 1]
        }
    };
    let (mut asc, mut des, mut plat) = (0, 0, 0);
    for i in 0..=word.len() {
        match at(i).cmp(&at(i + 1)) {
            std::cmp::Ordering::Less => asc += 1,
            std::cmp::Ordering::Greater => des += 1,
            std::cmp::Ordering::Equal => plat += 1,
        }
    }
    (asc, des, plat)
}

/// Ascent-plateau and left-ascent-plateau letter sets. A plateau at 1-based
/// position `i` (`w_{i-1} < w_i = w_{i+1}`) is an ascent-plateau for
/// `2 <= i <= len-1` and a left ascent-plateau for `1 <= i <= len-1`, with
/// `w_0 = 0`.
pub fn plateau_sets(word: &[u16]) -> (BTreeSet<u16>, BTreeSet<u16>) {
    let mut ap = BTreeSet::new();
    let mut lap = BTreeSet::new();
    for i in 1..word.len() {
        let cur = word[i - 1];
        if cur != word[i] {
            continue;
        }
        let prev = if i >= 2 { word[i - 2] } else { 0 };
        if prev < cur {
            lap.insert(cur);
            if i >= 2 {
                ap.insert(cur);
            }
        }
    }
    (ap, lap)
}

/// Decomposition into maximal substrings starting at left-to-right minima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Half-open index ranges `[start, end)` of the blocks, left to right.
    pub blocks: Vec<(usize, usize)>,
    /// Number of blocks with exactly two entries.
    pub bk2: usize,
    /// Letters that are left-to-right minima (strict, or at position 1).
    pub lrmin: BTreeSet<u16>,
}

pub fn block_decomposition(word: &[u16]) -> BlockDecomposition {
    let mut starts = Vec::new();
    let mut lrmin = BTreeSet::new();
    let mut min = u16::MAX;
    for (i, &w) in word.iter().enumerate() {
        if i == 0 || w < min {
            starts.push(i);
            lrmin.insert(w);
        }
        min = min.min(w);
    }
    let mut blocks = Vec::with_capacity(starts.len());
    for (k, &s) in starts.iter().enumerate() {
        let e = starts.get(k + 1).copied().unwrap_or(word.len());
        blocks.push((s, e));
    }
    let bk2 = blocks.iter().filter(|(s, e)| e - s == 2).count();
    BlockDecomposition { blocks, bk2, lrmin }
}

/// Right-to-left minima (weak inequality, first-appearance convention) and
/// even-indexed entries (letters whose first appearance is at an even
/// 1-based position), as letter sets.
pub fn rlmin_even_sets(word: &[u16]) -> (BTreeSet<u16>, BTreeSet<u16>) {
    let n = word.len();
    let mut suffix_min = vec![u16::MAX; n + 1];
    for i in (0..n).rev() {
        suffix_min[i] = word[i].min(suffix_min[i + 1]);
    }
    let mut seen = BTreeSet::new();
    let mut rlmin = BTreeSet::new();
    let mut even = BTreeSet::new();
    for (i, &w) in word.iter().enumerate() {
        if !seen.insert(w) {
            continue; // only the first appearance counts
        }
        if w <= suffix_min[i + 1] {
            rlmin.insert(w);
        }
        if (i + 1) % 2 == 0 {
            even.insert(w);
        }
    }
    (rlmin, even)
}

/// Returns `m` when the word's letter content is the restricted multiset
/// `{1, 2, 2, ..., m, m}`.
pub fn restricted_shape(word: &[u16]) -> Option<u16> {
    let m = *word.iter().max()?;
    let mut counts = vec![0u16; m as usize + 1];
    for &w in word {
        counts[w as usize] += 1;
    }
    let ok = counts[1] == 1 && (2..=m as usize).all(|l| counts[l] == 2);
    ok.then_some(m)
}

/// The statistics specific to restricted Stirling permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedStats {
    /// Ascent-plateaux that are not right-to-left minima.
    pub pap: BTreeSet<u16>,
    /// Ascent-plateaux that are right-to-left minima.
    pub impap: BTreeSet<u16>,
    /// Letters that, in some value-restriction `{1,2,2,...,k,k}` of the word,
    /// are an improper ascent-plateau or close a block of exactly two
    /// entries.
    pub trace: BTreeSet<u16>,
    /// `(m-1) - pap - impap - bk2`.
    pub cap: usize,
}

pub fn restricted_stats(word: &[u16]) -> Result<RestrictedStats> {
    let m = restricted_shape(word).ok_or(Error::NotRestrictedShape)?;
    let (ap, _) = plateau_sets(word);
    let (rlmin, _) = rlmin_even_sets(word);
    let pap: BTreeSet<u16> = ap.difference(&rlmin).copied().collect();
    let impap: BTreeSet<u16> = ap.intersection(&rlmin).copied().collect();

    let mut trace = BTreeSet::new();
    for k in 2..=m {
        let sub: Vec<u16> = word.iter().copied().filter(|&w| w <= k).collect();
        let (sub_ap, _) = plateau_sets(&sub);
        let (sub_rlmin, _) = rlmin_even_sets(&sub);
        trace.extend(sub_ap.intersection(&sub_rlmin).copied());
        for &(s, e) in &block_decomposition(&sub).blocks {
            if e - s == 2 {
                trace.insert(sub[s + 1]);
            }
        }
    }

    let bk2 = block_decomposition(word).bk2;
    // ascent-plateau letters and two-entry-block letters are disjoint subsets
    // of {2..m}, so the difference cannot underflow on a valid word
    let cap = (m as usize - 1)
        .checked_sub(ap.len() + bk2)
        .ok_or(Error::InvalidWord)?;
    Ok(RestrictedStats {
        pap,
        impap,
        trace,
        cap,
    })
}

/// Every statistic of one word. `trace`/`cap` are present only for words
/// over a restricted multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatRecord {
    pub asc: usize,
    pub des: usize,
    pub plat: usize,
    pub ap: BTreeSet<u16>,
    pub lap: BTreeSet<u16>,
    pub blocks: Vec<(usize, usize)>,
    pub bk2: usize,
    pub lrmin: BTreeSet<u16>,
    pub rlmin: BTreeSet<u16>,
    pub even: BTreeSet<u16>,
    pub pap: BTreeSet<u16>,
    pub impap: BTreeSet<u16>,
    pub trace: Option<BTreeSet<u16>>,
    pub cap: Option<usize>,
}

impl StatRecord {
    /// Computes everything except the restriction-based statistics.
    pub fn compute(word: &[u16]) -> StatRecord {
        let (asc, des, plat) = basic_counts(word);
        let (ap, lap) = plateau_sets(word);
        let BlockDecomposition { blocks, bk2, lrmin } = block_decomposition(word);
        let (rlmin, even) = rlmin_even_sets(word);
        let pap: BTreeSet<u16> = ap.difference(&rlmin).copied().collect();
        let impap: BTreeSet<u16> = ap.intersection(&rlmin).copied().collect();
        StatRecord {
            asc,
            des,
            plat,
            ap,
            lap,
            blocks,
            bk2,
            lrmin,
            rlmin,
            even,
            pap,
            impap,
            trace: None,
            cap: None,
        }
    }

    /// Also fills `trace` and `cap` when the word has the restricted shape.
    pub fn compute_full(word: &[u16]) -> StatRecord {
        let mut rec = StatRecord::compute(word);
        if let Ok(r) = restricted_stats(word) {
            rec.trace = Some(r.trace);
            rec.cap = Some(r.cap);
        }
        rec
    }

    pub fn to_json(&self) -> serde_json::Value {
        let set =
            |s: &BTreeSet<u16>| serde_json::Value::from(s.iter().copied().collect::<Vec<_>>());
        let mut obj = serde_json::json!({
            "asc": self.asc,
            "des": self.des,
            "plat": self.plat,
            "ap": set(&self.ap),
            "lap": set(&self.lap),
            "blocks": self.blocks.iter().map(|&(s, e)| vec![s, e]).collect::<Vec<_>>(),
            "bk2": self.bk2,
            "lrmin": set(&self.lrmin),
            "rlmin": set(&self.rlmin),
            "even": set(&self.even),
            "pap": set(&self.pap),
            "impap": set(&self.impap),
        });
        if let (Some(trace), Some(cap)) = (&self.trace, self.cap) {
            obj["trace"] = set(trace);
            obj["cap"] = serde_json::Value::from(cap);
        }
        obj
    }
}

/// A word statistic usable as a generating-polynomial exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stat {
    Asc,
    Des,
    Plat,
    Ap,
    Lap,
    Bk2,
    Lrmin,
    Rlmin,
    Even,
    Pap,
    Impap,
    Trace,
    Cap,
}

impl Stat {
    pub fn needs_restricted(self) -> bool {
        matches!(self, Stat::Trace | Stat::Cap)
    }

    pub fn of(self, rec: &StatRecord) -> Result<usize> {
        Ok(match self {
            Stat::Asc => rec.asc,
            Stat::Des => rec.des,
            Stat::Plat => rec.plat,
            Stat::Ap => rec.ap.len(),
            Stat::Lap => rec.lap.len(),
            Stat::Bk2 => rec.bk2,
            Stat::Lrmin => rec.lrmin.len(),
            Stat::Rlmin => rec.rlmin.len(),
            Stat::Even => rec.even.len(),
            Stat::Pap => rec.pap.len(),
            Stat::Impap => rec.impap.len(),
            Stat::Trace => rec
                .trace
                .as_ref()
                .ok_or(Error::StatUnavailable("trace"))?
                .len(),
            Stat::Cap => rec.cap.ok_or(Error::StatUnavailable("cap"))?,
        })
    }
}

/// Distribution polynomial `sum_w prod_s x_s^{stat_s(w)}` over the full
/// enumeration. Repeating a variable sums the exponents, so composite
/// statistics like `exc+single` elsewhere have the analogue `(ap, x), (lap, x)`.
pub fn gen_poly(spec: &MultisetSpec, stats: &[(Stat, VarId)]) -> Result<Polynomial> {
    let need_restricted = stats.iter().any(|(s, _)| s.needs_restricted());
    let mut out = Polynomial::zero();
    for perm in enumerate(spec)? {
        let rec = if need_restricted {
            StatRecord::compute_full(perm.word())
        } else {
            StatRecord::compute(perm.word())
        };
        let mut exps: BTreeMap<VarId, u32> = BTreeMap::new();
        for &(stat, v) in stats {
            *exps.entry(v).or_insert(0) += stat.of(&rec)? as u32;
        }
        out.add_term(Monomial::from_exps(exps), BigInt::from(1));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::var;

    fn words(spec: &MultisetSpec) -> Vec<String> {
        enumerate(spec).unwrap().map(|w| w.to_string()).collect()
    }

    /// Brute-force oracle: all distinct multiset permutations, filtered.
    fn brute_force(spec: &MultisetSpec) -> Vec<Vec<u16>> {
        fn rec(
            remaining: &mut Vec<u16>,
            word: &mut Vec<u16>,
            out: &mut Vec<Vec<u16>>,
            total: usize,
        ) {
            if word.len() == total {
                out.push(word.clone());
                return;
            }
            for l in 1..=remaining.len() as u16 {
                if remaining[l as usize - 1] > 0 {
                    remaining[l as usize - 1] -= 1;
                    word.push(l);
                    rec(remaining, word, out, total);
                    word.pop();
                    remaining[l as usize - 1] += 1;
                }
            }
        }
        let mut all = Vec::new();
        rec(
            &mut spec.multiplicities().to_vec(),
            &mut Vec::new(),
            &mut all,
            spec.total_letters(),
        );
        all.into_iter().filter(|w| is_stirling(w, spec)).collect()
    }

    #[test]
    fn classical_small_sets() {
        assert_eq!(words(&MultisetSpec::classical(1)), ["11"]);
        assert_eq!(words(&MultisetSpec::classical(2)), ["1122", "1221", "2211"]);
        assert_eq!(words(&MultisetSpec::classical(0)), [""]);
    }

    #[test]
    fn restricted_small_sets() {
        assert_eq!(words(&MultisetSpec::restricted(1)), ["1"]);
        assert_eq!(words(&MultisetSpec::restricted(2)), ["122", "221"]);
        let q31: BTreeSet<String> = words(&MultisetSpec::restricted(3)).into_iter().collect();
        let expected: BTreeSet<String> = [
            "12233", "12332", "13322", "33122", "22133", "22331", "23321", "33221",
        ]
        .map(String::from)
        .into();
        assert_eq!(q31, expected);
    }

    #[test]
    fn matches_brute_force_in_lex_order() {
        let specs = [
            MultisetSpec::classical(3),
            MultisetSpec::classical(4),
            MultisetSpec::restricted(4),
            MultisetSpec::new(vec![3, 2]),
            MultisetSpec::new(vec![1, 2, 3]),
            MultisetSpec::new(vec![2, 0, 2]),
            MultisetSpec::new(vec![0, 1, 2, 1]),
        ];
        for spec in specs {
            let mut oracle = brute_force(&spec);
            oracle.sort();
            let got: Vec<Vec<u16>> = enumerate(&spec)
                .unwrap()
                .map(|w| w.word().to_vec())
                .collect();
            assert_eq!(got, oracle, "spec {:?}", spec.multiplicities());
        }
    }

    proptest::proptest! {
        #[test]
        fn random_multisets_match_brute_force(
            mult in proptest::collection::vec(0u16..=3, 1..4),
        ) {
            proptest::prop_assume!(mult.iter().map(|&m| m as usize).sum::<usize>() <= 7);
            let spec = MultisetSpec::new(mult);
            let mut oracle = brute_force(&spec);
            oracle.sort();
            let got: Vec<Vec<u16>> =
                enumerate(&spec).unwrap().map(|w| w.word().to_vec()).collect();
            proptest::prop_assert_eq!(got, oracle);
        }
    }

    #[test]
    fn counts_are_double_factorials() {
        use crate::classical::double_factorial;
        // |Q_n| = (2n-1)!!, |Q_{n+1}^{(1)}| = (2n)!!
        assert_eq!(enumerate(&MultisetSpec::classical(4)).unwrap().count(), 105);
        for n in 0..=5usize {
            let q = enumerate(&MultisetSpec::classical(n)).unwrap().count();
            assert_eq!(BigInt::from(q), double_factorial(2 * n as i64 - 1));
            let q1 = enumerate(&MultisetSpec::restricted(n + 1)).unwrap().count();
            assert_eq!(BigInt::from(q1), double_factorial(2 * n as i64));
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            enumerate(&MultisetSpec::classical(10)),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn validation() {
        let spec = MultisetSpec::classical(2);
        assert!(StirlingPerm::new(vec![1, 2, 2, 1], &spec).is_ok());
        assert!(StirlingPerm::new(vec![2, 1, 2, 1], &spec).is_err());
        assert!(StirlingPerm::new(vec![1, 1, 2], &spec).is_err());
    }

    #[test]
    fn display_switches_to_commas_for_big_letters() {
        let spec = MultisetSpec::classical(2);
        let w = StirlingPerm::new(vec![1, 2, 2, 1], &spec).unwrap();
        assert_eq!(w.to_string(), "1221");

        let mut mult = vec![0u16; 9];
        mult.extend([1, 1]); // letters 10 and 11 once each
        let spec = MultisetSpec::new(mult);
        let w = StirlingPerm::new(vec![11, 10], &spec).unwrap();
        assert_eq!(w.to_string(), "11,10");
    }

    #[test]
    fn basic_count_examples() {
        assert_eq!(basic_counts(&[1, 2, 2, 1]), (2, 2, 1));
        assert_eq!(basic_counts(&[1, 1]), (1, 1, 1));
        assert_eq!(basic_counts(&[1]), (1, 1, 0));
        assert_eq!(basic_counts(&[]), (0, 0, 1));
    }

    #[test]
    fn plateau_examples() {
        let (ap, lap) = plateau_sets(&[1, 1]);
        assert!(ap.is_empty());
        assert_eq!(lap, BTreeSet::from([1]));
        let (ap, _) = plateau_sets(&[1, 2, 2]);
        assert_eq!(ap, BTreeSet::from([2]));
        let (ap, lap) = plateau_sets(&[2, 2, 1, 1]);
        assert!(ap.is_empty());
        assert_eq!(lap, BTreeSet::from([2]));
    }

    #[test]
    fn block_examples() {
        assert_eq!(block_decomposition(&[3, 3, 2, 2, 1]).bk2, 2);
        let d = block_decomposition(&[1, 2, 2]);
        assert_eq!(d.blocks, [(0, 3)]);
        assert_eq!(d.bk2, 0);
        let d = block_decomposition(&[2, 2, 1]);
        assert_eq!(d.blocks, [(0, 2), (2, 3)]);
        assert_eq!(d.bk2, 1);
        // the final block is the whole suffix from the last minimum on
        let w = word_from_digits("883466439912552771").unwrap();
        let d = block_decomposition(&w);
        assert_eq!(d.blocks, [(0, 2), (2, 10), (10, 18)]);
    }

    #[test]
    fn rlmin_even_example() {
        let w = word_from_digits("4554122377366").unwrap();
        let (rlmin, even) = rlmin_even_sets(&w);
        assert_eq!(even, BTreeSet::from([2, 3, 5, 6]));
        assert_eq!(rlmin, BTreeSet::from([1, 2, 3, 6]));

        let (rlmin, even) = rlmin_even_sets(&[1, 1]);
        assert_eq!(rlmin, BTreeSet::from([1]));
        assert!(even.is_empty());

        let (_, even) = rlmin_even_sets(&[1, 2, 2, 3, 3]);
        assert_eq!(even, BTreeSet::from([2, 3]));
    }

    #[test]
    fn restricted_stat_examples() {
        let w = word_from_digits("884554122377366").unwrap();
        let r = restricted_stats(&w).unwrap();
        assert_eq!(r.pap, BTreeSet::from([5, 7]));
        assert_eq!(r.impap, BTreeSet::from([2, 6]));
        assert_eq!(r.trace, BTreeSet::from([2, 3, 4, 6, 8]));

        let r = restricted_stats(&[1, 2, 2]).unwrap();
        assert_eq!(r.impap, BTreeSet::from([2]));
        assert!(r.pap.is_empty());
        assert_eq!(r.trace, BTreeSet::from([2]));
        assert_eq!(r.cap, 0);

        let r = restricted_stats(&[2, 2, 1]).unwrap();
        assert_eq!(r.trace, BTreeSet::from([2]));
        assert_eq!(r.cap, 0);

        assert!(restricted_stats(&[1, 2, 2, 1]).is_err());
    }

    #[test]
    fn q1_partition_identity() {
        // pap + impap + cap + bk2 = m - 1 over all of Q_m^(1)
        for m in 1..=5usize {
            for w in enumerate(&MultisetSpec::restricted(m)).unwrap() {
                let r = restricted_stats(w.word()).unwrap();
                let b = block_decomposition(w.word()).bk2;
                assert_eq!(r.pap.len() + r.impap.len() + r.cap + b, m - 1);
            }
        }
    }

    #[test]
    fn gen_poly_examples() {
        let p = |s: &str| Polynomial::parse(s).unwrap();
        let triple = [
            (Stat::Asc, var("x")),
            (Stat::Des, var("y")),
            (Stat::Plat, var("z")),
        ];
        assert_eq!(
            gen_poly(&MultisetSpec::classical(3), &triple).unwrap(),
            p("x*y*z") * p("x^2*y^2 + x^2*z^2 + y^2*z^2 + 4*x*y^2*z + 4*x^2*y*z + 4*x*y*z^2")
        );
        let pdz = [
            (Stat::Plat, var("x")),
            (Stat::Des, var("y")),
            (Stat::Asc, var("z")),
        ];
        assert_eq!(
            gen_poly(&MultisetSpec::restricted(2), &pdz).unwrap(),
            p("x*y^2*z + x*y*z^2")
        );
        // six statistics over the eight restricted words on three letters
        let six = [
            (Stat::Pap, var("x")),
            (Stat::Cap, var("y")),
            (Stat::Impap, var("s")),
            (Stat::Bk2, var("t")),
            (Stat::Even, var("p")),
            (Stat::Trace, var("q")),
        ];
        assert_eq!(
            gen_poly(&MultisetSpec::restricted(3), &six).unwrap(),
            p("x*y*q*(1+p)^2 + q^2*(t+s*p)^2")
        );
        // trace is rejected outside the restricted shape
        assert!(gen_poly(&MultisetSpec::classical(2), &[(Stat::Trace, var("q"))]).is_err());
    }
}
