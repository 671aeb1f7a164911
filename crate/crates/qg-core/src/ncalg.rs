//! Noncommutative polynomial algebra over a coefficient field, with oriented
//! rewriting.
//!
//! Words are sequences of generator indices; an [`NCPoly`] maps words to
//! coefficients.  A [`RewriteSystem`] holds subword-rewriting rules oriented
//! by a weighted graded-lexicographic [`MonomialOrder`]; every rule strictly
//! decreases the order, which makes reduction terminating regardless of
//! confluence.  Confluence itself is *checked*, not assumed: see
//! [`RewriteSystem::critical_pairs`].

use crate::scalar::Field;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// A word in the free monoid on the generators (empty word = identity).
pub type Word = Vec<u8>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("generator index {0} out of range for alphabet of size {1}")]
    GeneratorRange(u8, usize),
    #[error("rewrite rule is not strictly decreasing: word {0:?} in the right-hand side is not below the left-hand side {1:?}")]
    NotDecreasing(Word, Word),
    #[error("rewrite rule with empty left-hand side")]
    EmptyLhs,
    #[error("cannot orient the zero relation")]
    ZeroRelation,
    #[error("completion did not converge within {0} rounds")]
    CompletionDiverged(usize),
}

/// Weighted graded-lexicographic monomial order.
///
/// Words compare first by total weight (sum of per-generator weights, all
/// strictly positive), then letter-by-letter by the generator precedence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    weights: Vec<u64>,
    /// rank[g] = position of generator g in the precedence (0 = smallest).
    rank: Vec<usize>,
}

impl MonomialOrder {
    /// Plain graded-lex: all weights 1, precedence = index order.
    pub fn graded_lex(num_gens: usize) -> Self {
        MonomialOrder {
            weights: vec![1; num_gens],
            rank: (0..num_gens).collect(),
        }
    }

    /// Custom weights and precedence, given as the list of generators from
    /// smallest to largest.
    pub fn weighted(weights: Vec<u64>, precedence: Vec<u8>) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        assert_eq!(weights.len(), precedence.len());
        let mut rank = vec![usize::MAX; weights.len()];
        for (pos, &g) in precedence.iter().enumerate() {
            rank[g as usize] = pos;
        }
        assert!(rank.iter().all(|&r| r != usize::MAX), "precedence must be a permutation");
        MonomialOrder { weights, rank }
    }

    pub fn num_gens(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Precedence as a generator list, smallest first.
    pub fn precedence(&self) -> Vec<u8> {
        let mut gens: Vec<u8> = (0..self.rank.len() as u8).collect();
        gens.sort_by_key(|&g| self.rank[g as usize]);
        gens
    }

    pub fn weight(&self, w: &[u8]) -> u64 {
        w.iter().map(|&g| self.weights[g as usize]).sum()
    }

    pub fn cmp_words(&self, a: &[u8], b: &[u8]) -> Ordering {
        let wa = self.weight(a);
        let wb = self.weight(b);
        if wa != wb {
            return wa.cmp(&wb);
        }
        for (x, y) in a.iter().zip(b.iter()) {
            let rx = self.rank[*x as usize];
            let ry = self.rank[*y as usize];
            if rx != ry {
                return rx.cmp(&ry);
            }
        }
        a.len().cmp(&b.len())
    }
}

/// Noncommutative polynomial: finite map word -> nonzero coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct NCPoly<F: Field> {
    terms: BTreeMap<Word, F>,
}

impl<F: Field> NCPoly<F> {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        NCPoly::monomial(vec![], F::one())
    }

    pub fn gen(g: u8) -> Self {
        NCPoly::monomial(vec![g], F::one())
    }

    pub fn scalar(c: F) -> Self {
        NCPoly::monomial(vec![], c)
    }

    pub fn monomial(word: Word, coeff: F) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        NCPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &[u8]) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    /// Maximum word length appearing (0 for scalars and zero).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, word: Word, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().add(&coeff);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in other.terms() {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in other.terms() {
            r.add_term(w.clone(), c.neg());
        }
        r
    }

    pub fn neg(&self) -> Self {
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x.mul(c)))
                .collect(),
        }
    }

    /// Free product (concatenation of words); not reduced.
    pub fn mul(&self, other: &Self) -> Self {
        let mut r = NCPoly::zero();
        for (w1, c1) in self.terms() {
            for (w2, c2) in other.terms() {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                r.add_term(w, c1.mul(c2));
            }
        }
        r
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> NCPoly<G> {
        let mut r = NCPoly::zero();
        for (w, c) in self.terms() {
            r.add_term(w.clone(), f(c));
        }
        r
    }

    /// Leading word under the given order; `None` for zero.
    pub fn leading_word(&self, order: &MonomialOrder) -> Option<Word> {
        self.terms
            .keys()
            .max_by(|a, b| order.cmp_words(a, b))
            .cloned()
    }

    pub fn max_generator(&self) -> Option<u8> {
        self.terms.keys().flat_map(|w| w.iter().cloned()).max()
    }
}

/// Element of a two-fold tensor product; the two legs may live in different
/// algebras (e.g. sphere leg and quantum-group leg of a coaction).
#[derive(Debug, Clone, PartialEq)]
pub struct TensorPoly<F: Field> {
    terms: BTreeMap<(Word, Word), F>,
}

impl<F: Field> TensorPoly<F> {
    pub fn zero() -> Self {
        TensorPoly { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &F)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, left: Word, right: Word, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().add(&coeff);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn of(left: &NCPoly<F>, right: &NCPoly<F>) -> Self {
        let mut t = TensorPoly::zero();
        for (w1, c1) in left.terms() {
            for (w2, c2) in right.terms() {
                t.add_term(w1.clone(), w2.clone(), c1.mul(c2));
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for ((l, rt), c) in other.terms() {
            r.add_term(l.clone(), rt.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for ((l, rt), c) in other.terms() {
            r.add_term(l.clone(), rt.clone(), c.neg());
        }
        r
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut r = TensorPoly::zero();
        for ((l, rt), x) in self.terms() {
            r.add_term(l.clone(), rt.clone(), x.mul(c));
        }
        r
    }

    /// Componentwise product (leg-wise concatenation); not reduced.
    pub fn mul(&self, other: &Self) -> Self {
        let mut r = TensorPoly::zero();
        for ((l1, r1), c1) in self.terms() {
            for ((l2, r2), c2) in other.terms() {
                let mut l = l1.clone();
                l.extend_from_slice(l2);
                let mut rt = r1.clone();
                rt.extend_from_slice(r2);
                r.add_term(l, rt, c1.mul(c2));
            }
        }
        r
    }

    /// Normalize both legs with their respective rewrite systems.
    pub fn reduce_legs(&self, left: &RewriteSystem<F>, right: &RewriteSystem<F>) -> Self {
        let mut r = TensorPoly::zero();
        for ((l, rt), c) in self.terms() {
            let lp = left.reduce(&NCPoly::monomial(l.clone(), F::one()));
            let rp = right.reduce(&NCPoly::monomial(rt.clone(), F::one()));
            for (lw, lc) in lp.terms() {
                for (rw, rc) in rp.terms() {
                    r.add_term(lw.clone(), rw.clone(), c.mul(lc).mul(rc));
                }
            }
        }
        r
    }

    /// Apply a polynomial map to each left-leg word.
    pub fn map_left(&self, f: impl Fn(&Word) -> NCPoly<F>) -> Self {
        let mut r = TensorPoly::zero();
        for ((l, rt), c) in self.terms() {
            for (lw, lc) in f(l).terms() {
                r.add_term(lw.clone(), rt.clone(), c.mul(lc));
            }
        }
        r
    }

    /// Apply a polynomial map to each right-leg word.
    pub fn map_right(&self, f: impl Fn(&Word) -> NCPoly<F>) -> Self {
        let mut r = TensorPoly::zero();
        for ((l, rt), c) in self.terms() {
            for (rw, rc) in f(rt).terms() {
                r.add_term(l.clone(), rw.clone(), c.mul(rc));
            }
        }
        r
    }
}

/// Element of a three-fold tensor product (used for coassociativity checks).
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3Poly<F: Field> {
    terms: BTreeMap<(Word, Word, Word), F>,
}

impl<F: Field> Tensor3Poly<F> {
    pub fn zero() -> Self {
        Tensor3Poly { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: Word, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((a, b, c)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().add(&coeff);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for ((a, b, c), x) in other.terms.iter() {
            r.add_term(a.clone(), b.clone(), c.clone(), x.neg());
        }
        r
    }
}

/// Oriented rewrite rule `lhs -> rhs` with `rhs` strictly below `lhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Rule<F: Field> {
    pub lhs: Word,
    pub rhs: NCPoly<F>,
}

/// One overlap between two rules, with the reduced difference of its two
/// one-step resolutions.  The pair "resolves" when the residual is zero.
#[derive(Debug, Clone)]
pub struct CriticalPair<F: Field> {
    pub left_rule: usize,
    pub right_rule: usize,
    pub word: Word,
    pub residual: NCPoly<F>,
}

impl<F: Field> CriticalPair<F> {
    pub fn is_resolved(&self) -> bool {
        self.residual.is_zero()
    }
}

/// A terminating subword-rewriting system.
#[derive(Debug, Clone, PartialEq)]
pub struct RewriteSystem<F: Field> {
    num_gens: usize,
    order: MonomialOrder,
    rules: Vec<Rule<F>>,
    /// `None`: every critical pair resolves (fully confluent, once certified).
    /// `Some(w)`: confluence certified only for overlap words of weight <= w,
    /// which still guarantees unique normal forms for all elements of weight
    /// <= w, since rewriting never increases the weight.
    confluence_weight: Option<u64>,
    /// Rule indices bucketed by the first letter of their left-hand side.
    by_first: Vec<Vec<usize>>,
}

impl<F: Field> RewriteSystem<F> {
    /// Build a system, validating that every rule strictly decreases the
    /// monomial order (which guarantees termination of [`Self::reduce`]).
    pub fn new(
        num_gens: usize,
        order: MonomialOrder,
        rules: Vec<Rule<F>>,
    ) -> Result<Self, AlgError> {
        assert_eq!(order.num_gens(), num_gens);
        for rule in &rules {
            if rule.lhs.is_empty() {
                return Err(AlgError::EmptyLhs);
            }
            for &g in &rule.lhs {
                if g as usize >= num_gens {
                    return Err(AlgError::GeneratorRange(g, num_gens));
                }
            }
            for (w, _) in rule.rhs.terms() {
                for &g in w {
                    if g as usize >= num_gens {
                        return Err(AlgError::GeneratorRange(g, num_gens));
                    }
                }
                if order.cmp_words(w, &rule.lhs) != Ordering::Less {
                    return Err(AlgError::NotDecreasing(w.clone(), rule.lhs.clone()));
                }
            }
        }
        let mut by_first = vec![Vec::new(); num_gens];
        for (ri, rule) in rules.iter().enumerate() {
            by_first[rule.lhs[0] as usize].push(ri);
        }
        Ok(RewriteSystem { num_gens, order, rules, confluence_weight: None, by_first })
    }

    pub fn num_gens(&self) -> usize {
        self.num_gens
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn rules(&self) -> &[Rule<F>] {
        &self.rules
    }

    /// The certified confluence bound (see the field docs); `None` before
    /// completion has run or when every critical pair resolves.
    pub fn confluence_weight(&self) -> Option<u64> {
        self.confluence_weight
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> RewriteSystem<G> {
        RewriteSystem {
            num_gens: self.num_gens,
            order: self.order.clone(),
            rules: self
                .rules
                .iter()
                .map(|r| Rule {
                    lhs: r.lhs.clone(),
                    rhs: r.rhs.map_coeffs(f),
                })
                .collect(),
            confluence_weight: self.confluence_weight,
            by_first: self.by_first.clone(),
        }
    }

    /// Leftmost redex in a word: `(position, rule index)`.
    fn find_redex(&self, w: &[u8]) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for &ri in &self.by_first[w[pos] as usize] {
                let rule = &self.rules[ri];
                let l = rule.lhs.len();
                if pos + l <= w.len() && w[pos..pos + l] == rule.lhs[..] {
                    return Some((pos, ri));
                }
            }
        }
        None
    }

    /// Fully reduce a polynomial to its normal form.
    pub fn reduce(&self, p: &NCPoly<F>) -> NCPoly<F> {
        // Keep the pending terms in a map so words produced along different
        // rewrite paths merge (and often cancel) instead of being expanded
        // once per path.
        let mut out = NCPoly::zero();
        let mut pending: std::collections::BTreeMap<Word, F> = std::collections::BTreeMap::new();
        for (w, c) in p.terms() {
            pending.insert(w.clone(), c.clone());
        }
        while let Some((w, c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.find_redex(&w) {
                None => out.add_term(w, c),
                Some((pos, ri)) => {
                    let rule = &self.rules[ri];
                    let l = rule.lhs.len();
                    for (rw, rc) in rule.rhs.terms() {
                        let mut nw = Vec::with_capacity(w.len() - l + rw.len());
                        nw.extend_from_slice(&w[..pos]);
                        nw.extend_from_slice(rw);
                        nw.extend_from_slice(&w[pos + l..]);
                        let x = c.mul(rc);
                        match pending.entry(nw) {
                            std::collections::btree_map::Entry::Vacant(e) => {
                                e.insert(x);
                            }
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                let merged = e.get().add(&x);
                                if merged.is_zero() {
                                    e.remove();
                                } else {
                                    *e.get_mut() = merged;
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// True if the word contains no rule left-hand side.
    pub fn is_normal(&self, w: &[u8]) -> bool {
        self.find_redex(w).is_none()
    }

    /// All overlap ambiguities between rules, each with the reduced residual
    /// of its two resolutions.  The system is locally confluent (hence, being
    /// terminating, confluent) iff all residuals vanish.
    pub fn critical_pairs(&self) -> Vec<CriticalPair<F>> {
        self.critical_pairs_bounded(None).0
    }

    /// Like [`critical_pairs`](Self::critical_pairs), but skips ambiguity
    /// words whose weight exceeds `cap`, returning how many were skipped.
    /// Rewriting never increases weight, so resolving all pairs up to `cap`
    /// still certifies unique normal forms for elements of weight `<= cap`.
    pub fn critical_pairs_bounded(&self, cap: Option<u64>) -> (Vec<CriticalPair<F>>, usize) {
        let mut out = Vec::new();
        let mut skipped = 0usize;
        let mut push = |sys: &Self, i: usize, j: usize, w: &[u8], pi: usize, pj: usize| {
            if cap.is_some_and(|c| sys.order.weight(w) > c) {
                skipped += 1;
            } else {
                out.push(sys.resolve_ambiguity(i, j, w, pi, pj));
            }
        };
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                // Proper overlap: a nonempty proper suffix of lhs1 equals a
                // prefix of lhs2; ambiguity word = lhs1 glued with lhs2.
                for k in 1..r1.lhs.len().min(r2.lhs.len()) {
                    if r1.lhs[r1.lhs.len() - k..] == r2.lhs[..k] {
                        let mut w = r1.lhs.clone();
                        w.extend_from_slice(&r2.lhs[k..]);
                        let pj = w.len() - r2.lhs.len();
                        push(self, i, j, &w, 0, pj);
                    }
                }
                // Containment: lhs2 occurs properly inside lhs1.
                if i != j && r2.lhs.len() < r1.lhs.len() {
                    for pos in 0..=(r1.lhs.len() - r2.lhs.len()) {
                        if r1.lhs[pos..pos + r2.lhs.len()] == r2.lhs[..] {
                            push(self, i, j, &r1.lhs.clone(), 0, pos);
                        }
                    }
                }
            }
        }
        (out, skipped)
    }

    fn resolve_ambiguity(
        &self,
        i: usize,
        j: usize,
        w: &[u8],
        pos_i: usize,
        pos_j: usize,
    ) -> CriticalPair<F> {
        let t1 = self.apply_at(w, pos_i, i);
        let t2 = self.apply_at(w, pos_j, j);
        let residual = self.reduce(&t1).sub(&self.reduce(&t2));
        CriticalPair {
            left_rule: i,
            right_rule: j,
            word: w.to_vec(),
            residual,
        }
    }

    fn apply_at(&self, w: &[u8], pos: usize, ri: usize) -> NCPoly<F> {
        let rule = &self.rules[ri];
        let l = rule.lhs.len();
        debug_assert_eq!(&w[pos..pos + l], &rule.lhs[..]);
        let mut p = NCPoly::zero();
        for (rw, rc) in rule.rhs.terms() {
            let mut nw = Vec::with_capacity(w.len() - l + rw.len());
            nw.extend_from_slice(&w[..pos]);
            nw.extend_from_slice(rw);
            nw.extend_from_slice(&w[pos + l..]);
            p.add_term(nw, rc.clone());
        }
        p
    }

    /// All normal words of length at most `max_degree`, sorted by the
    /// monomial order (the empty word first).
    pub fn basis_words(&self, max_degree: usize) -> Vec<Word> {
        let mut out: Vec<Word> = vec![vec![]];
        let mut layer: Vec<Word> = vec![vec![]];
        for _ in 0..max_degree {
            let mut next = Vec::new();
            for w in &layer {
                for g in 0..self.num_gens as u8 {
                    let mut nw = w.clone();
                    nw.push(g);
                    // Only suffixes containing the new letter can form a new
                    // redex, but a full check is cheap and simpler.
                    if self.is_normal(&nw) {
                        next.push(nw);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out.sort_by(|a, b| self.order.cmp_words(a, b));
        out
    }
}

/// Orient a single relation `p = 0` under `order`: returns `(lhs, rhs)` with
/// `lhs` the leading word and `rhs = lhs - p/c` for the leading coefficient
/// `c`.
pub fn orient<F: Field>(p: &NCPoly<F>, order: &MonomialOrder) -> Result<Rule<F>, AlgError> {
    let lhs = p.leading_word(order).ok_or(AlgError::ZeroRelation)?;
    let c = p.coeff(&lhs);
    let cinv = c.try_inv().expect("leading coefficient nonzero");
    let mut rhs = NCPoly::zero();
    for (w, x) in p.terms() {
        if *w == lhs {
            continue;
        }
        rhs.add_term(w.clone(), x.mul(&cinv).neg());
    }
    Ok(Rule { lhs, rhs })
}

/// Derive an inter-reduced rewrite system from a set of relations by linear
/// re-orientation only (no completion: overlaps are NOT resolved here; run
/// [`RewriteSystem::critical_pairs`] afterwards to certify confluence).
pub fn inter_reduce<F: Field>(
    num_gens: usize,
    order: &MonomialOrder,
    relations: &[NCPoly<F>],
) -> Result<RewriteSystem<F>, AlgError> {
    let mut rules: Vec<Rule<F>> = Vec::new();
    let mut queue: Vec<NCPoly<F>> = relations.to_vec();
    let contains = |hay: &[u8], needle: &[u8]| -> bool {
        hay.len() >= needle.len()
            && (0..=(hay.len() - needle.len())).any(|p| &hay[p..p + needle.len()] == needle)
    };
    while let Some(p) = queue.pop() {
        let sys = RewriteSystem::new(num_gens, order.clone(), rules.clone())?;
        let p = sys.reduce(&p);
        if p.is_zero() {
            continue;
        }
        let rule = orient(&p, order)?;
        // Any existing rule whose lhs now contains the new lhs must be
        // re-processed as a plain relation.
        let (keep, redo): (Vec<Rule<F>>, Vec<Rule<F>>) = rules
            .into_iter()
            .partition(|r| !contains(&r.lhs, &rule.lhs));
        rules = keep;
        for r in redo {
            queue.push(NCPoly::monomial(r.lhs.clone(), F::one()).sub(&r.rhs));
        }
        rules.push(rule);
    }
    // Normalize right-hand sides against the full rule set (terminates since
    // rewriting strictly decreases the order).
    loop {
        let sys = RewriteSystem::new(num_gens, order.clone(), rules.clone())?;
        let mut changed = false;
        let mut next = Vec::with_capacity(rules.len());
        for r in &rules {
            let reduced = sys.reduce(&r.rhs);
            if reduced != r.rhs {
                changed = true;
            }
            next.push(Rule { lhs: r.lhs.clone(), rhs: reduced });
        }
        rules = next;
        if !changed {
            break;
        }
    }
    RewriteSystem::new(num_gens, order.clone(), rules)
}

/// Knuth-Bendix completion: repeatedly orient unresolved critical-pair
/// residuals into new rules until the system is locally confluent, giving up
/// after `max_rounds` rounds.
///
/// With `cap = Some(w)`, ambiguity words of weight above `w` are ignored; the
/// result then certifies unique normal forms only for elements of weight
/// `<= w` (recorded in [`RewriteSystem::confluence_weight`]).  This handles
/// presentations whose full rewriting system is infinite.
pub fn complete<F: Field>(
    mut sys: RewriteSystem<F>,
    cap: Option<u64>,
    max_rounds: usize,
) -> Result<RewriteSystem<F>, AlgError> {
    let trace = std::env::var_os("QG_TRACE_COMPLETION").is_some();
    for round in 0..max_rounds {
        let (pairs, skipped) = sys.critical_pairs_bounded(cap);
        let residuals: Vec<NCPoly<F>> = pairs
            .into_iter()
            .filter(|cp| !cp.is_resolved())
            .map(|cp| cp.residual)
            .collect();
        if trace {
            eprintln!(
                "completion round {round}: {} rules, {} unresolved residuals, {} skipped",
                sys.rules.len(),
                residuals.len(),
                skipped
            );
        }
        if residuals.is_empty() {
            sys.confluence_weight = if skipped == 0 { None } else { cap };
            return Ok(sys);
        }
        let mut rels: Vec<NCPoly<F>> = sys
            .rules
            .iter()
            .map(|r| NCPoly::monomial(r.lhs.clone(), F::one()).sub(&r.rhs))
            .collect();
        rels.extend(residuals);
        sys = inter_reduce(sys.num_gens, &sys.order.clone(), &rels)?;
    }
    Err(AlgError::CompletionDiverged(max_rounds))
}

/// Render a word like `a*b^2*c` using the given generator names.
pub fn fmt_word(w: &[u8], names: &[&str]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < w.len() {
        let g = w[i];
        let mut k = 1;
        while i + k < w.len() && w[i + k] == g {
            k += 1;
        }
        if !out.is_empty() {
            out.push('*');
        }
        if k == 1 {
            let _ = write!(out, "{}", names[g as usize]);
        } else {
            let _ = write!(out, "{}^{}", names[g as usize], k);
        }
        i += k;
    }
    out
}

/// Render a polynomial with terms sorted ascending in the monomial order.
pub fn fmt_poly<F: Field>(p: &NCPoly<F>, names: &[&str], order: &MonomialOrder) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&Word, &F)> = p.terms().collect();
    terms.sort_by(|a, b| order.cmp_words(a.0, b.0));
    let mut out = String::new();
    for (idx, (w, c)) in terms.into_iter().enumerate() {
        let neg = c.print_as_negative();
        let c_abs = if neg { c.neg() } else { c.clone() };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let word_str = fmt_word(w, names);
        if w.is_empty() {
            if c_abs.is_composite() {
                let _ = write!(out, "({c_abs})");
            } else {
                let _ = write!(out, "{c_abs}");
            }
        } else if c_abs == F::one() {
            out.push_str(&word_str);
        } else if c_abs.is_composite() {
            let _ = write!(out, "({c_abs})*{word_str}");
        } else {
            let _ = write!(out, "{c_abs}*{word_str}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QScalar;

    fn q() -> QScalar {
        QScalar::q()
    }

    /// The quantum plane yx -> q^{-1} xy.
    fn qplane() -> RewriteSystem<QScalar> {
        let rule = Rule {
            lhs: vec![1, 0],
            rhs: NCPoly::monomial(vec![0, 1], QScalar::q_pow(-1)),
        };
        RewriteSystem::new(2, MonomialOrder::graded_lex(2), vec![rule]).unwrap()
    }

    #[test]
    fn reduce_quantum_plane() {
        let sys = qplane();
        // y x y -> q^{-1} x y y
        let p = NCPoly::monomial(vec![1, 0, 1], QScalar::one());
        let r = sys.reduce(&p);
        assert_eq!(r, NCPoly::monomial(vec![0, 1, 1], QScalar::q_pow(-1)));
    }

    #[test]
    fn orientation_validated() {
        // x y -> y x with graded-lex x<y increases; must be rejected
        let bad = Rule {
            lhs: vec![0, 1],
            rhs: NCPoly::monomial(vec![1, 0], QScalar::one()),
        };
        assert!(RewriteSystem::new(2, MonomialOrder::graded_lex(2), vec![bad]).is_err());
    }

    #[test]
    fn basis_words_quantum_plane() {
        let sys = qplane();
        // normal words of degree <= 2: 1, x, y, xx, xy, yy
        let b = sys.basis_words(2);
        assert_eq!(b.len(), 6);
        assert_eq!(b[0], Vec::<u8>::new());
    }

    #[test]
    fn critical_pairs_resolve_for_qplane() {
        let sys = qplane();
        let cps = sys.critical_pairs();
        // single rule yx: self-overlap yxyx? suffix x vs prefix y: none.
        assert!(cps.iter().all(|cp| cp.is_resolved()));
    }

    #[test]
    fn broken_system_reports_unresolved_pair() {
        // ba -> ab and ba -> 2ab cannot coexist: their containment overlap
        // has residual -ab.
        let r1 = Rule {
            lhs: vec![1, 0],
            rhs: NCPoly::monomial(vec![0, 1], QScalar::one()),
        };
        let r2 = Rule {
            lhs: vec![1, 0, 0],
            rhs: NCPoly::monomial(vec![0, 0, 1], QScalar::from_int(2)),
        };
        let sys = RewriteSystem::new(2, MonomialOrder::graded_lex(2), vec![r1, r2]).unwrap();
        let cps = sys.critical_pairs();
        assert!(cps.iter().any(|cp| !cp.is_resolved()));
    }

    #[test]
    fn inter_reduce_orients() {
        // relation: yx - q^{-1} xy = 0  ->  rule yx -> q^{-1} xy
        let rel = NCPoly::monomial(vec![1, 0], QScalar::one())
            .sub(&NCPoly::monomial(vec![0, 1], QScalar::q_pow(-1)));
        let sys = inter_reduce(2, &MonomialOrder::graded_lex(2), &[rel]).unwrap();
        assert_eq!(sys.rules().len(), 1);
        assert_eq!(sys.rules()[0].lhs, vec![1, 0]);
        let _ = q();
    }

    #[test]
    fn fmt_helpers() {
        let names = ["a", "b"];
        assert_eq!(fmt_word(&[0, 1, 1], &names), "a*b^2");
        let p = NCPoly::one().add(&NCPoly::monomial(vec![1, 0], QScalar::q_pow(-1)));
        assert_eq!(
            fmt_poly(&p, &names, &MonomialOrder::graded_lex(2)),
            "1 + q^-1*b*a"
        );
    }
}
