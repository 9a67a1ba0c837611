use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Form type `(p, q)`: `p` holomorphic and `q` antiholomorphic factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bidegree {
    pub p: usize,
    pub q: usize,
}

impl Bidegree {
    pub const fn new(p: usize, q: usize) -> Self {
        Bidegree { p, q }
    }

    pub fn total(self) -> usize {
        self.p + self.q
    }

    pub fn conj(self) -> Self {
        Bidegree::new(self.q, self.p)
    }

    /// `self + (dp, dq)`, or `None` when it leaves `0..=n` in either slot.
    pub fn shift(self, dp: i32, dq: i32, n: usize) -> Option<Bidegree> {
        let p = self.p as i32 + dp;
        let q = self.q as i32 + dq;
        if p < 0 || q < 0 || p > n as i32 || q > n as i32 {
            None
        } else {
            Some(Bidegree::new(p as usize, q as usize))
        }
    }

    /// All bidegrees of complex dimension `n`, `p` major.
    pub fn all(n: usize) -> impl Iterator<Item = Bidegree> {
        (0..=n).flat_map(move |p| (0..=n).map(move |q| Bidegree::new(p, q)))
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Fourier weight `w ∈ ℤ^k`; empty for invariant forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(k: usize) -> Self {
        Weight(vec![0; k])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }

    /// Componentwise sum; an empty weight acts as zero.
    pub fn add(&self, other: &Weight) -> Weight {
        match (self.0.is_empty(), other.0.is_empty()) {
            (true, _) => other.clone(),
            (_, true) => self.clone(),
            _ => {
                assert_eq!(self.0.len(), other.0.len(), "weights of different rank");
                Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
            }
        }
    }

    /// Every weight with `|w_a| ≤ bound`, in lexicographic order.
    pub fn box_of(rank: usize, bound: u32) -> Vec<Weight> {
        let b = bound as i32;
        let mut out = vec![Weight(Vec::new())];
        for _ in 0..rank {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (-b..=b).map(move |x| {
                        let mut v = w.0.clone();
                        v.push(x);
                        Weight(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Indices set in `mask`, ascending.
pub fn mask_indices(mask: u16) -> Vec<usize> {
    (0..16).filter(|k| mask & (1 << k) != 0).collect()
}

/// Number of pairs `(a, b)` with `a ∈ x`, `b ∈ y`, `a > b`.
fn inversions(x: u16, y: u16) -> u32 {
    mask_indices(y)
        .into_iter()
        .map(|b| (x >> (b + 1)).count_ones())
        .sum()
}

/// `e_w · θ^I ∧ θ̄^J` with `I = holo`, `J = anti` as bitmasks (bit `k` is
/// generator `k + 1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub weight: Weight,
    pub holo: u16,
    pub anti: u16,
}

impl Monomial {
    pub fn new(weight: Weight, holo: u16, anti: u16) -> Self {
        Monomial { weight, holo, anti }
    }

    pub fn bidegree(&self) -> Bidegree {
        Bidegree::new(self.holo.count_ones() as usize, self.anti.count_ones() as usize)
    }

    pub fn degree(&self) -> usize {
        self.bidegree().total()
    }

    /// `self ∧ other` as a sign and monomial, or `None` when a factor repeats.
    pub fn wedge(&self, other: &Monomial) -> Option<(i32, Monomial)> {
        if self.holo & other.holo != 0 || self.anti & other.anti != 0 {
            return None;
        }
        let swaps = inversions(self.holo, other.holo)
            + self.anti.count_ones() * other.holo.count_ones()
            + inversions(self.anti, other.anti);
        let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
        Some((
            sign,
            Monomial::new(
                self.weight.add(&other.weight),
                self.holo | other.holo,
                self.anti | other.anti,
            ),
        ))
    }

    /// Complex conjugate as a sign and monomial:
    /// `conj(θ^I ∧ θ̄^J) = θ̄^I ∧ θ^J = (−1)^{|I||J|} θ^J ∧ θ̄^I`.
    pub fn conj(&self) -> (i32, Monomial) {
        let s = self.holo.count_ones() * self.anti.count_ones();
        (
            if s.is_multiple_of(2) { 1 } else { -1 },
            Monomial::new(self.weight.neg(), self.anti, self.holo),
        )
    }
}

/// Lexicographic order on an ascending index list; masks of equal size
/// compare as their sorted index sequences.
fn set_cmp(x: u16, y: u16) -> Ordering {
    mask_indices(x).cmp(&mask_indices(y))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| set_cmp(self.holo, other.holo))
            .then_with(|| set_cmp(self.anti, other.anti))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.weight.0.is_empty() && !self.weight.is_zero() {
            parts.push(format!("e{}", self.weight));
        }
        let mut gens: Vec<String> = mask_indices(self.holo).iter().map(|k| format!("θ{}", k + 1)).collect();
        gens.extend(mask_indices(self.anti).iter().map(|k| format!("θ̄{}", k + 1)));
        if gens.is_empty() {
            gens.push("1".into());
        }
        parts.push(gens.join("∧"));
        write!(f, "{}", parts.join("·"))
    }
}

/// A sparse complex differential form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Form {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Form {
    pub fn zero() -> Self {
        Form::default()
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut f = Form::zero();
        f.add_term(m, &c);
        f
    }

    /// The invariant constant function `c`.
    pub fn constant(c: Scalar) -> Self {
        Form::term(Monomial::new(Weight::default(), 0, 0), c)
    }

    /// A single generator `θ^k` (`anti = false`) or `θ̄^k`, 1-based.
    pub fn generator(k: usize, anti: bool) -> Self {
        assert!(k >= 1);
        let bit = 1u16 << (k - 1);
        let m = if anti {
            Monomial::new(Weight::default(), 0, bit)
        } else {
            Monomial::new(Weight::default(), bit, 0)
        };
        Form::term(m, Scalar::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn add(&self, other: &Form) -> Form {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.scale(&Scalar::from_i64(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Form {
        if s.is_zero() {
            return Form::zero();
        }
        Form {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn wedge(&self, other: &Form) -> Form {
        let mut out = Form::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some((sign, m)) = a.wedge(b) {
                    let c = x * y;
                    let c = if sign < 0 { -c } else { c };
                    out.add_term(m, &c);
                }
            }
        }
        out
    }

    pub fn conjugate(&self) -> Form {
        let mut out = Form::zero();
        for (m, c) in &self.terms {
            let (sign, cm) = m.conj();
            let v = c.conj();
            out.add_term(cm, &if sign < 0 { -v } else { v });
        }
        out
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// The part of bidegree `b`.
    pub fn component(&self, b: Bidegree) -> Form {
        Form {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.bidegree() == b)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The part of total degree `r`.
    pub fn degree_part(&self, r: usize) -> Form {
        Form {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == r)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The part of weight `w`.
    pub fn weight_part(&self, w: &Weight) -> Form {
        Form {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight == *w || (m.weight.is_zero() && w.is_zero()))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `Some(b)` when every term has bidegree `b`; the zero form has none.
    pub fn bidegree(&self) -> Option<Bidegree> {
        let mut it = self.terms.keys().map(Monomial::bidegree);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    /// Distinct bidegrees present.
    pub fn bidegrees(&self) -> Vec<Bidegree> {
        let mut v: Vec<Bidegree> = self.terms.keys().map(Monomial::bidegree).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn weights(&self) -> Vec<Weight> {
        let mut v: Vec<Weight> = self.terms.keys().map(|m| m.weight.clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Replaces empty weights by the zero weight of rank `k`.
    pub fn with_weight_rank(&self, k: usize) -> Form {
        let mut out = Form::zero();
        for (m, c) in &self.terms {
            let w = if m.weight.0.is_empty() { Weight::zero(k) } else { m.weight.clone() };
            out.add_term(Monomial::new(w, m.holo, m.anti), c);
        }
        out
    }

    /// `self^k` under the wedge product.
    pub fn wedge_power(&self, k: usize) -> Form {
        let mut out = Form::constant(Scalar::one());
        for _ in 0..k {
            out = out.wedge(self);
        }
        out
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({c})·{m}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Forms serialize as their display string.
impl Serialize for Form {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Form {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse form from {0:?}")]
pub struct ParseFormError(pub String);

fn parse_weight(s: &str) -> Option<Weight> {
    let body = s.strip_prefix('(')?.strip_suffix(')')?;
    if body.is_empty() {
        return Some(Weight::default());
    }
    body.split(',').map(|x| x.trim().parse().ok()).collect::<Option<Vec<i32>>>().map(Weight)
}

/// Parses a product `θa∧θ̄b∧…` (or `1`) into a signed monomial form.
fn parse_generators(s: &str) -> Option<Form> {
    if s == "1" {
        return Some(Form::constant(Scalar::one()));
    }
    let mut out = Form::constant(Scalar::one());
    for g in s.split('∧') {
        let rest = g.strip_prefix('θ')?;
        let (anti, digits) = match rest.strip_prefix('\u{304}') {
            Some(d) => (true, d),
            None => (false, rest),
        };
        let k: usize = digits.parse().ok()?;
        if k == 0 || k > 16 {
            return None;
        }
        out = out.wedge(&Form::generator(k, anti));
    }
    Some(out)
}

/// Inverse of the display format: `(c)·e(w)·θ1∧θ̄2 + …` or `0`. Zero
/// weights are omitted from the display, so they parse as the empty weight.
impl std::str::FromStr for Form {
    type Err = ParseFormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseFormError(s.to_string());
        let s = s.trim();
        if s == "0" {
            return Ok(Form::zero());
        }
        let mut out = Form::zero();
        for term in s.split(" + ") {
            let body = term.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(")·").ok_or_else(bad)?;
            let c: Scalar = body[..close].parse().map_err(|_| bad())?;
            let rest = &body[close + ")·".len()..];
            let (weight, gens) = match rest.strip_prefix('e') {
                Some(r) => {
                    let end = r.find(")·").ok_or_else(bad)?;
                    (parse_weight(&r[..=end]).ok_or_else(bad)?, &r[end + ")·".len()..])
                }
                None => (Weight::default(), rest),
            };
            let g = parse_generators(gens).ok_or_else(bad)?;
            for (m, v) in g.terms() {
                out.add_term(Monomial::new(weight.clone(), m.holo, m.anti), &(v * &c));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn th(k: usize) -> Form {
        Form::generator(k, false)
    }
    fn thb(k: usize) -> Form {
        Form::generator(k, true)
    }

    #[test]
    fn wedge_examples() {
        assert!(th(1).wedge(&th(1)).is_zero());
        assert_eq!(th(1).wedge(&thb(1)), thb(1).wedge(&th(1)).scale(&Scalar::from_i64(-1)));
        assert_eq!(th(1).wedge(&thb(1)).bidegree(), Some(Bidegree::new(1, 1)));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(th(1).conjugate(), thb(1));
        let f = th(1).wedge(&th(2)).scale(&Scalar::i());
        let g = thb(1).wedge(&thb(2)).scale(&-Scalar::i());
        assert_eq!(f.conjugate(), g);
        let w = Form::term(Monomial::new(Weight(vec![1, 0]), 0, 1), Scalar::one());
        let cw = Form::term(Monomial::new(Weight(vec![-1, 0]), 1, 0), Scalar::one());
        assert_eq!(w.conjugate(), cw);
    }

    #[test]
    fn basis_order_is_lexicographic_within_a_bidegree() {
        let mut ms: Vec<Monomial> = [0b011u16, 0b101, 0b110]
            .iter()
            .map(|&h| Monomial::new(Weight::default(), h, 0))
            .collect();
        ms.reverse();
        ms.sort();
        let sets: Vec<Vec<usize>> = ms.iter().map(|m| mask_indices(m.holo)).collect();
        assert_eq!(sets, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    /// Sign of the permutation sorting `seq` (distinct entries), by counting
    /// adjacent swaps in a bubble sort.
    fn bubble_sign(seq: &[usize]) -> i32 {
        let mut v = seq.to_vec();
        let mut swaps = 0;
        for i in 0..v.len() {
            for j in 0..v.len() - 1 - i {
                if v[j] > v[j + 1] {
                    v.swap(j, j + 1);
                    swaps += 1;
                }
            }
        }
        if swaps % 2 == 0 { 1 } else { -1 }
    }

    fn gen_list(m: &Monomial, n: usize) -> Vec<usize> {
        let mut g = mask_indices(m.holo);
        g.extend(mask_indices(m.anti).iter().map(|k| k + n));
        g
    }

    proptest! {
        #[test]
        fn wedge_sign_matches_permutation_oracle(h1 in 0u16..4, a1 in 0u16..4, h2 in 0u16..4, a2 in 0u16..4) {
            let n = 2;
            let x = Monomial::new(Weight::default(), h1, a1);
            let y = Monomial::new(Weight::default(), h2, a2);
            let mut concat = gen_list(&x, n);
            concat.extend(gen_list(&y, n));
            let distinct = {
                let mut s = concat.clone();
                s.sort();
                s.dedup();
                s.len() == concat.len()
            };
            match x.wedge(&y) {
                None => prop_assert!(!distinct),
                Some((sign, m)) => {
                    prop_assert!(distinct);
                    prop_assert_eq!(sign, bubble_sign(&concat));
                    prop_assert_eq!(m.bidegree(), Bidegree::new(x.bidegree().p + y.bidegree().p, x.bidegree().q + y.bidegree().q));
                }
            }
        }

        #[test]
        fn wedge_is_graded_commutative(h1 in 0u16..4, a1 in 0u16..4, h2 in 0u16..4, a2 in 0u16..4, c in -3i64..4) {
            let x = Form::term(Monomial::new(Weight(vec![1, -1]), h1, a1), Scalar::gaussian(c, 1));
            let y = Form::term(Monomial::new(Weight(vec![0, 2]), h2, a2), Scalar::from_i64(2));
            let s = (x.terms().next().unwrap().0.degree() * y.terms().next().unwrap().0.degree()) % 2;
            let sign = if s == 0 { Scalar::one() } else { Scalar::from_i64(-1) };
            prop_assert_eq!(x.wedge(&y), y.wedge(&x).scale(&sign));
        }

        #[test]
        fn wedge_is_associative(h in prop::collection::vec(0u16..4, 6)) {
            let f = |k: usize| Form::term(Monomial::new(Weight::default(), h[2 * k], h[2 * k + 1]), Scalar::one());
            let (a, b, c) = (f(0), f(1), f(2));
            prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
        }

        #[test]
        fn conjugation_is_an_involution(h in 0u16..8, a in 0u16..8, re in -3i64..3, im in -3i64..3, w in -2i32..3) {
            let f = Form::term(Monomial::new(Weight(vec![w]), h, a), Scalar::gaussian(re, im));
            prop_assert_eq!(f.conjugate().conjugate(), f.clone());
            prop_assert_eq!(f.conjugate().wedge(&f.conjugate()), f.wedge(&f).conjugate());
        }

        #[test]
        fn display_parses_back(terms in prop::collection::vec((0u16..8, 0u16..8, -3i64..3, -3i64..3, -2i32..3, -2i32..3), 0..5)) {
            let mut f = Form::zero();
            for (h, a, re, im, w1, w2) in terms {
                f.add_term(Monomial::new(Weight(vec![w1, w2]), h, a), &Scalar::gaussian(re, im));
            }
            let g: Form = f.to_string().parse().unwrap();
            prop_assert_eq!(g.with_weight_rank(2), f);
        }
    }

    #[test]
    fn parse_examples() {
        let f: Form = "(1/2*i)·θ1∧θ̄1 + (-1)·e(1,0)·θ̄2".parse().unwrap();
        let g = th(1)
            .wedge(&thb(1))
            .scale(&Scalar::ratio(1, 2).mul_i())
            .add(&Form::term(Monomial::new(Weight(vec![1, 0]), 0, 0b10), Scalar::from_i64(-1)));
        assert_eq!(f, g);
        let swapped: Form = "(1)·θ̄1∧θ1".parse().unwrap();
        assert_eq!(swapped, thb(1).wedge(&th(1)));
        assert!("θ1".parse::<Form>().is_err());
        assert!("(1)·θ0".parse::<Form>().is_err());
        assert_eq!("0".parse::<Form>().unwrap(), Form::zero());
    }
}
