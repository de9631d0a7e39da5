//! Pure-difference binomial algebra: monomial orders, Buchberger's algorithm
//! restricted to binomials, normal forms, ideal membership and equality,
//! elimination, saturation, and colon ideals.
//!
//! The engine never stores coefficients: every element is `x^plus - x^minus`
//! and every reduction step is a monomial rewrite `m -> m - plus + minus`,
//! so closure under pure differences holds structurally. If a rewrite would
//! drive an exponent negative that is an engine bug and is reported as
//! [`BinomialError::CoefficientCollapse`].

use crate::exactlin::{smith_normal_form, IntMatrix};
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Signed integer exponent vector, the carrier for lattice elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExpVec(pub Vec<i64>);

impl ExpVec {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Positive part of the decomposition `alpha = alpha_+ - alpha_-`.
    pub fn plus_part(&self) -> Vec<i64> {
        self.0.iter().map(|&x| x.max(0)).collect()
    }

    pub fn minus_part(&self) -> Vec<i64> {
        self.0.iter().map(|&x| (-x).max(0)).collect()
    }

    pub fn supp_plus(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, _)| i).collect()
    }

    pub fn supp_minus(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &x)| x < 0).map(|(i, _)| i).collect()
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        assert_eq!(self.len(), other.len());
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// The pure-difference binomial `x^{alpha_+} - x^{alpha_-}`, or `None`
    /// for the zero vector.
    pub fn binomial(&self, order: &MonomialOrder) -> Option<Binomial> {
        Binomial::oriented(self.plus_part(), self.minus_part(), order)
    }
}

pub fn total_degree(m: &[i64]) -> i64 {
    m.iter().sum()
}

pub fn monomial_divides(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn monomial_lcm(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    DegRevLex,
    /// Block order eliminating the first `k` variables.
    Elim(usize),
}

/// Total order on monomials, compatible with multiplication, 1 minimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub nvars: usize,
    pub kind: OrderKind,
}

impl MonomialOrder {
    pub fn degrevlex(nvars: usize) -> Self {
        MonomialOrder { nvars, kind: OrderKind::DegRevLex }
    }

    pub fn lex(nvars: usize) -> Self {
        MonomialOrder { nvars, kind: OrderKind::Lex }
    }

    pub fn elim(nvars: usize, first_block: usize) -> Self {
        assert!(first_block <= nvars);
        MonomialOrder { nvars, kind: OrderKind::Elim(first_block) }
    }

    pub fn cmp(&self, a: &[i64], b: &[i64]) -> Ordering {
        debug_assert_eq!(a.len(), self.nvars);
        debug_assert_eq!(b.len(), self.nvars);
        match self.kind {
            OrderKind::Lex => lex_cmp(a, b),
            OrderKind::DegRevLex => degrevlex_cmp(a, b),
            OrderKind::Elim(k) => degrevlex_cmp(&a[..k], &b[..k])
                .then_with(|| degrevlex_cmp(&a[k..], &b[k..])),
        }
    }
}

fn lex_cmp(a: &[i64], b: &[i64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn degrevlex_cmp(a: &[i64], b: &[i64]) -> Ordering {
    match total_degree(a).cmp(&total_degree(b)) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // smaller exponent in the *last* differing variable wins
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

/// Pure-difference binomial `x^plus - x^minus`, oriented so that `plus` is
/// the leading monomial. The zero binomial is never stored; constructors
/// return `None` for it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Binomial {
    pub plus: Vec<i64>,
    pub minus: Vec<i64>,
}

impl Binomial {
    pub fn oriented(a: Vec<i64>, b: Vec<i64>, order: &MonomialOrder) -> Option<Binomial> {
        assert_eq!(a.len(), b.len());
        assert!(
            a.iter().chain(&b).all(|&x| x >= 0),
            "monomial exponents must be nonnegative"
        );
        match order.cmp(&a, &b) {
            Ordering::Greater => Some(Binomial { plus: a, minus: b }),
            Ordering::Less => Some(Binomial { plus: b, minus: a }),
            Ordering::Equal => None,
        }
    }

    /// Exponent difference `plus - minus` as a lattice element.
    pub fn exponent(&self) -> ExpVec {
        ExpVec(self.plus.iter().zip(&self.minus).map(|(a, b)| a - b).collect())
    }

    /// Cancel the common monomial factor gcd(plus, minus).
    pub fn cancelled(&self, order: &MonomialOrder) -> Option<Binomial> {
        let e = self.exponent();
        e.binomial(order)
    }

    pub fn nvars(&self) -> usize {
        self.plus.len()
    }

    /// Human-readable form in variables `e1, ..., en`.
    pub fn display(&self, var: &str) -> String {
        fn mono(m: &[i64], var: &str) -> String {
            let parts: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        format!("{var}{}", i + 1)
                    } else {
                        format!("{var}{}^{}", i + 1, x)
                    }
                })
                .collect();
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            }
        }
        format!("{} - {}", mono(&self.plus, var), mono(&self.minus, var))
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BinomialError {
    #[error("reduction left the pure-difference form (engine bug)")]
    CoefficientCollapse,
    #[error("order does not eliminate the first {0} variables")]
    OrderMismatch(usize),
    #[error("colon by a binomial needs a verified prime ideal; this ideal is not")]
    UnsupportedColon,
}

/// Reduced Gröbner basis of a pure-difference binomial ideal.
///
/// Invariants: elements are oriented, self-reduced (no leading term divides
/// any monomial of another element), sorted canonically; all S-pair normal
/// forms are zero. The unit ideal is representable via `is_unit` and has no
/// elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedGB {
    pub order: MonomialOrder,
    pub elements: Vec<Binomial>,
    pub is_unit: bool,
}

impl ReducedGB {
    pub fn empty(order: MonomialOrder) -> Self {
        ReducedGB { order, elements: Vec::new(), is_unit: false }
    }

    pub fn unit(order: MonomialOrder) -> Self {
        ReducedGB { order, elements: Vec::new(), is_unit: true }
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty() && !self.is_unit
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars
    }

    /// Leading monomials of the basis.
    pub fn leading_terms(&self) -> Vec<Vec<i64>> {
        self.elements.iter().map(|b| b.plus.clone()).collect()
    }
}

/// Rewrite `m` to its normal form under the (leading-term) rewriting system.
fn nf_monomial(mut m: Vec<i64>, elems: &[Binomial]) -> Vec<i64> {
    'outer: loop {
        for g in elems {
            if monomial_divides(&g.plus, &m) {
                for i in 0..m.len() {
                    m[i] = m[i] - g.plus[i] + g.minus[i];
                }
                debug_assert!(m.iter().all(|&x| x >= 0), "coefficient collapse");
                continue 'outer;
            }
        }
        return m;
    }
}

/// Remainder of `b` under multivariate division by `g`; `None` means zero,
/// i.e. `b` lies in the ideal when `g` is a Gröbner basis.
pub fn normal_form(b: &Binomial, g: &ReducedGB) -> Option<Binomial> {
    assert_eq!(b.nvars(), g.nvars(), "variable count mismatch");
    if g.is_unit {
        return None;
    }
    let p = nf_monomial(b.plus.clone(), &g.elements);
    let m = nf_monomial(b.minus.clone(), &g.elements);
    Binomial::oriented(p, m, &g.order)
}

pub fn ideal_membership(b: &Binomial, g: &ReducedGB) -> bool {
    normal_form(b, g).is_none()
}

/// Buchberger's algorithm for pure-difference binomials with the normal
/// selection strategy (smallest lcm first, ties by generator index).
pub fn buchberger(gens: &[Binomial], order: MonomialOrder) -> ReducedGB {
    let mut basis: Vec<Binomial> = Vec::new();
    for g in gens {
        assert_eq!(g.nvars(), order.nvars);
        if let Some(b) = Binomial::oriented(g.plus.clone(), g.minus.clone(), &order) {
            basis.push(b);
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while !pairs.is_empty() {
        // normal strategy: minimal lcm in the order, ties by index pair
        let (best_idx, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = monomial_lcm(&basis[a.0].plus, &basis[a.1].plus);
                let lb = monomial_lcm(&basis[b.0].plus, &basis[b.1].plus);
                order.cmp(&la, &lb).then(a.cmp(b))
            })
            .map(|(i, p)| (i, *p))
            .unwrap();
        let (i, j) = pairs.swap_remove(best_idx);
        let (fi, fj) = (&basis[i], &basis[j]);
        let l = monomial_lcm(&fi.plus, &fj.plus);
        // product criterion: coprime leading terms reduce to zero
        if fi.plus.iter().zip(&fj.plus).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let m1: Vec<i64> = (0..l.len()).map(|k| l[k] - fi.plus[k] + fi.minus[k]).collect();
        let m2: Vec<i64> = (0..l.len()).map(|k| l[k] - fj.plus[k] + fj.minus[k]).collect();
        let p = nf_monomial(m1, &basis);
        let q = nf_monomial(m2, &basis);
        if let Some(new) = Binomial::oriented(p, q, &order) {
            let idx = basis.len();
            for k in 0..idx {
                pairs.push((k, idx));
            }
            basis.push(new);
        }
    }
    interreduce(basis, order)
}

fn interreduce(mut basis: Vec<Binomial>, order: MonomialOrder) -> ReducedGB {
    loop {
        // drop elements whose lead is divisible by another element's lead
        let mut keep: Vec<Binomial> = Vec::new();
        for (i, b) in basis.iter().enumerate() {
            let redundant = basis.iter().enumerate().any(|(j, c)| {
                j != i
                    && monomial_divides(&c.plus, &b.plus)
                    && (c.plus != b.plus || j < i)
            });
            if !redundant {
                keep.push(b.clone());
            }
        }
        // tail-reduce every element against the others
        let mut changed = false;
        let mut out: Vec<Binomial> = Vec::new();
        for i in 0..keep.len() {
            let others: Vec<Binomial> =
                keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, b)| b.clone()).collect();
            let p = nf_monomial(keep[i].plus.clone(), &others);
            let m = nf_monomial(keep[i].minus.clone(), &others);
            if p != keep[i].plus || m != keep[i].minus {
                changed = true;
            }
            if let Some(b) = Binomial::oriented(p, m, &order) {
                out.push(b);
            } else {
                changed = true;
            }
        }
        basis = out;
        if !changed {
            break;
        }
    }
    basis.sort_by(|a, b| order.cmp(&a.plus, &b.plus).then(order.cmp(&a.minus, &b.minus)));
    basis.dedup();
    ReducedGB { order, elements: basis, is_unit: false }
}

/// Check the reduced-GB invariants: self-reducedness and vanishing S-pair
/// normal forms. Used by tests as a correctness gate.
pub fn verify_reduced_gb(g: &ReducedGB) -> bool {
    for (i, b) in g.elements.iter().enumerate() {
        for (j, c) in g.elements.iter().enumerate() {
            if i == j {
                continue;
            }
            if monomial_divides(&c.plus, &b.plus) || monomial_divides(&c.plus, &b.minus) {
                return false;
            }
        }
    }
    for i in 0..g.elements.len() {
        for j in 0..i {
            let (fi, fj) = (&g.elements[i], &g.elements[j]);
            let l = monomial_lcm(&fi.plus, &fj.plus);
            let m1: Vec<i64> = (0..l.len()).map(|k| l[k] - fi.plus[k] + fi.minus[k]).collect();
            let m2: Vec<i64> = (0..l.len()).map(|k| l[k] - fj.plus[k] + fj.minus[k]).collect();
            if nf_monomial(m1, &g.elements) != nf_monomial(m2, &g.elements) {
                return false;
            }
        }
    }
    true
}

/// Gröbner basis of the ideal sum `I + J` under `I`'s order.
pub fn ideal_sum(i: &ReducedGB, j: &ReducedGB) -> ReducedGB {
    assert_eq!(i.nvars(), j.nvars());
    if i.is_unit || j.is_unit {
        return ReducedGB::unit(i.order);
    }
    let gens: Vec<Binomial> = i.elements.iter().chain(&j.elements).cloned().collect();
    buchberger(&gens, i.order)
}

/// Equality of ideals via canonical reduced Gröbner bases.
pub fn ideal_equal(i: &ReducedGB, j: &ReducedGB) -> bool {
    assert_eq!(i.nvars(), j.nvars());
    if i.is_unit || j.is_unit {
        return i.is_unit == j.is_unit;
    }
    if i.order == j.order {
        return i.elements == j.elements;
    }
    let j_re = buchberger(&j.elements, i.order);
    i.elements == j_re.elements
}

/// Intersection `I ∩ K[x_{k+1}, ..., x_n]`.
///
/// `I` must have been computed under an order eliminating its first `k`
/// variables (a block order with first block `k`, or lex).
pub fn eliminate(i: &ReducedGB, drop_first_k: usize) -> Result<ReducedGB, BinomialError> {
    if drop_first_k == 0 {
        return Ok(i.clone());
    }
    match i.order.kind {
        OrderKind::Lex => {}
        OrderKind::Elim(k) if k == drop_first_k => {}
        _ => return Err(BinomialError::OrderMismatch(drop_first_k)),
    }
    let rest = i.nvars() - drop_first_k;
    let order = MonomialOrder::degrevlex(rest);
    let elements: Vec<Binomial> = i
        .elements
        .iter()
        .filter(|b| {
            b.plus[..drop_first_k].iter().all(|&x| x == 0)
                && b.minus[..drop_first_k].iter().all(|&x| x == 0)
        })
        .filter_map(|b| {
            Binomial::oriented(b.plus[drop_first_k..].to_vec(), b.minus[drop_first_k..].to_vec(), &order)
        })
        .collect();
    Ok(buchberger(&elements, order))
}

fn shift_vars(m: &[i64], by: usize) -> Vec<i64> {
    let mut v = vec![0i64; m.len() + by];
    v[by..].copy_from_slice(m);
    v
}

/// Saturation `I : m^∞` for a monomial `m`, by adjoining one auxiliary
/// variable `t` with generator `t*x^m - 1` and eliminating `t`.
pub fn saturate(i: &ReducedGB, m: &[i64]) -> ReducedGB {
    assert_eq!(m.len(), i.nvars());
    assert!(m.iter().all(|&x| x >= 0), "saturating monomial must be a monomial");
    if i.is_unit {
        return i.clone();
    }
    let n = i.nvars();
    let order = MonomialOrder::elim(n + 1, 1);
    let mut gens: Vec<Binomial> = i
        .elements
        .iter()
        .filter_map(|b| {
            Binomial::oriented(shift_vars(&b.plus, 1), shift_vars(&b.minus, 1), &order)
        })
        .collect();
    let mut tm = shift_vars(m, 1);
    tm[0] = 1;
    if let Some(b) = Binomial::oriented(tm, vec![0; n + 1], &order) {
        gens.push(b);
    }
    let gb = buchberger(&gens, order);
    let projected = eliminate(&gb, 1).expect("elimination order by construction");
    if i.order == projected.order {
        projected
    } else {
        buchberger(&projected.elements, i.order)
    }
}

/// Intersection with a principal monomial ideal, `I ∩ <x^m>`, divided out by
/// `x^m`; i.e. the colon ideal `I : x^m`.
fn colon_by_monomial(i: &ReducedGB, m: &[i64]) -> ReducedGB {
    let n = i.nvars();
    let order = MonomialOrder::elim(n + 1, 1);
    let mut gens: Vec<Binomial> = i
        .elements
        .iter()
        .filter_map(|b| {
            let mut tp = shift_vars(&b.plus, 1);
            tp[0] = 1;
            let mut tm = shift_vars(&b.minus, 1);
            tm[0] = 1;
            Binomial::oriented(tp, tm, &order)
        })
        .collect();
    // (1 - t) * x^m  =  x^m - t*x^m
    let xm = shift_vars(m, 1);
    let mut txm = shift_vars(m, 1);
    txm[0] = 1;
    if let Some(b) = Binomial::oriented(xm, txm, &order) {
        gens.push(b);
    }
    let gb = buchberger(&gens, order);
    let inter = eliminate(&gb, 1).expect("elimination order by construction");
    // every generator of I ∩ <x^m> is divisible by x^m in both monomials
    let divided: Vec<Binomial> = inter
        .elements
        .iter()
        .map(|b| {
            assert!(
                monomial_divides(m, &b.plus) && monomial_divides(m, &b.minus),
                "intersection generator not in <x^m>"
            );
            let p: Vec<i64> = b.plus.iter().zip(m).map(|(a, q)| a - q).collect();
            let q: Vec<i64> = b.minus.iter().zip(m).map(|(a, q)| a - q).collect();
            Binomial::oriented(p, q, &i.order).expect("division preserves inequality")
        })
        .collect();
    buchberger(&divided, i.order)
}

/// `I` is a saturated lattice ideal, hence prime over char-0 fields: all
/// variables are nonzerodivisors and the lattice of exponent differences is
/// saturated.
pub fn is_prime_consistent(i: &ReducedGB) -> bool {
    if i.is_unit {
        return false;
    }
    if i.elements.is_empty() {
        return true;
    }
    let all_vars = vec![1i64; i.nvars()];
    if !ideal_equal(&saturate(i, &all_vars), i) {
        return false;
    }
    // saturated lattice of exponent differences: all invariant factors 1
    let diffs: Vec<Vec<i64>> = i.elements.iter().map(|b| b.exponent().0).collect();
    let m = IntMatrix::from_rows_i64(&diffs, i.nvars());
    let (_, factors) = smith_normal_form(&m);
    factors.iter().all(|f| f.is_one())
}

/// What to colon by: a monomial `x^m` or a pure-difference binomial.
#[derive(Clone, Debug)]
pub enum ColonArg {
    Monomial(Vec<i64>),
    Binomial(Binomial),
}

/// Colon ideal `I : <f^k>`.
///
/// Monomials are handled exactly via the intersection `I ∩ <x^{mk}>`.
/// For a binomial `f`, `f ∈ I` gives the unit ideal; otherwise `I` must be
/// a verified prime (saturated lattice) ideal, in which case `I : f^k = I`.
pub fn colon_power(i: &ReducedGB, f: &ColonArg, k: usize) -> Result<ReducedGB, BinomialError> {
    assert!(k >= 1);
    if i.is_unit {
        return Ok(i.clone());
    }
    match f {
        ColonArg::Monomial(m) => {
            let mk: Vec<i64> = m.iter().map(|&x| x * k as i64).collect();
            Ok(colon_by_monomial(i, &mk))
        }
        ColonArg::Binomial(b) => {
            if ideal_membership(b, i) {
                return Ok(ReducedGB::unit(i.order));
            }
            if is_prime_consistent(i) {
                Ok(i.clone())
            } else {
                Err(BinomialError::UnsupportedColon)
            }
        }
    }
}
