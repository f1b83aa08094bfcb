//! Exact integer-coefficient Laurent polynomials in the cluster variables
//! `x1..xn`, the coefficient variables `y1..yn` and boundary variables `b1..`.
//!
//! Values are kept in canonical form at all times: no zero exponents inside a
//! monomial, no zero coefficients inside a polynomial. Equality is structural.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Which family a variable belongs to. Boundary variables evaluate to 1 at
/// the end of a cluster-algebra computation but are tracked symbolically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKind {
    X,
    Y,
    Boundary,
}

/// A single variable such as `x3`, `y1` or `b2`. Indices start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub kind: VarKind,
    pub index: u32,
}

impl VarId {
    pub fn x(index: u32) -> Self {
        assert!(index >= 1, "variable index must be >= 1");
        VarId { kind: VarKind::X, index }
    }
    pub fn y(index: u32) -> Self {
        assert!(index >= 1, "variable index must be >= 1");
        VarId { kind: VarKind::Y, index }
    }
    pub fn boundary(index: u32) -> Self {
        assert!(index >= 1, "variable index must be >= 1");
        VarId { kind: VarKind::Boundary, index }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            VarKind::X => 'x',
            VarKind::Y => 'y',
            VarKind::Boundary => 'b',
        };
        write!(f, "{}{}", c, self.index)
    }
}

/// A Laurent monomial: finitely many variables with nonzero integer exponents.
/// The empty map is the monomial 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exponents: BTreeMap<VarId, i64>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        Monomial::from_powers([(v, 1)])
    }

    pub fn from_powers<I: IntoIterator<Item = (VarId, i64)>>(iter: I) -> Self {
        let mut m = Monomial::default();
        for (v, e) in iter {
            m.mul_var(v, e);
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponent(&self, v: VarId) -> i64 {
        self.exponents.get(&v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VarId, &i64)> {
        self.exponents.iter()
    }

    /// Multiply by `v^e` in place, dropping the entry if it cancels.
    pub fn mul_var(&mut self, v: VarId, e: i64) {
        if e == 0 {
            return;
        }
        let entry = self.exponents.entry(v).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.exponents.remove(&v);
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (v, e) in &other.exponents {
            out.mul_var(*v, *e);
        }
        out
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().map(|(v, e)| (*v, -e)).collect(),
        }
    }

    /// `self / other`, always defined in the Laurent ring.
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    /// True when every exponent is nonnegative.
    pub fn is_effective(&self) -> bool {
        self.exponents.values().all(|e| *e >= 0)
    }

    /// Tropical addition: coordinatewise minimum of exponents, restricted to
    /// the semifield on Y-variables. `a ⊕ b = ∏ y^min(a_j, b_j)`.
    pub fn tropical_add(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::default();
        for (v, e) in &self.exponents {
            let o = other.exponent(*v);
            out.mul_var(*v, (*e).min(o));
        }
        for (v, e) in &other.exponents {
            if self.exponent(*v) == 0 {
                out.mul_var(*v, (*e).min(0));
            }
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.exponents {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        Ok(())
    }
}

/// Exact multivariate Laurent polynomial with `BigInt` coefficients.
/// Two values are equal iff their term maps are identical.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

/// Exact division failed: the quotient does not exist in the Laurent ring.
/// In cluster computations this signals an upstream bug (broken Laurent
/// phenomenon), so the error carries the operands for diagnosis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotDivisible {
    pub numerator: String,
    pub denominator: String,
}

impl fmt::Display for NotDivisible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) is not divisible by ({})", self.numerator, self.denominator)
    }
}

impl std::error::Error for NotDivisible {}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::from_monomial(Monomial::one())
    }

    pub fn var(v: VarId) -> Self {
        LaurentPoly::from_monomial(Monomial::var(v))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, BigInt::one());
        LaurentPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn constant(n: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(Monomial::one(), BigInt::from(n));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// If the polynomial is a single term with coefficient 1, return it.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if c.is_one() {
                return Some(m);
            }
        }
        None
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    /// Coordinatewise minimum of the support, with variables absent from a
    /// term counted as exponent 0. Dividing by `x^minvec` turns the value
    /// into an ordinary polynomial whose support touches zero in every
    /// occurring variable.
    fn support_min(&self) -> Monomial {
        let mut mins: BTreeMap<VarId, i64> = BTreeMap::new();
        for (m, _) in &self.terms {
            for (v, e) in m.iter() {
                mins.entry(*v).and_modify(|x| *x = (*x).min(*e)).or_insert(*e);
            }
        }
        // A variable missing from some term has implicit exponent 0 there.
        for (v, entry) in mins.iter_mut() {
            if self.terms.keys().any(|m| m.exponent(*v) == 0) {
                *entry = (*entry).min(0);
            }
        }
        Monomial::from_powers(mins)
    }

    /// Exact division: returns `q` with `q * den == self`, or `NotDivisible`.
    ///
    /// Both operands are first shifted into the ordinary polynomial ring
    /// (support minima at zero); over an integral domain the minima of a
    /// product add coordinatewise, so the shifted quotient is again a
    /// polynomial when it exists. Long division then eliminates the
    /// lexicographically leading term, which is well-founded on nonnegative
    /// exponents.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly, NotDivisible> {
        assert!(!den.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let fail = || NotDivisible {
            numerator: self.to_string(),
            denominator: den.to_string(),
        };
        let num_shift = self.support_min();
        let den_shift = den.support_min();
        let num = self.mul_monomial(&num_shift.inv());
        let den_p = den.mul_monomial(&den_shift.inv());

        let lead = |p: &LaurentPoly| -> (Monomial, BigInt) {
            let (m, c) = p
                .terms
                .iter()
                .max_by(|(a, _), (b, _)| cmp_lex(a, b))
                .expect("nonzero polynomial");
            (m.clone(), c.clone())
        };
        let (dm, dc) = lead(&den_p);
        let mut rem = num;
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let (rm, rc) = lead(&rem);
            if (&rc % &dc) != BigInt::zero() {
                return Err(fail());
            }
            let qm = rm.div(&dm);
            if !qm.is_effective() {
                return Err(fail());
            }
            let qc = &rc / &dc;
            quot.add_term(qm.clone(), qc.clone());
            let mut piece = LaurentPoly::zero();
            piece.add_term(qm, qc);
            rem = rem.sub(&piece.mul(&den_p));
        }
        Ok(quot.mul_monomial(&num_shift.div(&den_shift)))
    }

    /// Replace every variable of the given kinds by 1.
    pub fn substitute_ones(&self, kinds: &[VarKind]) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let reduced = Monomial::from_powers(
                m.iter()
                    .filter(|(v, _)| !kinds.contains(&v.kind))
                    .map(|(v, e)| (*v, *e)),
            );
            out.add_term(reduced, c.clone());
        }
        out
    }

    /// True when every coefficient is strictly positive.
    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Canonical text form; see the module parser for the accepted grammar.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Display in descending canonical order so x-heavy terms lead.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", abs, m)?;
            }
        }
        Ok(())
    }
}

/// Lexicographic order on full exponent vectors (absent variable = 0),
/// compatible with monomial multiplication.
fn cmp_lex(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let mut vars: Vec<VarId> = a.iter().map(|(v, _)| *v).collect();
    vars.extend(b.iter().map(|(v, _)| *v));
    vars.sort();
    vars.dedup();
    for v in vars {
        match a.exponent(v).cmp(&b.exponent(v)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Parse the canonical text rendering back into a polynomial.
///
/// Grammar: terms joined by `+` / `-`; a term is an optional integer
/// coefficient and `*`-separated factors `x3`, `y1^-2`, `b4`; `1` alone is
/// the unit monomial.
pub fn parse_poly(s: &str) -> Result<LaurentPoly, String> {
    let mut out = LaurentPoly::zero();
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(out);
    }
    let mut rest = s;
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        let end = find_term_end(rest);
        let (term, tail) = rest.split_at(end);
        let (m, c) = parse_term(term.trim())?;
        out.add_term(m, c * BigInt::from(sign));
        let tail = tail.trim_start();
        if tail.is_empty() {
            break;
        }
        if let Some(r) = tail.strip_prefix('+') {
            sign = 1;
            rest = r.trim_start();
        } else if let Some(r) = tail.strip_prefix('-') {
            sign = -1;
            rest = r.trim_start();
        } else {
            return Err(format!("expected '+' or '-' at: {tail:?}"));
        }
    }
    Ok(out)
}

fn find_term_end(s: &str) -> usize {
    let bytes = s.as_bytes();
    for (i, b) in bytes.iter().enumerate() {
        if *b == b'+' {
            return i;
        }
        // '-' terminates a term unless it follows '^' (a negative exponent).
        if *b == b'-' {
            let prev = s[..i].trim_end().as_bytes().last().copied();
            if prev != Some(b'^') {
                return i;
            }
        }
    }
    s.len()
}

fn parse_term(term: &str) -> Result<(Monomial, BigInt), String> {
    if term.is_empty() {
        return Err("empty term".into());
    }
    let mut coeff = BigInt::one();
    let mut mono = Monomial::one();
    for factor in term.split('*') {
        let f = factor.trim();
        if f.is_empty() {
            return Err(format!("empty factor in term {term:?}"));
        }
        if f.chars().next().unwrap().is_ascii_digit() {
            coeff *= f
                .parse::<BigInt>()
                .map_err(|e| format!("bad coefficient {f:?}: {e}"))?;
            continue;
        }
        let kind = match f.chars().next().unwrap() {
            'x' => VarKind::X,
            'y' => VarKind::Y,
            'b' => VarKind::Boundary,
            c => return Err(format!("unknown variable kind {c:?} in {f:?}")),
        };
        let rest = &f[1..];
        let (idx, exp) = match rest.split_once('^') {
            Some((i, e)) => (
                i.parse::<u32>().map_err(|e| format!("bad index in {f:?}: {e}"))?,
                e.parse::<i64>().map_err(|e| format!("bad exponent in {f:?}: {e}"))?,
            ),
            None => (
                rest.parse::<u32>().map_err(|e| format!("bad index in {f:?}: {e}"))?,
                1,
            ),
        };
        mono.mul_var(VarId { kind, index: idx }, exp);
    }
    Ok((mono, coeff))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> LaurentPoly {
        LaurentPoly::var(VarId::x(i))
    }
    fn y(i: u32) -> LaurentPoly {
        LaurentPoly::var(VarId::y(i))
    }
    fn xm(i: u32, e: i64) -> LaurentPoly {
        LaurentPoly::from_monomial(Monomial::from_powers([(VarId::x(i), e)]))
    }

    #[test]
    fn add_cancels_to_canonical_form() {
        let p = x(1).add(&LaurentPoly::constant(1)).add(&LaurentPoly::constant(-1));
        assert_eq!(p, x(1));
        assert_eq!(LaurentPoly::zero().add(&p), p);
    }

    #[test]
    fn add_merges_term_maps() {
        // (x2+1)/x1 + (x1+1)/x2 = x2/x1 + 1/x1 + x1/x2 + 1/x2
        let a = x(2).add(&LaurentPoly::constant(1)).mul(&xm(1, -1));
        let b = x(1).add(&LaurentPoly::constant(1)).mul(&xm(2, -1));
        let sum = a.add(&b);
        // Oracle: brute-force term-map merge of the four expected monomials.
        let expected = LaurentPoly::from_terms([
            (Monomial::from_powers([(VarId::x(2), 1), (VarId::x(1), -1)]), BigInt::from(1)),
            (Monomial::from_powers([(VarId::x(1), -1)]), BigInt::from(1)),
            (Monomial::from_powers([(VarId::x(1), 1), (VarId::x(2), -1)]), BigInt::from(1)),
            (Monomial::from_powers([(VarId::x(2), -1)]), BigInt::from(1)),
        ]);
        assert_eq!(sum, expected);
        assert_eq!(sum.num_terms(), 4);
    }

    #[test]
    fn mul_inverse_pair_and_binomials() {
        assert!(x(1).mul(&xm(1, -1)).is_one());
        let p = x(1).add(&LaurentPoly::constant(1));
        let q = x(2).add(&LaurentPoly::constant(1));
        let prod = p.mul(&q);
        assert_eq!(prod.num_terms(), 4);
        assert_eq!(prod.coefficient(&Monomial::from_powers([(VarId::x(1), 1), (VarId::x(2), 1)])), BigInt::one());
    }

    // Naive O(|a||b|) convolution over term lists, kept independent of
    // LaurentPoly::mul's accumulation path.
    fn convolve(a: &LaurentPoly, b: &LaurentPoly) -> Vec<(Monomial, BigInt)> {
        let mut raw: Vec<(Monomial, BigInt)> = Vec::new();
        for (m1, c1) in a.terms() {
            for (m2, c2) in b.terms() {
                raw.push((m1.mul(m2), c1 * c2));
            }
        }
        let mut merged: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in raw {
            *merged.entry(m).or_insert_with(BigInt::zero) += c;
        }
        merged.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    #[test]
    fn mul_matches_convolution_oracle() {
        let a = xm(2, -1).mul(&x(1).add(&LaurentPoly::constant(1)));
        let b = xm(1, -1)
            .mul(&xm(2, -1))
            .mul(&x(1).add(&x(2)).add(&LaurentPoly::constant(1)));
        let prod = a.mul(&b);
        let oracle = LaurentPoly::from_terms(convolve(&a, &b));
        assert_eq!(prod, oracle);
    }

    #[test]
    fn exact_div_factored_input() {
        let num = parse_poly("x1*x2 + x1 + x2 + 1").unwrap();
        let den = parse_poly("x1 + 1").unwrap();
        let q = num.exact_div(&den).unwrap();
        assert_eq!(q, parse_poly("x2 + 1").unwrap());
    }

    #[test]
    fn exact_div_monomial_shifts_exponents() {
        let p = parse_poly("x1*x2 + y1").unwrap();
        let q = p.exact_div(&x(1)).unwrap();
        assert_eq!(q, parse_poly("x2 + y1*x1^-1").unwrap());
        assert_eq!(q.mul(&x(1)), p);
    }

    #[test]
    fn exact_div_detects_failure() {
        let num = y(1).mul(&x(2)).add(&LaurentPoly::constant(1));
        assert!(num.exact_div(&x(1).add(&LaurentPoly::constant(1))).is_err());
    }

    #[test]
    fn substitute_ones_examples() {
        let p = y(1).mul(&x(1)).add(&y(2));
        assert_eq!(p.substitute_ones(&[VarKind::Y]), x(1).add(&LaurentPoly::constant(1)));
        assert_eq!(p.substitute_ones(&[]), p);
    }

    #[test]
    fn tropical_add_is_coordinatewise_min() {
        let a = Monomial::from_powers([(VarId::y(1), 2), (VarId::y(2), -1)]);
        let b = Monomial::from_powers([(VarId::y(1), 1), (VarId::y(3), 4)]);
        let c = a.tropical_add(&b);
        assert_eq!(c, Monomial::from_powers([(VarId::y(1), 1), (VarId::y(2), -1)]));
        // y ⊕ 1 with nonnegative exponents is 1
        let y1 = Monomial::var(VarId::y(1));
        assert!(y1.tropical_add(&Monomial::one()).is_one());
    }

    #[test]
    fn parse_render_round_trip() {
        for s in ["x1*x2^-1 + y1", "2*x1 - 3", "x1^-2*b2 + 1", "0"] {
            let p = parse_poly(s).unwrap();
            assert_eq!(parse_poly(&p.render()).unwrap(), p);
        }
    }
}
