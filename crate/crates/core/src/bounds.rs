//! Arbitrary-precision upper bounds for the Ramsey-type quantities behind the
//! unavoidability theorems, and the per-theorem threshold sets.
//!
//! Values are exact big integers as long as they fit in [`BIT_CAP`] bits.
//! Anything larger is reported as [`BoundValue::Astronomical`]; a value is
//! astronomical exactly when its true magnitude exceeds the cap, so every
//! evaluation path agrees on the variant.
//!
//! Thresholds that depend on the connected domination constant `γ_c(n)` have
//! no explicit formula and are reported as [`BoundValue::Unavailable`].

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::patterns::TheoremId;

/// Largest bit length kept exactly.
pub const BIT_CAP: u64 = 1 << 18;

/// Exact two-colour Ramsey numbers `R(s, t)` with `s ≤ t`. External constants,
/// not derived by this crate; [`RamseyMode::RecursionOnly`] ignores them.
pub const KNOWN_RAMSEY: [(u64, u64, u64); 4] = [(3, 3, 6), (3, 4, 9), (3, 5, 14), (4, 4, 18)];

const GRID: u64 = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RamseyMode {
    /// Recursion with the known exact values substituted.
    #[default]
    KnownTable,
    /// Pure recursion `R(s,t) ≤ R(s-1,t) + R(s,t-1)`, i.e. the binomial bound.
    RecursionOnly,
}

fn known(s: u64, t: u64) -> Option<u64> {
    let (a, b) = if s <= t { (s, t) } else { (t, s) };
    KNOWN_RAMSEY.iter().find(|&&(x, y, _)| x == a && y == b).map(|&(_, _, r)| r)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BoundValue {
    Exact(BigUint),
    /// More than [`BIT_CAP`] bits.
    Astronomical,
    /// Depends on a constant with no explicit formula.
    Unavailable(&'static str),
}

impl BoundValue {
    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            BoundValue::Exact(v) => Some(v),
            _ => None,
        }
    }

    fn from_capped(v: Capped) -> BoundValue {
        v.map_or(BoundValue::Astronomical, BoundValue::Exact)
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Exact(v) => write!(f, "{v}"),
            BoundValue::Astronomical => write!(f, "> 2^{BIT_CAP}"),
            BoundValue::Unavailable(s) => write!(f, "unavailable ({s})"),
        }
    }
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BoundValue::Exact(v) => ser.serialize_str(&v.to_str_radix(10)),
            BoundValue::Astronomical => {
                let mut m = ser.serialize_map(Some(1))?;
                m.serialize_entry("exceeds_bits", &BIT_CAP)?;
                m.end()
            }
            BoundValue::Unavailable(s) => {
                let mut m = ser.serialize_map(Some(1))?;
                m.serialize_entry("unavailable", s)?;
                m.end()
            }
        }
    }
}

/// `None` means "more than `BIT_CAP` bits".
type Capped = Option<BigUint>;

fn capped(x: BigUint) -> Capped {
    (x.bits() <= BIT_CAP).then_some(x)
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn add(a: &Capped, b: &Capped) -> Capped {
    capped(a.as_ref()? + b.as_ref()?)
}

fn mul(a: &Capped, b: &Capped) -> Capped {
    if a.as_ref().is_some_and(Zero::is_zero) || b.as_ref().is_some_and(Zero::is_zero) {
        return Some(BigUint::zero());
    }
    capped(a.as_ref()? * b.as_ref()?)
}

fn sub(a: &Capped, b: &Capped) -> Capped {
    let (a, b) = (a.as_ref()?, b.as_ref()?);
    Some(if a >= b { a - b } else { BigUint::zero() })
}

fn pow2(e: &Capped) -> Capped {
    let e = e.as_ref()?.to_u64()?;
    if e >= BIT_CAP {
        return None;
    }
    Some(BigUint::one() << e)
}

/// `log2 C(a, b) ≥ b · log2(a / b)`; used to skip hopeless products.
fn binomial_surely_too_big(a: &BigUint, b: u64) -> bool {
    if b == 0 {
        return false;
    }
    let la = match a.to_f64() {
        Some(x) if x.is_finite() => x.log2(),
        _ => a.bits() as f64 - 1.0,
    };
    let lb = (b as f64).log2();
    (la - lb) * b as f64 * 0.999 > BIT_CAP as f64
}

/// `C(a, b)` through the increasing sequence `C(a-b+i, i)`.
fn binomial(a: &BigUint, b: u64) -> Capped {
    if binomial_surely_too_big(a, b) {
        return None;
    }
    let base = a - big(b);
    let mut r = BigUint::one();
    for i in 1..=b {
        r = r * (&base + big(i)) / big(i);
        if r.bits() > BIT_CAP {
            return None;
        }
    }
    Some(r)
}

fn grid(mode: RamseyMode) -> &'static Vec<Vec<BigUint>> {
    static TABLE: OnceLock<Vec<Vec<BigUint>>> = OnceLock::new();
    static PURE: OnceLock<Vec<Vec<BigUint>>> = OnceLock::new();
    let cell = match mode {
        RamseyMode::KnownTable => &TABLE,
        RamseyMode::RecursionOnly => &PURE,
    };
    cell.get_or_init(|| {
        let g = GRID as usize;
        let mut r = vec![vec![BigUint::zero(); g + 1]; g + 1];
        for s in 1..=g {
            for t in 1..=g {
                let (su, tu) = (s as u64, t as u64);
                r[s][t] = if s == 1 || t == 1 {
                    BigUint::one()
                } else if s == 2 {
                    big(tu)
                } else if t == 2 {
                    big(su)
                } else if let Some(k) = known(su, tu).filter(|_| mode == RamseyMode::KnownTable) {
                    big(k)
                } else {
                    &r[s - 1][t] + &r[s][t - 1]
                };
            }
        }
        r
    })
}

fn r2_big(s: &BigUint, t: &BigUint, mode: RamseyMode) -> Capped {
    debug_assert!(!s.is_zero() && !t.is_zero());
    if let (Some(a), Some(b)) = (s.to_u64(), t.to_u64()) {
        if a <= GRID && b <= GRID {
            return Some(grid(mode)[a as usize][b as usize].clone());
        }
    }
    let lo = s.min(t).to_u64()?;
    binomial(&(s + t - big(2)), lo - 1)
}

fn rm_big(m: &BigUint, n: &BigUint, mode: RamseyMode) -> Capped {
    let mut r = n.clone();
    let mut i = BigUint::one();
    while &i < m {
        let next = r2_big(n, &r, mode)?;
        if next == r {
            break;
        }
        r = next;
        i += 1u32;
    }
    Some(r)
}

/// Part size sufficient for the sequential halving in
/// `extract::multipartite_uniformize`: `max_j 2^{t_0+…+t_{j-1}} · t_j` with
/// `t_i = (q-1)·2^{k-1-i} + 1`.
fn mr_big(k: &BigUint, q: &BigUint) -> Capped {
    let k = k.to_u64()?;
    if q.is_one() {
        // Every t_i is 1; the last part dominates.
        return pow2(&Some(big(k - 1)));
    }
    if k > BIT_CAP {
        return None;
    }
    let qm1 = q - BigUint::one();
    let mut s = BigUint::zero();
    let mut best = BigUint::zero();
    for i in 0..k {
        let t = &qm1 * (BigUint::one() << (k - 1 - i)) + BigUint::one();
        let cand = mul(&pow2(&Some(s.clone())), &Some(t.clone()))?;
        best = best.max(cand);
        s += t;
    }
    Some(best)
}

/// `1 + Σ_{i=0}^{n-2} d^i` with `d = R(n,n) - 1`.
fn n0_big(n: &BigUint, mode: RamseyMode) -> Capped {
    if *n <= BigUint::one() {
        return Some(BigUint::one());
    }
    let d = r2_big(n, n, mode)? - BigUint::one();
    if d.is_one() {
        return Some(n.clone());
    }
    let terms = n - BigUint::one();
    let mut acc = BigUint::one();
    let mut pw = BigUint::one();
    let mut i = BigUint::zero();
    while i < terms {
        acc += &pw;
        if acc.bits() > BIT_CAP {
            return None;
        }
        pw *= &d;
        i += 1u32;
    }
    Some(acc)
}

fn positive(name: &str, v: u64) -> Result<()> {
    if v == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be >= 1")));
    }
    Ok(())
}

/// Upper bound on `R(s, t)`; monotone and symmetric.
pub fn r2_upper(s: u64, t: u64, mode: RamseyMode) -> Result<BoundValue> {
    positive("s", s)?;
    positive("t", t)?;
    Ok(BoundValue::from_capped(r2_big(&big(s), &big(t), mode)))
}

/// Upper bound on the `m`-colour Ramsey number `R_m(n)`, via `R_m(n) ≤ R(n, R_{m-1}(n))`.
pub fn rm_upper(m: &BigUint, n: u64, mode: RamseyMode) -> Result<BoundValue> {
    if m.is_zero() {
        return Err(Error::InvalidParameter("m must be >= 1".into()));
    }
    positive("n", n)?;
    Ok(BoundValue::from_capped(rm_big(m, &big(n), mode)))
}

/// Part size guaranteeing `q`-subsets that pairwise induce `K_{q,q}` or `E_{2q}` in a `k`-partite graph.
pub fn mr_upper(k: u64, q: u64) -> Result<BoundValue> {
    if k < 2 {
        return Err(Error::InvalidParameter("k must be >= 2".into()));
    }
    positive("q", q)?;
    Ok(BoundValue::from_capped(mr_big(&big(k), &big(q))))
}

/// Order beyond which every connected graph contains `K_n`, `K_{1,n}` or `P_n`.
/// From a BFS tree: depth below `n-1` and maximum degree below `R(n,n)` bound the order.
pub fn n0_upper(n: u64, mode: RamseyMode) -> Result<BoundValue> {
    positive("n", n)?;
    Ok(BoundValue::from_capped(n0_big(&big(n), mode)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub formula: &'static str,
    pub value: BoundValue,
}

/// Named threshold quantities for one theorem at one `n`.
///
/// `threshold` bounds `count` on every free graph: free graphs in scope
/// satisfy `count < threshold`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundSet {
    pub theorem: TheoremId,
    pub n: u64,
    pub mode: RamseyMode,
    pub entries: Vec<BoundEntry>,
    pub count: &'static str,
    pub threshold: BoundEntry,
}

impl BoundSet {
    pub fn get(&self, name: &str) -> Option<&BoundValue> {
        self.entries.iter().find(|e| e.name == name).map(|e| &e.value)
    }

    pub fn threshold_value(&self) -> Result<&BigUint> {
        match &self.threshold.value {
            BoundValue::Exact(v) => Ok(v),
            BoundValue::Astronomical => Err(Error::InvalidParameter(format!(
                "threshold {} exceeds 2^{BIT_CAP}",
                self.threshold.formula
            ))),
            BoundValue::Unavailable(s) => Err(Error::Unavailable(s)),
        }
    }
}

const GAMMA_C: &str = "gamma_c(n)";

struct Builder {
    vars: HashMap<&'static str, Capped>,
    entries: Vec<BoundEntry>,
}

impl Builder {
    fn new(n: u64) -> Builder {
        let mut vars = HashMap::new();
        vars.insert("n", Some(big(n)));
        Builder { vars, entries: Vec::new() }
    }

    fn var(&self, name: &str) -> Capped {
        self.vars[name].clone()
    }

    fn put(&mut self, name: &'static str, formula: &'static str, v: Capped) {
        self.vars.insert(name, v.clone());
        self.entries.push(BoundEntry { name, formula, value: BoundValue::from_capped(v) });
    }
}

fn small(x: u64) -> Capped {
    Some(big(x))
}

/// Inner `B1`-style entries at parameter `k` (named `k` in formulas).
fn b1_entries(b: &mut Builder, prop: TheoremId, kname: &'static str, mode: RamseyMode) -> Option<Capped> {
    let k = b.var(kname);
    let r2 = |x: &Capped| x.as_ref().and_then(|x| r2_big(x, x, mode));
    match prop {
        TheoremId::B1Deg => {
            let n1 = mul(&sub(&k, &small(1)), &r2(&sub(&mul(&small(2), &k), &small(1))));
            b.put("N1", if kname == "n" { "(n-1)*R2(2n-1)" } else { "(k-1)*R2(2k-1)" }, n1.clone());
            Some(n1)
        }
        TheoremId::B1AlphaL => {
            let n3 = add(&k, &small(2)).and_then(|x| rm_big(&big(256), &x, mode));
            b.put("N3", if kname == "n" { "Rm(2^8, n+2)" } else { "Rm(2^8, k+2)" }, n3.clone());
            let n2 = mul(&mul(&k, &r2(&k)), &n3);
            b.put("N2", if kname == "n" { "n*R2(n)*N3" } else { "k*R2(k)*N3" }, n2.clone());
            let n1 = sub(&mul(&small(2), &n2), &small(1));
            b.put("N1", "2*N2-1", n1.clone());
            Some(n1)
        }
        TheoremId::B1CL => {
            let n2 = r2(&k);
            b.put("N2", if kname == "n" { "R2(n)" } else { "R2(k)" }, n2.clone());
            let n1 = mul(&k, &n2);
            b.put("N1", if kname == "n" { "n*N2" } else { "k*N2" }, n1.clone());
            let r = r2(&n1);
            b.put("R2N1", "R2(N1)", r);
            None
        }
        _ => None,
    }
}

fn n0_of(x: &Capped, mode: RamseyMode) -> Capped {
    x.as_ref().and_then(|x| n0_big(x, mode))
}

/// Threshold set for `theorem` at `n`.
pub fn theorem_thresholds(theorem: TheoremId, n: u64, mode: RamseyMode) -> Result<BoundSet> {
    positive("n", n)?;
    let mut b = Builder::new(n);
    let nn = small(n);
    let r2 = |x: &Capped| x.as_ref().and_then(|x| r2_big(x, x, mode));
    let rm = |m: &Capped, x: &Capped| match (m, x) {
        (Some(m), Some(x)) => rm_big(m, x, mode),
        _ => None,
    };
    let (count, threshold) = match theorem {
        TheoremId::ConnectedRamsey => {
            let v = n0_of(&nn, mode);
            ("order", BoundEntry { name: "threshold", formula: "N0(n)", value: BoundValue::from_capped(v) })
        }
        TheoremId::B1Deg | TheoremId::B1AlphaL => {
            let n1 = b1_entries(&mut b, theorem, "n", mode).expect("explicit entries");
            let v = n0_of(&n1, mode);
            ("p_2", BoundEntry { name: "threshold", formula: "N0(N1)", value: BoundValue::from_capped(v) })
        }
        TheoremId::B1CL => {
            b1_entries(&mut b, theorem, "n", mode);
            ("p_2", BoundEntry {
                name: "threshold",
                formula: "gamma_c(n)*R2(N1)+1",
                value: BoundValue::Unavailable(GAMMA_C),
            })
        }
        TheoremId::B1Sdeg => (
            "p_2",
            BoundEntry { name: "threshold", formula: "gamma_c(n)+1", value: BoundValue::Unavailable(GAMMA_C) },
        ),
        TheoremId::B2Deg | TheoremId::B2AlphaL | TheoremId::B2CL | TheoremId::B2Sdeg => {
            // Components carrying a vertex with p(v) ≥ 2 each hold a P_3 or K_3,
            // and each is free of the connected list at 4n.
            let (m, mf) = if theorem == TheoremId::B2Deg {
                (sub(&mul(&small(2), &nn), &small(2)), "2n-2")
            } else {
                (sub(&nn, &small(1)), "n-1")
            };
            b.put("m", mf, m.clone());
            b.put("k", "4n", mul(&small(4), &nn));
            let inner = match theorem {
                TheoremId::B2Deg => TheoremId::B1Deg,
                TheoremId::B2AlphaL => TheoremId::B1AlphaL,
                TheoremId::B2CL => TheoremId::B1CL,
                _ => TheoremId::B1Sdeg,
            };
            let value = match b1_entries(&mut b, inner, "k", mode) {
                Some(n1) => {
                    let t = n0_of(&n1, mode);
                    b.put("T", "N0(N1)", t.clone());
                    BoundValue::from_capped(mul(&m, &t))
                }
                None => BoundValue::Unavailable(GAMMA_C),
            };
            ("p_2", BoundEntry { name: "threshold", formula: "m*T", value })
        }
        TheoremId::B3Deg => {
            let n3 = r2(&nn);
            b.put("N3", "R2(n)", n3.clone());
            let colors = pow2(&add(&add(&mul(&nn, &nn), &mul(&small(2), &nn)), &small(1)));
            let n2 = rm(&colors, &mul(&small(2), &nn));
            b.put("N2", "Rm(2^(n^2+2n+1), 2n)", n2.clone());
            let n1 = add(&mul(&n2, &n3), &n2);
            b.put("N1", "N2*N3+N2", n1);
            ("p_{N1}", BoundEntry { name: "threshold", formula: "N2", value: BoundValue::from_capped(n2) })
        }
        TheoremId::B3AlphaLCL => {
            let colors = pow2(&add(&mul(&small(6), &nn), &small(1)));
            let n2 = rm(&colors, &mul(&small(2), &nn));
            b.put("N2", "Rm(2^(6n+1), 2n)", n2.clone());
            let n3 = match (&n2, mul(&small(3), &nn)) {
                (Some(k), Some(q)) if *k >= big(2) => mr_big(k, &q),
                _ => None,
            };
            b.put("N3", "MR(N2, 3n)", n3.clone());
            let n1 = add(&mul(&n2, &n3), &n2);
            b.put("N1", "N2*N3+N2", n1);
            ("p_{N1}", BoundEntry { name: "threshold", formula: "N2", value: BoundValue::from_capped(n2) })
        }
        TheoremId::B3Sdeg => {
            let n2 = r2(&nn);
            b.put("N2", "R2(n)", n2.clone());
            let n3 = sub(&add(&n2, &nn), &small(1));
            b.put("N3", "N2+n-1", n3.clone());
            let n1 = add(&mul(&n2, &n3), &n2);
            b.put("N1", "N2*N3+N2", n1);
            ("p_{N1}", BoundEntry { name: "threshold", formula: "N2", value: BoundValue::from_capped(n2) })
        }
    };
    Ok(BoundSet { theorem, n, mode, entries: b.entries, count, threshold })
}

/// Second evaluation path: re-derives every entry by parsing its formula
/// text and evaluating it with separately written Ramsey arithmetic.
pub mod audit {
    use super::*;

    struct Eval<'a> {
        toks: Vec<Tok>,
        pos: usize,
        vars: &'a HashMap<String, Capped>,
        mode: RamseyMode,
        memo: HashMap<(u64, u64), BigUint>,
    }

    #[derive(Clone, Debug, PartialEq)]
    enum Tok {
        Num(u64),
        Ident(String),
        Op(char),
    }

    fn lex(s: &str) -> Result<Vec<Tok>> {
        let mut out = Vec::new();
        let cs: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < cs.len() {
            let c = cs[i];
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let mut v = 0u64;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    v = v * 10 + cs[i].to_digit(10).unwrap() as u64;
                    i += 1;
                }
                out.push(Tok::Num(v));
            } else if c.is_ascii_alphabetic() {
                let st = i;
                while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(cs[st..i].iter().collect()));
            } else if "+-*^(),".contains(c) {
                out.push(Tok::Op(c));
                i += 1;
            } else {
                return Err(Error::InvalidParameter(format!("bad formula character {c:?}")));
            }
        }
        Ok(out)
    }

    impl Eval<'_> {
        fn peek(&self) -> Option<&Tok> {
            self.toks.get(self.pos)
        }

        fn eat(&mut self, c: char) -> Result<()> {
            if self.peek() == Some(&Tok::Op(c)) {
                self.pos += 1;
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!("expected {c:?} in formula")))
            }
        }

        fn expr(&mut self) -> Result<Capped> {
            let mut v = self.term()?;
            while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
                self.pos += 1;
                let r = self.term()?;
                v = if c == '+' {
                    v.zip(r).and_then(|(a, b)| capped(a + b))
                } else {
                    v.zip(r).map(|(a, b)| if a >= b { a - b } else { BigUint::zero() })
                };
            }
            Ok(v)
        }

        fn term(&mut self) -> Result<Capped> {
            let mut v = self.power()?;
            loop {
                match self.peek() {
                    Some(Tok::Op('*')) => {
                        self.pos += 1;
                    }
                    Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('(')) => {}
                    _ => return Ok(v),
                }
                let r = self.power()?;
                let zero = |x: &Capped| matches!(x, Some(z) if z.is_zero());
                v = if zero(&v) || zero(&r) {
                    Some(BigUint::zero())
                } else {
                    v.zip(r).and_then(|(a, b)| capped(a * b))
                };
            }
        }

        fn power(&mut self) -> Result<Capped> {
            let base = self.atom()?;
            if self.peek() == Some(&Tok::Op('^')) {
                self.pos += 1;
                let e = self.power()?;
                return Ok(match (base, e) {
                    (Some(b), Some(e)) => {
                        let e = e.to_u64().filter(|&e| (b.bits().max(1) - 1).saturating_mul(e) <= BIT_CAP);
                        match e {
                            Some(e) => capped(num_traits::pow(b, e as usize)),
                            None => None,
                        }
                    }
                    _ => None,
                });
            }
            Ok(base)
        }

        fn args(&mut self) -> Result<Vec<Capped>> {
            self.eat('(')?;
            let mut v = vec![self.expr()?];
            while self.peek() == Some(&Tok::Op(',')) {
                self.pos += 1;
                v.push(self.expr()?);
            }
            self.eat(')')?;
            Ok(v)
        }

        fn atom(&mut self) -> Result<Capped> {
            match self.peek().cloned() {
                Some(Tok::Num(v)) => {
                    self.pos += 1;
                    Ok(Some(BigUint::from(v)))
                }
                Some(Tok::Op('(')) => {
                    self.pos += 1;
                    let v = self.expr()?;
                    self.eat(')')?;
                    Ok(v)
                }
                Some(Tok::Ident(name)) => {
                    self.pos += 1;
                    if self.peek() == Some(&Tok::Op('(')) {
                        let a = self.args()?;
                        self.call(&name, a)
                    } else {
                        self.vars
                            .get(&name)
                            .cloned()
                            .ok_or_else(|| Error::UnknownName(format!("formula variable {name}")))
                    }
                }
                other => Err(Error::InvalidParameter(format!("unexpected token {other:?} in formula"))),
            }
        }

        fn call(&mut self, f: &str, a: Vec<Capped>) -> Result<Capped> {
            if a.iter().any(Option::is_none) {
                return Ok(None);
            }
            let a: Vec<BigUint> = a.into_iter().map(Option::unwrap).collect();
            Ok(match (f, a.as_slice()) {
                ("R2", [x]) => self.ramsey(x, x),
                ("R", [x, y]) => self.ramsey(x, y),
                ("Rm", [m, x]) => {
                    let mut r = x.clone();
                    let mut left = m - BigUint::one();
                    while !left.is_zero() {
                        match self.ramsey(x, &r) {
                            Some(nx) if nx == r => break,
                            Some(nx) => r = nx,
                            None => return Ok(None),
                        }
                        left -= 1u32;
                    }
                    Some(r)
                }
                ("MR", [k, q]) => multipartite(k, q),
                ("N0", [x]) => {
                    if *x <= BigUint::one() {
                        Some(BigUint::one())
                    } else {
                        match self.ramsey(x, x) {
                            None => None,
                            Some(r) => horner(&(r - BigUint::one()), x),
                        }
                    }
                }
                _ => return Err(Error::UnknownName(format!("formula function {f}"))),
            })
        }

        /// Memoised recursion near the origin, descending binomial product elsewhere.
        fn ramsey(&mut self, s: &BigUint, t: &BigUint) -> Capped {
            match (s.to_u64(), t.to_u64()) {
                (Some(a), Some(b)) if a <= GRID && b <= GRID => Some(self.rec(a, b)),
                _ => {
                    let b = s.min(t).to_u64()? - 1;
                    let a = s + t - BigUint::from(2u32);
                    if binomial_surely_too_big(&a, b) {
                        return None;
                    }
                    // C(a, i) for i = 0..=b; increasing since b ≤ a/2.
                    let mut r = BigUint::one();
                    for i in 0..b {
                        r = r * (&a - BigUint::from(i)) / BigUint::from(i + 1);
                        if r.bits() > BIT_CAP {
                            return None;
                        }
                    }
                    Some(r)
                }
            }
        }

        fn rec(&mut self, s: u64, t: u64) -> BigUint {
            if s == 1 || t == 1 {
                return BigUint::one();
            }
            if s == 2 || t == 2 {
                return BigUint::from(s.max(t));
            }
            if self.mode == RamseyMode::KnownTable {
                if let Some(&(_, _, r)) =
                    KNOWN_RAMSEY.iter().find(|&&(x, y, _)| (x, y) == (s.min(t), s.max(t)))
                {
                    return BigUint::from(r);
                }
            }
            if let Some(v) = self.memo.get(&(s, t)) {
                return v.clone();
            }
            let v = self.rec(s - 1, t) + self.rec(s, t - 1);
            self.memo.insert((s, t), v.clone());
            v
        }
    }

    fn horner(d: &BigUint, n: &BigUint) -> Capped {
        // 1 + (1 + d + … + d^{n-2})
        let mut s = BigUint::zero();
        let mut left = n - BigUint::one();
        while !left.is_zero() {
            s = s * d + BigUint::one();
            if s.bits() > BIT_CAP {
                return None;
            }
            left -= 1u32;
        }
        capped(s + BigUint::one())
    }

    fn multipartite(k: &BigUint, q: &BigUint) -> Capped {
        let k = k.to_u64()?;
        if k >= BIT_CAP {
            return None;
        }
        let ts: Vec<BigUint> = (0..k)
            .map(|i| if q.is_one() { BigUint::one() } else { (q - 1u32) * (BigUint::one() << (k - 1 - i)) + 1u32 })
            .collect();
        let mut best = BigUint::zero();
        let mut s = BigUint::zero();
        for t in ts {
            let e = s.to_u64().filter(|&e| e < BIT_CAP)?;
            best = best.max(capped((BigUint::one() << e) * &t)?);
            s += t;
        }
        Some(best)
    }

    /// Re-evaluate every entry of `set` from its formula text.
    pub fn reevaluate(set: &BoundSet) -> Result<Vec<(&'static str, BoundValue)>> {
        let mut vars: HashMap<String, Capped> = HashMap::new();
        vars.insert("n".into(), Some(BigUint::from(set.n)));
        let mut out = Vec::new();
        for e in &set.entries {
            let mut ev = Eval { toks: lex(e.formula)?, pos: 0, vars: &vars, mode: set.mode, memo: HashMap::new() };
            let v = ev.expr()?;
            if ev.pos != ev.toks.len() {
                return Err(Error::InvalidParameter(format!("trailing tokens in {}", e.formula)));
            }
            vars.insert(e.name.to_string(), v.clone());
            out.push((e.name, BoundValue::from_capped(v)));
        }
        Ok(out)
    }

    /// Evaluate a standalone formula with `n` bound.
    pub fn evaluate(formula: &str, n: u64, mode: RamseyMode) -> Result<BoundValue> {
        let mut vars = HashMap::new();
        vars.insert("n".to_string(), Some(BigUint::from(n)));
        let mut ev = Eval { toks: lex(formula)?, pos: 0, vars: &vars, mode, memo: HashMap::new() };
        Ok(BoundValue::from_capped(ev.expr()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex(v: BoundValue) -> u64 {
        v.exact().and_then(|x| x.to_u64()).expect("small exact value")
    }

    #[test]
    fn r2_examples() {
        assert_eq!(ex(r2_upper(3, 3, RamseyMode::KnownTable).unwrap()), 6);
        assert_eq!(ex(r2_upper(3, 3, RamseyMode::RecursionOnly).unwrap()), 6);
        assert_eq!(ex(r2_upper(2, 2, RamseyMode::KnownTable).unwrap()), 2);
        assert_eq!(ex(r2_upper(4, 4, RamseyMode::KnownTable).unwrap()), 18);
        assert_eq!(ex(r2_upper(4, 4, RamseyMode::RecursionOnly).unwrap()), 20);
        assert_eq!(ex(r2_upper(5, 5, RamseyMode::RecursionOnly).unwrap()), 70);
        assert!(r2_upper(0, 3, RamseyMode::KnownTable).is_err());
    }

    #[test]
    fn r2_beyond_grid_is_binomial() {
        // C(s+t-2, s-1) with s = 3, t = 100.
        assert_eq!(ex(r2_upper(3, 100, RamseyMode::RecursionOnly).unwrap()), 101 * 100 / 2);
        assert_eq!(ex(r2_upper(3, 100, RamseyMode::KnownTable).unwrap()), 101 * 100 / 2);
        assert_eq!(r2_upper(1000, 1000, RamseyMode::KnownTable).unwrap().exact().unwrap().bits(), 1993);
        assert_eq!(r2_upper(300_000, 300_000, RamseyMode::KnownTable).unwrap(), BoundValue::Astronomical);
    }

    #[test]
    fn rm_examples() {
        let m = |x: u64| BigUint::from(x);
        assert_eq!(ex(rm_upper(&m(1), 7, RamseyMode::KnownTable).unwrap()), 7);
        assert_eq!(ex(rm_upper(&m(2), 3, RamseyMode::KnownTable).unwrap()), 6);
        assert_eq!(ex(rm_upper(&m(3), 3, RamseyMode::KnownTable).unwrap()), 20);
        assert_eq!(ex(rm_upper(&m(3), 3, RamseyMode::RecursionOnly).unwrap()), 21);
        let huge = BigUint::one() << 200u32;
        assert_eq!(ex(rm_upper(&huge, 2, RamseyMode::KnownTable).unwrap()), 2);
        assert_eq!(rm_upper(&m(256), 3, RamseyMode::KnownTable).unwrap(), BoundValue::Astronomical);
    }

    #[test]
    fn mr_and_n0_examples() {
        assert_eq!(ex(mr_upper(2, 1).unwrap()), 2);
        assert_eq!(ex(mr_upper(2, 2).unwrap()), 16);
        assert_eq!(ex(mr_upper(3, 1).unwrap()), 4);
        assert!(mr_upper(1, 1).is_err());
        assert_eq!(ex(n0_upper(1, RamseyMode::KnownTable).unwrap()), 1);
        assert_eq!(ex(n0_upper(2, RamseyMode::KnownTable).unwrap()), 2);
        assert_eq!(ex(n0_upper(3, RamseyMode::KnownTable).unwrap()), 7);
    }

    #[test]
    fn threshold_examples() {
        let s = theorem_thresholds(TheoremId::B1Deg, 3, RamseyMode::RecursionOnly).unwrap();
        assert_eq!(ex(s.get("N1").unwrap().clone()), 140);
        let s = theorem_thresholds(TheoremId::B1Deg, 3, RamseyMode::KnownTable).unwrap();
        assert_eq!(ex(s.get("N1").unwrap().clone()), 128);
        let s = theorem_thresholds(TheoremId::B3Sdeg, 3, RamseyMode::KnownTable).unwrap();
        assert_eq!(ex(s.get("N2").unwrap().clone()), 6);
        assert_eq!(ex(s.get("N3").unwrap().clone()), 8);
        assert_eq!(ex(s.get("N1").unwrap().clone()), 54);
        let s = theorem_thresholds(TheoremId::B1Deg, 1, RamseyMode::KnownTable).unwrap();
        assert_eq!(ex(s.get("N1").unwrap().clone()), 0);
        let s = theorem_thresholds(TheoremId::B1CL, 2, RamseyMode::KnownTable).unwrap();
        assert_eq!(s.threshold_value(), Err(Error::Unavailable(GAMMA_C)));
        assert!(theorem_thresholds(TheoremId::B3Deg, 0, RamseyMode::KnownTable).is_err());
    }

    #[test]
    fn audit_agrees() {
        for t in TheoremId::ALL {
            for n in 1..=6 {
                for mode in [RamseyMode::KnownTable, RamseyMode::RecursionOnly] {
                    let s = theorem_thresholds(t, n, mode).unwrap();
                    let again = audit::reevaluate(&s).unwrap();
                    let direct: Vec<_> = s.entries.iter().map(|e| (e.name, e.value.clone())).collect();
                    assert_eq!(direct, again, "{t} n={n} {mode:?}");
                }
            }
        }
    }

    #[test]
    fn bound_value_json() {
        let v = serde_json::to_string(&BoundValue::Exact(BigUint::from(140u32))).unwrap();
        assert_eq!(v, "\"140\"");
        let v = serde_json::to_string(&BoundValue::Astronomical).unwrap();
        assert_eq!(v, format!("{{\"exceeds_bits\":{BIT_CAP}}}"));
    }
}
