//! Langlands parameters attached to members of `Norm(O)`: chain factors,
//! their expansion into `{x,y}^±` and `<x,x>^+` pieces, distinguished
//! signs, induced forms and the transfer to orthogonal orbits.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chain::{Chain, Parity};
use crate::degeneration::{NormMember, NormSet};
use crate::halfint::HalfInt;
use crate::orbit::Orbit;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn parse(text: &str) -> Result<Sign> {
        match text.trim() {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("bad sign {other:?}"))),
        }
    }

    /// `+` for even `k`, `-` for odd.
    pub fn alternating(k: usize) -> Sign {
        if k % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// How the second row of a string is offset from the first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decoration {
    Plain,
    /// second row shifted by `-1`
    Under,
    /// second row shifted by `+1`
    Over,
}

/// The string `(a → A)`: `λ_L = (a, a+1, …, A)` and `λ_R` the same
/// shifted according to the decoration. Empty when `A < a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LString {
    pub start: HalfInt,
    pub end: HalfInt,
    pub decoration: Decoration,
}

impl LString {
    pub fn new(start: HalfInt, end: HalfInt, decoration: Decoration) -> LString {
        assert!((end - start).is_integer(), "string ({start} -> {end}) has non-integral length");
        LString { start, end, decoration }
    }

    pub fn len(&self) -> usize {
        let d = (self.end - self.start).doubled();
        if d < 0 {
            0
        } else {
            (d / 2 + 1) as usize
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn lambda_left(&self) -> Vec<HalfInt> {
        (0..self.len() as i64).map(|i| self.start + HalfInt::from_int(i)).collect()
    }

    pub fn lambda_right(&self) -> Vec<HalfInt> {
        let shift = match self.decoration {
            Decoration::Plain => HalfInt::ZERO,
            Decoration::Under => HalfInt::from_int(-1),
            Decoration::Over => HalfInt::ONE,
        };
        self.lambda_left().into_iter().map(|x| x + shift).collect()
    }
}

impl fmt::Display for LString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = format!("({} -> {})", self.start, self.end);
        match self.decoration {
            Decoration::Plain => write!(f, "{body}"),
            Decoration::Under => write!(f, "under{body}"),
            Decoration::Over => write!(f, "over{body}"),
        }
    }
}

/// One `GL` piece of a parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    /// `{x,y}^+`
    BracePlus(u32, u32),
    /// `{x,y}^-`
    BraceMinus(u32, u32),
    /// `<x,x>^+`
    AnglePlus(u32),
}

impl Factor {
    pub fn brace(x: u32, y: u32, sign: Sign) -> Result<Factor> {
        if y > x || (x - y) % 2 != 0 {
            return Err(Error::Parse(format!("{{{x},{y}}} needs 0 <= y <= x of one parity")));
        }
        match sign {
            Sign::Plus => Ok(Factor::BracePlus(x, y)),
            Sign::Minus if y >= 1 => Ok(Factor::BraceMinus(x, y)),
            Sign::Minus => Err(Error::Parse(format!("{{{x},{y}}}^- needs y >= 1"))),
        }
    }

    /// Rank of the `GL` block this piece lives on.
    pub fn gl_size(self) -> usize {
        match self {
            Factor::BracePlus(x, y) | Factor::BraceMinus(x, y) => ((x + y) / 2) as usize,
            Factor::AnglePlus(x) => x as usize,
        }
    }

    /// Highest weight of the one-dimensional `U(gl_size)` module.
    pub fn block_ktype(self) -> Vec<i64> {
        let mut k = vec![0; self.gl_size()];
        if let Factor::BraceMinus(_, y) = self {
            k[..y as usize].fill(1);
        }
        k
    }

    pub fn strings(self) -> Vec<LString> {
        let h = |n: i64| HalfInt::half_of(n);
        match self {
            Factor::BracePlus(x, y) => {
                vec![LString::new(h(2 - i64::from(y)), h(i64::from(x)), Decoration::Plain)]
            }
            Factor::BraceMinus(x, y) => {
                let (x, y) = (i64::from(x), i64::from(y));
                vec![LString::new(h(2 - y), h(y), Decoration::Under), LString::new(h(y + 2), h(x), Decoration::Plain)]
            }
            Factor::AnglePlus(x) => {
                let x = i64::from(x);
                vec![LString::new(h(1 - x), h(x - 1), Decoration::Plain)]
            }
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::BracePlus(x, y) => write!(f, "{{{x},{y}}}^+"),
            Factor::BraceMinus(x, y) => write!(f, "{{{x},{y}}}^-"),
            Factor::AnglePlus(x) => write!(f, "<{x},{x}>^+"),
        }
    }
}

/// `[b0 (b1 b2) … b_{2k+1}]_δ^ε`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainFactor {
    pub chain: Chain,
    pub delta: Parity,
    pub eps: Sign,
}

/// Signs a chain admits under origin parity `delta`.
pub fn admissible_signs(chain: &Chain, delta: Parity) -> Vec<Sign> {
    if chain.parity() != delta {
        assert!(
            chain.entries().len() == 2 && chain.first() == chain.last(),
            "chain {chain} has parity opposite to its origin but is not an equal pair"
        );
        vec![Sign::Plus]
    } else if chain.last() == 0 {
        vec![Sign::Plus]
    } else {
        vec![Sign::Plus, Sign::Minus]
    }
}

impl ChainFactor {
    pub fn new(chain: Chain, delta: Parity, eps: Sign) -> Result<ChainFactor> {
        if !admissible_signs(&chain, delta).contains(&eps) {
            return Err(Error::Parse(format!("sign {eps} is not admissible for {chain} with parity {}", delta.digit())));
        }
        Ok(ChainFactor { chain, delta, eps })
    }

    /// Carries a choice of sign.
    pub fn is_sign_bearing(&self) -> bool {
        admissible_signs(&self.chain, self.delta).len() == 2
    }

    /// Expanded pieces: interior `{b,b}^-` then the outer piece.
    pub fn factors(&self) -> Vec<Factor> {
        let mut out: Vec<Factor> = self.chain.interior_pairs().into_iter().map(|b| Factor::BraceMinus(b, b)).collect();
        out.push(self.outer_factor());
        out
    }

    /// `{b0, b_{2k+1}}^ε`, or `<b0,b0>^+` for a chain of the other parity.
    pub fn outer_factor(&self) -> Factor {
        if self.chain.parity() != self.delta {
            Factor::AnglePlus(self.chain.first())
        } else {
            Factor::brace(self.chain.first(), self.chain.last(), self.eps).expect("admissible chain factor")
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ChainFactorJson {
            chain: self.chain.entries().to_vec(),
            start: self.chain.start(),
            delta: self.delta.digit(),
            eps: self.eps.to_string(),
        })
        .expect("factor json")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<ChainFactor> {
        let raw: ChainFactorJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        ChainFactor::new(Chain::at(raw.chain, raw.start)?, Parity::from_digit(raw.delta)?, Sign::parse(&raw.eps)?)
    }
}

#[derive(Serialize, Deserialize)]
struct ChainFactorJson {
    chain: Vec<u32>,
    /// Column index of the first entry inside the member orbit.
    #[serde(default)]
    start: usize,
    delta: u32,
    eps: String,
}

impl fmt::Display for ChainFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}^{}", self.chain, self.delta.digit(), self.eps)
    }
}

/// A parameter attached to a member of `Norm(O)`: one chain factor per
/// chain of the member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AttachedParameter {
    pub factors: Vec<ChainFactor>,
}

impl AttachedParameter {
    /// Expanded `{x,y}^± <x,x>^+` pieces, chain by chain.
    pub fn expanded(&self) -> Vec<Factor> {
        self.factors.iter().flat_map(ChainFactor::factors).collect()
    }

    /// The expanded form as text, e.g. `{6,6}^- {8,6}^- {2,2}^- {2,0}^+`.
    pub fn expanded_notation(&self) -> String {
        self.expanded().iter().map(Factor::to_string).collect::<Vec<_>>().join(" ")
    }

    /// Induction data: each piece becomes one `GL` block.
    pub fn to_induced_form(&self) -> InducedForm {
        InducedForm { blocks: self.expanded().into_iter().map(Block::from).collect() }
    }

    /// All strings of the expanded pieces.
    pub fn strings(&self) -> Vec<LString> {
        self.expanded().into_iter().flat_map(Factor::strings).collect()
    }

    pub fn is_distinguished(&self) -> bool {
        self.factors.iter().all(|f| !f.is_sign_bearing() || f.eps == Sign::alternating(f.chain.k()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.factors.iter().map(ChainFactor::to_json).collect())
    }

    pub fn from_json(value: &serde_json::Value) -> Result<AttachedParameter> {
        let items = value.as_array().ok_or_else(|| Error::Parse("parameter must be a JSON array".into()))?;
        Ok(AttachedParameter { factors: items.iter().map(ChainFactor::from_json).collect::<Result<_>>()? })
    }

    /// Parse `[8(66)6]_0^-[2(22)0]_0^+`.
    pub fn parse(text: &str) -> Result<AttachedParameter> {
        let mut factors = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let close = rest.find(']').ok_or_else(|| Error::Parse(format!("unclosed chain in {text:?}")))?;
            let chain = Chain::parse(&rest[..=close])?;
            let tail = &rest[close + 1..];
            let tail = tail.strip_prefix('_').ok_or_else(|| Error::Parse(format!("missing _δ in {text:?}")))?;
            let (digit, tail) = tail.split_at(1.min(tail.len()));
            let delta = Parity::from_digit(digit.parse().map_err(|_| Error::Parse(format!("bad δ in {text:?}")))?)?;
            let tail = tail.strip_prefix('^').ok_or_else(|| Error::Parse(format!("missing ^ε in {text:?}")))?;
            let (sign, tail) = tail.split_at(1.min(tail.len()));
            factors.push(ChainFactor::new(chain, delta, Sign::parse(sign)?)?);
            rest = tail.trim_start();
        }
        Ok(AttachedParameter { factors })
    }
}

impl fmt::Display for AttachedParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.factors {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// One `GL(size)` block with its one-dimensional unitary K-type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    pub size: usize,
    pub ktype: Vec<i64>,
}

impl Block {
    pub fn trivial(size: usize) -> Block {
        Block { size, ktype: vec![0; size] }
    }
}

impl From<Factor> for Block {
    fn from(f: Factor) -> Block {
        Block { size: f.gl_size(), ktype: f.block_ktype() }
    }
}

/// `Ind_{GL(a_1) × … × GL(a_r)}^{Sp(2n)}` of one-dimensional modules.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InducedForm {
    pub blocks: Vec<Block>,
}

impl InducedForm {
    /// Induced from the trivial character of the given blocks.
    pub fn trivial(sizes: &[usize]) -> InducedForm {
        InducedForm { blocks: sizes.iter().map(|&s| Block::trivial(s)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.size).sum()
    }
}

impl fmt::Display for InducedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let k: Vec<String> = b.ktype.iter().map(i64::to_string).collect();
                format!("GL({})[{}]", b.size, k.join(","))
            })
            .collect();
        write!(f, "Ind({})", parts.join(" x "))
    }
}

fn enumerate_signs(options: &[Vec<Sign>]) -> Vec<Vec<Sign>> {
    let mut out = vec![Vec::new()];
    for opts in options {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |&s| {
                    let mut p = prefix.clone();
                    p.push(s);
                    p
                })
            })
            .collect();
    }
    out
}

impl NormSet {
    /// Every parameter attached to `member`, signs `+` before `-` with the
    /// first chain varying slowest.
    pub fn attached_parameters(&self, member: &NormMember) -> Vec<AttachedParameter> {
        let chains = member.chains_with_delta(self.origin_parities());
        let options: Vec<Vec<Sign>> = chains.iter().map(|(c, d)| admissible_signs(c, *d)).collect();
        enumerate_signs(&options)
            .into_iter()
            .map(|signs| AttachedParameter {
                factors: chains
                    .iter()
                    .zip(signs)
                    .map(|((c, d), eps)| ChainFactor { chain: c.clone(), delta: *d, eps })
                    .collect(),
            })
            .collect()
    }

    /// The unique distinguished parameter of `member`.
    pub fn distinguished(&self, member: &NormMember) -> AttachedParameter {
        let found: Vec<AttachedParameter> =
            self.attached_parameters(member).into_iter().filter(AttachedParameter::is_distinguished).collect();
        assert_eq!(found.len(), 1, "{} has {} distinguished parameters", member.orbit(), found.len());
        found.into_iter().next().expect("one distinguished parameter")
    }

    /// Distinguished parameters of all members, in member order.
    pub fn distinguished_all(&self) -> Vec<AttachedParameter> {
        self.members().iter().map(|m| self.distinguished(m)).collect()
    }

    pub fn member_or_err(&self, member: &Orbit) -> Result<&NormMember> {
        self.find(member).ok_or_else(|| Error::NotMember { origin: self.origin().to_string(), member: member.to_string() })
    }
}

/// Parameters attached to `member` as an element of `Norm(origin)`.
pub fn attach_parameters(origin: &Orbit, member: &Orbit) -> Result<Vec<AttachedParameter>> {
    let set = origin.norm_set()?;
    Ok(set.attached_parameters(set.member_or_err(member)?))
}

/// The distinguished parameter of `member` in `Norm(origin)`.
pub fn distinguished_parameter(origin: &Orbit, member: &Orbit) -> Result<AttachedParameter> {
    let set = origin.norm_set()?;
    Ok(set.distinguished(set.member_or_err(member)?))
}

/// A distinguished factor of the Kraft-Procesi model, wrapped in the
/// trivial `{c,c}^+` blocks of any extracted repeated columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleFactor {
    pub wrappers: Vec<u32>,
    pub parameter: AttachedParameter,
}

impl ModuleFactor {
    pub fn to_induced_form(&self) -> InducedForm {
        let mut blocks: Vec<Block> = self.wrappers.iter().map(|&c| Block::trivial(c as usize)).collect();
        blocks.extend(self.parameter.to_induced_form().blocks);
        InducedForm { blocks }
    }
}

impl fmt::Display for ModuleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.wrappers {
            write!(f, "{{{c},{c}}}^+ ")?;
        }
        write!(f, "{}", self.parameter)
    }
}

/// Composition factors of the Kraft-Procesi model of the closure.
pub fn b_module_factors(orbit: &Orbit) -> Result<Vec<ModuleFactor>> {
    let (generic, wrappers) = orbit.extract_generic()?;
    let set = generic.norm_set()?;
    Ok(set
        .distinguished_all()
        .into_iter()
        .map(|parameter| ModuleFactor { wrappers: wrappers.clone(), parameter })
        .collect())
}

/// Parameter for an orthogonal orbit obtained by dropping the added leading
/// column from a parameter of its symplectic image.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrthogonalParameter {
    /// Interior pairs of the leading chain, kept as `{b,b}^-`.
    pub interior: Vec<u32>,
    /// Last entry of the leading chain.
    pub tail: u32,
    /// The sign carried over from the leading chain. It is kept as a symbol
    /// and not read as a K-type label.
    pub eps: Sign,
    /// Remaining chain factors, unchanged.
    pub rest: Vec<ChainFactor>,
}

impl OrthogonalParameter {
    /// `(c/2 - 1, …, 0)` for even `c`, `(c/2 - 1, …, 1/2)` for odd `c`.
    pub fn tail_string(&self) -> Vec<HalfInt> {
        let top = i64::from(self.tail) - 2;
        (0..).map(|j| top - 2 * j).take_while(|&d| d >= 0).map(HalfInt::from_doubled).collect()
    }
}

impl fmt::Display for OrthogonalParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.interior {
            write!(f, "{{{b},{b}}}^- ")?;
        }
        write!(f, "[{}]^{}", self.tail, self.eps)?;
        for x in &self.rest {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Transfer a parameter of a member of `Norm(q^c)` to the orthogonal side
/// by dropping the leading column `c_1 + 2` of `q^c`.
pub fn theta_transfer(q: &Orbit, p: &AttachedParameter) -> Result<OrthogonalParameter> {
    let image = q.to_symplectic()?;
    let expected = image.columns()[0];
    let lead = p.factors.first().ok_or(Error::LeadingColumnMissing { expected, found: 0 })?;
    if lead.chain.first() != expected {
        return Err(Error::LeadingColumnMissing { expected, found: lead.chain.first() });
    }
    Ok(OrthogonalParameter {
        interior: lead.chain.interior_pairs(),
        tail: lead.chain.last(),
        eps: lead.eps,
        rest: p.factors[1..].to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(cols: &[u32]) -> Orbit {
        Orbit::symplectic(cols).unwrap()
    }

    fn shown(ps: &[AttachedParameter]) -> Vec<String> {
        ps.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn seventeen_parameters() {
        let set = c(&[8, 6, 6, 4, 4, 2, 2, 0]).norm_set().unwrap();
        let counts: Vec<usize> = set.members().iter().map(|m| set.attached_parameters(m).len()).collect();
        assert_eq!(counts, vec![1, 2, 2, 2, 2, 4, 2, 2]);
        assert_eq!(counts.iter().sum::<usize>(), 17);
        let top = set.attached_parameters(&set.members()[0]);
        assert_eq!(shown(&top), ["[8(66)(44)(22)0]_0^+"]);
        let m = set.find(&c(&[8, 8, 5, 5, 2, 2, 2, 0])).unwrap();
        assert_eq!(shown(&set.attached_parameters(m)), ["[88]_0^+[55]_0^+[2(22)0]_0^+", "[88]_0^-[55]_0^+[2(22)0]_0^+"]);
        assert_eq!(set.attached_parameters(m)[0].expanded_notation(), "{8,8}^+ <5,5>^+ {2,2}^- {2,0}^+");
    }

    #[test]
    fn distinguished_single_chain() {
        let set = c(&[8, 6, 6, 4, 4, 2, 2, 0]).norm_set().unwrap();
        assert_eq!(
            shown(&set.distinguished_all()),
            [
                "[8(66)(44)(22)0]_0^+",
                "[88]_0^+[4(44)(22)0]_0^+",
                "[8(66)6]_0^-[2(22)0]_0^+",
                "[8(66)(44)4]_0^+",
                "[88]_0^+[55]_0^+[2(22)0]_0^+",
                "[88]_0^+[4(44)4]_0^-",
                "[8(66)6]_0^-[33]_0^+",
                "[88]_0^+[55]_0^+[33]_0^+",
            ]
        );
    }

    #[test]
    fn distinguished_two_chains() {
        let o = c(&[12, 10, 10, 8, 7, 5, 5, 3, 3, 1]);
        assert_eq!(distinguished_parameter(&o, &o).unwrap().to_string(), "[12(10,10)8]_0^-[7(55)(33)1]_1^+");
        let m = c(&[12, 10, 10, 8, 7, 7, 4, 4, 1, 1]);
        let ps = attach_parameters(&o, &m).unwrap();
        assert_eq!(ps.len(), 8);
        assert!(ps.iter().all(|p| p.factors[2].to_string() == "[44]_1^+"));
        assert_eq!(ps[0].factors[2].outer_factor(), Factor::AnglePlus(4));
        assert_eq!(distinguished_parameter(&o, &m).unwrap().to_string(), "[12(10,10)8]_0^-[77]_1^+[44]_1^+[11]_1^+");
        assert!(matches!(attach_parameters(&o, &c(&[12, 12, 8, 8, 7, 5, 5, 3, 3, 1, 1, 1])), Err(Error::NotMember { .. })));
    }

    #[test]
    fn parse_and_json() {
        let p = AttachedParameter::parse("[8(66)6]_0^-[2(22)0]_0^+").unwrap();
        assert_eq!(p.to_string(), "[8(66)6]_0^-[2(22)0]_0^+");
        assert_eq!(p.factors[0].to_json().to_string(), r#"{"chain":[8,6,6,6],"delta":0,"eps":"-","start":0}"#);
        assert_eq!(ChainFactor::from_json(&p.factors[0].to_json()).unwrap(), p.factors[0]);
        assert!(AttachedParameter::parse("[4(22)0]_0^-").is_err());
        assert_eq!(p.expanded_notation(), "{6,6}^- {8,6}^- {2,2}^- {2,0}^+");
    }

    #[test]
    fn induced_forms() {
        let p = AttachedParameter::parse("[4(22)0]_0^+").unwrap();
        assert_eq!(p.to_induced_form().blocks, vec![Block { size: 2, ktype: vec![1, 1] }, Block::trivial(2)]);
        assert_eq!(Block::from(Factor::AnglePlus(3)), Block::trivial(3));
        let p = AttachedParameter::parse("[88]_0^-").unwrap();
        assert_eq!(p.to_induced_form().blocks, vec![Block { size: 8, ktype: vec![1; 8] }]);
        assert_eq!(Factor::BraceMinus(6, 2).block_ktype(), vec![1, 1, 0, 0]);
    }

    #[test]
    fn strings_of_pieces() {
        let s = Factor::BraceMinus(2, 2).strings();
        assert_eq!(s[0].lambda_left(), vec![HalfInt::ZERO, HalfInt::ONE]);
        assert_eq!(s[0].lambda_right(), vec![HalfInt::from_int(-1), HalfInt::ZERO]);
        assert!(s[1].is_empty());
        let s = Factor::AnglePlus(4).strings();
        assert_eq!(s[0].lambda_left().first(), Some(&HalfInt::half_of(-3)));
        assert_eq!(s[0].len(), 4);
        let s = Factor::BracePlus(4, 0).strings();
        assert_eq!(s[0].to_string(), "(1 -> 2)");
    }

    #[test]
    fn module_factors() {
        let f = b_module_factors(&c(&[4, 2, 2, 0])).unwrap();
        let text: Vec<String> = f.iter().map(|m| m.parameter.expanded_notation()).collect();
        assert_eq!(text, ["{2,2}^- {4,0}^+", "{4,4}^+"]);
        let f = b_module_factors(&c(&[2, 2])).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].parameter.expanded_notation(), "{2,2}^+");
        assert_eq!(b_module_factors(&c(&[8, 6, 6, 4, 4, 2, 2, 0])).unwrap().len(), 8);
        let f = b_module_factors(&c(&[6, 4, 4, 4, 4, 2])).unwrap();
        assert!(f.iter().all(|m| m.wrappers == vec![4] && m.to_induced_form().rank() == 12));
    }

    #[test]
    fn theta_examples() {
        let q = Orbit::orthogonal(&[4, 4, 2]).unwrap();
        let p = AttachedParameter::parse("[6(44)2]_0^-").unwrap();
        let t = theta_transfer(&q, &p).unwrap();
        assert_eq!(t.to_string(), "{4,4}^- [2]^-");
        assert_eq!(t.tail_string(), vec![HalfInt::ZERO]);
        let q = Orbit::orthogonal(&[2, 2]).unwrap();
        let p = AttachedParameter::parse("[4(22)0]_0^+").unwrap();
        let t = theta_transfer(&q, &p).unwrap();
        assert_eq!(t.to_string(), "{2,2}^- [0]^+");
        assert!(t.tail_string().is_empty());
        let bad = AttachedParameter::parse("[88]_0^+").unwrap();
        assert_eq!(theta_transfer(&q, &bad), Err(Error::LeadingColumnMissing { expected: 4, found: 8 }));
        let odd = OrthogonalParameter { interior: vec![], tail: 5, eps: Sign::Plus, rest: vec![] };
        assert_eq!(odd.tail_string(), vec![HalfInt::half_of(3), HalfInt::half_of(1)]);
    }
}
