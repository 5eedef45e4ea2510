//! The four formal characters of GL(2,Z) and the coefficient modules.
//!
//! The character group is the Klein four-group generated by `det` and by
//! `sigma`, the sign of `A mod 2` acting as a permutation of the three
//! nonzero vectors of F_2^2.  Coefficient values are exact scalars in Q(i),
//! homogeneous polynomials in C[X,Y]_j with the action
//! `(A, p) -> p((X,Y)A)`, or elements of the group ring over the character
//! group.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::quadform::UnimodMat;
use crate::rat::{Qi, Rat};
use num_traits::Zero;

/// `chi = det^eps_det * sigma^eps_sigma`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FormalCharacter {
    pub eps_det: bool,
    pub eps_sigma: bool,
}

impl FormalCharacter {
    pub const ONE: FormalCharacter = FormalCharacter { eps_det: false, eps_sigma: false };
    pub const DET: FormalCharacter = FormalCharacter { eps_det: true, eps_sigma: false };
    pub const SIGMA: FormalCharacter = FormalCharacter { eps_det: false, eps_sigma: true };
    pub const DET_SIGMA: FormalCharacter = FormalCharacter { eps_det: true, eps_sigma: true };

    pub const ALL: [FormalCharacter; 4] =
        [Self::ONE, Self::DET, Self::SIGMA, Self::DET_SIGMA];

    pub fn product(&self, o: &FormalCharacter) -> FormalCharacter {
        FormalCharacter {
            eps_det: self.eps_det ^ o.eps_det,
            eps_sigma: self.eps_sigma ^ o.eps_sigma,
        }
    }

    /// `det^k` as a formal character.
    pub fn det_pow(k: i64) -> FormalCharacter {
        if k.rem_euclid(2) == 1 {
            Self::DET
        } else {
            Self::ONE
        }
    }

    pub fn eval(&self, a: &UnimodMat) -> i64 {
        let mut v = 1;
        if self.eps_det {
            v *= a.det();
        }
        if self.eps_sigma {
            v *= sigma_char(a);
        }
        v
    }

    pub fn token(&self) -> &'static str {
        match (self.eps_det, self.eps_sigma) {
            (false, false) => "1",
            (true, false) => "det",
            (false, true) => "sigma",
            (true, true) => "det.sigma",
        }
    }

    pub fn from_token(s: &str) -> Result<FormalCharacter> {
        match s {
            "1" => Ok(Self::ONE),
            "det" => Ok(Self::DET),
            "sigma" => Ok(Self::SIGMA),
            "det.sigma" => Ok(Self::DET_SIGMA),
            _ => Err(Error::Format(format!("unknown character token {s:?}"))),
        }
    }
}

impl fmt::Display for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Sign of `A mod 2` permuting the column vectors (0,1), (1,0), (1,1).
pub fn sigma_char(a: &UnimodMat) -> i64 {
    let m = &a.m;
    let image = |v: (i64, i64)| -> usize {
        let x = (m[0][0] * v.0 + m[0][1] * v.1).rem_euclid(2);
        let y = (m[1][0] * v.0 + m[1][1] * v.1).rem_euclid(2);
        match (x, y) {
            (0, 1) => 0,
            (1, 0) => 1,
            (1, 1) => 2,
            _ => unreachable!("unimodular matrix maps nonzero vector to zero mod 2"),
        }
    };
    let perm = [image((0, 1)), image((1, 0)), image((1, 1))];
    let fixed = perm.iter().enumerate().filter(|(i, &p)| *i == p).count();
    match fixed {
        3 => 1,
        1 => -1,
        0 => 1, // 3-cycle
        _ => unreachable!(),
    }
}

/// Homogeneous polynomial of degree `coeffs.len() - 1`; `coeffs[i]` is the
/// coefficient of `X^(j-i) Y^i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomPoly {
    coeffs: Vec<Qi>,
}

impl HomPoly {
    pub fn new(coeffs: Vec<Qi>) -> Self {
        assert!(!coeffs.is_empty());
        HomPoly { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        HomPoly { coeffs: vec![Qi::zero(); degree + 1] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Qi] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Qi {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Qi::is_zero)
    }

    pub fn add(&self, o: &HomPoly) -> HomPoly {
        assert_eq!(self.degree(), o.degree(), "degree mismatch in polynomial sum");
        HomPoly {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn neg(&self) -> HomPoly {
        HomPoly { coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, s: &Qi) -> HomPoly {
        HomPoly { coeffs: self.coeffs.iter().map(|x| x * s).collect() }
    }

    /// Product; degrees add.
    pub fn mul(&self, o: &HomPoly) -> HomPoly {
        let d = self.degree() + o.degree();
        let mut out = vec![Qi::zero(); d + 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
        HomPoly { coeffs: out }
    }

    /// Substitution `(X, Y) -> (X, Y) M` for an arbitrary integer matrix.
    pub fn substitute(&self, m: &[[i64; 2]; 2]) -> HomPoly {
        let j = self.degree();
        // X -> m00 X + m10 Y, Y -> m01 X + m11 Y
        let lx = (Qi::from_int(m[0][0]), Qi::from_int(m[1][0]));
        let ly = (Qi::from_int(m[0][1]), Qi::from_int(m[1][1]));
        let pow = |l: &(Qi, Qi), n: usize| -> Vec<Vec<Qi>> {
            // powers 0..=n of the linear form, each as coefficient vectors
            let mut acc = vec![vec![Qi::one()]];
            for k in 1..=n {
                let prev = &acc[k - 1];
                let mut cur = vec![Qi::zero(); k + 1];
                for (i, c) in prev.iter().enumerate() {
                    cur[i] = &cur[i] + &(c * &l.0);
                    cur[i + 1] = &cur[i + 1] + &(c * &l.1);
                }
                acc.push(cur);
            }
            acc
        };
        let px = pow(&lx, j);
        let py = pow(&ly, j);
        let mut out = vec![Qi::zero(); j + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // c * lx^(j-i) * ly^i
            let (u, v) = (&px[j - i], &py[i]);
            for (s, us) in u.iter().enumerate() {
                if us.is_zero() {
                    continue;
                }
                for (t, vt) in v.iter().enumerate() {
                    if vt.is_zero() {
                        continue;
                    }
                    let w = &(us * vt) * c;
                    out[s + t] = &out[s + t] + &w;
                }
            }
        }
        HomPoly { coeffs: out }
    }

    pub fn act(&self, a: &UnimodMat) -> HomPoly {
        self.substitute(&a.m)
    }
}

/// Monomial helper: `coef * X^(j-i) Y^i` of degree `j`.
pub fn monomial(j: usize, i: usize, coef: Qi) -> HomPoly {
    let mut p = HomPoly::zero(j);
    p.coeffs[i] = coef;
    p
}

/// Which module the values of a formal Siegel modular form live in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ValueModule {
    Scalar,
    Poly(usize),
    GroupRing,
}

impl fmt::Display for ValueModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueModule::Scalar => write!(f, "rational"),
            ValueModule::Poly(j) => write!(f, "poly {j}"),
            ValueModule::GroupRing => write!(f, "groupring"),
        }
    }
}

/// A coefficient value: exact scalar, homogeneous polynomial, or group-ring
/// element over the character group.
#[derive(Clone, PartialEq, Debug)]
pub enum CoeffValue {
    Scalar(Qi),
    Poly(HomPoly),
    GroupRing(BTreeMap<FormalCharacter, CoeffValue>),
}

impl CoeffValue {
    pub fn zero(module: ValueModule) -> CoeffValue {
        match module {
            ValueModule::Scalar => CoeffValue::Scalar(Qi::zero()),
            ValueModule::Poly(j) => CoeffValue::Poly(HomPoly::zero(j)),
            ValueModule::GroupRing => CoeffValue::GroupRing(BTreeMap::new()),
        }
    }

    pub fn scalar_rat(r: Rat) -> CoeffValue {
        CoeffValue::Scalar(Qi::from_rat(r))
    }

    pub fn scalar_int(n: i64) -> CoeffValue {
        CoeffValue::Scalar(Qi::from_int(n))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            CoeffValue::Scalar(s) => s.is_zero(),
            CoeffValue::Poly(p) => p.is_zero(),
            CoeffValue::GroupRing(m) => m.values().all(CoeffValue::is_zero),
        }
    }

    pub fn in_module(&self, module: ValueModule) -> bool {
        match (self, module) {
            (CoeffValue::Scalar(_), ValueModule::Scalar) => true,
            (CoeffValue::Poly(p), ValueModule::Poly(j)) => p.degree() == j,
            (CoeffValue::GroupRing(m), ValueModule::GroupRing) => {
                m.values().all(|v| !matches!(v, CoeffValue::GroupRing(_)))
            }
            _ => false,
        }
    }

    pub fn add(&self, o: &CoeffValue) -> CoeffValue {
        match (self, o) {
            (CoeffValue::Scalar(x), CoeffValue::Scalar(y)) => CoeffValue::Scalar(x + y),
            (CoeffValue::Poly(x), CoeffValue::Poly(y)) => CoeffValue::Poly(x.add(y)),
            (CoeffValue::GroupRing(x), CoeffValue::GroupRing(y)) => {
                let mut out = x.clone();
                for (chi, v) in y {
                    out.entry(*chi)
                        .and_modify(|cur| *cur = cur.add(v))
                        .or_insert_with(|| v.clone());
                }
                CoeffValue::GroupRing(out)
            }
            _ => panic!("module mismatch in coefficient sum"),
        }
    }

    pub fn neg(&self) -> CoeffValue {
        match self {
            CoeffValue::Scalar(x) => CoeffValue::Scalar(-x),
            CoeffValue::Poly(x) => CoeffValue::Poly(x.neg()),
            CoeffValue::GroupRing(m) => {
                CoeffValue::GroupRing(m.iter().map(|(c, v)| (*c, v.neg())).collect())
            }
        }
    }

    pub fn scale(&self, s: &Qi) -> CoeffValue {
        match self {
            CoeffValue::Scalar(x) => CoeffValue::Scalar(x * s),
            CoeffValue::Poly(x) => CoeffValue::Poly(x.scale(s)),
            CoeffValue::GroupRing(m) => {
                CoeffValue::GroupRing(m.iter().map(|(c, v)| (*c, v.scale(s))).collect())
            }
        }
    }

    /// Product.  Scalar x scalar, scalar x polynomial, polynomial x
    /// polynomial (degrees add) and group ring x group ring
    /// (`e_chi1 e_chi2 = e_chi1chi2`).
    pub fn mul(&self, o: &CoeffValue) -> CoeffValue {
        match (self, o) {
            (CoeffValue::Scalar(x), CoeffValue::Scalar(y)) => CoeffValue::Scalar(x * y),
            (CoeffValue::Scalar(x), CoeffValue::Poly(y)) => CoeffValue::Poly(y.scale(x)),
            (CoeffValue::Poly(x), CoeffValue::Scalar(y)) => CoeffValue::Poly(x.scale(y)),
            (CoeffValue::Poly(x), CoeffValue::Poly(y)) => CoeffValue::Poly(x.mul(y)),
            (CoeffValue::GroupRing(x), CoeffValue::GroupRing(y)) => {
                let mut out: BTreeMap<FormalCharacter, CoeffValue> = BTreeMap::new();
                for (c1, v1) in x {
                    for (c2, v2) in y {
                        let c = c1.product(c2);
                        let p = v1.mul(v2);
                        out.entry(c).and_modify(|cur| *cur = cur.add(&p)).or_insert(p);
                    }
                }
                CoeffValue::GroupRing(out)
            }
            _ => panic!("module mismatch in coefficient product"),
        }
    }

    /// GL(2,Z)-action.  Trivial on scalars, substitution on polynomials,
    /// and `(A, sum c(chi) e_chi) -> sum chi(A) (A.c(chi)) e_chi` on the
    /// group ring.
    pub fn act(&self, a: &UnimodMat) -> CoeffValue {
        match self {
            CoeffValue::Scalar(x) => CoeffValue::Scalar(x.clone()),
            CoeffValue::Poly(p) => CoeffValue::Poly(p.act(a)),
            CoeffValue::GroupRing(m) => CoeffValue::GroupRing(
                m.iter()
                    .map(|(chi, v)| {
                        let s = chi.eval(a);
                        let av = v.act(a);
                        (*chi, if s < 0 { av.neg() } else { av })
                    })
                    .collect(),
            ),
        }
    }

    /// Apply `value * sign`.
    pub fn signed(&self, sign: i64) -> CoeffValue {
        if sign >= 0 {
            self.clone()
        } else {
            self.neg()
        }
    }

    /// Flatten into rational components (real parts then imaginary parts),
    /// used by the exact linear algebra.
    pub fn components(&self) -> Vec<Rat> {
        match self {
            CoeffValue::Scalar(x) => vec![x.re.clone(), x.im.clone()],
            CoeffValue::Poly(p) => {
                let mut v: Vec<Rat> = p.coeffs().iter().map(|c| c.re.clone()).collect();
                v.extend(p.coeffs().iter().map(|c| c.im.clone()));
                v
            }
            CoeffValue::GroupRing(m) => {
                let mut v = Vec::new();
                for chi in FormalCharacter::ALL {
                    match m.get(&chi) {
                        Some(inner) => v.extend(inner.components()),
                        None => v.extend([Rat::zero(), Rat::zero()]),
                    }
                }
                v
            }
        }
    }
}
