//! Closed-form arithmetic for the rank-3 scheme of a partial geometry
//! `pg(s, t, α)`: spectrum, Frame number, prime classification, the radical
//! predicted for each prime, and generic p-ranks of the point graph.

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::exactla::{prime_divisors, PrimeModulus};
use crate::incidence::{SrdParams, SrgParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize)]
pub enum PgError {
    #[error("invalid parameters: need s, t >= 1 and 1 <= alpha <= min(s, t), got ({s}, {t}, {alpha})")]
    InvalidParams { s: i64, t: i64, alpha: i64 },
    #[error("non-integral {0}: not an integer for these parameters")]
    NonIntegral(SpectrumField),
    #[error("Frame number undefined: f * g = 0")]
    DegenerateMultiplicities,
}

/// Spectrum quantities that come out of a division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumField {
    V,
    B,
    F,
    G,
}

impl std::fmt::Display for SpectrumField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SpectrumField::V => "v",
            SpectrumField::B => "b",
            SpectrumField::F => "f",
            SpectrumField::G => "g",
        };
        f.write_str(s)
    }
}

/// `pg(s, t, α)` parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PgParams {
    s: i64,
    t: i64,
    alpha: i64,
}

impl PgParams {
    /// Requires `α ≤ min(s, t)`: with `α = s + 1` the point graph is complete
    /// and the scheme drops below rank 3.
    pub fn new(s: i64, t: i64, alpha: i64) -> Result<Self, PgError> {
        if s < 1 || t < 1 || alpha < 1 || alpha > s.min(t) {
            return Err(PgError::InvalidParams { s, t, alpha });
        }
        Ok(PgParams { s, t, alpha })
    }

    /// Read `(s, t, α)` off a design whose blocks behave as lines: any two
    /// points share at most one block (`a2 = 1`, `b2 = 0`). Then the block size
    /// is `s + 1`, the point degree `t + 1`, and `P1` counts the points of a
    /// line collinear with an outside point, which is `α`.
    pub fn from_srd(p: &SrdParams) -> Result<Self, PgError> {
        let (s, t, alpha) = (p.s1 as i64 - 1, p.s2 as i64 - 1, p.p1_local as i64);
        if p.a2 != 1 || p.b2 != 0 {
            return Err(PgError::InvalidParams { s, t, alpha });
        }
        Self::new(s, t, alpha)
    }

    pub fn s(&self) -> i64 {
        self.s
    }
    pub fn t(&self) -> i64 {
        self.t
    }
    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    /// `s + t + 1 - α`, which equals `r - s'`.
    pub fn eigen_gap(&self) -> i64 {
        self.s + self.t + 1 - self.alpha
    }

    fn v_exact(&self) -> Result<i64, PgError> {
        exact_div((self.s + 1) * (self.s * self.t + self.alpha), self.alpha, SpectrumField::V)
    }
}

fn exact_div(num: i64, den: i64, field: SpectrumField) -> Result<i64, PgError> {
    if num % den == 0 {
        Ok(num / den)
    } else {
        Err(PgError::NonIntegral(field))
    }
}

/// Derived arithmetic data of the point graph of `pg(s, t, α)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PgSpectrum {
    pub v: i64,
    pub b: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
    /// Positive nontrivial eigenvalue `s - α`.
    pub r: i64,
    /// Negative eigenvalue `-(t + 1)`.
    pub sprime: i64,
    /// Multiplicity of `r`.
    pub f: i64,
    /// Multiplicity of `s'`.
    pub g: i64,
}

impl PgSpectrum {
    pub fn srg(&self) -> SrgParams {
        SrgParams {
            v: self.v,
            k: self.k,
            lambda: self.lambda,
            mu: self.mu,
        }
    }

    /// `1 + f + g = v` and `k + f r + g s' = 0`.
    pub fn trace_identities_hold(&self) -> bool {
        1 + self.f + self.g == self.v && self.k + self.f * self.r + self.g * self.sprime == 0
    }
}

pub fn pg_spectrum(params: &PgParams) -> Result<PgSpectrum, PgError> {
    let PgParams { s, t, alpha } = *params;
    let v = params.v_exact()?;
    let b = exact_div((t + 1) * (s * t + alpha), alpha, SpectrumField::B)?;
    let gap = params.eigen_gap();
    let f = exact_div(s * t * (s * t + s + t + 1), alpha * gap, SpectrumField::F)?;
    let g = exact_div(s * (s * t + alpha) * (s + 1 - alpha), alpha * gap, SpectrumField::G)?;
    Ok(PgSpectrum {
        v,
        b,
        k: s * (t + 1),
        lambda: s - 1 + t * (alpha - 1),
        mu: alpha * (t + 1),
        r: s - alpha,
        sprime: -(t + 1),
        f,
        g,
    })
}

/// Closed form `v² (s + t + 1 - α)²`.
pub fn frame_as(params: &PgParams) -> Result<i128, PgError> {
    let v = params.v_exact()? as i128;
    let gap = params.eigen_gap() as i128;
    Ok(v * v * gap * gap)
}

/// Rank-3 Frame number `v³ k (v - 1 - k) / (f g)` as an exact rational.
pub fn frame_from_spectrum(v: i64, k: i64, f: i64, g: i64) -> Result<Ratio<i128>, PgError> {
    if f == 0 || g == 0 {
        return Err(PgError::DegenerateMultiplicities);
    }
    let (v, k, f, g) = (v as i128, k as i128, f as i128, g as i128);
    Ok(Ratio::new(v * v * v * k * (v - 1 - k), f * g))
}

/// Primes dividing `v (s + t + 1 - α)`, ascending.
pub fn bad_primes(params: &PgParams) -> Result<Vec<u64>, PgError> {
    let v = params.v_exact()?;
    Ok(prime_divisors((v as i128 * params.eigen_gap() as i128).unsigned_abs()))
}

/// Which of `v` and `s + t + 1 - α` the prime divides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PrimeCase {
    /// Neither: semisimple.
    SS,
    /// `p | v` only.
    V,
    /// `p | (s + t + 1 - α)` only.
    R,
    /// Both.
    VR,
}

pub fn classify_prime(params: &PgParams, p: PrimeModulus) -> Result<PrimeCase, PgError> {
    let v = params.v_exact()?;
    let dv = p.divides(v as i128);
    let dr = p.divides(params.eigen_gap() as i128);
    Ok(match (dv, dr) {
        (false, false) => PrimeCase::SS,
        (true, false) => PrimeCase::V,
        (false, true) => PrimeCase::R,
        (true, true) => PrimeCase::VR,
    })
}

/// Named generators of the predicted radical inside `F_p{I, A, J - I - A}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RadicalGenerator {
    /// The all-ones matrix `J = I + A1 + A2`.
    AllOnesJ,
    /// `B = (A - kI)(A - rI)`.
    QuadraticB,
}

impl RadicalGenerator {
    /// Integer coordinates in the basis `(I, A1, A2)`, using `A1² = kI + λA1 + μA2`.
    pub fn coordinates(&self, sp: &PgSpectrum) -> [i64; 3] {
        match self {
            RadicalGenerator::AllOnesJ => [1, 1, 1],
            RadicalGenerator::QuadraticB => {
                let (k, r) = (sp.k, sp.r);
                [k + k * r, sp.lambda - k - r, sp.mu]
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolicRadical {
    pub case: PrimeCase,
    pub dim: usize,
    pub generators: Vec<RadicalGenerator>,
}

/// Radical of `F_p Y` predicted from the prime case alone.
pub fn symbolic_radical(params: &PgParams, p: PrimeModulus) -> Result<SymbolicRadical, PgError> {
    let case = classify_prime(params, p)?;
    let generators = match case {
        PrimeCase::SS => vec![],
        PrimeCase::V => vec![RadicalGenerator::AllOnesJ],
        PrimeCase::R => vec![RadicalGenerator::QuadraticB],
        PrimeCase::VR => vec![RadicalGenerator::AllOnesJ, RadicalGenerator::QuadraticB],
    };
    Ok(SymbolicRadical {
        case,
        dim: generators.len(),
        generators,
    })
}

/// Predicted rank of the point-graph adjacency matrix over GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "rank")]
pub enum PrankResult {
    /// No eigenvalue vanishes mod p: rank `v`.
    Full(i64),
    /// `k ≡ 0`: rank `v - 1`.
    DropOne(i64),
    /// `r ≡ 0`: rank `v - f`.
    DropF(i64),
    /// `s' ≡ 0`: rank `v - g`.
    DropG(i64),
    /// Two eigenvalues coincide mod p and one of them vanishes.
    ExceptionalCollision,
    /// Two eigenvalues coincide mod p and none vanishes.
    ExceptionalTypeB,
}

impl PrankResult {
    pub fn predicted_rank(&self) -> Option<i64> {
        match *self {
            PrankResult::Full(r) | PrankResult::DropOne(r) | PrankResult::DropF(r) | PrankResult::DropG(r) => Some(r),
            PrankResult::ExceptionalCollision | PrankResult::ExceptionalTypeB => None,
        }
    }

    pub fn is_exceptional(&self) -> bool {
        self.predicted_rank().is_none()
    }
}

pub fn generic_prank(params: &PgParams, p: PrimeModulus) -> Result<PrankResult, PgError> {
    let sp = pg_spectrum(params)?;
    let (k, r, sprime) = (sp.k, sp.r, sp.sprime);
    let div = |x: i64| p.divides(x as i128);
    let collision = div(k - r) || div(k - sprime) || div(r - sprime);
    let vanishing = [div(k), div(r), div(sprime)];
    if collision {
        return Ok(if vanishing.iter().any(|&z| z) {
            PrankResult::ExceptionalCollision
        } else {
            PrankResult::ExceptionalTypeB
        });
    }
    Ok(match vanishing {
        [true, _, _] => PrankResult::DropOne(sp.v - 1),
        [_, true, _] => PrankResult::DropF(sp.v - sp.f),
        [_, _, true] => PrankResult::DropG(sp.v - sp.g),
        _ => PrankResult::Full(sp.v),
    })
}
