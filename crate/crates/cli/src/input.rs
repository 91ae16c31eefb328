//! Parsing of the `--cone`, `--gens` and `--family` inputs.

use std::fmt;

use clap::Args;
use toric_nash::{
    fibonacci_gamma, hilbert_basis, one_segment_gamma, two_segment_gamma, Cone, Error, Gens,
    TwoSegmentParams,
};

/// Where a generator set comes from. Exactly one flag must be given.
#[derive(Args, Clone, Debug)]
#[group(required = true, multiple = false)]
pub struct GammaArgs {
    /// Cone spanned by (1,0) and (p,q), as `p/q`; uses its Hilbert basis.
    #[arg(long, value_name = "P/Q")]
    pub cone: Option<String>,
    /// Explicit generators, `x,y;x,y;…`.
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    pub gens: Option<String>,
    /// `fib:L`, `one:K` or `two:K,A,B,M`.
    #[arg(long, value_name = "NAME:PARAMS")]
    pub family: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaSpec {
    Cone(i64, i64),
    Generators(Vec<(i64, i64)>),
    Family(Family),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Fibonacci(i64),
    OneSegment(i64),
    TwoSegments { k: i64, a: i64, b: i64, m: i64 },
}

/// Malformed user input. Maps to exit code 2.
#[derive(Debug)]
pub struct Malformed(pub String);

impl fmt::Display for Malformed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn int(s: &str, what: &str) -> Result<i64, Malformed> {
    s.trim()
        .parse()
        .map_err(|_| Malformed(format!("{what}: `{}` is not an integer", s.trim())))
}

fn ints(s: &str, what: &str) -> Result<Vec<i64>, Malformed> {
    s.split(',').map(|x| int(x, what)).collect()
}

impl GammaArgs {
    pub fn parse(&self) -> Result<GammaSpec, Malformed> {
        if let Some(c) = &self.cone {
            let (p, q) = c
                .split_once('/')
                .ok_or_else(|| Malformed(format!("--cone expects p/q, got `{c}`")))?;
            return Ok(GammaSpec::Cone(int(p, "--cone")?, int(q, "--cone")?));
        }
        if let Some(g) = &self.gens {
            let mut pairs = Vec::new();
            for item in g.split(';').filter(|s| !s.trim().is_empty()) {
                match ints(item, "--gens")?.as_slice() {
                    [x, y] => pairs.push((*x, *y)),
                    _ => return Err(Malformed(format!("--gens: `{item}` is not an x,y pair"))),
                }
            }
            return Ok(GammaSpec::Generators(pairs));
        }
        let f = self.family.as_deref().unwrap_or_default();
        let (name, params) = f
            .split_once(':')
            .ok_or_else(|| Malformed(format!("--family expects name:params, got `{f}`")))?;
        let params = ints(params, "--family")?;
        let family = match (name, params.as_slice()) {
            ("fib", [l]) => Family::Fibonacci(*l),
            ("one", [k]) => Family::OneSegment(*k),
            ("two", [k, a, b, m]) => Family::TwoSegments {
                k: *k,
                a: *a,
                b: *b,
                m: *m,
            },
            _ => {
                return Err(Malformed(format!(
                    "unknown family `{f}`; use fib:L, one:K or two:K,A,B,M"
                )))
            }
        };
        Ok(GammaSpec::Family(family))
    }
}

impl GammaSpec {
    /// Builds the generator set. Apart from overflow, every failure here
    /// is an input problem.
    pub fn generators(&self) -> Result<Gens, Error> {
        match self {
            Self::Cone(p, q) => {
                if !(0 <= *p && p < q) {
                    return Err(Error::InvalidArgument(format!(
                        "--cone needs 0 ≤ p < q, got {p}/{q}"
                    )));
                }
                hilbert_basis(&Cone::from_pq(*p, *q)?)
            }
            Self::Generators(pairs) => Gens::from_pairs(pairs.iter().copied()),
            Self::Family(Family::Fibonacci(l)) => fibonacci_gamma(*l),
            Self::Family(Family::OneSegment(k)) => one_segment_gamma(*k),
            Self::Family(Family::TwoSegments { k, a, b, m }) => {
                two_segment_gamma(&TwoSegmentParams {
                    k: *k,
                    a: *a,
                    b: *b,
                    m: *m,
                })
            }
        }
    }
}
