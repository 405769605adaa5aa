//! Process parameters and the scalar maps that drive everything else.
//!
//! The observed process is `Z_k = X_k xor E_k`, where `X` is a stationary
//! two-state Markov chain and `E` is i.i.d. Bernoulli(eps) channel noise.
//! With `x` the current belief `P(X_n = 0 | Z_1..Z_n)`:
//!
//! ```text
//! g0(x) = a(1-2eps)x + pi10(1-eps) + (1-pi10)eps      P(next symbol = 0)
//! g1(x) = 1 - g0(x)
//! f0(x) = (1-eps)(a x + pi10) / g0(x)                belief after seeing 0
//! f1(x) =     eps(a x + pi10) / g1(x)                belief after seeing 1
//! ```
//!
//! where `a = 1 - pi01 - pi10` is the slope of the one-step prediction
//! `x -> a x + pi10`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Parameters of a binary hidden Markov process.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModelParams {
    pi01: f64,
    pi10: f64,
    eps: f64,
    p0: f64,
    strict_regime: bool,
}

/// Uniform derivative bounds over `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContractionInfo {
    /// `sup max(|f0'|, |f1'|)`.
    pub delta: f64,
    /// `sup |d/dx hb(g0(x))|`.
    #[serde(rename = "bigM")]
    pub big_m: f64,
    /// `delta < 1`.
    pub contractive: bool,
}

impl ContractionInfo {
    /// The width envelope `M * delta^n`, or `None` when the maps do not contract.
    pub fn envelope(&self, n: usize) -> Option<f64> {
        self.contractive
            .then(|| self.big_m * self.delta.powi(n as i32))
    }
}

/// Free-function form of [`ModelParams::new`].
pub fn validate(pi01: f64, pi10: f64, eps: f64) -> Result<ModelParams> {
    ModelParams::new(pi01, pi10, eps)
}

impl ModelParams {
    /// Validates the parameter triple and derives the stationary probability.
    ///
    /// Accepts `0 < pi01, pi10 < 1/2` and `0 <= eps <= 1/2`. The narrower
    /// regime `0 < eps < min(pi01, pi10)` is reported by
    /// [`strict_regime`](Self::strict_regime) but not required.
    pub fn new(pi01: f64, pi10: f64, eps: f64) -> Result<Self> {
        let open_half = |field, value: f64| {
            if value > 0.0 && value < 0.5 {
                Ok(())
            } else {
                Err(Error::Parameter {
                    field,
                    value,
                    reason: "must lie in the open interval (0, 1/2)",
                })
            }
        };
        open_half("pi01", pi01)?;
        open_half("pi10", pi10)?;
        if !(0.0..=0.5).contains(&eps) {
            return Err(Error::Parameter {
                field: "eps",
                value: eps,
                reason: "must lie in the closed interval [0, 1/2]",
            });
        }
        Ok(Self {
            pi01,
            pi10,
            eps,
            p0: pi10 / (pi01 + pi10),
            strict_regime: eps > 0.0 && eps < pi01.min(pi10),
        })
    }

    pub fn pi01(&self) -> f64 {
        self.pi01
    }

    pub fn pi10(&self) -> f64 {
        self.pi10
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// Stationary probability `P(X = 0) = pi10 / (pi01 + pi10)`.
    pub fn p0(&self) -> f64 {
        self.p0
    }

    pub fn strict_regime(&self) -> bool {
        self.strict_regime
    }

    /// `a = 1 - pi01 - pi10`, always in `(0, 1)` for accepted parameters.
    pub fn slope(&self) -> f64 {
        1.0 - self.pi01 - self.pi10
    }

    /// One-step prediction `P(X_{n+1} = 0)` given belief `x`.
    #[inline]
    pub fn predict(&self, x: f64) -> f64 {
        x * self.slope() + self.pi10
    }

    #[inline]
    pub fn g0(&self, x: f64) -> f64 {
        let e = self.eps;
        self.slope() * (1.0 - 2.0 * e) * x + self.pi10 * (1.0 - e) + (1.0 - self.pi10) * e
    }

    #[inline]
    pub fn g1(&self, x: f64) -> f64 {
        1.0 - self.g0(x)
    }

    #[inline]
    pub fn f0(&self, x: f64) -> f64 {
        (1.0 - self.eps) * self.predict(x) / self.g0(x)
    }

    #[inline]
    pub fn f1(&self, x: f64) -> f64 {
        self.eps * self.predict(x) / self.g1(x)
    }

    /// Belief update for one observed symbol; any nonzero symbol counts as 1.
    #[inline]
    pub fn update(&self, x: f64, symbol: u8) -> f64 {
        if symbol == 0 {
            self.f0(x)
        } else {
            self.f1(x)
        }
    }

    /// Predictive probability of `symbol` given belief `x`.
    #[inline]
    pub fn emit(&self, x: f64, symbol: u8) -> f64 {
        if symbol == 0 {
            self.g0(x)
        } else {
            self.g1(x)
        }
    }

    pub fn f0_prime(&self, x: f64) -> f64 {
        let g = self.g0(x);
        self.slope() * self.eps * (1.0 - self.eps) / (g * g)
    }

    pub fn f1_prime(&self, x: f64) -> f64 {
        let g = self.g1(x);
        self.slope() * self.eps * (1.0 - self.eps) / (g * g)
    }

    /// Derivative of `hb(g0(x))`.
    pub fn phi_prime(&self, x: f64) -> f64 {
        let g = self.g0(x);
        self.slope() * (1.0 - 2.0 * self.eps) * ((1.0 - g) / g).log2()
    }

    /// Closed-form suprema of the derivatives over `[0, 1]`.
    ///
    /// `f0'` and `f1'` are positive with `g0` increasing and `g1` decreasing,
    /// so both peak where their denominator is smallest: `f0'` at 0, `f1'` at 1.
    /// `|phi'|` is monotone in `|log((1-g)/g)|`, which is largest at whichever
    /// endpoint pushes `g0` furthest from 1/2.
    pub fn contraction(&self) -> ContractionInfo {
        let delta = self.f0_prime(0.0).max(self.f1_prime(1.0));
        let big_m = self.phi_prime(0.0).abs().max(self.phi_prime(1.0).abs());
        ContractionInfo {
            delta,
            big_m,
            contractive: delta < 1.0,
        }
    }
}

/// Free-function form of [`ModelParams::contraction`].
pub fn contraction(params: &ModelParams) -> ContractionInfo {
    params.contraction()
}

/// Binary entropy in bits, with `0 log 0 = 0`.
#[inline]
pub fn hb(x: f64) -> f64 {
    fn term(p: f64) -> f64 {
        if p <= 0.0 {
            0.0
        } else {
            -p * p.log2()
        }
    }
    term(x) + term(1.0 - x)
}
