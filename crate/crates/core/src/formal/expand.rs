use std::fmt;
use std::sync::OnceLock;

use super::scalar::ScalarPoly;
use super::vector::FormalVector;

fn parse_fixed(s: &str) -> FormalVector {
    FormalVector::parse(s).expect("built-in expression parses")
}

/// `xy` for `x = ae + bf + cg`, `y = ue + vf + wg`.
pub fn generic_product() -> FormalVector {
    parse_fixed("auie + avA + awB + buC + bvjf + bwD + cuE + cvF + cwkg")
}

pub fn generic_square_x() -> FormalVector {
    parse_fixed("a^2ie + b^2jf + c^2kg + ab(A+C) + ac(B+E) + bc(D+F)")
}

pub fn generic_square_y() -> FormalVector {
    parse_fixed("u^2ie + v^2jf + w^2kg + uv(A+C) + uw(B+E) + vw(D+F)")
}

/// `(xy)^2`, expanded formally.
pub fn square_of_product() -> FormalVector {
    let xy = generic_product();
    xy.formal_multiply(&xy).expect("singles only")
}

/// `x^2 y^2`, expanded formally.
pub fn product_of_squares() -> FormalVector {
    generic_square_x()
        .formal_multiply(&generic_square_y())
        .expect("singles only")
}

/// `(xy)^2 - x^2 y^2`.
pub fn difference_expansion() -> FormalVector {
    static CACHE: OnceLock<FormalVector> = OnceLock::new();
    CACHE
        .get_or_init(|| &square_of_product() - &product_of_squares())
        .clone()
}

/// Shorthand names for the fifteen quartic coefficients of the
/// parameter-parameter part of the difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GreekName {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Epsilon,
    Zeta,
    Eta,
    Theta,
    Iota,
    Kappa,
    Lambda,
    Mu,
    Nu,
    Xi,
    Pi,
}

const GREEK: [(GreekName, char, &str, &str); 15] = [
    (GreekName::Alpha, 'α', "alpha", "aw(av-bu)"),
    (GreekName::Beta, 'β', "beta", "au(cv-bw)"),
    (GreekName::Gamma, 'γ', "gamma", "av(cv-bw)"),
    (GreekName::Delta, 'δ', "delta", "av(aw-cu)"),
    (GreekName::Epsilon, 'ε', "epsilon", "bv(aw-cu)"),
    (GreekName::Zeta, 'ζ', "zeta", "cv(av-bu)"),
    (GreekName::Eta, 'η', "eta", "aw(bw-cv)"),
    (GreekName::Theta, 'θ', "theta", "bw(aw-cu)"),
    (GreekName::Iota, 'ι', "iota", "cw(av-bu)"),
    (GreekName::Kappa, 'κ', "kappa", "bw(bu-av)"),
    (GreekName::Lambda, 'λ', "lambda", "bu(cu-aw)"),
    (GreekName::Mu, 'μ', "mu", "bu(bw-cv)"),
    (GreekName::Nu, 'ν', "nu", "cu(bu-av)"),
    (GreekName::Xi, 'ξ', "xi", "cv(cu-aw)"),
    (GreekName::Pi, 'π', "pi", "cu(cv-bw)"),
];

impl GreekName {
    pub const ALL: [GreekName; 15] = {
        let mut out = [GreekName::Alpha; 15];
        let mut n = 0;
        while n < 15 {
            out[n] = GREEK[n].0;
            n += 1;
        }
        out
    };

    pub fn symbol(self) -> char {
        GREEK[self as usize].1
    }

    pub fn name(self) -> &'static str {
        GREEK[self as usize].2
    }

    /// The defining expression in `a, b, c, u, v, w`.
    pub fn definition(self) -> &'static str {
        GREEK[self as usize].3
    }

    pub fn from_char(c: char) -> Option<GreekName> {
        GREEK.iter().find(|g| g.1 == c).map(|g| g.0)
    }

    pub fn from_name(s: &str) -> Option<GreekName> {
        GREEK.iter().find(|g| g.2 == s).map(|g| g.0)
    }
}

impl fmt::Display for GreekName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

pub fn greek_poly(name: GreekName) -> ScalarPoly {
    ScalarPoly::parse(name.definition()).expect("built-in definition parses")
}
