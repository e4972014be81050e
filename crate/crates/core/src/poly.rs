//! Dense univariate polynomials over [`Rational`].
//!
//! Each polynomial carries a variable tag so that an operator polynomial in
//! d/dx cannot be silently mixed with a polynomial in x. Mixing tags in
//! arithmetic is a programming error and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

/// Which formal variable a polynomial lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Var {
    /// The polynomial argument x.
    X,
    /// The generating-function variable t.
    T,
    /// The derivative operator d/dx.
    Dx,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::T => "t",
            Var::Dx => "dx",
        }
    }
}

/// Polynomial with ascending coefficients and no trailing zeros.
/// The zero polynomial stores no coefficients and reports degree 0.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    var: Var,
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(var: Var, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        Poly { var, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        Poly::constant(var, Rational::one())
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Poly::new(var, vec![c])
    }

    /// c·v^k.
    pub fn monomial(var: Var, c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(var, coeffs)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of v^k; zero beyond the degree.
    pub fn coefficient(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Same coefficients read in another variable. Used to reinterpret a
    /// Padé approximant in t as an operator polynomial in d/dx.
    pub fn retag(&self, var: Var) -> Poly {
        Poly { var, coeffs: self.coeffs.clone() }
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| Rational::int(k as i64) * c)
            .collect();
        Poly::new(self.var, coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.var);
        }
        Poly { var: self.var, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Substitutes v := scale·w^power, returning a polynomial in the same
    /// tag: coefficient k lands on w^(k·power) scaled by scale^k.
    pub fn substitute_power(&self, scale: &Rational, power: usize) -> Poly {
        assert!(power >= 1, "substitution power must be at least 1");
        if self.is_zero() {
            return Poly::zero(self.var);
        }
        let mut coeffs = vec![Rational::zero(); self.degree() * power + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * power] = c * scale.pow(k);
        }
        Poly::new(self.var, coeffs)
    }
}

fn assert_same_var(a: &Poly, b: &Poly, what: &str) {
    assert!(
        a.var == b.var,
        "cannot {what} polynomials in different variables ({} vs {})",
        a.var.symbol(),
        b.var.symbol()
    );
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_same_var(self, rhs, "add");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coefficient(k) + rhs.coefficient(k)).collect();
        Poly::new(self.var, coeffs)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_same_var(self, rhs, "subtract");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coefficient(k) - rhs.coefficient(k)).collect();
        Poly::new(self.var, coeffs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_same_var(self, rhs, "multiply");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.var);
        }
        let mut coeffs = vec![Rational::zero(); self.degree() + rhs.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::new(self.var, coeffs)
    }
}

macro_rules! forward_poly_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $imp<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { var: self.var, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    /// Ascending powers: `1 - 2*x + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let v = self.var.symbol();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{v}")?,
                (1, false) => write!(f, "{mag}*{v}")?,
                (_, true) => write!(f, "{v}^{k}")?,
                (_, false) => write!(f, "{mag}*{v}^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn p(coeffs: &[&str]) -> Poly {
        Poly::new(Var::X, coeffs.iter().map(|s| q(s)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let a = p(&["1", "2", "0", "0"]);
        assert_eq!(a.degree(), 1);
        assert_eq!(a.coeffs().len(), 2);
        assert!(p(&["0", "0"]).is_zero());
    }

    #[test]
    fn derivative_of_family_member() {
        // (x^2 + 2x + 2)' = 2x + 2
        let a = p(&["2", "2", "1"]);
        assert_eq!(a.derivative(), p(&["2", "2"]));
        assert!(p(&["5"]).derivative().is_zero());
    }

    #[test]
    fn product_and_difference() {
        let a = p(&["1", "1"]); // 1 + x
        let b = p(&["1", "-1"]); // 1 - x
        assert_eq!(&a * &b, p(&["1", "0", "-1"]));
        assert_eq!(&a - &a, Poly::zero(Var::X));
    }

    #[test]
    fn eval_is_horner() {
        // x^3 - 3x at 2 -> 2
        let a = p(&["0", "-3", "0", "1"]);
        assert_eq!(a.eval(&q("2")), q("2"));
        assert_eq!(Poly::zero(Var::X).eval(&q("7")), q("0"));
    }

    #[test]
    fn substitute_power_doubles_degrees() {
        // 1 - u/2 with u := t^2/2 gives 1 - t^2/4
        let a = Poly::new(Var::T, vec![q("1"), q("-1/2")]);
        let b = a.substitute_power(&q("1/2"), 2);
        assert_eq!(b, Poly::new(Var::T, vec![q("1"), q("0"), q("-1/4")]));
    }

    #[test]
    #[should_panic(expected = "different variables")]
    fn mixed_tags_panic() {
        let _ = Poly::one(Var::X) + Poly::one(Var::T);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&["1", "-2", "1"]).to_string(), "1 - 2*x + x^2");
        assert_eq!(p(&["-1/2", "0", "1"]).to_string(), "-1/2 + x^2");
        assert_eq!(Poly::zero(Var::Dx).to_string(), "0");
        assert_eq!(Poly::monomial(Var::Dx, q("1"), 2).to_string(), "dx^2");
    }
}
