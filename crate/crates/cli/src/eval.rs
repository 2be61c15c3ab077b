//! Evaluation of parsed expressions into truncated series over a chosen
//! coefficient ring. Domain failures from the series engine are annotated
//! with the source text of the subexpression that raised them.

use crate::ast::{CallName, Expr};
use fps_core::error::{Error, Result};
use fps_core::fps::{elementary, pow_c, ElementaryKind, Series};
use fps_core::laurent::lagrange_buermann;
use fps_core::{GaussianRing, ModRing, RationalRing, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// The coefficient rings the command line can select.
#[derive(Debug, Clone)]
pub enum RingChoice {
    Rational,
    Gaussian,
    Mod(BigInt),
}

impl RingChoice {
    pub fn parse(tag: &str) -> Result<Self> {
        match tag {
            "rational" => Ok(RingChoice::Rational),
            "gaussian" => Ok(RingChoice::Gaussian),
            _ => match tag.strip_prefix("mod:") {
                Some(m) => {
                    let modulus = m.parse::<BigInt>().map_err(|_| {
                        Error::Domain(format!("invalid modulus in ring tag {tag:?}"))
                    })?;
                    if modulus < BigInt::from(2) {
                        return Err(Error::Domain("modulus must be at least 2".into()));
                    }
                    Ok(RingChoice::Mod(modulus))
                }
                None => Err(Error::Domain(format!(
                    "unknown ring {tag:?}; use rational, gaussian or mod:M"
                ))),
            },
        }
    }
}

fn annotate(err: Error, expr: &Expr) -> Error {
    match err {
        Error::Parse { .. } => err,
        other => Error::Domain(format!("in `{}`: {other}", expr.render())),
    }
}

/// Evaluates `expr` to a series known modulo `X^order`.
pub fn eval<R: Ring>(ring: &R, expr: &Expr, order: usize) -> Result<Series<R>> {
    let order = order.max(1);
    let result = match expr {
        Expr::Number(q) => {
            let c = ring.from_rational(q)?;
            Ok(Series::constant(ring.clone(), &c, order))
        }
        Expr::Var => Ok(Series::x(ring.clone(), order)),
        Expr::Neg(e) => Ok(eval(ring, e, order)?.neg()),
        Expr::Add(a, b) => eval(ring, a, order)?.add(&eval(ring, b, order)?),
        Expr::Sub(a, b) => eval(ring, a, order)?.sub(&eval(ring, b, order)?),
        Expr::Mul(a, b) => eval(ring, a, order)?.mul(&eval(ring, b, order)?),
        Expr::Div(a, b) => eval(ring, a, order)?.div(&eval(ring, b, order)?),
        Expr::Pow(base, exponent) => {
            let base = eval(ring, base, order)?;
            if exponent.denom().is_one() {
                let k = exponent.numer();
                let abs: usize = k.abs().try_into().map_err(|_| {
                    Error::Domain(format!("exponent {k} is out of range"))
                })?;
                let powered = if k.is_negative() {
                    base.inverse()?.pow_usize(abs)?
                } else {
                    base.pow_usize(abs)?
                };
                Ok(powered)
            } else {
                let c = ring.from_rational(exponent)?;
                pow_c(&base, &c)
            }
        }
        Expr::Call(name, arg) => {
            let arg = eval(ring, arg, order)?;
            match name {
                CallName::Exp => elementary(ElementaryKind::Exp, &arg),
                CallName::Log1p => elementary(ElementaryKind::Log1p, &arg),
                CallName::Sin => elementary(ElementaryKind::Sin, &arg),
                CallName::Cos => elementary(ElementaryKind::Cos, &arg),
                CallName::Tan => elementary(ElementaryKind::Tan, &arg),
                CallName::Sinh => elementary(ElementaryKind::Sinh, &arg),
                CallName::Arcsin => elementary(ElementaryKind::Arcsin, &arg),
                CallName::Arctan => elementary(ElementaryKind::Arctan, &arg),
                CallName::Sqrt => {
                    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
                    let c = ring.from_rational(&half)?;
                    pow_c(&arg, &c)
                }
                CallName::Inv => arg.inverse(),
                CallName::Rev => arg.reverse(),
                CallName::D => arg.derivative(),
            }
        }
        Expr::Subs(outer, inner) => {
            eval(ring, outer, order)?.compose(&eval(ring, inner, order)?)
        }
    };
    result.map_err(|e| annotate(e, expr))
}

/// The `reverse` subcommand's core: evaluates the expression and reverses it
/// through both available methods, insisting that they agree.
pub fn reverse_two_ways<R: Ring>(
    ring: &R,
    expr: &Expr,
    order: usize,
) -> Result<(Series<R>, Series<R>)> {
    let series = eval(ring, expr, order + 1)?;
    let via_recursion = series.reverse()?;
    let via_residues = lagrange_buermann(&series, order)?;
    let n = via_recursion
        .precision()
        .min(via_residues.precision());
    if via_recursion.truncate(n)? != via_residues.truncate(n)? {
        return Err(Error::Domain(
            "reversal methods disagree; this is a bug".into(),
        ));
    }
    Ok((via_recursion, via_residues))
}

/// Ring-dispatched evaluation used by the command line, rendered to JSON or
/// canonical text.
pub fn eval_rendered(choice: &RingChoice, expr: &Expr, order: usize, json: bool) -> Result<String> {
    match choice {
        RingChoice::Rational => {
            let s = eval(&RationalRing, expr, order)?;
            Ok(if json { s.to_json().to_string() } else { s.render() })
        }
        RingChoice::Gaussian => {
            let s = eval(&GaussianRing, expr, order)?;
            Ok(if json { s.to_json().to_string() } else { s.render() })
        }
        RingChoice::Mod(m) => {
            let ring = ModRing::new(m.clone())?;
            let s = eval(&ring, expr, order)?;
            Ok(if json { s.to_json().to_string() } else { s.render() })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn exp_times_exp_neg_is_one() {
        let ast = parse("exp(X)*exp(-X)").unwrap();
        let s = eval(&RationalRing, &ast, 20).unwrap();
        assert_eq!(s, Series::one(RationalRing, s.precision()));
        assert!(s.precision() >= 20);
    }

    #[test]
    fn reverse_moebius() {
        let ast = parse("rev(X/(1-X))").unwrap();
        let s = eval(&RationalRing, &ast, 8).unwrap();
        for k in 1..s.precision() {
            let expect = if k % 2 == 1 { q(1, 1) } else { q(-1, 1) };
            assert_eq!(*s.coeff(k), expect, "X^{k}");
        }
    }

    #[test]
    fn substitution_spreads_geometric() {
        let ast = parse("subs(1/(1-X), X^2)").unwrap();
        let s = eval(&RationalRing, &ast, 9).unwrap();
        for k in 0..s.precision() {
            let expect = if k % 2 == 0 { q(1, 1) } else { q(0, 1) };
            assert_eq!(*s.coeff(k), expect, "X^{k}");
        }
    }

    #[test]
    fn division_by_zero_is_a_domain_error() {
        let ast = parse("1/0").unwrap();
        let err = eval(&RationalRing, &ast, 5).unwrap_err();
        assert!(matches!(err, Error::Domain(..)));
        assert!(err.to_string().contains("division") || err.to_string().contains("1/0") || err.to_string().contains("zero"));
    }

    #[test]
    fn mod_ring_arithmetic_works() {
        let ast = parse("inv(1-X)").unwrap();
        let ring = ModRing::from_u64(5).unwrap();
        let s = eval(&ring, &ast, 6).unwrap();
        for k in 0..s.precision() {
            assert_eq!(*s.coeff(k), BigInt::from(1), "X^{k}");
        }
    }

    #[test]
    fn mod_ring_rejects_transcendentals() {
        let ast = parse("exp(X)").unwrap();
        let ring = ModRing::from_u64(5).unwrap();
        let err = eval(&ring, &ast, 6).unwrap_err();
        assert!(err.to_string().contains("characteristic"), "{err}");
    }

    #[test]
    fn gaussian_ring_evaluates() {
        let ast = parse("cos(X)*cos(X) + sin(X)*sin(X)").unwrap();
        let s = eval(&GaussianRing, &ast, 16).unwrap();
        assert_eq!(s, Series::one(GaussianRing, s.precision()));
    }

    #[test]
    fn fractional_power_squares_back() {
        let ast = parse("(1+X)^1/2 * (1+X)^1/2").unwrap();
        let s = eval(&RationalRing, &ast, 12).unwrap();
        assert_eq!(*s.coeff(0), q(1, 1));
        assert_eq!(*s.coeff(1), q(1, 1));
        for k in 2..s.precision() {
            assert_eq!(*s.coeff(k), q(0, 1), "X^{k}");
        }
    }

    #[test]
    fn negative_integer_power() {
        let ast = parse("(1-X)^-1").unwrap();
        let s = eval(&RationalRing, &ast, 10).unwrap();
        for k in 0..s.precision() {
            assert_eq!(*s.coeff(k), q(1, 1), "X^{k}");
        }
    }

    #[test]
    fn reverse_two_ways_agree() {
        let ast = parse("X - X^3").unwrap();
        let (a, b) = reverse_two_ways(&RationalRing, &ast, 12).unwrap();
        let n = a.precision().min(b.precision());
        assert_eq!(a.truncate(n).unwrap(), b.truncate(n).unwrap());
    }

    #[test]
    fn errors_point_at_subexpressions() {
        let ast = parse("1 + log1p(1+X)").unwrap();
        let err = eval(&RationalRing, &ast, 6).unwrap_err();
        assert!(err.to_string().contains("log1p"), "{err}");
    }

    #[test]
    fn determinism_across_threads() {
        let src = "rev(X - X^2) + exp(X)*exp(-X)";
        let baseline = eval(&RationalRing, &parse(src).unwrap(), 14).unwrap();
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..4)
                .map(|_| {
                    scope.spawn(|| eval(&RationalRing, &parse(src).unwrap(), 14).unwrap())
                })
                .collect();
            for h in handles {
                assert_eq!(h.join().unwrap(), baseline);
            }
        });
    }
}
