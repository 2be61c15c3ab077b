//! The expression language: a single indeterminate `X`, exact rational
//! literals, the series toolkit as unary calls, and `subs` for composition.

use num_rational::BigRational;

/// One-argument functions the grammar knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CallName {
    Exp,
    Log1p,
    Sqrt,
    Sin,
    Cos,
    Tan,
    Sinh,
    Arcsin,
    Arctan,
    /// Multiplicative inverse.
    Inv,
    /// Compositional inverse.
    Rev,
    /// Formal derivative.
    D,
}

impl CallName {
    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "exp" => CallName::Exp,
            "log1p" => CallName::Log1p,
            "sqrt" => CallName::Sqrt,
            "sin" => CallName::Sin,
            "cos" => CallName::Cos,
            "tan" => CallName::Tan,
            "sinh" => CallName::Sinh,
            "arcsin" => CallName::Arcsin,
            "arctan" => CallName::Arctan,
            "inv" => CallName::Inv,
            "rev" => CallName::Rev,
            "D" => CallName::D,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            CallName::Exp => "exp",
            CallName::Log1p => "log1p",
            CallName::Sqrt => "sqrt",
            CallName::Sin => "sin",
            CallName::Cos => "cos",
            CallName::Tan => "tan",
            CallName::Sinh => "sinh",
            CallName::Arcsin => "arcsin",
            CallName::Arctan => "arctan",
            CallName::Inv => "inv",
            CallName::Rev => "rev",
            CallName::D => "D",
        }
    }
}

/// Parsed expression tree. `Subs(outer, inner)` is composition `outer(inner)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(BigRational),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// Base raised to an exact rational literal.
    Pow(Box<Expr>, BigRational),
    Call(CallName, Box<Expr>),
    Subs(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Renders back to parseable source text.
    pub fn render(&self) -> String {
        match self {
            Expr::Number(q) => {
                if q.denom() == &num_bigint::BigInt::from(1) {
                    format!("{}", q.numer())
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Expr::Var => "X".to_string(),
            Expr::Neg(e) => format!("-({})", e.render()),
            Expr::Add(a, b) => format!("({}) + ({})", a.render(), b.render()),
            Expr::Sub(a, b) => format!("({}) - ({})", a.render(), b.render()),
            Expr::Mul(a, b) => format!("({}) * ({})", a.render(), b.render()),
            Expr::Div(a, b) => format!("({}) / ({})", a.render(), b.render()),
            Expr::Pow(base, exp) => {
                let e = if exp.denom() == &num_bigint::BigInt::from(1) {
                    format!("{}", exp.numer())
                } else {
                    format!("{}/{}", exp.numer(), exp.denom())
                };
                format!("({})^{}", base.render(), e)
            }
            Expr::Call(name, arg) => format!("{}({})", name.name(), arg.render()),
            Expr::Subs(outer, inner) => {
                format!("subs({}, {})", outer.render(), inner.render())
            }
        }
    }
}
