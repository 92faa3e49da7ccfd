//! Evaluation of parsed expressions.
//!
//! Arithmetic happens in the field of rational functions, so intermediate
//! values such as `1/x` are allowed. Operands of `obprod`/`hprod` and the
//! final value must be power series: after cancellation their denominator
//! may not vanish at 0.

use binconv_core::convolve::{self, Method, ProductKind};
use binconv_core::rational::from_bigint;
use binconv_core::{seqlib, Error, Poly, RatFun, RatFunField, Rational, Result};

use crate::expr::{BinOp, Expr};

pub fn eval(e: &Expr, method: Method) -> Result<RatFun> {
    eval_field(e, method)?.to_ratfun()
}

fn eval_field(e: &Expr, method: Method) -> Result<RatFunField> {
    Ok(match e {
        Expr::Int(n) => RatFunField::constant(from_bigint(n.clone())),
        Expr::Var => RatFunField::from_poly(Poly::x()),
        Expr::Named { name, args } => {
            let params = args.iter().map(|a| constant(a, method)).collect::<Result<Vec<_>>>()?;
            RatFunField::from(&seqlib::named(name, &params)?.gf)
        }
        Expr::Neg(a) => eval_field(a, method)?.neg(),
        Expr::Pow(b, k) => eval_field(b, method)?.pow(*k)?,
        Expr::Bin(op, l, r) => {
            let (l, r) = (eval_field(l, method)?, eval_field(r, method)?);
            match op {
                BinOp::Add => l.add(&r),
                BinOp::Sub => l.sub(&r),
                BinOp::Mul => l.mul(&r),
                BinOp::Div => l.div(&r)?,
                BinOp::BProd | BinOp::HProd => {
                    let kind = if *op == BinOp::BProd { ProductKind::Binomial } else { ProductKind::Hadamard };
                    let p = convolve::product(kind, &l.to_ratfun()?, &r.to_ratfun()?, method)?;
                    RatFunField::from(&p)
                }
            }
        }
    })
}

fn constant(e: &Expr, method: Method) -> Result<Rational> {
    let v = eval_field(e, method)?.reduced();
    if v.num().degree().unwrap_or(0) > 0 || v.den().degree().unwrap_or(0) > 0 {
        return Err(Error::InvalidInput(format!("sequence parameter `{e}` is not a constant")));
    }
    Ok(v.num().coeff(0) / v.den().coeff(0))
}
