//! The `expand`, `apply`, `inner` and `constants` commands. Each returns the
//! JSON document to print.

use clap::ValueEnum;
use kgroth::operators::{
    e_functional, e_perp, g_functional, g_perp, h_functional, h_perp, op_i, op_i_inv,
};
use kgroth::pieri::{tilde_c, tilde_d};
use kgroth::rpp::{c_coeff, d_coeff, g_to_schur, schur_to_g};
use kgroth::symfunc::lr_coeff;
use kgroth::{CoeffPoly, LinComb, Partition, SymFunc};
use serde_json::{json, Value};

use crate::expr::{parse, Expr, Value as ExprValue};
use crate::{json, CliError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    /// Schur functions.
    #[value(name = "s")]
    Schur,
    /// Dual stable Grothendieck functions.
    #[value(name = "g")]
    G,
    /// Stable Grothendieck functions (truncated).
    #[value(name = "G")]
    BigG,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Operator {
    #[value(name = "I")]
    I,
    #[value(name = "Iinv")]
    IInv,
    #[value(name = "Hperp")]
    HPerp,
    #[value(name = "Eperp")]
    EPerp,
    #[value(name = "Gperp")]
    GPerp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    #[value(name = "H")]
    H,
    #[value(name = "E")]
    E,
    #[value(name = "G")]
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstantKind {
    /// Littlewood-Richardson coefficient of `s_λ` in `s_μ s_ν`.
    Lr,
    /// Coefficient of `g_ν` in `g_{λ/μ}`.
    C,
    /// Coefficient of `g_λ` in `g_μ g_ν`.
    D,
    /// Coefficient of `g_ν` in `I(g_{λ/μ})`.
    CTilde,
    /// Coefficient of `g_λ` in `I(g_μ) I(g_ν)`.
    DTilde,
}

fn polynomial(e: &Expr, what: &str) -> Result<SymFunc, CliError> {
    if e.has_big_g() {
        return Err(CliError::Usage(format!(
            "{what} takes polynomial expressions without G atoms"
        )));
    }
    e.eval_poly()
}

pub fn parse_t(text: &str) -> Result<CoeffPoly, CliError> {
    text.parse::<CoeffPoly>()
        .map_err(|e| CliError::Parse(format!("bad value for t: {e}")))
}

fn to_basis(f: &SymFunc, basis: Basis, cap: Option<usize>) -> Result<Value, CliError> {
    Ok(match basis {
        Basis::Schur => json::expansion("s", f.terms(), cap),
        Basis::G => json::expansion("g", &schur_to_g(f), None),
        Basis::BigG => {
            let cap = cap.unwrap_or(f.degree());
            let series = kgroth::TruncSeries::from_symfunc(f, cap);
            json::expansion("G", &g_coefficients(&series)?, Some(cap))
        }
    })
}

/// Coefficients of `G_λ`, `|λ| ≤ cap`: the pairings `(F, g_λ)`.
fn g_coefficients(f: &kgroth::TruncSeries) -> Result<LinComb<Partition>, CliError> {
    let mut out = LinComb::zero();
    for la in kgroth::partition::partitions_up_to(f.cap()) {
        let c = f.pair(&g_to_schur(&la))?;
        out.add_term(la, &c);
    }
    Ok(out)
}

/// `expand --to BASIS [--cap N] EXPR`.
pub fn expand(text: &str, to: Basis, cap: Option<usize>) -> Result<Value, CliError> {
    let e = parse(text)?;
    match e.eval(cap)? {
        ExprValue::Poly(f) => to_basis(&f, to, None),
        ExprValue::Series(s) => match to {
            Basis::Schur => Ok(json::expansion("s", s.terms(), Some(s.cap()))),
            Basis::BigG => Ok(json::expansion("G", &g_coefficients(&s)?, Some(s.cap()))),
            Basis::G => Err(CliError::Usage(
                "truncated series have no finite g expansion; use --to s or --to G".into(),
            )),
        },
    }
}

/// `apply --op OP [--t T] [--mu P] [--to BASIS] EXPR`.
pub fn apply(
    text: &str,
    op: Operator,
    t: Option<&str>,
    mu: Option<&str>,
    to: Option<Basis>,
) -> Result<Value, CliError> {
    let e = parse(text)?;
    let f = polynomial(&e, "apply")?;
    let t = parse_t(t.unwrap_or("t"))?;
    let image = match op {
        Operator::I => op_i(&f),
        Operator::IInv => op_i_inv(&f),
        Operator::HPerp => h_perp(&t, &f),
        Operator::EPerp => e_perp(&t, &f),
        Operator::GPerp => {
            let mu = mu.ok_or_else(|| CliError::Usage("Gperp needs --mu".into()))?;
            g_perp(&mu.parse()?, &f)
        }
    };
    let to = to.unwrap_or(if e.only_g_atoms() {
        Basis::G
    } else {
        Basis::Schur
    });
    if to == Basis::BigG {
        return Err(CliError::Usage("apply supports --to s or --to g".into()));
    }
    to_basis(&image, to, None)
}

/// `inner --series H|E|G [--t T] [--lambda P] EXPR`: the pairing `(F, f)`.
pub fn inner(
    text: &str,
    series: SeriesName,
    t: Option<&str>,
    lambda: Option<&str>,
) -> Result<Value, CliError> {
    let e = parse(text)?;
    let f = polynomial(&e, "inner")?;
    let t = parse_t(t.unwrap_or("t"))?;
    let cap = f.degree();
    let functional = match series {
        SeriesName::H => h_functional(&t, cap),
        SeriesName::E => e_functional(&t, cap),
        SeriesName::G => {
            let la: Partition = lambda
                .ok_or_else(|| CliError::Usage("--series G needs --lambda".into()))?
                .parse()?;
            g_functional(&la, cap.max(la.size()))?
        }
    };
    Ok(json!({ "value": json::coeff(&functional.eval(&f)?) }))
}

/// `constants --kind K --lambda P --mu P --nu P`.
pub fn constants(kind: ConstantKind, la: &str, mu: &str, nu: &str) -> Result<Value, CliError> {
    let (la, mu, nu): (Partition, Partition, Partition) = (la.parse()?, mu.parse()?, nu.parse()?);
    let (name, value) = match kind {
        ConstantKind::Lr => ("lr", lr_coeff(&la, &mu, &nu)),
        ConstantKind::C => ("c", c_coeff(&la, &mu, &nu)),
        ConstantKind::D => ("d", d_coeff(&la, &mu, &nu)),
        ConstantKind::CTilde => ("c-tilde", tilde_c(&la, &mu, &nu)),
        ConstantKind::DTilde => ("d-tilde", tilde_d(&la, &mu, &nu)),
    };
    Ok(json!({
        "kind": name,
        "lambda": json::partition(&la),
        "mu": json::partition(&mu),
        "nu": json::partition(&nu),
        "value": value,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(v: Result<Value, CliError>) -> String {
        json::line(&v.unwrap())
    }

    #[test]
    fn expand_examples() {
        assert_eq!(
            run(expand("h2", Basis::Schur, None)),
            r#"{"basis":"s","terms":[{"coeff":"1","partition":[2]}]}"#
        );
        assert_eq!(
            run(expand("g[1,1]", Basis::Schur, None)),
            r#"{"basis":"s","terms":[{"coeff":"1","partition":[1]},{"coeff":"1","partition":[1,1]}]}"#
        );
        assert_eq!(
            run(expand("G[1]", Basis::Schur, Some(3))),
            r#"{"basis":"s","cap":3,"terms":[{"coeff":"1","partition":[1]},{"coeff":"-1","partition":[1,1]},{"coeff":"1","partition":[1,1,1]}]}"#
        );
        assert_eq!(
            run(expand("1-e1+e2", Basis::BigG, Some(2))),
            r#"{"basis":"G","cap":2,"terms":[{"coeff":"1","partition":[]},{"coeff":"-1","partition":[1]}]}"#
        );
        assert!(matches!(
            expand("G[1]", Basis::G, None),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            expand("s[1", Basis::G, None),
            Err(CliError::Parse(_))
        ));
    }

    #[test]
    fn apply_examples() {
        assert_eq!(
            run(apply("g[1]", Operator::IInv, None, None, None)),
            r#"{"basis":"g","terms":[{"coeff":"-1","partition":[]},{"coeff":"1","partition":[1]}]}"#
        );
        assert_eq!(
            run(apply("s[2,1]", Operator::HPerp, Some("0"), None, None)),
            r#"{"basis":"s","terms":[{"coeff":"1","partition":[2,1]}]}"#
        );
        assert_eq!(
            run(apply("g[2,1]", Operator::GPerp, None, Some("[1]"), None)),
            run(expand("g[2,1]/[1]", Basis::G, None))
        );
        assert!(apply("g[1]", Operator::GPerp, None, None, None).is_err());
        assert!(apply("G[1]", Operator::I, None, None, None).is_err());
    }

    #[test]
    fn inner_examples() {
        assert_eq!(
            run(inner("g[3,1]", SeriesName::H, Some("t"), None)),
            r#"{"value":"t^3"}"#
        );
        assert_eq!(
            run(inner("g[]", SeriesName::E, Some("-1"), None)),
            r#"{"value":"1"}"#
        );
        assert_eq!(
            run(inner("g[1]", SeriesName::G, None, Some("[1]"))),
            r#"{"value":"1"}"#
        );
        assert!(inner("g[1]", SeriesName::G, None, None).is_err());
    }

    #[test]
    fn constants_examples() {
        let v = constants(ConstantKind::D, "[1]", "[1]", "[1]").unwrap();
        assert_eq!(v["value"], json!(-1));
        let v = constants(ConstantKind::C, "[3,2,1]", "[1]", "[3,1]").unwrap();
        assert_eq!(v["value"], json!(-1));
        let v = constants(ConstantKind::Lr, "[2,1]", "[1]", "[1,1]").unwrap();
        assert_eq!(v["value"], json!(1));
    }
}
