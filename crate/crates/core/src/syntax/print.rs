use super::Term;

/// Prints in the surface grammar with minimal parentheses.
pub fn print(t: &Term) -> String {
    let mut out = String::new();
    go(t, true, &mut out);
    out
}

// `tail`: nothing follows the term inside its enclosing group, so a λ can
// extend to the right without parentheses.
fn go(t: &Term, tail: bool, out: &mut String) {
    match t {
        Term::Var(x) => out.push_str(x),
        Term::Hole => out.push_str("[]"),
        Term::Abs(x, body) => {
            if !tail {
                out.push('(');
            }
            out.push('\\');
            out.push_str(x);
            out.push('.');
            go(body, true, out);
            if !tail {
                out.push(')');
            }
        }
        Term::App(f, a) => {
            match **f {
                Term::Abs(..) => paren(f, out),
                _ => go(f, false, out),
            }
            out.push(' ');
            match **a {
                Term::App(..) => paren(a, out),
                _ => go(a, tail, out),
            }
        }
        Term::Bang(body) => {
            out.push('!');
            match **body {
                Term::App(..) => paren(body, out),
                _ => go(body, tail, out),
            }
        }
        Term::Op(name, args) => {
            out.push('#');
            out.push_str(name);
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                go(a, true, out);
            }
            out.push(')');
        }
    }
}

fn paren(t: &Term, out: &mut String) {
    out.push('(');
    go(t, true, out);
    out.push(')');
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn roundtrip(s: &str) -> String {
        print(&parse(s).unwrap())
    }

    #[test]
    fn minimal_parentheses() {
        assert_eq!(roundtrip(r"((\x.x) (!x))"), r"(\x.x) !x");
        assert_eq!(roundtrip("(x y) z"), "x y z");
        assert_eq!(roundtrip("x (y z)"), "x (y z)");
        assert_eq!(roundtrip(r"x (\y.y) z"), r"x (\y.y) z");
        assert_eq!(roundtrip(r"x (\y.y)"), r"x \y.y");
        assert_eq!(roundtrip("!(x y)"), "!(x y)");
        assert_eq!(roundtrip(r"(!\x.x) y"), r"!(\x.x) y");
        assert_eq!(roundtrip("#oplus(x y, [])"), "#oplus(x y, [])");
    }

    #[test]
    fn cbv_simulation_term() {
        let s = r"(\x.x) ((\z.!z) !x) !y";
        assert_eq!(roundtrip(s), s);
    }
}
