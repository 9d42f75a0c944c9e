use super::Formula;

// Binding strength: higher binds tighter.
const ARROW: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const ATOMIC: u8 = 4;

fn level(f: &Formula) -> u8 {
    match f {
        Formula::Imp(..) | Formula::Coimp(..) => ARROW,
        Formula::Or(..) => OR,
        Formula::And(..) => AND,
        _ => ATOMIC,
    }
}

struct Tokens {
    bottom: &'static str,
    top: &'static str,
    and: &'static str,
    or: &'static str,
    imp: &'static str,
    coimp: &'static str,
}

const ASCII: Tokens = Tokens { bottom: "F", top: "T", and: " /\\ ", or: " \\/ ", imp: " -> ", coimp: " -< " };

const LATEX: Tokens = Tokens {
    bottom: "\\bot",
    top: "\\top",
    and: " \\wedge ",
    or: " \\vee ",
    imp: " \\rightarrow ",
    coimp: " \\Yleft ",
};

/// Prints a formula with the fewest parentheses that still reparse to the
/// same tree.
pub fn format_formula(f: &Formula) -> String {
    let mut out = String::new();
    write(f, &mut out, &ASCII);
    out
}

/// The same layout with LaTeX symbols (`\Yleft` for co-implication).
pub fn format_formula_latex(f: &Formula) -> String {
    let mut out = String::new();
    write(f, &mut out, &LATEX);
    out
}

fn write_at(f: &Formula, min_level: u8, out: &mut String, t: &Tokens) {
    if level(f) < min_level {
        out.push('(');
        write(f, out, t);
        out.push(')');
    } else {
        write(f, out, t);
    }
}

fn write(f: &Formula, out: &mut String, t: &Tokens) {
    match f {
        Formula::Atom(name) => out.push_str(name),
        Formula::Bottom => out.push_str(t.bottom),
        Formula::Top => out.push_str(t.top),
        Formula::And(a, b) => {
            write_at(a, AND, out, t);
            out.push_str(t.and);
            write_at(b, ATOMIC, out, t);
        }
        Formula::Or(a, b) => {
            write_at(a, OR, out, t);
            out.push_str(t.or);
            write_at(b, AND, out, t);
        }
        Formula::Imp(a, b) | Formula::Coimp(a, b) => {
            let same = std::mem::discriminant(f) == std::mem::discriminant(b.as_ref());
            write_at(a, OR, out, t);
            out.push_str(if matches!(f, Formula::Imp(..)) { t.imp } else { t.coimp });
            write_at(b, if same { ARROW } else { OR }, out, t);
        }
    }
}
