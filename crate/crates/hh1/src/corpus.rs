//! Parameterized generators for the test corpus: local algebras of
//! dihedral, semidihedral, and quaternion type, two- and three-simple-module
//! symmetric algebras, quantum complete intersections, radical-square-zero
//! layered quivers, cyclic Nakayama algebras, and a couple of Brauer-style
//! presentations.
//!
//! Generators emit the displayed relation lists together with the socle
//! monomials those lists leave implicit, so every generated presentation is
//! confluent as entered; each generator notes the added consequences.

use crate::algebra::Presentation;
use crate::error::{Error, Result};
use crate::format::parse;
use crate::scalar::Field;

/// One corpus entry: a family with parameters over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    pub field: Field,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// K[x]/(x^n), n >= 2.
    PowerLoop { n: u32 },
    /// Local dihedral: (X^2, Y^2, (XY)^k - (YX)^k), k >= 1.
    DihedralA1 { k: u32 },
    /// Local dihedral: (XY, YX, X^m - Y^n), m >= n >= 2, m + n > 4.
    DihedralXY { m: u32, n: u32 },
    /// Local dihedral, char 2 only: (X^2 - (XY)^k, Y^2 - d(XY)^k,
    /// (XY)^k - (YX)^k, (XY)^k X, (YX)^k Y), k >= 2.
    DihedralA2 { k: u32, d: bool },
    /// Local dihedral, char 2 only: (X^2, XY - YX, XY - Y^2).
    DihedralComm2,
    /// Local semidihedral: ((XY)^k - (YX)^k, (XY)^k X, Y^2,
    /// X^2 - (YX)^(k-1) Y), k >= 2.
    SemidihedralA1 { k: u32 },
    /// Local semidihedral, char 2 only, (c, d) != (0, 0), k >= 2.
    SemidihedralA2 { k: u32, c: bool, d: bool },
    /// Local quaternion: ((XY)^k - (YX)^k, (XY)^k X, Y^2 - (XY)^(k-1) X,
    /// X^2 - (YX)^(k-1) Y), k >= 2.
    QuaternionA1 { k: u32 },
    /// Local quaternion, char 2 only, (c, d) != (0, 0), k >= 2.
    QuaternionA2 { k: u32, c: bool, d: bool },
    /// Two simple modules, dihedral type: k >= s >= 2, c in {0, 1}.
    TwoVertexD2B { k: u32, s: u32, c: bool },
    /// Two simple modules, semidihedral type 1: k >= 1, t >= 2, c in {0, 1}.
    TwoVertexSD2B1 { k: u32, t: u32, c: bool },
    /// Three simple modules, no loops, two opposite triangles, mod J^n.
    ThreeKTriangles { socle: u32 },
    /// Three simple modules on a line with back arrows, mod J^n.
    ThreeALine { socle: u32 },
    /// Three simple modules, a loop at each vertex around a 3-cycle:
    /// s >= t >= u >= 2, k >= 1.
    ThreeR { k: u32, s: u32, t: u32, u: u32 },
    /// Quantum complete intersection: X_j X_i = q_ij X_i X_j, X_i^{n_i}.
    /// `q` lists q_ij for i < j in lexicographic order.
    Qci { exponents: Vec<u32>, q: Vec<i64> },
    /// Layered quiver with m parallel arrows between consecutive vertices,
    /// modulo the square of the radical.
    LayeredKronecker { vertices: u32, arms: u32 },
    /// Cyclic Nakayama algebra with e vertices and paths of length em + 1
    /// set to zero; e >= 2.
    NakayamaCycle { e: u32, m: u32 },
    /// Trivial extension of the Kronecker algebra (8-dimensional).
    TrivExtKronecker,
    /// A loop joined to a 2-cycle with a commutation relation; the
    /// radical-preserving part differs from HH^1 in characteristic 2.
    LoopCycle,
}

impl Family {
    pub fn id(&self) -> &'static str {
        match self {
            Family::PowerLoop { .. } => "kxn",
            Family::DihedralA1 { .. } => "d1a1",
            Family::DihedralXY { .. } => "dih-xy",
            Family::DihedralA2 { .. } => "d1a2",
            Family::DihedralComm2 => "dih-comm2",
            Family::SemidihedralA1 { .. } => "sd1a1",
            Family::SemidihedralA2 { .. } => "sd1a2",
            Family::QuaternionA1 { .. } => "q1a1",
            Family::QuaternionA2 { .. } => "q1a2",
            Family::TwoVertexD2B { .. } => "d2b",
            Family::TwoVertexSD2B1 { .. } => "sd2b1",
            Family::ThreeKTriangles { .. } => "3k",
            Family::ThreeALine { .. } => "3a",
            Family::ThreeR { .. } => "d3r",
            Family::Qci { .. } => "qci",
            Family::LayeredKronecker { .. } => "qnm",
            Family::NakayamaCycle { .. } => "nakayama",
            Family::TrivExtKronecker => "tk",
            Family::LoopCycle => "loop-cycle",
        }
    }

    pub fn params(&self) -> String {
        match self {
            Family::PowerLoop { n } => format!("n={n}"),
            Family::DihedralA1 { k } => format!("k={k}"),
            Family::DihedralXY { m, n } => format!("m={m},n={n}"),
            Family::DihedralA2 { k, d } => format!("k={k},d={}", *d as u8),
            Family::DihedralComm2 => String::new(),
            Family::SemidihedralA1 { k } => format!("k={k}"),
            Family::SemidihedralA2 { k, c, d } => {
                format!("k={k},c={},d={}", *c as u8, *d as u8)
            }
            Family::QuaternionA1 { k } => format!("k={k}"),
            Family::QuaternionA2 { k, c, d } => format!("k={k},c={},d={}", *c as u8, *d as u8),
            Family::TwoVertexD2B { k, s, c } => format!("k={k},s={s},c={}", *c as u8),
            Family::TwoVertexSD2B1 { k, t, c } => format!("k={k},t={t},c={}", *c as u8),
            Family::ThreeKTriangles { socle } => format!("socle={socle}"),
            Family::ThreeALine { socle } => format!("socle={socle}"),
            Family::ThreeR { k, s, t, u } => format!("k={k},s={s},t={t},u={u}"),
            Family::Qci { exponents, q } => format!("n={exponents:?},q={q:?}"),
            Family::LayeredKronecker { vertices, arms } => format!("n={vertices},m={arms}"),
            Family::NakayamaCycle { e, m } => format!("e={e},m={m}"),
            Family::TrivExtKronecker => String::new(),
            Family::LoopCycle => String::new(),
        }
    }
}

impl FamilySpec {
    pub fn new(family: Family, field: Field) -> FamilySpec {
        FamilySpec { family, field }
    }

    pub fn label(&self) -> String {
        let p = self.family.params();
        if p.is_empty() {
            format!("{} over {}", self.family.id(), self.field)
        } else {
            format!("{}[{}] over {}", self.family.id(), p, self.field)
        }
    }
}

fn field_line(field: Field) -> String {
    match field.characteristic() {
        0 => "field Q".to_string(),
        p => format!("field GF {p}"),
    }
}

fn local_two_loops(field: Field, rels: &[String]) -> Result<Presentation> {
    let mut text = format!(
        "{}\nvertex e\narrow X e e\narrow Y e e\n",
        field_line(field)
    );
    for r in rels {
        text.push_str(&format!("rel {r}\n"));
    }
    parse(&text)
}

fn pow(word: &str, k: u32) -> String {
    if k == 1 {
        word.to_string()
    } else {
        format!("({word})^{k}")
    }
}

/// Generate the presentation for a family instance.
pub fn gen(spec: &FamilySpec) -> Result<Presentation> {
    let field = spec.field;
    let ch = field.characteristic();
    match &spec.family {
        Family::PowerLoop { n } => {
            if *n < 2 {
                return Err(Error::BadParameters("kxn needs n >= 2".to_string()));
            }
            parse(&format!(
                "{}\nvertex e\narrow x e e\nrel x^{n}\n",
                field_line(field)
            ))
        }
        Family::DihedralA1 { k } => {
            if *k < 1 {
                return Err(Error::BadParameters("d1a1 needs k >= 1".to_string()));
            }
            local_two_loops(
                field,
                &[
                    "X^2".to_string(),
                    "Y^2".to_string(),
                    format!("{} - {}", pow("X*Y", *k), pow("Y*X", *k)),
                ],
            )
        }
        Family::DihedralXY { m, n } => {
            if !(*m >= *n && *n >= 2 && *m + *n > 4) {
                return Err(Error::BadParameters(
                    "dih-xy needs m >= n >= 2 and m + n > 4".to_string(),
                ));
            }
            // Socle monomials X^{m+1} and Y^{n+1} are consequences of the
            // displayed relations and close the overlap with X^m - Y^n.
            local_two_loops(
                field,
                &[
                    "X*Y".to_string(),
                    "Y*X".to_string(),
                    format!("X^{m} - Y^{n}"),
                    format!("X^{}", m + 1),
                    format!("Y^{}", n + 1),
                ],
            )
        }
        Family::DihedralA2 { k, d } => {
            if *k < 2 {
                return Err(Error::BadParameters("d1a2 needs k >= 2".to_string()));
            }
            if ch != 2 {
                return Err(Error::BadParameters(
                    "d1a2 is a characteristic-2 family".to_string(),
                ));
            }
            // Added socle consequences: X^3, X^2 Y, Y X^2.
            let mut rels = vec![
                format!("X^2 - {}", pow("X*Y", *k)),
                format!("{} - {}", pow("X*Y", *k), pow("Y*X", *k)),
                format!("{}*X", pow("X*Y", *k)),
                format!("{}*Y", pow("Y*X", *k)),
                "X^3".to_string(),
                "X^2*Y".to_string(),
                "Y*X^2".to_string(),
            ];
            if *d {
                rels.insert(1, format!("Y^2 - {}", pow("X*Y", *k)));
            } else {
                rels.insert(1, "Y^2".to_string());
            }
            local_two_loops(field, &rels)
        }
        Family::DihedralComm2 => {
            if ch != 2 {
                return Err(Error::BadParameters(
                    "dih-comm2 is a characteristic-2 family".to_string(),
                ));
            }
            local_two_loops(
                field,
                &[
                    "X^2".to_string(),
                    "X*Y - Y*X".to_string(),
                    "X*Y - Y^2".to_string(),
                ],
            )
        }
        Family::SemidihedralA1 { k } => {
            if *k < 2 {
                return Err(Error::BadParameters("sd1a1 needs k >= 2".to_string()));
            }
            // Added socle consequences: X^2 Y, Y X^2, X^4.
            local_two_loops(
                field,
                &[
                    format!("{} - {}", pow("X*Y", *k), pow("Y*X", *k)),
                    format!("{}*X", pow("X*Y", *k)),
                    "Y^2".to_string(),
                    format!("X^2 - {}*Y", pow("Y*X", *k - 1)),
                    "X^2*Y".to_string(),
                    "Y*X^2".to_string(),
                    "X^4".to_string(),
                ],
            )
        }
        Family::SemidihedralA2 { k, c, d } => {
            if *k < 2 || (!*c && !*d) {
                return Err(Error::BadParameters(
                    "sd1a2 needs k >= 2 and (c, d) != (0, 0)".to_string(),
                ));
            }
            if ch != 2 {
                return Err(Error::BadParameters(
                    "sd1a2 is a characteristic-2 family".to_string(),
                ));
            }
            // Added socle consequences: X^2 Y, Y X^2, X^4.
            let x2 = if *c {
                format!("X^2 - {}*Y - {}", pow("Y*X", *k - 1), pow("X*Y", *k))
            } else {
                format!("X^2 - {}*Y", pow("Y*X", *k - 1))
            };
            let y2 = if *d {
                format!("Y^2 - {}", pow("X*Y", *k))
            } else {
                "Y^2".to_string()
            };
            local_two_loops(
                field,
                &[
                    format!("{} - {}", pow("X*Y", *k), pow("Y*X", *k)),
                    format!("{}*X", pow("X*Y", *k)),
                    y2,
                    x2,
                    "X^2*Y".to_string(),
                    "X*Y^2".to_string(),
                    "Y*X^2".to_string(),
                    "Y^2*X".to_string(),
                    "Y^3".to_string(),
                    "X^4".to_string(),
                ],
            )
        }
        Family::QuaternionA1 { k } => {
            if *k < 2 {
                return Err(Error::BadParameters("q1a1 needs k >= 2".to_string()));
            }
            // Added socle consequences: every mixed word with a squared
            // letter vanishes, the two cubes agree, and X^4 = 0.
            local_two_loops(
                field,
                &[
                    format!("{} - {}", pow("X*Y", *k), pow("Y*X", *k)),
                    format!("{}*X", pow("X*Y", *k)),
                    format!("Y^2 - {}*X", pow("X*Y", *k - 1)),
                    format!("X^2 - {}*Y", pow("Y*X", *k - 1)),
                    "X^2*Y".to_string(),
                    "X*Y^2".to_string(),
                    "Y*X^2".to_string(),
                    "Y^2*X".to_string(),
                    "Y^3 - X^3".to_string(),
                    "X^4".to_string(),
                ],
            )
        }
        Family::QuaternionA2 { k, c, d } => {
            if *k < 2 || (!*c && !*d) {
                return Err(Error::BadParameters(
                    "q1a2 needs k >= 2 and (c, d) != (0, 0)".to_string(),
                ));
            }
            if ch != 2 {
                return Err(Error::BadParameters(
                    "q1a2 is a characteristic-2 family".to_string(),
                ));
            }
            let x2 = if *c {
                format!("X^2 - {}*Y - {}", pow("Y*X", *k - 1), pow("X*Y", *k))
            } else {
                format!("X^2 - {}*Y", pow("Y*X", *k - 1))
            };
            let y2 = if *d {
                format!("Y^2 - {}*X - {}", pow("X*Y", *k - 1), pow("X*Y", *k))
            } else {
                format!("Y^2 - {}*X", pow("X*Y", *k - 1))
            };
            local_two_loops(
                field,
                &[
                    x2,
                    y2,
                    format!("{} - {}", pow("X*Y", *k), pow("Y*X", *k)),
                    format!("{}*X", pow("X*Y", *k)),
                    format!("{}*Y", pow("Y*X", *k)),
                    "X^2*Y".to_string(),
                    "X*Y^2".to_string(),
                    "Y*X^2".to_string(),
                    "Y^2*X".to_string(),
                    "Y^3 - X^3".to_string(),
                    "X^4".to_string(),
                ],
            )
        }
        Family::TwoVertexD2B { k, s, c } => {
            if !(*k >= *s && *s >= 2) {
                return Err(Error::BadParameters(
                    "d2b needs k >= s >= 2 (s = 1 is not an admissible presentation)".to_string(),
                ));
            }
            let mut rels = vec![
                "b*h".to_string(),
                "h*g".to_string(),
                "g*b".to_string(),
                format!("{} - {}", pow("a*b*g", *k), pow("b*g*a", *k)),
                format!("h^{s} - {}", pow("g*a*b", *k)),
                format!("h^{}", s + 1),
            ];
            if *c {
                rels.insert(3, format!("a^2 - {}", pow("a*b*g", *k)));
                rels.push("a^3".to_string());
                rels.push("a^2*b".to_string());
                rels.push("g*a^2".to_string());
            } else {
                rels.insert(3, "a^2".to_string());
            }
            let mut text = format!(
                "{}\nvertex e0 e1\narrow a e0 e0\narrow b e0 e1\narrow g e1 e0\narrow h e1 e1\n",
                field_line(field)
            );
            for r in &rels {
                text.push_str(&format!("rel {r}\n"));
            }
            parse(&text)
        }
        Family::TwoVertexSD2B1 { k, t, c } => {
            if !(*k >= 1 && *t >= 2) {
                return Err(Error::BadParameters(
                    "sd2b1 needs k >= 1, t >= 2".to_string(),
                ));
            }
            let x2 = if *c {
                format!("a^2 - {}*b*g - {}", pow("b*g*a", *k - 1), pow("a*b*g", *k))
            } else if *k == 1 {
                "a^2 - b*g".to_string()
            } else {
                format!("a^2 - {}*b*g", pow("b*g*a", *k - 1))
            };
            // a^3 is a nonzero basis element here; the socle consequences
            // are a^2 b, g a^2, a^4, and h^{t+1}.
            let rels = vec![
                "g*b".to_string(),
                "h*g".to_string(),
                "b*h".to_string(),
                x2,
                format!("h^{t} - {}", pow("g*a*b", *k)),
                format!("{} - {}", pow("a*b*g", *k), pow("b*g*a", *k)),
                format!("h^{}", t + 1),
                "a^4".to_string(),
                "a^2*b".to_string(),
                "g*a^2".to_string(),
            ];
            let mut text = format!(
                "{}\nvertex e0 e1\narrow a e0 e0\narrow b e0 e1\narrow g e1 e0\narrow h e1 e1\n",
                field_line(field)
            );
            for r in &rels {
                text.push_str(&format!("rel {r}\n"));
            }
            parse(&text)
        }
        Family::ThreeKTriangles { socle } => {
            if !(2..=4).contains(socle) {
                return Err(Error::BadParameters("3k needs socle in 2..=4".to_string()));
            }
            let text = format!(
                "{}\nvertex e1 e2 e3\narrow b e1 e2\narrow g e2 e1\narrow kp e1 e3\narrow d e2 e3\narrow h e3 e2\narrow l e3 e1\ntruncate {socle}\n",
                field_line(field)
            );
            // No relations before truncation: the path algebra is infinite,
            // so the truncation directive supplies J^socle = 0.
            parse(&text)
        }
        Family::ThreeALine { socle } => {
            if !(2..=4).contains(socle) {
                return Err(Error::BadParameters("3a needs socle in 2..=4".to_string()));
            }
            let text = format!(
                "{}\nvertex e0 e1 e2\narrow b e0 e1\narrow g e1 e0\narrow d e1 e2\narrow h e2 e1\ntruncate {socle}\n",
                field_line(field)
            );
            parse(&text)
        }
        Family::ThreeR { k, s, t, u } => {
            if !(*s >= *t && *t >= *u && *u >= 2 && *k >= 1) {
                return Err(Error::BadParameters(
                    "d3r needs s >= t >= u >= 2 and k >= 1 (u = 1 is not admissible)".to_string(),
                ));
            }
            // Socle consequences a^(s+1), r^(t+1), x^(u+1) close the
            // overlaps between the cycle relations and the zero relations.
            let rels = vec![
                "a*b".to_string(),
                "b*r".to_string(),
                "r*d".to_string(),
                "d*x".to_string(),
                "x*l".to_string(),
                "l*a".to_string(),
                format!("a^{s} - {}", pow("b*d*l", *k)),
                format!("r^{t} - {}", pow("d*l*b", *k)),
                format!("x^{u} - {}", pow("l*b*d", *k)),
                format!("a^{}", s + 1),
                format!("r^{}", t + 1),
                format!("x^{}", u + 1),
            ];
            let mut text = format!(
                "{}\nvertex e1 e2 e3\narrow a e1 e1\narrow b e1 e2\narrow r e2 e2\narrow d e2 e3\narrow x e3 e3\narrow l e3 e1\n",
                field_line(field)
            );
            for r in &rels {
                text.push_str(&format!("rel {r}\n"));
            }
            parse(&text)
        }
        Family::Qci { exponents, q } => {
            let r = exponents.len();
            if r < 1 || exponents.iter().any(|n| *n < 2) {
                return Err(Error::BadParameters(
                    "qci needs rank >= 1 and every exponent >= 2".to_string(),
                ));
            }
            if q.len() != r * (r - 1) / 2 {
                return Err(Error::BadParameters(format!(
                    "qci rank {r} needs {} quantum parameters",
                    r * (r - 1) / 2
                )));
            }
            for v in q {
                if field.from_i64(*v).is_zero() {
                    return Err(Error::BadParameters(
                        "qci parameters must be nonzero in the field".to_string(),
                    ));
                }
            }
            let mut text = format!("{}\nvertex e\n", field_line(field));
            for i in 1..=r {
                text.push_str(&format!("arrow X{i} e e\n"));
            }
            let mut qi = 0;
            for i in 1..=r {
                for j in (i + 1)..=r {
                    text.push_str(&format!("rel X{j}*X{i} - {}*X{i}*X{j}\n", q[qi]));
                    qi += 1;
                }
            }
            for (i, n) in exponents.iter().enumerate() {
                text.push_str(&format!("rel X{}^{}\n", i + 1, n));
            }
            parse(&text)
        }
        Family::LayeredKronecker { vertices, arms } => {
            if *vertices < 2 || *arms < 1 {
                return Err(Error::BadParameters(
                    "qnm needs at least 2 vertices and 1 arrow per layer".to_string(),
                ));
            }
            let mut text = format!("{}\nvertex", field_line(field));
            for v in 1..=*vertices {
                text.push_str(&format!(" v{v}"));
            }
            text.push('\n');
            for v in 1..*vertices {
                for j in 1..=*arms {
                    text.push_str(&format!("arrow a{v}_{j} v{v} v{}\n", v + 1));
                }
            }
            for v in 1..*vertices - 1 {
                for j in 1..=*arms {
                    for l in 1..=*arms {
                        text.push_str(&format!("rel a{v}_{j}*a{}_{l}\n", v + 1));
                    }
                }
            }
            parse(&text)
        }
        Family::NakayamaCycle { e, m } => {
            if *e < 2 || *m < 1 {
                return Err(Error::BadParameters(
                    "nakayama needs e >= 2 and m >= 1".to_string(),
                ));
            }
            let mut text = format!("{}\nvertex", field_line(field));
            for v in 1..=*e {
                text.push_str(&format!(" v{v}"));
            }
            text.push('\n');
            for v in 1..=*e {
                let next = if v == *e { 1 } else { v + 1 };
                text.push_str(&format!("arrow a{v} v{v} v{next}\n"));
            }
            let len = (*e * *m + 1) as usize;
            for start in 1..=*e {
                let mut word = Vec::with_capacity(len);
                let mut v = start;
                for _ in 0..len {
                    word.push(format!("a{v}"));
                    v = if v == *e { 1 } else { v + 1 };
                }
                text.push_str(&format!("rel {}\n", word.join("*")));
            }
            parse(&text)
        }
        Family::TrivExtKronecker => {
            // Mixed length-2 cycles vanish, the two cycles at each vertex
            // agree, and the socle kills a third arrow; the words a*ra*a and
            // ra*a*ra close the remaining overlaps.
            let text = format!(
                "{}\nvertex e1 e2\narrow a e1 e2\narrow b e1 e2\narrow ra e2 e1\narrow rb e2 e1\n\
                 rel a*rb\nrel b*ra\nrel ra*b\nrel rb*a\n\
                 rel b*rb - a*ra\nrel rb*b - ra*a\n\
                 rel a*ra*a\nrel ra*a*ra\n",
                field_line(field)
            );
            parse(&text)
        }
        Family::LoopCycle => {
            // alpha^2 = 0, the mixed cycle gb = 0, and the two 3-cycles at
            // the loop vertex commute; c*a*b*c closes the overlap of the
            // commutation tip with gb.
            let text = format!(
                "{}\nvertex e1 e2\narrow a e2 e2\narrow b e2 e1\narrow c e1 e2\n\
                 rel a^2\nrel c*b\nrel b*c*a - a*b*c\nrel c*a*b*c\n",
                field_line(field)
            );
            parse(&text)
        }
    }
}

/// Deterministic enumeration of (spec, presentation) pairs for batch runs.
pub fn sweep(
    specs: impl IntoIterator<Item = FamilySpec>,
) -> impl Iterator<Item = (FamilySpec, Result<Presentation>)> {
    specs.into_iter().map(|s| {
        let p = gen(&s);
        (s, p)
    })
}

fn q() -> Field {
    Field::rational()
}

fn gf(p: u32) -> Field {
    Field::prime(p).expect("prime")
}

/// The default corpus: at least thirty presentations across characteristics
/// 0, 2, 3, 5, all of algebra dimension at most 40.
pub fn default_corpus() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    // Truncated polynomial rings, including the Jacobson-Witt cases.
    for (n, f) in [
        (2, q()),
        (3, q()),
        (4, q()),
        (2, gf(2)),
        (3, gf(2)),
        (5, gf(2)),
        (3, gf(3)),
        (4, gf(3)),
        (5, gf(5)),
        (6, gf(5)),
    ] {
        out.push(FamilySpec::new(Family::PowerLoop { n }, f));
    }
    // Local dihedral families.
    out.push(FamilySpec::new(Family::DihedralA1 { k: 1 }, q()));
    out.push(FamilySpec::new(Family::DihedralA1 { k: 1 }, gf(2)));
    out.push(FamilySpec::new(Family::DihedralA1 { k: 1 }, gf(3)));
    out.push(FamilySpec::new(Family::DihedralA1 { k: 2 }, q()));
    out.push(FamilySpec::new(Family::DihedralA1 { k: 2 }, gf(2)));
    out.push(FamilySpec::new(Family::DihedralA1 { k: 2 }, gf(3)));
    out.push(FamilySpec::new(Family::DihedralA1 { k: 3 }, gf(2)));
    out.push(FamilySpec::new(Family::DihedralXY { m: 3, n: 2 }, q()));
    out.push(FamilySpec::new(Family::DihedralXY { m: 3, n: 2 }, gf(2)));
    out.push(FamilySpec::new(Family::DihedralXY { m: 3, n: 3 }, gf(3)));
    out.push(FamilySpec::new(
        Family::DihedralA2 { k: 2, d: false },
        gf(2),
    ));
    out.push(FamilySpec::new(Family::DihedralA2 { k: 2, d: true }, gf(2)));
    out.push(FamilySpec::new(Family::DihedralComm2, gf(2)));
    // Local semidihedral and quaternion families.
    for f in [q(), gf(2), gf(3)] {
        out.push(FamilySpec::new(Family::SemidihedralA1 { k: 2 }, f));
        out.push(FamilySpec::new(Family::QuaternionA1 { k: 2 }, f));
    }
    out.push(FamilySpec::new(Family::SemidihedralA1 { k: 3 }, gf(2)));
    out.push(FamilySpec::new(Family::QuaternionA1 { k: 3 }, gf(2)));
    out.push(FamilySpec::new(
        Family::SemidihedralA2 {
            k: 2,
            c: true,
            d: false,
        },
        gf(2),
    ));
    out.push(FamilySpec::new(
        Family::QuaternionA2 {
            k: 2,
            c: true,
            d: false,
        },
        gf(2),
    ));
    // Two and three simple modules.
    out.push(FamilySpec::new(
        Family::TwoVertexD2B {
            k: 2,
            s: 2,
            c: false,
        },
        q(),
    ));
    out.push(FamilySpec::new(
        Family::TwoVertexD2B {
            k: 2,
            s: 2,
            c: true,
        },
        gf(2),
    ));
    out.push(FamilySpec::new(
        Family::TwoVertexSD2B1 {
            k: 1,
            t: 2,
            c: false,
        },
        q(),
    ));
    out.push(FamilySpec::new(
        Family::TwoVertexSD2B1 {
            k: 1,
            t: 2,
            c: false,
        },
        gf(3),
    ));
    out.push(FamilySpec::new(Family::ThreeKTriangles { socle: 2 }, q()));
    out.push(FamilySpec::new(Family::ThreeKTriangles { socle: 3 }, gf(2)));
    out.push(FamilySpec::new(Family::ThreeALine { socle: 2 }, gf(3)));
    out.push(FamilySpec::new(Family::ThreeALine { socle: 3 }, q()));
    out.push(FamilySpec::new(
        Family::ThreeR {
            k: 1,
            s: 2,
            t: 2,
            u: 2,
        },
        q(),
    ));
    out.push(FamilySpec::new(
        Family::ThreeR {
            k: 1,
            s: 2,
            t: 2,
            u: 2,
        },
        gf(2),
    ));
    out.push(FamilySpec::new(
        Family::ThreeR {
            k: 1,
            s: 3,
            t: 2,
            u: 2,
        },
        gf(3),
    ));
    // Quantum complete intersections.
    out.push(FamilySpec::new(
        Family::Qci {
            exponents: vec![2, 2],
            q: vec![-1],
        },
        q(),
    ));
    out.push(FamilySpec::new(
        Family::Qci {
            exponents: vec![2, 2],
            q: vec![2],
        },
        gf(5),
    ));
    out.push(FamilySpec::new(
        Family::Qci {
            exponents: vec![3, 3],
            q: vec![2],
        },
        gf(5),
    ));
    out.push(FamilySpec::new(
        Family::Qci {
            exponents: vec![2, 2, 2],
            q: vec![-1, -1, -1],
        },
        q(),
    ));
    out.push(FamilySpec::new(
        Family::Qci {
            exponents: vec![2, 2, 2],
            q: vec![2, 2, 2],
        },
        gf(5),
    ));
    out.push(FamilySpec::new(
        Family::Qci {
            exponents: vec![3, 3],
            q: vec![1],
        },
        gf(3),
    ));
    out.push(FamilySpec::new(
        Family::Qci {
            exponents: vec![2, 2],
            q: vec![1],
        },
        gf(2),
    ));
    // Radical-square-zero layered quivers.
    for (n, m, f) in [
        (2, 2, q()),
        (2, 2, gf(2)),
        (2, 2, gf(3)),
        (2, 2, gf(5)),
        (2, 3, q()),
        (3, 2, q()),
        (3, 2, gf(2)),
    ] {
        out.push(FamilySpec::new(
            Family::LayeredKronecker {
                vertices: n,
                arms: m,
            },
            f,
        ));
    }
    // Nakayama cycles, the trivial extension, and the loop-cycle example.
    out.push(FamilySpec::new(Family::NakayamaCycle { e: 2, m: 1 }, q()));
    out.push(FamilySpec::new(Family::NakayamaCycle { e: 3, m: 1 }, gf(2)));
    out.push(FamilySpec::new(Family::NakayamaCycle { e: 2, m: 2 }, gf(3)));
    out.push(FamilySpec::new(Family::TrivExtKronecker, q()));
    out.push(FamilySpec::new(Family::TrivExtKronecker, gf(2)));
    out.push(FamilySpec::new(Family::TrivExtKronecker, gf(3)));
    out.push(FamilySpec::new(Family::LoopCycle, q()));
    out.push(FamilySpec::new(Family::LoopCycle, gf(2)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewriting::ReductionSystem;

    #[test]
    fn every_default_entry_generates_validates_and_is_confluent() {
        let corpus = default_corpus();
        assert!(corpus.len() >= 30, "corpus has {} entries", corpus.len());
        for spec in &corpus {
            let pres = gen(spec).unwrap_or_else(|e| panic!("{}: {e}", spec.label()));
            let pres = if let Some(n) = pres.truncate_level {
                let rs = ReductionSystem::normalize(&pres)
                    .unwrap_or_else(|e| panic!("{}: {e}", spec.label()));
                crate::rewriting::truncate(&pres, &rs, n)
                    .unwrap_or_else(|e| panic!("{}: {e}", spec.label()))
            } else {
                pres
            };
            let rs = ReductionSystem::normalize(&pres)
                .unwrap_or_else(|e| panic!("{}: {e}", spec.label()));
            let overlaps = rs.confluence_check().unwrap();
            assert!(
                overlaps.is_empty(),
                "{}: {} unresolved overlaps, first word {} ({} vs {})",
                spec.label(),
                overlaps.len(),
                rs.quiver.path_display(&overlaps[0].word),
                overlaps[0].nf_a.display(&rs.quiver),
                overlaps[0].nf_b.display(&rs.quiver),
            );
            let fin = rs.finiteness();
            assert!(fin.finite, "{}: not finite dimensional", spec.label());
            let basis = rs.enumerate_basis(fin.max_length.unwrap(), true).unwrap();
            assert!(
                basis.dim() <= 40,
                "{}: dimension {} exceeds the desk-scale cap",
                spec.label(),
                basis.dim()
            );
        }
    }

    #[test]
    fn family_dimension_formulas() {
        // dim D(1A)_1^k = 4k.
        for k in 1..=3 {
            let pres = gen(&FamilySpec::new(Family::DihedralA1 { k }, q())).unwrap();
            let rs = ReductionSystem::normalize(&pres).unwrap();
            let basis = rs
                .enumerate_basis(rs.finiteness().max_length.unwrap(), true)
                .unwrap();
            assert_eq!(basis.dim(), 4 * k as usize, "d1a1 k={k}");
        }
        // dim of a quantum complete intersection is the product of the
        // exponents.
        let pres = gen(&FamilySpec::new(
            Family::Qci {
                exponents: vec![2, 3],
                q: vec![-1],
            },
            q(),
        ))
        .unwrap();
        let rs = ReductionSystem::normalize(&pres).unwrap();
        let basis = rs
            .enumerate_basis(rs.finiteness().max_length.unwrap(), true)
            .unwrap();
        assert_eq!(basis.dim(), 6);
        // Semidihedral and quaternion local algebras have dimension 4k.
        for (fam, k) in [
            (Family::SemidihedralA1 { k: 2 }, 2),
            (Family::SemidihedralA1 { k: 3 }, 3),
            (Family::QuaternionA1 { k: 2 }, 2),
            (Family::QuaternionA1 { k: 3 }, 3),
        ] {
            let pres = gen(&FamilySpec::new(fam.clone(), q())).unwrap();
            let rs = ReductionSystem::normalize(&pres).unwrap();
            let basis = rs
                .enumerate_basis(rs.finiteness().max_length.unwrap(), true)
                .unwrap();
            assert_eq!(basis.dim(), 4 * k as usize, "{:?}", fam);
        }
        // The trivial extension of the Kronecker algebra has dimension 8.
        let pres = gen(&FamilySpec::new(Family::TrivExtKronecker, q())).unwrap();
        let rs = ReductionSystem::normalize(&pres).unwrap();
        let basis = rs
            .enumerate_basis(rs.finiteness().max_length.unwrap(), true)
            .unwrap();
        assert_eq!(basis.dim(), 8);
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(gen(&FamilySpec::new(Family::PowerLoop { n: 1 }, q())).is_err());
        assert!(gen(&FamilySpec::new(Family::DihedralA2 { k: 2, d: false }, q())).is_err());
        assert!(gen(&FamilySpec::new(
            Family::Qci {
                exponents: vec![2, 2],
                q: vec![0],
            },
            q()
        ))
        .is_err());
        assert!(gen(&FamilySpec::new(
            Family::Qci {
                exponents: vec![2, 2],
                q: vec![2],
            },
            gf(2)
        ))
        .is_err());
        assert!(gen(&FamilySpec::new(
            Family::ThreeR {
                k: 1,
                s: 2,
                t: 2,
                u: 1
            },
            q()
        ))
        .is_err());
        assert!(gen(&FamilySpec::new(
            Family::TwoVertexD2B {
                k: 1,
                s: 1,
                c: false
            },
            q()
        ))
        .is_err());
    }

    #[test]
    fn sweep_is_deterministic() {
        let a: Vec<String> = sweep(default_corpus()).map(|(s, _)| s.label()).collect();
        let b: Vec<String> = sweep(default_corpus()).map(|(s, _)| s.label()).collect();
        assert_eq!(a, b);
        assert!(sweep(Vec::new()).next().is_none());
    }
}
