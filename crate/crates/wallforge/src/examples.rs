//! Worked examples with known answers, replayed by `wallforge examples`.

use serde::Serialize;

use crate::abacus::{self, Bead, BeadConfig, Move, MoveKind};
use crate::affine::Family;
use crate::error::Result;
use crate::partition::{Color, ColoredPartition, Partition};
use crate::wall::Model;

#[derive(Clone, Debug, Serialize)]
pub struct ExampleCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
}

impl ExampleCheck {
    pub fn ok(&self) -> bool {
        self.expected == self.actual
    }
}

/// Shorthand bead list: `(position, count, color)` with color `'w'`, `'g'` or `' '`.
pub fn beads(list: &[(u32, u32, char)]) -> BeadConfig {
    let beads: Vec<Bead> = list
        .iter()
        .map(|&(pos, count, c)| Bead {
            pos,
            count,
            color: match c {
                'w' => Some(Color::White),
                'g' => Some(Color::Gray),
                _ => None,
            },
        })
        .collect();
    BeadConfig::from_beads(None, &beads).expect("example beads are well formed")
}

fn check(out: &mut Vec<ExampleCheck>, name: &str, expected: impl Into<String>, actual: Result<String>) {
    out.push(ExampleCheck {
        name: name.to_string(),
        expected: expected.into(),
        actual: actual.unwrap_or_else(|e| format!("error: {e}")),
    });
}

fn mapped(model: &Model, cfg: &BeadConfig) -> Result<String> {
    let w = abacus::from_beads(model, cfg)?;
    let (m, t) = abacus::pi_forward(model, &w)?;
    Ok(format!("m={m} {}", t.exponent_notation()))
}

fn moved(model: &Model, cfg: &BeadConfig, kind: MoveKind, pos: u32) -> Result<String> {
    Ok(abacus::apply_move(model, cfg, Move { kind, pos })?.0.to_string())
}

pub fn run_all() -> Result<Vec<ExampleCheck>> {
    let mut out = Vec::new();

    let p = Partition::new(vec![6, 5, 3, 1])?;
    check(
        &mut out,
        "4-core of (6,5,3,1)",
        "core (2,1), weight 3",
        p.core_quotient(4).map(|(core, q)| {
            format!("core {core}, weight {}", q.iter().map(|x| x.size()).sum::<u32>())
        }),
    );

    let a4 = Model::new(Family::A2even, 2, 0)?;
    let ex41 = beads(&[(1, 1, ' '), (4, 1, ' '), (5, 3, ' '), (7, 1, ' '), (10, 1, ' ')]);
    check(&mut out, "A_4^(2) wall from beads", "[10,7,5,5,5,4,1]", abacus::from_beads(&a4, &ex41).map(|w| w.to_string()));
    check(&mut out, "A_4^(2) slide at 7", "{1, 2, 4, 5x3, 10}", moved(&a4, &ex41, MoveKind::SlideI, 7));
    check(&mut out, "A_4^(2) pair (1,4)", "{5x3, 7, 10}", moved(&a4, &ex41, MoveKind::PairRemove, 1));
    let ch4 = beads(&[
        (2, 1, ' '), (4, 1, ' '), (6, 1, ' '), (10, 4, ' '), (12, 1, ' '), (13, 1, ' '),
        (15, 2, ' '), (16, 1, ' '), (18, 1, ' '), (19, 1, ' '),
    ]);
    check(&mut out, "A_4^(2) bijection", "m=32 ((2^4,3^2),(1,2^2,4),(1,4^2))", mapped(&a4, &ch4));

    let a5 = Model::new(Family::A2odd, 3, 0)?;
    let ex51 = beads(&[(1, 1, ' '), (4, 1, ' '), (5, 2, 'g'), (8, 1, ' ')]);
    check(&mut out, "A_5^(2) wall from beads", "[8,5ul,5ul,4,1]", abacus::from_beads(&a5, &ex51).map(|w| w.to_string()));
    let d4 = Model::new(Family::D1, 3, 0)?;
    let ex52 = beads(&[(2, 1, ' '), (3, 1, 'w'), (6, 2, 'g'), (7, 1, ' ')]);
    check(
        &mut out,
        "D_4^(1) beads round trip",
        ex52.to_string(),
        abacus::from_beads(&d4, &ex52).and_then(|w| abacus::to_beads(&d4, &w)).map(|c| c.to_string()),
    );
    let ch5 = beads(&[
        (4, 1, ' '), (5, 5, 'w'), (6, 1, ' '), (8, 1, ' '), (10, 1, 'g'), (12, 1, ' '),
        (14, 1, ' '), (15, 3, 'g'), (16, 1, ' '), (20, 1, 'g'),
    ]);
    check(&mut out, "A_5^(2) reduced wall", "{5gx5, 10w, 15wx3, 20g}", Ok(abacus::reduce(&a5, &ch5).reduced.to_string()));
    check(&mut out, "A_5^(2) bijection", "m=32 ((1,2^2,3),(1^2,2),(1^4),(1^5,2^4,3))", mapped(&a5, &ch5));

    let b3 = Model::new(Family::B1, 3, 0)?;
    let b3n = Model::new(Family::B1, 3, 3)?;
    let pair = beads(&[(1, 1, ' '), (3, 1, 'w'), (5, 1, ' '), (6, 1, ' '), (8, 1, ' ')]);
    check(&mut out, "B_3^(1) Λ_3 pair (1,5)", "{3g, 6, 8}", moved(&b3n, &pair, MoveKind::PairRemove, 1));
    let two = beads(&[(1, 1, ' '), (3, 2, ' '), (4, 1, ' ')]);
    check(&mut out, "B_3^(1) Λ_0 double removal", "{1, 4}", moved(&b3, &two, MoveKind::RemoveTwoAtN, 3));
    let g = Color::Gray;
    let w = Color::White;
    let lam = ColoredPartition::new(vec![(1, w), (1, w), (2, g), (3, g), (3, g), (4, g), (6, w), (7, w)])?;
    check(
        &mut out,
        "Q-triple of (1^2,2g,3g^2,4g,6,7)",
        "((1^2,2^4,3^2),(1^2,2,3,4),1) weight 23",
        abacus::extract_qtriple(&lam)
            .map(|t| format!("({},{},{}) weight {}", t.mu.exponent_notation(), t.nu.exponent_notation(), t.c, t.weight())),
    );
    let diag = beads(&[
        (2, 1, ' '), (3, 2, ' '), (6, 1, 'g'), (11, 1, ' '), (12, 4, 'g'), (15, 3, ' '),
        (16, 1, ' '), (19, 1, ' '), (21, 1, ' '), (24, 2, 'w'),
    ]);
    check(&mut out, "B_3^(1) Λ_0 bijection", "m=37 ((1^2,5^3,7),(1^3,2),(3),(1^5,2^2),(1^4,2^2))", mapped(&b3, &diag));
    let spin = beads(&[
        (2, 1, ' '), (3, 2, 'w'), (9, 2, 'w'), (11, 1, ' '), (12, 1, ' '), (13, 1, ' '),
        (15, 3, 'w'), (18, 3, ' '), (21, 1, 'g'), (22, 1, ' '), (24, 1, ' '),
    ]);
    check(&mut out, "B_3^(1) Λ_3 bijection", "m=38 ((2,3^3,4),(1^2,2),(4),(1^4,2^4),(1^5,2),1)", mapped(&b3n, &spin));
    let cross = beads(&[
        (2, 1, ' '), (3, 2, ' '), (6, 1, 'w'), (11, 1, ' '), (12, 4, 'w'), (15, 2, ' '),
        (16, 1, ' '), (19, 1, ' '), (21, 1, ' '), (24, 3, 'w'),
    ]);
    check(&mut out, "B_3^(1) Λ_0 to Λ_1 bijection", "m=38 ((1^2,5^2,7),(1^3,2),(3),(1^5,2^3),(1^4,2^3))", mapped(&b3, &cross));
    Ok(out)
}
