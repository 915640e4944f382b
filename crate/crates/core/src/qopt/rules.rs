use super::ElemGate;

/// Outcome of fusing two adjacent gates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Merge {
    Identity,
    Gate(ElemGate),
}

fn controlled(pow: u8, control: u8, target: u8) -> Merge {
    match pow % 4 {
        0 => Merge::Identity,
        pow => Merge::Gate(ElemGate::Controlled { pow, control, target }),
    }
}

/// Fuses `first` followed by `second` into at most one gate, if a rule
/// applies:
///
/// - same pair: powers add (`V·V = C`, `C·V = U`, `V·U = I`, `C·C = I`, ...);
/// - reversed pair: the two-wire merged gate;
/// - a merged gate absorbs a following op on its second pair or a preceding
///   op on its first pair, and two merged gates whose inner ops cancel
///   collapse to one controlled gate;
/// - uncontrolled powers on the same wire add (`N·N = I`, `V·N = U`, ...).
pub fn merge(first: &ElemGate, second: &ElemGate) -> Option<Merge> {
    use ElemGate::*;
    match (*first, *second) {
        (Single { pow: p, target: t }, Single { pow: q, target: t2 }) if t == t2 => Some(match (p + q) % 4 {
            0 => Merge::Identity,
            pow => Merge::Gate(Single { pow, target: t }),
        }),
        (Controlled { pow: p, control: c, target: t }, Controlled { pow: q, control: c2, target: t2 }) => {
            if c == c2 && t == t2 {
                Some(controlled(p + q, c, t))
            } else if c == t2 && t == c2 {
                Some(Merge::Gate(Merged { first: p, second: q, a: c, b: t }))
            } else {
                None
            }
        }
        (Merged { first: p1, second: p2, a, b }, Controlled { pow: q, control, target })
            if control == b && target == a =>
        {
            Some(match (p2 + q) % 4 {
                0 => Merge::Gate(Controlled { pow: p1, control: a, target: b }),
                p2 => Merge::Gate(Merged { first: p1, second: p2, a, b }),
            })
        }
        (Controlled { pow: q, control, target }, Merged { first: p1, second: p2, a, b })
            if control == a && target == b =>
        {
            Some(match (q + p1) % 4 {
                0 => Merge::Gate(Controlled { pow: p2, control: b, target: a }),
                p1 => Merge::Gate(Merged { first: p1, second: p2, a, b }),
            })
        }
        (Merged { first: p1, second: p2, a, b }, Merged { first: q1, second: q2, a: a2, b: b2 })
            if a2 == b && b2 == a && (p2 + q1) % 4 == 0 =>
        {
            Some(controlled(p1 + q2, a, b))
        }
        _ => None,
    }
}

/// Adjacent gates may be exchanged when neither acts on a wire the other
/// reads as a control. All target actions are powers of NOT, which commute,
/// so this is sufficient.
pub fn try_swap(g1: &ElemGate, g2: &ElemGate) -> bool {
    g1.target_mask() & g2.control_mask() == 0 && g2.target_mask() & g1.control_mask() == 0
}
