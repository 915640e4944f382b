//! Line-oriented netlists: an optional `.n <wires>` header, one gate per
//! line with 1-based wires, `#` comments. `;` also separates gates, so a
//! whole netlist fits on one line.

use crate::error::{Error, Result};
use crate::gate::{Circuit, GateInstance};
use crate::qopt::{ElemCircuit, ElemGate};

/// A parsed netlist: reversible gates, or elementary quantum gates when any
/// line uses `V`, `U` or a merged token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Netlist {
    Classical(Circuit),
    Elementary(ElemCircuit),
}

impl Netlist {
    pub fn wires(&self) -> u8 {
        match self {
            Netlist::Classical(c) => c.wires(),
            Netlist::Elementary(c) => c.wires(),
        }
    }

    /// The reversible circuit, failing on `V`/`U` gates.
    pub fn into_classical(self) -> Result<Circuit> {
        match self {
            Netlist::Classical(c) => Ok(c),
            Netlist::Elementary(c) => c.to_classical(),
        }
    }
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Netlist { line, msg: msg.into() }
}

/// Splits into gate statements and the declared wire count.
fn statements(text: &str) -> Result<(Option<u8>, Vec<Line<'_>>)> {
    let mut wires = None;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let number = i + 1;
        let code = raw.split('#').next().unwrap_or("");
        for stmt in code.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            if let Some(rest) = stmt.strip_prefix(".n") {
                if wires.is_some() {
                    return Err(err(number, "duplicate .n header"));
                }
                if !out.is_empty() {
                    return Err(err(number, ".n header must precede gates"));
                }
                let n: u8 = rest
                    .trim()
                    .parse()
                    .map_err(|_| err(number, format!("bad wire count {:?}", rest.trim())))?;
                wires = Some(n);
            } else {
                out.push(Line { number, text: stmt });
            }
        }
    }
    Ok((wires, out))
}

fn resolve_wires(declared: Option<u8>, max_used: u8) -> u8 {
    declared.unwrap_or(max_used.max(1))
}

/// Parses a netlist of reversible gates.
pub fn parse_circuit(text: &str) -> Result<Circuit> {
    let (declared, lines) = statements(text)?;
    let gates = lines
        .iter()
        .map(|l| {
            l.text
                .parse::<GateInstance>()
                .map_err(|e| err(l.number, e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let wires = resolve_wires(declared, gates.iter().map(|g| g.max_wire()).max().unwrap_or(0));
    for (g, l) in gates.iter().zip(&lines) {
        g.check_fits(wires).map_err(|e| err(l.number, e.to_string()))?;
    }
    Circuit::new(wires, gates)
}

/// Parses a netlist of elementary gates (`N`, `C`, `V`, `U`, merged pairs).
pub fn parse_elementary(text: &str) -> Result<ElemCircuit> {
    let (declared, lines) = statements(text)?;
    let gates = lines
        .iter()
        .map(|l| l.text.parse::<ElemGate>().map_err(|e| err(l.number, e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    let max_used = gates.iter().flat_map(|g| g.wires()).max().unwrap_or(0);
    let wires = resolve_wires(declared, max_used);
    for (g, l) in gates.iter().zip(&lines) {
        g.check(wires).map_err(|e| err(l.number, e.to_string()))?;
    }
    ElemCircuit::new(wires, gates)
}

/// Parses either kind, preferring the reversible reading.
pub fn parse(text: &str) -> Result<Netlist> {
    match parse_circuit(text) {
        Ok(c) => Ok(Netlist::Classical(c)),
        Err(classical) => match parse_elementary(text) {
            Ok(e) => Ok(Netlist::Elementary(e)),
            Err(_) => Err(classical),
        },
    }
}

/// Parses a `;`- or newline-separated gate list without header.
pub fn parse_gate_list(text: &str) -> Result<Vec<GateInstance>> {
    let (_, lines) = statements(text)?;
    lines
        .iter()
        .map(|l| l.text.parse().map_err(|e: Error| err(l.number, e.to_string())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::gate;

    #[test]
    fn parses_header_comments_and_inline_form() {
        let c = parse_circuit("# demo\n.n 3\nT3 1 2 3   # toffoli\n\nC 1 2; N 3\n").unwrap();
        assert_eq!(c.wires(), 3);
        assert_eq!(c.gates(), &[gate("T3 1 2 3"), gate("C 1 2"), gate("N 3")]);
        let again = parse_circuit(&c.to_string()).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn infers_wires_without_header() {
        assert_eq!(parse_circuit("C 1 4").unwrap().wires(), 4);
        assert_eq!(parse_circuit("").unwrap().wires(), 1);
    }

    #[test]
    fn reports_line_numbers() {
        match parse_circuit(".n 3\nC 1 2\nQ 1 2\n") {
            Err(Error::Netlist { line: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_circuit(".n 2\nT3 1 2 3\n") {
            Err(Error::Netlist { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_circuit("C 1 2\n.n 3\n").is_err());
        assert!(parse_circuit(".n x\n").is_err());
    }

    #[test]
    fn elementary_detection() {
        match parse(".n 3\nV 3 2\nC 1 3\nU 3 2\nN 2\nVC 1 2\n").unwrap() {
            Netlist::Elementary(e) => assert_eq!(e.cost(), 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("C 1 2\nN 1").unwrap(), Netlist::Classical(_)));
        let e = parse("V 1 2").unwrap();
        assert!(matches!(e.into_classical(), Err(Error::NonClassical(_))));
    }

    #[test]
    fn gate_lists() {
        let gs = parse_gate_list("C 1 2; C 1 3; C 2 1").unwrap();
        assert_eq!(gs.len(), 3);
        assert!(parse_gate_list("C 1 2; X").is_err());
    }
}
