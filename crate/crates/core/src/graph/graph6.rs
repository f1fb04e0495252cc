//! graph6 codec for graphs of order at most 62 (single-byte length form).
//!
//! Layout: one length byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column-major order, packed most-significant-bit first
//! into 6-bit groups, each offset by 63. Padding bits are zero.

use super::Graph;
use crate::{Error, Result};

/// Largest order expressible with a single length byte.
pub const MAX_GRAPH6: usize = 62;

/// Encodes a graph as graph6 text.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6 {
        return Err(Error::TooLarge {
            op: "graph6 encode",
            n,
            max: MAX_GRAPH6,
        });
    }
    let mut out = Vec::with_capacity(2 + n * n.saturating_sub(1) / 12);
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Decodes graph6 text produced by [`encode_graph6`] or standard tooling.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let Some((&head, rest)) = bytes.split_first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    if head == b'~' {
        return Err(Error::Graph6(
            "multi-byte length form (order > 62) is not supported".into(),
        ));
    }
    if !(63..=125).contains(&head) {
        return Err(Error::Graph6(format!("invalid length byte {head}")));
    }
    let n = (head - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let need = bit_count.div_ceil(6);
    if rest.len() != need {
        return Err(Error::Graph6(format!(
            "expected {need} payload bytes for order {n}, got {}",
            rest.len()
        )));
    }
    let mut adj = vec![0u64; n];
    let mut idx = 0;
    let mut cells = (1..n).flat_map(|col| (0..col).map(move |row| (row, col)));
    for &b in rest {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("invalid payload byte {b}")));
        }
        let group = b - 63;
        for k in (0..6).rev() {
            let bit = (group >> k) & 1;
            if idx < bit_count {
                let (row, col) = cells.next().expect("cell iterator matches bit count");
                if bit == 1 {
                    adj[row] |= 1 << col;
                    adj[col] |= 1 << row;
                }
            } else if bit != 0 {
                return Err(Error::Graph6("nonzero padding bits".into()));
            }
            idx += 1;
        }
    }
    Ok(Graph::from_adjacency(adj))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_known_graphs() {
        // "C~" is K_4.
        let k4 = decode_graph6("C~").unwrap();
        assert_eq!(k4.n(), 4);
        assert_eq!(k4.edge_count(), 6);
        // "A_" is K_2.
        let k2 = decode_graph6("A_").unwrap();
        assert_eq!(k2.n(), 2);
        assert!(k2.has_edge(0, 1));
        // "Ch" is the path on 4 vertices.
        let p4 = decode_graph6("Ch").unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        // "Dhc" is the 5-cycle.
        let c5 = decode_graph6("Dhc").unwrap();
        assert_eq!(c5.edges(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn encode_known_graphs() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(encode_graph6(&k1).unwrap(), "@");
        let k0 = Graph::empty(0).unwrap();
        assert_eq!(encode_graph6(&k0).unwrap(), "?");
        let p4 = Graph::build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(encode_graph6(&p4).unwrap(), "Ch");
    }

    #[test]
    fn round_trip_all_orders() {
        for n in 0..=8usize {
            // A deterministic pseudo-random edge pattern per n.
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if (u * 7 + v * 13 + n) % 3 == 0 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build_graph(n, &edges).unwrap();
            let text = encode_graph6(&g).unwrap();
            assert_eq!(decode_graph6(&text).unwrap(), g, "n={n}");
        }
    }

    #[test]
    fn malformed_inputs_rejected() {
        assert!(decode_graph6("").is_err());
        // Truncated payload.
        assert!(decode_graph6("C").is_err());
        // Extra payload.
        assert!(decode_graph6("C~~").is_err());
        // Extended length form.
        assert!(decode_graph6("~??").is_err());
        // Nonzero padding: K_2 payload with a stray low bit.
        assert!(decode_graph6("A`").is_err());
        // Byte outside the printable range.
        assert!(decode_graph6("C\u{7f}").is_err());
    }

    #[test]
    fn trailing_newline_accepted() {
        assert_eq!(decode_graph6("C~\n").unwrap().edge_count(), 6);
    }
}
