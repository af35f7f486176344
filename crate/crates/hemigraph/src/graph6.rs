//! Standard graph6 encoding of simple undirected graphs: a size header
//! followed by the upper adjacency triangle in column-major bit order,
//! packed into 6-bit chunks offset by 63.

use thiserror::Error;

use crate::graph::Graph;

/// Largest vertex count this decoder will materialize. The format itself
/// allows up to 2^36 − 1; anything near that would not fit in memory as a
/// dense matrix.
pub const MAX_DECODE_VERTICES: usize = 1 << 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed graph6: empty input")]
    Empty,
    #[error("malformed graph6: bad header byte {0:#x}")]
    BadHeader(u8),
    #[error("malformed graph6: payload byte {0:#x} out of range")]
    BadPayloadByte(u8),
    #[error("malformed graph6: expected {expected} payload bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("malformed graph6: {extra} trailing bytes after payload")]
    TrailingData { extra: usize },
    #[error("graph6 header declares {0} vertices, above the supported limit")]
    TooLarge(u64),
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes a graph as printable graph6 bytes, using the long size forms
/// for n ≥ 63.
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    // column-major upper triangle: bit (i, j) for each j, i < j
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            if g.has_edge(i, j) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (chunk << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string. A leading `>>graph6<<` marker is accepted
/// and skipped for interoperability with files written by other tools.
pub fn graph6_decode(input: &str) -> Result<Graph, Graph6Error> {
    let bytes = input
        .as_bytes()
        .strip_prefix(b">>graph6<<")
        .unwrap_or(input.as_bytes());
    let bytes = match bytes {
        [rest @ .., b'\n'] => rest,
        _ => bytes,
    };
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, header_len) = decode_size(bytes)?;
    if n > MAX_DECODE_VERTICES as u64 {
        return Err(Graph6Error::TooLarge(n));
    }
    let n = n as usize;
    let payload = &bytes[header_len..];
    let expected = payload_len(n);
    if payload.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData {
            extra: payload.len() - expected,
        });
    }
    for &b in payload {
        if !(63..127).contains(&b) {
            return Err(Graph6Error::BadPayloadByte(b));
        }
    }
    let mut g = Graph::new(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_size(bytes: &[u8]) -> Result<(u64, usize), Graph6Error> {
    let b0 = bytes[0];
    if (63..126).contains(&b0) {
        return Ok(((b0 - 63) as u64, 1));
    }
    if b0 != 126 {
        return Err(Graph6Error::BadHeader(b0));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::Truncated {
                expected: 8,
                found: bytes.len(),
            });
        }
        let mut n = 0u64;
        for &b in &bytes[2..8] {
            if !(63..127).contains(&b) {
                return Err(Graph6Error::BadPayloadByte(b));
            }
            n = n << 6 | (b - 63) as u64;
        }
        return Ok((n, 8));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::Truncated {
            expected: 4,
            found: bytes.len(),
        });
    }
    let mut n = 0u64;
    for &b in &bytes[1..4] {
        if !(63..127).contains(&b) {
            return Err(Graph6Error::BadPayloadByte(b));
        }
        n = n << 6 | (b - 63) as u64;
    }
    Ok((n, 4))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_encodes_to_bw() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(graph6_encode(&k3), "Bw");
    }

    #[test]
    fn single_vertex_is_at_sign() {
        assert_eq!(graph6_encode(&Graph::new(1)), "@");
        assert_eq!(graph6_decode("@").unwrap().vertex_count(), 1);
    }

    #[test]
    fn empty_graph_on_zero_vertices() {
        assert_eq!(graph6_encode(&Graph::new(0)), "?");
        assert_eq!(graph6_decode("?").unwrap().vertex_count(), 0);
    }

    #[test]
    fn five_vertex_example() {
        // published example: 5-vertex graph with edges {0,2},{0,4},{1,3},{3,4}
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(graph6_encode(&g), "DQc");
        assert_eq!(graph6_decode("DQc").unwrap(), g);
    }

    #[test]
    fn long_form_round_trip() {
        let mut g = Graph::new(63);
        g.add_edge(0, 62);
        g.add_edge(30, 31);
        let enc = graph6_encode(&g);
        assert_eq!(enc.as_bytes()[0], 126);
        assert_eq!(graph6_decode(&enc).unwrap(), g);
    }

    #[test]
    fn header_marker_and_newline_accepted() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(graph6_decode(">>graph6<<Bw").unwrap(), k3);
        assert_eq!(graph6_decode("Bw\n").unwrap(), k3);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(graph6_decode(""), Err(Graph6Error::Empty));
        assert!(matches!(graph6_decode("B"), Err(Graph6Error::Truncated { .. })));
        assert!(matches!(
            graph6_decode("Bww"),
            Err(Graph6Error::TrailingData { .. })
        ));
        assert!(matches!(graph6_decode("\u{7f}w"), Err(Graph6Error::BadHeader(_))));
        assert!(matches!(
            graph6_decode("B\u{20}"),
            Err(Graph6Error::BadPayloadByte(_))
        ));
    }
}
