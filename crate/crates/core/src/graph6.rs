//! graph6 codec, short form (order ≤ 62).
//!
//! The upper triangle is read column by column: `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed six bits per byte, most significant bit first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ORDER: usize = 62;

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::SizeBudget { what: "graph6 short form", order: n, limit: MAX_ORDER });
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn decode(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, body) = bytes.split_first().ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::Graph6(format!("byte {first} out of range")));
    }
    if first == 126 {
        return Err(Error::Graph6("long-form order (> 62) is not supported".into()));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Graph6(format!("byte {b} out of range")));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // Padding bits must be zero.
    if !bits.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    Ok(Graph::from_pairs_unchecked(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        assert_eq!(encode(&Graph::complete(3)).unwrap(), "Bw");
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(encode(&c5).unwrap(), "Dhc");
        assert_eq!(decode("Dhc").unwrap(), c5);
        assert_eq!(encode(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(encode(&Graph::empty(1)).unwrap(), "@");
    }

    #[test]
    fn hand_decoder_agrees() {
        // Independent bit-string decoding for C5: 1010011001 padded to 12 bits.
        let bits = "101001100100";
        let bytes: Vec<u8> = bits
            .as_bytes()
            .chunks(6)
            .map(|c| c.iter().fold(0u8, |a, &b| (a << 1) | (b - b'0')) + 63)
            .collect();
        assert_eq!(bytes, b"hc");
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode("").is_err());
        assert!(decode("Dh").is_err());
        assert!(decode("Dhcc").is_err());
        assert!(decode("D h").is_err());
        assert!(decode("~").is_err());
        assert!(decode("Bx").is_err()); // padding bit set
        assert!(encode(&Graph::empty(63)).is_err());
    }

    #[test]
    fn round_trip_order_62() {
        let g = Graph::from_edge_list(62, &[(0, 61), (30, 31), (5, 60)]).unwrap();
        assert_eq!(decode(&encode(&g).unwrap()).unwrap(), g);
    }
}
