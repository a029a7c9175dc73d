//! graph6 encoding (short form, n <= 62).
//!
//! Layout: one byte `63 + n`, then the upper-triangle adjacency bits
//! x(i,j) for j = 1..n-1, i = 0..j-1, packed 6 per byte big-endian, each
//! byte offset by 63. Byte 126 ('~') opens the multi-byte size form, which
//! is out of scope here.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6Parse { offset: 0, msg: "empty record".into() });
    }
    let first = bytes[0];
    if first == 126 {
        return Err(Error::Graph6Parse {
            offset: 0,
            msg: "multi-byte size form (n > 62) unsupported".into(),
        });
    }
    if !(63..=125).contains(&first) {
        return Err(Error::Graph6Parse {
            offset: 0,
            msg: format!("size byte {first} outside 63..=125"),
        });
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::Graph6Parse { offset: 0, msg: "order-0 graph".into() });
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(Error::Graph6Parse {
            offset: bytes.len().min(1 + nbytes),
            msg: format!("expected {} data bytes for n={}, got {}", nbytes, n, bytes.len() - 1),
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Graph6Parse {
                    offset: 1 + bit / 6,
                    msg: format!("data byte {byte} outside 63..=126"),
                });
            }
            let val = byte - 63;
            if val >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    // padding bits must be zero
    if nbits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6Parse {
                offset: bytes.len() - 1,
                msg: "nonzero padding bits".into(),
            });
        }
    }
    Graph::from_edge_list(n, &edges)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::Graph6TooLarge(n));
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ascii"))
}
