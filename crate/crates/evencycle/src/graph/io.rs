//! Text formats: a plain edge-list format and graph6.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with 0-based sorted
//! indices; `#` starts a comment. graph6 follows the published format
//! byte-for-byte (6-bit groups of the upper triangle in column order,
//! offset by 63), including the multi-byte vertex-count encodings.

use super::{Graph, GraphError};

impl Graph {
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .map(|l| l.trim())
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| GraphError::Parse("empty input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse("bad vertex count".into()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse("bad edge count".into()))?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: u32 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::Parse(format!("bad edge line: {line}")))?;
            let v: u32 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::Parse(format!("bad edge line: {line}")))?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphError::Parse(format!(
                "header promises {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_edges(n, edges)
    }

    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut bytes = Vec::new();
        if n <= 62 {
            bytes.push(n as u8 + 63);
        } else if n <= 258_047 {
            bytes.push(126);
            for shift in [12, 6, 0] {
                bytes.push(((n >> shift) & 63) as u8 + 63);
            }
        } else {
            bytes.push(126);
            bytes.push(126);
            for shift in [30, 24, 18, 12, 6, 0] {
                bytes.push(((n >> shift) & 63) as u8 + 63);
            }
        }
        let mut group = 0u8;
        let mut filled = 0;
        for j in 1..n as u32 {
            for i in 0..j {
                group <<= 1;
                if self.has_edge(i, j) {
                    group |= 1;
                }
                filled += 1;
                if filled == 6 {
                    bytes.push(group + 63);
                    group = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            group <<= 6 - filled;
            bytes.push(group + 63);
        }
        String::from_utf8(bytes).unwrap()
    }

    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        let line = text.trim();
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        let bytes = line.as_bytes();
        if bytes.is_empty() {
            return Err(GraphError::Parse("empty graph6 input".into()));
        }
        let (n, mut pos) = if bytes[0] == 126 {
            if bytes.len() >= 2 && bytes[1] == 126 {
                let mut n = 0usize;
                for &b in bytes.get(2..8).ok_or_else(|| GraphError::Parse("truncated".into()))? {
                    n = (n << 6) | decode_byte(b)? as usize;
                }
                (n, 8)
            } else {
                let mut n = 0usize;
                for &b in bytes.get(1..4).ok_or_else(|| GraphError::Parse("truncated".into()))? {
                    n = (n << 6) | decode_byte(b)? as usize;
                }
                (n, 4)
            }
        } else {
            (decode_byte(bytes[0])? as usize, 1)
        };
        let nbits = n * n.saturating_sub(1) / 2;
        let nbytes = nbits.div_ceil(6);
        if bytes.len() != pos + nbytes {
            return Err(GraphError::Parse(format!(
                "expected {} data bytes for n={n}, found {}",
                nbytes,
                bytes.len() - pos
            )));
        }
        let mut edges = Vec::new();
        let mut group = 0u8;
        let mut remaining = 0;
        for j in 1..n as u32 {
            for i in 0..j {
                if remaining == 0 {
                    group = decode_byte(bytes[pos])?;
                    pos += 1;
                    remaining = 6;
                }
                if group & 0b10_0000 != 0 {
                    edges.push((i, j));
                }
                group <<= 1;
                remaining -= 1;
            }
        }
        Graph::from_edges(n, edges)
    }
}

fn decode_byte(b: u8) -> Result<u8, GraphError> {
    if !(63..=126).contains(&b) {
        return Err(GraphError::Parse(format!("invalid graph6 byte {b}")));
    }
    Ok(b - 63)
}
