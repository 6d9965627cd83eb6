//! Text file formats. All files are UTF-8 with LF line endings, `#` starts a
//! comment, tokens are single-space separated, vertices are 0-based decimal.
//!
//! - certificates (`HCD 1`): `v`, `k`, one `F a b c` line per factor block,
//!   one `C v1 .. vk` line per cycle
//! - base-cycle files (`HCB 1`): `v`, `k`, one `B v1 .. vk` line per base
//!   cycle; orbit periods are auto-detected on load and never stored
//! - Kirkman systems (`KTS 1`): `v`, one `P ...` line per parallel class
//!   listing its blocks as consecutive triples
//!
//! Writers emit a canonical form so that write -> read -> write is
//! byte-identical.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use crate::assembler::KirkmanSystem;
use crate::cyclic::CyclicSystem;
use crate::error::Error;
use crate::hypercore::{Decomposition, OneFactor, TightCycle, Triplet, Vertex};
use crate::Result;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Numbered, non-empty, non-comment lines.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| parse_err(line, format!("invalid {what} `{token}`")))
}

fn parse_vertices(line: usize, tokens: &[&str]) -> Result<Vec<Vertex>> {
    tokens
        .iter()
        .map(|t| parse_usize(line, t, "vertex"))
        .collect()
}

struct Header {
    v: usize,
    k: Option<usize>,
}

/// Consumes the `TAG 1`, `v N` and (when `want_k`) `k N` lines.
fn parse_header<'a, I>(lines: &mut I, tag: &str, want_k: bool) -> Result<Header>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let (ln, first) = lines.next().ok_or(parse_err(1, "empty file"))?;
    let tokens: Vec<&str> = first.split_whitespace().collect();
    if tokens.len() != 2 || tokens[0] != tag || tokens[1] != "1" {
        return Err(parse_err(ln, format!("expected header `{tag} 1`")));
    }
    let (ln, vline) = lines.next().ok_or(parse_err(ln + 1, "missing `v` line"))?;
    let tokens: Vec<&str> = vline.split_whitespace().collect();
    if tokens.len() != 2 || tokens[0] != "v" {
        return Err(parse_err(ln, "expected `v <order>`"));
    }
    let v = parse_usize(ln, tokens[1], "order")?;
    let k = if want_k {
        let (ln, kline) = lines.next().ok_or(parse_err(ln + 1, "missing `k` line"))?;
        let tokens: Vec<&str> = kline.split_whitespace().collect();
        if tokens.len() != 2 || tokens[0] != "k" {
            return Err(parse_err(ln, "expected `k <cycle length>`"));
        }
        Some(parse_usize(ln, tokens[1], "cycle length")?)
    } else {
        None
    };
    Ok(Header { v, k })
}

pub fn format_decomposition(d: &Decomposition) -> String {
    let mut out = String::new();
    out.push_str("HCD 1\n");
    let _ = writeln!(out, "v {}", d.v);
    let _ = writeln!(out, "k {}", d.k);
    for b in d.factor.blocks() {
        let _ = writeln!(out, "F {b}");
    }
    for c in &d.cycles {
        out.push('C');
        for x in c.vertices() {
            let _ = write!(out, " {x}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_decomposition(text: &str) -> Result<Decomposition> {
    let mut lines = content_lines(text);
    let header = parse_header(&mut lines, "HCD", true)?;
    let (v, k) = (header.v, header.k.unwrap());
    let mut factor_blocks: Vec<Triplet> = Vec::new();
    let mut cycles: Vec<TightCycle> = Vec::new();
    for (ln, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "F" => {
                if tokens.len() != 4 {
                    return Err(parse_err(ln, "factor lines take exactly 3 vertices"));
                }
                let xs = parse_vertices(ln, &tokens[1..])?;
                factor_blocks.push(
                    Triplet::new(xs[0], xs[1], xs[2]).map_err(|e| parse_err(ln, e.to_string()))?,
                );
            }
            "C" => {
                if tokens.len() != k + 1 {
                    return Err(parse_err(
                        ln,
                        format!("cycle lines take exactly {k} vertices"),
                    ));
                }
                let xs = parse_vertices(ln, &tokens[1..])?;
                cycles.push(TightCycle::new(xs).map_err(|e| parse_err(ln, e.to_string()))?);
            }
            other => return Err(parse_err(ln, format!("unknown record `{other}`"))),
        }
    }
    let factor = OneFactor::new(v, factor_blocks)?;
    Ok(Decomposition {
        v,
        k,
        factor,
        cycles,
    })
}

pub fn format_base_cycles(s: &CyclicSystem) -> String {
    let mut out = String::new();
    out.push_str("HCB 1\n");
    let _ = writeln!(out, "v {}", s.v);
    let _ = writeln!(out, "k {}", s.k);
    for bc in &s.base_cycles {
        out.push('B');
        for x in bc.cycle.vertices() {
            let _ = write!(out, " {x}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_base_cycles(text: &str) -> Result<CyclicSystem> {
    let mut lines = content_lines(text);
    let header = parse_header(&mut lines, "HCB", true)?;
    let (v, k) = (header.v, header.k.unwrap());
    let mut cycles = Vec::new();
    for (ln, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] != "B" {
            return Err(parse_err(ln, format!("unknown record `{}`", tokens[0])));
        }
        if tokens.len() != k + 1 {
            return Err(parse_err(
                ln,
                format!("base cycle lines take exactly {k} vertices"),
            ));
        }
        let xs = parse_vertices(ln, &tokens[1..])?;
        crate::hypercore::verify_cycle(&xs, v, k).map_err(|e| parse_err(ln, e.to_string()))?;
        cycles.push(TightCycle::new(xs).map_err(|e| parse_err(ln, e.to_string()))?);
    }
    CyclicSystem::new(v, k, cycles)
}

pub fn format_kts(s: &KirkmanSystem) -> String {
    let mut out = String::new();
    out.push_str("KTS 1\n");
    let _ = writeln!(out, "v {}", s.v);
    for class in &s.classes {
        out.push('P');
        for b in class {
            let _ = write!(out, " {b}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_kts(text: &str) -> Result<KirkmanSystem> {
    let mut lines = content_lines(text);
    let header = parse_header(&mut lines, "KTS", false)?;
    let v = header.v;
    let mut classes = Vec::new();
    for (ln, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] != "P" {
            return Err(parse_err(ln, format!("unknown record `{}`", tokens[0])));
        }
        if tokens.len() != v + 1 {
            return Err(parse_err(
                ln,
                format!("class lines take exactly {v} vertices ({} blocks)", v / 3),
            ));
        }
        let xs = parse_vertices(ln, &tokens[1..])?;
        let mut class = Vec::with_capacity(v / 3);
        for b in xs.chunks(3) {
            class.push(Triplet::new(b[0], b[1], b[2]).map_err(|e| parse_err(ln, e.to_string()))?);
        }
        classes.push(class);
    }
    Ok(KirkmanSystem { v, classes })
}

/// Writes via a temporary file in the same directory, then renames.
pub fn atomic_write(path: &Path, contents: &str) -> io::Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let mut tmp = path
        .file_name()
        .map(|n| n.to_os_string())
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "path has no file name"))?;
    tmp.push(".tmp");
    let tmp_path = dir.join(tmp);
    std::fs::write(&tmp_path, contents)?;
    std::fs::rename(&tmp_path, path)
}
