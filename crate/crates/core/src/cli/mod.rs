//! Command-line surface. Exit codes: 0 success/valid, 1 domain failure
//! (infeasible order, invalid certificate, malformed file), 2 usage error,
//! 3 search budget exhausted.

pub mod files;

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::Error;
use crate::hypercore::{verify_decomposition, Triplet};
use crate::spectrum::{self, Feasibility};
use crate::{assembler, cyclic};

const USAGE: &str = "\
usage: hcd <command> [options]

commands:
  spectrum --k K --v V [--split2]          decide feasibility (exit 0/1)
  construct --k K --v V [--split2] [--seed N] --out FILE
                                           build a certificate file
  verify FILE                              check a certificate (exit 0 iff VALID)
  cyclic builtin --k K --v V --out FILE    export a bundled base-cycle system
  cyclic verify FILE [--types]             verify a base-cycle file
  cyclic expand FILE --out FILE            expand base cycles to a certificate
  type --v V A B C                         print the type and distance of a triplet
  bounds --v V                             4-cycle packing bounds for order V
  kts --v V [--seed N] [--budget N] --out FILE
                                           build a Kirkman triple system file
  kts verify FILE                          check a Kirkman system file

k is 6 or 9 (4 is recognized by `spectrum` and always infeasible).
--seed defaults to 0 and governs all randomized search.";

const EXIT_OK: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_BUDGET: i32 = 3;

struct Parsed {
    positional: Vec<String>,
    values: BTreeMap<&'static str, String>,
    switches: Vec<&'static str>,
}

const VALUE_FLAGS: [&str; 5] = ["--k", "--v", "--seed", "--out", "--budget"];
const SWITCH_FLAGS: [&str; 2] = ["--split2", "--types"];

fn parse_args(args: &[String]) -> Result<Parsed, String> {
    let mut parsed = Parsed {
        positional: Vec::new(),
        values: BTreeMap::new(),
        switches: Vec::new(),
    };
    let mut it = args.iter();
    while let Some(a) = it.next() {
        if let Some(&flag) = VALUE_FLAGS.iter().find(|&&f| f == a) {
            let value = it.next().ok_or(format!("{a} takes a value"))?;
            parsed.values.insert(&flag[2..], value.clone());
        } else if let Some(&flag) = SWITCH_FLAGS.iter().find(|&&f| f == a) {
            parsed.switches.push(&flag[2..]);
        } else if a.starts_with("--") {
            return Err(format!("unknown option {a}"));
        } else {
            parsed.positional.push(a.clone());
        }
    }
    Ok(parsed)
}

impl Parsed {
    fn require_usize(&self, name: &str) -> Result<usize, String> {
        let raw = self
            .values
            .get(name)
            .ok_or(format!("--{name} is required"))?;
        raw.parse::<usize>()
            .map_err(|_| format!("--{name} takes a non-negative integer, got `{raw}`"))
    }

    fn optional_u64(&self, name: &str, default: u64) -> Result<u64, String> {
        match self.values.get(name) {
            None => Ok(default),
            Some(raw) => raw
                .parse::<u64>()
                .map_err(|_| format!("--{name} takes a non-negative integer, got `{raw}`")),
        }
    }

    fn out(&self) -> Result<&str, String> {
        self.values
            .get("out")
            .map(|s| s.as_str())
            .ok_or("--out FILE is required".to_string())
    }

    fn has(&self, name: &str) -> bool {
        self.switches.contains(&name)
    }
}

fn domain_exit(e: &Error) -> i32 {
    match e {
        Error::SearchBudgetExceeded | Error::MatchingFailed { .. } | Error::NotFound => EXIT_BUDGET,
        _ => EXIT_FAIL,
    }
}

fn fail(e: &Error) -> i32 {
    eprintln!("error: {e}");
    domain_exit(e)
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    eprintln!("{USAGE}");
    EXIT_USAGE
}

fn write_out(path: &str, contents: &str) -> Result<(), String> {
    files::atomic_write(Path::new(path), contents).map_err(|e| format!("cannot write {path}: {e}"))
}

/// Runs the CLI on already-split arguments and returns the exit code.
pub fn run(args: &[String]) -> i32 {
    let Some((command, rest)) = args.split_first() else {
        return usage_error("missing command");
    };
    let parsed = match parse_args(rest) {
        Ok(p) => p,
        Err(msg) => return usage_error(&msg),
    };
    match command.as_str() {
        "spectrum" => cmd_spectrum(&parsed),
        "construct" => cmd_construct(&parsed),
        "verify" => cmd_verify(&parsed),
        "cyclic" => cmd_cyclic(&parsed),
        "type" => cmd_type(&parsed),
        "bounds" => cmd_bounds(&parsed),
        "kts" => cmd_kts(&parsed),
        "help" | "--help" | "-h" => {
            println!("{USAGE}");
            EXIT_OK
        }
        other => usage_error(&format!("unknown command `{other}`")),
    }
}

fn cmd_spectrum(p: &Parsed) -> i32 {
    let (k, v) = match (p.require_usize("k"), p.require_usize("v")) {
        (Ok(k), Ok(v)) => (k, v),
        (Err(m), _) | (_, Err(m)) => return usage_error(&m),
    };
    match spectrum::feasible(k, v, p.has("split2")) {
        Ok(Feasibility::Feasible) => {
            println!("feasible");
            EXIT_OK
        }
        Ok(Feasibility::Infeasible(reason)) => {
            println!("infeasible: {reason}");
            EXIT_FAIL
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn cmd_construct(p: &Parsed) -> i32 {
    let (k, v) = match (p.require_usize("k"), p.require_usize("v")) {
        (Ok(k), Ok(v)) => (k, v),
        (Err(m), _) | (_, Err(m)) => return usage_error(&m),
    };
    let seed = match p.optional_u64("seed", 0) {
        Ok(s) => s,
        Err(m) => return usage_error(&m),
    };
    let out = match p.out() {
        Ok(o) => o,
        Err(m) => return usage_error(&m),
    };
    let split2 = p.has("split2");
    let result = match (k, split2) {
        (6, false) => assembler::construct_c6(v),
        (6, true) => assembler::construct_c6_split2(v, seed),
        (9, false) => assembler::construct_c9(v),
        (9, true) => assembler::construct_c9_split2(v),
        _ => return usage_error(&format!("cannot construct for k={k}")),
    };
    match result {
        Ok(d) => {
            if let Err(m) = write_out(out, &files::format_decomposition(&d)) {
                eprintln!("error: {m}");
                return EXIT_FAIL;
            }
            println!(
                "wrote {out}: v={} k={}, {} cycles",
                d.v,
                d.k,
                d.cycles.len()
            );
            EXIT_OK
        }
        Err(e) => fail(&e),
    }
}

fn cmd_verify(p: &Parsed) -> i32 {
    let [file] = p.positional.as_slice() else {
        return usage_error("verify takes exactly one FILE");
    };
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {file}: {e}");
            return EXIT_FAIL;
        }
    };
    match files::parse_decomposition(&text) {
        Ok(d) => {
            let report = verify_decomposition(&d);
            println!("{report}");
            if report.is_valid() {
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => fail(&e),
    }
}

fn cmd_cyclic(p: &Parsed) -> i32 {
    let Some(sub) = p.positional.first() else {
        return usage_error("cyclic takes a subcommand: builtin, verify or expand");
    };
    match sub.as_str() {
        "builtin" => {
            let (k, v) = match (p.require_usize("k"), p.require_usize("v")) {
                (Ok(k), Ok(v)) => (k, v),
                (Err(m), _) | (_, Err(m)) => return usage_error(&m),
            };
            let out = match p.out() {
                Ok(o) => o,
                Err(m) => return usage_error(&m),
            };
            match cyclic::bundled_system(k, v) {
                Ok(s) => {
                    if let Err(m) = write_out(out, &files::format_base_cycles(&s)) {
                        eprintln!("error: {m}");
                        return EXIT_FAIL;
                    }
                    println!(
                        "wrote {out}: v={} k={}, {} base cycles",
                        s.v,
                        s.k,
                        s.base_cycles.len()
                    );
                    EXIT_OK
                }
                Err(e) => fail(&e),
            }
        }
        "verify" => {
            let Some(file) = p.positional.get(1) else {
                return usage_error("cyclic verify takes a FILE");
            };
            let text = match std::fs::read_to_string(file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {file}: {e}");
                    return EXIT_FAIL;
                }
            };
            let system = match files::parse_base_cycles(&text) {
                Ok(s) => s,
                Err(e) => return fail(&e),
            };
            match cyclic::verify_cyclic(&system) {
                Ok(report) => {
                    println!("{report}");
                    if p.has("types") {
                        for row in &report.rows {
                            let verts: Vec<String> =
                                row.vertices.iter().map(|x| x.to_string()).collect();
                            print!("B ({}) period {}:", verts.join(","), row.period);
                            for w in &row.windows {
                                match &w.ty {
                                    Some(t) => print!("  {t} (d={})", t.d()),
                                    None => print!("  [factor]"),
                                }
                            }
                            println!();
                        }
                    }
                    if report.is_valid() {
                        EXIT_OK
                    } else {
                        EXIT_FAIL
                    }
                }
                Err(e) => fail(&e),
            }
        }
        "expand" => {
            let Some(file) = p.positional.get(1) else {
                return usage_error("cyclic expand takes a FILE");
            };
            let out = match p.out() {
                Ok(o) => o,
                Err(m) => return usage_error(&m),
            };
            let text = match std::fs::read_to_string(file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {file}: {e}");
                    return EXIT_FAIL;
                }
            };
            let system = match files::parse_base_cycles(&text) {
                Ok(s) => s,
                Err(e) => return fail(&e),
            };
            match cyclic::expand_cyclic(&system) {
                Ok(d) => {
                    if let Err(m) = write_out(out, &files::format_decomposition(&d)) {
                        eprintln!("error: {m}");
                        return EXIT_FAIL;
                    }
                    println!(
                        "wrote {out}: v={} k={}, {} cycles",
                        d.v,
                        d.k,
                        d.cycles.len()
                    );
                    EXIT_OK
                }
                Err(e) => fail(&e),
            }
        }
        other => usage_error(&format!("unknown cyclic subcommand `{other}`")),
    }
}

fn cmd_type(p: &Parsed) -> i32 {
    let v = match p.require_usize("v") {
        Ok(v) => v,
        Err(m) => return usage_error(&m),
    };
    if p.positional.len() != 3 {
        return usage_error("type takes exactly three vertices");
    }
    let mut xs = [0usize; 3];
    for (slot, raw) in xs.iter_mut().zip(&p.positional) {
        match raw.parse::<usize>() {
            Ok(x) => *slot = x,
            Err(_) => return usage_error(&format!("invalid vertex `{raw}`")),
        }
    }
    let triplet = match Triplet::new(xs[0], xs[1], xs[2]) {
        Ok(t) => t,
        Err(e) => return fail(&e),
    };
    match cyclic::triplet_type(triplet, v) {
        Ok(ty) => {
            println!("{ty} (d={})", ty.d());
            EXIT_OK
        }
        Err(Error::DegenerateOrbit(t)) => {
            eprintln!("error: factor triplet {t}");
            EXIT_FAIL
        }
        Err(e) => fail(&e),
    }
}

fn cmd_bounds(p: &Parsed) -> i32 {
    let v = match p.require_usize("v") {
        Ok(v) => v,
        Err(m) => return usage_error(&m),
    };
    if v < 4 {
        return usage_error("bounds need v >= 4");
    }
    let b = spectrum::c4_bounds(v);
    println!("schonheim {}", b.schonheim);
    match b.johnson {
        Some(j) => println!("johnson {j}"),
        None => println!("johnson n/a (v not 0 mod 6)"),
    }
    println!("max coverable edges {}", b.max_coverable_edges);
    if b.impossible {
        println!("verdict: no tight 4-cycle decomposition");
    } else {
        println!("verdict: bound inconclusive for this order");
    }
    EXIT_OK
}

fn cmd_kts(p: &Parsed) -> i32 {
    if p.positional.first().map(|s| s.as_str()) == Some("verify") {
        let Some(file) = p.positional.get(1) else {
            return usage_error("kts verify takes a FILE");
        };
        let text = match std::fs::read_to_string(file) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: cannot read {file}: {e}");
                return EXIT_FAIL;
            }
        };
        let system = match files::parse_kts(&text) {
            Ok(s) => s,
            Err(e) => return fail(&e),
        };
        return match assembler::verify_kts(&system) {
            Ok(()) => {
                println!("{} classes, ok", system.classes.len());
                EXIT_OK
            }
            Err(e) => fail(&e),
        };
    }
    let v = match p.require_usize("v") {
        Ok(v) => v,
        Err(m) => return usage_error(&m),
    };
    let seed = match p.optional_u64("seed", 0) {
        Ok(s) => s,
        Err(m) => return usage_error(&m),
    };
    let budget = match p.optional_u64("budget", assembler::KTS_DEFAULT_BUDGET) {
        Ok(b) => b,
        Err(m) => return usage_error(&m),
    };
    let out = match p.out() {
        Ok(o) => o,
        Err(m) => return usage_error(&m),
    };
    match assembler::kts_with(v, seed, budget) {
        Ok(s) => {
            if let Err(m) = write_out(out, &files::format_kts(&s)) {
                eprintln!("error: {m}");
                return EXIT_FAIL;
            }
            println!("wrote {out}: v={}, {} classes", s.v, s.classes.len());
            EXIT_OK
        }
        Err(e) => fail(&e),
    }
}
