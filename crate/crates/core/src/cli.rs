//! Command execution behind the binary front end.
//!
//! Exit codes: 0 success (including "inadmissible" reports and eliminations
//! that came out as expected), 1 usage or input error, 2 a desk-scale size
//! cap was exceeded, 3 a certificate failed replay, 4 a survivor turned up
//! under `scan --expect-none`.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;

use crate::admissibility::{admissible_report, report_text, DesignParams};
use crate::catalog::{candidates_for_degree, dump_line, Family, GroupSpec};
use crate::designs::{block_transitive, point_transitive, verify_design, IncidenceStructure};
use crate::elimination::{self, json::SweepJsonWriter, DegreeOutcome};
use crate::error::Error;
use crate::permgroup::{generators::standard_generators, homogeneity_orbits};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_SIZE_CAP: i32 = 2;
pub const EXIT_REPLAY: i32 = 3;
pub const EXIT_SURVIVOR: i32 = 4;

/// Parsed command, one per CLI subcommand.
#[derive(Debug, Clone)]
pub enum Command {
    Admissible {
        t: u64,
        v: u64,
        k: u64,
        lambda: u64,
    },
    Scan {
        t: u64,
        v_max: u64,
        jobs: u64,
        out: Option<PathBuf>,
        expect_none: bool,
    },
    Eliminate {
        t: u64,
        v: Option<u64>,
        q: Option<u64>,
        out: Option<PathBuf>,
    },
    GroupList {
        v: u64,
    },
    GroupOrder {
        family: String,
    },
    Verify {
        design: PathBuf,
        t: Option<u64>,
        group: Option<String>,
    },
    Homogeneity {
        family: String,
        s: u64,
    },
    Replay {
        file: PathBuf,
    },
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::SizeExceeded(_) => EXIT_SIZE_CAP,
        Error::Replay(_) => EXIT_REPLAY,
        _ => EXIT_USAGE,
    }
}

/// Run one command, writing its report to `out`. Errors go to stderr and
/// map onto the documented exit codes.
pub fn run(cmd: Command, out: &mut dyn Write) -> i32 {
    match execute(cmd, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, Error> {
    match cmd {
        Command::Admissible { t, v, k, lambda } => {
            let p = DesignParams::new(t, v, k, lambda)?;
            let rep = admissible_report(&p);
            write!(out, "{}", report_text(&p, &rep))?;
            Ok(EXIT_OK)
        }
        Command::Scan {
            t,
            v_max,
            jobs,
            out: path,
            expect_none,
        } => scan(t, v_max, jobs, path, expect_none, out),
        Command::Eliminate { t, v, q, out: path } => eliminate(t, v, q, path, out),
        Command::GroupList { v } => {
            for g in candidates_for_degree(v)? {
                writeln!(out, "{}", dump_line(&g))?;
            }
            Ok(EXIT_OK)
        }
        Command::GroupOrder { family } => {
            let family = Family::parse_display(&family)?;
            writeln!(out, "{}", dump_line(&GroupSpec::new(family)))?;
            Ok(EXIT_OK)
        }
        Command::Verify { design, t, group } => verify(design, t, group, out),
        Command::Homogeneity { family, s } => {
            let family = Family::parse_display(&family)?;
            let gs = standard_generators(&GroupSpec::new(family))?;
            writeln!(out, "orbits: {}", homogeneity_orbits(&gs, s)?)?;
            Ok(EXIT_OK)
        }
        Command::Replay { file } => {
            let reader = BufReader::new(File::open(&file)?);
            // anything wrong past this point, including a malformed file,
            // counts as a failed replay
            let summary = elimination::json::replay_stream(reader).map_err(|e| match e {
                Error::Replay(_) => e,
                other => Error::Replay(other.to_string()),
            })?;
            writeln!(
                out,
                "replayed {} certificates: all ok",
                summary.certificates
            )?;
            if !summary.survivors.is_empty() {
                writeln!(out, "file lists {} survivors", summary.survivors.len())?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn scan(
    t: u64,
    v_max: u64,
    jobs: u64,
    path: Option<PathBuf>,
    expect_none: bool,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let stats = match path {
        Some(p) => {
            let file = BufWriter::new(File::create(&p)?);
            let mut writer = SweepJsonWriter::new(file, t, v_max)?;
            let stats = elimination::sweep_streaming(t, v_max, jobs, |o| writer.write_outcome(o))?;
            writer.finish()?.flush()?;
            stats
        }
        None => elimination::sweep_streaming(t, v_max, jobs, |_| Ok(()))?,
    };
    writeln!(out, "degrees: {}", stats.degrees)?;
    writeln!(out, "certificates: {}", stats.certificates)?;
    for (reason, count) in &stats.reasons {
        writeln!(out, "  {reason}: {count}")?;
    }
    writeln!(out, "external: {}", stats.external)?;
    writeln!(out, "survivors: {}", stats.survivors)?;
    if expect_none && stats.survivors > 0 {
        return Ok(EXIT_SURVIVOR);
    }
    Ok(EXIT_OK)
}

fn eliminate(
    t: u64,
    v: Option<u64>,
    q: Option<u64>,
    path: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let outcome: DegreeOutcome = match (v, q) {
        (Some(v), None) => elimination::eliminate_degree(v, t)?,
        (None, Some(q)) => DegreeOutcome {
            v: q + 1,
            certificates: elimination::eliminate_psl2(q)?,
            survivors: vec![],
            external: vec![],
        },
        _ => {
            return Err(Error::InvalidInput(
                "eliminate needs exactly one of --v or --q".into(),
            ))
        }
    };
    print_outcome(&outcome, out)?;
    if let Some(p) = path {
        let file = BufWriter::new(File::create(&p)?);
        let mut writer = SweepJsonWriter::new(file, t, outcome.v)?;
        writer.write_outcome(&outcome)?;
        writer.finish()?.flush()?;
    }
    Ok(EXIT_OK)
}

fn print_outcome(outcome: &DegreeOutcome, out: &mut dyn Write) -> Result<(), Error> {
    for c in &outcome.certificates {
        writeln!(out, "{}", c.display_line())?;
    }
    for e in &outcome.external {
        writeln!(
            out,
            "{} v={} EXTERNAL_CITATION: {}",
            e.family.display(),
            e.v,
            e.citation
        )?;
    }
    for s in &outcome.survivors {
        writeln!(out, "{} v={} k={} SURVIVOR", s.family.display(), s.v, s.k)?;
    }
    Ok(())
}

fn verify(
    design: PathBuf,
    t: Option<u64>,
    group: Option<String>,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let mut reader = BufReader::new(File::open(&design)?);
    let s = IncidenceStructure::read_from(&mut reader)?;
    let verdict = match t {
        Some(t) => verify_design(&s, t)?.map(|lambda| (t, lambda)),
        None => {
            // largest t with a uniform block count
            let mut found = None;
            for t in (1..=s.k).rev() {
                if let Some(lambda) = verify_design(&s, t)? {
                    found = Some((t, lambda));
                    break;
                }
            }
            found
        }
    };
    let Some((t, lambda)) = verdict else {
        writeln!(out, "not a uniform design at the requested strength")?;
        return Ok(EXIT_USAGE);
    };
    writeln!(out, "{}-({},{},{}) verified", t, s.v, s.k, lambda)?;
    if let Some(g) = group {
        let family = Family::parse_display(&g)?;
        let gs = standard_generators(&GroupSpec::new(family))?;
        writeln!(
            out,
            "block-transitive: {}",
            if block_transitive(&gs, &s)? { "yes" } else { "no" }
        )?;
        writeln!(
            out,
            "point-transitive: {}",
            if point_transitive(&gs, &s)? { "yes" } else { "no" }
        )?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(cmd: Command) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(cmd, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn admissible_inadmissible_line() {
        let (code, text) = run_str(Command::Admissible {
            t: 7,
            v: 16,
            k: 8,
            lambda: 1,
        });
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("inadmissible: lambda_2 = 2002/6"), "{text}");
        let (code, text) = run_str(Command::Admissible {
            t: 7,
            v: 24,
            k: 8,
            lambda: 1,
        });
        assert_eq!(code, EXIT_OK);
        assert!(text.ends_with("admissible\n"), "{text}");
    }

    #[test]
    fn scan_survivors_line() {
        let (code, text) = run_str(Command::Scan {
            t: 7,
            v_max: 33,
            jobs: 1,
            out: None,
            expect_none: true,
        });
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("survivors: 0"), "{text}");
    }

    #[test]
    fn eliminate_q32_lines() {
        let (code, text) = run_str(Command::Eliminate {
            t: 7,
            v: None,
            q: Some(32),
            out: None,
        });
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("EQ_A_FAIL"), "{text}");
        assert!(text.contains("657720"), "{text}");
        let (code, _) = run_str(Command::Eliminate {
            t: 7,
            v: None,
            q: None,
            out: None,
        });
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn group_list_and_order() {
        let (code, text) = run_str(Command::GroupList { v: 32 });
        assert_eq!(code, EXIT_OK);
        assert!(
            text.contains("AGammaL1_32 degree=32 order=4960 socle=32"),
            "{text}"
        );
        let (code, text) = run_str(Command::GroupOrder {
            family: "PSL2(8)".into(),
        });
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("order=1512 socle=504"), "{text}");
    }

    #[test]
    fn homogeneity_counts() {
        let (code, text) = run_str(Command::Homogeneity {
            family: "PSL2(5)".into(),
            s: 3,
        });
        assert_eq!(code, EXIT_OK);
        assert_eq!(text, "orbits: 2\n");
        let (code, text) = run_str(Command::Homogeneity {
            family: "PSL2(7)".into(),
            s: 3,
        });
        assert_eq!(code, EXIT_OK);
        assert_eq!(text, "orbits: 1\n");
    }
}
