//! steiner7: exact-arithmetic Steiner design admissibility and
//! block-transitive 7-design elimination.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use steiner7_core::cli::{self, Command};

#[derive(Parser)]
#[command(
    name = "steiner7",
    about = "Exact admissibility checks and block-transitive Steiner 7-design elimination",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Admissibility report for a t-(v,k,lambda) parameter tuple
    Admissible {
        #[arg(long, default_value_t = 7)]
        t: u64,
        #[arg(long)]
        v: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 1)]
        lambda: u64,
    },
    /// Elimination sweep over all candidate degrees up to --v-max
    Scan {
        #[arg(long, default_value_t = 7)]
        t: u64,
        #[arg(long = "v-max")]
        v_max: u64,
        #[arg(long, default_value_t = 1)]
        jobs: u64,
        /// Write the certificate file here
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit 4 if any survivor is found
        #[arg(long)]
        expect_none: bool,
    },
    /// Eliminate a single degree (--v) or a single PSL(2,q) case (--q)
    Eliminate {
        #[arg(long, default_value_t = 7)]
        t: u64,
        #[arg(long)]
        v: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Catalog queries
    Group {
        #[command(subcommand)]
        sub: GroupCmd,
    },
    /// Verify a design file; optionally check a group's transitivity on it
    Verify {
        #[arg(long)]
        design: PathBuf,
        #[arg(long)]
        t: Option<u64>,
        /// Family display form, e.g. "Affine_SL(3)" or "AGammaL1_8"
        #[arg(long)]
        group: Option<String>,
    },
    /// Count orbits on s-subsets for a catalog family
    Homogeneity {
        /// Family display form, e.g. "PSL2(7)"
        #[arg(long)]
        family: String,
        #[arg(long)]
        s: u64,
    },
    /// Independently recheck a certificate file
    Replay {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// One line per catalog entry at degree --v
    List {
        #[arg(long)]
        v: u64,
    },
    /// Order and socle order for one family instance
    Order {
        #[arg(long)]
        family: String,
    },
}

fn main() {
    let cli = Cli::parse();
    let cmd = match cli.cmd {
        Cmd::Admissible { t, v, k, lambda } => Command::Admissible { t, v, k, lambda },
        Cmd::Scan {
            t,
            v_max,
            jobs,
            out,
            expect_none,
        } => Command::Scan {
            t,
            v_max,
            jobs,
            out,
            expect_none,
        },
        Cmd::Eliminate { t, v, q, out } => Command::Eliminate { t, v, q, out },
        Cmd::Group { sub } => match sub {
            GroupCmd::List { v } => Command::GroupList { v },
            GroupCmd::Order { family } => Command::GroupOrder { family },
        },
        Cmd::Verify { design, t, group } => Command::Verify { design, t, group },
        Cmd::Homogeneity { family, s } => Command::Homogeneity { family, s },
        Cmd::Replay { file } => Command::Replay { file },
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let code = cli::run(cmd, &mut lock);
    lock.flush().ok();
    std::process::exit(code);
}
