use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "wsk",
    version,
    about = "Exact Wronskians, Schubert calculus and the Wronski map"
)]
pub struct Cli {
    /// Indentation width for JSON output; 0 prints one line.
    #[arg(long, global = true, default_value_t = 0)]
    pub json_indent: usize,
    /// Series truncation order.
    #[arg(long, global = true, default_value_t = 12)]
    pub order: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Schur determinants in the coefficients of an operator.
    #[command(subcommand)]
    Schur(SchurCmd),
    /// Schubert calculus on G(r+1, d+1).
    #[command(subcommand)]
    Grass(GrassCmd),
    /// Linear ODEs with constant coefficients.
    #[command(subcommand)]
    Ode(OdeCmd),
    /// Generalized Wronskians and their identities.
    #[command(subcommand)]
    Wronsk(WronskCmd),
    /// Linear systems on the projective line.
    #[command(subcommand)]
    Wmap(WmapCmd),
    /// Partition combinatorics.
    #[command(subcommand)]
    Partition(PartitionCmd),
}

/// Monic operator `D^{r+1} - e_1 D^r + ... ± e_{r+1}`: rational `--coeffs`
/// or symbolic of order r+1.
#[derive(Args, Debug, Clone)]
pub struct OperatorArgs {
    /// Comma-separated e_1, ..., e_{r+1}.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "r")]
    pub coeffs: Option<String>,
    /// Symbolic operator of order r+1.
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum SchurCmd {
    /// Δ_λ of the complete sequence, symbolic in e_i or at rational values.
    Delta {
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        op: OperatorArgs,
    },
    /// h_0, ..., h_n of the operator.
    H {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        op: OperatorArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum GrassCmd {
    /// Degree of the Plücker embedding.
    Degree {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
    },
    /// Intersection number of Schubert classes.
    Intersect {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
        /// Semicolon-separated partitions.
        #[arg(long)]
        partitions: String,
    },
    /// A Schubert class, optionally multiplied by a second one.
    Class {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        times: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum OdeCmd {
    /// Exponential coefficients of the Cauchy problem solution.
    Solve {
        #[command(flatten)]
        op: OperatorArgs,
        /// y(0), ..., y^{(r)}(0); symbolic when omitted.
        #[arg(long, allow_hyphen_values = true)]
        init: Option<String>,
        /// Exponential coefficients of the right-hand side.
        #[arg(long, allow_hyphen_values = true)]
        forcing: Option<String>,
    },
    /// The fundamental basis u_0, ..., u_r.
    Basis {
        #[command(flatten)]
        op: OperatorArgs,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum ConventionArg {
    Ordinary,
    Exponential,
}

#[derive(Subcommand, Debug)]
pub enum WronskCmd {
    /// W_λ of a tuple of series.
    General {
        #[arg(long)]
        lambda: String,
        /// Semicolon-separated series, each comma-separated coefficients.
        #[arg(long, allow_hyphen_values = true)]
        series: String,
        #[arg(long, value_enum, default_value_t = ConventionArg::Ordinary)]
        convention: ConventionArg,
    },
    /// W_λ(u) - Δ_λ W(u) for the fundamental basis u.
    Giambelli {
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        op: OperatorArgs,
    },
    /// h_i W_λ(u) minus the sum over Pieri strips.
    Pieri {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        i: u32,
        #[command(flatten)]
        op: OperatorArgs,
    },
    /// W_{(1^k)}(u) - e_k W(u).
    Liouville {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        op: OperatorArgs,
    },
    /// Tableau coefficients of D^h W, or the residual on a given tuple.
    Expand {
        #[arg(long)]
        h: u32,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "r")]
        series: Option<String>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct SystemArgs {
    /// JSON file `{"d": int, "basis": [["p/q", ...], ...]}`.
    #[arg(long)]
    pub file: String,
}

#[derive(Subcommand, Debug)]
pub enum WmapCmd {
    /// Wronskian of a linear system.
    Wronskian {
        #[command(flatten)]
        sys: SystemArgs,
    },
    /// Ramification points, order partitions and weights.
    Profile {
        #[command(flatten)]
        sys: SystemArgs,
    },
    /// Flag by degree and its Wronskians.
    Flag {
        #[command(flatten)]
        sys: SystemArgs,
    },
    /// T polynomials and the master function.
    Phi {
        #[command(flatten)]
        sys: SystemArgs,
        /// JSON ramification configuration; derived from the system when omitted.
        #[arg(long)]
        config: Option<String>,
    },
    /// Non-degeneracy conditions on the T polynomials.
    Nondeg {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        config: Option<String>,
    },
    /// All planes in G(2, Poly_d) whose Wronskian has the given roots.
    Solve {
        /// Comma-separated distinct rational roots.
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum PartitionCmd {
    /// Number of standard Young tableaux.
    Syt {
        #[arg(long)]
        lambda: String,
    },
    /// Hook lengths row by row.
    Hooks {
        #[arg(long)]
        lambda: String,
    },
    /// Pieri strips of size i, optionally inside a rows × cols box.
    Strips {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        i: u32,
        #[arg(long, requires = "cols")]
        rows: Option<usize>,
        #[arg(long, requires = "rows")]
        cols: Option<u32>,
    },
}
