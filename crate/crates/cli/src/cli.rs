use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug, Clone)]
#[command(name = "metacyclic", version, about = "Wedderburn decompositions and idempotents of F_q G for metacyclic G")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Factor x^N - 1 over F_q into cyclotomic-coset factors.
    Factor(FactorArgs),
    /// Wedderburn decomposition with explicit generator images.
    Decompose(GroupArgs),
    /// Central primitive idempotents, optionally split further.
    Idempotents(IdempotentArgs),
    /// Check one group against the brute-force oracle.
    Verify(VerifyArgs),
    /// Run the verification battery.
    Battery(BatteryArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindArg {
    Split,
    Nonsplit,
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// Field order q = p^m.
    #[arg(long)]
    pub q: u64,
    /// Group spec such as `split:n=4,s=3` or `nonsplit:n=2,s=3`.
    #[arg(long)]
    pub group: String,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct FactorArgs {
    #[arg(long)]
    pub q: u64,
    /// Factor x^n - 1.
    #[arg(long, conflicts_with = "group")]
    pub n: Option<u64>,
    /// Classify factors against this involution s (with --n).
    #[arg(long, requires = "n")]
    pub s: Option<u64>,
    /// Factor x^N - 1 for the cyclic subgroup of this group and classify.
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct IdempotentArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Also split each two-dimensional self-involutive component.
    #[arg(long)]
    pub include_noncentral: bool,
    /// Interpolate where no closed formula exists instead of reporting it.
    #[arg(long)]
    pub crt_fallback: bool,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Seed for associativity spot checks on groups of order above 32.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct BatteryArgs {
    #[arg(long, default_value_t = 24)]
    pub n_max: u64,
    /// Field orders, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [3u64, 5, 7, 9, 11, 13])]
    pub q: Vec<u64>,
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,
    /// Keep only q ≡ r (mod m), written `r:m`.
    #[arg(long)]
    pub q_mod: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}
