use clap::{Parser, Subcommand};

/// Duality numerology for graded complete intersections.
///
/// Ring and group arguments are paths to TOML records, or `builtin:KEY` for a
/// bundled fixture (`builtin:ku`, `builtin:tmf2_s3`, ...).
#[derive(Debug, Parser)]
#[command(name = "gorenstein-kit", version)]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert series and its coefficients in degrees 0..=N.
    Hilbert {
        ring: String,
        #[arg(long, default_value_t = 40)]
        max_degree: u32,
    },
    /// Gorenstein shift, by the degree formula and by the functional equation.
    Shift { ring: String },
    /// Local cohomology, Γ- and Čech-homotopy series and the Anderson shift.
    Duality {
        ring: String,
        /// Coefficients are listed in degrees -N..=N.
        #[arg(long, default_value_t = 40)]
        max_degree: u32,
    },
    /// Molien series of a group action, optionally twisted by a character.
    Molien {
        ring: String,
        group: String,
        /// `trivial`, `det`, or the name of a row of the character table.
        #[arg(long, default_value = "trivial")]
        twist: String,
        #[arg(long, default_value_t = 48)]
        max_degree: u32,
    },
    /// Decompositions of Sym^0 .. Sym^N into irreducibles.
    Sympow {
        ring: String,
        group: String,
        #[arg(long, default_value_t = 12)]
        n: usize,
    },
    /// A basis of the invariants in one degree.
    Invgen {
        ring: String,
        group: String,
        #[arg(long)]
        degree: u32,
    },
    /// Predicted shifts of the ring of invariants.
    Descent { ring: String, group: String },
    /// The bundled table of Gorenstein shifts, recomputed from degrees.
    Table,
}
