pub mod branching;
pub mod checks;
pub mod diagalg;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod tableaux;

pub use branching::{enumerate_std, enumerate_std0, KroneckerTableau, Step};
pub use error::{Error, Result};
pub use partitions::{minmax, partitions_of, Composition, Partition};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/paths.md")]
    mod paths {}
    #[doc = include_str!("../../../book/src/tableaux.md")]
    mod tableaux {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/diagrams.md")]
    mod diagrams {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
