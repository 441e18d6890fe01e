//! File formats, parallel suite drivers and the command-line front end
//! for [`osg_core`].

pub mod cli;
pub mod corpus;
pub mod report;
pub mod suite;

pub use corpus::{parse_corpus, write_corpus, CorpusError};
pub use report::{read_report, write_report, Header, Report, ReportError, Row};
