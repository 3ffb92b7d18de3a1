pub mod doc;
pub mod examples;
pub mod workspace;

pub use doc::{Document, Entry, Section, HEADER, VERSION};
pub use workspace::{find_letter, Artifact, CoverArt, Frame, FunctorSpec, Target, TargetSpec, Workspace};
pub use examples::{example, EXAMPLES};
