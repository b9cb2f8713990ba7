//! Text front end: expression parser, canonical renderer, system files and
//! the `gbsurf` command line.

mod command;
mod parse;
mod render;
mod system;

pub use command::{run_command, CommandOutput};
pub use parse::parse_expression;
pub use render::{render, render_coefficient, RenderMode};
pub use system::SystemFile;
