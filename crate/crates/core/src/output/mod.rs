//! Serialising sweep tables: CSV and log-log plots.

pub mod csv;
pub mod plot;

pub use self::csv::{emit_csv, read_csv, to_csv_string, write_csv, CsvTable};
pub use self::plot::{emit_plot, render_ascii, render_svg, PlotFormat};
