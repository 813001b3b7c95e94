//! Edge-list ingestion, weight transforms, diagram documents and SVG output.

mod document;
mod edgelist;
mod svg;
mod transform;

pub use document::{
    export_diagram, import_diagram, read_diagram, write_diagram, CornerpointRecord, DiagramDocument, SCHEMA_VERSION,
};
pub use edgelist::{load_edge_list, load_edge_table, CsvOptions, EdgeRecord, EdgeTable, HeaderMode};
pub use svg::{render_svg, SvgOptions};
pub use transform::{transform_weights, Transform};
