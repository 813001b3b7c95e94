use std::fs::File;
use std::io::Read as _;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, GraphKind, WeightedGraph};

use super::transform::{transform_weights, Transform};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum HeaderMode {
    /// A first row whose first weight field is not a number is a header.
    Auto,
    Present,
    Absent,
}

#[derive(Copy, Clone, Debug)]
pub struct CsvOptions {
    pub delimiter: u8,
    pub header: HeaderMode,
    pub directed: bool,
}

impl Default for CsvOptions {
    fn default() -> Self {
        CsvOptions {
            delimiter: b',',
            header: HeaderMode::Auto,
            directed: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EdgeRecord {
    pub line: u64,
    pub source: String,
    pub target: String,
    pub weights: Vec<f64>,
}

/// Raw rows of an edge list: two label columns followed by one or more
/// weight columns.
#[derive(Clone, Debug)]
pub struct EdgeTable {
    pub path: PathBuf,
    pub weight_columns: Vec<String>,
    pub records: Vec<EdgeRecord>,
}

impl EdgeTable {
    /// Index of a weight column given by name or by 0-based position.
    pub fn column_index(&self, key: &str) -> Result<usize> {
        if let Some(i) = self.weight_columns.iter().position(|c| c == key) {
            return Ok(i);
        }
        match key.parse::<usize>() {
            Ok(i) if i < self.weight_columns.len() => Ok(i),
            _ => Err(Error::Transform(format!(
                "no weight column `{key}` (have: {})",
                self.weight_columns.join(", ")
            ))),
        }
    }

    fn parse_error(&self, line: u64, e: Error) -> Error {
        Error::Parse {
            path: self.path.clone(),
            line,
            message: e.to_string(),
        }
    }

    fn build_with(&self, kind: GraphKind, weight: impl Fn(&EdgeRecord) -> f64) -> Result<WeightedGraph> {
        let mut b = GraphBuilder::new(kind);
        for r in &self.records {
            b.add_edge(&r.source, &r.target, weight(r))
                .map_err(|e| self.parse_error(r.line, e))?;
        }
        Ok(b.build())
    }

    /// Builds the graph, applying `transform` to the first weight column
    /// (or combining two columns for [`Transform::Product`]).
    pub fn build(&self, kind: GraphKind, transform: &Transform) -> Result<WeightedGraph> {
        match transform {
            Transform::Product(a, b) => {
                let (i, j) = (self.column_index(a)?, self.column_index(b)?);
                self.build_with(kind, |r| r.weights[i] * r.weights[j])
            }
            t => transform_weights(&self.build_with(kind, |r| r.weights[0])?, t),
        }
    }
}

pub fn load_edge_table(path: impl AsRef<Path>, opts: &CsvOptions) -> Result<EdgeTable> {
    let path = path.as_ref();
    let mut text = String::new();
    File::open(path)
        .and_then(|mut f| f.read_to_string(&mut text))
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    parse_edge_table(path, &text, opts)
}

fn parse_edge_table(path: &Path, text: &str, opts: &CsvOptions) -> Result<EdgeTable> {
    let parse_err = |line: u64, message: String| Error::Parse {
        path: path.to_owned(),
        line,
        message,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .delimiter(opts.delimiter)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());

    let mut weight_columns: Option<Vec<String>> = None;
    let mut records = Vec::new();
    for (i, row) in reader.records().enumerate() {
        let row = row.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            parse_err(line, e.to_string())
        })?;
        let line = row.position().map_or(0, |p| p.line());
        if row.len() < 3 {
            return Err(parse_err(
                line,
                format!("expected source, target and weight, found {} fields", row.len()),
            ));
        }
        if i == 0 {
            let is_header = match opts.header {
                HeaderMode::Present => true,
                HeaderMode::Absent => false,
                HeaderMode::Auto => row[2].parse::<f64>().is_err(),
            };
            if is_header {
                weight_columns = Some(row.iter().skip(2).map(str::to_owned).collect());
                continue;
            }
        }
        let columns = weight_columns.get_or_insert_with(|| (0..row.len() - 2).map(|c| c.to_string()).collect());
        if row.len() - 2 != columns.len() {
            return Err(parse_err(
                line,
                format!("expected {} weight columns, found {}", columns.len(), row.len() - 2),
            ));
        }
        for (col, label) in [(1, &row[0]), (2, &row[1])] {
            if label.is_empty() {
                return Err(parse_err(line, format!("column {col}: empty vertex label")));
            }
        }
        let weights = row
            .iter()
            .enumerate()
            .skip(2)
            .map(|(col, field)| match field.parse::<f64>() {
                Ok(w) if w.is_finite() => Ok(w),
                _ => Err(parse_err(line, format!("column {}: invalid weight `{field}`", col + 1))),
            })
            .collect::<Result<Vec<f64>>>()?;
        records.push(EdgeRecord {
            line,
            source: row[0].to_owned(),
            target: row[1].to_owned(),
            weights,
        });
    }
    Ok(EdgeTable {
        path: path.to_owned(),
        weight_columns: weight_columns.unwrap_or_default(),
        records,
    })
}

/// Loads an edge list using its first weight column.
pub fn load_edge_list(path: impl AsRef<Path>, opts: &CsvOptions) -> Result<WeightedGraph> {
    let kind = if opts.directed {
        GraphKind::Directed
    } else {
        GraphKind::Undirected
    };
    load_edge_table(path, opts)?.build(kind, &Transform::Identity)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str, opts: &CsvOptions) -> Result<EdgeTable> {
        parse_edge_table(Path::new("mem.csv"), text, opts)
    }

    #[test]
    fn triangle_without_header() {
        let t = parse("a,b,1\nb,c,2\na,c,3\n", &CsvOptions::default()).unwrap();
        let g = t.build(GraphKind::Undirected, &Transform::Identity).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.weights(), vec![1.0, 2.0, 3.0]);
        assert_eq!(t.records[2].line, 3);
    }

    #[test]
    fn header_is_detected() {
        let t = parse("source,target,value\nx,y,4\n", &CsvOptions::default()).unwrap();
        assert_eq!(t.weight_columns, vec!["value".to_string()]);
        assert_eq!(t.records.len(), 1);
        assert_eq!(t.records[0].line, 2);
    }

    #[test]
    fn malformed_weight_names_the_line() {
        let err = parse("a,b,1\nb,c,oops\n", &CsvOptions::default()).unwrap_err();
        match err {
            Error::Parse { line, message, .. } => {
                assert_eq!(line, 2);
                assert!(message.contains("oops"), "{message}");
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn duplicates_and_loops_carry_lines() {
        let t = parse("a,b,1\nb,a,2\n", &CsvOptions::default()).unwrap();
        assert!(matches!(
            t.build(GraphKind::Undirected, &Transform::Identity),
            Err(Error::Parse { line: 2, .. })
        ));
        // antiparallel arcs are distinct in a digraph
        assert_eq!(
            t.build(GraphKind::Directed, &Transform::Identity).unwrap().edge_count(),
            2
        );
        let t = parse("a,a,1\n", &CsvOptions::default()).unwrap();
        let err = t.build(GraphKind::Undirected, &Transform::Identity).unwrap_err();
        assert!(err.to_string().contains("self-loop"));
    }

    #[test]
    fn tab_delimited_product_of_columns() {
        let opts = CsvOptions {
            delimiter: b'\t',
            ..CsvOptions::default()
        };
        let t = parse("s\tt\tdist\tflights\na\tb\t2\t3\nb\tc\t5\t0.5\n", &opts).unwrap();
        let g = t
            .build(
                GraphKind::Undirected,
                &Transform::Product("dist".into(), "flights".into()),
            )
            .unwrap();
        assert_eq!(g.weights(), vec![6.0, 2.5]);
        let err = t.build(GraphKind::Undirected, &Transform::Product("dist".into(), "nope".into()));
        assert!(matches!(err, Err(Error::Transform(_))));
    }

    #[test]
    fn ragged_rows_are_rejected() {
        let err = parse("a,b,1\nb,c,2,3\n", &CsvOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
