//! Number formatting and the two payload encodings.

use serde_json::{json, Map, Number, Value};

use pseudo_binet::{BigInt, Complex};

use crate::args::Format;

/// `x` with 17 significant digits: positional for exponents `-5..=16`,
/// scientific otherwise. Negative zero prints as zero.
pub fn format_f64(x: f64) -> String {
    if x.is_nan() {
        return "NaN".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let x = if x == 0.0 { 0.0 } else { x };
    let sci = format!("{x:.16e}");
    let exponent: i32 = sci
        .split_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("`{:e}` always writes an exponent");
    if (-5..=16).contains(&exponent) {
        format!("{:.*}", (16 - exponent) as usize, x)
    } else {
        sci
    }
}

/// A JSON number carrying [`format_f64`] verbatim; `null` when not finite.
pub fn num(x: f64) -> Value {
    if x.is_finite() {
        Value::Number(
            format_f64(x)
                .parse()
                .expect("formatted floats are JSON numbers"),
        )
    } else {
        Value::Null
    }
}

pub fn int(n: &BigInt) -> Value {
    Value::Number(
        n.to_string()
            .parse::<Number>()
            .expect("integers are JSON numbers"),
    )
}

pub fn complex(z: Complex) -> Value {
    json!({ "re": num(z.re), "im": num(z.im) })
}

pub fn object(fields: impl IntoIterator<Item = (&'static str, Value)>) -> Value {
    Value::Object(
        fields
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect::<Map<_, _>>(),
    )
}

/// What a command produces: a JSON document and an equivalent table.
pub struct Report {
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(json: Value, header: &[&str]) -> Self {
        Report {
            json,
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut text =
                    serde_json::to_string_pretty(&self.json).expect("values always serialize");
                text.push('\n');
                text
            }
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(Vec::new());
                writer
                    .write_record(&self.header)
                    .expect("writing to memory cannot fail");
                for row in &self.rows {
                    writer
                        .write_record(row)
                        .expect("every row has the header's arity");
                }
                let bytes = writer.into_inner().expect("flushing to memory cannot fail");
                String::from_utf8(bytes).expect("CSV of UTF-8 cells is UTF-8")
            }
        }
    }
}
