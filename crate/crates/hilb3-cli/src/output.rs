use clap::ValueEnum;
use hilb3::bounds::IdealRecord;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable summary.
    Table,
    /// Line-delimited JSON records.
    Records,
    /// Comma-separated values with a header row.
    Csv,
    /// Canonical generator strings, one per line (enumerate only).
    Lines,
}

pub const RECORD_CSV_HEADER: &str = "ideal,l,m1,m2,m3,T,psi,b1,b2,b3";

pub fn record_csv_row(record: &IdealRecord) -> String {
    let psi = record.psi.map(|v| v.to_string()).unwrap_or_default();
    let [b1, b2, b3] = match record.bound_chain {
        Some(chain) => chain.map(|v| v.to_string()),
        None => [String::new(), String::new(), String::new()],
    };
    format!(
        "\"{}\",{},{},{},{},{},{},{},{},{}",
        record.ideal, record.l, record.m1, record.m2, record.m3, record.tangent, psi, b1, b2, b3
    )
}
