//! Aligning catalog series with integer sequences.
//!
//! Runs offline against the bundled fixtures; pass `--online` to try the
//! network (results are cached under $AIRPOCKETS_OEIS_CACHE when set).
//!
//! cargo run --example oeis_alignment [-- --online]

use airpockets::evaluate;
use airpockets::oeis::{align_and_compare, OeisClient, CITED};

fn main() {
    let online = std::env::args().any(|a| a == "--online");
    let client = OeisClient::new().offline(!online);
    for pair in CITED {
        let series = evaluate(pair.name, pair.params, 30).unwrap();
        let line = match client.fetch(pair.id) {
            Ok(record) => match align_and_compare(&series.series, &record, 9) {
                Ok(a) => format!(
                    "shift {:+} matched {} (n = {}..{}) from {:?}",
                    a.shift, a.matched, a.first_n, a.last_n, record.source
                ),
                Err(e) => format!("no alignment: {e}"),
            },
            Err(e) => format!("fetch failed: {e}"),
        };
        let label = series.to_string();
        let label = label.split(" = ").next().unwrap_or_default();
        println!("{} {label:<16} {line}", pair.id);
    }
}
