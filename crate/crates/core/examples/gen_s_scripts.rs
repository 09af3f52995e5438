//! Regenerates `data/s_scripts.json` by searching a rewrite script for every
//! parameter set in the shipped range.
//!
//! ```text
//! cargo run --release -p onebridge --example gen_s_scripts > crates/core/data/s_scripts.json
//! ```

use onebridge::presentation::rewrite::{generate_s_script, scripts_to_json, shipped_range};

fn main() {
    let scripts = shipped_range()
        .iter()
        .map(|f| generate_s_script(f).unwrap_or_else(|e| panic!("{f}: {e}")))
        .collect();
    print!("{}", scripts_to_json(scripts));
}
