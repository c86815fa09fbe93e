//! Symbolizes a short signal: global z-normalization, SAX words over a
//! sliding window, then runs of identical words merged.
//!
//! cargo run --example normalize_and_sax

use emd_motifs::symbolic::sax_sequence;
use emd_motifs::{breakpoints, modified_sax, zscore_global, DiscoveryConfig, TimeSeries};

fn main() -> emd_motifs::Result<()> {
    let values: Vec<f64> = (0..120)
        .map(|i| {
            let t = i as f64 / 10.0;
            if (4.0..6.0).contains(&t) {
                -0.3 * ((t - 4.0) * std::f64::consts::PI / 2.0).sin()
            } else {
                0.0
            }
        })
        .collect();
    let ts = TimeSeries::new(values, 10.0)?.with_name("one-dip");
    let cfg = DiscoveryConfig::default();

    let norm = zscore_global(&ts)?;
    println!("mean {:.4}, std {:.4}", norm.mean, norm.std);
    println!("breakpoints {:?}", breakpoints(cfg.alphabet_size)?);

    let raw = sax_sequence(norm.series.values(), &cfg)?;
    println!("{} raw words", raw.len());

    for w in modified_sax(norm.series.values(), &cfg)? {
        println!("{:>3}..{:<3} {} x{}", w.start, w.end(), w.word, w.run_count);
    }
    Ok(())
}
