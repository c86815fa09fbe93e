//! Path-normalized DTW between sequences of different lengths, with and
//! without a Sakoe-Chiba band, and the early-abandoning variant.
//!
//! cargo run --example dtw_distance

use emd_motifs::app::ManeuverKind;
use emd_motifs::metrics::dtw_within;
use emd_motifs::{dtw, euclid, DistanceOptions};

fn main() -> emd_motifs::Result<()> {
    let short = ManeuverKind::Brake.template(0.3, 18);
    let long = ManeuverKind::Brake.template(0.3, 24);
    let flat = vec![0.0; 24];

    let opts = DistanceOptions::default();
    println!("dip(18) vs dip(24): {:.4}", dtw(&short, &long, &opts)?);
    println!("dip(24) vs flat:    {:.4}", dtw(&long, &flat, &opts)?);
    println!("euclid dip(24) vs flat: {:.4}", euclid(&long, &flat)?);

    let banded = DistanceOptions {
        band: Some(8),
        ..opts
    };
    println!(
        "dip(18) vs dip(24), band 8: {:.4}",
        dtw(&short, &long, &banded)?
    );
    let narrow = DistanceOptions {
        band: Some(3),
        ..opts
    };
    match dtw(&short, &long, &narrow) {
        Err(e) => println!("band 3: {e}"),
        Ok(d) => println!("band 3: {d:.4}"),
    }

    let raw = DistanceOptions {
        normalize_by_path: false,
        ..opts
    };
    println!(
        "unnormalized dip(24) vs flat: {:.4}",
        dtw(&long, &flat, &raw)?
    );

    for threshold in [0.05, 0.2] {
        println!(
            "within {threshold}: {:?}",
            dtw_within(&long, &flat, &opts, threshold)?
        );
    }
    Ok(())
}
