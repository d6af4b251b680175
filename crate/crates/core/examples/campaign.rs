//! A small campaign written to a JSON report.

use stl_homology::harness::{run_campaign, CampaignConfig, Check, RingSpec};

fn main() -> stl_homology::Result<()> {
    let rings = ["ground@f2", "dual@f2", "mat2@f2"]
        .iter()
        .map(|s| RingSpec::parse(s))
        .collect::<stl_homology::Result<Vec<_>>>()?;
    let mut config = CampaignConfig::new(rings, vec![3, 4], Check::ALL.to_vec());
    let dir = std::env::temp_dir().join("stl-campaign");
    std::fs::create_dir_all(&dir)?;
    config.output = Some(dir.join("report.json"));
    config.csv = Some(dir.join("homology.csv"));
    let report = run_campaign(&config)?;
    print!("{}", report.to_csv());
    println!("{:?}; report in {}", report.summary, dir.display());
    std::process::exit(report.exit_code());
}
