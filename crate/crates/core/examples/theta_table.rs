//! The six classes of quadruples and their labels.

use stl_homology::steinberg::ThetaMap;

fn main() {
    let theta = ThetaMap::build();
    assert!(theta.is_consistent());
    for label in 1..=6u8 {
        let members: Vec<String> = theta
            .preimages(label)
            .iter()
            .map(|q| q.iter().map(|x| x.to_string()).collect())
            .collect();
        println!("{label}: {}", members.join(" "));
    }
}
