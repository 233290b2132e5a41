// Box search on the quadric, printed as a table and as JSONL.

use azstab::certify::{search, CoefficientBox, SearchConfig, Verdict};
use azstab::report::{verdict_summary, write_jsonl, write_table};
use azstab::surface::Surface;

fn main() {
    let s = Surface::p1xp1();
    let mut config = SearchConfig::new(
        CoefficientBox::new(vec![-2, 1], vec![0, 3]).unwrap(),
        CoefficientBox::cube(2, 3, 4).unwrap(),
    );
    config.workers = 4;
    let outcome = search(&s, &config).unwrap();
    print!("{}", verdict_summary(&outcome.certificates));
    let stable: Vec<_> = outcome
        .certificates
        .iter()
        .filter(|c| c.verdict == Verdict::StrictlyAzStable)
        .cloned()
        .collect();
    let mut buf = Vec::new();
    write_table(&mut buf, &s, &stable[..stable.len().min(8)]).unwrap();
    write_jsonl(&mut buf, &stable[..1]).unwrap();
    print!("{}", String::from_utf8(buf).unwrap());
}
