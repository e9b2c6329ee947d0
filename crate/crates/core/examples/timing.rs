use std::time::Instant;

use biquotient_core::*;

fn run(family: Family, n: u32, t: TorusSpec, budget: Budget) {
    let g = GroupSpec::new(family, n).unwrap();
    let pres = cohomology_presentation(&g, &t).unwrap();
    let w = default_omega(&pres);
    let opts = HlpOptions { budget, ..HlpOptions::default() };
    let start = Instant::now();
    let verdict = is_hard_lefschetz(&pres, &w, &opts);
    match verdict {
        Ok(v) => println!(
            "{:?} {:?} n={n} m={}: passes={} in {:.2?}",
            family,
            t,
            pres.m(),
            v.passes,
            start.elapsed()
        ),
        Err(e) => println!("{:?} {:?} n={n}: ERROR {e} after {:.2?}", family, t, start.elapsed()),
    }
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let which = args.get(1).map(|s| s.as_str()).unwrap_or("small");
    match which {
        "small" => {
            run(Family::Sp, 2, TorusSpec::s1(), Budget::default());
            run(Family::Sp, 2, TorusSpec::s2(), Budget::default());
            run(Family::Sp, 3, TorusSpec::s1(), Budget::default());
            run(Family::Sp, 3, TorusSpec::s2(), Budget::default());
            run(Family::Su, 4, TorusSpec::sk1(1), Budget::default());
            run(Family::Su, 4, TorusSpec::sk2(2), Budget::default());
        }
        "rank4" => {
            run(Family::Sp, 4, TorusSpec::s1(), Budget::default());
            run(Family::Sp, 4, TorusSpec::s2(), Budget::default());
            run(Family::Su, 5, TorusSpec::sk1(2), Budget::default());
            run(Family::Su, 5, TorusSpec::sk2(2), Budget::default());
            run(Family::SpinEven, 4, TorusSpec::s1(), Budget::default());
            run(Family::SpinEven, 4, TorusSpec::s2(), Budget::default());
        }
        "rank5" => {
            run(Family::Sp, 5, TorusSpec::s1(), Budget::large());
            run(Family::Sp, 5, TorusSpec::s2(), Budget::large());
            run(Family::Su, 6, TorusSpec::sk1(3), Budget::large());
            run(Family::Su, 6, TorusSpec::sk2(1), Budget::large());
            run(Family::SpinEven, 5, TorusSpec::s1(), Budget::large());
            run(Family::SpinEven, 5, TorusSpec::s2(), Budget::large());
        }
        other => eprintln!("unknown set {other}"),
    }
}
