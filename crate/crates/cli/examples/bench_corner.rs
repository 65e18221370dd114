use std::time::Instant;
fn main() {
    let r = exact_core::ratio(-7, 13);
    let lambda = exact_core::OneParamSubgroup::lambda_r(r.clone());
    let start = Instant::now();
    for n in 3u32..=8 {
        let t = Instant::now();
        for s in 0..20u64 {
            let mut sampler = graded_ideal::Sampler::new(5000 + 100 * n as u64 + s);
            let pts = cli::verify::very_general_points(&mut sampler, n as usize);
            let z = graded_ideal::reduced_points(&pts).unwrap();
            let limit = degeneration::flat_limit(&z, &lambda).unwrap();
            let cut = degeneration::corner_cut(&degeneration::affine_weight_of(&r), n).unwrap();
            let expected = degeneration::corner_cut_ideal(&cut);
            assert!(limit.ideal().equal_up_to(&expected, n + 3));
            assert_eq!(limit.length(), n);
        }
        println!("n={n}: 20 seeds in {:?}", t.elapsed());
    }
    println!("total {:?}", start.elapsed());
}
