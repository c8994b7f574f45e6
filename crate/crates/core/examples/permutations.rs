// Permutations, reduced words and conjugacy-class representatives.

use yh::symgroup::{all_permutations, enumerate_d, partitions, w_mu, Permutation};

fn run_example() {
    let w = Permutation::from_image(&[3, 1, 4, 2]).unwrap();
    let word = w.reduced_word();
    println!("w = {:?}, length {}, reduced word {word:?}", w.image(), w.length());
    assert_eq!(Permutation::from_word(4, &word).unwrap(), w);
    println!("cycle type of w: {}", w.cycle_type());

    for mu in partitions(4) {
        let rep = w_mu(&mu);
        println!("w_mu for {mu}: {:?} (length {})", rep.image(), rep.length());
        assert_eq!(rep.cycle_type(), mu);
    }

    let d = enumerate_d(4);
    println!("|D| for n = 4: {}", d.len());
    assert_eq!(d.len(), 8);
    let longest = all_permutations(4).into_iter().map(|p| p.length()).max().unwrap();
    assert_eq!(longest, 6);
}

fn main() {
    run_example();
}
