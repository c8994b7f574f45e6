// Parsing braid words, Markov moves and the sandwich rewriter.

use yh::braid::{parse_corpus, sandwich_rewrite, BraidWord};

fn run_example() {
    let fig8 = BraidWord::parse("1 -2 1 -2", None).unwrap();
    println!("[{fig8}] on {} strands, epsilon {}, components {}", fig8.n(), fig8.epsilon(), fig8.closure_components());
    assert_eq!(fig8.closure_components(), 1);

    let err = BraidWord::parse("1 2 x", None).unwrap_err();
    println!("parse error: {err}");

    let beta = BraidWord::parse("2 1", Some(3)).unwrap();
    println!("conjugate: [{}]", fig8.markov_conjugate(&beta).unwrap());
    println!("stabilized: {}", fig8.markov_stabilize(false).to_corpus_line());

    let alpha = BraidWord::parse("1 2 1 2", Some(3)).unwrap();
    let out = sandwich_rewrite(&alpha).unwrap();
    println!("sigma_3 [{alpha}] sigma_3 -> {out:?} = {:?}", out.word(3));

    let corpus = parse_corpus("# two braids\nn=2; 1 1 1\n1 -2 1 -2\n").unwrap();
    assert_eq!(corpus.len(), 2);
}

fn main() {
    run_example();
}
