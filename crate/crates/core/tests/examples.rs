macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                run_example();
            }
        }
    };
}

example!(scalars);
example!(permutations);
example!(braid_words);
example!(hecke_trace);
example!(yokonuma_algebra);
example!(juyumaya_trace);
example!(esystem);
example!(homflypt);
example!(delta_invariant);
example!(compare_cases);
example!(markov_check);
example!(cli_usage);
