// Driving the command-line interface in-process.

fn run_example() {
    for args in [
        vec!["homflypt", "--braid", ""],
        vec!["homflypt", "--braid", "1 1 1", "--bind", "q=2,zeta=-3/7"],
        vec!["esystem", "--d", "2", "--subset", "0,1"],
        vec!["delta", "--braid", "1 -2 1 -2", "--d", "2", "--subset", "1", "--format", "json"],
        vec!["homflypt", "--braid", "1 0"],
    ] {
        let (code, out) = yh::cli::run(std::iter::once("yh").chain(args.iter().copied()));
        println!("$ yh {}\n[{code}] {out}", args.join(" "));
    }
    assert_eq!(yh::cli::run(["yh", "homflypt", "--braid", ""]), (0, "1".to_string()));
}

fn main() {
    run_example();
}
