//! End-to-end behavior of the binary: spec-shaped outputs, the
//! sample-to-fit pipeline, input edge cases and the exit-code contract.

use std::io::Write;
use std::process::{Command, Stdio};

fn fibbin(args: &[&str], stdin: &[u8]) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fibbin"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn fibbin");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin)
        .expect("write stdin");
    let out = child.wait_with_output().expect("wait");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("stdout utf8"),
        String::from_utf8(out.stderr).expect("stderr utf8"),
    )
}

fn field<'a>(report: &'a str, key: &str) -> &'a str {
    report
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}\t")))
        .unwrap_or_else(|| panic!("missing {key} in {report:?}"))
}

#[test]
fn bin_surfaces_the_first_two_data_points() {
    let (code, stdout, _) = fibbin(&["bin"], b"1 10\n2 7\n");
    assert_eq!(code, 0);
    assert_eq!(stdout, "1\t10\n2\t7\n");
}

#[test]
fn sizerank_two_term_sums() {
    let (code, stdout, _) = fibbin(&["sizerank"], b"1 3\n2 1\n");
    assert_eq!(code, 0);
    assert_eq!(stdout, "1\t4\n2\t1\n");
    let (code, stdout, _) = fibbin(&["sizerank", "--normalize"], b"1 3\n2 1\n");
    assert_eq!(code, 0);
    assert_eq!(stdout, "1\t1\n2\t0.25\n");
}

#[test]
fn sampled_power_law_pipes_into_a_recovering_fit() {
    let (code, sample, _) = fibbin(
        &[
            "sample", "--law", "powerlaw", "--alpha", "2.5", "--xmin", "100", "--n", "100000",
            "--seed", "42",
        ],
        b"",
    );
    assert_eq!(code, 0);
    assert_eq!(sample.lines().count(), 100_000);
    let (code, report, _) = fibbin(
        &["fit", "--raw", "--pvalue", "--replicates", "100", "--seed", "7"],
        sample.as_bytes(),
    );
    assert_eq!(code, 0);
    let alpha: f64 = field(&report, "alpha").parse().unwrap();
    let xmin: i64 = field(&report, "xmin").parse().unwrap();
    let p: f64 = field(&report, "p_value").parse().unwrap();
    assert!((2.4..=2.7).contains(&alpha), "alpha {alpha}");
    assert!((50..=200).contains(&xmin), "xmin {xmin}");
    assert!((0.1..=1.0).contains(&p), "p {p}");
}

#[test]
fn piping_sample_through_tally_is_lossless() {
    let (_, sample, _) = fibbin(
        &[
            "sample", "--law", "exponential", "--mean", "20", "--xmin", "1", "--n", "5000",
            "--seed", "9",
        ],
        b"",
    );
    let (code, ranked, _) = fibbin(&["sizerank", "--raw"], sample.as_bytes());
    assert_eq!(code, 0);
    let first = ranked.lines().next().unwrap();
    assert_eq!(first.split('\t').nth(1).unwrap(), "5000");
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let input = b"# comment\n\n   \n1 4\n# another\n2 2\n";
    let (code, stdout, _) = fibbin(&["bin"], input);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1\t4\n2\t2\n");
}

#[test]
fn raw_mode_accepts_multiple_observations_per_line() {
    let (code, stdout, _) = fibbin(&["bin", "--raw"], b"3 3\n3\n4\n");
    assert_eq!(code, 0);
    assert_eq!(stdout, "3\t3\n4\t1\n");
}

#[test]
fn headers_are_comment_lines() {
    let (_, stdout, _) = fibbin(&["bin", "--header"], b"1 2\n2 1\n");
    assert!(stdout.starts_with("# center\tmean\n"));
    let (_, stdout, _) = fibbin(&["sizerank", "--header"], b"1 2\n2 1\n");
    assert!(stdout.starts_with("# x\ttail_sum\n"));
}

#[test]
fn power_of_b_binning_from_the_command_line() {
    let (code, stdout, _) = fibbin(&["bin", "--base", "2"], b"1 1\n8 1\n");
    assert_eq!(code, 0);
    assert_eq!(stdout, "1\t1\n2.5\t0\n5.5\t0\n11.5\t0.125\n");
}

#[test]
fn drop_empty_omits_zero_mean_bins() {
    let (_, stdout, _) = fibbin(&["bin", "--drop-empty"], b"1 5\n10 3\n");
    assert_eq!(stdout, "1\t5\n10\t0.6\n");
}

#[test]
fn explicit_offset_realigns_the_bins() {
    let (code, stdout, _) = fibbin(&["bin", "--offset", "1"], b"3 6\n4 2\n");
    assert_eq!(code, 0);
    // bins [1,2) [2,3) [3,5): the pair lands in the third bin
    assert_eq!(stdout, "1\t0\n2\t0\n3.5\t4\n");
}

#[test]
fn plot_emits_a_self_contained_gnuplot_script() {
    let (code, script, _) = fibbin(
        &["plot", "--dots", "raw.tsv=indegree", "--binned", "fib.tsv", "--model", "law.tsv"],
        b"",
    );
    assert_eq!(code, 0);
    assert!(script.contains("set terminal svg"));
    assert!(script.contains("set output 'plot.svg'"));
    assert!(script.contains("set logscale xy"));
    assert!(script.contains("'raw.tsv' using 1:($2 > 0 ? $2 : 1/0) with points"));
    assert!(script.contains("'fib.tsv' using 1:($2 > 0 ? $2 : 1/0) with linespoints"));
    assert!(script.contains("'law.tsv' using 1:($2 > 0 ? $2 : 1/0) with lines"));
    assert!(script.contains("title 'indegree'"));

    let (code, script, _) = fibbin(
        &["plot", "--sizerank", "sr.tsv", "--linear-x", "--linear-y"],
        b"",
    );
    assert_eq!(code, 0);
    assert!(!script.contains("logscale"));
    assert!(script.contains("'sr.tsv' using 1:2 with points"));
}

#[test]
fn output_flag_writes_the_file_instead_of_stdout() {
    let path = std::env::temp_dir().join(format!("fibbin-out-{}.tsv", std::process::id()));
    let path_str = path.to_str().unwrap();
    let (code, stdout, _) = fibbin(&["bin", "--output", path_str], b"1 2\n2 3\n");
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1\t2\n2\t3\n");
    std::fs::remove_file(&path).ok();
}

#[test]
fn exit_codes_distinguish_usage_input_and_numeric_errors() {
    // usage
    let (code, _, _) = fibbin(&["bin", "--no-such-flag"], b"");
    assert_eq!(code, 1);
    let (code, _, stderr) = fibbin(
        &["sample", "--law", "powerlaw", "--mean", "5", "--xmin", "1", "--n", "1", "--seed", "0"],
        b"",
    );
    assert_eq!(code, 1);
    assert!(stderr.contains("--mean"));
    let (code, _, _) = fibbin(&["plot"], b"");
    assert_eq!(code, 1);

    // input
    let (code, _, stderr) = fibbin(&["bin"], b"1 2\nx y\n");
    assert_eq!(code, 2);
    assert!(stderr.contains("stdin:2"), "stderr: {stderr}");
    let (code, _, stderr) = fibbin(&["bin"], b"1 2\n1 3\n");
    assert_eq!(code, 2);
    assert!(stderr.contains("duplicate abscissa 1"));
    let (code, _, stderr) = fibbin(&["bin", "--offset", "10"], b"5 1\n7 2\n");
    assert_eq!(code, 2);
    assert!(stderr.contains("offset 10"), "stderr: {stderr}");
    let (code, _, _) = fibbin(&["bin"], b"");
    assert_eq!(code, 2);
    let (code, _, _) = fibbin(&["bin"], b"1 -4\n");
    assert_eq!(code, 2);

    // numeric / domain
    let (code, _, _) = fibbin(&["fit"], b"5 1\n");
    assert_eq!(code, 3);
    let (code, _, stderr) = fibbin(&["bin", "--base", "1"], b"1 5\n2 3\n");
    assert_eq!(code, 3);
    assert!(stderr.contains("--base"), "stderr: {stderr}");
    let (code, _, _) = fibbin(
        &["sample", "--law", "powerlaw", "--alpha", "0.5", "--xmin", "1", "--n", "1", "--seed", "0"],
        b"",
    );
    assert_eq!(code, 3);
    let (code, _, _) = fibbin(&["fit", "--min-tail", "1000"], b"1 5\n2 3\n");
    assert_eq!(code, 3);
}

#[test]
fn fit_reports_skipped_replicates_when_refits_fail() {
    let (code, report, _) = fibbin(
        &[
            "fit", "--min-tail", "1", "--pvalue", "--replicates", "50", "--seed", "1",
        ],
        b"1 1\n2 1\n",
    );
    assert_eq!(code, 0);
    assert_eq!(field(&report, "p_value"), "1");
    assert_eq!(field(&report, "skipped"), "22");
}
