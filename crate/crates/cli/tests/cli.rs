use std::path::Path;
use std::process::{Command, Output};

fn spotlight(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spotlight"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = spotlight(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn count_examples() {
    assert_eq!(stdout(&["count", "--rect", "2x3"]), "7\n");
    assert_eq!(stdout(&["count", "--rect", "7x7", "--check"]), "2508\n");
    assert_eq!(
        stdout(&["count", "--family", "corners:3x3:NW,NE,SW,SE", "--check"]),
        "4\n"
    );
    assert_eq!(
        stdout(&["family", "--name", "frame", "--m", "3", "--n", "4"]),
        "34\n"
    );
    assert_eq!(
        stdout(&["family", "--name", "trimmed", "--m", "3", "--n", "3", "--r", "2"]),
        "10\n"
    );
    assert_eq!(
        stdout(&[
            "family",
            "--name",
            "corner-region",
            "--m",
            "2",
            "--n",
            "2",
            "--dir",
            "NW"
        ]),
        "2\n"
    );
}

#[test]
fn count_file_enumerates() {
    let dir = tempfile::tempdir().unwrap();
    let holed = write(dir.path(), "holed.txt", "####\n#.##\n####\n");
    let frame = write(dir.path(), "frame.txt", "###\n#.#\n###\n");
    assert_eq!(stdout(&["count", "--file", &frame]), "16\n");
    let n: usize = stdout(&["count", "--file", &holed]).trim().parse().unwrap();
    let listed = stdout(&["enumerate", "--file", &holed, "--format", "json"]);
    assert_eq!(listed.lines().count(), n);
}

#[test]
fn dist_matches_count() {
    let dist = stdout(&["dist", "--rect", "3x4"]);
    assert_eq!(dist, "3 1\n4 4\n5 10\n6 10\nmean 129/25 = 5.160\n");
    for (m, n) in [(1, 1), (2, 5), (4, 4), (3, 6)] {
        let dims = format!("{m}x{n}");
        let count: u64 = stdout(&["count", "--rect", &dims]).trim().parse().unwrap();
        let total: u64 = stdout(&["dist", "--rect", &dims])
            .lines()
            .filter(|l| !l.starts_with("mean"))
            .map(|l| l.split(' ').nth(1).unwrap().parse::<u64>().unwrap())
            .sum();
        assert_eq!(count, total, "{dims}");
    }
    assert!(stdout(&["dist", "--rect", "7x7"]).ends_with("mean 455/38 = 11.974\n"));
}

#[test]
fn gf_terms() {
    assert_eq!(
        stdout(&["gf", "--rect", "2x3"]),
        "1·H^0·V^3\n1·H^2·V^0\n2·H^2·V^1\n"
    );
    assert_eq!(stdout(&["gf", "--rect", "1x1"]), "0\n");
}

#[test]
fn enumerate_round_trips_through_render() {
    let dir = tempfile::tempdir().unwrap();
    let json = stdout(&["enumerate", "--rect", "3x3", "--format", "json"]);
    let ascii = stdout(&["enumerate", "--rect", "3x3"]);
    assert_eq!(json.lines().count(), 14);
    let pictures: Vec<&str> = ascii.split("\n\n").map(|p| p.trim_end()).collect();
    assert_eq!(pictures.len(), 14);
    for (i, (line, picture)) in json.lines().zip(&pictures).enumerate() {
        let path = write(dir.path(), &format!("t{i}.json"), line);
        assert_eq!(stdout(&["render", "--tiling", &path]).trim_end(), *picture);
        let svg = stdout(&["render", "--tiling", &path, "--format", "svg"]);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    }
    assert_eq!(
        stdout(&[
            "enumerate",
            "--rect",
            "3x3",
            "--limit",
            "2",
            "--format",
            "json"
        ])
        .lines()
        .count(),
        2
    );
    let gallery = stdout(&["enumerate", "--rect", "2x2", "--format", "svg"]);
    assert_eq!(gallery.matches("<svg").count(), 1);
}

#[test]
fn render_corner_region_example() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "corner.json",
        r#"{"region":".#\n##\n","spots":[{"row":0,"col":1,"dir":"V","len":2},{"row":1,"col":0,"dir":"U","len":1}]}"#,
    );
    assert_eq!(stdout(&["render", "--tiling", &path]), ".V\nov\n");
}

#[test]
fn outputs_are_byte_stable() {
    for args in [
        &["enumerate", "--rect", "3x4", "--format", "json"][..],
        &["enumerate", "--rect", "3x4"][..],
        &["dist", "--rect", "5x5"][..],
        &["verify", "--max-sum", "6", "--max-dim", "3"][..],
    ] {
        assert_eq!(spotlight(args).stdout, spotlight(args).stdout, "{args:?}");
    }
}

#[test]
fn oeis_prefixes() {
    assert_eq!(
        stdout(&["oeis", "--id", "A051597", "--count", "6"]),
        "1\n2\n2\n3\n4\n3\n"
    );
    assert_eq!(
        stdout(&["oeis", "--id", "A132370", "--count", "3"]),
        "16\n34\n34\n"
    );
    assert_eq!(stdout(&["oeis", "--id", "A051601", "--count", "1"]), "2\n");
}

#[test]
fn exit_codes() {
    assert_eq!(
        spotlight(&["verify", "--max-sum", "8", "--max-dim", "3"])
            .status
            .code(),
        Some(0)
    );
    // frames beyond 3x3 enumerate below the closed form
    let verify = spotlight(&["verify", "--max-sum", "6", "--max-dim", "4"]);
    assert_eq!(verify.status.code(), Some(1));
    assert!(
        String::from_utf8_lossy(&verify.stdout).contains("frame 3x4 count: expected 34, actual 31")
    );
    assert_eq!(
        spotlight(&["count", "--family", "frame:3x4", "--check"])
            .status
            .code(),
        Some(1)
    );

    for args in [
        &["count"][..],
        &["count", "--rect", "2x3", "--family", "frame:3x3"][..],
        &["count", "--rect", "2by3"][..],
        &["family", "--name", "frame", "--m", "2", "--n", "5"][..],
        &["family", "--name", "trimmed", "--m", "3", "--n", "3"][..],
        &["oeis", "--id", "A000001", "--count", "2"][..],
        &["render", "--tiling", "/nonexistent/tiling.json"][..],
        &["enumerate", "--rect", "12x11"][..],
        &["frobnicate"][..],
    ] {
        let out = spotlight(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(
            String::from_utf8_lossy(&out.stderr).contains("Usage"),
            "{args:?}"
        );
    }
}
