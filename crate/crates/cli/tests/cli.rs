use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

const SEED: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/seed.gwdl");
const FREQ: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/freq.tsv");

fn mkdict(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mkdict")).args(args).output().unwrap()
}

fn glspell(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_glspell"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn seed_gwd(dir: &Path) -> PathBuf {
    let out = dir.join("seed.gwd");
    let o = mkdict(&["build", "-o", s(&out), "--freq", FREQ, SEED]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn build_report_and_rebuild_identically() {
    let dir = tempfile::tempdir().unwrap();
    let a = seed_gwd(dir.path());
    let bytes = fs::read(&a).unwrap();
    let b = dir.path().join("again.gwd");
    let o = mkdict(&["build", "-o", s(&b), "--freq", FREQ, SEED]);
    assert!(stdout(&o).contains("entries"));
    assert_eq!(fs::read(&b).unwrap(), bytes);

    let o = mkdict(&["report", s(&a)]);
    assert!(o.status.success());
    let report = stdout(&o);
    for section in ["SYMS", "TRIE", "RECS", "TRIG", "FREQ"] {
        assert!(report.contains(section), "{report}");
    }
    assert!(report.contains(&bytes.len().to_string()));
}

#[test]
fn a_two_entry_lexicon_reports_two_entries() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("two.gwdl");
    fs::write(
        &src,
        "%VERSION 1\n!n = (3, 2, 3, 3, 3, 2, 2).\n#A = ος|ου|ο|ε|οι|ων|ους.\n\
         !v = (1, 1, 1, 1, 2, 2).\n#B = ω|ας|α|ουν|αμε|ατε.\nπρο-ο-δ[#A !n].\nα-γα-π[#B !v].\n",
    )
    .unwrap();
    let out = dir.path().join("two.gwd");
    let o = mkdict(&["build", "-o", s(&out), s(&src)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).lines().next().unwrap().ends_with(" 2"), "{}", stdout(&o));

    let o = mkdict(&["expand", s(&src)]);
    let forms: Vec<String> = stdout(&o).lines().map(|l| l.split('\t').next().unwrap().to_string()).collect();
    assert!(forms.contains(&"προόδου".to_string()));
    assert!(forms.contains(&"αγαπάμε".to_string()));
}

#[test]
fn diagnostics_exit_1_and_write_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("bad.gwdl");
    fs::write(&src, "%VERSION 1\nλό-γ[$X].\n").unwrap();
    let out = dir.path().join("bad.gwd");
    let o = mkdict(&["build", "-o", s(&out), s(&src)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert!(!out.exists());
    assert!(!dir.path().join("bad.gwd.tmp").exists());
    assert_eq!(mkdict(&["validate", s(&src)]).status.code(), Some(1));
    assert_eq!(mkdict(&["validate", SEED]).status.code(), Some(0));
}

#[test]
fn io_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.gwdl");
    let out = dir.path().join("x.gwd");
    assert_eq!(mkdict(&["build", "-o", s(&out), s(&missing)]).status.code(), Some(2));
    assert_eq!(mkdict(&["report", s(&missing)]).status.code(), Some(2));
    let garbage = dir.path().join("garbage.gwd");
    fs::write(&garbage, b"not a dictionary").unwrap();
    assert_eq!(mkdict(&["report", s(&garbage)]).status.code(), Some(2));
    assert_eq!(mkdict(&[]).status.code(), Some(2));
}

#[test]
fn check_reports_tsv() {
    let dir = tempfile::tempdir().unwrap();
    let gwd = seed_gwd(dir.path());
    let doc = dir.path().join("doc.txt");
    fs::write(&doc, "Η πρόοδος του\nκέφαλι και πρόγαμμα, test.\n").unwrap();
    let o = glspell(&["check", s(&doc), "--dict", s(&gwd)], "");
    assert_eq!(o.status.code(), Some(1));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("2\t1\tκέφαλι\tκεφάλι"), "{}", lines[0]);
    assert!(lines[1].starts_with("2\t12\tπρόγαμμα\tπρόγραμμα"), "{}", lines[1]);

    let o = glspell(&["check", s(&doc), "--dict", s(&gwd), "--mapped", "--report", "pretty"], "");
    assert!(stdout(&o).contains(":2:1: κέφαλι -> κεφάλι"));

    let clean = dir.path().join("clean.txt");
    fs::write(&clean, "Η πρόοδος του προγράμματος.").unwrap();
    let o = glspell(&["check", s(&clean), "--dict", s(&gwd)], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());

    let o = glspell(&["check", s(&dir.path().join("nope.txt")), "--dict", s(&gwd)], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fix_applies_the_five_choices() {
    let dir = tempfile::tempdir().unwrap();
    let gwd = seed_gwd(dir.path());
    let user = dir.path().join("user.txt");
    let doc = dir.path().join("doc.txt");
    fs::write(&doc, "κέφαλι, προώδου, Ιντραλέξ, ζζζ και πρόγαμμα.\n").unwrap();
    // correct, edit, store, skip, exit
    let o = glspell(
        &["fix", s(&doc), "--dict", s(&gwd), "--user", s(&user)],
        "1\ne\nπροόδου\nt\ns\nx\n",
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(fs::read_to_string(&doc).unwrap(), "κεφάλι, προόδου, Ιντραλέξ, ζζζ και πρόγαμμα.\n");
    assert_eq!(fs::read_to_string(&user).unwrap(), "ιντραλέξ\n");
    let shown = stdout(&o);
    assert!(shown.contains("[κέφαλι]"));
    assert!(shown.contains("[πρόγαμμα]"));

    // the stored word is accepted from now on
    let o = glspell(&["check", s(&doc), "--dict", s(&gwd), "--user", s(&user)], "");
    let flagged: Vec<String> = stdout(&o).lines().map(|l| l.split('\t').nth(2).unwrap().to_string()).collect();
    assert_eq!(flagged, ["ζζζ", "πρόγαμμα"]);
}

#[test]
fn fix_resumes_from_a_journal() {
    let dir = tempfile::tempdir().unwrap();
    let gwd = seed_gwd(dir.path());
    let doc = dir.path().join("doc.txt");
    let out = dir.path().join("out.txt");
    let journal = dir.path().join("doc.journal");
    fs::write(&doc, "κέφαλι και προώδου και πρόγαμμα").unwrap();
    // a run that died after its first two decisions
    fs::write(&journal, "correct\t1\nskip\n").unwrap();
    let o = glspell(
        &["fix", s(&doc), "--dict", s(&gwd), "--journal", s(&journal), "-o", s(&out)],
        "1\n",
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("resumed after 2"));
    assert_eq!(fs::read_to_string(&out).unwrap(), "κεφάλι και προώδου και πρόγραμμα");
    assert!(!journal.exists());
    assert_eq!(fs::read_to_string(&doc).unwrap(), "κέφαλι και προώδου και πρόγαμμα");
}

#[test]
fn fix_refuses_a_foreign_journal() {
    let dir = tempfile::tempdir().unwrap();
    let gwd = seed_gwd(dir.path());
    let doc = dir.path().join("doc.txt");
    let journal = dir.path().join("j");
    fs::write(&doc, "κέφαλι και προώδου").unwrap();
    // a journal that cannot belong to this document is refused
    fs::write(&journal, "correct\t1\ncorrect\t1\ncorrect\t1\n").unwrap();
    let o = glspell(&["fix", s(&doc), "--dict", s(&gwd), "--journal", s(&journal)], "");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(fs::read_to_string(&doc).unwrap(), "κέφαλι και προώδου");
}

#[test]
fn fix_logs_each_decision_until_the_result_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let gwd = seed_gwd(dir.path());
    let doc = dir.path().join("doc.txt");
    let journal = dir.path().join("j");
    fs::write(&doc, "κέφαλι και προώδου και ζζζ").unwrap();
    // the output cannot be written, so the journal must survive
    let out = dir.path().join("missing/out.txt");
    let o = glspell(
        &["fix", s(&doc), "--dict", s(&gwd), "--journal", s(&journal), "-o", s(&out)],
        "1\ne\na\\b\ns\nx\n",
    );
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(fs::read_to_string(&journal).unwrap(), "correct\t1\nedit\ta\\\\b\nskip\n");
}
