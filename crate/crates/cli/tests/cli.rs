use std::io::Write;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}.poset", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poset-forge")).args(args).env_remove("POSET_FORGE_BOUND").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn n_does_not_embed_in_a_chain() {
    let o = run(&["embed", &data("n"), &data("ch3")]);
    assert_eq!(stdout(&o), "ABSENT\n");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn embed_reports_a_witness() {
    let o = run(&["embed", &data("ch2"), &data("ch3")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "EMBEDS a->a b->b\n");
    let o = run(&["embed", &data("ac2"), &data("n")]);
    assert!(stdout(&o).starts_with("EMBEDS "));
}

#[test]
fn coloured_embedding_respects_the_palette() {
    let lo_hi = temp("poset y\nelem a colour=lo\nelem b colour=hi\nlt a b\nend\n");
    let hi_lo = temp("poset y\nelem a colour=hi\nelem b colour=lo\nlt a b\nend\n");
    let x = data("coloured");
    let ok = run(&["embed", "--coloured", lo_hi.path().to_str().unwrap(), &x]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let absent = run(&["embed", "--coloured", hi_lo.path().to_str().unwrap(), &x]);
    assert_eq!(absent.status.code(), Some(1));
    let plain = run(&["embed", hi_lo.path().to_str().unwrap(), &x]);
    assert_eq!(plain.status.code(), Some(0));
}

#[test]
fn classify_n_with_small_indecomposables() {
    let o = run(&["classify", &data("n"), "--max-indecomposable", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("violation 0,1,2,3\n"));
    assert!(text.ends_with("verdict fail\n"));
    let o = run(&["classify", &data("n"), "--max-indecomposable", "4"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn classify_with_listed_orders() {
    let allowed = [data("single"), data("ch2"), data("ac2")];
    let mut args = vec!["classify".to_string(), data("diamond"), "--allowed".into()];
    args.extend(allowed.iter().cloned());
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    assert_eq!(run(&args).status.code(), Some(0));
    let mut args = args.clone();
    let fence = data("fence");
    args[1] = &fence;
    assert_eq!(run(&args).status.code(), Some(1));
}

#[test]
fn fence_antichain_of_four() {
    let o = run(&["antichain", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("row 1000\nrow 0100\nrow 0010\nrow 0001\n"));
    assert!(text.contains("Z1  1  0  0  0\n"));
}

#[test]
fn matrix_over_files() {
    let o = run(&["matrix", &data("ch2"), &data("ch3"), &data("ac2")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("names ch2 ch3 ac2\nrow 110\nrow 010\nrow 001\n"));
    assert!(text.ends_with("bad-pair ch2 ac2\n"));
}

#[test]
fn family_bound_is_a_flag() {
    assert_eq!(run(&["antichain", "--n", "3", "--family-bound", "2"]).status.code(), Some(2));
}

#[test]
fn decompose_and_tree() {
    let o = run(&["decompose", &data("ch3")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("chain {a,b,c} > {a,b} > {a}\n"));
    assert!(text.contains("eta CH2{c,*|*<c}@* ; CH2{b,*|*<b}@* ; 1{a|}@a\n"));
    let o = run(&["tree", &data("ch2")]);
    assert_eq!(
        stdout(&o),
        "tree ch2\n\
         <>#0 colour=sum:CH2{b,*|*<b} parent=- labels=\n\
         0.b colour=ground:_ parent=<>#0 labels=<>#0=b\n\
         <>#1 colour=sum:1{a|} parent=<>#0 labels=<>#0=*\n\
         1.a colour=ground:_ parent=<>#1 labels=<>#0=*,<>#1=a\n"
    );
}

#[test]
fn lift_runs_both_stages() {
    let o = run(&["lift", &data("ch2"), &data("diamond")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("tree "));
    assert!(text.lines().nth(1).unwrap().starts_with("EMBEDS "));
    assert_eq!(run(&["lift", &data("n"), &data("ch3")]).status.code(), Some(1));
}

#[test]
fn ranks() {
    let o = run(&["rank", &data("tree"), "--scattered"]);
    assert_eq!(stdout(&o), "scattered-rank bin 2\n");
    let o = run(&["rank", &data("ch3"), "--tree"]);
    assert_eq!(stdout(&o), "tree-rank ch3 2\n");
    assert_eq!(run(&["rank", &data("n"), "--tree"]).status.code(), Some(2));
    assert_eq!(run(&["rank", &data("tree"), "--scattered", "--scattered-bound", "6"]).status.code(), Some(2));
    assert_eq!(run(&["rank", &data("n"), "--tree", "--decomposition"]).status.code(), Some(0));
}

#[test]
fn quotients() {
    let o = run(&["quotient", &data("diamond"), "--interval", "l,r"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("poset diamond_quotient\nelem bot\nelem l\nelem top\n"));
    assert!(stdout(&o).contains("# r -> l\n"));
    let o = run(&["quotient", &data("n"), "--interval", "0,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not-an-interval 0,1\n");
    let o = run(&["quotient", &data("mixed"), "--interval", "4,5", "--interval", "1,2,3,0"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(run(&["quotient", &data("n"), "--interval", "0,9"]).status.code(), Some(2));
}

#[test]
fn validate_summarises_sections() {
    let o = run(&["validate", &data("coloured")]);
    assert_eq!(stdout(&o), "poset x elements=4 relations=3\nquasi levels colours=3 relations=3\nok\n");
}

#[test]
fn input_errors_exit_two() {
    let bad = temp("poset x\nelem a\nlt a b\nend\n");
    let o = run(&["validate", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
    assert_eq!(run(&["decompose", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(run(&["embed", &data("n")]).status.code(), Some(2));
}

#[test]
fn bound_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_poset-forge"))
        .args(["decompose", &data("n")])
        .env("POSET_FORGE_BOUND", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(&["decompose", &data("n"), "--element-bound", "3"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", &data("n")]).status.code(), Some(0));
}
