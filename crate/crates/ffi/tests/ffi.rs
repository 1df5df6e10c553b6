use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::ptr;

use qshell_ffi::*;

fn field(spec: &str) -> *mut QsField {
    let spec = CString::new(spec).unwrap();
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { qs_field_new(spec.as_ptr(), &mut f) }, QsStatus::Ok);
    f
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(qs_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn example() -> *mut QsComplex {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/example-f16.gen");
    let text = CString::new(std::fs::read_to_string(path).unwrap()).unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { qs_complex_from_code(text.as_ptr(), &mut c) },
        QsStatus::Ok
    );
    c
}

#[test]
fn uniform_complex_queries() {
    let f = field("gf(2)");
    assert_eq!(unsafe { qs_field_order(f) }, 2);
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { qs_complex_uniform(f, 4, 3, &mut c) }, QsStatus::Ok);
    let (mut count, mut dim, mut lex, mut chains) = (0usize, 0usize, false, false);
    let (mut formula, mut restricted, mut rank) = (0u64, 0u64, 0u64);
    unsafe {
        assert_eq!(qs_complex_facet_count(c, &mut count), QsStatus::Ok);
        assert_eq!(qs_complex_dim(c, &mut dim), QsStatus::Ok);
        assert_eq!(qs_complex_is_lex_shellable(c, &mut lex), QsStatus::Ok);
        assert_eq!(qs_complex_chain_order_shells(c, &mut chains), QsStatus::Ok);
        assert_eq!(qs_complex_betti_formula(c, &mut formula), QsStatus::Ok);
        assert_eq!(
            qs_complex_restriction_count(c, &mut restricted),
            QsStatus::Ok
        );
        assert_eq!(qs_complex_homology_rank(c, 2, &mut rank), QsStatus::Ok);
        qs_complex_free(c);
        qs_field_free(f);
    }
    assert_eq!((count, dim, lex, chains), (15, 3, true, true));
    assert_eq!((formula, restricted, rank), (64, 64, 64));
    assert_eq!(last_error(), "");
}

#[test]
fn example_reports() {
    let c = example();
    let (mut lex, mut chains, mut formula, mut rank) = (false, true, 0u64, 0u64);
    let mut json = ptr::null_mut();
    unsafe {
        assert_eq!(qs_complex_is_lex_shellable(c, &mut lex), QsStatus::Ok);
        assert_eq!(qs_complex_chain_order_shells(c, &mut chains), QsStatus::Ok);
        assert_eq!(qs_complex_betti_formula(c, &mut formula), QsStatus::Ok);
        assert_eq!(qs_complex_homology_rank(c, 2, &mut rank), QsStatus::Ok);
        assert_eq!(
            qs_complex_homology_json(c, QsMethod::All, &mut json),
            QsStatus::Ok
        );
    }
    assert_eq!((lex, chains, formula, rank), (true, false, 64, 56));
    let v: serde_json::Value =
        serde_json::from_str(unsafe { CStr::from_ptr(json) }.to_str().unwrap()).unwrap();
    assert_eq!(v["rank"], 56);
    assert_eq!(v["agree"], true);
    let mut check = ptr::null_mut();
    unsafe {
        qs_string_free(json);
        assert_eq!(qs_complex_check_json(c, &mut check), QsStatus::Ok);
    }
    let v: serde_json::Value =
        serde_json::from_str(unsafe { CStr::from_ptr(check) }.to_str().unwrap()).unwrap();
    assert_eq!(v["passed"], false);
    unsafe {
        qs_string_free(check);
        qs_complex_free(c);
    }
}

#[test]
fn errors_set_codes_and_messages() {
    let mut f = ptr::null_mut();
    let bad = CString::new("gf(6)").unwrap();
    assert_eq!(
        unsafe { qs_field_new(bad.as_ptr(), &mut f) },
        QsStatus::InvalidArgument
    );
    assert!(f.is_null());
    assert!(last_error().contains("6"));

    assert_eq!(
        unsafe { qs_field_new(ptr::null(), &mut f) },
        QsStatus::NullPointer
    );

    let text = CString::new("q=gf(2) n=3\n1,0,0\n0,1,0;0,0,1\n").unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { qs_complex_from_facets(text.as_ptr(), &mut c) },
        QsStatus::Ok
    );
    let mut b = 0u64;
    assert_eq!(
        unsafe { qs_complex_betti_formula(c, &mut b) },
        QsStatus::NotPure
    );
    let mut json = ptr::null_mut();
    assert_eq!(
        unsafe { qs_complex_homology_json(c, QsMethod::Formula, &mut json) },
        QsStatus::MethodUnavailable
    );
    unsafe { qs_complex_free(c) };

    let garbage = CString::new("q=gf(2) n=2\n1,7\n").unwrap();
    assert_eq!(
        unsafe { qs_complex_from_facets(garbage.as_ptr(), &mut c) },
        QsStatus::Parse
    );
    assert!(last_error().contains("line 2"));

    let g = field("gf(2)");
    assert_eq!(
        unsafe { qs_complex_uniform(g, 30, 2, &mut c) },
        QsStatus::TooLarge
    );
    let mut n = 0usize;
    assert_eq!(
        unsafe { qs_complex_facet_count(ptr::null(), &mut n) },
        QsStatus::NullPointer
    );
    assert_eq!(
        unsafe { qs_complex_sphere(g, 2, ptr::null_mut()) },
        QsStatus::NullPointer
    );
    unsafe {
        qs_field_free(g);
        qs_field_free(ptr::null_mut());
        qs_complex_free(ptr::null_mut());
        qs_string_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which("cc") else { return };
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("probe.c");
    std::fs::write(
        &src,
        "#include \"qshell.h\"\nint main(void) { QsField *f = 0; QsStatus s = qs_field_new(\"gf(2)\", &f); (void)s; return QS_STATUS_OK; }\n",
    )
    .unwrap();
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let out = std::process::Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

fn which(name: &str) -> Result<PathBuf, ()> {
    std::env::var_os("PATH")
        .and_then(|p| {
            std::env::split_paths(&p)
                .map(|d| d.join(name))
                .find(|p| p.is_file())
        })
        .ok_or(())
}
