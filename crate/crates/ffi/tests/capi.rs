use std::ffi::CString;
use std::ptr;

use racg_lcs_ffi::*;

fn last_error() -> String {
    let mut buf = vec![0 as std::ffi::c_char; 256];
    unsafe { racg_last_error_message(buf.as_mut_ptr(), buf.len()) };
    unsafe { std::ffi::CStr::from_ptr(buf.as_ptr()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn dims_through_handles() {
    let json = CString::new(r#"{"m": 3}"#).unwrap();
    let mut k = ptr::null_mut();
    assert_eq!(
        unsafe { racg_complex_from_json(json.as_ptr(), &mut k) },
        RacgStatus::Ok
    );
    let mut pc = ptr::null_mut();
    assert_eq!(unsafe { racg_quotient_new(k, 4, &mut pc) }, RacgStatus::Ok);
    let mut dims = [0usize; 4];
    let mut len = 0;
    assert_eq!(
        unsafe { racg_pc_dims(pc, dims.as_mut_ptr(), 4, &mut len) },
        RacgStatus::Ok
    );
    assert_eq!((len, dims), (4, [3, 3, 5, 8]));
    // Too small a buffer reports the needed length.
    assert_eq!(
        unsafe { racg_pc_dims(pc, dims.as_mut_ptr(), 2, &mut len) },
        RacgStatus::BufferTooSmall
    );
    assert_eq!(len, 4);

    let word = CString::new("(1,2,1,1)").unwrap();
    let mut coords = [0u8; 8];
    let mut in_gamma = false;
    let st = unsafe {
        racg_express(
            pc,
            word.as_ptr(),
            4,
            coords.as_mut_ptr(),
            8,
            &mut len,
            &mut in_gamma,
        )
    };
    assert_eq!(st, RacgStatus::Ok);
    assert!(in_gamma);
    assert_eq!(coords.iter().map(|&b| b as usize).sum::<usize>(), 1);
    let word = CString::new("(1,2)").unwrap();
    let st = unsafe {
        racg_express(
            pc,
            word.as_ptr(),
            4,
            coords.as_mut_ptr(),
            8,
            &mut len,
            &mut in_gamma,
        )
    };
    assert_eq!(st, RacgStatus::Ok);
    assert!(!in_gamma);

    unsafe {
        racg_pc_free(pc);
        racg_complex_free(k);
    }
}

#[test]
fn homology_and_generators() {
    let mut k = ptr::null_mut();
    assert_eq!(
        unsafe { racg_complex_flag(4, ptr::null(), 0, &mut k) },
        RacgStatus::Ok
    );
    let mut n = 0;
    assert_eq!(unsafe { racg_gscox_count(k, &mut n) }, RacgStatus::Ok);
    assert_eq!(n, 17);
    let (mut free, mut nt) = (0, 0);
    let mut tors = [0u64; 4];
    assert_eq!(
        unsafe { racg_rmk_homology(k, 1, &mut free, tors.as_mut_ptr(), 4, &mut nt) },
        RacgStatus::Ok
    );
    assert_eq!((free, nt), (17, 0));
    unsafe { racg_complex_free(k) };
}

#[test]
fn errors_are_reported() {
    let bad = CString::new(r#"{"m": 3, "faces": [[1, 9]]}"#).unwrap();
    let mut k = ptr::null_mut();
    assert_eq!(
        unsafe { racg_complex_from_json(bad.as_ptr(), &mut k) },
        RacgStatus::InvalidInput
    );
    assert!(last_error().contains("vertex 9"));
    assert_eq!(
        unsafe { racg_complex_from_json(ptr::null(), &mut k) },
        RacgStatus::NullPointer
    );

    let edges = [1u32, 2];
    assert_eq!(
        unsafe { racg_complex_flag(3, edges.as_ptr(), 1, &mut k) },
        RacgStatus::Ok
    );
    let mut pc = ptr::null_mut();
    assert_eq!(
        unsafe { racg_quotient_new(k, 9, &mut pc) },
        RacgStatus::CapExceeded
    );
    unsafe { racg_complex_free(k) };

    let id = CString::new("no-such-claim").unwrap();
    assert_eq!(
        unsafe { racg_verify_claims(id.as_ptr()) },
        RacgStatus::InvalidInput
    );
    let id = CString::new("numbergens3").unwrap();
    assert_eq!(unsafe { racg_verify_claims(id.as_ptr()) }, RacgStatus::Ok);
}

#[test]
fn header_is_generated() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/racg_lcs.h"))
            .unwrap();
    for name in [
        "racg_complex_from_json",
        "racg_pc_dims",
        "RACG_STATUS_BUFFER_TOO_SMALL",
        "typedef struct RacgPc RacgPc",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
