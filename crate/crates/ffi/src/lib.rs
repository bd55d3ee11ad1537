//! C ABI over `aut-core`.
//!
//! Every entry point returns an [`AutStatus`] and writes results through out
//! pointers. Handles are opaque and owned by the caller, who releases them
//! with the matching `*_free` function. Strings returned by the library are
//! released with [`aut_string_free`]. After a non-`Ok` status,
//! [`aut_last_error`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use aut_core::format::{self, class_names, lasso_class_names, AutomatonFile, DfaFile, LassoFile};
use aut_core::lasso::{lasso_machine, lasso_transition};
use aut_core::laws::{self, Status};
use aut_core::monoid::{m_with_acceptance, t_with_acceptance};
use aut_core::omega::{gamma_equivalent, is_saturated, wilke_transition, WilkeCongruenceRep};
use aut_core::oracle::BoundConfig;
use aut_core::{Alphabet, Error, Lasso};

/// Outcome of a call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutStatus {
    Ok = 0,
    /// A law check found a violation; the result is still written.
    LawFailure = 1,
    Parse = 2,
    SizeGuard = 3,
    /// The input is well formed but unsuitable for the operation.
    Contract = 4,
    NullPointer = 5,
    Utf8 = 6,
    /// A bug in the library; the handle arguments are left untouched.
    Internal = 7,
}

/// Which sort of automaton a handle holds.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutKind {
    Dfa = 0,
    Congruence = 1,
    Lasso = 2,
}

/// A parsed automaton or congruence with its state names.
pub struct AutAutomaton(AutomatonFile);

/// The transition Wilke algebra of a lasso automaton.
pub struct AutWilke(WilkeCongruenceRep);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(AutStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => AutStatus::Parse,
            Error::SizeGuard { .. } => AutStatus::SizeGuard,
            Error::Law(_) => AutStatus::LawFailure,
            _ => AutStatus::Contract,
        };
        Failure(status, e.to_string())
    }
}

fn contract(message: &str) -> Failure {
    Failure(AutStatus::Contract, message.to_string())
}

/// Runs `f`, recording any failure or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<AutStatus, Failure>) -> AutStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Failure(s, m))) => {
            set_error(m);
            s
        }
        Err(_) => {
            set_error("internal error".into());
            AutStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(AutStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(AutStatus::Utf8, e.to_string()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(AutStatus::NullPointer, "null handle".into()))
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(AutStatus::NullPointer, "null out pointer".into()));
    }
    out.write(v);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("interior NULs removed").into_raw()
}

fn boxed(f: AutomatonFile) -> *mut AutAutomaton {
    Box::into_raw(Box::new(AutAutomaton(f)))
}

/// Message for the last failed call on this thread; empty if none. Valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn aut_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn aut_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the line-oriented text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aut_automaton_parse(text: *const c_char, out: *mut *mut AutAutomaton) -> AutStatus {
    guard(|| {
        let f = format::parse(str_arg(text)?)?;
        write_out(out, boxed(f))?;
        Ok(AutStatus::Ok)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn aut_automaton_free(h: *mut AutAutomaton) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aut_automaton_kind(h: *const AutAutomaton, out: *mut AutKind) -> AutStatus {
    guard(|| {
        let kind = match &handle(h)?.0 {
            AutomatonFile::Dfa(_) => AutKind::Dfa,
            AutomatonFile::Congruence(_) => AutKind::Congruence,
            AutomatonFile::Lasso(_) => AutKind::Lasso,
        };
        write_out(out, kind)?;
        Ok(AutStatus::Ok)
    })
}

/// State counts: for a lasso automaton the spoke and loop sorts, otherwise
/// the states (or classes) and zero.
///
/// # Safety
/// `h` must be a live handle; `first` and `second` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aut_automaton_state_counts(
    h: *const AutAutomaton,
    first: *mut usize,
    second: *mut usize,
) -> AutStatus {
    guard(|| {
        let (n1, n2) = match &handle(h)?.0 {
            AutomatonFile::Dfa(d) => (d.dfa.state_count(), 0),
            AutomatonFile::Congruence(c) => (c.raw.class_count, 0),
            AutomatonFile::Lasso(l) => (l.automaton.spoke_count(), l.automaton.loop_count()),
        };
        write_out(first, n1)?;
        write_out(second, n2)?;
        Ok(AutStatus::Ok)
    })
}

/// Renders the handle in the text format; free with [`aut_string_free`].
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aut_automaton_to_string(h: *const AutAutomaton, out: *mut *mut c_char) -> AutStatus {
    guard(|| {
        let text = format::write(&handle(h)?.0);
        write_out(out, c_string(text))?;
        Ok(AutStatus::Ok)
    })
}

/// Membership: a word for a DFA, a lasso `SPOKE:LOOP` for a lasso automaton.
///
/// # Safety
/// `h` must be a live handle, `input` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn aut_accepts(h: *const AutAutomaton, input: *const c_char, out: *mut bool) -> AutStatus {
    guard(|| {
        let input = str_arg(input)?;
        let accepted = match &handle(h)?.0 {
            AutomatonFile::Dfa(d) => {
                let a = d.accepting_dfa()?;
                a.accepts(&a.alphabet().parse_word(input)?)?
            }
            AutomatonFile::Lasso(l) => l.automaton.accepts(&Lasso::parse(l.automaton.alphabet(), input)?)?,
            AutomatonFile::Congruence(_) => return Err(contract("membership needs a dfa or lasso automaton")),
        };
        write_out(out, accepted)?;
        Ok(AutStatus::Ok)
    })
}

/// νC: the machine of the transition congruence of the reachable part,
/// with states named by class representatives.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aut_nuc(h: *const AutAutomaton, out: *mut *mut AutAutomaton) -> AutStatus {
    guard(|| {
        let f = match &handle(h)?.0 {
            AutomatonFile::Dfa(d) => {
                let c = t_with_acceptance(&d.accepting_dfa()?)?;
                let m = m_with_acceptance(&c)?;
                AutomatonFile::Dfa(DfaFile {
                    dfa: m.dfa().clone(),
                    names: class_names(&c),
                    initial: m.initial(),
                    accepting: Some(m.accepting().to_vec()),
                })
            }
            AutomatonFile::Lasso(l) => {
                let c = lasso_transition(&l.automaton)?;
                let (names1, names2) = lasso_class_names(&c);
                AutomatonFile::Lasso(LassoFile {
                    automaton: lasso_machine(&c),
                    names1,
                    names2,
                })
            }
            AutomatonFile::Congruence(_) => return Err(contract("νC needs a dfa or lasso automaton")),
        };
        write_out(out, boxed(f))?;
        Ok(AutStatus::Ok)
    })
}

/// Whether the accepting set of a lasso automaton respects γ-equivalence.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aut_is_saturated(h: *const AutAutomaton, out: *mut bool) -> AutStatus {
    guard(|| match &handle(h)?.0 {
        AutomatonFile::Lasso(l) => {
            write_out(out, is_saturated(&l.automaton)?.is_none())?;
            Ok(AutStatus::Ok)
        }
        _ => Err(contract("saturation needs a lasso automaton")),
    })
}

/// Whether `u v^ω = u' v'^ω`. `alphabet` lists the symbols separated by
/// spaces; lassos are written `SPOKE:LOOP`.
///
/// # Safety
/// All strings must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aut_gamma_equivalent(
    alphabet: *const c_char,
    l1: *const c_char,
    l2: *const c_char,
    out: *mut bool,
) -> AutStatus {
    guard(|| {
        let ab = Alphabet::new(str_arg(alphabet)?.split_whitespace())?;
        let a = Lasso::parse(&ab, str_arg(l1)?)?;
        let b = Lasso::parse(&ab, str_arg(l2)?)?;
        write_out(out, gamma_equivalent(&a, &b))?;
        Ok(AutStatus::Ok)
    })
}

/// Builds the transition Wilke algebra of a lasso automaton, checking its
/// laws. A law violation returns `LawFailure` and no handle.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aut_wilke(h: *const AutAutomaton, out: *mut *mut AutWilke) -> AutStatus {
    guard(|| match &handle(h)?.0 {
        AutomatonFile::Lasso(l) => {
            let w = wilke_transition(&l.automaton)?;
            write_out(out, Box::into_raw(Box::new(AutWilke(w))))?;
            Ok(AutStatus::Ok)
        }
        _ => Err(contract("the Wilke algebra needs a lasso automaton")),
    })
}

/// # Safety
/// `w` must come from [`aut_wilke`] and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn aut_wilke_free(w: *mut AutWilke) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Number of finite-word and infinite-word classes.
///
/// # Safety
/// `w` must be a live handle; `plus` and `up` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aut_wilke_counts(w: *const AutWilke, plus: *mut usize, up: *mut usize) -> AutStatus {
    guard(|| {
        let w = &handle(w)?.0;
        write_out(plus, w.plus_count())?;
        write_out(up, w.up_count())?;
        Ok(AutStatus::Ok)
    })
}

/// Runs every applicable law and writes a JSON array of reports. Returns
/// `LawFailure` (with the report written) when some law fails.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aut_check_laws(h: *const AutAutomaton, out: *mut *mut c_char) -> AutStatus {
    guard(|| {
        let cfg = BoundConfig::default();
        let reports = match &handle(h)?.0 {
            AutomatonFile::Dfa(d) => laws::dfa_suite(&d.accepting_dfa()?, &cfg),
            AutomatonFile::Lasso(l) => {
                let mut r = laws::lasso_suite(&l.automaton, &cfg);
                r.extend(laws::omega_suite(&l.automaton, &cfg));
                r
            }
            AutomatonFile::Congruence(_) => return Err(contract("laws need a dfa or lasso automaton")),
        };
        let json = serde_json::to_string(&reports).expect("reports serialize");
        write_out(out, c_string(json))?;
        if reports.iter().any(|r| r.status == Status::Fail) {
            set_error("some law failed; see the report".into());
            Ok(AutStatus::LawFailure)
        } else {
            Ok(AutStatus::Ok)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn null_arguments_are_reported() {
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { aut_automaton_parse(ptr::null(), &mut out) }, AutStatus::NullPointer);
        assert!(out.is_null());
        let msg = unsafe { CStr::from_ptr(aut_last_error()) };
        assert_eq!(msg.to_str().unwrap(), "null string argument");
    }

    #[test]
    fn parse_errors_map_to_parse() {
        let text = CString::new("type: dfa\n").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { aut_automaton_parse(text.as_ptr(), &mut out) }, AutStatus::Parse);
    }
}
