use super::twist::TwistedMatrix;
use crate::error::Result;

/// Sum over the diagonal of the identity coefficient. Entries of a
/// [`TwistedMatrix`] are in normal form, so the identity is the empty word.
pub fn vn_trace(m: &TwistedMatrix) -> Result<f64> {
    let e = m.entries();
    let mut tr = 0.0;
    for i in 0..m.size() {
        for (w, c) in e.get(i, i).terms() {
            if m.oracle().is_identity(w)? {
                tr += c;
            }
        }
    }
    Ok(tr)
}
