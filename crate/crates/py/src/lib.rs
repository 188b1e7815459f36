use pyo3::prelude::*;

#[pymodule]
fn quiverlab_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
