use pyo3::prelude::*;

#[pymodule]
fn selfsim_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
