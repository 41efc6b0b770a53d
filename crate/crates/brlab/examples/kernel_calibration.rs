//! The spatial kernel of the square-function symbol as a two-term Bessel expression,
//! compared with an FFT inverse.

use brlab::kernel::{default_calibration, KernelForm, RadialKernel};

fn main() -> brlab::Result<()> {
    for alpha in [1.0, 2.0] {
        for form in [KernelForm::Exact, KernelForm::UnitCoefficient] {
            let c = default_calibration(alpha, form)?;
            println!("α = {alpha}, {form:?}: fitted {:.8}, analytic {:.8}, residual {:.2e}", c.constant, c.analytic, c.residual);
        }
    }
    let k = RadialKernel::new(1.0, 1)?;
    for r in [0.0, 0.5, 1.0, 2.0] {
        println!("K_1({r}) = {:+.10}, K_2({}) = {:+.10}", k.eval(1.0, r), r / 2.0, k.eval(2.0, r / 2.0));
    }
    Ok(())
}
