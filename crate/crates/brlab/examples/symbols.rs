//! Radial bilinear symbols and the exponent bookkeeping.

use brlab::symbols::{alpha_p, critical_exponent, ExponentTriple, SymbolDescriptor};

fn main() -> brlab::Result<()> {
    let symbols = [
        SymbolDescriptor::bochner_riesz(1.0, 2.0)?,
        SymbolDescriptor::square_kernel(1.0, 2.0)?,
        SymbolDescriptor::schrodinger(0.5, 1.0)?,
        SymbolDescriptor::spherical(-0.5, 1, 1.0)?,
        SymbolDescriptor::gfunction(0.7)?,
        SymbolDescriptor::AnnulusPiece { j: 3 },
    ];
    for m in &symbols {
        let row: Vec<String> = [0.0, 0.8, 0.875, 2.0, 3.5].iter().map(|u| format!("{:+.4}", m.eval_radial(*u).re)).collect();
        println!("{m:?}: {}", row.join(" "));
    }
    let t = ExponentTriple::parse("4/3", "4")?;
    println!("1/p = {}, p = {}", t.inv_p(), t.p());
    println!("α(p) at n = 2, p = 1: {}", alpha_p(2, 1.0)?);
    for n in 2..=5 {
        println!("critical exponent n = {n}: {}", critical_exponent(n)?);
    }
    Ok(())
}
