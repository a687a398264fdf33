use zeta_sieve::critline::factors;
use zeta_sieve::funceq::pq_coefficients;
use zeta_sieve::specfun::{gamma_complex, zeta_strip};
use zeta_sieve::{ComplexValue, StripPoint};

use crate::args::EvalArgs;
use crate::error::CliResult;

fn complex(z: ComplexValue) -> String {
    format!("{:.17e} {:+.17e}i", z.re, z.im)
}

/// Prints ζ, Γ, P, Q at the point and `N`, `D_R`, `D_I` at `1/2 + iρ`.
pub fn run(args: &EvalArgs) -> CliResult<()> {
    let p = StripPoint::new(args.sigma, args.rho)?;
    let z = zeta_strip(p, Default::default())?;
    let pq = pq_coefficients(p)?;
    println!("sigma  {}", p.sigma());
    println!("rho    {}", p.rho());
    println!("zeta   {}", complex(z.value));
    println!("gamma  {}", complex(gamma_complex(p)?));
    println!("P      {:.17e}", pq.p);
    println!("Q      {:.17e}", pq.q);
    if p.rho() > 0.0 {
        let f = factors(p.rho())?;
        println!("N      {:.17e}", f.n);
        println!("D_R    {:.17e}", f.dr);
        println!("D_I    {:.17e}", f.di);
    } else {
        println!("N      n/a");
        println!("D_R    n/a");
        println!("D_I    n/a");
    }
    Ok(())
}
