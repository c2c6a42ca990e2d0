use chebkit_core::approx::{
    default_fourier_rule, default_rule_size, parseval_balance, uniform_grid, DEFAULT_GRID,
};
use chebkit_core::{
    cheb_coefficients, error_metrics, eval_trig, fourier_coefficients, ChebSeries, Evaluable,
    FourierSeries, TargetFn,
};

use crate::config::{Command, Method, RunConfig};
use crate::output::{comment, num, row};
use crate::{verify, CliError, Outcome};

pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    match config.command {
        Command::Verify => Ok(verify::cmd_verify(config)),
        Command::Tabulate => cmd_tabulate(config).map(Outcome::ok),
        Command::Approx => cmd_approx(config).map(Outcome::ok),
        Command::Compare => cmd_compare(config).map(Outcome::ok),
        Command::Parseval => cmd_parseval(config).map(Outcome::ok),
    }
}

/// `x,T0,...,TN` on `samples` uniform points.
pub fn cmd_tabulate(config: &RunConfig) -> Result<String, CliError> {
    let mut out = String::new();
    row(
        &mut out,
        std::iter::once("x".to_string()).chain((0..=config.n).map(|k| format!("T{k}"))),
    );
    for x in uniform_grid(config.samples)? {
        let mut cells = vec![num(x)];
        for k in 0..=config.n {
            cells.push(num(eval_trig(k, x)?));
        }
        row(&mut out, cells);
    }
    Ok(out)
}

fn cheb_fit(config: &RunConfig, target: &TargetFn, n: usize) -> Result<ChebSeries, CliError> {
    let size = config
        .rule_size
        .unwrap_or_else(|| default_rule_size(target, n));
    Ok(cheb_coefficients(target, n, size)?)
}

fn fourier_fit(target: &TargetFn, n: usize) -> Result<FourierSeries, CliError> {
    Ok(fourier_coefficients(target, n, &default_fourier_rule(target)?)?)
}

/// `x,f,approx,abs_error` for one method, then a `# sup_error=...` summary.
pub fn cmd_approx(config: &RunConfig) -> Result<String, CliError> {
    let target = &config.target;
    let fit: Box<dyn Evaluable> = match config.method {
        Method::Chebyshev => Box::new(cheb_fit(config, target, config.n)?),
        Method::Fourier => Box::new(fourier_fit(target, config.n)?),
        Method::Both => return Err(CliError::Usage("approx fits one method".into())),
    };
    let method = match config.method {
        Method::Chebyshev => "chebyshev",
        _ => "fourier",
    };
    let mut out = String::new();
    comment(&mut out, &format!("target={target} method={method} n={}", config.n));
    row(&mut out, ["x", "f", "approx", "abs_error"].map(String::from));
    for x in uniform_grid(config.samples)? {
        let fx = target.eval(x)?;
        let ax = fit.eval(x)?;
        row(&mut out, [num(x), num(fx), num(ax), num((fx - ax).abs())]);
    }
    let m = error_metrics(target, fit.as_ref(), DEFAULT_GRID)?;
    comment(
        &mut out,
        &format!("sup_error={},l2w_error={}", num(m.sup_error), num(m.l2w_error)),
    );
    Ok(out)
}

/// Sup and weighted-L2 errors per method for `N = 0..=n`.
pub fn cmd_compare(config: &RunConfig) -> Result<String, CliError> {
    let target = &config.target;
    let (cheb, fourier) = match config.method {
        Method::Both => (true, true),
        Method::Chebyshev => (true, false),
        Method::Fourier => (false, true),
    };
    let mut out = String::new();
    comment(&mut out, &format!("target={target} grid={DEFAULT_GRID}"));
    let mut header = vec!["n".to_string()];
    if cheb {
        header.extend(["chebyshev_sup", "chebyshev_l2w"].map(String::from));
    }
    if fourier {
        header.extend(["fourier_sup", "fourier_l2w"].map(String::from));
    }
    row(&mut out, header);
    let fourier_rule = default_fourier_rule(target)?;
    for n in 0..=config.n {
        let mut cells = vec![n.to_string()];
        if cheb {
            let m = error_metrics(target, &cheb_fit(config, target, n)?, DEFAULT_GRID)?;
            cells.extend([num(m.sup_error), num(m.l2w_error)]);
        }
        if fourier {
            let s = fourier_coefficients(target, n, &fourier_rule)?;
            let m = error_metrics(target, &s, DEFAULT_GRID)?;
            cells.extend([num(m.sup_error), num(m.l2w_error)]);
        }
        row(&mut out, cells);
    }
    Ok(out)
}

/// `n,function_energy,series_energy,gap` for `N = 0..=n`.
pub fn cmd_parseval(config: &RunConfig) -> Result<String, CliError> {
    let target = &config.target;
    let size = config
        .rule_size
        .unwrap_or_else(|| default_rule_size(target, config.n));
    let mut out = String::new();
    comment(&mut out, &format!("target={target} rule_size={size}"));
    row(
        &mut out,
        ["n", "function_energy", "series_energy", "gap"].map(String::from),
    );
    let mut gaps = Vec::with_capacity(config.n + 1);
    for n in 0..=config.n {
        let fit = cheb_coefficients(target, n, size)?;
        let b = parseval_balance(target, &fit, size)?;
        gaps.push(b.gap());
        row(
            &mut out,
            [n.to_string(), num(b.function_energy), num(b.series_energy), num(b.gap())],
        );
    }
    // adding a term can only lower the gap, up to rounding in the sums
    let non_increasing = gaps.windows(2).all(|w| w[1] <= w[0] + 1e-12);
    comment(&mut out, &format!("non_increasing={non_increasing}"));
    Ok(out)
}
