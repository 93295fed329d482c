use std::io::Write;

use fibbin::{
    bootstrap_pvalue_with, fibonacci_bin, power_of_b_bin, sample, scan_xmin_with, size_rank,
    Error, SampleKind, SampleSpec,
};

use crate::cli::{BinArgs, Cli, Command, FitArgs, Law, PlotArgs, SampleArgs, SizerankArgs};
use crate::error::CliError;
use crate::io::{read_table, write_error, writer};
use crate::plot::{figure_name, render, Layer, LayerKind, PlotSpec};

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Bin(args) => bin(args),
        Command::Sizerank(args) => sizerank(args),
        Command::Sample(args) => emit_sample(args),
        Command::Fit(args) => fit(args),
        Command::Plot(args) => plot(args),
    }
}

fn emit(
    path: Option<&str>,
    body: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) -> Result<(), CliError> {
    let mut out = writer(path)?;
    body(&mut out).and_then(|()| out.flush()).map_err(write_error)
}

fn bin(args: BinArgs) -> Result<(), CliError> {
    let table = read_table(args.input.as_deref(), args.raw, args.offset)?;
    let series = match args.base {
        Some(base) => power_of_b_bin(&table, base).map_err(|e| match e {
            Error::InvalidBase(b) => {
                CliError::Numeric(format!("--base {b}: base must be a finite number above 1"))
            }
            other => other.into(),
        })?,
        None => fibonacci_bin(&table)?,
    };
    emit(args.output.as_deref(), |out| {
        if args.header {
            writeln!(out, "# center\tmean")?;
        }
        for p in series.points() {
            if args.drop_empty && p.mean == 0.0 {
                continue;
            }
            writeln!(out, "{}\t{}", p.center, p.mean)?;
        }
        Ok(())
    })
}

fn sizerank(args: SizerankArgs) -> Result<(), CliError> {
    let table = read_table(args.input.as_deref(), args.raw, None)?;
    let series = size_rank(&table);
    let total = table.total_weight();
    emit(args.output.as_deref(), |out| {
        if args.header {
            writeln!(out, "# x\ttail_sum")?;
        }
        for &(x, tail) in series.points() {
            let value = if args.normalize { tail / total } else { tail };
            writeln!(out, "{x}\t{value}")?;
        }
        Ok(())
    })
}

fn emit_sample(args: SampleArgs) -> Result<(), CliError> {
    let kind = match args.law {
        Law::Powerlaw => {
            if args.mean.is_some() {
                return Err(CliError::Usage(
                    "--mean only applies to --law exponential".into(),
                ));
            }
            let alpha = args
                .alpha
                .ok_or_else(|| CliError::Usage("--law powerlaw requires --alpha".into()))?;
            SampleKind::PowerLaw { alpha, xmin: args.xmin }
        }
        Law::Exponential => {
            if args.alpha.is_some() {
                return Err(CliError::Usage(
                    "--alpha only applies to --law powerlaw".into(),
                ));
            }
            let mean = args
                .mean
                .ok_or_else(|| CliError::Usage("--law exponential requires --mean".into()))?;
            SampleKind::Exponential { mean, xmin: args.xmin }
        }
    };
    let observations = sample(&SampleSpec { kind, count: args.n, seed: args.seed })?;
    emit(args.output.as_deref(), |out| {
        for x in observations {
            writeln!(out, "{x}")?;
        }
        Ok(())
    })
}

fn fit(args: FitArgs) -> Result<(), CliError> {
    let table = read_table(args.input.as_deref(), args.raw, None)?;
    let fit = scan_xmin_with(&table, args.min_tail)?;
    let boot = if args.pvalue {
        Some(bootstrap_pvalue_with(
            &table,
            &fit,
            args.replicates,
            args.seed,
            args.min_tail,
        )?)
    } else {
        None
    };
    emit(args.output.as_deref(), |out| {
        writeln!(out, "alpha\t{}", fit.alpha)?;
        writeln!(out, "xmin\t{}", fit.xmin)?;
        writeln!(out, "ks\t{}", fit.ks)?;
        writeln!(out, "tail\t{}", fit.tail_count)?;
        if let Some(b) = boot {
            writeln!(out, "p_value\t{}", b.p_value)?;
            if b.skipped > 0 {
                writeln!(out, "skipped\t{}", b.skipped)?;
            }
        }
        Ok(())
    })
}

fn plot(args: PlotArgs) -> Result<(), CliError> {
    let mut layers = Vec::new();
    for (kind, values) in [
        (LayerKind::RawDots, &args.dots),
        (LayerKind::BinnedLine, &args.binned),
        (LayerKind::SizeRank, &args.sizerank),
        (LayerKind::ModelCurve, &args.model),
    ] {
        for value in values {
            layers.push(Layer::from_flag(kind, value));
        }
    }
    if layers.is_empty() {
        return Err(CliError::Usage(
            "at least one of --dots, --binned, --sizerank or --model is required".into(),
        ));
    }
    let spec = PlotSpec {
        layers,
        log_x: !args.linear_x,
        log_y: !args.linear_y,
        figure: figure_name(args.output.as_deref()),
    };
    let script = render(&spec);
    emit(args.output.as_deref(), |out| out.write_all(script.as_bytes()))
}
