"""Subcommand implementations: compute result rows and write them."""

import math
from functools import partial
from typing import Any, Dict, List, Tuple

import numpy as np
from loguru import logger

from src.afm.heisenberg import AfmReport, ed_afm_report, exact_afm_report
from src.berry.ed_loop import ed_berry_phase
from src.chain.hamiltonian import chain_operator
from src.chain.spec import Boundary, ChainSpec, ModelKind, StateVector
from src.config import get_settings
from src.entanglement.concurrence import pair_concurrence
from src.fermions.bogoliubov import berry_phase_mode_sum, berry_phase_thermo
from src.fermions.reports import concurrence_from_phase, concurrence_out_of_range
from src.orchestrator.run_config import AfmConfig, BerryLoopConfig, IsingConfig, ToyConfig
from src.orchestrator.sweep import SweepRunner
from src.orchestrator.writers import Row, write_table
from src.solvers.lanczos import LanczosSolver, low_spectrum
from src.toy.adiabatic import adiabatic_geometric_phase
from src.toy.two_spin import ToyParams, analytic_berry_phases, concurrence_theta, mu_factors

TOY_COLUMNS: Tuple[str, ...] = (
    "theta",
    "gamma_plus",
    "gamma_minus",
    "mu_plus_abs",
    "concurrence_analytic",
    "concurrence_from_phase",
    "concurrence_out_of_range",
)
TOY_ADIABATIC_COLUMNS: Tuple[str, ...] = (
    "gamma_plus_numeric",
    "gamma_minus_numeric",
    "leakage",
    "non_adiabatic",
)
ISING_COLUMNS: Tuple[str, ...] = (
    "lambda",
    "gamma_thermo",
    "gamma_modesum_mean",
    "concurrence_phase",
    "concurrence_out_of_range",
)
ISING_ED_COLUMNS: Tuple[str, ...] = (
    "concurrence_wootters_ed",
    "ed_gap",
    "ed_degenerate",
    "wootters_minus_phase",
)
AFM_COLUMNS: Tuple[str, ...] = (
    "source",
    "n",
    "e_g",
    "gamma_af",
    "concurrence",
    "wootters_nn",
    "concurrence_out_of_range",
)
BERRY_LOOP_COLUMNS: Tuple[str, ...] = (
    "n",
    "lambda",
    "steps",
    "gamma_wilson",
    "gamma_modesum",
    "abs_diff",
    "offset_multiple_of_pi",
)


def _warn_out_of_range(rows: List[Row], column: str) -> None:
    for row in rows:
        if row.get("concurrence_out_of_range"):
            logger.warning(f"Concurrence {row.get(column)} outside [0, 1] in row {row}")


# Workers are module level so the process pool can pickle them


def toy_row(
    theta: float, adiabatic: bool, ratio: float, steps: int, field_scale: float
) -> Row:
    gamma_plus, gamma_minus = analytic_berry_phases(theta)
    mu_plus, _ = mu_factors(theta)
    from_phase = concurrence_from_phase(gamma_plus)
    row: Row = {
        "theta": theta,
        "gamma_plus": gamma_plus,
        "gamma_minus": gamma_minus,
        "mu_plus_abs": abs(mu_plus),
        "concurrence_analytic": concurrence_theta(theta),
        "concurrence_from_phase": from_phase,
        "concurrence_out_of_range": concurrence_out_of_range(from_phase),
    }
    if adiabatic:
        params = ToyParams(
            theta=theta, omega0=ratio * field_scale, field_scale=field_scale, steps=steps
        )
        result = adiabatic_geometric_phase(params)
        row.update(
            {
                "gamma_plus_numeric": result.gamma_plus,
                "gamma_minus_numeric": result.gamma_minus,
                "leakage": result.leakage,
                "non_adiabatic": result.non_adiabatic,
            }
        )
    return row


def ising_row(
    lam: float, modes: int, gamma: float, tol: float, ed: bool, n: int, seed: int
) -> Row:
    thermo = berry_phase_thermo(lam, tol=tol, gamma=gamma)
    mode_sum = berry_phase_mode_sum(modes, lam, gamma)
    concurrence = concurrence_from_phase(thermo.gamma)
    row: Row = {
        "lambda": lam,
        "gamma_thermo": thermo.gamma,
        "gamma_modesum_mean": mode_sum.metadata["mean"],
        "concurrence_phase": concurrence,
        "concurrence_out_of_range": concurrence_out_of_range(concurrence),
    }
    if ed:
        row.update(ising_ed_columns(lam, gamma, n, tol, seed, concurrence))
    return row


def ising_ed_columns(
    lam: float, gamma: float, n: int, tol: float, seed: int, concurrence_phase: float
) -> Row:
    """
    Nearest-neighbour Wootters concurrence and spectral gap of the periodic ring.

    When the gap falls below Settings.gap_threshold the ground state is not unique and
    the Wootters columns are left empty, with ed_degenerate set.
    """
    spec = ChainSpec(
        model=ModelKind.TRANSVERSE_XY, n_sites=n, boundary=Boundary.PERIODIC, gamma=gamma, lam=lam
    )
    operator = chain_operator(spec)
    settings = get_settings()
    lowest = low_spectrum(operator.apply, spec.dim, k=2, seed=seed)
    gap = float(lowest[1] - lowest[0])
    if gap < settings.gap_threshold:
        logger.warning(
            f"Ground state of the N={n} ring at lambda={lam} is degenerate (gap {gap:.3e}); "
            "skipping the Wootters concurrence"
        )
        return {
            "concurrence_wootters_ed": None,
            "ed_gap": gap,
            "ed_degenerate": True,
            "wootters_minus_phase": None,
        }

    solver = LanczosSolver(
        tol=tol,
        max_krylov=settings.eigensolver_max_krylov,
        max_restarts=settings.eigensolver_max_restarts,
        seed=seed,
    )
    result = solver.ground_state(operator.apply, spec.dim)
    wootters = pair_concurrence(StateVector(result.vector, n).normalized(), 0, 1)
    return {
        "concurrence_wootters_ed": wootters,
        "ed_gap": gap,
        "ed_degenerate": False,
        "wootters_minus_phase": wootters - concurrence_phase,
    }


def afm_row(report: AfmReport) -> Row:
    return {
        "source": report.source,
        "n": report.n_sites,
        "e_g": report.e_g,
        "gamma_af": report.gamma_af,
        "concurrence": report.concurrence,
        "wootters_nn": report.wootters_nn,
        "concurrence_out_of_range": concurrence_out_of_range(report.concurrence),
    }


def afm_ed_row(n: int, tol: float) -> Row:
    return afm_row(ed_afm_report(n, tol=tol))


def toy_rows(config: ToyConfig) -> List[Row]:
    worker = partial(
        toy_row,
        adiabatic=config.adiabatic,
        ratio=config.ratio,
        steps=config.adiabatic_steps,
        field_scale=config.field_scale,
    )
    rows = SweepRunner(config.jobs).run(worker, config.thetas())
    _warn_out_of_range(rows, "concurrence_from_phase")
    return rows


def ising_rows(config: IsingConfig) -> List[Row]:
    worker = partial(
        ising_row,
        modes=config.modes,
        gamma=config.gamma,
        tol=config.tol,
        ed=config.ed,
        n=config.n,
        seed=config.seed,
    )
    rows = SweepRunner(config.jobs).run(worker, config.lambdas())
    _warn_out_of_range(rows, "concurrence_phase")
    return rows


def afm_rows(config: AfmConfig) -> List[Row]:
    worker = partial(afm_ed_row, tol=config.tol)
    rows = [afm_row(exact_afm_report())] + SweepRunner(config.jobs).run(worker, config.n)
    _warn_out_of_range(rows, "concurrence")
    return rows


def berry_loop_rows(config: BerryLoopConfig) -> List[Row]:
    spec = ChainSpec(
        model=ModelKind.TRANSVERSE_XY,
        n_sites=config.n,
        boundary=Boundary.PERIODIC,
        gamma=config.gamma,
        lam=config.lam,
    )
    settings = get_settings().model_copy(update={"seed": config.seed})
    report = ed_berry_phase(spec, config.steps, tol=config.tol, settings=settings)
    mode_sum = berry_phase_mode_sum(config.n, config.lam, config.gamma).gamma
    difference = report.gamma - mode_sum
    offset = int(np.rint(difference / math.pi))
    if offset:
        logger.info(f"Wilson loop differs from the mode sum by {offset} pi (gauge reference)")
    return [
        {
            "n": config.n,
            "lambda": config.lam,
            "steps": config.steps,
            "gamma_wilson": report.gamma,
            "gamma_modesum": mode_sum,
            "abs_diff": abs(difference - offset * math.pi),
            "offset_multiple_of_pi": offset,
        }
    ]


def cmd_toy(config: ToyConfig) -> int:
    columns = TOY_COLUMNS + (TOY_ADIABATIC_COLUMNS if config.adiabatic else ())
    write_table(toy_rows(config), columns, config.echo(), config.format, config.out)
    return 0


def cmd_ising(config: IsingConfig) -> int:
    columns = ISING_COLUMNS + (ISING_ED_COLUMNS if config.ed else ())
    write_table(ising_rows(config), columns, config.echo(), config.format, config.out)
    return 0


def cmd_afm(config: AfmConfig) -> int:
    write_table(afm_rows(config), AFM_COLUMNS, config.echo(), config.format, config.out)
    return 0


def cmd_berry_loop(config: BerryLoopConfig) -> int:
    rows = berry_loop_rows(config)
    write_table(rows, BERRY_LOOP_COLUMNS, config.echo(), config.format, config.out)
    return 0


COMMANDS: Dict[str, Any] = {
    "toy": (ToyConfig, cmd_toy),
    "ising": (IsingConfig, cmd_ising),
    "afm": (AfmConfig, cmd_afm),
    "berry-loop": (BerryLoopConfig, cmd_berry_loop),
}
