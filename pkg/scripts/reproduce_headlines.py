#!/usr/bin/env python3
"""
Headline reproduction script.

Computes the critical Berry phase of the transverse Ising chain, the
concurrences derived from it and from exact diagonalization, and the
antiferromagnetic chain values, and logs them next to the reference numbers.
"""

import math
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from loguru import logger

from src.afm import ed_afm_report, exact_afm_report
from src.config import get_settings
from src.config.logging_config import setup_logging
from src.fermions import berry_phase_thermo, concurrence_from_phase
from src.orchestrator.commands import ising_ed_columns
from src.toy import concurrence_theta

ISING_ED_SITES = 12
AFM_ED_SITES = 12


def main() -> None:
    """Compute and log the headline values."""
    settings = get_settings()
    setup_logging(settings)

    logger.info("=" * 80)
    logger.info("Reproducing headline values")
    logger.info("=" * 80)

    try:
        logger.info("\n[1/3] Transverse Ising chain at the critical point")
        critical = berry_phase_thermo(1.0, tol=settings.quadrature_tol)
        phase_concurrence = concurrence_from_phase(critical.gamma)
        logger.info(f"  - Berry phase:          {critical.gamma:.10f}")
        logger.info(f"  - pi - 2:               {math.pi - 2:.10f}")
        logger.info(f"  - Concurrence |G|/2pi:  {phase_concurrence:.7f} (reference .18)")

        ed = ising_ed_columns(
            1.0, 1.0, ISING_ED_SITES, settings.eigensolver_tol, settings.seed, phase_concurrence
        )
        if ed["ed_degenerate"]:
            logger.warning(f"  - N={ISING_ED_SITES} ring is degenerate, gap {ed['ed_gap']:.3e}")
        else:
            logger.info(
                f"  - Wootters, N={ISING_ED_SITES}:      {ed['concurrence_wootters_ed']:.7f} "
                "(reference .1946)"
            )
            logger.info(f"  - Wootters minus phase: {ed['wootters_minus_phase']:+.7f}")

        logger.info("\n[2/3] Heisenberg antiferromagnet")
        exact = exact_afm_report()
        finite = ed_afm_report(AFM_ED_SITES)
        logger.info(f"  - Exact e_g:            {exact.e_g:.10f}")
        logger.info(f"  - Exact concurrence:    {exact.concurrence:.10f} (2 ln2 - 1 = 0.386)")
        logger.info(f"  - ED e_g, N={AFM_ED_SITES}:        {finite.e_g:.10f}")
        logger.info(f"  - ED Wootters, N={AFM_ED_SITES}:   {finite.wootters_nn:.10f}")

        logger.info("\n[3/3] Two-spin model")
        logger.info(f"  - C(pi/2) frustrated:   {concurrence_theta(math.pi / 2):.3f}")
        logger.info(f"  - C(pi) maximal:        {concurrence_theta(math.pi):.3f}")

        logger.info("\n" + "=" * 80)
        logger.info("✅ Headline values computed")
        logger.info("=" * 80)

    except Exception as e:
        logger.error(f"❌ Reproduction failed: {e}")
        logger.exception(e)
        sys.exit(1)


if __name__ == "__main__":
    main()
