"""Command orchestration: run configs, sweeps and table output."""

from .commands import COMMANDS, cmd_afm, cmd_berry_loop, cmd_ising, cmd_toy
from .run_config import AfmConfig, BerryLoopConfig, IsingConfig, OutputFormat, ToyConfig
from .sweep import SweepRunner

__all__ = [
    "COMMANDS",
    "AfmConfig",
    "BerryLoopConfig",
    "IsingConfig",
    "OutputFormat",
    "SweepRunner",
    "ToyConfig",
    "cmd_afm",
    "cmd_berry_loop",
    "cmd_ising",
    "cmd_toy",
]
