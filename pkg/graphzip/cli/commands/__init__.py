from __future__ import annotations

from graphzip.cli.base import BaseCommand, CommandGroup
from graphzip.cli.commands.benchmark import BenchmarkCommand
from graphzip.cli.commands.compress import CompressCommand, DecompressCommand
from graphzip.cli.commands.config import ConfigGroup
from graphzip.cli.commands.generate import GenerateGroup
from graphzip.cli.commands.select import ExperimentCommand, SelectCommand
from graphzip.cli.commands.train import TrainCommand

TOP_LEVEL_COMMANDS: list[type[BaseCommand]] = [
    CompressCommand,
    DecompressCommand,
    TrainCommand,
    BenchmarkCommand,
    SelectCommand,
    ExperimentCommand,
]

COMMAND_GROUPS: list[type[CommandGroup]] = [
    GenerateGroup,
    ConfigGroup,
]
