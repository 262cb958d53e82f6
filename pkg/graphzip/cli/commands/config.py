from __future__ import annotations

import argparse

from graphzip.cli import output as out
from graphzip.cli.base import BaseCommand, CommandGroup
from graphzip.cli.config import config_path, load_config_with_sources


class ConfigShowCommand(BaseCommand):
    name = "show"
    help = "Show current settings and where each value comes from"

    async def execute(self, args: argparse.Namespace) -> None:
        cfg, sources = load_config_with_sources()

        def badge(attr: str) -> str:
            src = sources.get(attr, "default")
            if src == "env":
                return out.paint("cyan", "[env]")
            if src == "file":
                return out.paint("dim", "[file]")
            return out.paint("dim", "[default]")

        out.header(f"Configuration ({config_path()})")
        print()
        out.kv("Worker threads", f"{cfg.threads} {badge('threads')}")
        out.kv("Data directory", f"{cfg.data_dir} {badge('data_dir')}")
        out.kv("Glasso tolerance", f"{cfg.glasso_tol:g} {badge('glasso_tol')}")
        out.kv(
            "Glasso max sweeps",
            f"{cfg.glasso_max_iter} {badge('glasso_max_iter')}",
        )
        out.kv(
            "Covariance normalization",
            f"{cfg.covariance_normalization} {badge('covariance_normalization')}",
        )
        out.kv("Standardize columns", f"{cfg.standardize} {badge('standardize')}")

        print()
        out.info(
            f"{out.paint('cyan', '[env]')} = set by environment variable  "
            f"{out.paint('dim', '[file]')} = from config file  "
            f"{out.paint('dim', '[default]')} = built-in default"
        )
        print()


class ConfigPathCommand(BaseCommand):
    name = "path"
    help = "Print config file location"

    async def execute(self, args: argparse.Namespace) -> None:
        print(config_path())


class ConfigGroup(CommandGroup):
    name = "config"
    help = "show · path: view settings"
    subcommands = [
        ConfigShowCommand,
        ConfigPathCommand,
    ]
