from graphzip.cli.app import main

__all__ = ["main"]
