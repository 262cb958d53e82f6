from __future__ import annotations

import logging
import os
import sys
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum
from types import TracebackType
from typing import Protocol, Self, TextIO

from rich.console import Console, RenderableType
from rich.live import Live
from rich.spinner import Spinner
from rich.table import Table
from rich.text import Text

logger = logging.getLogger(__name__)

_ANSI_CODES = {
    "bold": "1",
    "dim": "2",
    "red": "31",
    "green": "32",
    "yellow": "33",
    "cyan": "36",
}

_COLOR = not os.environ.get("NO_COLOR") and getattr(sys.stdout, "isatty", bool)()


def paint(style: str, text: str) -> str:
    """Wrap *text* in the ANSI code for *style* when stdout is a color terminal."""
    if not _COLOR:
        return text
    return f"\033[{_ANSI_CODES[style]}m{text}\033[0m"


def _mark(symbol: str, style: str, msg: str, stream: TextIO | None = None) -> None:
    print(f"  {paint(style, symbol)} {msg}", file=stream)


def header(title: str) -> None:
    print(f"\n{paint('bold', title)}")


def success(msg: str) -> None:
    _mark("✓", "green", msg)


def warn(msg: str) -> None:
    _mark("!", "yellow", msg)


def error(msg: str) -> None:
    _mark("✗", "red", msg, sys.stderr)


def info(msg: str) -> None:
    print(f"  {msg}")


def kv(key: str, value: object) -> None:
    print(f"  {paint('dim', f'{key}:')}  {value}")


def next_step(command: str, description: str = "") -> None:
    """Suggest a follow-up command."""
    suffix = f"  {paint('dim', description)}" if description else ""
    print(f"    {paint('cyan', command)}{suffix}")


def print_table(
    title: str, columns: Sequence[str], rows: Sequence[Sequence[object]]
) -> None:
    """Render a right-aligned numeric table; the first column is a label."""
    table = Table(title=title, title_justify="left")
    for i, column in enumerate(columns):
        table.add_column(column, justify="left" if i == 0 else "right")
    for row in rows:
        table.add_row(*(str(cell) for cell in row))
    Console(no_color=not _COLOR).print(table)


class TaskState(StrEnum):
    PENDING = "pending"
    DONE = "done"


@dataclass
class _Row:
    label: str
    state: TaskState = TaskState.PENDING
    detail: str = ""


def _apply(
    rows: dict[str, _Row], task_id: str, state: TaskState, detail: str
) -> _Row | None:
    """Record a state change; ``None`` when the row is unknown or unchanged."""
    row = rows.get(task_id)
    if row is None:
        return None
    effective_detail = detail or row.detail
    if row.state == state and row.detail == effective_detail:
        return None
    row.state = state
    row.detail = effective_detail
    return row


class TaskReporter(Protocol):
    def update(self, task_id: str, state: TaskState, *, detail: str = "") -> None: ...
    def __enter__(self) -> Self: ...
    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc_val: BaseException | None,
        exc_tb: TracebackType | None,
    ) -> None: ...


class LogTaskReporter:
    def __init__(self, tasks: Sequence[tuple[str, str]]) -> None:
        self._rows = {task_id: _Row(label) for task_id, label in tasks}

    def __enter__(self) -> Self:
        for task_id, row in self._rows.items():
            logger.info("[%s] %s: %s", task_id, row.label, row.state)
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc_val: BaseException | None,
        exc_tb: TracebackType | None,
    ) -> None:
        pass

    def update(self, task_id: str, state: TaskState, *, detail: str = "") -> None:
        row = _apply(self._rows, task_id, state, detail)
        if row is None:
            return
        if row.detail:
            logger.info("[%s] %s: %s (%s)", task_id, row.label, state, row.detail)
        else:
            logger.info("[%s] %s: %s", task_id, row.label, state)


class TaskStatusSpinner:
    def __init__(self, tasks: Sequence[tuple[str, str]]) -> None:
        self._rows = {task_id: _Row(label) for task_id, label in tasks}
        self._console = Console()
        self._live: Live | None = None

    def __enter__(self) -> Self:
        self._live = Live(
            self._render(),
            console=self._console,
            refresh_per_second=12,
            transient=False,
        )
        self._live.__enter__()
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc_val: BaseException | None,
        exc_tb: TracebackType | None,
    ) -> None:
        if self._live is not None:
            self._live.__exit__(exc_type, exc_val, exc_tb)
            self._live = None
            self._console.print("")

    def update(self, task_id: str, state: TaskState, *, detail: str = "") -> None:
        if _apply(self._rows, task_id, state, detail) is None:
            return
        if self._live is not None:
            self._live.update(self._render(), refresh=True)

    def _render(self) -> Table:
        table = Table.grid(padding=(0, 1), expand=True)
        table.add_column(width=2, no_wrap=True)
        table.add_column(width=28, no_wrap=True)
        table.add_column(width=10)
        table.add_column(ratio=1)
        for row in self._rows.values():
            done = row.state is TaskState.DONE
            indicator: RenderableType = (
                Text("✓", style="green") if done else Spinner("dots", style="cyan")
            )
            table.add_row(
                indicator,
                row.label,
                Text(row.state.title(), style="bold green" if done else "cyan"),
                Text(row.detail, style="dim") if row.detail else Text(""),
            )
        return table


def create_reporter(tasks: Sequence[tuple[str, str]]) -> TaskReporter:
    """Live table on a terminal, log lines otherwise."""
    if sys.stdout.isatty():
        return TaskStatusSpinner(tasks)
    return LogTaskReporter(tasks)
