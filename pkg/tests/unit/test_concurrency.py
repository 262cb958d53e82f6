from __future__ import annotations

import threading
import time

from graphzip.concurrency import map_in_threads, run_parallel


class TestMapInThreads:
    async def test_keeps_submission_order(self) -> None:
        def slow_square(x: int) -> int:
            time.sleep(0.01 * (5 - x))
            return x * x

        assert await map_in_threads(slow_square, range(5), limit=5) == [
            0,
            1,
            4,
            9,
            16,
        ]

    async def test_respects_the_limit(self) -> None:
        active = 0
        peak = 0
        lock = threading.Lock()

        def track(_: int) -> None:
            nonlocal active, peak
            with lock:
                active += 1
                peak = max(peak, active)
            time.sleep(0.01)
            with lock:
                active -= 1

        await map_in_threads(track, list(range(8)), limit=2)
        assert peak <= 2

    async def test_reports_each_result(self) -> None:
        seen: list[tuple[int, str]] = []
        await map_in_threads(
            str, [7, 8], limit=2, on_done=lambda i, r: seen.append((i, r))
        )
        assert sorted(seen) == [(0, "7"), (1, "8")]

    async def test_no_items(self) -> None:
        assert await map_in_threads(str, []) == []


class TestRunParallel:
    def test_inline_when_single_threaded(self) -> None:
        caller = threading.get_ident()
        idents = run_parallel(lambda _: threading.get_ident(), [1, 2, 3])
        assert idents == [caller] * 3

    def test_threaded(self) -> None:
        assert run_parallel(lambda x: x + 1, [1, 2, 3], limit=3) == [2, 3, 4]
