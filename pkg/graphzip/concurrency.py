from __future__ import annotations

import asyncio
import logging
from collections.abc import Callable, Sequence

logger = logging.getLogger(__name__)


async def map_in_threads[T, R](
    fn: Callable[[T], R],
    items: Sequence[T],
    *,
    limit: int = 1,
    on_done: Callable[[int, R], None] | None = None,
) -> list[R]:
    """Run ``fn`` over *items* in worker threads, at most *limit* at a time.

    Results come back in submission order. *on_done* is called with the item
    index and result as each task finishes.
    """
    semaphore = asyncio.Semaphore(max(1, limit))

    async def _guarded(index: int, item: T) -> R:
        async with semaphore:
            result = await asyncio.to_thread(fn, item)
        if on_done is not None:
            on_done(index, result)
        return result

    tasks = [asyncio.create_task(_guarded(i, item)) for i, item in enumerate(items)]
    if not tasks:
        return []
    return list(await asyncio.gather(*tasks))


def run_parallel[T, R](
    fn: Callable[[T], R],
    items: Sequence[T],
    *,
    limit: int = 1,
    on_done: Callable[[int, R], None] | None = None,
) -> list[R]:
    """Blocking wrapper around :func:`map_in_threads`.

    With ``limit == 1`` the items run inline on the calling thread.
    """
    if limit <= 1:
        results: list[R] = []
        for index, item in enumerate(items):
            result = fn(item)
            if on_done is not None:
                on_done(index, result)
            results.append(result)
        return results
    logger.debug("fanning out %d tasks over %d threads", len(items), limit)
    return asyncio.run(map_in_threads(fn, items, limit=limit, on_done=on_done))
