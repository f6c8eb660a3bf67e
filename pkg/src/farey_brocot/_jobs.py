"""Order-preserving task execution, sequential or across processes.

Callers decompose work into a canonical task list that depends only on
the request, never on the worker count; results are reduced in task
order.  Exact values are then trivially identical for any `jobs`, and
floating aggregates are too because each task's sum is computed the
same way wherever it runs.
"""

from __future__ import annotations

from typing import Callable, List, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def run_tasks(fn: Callable[[T], R], tasks: Sequence[T], jobs: int = 1) -> List[R]:
    tasks = list(tasks)
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    try:
        from multiprocessing import get_context

        ctx = get_context("fork")
    except (ImportError, ValueError):
        return [fn(t) for t in tasks]
    with ctx.Pool(min(jobs, len(tasks))) as pool:
        return pool.map(fn, tasks)
