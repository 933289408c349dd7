import threading
import queue
import logging
from typing import Any, Callable, List, Optional, Sequence

from ..utils.constants import LOGGER_NAME, DEFAULT_WORKERS
from ..utils.error_handler import AppError


class BackgroundTaskRunner:
    """
    Runs a batch of jobs on worker threads and collects their results through a queue.

    Results come back in submission order, so a report built from a parallel
    run is identical to one built sequentially. With a single worker the jobs
    run inline on the calling thread.
    """

    def __init__(self, workers: int = DEFAULT_WORKERS):
        if workers < 1:
            raise ValueError(f"workers must be positive, got {workers}")
        self.workers = workers
        self.logger = logging.getLogger(LOGGER_NAME)
        self.logger.debug(f"BackgroundTaskRunner created with {workers} worker(s).")

    def run(self, jobs: Sequence[Callable[[], Any]]) -> List[Any]:
        """Runs every job and returns their results; re-raises the first failure by index."""
        if self.workers == 1 or len(jobs) <= 1:
            return [job() for job in jobs]

        results_queue: queue.Queue = queue.Queue()
        pending: queue.Queue = queue.Queue()
        for index, job in enumerate(jobs):
            pending.put((index, job))

        threads = []
        for worker_index in range(min(self.workers, len(jobs))):
            thread = threading.Thread(
                target=self._worker, args=(pending, results_queue),
                name=f"BackgroundTask_{worker_index}", daemon=True,
            )
            thread.start()
            threads.append(thread)

        for thread in threads:
            thread.join()

        results: List[Any] = [None] * len(jobs)
        failures = []
        while not results_queue.empty():
            status, index, payload = results_queue.get()
            if status == "success":
                results[index] = payload
            else:
                failures.append((index, payload))

        if failures:
            index, error = min(failures, key=lambda item: item[0])
            self.logger.error(f"Background job {index} failed: {error}")
            raise error
        return results

    def _worker(self, pending: queue.Queue, results_queue: queue.Queue):
        """Wrapper function executed by each thread."""
        while True:
            try:
                index, job = pending.get_nowait()
            except queue.Empty:
                return
            try:
                results_queue.put(("success", index, job()))
            except AppError as e:
                results_queue.put(("error", index, e))
            except Exception as e:
                self.logger.error(f"Error in background job {index}: {e}", exc_info=True)
                results_queue.put(("error", index, e))


_runner: Optional[BackgroundTaskRunner] = None


def get_background_runner(workers: int = DEFAULT_WORKERS) -> BackgroundTaskRunner:
    """Returns a shared runner, recreated when the worker count changes."""
    global _runner
    if _runner is None or _runner.workers != workers:
        _runner = BackgroundTaskRunner(workers)
    return _runner
