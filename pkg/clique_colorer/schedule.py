import sched
import sys
import threading
import time
import traceback

from clique_colorer.logging import logger


class ProgressTicker(threading.Thread):
    """
    Daemon thread running a callback every few seconds until stopped,
    used to report progress of long sweeps
    """

    def __init__(self, fun, seconds):
        super().__init__(daemon=True)
        self.running = True
        self.seconds = seconds
        self.scheduler = sched.scheduler(time.time, time.sleep)
        self._exec_periodically(fun, seconds)

    def _exec_periodically(self, fun, seconds, priority=1):
        def sched_fun():
            try:
                fun()
            except Exception:
                logger.error(
                    "An exception happened while reporting progress:\n"
                    f"{''.join(traceback.format_exception(*sys.exc_info()))}"
                )
            finally:
                if self.running:
                    self.scheduler.enter(seconds, priority, sched_fun)

        self.scheduler.enter(seconds, priority, sched_fun)

    def run(self):
        while self.running:
            self.scheduler.run(blocking=False)
            time.sleep(min(1, self.seconds))

    def stop(self):
        self.running = False
        for event in self.scheduler.queue:
            try:
                self.scheduler.cancel(event)
            except ValueError:
                pass

    def __enter__(self):
        self.start()
        return self

    def __exit__(self, *exc):
        self.stop()
        return False
