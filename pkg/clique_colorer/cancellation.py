import threading
import time

from clique_colorer.exceptions import Cancelled


class CancelToken:
    """
    Cooperative cancellation for long searches. A token fires when
    cancel() is called or when its deadline has passed.
    """

    def __init__(self, deadline=None):
        self.deadline = deadline
        self._event = threading.Event()

    @classmethod
    def with_timeout(cls, seconds):
        if seconds is None or seconds <= 0:
            return cls()
        return cls(time.monotonic() + seconds)

    def cancel(self):
        self._event.set()

    @property
    def cancelled(self):
        if self._event.is_set():
            return True
        return self.deadline is not None and time.monotonic() >= self.deadline

    def check(self):
        if self.cancelled:
            raise Cancelled("search cancelled")


def check(token):
    if token is not None:
        token.check()
