import logging
import sys
import traceback

import colorama


class ConsoleHandler(logging.Handler):
    def __init__(self, stream=None):
        """
        Logging Handler which echoes warning, error and critical
        logs to the console with a colored emoji prefix
        """
        super().__init__(level=logging.WARNING)
        self.stream = stream

    def emit(self, record):
        if record.levelno == logging.WARNING:
            emoji, color = "⚠️", colorama.Fore.YELLOW
        elif record.levelno == logging.ERROR:
            emoji, color = "❌", colorama.Fore.RED
        elif record.levelno == logging.CRITICAL:
            emoji, color = "☠️", colorama.Fore.RED + colorama.Style.BRIGHT
        else:
            return
        message = f"{emoji} {record.levelname.title()} : {record.getMessage()}"
        stream = self.stream if self.stream is not None else sys.stderr
        try:
            stream.write(f"{color}{message}{colorama.Style.RESET_ALL}\n")
            stream.flush()
        except Exception:
            self.handleError(record)


logging.basicConfig(
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s", level=logging.INFO
)
logger = logging.getLogger("clique_colorer")
logger.addHandler(ConsoleHandler())


def set_verbosity(verbose=False, quiet=False):
    if verbose:
        logger.setLevel(logging.DEBUG)
    elif quiet:
        logger.setLevel(logging.WARNING)
    else:
        logger.setLevel(logging.INFO)


def if_exception_log(message=None, level=logging.ERROR, raise_error=True):
    """
    Decorator to use on functions we want to handle errors.
    We can simply log them, optionally include the
    traceback in the log message by inserting %{e},
    and eventually raise the caught error afterwards
    """

    def _f_if_exception_log(fun):
        def _exec_if_exception_fun(*args, **kwargs):
            result = None
            try:
                result = fun(*args, **kwargs)
            except Exception as e:
                if message is not None:
                    logger.log(
                        level,
                        message.replace(
                            "%{e}",
                            f"\n{''.join(traceback.format_exception(*sys.exc_info()))}",
                        ).rstrip("\n"),
                    )
                if raise_error:
                    raise e
            return result

        _exec_if_exception_fun.__name__ = fun.__name__
        _exec_if_exception_fun.__doc__ = fun.__doc__
        return _exec_if_exception_fun

    return _f_if_exception_log
