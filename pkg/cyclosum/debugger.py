"""Module for tracing search engine runs. Not intended for public use."""

import functools
import inspect
import os
import sys

from .config import DEBUG_ENV
from .exception import CyclosumException


def _describe(value) -> str:
    try:
        return f"{len(value)} items"
    except TypeError:
        return repr(value)


def debugger(klass):  # pragma: no cover
    if not bool(os.getenv(DEBUG_ENV)):
        return klass

    def decorator(method):
        @functools.wraps(method)
        def debugged_run(self, *args, **kwargs):
            if not hasattr(self, "debug_depth"):
                self.debug_depth = 0

            if not hasattr(self, "debug_call_id"):
                self.debug_call_id = 0

            self.debug_call_id += 1
            prefix = f"{self.debug_call_id:05d}"
            indent = "-" * self.debug_depth
            name = f"{klass.__name__}.{method.__name__}"
            arguments = ", ".join(map(repr, args))
            sys.stderr.write(f"{prefix} {indent}> {name}({arguments})\n")

            self.debug_depth += 1
            ret = None
            last_err = None
            try:
                ret = method(self, *args, **kwargs)
            except CyclosumException as err:
                last_err = err
                raise
            finally:
                ret_str = f", result: {_describe(ret)}" if ret is not None else ""
                err_str = f", error: {last_err!s}" if last_err else ""
                sys.stderr.write(
                    f"{prefix} <{indent} {name}({arguments}){ret_str}{err_str}\n")
                self.debug_depth -= 1
                if self.debug_depth == 0:
                    sys.stderr.write("\n")
            return ret

        return debugged_run

    for name, func in inspect.getmembers(klass, inspect.isfunction):
        if not name.startswith("run"):
            continue
        setattr(klass, name, decorator(func))
    return klass
