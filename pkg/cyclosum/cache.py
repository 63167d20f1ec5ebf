"""Module for persisting expensive results between runs."""

from typing import Any, Dict, Optional
import hashlib
import json
import logging
import os
import tempfile

__all__ = ["ResultCache"]

logger = logging.getLogger(__name__)


class ResultCache:
    """
    JSON files under `directory`, one per (command, parameters,
    tool_version). A file that cannot be read is treated as a miss, and a
    result that cannot be written is dropped with a warning.
    """
    def __init__(self, directory: str, tool_version: str) -> None:
        self.directory = directory
        self.tool_version = tool_version

    def key(self, command: str, parameters: Dict[str, Any]) -> str:
        blob = json.dumps([command, parameters, self.tool_version],
                          sort_keys=True)
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()

    def path(self, command: str, parameters: Dict[str, Any]) -> str:
        digest = self.key(command, parameters)
        return os.path.join(self.directory, f"{command}-{digest[:24]}.json")

    def get(self, command: str,
            parameters: Dict[str, Any]) -> Optional[Dict[str, Any]]:
        path = self.path(command, parameters)
        try:
            with open(path, "r", encoding="utf-8") as f:
                entry = json.load(f)
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as err:
            logger.warning("ignoring unreadable cache entry %s: %s", path, err)
            return None

        if not isinstance(entry, dict):
            logger.warning("ignoring malformed cache entry %s", path)
            return None
        if (entry.get("command") != command
                or entry.get("parameters") != parameters
                or entry.get("tool_version") != self.tool_version):
            logger.warning("ignoring mismatched cache entry %s", path)
            return None
        logger.info("cache hit for %s %s", command, parameters)
        return entry.get("result")

    def put(self, command: str, parameters: Dict[str, Any],
            result: Dict[str, Any]) -> None:
        path = self.path(command, parameters)
        entry = {
            "command": command,
            "parameters": parameters,
            "tool_version": self.tool_version,
            "result": result,
        }
        try:
            self._write(path, entry)
        except OSError as err:
            logger.warning("could not cache %s %s at %s: %s", command,
                           parameters, path, err)
            return
        logger.debug("cached %s %s at %s", command, parameters, path)

    def _write(self, path: str, entry: Dict[str, Any]) -> None:
        os.makedirs(self.directory, exist_ok=True)
        fd, temp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump(entry, f, sort_keys=True)
            os.replace(temp, path)
        except BaseException:
            if os.path.exists(temp):
                os.remove(temp)
            raise
