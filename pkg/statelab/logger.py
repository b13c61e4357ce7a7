"""
Logger implementations for the state-geometry experiments library.

This module provides concrete implementations of the SimulationLogger
protocol for logging simulation events with different storage and
output strategies.
"""

# Module metadata
__author__ = "Mikhail Mikhailov"
__license__ = "MIT"
__version__ = "0.1.0"
__all__ = ["PlainLogger", "ConsoleLogger", "NullLogger", "PandasLogger", "log_event"]

import time
from typing import Any, Dict, List

import pandas as pd

from .types import SimulationEvent, SimulationLog, SimulationLogger


def log_event(
    logger: SimulationLogger, event: SimulationEvent, source: str, **data: Any
) -> None:
    """
    Build a timestamped entry and hand it to ``logger``.

    Args:
        logger: Destination logger
        event: Event type
        source: Name of the emitting component
        **data: Event-specific context
    """
    logger.log(
        SimulationLog(timestamp=time.time(), event=event, source=source, data=data)
    )


class PlainLogger(SimulationLogger):
    """
    Simple logger that stores all log entries in memory.

    This logger maintains an in-memory list of all simulation logs,
    which can be accessed later for analysis or debugging.
    """

    def __init__(self) -> None:
        """
        Initialize an empty PlainLogger.
        """
        self.logs: List[SimulationLog] = []
        """List of all logged simulation entries."""

    def log(self, log_entry: SimulationLog) -> None:
        """
        Store a simulation log entry in memory.

        Args:
            log_entry: The simulation log entry to record
        """
        self.logs.append(log_entry)

    def events(self, event: SimulationEvent) -> List[SimulationLog]:
        """
        Select the stored entries of one event type.

        Args:
            event: Event type to select

        Returns:
            Entries with that event type, in logging order
        """
        return [entry for entry in self.logs if entry.event == event]


class ConsoleLogger(SimulationLogger):
    """
    Logger that prints log entries to the console.

    This logger outputs simulation events to standard output,
    making it useful for real-time monitoring of long runs.
    """

    def __init__(self, verbose: bool = True) -> None:
        """
        Initialize a ConsoleLogger.

        Args:
            verbose: Whether to print detailed log information
        """
        self.verbose = verbose
        """Verbosity setting for log output."""

    def log(self, log_entry: SimulationLog) -> None:
        """
        Print a simulation log entry to the console.

        Non-verbose mode skips per-step entries and prints only the
        event name and source for the rest.

        Args:
            log_entry: The simulation log entry to print
        """
        if self.verbose:
            print(
                f"[{log_entry.timestamp:.6f}] {log_entry.event.value}: "
                f"{log_entry.source} // {log_entry.data}"
            )
        elif log_entry.event != SimulationEvent.STEP:
            print(f"{log_entry.event.value}: {log_entry.source}")


class NullLogger(SimulationLogger):
    """
    Logger that discards all log entries (no-op).

    This logger implements the SimulationLogger protocol but
    performs no actual logging. It's useful for performance
    when logging is not required, e.g. inside Monte Carlo loops.
    """

    def __init__(self) -> None:
        """
        Initialize a NullLogger.
        """
        pass

    def log(self, log_entry: SimulationLog) -> None:
        """
        Discard a simulation log entry (no operation).

        Args:
            log_entry: The simulation log entry to discard
        """
        pass  # Intentionally does nothing


class PandasLogger(SimulationLogger):
    """
    Logger that stores log entries in a pandas DataFrame.

    Event-specific data is flattened into columns, so per-step entries
    of a walk can be filtered and aggregated with ordinary pandas
    operations.
    """

    def __init__(self) -> None:
        """
        Initialize a PandasLogger.
        """
        self._logs: List[SimulationLog] = []
        self.row_data: List[Dict[str, Any]] = []

    def log(self, log_entry: SimulationLog) -> None:
        """
        Store a simulation log entry in a row list.

        Args:
            log_entry: The simulation log entry to record
        """
        self._logs.append(log_entry)
        self.row_data.append(
            {
                "timestamp": log_entry.timestamp,
                "event": log_entry.event.value,
                "source": log_entry.source,
                **log_entry.data,
            }
        )

    def count(self, event: SimulationEvent) -> int:
        """
        Count the stored entries of one event type.

        Args:
            event: Event type to count

        Returns:
            Number of matching entries
        """
        return sum(1 for entry in self._logs if entry.event == event)

    @property
    def dataframe(self) -> pd.DataFrame:
        """
        Get the log data as a pandas DataFrame.

        Returns:
            DataFrame with timestamp, event, source and one column per data key
        """
        frame = pd.DataFrame(self.row_data)
        if frame.empty:
            return pd.DataFrame(columns=["timestamp", "event", "source"])
        return frame
