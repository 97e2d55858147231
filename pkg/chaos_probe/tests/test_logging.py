import logging
import multiprocessing
import sys
import warnings
from collections.abc import Iterator
from pathlib import Path

import numpy as np
import pytest
from loguru import logger

from chaos_probe.logging import INTERCEPTED_LOGGERS, configure_logging
from chaos_probe.settings import settings


@pytest.fixture
def routed_messages(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Iterator[list[str]]:
    """
    Run logging configuration and collect what reaches loguru.

    :param tmp_path: pytest temporary directory.
    :param monkeypatch: pytest monkeypatch.
    :yield: messages logged at WARNING and above.
    """
    monkeypatch.setattr(settings, "log_path", str(tmp_path))
    configure_logging()
    messages: list[str] = []
    logger.add(messages.append, level="WARNING", format="{message}")
    yield messages
    logging.captureWarnings(False)
    logger.remove()
    logger.add(sys.stderr)


def test_numpy_warnings_reach_loguru(routed_messages: list[str]) -> None:
    with warnings.catch_warnings(), np.errstate(divide="warn"):
        warnings.simplefilter("always")
        np.log(np.zeros(1))
    assert any("divide by zero" in message for message in routed_messages)


def test_multiprocessing_records_reach_loguru(routed_messages: list[str]) -> None:
    multiprocessing.get_logger().warning("worker 3 exited early")
    assert any("worker 3 exited early" in message for message in routed_messages)
    for name in INTERCEPTED_LOGGERS:
        assert not logging.getLogger(name).propagate
