from __future__ import annotations

import os
from pathlib import Path

import pytest

from deltacliques import parse_link_stream

from helpers import FOURLINK_TEXT


@pytest.fixture
def fourlink():
    """The four-link example stream with its explicit [0, 9] span."""
    return parse_link_stream(FOURLINK_TEXT, explicit_span=(0, 9))


@pytest.fixture
def fourlink_default_span():
    return parse_link_stream(FOURLINK_TEXT)


def thiers_dataset_path() -> Path | None:
    """The high-school contact trace, if the user provides it."""
    env = os.environ.get("THIERS_DATASET")
    if env:
        p = Path(env)
        if p.exists():
            return p
    default = Path(__file__).resolve().parent.parent / "data" / "thiers_highschool.csv"
    if default.exists():
        return default
    return None
