import math

import numpy as np
import pytest

from g4maxwell import GroupId

ALL_GROUPS = [
    GroupId("G4_I", c=2.0),
    GroupId("G4_I", c=2.7),
    GroupId("G4_II"),
    GroupId("G4_III", alpha=math.pi / 6),
    GroupId("G4_III", alpha=math.pi / 3),
    GroupId("G4_IV"),
    GroupId("G4_V"),
    GroupId("G4_VII"),
    GroupId("G4_VIII"),
]

G4I_C_VALUES = [-1.0, 0.0, 0.5, 1.0, 2.7]


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
