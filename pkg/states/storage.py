"""JSON storage for states: {"d": int, "p": float (optional), "a": [float, ...]}.

Coefficients in a file may be unnormalized; they are normalized on load.
"""
import json
import logging
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, Field

from errors import DimensionMismatchError
from states.depolarized import DepolarizedState
from states.schmidt import SchmidtVector

logger = logging.getLogger(__name__)


class StateFile(BaseModel):
    """On-disk representation of a state."""

    d: int = Field(ge=2)
    p: Optional[float] = Field(None, ge=0.0, le=1.0)
    a: list[float] = Field(min_length=2)

    def to_schmidt(self) -> SchmidtVector:
        if len(self.a) != self.d:
            raise DimensionMismatchError(f"State file declares d={self.d} but lists {len(self.a)} coefficients")
        return SchmidtVector.from_unnormalized(self.a, d=self.d)

    def to_state(self, p: Optional[float] = None) -> DepolarizedState:
        """Build the depolarized state; an explicit p overrides the file's.

        Raises:
            ValueError: If neither the file nor the caller supplies p
        """
        weight = p if p is not None else self.p
        if weight is None:
            raise ValueError("No p given: pass --p or add \"p\" to the state file")
        return DepolarizedState(schmidt=self.to_schmidt(), p=weight)


def save_state(
    state: Union[DepolarizedState, SchmidtVector],
    path: Path,
) -> Path:
    """Save a state (or bare Schmidt vector) as JSON with normalized coefficients.

    Args:
        state: DepolarizedState, or a SchmidtVector to store without p
        path: Destination file

    Returns:
        Path to the saved file
    """
    path = Path(path)
    if isinstance(state, DepolarizedState):
        record = StateFile(d=state.d, p=state.p, a=list(state.schmidt.a))
    else:
        record = StateFile(d=state.d, a=list(state.a))

    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(record.model_dump(), f, indent=2)
    logger.info(f"Saved state to {path}")
    return path


def load_state(path: Path) -> StateFile:
    """Load a state file.

    Raises:
        FileNotFoundError: If the file doesn't exist
        pydantic.ValidationError: If the JSON does not match the state schema
    """
    path = Path(path)
    with open(path, "r", encoding="utf-8") as f:
        data = json.load(f)
    return StateFile.model_validate(data)
