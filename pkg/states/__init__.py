"""Depolarized d x d states, their reductions and reduction-criterion matrices."""
from states.depolarized import (
    DepolarizedState,
    density_matrix,
    f_d,
    rc_matrix_blocks,
    rc_matrix_direct,
    reduced_state,
)
from states.schmidt import SchmidtVector
from states.storage import StateFile, load_state, save_state

__all__ = [
    # Types
    "SchmidtVector",
    "DepolarizedState",
    "StateFile",
    # Construction
    "f_d",
    "density_matrix",
    "reduced_state",
    "rc_matrix_blocks",
    "rc_matrix_direct",
    # Storage
    "save_state",
    "load_state",
]
