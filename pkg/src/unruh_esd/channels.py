"""Single-qubit Kraus channels and their two-qubit liftings.

The three noise models are amplitude damping (parameter ``p1``), phase
damping (``p2``) and depolarizing (``p3``). A single-qubit channel can be
placed locally on Alice or Rob (tensored with the identity on the other
qubit) or collectively on both, in which case every ordered pair
``E_q (x) E_q'`` of single-qubit operators becomes a two-qubit operator.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError
from .qmat import I2, as_matrix

COMPLETENESS_TOL = 1e-12


class ChannelKind(enum.Enum):
    AMPLITUDE_DAMPING = "amplitude_damping"
    PHASE_DAMPING = "phase_damping"
    DEPOLARIZING = "depolarizing"


class Placement(enum.Enum):
    ALICE_LOCAL = "alice"
    ROB_LOCAL = "rob"
    COLLECTIVE = "collective"


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """An ordered Kraus set ``operators[k]`` (shape ``(n, d, d)``).

    ``placement`` is ``None`` for a bare single-qubit channel.
    """

    kind: ChannelKind
    p: float
    operators: np.ndarray
    placement: Placement | None = None

    def __post_init__(self):
        ops = np.asarray(self.operators, dtype=complex)
        if ops.ndim != 3 or ops.shape[1] != ops.shape[2]:
            raise DimensionError(f"Kraus operators must stack to (n, d, d), got {ops.shape}")
        ops.setflags(write=False)
        object.__setattr__(self, "operators", ops)

    @property
    def dim(self) -> int:
        return self.operators.shape[1]

    def __len__(self) -> int:
        return self.operators.shape[0]

    def completeness_defect(self) -> float:
        """``max |sum_k E_k^dag E_k - I|`` over entries."""
        s = np.einsum("kji,kjl->il", self.operators.conj(), self.operators)
        return float(np.max(np.abs(s - np.eye(self.dim))))


def _check_probability(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"decoherence parameter must lie in [0, 1], got {p!r}")
    return p


def make_channel(kind: ChannelKind, p: float) -> KrausChannel:
    """Single-qubit Kraus operators for ``kind`` at decoherence parameter ``p``."""
    kind = ChannelKind(kind)
    p = _check_probability(p)
    if kind is ChannelKind.AMPLITUDE_DAMPING:
        ops = [[[1, 0], [0, np.sqrt(1 - p)]], [[0, np.sqrt(p)], [0, 0]]]
    elif kind is ChannelKind.PHASE_DAMPING:
        ops = [[[1, 0], [0, np.sqrt(1 - p)]], [[0, 0], [0, np.sqrt(p)]]]
    else:
        a, b = np.sqrt(1 - p), np.sqrt(p / 3)
        ops = [
            a * np.eye(2),
            b * np.array([[0, 1], [1, 0]]),
            b * np.array([[0, -1j], [1j, 0]]),
            b * np.array([[1, 0], [0, -1]]),
        ]
    return KrausChannel(kind, p, np.array(ops, dtype=complex))


def _require_single_qubit(ch: KrausChannel) -> None:
    if ch.placement is not None or ch.dim != 2:
        raise DimensionError("channel is already lifted to two qubits")


def _stack_kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker products of every ``a[i]`` with every ``b[j]``, ``i`` outer."""
    n, m = len(a), len(b)
    return np.einsum("aij,bkl->abikjl", a, b).reshape(n * m, 4, 4)


def lift_local(ch: KrausChannel, target: Placement) -> KrausChannel:
    """Act with ``ch`` on one qubit and the identity on the other."""
    _require_single_qubit(ch)
    target = Placement(target)
    if target is Placement.ALICE_LOCAL:
        ops = _stack_kron(ch.operators, I2[None])
    elif target is Placement.ROB_LOCAL:
        ops = _stack_kron(I2[None], ch.operators)
    else:
        raise ValueError("use lift_collective for collective placement")
    return KrausChannel(ch.kind, ch.p, ops, target)


def lift_collective(ch: KrausChannel) -> KrausChannel:
    """All ``n**2`` ordered products ``E_q (x) E_q'`` sharing one parameter."""
    _require_single_qubit(ch)
    return KrausChannel(ch.kind, ch.p, _stack_kron(ch.operators, ch.operators),
                        Placement.COLLECTIVE)


def apply(ch: KrausChannel, rho) -> np.ndarray:
    """``sum_k E_k rho E_k^dag``."""
    rho = as_matrix(rho)
    if rho.shape[0] != ch.dim:
        raise DimensionError(f"{ch.dim}-dim channel cannot act on a {rho.shape[0]}-dim state")
    ops = ch.operators
    return np.einsum("kij,jl,kml->im", ops, rho, ops.conj())


def apply_global(rho, alice: KrausChannel | None = None, rob: KrausChannel | None = None,
                 collective: KrausChannel | None = None) -> np.ndarray:
    """Alice-local, then Rob-local, then collective noise; ``None`` skips a stage."""
    out = as_matrix(rho, 4)
    for ch in (alice, rob, collective):
        if ch is None:
            continue
        if ch.dim != 4:
            raise DimensionError("global evolution needs channels lifted to two qubits")
        out = apply(ch, out)
    return out
