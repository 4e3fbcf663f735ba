"""First-order radio energy model and per-node energy ledgers.

Transmit cost is electronics plus a distance-dependent amplifier term,
receive cost is electronics only, and decoding just a packet header is
charged per header bit. All functions return Joules.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class RadioParams:
    """Radio constants: electronics J/bit, amplifier J/bit/m^rho, sizes in bits."""

    e_elect: float = 70e-9
    e_amp: float = 120e-12
    rho: float = 2.0
    header_bits: int = 20
    data_packet_bits: int = 4096

    def __post_init__(self):
        if self.e_elect <= 0:
            raise ValueError("e_elect must be > 0")
        if self.e_amp < 0:
            raise ValueError("e_amp must be >= 0")
        if self.rho not in (2, 4):
            raise ValueError("rho must be 2 or 4")
        if self.header_bits <= 0:
            raise ValueError("header_bits must be > 0")
        if self.data_packet_bits <= 0:
            raise ValueError("data_packet_bits must be > 0")


@dataclass(frozen=True)
class EnergyLedger:
    """Battery state of one node; residual is clamped at zero, never negative."""

    node_id: int
    initial: float
    residual: float
    alive: bool = True

    def __post_init__(self):
        if self.initial < 0:
            raise ValueError("initial energy must be >= 0")
        if not 0 <= self.residual <= self.initial:
            raise ValueError("residual must lie in [0, initial]")

    @property
    def spent(self) -> float:
        return self.initial - self.residual


def new_ledger(node_id: int, initial: float) -> EnergyLedger:
    return EnergyLedger(node_id=node_id, initial=initial, residual=initial,
                        alive=initial > 0)


def tx_energy(params: RadioParams, distance: float, payload_bytes: float) -> float:
    """Energy to transmit a payload over a distance: (e_elect + e_amp*d^rho) per bit."""
    if distance < 0:
        raise ValueError("distance must be >= 0")
    if payload_bytes < 0:
        raise ValueError("payload_bytes must be >= 0")
    return (params.e_elect + params.e_amp * distance ** params.rho) * 8.0 * payload_bytes


def rx_energy(params: RadioParams, payload_bytes: float) -> float:
    """Energy to receive a payload: electronics only."""
    if payload_bytes < 0:
        raise ValueError("payload_bytes must be >= 0")
    return params.e_elect * 8.0 * payload_bytes


def header_rx_energy(params: RadioParams) -> float:
    """Energy to decode only the packet header (electronics per header bit)."""
    return params.e_elect * params.header_bits


def broadcast_energy(params: RadioParams, distance: float, payload_bytes: float,
                     intended_receivers: int, neighbors_in_range: int) -> float:
    """Total energy of one broadcast across sender and neighborhood.

    ``intended_receivers`` neighbors decode the full payload; the remaining
    neighbors in range decode only the header.
    """
    n, total = intended_receivers, neighbors_in_range
    if n < 0 or total < 0:
        raise ValueError("receiver counts must be >= 0")
    if n > total:
        raise ValueError("receiver count exceeds neighborhood")
    return (tx_energy(params, distance, payload_bytes)
            + n * rx_energy(params, payload_bytes)
            + (total - n) * header_rx_energy(params))


def charge(ledger: EnergyLedger, amount: float) -> EnergyLedger:
    """Deduct energy from a ledger, clamping at zero.

    A node whose residual hits zero is dead for all subsequent rounds;
    charging an already-dead node signals a simulator logic bug.
    """
    if amount < 0:
        raise ValueError("charge amount must be >= 0")
    if not ledger.alive:
        raise ValueError(f"charge on dead node {ledger.node_id}")
    residual = max(0.0, ledger.residual - amount)
    return replace(ledger, residual=residual, alive=residual > 0)
