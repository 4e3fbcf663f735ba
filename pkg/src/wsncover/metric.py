"""Coverage-aware link cost and path cost accumulation.

The link cost divides the per-packet delivery energy by the transmit+receive
energy and by the sender's covered area; lower is better. Under the default
lossless link model the delivery energy equals (tx + rx) / delivery_ratio
with delivery_ratio = 1, so the cost reduces to 1 / coverage_area.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def link_cost(delivery_energy: float, tx: float, rx: float,
              coverage_area: float) -> float:
    """Dimensionless link cost: delivery_energy / ((tx + rx) * coverage_area)."""
    if delivery_energy < 0:
        raise ValueError("delivery_energy must be >= 0")
    if tx + rx <= 0 or coverage_area <= 0:
        raise ValueError("degenerate link")
    return delivery_energy / ((tx + rx) * coverage_area)


def delivery_energy(tx: float, rx: float, delivery_ratio: float = 1.0) -> float:
    """Energy spent on a link per successfully delivered packet."""
    if not 0 < delivery_ratio <= 1:
        raise ValueError("delivery_ratio must lie in (0, 1]")
    return (tx + rx) / delivery_ratio


@dataclass(frozen=True)
class LinkCost:
    """One directed link's cost inputs and resulting value."""

    from_node: int
    to_node: int
    delivery_energy: float
    tx: float
    rx: float
    coverage_area: float
    value: float = 0.0

    def __post_init__(self):
        object.__setattr__(
            self, "value",
            link_cost(self.delivery_energy, self.tx, self.rx, self.coverage_area))


def make_link_cost(from_node: int, to_node: int, tx: float, rx: float,
                   coverage_area: float, delivery_ratio: float = 1.0) -> LinkCost:
    return LinkCost(from_node=from_node, to_node=to_node,
                    delivery_energy=delivery_energy(tx, rx, delivery_ratio),
                    tx=tx, rx=rx, coverage_area=coverage_area)


@dataclass(frozen=True)
class PathCost:
    """Loop-free hop sequence with its additive total cost."""

    hops: tuple[int, ...]
    total: float

    def __post_init__(self):
        if len(set(self.hops)) != len(self.hops):
            raise ValueError("path revisits a node")
        if self.total < 0:
            raise ValueError("total must be >= 0")


def accumulate_path_cost(prefix_cost: float, link: LinkCost) -> float:
    if prefix_cost < 0:
        raise ValueError("prefix_cost must be >= 0")
    return prefix_cost + link.value


def packet_energy(per_bit_energies: Sequence[float], packet_bits: float) -> float:
    """Per-packet energy over a path set: sum of per-bit costs times bit count."""
    if packet_bits <= 0:
        raise ValueError("packet_bits must be > 0")
    if any(e < 0 for e in per_bit_energies):
        raise ValueError("per-bit energies must be >= 0")
    return sum(per_bit_energies) * packet_bits
