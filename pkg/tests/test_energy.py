import math

import pytest
from hypothesis import given, strategies as st

from wsncover.energy import (
    EnergyLedger,
    RadioParams,
    broadcast_energy,
    charge,
    header_rx_energy,
    new_ledger,
    rx_energy,
    tx_energy,
)

PARAMS = RadioParams(e_elect=70e-9, e_amp=120e-12, rho=2, header_bits=20,
                     data_packet_bits=4096)


def rel_err(a, b):
    return abs(a - b) / abs(b)


class TestTxEnergy:
    def test_zero_distance_kills_amplifier_term(self):
        # 70e-9 * 8 * 512 = 2.8672e-4
        assert rel_err(tx_energy(PARAMS, 0.0, 512), 2.8672e-4) < 1e-12

    def test_sixty_meter_packet(self):
        # hand evaluation: (70e-9 + 120e-12*3600) * 4096
        expected = (70e-9 + 120e-12 * 60.0**2) * 8 * 512
        assert expected == pytest.approx(2.056192e-3, rel=1e-12)
        assert rel_err(tx_energy(PARAMS, 60.0, 512), 2.056192e-3) < 1e-12

    def test_zero_payload(self):
        assert tx_energy(PARAMS, 100.0, 0) == 0.0

    def test_negative_inputs_rejected(self):
        with pytest.raises(ValueError):
            tx_energy(PARAMS, -1.0, 10)
        with pytest.raises(ValueError):
            tx_energy(PARAMS, 1.0, -10)

    @given(st.floats(0, 1e4), st.floats(0, 1e4))
    def test_monotone_in_distance(self, d1, d2):
        lo, hi = sorted((d1, d2))
        assert tx_energy(PARAMS, lo, 512) <= tx_energy(PARAMS, hi, 512)

    @given(st.integers(0, 10_000), st.integers(1, 64))
    def test_linear_in_payload(self, nbytes, k):
        one = tx_energy(PARAMS, 37.5, nbytes)
        assert tx_energy(PARAMS, 37.5, k * nbytes) == pytest.approx(k * one, rel=1e-9, abs=1e-30)


class TestRxEnergy:
    def test_512_bytes(self):
        assert rel_err(rx_energy(PARAMS, 512), 2.8672e-4) < 1e-12

    def test_zero_bytes(self):
        assert rx_energy(PARAMS, 0) == 0.0

    def test_one_byte(self):
        assert rel_err(rx_energy(PARAMS, 1), 5.6e-7) < 1e-12


class TestHeaderRxEnergy:
    def test_twenty_bit_header(self):
        assert rel_err(header_rx_energy(PARAMS), 1.4e-6) < 1e-12

    def test_header_matching_payload_equals_rx(self):
        p = RadioParams(e_elect=70e-9, e_amp=120e-12, rho=2, header_bits=8 * 16)
        assert header_rx_energy(p) == rx_energy(p, 16)


class TestBroadcastEnergy:
    def test_all_receivers_decode_payload(self):
        e = broadcast_energy(PARAMS, 10.0, 512, intended_receivers=4,
                             neighbors_in_range=4)
        expected = tx_energy(PARAMS, 10.0, 512) + 4 * rx_energy(PARAMS, 512)
        assert e == pytest.approx(expected, rel=1e-12)

    def test_header_only_neighbors(self):
        e = broadcast_energy(PARAMS, 10.0, 512, intended_receivers=0,
                             neighbors_in_range=3)
        expected = tx_energy(PARAMS, 10.0, 512) + 3 * header_rx_energy(PARAMS)
        assert e == pytest.approx(expected, rel=1e-12)

    def test_mixed_neighborhood_hand_value(self):
        # 2.8672e-4 + 2*2.8672e-4 + 3*1.4e-6, cross-checked against the three ops
        e = broadcast_energy(PARAMS, 0.0, 512, intended_receivers=2,
                             neighbors_in_range=5)
        parts = (tx_energy(PARAMS, 0.0, 512) + 2 * rx_energy(PARAMS, 512)
                 + 3 * header_rx_energy(PARAMS))
        assert e == pytest.approx(parts, rel=1e-12)
        assert e == pytest.approx(8.6436e-4, rel=1e-12)

    def test_receiver_count_exceeding_neighborhood(self):
        with pytest.raises(ValueError, match="exceeds neighborhood"):
            broadcast_energy(PARAMS, 1.0, 10, intended_receivers=4,
                             neighbors_in_range=3)

    @given(st.integers(0, 20))
    def test_full_vs_none_difference_identity(self, n):
        full = broadcast_energy(PARAMS, 25.0, 128, n, n)
        none = broadcast_energy(PARAMS, 25.0, 128, 0, n)
        gap = n * (rx_energy(PARAMS, 128) - header_rx_energy(PARAMS))
        assert full - none == pytest.approx(gap, rel=1e-9, abs=1e-30)


class TestLedger:
    def test_zero_charge_is_identity(self):
        led = new_ledger(7, 5.0)
        after = charge(led, 0.0)
        assert after.residual == 5.0 and after.alive

    def test_clamp_to_zero_kills(self):
        led = EnergyLedger(node_id=1, initial=5.0, residual=1e-6)
        after = charge(led, 2e-6)
        assert after.residual == 0.0 and not after.alive

    def test_plain_subtraction(self):
        led = EnergyLedger(node_id=1, initial=5.0, residual=0.5)
        after = charge(led, 2.8672e-4)
        assert after.residual == pytest.approx(0.49971328, rel=1e-12)

    def test_charging_dead_node_is_an_error(self):
        led = EnergyLedger(node_id=9, initial=1.0, residual=0.0, alive=False)
        with pytest.raises(ValueError, match="charge on dead node"):
            charge(led, 0.1)

    def test_negative_charge_rejected(self):
        with pytest.raises(ValueError):
            charge(new_ledger(0, 1.0), -0.1)

    @given(st.lists(st.floats(0, 0.4), max_size=20))
    def test_residual_non_increasing_and_spent_bounded(self, amounts):
        led = new_ledger(3, 2.0)
        prev = led.residual
        for amt in amounts:
            if not led.alive:
                break
            led = charge(led, amt)
            assert led.residual <= prev
            prev = led.residual
        assert 0.0 <= led.spent <= led.initial


class TestRadioParamsValidation:
    def test_bad_rho(self):
        with pytest.raises(ValueError):
            RadioParams(rho=3)

    def test_bad_e_elect(self):
        with pytest.raises(ValueError):
            RadioParams(e_elect=0.0)

    def test_bad_sizes(self):
        with pytest.raises(ValueError):
            RadioParams(header_bits=0)
        with pytest.raises(ValueError):
            RadioParams(data_packet_bits=0)
