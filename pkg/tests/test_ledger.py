"""Tests for the discrepancy ledger: the record of series coefficients whose
classical limits contradict an independent oracle, with the adopted reading."""

import json
import math

import pytest

from pr3bp import SystemParams, derive_params
from pr3bp.expansion import cubic_coeffs, quad_coeffs
from pr3bp.ledger import (
    CORE_ENTRY_NAMES,
    LedgerEntry,
    ledger_as_dicts,
    standard_ledger,
)

EXPECTED_NAMES = [
    "quad_g_gamma_constant",
    "quad_g_gamma_eps_term",
    "quad_e_eps_pair",
    "h2_y_squared_term",
    "cubic_sign_convention",
    "cubic_t2_classical",
    "cubic_t3_classical",
    "j24_mode2_factors",
    "angle_rate_mode2",
    "orbit_y_final_term",
    "linear_shift_leading_one",
    "series_l1_coordinate_terms",
    "locate_linear_drag_terms",
]


def test_entry_count_and_names():
    L = standard_ledger()
    assert [e.name for e in L] == EXPECTED_NAMES


def test_names_unique():
    names = [e.name for e in standard_ledger()]
    assert len(names) == len(set(names))


def test_core_names_are_a_subset():
    names = {e.name for e in standard_ledger()}
    assert set(CORE_ENTRY_NAMES) <= names
    assert len(CORE_ENTRY_NAMES) == 6


def test_entries_are_immutable():
    e = standard_ledger()[0]
    with pytest.raises(Exception):
        e.name = "other"


def test_fresh_list_each_call():
    a = standard_ledger()
    a.clear()
    assert len(standard_ledger()) == 13


def test_every_entry_records_both_sides():
    for e in standard_ledger():
        assert e.series_value is not None, e.name
        assert e.oracle_value is not None, e.name
        assert e.adopted_value is not None, e.name
        assert isinstance(e.note, str) and len(e.note) > 20, e.name


class TestNumericEntries:
    def _by_name(self, name):
        for e in standard_ledger():
            if e.name == name:
                return e
        raise KeyError(name)

    def test_quad_g_constant_matches_library(self):
        # The adopted xy coefficient is what quad_coeffs actually returns
        # classically; the as-printed bracket would give zero.
        e = self._by_name("quad_g_gamma_constant")
        d = derive_params(SystemParams(mu=0.01, q1=1.0, a2=0.0, w1_override=0.0))
        assert e.series_value == 0.0
        assert e.adopted_value == e.oracle_value
        assert e.adopted_value == pytest.approx(quad_coeffs(d).g, abs=1e-15)
        assert e.adopted_value == pytest.approx(-(3.0 * math.sqrt(3.0) / 4.0) * 0.98, abs=1e-13)

    def test_quad_e_eps_pair_values(self):
        # d(E)/d(eps) at gamma = 0.98: printed pair gives (-6 + 2g)/16,
        # the oracle-confirmed pair gives (-2 + 6g)/16.
        e = self._by_name("quad_e_eps_pair")
        assert e.series_value == pytest.approx((-6.0 + 2.0 * 0.98) / 16.0, abs=1e-15)
        assert e.adopted_value == pytest.approx((-2.0 + 6.0 * 0.98) / 16.0, abs=1e-15)
        assert e.adopted_value == e.oracle_value

    def test_quad_e_eps_slope_matches_library(self):
        e = self._by_name("quad_e_eps_pair")
        h = 1e-7
        d0 = derive_params(SystemParams(mu=0.01, q1=1.0, a2=0.0, w1_override=0.0))
        d1 = derive_params(SystemParams(mu=0.01, q1=1.0 - h, a2=0.0, w1_override=0.0))
        slope = (quad_coeffs(d1).e - quad_coeffs(d0).e) / h
        assert slope == pytest.approx(e.adopted_value, abs=1e-7)

    def test_cubic_t2_flag(self):
        # Adopted = as printed; oracle = the mixed third partial it would
        # correspond to.  Both sides kept, no silent correction.
        e = self._by_name("cubic_t2_classical")
        d = derive_params(SystemParams(mu=0.01, q1=1.0, a2=0.0, w1_override=0.0))
        assert e.adopted_value == e.series_value
        assert e.adopted_value == pytest.approx(cubic_coeffs(d).t2, abs=1e-14)
        assert e.oracle_value == pytest.approx(-3.0 * math.sqrt(3.0) / 8.0, abs=1e-14)
        assert abs(e.series_value - e.oracle_value) > 1.0  # genuinely different

    def test_cubic_t3_flag(self):
        e = self._by_name("cubic_t3_classical")
        d = derive_params(SystemParams(mu=0.01, q1=1.0, a2=0.0, w1_override=0.0))
        assert e.adopted_value == e.series_value
        assert e.adopted_value == pytest.approx(cubic_coeffs(d).t3, abs=1e-14)
        assert e.oracle_value == pytest.approx(-(33.0 * 0.98) / 8.0, abs=1e-13)


class TestSerialization:
    def test_dicts_match_entries(self):
        L = standard_ledger()
        dicts = ledger_as_dicts()
        assert len(dicts) == len(L)
        for e, row in zip(L, dicts):
            assert row["name"] == e.name
            assert row["series_value"] == e.series_value
            assert row["oracle_value"] == e.oracle_value
            assert row["adopted_value"] == e.adopted_value
            assert row["note"] == e.note

    def test_keys_exact(self):
        for row in ledger_as_dicts():
            assert set(row) == {
                "name",
                "series_value",
                "oracle_value",
                "adopted_value",
                "note",
            }

    def test_json_round_trip(self):
        text = json.dumps(ledger_as_dicts())
        back = json.loads(text)
        assert [r["name"] for r in back] == EXPECTED_NAMES
