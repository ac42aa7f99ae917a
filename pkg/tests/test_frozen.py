import mpmath
import pytest
from conftest import assert_digits
from frozen import FROZEN, val

import oracles as O


def _oracle(name):
    third = mpmath.mpf(1) / 3
    table = {
        "li2_quarter": lambda: O.li_series(2, mpmath.mpf(1) / 4, 60),
        "catalan": lambda: O.catalan_ramanujan(60),
        "zeta3": lambda: O.zeta3_apery(60),
        "li21_quarter": lambda: O.nested_li((2, 1), mpmath.mpf(1) / 4, 60),
        "li211_half": lambda: O.nested_li((2, 1, 1), mpmath.mpf(1) / 2, 60),
        "ti4_inv_sqrt3": lambda: O.ti_series(4, mpmath.sqrt(third), 60),
        "cl2_pi3": lambda: mpmath.clsin(2, mpmath.pi / 3),
        "mu1": lambda: mpmath.clsin(2, mpmath.pi / 3) / mpmath.pi,
        "dilog_2_half": lambda: O.mahler2_quad(2, mpmath.mpf(1) / 2, 60),
        "rho4_two": lambda: O.rho_quad(4, 2, 60),
        "rho4_inv_sqrt2": lambda: O.rho_quad(4, 1 / mpmath.sqrt(2), 60),
        "ls4_1_pi": lambda: O.ls_mpquad(4, mpmath.pi, 60, k=1),
    }
    return table[name]


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_oracle_reproduces_frozen_value(name):
    with mpmath.workdps(70):
        assert_digits(val(name), _oracle(name)(), 55)
