"""Session fixtures for the expensive shared objects: the alternating and
symmetric groups on five points, their group algebras over F_5 with radicals
transported up the index-two inclusion, and the principal blocks."""

import pytest

from tautilt.field import Field
from tautilt.grouprep import (PermGroup, central_primitive_idempotents,
                              group_handle, perm_from_cycles, principal_block,
                              seed_radical_from_normal)


@pytest.fixture(scope="session")
def a5_s5():
    s5 = PermGroup(5, [perm_from_cycles(5, [(0, 1)]),
                       perm_from_cycles(5, [(0, 1, 2, 3, 4)])])
    a5 = PermGroup(5, [perm_from_cycles(5, [(0, 1, 2)]),
                       perm_from_cycles(5, [(0, 1, 2, 3, 4)])])
    assert s5.order == 120 and a5.order == 60
    return a5, s5


@pytest.fixture(scope="session")
def f5():
    return Field(5)


@pytest.fixture(scope="session")
def a5_handle(a5_s5, f5):
    h = group_handle(a5_s5[0], f5)
    h.algebra.radical_rows()
    return h


@pytest.fixture(scope="session")
def s5_handle(a5_s5, a5_handle, f5):
    h = group_handle(a5_s5[1], f5)
    assert seed_radical_from_normal(h, a5_handle)
    return h


@pytest.fixture(scope="session")
def b0_a5(a5_handle):
    return principal_block(a5_handle)


@pytest.fixture(scope="session")
def b0_s5(s5_handle):
    return principal_block(s5_handle)
