import pytest

from compknot import primes
from compknot.pdcode import parse
from compknot.primes import PrimeKnotRecord, PrimeTable
from compknot.gamma import subgroup_from_name

TREFOIL = '[[4,-2,-5,1],[2,-6,-3,5],[6,-4,-1,3]]'

# KnotInfo's 12a_427, the first positive amphichiral knot; not in the shipped table.
KNOT_12A_427 = ('[[1,-5,-2,4],[3,10,-4,-11],[5,18,-6,-19],[7,-13,-8,12],[9,-17,-10,16],'
                '[11,2,-12,-3],[13,-23,-14,22],[15,-9,-16,8],[17,24,-18,-1],[19,6,-20,-7],'
                '[21,-15,-22,14],[23,20,-24,-21]]')


@pytest.fixture(scope='session')
def table():
    return primes.load()


@pytest.fixture
def trefoil():
    return parse(TREFOIL)


def make_test_table(shipped):
    """Six knots covering all five symmetry types."""
    records = [shipped[name] for name in ('3_1', '4_1', '5_1', '8_17', '9_32')]
    records.append(PrimeKnotRecord('12a_427', 12, 427, subgroup_from_name('pos_amphichiral'),
                                   parse(KNOT_12A_427)))
    return PrimeTable(records)


@pytest.fixture(scope='session')
def test_table(table):
    return make_test_table(table)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section('acceptance criteria')
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
