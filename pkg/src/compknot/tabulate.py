"""Composite knot tables, names, census counts and output formats."""
from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field

from . import pdcode
from .gamma import IDENTITY, MIRROR, MIRROR_REVERSE, REVERSE, SYMMETRY_NAMES, GammaElement
from .orbits import orbits_all
from .primes import FactorList, PrimeTable, enumerate_factor_lists, total_crossings

FLAVOR_SUFFIX = {IDENTITY: '', MIRROR: 'm', REVERSE: 'r', MIRROR_REVERSE: 'mr'}
SUFFIX_FLAVOR = {v: k for k, v in FLAVOR_SUFFIX.items()}

COLUMNS = ('name', 'crossings', 'factors', 'flavors', 'symmetry', 'orbit_size', 'pdcode')


def flavor_token(g: GammaElement) -> str:
    return f'({g.eps0},{g.eps1})'


def flavor_from_suffix(suffix: str) -> GammaElement:
    try:
        return SUFFIX_FLAVOR[suffix]
    except KeyError:
        raise ValueError(f'unknown flavor {suffix!r}; expected one of "", m, r, mr') from None


@dataclass(frozen=True)
class TableRow:
    composite_name: str
    crossing_number: int
    factors: FactorList
    representative: tuple
    symmetry: str
    orbit_size: int

    def slots(self):
        """(record, flavor) pairs in slot order."""
        flavors = [g for block in self.representative for g in block]
        return list(zip(self.factors.slots(), flavors))


@dataclass
class Census:
    by_type: dict = field(default_factory=lambda: dict.fromkeys(SYMMETRY_NAMES, 0))
    by_crossing_and_type: dict = field(default_factory=dict)
    total: int = 0

    def crossing_numbers(self):
        return sorted({c for c, _ in self.by_crossing_and_type})

    def row(self, crossings):
        return {name: self.by_crossing_and_type.get((crossings, name), 0) for name in SYMMETRY_NAMES}


def composite_name(factors: FactorList, representative) -> str:
    flavors = [g for block in representative for g in block]
    return ' # '.join(r.name + FLAVOR_SUFFIX[g] for r, g in zip(factors.slots(), flavors))


def tabulate(table: PrimeTable, max_crossings: int = 12) -> list:
    rows = []
    for P in enumerate_factor_lists(table, max_crossings):
        for cls in orbits_all(P, with_symmetry=True):
            rows.append(TableRow(composite_name(P, cls.representative), total_crossings(P), P,
                                 cls.representative, cls.symmetry.name, cls.orbit_size))
    rows.sort(key=lambda r: (r.crossing_number, r.factors.sort_key(), r.representative))
    return rows


def census(rows) -> Census:
    by_type = Counter(r.symmetry for r in rows)
    by_cross = Counter((r.crossing_number, r.symmetry) for r in rows)
    return Census({name: by_type.get(name, 0) for name in SYMMETRY_NAMES}, dict(by_cross), len(rows))


def composite_pdcode(row: TableRow, table: PrimeTable = None) -> pdcode.PDCode:
    """Diagram of the row's composite: the flavored base diagrams summed in slot order.

    ``table`` (optional) supplies the base diagrams by name; otherwise the
    row's own records are used.
    """
    parts = []
    for record, g in row.slots():
        base = table[record.name].diagram if table is not None else record.diagram
        parts.append(pdcode.apply_gamma(g, base))
    return pdcode.connected_sum_list(parts)


def row_dict(row: TableRow, include_pdcode: bool = False) -> dict:
    d = {
        'name': row.composite_name,
        'crossings': row.crossing_number,
        'factors': ' '.join(r.name for r in row.factors.slots()),
        'flavors': ' '.join(flavor_token(g) for _, g in row.slots()),
        'symmetry': row.symmetry,
        'orbit_size': row.orbit_size,
    }
    if include_pdcode:
        d['pdcode'] = pdcode.serialize(composite_pdcode(row))
    return d


def to_csv(rows, include_pdcode: bool = False) -> str:
    columns = COLUMNS if include_pdcode else COLUMNS[:-1]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow(row_dict(row, include_pdcode))
    return buf.getvalue()


def to_json(rows, include_pdcode: bool = False) -> str:
    return json.dumps([row_dict(r, include_pdcode) for r in rows], indent=1) + '\n'


def format_census(c: Census) -> str:
    width = max(len(n) for n in SYMMETRY_NAMES)
    lines = [f'total {c.total}']
    lines += [f'{name:<{width}} {c.by_type[name]}' for name in SYMMETRY_NAMES]
    lines.append('crossings ' + ' '.join(SYMMETRY_NAMES))
    for n in c.crossing_numbers():
        counts = c.row(n)
        lines.append(f'{n:>9} ' + ' '.join(f'{counts[name]:>{len(name)}}' for name in SYMMETRY_NAMES))
    return '\n'.join(lines) + '\n'

