"""The prime knot table and base prime factor lists."""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Optional, Union

from . import pdcode
from .gamma import SymmetrySubgroup, subgroup_from_name


class PrimeTableError(ValueError):
    """A malformed or inconsistent prime-table file."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f'line {line}: {message}')
        self.line = line


@dataclass(frozen=True)
class PrimeKnotRecord:
    name: str
    crossing_number: int
    table_index: int
    symmetry: SymmetrySubgroup
    diagram: pdcode.PDCode

    @property
    def key(self):
        """Position in the base-type order."""
        return (self.crossing_number, self.table_index)

    def __repr__(self):
        return f'PrimeKnotRecord({self.name}, {self.symmetry.name})'


class PrimeTable:
    """Immutable collection of prime knot records indexed by name."""

    def __init__(self, records: Iterable[PrimeKnotRecord]):
        self.records = tuple(sorted(records, key=lambda r: r.key))
        self._by_name = {}
        keys = set()
        for r in self.records:
            if r.name in self._by_name:
                raise PrimeTableError(f'duplicate name {r.name}')
            if r.key in keys:
                raise PrimeTableError(f'duplicate position {r.crossing_number}_{r.table_index}')
            self._by_name[r.name] = r
            keys.add(r.key)

    def __getitem__(self, name) -> PrimeKnotRecord:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f'no prime knot named {name!r}') from None

    def __contains__(self, name):
        return name in self._by_name

    def __iter__(self) -> Iterator[PrimeKnotRecord]:
        return iter(self.records)

    def __len__(self):
        return len(self.records)


def default_table_path():
    return resources.files('compknot') / 'data' / 'primes9.tsv'


def parse_record(line: str, lineno: Optional[int] = None) -> PrimeKnotRecord:
    fields = line.rstrip('\r\n').split('\t')
    if len(fields) != 5:
        raise PrimeTableError(f'expected 5 tab-separated fields, got {len(fields)}', lineno)
    name, cn, idx, sym, code = fields
    try:
        crossing_number = int(cn)
        table_index = int(idx)
    except ValueError:
        raise PrimeTableError(f'non-integer crossing number or index ({cn!r}, {idx!r})', lineno) from None
    if crossing_number < 1 or table_index < 1:
        raise PrimeTableError('crossing number and index must be positive', lineno)
    try:
        symmetry = subgroup_from_name(sym)
    except ValueError as e:
        raise PrimeTableError(str(e), lineno) from None
    try:
        diagram = pdcode.parse(code)
    except ValueError as e:
        raise PrimeTableError(f'{name}: {e}', lineno) from None
    if diagram.n_crossings != crossing_number:
        raise PrimeTableError(f'{name}: diagram has {diagram.n_crossings} crossings, '
                              f'expected {crossing_number}', lineno)
    return PrimeKnotRecord(name, crossing_number, table_index, symmetry, diagram)


def load(source: Union[str, Path, None] = None) -> PrimeTable:
    """Read a prime-table file (the bundled primes-through-9 table by default)."""
    path = default_table_path() if source is None else Path(source)
    text = path.read_text(encoding='utf-8')
    records = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.startswith('#') or not line.strip():
            continue
        records.append(parse_record(line, lineno))
    return PrimeTable(records)


@dataclass(frozen=True)
class FactorList:
    """A base prime factor list: distinct base types with multiplicities."""

    entries: tuple

    def __post_init__(self):
        entries = tuple((r, int(n)) for r, n in self.entries)
        object.__setattr__(self, 'entries', entries)
        for (a, _), (b, _) in zip(entries, entries[1:]):
            if not a.key < b.key:
                raise ValueError(f'factor records must be strictly increasing, got {a.name} before {b.name}')
        if any(n < 1 for _, n in entries):
            raise ValueError('multiplicities must be positive')
        if sum(n for _, n in entries) < 2:
            raise ValueError('a composite needs at least two prime factors')

    @classmethod
    def from_records(cls, records: Iterable[PrimeKnotRecord]) -> FactorList:
        """Group a multiset of records into a FactorList."""
        counts = {}
        for r in records:
            counts[r] = counts.get(r, 0) + 1
        return cls(tuple(sorted(counts.items(), key=lambda e: e[0].key)))

    @property
    def multiplicities(self):
        return tuple(n for _, n in self.entries)

    @property
    def n_factors(self) -> int:
        return sum(self.multiplicities)

    def slots(self):
        """Records in slot order, repeated by multiplicity."""
        return [r for r, n in self.entries for _ in range(n)]

    def sort_key(self):
        return (total_crossings(self), tuple((r.key, n) for r, n in self.entries))

    def __str__(self):
        return ' # '.join(r.name if n == 1 else f'{r.name}^{n}' for r, n in self.entries)


def total_crossings(P: FactorList) -> int:
    return sum(r.crossing_number * n for r, n in P.entries)


def enumerate_factor_lists(table: PrimeTable, max_crossings: int) -> list:
    """All factor lists with at least two factors whose crossing numbers sum to at most ``max_crossings``."""
    records = list(table)  # sorted by crossing number
    out = []

    def extend(start, chosen, budget):
        if len(chosen) >= 2:
            out.append(FactorList.from_records(chosen))
        for i in range(start, len(records)):
            r = records[i]
            if r.crossing_number > budget:
                break
            chosen.append(r)
            extend(i, chosen, budget - r.crossing_number)
            chosen.pop()

    extend(0, [], max_crossings)
    out.sort(key=FactorList.sort_key)
    return out
