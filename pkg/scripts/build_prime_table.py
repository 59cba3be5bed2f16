"""Regenerate src/compknot/data/primes9.tsv from the KnotInfo database.

Needs the ``database_knotinfo`` package (not a runtime dependency)::

    pip install database_knotinfo
    python scripts/build_prime_table.py > src/compknot/data/primes9.tsv

KnotInfo PD codes are unsigned and follow the usual X[i,j,k,l] convention
(start at the incoming under-edge, counterclockwise, k = i + 1). Signs are
recovered from label consecutiveness along the over-strand.
"""
import csv
import json
import os
import sys

import database_knotinfo

SYMMETRY_TOKENS = {
    'chiral': 'none',
    'reversible': 'invertible',
    'positive amphicheiral': 'pos_amphichiral',
    'negative amphicheiral': 'neg_amphichiral',
    'fully amphicheiral': 'full',
}

# The standard trefoil diagram drawn in the source paper; same diagram as
# KnotInfo's 3_1 up to a relabeling, kept so the worked sum reproduces exactly.
TREFOIL = '[[4,-2,-5,1],[2,-6,-3,5],[6,-4,-1,3]]'


def signed_quad(quad, n_edges):
    i, j, k, l = quad
    if l == j % n_edges + 1:
        return [i, j, -k, -l]
    return [i, -j, -k, l]


def main(max_crossings=9):
    path = os.path.join(os.path.dirname(database_knotinfo.__file__),
                        'csv_data', 'knotinfo_data_complete.csv')
    print('# name\tcrossing_number\ttable_index\tsymmetry\tpd_code')
    print('# source: KnotInfo (symmetry_type, pd_notation); 3_1 uses the standard figure diagram')
    with open(path, newline='') as f:
        for row in csv.DictReader(f, delimiter='|'):
            cn = row['crossing_number']
            if not cn.isdigit() or not 3 <= int(cn) <= max_crossings:
                continue
            name = row['name']
            quads = json.loads(row["pd_notation"])
            n_edges = 2 * len(quads)
            code = '[' + ','.join('[' + ','.join(map(str, signed_quad(q, n_edges))) + ']'
                                  for q in quads) + ']'
            if name == '3_1':
                code = TREFOIL
            index = name.split('_')[1]
            print('\t'.join([name, cn, index, SYMMETRY_TOKENS[row['symmetry_type']], code]))


if __name__ == '__main__':
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 9)
