"""
Subsemigroups of T_3
====================

All 282 conjugacy classes, their ranks, and the sizes returned by the
ordered greedy algorithm, next to the published grid.
"""

from transgen import enumerate_subsemigroups_T3, table1, table1_diff

classes = enumerate_subsemigroups_T3()
print(len(classes), 'classes')

for convention in ('semigroup', 'monoid'):
    rows = table1('descending', classes, convention=convention)
    print(convention, 'rank counts:', [r.class_count for r in rows])
    for row in rows:
        print('  rank', row.rank, row.output_size_histogram)

rows = table1('descending', classes)
for d in table1_diff(rows):
    if d['delta']:
        print('rank', d['rank'], 'size', d['output_size'],
              'computed', d['computed'], 'published', d['published'])

# ascending order makes Greedy pick low elements first and inflates the output
_, asc = table1('ascending', classes, details=True)
_, desc = table1('descending', classes, details=True)
print('mean output size: descending', round(sum(s for _, s in desc) / 282, 3),
      ' ascending', round(sum(s for _, s in asc) / 282, 3))
