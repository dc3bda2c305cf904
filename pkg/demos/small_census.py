"""Run a small seeded census of plane cubics over F_7 and print the report.

The report is deterministic: the same seed always gives the same bytes.
"""
from cyclic_covers import prime_field
from cyclic_covers.census import census, report_json

report = census(prime_field(7), d=3, n=2, trials=20, seed=7)
print(report_json(report))
