"""Print the class table for order 6 and check the known class data."""

from qgcount.burnside import census

EXPECTED_A = [1, 10, 15, 20, 30, 24, 20]
EXPECTED_C = [120, 12, 8, 6, 4, 5, 6]

table = census(6)
print(table.to_text())
print()
assert sorted(r.a_t for r in table.rows) == sorted(EXPECTED_A)
assert sorted(r.c_t for r in table.rows) == sorted(EXPECTED_C)
assert table.qg == 207392556
print("matches: QG(6) = 207392556")
