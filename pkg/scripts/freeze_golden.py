"""Regenerate tests/golden/ after re-running the brute-force fixed-point check.

Larger-order values are only written when every class agrees with the direct
count for orders up to the oracle bound.
"""

import json
import sys
from pathlib import Path

from qgcount import oracle
from qgcount.burnside import census, class_fix_count, sequence
from qgcount.cycletype import all_cycle_types, representative

out = Path(__file__).resolve().parent.parent / "tests" / "golden"

for n in range(1, oracle.ORACLE_BOUND + 1):
    for t in all_cycle_types(n - 1):
        direct = oracle.direct_fix_count(representative(t), n)
        if direct != class_fix_count(t):
            sys.exit(f"n={n} class {t}: direct {direct} != formula {class_fix_count(t)}; not freezing")

(out / "census_6.json").write_text(json.dumps(census(6).to_dict(), indent=2) + "\n")
rows = ",\n".join(f'  {{"n": {n}, "qg": {q}}}' for n, q in sequence(10))
(out / "qg_1_10.json").write_text("[\n" + rows + "\n]\n")
print(f"wrote {out}")
