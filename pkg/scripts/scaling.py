"""Wall time and size of QG(n) as n grows.

    python scripts/scaling.py --start 10 --stop 60 --step 10 [--jobs K]
"""

import argparse
import sys
import time

from qgcount.burnside import qg, resolve_jobs
from qgcount.cycletype import partition_count

sys.set_int_max_str_digits(0)

parser = argparse.ArgumentParser()
parser.add_argument("--start", type=int, default=10)
parser.add_argument("--stop", type=int, default=60)
parser.add_argument("--step", type=int, default=10)
parser.add_argument("--jobs", default="1")
args = parser.parse_args()
jobs = resolve_jobs(args.jobs)

print(f"{'n':>4} {'classes':>9} {'digits':>7} {'seconds':>8}")
for n in range(args.start, args.stop + 1, args.step):
    start = time.perf_counter()
    value = qg(n, jobs=jobs)
    print(f"{n:>4} {partition_count(n - 1):>9} {len(str(value)):>7} {time.perf_counter() - start:>8.2f}", flush=True)
