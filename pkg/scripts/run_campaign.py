"""Exhaustive verification run: report JSON plus derived catalogs.

    python scripts/run_campaign.py --n-max 10 --audit-max 8 --out results/
"""

import argparse
import json
import os
import time

from contracta import campaign


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--audit-max", type=int, default=8)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--out", default="results")
    args = p.parse_args()

    os.makedirs(args.out, exist_ok=True)
    start = time.perf_counter()
    tally = campaign.run_campaign(args.n_max, args.audit_max, args.threads)
    report = campaign.build_report(tally, args.n_max, args.audit_max)
    elapsed = time.perf_counter() - start

    with open(os.path.join(args.out, f"report-n{args.n_max}.json"), "w") as fh:
        json.dump(report, fh, indent=1, sort_keys=True)
        fh.write("\n")
    zero, one = campaign.catalogs_from_tally(tally)
    campaign.write_catalogs(os.path.join(args.out, "catalog"), zero, one)

    for n, count in report["countsByOrder"].items():
        print(f"n={n:>2} graphs={count:>9} max contractible={report['theorems']['contractible-bound']['maxByOrder'][n]}")
    print(f"zero catalog {len(zero)}, one catalog {len(one)}, status {report['status']}, {elapsed:.0f}s")


if __name__ == "__main__":
    main()
