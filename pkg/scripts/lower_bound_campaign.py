#!/usr/bin/env python3
"""Randomized audit of the cardinality lower bound on entanglement.

Draws seeded random connected hypergraphs, checks the measured multipartite
entanglement against 1/2^(k_max - 1), then replays the measurement-based
reduction on every bipartition of a second batch and reports the certificate
margins.
"""

import argparse
import sys
from collections import Counter
from dataclasses import dataclass

from hyperwit import lower_bound_campaign, reduction_audit


@dataclass(frozen=True)
class CampaignConfig:
    count: int
    max_n: int
    audit_count: int
    audit_max_n: int
    seed: int


def run(cfg: CampaignConfig) -> int:
    rep = lower_bound_campaign(cfg.count, cfg.max_n, cfg.seed)
    kmax_hist = Counter(r.k_max for r in rep.rows)
    margins = [r.entanglement - float(r.bound) for r in rep.rows]
    print(f"campaign: {rep.count} instances, n <= {rep.max_n}, seed {rep.seed}")
    print(f"  k_max histogram: {dict(sorted(kmax_hist.items()))}")
    print(f"  bound margin: min {min(margins):.3e}, max {max(margins):.3e}")
    print(f"  all hold: {rep.all_hold}")

    audit = reduction_audit(cfg.audit_count, cfg.audit_max_n, cfg.seed)
    certs = sum(r.certificates for r in audit.rows)
    worst = min(r.min_margin for r in audit.rows)
    print(f"audit: {len(audit.rows)} instances, {certs} certificates across all cuts")
    print(f"  worst certificate margin: {worst:.3e}")
    print(f"  all validated: {audit.all_validated}")
    return 0 if rep.all_hold and audit.all_validated else 1


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--audit-count", type=int, default=100)
    ap.add_argument("--audit-max-n", type=int, default=7)
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()
    cfg = CampaignConfig(args.count, args.max_n, args.audit_count, args.audit_max_n, args.seed)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
