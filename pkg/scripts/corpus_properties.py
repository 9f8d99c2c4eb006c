"""Summary statistics and invariant checks over a seeded random corpus.

    python3 scripts/corpus_properties.py [--size 50] [--d-min 4] [--d-max 10] [--seed N]
"""

import argparse
import collections
import time
from dataclasses import fields

from linarr.arrangement import jacobian_degree, max_mu, restriction_count
from linarr.bundle import candidate_lines, is_jump_line, stability, stability_sufficient, threshold_fires
from linarr.corpus import CorpusConfig, random_arrangements
from linarr.derivations import deletion_check, resolve


def parse_config() -> CorpusConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(CorpusConfig):
        ap.add_argument("--" + f.name.replace("_", "-"), type=type(f.default), default=f.default)
    ns = ap.parse_args()
    return CorpusConfig(**{f.name: getattr(ns, f.name) for f in fields(CorpusConfig)})


def main():
    cfg = parse_config()
    corpus = random_arrangements(cfg)
    verdicts = collections.Counter()
    clauses = collections.Counter()
    free = fired = 0
    t0 = time.perf_counter()
    for A in corpus:
        res = resolve(A)
        free += res.is_free
        st = stability(A)
        verdicts[st.verdict] += 1
        for h in range(A.d):
            deletion_check(A, h)
            clauses[stability_sufficient(A, h)] += 1
        if st.semistable:
            for line in candidate_lines(A, 1):
                if threshold_fires(A.d, line in A.lines, restriction_count(A, line)):
                    assert is_jump_line(A, line).is_jump
                    fired += 1
        print(f"d={A.d:>2} degJ={jacobian_degree(A):>3} maxMu={max_mu(A)} "
              f"{str(res):<48} {st.verdict}")
    print(f"\n{len(corpus)} arrangements in {time.perf_counter() - t0:.1f}s; {free} free")
    print("stability:", dict(verdicts))
    print("stability clauses fired:", dict(clauses))
    print(f"jump thresholds fired (all confirmed): {fired}")


if __name__ == "__main__":
    main()
