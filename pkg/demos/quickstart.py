"""Short tour: oracle evaluation, a few training iterations, and a traced episode.

    python demos/quickstart.py --out runs/quickstart
"""

import argparse
from pathlib import Path

from handcatch.config import from_dict
from handcatch.evaluation import CheckpointPolicy, OraclePolicy, RandomPolicy, evaluate, write_traces
from handcatch.marl import train


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("runs/quickstart"))
    ap.add_argument("--iterations", type=int, default=20)
    args = ap.parse_args(argv)

    cfg = from_dict({"variant": "proposed", "out_dir": str(args.out)})
    # the scripted interceptor shows the task is solvable before any learning
    for policy in (OraclePolicy(), RandomPolicy(0)):
        print(evaluate(cfg, policy, 64, cfg.seed).table(), "\n")

    res = train(cfg, args.out, iterations=args.iterations, progress=True)
    report = evaluate(cfg, CheckpointPolicy(res.agents), 64, cfg.seed)
    report.write(args.out / "eval_report.json")
    print(report.table())

    paths = write_traces(cfg, OraclePolicy(), 1, cfg.seed, args.out / "traces")
    print(f"oracle trace: {paths[0]}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
