"""Planner vs no-plan baseline on 8x8 porosity-0.2 mazes, several seeds.

Each arm runs as its own process, one after another. The summary compares
mean episode length over the last 10% of each run's episodes.

    python3 benchmarks/e2e_campaign.py --out runs/e2e --seeds 0 1 2
"""
import argparse
import json
import subprocess
import sys
import time
from pathlib import Path

import numpy as np

from entroplan.harness.metrics import read_jsonl

ROOT = Path(__file__).resolve().parents[1]


def final_phase(records, fraction=0.1):
    eps = sorted((r for r in records if r["kind"] == "episode"), key=lambda r: r["episode"])
    if not eps:
        return {"episodes": 0}
    tail = eps[len(eps) - max(1, int(len(eps) * fraction)) :]
    out = {
        "episodes": len(eps),
        "tail_episodes": len(tail),
        "final_length": float(np.mean([e["length"] for e in tail])),
        "final_return": float(np.mean([e["return"] for e in tail])),
        "final_goals": float(np.mean([e["goals_found"] for e in tail])),
    }
    if "len_before_replan_mean" in tail[0]:
        out["final_commit_length"] = float(np.mean([e["len_before_replan_mean"] for e in tail]))
        out["final_replan_prob"] = float(np.mean([e["replan_prob_mean"] for e in tail]))
    return out


def summarize(out_dir, seeds):
    out_dir = Path(out_dir)
    runs = {}
    for arm in ("plan", "baseline"):
        for seed in seeds:
            path = out_dir / f"{arm}_seed{seed}" / "metrics.jsonl"
            if path.exists():
                runs[f"{arm}_seed{seed}"] = final_phase(read_jsonl(path))
    wins = []
    for seed in seeds:
        p, b = runs.get(f"plan_seed{seed}"), runs.get(f"baseline_seed{seed}")
        if p and b and p.get("episodes") and b.get("episodes"):
            wins.append(bool(p["final_length"] < b["final_length"]))
    return {"seeds": list(seeds), "runs": runs, "planner_shorter": wins, "passed": sum(wins) >= 2}


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=ROOT / "runs" / "e2e")
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--config", type=Path, default=ROOT / "configs" / "maze.yaml")
    ap.add_argument("--override", action="append", default=[])
    ap.add_argument("--summary-only", action="store_true")
    args = ap.parse_args(argv)
    if not args.summary_only:
        for seed in args.seeds:
            for arm, flag in (("plan", "true"), ("baseline", "false")):
                run_dir = args.out / f"{arm}_seed{seed}"
                if (run_dir / "done").exists():
                    continue
                cmd = [sys.executable, "-m", "entroplan", "train", "--config", str(args.config), "--seed", str(seed),
                       "--override", f"use_plan={flag}", "--run-dir", str(run_dir)]
                for o in args.override:
                    cmd += ["--override", o]
                t0 = time.time()
                subprocess.run(cmd, check=True)
                (run_dir / "done").write_text(f"{time.time() - t0:.1f}\n")
    summary = summarize(args.out, args.seeds)
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 0 if summary["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
