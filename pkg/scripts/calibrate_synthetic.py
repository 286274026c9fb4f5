"""Run the staged calibration on a seeded synthetic training set.

Writes one ``sweep_<param>.tsv`` per stage plus ``params.cfg`` into --out-dir
and prints each recall curve.

    python scripts/calibrate_synthetic.py --seed 9 --out-dir runs/synthetic
"""

import argparse
from pathlib import Path

from extractsum.corpus import build_idf
from extractsum.ranker import save_params
from extractsum.synthetic import training_set
from extractsum.tuner import run_calibration


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=9)
    parser.add_argument("--docs", type=int, default=10)
    parser.add_argument("--max-len", type=int, default=28, help="longest synthetic sentence, in words")
    parser.add_argument("--out-dir", type=Path, default=Path("runs/synthetic"))
    args = parser.parse_args()

    training = training_set(seed=args.seed, n_docs=args.docs, max_len=args.max_len)
    idf = build_idf([doc for doc, _ in training])
    result = run_calibration(training, idf)

    args.out_dir.mkdir(parents=True, exist_ok=True)
    for sweep in result.sweeps:
        (args.out_dir / f"sweep_{sweep.parameter}.tsv").write_text(sweep.to_tsv(), encoding="utf-8")
        curve = "  ".join(f"{v}:{r:.4f}" for v, r in sweep.points)
        print(f"{sweep.parameter:8s} best={sweep.best_value}  {curve}")
    save_params(result.params, args.out_dir / "params.cfg")
    print(result.params)


if __name__ == "__main__":
    main()
