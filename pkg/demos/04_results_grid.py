# %% [markdown]
# # The eight-condition grid
#
# Reads the trained runs (``pucycle table --out-dir runs/table1``) and lays
# the ADE of every model next to the published reference values.

# %%
import sys
from pathlib import Path

from pucycle.harness.config import CONDITIONS, MODEL_NAMES, REFERENCE_ADE
from pucycle.harness.evaluation import evaluate_grid
from pucycle.harness.experiment import load_dataset, load_model_set

root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "runs/table1"
sets, evals = {}, {}
for c in CONDITIONS:
    if (root / c.key / "encoder.json").exists():
        sets[c] = load_model_set(root / c.key)
        evals[c] = load_dataset(sets[c].cfg, root / c.key)[1]
if not sets:
    sys.exit(f"no trained runs under {root}")

# %%
cells = evaluate_grid({c: ms.estimators() for c, ms in sets.items()}, evals)
print(f"{'condition':26s}" + "".join(f"{m:>26s}" for m in MODEL_NAMES))
for c in sets:
    row = {x.model: x.ade for x in cells if x.condition == c}
    ref = REFERENCE_ADE[(c.p_miss, c.p_outl, c.sigma_w)]
    print(f"{c.key:26s}" + "".join(f"{row[m]:>16.3f} ({ref[m][0]:.3f})" for m in MODEL_NAMES))
