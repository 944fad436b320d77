# %% [markdown]
# # Running the prediction/update cycle
#
# A deliberately small model is trained for a handful of epochs, enough to
# see the mechanics in well under a minute. The full-size runs live in
# ``runs/`` (see ``pucycle table``).

# %%
from dataclasses import replace
from pathlib import Path

import numpy as np

from pucycle import CycleModel, GeneratorConfig, make_dataset, run_cycle
from pucycle.harness.config import ExperimentConfig, ModelConfig
from pucycle.harness.plots import emit_ellipse_plot, emit_gain_plot
from pucycle.harness.training import joint_train, pretrain_prediction

gen = GeneratorConfig(sigma_w=0.01, p_miss=0.1, seed=11)
cfg = ExperimentConfig(generator=gen, model=ModelConfig(emb_dim=8, hidden=16, mlp_hidden=16),
                       epochs_pre_clean=3, epochs_pre_noisy=3, epochs_joint=5)
train, evalset = make_dataset(gen, n=150)

pre, _ = pretrain_prediction(cfg, train)
ck_p, ck_u, curve = joint_train(cfg, pre, train, evalset)
for rec in curve:
    print(f"epoch {rec['epoch']}  eval L_up/step {rec['eval_loss_up']:+.3f}")

# %% [markdown]
# Each step yields a prior (prediction), a gain and a posterior. Where the
# observation is missing the Update-RNN should lean on the prior, so k_obs
# drops.

# %%
model = CycleModel(ck_p.net, ck_u.net, cfg.model.gain, gen.sigma_w)
seq = max(evalset, key=lambda s: int((s.mask == 0).sum()))
tr = run_cycle(model, seq)
for k in range(1, len(tr)):
    print(f"k={k:2d} m={tr.mask[k]} k_obs={tr.k_obs[k].mean():.2f} "
          f"trace(prior cov)={np.trace(tr.prior_cov[k]):.2e}")

# %%
out = Path(__file__).resolve().parent / "out"
out.mkdir(exist_ok=True)
emit_gain_plot(tr, out / "gain.csv", out / "gain.svg")
emit_ellipse_plot(tr, out / "ellipse.csv", out / "ellipse.svg")
print("plots written to", out)
