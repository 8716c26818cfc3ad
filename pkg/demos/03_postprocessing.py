#!/usr/bin/env python3
"""Display post-processing in isolation: Laplacian-pyramid band boost
followed by the s-shaped LUT, shown on one simulated radiograph."""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from ctxray.phantoms import chest_phantom
from ctxray.pipeline import config_from_dict, run_pipeline
from ctxray.postprocess import LutConfig, PyramidConfig, apply_lut, pyramid_boost
from ctxray.volume_io import save_metaimage

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

cfg = config_from_dict(
    dict(
        preprocess=dict(middle_slice_min_px=150),
        geometry=dict(detector_px=[256, 256], detector_field_mm=460.0),
        angle_count=1,
        postprocess_enabled=False,  # keep the raw neg-log image
    )
)
case = OUT / "pp_case.mhd"
save_metaimage(chest_phantom(rng=np.random.default_rng(3))[0], case)
neglog = run_pipeline(case, cfg)[0].radiograph

pyr = PyramidConfig(levels=7)
lut = LutConfig()
boosted = pyramid_boost(neglog, pyr)
final = apply_lut(boosted, lut)

fig, axes = plt.subplots(1, 4, figsize=(16, 4))
for ax, (img, title) in zip(
    axes,
    [
        (neglog.values, "raw neg-log"),
        (boosted.values, "bands 0-1 boosted x2"),
        (final.values, "after s-curve LUT"),
    ],
):
    ax.imshow(img, cmap="gray")
    ax.set_title(title)
    ax.axis("off")

# the LUT itself
x = np.linspace(-1.0, 9.5, 400)
y = apply_lut(type(neglog)(x[None, :], neglog.pixel_spacing), lut).values[0]
axes[3].plot(x, y)
axes[3].set_title("display LUT (clips 0 / 8)")
axes[3].set_xlabel("neg-log input")
axes[3].set_ylabel("display output")
fig.tight_layout()
fig.savefig(OUT / "postprocessing.png", dpi=110)
print(f"wrote {OUT / 'postprocessing.png'}")
