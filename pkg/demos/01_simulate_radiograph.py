#!/usr/bin/env python3
"""Walk one synthetic chest phantom through the full pipeline and save
every intermediate image.

The stages mirror the production dataset builder: segment the lung,
decompose the CT into material densities, project densities and lung
mask through the cone-beam geometry, form the polychromatic intensity,
take the negative log, then apply the display pyramid boost and LUT.
Outputs land in demos/output/.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from ctxray import materials, preprocess, projector, radiograph
from ctxray.phantoms import chest_phantom
from ctxray.pipeline import build_effective_spectrum, config_from_dict
from ctxray.postprocess import apply_lut, pyramid_boost

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

cfg = config_from_dict(
    dict(
        preprocess=dict(middle_slice_min_px=150),  # 4 mm phantom voxels
        geometry=dict(detector_px=[256, 256], detector_field_mm=460.0),
        pyramid=dict(levels=7),
    )
)

vol, true_lung = chest_phantom(rng=np.random.default_rng(7))
print(f"phantom CT: dims={vol.dims}, spacing={vol.spacing} mm")

vol = preprocess.remove_table(vol, cfg.preprocess)
lung = preprocess.segment_lung(vol, cfg.preprocess)
print(f"segmented lung volume: {preprocess.ground_truth_tlc(lung):.2f} L")

maps = materials.decompose(vol, cfg.e_ct_kev)
eff = build_effective_spectrum(cfg)
flat = radiograph.flat_field(eff)

geom = cfg.geometry  # rotation 0: plain PA view
density_imgs = {
    mat: projector.project_density(
        type("V", (), {"values": maps.densities[mat], "spacing": maps.spacing})(), geom
    )
    for mat in materials.BODY_MATERIALS
}
thickness = projector.project_mask_thickness(lung, geom)

intensity = radiograph.form_intensity(density_imgs, eff)
neglog = radiograph.neg_log(intensity, flat)
display = apply_lut(pyramid_boost(neglog, cfg.pyramid), cfg.lut)

fig, axes = plt.subplots(1, 4, figsize=(16, 4.2))
panels = [
    (neglog.values, "negative-log radiograph"),
    (display.values, "display processed"),
    (thickness.values, "lung thickness (mm)"),
    (density_imgs["bone"].values, "projected bone (g/cm$^2$)"),
]
for ax, (img, title) in zip(axes, panels):
    im = ax.imshow(img, cmap="gray" if "thickness" not in title else "viridis")
    ax.set_title(title)
    ax.axis("off")
    fig.colorbar(im, ax=ax, fraction=0.046)
fig.tight_layout()
fig.savefig(OUT / "radiograph_pipeline.png", dpi=110)
print(f"wrote {OUT / 'radiograph_pipeline.png'}")
print(f"max lung thickness on a ray: {thickness.values.max():.0f} mm")
