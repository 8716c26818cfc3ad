#!/usr/bin/env python3
"""Build a toy training dataset: randomized chest phantoms rendered to
128x128 radiograph / thickness pairs plus the JSON manifest consumed by
the trainer package.

Usage:
    python demos/05_make_training_set.py [out_dir] [n_cases]

Every case gets one PA view (angle 0).  Case ids are hashed into
train/val/test splits; pass --seed via the config to reshuffle.
"""

import sys
from pathlib import Path

import numpy as np

from ctxray.phantoms import chest_phantom
from ctxray.pipeline import config_from_dict, emit_dataset, run_many
from ctxray.volume_io import save_metaimage

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent / "output" / "toy_dataset"
n_cases = int(sys.argv[2]) if len(sys.argv) > 2 else 50

cfg = config_from_dict(
    dict(
        preprocess=dict(middle_slice_min_px=150),
        geometry=dict(detector_px=[128, 128], detector_field_mm=512.0),
        pyramid=dict(levels=5),
        angle_count=1,
        split=[0.8, 0.0, 0.2],
    )
)

case_dir = out_dir / "ct"
case_dir.mkdir(parents=True, exist_ok=True)
paths = []
for i in range(n_cases):
    vol, _ = chest_phantom(rng=np.random.default_rng(1000 + i))
    path = case_dir / f"case{i:03d}.mhd"
    save_metaimage(vol, path)
    paths.append(path)

pairs, skipped = run_many(paths, cfg)
manifest = emit_dataset(pairs, out_dir, cfg, skipped)
splits = [s["split"] for s in manifest["samples"]]
print(
    f"wrote {len(manifest['samples'])} samples to {out_dir} "
    f"(train {splits.count('train')}, val {splits.count('val')}, test {splits.count('test')}; "
    f"{len(skipped)} skipped)"
)
