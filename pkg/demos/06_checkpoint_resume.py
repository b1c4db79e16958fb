"""Interrupt and resume a run with exact continuation.

The checkpoint file carries weights, masks, momenta, counters, and the
fired-coordinate bitsets (section tag FIRE), and every randomness consumer
derives its stream from (seed, purpose, index), so resuming at epoch k
replays exactly what the uninterrupted run would have done.
"""

from pathlib import Path

from itoplab import harness
from itoplab.config import TrainConfig

cfg = TrainConfig(
    method="set", sparsity=0.9, sparse_init="er", lr=0.1, lr_milestones=(),
    batch_size=128, epochs=6, delta_t=10, seed=3, checkpoint_every=3,
    dataset="blobs:n_classes=10,n_features=784,n_per_class=200,spread=0.5,"
            "informative=64,seed=1234,test_fraction=0.18",
    widths=(784, 100, 10))

full = harness.run(cfg, out_dir="runs/demo_full")
resumed = harness.run(cfg, out_dir="runs/demo_resumed",
                      resume_from="runs/demo_full/epoch0003.itop")

tail = [r for r in full.rows if r["epoch"] >= 3]
print("rows after epoch 3 identical:", tail == resumed.rows)
final_a = Path("runs/demo_full/final.itop").read_bytes()
final_b = Path("runs/demo_resumed/final.itop").read_bytes()
print("final checkpoints byte-identical:", final_a == final_b)
print(f"checkpoint size: {len(final_a)} bytes "
      f"(magic {final_a[:4]!r}, fired section present: {b'FIRE' in final_a})")
