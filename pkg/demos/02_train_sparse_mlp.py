"""Train one sparse MLP from scratch while rewiring its connectivity.

A 95 percent sparse 784-300-100-10 rectifier net learns a synthetic
sparse-signal task. Every `delta_t` optimizer steps the engine prunes the
smallest-magnitude weights of each layer and grows the same number of fresh
zero-initialized connections at random. The exploration rate column is the
fraction of the dense weight grid the run has activated at least once.
"""

from itoplab import harness
from itoplab.config import TrainConfig

cfg = TrainConfig(
    method="set",
    sparsity=0.95,
    sparse_init="er",        # layer density proportional to (n_in+n_out)/(n_in*n_out)
    lr=0.1,
    lr_milestones=(10, 15),
    batch_size=128,
    epochs=20,
    delta_t=20,              # optimizer steps between connectivity updates
    p0=0.5,                  # initial prune fraction, cosine-annealed to 0
    seed=0,
    dataset="blobs:n_classes=10,n_features=784,n_per_class=550,spread=0.5,"
            "informative=64,seed=1234,test_fraction=0.18",
    widths=(784, 300, 100, 10),
)

record = harness.run(cfg, out_dir="runs/demo_set")

print(f"{'epoch':>5} {'loss':>8} {'train':>7} {'val':>7} {'test':>7} {'explored':>9}")
for row in record.rows:
    print(f"{row['epoch']:>5} {row['train_loss']:>8.4f} {row['train_acc']:>7.3f} "
          f"{row['val_acc']:>7.3f} {row['test_acc']:>7.3f} {row['rs']:>9.3f}")

s = record.summary
print(f"\nbest-val test accuracy: {s['test_acc_at_best_val']:.4f} "
      f"(epoch {s['best_val_epoch']})")
print(f"final exploration rate: {s['final_rs']:.3f} "
      f"(started at {record.rows[0]['rs']:.3f})")
print("run artifacts: runs/demo_set/{metrics.jsonl, summary.json, final.itop}")
