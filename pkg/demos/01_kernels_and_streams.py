"""Masked products and seeded streams, the deterministic base of everything.

A weight grid plus a boolean mask is the layer representation used across
the library. This walk-through shows the two execution paths for a masked
product agreeing bit for bit, the reference kernel matching a scalar loop,
and the named substream scheme that makes runs reproducible and resumable.
"""

import numpy as np

from itoplab import ndcore

rng = ndcore.make_rng(0)

# --- two execution paths, one result ---------------------------------------
a = rng.standard_normal((4, 6))
w = rng.standard_normal((6, 3))
mask = rng.random((6, 3)) < 0.4

dense_path = ndcore.masked_matmul(a, w, mask)
csr = ndcore.CsrWeights.from_dense(w, mask)
compressed_path = ndcore.masked_matmul_csr(a, csr)

print("active weights:", int(mask.sum()), "of", mask.size)
print("paths bitwise equal:", bool(np.array_equal(dense_path, compressed_path)))

# --- the reference kernel is exactly the scalar triple loop -----------------
naive = np.zeros((4, 3))
for i in range(4):
    for j in range(3):
        acc = 0.0
        for k in range(6):
            acc += a[i, k] * (w[k, j] if mask[k, j] else 0.0)
        naive[i, j] = acc
print("reference kernel == naive loop:", bool(np.array_equal(dense_path, naive)))

# gemm is the throughput kernel used by the training loop; same math,
# backend accumulation order, so only tolerance-level agreement is promised
print("gemm max abs diff vs reference:",
      float(np.abs(ndcore.gemm(a, w * mask) - dense_path).max()))

# --- deterministic top-k selection ------------------------------------------
values = rng.standard_normal(10)
smallest = ndcore.topk_abs_flat(values, 3, "smallest")
largest = ndcore.topk_abs_flat(values, 7, "largest")
print("smallest-3:", smallest, " largest-7:", largest)
print("partition of all 10 indices:",
      bool(np.array_equal(np.sort(np.concatenate([smallest, largest])), np.arange(10))))

# --- named substreams --------------------------------------------------------
# every consumer of randomness derives its own stream from (seed, purpose,
# index); nothing depends on how much randomness other components consumed
epoch3_a = ndcore.derive_rng(123, "batches", 3).permutation(8)
epoch3_b = ndcore.derive_rng(123, "batches", 3).permutation(8)
epoch4 = ndcore.derive_rng(123, "batches", 4).permutation(8)
print("epoch-3 order, twice:", epoch3_a, epoch3_b)
print("epoch-4 order:       ", epoch4)
