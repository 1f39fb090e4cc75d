# Copyright 2026 The semdp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent reference values for the Gaussian noisy-sum counterexample.

Rebuilds the discretized grid rows with 60-digit arithmetic and prints the
quantities pinned in acceptance_test.cc. Run: python3 counterexample_oracle.py
"""

import mpmath as mp

mp.mp.dps = 60

N = 500
EPS = mp.mpf("0.5")
DELTA = mp.mpf(2) ** -20
TAIL = mp.mpf("1e-12")
SD_THRESHOLD = mp.mpf("0.45")


def upper_tail(z):
  return mp.erfc(z / mp.sqrt(2)) / 2


def interval(a, b):
  # Tails are evaluated directly so far-out cells keep full precision.
  if a >= 0:
    return upper_tail(a) - upper_tail(b)
  if b <= 0:
    return upper_tail(-b) - upper_tail(-a)
  return 1 - upper_tail(-a) - upper_tail(b)


def main():
  sigma = mp.sqrt(mp.log(1 / DELTA, 2)) / EPS
  step = sigma / 8
  half = mp.findroot(lambda h: upper_tail(h) - TAIL / 2, 7) * sigma
  left = int(mp.ceil(half / step))
  right = int(mp.ceil((N + half) / step))
  cells = left + right
  edges = [(j - left) * step for j in range(cells + 1)]

  def row(center):
    out = []
    for j in range(cells):
      a = -mp.inf if j == 0 else (edges[j] - center) / sigma
      b = mp.inf if j + 1 == cells else (edges[j + 1] - center) / sigma
      out.append(interval(a, b))
    return out

  def tight_delta(p, q):
    f = mp.e ** EPS
    return max(sum(max(x - f * y, 0) for x, y in zip(p, q)),
               sum(max(y - f * x, 0) for x, y in zip(p, q)))

  r0, r1, rn1, rn = row(0), row(1), row(N - 1), row(N)
  touched = max(tight_delta(r0, r1), tight_delta(rn, rn1))
  mass = 0
  for j in range(cells):
    sd = abs(r0[j] / (r0[j] + r1[j]) - mp.mpf(1) / 2)
    if sd >= SD_THRESHOLD:
      mass += rn[j]
  nearest = min(range(cells), key=lambda j: abs((edges[j] + edges[j + 1]) / 2 - N))
  print("sigma", mp.nstr(sigma, 12))
  print("cells", cells)
  print("touched_max_delta", mp.nstr(touched, 8))
  print("mass_sd_ge_0.45", mp.nstr(mass, 17))
  print("mass_deficit", mp.nstr(1 - mass, 6))
  print("log_ratio_at_n", mp.nstr(mp.log(r1[nearest] / r0[nearest]), 10))


if __name__ == "__main__":
  main()
