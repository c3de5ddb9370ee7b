"""The pure-Python kernel path must agree with the compiled one."""

import json
import os
import subprocess
import sys

from sbicon import _jit
from sbicon.generate import generate
from sbicon.oracle import naive_b_bridges
from sbicon.resilience import b_articulation_points, b_bridges_fast

SCRIPT = """
import json
from sbicon import _jit
from sbicon.generate import generate
from sbicon.resilience import b_bridges_fast, b_articulation_points
assert not _jit.USING_NUMBA
out = []
for seed in range(8):
    g = generate(12, 30, seed)
    bb, tr = b_bridges_fast(g)
    out.append([sorted(bb), sorted(b_articulation_points(g)), list(tr.added_arcs)])
print(json.dumps(out))
"""


def test_fallback_matches_numba_path():
    env = dict(os.environ, SBICON_DISABLE_NUMBA="1")
    res = subprocess.run([sys.executable, "-c", SCRIPT], env=env, capture_output=True, text=True, check=True)
    slow = json.loads(res.stdout)
    fast = []
    for seed in range(8):
        g = generate(12, 30, seed)
        bb, tr = b_bridges_fast(g)
        assert bb == naive_b_bridges(g)
        fast.append([sorted(bb), sorted(b_articulation_points(g)), list(tr.added_arcs)])
    assert slow == json.loads(json.dumps(fast))


def test_numba_is_active_by_default():
    assert _jit.USING_NUMBA == (not _jit.DISABLED)
