# Copyright 2026 The mcmkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent diamond-distance values for fixed channels.

Uses the general two-density-matrix SDP (complex off-diagonal block), which
is a different formulation from the library's solver. Choi convention:
J = sum_ij |i><j| (x) T(|i><j|), input factor first.
Run: python3 diamond_oracle.py
"""
import numpy as np
import cvxpy as cp


def choi_from_kraus(ks, d):
    dout = ks[0].shape[0]
    j = np.zeros((d * dout, d * dout), dtype=complex)
    for i in range(d):
        for k in range(d):
            e = np.zeros((d, d)); e[i, k] = 1
            out = sum(K @ e @ K.conj().T for K in ks)
            j += np.kron(e, out)
    return j


def diamond_norm(jdelta, d):
    n = jdelta.shape[0]
    dout = n // d
    X = cp.Variable((n, n), complex=True)
    r0 = cp.Variable((d, d), hermitian=True)
    r1 = cp.Variable((d, d), hermitian=True)
    eye = np.eye(dout)
    big = cp.bmat([[cp.kron(r0, eye), X], [X.H, cp.kron(r1, eye)]])
    cons = [big >> 0, cp.real(cp.trace(r0)) == 1, cp.real(cp.trace(r1)) == 1, r0 >> 0, r1 >> 0]
    obj = cp.Maximize(cp.real(cp.trace(jdelta.conj().T @ X)))
    prob = cp.Problem(obj, cons)
    prob.solve(solver=cp.CLARABEL, tol_gap_abs=1e-12, tol_gap_rel=1e-12, tol_feas=1e-12)
    return prob.value


def unitary_kraus(u):
    return [u]


def compose(first, second):
    return [b @ a for a in first for b in second]


I2 = np.eye(2)
H = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)


def ad(g):
    return [np.array([[1, 0], [0, np.sqrt(1 - g)]]), np.array([[0, np.sqrt(g)], [0, 0]])]


def pd(lam):
    # coherences scaled by (1 - lam)
    a = 1 - lam
    return [np.diag([1, a]), np.diag([0, np.sqrt(1 - a * a)])]


def rz(t):
    return np.diag([np.exp(-0.5j * t), np.exp(0.5j * t)])


def dep(d, p):
    paulis = [np.eye(2), np.array([[0, 1], [1, 0]]), np.array([[0, -1j], [1j, 0]]), np.diag([1, -1])]
    if d == 2:
        ps = paulis
    else:
        ps = [np.kron(a, b) for a in paulis for b in paulis]
    w = [1 - p + p / d ** 2] + [p / d ** 2] * (len(ps) - 1)
    return [np.sqrt(x) * P for x, P in zip(w, ps)]


cases = {
    "ad0.3_vs_id": (ad(0.3), [I2], 2),
    "pd0.4_vs_id": (pd(0.4), [I2], 2),
    "rz0.7_vs_id": ([rz(0.7)], [I2], 2),
    "ad0.2_after_h_vs_h": (compose([H], ad(0.2)), [H], 2),
    "ad0.1q0_after_cnot_vs_cnot": (compose([CNOT], [np.kron(k, I2) for k in ad(0.1)]), [CNOT], 4),
    "dep0.1_after_cnot_vs_cnot": (compose([CNOT], dep(4, 0.1)), [CNOT], 4),
}

for name, (t, u, d) in cases.items():
    jd = choi_from_kraus(t, d) - choi_from_kraus(u, d)
    print(f"{name}: {0.5 * diamond_norm(jd, d):.10f}")
print("check rz: sin(0.35) =", np.sin(0.35), "; dep: 15p/16 =", 15 * 0.1 / 16)
