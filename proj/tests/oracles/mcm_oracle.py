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

"""Independent numpy/scipy reference for the two-qubit collision model.

Prints the trace-norm error between the master-equation solution and the
collision map after n steps. Values printed here are frozen into
tests/test_mcm.cpp.
"""
import numpy as np
from scipy.linalg import expm

sm = np.array([[0, 1], [0, 0]], dtype=complex)  # |0><1|, |1> excited
sp = sm.conj().T
I2 = np.eye(2)


def kron(*ops):
    out = np.eye(1)
    for o in ops:
        out = np.kron(out, o)
    return out


def state(label):
    r = 1 / np.sqrt(2)
    v = {"gg": [1, 0, 0, 0], "ee": [0, 0, 0, 1],
         "sup": [0, r, r, 0], "sub": [0, -r, r, 0]}[label]
    v = np.array(v, dtype=complex)
    return np.outer(v, v.conj())


def lindblad_rhs(rho, jumps):
    out = np.zeros_like(rho)
    for g, L in jumps:
        LdL = L.conj().T @ L
        out += g * (L @ rho @ L.conj().T - 0.5 * (LdL @ rho + rho @ LdL))
    return out


def exact(rho0, jumps, t):
    # Integrate through the superoperator built from basis images (no
    # vectorization identities reused from the C++ code).
    d = rho0.shape[0]
    cols = []
    for j in range(d):
        for i in range(d):
            e = np.zeros((d, d), dtype=complex)
            e[i, j] = 1
            cols.append(lindblad_rhs(e, jumps).reshape(-1, order="F"))
    L = np.array(cols).T
    v = expm(L * t) @ rho0.reshape(-1, order="F")
    return v.reshape(d, d, order="F")


def collective_step(dt, gamma=1.0):
    # qubits: s1, s2, E
    g = 1 / np.sqrt(dt)
    lam = np.sqrt(gamma)
    H1 = lam * kron(sm, I2, sp)
    H1 = H1 + H1.conj().T
    H2 = lam * kron(I2, sm, sp)
    H2 = H2 + H2.conj().T
    U2h = expm(-1j * g * dt / 2 * H2)
    U1 = expm(-1j * g * dt * H1)
    return [U2h @ U1 @ U2h], 1


def local_step(dt, gamma=1.0):
    # qubits: s1, s2, E1, E2
    g = 1 / np.sqrt(dt)
    lam = np.sqrt(gamma)
    H1 = lam * kron(sm, I2, sp, I2)
    H1 = H1 + H1.conj().T
    H2 = lam * kron(I2, sm, I2, sp)
    H2 = H2 + H2.conj().T
    return [expm(-1j * g * dt * H2) @ expm(-1j * g * dt * H1)], 2


def apply_step(rho, U, nanc):
    env = np.zeros((2 ** nanc, 2 ** nanc), dtype=complex)
    env[0, 0] = 1
    big = U @ np.kron(rho, env) @ U.conj().T
    d = rho.shape[0]
    de = 2 ** nanc
    big = big.reshape(d, de, d, de)
    return np.einsum("aebe->ab", big)


def errors(mode, label, dt, n):
    if mode == "collective":
        (U,), na = collective_step(dt)
        jumps = [(1.0, kron(sm, I2) + kron(I2, sm))]
    else:
        (U,), na = local_step(dt)
        jumps = [(1.0, kron(sm, I2)), (1.0, kron(I2, sm))]
    rho0 = state(label)
    rho = rho0.copy()
    out = []
    for k in range(1, n + 1):
        rho = apply_step(rho, U, na)
        diff = exact(rho0, jumps, k * dt) - rho
        out.append(np.abs(np.linalg.eigvalsh((diff + diff.conj().T) / 2)).sum())
    return out, rho


if __name__ == "__main__":
    np.set_printoptions(precision=17)
    for mode, label in [("collective", "sub"), ("collective", "sup"),
                        ("collective", "ee"), ("local", "sub")]:
        e, _ = errors(mode, label, 0.1, 10)
        print(mode, label, "dt=0.1", repr(e))
    for mode, label in [("collective", "sub"), ("collective", "sup"),
                        ("collective", "ee"), ("local", "sub")]:
        row = []
        for dt in [0.1, 0.05, 0.025, 0.0125]:
            n = int(round(1.0 / dt))
            e, _ = errors(mode, label, dt, n)
            row.append(e[-1])
        sl = np.polyfit(np.log([0.1, 0.05, 0.025, 0.0125]), np.log(row), 1)[0]
        print(mode, label, "t=1 errors", row, "slope", sl)
    _, rho = errors("collective", "sub", 0.1, 10)
    pops = np.real(np.diag(rho))
    print("sub n=10 excited pop", pops[1] + pops[2])
    for n in range(1, 11):
        _, rho = errors("collective", "sub", 0.1, n)
        p = np.real(np.diag(rho))
        print(n, repr(p[1] + p[2]), np.exp(-0.1 * n))
