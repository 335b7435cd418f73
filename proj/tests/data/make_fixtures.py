"""Writes the StateFile fixtures used by the C++ and CLI tests.

Everything here is built with numpy only, independently of the C++ code, so
the fixtures act as an external oracle. Run from any directory:

    python3 tests/data/make_fixtures.py
"""

import json
import pathlib

import numpy as np

OUT = pathlib.Path(__file__).resolve().parent


def ket(d, i):
    v = np.zeros(d, dtype=complex)
    v[i] = 1.0
    return v


def plus(d, a, b, sign=1):
    return (ket(d, a) + sign * ket(d, b)) / np.sqrt(2.0)


def proj(v):
    return np.outer(v, v.conj())


def partial_transpose_a(m, da, db):
    # <i1 j1|PT|i2 j2> = <i2 j1|m|i1 j2>: swap the A indices of row and column.
    t = m.reshape(da, db, da, db)
    return t.transpose(2, 1, 0, 3).reshape(da * db, da * db)


def write(name, dims, matrix, metadata=None):
    doc = {
        "dims": dims,
        "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(matrix)],
    }
    if metadata:
        doc["metadata"] = metadata
    (OUT / name).write_text(json.dumps(doc, indent=1) + "\n")


def nine_state_rho0():
    k3 = lambda i: ket(3, i)
    states = [
        np.kron(k3(1), k3(1)),
        np.kron(k3(0), plus(3, 0, 1)),
        np.kron(k3(0), plus(3, 0, 1, -1)),
        np.kron(k3(2), plus(3, 1, 2)),
        np.kron(k3(2), plus(3, 1, 2, -1)),
        np.kron(plus(3, 1, 2), k3(0)),
        np.kron(plus(3, 1, 2, -1), k3(0)),
        np.kron(plus(3, 0, 1), k3(2)),
        np.kron(plus(3, 0, 1, -1), k3(2)),
    ]
    return sum(proj(s) for s in states[1:]) / 8.0


def main():
    eps = 0.1
    rho0 = nine_state_rho0()
    psi_plus = (np.kron(ket(3, 0), ket(3, 1)) + np.kron(ket(3, 1), ket(3, 0))) / np.sqrt(2.0)
    rho_eps = (1 - eps) * rho0 + eps * proj(psi_plus)
    write("appendix_c_pt.json", [3, 3], partial_transpose_a(rho_eps, 3, 3),
          {"eps": eps, "description": "partial transpose of (1 - eps) rho0 + eps psi+ for the nine-state mixture"})
    write("nine_state_rho0.json", [3, 3], rho0, {"description": "1/8 sum of psi_2 .. psi_9"})

    phi_plus = (np.kron(ket(2, 0), ket(2, 0)) + np.kron(ket(2, 1), ket(2, 1))) / np.sqrt(2.0)
    write("bell_phi_plus.json", [2, 2], proj(phi_plus))
    write("maximally_mixed_2x2.json", [2, 2], np.eye(4) / 4.0)
    write("ket11.json", [2, 2], proj(np.kron(ket(2, 1), ket(2, 1))))
    write("trace_0_9.json", [2, 2], np.diag([0.3, 0.3, 0.2, 0.1]))

    k0, k1 = ket(2, 0), ket(2, 1)
    kp, km = plus(2, 0, 1), plus(2, 0, 1, -1)
    example5 = 0.5 * (proj(np.kron(k0, k0)) + proj(np.kron(kp, kp)))
    write("example5.json", [2, 2], example5)
    cq = (0.4 * proj(np.kron(k0, k0)) + 0.3 * proj(np.kron(k0, k1))
          + 0.2 * proj(np.kron(k1, kp)) + 0.1 * proj(np.kron(k1, km)))
    write("cq.json", [2, 2], cq)
    write("basis_computational.json", [2], np.eye(2))
    write("basis_hadamard.json", [2], np.array([[1, 1], [1, -1]]) / np.sqrt(2.0))
    write("basis_not_orthonormal.json", [2], np.array([[1.0, 1.0], [0.0, 1.0]]))


if __name__ == "__main__":
    main()
