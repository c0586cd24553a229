"""Shared test utilities: random generators and independent dense oracles."""

import math

import numpy as np

from hopfbloch import Basis, Quaternion, TwoQubitState


def random_states(rng, count):
    """Haar-ish random normalized two-qubit states."""
    raw = rng.normal(size=(count, 8))
    out = []
    for row in raw:
        vec = row[0::2] + 1j * row[1::2]
        vec /= np.linalg.norm(vec)
        out.append(TwoQubitState(complex(vec[0]), complex(vec[1]),
                                 complex(vec[2]), complex(vec[3])))
    return out


def random_product_states(rng, count):
    """Tensor products of random single-qubit states."""
    raw = rng.normal(size=(count, 8))
    out = []
    for row in raw:
        a = row[0:4:2] + 1j * row[1:4:2]
        b = row[4::2] + 1j * row[5::2]
        a /= np.linalg.norm(a)
        b /= np.linalg.norm(b)
        vec = np.kron(a, b)
        out.append(TwoQubitState(*map(complex, vec)))
    return out


def random_quaternion(rng, unit=False):
    q = Quaternion(*rng.normal(size=4))
    if unit:
        n = q.norm()
        q = Quaternion(q.w / n, q.x / n, q.y / n, q.z / n)
    return q


def random_unitary_2x2(rng):
    """Haar-random single-qubit unitary via QR."""
    m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(m)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def dense_reduced(state: TwoQubitState, keep: Basis) -> np.ndarray:
    """Partial trace of the dense 4x4 projector (independent oracle)."""
    vec = state.vector
    rho = np.outer(vec, vec.conj()).reshape(2, 2, 2, 2)
    if keep is Basis.A:
        return np.trace(rho, axis1=1, axis2=3)
    return np.trace(rho, axis1=0, axis2=2)


def quaternion_close(p: Quaternion, q: Quaternion, tol=1e-12) -> bool:
    return max(abs(p.w - q.w), abs(p.x - q.x), abs(p.y - q.y),
               abs(p.z - q.z)) <= tol


def embed_complex(z: complex) -> Quaternion:
    """A complex number as a quaternion along the k axis."""
    return Quaternion(z.real, 0.0, 0.0, z.imag)


SQ2 = math.sqrt(0.5)
