"""Independent reference values for the C++ test suites.

Everything here uses numpy/scipy directly (scipy.linalg.expm, closed forms,
brute-force sums) and shares no code with the library. Run it to reproduce
the constants frozen into tests/*.cpp.
"""
import math

import numpy as np
from scipy.linalg import expm


def ladder(d):
    return np.diag(np.sqrt(np.arange(1, d)), 1).astype(complex)


def main():
    # Poisson P_4 for alpha = 2.
    print("poisson P4(alpha=2) =", repr(math.exp(-4) * 4**4 / math.factorial(4)))

    # RK4 polynomial for x' = -x, h = 0.1.
    h = 0.1
    print("rk4 1x1 =", repr(1 - h + h**2 / 2 - h**3 / 6 + h**4 / 24), "exp =", repr(math.exp(-h)))

    # Squeezed vacuum by direct factorials.
    r, th = 0.3, math.pi / 4
    amps = [(1 / math.sqrt(math.cosh(r))) * (-1) ** n * math.sqrt(math.factorial(2 * n)) / (2**n * math.factorial(n))
            * complex(math.cos(n * th), math.sin(n * th)) * math.tanh(r) ** n for n in range(10)]
    print("squeezed amps[0..4] =", [repr(a) for a in amps[:3]])

    # Coupled cavities N=2, n=1, Jt=pi/4 by scipy expm.
    d, J, w = 4, 0.1, 1.0
    a = ladder(d)
    I = np.eye(d)
    H = w * (np.kron(a.conj().T @ a, I) + np.kron(I, a.conj().T @ a)) + J * (np.kron(a.conj().T, a) + np.kron(a, a.conj().T))
    t = (math.pi / 4) / J
    psi0 = np.zeros(d * d, complex)
    psi0[1 * d + 1] = 1
    psi = expm(-1j * H * t) @ psi0
    for idx in np.nonzero(np.abs(psi) > 1e-12)[0]:
        print("cc N=2 n=1 |%d,%d> =" % (idx // d, idx % d), repr(psi[idx]))

    # Beam splitter |1,1> at theta = pi/4 (Hong-Ou-Mandel) by expm.
    d = 4
    a = ladder(d)
    G = np.kron(a.conj().T, a) + np.kron(a, a.conj().T)
    U = expm(1j * math.pi / 4 * G)
    psi0 = np.zeros(d * d, complex)
    psi0[1 * d + 1] = 1
    out = U @ psi0
    for idx in np.nonzero(np.abs(out) > 1e-12)[0]:
        print("bs |1,1> -> |%d,%d> =" % (idx // d, idx % d), repr(out[idx]))

    # JC matrix element and ground-state stationarity.
    d, g = 10, 0.1
    a = ladder(d)
    sz = np.diag([1.0, -1.0]).astype(complex)
    sp = np.array([[0, 1], [0, 0]], complex)
    sm = sp.T.copy()
    H = 0.5 * np.kron(sz, np.eye(d)) + np.kron(np.eye(2), a.conj().T @ a) + g * (np.kron(sm, a.conj().T) + np.kron(sp, a))
    print("<e,0|H|g,1> =", repr(H[0, d + 1]))

    # Spectrum of a + a^dag at d = 40.
    x = ladder(40) + ladder(40).conj().T
    ev = np.linalg.eigvalsh(x)
    print("max |lambda_k + lambda_{n-1-k}| =", repr(np.max(np.abs(ev + ev[::-1]))))

    # exp of nilpotent.
    print("expm([[0,1],[0,0]]) =", expm(np.array([[0, 1], [0, 0]], float)).tolist())

    # Collapse plateau: time average of |W| over [20, 40] from the series.
    ts = np.arange(0, 40.0001, 0.1)
    n = np.arange(50)
    wts = np.array([math.exp(-9) * 9.0**k / math.factorial(k) for k in n])
    W = np.array([np.sum(wts * np.cos(2 * 0.1 * t * np.sqrt(n + 1))) for t in ts])
    mask = (ts >= 20 - 1e-9)
    print("mean |W| on [20,40] =", repr(np.mean(np.abs(W[mask]))))


if __name__ == "__main__":
    main()
