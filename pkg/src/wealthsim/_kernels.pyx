# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled day-loop kernel.

Mirrors ``_kernels_py.advance`` exactly: same counter-based draws, same
update order. The reset total uses Kahan compensation so the conservation
error stays at a few ulp even for large populations.
"""

from libc.stdint cimport uint64_t

from .errors import NormalizationDegenerate

DEF DEGENERACY_RELATIVE = 1e-300


cdef inline uint64_t _mix(uint64_t z) noexcept nogil:
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9u
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EBu
    return z ^ (z >> 31)


def advance(double[::1] excess, key, int run, long t0, long n_days,
            double beta, double epsilon, double w1, bint skewed, bint coupled,
            double target_total):
    """Advance the excess-wealth vector in place over days [t0, t0 + n_days)."""
    cdef uint64_t k = <uint64_t>(key & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t golden = <uint64_t>0x9E3779B97F4A7C15u
    cdef uint64_t run_base = <uint64_t>run << 50
    cdef Py_ssize_t n = excess.shape[0]
    cdef Py_ssize_t j
    cdef long t
    cdef uint64_t base, z
    cdef double u, lam, total, comp, y, tnew, g
    cdef double degen = target_total * DEGENERACY_RELATIVE
    cdef double inv_2_53 = 1.0 / 9007199254740992.0
    cdef long bad_t = -1
    cdef double bad_total = 0.0

    with nogil:
        for t in range(t0, t0 + n_days):
            base = run_base | (<uint64_t>t << 24)
            for j in range(n):
                z = _mix(k + (base + <uint64_t>j + 1) * golden)
                u = <double>(z >> 11) * inv_2_53
                lam = 1.0 + beta * (1.0 - 2.0 * u)
                if skewed:
                    lam = lam * (1.0 + epsilon * (excess[j] / (w1 + excess[j])))
                excess[j] = excess[j] * lam
            if coupled:
                total = 0.0
                comp = 0.0
                for j in range(n):
                    y = excess[j] - comp
                    tnew = total + y
                    comp = (tnew - total) - y
                    total = tnew
                if total < degen:
                    bad_t = t
                    bad_total = total
                    break
                g = target_total / total
                for j in range(n):
                    excess[j] = excess[j] * g

    if bad_t >= 0:
        raise NormalizationDegenerate(bad_total, degen, t=bad_t)
