# Compiled gate kernels for the dense state-vector backend.
#
# Index convention: qubit q of an n-qubit vector toggles with stride
# 2^(n-1-q) (qubit 0 is the most significant bit).

import numpy as np

cimport numpy as cnp

cnp.import_array()


def apply_single_qubit(cnp.complex128_t[::1] state, cnp.complex128_t[:, ::1] matrix,
                       Py_ssize_t q, Py_ssize_t n):
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t half = 1 << (n - 1 - q)
    out_arr = np.empty(size, dtype=np.complex128)
    cdef cnp.complex128_t[::1] out = out_arr
    cdef cnp.complex128_t m00 = matrix[0, 0], m01 = matrix[0, 1]
    cdef cnp.complex128_t m10 = matrix[1, 0], m11 = matrix[1, 1]
    cdef cnp.complex128_t a0, a1
    cdef Py_ssize_t base, off, i0, i1
    for base in range(0, size, 2 * half):
        for off in range(half):
            i0 = base + off
            i1 = i0 + half
            a0 = state[i0]
            a1 = state[i1]
            out[i0] = m00 * a0 + m01 * a1
            out[i1] = m10 * a0 + m11 * a1
    return out_arr


def apply_two_qubit(cnp.complex128_t[::1] state, cnp.complex128_t[:, ::1] matrix,
                    Py_ssize_t q0, Py_ssize_t q1, Py_ssize_t n):
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t s0 = 1 << (n - 1 - q0)  # stride of the matrix's high bit
    cdef Py_ssize_t s1 = 1 << (n - 1 - q1)
    cdef Py_ssize_t sbig = s0 if s0 > s1 else s1
    cdef Py_ssize_t ssmall = s1 if s0 > s1 else s0
    # Flat loop over the size/4 base indices: expand t by inserting a zero
    # bit at the small stride position, then at the big stride position.
    cdef Py_ssize_t not_msmall = ~(ssmall - 1)
    cdef Py_ssize_t not_mbig = ~(sbig - 1)
    out_arr = np.empty(size, dtype=np.complex128)
    cdef cnp.complex128_t[::1] out = out_arr
    cdef cnp.complex128_t m00 = matrix[0, 0], m01 = matrix[0, 1], m02 = matrix[0, 2], m03 = matrix[0, 3]
    cdef cnp.complex128_t m10 = matrix[1, 0], m11 = matrix[1, 1], m12 = matrix[1, 2], m13 = matrix[1, 3]
    cdef cnp.complex128_t m20 = matrix[2, 0], m21 = matrix[2, 1], m22 = matrix[2, 2], m23 = matrix[2, 3]
    cdef cnp.complex128_t m30 = matrix[3, 0], m31 = matrix[3, 1], m32 = matrix[3, 2], m33 = matrix[3, 3]
    cdef cnp.complex128_t a00, a01, a10, a11
    cdef Py_ssize_t t, i00, i01, i10, i11
    for t in range(size >> 2):
        i00 = t + (t & not_msmall)
        i00 = i00 + (i00 & not_mbig)
        i01 = i00 + s1
        i10 = i00 + s0
        i11 = i10 + s1
        a00 = state[i00]
        a01 = state[i01]
        a10 = state[i10]
        a11 = state[i11]
        out[i00] = m00 * a00 + m01 * a01 + m02 * a10 + m03 * a11
        out[i01] = m10 * a00 + m11 * a01 + m12 * a10 + m13 * a11
        out[i10] = m20 * a00 + m21 * a01 + m22 * a10 + m23 * a11
        out[i11] = m30 * a00 + m31 * a01 + m32 * a10 + m33 * a11
    return out_arr
