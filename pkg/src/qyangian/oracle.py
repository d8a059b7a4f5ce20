"""Numeric oracle: the defining representation composed with evaluation."""

from .rings import MatrixRing
from .superalgebra import ONE
from .tensor import FracUV, SuperTensor, build_operator, index_set
from .yangian import ev_generator_matrix


def _ev_T_tensor(n, slot, var):
    """T^{slot}(u_var) with the Yangian factor realized as a third tensor slot."""
    fr = FracUV()
    idx = index_set(n)
    terms = {}
    xpow = (1, 0) if var == 0 else (0, 1)
    for i in idx:
        for j in idx:
            mats = {}
            if i == j:
                for k in idx:
                    mats[(k, k)] = fr.one()
            for key, c in ev_generator_matrix(n, i, j).items():
                val = fr.poly({xpow: c})
                mats[key] = fr.add(mats[key], val) if key in mats else val
            for unit, coeff in mats.items():
                if fr.is_zero(coeff):
                    continue
                for k in idx:
                    key = [None, None, unit]
                    key[slot - 1] = (i, j)
                    key[2 - slot] = (k, k)
                    terms[tuple(key)] = coeff
    return SuperTensor(idx, 3, fr, terms)


def numeric_rtt_check(n):
    """R T^1 T^2 = T^2 T^1 R with T the evaluation image in the defining representation."""
    fr = FracUV()
    R = build_operator("R", n, (1, 2), 3)
    T1 = _ev_T_tensor(n, 1, 0)
    T2 = _ev_T_tensor(n, 2, 1)
    diff = R * T1 * T2 - T2 * T1 * R
    return diff.is_zero()
