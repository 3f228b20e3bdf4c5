"""Pure-Python backend for the degree-4 identity scan.

Works on denominator-cleared integer structure constants, so the inner loop
is integer-only and exact with no overflow concerns (Python ints).  The
compiled backend in ``_scan_cy`` implements the same contract.
"""

from __future__ import annotations


def scan(rows, dim, parity, slots, plain):
    """Return all slot quadruples (i,j,k,l) violating the degree-4 identity.

    rows    -- list of length dim*dim; rows[i*dim+j] is the integer-scaled
               product x_i·x_j as a list of (index, value) pairs
    parity  -- 0/1 per basis index
    slots   -- four index sequences, one per argument position
    plain   -- all identity signs +1 (ungraded case) instead of the graded ones

    The identity compared, with (x,y,z,t) = (x_i,x_j,x_k,x_l):

        ((xy)z)t + s1·((xt)z)y + s2·((yt)z)x
          = (xy)(zt) + s3·(xt)(yz) + s4·(xz)(yt)

    where the graded signs are s1 = (-1)^{|t|(|z|+|y|)+|z||y|},
    s2 = (-1)^{|x|(|y|+|z|+|t|)+|t||z|}, s3 = (-1)^{|t||z|+|t||y|},
    s4 = (-1)^{|y||z|}.
    """
    acc = [0] * dim
    seen = [False] * dim
    touched = []
    bad = []

    def term_left(i, j, k, l, sgn):
        # sgn * ((x_i x_j) x_k) x_l
        for s, v1 in rows[i * dim + j]:
            row2 = rows[s * dim + k]
            for r, v2 in row2:
                w = sgn * v1 * v2
                for t, v3 in rows[r * dim + l]:
                    if not seen[t]:
                        seen[t] = True
                        touched.append(t)
                    acc[t] += w * v3

    def term_right(i, j, k, l, sgn):
        # sgn * (x_i x_j)(x_k x_l)
        row_ij = rows[i * dim + j]
        row_kl = rows[k * dim + l]
        for s, v1 in row_ij:
            base = s * dim
            for r, v2 in row_kl:
                w = sgn * v1 * v2
                for t, v3 in rows[base + r]:
                    if not seen[t]:
                        seen[t] = True
                        touched.append(t)
                    acc[t] += w * v3

    for i in slots[0]:
        px = parity[i]
        for j in slots[1]:
            py = parity[j]
            for k in slots[2]:
                pz = parity[k]
                pyz = py * pz
                for l in slots[3]:
                    if plain:
                        s1 = s2 = s3 = s4 = 1
                    else:
                        pt = parity[l]
                        s1 = -1 if (pt * (pz + py) + pyz) & 1 else 1
                        s2 = -1 if (px * (py + pz + pt) + pt * pz) & 1 else 1
                        s3 = -1 if (pt * pz + pt * py) & 1 else 1
                        s4 = -1 if pyz & 1 else 1
                    term_left(i, j, k, l, 1)
                    term_left(i, l, k, j, s1)
                    term_left(j, l, k, i, s2)
                    term_right(i, j, k, l, -1)
                    term_right(i, l, j, k, -s3)
                    term_right(i, k, j, l, -s4)
                    ok = True
                    for t in touched:
                        if acc[t] != 0:
                            ok = False
                        acc[t] = 0
                        seen[t] = False
                    touched.clear()
                    if not ok:
                        bad.append((i, j, k, l))
    return bad
