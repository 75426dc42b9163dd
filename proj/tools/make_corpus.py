#!/usr/bin/env python3
"""Writes the small-surface corpus used by the oracle comparison.

Every surface starts from a one-face word (crosscaps "a a", handles
"a b a' b'") and is refined by random diagonals and edge subdivisions, which
keep the surface and change the map.  The seed is fixed so the corpus is
reproducible.
"""
import os
import random
import sys


def base(handles, caps):
    face, e = [], 1
    for _ in range(caps):
        face += [(e, 1), (e, 1)]
        e += 1
    for _ in range(handles):
        face += [(e, 1), (e + 1, 1), (e, -1), (e + 1, -1)]
        e += 2
    if not face:
        return [[(1, 1), (2, 1)], [(2, -1), (1, -1)]]
    return [face]


def num_edges(faces):
    return max(abs(e) for f in faces for e, _ in f)


def diagonal(faces, rng):
    f = rng.randrange(len(faces))
    n = len(faces[f])
    if n < 2:
        return
    i, j = sorted(rng.sample(range(n), 2))
    m = num_edges(faces) + 1
    w = faces[f]
    faces[f] = w[i:j] + [(m, 1)]
    faces.append(w[j:] + w[:i] + [(m, -1)])


def subdivide(faces, rng):
    m = num_edges(faces)
    e = rng.randrange(1, m + 1)
    for k, f in enumerate(faces):
        g = []
        for edge, sign in f:
            if edge != e:
                g.append((edge, sign))
            elif sign > 0:
                g += [(e, 1), (m + 1, 1)]
            else:
                g += [(m + 1, -1), (e, -1)]
        faces[k] = g


def srf(faces, weights, comment):
    lines = ["srf 1", "# " + comment, "edges %d" % len(weights)]
    lines += ["weight %d %d" % (i + 1, w) for i, w in enumerate(weights)]
    for f in faces:
        lines.append("face " + " ".join(("+" if s > 0 else "-") + str(e) for e, s in f))
    return "\n".join(lines) + "\n"


def main(out_dir):
    rng = random.Random(20240611)
    # (handles, crosscaps); Euler genus 2h + c <= 4
    shapes = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 1), (1, 2), (0, 0), (1, 0), (2, 0)]
    os.makedirs(out_dir, exist_ok=True)
    count = 0
    for idx in range(72):
        h, c = shapes[idx % len(shapes)]
        faces = base(h, c)
        target = rng.randint(max(num_edges(faces), 3), 20)
        while num_edges(faces) < target:
            (diagonal if rng.random() < 0.5 else subdivide)(faces, rng)
        m = num_edges(faces)
        if m > 20:
            continue
        unit = idx % 4 == 0
        weights = [1 if unit else rng.randint(1, 3) for _ in range(m)]
        name = "c%02d_h%d_c%d_e%d.srf" % (idx, h, c, m)
        with open(os.path.join(out_dir, name), "w") as fh:
            fh.write(srf(faces, weights, "handles %d, crosscaps %d" % (h, c)))
        count += 1
    print("wrote %d surfaces" % count)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/corpus")
