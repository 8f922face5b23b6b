#!/usr/bin/env python3
"""Regenerates fixture200.txt: 200 distinct links over 10 vertices, t in [0, 40].

Two overlapping groups meet repeatedly in different periods on top of sparse
background contacts, so that cliques of several sizes exist at gamma = 2.
"""
import random

rng = random.Random(20240611)
links = set()


def add(u, v, t):
    if u != v:
        links.add((min(u, v), max(u, v), t))


groups = [
    ([1, 2, 3, 4, 5], range(4, 19), 0.45),
    ([4, 5, 6, 7, 8, 9], range(17, 34), 0.35),
    ([2, 8, 10], range(30, 41), 0.5),
]
for members, times, p in groups:
    for t in times:
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if rng.random() < p:
                    add(u, v, t)
        if len(links) >= 170:
            break

while len(links) < 200:
    add(rng.randint(1, 10), rng.randint(1, 10), rng.randint(0, 40))

ordered = sorted(links, key=lambda l: (l[2], l[0], l[1]))
assert len(ordered) == 200
with open("fixture200.txt", "w") as f:
    f.write("# synthetic link stream: u v t\n")
    for u, v, t in ordered:
        f.write(f"{u} {v} {t}\n")
