#!/usr/bin/env python3
"""Writes the trial manifests under tests/data. Deterministic; rerun to regenerate."""
import argparse
import random
import subprocess
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "data"
TJISR = None  # path to the built CLI, used to drop layouts the generator cannot embed


def embeddable(layout, wiring, extra, seed):
    cmd = [TJISR, "gen", "--kind", "gadget", "--layout", layout, "--wiring", wiring, "--extra", str(extra),
           "--seed", str(seed), "-o", "/dev/null"]
    return subprocess.run(cmd, capture_output=True).returncode == 0


def planar_random(rng, prefix, count, mode, extra=""):
    lines = []
    for i in range(count):
        n = rng.randint(10, 24)
        k = rng.choice([2, 3, 4] if n >= 14 else [2, 3])
        keep = rng.choice([0.2, 0.35, 0.5, 0.7, 1.0])
        seed = rng.randrange(1, 2**31)
        lines.append(f"{prefix}{i:03d} gen=planar mode={mode} n={n} k={k} keep={keep} seed={seed}{extra}")
    return lines


# Source-only key layouts; with freeze=1 every pendant sees two source
# vertices, so the source set is frozen unless noise lands on the target side.
FROZEN_LAYOUTS = ["S0-S1:8", "S0-S1:6,S1-S2:5", "S0-S1:4,S1-S2:4,S2-S3:4", "S0-S1:12", "S0-S1:5,S0-S2:5,S1-S2:3",
                  "S0-S1:3,S1-S2:3,S2-S3:3,S0-S3:2"]


def frozen_gadgets(rng, prefix, count, flags):
    lines = []
    for i in range(count):
        layout = FROZEN_LAYOUTS[i % len(FROZEN_LAYOUTS)]
        w = rng.choice(["independent", "path"])
        noise = rng.choice([0, 0, 1, 2])
        freeze = rng.choice([1, 1, 0.5])
        seed = rng.randrange(1, 2**31)
        lines.append(f"{prefix}{i:03d} gen=gadget {flags} layout={layout} wiring={w} noise={noise} "
                     f"freeze={freeze} seed={seed}")
    return lines


def general_manifest():
    rng = random.Random(20240611)
    lines = ["# general mode, r=3 declared; n <= 24 unless in the 5b block"]
    lines += planar_random(rng, "rp", 210, "general", " declare=k3r r=3")
    # Construction 5a: one class of 19 or 20 independent members, both keys on one side.
    for i in range(40):
        size = rng.choice([19, 20])
        keys = rng.choice(["S0-S1", "T0-T1"])
        noise = 1 if size == 19 and i % 2 else 0
        freeze = rng.choice([0, 0.5, 1])
        seed = rng.randrange(1, 2**31)
        lines.append(f"ga{i:03d} gen=gadget mode=general declare=k3r r=3 layout={keys}:{size} noise={noise} "
                     f"freeze={freeze} seed={seed}")
    # Small gadgets of every wiring; mostly untouched by step (1).
    wirings = ["independent", "path", "cycle", "shared"]
    for i in range(40):
        w = wirings[i % 4]
        sizes = ",".join(str(rng.randint(2, 8)) for _ in range(rng.choice([1, 2])))
        keys = rng.choice(["ss", "st", "tt"])
        pad = 1 if keys == "st" and "," not in sizes else 0
        extra = rng.choice([0, 1, 2])
        seed = rng.randrange(1, 2**31)
        lines.append(
            f"gs{i:03d} gen=gadget mode=general declare=k3r r=3 sizes={sizes} wiring={w} members=path "
            f"keys={keys} pad={pad} extra={extra} seed={seed}")
    lines += frozen_gadgets(rng, "gf", 30, "mode=general declare=k3r r=3")
    lines.append("# 5b block: a big class with fewer than 3r-1 pool hits needs n2 >= 2 and |C2| > 32")
    layouts = ["S0-T0:20,S1-T1:20", "S0-T0:18,S1-T1:24", "S0-S1:20,S0-T0:20", "S0-S1:16,T0-T1:24",
               "S0-T0:22,S1-T1:19", "S0-S1:14,S1-S2:14,S0-S2:14"]
    for i in range(30):
        layout = layouts[i % len(layouts)]
        noise = rng.choice([0, 1, 2])
        freeze = rng.choice([0, 1])
        seed = rng.randrange(1, 2**31)
        lines.append(f"gb{i:03d} gen=gadget mode=general declare=k3r r=3 layout={layout} noise={noise} "
                     f"freeze={freeze} seed={seed}")
    return lines


# Layouts with sum of class sizes >= 28k once pendants balance the sides.
RULE_LAYOUTS = [
    ("S0-S1:30,S1-S2:30,S0-S2:30", ["independent", "path"]),        # Rules 1 and 2
    ("S0-S1:72,S1-S2:6,S0-S2:6", ["independent", "path"]),          # Rule 3
    ("S0-S1:70,S1-S2:5,S0-S2:6", ["independent", "path"]),          # Rule 3, sizes 5 and 6
    ("S0-S1:58", ["independent", "path", "cycle"]),                 # Rule 2
    ("T0-T1:58", ["independent", "path", "cycle"]),                 # Rule 2 on the target role
    ("S0-S1:40,S1-S2:40,S0-S2:8", ["independent", "path"]),         # Rule 1 on the small class
    ("S0-S1:28,S1-S2:28,S0-S2:28,S0-T0:6", ["independent"]),
    ("T0-T1:30,T1-T2:30,T0-T2:30", ["independent", "path"]),
]

CLEAN_LAYOUTS = [
    "S0-T0:60", "S0-T0:30,S1-T1:30", "S0-S1:30,T0-T1:30", "S0-S1:6,S0-S2:6,S0-T0:74",
    "S0-S1:12,S1-S2:12,S0-S2:8,S0-T0:30,S2-T1:30", "S0-S1:5,S0-S2:5,S1-S2:5,T0-T1:70",
    "S0-T0:45,S0-S1:14", "S0-T0:20,S0-T1:20,S1-T0:20",
]


def planar_manifest():
    rng = random.Random(7041977)
    lines = ["# planar mode, strict"]
    lines += planar_random(rng, "pp", 130, "planar", " strict=1")
    lines += frozen_gadgets(rng, "pf", 30, "mode=planar strict=1")
    for i in range(96):
        layout, wirings = RULE_LAYOUTS[i % len(RULE_LAYOUTS)]
        w = wirings[(i // len(RULE_LAYOUTS)) % len(wirings)]
        noise = rng.choice([0, 0, 1, 3])
        freeze = rng.choice([0, 1])
        seed = rng.randrange(1, 2**31)
        lines.append(f"pr{i:03d} gen=gadget mode=planar strict=1 layout={layout} wiring={w} noise={noise} "
                     f"freeze={freeze} seed={seed}")
    for i in range(64):
        layout = CLEAN_LAYOUTS[i % len(CLEAN_LAYOUTS)]
        w = rng.choice(["independent", "path"])
        extra = rng.choice([0, 2, 5])
        seed = rng.randrange(1, 2**31)
        lines.append(f"pc{i:03d} gen=gadget mode=planar strict=1 layout={layout} wiring={w} extra={extra} seed={seed}")
    return lines


def clean_manifest():
    # Sum of 2-class sizes >= 21k; used by the clean-set existence check.
    rng = random.Random(99120)
    lines = ["# clean-set existence"]
    i = 0
    while len(lines) < 101:
        k_src = rng.randint(1, 3)
        classes = []
        for c in range(rng.randint(1, 4)):
            a = rng.choice([f"S{j}" for j in range(k_src)] + ["T0", "T1"])
            b = rng.choice([f"S{j}" for j in range(k_src)] + ["T0", "T1", "T2"])
            if a == b or any({a, b} == {x, y} for x, y, _ in classes):
                continue
            classes.append((a, b, rng.randint(4, 40)))
        if not classes:
            continue
        keys = {x for cl in classes for x in cl[:2]}
        k = max(sum(1 for x in keys if x[0] == "S"), sum(1 for x in keys if x[0] == "T"))
        total = sum(s for _, _, s in classes)
        if total < 21 * k:
            continue
        layout = ",".join(f"{a}-{b}:{s}" for a, b, s in classes)
        w = rng.choice(["independent", "path"])
        extra = rng.choice([0, 3])
        seed = rng.randrange(1, 2**31)
        if not embeddable(layout, w, extra, seed):
            continue
        lines.append(f"cs{i:03d} gen=gadget mode=planar layout={layout} wiring={w} extra={extra} seed={seed}")
        i += 1
    return lines


def main():
    global TJISR
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tjisr", default=str(OUT.parent.parent / "build" / "tjisr"))
    TJISR = ap.parse_args().tjisr
    OUT.mkdir(parents=True, exist_ok=True)
    for name, lines in [("general.manifest", general_manifest()), ("planar.manifest", planar_manifest()),
                        ("clean.manifest", clean_manifest())]:
        (OUT / name).write_text("\n".join(lines) + "\n")
        print(name, sum(1 for l in lines if not l.startswith("#")))


if __name__ == "__main__":
    main()
