import time

from votegames.control import ControlSpec
from votegames.core import Election, Voter
from votegames.formulas import parse_sexpr, qbf_eval
from votegames.oracle import solve_oracle
from votegames.reductions import (
    NONPARTITION_TARGETS,
    ManipulationProblem,
    embed_manipulation,
    has_partition,
    pad_zero_manipulators,
    partition_to_borda_ccav_mf,
    qbf2_to_ccpv,
    qbf2_to_nonpartition,
    qbf3_to_ccpv_tp_mf_revoting,
    solve_manipulation,
)
from votegames.scenarios import ProblemInstance, Scenario

TWO = [
    "(and x1 x2)",
    "(or x1 x2)",
    "(and x1 (not x2))",
    "(or (and x1 x2) (and (not x1) (not x2)))",
    "(and (or x1 x2) (or (not x1) (not x2)))",
    "(not (and x1 x2))",
    "(and (or x1 x3) (or x2 x4))",
    "(or (and x1 x2) (and x3 x4))",
]

bad = 0
t0 = time.time()
for sexpr in TWO:
    f = parse_sexpr(sexpr)
    for mode, shape in (("CF", "EA"), ("MF", "AE")):
        want = qbf_eval(f, shape)
        for ctype in NONPARTITION_TARGETS:
            got = solve_oracle(qbf2_to_nonpartition(f, ctype, mode)).answer
            if got != want:
                bad += 1
                print(f"MISMATCH nonpartition {sexpr} {ctype} {mode}: got {got} want {want}")
        for tie in ("TE", "TP"):
            got = solve_oracle(qbf2_to_ccpv(f, tie, mode)).answer
            if got != want:
                bad += 1
                print(f"MISMATCH ccpv {sexpr} {tie} {mode}: got {got} want {want}")
print(f"two-block sweep done in {time.time() - t0:.1f}s")

THREE = [
    "(or x1 (and x2 (not x3)))",
    "(and (or x1 x2) x3)",
    "(or (and x1 x3) (and x2 (not x3)))",
    "(not (or x1 (or x2 x3)))",
]
for sexpr in THREE:
    f = parse_sexpr(sexpr)
    want = qbf_eval(f, "AEA")
    t1 = time.time()
    got = solve_oracle(qbf3_to_ccpv_tp_mf_revoting(f)).answer
    dt = time.time() - t1
    mark = "ok" if got == want else "MISMATCH"
    if got != want:
        bad += 1
    print(f"three-block {sexpr}: got {got} want {want} [{mark}] {dt:.1f}s")

for weights in [(1, 1), (1, 3), (2,), (1, 1, 2), (1, 2, 3), (3, 5)]:
    want = not has_partition(weights)
    got = solve_oracle(partition_to_borda_ccav_mf(weights)).answer
    if got != want:
        bad += 1
        print(f"MISMATCH partition {weights}: got {got} want {want}")
print("partition sweep done")

pure = ProblemInstance(
    Election(
        ("a", "b", "p"),
        (
            Voter(ballot=("a", "b", "p"), weight=1),
            Voter(ballot=("a", "b", "p"), weight=1),
            Voter(ballot=("p", "a", "b"), weight=1),
        ),
        "plurality",
    ),
    ControlSpec("CCDV", "p", limit=1),
    Scenario("constructive", "M+"),
)
for mode in ("M+", "CF", "MF"):
    padded = pad_zero_manipulators(pure, mode)
    got = solve_oracle(padded).answer
    if not got:
        bad += 1
        print(f"MISMATCH pad {mode}: expected True")
print("pad sweep done")

base = Election(
    ("a", "b", "p"),
    (
        Voter(ballot=("a", "b", "p"), weight=2),
        Voter(ballot=None, weight=1, manipulator=True),
        Voter(ballot=None, weight=1, manipulator=True),
    ),
    "plurality",
)
cucm = ManipulationProblem(base, "p", "constructive")
ducm = ManipulationProblem(base, "p", "destructive")
checks = [
    (cucm, "CCAC", "M+"),
    (cucm, "CCAV", "M+"),
    (cucm, "DCAC", "CF"),
    (cucm, "DCDV", "MF"),
    (ducm, "DCDC", "M+"),
    (ducm, "CCDV", "MF"),
    (ducm, "CCAV", "CF"),
]
for problem, ttype, tmode in checks:
    want = solve_manipulation(problem)
    inst, flipped = embed_manipulation(problem, ttype, tmode)
    got = solve_oracle(inst).answer
    if flipped:
        got = not got
    if got != want:
        bad += 1
        print(f"MISMATCH embed {problem.goal} -> {ttype}/{tmode}: got {got} want {want}")
print("embed sweep done")

print("FAILURES:", bad)
