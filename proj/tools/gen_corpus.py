#!/usr/bin/env python3
"""Regenerates corpus/ deterministically. Run from the repository root."""
import os
import random


def pow_term(var, exp):
    if exp == 0:
        return None
    if exp == 1:
        return var
    return "(* " + " ".join([var] * exp) + ")"


def monomial(coeff, exps, variables):
    factors = [pow_term(v, e) for v, e in zip(variables, exps)]
    factors = [f for f in factors if f is not None]
    neg = coeff < 0
    if abs(coeff) != 1 or not factors:
        factors.insert(0, str(abs(coeff)))
    body = mul(factors)
    return "(- " + body + ")" if neg else body


def mul(factors):
    if len(factors) == 1:
        return factors[0]
    return "(* " + " ".join(factors) + ")"


def poly(terms, variables):
    parts = [monomial(c, e, variables) for c, e in terms]
    if len(parts) == 1:
        return parts[0]
    return "(+ " + " ".join(parts) + ")"


def script(variables, constraints, extra=""):
    out = ["(set-logic QF_NRA)"]
    for v in variables:
        out.append(f"(declare-fun {v} () Real)")
    for c in constraints:
        out.append(f"(assert {c})")
    if extra:
        out.append(extra)
    out.append("(check-sat)")
    return "\n".join(out) + "\n"


def write(path, text):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as fh:
        fh.write(text)


def classic_examples():
    xy = ["x", "y"]
    f = poly([(1, (0, 1)), (2, (1, 3)), (-3, (2, 2)), (-1, (3, 0)), (-4, (4, 4))], xy)
    write("corpus/classic/example1.smt2", script(xy, [f"(> {f} 0)"]))

    xyz = ["x", "y", "z"]
    f1 = poly([(2, (0, 0, 0)), (-1, (1, 2, 1)), (1, (2, 1, 3))], xyz)
    f2 = poly([(3, (0, 0, 0)), (-1, (1, 2, 4)), (-1, (2, 0, 1)), (-1, (4, 3, 3))], xyz)
    f3 = poly([(4, (0, 0, 0)), (-1, (0, 0, 1)), (-1, (0, 1, 0)), (-1, (1, 0, 0)), (4, (0, 0, 0))], xyz)
    write("corpus/classic/example2.smt2",
          script(xyz, [f"(> {f1} 0)", f"(> {f2} 0)", f"(> {f3} 0)"]))

    g1 = poly([(-12, (0, 0, 0)), (2, (12, 25, 49)), (-31, (13, 22, 110)),
               (-11, (1000, 500, 89))], xyz)
    g2 = poly([(-23, (0, 0, 0)), (5, (1, 22, 110)), (-21, (15, 20, 1000)),
               (2, (100, 2, 49))], xyz)
    write("corpus/classic/example3.smt2", script(xyz, [f"(> {g1} 0)", f"(> {g2} 0)"]))


def mini_corpus():
    """20 files: 12 sat, 3 unsat, 5 unknown (counts are asserted in tests)."""
    rng = random.Random(20240517)
    idx = 0

    def emit(text):
        nonlocal idx
        write(f"corpus/mini/p{idx:02d}.smt2", text)
        idx += 1

    # 10 random single-constraint sat instances. The positive frame point is
    # either coordinate-wise above every negative one (direction (1,...,1)
    # works) or the origin with nonzero negatives (direction (-1,...,-1)).
    for k in range(10):
        d = rng.randint(1, 3)
        variables = ["x", "y", "z"][:d]
        if k % 2 == 0:
            pos = (rng.randint(1, 9), tuple(rng.randint(5, 7) for _ in range(d)))
        else:
            pos = (rng.randint(1, 9), tuple(0 for _ in range(d)))
        terms = [pos]
        seen = {pos[1]}
        for _ in range(rng.randint(1, 3)):
            e = tuple(rng.randint(0, 4) for _ in range(d))
            if e in seen or (k % 2 == 1 and all(x == 0 for x in e)):
                continue
            seen.add(e)
            terms.append((rng.choice([-9, -5, -2, -1]), e))
        emit(script(variables, [f"(> {poly(terms, variables)} 0)"]))

    # 2 trivially sat
    emit(script(["x"], ["(> 3 1)"]))
    emit(script([], ["(> (+ 1 1) 0)"]))

    # 3 trivially unsat (constant falsity is the only unsat the tool emits)
    emit(script(["x"], ["(> 0 1)"]))
    emit(script(["x", "y"], ["(> x 0)", "(> (- 2 5) 0)"]))
    emit(script(["x"], ["(> (- 1 1) 0)"]))

    # 3 unknown: negative-definite shapes with no positive frame point
    emit(script(["x", "y"], ["(> (- (- (- 1) (* x x)) (* y y)) 0)"]))
    emit(script(["x"], ["(> (- (* x x)) 0)"]))
    emit(script(["x", "y"], ["(> (+ x 1) 0)", "(> (- (- 2) (* x x) (* y y)) 0)"]))

    # 2 unknown: out-of-fragment input
    emit(script(["x"], ["(>= x 0)"]))
    emit(script(["x", "y"], ["(= (+ x y) 1)"]))


if __name__ == "__main__":
    classic_examples()
    mini_corpus()
    print("corpus written")
