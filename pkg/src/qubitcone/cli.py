"""Command-line interface.

One command per invocation; all structured input and output is the JSON
documented in serialize.py. Exit codes: 0 success, 1 validation failure,
2 malformed input, 3 numeric-domain error.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import serialize
from .conemap import phi
from .correspond import (
    LorentzDecomposition,
    apply_element,
    completeness_deviation,
    element_to_lorentz,
    lorentz_to_element,
    validate,
)
from .errors import DomainError, InvalidMeasurement, MalformedInput
from .lorentz import rotation4, velocity
from .qmat import herm2
from .sim import boosted_probabilities, observer_boost, report_invariants, scenario1_sample

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MALFORMED = 2
EXIT_DOMAIN = 3


def _parse_vec3(text: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise MalformedInput(f"expected X,Y,Z, got {text!r}")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise MalformedInput(f"expected X,Y,Z, got {text!r}") from exc


def _load_measurement(path: str):
    return serialize.measurement_from_json(serialize.load_file(path))


def _load_state(path: str) -> np.ndarray:
    return herm2(serialize.mat2_from_json(serialize.load_file(path)))


def _load_element(path: str) -> np.ndarray:
    return serialize.mat2_from_json(serialize.load_file(path))


def _emit(obj) -> None:
    sys.stdout.write(serialize.dumps(obj))


def cmd_validate(args) -> int:
    meas = _load_measurement(args.measurement)
    ok = validate(meas, tol=args.tol)
    _emit(
        {
            "valid": ok,
            "max_deviation": completeness_deviation(meas),
            "tol": args.tol,
            "n_elements": len(meas.elements),
        }
    )
    return EXIT_OK if ok else EXIT_INVALID


def cmd_to_lorentz(args) -> int:
    geom = element_to_lorentz(_load_element(args.element))
    _emit(serialize.effect_geometry_to_json(geom))
    return EXIT_OK


def cmd_to_element(args) -> int:
    axis = _parse_vec3(args.rotation_axis)
    vel = velocity(_parse_vec3(args.velocity))
    decomp = LorentzDecomposition(
        rotation=rotation4(axis, args.rotation_angle), velocity=vel, scale=1.0
    )
    elem = lorentz_to_element(decomp, args.lam)
    _emit(serialize.mat2_to_json(elem))
    return EXIT_OK


def cmd_apply(args) -> int:
    meas = _load_measurement(args.measurement)
    rho = _load_state(args.state)
    outcomes = []
    for i, m in enumerate(meas.elements):
        p, post = apply_element(m, rho)
        outcomes.append(
            {
                "index": i,
                "p": p,
                "post_state": serialize.mat2_to_json(post),
                "post_vector": serialize.fourvector_to_json(phi(post)),
            }
        )
    _emit({"outcomes": outcomes})
    return EXIT_OK


def cmd_simulate(args) -> int:
    meas = _load_measurement(args.measurement)
    rho = _load_state(args.state)
    outcomes = scenario1_sample(meas, rho, seed=args.seed, n=args.n)
    _emit(
        {
            "seed": args.seed,
            "n": args.n,
            "outcomes": [
                {
                    "index": o.index,
                    "probability": o.probability,
                    "tally": o.tally,
                    "post_vector": serialize.fourvector_to_json(o.post_vector),
                    "applied_transform": serialize.mat4_to_json(o.applied_transform),
                }
                for o in outcomes
            ],
        }
    )
    return EXIT_OK


def cmd_boost_observer(args) -> int:
    meas = _load_measurement(args.measurement)
    rho = _load_state(args.state)
    obs = observer_boost(_parse_vec3(args.velocity))
    p_bob = boosted_probabilities(meas, rho, obs)
    _emit(
        {
            "velocity": serialize.velocity_to_json(obs.velocity),
            "p_bob": p_bob,
            "sum_p_bob": float(sum(p_bob)),
        }
    )
    return EXIT_OK


def cmd_invariants(args) -> int:
    meas = _load_measurement(args.measurement)
    rho = _load_state(args.state)
    _emit(report_invariants(meas, rho))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qubitcone",
        description="Convert between qubit measurement elements and "
        "(rescaled) Lorentz transforms, and run the two scenario engines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check measurement completeness")
    p.add_argument("--measurement", required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("to-lorentz", help="measurement element to Lorentz data")
    p.add_argument("--element", required=True)
    p.set_defaults(func=cmd_to_lorentz)

    p = sub.add_parser("to-element", help="Lorentz data to measurement element")
    p.add_argument("--rotation-axis", required=True, metavar="X,Y,Z")
    p.add_argument("--rotation-angle", required=True, type=float, metavar="R")
    p.add_argument("--velocity", required=True, metavar="VX,VY,VZ")
    p.add_argument("--lambda", dest="lam", type=float, default=None, metavar="L")
    p.set_defaults(func=cmd_to_element)

    p = sub.add_parser("apply", help="apply every element to a state")
    p.add_argument("--measurement", required=True)
    p.add_argument("--state", required=True)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("simulate", help="sample measurement outcomes")
    p.add_argument("--measurement", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("boost-observer", help="probabilities in a boosted frame")
    p.add_argument("--measurement", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--velocity", required=True, metavar="VX,VY,VZ")
    p.set_defaults(func=cmd_boost_observer)

    p = sub.add_parser("invariants", help="per-element invariant report")
    p.add_argument("--measurement", required=True)
    p.add_argument("--state", required=True)
    p.set_defaults(func=cmd_invariants)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except InvalidMeasurement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
